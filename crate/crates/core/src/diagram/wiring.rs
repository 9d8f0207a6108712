use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::permutation::Permutation;
use crate::rational::{self, ratio, Rational};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Top,
    Bottom,
}

impl Side {
    fn flip(self) -> Self {
        match self {
            Side::Top => Side::Bottom,
            Side::Bottom => Side::Top,
        }
    }
}

/// A boundary point: `T+1`, `B-2`, `T0`, …
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub side: Side,
    pub index: i64,
}

impl Point {
    pub fn top(index: i64) -> Self {
        Point {
            side: Side::Top,
            index,
        }
    }

    pub fn bottom(index: i64) -> Self {
        Point {
            side: Side::Bottom,
            index,
        }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self.side {
            Side::Top => 'T',
            Side::Bottom => 'B',
        };
        if self.index == 0 {
            write!(f, "{s}0")
        } else {
            write!(f, "{s}{:+}", self.index)
        }
    }
}

impl FromStr for Point {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::MalformedLabel(s.to_string());
        let mut chars = s.chars();
        let side = match chars.next() {
            Some('T') => Side::Top,
            Some('B') => Side::Bottom,
            _ => return Err(bad()),
        };
        let rest = chars.as_str();
        if rest.is_empty() {
            return Err(bad());
        }
        let index = rest.parse::<i64>().map_err(|_| bad())?;
        if index != 0 && !rest.starts_with(['+', '-']) {
            return Err(bad());
        }
        Ok(Point { side, index })
    }
}

/// An element of the finite-window Olshanski semigroup: a perfect matching
/// of the `top`/`bottom` copies of the window's index set, with a length on
/// every pair, plus a multiset of closed loops.
///
/// Loops of length exactly 1 never appear (they are the identity `C₁`).
///
/// Internally boundary points are slots: `0..m` on top and `m..2m` on the
/// bottom, where `m` is the number of indices (`2N`, or `2N+1` with 0).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WiringDiagram {
    window: u32,
    odd: bool,
    partner: Vec<usize>,
    length: Vec<Rational>,
    loops: Vec<Rational>,
}

fn normalize_loops(loops: &mut Vec<Rational>) {
    loops.retain(|l| !l.is_one());
    loops.sort();
}

impl WiringDiagram {
    fn width(window: u32, odd: bool) -> usize {
        2 * window as usize + odd as usize
    }

    fn m(&self) -> usize {
        Self::width(self.window, self.odd)
    }

    /// Position of `index` within a side, or `None` outside the window.
    fn pos(&self, index: i64) -> Option<usize> {
        let n = self.window as i64;
        if index == 0 {
            return self.odd.then_some(n as usize);
        }
        if index.abs() > n {
            return None;
        }
        let shift = if index < 0 { n } else { n - 1 + self.odd as i64 };
        Some((index + shift) as usize)
    }

    fn index_at(&self, pos: usize) -> i64 {
        let n = self.window as i64;
        let p = pos as i64;
        if p < n {
            p - n
        } else if self.odd && p == n {
            0
        } else {
            p - n + 1 - self.odd as i64
        }
    }

    fn slot(&self, pt: Point) -> Option<usize> {
        let p = self.pos(pt.index)?;
        Some(match pt.side {
            Side::Top => p,
            Side::Bottom => p + self.m(),
        })
    }

    fn point(&self, slot: usize) -> Point {
        let m = self.m();
        if slot < m {
            Point::top(self.index_at(slot))
        } else {
            Point::bottom(self.index_at(slot - m))
        }
    }

    fn check_window(window: u32) -> Result<()> {
        if window == 0 {
            return Err(Error::InvalidDiagram("window must be at least 1".into()));
        }
        Ok(())
    }

    /// Every top index joined to the same bottom index by a length-0 segment.
    pub fn identity(window: u32, odd: bool) -> Result<Self> {
        Self::check_window(window)?;
        let m = Self::width(window, odd);
        let partner = (0..2 * m).map(|s| if s < m { s + m } else { s - m }).collect();
        Ok(WiringDiagram {
            window,
            odd,
            partner,
            length: vec![Rational::zero(); 2 * m],
            loops: Vec::new(),
        })
    }

    pub fn window(&self) -> u32 {
        self.window
    }

    pub fn is_odd(&self) -> bool {
        self.odd
    }

    /// The window's index set in increasing order.
    pub fn indices(&self) -> Vec<i64> {
        (0..self.m()).map(|p| self.index_at(p)).collect()
    }

    pub fn contains_index(&self, index: i64) -> bool {
        self.pos(index).is_some()
    }

    /// Partner of a boundary point and the length of their pair.
    pub fn partner_of(&self, pt: Point) -> Option<(Point, &Rational)> {
        let s = self.slot(pt)?;
        Some((self.point(self.partner[s]), &self.length[s]))
    }

    /// Pairs `(a, b, length)` with `a < b`, sorted.
    pub fn pairs(&self) -> Vec<(Point, Point, Rational)> {
        let mut out: Vec<_> = (0..self.partner.len())
            .filter(|&s| s < self.partner[s])
            .map(|s| (self.point(s), self.point(self.partner[s]), self.length[s].clone()))
            .collect();
        out.sort();
        out
    }

    pub fn loops(&self) -> &[Rational] {
        &self.loops
    }

    /// Builds a diagram from explicit pairs, validating that they form a
    /// perfect matching with nonnegative lengths.
    pub fn from_pairs(
        window: u32,
        odd: bool,
        pairs: impl IntoIterator<Item = (Point, Point, Rational)>,
        loops: impl IntoIterator<Item = Rational>,
    ) -> Result<Self> {
        let mut d = Self::identity(window, odd)?;
        let unset = usize::MAX;
        d.partner.iter_mut().for_each(|p| *p = unset);
        for (a, b, len) in pairs {
            let (Some(sa), Some(sb)) = (d.slot(a), d.slot(b)) else {
                return Err(Error::InvalidDiagram(format!(
                    "pair {a}—{b} leaves window {window}"
                )));
            };
            if len.is_negative() {
                return Err(Error::InvalidDiagram(format!("negative length on {a}—{b}")));
            }
            if sa == sb || d.partner[sa] != unset || d.partner[sb] != unset {
                return Err(Error::InvalidDiagram(format!("{a}—{b} reuses a point")));
            }
            d.partner[sa] = sb;
            d.partner[sb] = sa;
            d.length[sa] = len.clone();
            d.length[sb] = len;
        }
        if let Some(s) = d.partner.iter().position(|&p| p == unset) {
            return Err(Error::InvalidDiagram(format!("{} is unmatched", d.point(s))));
        }
        d.loops = loops.into_iter().collect();
        if d.loops.iter().any(Signed::is_negative) {
            return Err(Error::InvalidDiagram("negative loop length".into()));
        }
        normalize_loops(&mut d.loops);
        Ok(d)
    }

    /// `g` as a diagram: top `s` joined to bottom `g⁻¹(s)` with length 0, so
    /// that composition of diagrams matches composition of permutations.
    pub fn perm(g: &Permutation, window: u32, odd: bool) -> Result<Self> {
        let mut d = Self::identity(window, odd)?;
        if let Some(x) = g.support().find(|&x| !d.contains_index(x)) {
            return Err(Error::InvalidDiagram(format!("{x} is outside the window")));
        }
        let m = d.m();
        for top in 0..m {
            let s = d.index_at(top);
            let b = d.pos(g.inverse().apply(s)).expect("support checked") + m;
            d.partner[top] = b;
            d.partner[b] = top;
        }
        Ok(d)
    }

    /// Fast path for [`WiringDiagram::perm`]: `images[p]` is the position
    /// `g` sends position `p` to.
    pub(crate) fn perm_from_positions(window: u32, odd: bool, images: &[usize]) -> Self {
        let mut d = Self::identity(window, odd).expect("window checked by caller");
        let m = d.m();
        for (p, &q) in images.iter().enumerate() {
            // top g(p) meets bottom p
            d.partner[q] = p + m;
            d.partner[p + m] = q;
        }
        d
    }

    pub(crate) fn index_of_position(&self, pos: usize) -> i64 {
        self.index_at(pos)
    }

    /// `A_i`: the identity with the vertical segment at `i` of length 1.
    pub fn a(i: i64, window: u32, odd: bool) -> Result<Self> {
        let mut d = Self::identity(window, odd)?;
        let Some(p) = d.pos(i) else {
            return Err(Error::InvalidDiagram(format!("A({i}) outside window {window}")));
        };
        let m = d.m();
        d.length[p] = Rational::one();
        d.length[p + m] = Rational::one();
        Ok(d)
    }

    /// `C(len)`: the identity with one extra loop.
    pub fn c(len: Rational, window: u32, odd: bool) -> Result<Self> {
        if len.is_negative() {
            return Err(Error::InvalidDiagram("negative loop length".into()));
        }
        let mut d = Self::identity(window, odd)?;
        d.loops.push(len);
        normalize_loops(&mut d.loops);
        Ok(d)
    }

    /// `P_n`: length-0 verticals for `|i| ≤ n` and length-1/2 arcs
    /// `i—(−i)` on each side for `n < |i| ≤ N`. Requires `n < N`.
    pub fn p(n: u32, window: u32, odd: bool) -> Result<Self> {
        if n >= window {
            return Err(Error::InvalidDiagram(format!(
                "P({n}) needs n < window {window}"
            )));
        }
        let mut d = Self::identity(window, odd)?;
        let m = d.m();
        let half = ratio(1, 2);
        for i in (n as i64 + 1)..=(window as i64) {
            let (a, b) = (d.pos(i).unwrap(), d.pos(-i).unwrap());
            for off in [0, m] {
                d.partner[a + off] = b + off;
                d.partner[b + off] = a + off;
                d.length[a + off] = half.clone();
                d.length[b + off] = half.clone();
            }
        }
        Ok(d)
    }

    /// Stacks `self` on top of `other`, gluing `self`'s bottom to
    /// `other`'s top. Strand lengths add; closed strands become loops.
    pub fn compose(&self, other: &WiringDiagram) -> Result<WiringDiagram> {
        if self.window != other.window || self.odd != other.odd {
            return Err(Error::WindowMismatch(self.window, other.window));
        }
        let m = self.m();
        let unset = usize::MAX;
        let mut partner = vec![unset; 2 * m];
        let mut length = vec![Rational::zero(); 2 * m];
        let mut mid_used = vec![false; m];
        let halves = [self, other];

        // (which diagram, slot in it) → (result slot, accumulated length)
        let trace = |mut which: usize, mut slot: usize, mid_used: &mut Vec<bool>| {
            let mut acc = Rational::zero();
            loop {
                let d = halves[which];
                let q = d.partner[slot];
                if !d.length[slot].is_zero() {
                    acc += &d.length[slot];
                }
                if which == 0 && q < m {
                    return (q, acc);
                }
                if which == 1 && q >= m {
                    return (q, acc);
                }
                if which == 0 {
                    mid_used[q - m] = true;
                    which = 1;
                    slot = q - m;
                } else {
                    mid_used[q] = true;
                    which = 0;
                    slot = q + m;
                }
            }
        };

        for start in 0..2 * m {
            if partner[start] != unset {
                continue;
            }
            let (which, slot) = if start < m { (0, start) } else { (1, start) };
            let (end, acc) = trace(which, slot, &mut mid_used);
            partner[start] = end;
            partner[end] = start;
            length[end] = acc.clone();
            length[start] = acc;
        }

        let mut loops: Vec<Rational> = self.loops.iter().chain(&other.loops).cloned().collect();
        for mid in 0..m {
            if mid_used[mid] {
                continue;
            }
            let mut acc = Rational::zero();
            let mut cur = mid;
            loop {
                mid_used[cur] = true;
                let q = self.partner[cur + m] - m;
                acc += &self.length[cur + m];
                mid_used[q] = true;
                acc += &other.length[q];
                cur = other.partner[q];
                if cur == mid {
                    break;
                }
            }
            loops.push(acc);
        }
        normalize_loops(&mut loops);
        Ok(WiringDiagram {
            window: self.window,
            odd: self.odd,
            partner,
            length,
            loops,
        })
    }

    /// Reflection exchanging top and bottom.
    pub fn star(&self) -> WiringDiagram {
        let m = self.m();
        let flip = |s: usize| if s < m { s + m } else { s - m };
        let mut partner = vec![0; 2 * m];
        let mut length = vec![Rational::zero(); 2 * m];
        for s in 0..2 * m {
            partner[flip(s)] = flip(self.partner[s]);
            length[flip(s)] = self.length[s].clone();
        }
        WiringDiagram {
            window: self.window,
            odd: self.odd,
            partner,
            length,
            loops: self.loops.clone(),
        }
    }

    /// Adds loops (dropping any of length 1).
    pub fn with_loops(mut self, extra: impl IntoIterator<Item = Rational>) -> Self {
        self.loops.extend(extra);
        normalize_loops(&mut self.loops);
        self
    }

    /// `Point` mirrored across the horizontal axis.
    pub fn mirror(pt: Point) -> Point {
        Point {
            side: pt.side.flip(),
            index: pt.index,
        }
    }
}

#[derive(Serialize, Deserialize)]
struct WirePair {
    a: String,
    b: String,
    len: String,
}

fn is_false(b: &bool) -> bool {
    !*b
}

#[derive(Serialize, Deserialize)]
struct WireDiagram {
    window: u32,
    #[serde(default, skip_serializing_if = "is_false")]
    odd: bool,
    pairs: Vec<WirePair>,
    #[serde(default, with = "rational::serde_vec")]
    loops: Vec<Rational>,
}

impl Serialize for WiringDiagram {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        WireDiagram {
            window: self.window,
            odd: self.odd,
            pairs: self
                .pairs()
                .into_iter()
                .map(|(a, b, len)| WirePair {
                    a: a.to_string(),
                    b: b.to_string(),
                    len: rational::format(&len),
                })
                .collect(),
            loops: self.loops.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for WiringDiagram {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let w = WireDiagram::deserialize(d)?;
        let pairs = w
            .pairs
            .iter()
            .map(|p| {
                Ok((
                    p.a.parse::<Point>()?,
                    p.b.parse::<Point>()?,
                    rational::parse(&p.len)?,
                ))
            })
            .collect::<Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        WiringDiagram::from_pairs(w.window, w.odd, pairs, w.loops).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn point_labels() {
        assert_eq!("T+1".parse::<Point>().unwrap(), Point::top(1));
        assert_eq!("B-3".parse::<Point>().unwrap(), Point::bottom(-3));
        assert_eq!("T0".parse::<Point>().unwrap(), Point::top(0));
        assert_eq!(Point::bottom(2).to_string(), "B+2");
        for bad in ["X+1", "T", "T1", "B+x", ""] {
            assert!(bad.parse::<Point>().is_err(), "{bad}");
        }
    }

    #[test]
    fn positions_round_trip() {
        for odd in [false, true] {
            let d = WiringDiagram::identity(3, odd).unwrap();
            for (p, i) in d.indices().into_iter().enumerate() {
                assert_eq!(d.pos(i), Some(p));
            }
            assert_eq!(d.indices().len(), 6 + odd as usize);
            assert_eq!(d.pos(0).is_some(), odd);
        }
    }

    #[test]
    fn perm_composition_matches_group() {
        let g = Permutation::from_cycles(&[&[1, 2, -3]]).unwrap();
        let h = Permutation::from_cycles(&[&[2, -1]]).unwrap();
        let dg = WiringDiagram::perm(&g, 3, false).unwrap();
        let dh = WiringDiagram::perm(&h, 3, false).unwrap();
        assert_eq!(dg.compose(&dh).unwrap(), WiringDiagram::perm(&g.compose(&h), 3, false).unwrap());
        let inv = WiringDiagram::perm(&g.inverse(), 3, false).unwrap();
        assert_eq!(dg.compose(&inv).unwrap(), WiringDiagram::identity(3, false).unwrap());
        assert_eq!(dg.star(), inv);
    }

    #[test]
    fn fast_perm_matches() {
        let g = Permutation::from_cycles(&[&[1, -2, 3]]).unwrap();
        let d = WiringDiagram::perm(&g, 3, false).unwrap();
        let images: Vec<usize> = d
            .indices()
            .iter()
            .map(|&i| d.pos(g.apply(i)).unwrap())
            .collect();
        assert_eq!(WiringDiagram::perm_from_positions(3, false, &images), d);
    }

    #[test]
    fn projection_examples() {
        let n = 3;
        let p0 = WiringDiagram::p(0, n, false).unwrap();
        let c = WiringDiagram::perm(&Permutation::from_cycles(&[&[1, 2, 3]]).unwrap(), n, false).unwrap();
        let lhs = p0.compose(&c).unwrap().compose(&p0).unwrap();
        assert_eq!(lhs, p0.clone().with_loops([int(3)]));

        let p1 = WiringDiagram::p(1, n, false).unwrap();
        let a2 = WiringDiagram::a(2, n, false).unwrap();
        let lhs = p1.compose(&a2).unwrap().compose(&a2).unwrap().compose(&p1).unwrap();
        assert_eq!(lhs, p1.clone().with_loops([int(3)]));
        assert_eq!(p1.compose(&p1).unwrap(), p1);
        assert!(WiringDiagram::p(3, 3, false).is_err());
    }

    #[test]
    fn unit_loop_is_identity() {
        let id = WiringDiagram::identity(2, true).unwrap();
        assert_eq!(WiringDiagram::c(int(1), 2, true).unwrap(), id);
        let c2 = WiringDiagram::c(int(2), 2, true).unwrap();
        assert_eq!(c2.loops(), &[int(2)]);
        assert!(WiringDiagram::c(int(-1), 2, true).is_err());
    }

    #[test]
    fn window_mismatch() {
        let a = WiringDiagram::identity(2, false).unwrap();
        let b = WiringDiagram::identity(3, false).unwrap();
        assert_eq!(a.compose(&b), Err(Error::WindowMismatch(2, 3)));
        assert!(a.compose(&WiringDiagram::identity(2, true).unwrap()).is_err());
    }

    #[test]
    fn from_pairs_validation() {
        let ok = WiringDiagram::from_pairs(
            1,
            false,
            [
                (Point::top(1), Point::top(-1), ratio(1, 2)),
                (Point::bottom(1), Point::bottom(-1), ratio(1, 2)),
            ],
            [],
        )
        .unwrap();
        assert_eq!(ok, WiringDiagram::p(0, 1, false).unwrap());
        let missing = WiringDiagram::from_pairs(1, false, [(Point::top(1), Point::top(-1), int(0))], []);
        assert!(missing.is_err());
        let outside = WiringDiagram::from_pairs(1, false, [(Point::top(2), Point::top(-1), int(0))], []);
        assert!(outside.is_err());
    }

    #[test]
    fn json_round_trip() {
        let d = WiringDiagram::p(1, 2, false).unwrap().with_loops([int(3)]);
        let s = serde_json::to_string(&d).unwrap();
        assert!(s.starts_with(r#"{"window":2,"pairs":[{"a":"T-2","b":"T+2","len":"1/2"}"#), "{s}");
        assert!(s.ends_with(r#""loops":["3"]}"#));
        assert_eq!(serde_json::from_str::<WiringDiagram>(&s).unwrap(), d);
    }
}
