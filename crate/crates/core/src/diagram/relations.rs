use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::diagram::WiringDiagram;
use crate::permutation::{unrank, Permutation};
use crate::rational::{int, Rational};
use crate::{Error, Exec, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationFailure {
    pub relation: String,
    pub instance: String,
}

/// Result of instantiating the identities over a window.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationReport {
    pub window: u32,
    pub odd: bool,
    /// Instances checked per relation.
    pub checked: BTreeMap<String, u64>,
    pub failures: Vec<RelationFailure>,
}

impl RelationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn total(&self) -> u64 {
        self.checked.values().sum()
    }
}

struct Suite {
    window: u32,
    odd: bool,
    checked: BTreeMap<String, u64>,
    failures: Vec<RelationFailure>,
}

impl Suite {
    fn record(&mut self, relation: &str, ok: bool, instance: impl FnOnce() -> String) {
        *self.checked.entry(relation.to_string()).or_default() += 1;
        if !ok {
            self.failures.push(RelationFailure {
                relation: relation.to_string(),
                instance: instance(),
            });
        }
    }

    fn a(&self, i: i64) -> WiringDiagram {
        WiringDiagram::a(i, self.window, self.odd).expect("index in window")
    }

    fn p(&self, n: u32) -> WiringDiagram {
        WiringDiagram::p(n, self.window, self.odd).expect("n < window")
    }

    fn perm(&self, g: &Permutation) -> WiringDiagram {
        WiringDiagram::perm(g, self.window, self.odd).expect("support in window")
    }

    fn c(&self, k: u64) -> WiringDiagram {
        WiringDiagram::c(int(k as i64), self.window, self.odd).expect("nonnegative")
    }
}

fn mul(ds: &[&WiringDiagram]) -> WiringDiagram {
    let mut acc = ds[0].clone();
    for d in &ds[1..] {
        acc = acc.compose(d).expect("same window");
    }
    acc
}

/// Nonempty subsets of `items`, each as a sorted list.
fn nonempty_subsets(items: &[i64]) -> Vec<Vec<i64>> {
    (1u32..(1 << items.len()))
        .map(|mask| {
            items
                .iter()
                .enumerate()
                .filter(|(b, _)| mask & (1 << b) != 0)
                .map(|(_, &x)| x)
                .collect()
        })
        .collect()
}

/// Largest window accepted by [`verify_relations`].
pub const RELATIONS_MAX_WINDOW: u32 = 4;

/// Instantiates every identity of the semigroup presentation over all index
/// tuples legal in the window:
///
/// * `A_i A_j = A_j A_i`;
/// * `g A_i g⁻¹ = A_{g(i)}` for every permutation `g` of the window;
/// * `A_i P_n = P_n A_i` for `|i| ≤ n`;
/// * `A_i P_n = A_{−i} P_n` for `|i| > n`;
/// * `P_n A_i P_n = P_n (i,k) P_n` for `|i| ≤ n < |k|`;
/// * `P_n A_{i_1}^{k_1}⋯A_{i_r}^{k_r} P_n = P_n ∏ C_{k_j+1}` for distinct
///   positive `i_j > n`, exponents `1..=3`;
/// * `P_0 σ P_0 = P_0 ∏_{k∈[σ]} C_k` for `σ` permuting `1..=N`;
///
/// plus `P_n² = P_n`, `C_1 = 1` and `*` fixing `A`, `C`, `P` and inverting
/// permutations.
pub fn verify_relations(window: u32, odd: bool) -> Result<RelationReport> {
    verify_relations_with(window, odd, Exec::default())
}

pub fn verify_relations_with(window: u32, odd: bool, exec: Exec) -> Result<RelationReport> {
    if window > RELATIONS_MAX_WINDOW {
        return Err(Error::Budget(format!(
            "window {window} exceeds {RELATIONS_MAX_WINDOW}"
        )));
    }
    let id = WiringDiagram::identity(window, odd)?;
    let mut s = Suite {
        window,
        odd,
        checked: BTreeMap::new(),
        failures: Vec::new(),
    };
    let indices = id.indices();
    let nonzero: Vec<i64> = indices.iter().copied().filter(|&i| i != 0).collect();
    let positives: Vec<i64> = (1..=window as i64).collect();

    // A_i A_j = A_j A_i
    for &i in &indices {
        for &j in &indices {
            let (ai, aj) = (s.a(i), s.a(j));
            let ok = mul(&[&ai, &aj]) == mul(&[&aj, &ai]);
            s.record("markers_commute", ok, || format!("i={i}, j={j}"));
        }
    }

    // g A_i g⁻¹ = A_{g(i)} for every permutation of the window's points, in parallel
    let width = indices.len();
    let total: usize = (1..=width).product();
    let a_all: Vec<WiringDiagram> = indices.iter().map(|&i| s.a(i)).collect();
    let fails = exec.fold_range(
        0..total,
        || (0u64, Vec::<RelationFailure>::new()),
        |(mut n, mut fails), idx| {
            let mut g = Vec::with_capacity(width);
            unrank(idx, width, &mut g);
            let mut g_inv = vec![0; width];
            for (p, &q) in g.iter().enumerate() {
                g_inv[q] = p;
            }
            let dg = WiringDiagram::perm_from_positions(window, odd, &g);
            let dg_inv = WiringDiagram::perm_from_positions(window, odd, &g_inv);
            for (p, ai) in a_all.iter().enumerate() {
                n += 1;
                let lhs = mul(&[&dg, ai, &dg_inv]);
                if lhs != a_all[g[p]] {
                    fails.push(RelationFailure {
                        relation: "conjugation".into(),
                        instance: format!(
                            "g=#{idx}, i={}",
                            id.index_of_position(p)
                        ),
                    });
                }
            }
            (n, fails)
        },
        |(n1, mut f1), (n2, f2)| {
            f1.extend(f2);
            (n1 + n2, f1)
        },
    );
    *s.checked.entry("conjugation".into()).or_default() += fails.0;
    let mut f12 = fails.1;
    f12.sort_by(|a, b| a.instance.cmp(&b.instance));
    s.failures.extend(f12);

    for n in 0..window {
        let pn = s.p(n);
        for &i in &indices {
            let ai = s.a(i);
            if i.unsigned_abs() <= n as u64 {
                // A_i P_n = P_n A_i
                let ok = mul(&[&ai, &pn]) == mul(&[&pn, &ai]);
                s.record("marker_commutes_with_projection", ok, || format!("i={i}, n={n}"));
                // P_n A_i P_n = P_n (i,k) P_n
                for &k in &nonzero {
                    if k.unsigned_abs() <= n as u64 {
                        continue;
                    }
                    let t = s.perm(&Permutation::transposition(i, k));
                    let ok = mul(&[&pn, &ai, &pn]) == mul(&[&pn, &t, &pn]);
                    s.record("projection_sandwich", ok, || format!("i={i}, k={k}, n={n}"));
                }
            } else {
                // A_i P_n = A_{−i} P_n
                let ok = mul(&[&ai, &pn]) == mul(&[&s.a(-i), &pn]);
                s.record("marker_reflects_past_projection", ok, || format!("i={i}, n={n}"));
            }
        }

        // P_n ∏ A^k P_n = P_n ∏ C_{k+1}
        let above: Vec<i64> = positives.iter().copied().filter(|&i| i > n as i64).collect();
        for subset in nonempty_subsets(&above) {
            let r = subset.len() as u32;
            for exps in 0..3u32.pow(r) {
                let ks: Vec<u32> = (0..r).map(|j| exps / 3u32.pow(j) % 3 + 1).collect();
                let mut word = vec![pn.clone()];
                for (&i, &k) in subset.iter().zip(&ks) {
                    word.extend(std::iter::repeat_n(s.a(i), k as usize));
                }
                word.push(pn.clone());
                let refs: Vec<&WiringDiagram> = word.iter().collect();
                let lhs = mul(&refs);
                let cs: Vec<WiringDiagram> = ks.iter().map(|&k| s.c(k as u64 + 1)).collect();
                let mut rhs_word = vec![&pn];
                rhs_word.extend(cs.iter());
                let rhs = mul(&rhs_word);
                s.record("marker_powers", lhs == rhs, || format!("n={n}, i={subset:?}, k={ks:?}"));
            }
        }

        // P_n idempotent, star-fixed
        s.record("projection_idempotent", mul(&[&pn, &pn]) == pn, || format!("n={n}"));
        s.record("star", pn.star() == pn, || format!("P({n})"));
    }

    // P_0 σ P_0 = P_0 ∏ C_k
    let p0 = s.p(0);
    let n = window as usize;
    let count: usize = (1..=n).product();
    let mut buf = Vec::with_capacity(n);
    for idx in 0..count {
        unrank(idx, n, &mut buf);
        let images: Vec<i64> = buf.iter().map(|&q| q as i64 + 1).collect();
        let sigma = Permutation::from_images(&positives, &images)?;
        let lhs = mul(&[&p0, &s.perm(&sigma), &p0]);
        let loops: Vec<Rational> = sigma
            .nontrivial_cycle_type()
            .parts()
            .iter()
            .map(|&k| int(k as i64))
            .collect();
        let rhs = p0.clone().with_loops(loops);
        s.record("cycle_loops", lhs == rhs, || format!("σ={sigma}"));
    }

    // C_1 = 1 and the involution
    s.record("unit_loop", s.c(1) == id, String::new);
    for &i in &indices {
        let ai = s.a(i);
        s.record("star", ai.star() == ai, || format!("A({i})"));
    }
    for k in 0..=4 {
        let ck = s.c(k);
        s.record("star", ck.star() == ck, || format!("C({k})"));
    }
    for &i in &indices {
        for &j in &indices {
            for &k in &indices {
                if i < j && k != i && k != j {
                    let g = Permutation::from_cycles(&[&[i, j, k]])?;
                    let ok = s.perm(&g).star() == s.perm(&g.inverse());
                    s.record("star", ok, || format!("g={g}"));
                }
            }
        }
    }

    Ok(RelationReport {
        window,
        odd,
        checked: s.checked,
        failures: s.failures,
    })
}
