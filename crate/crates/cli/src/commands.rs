use std::fs;
use std::path::{Path, PathBuf};

use serde::de::DeserializeOwned;
use serde_json::{json, Value};

use sinf_core::classify::{
    boundary_value, classify, dim_root, ergodic_converge, mixture, mixture_moment_check,
    ReprLabel, MixtureSpec,
};
use sinf_core::cosets::{census, census_by_length, coset_poly, coset_size, coset_type, positivity_sum};
use sinf_core::diagram::{verify_relations, WiringDiagram};
use sinf_core::distribution::YoungDistribution;
use sinf_core::partition::Direction;
use sinf_core::rational::{self, format as fmt, Rational};
use sinf_core::symchar::{eta_character, frobenius_character, mn_character, CharacterTable};
use sinf_core::thoma::{
    alt_falsifier, coherence_check, edrei_peel, h_from_params, is_totally_positive, m_lambda,
    sign_transform, PeelOptions, ThomaMeasure, ThomaParams,
};
use sinf_core::{Error, Partition, Permutation, Result};

use crate::args::*;

/// Environment variable naming a directory for cached character tables.
pub const CACHE_ENV: &str = "SINF_CACHE_DIR";

/// Largest accepted series order, character table size and enumeration n.
const MAX_ORDER: usize = 400;
const MAX_TABLE_N: u32 = 14;
const MAX_LIST_N: u32 = 30;
const MAX_TP_WINDOW: usize = 24;
const MAX_TP_ORDER: usize = 6;
const MAX_POLY_N: u32 = 200;
const MAX_ERGODIC_N: u32 = 400;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    /// A mathematical check failed or a label was rejected.
    CheckFailed,
}

pub struct Outcome {
    pub value: Value,
    pub status: Status,
}

impl Outcome {
    fn ok(value: Value) -> Self {
        Outcome { value, status: Status::Ok }
    }

    fn check(value: Value, passed: bool) -> Self {
        Outcome {
            value,
            status: if passed { Status::Ok } else { Status::CheckFailed },
        }
    }
}

fn budget(what: &str, got: impl std::fmt::Display, max: impl std::fmt::Display) -> Error {
    Error::Budget(format!("{what} = {got} exceeds the limit {max}"))
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("domain types serialize")
}

fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::OutOfRange(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| Error::OutOfRange(format!("{}: {e}", path.display())))
}

/// An m-sequence file: either a bare array or `{"coeffs": [...]}`.
fn read_coeffs(path: &Path) -> Result<Vec<Rational>> {
    let v: Value = read_json(path)?;
    let arr = match &v {
        Value::Array(_) => &v,
        Value::Object(o) => o
            .get("coeffs")
            .ok_or_else(|| Error::OutOfRange("expected a \"coeffs\" array".into()))?,
        _ => return Err(Error::OutOfRange("expected an array of rationals".into())),
    };
    let items = arr
        .as_array()
        .ok_or_else(|| Error::OutOfRange("\"coeffs\" must be an array".into()))?;
    items
        .iter()
        .map(|x| match x {
            Value::String(s) => rational::parse(s),
            Value::Number(n) => rational::parse(&n.to_string()),
            _ => Err(Error::ParseRational(x.to_string())),
        })
        .collect()
}

fn rat(s: &str) -> Result<Rational> {
    rational::parse(s)
}

fn rats(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(|r| Value::String(fmt(r))).collect())
}

impl ParamArgs {
    pub fn params(&self) -> Result<ThomaParams> {
        let alpha = rational::parse_list(&self.alpha)?;
        let beta = rational::parse_list(&self.beta)?;
        match &self.gamma {
            Some(g) => ThomaParams::with_gamma(alpha, beta, rat(g)?),
            None => ThomaParams::new(alpha, beta),
        }
    }
}

/// Cycles written `1,2,3;4,5` (also accepts `(1 2 3)(4 5)`).
pub fn parse_cycles(s: &str) -> Result<Permutation> {
    let t = s.trim();
    let groups: Vec<String> = if t.starts_with('(') {
        t.split(')')
            .map(|g| g.trim().trim_start_matches('(').replace(' ', ","))
            .filter(|g| !g.is_empty())
            .collect()
    } else {
        t.split(';').map(str::to_string).filter(|g| !g.trim().is_empty()).collect()
    };
    let cycles = groups
        .iter()
        .map(|g| {
            g.split(',')
                .filter(|x| !x.trim().is_empty())
                .map(|x| {
                    x.trim()
                        .parse::<i64>()
                        .map_err(|_| Error::InvalidPermutation(s.to_string()))
                })
                .collect::<Result<Vec<i64>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let refs: Vec<&[i64]> = cycles.iter().map(Vec::as_slice).collect();
    Permutation::from_cycles(&refs)
}

pub fn partition(cmd: &PartitionCmd) -> Result<Outcome> {
    Ok(Outcome::ok(match cmd {
        PartitionCmd::Info { shape } => {
            let p = Partition::parse(shape)?;
            let (z, len) = p.z_and_length();
            json!({
                "shape": p,
                "size": p.size(),
                "length": len,
                "conjugate": p.conjugate(),
                "z": z.to_string(),
                "dim_syt": p.dim_syt().to_string(),
                "covers_up": p.covers(Direction::Up),
                "covers_down": p.covers(Direction::Down),
            })
        }
        PartitionCmd::List { n } => {
            if *n > MAX_LIST_N {
                return Err(budget("n", n, MAX_LIST_N));
            }
            json!({"n": n, "partitions": Partition::all(*n)})
        }
        PartitionCmd::CycleType { cycles, n } => {
            let g = parse_cycles(cycles)?;
            json!({
                "full": g.cycle_type_sn(*n)?,
                "nontrivial": g.nontrivial_cycle_type(),
            })
        }
        PartitionCmd::Distribution { dist, scale, union, rho } => {
            let d: YoungDistribution = read_json(dist)?;
            if *rho {
                json!({"rho": d.rho()})
            } else if let Some(p) = scale {
                to_value(&d.scaled(&rat(p)?)?)
            } else if let Some(other) = union {
                let e: YoungDistribution = read_json(other)?;
                to_value(&d.union(&e))
            } else {
                return Err(Error::OutOfRange(
                    "one of --scale, --union or --rho is required".into(),
                ));
            }
        }
    }))
}

fn cached_table(n: u32) -> Result<CharacterTable> {
    let dir = std::env::var_os(CACHE_ENV).map(PathBuf::from);
    let path = dir.as_ref().map(|d| d.join(format!("char_table_{n}.json")));
    if let Some(p) = &path {
        if let Ok(text) = fs::read_to_string(p) {
            if let Ok(t) = serde_json::from_str::<CharacterTable>(&text) {
                if t.n == n {
                    return Ok(t);
                }
            }
        }
    }
    let table = CharacterTable::new(n)?;
    if let (Some(d), Some(p)) = (&dir, &path) {
        // a failed cache write only costs recomputation next time
        let _ = fs::create_dir_all(d)
            .and_then(|_| fs::write(p, serde_json::to_string(&table).expect("serializable")));
    }
    Ok(table)
}

pub fn character(cmd: &CharCmd) -> Result<Outcome> {
    Ok(Outcome::ok(match cmd {
        CharCmd::Table { n } => {
            if *n > MAX_TABLE_N {
                return Err(budget("n", n, MAX_TABLE_N));
            }
            to_value(&cached_table(*n)?)
        }
        CharCmd::Eval { shape, class } => {
            let lambda = Partition::parse(shape)?;
            let rho = Partition::parse(class)?;
            let mn = mn_character(&lambda, &rho)?;
            let det = frobenius_character(&lambda, &rho)?;
            if mn != det {
                return Ok(Outcome::check(
                    json!({"mn": mn.to_string(), "frobenius": det.to_string()}),
                    false,
                ));
            }
            json!({"value": mn.to_string()})
        }
        CharCmd::Eta { shape, class } => {
            let mu = Partition::parse(shape)?;
            let rho = Partition::parse(class)?;
            json!({"value": eta_character(&mu, &rho)?.to_string()})
        }
    }))
}

pub fn thoma(cmd: &ThomaCmd) -> Result<Outcome> {
    Ok(match cmd {
        ThomaCmd::Eval { params, cycles } => {
            let p = params.params()?;
            let c = Partition::parse(cycles)?;
            Outcome::ok(json!({"value": fmt(&p.char_value(&c)?)}))
        }
        ThomaCmd::Measure { params } => Outcome::ok(to_value(&params.params()?.to_measure())),
        ThomaCmd::Validity { measure } => {
            let mu: ThomaMeasure = read_json(measure)?;
            let v = mu.validity();
            let offending: Vec<Value> = v
                .offending
                .iter()
                .map(|(x, nu)| json!({"x": fmt(x), "nu": fmt(nu)}))
                .collect();
            Outcome::check(json!({"valid": v.valid, "offending": offending}), v.valid)
        }
        ThomaCmd::Moments { measure, n } => {
            if *n > MAX_ORDER {
                return Err(budget("n", n, MAX_ORDER));
            }
            let mu: ThomaMeasure = read_json(measure)?;
            Outcome::ok(json!({"moments": rats(&mu.moments(*n))}))
        }
        ThomaCmd::Falsifier { x, nu, m } => {
            let v = alt_falsifier(&rat(x)?, &rat(nu)?, *m)?;
            let agree = v.agree();
            let mut out = to_value(&v);
            out["agree"] = json!(agree);
            Outcome::check(out, agree)
        }
    })
}

pub fn hseries(cmd: &HseriesCmd) -> Result<Outcome> {
    Ok(match cmd {
        HseriesCmd::Expand { params, order, sign } => {
            if *order > MAX_ORDER {
                return Err(budget("order", order, MAX_ORDER));
            }
            let mut h = h_from_params(&params.params()?, *order);
            if *sign {
                h = sign_transform(&h)?;
            }
            Outcome::ok(json!({"coeffs": rats(h.coeffs())}))
        }
        HseriesCmd::Peel { coeffs, tol, no_exact } => {
            let m = read_coeffs(coeffs)?;
            let out = edrei_peel(
                &m,
                PeelOptions {
                    tol: *tol,
                    exact: !no_exact,
                },
            )?;
            Outcome::ok(to_value(&out))
        }
        HseriesCmd::Coherence { coeffs, nmax } => {
            if *nmax > 12 {
                return Err(budget("nmax", nmax, 12));
            }
            let m = read_coeffs(coeffs)?;
            let r = coherence_check(&m, *nmax)?;
            let failures: Vec<Value> = r
                .failures
                .iter()
                .map(|(l, a, b)| json!({"shape": l, "m": fmt(a), "cover_sum": fmt(b)}))
                .collect();
            Outcome::check(
                json!({"passed": r.passed(), "checked": r.checked, "failures": failures}),
                r.passed(),
            )
        }
        HseriesCmd::Minor { coeffs, shape } => {
            let m = read_coeffs(coeffs)?;
            let lambda = Partition::parse(shape)?;
            Outcome::ok(json!({"value": fmt(&m_lambda(&m, &lambda)?)}))
        }
    })
}

pub fn tp(cmd: &TpCmd) -> Result<Outcome> {
    let TpCmd::Check { coeffs, window, order } = cmd;
    if *window > MAX_TP_WINDOW {
        return Err(budget("window", window, MAX_TP_WINDOW));
    }
    if *order > MAX_TP_ORDER {
        return Err(budget("order", order, MAX_TP_ORDER));
    }
    let a = read_coeffs(coeffs)?;
    let r = is_totally_positive(&a, *window, *order)?;
    Ok(Outcome::check(to_value(&r), r.totally_positive))
}

pub fn diagram(cmd: &DiagramCmd) -> Result<Outcome> {
    Ok(match cmd {
        DiagramCmd::Mul { lhs, rhs } => {
            let a: WiringDiagram = read_json(lhs)?;
            let b: WiringDiagram = read_json(rhs)?;
            Outcome::ok(to_value(&a.compose(&b)?))
        }
        DiagramCmd::Gen { kind, arg, window, odd } => {
            let d = match kind.as_str() {
                "perm" => WiringDiagram::perm(&parse_cycles(arg)?, *window, *odd)?,
                "A" | "a" => {
                    let i = arg
                        .trim()
                        .parse::<i64>()
                        .map_err(|_| Error::OutOfRange(format!("bad index {arg:?}")))?;
                    WiringDiagram::a(i, *window, *odd)?
                }
                "C" | "c" => WiringDiagram::c(rat(arg)?, *window, *odd)?,
                "P" | "p" => {
                    let n = arg
                        .trim()
                        .parse::<u32>()
                        .map_err(|_| Error::OutOfRange(format!("bad n {arg:?}")))?;
                    WiringDiagram::p(n, *window, *odd)?
                }
                _ => {
                    return Err(Error::OutOfRange(format!(
                        "unknown generator {kind:?}; use perm, A, C or P"
                    )))
                }
            };
            Outcome::ok(to_value(&d))
        }
        DiagramCmd::Star { diagram } => {
            let d: WiringDiagram = read_json(diagram)?;
            Outcome::ok(to_value(&d.star()))
        }
        DiagramCmd::Verify { window, odd } => {
            let r = verify_relations(*window, *odd)?;
            let mut v = to_value(&r);
            v["passed"] = json!(r.passed());
            v["total"] = json!(r.total());
            Outcome::check(v, r.passed())
        }
    })
}

pub fn cosets(cmd: &CosetsCmd) -> Result<Outcome> {
    Ok(match cmd {
        CosetsCmd::Census { n, long_run } => {
            let tally = census(*n, *long_run)?;
            let mut all_match = true;
            let rows: Vec<Value> = tally
                .iter()
                .map(|(lambda, &count)| {
                    let size = coset_size(lambda, *n).expect("λ ⊢ n");
                    all_match &= size == count.into();
                    json!({"lambda": lambda, "count": count.to_string(), "size": size.to_string()})
                })
                .collect();
            let by_length: serde_json::Map<String, Value> = census_by_length(&tally)
                .into_iter()
                .map(|(l, c)| (l.to_string(), Value::String(c.to_string())))
                .collect();
            let total: u64 = tally.values().sum();
            Outcome::check(
                json!({
                    "n": n,
                    "total": total.to_string(),
                    "cosets": rows,
                    "by_length": by_length,
                    "matches_sizes": all_match,
                }),
                all_match,
            )
        }
        CosetsCmd::Poly { n } => {
            if *n > MAX_POLY_N {
                return Err(budget("n", n, MAX_POLY_N));
            }
            let coeffs: serde_json::Map<String, Value> = coset_poly(*n)
                .into_iter()
                .map(|(k, c)| (k.to_string(), Value::String(c.to_string())))
                .collect();
            Outcome::ok(json!({"coeffs": coeffs}))
        }
        CosetsCmd::Positivity { x, n } => {
            if *n > MAX_POLY_N {
                return Err(budget("n", n, MAX_POLY_N));
            }
            let s = positivity_sum(&rat(x)?, *n)?;
            let agree = s.brute.as_ref().is_none_or(|b| b == &s.closed);
            Outcome::check(to_value(&s), agree)
        }
        CosetsCmd::Type { cycles, n } => {
            let t = coset_type(&parse_cycles(cycles)?, *n)?;
            Outcome::ok(to_value(&t))
        }
    })
}

pub fn classify_label(path: &Path) -> Result<Outcome> {
    let label: ReprLabel = read_json(path)?;
    let verdict = classify(&label)?;
    let mut v = to_value(&verdict);
    v["dim_root"] = json!(dim_root(&label)?.to_string());
    Ok(Outcome::check(v, verdict.is_admissible()))
}

pub fn boundary(kind: &str, x: &str, nu: &str, l1: u32, l2: Option<u32>) -> Result<Outcome> {
    let value = boundary_value(kind.parse()?, &rat(x)?, &rat(nu)?, l1, l2)?;
    Ok(Outcome::ok(json!({"value": fmt(&value)})))
}

pub fn mix(spec: &Path, order: usize) -> Result<Outcome> {
    if order > MAX_ORDER {
        return Err(budget("check-order", order, MAX_ORDER));
    }
    let spec: MixtureSpec = read_json(spec)?;
    let out = mixture(&spec)?;
    let check = mixture_moment_check(&spec, order)?;
    let passed = check.passed();
    Ok(Outcome::check(
        json!({
            "label": out.label,
            "irreducible": out.irreducible,
            "valid_measure": out.label.measure.is_thoma_measure(),
            "check": check,
        }),
        passed,
    ))
}

pub fn ergodic(params: &ParamArgs, k: u32, ns: &str) -> Result<Outcome> {
    let ns = ns
        .split(',')
        .map(|s| {
            s.trim()
                .parse::<u32>()
                .map_err(|_| Error::OutOfRange(format!("bad n {s:?}")))
        })
        .collect::<Result<Vec<u32>>>()?;
    if let Some(n) = ns.iter().find(|&&n| n > MAX_ERGODIC_N) {
        return Err(budget("n", n, MAX_ERGODIC_N));
    }
    let p = params.params()?;
    let points = ergodic_converge(&p, k, &ns)?;
    Ok(Outcome::ok(json!({
        "limit": fmt(&p.cycle_moment(k)),
        "points": points,
    })))
}
