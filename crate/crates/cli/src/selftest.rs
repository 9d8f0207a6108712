use serde_json::{json, Value};

use sinf_core::classify::mixture_moment_check;
use sinf_core::cosets::{census, coset_poly, coset_size, positivity_sum, census_by_length};
use sinf_core::diagram::verify_relations;
use sinf_core::random;
use sinf_core::rational::{factorial, int, ratio, Rational};
use sinf_core::symchar::{frobenius_character, mn_character};
use sinf_core::thoma::{alt_falsifier, coherence_check, h_from_params, ThomaParams};
use sinf_core::{Partition, Result};

struct Suite {
    name: &'static str,
    checked: u64,
    failures: Vec<String>,
}

impl Suite {
    fn new(name: &'static str) -> Self {
        Suite {
            name,
            checked: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn to_json(&self) -> Value {
        json!({
            "name": self.name,
            "passed": self.failures.is_empty(),
            "checked": self.checked,
            "failures": self.failures,
        })
    }
}

fn relations(quick: bool) -> Result<Suite> {
    let mut s = Suite::new("diagram_relations");
    let windows: &[(u32, bool)] = if quick {
        &[(3, false), (2, true)]
    } else {
        &[(4, false), (3, true)]
    };
    for &(w, odd) in windows {
        let r = verify_relations(w, odd)?;
        s.checked += r.total();
        s.failures
            .extend(r.failures.iter().map(|f| format!("{} ({})", f.relation, f.instance)));
    }
    Ok(s)
}

fn associativity(seed: u64, quick: bool) -> Suite {
    let mut s = Suite::new("diagram_associativity");
    let mut rng = random::rng(seed);
    let trials = if quick { 100 } else { 1000 };
    for t in 0..trials {
        let w = 1 + t % 4;
        let odd = t % 3 == 0;
        let [a, b, c] = [0; 3].map(|_| random::diagram(&mut rng, w, odd, 4));
        let lhs = a.compose(&b).and_then(|ab| ab.compose(&c));
        let rhs = b.compose(&c).and_then(|bc| a.compose(&bc));
        s.check(lhs.is_ok() && lhs == rhs, || format!("trial {t}"));
    }
    s
}

fn cosets(quick: bool) -> Result<Suite> {
    let mut s = Suite::new("coset_census");
    let top = if quick { 3 } else { 4 };
    for n in 1..=top {
        let tally = census(n, false)?;
        for lambda in Partition::all(n) {
            let count = tally.get(&lambda).copied().unwrap_or(0);
            s.check(coset_size(&lambda, n)? == count.into(), || format!("n={n}, λ={lambda}"));
        }
        let poly = coset_poly(n);
        for (l, c) in census_by_length(&tally) {
            s.check(poly.get(&l) == Some(&c.into()), || format!("n={n}, ℓ={l}"));
        }
        let total: u64 = tally.values().sum();
        s.check(factorial(2 * n) == total.into(), || format!("n={n}, total"));
    }
    for x in [ratio(-1, 3), ratio(-1, 2), ratio(1, 4), ratio(2, 3), int(-1)] {
        for n in 1..=3 {
            let p = positivity_sum(&x, n)?;
            s.check(p.brute.as_ref() == Some(&p.closed), || format!("positivity x={x}, n={n}"));
        }
    }
    Ok(s)
}

fn hseries() -> Suite {
    let mut s = Suite::new("hseries_closed_forms");
    let order = 24;
    let cases: [(&str, ThomaParams, Box<dyn Fn(u32) -> Rational>); 3] = [
        ("trivial", ThomaParams::trivial(), Box::new(|_| int(1))),
        ("gamma", ThomaParams::regular(), Box::new(|k| Rational::new(1.into(), factorial(k)))),
        ("sign", ThomaParams::sign(), Box::new(|k| int((k <= 1) as i64))),
    ];
    for (name, p, expect) in cases {
        let h = h_from_params(&p, order);
        for k in 0..=order {
            s.check(h.coeff(k) == expect(k as u32), || format!("{name}, k={k}"));
        }
    }
    s
}

fn characters() -> Result<Suite> {
    let mut s = Suite::new("mn_vs_frobenius");
    for n in 1..=5 {
        for lambda in Partition::all(n) {
            for rho in Partition::all(n) {
                let ok = mn_character(&lambda, &rho)? == frobenius_character(&lambda, &rho)?;
                s.check(ok, || format!("λ={lambda}, ρ={rho}"));
            }
        }
    }
    Ok(s)
}

fn coherence(seed: u64) -> Result<Suite> {
    let mut s = Suite::new("pieri_coherence");
    let mut rng = random::rng(seed.wrapping_add(1));
    for t in 0..20 {
        let m = random::mseq(&mut rng, 12);
        let r = coherence_check(&m, 6)?;
        s.check(r.passed(), || format!("sequence {t}"));
    }
    Ok(s)
}

fn mixtures(seed: u64) -> Result<Suite> {
    let mut s = Suite::new("mixture_identities");
    let mut rng = random::rng(seed.wrapping_add(2));
    for t in 0..10 {
        let spec = random::mixture_spec(&mut rng, 2 + t % 2);
        let r = mixture_moment_check(&spec, 24)?;
        s.check(r.passed(), || format!("spec {t}"));
    }
    Ok(s)
}

fn falsifier(seed: u64) -> Result<Suite> {
    let mut s = Suite::new("falsifier_closed_vs_brute");
    let v = alt_falsifier(&ratio(1, 5), &ratio(3, 2), 3)?;
    s.check(v.closed == ratio(-1, 2000) && v.agree(), || "x=1/5, ν=3/2, m=3".into());
    let mut rng = random::rng(seed.wrapping_add(3));
    for _ in 0..20 {
        let (x, nu, m) = random::falsifier_instance(&mut rng, 5);
        let v = alt_falsifier(&x, &nu, m)?;
        s.check(v.agree(), || format!("x={x}, ν={nu}, m={m}"));
    }
    Ok(s)
}

pub fn run(seed: u64, quick: bool) -> Result<(Value, bool)> {
    let suites = [
        relations(quick)?,
        associativity(seed, quick),
        cosets(quick)?,
        hseries(),
        characters()?,
        coherence(seed)?,
        mixtures(seed)?,
        falsifier(seed)?,
    ];
    let passed = suites.iter().all(|s| s.failures.is_empty());
    Ok((
        json!({
            "seed": seed,
            "quick": quick,
            "passed": passed,
            "suites": suites.iter().map(Suite::to_json).collect::<Vec<_>>(),
        }),
        passed,
    ))
}
