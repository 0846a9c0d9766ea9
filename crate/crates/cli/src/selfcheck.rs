//! Bundled acceptance corpus, runnable from a release binary.

use std::fmt::Write as _;
use std::path::Path;
use std::time::Instant;

use jbkit::bch::{bch_oracle, BchTable};
use jbkit::exactnum::{bernoulli, binomial};
use jbkit::jbcomplex::{gauge_cocycle, verify_cocycle, JbComplex, JbConfig, Sela, SelaJson};
use jbkit::schemes::{
    buchberger, hypersurface_tangent_dgla, milnor_dim, parse_poly, parse_vars, MonomialOrder,
};
use jbkit::{RatPoly, Rational};
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::report::{CliError, CmdResult, Output};

pub const SUITES: &[&str] = &["bernoulli", "bch", "jb", "cocycle", "milnor", "tangent"];

const FIXTURE: &str = include_str!("../fixtures/triangle_n3.json");

struct Outcome {
    name: &'static str,
    pass: bool,
    detail: String,
    millis: u128,
}

fn fixture(path: Option<&Path>) -> Result<Sela, String> {
    let text = match path {
        Some(p) => {
            std::fs::read_to_string(p).map_err(|e| format!("cannot read {}: {e}", p.display()))?
        }
        None => FIXTURE.to_string(),
    };
    let j: SelaJson = serde_json::from_str(&text).map_err(|e| e.to_string())?;
    let s = Sela::from_json(&j).map_err(|e| e.to_string())?;
    s.validate().map_err(|e| e.to_string())?;
    Ok(s)
}

/// `Σ_{k≤n} C(n+1,k) B_k = 0` for `n ≥ 1`.
fn suite_bernoulli() -> Result<String, String> {
    let max = 30;
    let b: Vec<Rational> = (0..=max).map(bernoulli).collect();
    if !b[0].is_one() {
        return Err(format!("B_0 = {}", b[0]));
    }
    for n in 1..max {
        let s = (0..=n).fold(Rational::zero(), |acc, k| {
            acc + Rational::from_integer(binomial(n as u64 + 1, k as u64)) * &b[k]
        });
        if !s.is_zero() {
            return Err(format!("recurrence fails at n = {n}"));
        }
    }
    if let Some(n) = (3..=max).step_by(2).find(|&n| !b[n].is_zero()) {
        return Err(format!("B_{n} ≠ 0"));
    }
    Ok(format!(
        "B_0..B_{max} satisfy the recurrence; odd B_n vanish for n ≥ 3"
    ))
}

fn suite_bch() -> Result<String, String> {
    let cap = 6;
    let table = BchTable::new(cap).map_err(|e| e.to_string())?;
    let oracle = bch_oracle(cap);
    let ours = table.bigraded_components();
    let nonzero: Vec<_> = ours
        .iter()
        .filter(|(_, e)| !e.is_zero())
        .map(|(k, _)| *k)
        .collect();
    for (k, e) in ours {
        let expected = oracle.get(k);
        let agree = match expected {
            Some(o) => o == e,
            None => e.is_zero(),
        };
        if !agree {
            return Err(format!("bidegree {k:?} differs from log(exp X exp Y)"));
        }
    }
    if let Some(k) = oracle.keys().find(|k| !ours.contains_key(k)) {
        return Err(format!("bidegree {k:?} missing"));
    }
    Ok(format!(
        "{} nonzero components up to degree {cap} match log(exp X exp Y)",
        nonzero.len()
    ))
}

fn suite_jb(sela: &Result<Sela, String>) -> Result<String, String> {
    let sela = sela.as_ref().map_err(|e| format!("fixture: {e}"))?;
    let jb = JbComplex::assemble(sela, &JbConfig::window(-1, 2)).map_err(|e| e.to_string())?;
    let d2 = jb.verify_d_squared();
    if !d2.is_zero() {
        return Err(format!("d² ≠ 0: {:?}", d2.offending));
    }
    let f = jb.filtration_defects();
    if !f.is_empty() {
        return Err(format!("filtration broken: {}", f[0]));
    }
    let dims: Vec<String> = (-1..=2).map(|j| jb.dim(j).to_string()).collect();
    Ok(format!(
        "d² = 0 on J^-1..J^2 (dims {}); filtration preserved",
        dims.join(", ")
    ))
}

fn suite_cocycle(sela: &Result<Sela, String>, seed: u64) -> Result<String, String> {
    let sela = sela.as_ref().map_err(|e| format!("fixture: {e}"))?;
    let jb = JbComplex::assemble(sela, &JbConfig::window(0, 1)).map_err(|e| e.to_string())?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let trials = 5;
    for i in 0..trials {
        let data = gauge_cocycle(sela, |ring| {
            let mut c = vec![Rational::zero()];
            for _ in 1..ring.order() {
                c.push(Rational::from_integer(rng.gen_range(-3i64..=3).into()));
            }
            ring.from_coeffs(&c)
        });
        let check = verify_cocycle(&jb, &data);
        if !(check.is_cocycle && check.routes_agree && check.multiplicative) {
            return Err(format!("trial {i}: {:?}", check.defects));
        }
    }
    Ok(format!(
        "{trials} random gauge cocycles verified through J (seed {seed})"
    ))
}

fn suite_milnor() -> Result<String, String> {
    let vars = parse_vars("x,y").map_err(|e| e.to_string())?;
    let mut n = 0;
    for a in 2..=5u32 {
        for b in 2..=5u32 {
            let f = parse_poly(&format!("x^{a} + y^{b}"), &vars).map_err(|e| e.to_string())?;
            let d = milnor_dim(&f).map_err(|e| e.to_string())?;
            let expected = ((a - 1) * (b - 1)) as usize;
            if d != expected {
                return Err(format!("x^{a} + y^{b}: got {d}, expected {expected}"));
            }
            n += 1;
        }
    }
    Ok(format!("{n} Brieskorn–Pham curves give (a−1)(b−1)"))
}

fn suite_tangent() -> Result<String, String> {
    let vars = parse_vars("x,y,z").map_err(|e| e.to_string())?;
    let samples = [
        "x^2 + y^3 + z^2",
        "x*y*z + x^3 + y^3 + z^3",
        "x^2*y + y^4 + z^2",
        "x^3 + x*y^3 + z^2",
    ];
    for s in samples {
        let f = parse_poly(s, &vars).map_err(|e| e.to_string())?;
        let t = hypersurface_tangent_dgla(&f).map_err(|e| e.to_string())?;
        if !t.is_complex() {
            return Err(format!("{s}: tangent complex has d² ≠ 0"));
        }
        let mut gens: Vec<RatPoly> = vec![f.clone()];
        gens.extend((0..vars.len()).map(|i| f.derivative(i)));
        let expected = buchberger(&gens, MonomialOrder::GRevLex);
        if !t.h1_ideal(MonomialOrder::GRevLex).same_ideal(&expected) {
            return Err(format!("{s}: H¹ presentation is not (f, ∂f)"));
        }
    }
    Ok(format!(
        "{} hypersurfaces: complex property and H¹ = A/(f, ∂f)",
        samples.len()
    ))
}

pub fn run(suites: &[String], sela_path: Option<&Path>, seed: u64) -> CmdResult {
    for s in suites {
        if !SUITES.contains(&s.as_str()) {
            return Err(CliError::Usage(format!(
                "unknown suite {s:?}; known: {}",
                SUITES.join(", ")
            )));
        }
    }
    let selected: Vec<&'static str> = SUITES
        .iter()
        .copied()
        .filter(|s| suites.is_empty() || suites.iter().any(|x| x == s))
        .collect();
    let needs_fixture = selected.iter().any(|s| matches!(*s, "jb" | "cocycle"));
    let sela = if needs_fixture {
        fixture(sela_path)
    } else {
        Err(String::new())
    };
    let mut outcomes = Vec::new();
    for name in selected {
        let start = Instant::now();
        let r = match name {
            "bernoulli" => suite_bernoulli(),
            "bch" => suite_bch(),
            "jb" => suite_jb(&sela),
            "cocycle" => suite_cocycle(&sela, seed),
            "milnor" => suite_milnor(),
            "tangent" => suite_tangent(),
            _ => unreachable!(),
        };
        let millis = start.elapsed().as_millis();
        let (pass, detail) = match r {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        outcomes.push(Outcome {
            name,
            pass,
            detail,
            millis,
        });
    }
    let all = outcomes.iter().all(|o| o.pass);
    // timings stay out of the JSON so that it is reproducible byte for byte
    let j = json!({
        "seed": seed,
        "pass": all,
        "suites": outcomes.iter().map(|o| json!({"suite": o.name, "pass": o.pass, "detail": o.detail})).collect::<Vec<_>>(),
    });
    let mut text = String::new();
    for o in &outcomes {
        let _ = writeln!(
            text,
            "{} {:<10} {:>7} ms  {}",
            if o.pass { "PASS" } else { "FAIL" },
            o.name,
            o.millis,
            o.detail
        );
    }
    let _ = writeln!(
        text,
        "{}/{} suites passed",
        outcomes.iter().filter(|o| o.pass).count(),
        outcomes.len()
    );
    Ok(Output::new(j, text).with_ok(all))
}
