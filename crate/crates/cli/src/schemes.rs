//! `milnor`, `tangent-dgla`, `deform lift`, `resolution check`.

use std::fmt::Write as _;
use std::path::Path;
use std::sync::Arc;

use jbkit::schemes::{
    hypersurface_tangent_dgla, infer_vars, kappa, lift_deformation, milnor_dim, normal_dgla,
    parse_poly, parse_vars, PolyComplex, PolyComplexJson, SchemeError,
};
use jbkit::RatPoly;
use serde_json::json;

use crate::report::{read_json, CliError, CmdResult, Output};

fn scheme_error(e: SchemeError) -> CliError {
    match e {
        SchemeError::Syntax { .. } | SchemeError::UnknownVariable(_) => {
            CliError::Usage(e.to_string())
        }
        _ => CliError::Invalid(e.to_string()),
    }
}

fn ring(vars: Option<&str>, polys: &[&str]) -> Result<Arc<Vec<String>>, CliError> {
    match vars {
        Some(v) => parse_vars(v).map_err(scheme_error),
        None => Ok(infer_vars(polys.iter().copied())),
    }
}

fn poly(text: &str, vars: &Arc<Vec<String>>) -> Result<RatPoly, CliError> {
    parse_poly(text, vars).map_err(scheme_error)
}

pub fn milnor(vars: Option<&str>, f: &str) -> CmdResult {
    let r = ring(vars, &[f])?;
    let p = poly(f, &r)?;
    let dim = milnor_dim(&p).map_err(scheme_error)?;
    Ok(Output::new(
        json!({ "dimension": dim }),
        format!("dim A/(f, ∂f) = {dim}"),
    ))
}

pub fn tangent(vars: Option<&str>, f: &str, truncate: Option<u32>) -> CmdResult {
    let r = ring(vars, &[f])?;
    let p = poly(f, &r)?;
    let t = hypersurface_tangent_dgla(&p).map_err(scheme_error)?;
    let c = t.complex();
    let pres: Vec<String> = t.h1_presentation().iter().map(|q| q.to_string()).collect();
    let (h1, h1_error) = match t.h1_dim() {
        Ok(d) => (Some(d), None),
        Err(e) => (None, Some(e.to_string())),
    };
    let truncated = truncate.map(|d| t.truncated_ranks(d));
    let j = json!({
        "vars": r.as_slice(),
        "equation": p.to_string(),
        "complex": c.to_json(),
        "is_complex": t.is_complex(),
        "h1_presentation": pres,
        "h1_dim": h1,
        "h1_error": h1_error,
        "truncated_ranks": truncated,
        "truncation": truncate,
    });
    let mut text = format!(
        "tangent complex of {p} in degrees -1, 0, 1 with ranks {:?}\n",
        c.ranks()
    );
    let _ = writeln!(text, "complex: {}", t.is_complex());
    let _ = writeln!(text, "H¹ = A/({})", pres.join(", "));
    match (h1, &h1_error) {
        (Some(d), _) => {
            let _ = writeln!(text, "dim H¹ = {d}");
        }
        (None, Some(e)) => {
            let _ = writeln!(text, "dim H¹ not finite: {e}");
        }
        _ => {}
    }
    if let Some(ranks) = &truncated {
        for r in ranks {
            let _ = writeln!(
                text,
                "d^{} on degree ≤ {}: source {}, rank {}, kernel {}",
                r.degree,
                truncate.unwrap(),
                r.source_dim,
                r.rank,
                r.kernel_dim
            );
        }
    }
    Ok(Output::new(j, text).with_ok(t.is_complex()))
}

pub fn deform_lift(vars: Option<&str>, f: &str, g: &str, from: usize, to: usize) -> CmdResult {
    let r = ring(vars, &[f, g])?;
    let fp = poly(f, &r)?;
    let gp = poly(g, &r)?;
    if from < 2 || to <= from {
        return Err(CliError::Usage(format!(
            "need 2 ≤ from-order < to-order, got {from} → {to}"
        )));
    }
    let rep = lift_deformation(&fp, &gp, from, to).map_err(scheme_error)?;
    let steps: Vec<_> = rep
        .steps
        .iter()
        .map(|s| {
            json!({
                "from_order": s.from_order,
                "to_order": s.to_order,
                "class_is_zero": s.class_is_zero,
                "closed": s.closed,
                "certified": s.certified,
            })
        })
        .collect();
    let layers: Vec<String> = rep.lift.layers().iter().map(|q| q.to_string()).collect();
    let ok = rep.all_unobstructed() && rep.square_zero;
    let j = json!({
        "vars": r.as_slice(),
        "from_order": rep.from_order,
        "to_order": rep.to_order,
        "sela_dim": rep.sela_dim,
        "steps": steps,
        "obstruction_vanishes": rep.all_unobstructed(),
        "lift": rep.lift.to_string(),
        "lift_layers": layers,
        "deformed_equation": rep.deformed_equation.to_string(),
        "square_zero": rep.square_zero,
    });
    let mut text = String::new();
    for s in &rep.steps {
        let _ = writeln!(
            text,
            "t^{} → t^{}: obstruction {}",
            s.from_order,
            s.to_order,
            if s.class_is_zero {
                "vanishes"
            } else {
                "NONZERO"
            }
        );
    }
    let _ = writeln!(text, "φ = {}", rep.lift);
    let _ = writeln!(text, "deformed equation: {}", rep.deformed_equation);
    let _ = writeln!(text, "(∂+φ)² = 0: {}", rep.square_zero);
    Ok(Output::new(j, text).with_ok(ok))
}

pub fn resolution_check(path: &Path) -> CmdResult {
    let j: PolyComplexJson = read_json(path)?;
    let c = match PolyComplex::from_json(&j) {
        Ok(c) => c,
        Err(e @ (SchemeError::NotAComplex(_) | SchemeError::Shape(_))) => {
            let report = json!({"is_complex": false, "error": e.to_string()});
            return Ok(Output::new(report, format!("not a complex: {e}")).failed());
        }
        Err(e) => return Err(scheme_error(e)),
    };
    let mut kappa_ok = None;
    let mut normal_ranks = None;
    if c.highest() == 1 {
        let n = normal_dgla(&c).map_err(scheme_error)?;
        let vars = c.vars().clone();
        let mut all = true;
        for i in 0..vars.len() {
            let v: Vec<RatPoly> = (0..vars.len())
                .map(|k| {
                    if k == i {
                        RatPoly::one(&vars)
                    } else {
                        RatPoly::zero(&vars)
                    }
                })
                .collect();
            all &= kappa(&n, &v).is_ok();
        }
        kappa_ok = Some(all);
        let ranks: Vec<_> = n
            .degrees()
            .map(|d| json!({"degree": d, "rank": n.rank(d)}))
            .collect();
        normal_ranks = Some(ranks);
    }
    let ok = kappa_ok.unwrap_or(true);
    let report = json!({
        "is_complex": true,
        "vars": c.vars().as_slice(),
        "lowest_degree": c.lowest(),
        "ranks": c.ranks(),
        "normal_dgla_ranks": normal_ranks,
        "kappa_chain_map": kappa_ok,
    });
    let mut text = format!(
        "complex in degrees {}..{} with ranks {:?}: d² = 0\n",
        c.lowest(),
        c.highest(),
        c.ranks()
    );
    if let Some(k) = kappa_ok {
        let _ = writeln!(text, "κ(∂/∂x_i) chain maps: {k}");
    }
    Ok(Output::new(report, text).with_ok(ok))
}
