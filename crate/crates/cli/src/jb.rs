//! `jb check | cohomology | cocycle | obstruct | example`.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use jbkit::jbcomplex::{
    examples, obstruction, verify_cocycle, Chain, CocycleData, CocycleJson, JbComplex, JbConfig,
    JbError, Sela, SelaJson,
};
use jbkit::scalar::format_rational;
use jbkit::Rational;
use serde_json::{json, Value};

use crate::report::{invalid, read_json, CliError, CmdResult, Output};

pub fn load_sela(path: &Path) -> Result<Sela, CliError> {
    let j: SelaJson = read_json(path)?;
    let sela = Sela::from_json(&j).map_err(invalid)?;
    sela.validate().map_err(invalid)?;
    Ok(sela)
}

fn jb_error(e: JbError) -> CliError {
    match e {
        JbError::NotInSocle { .. }
        | JbError::WindowTooSmall { .. }
        | JbError::SymCapTooSmall { .. } => CliError::Usage(e.to_string()),
        _ => CliError::Invalid(e.to_string()),
    }
}

fn coeffs(c: &jbkit::liecore::ArtinElem<Rational>) -> Vec<String> {
    c.coeffs().iter().map(format_rational).collect()
}

fn chain_json(jb: &JbComplex, chain: &Chain) -> Value {
    let m: BTreeMap<String, Vec<String>> = chain
        .iter()
        .map(|(k, c)| (jb.monomial_label(k), coeffs(c)))
        .collect();
    json!(m)
}

fn labelled(labels: &[String], v: &[Rational]) -> Value {
    let m: BTreeMap<&String, String> = labels
        .iter()
        .zip(v)
        .filter(|(_, x)| !num_traits::Zero::is_zero(*x))
        .map(|(l, x)| (l, format_rational(x)))
        .collect();
    json!(m)
}

pub fn config(window: Option<(i32, i32)>, sym_cap: Option<usize>) -> JbConfig {
    let mut c = match window {
        Some((lo, hi)) => JbConfig::window(lo, hi),
        None => JbConfig::default(),
    };
    c.sym_cap = sym_cap;
    c
}

pub fn check(path: &Path, cfg: &JbConfig) -> CmdResult {
    let sela = load_sela(path)?;
    let jb = JbComplex::assemble(&sela, cfg).map_err(jb_error)?;
    let d2 = jb.verify_d_squared();
    let filtration = jb.filtration_defects();
    let f1 = jb.f1_defects();
    let pieces = jb.graded_pieces();
    let (lo, hi) = jb.window();
    let dims: BTreeMap<String, usize> = (lo..=hi).map(|j| (j.to_string(), jb.dim(j))).collect();
    let ok = d2.is_zero() && filtration.is_empty() && f1.is_empty();
    let j = json!({
        "artin_order": jb.order(),
        "sym_cap": jb.sym_cap(),
        "window": [lo, hi],
        "dimensions": dims,
        "d_squared_zero": d2.is_zero(),
        "checked_degrees": d2.checked,
        "offending": d2.offending.as_ref().map(|(s, t, c)| json!({"source": s, "target": t, "coeff": c})),
        "filtration_defects": filtration,
        "f1_defects": f1,
        "graded_pieces": pieces,
    });
    let mut text = String::new();
    let _ = writeln!(
        text,
        "N = {}, symmetric cap {}, degrees {lo}..{hi}",
        jb.order(),
        jb.sym_cap()
    );
    for j in lo..=hi {
        let _ = writeln!(text, "dim J^{j} = {}", jb.dim(j));
    }
    let _ = writeln!(text, "d² = 0: {}", d2.is_zero());
    if let Some((s, t, c)) = &d2.offending {
        let _ = writeln!(text, "  first defect: {s} -> {t} with coefficient {c}");
    }
    let _ = writeln!(text, "filtration preserved: {}", filtration.is_empty());
    let _ = writeln!(text, "F₁ differential matches K: {}", f1.is_empty());
    Ok(Output::new(j, text).with_ok(ok))
}

pub fn cohomology(path: &Path, degree: i32, cfg: &JbConfig) -> CmdResult {
    let sela = load_sela(path)?;
    let mut cfg = cfg.clone();
    let (lo, hi) = cfg.window;
    cfg.window = (lo.min(degree - 1), hi.max(degree + 1));
    let jb = JbComplex::assemble(&sela, &cfg).map_err(jb_error)?;
    let h = jb.cohomology(degree).map_err(jb_error)?;
    let ring = if degree == 0 {
        Some(jb.deformation_ring_dim().map_err(jb_error)?)
    } else {
        None
    };
    let layers: Vec<Value> = h
        .layers
        .iter()
        .map(|(p, d)| json!({"p": p, "dim": d}))
        .collect();
    let reps: Vec<Value> = h
        .representatives
        .iter()
        .map(|c| chain_json(&jb, c))
        .collect();
    let agree = h.dim == h.dim_by_layers;
    let j = json!({
        "degree": degree,
        "dim": h.dim,
        "dim_by_layers": h.dim_by_layers,
        "layers": layers,
        "deformation_ring_dim": ring,
        "representatives": reps,
    });
    let mut text = format!(
        "dim H^{degree}(J_S) = {} (sum over layers: {})\n",
        h.dim, h.dim_by_layers
    );
    for (p, d) in &h.layers {
        let _ = writeln!(text, "  H^{degree}(F_{p}J) = {d}");
    }
    if let Some(r) = ring {
        let _ = writeln!(text, "deformation ring dimension: {r}");
    }
    Ok(Output::new(j, text).with_ok(agree))
}

pub fn cocycle(path: &Path, data: &Path, cfg: &JbConfig) -> CmdResult {
    let sela = load_sela(path)?;
    let dj: CocycleJson = read_json(data)?;
    let d = CocycleData::from_json(&sela, &dj, sela.artin_order()).map_err(jb_error)?;
    let mut cfg = cfg.clone();
    cfg.window = (cfg.window.0.min(0), cfg.window.1.max(1));
    let jb = JbComplex::assemble(&sela, &cfg).map_err(jb_error)?;
    let c = verify_cocycle(&jb, &d);
    let j = json!({
        "is_cocycle": c.is_cocycle,
        "routes_agree": c.routes_agree,
        "multiplicative": c.multiplicative,
        "defects": c.defects,
    });
    let mut text = format!(
        "cocycle: {}\nMaurer–Cartan routes agree: {}\nmultiplicative: {}\n",
        c.is_cocycle, c.routes_agree, c.multiplicative
    );
    for d in &c.defects {
        let _ = writeln!(text, "  {d}");
    }
    Ok(Output::new(j, text).with_ok(c.is_cocycle && c.routes_agree))
}

pub fn obstruct(path: &Path, data: &Path, from: usize, to: usize) -> CmdResult {
    let sela = load_sela(path)?;
    let dj: CocycleJson = read_json(data)?;
    let d = CocycleData::from_json(&sela, &dj, from).map_err(jb_error)?;
    let r = obstruction(&sela, &d, from, to, None).map_err(jb_error)?;
    let mut lifted = sela.clone();
    lifted.set_artin_order(to);
    let j = json!({
        "from_order": r.from_order,
        "to_order": r.to_order,
        "cocycle": labelled(&r.labels, &r.cocycle),
        "closed": r.closed,
        "certified": r.certified,
        "class": labelled(&r.labels, &r.class),
        "class_is_zero": r.class_is_zero,
        "lift": r.lift.as_ref().map(|l| l.to_json(&lifted)),
    });
    let mut text = format!(
        "obstruction {} → {}: class {}\ncocycle closed: {}, certified through J: {}\n",
        from,
        to,
        if r.class_is_zero { "zero" } else { "nonzero" },
        r.closed,
        r.certified
    );
    for (l, x) in r.labels.iter().zip(&r.class) {
        if !num_traits::Zero::is_zero(x) {
            let _ = writeln!(text, "  {l}: {}", format_rational(x));
        }
    }
    Ok(Output::new(j, text).with_ok(r.closed && r.certified))
}

pub const EXAMPLES: &[&str] = &[
    "abelian_triangle",
    "abelian_hollow_triangle",
    "triangle_n3",
    "triangle_b3",
    "edge_n3",
    "lie_pair",
    "cech_dg",
    "obstructed_chart",
];

pub fn example_sela(name: &str, order: usize) -> Result<Sela, CliError> {
    Ok(match name {
        "abelian_triangle" => examples::abelian_triangle(order),
        "abelian_hollow_triangle" => examples::abelian_hollow_triangle(order),
        "triangle_n3" => examples::triangle_n3(order),
        "triangle_b3" => examples::triangle_b3(order),
        "edge_n3" => examples::edge_n3(order),
        "lie_pair" => examples::lie_pair(order),
        "cech_dg" => examples::cech_dg(order),
        "obstructed_chart" => examples::obstructed_chart(order),
        _ => {
            return Err(CliError::Usage(format!(
                "unknown example {name:?}; known: {}",
                EXAMPLES.join(", ")
            )))
        }
    })
}

pub fn example(name: &str, order: usize) -> CmdResult {
    let s = example_sela(name, order)?;
    let j = serde_json::to_value(s.to_json()).expect("SELA serializes");
    let text = serde_json::to_string_pretty(&j).expect("SELA serializes");
    Ok(Output::new(j, text))
}
