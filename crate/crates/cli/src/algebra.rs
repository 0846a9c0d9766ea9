//! `bernoulli` and `bch`.

use std::fmt::Write as _;

use jbkit::bch::BchTable;
use jbkit::exactnum::bernoulli;
use jbkit::scalar::format_rational;
use serde_json::json;

use crate::report::{invalid, CmdResult, Output};

pub fn bernoulli_table(max: usize) -> CmdResult {
    let mut rows = Vec::new();
    let mut text = String::new();
    for n in 0..=max {
        let b = format_rational(&bernoulli(n));
        let _ = writeln!(text, "{n}: {b}");
        rows.push(json!({"n": n, "value": b}));
    }
    Ok(Output::new(json!({ "bernoulli": rows }), text))
}

pub fn bch_table(max_degree: usize, tri: bool) -> CmdResult {
    let table = BchTable::new(max_degree).map_err(invalid)?;
    let records = if tri {
        table.trigraded_records()
    } else {
        table.bigraded_records()
    };
    let mut text = String::new();
    for r in &records {
        let deg: Vec<String> = r.bidegree.iter().map(|d| d.to_string()).collect();
        let terms: Vec<String> = r
            .terms
            .iter()
            .map(|t| format!("{}·{}", t.coeff, t.word))
            .collect();
        let body = if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ")
        };
        let _ = writeln!(text, "({}): {}", deg.join(","), body);
    }
    Ok(Output::new(
        serde_json::to_value(&records).expect("records serialize"),
        text,
    ))
}
