use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn jbkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_jbkit"))
        .args(args)
        .env_remove("JBKIT_MAX_DEGREE")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", stdout(o)))
}

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn fixture() -> String {
    concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/triangle_n3.json").to_string()
}

#[test]
fn bernoulli_table_ends_with_b6() {
    let o = jbkit(&["bernoulli", "--max", "6"]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert_eq!(s.lines().last(), Some("6: 1/42"));
    assert_eq!(s.lines().count(), 7);
    let j = json(&jbkit(&["--format", "json", "bernoulli", "--max", "2"]));
    assert_eq!(j["bernoulli"][1]["value"], "-1/2");
}

#[test]
fn bch_half_bracket() {
    let j = json(&jbkit(&["bch", "--max-degree", "2"]));
    let rec = j
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["bidegree"] == serde_json::json!([1, 1]))
        .unwrap();
    assert_eq!(
        rec["terms"],
        serde_json::json!([{"word": "xy", "coeff": "1/2"}])
    );
}

#[test]
fn bch_trigraded_has_three_letters() {
    let j = json(&jbkit(&["bch", "--max-degree", "2", "--tri"]));
    let rec = j
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["bidegree"] == serde_json::json!([1, 0, 1]))
        .unwrap();
    assert_eq!(rec["terms"][0]["coeff"], "1/2");
}

#[test]
fn milnor_example() {
    let o = jbkit(&["milnor", "--vars", "x,y", "--poly", "x^2+y^3"]);
    assert!(o.status.success());
    assert_eq!(json(&o), serde_json::json!({"dimension": 2}));
}

#[test]
fn exit_codes() {
    assert_eq!(jbkit(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(jbkit(&["bernoulli"]).status.code(), Some(2));
    assert_eq!(jbkit(&["--help"]).status.code(), Some(0));
    assert_eq!(jbkit(&["milnor", "--poly", "x^"]).status.code(), Some(2));
    assert_eq!(
        jbkit(&["milnor", "--vars", "x", "--poly", "y"])
            .status
            .code(),
        Some(2)
    );
    // non-isolated: validation failure
    assert_eq!(
        jbkit(&["milnor", "--vars", "x,y", "--poly", "x^2"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        jbkit(&["resolution", "check", "--file", "/nonexistent.json"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        jbkit(&["jb", "example", "--name", "nope"]).status.code(),
        Some(2)
    );
    let garbage = scratch("garbage.json");
    std::fs::write(&garbage, "{not json").unwrap();
    assert_eq!(
        jbkit(&["jb", "check", "--sela", garbage.to_str().unwrap()])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn degree_cap_from_environment() {
    let run = |cap: &str, n: &str| {
        Command::new(env!("CARGO_BIN_EXE_jbkit"))
            .args(["bch", "--max-degree", n])
            .env("JBKIT_MAX_DEGREE", cap)
            .output()
            .unwrap()
            .status
            .code()
    };
    assert_eq!(run("3", "4"), Some(2));
    assert_eq!(run("3", "3"), Some(0));
    assert_eq!(run("zero", "2"), Some(2));
    assert_eq!(jbkit(&["bch", "--max-degree", "99"]).status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let cases: &[&[&str]] = &[
        &["bch", "--max-degree", "4"],
        &["tangent-dgla", "--poly", "x^3+x*y^2+z^2", "--truncate", "2"],
        &[
            "deform",
            "lift",
            "--poly",
            "x^2+y^3",
            "--direction",
            "x*y",
            "--to-order",
            "4",
        ],
        &[
            "--seed",
            "5",
            "--format",
            "json",
            "selfcheck",
            "--suite",
            "cocycle",
        ],
        &["jb", "example", "--name", "cech_dg", "--order", "3"],
    ];
    for args in cases {
        let a = jbkit(args);
        let b = jbkit(args);
        assert!(a.status.success(), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn example_round_trips_through_check() {
    let o = jbkit(&["jb", "example", "--name", "triangle_n3", "--order", "3"]);
    let path = scratch("triangle.json");
    std::fs::write(&path, &o.stdout).unwrap();
    // the bundled fixture is exactly this output
    let bundled: Value =
        serde_json::from_str(&std::fs::read_to_string(fixture()).unwrap()).unwrap();
    assert_eq!(json(&o), bundled);
    let c = jbkit(&["jb", "check", "--sela", path.to_str().unwrap()]);
    assert!(c.status.success());
    assert_eq!(json(&c)["d_squared_zero"], true);
    let h = jbkit(&[
        "jb",
        "cohomology",
        "--sela",
        path.to_str().unwrap(),
        "--degree",
        "0",
    ]);
    assert!(h.status.success());
    assert_eq!(json(&h)["deformation_ring_dim"], 1);
}

#[test]
fn obstruction_lift_feeds_cocycle_check() {
    let sela2 = scratch("chart2.json");
    let sela3 = scratch("chart3.json");
    std::fs::write(
        &sela2,
        jbkit(&[
            "jb",
            "example",
            "--name",
            "obstructed_chart",
            "--order",
            "2",
        ])
        .stdout,
    )
    .unwrap();
    std::fs::write(
        &sela3,
        jbkit(&[
            "jb",
            "example",
            "--name",
            "obstructed_chart",
            "--order",
            "3",
        ])
        .stdout,
    )
    .unwrap();

    let data = scratch("phi_a.json");
    std::fs::write(&data, r#"{"phi": {"0": {"a": ["0", "1"]}}}"#).unwrap();
    let o = jbkit(&[
        "jb",
        "obstruct",
        "--sela",
        sela2.to_str().unwrap(),
        "--data",
        data.to_str().unwrap(),
        "--from-order",
        "2",
        "--to-order",
        "3",
    ]);
    assert!(o.status.success());
    let r = json(&o);
    assert_eq!(r["class_is_zero"], true);
    let lift = scratch("lift.json");
    std::fs::write(&lift, serde_json::to_string(&r["lift"]).unwrap()).unwrap();
    let c = jbkit(&[
        "jb",
        "cocycle",
        "--sela",
        sela3.to_str().unwrap(),
        "--data",
        lift.to_str().unwrap(),
    ]);
    assert!(c.status.success(), "{}", stdout(&c));
    assert_eq!(json(&c)["is_cocycle"], true);

    // t(a + b) is obstructed: [φ,φ]/2 = t²c
    std::fs::write(
        &data,
        r#"{"phi": {"0": {"a": ["0", "1"], "b": ["0", "1"]}}}"#,
    )
    .unwrap();
    let o = jbkit(&[
        "jb",
        "obstruct",
        "--sela",
        sela2.to_str().unwrap(),
        "--data",
        data.to_str().unwrap(),
        "--from-order",
        "2",
        "--to-order",
        "3",
    ]);
    let r = json(&o);
    assert_eq!(r["class_is_zero"], false);
    assert_eq!(r["class"], serde_json::json!({"c@0": "1"}));
    assert!(r["lift"].is_null());
    // fine modulo t², but not modulo t³: a validation failure there
    let c = jbkit(&[
        "jb",
        "cocycle",
        "--sela",
        sela2.to_str().unwrap(),
        "--data",
        data.to_str().unwrap(),
    ]);
    assert!(c.status.success());
    let c = jbkit(&[
        "jb",
        "cocycle",
        "--sela",
        sela3.to_str().unwrap(),
        "--data",
        data.to_str().unwrap(),
    ]);
    assert_eq!(c.status.code(), Some(1));
    assert_eq!(json(&c)["is_cocycle"], false);
}

#[test]
fn tangent_complex_round_trips_through_resolution_check() {
    let t = json(&jbkit(&["tangent-dgla", "--poly", "x^2+y^3"]));
    assert_eq!(t["h1_dim"], 2);
    assert_eq!(t["is_complex"], true);
    let path = scratch("tangent.json");
    std::fs::write(&path, serde_json::to_string(&t["complex"]).unwrap()).unwrap();
    let o = jbkit(&["resolution", "check", "--file", path.to_str().unwrap()]);
    assert!(o.status.success());
    let r = json(&o);
    assert_eq!(r["ranks"], t["complex"]["ranks"]);
    assert_eq!(r["lowest_degree"], -1);
}

#[test]
fn resolution_check_accepts_koszul_and_rejects_noncomplex() {
    let good = scratch("koszul.json");
    std::fs::write(
        &good,
        r#"{"ranks":[1,2,1],"maps":[[["-y"],["x"]],[["x","y"]]]}"#,
    )
    .unwrap();
    let o = jbkit(&["resolution", "check", "--file", good.to_str().unwrap()]);
    assert!(o.status.success());
    let r = json(&o);
    assert_eq!(r["kappa_chain_map"], true);
    assert_eq!(r["lowest_degree"], -1);

    let bad = scratch("notacomplex.json");
    std::fs::write(
        &bad,
        r#"{"ranks":[1,2,1],"maps":[[["y"],["x"]],[["x","y"]]]}"#,
    )
    .unwrap();
    let o = jbkit(&["resolution", "check", "--file", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(json(&o)["is_complex"], false);
}

#[test]
fn deform_lift_reports_unobstructed_hypersurface() {
    let o = jbkit(&[
        "deform",
        "lift",
        "--poly",
        "x^2+y^3",
        "--direction",
        "y",
        "--to-order",
        "4",
    ]);
    assert!(o.status.success());
    let r = json(&o);
    assert_eq!(r["obstruction_vanishes"], true);
    assert_eq!(r["square_zero"], true);
    assert_eq!(r["steps"].as_array().unwrap().len(), 2);
    assert_eq!(
        jbkit(&[
            "deform",
            "lift",
            "--poly",
            "x^2",
            "--direction",
            "x",
            "--to-order",
            "2"
        ])
        .status
        .code(),
        Some(2)
    );
}

#[test]
fn selfcheck_passes_and_filters() {
    let o = jbkit(&["selfcheck"]);
    assert!(o.status.success(), "{}", stdout(&o));
    let s = stdout(&o);
    for suite in ["bernoulli", "bch", "jb", "cocycle", "milnor", "tangent"] {
        assert!(
            s.lines()
                .any(|l| l.starts_with("PASS") && l.contains(suite)),
            "{suite}"
        );
    }
    let j = json(&jbkit(&["--format", "json", "selfcheck", "--suite", "bch"]));
    let suites = j["suites"].as_array().unwrap();
    assert_eq!(suites.len(), 1);
    assert_eq!(suites[0]["suite"], "bch");
    assert_eq!(
        jbkit(&["selfcheck", "--suite", "nope"]).status.code(),
        Some(2)
    );
}

#[test]
fn corrupted_fixture_fails_the_named_suite() {
    let mut sela: Value =
        serde_json::from_str(&std::fs::read_to_string(fixture()).unwrap()).unwrap();
    // flip the sign of one structure constant: Jacobi still holds but the coface maps stop being morphisms
    let b = &mut sela["algebras"]["0"]["brackets"][0]["coeff"];
    *b = Value::String("-1".into());
    let path = scratch("corrupt.json");
    std::fs::write(&path, serde_json::to_string(&sela).unwrap()).unwrap();
    let o = jbkit(&[
        "--format",
        "json",
        "selfcheck",
        "--sela",
        path.to_str().unwrap(),
        "--suite",
        "jb",
        "--suite",
        "milnor",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let j = json(&o);
    let by_name = |n: &str| {
        j["suites"]
            .as_array()
            .unwrap()
            .iter()
            .find(|s| s["suite"] == n)
            .unwrap()
            .clone()
    };
    assert_eq!(by_name("jb")["pass"], false);
    assert_eq!(by_name("milnor")["pass"], true);
}
