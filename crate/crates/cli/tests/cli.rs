mod common;

use common::*;

#[test]
fn spectrum_csv_harmonic() {
    let out = stdout_of(&[
        "spectrum", "--n-basis", "4", "--k", "1", "--lambda", "0", "--omega", "1", "--levels", "2", "--format", "csv",
    ]);
    assert_eq!(out, "n,energy\n0,0.5\n1,1.5\n");
}

#[test]
fn spectrum_json_schema_and_round_trip() {
    let out = stdout_of(&["spectrum", "--n-basis", "12", "--omega", "1.7", "--k=-0.3", "--lambda", "2.5", "--levels", "3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(|k| k.as_str()).collect();
    assert_eq!(keys, ["params", "basis", "levels", "solver"]);
    assert_eq!(v["params"]["k"].as_f64(), Some(-0.3));
    assert_eq!(v["params"]["lambda"].as_f64(), Some(2.5));
    assert_eq!(v["basis"]["n_basis"].as_u64(), Some(12));
    assert_eq!(v["basis"]["omega"].as_f64(), Some(1.7));
    assert_eq!(v["solver"]["tol"].as_f64(), Some(1e-12));
    assert!(v["solver"]["sweeps"].as_u64().is_some());
    let levels = v["levels"].as_array().unwrap();
    assert_eq!(levels.len(), 3);
    for (i, l) in levels.iter().enumerate() {
        assert_eq!(l["n"].as_u64(), Some(i as u64));
    }
}

#[test]
fn spectrum_defaults_reproduce_reference_table() {
    let out = stdout_of(&["spectrum"]);
    for printed in ["0.420805", "1.50790", "2.95886", "4.62127", "6.46063", "8.43686", "10.6016", "12.8760", "15.3116", "17.7303"] {
        assert!(out.contains(printed), "missing {printed} in\n{out}");
    }
}

#[test]
fn wkb_formats_agree() {
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&["wkb", "--format", "json"])).unwrap();
    let csv = csv_levels(&stdout_of(&["wkb", "--format", "csv"]));
    assert_eq!(json_levels(&v), csv);
    assert_eq!(csv.len(), 10);
    assert!((csv[0] - 0.344127).abs() < 1e-6);
    assert!((v["coefficient"].as_f64().unwrap() - 0.867145).abs() < 5e-7);
    let table = stdout_of(&["wkb", "--levels", "3", "--lambda", "8"]);
    assert!(table.contains("0.688254"), "{table}");
}

#[test]
fn scan_omega_reports_optimum() {
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&[
        "scan-omega", "--n-basis", "1", "--lo", "0.5", "--hi", "4", "--format", "json",
    ]))
    .unwrap();
    assert!((v["omega_star"].as_f64().unwrap() - 1.5f64.cbrt()).abs() < 1e-3);
    assert!((v["e0"].as_f64().unwrap() - 0.4292679).abs() < 1e-6);
    let csv = stdout_of(&["scan-omega", "--n-basis", "10", "--format", "csv"]);
    assert!(csv.starts_with("omega_star,e0\n"));
}

#[test]
fn converge_outputs() {
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&["converge", "--format", "json"])).unwrap();
    let r = &v["report"];
    assert_eq!(r["sizes"].as_array().unwrap().len(), 4);
    assert_eq!(r["converged"].as_bool(), Some(true));
    let csv = stdout_of(&["converge", "--omega", "1", "--sizes", "4,8", "--format", "csv"]);
    let rows: Vec<&str> = csv.lines().collect();
    assert_eq!(rows[0], "n_basis,e0,delta");
    assert!(rows[1].starts_with("4,") && rows[1].ends_with(','));
    assert_eq!(rows.len(), 3);
    assert!(stdout_of(&["converge"]).contains("converged: true"));
}

#[test]
fn oracle_outputs() {
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&[
        "oracle", "--half-width", "8", "--points", "2000", "--levels", "2", "--richardson", "--format", "json",
    ]))
    .unwrap();
    assert_eq!(v["grid"]["points"].as_u64(), Some(2000));
    assert_eq!(v["richardson"].as_bool(), Some(true));
    let levels = json_levels(&v);
    assert!((levels[0] - 0.420805).abs() < 1e-6);
    // Box width chosen automatically when omitted.
    let v: serde_json::Value =
        serde_json::from_str(&stdout_of(&["oracle", "--levels", "3", "--format", "json"])).unwrap();
    assert!(v["grid"]["half_width"].as_f64().unwrap() > 0.0);
}

#[test]
fn output_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("levels.csv");
    let out = quartic(&["spectrum", "--levels", "2", "--format", "csv", "--output", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(csv_levels(&text).len(), 2);
}

#[test]
fn plot_writes_svg_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("figure.svg");
    let out = quartic(&["plot", "--output", path.to_str().unwrap(), "--width", "640", "--height", "480"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let svg = std::fs::read_to_string(&path).unwrap();
    let doc = roxmltree::Document::parse(&svg).unwrap();
    assert_eq!(doc.root_element().attribute("width"), Some("640"));
    let levels: Vec<_> = doc
        .descendants()
        .filter(|n| n.attribute("class") == Some("level computed"))
        .collect();
    assert_eq!(levels.len(), 10);
    assert!(levels.iter().all(|n| n.attribute("stroke") == Some("#CC0000")));
}

#[test]
fn plot_full_width_and_colors() {
    let out = stdout_of(&["plot", "--wkb", "--full-width", "--wkb-color", "#123456", "--output", "-"]);
    let doc = roxmltree::Document::parse(&out).unwrap();
    let lines: Vec<_> = doc
        .descendants()
        .filter(|n| n.attribute("class").is_some_and(|c| c.starts_with("level ")))
        .collect();
    assert_eq!(lines.len(), 20);
    let x1: Vec<&str> = lines.iter().map(|n| n.attribute("x1").unwrap()).collect();
    assert!(x1.iter().all(|x| *x == x1[0]));
    assert_eq!(lines.iter().filter(|n| n.attribute("stroke") == Some("#123456")).count(), 10);
}

#[test]
fn plot_wkb_needs_pure_quartic() {
    let out = quartic(&["plot", "--wkb", "--k", "1", "--output", "-"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn exit_codes() {
    assert_eq!(quartic(&["spectrum", "--nope"]).status.code(), Some(2));
    assert_eq!(quartic(&["spectrum", "--n-basis", "ten"]).status.code(), Some(2));
    assert_eq!(quartic(&["spectrum", "--format", "xml"]).status.code(), Some(2));
    assert_eq!(quartic(&["frobnicate"]).status.code(), Some(2));
    let bad = quartic(&["spectrum", "--n-basis", "0"]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(!bad.stderr.is_empty());
    assert_eq!(quartic(&["oracle", "--points", "5", "--levels", "6"]).status.code(), Some(1));
    assert_eq!(quartic(&["--help"]).status.code(), Some(0));
}

#[test]
fn every_subcommand_is_deterministic() {
    for args in [
        &["spectrum", "--format", "table"][..],
        &["wkb", "--format", "csv"],
        &["scan-omega", "--format", "json"],
        &["converge", "--format", "table"],
        &["oracle", "--points", "500", "--levels", "4"],
        &["plot", "--wkb", "--output", "-"],
    ] {
        assert_eq!(quartic(args).stdout, quartic(args).stdout, "{args:?}");
    }
}
