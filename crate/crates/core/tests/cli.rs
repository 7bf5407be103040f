use std::process::{Command, Output};

use phir::cli::report::{self, IdealsReport, Report};

fn phir(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_phir")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> (i32, serde_json::Value) {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let out = phir(&full);
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).expect("valid JSON");
    report::validate(&doc).expect("schema");
    (out.status.code().unwrap(), doc)
}

#[test]
fn classify_integers() {
    let (code, doc) = json(&["classify", "--ring", "Z", "--ideal", "gen 4", "--phi", "empty"]);
    assert_eq!(code, 0);
    let r = &doc["results"][0];
    assert_eq!(r["class"], "r");
    assert_eq!(r["status"], "fails");
    assert_eq!(r["witness"], serde_json::json!([2, 2]));
    let rep: Report = serde_json::from_value(doc.clone()).unwrap();
    assert_eq!(serde_json::to_value(&rep).unwrap(), doc);
}

#[test]
fn product_theorem_exit_code() {
    let (code, doc) = json(&["verify", "--theorem", "product-tqr", "--ring", "Z x Z/2", "--n", "2"]);
    assert_eq!(code, 1);
    assert_eq!(doc["results"][0]["witness"][0], "<4> x <1>");
    assert_eq!(doc["results"][0]["witness"][1], serde_json::json!([2, 1]));
}

#[test]
fn ideal_listing() {
    let (code, doc) = json(&["ideals", "--ring", "Z/12"]);
    assert_eq!(code, 0);
    let rep: IdealsReport = serde_json::from_value(doc).unwrap();
    assert_eq!(rep.ideals.len(), 6);
    assert!(rep.complete);
    let (_, doc) = json(&["ideals", "--ring", "Z", "--bound", "1000:10"]);
    assert_eq!(doc["complete"], false);
    assert_eq!(doc["ideals"].as_array().unwrap().len(), 11);
}

#[test]
fn verify_runs_the_probe_set() {
    let (code, doc) = json(&["verify", "--theorem", "colon-x", "--corpus", "zn:2..10"]);
    assert_eq!(code, 0);
    let phis: Vec<&str> = doc["results"].as_array().unwrap().iter().map(|r| r["phi"].as_str().unwrap()).collect();
    assert_eq!(phis, ["empty", "zero", "pow:2", "omega"]);
}

#[test]
fn localization_spec_supplies_the_set() {
    let (code, doc) = json(&["verify", "--theorem", "loc-1", "--ring", "loc(Z,{3})", "--phi", "zero", "--bound", "20"]);
    assert_eq!(code, 0);
    assert_eq!(doc["ring"], "Z");
    assert_eq!(doc["results"][0]["violations"], 0);
}

#[test]
fn search_reports_the_example() {
    let (code, doc) = json(&["search", "--have", "r", "--lack", "prime", "--corpus", "zn:2..30"]);
    assert_eq!(code, 1);
    assert_eq!(doc["results"][0]["found_ring"], "Z/4");
    assert_eq!(doc["results"][0]["found_ideal"], "<0>");
}

#[test]
fn table_output() {
    let out = phir(&["classify", "--ring", "Z/12", "--ideal", "gen 4", "--phi", "zero"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("ring: Z/12\nideal: <4>\n"));
    assert!(text.lines().any(|l| l.starts_with("phi-r[zero]") && l.ends_with("holds")));
}

#[test]
fn usage_errors() {
    for args in [
        &["classify", "--ring", "Z x", "--ideal", "gen"][..],
        &["classify", "--ring", "Z", "--ideal", "gen 1"],
        &["classify", "--ring", "Z", "--ideal", "gen 2", "--phi", "pow:1"],
        &["verify", "--theorem", "ide", "--ring", "Z/4"],
        &["verify", "--theorem", "cha"],
        &["search", "--have", "phi-r", "--lack", "r", "--corpus", "zn:2..4"],
    ] {
        let out = phir(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}
