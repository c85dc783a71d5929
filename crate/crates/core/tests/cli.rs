use coxlab::cli::{run, EXIT_OK, EXIT_USAGE};
use coxlab::fixtures::BUNDLED;
use coxlab::presentation::Presentation;

fn coxlab(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("coxlab").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn json(args: &[&str]) -> (i32, serde_json::Value) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let (code, out, err) = coxlab(&full);
    let body = if out.is_empty() { err } else { out };
    (
        code,
        serde_json::from_str(&body).unwrap_or_else(|e| panic!("{e}: {body}")),
    )
}

#[test]
fn no_command_is_usage_error() {
    let (code, _, err) = coxlab(&[]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("no command"));
}

#[test]
fn unknown_flag_is_usage_error() {
    assert_eq!(coxlab(&["build", "--bogus"]).0, EXIT_USAGE);
    assert_eq!(coxlab(&["verify", "--suite", "nope"]).0, EXIT_USAGE);
}

#[test]
fn help_exits_zero() {
    let (code, out, _) = coxlab(&["--help"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("enumerate"));
}

#[test]
fn build_generated_and_fixture() {
    let (code, v) = json(&["build", "--rows", "3", "--cols", "3"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(
        (
            v["points"].as_u64(),
            v["lines"].as_u64(),
            v["planes"].as_u64()
        ),
        (Some(9), Some(27), Some(18))
    );
    assert_eq!(v["euler_characteristic"], 0);

    let (code, v) = json(&["build", "--paper-fixture"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(v["lines"], 27);
}

#[test]
fn build_too_small_is_usage_error() {
    let (code, _, err) = coxlab(&["build", "--rows", "2", "--cols", "3"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(!err.is_empty());
}

#[test]
fn build_then_present_and_verify_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let complex = dir.path().join("tt44.json");
    let pres = dir.path().join("tt44_pres.json");
    let c = complex.to_str().unwrap();
    let p = pres.to_str().unwrap();

    assert_eq!(
        coxlab(&["build", "--rows", "4", "--cols", "4", "--out", c]).0,
        EXIT_OK
    );
    let (code, v) = json(&["present", "--complex", c, "--variant", "fork", "--out", p]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(v["generators"], 48);
    let written = Presentation::from_json(&std::fs::read_to_string(&pres).unwrap()).unwrap();
    assert_eq!(written.generator_count, 48);
    assert_eq!(
        v["total"].as_u64().unwrap() as usize,
        written.relators.len()
    );

    let (code, v) = json(&["verify", "--complex", c, "--suite", "relators"]);
    assert_eq!(code, EXIT_OK, "{v}");
    assert_eq!(v["summary"]["fail"], 0);

    let (code, _, err) = coxlab(&["verify", "--complex", c, "--suite", "center"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("suite center"), "{err}");
}

#[test]
fn present_fixture_quotient_counts() {
    let (code, v) = json(&["present"]);
    assert_eq!(code, EXIT_OK);
    let c = &v["counts"];
    assert_eq!(
        (
            c["squares"].as_u64(),
            c["commutations"].as_u64(),
            c["braids"].as_u64(),
            c["forks"].as_u64(),
            c["cycles"].as_u64()
        ),
        (Some(27), Some(297), Some(54), Some(54), Some(9))
    );
}

#[test]
fn verify_all_passes() {
    let (code, v) = json(&["verify", "--suite", "all"]);
    assert_eq!(code, EXIT_OK, "{v}");
    assert_eq!(v["summary"]["fail"], 0);
    let names: Vec<&str> = v["entries"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["name"].as_str().unwrap())
        .collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);
    for prefix in ["relators.", "ax.", "tables.", "center.", "structure."] {
        assert!(
            names.iter().any(|n| n.starts_with(prefix)),
            "no {prefix} entries"
        );
    }
}

#[test]
fn verify_text_output_is_stable() {
    let a = coxlab(&["verify", "--suite", "center"]);
    let b = coxlab(&["verify", "--suite", "center"]);
    assert_eq!(a.0, EXIT_OK);
    assert_eq!(a.1, b.1);
}

#[test]
fn enumerate_bundled() {
    let (code, v) = json(&["enumerate", "--bundled", "s4_remark.json"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(v["index"], 24);

    let (code, v) = json(&["enumerate", "--bundled", "hexagon_quotient.json"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(v["index"], 720);
}

#[test]
fn enumerate_capacity_exceeded_is_inconclusive() {
    let (code, v) = json(&[
        "enumerate",
        "--bundled",
        "hexagon_affine.json",
        "--capacity",
        "100000",
    ]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(v["status"], "inconclusive");
    assert!(v["index"].is_null());
}

#[test]
fn enumerate_subgroup_and_table() {
    let dir = tempfile::tempdir().unwrap();
    let table = dir.path().join("table.json");
    let t = table.to_str().unwrap();
    // ⟨x, y⟩ ≅ S₃ has index 4 in S₄.
    let (code, v) = json(&[
        "enumerate",
        "--bundled",
        "s4_remark.json",
        "--subgroup",
        "1",
        "--subgroup",
        "2",
        "--table",
        t,
    ]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(v["index"], 4);
    let written: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&table).unwrap()).unwrap();
    assert_eq!(written["rows"].as_array().unwrap().len(), 4);
}

#[test]
fn enumerate_bad_input() {
    assert_eq!(coxlab(&["enumerate"]).0, EXIT_USAGE);
    assert_eq!(
        coxlab(&["enumerate", "--bundled", "missing.json"]).0,
        EXIT_USAGE
    );
    assert_eq!(
        coxlab(&[
            "enumerate",
            "--bundled",
            "s4_remark.json",
            "--subgroup",
            "1,x"
        ])
        .0,
        EXIT_USAGE
    );
    assert_eq!(
        coxlab(&[
            "enumerate",
            "--bundled",
            "s4_remark.json",
            "--subgroup",
            "7"
        ])
        .0,
        EXIT_USAGE
    );
    assert_eq!(
        coxlab(&["enumerate", "--presentation", "/nonexistent/p.json"]).0,
        EXIT_USAGE
    );
}

#[test]
fn export_fixtures_writes_every_file() {
    let dir = tempfile::tempdir().unwrap();
    let (code, _, _) = coxlab(&["--export-fixtures", dir.path().to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    for (name, body) in BUNDLED {
        assert_eq!(
            std::fs::read_to_string(dir.path().join(name)).unwrap(),
            *body
        );
    }
}
