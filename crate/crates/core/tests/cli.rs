use std::fs;
use std::path::{Path, PathBuf};

use hedonic::cli::{run_with, EXIT_NOT_CONVERGED, EXIT_OK, EXIT_UNSTABLE, EXIT_USAGE};
use hedonic::io::{parse_instance, serialize_instance};
use hedonic::reductions::{pull_back, SourceSolution};
use hedonic::{Error, Outcome};
use tempfile::TempDir;

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

fn hedonic(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("hedonic").chain(args.iter().copied());
    let code = run_with(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn golden_files_are_canonical() {
    let mut count = 0;
    for entry in fs::read_dir(data("")).unwrap() {
        let path = entry.unwrap().path();
        let text = fs::read_to_string(&path).unwrap();
        let (game, record) = parse_instance(text.as_bytes()).unwrap();
        assert_eq!(
            serialize_instance(&game, record.as_ref()),
            text,
            "{}",
            path.display()
        );
        count += 1;
    }
    assert!(count >= 5);
}

#[test]
fn non_canonical_input_is_normalized() {
    let raw = r#"{"edges":[[2,1,"6/3"],[1,0,-1]],"players":3,"format_version":1}"#;
    let (game, _) = parse_instance(raw.as_bytes()).unwrap();
    let canon = serialize_instance(&game, None);
    assert_eq!(
        canon,
        "{\n  \"format_version\": 1,\n  \"players\": 3,\n  \"edges\": [\n    [0, 1, -1],\n    [1, 2, 2]\n  ]\n}\n"
    );
}

#[test]
fn unknown_fields_and_bad_versions_are_rejected() {
    let extra = br#"{"format_version":1,"players":2,"edges":[],"colour":"red"}"#;
    assert!(matches!(parse_instance(extra), Err(Error::Parse { .. })));
    let version = br#"{"format_version":2,"players":2,"edges":[]}"#;
    assert!(matches!(parse_instance(version), Err(Error::Parse { .. })));
    let dup = br#"{"format_version":1,"players":2,"edges":[[0,1,1],[1,0,2]]}"#;
    assert_eq!(parse_instance(dup).unwrap_err(), Error::DuplicateEdge(0, 1));
}

#[test]
fn check_reports_witness_and_exit_codes() {
    let dir = TempDir::new().unwrap();
    let split = write(&dir, "split.json", "[[0,1],[2]]");
    let grand = write(&dir, "grand.json", "[[0,1,2]]");
    let tri = data("triangle.json");
    let tri = tri.to_str().unwrap();

    let (code, out, _) = hedonic(&["check", tri, &split, "--rule", "nash"]);
    assert_eq!(code, EXIT_UNSTABLE);
    let report: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(report["stable"], false);
    assert_eq!(report["witness"][0]["player"], 2);
    assert_eq!(report["witness"][1]["gain"], 1);

    let (code, _, _) = hedonic(&["check", tri, &split, "--rule", "is"]);
    assert_eq!(code, EXIT_OK, "player 1 vetoes player 2");
    let (code, _, _) = hedonic(&["check", tri, &grand, "--rule", "1A"]);
    assert_eq!(code, EXIT_OK);
    let (code, _, err) = hedonic(&["check", tri, &grand, "--rule", "votein:3/2"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("3/2"));
    let (code, _, err) = hedonic(&["check", tri, &grand, "--rule", "nash", "--k", "1"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("at least 2"));
}

#[test]
fn parse_errors_point_at_the_input() {
    let dir = TempDir::new().unwrap();
    let bad = write(
        &dir,
        "bad.json",
        "{\"format_version\": 1,\n \"players\": 2,\n \"edges\": [[0, 1, 0.5]]}",
    );
    let outcome = write(&dir, "o.json", "[[0,1]]");
    let (code, _, err) = hedonic(&["check", &bad, &outcome, "--rule", "nash"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("line 3"), "{err}");
    let (code, _, _) = hedonic(&["frobnicate"]);
    assert_eq!(code, EXIT_USAGE);
}

#[test]
fn solve_and_dynamics() {
    let tri = data("random5.json");
    let tri = tri.to_str().unwrap();
    for algo in ["two-is", "cis", "local-search"] {
        let (code, out, err) = hedonic(&["solve", tri, "--algo", algo]);
        assert_eq!(code, EXIT_OK, "{algo}: {err}");
        let report: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(report["converged"], true);
    }
    let (code, _, _) = hedonic(&["solve", tri, "--algo", "singleton-seeded", "--rule", "cis"]);
    assert_eq!(code, EXIT_OK);
    let (code, _, err) = hedonic(&["solve", tri, "--algo", "singleton-seeded", "--rule", "nash"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("precondition"));

    let (code, out, _) = hedonic(&[
        "dynamics", tri, "--rule", "nash", "--policy", "random", "--seed", "4",
    ]);
    assert_eq!(code, EXIT_OK);
    let trace: hedonic::dynamics::Trace = serde_json::from_str(&out).unwrap();
    assert_eq!(trace.replay().unwrap(), trace.final_outcome);
    let (code, out, _) = hedonic(&["dynamics", tri, "--rule", "nash", "--limit", "1"]);
    assert_eq!(code, EXIT_NOT_CONVERGED);
    assert!(out.contains("\"converged\": false"));
}

#[test]
fn enumerate_lists_stable_outcomes() {
    let tri = data("triangle.json");
    let (code, out, _) = hedonic(&[
        "enumerate",
        tri.to_str().unwrap(),
        "--rule",
        "is",
        "--k",
        "2",
    ]);
    assert_eq!(code, EXIT_OK);
    let report: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(report["count"], 2);
    assert_eq!(report["outcomes"][1], serde_json::json!([[0, 1], [2]]));
}

#[test]
fn generate_is_deterministic() {
    let args = [
        "generate",
        "--family",
        "one-enemy",
        "--players",
        "6",
        "--density",
        "0.7",
        "--seed",
        "11",
    ];
    let (code, a, _) = hedonic(&args);
    let (_, b, _) = hedonic(&args);
    assert_eq!(code, EXIT_OK);
    assert_eq!(a, b);
    assert_eq!(a, fs::read_to_string(data("one_enemy6.json")).unwrap());
}

#[test]
fn reduce_then_pull_back() {
    let dir = TempDir::new().unwrap();
    let tri = data("triangle.json");
    let (code, out, _) = hedonic(&[
        "reduce",
        "--kind",
        "supernodes",
        "--input",
        tri.to_str().unwrap(),
    ]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(
        out,
        fs::read_to_string(data("triangle_supernodes.json")).unwrap()
    );
    let reduced = write(&dir, "reduced.json", &out);
    let outcome = write(&dir, "o.json", "[[0,1,3],[2,4]]");
    let (code, out, _) = hedonic(&["pull-back", &reduced, &outcome]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "{\n  \"labeling\": [0, 0, 1]\n}\n");

    let (_, record) = parse_instance(
        fs::read(data("triangle_supernodes.json"))
            .unwrap()
            .as_slice(),
    )
    .unwrap();
    let o = Outcome::from_blocks(5, &[vec![0, 1, 3], vec![2, 4]]).unwrap();
    assert_eq!(
        pull_back(&record.unwrap(), &o).unwrap(),
        SourceSolution::Labeling(vec![0, 0, 1])
    );

    for kind in ["sumcis", "votein-followers", "kvoteout"] {
        let input = if kind == "sumcis" {
            "random5.json"
        } else {
            "one_enemy6.json"
        };
        let path = data(input);
        let (code, _, err) = hedonic(&[
            "reduce",
            "--kind",
            kind,
            "--input",
            path.to_str().unwrap(),
            "--threshold",
            "0",
        ]);
        if kind == "sumcis" {
            assert_eq!(code, EXIT_USAGE, "random5 has a negative edge");
            assert!(err.contains("positive"));
        } else {
            assert_eq!(code, EXIT_OK, "{kind}: {err}");
        }
    }
    let (code, out, _) = hedonic(&["reduce", "--kind", "nor", "--pin", "0,1"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, fs::read_to_string(data("nor_pinned_01.json")).unwrap());
    let (code, _, _) = hedonic(&["reduce", "--kind", "nor", "--pin", "0,2"]);
    assert_eq!(code, EXIT_USAGE);
}
