//! Integration tests for the hw37 binary: exit codes, round trips,
//! byte stability, and the asset-directory override.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_hw37"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn tmpdir() -> tempfile::TempDir {
    tempfile::tempdir().expect("tempdir")
}

#[test]
fn generate_verify_round_trip_all_feasible_small_orders() {
    let dir = tmpdir();
    for n in [21usize, 63] {
        let feasible: Vec<usize> = if n == 21 {
            vec![0, 1, 3, 5, 7, 8, 9, 10]
        } else {
            (0..=31).collect()
        };
        for r in feasible {
            let path = dir.path().join(format!("hw_{n}_{r}.json"));
            let out = run(&[
                "generate",
                "--n",
                &n.to_string(),
                "--r",
                &r.to_string(),
                "--out",
                path.to_str().unwrap(),
            ]);
            assert!(out.status.success(), "generate n={n} r={r}: {out:?}");
            let check = run(&["verify", path.to_str().unwrap()]);
            assert!(check.status.success(), "verify n={n} r={r}: {check:?}");
            let stdout = String::from_utf8_lossy(&check.stdout);
            assert!(stdout.contains("accepted"), "{stdout}");
        }
    }
}

#[test]
fn generate_verify_round_trip_sampled_n105() {
    let dir = tmpdir();
    for r in [0usize, 26, 52] {
        let path = dir.path().join(format!("hw_105_{r}.json"));
        let out = run(&[
            "generate",
            "--n",
            "105",
            "--r",
            &r.to_string(),
            "--out",
            path.to_str().unwrap(),
        ]);
        assert!(out.status.success(), "generate 105/{r}: {out:?}");
        let check = run(&["verify", path.to_str().unwrap()]);
        assert!(check.status.success(), "verify 105/{r}");
    }
}

#[test]
fn certificates_are_byte_stable() {
    let dir = tmpdir();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for path in [&a, &b] {
        let out = run(&["generate", "--n", "63", "--r", "23", "--out", path.to_str().unwrap()]);
        assert!(out.status.success());
    }
    let bytes_a = std::fs::read(&a).unwrap();
    let bytes_b = std::fs::read(&b).unwrap();
    assert_eq!(bytes_a, bytes_b, "same inputs must give identical bytes");
}

#[test]
fn text_format_mirrors_cycle_notation() {
    let out = run(&["generate", "--n", "21", "--r", "8", "--format", "text"]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.starts_with("HW(21;8,2;3,7)"), "{text}");
    assert!(text.contains("F0 C3:"), "{text}");
    assert!(text.contains("(0_0,1_0,2_1)"), "{text}");
    // summary goes to stderr when the certificate itself is on stdout
    let summary = String::from_utf8_lossy(&out.stderr);
    assert!(summary.contains("factors=10"), "{summary}");
}

#[test]
fn infeasible_parameters_exit_nonzero_with_reason() {
    let bad_residue = run(&["generate", "--n", "22", "--r", "1"]);
    assert_eq!(bad_residue.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&bad_residue.stderr).contains("21 (mod 42)"));

    let open_case = run(&["generate", "--n", "21", "--r", "2"]);
    assert_eq!(open_case.status.code(), Some(1));
    let msg = String::from_utf8_lossy(&open_case.stderr);
    assert!(msg.contains("{2,4,6}"), "{msg}");
    assert!(msg.contains("open"), "{msg}");
}

#[test]
fn verify_exit_codes() {
    let dir = tmpdir();
    // malformed: truncated JSON
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"n\": 21, \"r\":").unwrap();
    assert_eq!(run(&["verify", bad.to_str().unwrap()]).status.code(), Some(2));
    // missing file
    assert_eq!(
        run(&["verify", dir.path().join("nope.json").to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
    // mutated: flip a kind label in a valid certificate
    let good = dir.path().join("good.json");
    let out = run(&["generate", "--n", "21", "--r", "9", "--out", good.to_str().unwrap()]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&good).unwrap();
    let mutated = text.replacen("\"kind\":\"C3\"", "\"kind\":\"C7\"", 1);
    assert_ne!(text, mutated);
    let bad_kind = dir.path().join("bad_kind.json");
    std::fs::write(&bad_kind, mutated).unwrap();
    let check = run(&["verify", bad_kind.to_str().unwrap()]);
    assert_eq!(check.status.code(), Some(1));
    let report = String::from_utf8_lossy(&check.stderr);
    assert!(report.contains("labeled"), "witness names the label: {report}");
}

#[test]
fn verify_accepts_kts_documents() {
    let dir = tmpdir();
    let path = dir.path().join("kts9.json");
    let out = run(&[
        "search", "kts", "--v", "9", "--seed", "1", "--nodes", "1000000",
        "--out", path.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{out:?}");
    let check = run(&["verify", path.to_str().unwrap()]);
    assert!(check.status.success());
    assert!(String::from_utf8_lossy(&check.stdout).contains("KTS(9) accepted"));
    // sidecar exists with the accounting fields
    let sidecar = std::fs::read_to_string(dir.path().join("kts9.json.sidecar.json")).unwrap();
    for field in ["seed", "node_cap", "nodes_expanded", "outcome"] {
        assert!(sidecar.contains(field), "{sidecar}");
    }
}

#[test]
fn table_shows_plans_and_repairs() {
    let out = run(&["table", "--n", "63"]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("r=9 a=1 b=2 gamma=1 alpha=[1, 7, 0]"), "{text}");
    assert!(text.contains("r=23 a=3 b=2 gamma=8 alpha=[1, 7, 7] (repaired)"), "{text}");
    assert!(text.contains("r=30 a=4 b=2 gamma=9 alpha=[7, 7, 7] (repaired)"), "{text}");

    let t21 = run(&["table", "--n", "21"]);
    let text = String::from_utf8_lossy(&t21.stdout);
    for r in [0, 1, 3, 5, 7, 8, 9, 10] {
        assert!(text.contains(&format!("r={r} ")), "{text}");
    }
    assert!(!text.contains("r=2 "), "{text}");

    let t35 = run(&["table", "--n", "35"]);
    assert!(String::from_utf8_lossy(&t35.stdout).contains("no feasible r"));
}

#[test]
fn open21_search_is_inconclusive_and_sidecarred() {
    let dir = tmpdir();
    let path = dir.path().join("open4.json");
    let out = run(&[
        "search", "open21", "--r", "4", "--seed", "7", "--nodes", "50000",
        "--out", path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1), "open case must be inconclusive");
    assert!(!path.exists(), "no certificate file for an inconclusive run");
    let sidecar = std::fs::read_to_string(dir.path().join("open4.json.sidecar.json")).unwrap();
    assert!(sidecar.contains("\"outcome\":\"inconclusive\""), "{sidecar}");
    assert!(sidecar.contains("\"nodes_expanded\":50000"), "{sidecar}");

    // guard: r=3 is constructible, not open
    let guard = run(&["search", "open21", "--r", "3", "--nodes", "10"]);
    assert_eq!(guard.status.code(), Some(2));
}

#[test]
fn starter_search_writes_asset_schema_and_overrides() {
    let dir = tmpdir();
    let path = dir.path().join("starter_c7.json");
    let out = run(&[
        "search", "starter-c7", "--seed", "5", "--nodes", "10000000",
        "--out", path.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{out:?}");
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.contains("\"classes\""), "asset schema carries class tags: {text}");

    // the saved starter can stand in for the bundled asset
    let gen = bin()
        .args(["generate", "--n", "21", "--r", "0"])
        .env("HW37_ASSET_DIR", dir.path())
        .output()
        .unwrap();
    assert!(gen.status.success(), "{gen:?}");

    // a corrupt override fails loudly
    std::fs::write(&path, "{\"kind\":\"C7\",\"cycles\":[],\"classes\":[]}").unwrap();
    let gen = bin()
        .args(["generate", "--n", "21", "--r", "0"])
        .env("HW37_ASSET_DIR", dir.path())
        .output()
        .unwrap();
    assert_eq!(gen.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&gen.stderr).contains("corrupt"), "{gen:?}");
}

#[test]
fn asset_dir_override_serves_kts_files() {
    let dir = tmpdir();
    // write a searched KTS(9) under the bundled asset's name
    let path: PathBuf = dir.path().join("kts9.json");
    let out = run(&[
        "search", "kts", "--v", "9", "--seed", "2", "--nodes", "1000000",
        "--out", path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    // n=63 assembly reads KTS(9) through the override
    let cert = dir.path().join("hw63.json");
    let gen = bin()
        .args(["generate", "--n", "63", "--r", "5", "--out", cert.to_str().unwrap()])
        .env("HW37_ASSET_DIR", dir.path())
        .output()
        .unwrap();
    assert!(gen.status.success(), "{gen:?}");
    let check = run(&["verify", cert.to_str().unwrap()]);
    assert!(check.status.success());
}
