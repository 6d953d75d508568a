mod common;

use std::fs;
use std::process::Command;

use common::*;
use connected_codes::cli::run_with;
use connected_codes::grid::GridRealization;

fn run(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let status = run_with(std::iter::once("ccode").chain(args.iter().copied()), &mut out, &mut err);
    (status, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn binary_examples() {
    let bin = env!("CARGO_BIN_EXE_ccode");
    let out = Command::new(bin).args(["check", "e,12,13"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(String::from_utf8_lossy(&out.stdout), "NOT CONNECTED: neuron 1, codewords {1,2} and {1,3}\n");

    let out = Command::new(bin).args(["dim", "e,1,2,3,12,123"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout), "d* = 2 (exact)\n");

    let dir = tempfile::tempdir().unwrap();
    let out = Command::new(bin).current_dir(dir.path()).args(["realize", "e,1", "--dim", "1"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("(1)\n"));
    let grid = GridRealization::from_json(&fs::read_to_string(dir.path().join("grid.json")).unwrap()).unwrap();
    assert_eq!(grid.extents(), &[1]);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["check", "e,1,12"]).0, 0);
    assert_eq!(run(&["check", "e,0"]).0, 64);
    assert_eq!(run(&["check", "e,1x"]).0, 64);
    assert_eq!(run(&["frobnicate"]).0, 64);
    assert_eq!(run(&["realize", "e,1", "--dim", "4"]).0, 64);
    assert_eq!(run(&["--help"]).0, 0);
    let dir = tempfile::tempdir().unwrap();
    let o = dir.path().to_str().unwrap();
    let (status, text, _) = run(&["realize", TRIPLE_CHAIN, "--dim", "1", "-o", o]);
    assert_eq!((status, text.as_str()), (2, "not realizable in dimension 1\n"));
    let (status, _, _) = run(&["realize", FIVE_PAIRS, "--dim", "2", "--dup-bound", "1", "-o", o]);
    assert_eq!(status, 2);
    assert_eq!(run(&["verify", "e,1", "/nonexistent/cert.json"]).0, 64);
}

#[test]
fn parse_warnings_go_to_stderr() {
    let (status, out, err) = run(&["check", "1,1,12"]);
    assert_eq!(status, 0);
    assert_eq!(out, "CONNECTED\n");
    assert!(err.contains("duplicate codeword {1}"));
    assert!(err.contains("empty codeword was missing"));
}

#[test]
fn json_mirrors() {
    let (_, out, _) = run(&["--json", "check", "e,12,13"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["connected"], false);
    assert_eq!(v["witness"]["neuron"], 1);
    let (_, out, _) = run(&["--json", "dim", TRIPLE_CHAIN]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!((v["d_star"].as_u64(), v["exactness"].as_str()), (Some(2), Some("exact")));
    let (_, out, _) = run(&["--json", "enumerate", "-n", "2"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["rows"].as_array().unwrap().len(), 8);
}

#[test]
fn realize_render_and_planar_files() {
    let dir = tempfile::tempdir().unwrap();
    let d = |s: &str| dir.path().join(s).to_str().unwrap().to_string();
    let (status, _, _) = run(&["realize", TRIPLE_CHAIN, "--dim", "2", "-o", &d("two")]);
    assert_eq!(status, 0);
    let svg = fs::read_to_string(dir.path().join("two/grid.svg")).unwrap();
    assert!(svg.starts_with("<svg"));
    let (status, out, _) = run(&["planar", &d("two/graph.json")]);
    assert_eq!(status, 0);
    assert!(out.starts_with("PLANAR"));

    let (status, _, _) = run(&["realize", TEN_WORDS, "--dim", "3", "-o", &d("three")]);
    assert_eq!(status, 0);
    let scene: serde_json::Value = serde_json::from_str(&fs::read_to_string(dir.path().join("three/scene.json")).unwrap()).unwrap();
    assert!(!scene["cubes"].as_array().unwrap().is_empty());
    let (status, out, _) = run(&["render", &d("three/grid.json"), "-o", &d("again.json")]);
    assert_eq!((status, out.starts_with("scene:")), (0, true));
    assert_eq!(fs::read_to_string(d("again.json")).unwrap(), fs::read_to_string(d("three/scene.json")).unwrap());
    let (status, _, _) = run(&["render", &d("two/grid.json"), "-o", &d("again.svg")]);
    assert_eq!(status, 0);
    assert_eq!(fs::read_to_string(d("again.svg")).unwrap(), svg);

    let (status, _, _) = run(&["graph", FIVE_PAIRS, "-o", &d("k5.json")]);
    assert_eq!(status, 0);
    let (status, out, _) = run(&["planar", &d("k5.json")]);
    assert_eq!(status, 1);
    assert!(out.starts_with("NON-PLANAR: K5 subdivision"));
    let (_, out, _) = run(&["graph", "e,1,12"]);
    assert_eq!(out, "{\"vertices\":[[1],[1,2]],\"edges\":[[0,1]]}\n");
}

#[test]
fn verify_accepts_everything_emitted_for_small_codes() {
    let dir = tempfile::tempdir().unwrap();
    let mut checked = 0;
    for (k, c) in (1..=3).flat_map(all_codes).filter(chain_connected).enumerate() {
        let text = c.to_string();
        let sub = dir.path().join(k.to_string());
        let s = sub.to_str().unwrap();
        assert_eq!(run(&["dim", &text, "-o", s]).0, 0);
        for file in ["certificate.json", "grid.json"] {
            let f = sub.join(file);
            let (status, out, _) = run(&["verify", &text, f.to_str().unwrap()]);
            assert_eq!(status, 0, "{text} {file}: {out}");
            checked += 1;
        }
        for dim in ["1", "2", "3"] {
            let o = sub.join(format!("d{dim}"));
            if run(&["realize", &text, "--dim", dim, "-o", o.to_str().unwrap()]).0 != 0 {
                continue;
            }
            for file in ["grid.json", "word.json", "graph.json"] {
                let f = o.join(file);
                if f.exists() {
                    let (status, out, _) = run(&["verify", &text, f.to_str().unwrap()]);
                    assert_eq!(status, 0, "{text} d{dim} {file}: {out}");
                    checked += 1;
                }
            }
        }
    }
    let certs = dir.path().join("certs");
    let (status, _, _) = run(&["enumerate", "-n", "2", "--certs", certs.to_str().unwrap()]);
    assert_eq!(status, 0);
    for entry in fs::read_dir(&certs).unwrap() {
        let path = entry.unwrap().path();
        let bundle: serde_json::Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
        let code = bundle["code"].as_str().unwrap().to_string();
        assert_eq!(run(&["verify", &code, path.to_str().unwrap()]).0, 0);
        checked += 1;
    }
    assert!(checked > 300);
}

#[test]
fn verify_rejects_mismatches() {
    let dir = tempfile::tempdir().unwrap();
    let o = dir.path().to_str().unwrap();
    run(&["realize", "e,1,12,2", "--dim", "1", "-o", o]);
    let w = dir.path().join("word.json");
    let (status, out, _) = run(&["verify", "e,1,2", w.to_str().unwrap()]);
    assert_eq!((status, out.as_str()), (1, "INVALID word: word\n"));
    let g = dir.path().join("grid.json");
    assert_eq!(run(&["verify", "e,1,2,12,3", g.to_str().unwrap()]).0, 1);
    fs::write(dir.path().join("odd.json"), "{\"foo\": 1}").unwrap();
    assert_eq!(run(&["verify", "e,1", dir.path().join("odd.json").to_str().unwrap()]).0, 64);
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["dim", FIVE_PAIRS][..],
        &["enumerate", "-n", "3"][..],
        &["--json", "graph", TEN_WORDS][..],
        &["check", "e,12,13,23,123,14"][..],
    ] {
        assert_eq!(run(args), run(args));
    }
}
