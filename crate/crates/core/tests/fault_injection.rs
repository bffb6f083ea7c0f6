//! Corrupting any single stored coefficient must flip `verify` to failure.

use std::process::Command;

use qnarayana::cli::{execute, parse_args, EXIT_FAIL, EXIT_PASS};
use qnarayana::verify::{registry, run_checks, Fixtures, VerifyConfig};
use qnarayana::{Integer, Polynomial};

/// Every fixture set obtained by adding one to exactly one coefficient.
fn single_mutations(base: &Fixtures) -> Vec<(String, Fixtures)> {
    let mut out = Vec::new();
    for (label, len) in [("small_c", base.small_c.len()), ("narayana", base.narayana.len())] {
        for n in 0..len {
            let poly = if label == "small_c" { &base.small_c[n] } else { &base.narayana[n] };
            for i in 0..poly.coeffs().len() {
                let mut coeffs = poly.coeffs().to_vec();
                coeffs[i] += Integer::from(1);
                let mutated = Polynomial::new(poly.var(), coeffs);
                let mut f = base.clone();
                if label == "small_c" {
                    f.small_c[n] = mutated;
                } else {
                    f.narayana[n] = mutated;
                }
                out.push((format!("{label}[{n}] coefficient {i}"), f));
            }
        }
    }
    out
}

#[test]
fn library_detects_every_mutation() {
    let base = Fixtures::default();
    let config = VerifyConfig::default();
    let checks: Vec<_> = registry().into_iter().filter(|c| c.name().starts_with("first_terms")).collect();
    assert!(run_checks(&checks, &base, &config).iter().all(|o| o.passed));
    let mutations = single_mutations(&base);
    assert_eq!(mutations.len(), 2 * (1 + 1 + 2 + 3 + 4 + 5));
    for (what, fixtures) in mutations {
        let failed = run_checks(&checks, &fixtures, &config).iter().filter(|o| !o.passed).count();
        assert_eq!(failed, 1, "{what}");
    }
}

#[test]
fn verify_exit_code_flips_in_process() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("fixtures.json");
    let path_str = path.to_str().unwrap();
    let run = || {
        let cmd = parse_args(["qnarayana", "verify", "--all", "--fixtures", path_str]).unwrap();
        execute(&cmd, &mut Vec::new()).unwrap()
    };
    std::fs::write(&path, Fixtures::default().to_json()).unwrap();
    assert_eq!(run(), EXIT_PASS);
    for (what, fixtures) in single_mutations(&Fixtures::default()) {
        std::fs::write(&path, fixtures.to_json()).unwrap();
        assert_eq!(run(), EXIT_FAIL, "{what}");
    }
}

#[test]
fn verify_exit_code_flips_in_binary() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("fixtures.json");
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_qnarayana"))
            .args(["verify", "--all", "--fixtures"])
            .arg(&path)
            .output()
            .unwrap()
    };
    std::fs::write(&path, Fixtures::default().to_json()).unwrap();
    assert_eq!(run().status.code(), Some(0));
    let mut fixtures = Fixtures::default();
    fixtures.small_c[5] = Polynomial::parse("1+2t+4t^2+3t^3+t^4", fixtures.small_c[5].var()).unwrap();
    std::fs::write(&path, fixtures.to_json()).unwrap();
    let o = run();
    assert_eq!(o.status.code(), Some(1));
    let text = String::from_utf8(o.stdout).unwrap();
    assert!(text.lines().any(|l| l.starts_with("FAIL first_terms_c")), "{text}");
}
