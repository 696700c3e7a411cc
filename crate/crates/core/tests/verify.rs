use std::process::Command;

use f4moufang::verify::{anchor, checks, run, Format, Report, Status, Suite, SuiteConfig};
use f4moufang::Eq3Slot;

fn small(suites: Vec<Suite>) -> SuiteConfig {
    SuiteConfig {
        samples: 6,
        max_degree: 2,
        suites,
        ..SuiteConfig::default()
    }
}

#[test]
fn fields_suite_passes() {
    let r = run(&small(vec![Suite::Fields]));
    assert!(r.passed());
    assert!(
        r.records.iter().all(|x| x.status == Status::Pass),
        "{}",
        r.emit(Format::Text, false)
    );
}

#[test]
fn slot_two_breaks_associativity_and_skips_later_suites() {
    let cfg = SuiteConfig {
        eq3_slot: Eq3Slot::Two,
        ..small(vec![Suite::RootGroups, Suite::Quadrangle])
    };
    let r = run(&cfg);
    let a = r.get("associativity").unwrap();
    assert_eq!(a.status, Status::Fail);
    assert!(a.counterexample.as_deref().unwrap().contains("(gh)k"));
    assert_eq!(r.get("polarity_involution").unwrap().status, Status::Skip);
    assert!(!r.passed());
}

#[test]
fn same_config_same_body() {
    let cfg = small(vec![Suite::Fields, Suite::RootGroups]);
    assert_eq!(run(&cfg).body(), run(&cfg).body());
}

#[test]
fn anchors_and_output() {
    assert!(anchor("polarity_involution").contains("Eqs. (5)-(8)"));
    for (_, name) in checks() {
        assert!(name == "instance" || anchor(name) != "plumbing", "{name}");
    }
    let empty = Report::default();
    assert_eq!(empty.emit(Format::Text, true).lines().count(), 1);
    assert_eq!(empty.emit(Format::Jsonl, true), "");
}

#[test]
fn cli_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_f4verify");
    let dir = std::env::temp_dir().join("f4verify-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.txt");
    std::fs::write(&bad, "delta = s +\n").unwrap();
    let out = Command::new(bin)
        .args(["verify-fields", "--instance"])
        .arg(&bad)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 1"));

    let wrong = dir.join("alpha.txt");
    std::fs::write(&wrong, "delta = s + t\nphiE = e + s\nbeta = s\nalpha = s\n").unwrap();
    let out = Command::new(bin)
        .args(["verify-fields", "--instance"])
        .arg(&wrong)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let args = [
        "verify-fields",
        "--samples",
        "4",
        "--survey",
        "--format",
        "jsonl",
        "--instance",
    ];
    let out = Command::new(bin).args(args).arg(&wrong).output().unwrap();
    assert!(String::from_utf8_lossy(&out.stdout).contains("alpha_is_phi_beta"));

    let out = Command::new(bin)
        .args(["verify-fields", "--samples", "4"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}
