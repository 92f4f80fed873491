//! Acceptance criterion 10: two verification runs over the golden corpus
//! with the same seed produce byte-identical reports.

use std::process::Command;

#[test]
fn acceptance_10_verify_determinism() {
    let bin = env!("CARGO_BIN_EXE_thetacut");
    let dir = tempfile::tempdir().unwrap();
    let out1 = dir.path().join("run1.json");
    let out2 = dir.path().join("run2.json");
    for out in [&out1, &out2] {
        let status = Command::new(bin)
            .args(["verify", "--seed", "0", "--out"])
            .arg(out)
            .status()
            .expect("spawn thetacut verify");
        assert_eq!(status.code(), Some(0), "verify run failed");
    }
    let a = std::fs::read(&out1).unwrap();
    let b = std::fs::read(&out2).unwrap();
    assert!(!a.is_empty());
    assert_eq!(a, b, "verify reports differ between identical runs");
    println!("ACCEPTANCE 10 (byte-identical corpus verification): PASS");
}
