//! Golden JSON reports. Regenerate with `UPDATE_GOLDEN=1 cargo test`.

use dnull_replay::{replay_all, ReplayConfig};

fn check(n: u32) {
    let path = format!("{}/tests/data/golden_n{n}.json", env!("CARGO_MANIFEST_DIR"));
    let text = replay_all(&ReplayConfig::new(n)).unwrap().to_json_string();
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, &text).unwrap();
        return;
    }
    let golden = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"));
    assert!(golden == text, "report for n = {n} differs from {path}");
    let parsed: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(parsed["format"], "dnull-elimination-report");
    assert_eq!(parsed["verdict"], "H-locally-constant");
}

#[test]
fn golden_four() {
    check(4);
}

#[test]
fn golden_five() {
    check(5);
}

#[test]
fn golden_six() {
    check(6);
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let a = replay_all(&ReplayConfig::new(5)).unwrap().to_json_string();
    let b = replay_all(&ReplayConfig::new(5)).unwrap().to_json_string();
    assert_eq!(a, b);
}
