use std::path::PathBuf;
use std::process::{Command, Output};

fn sympsum(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sympsum"))
        .args(args)
        .output()
        .expect("run sympsum")
}

fn kn_script() -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../scripts/kn.geo")
        .display()
        .to_string()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn build_symbolic_prints_closed_forms() {
    let o = sympsum(&["build", &kn_script(), "--symbolic"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = stdout(&o);
    let lines: Vec<_> = text.lines().take(4).collect();
    assert_eq!(
        lines,
        [
            "c2 = n^7 + 12n^5 - 12n^4 + 6n^3 + 22",
            "c1^2 = 3n^7 + 20n^5 - 24n^4 + 6n^3 + 2",
            "chi_h = (1/3)n^7 + (8/3)n^5 - 3n^4 + n^3 + 2",
            "sigma = (1/3)n^7 - (4/3)n^5 - 2n^3 - 14",
        ]
    );
}

#[test]
fn build_numeric() {
    let o = sympsum(&["build", &kn_script(), "--n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("chi_h = 1163\n"));
    assert!(text.contains("sigma = 337\n"));
}

#[test]
fn build_errors() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.geo");
    std::fs::write(&bad, "let Z = blowup(\n").unwrap();
    let o = sympsum(&["build", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains(":1:15: syntax error"), "{}", stderr(&o));

    let failing = dir.path().join("neg.geo");
    std::fs::write(&failing, "let A = blowup(T4, k = 1 - n)\n").unwrap();
    let o = sympsum(&["build", failing.to_str().unwrap(), "--n", "4"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains(":1:9: evaluation error"));

    let o = sympsum(&["build", &kn_script(), "--n", "1"]);
    assert_eq!(o.status.code(), Some(2));
    let o = sympsum(&["build", "/nonexistent/x.geo"]);
    assert_eq!(o.status.code(), Some(2));
    let o = sympsum(&["build", &kn_script(), "--n", "3", "--symbolic"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_paper_passes_with_warning() {
    let o = sympsum(&["verify-paper"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("WARN [numeric] table K_3 sigma: expected 227, got 337"));
    assert!(!text.contains("FAIL "));
    assert!(stderr(&o).contains("warning:"));
}

#[test]
fn verify_paper_json() {
    let o = sympsum(&["verify-paper", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let rows: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let rows = rows.as_array().unwrap();
    assert!(rows.len() > 40);
    for r in rows {
        let keys: Vec<_> = r.as_object().unwrap().keys().cloned().collect();
        assert_eq!(keys.len(), 5);
        for k in ["name", "expected", "got", "pass", "note"] {
            assert!(r.get(k).is_some(), "missing {k}");
        }
    }
    let failing: Vec<_> = rows.iter().filter(|r| r["pass"] == false).collect();
    assert_eq!(failing.len(), 1);
    assert_eq!(failing[0]["expected"], "227");
    assert_eq!(failing[0]["got"], "337");
}

#[test]
fn geography_csv_and_svg() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("out.csv");
    let svg = dir.path().join("out.svg");
    let args = [
        "geography",
        "--n-min",
        "2",
        "--n-max",
        "6",
        "--csv",
        csv.to_str().unwrap(),
        "--svg",
        svg.to_str().unwrap(),
    ];
    let o = sympsum(&args);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = std::fs::read_to_string(&csv).unwrap();
    let lines: Vec<_> = text.lines().collect();
    assert_eq!(lines[0], "n,e,sigma,c1sq,chi_h,ratio,bmy_gap,side");
    assert_eq!(lines.len(), 6);
    let k4: Vec<_> = lines[3].split(',').collect();
    assert_eq!((k4[0], k4[4]), ("4", "7490"));
    assert!(!text.contains('\r') && !text.contains(",\n"));

    let first_svg = std::fs::read(&svg).unwrap();
    assert!(String::from_utf8_lossy(&first_svg).contains("<svg"));
    let o = sympsum(&args);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(std::fs::read_to_string(&csv).unwrap(), text);
    assert_eq!(std::fs::read(&svg).unwrap(), first_svg);
}

#[test]
fn geography_stdout_is_deterministic() {
    let a = sympsum(&["geography", "--n-min", "2", "--n-max", "4"]);
    let b = sympsum(&["geography", "--n-min", "2", "--n-max", "4"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(stdout(&a).lines().count(), 4);
    let o = sympsum(&["geography", "--n-min", "1", "--n-max", "4"]);
    assert_eq!(o.status.code(), Some(2));
    let o = sympsum(&["geography", "--n-min", "5", "--n-max", "4"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn exotic_family() {
    let o = sympsum(&["exotic", "--n", "3", "--count", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("10 entries: 5 symplectic, 5 non-symplectic, 0 collisions"));
    let o = sympsum(&["exotic", "--n", "3", "--count", "0"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn usage_errors() {
    assert_eq!(sympsum(&[]).status.code(), Some(2));
    assert_eq!(sympsum(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(sympsum(&["exotic", "--n", "x", "--count", "1"]).status.code(), Some(2));
}
