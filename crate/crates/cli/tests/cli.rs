use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use motspec_cli::fixtures;
use motspec_core::ResolutionDatum;

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn motspec(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_motspec")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn shipped_files_match_builders() {
    for f in fixtures::all().unwrap() {
        let text = std::fs::read_to_string(data(&format!("{}.json", f.name))).unwrap();
        assert_eq!(ResolutionDatum::from_json_str(&text).unwrap(), f.datum, "{}", f.name);
    }
}

#[test]
fn spectrum_of_cusp() {
    let o = motspec(&["spectrum", "--datum", data("cusp.json").to_str().unwrap(), "--phi"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("Sp: t^(5/6) + t^(7/6)"), "{}", stdout(&o));
}

#[test]
fn zeta_truncation() {
    let o = motspec(&["zeta", "--datum", data("x2.json").to_str().unwrap(), "--truncate", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(!stdout(&o).trim().is_empty());
}

#[test]
fn iterated_of_joint() {
    let o = motspec(&["iterated", "--joint", data("x2y-y.json").to_str().unwrap(), "--phi"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("class: -[1/2,1/2](0,0)"), "{}", stdout(&o));
}

#[test]
fn ts_cusp() {
    let o = motspec(&["ts", "--exponents", "3,2"]);
    assert_eq!(stdout(&o).trim(), "t^(5/6) + t^(7/6)");
}

#[test]
fn convolve_files() {
    let o = motspec(&[
        "convolve",
        "--left",
        data("phi_x2.json").to_str().unwrap(),
        "--right",
        data("phi_y3.json").to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let c = motspec_core::datum::class_from_json_str(&stdout(&o)).unwrap();
    assert_eq!(c, motspec_cli::ts::quasihomog_class(&[2, 3]).unwrap());
}

#[test]
fn steenbrink_report() {
    let run = |n: &str, fg: &str| {
        motspec(&[
            "steenbrink",
            "--f",
            data("x2y.json").to_str().unwrap(),
            "--fg",
            data(fg).to_str().unwrap(),
            "--joint",
            data("x2y-y.json").to_str().unwrap(),
            "--N",
            n,
        ])
    };
    let o = run("3", "d3.json");
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("equal"));
    let o = run("1", "d1.json");
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("out of hypothesis"));
    // a mismatched pair inside the hypothesis range fails the check
    let o = run("4", "d3.json");
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("differ by"));
}

#[test]
fn fixtures_rederive() {
    let o = motspec(&["fixtures", "--rederive"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(!stdout(&o).contains("FAIL"));
}

#[test]
fn input_errors_exit_2() {
    let dir = std::env::temp_dir().join(format!("motspec-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.json");
    std::fs::write(&bad, r#"{"dimension": 2, "local": true, "functions": ["g"], "components": [{"id": "E", "Ng": -1, "nu": 1}], "strata": []}"#).unwrap();
    let o = motspec(&["spectrum", "--datum", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("components[0].Ng"));
    std::fs::write(&bad, "{\"dimension\": 2,").unwrap();
    assert_eq!(motspec(&["spectrum", "--datum", bad.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(motspec(&["spectrum", "--datum", dir.join("missing.json").to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(motspec(&["check", "--suite", "nope"]).status.code(), Some(2));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn check_exits_zero() {
    let o = motspec(&["check", "--suite", "steenbrink"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}
