use std::path::Path;
use std::process::{Command, Output};

fn stringform(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_stringform"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn data(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

#[test]
fn ricci_reports_eigenvalues_and_region() {
    let o = stringform(&["ricci", "--alpha1", "3", "--alpha2", "1", "--exact"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "ric 2/9 34/9 34/9\nregion interior\n");

    let o = stringform(&["ricci", "--alpha1", "3/4", "--alpha2", "0.6", "--exact"]);
    assert!(stdout(&o).ends_with("region boundary\n"), "{}", stdout(&o));
}

#[test]
fn cs_prints_the_integral() {
    let o = stringform(&[
        "cs", "--class", "L", "--alpha1", "2", "--alpha2", "1", "--exact",
    ]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("integral_H -25/16\n"), "{}", stdout(&o));

    let o = stringform(&[
        "cs",
        "--class",
        "R",
        "--alpha1",
        "1",
        "--alpha2",
        "1",
        "--chirality",
        "right",
    ]);
    let text = stdout(&o);
    assert!(
        text.contains("chirality right\n") && text.contains("integral_H 1\n"),
        "{text}"
    );
}

#[test]
fn einv_prints_a_residue() {
    for (class, want) in [("L", "23/24"), ("dD4", "0"), ("R+5", "1/4")] {
        let o = stringform(&["einv", "--class", class]);
        assert_eq!(stdout(&o), format!("{want}\n"));
    }
}

#[test]
fn invalid_input_exits_with_two() {
    for args in [
        &["einv", "--class", "Q"][..],
        &["ricci", "--alpha1", "-1", "--alpha2", "1"],
        &["ricci", "--alpha1", "abc", "--alpha2", "1"],
        &[
            "cs",
            "--class",
            "L",
            "--alpha1",
            "1",
            "--alpha2",
            "1",
            "--chirality",
            "up",
        ],
        &["torsion-check", "--trials", "0"],
        &["frobnicate"],
    ] {
        let o = stringform(args);
        assert_eq!(
            o.status.code(),
            Some(2),
            "{args:?}: {}",
            String::from_utf8_lossy(&o.stderr)
        );
    }
}

#[test]
fn sweep_matches_golden_file() {
    let o = stringform(&["sweep", "--spec", &data("small_sweep.json")]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let golden = std::fs::read_to_string(data("small_sweep.csv")).unwrap();
    assert_eq!(stdout(&o), golden);
}

#[test]
fn sweep_is_deterministic_across_thread_counts() {
    let dir = tempfile::tempdir().unwrap();
    let spec = dir.path().join("spec.json");
    std::fs::write(
        &spec,
        r#"{"alpha1": {"min": 0.2, "max": 3.0, "steps": 41}, "alpha2": {"min": 0.2, "max": 3.0, "steps": 41},
            "classes": ["L", "R"], "chirality": "right", "format": "json"}"#,
    )
    .unwrap();
    let run = |threads: &str, name: &str| {
        let out = dir.path().join(name);
        let status = Command::new(env!("CARGO_BIN_EXE_stringform"))
            .env("RAYON_NUM_THREADS", threads)
            .args([
                "sweep",
                "--spec",
                spec.to_str().unwrap(),
                "--out",
                out.to_str().unwrap(),
            ])
            .status()
            .unwrap();
        assert!(status.success());
        std::fs::read(out).unwrap()
    };
    let one = run("1", "a.json");
    assert_eq!(one, run("4", "b.json"));
    let rows: serde_json::Value = serde_json::from_slice(&one).unwrap();
    assert_eq!(rows.as_array().unwrap().len(), 41 * 41);
}

#[test]
fn sweep_rejects_bad_specs() {
    let dir = tempfile::tempdir().unwrap();
    for (k, text) in [
        r#"{"alpha1": 1}"#,
        r#"{"alpha1": 1, "alpha2": 1, "colour": "red"}"#,
        r#"{"alpha1": {"min": 1, "max": 2, "steps": 1}, "alpha2": 1}"#,
        r#"{"alpha1": 1, "alpha2": 1, "classes": ["X"]}"#,
        "not json",
    ]
    .iter()
    .enumerate()
    {
        let spec = dir.path().join(format!("{k}.json"));
        std::fs::write(&spec, text).unwrap();
        let o = stringform(&["sweep", "--spec", spec.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(2), "{text}");
    }
    let o = stringform(&["sweep", "--spec", "/nonexistent/spec.json"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn torsion_check_reports_json() {
    let o = stringform(&["torsion-check", "--trials", "20", "--seed", "3"]);
    assert!(o.status.success());
    let report: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(report["trials"], 20);
    assert!(report["max_formula_residual"].as_f64().unwrap() < 1e-10);
    assert_eq!(report["maximality"]["violations"], 0);
}

#[test]
fn torsion_check_rejects_non_lie_brackets() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    // [e1, e2] = e1 and [e2, e3] = e2 with [e1, e3] = e3 fail Jacobi.
    std::fs::write(
        &path,
        r#"{"dim": 3, "brackets": [[1, 2, [1, 0, 0]], [2, 3, [0, 1, 0]], [1, 3, [0, 0, 1]]]}"#,
    )
    .unwrap();
    let o = stringform(&[
        "torsion-check",
        "--trials",
        "5",
        "--algebra",
        path.to_str().unwrap(),
    ]);
    assert_eq!(
        o.status.code(),
        Some(2),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );

    std::fs::write(
        &path,
        r#"{"dim": 3, "brackets": [[1, 2, [0, 1, 0]], [1, 3, [0, 0, 2]]]}"#,
    )
    .unwrap();
    let o = stringform(&[
        "torsion-check",
        "--trials",
        "5",
        "--algebra",
        path.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn figures_writes_all_files() {
    let dir = tempfile::tempdir().unwrap();
    let o = stringform(&["figures", "--outdir", dir.path().to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let read = |name: &str| std::fs::read_to_string(dir.path().join(name)).unwrap();

    let region = read("fig1a_region.csv");
    assert!(region.starts_with("alpha1,alpha2,ric1,ric2,ric3,ric_class,H_L,curve1,curve2,curve3\n"));
    assert_eq!(region.lines().count(), 1 + 281 * 281);

    let contours = read("fig1b_contours.csv");
    assert!(contours.starts_with("level,alpha1,alpha2\n"));
    assert!(
        contours.lines().any(|l| l == "-1,1,1"),
        "the -1 level is the round point"
    );

    let left = read("fig2a_left_berger.csv");
    let right = read("fig2b_right_berger.csv");
    assert!(left.starts_with("alpha1,H_L-1,H_L,H_dD4,H_R,H_R+1\n"));
    let row = |text: &str, a: f64| -> Vec<f64> {
        text.lines()
            .skip(1)
            .map(|l| {
                l.split(',')
                    .map(|v| v.parse().unwrap())
                    .collect::<Vec<f64>>()
            })
            .find(|r| (r[0] - a).abs() < 1e-15)
            .expect("sample present")
    };
    let r = row(&left, 1.0);
    assert_eq!(r[1..], [-2.0, -1.0, 0.0, 1.0, 2.0]);
    let s = row(&right, std::f64::consts::FRAC_1_SQRT_2);
    assert!(s[2].abs() < 1e-12 && (s[4] - 2.0).abs() < 1e-12, "{s:?}");
}
