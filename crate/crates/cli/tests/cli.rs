//! End-to-end runs of the `hwl` binary: exit codes, file formats, determinism.

use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn hwl(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hwl"))
        .args(args)
        .current_dir(dir)
        .env("HWL_THREADS", "2")
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn json(path: &Path) -> Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

/// Value of the transformed CSV at the abscissa nearest `x`.
fn probe(path: &Path, x: f64) -> f64 {
    let text = std::fs::read_to_string(path).unwrap();
    text.lines()
        .skip(1)
        .map(|l| {
            let (a, b) = l.split_once(',').unwrap();
            (a.parse::<f64>().unwrap(), b.parse::<f64>().unwrap())
        })
        .min_by(|a, b| (a.0 - x).abs().total_cmp(&(b.0 - x).abs()))
        .unwrap()
        .1
}

#[test]
fn gen_writes_one_row_per_sample() {
    let dir = tempfile::tempdir().unwrap();
    let out = hwl(
        &[
            "gen",
            "--wavelet",
            "haar-wavelet",
            "--grid",
            "-64:64:0.00390625",
            "--out",
            "psi.csv",
        ],
        dir.path(),
    );
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let text = std::fs::read_to_string(dir.path().join("psi.csv")).unwrap();
    assert_eq!(text.lines().next(), Some("x,value"));
    assert_eq!(text.lines().count(), 32769 + 1);

    let out = hwl(
        &[
            "gen",
            "--wavelet",
            "spline-wavelet,3",
            "--grid",
            "-8:8:0.0625",
            "--out",
            "s.csv",
        ],
        dir.path(),
    );
    assert_eq!(code(&out), 0);
}

#[test]
fn usage_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path();
    assert_eq!(
        code(&hwl(
            &[
                "gen",
                "--wavelet",
                "nosuch",
                "--grid",
                "0:1:0.1",
                "--out",
                "x.csv"
            ],
            p
        )),
        2
    );
    assert_eq!(
        code(&hwl(
            &[
                "gen",
                "--wavelet",
                "box",
                "--grid",
                "1:0:0.1",
                "--out",
                "x.csv"
            ],
            p
        )),
        2
    );
    assert_eq!(
        code(&hwl(&["hilbert", "--method", "pv", "--out", "x.csv"], p)),
        2
    );
    assert_eq!(
        code(&hwl(
            &["hilbert", "--method", "fast", "--in", "a", "--out", "b"],
            p
        )),
        2
    );
    assert_eq!(code(&hwl(&["figure", "--id", "4", "--out", "f.svg"], p)), 2);
    assert_eq!(code(&hwl(&["nosuch"], p)), 2);
}

#[test]
fn data_errors_exit_3() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path();
    assert_eq!(
        code(&hwl(
            &[
                "hilbert",
                "--method",
                "pv",
                "--in",
                "missing.csv",
                "--out",
                "o.csv"
            ],
            p
        )),
        3
    );
    std::fs::write(p.join("bad.csv"), "x,value\n0,1\n2,1\n1,1\n").unwrap();
    let out = hwl(
        &[
            "hilbert", "--method", "spectral", "--in", "bad.csv", "--out", "o.csv",
        ],
        p,
    );
    assert_eq!(code(&out), 3);
    assert!(String::from_utf8_lossy(&out.stderr).contains("row"));
    std::fs::write(p.join("empty.csv"), "").unwrap();
    assert_eq!(
        code(&hwl(
            &[
                "analyze",
                "moments",
                "--in",
                "empty.csv",
                "--json",
                "m.json"
            ],
            p
        )),
        3
    );
}

#[test]
fn pv_pipeline_matches_closed_form_and_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path();
    assert_eq!(
        code(&hwl(
            &[
                "gen",
                "--wavelet",
                "haar-wavelet",
                "--grid",
                "-64:64:0.00390625",
                "--out",
                "psi.csv"
            ],
            p
        )),
        0
    );
    assert_eq!(
        code(&hwl(
            &["hilbert", "--method", "pv", "--in", "psi.csv", "--out", "h1.csv"],
            p
        )),
        0
    );
    let expected = (0.75f64).ln() / std::f64::consts::PI;
    assert!((probe(&p.join("h1.csv"), 2.0) - expected).abs() < 5e-3);

    let sidecar = json(&p.join("h1.csv.json"));
    assert_eq!(sidecar["kind"], "hilbert");
    assert_eq!(sidecar["method"], "pv");

    // a different worker count gives the same bytes
    let out = Command::new(env!("CARGO_BIN_EXE_hwl"))
        .args([
            "hilbert", "--method", "pv", "--in", "psi.csv", "--out", "h2.csv",
        ])
        .current_dir(p)
        .env("HWL_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(code(&out), 0);
    assert_eq!(
        std::fs::read(p.join("h1.csv")).unwrap(),
        std::fs::read(p.join("h2.csv")).unwrap()
    );
    assert_eq!(
        std::fs::read(p.join("h1.csv.json")).unwrap(),
        std::fs::read(p.join("h2.csv.json")).unwrap()
    );

    assert_eq!(
        code(&hwl(
            &[
                "analyze", "decay", "--in", "h1.csv", "--window", "4:64", "--expect", "2",
                "--json", "d.json"
            ],
            p
        )),
        0
    );
    let d = json(&p.join("d.json"));
    assert_eq!(d["kind"], "decay_fit");
    assert_eq!(d["pass"], true);
    assert!((d["exponent"].as_f64().unwrap() - 2.0).abs() < 0.1);

    assert_eq!(
        code(&hwl(
            &[
                "analyze",
                "moments",
                "--in",
                "h1.csv",
                "--max-order",
                "3",
                "--json",
                "m.json"
            ],
            p
        )),
        0
    );
    let m = json(&p.join("m.json"));
    assert!(m["vanishing_count"].as_u64().unwrap() >= 1);
}

#[test]
fn padding_changes_the_tail() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path();
    assert_eq!(
        code(&hwl(
            &[
                "gen",
                "--wavelet",
                "bspline-scaling,3",
                "--grid",
                "-32:32:0.015625",
                "--out",
                "phi.csv"
            ],
            p
        )),
        0
    );
    assert_eq!(
        code(&hwl(
            &[
                "hilbert", "--method", "spectral", "--pad", "1", "--in", "phi.csv", "--out",
                "p1.csv"
            ],
            p
        )),
        0
    );
    assert_eq!(
        code(&hwl(
            &[
                "hilbert", "--method", "spectral", "--pad", "16", "--in", "phi.csv", "--out",
                "p16.csv"
            ],
            p
        )),
        0
    );
    let (a, b) = (
        probe(&p.join("p1.csv"), 24.0),
        probe(&p.join("p16.csv"), 24.0),
    );
    let exact = 1.0 / (std::f64::consts::PI * 24.0);
    assert!((b - exact).abs() < 0.01 * exact);
    assert!((a - b).abs() > 0.1 * exact, "pad 1: {a}, pad 16: {b}");
    assert_eq!(json(&p.join("p16.csv.json"))["pad_factor"], 16);
    assert_eq!(
        code(&hwl(
            &[
                "hilbert", "--method", "spectral", "--pad", "0", "--in", "phi.csv", "--out",
                "p0.csv"
            ],
            p
        )),
        2
    );
}

#[test]
fn bedrosian_reports() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path();
    let args = [
        "analyze",
        "bedrosian",
        "--window",
        "sinc2",
        "--omega0",
        "3",
        "--grid",
        "-128:128:0.0078125",
        "--json",
        "b.json",
    ];
    assert_eq!(code(&hwl(&args, p)), 0);
    let b = json(&p.join("b.json"));
    assert_eq!(b["kind"], "bedrosian");
    assert_eq!(b["pass"], true);
    assert!(b["residual"].as_f64().unwrap() < 1e-4);

    // a failing check still exits 0 and reports pass = false
    let args = [
        "analyze",
        "bedrosian",
        "--window",
        "sinc2",
        "--omega0",
        "1",
        "--grid",
        "-128:128:0.0078125",
        "--json",
        "b1.json",
    ];
    assert_eq!(code(&hwl(&args, p)), 0);
    assert_eq!(json(&p.join("b1.json"))["pass"], false);

    let args = [
        "analyze",
        "bedrosian",
        "--window",
        "sinc2",
        "--omega0",
        "3",
        "--grid",
        "-8:8:0.0078125",
        "--json",
        "b2.json",
    ];
    assert_eq!(code(&hwl(&args, p)), 3);
}

#[test]
fn certificate_tail_limit_partition_sobolev() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path();
    let grid = "-32:32:0.0078125";
    assert_eq!(
        code(&hwl(
            &[
                "gen",
                "--wavelet",
                "bspline-scaling,3",
                "--grid",
                grid,
                "--out",
                "phi.csv"
            ],
            p
        )),
        0
    );
    assert_eq!(
        code(&hwl(
            &["hilbert", "--method", "spectral", "--in", "phi.csv", "--out", "hphi.csv"],
            p
        )),
        0
    );

    assert_eq!(
        code(&hwl(
            &[
                "analyze",
                "certificate",
                "--psi",
                "phi.csv",
                "--hpsi",
                "hphi.csv",
                "--order",
                "0",
                "--json",
                "c0.json"
            ],
            p
        )),
        0
    );
    let c0 = json(&p.join("c0.json"));
    assert_eq!(c0["stable"], true);
    assert!(c0["constant_half_span"].is_number() && c0["empirical_constant"].is_number());
    assert_eq!(
        code(&hwl(
            &[
                "analyze",
                "certificate",
                "--psi",
                "phi.csv",
                "--hpsi",
                "hphi.csv",
                "--order",
                "1",
                "--json",
                "c1.json"
            ],
            p
        )),
        0
    );
    assert_eq!(json(&p.join("c1.json"))["pass"], false);
    assert_eq!(
        code(&hwl(
            &[
                "analyze",
                "certificate",
                "--psi",
                "phi.csv",
                "--hpsi",
                "hphi.csv",
                "--order",
                "-1",
                "--json",
                "c.json"
            ],
            p
        )),
        2
    );

    assert_eq!(
        code(&hwl(
            &[
                "analyze",
                "tail-limit",
                "--in",
                "phi.csv",
                "--transform",
                "hphi.csv",
                "--x",
                "24",
                "--json",
                "t.json"
            ],
            p
        )),
        0
    );
    let t = json(&p.join("t.json"));
    assert!((t["predicted"].as_f64().unwrap() - 1.0 / std::f64::consts::PI).abs() < 1e-9);

    let args = [
        "analyze",
        "partition",
        "--scaling",
        "bspline-scaling,3",
        "--k",
        "50",
        "--grid",
        "-48:48:0.0078125",
        "--central",
        "40",
        "--json",
        "pu.json",
    ];
    assert_eq!(code(&hwl(&args, p)), 0);
    assert_eq!(json(&p.join("pu.json"))["pass"], true);
    let args = [
        "analyze",
        "partition",
        "--scaling",
        "haar-wavelet",
        "--grid",
        "-8:8:0.0078125",
        "--json",
        "pw.json",
    ];
    assert_eq!(code(&hwl(&args, p)), 3);

    assert_eq!(
        code(&hwl(
            &[
                "gen",
                "--wavelet",
                "spline-wavelet,3",
                "--grid",
                grid,
                "--out",
                "psi.csv"
            ],
            p
        )),
        0
    );
    assert_eq!(
        code(&hwl(
            &[
                "analyze",
                "sobolev",
                "--in",
                "psi.csv",
                "--min-order",
                "2",
                "--json",
                "s.json"
            ],
            p
        )),
        0
    );
    let s = json(&p.join("s.json"));
    assert_eq!(s["kind"], "sobolev_estimate");
    assert_eq!(s["smoothness_order"], 2);
}

#[test]
fn figures() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path();
    for (id, panels) in [("1", 2), ("2", 1), ("3", 4)] {
        let name = format!("fig{id}.svg");
        assert_eq!(code(&hwl(&["figure", "--id", id, "--out", &name], p)), 0);
        let svg = std::fs::read_to_string(p.join(&name)).unwrap();
        assert!(svg.starts_with("<svg"));
        assert_eq!(svg.matches("class=\"panel\"").count(), panels);
    }
    let a = std::fs::read(p.join("fig3.svg")).unwrap();
    assert_eq!(
        code(&hwl(&["figure", "--id", "3", "--out", "again.svg"], p)),
        0
    );
    assert_eq!(a, std::fs::read(p.join("again.svg")).unwrap());
}
