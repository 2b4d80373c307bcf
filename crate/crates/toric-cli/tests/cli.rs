use std::path::PathBuf;
use std::process::{Command, Output};

fn fixtures() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn toric(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_toric"))
        .args(args)
        .env("TORIC_FIXTURES", fixtures())
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

/// Data rows of `--format rows` output.
fn rows(o: &Output) -> Vec<Vec<String>> {
    stdout(o)
        .lines()
        .filter(|l| !l.starts_with('#') && !l.is_empty())
        .map(|l| l.split('\t').map(String::from).collect())
        .collect()
}

fn meta(o: &Output, key: &str) -> Option<String> {
    let prefix = format!("# {key}: ");
    stdout(o).lines().find_map(|l| l.strip_prefix(&prefix).map(String::from))
}

#[test]
fn wps_frobenius_class_is_acyclic() {
    let o = toric(&["cohomology", "wps235", "--class=-11", "--format", "rows"]);
    assert_eq!(o.status.code(), Some(0));
    let r = rows(&o);
    assert_eq!(r.len(), 3);
    assert!(r.iter().all(|row| row[1] == "0"));
    assert_eq!(meta(&o, "class").as_deref(), Some("(-11)"));
    // the same class given through --divisor
    let d = toric(&["cohomology", "wps235", "--divisor=-11", "--format", "rows"]);
    assert_eq!(rows(&d), r);
}

#[test]
fn neighbours_of_frobenius_number_have_cohomology() {
    for k in ["-10", "-12"] {
        let o = toric(&["cohomology", "wps235", "--class", k, "--format", "rows"]);
        assert!(rows(&o).iter().any(|row| row[1] != "0"), "class {k}");
    }
}

#[test]
fn fixture_lookup_is_case_insensitive_and_paths_work() {
    let a = toric(&["gale", "P2", "--format", "rows"]);
    let b = toric(&["gale", "p2", "--format", "rows"]);
    let path = fixtures().join("P2.toml");
    let c = toric(&["gale", path.to_str().unwrap(), "--format", "rows"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), stdout(&b));
    assert_eq!(stdout(&a), stdout(&c));
}

#[test]
fn surface_classification_has_one_residual() {
    let o = toric(&["classify-surface", "f3", "--window", "15", "--format", "rows"]);
    assert_eq!(o.status.code(), Some(0));
    let r = rows(&o);
    assert_eq!(r.len(), 31 * 31);
    let residual: Vec<_> = r.iter().filter(|row| row[2] == "residual_with_vanishing").collect();
    assert_eq!(residual.len(), 1);
    assert_eq!((residual[0][0].as_str(), residual[0][1].as_str()), ("-4", "-2"));
}

#[test]
fn mcm_enumeration_of_first_cone() {
    let o = toric(&["mcm-enumerate", "mcm1", "--format", "rows"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(rows(&o).len(), 19);
    assert_eq!(meta(&o, "stable").as_deref(), Some("true"));
}

#[test]
fn output_is_deterministic() {
    let args = ["mcm-enumerate", "mcm2", "--format", "rows"];
    assert_eq!(stdout(&toric(&args)), stdout(&toric(&args)));
    let args = ["residual", "f3", "--stratum", "2,4", "--window", "8"];
    assert_eq!(stdout(&toric(&args)), stdout(&toric(&args)));
}

#[test]
fn infinite_dimension_exits_with_two() {
    let dir = std::env::temp_dir().join(format!("toric-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let f = dir.join("plane_minus_point.toml");
    std::fs::write(&f, "rays = [[1,0],[0,1],[-1,-1]]\nmax_cones = [[0,1],[1,2]]\n").unwrap();
    let o = toric(&["cohomology", f.to_str().unwrap(), "--divisor", "0,0,0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("INFINITE"));
}

#[test]
fn input_errors_exit_with_one() {
    assert_eq!(toric(&["cohomology", "no-such-fan", "--divisor", "1"]).status.code(), Some(1));
    assert_eq!(toric(&["cohomology", "p2", "--divisor", "1,2"]).status.code(), Some(1));
    assert_eq!(toric(&["cohomology", "p2", "--divisor", "1,x,2"]).status.code(), Some(1));
    assert_eq!(toric(&["cohomology", "p2", "--divisor", "0,0,0", "--char", "4"]).status.code(), Some(1));
    let dir = std::env::temp_dir().join(format!("toric-cli-bad-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let f = dir.join("overlap.toml");
    std::fs::write(&f, "rays = [[1,0],[0,1],[1,1]]\nmax_cones = [[0,1],[1,2]]\n").unwrap();
    let v = toric(&["validate", f.to_str().unwrap()]);
    assert_eq!(v.status.code(), Some(1));
    assert!(stdout(&v).contains("valid: false"));
    let g = dir.join("garbage.toml");
    std::fs::write(&g, "rays = [[1,0]\n").unwrap();
    let o = toric(&["validate", g.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line"));
}

#[test]
fn local_cohomology_in_positive_characteristic() {
    let o = toric(&["local-cohomology", "mcm1", "--class", "0,0", "--char", "2", "--format", "rows"]);
    let r = rows(&o);
    assert_eq!(r.len(), 4);
    assert!(r[..3].iter().all(|row| row[1] == "0"));
}

#[test]
fn triangulations_of_pentagon_cone() {
    let o = toric(&["triangulations", "mcm1", "--format", "rows"]);
    let r = rows(&o);
    assert_eq!(r.len(), 5);
    assert!(r.iter().all(|row| row[1] == "true" && row[3] == "true"));
}
