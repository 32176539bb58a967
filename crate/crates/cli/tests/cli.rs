use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../core/fixtures")
        .join(format!("{name}.pd"))
        .display()
        .to_string()
}

fn qinv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qinv")).args(args).output().unwrap()
}

fn result_line(out: &Output) -> String {
    let stdout = String::from_utf8_lossy(&out.stdout);
    stdout.lines().last().unwrap_or_default().to_string()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn jones_of_unknot_and_trefoil() {
    let out = qinv(&["jones", &fixture("unknot")]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(result_line(&out), "RESULT jones 1");
    let out = qinv(&["jones", &fixture("trefoil")]);
    assert_eq!(result_line(&out), "RESULT jones 1*t^1 + 1*t^3 + -1*t^4");
    let out = qinv(&["jones", &fixture("hopf")]);
    assert_eq!(result_line(&out), "RESULT jones -1*t^(1/2) + -1*t^(5/2)");
}

#[test]
fn bracket_of_unknot_is_the_loop_value() {
    let out = qinv(&["bracket", &fixture("unknot")]);
    assert_eq!(result_line(&out), "RESULT bracket -1*A^-2 + -1*A^2");
}

#[test]
fn rtw_values() {
    let out = qinv(&["rtw", &fixture("unknot"), "--level", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(result_line(&out), "RESULT rtw 4.000000000000+0.000000000000*i");
    let out = qinv(&["rtw", &fixture("empty"), "--level", "3", "--mode", "float"]);
    assert_eq!(result_line(&out), "RESULT rtw 1.000000000000+0.000000000000*i");
    let out = qinv(&["rtw", &fixture("unknot-plus1"), "--level", "1"]);
    assert_eq!(result_line(&out), "RESULT rtw 1.000000000000+0.000000000000*i");
}

#[test]
fn siglk_prints_matrix_and_inertia() {
    let out = qinv(&["siglk", &fixture("siglk-1-2")]);
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.starts_with("1 2\n2 1\n"));
    assert_eq!(result_line(&out), "RESULT siglk b+=1 b-=1 nu=0");
}

#[test]
fn colored_symbolic_and_numeric() {
    let out = qinv(&["colored", &fixture("unknot"), "--colors", "2"]);
    assert_eq!(result_line(&out), "RESULT colored 1*A^-4 + 1 + 1*A^4");
    let out = qinv(&["colored", &fixture("hopf"), "--colors", "1,1", "--level", "2", "--mode", "float"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(result_line(&out).starts_with("RESULT colored "));
}

#[test]
fn equivalence_checks() {
    let out = qinv(&["check-equiv", &fixture("lens-3-1"), &fixture("lens-3-1-chain"), "--levels", "1,2,3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(result_line(&out), "RESULT check-equiv equal");
    let out = qinv(&["check-equiv", &fixture("trefoil-meridian"), &fixture("empty"), "--levels", "1,2"]);
    assert_eq!(result_line(&out), "RESULT check-equiv equal");
    let out = qinv(&["check-equiv", &fixture("s1xs3"), &fixture("s1xs3-cancel"), "--levels", "1,2"]);
    assert_eq!(result_line(&out), "RESULT check-equiv equal");
    let out = qinv(&["check-equiv", &fixture("lens-3-1"), &fixture("unknot"), "--levels", "1"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(result_line(&out), "RESULT check-equiv different");
}

#[test]
fn broda_values() {
    let out = qinv(&["broda", &fixture("s1xs3"), "--level", "1"]);
    assert_eq!(result_line(&out), "RESULT broda 2.000000000000+0.000000000000*i");
    let out = qinv(&["broda", &fixture("unknot-plus1"), "--level", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(result_line(&out), "RESULT broda 0.707106781187+0.000000000000*i");
}

#[test]
fn skein_check_modes() {
    let out = qinv(&["skein-check", &fixture("figure-eight")]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(result_line(&out), "RESULT skein-check ok");
    let out = qinv(&["skein-check", &fixture("trefoil"), &fixture("trefoil"), &fixture("unknot")]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("not a skein triple"));
}

#[test]
fn input_errors_exit_two_and_name_the_file() {
    let dir = std::env::temp_dir().join(format!("qinv-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.pd");
    std::fs::write(&bad, "component 1 arcs=1,2\nx 1 2 2\n").unwrap();
    let bad = bad.display().to_string();
    let out = qinv(&["bracket", &bad]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains(&bad));
    assert!(stderr(&out).contains("line 2"));
    let out = qinv(&["jones", &fixture("empty")]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("empty.pd"));
    let out = qinv(&["bracket", "/no/such/file.pd"]);
    assert_eq!(out.status.code(), Some(2));
    let out = qinv(&["colored", &fixture("unknot"), "--colors", "3", "--level", "2"]);
    assert_eq!(out.status.code(), Some(2));
    let out = qinv(&["rtw", &fixture("unknot"), "--level", "9", "--max-color", "9"]);
    assert_eq!(out.status.code(), Some(2));
    let out = qinv(&["rtw", &fixture("s1xs3"), "--level", "1"]);
    assert_eq!(out.status.code(), Some(2));
    let out = qinv(&["rtw", &fixture("unknot"), "--level", "1", "--mode", "fuzzy"]);
    assert_eq!(out.status.code(), Some(2));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn resource_limits_exit_three() {
    let out = qinv(&["colored", &fixture("cinquefoil"), "--colors", "4"]);
    assert_eq!(out.status.code(), Some(3));
    let out = qinv(&["colored", &fixture("cinquefoil"), "--colors", "4", "--max-crossings", "128"]);
    assert_eq!(out.status.code(), Some(0));
    let out = qinv(&["bracket", &fixture("twelve-crossing"), "--max-crossings", "10"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn selftest_runs_and_lists() {
    let out = qinv(&["selftest", "list"]);
    assert!(String::from_utf8_lossy(&out.stdout).contains("bracket-oracle"));
    let out = qinv(&["selftest", "bracket-oracle", "signature", "jw-projectors"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(result_line(&out), "RESULT selftest ok");
    let out = qinv(&["selftest", "no-such-suite"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn exact_output_is_deterministic() {
    let args = ["check-equiv", &fixture("trefoil-meridian"), &fixture("empty"), "--levels", "1,2,3"];
    let a = qinv(&args);
    let b = qinv(&args);
    assert_eq!(a.stdout, b.stdout);
}
