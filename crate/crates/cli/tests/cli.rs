use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sdcodes"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

#[test]
fn mul_reproduces_t4_plus_1() {
    let out = run(&["mul", "--ring", "f4", "0,1;0,1;1", "1,1;0,1;1"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "t^4 + 1\n");
    let out = run(&["--literal", "mul", "--ring", "f4", "0,1;0,1;1", "1,1;0,1;1"]);
    assert_eq!(stdout(&out), "1; 0; 0; 0; 1\n");
}

#[test]
fn divisions_and_evaluation() {
    let out = run(&["divr", "-r", "f5x", "-1;0;0;0;0;1", "-1,0,1; 0,-2; 1"]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        stdout(&out),
        "q = t^3 + 2xt^2 + (3x^2 + 2)t + 4x^3 + 3x\nr = 0\n"
    );
    let out = run(&["divl", "-r", "f5x", "-1;0;0;0;0;1", "-1,0,1; 0,-2; 1"]);
    assert_eq!(
        stdout(&out),
        "q = t^3 + 2xt^2 + (3x^2 + 2)t + 4x^3 + 3x\nr = 0\n"
    );
    let out = run(&["eval", "-r", "f4", "0;0;1", "0,1"]);
    assert_eq!(stdout(&out), "1\n");
}

#[test]
fn lclm_and_invariance() {
    let out = run(&["lclm", "-r", "f5x", "0,1", "0,1,0,0,1"]);
    assert_eq!(stdout(&out), "t^2 + 3xt + x^2 + 4\n");
    // t − (x − 1) evaluates to a zero divisor
    assert_eq!(code(&run(&["lclm", "-r", "f5x", "0", "-1,1"])), 3);
    assert_eq!(code(&run(&["invariant", "-r", "f5x", "-1;0;0;0;0;1"])), 0);
    let out = run(&["invariant", "-r", "f4", "0,1;1"]);
    assert_eq!(
        (code(&out), stdout(&out)),
        (1, "not invariant\n".to_string())
    );
}

#[test]
fn code_matrices() {
    let f5 = data("f5.code");
    let out = run(&["code-gen", &f5]);
    assert_eq!(
        stdout(&out),
        "4,0,1 | 0,3 | 1 | 0 | 0\n0,2 | 2,0,1 | 0,3 | 1 | 0\n2 | 0,4 | 0,0,1 | 0,3 | 1\n"
    );
    let out = run(&["code-control", &f5]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("0,3,0,4 | 2,0,3 | 0,2 | 1 | 0\n3,0,2 | 0,4,0,4 |"));
    let out = run(&["code-build", &f5]);
    assert!(stdout(&out).contains("dimension: 3\n"));
    assert!(stdout(&out).contains("control matrix: available"));
}

#[test]
fn code_membership_exit_codes() {
    let f5 = data("f5.code");
    assert_eq!(
        code(&run(&["code-check", &f5, "4,0,1 | 0,3 | 1 | 0 | 0"])),
        0
    );
    let out = run(&["code-check", &f5, "1|0|0|0|0"]);
    assert_eq!(
        (code(&out), stdout(&out)),
        (1, "not a codeword\n".to_string())
    );
    assert_eq!(
        stdout(&run(&["code-syndrome", &f5, "1|0|0|0|0"])),
        "1 | 0\n"
    );
    assert_eq!(
        stdout(&run(&["code-encode", &f5, "1|0|0"])),
        "4,0,1 | 0,3 | 1 | 0 | 0\n"
    );
    assert_eq!(code(&run(&["code-check", &f5, "1|0|0"])), 2);
}

#[test]
fn unavailable_operations_exit_3() {
    let out = run(&["code-control", &data("f4_one_sided.code")]);
    assert_eq!(code(&out), 3);
    assert_eq!(code(&run(&["code-build", &data("f4_one_sided.code")])), 0);
    assert_eq!(code(&run(&["code-mindist", &data("f5.code")])), 3);
    assert_eq!(code(&run(&["bigG", "-r", "f5x"])), 3);
}

#[test]
fn usage_and_parse_errors_exit_2() {
    assert_eq!(code(&run(&["mul", "-r", "f4", "1;1", "zz"])), 2);
    assert_eq!(code(&run(&["code-build", &data("not_factor.code")])), 2);
    assert_eq!(code(&run(&["no-such-command"])), 2);
    assert_eq!(code(&run(&["mul", "-r", "nowhere", "1", "1"])), 2);
}

#[test]
fn ring_files_next_to_code_files() {
    let out = run(&["code-build", &data("f3.code")]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("h = t^2 + t + 1\n"));
    assert_eq!(stdout(&run(&["code-mindist", &data("f3.code")])), "2\n");
    assert_eq!(stdout(&run(&["code-mindist", &data("f4.code")])), "3\n");
    let out = run(&["ring-check", "--ring", &data("f3.ring")]);
    assert!(stdout(&out).starts_with("kind: prime_field p=3\nelements: 3\n"));
}

#[test]
fn wedderburn_commands() {
    assert_eq!(stdout(&run(&["bigG", "-r", "f4"])), "t^3 + t\n");
    assert_eq!(stdout(&run(&["bigG", "-r", "f8", "--g0"])), "t^3 + 1\n");
    let out = run(&["factor-search", "-r", "f4", "0;1;0;1", "1"]);
    assert_eq!(stdout(&out).lines().count(), 4);
    let out = run(&["wtest", "-r", "f4", "0;1;1", "--certify"]);
    assert_eq!(
        (code(&out), stdout(&out)),
        (0, "W-polynomial\nroots: 0, 1\n".to_string())
    );
    assert_eq!(code(&run(&["wtest", "-r", "f4", "1;0;0;1"])), 1);
    let out = run(&["vandermonde", "-r", "f5x", "-n", "3", "0,1", "0,1,0,0,1"]);
    assert_eq!(stdout(&out), "1 | 1\n0,1 | 0,1,0,0,1\n1,0,1 | 3,0,1\n");
}

#[test]
fn ring_check_exhaustive() {
    let out = run(&["ring-check", "-r", "tri2", "--exhaustive"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).ends_with("leibniz: ok\ndelta inner: no\n"));
}

#[test]
fn example_suite_passes_and_is_stable() {
    let first = run(&["paper-examples"]);
    assert_eq!(code(&first), 0);
    let text = stdout(&first);
    assert!(text.lines().all(|l| l.starts_with("PASS ")));
    assert!(text.contains("PASS f5x-root-census 625 right roots"));
    assert_eq!(stdout(&run(&["paper-examples"])), text);
}

#[test]
fn output_matches_library() {
    let ctx = sdcodes::config::shipped("f4").unwrap();
    let p = sdcodes::SkewPoly::parse(&ctx, "0,1;1").unwrap();
    let q = sdcodes::SkewPoly::parse(&ctx, "1,1;0;1").unwrap();
    let out = run(&["--literal", "mul", "-r", "f4", "0,1;1", "1,1;0;1"]);
    assert_eq!(stdout(&out).trim_end(), (&p * &q).to_literal());
}
