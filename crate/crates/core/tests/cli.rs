use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

const SL2: &str = "\
group Z2
color super
basis h:0 x:0 y:0
bracket h x = 2 x
bracket h y = -2 y
bracket x y = h
";

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_klein-lie"));
    c.env_remove("KLEIN_LIE_MAX_DEGREE");
    c
}

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn temp_file(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("klein-lie-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn validate_from_stdin_and_file() {
    let o = run(&["validate"], SL2);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("pass"));
    let path = temp_file("sl2.alg", SL2);
    let o = run(&["validate", path.to_str().unwrap()], "");
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn reduce_normal_orders() {
    let path = temp_file("reduce.alg", SL2);
    let o = run(&["reduce", path.to_str().unwrap(), "y x"], "");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "x y - h");
}

#[test]
fn colors_counts_klein_bicharacters() {
    let o = run(&["colors", "--group", "klein"], "");
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("8 bicharacters, 4 orbit classes"), "{}", stdout(&o));
}

#[test]
fn exit_codes() {
    let bad_syntax = "group Z2\nbasis h:0\nbracket h\n";
    assert_eq!(run(&["validate"], bad_syntax).status.code(), Some(2));
    assert_eq!(run(&["validate", "/nonexistent/file.alg"], "").status.code(), Some(2));
    assert_eq!(run(&["frobnicate"], "").status.code(), Some(2));
    let not_jacobi = "\
group Z2
color super
basis a:0 b:0 c:0
bracket a b = c
bracket b c = c
bracket a c = a
";
    let o = run(&["validate"], not_jacobi);
    assert_eq!(o.status.code(), Some(1), "{}", stdout(&o));
    // repeated runs agree
    for _ in 0..3 {
        let again = run(&["validate"], not_jacobi);
        assert_eq!(again.status.code(), o.status.code());
        assert_eq!(again.stdout, o.stdout);
    }
}

#[test]
fn emitted_algebras_round_trip() {
    for args in [
        &["parabose", "--bosons", "1", "--fermions", "1", "--emit"][..],
        &["sl2case", "--n", "1", "--theta-rr", "-1", "--emit"][..],
    ] {
        let o = run(args, "");
        assert_eq!(o.status.code(), Some(0), "{args:?}");
        let text = stdout(&o);
        let v = run(&["validate"], &text);
        assert_eq!(v.status.code(), Some(0), "{args:?}: {}", stdout(&v));
        let path = temp_file("emitted.alg", &text);
        let v2 = run(&["validate", path.to_str().unwrap()], "");
        assert_eq!(v2.stdout, v.stdout);
    }
}

#[test]
fn machine_output_is_parseable_lines() {
    let o = run(&["--machine", "validate"], SL2);
    assert_eq!(o.status.code(), Some(0));
    assert!(!stdout(&o).trim().is_empty());
    assert!(stdout(&o).lines().all(|l| !l.trim().is_empty()));
}
