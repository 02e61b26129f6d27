use std::path::PathBuf;
use std::process::{Command, Output};

fn write(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("lefschetz-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lefschetz"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn betti_prints_the_diagram() {
    let f = write(
        "i.txt",
        "ring x y z; char 0;\nideal x^2, x*y, y^3, y^2*z, x*z^3, y*z^3, z^4;\n",
    );
    let o = run(&["betti", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "   0 1 2\n2: 2 1 -\n3: 2 3 1\n4: 3 6 3\n");
}

#[test]
fn wlp_with_element_in_characteristic_two() {
    let f = write("ci.txt", "ring x y z; char 0; ideal x^2, y^2, z^2;");
    let o = run(&[
        "wlp",
        f.to_str().unwrap(),
        "--char",
        "2",
        "--element",
        "1,1,1",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("fails at j=1"), "{s}");
    assert!(s.contains("which is 0 in GF(2)"), "{s}");
}

#[test]
fn exit_codes() {
    let bad = write("bad.txt", "ring x y; char 0; ideal x, q;");
    let o = run(&["hilbert", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("1:28: unknown variable `q`"));

    let open = write("open.txt", "ring x y; char 0; ideal x;");
    assert_eq!(
        run(&["hilbert", open.to_str().unwrap()]).status.code(),
        Some(2)
    );
    let unstable = write("u.txt", "ring x y; char 0; ideal x^3, x^2*y, y^3;");
    assert_eq!(
        run(&["betti", unstable.to_str().unwrap()]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
    let f = write("ci2.txt", "ring x y z; char 0; ideal x^2, y^2, z^2;");
    assert_eq!(
        run(&["slp", f.to_str().unwrap(), "--field", "gf:4"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn fuzz_is_clean_and_deterministic() {
    let args = [
        "fuzz",
        "--seed",
        "0",
        "--count",
        "50",
        "--n",
        "3",
        "--max-deg",
        "4",
    ];
    let a = run(&args);
    assert_eq!(a.status.code(), Some(0), "{}", stdout(&a));
    assert_eq!(a.stdout, run(&args).stdout);
}

#[test]
fn lefschetz_mode_flag() {
    let f = write(
        "ip.txt",
        "ring x y z; char 0; ideal x^2, x*y, y^3, x*z^2, y^2*z^2, y*z^3, z^4;",
    );
    let o = run(&["lefschetz", "--mode", "strong", f.to_str().unwrap()]);
    assert!(stdout(&o).contains("fails at j=1 (k=2)"));
    let o = run(&["lefschetz", "--mode", "weak", f.to_str().unwrap()]);
    assert!(stdout(&o).contains("verdict: holds"));
    assert!(stdout(&o).contains("AGREE"));
}
