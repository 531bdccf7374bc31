use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_bicolim")
}

fn workdir(name: &str) -> PathBuf {
    let d = std::env::temp_dir().join(format!("bicolim-cli-{name}-{}", std::process::id()));
    fs::create_dir_all(&d).unwrap();
    d
}

fn run(args: &[&str]) -> Output {
    Command::new(bin()).args(args).output().unwrap()
}

fn write(dir: &PathBuf, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

const TWO_POINTS: &str = "category A {\n  objects: X\n}\n\ncategory B {\n  objects: Y\n}\n";

#[test]
fn construct_coproduct_matches_golden_output() {
    let d = workdir("golden");
    let input = write(&d, "in.bc", TWO_POINTS);
    let out = d.join("out.bc");
    let r = run(&[
        "construct",
        "--kind",
        "coproduct",
        "--category",
        "cat",
        "--in",
        &input,
        "--left",
        "A",
        "--right",
        "B",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(r.status.success(), "{}", String::from_utf8_lossy(&r.stderr));
    let expected = "category A {\n  objects: X\n}\n\ncategory B {\n  objects: Y\n}\n\n\
                    category colim {\n  objects: l.X, r.Y\n}\n\n\
                    functor inl: A -> colim {\n  X |-> l.X\n}\n\n\
                    functor inr: B -> colim {\n  Y |-> r.Y\n}\n\n\
                    construction main {\n  kind: coproduct\n  category: cat\n  args: A, B\n}\n";
    assert_eq!(fs::read_to_string(&out).unwrap(), expected);
    // rerunning is deterministic
    let out2 = d.join("out2.bc");
    let r2 = run(&[
        "construct", "--kind", "coproduct", "--in", &input, "--left", "A", "--right", "B",
        "--out", out2.to_str().unwrap(),
    ]);
    assert!(r2.status.success());
    assert_eq!(
        fs::read_to_string(&out).unwrap(),
        fs::read_to_string(&out2).unwrap()
    );
}

#[test]
fn check_universal_passes_and_reports() {
    let d = workdir("check");
    let input = write(&d, "in.bc", TWO_POINTS);
    let test = write(
        &d,
        "test.bc",
        "category T {\n  objects: P, Q\n  arrows:\n    w: P -> Q\n}\n",
    );
    let out = d.join("out.bc");
    let r = run(&[
        "construct", "--kind", "coproduct", "--in", &input, "--left", "A", "--right", "B",
        "--out", out.to_str().unwrap(),
    ]);
    assert!(r.status.success());
    let r = run(&["check-universal", "--construction", out.to_str().unwrap(), "--test", &test]);
    assert_eq!(r.status.code(), Some(0));
    let stdout = String::from_utf8_lossy(&r.stdout);
    assert!(stdout.contains("result: PASS"), "{stdout}");
    // json export carries the same verdict
    let r = run(&[
        "--export", "records", "check-universal", "--construction", out.to_str().unwrap(),
        "--test", &test,
    ]);
    assert_eq!(r.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&r.stdout).unwrap();
    assert_eq!(v["essentially_surjective"], true);
    assert_eq!(v["fully_faithful"], true);
}

#[test]
fn parse_and_usage_errors_exit_3() {
    let d = workdir("usage");
    let broken = write(&d, "broken.bc", "category X {\n");
    let r = run(&["pi0", "--in", &broken]);
    assert_eq!(r.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&r.stderr).contains("parse error"));

    let input = write(&d, "in.bc", TWO_POINTS);
    let r = run(&[
        "construct", "--kind", "bogus", "--in", &input, "--out",
        d.join("o.bc").to_str().unwrap(),
    ]);
    assert_eq!(r.status.code(), Some(3));

    let r = run(&["--definitely-not-a-flag"]);
    assert_eq!(r.status.code(), Some(3));

    let r = run(&["hom", "--in", &input, "--src", "NOPE", "--dst", "X"]);
    assert_eq!(r.status.code(), Some(3));
}

#[test]
fn invalid_data_exits_1() {
    let d = workdir("invalid");
    let bad = write(
        &d,
        "bad.bc",
        "category C {\n  objects: X\n  arrows:\n    e: X -> X\n  relations:\n    e;e = e\n}\n\n\
         category D {\n  objects: Y\n  arrows:\n    x: Y -> Y\n}\n\n\
         functor F: C -> D {\n  X |-> Y\n  e |-> x\n}\n",
    );
    let r = run(&["pi0", "--in", &bad]);
    assert_eq!(r.status.code(), Some(1), "{}", String::from_utf8_lossy(&r.stderr));
}

#[test]
fn unbounded_enumeration_exits_2() {
    let d = workdir("bound");
    let free = write(
        &d,
        "free.bc",
        "category C {\n  objects: X\n  arrows:\n    x: X -> X\n}\n",
    );
    let r = run(&["hom", "--in", &free, "--src", "X", "--dst", "X"]);
    assert_eq!(r.status.code(), Some(2), "{}", String::from_utf8_lossy(&r.stderr));
}

#[test]
fn hom_and_normalize_are_shortlex_deterministic() {
    let d = workdir("hom");
    let input = write(
        &d,
        "in.bc",
        "category C {\n  objects: X\n  arrows:\n    e: X -> X\n  relations:\n    e;e = e\n}\n",
    );
    let r = run(&["hom", "--in", &input, "--src", "X", "--dst", "X"]);
    assert_eq!(r.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&r.stdout), "id(X)\ne\n");
    let r = run(&["normalize", "--in", &input, "--term", "e;e;e"]);
    assert_eq!(r.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&r.stdout), "e\n");
}

#[test]
fn records_export_is_valid_json() {
    let d = workdir("records");
    let input = write(&d, "in.bc", TWO_POINTS);
    let out = d.join("out.json");
    let r = run(&[
        "--export", "records", "construct", "--kind", "coproduct", "--in", &input,
        "--left", "A", "--right", "B", "--out", out.to_str().unwrap(),
    ]);
    assert!(r.status.success(), "{}", String::from_utf8_lossy(&r.stderr));
    let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    assert!(v["blocks"].is_array());
}
