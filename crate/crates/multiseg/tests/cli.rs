use std::io::Write;
use std::process::{Command, Output, Stdio};

use multiseg::{derivative, highest, integral, mw, Classification, Multisegment, Segment, Side};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_multiseg")).args(args).output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap().trim_end().to_string()
}

fn ok(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    stdout(&out)
}

fn m(s: &str) -> Multisegment {
    s.parse().unwrap()
}

#[test]
fn worked_examples() {
    assert_eq!(
        ok(&["derive", "--class", "lang", "--seg", "[0,2]", "[0,5]+[0,4]+[1,2]+[2,6]+[2,3]"]),
        "[0,5]+[1,2]+[2,4]+[2,6]+[3]"
    );
    assert_eq!(ok(&["derive", "--class", "zel", "--seg", "[5,6]", "[0,4]+[2,5]+[3,5]+[4,6]"]), "infinity");
    assert_eq!(ok(&["involute", "0"]), "0");
    assert_eq!(ok(&["hd", "--class", "zel", "[1,4]+[2,5]+[3,4]+[2,6]"]), "[4]+[4,5]+[6]");
    assert_eq!(ok(&["dual", "--r", "10", "[2,4]+[1,7]"]), m("[-5,1]+[-2,0]").to_string());
    assert_eq!(
        ok(&["dual", "--r", "10", "--with-window", "--seg", "[0,1]", "[2,4]+[1,7]"]),
        m("[-5,1]+[-2,0]+[-8,1]").to_string()
    );
    assert_eq!(ok(&["eps", "--seg", "[0]", "[0,4]+[1,5]+[1,4]+[1,3]+[1,2]+[2,5]+[2,3]"]), "0");
}

#[test]
fn mw_step_reports_each_part() {
    let text = ok(&["mw-step", "[0,2]+[2,4]+[2,5]+[3,5]+[4,6]"]);
    assert!(text.starts_with("first [4,6]\n"), "{text}");
    assert!(text.ends_with(&format!("reduced {}", m("[0,2]+[2,3]+[2,5]+[3,4]+[4,5]"))), "{text}");
}

#[test]
fn reads_standard_input() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_multiseg"))
        .args(["theta"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"[0,2]+[3]\n").unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    assert_eq!(m(&stdout(&out)), m("[0,2]+[3]").theta());
}

#[test]
fn json_output() {
    let v: serde_json::Value =
        serde_json::from_str(&ok(&["--json", "derive", "--seg", "[0,5]", "[0,5]+[0,4]+[1,2]+[2,6]+[2,3]"])).unwrap();
    assert_eq!(v, serde_json::json!({ "infinity": true }));
    let v: serde_json::Value =
        serde_json::from_str(&ok(&["--json", "derive", "--seg", "[0,3]", "[0,5]+[0,4]+[1,2]+[2,6]+[2,3]"])).unwrap();
    assert_eq!(v["finite"], m("[0,5]+[2,4]+[1,2]+[2,6]").to_string());
    let v: serde_json::Value =
        serde_json::from_str(&ok(&["--json", "eta", "--seg", "[0,2]", "[0,2]+[1,2]+[2]"])).unwrap();
    assert!(v["eta"].is_array());
    for line in ok(&[
        "--json",
        "check",
        "--lo",
        "0",
        "--hi",
        "1",
        "--max-segs",
        "2",
        "--max-len",
        "3",
        "--law",
        "mw.",
        "--allow-dead",
    ])
    .lines()
    {
        serde_json::from_str::<serde_json::Value>(line).unwrap();
    }
}

#[test]
fn exit_codes() {
    let parse = run(&["involute", "[1,"]);
    assert_eq!(parse.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&parse.stderr).contains("byte"), "{}", String::from_utf8_lossy(&parse.stderr));
    assert_eq!(run(&["--class", "nope", "involute", "0"]).status.code(), Some(1));
    assert_eq!(run(&["derive", "[0,1]"]).status.code(), Some(2));
    assert_eq!(run(&["mw-step", "0"]).status.code(), Some(2));
    assert_eq!(run(&["check", "--lo", "3", "--hi", "1"]).status.code(), Some(2));
    assert_eq!(run(&["check", "--law", "no.such.law", "--lo", "0", "--hi", "0"]).status.code(), Some(2));
    let dead =
        run(&["check", "--lo", "0", "--hi", "0", "--max-segs", "1", "--max-len", "1", "--law", "zel.multiple_mw"]);
    assert_eq!(dead.status.code(), Some(3));
}

#[test]
fn check_passes_on_a_small_universe() {
    let text = ok(&["--quiet", "check", "--lo", "0", "--hi", "2", "--max-segs", "3", "--max-len", "5", "--allow-dead"]);
    assert!(!text.contains("COUNTEREXAMPLE"), "{text}");
    assert!(ok(&["check", "--input", "[0,2]+[1,3]", "--law", "lang."]).contains("PASS"));
}

#[test]
fn outputs_round_trip_through_the_library() {
    let inputs = [
        "[0,5]+[0,4]+[1,2]+[2,6]+[2,3]",
        "[1,4]+[2,5]+[3,4]+[2,6]",
        "[0,2]+[2,4]+[2,5]+[3,5]+[4,6]",
        "[-1,3]+[0]+[2,2]",
    ];
    let d = Segment::new(0, 2).unwrap();
    for input in inputs {
        let x = m(input);
        for (class, flag) in [(Classification::Lang, "lang"), (Classification::Zel, "zel")] {
            for (side, s) in [(Side::R, "R"), (Side::L, "L")] {
                let want = derivative(&x, d, class, side).to_string();
                assert_eq!(ok(&["--class", flag, "--side", s, "--seg", "[0,2]", "derive", input]), want);
                let up = ok(&["--class", flag, "--side", s, "--seg", "[0,2]", "integrate", input]);
                assert_eq!(m(&up), integral(&x, d, class, side));
            }
        }
        assert_eq!(m(&ok(&["involute", input])), mw::involution(&x));
        assert_eq!(m(&ok(&["theta", input])), x.theta());
        assert_eq!(m(&ok(&["--class", "zel", "hd", input])), highest::hd_zel(&x));
        assert_eq!(m(&ok(&["--class", "zel", "bz", input])), highest::bz_highest(&x, Classification::Zel));
    }
}
