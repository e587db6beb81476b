use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

fn boxball(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_boxball"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(out: &Output) -> String {
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn evolve_timelines() {
    let args = [
        "evolve", "--back", "4", "--steps", "5", "--from", "-18", "--to", "31", "--prefix",
        "timeline",
    ];
    let out = boxball(&args, "_234_15\n");
    assert_eq!(
        stdout(&out),
        std::fs::read_to_string(fixture("standard_timeline.txt")).unwrap()
    );

    let args = [
        "evolve", "--back", "3", "--steps", "3", "--from", "-20", "--to", "33", "--prefix",
        "timeline",
    ];
    let out = boxball(&args, "5_1254__312_45\n");
    assert_eq!(
        stdout(&out),
        std::fs::read_to_string(fixture("advanced_timeline.txt")).unwrap()
    );
}

#[test]
fn evolve_capacity_table() {
    let input = fixture("capacity_initial.txt");
    for alg in ["original", "carrier"] {
        let args = [
            "evolve",
            "--notation",
            "walled",
            "--steps",
            "4",
            "--from",
            "1",
            "--to",
            "13",
            "--prefix",
            "time",
            "--algorithm",
            alg,
            input.to_str().unwrap(),
        ];
        let out = boxball(&args, "");
        assert_eq!(
            stdout(&out),
            std::fs::read_to_string(fixture("capacity_table.txt")).unwrap()
        );
    }
}

#[test]
fn evolve_default_window() {
    assert_eq!(
        stdout(&boxball(&["evolve"], "_234_15")),
        "_234_15___\n____23_145\n"
    );
    assert_eq!(stdout(&boxball(&["evolve", "--steps", "0"], "")), "\n");
}

#[test]
fn rsk_and_dual() {
    let out = stdout(&boxball(&["rsk"], "_234_15\n"));
    assert_eq!(out, "w:\n1 2 3 5 6\n2 3 4 1 5\n\nw*:\n1 2 3 4 5\n5 1 2 3 6\n\nP:\n1 3 4 5\n2\n\nQ:\n1 2 3 6\n5\n");
    let input = fixture("capacity_initial.txt");
    let out = stdout(&boxball(&["rsk", input.to_str().unwrap()], ""));
    assert_eq!(
        out,
        std::fs::read_to_string(fixture("capacity_rsk.txt")).unwrap()
    );

    let out = stdout(&boxball(
        &["dual", "--biword"],
        "1 2 2 4 5 7\n3 1 5 2 2 1\n",
    ));
    assert_eq!(out, "1 1 2 2 3 5\n2 7 4 5 1 2\n");
}

#[test]
fn qsymbol_trajectory() {
    let out = stdout(&boxball(&["qsymbol", "--steps", "1"], "_234_15"));
    assert_eq!(out, "t+0:\n1 2 3 6\n5\n\nt+1:\n4 5 8 9\n7\n");
}

#[test]
fn trace_layout() {
    let out = stdout(&boxball(&["trace", "--mode", "labels"], "_234_15"));
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "  (4,7,8,9,10,11) 5 1 2 3 6");
    assert_eq!(lines[1], "~ 7 (4,5,8,9,10,11) 1 2 3 6");
    assert_eq!(lines[5], "~ 7 4 5 8 9 (1,2,3,6,10,11)");
    assert_eq!(lines[8], "1\t(4,7,8,9,10,11)\t5\t7");

    let out = stdout(&boxball(&["trace"], "_234_15"));
    assert!(out.starts_with("  (e,e,e,e,e) 2 3 4 e 1 5 e e e e e\n"));
    assert!(out.contains("~ e e e 2 3 e 1 4 5 e e (e,e,e,e,e)\n"));
}

#[test]
fn verify_exit_status() {
    let out = boxball(&["verify", "--seed", "7", "--cases", "0"], "");
    assert_eq!(stdout(&out), "ok: 0 checks, 0 failed\n");

    let states = fixture("states.txt");
    let args = [
        "verify",
        "--seed",
        "7",
        "--cases",
        "20",
        states.to_str().unwrap(),
    ];
    let first = stdout(&boxball(&args, ""));
    assert!(first.ends_with(" 0 failed\n"), "{first}");
    assert_eq!(first, stdout(&boxball(&args, "")));
}

#[test]
fn errors_exit_nonzero() {
    let out = boxball(&["evolve"], "_2x4");
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("at byte 2"));
    let out = boxball(&["evolve", "/no/such/file"], "");
    assert_eq!(out.status.code(), Some(2));
    let out = boxball(&["evolve"], "|ee5|e12|");
    assert_eq!(out.status.code(), Some(2));
}
