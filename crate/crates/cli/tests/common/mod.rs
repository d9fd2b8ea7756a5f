#![allow(dead_code)]

use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Stdio};

pub struct Case {
    pub name: &'static str,
    /// Output of this invocation is piped into `args` as stdin.
    pub pipe_from: Option<&'static [&'static str]>,
    pub args: &'static [&'static str],
    pub exit: i32,
}

/// The documented example invocations, run from `tests/data`.
pub const CASES: &[Case] = &[
    Case {
        name: "gen_hypercube_3",
        pipe_from: None,
        args: &["gen", "--family", "hypercube", "--param", "3"],
        exit: 0,
    },
    Case {
        name: "wiener_cut_q3",
        pipe_from: Some(&["gen", "--family", "hypercube", "--param", "3"]),
        args: &["wiener", "-", "--method", "cut", "--no-timing"],
        exit: 0,
    },
    Case {
        name: "wiener_cut_c5",
        pipe_from: Some(&["gen", "--family", "cycle", "--param", "5"]),
        args: &["wiener", "-", "--method", "cut", "--no-timing"],
        exit: 2,
    },
    Case {
        name: "wiener_auto_c5",
        pipe_from: Some(&["gen", "--family", "cycle", "--param", "5"]),
        args: &["wiener", "-", "--method", "auto", "--no-timing"],
        exit: 0,
    },
    Case {
        name: "wiener_json_q3",
        pipe_from: None,
        args: &["wiener", "q3.txt", "--json", "--no-timing"],
        exit: 0,
    },
    Case {
        name: "theta_c6",
        pipe_from: None,
        args: &["theta", "c6.txt"],
        exit: 0,
    },
    Case {
        name: "theta_k2",
        pipe_from: None,
        args: &["theta", "k2.txt"],
        exit: 0,
    },
    Case {
        name: "theta_p4",
        pipe_from: None,
        args: &["theta", "p4.txt"],
        exit: 0,
    },
    Case {
        name: "check_q4",
        pipe_from: None,
        args: &["check", "q4.txt"],
        exit: 0,
    },
    Case {
        name: "check_k23",
        pipe_from: None,
        args: &["check", "k23.txt"],
        exit: 1,
    },
    Case {
        name: "check_malformed",
        pipe_from: None,
        args: &["check", "malformed.txt"],
        exit: 2,
    },
    Case {
        name: "verify_c6_antipodal",
        pipe_from: None,
        args: &["verify", "c6.txt", "c6_antipodal.part", "--scale", "1"],
        exit: 0,
    },
    Case {
        name: "verify_c6_antipodal_iii",
        pipe_from: None,
        args: &["verify", "c6.txt", "c6_antipodal.part", "--check-iii"],
        exit: 0,
    },
    Case {
        name: "verify_c6_adjacent",
        pipe_from: None,
        args: &["verify", "c6.txt", "c6_adjacent.part"],
        exit: 1,
    },
    Case {
        name: "verify_c5_family",
        pipe_from: None,
        args: &["verify", "c5.txt", "c5_family.part", "--scale", "2"],
        exit: 0,
    },
    Case {
        name: "verify_c6_missing",
        pipe_from: None,
        args: &["verify", "c6.txt", "c6_missing.part"],
        exit: 2,
    },
];

pub fn data_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data")
}

pub fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

pub fn wiener(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_wiener"))
        .args(args)
        .current_dir(data_dir())
        .output()
        .expect("run wiener")
}

pub fn wiener_with_stdin(args: &[&str], stdin: &[u8]) -> std::process::Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_wiener"))
        .args(args)
        .current_dir(data_dir())
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn wiener");
    child.stdin.take().unwrap().write_all(stdin).unwrap();
    child.wait_with_output().expect("wait for wiener")
}

/// Runs a case and renders exit code, stdout and stderr as one transcript.
pub fn transcript(case: &Case) -> (i32, String) {
    let out = match case.pipe_from {
        Some(first) => {
            let upstream = wiener(first);
            assert!(
                upstream.status.success(),
                "upstream of {} failed",
                case.name
            );
            wiener_with_stdin(case.args, &upstream.stdout)
        }
        None => wiener(case.args),
    };
    let code = out.status.code().unwrap_or(-1);
    let text = format!(
        "exit: {code}\n--- stdout\n{}--- stderr\n{}",
        String::from_utf8_lossy(&out.stdout),
        String::from_utf8_lossy(&out.stderr)
    );
    (code, text)
}
