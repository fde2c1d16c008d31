//! Golden-file cases for the `pathlen` binary.
//!
//! Each case stores `tests/golden/<name>.stdout` and, when non-empty,
//! `<name>.stderr`. Set `UPDATE_GOLDEN=1` to rewrite them. Timings in
//! `bench` output are masked before comparison.

use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Stdio};

pub struct Case {
    pub name: &'static str,
    pub args: &'static [&'static str],
    pub stdin: &'static str,
    pub exit: i32,
}

const TREE_122: &str = r#"{"left":{"leaf":1},"right":{"left":{"leaf":2},"right":{"leaf":3}}}"#;
const TREE_221: &str = r#"{"left":{"left":{"leaf":1},"right":{"leaf":2}},"right":{"leaf":3}}"#;

pub const CASES: &[Case] = &[
    Case {
        name: "validate_122",
        args: &["validate"],
        stdin: "1 2 2",
        exit: 0,
    },
    Case {
        name: "validate_212",
        args: &["validate"],
        stdin: "2 1 2",
        exit: 1,
    },
    Case {
        name: "validate_empty",
        args: &["validate"],
        stdin: "",
        exit: 2,
    },
    Case {
        name: "validate_111",
        args: &["validate"],
        stdin: "1 1 1",
        exit: 1,
    },
    Case {
        name: "validate_json",
        args: &["validate"],
        stdin: r#"{"lengths": [2, 3, 3, 2, 2]}"#,
        exit: 0,
    },
    Case {
        name: "validate_bad_token",
        args: &["validate"],
        stdin: "1 2\n2 x",
        exit: 2,
    },
    Case {
        name: "build_codes_122",
        args: &["build", "--format", "codes"],
        stdin: "1 2 2",
        exit: 0,
    },
    Case {
        name: "build_codes_0",
        args: &["build", "--format", "codes"],
        stdin: "0",
        exit: 0,
    },
    Case {
        name: "build_json_23322",
        args: &["build", "--format", "json"],
        stdin: "2 3 3 2 2",
        exit: 0,
    },
    Case {
        name: "build_dot_23322",
        args: &["build", "--format", "dot"],
        stdin: "2 3 3 2 2",
        exit: 0,
    },
    Case {
        name: "build_invalid",
        args: &["build", "--format", "codes"],
        stdin: "2 1 2",
        exit: 1,
    },
    Case {
        name: "build_text_rejected",
        args: &["build", "--format", "text"],
        stdin: "1 1",
        exit: 2,
    },
    Case {
        name: "from_tree_122",
        args: &["from-tree"],
        stdin: TREE_122,
        exit: 0,
    },
    Case {
        name: "from_tree_leaf",
        args: &["from-tree"],
        stdin: r#"{"leaf":1}"#,
        exit: 0,
    },
    Case {
        name: "from_tree_221",
        args: &["from-tree"],
        stdin: TREE_221,
        exit: 0,
    },
    Case {
        name: "from_tree_unary",
        args: &["from-tree"],
        stdin: r#"{"left":{"leaf":1}}"#,
        exit: 2,
    },
    Case {
        name: "from_tree_malformed",
        args: &["from-tree"],
        stdin: r#"{"left":"#,
        exit: 2,
    },
    Case {
        name: "islands_23322",
        args: &["islands", "--format", "text"],
        stdin: "2 3 3 2 2",
        exit: 0,
    },
    Case {
        name: "islands_0",
        args: &["islands"],
        stdin: "0",
        exit: 0,
    },
    Case {
        name: "islands_11",
        args: &["islands", "--format", "text"],
        stdin: "1 1",
        exit: 0,
    },
    Case {
        name: "islands_dot_23322",
        args: &["islands", "--format", "dot"],
        stdin: "2 3 3 2 2",
        exit: 0,
    },
    Case {
        name: "crosscheck_3_2",
        args: &["crosscheck", "--max-len", "3", "--max-value", "2"],
        stdin: "",
        exit: 0,
    },
    Case {
        name: "crosscheck_8_8",
        args: &["crosscheck", "--max-len", "8", "--max-value", "8"],
        stdin: "",
        exit: 0,
    },
    Case {
        name: "crosscheck_0_0",
        args: &["crosscheck", "--max-len", "0", "--max-value", "0"],
        stdin: "",
        exit: 2,
    },
    Case {
        name: "crosscheck_over_limit",
        args: &[
            "crosscheck",
            "--max-len",
            "9",
            "--max-value",
            "9",
            "--work-limit",
            "1000",
        ],
        stdin: "",
        exit: 2,
    },
    Case {
        name: "bench_1000_42",
        args: &["bench", "--n", "1000", "--seed", "42"],
        stdin: "",
        exit: 0,
    },
    Case {
        name: "bench_1e6_7",
        args: &["bench", "--n", "1000000", "--seed", "7"],
        stdin: "",
        exit: 0,
    },
    Case {
        name: "bench_1_0",
        args: &["bench", "--n", "1", "--seed", "0"],
        stdin: "",
        exit: 0,
    },
];

pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub exit: i32,
}

pub fn run_binary(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_pathlen"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn pathlen");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    Output {
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
        exit: out.status.code().unwrap_or(-1),
    }
}

/// Replace every `time=...` token with `time=<t>`.
pub fn mask_timings(text: &str) -> String {
    text.lines()
        .map(|line| {
            line.split(' ')
                .map(|tok| {
                    if tok.starts_with("time=") {
                        "time=<t>"
                    } else {
                        tok
                    }
                })
                .collect::<Vec<_>>()
                .join(" ")
        })
        .map(|line| line + "\n")
        .collect()
}

fn golden_path(name: &str, stream: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(format!("{name}.{stream}"))
}

fn compare(name: &str, stream: &str, actual: &str) -> Result<(), String> {
    let path = golden_path(name, stream);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        if actual.is_empty() {
            let _ = std::fs::remove_file(&path);
        } else {
            std::fs::write(&path, actual).unwrap();
        }
        return Ok(());
    }
    let expected = std::fs::read_to_string(&path).unwrap_or_default();
    if expected != actual {
        return Err(format!(
            "{name}.{stream} differs\n--- expected\n{expected}--- actual\n{actual}"
        ));
    }
    Ok(())
}

/// Run one case and compare exit status, stdout and stderr.
pub fn check_case(case: &Case) -> Result<(), String> {
    let out = run_binary(case.args, case.stdin);
    if out.exit != case.exit {
        return Err(format!(
            "{}: exit {} (expected {})\nstderr: {}",
            case.name, out.exit, case.exit, out.stderr
        ));
    }
    let stdout = if case.args[0] == "bench" {
        mask_timings(&out.stdout)
    } else {
        out.stdout
    };
    compare(case.name, "stdout", &stdout)?;
    compare(case.name, "stderr", &out.stderr)
}
