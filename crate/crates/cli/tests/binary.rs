use std::process::{Command, Output};

fn hopfpow(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hopfpow"))
        .args(args)
        .env_remove("HOPFPOW_CACHE_DIR")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn exit_codes() {
    assert_eq!(
        hopfpow(&["exponent", "--algebra", "group:S3"])
            .status
            .code(),
        Some(0)
    );
    assert_eq!(
        hopfpow(&["exponent", "--algebra", "group:X3"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(hopfpow(&["exponent"]).status.code(), Some(2));
    let bad = hopfpow(&[
        "element-order",
        "--algebra",
        "bismash:S4",
        "--element",
        "d[(1 2 5)]#()",
    ]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("d["));
    assert_eq!(
        hopfpow(&[
            "verify",
            "--algebra",
            "double:S3",
            "--suites",
            "axioms,powers"
        ])
        .status
        .code(),
        Some(0)
    );
    assert_eq!(
        hopfpow(&["verify", "--algebra", "group:S3", "--suites", "nonsense"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn element_orders_from_the_command_line() {
    let o = hopfpow(&[
        "element-order",
        "--algebra",
        "bismash:S4",
        "--element",
        "1#(1 2)",
    ]);
    assert!(stdout(&o).starts_with("hopf order 12\n"), "{}", stdout(&o));
    let o = hopfpow(&[
        "element-order",
        "--algebra",
        "group:C3",
        "--element",
        "0,1,0",
    ]);
    assert!(stdout(&o).starts_with("hopf order 3\n"));
}

#[test]
fn cache_directory_does_not_change_output() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let plain = hopfpow(&["table", "--algebra", "double:S3", "--format", "csv"]);
    let cold = hopfpow(&[
        "table",
        "--algebra",
        "double:S3",
        "--format",
        "csv",
        "--cache-dir",
        d,
    ]);
    let warm = hopfpow(&[
        "table",
        "--algebra",
        "double:S3",
        "--format",
        "csv",
        "--cache-dir",
        d,
    ]);
    assert!(std::fs::read_dir(dir.path()).unwrap().next().is_some());
    assert_eq!(plain.stdout, cold.stdout);
    assert_eq!(cold.stdout, warm.stdout);
    let via_env = Command::new(env!("CARGO_BIN_EXE_hopfpow"))
        .args(["table", "--algebra", "double:S3", "--format", "csv"])
        .env("HOPFPOW_CACHE_DIR", d)
        .output()
        .unwrap();
    assert_eq!(via_env.stdout, plain.stdout);
}

#[test]
fn half_table_flags() {
    let full = stdout(&hopfpow(&[
        "table",
        "--algebra",
        "bismash:S5",
        "--format",
        "csv",
        "--full-table",
    ]));
    let half = stdout(&hopfpow(&[
        "table",
        "--algebra",
        "bismash:S5",
        "--format",
        "csv",
    ]));
    assert_eq!(full.lines().next().unwrap().split(',').count(), 60);
    assert_eq!(half.lines().next().unwrap().split(',').count(), 31);
    let small = stdout(&hopfpow(&[
        "table",
        "--algebra",
        "group:S3",
        "--format",
        "csv",
        "--half-table",
    ]));
    assert_eq!(small.lines().next(), Some("i\\j,1,2,3"));
}
