use std::io::Write;
use std::process::{Command, Output};

use serde_json::{json, Value};

use prym_loci_cli::{run, Command as Cmd, Request};

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_prym-loci"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn triple_of_five_point_pair() {
    let out = bin(&[
        "triple",
        "--a-prime",
        "5,8,9,12,14",
        "--b-prime",
        "1,2,6,10,11",
    ]);
    assert!(out.status.success());
    let doc = json_of(&out);
    assert_eq!(doc["schema"], "prym-loci/1");
    assert_eq!(doc["status"], "ok");
    assert_eq!(
        doc["result"],
        json!({"p": [0, 5, 8, 8, 8, 9], "q": [0, 1, 1, 2, 6, 6], "k": [6, 5, 4, 3, 2, 1]})
    );
    assert_eq!(doc["lambda"], json!([15, 14, 10, 9, 6]));
    assert_eq!(doc["triple"], doc["result"]);
}

#[test]
fn chow_class_of_single_box() {
    let out = bin(&[
        "class",
        "--a-prime",
        "0,1",
        "--b-prime",
        "0,1",
        "--g",
        "2",
        "--beta-mode",
        "zero",
    ]);
    assert!(out.status.success());
    let doc = json_of(&out);
    assert_eq!(doc["result"]["coefficient"], "1/1");
    assert_eq!(doc["result"]["xi_power"], 1);
}

#[test]
fn syt_count_of_421() {
    let out = bin(&["syt", "--shape", "4,2,1", "--mode", "count"]);
    assert!(out.status.success());
    assert_eq!(json_of(&out)["result"], json!({"enum": 7, "formula": 7}));
}

#[test]
fn syt_list_is_arrays_of_rows() {
    let doc = json_of(&bin(&["syt", "--shape", "2,1", "--mode", "list"]));
    assert_eq!(
        doc["result"],
        json!({"count": 1, "tableaux": [[[1, 2], [3]]]})
    );
}

#[test]
fn reruns_are_byte_identical() {
    let cases: [&[&str]; 4] = [
        &[
            "class",
            "--a-prime",
            "0,1,2",
            "--b-prime",
            "0,1,2",
            "--g",
            "5",
            "--beta-mode",
            "symbolic",
        ],
        &["degree", "--a-prime", "0,1,2,3", "--b-prime", "0,1,2,3"],
        &["vexillary", "--a-prime", "0,1,2", "--b-prime", "0,1,2"],
        &["validate", "--a-prime", "0,0", "--b-prime", "0,1"],
    ];
    for args in cases {
        let first = bin(args);
        let second = bin(args);
        assert_eq!(first.stdout, second.stdout, "{args:?}");
        assert_eq!(first.status.code(), second.status.code());
        json_of(&first);
    }
}

#[test]
fn json_file_request_and_flag_override() {
    let mut file = tempfile();
    write!(
        file.1,
        r#"{{"command":"class","a_prime":[0,1],"b_prime":[0,1],"g":2,"options":{{"beta_mode":"zero"}}}}"#
    )
    .unwrap();
    let path = file.0.to_str().unwrap();
    let doc = json_of(&bin(&["--json", path]));
    assert_eq!(doc["result"]["coefficient"], "1/1");

    let doc = json_of(&bin(&[
        "nonempty",
        "--json",
        path,
        "--a-prime",
        "0,1,2",
        "--b-prime",
        "0,1,2",
        "--g",
        "3",
    ]));
    assert_eq!(doc["command"], "nonempty");
    assert_eq!(doc["result"]["nonempty"], false);
    std::fs::remove_file(&file.0).ok();
}

fn tempfile() -> (std::path::PathBuf, std::fs::File) {
    let path = std::env::temp_dir().join(format!("prym-loci-req-{}.json", std::process::id()));
    let f = std::fs::File::create(&path).unwrap();
    (path, f)
}

#[test]
fn errors_are_structured_with_nonzero_exit() {
    let out = bin(&["triple", "--a-prime", "0,0", "--b-prime", "0,1"]);
    assert_eq!(out.status.code(), Some(1));
    let doc = json_of(&out);
    assert_eq!(doc["status"], "error");
    assert_eq!(doc["error"]["code"], "invalid_pair");
    assert!(!out.stderr.is_empty());

    let out = bin(&["class", "--a-prime", "0,1", "--b-prime", "0,1"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json_of(&out)["error"]["code"], "parse_error");

    let out = bin(&["bogus"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json_of(&out)["status"], "error");

    let out = bin(&[
        "class",
        "--a-prime",
        "0,1,2",
        "--b-prime",
        "0,1,2",
        "--g",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json_of(&out)["error"]["code"], "truncation");
}

#[test]
fn malformed_json_request_is_rejected() {
    for text in [
        r#"{"command":"fly"}"#,
        r#"{"command":"triple","a_prime":[0,1],"b_prime":[0,1],"extra":1}"#,
        r#"{"command":"triple","a_prime":"0,1"}"#,
    ] {
        assert!(Request::from_json(text).is_err(), "{text}");
    }
    let req = Request::from_json(r#"{"command":"triple","a_prime":[0,1]}"#).unwrap();
    assert_eq!(run(&req).unwrap_err().code(), "parse_error");
}

#[test]
fn validate_reports_instead_of_failing() {
    let out = bin(&["validate", "--a-prime", "0,2", "--b-prime", "0,2"]);
    assert!(out.status.success());
    let doc = json_of(&out);
    assert_eq!(doc["result"]["ok"], false);
    assert!(doc.get("triple").is_none());

    let doc = json_of(&bin(&["validate", "--a-prime", "0,1", "--b-prime", "0,1"]));
    assert_eq!(doc["result"]["ok"], true);
    assert_eq!(doc["lambda"], json!([1]));
}

/// The zero-β class coefficient times `|λ|!` is the degree.
#[test]
fn class_and_degree_agree() {
    let pairs: [(&[i64], &[i64]); 5] = [
        (&[0, 1], &[0, 1]),
        (&[0, 1, 2], &[0, 1, 2]),
        (&[0, 1, 3], &[0, 2, 3]),
        (&[1, 2, 4], &[0, 1, 2]),
        (&[0, 1, 2, 3], &[0, 1, 2, 4]),
    ];
    for (a, b) in pairs {
        let mut req = Request::new(Cmd::Degree);
        req.a_prime = Some(a.to_vec());
        req.b_prime = Some(b.to_vec());
        let deg = run(&req).unwrap();
        let g = deg["result"]["g"].as_i64().unwrap();
        let weight = g - 1;

        req.command = Cmd::Class;
        req.g = Some(g);
        let class = run(&req).unwrap();
        assert_eq!(class["result"]["xi_power"].as_i64().unwrap(), weight);
        let coef = class["result"]["coefficient"].as_str().unwrap();
        let (num, den) = coef.split_once('/').unwrap();
        let (num, den): (u128, u128) = (num.parse().unwrap(), den.parse().unwrap());
        let fact: u128 = (1..=weight as u128).product();
        assert_eq!(num * fact % den, 0);
        assert_eq!(
            u128::from(deg["result"]["degree"].as_u64().unwrap()),
            num * fact / den
        );
        assert_eq!(deg["result"]["agree"], true);
    }
}

#[test]
fn table_format_lists_fields() {
    let out = bin(&[
        "partition",
        "--a-prime",
        "0,1,2",
        "--b-prime",
        "0,1,2",
        "--format",
        "table",
    ]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("result.weight"));
    assert!(text
        .lines()
        .any(|l| l.starts_with("lambda") && l.ends_with("[2,1]")));
}
