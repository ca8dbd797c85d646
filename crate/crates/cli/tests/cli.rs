use std::process::{Command, Output};

use gamma_core::{PairPartition, RingElement};

fn gamma(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gamma"))
        .args(args)
        .env_remove("GAMMA_GUARD")
        .output()
        .unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn ok(args: &[&str]) -> String {
    let out = gamma(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    stdout(&out)
}

#[test]
fn text_outputs() {
    assert_eq!(ok(&["expand-e", "--m", "3", "--n", "3"]), "e[3]\n");
    assert_eq!(ok(&["expand-e", "--m", "3", "--n", "0"]), "1\n");
    assert_eq!(
        ok(&["straighten", "--m", "3", "--e", "2"]),
        "-h[2] + h[1,1]\n"
    );
    assert_eq!(ok(&["straighten", "--m", "3", "--h", "", "--e", ""]), "1\n");
    assert_eq!(
        ok(&["count-cm", "--m", "3", "--lambda", "3,2,1,1", "--list"]),
        "3\n1,3,1,2\n1,1,3,2\n1,1,2,3\n"
    );
    assert_eq!(ok(&["count-cm", "--m", "3", "--lambda", "2,1"]), "0\n");
    assert_eq!(
        ok(&[
            "coeff",
            "--m",
            "3",
            "--h",
            "5",
            "--e",
            "4,3,2",
            "--target",
            "5,2,2,1,1|3"
        ]),
        "2\n"
    );
    assert_eq!(ok(&["canonical", "--p", "3", "--beta", "4"]), "1|3\n");
    assert_eq!(
        ok(&["dominance", "--p", "3", "--left", "2,2|", "--right", "3,1|"]),
        "less-or-equal\n"
    );
    assert_eq!(ok(&["psi", "--m", "3", "--h", "1"]), "h[1]\n");
}

#[test]
fn product_route_prints_the_same_bytes() {
    for (h, e) in [("5", "4,3,2"), ("", "4"), ("2,1", "3,3,1")] {
        for format in ["text", "json"] {
            let direct = ok(&[
                "straighten",
                "--m",
                "3",
                "--h",
                h,
                "--e",
                e,
                "--format",
                format,
            ]);
            let product = ok(&[
                "straighten",
                "--m",
                "3",
                "--h",
                h,
                "--e",
                e,
                "--via",
                "product",
                "--format",
                format,
            ]);
            assert_eq!(direct, product);
        }
    }
}

#[test]
fn json_round_trips() {
    let text = ok(&[
        "straighten",
        "--m",
        "3",
        "--h",
        "5",
        "--e",
        "4,3,2",
        "--format",
        "json",
    ]);
    let a = RingElement::from_json(text.trim()).unwrap();
    assert_eq!(a.to_json(), text.trim());
    assert_eq!(a.len(), 9);

    let text = ok(&[
        "canonical",
        "--p",
        "3",
        "--alpha",
        "5",
        "--beta",
        "4,3,2",
        "--format",
        "json",
    ]);
    let pair: PairPartition = serde_json::from_str(text.trim()).unwrap();
    assert_eq!(pair.to_string(), "5,1,1,1|3,3");
    assert_eq!(serde_json::to_string(&pair).unwrap(), text.trim());

    let text = ok(&[
        "count-cm", "--m", "3", "--lambda", "3,2,1,1", "--list", "--format", "json",
    ]);
    let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(doc["count"], "3");
    assert_eq!(doc["witnesses"].as_array().unwrap().len(), 3);
}

#[test]
fn exit_codes() {
    assert_eq!(gamma(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(gamma(&["expand-e", "--m", "3"]).status.code(), Some(1));
    assert_eq!(
        gamma(&["expand-e", "--m", "0", "--n", "2"]).status.code(),
        Some(1)
    );
    assert_eq!(
        gamma(&["straighten", "--m", "3", "--h", "1,x"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        gamma(&["canonical", "--p", "4", "--beta", "4"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(gamma(&["--help"]).status.code(), Some(0));
    assert_eq!(gamma(&["--version"]).status.code(), Some(0));
    let refused = gamma(&[
        "count-cm",
        "--m",
        "2",
        "--lambda",
        "1,1,1,1,1,1,1,1,1,1,1,1,1",
        "--list",
    ]);
    assert_eq!(refused.status.code(), Some(2));
    assert_eq!(
        gamma(&["verify", "--m", "3", "--max-degree", "13"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn guard_override() {
    let args = ["count-cm", "--m", "2", "--lambda", "1,1,1,1", "--list"];
    assert_eq!(gamma(&args).status.code(), Some(0));
    assert_eq!(
        gamma(&[&args[..], &["--guard", "3"]].concat())
            .status
            .code(),
        Some(2)
    );
    let out = Command::new(env!("CARGO_BIN_EXE_gamma"))
        .args(args)
        .env("GAMMA_GUARD", "3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_is_deterministic() {
    let args = [
        "verify",
        "--m",
        "3",
        "--max-degree",
        "6",
        "--seed",
        "7",
        "--format",
        "json",
    ];
    let first = ok(&args);
    assert_eq!(first, ok(&args));
    let doc: serde_json::Value = serde_json::from_str(&first).unwrap();
    assert_eq!(doc["ok"], true);
    assert_eq!(doc["suites"].as_array().unwrap().len(), 4);
    let text = ok(&[
        "verify",
        "--m",
        "2",
        "--max-degree",
        "5",
        "--oracle",
        "determinant",
    ]);
    assert_eq!(text, "determinant: 5/5 passed (ok)\n");
    assert_eq!(
        gamma(&[
            "verify",
            "--m",
            "2",
            "--max-degree",
            "5",
            "--oracle",
            "fast"
        ])
        .status
        .code(),
        Some(1)
    );
}

#[test]
fn multiplicity_from_a_table_file() {
    let dir = std::path::Path::new(env!("CARGO_TARGET_TMPDIR"));
    let write = |name: &str, body: &str| {
        let path = dir.join(name);
        std::fs::write(&path, body).unwrap();
        path.to_string_lossy().into_owned()
    };
    let toy = write(
        "toy.json",
        r#"{"p": 3, "entries": [{"base": "5,2,1|3,3", "summand": "5,2,1|3,3", "mult": 1},
                                {"base": "5,1,1,1|3,3", "summand": "5,1,1,1|3,3", "mult": 1}]}"#,
    );
    let base = [
        "multiplicity",
        "--p",
        "3",
        "--alpha",
        "5",
        "--beta",
        "4,3,2",
        "--target",
        "5,1,1,1|3,3",
    ];
    assert_eq!(ok(&[&base[..], &["--kostka", &toy]].concat()), "1\n");

    let empty = write("empty.json", r#"{"p": 3, "entries": []}"#);
    let out = gamma(&[&base[..], &["--kostka", &empty]].concat());
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("5,1,1,1|3,3"));

    let inconsistent = write(
        "inconsistent.json",
        r#"{"p": 3, "entries": [{"base": "1,1|", "summand": "2|", "mult": 0},
                                {"base": "2|", "summand": "2|", "mult": 1}]}"#,
    );
    let out = gamma(&[
        "multiplicity",
        "--p",
        "3",
        "--beta",
        "2",
        "--target",
        "2|",
        "--kostka",
        &inconsistent,
    ]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("inconsistent"));

    let bad = write(
        "bad.json",
        r#"{"p": 3, "entries": [{"base": "2|", "summand": "2|", "mult": 2}]}"#,
    );
    assert_eq!(
        gamma(&[&base[..], &["--kostka", &bad]].concat())
            .status
            .code(),
        Some(1)
    );
}
