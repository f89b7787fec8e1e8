use std::process::Command;

use proptest::prelude::*;
use qweyl_cli::parse::{parse, ClassExpr, Expr, Term, WordExpr};
use qweyl_core::AlgebraId;

fn qweyl(args: &[&str], env: &[(&str, &str)]) -> (String, i32) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_qweyl"));
    cmd.args(args).env_remove("QWEYL_MAX_WORK");
    for (k, v) in env {
        cmd.env(k, v);
    }
    let out = cmd.output().expect("binary runs");
    (
        String::from_utf8(out.stdout).unwrap().trim_end().to_string(),
        out.status.code().unwrap(),
    )
}

#[test]
fn documented_examples() {
    assert_eq!(
        qweyl(&["normalize", "--algebra", "q-oscillator", "y x"], &[]),
        (
            r#"{"terms":[{"exps":[1,1],"coeff":"q"},{"exps":[0,0],"coeff":"h"}]}"#.to_string(),
            0
        )
    );
    assert_eq!(
        qweyl(&["coeffs", "--algebra", "q-weyl", "--factors", "(0,0,1),(2,0,0)"], &[]),
        (r#"{"0":"1","1":"1 + q"}"#.to_string(), 0)
    );
    let (out, status) = qweyl(&["verify", "--suite", "representations"], &[]);
    assert_eq!(status, 0);
    assert!(out.starts_with(r#"{"pass":true,"checked":"#), "{out}");
}

#[test]
fn closed_form_flag_is_byte_identical() {
    for (alg, words) in [
        ("q-oscillator", vec!["y^2 x^2 y", "x y x^2 y^2", "y x y x"]),
        ("q-weyl", vec!["z x^2 y", "z^2 y x^2 z", "y z x"]),
        ("h-weyl", vec!["y^2 x^2", "z x y x z", "z^2 x^2 y"]),
        ("sl2", vec!["z^2 x^2", "y z x y", "z y^2 x^2"]),
        ("weyl", vec!["y^2 x^2"]),
    ] {
        for w in words {
            let plain = qweyl(&["normalize", "--algebra", alg, w], &[]);
            let closed = qweyl(&["normalize", "--algebra", alg, "--closed-form", w], &[]);
            assert_eq!(plain, closed, "{alg} {w}");
            assert_eq!(plain.1, 0);
        }
    }
}

#[test]
fn symprod_example() {
    let (out, status) = qweyl(
        &["symprod", "--algebra", "q-oscillator", "--arity", "2", "[x, 1] * [y, 1]"],
        &[],
    );
    assert_eq!(status, 0);
    assert_eq!(
        out,
        r#"{"arity":2,"terms":[{"class":[[0,1],[1,0]],"coeff":"1/2"},{"class":[[0,0],[1,1]],"coeff":"1/2"}]}"#
    );
}

#[test]
fn error_objects_and_exit_status() {
    let (out, status) = qweyl(&["normalize", "--algebra", "q-weyl", "w^2"], &[]);
    assert_ne!(status, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["code"], "parse_error");
    assert_eq!(v["position"], 0);

    let (out, status) = qweyl(&["normalize", "--algebra", "octonions", "x"], &[]);
    assert_ne!(status, 0);
    assert!(out.contains(r#""code":"unknown_algebra""#), "{out}");

    let (out, status) = qweyl(&["coeffs", "--algebra", "weyl", "--factors", "(0,1),(1,0)"], &[]);
    assert_ne!(status, 0);
    assert!(out.contains(r#""code":"unsupported""#), "{out}");

    let (out, status) = qweyl(&["frobnicate"], &[]);
    assert_eq!(status, 2);
    assert!(out.contains(r#""code":"usage""#), "{out}");

    let (out, status) = qweyl(&["verify", "--suite", "nope"], &[]);
    assert_ne!(status, 0);
    assert!(out.contains("invalid_argument"), "{out}");
}

#[test]
fn work_cap_from_environment() {
    let args = [
        "symprod", "--algebra", "q-oscillator", "--arity", "3", "[x, y, 1] * [x, y, 1] * [y, 1, 1]",
    ];
    let (ok, status) = qweyl(&args, &[]);
    assert_eq!(status, 0, "{ok}");
    let (out, status) = qweyl(&args, &[("QWEYL_MAX_WORK", "35")]);
    assert_ne!(status, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["code"], "too_much_work");
    let (out, _) = qweyl(&args, &[("QWEYL_MAX_WORK", "36")]);
    assert_eq!(out, ok);
    let (out, status) = qweyl(&args, &[("QWEYL_MAX_WORK", "lots")]);
    assert_ne!(status, 0);
    assert!(out.contains("invalid_argument"), "{out}");
}

#[test]
fn small_verify_bounds() {
    let (out, status) = qweyl(
        &["verify", "--suite", "all", "--max-exp", "1", "--max-factors", "2", "--max-t", "2"],
        &[],
    );
    assert_eq!(status, 0, "{out}");
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["pass"], true);
}

fn word_expr(letters: &'static [char]) -> impl Strategy<Value = WordExpr> {
    prop::collection::vec((prop::sample::select(letters), 0u32..5), 0..5).prop_map(|ts| WordExpr {
        terms: ts.into_iter().map(|(letter, exp)| Term { letter, exp }).collect(),
    })
}

fn expr() -> impl Strategy<Value = (AlgebraId, Option<usize>, Expr)> {
    prop::sample::select(AlgebraId::ALL.to_vec()).prop_flat_map(|alg| {
        let letters = alg.letters();
        let word = word_expr(letters).prop_map(move |w| (alg, None, Expr::Word(w)));
        let sym = (1usize..4).prop_flat_map(move |n| {
            prop::collection::vec(prop::collection::vec(word_expr(letters), n), 1..4).prop_map(
                move |classes| {
                    let classes = classes.into_iter().map(|words| ClassExpr { words }).collect();
                    (alg, Some(n), Expr::Sym { arity: n, classes })
                },
            )
        });
        prop_oneof![word, sym]
    })
}

proptest! {
    #[test]
    fn parse_render_round_trip((alg, arity, e) in expr()) {
        let text = e.to_string();
        prop_assert_eq!(parse(&text, alg, arity).unwrap(), e);
    }
}
