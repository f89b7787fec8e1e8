//! One PASS/FAIL line per acceptance criterion. Runs without the libtest
//! harness so the lines are always visible.

use std::io::Write;
use std::process::Command;
use std::time::Instant;

use qweyl_core::verify::{criterion, Bounds};
use qweyl_core::Exec;

const TITLES: [&str; 10] = [
    "q-oscillator closed form equals rewriting (n<=3, exponents<=2)",
    "q-Weyl, h-Weyl, sl2 closed forms equal rewriting (n<=3, exponents<=2)",
    "chi_k(a) equals the Gaussian binomial (k<=a<=8)",
    "q-oscillator recursion equals enumeration",
    "representations hold at degree 6, dropped-q control rejected",
    "corollary identities (t<=5, length<=2, exponents<=2)",
    "symmetrization is multiplicative, products associate",
    "Sym^n closed-form slot products equal rewriting slot products",
    "classical limits q=1, h=0",
    "CLI examples byte-identical, selftest exits 0",
];

fn qweyl(args: &[&str]) -> (String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_qweyl"))
        .args(args)
        .env_remove("QWEYL_MAX_WORK")
        .output()
        .expect("binary runs");
    (
        String::from_utf8(out.stdout).expect("utf-8").trim_end().to_string(),
        out.status.code().unwrap_or(-1),
    )
}

fn cli_conformance() -> Result<String, String> {
    let cases = [
        (
            vec!["normalize", "--algebra", "q-oscillator", "y x"],
            r#"{"terms":[{"exps":[1,1],"coeff":"q"},{"exps":[0,0],"coeff":"h"}]}"#,
        ),
        (
            vec!["coeffs", "--algebra", "q-weyl", "--factors", "(0,0,1),(2,0,0)"],
            r#"{"0":"1","1":"1 + q"}"#,
        ),
    ];
    for (args, expected) in &cases {
        let (out, status) = qweyl(args);
        if out != *expected || status != 0 {
            return Err(format!("{args:?} gave {out} (exit {status})"));
        }
    }
    let (out, status) = qweyl(&["verify", "--suite", "representations"]);
    if !out.starts_with(r#"{"pass":true,"checked":"#) || status != 0 {
        return Err(format!("verify --suite representations gave {out} (exit {status})"));
    }
    let (out, status) = qweyl(&["selftest"]);
    let doc: serde_json::Value = serde_json::from_str(&out).map_err(|e| e.to_string())?;
    let numbers: Vec<u64> = doc["criteria"]
        .as_array()
        .map(|a| a.iter().filter_map(|c| c["criterion"].as_u64()).collect())
        .unwrap_or_default();
    if status != 0 || doc["pass"] != true || numbers != (1..=9).collect::<Vec<u64>>() {
        return Err(format!("selftest exit {status}: {out}"));
    }
    Ok("3 examples, selftest ran criteria 1-9".into())
}

fn main() {
    let bounds = Bounds::default();
    let mut stdout = std::io::stdout().lock();
    let mut failed = Vec::new();
    for (i, title) in TITLES.iter().enumerate() {
        let number = i as u8 + 1;
        let start = Instant::now();
        let result = if number == 10 {
            cli_conformance()
        } else {
            let reports = criterion(number, &bounds, Exec::Parallel);
            let checked: usize = reports.iter().map(|r| r.checked).sum();
            match reports.iter().find(|r| !r.pass()) {
                None => Ok(format!("{checked} checks")),
                Some(r) => Err(r.to_string()),
            }
        };
        let secs = start.elapsed().as_secs_f64();
        let line = match &result {
            Ok(detail) => format!("criterion {number:>2}: PASS  {title} [{detail}, {secs:.1}s]"),
            Err(detail) => format!("criterion {number:>2}: FAIL  {title} [{detail}, {secs:.1}s]"),
        };
        writeln!(stdout, "{line}").expect("stdout");
        if result.is_err() {
            failed.push(number);
        }
    }
    if !failed.is_empty() {
        writeln!(stdout, "failed criteria: {failed:?}").expect("stdout");
        std::process::exit(1);
    }
}
