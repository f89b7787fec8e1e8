//! Subcommand implementations. Each returns the JSON document to print.

use serde::Serialize;
use thiserror::Error;

use qweyl_core::closed_forms::{closed_form_normal_order, normal_coords, ExponentSeq};
use qweyl_core::error::{AlgebraError, ClosedFormError, SymError};
use qweyl_core::sym_power::{max_work_from_env, SymMultiplier};
use qweyl_core::verify::{criterion, run_suite, Bounds, Suite, SuiteReport};
use qweyl_core::{AlgebraId, Exec, NCPolynomial, NormalMonomial, PolyQH, Rewriter, SymElement};

use crate::parse::{parse_factors, parse_symexpr, parse_word, ParseError, WordExpr};

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    ClosedForm(#[from] ClosedFormError),
    #[error(transparent)]
    Sym(#[from] SymError),
    #[error("closed form and rewriting disagree on {0}")]
    EngineMismatch(String),
    #[error("unknown suite '{0}' (expected representations, corollaries, oracle-equiv or all)")]
    UnknownSuite(String),
    #[error("{0}")]
    Usage(String),
    #[error("verification failed: {0}")]
    Verification(String),
}

impl CliError {
    pub fn code(&self) -> &'static str {
        match self {
            CliError::Parse(_) => "parse_error",
            CliError::Algebra(AlgebraError::UnknownAlgebra(_)) => "unknown_algebra",
            CliError::Algebra(_) => "algebra_error",
            CliError::ClosedForm(ClosedFormError::Unsupported { .. }) => "unsupported",
            CliError::ClosedForm(_) => "invalid_argument",
            CliError::Sym(SymError::TooMuchWork { .. }) => "too_much_work",
            CliError::Sym(SymError::InvalidCap { .. }) => "invalid_argument",
            CliError::Sym(_) => "invalid_argument",
            CliError::EngineMismatch(_) => "engine_mismatch",
            CliError::UnknownSuite(_) => "invalid_argument",
            CliError::Usage(_) => "usage",
            CliError::Verification(_) => "verification_failed",
        }
    }

    pub fn position(&self) -> Option<usize> {
        match self {
            CliError::Parse(e) => Some(e.position),
            _ => None,
        }
    }

    pub fn exit_status(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Parse(_) => 2,
            _ => 1,
        }
    }
}

#[derive(Serialize)]
pub struct ErrorJson {
    pub code: &'static str,
    pub message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub position: Option<usize>,
}

impl From<&CliError> for ErrorJson {
    fn from(e: &CliError) -> Self {
        ErrorJson {
            code: e.code(),
            message: e.to_string(),
            position: e.position(),
        }
    }
}

pub fn error_json(e: &CliError) -> String {
    to_json(&ErrorJson::from(e))
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("plain data serializes")
}

#[derive(Serialize)]
struct TermJson {
    exps: Vec<u32>,
    coeff: String,
}

#[derive(Serialize)]
struct PolyJson {
    terms: Vec<TermJson>,
}

/// `{"terms":[...]}` with terms in descending monomial order.
pub fn polynomial_json(p: &NCPolynomial) -> String {
    to_json(&PolyJson {
        terms: p
            .terms()
            .rev()
            .map(|(m, c)| TermJson {
                exps: m.exps().to_vec(),
                coeff: c.to_string(),
            })
            .collect(),
    })
}

pub fn algebra(id: &str) -> Result<AlgebraId, CliError> {
    Ok(id.parse()?)
}

fn word_factors(algebra: AlgebraId, w: &WordExpr) -> Result<ExponentSeq, ClosedFormError> {
    let factors = w
        .terms
        .iter()
        .map(|t| {
            let mut e = vec![0; algebra.letter_count()];
            e[algebra.letter_index(t.letter).expect("parsed") as usize] = t.exp;
            e
        })
        .collect();
    ExponentSeq::new(algebra, factors)
}

pub fn normalize(algebra: AlgebraId, src: &str, closed_form: bool) -> Result<String, CliError> {
    let w = parse_word(src, algebra)?;
    let oracle = Rewriter::new(algebra).normal_order(&w.to_word(algebra));
    if closed_form && algebra.has_closed_form() && !w.terms.is_empty() {
        let closed = closed_form_normal_order(&word_factors(algebra, &w)?)?;
        if closed != oracle {
            return Err(CliError::EngineMismatch(w.to_string()));
        }
        return Ok(polynomial_json(&closed));
    }
    Ok(polynomial_json(&oracle))
}

pub fn coeffs(algebra: AlgebraId, factors: &str) -> Result<String, CliError> {
    let seq = ExponentSeq::new(algebra, parse_factors(factors, algebra)?)?;
    let coords = normal_coords(&seq)?;
    let mut map = serde_json::Map::new();
    for (k, v) in coords.entries_text() {
        map.insert(k, serde_json::Value::String(v));
    }
    Ok(to_json(&map))
}

#[derive(Serialize)]
struct SymTermJson {
    class: Vec<Vec<u32>>,
    coeff: String,
}

#[derive(Serialize)]
struct SymJson {
    arity: usize,
    terms: Vec<SymTermJson>,
}

pub fn sym_json(e: &SymElement) -> String {
    let mut terms: Vec<SymTermJson> = e
        .terms()
        .map(|(k, c)| SymTermJson {
            class: k.iter().map(|m| m.exps().to_vec()).collect(),
            coeff: c.to_string(),
        })
        .collect();
    terms.reverse();
    to_json(&SymJson {
        arity: e.arity(),
        terms,
    })
}

/// Multilinear expansion of a class whose slots are arbitrary normal forms.
fn class_element(
    algebra: AlgebraId,
    arity: usize,
    slots: &[NCPolynomial],
) -> Result<SymElement, CliError> {
    let mut out = SymElement::zero(algebra, arity)?;
    let mut stack: Vec<(Vec<NormalMonomial>, PolyQH)> = vec![(Vec::new(), PolyQH::one())];
    for p in slots {
        let mut next = Vec::new();
        for (ms, c) in &stack {
            for (m, v) in p.terms() {
                let mut ms = ms.clone();
                ms.push(*m);
                next.push((ms, c * v));
            }
        }
        stack = next;
    }
    for (ms, c) in stack {
        out.add_term(ms, &c)?;
    }
    Ok(out)
}

pub fn symprod(algebra: AlgebraId, arity: usize, src: &str) -> Result<String, CliError> {
    if arity == 0 {
        return Err(SymError::ZeroArity.into());
    }
    let classes = parse_symexpr(src, algebra, arity)?;
    let mult = SymMultiplier::new(algebra).with_max_work(max_work_from_env()?);
    let factors = classes
        .iter()
        .map(|c| {
            let slots: Vec<NCPolynomial> = c
                .words
                .iter()
                .map(|w| mult.rewriter().normal_order(&w.to_word(algebra)))
                .collect();
            class_element(algebra, arity, &slots)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(sym_json(&mult.product(arity, &factors)?))
}

#[derive(Serialize)]
struct SuiteJson {
    name: String,
    pass: bool,
    checked: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    counterexample: Option<String>,
}

impl From<&SuiteReport> for SuiteJson {
    fn from(r: &SuiteReport) -> Self {
        SuiteJson {
            name: r.name.clone(),
            pass: r.pass(),
            checked: r.checked,
            counterexample: r.counterexample.clone(),
        }
    }
}

#[derive(Serialize)]
struct VerifyJson {
    pass: bool,
    checked: usize,
    suites: Vec<SuiteJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<ErrorJson>,
}

fn first_failure<'a>(reports: impl IntoIterator<Item = &'a SuiteReport>) -> Option<CliError> {
    reports
        .into_iter()
        .find(|r| !r.pass())
        .map(|r| CliError::Verification(r.to_string()))
}

/// The report document and, on failure, the error it carries.
pub fn verify(suite: &str, bounds: &Bounds) -> Result<(String, Option<CliError>), CliError> {
    let suite = Suite::parse(suite).ok_or_else(|| CliError::UnknownSuite(suite.to_string()))?;
    let reports = run_suite(suite, bounds, Exec::Parallel);
    let failure = first_failure(&reports);
    let doc = VerifyJson {
        pass: failure.is_none(),
        checked: reports.iter().map(|r| r.checked).sum(),
        suites: reports.iter().map(SuiteJson::from).collect(),
        error: failure.as_ref().map(ErrorJson::from),
    };
    Ok((to_json(&doc), failure))
}

#[derive(Serialize)]
struct CriterionJson {
    criterion: u8,
    pass: bool,
    checked: usize,
    suites: Vec<SuiteJson>,
}

#[derive(Serialize)]
struct SelftestJson {
    pass: bool,
    criteria: Vec<CriterionJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<ErrorJson>,
}

/// Criteria 1 to 9 at the default bounds.
pub fn selftest() -> (String, Option<CliError>) {
    let bounds = Bounds::default();
    let mut all = Vec::new();
    let criteria: Vec<CriterionJson> = (1..=9)
        .map(|c| {
            let reports = criterion(c, &bounds, Exec::Parallel);
            let out = CriterionJson {
                criterion: c,
                pass: reports.iter().all(|r| r.pass()),
                checked: reports.iter().map(|r| r.checked).sum(),
                suites: reports.iter().map(SuiteJson::from).collect(),
            };
            all.extend(reports);
            out
        })
        .collect();
    let failure = first_failure(&all);
    let doc = SelftestJson {
        pass: failure.is_none(),
        criteria,
        error: failure.as_ref().map(ErrorJson::from),
    };
    (to_json(&doc), failure)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalize_example() {
        let out = normalize(AlgebraId::QOscillator, "y x", false).unwrap();
        assert_eq!(
            out,
            r#"{"terms":[{"exps":[1,1],"coeff":"q"},{"exps":[0,0],"coeff":"h"}]}"#
        );
        assert_eq!(normalize(AlgebraId::QOscillator, "y x", true).unwrap(), out);
        assert_eq!(
            normalize(AlgebraId::Weyl, "1", true).unwrap(),
            r#"{"terms":[{"exps":[0,0],"coeff":"1"}]}"#
        );
    }

    #[test]
    fn coeffs_example() {
        assert_eq!(
            coeffs(AlgebraId::QWeyl, "(0,0,1),(2,0,0)").unwrap(),
            r#"{"0":"1","1":"1 + q"}"#
        );
        assert!(matches!(
            coeffs(AlgebraId::Weyl, "(0,1),(1,0)"),
            Err(CliError::ClosedForm(ClosedFormError::Unsupported { .. }))
        ));
    }

    #[test]
    fn symprod_example() {
        let out = symprod(AlgebraId::QOscillator, 2, "[y, 1] * [x, 1]").unwrap();
        assert_eq!(
            out,
            r#"{"arity":2,"terms":[{"class":[[0,1],[1,0]],"coeff":"1/2"},{"class":[[0,0],[1,1]],"coeff":"1/2*q"},{"class":[[0,0],[0,0]],"coeff":"1/2*h"}]}"#
        );
    }

    #[test]
    fn symprod_expands_non_normal_slots() {
        // [y x, 1] is q [x y, 1] + h [1, 1]
        let a = symprod(AlgebraId::QOscillator, 2, "[y x, 1]").unwrap();
        assert_eq!(
            a,
            r#"{"arity":2,"terms":[{"class":[[0,0],[1,1]],"coeff":"q"},{"class":[[0,0],[0,0]],"coeff":"h"}]}"#
        );
    }

    #[test]
    fn error_objects() {
        let e = normalize(AlgebraId::QWeyl, "w^2", false).unwrap_err();
        assert_eq!(
            error_json(&e),
            r#"{"code":"parse_error","message":"unknown letter 'w' for q-weyl at position 0 (expected letter 'x', 'y', 'z')","position":0}"#
        );
        assert_eq!(e.exit_status(), 2);
        let e = algebra("octonions").unwrap_err();
        assert_eq!(e.code(), "unknown_algebra");
        assert!(!error_json(&e).contains("position"));
    }
}
