//! Verification suites: closed forms against the rewrite engine,
//! representation checks, corollary identities, `Symⁿ` products against
//! the invariant tensors, and classical limits.

use std::fmt;

use itertools::Itertools;

use crate::algebra::{AlgebraId, NCPolynomial, NormalMonomial};
use crate::closed_forms::{
    chi_k, closed_form_normal_order, qo_normal_coords, qo_recursion_coords, ExponentSeq,
};
use crate::coeff::{gauss_binomial, PolyQH, Rational};
use crate::exec::{map_reduce, Exec};
use crate::repr::{
    apply, rho_polynomial, rho_word, verify_corollary_qosc, verify_corollary_qweyl, verify_rules,
    OperatorExpr, PolySpaceElement, Primitive, UniPoly,
};
use crate::rewrite::{tensor_multiply, Rewriter};
use crate::sym_power::{to_invariants, SlotEngine, SymElement, SymMultiplier};
use crate::{presentation, Presentation, RewriteRule};

/// Sizes of the verification grids.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    /// Largest exponent of any letter in a factor.
    pub max_exp: u32,
    /// Largest number of factors in a product.
    pub max_factors: usize,
    /// Largest arity `n` of `Symⁿ`.
    pub max_arity: usize,
    /// Largest `t` in the corollary identities.
    pub max_t: u32,
    /// Largest degree of basis vectors in representation checks.
    pub max_degree: u32,
    /// Pairs sampled per algebra at the largest arity.
    pub sym_samples: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Self {
            max_exp: 2,
            max_factors: 3,
            max_arity: 3,
            max_t: 5,
            max_degree: 6,
            sym_samples: 300,
        }
    }
}

/// Result of one suite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: String,
    pub checked: usize,
    pub counterexample: Option<String>,
}

impl SuiteReport {
    pub fn pass(&self) -> bool {
        self.counterexample.is_none()
    }

    fn new(name: impl Into<String>, outcome: Outcome) -> Self {
        Self {
            name: name.into(),
            checked: outcome.checked,
            counterexample: outcome.failure,
        }
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.counterexample {
            None => write!(f, "PASS {} ({} checks)", self.name, self.checked),
            Some(c) => write!(f, "FAIL {} ({} checks): {c}", self.name, self.checked),
        }
    }
}

/// Running tally; keeps the first failure in item order.
#[derive(Clone, Debug, Default)]
struct Outcome {
    checked: usize,
    failure: Option<String>,
}

impl Outcome {
    fn one(failure: Option<String>) -> Self {
        Self {
            checked: 1,
            failure,
        }
    }

    fn merge(self, other: Outcome) -> Outcome {
        Outcome {
            checked: self.checked + other.checked,
            failure: self.failure.or(other.failure),
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(what());
        }
    }
}

fn sweep<T: Sync>(exec: Exec, items: &[T], f: impl Fn(&T) -> Option<String> + Sync + Send) -> Outcome {
    map_reduce(exec, items, Outcome::default, |x| Outcome::one(f(x)), Outcome::merge)
}

/// All factor vectors of the algebra with entries `≤ max_exp`.
pub fn factor_grid(algebra: AlgebraId, max_exp: u32) -> Vec<Vec<u32>> {
    (0..algebra.letter_count())
        .map(|_| 0..=max_exp)
        .multi_cartesian_product()
        .collect()
}

/// Every exponent sequence with `1..=max_factors` factors.
pub fn sequence_grid(algebra: AlgebraId, bounds: &Bounds) -> Vec<ExponentSeq> {
    let factors = factor_grid(algebra, bounds.max_exp);
    (1..=bounds.max_factors)
        .flat_map(|n| {
            (0..n)
                .map(|_| factors.iter().cloned())
                .multi_cartesian_product()
                .map(|fs| ExponentSeq::new(algebra, fs).expect("grid shape"))
                .collect::<Vec<_>>()
        })
        .collect()
}

/// Closed-form reconstruction against the rewrite engine on the full grid.
pub fn oracle_equivalence(algebra: AlgebraId, bounds: &Bounds, exec: Exec) -> SuiteReport {
    let rw = Rewriter::new(algebra);
    let grid = sequence_grid(algebra, bounds);
    let outcome = sweep(exec, &grid, |seq| {
        let closed = closed_form_normal_order(seq).expect("algebra has a closed form");
        let oracle = rw.normal_order(&seq.word());
        (closed != oracle).then(|| format!("{:?}: closed form {closed}, oracle {oracle}", seq.factors()))
    });
    SuiteReport::new(format!("oracle-equivalence {algebra}"), outcome)
}

/// `χ_k(a)` against the Gaussian binomial for `0 ≤ k ≤ a ≤ max_a`.
pub fn chi_gaussian(max_a: u32) -> SuiteReport {
    let mut out = Outcome::default();
    for a in 0..=max_a {
        for k in 0..=a {
            out.check(chi_k(a, k) == gauss_binomial(a, k), || format!("a={a} k={k}"));
        }
    }
    SuiteReport::new("chi-gaussian", out)
}

/// The q-oscillator recursion against direct enumeration.
pub fn recursion_vs_enumeration(bounds: &Bounds, exec: Exec) -> SuiteReport {
    let grid = sequence_grid(AlgebraId::QOscillator, bounds);
    let outcome = sweep(exec, &grid, |seq| {
        let rec = qo_recursion_coords(seq).expect("q-oscillator");
        let direct = qo_normal_coords(seq).expect("q-oscillator");
        (rec != direct).then(|| format!("{:?}", seq.factors()))
    });
    SuiteReport::new("qo-recursion", outcome)
}

/// Presentation with `yx ↦ xy + h` (q dropped) in the q-oscillator.
pub fn dropped_q_presentation() -> Presentation {
    let qo = AlgebraId::QOscillator;
    let rule = RewriteRule::new(
        qo,
        (1, 0),
        vec![(vec![0, 1], PolyQH::one()), (vec![], PolyQH::h())],
    )
    .expect("valid rule");
    Presentation::from_rules(qo, vec![rule]).expect("single rule")
}

/// Every representation respects its relations; the dropped-q control
/// must be rejected.
pub fn representations(bounds: &Bounds) -> SuiteReport {
    let mut out = Outcome::default();
    for alg in AlgebraId::ALL {
        match verify_rules(&presentation(alg), bounds.max_degree) {
            Ok(r) => {
                out.checked += r.checked;
                if out.failure.is_none() {
                    out.failure = r.counterexample.map(|c| format!("{alg}: {c}"));
                }
            }
            Err(e) => out.check(false, || format!("{alg}: {e}")),
        }
    }
    let control = verify_rules(&dropped_q_presentation(), bounds.max_degree);
    out.check(
        matches!(control, Ok(ref r) if !r.pass()),
        || "negative control yx -> xy + h was accepted".into(),
    );
    SuiteReport::new("representations", out)
}

fn vectors(len: usize, max: u32) -> Vec<Vec<u32>> {
    (0..len).map(|_| 0..=max).multi_cartesian_product().collect()
}

/// Both corollary identities, plus applying a normal form to `x^t`
/// against applying the word factor by factor.
pub fn corollaries(bounds: &Bounds, exec: Exec) -> SuiteReport {
    let max_len = bounds.max_factors.min(2);
    let mut qosc = Vec::new();
    let mut qweyl = Vec::new();
    for len in 1..=max_len {
        let vs = vectors(len, bounds.max_exp);
        for t in 0..=bounds.max_t {
            for (a, b) in vs.iter().cartesian_product(&vs) {
                qosc.push((t, a.clone(), b.clone()));
                for c in &vs {
                    qweyl.push((t, a.clone(), b.clone(), c.clone()));
                }
            }
        }
    }
    let o1 = sweep(exec, &qosc, |(t, a, b)| match verify_corollary_qosc(*t, a, b) {
        Ok(true) => None,
        Ok(false) => Some(format!("q-oscillator t={t} a={a:?} b={b:?}")),
        Err(e) => Some(e.to_string()),
    });
    let o2 = sweep(exec, &qweyl, |(t, a, b, c)| {
        match verify_corollary_qweyl(*t, a, b, c) {
            Ok(true) => None,
            Ok(false) => Some(format!("q-weyl t={t} a={a:?} b={b:?} c={c:?}")),
            Err(e) => Some(e.to_string()),
        }
    });
    let o3 = route_equivalence(bounds, exec);
    SuiteReport::new("corollaries", o1.merge(o2).merge(o3))
}

fn route_equivalence(bounds: &Bounds, exec: Exec) -> Outcome {
    let small = Bounds {
        max_factors: bounds.max_factors.min(2),
        ..*bounds
    };
    let mut items = Vec::new();
    for alg in [AlgebraId::QOscillator, AlgebraId::QWeyl] {
        for seq in sequence_grid(alg, &small) {
            for t in 0..=bounds.max_t {
                items.push((seq.clone(), t));
            }
        }
    }
    let rewriters = [
        Rewriter::new(AlgebraId::QOscillator),
        Rewriter::new(AlgebraId::QWeyl),
    ];
    sweep(exec, &items, |(seq, t)| {
        let rw = &rewriters[usize::from(seq.algebra() == AlgebraId::QWeyl)];
        let f = PolySpaceElement::Uni(UniPoly::x_pow(*t));
        let word = seq.word();
        let direct = apply(&rho_word(&word), &f);
        let normal = apply(&rho_polynomial(&rw.normal_order(&word)), &f);
        (direct != normal).then(|| format!("{} {:?} on x^{t}", seq.algebra(), seq.factors()))
    })
}

fn basis_classes(algebra: AlgebraId, arity: usize, max_exp: u32) -> Vec<Vec<NormalMonomial>> {
    let monos: Vec<NormalMonomial> = factor_grid(algebra, max_exp)
        .iter()
        .map(|e| NormalMonomial::new(algebra, e).expect("grid shape"))
        .sorted()
        .collect();
    monos
        .into_iter()
        .combinations_with_replacement(arity)
        .collect()
}

/// Pairs of basis classes per arity: exhaustive below `max_arity`, a
/// fixed strided sample of `sym_samples` pairs at `max_arity` (all pairs
/// if there are fewer).
pub fn sym_pair_family(algebra: AlgebraId, bounds: &Bounds) -> Vec<(Vec<NormalMonomial>, Vec<NormalMonomial>)> {
    let mut out = Vec::new();
    for arity in 1..=bounds.max_arity {
        let classes = basis_classes(algebra, arity, bounds.max_exp);
        let total = classes.len() * classes.len();
        if arity < bounds.max_arity || total <= bounds.sym_samples {
            for (a, b) in classes.iter().cartesian_product(&classes) {
                out.push((a.clone(), b.clone()));
            }
        } else {
            let stride = stride_for(total, bounds.sym_samples);
            for s in 0..bounds.sym_samples {
                let idx = (s * stride) % total;
                out.push((
                    classes[idx / classes.len()].clone(),
                    classes[idx % classes.len()].clone(),
                ));
            }
        }
    }
    out
}

/// A step coprime to `total` that spreads `samples` indices over it.
fn stride_for(total: usize, samples: usize) -> usize {
    let mut stride = (total / samples.max(1)).max(1) | 1;
    while num_integer::gcd(stride, total) != 1 {
        stride += 2;
    }
    stride
}

/// Triples for the associativity spot checks, taken from the pair family.
fn sym_triples(
    family: &[(Vec<NormalMonomial>, Vec<NormalMonomial>)],
    count: usize,
) -> Vec<[Vec<NormalMonomial>; 3]> {
    if family.is_empty() {
        return Vec::new();
    }
    let stride = stride_for(family.len(), count);
    (0..count)
        .map(|s| {
            let (a, b) = &family[(s * stride) % family.len()];
            let (c, _) = &family[(s * stride + stride / 2 + 1) % family.len()];
            [a.clone(), b.clone(), c.clone()]
        })
        .filter(|[a, b, c]| a.len() == b.len() && b.len() == c.len())
        .collect()
}

fn class(ms: &[NormalMonomial]) -> SymElement {
    SymElement::class(ms.to_vec(), PolyQH::one()).expect("positive arity")
}

/// `to_invariants` is multiplicative on the pair family, and products of
/// three classes associate.
pub fn sym_homomorphism(algebra: AlgebraId, bounds: &Bounds, exec: Exec) -> SuiteReport {
    let mult = SymMultiplier::new(algebra).with_exec(Exec::Sequential);
    let family = sym_pair_family(algebra, bounds);
    let homo = sweep(exec, &family, |(a, b)| {
        let (e, f) = (class(a), class(b));
        let prod = match mult.product(a.len(), &[e.clone(), f.clone()]) {
            Ok(p) => p,
            Err(err) => return Some(err.to_string()),
        };
        let lhs = to_invariants(&prod);
        let rhs = tensor_multiply(mult.rewriter(), &to_invariants(&e), &to_invariants(&f))
            .expect("same shape");
        (lhs != rhs).then(|| format!("{algebra} [{}] * [{}]", a.iter().join(", "), b.iter().join(", ")))
    });
    let triples = sym_triples(&family, 60);
    let assoc = sweep(exec, &triples, |[a, b, c]| {
        let n = a.len();
        let (e, f, g) = (class(a), class(b), class(c));
        let all = mult.product(n, &[e.clone(), f.clone(), g.clone()]);
        let left = mult
            .product(n, &[e.clone(), f.clone()])
            .and_then(|ef| mult.product(n, &[ef, g.clone()]));
        let right = mult
            .product(n, &[f, g])
            .and_then(|fg| mult.product(n, &[e, fg]));
        match (all, left, right) {
            (Ok(x), Ok(y), Ok(z)) if x == y && y == z => None,
            _ => Some(format!(
                "{algebra} associativity [{}] [{}] [{}]",
                a.iter().join(", "),
                b.iter().join(", "),
                c.iter().join(", ")
            )),
        }
    });
    SuiteReport::new(format!("sym-homomorphism {algebra}"), homo.merge(assoc))
}

/// Closed-form slot products against rewrite-engine slot products.
pub fn sym_consistency(algebra: AlgebraId, bounds: &Bounds, exec: Exec) -> SuiteReport {
    let closed = SymMultiplier::new(algebra)
        .with_engine(SlotEngine::ClosedForm)
        .with_exec(Exec::Sequential);
    let oracle = SymMultiplier::new(algebra)
        .with_engine(SlotEngine::Oracle)
        .with_exec(Exec::Sequential);
    let family = sym_pair_family(algebra, bounds);
    let outcome = sweep(exec, &family, |(a, b)| {
        let factors = [class(a), class(b)];
        let x = closed.product(a.len(), &factors);
        let y = oracle.product(a.len(), &factors);
        (x != y).then(|| format!("{algebra} [{}] * [{}]", a.iter().join(", "), b.iter().join(", ")))
    });
    SuiteReport::new(format!("sym-closed-form {algebra}"), outcome)
}

/// q-oscillator normal forms at `q = 1` against the Weyl algebra, and the
/// q- and h-derivatives at `q = 1`, `h = 0` against `d/dx`.
pub fn classical_limits(bounds: &Bounds, exec: Exec) -> SuiteReport {
    let qo = Rewriter::new(AlgebraId::QOscillator);
    let weyl = Rewriter::new(AlgebraId::Weyl);
    let one = Rational::from_integer(1.into());
    let grid = sequence_grid(AlgebraId::QOscillator, bounds);
    let forms = sweep(exec, &grid, |seq| {
        let letters = seq.word().letters().to_vec();
        let at_one = qo.normal_order_letters(&letters).map_coeffs(|c| c.eval_q(&one));
        let classical = weyl.normal_order_letters(&letters);
        let relabeled = relabel(&at_one, AlgebraId::Weyl);
        let coords_ok = qo_normal_coords(seq)
            .expect("q-oscillator")
            .entries()
            .values()
            .all(|n| n.eval_q(&one).is_nonneg_integral());
        (relabeled != classical || !coords_ok).then(|| format!("{:?}", seq.factors()))
    });
    let mut derivs = Outcome::default();
    let d = OperatorExpr::prim(Primitive::Derivative);
    let dq = OperatorExpr::prim(Primitive::QDerivative);
    let dh = OperatorExpr::prim(Primitive::HDerivative);
    for n in 0..=8 {
        let f = PolySpaceElement::Uni(UniPoly::x_pow(n));
        let classical = apply(&d, &f).expect("univariate");
        let at = |op: &OperatorExpr, eval: &dyn Fn(&UniPoly) -> UniPoly| match apply(op, &f) {
            Ok(PolySpaceElement::Uni(u)) => Some(PolySpaceElement::Uni(eval(&u))),
            _ => None,
        };
        let q1 = at(&dq, &|u| u.eval_q(&one));
        let h0 = at(&dh, &|u| u.eval_h(&Rational::from_integer(0.into())));
        derivs.check(q1.as_ref() == Some(&classical), || format!("∂_q at q=1 on x^{n}"));
        derivs.check(h0.as_ref() == Some(&classical), || format!("∂_h at h=0 on x^{n}"));
    }
    SuiteReport::new("classical-limits", forms.merge(derivs))
}

fn relabel(p: &NCPolynomial, algebra: AlgebraId) -> NCPolynomial {
    NCPolynomial::from_terms(
        algebra,
        p.terms()
            .map(|(m, c)| (NormalMonomial::new(algebra, m.exps()).expect("same arity"), c.clone())),
    )
    .expect("same algebra")
}

/// Algebras with closed-form coordinates other than the q-oscillator.
pub const THREE_LETTER: [AlgebraId; 3] = [AlgebraId::QWeyl, AlgebraId::HWeyl, AlgebraId::Sl2];

/// Reports for one numbered acceptance criterion (1 to 9).
pub fn criterion(number: u8, bounds: &Bounds, exec: Exec) -> Vec<SuiteReport> {
    match number {
        1 => vec![oracle_equivalence(AlgebraId::QOscillator, bounds, exec)],
        2 => THREE_LETTER
            .iter()
            .map(|&a| oracle_equivalence(a, bounds, exec))
            .collect(),
        3 => vec![chi_gaussian(8)],
        4 => vec![recursion_vs_enumeration(bounds, exec)],
        5 => vec![representations(bounds)],
        6 => vec![corollaries(bounds, exec)],
        7 => AlgebraId::ALL
            .iter()
            .map(|&a| sym_homomorphism(a, bounds, exec))
            .collect(),
        8 => AlgebraId::ALL
            .iter()
            .map(|&a| sym_consistency(a, bounds, exec))
            .collect(),
        9 => vec![classical_limits(bounds, exec)],
        _ => Vec::new(),
    }
}

/// Named suite groups exposed on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Representations,
    Corollaries,
    OracleEquiv,
    All,
}

impl Suite {
    pub fn parse(name: &str) -> Option<Self> {
        Some(match name {
            "representations" => Suite::Representations,
            "corollaries" => Suite::Corollaries,
            "oracle-equiv" => Suite::OracleEquiv,
            "all" => Suite::All,
            _ => return None,
        })
    }

    pub fn criteria(self) -> &'static [u8] {
        match self {
            Suite::Representations => &[5],
            Suite::Corollaries => &[6],
            Suite::OracleEquiv => &[1, 2, 3, 4],
            Suite::All => &[1, 2, 3, 4, 5, 6, 7, 8, 9],
        }
    }
}

pub fn run_suite(suite: Suite, bounds: &Bounds, exec: Exec) -> Vec<SuiteReport> {
    suite
        .criteria()
        .iter()
        .flat_map(|&c| criterion(c, bounds, exec))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tiny() -> Bounds {
        Bounds {
            max_exp: 1,
            max_factors: 2,
            max_arity: 2,
            max_t: 2,
            max_degree: 3,
            sym_samples: 10,
        }
    }

    #[test]
    fn grids_have_expected_sizes() {
        let b = Bounds::default();
        assert_eq!(sequence_grid(AlgebraId::QOscillator, &b).len(), 9 + 81 + 729);
        assert_eq!(factor_grid(AlgebraId::Sl2, 2).len(), 27);
        assert_eq!(basis_classes(AlgebraId::Weyl, 2, 2).len(), 45);
        let fam = sym_pair_family(AlgebraId::Weyl, &tiny());
        // 4 classes at n = 1, C(5,2) = 10 at n = 2, sampled to 10 pairs
        assert_eq!(fam.len(), 16 + 10);
    }

    #[test]
    fn stride_is_coprime() {
        for total in [1usize, 2, 10, 81, 3654 * 3654] {
            let s = stride_for(total, 300);
            assert_eq!(num_integer::gcd(s, total), 1);
        }
    }

    #[test]
    fn small_suites_pass() {
        let b = tiny();
        for c in 1..=9 {
            for r in criterion(c, &b, Exec::Sequential) {
                assert!(r.pass(), "{r}");
                assert!(r.checked > 0, "{r}");
            }
        }
    }

    #[test]
    fn suite_names() {
        assert_eq!(Suite::parse("all").unwrap().criteria().len(), 9);
        assert!(Suite::parse("bogus").is_none());
    }
}
