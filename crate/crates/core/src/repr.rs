//! Operator representations on polynomial spaces and the identities they
//! imply.
//!
//! The two-letter and q/h algebras act on `Q[q,h][x]`; `U(sl2)` acts on
//! `Q[x1,x2]` by vector fields.

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::{presentation, AlgebraId, NCPolynomial, Presentation, Word};
use crate::closed_forms::{crossing_maps, q_normal_coords, ExponentSeq};
use crate::coeff::{binomial, q_falling, q_falling_signed, PolyQH, Rational};
use crate::error::ReprError;

/// `Σ c_n x^n` with coefficients in `Q[q,h]`.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct UniPoly {
    coeffs: BTreeMap<u32, PolyQH>,
}

impl UniPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `c x^n`.
    pub fn monomial(n: u32, c: PolyQH) -> Self {
        let mut p = Self::zero();
        p.add_term(n, &c);
        p
    }

    pub fn x_pow(n: u32) -> Self {
        Self::monomial(n, PolyQH::one())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, n: u32) -> PolyQH {
        self.coeffs.get(&n).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &PolyQH)> + '_ {
        self.coeffs.iter().map(|(n, c)| (*n, c))
    }

    pub fn add_term(&mut self, n: u32, c: &PolyQH) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(n).or_default();
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&n);
        }
    }

    fn map_coeffs(&self, f: impl Fn(&PolyQH) -> PolyQH) -> Self {
        let mut out = Self::zero();
        for (n, c) in &self.coeffs {
            out.add_term(*n, &f(c));
        }
        out
    }

    /// Substitutes a value for `q` in every coefficient.
    pub fn eval_q(&self, value: &Rational) -> Self {
        self.map_coeffs(|c| c.eval_q(value))
    }

    /// Substitutes a value for `h` in every coefficient.
    pub fn eval_h(&self, value: &Rational) -> Self {
        self.map_coeffs(|c| c.eval_h(value))
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts = self.coeffs.iter().map(|(n, c)| format!("({c}) x^{n}"));
        write!(f, "{}", parts.format(" + "))
    }
}

/// `Σ c_{ij} x1^i x2^j` with rational coefficients.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct BiPoly {
    coeffs: BTreeMap<(u32, u32), Rational>,
}

impl BiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(i: u32, j: u32, c: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(i, j, &c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, i: u32, j: u32) -> Rational {
        self.coeffs.get(&(i, j)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, i: u32, j: u32, c: &Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry((i, j)).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&(i, j));
        }
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts = self
            .coeffs
            .iter()
            .map(|((i, j), c)| format!("({c}) x1^{i} x2^{j}"));
        write!(f, "{}", parts.format(" + "))
    }
}

/// A vector in one of the two representation spaces.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum PolySpaceElement {
    Uni(UniPoly),
    Bi(BiPoly),
}

impl PolySpaceElement {
    fn space(&self) -> &'static str {
        match self {
            PolySpaceElement::Uni(_) => "univariate",
            PolySpaceElement::Bi(_) => "bivariate",
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            PolySpaceElement::Uni(p) => p.is_zero(),
            PolySpaceElement::Bi(p) => p.is_zero(),
        }
    }

    fn zero_like(&self) -> Self {
        match self {
            PolySpaceElement::Uni(_) => PolySpaceElement::Uni(UniPoly::zero()),
            PolySpaceElement::Bi(_) => PolySpaceElement::Bi(BiPoly::zero()),
        }
    }

    fn add(&self, other: &Self) -> Result<Self, ReprError> {
        match (self, other) {
            (PolySpaceElement::Uni(a), PolySpaceElement::Uni(b)) => {
                let mut out = a.clone();
                for (n, c) in b.terms() {
                    out.add_term(n, c);
                }
                Ok(PolySpaceElement::Uni(out))
            }
            (PolySpaceElement::Bi(a), PolySpaceElement::Bi(b)) => {
                let mut out = a.clone();
                for ((i, j), c) in &b.coeffs {
                    out.add_term(*i, *j, c);
                }
                Ok(PolySpaceElement::Bi(out))
            }
            _ => Err(ReprError::Incompatible {
                op: "+".into(),
                space: self.space(),
            }),
        }
    }

    fn scale(&self, c: &PolyQH) -> Result<Self, ReprError> {
        match self {
            PolySpaceElement::Uni(p) => Ok(PolySpaceElement::Uni(p.map_coeffs(|v| v * c))),
            PolySpaceElement::Bi(p) => {
                let k = c.as_constant().ok_or_else(|| ReprError::NonConstantScalar {
                    coeff: c.to_string(),
                })?;
                let mut out = BiPoly::zero();
                for ((i, j), v) in &p.coeffs {
                    out.add_term(*i, *j, &(v * &k));
                }
                Ok(PolySpaceElement::Bi(out))
            }
        }
    }
}

/// Primitive operators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Primitive {
    /// `f ↦ (f(qx) - f(x)) / ((q - 1) x)`.
    QDerivative,
    /// `f ↦ f(qx)`.
    QShift,
    /// `f ↦ (f(x + h) - f(x)) / h`.
    HDerivative,
    /// `f ↦ f(x + h)`.
    HShift,
    /// Multiplication by `x`.
    X,
    /// Multiplication by `q`.
    Q,
    /// Multiplication by `h`.
    H,
    /// The ordinary derivative `d/dx`.
    Derivative,
    /// `x2 ∂/∂x1`.
    SlE,
    /// `x1 ∂/∂x1 - x2 ∂/∂x2`.
    SlH,
    /// `x1 ∂/∂x2`.
    SlF,
}

impl Primitive {
    fn name(self) -> &'static str {
        match self {
            Primitive::QDerivative => "∂_q",
            Primitive::QShift => "s_q",
            Primitive::HDerivative => "∂_h",
            Primitive::HShift => "s_h",
            Primitive::X => "x",
            Primitive::Q => "q",
            Primitive::H => "h",
            Primitive::Derivative => "∂_x",
            Primitive::SlE => "x2∂1",
            Primitive::SlH => "x1∂1-x2∂2",
            Primitive::SlF => "x1∂2",
        }
    }

    fn on_bivariate(self) -> bool {
        matches!(self, Primitive::SlE | Primitive::SlH | Primitive::SlF)
    }
}

/// Formal sums and composites of primitives.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OperatorExpr {
    Prim(Primitive),
    /// Multiplication by a scalar.
    Scalar(PolyQH),
    /// `ops[0] ∘ ops[1] ∘ ...`; the last one acts first. Empty is the
    /// identity.
    Compose(Vec<OperatorExpr>),
    Sum(Vec<OperatorExpr>),
}

impl OperatorExpr {
    pub fn prim(p: Primitive) -> Self {
        OperatorExpr::Prim(p)
    }

    pub fn identity() -> Self {
        OperatorExpr::Compose(Vec::new())
    }

    pub fn then(self, inner: OperatorExpr) -> Self {
        OperatorExpr::Compose(vec![self, inner])
    }
}

pub fn apply(op: &OperatorExpr, f: &PolySpaceElement) -> Result<PolySpaceElement, ReprError> {
    match op {
        OperatorExpr::Prim(p) => apply_primitive(*p, f),
        OperatorExpr::Scalar(c) => f.scale(c),
        OperatorExpr::Compose(ops) => {
            let mut cur = f.clone();
            for o in ops.iter().rev() {
                cur = apply(o, &cur)?;
            }
            Ok(cur)
        }
        OperatorExpr::Sum(ops) => {
            let mut acc = f.zero_like();
            for o in ops {
                acc = acc.add(&apply(o, f)?)?;
            }
            Ok(acc)
        }
    }
}

fn apply_primitive(p: Primitive, f: &PolySpaceElement) -> Result<PolySpaceElement, ReprError> {
    let incompatible = || ReprError::Incompatible {
        op: p.name().into(),
        space: f.space(),
    };
    match f {
        PolySpaceElement::Uni(u) if !p.on_bivariate() => apply_uni(p, u).map(PolySpaceElement::Uni),
        PolySpaceElement::Bi(b) if p.on_bivariate() => Ok(PolySpaceElement::Bi(apply_bi(p, b))),
        _ => Err(incompatible()),
    }
}

fn q_shift(u: &UniPoly) -> UniPoly {
    let mut out = UniPoly::zero();
    for (n, c) in u.terms() {
        out.add_term(n, &c.shift(n, 0));
    }
    out
}

fn h_shift(u: &UniPoly) -> UniPoly {
    let mut out = UniPoly::zero();
    for (n, c) in u.terms() {
        for j in 0..=n {
            let w = PolyQH::from_bigint(binomial(n as u64, j as u64)).shift(0, n - j);
            out.add_term(j, &(c * &w));
        }
    }
    out
}

fn difference(a: &UniPoly, b: &UniPoly) -> UniPoly {
    let mut out = a.clone();
    for (n, c) in b.terms() {
        out.add_term(n, &-c);
    }
    out
}

fn apply_uni(p: Primitive, u: &UniPoly) -> Result<UniPoly, ReprError> {
    let mut out = UniPoly::zero();
    match p {
        Primitive::X => {
            for (n, c) in u.terms() {
                out.add_term(n + 1, c);
            }
        }
        Primitive::Q => out = u.map_coeffs(|c| c * &PolyQH::q()),
        Primitive::H => out = u.map_coeffs(|c| c * &PolyQH::h()),
        Primitive::QShift => out = q_shift(u),
        Primitive::HShift => out = h_shift(u),
        Primitive::Derivative => {
            for (n, c) in u.terms().filter(|(n, _)| *n > 0) {
                out.add_term(n - 1, &c.scale(&Rational::from_integer(BigInt::from(n))));
            }
        }
        Primitive::QDerivative => {
            // (f(qx) - f(x)) / ((q - 1) x), divided exactly.
            for (n, c) in difference(&q_shift(u), u).terms() {
                if n == 0 {
                    return Err(ReprError::NotDivisible);
                }
                let quotient = c.div_q_minus_one().ok_or(ReprError::NotDivisible)?;
                out.add_term(n - 1, &quotient);
            }
        }
        Primitive::HDerivative => {
            for (n, c) in difference(&h_shift(u), u).terms() {
                out.add_term(n, &c.div_h().ok_or(ReprError::NotDivisible)?);
            }
        }
        Primitive::SlE | Primitive::SlH | Primitive::SlF => unreachable!("bivariate primitive"),
    }
    Ok(out)
}

fn apply_bi(p: Primitive, b: &BiPoly) -> BiPoly {
    let mut out = BiPoly::zero();
    for (&(i, j), c) in &b.coeffs {
        let int = |n: i64| Rational::from_integer(BigInt::from(n));
        match p {
            Primitive::SlE if i > 0 => out.add_term(i - 1, j + 1, &(c * int(i as i64))),
            Primitive::SlH => out.add_term(i, j, &(c * int(i as i64 - j as i64))),
            Primitive::SlF if j > 0 => out.add_term(i + 1, j - 1, &(c * int(j as i64))),
            _ => {}
        }
    }
    out
}

/// `ρ(letter)` for the algebra's representation.
pub fn rho(algebra: AlgebraId, letter: u8) -> OperatorExpr {
    use Primitive::*;
    let p = OperatorExpr::prim;
    match (algebra, letter) {
        (AlgebraId::Sl2, 0) => p(SlE),
        (AlgebraId::Sl2, 1) => p(SlH),
        (AlgebraId::Sl2, 2) => p(SlF),
        (_, 0) => p(X),
        (AlgebraId::Weyl, 1) => p(H).then(p(Derivative)),
        (AlgebraId::QOscillator, 1) => p(H).then(p(QDerivative)),
        (AlgebraId::QWeyl, 1) => p(QShift),
        (AlgebraId::QWeyl, 2) => p(QDerivative),
        (AlgebraId::HWeyl, 1) => p(HDerivative),
        (AlgebraId::HWeyl, 2) => p(HShift),
        _ => panic!("letter {letter} out of range for {algebra}"),
    }
}

/// `ρ(w_1 ... w_k) = ρ(w_1) ∘ ... ∘ ρ(w_k)`.
pub fn rho_word(w: &Word) -> OperatorExpr {
    OperatorExpr::Compose(w.letters().iter().map(|&l| rho(w.algebra(), l)).collect())
}

/// `ρ(Σ c_m X^m)`.
pub fn rho_polynomial(p: &NCPolynomial) -> OperatorExpr {
    OperatorExpr::Sum(
        p.terms()
            .map(|(m, c)| OperatorExpr::Scalar(c.clone()).then(rho_word(&m.word())))
            .collect(),
    )
}

/// Basis of the representation space up to total degree `max_degree`.
pub fn basis_up_to(algebra: AlgebraId, max_degree: u32) -> Vec<PolySpaceElement> {
    if algebra == AlgebraId::Sl2 {
        (0..=max_degree)
            .flat_map(|d| (0..=d).map(move |i| (i, d - i)))
            .map(|(i, j)| PolySpaceElement::Bi(BiPoly::monomial(i, j, Rational::one())))
            .collect()
    } else {
        (0..=max_degree)
            .map(|n| PolySpaceElement::Uni(UniPoly::x_pow(n)))
            .collect()
    }
}

/// Outcome of checking relations against a representation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReprReport {
    pub algebra: AlgebraId,
    pub checked: usize,
    /// First relation and basis vector on which the two sides differ.
    pub counterexample: Option<String>,
}

impl ReprReport {
    pub fn pass(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Checks every rule of `pres` under the algebra's `ρ` on all basis
/// vectors up to `max_degree`.
pub fn verify_rules(pres: &Presentation, max_degree: u32) -> Result<ReprReport, ReprError> {
    let algebra = pres.algebra();
    let basis = basis_up_to(algebra, max_degree);
    let mut checked = 0;
    for rule in pres.rules() {
        let (a, b) = rule.lhs();
        let lhs = OperatorExpr::Compose(vec![rho(algebra, a), rho(algebra, b)]);
        let rhs = OperatorExpr::Sum(
            rule.rhs_words()
                .map(|(w, c)| OperatorExpr::Scalar(c.clone()).then(rho_word(&w)))
                .collect(),
        );
        for f in &basis {
            checked += 1;
            if apply(&lhs, f)? != apply(&rhs, f)? {
                return Ok(ReprReport {
                    algebra,
                    checked,
                    counterexample: Some(format!("{rule} on {f:?}")),
                });
            }
        }
    }
    Ok(ReprReport {
        algebra,
        checked,
        counterexample: None,
    })
}

/// True iff `ρ` respects every defining relation up to `max_degree`.
pub fn verify_representation(algebra: AlgebraId, max_degree: u32) -> bool {
    verify_rules(&presentation(algebra), max_degree)
        .map(|r| r.pass())
        .unwrap_or(false)
}

/// `[t]_k` with `[m]` for possibly negative `m`; `None` only when a
/// negative bracket would be needed.
fn bracket_falling(top: i64, k: u32) -> Option<PolyQH> {
    q_falling_signed(top, k)
}

fn suffix_sum(v: &[u32], i: usize) -> i64 {
    v[i + 1..].iter().map(|&x| x as i64).sum()
}

/// `Π_i [t + |a_{>i}| - |b_{>i}|]_{b_i}` against the sum over `k` and
/// `p ∈ P_k(U, V)` of `q^{c(p)} [t]_{|b| - k}`.
pub fn verify_corollary_qosc(t: u32, a: &[u32], b: &[u32]) -> Result<bool, ReprError> {
    if a.len() != b.len() {
        return Err(ReprError::LengthMismatch);
    }
    if a.is_empty() {
        return Ok(true);
    }
    let mut lhs = PolyQH::one();
    for i in (0..a.len()).rev() {
        let top = t as i64 + suffix_sum(a, i) - suffix_sum(b, i);
        lhs = &lhs * &bracket_falling(top, b[i]).expect("reached only past nonzero factors");
        if lhs.is_zero() {
            break;
        }
    }
    let seq = ExponentSeq::new(
        AlgebraId::QOscillator,
        a.iter().zip(b).map(|(&x, &y)| vec![x, y]).collect(),
    )
    .expect("pairs");
    let b_total: u32 = b.iter().sum();
    let mut rhs = PolyQH::zero();
    for k in 0..=b_total {
        let tail = q_falling(t, b_total - k);
        if tail.is_zero() {
            continue;
        }
        let maps = crossing_maps(&seq, k as usize).expect("q-oscillator sequence");
        let weight: PolyQH = maps.iter().map(|p| PolyQH::q_pow(p.crossing_number())).sum();
        rhs += &(&weight * &tail);
    }
    Ok(lhs == rhs)
}

/// `Π_i q^{γ(i)} [t + |a_{>i}| - |c_{>i}|]_{c_i}` against
/// `Σ_k N_q(A, k) q^{(|b| + |k|)(t - |c| + |k|)} [t]_{|c| - |k|}`.
pub fn verify_corollary_qweyl(t: u32, a: &[u32], b: &[u32], c: &[u32]) -> Result<bool, ReprError> {
    if a.len() != b.len() || a.len() != c.len() {
        return Err(ReprError::LengthMismatch);
    }
    if a.is_empty() {
        return Ok(true);
    }
    let mut lhs = PolyQH::one();
    for i in (0..a.len()).rev() {
        let top = t as i64 + suffix_sum(a, i) - suffix_sum(c, i);
        let factor = bracket_falling(top, c[i]).expect("reached only past nonzero factors");
        if factor.is_zero() {
            lhs = PolyQH::zero();
            break;
        }
        // top >= c_i here, so the exponent is nonnegative.
        let gamma = b[i] as i64 * (top - c[i] as i64);
        lhs = (&lhs * &factor).shift(gamma as u32, 0);
    }
    let seq = ExponentSeq::new(
        AlgebraId::QWeyl,
        (0..a.len()).map(|i| vec![a[i], b[i], c[i]]).collect(),
    )
    .expect("triples");
    let coords = q_normal_coords(&seq).expect("q-Weyl sequence");
    let b_total: u32 = b.iter().sum();
    let c_total: u32 = c.iter().sum();
    let mut rhs = PolyQH::zero();
    for (k, n) in coords.entries() {
        let k_total: u32 = k.iter().sum();
        let tail = q_falling(t, c_total - k_total);
        if tail.is_zero() {
            continue;
        }
        let extra = (b_total + k_total) * (t + k_total - c_total);
        rhs += &(n * &tail).shift(extra, 0);
    }
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::RewriteRule;
    use crate::coeff::q_integer;

    fn uni(n: u32) -> PolySpaceElement {
        PolySpaceElement::Uni(UniPoly::x_pow(n))
    }

    fn op(p: Primitive) -> OperatorExpr {
        OperatorExpr::prim(p)
    }

    #[test]
    fn primitive_examples() {
        let dq = apply(&op(Primitive::QDerivative), &uni(2)).unwrap();
        assert_eq!(dq, PolySpaceElement::Uni(UniPoly::monomial(1, q_integer(2))));

        let sh = apply(&op(Primitive::HShift), &uni(2)).unwrap();
        let mut expected = UniPoly::x_pow(2);
        expected.add_term(1, &PolyQH::from_int(2).shift(0, 1));
        expected.add_term(0, &PolyQH::h_pow(2));
        assert_eq!(sh, PolySpaceElement::Uni(expected));

        let x1x2 = PolySpaceElement::Bi(BiPoly::monomial(1, 1, Rational::one()));
        assert!(apply(&rho(AlgebraId::Sl2, 1), &x1x2).unwrap().is_zero());

        let sq = apply(&op(Primitive::QShift), &uni(3)).unwrap();
        assert_eq!(sq, PolySpaceElement::Uni(UniPoly::monomial(3, PolyQH::q_pow(3))));
    }

    #[test]
    fn h_derivative_of_powers() {
        for n in 0..7u32 {
            let got = apply(&op(Primitive::HDerivative), &uni(n)).unwrap();
            let mut expected = UniPoly::zero();
            for j in 0..n {
                expected.add_term(
                    j,
                    &PolyQH::from_bigint(binomial(n as u64, j as u64)).shift(0, n - 1 - j),
                );
            }
            assert_eq!(got, PolySpaceElement::Uni(expected));
        }
    }

    #[test]
    fn incompatible_spaces() {
        let bi = PolySpaceElement::Bi(BiPoly::monomial(1, 0, Rational::one()));
        assert!(matches!(
            apply(&op(Primitive::QShift), &bi),
            Err(ReprError::Incompatible { .. })
        ));
        assert!(apply(&op(Primitive::SlE), &uni(1)).is_err());
        assert!(matches!(
            apply(&OperatorExpr::Scalar(PolyQH::q()), &bi),
            Err(ReprError::NonConstantScalar { .. })
        ));
        assert_eq!(apply(&OperatorExpr::identity(), &uni(4)).unwrap(), uni(4));
    }

    #[test]
    fn all_representations_hold() {
        for alg in AlgebraId::ALL {
            let r = verify_rules(&presentation(alg), 6).unwrap();
            assert!(r.pass(), "{alg}: {:?}", r.counterexample);
            assert!(r.checked > 0);
        }
    }

    #[test]
    fn negative_controls() {
        let qo = AlgebraId::QOscillator;
        for rhs in [
            vec![(vec![0, 1], PolyQH::one()), (vec![], PolyQH::h())],
            vec![(vec![0, 1], PolyQH::one())],
        ] {
            let rule = RewriteRule::new(qo, (1, 0), rhs).unwrap();
            let pres = Presentation::from_rules(qo, vec![rule]).unwrap();
            assert!(!verify_rules(&pres, 6).unwrap().pass());
        }
    }

    #[test]
    fn corollary_examples() {
        assert!(verify_corollary_qosc(1, &[0], &[1]).unwrap());
        assert!(verify_corollary_qosc(3, &[0, 1], &[1, 1]).unwrap());
        assert!(verify_corollary_qosc(0, &[1, 0], &[2, 1]).unwrap());
        assert!(verify_corollary_qweyl(2, &[0], &[0], &[1]).unwrap());
        assert!(verify_corollary_qweyl(2, &[0, 1], &[0, 0], &[1, 0]).unwrap());
        assert!(verify_corollary_qweyl(1, &[0, 2], &[1, 0], &[1, 1]).unwrap());
        assert!(matches!(
            verify_corollary_qosc(1, &[0], &[1, 1]),
            Err(ReprError::LengthMismatch)
        ));
    }

    #[test]
    fn classical_limits() {
        let one = Rational::one();
        for n in 0..=8 {
            let classical = apply(&op(Primitive::Derivative), &uni(n)).unwrap();
            let PolySpaceElement::Uni(dq) = apply(&op(Primitive::QDerivative), &uni(n)).unwrap()
            else {
                unreachable!()
            };
            assert_eq!(PolySpaceElement::Uni(dq.eval_q(&one)), classical);
            let PolySpaceElement::Uni(dh) = apply(&op(Primitive::HDerivative), &uni(n)).unwrap()
            else {
                unreachable!()
            };
            assert_eq!(PolySpaceElement::Uni(dh.eval_h(&Rational::zero())), classical);
        }
    }
}
