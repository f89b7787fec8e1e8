use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;

use super::Rewriter;
use crate::algebra::{check_same, AlgebraId, NCPolynomial, NormalMonomial};
use crate::coeff::{factorial, PolyQH, Rational};
use crate::error::TensorError;

/// Element of `A^{⊗n}`: a linear combination of `n`-tuples of normal
/// monomials.
#[derive(Clone, PartialEq, Eq)]
pub struct TensorElement {
    algebra: AlgebraId,
    arity: usize,
    terms: BTreeMap<Vec<NormalMonomial>, PolyQH>,
}

impl TensorElement {
    pub fn zero(algebra: AlgebraId, arity: usize) -> Self {
        Self {
            algebra,
            arity,
            terms: BTreeMap::new(),
        }
    }

    /// `1 ⊗ ... ⊗ 1`.
    pub fn unit(algebra: AlgebraId, arity: usize) -> Self {
        Self::basis(vec![NormalMonomial::unit(algebra); arity], PolyQH::one())
            .expect("unit tuple is well formed")
    }

    /// `coeff * (m_1 ⊗ ... ⊗ m_n)`.
    pub fn basis(tuple: Vec<NormalMonomial>, coeff: PolyQH) -> Result<Self, TensorError> {
        let first = tuple.first().ok_or(TensorError::TupleLength {
            expected: 1,
            got: 0,
        })?;
        let algebra = first.algebra();
        let mut t = Self::zero(algebra, tuple.len());
        t.add_term(tuple, &coeff)?;
        Ok(t)
    }

    pub fn algebra(&self) -> AlgebraId {
        self.algebra
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<NormalMonomial>, &PolyQH)> + '_ {
        self.terms.iter()
    }

    pub fn coeff(&self, tuple: &[NormalMonomial]) -> PolyQH {
        self.terms.get(tuple).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, tuple: Vec<NormalMonomial>, c: &PolyQH) -> Result<(), TensorError> {
        if tuple.len() != self.arity {
            return Err(TensorError::TupleLength {
                expected: self.arity,
                got: tuple.len(),
            });
        }
        for m in &tuple {
            check_same(self.algebra, m.algebra())?;
        }
        self.add_term_unchecked(tuple, c);
        Ok(())
    }

    pub(crate) fn add_term_unchecked(&mut self, tuple: Vec<NormalMonomial>, c: &PolyQH) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(tuple) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(c.clone());
            }
        }
    }

    pub fn add(&self, other: &TensorElement) -> Result<TensorElement, TensorError> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (t, c) in &other.terms {
            out.add_term_unchecked(t.clone(), c);
        }
        Ok(out)
    }

    pub fn scale(&self, c: &PolyQH) -> TensorElement {
        let mut out = Self::zero(self.algebra, self.arity);
        for (t, v) in &self.terms {
            out.add_term_unchecked(t.clone(), &(v * c));
        }
        out
    }

    fn check_compatible(&self, other: &TensorElement) -> Result<(), TensorError> {
        check_same(self.algebra, other.algebra)?;
        if self.arity != other.arity {
            return Err(TensorError::ArityMismatch {
                left: self.arity,
                right: other.arity,
            });
        }
        Ok(())
    }

    /// Moves slot `i` to slot `perm[i]`.
    pub fn permute_slots(&self, perm: &[usize]) -> TensorElement {
        let mut out = Self::zero(self.algebra, self.arity);
        for (t, c) in &self.terms {
            let mut moved = t.clone();
            for (i, m) in t.iter().enumerate() {
                moved[perm[i]] = *m;
            }
            out.add_term_unchecked(moved, c);
        }
        out
    }

    /// Invariance under all slot permutations; adjacent transpositions
    /// generate the symmetric group, so those suffice.
    pub fn is_invariant(&self) -> bool {
        (0..self.arity.saturating_sub(1)).all(|i| {
            let mut perm: Vec<usize> = (0..self.arity).collect();
            perm.swap(i, i + 1);
            self.permute_slots(&perm) == *self
        })
    }
}

impl fmt::Debug for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(t, c)| {
                let slots: Vec<String> = t.iter().map(|m| m.to_string()).collect();
                format!("({c}) [{}]", slots.join(" ⊗ "))
            })
            .collect();
        write!(f, "TensorElement[{}; {}]({})", self.algebra, self.arity, parts.join(" + "))
    }
}

/// Expands `p_1 ⊗ ... ⊗ p_n` scaled by `coeff` into `out`.
pub(crate) fn accumulate_tensor_product(
    out: &mut TensorElement,
    slots: &[NCPolynomial],
    coeff: &PolyQH,
) {
    if slots.iter().any(|p| p.is_zero()) {
        return;
    }
    for combo in slots.iter().map(|p| p.terms()).multi_cartesian_product() {
        let mut c = coeff.clone();
        let mut tuple = Vec::with_capacity(combo.len());
        for (m, v) in combo {
            c = &c * v;
            tuple.push(*m);
        }
        out.add_term_unchecked(tuple, &c);
    }
}

/// Componentwise product in `A^{⊗n}`.
pub fn tensor_multiply(
    rewriter: &Rewriter,
    s: &TensorElement,
    t: &TensorElement,
) -> Result<TensorElement, TensorError> {
    s.check_compatible(t)?;
    check_same(s.algebra, rewriter.algebra())?;
    let mut out = TensorElement::zero(s.algebra, s.arity);
    for (ts, cs) in &s.terms {
        for (tt, ct) in &t.terms {
            let slots: Vec<NCPolynomial> = ts
                .iter()
                .zip(tt)
                .map(|(a, b)| rewriter.multiply_monomials(a, b))
                .collect();
            accumulate_tensor_product(&mut out, &slots, &(cs * ct));
        }
    }
    Ok(out)
}

/// `(1/n!) Σ_σ m_{σ⁻¹(1)} ⊗ ... ⊗ m_{σ⁻¹(n)}`.
pub fn symmetrize(tuple: &[NormalMonomial]) -> Result<TensorElement, TensorError> {
    let first = tuple.first().ok_or(TensorError::TupleLength {
        expected: 1,
        got: 0,
    })?;
    let algebra = first.algebra();
    for m in tuple {
        check_same(algebra, m.algebra())?;
    }
    let n = tuple.len();
    let weight = PolyQH::constant(Rational::new(1.into(), factorial(n as u32)));
    let mut out = TensorElement::zero(algebra, n);
    for perm in (0..n).permutations(n) {
        let permuted = perm.iter().map(|&i| tuple[i]).collect();
        out.add_term_unchecked(permuted, &weight);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::monomial;
    use crate::coeff::ratio;

    const QO: AlgebraId = AlgebraId::QOscillator;

    fn m(e: &[u32]) -> NormalMonomial {
        monomial(QO, e).unwrap()
    }

    #[test]
    fn disjoint_slots() {
        let rw = Rewriter::new(QO);
        let a = TensorElement::basis(vec![m(&[1, 0]), m(&[0, 0])], PolyQH::one()).unwrap();
        let b = TensorElement::basis(vec![m(&[0, 0]), m(&[0, 1])], PolyQH::one()).unwrap();
        let prod = tensor_multiply(&rw, &a, &b).unwrap();
        assert_eq!(prod, TensorElement::basis(vec![m(&[1, 0]), m(&[0, 1])], PolyQH::one()).unwrap());
    }

    #[test]
    fn slot_product_uses_relation() {
        let rw = Rewriter::new(QO);
        let y1 = TensorElement::basis(vec![m(&[0, 1]), m(&[0, 0])], PolyQH::one()).unwrap();
        let x1 = TensorElement::basis(vec![m(&[1, 0]), m(&[0, 0])], PolyQH::one()).unwrap();
        let mut expected = TensorElement::zero(QO, 2);
        expected.add_term(vec![m(&[1, 1]), m(&[0, 0])], &PolyQH::q()).unwrap();
        expected.add_term(vec![m(&[0, 0]), m(&[0, 0])], &PolyQH::h()).unwrap();
        assert_eq!(tensor_multiply(&rw, &y1, &x1).unwrap(), expected);
    }

    #[test]
    fn unit_is_neutral() {
        let rw = Rewriter::new(QO);
        let mut t = TensorElement::zero(QO, 2);
        t.add_term(vec![m(&[2, 1]), m(&[0, 1])], &PolyQH::q()).unwrap();
        t.add_term(vec![m(&[1, 0]), m(&[1, 1])], &PolyQH::h()).unwrap();
        let unit = TensorElement::unit(QO, 2);
        assert_eq!(tensor_multiply(&rw, &unit, &t).unwrap(), t);
        assert_eq!(tensor_multiply(&rw, &t, &unit).unwrap(), t);
    }

    #[test]
    fn mismatches_are_rejected() {
        let rw = Rewriter::new(QO);
        let a = TensorElement::unit(QO, 2);
        let b = TensorElement::unit(QO, 3);
        assert!(matches!(
            tensor_multiply(&rw, &a, &b),
            Err(TensorError::ArityMismatch { left: 2, right: 3 })
        ));
        let c = TensorElement::unit(AlgebraId::Weyl, 2);
        assert!(tensor_multiply(&rw, &a, &c).is_err());
    }

    #[test]
    fn symmetrize_examples() {
        let x = m(&[1, 0]);
        let one = m(&[0, 0]);
        assert_eq!(
            symmetrize(&[x]).unwrap(),
            TensorElement::basis(vec![x], PolyQH::one()).unwrap()
        );
        let half = PolyQH::constant(ratio(1, 2));
        let mut expected = TensorElement::zero(QO, 2);
        expected.add_term(vec![x, one], &half).unwrap();
        expected.add_term(vec![one, x], &half).unwrap();
        let s = symmetrize(&[x, one]).unwrap();
        assert_eq!(s, expected);
        assert!(s.is_invariant());
        assert_eq!(
            symmetrize(&[x, x]).unwrap(),
            TensorElement::basis(vec![x, x], PolyQH::one()).unwrap()
        );
    }

    #[test]
    fn invariance_check() {
        let x = m(&[1, 0]);
        let one = m(&[0, 0]);
        let t = TensorElement::basis(vec![x, one], PolyQH::one()).unwrap();
        assert!(!t.is_invariant());
        assert!(symmetrize(&[x, one, m(&[0, 2])]).unwrap().is_invariant());
    }
}
