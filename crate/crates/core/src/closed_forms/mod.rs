//! Closed-form normal coordinates.
//!
//! For a product `X^{A_1} ... X^{A_n}` of normal monomials each algebra
//! with a closed form has an explicit coordinate map whose reconstruction
//! is the normal form of the product. Everything here is computed by
//! direct enumeration over the index sets; the rewrite engine is only
//! used by tests as the reference.

mod base;
mod crossing;
mod hweyl;
mod qweyl;
mod sl2;

pub use base::base_expand;
pub use crossing::{
    crossing_maps, qo_normal_coords, qo_recursion_coords, qo_recursion_step, CrossingMap,
    GroundSet, QoCoords,
};
pub use hweyl::{h_normal_coords, HCoords, HIndex};
pub use qweyl::{chi_k, crossing_number_of_subset, q_normal_coords, QCoords};
pub use sl2::{sl2_normal_coords, Sl2Coords, Sl2Index};

use crate::algebra::{AlgebraId, NCPolynomial, NormalMonomial, Word};
use crate::coeff::PolyQH;
use crate::error::ClosedFormError;

/// The exponent data `A = (A_1, ..., A_n)` of a product of normal
/// monomials: pairs `(a_i, b_i)` for the two-letter algebras, triples
/// `(a_i, b_i, c_i)` otherwise.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExponentSeq {
    algebra: AlgebraId,
    factors: Vec<Vec<u32>>,
}

impl ExponentSeq {
    pub fn new(algebra: AlgebraId, factors: Vec<Vec<u32>>) -> Result<Self, ClosedFormError> {
        if factors.is_empty() {
            return Err(ClosedFormError::Empty);
        }
        let expected = algebra.letter_count();
        if let Some(bad) = factors.iter().find(|f| f.len() != expected) {
            return Err(ClosedFormError::Shape {
                algebra,
                expected,
                got: bad.len(),
            });
        }
        Ok(Self { algebra, factors })
    }

    pub fn from_monomials(monomials: &[NormalMonomial]) -> Result<Self, ClosedFormError> {
        let first = monomials.first().ok_or(ClosedFormError::Empty)?;
        Self::new(
            first.algebra(),
            monomials.iter().map(|m| m.exps().to_vec()).collect(),
        )
    }

    pub fn algebra(&self) -> AlgebraId {
        self.algebra
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn factors(&self) -> &[Vec<u32>] {
        &self.factors
    }

    /// Component `letter` of every factor (`0` = a, `1` = b, `2` = c).
    pub fn column(&self, letter: usize) -> Vec<u32> {
        self.factors.iter().map(|f| f[letter]).collect()
    }

    /// `|A|`.
    pub fn totals(&self) -> Vec<u32> {
        (0..self.algebra.letter_count())
            .map(|l| self.factors.iter().map(|f| f[l]).sum())
            .collect()
    }

    pub fn monomials(&self) -> Vec<NormalMonomial> {
        self.factors
            .iter()
            .map(|f| NormalMonomial::new(self.algebra, f).expect("validated shape"))
            .collect()
    }

    /// The word `X^{A_1} ... X^{A_n}`.
    pub fn word(&self) -> Word {
        let letters = self
            .monomials()
            .iter()
            .flat_map(|m| m.word().letters().to_vec())
            .collect();
        Word::new(self.algebra, letters).expect("letters in range")
    }

    /// Exponent sequence with `factor` prepended.
    pub fn prepend(&self, factor: Vec<u32>) -> Result<Self, ClosedFormError> {
        let mut factors = vec![factor];
        factors.extend(self.factors.iter().cloned());
        Self::new(self.algebra, factors)
    }
}

/// Common surface of the four coordinate maps.
pub trait NormalCoordinates {
    fn algebra(&self) -> AlgebraId;

    /// Σ N · X^{r} · h^{e} over all stored coordinates.
    fn reconstruct(&self) -> NCPolynomial;

    /// `(key, value)` pairs in canonical text form, in key order.
    fn entries_text(&self) -> Vec<(String, String)>;
}

pub(crate) fn join_u32(v: &[u32]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

pub(crate) fn mono(algebra: AlgebraId, exps: &[u32]) -> NormalMonomial {
    NormalMonomial::new(algebra, exps).expect("closed-form exponent shape")
}

/// Coordinates of `A` for whichever algebra it belongs to.
pub fn normal_coords(seq: &ExponentSeq) -> Result<Box<dyn NormalCoordinates>, ClosedFormError> {
    Ok(match seq.algebra() {
        AlgebraId::QOscillator => Box::new(qo_normal_coords(seq)?),
        AlgebraId::QWeyl => Box::new(q_normal_coords(seq)?),
        AlgebraId::HWeyl => Box::new(h_normal_coords(seq)?),
        AlgebraId::Sl2 => Box::new(sl2_normal_coords(seq)?),
        AlgebraId::Weyl => {
            return Err(ClosedFormError::Unsupported {
                algebra: AlgebraId::Weyl,
                left: 'y',
                right: 'x',
            })
        }
    })
}

/// Normal form of `X^{A_1} ... X^{A_n}` through the closed form.
pub fn closed_form_normal_order(seq: &ExponentSeq) -> Result<NCPolynomial, ClosedFormError> {
    Ok(normal_coords(seq)?.reconstruct())
}

/// Normal form of a product of normal monomials through the closed form.
pub fn closed_form_product(monomials: &[NormalMonomial]) -> Result<NCPolynomial, ClosedFormError> {
    closed_form_normal_order(&ExponentSeq::from_monomials(monomials)?)
}

pub(crate) fn h_power(exp: u32) -> PolyQH {
    PolyQH::h_pow(exp)
}
