use num_bigint::BigInt;
use num_traits::{Pow, Zero};

use super::hweyl::bounded_vectors;
use super::mono;
use super::qweyl::chi_k;
use crate::algebra::{AlgebraId, NCPolynomial};
use crate::coeff::{binomial, elem_sym, factorial, falling, multinomial, q_falling, PolyQH};
use crate::error::ClosedFormError;

/// Normal form of `left^a right^b` for an out-of-order pair of letters.
pub fn base_expand(
    algebra: AlgebraId,
    left: char,
    a: u32,
    right: char,
    b: u32,
) -> Result<NCPolynomial, ClosedFormError> {
    let unsupported = ClosedFormError::Unsupported {
        algebra,
        left,
        right,
    };
    if !matches!(
        algebra,
        AlgebraId::QWeyl | AlgebraId::HWeyl | AlgebraId::Sl2
    ) {
        return Err(unsupported);
    }
    let (Some(l), Some(r)) = (algebra.letter_index(left), algebra.letter_index(right)) else {
        return Err(unsupported);
    };
    if l <= r {
        return Err(ClosedFormError::InOrderPair {
            algebra,
            left,
            right,
        });
    }
    let mut out = NCPolynomial::zero(algebra);
    let mut add = |exps: [u32; 3], c: PolyQH| out.add_term(mono(algebra, &exps), &c);
    let int = |n: BigInt| PolyQH::from_bigint(n);

    match (algebra, l, r) {
        (AlgebraId::QWeyl, 2, 0) => {
            for k in 0..=a.min(b) {
                add([b - k, k, a - k], &chi_k(a, k) * &q_falling(b, k));
            }
        }
        (AlgebraId::QWeyl, 2, 1) => add([0, b, a], PolyQH::q_pow(a * b)),
        (AlgebraId::QWeyl, 1, 0) => add([b, a, 0], PolyQH::q_pow(a * b)),

        (AlgebraId::HWeyl, 2, 0) => {
            for k in 0..=b {
                let c = binomial(b as u64, k as u64) * BigInt::from(a).pow(k);
                add([b - k, 0, a], int(c).shift(0, k));
            }
        }
        (AlgebraId::HWeyl, 2, 1) => add([0, b, a], PolyQH::one()),
        (AlgebraId::HWeyl, 1, 0) => {
            for k in bounded_vectors(a as usize, b) {
                let total: u32 = k.iter().sum();
                let support = k.iter().filter(|&&x| x != 0).count() as u32;
                add(
                    [b - total, a - support, support],
                    int(multinomial(b, &k)).shift(0, total - support),
                );
            }
        }

        (AlgebraId::Sl2, 2, 0) => {
            for k in 0..=a.min(b) {
                let lead = falling(a as i64, k) * falling(b as i64, k) / factorial(k);
                for s in 0..=k {
                    let e = elem_sym(k - s, k, -(a as i64) - b as i64 + 2 * k as i64)
                        .expect("k - s <= k");
                    let c = &lead * e;
                    if !c.is_zero() {
                        add([b - k, s, a - k], int(c));
                    }
                }
            }
        }
        (AlgebraId::Sl2, 2, 1) => {
            for k in 0..=b {
                let c = binomial(b as u64, k as u64) * BigInt::from(-2 * a as i64).pow(k);
                add([0, b - k, a], int(c));
            }
        }
        (AlgebraId::Sl2, 1, 0) => {
            for k in 0..=a {
                let c = binomial(a as u64, k as u64) * BigInt::from(-2 * b as i64).pow(k);
                add([b, a - k, 0], int(c));
            }
        }
        _ => unreachable!("letters validated above"),
    }
    Ok(out)
}
