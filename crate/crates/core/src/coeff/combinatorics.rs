//! Scalar combinatorial quantities used by the closed-form normal
//! coordinates: q-integers, q-falling products, classical falling
//! factorials, multinomials and elementary symmetric values.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::PolyQH;
use crate::error::CoeffError;

/// `[n] = 1 + q + ... + q^(n-1)`.
pub fn q_integer(n: u32) -> PolyQH {
    (0..n).map(PolyQH::q_pow).sum()
}

/// `[n]_k = [n][n-1]...[n-k+1]`; zero as soon as a factor `[0]` appears.
pub fn q_falling(n: u32, k: u32) -> PolyQH {
    if k > n {
        return PolyQH::zero();
    }
    (0..k).map(|i| q_integer(n - i)).product()
}

/// `q_falling` for a possibly negative top argument. Returns `None` when a
/// factor `[m]` with `m < 0` would be required (not a polynomial); a
/// product that already contains `[0]` is zero regardless.
pub fn q_falling_signed(n: i64, k: u32) -> Option<PolyQH> {
    if k == 0 {
        return Some(PolyQH::one());
    }
    if n < 0 {
        return None;
    }
    Some(q_falling(n as u32, k))
}

/// Classical falling factorial `(a)_n = a(a-1)...(a-n+1)`.
pub fn falling(a: i64, n: u32) -> BigInt {
    (0..n as i64).map(|i| BigInt::from(a - i)).product()
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n as u64).map(BigInt::from).product()
}

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `b! / (prod k_i! * (b - |k|)!)`, zero when `|k| > b`.
pub fn multinomial(b: u32, k: &[u32]) -> BigInt {
    let total: u64 = k.iter().map(|&x| x as u64).sum();
    if total > b as u64 {
        return BigInt::zero();
    }
    // Product of binomials avoids large intermediate factorials.
    let mut remaining = b as u64;
    let mut acc = BigInt::one();
    for &ki in k {
        acc *= binomial(remaining, ki as u64);
        remaining -= ki as u64;
    }
    acc
}

/// `e_s^n(b) = e_s(b, b-1, ..., b-n+1)`.
pub fn elem_sym(s: u32, n: u32, b: i64) -> Result<BigInt, CoeffError> {
    if s > n {
        return Err(CoeffError::ElemSymDegree { s, n });
    }
    // Running table e_0..e_s over the values seen so far.
    let mut e = vec![BigInt::zero(); s as usize + 1];
    e[0] = BigInt::one();
    for i in 0..n as i64 {
        let v = BigInt::from(b - i);
        for j in (1..=s as usize).rev() {
            let add = &e[j - 1] * &v;
            e[j] += add;
        }
    }
    Ok(e.swap_remove(s as usize))
}

/// Gaussian binomial `[a choose k]_q` by the Pascal-type recursion
/// `[a, k] = [a-1, k-1] + q^k [a-1, k]`.
pub fn gauss_binomial(a: u32, k: u32) -> PolyQH {
    if k > a {
        return PolyQH::zero();
    }
    // row[j] holds [i choose j]_q for the current i.
    let mut row = vec![PolyQH::one()];
    for i in 1..=a {
        let mut next = vec![PolyQH::zero(); (i as usize + 1).min(k as usize + 1)];
        for (j, slot) in next.iter_mut().enumerate() {
            let mut v = PolyQH::zero();
            if j >= 1 {
                if let Some(prev) = row.get(j - 1) {
                    v += prev;
                }
            }
            if let Some(prev) = row.get(j) {
                v += &prev.shift(j as u32, 0);
            }
            *slot = v;
        }
        row = next;
    }
    row.swap_remove(k as usize)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn int(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn q_integer_examples() {
        assert!(q_integer(0).is_zero());
        assert!(q_integer(1).is_one());
        assert_eq!(q_integer(3).to_string(), "1 + q + q^2");
        assert_eq!(q_integer(5).degree_q(), Some(4));
    }

    #[test]
    fn q_falling_examples() {
        assert!(q_falling(5, 0).is_one());
        assert_eq!(q_falling(2, 1), q_integer(2));
        assert!(q_falling(2, 3).is_zero());
        assert_eq!(q_falling_signed(-1, 0), Some(PolyQH::one()));
        assert_eq!(q_falling_signed(-1, 2), None);
    }

    #[test]
    fn falling_examples() {
        assert_eq!(falling(4, 0), int(1));
        assert_eq!(falling(4, 2), int(12));
        assert_eq!(falling(2, 3), int(0));
        assert_eq!(falling(-1, 2), int(2));
    }

    #[test]
    fn multinomial_examples() {
        assert_eq!(multinomial(3, &[]), int(1));
        assert_eq!(multinomial(2, &[1, 1]), int(2));
        assert_eq!(multinomial(1, &[2]), int(0));
        assert_eq!(multinomial(4, &[2, 1]), int(12));
    }

    #[test]
    fn elem_sym_examples() {
        assert_eq!(elem_sym(0, 3, 7).unwrap(), int(1));
        assert_eq!(elem_sym(1, 2, 3).unwrap(), int(5));
        assert_eq!(elem_sym(1, 1, 0).unwrap(), int(0));
        assert!(elem_sym(3, 2, 1).is_err());
    }

    #[test]
    fn gauss_binomial_examples() {
        assert!(gauss_binomial(4, 0).is_one());
        assert_eq!(gauss_binomial(2, 1).to_string(), "1 + q");
        assert!(gauss_binomial(1, 2).is_zero());
        assert_eq!(gauss_binomial(4, 2).to_string(), "1 + q + 2*q^2 + q^3 + q^4");
    }

    #[test]
    fn q_falling_at_one_is_falling() {
        let one = BigRational::one();
        for n in 0..=12 {
            for k in 0..=n {
                let v = q_falling(n, k).eval_q(&one);
                assert_eq!(v, PolyQH::from_bigint(falling(n as i64, k)), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn single_component_multinomial_is_binomial() {
        for b in 0..=12u32 {
            for k in 0..=12u32 {
                assert_eq!(multinomial(b, &[k]), binomial(b as u64, k as u64));
            }
        }
    }

    #[test]
    fn elem_sym_newton_recursion() {
        // Brute-force values from the explicit subset sum.
        fn brute(s: usize, vals: &[i64]) -> BigInt {
            use itertools::Itertools;
            vals.iter()
                .combinations(s)
                .map(|c| c.into_iter().map(|&v| BigInt::from(v)).product::<BigInt>())
                .sum()
        }
        for n in 0..=8u32 {
            for s in 0..=n {
                for b in -8..=8i64 {
                    let vals: Vec<i64> = (0..n as i64).map(|i| b - i).collect();
                    let got = elem_sym(s, n, b).unwrap();
                    assert_eq!(got, brute(s as usize, &vals));
                    if n >= 1 && s >= 1 && s < n {
                        let last = BigInt::from(b - (n as i64 - 1));
                        let rec = elem_sym(s, n - 1, b).unwrap() + last * elem_sym(s - 1, n - 1, b).unwrap();
                        assert_eq!(got, rec);
                    }
                }
            }
        }
    }
}
