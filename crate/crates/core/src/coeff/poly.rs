use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational number used for every scalar in the crate.
pub type Rational = BigRational;

/// Sparse polynomial in the central parameters `q` and `h` with exact
/// rational coefficients.
///
/// Terms are keyed by `(deg_q, deg_h)`. No stored coefficient is zero, so
/// the zero polynomial is the empty map and structural equality is
/// mathematical equality.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct PolyQH {
    terms: BTreeMap<(u32, u32), Rational>,
}

impl PolyQH {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(Rational::from_integer(BigInt::from(n)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Self::constant(Rational::from_integer(n))
    }

    /// `c * q^dq * h^dh`.
    pub fn monomial(c: Rational, dq: u32, dh: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((dq, dh), c);
        }
        Self { terms }
    }

    pub fn q() -> Self {
        Self::q_pow(1)
    }

    pub fn h() -> Self {
        Self::h_pow(1)
    }

    pub fn q_pow(n: u32) -> Self {
        Self::monomial(Rational::one(), n, 0)
    }

    pub fn h_pow(n: u32) -> Self {
        Self::monomial(Rational::one(), 0, n)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)).is_some_and(|c| c.is_one())
    }

    /// The constant term if the polynomial has no `q` or `h` dependence.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&(0, 0)).cloned(),
            _ => None,
        }
    }

    pub fn coeff(&self, dq: u32, dh: u32) -> Rational {
        self.terms.get(&(dq, dh)).cloned().unwrap_or_else(Rational::zero)
    }

    /// Terms in ascending `(deg_q, deg_h)` order.
    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), &Rational)> + '_ {
        self.terms.iter().map(|(k, v)| (*k, v))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree_q(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.0).max()
    }

    pub fn degree_h(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.1).max()
    }

    /// Lowest power of `h` carried by any term; `None` for zero.
    pub fn min_degree_h(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.1).min()
    }

    pub fn add_term(&mut self, dq: u32, dh: u32, c: &Rational) {
        if c.is_zero() {
            return;
        }
        let key = (dq, dh);
        let remove = match self.terms.get_mut(&key) {
            Some(existing) => {
                *existing += c;
                existing.is_zero()
            }
            None => {
                self.terms.insert(key, c.clone());
                false
            }
        };
        if remove {
            self.terms.remove(&key);
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    /// Multiplies by `q^dq * h^dh`.
    pub fn shift(&self, dq: u32, dh: u32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), v)| ((a + dq, b + dh), v.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Substitutes a rational value for `q`.
    pub fn eval_q(&self, value: &Rational) -> Self {
        let mut out = Self::zero();
        for (&(dq, dh), c) in &self.terms {
            out.add_term(0, dh, &(c * rational_pow(value, dq)));
        }
        out
    }

    /// Substitutes a rational value for `h`.
    pub fn eval_h(&self, value: &Rational) -> Self {
        let mut out = Self::zero();
        for (&(dq, dh), c) in &self.terms {
            out.add_term(dq, 0, &(c * rational_pow(value, dh)));
        }
        out
    }

    /// Exact quotient by `q - 1`, or `None` if `q - 1` does not divide.
    pub fn div_q_minus_one(&self) -> Option<Self> {
        let mut out = Self::zero();
        let mut by_h: BTreeMap<u32, BTreeMap<u32, Rational>> = BTreeMap::new();
        for (&(dq, dh), c) in &self.terms {
            by_h.entry(dh).or_default().insert(dq, c.clone());
        }
        for (dh, column) in by_h {
            // Synthetic division from the top degree down; the running value
            // is the next quotient coefficient.
            let top = *column.keys().next_back().expect("non-empty column");
            let mut carry = Rational::zero();
            for dq in (0..=top).rev() {
                let c = column.get(&dq).cloned().unwrap_or_else(Rational::zero);
                carry += c;
                if dq == 0 {
                    if !carry.is_zero() {
                        return None;
                    }
                } else {
                    out.add_term(dq - 1, dh, &carry);
                }
            }
        }
        Some(out)
    }

    /// Exact quotient by `h`, or `None` if a term is free of `h`.
    pub fn div_h(&self) -> Option<Self> {
        if self.terms.keys().any(|k| k.1 == 0) {
            return None;
        }
        Some(Self {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), v)| ((a, b - 1), v.clone()))
                .collect(),
        })
    }

    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// True when every coefficient is a nonnegative integer.
    pub fn is_nonneg_integral(&self) -> bool {
        self.terms
            .values()
            .all(|c| c.is_integer() && !c.is_negative())
    }
}

fn rational_pow(value: &Rational, e: u32) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..e {
        acc *= value;
    }
    acc
}

fn fmt_rational(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Canonical text: terms ascending by `(deg_q, deg_h)`, each rendered as
/// `c*q^a*h^b` with unit factors elided, joined by ` + `.
impl fmt::Display for PolyQH {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (&(dq, dh), c) in &self.terms {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let mut factors: Vec<String> = Vec::new();
            match (dq, dh) {
                (0, 0) => {}
                _ if c.is_one() => {}
                _ if c == &-Rational::one() => factors.push("-".into()),
                _ => factors.push(fmt_rational(c)),
            }
            if dq == 1 {
                factors.push("q".into());
            } else if dq > 1 {
                factors.push(format!("q^{dq}"));
            }
            if dh == 1 {
                factors.push("h".into());
            } else if dh > 1 {
                factors.push(format!("h^{dh}"));
            }
            if (dq, dh) == (0, 0) {
                f.write_str(&fmt_rational(c))?;
            } else if factors.first().is_some_and(|s| s == "-") {
                write!(f, "-{}", factors[1..].join("*"))?;
            } else {
                f.write_str(&factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for PolyQH {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyQH({self})")
    }
}

impl From<i64> for PolyQH {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<BigInt> for PolyQH {
    fn from(n: BigInt) -> Self {
        Self::from_bigint(n)
    }
}

impl From<Rational> for PolyQH {
    fn from(c: Rational) -> Self {
        Self::constant(c)
    }
}

impl AddAssign<&PolyQH> for PolyQH {
    fn add_assign(&mut self, rhs: &PolyQH) {
        for (&(dq, dh), c) in &rhs.terms {
            self.add_term(dq, dh, c);
        }
    }
}

impl SubAssign<&PolyQH> for PolyQH {
    fn sub_assign(&mut self, rhs: &PolyQH) {
        for (&(dq, dh), c) in &rhs.terms {
            self.add_term(dq, dh, &-c);
        }
    }
}

impl Add<&PolyQH> for &PolyQH {
    type Output = PolyQH;
    fn add(self, rhs: &PolyQH) -> PolyQH {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for PolyQH {
    type Output = PolyQH;
    fn add(mut self, rhs: PolyQH) -> PolyQH {
        self += &rhs;
        self
    }
}

impl Sub<&PolyQH> for &PolyQH {
    type Output = PolyQH;
    fn sub(self, rhs: &PolyQH) -> PolyQH {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for PolyQH {
    type Output = PolyQH;
    fn sub(mut self, rhs: PolyQH) -> PolyQH {
        self -= &rhs;
        self
    }
}

impl Mul<&PolyQH> for &PolyQH {
    type Output = PolyQH;
    fn mul(self, rhs: &PolyQH) -> PolyQH {
        let mut out = PolyQH::zero();
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &rhs.terms {
                out.add_term(a1 + a2, b1 + b2, &(c1 * c2));
            }
        }
        out
    }
}

impl Mul for PolyQH {
    type Output = PolyQH;
    fn mul(self, rhs: PolyQH) -> PolyQH {
        &self * &rhs
    }
}

impl Neg for PolyQH {
    type Output = PolyQH;
    fn neg(self) -> PolyQH {
        Self {
            terms: self.terms.into_iter().map(|(k, v)| (k, -v)).collect(),
        }
    }
}

impl Neg for &PolyQH {
    type Output = PolyQH;
    fn neg(self) -> PolyQH {
        -self.clone()
    }
}

impl std::iter::Sum for PolyQH {
    fn sum<I: Iterator<Item = PolyQH>>(iter: I) -> Self {
        iter.fold(PolyQH::zero(), |acc, p| acc + p)
    }
}

impl std::iter::Product for PolyQH {
    fn product<I: Iterator<Item = PolyQH>>(iter: I) -> Self {
        iter.fold(PolyQH::one(), |acc, p| acc * p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn canonical_text() {
        let p = PolyQH::one() + PolyQH::q() + PolyQH::q_pow(2);
        assert_eq!(p.to_string(), "1 + q + q^2");
        assert_eq!(PolyQH::zero().to_string(), "0");
        let mixed = PolyQH::monomial(r(-2, 1), 1, 0) + PolyQH::monomial(r(1, 2), 0, 2);
        assert_eq!(mixed.to_string(), "1/2*h^2 + -2*q");
        assert_eq!(PolyQH::monomial(r(-1, 1), 2, 1).to_string(), "-q^2*h");
        assert_eq!(PolyQH::from_int(-3).to_string(), "-3");
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let p = PolyQH::q() - PolyQH::q();
        assert!(p.is_zero());
        assert_eq!(p, PolyQH::zero());
    }

    #[test]
    fn division_by_q_minus_one() {
        // q^3 - 1 = (q - 1)(1 + q + q^2)
        let p = PolyQH::q_pow(3) - PolyQH::one();
        let quot = p.div_q_minus_one().unwrap();
        assert_eq!(quot.to_string(), "1 + q + q^2");
        assert!(PolyQH::q().div_q_minus_one().is_none());
        assert_eq!(PolyQH::zero().div_q_minus_one(), Some(PolyQH::zero()));
    }

    #[test]
    fn division_by_h() {
        let p = PolyQH::h_pow(2) + PolyQH::q().shift(0, 1);
        assert_eq!(p.div_h().unwrap(), PolyQH::h() + PolyQH::q());
        assert!(PolyQH::one().div_h().is_none());
    }

    #[test]
    fn evaluation() {
        let p = PolyQH::q_pow(2).shift(0, 1) + PolyQH::from_int(3);
        assert_eq!(p.eval_q(&r(1, 1)), PolyQH::h() + PolyQH::from_int(3));
        assert_eq!(p.eval_h(&r(0, 1)), PolyQH::from_int(3));
    }

    #[test]
    fn pow_matches_repeated_multiplication() {
        let p = PolyQH::q() + PolyQH::h();
        assert_eq!(p.pow(3), &(&p * &p) * &p);
        assert!(p.pow(0).is_one());
    }
}
