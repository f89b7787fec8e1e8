use std::collections::HashMap;
use std::sync::RwLock;

use crate::algebra::{
    check_same, inversions, presentation, AlgebraId, NCPolynomial, NormalMonomial, Presentation,
    Word,
};
use crate::coeff::PolyQH;
use crate::error::AlgebraError;

/// Which out-of-order adjacent pair is rewritten first.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Strategy {
    #[default]
    Leftmost,
    Rightmost,
}

/// Normal ordering by exhaustive rule application.
///
/// Normal forms of intermediate words are memoized per `normal_order`
/// call. Products of pairs of normal monomials are additionally cached for
/// the lifetime of the rewriter; that cache is behind a lock so a single
/// rewriter can be shared across worker threads.
pub struct Rewriter {
    presentation: Presentation,
    strategy: Strategy,
    products: RwLock<HashMap<(NormalMonomial, NormalMonomial), NCPolynomial>>,
}

impl Rewriter {
    pub fn new(algebra: AlgebraId) -> Self {
        Self::with_presentation(presentation(algebra), Strategy::Leftmost)
    }

    pub fn with_strategy(algebra: AlgebraId, strategy: Strategy) -> Self {
        Self::with_presentation(presentation(algebra), strategy)
    }

    pub fn with_presentation(presentation: Presentation, strategy: Strategy) -> Self {
        Self {
            presentation,
            strategy,
            products: RwLock::new(HashMap::new()),
        }
    }

    pub fn algebra(&self) -> AlgebraId {
        self.presentation.algebra()
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn strategy(&self) -> Strategy {
        self.strategy
    }

    /// Position of the pair the strategy rewrites next, if any.
    pub fn redex(&self, letters: &[u8]) -> Option<usize> {
        let mut pairs = letters.windows(2).enumerate().filter(|(_, w)| w[0] > w[1]);
        match self.strategy {
            Strategy::Leftmost => pairs.next().map(|(i, _)| i),
            Strategy::Rightmost => pairs.last().map(|(i, _)| i),
        }
    }

    /// A single rule application: the successor words with coefficients,
    /// or `None` if the word is already normal.
    pub fn rewrite_step(&self, letters: &[u8]) -> Option<Vec<(Vec<u8>, PolyQH)>> {
        let i = self.redex(letters)?;
        let rule = self
            .presentation
            .rule(letters[i], letters[i + 1])
            .expect("presentation covers every out-of-order pair");
        Some(
            rule.rhs()
                .iter()
                .map(|(rep, c)| {
                    let mut next = Vec::with_capacity(letters.len() + rep.len());
                    next.extend_from_slice(&letters[..i]);
                    next.extend_from_slice(rep);
                    next.extend_from_slice(&letters[i + 2..]);
                    (next, c.clone())
                })
                .collect(),
        )
    }

    pub fn normal_order(&self, w: &Word) -> NCPolynomial {
        debug_assert_eq!(w.algebra(), self.algebra());
        let mut memo = HashMap::new();
        self.reduce(w.letters(), &mut memo)
    }

    /// Normal form of a word given as raw letter indices.
    pub fn normal_order_letters(&self, letters: &[u8]) -> NCPolynomial {
        let mut memo = HashMap::new();
        self.reduce(letters, &mut memo)
    }

    fn reduce(&self, letters: &[u8], memo: &mut HashMap<Vec<u8>, NCPolynomial>) -> NCPolynomial {
        if let Some(done) = memo.get(letters) {
            return done.clone();
        }
        let result = match self.rewrite_step(letters) {
            None => NCPolynomial::from_monomial(self.monomial_of_sorted(letters)),
            Some(successors) => {
                let mut acc = NCPolynomial::zero(self.algebra());
                for (next, c) in successors {
                    debug_assert!(
                        next.len() < letters.len()
                            || (next.len() == letters.len()
                                && inversions(&next) < inversions(letters)),
                        "rule application must decrease (length, inversions)"
                    );
                    let sub = self.reduce(&next, memo);
                    acc.add_scaled(&sub, &c);
                }
                acc
            }
        };
        memo.insert(letters.to_vec(), result.clone());
        result
    }

    fn monomial_of_sorted(&self, letters: &[u8]) -> NormalMonomial {
        let alg = self.algebra();
        let mut exps = [0u32; 3];
        for &l in letters {
            exps[l as usize] += 1;
        }
        NormalMonomial::new(alg, &exps[..alg.letter_count()]).expect("arity matches")
    }

    /// Normal form of `a * b` for normal monomials, cached.
    pub fn multiply_monomials(&self, a: &NormalMonomial, b: &NormalMonomial) -> NCPolynomial {
        if a.is_unit() {
            return NCPolynomial::from_monomial(*b);
        }
        if b.is_unit() {
            return NCPolynomial::from_monomial(*a);
        }
        let key = (*a, *b);
        if let Some(hit) = self.products.read().expect("cache lock").get(&key) {
            return hit.clone();
        }
        let word = a.word().concat(&b.word()).expect("same algebra");
        let result = self.normal_order(&word);
        self.products
            .write()
            .expect("cache lock")
            .insert(key, result.clone());
        result
    }

    /// Bilinear product of two normal forms.
    pub fn multiply(&self, p: &NCPolynomial, r: &NCPolynomial) -> Result<NCPolynomial, AlgebraError> {
        check_same(p.algebra(), r.algebra())?;
        check_same(p.algebra(), self.algebra())?;
        let mut out = NCPolynomial::zero(self.algebra());
        for (ma, ca) in p.terms() {
            for (mb, cb) in r.terms() {
                let prod = self.multiply_monomials(ma, mb);
                out.add_scaled(&prod, &(ca * cb));
            }
        }
        Ok(out)
    }
}

/// Normal form of `w` with the default leftmost strategy.
pub fn normal_order(w: &Word) -> NCPolynomial {
    Rewriter::new(w.algebra()).normal_order(w)
}

/// Product of two normal forms.
pub fn multiply(p: &NCPolynomial, r: &NCPolynomial) -> Result<NCPolynomial, AlgebraError> {
    check_same(p.algebra(), r.algebra())?;
    Rewriter::new(p.algebra()).multiply(p, r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::monomial;

    fn word(alg: AlgebraId, s: &str) -> Word {
        Word::from_chars(alg, s).unwrap()
    }

    fn poly(alg: AlgebraId, terms: &[(&[u32], PolyQH)]) -> NCPolynomial {
        NCPolynomial::from_terms(
            alg,
            terms.iter().map(|(e, c)| (monomial(alg, e).unwrap(), c.clone())),
        )
        .unwrap()
    }

    #[test]
    fn q_oscillator_relation() {
        let alg = AlgebraId::QOscillator;
        let got = normal_order(&word(alg, "yx"));
        assert_eq!(got, poly(alg, &[(&[1, 1], PolyQH::q()), (&[0, 0], PolyQH::h())]));
    }

    #[test]
    fn q_weyl_zxx() {
        let alg = AlgebraId::QWeyl;
        let got = normal_order(&word(alg, "zxx"));
        let expected = poly(
            alg,
            &[(&[2, 0, 1], PolyQH::one()), (&[1, 1, 0], PolyQH::one() + PolyQH::q())],
        );
        assert_eq!(got, expected);
    }

    #[test]
    fn h_weyl_relation() {
        let alg = AlgebraId::HWeyl;
        let got = normal_order(&word(alg, "yx"));
        assert_eq!(got, poly(alg, &[(&[1, 1, 0], PolyQH::one()), (&[0, 0, 1], PolyQH::one())]));
    }

    #[test]
    fn normal_words_are_fixed() {
        for alg in AlgebraId::ALL {
            let m = if alg.letter_count() == 2 {
                monomial(alg, &[2, 3]).unwrap()
            } else {
                monomial(alg, &[2, 1, 3]).unwrap()
            };
            assert_eq!(normal_order(&m.word()), NCPolynomial::from_monomial(m));
        }
    }

    #[test]
    fn multiply_examples() {
        let alg = AlgebraId::QOscillator;
        let x = NCPolynomial::from_monomial(monomial(alg, &[1, 0]).unwrap());
        let y = NCPolynomial::from_monomial(monomial(alg, &[0, 1]).unwrap());
        let one = NCPolynomial::one(alg);
        assert_eq!(multiply(&one, &x).unwrap(), x);
        assert_eq!(
            multiply(&y, &x).unwrap(),
            poly(alg, &[(&[1, 1], PolyQH::q()), (&[0, 0], PolyQH::h())])
        );

        let alg = AlgebraId::Sl2;
        let y = NCPolynomial::from_monomial(monomial(alg, &[0, 1, 0]).unwrap());
        let z = NCPolynomial::from_monomial(monomial(alg, &[0, 0, 1]).unwrap());
        assert_eq!(
            multiply(&z, &y).unwrap(),
            poly(alg, &[(&[0, 1, 1], PolyQH::one()), (&[0, 0, 1], PolyQH::from_int(-2))])
        );
        let other = NCPolynomial::one(AlgebraId::Weyl);
        assert!(multiply(&z, &other).is_err());
    }

    #[test]
    fn strategies_pick_different_redexes() {
        let left = Rewriter::with_strategy(AlgebraId::QWeyl, Strategy::Leftmost);
        let right = Rewriter::with_strategy(AlgebraId::QWeyl, Strategy::Rightmost);
        let w = [2u8, 0, 2, 1];
        assert_eq!(left.redex(&w), Some(0));
        assert_eq!(right.redex(&w), Some(2));
        assert_eq!(left.normal_order_letters(&w), right.normal_order_letters(&w));
    }
}
