use proptest::prelude::*;
use qweyl_core::coeff::ratio;
use qweyl_core::sym_power::{SlotEngine, SymMultiplier};
use qweyl_core::{
    AlgebraId, NCPolynomial, NormalMonomial, PolyQH, Rewriter, Strategy as RewriteStrategy,
    SymElement, Word,
};

fn algebra() -> impl Strategy<Value = AlgebraId> {
    prop::sample::select(AlgebraId::ALL.to_vec())
}

fn word_for(alg: AlgebraId, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(0..alg.letter_count() as u8, 0..=max_len)
        .prop_map(move |letters| Word::new(alg, letters).unwrap())
}

fn any_word(max_len: usize) -> impl Strategy<Value = Word> {
    algebra().prop_flat_map(move |a| word_for(a, max_len))
}

fn poly_qh() -> impl Strategy<Value = PolyQH> {
    prop::collection::vec((0u32..4, 0u32..4, -5i64..=5, 1i64..=3), 0..5).prop_map(|terms| {
        let mut p = PolyQH::zero();
        for (dq, dh, n, d) in terms {
            p.add_term(dq, dh, &ratio(n, d));
        }
        p
    })
}

fn monomial_for(alg: AlgebraId, max_exp: u32) -> impl Strategy<Value = NormalMonomial> {
    prop::collection::vec(0..=max_exp, alg.letter_count())
        .prop_map(move |e| NormalMonomial::new(alg, &e).unwrap())
}

fn nc_poly_for(alg: AlgebraId) -> impl Strategy<Value = NCPolynomial> {
    prop::collection::vec((monomial_for(alg, 2), poly_qh()), 0..3)
        .prop_map(move |terms| NCPolynomial::from_terms(alg, terms).unwrap())
}

/// Letter weights preserved by every relation, with the weight of `h`.
fn weights(alg: AlgebraId) -> (Vec<i64>, i64) {
    match alg {
        AlgebraId::Weyl | AlgebraId::QOscillator => (vec![1, -1], 0),
        AlgebraId::QWeyl | AlgebraId::Sl2 => (vec![1, 0, -1], 0),
        AlgebraId::HWeyl => (vec![1, -1, 0], 1),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn confluence(w in any_word(9)) {
        let left = Rewriter::with_strategy(w.algebra(), RewriteStrategy::Leftmost);
        let right = Rewriter::with_strategy(w.algebra(), RewriteStrategy::Rightmost);
        prop_assert_eq!(left.normal_order(&w), right.normal_order(&w));
    }

    #[test]
    fn weight_is_conserved(w in any_word(9)) {
        let alg = w.algebra();
        let (lw, hw) = weights(alg);
        let target: i64 = w.letters().iter().map(|&l| lw[l as usize]).sum();
        for (m, c) in Rewriter::new(alg).normal_order(&w).terms() {
            let mono: i64 = m.exps().iter().zip(&lw).map(|(&e, &x)| e as i64 * x).sum();
            for ((_, dh), _) in c.terms() {
                prop_assert_eq!(mono + hw * dh as i64, target);
            }
        }
    }

    #[test]
    fn normal_words_are_fixed(w in any_word(8)) {
        let mut letters = w.letters().to_vec();
        letters.sort();
        let sorted = Word::new(w.algebra(), letters).unwrap();
        let nf = Rewriter::new(w.algebra()).normal_order(&sorted);
        prop_assert_eq!(nf.len(), 1);
        let (_, c) = nf.terms().next().unwrap();
        prop_assert!(c.is_one());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn poly_ring_axioms(a in poly_qh(), b in poly_qh(), c in poly_qh()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &PolyQH::one(), a.clone());
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a + &PolyQH::zero(), a.clone());
    }

    #[test]
    fn algebra_associativity(
        (alg, p, r, s) in algebra().prop_flat_map(|a| (Just(a), nc_poly_for(a), nc_poly_for(a), nc_poly_for(a)))
    ) {
        let rw = Rewriter::new(alg);
        let left = rw.multiply(&rw.multiply(&p, &r).unwrap(), &s).unwrap();
        let right = rw.multiply(&p, &rw.multiply(&r, &s).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        let one = NCPolynomial::one(alg);
        prop_assert_eq!(rw.multiply(&one, &p).unwrap(), p.clone());
        prop_assert_eq!(rw.multiply(&p, &one).unwrap(), p);
    }

    #[test]
    fn word_product_is_concatenation((alg, u, v) in algebra().prop_flat_map(|a| (Just(a), word_for(a, 5), word_for(a, 5)))) {
        let rw = Rewriter::new(alg);
        let joined = rw.normal_order(&u.concat(&v).unwrap());
        let product = rw.multiply(&rw.normal_order(&u), &rw.normal_order(&v)).unwrap();
        prop_assert_eq!(joined, product);
    }
}

fn sym_class(alg: AlgebraId, arity: usize) -> impl Strategy<Value = SymElement> {
    prop::collection::vec(monomial_for(alg, 1), arity)
        .prop_map(|ms| SymElement::class(ms, PolyQH::one()).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn sym_associativity_and_unit(
        (alg, n, e, f, g) in (algebra(), 1usize..=2).prop_flat_map(|(a, n)| {
            (Just(a), Just(n), sym_class(a, n), sym_class(a, n), sym_class(a, n))
        })
    ) {
        let mult = SymMultiplier::new(alg);
        let all = mult.product(n, &[e.clone(), f.clone(), g.clone()]).unwrap();
        let ef = mult.product(n, &[e.clone(), f.clone()]).unwrap();
        prop_assert_eq!(&all, &mult.product(n, &[ef, g.clone()]).unwrap());
        let fg = mult.product(n, &[f, g]).unwrap();
        prop_assert_eq!(&all, &mult.product(n, &[e.clone(), fg]).unwrap());
        let unit = SymElement::unit(alg, n).unwrap();
        prop_assert_eq!(&mult.product(n, &[unit, e.clone()]).unwrap(), &e);
    }

    #[test]
    fn sym_engines_agree(
        (alg, e, f) in algebra().prop_flat_map(|a| (Just(a), sym_class(a, 3), sym_class(a, 3)))
    ) {
        let closed = SymMultiplier::new(alg).with_engine(SlotEngine::ClosedForm);
        let oracle = SymMultiplier::new(alg).with_engine(SlotEngine::Oracle);
        prop_assert_eq!(
            closed.product(3, &[e.clone(), f.clone()]).unwrap(),
            oracle.product(3, &[e, f]).unwrap()
        );
    }
}
