use itertools::Itertools;
use qweyl_core::closed_forms::{
    closed_form_normal_order, qo_normal_coords, qo_recursion_coords, ExponentSeq,
};
use qweyl_core::{AlgebraId, Rewriter};

fn grid(alg: AlgebraId, n: usize, max: u32) -> impl Iterator<Item = ExponentSeq> {
    let width = alg.letter_count();
    let factor: Vec<Vec<u32>> = (0..width)
        .map(|_| 0..=max)
        .multi_cartesian_product()
        .collect();
    (0..n)
        .map(move |_| factor.clone())
        .multi_cartesian_product()
        .map(move |fs| ExponentSeq::new(alg, fs).unwrap())
}

fn check_grid(alg: AlgebraId) {
    let rw = Rewriter::new(alg);
    let mut count = 0;
    for n in 1..=3 {
        for seq in grid(alg, n, 2) {
            let closed = closed_form_normal_order(&seq).unwrap();
            let oracle = rw.normal_order(&seq.word());
            assert_eq!(closed, oracle, "{alg} {:?}", seq.factors());
            count += 1;
        }
    }
    let per = 3usize.pow(alg.letter_count() as u32);
    assert_eq!(count, per + per * per + per * per * per);
}

#[test]
fn q_oscillator_grid() {
    check_grid(AlgebraId::QOscillator);
}

#[test]
fn q_weyl_grid() {
    check_grid(AlgebraId::QWeyl);
}

#[test]
fn h_weyl_grid() {
    check_grid(AlgebraId::HWeyl);
}

#[test]
fn sl2_grid() {
    check_grid(AlgebraId::Sl2);
}

#[test]
fn qo_recursion_agrees() {
    for n in 1..=3 {
        for seq in grid(AlgebraId::QOscillator, n, 2) {
            assert_eq!(
                qo_recursion_coords(&seq).unwrap(),
                qo_normal_coords(&seq).unwrap(),
                "{:?}",
                seq.factors()
            );
        }
    }
}
