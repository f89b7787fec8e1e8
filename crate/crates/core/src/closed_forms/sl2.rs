use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Zero};

use super::{join_u32, mono, ExponentSeq, NormalCoordinates};
use crate::algebra::{AlgebraId, NCPolynomial};
use crate::coeff::{binomial, elem_sym, factorial, falling, PolyQH};
use crate::error::ClosedFormError;

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Sl2Index {
    pub k: Vec<u32>,
    pub s: Vec<u32>,
    pub p: Vec<u32>,
    pub q: Vec<u32>,
}

impl Sl2Index {
    pub fn key(&self) -> String {
        format!(
            "k={};s={};p={};q={}",
            join_u32(&self.k),
            join_u32(&self.s),
            join_u32(&self.p),
            join_u32(&self.q)
        )
    }

    fn push(&mut self, k: u32, s: u32, p: u32, q: u32) {
        self.k.push(k);
        self.s.push(s);
        self.p.push(p);
        self.q.push(q);
    }

    fn pop(&mut self) {
        self.k.pop();
        self.s.pop();
        self.p.pop();
        self.q.pop();
    }
}

/// `(k, s, p, q) ↦ N_{sl2}(A, k, s, p, q)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sl2Coords {
    totals: [u32; 3],
    map: BTreeMap<Sl2Index, BigInt>,
}

impl Sl2Coords {
    pub fn entries(&self) -> &BTreeMap<Sl2Index, BigInt> {
        &self.map
    }
}

impl NormalCoordinates for Sl2Coords {
    fn algebra(&self) -> AlgebraId {
        AlgebraId::Sl2
    }

    fn reconstruct(&self) -> NCPolynomial {
        let [a, b, c] = self.totals;
        let mut out = NCPolynomial::zero(AlgebraId::Sl2);
        for (idx, n) in &self.map {
            let sum = |v: &[u32]| v.iter().sum::<u32>();
            let k = sum(&idx.k);
            let r = [a - k, b + sum(&idx.s) - sum(&idx.p) - sum(&idx.q), c - k];
            out.add_term(mono(AlgebraId::Sl2, &r), &PolyQH::from_bigint(n.clone()));
        }
        out
    }

    fn entries_text(&self) -> Vec<(String, String)> {
        self.map
            .iter()
            .map(|(k, v)| (k.key(), v.to_string()))
            .collect()
    }
}

/// Per-step factor `(-2)^{p+q} α β γ C(b', p) (|c_{≤i}| - |k_{≤i}|)^p (a' - k)^q`.
///
/// `z_avail = |c_{≤i}| - |k_{<i}|` is the number of `z`'s facing the next
/// block of `x`'s, `y_avail` the number of `y`'s in front of it.
#[allow(clippy::too_many_arguments)]
fn step_factor(
    z_avail: u32,
    next_a: u32,
    next_b: u32,
    y_avail: u32,
    k: u32,
    s: u32,
    p: u32,
    q: u32,
) -> BigInt {
    let (alpha, rem) =
        (falling(z_avail as i64, k) * falling(next_a as i64, k)).div_rem(&factorial(k));
    debug_assert!(rem.is_zero());
    let e_arg = -(next_a as i64) - z_avail as i64 + 2 * k as i64;
    let beta = elem_sym(k - s, k, e_arg).expect("k - s <= k");
    let gamma = binomial(y_avail as u64, q as u64);
    let sign = BigInt::from(-2).pow(p + q);
    sign * alpha
        * beta
        * gamma
        * binomial(next_b as u64, p as u64)
        * BigInt::from(z_avail - k).pow(p)
        * BigInt::from(next_a - k).pow(q)
}

pub fn sl2_normal_coords(seq: &ExponentSeq) -> Result<Sl2Coords, ClosedFormError> {
    if seq.algebra() != AlgebraId::Sl2 {
        return Err(ClosedFormError::Unsupported {
            algebra: seq.algebra(),
            left: 'z',
            right: 'x',
        });
    }
    let a = seq.column(0);
    let b = seq.column(1);
    let c = seq.column(2);
    let t = seq.totals();
    let mut map = BTreeMap::new();

    struct Ctx<'a> {
        a: &'a [u32],
        b: &'a [u32],
        c: &'a [u32],
    }

    // y_avail = |b_{≤i}| + |s_{<i}| - |p_{<i}| - |q_{<i}|, k_lt = |k_{<i}|
    fn rec(
        ctx: &Ctx,
        i: usize,
        k_lt: u32,
        y_avail: u32,
        coeff: BigInt,
        idx: &mut Sl2Index,
        map: &mut BTreeMap<Sl2Index, BigInt>,
    ) {
        if i + 1 == ctx.a.len() {
            if !coeff.is_zero() {
                map.insert(idx.clone(), coeff);
            }
            return;
        }
        let z_avail = ctx.c[..=i].iter().sum::<u32>() - k_lt;
        let next_a = ctx.a[i + 1];
        let next_b = ctx.b[i + 1];
        for k in 0..=z_avail.min(next_a) {
            for s in 0..=k {
                for p in 0..=next_b {
                    for q in 0..=y_avail {
                        let f = step_factor(z_avail, next_a, next_b, y_avail, k, s, p, q);
                        if f.is_zero() {
                            continue;
                        }
                        idx.push(k, s, p, q);
                        let next_y = y_avail + s + next_b - p - q;
                        rec(ctx, i + 1, k_lt + k, next_y, &coeff * &f, idx, map);
                        idx.pop();
                    }
                }
            }
        }
    }

    let mut idx = Sl2Index::default();
    rec(
        &Ctx {
            a: &a,
            b: &b,
            c: &c,
        },
        0,
        0,
        b[0],
        BigInt::one(),
        &mut idx,
        &mut map,
    );
    Ok(Sl2Coords {
        totals: [t[0], t[1], t[2]],
        map,
    })
}
