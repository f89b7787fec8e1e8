use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};

use super::{h_power, join_u32, mono, ExponentSeq, NormalCoordinates};
use crate::algebra::{AlgebraId, NCPolynomial};
use crate::coeff::{binomial, multinomial, PolyQH, Rational};
use crate::error::ClosedFormError;

/// Index `(p, q)` of an h-Weyl normal coordinate. `p[j]` has one entry per
/// `y` still alive before factor `j + 2` is absorbed.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HIndex {
    pub p: Vec<Vec<u32>>,
    pub q: Vec<u32>,
}

impl HIndex {
    /// `s(p)`: total number of nonzero components.
    pub fn support(&self) -> u32 {
        self.p.iter().map(|pj| support(pj)).sum()
    }

    pub fn p_total(&self) -> u32 {
        self.p.iter().flatten().sum()
    }

    pub fn q_total(&self) -> u32 {
        self.q.iter().sum()
    }

    /// Exponent of `h` attached to this coordinate: `|q| + |p| - s(p)`.
    pub fn h_exponent(&self) -> u32 {
        self.q_total() + self.p_total() - self.support()
    }

    pub fn key(&self) -> String {
        let p: Vec<String> = self.p.iter().map(|pj| join_u32(pj)).collect();
        format!("p={};q={}", p.join("|"), join_u32(&self.q))
    }
}

fn support(v: &[u32]) -> u32 {
    v.iter().filter(|&&x| x != 0).count() as u32
}

/// `(p, q) ↦ N_h(A, p, q)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HCoords {
    totals: [u32; 3],
    map: BTreeMap<HIndex, Rational>,
}

impl HCoords {
    pub fn entries(&self) -> &BTreeMap<HIndex, Rational> {
        &self.map
    }
}

impl NormalCoordinates for HCoords {
    fn algebra(&self) -> AlgebraId {
        AlgebraId::HWeyl
    }

    fn reconstruct(&self) -> NCPolynomial {
        let [a, b, c] = self.totals;
        let mut out = NCPolynomial::zero(AlgebraId::HWeyl);
        for (idx, n) in &self.map {
            let s = idx.support();
            let r = [a - idx.p_total() - idx.q_total(), b - s, c + s];
            let coeff = &PolyQH::constant(n.clone()) * &h_power(idx.h_exponent());
            out.add_term(mono(AlgebraId::HWeyl, &r), &coeff);
        }
        out
    }

    fn entries_text(&self) -> Vec<(String, String)> {
        self.map
            .iter()
            .map(|(k, v)| (k.key(), PolyQH::constant(v.clone()).to_string()))
            .collect()
    }
}

/// Every vector of `len` naturals with sum at most `bound`.
pub(crate) fn bounded_vectors(len: usize, bound: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(len);
    fn rec(len: usize, bound: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for v in 0..=bound {
            cur.push(v);
            rec(len, bound - v, cur, out);
            cur.pop();
        }
    }
    rec(len, bound, &mut cur, &mut out);
    out
}

/// `N_h(A, p, q) = Π C(a_{i+1}, q_i) C(a_{i+1} - q_i; p_i) (|c_{≤i}| + s(p_{<i}))^{q_i}`.
///
/// Components of `p_j` are only enumerated while their sum stays within
/// `a_{j+1} - q_j`; larger ones make the multinomial vanish.
pub fn h_normal_coords(seq: &ExponentSeq) -> Result<HCoords, ClosedFormError> {
    if seq.algebra() != AlgebraId::HWeyl {
        return Err(ClosedFormError::Unsupported {
            algebra: seq.algebra(),
            left: 'y',
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

    fn rec(
        ctx: &Ctx,
        i: usize,
        support_lt: u32,
        coeff: BigInt,
        idx: &mut HIndex,
        map: &mut BTreeMap<HIndex, Rational>,
    ) {
        if i + 1 == ctx.a.len() {
            if !coeff.is_zero() {
                map.insert(idx.clone(), Rational::from_integer(coeff));
            }
            return;
        }
        let next_a = ctx.a[i + 1];
        let alive_y = ctx.b[..=i].iter().sum::<u32>() - support_lt;
        let zs = ctx.c[..=i].iter().sum::<u32>() + support_lt;
        for qi in 0..=next_a {
            let q_factor = binomial(next_a as u64, qi as u64) * BigInt::from(zs).pow(qi);
            for pi in bounded_vectors(alive_y as usize, next_a - qi) {
                let factor = &q_factor * multinomial(next_a - qi, &pi);
                if factor.is_zero() {
                    continue;
                }
                let s = support(&pi);
                idx.q.push(qi);
                idx.p.push(pi);
                rec(ctx, i + 1, support_lt + s, &coeff * &factor, idx, map);
                idx.p.pop();
                idx.q.pop();
            }
        }
    }

    let mut idx = HIndex {
        p: Vec::new(),
        q: Vec::new(),
    };
    rec(
        &Ctx {
            a: &a,
            b: &b,
            c: &c,
        },
        0,
        0,
        BigInt::one(),
        &mut idx,
        &mut map,
    );
    Ok(HCoords {
        totals: [t[0], t[1], t[2]],
        map,
    })
}
