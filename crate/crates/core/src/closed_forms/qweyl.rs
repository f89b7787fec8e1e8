use std::collections::BTreeMap;

use itertools::Itertools;

use super::{join_u32, mono, ExponentSeq, NormalCoordinates};
use crate::algebra::{AlgebraId, NCPolynomial};
use crate::coeff::{q_falling, PolyQH};
use crate::error::ClosedFormError;

/// `χ(I) = #{(i, j) : i > j, i ∈ I, j ∉ I}` for `I ⊆ [[1, a]]`.
pub fn crossing_number_of_subset(a: u32, subset: &[u32]) -> u32 {
    let mut count = 0;
    for &i in subset {
        count += (1..i).filter(|j| !subset.contains(j)).count() as u32;
    }
    debug_assert!(subset.iter().all(|&i| (1..=a).contains(&i)));
    count
}

/// `χ_k(a) = Σ_{I ⊆ [[1,a]], #I = k} q^{χ(I)}`.
pub fn chi_k(a: u32, k: u32) -> PolyQH {
    if k > a {
        return PolyQH::zero();
    }
    (1..=a)
        .combinations(k as usize)
        .map(|subset| PolyQH::q_pow(crossing_number_of_subset(a, &subset)))
        .sum()
}

/// `k ↦ N_q(A, k)` over admissible `k ∈ ℕ^{n-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QCoords {
    totals: [u32; 3],
    map: BTreeMap<Vec<u32>, PolyQH>,
}

impl QCoords {
    pub fn entries(&self) -> &BTreeMap<Vec<u32>, PolyQH> {
        &self.map
    }

    pub fn get(&self, k: &[u32]) -> PolyQH {
        self.map.get(k).cloned().unwrap_or_default()
    }
}

impl NormalCoordinates for QCoords {
    fn algebra(&self) -> AlgebraId {
        AlgebraId::QWeyl
    }

    fn reconstruct(&self) -> NCPolynomial {
        let [a, b, c] = self.totals;
        let mut out = NCPolynomial::zero(AlgebraId::QWeyl);
        for (k, n) in &self.map {
            let s: u32 = k.iter().sum();
            out.add_term(mono(AlgebraId::QWeyl, &[a - s, b + s, c - s]), n);
        }
        out
    }

    fn entries_text(&self) -> Vec<(String, String)> {
        self.map
            .iter()
            .map(|(k, v)| (join_u32(k), v.to_string()))
            .collect()
    }
}

/// `N_q(A, k) = q^{Σ λ(i)} Π χ_{k_j}(|c_{≤j}| - |k_{<j}|) [a_{j+1}]_{k_j}` with
/// `λ(i) = b_{i+1}(|c_{≤i}| - |k_{≤i}|) + (a_{i+1} - k_i)(|b_{≤i}| + |k_{<i}|)`.
pub fn q_normal_coords(seq: &ExponentSeq) -> Result<QCoords, ClosedFormError> {
    if seq.algebra() != AlgebraId::QWeyl {
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
    let mut ks = Vec::with_capacity(a.len());

    struct Ctx<'a> {
        a: &'a [u32],
        b: &'a [u32],
        c: &'a [u32],
    }

    fn rec(
        ctx: &Ctx,
        i: usize,
        lambda: u32,
        coeff: PolyQH,
        ks: &mut Vec<u32>,
        map: &mut BTreeMap<Vec<u32>, PolyQH>,
    ) {
        let n = ctx.a.len();
        if i + 1 == n {
            let value = coeff.shift(lambda, 0);
            if !value.is_zero() {
                map.insert(ks.clone(), value);
            }
            return;
        }
        let c_le: u32 = ctx.c[..=i].iter().sum();
        let b_le: u32 = ctx.b[..=i].iter().sum();
        let k_lt: u32 = ks.iter().sum();
        let next_a = ctx.a[i + 1];
        let avail = c_le - k_lt;
        for k in 0..=avail.min(next_a) {
            let factor = &chi_k(avail, k) * &q_falling(next_a, k);
            let lam = ctx.b[i + 1] * (c_le - k_lt - k) + (next_a - k) * (b_le + k_lt);
            ks.push(k);
            rec(ctx, i + 1, lambda + lam, &coeff * &factor, ks, map);
            ks.pop();
        }
    }

    rec(
        &Ctx {
            a: &a,
            b: &b,
            c: &c,
        },
        0,
        0,
        PolyQH::one(),
        &mut ks,
        &mut map,
    );
    Ok(QCoords {
        totals: [t[0], t[1], t[2]],
        map,
    })
}
