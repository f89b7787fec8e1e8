//! q-oscillator normal coordinates: `N_qo(A, k) = Σ_{p ∈ P_k(U,V)} q^{c(p)}`.
//!
//! Each `x` of the word is an element of `U`, each `y` an element of `V`,
//! both ordered by position in the word (`∞` after everything). A map
//! `p ∈ P_k(U,V)` sends `k` of the `y`'s injectively to `x`'s in strictly
//! later blocks and the rest to `∞`. The crossing number `c(p)` counts the
//! pairs `(s, t) ∈ V × U` with `s < t < p(s)` where `t` is not hit by `p`
//! from any `y` to the right of `s`.
//!
//! The number of maps grows factorially with the exponents; enumeration
//! is meant for desk-scale inputs.

use std::collections::BTreeMap;

use super::{h_power, mono, ExponentSeq, NormalCoordinates};
use crate::algebra::{AlgebraId, NCPolynomial};
use crate::coeff::{q_integer, PolyQH};
use crate::error::ClosedFormError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Element {
    pos: usize,
    block: usize,
}

/// `U` and `V` laid out in word order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroundSet {
    u: Vec<Element>,
    v: Vec<Element>,
}

impl GroundSet {
    pub fn new(seq: &ExponentSeq) -> Result<Self, ClosedFormError> {
        check_qo(seq)?;
        let mut u = Vec::new();
        let mut v = Vec::new();
        let mut pos = 0;
        for (block, f) in seq.factors().iter().enumerate() {
            for _ in 0..f[0] {
                u.push(Element { pos, block });
                pos += 1;
            }
            for _ in 0..f[1] {
                v.push(Element { pos, block });
                pos += 1;
            }
        }
        Ok(Self { u, v })
    }

    pub fn u_len(&self) -> usize {
        self.u.len()
    }

    pub fn v_len(&self) -> usize {
        self.v.len()
    }

    /// `u` may be the image of `v`: it lies in a strictly later block.
    fn admissible(&self, v: usize, u: usize) -> bool {
        self.v[v].block < self.u[u].block
    }

    fn target_pos(&self, image: Option<usize>) -> usize {
        image.map_or(usize::MAX, |u| self.u[u].pos)
    }
}

fn check_qo(seq: &ExponentSeq) -> Result<(), ClosedFormError> {
    if seq.algebra() != AlgebraId::QOscillator {
        return Err(ClosedFormError::Unsupported {
            algebra: seq.algebra(),
            left: 'y',
            right: 'x',
        });
    }
    Ok(())
}

/// A map `p: V → U ∪ {∞}`; `images[i]` is the image of the `i`-th `y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossingMap {
    ground: GroundSet,
    images: Vec<Option<usize>>,
}

impl CrossingMap {
    /// Checks injectivity on the finite part and the block condition.
    pub fn new(ground: GroundSet, images: Vec<Option<usize>>) -> Option<Self> {
        if images.len() != ground.v_len() {
            return None;
        }
        let mut hit = vec![false; ground.u_len()];
        for (v, img) in images.iter().enumerate() {
            if let Some(u) = *img {
                if u >= ground.u_len() || hit[u] || !ground.admissible(v, u) {
                    return None;
                }
                hit[u] = true;
            }
        }
        Some(Self { ground, images })
    }

    pub fn images(&self) -> &[Option<usize>] {
        &self.images
    }

    /// `#p⁻¹(U)`.
    pub fn k(&self) -> usize {
        self.images.iter().filter(|i| i.is_some()).count()
    }

    /// `c(p)` straight from the definition.
    pub fn crossing_number(&self) -> u32 {
        let g = &self.ground;
        let mut count = 0;
        for (si, s) in g.v.iter().enumerate() {
            let target = g.target_pos(self.images[si]);
            let later_images: Vec<usize> = g
                .v
                .iter()
                .enumerate()
                .filter(|(_, other)| other.pos > s.pos)
                .filter_map(|(oi, _)| self.images[oi])
                .collect();
            for (ti, t) in g.u.iter().enumerate() {
                if s.pos < t.pos && t.pos < target && !later_images.contains(&ti) {
                    count += 1;
                }
            }
        }
        count
    }
}

/// All of `P_k(U, V)` for the exponent sequence.
pub fn crossing_maps(seq: &ExponentSeq, k: usize) -> Result<Vec<CrossingMap>, ClosedFormError> {
    let ground = GroundSet::new(seq)?;
    let mut out = Vec::new();
    let mut images = vec![None; ground.v_len()];
    let mut used = vec![false; ground.u_len()];
    fn rec(
        g: &GroundSet,
        v: usize,
        remaining: usize,
        images: &mut Vec<Option<usize>>,
        used: &mut Vec<bool>,
        out: &mut Vec<CrossingMap>,
    ) {
        if remaining > g.v_len() - v {
            return;
        }
        if v == g.v_len() {
            out.push(CrossingMap {
                ground: g.clone(),
                images: images.clone(),
            });
            return;
        }
        images[v] = None;
        rec(g, v + 1, remaining, images, used, out);
        if remaining == 0 {
            return;
        }
        for u in 0..g.u_len() {
            if !used[u] && g.admissible(v, u) {
                used[u] = true;
                images[v] = Some(u);
                rec(g, v + 1, remaining - 1, images, used, out);
                used[u] = false;
            }
        }
        images[v] = None;
    }
    rec(&ground, 0, k, &mut images, &mut used, &mut out);
    Ok(out)
}

/// `k ↦ N_qo(A, k)`, zero entries dropped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QoCoords {
    totals: (u32, u32),
    map: BTreeMap<u32, PolyQH>,
}

impl QoCoords {
    pub fn get(&self, k: u32) -> PolyQH {
        self.map.get(&k).cloned().unwrap_or_default()
    }

    pub fn entries(&self) -> &BTreeMap<u32, PolyQH> {
        &self.map
    }

    /// `(|a|, |b|)`.
    pub fn totals(&self) -> (u32, u32) {
        self.totals
    }
}

impl NormalCoordinates for QoCoords {
    fn algebra(&self) -> AlgebraId {
        AlgebraId::QOscillator
    }

    fn reconstruct(&self) -> NCPolynomial {
        let (a, b) = self.totals;
        let mut out = NCPolynomial::zero(AlgebraId::QOscillator);
        for (&k, n) in &self.map {
            let m = mono(AlgebraId::QOscillator, &[a - k, b - k]);
            out.add_term(m, &(n * &h_power(k)));
        }
        out
    }

    fn entries_text(&self) -> Vec<(String, String)> {
        self.map.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect()
    }
}

/// `N_qo(A, ·)` by enumerating `P_k(U, V)` for every `k`.
///
/// The `y`'s are visited right to left, so the images already chosen are
/// exactly `p(V_{>s})` and `c(p)` accumulates one `y` at a time.
pub fn qo_normal_coords(seq: &ExponentSeq) -> Result<QoCoords, ClosedFormError> {
    let g = GroundSet::new(seq)?;
    let totals = (g.u_len() as u32, g.v_len() as u32);
    // counts[k][c] = number of maps with k matches and crossing number c
    let mut counts: BTreeMap<u32, BTreeMap<u32, u64>> = BTreeMap::new();
    let mut used = vec![false; g.u_len()];

    fn between_free(g: &GroundSet, used: &[bool], from: usize, to: usize) -> u32 {
        g.u
            .iter()
            .enumerate()
            .filter(|(i, t)| from < t.pos && t.pos < to && !used[*i])
            .count() as u32
    }

    fn rec(
        g: &GroundSet,
        v_rev: usize,
        k: u32,
        c: u32,
        used: &mut Vec<bool>,
        counts: &mut BTreeMap<u32, BTreeMap<u32, u64>>,
    ) {
        if v_rev == g.v_len() {
            *counts.entry(k).or_default().entry(c).or_default() += 1;
            return;
        }
        let si = g.v_len() - 1 - v_rev;
        let s = g.v[si];
        let stay = between_free(g, used, s.pos, usize::MAX);
        rec(g, v_rev + 1, k, c + stay, used, counts);
        for ui in 0..g.u_len() {
            if !used[ui] && g.admissible(si, ui) {
                let cross = between_free(g, used, s.pos, g.u[ui].pos);
                used[ui] = true;
                rec(g, v_rev + 1, k + 1, c + cross, used, counts);
                used[ui] = false;
            }
        }
    }

    rec(&g, 0, 0, 0, &mut used, &mut counts);
    let map = counts
        .into_iter()
        .map(|(k, by_c)| {
            let mut p = PolyQH::zero();
            for (c, n) in by_c {
                p.add_term(c, 0, &crate::coeff::rat(n as i64));
            }
            (k, p)
        })
        .filter(|(_, p)| !p.is_zero())
        .collect();
    Ok(QoCoords { totals, map })
}

/// `N_qo(A, ·)` from the two prepend recursions
/// `N((1,0)A, k) = N(A, k)` and
/// `N((0,1)A, k) = q^{|a|-k} N(A, k) + [|a|-k+1] N(A, k-1)`,
/// starting from the empty product.
pub fn qo_recursion_coords(seq: &ExponentSeq) -> Result<QoCoords, ClosedFormError> {
    check_qo(seq)?;
    let mut map: BTreeMap<u32, PolyQH> = BTreeMap::from([(0, PolyQH::one())]);
    let mut xs = 0u32;
    let mut ys = 0u32;
    for f in seq.factors().iter().rev() {
        for _ in 0..f[1] {
            let mut next = BTreeMap::new();
            for k in 0..=xs.min(ys + 1) {
                let mut v = PolyQH::zero();
                if let Some(n) = map.get(&k) {
                    v += &n.shift(xs - k, 0);
                }
                if k >= 1 {
                    if let Some(n) = map.get(&(k - 1)) {
                        v += &(&q_integer(xs - k + 1) * n);
                    }
                }
                if !v.is_zero() {
                    next.insert(k, v);
                }
            }
            map = next;
            ys += 1;
        }
        xs += f[0];
    }
    Ok(QoCoords {
        totals: (xs, ys),
        map,
    })
}

/// `N_qo(A, k)` computed by the recursions.
pub fn qo_recursion_step(seq: &ExponentSeq, k: u32) -> Result<PolyQH, ClosedFormError> {
    Ok(qo_recursion_coords(seq)?.get(k))
}
