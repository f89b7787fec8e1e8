//! The symmetric powers `Symⁿ(A)` on the orbit basis.
//!
//! An element is a combination of classes `[m_1, ..., m_n]`, each a
//! multiset of normal monomials stored sorted. The product of `m` classes
//! sums the slotwise products over `{id} × S_n^{m-1}` and divides by
//! `(n!)^{m-1}`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::RwLock;

use itertools::Itertools;
use num_bigint::BigInt;

use crate::algebra::{check_same, AlgebraId, NCPolynomial, NormalMonomial};
use crate::closed_forms::closed_form_product;
use crate::coeff::{factorial, PolyQH, Rational};
use crate::error::SymError;
use crate::exec::{map_reduce, Exec};
use crate::rewrite::{accumulate_tensor_product, symmetrize, Rewriter, TensorElement};

/// Default cap on `(n!)^{m-1}`.
pub const DEFAULT_MAX_WORK: u128 = 1_000_000;

/// Environment variable overriding [`DEFAULT_MAX_WORK`].
pub const MAX_WORK_ENV: &str = "QWEYL_MAX_WORK";

/// Work cap from `QWEYL_MAX_WORK`, or the default when unset.
pub fn max_work_from_env() -> Result<u128, SymError> {
    match std::env::var(MAX_WORK_ENV) {
        Err(_) => Ok(DEFAULT_MAX_WORK),
        Ok(v) => match v.trim().parse::<u128>() {
            Ok(n) if n > 0 => Ok(n),
            _ => Err(SymError::InvalidCap { value: v }),
        },
    }
}

/// Element of `Symⁿ(A)`.
#[derive(Clone, PartialEq, Eq)]
pub struct SymElement {
    algebra: AlgebraId,
    arity: usize,
    terms: BTreeMap<Vec<NormalMonomial>, PolyQH>,
}

impl SymElement {
    pub fn zero(algebra: AlgebraId, arity: usize) -> Result<Self, SymError> {
        if arity == 0 {
            return Err(SymError::ZeroArity);
        }
        Ok(Self {
            algebra,
            arity,
            terms: BTreeMap::new(),
        })
    }

    /// The class of `n` unit monomials.
    pub fn unit(algebra: AlgebraId, arity: usize) -> Result<Self, SymError> {
        let mut e = Self::zero(algebra, arity)?;
        e.add_term(vec![NormalMonomial::unit(algebra); arity], &PolyQH::one())?;
        Ok(e)
    }

    /// `coeff * [m_1, ..., m_n]`.
    pub fn class(monomials: Vec<NormalMonomial>, coeff: PolyQH) -> Result<Self, SymError> {
        let first = monomials.first().ok_or(SymError::ZeroArity)?;
        let mut e = Self::zero(first.algebra(), monomials.len())?;
        e.add_term(monomials, &coeff)?;
        Ok(e)
    }

    pub fn algebra(&self) -> AlgebraId {
        self.algebra
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms keyed by sorted multisets.
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<NormalMonomial>, &PolyQH)> + '_ {
        self.terms.iter()
    }

    pub fn coeff(&self, class: &[NormalMonomial]) -> PolyQH {
        let mut key = class.to_vec();
        key.sort();
        self.terms.get(&key).cloned().unwrap_or_default()
    }

    /// Adds `c` to the class of `monomials` (in any order).
    pub fn add_term(&mut self, monomials: Vec<NormalMonomial>, c: &PolyQH) -> Result<(), SymError> {
        if monomials.len() != self.arity {
            return Err(SymError::ArityMismatch {
                left: self.arity,
                right: monomials.len(),
            });
        }
        for m in &monomials {
            check_same(self.algebra, m.algebra())?;
        }
        self.add_sorted(sorted(monomials), c);
        Ok(())
    }

    fn add_sorted(&mut self, key: Vec<NormalMonomial>, c: &PolyQH) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(key) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(c.clone());
            }
        }
    }

    pub fn add(&self, other: &SymElement) -> Result<SymElement, SymError> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_sorted(k.clone(), c);
        }
        Ok(out)
    }

    pub fn scale(&self, c: &PolyQH) -> SymElement {
        let mut out = SymElement {
            algebra: self.algebra,
            arity: self.arity,
            terms: BTreeMap::new(),
        };
        for (k, v) in &self.terms {
            out.add_sorted(k.clone(), &(v * c));
        }
        out
    }

    fn check_compatible(&self, other: &SymElement) -> Result<(), SymError> {
        check_same(self.algebra, other.algebra)?;
        if self.arity != other.arity {
            return Err(SymError::ArityMismatch {
                left: self.arity,
                right: other.arity,
            });
        }
        Ok(())
    }
}

fn sorted(mut v: Vec<NormalMonomial>) -> Vec<NormalMonomial> {
    v.sort();
    v
}

impl fmt::Debug for SymElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymElement[{}; {}](", self.algebra, self.arity)?;
        for (i, (k, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c}) [{}]", k.iter().join(", "))?;
        }
        write!(f, ")")
    }
}

/// How slot products are normal-ordered.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum SlotEngine {
    /// Closed-form coordinates where the algebra has them, rewriting
    /// otherwise.
    #[default]
    ClosedForm,
    /// Always the rewrite engine.
    Oracle,
}

/// Product machinery for one algebra: slot engine, execution mode, work
/// cap and a cache of slot products.
pub struct SymMultiplier {
    rewriter: Rewriter,
    engine: SlotEngine,
    exec: Exec,
    max_work: u128,
    slots: RwLock<HashMap<Vec<NormalMonomial>, NCPolynomial>>,
}

impl SymMultiplier {
    pub fn new(algebra: AlgebraId) -> Self {
        Self {
            rewriter: Rewriter::new(algebra),
            engine: SlotEngine::default(),
            exec: Exec::default(),
            max_work: DEFAULT_MAX_WORK,
            slots: RwLock::new(HashMap::new()),
        }
    }

    pub fn with_engine(mut self, engine: SlotEngine) -> Self {
        self.engine = engine;
        self
    }

    pub fn with_exec(mut self, exec: Exec) -> Self {
        self.exec = exec;
        self
    }

    pub fn with_max_work(mut self, cap: u128) -> Self {
        self.max_work = cap;
        self
    }

    pub fn algebra(&self) -> AlgebraId {
        self.rewriter.algebra()
    }

    pub fn rewriter(&self) -> &Rewriter {
        &self.rewriter
    }

    /// Normal form of `m_1 ... m_k`.
    pub fn slot_product(&self, monomials: &[NormalMonomial]) -> NCPolynomial {
        let key: Vec<NormalMonomial> = monomials.iter().copied().filter(|m| !m.is_unit()).collect();
        match key.len() {
            0 => return NCPolynomial::one(self.algebra()),
            1 => return NCPolynomial::from_monomial(key[0]),
            _ => {}
        }
        if let Some(hit) = self.slots.read().expect("cache lock").get(&key) {
            return hit.clone();
        }
        let result = match self.engine {
            SlotEngine::ClosedForm if self.algebra().has_closed_form() => {
                closed_form_product(&key).expect("shape checked by construction")
            }
            _ => {
                let letters: Vec<u8> = key
                    .iter()
                    .flat_map(|m| m.word().letters().to_vec())
                    .collect();
                self.rewriter.normal_order_letters(&letters)
            }
        };
        self.slots
            .write()
            .expect("cache lock")
            .insert(key, result.clone());
        result
    }

    /// `e_1 · ... · e_m`; the empty product is the unit of `Symⁿ(A)`.
    pub fn product(&self, arity: usize, factors: &[SymElement]) -> Result<SymElement, SymError> {
        let algebra = self.algebra();
        if factors.is_empty() {
            return SymElement::unit(algebra, arity);
        }
        for f in factors {
            check_same(algebra, f.algebra)?;
            if f.arity != arity {
                return Err(SymError::ArityMismatch {
                    left: arity,
                    right: f.arity,
                });
            }
        }
        let m = factors.len();
        let required = permutation_work(arity, m);
        if required > self.max_work {
            return Err(SymError::TooMuchWork {
                required,
                cap: self.max_work,
            });
        }
        let mut out = SymElement::zero(algebra, arity)?;
        if factors.iter().any(|f| f.is_zero()) {
            return Ok(out);
        }
        let perms: Vec<Vec<usize>> = (0..arity).permutations(arity).collect();
        // Every choice of arrangements for factors 2..m.
        let arrangements: Vec<Vec<&Vec<usize>>> = (1..m)
            .map(|_| perms.iter())
            .multi_cartesian_product()
            .collect();
        let arrangements = if arrangements.is_empty() {
            vec![Vec::new()]
        } else {
            arrangements
        };
        let weight = Rational::new(BigInt::from(1), factorial(arity as u32).pow(m as u32 - 1));

        for combo in factors.iter().map(|f| f.terms.iter()).multi_cartesian_product() {
            let coeff = combo
                .iter()
                .fold(PolyQH::constant(weight.clone()), |acc, (_, c)| &acc * *c);
            let classes: Vec<&Vec<NormalMonomial>> = combo.iter().map(|(k, _)| *k).collect();
            let tensor = map_reduce(
                self.exec,
                &arrangements,
                || TensorElement::zero(algebra, arity),
                |arr| {
                    let slots: Vec<NCPolynomial> = (0..arity)
                        .map(|j| {
                            let mut word = Vec::with_capacity(m);
                            word.push(classes[0][j]);
                            for (i, perm) in arr.iter().enumerate() {
                                word.push(classes[i + 1][perm[j]]);
                            }
                            self.slot_product(&word)
                        })
                        .collect();
                    let mut t = TensorElement::zero(algebra, arity);
                    accumulate_tensor_product(&mut t, &slots, &coeff);
                    t
                },
                |a, b| a.add(&b).expect("same shape"),
            );
            for (tuple, c) in tensor.terms() {
                out.add_sorted(sorted(tuple.clone()), c);
            }
        }
        Ok(out)
    }
}

/// `(n!)^{m-1}`, saturating.
pub fn permutation_work(arity: usize, factors: usize) -> u128 {
    let mut fact: u128 = 1;
    for i in 2..=arity as u128 {
        fact = fact.saturating_mul(i);
    }
    let mut w: u128 = 1;
    for _ in 1..factors {
        w = w.saturating_mul(fact);
    }
    w
}

/// Product of `factors` with closed-form slot products and the cap from
/// the environment.
pub fn sym_product(factors: &[SymElement]) -> Result<SymElement, SymError> {
    let first = factors.first().ok_or(SymError::NoFactors)?;
    SymMultiplier::new(first.algebra)
        .with_max_work(max_work_from_env()?)
        .product(first.arity, factors)
}

/// The symmetrization map into the invariant tensors.
pub fn to_invariants(e: &SymElement) -> TensorElement {
    let mut out = TensorElement::zero(e.algebra, e.arity);
    for (k, c) in &e.terms {
        let s = symmetrize(k).expect("arity is positive");
        for (tuple, w) in s.terms() {
            out.add_term_unchecked(tuple.clone(), &(w * c));
        }
    }
    out
}

/// Inverse of [`to_invariants`] on invariant tensors.
pub fn from_invariants(t: &TensorElement) -> Result<SymElement, SymError> {
    if !t.is_invariant() {
        return Err(SymError::NotInvariant);
    }
    let mut out = SymElement::zero(t.algebra(), t.arity())?;
    let n = t.arity() as u32;
    for (tuple, c) in t.terms() {
        if tuple.windows(2).any(|w| w[0] > w[1]) {
            continue;
        }
        // Number of distinct arrangements of the multiset.
        let mut arrangements = factorial(n);
        for (_, group) in &tuple.iter().chunk_by(|m| **m) {
            arrangements /= factorial(group.count() as u32);
        }
        out.add_sorted(
            tuple.clone(),
            &c.scale(&Rational::from_integer(arrangements)),
        );
    }
    Ok(out)
}
