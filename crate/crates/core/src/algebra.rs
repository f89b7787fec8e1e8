//! Finitely presented algebras: alphabets, letter order, oriented rewrite
//! rules, normal monomials and linear combinations over `PolyQH`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::coeff::{PolyQH, Rational};
use crate::error::AlgebraError;

/// The five built-in presentations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AlgebraId {
    /// `yx = xy + h`
    Weyl,
    /// `yx = qxy + h`
    QOscillator,
    /// `zx = xz + y`, `yx = qxy`, `zy = qyz`
    QWeyl,
    /// `yx = xy + z`, `zx = xz + zh`, `yz = zy`
    HWeyl,
    /// `zx = xz + y`, `yx = xy - 2x`, `zy = yz - 2z`
    Sl2,
}

impl AlgebraId {
    pub const ALL: [AlgebraId; 5] = [
        AlgebraId::Weyl,
        AlgebraId::QOscillator,
        AlgebraId::QWeyl,
        AlgebraId::HWeyl,
        AlgebraId::Sl2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AlgebraId::Weyl => "weyl",
            AlgebraId::QOscillator => "q-oscillator",
            AlgebraId::QWeyl => "q-weyl",
            AlgebraId::HWeyl => "h-weyl",
            AlgebraId::Sl2 => "sl2",
        }
    }

    /// Non-central letters in their normal order.
    pub fn letters(self) -> &'static [char] {
        match self {
            AlgebraId::Weyl | AlgebraId::QOscillator => &['x', 'y'],
            _ => &['x', 'y', 'z'],
        }
    }

    pub fn letter_count(self) -> usize {
        self.letters().len()
    }

    pub fn letter_index(self, c: char) -> Option<u8> {
        self.letters().iter().position(|&l| l == c).map(|i| i as u8)
    }

    pub fn letter_char(self, index: u8) -> char {
        self.letters()[index as usize]
    }

    /// Whether a closed-form normal-coordinate module exists.
    pub fn has_closed_form(self) -> bool {
        !matches!(self, AlgebraId::Weyl)
    }
}

impl fmt::Display for AlgebraId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AlgebraId {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        AlgebraId::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| AlgebraError::UnknownAlgebra(s.to_string()))
    }
}

/// A normally ordered monomial `x^a y^b z^c` (the last slot is unused for
/// two-letter algebras and always zero).
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct NormalMonomial {
    algebra: AlgebraId,
    exps: [u32; 3],
}

impl NormalMonomial {
    pub fn new(algebra: AlgebraId, exps: &[u32]) -> Result<Self, AlgebraError> {
        let expected = algebra.letter_count();
        if exps.len() != expected {
            return Err(AlgebraError::Arity {
                algebra,
                expected,
                got: exps.len(),
            });
        }
        let mut e = [0; 3];
        e[..expected].copy_from_slice(exps);
        Ok(Self { algebra, exps: e })
    }

    pub fn unit(algebra: AlgebraId) -> Self {
        Self {
            algebra,
            exps: [0; 3],
        }
    }

    pub fn algebra(&self) -> AlgebraId {
        self.algebra
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps[..self.algebra.letter_count()]
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_unit(&self) -> bool {
        self.degree() == 0
    }

    /// Expands the exponents in letter order.
    pub fn word(&self) -> Word {
        let letters = self
            .exps()
            .iter()
            .enumerate()
            .flat_map(|(i, &e)| std::iter::repeat(i as u8).take(e as usize))
            .collect();
        Word {
            algebra: self.algebra,
            letters,
        }
    }
}

/// Graded lexicographic: total degree first, then exponents left to right.
impl Ord for NormalMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.algebra
            .cmp(&other.algebra)
            .then_with(|| self.degree().cmp(&other.degree()))
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for NormalMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for NormalMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .exps()
            .iter()
            .zip(self.algebra.letters())
            .filter(|(&e, _)| e > 0)
            .map(|(&e, l)| if e == 1 { l.to_string() } else { format!("{l}^{e}") })
            .collect();
        f.write_str(&parts.join(" "))
    }
}

impl fmt::Debug for NormalMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{:?}", self.algebra, self.exps())
    }
}

/// `monomial(algebra, exps)`.
pub fn monomial(algebra: AlgebraId, exps: &[u32]) -> Result<NormalMonomial, AlgebraError> {
    NormalMonomial::new(algebra, exps)
}

/// `word_of(m)`.
pub fn word_of(m: &NormalMonomial) -> Word {
    m.word()
}

/// A word in the free algebra on the non-central letters. Letters are
/// stored as indices into `AlgebraId::letters`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    algebra: AlgebraId,
    letters: Vec<u8>,
}

impl Word {
    pub fn new(algebra: AlgebraId, letters: Vec<u8>) -> Result<Self, AlgebraError> {
        if let Some(&bad) = letters.iter().find(|&&l| l as usize >= algebra.letter_count()) {
            return Err(AlgebraError::UnknownLetter {
                algebra,
                letter: bad,
            });
        }
        Ok(Self { algebra, letters })
    }

    pub fn from_chars(algebra: AlgebraId, chars: &str) -> Result<Self, AlgebraError> {
        let letters = chars
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| {
                algebra
                    .letter_index(c)
                    .ok_or(AlgebraError::UnknownLetter { algebra, letter: c as u8 })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self { algebra, letters })
    }

    pub fn empty(algebra: AlgebraId) -> Self {
        Self {
            algebra,
            letters: Vec::new(),
        }
    }

    pub fn algebra(&self) -> AlgebraId {
        self.algebra
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Result<Word, AlgebraError> {
        check_same(self.algebra, other.algebra)?;
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Word {
            algebra: self.algebra,
            letters,
        })
    }

    pub fn is_normal(&self) -> bool {
        self.letters.windows(2).all(|w| w[0] <= w[1])
    }

    pub fn inversions(&self) -> usize {
        inversions(&self.letters)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        let s: Vec<String> = self
            .letters
            .iter()
            .map(|&l| self.algebra.letter_char(l).to_string())
            .collect();
        f.write_str(&s.join(" "))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({}: {})", self.algebra, self)
    }
}

/// Number of pairs `i < j` with `letters[i] > letters[j]`.
pub fn inversions(letters: &[u8]) -> usize {
    let mut count = 0;
    for (i, &a) in letters.iter().enumerate() {
        count += letters[i + 1..].iter().filter(|&&b| b < a).count();
    }
    count
}

pub(crate) fn check_same(left: AlgebraId, right: AlgebraId) -> Result<(), AlgebraError> {
    if left == right {
        Ok(())
    } else {
        Err(AlgebraError::Mismatch { left, right })
    }
}

/// Finite linear combination of normal monomials over `PolyQH`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NCPolynomial {
    algebra: AlgebraId,
    terms: BTreeMap<NormalMonomial, PolyQH>,
}

impl NCPolynomial {
    pub fn zero(algebra: AlgebraId) -> Self {
        Self {
            algebra,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(algebra: AlgebraId) -> Self {
        Self::from_monomial(NormalMonomial::unit(algebra))
    }

    pub fn from_monomial(m: NormalMonomial) -> Self {
        Self::term(m, PolyQH::one())
    }

    pub fn term(m: NormalMonomial, coeff: PolyQH) -> Self {
        let mut p = Self::zero(m.algebra());
        p.add_term(m, &coeff);
        p
    }

    /// Builds a polynomial from possibly repeated, possibly zero terms.
    pub fn from_terms(
        algebra: AlgebraId,
        terms: impl IntoIterator<Item = (NormalMonomial, PolyQH)>,
    ) -> Result<Self, AlgebraError> {
        let mut p = Self::zero(algebra);
        for (m, c) in terms {
            check_same(algebra, m.algebra())?;
            p.add_term(m, &c);
        }
        Ok(p)
    }

    pub fn algebra(&self) -> AlgebraId {
        self.algebra
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

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&NormalMonomial, &PolyQH)> + Clone + '_ {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &NormalMonomial) -> PolyQH {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, m: NormalMonomial, c: &PolyQH) {
        debug_assert_eq!(m.algebra(), self.algebra);
        if c.is_zero() {
            return;
        }
        let remove = match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing += c;
                existing.is_zero()
            }
            None => {
                self.terms.insert(m, c.clone());
                false
            }
        };
        if remove {
            self.terms.remove(&m);
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &NCPolynomial, c: &PolyQH) {
        debug_assert_eq!(other.algebra, self.algebra);
        if c.is_zero() {
            return;
        }
        let unit = c.is_one();
        for (m, v) in &other.terms {
            if unit {
                self.add_term(*m, v);
            } else {
                self.add_term(*m, &(v * c));
            }
        }
    }

    pub fn add(&self, other: &NCPolynomial) -> Result<NCPolynomial, AlgebraError> {
        check_same(self.algebra, other.algebra)?;
        let mut out = self.clone();
        out.add_scaled(other, &PolyQH::one());
        Ok(out)
    }

    pub fn sub(&self, other: &NCPolynomial) -> Result<NCPolynomial, AlgebraError> {
        check_same(self.algebra, other.algebra)?;
        let mut out = self.clone();
        out.add_scaled(other, &PolyQH::from_int(-1));
        Ok(out)
    }

    pub fn scale(&self, c: &PolyQH) -> NCPolynomial {
        let mut out = Self::zero(self.algebra);
        out.add_scaled(self, c);
        out
    }

    pub fn scale_rational(&self, c: &Rational) -> NCPolynomial {
        self.scale(&PolyQH::constant(c.clone()))
    }

    /// Applies `f` to every coefficient, dropping terms that become zero.
    pub fn map_coeffs(&self, f: impl Fn(&PolyQH) -> PolyQH) -> NCPolynomial {
        let mut out = Self::zero(self.algebra);
        for (m, c) in &self.terms {
            out.add_term(*m, &f(c));
        }
        out
    }

    /// Re-merges all terms; the result is structurally canonical.
    pub fn canonicalize(&self) -> NCPolynomial {
        let mut out = Self::zero(self.algebra);
        for (m, c) in &self.terms {
            out.add_term(*m, c);
        }
        out
    }
}

impl fmt::Display for NCPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(m, c)| {
                if c.is_one() {
                    m.to_string()
                } else {
                    format!("({c}) {m}")
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl fmt::Debug for NCPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NCPolynomial[{}]({self})", self.algebra)
    }
}

/// One oriented relation `lhs -> sum coeff * word`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteRule {
    algebra: AlgebraId,
    lhs: (u8, u8),
    rhs: Vec<(Vec<u8>, PolyQH)>,
}

impl RewriteRule {
    /// Validates that `lhs` is out of order and that every replacement is
    /// shorter, or of equal length with fewer inversions.
    pub fn new(
        algebra: AlgebraId,
        lhs: (u8, u8),
        rhs: Vec<(Vec<u8>, PolyQH)>,
    ) -> Result<Self, AlgebraError> {
        let lhs_word = Word::new(algebra, vec![lhs.0, lhs.1])?;
        if lhs.0 <= lhs.1 {
            return Err(AlgebraError::InOrderPair {
                lhs: lhs_word.to_string(),
            });
        }
        for (w, _) in &rhs {
            let word = Word::new(algebra, w.clone())?;
            let decreases = word.len() < 2 || (word.len() == 2 && word.inversions() < 1);
            if !decreases {
                return Err(AlgebraError::NotTerminating {
                    lhs: lhs_word.to_string(),
                    word: word.to_string(),
                });
            }
        }
        Ok(Self { algebra, lhs, rhs })
    }

    pub fn algebra(&self) -> AlgebraId {
        self.algebra
    }

    pub fn lhs(&self) -> (u8, u8) {
        self.lhs
    }

    pub fn rhs(&self) -> &[(Vec<u8>, PolyQH)] {
        &self.rhs
    }

    /// The right-hand side as an element of the algebra. Every replacement
    /// word of the built-in rules is already normal.
    pub fn rhs_words(&self) -> impl Iterator<Item = (Word, &PolyQH)> + '_ {
        self.rhs.iter().map(|(w, c)| {
            (
                Word {
                    algebra: self.algebra,
                    letters: w.clone(),
                },
                c,
            )
        })
    }
}

impl fmt::Display for RewriteRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a = self.algebra.letter_char(self.lhs.0);
        let b = self.algebra.letter_char(self.lhs.1);
        let parts: Vec<String> = self
            .rhs_words()
            .map(|(w, c)| format!("({c}) {w}"))
            .collect();
        write!(f, "{a}{b} -> {}", parts.join(" + "))
    }
}

/// An algebra's complete oriented rule set with O(1) lookup by pair.
#[derive(Clone, Debug)]
pub struct Presentation {
    algebra: AlgebraId,
    rules: Vec<RewriteRule>,
    table: [[Option<usize>; 3]; 3],
}

impl Presentation {
    /// Wraps an arbitrary rule list. Used for the built-ins and for
    /// negative controls in representation checks.
    pub fn from_rules(algebra: AlgebraId, rules: Vec<RewriteRule>) -> Result<Self, AlgebraError> {
        let mut table = [[None; 3]; 3];
        for (i, r) in rules.iter().enumerate() {
            check_same(algebra, r.algebra)?;
            table[r.lhs.0 as usize][r.lhs.1 as usize] = Some(i);
        }
        Ok(Self {
            algebra,
            rules,
            table,
        })
    }

    pub fn algebra(&self) -> AlgebraId {
        self.algebra
    }

    pub fn rules(&self) -> &[RewriteRule] {
        &self.rules
    }

    pub fn rule(&self, left: u8, right: u8) -> Option<&RewriteRule> {
        self.table[left as usize][right as usize].map(|i| &self.rules[i])
    }
}

/// The built-in presentation of `algebra`.
pub fn presentation(algebra: AlgebraId) -> Presentation {
    const X: u8 = 0;
    const Y: u8 = 1;
    const Z: u8 = 2;
    let one = PolyQH::one;
    let int = PolyQH::from_int;
    let specs: Vec<((u8, u8), Vec<(Vec<u8>, PolyQH)>)> = match algebra {
        AlgebraId::Weyl => vec![((Y, X), vec![(vec![X, Y], one()), (vec![], PolyQH::h())])],
        AlgebraId::QOscillator => vec![((Y, X), vec![(vec![X, Y], PolyQH::q()), (vec![], PolyQH::h())])],
        AlgebraId::QWeyl => vec![
            ((Z, X), vec![(vec![X, Z], one()), (vec![Y], one())]),
            ((Y, X), vec![(vec![X, Y], PolyQH::q())]),
            ((Z, Y), vec![(vec![Y, Z], PolyQH::q())]),
        ],
        AlgebraId::HWeyl => vec![
            ((Y, X), vec![(vec![X, Y], one()), (vec![Z], one())]),
            ((Z, X), vec![(vec![X, Z], one()), (vec![Z], PolyQH::h())]),
            ((Z, Y), vec![(vec![Y, Z], one())]),
        ],
        AlgebraId::Sl2 => vec![
            ((Z, X), vec![(vec![X, Z], one()), (vec![Y], one())]),
            ((Y, X), vec![(vec![X, Y], one()), (vec![X], int(-2))]),
            ((Z, Y), vec![(vec![Y, Z], one()), (vec![Z], int(-2))]),
        ],
    };
    let rules = specs
        .into_iter()
        .map(|(lhs, rhs)| RewriteRule::new(algebra, lhs, rhs).expect("built-in rule is valid"))
        .collect();
    Presentation::from_rules(algebra, rules).expect("built-in presentation is valid")
}
