//! Exact normal ordering in the Weyl, q-oscillator, q-Weyl, h-Weyl and
//! U(sl2) algebras, closed-form normal coordinates, products in the
//! symmetric powers Symⁿ(A), and representation-theoretic checks.

pub mod algebra;
pub mod closed_forms;
pub mod coeff;
pub mod error;
pub mod exec;
pub mod repr;
pub mod rewrite;
pub mod sym_power;
pub mod verify;

pub use algebra::{
    monomial, presentation, word_of, AlgebraId, NCPolynomial, NormalMonomial, Presentation,
    RewriteRule, Word,
};
pub use coeff::{PolyQH, Rational};
pub use exec::Exec;
pub use rewrite::{normal_order, Rewriter, Strategy, TensorElement};
pub use sym_power::{from_invariants, sym_product, to_invariants, SymElement, SymMultiplier};
