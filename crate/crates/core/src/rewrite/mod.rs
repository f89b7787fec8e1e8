//! The ground-truth oracle: normal ordering by exhaustive rule
//! application, plus tensor-power arithmetic and the symmetrization map.

mod engine;
mod tensor;

pub use engine::{multiply, normal_order, Rewriter, Strategy};
pub(crate) use tensor::accumulate_tensor_product;
pub use tensor::{symmetrize, tensor_multiply, TensorElement};
