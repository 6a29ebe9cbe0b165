//! The truncated tensor algebra and the structure on it.

pub mod coproduct;
pub mod element;
pub mod endo;
pub mod lie;
pub mod symmetric;
pub mod word;

pub use coproduct::{coproduct, iterated_coproduct, iterated_coproduct_in, TensorSplitElement};
pub use element::{AlgebraContext, TensorElement};
pub use endo::{identity_convolution_power, reduced_identity_power, split_enumeration_cost, EndoMap};
pub use lie::{left_normed_bracket, lie_trace_element, trace_element};
pub use symmetric::{apply_group_algebra, permute_positions, relabel_letters, Permutation, SymGroupAlgebraElement};
pub use word::Word;
