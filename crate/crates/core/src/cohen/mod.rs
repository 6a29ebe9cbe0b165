//! Cohen groups `K_n`, `K_n(k)` and `H_n` as words, with equality decided
//! through the square-zero multilinear representation.

pub mod hopf;
pub mod multilinear;
pub mod relators;
pub mod word;

pub use hopf::{combinatorial_james_hopf, face_projection, for_each_right_lex_subsequence, is_in_h_n};
pub use multilinear::{equal_in_group, group_power_expansion, represent, MultilinearElement};
pub use relators::{exponent_relator, left_normed_commutator, repeated_index_relator};
pub use word::{GroupGenerator, GroupWord};
