//! Homological James–Hopf maps and the executable identity checks.

pub mod blocks;
pub mod checks;
pub mod report;

pub use blocks::{block_partitions, homology_james_hopf, homology_james_hopf_linear, BlockElement, BlockWord};
pub use checks::{
    check_cmn_congruence, check_h2_beta4, check_hopf_whitehead_vanishing, check_obstruction_formula,
    check_power_map_triviality, check_trace_lemmas, h2_beta4_routes, phi_element, three_cycle_sum, H2Beta4Routes,
    MAX_COMBINATORIAL_ARITY, MAX_DEGREE, MAX_GENERATORS, MAX_HOMOLOGICAL_ARITY, MAX_SPLITS,
};
pub use report::{CheckReport, Status};
