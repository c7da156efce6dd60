//! Arrow, cap and curl diagram combinatorics for blocks of GL and Sp in odd
//! characteristic: orbit enumeration, the Bruhat-type order, decomposition
//! polynomials, their inverses, resolutions and stable limits.

pub mod budget;
pub mod capcurl;
pub mod diagram;
pub mod error;
pub mod limits;
pub mod moves;
pub mod order;
pub mod poly;
pub mod resolutions;
pub mod weights;

pub use budget::SearchBudget;
pub use capcurl::{cap_diagram, cocap_diagram, CapCurlDiagram, Orientation, Strand, StrandKind};
pub use diagram::{arrow_diagram, canonical_diagram, weight_of_diagram, ArrowDiagram, NodeState, WallSide, Walls};
pub use error::{Error, Result};
pub use limits::{char0_compare, min_prime, stability_check, stable_diagram, LimitConfig, StableDiagram};
pub use moves::{p_recursive, r_recursive, Recursion};
pub use order::{
    diagram_leq, orbit, preceq_oracle, seq_distance, seq_leq, split_sequences, weight_leq, Arrow, ArrowSeq, Orbit,
};
pub use poly::{build_table, d_poly, e_poly, p_poly, r_poly, Family, OrbitTable, QPoly};
pub use resolutions::{ext_dims, injective_resolution, simple_character, t_poly, tilting_resolution, Resolution};
pub use weights::{in_lambda_p, in_lambda_s, lambda_s, Flavor, GroupConfig, Partition, Weight};
