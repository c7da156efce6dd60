//! Polynomials in `q`, the orbit tables `d`, `e`, `p`, `r`, their
//! sequence-level counterparts, and the arrow-flipping duality.

mod qpoly;
mod seq;
mod table;

pub use qpoly::QPoly;
pub use seq::{dagger_seq, dagger_weight, seq_d_poly, seq_e_poly, seq_p_matrix, seq_strands, SeqClass, SeqTable};
pub use table::{build_table, d_of, d_poly, e_of, e_poly, invert_at_neg_q, p_poly, r_poly, Family, Matrix, OrbitTable};
