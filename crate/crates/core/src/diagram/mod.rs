//! The Brauer algebra on diagrams, its Murphy basis, and brute-force oracles.

pub mod brauer;
pub mod element;
pub mod linalg;
pub mod murphy;
pub mod oracle;

pub use brauer::{BrauerDiagram, MAX_N};
pub use element::{BrauerAlgebra, Coeff, Element};
pub use murphy::{b_element, murphy_basis_element, murphy_cell_generator};
pub use oracle::{
    express_in_murphy_basis, f_idempotent_factor, f_st_element, gram_matrix_oracle, is_sanctioned,
    module_action_oracle, orthogonal_vectors_oracle, MurphyBasis, MurphyExpansion, OrthogonalData,
};
