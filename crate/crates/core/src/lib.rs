//! Gram determinants of the cell modules of the Brauer algebra `B_n(δ)`,
//! computed by a recursion over the branching graph, together with a
//! brute-force diagram-algebra oracle and seminormal coefficient checks.

pub mod combinat;
pub mod diagram;
pub mod error;
pub mod gram;
pub mod ring;
pub mod seminormal;

pub use combinat::{CellLabel, Content, Node, NodeKind, Partition, UpDownTableau};
pub use diagram::{BrauerAlgebra, BrauerDiagram, Element};
pub use error::{Error, Result};
pub use gram::{gram_det, gram_det_table, gram_det_table_resume, DeltaSpec, GramResult};
pub use ring::{DeltaScalar, Exponent, FactoredPoly, FactoredRational, Poly};
pub use seminormal::{verify_seminormal, VerificationReport};
