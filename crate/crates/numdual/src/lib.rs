//! Numerical characterization of polynomial ideals in local rings via dual spaces.
//!
//! Given generators of an ideal and an (approximately known) point on its
//! variety, this crate computes truncated Macaulay dual spaces, discovers the
//! g-corners of the initial ideal with a degree-search whose stopping rule is
//! guaranteed to find all of them, and derives the Hilbert function, Hilbert
//! polynomial, a regularity bound, the local dimension, a standard basis and a
//! bounded-degree ideal membership test. All rank decisions go through
//! singular value decompositions with caller-supplied tolerances, so the
//! pipeline is robust to noise in the input point.
//!
//! The same machinery runs over exact rational scalars, which serves as the
//! ground-truth oracle for the numerical path in the test suite.

pub mod dual;
pub mod gcorner;
pub mod hilbert;
pub mod input;
pub mod kernel;
pub mod macaulay;
pub mod matrix;
pub mod monomial;
pub mod mourrain;
pub mod oracle;
pub mod order;
pub mod pipeline;
pub mod poly;
pub mod sbasis;
pub mod scalar;
pub mod sylvester;

pub use dual::DualFunctional;
pub use gcorner::{find_gcorners, minimal_gcorners, GCornerRecord, GCornerSearch, Strategy};
pub use hilbert::{hilbert_data, hilbert_value, HilbertData};
pub use input::{parse_system, SystemSpec};
pub use kernel::{numerical_kernel, reduce_lead_terms, DualBasis, KernelError};
pub use macaulay::{macaulay_array, truncated_dual};
pub use matrix::CoefficientMatrix;
pub use monomial::Monomial;
pub use mourrain::{mourrain_dual, mourrain_extend, IntegrationFrame};
pub use order::{LocalOrder, Tiebreak};
pub use pipeline::{dualinfo_run, DualInfoReport, PipelineError, RunOptions};
pub use poly::Polynomial;
pub use sbasis::{membership, recover_sbasis_element, standard_basis, Membership};
pub use scalar::{KernelScalar, Scalar, C64, Q};
pub use sylvester::{embedded_truncated_dual, sylvester_array, sylvester_dual};
