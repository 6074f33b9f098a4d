//! Trigonometric R-matrices: exact construction and verification, the
//! expansion at `zeta = 1` behind the corner-transfer-matrix Hamiltonian,
//! and the combinatorial tables of the `q -> 0` limit.

pub mod evalmod;
pub mod hamiltonian;
pub mod numeric;
pub mod projector;
pub mod qzero;
pub mod rhat;
pub mod ybe;

pub use evalmod::{chevalley_act, coproduct_matrix, EvalModule, Gen};
pub use hamiltonian::{brace, h1, h2, h3, local_hamiltonian, HamiltonianKind, LocalHamiltonian};
pub use numeric::{crossing_residual, kappa, r_u_basis_numeric, unitarity_residual_numeric};
pub use projector::{omega_vector, projector, projectors};
pub use qzero::{rbar_gauged, rbar_q0_table, rbar_series, rlimit2_coeff, zerot_image};
pub use rhat::{check_unitarity, rhat_projector, rhat_solve};
pub use ybe::yang_baxter_holds;
