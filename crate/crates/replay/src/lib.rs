//! Exact replay of the elimination showing that a δ(3)-ideal null 2-type
//! hypersurface has constant mean curvature, at a fixed dimension `n >= 4`.

pub mod assignment;
pub mod checkpoint;
pub mod config;
pub mod curves;
pub mod derivation;
pub mod eliminate;
pub mod error;
pub mod frame;
pub mod integrals;
pub mod master;
pub mod omega;
pub mod pipeline;
pub mod reference;
pub mod report;
pub mod transversal;

pub use assignment::check_curvature_assignment;
pub use checkpoint::{Checkpoint, Expected, Ledger, SideCondition, Status};
pub use config::{AMode, ReplayConfig, SignReading};
pub use derivation::{build_algebra, Derivation, DerivationAlgebra};
pub use eliminate::{resultant_verdict, CrossCheck, Verdict};
pub use error::ReplayError;
pub use omega::check_omega_identities;
pub use pipeline::{
    check_transversal_flatness, derive_first_integrals, derive_master_equations,
    derive_prolonged_curve, derive_tangency_curve, eliminate_beta, replay_all, replay_many, Replay,
};
pub use report::EliminationReport;
