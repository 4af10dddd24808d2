//! Pointwise geometry of hypersurfaces in Euclidean space from their shape
//! operators: principal curvatures, scalar curvature, the invariants
//! `δ(r)` with their universal upper bound, the extremal eigenvalue
//! pattern for `r = 3`, null 2-type screening, plus example surfaces and
//! shape operators estimated from sampled immersions.

pub mod delta;
pub mod error;
pub mod io;
pub mod null2;
pub mod pattern;
pub mod shape;
pub mod stiefel;
pub mod surface;

pub use delta::{
    chen_bound, delta_invariant, ideality_gap, restricted_scalar, DeltaConfig, DeltaResult,
    IdealityGap, Method, Witness,
};
pub use error::GeometryError;
pub use io::{load_case, parse_case, parse_operator, save_report, to_json_17, Case};
pub use null2::{null2type_check, Null2Status, Null2TypeReport};
pub use pattern::{detect_ideal_pattern, IdealPattern};
pub use shape::{curvature_report, ShapeOperator, SpectrumReport};
pub use surface::{
    catalog_shape_operator, shape_operator_from_grid, Chart, ImmersionGrid, SurfaceSpec,
};
