//! Example hypersurfaces in closed form and shape operators recovered from
//! sampled immersions.

mod catalog;
mod grid;

pub use catalog::{catalog_shape_operator, Chart, SurfaceSpec};
pub use grid::{shape_operator_from_grid, GridDiagnostics, ImmersionGrid, MAX_CONDITION};
