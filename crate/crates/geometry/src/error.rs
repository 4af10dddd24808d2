use thiserror::Error;

#[derive(Debug, Error)]
pub enum GeometryError {
    #[error("dimension {0} is too small (need n >= 2)")]
    TooSmall(usize),
    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is not symmetric: entries ({i},{j}) and ({j},{i}) differ by {diff:e}")]
    Asymmetric { i: usize, j: usize, diff: f64 },
    #[error("non-finite entry at ({0},{1})")]
    NonFinite(usize, usize),
    #[error("subspace dimension r = {r} out of range 2..={max} for n = {n}")]
    RankOutOfRange { r: usize, n: usize, max: usize },
    #[error("frame is not orthonormal: |F^T F - I| = {0:e}")]
    NotOrthonormal(f64),
    #[error("frame has {rows} rows, operator has dimension {n}")]
    FrameShape { rows: usize, n: usize },
    #[error("unsupported mode: {0}")]
    Unsupported(String),
    #[error("invalid surface: {0}")]
    InvalidSpec(String),
    #[error("degenerate metric at the base point (condition number {0:e})")]
    DegenerateMetric(f64),
    #[error("insufficient stencil: {0}")]
    Stencil(String),
    #[error("schema error: {0}")]
    Schema(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
