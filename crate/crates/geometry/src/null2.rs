//! Pointwise screening for null 2-type hypersurfaces with constant mean
//! curvature: `ΔH = 0` turns `ΔH + H·tr A² = aH` into `a = tr A²`.

use serde::{Deserialize, Serialize};

use crate::error::GeometryError;
use crate::shape::{curvature_report, ShapeOperator};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Null2Status {
    #[serde(rename = "null-2-type-candidate")]
    Candidate,
    RejectedMinimal,
    #[serde(rename = "rejected-umbilical-1-type")]
    RejectedUmbilical,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Null2TypeReport {
    pub status: Null2Status,
    pub a: Option<f64>,
}

impl Null2TypeReport {
    pub fn is_candidate(&self) -> bool {
        self.status == Null2Status::Candidate
    }
}

pub fn null2type_check(
    a: &ShapeOperator,
    assume_constant_h: bool,
    tol: f64,
) -> Result<Null2TypeReport, GeometryError> {
    if !assume_constant_h {
        return Err(GeometryError::Unsupported(
            "pointwise data cannot certify non-constant mean curvature; pass assume_constant_H"
                .into(),
        ));
    }
    let rep = curvature_report(a);
    let h = rep.h;
    if h.abs() <= tol {
        return Ok(Null2TypeReport {
            status: Null2Status::RejectedMinimal,
            a: None,
        });
    }
    let spread = rep
        .principal_curvatures
        .iter()
        .map(|l| (l - h).abs())
        .fold(0.0, f64::max);
    if spread <= tol * h.abs().max(1.0) {
        return Ok(Null2TypeReport {
            status: Null2Status::RejectedUmbilical,
            a: None,
        });
    }
    Ok(Null2TypeReport {
        status: Null2Status::Candidate,
        a: Some(rep.tr_a2),
    })
}
