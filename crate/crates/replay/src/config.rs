use dnull_sym::{Execution, Rational};
use serde::{Deserialize, Serialize};

use crate::error::ReplayError;

/// How the eigenvalue `a` of the null 2-type condition enters the replay.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum AMode {
    #[default]
    Symbolic,
    Numeric {
        value: Rational,
    },
}

/// Which signs the connection forms `ω_jj¹` and `ω_33¹` take when the
/// trace relation is written in terms of `w414` and `w313`.
///
/// `Reference` (`ω_jj¹ = -w414`, `ω_33¹ = +w313`) is the reading under which
/// the printed beta-gamma master equation is reproduced. `Strict` applies
/// `ω_ii¹ = -ω_i1^i` to both.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SignReading {
    #[default]
    Reference,
    Strict,
}

impl SignReading {
    /// Signs `(s_jj, s_33)` with `ω_jj¹ = s_jj·w414` and `ω_33¹ = s_33·w313`.
    pub fn signs(self) -> (i64, i64) {
        match self {
            SignReading::Reference => (-1, 1),
            SignReading::Strict => (-1, -1),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", deny_unknown_fields)]
pub struct ReplayConfig {
    pub n: u32,
    #[serde(default)]
    pub keep_intermediates: bool,
    #[serde(default)]
    pub a_mode: AMode,
    #[serde(default)]
    pub reading: SignReading,
    /// Not part of the report: results are identical either way.
    #[serde(skip)]
    pub execution: Execution,
}

impl ReplayConfig {
    pub fn new(n: u32) -> Self {
        ReplayConfig {
            n,
            keep_intermediates: false,
            a_mode: AMode::Symbolic,
            reading: SignReading::Reference,
            execution: Execution::default(),
        }
    }

    pub fn with_numeric_a(mut self, value: Rational) -> Self {
        self.a_mode = AMode::Numeric { value };
        self
    }

    pub fn with_reading(mut self, reading: SignReading) -> Self {
        self.reading = reading;
        self
    }

    pub fn keeping_intermediates(mut self) -> Self {
        self.keep_intermediates = true;
        self
    }

    pub fn with_execution(mut self, execution: Execution) -> Self {
        self.execution = execution;
        self
    }

    pub fn validate(&self) -> Result<(), ReplayError> {
        if self.n < 4 {
            return Err(ReplayError::DimensionTooSmall(self.n));
        }
        if let AMode::Numeric { value } = &self.a_mode {
            if value.is_zero() {
                return Err(ReplayError::InvalidConfig(
                    "the eigenvalue a must be nonzero".into(),
                ));
            }
        }
        Ok(())
    }
}
