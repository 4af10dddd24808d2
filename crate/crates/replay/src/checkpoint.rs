//! Checkpoints and the side-condition ledger.

use dnull_sym::{Polynomial, Rational, RationalFunction};
use serde::{Deserialize, Serialize};

use crate::error::ReplayError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    /// Derived equals the reference form.
    ExactMatch,
    /// Derived equals a nonzero rational multiple of the reference form.
    MatchUpToUnit,
    /// An explicit structural predicate holds.
    StructuralOnly,
    /// Derived disagrees with a printed reference form. Reported, not fatal.
    Mismatch,
    /// An internal identity or predicate failed. Fatal.
    Failed,
}

impl Status {
    pub fn passed(self) -> bool {
        matches!(
            self,
            Status::ExactMatch | Status::MatchUpToUnit | Status::StructuralOnly
        )
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Expected {
    /// A reference polynomial, compared up to a nonzero rational factor.
    Form(Polynomial),
    /// A named structural predicate.
    Predicate(String),
    /// The derived residue must vanish.
    Zero,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Checkpoint {
    pub id: String,
    pub title: String,
    pub derived: Polynomial,
    pub expected: Expected,
    pub status: Status,
    /// `q` with `derived = q · expected`, when such a `q` exists.
    pub unit: Option<Rational>,
    pub note: Option<String>,
}

impl Checkpoint {
    /// Compare against a printed form up to a nonzero rational multiple.
    /// Disagreement is a `Mismatch`.
    pub fn against(id: &str, title: &str, derived: Polynomial, reference: Polynomial) -> Self {
        let unit = derived.ratio_to(&reference);
        let status = match &unit {
            Some(q) if q.is_one() => Status::ExactMatch,
            Some(_) => Status::MatchUpToUnit,
            None => Status::Mismatch,
        };
        Checkpoint {
            id: id.into(),
            title: title.into(),
            derived,
            expected: Expected::Form(reference),
            status,
            unit,
            note: None,
        }
    }

    /// Like [`Checkpoint::against`] but a disagreement is fatal.
    pub fn required(id: &str, title: &str, derived: Polynomial, reference: Polynomial) -> Self {
        Self::against(id, title, derived, reference).strict()
    }

    /// Compare rational functions up to a nonzero rational multiple. The
    /// numerators are kept as the two sides.
    pub fn against_rational(
        id: &str,
        title: &str,
        derived: &RationalFunction,
        reference: &RationalFunction,
    ) -> Self {
        let unit = if derived.is_zero() || reference.is_zero() {
            None
        } else {
            (derived / reference)
                .as_polynomial()
                .filter(|q| q.is_constant())
                .map(|q| q.constant_term())
        };
        let status = match &unit {
            Some(q) if q.is_one() => Status::ExactMatch,
            Some(_) => Status::MatchUpToUnit,
            None => Status::Mismatch,
        };
        Checkpoint {
            id: id.into(),
            title: title.into(),
            derived: derived.numer().clone(),
            expected: Expected::Form(reference.numer().clone()),
            status,
            unit,
            note: None,
        }
    }

    /// Turn a `Mismatch` into a fatal `Failed`.
    pub fn strict(mut self) -> Self {
        if self.status == Status::Mismatch {
            self.status = Status::Failed;
        }
        self
    }

    /// A residue that must vanish identically. Failure is fatal.
    pub fn vanishing(id: &str, title: &str, residue: &RationalFunction) -> Self {
        let status = if residue.is_zero() {
            Status::ExactMatch
        } else {
            Status::Failed
        };
        Checkpoint {
            id: id.into(),
            title: title.into(),
            derived: residue.numer().clone(),
            expected: Expected::Zero,
            status,
            unit: None,
            note: None,
        }
    }

    /// A printed identity whose residue should vanish. Failure is a `Mismatch`.
    pub fn printed_identity(id: &str, title: &str, residue: Polynomial) -> Self {
        let status = if residue.is_zero() {
            Status::ExactMatch
        } else {
            Status::Mismatch
        };
        Checkpoint {
            id: id.into(),
            title: title.into(),
            derived: residue,
            expected: Expected::Zero,
            status,
            unit: None,
            note: None,
        }
    }

    pub fn structural(
        id: &str,
        title: &str,
        derived: Polynomial,
        predicate: &str,
        holds: bool,
    ) -> Self {
        Checkpoint {
            id: id.into(),
            title: title.into(),
            derived,
            expected: Expected::Predicate(predicate.into()),
            status: if holds {
                Status::StructuralOnly
            } else {
                Status::Failed
            },
            unit: None,
            note: None,
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.status.passed()
    }

    pub fn expected_text(&self) -> String {
        match &self.expected {
            Expected::Form(p) => p.to_string(),
            Expected::Predicate(s) => s.clone(),
            Expected::Zero => "0".into(),
        }
    }

    /// `Err` for a fatal status, carrying both sides.
    pub fn require(&self) -> Result<(), ReplayError> {
        if self.status == Status::Failed {
            return Err(ReplayError::CheckpointFailed {
                id: self.id.clone(),
                detail: self.title.clone(),
                derived: self.derived.to_string(),
                expected: self.expected_text(),
            });
        }
        Ok(())
    }
}

/// A denominator cleared (or a factor divided out) somewhere in the replay.
/// Conclusions hold where every recorded expression is nonzero.
#[derive(Debug, Clone, PartialEq)]
pub struct SideCondition {
    pub expr: Polynomial,
    pub origin: String,
    pub reason: String,
}

#[derive(Debug, Clone, Default)]
pub struct Ledger {
    entries: Vec<SideCondition>,
}

impl Ledger {
    /// Record `expr != 0`, normalized to its primitive part.
    pub fn record(&mut self, expr: &Polynomial, origin: &str, reason: &str) {
        assert!(!expr.is_constant(), "constant side condition from {origin}");
        self.entries.push(SideCondition {
            expr: expr.primitive(),
            origin: origin.into(),
            reason: reason.into(),
        });
    }

    pub fn entries(&self) -> &[SideCondition] {
        &self.entries
    }

    /// Distinct recorded expressions, in first-recorded order.
    pub fn distinct(&self) -> Vec<Polynomial> {
        let mut out: Vec<Polynomial> = Vec::new();
        for e in &self.entries {
            if !out.contains(&e.expr) {
                out.push(e.expr.clone());
            }
        }
        out
    }

    pub fn extend(&mut self, other: Ledger) {
        self.entries.extend(other.entries);
    }
}

/// Divide `p` by each factor as often as it goes, in order. Returns the
/// reduced polynomial and the multiplicity removed for each factor.
pub fn strip_factors(p: &Polynomial, factors: &[Polynomial]) -> (Polynomial, Vec<u32>) {
    let mut rest = p.clone();
    let mut counts = Vec::with_capacity(factors.len());
    for f in factors {
        let mut k = 0;
        if !f.is_constant() && !rest.is_zero() {
            while let Ok(q) = rest.div_exact(f) {
                rest = q;
                k += 1;
            }
        }
        counts.push(k);
    }
    (rest, counts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use dnull_sym::{parse, Ring};

    fn ring() -> Ring {
        Ring::new(&["H", "beta"]).unwrap()
    }

    #[test]
    fn statuses() {
        let r = ring();
        let p = |s: &str| parse(&r, s).unwrap();
        assert_eq!(
            Checkpoint::against("x", "", p("H + beta"), p("H + beta")).status,
            Status::ExactMatch
        );
        let c = Checkpoint::against("x", "", p("2*H + 2*beta"), p("H + beta"));
        assert_eq!(c.status, Status::MatchUpToUnit);
        assert_eq!(c.unit, Some(Rational::integer(2)));
        assert_eq!(
            Checkpoint::against("x", "", p("H"), p("beta")).status,
            Status::Mismatch
        );
        assert_eq!(
            Checkpoint::required("x", "", p("H"), p("beta")).status,
            Status::Failed
        );
        assert!(Checkpoint::required("x", "", p("H"), p("beta"))
            .require()
            .is_err());
    }

    #[test]
    fn stripping_counts_multiplicity() {
        let r = ring();
        let p = |s: &str| parse(&r, s).unwrap();
        let (rest, k) = strip_factors(
            &p("H^3*(beta - H)^2*(beta + 1)"),
            &[p("H"), p("beta - H"), p("beta + 7")],
        );
        assert_eq!(rest, p("beta + 1"));
        assert_eq!(k, vec![3, 2, 0]);
    }
}
