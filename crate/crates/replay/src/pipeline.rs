//! Stage-by-stage driver. Every stage appends its checkpoints and side
//! conditions; a fatal checkpoint stops the run with both sides attached.

use dnull_sym::Polynomial;

use crate::assignment::{check_curvature_assignment, AssignmentCertificate};
use crate::checkpoint::{Checkpoint, Ledger};
use crate::config::ReplayConfig;
use crate::curves::{derive_curves, Curves};
use crate::derivation::{build_algebra, DerivationAlgebra};
use crate::eliminate::{eliminate, Elimination};
use crate::error::ReplayError;
use crate::integrals::{derive_integrals, FirstIntegrals};
use crate::master::{derive_master, sign_audit, MasterEquations, SignAudit};
use crate::omega::{check_omega_identities, to_frame, OmegaResult};
use crate::report::EliminationReport;
use crate::transversal::{check_transversal, Transversal};

fn require_all(cps: &[Checkpoint]) -> Result<(), ReplayError> {
    cps.iter().try_for_each(Checkpoint::require)
}

/// A replay session for one configuration.
#[derive(Debug, Clone)]
pub struct Replay {
    pub cfg: ReplayConfig,
    pub algebra: DerivationAlgebra,
    pub ledger: Ledger,
    pub checkpoints: Vec<Checkpoint>,
}

impl Replay {
    pub fn new(cfg: &ReplayConfig) -> Result<Self, ReplayError> {
        let algebra = build_algebra(cfg)?;
        Ok(Replay {
            cfg: cfg.clone(),
            algebra,
            ledger: Ledger::default(),
            checkpoints: Vec::new(),
        })
    }

    fn absorb(&mut self, cps: &[Checkpoint]) -> Result<(), ReplayError> {
        self.checkpoints.extend_from_slice(cps);
        require_all(cps)
    }

    pub fn assignment(&mut self) -> Result<AssignmentCertificate, ReplayError> {
        let (cert, cps) = check_curvature_assignment(self.cfg.n);
        self.absorb(&cps)?;
        Ok(cert)
    }

    /// Omega identities, plus the check that their trace row is the trace
    /// relation used by the master chain under the configured reading.
    pub fn omega(&mut self) -> Result<OmegaResult, ReplayError> {
        let out = check_omega_identities(self.cfg.n);
        self.absorb(&out.checkpoints)?;
        let (s_jj, s_33) = self.cfg.reading.signs();
        let f = &self.algebra.frame;
        let mapped = to_frame(&out.trace_relation, f, s_jj, s_33);
        let cp = Checkpoint::required(
            "omega.trace-frame",
            "trace row written with the connection forms of the frame",
            mapped,
            f.trace_relation(s_jj, s_33),
        );
        self.absorb(std::slice::from_ref(&cp))?;
        Ok(out)
    }

    pub fn transversal(&mut self) -> Result<Transversal, ReplayError> {
        let out = check_transversal(&self.cfg, &mut self.ledger)?;
        self.absorb(&out.checkpoints)?;
        Ok(out)
    }

    pub fn master(&mut self) -> Result<MasterEquations, ReplayError> {
        let (s_jj, s_33) = self.cfg.reading.signs();
        let out = derive_master(&self.algebra, s_jj, s_33)?;
        self.absorb(&out.checkpoints)?;
        Ok(out)
    }

    pub fn integrals(&mut self, m: &MasterEquations) -> Result<FirstIntegrals, ReplayError> {
        let (s_jj, s_33) = self.cfg.reading.signs();
        let out = derive_integrals(&self.algebra.frame, m, s_jj, s_33)?;
        self.absorb(&out.checkpoints)?;
        Ok(out)
    }

    pub fn curves(&mut self, fi: &FirstIntegrals) -> Result<Curves, ReplayError> {
        let out = derive_curves(&self.algebra, fi, &mut self.ledger)?;
        self.absorb(&out.checkpoints)?;
        Ok(out)
    }

    pub fn eliminate(&mut self, curves: &Curves) -> Result<Elimination, ReplayError> {
        let out = eliminate(&self.cfg, &self.algebra.frame, curves, &mut self.ledger)?;
        self.absorb(&out.checkpoints)?;
        Ok(out)
    }

    pub fn sign_audit(&self) -> Result<Vec<SignAudit>, ReplayError> {
        sign_audit(&self.algebra)
    }

    fn report(
        self,
        assignment: Option<AssignmentCertificate>,
        curves: Curves,
        elim: Elimination,
    ) -> Result<EliminationReport, ReplayError> {
        let audit = self.sign_audit()?;
        let removed = elim
            .factors
            .iter()
            .zip(elim.removed9.iter().zip(&elim.removed12))
            .filter(|(_, (a, b))| **a > 0 || **b > 0)
            .map(|(p, (a, b))| (p.clone(), *a, *b))
            .collect();
        Ok(EliminationReport {
            config: self.cfg,
            assignment,
            sign_audit: audit,
            checkpoints: self.checkpoints,
            curve9: curves.curve9,
            curve12: curves.curve12,
            reduced9: elim.reduced9,
            reduced12: elim.reduced12,
            removed_factors: removed,
            final_resultant: elim.final_resultant,
            side_conditions: self.ledger.entries().to_vec(),
            verdict: elim.verdict,
            cross_checks: elim.cross_checks,
        })
    }
}

pub fn check_transversal_flatness(
    cfg: &ReplayConfig,
) -> Result<(Transversal, Ledger), ReplayError> {
    let mut r = Replay::new(cfg)?;
    let t = r.transversal()?;
    Ok((t, r.ledger))
}

pub fn derive_master_equations(cfg: &ReplayConfig) -> Result<MasterEquations, ReplayError> {
    Replay::new(cfg)?.master()
}

pub fn derive_first_integrals(cfg: &ReplayConfig) -> Result<FirstIntegrals, ReplayError> {
    let mut r = Replay::new(cfg)?;
    let m = r.master()?;
    r.integrals(&m)
}

/// `L`, `M`, `N` and the nine-curve (the twelve-curve comes along).
pub fn derive_tangency_curve(cfg: &ReplayConfig) -> Result<(Curves, Ledger), ReplayError> {
    let mut r = Replay::new(cfg)?;
    let m = r.master()?;
    let fi = r.integrals(&m)?;
    let c = r.curves(&fi)?;
    Ok((c, r.ledger))
}

pub fn derive_prolonged_curve(cfg: &ReplayConfig) -> Result<Polynomial, ReplayError> {
    Ok(derive_tangency_curve(cfg)?.0.curve12)
}

/// The elimination chain alone: master equations through the resultant.
pub fn eliminate_beta(cfg: &ReplayConfig) -> Result<EliminationReport, ReplayError> {
    let mut r = Replay::new(cfg)?;
    let m = r.master()?;
    let fi = r.integrals(&m)?;
    let c = r.curves(&fi)?;
    let e = r.eliminate(&c)?;
    r.report(None, c, e)
}

/// Every stage in order.
pub fn replay_all(cfg: &ReplayConfig) -> Result<EliminationReport, ReplayError> {
    let mut r = Replay::new(cfg)?;
    let cert = r.assignment()?;
    r.omega()?;
    r.transversal()?;
    let m = r.master()?;
    let fi = r.integrals(&m)?;
    let c = r.curves(&fi)?;
    let e = r.eliminate(&c)?;
    r.report(Some(cert), c, e)
}

/// Independent runs, concurrently when the `parallel` feature is on.
pub fn replay_many(cfgs: &[ReplayConfig]) -> Vec<Result<EliminationReport, ReplayError>> {
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        cfgs.par_iter().map(replay_all).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        cfgs.iter().map(replay_all).collect()
    }
}
