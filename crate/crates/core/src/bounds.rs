//! Closed-form bounds, in exact integer arithmetic, and a harness that
//! checks them against the exact solvers.

use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;
use crate::solver::{SolveError, SolveResult, Solver};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("{0}")]
    InvalidParameters(String),
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error("inconsistent values: {0}")]
    Inconsistent(String),
}

/// `ceil(a / b)`, `b > 0`.
pub fn ceil_div(a: u64, b: u64) -> u64 {
    a.div_ceil(b)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub parameter: String,
    pub lower: u64,
    pub upper: u64,
    pub exact: Option<u64>,
    pub sources: Vec<String>,
}

impl BoundReport {
    /// `lower <= exact <= upper`, vacuously true without an exact value.
    pub fn holds(&self) -> bool {
        self.exact
            .is_none_or(|e| self.lower <= e && e <= self.upper)
    }

    pub fn with_exact(mut self, exact: u64) -> Self {
        self.exact = Some(exact);
        self
    }
}

/// `ceil(2 (n - 1) / (delta + 3))`, a lower bound on the adjacency dimension
/// of any graph of order `n` and maximum degree `delta`.
pub fn maxdeg_lower(n: u64, delta: u64) -> u64 {
    ceil_div(2 * n.saturating_sub(1), delta + 3)
}

/// `ceil((3n - 1) / 4)`: the locating-domination lower bound, and the
/// adjacency dimension upper bound, for `P_2 □ P_n`.
pub fn grid2_target(n: u64) -> u64 {
    ceil_div(3 * n - 1, 4)
}

/// `n + 1` when `n ≡ 1 (mod 3)`, else `n`: the locating-domination lower
/// bound and adjacency dimension upper bound for `P_3 □ P_n`.
pub fn grid3_target(n: u64) -> u64 {
    n + u64::from(n % 3 == 1)
}

fn check_columns(n: u64) -> Result<(), BoundsError> {
    if n < 2 {
        return Err(BoundsError::InvalidParameters(format!(
            "grid bounds need n >= 2, got {n}"
        )));
    }
    Ok(())
}

/// Adjacency dimension of `P_2 □ P_n` lies in `[target - 1, target]`.
pub fn grid2_bounds(n: u64) -> Result<BoundReport, BoundsError> {
    check_columns(n)?;
    let t = grid2_target(n);
    Ok(BoundReport {
        parameter: format!("adim(P2xP{n})"),
        lower: t - 1,
        upper: t,
        exact: None,
        sources: vec!["2block".into()],
    })
}

/// Adjacency dimension of `P_3 □ P_n` lies in `[target - 1, target]`.
pub fn grid3_bounds(n: u64) -> Result<BoundReport, BoundsError> {
    check_columns(n)?;
    let t = grid3_target(n);
    Ok(BoundReport {
        parameter: format!("adim(P3xP{n})"),
        lower: t - 1,
        upper: t,
        exact: None,
        sources: vec!["3block".into()],
    })
}

/// Exact LD, adim and bdim of one graph and the bounds tying them together.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Sandwich {
    pub ld: SolveResult,
    pub adim: SolveResult,
    pub bdim: SolveResult,
    /// `LD - 1 <= adim <= LD`, with the exact adim.
    pub report: BoundReport,
}

/// Solves LD, adim and bdim exactly and checks `LD - 1 <= adim <= LD` and
/// `bdim <= adim <= n`. A violation means a solver bug and is returned as
/// [`BoundsError::Inconsistent`].
pub fn check_sandwich(solver: &Solver, g: &Graph) -> Result<Sandwich, BoundsError> {
    let ld = solver.locating_dominating(g)?;
    let adim = solver.adjacency_dimension(g)?;
    let bdim = solver.broadcast_dimension(g, None)?;
    let report = BoundReport {
        parameter: "adim".into(),
        lower: ld.value.saturating_sub(1),
        upper: ld.value,
        exact: Some(adim.value),
        sources: vec!["boundprop".into(), "bdim<=adim<=n".into()],
    };
    if !report.holds() {
        return Err(BoundsError::Inconsistent(format!(
            "LD = {}, adim = {}",
            ld.value, adim.value
        )));
    }
    if bdim.value > adim.value || adim.value > g.order() as u64 {
        return Err(BoundsError::Inconsistent(format!(
            "bdim = {}, adim = {}, n = {}",
            bdim.value,
            adim.value,
            g.order()
        )));
    }
    Ok(Sandwich {
        ld,
        adim,
        bdim,
        report,
    })
}
