//! Eventual structure of `hA` for a normalized set `A`.
//!
//! For large `h` the sumset splits into a bounded left fringe `C_set`, a long
//! middle interval `[C, h a* - D]`, and a reflected right fringe
//! `h a* - D_set`. [`decompose`] reads this split off a single sumset and
//! [`find_stabilization`] sweeps `h` until the constants stop moving.
//!
//! The stabilization point found here is empirical: the constants are
//! observed to hold over a window of consecutive `h`, not proven to hold
//! beyond it.
//!
//! Both fringes are bounded relative to their own constant, `C_set` by
//! `[0, C - 2]` and `D_set` by `[0, D - 2]`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::intset::{IntSet, NormalizedSet};
use crate::sumset::hfold_iter;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SumsetStructure {
    pub h: u32,
    pub astar: i64,
    /// Left endpoint of the middle interval.
    pub c: i64,
    /// Distance from the right endpoint of the middle interval to `h a*`.
    pub d: i64,
    pub c_set: IntSet,
    pub d_set: IntSet,
}

impl SumsetStructure {
    /// `h a*`, the maximum of the decomposed sumset.
    pub fn top(&self) -> i64 {
        self.h as i64 * self.astar
    }

    /// The middle interval `[C, h a* - D]`.
    pub fn middle(&self) -> (i64, i64) {
        (self.c, self.top() - self.d)
    }

    /// Whether `C`, `D` and both fringes agree, ignoring `h`.
    pub fn same_constants(&self, other: &SumsetStructure) -> bool {
        self.c == other.c && self.d == other.d && self.c_set == other.c_set && self.d_set == other.d_set
    }

    /// `C_set ∪ [C, h a* - D] ∪ (h a* - D_set)`.
    pub fn reconstruct(&self) -> Result<IntSet> {
        let (u, v) = self.middle();
        let right = self.d_set.reflect(self.top())?;
        Ok(self.c_set.union(&IntSet::interval(u, v)).union(&right))
    }
}

/// Splits `s = hA` (for a normalized `A` with maximum `astar`) around its
/// unique longest maximal subinterval.
///
/// Ties for the longest subinterval mean the structure has not emerged yet
/// and yield [`Error::AmbiguousStructure`].
pub fn decompose(s: &IntSet, h: u32, astar: i64) -> Result<SumsetStructure> {
    if h == 0 || astar <= 0 {
        return Err(Error::PreconditionViolated(format!(
            "decompose needs h >= 1 and a* >= 1, got h = {h}, a* = {astar}"
        )));
    }
    let top = (h as i64).checked_mul(astar).ok_or(Error::Overflow("h a*"))?;
    if s.min() != Some(0) || s.max() != Some(top) {
        return Err(Error::PreconditionViolated(format!(
            "expected a sumset spanning [0, {top}], got min {:?} max {:?}",
            s.min(),
            s.max()
        )));
    }

    let mut best = (0i64, 0i64);
    let mut best_len = -1i64;
    let mut ties = 0usize;
    for (u, v) in s.runs() {
        let len = v - u;
        if len > best_len {
            best = (u, v);
            best_len = len;
            ties = 1;
        } else if len == best_len {
            ties += 1;
        }
    }
    if ties > 1 {
        return Err(Error::AmbiguousStructure { h, length: best_len as u64 + 1, count: ties });
    }

    let (u, v) = best;
    Ok(SumsetStructure {
        h,
        astar,
        c: u,
        d: top - v,
        c_set: s.restrict(0, u - 1),
        d_set: s.restrict(v + 1, top).reflect(top)?,
    })
}

/// Sweep limits for [`find_stabilization`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepParams {
    /// Consecutive values of `h` over which the constants must agree.
    pub window: u32,
    /// Largest `h` examined.
    pub hmax: u32,
}

impl SweepParams {
    /// `window = max(a*, 4)` and `hmax = 50 a*^2`.
    pub fn defaults_for(astar: i64) -> Self {
        let a = astar.clamp(1, u32::MAX as i64) as u32;
        SweepParams { window: a.max(4), hmax: a.saturating_mul(a).saturating_mul(50) }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StabilizationReport {
    /// First `h` of the stable run. Observed, not proven.
    pub h0_empirical: u32,
    pub window: u32,
    /// Decomposition at `h0_empirical`.
    pub structure: SumsetStructure,
    /// Decompositions at `h0_empirical .. h0_empirical + window`.
    pub per_h: Vec<SumsetStructure>,
}

/// One step of a structure sweep.
#[derive(Clone, Debug)]
pub struct SweepStep {
    pub h: u32,
    pub sumset: IntSet,
    /// `None` when the longest maximal subinterval is not unique.
    pub structure: Option<SumsetStructure>,
}

/// Yields `hA` and its decomposition for `h = 1, 2, ...`.
pub fn sweep(n: &NormalizedSet) -> impl Iterator<Item = Result<SweepStep>> + '_ {
    let astar = n.astar;
    hfold_iter(&n.reduced).map(move |item| {
        let (h, sumset) = item?;
        let structure = match decompose(&sumset, h, astar) {
            Ok(s) => Some(s),
            Err(Error::AmbiguousStructure { .. }) => None,
            Err(e) => return Err(e),
        };
        Ok(SweepStep { h, sumset, structure })
    })
}

/// Finds the first `h` from which the decomposition constants agree for
/// `params.window` consecutive folds.
pub fn find_stabilization(n: &NormalizedSet, params: SweepParams) -> Result<StabilizationReport> {
    if n.reduced.len() < 2 {
        return Err(Error::PreconditionViolated("structure sweep needs |A| >= 2".into()));
    }
    if params.window < 2 {
        return Err(Error::PreconditionViolated("stabilization window must be >= 2".into()));
    }
    let mut run: Vec<SumsetStructure> = Vec::with_capacity(params.window as usize);
    for step in sweep(n) {
        let step = step?;
        if step.h > params.hmax {
            break;
        }
        match step.structure {
            Some(st) => {
                if !run.last().is_some_and(|prev| prev.same_constants(&st)) {
                    run.clear();
                }
                run.push(st);
            }
            None => run.clear(),
        }
        if run.len() == params.window as usize {
            return Ok(StabilizationReport {
                h0_empirical: run[0].h,
                window: params.window,
                structure: run[0].clone(),
                per_h: run,
            });
        }
    }
    Err(Error::NoStabilization { window: params.window, hmax: params.hmax })
}
