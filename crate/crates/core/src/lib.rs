//! Sumsets of finite integer sets and covering certificates for
//! approximate groups.
//!
//! A nonempty set `A` is an `(r, ell)`-approximate group when some `X` with
//! `|X| <= ell` satisfies `rA ⊆ X + A`. The crate computes h-fold sumsets,
//! detects the eventual "fringe, interval, fringe" shape of `hA`, searches
//! for minimum certificates, and builds the closed-form `(r, r + 1)`
//! certificates that every finite set admits for large `h`.

mod bitset;
pub mod cli;
pub mod construct;
pub mod cover;
pub mod error;
pub mod intset;
pub mod structure;
pub mod sumset;

pub use construct::{
    asymptotic_cert, linear_translates, transfer_dilate, transfer_downgrade, transfer_translate,
    x_ap_r2, x_linear, x_pair_r3, x_singleton, AsymptoticPlan, LinearPattern,
};
pub use cover::{
    classify_small_ell, greedy_cover, minimal_cover, verify, Certificate, SmallEllBranch,
    SmallEllClassification,
};
pub use error::{Error, Result};
pub use intset::{normalize, IntSet, NormalizedSet};
pub use structure::{decompose, find_stabilization, StabilizationReport, SumsetStructure, SweepParams};
pub use sumset::{add, card_lower_bound, hfold, SumsetSequence};
