//! Covering certificates `rA ⊆ X + A`, checked and searched exactly.
//!
//! Exact search only ever uses translates `x ∈ rA - A`: a translate `x + A`
//! that misses `rA` cannot help cover it, so every minimum cover can be
//! rewritten with such translates. This does not mean every valid `X` lies in
//! `rA - A`; larger certificates may carry useless elements anywhere.

use serde::{Deserialize, Serialize};

use crate::construct::{x_ap_r2, x_pair_r3, x_singleton};
use crate::error::{Error, Result};
use crate::intset::IntSet;
use crate::sumset::{add, hfold};

/// A witness `X` that `r (hA) ⊆ X + hA`, where `hA` is the `fold`-fold
/// sumset of `base` (`fold = 1` certifies `base` itself).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub r: u32,
    pub ell: usize,
    pub x: IntSet,
    /// Set only by recomputing the containment.
    pub verified: bool,
    pub base: IntSet,
    pub fold: u32,
}

impl Certificate {
    /// Builds a certificate for `fold * base` and checks it.
    pub fn check(base: IntSet, fold: u32, r: u32, ell: usize, x: IntSet) -> Result<Certificate> {
        check_size(&x, ell)?;
        let folds = fold.checked_mul(r).ok_or(Error::Overflow("fold count"))?;
        let verified = covers(&hfold(&base, folds)?, &x, &hfold(&base, fold)?)?;
        Ok(Certificate { r, ell, x, verified, base, fold })
    }

    /// Like [`check`](Self::check) with `hA` and `(rh)A` already computed.
    pub(crate) fn check_with(
        base: IntSet,
        fold: u32,
        r: u32,
        ell: usize,
        x: IntSet,
        sumset: &IntSet,
        target: &IntSet,
    ) -> Result<Certificate> {
        check_size(&x, ell)?;
        let verified = covers(target, &x, sumset)?;
        Ok(Certificate { r, ell, x, verified, base, fold })
    }

    /// The set whose approximate-group property is witnessed.
    pub fn certified_set(&self) -> Result<IntSet> {
        hfold(&self.base, self.fold)
    }

    /// Recomputes the containment from scratch.
    pub fn recheck(&self) -> Result<bool> {
        Ok(self.x.len() <= self.ell && verify(&self.certified_set()?, self.r, &self.x)?)
    }
}

fn check_size(x: &IntSet, ell: usize) -> Result<()> {
    if x.len() > ell {
        return Err(Error::PreconditionViolated(format!(
            "certificate has {} translates but ell = {ell}",
            x.len()
        )));
    }
    Ok(())
}

/// `target ⊆ x + a`.
fn covers(target: &IntSet, x: &IntSet, a: &IntSet) -> Result<bool> {
    Ok(target.is_subset(&add(x, a)?))
}

/// Whether `rA ⊆ X + A`.
pub fn verify(a: &IntSet, r: u32, x: &IntSet) -> Result<bool> {
    if r == 0 {
        return Err(Error::PreconditionViolated("verify needs r >= 1".into()));
    }
    covers(&hfold(a, r)?, x, a)
}

fn require_r(r: u32) -> Result<()> {
    if r < 2 {
        return Err(Error::PreconditionViolated(format!("certificates need r >= 2, got {r}")));
    }
    Ok(())
}

/// Set-cover instance over the universe `rA` with candidate translates
/// `rA - A`, in increasing order.
struct CoverInstance {
    target: IntSet,
    candidates: Vec<i64>,
    words: usize,
    masks: Vec<u64>,
    amin: i64,
    asize: usize,
}

impl CoverInstance {
    fn new(a: &IntSet, r: u32) -> Result<Self> {
        let (amin, _) = a.bounds()?;
        let target = hfold(a, r)?;
        let candidates: Vec<i64> = add(&target, &a.reflect(0)?)?.iter().collect();
        let words = target.len().div_ceil(64);
        let mut masks = vec![0u64; words * candidates.len()];
        for (ci, &x) in candidates.iter().enumerate() {
            let row = &mut masks[ci * words..(ci + 1) * words];
            for y in a {
                // x + y cannot overflow: x >= r min A - max A and x + y <= r max A.
                if let Ok(pos) = target.as_slice().binary_search(&(x + y)) {
                    row[pos / 64] |= 1 << (pos % 64);
                }
            }
        }
        Ok(CoverInstance { target, candidates, words, masks, amin, asize: a.len() })
    }

    fn mask(&self, ci: usize) -> &[u64] {
        &self.masks[ci * self.words..(ci + 1) * self.words]
    }

    fn first_uncovered(&self, covered: &[u64]) -> Option<usize> {
        covered.iter().enumerate().find_map(|(i, &w)| {
            let pos = i * 64 + (!w).trailing_zeros() as usize;
            (w != u64::MAX && pos < self.target.len()).then_some(pos)
        })
    }

    fn uncovered_count(&self, covered: &[u64]) -> usize {
        self.target.len() - covered.iter().map(|w| w.count_ones() as usize).sum::<usize>()
    }

    /// Candidate indices whose translate covers target position `pos`.
    fn covering(&self, pos: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.candidates.len()).filter(move |&ci| self.mask(ci)[pos / 64] >> (pos % 64) & 1 == 1)
    }

    /// Whether at most `budget` translates can cover what is left.
    /// Branches on the translates covering the first uncovered element.
    fn feasible(&self, covered: &mut Vec<u64>, budget: usize) -> bool {
        let Some(pos) = self.first_uncovered(covered) else {
            return true;
        };
        if budget == 0 || self.uncovered_count(covered) > budget * self.asize {
            return false;
        }
        let options: Vec<usize> = self.covering(pos).collect();
        for ci in options {
            let saved = covered.clone();
            or_into(covered, self.mask(ci));
            if self.feasible(covered, budget - 1) {
                return true;
            }
            *covered = saved;
        }
        false
    }

    /// Lexicographically smallest cover of size at most `budget`, with
    /// candidates taken in increasing order starting at index `start`.
    fn lex_search(&self, covered: &[u64], budget: usize, start: usize, chosen: &mut Vec<usize>) -> bool {
        let Some(pos) = self.first_uncovered(covered) else {
            return true;
        };
        if budget == 0 || self.uncovered_count(covered) > budget * self.asize {
            return false;
        }
        // Later picks are larger, so the first uncovered element must be
        // covered by a translate no larger than `target[pos] - min A`.
        let limit = self.target.as_slice()[pos] - self.amin;
        for ci in start..self.candidates.len() {
            if self.candidates[ci] > limit {
                break;
            }
            let mut next = covered.to_vec();
            or_into(&mut next, self.mask(ci));
            chosen.push(ci);
            if self.lex_search(&next, budget - 1, ci + 1, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }
}

fn or_into(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d |= s;
    }
}

/// Smallest `|rA| / |A|` rounded up: no fewer translates can cover `rA`.
pub fn cardinality_floor(target_len: usize, set_len: usize) -> usize {
    target_len.div_ceil(set_len.max(1)).max(1)
}

/// A minimum-size certificate with `|X| <= ell_max`, or `None` if none exists.
///
/// Among minimum covers the lexicographically smallest `X` is returned.
pub fn minimal_cover(a: &IntSet, r: u32, ell_max: usize) -> Result<Option<Certificate>> {
    require_r(r)?;
    let inst = CoverInstance::new(a, r)?;
    let floor = cardinality_floor(inst.target.len(), a.len());
    for ell in floor..=ell_max {
        let mut covered = vec![0u64; inst.words];
        if !inst.feasible(&mut covered, ell) {
            continue;
        }
        let mut chosen = Vec::with_capacity(ell);
        let found = inst.lex_search(&vec![0u64; inst.words], ell, 0, &mut chosen);
        debug_assert!(found);
        let x = IntSet::from_sorted_unchecked(chosen.iter().map(|&ci| inst.candidates[ci]).collect());
        return Certificate::check(a.clone(), 1, r, ell, x).map(Some);
    }
    Ok(None)
}

/// Greedy max-coverage certificate: repeatedly takes the translate covering
/// the most uncovered elements, smallest translate on ties.
pub fn greedy_cover(a: &IntSet, r: u32) -> Result<Certificate> {
    require_r(r)?;
    let inst = CoverInstance::new(a, r)?;
    let mut covered = vec![0u64; inst.words];
    let mut chosen = Vec::new();
    while inst.first_uncovered(&covered).is_some() {
        let (best, _) = (0..inst.candidates.len())
            .map(|ci| {
                let gain: u32 = inst.mask(ci).iter().zip(&covered).map(|(m, c)| (m & !c).count_ones()).sum();
                (ci, gain)
            })
            .max_by(|(i, g), (j, h)| g.cmp(h).then(j.cmp(i)))
            .expect("rA - A is nonempty");
        or_into(&mut covered, inst.mask(best));
        chosen.push(inst.candidates[best]);
    }
    let x: IntSet = chosen.into_iter().collect();
    let ell = x.len();
    Certificate::check(a.clone(), 1, r, ell, x)
}

/// Which closed form witnesses an `(r, 2)` certificate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SmallEllBranch {
    /// `|A| = 1`, already `(r, 1)`.
    Singleton,
    /// `r = 2` and `A` is an arithmetic progression.
    ArithmeticProgression,
    /// `r = 3` and `|A| = 2`.
    Pair,
}

/// Whether `A` is an `(r, 1)` and an `(r, 2)` approximate group, decided by
/// the closed-form characterizations rather than by search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SmallEllClassification {
    pub r: u32,
    pub ell1: Option<IntSet>,
    pub ell2: Option<(SmallEllBranch, IntSet)>,
}

/// `(r, 1)` holds iff `|A| = 1`; for `|A| >= 2`, `(r, 2)` holds iff
/// `r = 2` and `A` is an arithmetic progression, or `r = 3` and `|A| = 2`.
pub fn classify_small_ell(a: &IntSet, r: u32) -> Result<SmallEllClassification> {
    require_r(r)?;
    let (lo, hi) = a.bounds()?;
    if a.len() == 1 {
        let x = x_singleton(lo, r)?;
        return Ok(SmallEllClassification { r, ell1: Some(x.clone()), ell2: Some((SmallEllBranch::Singleton, x)) });
    }
    let ell2 = match r {
        2 if a.is_arithmetic_progression() => {
            let s = a.as_slice();
            let k = a.len() as u32;
            Some((SmallEllBranch::ArithmeticProgression, x_ap_r2(lo, s[1] - s[0], k)?))
        }
        3 if a.len() == 2 => Some((SmallEllBranch::Pair, x_pair_r3(lo, hi)?)),
        _ => None,
    };
    Ok(SmallEllClassification { r, ell1: None, ell2 })
}
