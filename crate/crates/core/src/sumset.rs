//! Exact pairwise and h-fold sumsets.
//!
//! The kernel is a shift-or over a dense occupancy map spanning
//! `[min A + min B, max A + max B]`: for every `b` in the smaller operand the
//! occupancy of the larger one is OR-ed in at offset `b - min B`. Very sparse
//! operands fall back to sorting the pairwise sums.

use crate::bitset::Occupancy;
use crate::error::{Error, Result};
use crate::intset::IntSet;

/// Dense maps larger than this many bits are never allocated.
const DENSE_MAX_BITS: u128 = 1 << 30;

/// `A + B = {a + b : a in A, b in B}`.
pub fn add(a: &IntSet, b: &IntSet) -> Result<IntSet> {
    let (amin, amax) = a.bounds()?;
    let (bmin, bmax) = b.bounds()?;
    let lo = amin.checked_add(bmin).ok_or(Error::Overflow("sumset"))?;
    amax.checked_add(bmax).ok_or(Error::Overflow("sumset"))?;

    let (wide, narrow) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let span = (amax as i128 - amin as i128) + (bmax as i128 - bmin as i128) + 1;
    let span = span as u128;
    let pairs = (a.len() as u128) * (b.len() as u128);
    if span > DENSE_MAX_BITS || span / 64 > pairs.saturating_mul(4) {
        return Ok(add_sparse(wide, narrow));
    }

    let (wmin, wmax) = wide.bounds()?;
    let (nmin, _) = narrow.bounds()?;
    let src = Occupancy::from_set(wide, wmin, (wmax - wmin) as usize + 1);
    let mut out = Occupancy::zeros(lo, span as usize);
    for x in narrow {
        out.or_shifted(&src, (x - nmin) as usize);
    }
    Ok(out.to_set())
}

// Overflow has been ruled out by the caller's endpoint checks.
fn add_sparse(a: &IntSet, b: &IntSet) -> IntSet {
    let mut sums = Vec::with_capacity(a.len() * b.len());
    for x in a {
        sums.extend(b.iter().map(|y| x + y));
    }
    sums.into_iter().collect()
}

/// The h-fold sumset `hA`, for `h >= 1`.
pub fn hfold(a: &IntSet, h: u32) -> Result<IntSet> {
    if h == 0 {
        return Err(Error::PreconditionViolated("h-fold sumset needs h >= 1".into()));
    }
    let mut acc = a.clone();
    a.bounds()?;
    for _ in 1..h {
        acc = add(&acc, a)?;
    }
    Ok(acc)
}

/// Lower bound `r|A| - r + 1` on `|rA|`, attained exactly by arithmetic
/// progressions.
pub fn card_lower_bound(size: usize, r: u32) -> u64 {
    let size = size as u64;
    (r as u64).saturating_mul(size.saturating_sub(1)).saturating_add(1)
}

/// Lazily extended cache of `A, 2A, 3A, ...`.
///
/// Each step reuses the previous entry, so sweeping `h` upward costs one
/// pairwise sumset per step. Mutating access keeps the cache confined to one
/// owner.
#[derive(Clone, Debug)]
pub struct SumsetSequence {
    base: IntSet,
    cached: Vec<IntSet>,
}

impl SumsetSequence {
    pub fn new(base: IntSet) -> Result<Self> {
        base.bounds()?;
        Ok(SumsetSequence { cached: vec![base.clone()], base })
    }

    pub fn base(&self) -> &IntSet {
        &self.base
    }

    /// Number of folds computed so far.
    pub fn computed(&self) -> u32 {
        self.cached.len() as u32
    }

    /// `hA`, extending the cache as needed.
    pub fn get(&mut self, h: u32) -> Result<&IntSet> {
        if h == 0 {
            return Err(Error::PreconditionViolated("h-fold sumset needs h >= 1".into()));
        }
        while self.cached.len() < h as usize {
            let next = add(self.cached.last().expect("cache is never empty"), &self.base)?;
            self.cached.push(next);
        }
        Ok(&self.cached[h as usize - 1])
    }
}

/// Streams `(h, hA)` for `h = 1, 2, ...` without retaining earlier folds.
pub fn hfold_iter(a: &IntSet) -> HFoldIter {
    HFoldIter { base: a.clone(), current: None, h: 0 }
}

pub struct HFoldIter {
    base: IntSet,
    current: Option<IntSet>,
    h: u32,
}

impl Iterator for HFoldIter {
    type Item = Result<(u32, IntSet)>;

    fn next(&mut self) -> Option<Self::Item> {
        let next = match &self.current {
            None => {
                if self.base.is_empty() {
                    return Some(Err(Error::EmptySet));
                }
                Ok(self.base.clone())
            }
            Some(prev) => add(prev, &self.base),
        };
        match next {
            Ok(set) => {
                self.h = self.h.checked_add(1)?;
                self.current = Some(set.clone());
                Some(Ok((self.h, set)))
            }
            Err(e) => Some(Err(e)),
        }
    }
}
