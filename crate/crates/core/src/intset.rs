//! Canonical finite integer sets.
//!
//! An [`IntSet`] is a strictly increasing sequence of `i64`. Every arithmetic
//! operation is checked and reports [`Error::Overflow`] instead of wrapping.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite set of integers stored as a strictly increasing sequence.
///
/// The empty set is representable; operations that need a nonempty set
/// return [`Error::EmptySet`].
#[derive(Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct IntSet {
    elems: Vec<i64>,
}

impl IntSet {
    pub fn empty() -> Self {
        IntSet { elems: Vec::new() }
    }

    pub fn singleton(a: i64) -> Self {
        IntSet { elems: vec![a] }
    }

    /// The interval of integers `[u, v]`; empty when `u > v`.
    pub fn interval(u: i64, v: i64) -> Self {
        IntSet { elems: (u..=v).collect() }
    }

    /// Wraps a vector that is already strictly increasing.
    pub(crate) fn from_sorted_unchecked(elems: Vec<i64>) -> Self {
        debug_assert!(elems.windows(2).all(|w| w[0] < w[1]));
        IntSet { elems }
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn min(&self) -> Option<i64> {
        self.elems.first().copied()
    }

    pub fn max(&self) -> Option<i64> {
        self.elems.last().copied()
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.elems
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = i64> + ExactSizeIterator + '_ {
        self.elems.iter().copied()
    }

    pub fn contains(&self, x: i64) -> bool {
        self.elems.binary_search(&x).is_ok()
    }

    /// `(min, max)` of a nonempty set.
    pub fn bounds(&self) -> Result<(i64, i64)> {
        match (self.min(), self.max()) {
            (Some(lo), Some(hi)) => Ok((lo, hi)),
            _ => Err(Error::EmptySet),
        }
    }

    pub fn is_subset(&self, other: &IntSet) -> bool {
        let mut it = other.elems.iter().peekable();
        'outer: for &x in &self.elems {
            while let Some(&&y) = it.peek() {
                match y.cmp(&x) {
                    std::cmp::Ordering::Less => {
                        it.next();
                    }
                    std::cmp::Ordering::Equal => {
                        it.next();
                        continue 'outer;
                    }
                    std::cmp::Ordering::Greater => return false,
                }
            }
            return false;
        }
        true
    }

    pub fn union(&self, other: &IntSet) -> IntSet {
        let mut elems = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.len() && j < other.len() {
            let (a, b) = (self.elems[i], other.elems[j]);
            if a < b {
                elems.push(a);
                i += 1;
            } else if b < a {
                elems.push(b);
                j += 1;
            } else {
                elems.push(a);
                i += 1;
                j += 1;
            }
        }
        elems.extend_from_slice(&self.elems[i..]);
        elems.extend_from_slice(&other.elems[j..]);
        IntSet { elems }
    }

    /// Elements of `self` lying in `[lo, hi]`.
    pub fn restrict(&self, lo: i64, hi: i64) -> IntSet {
        let start = self.elems.partition_point(|&x| x < lo);
        let end = self.elems.partition_point(|&x| x <= hi);
        IntSet { elems: self.elems[start..end.max(start)].to_vec() }
    }

    /// `y + A`.
    pub fn translate(&self, y: i64) -> Result<IntSet> {
        let elems = self
            .elems
            .iter()
            .map(|&a| a.checked_add(y).ok_or(Error::Overflow("translate")))
            .collect::<Result<Vec<_>>>()?;
        Ok(IntSet { elems })
    }

    /// `d * A = {d a : a in A}`.
    pub fn dilate(&self, d: i64) -> Result<IntSet> {
        let mut elems = self
            .elems
            .iter()
            .map(|&a| a.checked_mul(d).ok_or(Error::Overflow("dilate")))
            .collect::<Result<Vec<_>>>()?;
        match d.signum() {
            0 => elems.truncate(1),
            -1 => elems.reverse(),
            _ => {}
        }
        Ok(IntSet { elems })
    }

    /// `c - A`.
    pub fn reflect(&self, c: i64) -> Result<IntSet> {
        let elems = self
            .elems
            .iter()
            .rev()
            .map(|&a| c.checked_sub(a).ok_or(Error::Overflow("reflect")))
            .collect::<Result<Vec<_>>>()?;
        Ok(IntSet { elems })
    }

    /// True when all consecutive differences agree. Sets with at most two
    /// elements are degenerate progressions.
    pub fn is_arithmetic_progression(&self) -> bool {
        match self.elems.as_slice() {
            [] | [_] | [_, _] => true,
            [a, b, rest @ ..] => {
                let diff = b - a;
                let mut prev = *b;
                rest.iter().all(|&x| {
                    let ok = x - prev == diff;
                    prev = x;
                    ok
                })
            }
        }
    }

    /// Maximal subintervals `[u, v]` in increasing order.
    pub fn runs(&self) -> Runs<'_> {
        Runs { elems: &self.elems, pos: 0 }
    }

    /// Comma-separated literal form, e.g. `0,3,5`.
    pub fn literal(&self) -> String {
        let parts: Vec<String> = self.elems.iter().map(i64::to_string).collect();
        parts.join(",")
    }
}

/// Iterator over the maximal subintervals of an [`IntSet`].
pub struct Runs<'a> {
    elems: &'a [i64],
    pos: usize,
}

impl Iterator for Runs<'_> {
    type Item = (i64, i64);

    fn next(&mut self) -> Option<(i64, i64)> {
        let start = *self.elems.get(self.pos)?;
        let mut end = start;
        self.pos += 1;
        while let Some(&x) = self.elems.get(self.pos) {
            if end.checked_add(1) != Some(x) {
                break;
            }
            end = x;
            self.pos += 1;
        }
        Some((start, end))
    }
}

impl TryFrom<Vec<i64>> for IntSet {
    type Error = Error;

    /// Sorts the input; duplicates are rejected.
    fn try_from(mut elems: Vec<i64>) -> Result<Self> {
        elems.sort_unstable();
        if let Some(w) = elems.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Parse(format!("duplicate element {}", w[0])));
        }
        Ok(IntSet { elems })
    }
}

impl From<IntSet> for Vec<i64> {
    fn from(set: IntSet) -> Vec<i64> {
        set.elems
    }
}

impl FromIterator<i64> for IntSet {
    /// Collects, sorts and deduplicates.
    fn from_iter<I: IntoIterator<Item = i64>>(iter: I) -> Self {
        let mut elems: Vec<i64> = iter.into_iter().collect();
        elems.sort_unstable();
        elems.dedup();
        IntSet { elems }
    }
}

impl<const N: usize> From<[i64; N]> for IntSet {
    fn from(arr: [i64; N]) -> Self {
        arr.into_iter().collect()
    }
}

impl FromStr for IntSet {
    type Err = Error;

    /// Parses `"0,3,5"`. Order does not matter; duplicates and empty input
    /// are rejected.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty set literal".into()));
        }
        let elems = s
            .split(',')
            .map(|tok| {
                let tok = tok.trim();
                tok.parse::<i64>()
                    .map_err(|e| Error::Parse(format!("{tok:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        IntSet::try_from(elems)
    }
}

impl fmt::Debug for IntSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.elems.iter()).finish()
    }
}

impl fmt::Display for IntSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.literal().replace(',', ", "))
    }
}

impl<'a> IntoIterator for &'a IntSet {
    type Item = i64;
    type IntoIter = std::iter::Copied<std::slice::Iter<'a, i64>>;

    fn into_iter(self) -> Self::IntoIter {
        self.elems.iter().copied()
    }
}

/// A set written as `d * reduced + a0` with `min(reduced) = 0` and
/// `gcd(reduced) = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormalizedSet {
    pub a0: i64,
    /// Always positive; 1 for singletons.
    pub d: i64,
    pub reduced: IntSet,
    pub astar: i64,
}

impl NormalizedSet {
    /// Reconstructs `d * reduced + a0`.
    pub fn denormalize(&self) -> Result<IntSet> {
        self.reduced.dilate(self.d)?.translate(self.a0)
    }
}

/// Translates `a` to minimum zero and divides out the gcd of the differences.
pub fn normalize(a: &IntSet) -> Result<NormalizedSet> {
    let (a0, _) = a.bounds()?;
    let shifted = a
        .iter()
        .map(|x| x.checked_sub(a0).ok_or(Error::Overflow("normalize")))
        .collect::<Result<Vec<_>>>()?;
    let d = shifted.iter().fold(0i64, |g, &x| g.gcd(&x));
    let d = if d == 0 { 1 } else { d };
    let reduced = IntSet::from_sorted_unchecked(shifted.into_iter().map(|x| x / d).collect());
    let astar = reduced.max().unwrap_or(0);
    Ok(NormalizedSet { a0, d, reduced, astar })
}
