//! Closed-form certificates and the maps that carry certificates between
//! related sets.

use std::collections::BTreeMap;
use std::ops::RangeInclusive;

use serde::{Deserialize, Serialize};

use crate::cover::Certificate;
use crate::error::{Error, Result};
use crate::intset::{normalize, IntSet, NormalizedSet};
use crate::structure::{find_stabilization, StabilizationReport, SweepParams};
use crate::sumset::hfold_iter;

fn mul(a: i64, b: i64) -> Result<i64> {
    a.checked_mul(b).ok_or(Error::Overflow("certificate construction"))
}

fn sum(a: i64, b: i64) -> Result<i64> {
    a.checked_add(b).ok_or(Error::Overflow("certificate construction"))
}

/// `{(r - 1) a0}`, which covers `r{a0}` with one translate.
pub fn x_singleton(a0: i64, r: u32) -> Result<IntSet> {
    if r == 0 {
        return Err(Error::PreconditionViolated("r >= 1 required".into()));
    }
    Ok(IntSet::singleton(mul(r as i64 - 1, a0)?))
}

/// `{2 a0, 2 a1}`, a two-translate cover of `3{a0, a1}`.
pub fn x_pair_r3(a0: i64, a1: i64) -> Result<IntSet> {
    if a0 >= a1 {
        return Err(Error::PreconditionViolated(format!("pair needs a0 < a1, got {a0}, {a1}")));
    }
    Ok(IntSet::from_sorted_unchecked(vec![mul(2, a0)?, mul(2, a1)?]))
}

/// Two-translate cover of `2A` for the progression `A = {a0 + i d : i < k}`.
///
/// The translates `a0 + A` and `a0 + k d + A` cover the lower and upper
/// halves of `2A`, so `X = {a0, a0 + k d}`. The variant `{a0 + d, a0 + k d}`
/// misses `2 a0` and never covers.
pub fn x_ap_r2(a0: i64, d: i64, k: u32) -> Result<IntSet> {
    if d < 1 || k < 2 {
        return Err(Error::PreconditionViolated(format!(
            "progression needs d >= 1 and k >= 2, got d = {d}, k = {k}"
        )));
    }
    Ok(IntSet::from_sorted_unchecked(vec![a0, sum(a0, mul(k as i64, d)?)?]))
}

/// Sets `A` with `{u0, v0} ∪ [u, v] ⊆ A ⊆ [u0, v0]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinearPattern {
    pub u0: i64,
    pub u: i64,
    pub v: i64,
    pub v0: i64,
}

impl LinearPattern {
    pub fn new(u0: i64, u: i64, v: i64, v0: i64) -> Result<Self> {
        if !(u0 <= u && u <= v && v <= v0) {
            return Err(Error::PreconditionViolated(format!(
                "pattern needs u0 <= u <= v <= v0, got {u0}, {u}, {v}, {v0}"
            )));
        }
        Ok(LinearPattern { u0, u, v, v0 })
    }

    pub fn matches(&self, a: &IntSet) -> bool {
        a.min() == Some(self.u0)
            && a.max() == Some(self.v0)
            && a.restrict(self.u, self.v).len() as i64 == self.v - self.u + 1
    }

    /// Length `v - u + 1` of the guaranteed interval.
    pub fn block(&self) -> i64 {
        self.v - self.u + 1
    }

    /// `r (v0 - u0) + 1`, the number of integers in `[r u0, r v0]`.
    fn span(&self, r: u32) -> Result<i64> {
        sum(mul(r as i64, self.v0 - self.u0)?, 1)
    }

    /// Whether `ell (v - u + 1) >= r (v0 - u0) + 1`.
    pub fn admits(&self, r: u32, ell: u64) -> Result<bool> {
        let ell = i64::try_from(ell).map_err(|_| Error::Overflow("ell"))?;
        Ok(mul(ell, self.block())? >= self.span(r)?)
    }

    /// Least `ell` that [`admits`](Self::admits).
    pub fn min_ell(&self, r: u32) -> Result<u64> {
        let span = self.span(r)?;
        Ok(((span + self.block() - 1) / self.block()) as u64)
    }

    /// The interval `[r u0, r u0 + ell (v - u + 1) - 1]` tiled by
    /// `X_ell + [u, v]`.
    pub fn coverage(&self, r: u32, ell: u64) -> Result<(i64, i64)> {
        let lo = mul(r as i64, self.u0)?;
        let len = mul(i64::try_from(ell).map_err(|_| Error::Overflow("ell"))?, self.block())?;
        Ok((lo, sum(lo, len - 1)?))
    }
}

/// `{r u0 - u + i (v - u + 1) : 0 <= i < count}` with no check on `count`.
pub fn linear_translates(p: &LinearPattern, r: u32, count: u64) -> Result<IntSet> {
    let start = sum(mul(r as i64, p.u0)?, -p.u)?;
    let elems = (0..count)
        .map(|i| sum(start, mul(i as i64, p.block())?))
        .collect::<Result<Vec<_>>>()?;
    Ok(IntSet::from_sorted_unchecked(elems))
}

/// The `ell` translates of `[u, v]` tiling `[r u0, r v0]`; they cover `rA`
/// for every `A` matching `p`.
pub fn x_linear(p: &LinearPattern, r: u32, ell: u64) -> Result<IntSet> {
    if r < 2 {
        return Err(Error::PreconditionViolated(format!("r >= 2 required, got {r}")));
    }
    if !p.admits(r, ell)? {
        return Err(Error::PreconditionViolated(format!(
            "ell = {ell} is below the minimum {} for r = {r}",
            p.min_ell(r)?
        )));
    }
    linear_translates(p, r, ell)
}

/// A cover of `rA` moved to cover `r(y + A)`: `X + (r - 1) y`.
pub fn transfer_translate(x: &IntSet, y: i64, r: u32) -> Result<IntSet> {
    x.translate(mul(r as i64 - 1, y)?)
}

/// A cover of `rB` moved to cover `r(d * B + a0)`: `d * X + (r - 1) a0`.
pub fn transfer_dilate(x: &IntSet, d: i64, a0: i64, r: u32) -> Result<IntSet> {
    x.dilate(d)?.translate(mul(r as i64 - 1, a0)?)
}

/// A cover of `rA` turned into a cover of `r'A` for `r' < r`, using any
/// `a0 ∈ A`: `X - (r - r') a0`.
pub fn transfer_downgrade(x: &IntSet, r: u32, r_lower: u32, a0: i64) -> Result<IntSet> {
    if r_lower == 0 || r_lower >= r {
        return Err(Error::PreconditionViolated(format!("need 1 <= r' < r, got r' = {r_lower}, r = {r}")));
    }
    x.translate(mul(-(r as i64 - r_lower as i64), a0)?)
}

/// `ceil(num / den)` for `den > 0`, with nonpositive quotients mapped to 1.
fn ceil_positive(num: i64, den: i64) -> u32 {
    if num <= 0 {
        return 1;
    }
    let q = (num + den - 1) / den;
    q.clamp(1, u32::MAX as i64) as u32
}

/// Everything needed to emit `(r, r + 1)` certificates for `hA` once `h`
/// passes the threshold `h1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AsymptoticPlan {
    pub original: IntSet,
    pub normalized: NormalizedSet,
    pub stabilization: StabilizationReport,
    pub r: u32,
    /// `max(h0, ceil(((r + 1)(C + D) - r) / a*))`.
    pub h1: u32,
    /// `(r + 1)(C + D) - r`.
    pub h1_numerator: i64,
    /// `a*`.
    pub h1_denominator: i64,
    pub certificates: BTreeMap<u32, Certificate>,
}

impl AsymptoticPlan {
    /// Normalizes `a` and sweeps its sumsets. `params` defaults to
    /// [`SweepParams::defaults_for`] the reduced maximum.
    pub fn new(a: &IntSet, r: u32, params: Option<SweepParams>) -> Result<Self> {
        if r < 2 {
            return Err(Error::PreconditionViolated(format!("r >= 2 required, got {r}")));
        }
        let normalized = normalize(a)?;
        if normalized.reduced.len() < 2 {
            return Err(Error::PreconditionViolated("asymptotic plan needs |A| >= 2".into()));
        }
        let params = params.unwrap_or_else(|| SweepParams::defaults_for(normalized.astar));
        let stabilization = find_stabilization(&normalized, params)?;
        let st = &stabilization.structure;
        let h1_numerator = sum(mul(r as i64 + 1, sum(st.c, st.d)?)?, -(r as i64))?;
        let h1_denominator = normalized.astar;
        let h1 = stabilization.h0_empirical.max(ceil_positive(h1_numerator, h1_denominator));
        Ok(AsymptoticPlan {
            original: a.clone(),
            normalized,
            stabilization,
            r,
            h1,
            h1_numerator,
            h1_denominator,
            certificates: BTreeMap::new(),
        })
    }

    /// `{-C + i (h a* - C - D + 1) : 0 <= i <= r}`, covering `r (hA')` for
    /// the reduced set `A'`.
    pub fn normalized_x(&self, h: u32) -> Result<IntSet> {
        let st = &self.stabilization.structure;
        let top = mul(h as i64, self.normalized.astar)?;
        let step = sum(top, -sum(sum(st.c, st.d)?, -1)?)?;
        let elems = (0..=self.r as i64)
            .map(|i| sum(-st.c, mul(i, step)?))
            .collect::<Result<Vec<_>>>()?;
        Ok(IntSet::from_sorted_unchecked(elems))
    }

    /// The verified `(r, r + 1)` certificate for `hA` of the original set.
    pub fn certificate(&self, h: u32) -> Result<Certificate> {
        if h < self.h1 {
            return Err(Error::HBelowThreshold { h, h1: self.h1 });
        }
        let x = self.lifted_x(h)?;
        Certificate::check(self.original.clone(), h, self.r, self.r as usize + 1, x)
    }

    /// Certificates for every `h` in `hs` clamped up to `h1`, in increasing
    /// order.
    ///
    /// One incremental pass over `kA` supplies both `hA` and
    /// `r(hA) = (rh)A` for every requested `h`.
    pub fn certificates(&self, hs: RangeInclusive<u32>) -> Result<Vec<Certificate>> {
        let (from, to) = ((*hs.start()).max(self.h1), *hs.end());
        if from > to {
            return Ok(Vec::new());
        }
        let last = to.checked_mul(self.r).ok_or(Error::Overflow("fold count"))?;
        let mut pending: BTreeMap<u32, IntSet> = BTreeMap::new();
        let mut out = Vec::with_capacity((to - from + 1) as usize);
        for item in hfold_iter(&self.original) {
            let (k, sumset) = item?;
            if (from..=to).contains(&k) {
                pending.insert(k, sumset.clone());
            }
            if k % self.r == 0 {
                if let Some(h_set) = pending.remove(&(k / self.r)) {
                    let h = k / self.r;
                    let x = self.lifted_x(h)?;
                    let ell = self.r as usize + 1;
                    out.push(Certificate::check_with(self.original.clone(), h, self.r, ell, x, &h_set, &sumset)?);
                }
            }
            if k >= last {
                break;
            }
        }
        Ok(out)
    }

    fn lifted_x(&self, h: u32) -> Result<IntSet> {
        let n = &self.normalized;
        transfer_dilate(&self.normalized_x(h)?, n.d, mul(h as i64, n.a0)?, self.r)
    }

    /// Fills `certificates` for every `h` in `hs`, clamped up to `h1`.
    /// Returns the clamped range.
    pub fn populate(&mut self, hs: RangeInclusive<u32>) -> Result<RangeInclusive<u32>> {
        let range = (*hs.start()).max(self.h1)..=*hs.end();
        for cert in self.certificates(hs)? {
            self.certificates.insert(cert.fold, cert);
        }
        Ok(range)
    }
}

/// An `(r, r + 1)` certificate for `hA`.
///
/// Singletons get the one-translate certificate directly; otherwise the plan
/// is recomputed, so sweeps over `h` should reuse an [`AsymptoticPlan`].
pub fn asymptotic_cert(a: &IntSet, r: u32, h: u32) -> Result<Certificate> {
    if r < 2 {
        return Err(Error::PreconditionViolated(format!("r >= 2 required, got {r}")));
    }
    let (a0, _) = a.bounds()?;
    if a.len() == 1 {
        let x = x_singleton(mul(h as i64, a0)?, r)?;
        return Certificate::check(a.clone(), h, r, r as usize + 1, x);
    }
    AsymptoticPlan::new(a, r, None)?.certificate(h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cover::verify;

    fn set(xs: &[i64]) -> IntSet {
        xs.iter().copied().collect()
    }

    #[test]
    fn singleton_and_pair() {
        assert_eq!(x_singleton(0, 5).unwrap(), set(&[0]));
        assert_eq!(x_singleton(3, 2).unwrap(), set(&[3]));
        assert_eq!(x_singleton(-2, 4).unwrap(), set(&[-6]));
        assert!(verify(&set(&[-2]), 4, &set(&[-6])).unwrap());

        assert_eq!(x_pair_r3(0, 1).unwrap(), set(&[0, 2]));
        assert_eq!(x_pair_r3(4, 9).unwrap(), set(&[8, 18]));
        assert_eq!(x_pair_r3(-1, 1).unwrap(), set(&[-2, 2]));
        assert!(verify(&set(&[4, 9]), 3, &set(&[8, 18])).unwrap());
        assert!(x_pair_r3(2, 2).is_err());
    }

    #[test]
    fn progression_variants() {
        let a = set(&[0, 1, 2, 3]);
        assert!(verify(&a, 2, &set(&[0, 4])).unwrap());
        assert!(!verify(&a, 2, &set(&[1, 4])).unwrap());
        assert_eq!(x_ap_r2(0, 1, 4).unwrap(), set(&[0, 4]));
        let x = x_ap_r2(5, 3, 3).unwrap();
        assert_eq!(x, set(&[5, 14]));
        assert!(verify(&set(&[5, 8, 11]), 2, &x).unwrap());
        assert!(x_ap_r2(0, 0, 3).is_err());
        assert!(x_ap_r2(0, 1, 1).is_err());
    }

    #[test]
    fn linear_example() {
        let p = LinearPattern::new(0, 2, 5, 7).unwrap();
        assert_eq!(p.min_ell(2).unwrap(), 4);
        let x = x_linear(&p, 2, 4).unwrap();
        assert_eq!(x, set(&[-2, 2, 6, 10]));
        let a = set(&[0, 2, 3, 4, 5, 7]);
        assert!(p.matches(&a));
        assert!(verify(&a, 2, &x).unwrap());
        assert!(matches!(x_linear(&p, 2, 3), Err(Error::PreconditionViolated(_))));
        assert_eq!(p.coverage(2, 4).unwrap(), (0, 15));
    }

    #[test]
    fn linear_full_interval() {
        for v0 in 0..6 {
            let p = LinearPattern::new(0, 0, v0, v0).unwrap();
            let x = x_linear(&p, 2, 2).unwrap();
            assert_eq!(x, set(&[0, v0 + 1]));
            assert!(verify(&IntSet::interval(0, v0), 2, &x).unwrap());
        }
    }

    #[test]
    fn pattern_validation_and_matching() {
        assert!(LinearPattern::new(0, 3, 2, 7).is_err());
        let p = LinearPattern::new(-1, 1, 3, 6).unwrap();
        assert!(p.matches(&set(&[-1, 1, 2, 3, 6])));
        assert!(!p.matches(&set(&[-1, 1, 3, 6])));
        assert!(!p.matches(&set(&[-1, 1, 2, 3, 5])));
    }

    #[test]
    fn transfers() {
        assert_eq!(transfer_translate(&set(&[0, 3]), 1, 2).unwrap(), set(&[1, 4]));
        assert_eq!(transfer_translate(&set(&[0, 3]), 0, 5).unwrap(), set(&[0, 3]));
        assert_eq!(transfer_translate(&set(&[0, 2]), -1, 3).unwrap(), set(&[-2, 0]));
        assert_eq!(transfer_dilate(&set(&[0, 2]), 3, 5, 2).unwrap(), set(&[5, 11]));
        assert_eq!(transfer_dilate(&set(&[0, 2]), 1, 0, 4).unwrap(), set(&[0, 2]));
        assert_eq!(transfer_dilate(&set(&[0, 3]), 2, -1, 3).unwrap(), set(&[-2, 4]));
        assert_eq!(transfer_downgrade(&set(&[0, 3]), 3, 2, 1).unwrap(), set(&[-1, 2]));
        assert!(transfer_downgrade(&set(&[0]), 2, 2, 0).is_err());
    }

    #[test]
    fn threshold_rounding() {
        assert_eq!(ceil_positive(34, 5), 7);
        assert_eq!(ceil_positive(35, 5), 7);
        assert_eq!(ceil_positive(0, 5), 1);
        assert_eq!(ceil_positive(-3, 1), 1);
    }

    #[test]
    fn plan_for_zero_three_five() {
        let a = set(&[0, 3, 5]);
        let plan = AsymptoticPlan::new(&a, 2, None).unwrap();
        assert_eq!(plan.stabilization.h0_empirical, 3);
        assert_eq!((plan.h1_numerator, plan.h1_denominator, plan.h1), (34, 5, 7));
        assert_eq!(plan.normalized_x(7).unwrap(), set(&[-8, 16, 40]));
        let cert = plan.certificate(7).unwrap();
        assert!(cert.verified);
        assert_eq!(cert.x.len(), 3);
        assert_eq!(plan.certificate(6), Err(Error::HBelowThreshold { h: 6, h1: 7 }));
    }

    #[test]
    fn plan_for_interval() {
        for h in 1..5 {
            let cert = asymptotic_cert(&set(&[0, 1]), 3, h).unwrap();
            let step = h as i64 + 1;
            assert_eq!(cert.x, set(&[0, step, 2 * step, 3 * step]));
            assert!(cert.verified);
        }
    }

    #[test]
    fn plan_transfers_from_normalized_set() {
        let a = set(&[6, 12, 21]);
        let mut plan = AsymptoticPlan::new(&a, 2, None).unwrap();
        let reduced = AsymptoticPlan::new(&set(&[0, 2, 5]), 2, None).unwrap();
        assert_eq!(plan.h1, reduced.h1);
        let range = plan.populate(0..=plan.h1 + 2).unwrap();
        assert_eq!(*range.start(), plan.h1);
        assert_eq!(plan.certificates.len(), 3);
        for (&h, cert) in &plan.certificates {
            assert!(cert.verified);
            let base = reduced.certificate(h).unwrap().x;
            assert_eq!(cert.x, transfer_dilate(&base, 3, 6 * h as i64, 2).unwrap());
        }
    }

    #[test]
    fn singleton_asymptotic() {
        let cert = asymptotic_cert(&set(&[4]), 3, 5).unwrap();
        assert_eq!(cert.x, set(&[40]));
        assert!(cert.verified);
        assert!(AsymptoticPlan::new(&set(&[4]), 3, None).is_err());
    }
}
