use approxgroup::structure::sweep;
use approxgroup::*;
use proptest::prelude::*;

fn small_set(lo: i64, hi: i64, max_len: usize) -> impl Strategy<Value = IntSet> {
    prop::collection::btree_set(lo..=hi, 1..=max_len).prop_map(|s| s.into_iter().collect())
}

/// Min 0 and gcd 1, with 2 <= |A|.
fn normalized_set() -> impl Strategy<Value = IntSet> {
    small_set(0, 20, 7).prop_filter_map("needs two elements", |a| {
        let n = normalize(&a).ok()?;
        (n.reduced.len() >= 2).then_some(n.reduced)
    })
}

fn brute_add(a: &IntSet, b: &IntSet) -> IntSet {
    a.iter().flat_map(|x| b.iter().map(move |y| x + y)).collect()
}

proptest! {
    #[test]
    fn normalize_round_trips(a in small_set(-1000, 1000, 10)) {
        let n = normalize(&a).unwrap();
        prop_assert_eq!(n.reduced.min(), Some(0));
        prop_assert_eq!(n.reduced.max(), Some(n.astar));
        prop_assert!(n.d >= 1);
        prop_assert_eq!(n.denormalize().unwrap(), a);
    }

    #[test]
    fn translate_dilate_compose(a in small_set(-50, 50, 8), y in -30i64..30, d in -5i64..6) {
        let lhs = a.translate(y).unwrap().dilate(d).unwrap();
        let rhs = a.dilate(d).unwrap().translate(d * y).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn progression_test_is_affine_invariant(a in small_set(-20, 20, 6), y in -9i64..9, d in 1i64..4, neg in any::<bool>()) {
        let d = if neg { -d } else { d };
        let b = a.translate(y).unwrap().dilate(d).unwrap();
        prop_assert_eq!(a.is_arithmetic_progression(), b.is_arithmetic_progression());
    }

    #[test]
    fn add_matches_enumeration(a in small_set(-200, 200, 12), b in small_set(-200, 200, 12)) {
        prop_assert_eq!(add(&a, &b).unwrap(), brute_add(&a, &b));
    }

    #[test]
    fn hfold_is_additive_in_h(a in small_set(-15, 15, 6), h1 in 1u32..4, h2 in 1u32..4) {
        let whole = hfold(&a, h1 + h2).unwrap();
        prop_assert_eq!(whole, add(&hfold(&a, h1).unwrap(), &hfold(&a, h2).unwrap()).unwrap());
    }

    #[test]
    fn hfold_equivariance(a in small_set(-15, 15, 6), h in 1u32..5, y in -10i64..10, d in 1i64..5) {
        let s = hfold(&a, h).unwrap();
        prop_assert_eq!(hfold(&a.translate(y).unwrap(), h).unwrap(), s.translate(h as i64 * y).unwrap());
        prop_assert_eq!(hfold(&a.dilate(d).unwrap(), h).unwrap(), s.dilate(d).unwrap());
        prop_assert_eq!(s.min(), a.min().map(|m| h as i64 * m));
        prop_assert_eq!(s.max(), a.max().map(|m| h as i64 * m));
        prop_assert!(s.len() as u64 >= card_lower_bound(a.len(), h));
    }

    #[test]
    fn decomposition_partitions_sumset(a in normalized_set(), h in 1u32..12) {
        let astar = a.max().unwrap();
        let s = hfold(&a, h).unwrap();
        if let Ok(st) = decompose(&s, h, astar) {
            let (u, v) = st.middle();
            let right = st.d_set.reflect(st.top()).unwrap();
            prop_assert!(st.c_set.max().is_none_or(|m| m < u - 1));
            prop_assert!(right.min().is_none_or(|m| m > v + 1));
            prop_assert_eq!(st.c_set.len() + (v - u + 1) as usize + right.len(), s.len());
            prop_assert_eq!(st.reconstruct().unwrap(), s.clone());
            if st.c >= 1 { prop_assert!(!s.contains(st.c - 1)); }
            if st.d >= 1 { prop_assert!(!s.contains(v + 1)); }
            if !st.c_set.is_empty() { prop_assert!(st.c_set.contains(0)); }
            if !st.d_set.is_empty() { prop_assert!(st.d_set.contains(0)); }
            prop_assert!(st.c_set.max().is_none_or(|m| m <= st.c - 2));
            prop_assert!(st.d_set.max().is_none_or(|m| m <= st.d - 2));
        }
    }

    #[test]
    fn reflection_swaps_fringes(a in normalized_set()) {
        let n = normalize(&a).unwrap();
        let m = normalize(&a.reflect(n.astar).unwrap()).unwrap();
        let params = SweepParams::defaults_for(n.astar);
        let fwd = find_stabilization(&n, params).unwrap();
        let back = find_stabilization(&m, params).unwrap();
        prop_assert_eq!(fwd.h0_empirical, back.h0_empirical);
        prop_assert_eq!((fwd.structure.c, &fwd.structure.c_set), (back.structure.d, &back.structure.d_set));
        prop_assert_eq!((fwd.structure.d, &fwd.structure.d_set), (back.structure.c, &back.structure.c_set));
    }

    #[test]
    fn fringes_grow_once_stable(a in normalized_set()) {
        let n = normalize(&a).unwrap();
        let rep = find_stabilization(&n, SweepParams::defaults_for(n.astar)).unwrap();
        let stop = rep.h0_empirical + rep.window + 5;
        let steps: Vec<_> = sweep(&n)
            .skip(rep.h0_empirical as usize - 1)
            .take((stop - rep.h0_empirical) as usize)
            .map(|s| s.unwrap().structure.unwrap())
            .collect();
        for w in steps.windows(2) {
            prop_assert!(w[0].c_set.is_subset(&w[1].c_set));
            prop_assert!(w[0].d_set.is_subset(&w[1].d_set));
        }
    }

    #[test]
    fn minimal_cover_respects_cardinality_obstruction(a in small_set(-6, 6, 5), r in 2u32..4) {
        let cert = minimal_cover(&a, r, 16).unwrap().unwrap();
        let target = hfold(&a, r).unwrap().len();
        prop_assert!(target <= cert.x.len() * a.len());
        prop_assert!(cert.verified && cert.recheck().unwrap());
        let greedy = greedy_cover(&a, r).unwrap();
        prop_assert!(greedy.verified && greedy.x.len() >= cert.x.len());
    }

    #[test]
    fn translate_coherence(a in small_set(-8, 8, 5), r in 2u32..5, y in -20i64..20) {
        let x = greedy_cover(&a, r).unwrap().x;
        prop_assert!(verify(&a.translate(y).unwrap(), r, &x.translate((r as i64 - 1) * y).unwrap()).unwrap());
    }

    #[test]
    fn downgrade_coherence(a in small_set(-8, 8, 5), r in 2u32..5, pick in any::<prop::sample::Index>()) {
        let x = greedy_cover(&a, r).unwrap().x;
        let a0 = a.as_slice()[pick.index(a.len())];
        for lower in 1..r {
            prop_assert!(verify(&a, lower, &transfer_downgrade(&x, r, lower, a0).unwrap()).unwrap());
        }
    }

    #[test]
    fn closed_forms_verify(a0 in -50i64..50, gap in 1i64..30, d in 1i64..8, k in 2u32..10, r in 1u32..6) {
        prop_assert!(verify(&IntSet::singleton(a0), r, &x_singleton(a0, r).unwrap()).unwrap());
        let pair = IntSet::from([a0, a0 + gap]);
        prop_assert!(verify(&pair, 3, &x_pair_r3(a0, a0 + gap).unwrap()).unwrap());
        let ap: IntSet = (0..k as i64).map(|i| a0 + i * d).collect();
        prop_assert!(verify(&ap, 2, &x_ap_r2(a0, d, k).unwrap()).unwrap());
    }

    #[test]
    fn linear_coverage_boundary(u0 in -10i64..=0, du in 0i64..8, len in 0i64..8, dv in 0i64..12, r in 2u32..5) {
        let (u, v) = (u0 + du, u0 + du + len);
        let p = LinearPattern::new(u0, u, v, v + dv).unwrap();
        let ell = p.min_ell(r).unwrap();
        let full = IntSet::interval(r as i64 * p.u0, r as i64 * p.v0);
        for count in [ell.saturating_sub(1), ell] {
            let (lo, hi) = p.coverage(r, count).unwrap();
            let covers = lo <= full.min().unwrap() && hi >= full.max().unwrap();
            prop_assert_eq!(covers, p.admits(r, count).unwrap());
            prop_assert_eq!(covers, count == ell);
        }
        let x = x_linear(&p, r, ell).unwrap();
        prop_assert_eq!(x.len() as u64, ell);
        prop_assert!(x.is_arithmetic_progression());
        if x.len() >= 2 { prop_assert_eq!(x.as_slice()[1] - x.as_slice()[0], p.block()); }
    }

    #[test]
    fn asymptotic_certificates_have_r_plus_one_translates(a in small_set(-20, 20, 5), r in 2u32..5, extra in 0u32..4) {
        prop_assume!(a.len() >= 2);
        let plan = AsymptoticPlan::new(&a, r, None).unwrap();
        let cert = plan.certificate(plan.h1 + extra).unwrap();
        prop_assert!(cert.verified);
        prop_assert_eq!(cert.x.len(), r as usize + 1);
    }
}
