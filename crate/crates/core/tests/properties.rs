use nekrasov_core::*;
use proptest::prelude::*;

fn rel_diff(a: f64, b: f64) -> f64 {
    let scale = a.abs().max(b.abs());
    if scale == 0.0 {
        0.0
    } else {
        (a - b).abs() / scale
    }
}

fn generated() -> impl Strategy<Value = SquareMatrix> {
    (
        2usize..=12,
        any::<u64>(),
        any::<bool>(),
        prop_oneof![Just(0.0), Just(0.3), Just(1.0)],
    )
        .prop_map(|(n, seed, complex, sdd)| {
            let cfg = GeneratorConfig::new(n, seed)
                .with_complex(complex)
                .with_sdd_fraction(sdd);
            generate_nekrasov(&cfg).unwrap()
        })
}

/// Any real matrix with nonzero diagonal, Nekrasov or not.
fn nonzero_diagonal() -> impl Strategy<Value = SquareMatrix> {
    (1usize..=8).prop_flat_map(|n| {
        (
            proptest::collection::vec(-5.0f64..5.0, n * n),
            proptest::collection::vec(0.1f64..20.0, n),
        )
            .prop_map(move |(mut v, d)| {
                for i in 0..n {
                    v[i * n + i] = d[i];
                }
                SquareMatrix::from_real(n, v).unwrap()
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn h_and_z_routes_agree(a in prop_oneof![generated(), nonzero_diagonal()]) {
        let hr = compute_h_recursive(&a).unwrap();
        let hs = compute_h_by_solve(&a).unwrap();
        let zr = compute_z(&a).unwrap();
        let zs = compute_z_by_solve(&a).unwrap();
        for i in 0..a.dim() {
            prop_assert!(rel_diff(hr[i], hs[i]) <= 1e-12, "h[{i}]: {} vs {}", hr[i], hs[i]);
            prop_assert!(rel_diff(zr[i], zs[i]) <= 1e-12, "z[{i}]: {} vs {}", zr[i], zs[i]);
        }
    }

    #[test]
    fn profile_invariants(a in prop_oneof![generated(), nonzero_diagonal()]) {
        let p = classify(&a);
        let q = p.quantities.as_ref().unwrap();
        prop_assert_eq!(q.h[0], p.r[0]);
        prop_assert_eq!(q.z[0], 1.0);
        prop_assert!(q.z.iter().all(|&z| z >= 1.0));
        prop_assert!(q.h.iter().all(|&h| h >= 0.0));
        if p.verdict == Verdict::Sdd {
            prop_assert!(p.diag.iter().zip(&p.r).all(|(d, r)| d > r));
            prop_assert!(p.diag.iter().zip(&q.h).all(|(d, h)| d > h));
        }
        match p.witness {
            Some(w) => {
                prop_assert_eq!(p.verdict, Verdict::NotNekrasov);
                prop_assert!(p.diag[w] <= q.h[w]);
                prop_assert!((0..w).all(|i| p.diag[i] > q.h[i]));
            }
            None => prop_assert!(p.verdict.is_nekrasov()),
        }
    }

    #[test]
    fn szulc_characterisation(a in prop_oneof![generated(), nonzero_diagonal()]) {
        prop_assert_eq!(szulc_check(&a).unwrap(), classify(&a).verdict.is_nekrasov());
    }

    #[test]
    fn bounds_are_sound(a in generated(), t in 0.0f64..1.0) {
        let exact = exact_inverse_inf_norm(&a).unwrap().value;
        let b = NekrasovBounds::new(&a).unwrap();
        let slack = |bound: f64| bound * (1.0 + 1e-9);
        if let Some(v) = b.varah() {
            prop_assert!(slack(v) >= exact);
        }
        prop_assert!(slack(b.baseline_ratio()) >= exact);
        prop_assert!(slack(b.baseline_diff()) >= exact);
        prop_assert!(slack(b.optimal_ratio().unwrap().value) >= exact);
        prop_assert!(slack(b.optimal_diff().unwrap().value) >= exact);
        // a random admissible μ in (threshold, threshold + 3]
        let mu = b.mu_threshold() + 3.0 * (1.0 - t);
        prop_assert!(slack(b.param_ratio(mu).unwrap()) >= exact);
        prop_assert!(slack(b.param_diff(mu).unwrap()) >= exact);
    }

    #[test]
    fn optimal_never_worse_than_baseline(a in generated()) {
        let b = NekrasovBounds::new(&a).unwrap();
        let (r, d) = (b.optimal_ratio().unwrap(), b.optimal_diff().unwrap());
        prop_assert!(r.mu_star > b.first_ratio());
        prop_assert!(d.mu_star > b.mu_threshold());
        match r.case {
            CaseTag::StrictImprovement => prop_assert!(r.value < b.baseline_ratio()),
            CaseTag::EqualsBaseline => prop_assert!(rel_diff(r.value, b.baseline_ratio()) <= 1e-12),
        }
        match d.case {
            CaseTag::StrictImprovement => prop_assert!(d.value < b.baseline_diff()),
            CaseTag::EqualsBaseline => prop_assert!(rel_diff(d.value, b.baseline_diff()) <= 1e-12),
        }
    }

    #[test]
    fn improvement_intervals(a in generated(), ts in proptest::collection::vec(0.0f64..1.0, 10)) {
        let b = NekrasovBounds::new(&a).unwrap();
        if let Some((lo, hi)) = b.ratio_improvement_interval() {
            let star = b.optimal_ratio().unwrap();
            prop_assert!(lo < star.mu_star && star.mu_star < hi);
            for t in &ts {
                let mu = lo + (hi - lo) * (0.001 + 0.998 * t);
                let v = b.param_ratio(mu).unwrap();
                prop_assert!(v < b.baseline_ratio());
                prop_assert!(star.value <= v * (1.0 + 1e-14));
            }
        }
        if let Some((lo, hi)) = b.diff_improvement_interval() {
            let star = b.optimal_diff().unwrap();
            prop_assert!(lo < star.mu_star && star.mu_star < hi);
            for t in &ts {
                let mu = lo + (hi - lo) * (0.001 + 0.998 * t);
                let v = b.param_diff(mu).unwrap();
                prop_assert!(v < b.baseline_diff());
                prop_assert!(star.value <= v * (1.0 + 1e-14));
            }
        }
    }

    #[test]
    fn scaled_bounds_are_unimodal(a in generated()) {
        let b = NekrasovBounds::new(&a).unwrap();
        let r_star = b.optimal_ratio().unwrap().mu_star;
        let d_star = b.optimal_diff().unwrap().mu_star;
        let lo = b.mu_threshold();
        let hi = 3.0 * r_star.max(d_star).max(1.0);
        let grid = MuGrid::with_points(lo, hi, 2001).unwrap();
        let pts: Vec<f64> = grid.points().skip(1).collect();
        for w in pts.windows(2) {
            let (m0, m1) = (w[0], w[1]);
            let (r0, r1) = (b.param_ratio(m0).unwrap(), b.param_ratio(m1).unwrap());
            let (d0, d1) = (b.param_diff(m0).unwrap(), b.param_diff(m1).unwrap());
            if m1 <= r_star {
                prop_assert!(r1 <= r0 * (1.0 + 1e-13));
            }
            if m0 >= r_star.max(1.0) {
                prop_assert!(r1 >= r0 * (1.0 - 1e-13));
            }
            if m1 <= d_star {
                prop_assert!(d1 <= d0 * (1.0 + 1e-13));
            }
            if m0 >= d_star.max(1.0) {
                prop_assert!(d1 >= d0 * (1.0 - 1e-13));
            }
        }
    }

    #[test]
    fn splitting_matrices_are_sdd(a in generated(), t in 0.0f64..1.0) {
        let threshold = NekrasovBounds::new(&a).unwrap().mu_threshold();
        let mu = threshold + 0.01 + 2.0 * t;
        let (c, b) = scaled_splitting_matrices(&a, mu).unwrap();
        prop_assert_eq!(classify(&c).verdict, Verdict::Sdd);
        prop_assert_eq!(classify(&b).verdict, Verdict::Sdd);
    }

    #[test]
    fn scalar_inequality(a in 1e-3f64..1e3, s in 0.001f64..0.999, extra in 1e-3f64..1e3) {
        // 0 < a - b < c
        let b = a * s;
        let c = (a - b) + extra;
        prop_assert!((b + c) / a < c / (a - b));
    }

    #[test]
    fn diagonal_oracle_is_exact(d in proptest::collection::vec(prop_oneof![0.01f64..100.0, -100.0f64..-0.01], 1..10)) {
        let a = SquareMatrix::from_diagonal(&d).unwrap();
        let expected = d.iter().map(|x| 1.0 / x.abs()).fold(0.0, f64::max);
        prop_assert_eq!(exact_inverse_inf_norm(&a).unwrap().value, expected);
    }

    #[test]
    fn oracle_is_submultiplicative(a in generated()) {
        let exact = exact_inverse_inf_norm(&a).unwrap().value;
        prop_assert!(exact * a.inf_norm() >= 1.0 - 1e-12);
    }
}

#[test]
fn search_agrees_with_closed_form_on_strict_cases() {
    let mut checked = 0;
    for seed in 0..200u64 {
        let a = generate_nekrasov(&GeneratorConfig::new(2 + (seed as usize % 11), seed)).unwrap();
        let b = NekrasovBounds::new(&a).unwrap();
        for (kind, opt) in [
            (BoundKind::Ratio, b.optimal_ratio().unwrap()),
            (BoundKind::Diff, b.optimal_diff().unwrap()),
        ] {
            if opt.case != CaseTag::StrictImprovement {
                continue;
            }
            let lo = b.mu_threshold();
            let hi = 3.0 * opt.mu_star;
            let grid = MuGrid::with_points(lo, hi, 10_001).unwrap();
            assert!(grid.step() <= 1e-4 * (hi - lo) * (1.0 + 1e-12));
            let found = brute_force_bound_min(&a, kind, &grid).unwrap();
            assert!(
                (found.grid_mu - opt.mu_star).abs() <= grid.step() * (1.0 + 1e-9),
                "seed {seed}"
            );
            assert!(
                rel_diff(found.value, opt.value) <= 1e-6,
                "seed {seed}: {found:?} vs {opt:?}"
            );
            checked += 1;
        }
    }
    assert!(checked > 40, "only {checked} strict cases");
}
