//! Acceptance gate: one test per shipping criterion, each printing a
//! pass line with the measured quantity. Run with
//! `cargo test --test acceptance -- --nocapture` to see the lines.

use num_traits::Zero;

use dihedral_hpg::catalog::{self, SweepConfig, SweepRng};
use dihedral_hpg::dihedral::{
    classify_degenerate, classify_integer_a, eval_cycl2, eval_log_even_m, hpg_at0, hpg_at1,
    At1Kind, DegeneracyVerdict, DihedralParams, Parity,
};
use dihedral_hpg::poly::RatPoly;
use dihedral_hpg::scalar::{pochhammer, rat, rat_i, rat_to_f64, Cx};
use dihedral_hpg::series::{
    appell_f2_rect, appell_f2_triangular, appell_f2_triangular_exact, f2_dagger_rect, gauss_2f1,
    gauss_2f1_exact, SeriesMode,
};
use dihedral_hpg::transforms::{klein_covering, product_constant, verify_theta, GSource};

fn cx(x: f64) -> Cx {
    Cx::new(x, 0.0)
}

fn rel(a: Cx, b: Cx) -> f64 {
    (a - b).norm() / a.norm().max(b.norm()).max(1.0)
}

fn oracle(a: Cx, b: Cx, c: Cx, z: Cx) -> Cx {
    gauss_2f1(a, b, c, z, SeriesMode::truncated(1e-15))
        .expect("oracle evaluation")
        .value
}

/// Criterion 1: both theta identities hold exactly for 1 <= n <= 64.
#[test]
fn criterion_1_theta_identities_exact() {
    for n in 1..=64 {
        assert!(verify_theta(n), "theta identities fail at n = {n}");
    }
    println!("criterion 1: PASS - theta split and norm identities exact for n = 1..=64");
}

/// Criterion 2: full covering sweep k,l <= 3, m in 2..=7, n in 1..=2m with
/// gcd(n,m) = 1 - structural checks, degree bookkeeping, and the exact
/// product relation with the closed-form constant.
#[test]
fn criterion_2_klein_covering_sweep() {
    let mut count = 0usize;
    for k in 0..=3u32 {
        for l in 0..=3u32 {
            for m in 2..=7u32 {
                for n in 1..=(2 * m) {
                    if num_integer::gcd(n, m) != 1 {
                        continue;
                    }
                    let cov = klein_covering(k, l, n, m)
                        .unwrap_or_else(|e| panic!("covering ({k},{l},{n},{m}): {e}"));
                    assert_eq!(cov.degree, (k + l) * m + n, "degree at ({k},{l},{n},{m})");
                    assert!(
                        cov.product_residual().is_zero(),
                        "product relation at ({k},{l},{n},{m})"
                    );
                    let c3 = product_constant(k, l, n, m, GSource::F3Normalized).unwrap();
                    let c2 = product_constant(k, l, n, m, GSource::F2Normalized).unwrap();
                    assert_eq!(cov.c_const, c3, "constant (F3 route) at ({k},{l},{n},{m})");
                    assert_eq!(cov.c_const, c2, "constant (F2 route) at ({k},{l},{n},{m})");
                    assert_eq!(cov.psi.degree(), Some((k + l) as usize));
                    count += 1;
                }
            }
        }
    }
    println!(
        "criterion 2: PASS - {count} coverings, all structural checks and exact product relations"
    );
}

/// Criterion 3: desk examples - the (1,0,1,m) coverings match the m=2
/// closed theta forms, and the normalized covering polynomials reproduce
/// the listed table symbolically over a coprime (n,m) grid.
#[test]
fn criterion_3_desk_examples() {
    // (1,0,1,2) explicitly
    let cov = klein_covering(1, 0, 1, 2).unwrap();
    assert_eq!(
        cov.theta1,
        RatPoly::from_coeffs(vec![rat_i(1), rat(-3, 4)]),
        "theta1 of (1,0,1,2)"
    );
    assert_eq!(cov.theta2, RatPoly::from_coeffs(vec![rat(1, 4)]));
    assert_eq!(cov.degree, 3);

    // the same covering against the closed 2F1 pair for general m:
    // Theta1 = 2F1(-m/2, -(m+1)/2; -1/2; x/m^2),
    // Theta2 = (m^2-1)/(3m^2) 2F1(-(m-2)/2, -(m-3)/2; 5/2; x/m^2)
    for m in 2..=7u32 {
        let cov = klein_covering(1, 0, 1, m).unwrap();
        let mm = m as i64;
        for px in [rat(1, 3), rat(-2, 5), rat(7, 4)] {
            let arg = &px / rat_i(mm * mm);
            let t1 = gauss_2f1_exact(&rat(-mm, 2), &rat(-mm - 1, 2), &rat(-1, 2), &arg).unwrap();
            assert_eq!(cov.theta1.eval(&px), t1, "theta1 closed form at m={m}");
            let t2 = rat(mm * mm - 1, 3 * mm * mm)
                * gauss_2f1_exact(&rat(2 - mm, 2), &rat(3 - mm, 2), &rat(5, 2), &arg).unwrap();
            assert_eq!(cov.theta2.eval(&px), t2, "theta2 closed form at m={m}");
        }
    }

    // the listed covering-polynomial table over every coprime pair with
    // m <= 7, n <= 2m (the catalog entry checks the same data per sample)
    let mut pairs = 0;
    for m in 2..=7u32 {
        for n in 1..=(2 * m) {
            if num_integer::gcd(n, m) != 1 {
                continue;
            }
            let point = catalog::SamplePoint {
                n,
                m,
                ..Default::default()
            };
            let report = catalog::eval_identity("klein-g-table", &point).unwrap();
            assert!(report.pass, "covering polynomial table at n={n} m={m}");
            pairs += 1;
        }
    }
    println!("criterion 3: PASS - (1,0,1,m) closed forms and the full polynomial table over {pairs} coprime pairs");
}

/// Criterion 4: closed forms at 0 and 1 agree with the truncated series
/// oracle within 1e-10 relative over k,l <= 4, 20 generic a per pair,
/// z in {0.05, ..., 0.45}.
#[test]
fn criterion_4_oracle_equivalence() {
    let mut rng = SweepRng::new(0x01);
    let zs = [0.05, 0.10, 0.15, 0.20, 0.25, 0.30, 0.35, 0.40, 0.45];
    let mut evals = 0usize;
    let mut worst = 0.0f64;
    for k in 0..=4u32 {
        for l in 0..=4u32 {
            for _ in 0..20 {
                let a = loop {
                    let a = rng.uniform(-3.5, 3.5);
                    if (a - a.round()).abs() >= 0.2 {
                        break a;
                    }
                };
                let p = DihedralParams::real(k, l, a);
                for &z in &zs {
                    let zc = cx(z);
                    let even = hpg_at0(&p, zc, Parity::Even).unwrap().value;
                    let oe = oracle(
                        cx(a / 2.0),
                        cx((a + 1.0) / 2.0 + l as f64),
                        cx(0.5 - k as f64),
                        zc,
                    );
                    let odd = hpg_at0(&p, zc, Parity::Odd).unwrap().value;
                    let oo = oracle(
                        cx((a + 1.0) / 2.0 + k as f64),
                        cx(a / 2.0 + (k + l) as f64 + 1.0),
                        cx(1.5 + k as f64),
                        zc,
                    );
                    let at1 = hpg_at1(&p, zc, At1Kind::Principal).unwrap().value;
                    let o1 = oracle(
                        cx(a / 2.0),
                        cx((a + 1.0) / 2.0 + l as f64),
                        cx(a + (k + l) as f64 + 1.0),
                        cx(1.0 - z),
                    );
                    for (got, want) in [(even, oe), (odd, oo), (at1, o1)] {
                        let r = rel(got, want);
                        worst = worst.max(r);
                        assert!(
                            r <= 1e-10,
                            "oracle mismatch k={k} l={l} a={a} z={z}: rel {r:.3e}"
                        );
                        evals += 1;
                    }
                }
            }
        }
    }
    println!("criterion 4: PASS - {evals} closed-form evaluations within 1e-10 of the oracle (worst {worst:.3e})");
}

/// Criterion 5: the identity catalog passes its default seeded sweep with
/// zero failures; exact entries report exact-zero residuals and the
/// family tolerances are pinned as shipped.
#[test]
fn criterion_5_identity_catalog_sweep() {
    use dihedral_hpg::catalog::Exactness;
    // pinned tolerances per family
    let expect_tol = [
        ("basic-d1", 1e-10),
        ("at1-f3", 1e-10),
        ("quad-pullback-k", 1e-10),
        ("theta-transform-even", 1e-10),
        ("clausen", 1e-9),
        ("symsq-general", 1e-9),
        ("log-even-sqrt", 1e-8),
        ("log-even-series", 1e-8),
        ("cyclic-terminating", 1e-11),
    ];
    for (id, tol) in expect_tol {
        match catalog::lookup(id).unwrap().exactness {
            Exactness::Numeric(t) => assert_eq!(t, tol, "tolerance drift for {id}"),
            Exactness::Exact => panic!("{id} should be numeric"),
        }
    }
    let config = SweepConfig::default();
    let (reports, summaries) = catalog::sweep_all(&config).unwrap();
    let failures: usize = summaries.iter().map(|s| s.failures).sum();
    for s in &summaries {
        assert_eq!(
            s.failures, 0,
            "{} failed {} samples (worst {})",
            s.id, s.failures, s.worst_params
        );
        if s.exact {
            assert_eq!(
                s.max_rel_residual, 0.0,
                "exact entry {} has nonzero residual",
                s.id
            );
        }
    }
    assert!(summaries.len() >= 30, "catalog too small");
    println!(
        "criterion 5: PASS - {} identities, {} samples, {failures} failures",
        summaries.len(),
        reports.len()
    );
}

/// Criterion 6: the triangular double sum with coupled arguments (x, 2-x)
/// vanishes for odd m: below 1e-12 at 50 random float points, exactly
/// over rationals.
#[test]
fn criterion_6_triangular_vanishing() {
    let mut rng = SweepRng::new(0x06);
    let mut max_abs = 0.0f64;
    for i in 0..50 {
        let m = 2 * (i % 5) + 1; // odd m <= 9
        let b = loop {
            let b = rng.uniform(-2.0, 2.0);
            if (2.0 * b - (2.0 * b).round()).abs() > 0.05 {
                break b;
            }
        };
        let c = loop {
            let c = rng.uniform(-2.0, 2.0);
            if (2.0 * c - (2.0 * c).round()).abs() > 0.05 {
                break c;
            }
        };
        let x = rng.uniform(0.05, 1.95);
        let v = appell_f2_triangular(m, cx(b), cx(c), cx(x), cx(2.0 - x))
            .unwrap()
            .value;
        max_abs = max_abs.max(v.norm());
        assert!(
            v.norm() < 1e-12,
            "m={m} b={b} c={c} x={x}: |value| = {:e}",
            v.norm()
        );
    }
    for (m, b, c, x) in [
        (1u32, rat(7, 10), rat(-3, 10), rat(2, 5)),
        (3, rat(5, 3), rat(1, 3), rat(9, 7)),
        (5, rat(-4, 3), rat(2, 7), rat(1, 5)),
        (7, rat(1, 3), rat(-5, 7), rat(8, 5)),
        (9, rat(2, 3), rat(3, 5), rat(3, 4)),
    ] {
        let v = appell_f2_triangular_exact(m, &b, &c, &x, &(rat_i(2) - &x)).unwrap();
        assert!(v.is_zero(), "exact vanishing fails at m={m}");
    }
    println!("criterion 6: PASS - 50 float samples below 1e-12 (max {max_abs:.3e}), exact zero over rationals");
}

/// Criterion 7: classifier correspondence for k,l,m <= 6; the two-term
/// terminating relation below 1e-11 on every cyclic case with odd
/// m < 2 min(k,l); the assembled even-m logarithmic formula within 1e-8
/// of the oracle on every logarithmic case with k,l <= 3.
#[test]
fn criterion_7_degenerate_cases() {
    for k in 0..=6u32 {
        for l in 0..=6u32 {
            for m in 0..=6u32 {
                let lhs = classify_integer_a(k, l, m);
                let rhs = classify_degenerate(k, l, (k + l).abs_diff(m));
                assert_eq!(lhs, rhs, "classifier mismatch at k={k} l={l} m={m}");
            }
        }
    }
    let mut cyc = 0usize;
    let mut worst_cyc = 0.0f64;
    for k in 1..=6u32 {
        for l in 1..=6u32 {
            for m in (1..=6u32.min(2 * k.min(l)).saturating_sub(1)).step_by(2) {
                if m >= 2 * k.min(l) {
                    continue;
                }
                assert_eq!(classify_integer_a(k, l, m), DegeneracyVerdict::CyclicOrder2);
                for z in [0.2, 0.4, 0.6] {
                    let (lhs, rhs) = eval_cycl2(k, l, m, cx(z)).unwrap();
                    let r = rel(lhs, rhs);
                    worst_cyc = worst_cyc.max(r);
                    assert!(
                        r < 1e-11,
                        "cyclic relation k={k} l={l} m={m} z={z}: {r:.3e}"
                    );
                    cyc += 1;
                }
            }
        }
    }
    let mut logs = 0usize;
    let mut worst_log = 0.0f64;
    for k in 0..=3u32 {
        for l in 0..=3u32 {
            for m in (0..=2 * (k + l)).step_by(2) {
                assert_eq!(classify_integer_a(k, l, m), DegeneracyVerdict::Logarithmic);
                for z in [0.1, 0.2, 0.3] {
                    let got = eval_log_even_m(k, l, m, cx(z)).unwrap().value;
                    let want = oracle(
                        cx(k as f64 - (m as f64 - 1.0) / 2.0),
                        cx((k + l) as f64 - m as f64 / 2.0 + 1.0),
                        cx(1.5 + k as f64),
                        cx(z),
                    );
                    let r = rel(got, want);
                    worst_log = worst_log.max(r);
                    assert!(r < 1e-8, "log case k={k} l={l} m={m} z={z}: {r:.3e}");
                    logs += 1;
                }
            }
        }
    }
    println!("criterion 7: PASS - classifiers agree on 343 triples; {cyc} cyclic checks (worst {worst_cyc:.3e}); {logs} log checks (worst {worst_log:.3e})");
}

/// Criterion 8: the Pochhammer derivative matches its central finite
/// difference within 1e-5 relative for m, N <= 8, and the derivative
/// rectangle matches the a-difference of the plain rectangle at 20
/// random points.
#[test]
fn criterion_8_derivative_pochhammer() {
    use dihedral_hpg::scalar::pochhammer_derivative;
    let h = 1e-6;
    for m in 0..=8u32 {
        for n in 0..=8u32 {
            let exact = rat_to_f64(&pochhammer_derivative(m, n));
            let up = pochhammer(&cx(-(m as f64) + h), n).re;
            let dn = pochhammer(&cx(-(m as f64) - h), n).re;
            let fd = (up - dn) / (2.0 * h);
            let denom = exact.abs().max(fd.abs()).max(1.0);
            assert!(
                (exact - fd).abs() / denom <= 1e-5,
                "m={m} N={n}: exact {exact} vs fd {fd}"
            );
        }
    }
    let mut rng = SweepRng::new(0x08);
    for _ in 0..20 {
        let m = rng.below(5);
        let k = rng.below(4);
        let l = rng.below(4);
        let x = cx(rng.uniform(-1.5, 1.5));
        let y = cx(rng.uniform(-1.5, 1.5));
        let up = appell_f2_rect(cx(-(m as f64) + h), k, l, x, y).value;
        let dn = appell_f2_rect(cx(-(m as f64) - h), k, l, x, y).value;
        let fd = (up - dn) / (2.0 * h);
        let dag = f2_dagger_rect(m, k, l, x, y).value;
        let r = (dag - fd).norm() / dag.norm().max(fd.norm()).max(1.0);
        assert!(r <= 1e-5, "dagger rectangle m={m} k={k} l={l}: rel {r:.3e}");
    }
    println!(
        "criterion 8: PASS - derivative symbol and derivative rectangle match finite differences"
    );
}
