//! Acceptance suite: every shipped claim, one test per criterion, all exact
//! (tolerance zero). Each test prints a pass line so a plain
//! `cargo test --test acceptance -- --nocapture` reads as a checklist.

use num_traits::{One, Signed, Zero};

use hessmap_core::binary::{
    brute_force_singular_search, classify_singular_monomial_hessian, lattice_pair_factor,
    SingularVerdict,
};
use hessmap_core::differential::{
    binary_monomial_expected_dim, dhessian, dhessian_oracle, kernel,
};
use hessmap_core::families::{
    block_coefficient_matrix, block_hessian_constant, verify_counterexample, CounterexampleSpec,
};
use hessmap_core::groups::{
    gdnn_obstruction, group_generators, invariant_space_degree_d, is_invariant,
    stabilizer_membership_monomial, GroupSpec,
};
use hessmap_core::hessian::{hessian_det, hessian_det_wrt};
use hessmap_core::jacobian::{
    amgm_equality_scan, membership_monomial, standard_monomial_count, MonomialIdeal,
};
use hessmap_core::matrix::ScalarMatrix;
use hessmap_core::monomial::Monomial;
use hessmap_core::pipeline::{kayal_check, KayalStage, KayalStatus};
use hessmap_core::poly::{poly_from_int_terms, MultiPoly};
use hessmap_core::rational::{binomial, rat, rat_int, Rational};
use hessmap_core::rng::SplitMix64;
use hessmap_core::scalar::Scalar;
use hessmap_core::verify;

fn fermat(n: usize, d: u32) -> MultiPoly {
    verify::fermat(n, d)
}

#[test]
fn criterion_01_block_hessian_identity() {
    for q in 2u32..=4 {
        for k in 1u32..=4 {
            if q * k < 3 {
                continue;
            }
            let d = q * k;
            // closed form (1 - qk)(-k)^q
            let alpha = block_hessian_constant(q, k);
            // route 1: full Hessian determinant of the block monomial
            let block =
                MultiPoly::monomial(q as usize, &vec![k; q as usize], Scalar::from_int(1))
                    .unwrap();
            let expected =
                MultiPoly::monomial(q as usize, &vec![d - 2; q as usize], Scalar::Rat(alpha.clone()))
                    .unwrap();
            assert_eq!(hessian_det(&block), expected, "q={q} k={k}");
            // route 2: determinant of the coefficient matrix -kI + k^2 J
            let det = block_coefficient_matrix(q, k)
                .det()
                .coefficient_of(&Monomial(vec![]))
                .as_rational()
                .unwrap();
            assert_eq!(det, alpha, "q={q} k={k}");
        }
    }
    assert_eq!(block_hessian_constant(3, 2), rat_int(40));
    println!("acceptance 1 (block Hessian identity): pass");
}

#[test]
fn criterion_02_counterexample_family_end_to_end() {
    let grid = CounterexampleSpec::grid(4, 8);
    assert!(!grid.is_empty());
    for spec in grid {
        let rec = verify_counterexample(&spec).unwrap();
        assert!(rec.hessian_shape_ok, "{spec:?}");
        assert!(!rec.alpha.is_zero(), "{spec:?}");
        assert!(rec.singular, "{spec:?}");
        assert!(rec.pass, "{spec:?}");
    }
    println!("acceptance 2 (counterexample family): pass");
}

#[test]
fn criterion_03_general_binary_cubic() {
    // variables x1, x2, a0, a1, a2, a3; f = sum a_i x1^i x2^(3-i)
    let mut f = MultiPoly::zero(6);
    for i in 0..=3u32 {
        let mut e = vec![0u32; 6];
        e[0] = i;
        e[1] = 3 - i;
        e[2 + i as usize] = 1;
        f = f.add(&poly_from_int_terms(6, &[(1, &e)])).unwrap();
    }
    let h = hessian_det_wrt(&f, 2);
    let expected = poly_from_int_terms(
        6,
        &[
            (-4, &[2, 0, 0, 0, 2, 0]),
            (12, &[2, 0, 0, 1, 0, 1]),
            (-4, &[1, 1, 0, 1, 1, 0]),
            (36, &[1, 1, 1, 0, 0, 1]),
            (-4, &[0, 2, 0, 2, 0, 0]),
            (12, &[0, 2, 1, 0, 1, 0]),
        ],
    );
    assert_eq!(h, expected);
    println!("acceptance 3 (general binary cubic Hessian): pass");
}

#[test]
fn criterion_04_singular_binary_classification() {
    for d in [3u32, 5, 7, 9] {
        let c = classify_singular_monomial_hessian(d).unwrap();
        assert_eq!(c.verdict, SingularVerdict::NoSingularSolutions, "d={d}");
    }
    for d in [4u32, 6, 8] {
        let c = classify_singular_monomial_hessian(d).unwrap();
        assert_eq!(c.verdict, SingularVerdict::CentralMonomialFamily, "d={d}");
        assert_eq!(
            c.family_description.as_deref(),
            Some(format!("a*x1^{}*x2^{}", d / 2, d / 2).as_str())
        );
    }
    // exhaustive confirmation on rational lattices
    let pm1 = [rat_int(-1), rat_int(0), rat_int(1)];
    for d in 3u32..=6 {
        let hits = brute_force_singular_search(d, &pm1).unwrap();
        if d % 2 == 1 {
            assert!(hits.is_empty(), "d={d}");
        } else {
            assert!(!hits.is_empty(), "d={d}");
            for f in &hits {
                for (i, c) in f.coeffs().iter().enumerate() {
                    if i == d as usize / 2 {
                        assert!(!c.is_zero());
                    } else {
                        assert!(c.is_zero(), "d={d}: off-family hit");
                    }
                }
            }
        }
    }
    let hits8 = brute_force_singular_search(8, &[rat_int(0), rat_int(1)]).unwrap();
    assert_eq!(hits8.len(), 1);
    assert!(!hits8[0].coeff(4).is_zero());
    println!("acceptance 4 (singular binary classification): pass");
}

#[test]
fn criterion_05_lattice_sign_table() {
    for p in [1i64, 4, 9, 16] {
        let sq = (1..=4).find(|s| s * s == p).unwrap();
        for s in 0..=sq {
            for r in 0..=sq {
                if (s, r) == (0, 0) || (s + r) * sq > 2 * p - 2 {
                    continue; // outside the monomial range
                }
                let f = lattice_pair_factor(p, s, r);
                let in_zero_set = (s == 0 && r == 1) || (s == 1 && r == 0);
                assert_eq!(f.is_zero(), in_zero_set, "p={p} s={s} r={r}");
                if s == r {
                    assert!(f.is_negative(), "diagonal p={p} s={s}");
                } else if s >= 1 && r >= 1 {
                    assert!(f.is_positive(), "p={p} s={s} r={r}");
                }
            }
        }
    }
    println!("acceptance 5 (lattice sign table): pass");
}

#[test]
fn criterion_06_differential_against_expansion_oracle() {
    let mut rng = SplitMix64::new(0xacce_0006);
    for _ in 0..200 {
        let n = 2 + rng.below(2) as usize;
        let d = 3 + rng.below(3) as u32;
        let f = verify::random_form(&mut rng, n, d, 5);
        let g = verify::random_form(&mut rng, n, d, 5);
        assert_eq!(
            dhessian(&f, &g).unwrap(),
            dhessian_oracle(&f, &g).unwrap(),
            "n={n} d={d} f={f} g={g}"
        );
    }
    println!("acceptance 6 (differential vs oracle, 200 samples): pass");
}

#[test]
fn criterion_07_power_sum_kernel_dimensions() {
    for n in 2usize..=4 {
        for d in 2u32..=6 {
            let expected = if d >= n as u32 + 1 {
                rat_int((n - 1) as i64)
            } else {
                Rational::from_integer(binomial(n as u64, d as u64)) + rat_int((n - 1) as i64)
            };
            let got = rat_int(kernel(&fermat(n, d)).unwrap().dim as i64);
            assert_eq!(got, expected, "n={n} d={d}");
        }
    }
    println!("acceptance 7 (power-sum kernel dimensions): pass");
}

#[test]
fn criterion_08_binary_monomial_kernels() {
    for d in 2i64..=10 {
        for k in 1..=d {
            let f =
                MultiPoly::monomial(2, &[k as u32, (d - k) as u32], Scalar::from_int(1)).unwrap();
            assert_eq!(
                kernel(&f).unwrap().dim,
                binary_monomial_expected_dim(d, k),
                "d={d} k={k}"
            );
        }
    }
    let rep = kernel(&poly_from_int_terms(2, &[(1, &[4, 4])])).unwrap();
    assert_eq!(rep.dim, 2);
    assert_eq!(rep.basis[0], poly_from_int_terms(2, &[(1, &[6, 2])]));
    assert_eq!(rep.basis[1], poly_from_int_terms(2, &[(1, &[2, 6])]));
    println!("acceptance 8 (binary monomial kernels): pass");
}

#[test]
fn criterion_09_kernel_dimension_bounds() {
    // truncated sets at prime degrees: injective differential
    let mut rng = SplitMix64::new(0xacce_0009);
    for d in [5usize, 7] {
        for k in 2..=d - 2 {
            for _ in 0..50 {
                let mut coeffs = vec![Rational::zero(); d + 1];
                for (i, c) in coeffs.iter_mut().enumerate().skip(k) {
                    *c = if i == k {
                        rat_int(rng.nonzero_int(4))
                    } else {
                        rat_int(rng.int_in(-4, 4))
                    };
                }
                let f = hessmap_core::binary::BinaryForm::new(coeffs).to_poly();
                assert_eq!(kernel(&f).unwrap().dim, 0, "d={d} k={k} f={f}");
            }
        }
    }
    // generic bound away from the exceptional degree
    let mut rng = SplitMix64::new(0xacce_0919);
    for d in 3u32..=9 {
        if d == 8 {
            continue;
        }
        let mut done = 0;
        while done < 100 {
            let f = verify::random_form(&mut rng, 2, d, (d + 1) as usize);
            if hessian_det(&f).is_zero() {
                continue;
            }
            assert!(kernel(&f).unwrap().dim <= 1, "d={d} f={f}");
            done += 1;
        }
    }
    // the exceptional case attains dimension 2
    assert_eq!(kernel(&poly_from_int_terms(2, &[(1, &[4, 4])])).unwrap().dim, 2);
    println!("acceptance 9 (kernel dimension bounds): pass");
}

#[test]
fn criterion_10_jacobian_ring() {
    for n in 2usize..=4 {
        for d in 3u32..=6 {
            let gens = (0..n)
                .map(|i| {
                    let mut e = vec![0u32; n];
                    e[i] = d - 1;
                    Monomial(e)
                })
                .collect();
            let ideal = MonomialIdeal::new(n, gens);
            assert_eq!(
                standard_monomial_count(&ideal),
                Some(((d - 1) as u64).pow(n as u32)),
                "n={n} d={d}"
            );
            assert!(
                !membership_monomial(&ideal, &Monomial(vec![d - 2; n])),
                "socle monomial must stay outside, n={n} d={d}"
            );
            assert_eq!(amgm_equality_scan(n, d), vec![vec![d - 2; n]], "n={n} d={d}");
        }
    }
    println!("acceptance 10 (Jacobian ring counts): pass");
}

#[test]
fn criterion_11_groups_and_invariants() {
    // degree-4 invariants of G(4,2,2)
    let spec = GroupSpec::new(4, 2, 2).unwrap();
    let basis = invariant_space_degree_d(&spec, 4).unwrap();
    assert_eq!(basis.len(), 2);
    assert_eq!(basis[0], poly_from_int_terms(2, &[(1, &[4, 0]), (1, &[0, 4])]));
    assert_eq!(basis[1], poly_from_int_terms(2, &[(1, &[2, 2])]));
    // the mixing obstruction for the ternary cubic
    assert_eq!(
        gdnn_obstruction(3, 3).unwrap(),
        poly_from_int_terms(2, &[(-6, &[1, 2])])
    );
    // invariance of the named forms
    for (n, d) in [(2usize, 4u32), (3, 3), (3, 6)] {
        let full = GroupSpec::new(d, 1, n).unwrap();
        assert!(is_invariant(&fermat(n, d), &group_generators(&full).unwrap()).unwrap());
        let sub = GroupSpec::new(d, n as u32, n).unwrap();
        let prod =
            MultiPoly::monomial(n, &vec![d / n as u32; n], Scalar::from_int(1)).unwrap();
        assert!(is_invariant(&prod, &group_generators(&sub).unwrap()).unwrap());
    }
    // stabilizer routes agree on random matrices (asserted inside the call)
    let mut rng = SplitMix64::new(0xacce_0011);
    for _ in 0..100 {
        let n = 2 + rng.below(2) as usize;
        let d = 3 + rng.below(3) as u32;
        let mut sigma: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            let j = rng.below(i as u64 + 1) as usize;
            sigma.swap(i, j);
        }
        let mut rows = vec![vec![Scalar::from_int(0); n]; n];
        for (i, row) in rows.iter_mut().enumerate() {
            row[sigma[i]] = Scalar::Rat(rat(rng.nonzero_int(3), 1 + rng.below(3) as i64));
        }
        stabilizer_membership_monomial(&ScalarMatrix::from_rows(rows).unwrap(), d).unwrap();
    }
    for _ in 0..50 {
        let n = 2 + rng.below(2) as usize;
        let d = 3 + rng.below(3) as u32;
        let m = verify::random_invertible(&mut rng, n);
        stabilizer_membership_monomial(&m, d).unwrap();
    }
    println!("acceptance 11 (groups and invariants): pass");
}

#[test]
fn criterion_12_equivalence_pipeline() {
    let g = poly_from_int_terms(2, &[(2, &[3, 0]), (6, &[1, 2])]);
    let r = kayal_check(&g, None).unwrap();
    assert_eq!(r.status, KayalStatus::Equivalent);
    let mut recon = MultiPoly::zero(2);
    for (a, h) in &r.forms {
        recon = recon.add(&h.pow(3).scale_rat(a)).unwrap();
    }
    assert_eq!(recon, g, "reconstruction identity");

    let block = poly_from_int_terms(3, &[(1, &[2, 2, 0]), (1, &[0, 0, 4])]);
    let r2 = kayal_check(&block, None).unwrap();
    assert_eq!(r2.status, KayalStatus::Rejected);
    assert_eq!(r2.stage, KayalStage::LinearSolveFailed);

    let degenerate = poly_from_int_terms(2, &[(1, &[3, 0])]);
    let r3 = kayal_check(&degenerate, None).unwrap();
    assert_eq!(r3.status, KayalStatus::Rejected);
    assert_eq!(r3.stage, KayalStage::HessianZero);
    println!("acceptance 12 (equivalence pipeline): pass");
}

#[test]
fn criterion_13_hessian_equivariance() {
    let mut rng = SplitMix64::new(0xacce_0013);
    for _ in 0..100 {
        let n = 2 + rng.below(2) as usize;
        let d = 3 + rng.below(2) as u32;
        let f = verify::random_form(&mut rng, n, d, 5);
        let a = verify::random_invertible(&mut rng, n);
        let lhs = hessian_det(&f.substitute_linear(&a).unwrap());
        let det = a.det().as_rational().unwrap();
        let rhs = hessian_det(&f)
            .substitute_linear(&a)
            .unwrap()
            .scale_rat(&(&det * &det));
        assert_eq!(lhs, rhs, "n={n} d={d} f={f}");
    }
    println!("acceptance 13 (Hessian equivariance, 100 samples): pass");
}

#[test]
fn criterion_14_verification_report() {
    let first = verify::run_all();
    for i in &first {
        assert!(i.pass, "item failed: {} ({} vs {})", i.id, i.expected, i.computed);
    }
    // byte stability across two consecutive runs, through the JSON encoding
    let second = verify::run_all();
    let render = |items: &[hessmap_core::verify::CheckItem]| {
        serde_json::Value::Array(
            items
                .iter()
                .map(|i| {
                    serde_json::json!({
                        "id": i.id,
                        "paper_ref": i.paper_ref,
                        "expected": i.expected,
                        "computed": i.computed,
                        "pass": i.pass,
                    })
                })
                .collect(),
        )
        .to_string()
    };
    assert_eq!(render(&first), render(&second));
    assert!(first.len() >= 80);
    println!("acceptance 14 (verification report, byte-stable): pass");
}
