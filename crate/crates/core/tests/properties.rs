//! Property tests for the algebraic laws the crate relies on: ring axioms
//! of the sparse polynomials, field axioms of the cyclotomic numbers, the
//! homogeneity identities of Hessians, and the agreement of the two
//! differential routes.

use num_traits::Zero;
use proptest::prelude::*;

use hessmap_core::cyclotomic::CycNumber;
use hessmap_core::differential::{dhessian, dhessian_oracle};
use hessmap_core::hessian::{hessian_det, hessian_matrix};
use hessmap_core::matrix::ScalarMatrix;
use hessmap_core::monomial::{monomials_of_degree, Monomial};
use hessmap_core::poly::MultiPoly;
use hessmap_core::rational::{rat, Rational};
use hessmap_core::scalar::Scalar;
use hessmap_core::text::{format_poly, parse_poly_with_nvars};

fn arb_rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=9).prop_map(|(p, q)| rat(p, q))
}

fn arb_poly(nvars: usize, max_deg: u32, max_terms: usize) -> impl Strategy<Value = MultiPoly> {
    let term = (
        proptest::collection::vec(0u32..=max_deg, nvars),
        -9i64..=9,
    );
    proptest::collection::vec(term, 0..=max_terms).prop_map(move |terms| {
        MultiPoly::from_terms(
            nvars,
            terms.into_iter().filter_map(|(exps, c)| {
                if exps.iter().sum::<u32>() > max_deg {
                    None
                } else {
                    Some((Monomial(exps), Scalar::from_int(c)))
                }
            }),
        )
        .unwrap()
    })
}

/// Homogeneous polynomial of the given degree with small coefficients.
fn arb_homogeneous(nvars: usize, d: u32) -> impl Strategy<Value = MultiPoly> {
    let basis_size = monomials_of_degree(nvars, d).len();
    proptest::collection::vec((-6i64..=6, 0..basis_size), 1..=6).prop_map(move |picks| {
        let basis = monomials_of_degree(nvars, d);
        MultiPoly::from_terms(
            nvars,
            picks
                .into_iter()
                .map(|(c, i)| (basis[i].clone(), Scalar::from_int(c))),
        )
        .unwrap()
    })
}

fn arb_matrix(n: usize) -> impl Strategy<Value = ScalarMatrix> {
    proptest::collection::vec(
        proptest::collection::vec((-3i64..=3).prop_map(Scalar::from_int), n),
        n,
    )
    .prop_map(|rows| ScalarMatrix::from_rows(rows).unwrap())
}

fn arb_cyc(order: u32) -> impl Strategy<Value = CycNumber> {
    let phi = hessmap_core::cyclotomic::euler_phi(order) as usize;
    proptest::collection::vec(arb_rational(), phi)
        .prop_map(move |coeffs| CycNumber::from_coeffs(order, coeffs).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(
        p in arb_poly(3, 5, 8),
        q in arb_poly(3, 5, 8),
        r in arb_poly(3, 5, 8),
    ) {
        // commutativity and associativity
        prop_assert_eq!(p.add(&q).unwrap(), q.add(&p).unwrap());
        prop_assert_eq!(p.mul(&q).unwrap(), q.mul(&p).unwrap());
        prop_assert_eq!(
            p.add(&q).unwrap().add(&r).unwrap(),
            p.add(&q.add(&r).unwrap()).unwrap()
        );
        prop_assert_eq!(
            p.mul(&q).unwrap().mul(&r).unwrap(),
            p.mul(&q.mul(&r).unwrap()).unwrap()
        );
        // distributivity
        prop_assert_eq!(
            p.mul(&q.add(&r).unwrap()).unwrap(),
            p.mul(&q).unwrap().add(&p.mul(&r).unwrap()).unwrap()
        );
        // additive inverse
        prop_assert!(p.sub(&p).unwrap().is_zero());
    }

    #[test]
    fn euler_identity(f in arb_homogeneous(3, 4)) {
        // sum_i x_i dp/dx_i = d * p for homogeneous p
        let mut acc = MultiPoly::zero(3);
        for i in 0..3 {
            let xi = MultiPoly::variable(3, i).unwrap();
            acc = acc.add(&xi.mul(&f.partial_derivative(i).unwrap()).unwrap()).unwrap();
        }
        let scaled = f.scale_rat(&rat(4, 1));
        prop_assert_eq!(acc, scaled);
    }

    #[test]
    fn substitution_composes(
        f in arb_poly(2, 4, 6),
        a in arb_matrix(2),
        b in arb_matrix(2),
    ) {
        // p(A(Bx)) = p((AB) x): substituting A then B equals substituting A*B
        let lhs = f.substitute_linear(&a).unwrap().substitute_linear(&b).unwrap();
        let rhs = f.substitute_linear(&a.matmul(&b).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn canonical_format_round_trip(f in arb_poly(3, 4, 8)) {
        // different construction orders compare byte-equal after formatting
        let text = format_poly(&f);
        if !f.is_zero() {
            let reparsed = parse_poly_with_nvars(&text, Some(3)).unwrap();
            prop_assert_eq!(&reparsed, &f);
            prop_assert_eq!(format_poly(&reparsed), text);
        }
        // rebuilding from shuffled term order yields the same bytes
        let mut terms: Vec<(Monomial, Scalar)> = f
            .terms_desc()
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        terms.reverse();
        let rebuilt = MultiPoly::from_terms(3, terms).unwrap();
        prop_assert_eq!(format_poly(&rebuilt), format_poly(&f));
    }

    #[test]
    fn cyclotomic_field_axioms(
        a in arb_cyc(5),
        b in arb_cyc(5),
        c in arb_cyc(5),
    ) {
        prop_assert_eq!(
            a.mul(&b).unwrap().mul(&c).unwrap(),
            a.mul(&b.mul(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(
            a.mul(&b.add(&c).unwrap()).unwrap(),
            a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
        );
        if !a.is_zero() {
            let inv = a.inv().unwrap();
            prop_assert_eq!(a.mul(&inv).unwrap(), CycNumber::one(5));
        }
    }

    #[test]
    fn rational_ops_match_unreduced_oracle(
        (p1, q1) in (-30i64..=30, 1i64..=12),
        (p2, q2) in (-30i64..=30, 1i64..=12),
    ) {
        // naive cross-multiplication oracle, reduced only at the end
        let a = rat(p1, q1);
        let b = rat(p2, q2);
        prop_assert_eq!(&a + &b, rat(p1 * q2 + p2 * q1, q1 * q2));
        prop_assert_eq!(&a * &b, rat(p1 * p2, q1 * q2));
    }

    #[test]
    fn hessian_symmetry_and_degree_law(f in arb_homogeneous(3, 4)) {
        let m = hessian_matrix(&f);
        prop_assert!(m.is_symmetric());
        let h = hessian_det(&f);
        if !h.is_zero() {
            prop_assert!(h.is_homogeneous());
            // degree n(d-2) with n = 3, d = 4
            prop_assert_eq!(h.degree(), Some(6));
        }
    }

    #[test]
    fn hessian_equivariance(f in arb_homogeneous(2, 4), a in arb_matrix(2)) {
        prop_assume!(!a.det().is_zero());
        let lhs = hessian_det(&f.substitute_linear(&a).unwrap());
        let det = a.det().as_rational().unwrap();
        let rhs = hessian_det(&f)
            .substitute_linear(&a)
            .unwrap()
            .scale_rat(&(&det * &det));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn singular_point_lies_on_the_hessian(
        r in -4i64..=4,
        g in arb_homogeneous(2, 2),
    ) {
        // plant a double root at (r : 1): every singular point of f lies on
        // the zero set of H(f)
        prop_assume!(!g.is_zero());
        let root = rat(r, 1);
        let line = MultiPoly::from_terms(2, [
            (Monomial(vec![1, 0]), Scalar::from_int(1)),
            (Monomial(vec![0, 1]), Scalar::Rat(-root.clone())),
        ]).unwrap();
        let f = line.pow(2).mul(&g).unwrap();
        let h = hessian_det(&f);
        let at =
            h.eval(&[Scalar::Rat(root), Scalar::from_int(1)]).unwrap();
        prop_assert!(at.is_zero());
    }

    #[test]
    fn differential_routes_agree(
        f in arb_homogeneous(2, 5),
        g in arb_homogeneous(2, 5),
    ) {
        prop_assert_eq!(dhessian(&f, &g).unwrap(), dhessian_oracle(&f, &g).unwrap());
    }

    #[test]
    fn differential_is_linear(
        f in arb_homogeneous(2, 4),
        g1 in arb_homogeneous(2, 4),
        g2 in arb_homogeneous(2, 4),
        a in -5i64..=5,
        b in -5i64..=5,
    ) {
        let combo = g1.scale_rat(&rat(a, 1)).add(&g2.scale_rat(&rat(b, 1))).unwrap();
        let lhs = dhessian(&f, &combo).unwrap();
        let rhs = dhessian(&f, &g1).unwrap().scale_rat(&rat(a, 1))
            .add(&dhessian(&f, &g2).unwrap().scale_rat(&rat(b, 1))).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}

/// The pair coefficients of the binary Hessian against full symbolic
/// expansion with the a_i as auxiliary variables, exhaustively for d <= 10.
#[test]
fn pair_coefficients_match_symbolic_expansion() {
    for d in 2u32..=10 {
        // variables: x1, x2, a_0, ..., a_d
        let nv = 2 + d as usize + 1;
        let mut f = MultiPoly::zero(nv);
        for i in 0..=d {
            let mut e = vec![0u32; nv];
            e[0] = i;
            e[1] = d - i;
            e[2 + i as usize] = 1;
            f = f
                .add(&MultiPoly::monomial(nv, &e, Scalar::from_int(1)).unwrap())
                .unwrap();
        }
        let h = hessmap_core::hessian::hessian_det_wrt(&f, 2);
        for k in 0..=d as i64 {
            for l in k..=d as i64 {
                let j = k + l - 2;
                if !(0..=(2 * d as i64 - 4)).contains(&j) {
                    continue;
                }
                let mut e = vec![0u32; nv];
                e[0] = j as u32;
                e[1] = 2 * d - 4 - j as u32;
                e[2 + k as usize] += 1;
                e[2 + l as usize] += 1;
                let got = h
                    .coefficient_of(&Monomial(e))
                    .as_rational()
                    .unwrap();
                let expect =
                    hessmap_core::binary::hessian_pair_coefficient(d as i64, k, l);
                assert_eq!(got, expect, "d={d} k={k} l={l}");
            }
        }
    }
}

/// The graded rank test and the resultant-based singularity test are two
/// independent routes to the same answer on binary forms.
#[test]
fn smoothness_agrees_with_resultant_singularity() {
    use hessmap_core::binary::{is_singular, BinaryForm};
    use hessmap_core::jacobian::is_smooth;
    use hessmap_core::rng::SplitMix64;
    let mut rng = SplitMix64::new(0x0b1a_0001);
    let mut checked = 0;
    while checked < 100 {
        let d = 2 + rng.below(6) as usize; // 2..=7
        let coeffs: Vec<Rational> = (0..=d).map(|_| rat(rng.int_in(-3, 3), 1)).collect();
        let f = BinaryForm::new(coeffs);
        if f.is_zero() {
            continue;
        }
        let singular = is_singular(&f).unwrap();
        let smooth = is_smooth(&f.to_poly()).unwrap().is_smooth;
        assert_eq!(smooth, !singular, "{}", f.to_poly());
        checked += 1;
    }
}

/// The explorer's output is deterministic across runs.
#[test]
fn explorer_is_deterministic() {
    use hessmap_core::pipeline::explore_monomial_hessian;
    let set = [rat(-1, 1), rat(0, 1), rat(1, 1)];
    let a = explore_monomial_hessian(2, 4, &set, 5).unwrap();
    let b = explore_monomial_hessian(2, 4, &set, 5).unwrap();
    assert_eq!(a.len(), b.len());
    for (x, y) in a.iter().zip(&b) {
        assert_eq!(x.poly, y.poly);
        assert_eq!(x.smooth, y.smooth);
        assert_eq!(x.hessian_report, y.hessian_report);
    }
}

/// Kayal status is stable under variable permutation of the input.
#[test]
fn kayal_permutation_invariance() {
    use hessmap_core::pipeline::kayal_check;
    use hessmap_core::poly::poly_from_int_terms;
    let cases = [
        poly_from_int_terms(3, &[(1, &[2, 2, 0]), (1, &[0, 0, 4])]),
        poly_from_int_terms(2, &[(2, &[3, 0]), (6, &[1, 2])]),
        poly_from_int_terms(3, &[(1, &[3, 0, 0]), (1, &[0, 3, 0]), (1, &[0, 0, 3])]),
    ];
    for g in &cases {
        let n = g.nvars();
        let baseline = kayal_check(g, None).unwrap();
        // rotate the variables: x_i -> x_(i+1 mod n)
        let mut rows = vec![vec![Scalar::from_int(0); n]; n];
        for (i, row) in rows.iter_mut().enumerate() {
            row[(i + 1) % n] = Scalar::from_int(1);
        }
        let rot = ScalarMatrix::from_rows(rows).unwrap();
        let permuted = g.substitute_linear(&rot).unwrap();
        let out = kayal_check(&permuted, None).unwrap();
        assert_eq!(out.status, baseline.status);
        assert_eq!(out.stage, baseline.stage);
    }
}
