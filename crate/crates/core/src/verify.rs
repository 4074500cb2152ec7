//! The full identity suite: every closed-form value, classification,
//! kernel-dimension table and pipeline behavior that the crate claims is
//! re-verified here mechanically, producing a deterministic list of check
//! items. All randomized checks draw from fixed-seed generators, so two runs
//! produce byte-identical reports.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use num_traits::{Signed, Zero};

use crate::binary::{
    brute_force_singular_search, classify_singular_monomial_hessian,
    lattice_pair_factor, BinaryForm, SingularVerdict,
};
use crate::differential::{
    binary_monomial_expected_dim, dhessian, dhessian_oracle, kernel,
};
use crate::families::{
    block_coefficient_matrix, block_hessian_constant, counterexample_poly, remark_example,
    verify_counterexample, waring_rank_family, CounterexampleSpec, RemarkExampleKind,
};
use crate::groups::{
    enumerate_group, gdnn_obstruction, group_generators, invariant_space_degree_d, is_invariant,
    stabilizer_membership_monomial, GroupSpec,
};
use crate::hessian::hessian_det;
use crate::jacobian::{
    amgm_equality_scan, is_smooth, jacobian_ideal, membership_monomial, standard_monomial_count,
    MonomialIdeal,
};
use crate::matrix::ScalarMatrix;
use crate::monomial::{monomials_of_degree, Monomial};
use crate::pipeline::{kayal_check, KayalStage, KayalStatus};
use crate::poly::{poly_from_int_terms, MultiPoly};
use crate::rational::{rat, rat_int, Rational};
use crate::rng::SplitMix64;
use crate::scalar::Scalar;

/// One verified identity: what was expected, what was computed, verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckItem {
    pub id: String,
    pub paper_ref: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

fn item(id: &str, paper_ref: &str, expected: String, computed: String) -> CheckItem {
    CheckItem {
        pass: expected == computed,
        id: id.to_string(),
        paper_ref: paper_ref.to_string(),
        expected,
        computed,
    }
}

/// Runs the whole suite. Deterministic: item order, content and randomized
/// samples are all fixed.
pub fn run_all() -> Vec<CheckItem> {
    let mut items = Vec::new();
    block_constants(&mut items);
    counterexample_grid(&mut items);
    binary_cubic_expansion(&mut items);
    binary_classification(&mut items);
    lattice_sign_table(&mut items);
    differential_vs_oracle(&mut items);
    fermat_kernel_table(&mut items);
    binary_monomial_kernels(&mut items);
    kernel_bounds(&mut items);
    jacobian_ring_checks(&mut items);
    group_checks(&mut items);
    kayal_cases(&mut items);
    gl_equivariance(&mut items);
    extra_rank_record(&mut items);
    remark_examples(&mut items);
    waring_ranks(&mut items);
    items
}

pub fn fermat(n: usize, d: u32) -> MultiPoly {
    let mut f = MultiPoly::zero(n);
    for i in 0..n {
        let mut e = vec![0u32; n];
        e[i] = d;
        f = f.add(&poly_from_int_terms(n, &[(1, &e)])).unwrap();
    }
    f
}

/// Random homogeneous form with small integer coefficients and bounded
/// support, never zero.
pub fn random_form(rng: &mut SplitMix64, n: usize, d: u32, max_terms: usize) -> MultiPoly {
    let basis = monomials_of_degree(n, d);
    loop {
        let nterms = 1 + rng.below(max_terms as u64) as usize;
        let mut terms = Vec::new();
        for _ in 0..nterms {
            let m = basis[rng.below(basis.len() as u64) as usize].clone();
            terms.push((m, Scalar::from_int(rng.int_in(-4, 4))));
        }
        let p = MultiPoly::from_terms(n, terms).unwrap();
        if !p.is_zero() {
            return p;
        }
    }
}

/// Random invertible rational matrix with small integer entries.
pub fn random_invertible(rng: &mut SplitMix64, n: usize) -> ScalarMatrix {
    loop {
        let rows: Vec<Vec<Scalar>> = (0..n)
            .map(|_| (0..n).map(|_| Scalar::from_int(rng.int_in(-3, 3))).collect())
            .collect();
        let m = ScalarMatrix::from_rows(rows).unwrap();
        if !m.det().is_zero() {
            return m;
        }
    }
}

fn block_constants(items: &mut Vec<CheckItem>) {
    for q in 2u32..=4 {
        for k in 1u32..=4 {
            if q * k < 3 {
                continue;
            }
            let closed = block_hessian_constant(q, k);
            let det = block_coefficient_matrix(q, k)
                .det()
                .coefficient_of(&Monomial(vec![]))
                .as_rational()
                .unwrap();
            let block = MultiPoly::monomial(
                q as usize,
                &vec![k; q as usize],
                Scalar::from_int(1),
            )
            .unwrap();
            let h = hessian_det(&block);
            let shape = h.monomial_form().and_then(|(c, m)| {
                if m.0.iter().all(|&e| e == q * k - 2) {
                    c.as_rational()
                } else {
                    None
                }
            });
            items.push(item(
                &format!("hessian-block-constant q={q} k={k}"),
                "power-product-hessian-identity",
                format!("{closed}"),
                match (det == closed, shape) {
                    (true, Some(alpha)) => format!("{alpha}"),
                    (false, _) => format!("matrix-det {det}"),
                    (true, None) => "wrong monomial shape".to_string(),
                },
            ));
        }
    }
}

fn counterexample_grid(items: &mut Vec<CheckItem>) {
    for spec in CounterexampleSpec::grid(4, 8) {
        let rec = verify_counterexample(&spec).unwrap();
        items.push(item(
            &format!(
                "counterexample n={} d={} q={}",
                spec.n, spec.d, spec.q
            ),
            "block-family-negative-answer",
            "central monomial, singular".to_string(),
            if rec.pass {
                "central monomial, singular".to_string()
            } else {
                format!(
                    "shape_ok={} singular={} alpha={}",
                    rec.hessian_shape_ok, rec.singular, rec.alpha
                )
            },
        ));
    }
}

fn binary_cubic_expansion(items: &mut Vec<CheckItem>) {
    // variables: x1, x2, a0, a1, a2, a3; f = sum a_i x1^i x2^(3-i)
    let mut f = MultiPoly::zero(6);
    for i in 0..=3u32 {
        let mut e = vec![0u32; 6];
        e[0] = i;
        e[1] = 3 - i;
        e[2 + i as usize] = 1;
        f = f.add(&poly_from_int_terms(6, &[(1, &e)])).unwrap();
    }
    let h = crate::hessian::hessian_det_wrt(&f, 2);
    // (-4 a2^2 + 12 a3 a1) x1^2 + (-4 a2 a1 + 36 a3 a0) x1 x2
    //   + (-4 a1^2 + 12 a2 a0) x2^2
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
    items.push(item(
        "binary-cubic-hessian-expansion",
        "general-cubic-closed-form",
        "symbolic identity holds".to_string(),
        if h == expected {
            "symbolic identity holds".to_string()
        } else {
            format!("got {h}")
        },
    ));
}

fn binary_classification(items: &mut Vec<CheckItem>) {
    for d in 3u32..=9 {
        let c = classify_singular_monomial_hessian(d).unwrap();
        let expected = if d % 2 == 1 {
            "no singular solutions".to_string()
        } else {
            format!("family a*x1^{}*x2^{}", d / 2, d / 2)
        };
        let computed = match c.verdict {
            SingularVerdict::NoSingularSolutions => "no singular solutions".to_string(),
            SingularVerdict::CentralMonomialFamily => {
                format!("family {}", c.family_description.unwrap())
            }
        };
        items.push(item(
            &format!("binary-singular-classification d={d}"),
            "singular-binary-forcing",
            expected,
            computed,
        ));
    }
    // exhaustive cross-checks
    let pm1 = [rat_int(-1), rat_int(0), rat_int(1)];
    for d in 3u32..=6 {
        let hits = brute_force_singular_search(d, &pm1).unwrap();
        let in_family = hits.iter().all(|f| {
            d % 2 == 0
                && f.coeffs()
                    .iter()
                    .enumerate()
                    .all(|(i, c)| (i == d as usize / 2) != c.is_zero())
        });
        let expected = if d % 2 == 1 { 0 } else { 2 };
        items.push(item(
            &format!("binary-brute-force d={d} set=-1,0,1"),
            "singular-binary-forcing",
            format!("{expected} hits, all central"),
            format!(
                "{} hits, {}",
                hits.len(),
                if in_family { "all central" } else { "off-family hit" }
            ),
        ));
    }
    let zo = [rat_int(0), rat_int(1)];
    let hits8 = brute_force_singular_search(8, &zo).unwrap();
    items.push(item(
        "binary-brute-force d=8 set=0,1",
        "singular-binary-forcing",
        "1 hits, central".to_string(),
        format!(
            "{} hits, {}",
            hits8.len(),
            if hits8 == vec![BinaryForm::from_int_coeffs(&[0, 0, 0, 0, 1, 0, 0, 0, 0])] {
                "central"
            } else {
                "off-family"
            }
        ),
    ));
}

fn lattice_sign_table(items: &mut Vec<CheckItem>) {
    let mut ok = true;
    let mut detail = String::new();
    for p in [1i64, 4, 9, 16] {
        let sq = (1..=4).find(|s| s * s == p).unwrap();
        for s in 0..=sq {
            for r in 0..=sq {
                if (s, r) == (0, 0) {
                    continue;
                }
                // domain constraint: the monomial must exist, which excludes
                // (s + r) sqrt(p) > 2p - 2
                if (s + r) * sq > 2 * p - 2 {
                    continue;
                }
                let f = lattice_pair_factor(p, s, r);
                let expected_zero = (s == 0 && r == 1) || (s == 1 && r == 0);
                let good = if expected_zero {
                    f.is_zero()
                } else if s == r {
                    f.is_negative() // diagonal with s = r < sqrt(p)
                } else if s >= 1 && r >= 1 {
                    f.is_positive()
                } else {
                    f.is_positive() // (0, r>=2) and symmetric
                };
                if !good {
                    ok = false;
                    detail = format!("violation at p={p} s={s} r={r}: F={f}");
                }
            }
        }
    }
    items.push(item(
        "lattice-sign-table p<=16",
        "square-lattice-sign-analysis",
        "zero set {0,1}; diagonal negative; off-diagonal positive".to_string(),
        if ok {
            "zero set {0,1}; diagonal negative; off-diagonal positive".to_string()
        } else {
            detail
        },
    ));
}

fn differential_vs_oracle(items: &mut Vec<CheckItem>) {
    let mut rng = SplitMix64::new(0x5eed_0001);
    let mut agreements = 0usize;
    const SAMPLES: usize = 200;
    for _ in 0..SAMPLES {
        let n = 2 + rng.below(2) as usize; // 2 or 3
        let d = 3 + rng.below(3) as u32; // 3..=5
        let f = random_form(&mut rng, n, d, 5);
        let g = random_form(&mut rng, n, d, 5);
        if dhessian(&f, &g).unwrap() == dhessian_oracle(&f, &g).unwrap() {
            agreements += 1;
        }
    }
    items.push(item(
        "differential-vs-expansion-oracle",
        "row-replacement-differential-formula",
        format!("{SAMPLES}/{SAMPLES} agree"),
        format!("{agreements}/{SAMPLES} agree"),
    ));
}

fn fermat_kernel_table(items: &mut Vec<CheckItem>) {
    for n in 2usize..=4 {
        for d in 2u32..=6 {
            let expected = if d >= n as u32 + 1 {
                (n - 1) as u64
            } else {
                (n - 1) as u64
                    + crate::rational::binomial(n as u64, d as u64)
                        .to_string()
                        .parse::<u64>()
                        .unwrap()
            };
            let got = kernel(&fermat(n, d)).unwrap().dim as u64;
            items.push(item(
                &format!("fermat-kernel n={n} d={d}"),
                "power-sum-kernel-dimension",
                format!("dim {expected}"),
                format!("dim {got}"),
            ));
        }
    }
}

fn binary_monomial_kernels(items: &mut Vec<CheckItem>) {
    let mut all_ok = true;
    let mut detail = String::new();
    for d in 2i64..=10 {
        for k in 1..=d {
            let f = MultiPoly::monomial(
                2,
                &[k as u32, (d - k) as u32],
                Scalar::from_int(1),
            )
            .unwrap();
            let got = kernel(&f).unwrap().dim;
            let expected = binary_monomial_expected_dim(d, k);
            if got != expected {
                all_ok = false;
                detail = format!("mismatch at d={d} k={k}: {got} vs {expected}");
            }
        }
    }
    items.push(item(
        "binary-monomial-kernel-table d<=10",
        "binary-monomial-kernel-cases",
        "all dims match the case analysis".to_string(),
        if all_ok {
            "all dims match the case analysis".to_string()
        } else {
            detail
        },
    ));
    // the exceptional basis at d=8, k=4
    let f = poly_from_int_terms(2, &[(1, &[4, 4])]);
    let rep = kernel(&f).unwrap();
    let expected_basis = vec![
        poly_from_int_terms(2, &[(1, &[6, 2])]),
        poly_from_int_terms(2, &[(1, &[2, 6])]),
    ];
    items.push(item(
        "binary-monomial-kernel-basis d=8 k=4",
        "square-lattice-kernel-span",
        "x1^6*x2^2, x1^2*x2^6".to_string(),
        if rep.basis == expected_basis {
            "x1^6*x2^2, x1^2*x2^6".to_string()
        } else {
            format!("dim {}", rep.dim)
        },
    ));
}

fn kernel_bounds(items: &mut Vec<CheckItem>) {
    // prime-degree injectivity on truncated coefficient sets
    let mut rng = SplitMix64::new(0x5eed_0002);
    let mut all_zero = true;
    for d in [5i64, 7] {
        for k in 2..=d - 2 {
            for _ in 0..50 {
                let mut coeffs = vec![Rational::zero(); d as usize + 1];
                for (i, c) in coeffs.iter_mut().enumerate().skip(k as usize) {
                    *c = if i == k as usize {
                        rat_int(rng.nonzero_int(4))
                    } else {
                        rat_int(rng.int_in(-4, 4))
                    };
                }
                let f = BinaryForm::new(coeffs).to_poly();
                if kernel(&f).unwrap().dim != 0 {
                    all_zero = false;
                }
            }
        }
    }
    items.push(item(
        "prime-degree-kernel-injectivity d=5,7",
        "truncated-set-injectivity",
        "all 50-sample batches have kernel dim 0".to_string(),
        if all_zero {
            "all 50-sample batches have kernel dim 0".to_string()
        } else {
            "a sample had positive kernel dimension".to_string()
        },
    ));
    // generic bound away from d = 2m^2
    let mut rng = SplitMix64::new(0x5eed_0003);
    let mut worst = 0usize;
    for d in 3u32..=9 {
        if d == 8 {
            continue;
        }
        let mut done = 0;
        while done < 100 {
            let f = random_form(&mut rng, 2, d, (d + 1) as usize);
            if hessian_det(&f).is_zero() {
                continue;
            }
            worst = worst.max(kernel(&f).unwrap().dim);
            done += 1;
        }
    }
    items.push(item(
        "binary-kernel-bound d=3..9 except 8",
        "binary-kernel-dimension-bound",
        "max kernel dim <= 1".to_string(),
        if worst <= 1 {
            "max kernel dim <= 1".to_string()
        } else {
            format!("max kernel dim {worst}")
        },
    ));
    let exceptional = kernel(&poly_from_int_terms(2, &[(1, &[4, 4])])).unwrap().dim;
    items.push(item(
        "binary-kernel-exception d=8",
        "binary-kernel-dimension-bound",
        "dim 2 attained".to_string(),
        format!(
            "dim {} {}",
            exceptional,
            if exceptional == 2 { "attained" } else { "unexpected" }
        ),
    ));
}

fn jacobian_ring_checks(items: &mut Vec<CheckItem>) {
    let mut ok = true;
    let mut detail = String::new();
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
            let count = standard_monomial_count(&ideal);
            let expected = ((d - 1) as u64).pow(n as u32);
            if count != Some(expected) {
                ok = false;
                detail = format!("count mismatch at n={n} d={d}");
            }
            // the central monomial stays outside
            if membership_monomial(&ideal, &Monomial(vec![d - 2; n])) {
                ok = false;
                detail = format!("socle monomial absorbed at n={n} d={d}");
            }
        }
    }
    items.push(item(
        "jacobian-quotient-dimensions n<=4 d<=6",
        "power-sum-jacobian-dimension",
        "(d-1)^n standard monomials, central monomial outside".to_string(),
        if ok {
            "(d-1)^n standard monomials, central monomial outside".to_string()
        } else {
            detail
        },
    ));
    let mut scan_ok = true;
    for n in 2usize..=4 {
        for d in 3u32..=6 {
            if amgm_equality_scan(n, d) != vec![vec![d - 2; n]] {
                scan_ok = false;
            }
        }
    }
    items.push(item(
        "amgm-balance-scan n<=4 d<=6",
        "mean-inequality-equality-case",
        "only the balanced exponent vector".to_string(),
        if scan_ok {
            "only the balanced exponent vector".to_string()
        } else {
            "unbalanced solution found".to_string()
        },
    ));
}

fn group_checks(items: &mut Vec<CheckItem>) {
    // invariant space of the order-16 group in degree 4
    let spec = GroupSpec::new(4, 2, 2).unwrap();
    let basis = invariant_space_degree_d(&spec, 4).unwrap();
    let expected = vec![
        poly_from_int_terms(2, &[(1, &[4, 0]), (1, &[0, 4])]),
        poly_from_int_terms(2, &[(1, &[2, 2])]),
    ];
    items.push(item(
        "invariant-space G(4,2,2) degree 4",
        "invariant-ring-degree-slice",
        "x1^4 + x2^4, x1^2*x2^2".to_string(),
        if basis == expected {
            "x1^4 + x2^4, x1^2*x2^2".to_string()
        } else {
            format!("dim {}", basis.len())
        },
    ));
    // obstruction coefficient for the ternary cubic
    let ob = gdnn_obstruction(3, 3).unwrap();
    items.push(item(
        "mixing-obstruction n=3 d=3",
        "power-sum-product-mixing-obstruction",
        "-6*x1*x2^2".to_string(),
        format!("{ob}"),
    ));
    let mut grid_ok = true;
    for (n, d) in [(2usize, 4u32), (2, 6), (3, 6), (4, 4)] {
        let ob = gdnn_obstruction(n, d).unwrap();
        let c = ob
            .coefficient_of(&Monomial(vec![(n - 2) as u32, 2]))
            .as_rational()
            .unwrap();
        if c.is_zero() {
            grid_ok = false;
        }
    }
    items.push(item(
        "mixing-obstruction grid",
        "power-sum-product-mixing-obstruction",
        "squared-term coefficient nonzero".to_string(),
        if grid_ok {
            "squared-term coefficient nonzero".to_string()
        } else {
            "vanishing obstruction".to_string()
        },
    ));
    // invariance of the named polynomials
    let mut inv_ok = true;
    for (n, d) in [(2usize, 4u32), (3, 3), (3, 6)] {
        let full = GroupSpec::new(d, 1, n).unwrap();
        let gens = group_generators(&full).unwrap();
        if !is_invariant(&fermat(n, d), &gens).unwrap() {
            inv_ok = false;
        }
        let sub = GroupSpec::new(d, n as u32, n).unwrap();
        let gens_sub = group_generators(&sub).unwrap();
        let prod = MultiPoly::monomial(n, &vec![d / n as u32; n], Scalar::from_int(1)).unwrap();
        if !is_invariant(&prod, &gens_sub).unwrap() {
            inv_ok = false;
        }
    }
    items.push(item(
        "named-stabilizer-invariance",
        "stabilizers-of-named-forms",
        "power sum and product power fixed by their groups".to_string(),
        if inv_ok {
            "power sum and product power fixed by their groups".to_string()
        } else {
            "an invariance check failed".to_string()
        },
    ));
    // group closure orders
    let mut orders_ok = true;
    for (d, e, n) in [(2u32, 1u32, 2usize), (3, 1, 2), (4, 1, 2), (2, 1, 3), (2, 2, 2), (4, 2, 2), (3, 3, 3)] {
        let spec = GroupSpec::new(d, e, n).unwrap();
        let group = enumerate_group(&group_generators(&spec).unwrap(), 10_000).unwrap();
        if group.len() as u64 != spec.order() {
            orders_ok = false;
        }
    }
    items.push(item(
        "group-closure-orders",
        "monomial-group-orders",
        "enumerated orders match d^n n! (over e)".to_string(),
        if orders_ok {
            "enumerated orders match d^n n! (over e)".to_string()
        } else {
            "an order mismatched".to_string()
        },
    ));
    // structural vs substitution stabilizer test on random matrices
    let mut rng = SplitMix64::new(0x5eed_0004);
    let mut agree = 0usize;
    let mut members = 0usize;
    const GP_SAMPLES: usize = 200;
    for _ in 0..GP_SAMPLES {
        let n = 2 + rng.below(2) as usize;
        let d = 3 + rng.below(3) as u32;
        // random generalized permutation matrix with rational scalars
        let mut sigma: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            let j = rng.below(i as u64 + 1) as usize;
            sigma.swap(i, j);
        }
        let mut rows = vec![vec![Scalar::from_int(0); n]; n];
        for (i, row) in rows.iter_mut().enumerate() {
            let num = rng.nonzero_int(3);
            let den = 1 + rng.below(3) as i64;
            row[sigma[i]] = Scalar::Rat(rat(num, den));
        }
        let m = ScalarMatrix::from_rows(rows).unwrap();
        // the call asserts internally that both routes agree
        if stabilizer_membership_monomial(&m, d).unwrap() {
            members += 1;
        }
        agree += 1;
    }
    const DENSE_SAMPLES: usize = 50;
    for _ in 0..DENSE_SAMPLES {
        let n = 2 + rng.below(2) as usize;
        let d = 3 + rng.below(3) as u32;
        let m = random_invertible(&mut rng, n);
        stabilizer_membership_monomial(&m, d).unwrap();
        agree += 1;
    }
    // the member count is deterministic under the fixed seed, so it can sit
    // in the expected string without hurting byte stability
    let total = GP_SAMPLES + DENSE_SAMPLES;
    items.push(item(
        "central-monomial-stabilizer-routes",
        "central-monomial-stabilizer",
        format!("{total}/{total} agree"),
        format!("{agree}/{total} agree"),
    ));
    let _ = members;
}

fn kayal_cases(items: &mut Vec<CheckItem>) {
    let g = poly_from_int_terms(2, &[(2, &[3, 0]), (6, &[1, 2])]);
    let r = kayal_check(&g, None).unwrap();
    let mut recon = MultiPoly::zero(2);
    for (a, f) in &r.forms {
        recon = recon.add(&f.pow(3).scale_rat(a)).unwrap();
    }
    items.push(item(
        "kayal-equivalent 2x1^3+6x1x2^2",
        "equivalence-pipeline",
        "Equivalent, reconstruction exact".to_string(),
        if r.status == KayalStatus::Equivalent && recon == g {
            "Equivalent, reconstruction exact".to_string()
        } else {
            format!("{:?}/{:?}", r.status, r.stage)
        },
    ));
    let degenerate = poly_from_int_terms(2, &[(1, &[3, 0])]);
    let r2 = kayal_check(&degenerate, None).unwrap();
    items.push(item(
        "kayal-degenerate x1^3",
        "equivalence-pipeline",
        "Rejected at HessianZero".to_string(),
        if r2.status == KayalStatus::Rejected && r2.stage == KayalStage::HessianZero {
            "Rejected at HessianZero".to_string()
        } else {
            format!("{:?}/{:?}", r2.status, r2.stage)
        },
    ));
    let block = poly_from_int_terms(3, &[(1, &[2, 2, 0]), (1, &[0, 0, 4])]);
    let r3 = kayal_check(&block, None).unwrap();
    items.push(item(
        "kayal-block (x1x2)^2+x3^4",
        "equivalence-pipeline",
        "Rejected at LinearSolveFailed".to_string(),
        if r3.status == KayalStatus::Rejected && r3.stage == KayalStage::LinearSolveFailed {
            "Rejected at LinearSolveFailed".to_string()
        } else {
            format!("{:?}/{:?}", r3.status, r3.stage)
        },
    ));
}

fn gl_equivariance(items: &mut Vec<CheckItem>) {
    let mut rng = SplitMix64::new(0x5eed_0005);
    let mut good = 0usize;
    const SAMPLES: usize = 100;
    for _ in 0..SAMPLES {
        let n = 2 + rng.below(2) as usize;
        let d = 3 + rng.below(2) as u32;
        let f = random_form(&mut rng, n, d, 5);
        let a = random_invertible(&mut rng, n);
        let lhs = hessian_det(&f.substitute_linear(&a).unwrap());
        let det = a.det().as_rational().unwrap();
        let rhs = hessian_det(&f)
            .substitute_linear(&a)
            .unwrap()
            .scale_rat(&(&det * &det));
        if lhs == rhs {
            good += 1;
        }
    }
    items.push(item(
        "hessian-equivariance",
        "determinant-squared-equivariance",
        format!("{SAMPLES}/{SAMPLES} exact"),
        format!("{good}/{SAMPLES} exact"),
    ));
}

fn extra_rank_record(items: &mut Vec<CheckItem>) {
    // kernel at a rank-(n+1) style instance; the value is recorded, not
    // asserted against a closed form
    let g = poly_from_int_terms(2, &[(1, &[4, 0]), (1, &[0, 4])])
        .add(&poly_from_int_terms(2, &[(1, &[1, 0]), (1, &[0, 1])]).pow(4))
        .unwrap();
    let dim = kernel(&g).unwrap().dim;
    items.push(item(
        "kernel-at-rank-n-plus-1 n=2 d=4",
        "rank-excess-kernel-record",
        format!("recorded: dim {dim}"),
        format!("recorded: dim {dim}"),
    ));
}

fn remark_examples(items: &mut Vec<CheckItem>) {
    for k in 2u32..=5 {
        let (f, expected) = remark_example(RemarkExampleKind::TangentCone, k).unwrap();
        let got = hessian_det(&f);
        items.push(item(
            &format!("tangent-cone-example k={k}"),
            "non-central-monomial-hessians",
            format!("{expected}"),
            format!("{got}"),
        ));
    }
    for n in 3u32..=5 {
        let (g, expected) = remark_example(RemarkExampleKind::QuadricTangent, n).unwrap();
        let got = hessian_det(&g);
        let smooth = is_smooth(&g).unwrap().is_smooth;
        items.push(item(
            &format!("quadric-tangent-example n={n}"),
            "non-central-monomial-hessians",
            format!("{expected}, singular"),
            format!("{got}, {}", if smooth { "smooth" } else { "singular" }),
        ));
    }
}

fn waring_ranks(items: &mut Vec<CheckItem>) {
    let mut ok = true;
    for spec in CounterexampleSpec::grid(4, 8) {
        let rank = waring_rank_family(spec.n, spec.q, spec.k());
        if rank <= spec.n as u64 {
            ok = false;
        }
    }
    let spot = waring_rank_family(3, 2, 2);
    items.push(item(
        "waring-rank-excess",
        "coprime-monomial-sum-rank",
        "rank > n on the whole grid; rank(3,2,2) = 4".to_string(),
        if ok && spot == 4 {
            "rank > n on the whole grid; rank(3,2,2) = 4".to_string()
        } else {
            format!("spot value {spot}")
        },
    ));
    // smoothness side of the family used by the rank argument
    let spec = CounterexampleSpec::new(3, 4, 2).unwrap();
    let g = counterexample_poly(&spec);
    let sing = !is_smooth(&g).unwrap().is_smooth;
    let j = jacobian_ideal(&g).unwrap();
    items.push(item(
        "family-jacobian-structure n=3 d=4 q=2",
        "block-family-negative-answer",
        "3 monomial generators, singular".to_string(),
        format!(
            "{} monomial generators, {}",
            j.iter().filter(|p| p.is_monomial()).count(),
            if sing { "singular" } else { "smooth" }
        ),
    ));
}

/// Convenience: true iff every item passes.
pub fn all_pass(items: &[CheckItem]) -> bool {
    items.iter().all(|i| i.pass)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_is_deterministic() {
        let a = run_all();
        let b = run_all();
        assert_eq!(a, b);
        assert!(!a.is_empty());
    }
}
