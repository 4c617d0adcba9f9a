//! Acceptance suite. Every criterion is exact arithmetic; tolerance is exact
//! equality throughout. Each test prints one `[ACCEPTANCE] ...` line on
//! success (run with `cargo test --test acceptance -- --show-output` to see
//! them).

use num_traits::{One, Zero};
use proptest::prelude::*;

use liebialg::bialgebra::{
    annihilator, coisotropy_report, double_embedding, drinfeld_double, dual_bracket,
    dual_ideal_witness, is_r_matrix, manin_triple_check,
};
use liebialg::classical::{
    admissible_roots, build_series, reproduce_families, satisfies_string_condition,
    standard_family, standard_r_matrix, Series,
};
use liebialg::construction::{
    construct, group_bivector, inversion_check, sharp_image, subspace_from_group,
};
use liebialg::liealg::{sl2, su2, LieAlgebra};
use liebialg::linalg::{unit_vector, Matrix};
use liebialg::multivector::{schouten, Multivector};
use liebialg::scalar::{GaussRational, Rational, Scalar};
use liebialg::subspace::{Ambient, Subspace};

fn rat(n: i64) -> Rational {
    Rational::from_int(n)
}

fn vecq(coords: &[i64]) -> Vec<Rational> {
    coords.iter().map(|&n| rat(n)).collect()
}

fn matq(rows: &[&[i64]]) -> Matrix<Rational> {
    Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&n| rat(n)).collect()).collect())
}

fn span3(rows: &[&[i64]]) -> Subspace<Rational> {
    Subspace::from_spanning(Ambient::Algebra, 3, rows.iter().map(|r| vecq(r)).collect())
}

fn pi_sl2() -> Multivector<Rational> {
    Multivector::from_terms(3, 2, vec![(vec![1, 2], rat(2))]).unwrap()
}

#[test]
fn c1_sl2_element_route() {
    let alg = sl2::<Rational>();
    let pi = pi_sl2();
    assert!(is_r_matrix(&alg, &pi).unwrap());

    let zero = Subspace::zero(Ambient::Algebra, 3);
    let upper = span3(&[&[1, 0, 0], &[0, 1, 1]]);
    let lower = span3(&[&[1, 0, 0], &[0, 1, -1]]);
    let cases: [(&[i64], &Subspace<Rational>); 5] = [
        (&[1, 0, 0], &zero),
        (&[0, 1, 1], &upper),
        (&[0, 1, -1], &lower),
        (&[1, 1, 1], &upper),
        (&[1, 1, -1], &lower),
    ];
    for (x, expected) in cases {
        let report = construct(&alg, &pi, &vecq(x)).unwrap();
        assert!(report.condition.holds, "condition must hold for {x:?}");
        assert_eq!(&report.subspace, expected, "subspace for {x:?}");
        assert!(report.is_coisotropic(), "coisotropy for {x:?}");
    }
    let report = construct(&alg, &pi, &vecq(&[0, 1, 0])).unwrap();
    assert!(!report.condition.holds, "X = e2 must fail the condition");

    println!("[ACCEPTANCE] 1a sl(2) element route: PASS");
}

#[test]
fn c1_sl2_group_route() {
    let alg = sl2::<Rational>();
    let pi = pi_sl2();
    let upper_family = span3(&[&[1, 0, 0], &[0, 1, 1]]);
    let lower_family = span3(&[&[1, 0, 0], &[0, 1, -1]]);

    // Upper-triangular elements with b != 0 all give span{e1, e2+e3}: the
    // unipotent part of such a g is exp of an upper-triangular nilpotent,
    // i.e. exp of a multiple of e2+e3, and the element route sends e2+e3 to
    // span{e1, e2+e3} (criterion 1a). The two routes are checked against
    // each other below.
    let halves = Rational::from_fraction(1, 2);
    let upper_elements = [
        matq(&[&[1, 1], &[0, 1]]),
        matq(&[&[1, -3], &[0, 1]]),
        Matrix::from_rows(vec![
            vec![rat(2), rat(5)],
            vec![rat(0), halves.clone()],
        ]),
    ];
    for g in &upper_elements {
        let report = subspace_from_group(&alg, &pi, g).unwrap();
        assert!(report.flat);
        assert_eq!(report.subspace, upper_family);
        assert!(report.is_coisotropic());
    }
    let lower_elements = [
        matq(&[&[1, 0], &[-1, 1]]),
        matq(&[&[1, 0], &[4, 1]]),
        Matrix::from_rows(vec![
            vec![halves.clone(), rat(0)],
            vec![rat(7), rat(2)],
        ]),
    ];
    for g in &lower_elements {
        let report = subspace_from_group(&alg, &pi, g).unwrap();
        assert!(report.flat);
        assert_eq!(report.subspace, lower_family);
        assert!(report.is_coisotropic());
    }
    let diagonals = [
        Matrix::from_rows(vec![vec![rat(3), rat(0)], vec![rat(0), Rational::from_fraction(1, 3)]]),
        Matrix::from_rows(vec![vec![halves, rat(0)], vec![rat(0), rat(2)]]),
    ];
    for g in &diagonals {
        let report = subspace_from_group(&alg, &pi, g).unwrap();
        assert!(report.subspace.is_zero());
    }

    println!("[ACCEPTANCE] 1b sl(2) group route: PASS (upper b!=0 -> span{{e1,e2+e3}}, lower c!=0 -> span{{e1,e2-e3}}, diagonal -> 0)");
}

#[test]
fn c1_group_route_agrees_with_element_route() {
    // exp is exact on nilpotents: exp(t(e2+e3)) = I + t(e2+e3) is upper
    // triangular with b = t, and exp(t(e2-e3)) is lower triangular. The
    // subspace attached to exp(X) must be the subspace built from X.
    let alg = sl2::<Rational>();
    let pi = pi_sl2();
    for t in [1i64, 2, -3] {
        let x_upper = vecq(&[0, t, t]);
        let g_upper = matq(&[&[1, t], &[0, 1]]);
        let by_x = sharp_image(&alg, &pi, &x_upper).unwrap();
        let by_g = subspace_from_group(&alg, &pi, &g_upper).unwrap().subspace;
        assert_eq!(by_x, by_g, "upper route mismatch at t = {t}");

        let x_lower = vecq(&[0, t, -t]);
        let g_lower = matq(&[&[1, 0], &[-t, 1]]);
        let by_x = sharp_image(&alg, &pi, &x_lower).unwrap();
        let by_g = subspace_from_group(&alg, &pi, &g_lower).unwrap().subspace;
        assert_eq!(by_x, by_g, "lower route mismatch at t = {t}");
    }
    println!("[ACCEPTANCE] 1c exp-element and group routes agree: PASS");
}

#[test]
fn c2_su2_multiples_of_e1() {
    let alg = su2::<Rational>();
    let pi = pi_sl2();
    assert!(is_r_matrix(&alg, &pi).unwrap());
    for c in [1i64, 2, -3] {
        let report = construct(&alg, &pi, &vecq(&[c, 0, 0])).unwrap();
        assert!(report.condition.holds);
        assert!(report.subspace.is_zero(), "c = {c} must give the zero subspace");
        assert!(report.is_coisotropic());
    }
    println!("[ACCEPTANCE] 2 su(2) suite: PASS");
}

#[test]
fn c3_product_leaves_the_good_set() {
    let alg = sl2::<Rational>();
    let pi = pi_sl2();
    let g = matq(&[&[1, 1], &[0, 1]]);
    let h = matq(&[&[1, 0], &[-1, 1]]);
    let gh = g.mul(&h);
    assert_eq!(gh, matq(&[&[0, 1], &[-1, 1]]));

    // pi - Ad_gh pi = 2(e1^e2 + 2 e2^e3 - e1^e3), exactly
    let eta = group_bivector(&alg, &pi, &gh).unwrap();
    let expected = Multivector::from_terms(
        3,
        2,
        vec![
            (vec![0, 1], rat(2)),
            (vec![1, 2], rat(4)),
            (vec![0, 2], rat(-2)),
        ],
    )
    .unwrap();
    assert_eq!(eta, expected);

    let report = subspace_from_group(&alg, &pi, &gh).unwrap();
    assert!(!report.is_subalgebra());

    assert!(inversion_check(&alg, &pi, &g).unwrap());
    assert!(inversion_check(&alg, &pi, &h).unwrap());

    println!("[ACCEPTANCE] 3 product of good elements leaves the good set: PASS");
}

#[test]
fn c4_reproduce_all_series() {
    for (series, ranks) in [
        (Series::A, 1..=4usize),
        (Series::B, 2..=4),
        (Series::C, 2..=4),
        (Series::D, 3..=4),
    ] {
        for rank in ranks {
            let rows = reproduce_families::<Rational>(series, rank).unwrap();
            assert!(!rows.is_empty());
            for row in &rows {
                assert!(
                    row.matched,
                    "{:?}{} root {}: constructed family differs from the tabulated one",
                    series, rank, row.root
                );
                assert!(row.report.condition.holds);
                assert!(row.report.is_coisotropic());
            }
        }
    }

    // the explicit sl(3) matrix family at E13
    let (alg3, rd3) = build_series::<Rational>(Series::A, 2).unwrap();
    let pi3 = standard_r_matrix(&alg3, &rd3).unwrap();
    let e13 = rd3
        .generator_vector(&rd3.parse_root("L1-L3").unwrap())
        .unwrap();
    let constructed = construct(&alg3, &pi3, &e13).unwrap().subspace;
    let family_rows: Vec<Vec<Rational>> = [
        matq(&[&[1, 0, 0], &[0, 0, 0], &[0, 0, -1]]), // a
        matq(&[&[0, 1, 0], &[0, 0, 0], &[0, 0, 0]]),  // b
        matq(&[&[0, 0, 1], &[0, 0, 0], &[0, 0, 0]]),  // c
        matq(&[&[0, 0, 0], &[0, 0, 1], &[0, 0, 0]]),  // d
    ]
    .iter()
    .map(|m| rd3.coordinates(m).unwrap())
    .collect();
    let family = Subspace::from_spanning(Ambient::Algebra, alg3.dim(), family_rows);
    assert_eq!(constructed, family);

    // the two explicit sp(4) matrix families
    let (alg4, rd4) = build_series::<Rational>(Series::C, 2).unwrap();
    let pi4 = standard_r_matrix(&alg4, &rd4).unwrap();
    let u2 = rd4
        .generator_vector(&rd4.parse_root("2L2").unwrap())
        .unwrap();
    let constructed = construct(&alg4, &pi4, &u2).unwrap().subspace;
    let family_rows: Vec<Vec<Rational>> = [
        matq(&[&[0, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 0, 0], &[0, 0, 0, -1]]), // a
        matq(&[&[0, 0, 0, 0], &[0, 0, 0, 1], &[0, 0, 0, 0], &[0, 0, 0, 0]]),  // b
    ]
    .iter()
    .map(|m| rd4.coordinates(m).unwrap())
    .collect();
    let family = Subspace::from_spanning(Ambient::Algebra, alg4.dim(), family_rows);
    assert_eq!(constructed, family);

    let u1 = rd4
        .generator_vector(&rd4.parse_root("2L1").unwrap())
        .unwrap();
    let constructed = construct(&alg4, &pi4, &u1).unwrap().subspace;
    let family_rows: Vec<Vec<Rational>> = [
        matq(&[&[1, 0, 0, 0], &[0, 0, 0, 0], &[0, 0, -1, 0], &[0, 0, 0, 0]]), // a
        matq(&[&[0, 0, 1, 0], &[0, 0, 0, 0], &[0, 0, 0, 0], &[0, 0, 0, 0]]),  // b
        matq(&[&[0, 1, 0, 0], &[0, 0, 0, 0], &[0, 0, 0, 0], &[0, 0, -1, 0]]), // c
        matq(&[&[0, 0, 0, 1], &[0, 0, 1, 0], &[0, 0, 0, 0], &[0, 0, 0, 0]]),  // d
    ]
    .iter()
    .map(|m| rd4.coordinates(m).unwrap())
    .collect();
    let family = Subspace::from_spanning(Ambient::Algebra, alg4.dim(), family_rows);
    assert_eq!(constructed, family);

    println!("[ACCEPTANCE] 4 classical family reproduction (A1-4, B2-4, C2-4, D3-4 + explicit matrix families): PASS");
}

#[test]
fn c5_string_condition_census() {
    for rank in 1..=4usize {
        let (_, rd) = build_series::<Rational>(Series::A, rank).unwrap();
        for root in rd.roots() {
            assert!(satisfies_string_condition(&rd, root).unwrap());
        }
    }
    for rank in 2..=4usize {
        let (_, rd) = build_series::<Rational>(Series::D, rank).unwrap();
        for root in rd.roots() {
            assert!(satisfies_string_condition(&rd, root).unwrap());
        }
    }
    for rank in 2..=4usize {
        let (_, rd) = build_series::<Rational>(Series::B, rank).unwrap();
        for root in rd.roots() {
            let long = root.0.iter().filter(|&&c| c != 0).count() == 2;
            assert_eq!(satisfies_string_condition(&rd, root).unwrap(), long);
        }
        let (_, rd) = build_series::<Rational>(Series::C, rank).unwrap();
        for root in rd.roots() {
            let doubled = root.0.iter().any(|&c| c.abs() == 2);
            assert_eq!(satisfies_string_condition(&rd, root).unwrap(), doubled);
        }
    }
    println!("[ACCEPTANCE] 5 string-condition census (ranks <= 4): PASS");
}

#[test]
fn c6_annihilator_closed_but_not_an_ideal() {
    let (alg, rd) = build_series::<Rational>(Series::A, 2).unwrap();
    let pi = standard_r_matrix(&alg, &rd).unwrap();
    let e13 = rd
        .generator_vector(&rd.parse_root("L1-L3").unwrap())
        .unwrap();
    let report = construct(&alg, &pi, &e13).unwrap();
    assert!(report.coisotropy.annihilator_closed());
    assert!(report.is_coisotropic());

    // the annihilator is a subalgebra of the dual but not an ideal
    let ann = annihilator(&report.subspace);
    assert!(dual_ideal_witness(&alg, &pi, &ann).unwrap().is_some());

    // <[(E12)*, (H1-H2)*], E12> != 0 in the dual of the working basis
    let e12_idx = rd
        .generator_index(&rd.parse_root("L1-L2").unwrap())
        .unwrap();
    let h12_idx = rd.cartan_indices()[0]; // slot of H1-H2
    let xi = unit_vector::<Rational>(alg.dim(), e12_idx);
    let zeta = unit_vector::<Rational>(alg.dim(), h12_idx);
    assert!(ann.contains(&zeta), "(H1-H2)* lies in the annihilator");
    let bracket = dual_bracket(&alg, &pi, &xi, &zeta).unwrap();
    assert!(!bracket[e12_idx].is_zero());

    println!("[ACCEPTANCE] 6 annihilator is a subalgebra but not an ideal: PASS");
}

// --- criterion 7: randomized property suites -------------------------------

/// Pool of small Lie algebras paired with an r-matrix each.
fn r_matrix_pool(idx: usize) -> (LieAlgebra<Rational>, Multivector<Rational>) {
    match idx % 5 {
        0 => (sl2(), pi_sl2()),
        1 => (su2(), pi_sl2()),
        2 => {
            let heis = LieAlgebra::from_structure(
                3,
                vec!["x".into(), "y".into(), "z".into()],
                vec![(0, 1, vec![(2, rat(1))])],
            )
            .unwrap();
            let pi = Multivector::from_terms(3, 2, vec![(vec![0, 1], rat(1))]).unwrap();
            (heis, pi)
        }
        3 => {
            let abelian =
                LieAlgebra::from_structure(4, (0..4).map(|i| format!("a{i}")).collect(), vec![])
                    .unwrap();
            let pi = Multivector::from_terms(
                4,
                2,
                vec![(vec![0, 2], rat(3)), (vec![1, 3], rat(-2))],
            )
            .unwrap();
            (abelian, pi)
        }
        _ => {
            let solvable = LieAlgebra::from_structure(
                4,
                (0..4).map(|i| format!("s{i}")).collect(),
                vec![
                    (0, 1, vec![(1, rat(1))]),
                    (0, 2, vec![(2, rat(1))]),
                    (0, 3, vec![(3, rat(2))]),
                    (1, 2, vec![(3, rat(1))]),
                ],
            )
            .unwrap();
            let pi = Multivector::from_terms(4, 2, vec![(vec![1, 3], rat(1))]).unwrap();
            (solvable, pi)
        }
    }
}

fn arb_vec(dim: usize) -> impl Strategy<Value = Vec<Rational>> {
    proptest::collection::vec((-4i64..=4).prop_map(rat), dim)
}

fn arb_mv(dim: usize, degree: usize) -> impl Strategy<Value = Multivector<Rational>> {
    let keys: Vec<Vec<usize>> = match degree {
        1 => (0..dim).map(|i| vec![i]).collect(),
        _ => {
            let mut v = Vec::new();
            for i in 0..dim {
                for j in (i + 1)..dim {
                    v.push(vec![i, j]);
                }
            }
            v
        }
    };
    proptest::collection::vec(-3i64..=3, keys.len()).prop_map(move |coeffs| {
        Multivector::from_terms(
            dim,
            degree,
            keys.iter()
                .cloned()
                .zip(coeffs.iter().map(|&n| rat(n)))
                .collect(),
        )
        .unwrap()
    })
}

/// Mix of arbitrary elements and elements known to satisfy the scaling
/// condition, so the implication tests fire on both branches.
fn arb_candidate(idx: usize, dim: usize) -> BoxedStrategy<Vec<Rational>> {
    let structured = match idx % 5 {
        0 | 1 => Some(
            (-3i64..=3, -3i64..=3, proptest::bool::ANY)
                .prop_map(|(a, b, minus)| {
                    let s = if minus { -b } else { b };
                    vec![rat(a), rat(b), rat(s)]
                })
                .boxed(),
        ),
        _ => None,
    };
    match structured {
        Some(s) => proptest::strategy::Union::new(vec![arb_vec(dim).boxed(), s]).boxed(),
        None => arb_vec(dim).boxed(),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn c7_schouten_graded_antisymmetry((idx, p, q) in (0usize..5, 1usize..=2, 1usize..=2).prop_flat_map(|(idx, dp, dq)| {
        let dim = r_matrix_pool(idx).0.dim();
        (Just(idx), arb_mv(dim, dp), arb_mv(dim, dq))
    })) {
        let (alg, _) = r_matrix_pool(idx);
        let lhs = schouten(&alg, &p, &q).unwrap();
        let mut rhs = schouten(&alg, &q, &p).unwrap();
        if ((p.degree() - 1) * (q.degree() - 1)) % 2 == 0 {
            rhs = rhs.neg();
        }
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn c7_schouten_graded_leibniz((idx, p, q, r) in (0usize..5).prop_flat_map(|idx| {
        let dim = r_matrix_pool(idx).0.dim();
        (Just(idx), arb_mv(dim, 2), arb_mv(dim, 1), arb_mv(dim, 1))
    })) {
        let (alg, _) = r_matrix_pool(idx);
        // [p, q ^ r] = [p, q] ^ r + (-1)^{(|p|-1)|q|} q ^ [p, r]
        let lhs = schouten(&alg, &p, &q.wedge(&r).unwrap()).unwrap();
        let t1 = schouten(&alg, &p, &q).unwrap().wedge(&r).unwrap();
        let t2 = q.wedge(&schouten(&alg, &p, &r).unwrap()).unwrap().neg();
        prop_assert_eq!(lhs, t1.add(&t2));
    }

    #[test]
    fn c7_schouten_graded_jacobi((idx, x, p, q) in (0usize..5).prop_flat_map(|idx| {
        let dim = r_matrix_pool(idx).0.dim();
        (Just(idx), arb_mv(dim, 1), arb_mv(dim, 2), arb_mv(dim, 2))
    })) {
        let (alg, _) = r_matrix_pool(idx);
        // [x, [p, q]] = [[x, p], q] + [p, [x, q]]
        let lhs = schouten(&alg, &x, &schouten(&alg, &p, &q).unwrap()).unwrap();
        let r1 = schouten(&alg, &schouten(&alg, &x, &p).unwrap(), &q).unwrap();
        let r2 = schouten(&alg, &p, &schouten(&alg, &x, &q).unwrap()).unwrap();
        prop_assert_eq!(lhs, r1.add(&r2));
    }

    #[test]
    fn c7_construction_properties((idx, x, c) in (0usize..5).prop_flat_map(|idx| {
        let dim = r_matrix_pool(idx).0.dim();
        (Just(idx), arb_candidate(idx, dim), (1i64..=5))
    })) {
        let (alg, pi) = r_matrix_pool(idx);
        let report = construct(&alg, &pi, &x).unwrap();
        // even dimension, always
        prop_assert_eq!(report.dim() % 2, 0);
        // [[X,pi],[X,pi]] = 0 whenever the scaling condition holds
        if report.condition.holds {
            let b = &report.condition.bracket_x_pi;
            prop_assert!(schouten(&alg, b, b).unwrap().is_zero());
            prop_assert!(report.is_coisotropic());
        }
        // the image is invariant under scaling pi
        let scaled = pi.scale(&rat(c));
        prop_assert_eq!(sharp_image(&alg, &scaled, &x).unwrap(), report.subspace);
    }

    #[test]
    fn c7_sl2_group_chain(words in proptest::collection::vec((0usize..3, -3i64..=3, 1i64..=3), 1..=4)) {
        // random rational SL(2) elements as words in elementary matrices
        let alg = sl2::<Rational>();
        let pi = pi_sl2();
        let mut g: Matrix<Rational> = Matrix::identity(2);
        for (kind, num, den) in words {
            let t = Rational::from_fraction(num, den);
            let factor = match kind {
                0 => {
                    let mut m = Matrix::identity(2);
                    m[(0, 1)] = t;
                    m
                }
                1 => {
                    let mut m = Matrix::identity(2);
                    m[(1, 0)] = t;
                    m
                }
                _ => {
                    let u = Rational::from_fraction(num.abs().max(1), den);
                    let mut m = Matrix::zero(2, 2);
                    m[(0, 0)] = u.clone();
                    m[(1, 1)] = Rational::one() / u;
                    m
                }
            };
            g = g.mul(&factor);
        }
        // flat => subalgebra => coisotropic is asserted inside; a violation
        // would surface as an error
        let report = subspace_from_group(&alg, &pi, &g).unwrap();
        prop_assert_eq!(report.dim() % 2, 0);
        if report.flat {
            prop_assert!(report.is_subalgebra() && report.is_coisotropic());
        }
        if report.is_subalgebra() {
            prop_assert!(report.is_coisotropic());
        }
    }
}

#[test]
fn c7_banner() {
    println!("[ACCEPTANCE] 7 randomized property suites (1000 cases each): PASS (see c7_* tests)");
}

#[test]
fn c8_double_suite() {
    // Drinfeld double of the reference sl(2) and of sl(3)
    let alg2 = sl2::<Rational>();
    let d2 = drinfeld_double(&alg2, &pi_sl2()).unwrap();
    assert_eq!(d2.algebra.jacobi_check(), None);
    assert_eq!(d2.pairing_invariance_witness(), None);

    let (alg3, rd3) = build_series::<Rational>(Series::A, 2).unwrap();
    let pi3 = standard_r_matrix(&alg3, &rd3).unwrap();
    let d3 = drinfeld_double(&alg3, &pi3).unwrap();
    assert_eq!(d3.algebra.jacobi_check(), None);
    assert_eq!(d3.pairing_invariance_witness(), None);

    // k + k^o is lagrangian for every tabulated family at rank <= 3
    for (series, ranks) in [
        (Series::A, 1..=3usize),
        (Series::B, 2..=3),
        (Series::C, 2..=3),
        (Series::D, 3..=3),
    ] {
        for rank in ranks {
            let (alg, rd) = build_series::<Rational>(series, rank).unwrap();
            let pi = standard_r_matrix(&alg, &rd).unwrap();
            let double = drinfeld_double(&alg, &pi).unwrap();
            for root in admissible_roots(&rd).unwrap() {
                let family = standard_family::<Rational>(series, rank, &root).unwrap();
                let report = coisotropy_report(&alg, &pi, &family).unwrap();
                assert!(report.is_coisotropic(), "{series:?}{rank} {root}");
                let embedded = double_embedding(&family);
                assert!(
                    double.is_lagrangian(&embedded).unwrap(),
                    "{series:?}{rank} {root}: double embedding is not lagrangian"
                );
            }
        }
    }

    // Manin triple self-test on g + g for sl(2) and sl(3)
    for rank in [1usize, 2] {
        let (alg, rd) = build_series::<Rational>(Series::A, rank).unwrap();
        let pi = standard_r_matrix(&alg, &rd).unwrap();
        let report = manin_triple_check(
            &alg,
            &pi,
            &rd.cartan_indices(),
            &rd.positive_indices(),
            &rd.negative_indices(),
        )
        .unwrap();
        assert!(report.diagonal_lagrangian, "A{rank}: diagonal not lagrangian");
        assert!(report.split_lagrangian, "A{rank}: split half not lagrangian");
        assert!(
            report.cobracket_recovered,
            "A{rank}: induced cobracket differs from [pi, .]"
        );
    }

    println!("[ACCEPTANCE] 8 double suite (Jacobi, pairing, lagrangian embeddings, Manin triple): PASS");
}

#[test]
fn complex_coefficient_extension_a2() {
    // the A_2 pipeline runs unchanged over the Gaussian rationals
    let (alg, rd) = build_series::<GaussRational>(Series::A, 2).unwrap();
    let pi = standard_r_matrix(&alg, &rd).unwrap();
    assert!(is_r_matrix(&alg, &pi).unwrap());
    let e13 = rd
        .generator_vector(&rd.parse_root("L1-L3").unwrap())
        .unwrap();
    let report = construct(&alg, &pi, &e13).unwrap();
    assert!(report.condition.holds);
    assert_eq!(report.dim(), 4);
    assert!(report.is_coisotropic());
    // and accepts genuinely complex candidates
    let mut x = e13;
    x[0] = GaussRational::i();
    let report = construct(&alg, &pi, &x).unwrap();
    assert_eq!(report.dim() % 2, 0);
    println!("[ACCEPTANCE] extension: A_2 over the Gaussian rationals: PASS");
}
