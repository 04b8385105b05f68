//! Property tests for the algebraic, combinatorial and classification
//! invariants.

mod common;

use logderiv::arrangement::IntersectionPoset;
use logderiv::cli::parse_polynomial;
use logderiv::linalg::{is_zero_vec, mat_vec, reduced_echelon};
use logderiv::poly::resultant::resultant_in_y;
use logderiv::poly::{divides_line, rat, ratio};
use logderiv::{
    build_matrix, classify, combinatorial_data, filtration_dims, invariant_lines, kernel_basis,
    poset_isomorphic, singular_points, weak_equal, Arrangement, BivariatePoly, FieldClass, Line,
    Rational, UnivariatePoly, Var, VectorField,
};
use num::{BigInt, Integer, Zero};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| ratio(n, d))
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |r| !r.is_zero())
}

fn poly(max_deg: u32) -> impl Strategy<Value = BivariatePoly> {
    prop::collection::vec((0..=max_deg, 0..=max_deg, rational()), 0..8).prop_map(move |ts| {
        BivariatePoly::from_terms(ts.into_iter().filter(|(i, j, _)| i + j <= max_deg))
    })
}

fn line() -> impl Strategy<Value = Line> {
    (rational(), rational(), rational())
        .prop_filter_map("degenerate", |(a, b, c)| Line::new(&a, &b, &c))
}

fn arrangement() -> impl Strategy<Value = Arrangement> {
    any::<u64>().prop_map(|s| common::random_arrangement(&mut common::rng(s), 6))
}

fn invertible_affine() -> impl Strategy<Value = ([[Rational; 2]; 2], [Rational; 2])> {
    (
        rational(),
        rational(),
        rational(),
        rational(),
        rational(),
        rational(),
    )
        .prop_filter("singular", |(a, b, c, d, _, _)| {
            (a * d - b * c) != Rational::zero()
        })
        .prop_map(|(a, b, c, d, e, f)| ([[a, b], [c, d]], [e, f]))
}

fn cfg(cases: u32) -> ProptestConfig {
    ProptestConfig {
        cases,
        failure_persistence: None,
        ..ProptestConfig::default()
    }
}

fn choose2(k: usize) -> usize {
    k * k.saturating_sub(1) / 2
}

proptest! {
    #![proptest_config(cfg(200))]

    #[test]
    fn eval_is_a_ring_homomorphism(f in poly(4), g in poly(4), x in rational(), y in rational()) {
        prop_assert_eq!((&f * &g).eval(&x, &y), f.eval(&x, &y) * g.eval(&x, &y));
        prop_assert_eq!((&f + &g).eval(&x, &y), f.eval(&x, &y) + g.eval(&x, &y));
        prop_assert_eq!((&f - &g).eval(&x, &y), f.eval(&x, &y) - g.eval(&x, &y));
    }

    #[test]
    fn division_by_a_line_is_exact(f in poly(4), l in line()) {
        let form = l.affine_form();
        let q = f.div_exact_linear(&l);
        prop_assert_eq!(divides_line(&l, &f), q.is_some());
        if let Some(q) = q {
            prop_assert_eq!(&q * &form, f.clone());
        }
        // Multiples are always divisible with the cofactor recovered.
        let g = &f * &form;
        prop_assert!(divides_line(&l, &g));
        prop_assert_eq!(g.div_exact_linear(&l), Some(f.clone()));
        // Vanishing at deg+1 points of the line is equivalent.
        let (x0, y0) = l.base_point();
        let (vx, vy) = l.direction();
        let d = f.degree().unwrap_or(0) as i64;
        let vanishes = (0..=d).all(|k| f.eval(&(&x0 + rat(k) * Rational::from_integer(vx.clone())), &(&y0 + rat(k) * Rational::from_integer(vy.clone()))).is_zero());
        prop_assert_eq!(vanishes, divides_line(&l, &f));
    }

    #[test]
    fn restriction_is_linear_and_degree_bounded(f in poly(4), g in poly(4), c in rational(), l in line(), t in rational()) {
        let r = |p: &BivariatePoly| p.restrict_to_line(&l);
        prop_assert_eq!(r(&(&f + &g.scale(&c))), &r(&f) + &r(&g).scale(&c));
        prop_assert!(r(&f).degree().unwrap_or(0) <= f.degree().unwrap_or(0) as usize);
        let (x0, y0) = l.base_point();
        let (vx, vy) = l.direction();
        let x = x0 + &t * Rational::from_integer(vx);
        let y = y0 + &t * Rational::from_integer(vy);
        prop_assert_eq!(r(&f).eval(&t), f.eval(&x, &y));
    }

    #[test]
    fn line_normalization_is_scale_invariant(l in line(), k in nonzero_rational()) {
        let (a, b, c) = l.coefficients();
        prop_assert_eq!(Line::new(&(&a * &k), &(&b * &k), &(&c * &k)), Some(l.clone()));
        let g = l.alpha().gcd(l.beta()).gcd(l.gamma());
        prop_assert_eq!(g, BigInt::from(1));
        prop_assert!(l.alpha() > &BigInt::zero() || (l.alpha().is_zero() && l.beta() > &BigInt::zero()));
    }

    #[test]
    fn expression_display_round_trips(f in poly(5)) {
        prop_assert_eq!(parse_polynomial(&f.to_string()).unwrap(), f);
    }

    #[test]
    fn univariate_rational_roots(roots in prop::collection::vec(rational(), 0..5), lead in nonzero_rational(), irreducible in any::<bool>()) {
        let mut p = UnivariatePoly::constant(lead);
        for r in &roots {
            p = &p * &UnivariatePoly::linear_factor(r);
        }
        if irreducible {
            p = &p * &UnivariatePoly::new(vec![rat(2), rat(0), rat(1)]);
        }
        let mut want = roots.clone();
        want.sort();
        want.dedup();
        let mut got = p.rational_roots();
        got.sort();
        prop_assert_eq!(&got, &want);
        let (split, rest) = p.split_rational();
        let total: usize = split.iter().map(|s| s.1).sum();
        prop_assert_eq!(total, roots.len());
        prop_assert_eq!(rest.degree(), Some(if irreducible { 2 } else { 0 }));
        prop_assert_eq!(p.splits_over_rationals(), !irreducible);
    }

    #[test]
    fn resultant_vanishes_at_common_zeros(f1 in poly(2), f2 in poly(2), g1 in poly(2), g2 in poly(2), x0 in rational(), y0 in rational()) {
        let (x, y) = (BivariatePoly::x(), BivariatePoly::y());
        let dx = &x - &BivariatePoly::constant(x0.clone());
        let dy = &y - &BivariatePoly::constant(y0.clone());
        let f = &(&dy * &f1) + &(&dx * &f2);
        let g = &(&dy * &g1) + &(&dx * &g2);
        let positive = |p: &BivariatePoly| p.degree_in(Var::Y).is_some_and(|d| d > 0);
        prop_assume!(positive(&f) && positive(&g));
        prop_assert!(resultant_in_y(&f, &g).eval(&x0).is_zero());
    }

    #[test]
    fn echelon_rank_nullity(rows in prop::collection::vec(prop::collection::vec(rational(), 5), 0..6)) {
        let e = reduced_echelon(&rows, 5);
        let ns = e.nullspace();
        prop_assert_eq!(e.rank() + ns.len(), 5);
        for v in &ns {
            prop_assert!(is_zero_vec(&mat_vec(&rows, v)));
        }
    }
}

proptest! {
    #![proptest_config(cfg(64))]

    #[test]
    fn pair_accounting(a in arrangement()) {
        let d = combinatorial_data(&a);
        let points: usize = d.sing.iter().map(|s| choose2(s.multiplicity())).sum();
        let parallel: usize = d.parallel_classes.iter().map(|c| choose2(c.lines.len())).sum();
        prop_assert_eq!(points + parallel, choose2(d.n));
        prop_assert_eq!(parallel, d.parallel_pairs());
        prop_assert_eq!(d.m, d.sing.iter().map(|s| s.multiplicity()).max().unwrap_or(1));
        prop_assert_eq!(d.nu_inf, (d.m - 1).max(d.p));
        prop_assert_eq!(d.nu_f, (d.n + 1 - d.m).min(d.n - d.p));
        prop_assert_eq!(d.nu, d.nu_inf.min(d.nu_f));
    }

    #[test]
    fn singular_points_are_exact(a in arrangement()) {
        let pts = singular_points(&a);
        for s in &pts {
            prop_assert!(s.multiplicity() >= 2);
            for (k, l) in a.lines().iter().enumerate() {
                prop_assert_eq!(l.contains(&s.point.0, &s.point.1), s.incident_lines.contains(&k));
            }
        }
        for i in 0..a.len() {
            for j in i + 1..a.len() {
                if let Some(p) = a.lines()[i].intersect(&a.lines()[j]) {
                    prop_assert!(pts.iter().any(|s| s.point == p));
                }
            }
        }
    }

    #[test]
    fn poset_isomorphism_laws(a in arrangement(), b in arrangement(), seed in any::<u64>(), (m, t) in invertible_affine()) {
        let (pa, pb) = (IntersectionPoset::new(&a), IntersectionPoset::new(&b));
        let id = poset_isomorphic(&a, &a).expect("reflexive");
        prop_assert!(id.verify(&pa, &pa));
        let ab = poset_isomorphic(&a, &b);
        let ba = poset_isomorphic(&b, &a);
        prop_assert_eq!(ab.is_some(), ba.is_some());
        if let Some(w) = &ab {
            prop_assert!(w.verify(&pa, &pb));
            prop_assert!(weak_equal(&a, &b));
        }
        // A shuffled affine image is isomorphic.
        use rand::seq::SliceRandom;
        let mut lines = a.transform(m, t).lines().to_vec();
        lines.shuffle(&mut common::rng(seed));
        let c = Arrangement::new(lines).unwrap();
        let w = poset_isomorphic(&a, &c).expect("affine image is isomorphic");
        prop_assert!(w.verify(&pa, &IntersectionPoset::new(&c)));
    }
}

proptest! {
    #![proptest_config(cfg(24))]

    #[test]
    fn filtration_is_affine_invariant(a in arrangement(), (m, t) in invertible_affine()) {
        let b = a.transform(m.clone(), t.clone());
        prop_assert_eq!(filtration_dims(&a, 3), filtration_dims(&b, 3));
        let s = kernel_basis(&build_matrix(&a, 3));
        let mb = build_matrix(&b, 3);
        for f in &s.basis {
            let g = f.push_forward(&m, &t);
            prop_assert!(is_zero_vec(&mat_vec(&mb.rows, &g.to_coefficients(3))));
            prop_assert!(common::fixes_all(&g, &b));
        }
    }

    #[test]
    fn filtration_is_monotone(a in arrangement()) {
        let dims = filtration_dims(&a, 4);
        prop_assert!(dims.windows(2).all(|w| w[0] <= w[1]));
    }
}

/// Random fields biased to hit every class.
fn field() -> impl Strategy<Value = VectorField> {
    prop_oneof![
        (poly(3), poly(3)).prop_map(|(p, q)| VectorField::new(p, q)),
        (poly(2), rational(), rational()).prop_map(|(h, a, b)| {
            let (x, y) = (BivariatePoly::x(), BivariatePoly::y());
            VectorField::new(
                &h * &(&x - &BivariatePoly::constant(a)),
                &h * &(&y - &BivariatePoly::constant(b)),
            )
        }),
        (poly(2), rational(), rational())
            .prop_map(|(h, a, b)| VectorField::new(h.scale(&a), h.scale(&b))),
    ]
}

fn sound(chi: &VectorField, class: &FieldClass) -> bool {
    let (x, y) = (BivariatePoly::x(), BivariatePoly::y());
    let k = |r: &Rational| BivariatePoly::constant(r.clone());
    match class {
        FieldClass::Null => chi.is_zero(),
        FieldClass::Central { center: (cx, cy) } => {
            !chi.is_zero() && (&(&(&x - &k(cx)) * &chi.q) - &(&(&y - &k(cy)) * &chi.p)).is_zero()
        }
        FieldClass::Parallel {
            direction: (vx, vy),
        } => {
            let (vx, vy) = (
                Rational::from_integer(vx.clone()),
                Rational::from_integer(vy.clone()),
            );
            !chi.is_zero() && (&chi.q.scale(&vx) - &chi.p.scale(&vy)).is_zero()
        }
        FieldClass::Finite => true,
    }
}

proptest! {
    #![proptest_config(cfg(128))]

    #[test]
    fn classification_is_sound(chi in field()) {
        let class = classify(&chi);
        prop_assert!(sound(&chi, &class));
        if class == FieldClass::Finite {
            // Finite type: no center and no direction works, and the fixed
            // lines are finitely many and really fixed.
            let lines = invariant_lines(&chi).unwrap();
            for l in &lines.rational_lines {
                prop_assert!(common::fixes_line(&chi, l));
            }
            let (x, y) = (BivariatePoly::x(), BivariatePoly::y());
            prop_assert!(!(&(&x * &chi.q) - &(&y * &chi.p)).is_zero());
            prop_assert!(!chi.p.is_zero() || !chi.q.is_zero());
        } else if class != FieldClass::Null {
            prop_assert!(invariant_lines(&chi).is_err());
        }
    }

    #[test]
    fn classification_invariances(chi in field(), c in nonzero_rational(), h in poly(2), t in (rational(), rational())) {
        let class = classify(&chi);
        prop_assert_eq!(classify(&chi.scale(&c)), class.clone());
        if !h.is_zero() {
            prop_assert_eq!(classify(&chi.times(&h)), class.clone());
        }
        let one = rat(1);
        let id = [[one.clone(), rat(0)], [rat(0), one]];
        let moved = classify(&chi.push_forward(&id, &[t.0.clone(), t.1.clone()]));
        let expected = match class {
            FieldClass::Central { center: (cx, cy) } => FieldClass::Central { center: (cx + &t.0, cy + &t.1) },
            other => other,
        };
        prop_assert_eq!(moved, expected);
    }
}
