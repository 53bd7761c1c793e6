use proptest::prelude::*;

use convsl::algebra::{check_convex_axioms, perspective, solve_swap_params, SemilatticeInstance};
use convsl::laws::LawConfig;
use convsl::lp::{lp_solve, LinearProgram, LpOutcome};
use convsl::numeric::{convex_combine, vector_cwise_sup};
use convsl::polytope::{canonicalize, contains_point, hull_join, is_sup_closed, lp_maximize, mix, support, Polytope};
use convsl::sampler::Sampler;
use convsl::wspace::{w_join, w_membership, witness_is_valid};
use convsl::{QVector, Rational};

fn rational() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=12).prop_map(|(n, d)| Rational::new(n, d).unwrap())
}

fn unit() -> impl Strategy<Value = Rational> {
    (1i64..=15, 16i64..=16).prop_map(|(n, d)| Rational::new(n, d).unwrap())
}

fn vector(dim: usize) -> impl Strategy<Value = QVector> {
    prop::collection::vec(rational(), dim).prop_map(|c| QVector::new(c).unwrap())
}

fn points(dim: usize) -> impl Strategy<Value = Vec<QVector>> {
    prop::collection::vec(vector(dim), 1..=8)
}

fn polytope(dim: usize) -> impl Strategy<Value = Polytope> {
    points(dim).prop_map(|p| canonicalize(&p).unwrap())
}

fn sized_polytope() -> impl Strategy<Value = (Polytope, QVector)> {
    (1usize..=3).prop_flat_map(|d| (polytope(d), vector(d)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rationals_are_reduced(n in -1000i64..1000, d in prop::sample::select(vec![-12i64, -5, -1, 1, 3, 7, 60])) {
        let r = Rational::new(n, d).unwrap();
        prop_assert_eq!(r.denom().sign(), num_bigint::Sign::Plus);
        let text = r.to_string();
        prop_assert_eq!(text.parse::<Rational>().unwrap(), r.clone());
        prop_assert_eq!(Rational::new(n * 3, d * 3).unwrap(), r);
    }

    #[test]
    fn lp_matches_vertex_enumeration((p, u) in sized_polytope()) {
        let brute = p.vertices().iter().map(|v| v.dot(&u).unwrap()).max().unwrap();
        match lp_maximize(&p, &u).unwrap() {
            LpOutcome::Optimal { value, .. } => prop_assert_eq!(value, brute),
            other => prop_assert!(false, "{:?}", other),
        }
    }

    #[test]
    fn lp_optimal_points_are_feasible(
        obj in prop::collection::vec(rational(), 3),
        rows in prop::collection::vec((prop::collection::vec(rational(), 3), rational()), 1..=2),
        ub in prop::collection::vec(1i64..=5, 3),
    ) {
        let mut lp = LinearProgram::new(3).maximize(obj);
        for (row, rhs) in rows {
            lp.add_eq(row, rhs);
        }
        for (i, b) in ub.into_iter().enumerate() {
            lp.set_upper(i, Rational::from(b));
        }
        match lp_solve(&lp).unwrap() {
            LpOutcome::Optimal { value, point } => {
                prop_assert!(lp.is_feasible_point(&point));
                prop_assert_eq!(lp.objective_value(&point), value);
            }
            LpOutcome::Infeasible => {}
            LpOutcome::Unbounded => prop_assert!(false, "bounded program reported unbounded"),
        }
    }

    #[test]
    fn canonical_form_is_stable(pts in points(2)) {
        let p = canonicalize(&pts).unwrap();
        prop_assert_eq!(canonicalize(p.vertices()).unwrap(), p.clone());
        for x in &pts {
            prop_assert!(contains_point(&p, x).unwrap());
        }
        let vs = p.vertices();
        prop_assert!(vs.windows(2).all(|w| w[0] < w[1]));
        if vs.len() > 1 {
            for i in 0..vs.len() {
                let mut rest = vs.to_vec();
                let v = rest.remove(i);
                prop_assert!(!contains_point(&canonicalize(&rest).unwrap(), &v).unwrap());
            }
        }
    }

    #[test]
    fn support_is_a_homomorphism(a in polytope(2), b in polytope(2), p in unit(), u in vector(2)) {
        let m = mix(&a, &b, &p).unwrap();
        let expected = &p * support(&a, &u).unwrap() + p.complement() * support(&b, &u).unwrap();
        prop_assert_eq!(support(&m, &u).unwrap(), expected);
        let j = hull_join(&a, &b).unwrap();
        prop_assert_eq!(support(&j, &u).unwrap(), support(&a, &u).unwrap().max(support(&b, &u).unwrap()));
        prop_assert_eq!(mix(&a, &a, &p).unwrap(), a.clone());
        prop_assert_eq!(mix(&a, &b, &p).unwrap(), mix(&b, &a, &p.complement()).unwrap());
    }

    #[test]
    fn sup_closed_carriers_absorb_hull_sups(lo in vector(2), size in prop::collection::vec(0i64..=4, 2), seed in 0u64..1000) {
        let hi = lo.add(&QVector::from_ints(&size)).unwrap();
        let corners = [
            lo.clone(),
            hi.clone(),
            QVector::new(vec![lo[0].clone(), hi[1].clone()]).unwrap(),
            QVector::new(vec![hi[0].clone(), lo[1].clone()]).unwrap(),
        ];
        let boxed = canonicalize(&corners).unwrap();
        prop_assert!(is_sup_closed(&boxed));
        let mut s = Sampler::new(seed, 16);
        for _ in 0..8 {
            let x = s.point_in(&boxed);
            let y = s.point_in(&boxed);
            prop_assert!(contains_point(&boxed, &vector_cwise_sup(&x, &y).unwrap()).unwrap());
        }
    }

    #[test]
    fn perspective_composes_and_inverts(c in vector(3), x in vector(3), p in rational(), q in rational()) {
        let twice = perspective(&c, &p, &perspective(&c, &q, &x).unwrap()).unwrap();
        prop_assert_eq!(twice, perspective(&c, &(&p * &q), &x).unwrap());
        if !p.is_zero() {
            let back = perspective(&c, &p.recip().unwrap(), &perspective(&c, &p, &x).unwrap()).unwrap();
            prop_assert_eq!(back, x.clone());
        }
        if let Ok((r, s)) = solve_swap_params(&p, &q) {
            let d = x.neg();
            let lhs = perspective(&d, &r, &perspective(&c, &p, &x).unwrap()).unwrap();
            let rhs = perspective(&c, &s, &perspective(&d, &q, &x).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn convex_combine_is_parametrically_commutative(x in vector(2), y in vector(2), p in unit()) {
        prop_assert_eq!(convex_combine(&x, &y, &p).unwrap(), convex_combine(&y, &x, &p.complement()).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn square_w_is_the_plane(x in vector(2), y in vector(2)) {
        let sq = SemilatticeInstance::unit_cube(2);
        let res = w_membership(&sq, &x).unwrap();
        prop_assert!(res.member);
        prop_assert!(witness_is_valid(&sq, &[x.clone()], res.witness.as_ref().unwrap()).unwrap());
        let j = w_join(&sq, &x, &y).unwrap();
        prop_assert_eq!(j.result, vector_cwise_sup(&x, &y).unwrap());
        prop_assert!(witness_is_valid(&sq, &[x, y], &j.witness).unwrap());
    }

    #[test]
    fn reports_depend_only_on_seed(seed in 0u64..10_000) {
        let sq = SemilatticeInstance::unit_cube(2);
        let cfg = LawConfig::new(seed, 8);
        prop_assert_eq!(check_convex_axioms(&sq, &cfg), check_convex_axioms(&sq, &cfg));
    }
}

