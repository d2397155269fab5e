//! Randomized property tests for the exact exterior-algebra kernel.
//!
//! Every law is checked on at least 100 randomized exact (rational) cases;
//! the floating-point properties at the bottom use explicit tolerances.

use g2forms::coframe::example2_algebra;
use g2forms::form::Form;
use g2forms::json::{form_from_json, form_to_json};
use g2forms::orbits::{expm, orbit_invariant, Plane};
use g2forms::{G2Data, Matrix, Metric, MultiIndex, Rat, Scalar};
use proptest::prelude::*;

const DIM: usize = 7;

fn rat() -> impl Strategy<Value = Rat> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| Rat::from_ratio(n, d))
}

/// Sparse rational k-form on R^7 with a handful of monomials.
fn form(degree: usize) -> impl Strategy<Value = Form<Rat>> {
    let indices = MultiIndex::all(DIM, degree);
    let count = indices.len();
    prop::collection::vec((0..count, rat()), 1..5).prop_map(move |terms| {
        let mut out = Form::zero(DIM, degree);
        for (i, c) in terms {
            out = out.add(&Form::from_terms(DIM, degree, vec![(indices[i], c)]).unwrap());
        }
        out
    })
}

/// Sparse rational 7x7 matrix.
fn matrix() -> impl Strategy<Value = Matrix<Rat>> {
    prop::collection::vec(((0..DIM, 0..DIM), rat()), 1..7).prop_map(|entries| {
        let mut m = Matrix::zeros(DIM, DIM);
        for ((i, j), c) in entries {
            m[(i, j)] = c;
        }
        m
    })
}

fn vector() -> impl Strategy<Value = Vec<Rat>> {
    prop::collection::vec(rat(), DIM)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn wedge_graded_anticommutative(
        a in (1usize..=3).prop_flat_map(form),
        b in (1usize..=3).prop_flat_map(form),
    ) {
        let ab = a.wedge(&b).unwrap();
        let ba = b.wedge(&a).unwrap();
        let sign = if (a.degree() * b.degree()) % 2 == 0 { ba.clone() } else { ba.neg() };
        prop_assert_eq!(ab, sign);
    }

    #[test]
    fn wedge_associative(
        a in form(1),
        b in form(1),
        c in form(2),
    ) {
        let left = a.wedge(&b).unwrap().wedge(&c).unwrap();
        let right = a.wedge(&b.wedge(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn interior_is_antiderivation(
        a in (1usize..=3).prop_flat_map(form),
        b in (1usize..=2).prop_flat_map(form),
        v in vector(),
    ) {
        let lhs = a.wedge(&b).unwrap().interior(&v).unwrap();
        let ia_b = a.interior(&v).unwrap().wedge(&b).unwrap();
        let a_ib = a.wedge(&b.interior(&v).unwrap()).unwrap();
        let rhs = if a.degree() % 2 == 0 { ia_b.add(&a_ib) } else { ia_b.sub(&a_ib) };
        prop_assert_eq!(lhs, rhs);
        // i_v composed with itself vanishes.
        let ab = a.wedge(&b).unwrap();
        let twice = ab.interior(&v).unwrap().interior(&v).unwrap();
        prop_assert!(twice.is_zero());
    }

    #[test]
    fn pullback_is_functorial(
        a in (1usize..=3).prop_flat_map(form),
        m1 in matrix(),
        m2 in matrix(),
    ) {
        // Pullback along a composite map is pullback in stages.
        let composed = a.pullback(&m1.mul(&m2)).unwrap();
        let staged = a.pullback(&m1).unwrap().pullback(&m2).unwrap();
        prop_assert_eq!(composed, staged);
    }

    #[test]
    fn pullback_respects_wedge(
        a in (1usize..=2).prop_flat_map(form),
        b in (1usize..=2).prop_flat_map(form),
        m in matrix(),
    ) {
        let lhs = a.wedge(&b).unwrap().pullback(&m).unwrap();
        let rhs = a.pullback(&m).unwrap().wedge(&b.pullback(&m).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn lie_act_is_a_derivation(
        a in (1usize..=2).prop_flat_map(form),
        b in (1usize..=2).prop_flat_map(form),
        m in matrix(),
    ) {
        let lhs = a.wedge(&b).unwrap().lie_act(&m).unwrap();
        let rhs = a
            .lie_act(&m).unwrap().wedge(&b).unwrap()
            .add(&a.wedge(&b.lie_act(&m).unwrap()).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn lie_act_reverses_brackets(
        a in (1usize..=3).prop_flat_map(form),
        m1 in matrix(),
        m2 in matrix(),
    ) {
        // lie_act extends the contravariant coframe action, so it is an
        // anti-homomorphism: L_A L_B - L_B L_A = L_{[B,A]}.
        let lhs = a
            .lie_act(&m2).unwrap().lie_act(&m1).unwrap()
            .sub(&a.lie_act(&m1).unwrap().lie_act(&m2).unwrap());
        prop_assert_eq!(lhs, a.lie_act(&m2.commutator(&m1)).unwrap());
    }

    #[test]
    fn hodge_star_is_an_isometric_involution(
        a in (1usize..=3).prop_flat_map(form),
        b in (1usize..=3).prop_flat_map(form),
    ) {
        let metric = Metric::<Rat>::standard(DIM);
        // In odd dimension with a Riemannian metric, star is an involution.
        let twice = metric.star(&metric.star(&a).unwrap()).unwrap();
        prop_assert_eq!(&twice, &a);
        // a ∧ ∗a recovers the squared norm times the volume form.
        let vol = metric.volume_form().unwrap();
        let pairing = a.wedge(&metric.star(&a).unwrap()).unwrap();
        prop_assert_eq!(&pairing, &vol.scale(&a.norm_sq()));
        // The pairing is symmetric in equal degrees.
        if a.degree() == b.degree() {
            let ab = a.wedge(&metric.star(&b).unwrap()).unwrap();
            let ba = b.wedge(&metric.star(&a).unwrap()).unwrap();
            prop_assert_eq!(ab, ba);
        }
    }

    #[test]
    fn coframe_differential_squares_to_zero(
        a in (1usize..=2).prop_flat_map(form),
        b in (1usize..=2).prop_flat_map(form),
    ) {
        let alg = example2_algebra(Rat::from_ratio(1, 2), 1).unwrap();
        prop_assert!(alg.d(&alg.d(&a).unwrap()).unwrap().is_zero());
        // Graded Leibniz rule for the structure-equation differential.
        let lhs = alg.d(&a.wedge(&b).unwrap()).unwrap();
        let da_b = alg.d(&a).unwrap().wedge(&b).unwrap();
        let a_db = a.wedge(&alg.d(&b).unwrap()).unwrap();
        let rhs = if a.degree() % 2 == 0 { da_b.add(&a_db) } else { da_b.sub(&a_db) };
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn form_json_round_trip_is_bit_exact(a in (1usize..=4).prop_flat_map(form)) {
        let text = serde_json::to_string(&form_to_json(&a)).unwrap();
        let back = form_from_json(&serde_json::from_str(&text).unwrap()).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn orbit_invariant_ignores_oriented_basis_changes(
        tail in prop::collection::vec(rat(), 12),
        scales in prop::collection::vec((1i64..=5, 1i64..=3), 3),
        shear in rat(),
    ) {
        // Basis rows [I_3 | random] always span a 3-plane.
        let basis: Vec<Vec<f64>> = (0..3)
            .map(|i| {
                let mut row = vec![0.0; DIM];
                row[i] = 1.0;
                for j in 0..4 {
                    row[3 + j] = tail[4 * i + j].to_f64();
                }
                row
            })
            .collect();
        let plane = Plane::new(DIM, basis.clone(), true, 1e-9).unwrap();
        // Positive rescalings plus a shear keep both span and orientation.
        let mut moved = basis;
        for (i, (n, d)) in scales.iter().enumerate() {
            let s = (*n as f64) / (*d as f64);
            for x in moved[i].iter_mut() {
                *x *= s;
            }
        }
        for j in 0..DIM {
            let add = shear.to_f64() * moved[0][j];
            moved[2][j] += add;
        }
        let moved = Plane::new(DIM, moved, true, 1e-9).unwrap();
        let g2 = G2Data::<f64>::new();
        let s1 = orbit_invariant(&plane, &g2, 1e-9).unwrap();
        let s2 = orbit_invariant(&moved, &g2, 1e-9).unwrap();
        prop_assert!((s1 - s2).abs() < 1e-7, "s1={s1} s2={s2}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn orbit_invariant_is_constant_on_group_orbits(
        coeffs in prop::collection::vec(-1.0f64..1.0, 14),
        tail in prop::collection::vec(-2.0f64..2.0, 12),
    ) {
        // Moving a plane by a group element generated by the stabilizer
        // algebra leaves the orbit invariant unchanged.
        let g2 = G2Data::<f64>::new();
        let mut gen = Matrix::<f64>::zeros(DIM, DIM);
        for (c, a) in coeffs.iter().zip(&g2.algebra) {
            gen = gen.add(&a.scale(c));
        }
        let g = expm(&gen);
        let basis: Vec<Vec<f64>> = (0..3)
            .map(|i| {
                let mut row = vec![0.0; DIM];
                row[i] = 1.0;
                for j in 0..4 {
                    row[3 + j] = tail[4 * i + j];
                }
                row
            })
            .collect();
        let plane = Plane::new(DIM, basis, true, 1e-9).unwrap();
        let moved = plane.apply(&g).unwrap();
        let s1 = orbit_invariant(&plane, &g2, 1e-9).unwrap();
        let s2 = orbit_invariant(&moved, &g2, 1e-9).unwrap();
        prop_assert!((s1 - s2).abs() < 1e-6, "s1={s1} s2={s2}");
    }
}
