//! End-to-end acceptance gate: one check per published claim, each printing
//! a pass/fail line. Run with `cargo test --test acceptance -- --nocapture`.

use g2forms::cartan::{codim_sequence, polar_extension_report, Flag};
use g2forms::coframe::{example2_algebra, verify_example2, verify_flat_model};
use g2forms::form::Form;
use g2forms::g2::{
    annihilator_algebra, invariant_forms, is_structure_preserving, z2_witness,
};
use g2forms::orbits::{
    classify_plane, four_plane_path_identity, local_model_check, orbit_invariant,
    reversal_witness, three_plane_path, OrbitClass, Plane,
};
use g2forms::spin7::{
    classify_orbit_point, nearly_parallel_residual, obstruction_value, orbit_sample,
    OrbitPointClass, Spin7Data,
};
use g2forms::{G2Data, Matrix, Metric, Quad, Rat, Scalar};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::time::Instant;

fn report(n: usize, name: &str, started: Instant, pass: bool) -> bool {
    println!(
        "criterion {n:>2}: {} — {name} ({:.2?})",
        if pass { "PASS" } else { "FAIL" },
        started.elapsed()
    );
    pass
}

fn r(n: i64) -> Rat {
    Rat::from_int(n)
}

#[test]
fn acceptance() {
    let mut all = true;
    let g2 = G2Data::<Rat>::new();

    // 1. Stabilizer algebra dimension 14.
    let t = Instant::now();
    let pass = g2.algebra.len() == 14;
    all &= report(1, "G2 algebra dimension 14", t, pass);

    // 2. Invariant dimensions (1,0,0,1,1,0,0,1); degree 3/4 lines are φ, ∗φ.
    let t = Instant::now();
    let dims: Vec<usize> = (0..=7)
        .map(|k| invariant_forms(&g2.algebra, 7, k, 0.0).len())
        .collect();
    let deg3 = invariant_forms(&g2.algebra, 7, 3, 0.0);
    let deg4 = invariant_forms(&g2.algebra, 7, 4, 0.0);
    let line3 = deg3.len() == 1 && proportional(&deg3[0], &g2.phi);
    let line4 = deg4.len() == 1 && proportional(&deg4[0], &g2.phi_dual);
    let pass = dims == vec![1, 0, 0, 1, 1, 0, 0, 1] && line3 && line4;
    all &= report(2, "invariant dimensions (1,0,0,1,1,0,0,1)", t, pass);

    // 3. Codimension sequence, standard flag and generic L_1, L_2.
    let t = Instant::now();
    let expected_c = vec![0usize, 0, 0, 1, 5, 15, 28, 35];
    let (c_std, conf_std) = codim_sequence(&Flag::standard(), &g2, 0.0).unwrap();
    let mk = |coords: [i64; 7]| coords.iter().map(|&v| r(v)).collect::<Vec<_>>();
    let generic = Flag::with_lines(
        mk([0, 0, 0, 0, 1, 1, 0]),
        mk([0, 0, 0, 0, 2, -1, 1]),
        mk([0, 0, 0, 0, 0, 3, 1]),
        0.0,
    )
    .unwrap();
    let (c_gen, conf_gen) = codim_sequence(&generic, &g2, 0.0).unwrap();
    let pass = conf_std && conf_gen && c_std == expected_c && c_gen == expected_c;
    all &= report(3, "codimension sequence (0,0,0,1,5,15,28,35)", t, pass);

    // 4. Extension ranks and Z dimensions.
    let t = Instant::now();
    let table = polar_extension_report(&Flag::standard(), &g2, 0.0).unwrap();
    let pass = table.r[4] == 32
        && table.z_dims == [10, 21, 35]
        && table.z_codims == [32, 21, 7]
        && table.r[4..=6] == [32, 21, 7]
        && table.involutive.iter().all(|&b| b);
    all &= report(4, "extension ranks r4=32, Z dims (10,21,35)", t, pass);

    // 5. Ad(t)-invariance of h_k for k ≥ 4.
    let t = Instant::now();
    let pass = table.ad_t_invariant[4..].iter().all(|&b| b);
    all &= report(5, "Ad(t)-invariance of h_k, k ≥ 4", t, pass);

    // 6. Plane classification and the 4-plane path identity.
    let t = Instant::now();
    let xspan = Plane::<Rat>::from_axes(7, &[0, 1, 2], true);
    let rspan = Plane::<Rat>::from_axes(7, &[4, 5, 6], true);
    let xi_plus = Plane::<Rat>::from_axes(7, &[3, 0, 1, 2], true);
    let g2q = G2Data::<Quad>::new();
    let (sin6, cos6) = (
        Quad::from_ratio(1, 2),
        Quad::new(Rat::from_int(0), Rat::from_ratio(1, 2), 3),
    );
    let xi_pi6 = three_plane_path(sin6.clone(), cos6.clone());
    let pass = classify_plane(&xspan, &g2, 0.0).unwrap() == OrbitClass::PhiPlane
        && orbit_invariant(&rspan, &g2, 0.0).unwrap() == r(-1)
        && orbit_invariant(&xi_plus, &g2, 0.0).unwrap() == r(1)
        && orbit_invariant(&xi_pi6, &g2q, 0.0).unwrap() == Quad::from_ratio(1, 2)
        && four_plane_path_identity(sin6, cos6, &g2q).unwrap()
        && four_plane_path_identity(
            Quad::new(Rat::from_int(0), Rat::from_ratio(1, 2), 2),
            Quad::new(Rat::from_int(0), Rat::from_ratio(1, 2), 2),
            &g2q,
        )
        .unwrap();
    all &= report(6, "plane classification and path identity", t, pass);

    // 7. Reversal witness on the x-span; NotReversible elsewhere.
    let t = Instant::now();
    let unoriented_x = Plane::<Rat>::from_axes(7, &[0, 1, 2], false);
    let w = reversal_witness(&unoriented_x, &g2, 0.0).unwrap();
    let preserves = is_structure_preserving(&w, &g2.phi, 0.0).unwrap();
    let reverses = w.submatrix(&[0, 1, 2], &[0, 1, 2]).det() == r(-1);
    let rej_assoc = reversal_witness(
        &Plane::<Rat>::from_axes(7, &[4, 5, 6], false),
        &g2,
        0.0,
    )
    .is_err();
    let rej_generic = reversal_witness(
        &three_plane_path(
            Quad::from_ratio(1, 2),
            Quad::new(Rat::from_int(0), Rat::from_ratio(1, 2), 3),
        ),
        &g2q,
        0.0,
    )
    .is_err();
    let pass = w == z2_witness() && preserves && reverses && rej_assoc && rej_generic;
    all &= report(7, "reversal witness diag(-1,-1,-1,-1,1,1,1)", t, pass);

    // 8. Local-model isomorphism with equivariance.
    let t = Instant::now();
    let lm = local_model_check(&g2).unwrap();
    let pass = lm.matrix_rank == 4 && lm.iso_ok;
    all &= report(8, "local-model 4×4 rank and equivariance", t, pass);

    // 9. Torsion suites.
    let t = Instant::now();
    let flat = verify_flat_model().unwrap();
    let ex2 = verify_example2().unwrap();
    let pass = flat.closed
        && flat.coclosed
        && flat.stable_positive
        && ex2.residual_max == 0.0
        && ex2.four_form_closed
        && ex2.validated_scale == "1/2";
    all &= report(9, "torsion identities (flat model, example 2)", t, pass);

    // 10. Spin(7) construction.
    let t = Instant::now();
    let s7 = Spin7Data::<Rat>::new().unwrap();
    let metric8 = Metric::<Rat>::standard(8);
    let pass = annihilator_algebra(&s7.phi0, 0.0).len() == 21
        && metric8.star(&s7.phi0).unwrap() == s7.phi0
        && s7.phi0.wedge(&s7.phi0).unwrap()
            == metric8.volume_form().unwrap().scale(&r(14))
        && s7
            .generators
            .iter()
            .all(|e| s7.phi0.lie_act(e).unwrap().is_zero());
    all &= report(10, "Spin(7) Φ0 construction invariants", t, pass);

    // 11. Obstruction identity on 500 random admissible points + branches.
    let t = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut max_gap = 0.0f64;
    let mut count = 0;
    while count < 500 {
        let x0: f64 = rng.gen_range(-1.0..1.0);
        let x1: f64 = rng.gen_range(-1.0..1.0);
        let x6: f64 = rng.gen_range(-1.0..1.0);
        let n = (x0 * x0 + x1 * x1 + x6 * x6).sqrt();
        if n < 0.1 || (x1 * x1 + x6 * x6) / (n * n) < 1e-4 {
            continue;
        }
        let (num, closed) = obstruction_value(x0 / n, x1 / n, x6 / n, 1e-9).unwrap();
        max_gap = max_gap.max((num - closed).abs());
        count += 1;
    }
    let branch_a = matches!(
        classify_orbit_point(r(0), r(1), r(0), 0.0).unwrap(),
        OrbitPointClass::PhiOrbit { .. }
    );
    let t13 = 1.0 / 3.0f64;
    let x0b = (1.0 - 4.0 * t13 * t13).sqrt();
    let branch_b = match classify_orbit_point(x0b, t13, t13 * 3.0f64.sqrt(), 1e-9).unwrap() {
        OrbitPointClass::PhiOrbit { branches } => branches == vec!["3x1^2=x6^2".to_string()],
        _ => false,
    };
    let pass = max_gap <= 1e-10 && branch_a && branch_b;
    all &= report(11, "obstruction closed form on 500 points", t, pass);

    // 12. Orbit through (0,1,0,…,0) sits in the quadrics.
    let t = Instant::now();
    let mut start = vec![0.0f64; 8];
    start[1] = 1.0;
    let sample = orbit_sample(&start, 200, 7).unwrap();
    let pass = sample.max_sphere_residual <= 1e-9
        && sample.max_quadric_residuals.iter().all(|&q| q <= 1e-9)
        && sample.max_linear_residuals.iter().all(|&l| l <= 1e-9);
    all &= report(12, "orbit samples satisfy the quadrics", t, pass);

    // 13. Nearly parallel: ‖dφ − 4∗7φ‖ ≤ 1e−3 at 10 random points.
    let t = Instant::now();
    let s7f = Spin7Data::<f64>::new().unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let mut max_res = 0.0f64;
    for _ in 0..10 {
        let mut p = [0.0f64; 7];
        for c in p.iter_mut() {
            *c = rng.gen_range(-0.8..0.8);
        }
        max_res = max_res.max(nearly_parallel_residual(&p, &s7f, 1e-5).unwrap());
    }
    let pass = max_res <= 1e-3;
    all &= report(13, "nearly parallel dφ = 4∗φ numeric check", t, pass);

    // 14. Randomized exact law suite, 100 cases per law.
    let t = Instant::now();
    let pass = random_law_suite();
    all &= report(14, "randomized exact algebra laws (100 cases)", t, pass);

    assert!(all, "one or more acceptance criteria failed");
}

fn proportional(a: &Form<Rat>, b: &Form<Rat>) -> bool {
    let ab = a.dot(b);
    let aa = a.norm_sq();
    let bb = b.norm_sq();
    // Cauchy-Schwarz equality: (a·b)² = |a|²|b|² for parallel forms.
    ab.clone() * ab == aa * bb
}

fn random_form(rng: &mut ChaCha8Rng, dim: usize, degree: usize) -> Form<Rat> {
    let mut out = Form::zero(dim, degree);
    for _ in 0..4 {
        let mut axes: Vec<usize> = (0..dim).collect();
        for i in (1..axes.len()).rev() {
            axes.swap(i, rng.gen_range(0..=i));
        }
        let mut chosen = axes[..degree].to_vec();
        chosen.sort_unstable();
        let c = Rat::from_ratio(rng.gen_range(-6..=6), rng.gen_range(1..=4));
        out = out.add(&Form::monomial(dim, &chosen, c).unwrap());
    }
    out
}

fn random_vector(rng: &mut ChaCha8Rng, dim: usize) -> Vec<Rat> {
    (0..dim).map(|_| r(rng.gen_range(-5..=5))).collect()
}

fn random_law_suite() -> bool {
    let mut rng = ChaCha8Rng::seed_from_u64(31337);
    let metric = Metric::<Rat>::standard(7);
    let alg = example2_algebra(Rat::from_ratio(1, 2), 1).unwrap();
    let g2 = G2Data::<Rat>::new();
    for _ in 0..100 {
        let ka = rng.gen_range(1..=3usize);
        let kb = rng.gen_range(1..=3usize);
        let a = random_form(&mut rng, 7, ka);
        let b = random_form(&mut rng, 7, kb);
        let v = random_vector(&mut rng, 7);

        // Graded anticommutativity.
        let sign = if (ka * kb) % 2 == 0 { r(1) } else { r(-1) };
        if a.wedge(&b).unwrap() != b.wedge(&a).unwrap().scale(&sign) {
            return false;
        }
        // Interior product is an antiderivation and squares to zero.
        let lhs = a.wedge(&b).unwrap().interior(&v).unwrap();
        let sa = if ka % 2 == 0 { r(1) } else { r(-1) };
        let rhs = a
            .interior(&v)
            .unwrap()
            .wedge(&b)
            .unwrap()
            .add(&a.wedge(&b.interior(&v).unwrap()).unwrap().scale(&sa));
        if lhs != rhs {
            return false;
        }
        if ka >= 2 && !a.interior(&v).unwrap().interior(&v).unwrap().is_zero() {
            return false;
        }
        // Pullback functoriality and wedge naturality.
        let m1 = Matrix::<Rat>::from_fn(7, 7, |_, _| r(rng.gen_range(-2..=2)));
        let m2 = Matrix::<Rat>::from_fn(7, 7, |_, _| r(rng.gen_range(-2..=2)));
        let composed = a.pullback(&m1.mul(&m2)).unwrap();
        let chained = a.pullback(&m1).unwrap().pullback(&m2).unwrap();
        if composed != chained {
            return false;
        }
        if a.wedge(&b).unwrap().pullback(&m1).unwrap()
            != a.pullback(&m1).unwrap().wedge(&b.pullback(&m1).unwrap()).unwrap()
        {
            return false;
        }
        // Hodge star involution and inner-product pairing.
        let star_a = metric.star(&a).unwrap();
        let sign = if (ka * (7 - ka)) % 2 == 0 { r(1) } else { r(-1) };
        if metric.star(&star_a).unwrap() != a.scale(&sign) {
            return false;
        }
        if a.wedge(&star_a).unwrap() != metric.volume_form().unwrap().scale(&a.norm_sq()) {
            return false;
        }
        // lie_act is an anti-homomorphism (it extends the contravariant
        // coframe action): L_A L_B − L_B L_A = L_{[B,A]}.
        let lhs = a.lie_act(&m2).unwrap().lie_act(&m1).unwrap().sub(
            &a.lie_act(&m1).unwrap().lie_act(&m2).unwrap(),
        );
        if lhs != a.lie_act(&m2.commutator(&m1)).unwrap() {
            return false;
        }
        // d² = 0 and the Leibniz rule in the curved coframe algebra.
        if !alg.d(&alg.d(&a).unwrap()).unwrap().is_zero() {
            return false;
        }
        let lhs = alg.d(&a.wedge(&b).unwrap()).unwrap();
        let rhs = alg
            .d(&a)
            .unwrap()
            .wedge(&b)
            .unwrap()
            .add(&a.wedge(&alg.d(&b).unwrap()).unwrap().scale(&sa));
        if lhs != rhs {
            return false;
        }
        // Basis-independence of the orbit invariant: rescale and shear the
        // basis of a fixed generic-orbit plane without changing s.
        let mut basis = vec![
            {
                let mut v = vec![r(0); 7];
                v[3] = r(3);
                v[4] = r(4);
                v
            },
            {
                let mut v = vec![r(0); 7];
                v[0] = r(5);
                v
            },
            {
                let mut v = vec![r(0); 7];
                v[1] = r(1);
                v
            },
            {
                let mut v = vec![r(0); 7];
                v[2] = r(1);
                v
            },
        ];
        let s0 = orbit_invariant(
            &Plane::new(7, basis.clone(), true, 0.0).unwrap(),
            &g2,
            0.0,
        )
        .unwrap();
        // Positive rescale of one vector plus adding a multiple of another.
        let scale = r(rng.gen_range(1..=4));
        let shear = r(rng.gen_range(-3..=3));
        for i in 0..7 {
            basis[2][i] = basis[2][i].clone() * scale.clone() + shear.clone() * basis[1][i].clone();
        }
        let s1 = orbit_invariant(
            &Plane::new(7, basis, true, 0.0).unwrap(),
            &g2,
            0.0,
        )
        .unwrap();
        if s0 != s1 {
            return false;
        }
    }
    true
}
