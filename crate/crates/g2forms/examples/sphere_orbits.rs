//! The homogeneous-orbit picture on the unit sphere in R^8: evaluate the
//! obstruction function in its closed form, classify points by orbit type,
//! sample group orbits and test the quadric equations they satisfy, and
//! check the nearly parallel identity d(phi) = 4 ∗phi numerically.

use g2forms::spin7::{
    classify_orbit_point, nearly_parallel_residual, obstruction_value, orbit_sample,
    OrbitPointClass, Spin7Data,
};
use g2forms::{Rat, Scalar};

fn main() -> g2forms::Result<()> {
    let tol = 1e-9;

    // At x0 = x1 = x6 = 1/sqrt(3) both the direct evaluation and the closed
    // form give 4/sqrt(33).
    let r = (1.0f64 / 3.0).sqrt();
    let (numeric, closed) = obstruction_value(r, r, r, tol)?;
    println!("at (1,1,1)/sqrt(3): direct = {numeric:.12}, closed form = {closed:.12}");
    println!("reference 4/sqrt(33) = {:.12}", 4.0 / 33.0f64.sqrt());

    // Rational points with a rational normalization evaluate exactly.
    let (n, c) = obstruction_value(
        Rat::zero(),
        Rat::from_ratio(3, 5),
        Rat::from_ratio(4, 5),
        tol,
    )?;
    println!("at (0, 3/5, 4/5): direct = {n}, closed form = {c} (exact)");

    // Orbit classification with vanishing branches.
    let half_root2 = 0.5f64.sqrt();
    for (x0, x1, x6) in [
        (0.0, 0.6, 0.8),
        (0.5, 0.5, half_root2),
        (0.6, 0.4, 0.4 * 3.0f64.sqrt()),
    ] {
        match classify_orbit_point(x0, x1, x6, tol)? {
            OrbitPointClass::PhiOrbit { branches } => {
                println!("({x0:.3},{x1:.3},{x6:.3}): phi-plane orbit via {branches:?}")
            }
            OrbitPointClass::Generic { value } => {
                println!("({x0:.3},{x1:.3},{x6:.3}): generic, obstruction = {value:.6}")
            }
        }
    }

    // Sample the orbit of a base point and verify the quadric equations.
    let x = [0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0];
    let report = orbit_sample(&x, 200, 0)?;
    println!("\norbit sample through e_1 ({} points):", report.points.len());
    println!("  max |1 - |y||           : {:.3e}", report.max_sphere_residual);
    println!("  max quadric residuals   : {:?}", report.max_quadric_residuals);
    println!("  max linear residuals    : {:?}", report.max_linear_residuals);

    // Nearly parallel identity in a stereographic chart, central differences.
    let data = Spin7Data::<f64>::new()?;
    let points: [[f64; 7]; 3] = [
        [0.1, -0.2, 0.3, 0.05, -0.15, 0.25, -0.05],
        [0.4, 0.1, -0.3, 0.2, 0.0, -0.1, 0.3],
        [-0.2, -0.1, 0.05, -0.3, 0.2, 0.1, 0.15],
    ];
    for p in &points {
        let res = nearly_parallel_residual(p, &data, 1e-5)?;
        println!("nearly parallel residual at {p:?}: {res:.3e}");
    }
    Ok(())
}
