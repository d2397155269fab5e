//! Classify oriented 3- and 4-planes in R^7 into their G2-orbits, follow an
//! exact path of planes using quadratic-extension scalars, and produce the
//! orientation-reversing witness on a phi-plane.

use g2forms::g2::{R0, R1, R3, X1, X2, X3};
use g2forms::orbits::{
    classify_plane, four_plane_path, orbit_invariant, reversal_witness,
    reversal_witness_numeric, three_plane_path, Plane,
};
use g2forms::{G2Data, Quad, Rat, Scalar};

fn main() -> g2forms::Result<()> {
    let tol = 1e-9;
    let g2 = G2Data::<Rat>::new();

    let samples: Vec<(&str, Plane<Rat>)> = vec![
        ("span(x1,x2,x3)", Plane::from_axes(7, &[X1, X2, X3], true)),
        ("span(x1,x2,r0)", Plane::from_axes(7, &[X1, X2, R0], true)),
        ("span(x1,x2,r3)", Plane::from_axes(7, &[X1, X2, R3], true)),
        ("span(x1,x2,r3)  [flipped]", {
            Plane::from_axes(7, &[X1, X2, R3], true).with_orientation_flipped()
        }),
        ("tilted 3-plane", {
            Plane::new(
                7,
                vec![
                    vec![3, 0, 0, 0, 4, 0, 0],
                    vec![0, 5, 0, 0, 0, 0, 0],
                    vec![0, 0, 1, 0, 0, 0, 0],
                ]
                .into_iter()
                .map(|v| v.into_iter().map(Rat::from_int).collect())
                .collect(),
                true,
                tol,
            )?
        }),
        ("span(r0,r1,x1,x2) 4-plane", Plane::from_axes(7, &[R0, R1, X1, X2], true)),
    ];

    for (name, plane) in &samples {
        let s = orbit_invariant(plane, &g2, tol)?;
        let class = classify_plane(plane, &g2, tol)?;
        println!("{name:28} s = {s:8} class = {}", class.label());
    }

    // Exact path xi_theta at theta = pi/6 using scalars in Q(sqrt 3).
    let half = Quad::new(Rat::from_ratio(1, 2), Rat::from_int(0), 3);
    let root3_half = Quad::new(Rat::from_int(0), Rat::from_ratio(1, 2), 3);
    let g2q = G2Data::<Quad>::new();
    let p3 = three_plane_path(half.clone(), root3_half.clone());
    let p4 = four_plane_path(half, root3_half);
    println!(
        "path at pi/6: 3-plane s = {}, 4-plane s = {}",
        orbit_invariant(&p3, &g2q, tol)?,
        orbit_invariant(&p4, &g2q, tol)?
    );

    // Exact witness on the standard phi-plane…
    let standard = Plane::<Rat>::from_axes(7, &[X1, X2, X3], true);
    let w = reversal_witness(&standard, &g2, tol)?;
    println!("exact reversal witness diagonal: {:?}", (0..7).map(|i| w[(i, i)].clone()).collect::<Vec<_>>());

    // …and a numeric witness on a phi-plane moved by a group element.
    let g2f = G2Data::<f64>::new();
    let mut a = g2forms::Matrix::<f64>::zeros(7, 7);
    for (i, basis_elt) in g2f.algebra.iter().enumerate() {
        a = a.add(&basis_elt.scale(&(0.1 + 0.03 * i as f64)));
    }
    let moved = Plane::<f64>::from_axes(7, &[X1, X2, X3], true)
        .apply(&g2forms::orbits::expm(&a))?;
    match reversal_witness_numeric(&moved, &g2f, tol) {
        Ok(wn) => {
            let det = wn.det();
            println!("numeric witness found, det = {det:.6}");
        }
        Err(e) => println!("numeric witness unavailable: {e}"),
    }

    // Non-reversible orbits reject with an explanation.
    let special = Plane::<Rat>::from_axes(7, &[X1, X2, R3], true);
    if let Err(e) = reversal_witness(&special, &g2, tol) {
        println!("special plane rejected: {e}");
    }
    Ok(())
}
