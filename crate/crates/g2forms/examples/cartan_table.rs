//! Exterior-differential-systems bookkeeping for the G2 coframe system:
//! codimension sequence of the reduced tableaux along a conforming flag,
//! the full polar-extension report, and independence from a graph choice.

use g2forms::cartan::{codim_sequence, graph_independence, polar_extension_report, Flag};
use g2forms::{G2Data, Rat};

fn main() -> g2forms::Result<()> {
    let tol = 1e-9;
    let g2 = G2Data::<Rat>::new();

    let flag = Flag::<Rat>::standard();
    let (c, conforming) = codim_sequence(&flag, &g2, tol)?;
    println!("standard flag conforming: {conforming}");
    println!("codimensions c_0..c_7  : {c:?}");

    // The same sequence from a randomly rebased flag (same lines, new basis).
    let rebased = flag.rebased(7);
    let (c2, conf2) = codim_sequence(&rebased, &g2, tol)?;
    println!("rebased flag conforming: {conf2}, codimensions match: {}", c == c2);

    let report = polar_extension_report(&flag, &g2, tol)?;
    println!("extension ranks r_k      : {:?}", report.r);
    println!("polar space dims dim Z_k : {:?}", report.z_dims);
    println!("polar codims             : {:?}", report.z_codims);
    println!("Cartan sum               : {} (involutive: {:?})", report.cartan_sum, report.involutive);
    println!("fiber count consistent   : {}", report.fiber_count_ok);
    println!("Ad(t)-invariance by level: {:?}", report.ad_t_invariant);

    let independent = graph_independence(&flag, &g2, 0, tol)?;
    println!("graph independence (zero + random graph): {independent}");

    println!("\nfull report as JSON:\n{}", serde_json::to_string_pretty(&report).unwrap());
    Ok(())
}
