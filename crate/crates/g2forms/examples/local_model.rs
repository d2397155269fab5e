//! The local normal-form model around a phi-plane: the 4×4 contraction
//! matrix has full rank, and the identification is equivariant both for the
//! stabilizer algebra and for the finite orientation-reversing symmetry.

use g2forms::orbits::{four_plane_path_identity, local_model_check};
use g2forms::{G2Data, Quad, Rat, Scalar};

fn main() -> g2forms::Result<()> {
    let g2 = G2Data::<Rat>::new();

    let report = local_model_check(&g2)?;
    println!("contraction matrix rank : {}", report.matrix_rank);
    println!("identification valid    : {}", report.iso_ok);
    println!("failed generators       : {:?}", report.failed_generators);

    // Along the exact path of 4-planes, the pulled-back dual form reduces to
    // sin(theta) times the coordinate volume of the plane. Checked in
    // Q(sqrt 2) at theta = pi/4 and in Q(sqrt 3) at theta = pi/6.
    let g2q = G2Data::<Quad>::new();
    let r2_half = Quad::new(Rat::from_int(0), Rat::from_ratio(1, 2), 2);
    println!(
        "path identity at pi/4   : {}",
        four_plane_path_identity(r2_half.clone(), r2_half, &g2q)?
    );
    let half = Quad::new(Rat::from_ratio(1, 2), Rat::from_int(0), 3);
    let r3_half = Quad::new(Rat::from_int(0), Rat::from_ratio(1, 2), 3);
    println!(
        "path identity at pi/6   : {}",
        four_plane_path_identity(half, r3_half, &g2q)?
    );
    Ok(())
}
