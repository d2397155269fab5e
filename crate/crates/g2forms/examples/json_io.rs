//! JSON interchange: exact-rational forms and planes round-trip bit-exactly,
//! and the full G2 bundle (three-form, dual, stabilizer algebra) exports as
//! a single document. This is the same format the CLI reads and writes.

use g2forms::g2::{X1, X2, X3};
use g2forms::json::{
    classification_to_json, form_from_json, form_to_json, g2_bundle_to_json, plane_from_json,
    plane_to_json,
};
use g2forms::orbits::{classify_plane, orbit_invariant, Plane};
use g2forms::{G2Data, Rat, Scalar};

fn main() -> g2forms::Result<()> {
    let tol = 1e-9;
    let g2 = G2Data::<Rat>::new();

    // A form with awkward rationals survives a round-trip byte-for-byte.
    let form = g2.phi.scale(&Rat::from_ratio(-22, 7));
    let text = serde_json::to_string_pretty(&form_to_json(&form)).unwrap();
    let back = form_from_json(&serde_json::from_str(&text).unwrap())?;
    println!("form round-trip exact: {}", back == form);
    println!("{text}\n");

    // Planes carry their orientation flag through the same channel.
    let plane = Plane::<Rat>::from_axes(7, &[X1, X2, X3], true);
    let ptext = serde_json::to_string(&plane_to_json(&plane)).unwrap();
    let pback = plane_from_json(&serde_json::from_str(&ptext).unwrap(), tol)?;
    println!("plane round-trip: basis match = {}", pback.basis() == plane.basis());

    // Classification output as consumed by `g2forms classify`.
    let s = orbit_invariant(&plane, &g2, tol)?;
    let class = classify_plane(&plane, &g2, tol)?;
    println!(
        "classification: {}",
        serde_json::to_string(&classification_to_json(&class, &s)).unwrap()
    );

    // The whole structure bundle in one document.
    let bundle = g2_bundle_to_json(&g2);
    let btext = serde_json::to_string(&bundle).unwrap();
    println!(
        "bundle: {} bytes, {} algebra generators, contains phiDual: {}",
        btext.len(),
        bundle.algebra.len(),
        btext.contains("phiDual")
    );
    Ok(())
}
