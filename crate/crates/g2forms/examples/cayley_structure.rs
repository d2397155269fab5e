//! Build the Cayley three-form on R^7 with exact rational arithmetic,
//! recover the induced metric, compute the stabilizer algebra, and compare
//! the computed Hodge dual against the commonly printed expression.

use g2forms::g2::{
    annihilator_algebra, invariant_dimensions, metric_from_three_form, printed_phi_dual,
};
use g2forms::{Form, G2Data, Matrix, Rat};

fn main() -> g2forms::Result<()> {
    let tol = 1e-9;
    let g2 = G2Data::<Rat>::new();

    println!("phi   = {} monomials, |phi|^2 = {}", g2.phi.num_terms(), g2.phi.norm_sq());
    println!("*phi  = {} monomials", g2.phi_dual.num_terms());

    // The three-form determines the metric: B(u,v)·vol = i_u phi ∧ i_v phi ∧ phi.
    let induced = metric_from_three_form(&g2.phi, tol)?;
    assert_eq!(induced.gram, Matrix::identity(7));
    println!("induced gram  = identity, det = {}", induced.det_gram);

    // The stabilizer of phi inside gl(7) is 14-dimensional.
    let algebra = annihilator_algebra(&g2.phi, tol);
    println!("dim stab(phi) = {}", algebra.len());

    // Invariant forms in each degree: 1 0 0 1 1 0 0 1.
    let dims = invariant_dimensions(&algebra, 7, tol);
    println!("invariant form dimensions by degree: {dims:?}");

    // The dual four-form as often printed differs from the computed one.
    let printed: Form<Rat> = printed_phi_dual();
    let diff = g2.phi_dual.sub(&printed);
    println!(
        "printed dual matches computed dual: {} (difference has {} monomials)",
        diff.is_zero(),
        diff.num_terms()
    );
    for (idx, c) in diff.terms() {
        println!("  discrepancy on e_{:?}: {}", idx.axes(), c);
    }
    Ok(())
}
