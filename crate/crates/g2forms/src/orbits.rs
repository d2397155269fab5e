//! Classification of 3- and 4-planes of R^7 into G2-orbits, reversal
//! witnesses for φ-planes, and the local-model isomorphism at the standard
//! φ-plane.

use crate::error::{G2Error, Result};
use crate::form::Form;
use crate::g2::{k_block_generators, z2_witness, G2Data, R0, R1, R2, R3, X1, X2, X3};
use crate::matrix::{span_contained, Matrix};
use crate::metric::Metric;
use crate::scalar::Scalar;

/// A k-dimensional (optionally oriented) subspace of R^n given by a basis.
#[derive(Clone, Debug)]
pub struct Plane<T> {
    dim: usize,
    basis: Vec<Vec<T>>,
    oriented: bool,
}

impl<T: Scalar> Plane<T> {
    pub fn new(dim: usize, basis: Vec<Vec<T>>, oriented: bool, tol: f64) -> Result<Self> {
        if basis.iter().any(|v| v.len() != dim) {
            return Err(G2Error::DimensionMismatch(
                "basis vector length differs from ambient dimension".into(),
            ));
        }
        if basis.is_empty() {
            return Err(G2Error::DegenerateInput("empty basis".into()));
        }
        let rank = Matrix::from_rows(basis.clone()).rank(tol);
        if rank != basis.len() {
            return Err(G2Error::DegenerateInput(format!(
                "basis has rank {rank}, expected {}",
                basis.len()
            )));
        }
        Ok(Plane {
            dim,
            basis,
            oriented,
        })
    }

    /// Span of a set of standard axes, positively oriented in axis order.
    pub fn from_axes(dim: usize, axes: &[usize], oriented: bool) -> Self {
        let basis = axes
            .iter()
            .map(|&a| {
                let mut v = vec![T::zero(); dim];
                v[a] = T::one();
                v
            })
            .collect();
        Plane {
            dim,
            basis,
            oriented,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn rank(&self) -> usize {
        self.basis.len()
    }
    pub fn basis(&self) -> &[Vec<T>] {
        &self.basis
    }
    pub fn oriented(&self) -> bool {
        self.oriented
    }

    /// The inclusion matrix R^k -> R^n (columns = basis vectors).
    pub fn inclusion(&self) -> Matrix<T> {
        Matrix::from_cols(self.basis.clone())
    }

    pub fn with_orientation_flipped(&self) -> Self {
        let mut basis = self.basis.clone();
        basis.swap(0, 1);
        Plane {
            dim: self.dim,
            basis,
            oriented: self.oriented,
        }
    }

    /// Setwise equality of spans.
    pub fn same_span(&self, other: &Plane<T>, tol: f64) -> bool {
        self.rank() == other.rank()
            && span_contained(&self.basis, &other.basis, tol)
            && span_contained(&other.basis, &self.basis, tol)
    }

    /// Image under a linear map.
    pub fn apply(&self, g: &Matrix<T>) -> Result<Self> {
        let basis = self.basis.iter().map(|v| g.mul_vec(v)).collect();
        Plane::new(self.dim, basis, self.oriented, 0.0)
    }
}

/// G2-orbit of a plane, together with the invariant `s` (the restriction of
/// φ or ∗φ to an oriented orthonormal basis; `s = sin θ` along the orbit
/// path). `Special` carries no sign for unoriented planes.
#[derive(Clone, Debug, PartialEq)]
pub enum OrbitClass<T> {
    Special { sign: Option<i8> },
    PhiPlane,
    Generic { s: T },
}

impl<T: Scalar> OrbitClass<T> {
    pub fn label(&self) -> &'static str {
        match self {
            OrbitClass::Special { sign: Some(1) } => "special+",
            OrbitClass::Special { sign: Some(-1) } => "special-",
            OrbitClass::Special { .. } => "special",
            OrbitClass::PhiPlane => "phi-plane",
            OrbitClass::Generic { .. } => "generic",
        }
    }
}

/// Gram–Schmidt without square roots: an orthogonal (not unit) basis with
/// the same span and orientation class, plus the exact squared norms.
pub fn orthogonal_basis<T: Scalar>(
    plane: &Plane<T>,
    metric: &Metric<T>,
    tol: f64,
) -> Result<(Vec<Vec<T>>, Vec<T>)> {
    let mut basis: Vec<Vec<T>> = Vec::with_capacity(plane.rank());
    let mut sq_norms: Vec<T> = Vec::with_capacity(plane.rank());
    for v in plane.basis() {
        let mut w = v.clone();
        for (b, n2) in basis.iter().zip(&sq_norms) {
            let c = metric.inner_vec(&w, b);
            let f = c / n2.clone();
            for i in 0..w.len() {
                w[i] = w[i].clone() - f.clone() * b[i].clone();
            }
        }
        let n2 = metric.inner_vec(&w, &w);
        if n2.near_zero(tol) {
            return Err(G2Error::DegenerateInput(
                "plane basis degenerate under the metric".into(),
            ));
        }
        basis.push(w);
        sq_norms.push(n2);
    }
    Ok((basis, sq_norms))
}

/// The orbit invariant of an oriented 3- or 4-plane: φ (k=3) or ∗φ (k=4)
/// evaluated on an oriented orthonormal basis. Independent of the oriented
/// basis choice; negates under orientation flip.
pub fn orbit_invariant<T: Scalar>(plane: &Plane<T>, g2: &G2Data<T>, tol: f64) -> Result<T> {
    let k = plane.rank();
    let form = match k {
        3 => &g2.phi,
        4 => &g2.phi_dual,
        _ => {
            return Err(G2Error::DegreeError(format!(
                "orbit invariant defined for 3- and 4-planes, got rank {k}"
            )))
        }
    };
    let (basis, sq_norms) = orthogonal_basis(plane, &g2.metric, tol)?;
    let value = form.eval(&basis)?;
    let mut prod = T::one();
    for n2 in &sq_norms {
        prod = prod * n2.clone();
    }
    let norm = prod.sqrt_exact().ok_or_else(|| {
        G2Error::InexactSqrt(
            "basis norm product has no exact square root; use float coefficients".into(),
        )
    })?;
    Ok(value / norm)
}

/// Classify a 3- or 4-plane into its G2-orbit.
pub fn classify_plane<T: Scalar>(
    plane: &Plane<T>,
    g2: &G2Data<T>,
    tol: f64,
) -> Result<OrbitClass<T>> {
    let s = orbit_invariant(plane, g2, tol)?;
    if s.near_zero(tol) {
        return Ok(OrbitClass::PhiPlane);
    }
    if (s.clone() * s.clone() - T::one()).near_zero(tol) {
        let sign = if plane.oriented() {
            Some(if s.to_f64() > 0.0 { 1 } else { -1 })
        } else {
            None
        };
        return Ok(OrbitClass::Special { sign });
    }
    let s = if plane.oriented() { s } else { s.abs() };
    Ok(OrbitClass::Generic { s })
}

/// For a φ-plane in standard position (the span of ∂x1,∂x2,∂x3), the
/// structure-preserving element that reverses its orientation:
/// `diag(−1,−1,−1,−1,1,1,1)`.
///
/// Other orbits reject: on the special orbits reversal would swap the two
/// oriented special orbits, and on a generic orbit it would negate the
/// invariant. Non-standard φ-planes need the numeric construction in
/// [`reversal_witness_numeric`].
pub fn reversal_witness<T: Scalar>(
    plane: &Plane<T>,
    g2: &G2Data<T>,
    tol: f64,
) -> Result<Matrix<T>> {
    require_phi_plane(plane, g2, tol)?;
    let standard = Plane::from_axes(7, &[X1, X2, X3], false);
    if !plane.same_span(&standard, tol) {
        return Err(G2Error::NumericFailure(
            "exact witness only available in standard position".into(),
        ));
    }
    Ok(z2_witness())
}

fn require_phi_plane<T: Scalar>(plane: &Plane<T>, g2: &G2Data<T>, tol: f64) -> Result<()> {
    match classify_plane(plane, g2, tol)? {
        OrbitClass::PhiPlane => Ok(()),
        OrbitClass::Special { .. } => Err(G2Error::NotReversible(
            "special orbit: reversal would exchange the two oriented special orbits".into(),
        )),
        OrbitClass::Generic { s } => Err(G2Error::NotReversible(format!(
            "generic orbit with s = {s}: reversal would negate the invariant"
        ))),
    }
}

/// Numeric reversal witness for an arbitrary φ-plane: moves the standard
/// φ-plane onto `plane` by a G2 element found by Gauss–Newton over the
/// 14 algebra parameters, then conjugates the standard witness.
pub fn reversal_witness_numeric(
    plane: &Plane<f64>,
    g2: &G2Data<f64>,
    tol: f64,
) -> Result<Matrix<f64>> {
    require_phi_plane(plane, g2, tol)?;
    let standard = Plane::from_axes(7, &[X1, X2, X3], false);
    if plane.same_span(&standard, 1e-12) {
        return Ok(z2_witness());
    }
    let g = align_phi_plane(plane, g2)?;
    let g_inv = g.inverse(1e-12)?;
    Ok(g.mul(&z2_witness()).mul(&g_inv))
}

/// Find g in the generated G2 with g · span(x1,x2,x3) = plane (floats).
fn align_phi_plane(plane: &Plane<f64>, g2: &G2Data<f64>) -> Result<Matrix<f64>> {
    let target_proj = orthogonal_projector(plane);
    let standard = Plane::<f64>::from_axes(7, &[X1, X2, X3], false);
    let residual = |g: &Matrix<f64>| -> Vec<f64> {
        // Components of the moved basis orthogonal to the target plane.
        let mut out = Vec::with_capacity(21);
        for v in standard.basis() {
            let moved = g.mul_vec(v);
            let proj = target_proj.mul_vec(&moved);
            for i in 0..7 {
                out.push(moved[i] - proj[i]);
            }
        }
        out
    };
    let mut rng_state = 0x9e3779b97f4a7c15u64;
    let mut next = move || {
        rng_state ^= rng_state << 13;
        rng_state ^= rng_state >> 7;
        rng_state ^= rng_state << 17;
        (rng_state >> 11) as f64 / (1u64 << 53) as f64 - 0.5
    };
    for _restart in 0..25 {
        let mut params = vec![0.0f64; 14];
        for p in params.iter_mut() {
            *p = next() * 2.0;
        }
        let build = |params: &[f64]| -> Matrix<f64> {
            let mut a = Matrix::<f64>::zeros(7, 7);
            for (c, basis_elt) in params.iter().zip(&g2.algebra) {
                a = a.add(&basis_elt.scale(c));
            }
            expm(&a)
        };
        let mut converged = true;
        for _iter in 0..200 {
            let g = build(&params);
            let r = residual(&g);
            let err: f64 = r.iter().map(|x| x * x).sum::<f64>().sqrt();
            if err < 1e-12 {
                return Ok(g);
            }
            // Numeric Jacobian, damped Gauss-Newton step.
            let h = 1e-6;
            let mut jac = Matrix::<f64>::zeros(r.len(), 14);
            for j in 0..14 {
                let mut pp = params.clone();
                pp[j] += h;
                let rp = residual(&build(&pp));
                for i in 0..r.len() {
                    jac[(i, j)] = (rp[i] - r[i]) / h;
                }
            }
            let jt = jac.transpose();
            let mut jtj = jt.mul(&jac);
            for d in 0..14 {
                jtj[(d, d)] += 1e-9 + 1e-3 * err;
            }
            let rhs = jt.mul_vec(&r);
            let Ok(inv) = jtj.inverse(1e-300) else {
                converged = false;
                break;
            };
            let step = inv.mul_vec(&rhs);
            for j in 0..14 {
                params[j] -= step[j];
            }
            converged = false;
        }
        if converged {
            break;
        }
    }
    Err(G2Error::NumericFailure(
        "could not align the standard phi-plane with the target".into(),
    ))
}

fn orthogonal_projector(plane: &Plane<f64>) -> Matrix<f64> {
    // P = B (BᵀB)⁻¹ Bᵀ with B the basis column matrix.
    let b = plane.inclusion();
    let bt = b.transpose();
    let gram_inv = bt.mul(&b).inverse(1e-300).expect("plane basis independent");
    b.mul(&gram_inv).mul(&bt)
}

/// Matrix exponential by scaling and squaring with a Taylor series.
pub fn expm(a: &Matrix<f64>) -> Matrix<f64> {
    let n = a.nrows();
    let norm = a.max_abs() * n as f64;
    let squarings = if norm > 0.5 {
        (norm / 0.5).log2().ceil() as u32
    } else {
        0
    };
    let scaled = a.scale(&(1.0 / 2f64.powi(squarings as i32)));
    let mut result = Matrix::<f64>::identity(n);
    let mut term = Matrix::<f64>::identity(n);
    for k in 1..=24 {
        term = term.mul(&scaled).scale(&(1.0 / k as f64));
        result = result.add(&term);
        if term.max_abs() < 1e-18 {
            break;
        }
    }
    for _ in 0..squarings {
        result = result.mul(&result);
    }
    result
}

/// Everything the local normal-form model asserts at the standard
/// φ-plane ξ = span(∂x1,∂x2,∂x3): the assembled 4×4 matrix of
/// `(u,v) ↦ (i_u(∗φ)|_ξ, i_vφ|_ξ)`, its rank, and the equivariance checks
/// against the K-generators and the Z2 element.
#[derive(Clone, Debug)]
pub struct LocalModelReport {
    pub matrix_rank: usize,
    pub failed_generators: Vec<String>,
    pub iso_ok: bool,
}

pub fn local_model_check<T: Scalar>(g2: &G2Data<T>) -> Result<LocalModelReport> {
    let xi = Plane::<T>::from_axes(7, &[X1, X2, X3], true);
    let incl = xi.inclusion();
    let perp_axes = [R0, R1, R2, R3];

    // Assemble the map mu ⊕ lambda -> Λ³ξ* ⊕ Λ²ξ*.
    // Row basis: dx123 ; dx23, dx13, dx12 (canonical masks on the plane).
    let mut mat = Matrix::<T>::zeros(4, 4);
    for (col, &axis) in perp_axes.iter().enumerate() {
        let mut u = vec![T::zero(); 7];
        u[axis] = T::one();
        let top = g2.phi_dual.interior(&u)?.pullback(&incl)?;
        let mid = g2.phi.interior(&u)?.pullback(&incl)?;
        mat[(0, col)] = top.coeff_on(&[0, 1, 2]);
        mat[(1, col)] = mid.coeff_on(&[1, 2]);
        mat[(2, col)] = mid.coeff_on(&[0, 2]);
        mat[(3, col)] = mid.coeff_on(&[0, 1]);
    }
    let matrix_rank = mat.rank(0.0);

    let mut failed = Vec::new();
    // Infinitesimal equivariance for the K-generators A = diag(ℓ, 0, ℓ):
    // i_{Au}δ|_ξ = −lie_act(A|_ξ, (i_uδ)|_ξ) for δ ∈ {φ, ∗φ}.
    for (gi, a) in k_block_generators::<T>().iter().enumerate() {
        let a_xi = a.submatrix(&[X1, X2, X3], &[X1, X2, X3]);
        for &axis in &perp_axes {
            let mut u = vec![T::zero(); 7];
            u[axis] = T::one();
            let au = a.mul_vec(&u);
            for (name, delta) in [("phi", &g2.phi), ("phiDual", &g2.phi_dual)] {
                let lhs = delta.interior(&au)?.pullback(&incl)?;
                let rhs = delta.interior(&u)?.pullback(&incl)?.lie_act(&a_xi)?.neg();
                if lhs != rhs {
                    failed.push(format!("K generator {gi} on axis {axis} ({name})"));
                }
            }
        }
    }
    // Finite equivariance for the Z2 element t (t = t⁻¹):
    // (i_{tu}δ)|_ξ = ((t|_ξ)⁻¹)^* ((i_uδ)|_ξ).
    let t = z2_witness::<T>();
    let t_xi = t.submatrix(&[X1, X2, X3], &[X1, X2, X3]);
    for &axis in &perp_axes {
        let mut u = vec![T::zero(); 7];
        u[axis] = T::one();
        let tu = t.mul_vec(&u);
        for (name, delta) in [("phi", &g2.phi), ("phiDual", &g2.phi_dual)] {
            let lhs = delta.interior(&tu)?.pullback(&incl)?;
            let rhs = delta.interior(&u)?.pullback(&incl)?.pullback(&t_xi)?;
            if lhs != rhs {
                failed.push(format!("Z2 element on axis {axis} ({name})"));
            }
        }
    }

    Ok(LocalModelReport {
        matrix_rank,
        iso_ok: matrix_rank == 4 && failed.is_empty(),
        failed_generators: failed,
    })
}

/// The 4-plane orbit path `ξ_θ = (sinθ ∂r0 + cosθ ∂r1) ∧ ∂x1 ∧ ∂x2 ∧ ∂x3`.
pub fn four_plane_path<T: Scalar>(sin: T, cos: T) -> Plane<T> {
    let mut lead = vec![T::zero(); 7];
    lead[R0] = sin;
    lead[R1] = cos;
    let mut basis = vec![lead];
    for axis in [X1, X2, X3] {
        let mut v = vec![T::zero(); 7];
        v[axis] = T::one();
        basis.push(v);
    }
    Plane {
        dim: 7,
        basis,
        oriented: true,
    }
}

/// The 3-plane orbit path `ξ_θ = (sinθ ∂r1 + cosθ ∂x1) ∧ ∂x2 ∧ ∂x3`
/// (the source prints ∂/∂t¹ for the first direction; no t-coordinate
/// exists, and ∂r1 is the transcription used here).
pub fn three_plane_path<T: Scalar>(sin: T, cos: T) -> Plane<T> {
    let mut lead = vec![T::zero(); 7];
    lead[R1] = sin;
    lead[X1] = cos;
    let mut basis = vec![lead];
    for axis in [X2, X3] {
        let mut v = vec![T::zero(); 7];
        v[axis] = T::one();
        basis.push(v);
    }
    Plane {
        dim: 7,
        basis,
        oriented: true,
    }
}

/// Exact check along the plane path: the pullback of ∗φ to ξ_θ equals
/// `sinθ (sinθ dr0 + cosθ dr1) ∧ dx1∧dx2∧dx3`, both sides expressed in the
/// plane's own coordinates.
pub fn four_plane_path_identity<T: Scalar>(sin: T, cos: T, g2: &G2Data<T>) -> Result<bool> {
    let plane = four_plane_path(sin.clone(), cos.clone());
    let lhs = g2.phi_dual.pullback(&plane.inclusion())?;
    // In plane coordinates (b1, x1, x2, x3) the right-hand side is
    // sinθ·(sin²θ + cos²θ) on the single basis 4-form = sinθ · e^{0123}.
    let coeff = sin.clone() * (sin.clone() * sin + cos.clone() * cos);
    let rhs = Form::monomial(4, &[0, 1, 2, 3], coeff)?;
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{Quad, Rat};

    fn r(n: i64) -> Rat {
        Rat::from_int(n)
    }

    fn g2() -> G2Data<Rat> {
        G2Data::new()
    }

    #[test]
    fn orthogonal_basis_hand_example() {
        // (∂x1+∂x2, ∂x2) -> orthogonal pair with squared norms (2, 1/2).
        let plane = Plane::new(
            7,
            vec![
                vec![r(1), r(1), r(0), r(0), r(0), r(0), r(0)],
                vec![r(0), r(1), r(0), r(0), r(0), r(0), r(0)],
            ],
            true,
            0.0,
        )
        .unwrap();
        let (basis, norms) = orthogonal_basis(&plane, &Metric::standard(7), 0.0).unwrap();
        assert_eq!(norms, vec![r(2), Rat::from_ratio(1, 2)]);
        assert!(Metric::standard(7).inner_vec(&basis[0], &basis[1]).is_zero());
        // Standard basis vectors come back unchanged.
        let std_plane = Plane::<Rat>::from_axes(7, &[X1, X2], true);
        let (basis, norms) = orthogonal_basis(&std_plane, &Metric::standard(7), 0.0).unwrap();
        assert_eq!(basis, std_plane.basis().to_vec());
        assert_eq!(norms, vec![r(1), r(1)]);
    }

    #[test]
    fn rank_deficient_plane_rejected() {
        let res = Plane::new(
            7,
            vec![
                vec![r(1), r(0), r(0), r(0), r(0), r(0), r(0)],
                vec![r(2), r(0), r(0), r(0), r(0), r(0), r(0)],
            ],
            true,
            0.0,
        );
        assert!(res.is_err());
    }

    #[test]
    fn special_and_phi_invariants() {
        let g2 = g2();
        // ξ+ = ∂r0 ∧ ∂x1 ∧ ∂x2 ∧ ∂x3 → s = +1.
        let xi_plus = Plane::<Rat>::from_axes(7, &[R0, X1, X2, X3], true);
        assert_eq!(orbit_invariant(&xi_plus, &g2, 0.0).unwrap(), r(1));
        // span(x1,x2,x3) → s = 0.
        let xspan = Plane::<Rat>::from_axes(7, &[X1, X2, X3], true);
        assert_eq!(orbit_invariant(&xspan, &g2, 0.0).unwrap(), r(0));
        // span(r1,r2,r3) → s = −1 (associative, negatively calibrated).
        let rspan = Plane::<Rat>::from_axes(7, &[R1, R2, R3], true);
        assert_eq!(orbit_invariant(&rspan, &g2, 0.0).unwrap(), r(-1));
        assert_eq!(
            classify_plane(&rspan, &g2, 0.0).unwrap(),
            OrbitClass::Special { sign: Some(-1) }
        );
        assert_eq!(
            classify_plane(&xspan, &g2, 0.0).unwrap(),
            OrbitClass::PhiPlane
        );
    }

    #[test]
    fn path_invariant_at_pi_six() {
        // sin(π/6) = 1/2, cos(π/6) = √3/2.
        let g2 = G2Data::<Quad>::new();
        let sin = Quad::from_ratio(1, 2);
        let cos = Quad::new(Rat::from_int(0), Rat::from_ratio(1, 2), 3);
        let plane = three_plane_path(sin.clone(), cos.clone());
        let s = orbit_invariant(&plane, &g2, 0.0).unwrap();
        assert_eq!(s, Quad::from_ratio(1, 2));
        match classify_plane(&plane, &g2, 0.0).unwrap() {
            OrbitClass::Generic { s } => assert_eq!(s, Quad::from_ratio(1, 2)),
            other => panic!("expected generic, got {other:?}"),
        }
        // The 4-plane path identity at the same angle.
        assert!(four_plane_path_identity(sin, cos, &g2).unwrap());
    }

    #[test]
    fn orientation_flip_negates_invariant() {
        let g2 = g2();
        let plane = Plane::<Rat>::from_axes(7, &[R0, X1, X2, X3], true);
        let flipped = plane.with_orientation_flipped();
        let s = orbit_invariant(&plane, &g2, 0.0).unwrap();
        assert_eq!(orbit_invariant(&flipped, &g2, 0.0).unwrap(), -s);
    }

    #[test]
    fn reversal_witness_standard() {
        let g2 = g2();
        let xspan = Plane::<Rat>::from_axes(7, &[X1, X2, X3], false);
        let w = reversal_witness(&xspan, &g2, 0.0).unwrap();
        assert_eq!(w, z2_witness());
        // Preserves phi, fixes the span, reverses orientation on it.
        assert!(crate::g2::is_structure_preserving(&w, &g2.phi, 0.0).unwrap());
        let moved = xspan.apply(&w).unwrap();
        assert!(moved.same_span(&xspan, 0.0));
        let restricted = w.submatrix(&[X1, X2, X3], &[X1, X2, X3]);
        assert_eq!(restricted.det(), r(-1));
    }

    #[test]
    fn reversal_rejected_off_the_phi_orbit() {
        let g2 = g2();
        let rspan = Plane::<Rat>::from_axes(7, &[R1, R2, R3], false);
        assert!(matches!(
            reversal_witness(&rspan, &g2, 0.0),
            Err(G2Error::NotReversible(_))
        ));
        let g2q = G2Data::<Quad>::new();
        let generic = three_plane_path(
            Quad::from_ratio(1, 2),
            Quad::new(Rat::from_int(0), Rat::from_ratio(1, 2), 3),
        );
        assert!(matches!(
            reversal_witness(&generic, &g2q, 0.0),
            Err(G2Error::NotReversible(_))
        ));
    }

    #[test]
    fn reversal_witness_numeric_on_moved_plane() {
        let g2 = G2Data::<f64>::new();
        // Move the standard phi-plane by a G2 element and recover a witness.
        let mut a = Matrix::<f64>::zeros(7, 7);
        for (i, basis_elt) in g2.algebra.iter().enumerate() {
            a = a.add(&basis_elt.scale(&(0.1 + 0.03 * i as f64)));
        }
        let g = expm(&a);
        let moved = Plane::<f64>::from_axes(7, &[X1, X2, X3], false)
            .apply(&g)
            .unwrap();
        let w = reversal_witness_numeric(&moved, &g2, 1e-9).unwrap();
        assert!(crate::g2::is_structure_preserving(&w, &g2.phi, 1e-8).unwrap());
        assert!(moved.apply(&w).unwrap().same_span(&moved, 1e-8));
        // Restriction to the plane has determinant −1: express w·b in the
        // plane basis.
        let b = moved.inclusion();
        let bt = b.transpose();
        let gram_inv = bt.mul(&b).inverse(1e-300).unwrap();
        let coords = gram_inv.mul(&bt).mul(&w.mul(&b));
        assert!((coords.det() + 1.0).abs() < 1e-6);
    }

    #[test]
    fn local_model_isomorphism() {
        let report = local_model_check(&g2()).unwrap();
        assert_eq!(report.matrix_rank, 4);
        assert!(report.iso_ok, "failed: {:?}", report.failed_generators);
    }

    #[test]
    fn local_model_interior_values() {
        let g2 = g2();
        let xi = Plane::<Rat>::from_axes(7, &[X1, X2, X3], true);
        let incl = xi.inclusion();
        // u = ∂r0: i_u(∗φ)|_ξ = dx1∧dx2∧dx3.
        let mut u = vec![r(0); 7];
        u[R0] = r(1);
        let top = g2.phi_dual.interior(&u).unwrap().pullback(&incl).unwrap();
        assert_eq!(top, Form::monomial(3, &[0, 1, 2], r(1)).unwrap());
        // v = ∂r1: i_vφ|_ξ = dx2∧dx3.
        let mut v = vec![r(0); 7];
        v[R1] = r(1);
        let mid = g2.phi.interior(&v).unwrap().pullback(&incl).unwrap();
        assert_eq!(mid, Form::monomial(3, &[1, 2], r(1)).unwrap());
    }
}
