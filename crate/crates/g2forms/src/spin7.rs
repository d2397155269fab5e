//! The Cayley four-form Φ0 = ½ω0² + Re Ψ0 on R^8, the four-dimensional
//! symmetry algebra spanned by E_0..E_3, the induced three-form on tangent
//! spaces of S^7, the cone decomposition Φ0 = r³dr∧φ + r⁴∗7φ, the
//! homogeneous-orbit obstruction function and the quadric orbit description.

use crate::error::{G2Error, Result};
use crate::form::Form;
use crate::g2::metric_from_three_form;
use crate::matrix::Matrix;
use crate::metric::Metric;
use crate::orbits::expm;
use crate::scalar::Scalar;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

/// The real-coordinate layout of the complex coordinates (z1,…,z4):
/// `z_j = x_{re} + i·s_j·x_{im}` per plane, plus the sign put in front of
/// Re Ψ0 inside Φ0.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Pairing {
    /// (real axis, imaginary axis, imaginary sign) for z1..z4.
    pub planes: [(usize, usize, i8); 4],
    /// Sign of the Re Ψ0 summand of Φ0.
    pub psi_sign: i8,
}

/// The convention found by the documented search (see
/// [`search_pairing`]): z1 on the (x0,x7) plane where the torus acts with
/// charge three, the remaining planes matched to the T-invariant splitting.
pub const DEFAULT_PAIRING: Pairing = Pairing {
    planes: [(0, 7, 1), (1, 6, 1), (5, 2, 1), (4, 3, 1)],
    psi_sign: 1,
};

impl Pairing {
    /// The Kähler form: i/2 Σ dz_j∧dz̄_j = Σ s_j dx_re∧dx_im.
    pub fn omega0<T: Scalar>(&self) -> Form<T> {
        let mut out = Form::zero(8, 2);
        for &(re, im, s) in &self.planes {
            out = out.add(&Form::monomial(8, &[re, im], T::from_int(s as i64)).unwrap());
        }
        out
    }

    /// Re(dz1∧dz2∧dz3∧dz4): subsets with an even number of imaginary
    /// factors, weighted by i^{|S|} = (−1)^{|S|/2} and the plane signs.
    pub fn re_psi0<T: Scalar>(&self) -> Form<T> {
        let mut out = Form::zero(8, 4);
        for mask in 0u8..16 {
            let picks = mask.count_ones() as usize;
            if picks % 2 != 0 {
                continue;
            }
            let mut axes = [0usize; 4];
            let mut sign = if picks % 4 == 0 { 1i64 } else { -1 };
            for (j, &(re, im, s)) in self.planes.iter().enumerate() {
                if mask >> j & 1 == 1 {
                    axes[j] = im;
                    sign *= s as i64;
                } else {
                    axes[j] = re;
                }
            }
            out = out.add(&Form::monomial(8, &axes, T::from_int(sign)).unwrap());
        }
        out
    }

    pub fn phi0<T: Scalar>(&self) -> Form<T> {
        let w = self.omega0::<T>();
        w.wedge(&w)
            .unwrap()
            .scale(&T::from_ratio(1, 2))
            .add(&self.re_psi0::<T>().scale(&T::from_int(self.psi_sign as i64)))
    }
}

/// The four generators of g = g_s ⊕ t acting on R^8, transcribed from the
/// displayed matrix: E_0 spans t, E_1..E_3 span g_s ≅ so(3).
pub fn generators<T: Scalar>() -> [Matrix<T>; 4] {
    let entries: [&[(usize, usize, i64)]; 4] = [
        &[
            (0, 7, 3),
            (7, 0, -3),
            (1, 6, -1),
            (6, 1, 1),
            (2, 5, 1),
            (5, 2, -1),
            (3, 4, 1),
            (4, 3, -1),
        ],
        &[(1, 2, 1), (2, 1, -1), (5, 6, 1), (6, 5, -1)],
        &[(1, 3, 1), (3, 1, -1), (4, 6, 1), (6, 4, -1)],
        &[(2, 3, -1), (3, 2, 1), (4, 5, 1), (5, 4, -1)],
    ];
    entries.map(|list| {
        let mut m = Matrix::<T>::zeros(8, 8);
        for &(i, j, v) in list {
            m[(i, j)] = T::from_int(v);
        }
        m
    })
}

/// Φ0 together with its building blocks, the generators, and the recorded
/// pairing convention.
#[derive(Clone)]
pub struct Spin7Data<T> {
    pub omega0: Form<T>,
    pub psi0_real: Form<T>,
    pub phi0: Form<T>,
    pub pairing: Pairing,
    pub generators: [Matrix<T>; 4],
}

fn pairing_compatible<T: Scalar>(p: &Pairing, gens: &[Matrix<T>; 4]) -> bool {
    let phi0 = p.phi0::<T>();
    if gens.iter().any(|e| !phi0.lie_act(e).unwrap().is_zero()) {
        return false;
    }
    let metric = Metric::<T>::standard(8);
    if metric.star(&phi0).unwrap() != phi0 {
        return false;
    }
    let vol14 = metric.volume_form().unwrap().scale(&T::from_int(14));
    phi0.wedge(&phi0).unwrap() == vol14
}

/// Exhaustive search over the natural re-pairings: z1 stays on the (x0,x7)
/// plane (the charge-three plane of T), the other three planes are permuted
/// and each plane's real/imaginary order and imaginary sign are flipped,
/// together with the sign of Re Ψ0.
pub fn search_pairing<T: Scalar>() -> Option<Pairing> {
    let gens = generators::<T>();
    let base: [(usize, usize); 4] = [(0, 7), (1, 6), (2, 5), (3, 4)];
    let perms: [[usize; 3]; 6] = [
        [1, 2, 3],
        [1, 3, 2],
        [2, 1, 3],
        [2, 3, 1],
        [3, 1, 2],
        [3, 2, 1],
    ];
    for perm in perms {
        for opts in 0u32..256 {
            for psi_sign in [1i8, -1] {
                let mut planes = [(0usize, 0usize, 0i8); 4];
                for slot in 0..4 {
                    let (a, b) = if slot == 0 {
                        base[0]
                    } else {
                        base[perm[slot - 1]]
                    };
                    let swap = opts >> (2 * slot) & 1 == 1;
                    let s: i8 = if opts >> (2 * slot + 1) & 1 == 1 { -1 } else { 1 };
                    planes[slot] = if swap { (b, a, s) } else { (a, b, s) };
                }
                let candidate = Pairing { planes, psi_sign };
                if pairing_compatible::<T>(&candidate, &gens) {
                    return Some(candidate);
                }
            }
        }
    }
    None
}

impl<T: Scalar> Spin7Data<T> {
    pub fn new() -> Result<Self> {
        let gens = generators::<T>();
        let pairing = if pairing_compatible::<T>(&DEFAULT_PAIRING, &gens) {
            DEFAULT_PAIRING
        } else {
            search_pairing::<T>().ok_or(G2Error::NoCompatiblePairing)?
        };
        Ok(Spin7Data {
            omega0: pairing.omega0(),
            psi0_real: pairing.re_psi0(),
            phi0: pairing.phi0(),
            pairing,
            generators: gens,
        })
    }
}

/// Positively oriented orthonormal frame of x^⊥ ⊂ R^8: the orientation is
/// the one induced by the radial vector, det[x | f_1 … f_7] = +1.
pub fn tangent_frame(x: &[f64]) -> Result<Vec<Vec<f64>>> {
    if x.len() != 8 {
        return Err(G2Error::DimensionMismatch("frame needs a vector in R^8".into()));
    }
    let norm: f64 = x.iter().map(|v| v * v).sum::<f64>().sqrt();
    if (norm - 1.0).abs() > 1e-9 {
        return Err(G2Error::InvalidInput(format!("non-unit point, |x| = {norm}")));
    }
    // Gram-Schmidt the standard basis against x, dropping the most
    // x-aligned direction.
    let drop = (0..8)
        .max_by(|&a, &b| x[a].abs().partial_cmp(&x[b].abs()).unwrap())
        .unwrap();
    let mut frame: Vec<Vec<f64>> = vec![x.to_vec()];
    for i in 0..8 {
        if i == drop {
            continue;
        }
        let mut v = vec![0.0f64; 8];
        v[i] = 1.0;
        for b in &frame {
            let c: f64 = v.iter().zip(b).map(|(a, b)| a * b).sum();
            for (vi, bi) in v.iter_mut().zip(b) {
                *vi -= c * bi;
            }
        }
        let n: f64 = v.iter().map(|a| a * a).sum::<f64>().sqrt();
        if n < 1e-12 {
            return Err(G2Error::NumericFailure("degenerate frame".into()));
        }
        for vi in v.iter_mut() {
            *vi /= n;
        }
        frame.push(v);
    }
    // Enforce det[x | frame] = +1 by flipping the last vector if needed.
    let det = Matrix::from_cols(frame.clone()).det();
    if det < 0.0 {
        for vi in frame[7].iter_mut() {
            *vi = -*vi;
        }
    }
    Ok(frame[1..].to_vec())
}

/// φ_x expressed in the coordinates of the given orthonormal frame of x^⊥:
/// coefficient on e^{jkl} is Φ0(x, f_j, f_k, f_l).
pub fn sphere_three_form(
    x: &[f64],
    frame: &[Vec<f64>],
    data: &Spin7Data<f64>,
) -> Result<Form<f64>> {
    let radial = data.phi0.interior(&x.to_vec())?;
    frame_coordinates(&radial, frame)
}

/// ∗7 φ_x in the same frame coordinates: the pullback of Φ0 to x^⊥
/// (the r⁴∗7φ term of the cone decomposition at r = 1).
pub fn sphere_four_form(
    x: &[f64],
    frame: &[Vec<f64>],
    data: &Spin7Data<f64>,
) -> Result<Form<f64>> {
    let _ = x;
    frame_coordinates(&data.phi0, frame)
}

fn frame_coordinates(a: &Form<f64>, frame: &[Vec<f64>]) -> Result<Form<f64>> {
    let incl = Matrix::from_cols(frame.to_vec());
    a.pullback(&incl)
}

/// ‖(Φ0 restricted to x^⊥) − ∗7(φ_x)‖ in the frame coordinates; zero when
/// the cone decomposition Φ0 = r³dr∧φ + r⁴∗7φ holds with the induced
/// orientation.
pub fn cone_consistency_check(x: &[f64], data: &Spin7Data<f64>) -> Result<f64> {
    let frame = tangent_frame(x)?;
    let phi_x = sphere_three_form(x, &frame, data)?;
    let restricted = sphere_four_form(x, &frame, data)?;
    let star7 = Metric::<f64>::standard(7).star(&phi_x)?;
    Ok(restricted.sub(&star7).norm_sq().sqrt())
}

/// |Φ0(x, v1, v2, v3)| on the displayed unit tangent frame of the orbit
/// through x = (x0, x1, 0, 0, 0, 0, x6, 0), paired with the closed form
/// `4|x0x6(3x1² − x6²)| / ((x1²+x6²)√(8x0²+1))`.
pub fn obstruction_value<T: Scalar>(x0: T, x1: T, x6: T, tol: f64) -> Result<(T, T)> {
    let unit = x0.clone() * x0.clone() + x1.clone() * x1.clone() + x6.clone() * x6.clone()
        - T::one();
    if !unit.near_zero(tol) {
        return Err(G2Error::InvalidInput("x0² + x1² + x6² must be 1".into()));
    }
    let plane_sq = x1.clone() * x1.clone() + x6.clone() * x6.clone();
    if plane_sq.near_zero(tol) {
        return Err(G2Error::DegenerateInput(
            "x1 = x6 = 0: the tangent frame degenerates (needs x0²+x7² < 1)".into(),
        ));
    }
    let data_phi0 = DEFAULT_PAIRING.phi0::<T>();
    let gens = generators::<T>();
    let mut x = vec![T::zero(); 8];
    x[0] = x0.clone();
    x[1] = x1.clone();
    x[6] = x6.clone();
    let t_norm_sq = T::from_int(8) * x0.clone() * x0.clone() + T::one();
    let t_norm = t_norm_sq
        .sqrt_exact()
        .ok_or_else(|| G2Error::InexactSqrt("√(8x0²+1) not in the scalar field".into()))?;
    let e0x = gens[0].mul_vec(&x);
    let e1x = gens[1].mul_vec(&x);
    let e2x = gens[2].mul_vec(&x);
    let numeric = data_phi0
        .interior(&x)?
        .eval(&[e0x, e1x, e2x])?
        .abs()
        / (t_norm.clone() * plane_sq.clone());
    let closed = (T::from_int(4)
        * (x0 * x6.clone() * (T::from_int(3) * x1.clone() * x1 - x6.clone() * x6)).abs())
        / (plane_sq * t_norm);
    Ok((numeric, closed))
}

/// Which φ-orbit branch a point lies on.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub enum OrbitPointClass {
    /// Obstruction vanishes; `branches` records which of the displayed
    /// conditions fired: "x0=0", "x6=0", "3x1^2=x6^2".
    PhiOrbit { branches: Vec<String> },
    Generic { value: f64 },
}

pub fn classify_orbit_point<T: Scalar>(x0: T, x1: T, x6: T, tol: f64) -> Result<OrbitPointClass> {
    let (numeric, closed) = obstruction_value(x0.clone(), x1.clone(), x6.clone(), tol)?;
    debug_assert!((numeric.to_f64() - closed.to_f64()).abs() <= tol.max(1e-12));
    if numeric.near_zero(tol) {
        let mut branches = Vec::new();
        if x0.near_zero(tol) {
            branches.push("x0=0".to_string());
        }
        if x6.near_zero(tol) {
            branches.push("x6=0".to_string());
        }
        if (T::from_int(3) * x1.clone() * x1 - x6.clone() * x6).near_zero(tol) {
            branches.push("3x1^2=x6^2".to_string());
        }
        Ok(OrbitPointClass::PhiOrbit { branches })
    } else {
        Ok(OrbitPointClass::Generic {
            value: numeric.to_f64(),
        })
    }
}

/// Residual report for orbit samples through a starting point.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct OrbitSampleReport {
    pub points: Vec<Vec<f64>>,
    pub max_sphere_residual: f64,
    /// Max |x1x5+x2x6|, |x1x4+x3x6|, |x2x4−x3x5| over the samples
    /// (reported for any start point; the quadrics cut out the orbit
    /// through (0,1,0,…,0)).
    pub max_quadric_residuals: [f64; 3],
    /// Max |x0|, |x7| over the samples.
    pub max_linear_residuals: [f64; 2],
}

/// Samples exp(Σ a_j E_j)·x for `count` random coefficient vectors with
/// ‖a‖ ≤ 10, reporting unit-norm and quadric residuals.
pub fn orbit_sample(x: &[f64], count: usize, seed: u64) -> Result<OrbitSampleReport> {
    if x.len() != 8 {
        return Err(G2Error::DimensionMismatch("orbit sampling needs R^8".into()));
    }
    let norm: f64 = x.iter().map(|v| v * v).sum::<f64>().sqrt();
    if (norm - 1.0).abs() > 1e-9 {
        return Err(G2Error::InvalidInput("non-unit start point".into()));
    }
    let gens = generators::<f64>();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points = Vec::with_capacity(count);
    let mut max_sphere = 0.0f64;
    let mut max_quadrics = [0.0f64; 3];
    let mut max_linear = [0.0f64; 2];
    for _ in 0..count {
        let a: Vec<f64> = (0..4).map(|_| rng.gen_range(-5.0..5.0)).collect();
        let mut m = Matrix::<f64>::zeros(8, 8);
        for (c, e) in a.iter().zip(&gens) {
            m = m.add(&e.scale(c));
        }
        let y = expm(&m).mul_vec(&x.to_vec());
        let sphere = (y.iter().map(|v| v * v).sum::<f64>() - 1.0).abs();
        max_sphere = max_sphere.max(sphere);
        let quadrics = [
            y[1] * y[5] + y[2] * y[6],
            y[1] * y[4] + y[3] * y[6],
            y[2] * y[4] - y[3] * y[5],
        ];
        for (acc, q) in max_quadrics.iter_mut().zip(quadrics) {
            *acc = acc.max(q.abs());
        }
        max_linear[0] = max_linear[0].max(y[0].abs());
        max_linear[1] = max_linear[1].max(y[7].abs());
        points.push(y);
    }
    Ok(OrbitSampleReport {
        points,
        max_sphere_residual: max_sphere,
        max_quadric_residuals: max_quadrics,
        max_linear_residuals: max_linear,
    })
}

/// The stereographic chart ψ(p) = (2p, 1−|p|²)/(1+|p|²) ∈ S^7 ⊂ R^7 ⊕ R
/// and its partials, used for the finite-difference nearly-parallel check.
fn chart(p: &[f64; 7]) -> [f64; 8] {
    let n2: f64 = p.iter().map(|v| v * v).sum();
    let d = 1.0 + n2;
    let mut out = [0.0f64; 8];
    for i in 0..7 {
        out[i] = 2.0 * p[i] / d;
    }
    out[7] = (1.0 - n2) / d;
    out
}

/// Coefficients of ψ^*φ at p: G_{jkl}(p) = Φ0(ψ(p), ∂_jψ, ∂_kψ, ∂_lψ).
fn chart_phi(p: &[f64; 7], data: &Spin7Data<f64>, step: f64) -> Result<Form<f64>> {
    let x = chart(p);
    let mut partials = Vec::with_capacity(7);
    for j in 0..7 {
        let mut pp = *p;
        pp[j] += step;
        let mut pm = *p;
        pm[j] -= step;
        let (xp, xm) = (chart(&pp), chart(&pm));
        partials.push(
            (0..8)
                .map(|i| (xp[i] - xm[i]) / (2.0 * step))
                .collect::<Vec<f64>>(),
        );
    }
    let radial = data.phi0.interior(&x.to_vec())?;
    radial.pullback(&Matrix::from_cols(partials))
}

/// Finite-difference check of dφ = 4∗7φ in the stereographic chart:
/// returns max |(dG − 4ψ^*(∗7φ))_{abcd}| at the point.
pub fn nearly_parallel_residual(
    p: &[f64; 7],
    data: &Spin7Data<f64>,
    step: f64,
) -> Result<f64> {
    // dG by central differences on the 3-form coefficients.
    let mut d_g = Form::<f64>::zero(7, 4);
    for a in 0..7 {
        let mut pp = *p;
        pp[a] += step;
        let mut pm = *p;
        pm[a] -= step;
        let diff = chart_phi(&pp, data, step)?
            .sub(&chart_phi(&pm, data, step)?)
            .scale(&(1.0 / (2.0 * step)));
        let da = Form::monomial(7, &[a], 1.0)?;
        d_g = d_g.add(&da.wedge(&diff)?);
    }
    // ψ^*(∗7φ): the star taken pointwise on x^⊥, pulled back through the
    // chart differential expressed in the oriented orthonormal frame.
    let x = chart(p);
    let frame = tangent_frame(&x)?;
    let phi_x = sphere_three_form(&x, &frame, data)?;
    let star = Metric::<f64>::standard(7).star(&phi_x)?;
    let mut partials = Vec::with_capacity(7);
    for j in 0..7 {
        let mut pp = *p;
        pp[j] += step;
        let mut pm = *p;
        pm[j] -= step;
        let (xp, xm) = (chart(&pp), chart(&pm));
        let dpsi: Vec<f64> = (0..8).map(|i| (xp[i] - xm[i]) / (2.0 * step)).collect();
        // Coordinates of ∂_jψ in the frame.
        partials.push(
            frame
                .iter()
                .map(|f| f.iter().zip(&dpsi).map(|(a, b)| a * b).sum::<f64>())
                .collect::<Vec<f64>>(),
        );
    }
    let pulled_star = star.pullback(&Matrix::from_cols(partials))?;
    Ok(d_g.sub(&pulled_star.scale(&4.0)).max_abs())
}

/// Stability of φ_x at random unit points: metric_from_three_form succeeds.
pub fn sphere_form_stable_at(x: &[f64], data: &Spin7Data<f64>, tol: f64) -> Result<bool> {
    let frame = tangent_frame(x)?;
    let phi_x = sphere_three_form(x, &frame, data)?;
    Ok(metric_from_three_form(&phi_x, tol).is_ok())
}

pub fn random_unit_point(rng: &mut ChaCha8Rng) -> Vec<f64> {
    loop {
        let v: Vec<f64> = (0..8).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let n: f64 = v.iter().map(|a| a * a).sum::<f64>().sqrt();
        if n > 0.1 {
            return v.into_iter().map(|a| a / n).collect();
        }
    }
}
