//! The Cayley-coordinate G2 forms, the induced metric, the stabilizer
//! algebra and invariant-form dimension counts.
//!
//! Axis ordering convention throughout: indices 0..6 = (x1, x2, x3, r0, r1,
//! r2, r3). Orientation: vol = dx1∧dx2∧dx3∧dr0∧dr1∧dr2∧dr3, which makes the
//! computed dual four-form carry +dr0∧dx1∧dx2∧dx3.

use crate::error::{G2Error, Result};
use crate::form::{Form, MultiIndex};
use crate::matrix::Matrix;
use crate::metric::{leading_minors_positive, Metric};
use crate::scalar::Scalar;

pub const X1: usize = 0;
pub const X2: usize = 1;
pub const X3: usize = 2;
pub const R0: usize = 3;
pub const R1: usize = 4;
pub const R2: usize = 5;
pub const R3: usize = 6;

/// The fundamental three-form, its computed dual, the induced metric and a
/// basis of the 14-dimensional stabilizer algebra.
#[derive(Clone)]
pub struct G2Data<T> {
    pub phi: Form<T>,
    pub phi_dual: Form<T>,
    pub metric: Metric<T>,
    pub algebra: Vec<Matrix<T>>,
}

impl<T: Scalar> G2Data<T> {
    pub fn new() -> Self {
        let phi = cayley_phi::<T>();
        let metric = Metric::standard(7);
        let phi_dual = metric.star(&phi).expect("star of the Cayley form");
        let algebra = annihilator_algebra(&phi, 0.0);
        debug_assert_eq!(algebra.len(), 14);
        G2Data {
            phi,
            phi_dual,
            metric,
            algebra,
        }
    }
}

impl<T: Scalar> Default for G2Data<T> {
    fn default() -> Self {
        Self::new()
    }
}

/// The anti-self-dual two-forms `ω1, ω2, ω3` on the R^4 factor, extended to
/// R^7 by zero.
pub fn omega_forms<T: Scalar>() -> [Form<T>; 3] {
    let one = T::one;
    [
        // ω1 = dr0∧dx1 + dx2∧dx3
        Form::monomial(7, &[R0, X1], one())
            .unwrap()
            .add(&Form::monomial(7, &[X2, X3], one()).unwrap()),
        // ω2 = dr0∧dx2 − dx1∧dx3
        Form::monomial(7, &[R0, X2], one())
            .unwrap()
            .add(&Form::monomial(7, &[X1, X3], -one()).unwrap()),
        // ω3 = dr0∧dx3 + dx1∧dx2
        Form::monomial(7, &[R0, X3], one())
            .unwrap()
            .add(&Form::monomial(7, &[X1, X2], one()).unwrap()),
    ]
}

/// The fundamental three-form `φ = ω1∧dr1 + ω2∧dr2 + ω3∧dr3 − dr123` in
/// Cayley coordinates. Seven monomials, all coefficients ±1.
pub fn cayley_phi<T: Scalar>() -> Form<T> {
    let [w1, w2, w3] = omega_forms::<T>();
    let dr = |axis: usize| Form::monomial(7, &[axis], T::one()).unwrap();
    let dr123 = Form::monomial(7, &[R1, R2, R3], T::one()).unwrap();
    w1.wedge(&dr(R1))
        .unwrap()
        .add(&w2.wedge(&dr(R2)).unwrap())
        .add(&w3.wedge(&dr(R3)).unwrap())
        .sub(&dr123)
}

/// The dual four-form exactly as printed in the source Remark, with the
/// duplicated `dr^{12}` slot transcribed literally:
/// `−ω1∧dr^{12} + ω2∧dr^{13} − ω3∧dr^{12} + dr0∧dx^{123}`.
/// Kept only so the verifier can print the discrepancy against the computed
/// `∗φ` (the correct middle term is `−ω1∧dr^{23}`).
pub fn printed_phi_dual<T: Scalar>() -> Form<T> {
    let [w1, w2, w3] = omega_forms::<T>();
    let m = |axes: &[usize], c: i64| Form::monomial(7, axes, T::from_int(c)).unwrap();
    w1.wedge(&m(&[R1, R2], -1))
        .unwrap()
        .add(&w2.wedge(&m(&[R1, R3], 1)).unwrap())
        .add(&w3.wedge(&m(&[R1, R2], -1)).unwrap())
        .add(&m(&[R0, X1, X2, X3], 1))
}

/// Result of the metric-from-three-form construction. The bilinear form is
/// normalized so the Cayley form maps to the identity; for other stable
/// forms the true metric differs from `gram` by the ninth root of
/// `det_gram`, which is exposed instead of being taken.
#[derive(Clone)]
pub struct InducedMetric<T> {
    pub gram: Matrix<T>,
    pub det_gram: T,
}

/// `B(u,v)·vol ∝ i_uφ ∧ i_vφ ∧ φ`, normalized so the Cayley φ yields the
/// identity matrix.
pub fn metric_from_three_form<T: Scalar>(phi: &Form<T>, tol: f64) -> Result<InducedMetric<T>> {
    if phi.dim() != 7 || phi.degree() != 3 {
        return Err(G2Error::ShapeMismatch(
            "metric induction needs a three-form on R^7".into(),
        ));
    }
    let n = 7;
    let vol_idx: Vec<usize> = (0..n).collect();
    let mut b = Matrix::<T>::zeros(n, n);
    for i in 0..n {
        let mut ei = vec![T::zero(); n];
        ei[i] = T::one();
        let iu = phi.interior(&ei)?;
        for j in i..n {
            let mut ej = vec![T::zero(); n];
            ej[j] = T::one();
            let iv = phi.interior(&ej)?;
            let w = iu.wedge(&iv)?.wedge(phi)?;
            let val = w.coeff_on(&vol_idx);
            b[(i, j)] = val.clone();
            b[(j, i)] = val;
        }
    }
    // The Cayley form gives B = 6·id with this orientation.
    let b = b.scale(&T::from_ratio(1, 6));
    let det = b.det();
    if det.near_zero(tol) {
        return Err(G2Error::NotStable);
    }
    if !leading_minors_positive(&b) {
        return Err(G2Error::NotPositive);
    }
    Ok(InducedMetric { gram: b, det_gram: det })
}

/// Exact basis of `{A ∈ gl(n) : lie_act(A, a) = 0}`.
pub fn annihilator_algebra<T: Scalar>(a: &Form<T>, tol: f64) -> Vec<Matrix<T>> {
    let n = a.dim();
    let monomials = MultiIndex::all(n, a.degree());
    let mut rows = vec![vec![T::zero(); n * n]; monomials.len()];
    for i in 0..n {
        for j in 0..n {
            let mut e = Matrix::<T>::zeros(n, n);
            e[(i, j)] = T::one();
            let acted = a.lie_act(&e).expect("shape checked");
            for (r, idx) in monomials.iter().enumerate() {
                rows[r][i * n + j] = acted.coeff(*idx);
            }
        }
    }
    Matrix::from_rows(rows)
        .nullspace(tol)
        .into_iter()
        .map(|v| Matrix::from_fn(n, n, |i, j| v[i * n + j].clone()))
        .collect()
}

/// `true` iff the pullback of `a` along `g` equals `a`.
pub fn is_structure_preserving<T: Scalar>(
    g: &Matrix<T>,
    a: &Form<T>,
    tol: f64,
) -> Result<bool> {
    if g.det().near_zero(tol) {
        return Err(G2Error::SingularMatrix);
    }
    let pulled = a.pullback(g)?;
    Ok(pulled.sub(a).terms().all(|(_, c)| c.near_zero(tol)))
}

/// For each degree k = 0..=n, the dimension of the space of constant
/// k-forms annihilated by every element of `algebra` under `lie_act`.
pub fn invariant_dimensions<T: Scalar>(algebra: &[Matrix<T>], n: usize, tol: f64) -> Vec<usize> {
    (0..=n)
        .map(|k| invariant_forms(algebra, n, k, tol).len())
        .collect()
}

/// Basis of the joint `lie_act` nullspace in degree k.
pub fn invariant_forms<T: Scalar>(
    algebra: &[Matrix<T>],
    n: usize,
    k: usize,
    tol: f64,
) -> Vec<Form<T>> {
    let monomials = MultiIndex::all(n, k);
    let dim = monomials.len();
    if algebra.is_empty() {
        return monomials
            .into_iter()
            .map(|idx| Form::from_terms(n, k, vec![(idx, T::one())]).unwrap())
            .collect();
    }
    let mut rows = Vec::with_capacity(algebra.len() * dim);
    for a_mat in algebra {
        // Row block: the matrix of lie_act(a_mat, ·) on degree-k forms.
        let mut block = vec![vec![T::zero(); dim]; dim];
        for (c, idx) in monomials.iter().enumerate() {
            let acted = Form::from_terms(n, k, vec![(*idx, T::one())])
                .unwrap()
                .lie_act(a_mat)
                .expect("square");
            for (r, target) in monomials.iter().enumerate() {
                block[r][c] = acted.coeff(*target);
            }
        }
        rows.extend(block);
    }
    Matrix::from_rows(rows)
        .nullspace(tol)
        .into_iter()
        .map(|v| {
            Form::from_terms(
                n,
                k,
                monomials
                    .iter()
                    .cloned()
                    .zip(v.into_iter())
                    .collect::<Vec<_>>(),
            )
            .unwrap()
        })
        .collect()
}

/// Basis of antisymmetric n×n matrices, i.e. so(n).
pub fn so_algebra<T: Scalar>(n: usize) -> Vec<Matrix<T>> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let mut m = Matrix::<T>::zeros(n, n);
            m[(i, j)] = T::one();
            m[(j, i)] = -T::one();
            out.push(m);
        }
    }
    out
}

/// The orientation-reversing stabilizer element
/// `diag(−1,−1,−1,−1,1,1,1)` in the (x1,x2,x3,r0,r1,r2,r3) ordering.
pub fn z2_witness<T: Scalar>() -> Matrix<T> {
    Matrix::diagonal(&[
        -T::one(),
        -T::one(),
        -T::one(),
        -T::one(),
        T::one(),
        T::one(),
        T::one(),
    ])
}

/// Generators of the K-block `diag(a, 1, a)`, `a ∈ SO(3)`: the three
/// standard so(3) rotations applied simultaneously to (x1,x2,x3) and
/// (r1,r2,r3).
pub fn k_block_generators<T: Scalar>() -> Vec<Matrix<T>> {
    let mut out = Vec::new();
    for (p, q) in [(1usize, 2usize), (2, 0), (0, 1)] {
        let mut m = Matrix::<T>::zeros(7, 7);
        m[(p, q)] = T::one();
        m[(q, p)] = -T::one();
        m[(p + 4, q + 4)] = T::one();
        m[(q + 4, p + 4)] = -T::one();
        out.push(m);
    }
    out
}
