//! Metrics and the Hodge star.

use crate::error::{G2Error, Result};
use crate::form::{Form, MultiIndex};
use crate::matrix::Matrix;
use crate::scalar::Scalar;

/// Symmetric positive-definite bilinear form plus an orientation sign fixing
/// the volume form.
#[derive(Clone, Debug, PartialEq)]
pub struct Metric<T> {
    gram: Matrix<T>,
    orientation: i8,
}

impl<T: Scalar> Metric<T> {
    pub fn new(gram: Matrix<T>, orientation: i8) -> Result<Self> {
        assert!(orientation == 1 || orientation == -1);
        if !gram.is_square() {
            return Err(G2Error::ShapeMismatch("metric must be square".into()));
        }
        let n = gram.nrows();
        for i in 0..n {
            for j in 0..i {
                if gram[(i, j)] != gram[(j, i)] {
                    return Err(G2Error::InvalidInput("metric must be symmetric".into()));
                }
            }
        }
        if !leading_minors_positive(&gram) {
            return Err(G2Error::NotPositive);
        }
        Ok(Metric { gram, orientation })
    }

    /// Standard Euclidean metric with positive orientation.
    pub fn standard(n: usize) -> Self {
        Metric {
            gram: Matrix::identity(n),
            orientation: 1,
        }
    }

    pub fn reversed(&self) -> Self {
        Metric {
            gram: self.gram.clone(),
            orientation: -self.orientation,
        }
    }

    pub fn dim(&self) -> usize {
        self.gram.nrows()
    }
    pub fn gram(&self) -> &Matrix<T> {
        &self.gram
    }
    pub fn orientation(&self) -> i8 {
        self.orientation
    }

    pub fn inner_vec(&self, u: &[T], v: &[T]) -> T {
        let gv = self.gram.mul_vec(v);
        let mut acc = T::zero();
        for i in 0..u.len() {
            acc = acc + u[i].clone() * gv[i].clone();
        }
        acc
    }

    /// Oriented volume form. Errors when `det g` has no square root in the
    /// coefficient field.
    pub fn volume_form(&self) -> Result<Form<T>> {
        let n = self.dim();
        let det = self.gram.det();
        if det.is_zero() {
            return Err(G2Error::DegenerateMetric);
        }
        let scale = det.sqrt_exact().ok_or(G2Error::IrrationalVolume)?;
        let axes: Vec<usize> = (0..n).collect();
        let c = if self.orientation < 0 { -scale } else { scale };
        Form::monomial(n, &axes, c)
    }

    /// Hodge star of a k-form: `⟨a,b⟩ vol = a ∧ ∗b` and
    /// `∗∗a = (−1)^{k(n−k)} a` in Riemannian signature.
    pub fn star(&self, a: &Form<T>) -> Result<Form<T>> {
        let n = self.dim();
        if a.dim() != n {
            return Err(G2Error::DimensionMismatch(
                "form/metric dimension mismatch".into(),
            ));
        }
        let det = self.gram.det();
        if det.is_zero() {
            return Err(G2Error::DegenerateMetric);
        }
        let vol_scale = det.sqrt_exact().ok_or(G2Error::IrrationalVolume)?;
        let ginv = self.gram.inverse(0.0)?;
        let k = a.degree();
        let mut out = Form::zero(n, n - k);
        // Raise all indices, then contract against the Levi-Civita symbol.
        for idx in MultiIndex::all(n, k) {
            // (a♯)^I = Σ_J a_J det(g^{-1}[J, I])
            let mut raised = T::zero();
            for (jdx, c) in a.terms() {
                let minor = ginv.submatrix(&jdx.axes(), &idx.axes()).det();
                if !minor.is_zero() {
                    raised = raised + c.clone() * minor;
                }
            }
            if raised.is_zero() {
                continue;
            }
            let comp = idx.complement(n);
            let sign = idx.merge_sign(comp) as i64 * self.orientation as i64;
            let val = raised * vol_scale.clone() * T::from_int(sign);
            out = out.add(&Form::from_terms(n, n - k, vec![(comp, val)])?);
        }
        Ok(out)
    }
}

/// Sylvester criterion on the leading principal minors.
pub fn leading_minors_positive<T: Scalar>(m: &Matrix<T>) -> bool {
    let n = m.nrows();
    for k in 1..=n {
        let ids: Vec<usize> = (0..k).collect();
        if m.submatrix(&ids, &ids).det().to_f64() <= 0.0 {
            return false;
        }
    }
    true
}
