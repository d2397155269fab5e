//! Alternating forms and multivectors on R^n, n ≤ 8.
//!
//! Basis monomials are keyed by bitmasks of the axis set; the sign of any
//! reordering is computed by inversion counting, so all products reduce to
//! integer bit arithmetic plus coefficient arithmetic.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{G2Error, Result};
use crate::matrix::Matrix;
use crate::scalar::Scalar;

pub const MAX_DIM: usize = 8;

/// A strictly increasing tuple of axis indices, stored as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct MultiIndex(u16);

impl MultiIndex {
    pub fn empty() -> Self {
        MultiIndex(0)
    }

    pub fn from_axes(axes: &[usize], dim: usize) -> Result<Self> {
        let mut mask = 0u16;
        let mut prev: Option<usize> = None;
        for &a in axes {
            if a >= dim {
                return Err(G2Error::DimensionMismatch(format!(
                    "axis {a} out of range for dimension {dim}"
                )));
            }
            if prev.map_or(false, |p| a <= p) {
                return Err(G2Error::InvalidInput(
                    "axes must be strictly increasing".into(),
                ));
            }
            prev = Some(a);
            mask |= 1 << a;
        }
        Ok(MultiIndex(mask))
    }

    pub fn from_mask(mask: u16) -> Self {
        MultiIndex(mask)
    }

    pub fn mask(self) -> u16 {
        self.0
    }

    pub fn degree(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn axes(self) -> Vec<usize> {
        (0..MAX_DIM as u16 * 2).filter(|i| self.0 >> i & 1 == 1).map(|i| i as usize).collect()
    }

    pub fn contains(self, axis: usize) -> bool {
        self.0 >> axis & 1 == 1
    }

    /// Complement within dimension `dim`.
    pub fn complement(self, dim: usize) -> Self {
        MultiIndex(!self.0 & ((1u16 << dim) - 1))
    }

    /// All degree-`k` multi-indices in dimension `dim`, in mask order.
    pub fn all(dim: usize, k: usize) -> Vec<Self> {
        (0u16..1 << dim)
            .filter(|m| m.count_ones() as usize == k)
            .map(MultiIndex)
            .collect()
    }

    /// Sign of merging two disjoint index sets into canonical order,
    /// i.e. the parity of `(self, other)` as a shuffle. Zero overlap assumed.
    pub fn merge_sign(self, other: Self) -> i8 {
        debug_assert_eq!(self.0 & other.0, 0);
        let mut inv = 0u32;
        for b in other.axes() {
            inv += (self.0 >> (b + 1)).count_ones();
        }
        if inv % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Position of `axis` inside the increasing tuple.
    pub fn position(self, axis: usize) -> usize {
        (self.0 & ((1 << axis) - 1)).count_ones() as usize
    }
}

/// Exact-coefficient alternating k-form on R^n (sparse; absent = zero).
#[derive(Clone, PartialEq)]
pub struct Form<T> {
    dim: usize,
    degree: usize,
    terms: BTreeMap<MultiIndex, T>,
}

impl<T: Scalar> Form<T> {
    pub fn zero(dim: usize, degree: usize) -> Self {
        assert!(dim <= MAX_DIM);
        Form {
            dim,
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms(dim: usize, degree: usize, terms: Vec<(MultiIndex, T)>) -> Result<Self> {
        let mut f = Self::zero(dim, degree);
        for (idx, c) in terms {
            if idx.degree() != degree {
                return Err(G2Error::DegreeError(format!(
                    "index degree {} != form degree {}",
                    idx.degree(),
                    degree
                )));
            }
            if idx.axes().iter().any(|&a| a >= dim) {
                return Err(G2Error::DimensionMismatch("index exceeds dimension".into()));
            }
            f.add_term(idx, c);
        }
        Ok(f)
    }

    /// Basis monomial `e^{axes}` with unit coefficient; axes need not be
    /// sorted, the permutation sign is absorbed into the coefficient.
    pub fn monomial(dim: usize, axes: &[usize], coeff: T) -> Result<Self> {
        let mut sorted = axes.to_vec();
        let sign = sort_sign(&mut sorted)
            .ok_or_else(|| G2Error::InvalidInput("repeated axis in monomial".into()))?;
        let idx = MultiIndex::from_axes(&sorted, dim)?;
        let c = if sign < 0 { -coeff } else { coeff };
        Form::from_terms(dim, axes.len(), vec![(idx, c)])
    }

    /// Constant (degree-0) form.
    pub fn constant(dim: usize, c: T) -> Self {
        let mut f = Self::zero(dim, 0);
        f.add_term(MultiIndex::empty(), c);
        f
    }

    /// Degree-1 form with the given coefficient vector.
    pub fn one_form(coeffs: &[T]) -> Self {
        let dim = coeffs.len();
        let mut f = Self::zero(dim, 1);
        for (i, c) in coeffs.iter().enumerate() {
            f.add_term(MultiIndex::from_mask(1 << i), c.clone());
        }
        f
    }

    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn degree(&self) -> usize {
        self.degree
    }
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }
    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &T)> {
        self.terms.iter()
    }

    /// Coefficient on a canonical (strictly increasing) multi-index.
    pub fn coeff(&self, idx: MultiIndex) -> T {
        self.terms.get(&idx).cloned().unwrap_or_else(T::zero)
    }

    /// Signed coefficient on an arbitrarily ordered axis tuple.
    pub fn coeff_on(&self, axes: &[usize]) -> T {
        let mut sorted = axes.to_vec();
        match sort_sign(&mut sorted) {
            None => T::zero(),
            Some(sign) => {
                let idx = MultiIndex::from_axes(&sorted, self.dim).expect("valid axes");
                let c = self.coeff(idx);
                if sign < 0 {
                    -c
                } else {
                    c
                }
            }
        }
    }

    fn add_term(&mut self, idx: MultiIndex, c: T) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&idx) {
            None => {
                self.terms.insert(idx, c);
            }
            Some(old) => {
                let s = old + c;
                if !s.is_zero() {
                    self.terms.insert(idx, s);
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        assert_eq!(self.degree, other.degree);
        let mut out = self.clone();
        for (idx, c) in &other.terms {
            out.add_term(*idx, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&(-T::one()))
    }

    pub fn scale(&self, c: &T) -> Self {
        let mut out = Self::zero(self.dim, self.degree);
        for (idx, v) in &self.terms {
            out.add_term(*idx, v.clone() * c.clone());
        }
        out
    }

    /// Exterior product. Bilinear, associative, sign by shuffle parity.
    pub fn wedge(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim {
            return Err(G2Error::DimensionMismatch(format!(
                "wedge of forms on R^{} and R^{}",
                self.dim, other.dim
            )));
        }
        let k = self.degree + other.degree;
        let mut out = Self::zero(self.dim, k);
        if k > self.dim {
            // Degree exceeds the dimension: the zero form of that degree.
            return Ok(out);
        }
        for (ia, ca) in &self.terms {
            for (ib, cb) in &other.terms {
                if ia.mask() & ib.mask() != 0 {
                    continue;
                }
                let sign = ia.merge_sign(*ib);
                let merged = MultiIndex::from_mask(ia.mask() | ib.mask());
                let c = ca.clone() * cb.clone();
                out.add_term(merged, if sign < 0 { -c } else { c });
            }
        }
        Ok(out)
    }

    /// Interior product with the vector `v` (components in the ambient basis).
    /// Degree drops by one; an antiderivation of the exterior algebra.
    pub fn interior(&self, v: &[T]) -> Result<Self> {
        if v.len() != self.dim {
            return Err(G2Error::DimensionMismatch(
                "vector/form dimension mismatch".into(),
            ));
        }
        if self.degree == 0 {
            return Err(G2Error::DegreeError(
                "interior product of a degree-0 form".into(),
            ));
        }
        let mut out = Self::zero(self.dim, self.degree - 1);
        for (idx, c) in &self.terms {
            for a in idx.axes() {
                if v[a].is_zero() {
                    continue;
                }
                let pos = idx.position(a);
                let rest = MultiIndex::from_mask(idx.mask() & !(1 << a));
                let val = v[a].clone() * c.clone();
                out.add_term(rest, if pos % 2 == 1 { -val } else { val });
            }
        }
        Ok(out)
    }

    /// Pullback along a linear map `R^m -> R^n` given by an `n x m` matrix
    /// (column j = image of the j-th source basis vector). The result lives
    /// on `R^m`.
    pub fn pullback(&self, map: &Matrix<T>) -> Result<Self> {
        if map.nrows() != self.dim {
            return Err(G2Error::ShapeMismatch(format!(
                "pullback along a map into R^{} of a form on R^{}",
                map.nrows(),
                self.dim
            )));
        }
        let m = map.ncols();
        if m > MAX_DIM {
            return Err(G2Error::DimensionMismatch("source dimension too large".into()));
        }
        let k = self.degree;
        let mut out = Self::zero(m, k);
        if k > m {
            return Ok(out);
        }
        for target in MultiIndex::all(m, k) {
            let cols = target.axes();
            let mut acc = T::zero();
            for (idx, c) in &self.terms {
                let minor = map.submatrix(&idx.axes(), &cols).det();
                if !minor.is_zero() {
                    acc = acc + c.clone() * minor;
                }
            }
            out.add_term(target, acc);
        }
        Ok(out)
    }

    /// Infinitesimal action of an endomorphism:
    /// `(A·a)(u_1,…,u_k) = Σ_i a(u_1,…,A u_i,…,u_k)`,
    /// the derivative at 0 of `t ↦ (e^{tA})^* a`.
    pub fn lie_act(&self, a_mat: &Matrix<T>) -> Result<Self> {
        if !a_mat.is_square() || a_mat.nrows() != self.dim {
            return Err(G2Error::ShapeMismatch(
                "endomorphism shape does not match form dimension".into(),
            ));
        }
        // On a basis one-form: A·dx^i = Σ_j A[i][j] dx^j, extended as a
        // derivation over the wedge.
        let mut out = Self::zero(self.dim, self.degree);
        for (idx, c) in &self.terms {
            for i in idx.axes() {
                let pos = idx.position(i);
                let rest = MultiIndex::from_mask(idx.mask() & !(1 << i));
                for j in 0..self.dim {
                    let aij = a_mat[(i, j)].clone();
                    if aij.is_zero() || rest.contains(j) {
                        continue;
                    }
                    // Move dx^j into canonical position inside `rest`.
                    let jpos = rest.position(j);
                    let sign_flip = (pos + jpos) % 2 == 1;
                    let merged = MultiIndex::from_mask(rest.mask() | (1 << j));
                    let val = aij * c.clone();
                    out.add_term(merged, if sign_flip { -val } else { val });
                }
            }
        }
        Ok(out)
    }

    /// Evaluate the k-form on k vectors.
    pub fn eval(&self, vectors: &[Vec<T>]) -> Result<T> {
        if vectors.len() != self.degree {
            return Err(G2Error::DegreeError(format!(
                "evaluating a degree-{} form on {} vectors",
                self.degree,
                vectors.len()
            )));
        }
        if vectors.iter().any(|v| v.len() != self.dim) {
            return Err(G2Error::DimensionMismatch("vector length mismatch".into()));
        }
        if self.degree == 0 {
            return Ok(self.coeff(MultiIndex::empty()));
        }
        let m = Matrix::from_cols(vectors.to_vec());
        let mut acc = T::zero();
        let cols: Vec<usize> = (0..self.degree).collect();
        for (idx, c) in &self.terms {
            acc = acc + c.clone() * m.submatrix(&idx.axes(), &cols).det();
        }
        Ok(acc)
    }

    /// Inner product of two k-forms in the standard (orthonormal) metric.
    pub fn dot(&self, other: &Self) -> T {
        assert_eq!(self.dim, other.dim);
        assert_eq!(self.degree, other.degree);
        let mut acc = T::zero();
        for (idx, c) in &self.terms {
            acc = acc + c.clone() * other.coeff(*idx);
        }
        acc
    }

    pub fn norm_sq(&self) -> T {
        self.dot(self)
    }

    pub fn max_abs(&self) -> f64 {
        self.terms
            .values()
            .map(|c| c.to_f64().abs())
            .fold(0.0, f64::max)
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Form<U> {
        let mut out = Form::<U>::zero(self.dim, self.degree);
        for (idx, c) in &self.terms {
            out.add_term(*idx, f(c));
        }
        out
    }
}

impl<T: Scalar> fmt::Debug for Form<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Form(dim={}, deg={};", self.dim, self.degree)?;
        for (idx, c) in &self.terms {
            write!(f, " {:+}e^{:?}", c, idx.axes())?;
        }
        write!(f, ")")
    }
}

/// Contravariant counterpart of [`Form`]: sparse k-vectors. The degree-1
/// case doubles as a plain vector.
#[derive(Clone, PartialEq)]
pub struct Multivector<T> {
    inner: Form<T>,
}

impl<T: Scalar> Multivector<T> {
    pub fn zero(dim: usize, degree: usize) -> Self {
        Multivector {
            inner: Form::zero(dim, degree),
        }
    }

    pub fn from_vector(coords: &[T]) -> Self {
        Multivector {
            inner: Form::one_form(coords),
        }
    }

    /// Decomposable k-vector `v_1 ∧ … ∧ v_k`.
    pub fn wedge_of_vectors(vectors: &[Vec<T>]) -> Result<Self> {
        let dim = vectors.first().map_or(0, |v| v.len());
        let mut acc = Form::constant(dim, T::one());
        for v in vectors {
            acc = acc.wedge(&Form::one_form(v))?;
        }
        Ok(Multivector { inner: acc })
    }

    pub fn dim(&self) -> usize {
        self.inner.dim()
    }
    pub fn degree(&self) -> usize {
        self.inner.degree()
    }
    pub fn coeff(&self, idx: MultiIndex) -> T {
        self.inner.coeff(idx)
    }
    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &T)> {
        self.inner.terms()
    }
    pub fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    /// Natural pairing with a form of the same degree.
    pub fn pair(&self, form: &Form<T>) -> T {
        form.dot(&self.inner)
    }

    /// Coordinates as a plain vector (degree 1 only).
    pub fn as_vector(&self) -> Option<Vec<T>> {
        if self.degree() != 1 {
            return None;
        }
        let mut v = vec![T::zero(); self.dim()];
        for (idx, c) in self.inner.terms() {
            v[idx.axes()[0]] = c.clone();
        }
        Some(v)
    }
}

/// Sorts `axes` in place and returns the permutation sign, or `None` on a
/// repeated axis.
pub fn sort_sign(axes: &mut [usize]) -> Option<i8> {
    let mut sign = 1i8;
    for i in 1..axes.len() {
        let mut j = i;
        while j > 0 && axes[j - 1] > axes[j] {
            axes.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
        if j > 0 && axes[j - 1] == axes[j] {
            return None;
        }
    }
    Some(sign)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rat;

    fn r(n: i64) -> Rat {
        Rat::from_int(n)
    }

    fn basis(dim: usize, axes: &[usize]) -> Form<Rat> {
        Form::monomial(dim, axes, r(1)).unwrap()
    }

    #[test]
    fn wedge_basis() {
        // dx1 ∧ dx2 on axes (0, 1).
        let a = basis(4, &[0]);
        let b = basis(4, &[1]);
        let w = a.wedge(&b).unwrap();
        assert_eq!(w.coeff_on(&[0, 1]), r(1));
        assert_eq!(w.num_terms(), 1);
    }

    #[test]
    fn wedge_omega1_squared() {
        // ω1 = dr0∧dx1 + dx2∧dx3 on axes (x1,x2,x3,r0) = (0,1,2,3):
        // ω1∧ω1 = 2·dr0∧dx1∧dx2∧dx3.
        let omega1 = Form::monomial(4, &[3, 0], r(1))
            .unwrap()
            .add(&basis(4, &[1, 2]));
        let sq = omega1.wedge(&omega1).unwrap();
        assert_eq!(sq.num_terms(), 1);
        assert_eq!(sq.coeff_on(&[3, 0, 1, 2]), r(2));
    }

    #[test]
    fn wedge_overflow_degree_is_zero() {
        let a = basis(2, &[0, 1]);
        let w = a.wedge(&a).unwrap();
        assert!(w.is_zero());
        assert_eq!(w.degree(), 4);
    }

    #[test]
    fn interior_basis() {
        // i_{∂x1}(dx1∧dx2) = dx2.
        let w = basis(3, &[0, 1]);
        let v = vec![r(1), r(0), r(0)];
        let out = w.interior(&v).unwrap();
        assert_eq!(out, basis(3, &[1]));
        // Degree-0 input errors.
        assert!(Form::constant(3, r(1)).interior(&v).is_err());
    }

    #[test]
    fn pullback_identity_and_functoriality() {
        let a = basis(3, &[0, 2]).add(&basis(3, &[1, 2]).scale(&r(5)));
        let id = Matrix::identity(3);
        assert_eq!(a.pullback(&id).unwrap(), a);

        let l = Matrix::from_ints(&[&[1, 2, 0], &[0, 1, 1], &[1, 0, 1]]);
        let m = Matrix::from_ints(&[&[1, 1], &[0, 2], &[1, 0]]);
        let lm = l.mul(&m);
        assert_eq!(
            a.pullback(&lm).unwrap(),
            a.pullback(&l).unwrap().pullback(&m).unwrap()
        );
    }

    #[test]
    fn lie_act_identity_scales_by_degree() {
        let a = basis(5, &[0, 2, 4]).add(&basis(5, &[1, 2, 3]).scale(&r(-2)));
        let id = Matrix::identity(5);
        assert_eq!(a.lie_act(&id).unwrap(), a.scale(&r(3)));
    }

    #[test]
    fn eval_determinant() {
        let a = basis(3, &[0, 1, 2]);
        let v = vec![
            vec![r(1), r(0), r(0)],
            vec![r(0), r(2), r(0)],
            vec![r(0), r(0), r(3)],
        ];
        assert_eq!(a.eval(&v).unwrap(), r(6));
        // Swap two arguments: sign flips.
        let vswap = vec![v[1].clone(), v[0].clone(), v[2].clone()];
        assert_eq!(a.eval(&vswap).unwrap(), r(-6));
    }

    #[test]
    fn monomial_unsorted_axes_sign() {
        let a = Form::monomial(4, &[3, 0], r(1)).unwrap();
        assert_eq!(a.coeff(MultiIndex::from_axes(&[0, 3], 4).unwrap()), r(-1));
        assert_eq!(a.coeff_on(&[3, 0]), r(1));
        assert!(Form::monomial(4, &[1, 1], r(1)).is_err());
    }

    #[test]
    fn multivector_wedge_of_vectors() {
        let mv = Multivector::wedge_of_vectors(&[
            vec![r(1), r(0), r(0)],
            vec![r(0), r(1), r(0)],
        ])
        .unwrap();
        assert_eq!(mv.coeff(MultiIndex::from_axes(&[0, 1], 3).unwrap()), r(1));
    }
}
