//! Reduced tableaux, the codimension sequence (c0,…,c7) = (0,0,0,1,5,15,28,35),
//! polar dimensions and extension ranks on the frame bundle F and on the
//! quotient S = F/G2, and the dimension bookkeeping of the restriction
//! manifolds Z_4, Z_5, Z_6.

use crate::error::{G2Error, Result};
use crate::g2::{z2_witness, G2Data, R0, R1, R2, R3, X1, X2, X3};
use crate::matrix::{span_contained, span_dim, Matrix};
use crate::orbits::{classify_plane, OrbitClass, Plane};
use crate::scalar::Scalar;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

/// A full flag F_1 ⊂ … ⊂ F_7 = R^7 given by seven independent vectors;
/// F_k is the span of the first k (F_0 is the zero subspace).
#[derive(Clone, Debug)]
pub struct Flag<T> {
    vectors: Vec<Vec<T>>,
}

impl<T: Scalar> Flag<T> {
    pub fn new(vectors: Vec<Vec<T>>, tol: f64) -> Result<Self> {
        if vectors.len() != 7 || vectors.iter().any(|v| v.len() != 7) {
            return Err(G2Error::DimensionMismatch(
                "a flag needs seven vectors in R^7".into(),
            ));
        }
        if Matrix::from_rows(vectors.clone()).rank(tol) != 7 {
            return Err(G2Error::DegenerateInput("flag vectors not independent".into()));
        }
        Ok(Flag { vectors })
    }

    /// (x1) ⊂ (x1,x2) ⊂ (x1,x2,x3) ⊂ (+r0) ⊂ (+r1) ⊂ (+r2) ⊂ (+r3).
    pub fn standard() -> Self {
        Self::from_axis_order(&[X1, X2, X3, R0, R1, R2, R3])
    }

    pub fn from_axis_order(order: &[usize; 7]) -> Self {
        let vectors = order
            .iter()
            .map(|&a| {
                let mut v = vec![T::zero(); 7];
                v[a] = T::one();
                v
            })
            .collect();
        Flag { vectors }
    }

    /// Standard first four steps, then three supplied line directions.
    pub fn with_lines(l1: Vec<T>, l2: Vec<T>, l3: Vec<T>, tol: f64) -> Result<Self> {
        let mut vectors: Vec<Vec<T>> = Self::standard().vectors[..4].to_vec();
        vectors.push(l1);
        vectors.push(l2);
        vectors.push(l3);
        Self::new(vectors, tol)
    }

    pub fn vectors(&self) -> &[Vec<T>] {
        &self.vectors
    }

    /// Basis of F_k (the first k vectors).
    pub fn step(&self, k: usize) -> &[Vec<T>] {
        &self.vectors[..k]
    }

    /// Same flag, each F_k re-expressed in a different basis: applies a
    /// random unit lower-triangular change of the adapted basis.
    pub fn rebased(&self, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut vectors = Vec::with_capacity(7);
        for i in 0..7 {
            let mut v = self.vectors[i].clone();
            for j in 0..i {
                let c = T::from_int(rng.gen_range(-4..=4));
                for a in 0..7 {
                    v[a] = v[a].clone() + c.clone() * self.vectors[j][a].clone();
                }
            }
            let s = T::from_int(rng.gen_range(1..=5));
            for a in 0..7 {
                v[a] = v[a].clone() * s.clone();
            }
            vectors.push(v);
        }
        Flag { vectors }
    }

    /// Image under an invertible linear map.
    pub fn apply(&self, g: &Matrix<T>) -> Self {
        Flag {
            vectors: self.vectors.iter().map(|v| g.mul_vec(v)).collect(),
        }
    }

    /// A conforming flag has F_3 on the φ-plane orbit and F_4 on the
    /// coassociative orbit (|s| = 1).
    pub fn conformance(&self, g2: &G2Data<T>, tol: f64) -> Result<()> {
        let f3 = Plane::new(7, self.step(3).to_vec(), false, tol)?;
        if classify_plane(&f3, g2, tol)? != OrbitClass::PhiPlane {
            return Err(G2Error::NonConformingFlag(
                "F_3 is not on the φ-plane orbit".into(),
            ));
        }
        let f4 = Plane::new(7, self.step(4).to_vec(), false, tol)?;
        if !matches!(classify_plane(&f4, g2, tol)?, OrbitClass::Special { .. }) {
            return Err(G2Error::NonConformingFlag(
                "F_4 is not on the coassociative orbit".into(),
            ));
        }
        Ok(())
    }
}

/// `h = {A ∈ gl(7) : (lie_act(A,δ))|_F = 0 for δ ∈ {φ, ∗φ, vol}}` for the
/// span F of `basis`; `basis` may be empty (F_0), giving all of gl(7).
pub fn reduced_tableau<T: Scalar>(
    basis: &[Vec<T>],
    g2: &G2Data<T>,
    tol: f64,
) -> Result<Vec<Matrix<T>>> {
    let n = 7;
    let vol = g2.metric.volume_form()?;
    let deltas = [&g2.phi, &g2.phi_dual, &vol];
    let incl = if basis.is_empty() {
        None
    } else {
        Some(Matrix::from_cols(basis.to_vec()))
    };
    let mut rows: Vec<Vec<T>> = Vec::new();
    // Column i*n+j holds the constraint values of the elementary matrix E_ij.
    let mut columns: Vec<Vec<T>> = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let mut e = Matrix::<T>::zeros(n, n);
            e[(i, j)] = T::one();
            let mut col = Vec::new();
            for delta in deltas {
                let acted = delta.lie_act(&e)?;
                let restricted = match &incl {
                    Some(m) => acted.pullback(m)?,
                    None => continue,
                };
                let k = restricted.dim();
                for idx in crate::form::MultiIndex::all(k, restricted.degree()) {
                    col.push(restricted.coeff(idx));
                }
            }
            columns.push(col);
        }
    }
    let nconstraints = columns[0].len();
    if nconstraints == 0 {
        let mut all = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut e = Matrix::<T>::zeros(n, n);
                e[(i, j)] = T::one();
                all.push(e);
            }
        }
        return Ok(all);
    }
    for r in 0..nconstraints {
        rows.push(columns.iter().map(|c| c[r].clone()).collect());
    }
    Ok(Matrix::from_rows(rows)
        .nullspace(tol)
        .into_iter()
        .map(|v| Matrix::from_fn(n, n, |i, j| v[i * n + j].clone()))
        .collect())
}

/// `c_k = 49 − dim h_k` for k = 0..7, plus whether the flag conforms.
pub fn codim_sequence<T: Scalar>(
    flag: &Flag<T>,
    g2: &G2Data<T>,
    tol: f64,
) -> Result<(Vec<usize>, bool)> {
    let conforming = flag.conformance(g2, tol).is_ok();
    let mut c = Vec::with_capacity(8);
    for k in 0..=7 {
        let h = reduced_tableau(flag.step(k), g2, tol)?;
        c.push(49 - h.len());
    }
    Ok((c, conforming))
}

/// Everything the tableau bookkeeping extracts from the codimension sequence.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct TableauReport {
    /// c_k = 49 − dim h_k, k = 0..7.
    pub c: Vec<usize>,
    /// dim h_k, k = 0..7.
    pub h_dims: Vec<usize>,
    /// dim H(E_k) on the frame bundle F: (49 − c_k) + 7.
    pub dim_h_frame: Vec<usize>,
    /// dim H(E_k) on S = F/G2: the frame value minus 14.
    pub dim_h_quotient: Vec<usize>,
    /// Extension ranks r_k = dim_S H(E_k) − k − 1.
    pub r: Vec<i64>,
    /// (dim Z_4, dim Z_5, dim Z_6).
    pub z_dims: Vec<usize>,
    /// codim_S Z_k = 42 − dim Z_k for k = 4,5,6.
    pub z_codims: Vec<i64>,
    /// codim_S(Z_k) = r_k for k = 4,5,6 (Cartan's test at each level).
    pub involutive: Vec<bool>,
    /// C = Σ_{j=0}^{6} c_j.
    pub cartan_sum: usize,
    /// 56 − C = 7 (fiber-transversality count).
    pub fiber_count_ok: bool,
    /// h_{k+1} ⊆ h_k for all k.
    pub chain_ok: bool,
    /// The 14-dimensional stabilizer algebra lies in every h_k.
    pub g2_contained: bool,
    /// Ad(t) h_k = h_k per k (asserted by the source for k ≥ 4).
    pub ad_t_invariant: Vec<bool>,
}

pub fn polar_extension_report<T: Scalar>(
    flag: &Flag<T>,
    g2: &G2Data<T>,
    tol: f64,
) -> Result<TableauReport> {
    flag.conformance(g2, tol)?;
    let mut h_bases = Vec::with_capacity(8);
    for k in 0..=7 {
        h_bases.push(reduced_tableau(flag.step(k), g2, tol)?);
    }
    let h_dims: Vec<usize> = h_bases.iter().map(Vec::len).collect();
    let c: Vec<usize> = h_dims.iter().map(|d| 49 - d).collect();
    let dim_h_frame: Vec<usize> = c.iter().map(|ck| (49 - ck) + 7).collect();
    let dim_h_quotient: Vec<usize> = dim_h_frame.iter().map(|d| d - 14).collect();
    let r: Vec<i64> = dim_h_quotient
        .iter()
        .enumerate()
        .map(|(k, &d)| d as i64 - k as i64 - 1)
        .collect();
    let z_dims = vec![3 + 1 + 1 + c[4], 3 + 1 + 2 + c[5], 3 + 4 + c[6]];
    let z_codims: Vec<i64> = z_dims.iter().map(|&d| 42 - d as i64).collect();
    let involutive: Vec<bool> = (0..3).map(|i| z_codims[i] == r[i + 4]).collect();
    let cartan_sum: usize = c[..7].iter().sum();

    let flattened: Vec<Vec<Vec<T>>> = h_bases
        .iter()
        .map(|b| b.iter().map(Matrix::flatten).collect())
        .collect();
    let chain_ok = (0..7).all(|k| span_contained(&flattened[k + 1], &flattened[k], tol));
    let g2_flat: Vec<Vec<T>> = g2.algebra.iter().map(Matrix::flatten).collect();
    let g2_contained = (0..=7).all(|k| span_contained(&g2_flat, &flattened[k], tol));

    let t = z2_witness::<T>();
    let ad_t_invariant: Vec<bool> = h_bases
        .iter()
        .enumerate()
        .map(|(k, basis)| {
            let conj: Vec<Vec<T>> = basis
                .iter()
                .map(|a| t.mul(a).mul(&t).flatten())
                .collect();
            span_contained(&conj, &flattened[k], tol)
        })
        .collect();

    Ok(TableauReport {
        c,
        h_dims,
        dim_h_frame,
        dim_h_quotient,
        r,
        z_dims,
        z_codims,
        involutive,
        cartan_sum,
        fiber_count_ok: 56 - cartan_sum as i64 == 7,
        chain_ok,
        g2_contained,
        ad_t_invariant,
    })
}

/// The polar space H(E_k) = h_k + E_7 with E_7 the graph of a linear map
/// gl(7) ← R^7; returns dim(h_k + graph). Transversality to the fiber means
/// this is dim h_k + 7 for every graph, which `graph_independence` samples.
pub fn polar_dim_with_graph<T: Scalar>(
    h_basis: &[Matrix<T>],
    graph: &Matrix<T>,
    tol: f64,
) -> usize {
    // Vectors live in R^7 ⊕ gl(7) = R^56; h_k sits in the fiber {0} ⊕ gl(7).
    let mut vecs: Vec<Vec<T>> = h_basis
        .iter()
        .map(|a| {
            let mut v = vec![T::zero(); 56];
            v[7..].clone_from_slice(&a.flatten());
            v
        })
        .collect();
    for i in 0..7 {
        let mut v = vec![T::zero(); 56];
        v[i] = T::one();
        for j in 0..49 {
            v[7 + j] = graph[(j, i)].clone();
        }
        vecs.push(v);
    }
    span_dim(&vecs, tol)
}

/// Checks dim(h_k + E_7) = dim h_k + 7 for the zero graph and a seeded
/// random rational graph, for every level of the flag.
pub fn graph_independence<T: Scalar>(
    flag: &Flag<T>,
    g2: &G2Data<T>,
    seed: u64,
    tol: f64,
) -> Result<bool> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let random = Matrix::<T>::from_fn(49, 7, |_, _| T::from_int(rng.gen_range(-9..=9)));
    let zero = Matrix::<T>::zeros(49, 7);
    for k in 0..=7 {
        let h = reduced_tableau(flag.step(k), g2, tol)?;
        for graph in [&zero, &random] {
            if polar_dim_with_graph(&h, graph, tol) != h.len() + 7 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
