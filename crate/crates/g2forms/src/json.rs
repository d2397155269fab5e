//! JSON serialization: forms with exact rational coefficients as `"p/q"`
//! strings (bit-exact round-trip), planes, classification reports, and the
//! G2 data bundle.

use crate::error::{G2Error, Result};
use crate::form::Form;
use crate::g2::G2Data;
use crate::matrix::Matrix;
use crate::orbits::{OrbitClass, Plane};
use crate::scalar::{format_rat, parse_rat, Rat};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct FormJson {
    pub dim: usize,
    pub degree: usize,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct TermJson {
    /// Strictly increasing axis indices.
    pub axes: Vec<usize>,
    /// Decimal-free rational string "p/q" (or "p" for integers).
    pub coeff: String,
}

pub fn form_to_json(form: &Form<Rat>) -> FormJson {
    FormJson {
        dim: form.dim(),
        degree: form.degree(),
        terms: form
            .terms()
            .map(|(idx, c)| TermJson {
                axes: idx.axes(),
                coeff: format_rat(c),
            })
            .collect(),
    }
}

pub fn form_from_json(j: &FormJson) -> Result<Form<Rat>> {
    let mut out = Form::zero(j.dim, j.degree);
    for term in &j.terms {
        if term.axes.windows(2).any(|w| w[0] >= w[1]) {
            return Err(G2Error::InvalidInput(
                "term axes must be strictly increasing".into(),
            ));
        }
        let c = parse_rat(&term.coeff)
            .ok_or_else(|| G2Error::InvalidInput(format!("bad rational {:?}", term.coeff)))?;
        out = out.add(&Form::monomial(j.dim, &term.axes, c)?);
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct PlaneJson {
    pub dim: usize,
    /// Basis vectors as rational strings.
    pub vectors: Vec<Vec<String>>,
    pub oriented: bool,
}

pub fn plane_to_json(plane: &Plane<Rat>) -> PlaneJson {
    PlaneJson {
        dim: plane.dim(),
        vectors: plane
            .basis()
            .iter()
            .map(|v| v.iter().map(format_rat).collect())
            .collect(),
        oriented: plane.oriented(),
    }
}

pub fn plane_from_json(j: &PlaneJson, tol: f64) -> Result<Plane<Rat>> {
    let basis = j
        .vectors
        .iter()
        .map(|v| {
            v.iter()
                .map(|s| {
                    parse_rat(s)
                        .ok_or_else(|| G2Error::InvalidInput(format!("bad rational {s:?}")))
                })
                .collect::<Result<Vec<Rat>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Plane::new(j.dim, basis, j.oriented, tol)
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct ClassificationJson {
    /// The orbit invariant as an exact rational string.
    pub s: String,
    /// "special+" | "special-" | "special" | "phi-plane" | "generic".
    pub class: String,
}

pub fn classification_to_json(class: &OrbitClass<Rat>, s: &Rat) -> ClassificationJson {
    ClassificationJson {
        s: format_rat(s),
        class: class.label().to_string(),
    }
}

fn matrix_to_json(m: &Matrix<Rat>) -> Vec<Vec<String>> {
    (0..m.nrows())
        .map(|i| (0..m.ncols()).map(|j| format_rat(&m[(i, j)])).collect())
        .collect()
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct G2BundleJson {
    pub phi: FormJson,
    #[serde(rename = "phiDual")]
    pub phi_dual: FormJson,
    pub algebra: Vec<Vec<Vec<String>>>,
}

pub fn g2_bundle_to_json(g2: &G2Data<Rat>) -> G2BundleJson {
    G2BundleJson {
        phi: form_to_json(&g2.phi),
        phi_dual: form_to_json(&g2.phi_dual),
        algebra: g2.algebra.iter().map(matrix_to_json).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::g2::cayley_phi;
    use crate::scalar::Scalar;

    #[test]
    fn form_round_trip_bit_exact() {
        let phi = cayley_phi::<Rat>().scale(&Rat::from_ratio(22, 7));
        let j = form_to_json(&phi);
        let text = serde_json::to_string(&j).unwrap();
        let back: FormJson = serde_json::from_str(&text).unwrap();
        assert_eq!(form_from_json(&back).unwrap(), phi);
        // Identical bytes across repeated serialization.
        assert_eq!(serde_json::to_string(&form_to_json(&phi)).unwrap(), text);
    }

    #[test]
    fn malformed_rational_rejected() {
        let j = FormJson {
            dim: 7,
            degree: 1,
            terms: vec![TermJson {
                axes: vec![0],
                coeff: "1.5".into(),
            }],
        };
        assert!(form_from_json(&j).is_err());
        let j = FormJson {
            dim: 7,
            degree: 2,
            terms: vec![TermJson {
                axes: vec![1, 0],
                coeff: "1".into(),
            }],
        };
        assert!(form_from_json(&j).is_err());
    }

    #[test]
    fn plane_round_trip() {
        let plane = Plane::<Rat>::from_axes(7, &[0, 1, 2], true);
        let j = plane_to_json(&plane);
        let back = plane_from_json(&j, 0.0).unwrap();
        assert_eq!(back.basis(), plane.basis());
        assert_eq!(back.oriented(), plane.oriented());
    }

    #[test]
    fn g2_bundle_shape() {
        let bundle = g2_bundle_to_json(&G2Data::<Rat>::new());
        assert_eq!(bundle.phi.terms.len(), 7);
        assert_eq!(bundle.phi_dual.terms.len(), 7);
        assert_eq!(bundle.algebra.len(), 14);
        assert!(serde_json::to_string(&bundle).unwrap().contains("phiDual"));
    }
}
