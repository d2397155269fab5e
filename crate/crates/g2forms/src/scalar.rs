//! Coefficient fields for the exterior algebra kernels.
//!
//! Three scalar types implement [`Scalar`]:
//! * [`Rat`] — arbitrary-precision rationals, the default; every identity in
//!   this crate that can be checked exactly is checked over `Rat`.
//! * `f64` — used for exponential-map sampling and finite-difference oracles;
//!   comparisons go through a tolerance.
//! * [`Quad`] — values `a + b·√d` with rational `a`, `b`, used to evaluate
//!   orbit invariants at angles whose sine and cosine are rational-quadratic
//!   (π/6, π/4, ...).

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

/// Exact rational coefficient.
pub type Rat = BigRational;

/// A coefficient field the exterior algebra is generic over.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    /// Whether arithmetic in this field is exact. Exact scalars ignore
    /// tolerances entirely.
    const EXACT: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_int(n: i64) -> Self;
    fn from_ratio(num: i64, den: i64) -> Self;

    /// Structural zero test (exact, even for floats).
    fn is_zero(&self) -> bool;
    /// Zero test under the ambient tolerance; exact scalars ignore `tol`.
    fn near_zero(&self, tol: f64) -> bool;
    fn to_f64(&self) -> f64;
    fn abs(&self) -> Self;
    /// Exact square root when one exists in the field.
    fn sqrt_exact(&self) -> Option<Self>;

    fn near_eq(&self, other: &Self, tol: f64) -> bool {
        (self.clone() - other.clone()).near_zero(tol)
    }
}

impl Scalar for Rat {
    const EXACT: bool = true;

    fn zero() -> Self {
        <BigRational as Zero>::zero()
    }
    fn one() -> Self {
        <BigRational as One>::one()
    }
    fn from_int(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn near_zero(&self, _tol: f64) -> bool {
        Zero::is_zero(self)
    }
    fn to_f64(&self) -> f64 {
        rat_to_f64(self)
    }
    fn abs(&self) -> Self {
        Signed::abs(self)
    }
    fn sqrt_exact(&self) -> Option<Self> {
        if Signed::is_negative(self) {
            return None;
        }
        let num = int_sqrt(self.numer())?;
        let den = int_sqrt(self.denom())?;
        Some(BigRational::new(num, den))
    }
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn from_int(n: i64) -> Self {
        n as f64
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        num as f64 / den as f64
    }
    fn is_zero(&self) -> bool {
        *self == 0.0
    }
    fn near_zero(&self, tol: f64) -> bool {
        f64::abs(*self) <= tol
    }
    fn to_f64(&self) -> f64 {
        *self
    }
    fn abs(&self) -> Self {
        f64::abs(*self)
    }
    fn sqrt_exact(&self) -> Option<Self> {
        if *self < 0.0 {
            None
        } else {
            Some(self.sqrt())
        }
    }
}

fn rat_to_f64(r: &Rat) -> f64 {
    // Good enough for diagnostics; exact paths never round-trip through here.
    let num = r.numer();
    let den = r.denom();
    match (num.to_string().parse::<f64>(), den.to_string().parse::<f64>()) {
        (Ok(n), Ok(d)) => n / d,
        _ => f64::NAN,
    }
}

fn int_sqrt(n: &BigInt) -> Option<BigInt> {
    if Signed::is_negative(n) {
        return None;
    }
    let r = n.sqrt();
    if &(&r * &r) == n {
        Some(r)
    } else {
        None
    }
}

/// Element `a + b·√d` of a real quadratic extension of the rationals.
///
/// The radicand is carried per value; rationals are the `b = 0` case with
/// `d = 0`. Mixing two different nonzero radicands in one arithmetic
/// operation is a programming error and panics.
#[derive(Clone, Debug)]
pub struct Quad {
    a: Rat,
    b: Rat,
    d: u64,
}

impl Quad {
    pub fn rational(a: Rat) -> Self {
        Quad {
            a,
            b: <Rat as Scalar>::zero(),
            d: 0,
        }
    }

    /// `a + b√d`. `d` must be positive and not a perfect square.
    pub fn new(a: Rat, b: Rat, d: u64) -> Self {
        let q = Quad { a, b, d };
        q.normalized()
    }

    /// The rational part, if the value is rational.
    pub fn as_rational(&self) -> Option<&Rat> {
        if Scalar::is_zero(&self.b) {
            Some(&self.a)
        } else {
            None
        }
    }

    fn normalized(mut self) -> Self {
        if Scalar::is_zero(&self.b) {
            self.d = 0;
        }
        self
    }

    fn unify(&self, other: &Self) -> u64 {
        match (self.d, other.d) {
            (0, d) | (d, 0) => d,
            (d1, d2) if d1 == d2 => d1,
            (d1, d2) => panic!("mixed radicands √{d1} and √{d2}"),
        }
    }
}

impl PartialEq for Quad {
    fn eq(&self, other: &Self) -> bool {
        self.a == other.a && self.b == other.b && (self.d == other.d || Scalar::is_zero(&self.b))
    }
}

impl fmt::Display for Quad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if Scalar::is_zero(&self.b) {
            write!(f, "{}", self.a)
        } else {
            write!(f, "{} + {}*sqrt({})", self.a, self.b, self.d)
        }
    }
}

impl Add for Quad {
    type Output = Quad;
    fn add(self, rhs: Quad) -> Quad {
        let d = self.unify(&rhs);
        Quad {
            a: self.a + rhs.a,
            b: self.b + rhs.b,
            d,
        }
        .normalized()
    }
}

impl Sub for Quad {
    type Output = Quad;
    fn sub(self, rhs: Quad) -> Quad {
        self + (-rhs)
    }
}

impl Neg for Quad {
    type Output = Quad;
    fn neg(self) -> Quad {
        Quad {
            a: -self.a,
            b: -self.b,
            d: self.d,
        }
    }
}

impl Mul for Quad {
    type Output = Quad;
    fn mul(self, rhs: Quad) -> Quad {
        let d = self.unify(&rhs);
        let rad = <Rat as Scalar>::from_int(d as i64);
        Quad {
            a: self.a.clone() * rhs.a.clone() + self.b.clone() * rhs.b.clone() * rad,
            b: self.a * rhs.b + self.b * rhs.a,
            d,
        }
        .normalized()
    }
}

impl Div for Quad {
    type Output = Quad;
    fn div(self, rhs: Quad) -> Quad {
        let d = self.unify(&rhs);
        let rad = <Rat as Scalar>::from_int(d as i64);
        // Multiply by the conjugate of the denominator.
        let norm = rhs.a.clone() * rhs.a.clone() - rhs.b.clone() * rhs.b.clone() * rad;
        assert!(!Scalar::is_zero(&norm), "division by zero Quad");
        let conj = Quad {
            a: rhs.a,
            b: -rhs.b,
            d,
        };
        let prod = self * conj;
        Quad {
            a: prod.a / norm.clone(),
            b: prod.b / norm,
            d,
        }
        .normalized()
    }
}

impl Scalar for Quad {
    const EXACT: bool = true;

    fn zero() -> Self {
        Quad::rational(<Rat as Scalar>::zero())
    }
    fn one() -> Self {
        Quad::rational(<Rat as Scalar>::one())
    }
    fn from_int(n: i64) -> Self {
        Quad::rational(<Rat as Scalar>::from_int(n))
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        Quad::rational(<Rat as Scalar>::from_ratio(num, den))
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(&self.a) && Scalar::is_zero(&self.b)
    }
    fn near_zero(&self, _tol: f64) -> bool {
        Scalar::is_zero(self)
    }
    fn to_f64(&self) -> f64 {
        self.a.to_f64() + self.b.to_f64() * (self.d as f64).sqrt()
    }
    fn abs(&self) -> Self {
        if self.to_f64() < 0.0 {
            -self.clone()
        } else {
            self.clone()
        }
    }
    fn sqrt_exact(&self) -> Option<Self> {
        if !Scalar::is_zero(&self.b) {
            return None;
        }
        if let Some(r) = self.a.sqrt_exact() {
            return Some(Quad::rational(r));
        }
        // √(p/q) = √(pq)/q; split pq into square · squarefree and adjoin the
        // squarefree part as the radicand (it must match self.d when set).
        if Signed::is_negative(&self.a) {
            return None;
        }
        let m = self.a.numer() * self.a.denom();
        let m: u64 = m.try_into().ok()?;
        let (mut square, mut free) = (1u64, 1u64);
        let mut rest = m;
        let mut p = 2u64;
        while p * p <= rest {
            let mut count = 0;
            while rest % p == 0 {
                rest /= p;
                count += 1;
            }
            square *= p.pow(count / 2);
            if count % 2 == 1 {
                free *= p;
            }
            p += 1;
        }
        free *= rest;
        if self.d != 0 && free != self.d {
            return None;
        }
        let b = <Rat as Scalar>::from_int(square as i64)
            / <Rat as Scalar>::from_int(1)
            / BigRational::from_integer(BigInt::from(self.a.denom().clone()));
        Some(Quad::new(<Rat as Scalar>::zero(), b, free))
    }
}

/// Parse a decimal-free rational string "p/q" or "p".
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if Zero::is_zero(&q) {
                None
            } else {
                Some(BigRational::new(p, q))
            }
        }
        None => {
            let p: BigInt = s.parse().ok()?;
            Some(BigRational::from_integer(p))
        }
    }
}

/// Render a rational as a decimal-free "p/q" (or "p" for integers) string.
pub fn format_rat(r: &Rat) -> String {
    if r.denom() == &BigInt::from(1) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rat {
        <Rat as Scalar>::from_ratio(n, d)
    }

    #[test]
    fn rational_sqrt() {
        assert_eq!(q(4, 9).sqrt_exact(), Some(q(2, 3)));
        assert_eq!(q(2, 1).sqrt_exact(), None);
        assert_eq!(q(-4, 1).sqrt_exact(), None);
    }

    #[test]
    fn quad_field_ops() {
        // (1 + √3)(1 − √3) = −2
        let x = Quad::new(q(1, 1), q(1, 1), 3);
        let y = Quad::new(q(1, 1), q(-1, 1), 3);
        assert_eq!(x.clone() * y, Quad::from_int(-2));
        // (1 + √3) / (1 + √3) = 1
        let z = x.clone() / x.clone();
        assert_eq!(z, Quad::one());
        // sqrt(3) * sqrt(3) = 3
        let s3 = Quad::from_int(3).sqrt_exact().unwrap();
        assert_eq!(s3.clone() * s3, Quad::from_int(3));
    }

    #[test]
    fn quad_sqrt_of_square() {
        assert_eq!(Quad::from_int(4).sqrt_exact(), Some(Quad::from_int(2)));
    }

    #[test]
    fn rat_string_round_trip() {
        let r = q(-22, 7);
        assert_eq!(parse_rat(&format_rat(&r)), Some(r));
        assert_eq!(parse_rat("5"), Some(q(5, 1)));
        assert_eq!(parse_rat("1/0"), None);
    }
}
