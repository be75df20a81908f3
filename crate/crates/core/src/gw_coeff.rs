//! The graded coefficient ring with a plus part and a rank-one minus
//! part generated by the hyperbolic element Hm, subject to
//! Hm^2 = 2*Hp and x*Hm = rank(x)*Hm.
//!
//! Two plus-part models ship: `Split` (plus part = Z, Hp = 2, the
//! quadratically closed case) and `Real` (plus part = Z[e]/(e^2-1),
//! Hp = 1 + e, the real case). Everything downstream is generic over
//! the model, so mixing models is a compile-time impossibility.

use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// The plus-graded part of the coefficient ring.
pub trait PlusPart:
    Clone + core::fmt::Debug + core::fmt::Display + PartialEq + Eq + PartialOrd + Ord
{
    const MODEL_NAME: &'static str;

    fn zero() -> Self;
    fn one() -> Self;
    /// The plus hyperbolic element Hp; rank 2.
    fn hyperbolic() -> Self;
    fn from_int(n: BigInt) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    /// Rank homomorphism to Z.
    fn rank(&self) -> BigInt;
    /// Coordinates in a fixed Z-module basis of the plus part.
    fn basis_coords(&self) -> Vec<BigInt>;
    /// Number of entries returned by `basis_coords`.
    fn basis_len() -> usize;
    fn parse(s: &str) -> Result<Self>;
}

/// Plus part Z: the coefficient ring of a quadratically closed field.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct Split(pub BigInt);

impl core::fmt::Display for Split {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl PlusPart for Split {
    const MODEL_NAME: &'static str = "split";

    fn zero() -> Self {
        Split(BigInt::zero())
    }
    fn one() -> Self {
        Split(BigInt::one())
    }
    fn hyperbolic() -> Self {
        Split(BigInt::from(2))
    }
    fn from_int(n: BigInt) -> Self {
        Split(n)
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn add(&self, other: &Self) -> Self {
        Split(&self.0 + &other.0)
    }
    fn neg(&self) -> Self {
        Split(-&self.0)
    }
    fn mul(&self, other: &Self) -> Self {
        Split(&self.0 * &other.0)
    }
    fn rank(&self) -> BigInt {
        self.0.clone()
    }
    fn basis_coords(&self) -> Vec<BigInt> {
        alloc::vec![self.0.clone()]
    }
    fn basis_len() -> usize {
        1
    }
    fn parse(s: &str) -> Result<Self> {
        let t = s.trim();
        t.parse::<BigInt>()
            .map(Split)
            .map_err(|_| Error::Mismatch(format!("cannot parse split plus part {t:?}")))
    }
}

/// Plus part Z[e]/(e^2 - 1): the coefficient ring of the real numbers,
/// with e the class of the rank-one form of negative discriminant and
/// Hp = 1 + e.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct Real {
    pub a: BigInt,
    pub b: BigInt,
}

impl core::fmt::Display for Real {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else if self.a.is_zero() {
            write!(f, "{}*e", self.b)
        } else {
            write!(f, "{} + {}*e", self.a, self.b)
        }
    }
}

impl PlusPart for Real {
    const MODEL_NAME: &'static str = "real";

    fn zero() -> Self {
        Real { a: BigInt::zero(), b: BigInt::zero() }
    }
    fn one() -> Self {
        Real { a: BigInt::one(), b: BigInt::zero() }
    }
    fn hyperbolic() -> Self {
        Real { a: BigInt::one(), b: BigInt::one() }
    }
    fn from_int(n: BigInt) -> Self {
        Real { a: n, b: BigInt::zero() }
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
    fn add(&self, other: &Self) -> Self {
        Real { a: &self.a + &other.a, b: &self.b + &other.b }
    }
    fn neg(&self) -> Self {
        Real { a: -&self.a, b: -&self.b }
    }
    fn mul(&self, other: &Self) -> Self {
        Real {
            a: &self.a * &other.a + &self.b * &other.b,
            b: &self.a * &other.b + &self.b * &other.a,
        }
    }
    fn rank(&self) -> BigInt {
        &self.a + &self.b
    }
    fn basis_coords(&self) -> Vec<BigInt> {
        alloc::vec![self.a.clone(), self.b.clone()]
    }
    fn basis_len() -> usize {
        2
    }
    fn parse(s: &str) -> Result<Self> {
        parse_real_plus(s)
    }
}

/// Element p + m*Hm of the full graded coefficient ring.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct GWCoeff<P: PlusPart> {
    pub plus: P,
    pub minus: BigInt,
}

impl<P: PlusPart> Default for GWCoeff<P> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<P: PlusPart> GWCoeff<P> {
    pub fn zero() -> Self {
        GWCoeff { plus: P::zero(), minus: BigInt::zero() }
    }

    pub fn one() -> Self {
        GWCoeff { plus: P::one(), minus: BigInt::zero() }
    }

    pub fn from_int(n: i64) -> Self {
        GWCoeff { plus: P::from_int(BigInt::from(n)), minus: BigInt::zero() }
    }

    pub fn from_plus(p: P) -> Self {
        GWCoeff { plus: p, minus: BigInt::zero() }
    }

    /// Hp, the hyperbolic element of the plus part.
    pub fn hyperbolic_plus() -> Self {
        GWCoeff { plus: P::hyperbolic(), minus: BigInt::zero() }
    }

    /// Hm, the generator of the minus part.
    pub fn hyperbolic_minus() -> Self {
        GWCoeff { plus: P::zero(), minus: BigInt::one() }
    }

    pub fn is_zero(&self) -> bool {
        self.plus.is_zero() && self.minus.is_zero()
    }

    pub fn is_plus_homogeneous(&self) -> bool {
        self.minus.is_zero()
    }

    pub fn is_minus_homogeneous(&self) -> bool {
        self.plus.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        GWCoeff {
            plus: self.plus.add(&other.plus),
            minus: &self.minus + &other.minus,
        }
    }

    pub fn neg(&self) -> Self {
        GWCoeff { plus: self.plus.neg(), minus: -&self.minus }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// (p1 + m1 Hm)(p2 + m2 Hm)
    ///   = (p1 p2 + 2 m1 m2 Hp) + (rank(p1) m2 + rank(p2) m1) Hm.
    pub fn mul(&self, other: &Self) -> Self {
        let cross = P::from_int(&self.minus * &other.minus * BigInt::from(2))
            .mul(&P::hyperbolic());
        GWCoeff {
            plus: self.plus.mul(&other.plus).add(&cross),
            minus: self.plus.rank() * &other.minus + other.plus.rank() * &self.minus,
        }
    }

    pub fn rank(&self) -> BigInt {
        self.plus.rank() + BigInt::from(2) * &self.minus
    }

    /// Coordinates in the fixed Z-basis (plus-part basis, then Hm).
    pub fn basis_coords(&self) -> Vec<BigInt> {
        let mut v = self.plus.basis_coords();
        v.push(self.minus.clone());
        v
    }

    pub fn basis_len() -> usize {
        P::basis_len() + 1
    }

    /// Text format: "p", "m*Hm", or "p + m*Hm" (real plus parts as
    /// "a + b*e").
    pub fn parse(s: &str) -> Result<Self> {
        let t = s.trim();
        // split off a trailing Hm term if present
        if let Some(pos) = t.find("Hm") {
            if pos + 2 != t.len() {
                return Err(Error::Mismatch(format!("trailing input after Hm in {t:?}")));
            }
            let head = &t[..pos];
            // head is "", "m*", or "p + m*"
            let head = head.trim_end();
            let head = head.strip_suffix('*').unwrap_or(head).trim_end();
            let (plus_str, m_str) = match head.rfind('+') {
                // careful: "a + b*e + m*" has two '+'; the minus
                // multiplier never contains 'e'
                Some(i) if !head[i + 1..].contains('e') => (&head[..i], &head[i + 1..]),
                _ => ("", head),
            };
            let minus: BigInt = if m_str.trim().is_empty() {
                BigInt::one()
            } else {
                m_str.trim().parse().map_err(|_| {
                    Error::Mismatch(format!("cannot parse Hm multiplier in {t:?}"))
                })?
            };
            let plus = if plus_str.trim().is_empty() {
                P::zero()
            } else {
                P::parse(plus_str)?
            };
            return Ok(GWCoeff { plus, minus });
        }
        Ok(GWCoeff { plus: P::parse(t)?, minus: BigInt::zero() })
    }
}

impl<P: PlusPart> core::fmt::Display for GWCoeff<P> {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        if self.minus.is_zero() {
            return write!(f, "{}", self.plus);
        }
        if self.plus.is_zero() {
            return write!(f, "{}*Hm", self.minus);
        }
        write!(f, "{} + {}*Hm", self.plus, self.minus)
    }
}

fn parse_real_plus(s: &str) -> Result<Real> {
    // accepts "a", "b*e", "e", "a + b*e", with either sign on b
    let t = s.trim();
    if t.is_empty() {
        return Err(Error::Mismatch("empty real plus part".into()));
    }
    let err = || Error::Mismatch(format!("cannot parse real plus part {t:?}"));
    let parse_int = |u: &str| -> Result<BigInt> {
        let u = u.trim();
        if u.is_empty() || u == "+" {
            Ok(BigInt::one())
        } else if u == "-" {
            Ok(-BigInt::one())
        } else {
            u.parse().map_err(|_| err())
        }
    };
    if let Some(pos) = t.find('e') {
        if pos + 1 != t.len() {
            return Err(err());
        }
        let head = t[..pos].trim_end();
        let head = head.strip_suffix('*').unwrap_or(head).trim_end();
        // find the split between "a +" and "b"
        if let Some(i) = head.rfind('+').filter(|&i| i > 0) {
            let a = parse_int(&head[..i])?;
            let b = parse_int(&head[i + 1..])?;
            return Ok(Real { a, b });
        }
        if let Some(i) = head.rfind('-').filter(|&i| i > 0) {
            let a = parse_int(&head[..i])?;
            let b = parse_int(&head[i..])?;
            return Ok(Real { a, b });
        }
        return Ok(Real { a: BigInt::zero(), b: parse_int(head)? });
    }
    Ok(Real { a: parse_int(t)?, b: BigInt::zero() })
}

/// Sign of a homogeneous element: +1, -1, or None when inhomogeneous
/// or zero.
pub fn homogeneous_sign<P: PlusPart>(c: &GWCoeff<P>) -> Option<i8> {
    if c.is_zero() {
        None
    } else if c.is_plus_homogeneous() {
        Some(1)
    } else if c.is_minus_homogeneous() {
        Some(-1)
    } else {
        None
    }
}
