//! Dynnikov and torus coordinates of (multi)curves on the 3-punctured disk.
//!
//! A multicurve on the disk is labelled by a nonzero Dynnikov pair `(a, b)`.
//! Its lift to the one-holed torus has homology class `±(p, q)`, and the two
//! labellings are related by the piecewise-linear, even, two-to-one map
//!
//! ```text
//! phi(p, q) = ((|p - q| - |p + q|) / 2, |p| - |q|)
//! ```
//!
//! whose inverse is given by [`phi_inverse`].

use std::fmt;
use std::ops::Neg;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A point of the Dynnikov plane, `Z^2` minus the origin.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DynnikovCoord {
    a: BigInt,
    b: BigInt,
}

impl DynnikovCoord {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Result<Self> {
        let (a, b) = (a.into(), b.into());
        if a.is_zero() && b.is_zero() {
            return Err(Error::ZeroVector);
        }
        Ok(Self { a, b })
    }

    /// Caller guarantees `(a, b) != (0, 0)`.
    pub(crate) fn new_unchecked(a: BigInt, b: BigInt) -> Self {
        debug_assert!(!(a.is_zero() && b.is_zero()));
        Self { a, b }
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn into_parts(self) -> (BigInt, BigInt) {
        (self.a, self.b)
    }

    /// The reference curve `c`, `(0, 1)`.
    pub fn c() -> Self {
        Self::new_unchecked(BigInt::zero(), BigInt::one())
    }

    /// The reference curve `d`, `(0, -1)`.
    pub fn d() -> Self {
        Self::new_unchecked(BigInt::zero(), -BigInt::one())
    }

    /// The reference curve `e`, `(-1, 0)`.
    pub fn e() -> Self {
        Self::new_unchecked(-BigInt::one(), BigInt::zero())
    }

    pub fn eq_pair(&self, a: i64, b: i64) -> bool {
        self.a == BigInt::from(a) && self.b == BigInt::from(b)
    }

    /// Largest absolute coordinate.
    pub fn max_norm(&self) -> BigInt {
        self.a.abs().max(self.b.abs())
    }
}

impl Neg for DynnikovCoord {
    type Output = Self;

    fn neg(self) -> Self {
        Self::new_unchecked(-self.a, -self.b)
    }
}

impl Neg for &DynnikovCoord {
    type Output = DynnikovCoord;

    fn neg(self) -> DynnikovCoord {
        DynnikovCoord::new_unchecked(-&self.a, -&self.b)
    }
}

impl TryFrom<(i64, i64)> for DynnikovCoord {
    type Error = Error;

    fn try_from((a, b): (i64, i64)) -> Result<Self> {
        Self::new(a, b)
    }
}

impl fmt::Debug for DynnikovCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.a, self.b)
    }
}

impl fmt::Display for DynnikovCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

/// A nonzero homology vector `(p, q)` of the one-holed torus.
///
/// Curves only determine their class up to sign; [`TorusCoord::canonical`]
/// picks the representative with `p > 0`, or `p == 0` and `q > 0`. Equality
/// on this type is equality of oriented vectors, which is what the torus
/// Cayley graph needs. Use [`TorusCoord::same_curve`] to compare classes.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TorusCoord {
    p: BigInt,
    q: BigInt,
}

impl TorusCoord {
    pub fn new(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<Self> {
        let (p, q) = (p.into(), q.into());
        if p.is_zero() && q.is_zero() {
            return Err(Error::ZeroVector);
        }
        Ok(Self { p, q })
    }

    pub(crate) fn new_unchecked(p: BigInt, q: BigInt) -> Self {
        debug_assert!(!(p.is_zero() && q.is_zero()));
        Self { p, q }
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }

    pub fn into_parts(self) -> (BigInt, BigInt) {
        (self.p, self.q)
    }

    pub fn is_canonical(&self) -> bool {
        self.p.is_positive() || (self.p.is_zero() && self.q.is_positive())
    }

    pub fn canonical(&self) -> Self {
        if self.is_canonical() {
            self.clone()
        } else {
            -self
        }
    }

    pub fn same_curve(&self, other: &Self) -> bool {
        self == other || *self == -other
    }

    /// `gcd(|p|, |q|)`, the number of parallel components of the lift.
    pub fn multiplicity(&self) -> BigInt {
        self.p.gcd(&self.q)
    }

    pub fn is_primitive(&self) -> bool {
        self.multiplicity().is_one()
    }

    pub fn max_norm(&self) -> BigInt {
        self.p.abs().max(self.q.abs())
    }
}

impl Neg for TorusCoord {
    type Output = Self;

    fn neg(self) -> Self {
        Self::new_unchecked(-self.p, -self.q)
    }
}

impl Neg for &TorusCoord {
    type Output = TorusCoord;

    fn neg(self) -> TorusCoord {
        TorusCoord::new_unchecked(-&self.p, -&self.q)
    }
}

impl TryFrom<(i64, i64)> for TorusCoord {
    type Error = Error;

    fn try_from((p, q): (i64, i64)) -> Result<Self> {
        Self::new(p, q)
    }
}

impl fmt::Debug for TorusCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.p, self.q)
    }
}

impl fmt::Display for TorusCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.p, self.q)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    Essential,
    Multicurve,
}

/// Whether a Dynnikov pair labels a single curve or several parallel copies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveKind {
    pub kind: Kind,
    pub multiplicity: BigInt,
    /// Coordinates of one component.
    pub primitive: DynnikovCoord,
}

impl CurveKind {
    pub fn is_essential(&self) -> bool {
        self.kind == Kind::Essential
    }
}

/// Torus to Dynnikov coordinates.
pub fn phi(t: &TorusCoord) -> DynnikovCoord {
    let (p, q) = (&t.p, &t.q);
    let a = ((p - q).abs() - (p + q).abs()) / 2;
    let b = p.abs() - q.abs();
    DynnikovCoord::new_unchecked(a, b)
}

/// Dynnikov to torus coordinates, returned as the canonical representative
/// of `±(p, q)`.
pub fn phi_inverse(d: &DynnikovCoord) -> TorusCoord {
    let (a, b) = (&d.a, &d.b);
    let lift = if !b.is_negative() {
        TorusCoord::new_unchecked(a.abs() + b, -a)
    } else {
        TorusCoord::new_unchecked(a.clone(), b - a.abs())
    };
    lift.canonical()
}

pub fn curve_kind(d: &DynnikovCoord) -> CurveKind {
    let lift = phi_inverse(d);
    let g = lift.multiplicity();
    if g.is_one() {
        return CurveKind {
            kind: Kind::Essential,
            multiplicity: g,
            primitive: d.clone(),
        };
    }
    let prim = TorusCoord::new_unchecked(&lift.p / &g, &lift.q / &g);
    CurveKind {
        kind: Kind::Multicurve,
        multiplicity: g,
        primitive: phi(&prim),
    }
}

/// Fails with [`Error::NotEssential`] unless `d` is a single curve.
pub(crate) fn require_essential(d: &DynnikovCoord) -> Result<()> {
    let kind = curve_kind(d);
    if kind.is_essential() {
        Ok(())
    } else {
        Err(Error::NotEssential {
            a: d.a.clone(),
            b: d.b.clone(),
            multiplicity: kind.multiplicity,
        })
    }
}
