//! Even continued fractions and the matching `SL_2(Z)` factorizations.
//!
//! For coprime `(m, n)` the nearest-even Euclid algorithm alternates
//! `m = q_0 n + m_1`, `n = q_1 m_1 + n_1`, ... with every `q_i` even and
//! remainders strictly shrinking. Each division is one transvection power,
//! `(m, n) = U^{q_0} (m_1, n)`, `(m_1, n) = L^{q_1} (m_1, n_1)`, so the
//! expansion doubles as a factorization
//!
//! ```text
//! [m; n] = U^{q_0} L^{q_1} U^{q_2} ... v,   v in {(0, ε), (ε, 0), (ε, ε)}
//! ```
//!
//! into the free generators `U^2`, `L^2` of the level-2 congruence subgroup.
//! Half the sum of `|q_i|` counts those generators and is the ECF length.

use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::coords::TorusCoord;
use crate::error::{Error, Result};

/// A 2x2 integer matrix, row major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat2 {
    pub m11: BigInt,
    pub m12: BigInt,
    pub m21: BigInt,
    pub m22: BigInt,
}

impl Mat2 {
    pub fn new(
        m11: impl Into<BigInt>,
        m12: impl Into<BigInt>,
        m21: impl Into<BigInt>,
        m22: impl Into<BigInt>,
    ) -> Self {
        Self {
            m11: m11.into(),
            m12: m12.into(),
            m21: m21.into(),
            m22: m22.into(),
        }
    }

    pub fn identity() -> Self {
        Self::new(1, 0, 0, 1)
    }

    /// `U^k = [[1, k], [0, 1]]`.
    pub fn u_pow(k: impl Into<BigInt>) -> Self {
        Self::new(1, k, 0, 1)
    }

    /// `L^k = [[1, 0], [k, 1]]`.
    pub fn l_pow(k: impl Into<BigInt>) -> Self {
        Self::new(1, 0, k, 1)
    }

    pub fn det(&self) -> BigInt {
        &self.m11 * &self.m22 - &self.m12 * &self.m21
    }

    pub fn apply(&self, v: &TorusCoord) -> TorusCoord {
        let (p, q) = (v.p(), v.q());
        TorusCoord::new_unchecked(
            &self.m11 * p + &self.m12 * q,
            &self.m21 * p + &self.m22 * q,
        )
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }
}

impl Mul for &Mat2 {
    type Output = Mat2;

    fn mul(self, r: &Mat2) -> Mat2 {
        Mat2 {
            m11: &self.m11 * &r.m11 + &self.m12 * &r.m21,
            m12: &self.m11 * &r.m12 + &self.m12 * &r.m22,
            m21: &self.m21 * &r.m11 + &self.m22 * &r.m21,
            m22: &self.m21 * &r.m12 + &self.m22 * &r.m22,
        }
    }
}

impl Mul for Mat2 {
    type Output = Mat2;

    fn mul(self, r: Mat2) -> Mat2 {
        &self * &r
    }
}

impl fmt::Debug for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.m11, self.m12, self.m21, self.m22)
    }
}

fn require_unimodular(m: &Mat2) -> Result<()> {
    let det = m.det();
    if det.is_one() {
        Ok(())
    } else {
        Err(Error::NotUnimodular { det })
    }
}

/// Membership in `Γ(2)`: odd diagonal, even off-diagonal.
pub fn in_gamma2(m: &Mat2) -> Result<bool> {
    require_unimodular(m)?;
    Ok(m.m11.is_odd() && m.m22.is_odd() && m.m12.is_even() && m.m21.is_even())
}

/// Membership in the index-2 subgroup of `Γ(2)` with diagonal `≡ 1 (mod 4)`,
/// freely generated by `U^2` and `L^2`.
pub fn in_gamma2_bar(m: &Mat2) -> Result<bool> {
    let four = BigInt::from(4);
    Ok(in_gamma2(m)? && m.m11.mod_floor(&four).is_one() && m.m22.mod_floor(&four).is_one())
}

/// An even continued fraction `m/n = [q_0, ..., q_r]` or `[q_0, ..., q_r, 1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EcfExpansion {
    pub quotients: Vec<BigInt>,
    /// A final partial quotient `1` follows `q_r`; set iff `mn` is odd.
    pub trailing_one: bool,
    /// `±1`, the nonzero entries of `terminal`.
    pub epsilon: i8,
    /// `(0, ε)`, `(ε, 0)` or `(ε, ε)`.
    pub terminal: TorusCoord,
}

impl EcfExpansion {
    /// `½ (|q_0| + ... + |q_r|)`.
    pub fn length(&self) -> BigInt {
        let total: BigInt = self.quotients.iter().map(|q| q.abs()).sum();
        total / 2
    }

    /// True for `mn = -1`, the one input with two admissible expansions.
    pub fn is_ambiguous(&self) -> bool {
        self.trailing_one && self.quotients.len() == 1 && self.quotients[0] == BigInt::from(-2)
    }

    /// Transvection factors `U^{q_0}, L^{q_1}, U^{q_2}, ...`.
    pub fn factors(&self) -> Vec<Mat2> {
        self.quotients
            .iter()
            .enumerate()
            .map(|(i, q)| {
                if i % 2 == 0 {
                    Mat2::u_pow(q.clone())
                } else {
                    Mat2::l_pow(q.clone())
                }
            })
            .collect()
    }
}

impl fmt::Display for EcfExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, q) in self.quotients.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{q}")?;
        }
        if self.trailing_one {
            if !self.quotients.is_empty() {
                f.write_str(",")?;
            }
            f.write_str("1")?;
        }
        f.write_str("]")
    }
}

/// The even `q` with `|x - q y| < |y|`; unique unless `x / y` is an odd
/// integer, which callers rule out.
fn nearest_even_quotient(x: &BigInt, y: &BigInt) -> BigInt {
    let (x, y) = if y.is_negative() { (-x, -y) } else { (x.clone(), y.clone()) };
    // q / 2 = round(x / 2y) = floor((x + y) / 2y)
    (x + &y).div_floor(&(y * 2)) * 2
}

fn validate(m: &BigInt, n: &BigInt) -> Result<()> {
    if m.is_zero() && n.is_zero() {
        return Err(Error::ZeroVector);
    }
    if !m.gcd(n).is_one() {
        return Err(Error::NotCoprime {
            m: m.clone(),
            n: n.clone(),
        });
    }
    Ok(())
}

fn sign_of(x: &BigInt) -> i8 {
    if x.is_negative() {
        -1
    } else {
        1
    }
}

/// Nearest-even Euclid expansion of `m / n`.
///
/// `(±1, 0)` has the empty expansion. `mn = -1` gets `[-2, 1]`, one of its
/// two admissible expansions.
pub fn ecf_expand(m: impl Into<BigInt>, n: impl Into<BigInt>) -> Result<EcfExpansion> {
    Ok(expand(m.into(), n.into(), usize::MAX)?.expect("unbounded expansion always finishes"))
}

/// Like [`ecf_expand`], but gives up with `None` once more than
/// `max_quotients` quotients would be needed.
pub fn ecf_expand_limited(
    m: impl Into<BigInt>,
    n: impl Into<BigInt>,
    max_quotients: usize,
) -> Result<Option<EcfExpansion>> {
    expand(m.into(), n.into(), max_quotients)
}

fn expand(m: BigInt, n: BigInt, max_quotients: usize) -> Result<Option<EcfExpansion>> {
    validate(&m, &n)?;

    let mut quotients = Vec::new();
    let (mut x, mut y) = (m, n);
    if y.is_zero() {
        let epsilon = sign_of(&x);
        return Ok(Some(EcfExpansion {
            quotients,
            trailing_one: false,
            epsilon,
            terminal: TorusCoord::new_unchecked(x, y),
        }));
    }

    // Alternate U-divisions (x by y) and L-divisions (y by x).
    let mut u_step = true;
    loop {
        let (num, den) = if u_step { (&x, &y) } else { (&y, &x) };
        let unit_odd = den.abs().is_one() && num.is_odd();
        let q = if unit_odd {
            // Land on (ε, ε) rather than (-ε, ε): q = (k - ε) / ε.
            (num - den) * den
        } else {
            nearest_even_quotient(num, den)
        };
        let rem = num - &q * den;
        quotients.push(q);
        if u_step {
            x = rem;
        } else {
            y = rem;
        }

        if unit_odd {
            debug_assert_eq!(x, y);
            let epsilon = sign_of(&x);
            return Ok(Some(EcfExpansion {
                quotients,
                trailing_one: true,
                epsilon,
                terminal: TorusCoord::new_unchecked(x, y),
            }));
        }
        if x.is_zero() || y.is_zero() {
            let epsilon = if x.is_zero() { sign_of(&y) } else { sign_of(&x) };
            return Ok(Some(EcfExpansion {
                quotients,
                trailing_one: false,
                epsilon,
                terminal: TorusCoord::new_unchecked(x, y),
            }));
        }
        if quotients.len() >= max_quotients {
            return Ok(None);
        }
        u_step = !u_step;
    }
}

/// ECF length `|m/n|_ECF`.
pub fn ecf_length(m: impl Into<BigInt>, n: impl Into<BigInt>) -> Result<BigInt> {
    Ok(ecf_expand(m, n)?.length())
}

/// `[m; n] = F_0 F_1 ... F_r v` with `F_i` alternating `U^{q_i}` and
/// `L^{q_i}`, starting with `U`.
pub fn factorize(m: impl Into<BigInt>, n: impl Into<BigInt>) -> Result<(Vec<Mat2>, TorusCoord)> {
    let e = ecf_expand(m, n)?;
    Ok((e.factors(), e.terminal))
}
