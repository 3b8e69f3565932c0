//! Braid generators and Dehn twists acting on the Dynnikov plane.
//!
//! `sigma_1`, `sigma_2` act by the max-plus update rules; the pure twists are
//! `t_c = sigma_1^2` and `t_d = sigma_2^2`, each piecewise linear with four
//! linearity regions. Every orbit of `t_c` (resp. `t_d`) lies on a broken line,
//! the track `O^c_n` (resp. `O^d_n`) through `(n, 0)`, and one twist moves a
//! point `2n` lattice jumps clockwise along it.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::coords::DynnikovCoord;
use crate::error::{Error, Result};

/// A standard generator of the pure mapping class group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    Tc,
    TcInv,
    Td,
    TdInv,
}

impl Generator {
    pub const ALL: [Generator; 4] = [Generator::Tc, Generator::TcInv, Generator::Td, Generator::TdInv];

    pub fn inverse(self) -> Self {
        match self {
            Generator::Tc => Generator::TcInv,
            Generator::TcInv => Generator::Tc,
            Generator::Td => Generator::TdInv,
            Generator::TdInv => Generator::Td,
        }
    }

    pub fn family(self) -> Family {
        match self {
            Generator::Tc | Generator::TcInv => Family::C,
            Generator::Td | Generator::TdInv => Family::D,
        }
    }

    pub fn is_inverse(self) -> bool {
        matches!(self, Generator::TcInv | Generator::TdInv)
    }

    /// The braid letter whose square is this twist.
    pub fn square_root(self) -> BraidLetter {
        match self {
            Generator::Tc => BraidLetter::S1,
            Generator::TcInv => BraidLetter::S1Inv,
            Generator::Td => BraidLetter::S2,
            Generator::TdInv => BraidLetter::S2Inv,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Generator::Tc => "tc",
            Generator::TcInv => "tc-",
            Generator::Td => "td",
            Generator::TdInv => "td-",
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown generator `{0}`, expected one of tc, tc-, td, td-")]
pub struct ParseGeneratorError(String);

impl FromStr for Generator {
    type Err = ParseGeneratorError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "tc" => Ok(Generator::Tc),
            "tc-" => Ok(Generator::TcInv),
            "td" => Ok(Generator::Td),
            "td-" => Ok(Generator::TdInv),
            other => Err(ParseGeneratorError(other.to_string())),
        }
    }
}

/// Half twists `sigma_1^{±1}`, `sigma_2^{±1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BraidLetter {
    S1,
    S1Inv,
    S2,
    S2Inv,
}

impl BraidLetter {
    pub const ALL: [BraidLetter; 4] = [BraidLetter::S1, BraidLetter::S1Inv, BraidLetter::S2, BraidLetter::S2Inv];

    pub fn inverse(self) -> Self {
        match self {
            BraidLetter::S1 => BraidLetter::S1Inv,
            BraidLetter::S1Inv => BraidLetter::S1,
            BraidLetter::S2 => BraidLetter::S2Inv,
            BraidLetter::S2Inv => BraidLetter::S2,
        }
    }
}

/// A word in the twist generators, stored in application order: the first
/// letter acts first. As a mapping class the word is the reversed
/// composition, `w = g_k ∘ ... ∘ g_1`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct TwistWord(pub Vec<Generator>);

impl TwistWord {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Generator] {
        &self.0
    }

    pub fn push(&mut self, g: Generator) {
        self.0.push(g);
    }

    pub fn inverse(&self) -> Self {
        Self(self.0.iter().rev().map(|g| g.inverse()).collect())
    }

    /// No letter is immediately followed by its inverse.
    pub fn is_freely_reduced(&self) -> bool {
        self.0.windows(2).all(|w| w[1] != w[0].inverse())
    }
}

impl From<Vec<Generator>> for TwistWord {
    fn from(letters: Vec<Generator>) -> Self {
        Self(letters)
    }
}

impl fmt::Display for TwistWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, g) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str(g.as_str())?;
        }
        Ok(())
    }
}

impl FromStr for TwistWord {
    type Err = ParseGeneratorError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        s.split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(str::parse)
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(TwistWord)
    }
}

fn max2(x: BigInt, y: BigInt) -> BigInt {
    if x >= y {
        x
    } else {
        y
    }
}

fn max3(x: BigInt, y: BigInt, z: BigInt) -> BigInt {
    max2(max2(x, y), z)
}

/// The update rules for the half twists.
pub fn apply_braid(l: BraidLetter, d: &DynnikovCoord) -> DynnikovCoord {
    let (a, b) = (d.a(), d.b());
    let zero = BigInt::zero;
    let (a2, b2) = match l {
        BraidLetter::S1 => (
            a + b - max3(zero(), a.clone(), b.clone()),
            max2(b.clone(), zero()) - a,
        ),
        BraidLetter::S2 => {
            let s = a + max2(zero(), b.clone());
            (max2(s.clone(), b.clone()), b - s)
        }
        BraidLetter::S1Inv => {
            let s = a + max2(zero(), b.clone());
            (max2(zero(), s.clone()) - b, s)
        }
        BraidLetter::S2Inv => (
            a - max3(a + b, zero(), b.clone()),
            a + b - max2(zero(), b.clone()),
        ),
    };
    DynnikovCoord::new_unchecked(a2, b2)
}

/// Closed-form action of the twists.
///
/// `t_c` and `t_d` use their four linearity regions directly. The inverses
/// invert each affine branch on its image region, so they do not go through
/// the forward formulas.
pub fn apply_twist(g: Generator, d: &DynnikovCoord) -> DynnikovCoord {
    let (a, b) = (d.a(), d.b());
    let (x, y) = match g {
        Generator::Tc => twist_c(a, b),
        Generator::Td => twist_d(a, b),
        Generator::TcInv => twist_c_inv(a, b),
        Generator::TdInv => twist_d_inv(a, b),
    };
    DynnikovCoord::new_unchecked(x, y)
}

fn twist_c(a: &BigInt, b: &BigInt) -> (BigInt, BigInt) {
    let two_a: BigInt = a * 2;
    if !a.is_negative() && b <= a {
        // A
        (b - a, -b)
    } else if !a.is_negative() && a <= b && *b <= two_a {
        // B
        (b - a, b - &two_a)
    } else if two_a <= *b && !b.is_negative() {
        // C
        (a.clone(), b - &two_a)
    } else {
        // D: a <= 0, b <= 0
        debug_assert!(!a.is_positive() && !b.is_positive());
        (a + b, -two_a - b)
    }
}

fn twist_d(a: &BigInt, b: &BigInt) -> (BigInt, BigInt) {
    let two_a: BigInt = a * 2;
    if !a.is_positive() && a <= b {
        // -A
        (b - a, -b)
    } else if two_a <= *b && b <= a && !a.is_positive() {
        // -B
        (b - a, b - &two_a)
    } else if *b <= two_a && !b.is_positive() {
        // -C
        (a.clone(), b - &two_a)
    } else {
        // -D: a >= 0, b >= 0
        debug_assert!(!a.is_negative() && !b.is_negative());
        (a + b, -two_a - b)
    }
}

fn twist_c_inv(x: &BigInt, y: &BigInt) -> (BigInt, BigInt) {
    let two_x: BigInt = x * 2;
    let sum = x + y;
    if !x.is_positive() && !sum.is_positive() {
        // A' = t_c(A)
        (-sum, -y)
    } else if !x.is_negative() && !y.is_positive() {
        // B'
        (x - y, &two_x - y)
    } else if !y.is_negative() && !(y + &two_x).is_negative() {
        // C'
        (x.clone(), y + &two_x)
    } else {
        // D': x + y >= 0, 2x + y <= 0
        debug_assert!(!sum.is_negative() && !(y + &two_x).is_positive());
        (-sum, two_x + y)
    }
}

fn twist_d_inv(x: &BigInt, y: &BigInt) -> (BigInt, BigInt) {
    let two_x: BigInt = x * 2;
    let sum = x + y;
    if !x.is_negative() && !sum.is_negative() {
        // -A'
        (-sum, -y)
    } else if !x.is_positive() && !y.is_negative() {
        // -B'
        (x - y, &two_x - y)
    } else if !y.is_positive() && !(y + &two_x).is_positive() {
        // -C'
        (x.clone(), y + &two_x)
    } else {
        // -D': x + y <= 0, 2x + y >= 0
        debug_assert!(!sum.is_positive() && !(y + &two_x).is_negative());
        (-sum, two_x + y)
    }
}

/// Applies the letters of `w` in order, first letter first.
pub fn apply_word(w: &TwistWord, d: &DynnikovCoord) -> DynnikovCoord {
    w.letters().iter().fold(d.clone(), |acc, &g| apply_twist(g, &acc))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    C,
    D,
}

impl Family {
    pub fn forward(self) -> Generator {
        match self {
            Family::C => Generator::Tc,
            Family::D => Generator::Td,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::C => "c",
            Family::D => "d",
        })
    }
}

/// Index `n` of the family's track through `d`, or zero when `d` is fixed by
/// the family's twist (the positive `b`-axis for `C`, the negative for `D`).
pub fn track_index(d: &DynnikovCoord, family: Family) -> BigInt {
    let (a, b) = match family {
        Family::C => (d.a().clone(), d.b().clone()),
        Family::D => (-d.a(), -d.b()),
    };
    if b.is_negative() {
        a.abs() - b
    } else {
        a.abs()
    }
}

/// One track `O^c_n` or `O^d_n`: an infinite broken line in the Dynnikov
/// plane.
///
/// Points are parametrized by the number of clockwise jumps from a base
/// point. For `O^c_n` the base point is `(n, 0)` and the line runs
///
/// ```text
/// (n, +inf) -> (n, 0) -> (0, -n) -> (-n, 0) -> (-n, +inf)
/// ```
///
/// `O^d_n` is the centrally symmetric image, based at `(-n, 0)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Track {
    family: Family,
    index: BigInt,
}

impl Track {
    pub fn new(family: Family, index: impl Into<BigInt>) -> Result<Self> {
        let index = index.into();
        if !index.is_positive() {
            return Err(Error::InvalidTrackIndex);
        }
        Ok(Self { family, index })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn index(&self) -> &BigInt {
        &self.index
    }

    /// The point `s` clockwise jumps past the base point.
    pub fn point_at(&self, s: &BigInt) -> DynnikovCoord {
        let n = &self.index;
        let two_n: BigInt = n * 2;
        let (a, b) = if !s.is_positive() {
            (n.clone(), -s)
        } else if s <= n {
            (n - s, -s)
        } else if *s <= two_n {
            (n - s, s - &two_n)
        } else {
            (-n, s - &two_n)
        };
        let p = DynnikovCoord::new_unchecked(a, b);
        match self.family {
            Family::C => p,
            Family::D => -p,
        }
    }

    /// Inverse of [`Track::point_at`]; `None` if `d` is not on this track.
    pub fn position_of(&self, d: &DynnikovCoord) -> Option<BigInt> {
        let d = match self.family {
            Family::C => d.clone(),
            Family::D => -d,
        };
        let (a, b) = (d.a(), d.b());
        let n = &self.index;
        let right_ray = a == n && !b.is_negative();
        let s = if right_ray || (!a.is_negative() && !b.is_positive() && a - b == *n) {
            -b
        } else if !a.is_positive() && !b.is_positive() && -(a + b) == *n {
            n - a
        } else if *a == -n && !b.is_negative() {
            b + n * 2
        } else {
            return None;
        };
        Some(s)
    }

    pub fn contains(&self, d: &DynnikovCoord) -> bool {
        self.position_of(d).is_some()
    }

    /// The next lattice point clockwise, computed from the local shape of
    /// the broken line at `d`.
    pub fn next(&self, d: &DynnikovCoord) -> Option<DynnikovCoord> {
        if !self.contains(d) {
            return None;
        }
        let (sign, d) = match self.family {
            Family::C => (1, d.clone()),
            Family::D => (-1, -d),
        };
        let (a, b) = (d.a(), d.b());
        let one = BigInt::one();
        let (x, y) = if a.is_positive() && b.is_positive() {
            // descending the right ray
            (a.clone(), b - &one)
        } else if a.is_positive() {
            // toward (0, -n)
            (a - &one, b - &one)
        } else if b.is_negative() {
            // toward (-n, 0)
            (a - &one, b + &one)
        } else {
            // climbing the left ray
            (a.clone(), b + &one)
        };
        let p = DynnikovCoord::new_unchecked(x, y);
        Some(if sign > 0 { p } else { -p })
    }

    /// Moves `d` by `jumps` lattice points, clockwise for positive `jumps`.
    pub fn jump(&self, d: &DynnikovCoord, jumps: &BigInt) -> Option<DynnikovCoord> {
        self.position_of(d).map(|s| self.point_at(&(s + jumps)))
    }

    /// All points of the track with both coordinates in `[-window, window]`,
    /// in clockwise order.
    pub fn points(&self, window: &BigInt) -> Vec<DynnikovCoord> {
        let mut out = Vec::new();
        let end: BigInt = &self.index * 2 + window;
        let mut s: BigInt = -window.clone();
        while s <= end {
            let p = self.point_at(&s);
            if &p.max_norm() <= window {
                out.push(p);
            }
            s += 1;
        }
        out
    }
}

/// The track of `family` through `d`; fixed points have none.
pub fn track_of(d: &DynnikovCoord, family: Family) -> Result<Track> {
    let n = track_index(d, family);
    if n.is_zero() {
        return Err(Error::FixedPoint {
            a: d.a().clone(),
            b: d.b().clone(),
        });
    }
    Ok(Track { family, index: n })
}

/// Twist by moving `2n` jumps along the track `O_n` containing `d`:
/// clockwise for `t_c`, `t_d`, counterclockwise for the inverses.
pub fn twist_via_jumps(g: Generator, d: &DynnikovCoord) -> DynnikovCoord {
    let track = match track_of(d, g.family()) {
        Ok(t) => t,
        Err(_) => return d.clone(),
    };
    let mut jumps: BigInt = track.index() * 2;
    if g.is_inverse() {
        jumps = -jumps;
    }
    track
        .jump(d, &jumps)
        .expect("d lies on its own track")
}
