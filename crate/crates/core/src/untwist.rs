//! Minimal untwisting of essential curves and Dehn twist conjugacy classes.
//!
//! Every essential curve is carried to one of the reference curves
//! `c = (0, 1)`, `d = (0, -1)`, `e = (-1, 0)` by a shortest word in
//! `t_c^{±1}`, `t_d^{±1}`. The twist about the curve is then conjugate to
//! the twist about that reference curve, and the word length equals the ECF
//! length of the curve's torus coordinates.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::actions::{apply_twist, Generator, TwistWord};
use crate::coords::{require_essential, DynnikovCoord};
use crate::ecf::ecf_length;
use crate::error::Result;

/// The three conjugacy classes of twists, named by their reference curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CurveClass {
    C,
    D,
    E,
}

impl CurveClass {
    pub const ALL: [CurveClass; 3] = [CurveClass::C, CurveClass::D, CurveClass::E];

    /// Dynnikov coordinates of the reference curve.
    pub fn coord(self) -> DynnikovCoord {
        match self {
            CurveClass::C => DynnikovCoord::c(),
            CurveClass::D => DynnikovCoord::d(),
            CurveClass::E => DynnikovCoord::e(),
        }
    }

    pub fn of_terminal(d: &DynnikovCoord) -> Option<Self> {
        Self::ALL.into_iter().find(|c| c.coord() == *d)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            CurveClass::C => "c",
            CurveClass::D => "d",
            CurveClass::E => "e",
        }
    }
}

impl fmt::Display for CurveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Result of [`untwist`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Untwisting {
    /// Generators in application order.
    pub word: TwistWord,
    /// Every visited curve, from the input to `terminal` inclusive.
    pub path: Vec<DynnikovCoord>,
    pub terminal: DynnikovCoord,
}

fn in_lambda(d: &DynnikovCoord) -> bool {
    d.eq_pair(0, 1) || d.eq_pair(0, -1) || d.eq_pair(-1, 0)
}

/// The generator the algorithm applies at `d`, given the previous one.
fn next_generator(d: &DynnikovCoord, prev: Option<Generator>) -> Generator {
    if d.eq_pair(1, 0) {
        return match prev {
            Some(Generator::Tc) => Generator::Tc,
            Some(Generator::TdInv) | None => Generator::TdInv,
            Some(g) => panic!("{g} cannot lead to (1, 0) from outside the reference set"),
        };
    }
    let (a, b) = (d.a(), d.b());
    assert!(
        !a.is_zero() && !b.is_zero(),
        "essential curve {d:?} with a zero coordinate outside (±1, 0), (0, ±1)"
    );
    match (a.is_positive(), b.is_positive()) {
        (true, true) => Generator::Tc,
        (false, true) => Generator::TcInv,
        (false, false) => Generator::Td,
        (true, false) => Generator::TdInv,
    }
}

/// Runs the untwisting algorithm on an essential curve.
///
/// At each step the quadrant of `(a, b)` picks the generator: `t_c` for
/// `a, b > 0`, `t_c^-1` for `a < 0 < b`, `t_d` for `a, b < 0`, `t_d^-1` for
/// `b < 0 < a`. From `(1, 0)` one more twist reaches `e`, repeating the
/// previous generator (`t_d^-1` when `(1, 0)` is the input).
pub fn untwist(d: &DynnikovCoord) -> Result<Untwisting> {
    require_essential(d)?;
    let mut word = TwistWord::new();
    let mut path = vec![d.clone()];
    let mut cur = d.clone();
    let mut prev = None;
    while !in_lambda(&cur) {
        let g = next_generator(&cur, prev);
        cur = apply_twist(g, &cur);
        word.push(g);
        path.push(cur.clone());
        prev = Some(g);
    }
    Ok(Untwisting {
        word,
        path,
        terminal: cur,
    })
}

/// Conjugacy class of `t_γ` read off the Dynnikov coordinates of `γ`.
pub fn classify(d: &DynnikovCoord) -> Result<CurveClass> {
    require_essential(d)?;
    let (a, b) = (d.a(), d.b());
    if b.is_even() {
        return Ok(CurveClass::E);
    }
    // sign of (-1)^a b
    let positive = b.is_positive() == a.is_even();
    Ok(if positive { CurveClass::C } else { CurveClass::D })
}

/// Minimal number of generators carrying the curve into `{c, d, e}`.
pub fn conjugation_length(d: &DynnikovCoord) -> Result<BigInt> {
    require_essential(d)?;
    let (a, b) = (d.a(), d.b());
    let (p, q) = if !b.is_negative() {
        (a.abs() + b, -a)
    } else {
        (a.clone(), b - a.abs())
    };
    ecf_length(p, q)
}

/// A word `x` with `x t_γ x^-1 = t_target`.
///
/// As a mapping class `x` is the reversed composition of the letters; the
/// certificate is `apply_word(word, γ) == target.coord()`, which gives the
/// twist relation through `f t_γ f^-1 = t_{f(γ)}`.
pub fn conjugator(d: &DynnikovCoord) -> Result<(TwistWord, CurveClass)> {
    let u = untwist(d)?;
    let target = CurveClass::of_terminal(&u.terminal).expect("untwisting ends in the reference set");
    Ok((u.word, target))
}

pub fn twists_conjugate(d1: &DynnikovCoord, d2: &DynnikovCoord) -> Result<bool> {
    Ok(classify(d1)? == classify(d2)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::actions::{apply_word, track_index, Generator::*};
    use crate::coords::curve_kind;
    use crate::error::Error;

    fn dc(a: i64, b: i64) -> DynnikovCoord {
        DynnikovCoord::new(a, b).unwrap()
    }

    fn essential(n: i64) -> impl Iterator<Item = DynnikovCoord> {
        (-n..=n)
            .flat_map(move |a| (-n..=n).filter_map(move |b| DynnikovCoord::new(a, b).ok()))
            .filter(|d| curve_kind(d).is_essential())
    }

    #[test]
    fn untwist_ten_three() {
        let u = untwist(&dc(10, 3)).unwrap();
        assert_eq!(u.word.letters(), &[Tc, Td, Tc, Td, Td]);
        assert_eq!(
            u.path,
            vec![dc(10, 3), dc(-7, -3), dc(4, 3), dc(-1, -3), dc(-1, -1), dc(0, 1)]
        );
        assert_eq!(u.terminal, dc(0, 1));
    }

    #[test]
    fn untwist_three_ten() {
        let u = untwist(&dc(3, 10)).unwrap();
        assert_eq!(u.word.letters(), &[Tc, Tc, TdInv, TdInv]);
        assert_eq!(u.path, vec![dc(3, 10), dc(3, 4), dc(1, -2), dc(1, 0), dc(-1, 0)]);
    }

    #[test]
    fn untwist_reference_and_tie_break() {
        let u = untwist(&dc(0, -1)).unwrap();
        assert!(u.word.is_empty());
        assert_eq!(u.terminal, dc(0, -1));

        let u = untwist(&dc(1, 0)).unwrap();
        assert_eq!(u.word.letters(), &[TdInv]);
        assert_eq!(u.terminal, dc(-1, 0));
    }

    #[test]
    fn extra_twist_repeats_tc() {
        let hit = essential(30)
            .map(|d| untwist(&d).unwrap())
            .find(|u| {
                u.path.len() >= 3 && u.path[u.path.len() - 2].eq_pair(1, 0) && u.word.len() >= 2
                    && u.word.letters()[u.word.len() - 2] == Tc
            })
            .expect("some path reaches (1, 0) by t_c");
        assert_eq!(*hit.word.letters().last().unwrap(), Tc);
        assert_eq!(hit.terminal, dc(-1, 0));
    }

    #[test]
    fn rejects_multicurves() {
        assert!(matches!(untwist(&dc(2, 0)), Err(Error::NotEssential { .. })));
        assert!(matches!(classify(&dc(4, 2)), Err(Error::NotEssential { .. })));
        assert!(conjugation_length(&dc(0, 3)).is_err());
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify(&dc(10, 3)).unwrap(), CurveClass::C);
        assert_eq!(classify(&dc(3, 10)).unwrap(), CurveClass::E);
        assert_eq!(classify(&dc(0, -1)).unwrap(), CurveClass::D);
        assert_eq!(classify(&dc(1, 0)).unwrap(), CurveClass::E);
    }

    #[test]
    fn length_examples() {
        assert_eq!(conjugation_length(&dc(10, 3)).unwrap(), BigInt::from(5));
        assert_eq!(conjugation_length(&dc(3, 10)).unwrap(), BigInt::from(4));
        assert_eq!(conjugation_length(&dc(0, 1)).unwrap(), BigInt::zero());
        assert_eq!(conjugation_length(&dc(1, 0)).unwrap(), BigInt::from(1));
    }

    #[test]
    fn conjugator_examples() {
        let (w, t) = conjugator(&dc(10, 3)).unwrap();
        assert_eq!((w.to_string().as_str(), t), ("tc td tc td td", CurveClass::C));
        let (w, t) = conjugator(&dc(0, 1)).unwrap();
        assert!(w.is_empty());
        assert_eq!(t, CurveClass::C);
        let (w, t) = conjugator(&dc(1, 0)).unwrap();
        assert_eq!((w.len(), t), (1, CurveClass::E));
    }

    #[test]
    fn conjugacy_examples() {
        assert!(twists_conjugate(&dc(10, 3), &dc(0, 1)).unwrap());
        assert!(!twists_conjugate(&dc(0, 1), &dc(0, -1)).unwrap());
        assert!(twists_conjugate(&dc(3, 10), &dc(1, 0)).unwrap());
    }

    #[test]
    fn certificates_and_lengths_agree() {
        for d in essential(40) {
            let u = untwist(&d).unwrap();
            let class = classify(&d).unwrap();
            assert_eq!(apply_word(&u.word, &d), u.terminal);
            assert_eq!(u.terminal, class.coord(), "{d:?}");
            assert_eq!(BigInt::from(u.word.len()), conjugation_length(&d).unwrap(), "{d:?}");
            assert!(u.word.is_freely_reduced(), "{d:?}: {}", u.word);
        }
    }

    #[test]
    fn track_index_never_grows() {
        for d in essential(40) {
            let u = untwist(&d).unwrap();
            let steps: Vec<_> = u
                .word
                .letters()
                .iter()
                .zip(&u.path)
                .map(|(&g, p)| (g, track_index(p, g.family())))
                .collect();
            for w in steps.windows(2) {
                let ((g0, n0), (g1, n1)) = (&w[0], &w[1]);
                assert!(n1 <= n0, "{d:?}: index grew {n0} -> {n1}");
                if g0 != g1 {
                    assert!(n1 < n0, "{d:?}: step type changed without decrease");
                }
            }
        }
    }

    #[test]
    fn class_is_invariant_under_generators() {
        for d in essential(30) {
            let class = classify(&d).unwrap();
            for g in Generator::ALL {
                assert_eq!(classify(&apply_twist(g, &d)).unwrap(), class);
            }
        }
    }
}
