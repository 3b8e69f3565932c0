//! Exact-integer toolkit for Dehn twists on the 3-punctured disk.
//!
//! Curves are labelled by Dynnikov coordinates `(a, b)`, or by the homology
//! class `±(p, q)` of their lift to the branched double-cover torus. The crate
//! provides:
//!
//! * [`coords`]: the torus/Dynnikov coordinate change and curve kinds,
//! * [`actions`]: braid update rules, the twists `t_c`, `t_d` and their tracks,
//! * [`ecf`]: even continued fractions, transvection factorizations and
//!   level-2 congruence subgroups,
//! * [`untwist`]: the minimal untwisting algorithm and conjugacy classes,
//! * [`oracle`]: brute-force Cayley-graph searches used as ground truth.
//!
//! All arithmetic uses [`num_bigint::BigInt`]; nothing here can overflow.

pub mod actions;
pub mod coords;
pub mod ecf;
mod error;
pub mod oracle;
pub mod untwist;

pub use actions::{apply_braid, apply_twist, apply_word, track_of, twist_via_jumps};
pub use actions::{BraidLetter, Family, Generator, Track, TwistWord};
pub use coords::{curve_kind, phi, phi_inverse, CurveKind, DynnikovCoord, Kind, TorusCoord};
pub use ecf::{ecf_expand, ecf_expand_limited, ecf_length, factorize, in_gamma2, in_gamma2_bar, EcfExpansion, Mat2};
pub use error::{Error, Result};
pub use untwist::{
    classify, conjugation_length, conjugator, twists_conjugate, untwist, CurveClass, Untwisting,
};

pub use num_bigint::BigInt;
