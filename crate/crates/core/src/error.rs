use num_bigint::BigInt;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("the zero vector does not label a curve")]
    ZeroVector,

    #[error("{m} and {n} are not coprime")]
    NotCoprime { m: BigInt, n: BigInt },

    #[error("({a}, {b}) is a multicurve of multiplicity {multiplicity}, not an essential curve")]
    NotEssential {
        a: BigInt,
        b: BigInt,
        multiplicity: BigInt,
    },

    #[error("matrix has determinant {det}, expected 1")]
    NotUnimodular { det: BigInt },

    #[error("({a}, {b}) is fixed by the twist and lies on no track")]
    FixedPoint { a: BigInt, b: BigInt },

    #[error("track index must be positive")]
    InvalidTrackIndex,

    #[error("invalid seed vertex: {0}")]
    InvalidSeed(String),

    #[error("seed set is empty")]
    EmptySeeds,

    #[error("bound must be at least 1")]
    InvalidBound,
}
