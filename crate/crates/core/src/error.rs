use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid Grassmannian shape r={r}, k={k}: both must be positive")]
    InvalidShape { r: usize, k: usize },

    #[error("invalid subset {subset:?} for Gr({r},{n}): need {r} strictly increasing entries in 1..={n}")]
    InvalidSubset {
        subset: Vec<usize>,
        r: usize,
        n: usize,
    },

    #[error("partition {parts:?} does not fit the {rows}x{cols} box")]
    PartitionOutOfBox {
        parts: Vec<usize>,
        rows: usize,
        cols: usize,
    },

    #[error("shape mismatch: Gr({0},{1}) vs Gr({2},{3})")]
    ShapeMismatch(usize, usize, usize, usize),

    #[error("subset {0:?} does not contain 1")]
    MissingOne(Vec<usize>),

    #[error("representation {parts:?} is not a valid SU({rank}) weight of level <= {level}")]
    InvalidRep {
        parts: Vec<usize>,
        rank: usize,
        level: usize,
    },

    #[error("U(1) exponent {exponent} is not congruent to |lambda| = {size} mod {rank}")]
    Congruence {
        exponent: usize,
        size: usize,
        rank: usize,
    },

    #[error("twisted invariant routes disagree for {query}: shift route gave {shift}, insertion route gave {insertion}")]
    RouteDisagreement {
        query: String,
        shift: String,
        insertion: String,
    },

    #[error("empty insertion list")]
    NoInsertions,

    #[error("genus must be at least {min}, got {got}")]
    Genus { min: usize, got: usize },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
