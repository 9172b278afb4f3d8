use thiserror::Error;

/// Group axiom violated by a Cayley table or generator set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axiom {
    Closure,
    Identity,
    Inverse,
    Associativity,
}

impl std::fmt::Display for Axiom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Axiom::Closure => "closure",
            Axiom::Identity => "identity",
            Axiom::Inverse => "inverse",
            Axiom::Associativity => "associativity",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("level {target} is not a multiple of {level}")]
    LevelMismatch { level: u64, target: u64 },

    #[error("{k} is not coprime to {modulus}")]
    NotCoprime { k: i64, modulus: u64 },

    #[error("division by zero")]
    DivisionByZero,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("group axiom `{axiom}` fails: {detail}")]
    GroupAxiom { axiom: Axiom, detail: String },

    #[error("unknown group `{0}`")]
    UnknownGroup(String),

    #[error("group of order {order} exceeds the size cap {cap}")]
    TooLarge { order: usize, cap: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("characters belong to different groups")]
    GroupMismatch,

    #[error("virtual character has non-integral coordinates")]
    NonIntegral,

    #[error("class function is not in the rational span of the irreducible characters")]
    NotRational,

    #[error("character table computation failed: {0}")]
    CharacterTable(String),

    #[error("element {element} is not in Sigma_{q}")]
    NotAdmissible { element: usize, q: u64 },

    #[error("vector {0:?} is not in A_G")]
    NotInLattice(Vec<String>),

    #[error("wild input: {0}")]
    Wild(String),

    #[error("resolvend support is not contained in a cyclic subgroup")]
    NotCyclicSupport,

    #[error("resolvend is not invertible: {0}")]
    NotInvertible(String),

    #[error("tame relation fails: {0}")]
    TameRelation(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
