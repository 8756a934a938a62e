use std::fmt;

use thiserror::Error;

/// Which quandle axiom a table violates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Axiom {
    Idempotency,
    Invertibility,
    Distributivity,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axiom::Idempotency => "idempotency",
            Axiom::Invertibility => "invertibility",
            Axiom::Distributivity => "distributivity",
        })
    }
}

/// Where a function on pairs fails to be a quandle 2-cocycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum CocycleWitness {
    /// `phi(x, x) != 0`.
    Diagonal { x: usize },
    /// The cocycle identity fails on `(x, y, z)`.
    Identity { x: usize, y: usize, z: usize },
}

impl fmt::Display for CocycleWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CocycleWitness::Diagonal { x } => write!(f, "nonzero diagonal value at x={x}"),
            CocycleWitness::Identity { x, y, z } => {
                write!(f, "cocycle identity fails at (x, y, z) = ({x}, {y}, {z})")
            }
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("a quandle must have at least one element")]
    EmptyQuandle,

    #[error("table has the wrong shape: expected {expected}, found {found}")]
    ShapeMismatch { expected: String, found: String },

    #[error("entry {value} at row {row}, column {col} is out of range 0..{order}")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },

    /// For idempotency the witness is `(a, a, a)`; for invertibility it is
    /// `(a, c, b)` with `a != c` and `a*b == c*b`; for distributivity it is
    /// the triple `(a, b, c)` on which `(a*b)*c != (a*c)*(b*c)`.
    #[error("{axiom} axiom fails, witness ({}, {}, {})", witness.0, witness.1, witness.2)]
    AxiomViolation {
        axiom: Axiom,
        witness: (usize, usize, usize),
    },

    #[error("element {element} out of range for a structure of order {order}")]
    ElementOutOfRange { element: usize, order: usize },

    #[error("not a permutation: {0}")]
    NotAPermutation(String),

    #[error("group has more than {cap} elements")]
    GroupTooLarge { cap: usize },

    #[error("map is not a quandle epimorphism: {0}")]
    NotEpimorphism(String),

    #[error("map is not a covering: {0}")]
    NotACovering(String),

    #[error("source order {source_order} is not a multiple of target order {target_order}")]
    NonIntegralIndex {
        source_order: usize,
        target_order: usize,
    },

    #[error("invalid group table: {0}")]
    InvalidGroup(String),

    #[error("not a group automorphism: {0}")]
    NotAnAutomorphism(String),

    #[error("{t} is not a unit modulo {n}")]
    NotAUnit { t: u64, n: u64 },

    #[error("modulus must be at least {min}, got {m}")]
    BadModulus { m: u64, min: u64 },

    #[error("not a 2-cocycle: {0}")]
    NotACocycle(CocycleWitness),

    #[error("{d} does not divide the modulus {n}")]
    DNotDividesModulus { d: u64, n: u64 },

    #[error("braid generator {generator} is invalid on {strands} strands")]
    BadGenerator { generator: i32, strands: usize },

    #[error("braid closure of `{name}` has {components} components, not 1")]
    NotAKnot { name: String, components: usize },

    #[error("coloring enumeration would visit {assignments} assignments (cap {cap})")]
    EnumerationTooLarge { assignments: u128, cap: u128 },

    #[error("fiber element {element} does not lie over the color {expected}")]
    FiberMismatch { element: usize, expected: usize },

    #[error("expected a unique lift, found {found}")]
    LiftNotUnique { found: usize },

    #[error("coset enumeration exceeded {max_cosets} cosets")]
    Capped { max_cosets: usize },

    #[error("presentation is malformed: {0}")]
    BadPresentation(String),

    #[error("map has index {index}, expected 2")]
    NotIndex2 { index: usize },

    #[error(
        "extension law fails: level {level_a} over {x} times level {level_b} over {z} \
         lands on level {found}, expected {expected}"
    )]
    ExtensionLawFails {
        x: usize,
        z: usize,
        level_a: u64,
        level_b: u64,
        expected: u64,
        found: u64,
    },

    #[error("theorem violated: {0}")]
    TheoremViolation(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
