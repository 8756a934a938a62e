//! Finite quandles: tables, homomorphisms, constructions, second cohomology
//! with cyclic coefficients, enveloping groups and knot colorings.

pub mod cocycle;
pub mod cohomology;
pub mod constructions;
pub mod corpus;
pub mod error;
pub mod group;
pub mod groups;
pub mod io;
pub mod iso;
pub mod knots;
pub mod perm;
pub mod pipeline;
pub mod quandle;
pub mod zmod;

pub use cocycle::Cocycle2;
pub use cohomology::{second_cohomology, CohomologyGroup};
pub use error::{Error, Result};
pub use group::{FiniteGroup, GroupAutomorphism};
pub use iso::{are_isomorphic, isomorphism};
pub use knots::{BraidKnot, GroupRingElt, Tangle};
pub use perm::{PermGroup, Permutation};
pub use quandle::{Quandle, QuandleMap};
