//! Finite presentations, coset enumeration and the conjugation-quandle test.

mod coset;
mod presentation;
mod envelope;

pub use coset::{todd_coxeter, CosetTable, DEFAULT_MAX_COSETS};
pub use presentation::{cyclically_reduce, enveloping_presentation, Letter, Presentation, Word};
pub use envelope::{
    inn_preimage, is_conjugation_quandle, rho_injective, FiniteEnvelope, Verdict, ConjugationReport,
};
