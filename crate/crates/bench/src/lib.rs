//! Inputs shared by the benchmarks.

use forge_core::constructions::conjugation_quandle;
use forge_core::group::lex_rank;
use forge_core::{FiniteGroup, Quandle};

/// Conjugacy class of the permutation with the given images in `Sym(n)`.
pub fn symmetric_class(images: &[usize]) -> Quandle {
    let g = FiniteGroup::symmetric(images.len()).expect("degree at most 5");
    let x = lex_rank(images).expect("a permutation");
    conjugation_quandle(&g, x).expect("element in range").0
}

/// Transpositions in `Sym(4)`, order 6.
pub fn transpositions() -> Quandle {
    symmetric_class(&[1, 0, 2, 3])
}

/// 3-cycles in `Sym(4)`, order 8.
pub fn three_cycles() -> Quandle {
    symmetric_class(&[1, 2, 0, 3])
}

/// Transpositions in `Sym(5)`, order 10.
pub fn transpositions5() -> Quandle {
    symmetric_class(&[1, 0, 2, 3, 4])
}
