//! Quandles this crate can build by itself, used for property sweeps.

use crate::cocycle::Cocycle2;
use crate::cohomology::second_cohomology;
use crate::constructions::{alexander, conjugation_quandle, dihedral, galex};
use crate::error::Result;
use crate::group::{lex_rank, FiniteGroup, GroupAutomorphism};
use crate::perm::gcd;
use crate::quandle::Quandle;

#[derive(Debug, Clone)]
pub struct CorpusQuandle {
    pub name: String,
    pub quandle: Quandle,
}

fn entry(name: String, quandle: Quandle) -> CorpusQuandle {
    CorpusQuandle { name, quandle }
}

/// Representatives of the non-identity classes of `Sym(n)` by cycle type.
fn class_representatives(n: usize) -> Vec<(String, Vec<usize>)> {
    let mut reps = vec![("transpositions".to_string(), swap_first(n))];
    if n >= 3 {
        reps.push(("3-cycles".into(), cycle_first(n, 3)));
    }
    if n >= 4 {
        let mut v: Vec<usize> = (0..n).collect();
        v.swap(0, 1);
        v.swap(2, 3);
        reps.push(("double transpositions".into(), v));
        reps.push(("4-cycles".into(), cycle_first(n, 4)));
    }
    reps
}

fn swap_first(n: usize) -> Vec<usize> {
    let mut v: Vec<usize> = (0..n).collect();
    v.swap(0, 1);
    v
}

fn cycle_first(n: usize, k: usize) -> Vec<usize> {
    (0..n).map(|i| if i < k { (i + 1) % k } else { i }).collect()
}

/// Dihedral and Alexander quandles up to order 9, trivial quandles up to
/// order 4, conjugacy classes of `Sym(3)`, `Sym(4)` and `Alt(4)`, and
/// generalized Alexander quandles of `Sym(3)` and `Sym(4)` twisted by
/// conjugation.
pub fn quandles() -> Vec<CorpusQuandle> {
    let mut out = Vec::new();
    for n in 1..=4 {
        out.push(entry(format!("trivial({n})"), Quandle::trivial(n).expect("n >= 1")));
    }
    for n in 3..=9 {
        out.push(entry(format!("dihedral({n})"), dihedral(n).expect("n >= 1")));
    }
    for n in 3..=9 {
        for t in 2..n as u64 - 1 {
            if gcd(t as usize, n) == 1 {
                out.push(entry(format!("alexander({n}, {t})"), alexander(n, t).expect("unit")));
            }
        }
    }
    for n in [3, 4] {
        let g = FiniteGroup::symmetric(n).expect("n <= 5");
        for (label, images) in class_representatives(n) {
            let x = lex_rank(&images).expect("permutation");
            let (q, _) = conjugation_quandle(&g, x).expect("element in range");
            out.push(entry(format!("Sym({n}) {label}"), q));
        }
    }
    let (a4, elements) = FiniteGroup::alternating_with_elements(4).expect("n <= 5");
    let three_cycle = elements
        .iter()
        .position(|p| p.images() == cycle_first(4, 3).as_slice())
        .expect("Alt(4) contains 3-cycles");
    let (tetra, _) = conjugation_quandle(&a4, three_cycle).expect("element in range");
    out.push(entry("Alt(4) 3-cycles".into(), tetra));
    for n in [3, 4] {
        let g = FiniteGroup::symmetric(n).expect("n <= 5");
        for (label, images) in class_representatives(n).into_iter().take(2) {
            let x = lex_rank(&images).expect("permutation");
            let f = GroupAutomorphism::conjugation(&g, x).expect("element in range");
            out.push(entry(format!("GAlex(Sym({n}), {label})"), galex(&g, &f)));
        }
    }
    out
}

/// Corpus quandles of order at most `max_order`.
pub fn quandles_up_to(max_order: usize) -> Vec<CorpusQuandle> {
    quandles()
        .into_iter()
        .filter(|c| c.quandle.order() <= max_order)
        .collect()
}

#[derive(Debug, Clone)]
pub struct CorpusExtension {
    pub base_name: String,
    pub base: Quandle,
    pub cocycle: Cocycle2,
    /// `"zero"` or the index of the cohomology representative.
    pub label: String,
}

/// For every corpus quandle of order at most `max_order` and every modulus,
/// the zero cocycle and each representative of a generator of `H^2`.
pub fn extensions(max_order: usize, moduli: &[u64]) -> Result<Vec<CorpusExtension>> {
    let mut out = Vec::new();
    for c in quandles_up_to(max_order) {
        for &m in moduli {
            out.push(CorpusExtension {
                base_name: c.name.clone(),
                base: c.quandle.clone(),
                cocycle: Cocycle2::zero(c.quandle.order(), m)?,
                label: "zero".into(),
            });
            let h = second_cohomology(&c.quandle, m)?;
            for (i, phi) in h.representatives().iter().enumerate() {
                out.push(CorpusExtension {
                    base_name: c.name.clone(),
                    base: c.quandle.clone(),
                    cocycle: phi.clone(),
                    label: format!("generator {i} of order {}", h.invariant_factors()[i]),
                });
            }
        }
    }
    Ok(out)
}
