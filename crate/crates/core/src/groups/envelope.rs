use serde::Serialize;

use crate::constructions::galex;
use crate::error::Result;
use crate::group::{FiniteGroup, GroupAutomorphism};
use crate::iso::are_isomorphic;
use crate::perm::Permutation;
use crate::quandle::Quandle;

use super::coset::{todd_coxeter, CosetTable};
use super::presentation::enveloping_presentation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Yes,
    No,
    NotApplicable,
}

/// The finite enveloping group of a quandle together with the images of the
/// generators in its regular action.
#[derive(Debug, Clone)]
pub struct FiniteEnvelope {
    table: CosetTable,
    images: Vec<Permutation>,
}

impl FiniteEnvelope {
    pub fn compute(q: &Quandle, max_cosets: usize) -> Result<Self> {
        let table = todd_coxeter(&enveloping_presentation(q, true), max_cosets)?;
        let images = (0..q.order()).map(|i| table.generator_permutation(i)).collect();
        Ok(FiniteEnvelope { table, images })
    }

    pub fn order(&self) -> usize {
        self.table.order()
    }

    pub fn table(&self) -> &CosetTable {
        &self.table
    }

    /// `rho(x_i)` as a permutation of cosets.
    pub fn image(&self, i: usize) -> &Permutation {
        &self.images[i]
    }

    /// First pair `i < j` with `rho(x_i) = rho(x_j)`.
    pub fn collision(&self) -> Option<(usize, usize)> {
        let n = self.images.len();
        let mut sorted: Vec<usize> = (0..n).collect();
        sorted.sort_by(|&a, &b| self.images[a].images().cmp(self.images[b].images()));
        let mut best: Option<(usize, usize)> = None;
        for w in sorted.windows(2) {
            if self.images[w[0]] == self.images[w[1]] {
                let pair = (w[0].min(w[1]), w[0].max(w[1]));
                best = Some(best.map_or(pair, |b| b.min(pair)));
            }
        }
        best
    }

    pub fn is_injective(&self) -> bool {
        self.collision().is_none()
    }

    /// The group as a multiplication table, with coset `c` as element `c`.
    /// The image of `x_i` is the coset `x_i` reaches from the identity.
    pub fn group(&self) -> (FiniteGroup, Vec<usize>) {
        let g = self.table.to_group();
        let labels = (0..self.images.len()).map(|i| self.images[i].apply(0)).collect();
        (g, labels)
    }
}

/// Whether the natural map into the finite enveloping group is injective.
pub fn rho_injective(q: &Quandle, max_cosets: usize) -> Result<bool> {
    Ok(FiniteEnvelope::compute(q, max_cosets)?.is_injective())
}

#[derive(Debug, Clone, Serialize)]
pub struct ConjugationReport {
    pub verdict: Verdict,
    /// Order of the finite enveloping group; absent when not computed.
    pub group_order: Option<usize>,
    pub collision: Option<(usize, usize)>,
}

/// Decides whether a connected quandle is a conjugation quandle by testing
/// injectivity into its finite enveloping group. Disconnected quandles are
/// outside the criterion.
pub fn is_conjugation_quandle(q: &Quandle, max_cosets: usize) -> Result<ConjugationReport> {
    if !q.is_connected() {
        return Ok(ConjugationReport {
            verdict: Verdict::NotApplicable,
            group_order: None,
            collision: None,
        });
    }
    let env = FiniteEnvelope::compute(q, max_cosets)?;
    let collision = env.collision();
    Ok(ConjugationReport {
        verdict: if collision.is_none() {
            Verdict::Yes
        } else {
            Verdict::No
        },
        group_order: Some(env.order()),
        collision,
    })
}

/// For a connected quandle embedded in its finite enveloping group `G`,
/// builds `Y = GAlex(G, conjugation by rho(x_0))` and checks `inn(Y) = Q` up
/// to isomorphism. Returns `None` when the group exceeds `max_group_order`.
pub fn inn_preimage(env: &FiniteEnvelope, q: &Quandle, max_group_order: usize) -> Option<(Quandle, bool)> {
    if env.order() > max_group_order || q.order() == 0 {
        return None;
    }
    let (g, labels) = env.group();
    let f = GroupAutomorphism::conjugation(&g, labels[0]).ok()?;
    let y = galex(&g, &f);
    let found = are_isomorphic(&y.inn_image().0, q);
    Some((y, found))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{alexander, dihedral};
    use crate::groups::coset::DEFAULT_MAX_COSETS;

    #[test]
    fn dihedral_three() {
        let d3 = dihedral(3).unwrap();
        let env = FiniteEnvelope::compute(&d3, DEFAULT_MAX_COSETS).unwrap();
        assert!(env.table().verify(&enveloping_presentation(&d3, true)));
        assert_eq!(env.order(), 6);
        assert!(env.is_injective());
        let r = is_conjugation_quandle(&d3, DEFAULT_MAX_COSETS).unwrap();
        assert_eq!(r.verdict, Verdict::Yes);
        assert_eq!(r.group_order, Some(6));
    }

    #[test]
    fn conjugation_implements_operation() {
        let q = alexander(5, 2).unwrap();
        let env = FiniteEnvelope::compute(&q, DEFAULT_MAX_COSETS).unwrap();
        for i in 0..5 {
            for j in 0..5 {
                assert_eq!(&env.image(i).conjugate_by(env.image(j)), env.image(q.op(i, j)));
            }
        }
    }

    #[test]
    fn small_cases() {
        let one = Quandle::trivial(1).unwrap();
        assert!(rho_injective(&one, 10).unwrap());
        let d4 = dihedral(4).unwrap();
        let r = is_conjugation_quandle(&d4, DEFAULT_MAX_COSETS).unwrap();
        assert_eq!(r.verdict, Verdict::NotApplicable);
        // Trivial quandles have identity translations: every x_i collapses.
        let t2 = Quandle::trivial(2).unwrap();
        let env = FiniteEnvelope::compute(&t2, 10).unwrap();
        assert_eq!(env.order(), 1);
        assert_eq!(env.collision(), Some((0, 1)));
    }

    #[test]
    fn preimage_of_faithful_quandle() {
        let d5 = dihedral(5).unwrap();
        let env = FiniteEnvelope::compute(&d5, DEFAULT_MAX_COSETS).unwrap();
        let (y, found) = inn_preimage(&env, &d5, 1000).unwrap();
        assert_eq!(y.order(), env.order());
        assert!(found);
    }
}
