//! Finite quandles given by Cayley tables, and maps between them.

use std::collections::HashMap;

use crate::error::{Axiom, Error, Result};
use crate::perm::{orbit, PermGroup, Permutation};

/// A finite quandle. `table[a][b]` is `a * b` (row = left argument).
///
/// Elements are `0..order`. Construction validates all three axioms, so a
/// `Quandle` value is always a genuine quandle.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Quandle {
    n: usize,
    table: Vec<usize>,
    // rdiv[c * n + b] = the unique a with a * b = c
    rdiv: Vec<usize>,
}

impl std::fmt::Debug for Quandle {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Quandle")
            .field("order", &self.n)
            .field("rows", &self.rows())
            .finish()
    }
}

impl Quandle {
    /// Validates a table given as rows.
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self> {
        let n = rows.len();
        if let Some((i, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != n) {
            return Err(Error::ShapeMismatch {
                expected: format!("{n} entries in row {i}"),
                found: r.len().to_string(),
            });
        }
        Quandle::from_flat(n, rows.iter().flatten().copied().collect())
    }

    /// Validates a row-major `n*n` table.
    pub fn from_flat(n: usize, table: Vec<usize>) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyQuandle);
        }
        if table.len() != n * n {
            return Err(Error::ShapeMismatch {
                expected: format!("{} entries", n * n),
                found: table.len().to_string(),
            });
        }
        for (i, &v) in table.iter().enumerate() {
            if v >= n {
                return Err(Error::EntryOutOfRange {
                    row: i / n,
                    col: i % n,
                    value: v,
                    order: n,
                });
            }
        }
        for a in 0..n {
            if table[a * n + a] != a {
                return Err(Error::AxiomViolation {
                    axiom: Axiom::Idempotency,
                    witness: (a, a, a),
                });
            }
        }
        let mut rdiv = vec![usize::MAX; n * n];
        for b in 0..n {
            for a in 0..n {
                let c = table[a * n + b];
                let slot = &mut rdiv[c * n + b];
                if *slot != usize::MAX {
                    return Err(Error::AxiomViolation {
                        axiom: Axiom::Invertibility,
                        witness: (*slot, a, b),
                    });
                }
                *slot = a;
            }
        }
        let op = |x: usize, y: usize| table[x * n + y];
        for a in 0..n {
            for b in 0..n {
                let ab = op(a, b);
                for c in 0..n {
                    if op(ab, c) != op(op(a, c), op(b, c)) {
                        return Err(Error::AxiomViolation {
                            axiom: Axiom::Distributivity,
                            witness: (a, b, c),
                        });
                    }
                }
            }
        }
        Ok(Quandle { n, table, rdiv })
    }

    /// Table computed from an operation already known to satisfy the axioms.
    pub(crate) fn from_fn_unchecked(n: usize, op: impl Fn(usize, usize) -> usize) -> Self {
        let mut table = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                table.push(op(a, b));
            }
        }
        let mut rdiv = vec![0; n * n];
        for b in 0..n {
            for a in 0..n {
                rdiv[table[a * n + b] * n + b] = a;
            }
        }
        let q = Quandle { n, table, rdiv };
        debug_assert!(Quandle::from_flat(n, q.table.clone()).is_ok());
        q
    }

    /// The trivial quandle of order `n`: `a * b = a`.
    pub fn trivial(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyQuandle);
        }
        Ok(Quandle::from_fn_unchecked(n, |a, _| a))
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b]
    }

    /// The unique `a` with `a * b = c`.
    #[inline]
    pub fn rdiv(&self, c: usize, b: usize) -> usize {
        self.rdiv[c * self.n + b]
    }

    pub fn flat_table(&self) -> &[usize] {
        &self.table
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    fn check(&self, a: usize) -> Result<()> {
        if a >= self.n {
            Err(Error::ElementOutOfRange {
                element: a,
                order: self.n,
            })
        } else {
            Ok(())
        }
    }

    /// `R_a : x -> x * a`.
    pub fn right_translation(&self, a: usize) -> Result<Permutation> {
        self.check(a)?;
        Ok(self.translation(a))
    }

    pub(crate) fn translation(&self, a: usize) -> Permutation {
        Permutation::from_images_unchecked((0..self.n).map(|x| self.op(x, a)).collect())
    }

    pub fn translations(&self) -> Vec<Permutation> {
        (0..self.n).map(|a| self.translation(a)).collect()
    }

    /// `Inn(Q)`, the group generated by all right translations.
    pub fn inner_group(&self, cap: usize) -> Result<PermGroup> {
        PermGroup::generate(self.n, self.translations(), cap)
    }

    /// Orbits of `Inn(Q)` on the elements, each in discovery order.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let gens = self.translations();
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for x in 0..self.n {
            if !seen[x] {
                let o = orbit(x, &gens);
                for &y in &o {
                    seen[y] = true;
                }
                out.push(o);
            }
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        orbit(0, &self.translations()).len() == self.n
    }

    pub fn is_faithful(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        (0..self.n).all(|a| seen.insert(self.column(a)))
    }

    fn column(&self, a: usize) -> Vec<usize> {
        (0..self.n).map(|x| self.op(x, a)).collect()
    }

    /// The inner representation `inn: Q -> inn(Q)`, `a -> R_a`.
    ///
    /// Image elements are the distinct translations in order of first
    /// occurrence; the operation is `R_a * R_b = R_b^-1 R_a R_b`.
    pub fn inn_image(&self) -> (Quandle, QuandleMap) {
        let translations = self.translations();
        let mut distinct: Vec<Permutation> = Vec::new();
        let mut position: HashMap<Permutation, usize> = HashMap::new();
        let mut images = Vec::with_capacity(self.n);
        for r in &translations {
            let k = *position.entry(r.clone()).or_insert_with(|| {
                distinct.push(r.clone());
                distinct.len() - 1
            });
            images.push(k);
        }
        let k = distinct.len();
        let mut table = Vec::with_capacity(k * k);
        for a in &distinct {
            for b in &distinct {
                table.push(position[&a.conjugate_by(b)]);
            }
        }
        let image = Quandle::from_flat(k, table).expect("conjugation-closed set of translations");
        let map = QuandleMap {
            source: self.clone(),
            target: image.clone(),
            images,
        };
        (image, map)
    }

    /// Componentwise product; `(a, b)` has index `a * |other| + b`.
    pub fn product(&self, other: &Quandle) -> Quandle {
        let m = other.n;
        Quandle::from_fn_unchecked(self.n * m, |x, y| {
            self.op(x / m, y / m) * m + other.op(x % m, y % m)
        })
    }

    /// The quandle transported along a relabeling `perm` (new label of `a` is `perm[a]`).
    pub fn relabel(&self, perm: &Permutation) -> Result<Quandle> {
        if perm.degree() != self.n {
            return Err(Error::ShapeMismatch {
                expected: format!("permutation of degree {}", self.n),
                found: perm.degree().to_string(),
            });
        }
        let inv = perm.inverse();
        Ok(Quandle::from_fn_unchecked(self.n, |a, b| {
            perm.apply(self.op(inv.apply(a), inv.apply(b)))
        }))
    }
}

/// A map of finite quandles, stored by its images.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuandleMap {
    source: Quandle,
    target: Quandle,
    images: Vec<usize>,
}

/// Fiber data of an epimorphism.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct EpimorphismIndex {
    pub index: usize,
    pub uniform_fibers: bool,
}

impl QuandleMap {
    pub fn new(source: Quandle, target: Quandle, images: Vec<usize>) -> Result<Self> {
        if images.len() != source.order() {
            return Err(Error::ShapeMismatch {
                expected: format!("{} images", source.order()),
                found: images.len().to_string(),
            });
        }
        if let Some(&v) = images.iter().find(|&&v| v >= target.order()) {
            return Err(Error::ElementOutOfRange {
                element: v,
                order: target.order(),
            });
        }
        Ok(QuandleMap {
            source,
            target,
            images,
        })
    }

    pub fn identity(q: &Quandle) -> Self {
        QuandleMap {
            source: q.clone(),
            target: q.clone(),
            images: (0..q.order()).collect(),
        }
    }

    pub fn source(&self) -> &Quandle {
        &self.source
    }

    pub fn target(&self) -> &Quandle {
        &self.target
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, a: usize) -> usize {
        self.images[a]
    }

    /// First pair `(a, b)` with `f(a*b) != f(a)*f(b)`, if any.
    pub fn homomorphism_failure(&self) -> Option<(usize, usize)> {
        let n = self.source.order();
        for a in 0..n {
            for b in 0..n {
                let lhs = self.images[self.source.op(a, b)];
                let rhs = self.target.op(self.images[a], self.images[b]);
                if lhs != rhs {
                    return Some((a, b));
                }
            }
        }
        None
    }

    pub fn is_homomorphism(&self) -> bool {
        self.homomorphism_failure().is_none()
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = vec![false; self.target.order()];
        for &v in &self.images {
            hit[v] = true;
        }
        hit.into_iter().all(|h| h)
    }

    pub fn is_bijective(&self) -> bool {
        self.source.order() == self.target.order() && self.is_surjective()
    }

    pub fn ensure_epimorphism(&self) -> Result<()> {
        if let Some((a, b)) = self.homomorphism_failure() {
            return Err(Error::NotEpimorphism(format!(
                "f({a}*{b}) != f({a})*f({b})"
            )));
        }
        if !self.is_surjective() {
            return Err(Error::NotEpimorphism("not surjective".into()));
        }
        Ok(())
    }

    /// Fibers `f^-1(x)` for every target element `x`, each sorted.
    pub fn fibers(&self) -> Vec<Vec<usize>> {
        let mut fibers = vec![Vec::new(); self.target.order()];
        for (a, &x) in self.images.iter().enumerate() {
            fibers[x].push(a);
        }
        fibers
    }

    /// A witness `(a, x, y)` with `f(x) = f(y)` but `a*x != a*y`, if any.
    pub fn covering_failure(&self) -> Option<(usize, usize, usize)> {
        for fiber in self.fibers() {
            let Some((&x, rest)) = fiber.split_first() else {
                continue;
            };
            for &y in rest {
                for a in 0..self.source.order() {
                    if self.source.op(a, x) != self.source.op(a, y) {
                        return Some((a, x, y));
                    }
                }
            }
        }
        None
    }

    /// True iff `f(x) = f(y)` implies `a*x = a*y` for all `a`.
    pub fn is_covering(&self) -> Result<bool> {
        self.ensure_epimorphism()?;
        Ok(self.covering_failure().is_none())
    }

    pub fn index(&self) -> Result<EpimorphismIndex> {
        self.ensure_epimorphism()?;
        let (s, t) = (self.source.order(), self.target.order());
        if s % t != 0 {
            return Err(Error::NonIntegralIndex {
                source_order: s,
                target_order: t,
            });
        }
        let index = s / t;
        let uniform_fibers = self.fibers().iter().all(|f| f.len() == index);
        Ok(EpimorphismIndex {
            index,
            uniform_fibers,
        })
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &QuandleMap) -> Result<QuandleMap> {
        if self.target != next.source {
            return Err(Error::ShapeMismatch {
                expected: "matching intermediate quandle".into(),
                found: "different quandles".into(),
            });
        }
        Ok(QuandleMap {
            source: self.source.clone(),
            target: next.target.clone(),
            images: self.images.iter().map(|&a| next.images[a]).collect(),
        })
    }

    /// The product map `(a, b) -> (f(a), g(b))` between product quandles.
    pub fn product(&self, other: &QuandleMap) -> QuandleMap {
        let m = other.source.order();
        let mt = other.target.order();
        let images = (0..self.source.order() * m)
            .map(|x| self.images[x / m] * mt + other.images[x % m])
            .collect();
        QuandleMap {
            source: self.source.product(&other.source),
            target: self.target.product(&other.target),
            images,
        }
    }
}
