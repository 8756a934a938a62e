//! Todd–Coxeter coset enumeration over the trivial subgroup (HLT strategy
//! with coincidence processing).

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::perm::Permutation;

use super::presentation::{Letter, Presentation, Word};

pub const DEFAULT_MAX_COSETS: usize = 1_000_000;

const NONE: usize = usize::MAX;

/// A complete coset table for the trivial subgroup. Coset 0 is the identity;
/// the remaining cosets are numbered by discovery order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetTable {
    order: usize,
    generators: usize,
    table: Vec<usize>,
}

struct Enumerator {
    cols: usize,
    max_cosets: usize,
    table: Vec<usize>,
    parent: Vec<usize>,
    live: usize,
    queue: Vec<usize>,
}

#[inline]
fn inverse_column(col: usize) -> usize {
    col ^ 1
}

impl Enumerator {
    fn new(generators: usize, max_cosets: usize) -> Self {
        let cols = 2 * generators;
        Enumerator {
            cols,
            max_cosets,
            table: vec![NONE; cols],
            parent: vec![0],
            live: 1,
            queue: Vec::new(),
        }
    }

    #[inline]
    fn get(&self, c: usize, col: usize) -> usize {
        self.table[c * self.cols + col]
    }

    #[inline]
    fn set(&mut self, c: usize, col: usize, v: usize) {
        self.table[c * self.cols + col] = v;
    }

    fn allocated(&self) -> usize {
        self.parent.len()
    }

    fn is_live(&self, c: usize) -> bool {
        self.parent[c] == c
    }

    fn define(&mut self, c: usize, col: usize) -> Result<()> {
        if self.live >= self.max_cosets {
            return Err(Error::Capped {
                max_cosets: self.max_cosets,
            });
        }
        let d = self.allocated();
        self.parent.push(d);
        self.table.extend(std::iter::repeat(NONE).take(self.cols));
        self.live += 1;
        self.set(c, col, d);
        self.set(d, inverse_column(col), c);
        Ok(())
    }

    fn rep(&mut self, c: usize) -> usize {
        let mut root = c;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut c = c;
        while self.parent[c] != root {
            let next = self.parent[c];
            self.parent[c] = root;
            c = next;
        }
        root
    }

    fn merge(&mut self, a: usize, b: usize) {
        let (a, b) = (self.rep(a), self.rep(b));
        if a != b {
            let (lo, hi) = if a < b { (a, b) } else { (b, a) };
            self.parent[hi] = lo;
            self.live -= 1;
            self.queue.push(hi);
        }
    }

    fn coincidence(&mut self, a: usize, b: usize) {
        self.queue.clear();
        self.merge(a, b);
        let mut i = 0;
        while i < self.queue.len() {
            let dead = self.queue[i];
            i += 1;
            for col in 0..self.cols {
                let target = self.get(dead, col);
                if target == NONE {
                    continue;
                }
                let inv = inverse_column(col);
                self.set(target, inv, NONE);
                let mu = self.rep(dead);
                let nu = self.rep(target);
                let mu_col = self.get(mu, col);
                if mu_col != NONE {
                    self.merge(nu, mu_col);
                } else {
                    let nu_inv = self.get(nu, inv);
                    if nu_inv != NONE {
                        self.merge(mu, nu_inv);
                    } else {
                        self.set(mu, col, nu);
                        self.set(nu, inv, mu);
                    }
                }
            }
        }
    }

    /// Traces `word` from `start` forwards and backwards, filling in
    /// definitions until the relator closes.
    fn scan_and_fill(&mut self, start: usize, word: &[usize]) -> Result<()> {
        let mut f = start;
        let mut b = start;
        let mut i = 0;
        let mut j = word.len();
        loop {
            while i < j {
                let next = self.get(f, word[i]);
                if next == NONE {
                    break;
                }
                f = next;
                i += 1;
            }
            if i == j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j > i {
                let prev = self.get(b, inverse_column(word[j - 1]));
                if prev == NONE {
                    break;
                }
                b = prev;
                j -= 1;
            }
            if j == i {
                self.coincidence(f, b);
                return Ok(());
            }
            if j == i + 1 {
                self.set(f, word[i], b);
                self.set(b, inverse_column(word[i]), f);
                return Ok(());
            }
            self.define(f, word[i])?;
        }
    }

    /// Renumbers live cosets in increasing order. Returns the new index of
    /// the first live coset at or after `from`.
    fn compact(&mut self, from: usize) -> usize {
        let n = self.allocated();
        let mut index = vec![NONE; n];
        let mut next = 0;
        let mut resume = NONE;
        for c in 0..n {
            if c >= from && resume == NONE && self.is_live(c) {
                resume = next;
            }
            if self.is_live(c) {
                index[c] = next;
                next += 1;
            }
        }
        let mut table = Vec::with_capacity(next * self.cols);
        for c in 0..n {
            if index[c] == NONE {
                continue;
            }
            for col in 0..self.cols {
                let t = self.get(c, col);
                table.push(if t == NONE { NONE } else { index[self.rep(t)] });
            }
        }
        self.table = table;
        self.parent = (0..next).collect();
        self.live = next;
        if resume == NONE {
            next
        } else {
            resume
        }
    }

    fn run(&mut self, relators: &[Vec<usize>]) -> Result<()> {
        let mut c = 0;
        while c < self.allocated() {
            if self.is_live(c) {
                for r in relators {
                    self.scan_and_fill(c, r)?;
                    if !self.is_live(c) {
                        break;
                    }
                }
                if self.is_live(c) {
                    for col in 0..self.cols {
                        if self.get(c, col) == NONE {
                            self.define(c, col)?;
                        }
                    }
                }
            }
            c += 1;
            let dead = self.allocated() - self.live;
            if dead > 1024 && dead > self.live {
                c = self.compact(c);
            }
        }
        self.compact(0);
        Ok(())
    }
}

/// Enumerates the cosets of the trivial subgroup, i.e. the elements of the
/// presented group. Fails with `Capped` once more than `max_cosets` cosets
/// would be live at the same time.
pub fn todd_coxeter(presentation: &Presentation, max_cosets: usize) -> Result<CosetTable> {
    if max_cosets == 0 {
        return Err(Error::Capped { max_cosets });
    }
    let relators: Vec<Vec<usize>> = presentation
        .reduced_relators()
        .iter()
        .map(|w| w.iter().map(|l| l.column()).collect())
        .collect();
    let mut e = Enumerator::new(presentation.generators(), max_cosets);
    e.run(&relators)?;
    let table = CosetTable {
        order: e.live,
        generators: presentation.generators(),
        table: e.table,
    };
    debug_assert!(table.verify(presentation));
    Ok(table)
}

impl CosetTable {
    /// Number of cosets, which is the group order.
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn generators(&self) -> usize {
        self.generators
    }

    #[inline]
    pub fn act(&self, coset: usize, letter: Letter) -> usize {
        self.table[coset * 2 * self.generators + letter.column()]
    }

    pub fn act_word(&self, coset: usize, word: &[Letter]) -> usize {
        word.iter().fold(coset, |c, &l| self.act(c, l))
    }

    /// Right action of generator `g` on cosets.
    pub fn generator_permutation(&self, g: usize) -> Permutation {
        Permutation::from_images_unchecked(
            (0..self.order).map(|c| self.act(c, Letter::gen(g))).collect(),
        )
    }

    /// Full check: every column is a permutation inverse to its partner, and
    /// every relator of `presentation` closes at every coset.
    pub fn verify(&self, presentation: &Presentation) -> bool {
        if presentation.generators() != self.generators {
            return false;
        }
        for g in 0..self.generators {
            let mut seen = vec![false; self.order];
            for c in 0..self.order {
                let d = self.act(c, Letter::gen(g));
                if d >= self.order || seen[d] || self.act(d, Letter::inv(g)) != c {
                    return false;
                }
                seen[d] = true;
            }
        }
        presentation
            .relators()
            .iter()
            .all(|r| (0..self.order).all(|c| self.act_word(c, r) == c))
    }

    /// For each coset, a shortest word reaching it from coset 0.
    pub fn coset_words(&self) -> Vec<Word> {
        let mut words: Vec<Option<Word>> = vec![None; self.order];
        words[0] = Some(Vec::new());
        let mut queue = std::collections::VecDeque::from([0]);
        while let Some(c) = queue.pop_front() {
            for col in 0..2 * self.generators {
                let l = Letter {
                    generator: col / 2,
                    inverse: col % 2 == 1,
                };
                let d = self.act(c, l);
                if words[d].is_none() {
                    let mut w = words[c].clone().expect("visited");
                    w.push(l);
                    words[d] = Some(w);
                    queue.push_back(d);
                }
            }
        }
        words.into_iter().map(|w| w.expect("connected table")).collect()
    }

    /// The presented group as a multiplication table: coset `c` stands for
    /// the element reaching it, and `c d` is `c` acted on by a word for `d`.
    pub fn to_group(&self) -> FiniteGroup {
        let n = self.order;
        // Spanning tree: each nonzero coset reached from an earlier one.
        let mut parent = vec![(0usize, Letter::gen(0)); n];
        let mut seen = vec![false; n];
        let mut order = Vec::with_capacity(n);
        seen[0] = true;
        order.push(0);
        let mut head = 0;
        while head < order.len() {
            let c = order[head];
            head += 1;
            for col in 0..2 * self.generators {
                let l = Letter {
                    generator: col / 2,
                    inverse: col % 2 == 1,
                };
                let d = self.act(c, l);
                if !seen[d] {
                    seen[d] = true;
                    parent[d] = (c, l);
                    order.push(d);
                }
            }
        }
        let mut table = vec![0; n * n];
        for c in 0..n {
            table[c * n] = c;
            for &d in &order[1..] {
                let (p, l) = parent[d];
                table[c * n + d] = self.act(table[c * n + p], l);
            }
        }
        FiniteGroup::from_table_unchecked(n, table, 0)
    }
}
