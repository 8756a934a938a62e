//! Finite groups given by multiplication tables.

use crate::error::{Error, Result};
use crate::perm::{PermGroup, Permutation};

/// A finite group on `0..order`. `mul(g, h)` is `gh`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<usize>,
    inverse: Vec<usize>,
    identity: usize,
}

impl FiniteGroup {
    /// Validates closure, associativity, identity and inverses.
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::InvalidGroup("empty table".into()));
        }
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidGroup("table is not square".into()));
        }
        let table: Vec<usize> = rows.iter().flatten().copied().collect();
        if let Some(&v) = table.iter().find(|&&v| v >= n) {
            return Err(Error::InvalidGroup(format!("entry {v} out of range")));
        }
        let mul = |a: usize, b: usize| table[a * n + b];
        let identity = (0..n)
            .find(|&e| (0..n).all(|g| mul(e, g) == g && mul(g, e) == g))
            .ok_or_else(|| Error::InvalidGroup("no identity".into()))?;
        let mut inverse = vec![usize::MAX; n];
        for g in 0..n {
            inverse[g] = (0..n)
                .find(|&h| mul(g, h) == identity && mul(h, g) == identity)
                .ok_or_else(|| Error::InvalidGroup(format!("{g} has no inverse")))?;
        }
        for a in 0..n {
            for b in 0..n {
                let ab = mul(a, b);
                for c in 0..n {
                    if mul(ab, c) != mul(a, mul(b, c)) {
                        return Err(Error::InvalidGroup(format!(
                            "not associative at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        Ok(FiniteGroup {
            order: n,
            table,
            inverse,
            identity,
        })
    }

    /// Group on the elements of a permutation group, in its element order.
    /// Products are computed in right-action order: `gh` applies `g` first.
    pub fn from_perm_group(g: &PermGroup) -> Self {
        let elements = g.elements();
        let n = elements.len();
        let mut table = Vec::with_capacity(n * n);
        for a in elements {
            for b in elements {
                table.push(g.position(&a.then(b)).expect("closed under products"));
            }
        }
        let inverse = elements
            .iter()
            .map(|a| g.position(&a.inverse()).expect("closed under inverses"))
            .collect();
        let identity = g
            .position(&Permutation::identity(g.degree()))
            .expect("contains identity");
        FiniteGroup {
            order: n,
            table,
            inverse,
            identity,
        }
    }

    /// Trusted table, e.g. from a regular action. Inverses are read off rows.
    pub(crate) fn from_table_unchecked(order: usize, table: Vec<usize>, identity: usize) -> Self {
        debug_assert_eq!(table.len(), order * order);
        let mut inverse = vec![usize::MAX; order];
        for g in 0..order {
            for h in 0..order {
                if table[g * order + h] == identity {
                    inverse[g] = h;
                    break;
                }
            }
        }
        FiniteGroup {
            order,
            table,
            inverse,
            identity,
        }
    }

    pub fn cyclic(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGroup("cyclic group of order 0".into()));
        }
        let table = (0..n * n).map(|i| (i / n + i % n) % n).collect();
        let inverse = (0..n).map(|g| (n - g) % n).collect();
        Ok(FiniteGroup {
            order: n,
            table,
            inverse,
            identity: 0,
        })
    }

    /// `Sym(n)` for `1 <= n <= 5`, elements in lexicographic order of their
    /// image lists (so element 0 is the identity). See [`lex_rank`].
    pub fn symmetric(n: usize) -> Result<Self> {
        Ok(Self::symmetric_with_elements(n)?.0)
    }

    pub fn symmetric_with_elements(n: usize) -> Result<(Self, Vec<Permutation>)> {
        if !(1..=5).contains(&n) {
            return Err(Error::InvalidGroup(format!(
                "symmetric groups are provided for degrees 1..=5, got {n}"
            )));
        }
        let perms = all_permutations(n);
        Ok((Self::from_permutation_list(&perms), perms))
    }

    /// `Alt(n)` for `1 <= n <= 5`, even permutations in lexicographic order.
    pub fn alternating_with_elements(n: usize) -> Result<(Self, Vec<Permutation>)> {
        if !(1..=5).contains(&n) {
            return Err(Error::InvalidGroup(format!(
                "alternating groups are provided for degrees 1..=5, got {n}"
            )));
        }
        let perms: Vec<_> = all_permutations(n)
            .into_iter()
            .filter(|p| p.cycle_type().iter().filter(|&&l| l % 2 == 0).count() % 2 == 0)
            .collect();
        Ok((Self::from_permutation_list(&perms), perms))
    }

    fn from_permutation_list(perms: &[Permutation]) -> Self {
        let index: std::collections::HashMap<&Permutation, usize> =
            perms.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let n = perms.len();
        let mut table = Vec::with_capacity(n * n);
        for a in perms {
            for b in perms {
                table.push(index[&a.then(b)]);
            }
        }
        let inverse = perms.iter().map(|p| index[&p.inverse()]).collect();
        let identity = index[&Permutation::identity(perms[0].degree())];
        FiniteGroup {
            order: n,
            table,
            inverse,
            identity,
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order).map(|r| r.to_vec()).collect()
    }

    /// `h^-1 g h`.
    #[inline]
    pub fn conj(&self, g: usize, h: usize) -> usize {
        self.mul(self.mul(self.inv(h), g), h)
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut k = 1;
        let mut x = g;
        while x != self.identity {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// The conjugacy class `x^G` in order of discovery, starting with `x`.
    pub fn conjugacy_class(&self, x: usize) -> Result<Vec<usize>> {
        self.check(x)?;
        let mut seen = vec![false; self.order];
        let mut class = Vec::new();
        for h in 0..self.order {
            let y = self.conj(x, h);
            if !seen[y] {
                seen[y] = true;
                class.push(y);
            }
        }
        Ok(class)
    }

    pub(crate) fn check(&self, g: usize) -> Result<()> {
        if g < self.order {
            Ok(())
        } else {
            Err(Error::ElementOutOfRange {
                element: g,
                order: self.order,
            })
        }
    }
}

fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn rec(n: usize, current: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
        if current.len() == n {
            out.push(Permutation::from_images_unchecked(current.clone()));
            return;
        }
        for i in 0..n {
            if !used[i] {
                used[i] = true;
                current.push(i);
                rec(n, current, used, out);
                current.pop();
                used[i] = false;
            }
        }
    }
    rec(n, &mut current, &mut used, &mut out);
    out
}

/// Index of a permutation of `0..n` in [`FiniteGroup::symmetric`].
pub fn lex_rank(images: &[usize]) -> Result<usize> {
    Permutation::from_images(images.to_vec())?;
    let n = images.len();
    let mut rank = 0;
    let mut factorial: usize = (1..n).product();
    for i in 0..n {
        let smaller = images[i + 1..].iter().filter(|&&x| x < images[i]).count();
        rank += smaller * factorial;
        if n - 1 - i > 0 {
            factorial /= n - 1 - i;
        }
    }
    Ok(rank)
}

/// An automorphism `f` of a finite group, given by images.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupAutomorphism {
    images: Vec<usize>,
}

impl GroupAutomorphism {
    pub fn new(group: &FiniteGroup, images: Vec<usize>) -> Result<Self> {
        if images.len() != group.order() {
            return Err(Error::NotAnAutomorphism("wrong number of images".into()));
        }
        Permutation::from_images(images.clone())
            .map_err(|_| Error::NotAnAutomorphism("not a bijection".into()))?;
        for g in 0..group.order() {
            for h in 0..group.order() {
                if images[group.mul(g, h)] != group.mul(images[g], images[h]) {
                    return Err(Error::NotAnAutomorphism(format!(
                        "f({g}{h}) != f({g})f({h})"
                    )));
                }
            }
        }
        Ok(GroupAutomorphism { images })
    }

    pub fn identity(group: &FiniteGroup) -> Self {
        GroupAutomorphism {
            images: (0..group.order()).collect(),
        }
    }

    /// `a -> x^-1 a x`.
    pub fn conjugation(group: &FiniteGroup, x: usize) -> Result<Self> {
        group.check(x)?;
        Ok(GroupAutomorphism {
            images: (0..group.order()).map(|a| group.conj(a, x)).collect(),
        })
    }

    /// `a -> a^-1`, an automorphism exactly when the group is abelian.
    pub fn inversion(group: &FiniteGroup) -> Result<Self> {
        if !group.is_abelian() {
            return Err(Error::NotAnAutomorphism(
                "inversion on a non-abelian group".into(),
            ));
        }
        Ok(GroupAutomorphism {
            images: (0..group.order()).map(|a| group.inv(a)).collect(),
        })
    }

    #[inline]
    pub fn apply(&self, g: usize) -> usize {
        self.images[g]
    }
}
