use std::fmt;

use crate::error::{Error, Result};
use crate::quandle::Quandle;

/// A letter of a group word: generator `g` (0-based) or its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn gen(generator: usize) -> Self {
        Letter {
            generator,
            inverse: false,
        }
    }

    pub fn inv(generator: usize) -> Self {
        Letter {
            generator,
            inverse: true,
        }
    }

    pub fn inverted(self) -> Self {
        Letter {
            generator: self.generator,
            inverse: !self.inverse,
        }
    }

    /// Column of this letter in a coset table.
    #[inline]
    pub(crate) fn column(self) -> usize {
        2 * self.generator + self.inverse as usize
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inverse {
            write!(f, "x{}^-1", self.generator)
        } else {
            write!(f, "x{}", self.generator)
        }
    }
}

pub type Word = Vec<Letter>;

/// Free and cyclic reduction. The result is conjugate to the input.
pub fn cyclically_reduce(word: &[Letter]) -> Word {
    let mut out: Word = Vec::with_capacity(word.len());
    for &l in word {
        if out.last() == Some(&l.inverted()) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    let mut start = 0;
    let mut end = out.len();
    while end - start >= 2 && out[start] == out[end - 1].inverted() {
        start += 1;
        end -= 1;
    }
    out[start..end].to_vec()
}

/// A finite presentation. Relators are stored as given (nonempty, letters in
/// range); [`Presentation::reduced_relators`] gives the form used for
/// enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    generators: usize,
    relators: Vec<Word>,
}

impl Presentation {
    pub fn new(generators: usize, relators: Vec<Word>) -> Result<Self> {
        for r in &relators {
            if r.is_empty() {
                return Err(Error::BadPresentation("empty relator".into()));
            }
            if let Some(l) = r.iter().find(|l| l.generator >= generators) {
                return Err(Error::BadPresentation(format!(
                    "letter {l} with only {generators} generators"
                )));
            }
        }
        Ok(Presentation {
            generators,
            relators,
        })
    }

    /// Parses relators written as signed 1-based generator indices.
    pub fn from_signed(generators: usize, relators: &[Vec<i32>]) -> Result<Self> {
        let mut words = Vec::with_capacity(relators.len());
        for r in relators {
            let mut w = Vec::with_capacity(r.len());
            for &s in r {
                if s == 0 {
                    return Err(Error::BadPresentation("generator index 0".into()));
                }
                let g = s.unsigned_abs() as usize - 1;
                w.push(Letter {
                    generator: g,
                    inverse: s < 0,
                });
            }
            words.push(w);
        }
        Presentation::new(generators, words)
    }

    pub fn generators(&self) -> usize {
        self.generators
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    /// Cyclically reduced relators without trivial words or duplicates.
    pub fn reduced_relators(&self) -> Vec<Word> {
        let mut out: Vec<Word> = Vec::new();
        for r in &self.relators {
            let r = cyclically_reduce(r);
            if !r.is_empty() && !out.contains(&r) {
                out.push(r);
            }
        }
        out
    }

    pub fn with_relators(&self, extra: Vec<Word>) -> Result<Self> {
        let mut all = self.relators.clone();
        all.extend(extra);
        Presentation::new(self.generators, all)
    }
}

/// The enveloping group of a quandle: generators `x_i` for elements `i`,
/// relators `x_j^-1 x_i x_j x_(i*j)^-1`. With `finite`, also `x_i^(n_i)`
/// where `n_i` is the order of the right translation `R_i`.
pub fn enveloping_presentation(q: &Quandle, finite: bool) -> Presentation {
    let n = q.order();
    let mut relators = Vec::with_capacity(n * n + n);
    for i in 0..n {
        for j in 0..n {
            relators.push(vec![
                Letter::inv(j),
                Letter::gen(i),
                Letter::gen(j),
                Letter::inv(q.op(i, j)),
            ]);
        }
    }
    if finite {
        for i in 0..n {
            let order = q.translation(i).order();
            relators.push(vec![Letter::gen(i); order]);
        }
    }
    Presentation::new(n, relators).expect("generators in range")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::dihedral;

    #[test]
    fn reduction() {
        let w = vec![Letter::inv(0), Letter::gen(1), Letter::gen(0)];
        assert_eq!(cyclically_reduce(&w), vec![Letter::gen(1)]);
        let w = vec![Letter::inv(0), Letter::gen(0), Letter::gen(0), Letter::inv(0)];
        assert!(cyclically_reduce(&w).is_empty());
    }

    #[test]
    fn enveloping_presentations() {
        let one = Quandle::trivial(1).unwrap();
        let free = enveloping_presentation(&one, false);
        assert_eq!(free.generators(), 1);
        assert_eq!(free.relators().len(), 1);
        assert!(free.reduced_relators().is_empty());
        let fin = enveloping_presentation(&one, true);
        assert_eq!(fin.reduced_relators(), vec![vec![Letter::gen(0)]]);

        let d3 = dihedral(3).unwrap();
        let p = enveloping_presentation(&d3, true);
        assert_eq!(p.generators(), 3);
        assert_eq!(p.relators().len(), 9 + 3);
        assert!(p.relators()[9..].iter().all(|r| r.len() == 2 && r[0] == r[1]));
        // The three i = j relators reduce away.
        assert_eq!(p.reduced_relators().len(), 6 + 3);
    }

    #[test]
    fn signed_parsing() {
        let p = Presentation::from_signed(2, &[vec![1, 1], vec![2, 2], vec![1, 2, 1, 2, 1, 2]]).unwrap();
        assert_eq!(p.relators().len(), 3);
        assert!(Presentation::from_signed(1, &[vec![2]]).is_err());
        assert!(Presentation::from_signed(1, &[vec![0]]).is_err());
        assert!(Presentation::from_signed(1, &[vec![]]).is_err());
    }
}
