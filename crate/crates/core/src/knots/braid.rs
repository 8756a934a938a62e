use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// A knot presented as the closure of a braid on `strands` strands. Letter
/// `k > 0` is the positive crossing of strands at positions `k-1, k`; `-k`
/// is its inverse.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BraidKnot {
    name: String,
    strands: usize,
    word: Vec<i32>,
    #[serde(skip)]
    closure: Permutation,
}

/// Permutation sending each top position to the bottom position its strand
/// reaches.
fn strand_permutation(strands: usize, word: &[i32]) -> Permutation {
    let mut at: Vec<usize> = (0..strands).collect();
    for &g in word {
        let i = g.unsigned_abs() as usize - 1;
        at.swap(i, i + 1);
    }
    let mut images = vec![0; strands];
    for (bottom, &top) in at.iter().enumerate() {
        images[top] = bottom;
    }
    Permutation::from_images_unchecked(images)
}

pub fn parse_braid(name: &str, strands: usize, word: &[i32]) -> Result<BraidKnot> {
    if strands == 0 {
        return Err(Error::BadGenerator {
            generator: 0,
            strands,
        });
    }
    if let Some(&g) = word
        .iter()
        .find(|&&g| g == 0 || g.unsigned_abs() as usize >= strands)
    {
        return Err(Error::BadGenerator {
            generator: g,
            strands,
        });
    }
    let closure = strand_permutation(strands, word);
    let components = closure.cycles().len();
    if components != 1 {
        return Err(Error::NotAKnot {
            name: name.to_string(),
            components,
        });
    }
    Ok(BraidKnot {
        name: name.to_string(),
        strands,
        word: word.to_vec(),
        closure,
    })
}

impl BraidKnot {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn word(&self) -> &[i32] {
        &self.word
    }

    pub fn crossings(&self) -> usize {
        self.word.len()
    }

    pub fn closure_permutation(&self) -> &Permutation {
        &self.closure
    }
}

/// `(name, strands, word)` for the bundled knots. Trefoil and figure-eight
/// appear more than once, in Markov-equivalent forms.
pub const KNOT_TABLE: &[(&str, usize, &[i32])] = &[
    ("0_1", 1, &[]),
    ("3_1", 2, &[1, 1, 1]),
    ("3_1", 3, &[1, 1, 1, 2]),
    ("3_1", 3, &[1, 1, 1, -2]),
    ("4_1", 3, &[1, -2, 1, -2]),
    ("4_1", 4, &[1, -2, 1, -2, -3]),
    ("5_1", 2, &[1, 1, 1, 1, 1]),
    ("5_2", 3, &[1, 1, 1, 2, -1, 2]),
    ("6_1", 4, &[1, 1, 2, -1, -3, 2, -3]),
    ("6_2", 3, &[1, 1, 1, -2, 1, -2]),
    ("6_3", 3, &[1, 1, -2, 1, -2, -2]),
    ("7_1", 2, &[1, 1, 1, 1, 1, 1, 1]),
    ("7_2", 4, &[1, 1, 1, 2, -1, 2, 3, -2, 3]),
    ("7_3", 3, &[1, 1, 1, 1, 1, 2, -1, 2]),
    ("7_4", 4, &[1, 1, 2, -1, 2, 2, 3, -2, 3]),
    ("7_5", 3, &[1, 1, 1, 1, 2, -1, 2, 2]),
    ("7_6", 4, &[1, 1, -2, 1, 3, -2, 3]),
    ("7_7", 4, &[1, -2, 1, -2, 3, -2, 3]),
    ("8_2", 3, &[1, 1, 1, 1, 1, -2, 1, -2]),
    ("8_5", 3, &[1, 1, 1, -2, 1, 1, 1, -2]),
    ("8_19", 3, &[1, 1, 1, 2, 1, 1, 1, 2]),
    ("8_20", 3, &[1, 1, 1, -2, -1, -1, -1, -2]),
];

/// Every entry of [`KNOT_TABLE`], including alternative presentations.
pub fn bundled_presentations() -> Vec<BraidKnot> {
    KNOT_TABLE
        .iter()
        .map(|&(name, s, w)| parse_braid(name, s, w).expect("bundled words close to knots"))
        .collect()
}

/// One presentation per bundled knot.
pub fn bundled_knots() -> Vec<BraidKnot> {
    let mut out: Vec<BraidKnot> = Vec::new();
    for k in bundled_presentations() {
        if !out.iter().any(|o| o.name == k.name) {
            out.push(k);
        }
    }
    out
}
