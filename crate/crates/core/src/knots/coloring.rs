//! Colorings of braid closures and their cut-open 1-tangles.
//!
//! Colors are propagated downward. A positive letter at position `i` sends
//! the incoming pair `(a, b)` to `(b, a*b)` with weight `+phi(a, b)`; a
//! negative letter sends `(c, d)` to `(d / c, c)` with weight
//! `-phi(d / c, c)`, where `d / c` solves `(d / c) * c = d`.

use serde::Serialize;

use crate::cocycle::Cocycle2;
use crate::error::{Error, Result};
use crate::quandle::{Quandle, QuandleMap};

use super::braid::BraidKnot;
use super::ring::GroupRingElt;

/// Upper bound on top assignments tried by the enumerators.
pub const DEFAULT_ENUMERATION_CAP: u128 = 100_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Crossing {
    /// Source colors `(x, y)`; `y` colors the over-arc.
    pub source: (usize, usize),
    pub positive: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Coloring {
    pub top: Vec<usize>,
    pub bottom: Vec<usize>,
    pub crossings: Vec<Crossing>,
}

impl Coloring {
    /// `sum_t eps(t) phi(x_t, y_t)` in `Z_m`.
    pub fn weight(&self, phi: &Cocycle2) -> u64 {
        let m = phi.modulus();
        self.crossings.iter().fold(0, |acc, c| {
            let v = phi.value(c.source.0, c.source.1);
            if c.positive {
                (acc + v) % m
            } else {
                (acc + m - v) % m
            }
        })
    }
}

/// A tangle coloring with its endpoint colors `y0` (top of the cut) and `y1`
/// (bottom of the cut).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct TangleColoring {
    pub coloring: Coloring,
    pub y0: usize,
    pub y1: usize,
}

/// The 1-tangle obtained by cutting the closure arc at position 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tangle {
    knot: BraidKnot,
}

impl Tangle {
    pub fn new(knot: BraidKnot) -> Self {
        Tangle { knot }
    }

    pub fn knot(&self) -> &BraidKnot {
        &self.knot
    }
}

impl From<BraidKnot> for Tangle {
    fn from(knot: BraidKnot) -> Self {
        Tangle::new(knot)
    }
}

/// Propagates `colors` through `word` in place and calls `visit` on each
/// crossing.
fn propagate(q: &Quandle, word: &[i32], colors: &mut [usize], mut visit: impl FnMut(Crossing)) {
    for &g in word {
        let i = g.unsigned_abs() as usize - 1;
        let (a, b) = (colors[i], colors[i + 1]);
        if g > 0 {
            colors[i] = b;
            colors[i + 1] = q.op(a, b);
            visit(Crossing {
                source: (a, b),
                positive: true,
            });
        } else {
            let x = q.rdiv(b, a);
            colors[i] = x;
            colors[i + 1] = a;
            visit(Crossing {
                source: (x, a),
                positive: false,
            });
        }
    }
}

/// Colors at the bottom of the braid for the given top colors.
pub fn propagate_colors(q: &Quandle, word: &[i32], top: &[usize]) -> Vec<usize> {
    let mut colors = top.to_vec();
    propagate(q, word, &mut colors, |_| {});
    colors
}

fn color_with_crossings(q: &Quandle, knot: &BraidKnot, top: &[usize]) -> Coloring {
    let mut bottom = top.to_vec();
    let mut crossings = Vec::with_capacity(knot.crossings());
    propagate(q, knot.word(), &mut bottom, |c| crossings.push(c));
    Coloring {
        top: top.to_vec(),
        bottom,
        crossings,
    }
}

fn check_cap(q: &Quandle, slots: usize, cap: u128) -> Result<()> {
    let assignments = (q.order() as u128).checked_pow(slots as u32).unwrap_or(u128::MAX);
    if assignments > cap {
        return Err(Error::EnumerationTooLarge { assignments, cap });
    }
    Ok(())
}

/// Calls `visit` with every top assignment whose bottom colors agree with
/// the top everywhere except possibly at position 0 (when `cut`).
fn for_each_top(
    q: &Quandle,
    knot: &BraidKnot,
    cut: bool,
    cap: u128,
    mut visit: impl FnMut(&[usize], &[usize]),
) -> Result<()> {
    let s = knot.strands();
    check_cap(q, s, cap)?;
    let n = q.order();
    let mut top = vec![0; s];
    let mut colors = vec![0; s];
    loop {
        colors.copy_from_slice(&top);
        propagate(q, knot.word(), &mut colors, |_| {});
        let start = usize::from(cut);
        if colors[start..] == top[start..] {
            visit(&top, &colors);
        }
        let mut k = 0;
        loop {
            if k == s {
                return Ok(());
            }
            top[k] += 1;
            if top[k] < n {
                break;
            }
            top[k] = 0;
            k += 1;
        }
    }
}

/// All colorings of the closure of `knot` by `q`.
pub fn enumerate_colorings(q: &Quandle, knot: &BraidKnot) -> Result<Vec<Coloring>> {
    enumerate_colorings_capped(q, knot, DEFAULT_ENUMERATION_CAP)
}

pub fn enumerate_colorings_capped(q: &Quandle, knot: &BraidKnot, cap: u128) -> Result<Vec<Coloring>> {
    let mut out = Vec::new();
    for_each_top(q, knot, false, cap, |top, _| out.push(color_with_crossings(q, knot, top)))?;
    Ok(out)
}

pub fn count_colorings(q: &Quandle, knot: &BraidKnot) -> Result<usize> {
    let mut count = 0;
    for_each_top(q, knot, false, DEFAULT_ENUMERATION_CAP, |_, _| count += 1)?;
    Ok(count)
}

fn check_cocycle_shape(q: &Quandle, phi: &Cocycle2) -> Result<()> {
    if phi.order() != q.order() {
        return Err(Error::ShapeMismatch {
            expected: format!("cocycle on {} elements", q.order()),
            found: phi.order().to_string(),
        });
    }
    Ok(())
}

/// The state sum `Phi_phi(K) = sum_C u^(weight of C)`.
pub fn state_sum(q: &Quandle, phi: &Cocycle2, knot: &BraidKnot) -> Result<GroupRingElt> {
    check_cocycle_shape(q, phi)?;
    let mut out = GroupRingElt::zero(phi.modulus());
    for coloring in enumerate_colorings(q, knot)? {
        out.add_term(coloring.weight(phi));
    }
    Ok(out)
}

pub fn tangle_colorings(q: &Quandle, tangle: &Tangle) -> Result<Vec<TangleColoring>> {
    let knot = tangle.knot();
    let mut out = Vec::new();
    for_each_top(q, knot, true, DEFAULT_ENUMERATION_CAP, |top, _| {
        let coloring = color_with_crossings(q, knot, top);
        let (y0, y1) = (coloring.top[0], coloring.bottom[0]);
        out.push(TangleColoring { coloring, y0, y1 });
    })?;
    Ok(out)
}

/// Every tangle coloring gives both endpoints the same color.
pub fn end_monochromatic(q: &Quandle, tangle: &Tangle) -> Result<bool> {
    Ok(tangle_colorings(q, tangle)?.iter().all(|c| c.y0 == c.y1))
}

/// Every tangle coloring satisfies `R_y0 = R_y1`.
pub fn check_translation_equality(q: &Quandle, tangle: &Tangle) -> Result<bool> {
    let n = q.order();
    let same_column = |a: usize, b: usize| (0..n).all(|x| q.op(x, a) == q.op(x, b));
    Ok(tangle_colorings(q, tangle)?
        .iter()
        .all(|c| same_column(c.y0, c.y1)))
}

/// The lift along a covering `f: Y -> X` of an `X`-coloring of `tangle`
/// whose cut starts at `y`. Every candidate over `coloring` is tried, and
/// exactly one must satisfy the tangle's constraints.
pub fn lift_coloring(
    f: &QuandleMap,
    tangle: &Tangle,
    coloring: &TangleColoring,
    y: usize,
) -> Result<TangleColoring> {
    if !f.is_covering()? {
        let (a, x, z) = f.covering_failure().expect("covering failed");
        return Err(Error::NotACovering(format!(
            "{x} and {z} lie in one fiber but {a}*{x} != {a}*{z}"
        )));
    }
    let top = &coloring.coloring.top;
    if y >= f.source().order() || f.apply(y) != top[0] {
        return Err(Error::FiberMismatch {
            element: y,
            expected: top[0],
        });
    }
    let fibers = f.fibers();
    let choices: Vec<&[usize]> = std::iter::once(std::slice::from_ref(&y))
        .chain(top[1..].iter().map(|&x| fibers[x].as_slice()))
        .collect();
    let source = f.source();
    let knot = tangle.knot();
    let mut index = vec![0; choices.len()];
    let mut found: Vec<Vec<usize>> = Vec::new();
    let mut candidate = vec![0; choices.len()];
    loop {
        for (k, c) in candidate.iter_mut().enumerate() {
            *c = choices[k][index[k]];
        }
        let bottom = propagate_colors(source, knot.word(), &candidate);
        if bottom[1..] == candidate[1..] {
            found.push(candidate.clone());
        }
        let mut k = 0;
        loop {
            if k == choices.len() {
                break;
            }
            index[k] += 1;
            if index[k] < choices[k].len() {
                break;
            }
            index[k] = 0;
            k += 1;
        }
        if k == choices.len() {
            break;
        }
    }
    if found.len() != 1 {
        return Err(Error::LiftNotUnique { found: found.len() });
    }
    let lifted = color_with_crossings(source, knot, &found[0]);
    let (y0, y1) = (lifted.top[0], lifted.bottom[0]);
    Ok(TangleColoring {
        coloring: lifted,
        y0,
        y1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{abelian_extension, dihedral};
    use crate::knots::braid::parse_braid;

    fn trefoil() -> BraidKnot {
        parse_braid("3_1", 2, &[1, 1, 1]).unwrap()
    }

    fn figure_eight() -> BraidKnot {
        parse_braid("4_1", 3, &[1, -2, 1, -2]).unwrap()
    }

    #[test]
    fn dihedral_counts() {
        let d3 = dihedral(3).unwrap();
        let d5 = dihedral(5).unwrap();
        assert_eq!(count_colorings(&d3, &trefoil()).unwrap(), 9);
        let fig = enumerate_colorings(&d3, &figure_eight()).unwrap();
        assert_eq!(fig.len(), 3);
        assert!(fig.iter().all(|c| c.top.iter().all(|&x| x == c.top[0])));
        assert_eq!(count_colorings(&d5, &figure_eight()).unwrap(), 25);
    }

    #[test]
    fn unknot_state_sum() {
        let d3 = dihedral(3).unwrap();
        let unknot = parse_braid("0_1", 1, &[]).unwrap();
        let zero = Cocycle2::zero(3, 3).unwrap();
        assert_eq!(state_sum(&d3, &zero, &unknot).unwrap().coeffs(), &[3, 0, 0]);
        assert_eq!(state_sum(&d3, &zero, &trefoil()).unwrap().coeffs(), &[9, 0, 0]);
    }

    #[test]
    fn inverse_letters_cancel() {
        let q = dihedral(5).unwrap();
        let phi = Cocycle2::coboundary(&q, 5, &[1, 4, 0, 2, 3]).unwrap();
        let knot = parse_braid("x", 2, &[1, -1, 1]).unwrap();
        let mut total = 0;
        for a in 0..5 {
            for b in 0..5 {
                let mut colors = vec![a, b];
                let mut w = 0;
                propagate(&q, &[1, -1], &mut colors, |c| {
                    let v = phi.value(c.source.0, c.source.1);
                    w = if c.positive { (w + v) % 5 } else { (w + 5 - v) % 5 };
                });
                assert_eq!(colors, vec![a, b]);
                assert_eq!(w, 0);
                total += 1;
            }
        }
        assert_eq!(total, 25);
        assert_eq!(knot.crossings(), 3);
    }

    #[test]
    fn tangles_of_faithful_quandles() {
        let d3 = dihedral(3).unwrap();
        for k in [trefoil(), figure_eight()] {
            let t = Tangle::new(k);
            assert!(end_monochromatic(&d3, &t).unwrap());
            assert!(check_translation_equality(&d3, &t).unwrap());
        }
        let t2 = Quandle::trivial(2).unwrap();
        let t = Tangle::new(figure_eight());
        assert_eq!(tangle_colorings(&t2, &t).unwrap().len(), 2);
        assert!(end_monochromatic(&t2, &t).unwrap());
    }

    #[test]
    fn lifts_along_trivial_extension() {
        let d3 = dihedral(3).unwrap();
        let (e, pi) = abelian_extension(&d3, &Cocycle2::zero(3, 2).unwrap()).unwrap();
        let t = Tangle::new(trefoil());
        for c in tangle_colorings(&d3, &t).unwrap() {
            let fiber: Vec<usize> = (0..e.order()).filter(|&p| pi.apply(p) == c.y0).collect();
            assert_eq!(fiber.len(), 2);
            for y in fiber {
                let lift = lift_coloring(&pi, &t, &c, y).unwrap();
                assert_eq!(lift.y0, y);
                let image: Vec<usize> = lift.coloring.top.iter().map(|&p| pi.apply(p)).collect();
                assert_eq!(image, c.coloring.top);
            }
        }
        let id = QuandleMap::identity(&d3);
        let c = &tangle_colorings(&d3, &t).unwrap()[4];
        assert_eq!(&lift_coloring(&id, &t, c, c.y0).unwrap(), c);
        assert!(matches!(
            lift_coloring(&id, &t, c, (c.y0 + 1) % 3),
            Err(Error::FiberMismatch { .. })
        ));
    }
}
