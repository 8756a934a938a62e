//! Families of quandles: dihedral, Alexander, generalized Alexander,
//! conjugation quandles and abelian extensions.

use crate::cocycle::{cocycle_violation, gcd_u64, Cocycle2};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, GroupAutomorphism};
use crate::quandle::{Quandle, QuandleMap};

/// `a * b = 2b - a (mod n)`.
pub fn dihedral(n: usize) -> Result<Quandle> {
    if n == 0 {
        return Err(Error::EmptyQuandle);
    }
    Ok(Quandle::from_fn_unchecked(n, |a, b| (2 * b + 2 * n - a) % n))
}

/// `a * b = t a + (1 - t) b (mod n)` for a unit `t`.
pub fn alexander(n: usize, t: u64) -> Result<Quandle> {
    if n == 0 {
        return Err(Error::EmptyQuandle);
    }
    let nn = n as u64;
    if gcd_u64(t % nn, nn) != 1 {
        return Err(Error::NotAUnit { t, n: nn });
    }
    let t = t % nn;
    let one_minus_t = (1 + nn - t) % nn;
    Ok(Quandle::from_fn_unchecked(n, |a, b| {
        ((t * a as u64 + one_minus_t * b as u64) % nn) as usize
    }))
}

/// `GAlex(G, f)`: `x * y = f(x y^-1) y` on the elements of `G`.
pub fn galex(group: &FiniteGroup, f: &GroupAutomorphism) -> Quandle {
    Quandle::from_fn_unchecked(group.order(), |x, y| {
        group.mul(f.apply(group.mul(x, group.inv(y))), y)
    })
}

/// The conjugacy class `x^G` with `a * b = b^-1 a b`.
///
/// Returns the quandle together with the group element each quandle index
/// denotes; index 0 is `x` itself.
pub fn conjugation_quandle(group: &FiniteGroup, x: usize) -> Result<(Quandle, Vec<usize>)> {
    let class = group.conjugacy_class(x)?;
    let mut position = vec![usize::MAX; group.order()];
    for (i, &g) in class.iter().enumerate() {
        position[g] = i;
    }
    let q = Quandle::from_fn_unchecked(class.len(), |a, b| position[group.conj(class[a], class[b])]);
    Ok((q, class))
}

/// Table of `(x, a) * (y, b) = (x*y, a + phi(x, y))` on `X x Z_m`, with
/// `(x, a)` at index `x*m + a`. No axioms are checked.
pub fn extension_table(x: &Quandle, m: u64, values: &[u64]) -> Vec<usize> {
    let n = x.order();
    let mu = m as usize;
    let size = n * mu;
    let mut table = Vec::with_capacity(size * size);
    for p in 0..size {
        let (px, pa) = (p / mu, p % mu);
        for q in 0..size {
            let qx = q / mu;
            let shift = (values[px * n + qx] % m) as usize;
            table.push(x.op(px, qx) * mu + (pa + shift) % mu);
        }
    }
    table
}

/// The abelian extension `E(X, Z_m, phi)` and its projection onto `X`.
pub fn abelian_extension(x: &Quandle, phi: &Cocycle2) -> Result<(Quandle, QuandleMap)> {
    if phi.order() != x.order() {
        return Err(Error::ShapeMismatch {
            expected: format!("cocycle on {} elements", x.order()),
            found: phi.order().to_string(),
        });
    }
    let m = phi.modulus();
    if let Some(w) = cocycle_violation(x, m, phi.values()) {
        return Err(Error::NotACocycle(w));
    }
    let size = x.order() * m as usize;
    let table = extension_table(x, m, phi.values());
    let e = Quandle::from_flat(size, table)?;
    let images = (0..size).map(|p| p / m as usize).collect();
    let projection = QuandleMap::new(e.clone(), x.clone(), images)?;
    Ok((e, projection))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::lex_rank;
    use crate::iso::are_isomorphic;

    #[test]
    fn dihedral_tables() {
        assert_eq!(
            dihedral(3).unwrap().rows(),
            vec![vec![0, 2, 1], vec![2, 1, 0], vec![1, 0, 2]]
        );
        assert_eq!(dihedral(1).unwrap().order(), 1);
        assert!(!dihedral(4).unwrap().is_connected());
        assert!(dihedral(0).is_err());
    }

    #[test]
    fn alexander_specializes_to_dihedral() {
        for n in 1..=9 {
            assert_eq!(alexander(n, n as u64 - 1).unwrap(), dihedral(n).unwrap());
        }
        assert!(alexander(5, 2).unwrap().is_connected());
        assert!(matches!(alexander(4, 2), Err(Error::NotAUnit { t: 2, n: 4 })));
    }

    #[test]
    fn galex_examples() {
        let z3 = FiniteGroup::cyclic(3).unwrap();
        let inv = GroupAutomorphism::inversion(&z3).unwrap();
        assert!(are_isomorphic(&galex(&z3, &inv), &dihedral(3).unwrap()));

        let s3 = FiniteGroup::symmetric(3).unwrap();
        let id = GroupAutomorphism::identity(&s3);
        assert_eq!(galex(&s3, &id), Quandle::trivial(6).unwrap());

        let s4 = FiniteGroup::symmetric(4).unwrap();
        let t = lex_rank(&[1, 0, 2, 3]).unwrap();
        let f = GroupAutomorphism::conjugation(&s4, t).unwrap();
        let y = galex(&s4, &f);
        assert_eq!(y.order(), 24);
        assert!(Quandle::from_flat(24, y.flat_table().to_vec()).is_ok());
    }

    #[test]
    fn conjugation_quandles() {
        let s4 = FiniteGroup::symmetric(4).unwrap();
        let t = lex_rank(&[1, 0, 2, 3]).unwrap();
        let (q, labels) = conjugation_quandle(&s4, t).unwrap();
        assert_eq!(q.order(), 6);
        assert_eq!(labels[0], t);
        assert!(q.is_connected());
        assert!(q.is_faithful());

        let z4 = FiniteGroup::cyclic(4).unwrap();
        assert_eq!(conjugation_quandle(&z4, 1).unwrap().0.order(), 1);

        let s3 = FiniteGroup::symmetric(3).unwrap();
        let t3 = lex_rank(&[1, 0, 2]).unwrap();
        let (q3, _) = conjugation_quandle(&s3, t3).unwrap();
        assert!(are_isomorphic(&q3, &dihedral(3).unwrap()));
    }

    #[test]
    fn trivial_extension() {
        let x = dihedral(3).unwrap();
        let zero = Cocycle2::zero(3, 2).unwrap();
        let (e, pi) = abelian_extension(&x, &zero).unwrap();
        assert_eq!(e.order(), 6);
        assert!(pi.is_covering().unwrap());
        assert_eq!(pi.index().unwrap().index, 2);
        assert!(!e.is_faithful());
        assert_eq!(e.inn_image().0.order(), 3);
    }

    #[test]
    fn galex_conjugation_covers_class() {
        // p(g) = x^g is an epimorphism GAlex(G, conj_x) -> x^G.
        let s4 = FiniteGroup::symmetric(4).unwrap();
        let x = lex_rank(&[1, 2, 0, 3]).unwrap();
        let f = GroupAutomorphism::conjugation(&s4, x).unwrap();
        let y = galex(&s4, &f);
        let (class, labels) = conjugation_quandle(&s4, x).unwrap();
        let mut position = vec![usize::MAX; s4.order()];
        for (i, &g) in labels.iter().enumerate() {
            position[g] = i;
        }
        let images = (0..s4.order()).map(|g| position[s4.conj(x, g)]).collect();
        let p = QuandleMap::new(y.clone(), class.clone(), images).unwrap();
        assert!(p.ensure_epimorphism().is_ok());
        assert!(are_isomorphic(&y.inn_image().0, &class));
    }
}
