//! Quandle 2-cocycles with cyclic coefficients, written additively.
//!
//! A cocycle `phi` with values in `Z_m` satisfies `phi(x, x) = 0` and
//!
//! ```text
//! phi(x, y) - phi(x, z) + phi(x*y, z) - phi(x*z, y*z) = 0   (mod m)
//! ```
//!
//! for all `x, y, z`. Coboundaries are `(delta g)(x, y) = g(x) - g(x*y)`,
//! the change of cocycle induced by relabeling an extension along
//! `(x, a) -> (x, a + g(x))`.

use crate::error::{CocycleWitness, Error, Result};
use crate::quandle::Quandle;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cocycle2 {
    n: usize,
    modulus: u64,
    values: Vec<u64>,
}

/// First violation of the cocycle conditions, if any. `values` is row-major
/// `n*n` and is read modulo `m`.
pub fn cocycle_violation(q: &Quandle, m: u64, values: &[u64]) -> Option<CocycleWitness> {
    let n = q.order();
    assert_eq!(values.len(), n * n, "cochain shape");
    let v = |x: usize, y: usize| values[x * n + y] % m;
    for x in 0..n {
        if v(x, x) != 0 {
            return Some(CocycleWitness::Diagonal { x });
        }
    }
    for x in 0..n {
        for y in 0..n {
            let xy = q.op(x, y);
            for z in 0..n {
                let lhs = v(x, y) + v(xy, z);
                let rhs = v(x, z) + v(q.op(x, z), q.op(y, z));
                if lhs % m != rhs % m {
                    return Some(CocycleWitness::Identity { x, y, z });
                }
            }
        }
    }
    None
}

pub fn is_cocycle(q: &Quandle, m: u64, values: &[u64]) -> bool {
    cocycle_violation(q, m, values).is_none()
}

fn check_modulus(m: u64) -> Result<()> {
    if m == 0 {
        Err(Error::BadModulus { m, min: 1 })
    } else {
        Ok(())
    }
}

impl Cocycle2 {
    /// Validates `values` (row-major, reduced mod `m`) as a 2-cocycle of `q`.
    pub fn new(q: &Quandle, m: u64, values: Vec<u64>) -> Result<Self> {
        check_modulus(m)?;
        let n = q.order();
        if values.len() != n * n {
            return Err(Error::ShapeMismatch {
                expected: format!("{} values", n * n),
                found: values.len().to_string(),
            });
        }
        let values: Vec<u64> = values.into_iter().map(|v| v % m).collect();
        if let Some(w) = cocycle_violation(q, m, &values) {
            return Err(Error::NotACocycle(w));
        }
        Ok(Cocycle2 {
            n,
            modulus: m,
            values,
        })
    }

    pub fn from_rows(q: &Quandle, m: u64, rows: &[Vec<u64>]) -> Result<Self> {
        if rows.len() != q.order() || rows.iter().any(|r| r.len() != q.order()) {
            return Err(Error::ShapeMismatch {
                expected: format!("{0}x{0} values", q.order()),
                found: format!("{} rows", rows.len()),
            });
        }
        Cocycle2::new(q, m, rows.iter().flatten().copied().collect())
    }

    pub(crate) fn from_values_unchecked(n: usize, modulus: u64, values: Vec<u64>) -> Self {
        debug_assert_eq!(values.len(), n * n);
        Cocycle2 { n, modulus, values }
    }

    pub fn zero(n: usize, m: u64) -> Result<Self> {
        check_modulus(m)?;
        Ok(Cocycle2 {
            n,
            modulus: m,
            values: vec![0; n * n],
        })
    }

    /// `delta(g)(x, y) = g(x) - g(x*y)`.
    pub fn coboundary(q: &Quandle, m: u64, gamma: &[u64]) -> Result<Self> {
        check_modulus(m)?;
        let n = q.order();
        if gamma.len() != n {
            return Err(Error::ShapeMismatch {
                expected: format!("{n} values"),
                found: gamma.len().to_string(),
            });
        }
        let mut values = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                values.push((gamma[x] % m + m - gamma[q.op(x, y)] % m) % m);
            }
        }
        Ok(Cocycle2 {
            n,
            modulus: m,
            values,
        })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    #[inline]
    pub fn value(&self, x: usize, y: usize) -> u64 {
        self.values[x * self.n + y]
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn rows(&self) -> Vec<Vec<u64>> {
        self.values.chunks(self.n.max(1)).map(|r| r.to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    fn same_shape(&self, other: &Cocycle2) -> Result<()> {
        if self.n != other.n || self.modulus != other.modulus {
            return Err(Error::ShapeMismatch {
                expected: format!("order {} mod {}", self.n, self.modulus),
                found: format!("order {} mod {}", other.n, other.modulus),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Cocycle2) -> Result<Cocycle2> {
        self.same_shape(other)?;
        let m = self.modulus;
        Ok(Cocycle2 {
            n: self.n,
            modulus: m,
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| (a + b) % m)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Cocycle2) -> Result<Cocycle2> {
        self.same_shape(other)?;
        let m = self.modulus;
        Ok(Cocycle2 {
            n: self.n,
            modulus: m,
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| (a + m - b) % m)
                .collect(),
        })
    }

    pub fn scale(&self, k: u64) -> Cocycle2 {
        let m = self.modulus;
        Cocycle2 {
            n: self.n,
            modulus: m,
            values: self
                .values
                .iter()
                .map(|&v| ((v as u128 * k as u128) % m as u128) as u64)
                .collect(),
        }
    }

    /// Additive order of the cocycle as an element of the cochain group.
    pub fn additive_order(&self) -> u64 {
        let m = self.modulus;
        self.values
            .iter()
            .map(|&v| m / gcd_u64(v, m))
            .fold(1, lcm_u64)
    }

    /// `psi^d` for `d | n`: the values `d * psi` lie in `d Z_n`, which is
    /// identified with `Z_(n/d)` by `d k -> k`. Equivalently, reduce mod `n/d`.
    pub fn power(&self, d: u64) -> Result<Cocycle2> {
        if d == 0 || self.modulus % d != 0 {
            return Err(Error::DNotDividesModulus {
                d,
                n: self.modulus,
            });
        }
        let m = self.modulus / d;
        Ok(Cocycle2 {
            n: self.n,
            modulus: m,
            values: self.values.iter().map(|&v| v % m).collect(),
        })
    }
}

pub(crate) fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub(crate) fn lcm_u64(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd_u64(a, b) * b
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dihedral(n: usize) -> Quandle {
        Quandle::from_fn_unchecked(n, |a, b| (2 * b + n - a) % n)
    }

    #[test]
    fn zero_is_a_cocycle() {
        let q = dihedral(3);
        assert!(is_cocycle(&q, 3, &[0; 9]));
        assert!(Cocycle2::zero(3, 3).unwrap().is_zero());
    }

    #[test]
    fn coboundaries_are_cocycles() {
        let q = dihedral(3);
        let gamma = [1, 0, 0];
        let d = Cocycle2::coboundary(&q, 2, &gamma).unwrap();
        // delta(e_0)(x, y) = [x = 0] - [x*y = 0]
        assert_eq!(d.rows(), vec![vec![0, 1, 1], vec![0, 0, 1], vec![0, 1, 0]]);
        assert!(is_cocycle(&q, 2, d.values()));
        assert!(Cocycle2::coboundary(&q, 5, &[4, 4, 4]).unwrap().is_zero());
    }

    #[test]
    fn coboundary_is_linear() {
        let q = dihedral(5);
        let g1 = [1, 2, 0, 4, 3];
        let g2 = [0, 3, 3, 1, 2];
        let sum: Vec<u64> = g1.iter().zip(&g2).map(|(a, b)| (a + b) % 5).collect();
        let lhs = Cocycle2::coboundary(&q, 5, &sum).unwrap();
        let rhs = Cocycle2::coboundary(&q, 5, &g1)
            .unwrap()
            .add(&Cocycle2::coboundary(&q, 5, &g2).unwrap())
            .unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn constant_off_diagonal_on_dihedral_three() {
        // Fails first at (0, 1, 0): phi(0,1) - phi(0,0) + phi(2,0) - phi(0,2) = 1.
        let q = dihedral(3);
        let values = [0, 1, 1, 1, 0, 1, 1, 1, 0];
        assert_eq!(
            cocycle_violation(&q, 3, &values),
            Some(CocycleWitness::Identity { x: 0, y: 1, z: 0 })
        );
    }

    #[test]
    fn diagonal_must_vanish() {
        let q = dihedral(3);
        let mut values = [0; 9];
        values[4] = 1;
        assert_eq!(
            cocycle_violation(&q, 2, &values),
            Some(CocycleWitness::Diagonal { x: 1 })
        );
        assert!(matches!(
            Cocycle2::new(&q, 2, values.to_vec()),
            Err(Error::NotACocycle(CocycleWitness::Diagonal { x: 1 }))
        ));
    }

    #[test]
    fn power_reduces_modulus() {
        let q = Quandle::trivial(2).unwrap();
        // Trivial quandle: every diagonal-zero function is a cocycle.
        let psi = Cocycle2::new(&q, 4, vec![0, 1, 3, 0]).unwrap();
        assert_eq!(psi.additive_order(), 4);
        assert_eq!(psi.power(1).unwrap(), psi);
        let phi = psi.power(2).unwrap();
        assert_eq!(phi.modulus(), 2);
        assert_eq!(phi.values(), &[0, 1, 1, 0]);
        assert!(matches!(psi.power(3), Err(Error::DNotDividesModulus { d: 3, n: 4 })));
        assert!(Cocycle2::zero(2, 4).unwrap().power(4).unwrap().is_zero());
    }
}
