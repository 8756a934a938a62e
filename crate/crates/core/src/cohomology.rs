//! Second quandle cohomology `H^2_Q(X; Z_m)`.
//!
//! Cochains are the diagonal-zero functions on `X x X`, indexed by the
//! off-diagonal pairs. The cocycle space is the kernel of the cocycle
//! constraint matrix mod `m`, read off from its Smith form; the quotient by
//! the coboundaries is a second Smith form over the kernel generators.

use crate::cocycle::Cocycle2;
use crate::error::{Error, Result};
use crate::quandle::Quandle;
use crate::zmod::{smith, ModMatrix, RowEchelon, Smith};

/// Off-diagonal pair indexing: `(x, y)` with `x != y`, row-major.
#[derive(Debug, Clone)]
struct Pairs {
    n: usize,
}

impl Pairs {
    fn count(&self) -> usize {
        self.n * self.n.saturating_sub(1)
    }

    fn index(&self, x: usize, y: usize) -> Option<usize> {
        if x == y {
            None
        } else {
            Some(x * (self.n - 1) + if y > x { y - 1 } else { y })
        }
    }

    fn to_cochain(&self, values: &[u64]) -> Vec<u64> {
        let mut out = vec![0; self.count()];
        for x in 0..self.n {
            for y in 0..self.n {
                if let Some(i) = self.index(x, y) {
                    out[i] = values[x * self.n + y];
                }
            }
        }
        out
    }

    fn to_values(&self, cochain: &[u64]) -> Vec<u64> {
        let mut out = vec![0; self.n * self.n];
        for x in 0..self.n {
            for y in 0..self.n {
                if let Some(i) = self.index(x, y) {
                    out[x * self.n + y] = cochain[i];
                }
            }
        }
        out
    }
}

/// The cocycle constraints reduced to row echelon form.
fn constraint_matrix(q: &Quandle, m: u64) -> ModMatrix {
    let n = q.order();
    let pairs = Pairs { n };
    let mut echelon = RowEchelon::new(pairs.count(), m);
    let mut row = vec![0u64; pairs.count()];
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if y == z {
                    continue;
                }
                row.iter_mut().for_each(|v| *v = 0);
                let terms = [
                    (x, y, 1),
                    (x, z, m - 1),
                    (q.op(x, y), z, 1),
                    (q.op(x, z), q.op(y, z), m - 1),
                ];
                let mut nonzero = false;
                for (a, b, s) in terms {
                    if let Some(i) = pairs.index(a, b) {
                        row[i] = (row[i] + s) % m;
                    }
                }
                for v in &row {
                    nonzero |= *v != 0;
                }
                if nonzero {
                    echelon.insert(row.clone());
                }
            }
        }
    }
    echelon.into_matrix()
}

/// The coboundary map `Z_m^n -> cochains`, one column per element.
fn coboundary_matrix(q: &Quandle, m: u64) -> ModMatrix {
    let n = q.order();
    let pairs = Pairs { n };
    let mut d = ModMatrix::zeros(pairs.count(), n, m);
    for x in 0..n {
        for y in 0..n {
            if let Some(i) = pairs.index(x, y) {
                let xy = q.op(x, y);
                d.set(i, x, (d.get(i, x) + 1) % m);
                d.set(i, xy, (d.get(i, xy) + m - 1) % m);
            }
        }
    }
    d
}

/// `H^2_Q(X; Z_m)` as a product of cyclic groups with representatives.
#[derive(Debug, Clone)]
pub struct CohomologyGroup {
    modulus: u64,
    invariant_factors: Vec<u64>,
    representatives: Vec<Cocycle2>,
    cocycle_factors: Vec<u64>,
    coboundary_factors: Vec<u64>,
    // Data for `class_of`.
    n: usize,
    kernel: Smith,
    kernel_orders: Vec<u64>,
    generators: Vec<usize>,
    quotient: Smith,
    factor_positions: Vec<usize>,
}

impl CohomologyGroup {
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Orders of the nontrivial cyclic factors, each dividing the next.
    pub fn invariant_factors(&self) -> &[u64] {
        &self.invariant_factors
    }

    pub fn representatives(&self) -> &[Cocycle2] {
        &self.representatives
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty()
    }

    /// `|H^2|`, if it fits.
    pub fn order(&self) -> Option<u128> {
        checked_product(&self.invariant_factors)
    }

    /// The cocycle group as a product of cyclic groups (trivial factors dropped).
    pub fn cocycle_factors(&self) -> &[u64] {
        &self.cocycle_factors
    }

    pub fn coboundary_factors(&self) -> &[u64] {
        &self.coboundary_factors
    }

    pub fn cocycle_count(&self) -> Option<u128> {
        checked_product(&self.cocycle_factors)
    }

    pub fn coboundary_count(&self) -> Option<u128> {
        checked_product(&self.coboundary_factors)
    }

    /// Coordinates of the class of `phi` against the representatives:
    /// `phi ~ sum_j c_j rep_j` with `c_j` taken mod the `j`-th factor.
    pub fn class_of(&self, phi: &Cocycle2) -> Result<Vec<u64>> {
        if phi.order() != self.n || phi.modulus() != self.modulus {
            return Err(Error::ShapeMismatch {
                expected: format!("cocycle of order {} mod {}", self.n, self.modulus),
                found: format!("order {} mod {}", phi.order(), phi.modulus()),
            });
        }
        let m = self.modulus;
        let pairs = Pairs { n: self.n };
        let y = self.kernel.right_inverse.mul_vec(&pairs.to_cochain(phi.values()));
        let mut c = Vec::with_capacity(self.generators.len());
        for &i in &self.generators {
            let step = m / self.kernel_orders[i];
            debug_assert_eq!(y[i] % step, 0, "not a cocycle");
            c.push(y[i] / step);
        }
        let w = if c.is_empty() {
            Vec::new()
        } else {
            self.quotient.right.vec_mul(&c)
        };
        Ok(self
            .factor_positions
            .iter()
            .zip(&self.invariant_factors)
            .map(|(&j, &f)| w[j] % f)
            .collect())
    }
}

fn checked_product(factors: &[u64]) -> Option<u128> {
    factors
        .iter()
        .try_fold(1u128, |acc, &f| acc.checked_mul(f as u128))
}

/// Computes `H^2_Q(q; Z_m)` for `m >= 2`.
pub fn second_cohomology(q: &Quandle, m: u64) -> Result<CohomologyGroup> {
    if m < 2 {
        return Err(Error::BadModulus { m, min: 2 });
    }
    let n = q.order();
    let pairs = Pairs { n };
    let count = pairs.count();

    // Cocycles: x with A x = 0. With P A Q = D and y = Q^-1 x, coordinate i
    // ranges over the subgroup of order kernel_orders[i], generated by
    // step_i * e_i where step_i = m / kernel_orders[i].
    let constraints = constraint_matrix(q, m);
    let kernel = smith(&constraints, false);
    let kernel_orders: Vec<u64> = (0..count).map(|i| kernel.kernel_order(i, m)).collect();
    let generators: Vec<usize> = (0..count).filter(|&i| kernel_orders[i] > 1).collect();
    let cocycle_factors: Vec<u64> = generators.iter().map(|&i| kernel_orders[i]).collect();

    // Coboundaries, written in generator coordinates.
    let delta = coboundary_matrix(q, m);
    let delta_smith = smith(&delta, false);
    let coboundary_factors: Vec<u64> = (0..n)
        .map(|j| m / delta_smith.kernel_order(j, m))
        .filter(|&f| f > 1)
        .collect();

    let k = generators.len();
    let mut relations: Vec<Vec<u64>> = Vec::new();
    for v in 0..n {
        let y = kernel.right_inverse.mul_vec(&delta.column(v));
        let mut row = Vec::with_capacity(k);
        for &i in &generators {
            let step = m / kernel_orders[i];
            debug_assert_eq!(y[i] % step, 0);
            row.push(y[i] / step);
        }
        relations.push(row);
    }
    for (slot, &i) in generators.iter().enumerate() {
        if kernel_orders[i] < m {
            let mut row = vec![0; k];
            row[slot] = kernel_orders[i];
            relations.push(row);
        }
    }
    let relation_matrix = ModMatrix::from_rows(&relations, k, m);
    let quotient = smith(&relation_matrix, false);

    let mut invariant_factors = Vec::new();
    let mut factor_positions = Vec::new();
    for j in 0..k {
        let f = quotient.kernel_order(j, m);
        if f > 1 {
            invariant_factors.push(f);
            factor_positions.push(j);
        }
    }

    let mut representatives = Vec::with_capacity(factor_positions.len());
    for &j in &factor_positions {
        let c = quotient.right_inverse.row(j);
        let mut y = vec![0u64; count];
        for (slot, &i) in generators.iter().enumerate() {
            let step = m / kernel_orders[i];
            y[i] = (c[slot] as u128 * step as u128 % m as u128) as u64;
        }
        let x = kernel.right.mul_vec(&y);
        let values = pairs.to_values(&x);
        debug_assert!(crate::cocycle::is_cocycle(q, m, &values));
        representatives.push(Cocycle2::from_values_unchecked(n, m, values));
    }

    if let (Some(z), Some(b), Some(h)) = (
        checked_product(&cocycle_factors),
        checked_product(&coboundary_factors),
        checked_product(&invariant_factors),
    ) {
        debug_assert_eq!(z, b * h, "|Z| = |B| |H|");
    }

    Ok(CohomologyGroup {
        modulus: m,
        invariant_factors,
        representatives,
        cocycle_factors,
        coboundary_factors,
        n,
        kernel,
        kernel_orders,
        generators,
        quotient,
        factor_positions,
    })
}

/// Whether `phi1 - phi2` is a coboundary, decided by solving
/// `delta(gamma) = phi1 - phi2` directly.
pub fn cohomologous(q: &Quandle, phi1: &Cocycle2, phi2: &Cocycle2) -> Result<bool> {
    if phi1.order() != q.order() {
        return Err(Error::ShapeMismatch {
            expected: format!("cocycle of order {}", q.order()),
            found: phi1.order().to_string(),
        });
    }
    let diff = phi1.sub(phi2)?;
    let m = diff.modulus();
    if m == 1 {
        return Ok(true);
    }
    let pairs = Pairs { n: q.order() };
    let delta = coboundary_matrix(q, m);
    let s = smith(&delta, true);
    let w = s
        .left
        .as_ref()
        .expect("left transform")
        .mul_vec(&pairs.to_cochain(diff.values()));
    // D z = w is solvable iff each w_i lies in d_i Z_m (and w_i = 0 past the diagonal).
    Ok(w.iter().enumerate().all(|(i, &wi)| match s.diagonal.get(i) {
        Some(&d) if d != 0 => wi % d == 0,
        _ => wi == 0,
    }))
}
