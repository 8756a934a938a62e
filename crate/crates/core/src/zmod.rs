//! Dense linear algebra over `Z_m`.
//!
//! Smith normal form is computed with unimodular integer row and column
//! operations whose entries are kept reduced mod `m`. Reducing an entry mod
//! `m` is the same as adding a multiple of a row of `m * I`, so the result is
//! the Smith form of the matrix with `m * I` adjoined, and every diagonal
//! entry is normalized to a divisor of `m` (with `0` standing for `m`).

use crate::cocycle::gcd_u64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModMatrix {
    rows: usize,
    cols: usize,
    modulus: u64,
    data: Vec<u64>,
}

#[inline]
fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// Inverse of a unit mod `m` (`m >= 1`).
pub fn inverse_mod(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let (mut old_r, mut r) = (a as i128 % m as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(m as i128) as u64)
}

/// A unit `u` with `u * gcd(p, m) = p (mod m)`.
fn unit_part(p: u64, m: u64) -> u64 {
    let g = gcd_u64(p, m);
    let step = m / g;
    let mut u = (p / g) % step.max(1);
    if step == 1 {
        return 1;
    }
    while gcd_u64(u, m) != 1 {
        u += step;
    }
    u % m
}

impl ModMatrix {
    pub fn zeros(rows: usize, cols: usize, modulus: u64) -> Self {
        assert!(modulus >= 1);
        ModMatrix {
            rows,
            cols,
            modulus,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize, modulus: u64) -> Self {
        let mut m = Self::zeros(n, n, modulus);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<u64>], cols: usize, modulus: u64) -> Self {
        let mut out = Self::zeros(rows.len(), cols, modulus);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols);
            for (j, &v) in r.iter().enumerate() {
                out.set(i, j, v);
            }
        }
        out
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.data[i * self.cols + j] = v % self.modulus;
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<u64> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn mul_vec(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.cols);
        let m = self.modulus;
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(0, |acc, (&a, &b)| (acc + mulmod(a, b, m)) % m)
            })
            .collect()
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.rows);
        let m = self.modulus;
        let mut out = vec![0; self.cols];
        for (i, &c) in v.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (o, &a) in out.iter_mut().zip(self.row(i)) {
                *o = (*o + mulmod(c, a, m)) % m;
            }
        }
        out
    }

    pub fn mul(&self, other: &ModMatrix) -> ModMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = ModMatrix::zeros(self.rows, other.cols, self.modulus);
        for i in 0..self.rows {
            let r = other.vec_mul(self.row(i));
            out.data[i * other.cols..(i + 1) * other.cols].copy_from_slice(&r);
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// `row[dst] += k * row[src]`.
    fn add_row(&mut self, dst: usize, src: usize, k: u64) {
        let m = self.modulus;
        let k = k % m;
        if k == 0 {
            return;
        }
        for j in 0..self.cols {
            let v = self.data[src * self.cols + j];
            let d = &mut self.data[dst * self.cols + j];
            *d = (*d + mulmod(k, v, m)) % m;
        }
    }

    /// `col[dst] += k * col[src]`.
    fn add_col(&mut self, dst: usize, src: usize, k: u64) {
        let m = self.modulus;
        let k = k % m;
        if k == 0 {
            return;
        }
        for i in 0..self.rows {
            let v = self.data[i * self.cols + src];
            let d = &mut self.data[i * self.cols + dst];
            *d = (*d + mulmod(k, v, m)) % m;
        }
    }

    fn scale_row(&mut self, r: usize, u: u64) {
        let m = self.modulus;
        for j in 0..self.cols {
            let d = &mut self.data[r * self.cols + j];
            *d = mulmod(*d, u, m);
        }
    }

    fn scale_col(&mut self, c: usize, u: u64) {
        let m = self.modulus;
        for i in 0..self.rows {
            let d = &mut self.data[i * self.cols + c];
            *d = mulmod(*d, u, m);
        }
    }
}

/// `P A Q = D` with `D` diagonal, `d_0 | d_1 | ...`, each `d_i` a divisor of
/// `m` or `0`. `Q` and `Q^-1` are always tracked, `P` on request.
#[derive(Debug, Clone)]
pub struct Smith {
    pub diagonal: Vec<u64>,
    pub left: Option<ModMatrix>,
    pub right: ModMatrix,
    pub right_inverse: ModMatrix,
}

impl Smith {
    /// Order of the kernel factor in coordinate `i` of `Q^-1 x`: the number
    /// of `y in Z_m` with `d_i y = 0`. Columns past the diagonal are free.
    pub fn kernel_order(&self, i: usize, m: u64) -> u64 {
        match self.diagonal.get(i) {
            Some(&d) if d != 0 => d,
            _ => m,
        }
    }
}

struct Work {
    a: ModMatrix,
    left: Option<ModMatrix>,
    right: ModMatrix,
    right_inv: ModMatrix,
}

impl Work {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        if let Some(p) = &mut self.left {
            p.swap_rows(i, j);
        }
    }

    fn add_row(&mut self, dst: usize, src: usize, k: u64) {
        self.a.add_row(dst, src, k);
        if let Some(p) = &mut self.left {
            p.add_row(dst, src, k);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        self.right.swap_cols(i, j);
        self.right_inv.swap_rows(i, j);
    }

    fn add_col(&mut self, dst: usize, src: usize, k: u64) {
        let m = self.a.modulus;
        self.a.add_col(dst, src, k);
        self.right.add_col(dst, src, k);
        // C = I + k E_(src,dst); C^-1 Q^-1 subtracts k * row dst from row src.
        self.right_inv.add_row(src, dst, (m - k % m) % m);
    }

    fn scale_col(&mut self, c: usize, u: u64) {
        let m = self.a.modulus;
        let inv = inverse_mod(u, m).expect("unit");
        self.a.scale_col(c, u);
        self.right.scale_col(c, u);
        self.right_inv.scale_row(c, inv);
    }
}

/// Smith normal form of `a` over `Z_m`.
pub fn smith(a: &ModMatrix, track_left: bool) -> Smith {
    let m = a.modulus;
    let (rows, cols) = (a.rows, a.cols);
    let mut w = Work {
        a: a.clone(),
        left: track_left.then(|| ModMatrix::identity(rows, m)),
        right: ModMatrix::identity(cols, m),
        right_inv: ModMatrix::identity(cols, m),
    };
    let limit = rows.min(cols);
    let mut diagonal = Vec::with_capacity(limit);
    for t in 0..limit {
        // Smallest nonzero entry of the trailing block becomes the pivot.
        let mut best: Option<(u64, usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                let v = w.a.get(i, j);
                if v != 0 && best.map_or(true, |(b, _, _)| v < b) {
                    best = Some((v, i, j));
                }
            }
        }
        let Some((_, pi, pj)) = best else {
            diagonal.extend(std::iter::repeat(0).take(limit - t));
            break;
        };
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);
        'pivot: loop {
            let p = w.a.get(t, t);
            let g = gcd_u64(p, m);
            if p != g {
                let u = unit_part(p, m);
                w.scale_col(t, inverse_mod(u, m).expect("unit"));
            }
            let g = w.a.get(t, t);
            debug_assert_eq!(m % g, 0);
            for i in t + 1..rows {
                let e = w.a.get(i, t);
                if e != 0 {
                    w.add_row(i, t, m - (e / g) % m);
                    if w.a.get(i, t) != 0 {
                        w.swap_rows(t, i);
                        continue 'pivot;
                    }
                }
            }
            for j in t + 1..cols {
                let e = w.a.get(t, j);
                if e != 0 {
                    w.add_col(j, t, m - (e / g) % m);
                    if w.a.get(t, j) != 0 {
                        w.swap_cols(t, j);
                        continue 'pivot;
                    }
                }
            }
            for i in t + 1..rows {
                for j in t + 1..cols {
                    if w.a.get(i, j) % g != 0 {
                        w.add_row(t, i, 1);
                        continue 'pivot;
                    }
                }
            }
            break;
        }
        diagonal.push(w.a.get(t, t));
    }
    Smith {
        diagonal,
        left: w.left,
        right: w.right,
        right_inverse: w.right_inv,
    }
}

/// Row echelon form over `Z_m`, built one row at a time with Euclidean
/// row combinations. Keeps at most one row per pivot column, so tall
/// systems with many redundant equations stay small.
#[derive(Debug, Clone)]
pub struct RowEchelon {
    cols: usize,
    modulus: u64,
    basis: Vec<Vec<u64>>,
    pivot_row: Vec<Option<usize>>,
}

impl RowEchelon {
    pub fn new(cols: usize, modulus: u64) -> Self {
        RowEchelon {
            cols,
            modulus,
            basis: Vec::new(),
            pivot_row: vec![None; cols],
        }
    }

    pub fn insert(&mut self, mut row: Vec<u64>) {
        assert_eq!(row.len(), self.cols);
        let m = self.modulus;
        for v in row.iter_mut() {
            *v %= m;
        }
        let mut start = 0;
        loop {
            let Some(c) = (start..self.cols).find(|&j| row[j] != 0) else {
                return;
            };
            let Some(k) = self.pivot_row[c] else {
                self.pivot_row[c] = Some(self.basis.len());
                self.basis.push(row);
                return;
            };
            let pivot = &mut self.basis[k];
            while row[c] != 0 {
                let q = pivot[c] / row[c];
                if q != 0 {
                    let neg = m - q % m;
                    for j in c..self.cols {
                        pivot[j] = (pivot[j] + mulmod(neg, row[j], m)) % m;
                    }
                }
                std::mem::swap(pivot, &mut row);
            }
            start = c + 1;
        }
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn into_matrix(self) -> ModMatrix {
        ModMatrix::from_rows(&self.basis, self.cols, self.modulus)
    }
}
