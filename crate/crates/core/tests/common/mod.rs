//! Brute-force oracles that share no code paths with the library engines
//! beyond the quandle table itself.

#![allow(dead_code)]

use std::collections::HashSet;

use forge_core::{are_isomorphic, Quandle};

/// Every quandle on `0..n` up to isomorphism, by enumerating columns that
/// are permutations fixing their own index.
pub fn all_quandles(n: usize) -> Vec<Quandle> {
    let columns = permutations_fixing_each(n);
    let mut found: Vec<Quandle> = Vec::new();
    let mut choice = vec![0usize; n];
    loop {
        let mut rows = vec![vec![0; n]; n];
        for b in 0..n {
            for a in 0..n {
                rows[a][b] = columns[b][choice[b]][a];
            }
        }
        if let Ok(q) = Quandle::from_rows(&rows) {
            if !found.iter().any(|f| are_isomorphic(f, &q)) {
                found.push(q);
            }
        }
        let mut k = 0;
        loop {
            if k == n {
                return found;
            }
            choice[k] += 1;
            if choice[k] < columns[k].len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}

/// For each `b`, all permutations of `0..n` fixing `b`.
fn permutations_fixing_each(n: usize) -> Vec<Vec<Vec<usize>>> {
    let all = permutations(n);
    (0..n)
        .map(|b| all.iter().filter(|p| p[b] == b).cloned().collect())
        .collect()
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Calls `f` on every function `0..len -> 0..m`.
pub fn for_each_function(len: usize, m: u64, mut f: impl FnMut(&[u64])) {
    let mut v = vec![0u64; len];
    loop {
        f(&v);
        let mut k = 0;
        loop {
            if k == len {
                return;
            }
            v[k] += 1;
            if v[k] < m {
                break;
            }
            v[k] = 0;
            k += 1;
        }
    }
}

/// Expands off-diagonal values into a row-major `n*n` table with zero
/// diagonal.
pub fn with_zero_diagonal(n: usize, off: &[u64]) -> Vec<u64> {
    let mut values = vec![0; n * n];
    let mut it = off.iter();
    for x in 0..n {
        for y in 0..n {
            if x != y {
                values[x * n + y] = *it.next().expect("n(n-1) values");
            }
        }
    }
    values
}

/// The cocycle identity checked literally, in the multiplicative form
/// `phi(x,y) phi(x,z)^-1 phi(x*y,z) phi(x*z,y*z)^-1 = 1` read additively.
pub fn oracle_is_cocycle(q: &Quandle, m: u64, values: &[u64]) -> bool {
    let n = q.order();
    let phi = |x: usize, y: usize| values[x * n + y] as i64;
    let m = m as i64;
    (0..n).all(|x| phi(x, x) % m == 0)
        && (0..n).all(|x| {
            (0..n).all(|y| {
                (0..n).all(|z| {
                    let t = phi(x, y) - phi(x, z) + phi(q.op(x, y), z) - phi(q.op(x, z), q.op(y, z));
                    t.rem_euclid(m) == 0
                })
            })
        })
}

/// `(#cocycles, #coboundaries)` among diagonal-zero functions, by exhaustion.
pub fn oracle_cocycle_counts(q: &Quandle, m: u64) -> (u64, u64) {
    let n = q.order();
    let mut cocycles = 0u64;
    for_each_function(n * (n - 1), m, |off| {
        if oracle_is_cocycle(q, m, &with_zero_diagonal(n, off)) {
            cocycles += 1;
        }
    });
    let mut coboundaries: HashSet<Vec<u64>> = HashSet::new();
    for_each_function(n, m, |gamma| {
        let mut d = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                d.push((gamma[x] + m - gamma[q.op(x, y)]) % m);
            }
        }
        coboundaries.insert(d);
    });
    (cocycles, coboundaries.len() as u64)
}

/// Quandle axioms checked literally on a flat table.
pub fn oracle_is_quandle(n: usize, table: &[usize]) -> bool {
    let op = |a: usize, b: usize| table[a * n + b];
    let idempotent = (0..n).all(|a| op(a, a) == a);
    let invertible = (0..n).all(|b| {
        let mut seen = vec![false; n];
        (0..n).all(|a| !std::mem::replace(&mut seen[op(a, b)], true))
    });
    let distributive = (0..n)
        .all(|a| (0..n).all(|b| (0..n).all(|c| op(op(a, b), c) == op(op(a, c), op(b, c)))));
    idempotent && invertible && distributive
}

/// Counts colorings of the closure of a braid by labeling diagram arcs
/// (maximal over-passing segments) and checking every crossing relation.
pub fn oracle_coloring_count(q: &Quandle, strands: usize, word: &[i32]) -> usize {
    // Segment ids: segment[k][p] is the piece at position p after k letters.
    let len = word.len();
    let id = |k: usize, p: usize| k * strands + p;
    let total = (len + 1) * strands;
    let mut parent: Vec<usize> = (0..total).collect();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        if parent[x] != x {
            let r = find(parent, parent[x]);
            parent[x] = r;
        }
        parent[x]
    }
    fn union(parent: &mut Vec<usize>, a: usize, b: usize) {
        let (ra, rb) = (find(parent, a), find(parent, b));
        parent[ra] = rb;
    }
    // (under-in, over, under-out, positive)
    let mut relations = Vec::new();
    for (k, &g) in word.iter().enumerate() {
        let i = g.unsigned_abs() as usize - 1;
        for p in 0..strands {
            if p != i && p != i + 1 {
                union(&mut parent, id(k, p), id(k + 1, p));
            }
        }
        if g > 0 {
            // The strand at i+1 passes over to position i.
            union(&mut parent, id(k, i + 1), id(k + 1, i));
            relations.push((id(k, i), id(k, i + 1), id(k + 1, i + 1), true));
        } else {
            // The strand at i passes over to position i+1.
            union(&mut parent, id(k, i), id(k + 1, i + 1));
            relations.push((id(k, i + 1), id(k, i), id(k + 1, i), false));
        }
    }
    for p in 0..strands {
        union(&mut parent, id(0, p), id(len, p));
    }
    let mut arcs: Vec<usize> = (0..total).map(|x| find(&mut parent, x)).collect();
    let mut labels = arcs.clone();
    labels.sort_unstable();
    labels.dedup();
    for a in arcs.iter_mut() {
        *a = labels.binary_search(a).expect("label");
    }
    let n = q.order();
    let mut count = 0;
    let mut colors = vec![0usize; labels.len()];
    loop {
        let ok = relations.iter().all(|&(under_in, over, under_out, positive)| {
            let (a, o, b) = (colors[arcs[under_in]], colors[arcs[over]], colors[arcs[under_out]]);
            if positive {
                q.op(a, o) == b
            } else {
                q.op(b, o) == a
            }
        });
        if ok {
            count += 1;
        }
        let mut k = 0;
        loop {
            if k == colors.len() {
                return count;
            }
            colors[k] += 1;
            if colors[k] < n {
                break;
            }
            colors[k] = 0;
            k += 1;
        }
    }
}
