//! Quandle isomorphism by backtracking over a generating set.
//!
//! Every element gets a profile (cycle type of its translation, size of its
//! inn-fiber, left-translation statistics). A map is grown by choosing
//! images for a generating sequence of the source among elements with equal
//! profiles, then closing under the operation; conflicts prune the branch.

use std::collections::HashMap;

use crate::quandle::{Quandle, QuandleMap};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Profile {
    cycle_type: Vec<usize>,
    inn_fiber: usize,
    left_fixed: usize,
    left_distinct: usize,
    orbit_size: usize,
}

fn profiles(q: &Quandle) -> Vec<Profile> {
    let n = q.order();
    let translations = q.translations();
    let mut fiber_size: HashMap<&[usize], usize> = HashMap::new();
    for t in &translations {
        *fiber_size.entry(t.images()).or_default() += 1;
    }
    let mut orbit_size = vec![0; n];
    for o in q.orbits() {
        for &x in &o {
            orbit_size[x] = o.len();
        }
    }
    (0..n)
        .map(|a| {
            let mut row: Vec<usize> = (0..n).map(|b| q.op(a, b)).collect();
            let left_fixed = row.iter().filter(|&&c| c == a).count();
            row.sort_unstable();
            row.dedup();
            Profile {
                cycle_type: translations[a].cycle_type(),
                inn_fiber: fiber_size[translations[a].images()],
                left_fixed,
                left_distinct: row.len(),
                orbit_size: orbit_size[a],
            }
        })
        .collect()
}

/// Greedy generating sequence: each new element lies outside the
/// subquandle generated by the previous ones.
fn generating_sequence(q: &Quandle) -> Vec<usize> {
    let n = q.order();
    let mut inside = vec![false; n];
    let mut members: Vec<usize> = Vec::new();
    let mut gens = Vec::new();
    while let Some(g) = (0..n).find(|&x| !inside[x]) {
        gens.push(g);
        inside[g] = true;
        members.push(g);
        let mut changed = true;
        while changed {
            changed = false;
            let snapshot = members.clone();
            for &a in &snapshot {
                for &b in &snapshot {
                    let c = q.op(a, b);
                    if !inside[c] {
                        inside[c] = true;
                        members.push(c);
                        changed = true;
                    }
                }
            }
        }
    }
    gens
}

struct Search<'a> {
    src: &'a Quandle,
    dst: &'a Quandle,
    src_profile: Vec<Profile>,
    dst_profile: Vec<Profile>,
    gens: Vec<usize>,
}

#[derive(Clone)]
struct Partial {
    map: Vec<Option<usize>>,
    used: Vec<bool>,
    mapped: Vec<usize>,
}

impl Search<'_> {
    /// Adds `a -> b` and closes under the operation. `false` on conflict.
    fn extend(&self, p: &mut Partial, a: usize, b: usize) -> bool {
        if !self.assign(p, a, b) {
            return false;
        }
        let mut done = 0;
        // Pairs (x, y) with both indices < done have been checked.
        while done < p.mapped.len() {
            let hi = p.mapped.len();
            for i in 0..hi {
                for j in 0..hi {
                    if i < done && j < done {
                        continue;
                    }
                    let (x, y) = (p.mapped[i], p.mapped[j]);
                    let image = self.dst.op(p.map[x].unwrap(), p.map[y].unwrap());
                    if !self.assign(p, self.src.op(x, y), image) {
                        return false;
                    }
                }
            }
            done = hi;
        }
        true
    }

    fn assign(&self, p: &mut Partial, a: usize, b: usize) -> bool {
        match p.map[a] {
            Some(existing) => existing == b,
            None => {
                if p.used[b] || self.src_profile[a] != self.dst_profile[b] {
                    return false;
                }
                p.map[a] = Some(b);
                p.used[b] = true;
                p.mapped.push(a);
                true
            }
        }
    }

    fn run(&self, depth: usize, p: Partial) -> Option<Vec<usize>> {
        if depth == self.gens.len() {
            return Some(p.map.into_iter().map(|x| x.unwrap()).collect());
        }
        let g = self.gens[depth];
        if let Some(image) = p.map[g] {
            let mut next = p;
            return if self.extend(&mut next, g, image) {
                self.run(depth + 1, next)
            } else {
                None
            };
        }
        for candidate in 0..self.dst.order() {
            if p.used[candidate] || self.src_profile[g] != self.dst_profile[candidate] {
                continue;
            }
            let mut next = p.clone();
            if self.extend(&mut next, g, candidate) {
                if let Some(found) = self.run(depth + 1, next) {
                    return Some(found);
                }
            }
        }
        None
    }
}

/// An isomorphism `q1 -> q2` if one exists.
pub fn isomorphism(q1: &Quandle, q2: &Quandle) -> Option<QuandleMap> {
    if q1.order() != q2.order() {
        return None;
    }
    let src_profile = profiles(q1);
    let dst_profile = profiles(q2);
    let mut a = src_profile.clone();
    let mut b = dst_profile.clone();
    a.sort();
    b.sort();
    if a != b {
        return None;
    }
    let search = Search {
        src: q1,
        dst: q2,
        src_profile,
        dst_profile,
        gens: generating_sequence(q1),
    };
    let n = q1.order();
    let start = Partial {
        map: vec![None; n],
        used: vec![false; n],
        mapped: Vec::new(),
    };
    let images = search.run(0, start)?;
    let map = QuandleMap::new(q1.clone(), q2.clone(), images).ok()?;
    debug_assert!(map.is_homomorphism() && map.is_bijective());
    if map.is_homomorphism() && map.is_bijective() {
        Some(map)
    } else {
        None
    }
}

pub fn are_isomorphic(q1: &Quandle, q2: &Quandle) -> bool {
    isomorphism(q1, q2).is_some()
}
