//! Aggregated forest data for fast matrix entries.
//!
//! A member of `FT^(i)(G + P_j)` is an NBC forest of `G` (the path vertices
//! hang off the tree containing `n` and are bridges) together with
//! independent composition choices per tree. Grouping forests by the sizes
//! of the tree containing 1, the tree containing `n` and the remaining trees
//! leaves a polynomial in `q` per group, and the composition choices sum to
//! a product of per-tree factors.

use std::collections::{BTreeMap, HashMap};

use super::nbc::{forest_inversions, forest_trees, for_each_nbc_forest_from, nbc_frontier, UnionFind};
use crate::error::{Error, Result};
use crate::esym::{compositions, ESym, Partition};
use crate::graph::Graph;
use crate::par::Exec;
use crate::qalg::{QPoly, QRat};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProfileKey {
    /// Size of the block containing vertex 1.
    pub first: usize,
    /// Size of the block containing vertex `n`.
    pub last: usize,
    /// Vertex 1 and vertex `n` share a block.
    pub same: bool,
    /// Sizes of the other blocks, sorted.
    pub others: Vec<usize>,
}

/// Weighted count of vertex partitions by block-size profile.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Profile {
    pub n: usize,
    pub with_q: bool,
    pub classes: BTreeMap<ProfileKey, QPoly>,
}

fn key_of(n: usize, blocks: &[Vec<usize>]) -> ProfileKey {
    let fi = blocks.iter().position(|b| b.contains(&1)).unwrap();
    let li = blocks.iter().position(|b| b.contains(&n)).unwrap();
    let mut others: Vec<usize> = blocks
        .iter()
        .enumerate()
        .filter(|(k, _)| *k != fi && *k != li)
        .map(|(_, b)| b.len())
        .collect();
    others.sort_unstable();
    ProfileKey {
        first: blocks[fi].len(),
        last: blocks[li].len(),
        same: fi == li,
        others,
    }
}

fn merge(into: &mut BTreeMap<ProfileKey, Vec<i64>>, from: BTreeMap<ProfileKey, Vec<i64>>) {
    for (k, v) in from {
        let dst = into.entry(k).or_default();
        if dst.len() < v.len() {
            dst.resize(v.len(), 0);
        }
        for (a, b) in dst.iter_mut().zip(v) {
            *a += b;
        }
    }
}

fn bump(map: &mut BTreeMap<ProfileKey, Vec<i64>>, key: ProfileKey, deg: usize, by: i64) {
    let v = map.entry(key).or_default();
    if v.len() <= deg {
        v.resize(deg + 1, 0);
    }
    v[deg] += by;
}

fn finish(n: usize, with_q: bool, raw: BTreeMap<ProfileKey, Vec<i64>>) -> Profile {
    Profile {
        n,
        with_q,
        classes: raw
            .into_iter()
            .map(|(k, v)| (k, QPoly::from_i64s(&v)))
            .filter(|(_, p)| !p.is_zero())
            .collect(),
    }
}

impl Profile {
    /// NBC forests of `g`, weighted by `q^inv` when `with_q`.
    pub fn of_forests(g: &Graph, with_q: bool, exec: Exec) -> Result<Profile> {
        if with_q {
            g.require_nuig()?;
        }
        let n = g.n();
        let edges = g.edges();
        let frontier = nbc_frontier(g, edges.len().min(10));
        let parts = exec.map(&frontier, |state| {
            let mut local = BTreeMap::new();
            for_each_nbc_forest_from(&edges, state.clone(), &mut |forest| {
                let trees = forest_trees(n, forest);
                let deg = if with_q { forest_inversions(g, &trees) } else { 0 };
                let blocks: Vec<Vec<usize>> = trees.into_iter().map(|t| t.vertices).collect();
                bump(&mut local, key_of(n, &blocks), deg, 1);
            });
            local
        });
        let mut raw = BTreeMap::new();
        for p in parts {
            merge(&mut raw, p);
        }
        Ok(finish(n, with_q, raw))
    }

    /// Vertex partitions of `g` into blocks inducing connected subgraphs,
    /// each block weighted by the signed count of its connected spanning
    /// edge sets, sign `(-1)^(|E'| - |V| + 1)`.
    pub fn of_subgraphs(g: &Graph, exec: Exec) -> Result<Profile> {
        let n = g.n();
        let weights = connected_spanning_weights(g, exec);
        let mut raw = BTreeMap::new();
        let full: u64 = (1u64 << n) - 1;
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        fn rec(
            rest: u64,
            n: usize,
            weights: &[i64],
            acc: i64,
            blocks: &mut Vec<Vec<usize>>,
            raw: &mut BTreeMap<ProfileKey, Vec<i64>>,
        ) {
            if rest == 0 {
                bump(raw, key_of(n, blocks), 0, acc);
                return;
            }
            let low = rest & rest.wrapping_neg();
            let others = rest & !low;
            let mut sub = others;
            loop {
                let block = sub | low;
                let w = weights[block as usize];
                if w != 0 {
                    blocks.push((1..=n).filter(|v| (block >> (v - 1)) & 1 == 1).collect());
                    rec(rest & !block, n, weights, acc * w, blocks, raw);
                    blocks.pop();
                }
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & others;
            }
        }
        rec(full, n, &weights, 1, &mut blocks, &mut raw);
        Ok(finish(n, false, raw))
    }

    /// The `(i, j)` entry of the forest-triple matrix, `i, j >= 1`.
    pub fn entry(&self, i: usize, j: usize) -> ESym {
        let mut fx = Factors::new(self.with_q);
        let mut out = ESym::zero();
        if i >= self.n + j {
            return out;
        }
        for (key, c) in &self.classes {
            let head = if key.same {
                fx.both(i, j, key.first + j - 1)
            } else {
                let b = fx.first(i, key.first);
                if b.is_zero() {
                    continue;
                }
                &b * &fx.last(j, key.last + j - 1)
            };
            if head.is_zero() {
                continue;
            }
            let rest = fx.free_product(&key.others);
            out.add_assign(&(&head * &rest).scale_poly(c));
        }
        out
    }

    /// `sum q^inv e_type` over every forest triple.
    pub fn x(&self) -> ESym {
        let mut fx = Factors::new(self.with_q);
        let mut out = ESym::zero();
        for (key, c) in &self.classes {
            let mut sizes = key.others.clone();
            sizes.push(key.first);
            if !key.same {
                sizes.push(key.last);
            }
            out.add_assign(&fx.free_product(&sizes).scale_poly(c));
        }
        out
    }
}

/// Signed count of connected spanning edge sets for every vertex subset.
fn connected_spanning_weights(g: &Graph, exec: Exec) -> Vec<i64> {
    let n = g.n();
    let edges = g.edges();
    exec.map_range(1usize << n, |mask| {
        let mask = mask as u64;
        if mask == 0 {
            return 0;
        }
        let inside: Vec<(usize, usize)> = edges
            .iter()
            .copied()
            .filter(|&(u, v)| (mask >> (u - 1)) & 1 == 1 && (mask >> (v - 1)) & 1 == 1)
            .collect();
        let size = mask.count_ones() as i64;
        if inside.len() <= DIRECT_EDGE_LIMIT {
            direct_weight(n, &inside, size)
        } else {
            recursive_weight(g, mask)
        }
    })
}

const DIRECT_EDGE_LIMIT: usize = 18;

fn direct_weight(n: usize, inside: &[(usize, usize)], size: i64) -> i64 {
    let mut total = 0;
    for sel in 0u64..(1 << inside.len()) {
        let mut uf = UnionFind::new(n + 1);
        let mut comps = size;
        for (b, &(u, v)) in inside.iter().enumerate() {
            if (sel >> b) & 1 == 1 && uf.union(u, v) {
                comps -= 1;
            }
        }
        if comps == 1 {
            let e = sel.count_ones() as i64;
            total += if (e - size + 1) % 2 == 0 { 1 } else { -1 };
        }
    }
    total
}

/// Same quantity by inclusion-exclusion on the block of the least vertex:
/// summing `(-1)^|E'|` over all edge sets of `G[S]` gives `[E(G[S]) empty]`,
/// and every edge set splits uniquely by the component of the least vertex.
fn recursive_weight(g: &Graph, mask: u64) -> i64 {
    fn has_edges(g: &Graph, m: u64) -> bool {
        (1..=g.n()).any(|v| (m >> (v - 1)) & 1 == 1 && g.neighbours(v) & m != 0)
    }
    // sum of (-1)^|E'| over connected spanning E' of G[m]
    fn signed(g: &Graph, m: u64, memo: &mut HashMap<u64, i64>) -> i64 {
        if let Some(&v) = memo.get(&m) {
            return v;
        }
        let low = m & m.wrapping_neg();
        let others = m & !low;
        let mut total = if has_edges(g, m) { 0 } else { 1 };
        let mut sub = others;
        loop {
            sub = sub.wrapping_sub(1) & others;
            if sub == others {
                break;
            }
            let block = sub | low;
            if !has_edges(g, m & !block) {
                total -= signed(g, block, memo);
            }
        }
        memo.insert(m, total);
        total
    }
    let mut memo = HashMap::new();
    let s = signed(g, mask, &mut memo);
    if mask.count_ones() % 2 == 1 {
        s
    } else {
        -s
    }
}

/// Composition sums attached to a single block.
pub(crate) struct Factors {
    with_q: bool,
    free: HashMap<usize, ESym>,
    products: HashMap<Vec<usize>, ESym>,
}

impl Factors {
    pub(crate) fn new(with_q: bool) -> Self {
        Factors {
            with_q,
            free: HashMap::new(),
            products: HashMap::new(),
        }
    }

    fn qint(&self, k: usize) -> QPoly {
        if self.with_q {
            QPoly::q_integer(k)
        } else {
            QPoly::constant(k as i64)
        }
    }

    fn sign(len: usize) -> i64 {
        if len % 2 == 1 {
            1
        } else {
            -1
        }
    }

    /// `sum_{a |= m} (-1)^(l-1) [a_1] e_a`: a block with free `r`.
    pub(crate) fn free(&mut self, m: usize) -> ESym {
        if let Some(e) = self.free.get(&m) {
            return e.clone();
        }
        let mut out = ESym::zero();
        for a in compositions(m) {
            let c = self.qint(a[0]).scale(&Self::sign(a.len()).into());
            out.add_term(Partition::new(a.iter().copied()), &QRat::from_poly(c));
        }
        self.free.insert(m, out.clone());
        out
    }

    pub(crate) fn free_product(&mut self, sizes: &[usize]) -> ESym {
        let mut key = sizes.to_vec();
        key.sort_unstable();
        if let Some(e) = self.products.get(&key) {
            return e.clone();
        }
        let mut out = ESym::one();
        for &s in &key {
            out = &out * &self.free(s);
        }
        self.products.insert(key, out.clone());
        out
    }

    /// Block containing 1 only: `a_1 = i`, `r = 1`, first part removed.
    pub(crate) fn first(&self, i: usize, m: usize) -> ESym {
        let mut out = ESym::zero();
        for a in compositions(m) {
            if a[0] == i {
                out.add_term(
                    Partition::new(a[1..].iter().copied()),
                    &QRat::from_int(Self::sign(a.len())),
                );
            }
        }
        out
    }

    /// Block containing `n` and the path only: `a_l >= j`, free `r`.
    pub(crate) fn last(&self, j: usize, m: usize) -> ESym {
        let mut out = ESym::zero();
        for a in compositions(m) {
            if *a.last().unwrap() >= j {
                let c = self.qint(a[0]).scale(&Self::sign(a.len()).into());
                out.add_term(Partition::new(a.iter().copied()), &QRat::from_poly(c));
            }
        }
        out
    }

    /// One block holding 1, `n` and the path: all constraints together.
    pub(crate) fn both(&self, i: usize, j: usize, m: usize) -> ESym {
        let mut out = ESym::zero();
        for a in compositions(m) {
            if a[0] == i && *a.last().unwrap() >= j {
                out.add_term(
                    Partition::new(a[1..].iter().copied()),
                    &QRat::from_int(Self::sign(a.len())),
                );
            }
        }
        out
    }
}

/// Reject `|G| + j - 1` beyond the forest cost guard.
pub(crate) fn guard(n: usize, j: usize, limit: usize, what: &'static str) -> Result<()> {
    let got = n + j.max(1) - 1;
    if got > limit {
        return Err(Error::CostGuard { what, limit, got });
    }
    Ok(())
}
