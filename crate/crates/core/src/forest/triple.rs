//! Tree triples, forest triples and their statistics.

use std::fmt;

use super::nbc::{for_each_nbc_forest, forest_inversions, forest_trees, nbc_check, Tree};
use crate::error::{Error, Result};
use crate::esym::{compositions, Partition};
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TreeTriple {
    pub tree: Tree,
    pub alpha: Vec<usize>,
    pub r: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ForestTriple {
    pub triples: Vec<TreeTriple>,
}

/// Constraints cutting `FT^(i)(G + P_j)` out of `FT(G + P_j)`, where `n` is
/// the vertex count of `G`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FtFilter {
    pub n: usize,
    pub i: usize,
    pub j: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FtStats {
    pub type_: Partition,
    pub reduced_type: Partition,
    pub sign: i32,
    /// Present only when the graph is an NUIG.
    pub weight: Option<usize>,
}

impl ForestTriple {
    pub fn vertex_count(&self) -> usize {
        self.triples.iter().map(|t| t.tree.len()).sum()
    }

    pub fn index_containing(&self, v: usize) -> Option<usize> {
        self.triples.iter().position(|t| t.tree.contains(v))
    }

    pub fn type_(&self) -> Partition {
        Partition::new(self.triples.iter().flat_map(|t| t.alpha.iter().copied()))
    }

    pub fn reduced_type(&self) -> Partition {
        let first = self.triples[0].alpha[0];
        self.type_()
            .remove_part(first)
            .expect("type contains the first part")
    }

    pub fn sign(&self) -> i32 {
        let e: usize = self.triples.iter().map(|t| t.alpha.len() - 1).sum();
        if e.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    fn trees(&self) -> Vec<Tree> {
        self.triples.iter().map(|t| t.tree.clone()).collect()
    }

    /// `inv_G(list(T_1) ... list(T_m)) + sum (r_i - 1)`.
    pub fn weight(&self, g: &Graph) -> Result<usize> {
        g.require_nuig()?;
        let r: usize = self.triples.iter().map(|t| t.r - 1).sum();
        Ok(forest_inversions(g, &self.trees()) + r)
    }

    /// Structural validity as a forest triple of `g`.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let bad = |m: String| Err(Error::Malformed(m));
        let mut seen = vec![false; g.n() + 1];
        let mut last_min = 0;
        for t in &self.triples {
            if t.tree.is_empty() || t.tree.min_vertex() <= last_min {
                return bad("trees not ordered by minimum vertex".into());
            }
            last_min = t.tree.min_vertex();
            for &v in &t.tree.vertices {
                if v == 0 || v > g.n() || seen[v] {
                    return bad(format!("vertex {v} repeated or out of range"));
                }
                seen[v] = true;
            }
            if !t.tree.is_tree() {
                return bad(format!("{:?} is not a tree", t.tree));
            }
            if !nbc_check(g, &t.tree.edges) {
                return bad(format!("{:?} contains a broken circuit", t.tree));
            }
            if t.alpha.iter().sum::<usize>() != t.tree.len() || t.alpha.contains(&0) {
                return bad(format!("composition {:?} does not fit the tree", t.alpha));
            }
            if t.r < 1 || t.r > t.alpha[0] {
                return bad(format!("r = {} outside 1..={}", t.r, t.alpha[0]));
            }
        }
        if seen[1..].iter().any(|s| !s) {
            return bad("trees do not cover every vertex".into());
        }
        Ok(())
    }

    /// Membership in `FT^(i)(G + P_j)`; `g` is `G + P_j` itself.
    pub fn satisfies(&self, filter: FtFilter) -> bool {
        let FtFilter { n, i, j } = filter;
        let first = &self.triples[0];
        if first.alpha[0] != i || first.r != 1 {
            return false;
        }
        let Some(k) = self.index_containing(n) else {
            return false;
        };
        let t = &self.triples[k];
        (n..n + j).all(|v| t.tree.contains(v)) && *t.alpha.last().unwrap() >= j
    }
}

impl fmt::Display for ForestTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .triples
            .iter()
            .map(|t| {
                let e: Vec<String> = t.tree.edges.iter().map(|(u, v)| format!("{u}-{v}")).collect();
                let a: Vec<String> = t.alpha.iter().map(|x| x.to_string()).collect();
                format!(
                    "({{{}}}; [{}]; a={}; r={})",
                    t.tree
                        .vertices
                        .iter()
                        .map(|v| v.to_string())
                        .collect::<Vec<_>>()
                        .join(","),
                    e.join(","),
                    a.join("."),
                    t.r
                )
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Type, reduced type, sign and (for NUIGs) weight.
pub fn ft_stats(f: &ForestTriple, g: &Graph) -> FtStats {
    FtStats {
        type_: f.type_(),
        reduced_type: f.reduced_type(),
        sign: f.sign(),
        weight: if g.is_nuig() { f.weight(g).ok() } else { None },
    }
}

/// Per-tree constraints applied by the explicit enumerator.
#[derive(Clone, Copy)]
struct Slot {
    first_part: Option<usize>,
    fix_r: bool,
    min_last: usize,
}

/// Stream the forest triples of `g` in canonical order: forests as produced
/// by the NBC search, then compositions lexicographically, then `r`
/// ascending. With a filter, `g` must already be `G + P_j` and only members
/// of `FT^(i)(G + P_j)` are produced.
pub fn for_each_forest_triple<F: FnMut(&ForestTriple)>(
    g: &Graph,
    filter: Option<FtFilter>,
    mut visit: F,
) {
    let mut forests = Vec::new();
    for_each_nbc_forest(g, |edges| forests.push(forest_trees(g.n(), edges)));
    forests.sort();
    for trees in forests {
        let slots: Vec<Slot> = match filter {
            None => vec![
                Slot {
                    first_part: None,
                    fix_r: false,
                    min_last: 1,
                };
                trees.len()
            ],
            Some(FtFilter { n, i, j }) => {
                let k = trees.iter().position(|t| t.contains(n)).unwrap();
                if !(n..n + j).all(|v| trees[k].contains(v)) {
                    continue;
                }
                (0..trees.len())
                    .map(|idx| Slot {
                        first_part: (idx == 0).then_some(i),
                        fix_r: idx == 0,
                        min_last: if idx == k { j } else { 1 },
                    })
                    .collect()
            }
        };
        let options: Vec<Vec<(Vec<usize>, usize)>> = trees
            .iter()
            .zip(&slots)
            .map(|(t, s)| {
                let mut opts = Vec::new();
                for alpha in compositions(t.len()) {
                    if s.first_part.is_some_and(|i| alpha[0] != i)
                        || *alpha.last().unwrap() < s.min_last
                    {
                        continue;
                    }
                    let rmax = if s.fix_r { 1 } else { alpha[0] };
                    for r in 1..=rmax {
                        opts.push((alpha.clone(), r));
                    }
                }
                opts
            })
            .collect();
        if options.iter().any(|o| o.is_empty()) {
            continue;
        }
        let mut pick = vec![0usize; trees.len()];
        'odometer: loop {
            let triples = trees
                .iter()
                .zip(&pick)
                .zip(&options)
                .map(|((t, &p), o)| TreeTriple {
                    tree: t.clone(),
                    alpha: o[p].0.clone(),
                    r: o[p].1,
                })
                .collect();
            visit(&ForestTriple { triples });
            let mut pos = trees.len();
            loop {
                if pos == 0 {
                    break 'odometer;
                }
                pos -= 1;
                pick[pos] += 1;
                if pick[pos] < options[pos].len() {
                    break;
                }
                pick[pos] = 0;
            }
        }
    }
}

/// Collected form of [`for_each_forest_triple`] for `FT^(i)(G + P_j)`.
pub fn enumerate_forest_triples(
    g: &Graph,
    i: usize,
    j: usize,
    limits: &crate::Limits,
) -> Result<Vec<ForestTriple>> {
    let total = g.n() + j - 1;
    if total > limits.forest_vertices {
        return Err(Error::CostGuard {
            what: "forest-triple enumeration",
            limit: limits.forest_vertices,
            got: total,
        });
    }
    let gp = g.glue(&Graph::path(j))?;
    let mut out = Vec::new();
    for_each_forest_triple(
        &gp,
        Some(FtFilter { n: g.n(), i, j }),
        |f| out.push(f.clone()),
    );
    Ok(out)
}

/// Every forest triple of `g`.
pub fn all_forest_triples(g: &Graph) -> Vec<ForestTriple> {
    let mut out = Vec::new();
    for_each_forest_triple(g, None, |f| out.push(f.clone()));
    out
}
