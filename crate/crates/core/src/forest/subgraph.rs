//! Connected subgraph triples: forest triples with trees relaxed to
//! connected spanning edge sets.

use super::profile::{guard, Profile};
use super::triple::FtFilter;
use crate::error::Result;
use crate::esym::{compositions, ESym, Partition};
use crate::graph::Graph;
use crate::par::Exec;
use crate::qalg::QRat;
use crate::Limits;

/// Largest `|G| + j - 1` accepted by the explicit enumerator.
pub const EXPLICIT_LIMIT: usize = 7;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubgraphPart {
    pub vertices: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
    pub alpha: Vec<usize>,
    pub r: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubgraphTriple {
    pub parts: Vec<SubgraphPart>,
}

impl SubgraphTriple {
    /// `sum (l(alpha) - 1) + sum (|E| - |V| + 1)`, taken mod 2.
    pub fn sign(&self) -> i32 {
        let e: usize = self
            .parts
            .iter()
            .map(|p| p.alpha.len() - 1 + p.edges.len() + 1 - p.vertices.len())
            .sum();
        if e.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn type_(&self) -> Partition {
        Partition::new(self.parts.iter().flat_map(|p| p.alpha.iter().copied()))
    }

    pub fn reduced_type(&self) -> Partition {
        self.type_()
            .remove_part(self.parts[0].alpha[0])
            .expect("type contains the first part")
    }
}

fn connected(n: usize, vertices: u64, edges: &[(usize, usize)]) -> bool {
    let mut reach = vertices & vertices.wrapping_neg();
    loop {
        let mut next = reach;
        for &(u, v) in edges {
            let (bu, bv) = (1u64 << (u - 1), 1u64 << (v - 1));
            if reach & (bu | bv) != 0 {
                next |= bu | bv;
            }
        }
        if next == reach {
            break;
        }
        reach = next;
    }
    debug_assert!(n <= 64);
    reach == vertices
}

fn spanning_sets(g: &Graph, block: u64) -> Vec<Vec<(usize, usize)>> {
    let inside: Vec<(usize, usize)> = g
        .edges()
        .into_iter()
        .filter(|&(u, v)| (block >> (u - 1)) & 1 == 1 && (block >> (v - 1)) & 1 == 1)
        .collect();
    (0u64..1 << inside.len())
        .map(|sel| {
            inside
                .iter()
                .enumerate()
                .filter(|(b, _)| (sel >> b) & 1 == 1)
                .map(|(_, &e)| e)
                .collect::<Vec<_>>()
        })
        .filter(|es| connected(g.n(), block, es))
        .collect()
}

fn set_partitions(rest: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
    if rest == 0 {
        out.push(cur.clone());
        return;
    }
    let low = rest & rest.wrapping_neg();
    let others = rest & !low;
    let mut sub = others;
    loop {
        cur.push(sub | low);
        set_partitions(rest & !(sub | low), cur, out);
        cur.pop();
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & others;
    }
}

/// Every connected subgraph triple of `g`, or with a filter only the members
/// of `ST^(i)(G + P_j)` (then `g` is `G + P_j`). Blocks come ordered by
/// minimum vertex.
pub fn for_each_subgraph_triple<F: FnMut(&SubgraphTriple)>(
    g: &Graph,
    filter: Option<FtFilter>,
    mut visit: F,
) {
    let n = g.n();
    let mut partitions = Vec::new();
    set_partitions((1u64 << n) - 1, &mut Vec::new(), &mut partitions);
    for blocks in partitions {
        let target = filter.map(|f| {
            let path: u64 = (f.n..f.n + f.j).fold(0, |m, v| m | 1 << (v - 1));
            (f, blocks.iter().position(|b| b & path == path))
        });
        if let Some((_, None)) = target {
            continue;
        }
        let options: Vec<Vec<SubgraphPart>> = blocks
            .iter()
            .enumerate()
            .map(|(idx, &b)| {
                let vertices: Vec<usize> = (1..=n).filter(|v| (b >> (v - 1)) & 1 == 1).collect();
                let mut opts = Vec::new();
                for edges in spanning_sets(g, b) {
                    for alpha in compositions(vertices.len()) {
                        let (first, min_last) = match target {
                            Some((f, Some(k))) => (
                                (idx == 0).then_some(f.i),
                                if idx == k { f.j } else { 1 },
                            ),
                            _ => (None, 1),
                        };
                        if first.is_some_and(|i| alpha[0] != i) || *alpha.last().unwrap() < min_last {
                            continue;
                        }
                        let rmax = if first.is_some() { 1 } else { alpha[0] };
                        for r in 1..=rmax {
                            opts.push(SubgraphPart {
                                vertices: vertices.clone(),
                                edges: edges.clone(),
                                alpha: alpha.clone(),
                                r,
                            });
                        }
                    }
                }
                opts
            })
            .collect();
        if options.iter().any(|o| o.is_empty()) {
            continue;
        }
        let mut pick = vec![0usize; options.len()];
        'odometer: loop {
            visit(&SubgraphTriple {
                parts: pick.iter().zip(&options).map(|(&p, o)| o[p].clone()).collect(),
            });
            let mut pos = pick.len();
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

/// `sum sign(S) e_type'(S)` over `ST^(i)(G + P_j)`, one object at a time.
pub fn subgraph_triple_sum_explicit(g: &Graph, i: usize, j: usize) -> Result<ESym> {
    guard(g.n(), j, EXPLICIT_LIMIT, "explicit subgraph triples")?;
    let gp = g.glue(&Graph::path(j))?;
    let mut out = ESym::zero();
    for_each_subgraph_triple(&gp, Some(FtFilter { n: g.n(), i, j }), |s| {
        out.add_term(s.reduced_type(), &QRat::from_int(s.sign() as i64));
    });
    Ok(out)
}

/// `sum sign(S) e_type'(S)` over `ST^(i)(G + P_j)`.
pub fn subgraph_triple_sum(g: &Graph, i: usize, j: usize, limits: &Limits) -> Result<ESym> {
    guard(g.n(), j, limits.subgraph_vertices, "subgraph triples")?;
    Ok(Profile::of_subgraphs(g, Exec::Sequential)?.entry(i, j))
}
