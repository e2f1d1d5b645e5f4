//! The break bijection
//! `FT^(i)(G + H + P_j) -> disjoint union over k of FT^(i)(G + P_k) x FT^(k)(H + P_j)`
//! and its inverse.

use super::nbc::Tree;
use super::triple::{ForestTriple, TreeTriple};
use crate::error::{Error, Result};

/// Output of [`break_forest`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Broken {
    pub k: usize,
    pub left: ForestTriple,
    pub right: ForestTriple,
}

fn sorted(mut triples: Vec<TreeTriple>) -> ForestTriple {
    triples.sort_by_key(|t| t.tree.min_vertex());
    ForestTriple { triples }
}

fn malformed<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Malformed(msg.into()))
}

/// Split a forest triple of `G + H + P_j` (with `|G| = n`) at the glue
/// vertex `n`.
pub fn break_forest(f: &ForestTriple, n: usize) -> Result<Broken> {
    let Some(idx) = f.index_containing(n) else {
        return malformed(format!("no tree contains the glue vertex {n}"));
    };
    let t = &f.triples[idx];
    if t.alpha.iter().sum::<usize>() != t.tree.len() {
        return malformed("composition does not fit its tree");
    }
    let low = t.tree.restrict(1, n);
    let high = t.tree.restrict(n, usize::MAX).shifted(1 - n as isize);
    let mut acc = 0;
    let mut cut = 0;
    while acc < low.len() {
        acc += t.alpha[cut];
        cut += 1;
    }
    let k = acc - low.len() + 1;
    let mut grown = low;
    for v in n + 1..n + k {
        grown.vertices.push(v);
        grown.edges.push((v - 1, v));
    }
    grown.normalize();
    let mut right_alpha = vec![k];
    right_alpha.extend_from_slice(&t.alpha[cut..]);

    let mut left = vec![TreeTriple {
        tree: grown,
        alpha: t.alpha[..cut].to_vec(),
        r: t.r,
    }];
    let mut right = vec![TreeTriple {
        tree: high,
        alpha: right_alpha,
        r: 1,
    }];
    for (pos, other) in f.triples.iter().enumerate() {
        if pos == idx {
            continue;
        }
        if other.tree.min_vertex() < n {
            left.push(other.clone());
        } else {
            right.push(TreeTriple {
                tree: other.tree.shifted(1 - n as isize),
                ..other.clone()
            });
        }
    }
    Ok(Broken {
        k,
        left: sorted(left),
        right: sorted(right),
    })
}

/// Inverse of [`break_forest`]: `left` lives on `G + P_k`, `right` on
/// `H + P_j`, and `|G| = n`.
pub fn unbreak_forest(left: &ForestTriple, right: &ForestTriple, n: usize) -> Result<ForestTriple> {
    let Some(li) = left.index_containing(n) else {
        return malformed(format!("left forest misses the glue vertex {n}"));
    };
    let Some(ri) = right.index_containing(1) else {
        return malformed("right forest misses vertex 1");
    };
    let t = &left.triples[li];
    let t2 = &right.triples[ri];
    let k = t2.alpha[0];
    if (n..n + k).any(|v| !t.tree.contains(v)) {
        return malformed(format!("left tree does not hold the path {n}..{}", n + k - 1));
    }
    let mut tree = Tree {
        vertices: t.tree.vertices.iter().copied().filter(|&v| v <= n).collect(),
        edges: t
            .tree
            .edges
            .iter()
            .copied()
            .filter(|&(u, v)| u <= n && v <= n)
            .collect(),
    };
    let shifted = t2.tree.shifted(n as isize - 1);
    tree.vertices.extend(shifted.vertices);
    tree.edges.extend(shifted.edges);
    tree.normalize();
    let mut alpha = t.alpha.clone();
    alpha.extend_from_slice(&t2.alpha[1..]);
    let mut triples = vec![TreeTriple { tree, alpha, r: t.r }];
    triples.extend(
        left.triples
            .iter()
            .enumerate()
            .filter(|&(pos, _)| pos != li)
            .map(|(_, x)| x.clone()),
    );
    triples.extend(
        right
            .triples
            .iter()
            .enumerate()
            .filter(|&(pos, _)| pos != ri)
            .map(|(_, x)| TreeTriple {
                tree: x.tree.shifted(n as isize - 1),
                ..x.clone()
            }),
    );
    Ok(sorted(triples))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forest::triple::{enumerate_forest_triples, FtFilter};
    use crate::graph::Graph;
    use crate::Limits;
    use std::collections::HashSet;

    fn tree(vs: &[usize], es: &[(usize, usize)]) -> Tree {
        Tree {
            vertices: vs.to_vec(),
            edges: es.to_vec(),
        }
    }

    fn tt(vs: &[usize], es: &[(usize, usize)], alpha: &[usize], r: usize) -> TreeTriple {
        TreeTriple {
            tree: tree(vs, es),
            alpha: alpha.to_vec(),
            r,
        }
    }

    fn sample_forest(alpha: &[usize]) -> ForestTriple {
        ForestTriple {
            triples: vec![
                tt(&[1, 2], &[(1, 2)], &[2], 1),
                tt(
                    &[3, 4, 5, 6, 7, 8, 9],
                    &[(3, 5), (4, 6), (5, 6), (6, 7), (7, 8), (7, 9)],
                    alpha,
                    1,
                ),
                tt(&[10, 11, 12], &[(10, 11), (11, 12)], &[3], 1),
            ],
        }
    }

    #[test]
    fn sample_breaks() {
        let b = break_forest(&sample_forest(&[2, 4, 1]), 6).unwrap();
        assert_eq!(b.k, 3);
        assert_eq!(b.left.triples[1].alpha, vec![2, 4]);
        assert_eq!(b.left.triples[1].tree.vertices, vec![3, 4, 5, 6, 7, 8]);
        assert_eq!(b.right.triples[0].alpha, vec![3, 1]);
        assert_eq!(b.right.triples[0].tree.vertices, vec![1, 2, 3, 4]);
        assert_eq!(b.right.triples[1].tree.vertices, vec![5, 6, 7]);

        let b = break_forest(&sample_forest(&[5, 2]), 6).unwrap();
        assert_eq!(b.k, 2);
        assert_eq!(b.left.triples[1].alpha, vec![5]);
        assert_eq!(b.left.triples[1].tree.vertices, vec![3, 4, 5, 6, 7]);
        assert_eq!(b.right.triples[0].alpha, vec![2, 2]);
        for alpha in [&[2, 4, 1][..], &[5, 2]] {
            let f = sample_forest(alpha);
            let b = break_forest(&f, 6).unwrap();
            assert_eq!(unbreak_forest(&b.left, &b.right, 6).unwrap(), f);
        }
    }

    fn small_graphs() -> Vec<Graph> {
        let mut out = vec![Graph::path(1), Graph::path(2), Graph::path(3), Graph::complete(3)];
        out.push(Graph::new(3, &[(1, 3)]).unwrap());
        out.push(Graph::new(3, &[(1, 2), (1, 3)]).unwrap());
        out.extend([Graph::path(4), Graph::cycle(4), Graph::complete(4), Graph::almost_complete(4)]);
        out.push(Graph::new(4, &[(1, 2), (1, 3), (1, 4), (2, 3)]).unwrap());
        out
    }

    #[test]
    fn exhaustive_round_trips() {
        let lim = Limits::default();
        let graphs = small_graphs();
        for g in &graphs {
            for h in &graphs {
                let gh = g.glue(h).unwrap();
                let n = g.n();
                for j in 1..=2 {
                    let ghp = gh.glue(&Graph::path(j)).unwrap();
                    for i in 1..gh.n() + j {
                        let members = enumerate_forest_triples(&gh, i, j, &lim).unwrap();
                        let mut images = HashSet::new();
                        for f in &members {
                            let b = break_forest(f, n).unwrap();
                            let gk = g.glue(&Graph::path(b.k)).unwrap();
                            let hj = h.glue(&Graph::path(j)).unwrap();
                            b.left.validate(&gk).unwrap();
                            b.right.validate(&hj).unwrap();
                            assert!(b.left.satisfies(FtFilter { n, i, j: b.k }));
                            assert!(b.right.satisfies(FtFilter { n: h.n(), i: b.k, j }));
                            assert_eq!(f.sign(), b.left.sign() * b.right.sign());
                            assert_eq!(
                                f.reduced_type(),
                                b.left.reduced_type().union(&b.right.reduced_type())
                            );
                            if ghp.is_nuig() {
                                assert_eq!(
                                    f.weight(&ghp).unwrap(),
                                    b.left.weight(&gk).unwrap() + b.right.weight(&hj).unwrap()
                                );
                            }
                            assert_eq!(&unbreak_forest(&b.left, &b.right, n).unwrap(), f);
                            assert!(images.insert((b.left, b.right)));
                        }
                        let mut count = 0;
                        for k in 1..n + j + h.n() {
                            let l = enumerate_forest_triples(g, i, k, &lim).unwrap();
                            let r = enumerate_forest_triples(h, k, j, &lim).unwrap();
                            for a in &l {
                                for b in &r {
                                    let f = unbreak_forest(a, b, n).unwrap();
                                    f.validate(&ghp).unwrap();
                                    assert!(f.satisfies(FtFilter { n: gh.n(), i, j }));
                                    count += 1;
                                }
                            }
                        }
                        assert_eq!(count, members.len(), "{g} + {h}, ({i},{j})");
                    }
                }
            }
        }
    }

    #[test]
    fn rejects_missing_glue_vertex() {
        let f = ForestTriple {
            triples: vec![tt(&[1, 2], &[(1, 2)], &[2], 1)],
        };
        assert!(break_forest(&f, 5).is_err());
    }
}
