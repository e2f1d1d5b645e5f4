//! The tableau break bijection
//! `SYT^(i)(G + H + K_j) -> disjoint union over k of SYT^(i)(G + K_k) x SYT^(k)(H + K_j)`.

use super::Tableau;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BrokenTableau {
    pub k: usize,
    /// Tableau for `G + K_k`.
    pub left: Tableau,
    /// Tableau for `H + K_j`.
    pub right: Tableau,
}

/// Split `t` (for `G + H + K_j` with `|H| = n_h`) after box `n_h + j - 1`.
pub fn break_tableau(t: &Tableau, n_h: usize, j: usize) -> Result<BrokenTableau> {
    let cut = n_h + j - 1;
    if cut == 0 || cut > t.len() {
        return Err(Error::Malformed(format!(
            "tableau with {} boxes cannot be cut after box {cut}",
            t.len()
        )));
    }
    let k = t.drop_of(cut);
    let right = Tableau::new(t.drops()[..cut].to_vec())?;
    let mut left: Vec<usize> = (1..=k).collect();
    left.extend_from_slice(&t.drops()[cut..]);
    Ok(BrokenTableau {
        k,
        left: Tableau::new(left)?,
        right,
    })
}

/// Inverse of [`break_tableau`].
pub fn unbreak_tableau(left: &Tableau, right: &Tableau) -> Result<Tableau> {
    let Some(&k) = right.drops().last() else {
        return Err(Error::Malformed("empty right tableau".into()));
    };
    if left.len() < k || left.drops()[..k].iter().enumerate().any(|(t, &b)| b != t + 1) {
        return Err(Error::Malformed(format!(
            "left tableau does not open with a row of {k} boxes"
        )));
    }
    let mut drops = right.drops().to_vec();
    drops.extend_from_slice(&left.drops()[k..]);
    Tableau::new(drops)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::tableau::{coefficient_of, syt_enumerate, BracketMonomial};
    use crate::Limits;
    use std::collections::HashSet;

    fn mono(q: usize, br: &[(usize, i32)]) -> BracketMonomial {
        let mut m = BracketMonomial::one();
        m.mul_q(q);
        for &(k, e) in br {
            m.mul_bracket(k, e);
        }
        m
    }

    fn fact(k: usize) -> BracketMonomial {
        let mut m = BracketMonomial::one();
        for t in 2..=k {
            m.mul_bracket(t, 1);
        }
        m
    }

    #[test]
    fn worked_example() {
        let g = Graph::almost_complete(6);
        let h = Graph::new(5, &[(1, 2), (1, 3), (2, 3), (2, 4), (3, 4), (3, 5), (4, 5)]).unwrap();
        let whole = g.glue(&h).unwrap().glue(&Graph::complete(3)).unwrap();
        let t = Tableau::new(vec![1, 2, 3, 4, 1, 2, 3, 4, 5, 6, 1, 2]).unwrap();
        let b = break_tableau(&t, h.n(), 3).unwrap();
        assert_eq!(b.k, 3);
        assert_eq!(b.right.drops(), &[1, 2, 3, 4, 1, 2, 3]);
        assert_eq!(b.left.drops(), &[1, 2, 3, 4, 5, 6, 1, 2]);

        let ct = coefficient_of(&whole, &t).unwrap().unwrap();
        let ch = coefficient_of(&h.glue(&Graph::complete(3)).unwrap(), &b.right)
            .unwrap()
            .unwrap();
        let cg = coefficient_of(&g.glue(&Graph::complete(3)).unwrap(), &b.left)
            .unwrap()
            .unwrap();
        assert_eq!(ch, mono(3, &[(2, 4)]));
        assert_eq!(cg, mono(7, &[(2, 5), (3, 1), (5, -1)]));
        assert_eq!(ct.mul(&fact(3)), cg.mul(&ch));
        assert_eq!(unbreak_tableau(&b.left, &b.right).unwrap(), t);
    }

    #[test]
    fn trivial_right_factor() {
        let g = Graph::path(3);
        for (t, _) in syt_enumerate(&g.glue(&Graph::path(1)).unwrap(), &Limits::default()).unwrap() {
            let b = break_tableau(&t, 1, 1).unwrap();
            assert_eq!(b.k, 1);
            assert_eq!(b.right.drops(), &[1]);
            assert_eq!(b.left, t);
        }
    }

    #[test]
    fn exhaustive_round_trips() {
        let lim = Limits::default();
        let graphs: Vec<Graph> = (1..=4)
            .flat_map(|n| Graph::enumerate_nuigs(n).unwrap())
            .collect();
        for g in &graphs {
            for h in &graphs {
                for j in 1..=2 {
                    let whole = g.glue(h).unwrap().glue(&Graph::complete(j)).unwrap();
                    let hj = h.glue(&Graph::complete(j)).unwrap();
                    let mut seen = HashSet::new();
                    let all = syt_enumerate(&whole, &lim).unwrap();
                    for (t, ct) in &all {
                        let b = break_tableau(t, h.n(), j).unwrap();
                        let gk = g.glue(&Graph::complete(b.k)).unwrap();
                        let cg = coefficient_of(&gk, &b.left).unwrap().expect("left in SYT");
                        let ch = coefficient_of(&hj, &b.right).unwrap().expect("right in SYT");
                        assert_eq!(b.left.drops().last(), t.drops().last());
                        assert_eq!(ct.mul(&fact(b.k)), cg.mul(&ch), "{t}");
                        assert_eq!(t.reduced_shape(), b.left.reduced_shape().union(&b.right.reduced_shape()));
                        assert_eq!(&unbreak_tableau(&b.left, &b.right).unwrap(), t);
                        assert!(seen.insert((b.left, b.right)));
                    }
                    let mut count = 0;
                    for k in 1..=h.n() + j - 1 {
                        let gk = g.glue(&Graph::complete(k)).unwrap();
                        let rights: Vec<_> = syt_enumerate(&hj, &lim)
                            .unwrap()
                            .into_iter()
                            .filter(|(t, _)| t.drops().last() == Some(&k))
                            .collect();
                        for (l, _) in syt_enumerate(&gk, &lim).unwrap() {
                            for (r, _) in &rights {
                                let t = unbreak_tableau(&l, r).unwrap();
                                assert!(coefficient_of(&whole, &t).unwrap().is_some());
                                count += 1;
                            }
                        }
                    }
                    assert_eq!(count, all.len(), "{g} + {h}, j={j}");
                }
            }
        }
    }
}
