//! Tableau sums: Hikita's expansion, the tableau matrix `T_G(q)` and the
//! column sums `c^(i)_lambda(G)`.

use std::collections::{BTreeMap, HashMap};

use super::{fold_syt, BracketMonomial};
use crate::error::{Error, Result};
use crate::esym::{ESym, Partition};
use crate::forest::ESymMatrix;
use crate::graph::Graph;
use crate::par::Exec;
use crate::qalg::{pretty_rat, QPoly, QRat};
use crate::Limits;

use super::coeff::sum_monomials;

/// `sum c_T(G)` over `SYT(G)` grouped by (column of the last box, shape).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TabProfile {
    pub n: usize,
    pub groups: BTreeMap<(usize, Partition), QRat>,
}

type Tally = HashMap<(usize, Partition), HashMap<BracketMonomial, i64>>;

impl TabProfile {
    pub fn of(g: &Graph, limits: &Limits, exec: Exec) -> Result<TabProfile> {
        let tally = fold_syt(
            g,
            limits,
            exec,
            Tally::new,
            |acc, drops, c| {
                let shape = super::Tableau {
                    drops: drops.to_vec(),
                }
                .shape();
                let last = drops.last().copied().unwrap_or(0);
                *acc.entry((last, shape)).or_default().entry(c.clone()).or_insert(0) += 1;
            },
            |acc, part| {
                for (k, v) in part {
                    let dst = acc.entry(k).or_default();
                    for (m, c) in v {
                        *dst.entry(m).or_insert(0) += c;
                    }
                }
            },
        )?;
        let mut groups = BTreeMap::new();
        for (key, terms) in tally {
            let s = sum_monomials(terms.iter().map(|(m, &c)| (m, c)))?;
            if !s.is_zero() {
                groups.insert(key, s);
            }
        }
        Ok(TabProfile { n: g.n(), groups })
    }

    /// `sum c_T e_shape'` over tableaux whose last box sits in column `i`.
    pub fn column(&self, i: usize) -> ESym {
        let mut out = ESym::zero();
        for ((b, shape), c) in &self.groups {
            if *b == i {
                out.add_term(shape.remove_part(i).expect("row of the last box"), c);
            }
        }
        out
    }
}

fn boundary(e: ESym, what: impl Fn() -> String) -> Result<ESym> {
    if let Some((p, c)) = e.terms().find(|(_, c)| !c.is_polynomial()) {
        return Err(Error::InvariantViolation(format!(
            "{}: coefficient of e{} is {}",
            what(),
            p.label(),
            pretty_rat(c)
        )));
    }
    Ok(e)
}

/// `X_G(x;q) = sum_T c_T(G) e_shape(T)`.
pub fn hikita_x(g: &Graph, limits: &Limits, exec: Exec) -> Result<ESym> {
    let p = TabProfile::of(g, limits, exec)?;
    let mut out = ESym::zero();
    for ((_, shape), c) in &p.groups {
        out.add_term(shape.clone(), c);
    }
    boundary(out, || format!("Hikita expansion of {g}"))
}

fn entry_from(profile: &TabProfile, n: usize, i: usize, j: usize) -> Result<ESym> {
    if i >= n + j {
        return Ok(ESym::zero());
    }
    let d = &QPoly::q_integer(i) * &QPoly::q_factorial(j - 1);
    boundary(profile.column(i).div_poly(&d)?, || {
        format!("tableau matrix entry ({i},{j})")
    })
}

/// `(T_G(q))_{i,j}`.
pub fn tab_matrix_entry(g: &Graph, i: usize, j: usize, limits: &Limits) -> Result<ESym> {
    if i == 0 || j == 0 {
        return Err(Error::OutOfRange(format!("matrix index ({i},{j})")));
    }
    g.require_nuig()?;
    if i >= g.n() + j {
        return Ok(ESym::zero());
    }
    let glued = g.glue(&Graph::complete(j))?;
    let p = TabProfile::of(&glued, limits, Exec::Sequential)?;
    entry_from(&p, g.n(), i, j)
}

/// Columns `1..=cols` of `T_G(q)`.
pub fn tab_matrix(g: &Graph, cols: usize, limits: &Limits, exec: Exec) -> Result<ESymMatrix> {
    g.require_nuig()?;
    let profiles = exec.try_map(&(1..=cols).collect::<Vec<_>>(), |&j| {
        TabProfile::of(&g.glue(&Graph::complete(j))?, limits, Exec::Sequential)
    })?;
    ESymMatrix::from_fn(g.n(), cols, true, exec, |i, j| {
        entry_from(&profiles[j - 1], g.n(), i, j)
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColumnSum {
    pub sum: QPoly,
    /// `sum / [i]_q`.
    pub quotient: QPoly,
}

/// `c^(i)_lambda(G)`: `sum c_T(G)` over tableaux of shape `lambda` with `n`
/// in column `i`, checked to be a polynomial divisible by `[i]_q`.
pub fn column_sum(g: &Graph, lambda: &Partition, i: usize, limits: &Limits) -> Result<ColumnSum> {
    let p = TabProfile::of(g, limits, Exec::Sequential)?;
    column_sum_from(&p, lambda, i)
}

pub fn column_sum_from(p: &TabProfile, lambda: &Partition, i: usize) -> Result<ColumnSum> {
    let s = p
        .groups
        .get(&(i, lambda.clone()))
        .cloned()
        .unwrap_or_else(QRat::zero);
    let Some(sum) = s.clone().into_poly() else {
        return Err(Error::InvariantViolation(format!(
            "column sum for {} at column {i} is {}",
            lambda.label(),
            pretty_rat(&s)
        )));
    };
    let Some(quotient) = sum.div_exact(&QPoly::q_integer(i)) else {
        return Err(Error::InvariantViolation(format!(
            "column sum {} for {} is not divisible by [{i}]_q",
            crate::qalg::pretty_poly(&sum),
            lambda.label()
        )));
    };
    Ok(ColumnSum { sum, quotient })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forest::{ft_matrix, ft_matrix_entry};
    use crate::oracle::chromatic_e;

    fn lim() -> Limits {
        Limits::default()
    }

    fn bowtie() -> Graph {
        Graph::complete(3).glue(&Graph::complete(3)).unwrap()
    }

    fn br(a: usize, c: i64, ks: &[usize]) -> QPoly {
        ks.iter()
            .fold(QPoly::monomial(c, a), |acc, &k| &acc * &QPoly::q_integer(k))
    }

    #[test]
    fn hikita_examples() {
        assert_eq!(
            hikita_x(&bowtie(), &lim(), Exec::Parallel).unwrap(),
            ESym::from_polys(&[
                (&[3, 2], br(2, 1, &[2, 2])),
                (&[4, 1], &br(1, 1, &[4, 2]) + &br(2, 1, &[2, 2])),
                (&[5], br(0, 1, &[5, 2, 2])),
            ])
        );
        assert_eq!(
            hikita_x(&Graph::path(3), &lim(), Exec::Sequential).unwrap(),
            ESym::from_polys(&[(&[2, 1], br(1, 1, &[])), (&[3], br(0, 1, &[3]))])
        );
        assert_eq!(
            hikita_x(&Graph::complete(4), &lim(), Exec::Sequential).unwrap(),
            ESym::from_polys(&[(&[4], QPoly::q_factorial(4))])
        );
    }

    #[test]
    fn hikita_matches_oracle() {
        for n in 1..=6 {
            for g in Graph::enumerate_nuigs(n).unwrap() {
                assert_eq!(
                    hikita_x(&g, &lim(), Exec::Sequential).unwrap(),
                    chromatic_e(&g, true, &lim(), Exec::Sequential).unwrap(),
                    "{g}"
                );
            }
        }
    }

    #[test]
    fn bowtie_entry() {
        assert_eq!(
            tab_matrix_entry(&bowtie(), 4, 3, &lim()).unwrap(),
            ESym::from_polys(&[(&[3], br(2, 1, &[2]))])
        );
        let glued = bowtie().glue(&Graph::complete(3)).unwrap();
        let p = TabProfile::of(&glued, &lim(), Exec::Sequential).unwrap();
        let col4: Vec<_> = p.groups.iter().filter(|((b, _), _)| *b == 4).collect();
        assert_eq!(col4.len(), 1);
        assert_eq!(col4[0].0 .1, Partition::new([4, 3]));
        assert_eq!(col4[0].1.clone().into_poly().unwrap(), br(2, 1, &[4, 2, 2]));
    }

    #[test]
    fn small_matrices() {
        assert_eq!(
            tab_matrix(&Graph::path(1), 4, &lim(), Exec::Sequential).unwrap(),
            ESymMatrix::identity(4, true)
        );
        assert_eq!(
            tab_matrix(&Graph::path(2), 4, &lim(), Exec::Sequential).unwrap(),
            ft_matrix(&Graph::path(2), 4, true, &lim(), Exec::Sequential).unwrap()
        );
    }

    #[test]
    fn tableau_and_forest_matrices_agree() {
        for n in 1..=5 {
            for g in Graph::enumerate_nuigs(n).unwrap() {
                let t = tab_matrix(&g, 3, &lim(), Exec::Parallel).unwrap();
                let f = ft_matrix(&g, 3, true, &lim(), Exec::Parallel).unwrap();
                assert_eq!(t, f, "{g}");
            }
        }
        let g = Graph::path(3);
        assert_eq!(
            tab_matrix_entry(&g, 2, 4, &lim()).unwrap(),
            ft_matrix_entry(&g, 2, 4, true, &lim()).unwrap()
        );
    }

    fn triangle_strip() -> Graph {
        Graph::new(
            6,
            &[(1, 2), (1, 3), (2, 3), (2, 4), (3, 4), (3, 5), (4, 5), (4, 6), (5, 6)],
        )
        .unwrap()
    }

    #[test]
    fn triangle_strip_column_sums() {
        let g = triangle_strip();
        let p = TabProfile::of(&g, &lim(), Exec::Sequential).unwrap();
        let total = |i: usize| {
            let mut s = QPoly::zero();
            for ((b, _), c) in &p.groups {
                if *b == i {
                    s += c.as_poly().unwrap();
                }
            }
            s
        };
        assert_eq!(total(1), br(2, 1, &[3, 2, 2, 2]));
        assert_eq!(total(2), br(3, 2, &[2, 2, 2]));
        assert_eq!(total(3), br(3, 1, &[3, 2]));
        assert!(total(4).is_zero());
        assert_eq!(total(5), br(2, 2, &[5, 2]));
        assert_eq!(total(6), br(0, 1, &[6, 2, 2, 2, 2]));
        let c51 = column_sum(&g, &Partition::new([5, 1]), 5, &lim()).unwrap();
        assert_eq!(c51.sum, br(2, 2, &[5, 2]));
        assert_eq!(c51.quotient, br(2, 2, &[2]));
        let c33 = column_sum(&g, &Partition::new([3, 3]), 3, &lim()).unwrap();
        assert_eq!(c33.sum, br(3, 1, &[3, 2]));
        assert!(column_sum(&g, &Partition::new([6]), 2, &lim()).unwrap().sum.is_zero());
    }

    #[test]
    fn column_sums_are_divisible() {
        for n in 1..=6 {
            for g in Graph::enumerate_nuigs(n).unwrap() {
                let p = TabProfile::of(&g, &lim(), Exec::Sequential).unwrap();
                for lambda in Partition::all(n) {
                    for i in 1..=n {
                        column_sum_from(&p, &lambda, i).unwrap();
                    }
                }
            }
        }
    }
}
