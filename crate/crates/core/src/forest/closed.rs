//! Closed forms for the matrices of paths, complete graphs, almost-complete
//! graphs and (at `q = 1`) cycles.

use crate::error::{Error, Result};
use crate::esym::{compositions, ESym, Partition};
use crate::graph::{Graph, StandardKind};
use crate::qalg::{QPoly, QRat};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClosedKind {
    Path,
    Complete,
    AlmostComplete,
    /// Cycle graph, valid at `q = 1` only.
    CycleQ1,
}

impl ClosedKind {
    pub fn min_vertices(self) -> usize {
        match self {
            ClosedKind::Path => 1,
            ClosedKind::Complete | ClosedKind::AlmostComplete => 2,
            ClosedKind::CycleQ1 => 3,
        }
    }

    pub fn with_q(self) -> bool {
        self != ClosedKind::CycleQ1
    }

    pub fn graph(self, n: usize) -> Result<Graph> {
        let kind = match self {
            ClosedKind::Path => StandardKind::Path,
            ClosedKind::Complete => StandardKind::Complete,
            ClosedKind::AlmostComplete => StandardKind::AlmostComplete,
            ClosedKind::CycleQ1 => StandardKind::Cycle,
        };
        Graph::standard(kind, n)
    }
}

fn bracket_minus_one(k: usize) -> QPoly {
    &QPoly::q_integer(k) - &QPoly::one()
}

/// `(F_G(q))_{i,j}` for the graph of the given kind on `n` vertices.
pub fn closed_form_matrix_entry(kind: ClosedKind, n: usize, i: usize, j: usize) -> Result<ESym> {
    if n < kind.min_vertices() {
        return Err(Error::OutOfRange(format!("{kind:?} needs at least {} vertices", kind.min_vertices())));
    }
    if i == 0 || j == 0 {
        return Err(Error::OutOfRange(format!("matrix index ({i},{j})")));
    }
    if i >= n + j {
        return Ok(ESym::zero());
    }
    Ok(match kind {
        ClosedKind::Path => path(n, i, j),
        ClosedKind::Complete => complete(n, i, j, false),
        ClosedKind::AlmostComplete => complete(n, i, j, true),
        ClosedKind::CycleQ1 => cycle(n, i, j),
    })
}

fn path(n: usize, i: usize, j: usize) -> ESym {
    let m = n + j - i - 1;
    if m == 0 {
        return ESym::one();
    }
    let mut out = ESym::zero();
    for a in compositions(m) {
        if *a.last().unwrap() < j {
            continue;
        }
        let w = a
            .iter()
            .fold(QPoly::one(), |acc, &k| &acc * &bracket_minus_one(k));
        out.add_term(Partition::new(a), &QRat::from_poly(w));
    }
    out
}

fn complete(n: usize, i: usize, j: usize, almost: bool) -> ESym {
    let size = n + j - i - 1;
    let shift = usize::from(almost);
    let fact = QPoly::q_factorial(n - 2);
    let coeff = if i <= (n - 1).min(j - 1 + shift) {
        &QPoly::monomial(1, n - 1 - shift) * &QPoly::q_integer(j + shift - i)
    } else if i >= n.max(j + 1) {
        &QPoly::monomial(1, size) * &QPoly::q_integer(i - shift - j)
    } else {
        return ESym::zero();
    };
    ESym::term(Partition::single(size), QRat::from_poly(&coeff * &fact))
}

fn cycle(n: usize, i: usize, j: usize) -> ESym {
    let m = n + j - i - 1;
    let scale = i.abs_diff(j) as i64;
    let mut out = ESym::zero();
    if scale == 0 {
        return out;
    }
    for first in 0..=m {
        let ok = (first >= j && j > i) || (first < j && j <= i);
        if !ok {
            continue;
        }
        let tails = if first == m {
            vec![Vec::new()]
        } else {
            compositions(m - first)
        };
        for tail in tails {
            let w: i64 = tail.iter().map(|&k| k as i64 - 1).product();
            if w == 0 {
                continue;
            }
            let parts = std::iter::once(first).chain(tail).filter(|&p| p > 0);
            out.add_term(Partition::new(parts), &QRat::from_int(scale * w));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::esym::eint;
    use crate::forest::matrix::ft_matrix;
    use crate::par::Exec;
    use crate::Limits;

    fn br(a: usize, c: i64, ks: &[usize]) -> QPoly {
        ks.iter()
            .fold(QPoly::monomial(c, a), |acc, &k| &acc * &QPoly::q_integer(k))
    }

    #[test]
    fn examples() {
        assert_eq!(
            closed_form_matrix_entry(ClosedKind::Path, 5, 1, 1).unwrap(),
            ESym::from_polys(&[(&[2, 2], br(2, 1, &[])), (&[4], br(1, 1, &[3]))])
        );
        assert_eq!(closed_form_matrix_entry(ClosedKind::CycleQ1, 3, 3, 1).unwrap(), eint(&[], 2));
        assert_eq!(
            closed_form_matrix_entry(ClosedKind::Complete, 3, 1, 2).unwrap(),
            ESym::from_polys(&[(&[3], br(2, 1, &[]))])
        );
        assert_eq!(closed_form_matrix_entry(ClosedKind::Path, 4, 6, 3).unwrap(), ESym::one());
        assert!(closed_form_matrix_entry(ClosedKind::Complete, 1, 1, 1).is_err());
    }

    #[test]
    fn path_five_window() {
        let e = |i, j| closed_form_matrix_entry(ClosedKind::Path, 5, i, j).unwrap();
        assert_eq!(
            e(1, 2),
            ESym::from_polys(&[(&[3, 2], br(2, 2, &[2])), (&[5], br(1, 1, &[4]))])
        );
        assert_eq!(
            e(1, 3),
            ESym::from_polys(&[
                (&[3, 3], br(2, 1, &[2, 2])),
                (&[4, 2], br(2, 1, &[3])),
                (&[6], br(1, 1, &[5]))
            ])
        );
        assert_eq!(
            e(2, 3),
            ESym::from_polys(&[(&[3, 2], br(2, 1, &[2])), (&[5], br(1, 1, &[4]))])
        );
        assert_eq!(e(4, 2), ESym::from_polys(&[(&[2], br(1, 1, &[]))]));
        assert!(e(4, 1).is_zero());
        assert_eq!(e(7, 3), ESym::one());
    }

    #[test]
    fn agree_with_enumeration() {
        let lim = Limits::default();
        let cases = [
            (ClosedKind::Path, 1..=6, 4),
            (ClosedKind::Complete, 2..=5, 4),
            (ClosedKind::AlmostComplete, 2..=5, 4),
            (ClosedKind::CycleQ1, 3..=6, 4),
        ];
        for (kind, ns, cols) in cases {
            for n in ns {
                let g = kind.graph(n).unwrap();
                let m = ft_matrix(&g, cols, kind.with_q(), &lim, Exec::Parallel).unwrap();
                for i in 1..=m.rows() + 1 {
                    for j in 1..=cols {
                        assert_eq!(
                            closed_form_matrix_entry(kind, n, i, j).unwrap(),
                            m.get(i, j).unwrap(),
                            "{kind:?} n={n} ({i},{j})"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn cycle_diagonal_vanishes() {
        for n in 3..=8 {
            for k in 1..=6 {
                assert!(closed_form_matrix_entry(ClosedKind::CycleQ1, n, k, k).unwrap().is_zero());
            }
        }
    }
}
