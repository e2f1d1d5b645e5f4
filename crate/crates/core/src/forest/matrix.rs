//! The forest-triple matrix `F_G`, its window algebra and the quantities
//! read off it.

use std::fmt;

use super::profile::{guard, Profile};
use crate::error::{Error, Result};
use crate::esym::ESym;
use crate::graph::Graph;
use crate::par::Exec;
use crate::qalg::{pretty_rat, QPoly};
use crate::Limits;

/// Window of the infinite matrix of an `n`-vertex graph: columns `1..=cols`
/// and rows `1..=n+cols-1`. Rows below the window vanish in every stored
/// column, so reads there return zero; reads right of the window fail.
#[derive(Clone, PartialEq, Eq)]
pub struct ESymMatrix {
    pub n: usize,
    pub cols: usize,
    pub with_q: bool,
    entries: Vec<Vec<ESym>>,
}

impl ESymMatrix {
    pub fn rows(&self) -> usize {
        self.n + self.cols - 1
    }

    /// Entries `f(i, j)` for `1 <= j <= cols`, `1 <= i <= n + cols - 1`.
    pub fn from_fn<F>(n: usize, cols: usize, with_q: bool, exec: Exec, f: F) -> Result<Self>
    where
        F: Fn(usize, usize) -> Result<ESym> + Sync + Send,
    {
        if n == 0 || cols == 0 {
            return Err(Error::OutOfRange("empty matrix window".into()));
        }
        let rows = n + cols - 1;
        let cells: Vec<(usize, usize)> = (1..=rows)
            .flat_map(|i| (1..=cols).map(move |j| (i, j)))
            .collect();
        let values = exec.try_map(&cells, |&(i, j)| {
            if i >= n + j {
                Ok(ESym::zero())
            } else {
                f(i, j)
            }
        })?;
        let mut it = values.into_iter();
        let entries = (0..rows)
            .map(|_| (0..cols).map(|_| it.next().unwrap()).collect())
            .collect();
        Ok(ESymMatrix {
            n,
            cols,
            with_q,
            entries,
        })
    }

    /// The matrix of a single vertex.
    pub fn identity(cols: usize, with_q: bool) -> Self {
        ESymMatrix::from_fn(1, cols, with_q, Exec::Sequential, |i, j| {
            Ok(if i == j { ESym::one() } else { ESym::zero() })
        })
        .expect("identity window")
    }

    pub fn get(&self, i: usize, j: usize) -> Result<ESym> {
        if i == 0 || j == 0 || j > self.cols {
            return Err(Error::WindowTooSmall(format!(
                "entry ({i},{j}) outside columns 1..={}",
                self.cols
            )));
        }
        if i > self.rows() {
            return Ok(ESym::zero());
        }
        Ok(self.entries[i - 1][j - 1].clone())
    }

    pub fn entry(&self, i: usize, j: usize) -> &ESym {
        &self.entries[i - 1][j - 1]
    }

    /// Rows as stored, top to bottom.
    pub fn row_slices(&self) -> &[Vec<ESym>] {
        &self.entries
    }

    pub fn eval_q1(&self) -> Result<ESymMatrix> {
        let entries = self
            .entries
            .iter()
            .map(|row| row.iter().map(ESym::eval_q1).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Ok(ESymMatrix {
            n: self.n,
            cols: self.cols,
            with_q: false,
            entries,
        })
    }

    /// Same window restricted to the first `cols` columns.
    pub fn truncate(&self, cols: usize) -> Result<ESymMatrix> {
        if cols == 0 || cols > self.cols {
            return Err(Error::WindowTooSmall(format!(
                "cannot restrict {} columns to {cols}",
                self.cols
            )));
        }
        let rows = self.n + cols - 1;
        Ok(ESymMatrix {
            n: self.n,
            cols,
            with_q: self.with_q,
            entries: self.entries[..rows]
                .iter()
                .map(|r| r[..cols].to_vec())
                .collect(),
        })
    }

    /// Cells where two windows of equal shape disagree.
    pub fn diff(&self, other: &ESymMatrix) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 1..=self.rows().max(other.rows()) {
            for j in 1..=self.cols.min(other.cols) {
                let a = self.get(i, j).unwrap_or_default();
                let b = other.get(i, j).unwrap_or_default();
                if a != b {
                    out.push((i, j));
                }
            }
        }
        out
    }
}

impl fmt::Debug for ESymMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for ESymMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(|e| e.to_string()).collect();
            writeln!(f, "{}", cells.join(" | "))?;
        }
        Ok(())
    }
}

/// `(AB)_{i,j} = sum_k A_{i,k} B_{k,j}`. `B` vanishes for `k >= n_B + j`, so
/// `A` must carry at least `n_B + cols_B - 1` columns.
pub fn matrix_mul(a: &ESymMatrix, b: &ESymMatrix, exec: Exec) -> Result<ESymMatrix> {
    let need = b.n + b.cols - 1;
    if a.cols < need {
        return Err(Error::WindowTooSmall(format!(
            "left factor has {} columns, product needs {need}",
            a.cols
        )));
    }
    ESymMatrix::from_fn(a.n + b.n - 1, b.cols, a.with_q && b.with_q, exec, |i, j| {
        let mut acc = ESym::zero();
        for k in 1..=(b.n + j - 1) {
            let bk = b.get(k, j)?;
            if bk.is_zero() {
                continue;
            }
            let ak = a.get(i, k)?;
            if !ak.is_zero() {
                acc.add_assign(&(&ak * &bk));
            }
        }
        Ok(acc)
    })
}

fn profile(g: &Graph, with_q: bool, exec: Exec) -> Result<Profile> {
    Profile::of_forests(g, with_q, exec)
}

/// `(F_G)_{i,j}`, or `(F_G(q))_{i,j}` for an NUIG.
pub fn ft_matrix_entry(
    g: &Graph,
    i: usize,
    j: usize,
    with_q: bool,
    limits: &Limits,
) -> Result<ESym> {
    check_index(i, j)?;
    guard(g.n(), j, limits.forest_vertices, "forest-triple matrix")?;
    Ok(profile(g, with_q, Exec::Sequential)?.entry(i, j))
}

/// Columns `1..=cols` of `F_G`.
pub fn ft_matrix(
    g: &Graph,
    cols: usize,
    with_q: bool,
    limits: &Limits,
    exec: Exec,
) -> Result<ESymMatrix> {
    guard(g.n(), cols, limits.forest_vertices, "forest-triple matrix")?;
    let p = profile(g, with_q, exec)?;
    ESymMatrix::from_fn(g.n(), cols, with_q, exec, |i, j| Ok(p.entry(i, j)))
}

fn check_index(i: usize, j: usize) -> Result<()> {
    if i == 0 || j == 0 {
        return Err(Error::OutOfRange(format!("matrix index ({i},{j})")));
    }
    Ok(())
}

fn qint(k: usize, with_q: bool) -> QPoly {
    if with_q {
        QPoly::q_integer(k)
    } else {
        QPoly::constant(k as i64)
    }
}

/// `v F_G w^T = sum_i [i] e_i (F_G)_{i,1}`.
pub fn x_from_matrix(g: &Graph, with_q: bool, limits: &Limits, exec: Exec) -> Result<ESym> {
    let m = ft_matrix(g, 1, with_q, limits, exec)?;
    let mut out = ESym::zero();
    for i in 1..=g.n() {
        out.add_assign(&m.entry(i, 1).mul_e(i).scale_poly(&qint(i, with_q)));
    }
    Ok(out)
}

/// `X_G` summed directly over all forest triples.
pub fn x_forest(g: &Graph, with_q: bool, limits: &Limits, exec: Exec) -> Result<ESym> {
    guard(g.n(), 1, limits.forest_vertices, "forest triples")?;
    Ok(profile(g, with_q, exec)?.x())
}

/// `X^(i)_G = (F_G)_{i,1}`.
pub fn x_component(g: &Graph, i: usize, with_q: bool, limits: &Limits) -> Result<ESym> {
    ft_matrix_entry(g, i, 1, with_q, limits)
}

/// `(F_G)_{i,j}` through the first column of `F_{G+K_j}`, divided by
/// `(j-1)!` or `[j-1]_q!`.
pub fn column_via_kj(
    g: &Graph,
    i: usize,
    j: usize,
    with_q: bool,
    limits: &Limits,
) -> Result<ESym> {
    check_index(i, j)?;
    let glued = g.glue(&Graph::complete(j))?;
    let raw = ft_matrix_entry(&glued, i, 1, with_q, limits)?;
    let d = if with_q {
        QPoly::q_factorial(j - 1)
    } else {
        QPoly::constant((1..j as i64).product::<i64>())
    };
    let out = raw.div_poly(&d)?;
    if !out.is_polynomial() {
        return Err(Error::InvariantViolation(format!(
            "first column of F_(G+K{j}) not divisible by {}",
            pretty_rat(&d.into())
        )));
    }
    Ok(out)
}

/// `sum_{k=1}^{n-1} (F_G)_{k,k}`.
pub fn trace_x(g: &Graph, limits: &Limits, exec: Exec) -> Result<ESym> {
    trace(g, false, limits, exec)
}

/// `sum_{k=1}^{n-1} (F_G(q))_{k,k}` for an NUIG.
pub fn trace_q(g: &Graph, limits: &Limits, exec: Exec) -> Result<ESym> {
    g.require_nuig()?;
    trace(g, true, limits, exec)
}

fn trace(g: &Graph, with_q: bool, limits: &Limits, exec: Exec) -> Result<ESym> {
    let n = g.n();
    if n < 2 {
        return Err(Error::OutOfRange("trace needs at least 2 vertices".into()));
    }
    guard(n, n - 1, limits.forest_vertices, "trace")?;
    let p = profile(g, with_q, exec)?;
    let diag = exec.map_range(n - 1, |k| p.entry(k + 1, k + 1));
    let mut out = ESym::zero();
    for d in diag {
        out.add_assign(&d);
    }
    Ok(out)
}
