//! Hikita's standard Young tableaux `SYT(G)` and their coefficients.

pub mod breakmap;
pub mod coeff;
pub mod matrix;

use std::fmt;

use crate::error::{Error, Result};
use crate::esym::Partition;
use crate::graph::Graph;
use crate::par::Exec;
use crate::qalg::{QPoly, QRat};
use crate::Limits;

pub use breakmap::{break_tableau, unbreak_tableau, BrokenTableau};
pub use coeff::{sum_monomials, BracketMonomial};
pub use matrix::{
    column_sum, column_sum_from, hikita_x, tab_matrix, tab_matrix_entry, ColumnSum, TabProfile,
};

/// A standard Young tableau stored as its ballot sequence of drop columns.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    drops: Vec<usize>,
}

impl Tableau {
    pub fn new(drops: Vec<usize>) -> Result<Self> {
        let mut heights: Vec<usize> = Vec::new();
        for (k, &b) in drops.iter().enumerate() {
            if b == 0 || b > heights.len() + 1 || (b > 1 && heights[b - 2] <= heights.get(b - 1).copied().unwrap_or(0)) {
                return Err(Error::Malformed(format!(
                    "drop {} into column {b} breaks the ballot condition",
                    k + 1
                )));
            }
            if b > heights.len() {
                heights.push(0);
            }
            heights[b - 1] += 1;
        }
        Ok(Tableau { drops })
    }

    pub fn drops(&self) -> &[usize] {
        &self.drops
    }

    pub fn len(&self) -> usize {
        self.drops.len()
    }

    pub fn is_empty(&self) -> bool {
        self.drops.is_empty()
    }

    /// `b_k`, 1-based.
    pub fn drop_of(&self, k: usize) -> usize {
        self.drops[k - 1]
    }

    pub fn heights(&self) -> Vec<usize> {
        let mut h = Vec::new();
        for &b in &self.drops {
            if b > h.len() {
                h.push(0);
            }
            h[b - 1] += 1;
        }
        h
    }

    /// Row lengths.
    pub fn shape(&self) -> Partition {
        Partition::new(self.heights()).conjugate()
    }

    /// Shape with one instance of `b_n` removed.
    pub fn reduced_shape(&self) -> Partition {
        match self.drops.last() {
            None => Partition::empty(),
            Some(&b) => self.shape().remove_part(b).expect("row of the last box"),
        }
    }

    /// Rows bottom-up, entries left to right.
    pub fn rows(&self) -> Vec<Vec<usize>> {
        let mut heights: Vec<usize> = Vec::new();
        let mut rows: Vec<Vec<usize>> = Vec::new();
        for (k, &b) in self.drops.iter().enumerate() {
            if b > heights.len() {
                heights.push(0);
            }
            heights[b - 1] += 1;
            let r = heights[b - 1];
            if rows.len() < r {
                rows.push(Vec::new());
            }
            rows[r - 1].push(k + 1);
        }
        rows
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows()
            .iter()
            .map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "{}", rows.join("/"))
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tableau({self})")
    }
}

/// Column heights and top entries of a partial tableau.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DropState {
    pub heights: Vec<usize>,
    pub tops: Vec<usize>,
}

impl DropState {
    pub fn cols(&self) -> usize {
        self.heights.len()
    }

    pub fn push(&mut self, k: usize, b: usize) {
        if b > self.cols() {
            self.heights.push(0);
            self.tops.push(0);
        }
        self.heights[b - 1] += 1;
        self.tops[b - 1] = k;
    }

    pub fn of_prefix(drops: &[usize]) -> Self {
        let mut s = DropState::default();
        for (k, &b) in drops.iter().enumerate() {
            s.push(k + 1, b);
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaStep {
    /// Indexed `0..=cols+1`.
    pub delta: Vec<bool>,
    pub r: Vec<usize>,
    pub w: Vec<usize>,
}

/// `delta^(k)`, `R_k` and `W_k` for box `k` over `state`, with `gbar` the
/// reversed graph.
pub fn delta_step(state: &DropState, k: usize, gbar: &Graph) -> DeltaStep {
    let cols = state.cols();
    let mut delta = Vec::with_capacity(cols + 2);
    delta.push(true);
    delta.extend(state.tops.iter().map(|&t| gbar.has_edge(t, k)));
    delta.push(false);
    let r = (1..=cols).filter(|&i| delta[i] && !delta[i - 1]).collect();
    let w = (1..=cols + 1).filter(|&i| !delta[i] && delta[i - 1]).collect();
    DeltaStep { delta, r, w }
}

impl DeltaStep {
    /// `c^(k)` for dropping into column `b`, as a bracket monomial.
    pub fn factor(&self, b: usize) -> Result<BracketMonomial> {
        if !self.w.contains(&b) {
            return Err(Error::OutOfRange(format!("column {b} is not in W = {:?}", self.w)));
        }
        let mut m = self.probability_part(b);
        m.mul_q(self.delta[b + 1..].iter().filter(|&&d| d).count());
        m.mul_bracket(b, 1);
        Ok(m)
    }

    /// `prod_R [|i-b|] / prod_{W, i != b} [|i-b|]`.
    pub fn probability_part(&self, b: usize) -> BracketMonomial {
        let mut m = BracketMonomial::one();
        for &i in &self.r {
            m.mul_bracket(i.abs_diff(b), 1);
        }
        for &i in &self.w {
            if i != b {
                m.mul_bracket(i.abs_diff(b), -1);
            }
        }
        m
    }

    /// `c^(k) / [b]_q`: the q-weighted drop probability, which sums to 1
    /// over `W`.
    pub fn probability(&self, b: usize) -> Result<BracketMonomial> {
        let mut m = self.factor(b)?;
        m.mul_bracket(b, -1);
        Ok(m)
    }
}

/// `c^(k)_T(G)` as a rational function.
pub fn c_factor(state: &DropState, k: usize, b: usize, gbar: &Graph) -> Result<QRat> {
    Ok(delta_step(state, k, gbar).factor(b)?.to_qrat())
}

/// Sum of the drop probabilities over `W_k`.
pub fn probability_total(step: &DeltaStep) -> Result<QRat> {
    let ms: Vec<BracketMonomial> = step.w.iter().map(|&b| step.probability(b)).collect::<Result<_>>()?;
    sum_monomials(ms.iter().map(|m| (m, 1)))
}

fn check_size(g: &Graph, limits: &Limits) -> Result<()> {
    g.require_nuig()?;
    if g.n() > limits.tableau_boxes {
        return Err(Error::CostGuard {
            what: "tableau enumeration",
            limit: limits.tableau_boxes,
            got: g.n(),
        });
    }
    Ok(())
}

fn dfs<F: FnMut(&[usize], &BracketMonomial)>(
    gbar: &Graph,
    n: usize,
    drops: &mut Vec<usize>,
    state: &DropState,
    coeff: &BracketMonomial,
    stop: usize,
    visit: &mut F,
) {
    let k = drops.len() + 1;
    if drops.len() == stop || k > n {
        visit(drops, coeff);
        return;
    }
    let step = delta_step(state, k, gbar);
    for &b in &step.w {
        let c = coeff.mul(&step.factor(b).expect("b in W"));
        let mut next = state.clone();
        next.push(k, b);
        drops.push(b);
        dfs(gbar, n, drops, &next, &c, stop, visit);
        drops.pop();
    }
}

/// Visit every `T` in `SYT(G)` with `c_T(G)` as a bracket monomial, in
/// lexicographic order of drop sequences.
pub fn for_each_syt<F: FnMut(&Tableau, &BracketMonomial)>(
    g: &Graph,
    limits: &Limits,
    mut visit: F,
) -> Result<()> {
    check_size(g, limits)?;
    let gbar = g.reverse();
    dfs(
        &gbar,
        g.n(),
        &mut Vec::new(),
        &DropState::default(),
        &BracketMonomial::one(),
        usize::MAX,
        &mut |d, c| visit(&Tableau { drops: d.to_vec() }, c),
    );
    Ok(())
}

/// `c_T(G)` when `T` lies in `SYT(G)`, `None` otherwise.
pub fn coefficient_of(g: &Graph, t: &Tableau) -> Result<Option<BracketMonomial>> {
    g.require_nuig()?;
    if t.len() != g.n() {
        return Err(Error::Malformed(format!(
            "tableau with {} boxes for a graph on {} vertices",
            t.len(),
            g.n()
        )));
    }
    let gbar = g.reverse();
    let mut state = DropState::default();
    let mut c = BracketMonomial::one();
    for (idx, &b) in t.drops.iter().enumerate() {
        let step = delta_step(&state, idx + 1, &gbar);
        match step.factor(b) {
            Ok(f) => c = c.mul(&f),
            Err(_) => return Ok(None),
        }
        state.push(idx + 1, b);
    }
    Ok(Some(c))
}

/// Collected `SYT(G)` with coefficients.
pub fn syt_enumerate(g: &Graph, limits: &Limits) -> Result<Vec<(Tableau, BracketMonomial)>> {
    let mut out = Vec::new();
    for_each_syt(g, limits, |t, c| out.push((t.clone(), c.clone())))?;
    Ok(out)
}

/// Fold `SYT(G)` in parallel over prefixes of length `depth`; the results
/// are merged in prefix order, so the outcome is deterministic.
pub(crate) fn fold_syt<A, F, M>(
    g: &Graph,
    limits: &Limits,
    exec: Exec,
    init: impl Fn() -> A + Sync,
    visit: F,
    merge: M,
) -> Result<A>
where
    A: Send,
    F: Fn(&mut A, &[usize], &BracketMonomial) + Sync,
    M: Fn(&mut A, A),
{
    check_size(g, limits)?;
    let gbar = g.reverse();
    let n = g.n();
    let depth = n.min(5);
    let mut prefixes: Vec<(Vec<usize>, BracketMonomial)> = Vec::new();
    dfs(
        &gbar,
        n,
        &mut Vec::new(),
        &DropState::default(),
        &BracketMonomial::one(),
        depth,
        &mut |d, c| prefixes.push((d.to_vec(), c.clone())),
    );
    let parts = exec.map(&prefixes, |(prefix, c)| {
        let mut acc = init();
        let state = DropState::of_prefix(prefix);
        let mut drops = prefix.clone();
        dfs(&gbar, n, &mut drops, &state, c, usize::MAX, &mut |d, c| visit(&mut acc, d, c));
        acc
    });
    let mut out = init();
    for p in parts {
        merge(&mut out, p);
    }
    Ok(out)
}

/// Exact check that the weighted drop probabilities sum to 1 at every step
/// of every tableau of `g`, and that each lies in `[0, 1]` at the sample
/// points. Returns the number of steps checked.
pub fn check_probabilities(g: &Graph, samples: &[num_rational::BigRational], limits: &Limits) -> Result<usize> {
    check_size(g, limits)?;
    let gbar = g.reverse();
    let mut steps = 0;
    let mut failure: Option<Error> = None;
    for (t, _) in syt_enumerate(g, limits)? {
        let mut state = DropState::default();
        for k in 1..=t.len() {
            let step = delta_step(&state, k, &gbar);
            steps += 1;
            let total = probability_total(&step)?;
            if !total.is_one() {
                failure.get_or_insert(Error::InvariantViolation(format!(
                    "drop probabilities of box {k} in {t} sum to {total}"
                )));
            }
            for &b in &step.w {
                let p = step.probability(b)?.to_qrat();
                for q0 in samples {
                    let v = p.eval(q0)?;
                    if v < num_rational::BigRational::from_integer(0.into())
                        || v > num_rational::BigRational::from_integer(1.into())
                    {
                        failure.get_or_insert(Error::InvariantViolation(format!(
                            "p({b}) = {p} at q = {q0} for box {k} of {t}"
                        )));
                    }
                }
            }
            state.push(k, t.drop_of(k));
        }
    }
    match failure {
        Some(e) => Err(e),
        None => Ok(steps),
    }
}

/// `c_T` as a plain polynomial when it is one.
pub fn coefficient_poly(c: &BracketMonomial) -> Option<QPoly> {
    c.to_qrat().into_poly()
}
