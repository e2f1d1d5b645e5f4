//! Verification suites. Each suite is a deterministic list of cases; results
//! are streamed in case order and summarised at the end.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::esym::ESym;
use crate::forest::{
    break_forest, closed_form_matrix_entry, enumerate_forest_triples, ft_matrix, matrix_mul, trace_q,
    trace_x, unbreak_forest, x_forest, x_from_matrix, ClosedKind, ESymMatrix, FtFilter, Profile,
};
use crate::graph::Graph;
use crate::oracle::{chromatic_e, closed_form_x, directed_cycle, ClosedFormX};
use crate::par::Exec;
use crate::tableau::{
    break_tableau, coefficient_of, hikita_x, syt_enumerate, tab_matrix, unbreak_tableau, BracketMonomial,
};
use crate::Limits;

/// Seed of the random graph sample in the `trace` suite.
pub const TRACE_SAMPLE_SEED: u64 = 0x5eed_c1c1e;
/// Size of the random graph sample at `n = 6` in the `trace` suite.
pub const TRACE_SAMPLE_SIZE: usize = 2000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Gluing,
    Trace,
    SameMats,
    QTrace,
    Subgraph,
    ClosedForms,
    OracleCross,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Gluing,
        Suite::Trace,
        Suite::SameMats,
        Suite::QTrace,
        Suite::Subgraph,
        Suite::ClosedForms,
        Suite::OracleCross,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Gluing => "gluing",
            Suite::Trace => "trace",
            Suite::SameMats => "samemats",
            Suite::QTrace => "qtrace",
            Suite::Subgraph => "subgraph",
            Suite::ClosedForms => "closedforms",
            Suite::OracleCross => "oracle-cross",
        }
    }

    pub fn default_max_n(self) -> usize {
        match self {
            Suite::Gluing => 9,
            Suite::Trace => 7,
            _ => 6,
        }
    }

    pub fn describe(self) -> &'static str {
        match self {
            Suite::Gluing => "F_(G+H) = F_G F_H on a three-column window",
            Suite::Trace => "trace F_G = X of the circular gluing, q = 1",
            Suite::SameMats => "forest-triple matrix = tableau matrix",
            Suite::QTrace => "trace F_G(q) = X of the directed circular gluing",
            Suite::Subgraph => "subgraph-triple sums = forest-triple entries",
            Suite::ClosedForms => "closed forms = enumeration",
            Suite::OracleCross => "oracle, forest, matrix and Hikita expansions agree",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Malformed(format!("unknown suite {s:?}")))
    }
}

/// One failed comparison inside a case.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub check: String,
    pub expected: String,
    pub got: String,
}

#[derive(Clone, Debug)]
pub enum Outcome {
    Passed,
    Failed(Vec<Mismatch>),
    Errored(Error),
}

#[derive(Clone, Debug)]
pub struct CaseReport {
    pub index: usize,
    pub case: String,
    pub outcome: Outcome,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub suite: String,
    pub max_n: usize,
    pub cases: usize,
    pub passed: usize,
    pub counterexamples: usize,
    pub errors: usize,
    pub invariant_violations: usize,
}

impl Summary {
    pub fn ok(&self) -> bool {
        self.passed == self.cases
    }
}

type Check = Box<dyn Fn(&Limits) -> Result<Vec<Mismatch>> + Send + Sync>;

struct Case {
    label: String,
    check: Check,
}

fn case(label: impl Into<String>, check: impl Fn(&Limits) -> Result<Vec<Mismatch>> + Send + Sync + 'static) -> Case {
    Case {
        label: label.into(),
        check: Box::new(check),
    }
}

fn same(check: impl Into<String>, expected: &ESym, got: &ESym) -> Option<Mismatch> {
    (expected != got).then(|| Mismatch {
        check: check.into(),
        expected: expected.to_string(),
        got: got.to_string(),
    })
}

fn same_matrix(check: &str, expected: &ESymMatrix, got: &ESymMatrix) -> Vec<Mismatch> {
    expected
        .diff(got)
        .into_iter()
        .map(|(i, j)| Mismatch {
            check: format!("{check} ({i},{j})"),
            expected: expected.get(i, j).unwrap_or_default().to_string(),
            got: got.get(i, j).unwrap_or_default().to_string(),
        })
        .collect()
}

const CHUNK: usize = 64;

/// Run `suite` on graphs up to `max_n` vertices, calling `on_case` for every
/// case in order.
pub fn run_suite(
    suite: Suite,
    max_n: usize,
    limits: &Limits,
    exec: Exec,
    mut on_case: impl FnMut(&CaseReport),
) -> Result<Summary> {
    let cases = cases(suite, max_n)?;
    let mut summary = Summary {
        suite: suite.name().into(),
        max_n,
        cases: cases.len(),
        passed: 0,
        counterexamples: 0,
        errors: 0,
        invariant_violations: 0,
    };
    for (c, chunk) in cases.chunks(CHUNK).enumerate() {
        let outcomes = exec.map(chunk, |case| match (case.check)(limits) {
            Ok(m) if m.is_empty() => Outcome::Passed,
            Ok(m) => Outcome::Failed(m),
            Err(e) => Outcome::Errored(e),
        });
        for (k, outcome) in outcomes.into_iter().enumerate() {
            match &outcome {
                Outcome::Passed => summary.passed += 1,
                Outcome::Failed(_) => summary.counterexamples += 1,
                Outcome::Errored(e) => {
                    summary.errors += 1;
                    if e.is_invariant_violation() {
                        summary.invariant_violations += 1;
                    }
                }
            }
            let idx = c * CHUNK + k;
            on_case(&CaseReport {
                index: idx,
                case: chunk[k].label.clone(),
                outcome,
            });
        }
    }
    Ok(summary)
}

/// Labels of the cases `run_suite` would visit.
pub fn case_labels(suite: Suite, max_n: usize) -> Result<Vec<String>> {
    Ok(cases(suite, max_n)?.into_iter().map(|c| c.label).collect())
}

fn cases(suite: Suite, max_n: usize) -> Result<Vec<Case>> {
    if max_n == 0 {
        return Err(Error::OutOfRange("max-n must be at least 1".into()));
    }
    match suite {
        Suite::Gluing => Ok(gluing(max_n)),
        Suite::Trace => trace(max_n),
        Suite::SameMats => same_mats(max_n),
        Suite::QTrace => qtrace(max_n),
        Suite::Subgraph => subgraph(max_n),
        Suite::ClosedForms => Ok(closed_forms(max_n)),
        Suite::OracleCross => oracle_cross(max_n),
    }
}

const GLUE_COLS: usize = 3;

/// Factors used at `q = 1`, and the NUIG factors used with `q`.
pub type Family = Vec<(&'static str, Graph)>;

pub fn gluing_families() -> (Family, Family) {
    let q1 = vec![
        ("P2", Graph::path(2)),
        ("P3", Graph::path(3)),
        ("P4", Graph::path(4)),
        ("K3", Graph::complete(3)),
        ("K4", Graph::complete(4)),
        ("K'3", Graph::almost_complete(3)),
        ("C4", Graph::cycle(4)),
        ("C5", Graph::cycle(5)),
    ];
    let q = vec![
        ("P2", Graph::path(2)),
        ("P3", Graph::path(3)),
        ("K3", Graph::complete(3)),
        ("K4", Graph::complete(4)),
        ("K'4", Graph::almost_complete(4)),
    ];
    (q1, q)
}

/// `F_(G+H)` against `F_G F_H` on columns `1..=cols`.
pub fn check_gluing(g: &Graph, h: &Graph, with_q: bool, cols: usize, limits: &Limits, exec: Exec) -> Result<Vec<Mismatch>> {
    let fg = ft_matrix(g, h.n() + cols - 1, with_q, limits, exec)?;
    let fh = ft_matrix(h, cols, with_q, limits, exec)?;
    let glued = ft_matrix(&g.glue(h)?, cols, with_q, limits, exec)?;
    Ok(same_matrix("entry", &glued, &matrix_mul(&fg, &fh, exec)?))
}

fn gluing(max_n: usize) -> Vec<Case> {
    let (q1, q) = gluing_families();
    let mut out = Vec::new();
    for (with_q, fam) in [(false, q1), (true, q)] {
        for (a, g) in &fam {
            for (b, h) in &fam {
                if g.n() + h.n() - 1 > max_n {
                    continue;
                }
                let (g, h) = (g.clone(), h.clone());
                let label = format!("{a}+{b}{}", if with_q { " (q)" } else { "" });
                out.push(case(label, move |l| {
                    check_gluing(&g, &h, with_q, GLUE_COLS, l, Exec::Sequential)
                }));
            }
        }
    }
    out
}

/// Graphs of the `trace` suite: every graph with `2 <= n <= 5`, a seeded
/// sample at `n = 6`, and NUIGs beyond.
pub fn trace_graphs(max_n: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in 2..=max_n.min(5) {
        out.extend(Graph::all_graphs(n)?);
    }
    if max_n >= 6 {
        let mut rng = ChaCha8Rng::seed_from_u64(TRACE_SAMPLE_SEED);
        for _ in 0..TRACE_SAMPLE_SIZE {
            out.push(Graph::random(6, &mut rng)?);
        }
    }
    for n in 7..=max_n {
        out.extend(Graph::enumerate_nuigs(n)?);
    }
    Ok(out)
}

pub fn check_trace(g: &Graph, limits: &Limits, exec: Exec) -> Result<Vec<Mismatch>> {
    let x = chromatic_e(&g.circle_glue()?, false, limits, exec)?;
    Ok(same("trace", &x, &trace_x(g, limits, exec)?).into_iter().collect())
}

fn trace(max_n: usize) -> Result<Vec<Case>> {
    Ok(trace_graphs(max_n)?
        .into_iter()
        .map(|g| case(g.literal(), move |l| check_trace(&g, l, Exec::Sequential)))
        .collect())
}

pub fn check_qtrace(g: &Graph, limits: &Limits, exec: Exec) -> Result<Vec<Mismatch>> {
    let x = chromatic_e(&g.directed_circle_glue()?, true, limits, exec)?;
    Ok(same("q-trace", &x, &trace_q(g, limits, exec)?).into_iter().collect())
}

fn qtrace(max_n: usize) -> Result<Vec<Case>> {
    let mut out = Vec::new();
    for n in 2..=max_n {
        for g in Graph::enumerate_nuigs(n)? {
            out.push(case(g.literal(), move |l| check_qtrace(&g, l, Exec::Sequential)));
        }
    }
    Ok(out)
}

/// Columns compared by the `samemats` suite for an NUIG on `n` vertices.
pub fn same_mats_cols(n: usize) -> usize {
    if n <= 5 {
        3
    } else {
        1
    }
}

pub fn check_same_mats(g: &Graph, cols: usize, limits: &Limits, exec: Exec) -> Result<Vec<Mismatch>> {
    let f = ft_matrix(g, cols, true, limits, exec)?;
    let t = tab_matrix(g, cols, limits, exec)?;
    Ok(same_matrix("entry", &f, &t))
}

fn same_mats(max_n: usize) -> Result<Vec<Case>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        for g in Graph::enumerate_nuigs(n)? {
            let cols = same_mats_cols(n);
            out.push(case(g.literal(), move |l| check_same_mats(&g, cols, l, Exec::Sequential)));
        }
    }
    Ok(out)
}

/// Compare subgraph-triple and forest-triple entries for all `i` and all
/// `j` with `n + j - 1 <= max_total`.
pub fn check_subgraph(g: &Graph, max_total: usize, exec: Exec) -> Result<Vec<Mismatch>> {
    let n = g.n();
    let sub = Profile::of_subgraphs(g, exec)?;
    let ft = Profile::of_forests(g, false, exec)?;
    let mut out = Vec::new();
    for j in 1..=(max_total + 1).saturating_sub(n) {
        for i in 1..n + j {
            out.extend(same(format!("entry ({i},{j})"), &ft.entry(i, j), &sub.entry(i, j)));
        }
    }
    Ok(out)
}

fn subgraph(max_n: usize) -> Result<Vec<Case>> {
    if max_n > 6 {
        return Err(Error::OutOfRange("the subgraph suite enumerates all graphs, so max-n is at most 6".into()));
    }
    let mut out = Vec::new();
    for n in 1..=max_n {
        for g in Graph::all_graphs(n)? {
            out.push(case(g.literal(), move |l| {
                if g.n() > l.subgraph_vertices {
                    return Err(Error::CostGuard {
                        what: "subgraph triples",
                        limit: l.subgraph_vertices,
                        got: g.n(),
                    });
                }
                check_subgraph(&g, max_n, Exec::Sequential)
            }));
        }
    }
    Ok(out)
}

const CLOSED_COLS: usize = 4;

pub fn check_closed_form(kind: ClosedKind, n: usize, cols: usize, limits: &Limits, exec: Exec) -> Result<Vec<Mismatch>> {
    let g = kind.graph(n)?;
    let f = ft_matrix(&g, cols, kind.with_q(), limits, exec)?;
    let c = ESymMatrix::from_fn(n, cols, kind.with_q(), exec, |i, j| closed_form_matrix_entry(kind, n, i, j))?;
    Ok(same_matrix("entry", &c, &f))
}

fn closed_forms(max_n: usize) -> Vec<Case> {
    let mut out = Vec::new();
    for (kind, name, top) in [
        (ClosedKind::Path, "P", max_n),
        (ClosedKind::Complete, "K", max_n.min(5)),
        (ClosedKind::AlmostComplete, "K'", max_n.min(5)),
        (ClosedKind::CycleQ1, "C", max_n),
    ] {
        for n in kind.min_vertices()..=top {
            out.push(case(format!("F_{name}{n}"), move |l| {
                check_closed_form(kind, n, CLOSED_COLS, l, Exec::Sequential)
            }));
        }
    }
    for n in 1..=max_n {
        out.push(case(format!("X_P{n}"), move |l| {
            let x = chromatic_e(&Graph::path(n), true, l, Exec::Sequential)?;
            Ok(same("path", &closed_form_x(ClosedFormX::PathQ, n)?, &x).into_iter().collect())
        }));
    }
    for n in 3..=max_n {
        out.push(case(format!("X_C{n}"), move |l| {
            let x = chromatic_e(&Graph::cycle(n), false, l, Exec::Sequential)?;
            Ok(same("cycle", &closed_form_x(ClosedFormX::CycleQ1, n)?, &x).into_iter().collect())
        }));
        out.push(case(format!("X_dC{n}"), move |l| {
            let x = chromatic_e(&directed_cycle(n), true, l, Exec::Sequential)?;
            Ok(same("directed cycle", &closed_form_x(ClosedFormX::DirectedCycleQ, n)?, &x)
                .into_iter()
                .collect())
        }));
    }
    out
}

/// Oracle against the forest, matrix and (for NUIGs) Hikita expansions.
pub fn check_oracle_cross(g: &Graph, with_q: bool, limits: &Limits, exec: Exec) -> Result<Vec<Mismatch>> {
    let oracle = chromatic_e(g, with_q, limits, exec)?;
    let mut out = Vec::new();
    out.extend(same("forest", &oracle, &x_forest(g, with_q, limits, exec)?));
    out.extend(same("matrix", &oracle, &x_from_matrix(g, with_q, limits, exec)?));
    if g.is_nuig() {
        let h = hikita_x(g, limits, exec)?;
        out.extend(same("hikita", &oracle, &if with_q { h } else { h.eval_q1()? }));
    }
    Ok(out)
}

fn oracle_cross(max_n: usize) -> Result<Vec<Case>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        for g in Graph::enumerate_nuigs(n)? {
            out.push(case(format!("{} (q)", g.literal()), move |l| {
                check_oracle_cross(&g, true, l, Exec::Sequential)
            }));
        }
    }
    for n in 1..=max_n.min(5) {
        for g in Graph::all_graphs(n)? {
            out.push(case(g.literal(), move |l| check_oracle_cross(&g, false, l, Exec::Sequential)));
        }
    }
    Ok(out)
}

fn mismatch(check: impl Into<String>, expected: impl fmt::Display, got: impl fmt::Display) -> Mismatch {
    Mismatch {
        check: check.into(),
        expected: expected.to_string(),
        got: got.to_string(),
    }
}

/// Round trip, bijectivity and statistics of the forest break map on
/// `FT^(i)(G + H + P_j)` for every `i`.
pub fn check_forest_break(g: &Graph, h: &Graph, j: usize, limits: &Limits) -> Result<Vec<Mismatch>> {
    let gh = g.glue(h)?;
    let ghp = gh.glue(&Graph::path(j))?;
    let hj = h.glue(&Graph::path(j))?;
    let n = g.n();
    let mut out = Vec::new();
    for i in 1..gh.n() + j {
        let members = enumerate_forest_triples(&gh, i, j, limits)?;
        let mut images = HashSet::new();
        for f in &members {
            let b = break_forest(f, n)?;
            let gk = g.glue(&Graph::path(b.k))?;
            let at = |what: &str| format!("({i},{j}) {what}");
            if b.left.validate(&gk).is_err() || !b.left.satisfies(FtFilter { n, i, j: b.k }) {
                out.push(mismatch(at("left image"), format!("member of FT^({i})(G+P{})", b.k), format!("{:?}", b.left)));
            }
            if b.right.validate(&hj).is_err() || !b.right.satisfies(FtFilter { n: h.n(), i: b.k, j }) {
                out.push(mismatch(at("right image"), format!("member of FT^({})(H+P{j})", b.k), format!("{:?}", b.right)));
            }
            if f.sign() != b.left.sign() * b.right.sign() {
                out.push(mismatch(at("sign"), f.sign(), b.left.sign() * b.right.sign()));
            }
            let union = b.left.reduced_type().union(&b.right.reduced_type());
            if f.reduced_type() != union {
                out.push(mismatch(at("reduced type"), f.reduced_type().label(), union.label()));
            }
            if ghp.is_nuig() {
                let (w, w2) = (f.weight(&ghp)?, b.left.weight(&gk)? + b.right.weight(&hj)?);
                if w != w2 {
                    out.push(mismatch(at("weight"), w, w2));
                }
            }
            let back = unbreak_forest(&b.left, &b.right, n)?;
            if &back != f {
                out.push(mismatch(at("round trip"), format!("{f:?}"), format!("{back:?}")));
            }
            images.insert((b.left, b.right));
        }
        if images.len() != members.len() {
            out.push(mismatch(format!("({i},{j}) injectivity"), members.len(), images.len()));
        }
        let mut count = 0;
        for k in 1..n + j + h.n() {
            let left = enumerate_forest_triples(g, i, k, limits)?;
            let right = enumerate_forest_triples(h, k, j, limits)?;
            for a in &left {
                for c in &right {
                    let f = unbreak_forest(a, c, n)?;
                    if f.validate(&ghp).is_err() || !f.satisfies(FtFilter { n: gh.n(), i, j }) {
                        out.push(mismatch(format!("({i},{j}) unbreak image"), "member", format!("{f:?}")));
                    }
                    count += 1;
                }
            }
        }
        if count != members.len() {
            out.push(mismatch(format!("({i},{j}) cardinality"), members.len(), count));
        }
    }
    Ok(out)
}

fn factorial_monomial(k: usize) -> BracketMonomial {
    let mut m = BracketMonomial::one();
    for t in 2..=k {
        m.mul_bracket(t, 1);
    }
    m
}

/// Round trip, bijectivity and `c_T [k]_q! = c_T' c_T''` for the tableau
/// break map on `SYT(G + H + K_j)`; `G` and `H` are NUIGs.
pub fn check_tableau_break(g: &Graph, h: &Graph, j: usize, limits: &Limits) -> Result<Vec<Mismatch>> {
    let whole = g.glue(h)?.glue(&Graph::complete(j))?;
    let hj = h.glue(&Graph::complete(j))?;
    let all = syt_enumerate(&whole, limits)?;
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    for (t, ct) in &all {
        let b = break_tableau(t, h.n(), j)?;
        let gk = g.glue(&Graph::complete(b.k))?;
        let (Some(cg), Some(ch)) = (coefficient_of(&gk, &b.left)?, coefficient_of(&hj, &b.right)?) else {
            out.push(mismatch(format!("{t} image"), "tableaux of G+K_k and H+K_j", format!("{} and {}", b.left, b.right)));
            continue;
        };
        let (lhs, rhs) = (ct.mul(&factorial_monomial(b.k)), cg.mul(&ch));
        if lhs != rhs {
            out.push(mismatch(format!("{t} coefficient"), lhs, rhs));
        }
        if b.left.drops().last() != t.drops().last() {
            out.push(mismatch(format!("{t} last column"), t.drops()[t.len() - 1], b.left.drops()[b.left.len() - 1]));
        }
        let union = b.left.reduced_shape().union(&b.right.reduced_shape());
        if t.reduced_shape() != union {
            out.push(mismatch(format!("{t} reduced shape"), t.reduced_shape().label(), union.label()));
        }
        let back = unbreak_tableau(&b.left, &b.right)?;
        if &back != t {
            out.push(mismatch(format!("{t} round trip"), t, back));
        }
        seen.insert((b.left, b.right));
    }
    if seen.len() != all.len() {
        out.push(mismatch("injectivity", all.len(), seen.len()));
    }
    let right_all = syt_enumerate(&hj, limits)?;
    let mut count = 0;
    for k in 1..=h.n() + j - 1 {
        let gk = g.glue(&Graph::complete(k))?;
        for (l, _) in syt_enumerate(&gk, limits)? {
            for (r, _) in right_all.iter().filter(|(r, _)| r.drops().last() == Some(&k)) {
                let t = unbreak_tableau(&l, r)?;
                if coefficient_of(&whole, &t)?.is_none() {
                    out.push(mismatch("unbreak image", "tableau of G+H+K_j", t));
                }
                count += 1;
            }
        }
    }
    if count != all.len() {
        out.push(mismatch("cardinality", all.len(), count));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(s: Suite, max_n: usize) -> Summary {
        let mut seen = Vec::new();
        let sum = run_suite(s, max_n, &Limits::default(), Exec::Parallel, |r| seen.push(r.index)).unwrap();
        assert_eq!(seen, (0..sum.cases).collect::<Vec<_>>());
        sum
    }

    #[test]
    fn small_suites_pass() {
        for s in Suite::ALL {
            let sum = run(s, 4);
            assert!(sum.cases > 0, "{s}");
            assert!(sum.ok(), "{sum:?}");
        }
    }

    #[test]
    fn names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("gluing2".parse::<Suite>().is_err());
    }

    #[test]
    fn deterministic_order() {
        assert_eq!(case_labels(Suite::Trace, 6).unwrap(), case_labels(Suite::Trace, 6).unwrap());
        assert_eq!(trace_graphs(6).unwrap().len(), 2 + 8 + 64 + 1024 + TRACE_SAMPLE_SIZE);
    }

    #[test]
    fn break_maps_on_small_pairs() {
        let lim = Limits::default();
        let gs = [Graph::path(2), Graph::complete(3), Graph::new(3, &[(1, 3)]).unwrap()];
        for g in &gs {
            for h in &gs {
                assert_eq!(check_forest_break(g, h, 2, &lim).unwrap(), vec![], "{g} {h}");
            }
        }
        let k3 = Graph::complete(3);
        assert_eq!(check_tableau_break(&k3, &Graph::path(3), 2, &lim).unwrap(), vec![]);
    }

    #[test]
    fn mismatches_are_reported() {
        let (a, b) = (crate::esym::eint(&[2], 1), crate::esym::eint(&[2], 2));
        let m = same("x", &a, &b).unwrap();
        assert_eq!((m.expected.as_str(), m.got.as_str()), ("e2", "2e2"));
        assert!(same("x", &a, &a).is_none());
    }
}
