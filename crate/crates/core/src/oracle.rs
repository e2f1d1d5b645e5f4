//! Chromatic (quasi)symmetric functions by exhaustive proper colouring, and
//! the closed forms for paths, cycles and directed cycles.

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::esym::{compositions, monomial_to_e, ESym, MonomialExpansion, Partition};
use crate::graph::{Graph, MultiDigraph};
use crate::par::Exec;
use crate::qalg::{QPoly, QRat};
use crate::Limits;

/// Arc list consumed by the colouring kernel. An arc `(u, v)` with
/// multiplicity `m` adds `m` ascents when `colour(u) < colour(v)`.
#[derive(Clone, Debug)]
pub struct ArcList {
    pub n: usize,
    pub arcs: Vec<(usize, usize, usize)>,
}

/// Anything that can be coloured.
pub trait Colorable {
    fn arc_list(&self) -> ArcList;
}

impl Colorable for Graph {
    fn arc_list(&self) -> ArcList {
        ArcList {
            n: self.n(),
            arcs: self.edges().into_iter().map(|(u, v)| (u, v, 1)).collect(),
        }
    }
}

impl Colorable for MultiDigraph {
    fn arc_list(&self) -> ArcList {
        ArcList {
            n: self.n,
            arcs: self.arcs.iter().map(|(&(u, v), &m)| (u, v, m)).collect(),
        }
    }
}

/// Whether all compositions with the same sorted parts received equal totals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetryReport {
    pub symmetric: bool,
    pub witness: Option<(Vec<usize>, Vec<usize>)>,
}

#[derive(Clone, Debug)]
pub struct ColoringResult {
    pub monomial: MonomialExpansion,
    pub symmetry: SymmetryReport,
    /// Totals per colour-count composition.
    pub by_composition: BTreeMap<Vec<usize>, QPoly>,
}

type Counts = Vec<u64>;

fn add_shifted(dst: &mut Counts, src: &Counts, shift: usize) {
    if dst.len() < src.len() + shift {
        dst.resize(src.len() + shift, 0);
    }
    for (k, &c) in src.iter().enumerate() {
        dst[k + shift] += c;
    }
}

/// Sum over surjective proper colourings onto `{1..k}`, bucketed by
/// colour-count composition.
///
/// Colour classes are added one at a time in increasing colour order, so a
/// state is the coloured vertex set together with its composition.
pub fn chromatic_monomial<G: Colorable + ?Sized>(
    g: &G,
    with_q: bool,
    limits: &Limits,
    exec: Exec,
) -> Result<ColoringResult> {
    let arcs = g.arc_list();
    let n = arcs.n;
    if n > limits.oracle_vertices {
        return Err(Error::CostGuard {
            what: "colouring oracle",
            limit: limits.oracle_vertices,
            got: n,
        });
    }
    let mut conflict = vec![0u64; n];
    let mut into = vec![Vec::<(usize, usize)>::new(); n];
    let mut looped = false;
    for &(u, v, m) in &arcs.arcs {
        if u == v {
            looped = true;
            continue;
        }
        conflict[u - 1] |= 1 << (v - 1);
        conflict[v - 1] |= 1 << (u - 1);
        if with_q {
            into[v - 1].push((u - 1, m));
        }
    }
    let empty = ColoringResult {
        monomial: MonomialExpansion::zero(),
        symmetry: SymmetryReport {
            symmetric: true,
            witness: None,
        },
        by_composition: BTreeMap::new(),
    };
    if looped {
        return Ok(empty);
    }
    let full: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };

    let ascents = |s: u64, class: u64| -> usize {
        let mut total = 0;
        let mut rest = class;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            for &(u, m) in &into[v] {
                if (s >> u) & 1 == 1 {
                    total += m;
                }
            }
        }
        total
    };

    let independent_subsets = |avail: u64| -> Vec<u64> {
        let mut out = Vec::new();
        fn rec(avail: u64, chosen: u64, conflict: &[u64], out: &mut Vec<u64>) {
            if avail == 0 {
                if chosen != 0 {
                    out.push(chosen);
                }
                return;
            }
            let v = avail.trailing_zeros() as usize;
            let bit = 1u64 << v;
            rec(avail & !bit & !conflict[v], chosen | bit, conflict, out);
            rec(avail & !bit, chosen, conflict, out);
        }
        rec(avail, 0, &conflict, &mut out);
        out
    };

    let mut finished: BTreeMap<Vec<usize>, Counts> = BTreeMap::new();
    let mut layer: Vec<((u64, Vec<usize>), Counts)> = vec![((0, Vec::new()), vec![1])];
    while !layer.is_empty() {
        let produced = exec.map(&layer, |((s, comp), counts)| {
            let mut out = Vec::new();
            for class in independent_subsets(full & !s) {
                let mut c = comp.clone();
                c.push(class.count_ones() as usize);
                let shift = if with_q { ascents(*s, class) } else { 0 };
                out.push(((s | class, c), counts.clone(), shift));
            }
            out
        });
        let mut next: HashMap<(u64, Vec<usize>), Counts> = HashMap::new();
        for items in produced {
            for (key, counts, shift) in items {
                if key.0 == full {
                    add_shifted(finished.entry(key.1).or_default(), &counts, shift);
                } else {
                    add_shifted(next.entry(key).or_default(), &counts, shift);
                }
            }
        }
        let mut sorted: Vec<_> = next.into_iter().collect();
        sorted.sort_by(|a, b| a.0.cmp(&b.0));
        layer = sorted;
    }

    let by_composition: BTreeMap<Vec<usize>, QPoly> = finished
        .into_iter()
        .map(|(c, counts)| (c, QPoly::from_counts(&counts)))
        .collect();
    let mut by_sorted: BTreeMap<Partition, (Vec<usize>, QPoly)> = BTreeMap::new();
    let mut witness = None;
    for (comp, poly) in &by_composition {
        let p = Partition::new(comp.iter().copied());
        match by_sorted.get(&p) {
            Some((first, seen)) => {
                if seen != poly && witness.is_none() {
                    witness = Some((first.clone(), comp.clone()));
                }
            }
            None => {
                by_sorted.insert(p, (comp.clone(), poly.clone()));
            }
        }
    }
    // Every rearrangement must occur with the same total; a missing one is an
    // implicit zero.
    if witness.is_none() {
        for (p, (first, poly)) in &by_sorted {
            let perms = distinct_rearrangements(p.parts());
            if let Some(missing) = perms.iter().find(|c| !by_composition.contains_key(*c)) {
                if !poly.is_zero() {
                    witness = Some((first.clone(), missing.clone()));
                    break;
                }
            }
        }
    }
    let mut monomial = MonomialExpansion::zero();
    for (p, (_, poly)) in by_sorted {
        monomial.add_term(p, &poly);
    }
    Ok(ColoringResult {
        monomial,
        symmetry: SymmetryReport {
            symmetric: witness.is_none(),
            witness,
        },
        by_composition,
    })
}

fn distinct_rearrangements(parts: &[usize]) -> Vec<Vec<usize>> {
    let mut v: Vec<usize> = parts.to_vec();
    v.sort_unstable();
    let mut out = vec![v.clone()];
    while next_permutation(&mut v) {
        out.push(v.clone());
    }
    out
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// The e-expansion of `X_g` (or `X_g(x;q)`).
pub fn chromatic_e<G: Colorable + ?Sized>(
    g: &G,
    with_q: bool,
    limits: &Limits,
    exec: Exec,
) -> Result<ESym> {
    let r = chromatic_monomial(g, with_q, limits, exec)?;
    if let Some((left, right)) = r.symmetry.witness {
        return Err(Error::NotSymmetric { left, right });
    }
    monomial_to_e(&r.monomial)
}

/// Families with closed-form chromatic functions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClosedFormX {
    /// `sum [a_1] ([a_2]-1) ... ([a_l]-1) e_sort(a)`.
    PathQ,
    /// `sum a_1 (a_1-1) ... (a_l-1) e_sort(a)`, at `q = 1`.
    CycleQ1,
    /// `sum a_1 ([a_1]-1) ... ([a_l]-1) e_sort(a)`.
    DirectedCycleQ,
}

pub fn closed_form_x(kind: ClosedFormX, n: usize) -> Result<ESym> {
    let min = if kind == ClosedFormX::PathQ { 1 } else { 3 };
    if n < min {
        return Err(Error::OutOfRange(format!("{kind:?} with n = {n}")));
    }
    let one = QPoly::one();
    let mut out = ESym::zero();
    for alpha in compositions(n) {
        let mut c = match kind {
            ClosedFormX::PathQ => QPoly::q_integer(alpha[0]),
            ClosedFormX::CycleQ1 => QPoly::constant(alpha[0] as i64 * (alpha[0] as i64 - 1)),
            ClosedFormX::DirectedCycleQ => {
                (&QPoly::q_integer(alpha[0]) - &one).scale(&(alpha[0] as i64).into())
            }
        };
        for &a in &alpha[1..] {
            let f = match kind {
                ClosedFormX::CycleQ1 => QPoly::constant(a as i64 - 1),
                _ => &QPoly::q_integer(a) - &one,
            };
            c = &c * &f;
        }
        out.add_term(Partition::new(alpha.iter().copied()), &QRat::from_poly(c));
    }
    Ok(out)
}

/// The directed cycle with arcs `i -> i+1` and `n -> 1`.
pub fn directed_cycle(n: usize) -> MultiDigraph {
    let mut m = MultiDigraph::new(n, true);
    for i in 1..n {
        m.add_arc(i, i + 1);
    }
    m.add_arc(n, 1);
    m
}
