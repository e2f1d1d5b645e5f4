//! Simple graphs on `[n]`, gluing, reversal, NUIGs and circular gluing.

use std::collections::BTreeMap;
use std::fmt;

use rand::Rng;

use crate::error::{Error, Result};

/// Largest vertex count representable by the bitset adjacency.
pub const MAX_VERTICES: usize = 64;

/// Simple graph on vertices `1..=n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    /// `adj[v - 1]` has bit `u - 1` set when `{u, v}` is an edge.
    adj: Vec<u64>,
}

/// Named families.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StandardKind {
    Path,
    Cycle,
    Complete,
    AlmostComplete,
}

impl Graph {
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::OutOfRange(format!("vertex count {n}")));
        }
        Ok(Graph {
            n,
            adj: vec![0; n],
        })
    }

    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for &(u, v) in edges {
            if u == v || u == 0 || v == 0 || u > n || v > n {
                return Err(Error::Malformed(format!("edge {u}-{v} on {n} vertices")));
            }
            if g.has_edge(u, v) {
                return Err(Error::Malformed(format!("duplicate edge {u}-{v}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    fn add_edge(&mut self, u: usize, v: usize) {
        self.adj[u - 1] |= 1 << (v - 1);
        self.adj[v - 1] |= 1 << (u - 1);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && (self.adj[u - 1] >> (v - 1)) & 1 == 1
    }

    /// Neighbour bitset of `v` (bit `u - 1` for neighbour `u`).
    pub fn neighbours(&self, v: usize) -> u64 {
        self.adj[v - 1]
    }

    /// Edges `(i, j)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 1..=self.n {
            let mut higher = self.adj[i - 1] >> i;
            let mut j = i + 1;
            while higher != 0 {
                if higher & 1 == 1 {
                    out.push((i, j));
                }
                higher >>= 1;
                j += 1;
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn standard(kind: StandardKind, n: usize) -> Result<Self> {
        let min = match kind {
            StandardKind::Path | StandardKind::Complete => 1,
            StandardKind::Cycle => 3,
            StandardKind::AlmostComplete => 2,
        };
        if n < min || n > MAX_VERTICES {
            return Err(Error::OutOfRange(format!("{kind:?} on {n} vertices")));
        }
        let mut g = Self::empty(n)?;
        match kind {
            StandardKind::Path | StandardKind::Cycle => {
                for i in 1..n {
                    g.add_edge(i, i + 1);
                }
                if kind == StandardKind::Cycle {
                    g.add_edge(1, n);
                }
            }
            StandardKind::Complete | StandardKind::AlmostComplete => {
                for i in 1..=n {
                    for j in i + 1..=n {
                        if !(kind == StandardKind::AlmostComplete && i == 1 && j == n) {
                            g.add_edge(i, j);
                        }
                    }
                }
            }
        }
        Ok(g)
    }

    pub fn path(n: usize) -> Self {
        Self::standard(StandardKind::Path, n).expect("path size")
    }

    pub fn cycle(n: usize) -> Self {
        Self::standard(StandardKind::Cycle, n).expect("cycle size")
    }

    pub fn complete(n: usize) -> Self {
        Self::standard(StandardKind::Complete, n).expect("complete size")
    }

    pub fn almost_complete(n: usize) -> Self {
        Self::standard(StandardKind::AlmostComplete, n).expect("almost-complete size")
    }

    /// `G + H`: vertex `n` of `G` is identified with vertex 1 of `H`.
    pub fn glue(&self, h: &Graph) -> Result<Graph> {
        let n = self.n;
        let mut g = Self::empty(n + h.n - 1)?;
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in h.edges() {
            g.add_edge(u + n - 1, v + n - 1);
        }
        Ok(g)
    }

    /// Glue a sequence left to right.
    pub fn glue_all(parts: &[Graph]) -> Result<Graph> {
        let mut it = parts.iter();
        let first = it
            .next()
            .ok_or_else(|| Error::Malformed("empty gluing chain".into()))?;
        it.try_fold(first.clone(), |acc, g| acc.glue(g))
    }

    /// Reverse labelling `i -> n + 1 - i`.
    pub fn reverse(&self) -> Graph {
        let n = self.n;
        let mut g = Graph {
            n,
            adj: vec![0; n],
        };
        for (u, v) in self.edges() {
            g.add_edge(n + 1 - v, n + 1 - u);
        }
        g
    }

    /// Natural unit interval graph test.
    pub fn is_nuig(&self) -> bool {
        self.nuig_violation().is_none()
    }

    /// A triple `i < j < k` with `{i, k}` an edge but `{i, j}` or `{j, k}` missing.
    pub fn nuig_violation(&self) -> Option<(usize, usize, usize)> {
        for (i, k) in self.edges() {
            for j in i + 1..k {
                if !self.has_edge(i, j) || !self.has_edge(j, k) {
                    return Some((i, j, k));
                }
            }
        }
        None
    }

    pub fn require_nuig(&self) -> Result<()> {
        match self.nuig_violation() {
            None => Ok(()),
            Some((i, j, k)) => Err(Error::NotNuig(format!(
                "edge {i}-{k} present but {i}-{j} or {j}-{k} missing"
            ))),
        }
    }

    /// The Hessenberg function `h(i) = max({i} ∪ N(i))` of an NUIG.
    pub fn hessenberg(&self) -> Option<Vec<usize>> {
        if !self.is_nuig() {
            return None;
        }
        Some(
            (1..=self.n)
                .map(|i| {
                    let a = self.adj[i - 1];
                    if a == 0 {
                        i
                    } else {
                        (64 - a.leading_zeros() as usize).max(i)
                    }
                })
                .collect(),
        )
    }

    pub fn from_hessenberg(h: &[usize]) -> Result<Graph> {
        let n = h.len();
        let mut g = Self::empty(n)?;
        for (idx, &hi) in h.iter().enumerate() {
            let i = idx + 1;
            if hi < i || hi > n || (idx > 0 && hi < h[idx - 1]) {
                return Err(Error::Malformed(format!("not a Hessenberg function: {h:?}")));
            }
            for j in i + 1..=hi {
                g.add_edge(i, j);
            }
        }
        Ok(g)
    }

    /// Every NUIG on `[n]`, in lexicographic order of Hessenberg functions.
    pub fn enumerate_nuigs(n: usize) -> Result<Vec<Graph>> {
        if n == 0 || n > 12 {
            return Err(Error::OutOfRange(format!("NUIG enumeration for n = {n}")));
        }
        fn rec(i: usize, n: usize, h: &mut Vec<usize>, out: &mut Vec<Graph>) {
            if i > n {
                out.push(Graph::from_hessenberg(h).expect("valid Hessenberg function"));
                return;
            }
            let lo = h.last().copied().unwrap_or(1).max(i);
            for hi in lo..=n {
                h.push(hi);
                rec(i + 1, n, h, out);
                h.pop();
            }
        }
        let mut out = Vec::new();
        rec(1, n, &mut Vec::new(), &mut out);
        Ok(out)
    }

    /// All `2^(n choose 2)` labelled graphs on `[n]`.
    pub fn all_graphs(n: usize) -> Result<Vec<Graph>> {
        if n == 0 || n > 6 {
            return Err(Error::OutOfRange(format!("exhaustive graph list for n = {n}")));
        }
        let pairs: Vec<(usize, usize)> = (1..=n)
            .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
            .collect();
        let mut out = Vec::with_capacity(1 << pairs.len());
        for mask in 0u64..(1 << pairs.len()) {
            let mut g = Self::empty(n)?;
            for (b, &(u, v)) in pairs.iter().enumerate() {
                if (mask >> b) & 1 == 1 {
                    g.add_edge(u, v);
                }
            }
            out.push(g);
        }
        Ok(out)
    }

    /// Uniform random labelled graph on `[n]`.
    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<Graph> {
        let mut g = Self::empty(n)?;
        for i in 1..=n {
            for j in i + 1..=n {
                if rng.gen_bool(0.5) {
                    g.add_edge(i, j);
                }
            }
        }
        Ok(g)
    }

    /// `G°`: vertex `n` merged into vertex 1, multiplicities kept.
    pub fn circle_glue(&self) -> Result<MultiDigraph> {
        self.circular(false)
    }

    /// `G°` with every edge directed from its smaller to its larger end
    /// before gluing; an edge `{u, n}` becomes the arc `u -> 1`.
    pub fn directed_circle_glue(&self) -> Result<MultiDigraph> {
        self.circular(true)
    }

    fn circular(&self, directed: bool) -> Result<MultiDigraph> {
        let n = self.n;
        if n < 2 {
            return Err(Error::OutOfRange("circular gluing needs at least 2 vertices".into()));
        }
        let mut m = MultiDigraph::new(n - 1, directed);
        for (u, v) in self.edges() {
            if v == n {
                m.add_arc(u, 1);
            } else {
                m.add_arc(u, v);
            }
        }
        Ok(m)
    }

    /// Relabel so that the result is `G` read through `perm` (`perm[v-1]` is
    /// the new label of `v`).
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        let edges: Vec<(usize, usize)> = self
            .edges()
            .into_iter()
            .map(|(u, v)| (perm[u - 1], perm[v - 1]))
            .collect();
        Graph::new(self.n, &edges)
    }

    /// Induced subgraph on the vertices of `mask`, relabelled in order.
    pub fn induced(&self, mask: u64) -> Result<Graph> {
        let verts: Vec<usize> = (1..=self.n).filter(|v| (mask >> (v - 1)) & 1 == 1).collect();
        let mut g = Self::empty(verts.len())?;
        for (a, &u) in verts.iter().enumerate() {
            for (b, &v) in verts.iter().enumerate().skip(a + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(a + 1, b + 1);
                }
            }
        }
        Ok(g)
    }

    /// Literal form `G{n=5; 1-2,1-3}`.
    pub fn literal(&self) -> String {
        let e: Vec<String> = self.edges().iter().map(|(u, v)| format!("{u}-{v}")).collect();
        format!("G{{n={}; {}}}", self.n, e.join(","))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.literal())
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.literal())
    }
}

/// Multigraph on `[n]` with loops. When `directed` is false each unordered
/// edge is stored once as `(min, max)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MultiDigraph {
    pub n: usize,
    pub directed: bool,
    pub arcs: BTreeMap<(usize, usize), usize>,
}

impl MultiDigraph {
    pub fn new(n: usize, directed: bool) -> Self {
        MultiDigraph {
            n,
            directed,
            arcs: BTreeMap::new(),
        }
    }

    pub fn add_arc(&mut self, u: usize, v: usize) {
        let key = if self.directed { (u, v) } else { (u.min(v), u.max(v)) };
        *self.arcs.entry(key).or_insert(0) += 1;
    }

    pub fn multiplicity(&self, u: usize, v: usize) -> usize {
        let key = if self.directed { (u, v) } else { (u.min(v), u.max(v)) };
        self.arcs.get(&key).copied().unwrap_or(0)
    }

    pub fn total_multiplicity(&self) -> usize {
        self.arcs.values().sum()
    }

    pub fn has_loop(&self) -> bool {
        self.arcs.keys().any(|(u, v)| u == v)
    }

    /// Underlying simple graph (loops dropped, multiplicities collapsed).
    pub fn underlying(&self) -> Graph {
        let mut g = Graph::empty(self.n.max(1)).expect("vertex count");
        for &(u, v) in self.arcs.keys() {
            if u != v && !g.has_edge(u, v) {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// Parallel arcs and edges merged into one record each, undirected.
    pub fn from_graph(g: &Graph, directed: bool) -> Self {
        let mut m = MultiDigraph::new(g.n(), directed);
        for (u, v) in g.edges() {
            m.add_arc(u, v);
        }
        m
    }
}

impl fmt::Display for MultiDigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.directed { ">" } else { "-" };
        let arcs: Vec<String> = self
            .arcs
            .iter()
            .map(|(&(u, v), &m)| {
                if m == 1 {
                    format!("{u}{sep}{v}")
                } else {
                    format!("{u}{sep}{v}x{m}")
                }
            })
            .collect();
        write!(f, "M{{n={}; {}}}", self.n, arcs.join(","))
    }
}

/// Catalan number `C_n`.
pub fn catalan(n: usize) -> u64 {
    let mut c: u64 = 1;
    for k in 0..n as u64 {
        c = c * 2 * (2 * k + 1) / (k + 2);
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bowtie() -> Graph {
        Graph::complete(3).glue(&Graph::complete(3)).unwrap()
    }

    #[test]
    fn standard_families() {
        let p1 = Graph::path(1);
        assert_eq!((p1.n(), p1.edge_count()), (1, 0));
        assert_eq!(
            Graph::almost_complete(4).edges(),
            vec![(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)]
        );
        assert_eq!(Graph::cycle(6).edge_count(), 6);
        assert!(Graph::standard(StandardKind::Cycle, 2).is_err());
        assert!(Graph::standard(StandardKind::Path, 0).is_err());
    }

    #[test]
    fn bowtie_by_gluing() {
        assert_eq!(
            bowtie().edges(),
            vec![(1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5)]
        );
        assert_eq!(Graph::path(3).glue(&Graph::path(4)).unwrap(), Graph::path(6));
        assert_eq!(bowtie().glue(&Graph::path(1)).unwrap(), bowtie());
    }

    #[test]
    fn reversal() {
        assert_eq!(bowtie().reverse(), bowtie());
        assert_eq!(Graph::path(5).reverse(), Graph::path(5));
        let g = Graph::new(4, &[(1, 2), (1, 3)]).unwrap();
        assert_eq!(g.reverse().edges(), vec![(2, 4), (3, 4)]);
    }

    #[test]
    fn nuig_recognition() {
        assert!(bowtie().is_nuig());
        assert!(!Graph::cycle(6).is_nuig());
        let fig = Graph::new(
            6,
            &[(1, 2), (1, 3), (2, 3), (2, 4), (3, 4), (3, 5), (4, 5), (4, 6), (5, 6)],
        )
        .unwrap();
        assert!(fig.is_nuig());
        assert_eq!(Graph::from_hessenberg(&fig.hessenberg().unwrap()).unwrap(), fig);
    }

    #[test]
    fn nuig_counts_are_catalan() {
        for n in 1..=8 {
            let all = Graph::enumerate_nuigs(n).unwrap();
            assert_eq!(all.len() as u64, catalan(n), "n={n}");
            assert!(all.iter().all(Graph::is_nuig));
            let mut dedup = all.clone();
            dedup.dedup();
            assert_eq!(dedup.len(), all.len());
        }
        assert_eq!(Graph::enumerate_nuigs(3).unwrap().len(), 5);
        assert_eq!(Graph::enumerate_nuigs(6).unwrap().len(), 132);
    }

    #[test]
    fn nuigs_match_brute_force() {
        for n in 1..=5 {
            let brute = Graph::all_graphs(n)
                .unwrap()
                .into_iter()
                .filter(Graph::is_nuig)
                .count();
            assert_eq!(brute as u64, catalan(n));
        }
    }

    #[test]
    fn circle_glue_examples() {
        let c = Graph::path(5).circle_glue().unwrap();
        assert_eq!(c.underlying(), Graph::cycle(4));
        let g = Graph::complete(3).glue(&Graph::path(2)).unwrap();
        let m = g.circle_glue().unwrap();
        assert_eq!(m.multiplicity(1, 3), 2);
        let b = bowtie().circle_glue().unwrap();
        assert_eq!(b.multiplicity(1, 3), 2);
        assert_eq!(b.total_multiplicity(), 6);
    }

    #[test]
    fn directed_circle_glue_examples() {
        let m = Graph::almost_complete(4).directed_circle_glue().unwrap();
        let arcs: Vec<(usize, usize)> = m.arcs.keys().copied().collect();
        assert_eq!(arcs, vec![(1, 2), (1, 3), (2, 1), (2, 3), (3, 1)]);
        let m = Graph::path(4).directed_circle_glue().unwrap();
        let arcs: Vec<(usize, usize)> = m.arcs.keys().copied().collect();
        assert_eq!(arcs, vec![(1, 2), (2, 3), (3, 1)]);
        let m = Graph::complete(2).directed_circle_glue().unwrap();
        assert_eq!(m.n, 1);
        assert!(m.has_loop());
    }

    #[test]
    fn fig9_cycle_with_chords() {
        let parts = [
            Graph::path(2),
            Graph::cycle(3),
            Graph::path(1),
            Graph::cycle(6),
            Graph::path(3),
            Graph::cycle(3),
        ];
        let g = Graph::glue_all(&parts).unwrap();
        let m = g.circle_glue().unwrap();
        assert_eq!(m.n, 12);
        assert_eq!(m.total_multiplicity(), 15);
        assert!(m.arcs.values().all(|&k| k == 1));
        let u = m.underlying();
        let degrees: Vec<u32> = (1..=12).map(|v| u.neighbours(v).count_ones()).collect();
        assert_eq!(degrees.iter().filter(|&&d| d == 2).count(), 12 - 5);
    }
}

#[cfg(test)]
mod props {
    use super::*;
    use proptest::prelude::*;

    fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n).prop_flat_map(|n| {
            prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let mut edges = Vec::new();
                let mut b = bits.into_iter();
                for i in 1..=n {
                    for j in i + 1..=n {
                        if b.next().unwrap() {
                            edges.push((i, j));
                        }
                    }
                }
                Graph::new(n, &edges).unwrap()
            })
        })
    }

    fn nuig(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n).prop_flat_map(|n| {
            let all = Graph::enumerate_nuigs(n).unwrap();
            (0..all.len()).prop_map(move |k| all[k].clone())
        })
    }

    proptest! {
        #[test]
        fn glue_is_associative(a in graph(4), b in graph(4), c in graph(4)) {
            let left = a.glue(&b).unwrap().glue(&c).unwrap();
            let right = a.glue(&b.glue(&c).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn glue_counts(a in graph(5), b in graph(5)) {
            let g = a.glue(&b).unwrap();
            prop_assert_eq!(g.n(), a.n() + b.n() - 1);
            prop_assert_eq!(g.edge_count(), a.edge_count() + b.edge_count());
        }

        #[test]
        fn reverse_is_involution(a in graph(6)) {
            prop_assert_eq!(a.reverse().reverse(), a);
        }

        #[test]
        fn nuigs_closed_under_glue(a in nuig(5), b in nuig(5)) {
            prop_assert!(a.glue(&b).unwrap().is_nuig());
        }

        #[test]
        fn directed_glue_keeps_all_edges(a in graph(6)) {
            prop_assume!(a.n() >= 2);
            let m = a.directed_circle_glue().unwrap();
            prop_assert_eq!(m.total_multiplicity(), a.edge_count());
        }
    }
}
