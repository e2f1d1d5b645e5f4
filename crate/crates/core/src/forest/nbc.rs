//! No-broken-circuit forests under the lexicographic edge order.

use crate::graph::Graph;

/// A subtree of a graph: sorted vertex list and lexicographically sorted
/// edge list.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tree {
    pub vertices: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
}

impl Tree {
    pub fn singleton(v: usize) -> Self {
        Tree {
            vertices: vec![v],
            edges: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn min_vertex(&self) -> usize {
        self.vertices[0]
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    /// Connected and acyclic on its own vertex set.
    pub fn is_tree(&self) -> bool {
        if self.vertices.is_empty() || self.edges.len() + 1 != self.vertices.len() {
            return false;
        }
        let mut uf = UnionFind::new(self.vertices.iter().copied().max().unwrap_or(0) + 1);
        for &(u, v) in &self.edges {
            if !self.contains(u) || !self.contains(v) || !uf.union(u, v) {
                return false;
            }
        }
        true
    }

    /// Read the smallest vertex, then repeatedly the smallest unread vertex
    /// adjacent in the tree to a read vertex.
    pub fn list(&self) -> Vec<usize> {
        let mut read = vec![self.vertices[0]];
        let mut seen = std::collections::BTreeSet::from([self.vertices[0]]);
        while read.len() < self.vertices.len() {
            let next = self
                .edges
                .iter()
                .filter_map(|&(u, v)| match (seen.contains(&u), seen.contains(&v)) {
                    (true, false) => Some(v),
                    (false, true) => Some(u),
                    _ => None,
                })
                .min()
                .expect("tree is connected");
            seen.insert(next);
            read.push(next);
        }
        read
    }

    /// Vertices shifted by `delta` (which may be negative).
    pub fn shifted(&self, delta: isize) -> Tree {
        let s = |v: usize| (v as isize + delta) as usize;
        Tree {
            vertices: self.vertices.iter().map(|&v| s(v)).collect(),
            edges: self.edges.iter().map(|&(u, v)| (s(u), s(v))).collect(),
        }
    }

    /// Restriction to the vertices in `lo..=hi`.
    pub fn restrict(&self, lo: usize, hi: usize) -> Tree {
        Tree {
            vertices: self
                .vertices
                .iter()
                .copied()
                .filter(|v| (lo..=hi).contains(v))
                .collect(),
            edges: self
                .edges
                .iter()
                .copied()
                .filter(|&(u, v)| (lo..=hi).contains(&u) && (lo..=hi).contains(&v))
                .collect(),
        }
    }

    pub fn normalize(&mut self) {
        self.vertices.sort_unstable();
        self.vertices.dedup();
        for e in &mut self.edges {
            if e.0 > e.1 {
                *e = (e.1, e.0);
            }
        }
        self.edges.sort_unstable();
    }
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut c = x;
        while self.parent[c] != r {
            let next = self.parent[c];
            self.parent[c] = r;
            c = next;
        }
        r
    }

    /// False when already joined.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        true
    }
}

/// True iff `edges` (a subset of `E(G)`) contains no broken circuit.
///
/// Scanning `E(G)` in increasing order, an edge whose ends are already
/// joined by smaller chosen edges closes a cycle in which it is the maximum,
/// so the chosen path between its ends is a broken circuit.
pub fn nbc_check(g: &Graph, edges: &[(usize, usize)]) -> bool {
    let mut chosen: Vec<(usize, usize)> = edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
    chosen.sort_unstable();
    if chosen.iter().any(|&(u, v)| !g.has_edge(u, v)) {
        return false;
    }
    let mut uf = UnionFind::new(g.n() + 1);
    for (u, v) in g.edges() {
        if uf.find(u) == uf.find(v) {
            return false;
        }
        if chosen.binary_search(&(u, v)).is_ok() {
            uf.union(u, v);
        }
    }
    true
}

/// The NUIG form of the test: no vertex has two larger neighbours among the
/// chosen edges.
pub fn nbc_check_nuig(edges: &[(usize, usize)]) -> bool {
    let mut larger = std::collections::HashMap::<usize, usize>::new();
    for &(u, v) in edges {
        let c = larger.entry(u.min(v)).or_insert(0);
        *c += 1;
        if *c >= 2 {
            return false;
        }
    }
    true
}

/// Enumeration state: index of the next edge, component label per vertex
/// and the edges chosen so far.
#[derive(Clone, Debug)]
pub(crate) struct NbcState {
    pub idx: usize,
    pub label: Vec<u8>,
    pub chosen: Vec<(usize, usize)>,
}

impl NbcState {
    pub(crate) fn root(n: usize) -> Self {
        NbcState {
            idx: 0,
            label: (0..=n as u8).collect(),
            chosen: Vec::new(),
        }
    }

    /// Children of this state, or `None` for a dead branch. An empty vector
    /// means the state is a complete forest.
    fn children(&self, edges: &[(usize, usize)]) -> Option<Vec<NbcState>> {
        if self.idx == edges.len() {
            return Some(Vec::new());
        }
        let (u, v) = edges[self.idx];
        let (lu, lv) = (self.label[u], self.label[v]);
        if lu == lv {
            return None;
        }
        let mut with = self.clone();
        with.idx += 1;
        with.chosen.push((u, v));
        let (keep, drop) = (lu.min(lv), lu.max(lv));
        for l in with.label.iter_mut() {
            if *l == drop {
                *l = keep;
            }
        }
        let mut without = self.clone();
        without.idx += 1;
        Some(vec![with, without])
    }
}

/// States at depth `depth` (or earlier leaves), in canonical order.
pub(crate) fn nbc_frontier(g: &Graph, depth: usize) -> Vec<NbcState> {
    let edges = g.edges();
    let mut out = Vec::new();
    let mut stack = vec![NbcState::root(g.n())];
    while let Some(s) = stack.pop() {
        if s.idx >= depth.min(edges.len()) {
            out.push(s);
            continue;
        }
        if let Some(kids) = s.children(&edges) {
            for k in kids.into_iter().rev() {
                stack.push(k);
            }
        }
    }
    out
}

/// Visit every NBC spanning forest below `state`, as an edge list.
pub(crate) fn for_each_nbc_forest_from<F: FnMut(&[(usize, usize)])>(
    edges: &[(usize, usize)],
    state: NbcState,
    f: &mut F,
) {
    let mut stack = vec![state];
    while let Some(s) = stack.pop() {
        match s.children(edges) {
            None => {}
            Some(kids) if kids.is_empty() => f(&s.chosen),
            Some(kids) => {
                for k in kids.into_iter().rev() {
                    stack.push(k);
                }
            }
        }
    }
}

/// Visit every NBC spanning forest of `g`.
pub fn for_each_nbc_forest<F: FnMut(&[(usize, usize)])>(g: &Graph, mut f: F) {
    let edges = g.edges();
    for_each_nbc_forest_from(&edges, NbcState::root(g.n()), &mut f);
}

/// Split a forest's edge list into trees ordered by minimum vertex.
pub fn forest_trees(n: usize, edges: &[(usize, usize)]) -> Vec<Tree> {
    let mut uf = UnionFind::new(n + 1);
    for &(u, v) in edges {
        uf.union(u, v);
    }
    let mut by_root: std::collections::BTreeMap<usize, Tree> = std::collections::BTreeMap::new();
    for v in 1..=n {
        let r = uf.find(v);
        by_root
            .entry(r)
            .or_insert_with(|| Tree {
                vertices: Vec::new(),
                edges: Vec::new(),
            })
            .vertices
            .push(v);
    }
    for &(u, v) in edges {
        let r = uf.find(u);
        by_root.get_mut(&r).unwrap().edges.push((u.min(v), u.max(v)));
    }
    let mut trees: Vec<Tree> = by_root.into_values().collect();
    for t in &mut trees {
        t.edges.sort_unstable();
    }
    trees.sort_by_key(|t| t.min_vertex());
    trees
}

/// `inv_G` of a word: pairs `a < b` with `w_a > w_b` adjacent in `G`.
pub fn inv_g(g: &Graph, word: &[usize]) -> usize {
    let mut count = 0;
    for a in 0..word.len() {
        for b in a + 1..word.len() {
            if word[a] > word[b] && g.has_edge(word[a], word[b]) {
                count += 1;
            }
        }
    }
    count
}

/// `inv_G(list(T_1) ... list(T_m))`.
pub fn forest_inversions(g: &Graph, trees: &[Tree]) -> usize {
    let word: Vec<usize> = trees.iter().flat_map(|t| t.list()).collect();
    inv_g(g, &word)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bowtie() -> Graph {
        Graph::complete(3).glue(&Graph::complete(3)).unwrap()
    }

    #[test]
    fn triangle_examples() {
        let k3 = Graph::complete(3);
        assert!(!nbc_check(&k3, &[(1, 2), (1, 3)]));
        assert!(nbc_check(&k3, &[(1, 2), (2, 3)]));
        assert!(nbc_check(&k3, &[(1, 3), (2, 3)]));
        for e in k3.edges() {
            assert!(nbc_check(&k3, &[e]));
        }
        assert!(!nbc_check_nuig(&[(1, 2), (1, 3)]));
    }

    #[test]
    fn both_tests_agree_on_nuigs() {
        for n in 1..=5 {
            for g in Graph::enumerate_nuigs(n).unwrap() {
                let edges = g.edges();
                for mask in 0u32..(1 << edges.len()) {
                    let chosen: Vec<_> = (0..edges.len())
                        .filter(|b| (mask >> b) & 1 == 1)
                        .map(|b| edges[b])
                        .collect();
                    let mut uf = UnionFind::new(n + 1);
                    if !chosen.iter().all(|&(u, v)| uf.union(u, v)) {
                        continue;
                    }
                    assert_eq!(nbc_check(&g, &chosen), nbc_check_nuig(&chosen), "{g} {chosen:?}");
                }
            }
        }
    }

    #[test]
    fn forest_count_is_chromatic_coefficient_sum() {
        // |chi_{K_n}(-1)| = n!
        for n in 1..=6 {
            let mut count = 0;
            for_each_nbc_forest(&Graph::complete(n), |_| count += 1);
            assert_eq!(count, (1..=n).product::<usize>());
        }
        let mut count = 0;
        for_each_nbc_forest(&Graph::cycle(5), |_| count += 1);
        // chi_{C_5}(k) = (k-1)^5 - (k-1), so |chi(-1)| = 32 - 2.
        assert_eq!(count, 30);
    }

    #[test]
    fn enumeration_matches_check() {
        for g in Graph::all_graphs(4).unwrap() {
            let mut listed = Vec::new();
            for_each_nbc_forest(&g, |e| listed.push(e.to_vec()));
            let edges = g.edges();
            let mut brute = Vec::new();
            for mask in 0u32..(1 << edges.len()) {
                let chosen: Vec<_> = (0..edges.len())
                    .filter(|b| (mask >> b) & 1 == 1)
                    .map(|b| edges[b])
                    .collect();
                let mut uf = UnionFind::new(5);
                if chosen.iter().all(|&(u, v)| uf.union(u, v)) && nbc_check(&g, &chosen) {
                    brute.push(chosen);
                }
            }
            listed.sort();
            brute.sort();
            assert_eq!(listed, brute, "{g}");
        }
    }

    #[test]
    fn frontier_covers_everything() {
        let g = Graph::complete(5);
        let edges = g.edges();
        let mut all = 0;
        for s in nbc_frontier(&g, 4) {
            for_each_nbc_forest_from(&edges, s, &mut |_| all += 1);
        }
        assert_eq!(all, 120);
    }

    #[test]
    fn lists_and_inversions() {
        let g = bowtie();
        let t = Tree {
            vertices: vec![1, 2, 3, 4, 5],
            edges: vec![(1, 3), (2, 3), (3, 4), (4, 5)],
        };
        assert!(t.is_tree());
        assert_eq!(t.list(), vec![1, 3, 2, 4, 5]);
        assert_eq!(forest_inversions(&g, &[t]), 1);
        let a = Tree {
            vertices: vec![1, 2, 3],
            edges: vec![(1, 3), (2, 3)],
        };
        let b = Tree {
            vertices: vec![4, 5],
            edges: vec![(4, 5)],
        };
        assert_eq!(forest_inversions(&g, &[a, b]), 1);
        let t = Tree {
            vertices: vec![1, 2, 3, 4, 5],
            edges: vec![(1, 3), (2, 3), (3, 5), (4, 5)],
        };
        assert_eq!(t.list(), vec![1, 3, 2, 5, 4]);
        assert_eq!(forest_inversions(&g, &[t]), 2);
    }

    #[test]
    fn trees_of_a_forest() {
        let trees = forest_trees(5, &[(4, 5), (1, 3)]);
        assert_eq!(trees.len(), 3);
        assert_eq!(trees[0].vertices, vec![1, 3]);
        assert_eq!(trees[1].vertices, vec![2]);
        assert_eq!(trees[2].vertices, vec![4, 5]);
    }
}
