//! Simple undirected graphs on dense integer vertices `0..n`.
//!
//! Edges are stored in canonical `(min, max)` form. `Graph` values are
//! immutable after construction; growing or shrinking a graph produces a new
//! value, so graphs can be shared read-only across threads.

use std::collections::BTreeSet;

use thiserror::Error;

/// Canonical form of an undirected edge: `(min, max)`.
#[inline]
pub fn edge(u: usize, v: usize) -> (usize, usize) {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("edge ({0}, {1}) not present")]
    MissingEdge(usize, usize),
}

/// Ordered set of vertex ids.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VertexSet(BTreeSet<usize>);

impl VertexSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, v: usize) -> bool {
        self.0.insert(v)
    }

    pub fn remove(&mut self, v: usize) -> bool {
        self.0.remove(&v)
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.contains(&v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Ascending iterator over the members.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Self(iter.into_iter().collect())
    }
}

/// Immutable simple undirected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
    adjacency: Vec<BTreeSet<usize>>,
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Self {
            n,
            edges: BTreeSet::new(),
            adjacency: vec![BTreeSet::new(); n],
        }
    }

    /// Builds a graph from an explicit edge list.
    ///
    /// Rejects self-loops, duplicate pairs (in either orientation) and
    /// out-of-range vertex ids: the input must describe a simple graph.
    pub fn from_edge_list(n: usize, pairs: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Self::empty(n);
        for &(u, v) in pairs {
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    fn insert_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        if u >= self.n {
            return Err(GraphError::VertexOutOfRange { vertex: u, n: self.n });
        }
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n });
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        let e = edge(u, v);
        if !self.edges.insert(e) {
            return Err(GraphError::DuplicateEdge(e.0, e.1));
        }
        self.adjacency[u].insert(v);
        self.adjacency[v].insert(u);
        Ok(())
    }

    /// New graph with `extra` edges added; rejects collisions with existing
    /// edges just like [`Graph::from_edge_list`].
    pub fn with_edges<I>(&self, extra: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = self.clone();
        for (u, v) in extra {
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    /// New graph with the edge `{u, v}` removed.
    pub fn without_edge(&self, u: usize, v: usize) -> Result<Self, GraphError> {
        let e = edge(u, v);
        let mut g = self.clone();
        if !g.edges.remove(&e) {
            return Err(GraphError::MissingEdge(e.0, e.1));
        }
        g.adjacency[u].remove(&v);
        g.adjacency[v].remove(&u);
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(BTreeSet::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&edge(u, v))
    }

    pub fn neighbors(&self, v: usize) -> &BTreeSet<usize> {
        &self.adjacency[v]
    }

    /// Edges in ascending canonical order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    /// Vertices of odd degree, ascending. Always of even cardinality by the
    /// handshake lemma.
    pub fn odd_vertices(&self) -> VertexSet {
        (0..self.n).filter(|&v| self.degree(v) % 2 == 1).collect()
    }

    /// True iff every vertex is reachable from vertex 0 (vacuously true for
    /// the empty vertex set and for a single vertex).
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &v in &self.adjacency[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == self.n
    }

    /// Smallest (lexicographic) pair of distinct vertices in `s` that are not
    /// adjacent, or `None` iff `s` induces a clique.
    pub fn non_adjacent_pair(&self, s: &VertexSet) -> Option<(usize, usize)> {
        let members = s.to_vec();
        for (i, &u) in members.iter().enumerate() {
            for &v in &members[i + 1..] {
                if !self.has_edge(u, v) {
                    return Some((u, v));
                }
            }
        }
        None
    }

    /// All non-edges in ascending canonical order.
    pub fn complement_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn triangle() -> Graph {
        Graph::from_edge_list(3, &[(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    fn path4() -> Graph {
        Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3)]).unwrap()
    }

    fn star4() -> Graph {
        Graph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3)]).unwrap()
    }

    #[test]
    fn builds_triangle() {
        let g = triangle();
        assert_eq!(g.edge_count(), 3);
        for v in 0..3 {
            assert_eq!(g.degree(v), 2);
        }
    }

    #[test]
    fn builds_path() {
        let g = path4();
        let degs: Vec<_> = (0..4).map(|v| g.degree(v)).collect();
        assert_eq!(degs, vec![1, 2, 2, 1]);
    }

    #[test]
    fn rejects_self_loop() {
        assert_eq!(
            Graph::from_edge_list(3, &[(0, 0)]),
            Err(GraphError::SelfLoop(0))
        );
    }

    #[test]
    fn rejects_duplicate_even_reversed() {
        assert_eq!(
            Graph::from_edge_list(3, &[(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
    }

    #[test]
    fn rejects_out_of_range() {
        assert_eq!(
            Graph::from_edge_list(2, &[(0, 5)]),
            Err(GraphError::VertexOutOfRange { vertex: 5, n: 2 })
        );
    }

    #[test]
    fn odd_vertices_cycle_empty() {
        let c4 = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(c4.odd_vertices().is_empty());
    }

    #[test]
    fn odd_vertices_path_endpoints() {
        assert_eq!(path4().odd_vertices().to_vec(), vec![0, 3]);
    }

    #[test]
    fn odd_vertices_star_all() {
        assert_eq!(star4().odd_vertices().to_vec(), vec![0, 1, 2, 3]);
    }

    #[test]
    fn connectivity() {
        assert!(triangle().is_connected());
        let two_edges = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!two_edges.is_connected());
        assert!(Graph::empty(1).is_connected());
    }

    #[test]
    fn non_adjacent_pair_star_leaves() {
        let s: VertexSet = [1, 2, 3].into_iter().collect();
        assert_eq!(star4().non_adjacent_pair(&s), Some((1, 2)));
    }

    #[test]
    fn non_adjacent_pair_clique_none() {
        let s: VertexSet = [0, 1, 2].into_iter().collect();
        assert_eq!(triangle().non_adjacent_pair(&s), None);
    }

    #[test]
    fn non_adjacent_pair_path_endpoints() {
        let s: VertexSet = [0, 3].into_iter().collect();
        assert_eq!(path4().non_adjacent_pair(&s), Some((0, 3)));
    }

    #[test]
    fn remove_edge_roundtrip() {
        let g = triangle();
        let h = g.without_edge(2, 0).unwrap();
        assert_eq!(h.edge_count(), 2);
        assert!(!h.has_edge(0, 2));
        assert_eq!(
            h.without_edge(0, 2),
            Err(GraphError::MissingEdge(0, 2))
        );
        assert_eq!(h.with_edges([(0, 2)]).unwrap(), g);
    }

    /// Arbitrary graph on up to 9 vertices, edges chosen by bitmask.
    fn arb_graph() -> impl Strategy<Value = Graph> {
        (1usize..=9, any::<u64>()).prop_map(|(n, mask)| {
            let mut pairs = Vec::new();
            let mut bit = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if mask >> (bit % 64) & 1 == 1 {
                        pairs.push((u, v));
                    }
                    bit += 1;
                }
            }
            Graph::from_edge_list(n, &pairs).unwrap()
        })
    }

    proptest! {
        #[test]
        fn handshake_identity(g in arb_graph()) {
            let total: usize = (0..g.vertex_count()).map(|v| g.degree(v)).sum();
            prop_assert_eq!(total, 2 * g.edge_count());
        }

        #[test]
        fn odd_set_has_even_size(g in arb_graph()) {
            prop_assert_eq!(g.odd_vertices().len() % 2, 0);
        }

        #[test]
        fn non_adjacent_none_iff_clique(g in arb_graph(), mask in any::<u32>()) {
            let s: VertexSet = (0..g.vertex_count())
                .filter(|v| mask >> v & 1 == 1)
                .collect();
            let members = s.to_vec();
            let is_clique = members.iter().enumerate().all(|(i, &u)| {
                members[i + 1..].iter().all(|&v| g.has_edge(u, v))
            });
            match g.non_adjacent_pair(&s) {
                None => prop_assert!(is_clique),
                Some((u, v)) => {
                    prop_assert!(!is_clique);
                    prop_assert!(s.contains(u) && s.contains(v));
                    prop_assert!(u != v && !g.has_edge(u, v));
                }
            }
        }
    }
}
