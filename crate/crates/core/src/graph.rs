//! Immutable simple undirected graphs on at most 64 vertices.
//!
//! Adjacency is one bit mask per vertex, so neighborhood unions, domination
//! tests and induced-subgraph queries are a handful of word operations.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

pub const MAX_ORDER: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

/// Result of [`Graph::induced_subgraph`]: vertex `i` of `graph` is vertex
/// `labels[i]` of the source.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedSubgraph {
    pub graph: Graph,
    pub labels: Vec<usize>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_ORDER {
            return Err(Error::OrderOutOfRange(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds from raw neighborhood masks, checking every invariant.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Self> {
        let n = adj.len();
        if n == 0 || n > MAX_ORDER {
            return Err(Error::OrderOutOfRange(n));
        }
        let full = VertexSet::full(n).bits();
        for (v, &mask) in adj.iter().enumerate() {
            if mask & !full != 0 {
                let vertex = (mask & !full).trailing_zeros() as usize;
                return Err(Error::VertexOutOfRange { vertex, n });
            }
            if mask >> v & 1 == 1 {
                return Err(Error::SelfLoop(v));
            }
            for u in VertexSet(mask) {
                if adj[u] >> v & 1 == 0 {
                    return Err(Error::EdgeList {
                        line: 0,
                        message: format!("asymmetric adjacency between {v} and {u}"),
                    });
                }
            }
        }
        Ok(Graph { n, adj })
    }

    /// Caller guarantees `adj` is symmetric, loop-free and within `1..=64` vertices.
    pub(crate) fn from_adjacency_unchecked(adj: Vec<u64>) -> Self {
        Graph { n: adj.len(), adj }
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.n;
        for w in [u, v] {
            if w >= n {
                return Err(Error::VertexOutOfRange { vertex: w, n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    // --- named constructions -------------------------------------------

    pub fn path(k: usize) -> Result<Self> {
        Graph::from_edges(k, (1..k).map(|v| (v - 1, v)))
    }

    pub fn cycle(k: usize) -> Result<Self> {
        if k < 3 {
            return Err(Error::FamilyTooSmall { family: "cycle", k, min: 3 });
        }
        Graph::from_edges(k, (0..k).map(|v| (v, (v + 1) % k)))
    }

    pub fn complete(k: usize) -> Result<Self> {
        Graph::from_edges(k, (0..k).flat_map(|u| (u + 1..k).map(move |v| (u, v))))
    }

    /// `K_{1,k}` with center 0.
    pub fn star(k: usize) -> Result<Self> {
        Graph::from_edges(k + 1, (1..=k).map(|v| (0, v)))
    }

    /// `K_{a,b}` with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Result<Self> {
        Graph::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
    }

    // --- accessors -----------------------------------------------------

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// `N(v)`. Panics if `v` is out of range.
    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    #[inline]
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v] | 1 << v)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            VertexSet(self.adj[u] & !((2u64 << u) - 1)).iter().map(move |v| (u, v))
        })
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.adj[v].count_ones() as usize)
    }

    // --- set algebra ---------------------------------------------------

    /// `N(S)`, the union of the open neighborhoods of members of `s`.
    pub fn open_neighborhood(&self, s: VertexSet) -> VertexSet {
        s.iter().fold(VertexSet::EMPTY, |acc, v| acc | self.neighbors(v))
    }

    /// `N[S] = N(S) ∪ S`.
    pub fn closed_neighborhood(&self, s: VertexSet) -> VertexSet {
        self.open_neighborhood(s) | s
    }

    /// Vertices of `s` with no neighbor inside `s`.
    pub fn isolated_within(&self, s: VertexSet) -> VertexSet {
        s.iter().filter(|&v| (self.neighbors(v) & s).is_empty()).collect()
    }

    // --- metric --------------------------------------------------------

    /// BFS layers from `v`; `None` marks an unreachable vertex.
    pub fn distances_from(&self, v: usize) -> Result<Vec<Option<usize>>> {
        self.check_vertex(v)?;
        let mut dist = vec![None; self.n];
        dist[v] = Some(0);
        let mut seen = VertexSet::singleton(v);
        let mut frontier = seen;
        let mut d = 0;
        while !frontier.is_empty() {
            d += 1;
            let next = self.open_neighborhood(frontier) - seen;
            for u in next {
                dist[u] = Some(d);
            }
            seen = seen | next;
            frontier = next;
        }
        Ok(dist)
    }

    /// Largest finite distance, or `None` when the graph is disconnected.
    pub fn diameter(&self) -> Option<usize> {
        let mut best = 0;
        for v in 0..self.n {
            let dist = self.distances_from(v).expect("vertex in range");
            for d in dist {
                best = best.max(d?);
            }
        }
        Some(best)
    }

    pub fn is_connected(&self) -> bool {
        self.component_of(0, self.vertices()) == self.vertices()
    }

    /// Component of `v` in the subgraph induced by `within` (`v` must be in `within`).
    pub fn component_of(&self, v: usize, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(v) & within;
        let mut frontier = seen;
        while !frontier.is_empty() {
            let next = (self.open_neighborhood(frontier) & within) - seen;
            seen = seen | next;
            frontier = next;
        }
        seen
    }

    /// Connected components of `G[within]`, ordered by least vertex.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut rest = within;
        let mut out = Vec::new();
        while let Some(v) = rest.first() {
            let c = self.component_of(v, rest);
            rest = rest - c;
            out.push(c);
        }
        out
    }

    pub fn is_tree(&self) -> bool {
        self.size() + 1 == self.n && self.is_connected()
    }

    pub fn is_bipartite(&self) -> bool {
        let mut color: Vec<Option<bool>> = vec![None; self.n];
        for s in 0..self.n {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let c = color[u].unwrap();
                for w in self.neighbors(u) {
                    match color[w] {
                        None => {
                            color[w] = Some(!c);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == c => return false,
                        _ => {}
                    }
                }
            }
        }
        true
    }

    /// `(leaves, supports)`: degree-one vertices, and vertices adjacent to one.
    pub fn leaves_and_supports(&self) -> (VertexSet, VertexSet) {
        let leaves: VertexSet =
            (0..self.n).filter(|&v| self.adj[v].count_ones() == 1).collect();
        (leaves, self.open_neighborhood(leaves))
    }

    // --- derived graphs ------------------------------------------------

    pub fn complement(&self) -> Graph {
        let full = self.vertices().bits();
        let adj = (0..self.n).map(|v| !self.adj[v] & full & !(1 << v)).collect();
        Graph { n: self.n, adj }
    }

    pub fn induced_subgraph(&self, s: VertexSet) -> Result<InducedSubgraph> {
        let s = s & self.vertices();
        if s.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        let labels = s.to_vec();
        let mut g = Graph::empty(labels.len())?;
        for (i, &u) in labels.iter().enumerate() {
            for (j, &v) in labels.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.adj[i] |= 1 << j;
                    g.adj[j] |= 1 << i;
                }
            }
        }
        Ok(InducedSubgraph { graph: g, labels })
    }

    /// Relabels so that old vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut adj = vec![0u64; self.n];
        for (u, v) in self.edges() {
            adj[perm[u]] |= 1 << perm[v];
            adj[perm[v]] |= 1 << perm[u];
        }
        Graph { n: self.n, adj }
    }

    /// Subgraph on the same vertex set keeping only the listed edges.
    pub fn spanning_subgraph<I>(&self, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(self.n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Same vertex count, one more vertex `n` joined to `mask`.
    pub(crate) fn extended(&self, mask: u64) -> Graph {
        let n = self.n;
        let mut adj = self.adj.clone();
        for u in VertexSet(mask) {
            adj[u] |= 1 << n;
        }
        adj.push(mask);
        Graph { n: n + 1, adj }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges().collect::<Vec<_>>())
    }
}
