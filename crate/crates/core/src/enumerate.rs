//! Exhaustive generation of small graph classes, one representative per
//! isomorphism class, plus named families and seeded random graphs.
//!
//! Connected graphs are grown one vertex at a time: every connected graph on
//! `n` vertices has a non-cut vertex, so deleting it leaves a connected graph
//! on `n - 1` vertices. Extending each representative of the previous level
//! by every nonempty neighbor mask therefore reaches every class, and a
//! canonical code keeps exactly one graph per class. Trees are grown by leaf
//! attachment and deduplicated with a center-rooted nested-parentheses code.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

pub const MAX_CONNECTED_ORDER: usize = 9;
pub const MAX_TREE_ORDER: usize = 14;
/// Largest order whose adjacency string fits the 128-bit canonical code.
pub const MAX_CANONICAL_ORDER: usize = 16;

const REJECTION_BUDGET: usize = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Universe {
    Connected,
    Trees,
    Bipartite,
}

impl Universe {
    pub fn max_order(self) -> usize {
        match self {
            Universe::Connected | Universe::Bipartite => MAX_CONNECTED_ORDER,
            Universe::Trees => MAX_TREE_ORDER,
        }
    }

    fn check_order(self, n: usize) -> Result<()> {
        let max = self.max_order();
        if (1..=max).contains(&n) {
            Ok(())
        } else {
            Err(Error::UnsupportedOrder { what: self.name(), n, min: 1, max })
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Universe::Connected => "connected",
            Universe::Trees => "trees",
            Universe::Bipartite => "bipartite",
        }
    }

    /// All representatives on exactly `n` vertices, in canonical-code order.
    pub fn graphs(self, n: usize) -> Result<Vec<Graph>> {
        Ok(self.graphs_up_to(n)?.pop().unwrap_or_default())
    }

    /// Representatives for every order `1..=n_max`; entry `i` holds order `i + 1`.
    pub fn graphs_up_to(self, n_max: usize) -> Result<Vec<Vec<Graph>>> {
        self.check_order(n_max)?;
        Ok(match self {
            Universe::Connected => connected_levels(n_max),
            Universe::Bipartite => connected_levels(n_max)
                .into_iter()
                .map(|level| level.into_iter().filter(Graph::is_bipartite).collect())
                .collect(),
            Universe::Trees => tree_levels(n_max),
        })
    }
}

impl fmt::Display for Universe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Universe {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "connected" => Ok(Universe::Connected),
            "trees" | "tree" => Ok(Universe::Trees),
            "bipartite" => Ok(Universe::Bipartite),
            _ => Err(format!("unknown universe `{s}`")),
        }
    }
}

/// Single-consumer iterator over one enumerated class at a fixed order.
pub struct EnumerationCursor {
    target_n: usize,
    universe: Universe,
    pending: std::vec::IntoIter<Graph>,
}

impl EnumerationCursor {
    pub fn new(universe: Universe, n: usize) -> Result<Self> {
        Ok(EnumerationCursor {
            target_n: n,
            universe,
            pending: universe.graphs(n)?.into_iter(),
        })
    }

    pub fn target_n(&self) -> usize {
        self.target_n
    }

    pub fn universe(&self) -> Universe {
        self.universe
    }
}

impl Iterator for EnumerationCursor {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        self.pending.next()
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        self.pending.size_hint()
    }
}

pub fn enumerate_connected_graphs(n: usize) -> Result<EnumerationCursor> {
    EnumerationCursor::new(Universe::Connected, n)
}

pub fn enumerate_trees(n: usize) -> Result<EnumerationCursor> {
    EnumerationCursor::new(Universe::Trees, n)
}

// --- canonical form for general graphs ---------------------------------

/// Canonical code and labeling of a graph.
///
/// The code is the lexicographically least upper-triangle adjacency string
/// (column-major, as in graph6) over all vertex orderings that list vertices
/// by ascending invariant `(degree, sorted neighbor degrees)`. Restricting to
/// invariant-respecting orderings keeps the code a function of the
/// isomorphism class while cutting the search. `order[p]` is the vertex
/// placed at position `p`.
pub fn canonical_form(g: &Graph) -> (u128, Vec<usize>) {
    let n = g.order();
    assert!(n <= MAX_CANONICAL_ORDER, "canonical form limited to {MAX_CANONICAL_ORDER} vertices");

    let deg: Vec<usize> = (0..n).map(|v| g.neighbors(v).len()).collect();
    let inv: Vec<(usize, Vec<usize>)> = (0..n)
        .map(|v| {
            let mut nd: Vec<usize> = g.neighbors(v).iter().map(|u| deg[u]).collect();
            nd.sort_unstable();
            (deg[v], nd)
        })
        .collect();
    let mut keys = inv.clone();
    keys.sort();
    keys.dedup();
    let cell_of: Vec<usize> = inv.iter().map(|k| keys.binary_search(k).unwrap()).collect();
    let mut slot_cells: Vec<usize> = cell_of.clone();
    slot_cells.sort_unstable();
    let mut cells = vec![0u64; keys.len()];
    for (v, &c) in cell_of.iter().enumerate() {
        cells[c] |= 1 << v;
    }

    let mut search = CanonSearch {
        g,
        total_bits: n * n.saturating_sub(1) / 2,
        slot_cells,
        cells,
        order: Vec::with_capacity(n),
        best: None,
    };
    search.descend(0, 0);
    let (code, order) = search.best.expect("at least one ordering");
    (code, order)
}

struct CanonSearch<'a> {
    g: &'a Graph,
    total_bits: usize,
    slot_cells: Vec<usize>,
    cells: Vec<u64>,
    order: Vec<usize>,
    best: Option<(u128, Vec<usize>)>,
}

impl CanonSearch<'_> {
    fn descend(&mut self, placed: u64, prefix: u128) {
        let p = self.order.len();
        if p == self.g.order() {
            if self.best.as_ref().map_or(true, |(b, _)| prefix < *b) {
                self.best = Some((prefix, self.order.clone()));
            }
            return;
        }
        let len = (p + 1) * p / 2;
        let candidates = self.cells[self.slot_cells[p]] & !placed;
        for v in VertexSet(candidates) {
            let mut next = prefix;
            for &u in &self.order {
                next = next << 1 | self.g.has_edge(u, v) as u128;
            }
            if let Some((b, _)) = &self.best {
                if next > b >> (self.total_bits - len) {
                    continue;
                }
            }
            self.order.push(v);
            self.descend(placed | 1 << v, next);
            self.order.pop();
        }
    }
}

/// The representative of `g`'s class used by the enumerators.
pub fn canonical_graph(g: &Graph) -> (u128, Graph) {
    let (code, order) = canonical_form(g);
    let mut perm = vec![0; g.order()];
    for (pos, &v) in order.iter().enumerate() {
        perm[v] = pos;
    }
    (code, g.permuted(&perm))
}

fn connected_levels(n_max: usize) -> Vec<Vec<Graph>> {
    let mut levels = vec![vec![Graph::empty(1).expect("K1")]];
    for n in 2..=n_max {
        let prev = levels.last().unwrap();
        let found: BTreeMap<u128, Graph> = prev
            .par_iter()
            .flat_map_iter(|g| (1u64..1 << (n - 1)).map(move |mask| canonical_graph(&g.extended(mask))))
            .collect::<Vec<_>>()
            .into_iter()
            .collect();
        levels.push(found.into_values().collect());
    }
    levels
}

// --- trees -------------------------------------------------------------

/// Centers of a tree: the one or two vertices left after repeatedly
/// stripping all leaves.
pub fn tree_centers(t: &Graph) -> VertexSet {
    let mut alive = t.vertices();
    while alive.len() > 2 {
        let leaves: VertexSet = alive
            .iter()
            .filter(|&v| (t.neighbors(v) & alive).len() <= 1)
            .collect();
        alive = alive - leaves;
    }
    alive
}

fn rooted_code(t: &Graph, v: usize, parent: Option<usize>) -> Vec<u8> {
    let mut kids: Vec<Vec<u8>> = t
        .neighbors(v)
        .iter()
        .filter(|&u| Some(u) != parent)
        .map(|u| rooted_code(t, u, Some(v)))
        .collect();
    kids.sort();
    let mut out = vec![b'('];
    for k in kids {
        out.extend(k);
    }
    out.push(b')');
    out
}

/// Nested-parentheses code of a tree rooted at its least-coded center.
pub fn tree_code(t: &Graph) -> (Vec<u8>, usize) {
    tree_centers(t)
        .iter()
        .map(|c| (rooted_code(t, c, None), c))
        .min()
        .expect("a tree has a center")
}

/// Relabels a tree in preorder from its canonical root, children in code order.
pub fn canonical_tree(t: &Graph) -> (Vec<u8>, Graph) {
    let (code, root) = tree_code(t);
    let mut perm = vec![usize::MAX; t.order()];
    let mut next = 0;
    fn visit(t: &Graph, v: usize, parent: Option<usize>, perm: &mut [usize], next: &mut usize) {
        perm[v] = *next;
        *next += 1;
        let mut kids: Vec<(Vec<u8>, usize)> = t
            .neighbors(v)
            .iter()
            .filter(|&u| Some(u) != parent)
            .map(|u| (rooted_code(t, u, Some(v)), u))
            .collect();
        kids.sort();
        for (_, u) in kids {
            visit(t, u, Some(v), perm, next);
        }
    }
    visit(t, root, None, &mut perm, &mut next);
    (code, t.permuted(&perm))
}

fn tree_levels(n_max: usize) -> Vec<Vec<Graph>> {
    let mut levels = vec![vec![Graph::empty(1).expect("K1")]];
    for n in 2..=n_max {
        let prev = levels.last().unwrap();
        let mut found: BTreeMap<Vec<u8>, Graph> = BTreeMap::new();
        for t in prev {
            for v in 0..n - 1 {
                let (code, g) = canonical_tree(&t.extended(1 << v));
                found.entry(code).or_insert(g);
            }
        }
        levels.push(found.into_values().collect());
    }
    levels
}

// --- named families and random graphs -----------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NamedFamily {
    Path,
    Cycle,
    Complete,
    Star,
    /// `K_{k,k}`.
    CompleteBipartite,
}

impl FromStr for NamedFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "path" => NamedFamily::Path,
            "cycle" => NamedFamily::Cycle,
            "complete" => NamedFamily::Complete,
            "star" => NamedFamily::Star,
            "complete_bipartite" => NamedFamily::CompleteBipartite,
            other => return Err(Error::UnknownFamily(other.to_string())),
        })
    }
}

impl NamedFamily {
    fn name(self) -> &'static str {
        match self {
            NamedFamily::Path => "path",
            NamedFamily::Cycle => "cycle",
            NamedFamily::Complete => "complete",
            NamedFamily::Star => "star",
            NamedFamily::CompleteBipartite => "complete_bipartite",
        }
    }

    fn min_k(self) -> usize {
        match self {
            NamedFamily::Cycle => 3,
            _ => 1,
        }
    }

    pub fn build(self, k: usize) -> Result<Graph> {
        if k < self.min_k() {
            return Err(Error::FamilyTooSmall { family: self.name(), k, min: self.min_k() });
        }
        match self {
            NamedFamily::Path => Graph::path(k),
            NamedFamily::Cycle => Graph::cycle(k),
            NamedFamily::Complete => Graph::complete(k),
            NamedFamily::Star => Graph::star(k),
            NamedFamily::CompleteBipartite => Graph::complete_bipartite(k, k),
        }
    }
}

/// `path`/`cycle`/`complete` on `k` vertices, `star` = `K_{1,k}` with center 0,
/// `complete_bipartite` = `K_{k,k}`.
pub fn make_named(family: &str, k: usize) -> Result<Graph> {
    family.parse::<NamedFamily>()?.build(k)
}

/// One G(n, p) sample.
pub fn random_graph<R: Rng>(n: usize, edge_prob: f64, rng: &mut R) -> Result<Graph> {
    let mut g = Graph::empty(n)?;
    for v in 1..n {
        for u in 0..v {
            if rng.gen_bool(edge_prob) {
                g.add_edge(u, v)?;
            }
        }
    }
    Ok(g)
}

/// G(n, p) conditioned on connectivity by rejection; deterministic per seed.
pub fn random_connected_graph(n: usize, edge_prob: f64, seed: u64) -> Result<Graph> {
    if !(edge_prob > 0.0 && edge_prob < 1.0) {
        return Err(Error::InvalidProbability(edge_prob));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..REJECTION_BUDGET {
        let g = random_graph(n, edge_prob, &mut rng)?;
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(Error::RejectionBudgetExceeded { attempts: REJECTION_BUDGET })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_connected_counts() {
        assert_eq!(enumerate_connected_graphs(1).unwrap().count(), 1);
        assert_eq!(enumerate_connected_graphs(2).unwrap().count(), 1);
        let three: Vec<Graph> = enumerate_connected_graphs(3).unwrap().collect();
        assert_eq!(three.len(), 2);
        let mut sizes: Vec<usize> = three.iter().map(Graph::size).collect();
        sizes.sort();
        assert_eq!(sizes, vec![2, 3]);
        assert_eq!(enumerate_connected_graphs(4).unwrap().count(), 6);
    }

    #[test]
    fn small_tree_counts() {
        let four: Vec<Graph> = enumerate_trees(4).unwrap().collect();
        assert_eq!(four.len(), 2);
        let mut max_deg: Vec<usize> =
            four.iter().map(|t| (0..4).map(|v| t.degree(v).unwrap()).max().unwrap()).collect();
        max_deg.sort();
        assert_eq!(max_deg, vec![2, 3]);
        assert_eq!(enumerate_trees(7).unwrap().count(), 11);
        let one: Vec<Graph> = enumerate_trees(1).unwrap().collect();
        assert_eq!(one, vec![Graph::empty(1).unwrap()]);
    }

    #[test]
    fn order_caps() {
        assert!(enumerate_connected_graphs(0).is_err());
        assert!(enumerate_connected_graphs(10).is_err());
        assert!(enumerate_trees(15).is_err());
        assert!(matches!(
            enumerate_trees(15),
            Err(Error::UnsupportedOrder { n: 15, max: 14, .. })
        ));
    }

    #[test]
    fn canonical_code_is_label_independent() {
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 0), (3, 4), (4, 5)]).unwrap();
        let (code, _) = canonical_form(&g);
        let perm = [3, 5, 0, 1, 4, 2];
        assert_eq!(canonical_form(&g.permuted(&perm)).0, code);
        let (c2, h) = canonical_graph(&g);
        assert_eq!(c2, code);
        assert_eq!(canonical_form(&h).0, code);
    }

    #[test]
    fn tree_centers_examples() {
        assert_eq!(tree_centers(&Graph::path(5).unwrap()), VertexSet::singleton(2));
        assert_eq!(tree_centers(&Graph::path(4).unwrap()), VertexSet::from_vertices([1, 2]));
        assert_eq!(tree_centers(&Graph::star(4).unwrap()), VertexSet::singleton(0));
        assert_eq!(tree_centers(&Graph::empty(1).unwrap()), VertexSet::singleton(0));
    }

    #[test]
    fn named_families() {
        assert_eq!(make_named("star", 3).unwrap(), Graph::star(3).unwrap());
        assert_eq!(make_named("star", 3).unwrap().order(), 4);
        assert_eq!(make_named("cycle", 4).unwrap(), Graph::cycle(4).unwrap());
        assert_eq!(make_named("complete", 1).unwrap(), Graph::empty(1).unwrap());
        // K_{2,2} is the 4-cycle 0-2-1-3-0
        let k22 = make_named("complete_bipartite", 2).unwrap();
        assert_eq!(k22, Graph::cycle(4).unwrap().permuted(&[0, 2, 1, 3]));
        assert!(matches!(make_named("wheel", 4), Err(Error::UnknownFamily(_))));
        assert!(matches!(make_named("cycle", 2), Err(Error::FamilyTooSmall { min: 3, .. })));
        assert!(matches!(make_named("path", 0), Err(Error::FamilyTooSmall { .. })));
    }

    #[test]
    fn random_connected_is_deterministic() {
        let a = random_connected_graph(5, 0.99, 1).unwrap();
        assert_eq!(a, random_connected_graph(5, 0.99, 1).unwrap());
        assert!(a.size() >= 8);
        let b = random_connected_graph(8, 0.3, 7).unwrap();
        assert!(b.is_connected());
        assert_eq!(b.order(), 8);
        assert!(matches!(random_connected_graph(5, 1.0, 1), Err(Error::InvalidProbability(_))));
        assert!(matches!(random_connected_graph(5, 0.0, 1), Err(Error::InvalidProbability(_))));
    }

    #[test]
    fn rejection_budget_is_reported() {
        assert!(matches!(
            random_connected_graph(40, 1e-6, 3),
            Err(Error::RejectionBudgetExceeded { .. })
        ));
    }
}
