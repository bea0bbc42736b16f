//! Structural characterizations: dominating vertices, leaf/support
//! classification of trees, caterpillars, and spanning-tree constructions.

use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::solvers::{is_dominating, is_total_dominating, Param};
use crate::vertex_set::VertexSet;

/// A vertex adjacent to all others exists. True for `K1`.
pub fn has_dominating_vertex(g: &Graph) -> bool {
    (0..g.order()).any(|v| g.neighbors(v).len() + 1 == g.order())
}

fn require_tree(t: &Graph) -> Result<()> {
    if t.is_tree() {
        Ok(())
    } else {
        Err(Error::NotATree)
    }
}

/// Every vertex of the tree is a leaf or adjacent to one.
pub fn all_leaf_or_support(t: &Graph) -> Result<bool> {
    require_tree(t)?;
    let (leaves, supports) = t.leaves_and_supports();
    Ok(leaves | supports == t.vertices())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaterpillarCode {
    pub k: usize,
    pub leaf_counts: Vec<usize>,
}

/// Spine length and per-spine-vertex leaf counts, or `None` when deleting
/// the leaves does not leave a path. Of the code and its reversal the
/// lexicographically smaller one is returned.
///
/// Trees on one or two vertices count as caterpillars whose spine is the
/// whole tree: `K1` has code `(0)` and `K2` has `(0, 0)`.
pub fn caterpillar_code(t: &Graph) -> Result<Option<CaterpillarCode>> {
    require_tree(t)?;
    let n = t.order();
    if n <= 2 {
        return Ok(Some(CaterpillarCode { k: n, leaf_counts: vec![0; n] }));
    }
    let (leaves, _) = t.leaves_and_supports();
    let spine = t.vertices() - leaves;
    if spine.iter().any(|v| (t.neighbors(v) & spine).len() > 2) {
        return Ok(None);
    }
    // a subtree with maximum degree two is a path; walk it from an end
    let start = spine
        .iter()
        .find(|&v| (t.neighbors(v) & spine).len() <= 1)
        .expect("a nonempty path has an end");
    let mut order = vec![start];
    let mut prev = None;
    let mut cur = start;
    while let Some(next) = (t.neighbors(cur) & spine).iter().find(|&u| Some(u) != prev) {
        prev = Some(cur);
        cur = next;
        order.push(cur);
    }
    let counts: Vec<usize> = order.iter().map(|&v| (t.neighbors(v) & leaves).len()).collect();
    let mut rev = counts.clone();
    rev.reverse();
    Ok(Some(CaterpillarCode { k: counts.len(), leaf_counts: counts.min(rev) }))
}

pub fn is_caterpillar(t: &Graph) -> bool {
    matches!(caterpillar_code(t), Ok(Some(_)))
}

/// Spanning tree of a graph together with the total dominating set whose
/// component structure it keeps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpanningTreeCertificate {
    pub tree: Graph,
    pub dset: VertexSet,
    pub components_before: usize,
    pub components_after: usize,
}

impl SpanningTreeCertificate {
    /// Failed invariants, empty when the certificate is sound for `source`.
    pub fn violations(&self, source: &Graph) -> Vec<String> {
        let t = &self.tree;
        let mut out = Vec::new();
        if t.order() != source.order() {
            out.push(format!("tree has {} vertices, source {}", t.order(), source.order()));
            return out;
        }
        if t.size() + 1 != t.order() {
            out.push(format!("tree has {} edges, expected {}", t.size(), t.order() - 1));
        }
        if !t.is_connected() {
            out.push("tree is disconnected".into());
        }
        if let Some((u, v)) = t.edges().find(|&(u, v)| !source.has_edge(u, v)) {
            out.push(format!("edge {u}-{v} not in source"));
        }
        if self.components_before != self.components_after {
            out.push(format!(
                "D has {} components in G but {} in T",
                self.components_before, self.components_after
            ));
        }
        if source.components_within(self.dset).len() != self.components_before
            || t.components_within(self.dset).len() != self.components_after
        {
            out.push("recorded component counts are stale".into());
        }
        if !is_total_dominating(t, self.dset) {
            out.push(format!("{} does not total-dominate T", self.dset));
        }
        out
    }
}

/// Minimal union-find over at most 64 vertices.
struct Forest {
    parent: Vec<usize>,
}

impl Forest {
    fn new(n: usize) -> Self {
        Forest { parent: (0..n).collect() }
    }

    fn root(&mut self, mut v: usize) -> usize {
        while self.parent[v] != v {
            self.parent[v] = self.parent[self.parent[v]];
            v = self.parent[v];
        }
        v
    }

    /// Joins the classes of `u` and `v`; false if already joined.
    fn union(&mut self, u: usize, v: usize) -> bool {
        let (a, b) = (self.root(u), self.root(v));
        if a == b {
            return false;
        }
        self.parent[a.max(b)] = a.min(b);
        true
    }
}

/// Builds a spanning tree `T` of `g` in which `d` still total-dominates and
/// `T[D]` has as many components as `G[D]`:
///
/// 1. a spanning tree of each component of `G[D]`;
/// 2. each vertex outside `D` joined to its least neighbor in `D`;
/// 3. remaining edges of `g` added in lexicographic order while acyclic.
///
/// Edges added in step 3 have an endpoint outside `D`, so `T[D]` is exactly
/// the forest from step 1.
pub fn build_spanning_tree_preserving(g: &Graph, d: VertexSet) -> Result<SpanningTreeCertificate> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if !is_total_dominating(g, d) {
        return Err(Error::NotTotalDominating { set: d });
    }
    let n = g.order();
    let mut forest = Forest::new(n);
    let mut edges = Vec::with_capacity(n - 1);

    for (u, v) in g.edges() {
        if d.contains(u) && d.contains(v) && forest.union(u, v) {
            edges.push((u, v));
        }
    }
    for v in (g.vertices() - d).iter() {
        let u = (g.neighbors(v) & d).first().expect("total domination gives a neighbor in D");
        forest.union(u, v);
        edges.push((u.min(v), u.max(v)));
    }
    for (u, v) in g.edges() {
        if forest.union(u, v) {
            edges.push((u, v));
        }
    }

    let tree = g.spanning_subgraph(edges)?;
    Ok(SpanningTreeCertificate {
        components_before: g.components_within(d).len(),
        components_after: tree.components_within(d).len(),
        tree,
        dset: d,
    })
}

/// Calls `visit` on every spanning tree of `g` (edges chosen in
/// lexicographic order) until it breaks.
pub fn for_each_spanning_tree<F>(g: &Graph, mut visit: F) -> ControlFlow<()>
where
    F: FnMut(&Graph) -> ControlFlow<()>,
{
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let n = g.order();
    if n == 1 {
        return visit(g);
    }
    let mut chosen = Vec::with_capacity(n - 1);
    let labels: Vec<usize> = (0..n).collect();
    spanning_rec(g, &edges, 0, &labels, &mut chosen, &mut visit)
}

fn spanning_rec<F>(
    g: &Graph,
    edges: &[(usize, usize)],
    i: usize,
    labels: &[usize],
    chosen: &mut Vec<(usize, usize)>,
    visit: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&Graph) -> ControlFlow<()>,
{
    let need = g.order() - 1 - chosen.len();
    if need == 0 {
        let t = g.spanning_subgraph(chosen.iter().copied()).expect("subgraph of g");
        return visit(&t);
    }
    if edges.len() - i < need {
        return ControlFlow::Continue(());
    }
    let (u, v) = edges[i];
    let (a, b) = (labels[u], labels[v]);
    if a != b {
        let merged: Vec<usize> = labels.iter().map(|&c| if c == b { a } else { c }).collect();
        chosen.push((u, v));
        spanning_rec(g, edges, i + 1, &merged, chosen, visit)?;
        chosen.pop();
    }
    spanning_rec(g, edges, i + 1, labels, chosen, visit)
}

/// First spanning tree of `g` (in edge-lexicographic search order) that is a
/// caterpillar with the same diameter as `g`.
pub fn find_spanning_caterpillar_same_diameter(g: &Graph) -> Result<Option<Graph>> {
    if g.order() < 2 {
        return Err(Error::TooFewVertices { n: g.order(), min: 2 });
    }
    let target = g.diameter().ok_or(Error::Disconnected)?;
    let mut found = None;
    let _ = for_each_spanning_tree(g, |t| {
        if t.diameter() == Some(target) && is_caterpillar(t) {
            found = Some(t.clone());
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    Ok(found)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeGammaClass {
    pub gamma: usize,
    pub n_minus_l: usize,
    pub characterization_holds: bool,
    /// A minimum dominating set containing no leaf.
    pub leafless_gamma_set: VertexSet,
}

/// Domination number of a tree against `n - l` and the leaf-or-support test.
pub fn classify_tree_gamma(t: &Graph) -> Result<TreeGammaClass> {
    require_tree(t)?;
    if t.order() < 3 {
        return Err(Error::TooFewVertices { n: t.order(), min: 3 });
    }
    let gamma = Param::Gamma.compute(t).expect("domination is total");
    let (leaves, _) = t.leaves_and_supports();
    let leafless = gamma
        .witness
        .iter()
        .map(|v| if leaves.contains(v) { t.neighbors(v).first().unwrap() } else { v })
        .collect::<VertexSet>();
    debug_assert!(is_dominating(t, leafless));
    Ok(TreeGammaClass {
        gamma: gamma.value,
        n_minus_l: t.order() - leaves.len(),
        characterization_holds: all_leaf_or_support(t)?,
        leafless_gamma_set: leafless,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(vs: &[usize]) -> VertexSet {
        VertexSet::from_vertices(vs.iter().copied())
    }

    fn spider() -> Graph {
        Graph::from_edges(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap()
    }

    #[test]
    fn dominating_vertex_examples() {
        assert!(has_dominating_vertex(&Graph::star(3).unwrap()));
        assert!(!has_dominating_vertex(&Graph::cycle(4).unwrap()));
        assert!(has_dominating_vertex(&Graph::empty(1).unwrap()));
    }

    #[test]
    fn leaf_or_support_examples() {
        assert!(all_leaf_or_support(&Graph::path(4).unwrap()).unwrap());
        assert!(!all_leaf_or_support(&Graph::path(5).unwrap()).unwrap());
        assert!(all_leaf_or_support(&Graph::star(3).unwrap()).unwrap());
        assert!(matches!(all_leaf_or_support(&Graph::cycle(4).unwrap()), Err(Error::NotATree)));
    }

    #[test]
    fn caterpillar_examples() {
        let p5 = caterpillar_code(&Graph::path(5).unwrap()).unwrap().unwrap();
        assert_eq!(p5, CaterpillarCode { k: 3, leaf_counts: vec![1, 0, 1] });
        assert_eq!(caterpillar_code(&spider()).unwrap(), None);
        let star = caterpillar_code(&Graph::star(3).unwrap()).unwrap().unwrap();
        assert_eq!(star, CaterpillarCode { k: 1, leaf_counts: vec![3] });
        assert!(caterpillar_code(&Graph::cycle(3).unwrap()).is_err());
    }

    #[test]
    fn caterpillar_code_is_reversal_canonical() {
        // spine 0-1-2 with two extra leaves on 0 and one on 2
        let a = Graph::from_edges(7, [(0, 1), (1, 2), (0, 3), (0, 4), (2, 5), (1, 6)]).unwrap();
        let b = a.permuted(&[2, 1, 0, 3, 4, 5, 6]);
        let ca = caterpillar_code(&a).unwrap().unwrap();
        assert_eq!(ca, caterpillar_code(&b).unwrap().unwrap());
        assert_eq!(ca.leaf_counts, vec![1, 1, 2]);
        assert_eq!(ca.k + ca.leaf_counts.iter().sum::<usize>(), 7);
    }

    #[test]
    fn tiny_trees_are_caterpillars() {
        let k1 = caterpillar_code(&Graph::empty(1).unwrap()).unwrap().unwrap();
        assert_eq!(k1, CaterpillarCode { k: 1, leaf_counts: vec![0] });
        let k2 = caterpillar_code(&Graph::complete(2).unwrap()).unwrap().unwrap();
        assert_eq!(k2, CaterpillarCode { k: 2, leaf_counts: vec![0, 0] });
    }

    #[test]
    fn spanning_tree_of_c4() {
        let c4 = Graph::cycle(4).unwrap();
        let cert = build_spanning_tree_preserving(&c4, set(&[0, 1])).unwrap();
        assert!(cert.violations(&c4).is_empty(), "{:?}", cert.violations(&c4));
        assert_eq!(cert.tree.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 3), (1, 2)]);
        assert_eq!((cert.components_before, cert.components_after), (1, 1));
    }

    #[test]
    fn spanning_tree_of_tree_is_itself() {
        let t = Graph::path(5).unwrap();
        let cert = build_spanning_tree_preserving(&t, set(&[1, 2, 3])).unwrap();
        assert_eq!(cert.tree, t);
    }

    #[test]
    fn spanning_tree_of_k4() {
        let k4 = Graph::complete(4).unwrap();
        let cert = build_spanning_tree_preserving(&k4, set(&[0, 1])).unwrap();
        assert_eq!(cert.tree.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2), (0, 3)]);
        assert!(cert.violations(&k4).is_empty());
        assert_eq!(cert.components_after, 1);
    }

    #[test]
    fn spanning_tree_preconditions() {
        let c4 = Graph::cycle(4).unwrap();
        assert!(matches!(
            build_spanning_tree_preserving(&c4, set(&[0, 2])),
            Err(Error::NotTotalDominating { .. })
        ));
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert!(matches!(
            build_spanning_tree_preserving(&g, g.vertices()),
            Err(Error::Disconnected)
        ));
    }

    #[test]
    fn violations_catch_bad_certificates() {
        let c4 = Graph::cycle(4).unwrap();
        let mut cert = build_spanning_tree_preserving(&c4, set(&[0, 1])).unwrap();
        cert.tree = Graph::path(4).unwrap().permuted(&[0, 2, 1, 3]);
        assert!(!cert.violations(&c4).is_empty());
    }

    #[test]
    fn spanning_tree_counts() {
        // Cayley: n^(n-2) spanning trees of K_n
        for n in 2..=6usize {
            let mut count = 0usize;
            let _ = for_each_spanning_tree(&Graph::complete(n).unwrap(), |t| {
                assert!(t.is_tree());
                count += 1;
                ControlFlow::Continue(())
            });
            assert_eq!(count, n.pow(n as u32 - 2));
        }
    }

    #[test]
    fn spanning_caterpillar_search() {
        let p5 = Graph::path(5).unwrap();
        assert_eq!(find_spanning_caterpillar_same_diameter(&p5).unwrap(), Some(p5));
        assert_eq!(find_spanning_caterpillar_same_diameter(&Graph::cycle(6).unwrap()).unwrap(), None);
        assert_eq!(find_spanning_caterpillar_same_diameter(&Graph::complete(4).unwrap()).unwrap(), None);
        assert!(find_spanning_caterpillar_same_diameter(&Graph::empty(1).unwrap()).is_err());
    }

    #[test]
    fn tree_gamma_examples() {
        let p4 = classify_tree_gamma(&Graph::path(4).unwrap()).unwrap();
        assert_eq!((p4.gamma, p4.n_minus_l, p4.characterization_holds), (2, 2, true));
        assert_eq!(p4.leafless_gamma_set, set(&[1, 2]));
        let p5 = classify_tree_gamma(&Graph::path(5).unwrap()).unwrap();
        assert_eq!((p5.gamma, p5.n_minus_l, p5.characterization_holds), (2, 3, false));
        let s5 = classify_tree_gamma(&Graph::star(5).unwrap()).unwrap();
        assert_eq!((s5.gamma, s5.n_minus_l, s5.characterization_holds), (1, 1, true));
        assert!(classify_tree_gamma(&Graph::complete(2).unwrap()).is_err());
    }
}
