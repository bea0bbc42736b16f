//! Exact domination-type parameters by subset enumeration.
//!
//! Each parameter is the extreme cardinality over a family of vertex sets
//! given by a membership predicate and, where the parameter asks for it, a
//! minimality or maximality condition. The engine walks subsets level by
//! level (by popcount) and stops at the first level holding a qualifying
//! set, so the first hit is both the optimum and its witness.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::structure::has_dominating_vertex;
use crate::vertex_set::{k_subsets, VertexSet};

/// Subset enumeration is exponential; beyond this order it is not attempted.
pub const MAX_SOLVER_ORDER: usize = 20;

// --- predicates ----------------------------------------------------------

pub fn is_dominating(g: &Graph, s: VertexSet) -> bool {
    g.closed_neighborhood(s) == g.vertices()
}

/// `N(S) = V`. Fails for every `s` when `g` has an isolated vertex.
pub fn is_total_dominating(g: &Graph, s: VertexSet) -> bool {
    g.open_neighborhood(s) == g.vertices()
}

/// Dominating in both `g` and its complement.
pub fn is_global_dominating(g: &Graph, s: VertexSet) -> bool {
    let all = g.vertices();
    let in_complement = s.iter().fold(s, |acc, v| acc | (all - g.neighbors(v)));
    is_dominating(g, s) && in_complement == all
}

pub fn is_independent(g: &Graph, s: VertexSet) -> bool {
    s.iter().all(|v| (g.neighbors(v) & s).is_empty())
}

/// Closed private neighbors of `v` with respect to `s`: `N[v] - N[s - {v}]`.
pub fn private_neighbors(g: &Graph, s: VertexSet, v: usize) -> VertexSet {
    g.closed_neighbors(v) - g.closed_neighborhood(s.without(v))
}

pub fn is_irredundant(g: &Graph, s: VertexSet) -> bool {
    s.iter().all(|v| !private_neighbors(g, s, v).is_empty())
}

/// Some vertex of `s` has no neighbor in `s`. The empty set is not one.
pub fn is_isolate_set(g: &Graph, s: VertexSet) -> bool {
    s.iter().any(|v| (g.neighbors(v) & s).is_empty())
}

/// Maximality of an isolate set via its isolates: `s` is maximal iff every
/// vertex outside `s` is adjacent to every isolated vertex of `G[s]`.
pub fn is_maximal_isolate_set(g: &Graph, s: VertexSet) -> Result<bool> {
    if !is_isolate_set(g, s) {
        return Err(Error::NotIsolateSet { set: s });
    }
    let outside = g.vertices() - s;
    Ok(g
        .isolated_within(s)
        .iter()
        .all(|x| outside.is_subset(g.neighbors(x))))
}

/// Maximality of an isolate set by trying every one-vertex extension.
///
/// An isolated vertex of `G[T]` stays isolated in every subset of `T`
/// containing it, so some one-vertex extension of `s` is an isolate set
/// whenever any proper superset is.
pub fn is_maximal_isolate_by_extension(g: &Graph, s: VertexSet) -> bool {
    is_isolate_set(g, s) && (g.vertices() - s).iter().all(|v| !is_isolate_set(g, s.with(v)))
}

pub fn is_minimal_dominating(g: &Graph, s: VertexSet) -> bool {
    is_dominating(g, s) && s.iter().all(|v| !is_dominating(g, s.without(v)))
}

pub fn is_independent_dominating(g: &Graph, s: VertexSet) -> bool {
    is_independent(g, s) && is_dominating(g, s)
}

pub fn is_maximal_irredundant(g: &Graph, s: VertexSet) -> bool {
    is_irredundant(g, s) && (g.vertices() - s).iter().all(|v| !is_irredundant(g, s.with(v)))
}

pub fn is_isolate_dominating(g: &Graph, s: VertexSet) -> bool {
    is_isolate_set(g, s) && is_dominating(g, s)
}

pub fn is_isolate_irredundant(g: &Graph, s: VertexSet) -> bool {
    is_isolate_set(g, s) && is_irredundant(g, s)
}

/// No proper superset of `s` is isolate irredundant. Both properties
/// survive passing from a superset `T` to `s ∪ {x}` (for `x` isolated in
/// `G[T]`) or `s ∪ {t}`, so one-vertex extensions decide it.
pub fn is_maximal_isolate_irredundant(g: &Graph, s: VertexSet) -> bool {
    is_isolate_irredundant(g, s)
        && (g.vertices() - s).iter().all(|v| !is_isolate_irredundant(g, s.with(v)))
}

/// No proper subset of `s` is an isolate dominating set.
///
/// One-vertex removals decide it. If `T ⊊ s` is isolate dominating and `y`
/// is isolated in `G[s]`, then removing any `v ∈ s - T` other than `y`
/// keeps `y` isolated and keeps domination (the result contains `T`); if
/// `s - T = {y}` the removal of `y` gives `T` itself.
pub fn is_minimal_isolate_dominating(g: &Graph, s: VertexSet) -> bool {
    is_isolate_dominating(g, s) && s.iter().all(|v| !is_isolate_dominating(g, s.without(v)))
}

// --- engine --------------------------------------------------------------

pub type Predicate = fn(&Graph, VertexSet) -> bool;

/// Membership predicate plus the extremality condition the parameter needs.
#[derive(Clone, Copy)]
pub struct SetFamily {
    pub member: Predicate,
    /// Exact minimality/maximality test; `None` when any member counts.
    pub extremal: Option<Predicate>,
}

impl SetFamily {
    pub const fn any(member: Predicate) -> Self {
        SetFamily { member, extremal: None }
    }

    pub const fn with_condition(member: Predicate, extremal: Predicate) -> Self {
        SetFamily { member, extremal: Some(extremal) }
    }

    pub fn admits(&self, g: &Graph, s: VertexSet) -> bool {
        (self.member)(g, s) && self.extremal.map_or(true, |p| p(g, s))
    }
}

/// Extreme cardinality with one witness.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Extremum {
    pub value: usize,
    pub witness: VertexSet,
}

fn scan(g: &Graph, family: &SetFamily, levels: impl Iterator<Item = usize>) -> Option<Extremum> {
    let n = g.order();
    assert!(n <= MAX_SOLVER_ORDER, "subset enumeration limited to {MAX_SOLVER_ORDER} vertices");
    levels
        .flat_map(|k| k_subsets(n, k))
        .find(|&s| family.admits(g, s))
        .map(|s| Extremum { value: s.len(), witness: s })
}

/// Smallest qualifying set, or `None` when the family is empty on `g`.
/// The witness is the numerically least set of that size.
pub fn min_over(g: &Graph, family: &SetFamily) -> Option<Extremum> {
    scan(g, family, 0..=g.order())
}

pub fn max_over(g: &Graph, family: &SetFamily) -> Option<Extremum> {
    scan(g, family, (0..=g.order()).rev())
}

/// Every qualifying set of exactly `k` vertices.
pub fn all_of_size(g: &Graph, family: &SetFamily, k: usize) -> Vec<VertexSet> {
    k_subsets(g.order(), k).filter(|&s| family.admits(g, s)).collect()
}

// --- parameters ----------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Param {
    Gamma,
    UpperGamma,
    IndDom,
    Alpha,
    GammaT,
    GammaG,
    Ir,
    UpperIr,
    I0,
    UpperI0,
    Gamma0,
    UpperGamma0,
    Ir0,
    UpperIr0,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sense {
    Min,
    Max,
}

impl Param {
    pub const ALL: [Param; 14] = [
        Param::Gamma,
        Param::UpperGamma,
        Param::IndDom,
        Param::Alpha,
        Param::GammaT,
        Param::GammaG,
        Param::Ir,
        Param::UpperIr,
        Param::I0,
        Param::UpperI0,
        Param::Gamma0,
        Param::UpperGamma0,
        Param::Ir0,
        Param::UpperIr0,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Param::Gamma => "gamma",
            Param::UpperGamma => "upper_gamma",
            Param::IndDom => "ind_dom",
            Param::Alpha => "alpha",
            Param::GammaT => "gamma_t",
            Param::GammaG => "gamma_g",
            Param::Ir => "ir",
            Param::UpperIr => "IR",
            Param::I0 => "i0",
            Param::UpperI0 => "I0",
            Param::Gamma0 => "gamma0",
            Param::UpperGamma0 => "upper_gamma0",
            Param::Ir0 => "ir0",
            Param::UpperIr0 => "IR0",
        }
    }

    pub fn sense(self) -> Sense {
        match self {
            Param::Gamma
            | Param::IndDom
            | Param::GammaT
            | Param::GammaG
            | Param::Ir
            | Param::I0
            | Param::Gamma0
            | Param::Ir0 => Sense::Min,
            _ => Sense::Max,
        }
    }

    pub fn family(self) -> SetFamily {
        match self {
            Param::Gamma => SetFamily::any(is_dominating),
            Param::UpperGamma => SetFamily::with_condition(is_dominating, is_minimal_dominating),
            Param::IndDom => SetFamily::any(is_independent_dominating),
            Param::Alpha => SetFamily::any(is_independent),
            Param::GammaT => SetFamily::any(is_total_dominating),
            Param::GammaG => SetFamily::any(is_global_dominating),
            Param::Ir | Param::UpperIr => {
                SetFamily::with_condition(is_irredundant, is_maximal_irredundant)
            }
            Param::I0 | Param::UpperI0 => {
                SetFamily::with_condition(is_isolate_set, is_maximal_isolate_by_extension)
            }
            Param::Gamma0 | Param::UpperGamma0 => {
                SetFamily::with_condition(is_isolate_dominating, is_minimal_isolate_dominating)
            }
            Param::Ir0 | Param::UpperIr0 => {
                SetFamily::with_condition(is_isolate_irredundant, is_maximal_isolate_irredundant)
            }
        }
    }

    /// `None` only for `gamma_t` on a graph with an isolated vertex.
    pub fn compute(self, g: &Graph) -> Option<Extremum> {
        let fam = self.family();
        match self.sense() {
            Sense::Min => min_over(g, &fam),
            Sense::Max => max_over(g, &fam),
        }
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Param {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let alias = match s {
            "i" => Some(Param::IndDom),
            "beta0" => Some(Param::Alpha),
            "upper_ir" => Some(Param::UpperIr),
            "upper_i0" => Some(Param::UpperI0),
            "upper_ir0" => Some(Param::UpperIr0),
            _ => None,
        };
        alias
            .or_else(|| Param::ALL.into_iter().find(|p| p.name() == s))
            .ok_or_else(|| format!("unknown parameter `{s}`"))
    }
}

/// Every parameter of one graph, with witnesses.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParameterReport {
    pub n: usize,
    pub m: usize,
    /// `None` when the graph is disconnected.
    pub diam: Option<usize>,
    pub has_dominating_vertex: bool,
    pub gamma: Extremum,
    pub upper_gamma: Extremum,
    pub ind_dom: Extremum,
    /// Independence number (also written beta0).
    pub alpha: Extremum,
    /// Absent when some vertex is isolated.
    pub gamma_t: Option<Extremum>,
    pub gamma_g: Extremum,
    pub ir: Extremum,
    #[serde(rename = "IR")]
    pub upper_ir: Extremum,
    pub i0: Extremum,
    #[serde(rename = "I0")]
    pub upper_i0: Extremum,
    pub gamma0: Extremum,
    pub upper_gamma0: Extremum,
    pub ir0: Extremum,
    #[serde(rename = "IR0")]
    pub upper_ir0: Extremum,
}

impl ParameterReport {
    pub fn get(&self, p: Param) -> Option<Extremum> {
        Some(match p {
            Param::Gamma => self.gamma,
            Param::UpperGamma => self.upper_gamma,
            Param::IndDom => self.ind_dom,
            Param::Alpha => self.alpha,
            Param::GammaT => return self.gamma_t,
            Param::GammaG => self.gamma_g,
            Param::Ir => self.ir,
            Param::UpperIr => self.upper_ir,
            Param::I0 => self.i0,
            Param::UpperI0 => self.upper_i0,
            Param::Gamma0 => self.gamma0,
            Param::UpperGamma0 => self.upper_gamma0,
            Param::Ir0 => self.ir0,
            Param::UpperIr0 => self.upper_ir0,
        })
    }

    pub fn value(&self, p: Param) -> Option<usize> {
        self.get(p).map(|e| e.value)
    }
}

pub fn compute_report(g: &Graph) -> Result<ParameterReport> {
    let n = g.order();
    if n > MAX_SOLVER_ORDER {
        return Err(Error::UnsupportedOrder {
            what: "parameter report",
            n,
            min: 1,
            max: MAX_SOLVER_ORDER,
        });
    }
    let total = |p: Param| p.compute(g).unwrap_or_else(|| panic!("{p} is defined on every graph"));
    Ok(ParameterReport {
        n,
        m: g.size(),
        diam: g.diameter(),
        has_dominating_vertex: has_dominating_vertex(g),
        gamma: total(Param::Gamma),
        upper_gamma: total(Param::UpperGamma),
        ind_dom: total(Param::IndDom),
        alpha: total(Param::Alpha),
        gamma_t: Param::GammaT.compute(g),
        gamma_g: total(Param::GammaG),
        ir: total(Param::Ir),
        upper_ir: total(Param::UpperIr),
        i0: total(Param::I0),
        upper_i0: total(Param::UpperI0),
        gamma0: total(Param::Gamma0),
        upper_gamma0: total(Param::UpperGamma0),
        ir0: total(Param::Ir0),
        upper_ir0: total(Param::UpperIr0),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(vs: &[usize]) -> VertexSet {
        VertexSet::from_vertices(vs.iter().copied())
    }

    /// Private-neighbor check straight from the definition, vertex by vertex.
    fn irredundant_oracle(g: &Graph, s: VertexSet) -> bool {
        s.iter().all(|v| {
            (0..g.order()).any(|w| {
                let in_nv = w == v || g.has_edge(v, w);
                let covered_by_other =
                    s.iter().any(|u| u != v && (u == w || g.has_edge(u, w)));
                in_nv && !covered_by_other
            })
        })
    }

    #[test]
    fn domination_predicates() {
        let star = Graph::star(3).unwrap();
        assert!(is_dominating(&star, set(&[0])));
        let p4 = Graph::path(4).unwrap();
        assert!(!is_dominating(&p4, set(&[0])));
        assert!(is_dominating(&p4, p4.vertices()));
        assert!(is_total_dominating(&p4, set(&[1, 2])));
        assert!(!is_total_dominating(&star, set(&[0])));
        assert!(is_total_dominating(&star, set(&[0, 2])));
        let iso = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert!(!is_total_dominating(&iso, iso.vertices()));
    }

    #[test]
    fn independence_predicates() {
        let c4 = Graph::cycle(4).unwrap();
        assert!(is_independent(&c4, set(&[0, 2])));
        let k3 = Graph::complete(3).unwrap();
        assert!(!is_independent(&k3, set(&[0, 1])));
        assert!(is_independent(&k3, VertexSet::EMPTY));
    }

    #[test]
    fn irredundance_predicates() {
        let c5 = Graph::cycle(5).unwrap();
        for v in 0..5 {
            assert!(is_irredundant(&c5, set(&[v])));
        }
        let k3 = Graph::complete(3).unwrap();
        assert!(!irredundant_oracle(&k3, set(&[0, 1])));
        assert!(!is_irredundant(&k3, set(&[0, 1])));
        assert!(irredundant_oracle(&c5, set(&[0, 2])));
        assert!(is_irredundant(&c5, set(&[0, 2])));
        assert!(is_irredundant(&c5, VertexSet::EMPTY));
    }

    #[test]
    fn irredundance_matches_definition_exhaustively() {
        for g in [Graph::cycle(6).unwrap(), Graph::star(4).unwrap(), Graph::path(6).unwrap()] {
            for s in g.vertices().subsets() {
                assert_eq!(is_irredundant(&g, s), irredundant_oracle(&g, s), "{g:?} {s}");
            }
        }
    }

    #[test]
    fn isolate_predicates() {
        let c4 = Graph::cycle(4).unwrap();
        assert!(is_isolate_set(&c4, set(&[0])));
        assert!(!is_isolate_set(&c4, set(&[0, 1])));
        assert!(is_isolate_set(&c4, set(&[0, 2])));
        assert!(!is_isolate_set(&c4, VertexSet::EMPTY));

        assert!(is_maximal_isolate_set(&c4, set(&[0, 2])).unwrap());
        assert!(!is_maximal_isolate_set(&c4, set(&[0])).unwrap());
        assert!(matches!(
            is_maximal_isolate_set(&c4, set(&[0, 1])),
            Err(Error::NotIsolateSet { .. })
        ));
        let k5 = Graph::complete(5).unwrap();
        for v in 0..5 {
            assert!(is_maximal_isolate_set(&k5, set(&[v])).unwrap());
        }
    }

    #[test]
    fn examples_from_brute_force() {
        let star = Graph::star(3).unwrap();
        assert_eq!(Param::Gamma.compute(&star).unwrap().value, 1);

        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(Param::GammaT.compute(&c4).unwrap().value, 2);
        assert_eq!(Param::I0.compute(&c4).unwrap().value, 2);

        let c5 = Graph::cycle(5).unwrap();
        let r = compute_report(&c5).unwrap();
        for p in [Param::Ir, Param::Gamma, Param::IndDom, Param::Alpha, Param::UpperGamma, Param::UpperIr]
        {
            assert_eq!(r.value(p), Some(2), "{p}");
        }
    }

    #[test]
    fn report_examples() {
        let k1 = compute_report(&Graph::empty(1).unwrap()).unwrap();
        assert_eq!(k1.gamma.value, 1);
        assert_eq!(k1.i0.value, 1);
        assert_eq!(k1.gamma_t, None);
        assert!(k1.has_dominating_vertex);

        let star = compute_report(&Graph::star(3).unwrap()).unwrap();
        assert_eq!(star.gamma.value, 1);
        assert_eq!(star.gamma_t.unwrap().value, 2);
        assert_eq!(star.i0.value, 1);
        assert_eq!(star.alpha.value, 3);

        let p4 = compute_report(&Graph::path(4).unwrap()).unwrap();
        assert_eq!(p4.gamma.value, 2);
        assert_eq!(p4.gamma_t.unwrap().value, 2);
        assert_eq!(p4.diam, Some(3));
    }

    #[test]
    fn witnesses_are_lexicographically_first() {
        let p4 = Graph::path(4).unwrap();
        assert_eq!(Param::Gamma.compute(&p4).unwrap().witness, set(&[0, 2]));
        assert_eq!(Param::GammaT.compute(&p4).unwrap().witness, set(&[1, 2]));
    }

    #[test]
    fn gamma_t_undefined_with_isolated_vertex() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2)]).unwrap();
        let r = compute_report(&g).unwrap();
        assert_eq!(r.gamma_t, None);
        assert_eq!(r.diam, None);
        assert_eq!(r.value(Param::GammaT), None);
    }

    #[test]
    fn param_names_round_trip() {
        for p in Param::ALL {
            assert_eq!(p.name().parse::<Param>().unwrap(), p);
        }
        assert_eq!("beta0".parse::<Param>().unwrap(), Param::Alpha);
        assert_eq!("i".parse::<Param>().unwrap(), Param::IndDom);
        assert!("delta".parse::<Param>().is_err());
    }

    #[test]
    fn report_order_cap() {
        let g = Graph::path(21).unwrap();
        assert!(matches!(compute_report(&g), Err(Error::UnsupportedOrder { .. })));
    }
}
