//! Theorem-by-theorem sweeps over enumerated graph classes.
//!
//! Each check decides whether a graph lies in the theorem's hypothesis
//! class and, if so, whether the conclusion holds. Per-graph outcomes are
//! folded into [`TheoremVerdict`]s with an associative, commutative merge,
//! so the result does not depend on how the work was split across threads.

use std::fmt;
use std::ops::ControlFlow;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::claim::Claim;
use crate::enumerate::Universe;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::{emit_graph6, parse_graph6};
use crate::io;
use crate::solvers::{
    all_of_size, compute_report, is_dominating, is_isolate_set, is_maximal_isolate_by_extension,
    is_maximal_isolate_set, is_total_dominating, Param, ParameterReport, MAX_SOLVER_ORDER,
};
use crate::structure::{
    build_spanning_tree_preserving, caterpillar_code, classify_tree_gamma,
    find_spanning_caterpillar_same_diameter,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    /// `gamma/2 <= ir <= gamma <= 2 ir - 1`.
    DominationIrredundanceBound,
    /// `ir <= gamma <= i <= alpha <= Gamma <= IR`.
    DominationChain,
    /// Bipartite: `alpha = Gamma = IR`.
    BipartiteUpperEquality,
    /// `gamma_t <= i0 + 1`.
    TotalIsolateBound,
    /// Maximal isolate sets via adjacency to isolates.
    MaximalIsolateCharacterization,
    /// Connected, `gamma_t = i0 + 1` implies `diam <= 2`.
    EqualityDiameter,
    /// Connected, `gamma_t = i0 + 1` implies a dominating vertex.
    EqualityDominatingVertex,
    /// Connected: `gamma_t = i0 + 1` iff a dominating vertex exists.
    EqualityCharacterization,
    /// Maximal isolate `S ⊊ V`, `v ∉ S`: `S ∪ {v}` is total dominating.
    IsolateExtensionTotalDominates,
    /// Trees, `n >= 3`: `gamma = n - l` iff every vertex is a leaf or support.
    TreeLeafSupport,
    /// Connected, nontrivial: `2 gamma_t >= diam + 1`.
    TotalDiameterBound,
    /// Spanning tree keeping a `gamma_t`-set's component count.
    SpanningTreePreservation,
    /// `2 gamma_t = diam + 1` gives a spanning caterpillar of equal diameter.
    SpanningCaterpillar,
}

impl TheoremId {
    pub const ALL: [TheoremId; 13] = [
        TheoremId::DominationIrredundanceBound,
        TheoremId::DominationChain,
        TheoremId::BipartiteUpperEquality,
        TheoremId::TotalIsolateBound,
        TheoremId::MaximalIsolateCharacterization,
        TheoremId::EqualityDiameter,
        TheoremId::EqualityDominatingVertex,
        TheoremId::EqualityCharacterization,
        TheoremId::IsolateExtensionTotalDominates,
        TheoremId::TreeLeafSupport,
        TheoremId::TotalDiameterBound,
        TheoremId::SpanningTreePreservation,
        TheoremId::SpanningCaterpillar,
    ];

    pub fn code(self) -> &'static str {
        match self {
            TheoremId::DominationIrredundanceBound => "T1.1",
            TheoremId::DominationChain => "T1.2",
            TheoremId::BipartiteUpperEquality => "T1.3",
            TheoremId::TotalIsolateBound => "T2.1",
            TheoremId::MaximalIsolateCharacterization => "T2.2",
            TheoremId::EqualityDiameter => "T2.3",
            TheoremId::EqualityDominatingVertex => "T2.4",
            TheoremId::EqualityCharacterization => "C2.5",
            TheoremId::IsolateExtensionTotalDominates => "P2",
            TheoremId::TreeLeafSupport => "T3.1",
            TheoremId::TotalDiameterBound => "T3.2",
            TheoremId::SpanningTreePreservation => "L3.3",
            TheoremId::SpanningCaterpillar => "T3.4",
        }
    }

    /// Whether the verdict counts graphs attaining the extremal case.
    fn tracks_equality(self) -> bool {
        !matches!(
            self,
            TheoremId::DominationChain
                | TheoremId::BipartiteUpperEquality
                | TheoremId::MaximalIsolateCharacterization
                | TheoremId::IsolateExtensionTotalDominates
                | TheoremId::SpanningTreePreservation
        )
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.code().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownTheorem(s.to_string()))
    }
}

/// A theorem from the catalogue or an ad-hoc claim.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Check {
    Theorem(TheoremId),
    Claim(Claim),
}

impl Check {
    pub fn id(&self) -> String {
        match self {
            Check::Theorem(t) => t.code().to_string(),
            Check::Claim(c) => format!("claim: {c}"),
        }
    }

    fn tracks_equality(&self) -> bool {
        matches!(self, Check::Theorem(t) if t.tracks_equality())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Diagnostic {
    pub detail: String,
    pub parameters: ParameterReport,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    /// Outside the hypothesis class.
    Skipped,
    /// `extremal`: the graph attains the bound or triggers the implication.
    Pass { extremal: bool },
    Fail(String),
}

/// Checks one graph against one catalogued theorem, computing its report.
pub fn check_theorem(theorem_id: &str, g: &Graph) -> Result<Outcome> {
    let id: TheoremId = theorem_id.parse()?;
    let report = compute_report(g)?;
    Ok(evaluate(&Check::Theorem(id), g, &report))
}

fn fail_if(extremal: bool, problems: Vec<String>) -> Outcome {
    if problems.is_empty() {
        Outcome::Pass { extremal }
    } else {
        Outcome::Fail(problems.join("; "))
    }
}

fn ensure(problems: &mut Vec<String>, ok: bool, msg: impl FnOnce() -> String) {
    if !ok {
        problems.push(msg());
    }
}

/// Evaluates `check` on `g` given its precomputed report.
pub fn evaluate(check: &Check, g: &Graph, r: &ParameterReport) -> Outcome {
    let id = match check {
        Check::Claim(c) => {
            return match c.evaluate(r) {
                None => Outcome::Skipped,
                Some(true) => Outcome::Pass { extremal: false },
                Some(false) => Outcome::Fail(format!("claim `{c}` is false")),
            }
        }
        Check::Theorem(id) => *id,
    };
    let n = g.order();
    let connected = r.diam.is_some();
    let mut problems = Vec::new();
    let (gamma, ir) = (r.gamma.value, r.ir.value);

    match id {
        TheoremId::DominationIrredundanceBound => {
            ensure(&mut problems, gamma <= 2 * ir, || format!("gamma/2 > ir: gamma={gamma}, ir={ir}"));
            ensure(&mut problems, ir <= gamma, || format!("ir={ir} > gamma={gamma}"));
            ensure(&mut problems, gamma + 1 <= 2 * ir, || {
                format!("gamma={gamma} > 2*ir-1 with ir={ir}")
            });
            fail_if(gamma + 1 == 2 * ir, problems)
        }
        TheoremId::DominationChain => {
            let chain = [
                Param::Ir,
                Param::Gamma,
                Param::IndDom,
                Param::Alpha,
                Param::UpperGamma,
                Param::UpperIr,
            ];
            for w in chain.windows(2) {
                let (a, b) = (r.value(w[0]).unwrap(), r.value(w[1]).unwrap());
                ensure(&mut problems, a <= b, || format!("{}={a} > {}={b}", w[0], w[1]));
            }
            fail_if(false, problems)
        }
        TheoremId::BipartiteUpperEquality => {
            if !g.is_bipartite() {
                return Outcome::Skipped;
            }
            let (a, ug, uir) = (r.alpha.value, r.upper_gamma.value, r.upper_ir.value);
            ensure(&mut problems, a == ug && ug == uir, || {
                format!("alpha={a}, Gamma={ug}, IR={uir} not all equal")
            });
            fail_if(false, problems)
        }
        TheoremId::TotalIsolateBound => {
            let Some(gt) = r.value(Param::GammaT) else { return Outcome::Skipped };
            let i0 = r.i0.value;
            ensure(&mut problems, gt <= i0 + 1, || format!("gamma_t={gt} > i0+1={}", i0 + 1));
            fail_if(gt == i0 + 1, problems)
        }
        TheoremId::MaximalIsolateCharacterization => {
            for s in g.vertices().subsets() {
                let by_extension = is_maximal_isolate_by_extension(g, s);
                match is_maximal_isolate_set(g, s) {
                    Ok(by_isolates) if is_isolate_set(g, s) => ensure(
                        &mut problems,
                        by_isolates == by_extension,
                        || format!("S={s}: characterization {by_isolates}, extension {by_extension}"),
                    ),
                    Ok(_) => problems.push(format!("S={s} accepted though not an isolate set")),
                    Err(_) => ensure(&mut problems, !is_isolate_set(g, s) && !by_extension, || {
                        format!("S={s}: characterization rejected an isolate set")
                    }),
                }
            }
            fail_if(false, problems)
        }
        TheoremId::EqualityDiameter
        | TheoremId::EqualityDominatingVertex
        | TheoremId::EqualityCharacterization => {
            let Some(gt) = r.value(Param::GammaT) else { return Outcome::Skipped };
            if !connected {
                return Outcome::Skipped;
            }
            let equal = gt == r.i0.value + 1;
            match id {
                TheoremId::EqualityDiameter => {
                    let d = r.diam.unwrap();
                    ensure(&mut problems, !equal || d <= 2, || {
                        format!("gamma_t=i0+1={gt} but diam={d}")
                    });
                }
                TheoremId::EqualityDominatingVertex => {
                    ensure(&mut problems, !equal || r.has_dominating_vertex, || {
                        format!("gamma_t=i0+1={gt} without a dominating vertex")
                    });
                }
                _ => {
                    ensure(&mut problems, equal == r.has_dominating_vertex, || {
                        format!(
                            "gamma_t={gt}, i0={}, has_dominating_vertex={}",
                            r.i0.value, r.has_dominating_vertex
                        )
                    });
                }
            }
            fail_if(equal, problems)
        }
        TheoremId::IsolateExtensionTotalDominates => {
            if !connected || n < 2 {
                return Outcome::Skipped;
            }
            let all = g.vertices();
            for s in all.subsets().filter(|&s| s != all && is_maximal_isolate_by_extension(g, s)) {
                for v in (all - s).iter() {
                    ensure(&mut problems, is_total_dominating(g, s.with(v)), || {
                        format!("maximal isolate S={s}, v={v}: S+v not total dominating")
                    });
                }
            }
            fail_if(false, problems)
        }
        TheoremId::TreeLeafSupport => {
            if n < 3 || !g.is_tree() {
                return Outcome::Skipped;
            }
            let class = classify_tree_gamma(g).expect("tree with n >= 3");
            let equal = class.gamma == class.n_minus_l;
            ensure(&mut problems, equal == class.characterization_holds, || {
                format!(
                    "gamma={}, n-l={}, all leaf-or-support={}",
                    class.gamma, class.n_minus_l, class.characterization_holds
                )
            });
            ensure(&mut problems, class.gamma <= class.n_minus_l, || {
                format!("gamma={} > n-l={}", class.gamma, class.n_minus_l)
            });
            let leafless = class.leafless_gamma_set;
            let (leaves, _) = g.leaves_and_supports();
            ensure(
                &mut problems,
                is_dominating(g, leafless) && leafless.len() == class.gamma && (leafless & leaves).is_empty(),
                || format!("leafless gamma-set {leafless} invalid"),
            );
            fail_if(equal, problems)
        }
        TheoremId::TotalDiameterBound => {
            if !connected || n < 2 {
                return Outcome::Skipped;
            }
            let gt = r.value(Param::GammaT).expect("connected nontrivial graph");
            let d = r.diam.unwrap();
            ensure(&mut problems, 2 * gt >= d + 1, || format!("2*gamma_t={} < diam+1={}", 2 * gt, d + 1));
            fail_if(2 * gt == d + 1, problems)
        }
        TheoremId::SpanningTreePreservation => {
            let Some(gt) = r.value(Param::GammaT) else { return Outcome::Skipped };
            if !connected {
                return Outcome::Skipped;
            }
            for d in all_of_size(g, &Param::GammaT.family(), gt) {
                match build_spanning_tree_preserving(g, d) {
                    Ok(cert) => {
                        for v in cert.violations(g) {
                            problems.push(format!("D={d}: {v}"));
                        }
                        let tree_gt = Param::GammaT.compute(&cert.tree).map(|e| e.value);
                        ensure(&mut problems, tree_gt == Some(d.len()), || {
                            format!("D={d}: gamma_t(T)={tree_gt:?} != |D|={}", d.len())
                        });
                    }
                    Err(e) => problems.push(format!("D={d}: {e}")),
                }
            }
            fail_if(false, problems)
        }
        TheoremId::SpanningCaterpillar => {
            if !connected || n < 2 {
                return Outcome::Skipped;
            }
            let gt = r.value(Param::GammaT).expect("connected nontrivial graph");
            let d = r.diam.unwrap();
            if 2 * gt != d + 1 {
                return Outcome::Pass { extremal: false };
            }
            match find_spanning_caterpillar_same_diameter(g) {
                Ok(Some(t)) => {
                    let spanning = t.order() == n && t.edges().all(|(u, v)| g.has_edge(u, v));
                    let caterpillar = matches!(caterpillar_code(&t), Ok(Some(_)));
                    ensure(&mut problems, spanning && caterpillar && t.diameter() == Some(d), || {
                        format!("returned tree {t:?} fails its certificate")
                    });
                }
                Ok(None) => problems.push(format!("no spanning caterpillar of diameter {d}")),
                Err(e) => problems.push(e.to_string()),
            }
            fail_if(true, problems)
        }
    }
}

// --- verdicts --------------------------------------------------------------

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub graph6: String,
    pub diagnostic: Diagnostic,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremVerdict {
    pub theorem_id: String,
    pub universe: String,
    pub graphs_checked: usize,
    pub graphs_skipped: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub equality_attainers: Option<usize>,
    pub violations: Vec<Violation>,
    pub pass: bool,
    /// Wall time of the sweep level; left out of JSON to keep reports reproducible.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl TheoremVerdict {
    fn empty(check: &Check, universe: &str) -> Self {
        TheoremVerdict {
            theorem_id: check.id(),
            universe: universe.to_string(),
            graphs_checked: 0,
            graphs_skipped: 0,
            equality_attainers: check.tracks_equality().then_some(0),
            violations: Vec::new(),
            pass: true,
            elapsed: Duration::ZERO,
        }
    }

    fn record(&mut self, g: &Graph, r: &ParameterReport, outcome: Outcome) {
        match outcome {
            Outcome::Skipped => self.graphs_skipped += 1,
            Outcome::Pass { extremal } => {
                self.graphs_checked += 1;
                if extremal {
                    if let Some(c) = self.equality_attainers.as_mut() {
                        *c += 1;
                    }
                }
            }
            Outcome::Fail(detail) => {
                self.graphs_checked += 1;
                self.pass = false;
                self.violations.push(Violation {
                    graph6: emit_graph6(g),
                    diagnostic: Diagnostic { detail, parameters: r.clone() },
                });
            }
        }
    }

    /// Combines two partial verdicts for the same check and universe.
    pub fn merge(mut self, other: TheoremVerdict) -> TheoremVerdict {
        debug_assert_eq!(self.theorem_id, other.theorem_id);
        self.graphs_checked += other.graphs_checked;
        self.graphs_skipped += other.graphs_skipped;
        self.equality_attainers = match (self.equality_attainers, other.equality_attainers) {
            (Some(a), Some(b)) => Some(a + b),
            (a, b) => a.or(b),
        };
        self.violations.extend(other.violations);
        self.violations.sort_by(|a, b| {
            (a.graph6.as_str(), a.diagnostic.detail.as_str())
                .cmp(&(b.graph6.as_str(), b.diagnostic.detail.as_str()))
        });
        self.pass &= other.pass;
        self.elapsed = self.elapsed.max(other.elapsed);
        self
    }
}

// --- sweeps ----------------------------------------------------------------

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SweepUniverse {
    Enumerated(Universe),
    /// Newline-delimited graph6 file.
    File(PathBuf),
}

impl fmt::Display for SweepUniverse {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SweepUniverse::Enumerated(u) => write!(f, "{u}"),
            SweepUniverse::File(p) => write!(f, "file {}", p.display()),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SweepConfig {
    pub n_min: usize,
    pub n_max: usize,
    pub universe: SweepUniverse,
    pub checks: Vec<Check>,
    /// Worker threads; 0 picks the rayon default.
    pub jobs: usize,
}

impl SweepConfig {
    pub fn all_theorems(universe: SweepUniverse, n_min: usize, n_max: usize) -> Self {
        SweepConfig {
            n_min,
            n_max,
            universe,
            checks: TheoremId::ALL.into_iter().map(Check::Theorem).collect(),
            jobs: 0,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let max = match &self.universe {
            SweepUniverse::Enumerated(u) => u.max_order(),
            SweepUniverse::File(_) => MAX_SOLVER_ORDER,
        };
        if self.n_min == 0 || self.n_min > self.n_max || self.n_max > max {
            return Err(Error::UnsupportedOrder { what: "sweep", n: self.n_max, min: 1, max });
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub universe: String,
    pub n_min: usize,
    pub n_max: usize,
    pub graphs_total: usize,
    pub all_pass: bool,
    pub verdicts: Vec<TheoremVerdict>,
}

impl SweepReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// The graphs a sweep visits, grouped by order `n_min..=n_max`.
pub fn sweep_graphs(cfg: &SweepConfig) -> Result<Vec<(usize, Vec<Graph>)>> {
    cfg.validate()?;
    match &cfg.universe {
        SweepUniverse::Enumerated(u) => {
            let levels = u.graphs_up_to(cfg.n_max)?;
            Ok((cfg.n_min..=cfg.n_max).map(|n| (n, levels[n - 1].clone())).collect())
        }
        SweepUniverse::File(path) => {
            let records = io::parse_graph6_lines(&io::read_text(path)?)?;
            Ok((cfg.n_min..=cfg.n_max)
                .map(|n| {
                    let gs = records.iter().filter(|r| r.graph.order() == n).map(|r| r.graph.clone());
                    (n, gs.collect())
                })
                .collect())
        }
    }
}

fn pool(jobs: usize) -> rayon::ThreadPool {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("thread pool")
}

fn level_verdicts(checks: &[Check], universe: &str, graphs: &[Graph]) -> Vec<TheoremVerdict> {
    let start = Instant::now();
    let identity = || checks.iter().map(|c| TheoremVerdict::empty(c, universe)).collect::<Vec<_>>();
    let mut verdicts = graphs
        .par_iter()
        .fold(identity, |mut acc, g| {
            let report = compute_report(g).expect("sweep orders are within solver range");
            for (v, check) in acc.iter_mut().zip(checks) {
                let outcome = evaluate(check, g, &report);
                if let Outcome::Fail(_) = &outcome {
                    replay_capture(check, g);
                }
                v.record(g, &report, outcome);
            }
            acc
        })
        .reduce(identity, |a, b| a.into_iter().zip(b).map(|(x, y)| x.merge(y)).collect());
    for v in &mut verdicts {
        v.elapsed = start.elapsed();
    }
    verdicts
}

/// A captured violation must fail again when rebuilt from its graph6 text.
fn replay_capture(check: &Check, g: &Graph) {
    let replayed = parse_graph6(emit_graph6(g).as_bytes()).expect("own graph6 output parses");
    let report = compute_report(&replayed).expect("within solver range");
    assert!(
        matches!(evaluate(check, &replayed, &report), Outcome::Fail(_)),
        "violation of {} on {} did not replay",
        check.id(),
        emit_graph6(g)
    );
}

/// Runs every configured check over the universe, one verdict per check and order.
pub fn run_sweep(cfg: &SweepConfig) -> Result<SweepReport> {
    let levels = sweep_graphs(cfg)?;
    let universe_name = cfg.universe.to_string();
    let verdicts: Vec<TheoremVerdict> = pool(cfg.jobs).install(|| {
        let mut by_level: Vec<Vec<TheoremVerdict>> = levels
            .iter()
            .map(|(n, gs)| level_verdicts(&cfg.checks, &format!("{universe_name}, n={n}"), gs))
            .collect();
        // group by check first, then by n
        (0..cfg.checks.len())
            .flat_map(|i| by_level.iter_mut().map(move |lv| lv[i].clone()).collect::<Vec<_>>())
            .collect()
    });
    Ok(SweepReport {
        universe: universe_name,
        n_min: cfg.n_min,
        n_max: cfg.n_max,
        graphs_total: levels.iter().map(|(_, gs)| gs.len()).sum(),
        all_pass: verdicts.iter().all(|v| v.pass),
        verdicts,
    })
}

/// Per-graph parameter tables for a universe, in sweep order.
pub fn parameter_tables(cfg: &SweepConfig) -> Result<Vec<(Graph, ParameterReport)>> {
    let levels = sweep_graphs(cfg)?;
    let graphs: Vec<Graph> = levels.into_iter().flat_map(|(_, gs)| gs).collect();
    pool(cfg.jobs).install(|| {
        graphs
            .into_par_iter()
            .map(|g| compute_report(&g).map(|r| (g, r)))
            .collect()
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum HuntOutcome {
    Counterexample { graph6: String, parameters: ParameterReport },
    Exhausted { graphs_checked: usize },
}

/// Scans the universe in order and stops at the first graph violating `claim`.
pub fn hunt(claim: &Claim, cfg: &SweepConfig) -> Result<HuntOutcome> {
    let levels = sweep_graphs(cfg)?;
    let mut checked = 0;
    let mut found = None;
    let flow = levels.iter().flat_map(|(_, gs)| gs).try_for_each(|g| {
        let r = match compute_report(g) {
            Ok(r) => r,
            Err(e) => return ControlFlow::Break(Err(e)),
        };
        match claim.evaluate(&r) {
            Some(false) => {
                found = Some(HuntOutcome::Counterexample { graph6: emit_graph6(g), parameters: r });
                ControlFlow::Break(Ok(()))
            }
            Some(true) => {
                checked += 1;
                ControlFlow::Continue(())
            }
            None => ControlFlow::Continue(()),
        }
    });
    if let ControlFlow::Break(Err(e)) = flow {
        return Err(e);
    }
    Ok(found.unwrap_or(HuntOutcome::Exhausted { graphs_checked: checked }))
}
