//! Exhaustive search over connected graphs of small order.
//!
//! Isomorphism classes are enumerated either from labelled upper-triangle
//! masks or by one-vertex extension of the classes one order down. Both
//! paths dedupe by [`canonical_form`] and return classes sorted by canonical
//! form, so the output does not depend on the worker count.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use rayon::prelude::*;
use thiserror::Error;

use crate::canonical::{canonical_form, CanonicalForm};
use crate::extremal::{complete_split, turan, PendantCase};
use crate::graph::{full_mask, Graph, Row};
use crate::graph6;
use crate::index::{abs_index, f, g, h};
use crate::invariants::GraphInvariants;

/// Hard cap on the enumeration order.
pub const MAX_SEARCH_ORDER: usize = 8;
/// Largest order enumerated without [`SearchOptions::allow_order_8`].
pub const DEFAULT_MAX_SEARCH_ORDER: usize = 7;
/// Largest order for the edge-addition check.
pub const EDGE_LEMMA_MAX_ORDER: usize = 6;
/// Two index values closer than this count as tied maxima.
pub const TIE_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("order {n} is outside the enumeration range 1..={max}")]
    OrderOutOfRange { n: usize, max: usize },
    #[error("order 8 enumeration is disabled; enable it explicitly")]
    OrderEightDisabled,
    #[error("invalid constraint: {0}")]
    Constraint(String),
    #[error("invalid lemma grid: {0}")]
    Grid(String),
    #[error("could not start worker pool: {0}")]
    Pool(String),
}

/// How connected classes are generated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    /// Every labelled graph on `n` vertices, filtered and deduplicated.
    LabeledMasks,
    /// Every class of order `n - 1` plus a new vertex joined to each
    /// non-empty vertex subset. Every connected graph has a vertex whose
    /// removal leaves it connected, so this reaches all classes.
    #[default]
    VertexExtension,
}

/// Enumeration progress: `done` of `total` work units in `stage`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Progress {
    pub stage: &'static str,
    pub done: u64,
    pub total: u64,
}

pub type ProgressFn = Arc<dyn Fn(Progress) + Send + Sync>;

#[derive(Clone)]
pub struct SearchOptions {
    pub workers: usize,
    pub allow_order_8: bool,
    pub strategy: Strategy,
    pub progress: Option<ProgressFn>,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            workers: 1,
            allow_order_8: false,
            strategy: Strategy::default(),
            progress: None,
        }
    }
}

impl fmt::Debug for SearchOptions {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SearchOptions")
            .field("workers", &self.workers)
            .field("allow_order_8", &self.allow_order_8)
            .field("strategy", &self.strategy)
            .field("progress", &self.progress.is_some())
            .finish()
    }
}

impl SearchOptions {
    pub fn with_workers(workers: usize) -> Self {
        SearchOptions {
            workers,
            ..Default::default()
        }
    }

    fn check_order(&self, n: usize) -> Result<(), SearchError> {
        if n == 0 || n > MAX_SEARCH_ORDER {
            return Err(SearchError::OrderOutOfRange {
                n,
                max: MAX_SEARCH_ORDER,
            });
        }
        if n > DEFAULT_MAX_SEARCH_ORDER && !self.allow_order_8 {
            return Err(SearchError::OrderEightDisabled);
        }
        Ok(())
    }

    fn pool(&self) -> Result<rayon::ThreadPool, SearchError> {
        rayon::ThreadPoolBuilder::new()
            .num_threads(self.workers.max(1))
            .build()
            .map_err(|e| SearchError::Pool(e.to_string()))
    }

    fn report(&self, stage: &'static str, done: u64, total: u64) {
        if let Some(cb) = &self.progress {
            cb(Progress { stage, done, total });
        }
    }
}

/// Canonical forms of the connected classes of order `n`, ascending.
pub fn enumerate_classes(
    n: usize,
    opts: &SearchOptions,
) -> Result<Vec<CanonicalForm>, SearchError> {
    opts.check_order(n)?;
    let pool = opts.pool()?;
    Ok(pool.install(|| match opts.strategy {
        Strategy::LabeledMasks => labeled_classes(n, opts, None),
        Strategy::VertexExtension => extension_classes(n, opts),
    }))
}

/// One canonically labelled representative per connected class of order
/// `n`, sorted by canonical form.
pub fn enumerate_connected(n: usize, opts: &SearchOptions) -> Result<Vec<Graph>, SearchError> {
    Ok(enumerate_classes(n, opts)?
        .iter()
        .map(CanonicalForm::to_graph)
        .collect())
}

/// Labelled-mask enumeration where each mask is relabelled by `perm` before
/// filtering. Any permutation must give the same classes.
pub fn enumerate_classes_relabeled(
    n: usize,
    perm: &[usize],
    opts: &SearchOptions,
) -> Result<Vec<CanonicalForm>, SearchError> {
    opts.check_order(n)?;
    if perm.len() != n
        || perm.iter().collect::<BTreeSet<_>>().len() != n
        || perm.iter().any(|&p| p >= n)
    {
        return Err(SearchError::Constraint(format!(
            "{perm:?} is not a permutation of 0..{n}"
        )));
    }
    let pool = opts.pool()?;
    Ok(pool.install(|| labeled_classes(n, opts, Some(perm))))
}

/// Classes bucketed by (edge count, sorted degree sequence).
#[derive(Default)]
struct ClassStore {
    buckets: HashMap<(usize, u64), HashSet<CanonicalForm>>,
}

impl ClassStore {
    fn insert(&mut self, g: &Graph) {
        let mut degrees = g.degrees();
        degrees.sort_unstable();
        let packed = degrees.iter().fold(0u64, |acc, &d| acc << 4 | d as u64);
        self.buckets
            .entry((g.edge_count(), packed))
            .or_default()
            .insert(canonical_form(g));
    }

    fn merge(mut self, other: ClassStore) -> ClassStore {
        for (key, set) in other.buckets {
            self.buckets.entry(key).or_default().extend(set);
        }
        self
    }

    fn into_sorted(self) -> Vec<CanonicalForm> {
        let mut all: Vec<_> = self.buckets.into_values().flatten().collect();
        all.sort_unstable();
        all
    }
}

fn labeled_classes(n: usize, opts: &SearchOptions, perm: Option<&[usize]>) -> Vec<CanonicalForm> {
    let pairs = n * (n - 1) / 2;
    let total: u64 = 1 << pairs;
    let chunk_count = (opts.workers.max(1) as u64 * 16).min(total);
    let chunk_len = total.div_ceil(chunk_count);
    let done = AtomicU64::new(0);

    let store = (0..chunk_count)
        .into_par_iter()
        .map(|chunk| {
            let mut store = ClassStore::default();
            let start = chunk * chunk_len;
            let end = (start + chunk_len).min(total);
            for mask in start..end {
                let mut g = Graph::from_upper_mask(n, mask as u128).expect("order checked");
                if let Some(perm) = perm {
                    g = g.relabel(perm).expect("permutation checked");
                }
                // Every class has a labelling with non-decreasing degrees.
                let rows = g.rows();
                if rows
                    .windows(2)
                    .any(|w| w[0].count_ones() > w[1].count_ones())
                {
                    continue;
                }
                if g.is_connected() {
                    store.insert(&g);
                }
            }
            let finished = done.fetch_add(1, Ordering::Relaxed) + 1;
            opts.report("labeled masks", finished, chunk_count);
            store
        })
        .reduce(ClassStore::default, ClassStore::merge);
    store.into_sorted()
}

fn extension_classes(n: usize, opts: &SearchOptions) -> Vec<CanonicalForm> {
    let mut level = vec![canonical_form(&Graph::empty(1).expect("order 1"))];
    for k in 1..n {
        let full: Row = full_mask(k);
        let store = level
            .par_iter()
            .map(|parent| {
                let base = parent.to_graph();
                let mut store = ClassStore::default();
                for subset in 1..=full {
                    store.insert(&base.extend(subset).expect("order below cap"));
                }
                store
            })
            .reduce(ClassStore::default, ClassStore::merge);
        level = store.into_sorted();
        opts.report("vertex extension", k as u64, n as u64 - 1);
    }
    level
}

/// One enumerated class with everything the search filters and ranks on.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClassRecord {
    pub form: CanonicalForm,
    pub graph: Graph,
    pub invariants: GraphInvariants,
    pub abs: f64,
}

/// All connected classes of one order with their invariants and index.
#[derive(Debug, Clone)]
pub struct Catalog {
    order: usize,
    records: Vec<ClassRecord>,
}

impl Catalog {
    pub fn build(n: usize, opts: &SearchOptions) -> Result<Self, SearchError> {
        let forms = enumerate_classes(n, opts)?;
        let pool = opts.pool()?;
        let records = pool.install(|| {
            forms
                .par_iter()
                .map(|&form| {
                    let graph = form.to_graph();
                    ClassRecord {
                        form,
                        graph,
                        invariants: GraphInvariants::of(&graph),
                        abs: abs_index(&graph),
                    }
                })
                .collect()
        });
        Ok(Catalog { order: n, records })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn records(&self) -> &[ClassRecord] {
        &self.records
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    /// Maximum index over the classes satisfying `kind`, with every class
    /// within [`TIE_TOLERANCE`] of it. `expected`, when given, is compared
    /// against the maximizer set up to isomorphism.
    pub fn max_abs_under(
        &self,
        kind: ConstraintKind,
        expected: Option<&Graph>,
    ) -> Result<SearchReport, SearchError> {
        let constraint = Constraint::new(self.order, kind)?;
        let matching: Vec<&ClassRecord> = self
            .records
            .iter()
            .filter(|r| kind.accepts(&r.invariants))
            .collect();
        let max_value = matching.iter().map(|r| r.abs).reduce(f64::max);
        let mut maximizers: Vec<Maximizer> = match max_value {
            Some(best) => matching
                .iter()
                .filter(|r| r.abs >= best - TIE_TOLERANCE)
                .map(|r| Maximizer {
                    form: r.form,
                    graph6: r.form.graph6(),
                    value: r.abs,
                })
                .collect(),
            None => Vec::new(),
        };
        maximizers.sort_by_key(|m| m.form);
        let expected = expected.map(canonical_form);
        let construction_match = match expected {
            Some(e) => maximizers.len() == 1 && maximizers[0].form == e,
            None => false,
        };
        Ok(SearchReport {
            constraint,
            graph_count: matching.len(),
            max_value,
            unique: maximizers.len() == 1,
            maximizers,
            expected,
            construction_match,
        })
    }
}

/// Single-invariant restriction on the connected graphs of one order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConstraintKind {
    Unconstrained,
    Chromatic(usize),
    Independence(usize),
    Pendants(usize),
}

impl ConstraintKind {
    pub fn accepts(&self, inv: &GraphInvariants) -> bool {
        match *self {
            ConstraintKind::Unconstrained => true,
            ConstraintKind::Chromatic(k) => inv.chromatic == k,
            ConstraintKind::Independence(k) => inv.independence == k,
            ConstraintKind::Pendants(k) => inv.pendants == k,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Constraint {
    pub order: usize,
    pub kind: ConstraintKind,
}

impl Constraint {
    pub fn new(order: usize, kind: ConstraintKind) -> Result<Self, SearchError> {
        let ok = match kind {
            ConstraintKind::Unconstrained => true,
            ConstraintKind::Chromatic(k) | ConstraintKind::Independence(k) => {
                (1..=order).contains(&k)
            }
            ConstraintKind::Pendants(k) => k <= order,
        };
        if !ok {
            return Err(SearchError::Constraint(format!(
                "{kind:?} is out of range for order {order}"
            )));
        }
        Ok(Constraint { order, kind })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Maximizer {
    pub form: CanonicalForm,
    pub graph6: String,
    pub value: f64,
}

/// Result of a constrained maximisation.
#[derive(Debug, Clone, PartialEq)]
pub struct SearchReport {
    pub constraint: Constraint,
    /// Connected classes satisfying the constraint.
    pub graph_count: usize,
    /// `None` when no class satisfies the constraint.
    pub max_value: Option<f64>,
    /// Sorted by canonical form.
    pub maximizers: Vec<Maximizer>,
    pub expected: Option<CanonicalForm>,
    /// The maximizer set is exactly `{expected}` up to isomorphism.
    pub construction_match: bool,
    pub unique: bool,
}

/// Builds the catalog for `c.order` and maximises over it.
pub fn max_abs_under(
    c: Constraint,
    expected: Option<&Graph>,
    opts: &SearchOptions,
) -> Result<SearchReport, SearchError> {
    Catalog::build(c.order, opts)?.max_abs_under(c.kind, expected)
}

/// The three extremal characterisations under test.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Theorem {
    /// Fixed chromatic number: balanced complete multipartite graph.
    Chromatic,
    /// Fixed independence number: complete split graph.
    Independence,
    /// Fixed pendant count: star, double star, or kite.
    Pendant,
}

impl Theorem {
    pub const ALL: [Theorem; 3] = [Theorem::Chromatic, Theorem::Independence, Theorem::Pendant];

    pub fn id(self) -> &'static str {
        match self {
            Theorem::Chromatic => "T1",
            Theorem::Independence => "T2",
            Theorem::Pendant => "T3",
        }
    }

    pub fn parameter_name(self) -> &'static str {
        match self {
            Theorem::Chromatic => "chi",
            Theorem::Independence => "alpha",
            Theorem::Pendant => "p",
        }
    }

    /// Parameter values swept at order `n`, ascending.
    pub fn sweep_parameters(self, n: usize) -> std::ops::RangeInclusive<usize> {
        match self {
            Theorem::Chromatic => 3..=n.saturating_sub(1),
            Theorem::Independence | Theorem::Pendant => 1..=n.saturating_sub(1),
        }
    }

    pub fn constraint_kind(self, k: usize) -> ConstraintKind {
        match self {
            Theorem::Chromatic => ConstraintKind::Chromatic(k),
            Theorem::Independence => ConstraintKind::Independence(k),
            Theorem::Pendant => ConstraintKind::Pendants(k),
        }
    }

    pub fn in_hypothesis(self, n: usize, k: usize) -> bool {
        match self {
            Theorem::Chromatic => n >= 5 && k >= 3 && k < n,
            Theorem::Independence => n >= 2 && k >= 1 && k < n,
            Theorem::Pendant => match PendantCase::classify(n, k) {
                Some(PendantCase::Star) => n >= 3,
                Some(_) => n >= 4,
                None => false,
            },
        }
    }

    /// The graph claimed to be the unique maximizer, when it exists.
    pub fn extremal_graph(self, n: usize, k: usize) -> Option<Graph> {
        match self {
            Theorem::Chromatic => turan(n, k).ok(),
            Theorem::Independence => complete_split(n, k).ok(),
            Theorem::Pendant => PendantCase::classify(n, k)?.graph(n, k).ok(),
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Theorem {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "t1" | "chromatic" => Ok(Theorem::Chromatic),
            "t2" | "independence" => Ok(Theorem::Independence),
            "t3" | "pendant" | "pendants" => Ok(Theorem::Pendant),
            other => Err(format!("unknown theorem `{other}` (expected T1, T2 or T3)")),
        }
    }
}

/// Outcome of checking one characterisation at one `(n, k)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Verdict {
    pub theorem: Theorem,
    pub n: usize,
    pub parameter: usize,
    /// Outside the hypotheses the row is informational only.
    pub in_hypothesis: bool,
    pub pendant_case: Option<PendantCase>,
    pub report: SearchReport,
}

impl Verdict {
    pub fn holds(&self) -> bool {
        self.report.construction_match && self.report.unique
    }
}

pub fn verify_in_catalog(
    catalog: &Catalog,
    theorem: Theorem,
    k: usize,
) -> Result<Verdict, SearchError> {
    let n = catalog.order();
    let expected = theorem.extremal_graph(n, k);
    let report = catalog.max_abs_under(theorem.constraint_kind(k), expected.as_ref())?;
    Ok(Verdict {
        theorem,
        n,
        parameter: k,
        in_hypothesis: theorem.in_hypothesis(n, k),
        pendant_case: match theorem {
            Theorem::Pendant => PendantCase::classify(n, k),
            _ => None,
        },
        report,
    })
}

pub fn verify_theorem(
    theorem: Theorem,
    n: usize,
    k: usize,
    opts: &SearchOptions,
) -> Result<Verdict, SearchError> {
    verify_in_catalog(&Catalog::build(n, opts)?, theorem, k)
}

/// A single-edge addition that failed to increase the index.
#[derive(Debug, Clone, PartialEq)]
pub struct EdgeCounterexample {
    pub graph6: String,
    pub u: usize,
    pub v: usize,
    pub before: f64,
    pub after: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct EdgeLemmaReport {
    pub order: usize,
    pub graphs_checked: usize,
    pub additions_checked: usize,
    /// Smallest `abs(G + uv) - abs(G)` seen; `None` if no non-edge exists.
    pub min_margin: Option<f64>,
    pub counterexample: Option<EdgeCounterexample>,
}

impl EdgeLemmaReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none() && self.min_margin.is_none_or(|m| m > 0.0)
    }
}

/// Adds every missing edge to every connected class of order `n` and checks
/// that the index strictly increases.
pub fn check_edge_lemma(n: usize, opts: &SearchOptions) -> Result<EdgeLemmaReport, SearchError> {
    if n == 0 || n > EDGE_LEMMA_MAX_ORDER {
        return Err(SearchError::OrderOutOfRange {
            n,
            max: EDGE_LEMMA_MAX_ORDER,
        });
    }
    let classes = enumerate_connected(n, opts)?;
    let mut report = EdgeLemmaReport {
        order: n,
        graphs_checked: classes.len(),
        additions_checked: 0,
        min_margin: None,
        counterexample: None,
    };
    for g in &classes {
        let before = abs_index(g);
        for u in 0..n {
            for v in u + 1..n {
                if g.has_edge(u, v) {
                    continue;
                }
                let after = abs_index(&g.add_edge(u, v).expect("non-adjacent pair"));
                let margin = after - before;
                report.additions_checked += 1;
                report.min_margin = Some(report.min_margin.map_or(margin, |m| m.min(margin)));
                if margin <= 0.0 && report.counterexample.is_none() {
                    report.counterexample = Some(EdgeCounterexample {
                        graph6: graph6::encode(g),
                        u,
                        v,
                        before,
                        after,
                    });
                }
            }
        }
    }
    Ok(report)
}

/// Sample points for the scalar-function property checks.
#[derive(Debug, Clone, PartialEq)]
pub struct LemmaGrid {
    /// Values for `x` and `y`.
    pub points: Vec<f64>,
    pub steps: Vec<f64>,
    pub shifts: Vec<f64>,
    /// Values for `M` and `N`; pairs with `M < N` are used.
    pub bounds: Vec<f64>,
}

impl Default for LemmaGrid {
    fn default() -> Self {
        LemmaGrid {
            points: (0..=98).map(|i| 1.0 + 0.5 * i as f64).collect(),
            steps: vec![0.5, 1.0, 2.0],
            shifts: vec![1.0, 2.0, 3.0],
            bounds: (1..=20).map(|i| i as f64).collect(),
        }
    }
}

/// Sign check of one property over the grid. `margin` is the quantity
/// required to be strictly positive.
#[derive(Debug, Clone, PartialEq)]
pub struct PropertyCheck {
    pub name: &'static str,
    pub points: usize,
    pub failures: usize,
    pub min_margin: f64,
    /// Arguments at which `min_margin` occurred.
    pub worst_at: String,
}

impl PropertyCheck {
    pub fn passed(&self) -> bool {
        self.points > 0 && self.failures == 0
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScalarLemmaReport {
    pub checks: Vec<PropertyCheck>,
}

impl ScalarLemmaReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(PropertyCheck::passed)
    }

    pub fn check(&self, name: &str) -> Option<&PropertyCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

struct Tally {
    check: PropertyCheck,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Tally {
            check: PropertyCheck {
                name,
                points: 0,
                failures: 0,
                min_margin: f64::INFINITY,
                worst_at: String::new(),
            },
        }
    }

    fn record(&mut self, margin: f64, at: impl FnOnce() -> String) {
        let c = &mut self.check;
        c.points += 1;
        if !(margin > 0.0) {
            c.failures += 1;
        }
        if margin < c.min_margin || margin.is_nan() {
            c.min_margin = margin;
            c.worst_at = at();
        }
    }
}

/// Finite-difference sign checks:
///
/// * `f` strictly increasing in `x` and in `y`;
/// * `g_s` strictly decreasing and strictly convex in `x` and in `y`;
/// * `h_s` strictly increasing in `x` for `M < N`.
pub fn check_scalar_lemmas(grid: &LemmaGrid) -> Result<ScalarLemmaReport, SearchError> {
    if grid.points.iter().chain(&grid.bounds).any(|&v| !(v >= 1.0)) {
        return Err(SearchError::Grid(
            "points and bounds must be at least 1".into(),
        ));
    }
    if grid.steps.iter().chain(&grid.shifts).any(|&v| !(v > 0.0)) {
        return Err(SearchError::Grid(
            "steps and shifts must be positive".into(),
        ));
    }
    let fv = |x: f64, y: f64| f(x, y).expect("grid is in domain");
    let gv = |s: f64, x: f64, y: f64| g(s, x, y).expect("grid is in domain");

    let mut f_x = Tally::new("f-increasing-x");
    let mut f_y = Tally::new("f-increasing-y");
    let mut g_dec_x = Tally::new("g-decreasing-x");
    let mut g_cvx_x = Tally::new("g-convex-x");
    let mut g_dec_y = Tally::new("g-decreasing-y");
    let mut g_cvx_y = Tally::new("g-convex-y");
    let mut h_inc = Tally::new("h-increasing-x");

    for &x in &grid.points {
        for &y in &grid.points {
            for &d in &grid.steps {
                let at = || format!("x={x} y={y} d={d}");
                f_x.record(fv(x + d, y) - fv(x, y), at);
                f_y.record(fv(x, y + d) - fv(x, y), at);
                for &s in &grid.shifts {
                    let at = || format!("s={s} x={x} y={y} d={d}");
                    let base = gv(s, x, y);
                    g_dec_x.record(base - gv(s, x + d, y), at);
                    g_cvx_x.record(base + gv(s, x + 2.0 * d, y) - 2.0 * gv(s, x + d, y), at);
                    g_dec_y.record(base - gv(s, x, y + d), at);
                    g_cvx_y.record(base + gv(s, x, y + 2.0 * d) - 2.0 * gv(s, x, y + d), at);
                }
            }
        }
    }
    for &s in &grid.shifts {
        for &m in &grid.bounds {
            for &n in grid.bounds.iter().filter(|&&n| n > m) {
                for &x in &grid.points {
                    for &d in &grid.steps {
                        let hv = |x: f64| h(s, m, n, x).expect("grid is in domain");
                        h_inc.record(hv(x + d) - hv(x), || {
                            format!("s={s} M={m} N={n} x={x} d={d}")
                        });
                    }
                }
            }
        }
    }
    Ok(ScalarLemmaReport {
        checks: [f_x, f_y, g_dec_x, g_cvx_x, g_dec_y, g_cvx_y, h_inc]
            .into_iter()
            .map(|t| t.check)
            .collect(),
    })
}
