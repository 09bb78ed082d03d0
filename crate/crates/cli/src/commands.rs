use std::fmt::Write as _;
use std::str::FromStr;

use abs_extremal::extremal::{
    complete_split, double_star, formula_audit, kite, star, turan, AuditCase, AuditFamily,
    PendantCase,
};
use abs_extremal::graph6;
use abs_extremal::search::{
    check_edge_lemma, check_scalar_lemmas, verify_in_catalog, LemmaGrid, EDGE_LEMMA_MAX_ORDER,
    MAX_SEARCH_ORDER,
};
use abs_extremal::{
    abs_index, are_isomorphic, edge_contributions, Catalog, Graph, GraphInvariants, SearchOptions,
    Theorem, Verdict,
};

use crate::table::{decimal, decimal_opt, Format, Table};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Search(#[from] abs_extremal::SearchError),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// Every error is a usage or input problem.
    pub fn exit_code(&self) -> u8 {
        2
    }
}

/// Rendered text plus whether every checked row held.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub passed: bool,
}

impl Output {
    fn info(text: String) -> Self {
        Output { text, passed: true }
    }

    pub fn exit_code(&self) -> u8 {
        if self.passed {
            0
        } else {
            1
        }
    }
}

/// Inclusive order range, written `5..7`, `5..=7` or `6`. A reversed range
/// is empty.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrderRange {
    pub min: usize,
    pub max: usize,
}

impl OrderRange {
    pub fn iter(self) -> std::ops::RangeInclusive<usize> {
        self.min..=self.max
    }

    pub fn is_empty(self) -> bool {
        self.min > self.max
    }
}

impl FromStr for OrderRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let num = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| format!("bad order range `{s}` (expected e.g. 5..7)"))
        };
        match s.split_once("..") {
            Some((a, b)) => Ok(OrderRange {
                min: num(a)?,
                max: num(b.strip_prefix('=').unwrap_or(b))?,
            }),
            None => {
                let n = num(s)?;
                Ok(OrderRange { min: n, max: n })
            }
        }
    }
}

fn graph_report(g: &Graph, format: Format) -> String {
    let inv = GraphInvariants::of(g);
    let mut out = String::new();
    let _ = writeln!(out, "graph6: {}", graph6::encode(g));
    let _ = writeln!(out, "order: {}", g.order());
    let _ = writeln!(out, "edges: {}", g.edge_count());
    let _ = writeln!(out, "connected: {}", inv.connected);
    let _ = writeln!(out, "chromatic: {}", inv.chromatic);
    let _ = writeln!(out, "independence: {}", inv.independence);
    let _ = writeln!(out, "pendants: {}", inv.pendants);
    let _ = writeln!(out, "abs: {}", decimal(abs_index(g)));
    out.push('\n');
    let mut t = Table::new(["u", "v", "du", "dv", "contribution"]);
    for c in edge_contributions(g) {
        t.push(vec![
            c.edge.u.to_string(),
            c.edge.v.to_string(),
            c.du.to_string(),
            c.dv.to_string(),
            decimal(c.value),
        ]);
    }
    out.push_str(&t.render(format));
    out
}

/// Index report for one graph6 string. Surrounding whitespace is ignored.
pub fn compute(input: &str, format: Format) -> Result<Output, CliError> {
    let text = input.trim();
    if text.is_empty() {
        return Err(CliError::Usage("no graph6 input given".into()));
    }
    let g = graph6::decode(text).map_err(|e| CliError::Input(format!("invalid graph6: {e}")))?;
    Ok(Output::info(graph_report(&g, format)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Turan,
    Split,
    Star,
    DoubleStar,
    Kite,
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "turan" => Ok(Family::Turan),
            "split" => Ok(Family::Split),
            "star" => Ok(Family::Star),
            "dstar" => Ok(Family::DoubleStar),
            "kite" => Ok(Family::Kite),
            _ => Err(format!(
                "unknown family `{s}` (expected turan, split, star, dstar or kite)"
            )),
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct FamilyParams {
    pub n: Option<usize>,
    pub chi: Option<usize>,
    pub alpha: Option<usize>,
    pub p: Option<usize>,
    pub m: Option<usize>,
}

fn need(value: Option<usize>, flag: &str, family: &str) -> Result<usize, CliError> {
    value.ok_or_else(|| CliError::Usage(format!("{family} needs --{flag}")))
}

pub fn build_family(family: Family, params: FamilyParams) -> Result<Graph, CliError> {
    let n = need(params.n, "n", "construct")?;
    let built = match family {
        Family::Turan => turan(n, need(params.chi, "chi", "turan")?),
        Family::Split => complete_split(n, need(params.alpha, "alpha", "split")?),
        Family::Star => star(n),
        Family::DoubleStar => double_star(n, params.m.unwrap_or(2)),
        Family::Kite => kite(n, need(params.p, "p", "kite")?),
    };
    built.map_err(|e| CliError::Input(e.to_string()))
}

/// Audit cases whose extremal graph is `g`.
fn audit_cases_for(family: Family, g: &Graph, params: FamilyParams) -> Vec<AuditCase> {
    let n = g.order();
    let inv = GraphInvariants::of(g);
    let mut cases = Vec::new();
    match family {
        Family::Turan => {
            if let Some(chi) = params.chi {
                cases.push(AuditCase::Chromatic { n, chi });
            }
        }
        Family::Split => {
            if let Some(alpha) = params.alpha {
                cases.push(AuditCase::Independence { n, alpha });
            }
        }
        Family::Star | Family::DoubleStar | Family::Kite => {
            let p = inv.pendants;
            let regime = PendantCase::classify(n, p);
            let matches = regime
                .and_then(|r| r.graph(n, p).ok())
                .is_some_and(|h| are_isomorphic(g, &h));
            if matches && n >= 4 {
                cases.push(AuditCase::Pendant { n, p });
                if regime == Some(PendantCase::Kite) {
                    cases.push(AuditCase::PendantCliqueTerm { n, p });
                }
            }
        }
    }
    cases
}

fn audit_table(cases: &[AuditCase]) -> Result<Table, CliError> {
    let mut t = Table::new([
        "family", "n", "param", "case", "printed", "direct", "abs_diff", "agree",
    ]);
    for &case in cases {
        let a = formula_audit(case).map_err(|e| CliError::Input(e.to_string()))?;
        let (n, k) = case.params();
        let regime = match case {
            AuditCase::Pendant { n, p } | AuditCase::PendantCliqueTerm { n, p } => {
                PendantCase::classify(n, p).map_or("-".to_string(), |r| r.to_string())
            }
            _ => "-".to_string(),
        };
        t.push(vec![
            a.case_label().to_string(),
            n.to_string(),
            k.to_string(),
            regime,
            decimal(a.printed_value),
            decimal(a.direct_value),
            decimal(a.abs_difference),
            a.agrees.to_string(),
        ]);
    }
    Ok(t)
}

pub fn construct(
    family: Family,
    params: FamilyParams,
    include_audit: bool,
    format: Format,
) -> Result<Output, CliError> {
    let g = build_family(family, params)?;
    let mut text = graph_report(&g, format);
    if include_audit {
        let cases = audit_cases_for(family, &g, params);
        text.push('\n');
        text.push_str(&audit_table(&cases)?.render(format));
    }
    Ok(Output::info(text))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepConfig {
    pub orders: OrderRange,
    pub theorems: Vec<Theorem>,
    pub format: Format,
    pub workers: usize,
    pub allow_order_8: bool,
    pub include_audit: bool,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            orders: OrderRange { min: 5, max: 7 },
            theorems: Theorem::ALL.to_vec(),
            format: Format::Csv,
            workers: 1,
            allow_order_8: false,
            include_audit: false,
        }
    }
}

impl SweepConfig {
    pub fn validate(&self) -> Result<(), CliError> {
        let OrderRange { min, max } = self.orders;
        if min == 0 || min > max {
            return Err(CliError::Usage(format!(
                "order range {min}..{max} must satisfy 1 <= min <= max"
            )));
        }
        if max > MAX_SEARCH_ORDER {
            return Err(CliError::Usage(format!(
                "order {max} exceeds the search cap of {MAX_SEARCH_ORDER}"
            )));
        }
        if max == MAX_SEARCH_ORDER && !self.allow_order_8 {
            return Err(CliError::Usage("order 8 sweeps need --enable-n8".into()));
        }
        if self.workers == 0 {
            return Err(CliError::Usage("workers must be at least 1".into()));
        }
        Ok(())
    }
}

pub const VERIFY_HEADER: [&str; 12] = [
    "theorem",
    "n",
    "param",
    "in_hypothesis",
    "case",
    "classes",
    "max_abs",
    "maximizers",
    "expected",
    "match",
    "unique",
    "status",
];

fn verdict_row(v: &Verdict) -> Vec<String> {
    let r = &v.report;
    let status = match (v.in_hypothesis, v.holds()) {
        (false, _) => "info",
        (true, true) => "pass",
        (true, false) => "FAIL",
    };
    vec![
        v.theorem.id().to_string(),
        v.n.to_string(),
        v.parameter.to_string(),
        v.in_hypothesis.to_string(),
        v.pendant_case.map_or("-".to_string(), |c| c.to_string()),
        r.graph_count.to_string(),
        decimal_opt(r.max_value),
        r.maximizers
            .iter()
            .map(|m| m.graph6.as_str())
            .collect::<Vec<_>>()
            .join(";"),
        r.expected.map_or(String::new(), |f| f.graph6()),
        r.construction_match.to_string(),
        r.unique.to_string(),
        status.to_string(),
    ]
}

/// Every verdict of the sweep, ordered by theorem, then order, then
/// parameter.
pub fn sweep(cfg: &SweepConfig) -> Result<Vec<Verdict>, CliError> {
    cfg.validate()?;
    let mut theorems = cfg.theorems.clone();
    theorems.sort();
    theorems.dedup();
    let opts = SearchOptions {
        allow_order_8: cfg.allow_order_8,
        ..SearchOptions::with_workers(cfg.workers)
    };
    let catalogs = if theorems.is_empty() {
        Vec::new()
    } else {
        cfg.orders
            .iter()
            .map(|n| Catalog::build(n, &opts))
            .collect::<Result<Vec<_>, _>>()?
    };
    let mut verdicts = Vec::new();
    for &t in &theorems {
        for catalog in &catalogs {
            for k in t.sweep_parameters(catalog.order()) {
                verdicts.push(verify_in_catalog(catalog, t, k)?);
            }
        }
    }
    Ok(verdicts)
}

pub fn verify(cfg: &SweepConfig) -> Result<Output, CliError> {
    let verdicts = sweep(cfg)?;
    let mut t = Table::new(VERIFY_HEADER);
    for v in &verdicts {
        t.push(verdict_row(v));
    }
    let passed = verdicts.iter().all(|v| !v.in_hypothesis || v.holds());
    let mut text = t.render(cfg.format);
    if cfg.include_audit {
        text.push('\n');
        text.push_str(
            &audit_table(&audit_cases(&AuditFamily::ALL, cfg.orders))?.render(cfg.format),
        );
    }
    Ok(Output { text, passed })
}

/// Cases of the requested families over `orders`, ordered by family, then
/// order, then parameter.
pub fn audit_cases(families: &[AuditFamily], orders: OrderRange) -> Vec<AuditCase> {
    AuditFamily::ALL
        .into_iter()
        .filter(|f| families.contains(f))
        .flat_map(|f| orders.iter().flat_map(move |n| f.cases(n)))
        .collect()
}

/// Printed closed forms against direct evaluation. Disagreements are
/// findings, not failures, so the exit status is always success.
pub fn audit(
    families: &[AuditFamily],
    orders: OrderRange,
    format: Format,
) -> Result<Output, CliError> {
    if orders.max > 64 {
        return Err(CliError::Usage(format!(
            "audit order {} is too large (at most 64)",
            orders.max
        )));
    }
    let table = audit_table(&audit_cases(families, orders))?;
    Ok(Output::info(table.render(format)))
}

pub fn lemmas(orders: OrderRange, workers: usize, format: Format) -> Result<Output, CliError> {
    if !orders.is_empty() && (orders.min == 0 || orders.max > EDGE_LEMMA_MAX_ORDER) {
        return Err(CliError::Usage(format!(
            "edge-addition check runs for orders 1..{EDGE_LEMMA_MAX_ORDER}"
        )));
    }
    let scalar = check_scalar_lemmas(&LemmaGrid::default())?;
    let mut t = Table::new([
        "property",
        "points",
        "failures",
        "min_margin",
        "worst_at",
        "status",
    ]);
    for c in &scalar.checks {
        t.push(vec![
            c.name.to_string(),
            c.points.to_string(),
            c.failures.to_string(),
            decimal(c.min_margin),
            c.worst_at.clone(),
            if c.passed() { "pass" } else { "FAIL" }.to_string(),
        ]);
    }
    let mut passed = scalar.passed();
    let mut text = t.render(format);

    let opts = SearchOptions::with_workers(workers.max(1));
    let mut e = Table::new([
        "n",
        "graphs",
        "additions",
        "min_margin",
        "counterexample",
        "status",
    ]);
    for n in orders.iter() {
        let r = check_edge_lemma(n, &opts)?;
        passed &= r.passed();
        e.push(vec![
            n.to_string(),
            r.graphs_checked.to_string(),
            r.additions_checked.to_string(),
            decimal_opt(r.min_margin),
            r.counterexample
                .as_ref()
                .map_or(String::new(), |c| format!("{} +{}-{}", c.graph6, c.u, c.v)),
            if r.passed() { "pass" } else { "FAIL" }.to_string(),
        ]);
    }
    text.push('\n');
    text.push_str(&e.render(format));
    Ok(Output { text, passed })
}
