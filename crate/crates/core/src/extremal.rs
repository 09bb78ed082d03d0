//! Extremal graph families, the closed-form maxima exactly as published, and
//! an audit comparing those closed forms against direct evaluation.
//!
//! The published expressions are evaluated verbatim. Several of them do not
//! equal the index of the graph they are stated for; [`formula_audit`]
//! reports the difference rather than substituting a corrected formula.
//! Verification verdicts elsewhere in the crate use direct evaluation only.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::index::{abs_index, f};

/// Agreement threshold between a printed value and direct evaluation.
pub const AUDIT_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtremalError {
    #[error("{family}: {detail}")]
    Parameter {
        family: &'static str,
        detail: String,
    },
    #[error("{formula}: negative radicand at n = {n}, k = {k}")]
    Radicand {
        formula: &'static str,
        n: usize,
        k: usize,
    },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn reject(family: &'static str, detail: String) -> ExtremalError {
    ExtremalError::Parameter { family, detail }
}

/// Balanced part sizes of the complete multipartite graph `T(n, chi)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TuranDecomposition {
    pub n: usize,
    pub chi: usize,
    /// `n = q * chi + r`, `0 <= r < chi`.
    pub q: usize,
    pub r: usize,
    /// `r` parts of size `q + 1` followed by `chi - r` parts of size `q`.
    pub part_sizes: Vec<usize>,
}

impl TuranDecomposition {
    pub fn new(n: usize, chi: usize) -> Result<Self, ExtremalError> {
        if chi < 1 || chi > n {
            return Err(reject(
                "turan",
                format!("need 1 <= chi <= n, got n = {n}, chi = {chi}"),
            ));
        }
        let (q, r) = (n / chi, n % chi);
        let part_sizes = (0..chi).map(|i| if i < r { q + 1 } else { q }).collect();
        Ok(TuranDecomposition {
            n,
            chi,
            q,
            r,
            part_sizes,
        })
    }

    /// Part index of every vertex, larger parts first.
    pub fn part_of_vertices(&self) -> Vec<usize> {
        self.part_sizes
            .iter()
            .enumerate()
            .flat_map(|(i, &size)| std::iter::repeat_n(i, size))
            .collect()
    }
}

/// Balanced complete `chi`-partite graph on `n` vertices; `2 <= chi <= n`.
pub fn turan(n: usize, chi: usize) -> Result<Graph, ExtremalError> {
    if chi < 2 || chi > n {
        return Err(reject(
            "turan",
            format!("need 2 <= chi <= n, got n = {n}, chi = {chi}"),
        ));
    }
    let parts = TuranDecomposition::new(n, chi)?.part_of_vertices();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if parts[u] != parts[v] {
                edges.push((u, v));
            }
        }
    }
    Ok(Graph::from_edges(n, &edges)?)
}

/// Join of an edgeless graph on `alpha` vertices (labels `0..alpha`) with a
/// complete graph on the remaining `n - alpha`. `alpha = 1` gives `K_n`.
pub fn complete_split(n: usize, alpha: usize) -> Result<Graph, ExtremalError> {
    if n < 2 || alpha < 1 || alpha >= n {
        return Err(reject(
            "complete_split",
            format!("need n >= 2 and 1 <= alpha <= n - 1, got n = {n}, alpha = {alpha}"),
        ));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if v >= alpha {
                edges.push((u, v));
            }
        }
    }
    Ok(Graph::from_edges(n, &edges)?)
}

/// Star of order `n` with centre 0.
pub fn star(n: usize) -> Result<Graph, ExtremalError> {
    if n < 2 {
        return Err(reject("star", format!("need n >= 2, got n = {n}")));
    }
    let edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
    Ok(Graph::from_edges(n, &edges)?)
}

/// Double star with adjacent internal vertices 0 and 1 of degrees `m` and
/// `n - m`.
pub fn double_star(n: usize, m: usize) -> Result<Graph, ExtremalError> {
    if n < 4 || m < 2 || m > n - 2 {
        return Err(reject(
            "double_star",
            format!("need n >= 4 and 2 <= m <= n - 2, got n = {n}, m = {m}"),
        ));
    }
    let mut edges = vec![(0, 1)];
    // vertex 0 gets m - 1 leaves, vertex 1 the remaining n - m - 1
    edges.extend((2..m + 1).map(|v| (0, v)));
    edges.extend((m + 1..n).map(|v| (1, v)));
    Ok(Graph::from_edges(n, &edges)?)
}

/// Complete graph on the `n - p` internal vertices `0..n-p`, with `p`
/// pendant vertices all attached to vertex 0. `p = 0` gives `K_n`.
pub fn kite(n: usize, p: usize) -> Result<Graph, ExtremalError> {
    if n < 2 || p > n - 2 {
        return Err(reject(
            "kite",
            format!("need n >= 2 and p <= n - 2, got n = {n}, p = {p}"),
        ));
    }
    let internal = n - p;
    let mut edges = Vec::new();
    for u in 0..internal {
        for v in u + 1..internal {
            edges.push((u, v));
        }
    }
    edges.extend((internal..n).map(|v| (0, v)));
    Ok(Graph::from_edges(n, &edges)?)
}

/// A closed-form value together with whether the parameters lie inside the
/// hypotheses of the statement it comes from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PrintedValue {
    pub value: f64,
    pub in_hypothesis: bool,
}

fn radical(
    num: i64,
    den: i64,
    formula: &'static str,
    n: usize,
    k: usize,
) -> Result<f64, ExtremalError> {
    if num < 0 || den <= 0 {
        return Err(ExtremalError::Radicand { formula, n, k });
    }
    Ok((num as f64 / den as f64).sqrt())
}

/// Published upper bound over connected graphs of order `n` and chromatic
/// number `chi`:
///
/// `r(r-1)q^2/2 * sqrt((n-q-1)/(n-q))
///  + r(chi-r)q(q+1) * sqrt((2n-2q-3)/(2n-2q-1))
///  + (chi-r)(chi-r-1)(q+1)^2/2 * sqrt((n-q-2)/(n-q))`
///
/// with `n = q*chi + r`, `0 <= r < chi`. Computed for any `1 <= chi <= n`
/// where the radicands of non-vanishing terms are nonnegative; the
/// hypotheses are `n >= 5`, `3 <= chi <= n - 1`.
pub fn chromatic_bound_printed(n: usize, chi: usize) -> Result<PrintedValue, ExtremalError> {
    const NAME: &str = "chromatic bound";
    if chi < 1 || chi > n {
        return Err(reject(
            NAME,
            format!("need 1 <= chi <= n, got n = {n}, chi = {chi}"),
        ));
    }
    let (q, r) = ((n / chi) as i64, (n % chi) as i64);
    let (ni, c) = (n as i64, chi as i64);
    let term = |coeff2: i64, num: i64, den: i64| -> Result<f64, ExtremalError> {
        // coeff2 is twice the coefficient so that /2 stays exact
        if coeff2 == 0 {
            return Ok(0.0);
        }
        Ok(coeff2 as f64 / 2.0 * radical(num, den, NAME, n, chi)?)
    };
    let value = term(r * (r - 1) * q * q, ni - q - 1, ni - q)?
        + term(
            2 * r * (c - r) * q * (q + 1),
            2 * ni - 2 * q - 3,
            2 * ni - 2 * q - 1,
        )?
        + term(
            (c - r) * (c - r - 1) * (q + 1) * (q + 1),
            ni - q - 2,
            ni - q,
        )?;
    Ok(PrintedValue {
        value,
        in_hypothesis: n >= 5 && chi >= 3 && chi < n,
    })
}

/// Published upper bound over connected graphs of order `n` and
/// independence number `alpha`:
/// `alpha * sqrt((n-alpha)(n-alpha-1)) + (n-alpha)/2 * sqrt((n-alpha-1)(n-alpha-2))`.
pub fn independence_bound_printed(n: usize, alpha: usize) -> Result<PrintedValue, ExtremalError> {
    const NAME: &str = "independence bound";
    if n < 2 || alpha < 1 || alpha >= n {
        return Err(reject(
            NAME,
            format!("need n >= 2 and 1 <= alpha <= n - 1, got n = {n}, alpha = {alpha}"),
        ));
    }
    let k = (n - alpha) as i64;
    let value = alpha as f64 * radical(k * (k - 1), 1, NAME, n, alpha)?
        + k as f64 / 2.0 * radical((k - 1) * (k - 2), 1, NAME, n, alpha)?;
    Ok(PrintedValue {
        value,
        in_hypothesis: true,
    })
}

/// Which of the three pendant-count regimes applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PendantCase {
    /// `p = n - 1`: the star.
    Star,
    /// `p = n - 2`: the double star with internal degrees 2 and `n - 2`.
    DoubleStar,
    /// `1 <= p <= n - 3`: the kite.
    Kite,
}

impl PendantCase {
    pub fn classify(n: usize, p: usize) -> Option<Self> {
        match p {
            0 => None,
            p if p + 1 == n => Some(PendantCase::Star),
            p if p + 2 == n => Some(PendantCase::DoubleStar),
            p if p + 3 <= n => Some(PendantCase::Kite),
            _ => None,
        }
    }

    /// The graph the corresponding statement names.
    pub fn graph(self, n: usize, p: usize) -> Result<Graph, ExtremalError> {
        match self {
            PendantCase::Star => star(n),
            PendantCase::DoubleStar => double_star(n, 2),
            PendantCase::Kite => kite(n, p),
        }
    }
}

impl fmt::Display for PendantCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PendantCase::Star => "star",
            PendantCase::DoubleStar => "double-star",
            PendantCase::Kite => "kite",
        })
    }
}

/// Published values over connected graphs of order `n` with `p` pendant
/// vertices, one expression per regime:
///
/// * `p = n - 1`: `(n-1) sqrt(n-2) / n`
/// * `p = n - 2`: `1/sqrt(3) + sqrt(n-2)/n + (n-3) sqrt(n-3)/(n-1)`
/// * `p <= n - 3`: `p sqrt((n-2)/n) + (n-p-1) sqrt((2n-2p-3)/(2n-2p-1))
///   + sqrt(n-p-1) (n-p-2)^(3/2) / 2`
pub fn pendant_bound_printed(
    n: usize,
    p: usize,
) -> Result<(PendantCase, PrintedValue), ExtremalError> {
    const NAME: &str = "pendant bound";
    let case = PendantCase::classify(n, p)
        .filter(|_| n >= 2)
        .ok_or_else(|| reject(NAME, format!("need 1 <= p <= n - 1, got n = {n}, p = {p}")))?;
    let nf = n as f64;
    let (ni, pi) = (n as i64, p as i64);
    let value = match case {
        PendantCase::Star => (nf - 1.0) * radical(ni - 2, 1, NAME, n, p)? / nf,
        PendantCase::DoubleStar => {
            1.0 / 3f64.sqrt()
                + radical(ni - 2, 1, NAME, n, p)? / nf
                + (nf - 3.0) * radical(ni - 3, 1, NAME, n, p)? / (nf - 1.0)
        }
        PendantCase::Kite => {
            p as f64 * radical(ni - 2, ni, NAME, n, p)?
                + (ni - pi - 1) as f64
                    * radical(2 * ni - 2 * pi - 3, 2 * ni - 2 * pi - 1, NAME, n, p)?
                + pendant_clique_term_printed(n, p)?
        }
    };
    let in_hypothesis = match case {
        PendantCase::Star => n >= 3,
        _ => n >= 4,
    };
    Ok((
        case,
        PrintedValue {
            value,
            in_hypothesis,
        },
    ))
}

/// Third summand of the kite-regime expression,
/// `sqrt(n-p-1) (n-p-2)^(3/2) / 2`, for `1 <= p <= n - 3`.
pub fn pendant_clique_term_printed(n: usize, p: usize) -> Result<f64, ExtremalError> {
    if p < 1 || p + 3 > n {
        return Err(reject(
            "pendant clique term",
            format!("need 1 <= p <= n - 3, got n = {n}, p = {p}"),
        ));
    }
    let k = (n - p) as f64;
    Ok(0.5 * (k - 1.0).sqrt() * (k - 2.0).powf(1.5))
}

/// Index contribution of the edges among the non-apex internal vertices
/// of `kite(n, p)`.
pub fn kite_clique_contribution(n: usize, p: usize) -> Result<f64, ExtremalError> {
    let g = kite(n, p)?;
    let internal = n - p;
    Ok(crate::index::edge_contributions(&g)
        .iter()
        .filter(|c| c.edge.u >= 1 && c.edge.v < internal)
        .map(|c| c.value)
        .sum())
}

/// Index of the double star with `p` leaves split as `t` and `p - t`:
/// `t f(1, t+1) + (p-t) f(1, p-t+1) + f(t+1, p-t+1)`.
///
/// The last term (the bridge between the two centres) is constant in `t`
/// since its degree sum is always `p + 2`.
pub fn double_star_split_value(p: usize, t: usize) -> Result<f64, ExtremalError> {
    if p < 2 || t < 1 || t >= p {
        return Err(reject(
            "double_star_split_value",
            format!("need p >= 2 and 1 <= t <= p - 1, got p = {p}, t = {t}"),
        ));
    }
    let (pf, tf) = (p as f64, t as f64);
    let eval = |x: f64, y: f64| f(x, y).expect("degrees are at least 1");
    Ok(tf * eval(1.0, tf + 1.0)
        + (pf - tf) * eval(1.0, pf - tf + 1.0)
        + eval(tf + 1.0, pf - tf + 1.0))
}

/// A closed form to audit, with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AuditCase {
    Chromatic {
        n: usize,
        chi: usize,
    },
    Independence {
        n: usize,
        alpha: usize,
    },
    Pendant {
        n: usize,
        p: usize,
    },
    /// Only the clique summand of the kite-regime pendant expression.
    PendantCliqueTerm {
        n: usize,
        p: usize,
    },
}

/// Family selector for audit sweeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AuditFamily {
    Chromatic,
    Independence,
    Pendant,
    PendantCliqueTerm,
}

impl AuditFamily {
    pub const ALL: [AuditFamily; 4] = [
        AuditFamily::Chromatic,
        AuditFamily::Independence,
        AuditFamily::Pendant,
        AuditFamily::PendantCliqueTerm,
    ];

    pub fn label(self) -> &'static str {
        match self {
            AuditFamily::Chromatic => "chromatic",
            AuditFamily::Independence => "independence",
            AuditFamily::Pendant => "pendant",
            AuditFamily::PendantCliqueTerm => "pendant-clique-term",
        }
    }

    pub fn parameter_name(self) -> &'static str {
        match self {
            AuditFamily::Chromatic => "chi",
            AuditFamily::Independence => "alpha",
            AuditFamily::Pendant | AuditFamily::PendantCliqueTerm => "p",
        }
    }

    /// Every case of this family at order `n`, parameter ascending.
    pub fn cases(self, n: usize) -> Vec<AuditCase> {
        match self {
            AuditFamily::Chromatic if n >= 5 => {
                (3..n).map(|chi| AuditCase::Chromatic { n, chi }).collect()
            }
            AuditFamily::Independence if n >= 2 => (1..n)
                .map(|alpha| AuditCase::Independence { n, alpha })
                .collect(),
            AuditFamily::Pendant if n >= 4 => (1..n).map(|p| AuditCase::Pendant { n, p }).collect(),
            AuditFamily::PendantCliqueTerm if n >= 4 => (1..n - 2)
                .map(|p| AuditCase::PendantCliqueTerm { n, p })
                .collect(),
            _ => Vec::new(),
        }
    }
}

impl fmt::Display for AuditFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for AuditFamily {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        AuditFamily::ALL
            .into_iter()
            .find(|fam| fam.label() == s)
            .ok_or_else(|| {
                format!(
                    "unknown audit family `{s}` (expected one of: chromatic, independence, pendant, pendant-clique-term)"
                )
            })
    }
}

impl AuditCase {
    pub fn family(&self) -> AuditFamily {
        match self {
            AuditCase::Chromatic { .. } => AuditFamily::Chromatic,
            AuditCase::Independence { .. } => AuditFamily::Independence,
            AuditCase::Pendant { .. } => AuditFamily::Pendant,
            AuditCase::PendantCliqueTerm { .. } => AuditFamily::PendantCliqueTerm,
        }
    }

    /// `(n, parameter)`.
    pub fn params(&self) -> (usize, usize) {
        match *self {
            AuditCase::Chromatic { n, chi } => (n, chi),
            AuditCase::Independence { n, alpha } => (n, alpha),
            AuditCase::Pendant { n, p } | AuditCase::PendantCliqueTerm { n, p } => (n, p),
        }
    }
}

/// Printed versus directly evaluated value for one case.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FormulaAudit {
    pub case: AuditCase,
    pub printed_value: f64,
    pub direct_value: f64,
    pub abs_difference: f64,
    pub agrees: bool,
}

impl FormulaAudit {
    pub fn case_label(&self) -> &'static str {
        self.case.family().label()
    }
}

pub fn formula_audit(case: AuditCase) -> Result<FormulaAudit, ExtremalError> {
    let (printed_value, direct_value) = match case {
        AuditCase::Chromatic { n, chi } => (
            chromatic_bound_printed(n, chi)?.value,
            abs_index(&turan(n, chi)?),
        ),
        AuditCase::Independence { n, alpha } => (
            independence_bound_printed(n, alpha)?.value,
            abs_index(&complete_split(n, alpha)?),
        ),
        AuditCase::Pendant { n, p } => {
            let (regime, printed) = pendant_bound_printed(n, p)?;
            (printed.value, abs_index(&regime.graph(n, p)?))
        }
        AuditCase::PendantCliqueTerm { n, p } => (
            pendant_clique_term_printed(n, p)?,
            kite_clique_contribution(n, p)?,
        ),
    };
    let abs_difference = (printed_value - direct_value).abs();
    Ok(FormulaAudit {
        case,
        printed_value,
        direct_value,
        abs_difference,
        agrees: abs_difference <= AUDIT_TOLERANCE,
    })
}
