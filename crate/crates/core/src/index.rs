//! The atom-bond sum-connectivity index and the scalar functions behind the
//! extremal arguments.
//!
//! Every edge `uv` contributes `f(d_u, d_v) = sqrt((d_u + d_v - 2) / (d_u + d_v))`.
//! Writing `d_e = d_u + d_v - 2` for the number of edges adjacent to `e`, the
//! same summand is `sqrt(1 - 2 / (d_e + 2))`.

use thiserror::Error;

use crate::graph::{Edge, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Error)]
pub enum DomainError {
    #[error("argument {name} = {value} must be at least 1")]
    BelowOne { name: &'static str, value: f64 },
    #[error("shift s = {0} must be positive")]
    NonPositiveShift(f64),
    #[error("parameters must satisfy M <= N, got M = {m}, N = {n}")]
    Unordered { m: f64, n: f64 },
}

fn at_least_one(name: &'static str, value: f64) -> Result<(), DomainError> {
    // NaN fails this comparison as well.
    if value >= 1.0 {
        Ok(())
    } else {
        Err(DomainError::BelowOne { name, value })
    }
}

/// Edge weight as a function of the endpoint degree sum.
#[inline]
fn weight_of_sum(sum: f64) -> f64 {
    ((sum - 2.0) / sum).sqrt()
}

/// `f(x, y) = sqrt((x + y - 2) / (x + y))` for `x, y >= 1`.
pub fn f(x: f64, y: f64) -> Result<f64, DomainError> {
    at_least_one("x", x)?;
    at_least_one("y", y)?;
    Ok(weight_of_sum(x + y))
}

/// `g_s(x, y) = f(x + s, y) - f(x, y)`.
pub fn g(s: f64, x: f64, y: f64) -> Result<f64, DomainError> {
    if !(s > 0.0) {
        return Err(DomainError::NonPositiveShift(s));
    }
    Ok(f(x + s, y)? - f(x, y)?)
}

/// `h_s(x) = g_s(x, M) - g_s(x, N)` for `1 <= M <= N`.
pub fn h(s: f64, m: f64, n: f64, x: f64) -> Result<f64, DomainError> {
    at_least_one("M", m)?;
    if !(m <= n) {
        return Err(DomainError::Unordered { m, n });
    }
    Ok(g(s, x, m)? - g(s, x, n)?)
}

/// Per-edge summand of the index.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EdgeContribution {
    pub edge: Edge,
    pub du: usize,
    pub dv: usize,
    pub value: f64,
}

#[inline]
fn degree_pair_weight(du: usize, dv: usize) -> f64 {
    weight_of_sum((du + dv) as f64)
}

/// Sum of `f(d_u, d_v)` over all edges; 0 for an edgeless graph.
pub fn abs_index(g: &Graph) -> f64 {
    let degrees = g.degrees();
    g.edges()
        .map(|e| degree_pair_weight(degrees[e.u], degrees[e.v]))
        .sum()
}

/// One record per edge, in edge order. Values sum to [`abs_index`].
pub fn edge_contributions(g: &Graph) -> Vec<EdgeContribution> {
    let degrees = g.degrees();
    g.edges()
        .map(|edge| {
            let (du, dv) = (degrees[edge.u], degrees[edge.v]);
            EdgeContribution {
                edge,
                du,
                dv,
                value: degree_pair_weight(du, dv),
            }
        })
        .collect()
}
