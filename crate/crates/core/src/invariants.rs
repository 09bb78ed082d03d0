//! Exact constraint invariants: chromatic number, independence number,
//! pendant count.

use crate::graph::{full_mask, BitIter, Graph, Row};

/// The invariants the search constrains on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GraphInvariants {
    pub connected: bool,
    pub chromatic: usize,
    pub independence: usize,
    pub pendants: usize,
}

impl GraphInvariants {
    pub fn of(g: &Graph) -> Self {
        GraphInvariants {
            connected: g.is_connected(),
            chromatic: chromatic_number(g),
            independence: independence_number(g),
            pendants: pendant_count(g),
        }
    }
}

/// Number of vertices of degree exactly one.
pub fn pendant_count(g: &Graph) -> usize {
    g.rows().iter().filter(|r| r.count_ones() == 1).count()
}

/// Least `k` admitting a proper `k`-colouring.
///
/// Searches `k` upward from the size of a greedily grown clique and stops at
/// the size of a greedy colouring, which is always feasible.
pub fn chromatic_number(g: &Graph) -> usize {
    if g.edge_count() == 0 {
        return 1;
    }
    // Highest degree first; ties by index so the order is deterministic.
    let mut order: Vec<usize> = (0..g.order()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.neighbors(v).count_ones()), v));

    let lower = greedy_clique(g, &order);
    let upper = greedy_colouring(g, &order);
    let mut colours = vec![usize::MAX; g.order()];
    for k in lower..upper {
        colours.fill(usize::MAX);
        if colour_with(g, &order, k, 0, 0, &mut colours) {
            return k;
        }
    }
    upper
}

fn greedy_clique(g: &Graph, order: &[usize]) -> usize {
    let mut best = 1;
    for &start in order {
        let mut candidates = g.neighbors(start);
        let mut size = 1;
        for &v in order {
            if candidates >> v & 1 == 1 {
                size += 1;
                candidates &= g.neighbors(v);
            }
        }
        best = best.max(size);
    }
    best
}

fn greedy_colouring(g: &Graph, order: &[usize]) -> usize {
    let mut colour = vec![usize::MAX; g.order()];
    let mut used = 0;
    for &v in order {
        let mut taken = 0u32;
        for u in BitIter(g.neighbors(v)) {
            if colour[u] != usize::MAX {
                taken |= 1 << colour[u];
            }
        }
        let c = taken.trailing_ones() as usize;
        colour[v] = c;
        used = used.max(c + 1);
    }
    used
}

/// Backtracking colouring of `order[depth..]` with at most `k` colours.
/// A vertex may open at most one new colour, which removes colour-permutation
/// symmetry.
fn colour_with(
    g: &Graph,
    order: &[usize],
    k: usize,
    depth: usize,
    used: usize,
    colours: &mut [usize],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    let mut taken = 0u32;
    for u in BitIter(g.neighbors(v)) {
        if colours[u] != usize::MAX {
            taken |= 1 << colours[u];
        }
    }
    let limit = (used + 1).min(k);
    for c in 0..limit {
        if taken >> c & 1 == 1 {
            continue;
        }
        colours[v] = c;
        if colour_with(g, order, k, depth + 1, used.max(c + 1), colours) {
            return true;
        }
    }
    colours[v] = usize::MAX;
    false
}

/// Size of a largest set of pairwise non-adjacent vertices.
pub fn independence_number(g: &Graph) -> usize {
    let mut best = 0;
    max_independent(g, full_mask(g.order()), 0, &mut best);
    best
}

fn max_independent(g: &Graph, candidates: Row, size: usize, best: &mut usize) {
    if candidates == 0 {
        *best = (*best).max(size);
        return;
    }
    if size + candidates.count_ones() as usize <= *best {
        return;
    }
    // Branch on a candidate of maximum degree inside the candidate set; a
    // vertex with no candidate neighbours is always taken.
    let v = BitIter(candidates)
        .max_by_key(|&v| {
            (
                (g.neighbors(v) & candidates).count_ones(),
                std::cmp::Reverse(v),
            )
        })
        .expect("candidates non-empty");
    let closed = g.neighbors(v) & candidates;
    max_independent(g, candidates & !closed & !(1 << v), size + 1, best);
    if closed != 0 {
        max_independent(g, candidates & !(1 << v), size, best);
    }
}
