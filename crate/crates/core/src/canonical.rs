//! Canonical forms for isomorphism tests.
//!
//! The canonical form of a graph is the lexicographically smallest
//! column-major upper-triangle bit string over all vertex orderings that
//! respect an isomorphism-invariant ordering of colour classes. Colours come
//! from iterated degree refinement. The search fixes positions left to
//! right, so column `k` depends only on the first `k + 1` positions and any
//! prefix already larger than the best string is cut. Interchangeable twins
//! (equal neighbourhoods apart from each other) are tried once per node.

use std::fmt;

use crate::graph::{BitIter, Graph, Row, MAX_ORDER};
use crate::graph6;

/// Canonical representative of an isomorphism class.
///
/// Ordering is by order, then by bit string, which is also the lexicographic
/// order of the corresponding graph6 strings at equal order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    order: u8,
    /// Column-major upper triangle, first pair in the most significant of the
    /// `order * (order - 1) / 2` used bits.
    bits: u128,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.order as usize
    }

    /// The canonically labelled graph.
    pub fn to_graph(&self) -> Graph {
        let n = self.order();
        let len = n * n.saturating_sub(1) / 2;
        let mut mask = 0u128;
        for k in 0..len {
            if self.bits >> (len - 1 - k) & 1 == 1 {
                mask |= 1 << k;
            }
        }
        Graph::from_upper_mask(n, mask).expect("canonical order is in range")
    }

    pub fn graph6(&self) -> String {
        graph6::encode(&self.to_graph())
    }

    /// Byte-string form: the graph6 encoding of the canonical labelling.
    pub fn to_bytes(&self) -> Vec<u8> {
        self.graph6().into_bytes()
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.graph6())
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.graph6())
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    CanonicalSearch::new(g).run()
}

/// Canonically relabelled copy of `g`.
pub fn canonical_graph(g: &Graph) -> Graph {
    canonical_form(g).to_graph()
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.order() == h.order()
        && g.edge_count() == h.edge_count()
        && canonical_form(g) == canonical_form(h)
}

/// Stable colour classes by iterated degree refinement. Colour values are
/// ranks of sorted signatures, so they do not depend on the labelling.
fn refine_colours(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut colours: Vec<usize> = g.degrees();
    let mut classes = rank_in_place(&mut colours);
    loop {
        let mut sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut around: Vec<usize> = BitIter(g.neighbors(v)).map(|u| colours[u]).collect();
                around.sort_unstable();
                (colours[v], around)
            })
            .collect();
        let mut sorted = sigs.clone();
        sorted.sort();
        sorted.dedup();
        let next: Vec<usize> = sigs
            .iter_mut()
            .map(|s| sorted.binary_search(s).expect("present"))
            .collect();
        let next_classes = sorted.len();
        colours = next;
        if next_classes == classes {
            return colours;
        }
        classes = next_classes;
    }
}

fn rank_in_place(values: &mut [usize]) -> usize {
    let mut distinct = values.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    for v in values.iter_mut() {
        *v = distinct.binary_search(v).expect("present");
    }
    distinct.len()
}

struct CanonicalSearch<'a> {
    g: &'a Graph,
    n: usize,
    /// Vertices allowed at each position.
    cell_at: [Row; MAX_ORDER],
    /// `twins[v]`: vertices that can be swapped with `v` by an automorphism
    /// fixing everything else.
    twins: [Row; MAX_ORDER],
    perm: [usize; MAX_ORDER],
    columns: [Row; MAX_ORDER],
    best: Option<[Row; MAX_ORDER]>,
}

impl<'a> CanonicalSearch<'a> {
    fn new(g: &'a Graph) -> Self {
        let n = g.order();
        let colours = refine_colours(g);
        let mut by_colour: Vec<usize> = (0..n).collect();
        by_colour.sort_by_key(|&v| colours[v]);
        let mut cell_at = [0; MAX_ORDER];
        for (pos, &v) in by_colour.iter().enumerate() {
            cell_at[pos] = (0..n)
                .filter(|&u| colours[u] == colours[v])
                .fold(0, |m, u| m | 1 << u);
        }
        let mut twins = [0; MAX_ORDER];
        for v in 0..n {
            for u in 0..n {
                if u != v && colours[u] == colours[v] {
                    let nu = g.neighbors(u) & !(1 << v);
                    let nv = g.neighbors(v) & !(1 << u);
                    if nu == nv {
                        twins[v] |= 1 << u;
                    }
                }
            }
        }
        CanonicalSearch {
            g,
            n,
            cell_at,
            twins,
            perm: [0; MAX_ORDER],
            columns: [0; MAX_ORDER],
            best: None,
        }
    }

    fn run(mut self) -> CanonicalForm {
        if self.n > 0 {
            self.descend(0, 0);
        }
        let best = self.best.unwrap_or([0; MAX_ORDER]);
        let mut bits = 0u128;
        for (k, &col) in best.iter().enumerate().take(self.n).skip(1) {
            bits = bits << k | col as u128;
        }
        CanonicalForm {
            order: self.n as u8,
            bits,
        }
    }

    /// Orders the current prefix `columns[..depth]` followed by `col`
    /// against the same prefix of the best string found so far.
    fn compare_prefix(&self, depth: usize, col: Row) -> std::cmp::Ordering {
        let Some(best) = &self.best else {
            return std::cmp::Ordering::Less;
        };
        self.columns[1..depth]
            .iter()
            .chain(std::iter::once(&col))
            .cmp(best[1..=depth].iter())
    }

    fn descend(&mut self, depth: usize, used: Row) {
        if depth == self.n {
            if self
                .best
                .is_none_or(|best| self.columns[..self.n] < best[..self.n])
            {
                self.best = Some(self.columns);
            }
            return;
        }
        let mut tried: Row = 0;
        for v in BitIter(self.cell_at[depth] & !used) {
            if tried >> v & 1 == 1 {
                continue;
            }
            // Unused twins of v lead to identical subtrees.
            tried |= (1 << v) | (self.twins[v] & !used);

            let mut col: Row = 0;
            for i in 0..depth {
                col = col << 1 | self.g.has_edge(self.perm[i], v) as Row;
            }
            if depth > 0 && self.compare_prefix(depth, col) == std::cmp::Ordering::Greater {
                continue;
            }
            self.perm[depth] = v;
            self.columns[depth] = col;
            self.descend(depth + 1, used | 1 << v);
        }
    }
}
