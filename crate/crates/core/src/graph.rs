//! Small simple graphs stored as one adjacency bit row per vertex.

use std::fmt;

use thiserror::Error;

/// Largest order a [`Graph`] can hold.
pub const MAX_ORDER: usize = 12;

/// Bit row type: one bit per vertex.
pub type Row = u16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("order {0} is outside the supported range 1..={MAX_ORDER}")]
    Order(usize),
    #[error("edge ({u}, {v}) has an endpoint outside 0..{order}")]
    EndpointOutOfRange { u: usize, v: usize, order: usize },
    #[error("vertex {vertex} is outside 0..{order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("edge ({u}, {v}) is a loop")]
    Loop { u: usize, v: usize },
    #[error("edge ({u}, {v}) is listed more than once")]
    DuplicateEdge { u: usize, v: usize },
    #[error("vertices {u} and {v} are already adjacent")]
    AlreadyAdjacent { u: usize, v: usize },
    #[error("({u}, {v}) is not an edge")]
    NotAnEdge { u: usize, v: usize },
    #[error("relabeling is not a permutation of 0..{order}")]
    BadPermutation { order: usize },
}

/// An undirected edge with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    /// Orders the endpoints. Loops are accepted here and rejected by the graph.
    pub fn new(a: usize, b: usize) -> Self {
        if a <= b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.u, self.v)
    }
}

/// Immutable simple graph of order at most [`MAX_ORDER`].
///
/// Row `v` holds the neighbourhood of `v`; bits beyond `order` and the
/// diagonal are always clear. The type is `Copy`, so "mutation" returns a
/// new value and the original is never touched.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Graph {
    order: u8,
    rows: [Row; MAX_ORDER],
}

impl Graph {
    /// Edgeless graph on `order` vertices.
    pub fn empty(order: usize) -> Result<Self, GraphError> {
        if order == 0 || order > MAX_ORDER {
            return Err(GraphError::Order(order));
        }
        Ok(Graph {
            order: order as u8,
            rows: [0; MAX_ORDER],
        })
    }

    /// Complete graph on `order` vertices.
    pub fn complete(order: usize) -> Result<Self, GraphError> {
        let mut g = Self::empty(order)?;
        let all = full_mask(order);
        for v in 0..order {
            g.rows[v] = all & !(1 << v);
        }
        Ok(g)
    }

    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Self::empty(order)?;
        for &(a, b) in edges {
            if a >= order || b >= order {
                return Err(GraphError::EndpointOutOfRange { u: a, v: b, order });
            }
            if a == b {
                return Err(GraphError::Loop { u: a, v: b });
            }
            if g.has_edge(a, b) {
                let e = Edge::new(a, b);
                return Err(GraphError::DuplicateEdge { u: e.u, v: e.v });
            }
            g.set(a, b);
        }
        g.debug_check();
        Ok(g)
    }

    /// Builds a graph from its upper-triangle bits in column-major order:
    /// bit `k` of `mask` is the `k`-th pair of the sequence
    /// (0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ...
    pub fn from_upper_mask(order: usize, mask: u128) -> Result<Self, GraphError> {
        let mut g = Self::empty(order)?;
        let mut k = 0;
        for j in 1..order {
            for i in 0..j {
                if mask >> k & 1 == 1 {
                    g.set(i, j);
                }
                k += 1;
            }
        }
        Ok(g)
    }

    /// Inverse of [`Graph::from_upper_mask`].
    pub fn upper_mask(&self) -> u128 {
        let mut mask = 0u128;
        let mut k = 0;
        for j in 1..self.order() {
            for i in 0..j {
                if self.has_edge(i, j) {
                    mask |= 1 << k;
                }
                k += 1;
            }
        }
        mask
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order as usize
    }

    pub fn edge_count(&self) -> usize {
        self.rows()
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Adjacency bit rows, one per vertex.
    #[inline]
    pub fn rows(&self) -> &[Row] {
        &self.rows[..self.order()]
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> Row {
        self.rows[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && v < self.order() && self.rows[u] >> v & 1 == 1
    }

    pub fn degree(&self, v: usize) -> Result<usize, GraphError> {
        self.check_vertex(v)?;
        Ok(self.rows[v].count_ones() as usize)
    }

    /// Degrees of all vertices, in vertex order.
    pub fn degrees(&self) -> Vec<usize> {
        self.rows()
            .iter()
            .map(|r| r.count_ones() as usize)
            .collect()
    }

    /// Number of edges sharing an endpoint with `e`, i.e. `d_u + d_v - 2`.
    pub fn edge_degree(&self, e: Edge) -> Result<usize, GraphError> {
        if !self.has_edge(e.u, e.v) {
            return Err(GraphError::NotAnEdge { u: e.u, v: e.v });
        }
        Ok(self.rows[e.u].count_ones() as usize + self.rows[e.v].count_ones() as usize - 2)
    }

    /// Edges in lexicographic `(u, v)` order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        (0..self.order()).flat_map(move |u| {
            let higher = self.rows[u] >> (u + 1);
            BitIter(higher).map(move |k| Edge::new(u, u + 1 + k))
        })
    }

    /// Returns `self + uv`; `self` is unchanged.
    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::Loop { u, v });
        }
        if self.has_edge(u, v) {
            let e = Edge::new(u, v);
            return Err(GraphError::AlreadyAdjacent { u: e.u, v: e.v });
        }
        let mut g = *self;
        g.set(u, v);
        g.debug_check();
        Ok(g)
    }

    /// Returns `self - uv`; `self` is unchanged.
    pub fn remove_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        if !self.has_edge(u, v) {
            return Err(GraphError::NotAnEdge { u, v });
        }
        let mut g = *self;
        g.rows[u] &= !(1 << v);
        g.rows[v] &= !(1 << u);
        Ok(g)
    }

    /// Adds a new vertex (index `order`) adjacent to every vertex in `neighbors`.
    pub fn extend(&self, neighbors: Row) -> Result<Graph, GraphError> {
        let n = self.order();
        if n + 1 > MAX_ORDER {
            return Err(GraphError::Order(n + 1));
        }
        if neighbors & !full_mask(n) != 0 {
            return Err(GraphError::VertexOutOfRange {
                vertex: (Row::BITS - 1 - neighbors.leading_zeros()) as usize,
                order: n,
            });
        }
        let mut g = *self;
        g.order += 1;
        g.rows[n] = neighbors;
        for u in BitIter(neighbors) {
            g.rows[u] |= 1 << n;
        }
        Ok(g)
    }

    /// Relabels vertices so that old vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph, GraphError> {
        let n = self.order();
        let mut seen: Row = 0;
        if perm.len() != n {
            return Err(GraphError::BadPermutation { order: n });
        }
        for &p in perm {
            if p >= n || seen >> p & 1 == 1 {
                return Err(GraphError::BadPermutation { order: n });
            }
            seen |= 1 << p;
        }
        let mut g = Graph {
            order: self.order,
            rows: [0; MAX_ORDER],
        };
        for e in self.edges() {
            g.set(perm[e.u], perm[e.v]);
        }
        Ok(g)
    }

    /// Single traversal from vertex 0. The one-vertex graph is connected.
    pub fn is_connected(&self) -> bool {
        let all = full_mask(self.order());
        let mut seen: Row = 1;
        let mut frontier: Row = 1;
        while frontier != 0 {
            let mut next: Row = 0;
            for v in BitIter(frontier) {
                next |= self.rows[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == all
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.order() {
            return Err(GraphError::VertexOutOfRange {
                vertex: v,
                order: self.order(),
            });
        }
        Ok(())
    }

    #[inline]
    fn set(&mut self, u: usize, v: usize) {
        self.rows[u] |= 1 << v;
        self.rows[v] |= 1 << u;
    }

    fn debug_check(&self) {
        debug_assert!((0..self.order()).all(|v| self.rows[v] >> v & 1 == 0));
        debug_assert!((0..self.order())
            .all(|u| (0..self.order()).all(|v| self.has_edge(u, v) == self.has_edge(v, u))));
        debug_assert!(self.rows[self.order()..].iter().all(|&r| r == 0));
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("order", &self.order)
            .field(
                "edges",
                &self.edges().map(|e| (e.u, e.v)).collect::<Vec<_>>(),
            )
            .finish()
    }
}

/// Mask with the low `n` bits set.
#[inline]
pub fn full_mask(n: usize) -> Row {
    if n >= Row::BITS as usize {
        Row::MAX
    } else {
        (1 << n) - 1
    }
}

/// Iterates the indices of set bits, lowest first.
#[derive(Debug, Clone, Copy)]
pub struct BitIter(pub Row);

impl Iterator for BitIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let k = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(k)
    }
}
