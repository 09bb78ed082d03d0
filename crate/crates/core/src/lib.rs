//! Atom-bond sum-connectivity (ABS) index of simple graphs, the graph
//! families that maximise it under a fixed chromatic number, independence
//! number, or pendant count, and exhaustive machinery to check those
//! characterisations on every connected graph of small order.
//!
//! ```
//! use abs_extremal::{abs_index, extremal::turan};
//!
//! let g = turan(5, 3).unwrap();
//! let expected = 4.0 * (2.0f64 / 3.0).sqrt() + 4.0 * (5.0f64 / 7.0).sqrt();
//! assert!((abs_index(&g) - expected).abs() < 1e-12);
//! ```

pub mod canonical;
pub mod extremal;
pub mod graph;
pub mod graph6;
pub mod index;
pub mod invariants;
pub mod search;

pub use canonical::{are_isomorphic, canonical_form, CanonicalForm};
pub use extremal::{
    AuditCase, AuditFamily, ExtremalError, FormulaAudit, PendantCase, TuranDecomposition,
};
pub use graph::{Edge, Graph, GraphError, MAX_ORDER};
pub use graph6::Graph6Error;
pub use index::{abs_index, edge_contributions, DomainError, EdgeContribution};
pub use invariants::{chromatic_number, independence_number, pendant_count, GraphInvariants};
pub use search::{
    Catalog, Constraint, ConstraintKind, SearchError, SearchOptions, SearchReport, Strategy,
    Theorem, Verdict,
};
