//! Certified zero-sum 6-flows on 5-regular multigraphs.
//!
//! The pipeline: find a [2,3]-factor whose components are cycles and cubic
//! graphs ([`factor`]), pair up its odd cycles by an acyclic T-join in the
//! quotient ([`tjoin`]), group the components into cycle-cubic trees
//! ([`cyclecubic`]), label each tree ([`labeling`]) and put -3 on every
//! remaining edge ([`solver`]).

pub mod cyclecubic;
pub mod factor;
pub mod format;
pub mod generate;
pub mod graph;
pub mod labeling;
pub mod oracle;
pub mod solver;
pub mod tjoin;
