//! Complexity invariants of finite and periodic signed graphs.
//!
//! * [`graph`]: finite signed multigraphs, Laplacians, tree and torsion complexity.
//! * [`linalg`]: exact integer determinants, Smith normal form, ranks mod p.
//! * [`laurent`]: integer Laurent polynomials and matrices over them.
//! * [`periodic`]: `Z^d`-periodic graphs, Laplacian polynomials, finite quotients.
//! * [`mahler`]: Mahler measures and complexity growth experiments.
//! * [`links`]: plane graphs, medial link diagrams, Fox and Dehn colorings, braids.
//! * [`catalog`]: the worked examples used throughout the tests and the CLI.

pub mod catalog;
mod dsu;
pub mod error;
pub mod exec;
pub mod graph;
pub mod laurent;
pub mod linalg;
pub mod links;
pub mod mahler;
pub mod periodic;

pub use error::{Error, Result};
pub use exec::Exec;
pub use graph::{Edge, Sign, SignedGraph};
pub use laurent::{LaurentMatrix, LaurentPoly};
pub use linalg::{AbelianGroupStructure, IntMatrix};
