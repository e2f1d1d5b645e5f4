//! Exact chromatic symmetric and quasisymmetric functions of glued graphs.
//!
//! Four independent routes to `X_G`: proper colourings ([`oracle`]),
//! forest triples and the forest-triple matrix ([`forest`]), and Hikita
//! tableaux ([`tableau`]). [`verify`] cross-checks them on exhaustive
//! families of small graphs.

pub mod error;
pub mod esym;
pub mod expr;
pub mod forest;
pub mod graph;
pub mod json;
pub mod oracle;
pub mod par;
pub mod tableau;
pub mod verify;
pub mod qalg;

pub use error::{Error, Result};
pub use par::Exec;

/// Cost guards for the exponential kernels.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest vertex count for the colouring oracle.
    pub oracle_vertices: usize,
    /// Largest `|G| + j - 1` for forest-triple enumeration.
    pub forest_vertices: usize,
    /// Largest `|G| + j - 1` for subgraph-triple enumeration.
    pub subgraph_vertices: usize,
    /// Largest box count for tableau enumeration.
    pub tableau_boxes: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            oracle_vertices: 9,
            forest_vertices: 12,
            subgraph_vertices: 9,
            tableau_boxes: 12,
        }
    }
}
