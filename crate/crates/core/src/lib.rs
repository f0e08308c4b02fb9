//! Exact folding number, achromatic number and chromatic number of small
//! graphs, with replayable fold traces and colouring certificates.
//!
//! ```
//! use foldkit::{family::Family, coloring::psi, fold::sigma};
//!
//! let c9 = Family::cycle(9).generate().unwrap();
//! assert_eq!(psi(&c9).unwrap().value, 4);
//!
//! let w9 = Family::wheel(9).generate().unwrap();
//! assert_eq!(sigma(&w9).unwrap().sigma, 5);
//! ```

pub mod canon;
pub mod coloring;
pub mod enumerate;
pub mod error;
pub mod family;
pub mod fold;
pub mod graph;
pub mod io;
pub mod special;
pub mod verify;

pub use error::{Error, Result};
pub use graph::Graph;

/// Size limits for the exponential solvers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest graph handed to the fold-state search.
    pub sigma: usize,
    /// Largest graph handed to the achromatic solver.
    pub psi: usize,
    /// Largest graph handed to the chromatic solver.
    pub chi: usize,
    /// Largest state deduplicated by canonical key.
    pub canon: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            sigma: 9,
            psi: 10,
            chi: 16,
            canon: canon::DEFAULT_CANON_LIMIT,
        }
    }
}
