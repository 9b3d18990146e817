//! Exact verification of λ-infinitesimal BiHom-bialgebras and the structures
//! built from them: modules, Hopf modules, Yang–Baxter solutions, Rota–Baxter
//! operators, dendriform and pre-Lie (co)algebras.
//!
//! All arithmetic is over the rationals and every check is exhaustive on a
//! basis, so results are exact and deterministic.

pub mod axioms;
pub mod catalog;
pub mod constructions;
pub mod error;
pub mod exact;
pub mod model;
pub mod report;
pub mod structures;
pub mod ybe;

pub use error::{Error, Result};
pub use exact::{BiForm, Comul, Elem2, Elem3, Endo, Matrix, Mul, Scalar};
pub use report::{Report, Value, Violation};
