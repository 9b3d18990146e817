//! Constructions producing new structures from old ones.
//!
//! Each constructor validates its hypotheses first and fails with a named
//! error instead of returning an unchecked structure.

mod dual;
mod hopf;
mod prelie;
mod quasi;
mod rota;
mod tensor;
mod twist;

pub use dual::{dualize, dualize_hopf_module};
pub use hopf::{hopf_module_free, hopf_module_from_coqt, hopf_module_from_qt, FreeSpace, FreeVariant};
pub use prelie::{prelie_coalgebra, prelie_from_bialgebra, prelie_noninv};
pub use quasi::{delta_r, mu_sigma, validate_coqt_data, validate_qt_data};
pub use rota::{dendriform_from_qt, dendriform_from_rb, rota_baxter_from_r, DendriformVariant, Sign};
pub use tensor::{aug_tensor_product, check_delta_morphism, check_mu_comorphism, coaug_tensor_product};
pub use twist::{trivial_coproduct, trivial_product, yau_twist};

use crate::axioms::check_infbh_bialgebra;
use crate::error::{Error, Result};
use crate::exact::{endo_inverse, Endo, Matrix};
use crate::report::Report;
use crate::structures::Bialgebra;

/// Which tensor slot the trivial (co)product puts the twisted argument in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

fn require(r: Report) -> Result<()> {
    if r.passed() {
        Ok(())
    } else {
        Err(Error::precondition(r))
    }
}

fn require_bialgebra(b: &Bialgebra) -> Result<()> {
    let r = check_infbh_bialgebra(b);
    if r.passed() {
        Ok(())
    } else {
        Err(Error::NotBialgebra(Box::new(r)))
    }
}

fn inv(f: &Endo, name: &str) -> Result<Endo> {
    endo_inverse(f, name)
}

fn pow(f: &Endo, k: usize) -> Endo {
    (0..k).fold(Matrix::identity(f.rows()), |acc, _| acc.compose(f))
}

fn same_dim(what: &str, expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch(format!("{what}: expected dimension {expected}, found {found}")))
    }
}
