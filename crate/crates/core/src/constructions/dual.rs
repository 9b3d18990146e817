use crate::exact::{Comul, Mul};
use crate::structures::{Algebra, Bialgebra, Coalgebra, HopfModule, LeftComodule, LeftModule};

/// The dual `(A*, Δ*, μ*, ω*, ψ*, β*, α*)` in the dual basis.
///
/// Products become coproducts and vice versa, unit and counit swap, and the
/// twisting maps are transposed with `α' = ωᵀ`, `β' = ψᵀ`, `ψ' = βᵀ`, `ω' = αᵀ`.
pub fn dualize(b: &Bialgebra) -> Bialgebra {
    let mul = Mul::from_matrix(b.delta().transpose()).expect("square dual");
    let comul = Comul::from_matrix(b.mu().transpose()).expect("square dual");
    Bialgebra {
        algebra: Algebra {
            mul,
            alpha: b.omega().transpose(),
            beta: b.psi().transpose(),
            unit: b.coalgebra.counit.clone(),
        },
        coalgebra: Coalgebra {
            comul,
            psi: b.beta().transpose(),
            omega: b.alpha().transpose(),
            counit: b.algebra.unit.clone(),
        },
        lambda: b.lambda.clone(),
    }
}

/// Dual Hopf module over the dual bialgebra: the coaction transposes to an
/// action and the action to a coaction, with the carrier maps transposed
/// the same way as in [`dualize`].
pub fn dualize_hopf_module(h: &HopfModule) -> HopfModule {
    let (m, c) = (&h.module, &h.comodule);
    HopfModule {
        bialgebra: dualize(&h.bialgebra),
        module: LeftModule {
            dim: m.dim,
            action: c.coaction.transpose(),
            alpha: c.omega.transpose(),
            beta: c.psi.transpose(),
        },
        comodule: LeftComodule {
            dim: m.dim,
            coaction: m.action.transpose(),
            psi: m.beta.transpose(),
            omega: m.alpha.transpose(),
        },
    }
}
