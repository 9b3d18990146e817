use super::{inv, pow, require_bialgebra};
use crate::error::Result;
use crate::exact::{Comul, Endo, Matrix, Mul};
use crate::structures::{Bialgebra, PreLie, PreLieCoalgebra};

/// `a ⋆ b = (f(b₁) g(a)) h(b₂)` as a matrix.
fn star(b: &Bialgebra, f: &Endo, g: &Endo, h: &Endo) -> Matrix {
    let n = b.dim();
    let id = Matrix::identity(n);
    Matrix::chain(&[
        b.mu(),
        &b.mu().kron(&id),
        &Matrix::kron_all(&[f, g, h]),
        &Matrix::permutation(&[n, n, n], &[1, 0, 2]),
        &id.kron(b.delta()),
    ])
}

/// `Δ⋆(c) = g(c₁₂) ⊗ f(c₁₁) h(c₂)` as a matrix.
fn costar(b: &Bialgebra, f: &Endo, g: &Endo, h: &Endo) -> Matrix {
    let n = b.dim();
    let id = Matrix::identity(n);
    Matrix::chain(&[
        &id.kron(b.mu()),
        &Matrix::permutation(&[n, n, n], &[1, 0, 2]),
        &Matrix::kron_all(&[f, g, h]),
        &b.delta().kron(&id),
        b.delta(),
    ])
}

/// `a ⋆ b = (α⁻²βω⁻¹(b₁) β⁻¹(a)) ψ⁻¹(b₂)` with maps `(α, β)`; all four maps must be invertible.
pub fn prelie_from_bialgebra(b: &Bialgebra) -> Result<PreLie> {
    require_bialgebra(b)?;
    let ai = inv(b.alpha(), "alpha")?;
    let bi = inv(b.beta(), "beta")?;
    let pi = inv(b.psi(), "psi")?;
    let oi = inv(b.omega(), "omega")?;
    let f = Matrix::chain(&[&pow(&ai, 2), b.beta(), &oi]);
    Ok(PreLie {
        product: Mul::from_matrix(star(b, &f, &bi, &pi))?,
        alpha: b.alpha().clone(),
        beta: b.beta().clone(),
    })
}

/// `a ⋆ b = (β²ψ(b₁) α(a)) α²βω(b₂)` with maps `(α²β, α²β²ψω)`; no invertibility needed.
pub fn prelie_noninv(b: &Bialgebra) -> Result<PreLie> {
    require_bialgebra(b)?;
    let (al, be, ps, om) = (b.alpha(), b.beta(), b.psi(), b.omega());
    let a2 = pow(al, 2);
    let f = pow(be, 2).compose(ps);
    let h = Matrix::chain(&[&a2, be, om]);
    Ok(PreLie {
        product: Mul::from_matrix(star(b, &f, al, &h))?,
        alpha: a2.compose(be),
        beta: Matrix::chain(&[&a2, &pow(be, 2), ps, om]),
    })
}

/// Invertible case: `Δ⋆(c) = ψ⁻¹(c₁₂) ⊗ α⁻¹ψω⁻²(c₁₁) β⁻¹(c₂)` with maps `(ψ, ω)`.
/// Otherwise: `Δ⋆(c) = ω(c₁₂) ⊗ βψ²(c₁₁) αψω²(c₂)` with maps `ψ ↦ αβψ²ω²`, `ω ↦ ψω²`.
pub fn prelie_coalgebra(b: &Bialgebra, noninv: bool) -> Result<PreLieCoalgebra> {
    require_bialgebra(b)?;
    let (al, be, ps, om) = (b.alpha(), b.beta(), b.psi(), b.omega());
    if noninv {
        let o2 = pow(om, 2);
        let f = be.compose(&pow(ps, 2));
        let h = Matrix::chain(&[al, ps, &o2]);
        return Ok(PreLieCoalgebra {
            coproduct: Comul::from_matrix(costar(b, &f, om, &h))?,
            psi: Matrix::chain(&[al, be, &pow(ps, 2), &o2]),
            omega: ps.compose(&o2),
        });
    }
    let ai = inv(al, "alpha")?;
    let bi = inv(be, "beta")?;
    let pi = inv(ps, "psi")?;
    let oi = inv(om, "omega")?;
    let f = Matrix::chain(&[&ai, ps, &pow(&oi, 2)]);
    Ok(PreLieCoalgebra {
        coproduct: Comul::from_matrix(costar(b, &f, &pi, &bi))?,
        psi: ps.clone(),
        omega: om.clone(),
    })
}
