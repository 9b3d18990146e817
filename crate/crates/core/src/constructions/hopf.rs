use super::{delta_r, inv, mu_sigma, require, require_bialgebra, same_dim};
use crate::axioms::{check_left_comodule, check_left_module, commute, maps_commute};
use crate::error::{Error, Result};
use crate::exact::{BiForm, Elem2, Endo, Matrix, Scalar};
use crate::report::Report;
use crate::structures::{Algebra, Bialgebra, Coalgebra, HopfModule, LeftComodule, LeftModule};
use crate::ybe::{abhybe_residual, coabhybe_residual};

/// A space `V` with four commuting maps, tensored onto `A` to form `A ⊗ V`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeSpace {
    pub dim: usize,
    pub alpha: Endo,
    pub beta: Endo,
    pub psi: Endo,
    pub omega: Endo,
}

impl FreeSpace {
    pub fn trivial(dim: usize) -> Self {
        let id = Endo::identity(dim);
        FreeSpace { dim, alpha: id.clone(), beta: id.clone(), psi: id.clone(), omega: id }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FreeVariant {
    /// `γ = μ ⊗ β_V`, `ρ = Δ ⊗ ψ_V`.
    Plain,
    /// `ρ(a⊗v) = Δ(a) ⊗ ψ_V(v) + λ ω(a) ⊗ 1 ⊗ ψ_V(v)`.
    Unital,
    /// `γ(a⊗b⊗v) = ab ⊗ β_V(v) + λ ε(b)α(a) ⊗ β_V(v)`.
    Counital,
    /// Weight 0: `ρ(a⊗n) = Δ(a) ⊗ ψ_N(n) + ωα⁻¹(a)n₋₁ ⊗ 1 ⊗ n₀`, with the
    /// given coaction `N -> A ⊗ N`.
    ComoduleW0(Matrix),
    /// Weight 0: `γ(a⊗b⊗n) = ab ⊗ β_N(n) + ε(b)αω⁻¹(a₁) ⊗ a₂▷n`, with the
    /// given action `A ⊗ N -> N`.
    ModuleW0(Matrix),
}

/// Hopf module structure on `A ⊗ V` with maps `α ⊗ α_V`, `β ⊗ β_V`, `ψ ⊗ ψ_V`, `ω ⊗ ω_V`.
pub fn hopf_module_free(b: &Bialgebra, v: &FreeSpace, variant: &FreeVariant) -> Result<HopfModule> {
    let n = b.dim();
    require_bialgebra(b)?;
    for f in [&v.alpha, &v.beta, &v.psi, &v.omega] {
        same_dim("space map", v.dim, f.rows())?;
    }
    require(maps_commute(&[("alpha_V", &v.alpha), ("beta_V", &v.beta), ("psi_V", &v.psi), ("omega_V", &v.omega)]))?;
    let (al, be, ps, om) = (b.alpha(), b.beta(), b.psi(), b.omega());
    let d = n * v.dim;
    let iv = Matrix::identity(v.dim);
    let mut gamma = b.mu().kron(&v.beta);
    let mut rho = b.delta().kron(&v.psi);
    let zero_weight = || {
        if b.lambda.is_zero() {
            Ok(())
        } else {
            Err(Error::WeightMismatch { expected: "0".into(), found: b.lambda.to_string() })
        }
    };
    match variant {
        FreeVariant::Plain => {}
        FreeVariant::Unital => {
            let u = Matrix::column_vector(b.algebra.unit_or_err()?);
            rho = &rho + &Matrix::kron_all(&[om, &u, &v.psi]).scale(&b.lambda);
        }
        FreeVariant::Counital => {
            let e = Matrix::row_vector(b.coalgebra.counit_or_err()?);
            gamma = &gamma + &Matrix::kron_all(&[al, &e, &v.beta]).scale(&b.lambda);
        }
        FreeVariant::ComoduleW0(coaction) => {
            zero_weight()?;
            let u = Matrix::column_vector(b.algebra.unit_or_err()?);
            let ai = inv(al, "alpha")?;
            let comodule = LeftComodule { dim: v.dim, coaction: coaction.clone(), psi: v.psi.clone(), omega: v.omega.clone() };
            same_dim("coaction", n * v.dim, coaction.rows())?;
            require(check_left_comodule(&b.coalgebra, &comodule))?;
            let left = b.mu().compose(&om.compose(&ai).kron(&Matrix::identity(n)));
            let extra = Matrix::kron_all(&[&left, &u, &iv]).compose(&Matrix::identity(n).kron(coaction));
            rho = &rho + &extra;
        }
        FreeVariant::ModuleW0(action) => {
            zero_weight()?;
            let e = Matrix::row_vector(b.coalgebra.counit_or_err()?);
            let oi = inv(om, "omega")?;
            let module = LeftModule { dim: v.dim, action: action.clone(), alpha: v.alpha.clone(), beta: v.beta.clone() };
            same_dim("action", n * v.dim, action.cols())?;
            require(check_left_module(&b.algebra, &module))?;
            let extra = Matrix::chain(&[
                &al.compose(&oi).kron(action),
                &b.delta().kron(&iv),
                &Matrix::kron_all(&[&Matrix::identity(n), &e, &iv]),
            ]);
            gamma = &gamma + &extra;
        }
    }
    debug_assert_eq!(gamma.rows(), d);
    Ok(HopfModule {
        bialgebra: b.clone(),
        module: LeftModule { dim: d, action: gamma, alpha: al.kron(&v.alpha), beta: be.kron(&v.beta) },
        comodule: LeftComodule { dim: d, coaction: rho, psi: ps.kron(&v.psi), omega: om.kron(&v.omega) },
    })
}

/// Comodule structure from a quasitriangular element:
/// `ρ(m) = −α(r¹) ⊗ r² ▷ ψ_Mβ_M⁻¹(m)`, with the extra term `−λ 1 ⊗ ψ_M(m)` when `anti`.
///
/// The result lives over the bialgebra built from `r` by [`delta_r`].
#[allow(clippy::too_many_arguments)]
pub fn hopf_module_from_qt(
    alg: &Algebra,
    psi: &Endo,
    omega: &Endo,
    r: &Elem2,
    lambda: &Scalar,
    anti: bool,
    module: &LeftModule,
    psi_m: &Endo,
    omega_m: &Endo,
) -> Result<HopfModule> {
    let n = alg.dim();
    let b = delta_r(alg, psi, omega, r, lambda, anti)?;
    let ybe = abhybe_residual(alg, psi, omega, r, lambda, anti)?;
    if !ybe.is_solution {
        return Err(Error::NotQuasitriangular);
    }
    let dm = module.dim;
    same_dim("module action", n * dm, module.action.cols())?;
    same_dim("psi_M", dm, psi_m.rows())?;
    same_dim("omega_M", dm, omega_m.rows())?;
    require(check_left_module(alg, module))?;
    let bmi = inv(&module.beta, "beta_M")?;
    let g = &module.action;
    let mut pre = Report::new();
    pre.compare("(3.10a)", &psi_m.compose(g), &g.compose(&psi.kron(psi_m)), &[n, dm], &[dm]);
    commute(&mut pre, "(3.10b)", &module.beta, psi_m);
    pre.compare("(3.10c)", &omega_m.compose(g), &g.compose(&omega.kron(omega_m)), &[n, dm], &[dm]);
    pre.merge(maps_commute(&[("alpha_M", &module.alpha), ("beta_M", &module.beta), ("psi_M", psi_m), ("omega_M", omega_m)]));
    require(pre)?;
    let rc = Matrix::column_vector(r.coeffs());
    let mut rho = -&alg.alpha.kron(g).compose(&rc.kron(&psi_m.compose(&bmi)));
    if anti {
        let u = Matrix::column_vector(alg.unit.as_ref().expect("validated"));
        rho = &rho - &u.kron(psi_m).scale(lambda);
    }
    Ok(HopfModule {
        bialgebra: b,
        module: module.clone(),
        comodule: LeftComodule { dim: dm, coaction: rho, psi: psi_m.clone(), omega: omega_m.clone() },
    })
}

/// Module structure from a coquasitriangular form:
/// `γ(c ⊗ m) = −σ(ω(c), m₋₁) β_Mψ_M⁻¹(m₀)`, with the extra term `−λ ε(c)β_M(m)` when `anti`.
///
/// The result lives over the bialgebra built from `σ` by [`mu_sigma`].
#[allow(clippy::too_many_arguments)]
pub fn hopf_module_from_coqt(
    coalg: &Coalgebra,
    alpha: &Endo,
    beta: &Endo,
    sigma: &BiForm,
    lambda: &Scalar,
    anti: bool,
    comodule: &LeftComodule,
    alpha_m: &Endo,
    beta_m: &Endo,
) -> Result<HopfModule> {
    let n = coalg.dim();
    let b = mu_sigma(coalg, alpha, beta, sigma, lambda, anti)?;
    let ybe = coabhybe_residual(coalg, alpha, beta, sigma, lambda, anti)?;
    if !ybe.is_solution {
        return Err(Error::NotCoquasitriangular);
    }
    let dm = comodule.dim;
    same_dim("coaction", n * dm, comodule.coaction.rows())?;
    same_dim("alpha_M", dm, alpha_m.rows())?;
    same_dim("beta_M", dm, beta_m.rows())?;
    require(check_left_comodule(coalg, comodule))?;
    let pmi = inv(&comodule.psi, "psi_M")?;
    let rho = &comodule.coaction;
    let mut pre = Report::new();
    pre.compare("(3.27a)", &rho.compose(beta_m), &beta.kron(beta_m).compose(rho), &[dm], &[n, dm]);
    commute(&mut pre, "(3.27b)", beta_m, &comodule.psi);
    pre.compare("(3.27c)", &rho.compose(alpha_m), &alpha.kron(alpha_m).compose(rho), &[dm], &[n, dm]);
    pre.merge(maps_commute(&[("alpha_M", alpha_m), ("beta_M", beta_m), ("psi_M", &comodule.psi), ("omega_M", &comodule.omega)]));
    require(pre)?;
    let s = sigma.matrix();
    let pair = s.compose(&coalg.omega.kron(&Matrix::identity(n)));
    let mut gamma = -&pair.kron(&beta_m.compose(&pmi)).compose(&Matrix::identity(n).kron(rho));
    if anti {
        let e = Matrix::row_vector(coalg.counit.as_ref().expect("validated"));
        gamma = &gamma - &e.kron(beta_m).scale(lambda);
    }
    Ok(HopfModule {
        bialgebra: b,
        module: LeftModule { dim: dm, action: gamma, alpha: alpha_m.clone(), beta: beta_m.clone() },
        comodule: comodule.clone(),
    })
}
