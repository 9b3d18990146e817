//! Associative BiHom Yang–Baxter equations and their dual forms.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::constructions::{delta_r, mu_sigma, validate_coqt_data, validate_qt_data};
use crate::error::{Error, Result};
use crate::exact::{endo_inverse, BiForm, Elem2, Elem3, Endo, Matrix, Scalar};
use crate::report::{Report, Value};
use crate::structures::{act_triple_left, act_triple_right, Algebra, Coalgebra};

/// Largest number of candidates [`grid_search_r`] will enumerate.
pub const SEARCH_LIMIT: u128 = 10_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YbeReport {
    /// For `r`: an element of `A^{⊗3}`. For `σ`: the value tensor indexed by `(c, d, e)`.
    pub residual: Elem3,
    pub is_solution: bool,
    /// Characterization identity id to whether it holds. Empty when the
    /// invariance or invertibility hypotheses fail.
    pub characterization: BTreeMap<String, bool>,
}

#[derive(Serialize)]
struct YbeJson<'a> {
    is_solution: bool,
    residual: Value,
    characterization: &'a BTreeMap<String, bool>,
}

impl Serialize for YbeReport {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let n = self.residual.dim();
        YbeJson {
            is_solution: self.is_solution,
            residual: Value::from_dense(self.residual.coeffs(), &[n, n, n]),
            characterization: &self.characterization,
        }
        .serialize(s)
    }
}

/// The four products of copies of `r` in `A^{⊗3}`, as linear maps on `r ⊗ r̄`
/// (or on `r` for `r13`).
struct Triples {
    n: usize,
    r12r23: Matrix,
    r13r12: Matrix,
    r23r13: Matrix,
    r13: Matrix,
    unit: Vec<Scalar>,
}

impl Triples {
    fn new(alg: &Algebra, psi: &Endo, omega: &Endo) -> Result<Self> {
        let n = alg.dim();
        let unit = alg.unit_or_err()?.clone();
        let (al, be, mu) = (&alg.alpha, &alg.beta, alg.mul_matrix());
        let id = Matrix::identity(n);
        // r ⊗ r̄ = r¹ ⊗ r² ⊗ r̄¹ ⊗ r̄² reordered to r¹ ⊗ r̄¹ ⊗ r̄² ⊗ r²
        let p = Matrix::permutation(&[n; 4], &[0, 2, 3, 1]);
        let r12r23 = Matrix::kron_all(&[al, mu, be]);
        let r13r12 =
            Matrix::kron_all(&[&mu.compose(&omega.kron(&id)), be, &al.compose(psi)]).compose(&p);
        let r23r13 =
            Matrix::kron_all(&[&be.compose(omega), al, &mu.compose(&id.kron(psi))]).compose(&p);
        let r13 = Matrix::kron_all(&[omega, &Matrix::column_vector(&unit), psi]);
        Ok(Triples { n, r12r23, r13r12, r23r13, r13, unit })
    }

    fn rr(r: &Elem2) -> Vec<Scalar> {
        let c = Matrix::column_vector(r.coeffs());
        c.kron(&c).entries().to_vec()
    }

    fn r12(&self, r: &Elem2) -> Elem3 {
        let c = Matrix::column_vector(r.coeffs());
        Elem3::from_coeffs(self.n, c.kron(&Matrix::column_vector(&self.unit)).entries().to_vec())
    }

    fn r23(&self, r: &Elem2) -> Elem3 {
        let c = Matrix::column_vector(r.coeffs());
        Elem3::from_coeffs(self.n, Matrix::column_vector(&self.unit).kron(&c).entries().to_vec())
    }

    fn all(&self, r: &Elem2) -> (Elem3, Elem3, Elem3, Elem3) {
        let rr = Self::rr(r);
        let e = |m: &Matrix, v: &[Scalar]| Elem3::from_coeffs(self.n, m.apply(v));
        (e(&self.r13r12, &rr), e(&self.r12r23, &rr), e(&self.r23r13, &rr), e(&self.r13, r.coeffs()))
    }

    /// `r13r12 − r12r23 + r23r13 − w r13`
    fn residual(&self, r: &Elem2, weight: &Scalar) -> Elem3 {
        let (a, b, c, d) = self.all(r);
        a.sub(&b).add(&c).sub(&d.scale(weight))
    }
}

/// `r13 r12`, `r12 r23`, `r23 r13`, `r13` in that order.
pub fn elem3_build(alg: &Algebra, psi: &Endo, omega: &Endo, r: &Elem2) -> Result<[Elem3; 4]> {
    let t = Triples::new(alg, psi, omega)?;
    let (a, b, c, d) = t.all(r);
    Ok([a, b, c, d])
}

fn effective_weight(lambda: &Scalar, anti: bool) -> Scalar {
    if anti {
        -lambda
    } else {
        lambda.clone()
    }
}

/// Residual of `r13r12 − r12r23 + r23r13 = λ r13` (with `−λ` when `anti`),
/// plus the coproduct characterizations when `r` is invariant.
pub fn abhybe_residual(alg: &Algebra, psi: &Endo, omega: &Endo, r: &Elem2, lambda: &Scalar, anti: bool) -> Result<YbeReport> {
    let t = Triples::new(alg, psi, omega)?;
    if r.dim() != t.n {
        return Err(Error::DimensionMismatch("r has the wrong dimension".into()));
    }
    let residual = t.residual(r, &effective_weight(lambda, anti));
    let is_solution = residual.is_zero();
    let mut characterization = BTreeMap::new();
    if validate_qt_data(alg, psi, omega, r).is_ok() {
        let (r13r12, _, r23r13, r13) = t.all(r);
        let r12 = t.r12(r);
        let r23 = t.r23(r);
        let rv = r.coeffs();
        for (anti_map, first, second) in [(false, "(14.8)", "(14.9)"), (true, "(14.28)", "(14.29)")] {
            let d = delta_r(alg, psi, omega, r, lambda, anti_map)?;
            let dm = d.delta();
            let left = Elem3::from_coeffs(t.n, dm.kron(psi).apply(rv));
            let right = Elem3::from_coeffs(t.n, omega.kron(dm).apply(rv));
            let (want_left, want_right) = if anti_map {
                (r23r13.add(&r23.add(&r13).scale(lambda)).scale(&Scalar::from_int(-1)), r13r12.clone())
            } else {
                (r23r13.scale(&Scalar::from_int(-1)), r13r12.sub(&r13.add(&r12).scale(lambda)))
            };
            characterization.insert(first.to_string(), left == want_left);
            characterization.insert(second.to_string(), right == want_right);
        }
    }
    Ok(YbeReport { residual, is_solution, characterization })
}

/// Compares `ωα⁻¹(a) ▷ X` with `X ◁ ψβ⁻¹(a)` for every basis element `a`, where
/// `X = r13r12 − r12r23 + r23r13 − λ r13` (`+ λ r13` when `anti`) and the
/// actions are `a ▷ (x⊗y⊗z) = ω(a)x ⊗ β(y) ⊗ β(z)`, `(x⊗y⊗z) ◁ a = α(x) ⊗ α(y) ⊗ zψ(a)`.
pub fn coboundary_check(alg: &Algebra, psi: &Endo, omega: &Endo, r: &Elem2, lambda: &Scalar, anti: bool) -> Result<Report> {
    validate_qt_data(alg, psi, omega, r)?;
    let n = alg.dim();
    let t = Triples::new(alg, psi, omega)?;
    let x = t.residual(r, &effective_weight(lambda, anti));
    let wa = omega.compose(&endo_inverse(&alg.alpha, "alpha")?);
    let pb = psi.compose(&endo_inverse(&alg.beta, "beta")?);
    let id = if anti { "(coboundary-anti)" } else { "(coboundary)" };
    let mut rep = Report::new();
    for a in 0..n {
        let lhs = act_triple_left(alg, omega, &wa.column(a), &x);
        let rhs = act_triple_right(alg, psi, &x, &pb.column(a));
        if lhs != rhs {
            rep.push(
                id,
                vec![a],
                Value::from_dense(lhs.coeffs(), &[n, n, n]),
                Value::from_dense(rhs.coeffs(), &[n, n, n]),
            );
        }
    }
    Ok(rep)
}

/// The pieces of the dual equation as functionals on `C^{⊗3}` (1 × n³ rows):
/// `σ(α(c₁),βω(e))σ(c₂,ψ(d))`, `σ(ω(c),d₁)σ(d₂,ψ(e))`,
/// `σ(ω(d),e₁)σ(αψ(c),β(e₂))`, `σ(α(c),β(e))ε(d)`.
struct CoTriples {
    t1: Matrix,
    t2: Matrix,
    t3: Matrix,
    t4: Matrix,
}

impl CoTriples {
    fn new(coalg: &Coalgebra, alpha: &Endo, beta: &Endo, sigma: &BiForm) -> Result<Self> {
        let n = coalg.dim();
        let eps = Matrix::row_vector(coalg.counit_or_err()?);
        let (ps, om, d) = (&coalg.psi, &coalg.omega, coalg.comul_matrix());
        let s = sigma.matrix();
        let id = Matrix::identity(n);
        let sf = |f: &Matrix, g: &Matrix| s.compose(&f.kron(g));
        let t1 = sf(alpha, &beta.compose(om))
            .kron(&sf(&id, ps))
            .compose(&Matrix::permutation(&[n; 4], &[0, 3, 1, 2]))
            .compose(&Matrix::kron_all(&[d, &id, &id]));
        let t2 = sf(om, &id).kron(&sf(&id, ps)).compose(&Matrix::kron_all(&[&id, d, &id]));
        let t3 = sf(om, &id)
            .kron(&sf(&alpha.compose(ps), beta))
            .compose(&Matrix::permutation(&[n; 4], &[1, 2, 0, 3]))
            .compose(&Matrix::kron_all(&[&id, &id, d]));
        let t4 = sf(alpha, beta).kron(&eps).compose(&Matrix::permutation(&[n; 3], &[0, 2, 1]));
        Ok(CoTriples { t1, t2, t3, t4 })
    }
}

/// Residual of the dual equation
/// `σ(α(c₁),βω(e))σ(c₂,ψ(d)) − σ(ω(c),d₁)σ(d₂,ψ(e)) + σ(ω(d),e₁)σ(αψ(c),β(e₂)) = λ σ(α(c),β(e))ε(d)`
/// (with `−λ` when `anti`), plus the product characterizations when `σ` is invariant.
pub fn coabhybe_residual(coalg: &Coalgebra, alpha: &Endo, beta: &Endo, sigma: &BiForm, lambda: &Scalar, anti: bool) -> Result<YbeReport> {
    let n = coalg.dim();
    if sigma.dim() != n {
        return Err(Error::DimensionMismatch("sigma has the wrong dimension".into()));
    }
    let t = CoTriples::new(coalg, alpha, beta, sigma)?;
    let w = effective_weight(lambda, anti);
    let res = &(&(&t.t1 - &t.t2) + &t.t3) - &t.t4.scale(&w);
    let residual = Elem3::from_coeffs(n, res.entries().to_vec());
    let is_solution = residual.is_zero();
    let mut characterization = BTreeMap::new();
    if validate_coqt_data(coalg, alpha, beta, sigma).is_ok() {
        let s = sigma.matrix();
        let eps = Matrix::row_vector(coalg.counit.as_ref().expect("validated"));
        let cd_e = s.kron(&eps);
        let c_de = eps.kron(s);
        for (anti_map, first, second) in [(false, "(01.06)", "(01.07)"), (true, "(01.10)", "(01.11)")] {
            let b = mu_sigma(coalg, alpha, beta, sigma, lambda, anti_map)?;
            let left = s.compose(&b.mu().kron(beta));
            let right = s.compose(&alpha.kron(b.mu()));
            let (want_left, want_right) = if anti_map {
                (&(-&t.t3) - &(&t.t4 + &c_de).scale(lambda), t.t1.clone())
            } else {
                (-&t.t3, &t.t1 - &(&t.t4 + &cd_e).scale(lambda))
            };
            characterization.insert(first.to_string(), left == want_left);
            characterization.insert(second.to_string(), right == want_right);
        }
    }
    Ok(YbeReport { residual, is_solution, characterization })
}

/// Number of worker threads, from `BIHOM_THREADS` when set.
fn thread_pool() -> Option<rayon::ThreadPool> {
    let n: usize = std::env::var("BIHOM_THREADS").ok()?.parse().ok()?;
    rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build().ok()
}

/// The coefficient list a search uses: sorted and deduplicated.
pub fn normalize_coeffs(coeffs: &[Scalar]) -> Vec<Scalar> {
    let mut c = coeffs.to_vec();
    c.sort();
    c.dedup();
    c
}

/// Decodes candidate number `k`: entry `m[i][j]` is digit `i*n + j` in base
/// `coeffs.len()`, most significant first.
pub fn candidate(n: usize, coeffs: &[Scalar], mut k: u128) -> Elem2 {
    let base = coeffs.len() as u128;
    let mut digits = vec![0usize; n * n];
    for d in digits.iter_mut().rev() {
        *d = (k % base) as usize;
        k /= base;
    }
    Elem2::from_coeffs(n, digits.into_iter().map(|d| coeffs[d].clone()).collect())
}

pub fn candidate_count(n: usize, coeffs: &[Scalar]) -> Option<u128> {
    (coeffs.len() as u128).checked_pow((n * n) as u32)
}

/// Every `r` with entries from `coeffs` that solves the equation of weight
/// `λ` (`−λ` when `anti`), in lexicographic order of the entries.
pub fn grid_search_r(
    alg: &Algebra,
    psi: &Endo,
    omega: &Endo,
    lambda: &Scalar,
    anti: bool,
    coeffs: &[Scalar],
    require_invariant: bool,
) -> Result<Vec<Elem2>> {
    let n = alg.dim();
    let coeffs = normalize_coeffs(coeffs);
    if coeffs.is_empty() {
        return Ok(vec![]);
    }
    let total = candidate_count(n, &coeffs).unwrap_or(u128::MAX);
    if total > SEARCH_LIMIT {
        return Err(Error::SearchSpaceTooLarge { candidates: total, limit: SEARCH_LIMIT });
    }
    let t = Triples::new(alg, psi, omega)?;
    let w = effective_weight(lambda, anti);
    let maps = [&alg.alpha, &alg.beta, psi, omega];
    let krons: Vec<Matrix> = maps.iter().map(|f| f.kron(f)).collect();
    let test = |k: u128| -> Option<Elem2> {
        let r = candidate(n, &coeffs, k);
        if require_invariant && krons.iter().any(|ff| ff.apply(r.coeffs()) != r.coeffs()) {
            return None;
        }
        t.residual(&r, &w).is_zero().then_some(r)
    };
    let run = || -> Vec<Elem2> { (0..total as u64).into_par_iter().filter_map(|k| test(k as u128)).collect() };
    Ok(match thread_pool() {
        Some(pool) => pool.install(run),
        None => run(),
    })
}

/// All candidates in search order, optionally restricted to invariant ones.
pub fn grid_candidates(alg: &Algebra, psi: &Endo, omega: &Endo, coeffs: &[Scalar], require_invariant: bool) -> Result<Vec<Elem2>> {
    let n = alg.dim();
    let coeffs = normalize_coeffs(coeffs);
    let total = candidate_count(n, &coeffs).unwrap_or(u128::MAX);
    if total > SEARCH_LIMIT {
        return Err(Error::SearchSpaceTooLarge { candidates: total, limit: SEARCH_LIMIT });
    }
    let maps = [&alg.alpha, &alg.beta, psi, omega];
    Ok((0..total)
        .map(|k| candidate(n, &coeffs, k))
        .filter(|r| !require_invariant || maps.iter().all(|f| f.kron(f).apply(r.coeffs()) == r.coeffs()))
        .collect())
}
