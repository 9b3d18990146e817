//! Exhaustive basis-level checks of the defining identities.
//!
//! Every identity between linear maps is compared column by column, so a
//! violation names the basis input it occurs at and carries both sides as
//! exact tensors.

use crate::exact::{basis, comul_apply, mul_apply, Comul, Elem2, Endo, Matrix, Mul, Scalar};
use crate::report::{Report, Value};
use crate::structures::*;

fn id(n: usize) -> Matrix {
    Matrix::identity(n)
}

fn col(v: &[Scalar]) -> Matrix {
    Matrix::column_vector(v)
}

fn row(v: &[Scalar]) -> Matrix {
    Matrix::row_vector(v)
}

/// Records whether `f ∘ g = g ∘ f`.
pub(crate) fn commute(r: &mut Report, eq: &str, f: &Endo, g: &Endo) {
    let n = f.rows();
    r.compare(eq, &f.compose(g), &g.compose(f), &[n], &[n]);
}

/// Pairwise commutation of named maps; violations are labelled `a/b`.
pub fn maps_commute(maps: &[(&str, &Endo)]) -> Report {
    let mut r = Report::new();
    for (i, (a, f)) in maps.iter().enumerate() {
        for (b, g) in &maps[i + 1..] {
            commute(&mut r, &format!("{a}/{b}"), f, g);
        }
    }
    r
}

/// `f ∘ μ = μ ∘ (f ⊗ f)`, labelled `eq`.
pub fn multiplicative(alg: &Algebra, f: &Endo, eq: &str) -> Report {
    let mut r = Report::new();
    mult_into(&mut r, eq, alg.mul_matrix(), f);
    r
}

fn mult_into(r: &mut Report, eq: &str, mu: &Matrix, f: &Endo) {
    let n = f.rows();
    r.compare(eq, &f.compose(mu), &mu.compose(&f.kron(f)), &[n, n], &[n]);
}

/// `(f ⊗ f) ∘ Δ = Δ ∘ f`, labelled `eq`.
pub fn comultiplicative(delta: &Matrix, f: &Endo, eq: &str) -> Report {
    let mut r = Report::new();
    comult_into(&mut r, eq, delta, f);
    r
}

fn comult_into(r: &mut Report, eq: &str, delta: &Matrix, f: &Endo) {
    let n = f.rows();
    r.compare(eq, &f.kron(f).compose(delta), &delta.compose(f), &[n], &[n, n]);
}

pub fn check_bihom_algebra(a: &Algebra) -> Report {
    let n = a.dim();
    let mu = a.mul_matrix();
    let (al, be) = (&a.alpha, &a.beta);
    let mut r = Report::new();
    commute(&mut r, "(1.2a)", al, be);
    mult_into(&mut r, "(1.2b)", mu, al);
    mult_into(&mut r, "(1.2c)", mu, be);
    let lhs = mu.compose(&al.kron(mu));
    let rhs = mu.compose(&mu.kron(be));
    r.compare("(1.3)", &lhs, &rhs, &[n, n, n], &[n]);
    if let Some(u) = &a.unit {
        r.compare_vectors("(1.5a)", &al.apply(u), u, &[n]);
        r.compare_vectors("(1.5b)", &be.apply(u), u, &[n]);
        r.compare("(1.5c)", &mu.compose(&id(n).kron(&col(u))), al, &[n], &[n]);
        r.compare("(1.5d)", &mu.compose(&col(u).kron(&id(n))), be, &[n], &[n]);
    }
    r
}

pub fn check_bihom_coalgebra(c: &Coalgebra) -> Report {
    let n = c.dim();
    let d = c.comul_matrix();
    let (ps, om) = (&c.psi, &c.omega);
    let mut r = Report::new();
    commute(&mut r, "(1.7a)", ps, om);
    comult_into(&mut r, "(1.7b)", d, ps);
    comult_into(&mut r, "(1.7c)", d, om);
    let lhs = d.kron(ps).compose(d);
    let rhs = om.kron(d).compose(d);
    r.compare("(1.9)", &lhs, &rhs, &[n], &[n, n, n]);
    if let Some(e) = &c.counit {
        let e = row(e);
        r.compare("(1.11a)", &e.compose(ps), &e, &[n], &[]);
        r.compare("(1.11b)", &e.compose(om), &e, &[n], &[]);
        r.compare("(1.11c)", &id(n).kron(&e).compose(d), om, &[n], &[n]);
        r.compare("(1.11d)", &e.kron(&id(n)).compose(d), ps, &[n], &[n]);
    }
    r
}

/// Right-hand side of the compatibility condition as a map `A ⊗ A -> A ⊗ A`:
/// `a ⊗ b ↦ ω(a)b₁ ⊗ β(b₂) + α(a₁) ⊗ a₂ψ(b) + λ αω(a) ⊗ βψ(b)`.
pub fn leibniz_rhs(alg: &Algebra, delta: &Matrix, psi: &Endo, omega: &Endo, lambda: &Scalar) -> Matrix {
    let mu = alg.mul_matrix();
    let (al, be) = (&alg.alpha, &alg.beta);
    let t1 = mu.kron(be).compose(&omega.kron(delta));
    let t2 = al.kron(mu).compose(&delta.kron(psi));
    let t3 = al.compose(omega).kron(&be.compose(psi)).scale(lambda);
    &(&t1 + &t2) + &t3
}

/// Only the compatibility condition `Δ(ab) = ...` between μ and Δ.
pub fn check_compatibility(b: &Bialgebra) -> Report {
    let n = b.dim();
    let lhs = b.delta().compose(b.mu());
    let rhs = leibniz_rhs(&b.algebra, b.delta(), b.psi(), b.omega(), &b.lambda);
    let mut r = Report::new();
    r.compare("(12.4)", &lhs, &rhs, &[n, n], &[n, n]);
    r
}

pub fn check_infbh_bialgebra(b: &Bialgebra) -> Report {
    let n = b.dim();
    let mut r = check_bihom_algebra(&b.algebra);
    r.merge(check_bihom_coalgebra(&b.coalgebra));
    let (al, be, ps, om) = (b.alpha(), b.beta(), b.psi(), b.omega());
    commute(&mut r, "(12.1a)", al, ps);
    commute(&mut r, "(12.1b)", al, om);
    commute(&mut r, "(12.1c)", be, ps);
    commute(&mut r, "(12.1d)", be, om);
    comult_into(&mut r, "(12.2a)", b.delta(), al);
    comult_into(&mut r, "(12.2b)", b.delta(), be);
    mult_into(&mut r, "(12.3a)", b.mu(), ps);
    mult_into(&mut r, "(12.3b)", b.mu(), om);
    r.merge(check_compatibility(b));
    if let Some(u) = &b.algebra.unit {
        r.compare_vectors("(12.30a)", &ps.apply(u), u, &[n]);
        r.compare_vectors("(12.30b)", &om.apply(u), u, &[n]);
        let du = b.delta().apply(u);
        let uu = col(u).kron(&col(u)).scale(&-&b.lambda);
        r.compare_vectors("(L2.11a)", &du, uu.entries(), &[n, n]);
    }
    if let Some(e) = &b.coalgebra.counit {
        let e = row(e);
        r.compare("(12.31a)", &e.compose(al), &e, &[n], &[]);
        r.compare("(12.31b)", &e.compose(be), &e, &[n], &[]);
        let ee = e.kron(&e).scale(&-&b.lambda);
        r.compare("(L2.11b)", &e.compose(b.mu()), &ee, &[n, n], &[]);
    }
    r
}

/// Whether `δ` is a λ-BiHom-derivation of the algebra of `b` into `A ⊗ A`
/// with the bimodule structure `a ▷ (x ⊗ y) = ω(a)x ⊗ β(y)`, `(x ⊗ y) ◁ a = α(x) ⊗ yψ(a)`.
/// Evaluated element by element through the actions.
pub fn check_derivation(b: &Bialgebra, delta: &Comul) -> Report {
    let n = b.dim();
    let alg = &b.algebra;
    let mut r = Report::new();
    let dm = delta.matrix();
    for (eq, f) in [("(12.9a)", b.alpha()), ("(12.9b)", b.beta()), ("(12.9c)", b.psi()), ("(12.9d)", b.omega())] {
        comult_into(&mut r, eq, dm, f);
    }
    let aw = b.alpha().compose(b.omega());
    let bp = b.beta().compose(b.psi());
    for i in 0..n {
        let a = basis(n, i);
        let da = comul_apply(delta, &a);
        for j in 0..n {
            let bb = basis(n, j);
            let lhs = comul_apply(delta, &alg.product(&a, &bb));
            let t1 = act_pair_left(alg, b.omega(), &a, &comul_apply(delta, &bb));
            let t2 = act_pair_right(alg, b.psi(), &da, &bb);
            let t3 = Elem2::tensor(&aw.column(i), &bp.column(j));
            let rhs: Vec<Scalar> = (0..n * n)
                .map(|x| &(&t1.coeffs()[x] + &t2.coeffs()[x]) + &(&b.lambda * &t3.coeffs()[x]))
                .collect();
            if lhs.coeffs() != rhs.as_slice() {
                r.push(
                    "(12.10)",
                    vec![i, j],
                    Value::from_dense(lhs.coeffs(), &[n, n]),
                    Value::from_dense(&rhs, &[n, n]),
                );
            }
        }
    }
    r.sort();
    r
}

/// Whether `⋄` is a λ-BiHom-coderivation of the coalgebra of `b`.
/// Evaluated element by element from the structure constants.
pub fn check_coderivation(b: &Bialgebra, prod: &Mul) -> Report {
    let n = b.dim();
    let comul = &b.coalgebra.comul;
    let pm = prod.matrix();
    let mut r = Report::new();
    for (eq, f) in [("(12.11a)", b.alpha()), ("(12.11b)", b.beta()), ("(12.11c)", b.psi()), ("(12.11d)", b.omega())] {
        mult_into(&mut r, eq, pm, f);
    }
    let aw = b.alpha().compose(b.omega());
    let bp = b.beta().compose(b.psi());
    for i in 0..n {
        let c = basis(n, i);
        let wc = b.omega().apply(&c);
        let dc = comul_apply(comul, &c);
        for j in 0..n {
            let d = basis(n, j);
            let pd = b.psi().apply(&d);
            let dd = comul_apply(comul, &d);
            let lhs = comul_apply(comul, &mul_apply(prod, &c, &d));
            let mut rhs = Elem2::zero(n);
            for p in 0..n {
                for q in 0..n {
                    let x = dd.get(p, q);
                    if !x.is_zero() {
                        let left = mul_apply(prod, &wc, &basis(n, p));
                        accumulate(&mut rhs, x, &left, &b.beta().column(q));
                    }
                    let y = dc.get(p, q);
                    if !y.is_zero() {
                        let right = mul_apply(prod, &basis(n, q), &pd);
                        accumulate(&mut rhs, y, &b.alpha().column(p), &right);
                    }
                }
            }
            accumulate(&mut rhs, &b.lambda, &aw.column(i), &bp.column(j));
            if lhs != rhs {
                r.push(
                    "(12.12)",
                    vec![i, j],
                    Value::from_dense(lhs.coeffs(), &[n, n]),
                    Value::from_dense(rhs.coeffs(), &[n, n]),
                );
            }
        }
    }
    r.sort();
    r
}

fn accumulate(out: &mut Elem2, c: &Scalar, x: &[Scalar], y: &[Scalar]) {
    if c.is_zero() {
        return;
    }
    let t = Elem2::tensor(x, y);
    for p in 0..out.dim() {
        for q in 0..out.dim() {
            let v = t.get(p, q);
            if !v.is_zero() {
                let s = out.get(p, q) + &(c * v);
                out.set(p, q, s);
            }
        }
    }
}

pub fn check_left_module(alg: &Algebra, m: &LeftModule) -> Report {
    let (n, d) = (alg.dim(), m.dim);
    let g = &m.action;
    let mut r = Report::new();
    commute(&mut r, "(1.13a)", &m.alpha, &m.beta);
    r.compare("(1.13b)", &m.alpha.compose(g), &g.compose(&alg.alpha.kron(&m.alpha)), &[n, d], &[d]);
    r.compare("(1.13c)", &m.beta.compose(g), &g.compose(&alg.beta.kron(&m.beta)), &[n, d], &[d]);
    let lhs = g.compose(&alg.alpha.kron(g));
    let rhs = g.compose(&alg.mul_matrix().kron(&m.beta));
    r.compare("(1.15)", &lhs, &rhs, &[n, n, d], &[d]);
    r
}

pub fn check_right_module(alg: &Algebra, m: &RightModule) -> Report {
    let (n, d) = (alg.dim(), m.dim);
    let g = &m.action;
    let mut r = Report::new();
    commute(&mut r, "(R1.13a)", &m.alpha, &m.beta);
    r.compare("(R1.13b)", &m.alpha.compose(g), &g.compose(&m.alpha.kron(&alg.alpha)), &[d, n], &[d]);
    r.compare("(R1.13c)", &m.beta.compose(g), &g.compose(&m.beta.kron(&alg.beta)), &[d, n], &[d]);
    let lhs = g.compose(&g.kron(&alg.beta));
    let rhs = g.compose(&m.alpha.kron(alg.mul_matrix()));
    r.compare("(R1.15)", &lhs, &rhs, &[d, n, n], &[d]);
    r
}

fn bimodule_compat(r: &mut Report, alg: &Algebra, bm: &Bimodule) {
    let (n, d) = (alg.dim(), bm.dim);
    let lhs = bm.left.compose(&alg.alpha.kron(&bm.right));
    let rhs = bm.right.compose(&bm.left.kron(&alg.beta));
    r.compare("(1.16)", &lhs, &rhs, &[n, d, n], &[d]);
}

pub fn check_bimodule(alg: &Algebra, bm: &Bimodule) -> Report {
    let mut r = check_left_module(alg, &bm.left_module());
    r.merge(check_right_module(alg, &bm.right_module()));
    bimodule_compat(&mut r, alg, bm);
    r
}

pub fn check_left_comodule(coalg: &Coalgebra, m: &LeftComodule) -> Report {
    let (n, d) = (coalg.dim(), m.dim);
    let rho = &m.coaction;
    let mut r = Report::new();
    commute(&mut r, "(C1.13a)", &m.psi, &m.omega);
    r.compare("(C1.13b)", &coalg.psi.kron(&m.psi).compose(rho), &rho.compose(&m.psi), &[d], &[n, d]);
    r.compare("(C1.13c)", &coalg.omega.kron(&m.omega).compose(rho), &rho.compose(&m.omega), &[d], &[n, d]);
    let lhs = coalg.comul_matrix().kron(&m.psi).compose(rho);
    let rhs = coalg.omega.kron(rho).compose(rho);
    r.compare("(C1.15)", &lhs, &rhs, &[d], &[n, n, d]);
    r
}

pub fn check_right_comodule(coalg: &Coalgebra, m: &RightComodule) -> Report {
    let (n, d) = (coalg.dim(), m.dim);
    let phi = &m.coaction;
    let mut r = Report::new();
    commute(&mut r, "(RC1.13a)", &m.psi, &m.omega);
    r.compare("(RC1.13b)", &m.psi.kron(&coalg.psi).compose(phi), &phi.compose(&m.psi), &[d], &[d, n]);
    r.compare("(RC1.13c)", &m.omega.kron(&coalg.omega).compose(phi), &phi.compose(&m.omega), &[d], &[d, n]);
    let lhs = phi.kron(&coalg.psi).compose(phi);
    let rhs = m.omega.kron(coalg.comul_matrix()).compose(phi);
    r.compare("(RC1.15)", &lhs, &rhs, &[d], &[d, n, n]);
    r
}

pub fn check_hopf_module(h: &HopfModule) -> Report {
    let b = &h.bialgebra;
    let (n, d) = (b.dim(), h.dim());
    let (m, c) = (&h.module, &h.comodule);
    let mut r = check_left_module(&b.algebra, m);
    r.merge(check_left_comodule(&b.coalgebra, c));
    commute(&mut r, "(H-comm-a)", &m.alpha, &c.psi);
    commute(&mut r, "(H-comm-b)", &m.alpha, &c.omega);
    commute(&mut r, "(H-comm-c)", &m.beta, &c.psi);
    commute(&mut r, "(H-comm-d)", &m.beta, &c.omega);
    let (g, rho) = (&m.action, &c.coaction);
    let lhs = rho.compose(g);
    let t1 = b.mu().kron(&m.beta).compose(&b.omega().kron(rho));
    let t2 = b.alpha().kron(g).compose(&b.delta().kron(&c.psi));
    let t3 = b.alpha().compose(b.omega()).kron(&m.beta.compose(&c.psi)).scale(&b.lambda);
    let rhs = &(&t1 + &t2) + &t3;
    r.compare("(12.13)", &lhs, &rhs, &[n, d], &[n, d]);
    r
}

/// Left Hopf module, right Hopf module, bimodule, bicomodule, and the two
/// mixed action/coaction conditions.
pub fn check_hopf_bimodule(h: &HopfBimodule) -> Report {
    let b = &h.bialgebra;
    let alg = &b.algebra;
    let (n, d) = (b.dim(), h.dim());
    let bm = &h.bimodule;
    let mut r = check_hopf_module(&h.left_hopf_module());

    let right = h.right_comodule();
    r.merge(check_right_module(alg, &bm.right_module()));
    r.merge(check_right_comodule(&b.coalgebra, &right));
    let (nu, phi) = (&bm.right, &h.right_coaction);
    let lhs = phi.compose(nu);
    let t1 = nu.kron(b.beta()).compose(&h.omega.kron(b.delta()));
    let t2 = bm.alpha.kron(b.mu()).compose(&phi.kron(b.psi()));
    let t3 = bm.alpha.compose(&h.omega).kron(&b.beta().compose(b.psi())).scale(&b.lambda);
    let rhs = &(&t1 + &t2) + &t3;
    r.compare("(R12.13)", &lhs, &rhs, &[d, n], &[d, n]);

    bimodule_compat(&mut r, alg, bm);

    let rho = &h.left_coaction;
    let lhs = b.omega().kron(phi).compose(rho);
    let rhs = rho.kron(b.psi()).compose(phi);
    r.compare("(BC1.16)", &lhs, &rhs, &[d], &[n, d, n]);

    let gamma = &bm.left;
    let lhs = gamma.kron(b.beta()).compose(&b.omega().kron(phi));
    r.compare("(20.01)", &lhs, &phi.compose(gamma), &[n, d], &[d, n]);
    let lhs = b.alpha().kron(nu).compose(&rho.kron(b.psi()));
    r.compare("(20.02)", &lhs, &rho.compose(nu), &[d, n], &[n, d]);
    r
}

pub fn check_augmented(a: &Augmented) -> Report {
    let n = a.algebra.dim();
    let chi = row(&a.chi);
    let mut r = Report::new();
    r.compare("(D2.13a)", &chi.compose(&a.algebra.alpha), &chi, &[n], &[]);
    r.compare("(D2.13b)", &chi.compose(&a.algebra.beta), &chi, &[n], &[]);
    let rhs = chi.kron(&chi).scale(&-&a.lambda);
    r.compare("(12.5)", &chi.compose(a.algebra.mul_matrix()), &rhs, &[n, n], &[]);
    r
}

pub fn check_coaugmented(c: &Coaugmented) -> Report {
    let n = c.coalgebra.dim();
    let mut r = Report::new();
    r.compare_vectors("(D2.17a)", &c.coalgebra.omega.apply(&c.zeta), &c.zeta, &[n]);
    r.compare_vectors("(D2.17b)", &c.coalgebra.psi.apply(&c.zeta), &c.zeta, &[n]);
    let lhs = c.coalgebra.comul_matrix().apply(&c.zeta);
    let rhs = col(&c.zeta).kron(&col(&c.zeta)).scale(&-&c.lambda);
    r.compare_vectors("(12.42)", &lhs, rhs.entries(), &[n, n]);
    r
}

/// `R(a)R(b) = R(R(a)b + aR(b) + λab)` with `αR = Rα`, `βR = Rβ`.
pub fn check_rota_baxter(rb: &RotaBaxter) -> Report {
    let n = rb.algebra.dim();
    let mu = rb.algebra.mul_matrix();
    let op = &rb.operator;
    let mut r = Report::new();
    commute(&mut r, "(RB-alpha)", &rb.algebra.alpha, op);
    commute(&mut r, "(RB-beta)", &rb.algebra.beta, op);
    let lhs = mu.compose(&op.kron(op));
    let inner = &(&op.kron(&id(n)) + &id(n).kron(op)) + &id(n * n).scale(&rb.lambda);
    let rhs = op.compose(&mu.compose(&inner));
    r.compare("(RB)", &lhs, &rhs, &[n, n], &[n]);
    r
}

/// Checks that `≺ + ≻` is BiHom-associative with `α, β` multiplicative.
/// With `full`, also the three twisted dendriform relations and
/// multiplicativity of `α, β` for each of `≺`, `≻`.
pub fn check_dendriform(d: &Dendriform, full: bool) -> Report {
    let n = d.dim();
    let total = d.total();
    let mut r = Report::new();
    for mut v in check_bihom_algebra(&total).violations {
        v.equation_id = format!("sum{}", v.equation_id);
        r.violations.push(v);
    }
    r.sort();
    if !full {
        return r;
    }
    let (pr, su, tm) = (d.prec.matrix(), d.succ.matrix(), total.mul_matrix());
    let (al, be) = (&d.alpha, &d.beta);
    mult_into(&mut r, "(Dend-alpha-prec)", pr, al);
    mult_into(&mut r, "(Dend-alpha-succ)", su, al);
    mult_into(&mut r, "(Dend-beta-prec)", pr, be);
    mult_into(&mut r, "(Dend-beta-succ)", su, be);
    let sh = [n, n, n];
    r.compare("(Dend1)", &pr.compose(&pr.kron(be)), &pr.compose(&al.kron(tm)), &sh, &[n]);
    r.compare("(Dend2)", &pr.compose(&su.kron(be)), &su.compose(&al.kron(pr)), &sh, &[n]);
    r.compare("(Dend3)", &su.compose(&al.kron(su)), &su.compose(&tm.kron(be)), &sh, &[n]);
    r
}

/// The map `a ⊗ b ⊗ c ↦ αβ(a)(α(b)c) − (β(a)α(b))β(c)`.
pub fn prelie_associator(p: &PreLie) -> Matrix {
    let n = p.product.dim();
    let mu = p.product.matrix();
    let (al, be) = (&p.alpha, &p.beta);
    let i = id(n);
    let l = Matrix::chain(&[mu, &al.compose(be).kron(mu), &Matrix::kron_all(&[&i, al, &i])]);
    let r = Matrix::chain(&[mu, &mu.kron(be), &Matrix::kron_all(&[be, al, &i])]);
    &l - &r
}

pub fn check_prelie(p: &PreLie) -> Report {
    let n = p.product.dim();
    let mu = p.product.matrix();
    let mut r = Report::new();
    commute(&mut r, "(13.1a)", &p.alpha, &p.beta);
    mult_into(&mut r, "(13.1b)", mu, &p.alpha);
    mult_into(&mut r, "(13.1c)", mu, &p.beta);
    let f = prelie_associator(p);
    let swapped = f.compose(&Matrix::flip(n, n).kron(&id(n)));
    r.compare("(13.1)", &f, &swapped, &[n, n, n], &[n]);
    r
}

/// `c ↦ ωψ(c[1]) ⊗ ω(c[2][1]) ⊗ c[2][2] − ψ(c[1][1]) ⊗ ω(c[1][2]) ⊗ ψ(c[2])`.
pub fn prelie_coassociator(p: &PreLieCoalgebra) -> Matrix {
    let n = p.coproduct.dim();
    let d = p.coproduct.matrix();
    let (ps, om) = (&p.psi, &p.omega);
    let i = id(n);
    let l = Matrix::chain(&[&Matrix::kron_all(&[&om.compose(ps), om, &i]), &i.kron(d), d]);
    let r = Matrix::chain(&[&Matrix::kron_all(&[ps, om, ps]), &d.kron(&i), d]);
    &l - &r
}

pub fn check_prelie_coalgebra(p: &PreLieCoalgebra) -> Report {
    let n = p.coproduct.dim();
    let d = p.coproduct.matrix();
    let mut r = Report::new();
    commute(&mut r, "(C13.1a)", &p.psi, &p.omega);
    comult_into(&mut r, "(C13.1b)", d, &p.psi);
    comult_into(&mut r, "(C13.1c)", d, &p.omega);
    let f = prelie_coassociator(p);
    let swapped = Matrix::flip(n, n).kron(&id(n)).compose(&f);
    r.compare("(C13.1)", &f, &swapped, &[n], &[n, n, n]);
    r
}
