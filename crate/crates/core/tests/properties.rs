use infbh::axioms::*;
use infbh::catalog;
use infbh::constructions::*;
use infbh::exact::{BiForm, Comul, Elem2, Endo, Matrix, Mul, Scalar};
use infbh::model::Model;
use infbh::structures::*;
use infbh::ybe::*;
use proptest::prelude::*;

fn small() -> impl Strategy<Value = Scalar> {
    (-2i64..=2).prop_map(Scalar::from_int)
}

fn rational() -> impl Strategy<Value = Scalar> {
    (-20i64..=20, 1i64..=7).prop_map(|(p, q)| Scalar::ratio(p, q))
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(small(), rows * cols).prop_map(move |v| Matrix::from_fn(rows, cols, |i, j| v[i * cols + j].clone()))
}

/// A random (usually non-axiomatic) bialgebra record with identity maps.
fn plain_record(n: usize) -> impl Strategy<Value = Bialgebra> {
    (matrix(n, n * n), matrix(n * n, n), small()).prop_map(move |(m, d, l)| {
        Bialgebra::new(
            Algebra::plain(Mul::from_matrix(m).unwrap(), None),
            Coalgebra::plain(Comul::from_matrix(d).unwrap(), None),
            l,
        )
        .unwrap()
    })
}

fn premises_hold(b: &Bialgebra) -> bool {
    let r = check_infbh_bialgebra(b);
    r.violations.iter().all(|v| v.equation_id == "(12.4)" || v.equation_id.starts_with("(1."))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn scalar_text_round_trip(x in rational()) {
        prop_assert!(x.is_canonical());
        prop_assert_eq!(Scalar::parse(&x.to_string()).unwrap(), x);
    }

    #[test]
    fn scalar_ops_stay_canonical(a in rational(), b in rational()) {
        for v in [&a + &b, &a - &b, &a * &b] {
            prop_assert!(v.is_canonical());
        }
        if !b.is_zero() {
            prop_assert_eq!(&(&a * &b) * &b.recip().unwrap(), a);
        }
    }

    #[test]
    fn kron_is_functorial(f in matrix(2, 2), g in matrix(2, 3), h in matrix(2, 2), k in matrix(3, 2)) {
        prop_assert_eq!(f.kron(&g).compose(&h.kron(&k)), f.compose(&h).kron(&g.compose(&k)));
        prop_assert_eq!(f.compose(&h).transpose(), h.transpose().compose(&f.transpose()));
    }

    #[test]
    fn inverse_is_two_sided(f in matrix(3, 3)) {
        if let Some(g) = f.inverse() {
            prop_assert!(f.compose(&g).is_identity());
            prop_assert!(g.compose(&f).is_identity());
        }
    }

    #[test]
    fn derivation_coderivation_and_compatibility_agree(b in (1usize..=3).prop_flat_map(plain_record)) {
        let comp = check_compatibility(&b).passed();
        prop_assert_eq!(check_derivation(&b, &b.coalgebra.comul).passed(), comp);
        prop_assert_eq!(check_coderivation(&b, &b.algebra.mul).passed(), comp);
    }

    #[test]
    fn twisted_derivation_equivalence(which in 0usize..4, l in small()) {
        // Random twists of a weight-varied base; only records meeting the premises count.
        let sign = catalog::kz2_sign();
        let id = Endo::identity(2);
        let maps = [&id, &sign];
        let base = catalog::kz2();
        let base = Bialgebra { lambda: l, ..base };
        if let Ok(b) = yau_twist(&base, maps[which & 1], maps[(which >> 1) & 1], &sign, &id) {
            if premises_hold(&b) {
                let comp = check_compatibility(&b).passed();
                prop_assert_eq!(check_derivation(&b, &b.coalgebra.comul).passed(), comp);
                prop_assert_eq!(check_coderivation(&b, &b.algebra.mul).passed(), comp);
            }
        }
    }

    #[test]
    fn dualize_involution_on_records(b in (1usize..=3).prop_flat_map(plain_record)) {
        prop_assert_eq!(dualize(&dualize(&b)), b.clone());
        let d = dualize(&b);
        prop_assert_eq!(check_compatibility(&d).passed(), check_compatibility(&b).passed());
    }

    #[test]
    fn model_json_round_trip(b in (1usize..=3).prop_flat_map(plain_record), f in matrix(3, 3)) {
        let mut m = Model::from_bialgebra(&b);
        if b.dim() == 3 {
            m.alpha = Some(f);
        }
        let json = m.to_json();
        let back = Model::parse(&json).unwrap();
        prop_assert_eq!(&back, &m);
        prop_assert_eq!(back.to_json(), json);
    }

    #[test]
    fn ybe_residuals_correspond_under_duality(v in prop::collection::vec(small(), 4), l in small(), anti in any::<bool>()) {
        let alg = catalog::dual_numbers();
        let id = Endo::identity(2);
        let r = Elem2::from_coeffs(2, v);
        let y = abhybe_residual(&alg, &id, &id, &r, &l, anti).unwrap();
        let b = delta_r(&alg, &id, &id, &Elem2::zero(2), &l, false).unwrap();
        let d = dualize(&b);
        let c = coabhybe_residual(&d.coalgebra, d.alpha(), d.beta(), &BiForm::from_elem2(&r), &l, anti).unwrap();
        prop_assert_eq!(&y.residual, &c.residual);
        prop_assert_eq!(y.is_solution, c.is_solution);
        let dr = delta_r(&alg, &id, &id, &r, &l, anti).unwrap();
        let ms = mu_sigma(&d.coalgebra, d.alpha(), d.beta(), &BiForm::from_elem2(&r), &l, anti).unwrap();
        prop_assert_eq!(dualize(&dr), ms);
    }

    #[test]
    fn coboundary_matches_coassociativity(v in prop::collection::vec(small(), 4), l in small(), anti in any::<bool>()) {
        let alg = catalog::dual_numbers();
        let id = Endo::identity(2);
        let r = Elem2::from_coeffs(2, v);
        let cob = coboundary_check(&alg, &id, &id, &r, &l, anti).unwrap();
        let d = delta_r(&alg, &id, &id, &r, &l, anti).unwrap();
        prop_assert_eq!(cob.passed(), check_bihom_coalgebra(&d.coalgebra).with_id("(1.9)").next().is_none());
    }

    #[test]
    fn characterization_maps_coincide_at_weight_zero(v in prop::collection::vec(small(), 4)) {
        let alg = catalog::dual_numbers();
        let id = Endo::identity(2);
        let r = Elem2::from_coeffs(2, v);
        let z = Scalar::zero();
        let plain = delta_r(&alg, &id, &id, &r, &z, false).unwrap();
        let anti = delta_r(&alg, &id, &id, &r, &z, true).unwrap();
        prop_assert_eq!(plain.delta(), anti.delta());
    }
}

#[test]
fn trivial_constructions_close_for_every_weight() {
    let weights = [Scalar::from_int(-2), Scalar::from_int(-1), Scalar::zero(), Scalar::ratio(1, 2), Scalar::one()];
    let mut algebras = vec![catalog::dual_numbers(), catalog::kz2_algebra(), catalog::kz2_yau().algebra, catalog::null3_yau().algebra];
    algebras.extend((2..=3).map(|n| catalog::trunc_poly(n).algebra));
    let mut coalgebras = vec![catalog::divided_power(2), catalog::divided_power(3), catalog::null3_yau_dual().coalgebra];
    coalgebras.push(dualize(&catalog::kz2_yau()).coalgebra);
    for l in &weights {
        for alg in &algebras {
            let n = alg.dim();
            let (psi, omega) = if alg.alpha.is_identity() { (Endo::identity(n), Endo::identity(n)) } else { (alg.alpha.clone(), alg.beta.clone()) };
            for side in [Side::Left, Side::Right] {
                let b = trivial_coproduct(alg, &psi, &omega, l, side).unwrap();
                assert!(check_infbh_bialgebra(&b).passed(), "λ={l} {side:?}: {}", check_infbh_bialgebra(&b));
            }
        }
        for c in &coalgebras {
            if c.counit.is_none() {
                continue;
            }
            let (a, b) = (c.psi.clone(), c.omega.clone());
            for side in [Side::Left, Side::Right] {
                let bi = trivial_product(c, &a, &b, l, side).unwrap();
                assert!(check_infbh_bialgebra(&bi).passed(), "λ={l} {side:?}: {}", check_infbh_bialgebra(&bi));
            }
        }
    }
}

#[test]
fn grid_search_matches_a_sequential_scan() {
    let alg = catalog::dual_numbers();
    let id = Endo::identity(2);
    let coeffs = [Scalar::one(), Scalar::from_int(-1), Scalar::zero(), Scalar::one()];
    for l in [-1, 0, 1] {
        let l = Scalar::from_int(l);
        let found = grid_search_r(&alg, &id, &id, &l, false, &coeffs, false).unwrap();
        let scan: Vec<_> = grid_candidates(&alg, &id, &id, &coeffs, false)
            .unwrap()
            .into_iter()
            .filter(|r| abhybe_residual(&alg, &id, &id, r, &l, false).unwrap().is_solution)
            .collect();
        assert_eq!(found, scan);
    }
    let big: Vec<Scalar> = (0..40).map(Scalar::from_int).collect();
    let null = catalog::null3_yau();
    assert!(matches!(
        grid_search_r(&null.algebra, null.psi(), null.omega(), &Scalar::zero(), false, &big, false),
        Err(infbh::Error::SearchSpaceTooLarge { .. })
    ));
}

#[test]
fn hopf_module_free_rejects_nonzero_weight_for_weight_zero_variants() {
    let b = catalog::trivial_left();
    let v = FreeSpace::trivial(1);
    let co = Matrix::zeros(2, 1);
    assert!(matches!(hopf_module_free(&b, &v, &FreeVariant::ComoduleW0(co)), Err(infbh::Error::WeightMismatch { .. })));
}
