//! Built-in example structures with their expected verification outcomes.

use std::collections::BTreeMap;

use crate::constructions::{dualize, trivial_coproduct, trivial_product, yau_twist, Side};
use crate::error::{Error, Result};
use crate::exact::{Comul, Elem2, Endo, Matrix, Mul, Scalar};
use crate::model::{Expectation, Kind, Model};
use crate::structures::{Algebra, Augmented, Bialgebra, Coalgebra, Coaugmented};

/// Fixed entries; `trunc-poly-N` is also accepted for any `N ≥ 1`.
pub const NAMES: [&str; 15] = [
    "dual-numbers",
    "kz2",
    "kz2-yau",
    "trunc-poly-2",
    "trunc-poly-3",
    "trivial-left",
    "trivial-right",
    "qt-one",
    "null3-yau",
    "null3-yau-dual",
    "cotrivial-left",
    "cotrivial-right",
    "divided-power-2",
    "aug-dual-numbers",
    "coaug-divided-power-2",
];

fn int(v: i64) -> Scalar {
    Scalar::from_int(v)
}

fn unit_vector(n: usize, i: usize) -> Vec<Scalar> {
    (0..n).map(|k| if k == i { Scalar::one() } else { Scalar::zero() }).collect()
}

/// `K[x]/(x²)` on the basis `1, x`.
pub fn dual_numbers() -> Algebra {
    let mul = Mul::from_fn(2, |i, j, k| if i + j == k { Scalar::one() } else { Scalar::zero() });
    Algebra::plain(mul, Some(unit_vector(2, 0)))
}

/// Group algebra of `Z/2` on the basis `1, g`.
pub fn kz2_algebra() -> Algebra {
    let mul = Mul::from_fn(2, |i, j, k| if (i + j) % 2 == k { Scalar::one() } else { Scalar::zero() });
    Algebra::plain(mul, Some(unit_vector(2, 0)))
}

/// `Δ(a) = −a ⊗ 1` on `K[Z/2]`, weight 1.
pub fn kz2() -> Bialgebra {
    let id = Endo::identity(2);
    trivial_coproduct(&kz2_algebra(), &id, &id, &Scalar::one(), Side::Left).expect("valid example")
}

/// `1 ↦ 1`, `g ↦ −g`.
pub fn kz2_sign() -> Endo {
    Matrix::from_fn(2, 2, |i, j| match (i, j) {
        (0, 0) => Scalar::one(),
        (1, 1) => int(-1),
        _ => Scalar::zero(),
    })
}

pub fn kz2_yau() -> Bialgebra {
    let f = kz2_sign();
    yau_twist(&kz2(), &f, &f, &f, &f).expect("valid twist")
}

/// `K[x]/(x^{N+1})` with `Δ(xⁿ) = Σ_{p=0}^{n} xᵖ ⊗ x^{n−p}`, counit `ε(xⁿ) = δ_{n0}` and weight −1.
///
/// The compatibility fails exactly when a product is truncated, so this is
/// the standard negative example.
pub fn trunc_poly(n_max: usize) -> Bialgebra {
    let n = n_max + 1;
    let mul = Mul::from_fn(n, |i, j, k| if i + j == k { Scalar::one() } else { Scalar::zero() });
    Bialgebra::new(Algebra::plain(mul, Some(unit_vector(n, 0))), divided_power(n_max), int(-1)).expect("same dims")
}

/// The divided-power coalgebra spanned by `1, x, …, x^N`.
pub fn divided_power(n_max: usize) -> Coalgebra {
    let n = n_max + 1;
    let comul = Comul::from_fn(n, |i, j, k| if j + k == i { Scalar::one() } else { Scalar::zero() });
    Coalgebra::plain(comul, Some(unit_vector(n, 0)))
}

pub fn trivial_left() -> Bialgebra {
    let id = Endo::identity(2);
    trivial_coproduct(&dual_numbers(), &id, &id, &Scalar::one(), Side::Left).expect("valid example")
}

pub fn trivial_right() -> Bialgebra {
    let id = Endo::identity(2);
    trivial_coproduct(&dual_numbers(), &id, &id, &Scalar::one(), Side::Right).expect("valid example")
}

/// `K⟨1, x, y⟩` with all products of `x, y` zero, `Δ(x) = x⊗x`, `Δ(y) = y⊗y`,
/// `Δ(1) = 0`, weight 0, twisted by the swap `x ↔ y` in all four slots.
pub fn null3_yau() -> Bialgebra {
    let mul = Mul::from_fn(3, |i, j, k| {
        let hit = (i == 0 && j == k) || (j == 0 && i == k && i != 0);
        if hit { Scalar::one() } else { Scalar::zero() }
    });
    let comul = Comul::from_fn(3, |i, j, k| if i != 0 && i == j && j == k { Scalar::one() } else { Scalar::zero() });
    let plain = Bialgebra::new(Algebra::plain(mul, Some(unit_vector(3, 0))), Coalgebra::plain(comul, None), Scalar::zero())
        .expect("same dims");
    let swap = Matrix::from_fn(3, 3, |i, j| if i == [0, 2, 1][j] { Scalar::one() } else { Scalar::zero() });
    yau_twist(&plain, &swap, &swap, &swap, &swap).expect("valid twist")
}

pub fn null3_yau_dual() -> Bialgebra {
    dualize(&null3_yau())
}

pub fn cotrivial_left() -> Bialgebra {
    let id = Endo::identity(3);
    trivial_product(&divided_power(2), &id, &id, &int(-1), Side::Left).expect("valid example")
}

pub fn cotrivial_right() -> Bialgebra {
    let id = Endo::identity(3);
    trivial_product(&divided_power(2), &id, &id, &int(-1), Side::Right).expect("valid example")
}

/// Dual numbers with `χ(1) = −1`, `χ(x) = 0`, weight 1.
pub fn aug_dual_numbers() -> Augmented {
    Augmented { algebra: dual_numbers(), chi: vec![int(-1), Scalar::zero()], lambda: Scalar::one() }
}

/// The divided-power coalgebra with `ζ = 1`, weight −1.
pub fn coaug_divided_power(n_max: usize) -> Coaugmented {
    Coaugmented { coalgebra: divided_power(n_max), zeta: unit_vector(n_max + 1, 0), lambda: int(-1) }
}

fn pass() -> Option<Expectation> {
    Some(Expectation { passed: true, violations: BTreeMap::new() })
}

fn trunc_poly_expectation(n_max: usize) -> Expectation {
    let pairs = (0..=n_max)
        .flat_map(|i| (0..=n_max).map(move |j| vec![i, j]))
        .filter(|p| p[0] + p[1] > n_max)
        .collect();
    Expectation { passed: false, violations: BTreeMap::from([("(12.4)".to_string(), pairs)]) }
}

fn trunc_poly_n(name: &str) -> Option<usize> {
    name.strip_prefix("trunc-poly-")?.parse().ok().filter(|n| *n >= 1)
}

/// Looks up a catalog entry by name.
pub fn get(name: &str) -> Result<Model> {
    let bi = |b: Bialgebra| Model::from_bialgebra(&b);
    let mut model = match name {
        "dual-numbers" => Model::from_algebra(&dual_numbers()),
        "kz2" => bi(kz2()),
        "kz2-yau" => bi(kz2_yau()),
        "trivial-left" => bi(trivial_left()),
        "trivial-right" => bi(trivial_right()),
        "qt-one" => {
            let mut m = Model::from_algebra(&dual_numbers());
            m.r = Some(Elem2::tensor(&unit_vector(2, 0), &unit_vector(2, 0)));
            m.lambda = Some(Scalar::one());
            m
        }
        "null3-yau" => bi(null3_yau()),
        "null3-yau-dual" => bi(null3_yau_dual()),
        "cotrivial-left" => bi(cotrivial_left()),
        "cotrivial-right" => bi(cotrivial_right()),
        "divided-power-2" => Model::from_coalgebra(&divided_power(2)),
        "aug-dual-numbers" => Model::from_augmented(&aug_dual_numbers()),
        "coaug-divided-power-2" => Model::from_coaugmented(&coaug_divided_power(2)),
        _ => match trunc_poly_n(name) {
            Some(n) => {
                let mut m = bi(trunc_poly(n));
                m.expect = Some(trunc_poly_expectation(n));
                m
            }
            None => return Err(Error::Invalid(format!("no catalog entry named {name:?}"))),
        },
    };
    if model.expect.is_none() {
        model.expect = pass();
    }
    model.name = Some(name.to_string());
    Ok(model)
}

/// Every fixed entry, in [`NAMES`] order.
pub fn all() -> Vec<Model> {
    NAMES.iter().map(|n| get(n).expect("catalog entry")).collect()
}

/// Bialgebra entries (everything declaring a coproduct and a product).
pub fn bialgebras() -> Vec<(String, Bialgebra)> {
    all()
        .into_iter()
        .filter(|m| m.kind == Some(Kind::Bialgebra))
        .map(|m| (m.name.clone().unwrap_or_default(), m.bialgebra().expect("bialgebra entry")))
        .collect()
}

/// Bialgebra entries expected to pass every check.
pub fn positive_bialgebras() -> Vec<(String, Bialgebra)> {
    bialgebras().into_iter().filter(|(name, _)| trunc_poly_n(name).is_none()).collect()
}
