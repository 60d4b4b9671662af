//! Built-in fixtures: the small algebras, bialgebras, r-matrices and
//! quadratic algebras used throughout the test suites and the CLI.

use crate::algebra::{Algebra, BilinearForm};
use crate::bialgebra::{Bialgebra, Coalgebra};
use crate::matrix::Matrix;
use crate::scalar::{Field, Scalar};
use crate::tensor::Tensor2;
use crate::tensorconstruct::{quadratic_aa, LeibnizBialgebra, QuadraticAA};
use crate::{Error, Result};

/// Dim 2, e₁e₁ = e₂: the nontrivial commutative 2-dimensional case.
pub fn lambda2_1(field: Field) -> Algebra {
    let mut a = Algebra::zero(field, 2);
    a.set_product(0, 0, vec![field.zero(), field.one()]);
    a
}

/// The two-parameter dim-2 family; both parameters must be nonzero because
/// the table divides by each.
pub fn lambda2_2(a: Scalar, b: Scalar) -> Result<Algebra> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::BadParameter(
            "both parameters of Lambda2_2 must be nonzero".into(),
        ));
    }
    let field = a.field();
    if field != b.field() {
        return Err(Error::FieldMismatch(
            field.to_string(),
            b.field().to_string(),
        ));
    }
    let mut alg = Algebra::zero(field, 2);
    let a2_over_b = (a.clone() * a.clone()).div(&b)?;
    let b2_over_a = (b.clone() * b.clone()).div(&a)?;
    // e₁e₁ = −a e₁ − (a²/b) e₂
    alg.set_product(0, 0, vec![-a.clone(), -a2_over_b]);
    // e₁e₂ = e₂e₁ = b e₁ + a e₂
    alg.set_product(0, 1, vec![b.clone(), a.clone()]);
    alg.set_product(1, 0, vec![b.clone(), a]);
    // e₂e₂ = −(b²/a) e₁ − b e₂
    alg.set_product(1, 1, vec![-b2_over_a, -b]);
    Ok(alg)
}

/// Dim 3, e₁e₂ = e₃ = e₂e₂: noncommutative anti-Leibniz.
pub fn dim3_noncommutative(field: Field) -> Algebra {
    let mut a = Algebra::zero(field, 3);
    let e3 = vec![field.zero(), field.zero(), field.one()];
    a.set_product(0, 1, e3.clone());
    a.set_product(1, 1, e3);
    a
}

/// The three dimension-2 Leibniz algebra fixtures.
pub fn leibniz_l1(field: Field) -> Algebra {
    // [x₁,x₁] = x₂
    let mut a = Algebra::zero(field, 2);
    a.set_product(0, 0, vec![field.zero(), field.one()]);
    a
}

pub fn leibniz_l2(field: Field) -> Algebra {
    // [x₁,x₂] = −[x₂,x₁] = x₂
    let mut a = Algebra::zero(field, 2);
    a.set_product(0, 1, vec![field.zero(), field.one()]);
    a.set_product(1, 0, vec![field.zero(), -field.one()]);
    a
}

pub fn leibniz_l3(field: Field) -> Algebra {
    // [x₁,x₂] = x₁ = [x₂,x₂]
    let mut a = Algebra::zero(field, 2);
    a.set_product(0, 1, vec![field.one(), field.zero()]);
    a.set_product(1, 1, vec![field.one(), field.zero()]);
    a
}

/// Dim-2 anti-commutative anti-associative algebra: e₁e₁ = e₂
/// (off-diagonal reading over fields of characteristic ≠ 2).
pub fn aa_dim2(field: Field) -> Algebra {
    lambda2_1(field)
}

/// The quadratic structure on `aa_dim2`: ϖ(e₁,e₂) = ϖ(e₂,e₁) = 1.
pub fn aa2_quadratic(field: Field) -> QuadraticAA {
    let mut gram = Matrix::zero(field, 2, 2);
    gram.set(0, 1, field.one());
    gram.set(1, 0, field.one());
    quadratic_aa(aa_dim2(field), BilinearForm::new(gram))
        .expect("built-in quadratic fixture certifies")
}

/// The flagship dim-2 bialgebra: e₁e₁ = e₂ with Δ(e₁) = e₂⊗e₂.
pub fn lambda21_bialgebra(field: Field) -> Bialgebra {
    let mut coa = Coalgebra::zero(field, 2);
    coa.set_coproduct(0, &[(1, 1, field.one())]);
    Bialgebra::new(lambda2_1(field), coa)
}

/// Symmetric solution r = e₁⊗e₂ + e₂⊗e₁ on `lambda2_1`.
pub fn lambda21_symmetric_r(field: Field) -> (Algebra, Tensor2) {
    let mut r = Tensor2::zero(field, 2);
    r.set(0, 1, field.one());
    r.set(1, 0, field.one());
    (lambda2_1(field), r)
}

/// Dim-3 bialgebra: e₂e₂ = e₁ = e₃e₃ with Δ(e₂) = e₁⊗e₁.
pub fn dim3_quadratic_bialgebra(field: Field) -> Bialgebra {
    let mut a = Algebra::zero(field, 3);
    let e1 = vec![field.one(), field.zero(), field.zero()];
    a.set_product(1, 1, e1.clone());
    a.set_product(2, 2, e1);
    let mut coa = Coalgebra::zero(field, 3);
    coa.set_coproduct(1, &[(0, 0, field.one())]);
    Bialgebra::new(a, coa)
}

/// δ(x₁) = δ(x₂) = k(x₁⊗x₂ − x₂⊗x₁) on dim 2.
pub fn skew_delta_dim2(k: Scalar) -> Coalgebra {
    let field = k.field();
    let mut c = Coalgebra::zero(field, 2);
    for idx in 0..2 {
        c.set_coproduct(idx, &[(0, 1, k.clone()), (1, 0, -k.clone())]);
    }
    c
}

/// L₁ with δ(x₁) = k x₂⊗x₂.
pub fn leibniz_bialgebra_4d_i(k: Scalar) -> LeibnizBialgebra {
    let field = k.field();
    let mut coa = Coalgebra::zero(field, 2);
    coa.set_coproduct(0, &[(1, 1, k)]);
    LeibnizBialgebra {
        alg: leibniz_l1(field),
        coa,
    }
}

/// L₃ with the skew cobracket (the resolved reading of the second
/// 4-dimensional input; the other printed bracket fails the Leibniz law).
pub fn leibniz_bialgebra_4d_ii(k: Scalar) -> LeibnizBialgebra {
    let field = k.field();
    LeibnizBialgebra {
        alg: leibniz_l3(field),
        coa: skew_delta_dim2(k),
    }
}

/// Dim 3: [x₁,x₃] = x₁ + x₂, [x₃,x₃] = x₁;
/// δ(x₃) = k(x₁⊗x₁ + x₂⊗x₁) + l(x₁⊗x₂ + x₂⊗x₂).
pub fn leibniz_bialgebra_6d_i(k: Scalar, l: Scalar) -> LeibnizBialgebra {
    let field = k.field();
    let mut alg = Algebra::zero(field, 3);
    alg.set_product(0, 2, vec![field.one(), field.one(), field.zero()]);
    alg.set_product(2, 2, vec![field.one(), field.zero(), field.zero()]);
    let mut coa = Coalgebra::zero(field, 3);
    coa.set_coproduct(
        2,
        &[
            (0, 0, k.clone()),
            (1, 0, k),
            (0, 1, l.clone()),
            (1, 1, l),
        ],
    );
    LeibnizBialgebra { alg, coa }
}

/// Dim 3: [x₂,x₃] = x₂ = −[x₃,x₂], [x₃,x₃] = x₁;
/// δ(x₂) = k x₁⊗x₂, δ(x₃) = k x₁⊗x₁ − l x₁⊗x₂.
pub fn leibniz_bialgebra_6d_ii(k: Scalar, l: Scalar) -> LeibnizBialgebra {
    let field = k.field();
    let mut alg = Algebra::zero(field, 3);
    alg.set_product(1, 2, vec![field.zero(), field.one(), field.zero()]);
    alg.set_product(2, 1, vec![field.zero(), -field.one(), field.zero()]);
    alg.set_product(2, 2, vec![field.one(), field.zero(), field.zero()]);
    let mut coa = Coalgebra::zero(field, 3);
    coa.set_coproduct(1, &[(0, 1, k.clone())]);
    coa.set_coproduct(2, &[(0, 0, k), (0, 1, -l)]);
    LeibnizBialgebra { alg, coa }
}

/// Dim 3: [x₂,x₂] = x₁ = [x₃,x₃]; δ(x₂) = k x₁⊗x₁.
pub fn leibniz_bialgebra_6d_iii(k: Scalar) -> LeibnizBialgebra {
    let field = k.field();
    let mut alg = Algebra::zero(field, 3);
    alg.set_product(1, 1, vec![field.one(), field.zero(), field.zero()]);
    alg.set_product(2, 2, vec![field.one(), field.zero(), field.zero()]);
    let mut coa = Coalgebra::zero(field, 3);
    coa.set_coproduct(1, &[(0, 0, k)]);
    LeibnizBialgebra { alg, coa }
}

/// A named fixture as served by the CLI.
#[derive(Debug, Clone)]
pub enum Fixture {
    Algebra(Algebra),
    Bialgebra(Bialgebra),
    RMatrix { algebra: Algebra, r: Tensor2 },
    Quadratic(QuadraticAA),
    Leibniz(LeibnizBialgebra),
}

/// All fixture names, sorted.
pub fn list() -> Vec<&'static str> {
    vec![
        "Lambda2_1",
        "Lambda2_2",
        "aa2",
        "aa2-quadratic",
        "dim3-noncommutative",
        "dim3-quadratic-bialgebra",
        "lambda21-bialgebra",
        "lambda21-symmetric-r",
        "leibniz-L1",
        "leibniz-L2",
        "leibniz-L3",
        "leibniz-bialgebra-4d-i",
        "leibniz-bialgebra-4d-ii",
        "leibniz-bialgebra-6d-i",
        "leibniz-bialgebra-6d-ii",
        "leibniz-bialgebra-6d-iii",
    ]
}

/// Look up a fixture by name. `params` supplies the family parameters where
/// a fixture needs them (defaults to 1 for each missing parameter).
pub fn lookup(name: &str, field: Field, params: &[Scalar]) -> Result<Fixture> {
    let p = |i: usize| -> Scalar {
        params.get(i).cloned().unwrap_or_else(|| field.one())
    };
    Ok(match name {
        "Lambda2_1" => Fixture::Algebra(lambda2_1(field)),
        "Lambda2_2" => Fixture::Algebra(lambda2_2(p(0), p(1))?),
        "aa2" => Fixture::Algebra(aa_dim2(field)),
        "aa2-quadratic" => Fixture::Quadratic(aa2_quadratic(field)),
        "dim3-noncommutative" => Fixture::Algebra(dim3_noncommutative(field)),
        "dim3-quadratic-bialgebra" => Fixture::Bialgebra(dim3_quadratic_bialgebra(field)),
        "lambda21-bialgebra" => Fixture::Bialgebra(lambda21_bialgebra(field)),
        "lambda21-symmetric-r" => {
            let (algebra, r) = lambda21_symmetric_r(field);
            Fixture::RMatrix { algebra, r }
        }
        "leibniz-L1" => Fixture::Algebra(leibniz_l1(field)),
        "leibniz-L2" => Fixture::Algebra(leibniz_l2(field)),
        "leibniz-L3" => Fixture::Algebra(leibniz_l3(field)),
        "leibniz-bialgebra-4d-i" => Fixture::Leibniz(leibniz_bialgebra_4d_i(p(0))),
        "leibniz-bialgebra-4d-ii" => Fixture::Leibniz(leibniz_bialgebra_4d_ii(p(0))),
        "leibniz-bialgebra-6d-i" => Fixture::Leibniz(leibniz_bialgebra_6d_i(p(0), p(1))),
        "leibniz-bialgebra-6d-ii" => Fixture::Leibniz(leibniz_bialgebra_6d_ii(p(0), p(1))),
        "leibniz-bialgebra-6d-iii" => Fixture::Leibniz(leibniz_bialgebra_6d_iii(p(0))),
        other => return Err(Error::UnknownFixture(other.to_string())),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lambda22_rejects_zero_parameters() {
        assert!(matches!(
            lambda2_2(Field::Q.zero(), Field::Q.one()),
            Err(Error::BadParameter(_))
        ));
        assert!(matches!(
            lambda2_2(Field::Q.one(), Field::Q.zero()),
            Err(Error::BadParameter(_))
        ));
    }

    #[test]
    fn all_names_resolve() {
        for name in list() {
            lookup(name, Field::Q, &[]).unwrap();
        }
        assert!(matches!(
            lookup("nope", Field::Q, &[]),
            Err(Error::UnknownFixture(_))
        ));
    }

    #[test]
    fn lambda22_family_members_are_anti_leibniz() {
        for (a, b) in [(1i64, 1i64), (2, 3), (-1, 5), (7, -2)] {
            let alg = lambda2_2(Field::Q.from_i64(a), Field::Q.from_i64(b)).unwrap();
            assert!(crate::algebra::check_anti_leibniz(&alg).holds());
        }
    }
}
