//! Rota–Baxter operators: relative operators on bimodules, weighted operators
//! on the algebra itself, skew-quadratic structures, the two-way bridge with
//! factorizable r-matrices, operator-level solution criteria, and the induced
//! coproduct on a factorizable algebra.

use crate::algebra::{
    check_anti_leibniz, form_properties, is_homomorphism, Algebra, BilinearForm, LinearMap,
};
use crate::bialgebra::{check_bialgebra, Bialgebra, Coalgebra};
use crate::bimodule::{check_bimodule, dual_bimodule, semidirect_product, Bimodule};
use crate::matrix::{vec_add, vec_scale, Matrix};
use crate::report::{Clause, Report};
use crate::scalar::Scalar;
use crate::tensor::Tensor2;
use crate::yangbaxter::{classify_r, dual_product_r, sharp, tau_sharp, ybe_bracket};
use crate::{Error, Result};

/// Relative operator P : M → A (columns index the module basis):
/// P(m₁)P(m₂) = P(𝐥(P m₁)m₂ + 𝐫(P m₂)m₁) for all module basis pairs.
pub fn check_relative_rb(m: &Bimodule, p: &Matrix) -> Result<Report> {
    let rep = check_bimodule(m)?;
    if !rep.holds() {
        return Err(Error::PreconditionViolated(
            "check_relative_rb requires a certified bimodule".into(),
        ));
    }
    if p.rows != m.base.dim || p.cols != m.mdim {
        return Err(Error::DimensionMismatch(format!(
            "operator is {}x{}, expected {}x{}",
            p.rows, p.cols, m.base.dim, m.mdim
        )));
    }
    let mut report = Report::new("relative Rota-Baxter operator");
    let mut holds = true;
    let mut witness = None;
    'outer: for u in 0..m.mdim {
        for v in 0..m.mdim {
            let mu = crate::matrix::basis_vec(m.base.field, m.mdim, u);
            let mv = crate::matrix::basis_vec(m.base.field, m.mdim, v);
            let pu = p.mat_vec(&mu);
            let pv = p.mat_vec(&mv);
            let lhs = m.base.multiply(&pu, &pv);
            let arg = vec_add(&m.lact_of(&pu).mat_vec(&mv), &m.ract_of(&pv).mat_vec(&mu));
            if lhs != p.mat_vec(&arg) {
                holds = false;
                witness = Some(format!("module basis pair ({}, {})", u + 1, v + 1));
                break 'outer;
            }
        }
    }
    report.push(Clause::of(
        "relative operator identity (all module basis pairs)",
        holds,
        witness,
    ));
    Ok(report)
}

/// Weight-λ operator identity R(a₁)R(a₂) = R(Ra₁·a₂ + a₁·Ra₂ + λa₁a₂) on all
/// basis pairs.
pub fn check_rb_weight(alg: &Algebra, r: &Matrix, lambda: &Scalar) -> Report {
    let mut report = Report::new("weighted Rota-Baxter operator");
    let mut holds = true;
    let mut witness = None;
    'outer: for i in 0..alg.dim {
        for j in 0..alg.dim {
            let a1 = alg.basis_vec(i);
            let a2 = alg.basis_vec(j);
            let lhs = alg.multiply(&r.mat_vec(&a1), &r.mat_vec(&a2));
            if lhs != r.mat_vec(&descendent_value(alg, r, lambda, &a1, &a2)) {
                holds = false;
                witness = Some(format!("basis pair ({}, {})", i + 1, j + 1));
                break 'outer;
            }
        }
    }
    report.push(Clause::of(
        "weight identity (all basis pairs)",
        holds,
        witness,
    ));
    report
}

fn descendent_value(
    alg: &Algebra,
    r: &Matrix,
    lambda: &Scalar,
    a1: &[Scalar],
    a2: &[Scalar],
) -> Vec<Scalar> {
    let mut out = alg.multiply(&r.mat_vec(a1), a2);
    out = vec_add(&out, &alg.multiply(a1, &r.mat_vec(a2)));
    vec_add(&out, &vec_scale(lambda, &alg.multiply(a1, a2)))
}

/// The descendent product a₁·a₂ = Ra₁·a₂ + a₁·Ra₂ + λa₁a₂ as a new algebra on
/// the same space.
pub fn descendent_product(alg: &Algebra, r: &Matrix, lambda: &Scalar) -> Algebra {
    let mut out = Algebra::zero(alg.field, alg.dim);
    for i in 0..alg.dim {
        for j in 0..alg.dim {
            out.set_product(
                i,
                j,
                descendent_value(alg, r, lambda, &alg.basis_vec(i), &alg.basis_vec(j)),
            );
        }
    }
    out
}

/// A weight-λ operator together with a nondegenerate skew-symmetric invariant
/// form satisfying the adjointness relation
/// 𝔅(Ra₁, a₂) + 𝔅(a₁, Ra₂) + λ𝔅(a₁, a₂) = 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewQuadraticRB {
    pub algebra: Algebra,
    pub form: BilinearForm,
    pub rmat: Matrix,
    pub lambda: Scalar,
}

pub fn check_skew_quadratic(sq: &SkewQuadraticRB) -> Result<Report> {
    if !check_anti_leibniz(&sq.algebra).holds() {
        return Err(Error::PreconditionViolated(
            "check_skew_quadratic requires an anti-Leibniz algebra".into(),
        ));
    }
    let mut report = Report::new("skew-quadratic Rota-Baxter structure");
    let weight = check_rb_weight(&sq.algebra, &sq.rmat, &sq.lambda);
    report.push(Clause::of(
        "weight identity (all basis pairs)",
        weight.holds(),
        None,
    ));
    let props = form_properties(&sq.algebra, &sq.form);
    report.push(Clause::of("form is nondegenerate", props.nondegenerate, None));
    report.push(Clause::of(
        "form is skew-symmetric",
        props.skew_symmetric,
        None,
    ));
    report.push(Clause::of(
        "form is invariant (skew style)",
        props.invariant_skew_style,
        None,
    ));
    // Adjointness: RᵀG + GR + λG = 0 where G is the Gram matrix.
    let g = &sq.form.gram;
    let adj = sq
        .rmat
        .transpose()
        .mul(g)
        .add(&g.mul(&sq.rmat))
        .add(&g.scale(&sq.lambda));
    report.push(Clause::of("adjointness relation", adj.is_zero(), None));
    Ok(report)
}

/// (A, ·, 𝔅, R) ↦ (A, ·, −𝔅, −(λ·id + R)); applying it twice is the identity.
pub fn rb_involution(sq: &SkewQuadraticRB) -> SkewQuadraticRB {
    let n = sq.algebra.dim;
    let shifted = Matrix::identity(sq.algebra.field, n)
        .scale(&sq.lambda)
        .add(&sq.rmat)
        .neg();
    SkewQuadraticRB {
        algebra: sq.algebra.clone(),
        form: BilinearForm::new(sq.form.gram.clone().neg()),
        rmat: shifted,
        lambda: sq.lambda.clone(),
    }
}

/// Factorizable r ↦ skew-quadratic structure: the form has Gram matrix
/// (𝓘⁻¹)ᵀ and the operator is R = λ·τ(r)♯∘𝓘⁻¹ with 𝓘 = r♯ − τ(r)♯.
pub fn factorizable_to_rb(alg: &Algebra, r: &Tensor2, lambda: &Scalar) -> Result<SkewQuadraticRB> {
    if lambda.is_zero() {
        return Err(Error::ZeroWeight);
    }
    let cls = classify_r(alg, r)?;
    if !cls.factorizable {
        return Err(Error::NotFactorizable);
    }
    let iinv = cls.cal_i.matrix.invert()?;
    let gram = iinv.transpose();
    let rmat = cls.tau_sharp.matrix.mul(&iinv).scale(lambda);
    Ok(SkewQuadraticRB {
        algebra: alg.clone(),
        form: BilinearForm::new(gram),
        rmat,
        lambda: lambda.clone(),
    })
}

/// Skew-quadratic structure ↦ factorizable r: 𝓘 = (Gramᵀ)⁻¹ and
/// r♯ = (1/λ)(R + λ·id)∘𝓘.
pub fn rb_to_factorizable(sq: &SkewQuadraticRB) -> Result<(Algebra, Tensor2)> {
    if sq.lambda.is_zero() {
        return Err(Error::ZeroWeight);
    }
    let n = sq.algebra.dim;
    let cal_i = sq.form.gram.transpose().invert()?;
    let shifted = Matrix::identity(sq.algebra.field, n)
        .scale(&sq.lambda)
        .add(&sq.rmat);
    let sharp_mat = shifted.mul(&cal_i).scale(&sq.lambda.inv()?);
    let mut r = Tensor2::zero(sq.algebra.field, n);
    for i in 0..n {
        for j in 0..n {
            r.set(i, j, sharp_mat.get(j, i).clone());
        }
    }
    Ok((sq.algebra.clone(), r))
}

/// A relative operator P : M → A yields the symmetric solution
/// r = P̃ + τ(P̃) on the semidirect product A ⋉ M* (M* carrying the dual
/// actions), where P̃ places the matrix of P into the A ⊗ M* block.
pub fn relative_rb_to_semidirect_solution(
    m: &Bimodule,
    p: &Matrix,
) -> Result<(Algebra, Tensor2)> {
    if p.rows != m.base.dim || p.cols != m.mdim {
        return Err(Error::DimensionMismatch(format!(
            "operator is {}x{}, expected {}x{}",
            p.rows, p.cols, m.base.dim, m.mdim
        )));
    }
    let ambient = semidirect_product(&dual_bimodule(m));
    let n = m.base.dim;
    let mut ptilde = Tensor2::zero(m.base.field, n + m.mdim);
    for u in 0..n {
        for i in 0..m.mdim {
            ptilde.set(u, n + i, p.get(u, i).clone());
        }
    }
    let r = ptilde.add(&ptilde.tau());
    Ok((ambient, r))
}

/// Operator-level restatements of the bracket equation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SharpCriteria {
    pub is_solution: bool,
    /// τ(r)♯(ξ₁)·τ(r)♯(ξ₂) = τ(r)♯(𝐥*(r♯ξ₁)ξ₂ + (𝐥*−𝐫*)(τ(r)♯ξ₂)ξ₁); holds iff
    /// r is a solution, with no side condition.
    pub tau_sharp_identity: bool,
    /// r♯(ξ₁)·r♯(ξ₂) = r♯(𝐥*(r♯ξ₁)ξ₂ + (𝐥*−𝐫*)(r♯ξ₂)ξ₁ − 𝐥*((r♯−τ(r)♯)ξ₁)ξ₂);
    /// equivalent to being a solution when the skew part of r is invariant
    /// (None when that side condition fails).
    pub sharp_identity: Option<bool>,
}

pub fn sharp_rb_criteria(alg: &Algebra, r: &Tensor2) -> Result<SharpCriteria> {
    if !check_anti_leibniz(alg).holds() {
        return Err(Error::PreconditionViolated(
            "sharp_rb_criteria requires an anti-Leibniz algebra".into(),
        ));
    }
    let n = alg.dim;
    let s = sharp(r);
    let t = tau_sharp(r);
    let skew_invariant = crate::yangbaxter::is_invariant(alg, &r.sub(&r.tau()));
    let lstar = |v: &[Scalar]| alg.left_action(v).transpose();
    let rstar = |v: &[Scalar]| alg.right_action(v).transpose();

    let mut tau_sharp_identity = true;
    let mut sharp_identity = true;
    for i in 0..n {
        for j in 0..n {
            let xi1 = crate::matrix::basis_vec(alg.field, n, i);
            let xi2 = crate::matrix::basis_vec(alg.field, n, j);
            let s1 = s.apply(&xi1);
            let s2 = s.apply(&xi2);
            let t1 = t.apply(&xi1);
            let t2 = t.apply(&xi2);

            if tau_sharp_identity {
                let arg = vec_add(
                    &lstar(&s1).mat_vec(&xi2),
                    &lstar(&t2).sub(&rstar(&t2)).mat_vec(&xi1),
                );
                if alg.multiply(&t1, &t2) != t.apply(&arg) {
                    tau_sharp_identity = false;
                }
            }
            if sharp_identity {
                let mut arg = vec_add(
                    &lstar(&s1).mat_vec(&xi2),
                    &lstar(&s2).sub(&rstar(&s2)).mat_vec(&xi1),
                );
                let skew1 = crate::matrix::vec_sub(&s1, &t1);
                arg = crate::matrix::vec_sub(&arg, &lstar(&skew1).mat_vec(&xi2));
                if alg.multiply(&s1, &s2) != s.apply(&arg) {
                    sharp_identity = false;
                }
            }
        }
    }
    Ok(SharpCriteria {
        is_solution: ybe_bracket(alg, r).is_zero(),
        tau_sharp_identity,
        sharp_identity: if skew_invariant {
            Some(sharp_identity)
        } else {
            None
        },
    })
}

/// For a symmetric r and a nondegenerate form 𝔅 with matrix map φ(a) = 𝔅(a,·):
/// the operator R = r♯∘φ, whose weight-0 identity is equivalent to r being a
/// solution.
pub fn symmetric_r_operator(r: &Tensor2, form: &BilinearForm) -> Result<Matrix> {
    if !r.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    if !form.gram.invert().is_ok() {
        return Err(Error::PreconditionViolated(
            "symmetric_r_operator requires a nondegenerate form".into(),
        ));
    }
    Ok(sharp(r).matrix.mul(&form.gram.transpose()))
}

/// For a symmetric nondegenerate r: the form ω with Gram matrix ((cᵀ)⁻¹)ᵀ,
/// where c is the coefficient matrix of r.
pub fn omega_form(r: &Tensor2) -> Result<BilinearForm> {
    if !r.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let inv = r.coeff.transpose().invert()?;
    Ok(BilinearForm::new(inv.transpose()))
}

/// The cocycle identity
/// ω(a₂a₃, a₁) + ω(a₁a₃, a₂) − ω(a₃a₁, a₂) − ω(a₂a₁, a₃) = 0
/// on all basis triples; for ω = omega_form(r) it holds iff r is a solution.
pub fn omega_cocycle_holds(alg: &Algebra, omega: &BilinearForm) -> bool {
    let n = alg.dim;
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let a1 = alg.basis_vec(i);
                let a2 = alg.basis_vec(j);
                let a3 = alg.basis_vec(k);
                let lhs = omega.eval(&alg.multiply(&a2, &a3), &a1)
                    + omega.eval(&alg.multiply(&a1, &a3), &a2)
                    - omega.eval(&alg.multiply(&a3, &a1), &a2)
                    - omega.eval(&alg.multiply(&a2, &a1), &a3);
                if !lhs.is_zero() {
                    return false;
                }
            }
        }
    }
    true
}

/// The bialgebra a factorizable r induces through its operator 𝓘 = r♯ − τ(r)♯:
/// the descendent product of R = λ·τ(r)♯∘𝓘⁻¹ together with the coproduct
/// obtained by transporting A's product along 𝓘.
#[derive(Debug, Clone)]
pub struct DeltaIBialgebra {
    pub descendent: Algebra,
    pub rmat: Matrix,
    pub coproduct: Coalgebra,
    pub bialgebra: Bialgebra,
    pub report: Report,
}

pub fn delta_i_bialgebra(alg: &Algebra, r: &Tensor2, lambda: &Scalar) -> Result<DeltaIBialgebra> {
    if lambda.is_zero() {
        return Err(Error::ZeroWeight);
    }
    let cls = classify_r(alg, r)?;
    if !cls.factorizable {
        return Err(Error::NotFactorizable);
    }
    let n = alg.dim;
    let field = alg.field;
    let cal_i = &cls.cal_i.matrix;
    let iinv = cal_i.invert()?;
    let rmat = cls.tau_sharp.matrix.mul(&iinv).scale(lambda);
    let descendent = descendent_product(alg, &rmat, lambda);

    // ξ₁·ξ₂ = −(1/λ)𝓘⁻¹(𝓘ξ₁ · 𝓘ξ₂), recorded as a coproduct on A.
    let minus_inv_lambda = -lambda.inv()?;
    let mut coproduct = Coalgebra::zero(field, n);
    for i in 0..n {
        for j in 0..n {
            let fi = crate::matrix::basis_vec(field, n, i);
            let fj = crate::matrix::basis_vec(field, n, j);
            let prod = alg.multiply(&cal_i.mat_vec(&fi), &cal_i.mat_vec(&fj));
            let out = vec_scale(&minus_inv_lambda, &iinv.mat_vec(&prod));
            for (k, v) in out.iter().enumerate() {
                if !v.is_zero() {
                    let cur = coproduct.cc.get(k, i, j).clone();
                    coproduct.cc.set(k, i, j, cur + v.clone());
                }
            }
        }
    }

    let mut report = Report::new("operator-induced bialgebra of a factorizable r");
    let b = Bialgebra::new(descendent.clone(), coproduct.clone());
    report.push(Clause::of(
        "descendent product with transported coproduct is a bialgebra",
        check_bialgebra(&b)?.holds(),
        None,
    ));

    // φ = (1/λ)𝓘 as an algebra map from the dual product to the descendent.
    let phi = LinearMap::new(cal_i.scale(&lambda.inv()?));
    let dual = dual_product_r(alg, r);
    report.push(Clause::of(
        "scaled operator is an algebra homomorphism onto the descendent",
        is_homomorphism(&phi, &dual, &descendent),
        None,
    ));
    // φ as a coalgebra map from the dual of A's product to the transported
    // coproduct: (φ⊗φ)Δ*(f_k) = Δ_new(φ f_k).
    let mut coalg_homo = true;
    for k in 0..n {
        let mut dstar = Tensor2::zero(field, n);
        for i in 0..n {
            for j in 0..n {
                dstar.set(i, j, alg.sc.get(i, j, k).clone());
            }
        }
        let lhs = dstar.apply_pair(&phi.matrix, &phi.matrix);
        let img = phi.apply(&crate::matrix::basis_vec(field, n, k));
        let mut rhs = Tensor2::zero(field, n);
        for (t, c) in img.iter().enumerate() {
            if !c.is_zero() {
                rhs = rhs.add(&coproduct.delta_basis(t).scale(c));
            }
        }
        if lhs != rhs {
            coalg_homo = false;
            break;
        }
    }
    report.push(Clause::of(
        "scaled operator is a coalgebra homomorphism",
        coalg_homo,
        None,
    ));

    // The twin operator −λ·id − R is itself weight-λ and adjoint to the form
    // with Gram matrix (𝓘⁻¹)ᵀ.
    let twin = Matrix::identity(field, n)
        .scale(lambda)
        .add(&rmat)
        .neg();
    report.push(Clause::of(
        "twin operator satisfies the weight identity",
        check_rb_weight(alg, &twin, lambda).holds(),
        None,
    ));
    let gram = iinv.transpose();
    let adj = twin
        .transpose()
        .mul(&gram)
        .add(&gram.mul(&twin))
        .add(&gram.scale(lambda));
    report.push(Clause::of(
        "twin operator satisfies the adjointness relation",
        adj.is_zero(),
        None,
    ));

    Ok(DeltaIBialgebra {
        descendent,
        rmat,
        coproduct,
        bialgebra: b,
        report,
    })
}
