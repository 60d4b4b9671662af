//! Bimodules over anti-Leibniz algebras, their duals, semidirect products,
//! matched pairs, crossed products, and the standard double with its pairing.

use crate::algebra::{check_anti_leibniz, Algebra, BilinearForm};
use crate::bialgebra::{dual_algebra, Coalgebra};
use crate::matrix::{vec_add, vec_is_zero, vec_zero, Matrix};
use crate::report::{Clause, Report};
use crate::scalar::Scalar;
use crate::{Error, Result};

/// Action data (𝐥, 𝐫) of an algebra on an m-dimensional space: one m×m matrix
/// per basis element of the base.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bimodule {
    pub base: Algebra,
    pub mdim: usize,
    pub lact: Vec<Matrix>,
    pub ract: Vec<Matrix>,
}

impl Bimodule {
    pub fn zero_actions(base: Algebra, mdim: usize) -> Bimodule {
        let z = Matrix::zero(base.field, mdim, mdim);
        let n = base.dim;
        Bimodule {
            base,
            mdim,
            lact: vec![z.clone(); n],
            ract: vec![z; n],
        }
    }

    /// 𝐥(x) for an arbitrary element x of the base.
    pub fn lact_of(&self, x: &[Scalar]) -> Matrix {
        combine(&self.lact, x, self.mdim, self.base.field)
    }

    /// 𝐫(x) for an arbitrary element x of the base.
    pub fn ract_of(&self, x: &[Scalar]) -> Matrix {
        combine(&self.ract, x, self.mdim, self.base.field)
    }
}

fn combine(
    mats: &[Matrix],
    x: &[Scalar],
    mdim: usize,
    field: crate::scalar::Field,
) -> Matrix {
    let mut m = Matrix::zero(field, mdim, mdim);
    for (i, c) in x.iter().enumerate() {
        if !c.is_zero() {
            m = m.add(&mats[i].scale(c));
        }
    }
    m
}

/// The three compatibility equations of an anti-Leibniz bimodule, checked on
/// all base basis pairs as matrix identities.
pub fn check_bimodule(m: &Bimodule) -> Result<Report> {
    if !check_anti_leibniz(&m.base).holds() {
        return Err(Error::PreconditionViolated(
            "check_bimodule requires an anti-Leibniz base algebra".into(),
        ));
    }
    Ok(bimodule_equations_report(m))
}

/// The raw three-equation report, without the base-algebra precondition. Used
/// internally by matched-pair checking where the base laws are separate clauses.
pub fn bimodule_equations_report(m: &Bimodule) -> Report {
    let mut rep = Report::new("anti-Leibniz bimodule");
    let a = &m.base;
    let mut eq = [
        Clause::pass("left action composition rule"),
        Clause::pass("mixed action composition rule"),
        Clause::pass("right action composition rule"),
    ];
    for i in 0..a.dim {
        for j in 0..a.dim {
            let prod = a.basis_product(i, j);
            let l12 = m.lact_of(&prod);
            let r12 = m.ract_of(&prod);
            let (l1, l2) = (&m.lact[i], &m.lact[j]);
            let (r1, r2) = (&m.ract[i], &m.ract[j]);
            let w = || format!("basis pair ({}, {})", i + 1, j + 1);
            // 𝐥(a₁a₂) + 𝐥(a₁)𝐥(a₂) + 𝐥(a₂)𝐥(a₁) = 0
            if eq[0].holds && !l12.add(&l1.mul(l2)).add(&l2.mul(l1)).is_zero() {
                eq[0] = Clause::fail("left action composition rule", w());
            }
            // 𝐥(a₁)𝐫(a₂) + 𝐫(a₂)𝐥(a₁) + 𝐫(a₁a₂) = 0
            if eq[1].holds && !l1.mul(r2).add(&r2.mul(l1)).add(&r12).is_zero() {
                eq[1] = Clause::fail("mixed action composition rule", w());
            }
            // 𝐫(a₁a₂) + 𝐫(a₂)𝐫(a₁) + 𝐥(a₁)𝐫(a₂) = 0
            if eq[2].holds && !r12.add(&r2.mul(r1)).add(&l1.mul(r2)).is_zero() {
                eq[2] = Clause::fail("right action composition rule", w());
            }
        }
    }
    for c in eq {
        rep.push(c);
    }
    rep
}

pub fn regular_bimodule(a: &Algebra) -> Result<Bimodule> {
    if !check_anti_leibniz(a).holds() {
        return Err(Error::PreconditionViolated(
            "regular_bimodule requires an anti-Leibniz algebra".into(),
        ));
    }
    Ok(Bimodule {
        base: a.clone(),
        mdim: a.dim,
        lact: (0..a.dim).map(|i| a.left_mult(i)).collect(),
        ract: (0..a.dim).map(|i| a.right_mult(i)).collect(),
    })
}

/// The dual bimodule (M*, 𝐥*, 𝐥* − 𝐫*): on dual coordinates the action of a is
/// the transpose of the action on M, and the right action is 𝐥* − 𝐫*.
pub fn dual_bimodule(m: &Bimodule) -> Bimodule {
    let lact: Vec<Matrix> = m.lact.iter().map(Matrix::transpose).collect();
    let ract: Vec<Matrix> = m
        .lact
        .iter()
        .zip(&m.ract)
        .map(|(l, r)| l.transpose().sub(&r.transpose()))
        .collect();
    Bimodule {
        base: m.base.clone(),
        mdim: m.mdim,
        lact,
        ract,
    }
}

/// The coregular bimodule: dual of the regular bimodule.
pub fn coregular_bimodule(a: &Algebra) -> Result<Bimodule> {
    Ok(dual_bimodule(&regular_bimodule(a)?))
}

/// Product on A ⊕ M: (a₁,m₁)(a₂,m₂) = (a₁a₂, 𝐥(a₁)m₂ + 𝐫(a₂)m₁).
pub fn semidirect_product(m: &Bimodule) -> Algebra {
    let n = m.base.dim;
    let total = n + m.mdim;
    let mut alg = Algebra::zero(m.base.field, total);
    for i in 0..n {
        for j in 0..n {
            let prod = m.base.basis_product(i, j);
            let mut out = vec_zero(m.base.field, total);
            out[..n].clone_from_slice(&prod);
            alg.set_product(i, j, out);
        }
    }
    for i in 0..n {
        for u in 0..m.mdim {
            // (e_i, 0)(0, f_u) = (0, 𝐥(e_i) f_u)
            let act = m.lact[i].mat_vec(&crate::matrix::basis_vec(m.base.field, m.mdim, u));
            let mut out = vec_zero(m.base.field, total);
            out[n..].clone_from_slice(&act);
            alg.set_product(i, n + u, out);
            // (0, f_u)(e_i, 0) = (0, 𝐫(e_i) f_u)
            let act = m.ract[i].mat_vec(&crate::matrix::basis_vec(m.base.field, m.mdim, u));
            let mut out = vec_zero(m.base.field, total);
            out[n..].clone_from_slice(&act);
            alg.set_product(n + u, i, out);
        }
    }
    alg
}

/// Two algebras with mutual actions: lA/rA act on B (one dim-B matrix per A
/// basis vector), lB/rB act on A.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchedPairData {
    pub a: Algebra,
    pub b: Algebra,
    pub l_a: Vec<Matrix>,
    pub r_a: Vec<Matrix>,
    pub l_b: Vec<Matrix>,
    pub r_b: Vec<Matrix>,
}

impl MatchedPairData {
    fn la_of(&self, x: &[Scalar]) -> Matrix {
        combine(&self.l_a, x, self.b.dim, self.a.field)
    }
    fn ra_of(&self, x: &[Scalar]) -> Matrix {
        combine(&self.r_a, x, self.b.dim, self.a.field)
    }
    fn lb_of(&self, x: &[Scalar]) -> Matrix {
        combine(&self.l_b, x, self.a.dim, self.a.field)
    }
    fn rb_of(&self, x: &[Scalar]) -> Matrix {
        combine(&self.r_b, x, self.a.dim, self.a.field)
    }
}

/// Full matched-pair report: both base laws, both action triples, and the six
/// cross-compatibility equations. The verdict is the conjunction; the crossed
/// product is anti-Leibniz exactly when this report passes.
pub fn check_matched_pair(d: &MatchedPairData) -> Report {
    let mut rep = Report::new("matched pair of anti-Leibniz algebras");
    rep.push(Clause::of(
        "first algebra law",
        check_anti_leibniz(&d.a).holds(),
        None,
    ));
    rep.push(Clause::of(
        "second algebra law",
        check_anti_leibniz(&d.b).holds(),
        None,
    ));
    let bm_a = Bimodule {
        base: d.a.clone(),
        mdim: d.b.dim,
        lact: d.l_a.clone(),
        ract: d.r_a.clone(),
    };
    let bm_b = Bimodule {
        base: d.b.clone(),
        mdim: d.a.dim,
        lact: d.l_b.clone(),
        ract: d.r_b.clone(),
    };
    rep.push(Clause::of(
        "first action triple is a bimodule",
        bimodule_equations_report(&bm_a).holds(),
        None,
    ));
    rep.push(Clause::of(
        "second action triple is a bimodule",
        bimodule_equations_report(&bm_b).holds(),
        None,
    ));
    for c in cross_equations(d) {
        rep.push(c);
    }
    rep
}

/// The six cross-compatibility equations, evaluated on all relevant basis
/// tuples: one A element against a B basis pair for the first three, and with
/// the roles swapped for the last three.
fn cross_equations(d: &MatchedPairData) -> Vec<Clause> {
    let names = [
        "cross rule 1 (A right action vs B product)",
        "cross rule 2 (A left action vs B product)",
        "cross rule 3 (A action exchange)",
        "cross rule 4 (B right action vs A product)",
        "cross rule 5 (B left action vs A product)",
        "cross rule 6 (B action exchange)",
    ];
    let mut clauses: Vec<Clause> = names.iter().map(|n| Clause::pass(*n)).collect();

    // First three: a ∈ basis(A), (b₁, b₂) ∈ basis(B)².
    for s in 0..d.a.dim {
        let a = d.a.basis_vec(s);
        for i in 0..d.b.dim {
            for j in 0..d.b.dim {
                let b1 = d.b.basis_vec(i);
                let b2 = d.b.basis_vec(j);
                let w = || format!("tuple (a{}, b{}, b{})", s + 1, i + 1, j + 1);
                let ra = d.ra_of(&a);
                let la = d.la_of(&a);
                // (1) 𝐫_A(a)(b₁b₂) + b₁·𝐫_A(a)(b₂) + b₂·𝐫_A(a)(b₁)
                //     + 𝐫_A(𝐥_B(b₂)(a))(b₁) + 𝐫_A(𝐥_B(b₁)(a))(b₂) = 0
                if clauses[0].holds {
                    let mut sum = ra.mat_vec(&d.b.basis_product(i, j));
                    sum = vec_add(&sum, &d.b.multiply(&b1, &ra.mat_vec(&b2)));
                    sum = vec_add(&sum, &d.b.multiply(&b2, &ra.mat_vec(&b1)));
                    sum = vec_add(&sum, &d.ra_of(&d.lb_of(&b2).mat_vec(&a)).mat_vec(&b1));
                    sum = vec_add(&sum, &d.ra_of(&d.lb_of(&b1).mat_vec(&a)).mat_vec(&b2));
                    if !vec_is_zero(&sum) {
                        clauses[0] = Clause::fail(names[0], w());
                    }
                }
                // (2) 𝐥_A(a)(b₁b₂) + 𝐥_A(a)(b₁)·b₂ + b₁·𝐥_A(a)(b₂)
                //     + 𝐥_A(𝐫_B(b₁)(a))(b₂) + 𝐫_A(𝐫_B(b₂)(a))(b₁) = 0
                if clauses[1].holds {
                    let mut sum = la.mat_vec(&d.b.basis_product(i, j));
                    sum = vec_add(&sum, &d.b.multiply(&la.mat_vec(&b1), &b2));
                    sum = vec_add(&sum, &d.b.multiply(&b1, &la.mat_vec(&b2)));
                    sum = vec_add(&sum, &d.la_of(&d.rb_of(&b1).mat_vec(&a)).mat_vec(&b2));
                    sum = vec_add(&sum, &d.ra_of(&d.rb_of(&b2).mat_vec(&a)).mat_vec(&b1));
                    if !vec_is_zero(&sum) {
                        clauses[1] = Clause::fail(names[1], w());
                    }
                }
                // (3) 𝐥_A(a)(b₁)·b₂ + 𝐥_A(𝐫_B(b₁)(a))(b₂)
                //     − 𝐫_A(a)(b₁)·b₂ − 𝐥_A(𝐥_B(b₁)(a))(b₂) = 0
                if clauses[2].holds {
                    let mut sum = d.b.multiply(&la.mat_vec(&b1), &b2);
                    sum = vec_add(&sum, &d.la_of(&d.rb_of(&b1).mat_vec(&a)).mat_vec(&b2));
                    let neg1 = d.b.multiply(&ra.mat_vec(&b1), &b2);
                    let neg2 = d.la_of(&d.lb_of(&b1).mat_vec(&a)).mat_vec(&b2);
                    sum = crate::matrix::vec_sub(&crate::matrix::vec_sub(&sum, &neg1), &neg2);
                    if !vec_is_zero(&sum) {
                        clauses[2] = Clause::fail(names[2], w());
                    }
                }
            }
        }
    }
    // Last three: roles of A and B swapped.
    for s in 0..d.b.dim {
        let b = d.b.basis_vec(s);
        for i in 0..d.a.dim {
            for j in 0..d.a.dim {
                let a1 = d.a.basis_vec(i);
                let a2 = d.a.basis_vec(j);
                let w = || format!("tuple (b{}, a{}, a{})", s + 1, i + 1, j + 1);
                let rb = d.rb_of(&b);
                let lb = d.lb_of(&b);
                if clauses[3].holds {
                    let mut sum = rb.mat_vec(&d.a.basis_product(i, j));
                    sum = vec_add(&sum, &d.a.multiply(&a1, &rb.mat_vec(&a2)));
                    sum = vec_add(&sum, &d.a.multiply(&a2, &rb.mat_vec(&a1)));
                    sum = vec_add(&sum, &d.rb_of(&d.la_of(&a2).mat_vec(&b)).mat_vec(&a1));
                    sum = vec_add(&sum, &d.rb_of(&d.la_of(&a1).mat_vec(&b)).mat_vec(&a2));
                    if !vec_is_zero(&sum) {
                        clauses[3] = Clause::fail(names[3], w());
                    }
                }
                if clauses[4].holds {
                    let mut sum = lb.mat_vec(&d.a.basis_product(i, j));
                    sum = vec_add(&sum, &d.a.multiply(&lb.mat_vec(&a1), &a2));
                    sum = vec_add(&sum, &d.a.multiply(&a1, &lb.mat_vec(&a2)));
                    sum = vec_add(&sum, &d.lb_of(&d.ra_of(&a1).mat_vec(&b)).mat_vec(&a2));
                    sum = vec_add(&sum, &d.rb_of(&d.ra_of(&a2).mat_vec(&b)).mat_vec(&a1));
                    if !vec_is_zero(&sum) {
                        clauses[4] = Clause::fail(names[4], w());
                    }
                }
                if clauses[5].holds {
                    let mut sum = d.a.multiply(&lb.mat_vec(&a1), &a2);
                    sum = vec_add(&sum, &d.lb_of(&d.ra_of(&a1).mat_vec(&b)).mat_vec(&a2));
                    let neg1 = d.a.multiply(&rb.mat_vec(&a1), &a2);
                    let neg2 = d.lb_of(&d.la_of(&a1).mat_vec(&b)).mat_vec(&a2);
                    sum = crate::matrix::vec_sub(&crate::matrix::vec_sub(&sum, &neg1), &neg2);
                    if !vec_is_zero(&sum) {
                        clauses[5] = Clause::fail(names[5], w());
                    }
                }
            }
        }
    }
    clauses
}

/// Product on A ⊕ B:
/// (a₁,b₁)(a₂,b₂) = (a₁a₂ + 𝐥_B(b₁)(a₂) + 𝐫_B(b₂)(a₁), b₁b₂ + 𝐥_A(a₁)(b₂) + 𝐫_A(a₂)(b₁)).
pub fn crossed_product(d: &MatchedPairData) -> Algebra {
    let n = d.a.dim;
    let m = d.b.dim;
    let field = d.a.field;
    let total = n + m;
    let mut alg = Algebra::zero(field, total);
    for i in 0..total {
        for j in 0..total {
            let (a1, b1) = split_basis(d, i);
            let (a2, b2) = split_basis(d, j);
            let mut a_part = d.a.multiply(&a1, &a2);
            a_part = vec_add(&a_part, &d.lb_of(&b1).mat_vec(&a2));
            a_part = vec_add(&a_part, &d.rb_of(&b2).mat_vec(&a1));
            let mut b_part = d.b.multiply(&b1, &b2);
            b_part = vec_add(&b_part, &d.la_of(&a1).mat_vec(&b2));
            b_part = vec_add(&b_part, &d.ra_of(&a2).mat_vec(&b1));
            let mut out = vec_zero(field, total);
            out[..n].clone_from_slice(&a_part);
            out[n..].clone_from_slice(&b_part);
            alg.set_product(i, j, out);
        }
    }
    alg
}

fn split_basis(d: &MatchedPairData, idx: usize) -> (Vec<Scalar>, Vec<Scalar>) {
    let n = d.a.dim;
    let field = d.a.field;
    if idx < n {
        (
            crate::matrix::basis_vec(field, n, idx),
            vec_zero(field, d.b.dim),
        )
    } else {
        (
            vec_zero(field, n),
            crate::matrix::basis_vec(field, d.b.dim, idx - n),
        )
    }
}

/// The coregular matched-pair data (A, A*, 𝐥*_A, 𝐥*_A − 𝐫*_A, 𝐥*_{A*}, 𝐥*_{A*} − 𝐫*_{A*})
/// built from an algebra and a coalgebra on the same space.
pub fn coregular_pair(a: &Algebra, c: &Coalgebra) -> MatchedPairData {
    let astar = dual_algebra(c);
    let n = a.dim;
    // Actions of A on A*: coregular (transpose) actions.
    let l_a: Vec<Matrix> = (0..n).map(|i| a.left_mult(i).transpose()).collect();
    let r_a: Vec<Matrix> = (0..n)
        .map(|i| a.left_mult(i).transpose().sub(&a.right_mult(i).transpose()))
        .collect();
    // Actions of A* on A: coregular actions of the dual algebra.
    let l_b: Vec<Matrix> = (0..n).map(|i| astar.left_mult(i).transpose()).collect();
    let r_b: Vec<Matrix> = (0..n)
        .map(|i| {
            astar
                .left_mult(i)
                .transpose()
                .sub(&astar.right_mult(i).transpose())
        })
        .collect();
    MatchedPairData {
        a: a.clone(),
        b: astar,
        l_a,
        r_a,
        l_b,
        r_b,
    }
}

/// Result of the standard double construction on A ⊕ A*.
#[derive(Debug, Clone)]
pub struct ManinTriple {
    pub total: Algebra,
    pub bd: BilinearForm,
    pub report: Report,
}

/// Build A ⊕ A* as the crossed product of the coregular pair, together with
/// the canonical pairing Bd((a₁,ξ₁),(a₂,ξ₂)) = ⟨ξ₁,a₂⟩ − ⟨ξ₂,a₁⟩, and verify
/// the triple's defining properties.
pub fn standard_manin_triple(a: &Algebra, c: &Coalgebra) -> Result<ManinTriple> {
    if !check_anti_leibniz(a).holds() {
        return Err(Error::PreconditionViolated(
            "standard_manin_triple requires an anti-Leibniz algebra".into(),
        ));
    }
    let astar = dual_algebra(c);
    if !check_anti_leibniz(&astar).holds() {
        return Err(Error::PreconditionViolated(
            "standard_manin_triple requires the dual algebra of the coalgebra to be anti-Leibniz"
                .into(),
        ));
    }
    let pair = coregular_pair(a, c);
    let total = crossed_product(&pair);
    let n = a.dim;
    let field = a.field;
    // Bd Gram: blocks [[0, -I], [I, 0]] on (A-basis, dual-basis) coordinates:
    // Bd(e_i, f_j) = -δ_ij, Bd(f_i, e_j) = δ_ij.
    let mut gram = Matrix::zero(field, 2 * n, 2 * n);
    for i in 0..n {
        gram.set(i, n + i, -field.one());
        gram.set(n + i, i, field.one());
    }
    let bd = BilinearForm::new(gram);

    let mut report = Report::new("standard double on A ⊕ A*");
    report.note(
        "the pairing is skew-symmetric by construction; invariance is checked in the \
         skew style B(xy, z) = B(x, yz − zy)",
    );
    report.push(Clause::of(
        "primal part is a subalgebra with the original product",
        subalgebra_matches(&total, a, 0),
        None,
    ));
    report.push(Clause::of(
        "dual part is a subalgebra with the dual product",
        subalgebra_matches(&total, &astar, n),
        None,
    ));
    let props = crate::algebra::form_properties(&total, &bd);
    report.push(Clause::of("pairing nondegenerate", props.nondegenerate, None));
    report.push(Clause::of("pairing skew-symmetric", props.skew_symmetric, None));
    report.push(Clause::of(
        "pairing invariant (skew style)",
        props.invariant_skew_style,
        None,
    ));
    report.push(Clause::of(
        "total algebra is anti-Leibniz",
        check_anti_leibniz(&total).holds(),
        None,
    ));
    Ok(ManinTriple { total, bd, report })
}

/// The block of `total` starting at `offset` reproduces `sub`'s products and
/// produces nothing outside the block.
fn subalgebra_matches(total: &Algebra, sub: &Algebra, offset: usize) -> bool {
    for i in 0..sub.dim {
        for j in 0..sub.dim {
            let prod = total.basis_product(offset + i, offset + j);
            let expected = sub.basis_product(i, j);
            for (k, v) in prod.iter().enumerate() {
                let want = if (offset..offset + sub.dim).contains(&k) {
                    expected[k - offset].clone()
                } else {
                    total.field.zero()
                };
                if *v != want {
                    return false;
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::scalar::Field;

    #[test]
    fn regular_bimodule_of_lambda21_checks() {
        let a = catalog::lambda2_1(Field::Q);
        let m = regular_bimodule(&a).unwrap();
        assert!(check_bimodule(&m).unwrap().holds());
    }

    #[test]
    fn zero_actions_check() {
        let a = catalog::dim3_noncommutative(Field::Q);
        let m = Bimodule::zero_actions(a, 2);
        assert!(check_bimodule(&m).unwrap().holds());
    }

    #[test]
    fn identity_left_action_fails() {
        // l(e₁) = id on a one-dimensional module over the algebra with
        // e₁e₁ = e₂: the quadratic action identity yields 2·id + l(e₂),
        // which cannot vanish when l(e₂) = 0 in characteristic zero.
        let a = catalog::lambda2_1(Field::Q);
        let m = Bimodule {
            lact: vec![
                Matrix::identity(Field::Q, 1),
                Matrix::zero(Field::Q, 1, 1),
            ],
            ract: vec![
                Matrix::zero(Field::Q, 1, 1),
                Matrix::zero(Field::Q, 1, 1),
            ],
            base: a,
            mdim: 1,
        };
        assert!(!check_bimodule(&m).unwrap().holds());
    }

    #[test]
    fn dual_of_regular_is_a_bimodule() {
        for a in [
            catalog::lambda2_1(Field::Q),
            catalog::dim3_noncommutative(Field::Q),
        ] {
            let m = coregular_bimodule(&a).unwrap();
            assert!(check_bimodule(&m).unwrap().holds());
        }
    }

    #[test]
    fn bimodule_consequence_identity() {
        // 𝐫(a₁)𝐫(a₂) = 𝐫(a₁)𝐥(a₂) in any certified bimodule.
        let a = catalog::dim3_noncommutative(Field::Q);
        for m in [
            regular_bimodule(&a).unwrap(),
            coregular_bimodule(&a).unwrap(),
        ] {
            assert!(check_bimodule(&m).unwrap().holds());
            for i in 0..a.dim {
                for j in 0..a.dim {
                    assert_eq!(m.ract[i].mul(&m.ract[j]), m.ract[i].mul(&m.lact[j]));
                }
            }
        }
    }

    #[test]
    fn semidirect_of_regular_is_anti_leibniz() {
        let a = catalog::lambda2_1(Field::Q);
        let s = semidirect_product(&regular_bimodule(&a).unwrap());
        assert_eq!(s.dim, 4);
        assert!(check_anti_leibniz(&s).holds());
    }

    #[test]
    fn semidirect_with_zero_actions_is_direct_sum_with_null_part() {
        let a = catalog::lambda2_1(Field::Q);
        let s = semidirect_product(&Bimodule::zero_actions(a.clone(), 2));
        let expected = a.direct_sum(&Algebra::zero(Field::Q, 2)).unwrap();
        assert_eq!(s, expected);
    }

    #[test]
    fn broken_bimodule_breaks_semidirect() {
        let a = catalog::dim3_noncommutative(Field::Q);
        let mut m = regular_bimodule(&a).unwrap();
        let one = Field::Q.one();
        let v = m.lact[0].get(0, 0).clone() + one;
        m.lact[0].set(0, 0, v);
        let bimod_ok = check_bimodule(&m).unwrap().holds();
        let semi_ok = check_anti_leibniz(&semidirect_product(&m)).holds();
        assert_eq!(bimod_ok, semi_ok);
        assert!(!semi_ok);
    }

    #[test]
    fn trivial_matched_pair_is_direct_sum() {
        let a = catalog::lambda2_1(Field::Q);
        let b = catalog::dim3_noncommutative(Field::Q);
        let z_b = Matrix::zero(Field::Q, b.dim, b.dim);
        let z_a = Matrix::zero(Field::Q, a.dim, a.dim);
        let d = MatchedPairData {
            a: a.clone(),
            b: b.clone(),
            l_a: vec![z_b.clone(); a.dim],
            r_a: vec![z_b; a.dim],
            l_b: vec![z_a.clone(); b.dim],
            r_b: vec![z_a; b.dim],
        };
        assert!(check_matched_pair(&d).holds());
        assert_eq!(crossed_product(&d), a.direct_sum(&b).unwrap());
    }
}
