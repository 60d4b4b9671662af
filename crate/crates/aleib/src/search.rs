//! Exhaustive small searches over prime fields: enumerate structure constants
//! satisfying the anti-Leibniz identity (with an independent second-pass
//! verifier), classify survivors under basis change, and find symmetric
//! solutions of the bracket equation. Results over GF(p) are labeled as
//! finite-field extrapolations, not characteristic-zero statements.

use crate::algebra::{check_anti_leibniz, Algebra};
use crate::bialgebra::{check_bialgebra, Bialgebra};
use crate::matrix::Matrix;
use crate::scalar::{Field, Scalar};
use crate::tensor::Tensor2;
use crate::yangbaxter::{delta_r, ybe_bracket};
use crate::{Error, Result};

pub const DEFAULT_BUDGET: u64 = 10_000_000;
pub const SUPPORTED_PRIMES: [u64; 3] = [2, 3, 5];
pub const MAX_DIM: usize = 3;

#[derive(Debug, Clone)]
pub struct SearchSpec {
    pub p: u64,
    pub dim: usize,
    /// Hard cap on the number of candidates examined.
    pub budget: u64,
    /// When set, only these (i, j, k) structure-constant positions may be
    /// nonzero (0-based); everything else is pinned to zero.
    pub mask: Option<Vec<(usize, usize, usize)>>,
}

impl SearchSpec {
    pub fn new(p: u64, dim: usize) -> Result<SearchSpec> {
        if !SUPPORTED_PRIMES.contains(&p) {
            return Err(Error::BadParameter(format!(
                "unsupported prime {p}; expected one of 2, 3, 5"
            )));
        }
        if dim == 0 || dim > MAX_DIM {
            return Err(Error::BadParameter(format!(
                "dimension {dim} out of range 1..=3"
            )));
        }
        Ok(SearchSpec {
            p,
            dim,
            budget: DEFAULT_BUDGET,
            mask: None,
        })
    }

    fn free_positions(&self) -> Result<Vec<(usize, usize, usize)>> {
        let d = self.dim;
        match &self.mask {
            None => {
                let mut v = Vec::with_capacity(d * d * d);
                for i in 0..d {
                    for j in 0..d {
                        for k in 0..d {
                            v.push((i, j, k));
                        }
                    }
                }
                Ok(v)
            }
            Some(m) => {
                for &(i, j, k) in m {
                    if i >= d || j >= d || k >= d {
                        return Err(Error::BadParameter(format!(
                            "mask position ({i}, {j}, {k}) out of range for dimension {d}"
                        )));
                    }
                }
                Ok(m.clone())
            }
        }
    }

    fn candidate_count(&self, free: usize) -> Result<u64> {
        let mut n: u64 = 1;
        for _ in 0..free {
            n = n.checked_mul(self.p).ok_or(Error::BudgetExceeded {
                needed: u64::MAX,
                budget: self.budget,
            })?;
        }
        if n > self.budget {
            return Err(Error::BudgetExceeded {
                needed: n,
                budget: self.budget,
            });
        }
        Ok(n)
    }
}

/// Flat structure constants sc[i][j][k] stored at index (i·d + j)·d + k.
pub type RawStructure = Vec<u64>;

pub fn to_algebra(sc: &RawStructure, dim: usize, p: u64) -> Algebra {
    let field = Field::Gf(p);
    let mut a = Algebra::zero(field, dim);
    for i in 0..dim {
        for j in 0..dim {
            for k in 0..dim {
                a.sc
                    .set(i, j, k, field.from_i64(sc[(i * dim + j) * dim + k] as i64));
            }
        }
    }
    a
}

pub fn to_raw(a: &Algebra) -> RawStructure {
    let d = a.dim;
    let mut out = vec![0u64; d * d * d];
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                out[(i * d + j) * d + k] = scalar_residue(a.sc.get(i, j, k));
            }
        }
    }
    out
}

fn scalar_residue(s: &Scalar) -> u64 {
    match s {
        Scalar::Gf { r, .. } => *r,
        Scalar::Q(_) => panic!("raw search structures live over a prime field"),
    }
}

/// Independent verifier over raw u64 arithmetic with the loops ordered
/// (t, k, j, i), deliberately different from the checker used during
/// enumeration:
/// Σ_m sc[j][k][m]·sc[i][m][t] + sc[i][j][m]·sc[m][k][t] + sc[i][k][m]·sc[j][m][t] ≡ 0.
pub fn raw_anti_leibniz(sc: &RawStructure, dim: usize, p: u64) -> bool {
    let at = |i: usize, j: usize, k: usize| sc[(i * dim + j) * dim + k];
    for t in 0..dim {
        for k in 0..dim {
            for j in 0..dim {
                for i in 0..dim {
                    let mut acc: u64 = 0;
                    for m in 0..dim {
                        acc += at(j, k, m) * at(i, m, t);
                        acc += at(i, j, m) * at(m, k, t);
                        acc += at(i, k, m) * at(j, m, t);
                        acc %= p;
                    }
                    if acc != 0 {
                        return false;
                    }
                }
            }
        }
    }
    true
}

#[derive(Debug, Clone)]
pub struct EnumerationResult {
    /// Survivors in lexicographic order of their flat structure constants.
    pub survivors: Vec<RawStructure>,
    pub candidates: u64,
}

/// Enumerate all structure-constant assignments in lexicographic order and
/// keep those passing the anti-Leibniz check; every survivor is re-verified
/// through the independent raw-arithmetic route and the two verdicts must
/// agree on every candidate.
pub fn enumerate_structures(spec: &SearchSpec) -> Result<EnumerationResult> {
    let free = spec.free_positions()?;
    let candidates = spec.candidate_count(free.len())?;
    let d = spec.dim;
    let mut digits = vec![0u64; free.len()];
    let mut survivors = Vec::new();
    let mut done = false;
    while !done {
        let mut sc = vec![0u64; d * d * d];
        for (pos, &(i, j, k)) in free.iter().enumerate() {
            sc[(i * d + j) * d + k] = digits[pos];
        }
        let exact = check_anti_leibniz(&to_algebra(&sc, d, spec.p)).holds();
        let raw = raw_anti_leibniz(&sc, d, spec.p);
        assert_eq!(
            exact, raw,
            "verifier disagreement on structure {sc:?} over GF({})",
            spec.p
        );
        if exact {
            survivors.push(sc);
        }
        // Increment the digit vector, most significant digit first so the
        // output comes out in lexicographic order.
        done = true;
        for pos in (0..digits.len()).rev() {
            digits[pos] += 1;
            if digits[pos] < spec.p {
                done = false;
                break;
            }
            digits[pos] = 0;
        }
        if digits.is_empty() {
            done = true;
        }
    }
    Ok(EnumerationResult {
        survivors,
        candidates,
    })
}

/// All invertible dim×dim matrices over GF(p).
pub fn gl_matrices(dim: usize, p: u64) -> Vec<Matrix> {
    let field = Field::Gf(p);
    let entries = dim * dim;
    let total = p.pow(entries as u32);
    let mut out = Vec::new();
    for code in 0..total {
        let mut m = Matrix::zero(field, dim, dim);
        let mut c = code;
        for i in 0..dim {
            for j in 0..dim {
                m.set(i, j, field.from_i64((c % p) as i64));
                c /= p;
            }
        }
        if m.rank() == dim {
            out.push(m);
        }
    }
    out
}

/// The structure g·c with multiplication x∘y = g(g⁻¹x · g⁻¹y).
fn transform(a: &Algebra, g: &Matrix, ginv: &Matrix) -> Algebra {
    let d = a.dim;
    let mut out = Algebra::zero(a.field, d);
    for i in 0..d {
        for j in 0..d {
            let xi = ginv.mat_vec(&a.basis_vec(i));
            let xj = ginv.mat_vec(&a.basis_vec(j));
            out.set_product(i, j, g.mat_vec(&a.multiply(&xi, &xj)));
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitClass {
    /// Lexicographically least structure in the orbit.
    pub representative: RawStructure,
    pub size: usize,
    pub commutative: bool,
}

/// Group the survivors into basis-change orbits; one class per orbit, sorted
/// by representative.
pub fn orbit_classify(spec: &SearchSpec, survivors: &[RawStructure]) -> Result<Vec<OrbitClass>> {
    let gl = gl_matrices(spec.dim, spec.p);
    let work = (survivors.len() as u64)
        .checked_mul(gl.len() as u64)
        .unwrap_or(u64::MAX);
    if work > spec.budget {
        return Err(Error::BudgetExceeded {
            needed: work,
            budget: spec.budget,
        });
    }
    let inverses: Vec<Matrix> = gl.iter().map(|g| g.invert().expect("GL element")).collect();
    let mut canon_of: Vec<(RawStructure, RawStructure)> = Vec::new();
    for sc in survivors {
        let a = to_algebra(sc, spec.dim, spec.p);
        let mut least = sc.clone();
        for (g, ginv) in gl.iter().zip(&inverses) {
            let t = to_raw(&transform(&a, g, ginv));
            if t < least {
                least = t;
            }
        }
        canon_of.push((least, sc.clone()));
    }
    canon_of.sort();
    let mut classes: Vec<OrbitClass> = Vec::new();
    for (canon, _member) in canon_of {
        match classes.last_mut() {
            Some(last) if last.representative == canon => last.size += 1,
            _ => {
                let commutative = to_algebra(&canon, spec.dim, spec.p).is_commutative();
                classes.push(OrbitClass {
                    representative: canon,
                    size: 1,
                    commutative,
                });
            }
        }
    }
    Ok(classes)
}

#[derive(Debug, Clone)]
pub struct SymmetricSolution {
    pub r: Tensor2,
    /// Whether (A, ·, Δ_r) was certified as a bialgebra.
    pub certified: bool,
}

/// Enumerate all symmetric r over GF(p) for a given anti-Leibniz algebra and
/// keep the solutions of the bracket equation, certifying each induced
/// coboundary bialgebra. Output is sorted by the upper-triangular entries.
pub fn find_symmetric_solutions(alg: &Algebra, budget: u64) -> Result<Vec<SymmetricSolution>> {
    let p = match alg.field {
        Field::Gf(p) => p,
        Field::Q => {
            return Err(Error::BadParameter(
                "symmetric solution search runs over a prime field".into(),
            ))
        }
    };
    if !check_anti_leibniz(alg).holds() {
        return Err(Error::PreconditionViolated(
            "find_symmetric_solutions requires an anti-Leibniz algebra".into(),
        ));
    }
    let d = alg.dim;
    let free = d * (d + 1) / 2;
    let total = p.pow(free as u32);
    if total > budget {
        return Err(Error::BudgetExceeded {
            needed: total,
            budget,
        });
    }
    let field = alg.field;
    let mut out = Vec::new();
    for code in 0..total {
        let mut r = Tensor2::zero(field, d);
        let mut c = code;
        for i in 0..d {
            for j in i..d {
                let v = field.from_i64((c % p) as i64);
                c /= p;
                r.set(i, j, v.clone());
                r.set(j, i, v);
            }
        }
        if ybe_bracket(alg, &r).is_zero() {
            let b = Bialgebra::new(alg.clone(), delta_r(alg, &r));
            let certified = check_bialgebra(&b)?.holds();
            out.push(SymmetricSolution { r, certified });
        }
    }
    Ok(out)
}
