//! Representations and the twisted Chevalley–Eilenberg complex.
//!
//! Cochains of degree `k` with values in a representation `V` are
//! [`AltMap`]s `∧^k g → V`. Their coordinates are ordered by
//! (increasing index tuple, module basis index), lexicographically; every
//! subspace computed here uses that ordering.
//!
//! The coboundary is the two-sum formula with `φ⁻¹` inserted on every
//! argument and `φ⁻²` inside the bracket. At degree 0 it reduces to
//! `(dv)(y) = ρ(y)v`, which for the adjoint representation is `[y, v]`.

use num_traits::{One, Zero};

use crate::alt::{binomial, combinations, AltMap};
use crate::error::{dim_err, Error, Result};
use crate::exactlin::{axpy, zero_vec, Matrix, Rational, Subspace, Vector};
use crate::homlie::HomLieAlgebra;
use crate::report::{numbered, CheckReport};

pub type Cochain = AltMap;

/// Highest cochain degree accepted by the cocycle/cohomology queries.
pub const MAX_DEGREE: usize = 4;

/// `(ρ, V, β)` over an algebra `g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    pub alg: HomLieAlgebra,
    pub module_dim: usize,
    pub rho: Vec<Matrix>,
    pub beta: Matrix,
}

impl Representation {
    pub fn new(alg: HomLieAlgebra, rho: Vec<Matrix>, beta: Matrix) -> Result<Self> {
        let m = beta.rows();
        if !beta.is_square() {
            return dim_err("beta must be square");
        }
        if rho.len() != alg.dim() {
            return dim_err(format!("{} action matrices for a {}-dimensional algebra", rho.len(), alg.dim()));
        }
        if let Some(i) = rho.iter().position(|r| r.rows() != m || r.cols() != m) {
            return dim_err(format!("action matrix {i} is not {m}x{m}"));
        }
        Ok(Representation { alg, module_dim: m, rho, beta })
    }

    /// `ρ(x) = Σ x_i ρ(e_i)`
    pub fn rho_of(&self, x: &[Rational]) -> Matrix {
        Matrix::combination(x, &self.rho, self.module_dim, self.module_dim)
    }

    pub fn cochain_dim(&self, k: usize) -> usize {
        binomial(self.alg.dim(), k) * self.module_dim
    }
}

/// The adjoint representation: `ρ(e_i) = ad_{e_i}`, `β = φ`.
pub fn adjoint(alg: &HomLieAlgebra) -> Representation {
    let rho = (0..alg.dim()).map(|i| alg.ad_matrix(i)).collect();
    Representation { alg: alg.clone(), module_dim: alg.dim(), rho, beta: alg.phi().clone() }
}

pub const CHECK_REP_TWIST: &str = "rho-twist-compatibility";
pub const CHECK_REP_BRACKET: &str = "rho-bracket-compatibility";

/// Checks `ρ(φx)∘β = β∘ρ(x)` on basis elements and
/// `ρ([x,y])∘β = ρ(φx)∘ρ(y) − ρ(φy)∘ρ(x)` on basis pairs.
pub fn check_representation(rep: &Representation) -> Result<CheckReport> {
    Representation::new(rep.alg.clone(), rep.rho.clone(), rep.beta.clone())?;
    let g = &rep.alg;
    let b = g.basis();
    let phi_cols = g.phi().column_vectors();
    let rho_phi: Vec<Matrix> = phi_cols.iter().map(|c| rep.rho_of(c)).collect();
    let mut r = CheckReport::new();
    r.check(CHECK_REP_TWIST, &[b], |t| (rho_phi[t[0]].mul(&rep.beta).flatten(), rep.beta.mul(&rep.rho[t[0]]).flatten()));
    r.check(CHECK_REP_BRACKET, &[b, b], |t| {
        let (i, j) = (t[0], t[1]);
        let lhs = rep.rho_of(g.bracket_basis(i, j)).mul(&rep.beta);
        let rhs = rho_phi[i].mul(&rep.rho[j]).sub(&rho_phi[j].mul(&rep.rho[i]));
        (lhs.flatten(), rhs.flatten())
    });
    Ok(r)
}

/// Precomputed data for evaluating the coboundary.
struct Twists {
    inv_cols: Vec<Vector>,
    inv2_cols: Vec<Vector>,
}

impl Twists {
    fn of(alg: &HomLieAlgebra) -> Result<Self> {
        let inv = alg.phi_inverse().map_err(|_| Error::Precondition("the coboundary needs an invertible twisting map".into()))?;
        let inv2 = inv.mul(&inv);
        Ok(Twists { inv_cols: inv.column_vectors(), inv2_cols: inv2.column_vectors() })
    }
}

fn check_cochain_shape(rep: &Representation, f: &Cochain) -> Result<()> {
    if f.src_dim() != rep.alg.dim() || f.tgt_dim() != rep.module_dim {
        return dim_err(format!(
            "cochain on F^{} with values in F^{} does not match a {}-dimensional algebra acting on F^{}",
            f.src_dim(),
            f.tgt_dim(),
            rep.alg.dim(),
            rep.module_dim
        ));
    }
    Ok(())
}

fn coboundary_with(rep: &Representation, tw: &Twists, f: &Cochain) -> Cochain {
    let g = &rep.alg;
    let n = g.dim();
    let k = f.arity();
    let one = Rational::one();
    AltMap::from_fn(k + 1, n, rep.module_dim, |xs| {
        let mut out = zero_vec(rep.module_dim);
        let args: Vec<&[Rational]> = xs.iter().map(|&x| tw.inv_cols[x].as_slice()).collect();
        // Σ_i (-1)^{i+1} ρ(x_i) f(φ⁻¹x_1, …, ^i, …)   (1-based i)
        for (i, &xi) in xs.iter().enumerate() {
            let rest: Vec<&[Rational]> = args.iter().enumerate().filter(|&(p, _)| p != i).map(|(_, a)| *a).collect();
            let val = rep.rho[xi].mul_vec(&f.eval(&rest));
            let sign = if i % 2 == 0 { one.clone() } else { -one.clone() };
            axpy(&mut out, &sign, &val);
        }
        // Σ_{i<j} (-1)^{i+j} β f([φ⁻²x_i, φ⁻²x_j], φ⁻¹x_1, …, ^i, ^j, …)
        for i in 0..=k {
            for j in i + 1..=k {
                let br = g.br(&tw.inv2_cols[xs[i]], &tw.inv2_cols[xs[j]]);
                if br.iter().all(Zero::is_zero) {
                    continue;
                }
                let mut fargs: Vec<&[Rational]> = vec![br.as_slice()];
                fargs.extend(args.iter().enumerate().filter(|&(p, _)| p != i && p != j).map(|(_, a)| *a));
                let val = rep.beta.mul_vec(&f.eval(&fargs));
                let sign = if (i + j) % 2 == 0 { one.clone() } else { -one.clone() };
                axpy(&mut out, &sign, &val);
            }
        }
        out
    })
}

/// `d f` for a cochain `f` of degree `k`, a cochain of degree `k + 1`.
pub fn coboundary(rep: &Representation, f: &Cochain) -> Result<Cochain> {
    check_cochain_shape(rep, f)?;
    let tw = Twists::of(&rep.alg)?;
    Ok(coboundary_with(rep, &tw, f))
}

/// Matrix of `d: C^k → C^{k+1}` in the elementary-cochain coordinates.
pub fn coboundary_matrix(rep: &Representation, k: usize) -> Result<Matrix> {
    let tw = Twists::of(&rep.alg)?;
    let n = rep.alg.dim();
    let m = rep.module_dim;
    let src = rep.cochain_dim(k);
    let cols: Vec<Vector> = (0..src).map(|c| coboundary_with(rep, &tw, &AltMap::elementary(k, n, m, c)).coords()).collect();
    Matrix::from_columns(&cols, rep.cochain_dim(k + 1))
}

/// `Z^k`, the kernel of `d` on degree-`k` cochains.
pub fn cocycle_space(rep: &Representation, k: usize) -> Result<Subspace> {
    if k > MAX_DEGREE {
        return Err(Error::Degree(k));
    }
    Ok(coboundary_matrix(rep, k)?.nullspace())
}

/// `B^k`, the image of `d` from degree `k − 1`.
pub fn coboundary_space(rep: &Representation, k: usize) -> Result<Subspace> {
    if k == 0 || k > MAX_DEGREE {
        return Err(Error::Degree(k));
    }
    Ok(coboundary_matrix(rep, k - 1)?.column_space())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cohomology {
    pub degree: usize,
    pub dim: usize,
    pub cocycles: Subspace,
    pub coboundaries: Subspace,
    /// Cocycles whose classes form a basis of `H^k`.
    pub representatives: Vec<Cochain>,
}

/// `H^k = Z^k / B^k` with `B^0 = 0`.
pub fn cohomology(rep: &Representation, k: usize) -> Result<Cohomology> {
    let z = cocycle_space(rep, k)?;
    let b = if k == 0 { Subspace::zero(z.ambient_dim()) } else { coboundary_space(rep, k)? };
    if !b.is_subspace_of(&z) {
        return Err(Error::Internal(format!("B^{k} is not contained in Z^{k}")));
    }
    let n = rep.alg.dim();
    let representatives =
        b.completion_in(&z)?.iter().map(|v| AltMap::from_coords(k, n, rep.module_dim, v)).collect::<Result<Vec<_>>>()?;
    Ok(Cohomology { degree: k, dim: z.dim() - b.dim(), cocycles: z, coboundaries: b, representatives })
}

/// Labels for the coordinates of `C^k`, e.g. `(h,e)->f`. Module vectors
/// reuse the algebra's labels for the adjoint representation and are
/// `v0, v1, …` otherwise.
pub fn cochain_coord_labels(rep: &Representation, k: usize) -> Vec<String> {
    let module = if *rep == adjoint(&rep.alg) { rep.alg.basis().to_vec() } else { numbered("v", rep.module_dim) };
    let b = rep.alg.basis();
    combinations(rep.alg.dim(), k)
        .into_iter()
        .flat_map(|t| {
            let args: Vec<&str> = t.iter().map(|&i| b[i].as_str()).collect();
            let args = args.join(",");
            module.iter().map(move |v| format!("({args})->{v}")).collect::<Vec<_>>()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{int, unit_vec};
    use crate::homlie::{center, yau_twist};

    #[test]
    fn representation_examples() {
        let sl2 = HomLieAlgebra::sl2();
        let zero = Representation::new(sl2.clone(), vec![Matrix::zeros(2, 2); 3], Matrix::from_i64(2, 2, &[1, 1, 0, 1])).unwrap();
        assert!(check_representation(&zero).unwrap().passed());
        assert!(check_representation(&adjoint(&sl2)).unwrap().passed());

        let mut bad = adjoint(&sl2);
        bad.beta = Matrix::diag(&[int(1), int(2), int(3)]);
        let rep = check_representation(&bad).unwrap();
        assert!(!rep.passes(CHECK_REP_TWIST));

        let twisted = yau_twist(&sl2, &Matrix::diag(&[int(1), int(2), crate::exactlin::rat(1, 2)])).unwrap();
        assert!(check_representation(&adjoint(&twisted)).unwrap().passed());
    }

    #[test]
    fn adjoint_matrices() {
        let a = adjoint(&HomLieAlgebra::abelian(2));
        assert!(a.rho.iter().all(Matrix::is_zero));
        assert_eq!(a.beta, Matrix::identity(2));
        let s = adjoint(&HomLieAlgebra::sl2());
        assert_eq!(s.rho[0], Matrix::diag(&[int(0), int(2), int(-2)]));
    }

    #[test]
    fn degree_zero_coboundary_is_right_bracket() {
        let g = HomLieAlgebra::sl2();
        let rep = adjoint(&g);
        let x = vec![int(1), int(3), int(-2)];
        let dx = coboundary(&rep, &AltMap::constant_on(3, x.clone())).unwrap();
        for y in 0..3 {
            assert_eq!(dx.value_at(&[y]), g.br(&unit_vec(3, y), &x));
        }
    }

    #[test]
    fn identity_one_cochain_on_h_e() {
        let rep = adjoint(&HomLieAlgebra::sl2());
        let id = AltMap::from_fn(1, 3, 3, |t| unit_vec(3, t[0]));
        let d = coboundary(&rep, &id).unwrap();
        assert_eq!(d.value_at(&[0, 1]), vec![int(0), int(2), int(0)]);
    }

    #[test]
    fn zero_cochain_maps_to_zero() {
        let rep = adjoint(&HomLieAlgebra::heisenberg());
        let f = AltMap::zero(2, 3, 3);
        assert!(coboundary(&rep, &f).unwrap().is_zero());
        assert!(coboundary(&rep, &AltMap::zero(2, 4, 3)).is_err());
    }

    #[test]
    fn cocycle_and_coboundary_spaces() {
        let sl2 = adjoint(&HomLieAlgebra::sl2());
        let ab = adjoint(&HomLieAlgebra::abelian(2));
        let z0 = cocycle_space(&adjoint(&HomLieAlgebra::heisenberg()), 0).unwrap();
        assert_eq!(z0, center(&HomLieAlgebra::heisenberg()));
        assert_eq!(cocycle_space(&ab, 1).unwrap(), Subspace::full(4));
        assert_eq!(cocycle_space(&sl2, 1).unwrap().dim(), 3);
        assert_eq!(coboundary_space(&ab, 1).unwrap().dim(), 0);
        assert_eq!(coboundary_space(&sl2, 1).unwrap().dim(), 3);
        let trivial = Representation::new(HomLieAlgebra::abelian(3), vec![Matrix::zeros(2, 2); 3], Matrix::identity(2)).unwrap();
        assert_eq!(coboundary_space(&trivial, 2).unwrap().dim(), 0);
        assert!(matches!(coboundary_space(&sl2, 0), Err(Error::Degree(0))));
        assert!(matches!(cocycle_space(&sl2, 5), Err(Error::Degree(5))));
    }

    #[test]
    fn cohomology_examples() {
        let sl2 = adjoint(&HomLieAlgebra::sl2());
        assert_eq!(cohomology(&sl2, 0).unwrap().dim, 0);
        assert_eq!(cohomology(&sl2, 1).unwrap().dim, 0);
        let h1 = cohomology(&adjoint(&HomLieAlgebra::abelian(2)), 1).unwrap();
        assert_eq!(h1.dim, 4);
        assert_eq!(h1.representatives.len(), 4);
    }

    #[test]
    fn singular_twist_is_rejected() {
        let a = HomLieAlgebra::abelian_with_phi(Matrix::zeros(2, 2)).unwrap();
        assert!(matches!(coboundary(&adjoint(&a), &AltMap::zero(1, 2, 2)), Err(Error::Precondition(_))));
    }
}
