//! Hom-Lie algebras given by structure constants and a twisting map.

use num_traits::{One, Zero};

use crate::error::{dim_err, Error, Result};
use crate::exactlin::{axpy, int, unit_vec, zero_vec, Matrix, Rational, Subspace, Vector};
use crate::report::CheckReport;

/// A finite-dimensional algebra `(g, [·,·], φ)` over the rationals.
///
/// The structure-constant tensor is stored densely: `bracket_basis(i, j)[k]`
/// is the coefficient of `e_k` in `[e_i, e_j]`. Constructors do not validate
/// the axioms; [`verify`] is the gate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomLieAlgebra {
    dim: usize,
    basis: Vec<String>,
    consts: Vec<Vector>,
    phi: Matrix,
}

impl HomLieAlgebra {
    /// Builds an algebra from the brackets `[e_i, e_j]` with `i < j`; the
    /// remaining constants are filled in antisymmetrically.
    pub fn new(basis: Vec<String>, brackets: impl IntoIterator<Item = ((usize, usize), Vector)>, phi: Matrix) -> Result<Self> {
        let n = basis.len();
        let mut alg = HomLieAlgebra { dim: n, basis, consts: vec![zero_vec(n); n * n], phi };
        alg.check_phi_shape()?;
        for ((i, j), v) in brackets {
            if i >= j || j >= n {
                return dim_err(format!("bracket key ({i},{j}) must satisfy i < j < {n}"));
            }
            if v.len() != n {
                return dim_err(format!("bracket ({i},{j}) has a value of length {}", v.len()));
            }
            alg.consts[j * n + i] = v.iter().map(|x| -x).collect();
            alg.consts[i * n + j] = v;
        }
        Ok(alg)
    }

    /// Builds an algebra from the full `n × n` table of brackets (row-major in
    /// `(i, j)`), without imposing antisymmetry.
    pub fn from_table(basis: Vec<String>, table: Vec<Vector>, phi: Matrix) -> Result<Self> {
        let n = basis.len();
        if table.len() != n * n || table.iter().any(|v| v.len() != n) {
            return dim_err(format!("structure-constant table does not have shape {n}x{n}x{n}"));
        }
        let alg = HomLieAlgebra { dim: n, basis, consts: table, phi };
        alg.check_phi_shape()?;
        Ok(alg)
    }

    fn check_phi_shape(&self) -> Result<()> {
        if self.phi.rows() != self.dim || self.phi.cols() != self.dim {
            return dim_err(format!("twist is {}x{} on a {}-dimensional algebra", self.phi.rows(), self.phi.cols(), self.dim));
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis(&self) -> &[String] {
        &self.basis
    }

    pub fn phi(&self) -> &Matrix {
        &self.phi
    }

    pub fn with_phi(&self, phi: Matrix) -> Result<Self> {
        let alg = HomLieAlgebra { phi, ..self.clone() };
        alg.check_phi_shape()?;
        Ok(alg)
    }

    pub fn with_basis(mut self, basis: Vec<String>) -> Result<Self> {
        if basis.len() != self.dim {
            return dim_err("basis label count differs from the dimension");
        }
        self.basis = basis;
        Ok(self)
    }

    pub fn phi_inverse(&self) -> Result<Matrix> {
        self.phi.inverse()
    }

    /// `[e_i, e_j]`
    pub fn bracket_basis(&self, i: usize, j: usize) -> &Vector {
        &self.consts[i * self.dim + j]
    }

    /// Overwrites a single structure constant vector `[e_i, e_j]` without
    /// touching `[e_j, e_i]`.
    pub fn set_bracket_raw(&mut self, i: usize, j: usize, v: Vector) {
        assert_eq!(v.len(), self.dim);
        self.consts[i * self.dim + j] = v;
    }

    /// The `i < j` brackets that are nonzero.
    pub fn nonzero_brackets(&self) -> Vec<((usize, usize), Vector)> {
        let n = self.dim;
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let v = self.bracket_basis(i, j);
                if v.iter().any(|x| !x.is_zero()) {
                    out.push(((i, j), v.clone()));
                }
            }
        }
        out
    }

    /// Whether the stored table is antisymmetric.
    pub fn is_antisymmetric(&self) -> bool {
        let n = self.dim;
        (0..n).all(|i| {
            (0..n).all(|j| self.bracket_basis(i, j).iter().zip(self.bracket_basis(j, i)).all(|(a, b)| (a + b).is_zero()))
        })
    }

    pub fn is_abelian(&self) -> bool {
        self.consts.iter().all(|v| v.iter().all(Zero::is_zero))
    }

    pub(crate) fn br(&self, x: &[Rational], y: &[Rational]) -> Vector {
        let n = self.dim;
        let mut out = zero_vec(n);
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                axpy(&mut out, &(a * b), &self.consts[i * n + j]);
            }
        }
        out
    }

    /// Matrix of `ad_{e_i} = [e_i, ·]`.
    pub fn ad_matrix(&self, i: usize) -> Matrix {
        Matrix::from_fn(self.dim, self.dim, |r, c| self.bracket_basis(i, c)[r].clone())
    }

    /// Matrix of `ad_x` for an arbitrary vector `x`.
    pub fn ad_of(&self, x: &[Rational]) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim).map(|c| self.br(x, &unit_vec(self.dim, c))).collect();
        Matrix::from_columns(&cols, self.dim).expect("square")
    }

    /// Direct sum `self ⊕ other`; the basis of `self` comes first.
    pub fn direct_sum(&self, other: &HomLieAlgebra) -> HomLieAlgebra {
        let (n, m) = (self.dim, other.dim);
        let t = n + m;
        let mut consts = vec![zero_vec(t); t * t];
        for i in 0..n {
            for j in 0..n {
                let mut v = self.bracket_basis(i, j).clone();
                v.extend(zero_vec(m));
                consts[i * t + j] = v;
            }
        }
        for a in 0..m {
            for b in 0..m {
                let mut v = zero_vec(n);
                v.extend(other.bracket_basis(a, b).iter().cloned());
                consts[(n + a) * t + n + b] = v;
            }
        }
        let mut basis = self.basis.clone();
        basis.extend(other.basis.iter().cloned());
        HomLieAlgebra { dim: t, basis, consts, phi: Matrix::block_diag(&self.phi, &other.phi) }
    }

    /// Abelian algebra of dimension `n` with twist `phi`.
    pub fn abelian_with_phi(phi: Matrix) -> Result<Self> {
        let n = phi.rows();
        HomLieAlgebra::new(default_labels(n), std::iter::empty(), phi)
    }

    pub fn abelian(n: usize) -> Self {
        Self::abelian_with_phi(Matrix::identity(n)).expect("square twist")
    }

    /// `sl_2` in the basis `(h, e, f)`: `[h,e] = 2e`, `[h,f] = -2f`, `[e,f] = h`;
    /// the twist is the identity.
    pub fn sl2() -> Self {
        HomLieAlgebra::new(
            vec!["h".into(), "e".into(), "f".into()],
            vec![
                ((0, 1), vec![int(0), int(2), int(0)]),
                ((0, 2), vec![int(0), int(0), int(-2)]),
                ((1, 2), vec![int(1), int(0), int(0)]),
            ],
            Matrix::identity(3),
        )
        .expect("fixture")
    }

    /// Three-dimensional Heisenberg algebra `[x, y] = z`, twist the identity.
    pub fn heisenberg() -> Self {
        HomLieAlgebra::new(
            vec!["x".into(), "y".into(), "z".into()],
            vec![((0, 1), vec![int(0), int(0), int(1)])],
            Matrix::identity(3),
        )
        .expect("fixture")
    }
}

pub fn default_labels(n: usize) -> Vec<String> {
    crate::report::numbered("e", n)
}

/// Bilinear bracket of two coordinate vectors.
pub fn bracket(alg: &HomLieAlgebra, x: &[Rational], y: &[Rational]) -> Result<Vector> {
    if x.len() != alg.dim || y.len() != alg.dim {
        return dim_err(format!(
            "bracket of vectors of lengths {} and {} in a {}-dimensional algebra",
            x.len(),
            y.len(),
            alg.dim
        ));
    }
    Ok(alg.br(x, y))
}

pub const CHECK_ANTISYMMETRY: &str = "antisymmetry";
pub const CHECK_PHI_INVERTIBLE: &str = "phi-invertible";
pub const CHECK_MULTIPLICATIVITY: &str = "multiplicativity";
pub const CHECK_HOM_JACOBI: &str = "hom-jacobi";

/// The Hom-Jacobiator `[φx,[y,z]] + [φy,[z,x]] + [φz,[x,y]]`.
pub fn hom_jacobiator(alg: &HomLieAlgebra, x: &[Rational], y: &[Rational], z: &[Rational]) -> Vector {
    let p = &alg.phi;
    let mut out = alg.br(&p.mul_vec(x), &alg.br(y, z));
    axpy(&mut out, &Rational::one(), &alg.br(&p.mul_vec(y), &alg.br(z, x)));
    axpy(&mut out, &Rational::one(), &alg.br(&p.mul_vec(z), &alg.br(x, y)));
    out
}

/// Checks antisymmetry, invertibility of the twist, multiplicativity and the
/// Hom-Jacobi identity on all basis tuples.
pub fn verify(alg: &HomLieAlgebra) -> CheckReport {
    let n = alg.dim;
    let b = alg.basis.as_slice();
    let mut r = CheckReport::new();

    r.check(CHECK_ANTISYMMETRY, &[b, b], |t| {
        let lhs = alg.bracket_basis(t[0], t[1]).clone();
        let rhs = alg.bracket_basis(t[1], t[0]).iter().map(|x| -x).collect();
        (lhs, rhs)
    });

    let rank = alg.phi.rank();
    r.check(CHECK_PHI_INVERTIBLE, &[], |_| (vec![int(rank as i64)], vec![int(n as i64)]));

    let phi_cols = alg.phi.column_vectors();
    r.check(CHECK_MULTIPLICATIVITY, &[b, b], |t| {
        let lhs = alg.phi.mul_vec(alg.bracket_basis(t[0], t[1]));
        let rhs = alg.br(&phi_cols[t[0]], &phi_cols[t[1]]);
        (lhs, rhs)
    });

    r.check(CHECK_HOM_JACOBI, &[b, b, b], |t| {
        let (x, y, z) = (unit_vec(n, t[0]), unit_vec(n, t[1]), unit_vec(n, t[2]));
        (hom_jacobiator(alg, &x, &y, &z), zero_vec(n))
    });
    r
}

/// Fails with [`Error::Precondition`] unless `alg` passes [`verify`].
pub fn require_valid(alg: &HomLieAlgebra, what: &str) -> Result<()> {
    let rep = verify(alg);
    if rep.passed() {
        Ok(())
    } else {
        Err(Error::Precondition(format!("{what} is not a Hom-Lie algebra (failed: {})", rep.failed_names().join(", "))))
    }
}

/// Checks that `f: src → dst` preserves brackets and intertwines the twists.
pub fn check_morphism(f: &Matrix, src: &HomLieAlgebra, dst: &HomLieAlgebra) -> Result<CheckReport> {
    if f.rows() != dst.dim || f.cols() != src.dim {
        return dim_err(format!("map is {}x{} but must be {}x{}", f.rows(), f.cols(), dst.dim, src.dim));
    }
    let b = src.basis.as_slice();
    let cols = f.column_vectors();
    let mut r = CheckReport::new();
    r.check("bracket-preserving", &[b, b], |t| (f.mul_vec(src.bracket_basis(t[0], t[1])), dst.br(&cols[t[0]], &cols[t[1]])));
    let left = f.mul(&src.phi);
    let right = dst.phi.mul(f);
    r.check("phi-intertwining", &[b], |t| (left.column(t[0]), right.column(t[0])));
    Ok(r)
}

/// The center `{x : [x, e_j] = 0 for all j}`.
pub fn center(alg: &HomLieAlgebra) -> Subspace {
    let n = alg.dim;
    // row (j, k): sum_i x_i c[i][j][k]
    let m = Matrix::from_fn(n * n, n, |row, i| alg.bracket_basis(i, row / n)[row % n].clone());
    m.nullspace()
}

/// Twists a Lie algebra (twist = identity) by a Lie automorphism `psi`:
/// bracket `ψ∘[·,·]`, twist `ψ`.
pub fn yau_twist(lie: &HomLieAlgebra, psi: &Matrix) -> Result<HomLieAlgebra> {
    if lie.phi != Matrix::identity(lie.dim) {
        return Err(Error::Precondition("Yau twist needs an algebra whose twist is the identity".into()));
    }
    require_valid(lie, "input Lie algebra")?;
    if psi.rows() != lie.dim || psi.cols() != lie.dim {
        return dim_err("automorphism has the wrong shape");
    }
    psi.inverse()?;
    let auto = check_morphism(psi, lie, lie)?;
    if !auto.passes("bracket-preserving") {
        return Err(Error::Precondition("twisting map does not preserve the bracket".into()));
    }
    let consts = lie.consts.iter().map(|v| psi.mul_vec(v)).collect();
    Ok(HomLieAlgebra { dim: lie.dim, basis: lie.basis.clone(), consts, phi: psi.clone() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::rat;

    #[test]
    fn sl2_brackets() {
        let g = HomLieAlgebra::sl2();
        let e = unit_vec(3, 1);
        let f = unit_vec(3, 2);
        assert_eq!(bracket(&g, &e, &f).unwrap(), unit_vec(3, 0));
        let x = vec![int(1), rat(2, 3), int(-5)];
        assert_eq!(bracket(&g, &x, &x).unwrap(), zero_vec(3));
        assert!(bracket(&g, &x, &[int(1)]).is_err());
        let a = HomLieAlgebra::abelian(3);
        assert_eq!(bracket(&a, &x, &e).unwrap(), zero_vec(3));
    }

    #[test]
    fn verify_examples() {
        let phi = Matrix::from_i64(3, 3, &[1, 1, 0, 0, 1, 2, 3, 0, 1]);
        assert!(verify(&HomLieAlgebra::abelian_with_phi(phi).unwrap()).passed());
        assert!(verify(&HomLieAlgebra::sl2()).passed());

        let bad = HomLieAlgebra::sl2().with_phi(Matrix::diag(&[int(1), int(2), int(3)])).unwrap();
        let rep = verify(&bad);
        let e = rep.entry(CHECK_MULTIPLICATIVITY).unwrap();
        assert!(!e.passed);
        let cx = e.counterexample.as_ref().unwrap();
        assert_eq!(cx.labels, vec!["e", "f"]);
        assert_eq!(cx.lhs, vec![int(1), int(0), int(0)]);
        assert_eq!(cx.rhs, vec![int(6), int(0), int(0)]);
        assert!(rep.passes(CHECK_ANTISYMMETRY));
        assert!(rep.passes(CHECK_PHI_INVERTIBLE));
    }

    #[test]
    fn singular_twist_is_reported() {
        let a = HomLieAlgebra::abelian_with_phi(Matrix::zeros(2, 2)).unwrap();
        let rep = verify(&a);
        assert!(!rep.passes(CHECK_PHI_INVERTIBLE));
        assert!(rep.passes(CHECK_HOM_JACOBI));
    }

    #[test]
    fn morphism_examples() {
        let g = HomLieAlgebra::sl2();
        let h = HomLieAlgebra::heisenberg();
        assert!(check_morphism(&Matrix::identity(3), &g, &g).unwrap().passed());
        assert!(check_morphism(&Matrix::zeros(3, 3), &g, &h).unwrap().passed());
        let t = yau_twist(&g, &Matrix::diag(&[int(1), int(2), rat(1, 2)])).unwrap();
        assert!(check_morphism(t.phi(), &t, &t).unwrap().passed());
        assert!(check_morphism(&Matrix::identity(2), &g, &h).is_err());
    }

    #[test]
    fn center_examples() {
        assert_eq!(center(&HomLieAlgebra::abelian(4)), Subspace::full(4));
        assert_eq!(center(&HomLieAlgebra::sl2()).dim(), 0);
        let s = HomLieAlgebra::sl2().direct_sum(&HomLieAlgebra::abelian(1));
        let c = center(&s);
        assert_eq!(c, Subspace::span(4, &[unit_vec(4, 3)]).unwrap());
        assert_eq!(center(&HomLieAlgebra::heisenberg()), Subspace::span(3, &[unit_vec(3, 2)]).unwrap());
    }

    #[test]
    fn yau_twist_examples() {
        let g = HomLieAlgebra::sl2();
        assert_eq!(yau_twist(&g, &Matrix::identity(3)).unwrap(), g);

        let t = yau_twist(&g, &Matrix::diag(&[int(1), int(2), rat(1, 2)])).unwrap();
        assert_eq!(t.bracket_basis(0, 1), &vec![int(0), int(4), int(0)]);
        assert_eq!(t.bracket_basis(0, 2), &vec![int(0), int(0), int(-1)]);
        assert_eq!(t.bracket_basis(1, 2), &vec![int(1), int(0), int(0)]);
        assert!(verify(&t).passed());

        let psi = Matrix::from_i64(2, 2, &[2, 1, 1, 1]);
        let a = yau_twist(&HomLieAlgebra::abelian(2), &psi).unwrap();
        assert!(a.is_abelian());
        assert_eq!(a.phi(), &psi);

        assert!(yau_twist(&g, &Matrix::diag(&[int(1), int(2), int(3)])).is_err());
        assert!(yau_twist(&g, &Matrix::zeros(3, 3)).is_err());
        assert!(yau_twist(&t, &Matrix::identity(3)).is_err());
    }
}
