//! Two-term Hom-Lie 2-algebras `V₁ → V₀`, their morphisms and 2-morphisms,
//! and the derivation 2-algebra `DER(h)`.
//!
//! Brackets are stored only where the grading allows them: `l₂` on
//! `V₀ × V₀ → V₀` and `V₀ × V₁ → V₁`; `l₂(m, x)` is defined as `−l₂(x, m)`
//! and `l₂` on `V₁ × V₁` is absent.

use num_traits::Zero;

use crate::alt::AltMap;
use crate::deriv::{der_algebra_from, derivation_space, DerivationSpace};
use crate::error::{dim_err, Error, Result};
use crate::exactlin::{add_vec, axpy, sub_vec, zero_vec, Matrix, Rational, Vector};
use crate::homlie::{require_valid, HomLieAlgebra};
use crate::report::{numbered, CheckReport};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomLie2Algebra {
    pub dim1: usize,
    pub dim0: usize,
    /// `dim0 × dim1`
    pub d: Matrix,
    /// `l₂(e_i, e_j)` at `i·dim0 + j`, in `V₀`.
    pub l2_00: Vec<Vector>,
    /// `l₂(e_i, m_a)` at `i·dim1 + a`, in `V₁`.
    pub l2_01: Vec<Vector>,
    pub l3: AltMap,
    pub phi0: Matrix,
    pub phi1: Matrix,
}

fn bilinear(table: &[Vector], cols: usize, out_dim: usize, x: &[Rational], y: &[Rational]) -> Vector {
    let mut out = zero_vec(out_dim);
    for (i, xi) in x.iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        for (j, yj) in y.iter().enumerate() {
            if yj.is_zero() {
                continue;
            }
            axpy(&mut out, &(xi * yj), &table[i * cols + j]);
        }
    }
    out
}

impl HomLie2Algebra {
    pub fn check_shapes(&self) -> Result<()> {
        let (n1, n0) = (self.dim1, self.dim0);
        let bad = |what: &str| dim_err(format!("{what} does not match dim1 = {n1}, dim0 = {n0}"));
        if self.d.rows() != n0 || self.d.cols() != n1 {
            return bad("d");
        }
        if self.l2_00.len() != n0 * n0 || self.l2_00.iter().any(|v| v.len() != n0) {
            return bad("l2_00");
        }
        if self.l2_01.len() != n0 * n1 || self.l2_01.iter().any(|v| v.len() != n1) {
            return bad("l2_01");
        }
        if self.l3.arity() != 3 || self.l3.src_dim() != n0 || self.l3.tgt_dim() != n1 {
            return bad("l3");
        }
        if self.phi0.rows() != n0 || self.phi0.cols() != n0 {
            return bad("phi0");
        }
        if self.phi1.rows() != n1 || self.phi1.cols() != n1 {
            return bad("phi1");
        }
        Ok(())
    }

    /// `V₁ = 0`, `V₀ = g`, `l₂ = [·,·]_g`, `l₃ = 0`, `φ₀ = φ_g`.
    pub fn from_algebra(g: &HomLieAlgebra) -> HomLie2Algebra {
        let n = g.dim();
        let l2_00 = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).map(|(i, j)| g.bracket_basis(i, j).clone()).collect();
        HomLie2Algebra {
            dim1: 0,
            dim0: n,
            d: Matrix::zeros(n, 0),
            l2_00,
            l2_01: Vec::new(),
            l3: AltMap::zero(3, n, 0),
            phi0: g.phi().clone(),
            phi1: Matrix::zeros(0, 0),
        }
    }

    pub fn is_strict(&self) -> bool {
        self.l3.is_zero()
    }

    /// `l₂(x, y)` for `x, y ∈ V₀`.
    pub fn l2_xy(&self, x: &[Rational], y: &[Rational]) -> Vector {
        bilinear(&self.l2_00, self.dim0, self.dim0, x, y)
    }

    /// `l₂(x, m)` for `x ∈ V₀`, `m ∈ V₁`.
    pub fn l2_xm(&self, x: &[Rational], m: &[Rational]) -> Vector {
        bilinear(&self.l2_01, self.dim1, self.dim1, x, m)
    }

    /// `l₂(m, x) = −l₂(x, m)`.
    pub fn l2_mx(&self, m: &[Rational], x: &[Rational]) -> Vector {
        self.l2_xm(x, m).into_iter().map(|v| -v).collect()
    }

    pub fn l3_xyz(&self, x: &[Rational], y: &[Rational], z: &[Rational]) -> Vector {
        if self.l3.is_zero() {
            return zero_vec(self.dim1);
        }
        self.l3.eval(&[x, y, z])
    }
}

fn cols(m: &Matrix) -> Vec<Vector> {
    m.column_vectors()
}

fn sum3(a: Vector, b: Vector, c: Vector) -> Vector {
    add_vec(&add_vec(&a, &b), &c)
}

pub const CHECK_PHI_D: &str = "phi0-d-intertwining";
pub const CHECK_L3_EQUIVARIANCE: &str = "l3-equivariance";

/// The standing conditions plus the six structural identities, each over all
/// basis tuples.
pub fn check_homlie2(v: &HomLie2Algebra) -> Result<CheckReport> {
    v.check_shapes()?;
    let b0 = numbered("x", v.dim0);
    let b1 = numbered("m", v.dim1);
    let e0 = cols(&Matrix::identity(v.dim0));
    let e1 = cols(&Matrix::identity(v.dim1));
    let p0 = cols(&v.phi0);
    let p1 = cols(&v.phi1);
    let dm = cols(&v.d);
    let strict = v.is_strict();
    let mut r = CheckReport::new();

    r.check(CHECK_PHI_D, &[&b1], |t| (v.phi0.mul_vec(&dm[t[0]]), v.d.mul_vec(&p1[t[0]])));
    r.check(CHECK_L3_EQUIVARIANCE, &[&b0, &b0, &b0], |t| {
        if strict {
            return (Vec::new(), Vec::new());
        }
        let (x, y, z) = (t[0], t[1], t[2]);
        (v.l3_xyz(&p0[x], &p0[y], &p0[z]), v.phi1.mul_vec(&v.l3_xyz(&e0[x], &e0[y], &e0[z])))
    });

    r.check("l2-antisymmetry", &[&b0, &b0], |t| {
        (v.l2_00[t[0] * v.dim0 + t[1]].clone(), v.l2_00[t[1] * v.dim0 + t[0]].iter().map(|q| -q).collect())
    });

    let mut b_parts = CheckReport::new();
    b_parts.check("d-l2", &[&b0, &b1], |t| {
        let (x, m) = (&e0[t[0]], &e1[t[1]]);
        (v.d.mul_vec(&v.l2_xm(x, m)), v.l2_xy(x, &dm[t[1]]))
    });
    let mut b_parts2 = CheckReport::new();
    b_parts2.check("l2-d", &[&b1, &b1], |t| (v.l2_xm(&dm[t[0]], &e1[t[1]]), v.l2_mx(&e1[t[0]], &dm[t[1]])));
    r.check_all("d-compatibility", vec![b_parts, b_parts2]);

    let mut c1 = CheckReport::new();
    c1.check("c0", &[&b0, &b0], |t| (v.phi0.mul_vec(&v.l2_xy(&e0[t[0]], &e0[t[1]])), v.l2_xy(&p0[t[0]], &p0[t[1]])));
    let mut c2 = CheckReport::new();
    c2.check("c1", &[&b0, &b1], |t| (v.phi1.mul_vec(&v.l2_xm(&e0[t[0]], &e1[t[1]])), v.l2_xm(&p0[t[0]], &p1[t[1]])));
    r.check_all("l2-multiplicativity", vec![c1, c2]);

    r.check("jacobiator-d", &[&b0, &b0, &b0], |t| {
        let (x, y, z) = (&e0[t[0]], &e0[t[1]], &e0[t[2]]);
        let (px, py, pz) = (&p0[t[0]], &p0[t[1]], &p0[t[2]]);
        let rhs = sum3(v.l2_xy(px, &v.l2_xy(y, z)), v.l2_xy(py, &v.l2_xy(z, x)), v.l2_xy(pz, &v.l2_xy(x, y)));
        (v.d.mul_vec(&v.l3_xyz(x, y, z)), rhs)
    });

    r.check("jacobiator-l3", &[&b0, &b0, &b1], |t| {
        let (x, y, m) = (&e0[t[0]], &e0[t[1]], &e1[t[2]]);
        let rhs =
            sum3(v.l2_xm(&p0[t[0]], &v.l2_xm(y, m)), v.l2_xm(&p0[t[1]], &v.l2_mx(m, x)), v.l2_mx(&p1[t[2]], &v.l2_xy(x, y)));
        (v.l3_xyz(x, y, &dm[t[2]]), rhs)
    });

    if strict {
        // every term of the coherence identity is linear in l3
        r.push_pass("l3-coherence");
    } else {
        let pp0 = cols(&v.phi0.mul(&v.phi0));
        r.check("l3-coherence", &[&b0, &b0, &b0, &b0], |t| {
            let (w, x, y, z) = (&e0[t[0]], &e0[t[1]], &e0[t[2]], &e0[t[3]]);
            let (pw, px, py, pz) = (&p0[t[0]], &p0[t[1]], &p0[t[2]], &p0[t[3]]);
            let (ppw, ppx, ppy, ppz) = (&pp0[t[0]], &pp0[t[1]], &pp0[t[2]], &pp0[t[3]]);
            let lhs = [
                v.l3_xyz(&v.l2_xy(w, x), py, pz),
                v.l2_mx(&v.l3_xyz(w, x, z), ppy),
                v.l3_xyz(pw, &v.l2_xy(x, z), py),
                v.l3_xyz(&v.l2_xy(w, z), px, py),
            ];
            let rhs = [
                v.l2_mx(&v.l3_xyz(w, x, y), ppz),
                v.l3_xyz(&v.l2_xy(w, y), px, pz),
                v.l3_xyz(pw, &v.l2_xy(x, y), pz),
                v.l2_xm(ppw, &v.l3_xyz(x, y, z)),
                v.l2_mx(&v.l3_xyz(w, y, z), ppx),
                v.l3_xyz(pw, &v.l2_xy(y, z), px),
            ];
            let total = |terms: &[Vector]| terms.iter().fold(zero_vec(v.dim1), |acc, t| add_vec(&acc, t));
            (total(&lhs), total(&rhs))
        });
    }
    Ok(r)
}

/// `DER(h)` together with the derivation basis used for `V₀`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Der2 {
    pub algebra: HomLie2Algebra,
    pub der: DerivationSpace,
}

impl Der2 {
    /// `Der(h)`-coordinates of a derivation; `None` if it is not one.
    pub fn coordinates(&self, d: &Matrix) -> Option<Vector> {
        self.der.coordinates(d)
    }

    pub fn derivation(&self, coords: &[Rational]) -> Matrix {
        self.der.from_coordinates(coords)
    }
}

/// `h → Der(h)` with `d = ad`, `l₂(D₁,D₂) = [D₁,D₂]_φ`, `l₂(D,u) = D(u)`,
/// `l₃ = 0`, `φ₀ = Ad_φ`, `φ₁ = φ_h`.
pub fn build_der2(h: &HomLieAlgebra) -> Result<HomLie2Algebra> {
    Ok(der2_with_basis(h)?.algebra)
}

pub fn der2_with_basis(h: &HomLieAlgebra) -> Result<Der2> {
    require_valid(h, "algebra")?;
    let der = derivation_space(h)?;
    let dalg = der_algebra_from(&der)?;
    let n = h.dim();
    let k = der.dim();
    let basis = &dalg.basis;
    let d_cols = (0..n)
        .map(|u| der.coordinates(&h.ad_matrix(u)).ok_or_else(|| Error::Internal("an adjoint map is not a derivation".into())))
        .collect::<Result<Vec<_>>>()?;
    let d = Matrix::from_columns(&d_cols, k)?;
    let l2_00 = (0..k * k).map(|ij| dalg.algebra.bracket_basis(ij / k, ij % k).clone()).collect();
    let l2_01 = (0..k * n).map(|iu| basis[iu / n].column(iu % n)).collect();
    let algebra = HomLie2Algebra {
        dim1: n,
        dim0: k,
        d,
        l2_00,
        l2_01,
        l3: AltMap::zero(3, k, n),
        phi0: dalg.algebra.phi().clone(),
        phi1: h.phi().clone(),
    };
    Ok(Der2 { algebra, der })
}

/// `(f₀, f₁, f₂)` between two 2-algebras.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoAlgMorphism {
    pub f0: Matrix,
    pub f1: Matrix,
    pub f2: AltMap,
}

impl TwoAlgMorphism {
    pub fn identity(v: &HomLie2Algebra) -> TwoAlgMorphism {
        TwoAlgMorphism { f0: Matrix::identity(v.dim0), f1: Matrix::identity(v.dim1), f2: AltMap::zero(2, v.dim0, v.dim1) }
    }

    pub fn zero(src: &HomLie2Algebra, dst: &HomLie2Algebra) -> TwoAlgMorphism {
        TwoAlgMorphism {
            f0: Matrix::zeros(dst.dim0, src.dim0),
            f1: Matrix::zeros(dst.dim1, src.dim1),
            f2: AltMap::zero(2, src.dim0, dst.dim1),
        }
    }

    fn check_shapes(&self, src: &HomLie2Algebra, dst: &HomLie2Algebra) -> Result<()> {
        src.check_shapes()?;
        dst.check_shapes()?;
        if self.f0.rows() != dst.dim0 || self.f0.cols() != src.dim0 {
            return dim_err("f0 must map V0 to V0'");
        }
        if self.f1.rows() != dst.dim1 || self.f1.cols() != src.dim1 {
            return dim_err("f1 must map V1 to V1'");
        }
        if self.f2.arity() != 2 || self.f2.src_dim() != src.dim0 || self.f2.tgt_dim() != dst.dim1 {
            return dim_err("f2 must be an alternating map V0 x V0 -> V1'");
        }
        Ok(())
    }
}

pub const CHECK_CHAIN_MAP: &str = "chain-map";
pub const CHECK_F0_EQUIVARIANCE: &str = "f0-equivariance";
pub const CHECK_F1_EQUIVARIANCE: &str = "f1-equivariance";
pub const CHECK_F2_EQUIVARIANCE: &str = "f2-equivariance";
pub const CHECK_F2_BRACKET: &str = "f2-bracket-defect";
pub const CHECK_F2_D: &str = "f2-d-defect";
pub const CHECK_COHERENCE: &str = "coherence";

pub fn check_2alg_morphism(f: &TwoAlgMorphism, src: &HomLie2Algebra, dst: &HomLie2Algebra) -> Result<CheckReport> {
    f.check_shapes(src, dst)?;
    let b0 = numbered("x", src.dim0);
    let b1 = numbered("m", src.dim1);
    let e0 = cols(&Matrix::identity(src.dim0));
    let e1 = cols(&Matrix::identity(src.dim1));
    let f0x = cols(&f.f0);
    let f0px = cols(&f.f0.mul(&src.phi0));
    let p0 = cols(&src.phi0);
    let mut r = CheckReport::new();
    r.check(CHECK_CHAIN_MAP, &[&b1], |t| (f.f0.mul_vec(&src.d.column(t[0])), dst.d.mul_vec(&f.f1.column(t[0]))));
    r.check(CHECK_F0_EQUIVARIANCE, &[&b0], |t| (f0px[t[0]].clone(), dst.phi0.mul_vec(&f0x[t[0]])));
    r.check(CHECK_F1_EQUIVARIANCE, &[&b1], |t| (f.f1.mul_vec(&src.phi1.column(t[0])), dst.phi1.mul_vec(&f.f1.column(t[0]))));
    r.check(CHECK_F2_EQUIVARIANCE, &[&b0, &b0], |t| {
        (f.f2.eval(&[&p0[t[0]], &p0[t[1]]]), dst.phi1.mul_vec(&f.f2.value_at(&[t[0], t[1]])))
    });
    r.check(CHECK_F2_BRACKET, &[&b0, &b0], |t| {
        let (x, y) = (t[0], t[1]);
        let lhs = dst.d.mul_vec(&f.f2.value_at(&[x, y]));
        let rhs = sub_vec(&f.f0.mul_vec(&src.l2_xy(&e0[x], &e0[y])), &dst.l2_xy(&f0x[x], &f0x[y]));
        (lhs, rhs)
    });
    r.check(CHECK_F2_D, &[&b0, &b1], |t| {
        let (x, m) = (t[0], t[1]);
        let lhs = f.f2.eval(&[&e0[x], &src.d.column(m)]);
        let rhs = sub_vec(&f.f1.mul_vec(&src.l2_xm(&e0[x], &e1[m])), &dst.l2_xm(&f0x[x], &f.f1.column(m)));
        (lhs, rhs)
    });
    r.check(CHECK_COHERENCE, &[&b0, &b0, &b0], |t| {
        let (x, y, z) = (t[0], t[1], t[2]);
        let f2 = |a: usize, b: usize| f.f2.value_at(&[a, b]);
        let mut lhs = sum3(dst.l2_xm(&f0px[x], &f2(y, z)), dst.l2_xm(&f0px[y], &f2(z, x)), dst.l2_xm(&f0px[z], &f2(x, y)));
        lhs = add_vec(&lhs, &dst.l3_xyz(&f0x[x], &f0x[y], &f0x[z]));
        let f2v = |a: usize, b: usize, c: usize| f.f2.eval(&[&src.l2_xy(&e0[a], &e0[b]), &p0[c]]);
        let mut rhs = sum3(f2v(x, y, z), f2v(y, z, x), f2v(z, x, y));
        rhs = add_vec(&rhs, &f.f1.mul_vec(&src.l3_xyz(&e0[x], &e0[y], &e0[z])));
        (lhs, rhs)
    });
    Ok(r)
}

/// A chain homotopy `τ: V₀ → V₁'`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomotopyData {
    pub tau: Matrix,
}

pub const CHECK_TAU_EQUIVARIANCE: &str = "tau-equivariance";
pub const CHECK_HOMOTOPY_0: &str = "chain-homotopy-0";
pub const CHECK_HOMOTOPY_1: &str = "chain-homotopy-1";
pub const CHECK_F2_DIFFERENCE: &str = "f2-difference";

/// Checks that `τ` is a 2-morphism `f ⇒ g`, with `g₀ − f₀ = d'∘τ` and
/// `g₁ − f₁ = τ∘d`.
pub fn check_homotopy(
    tau: &HomotopyData,
    f: &TwoAlgMorphism,
    g: &TwoAlgMorphism,
    src: &HomLie2Algebra,
    dst: &HomLie2Algebra,
) -> Result<CheckReport> {
    for (name, m) in [("f", f), ("g", g)] {
        let rep = check_2alg_morphism(m, src, dst)?;
        if !rep.passed() {
            return Err(Error::Precondition(format!("{name} is not a morphism: {} fails", rep.failed_names().join(", "))));
        }
    }
    let t = &tau.tau;
    if t.rows() != dst.dim1 || t.cols() != src.dim0 {
        return dim_err("tau must map V0 to V1'");
    }
    let b0 = numbered("x", src.dim0);
    let b1 = numbered("m", src.dim1);
    let tx = cols(t);
    let p0 = cols(&src.phi0);
    let e0 = cols(&Matrix::identity(src.dim0));
    let mut r = CheckReport::new();
    r.check(CHECK_TAU_EQUIVARIANCE, &[&b0], |i| (dst.phi1.mul_vec(&tx[i[0]]), t.mul_vec(&p0[i[0]])));
    r.check(CHECK_HOMOTOPY_0, &[&b0], |i| (sub_vec(&g.f0.column(i[0]), &f.f0.column(i[0])), dst.d.mul_vec(&tx[i[0]])));
    r.check(CHECK_HOMOTOPY_1, &[&b1], |i| (sub_vec(&g.f1.column(i[0]), &f.f1.column(i[0])), t.mul_vec(&src.d.column(i[0]))));
    r.check(CHECK_F2_DIFFERENCE, &[&b0, &b0], |i| {
        let (x, y) = (i[0], i[1]);
        let lhs = sub_vec(&f.f2.value_at(&[x, y]), &g.f2.value_at(&[x, y]));
        let rhs = sub_vec(
            &add_vec(&dst.l2_mx(&tx[x], &f.f0.column(y)), &dst.l2_xm(&g.f0.column(x), &tx[y])),
            &t.mul_vec(&src.l2_xy(&e0[x], &e0[y])),
        );
        (lhs, rhs)
    });
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{int, rat};
    use crate::homlie::yau_twist;

    #[test]
    fn algebras_embed_with_trivial_v1() {
        for g in [HomLieAlgebra::sl2(), HomLieAlgebra::heisenberg(), HomLieAlgebra::abelian(2)] {
            assert!(check_homlie2(&HomLie2Algebra::from_algebra(&g)).unwrap().passed());
        }
    }

    #[test]
    fn der2_of_abelian_line() {
        let v = build_der2(&HomLieAlgebra::abelian(1)).unwrap();
        assert_eq!((v.dim0, v.dim1), (1, 1));
        assert!(v.d.is_zero());
        assert_eq!(v.l2_xm(&[int(3)], &[int(2)]), vec![int(6)]);
        assert!(check_homlie2(&v).unwrap().passed());
    }

    #[test]
    fn der2_ranks() {
        let s = build_der2(&HomLieAlgebra::sl2()).unwrap();
        assert_eq!((s.dim0, s.dim1, s.d.rank()), (3, 3, 3));
        assert!(check_homlie2(&s).unwrap().passed());
        let h = build_der2(&HomLieAlgebra::heisenberg()).unwrap();
        assert_eq!(h.d.rank(), 2);
        assert!(check_homlie2(&h).unwrap().passed());
        let tw = yau_twist(&HomLieAlgebra::sl2(), &Matrix::diag(&[int(1), int(3), rat(1, 3)])).unwrap();
        assert!(check_homlie2(&build_der2(&tw).unwrap()).unwrap().passed());
    }

    #[test]
    fn flipped_evaluation_sign_is_caught() {
        let mut v = build_der2(&HomLieAlgebra::sl2()).unwrap();
        for x in &mut v.l2_01 {
            for q in x.iter_mut() {
                *q = -q.clone();
            }
        }
        let rep = check_homlie2(&v).unwrap();
        assert!(!rep.passes("d-compatibility") || !rep.passes("jacobiator-l3"));
    }

    #[test]
    fn identity_and_zero_morphisms() {
        let v = build_der2(&HomLieAlgebra::heisenberg()).unwrap();
        assert!(check_2alg_morphism(&TwoAlgMorphism::identity(&v), &v, &v).unwrap().passed());
        let g = HomLie2Algebra::from_algebra(&HomLieAlgebra::sl2());
        assert!(check_2alg_morphism(&TwoAlgMorphism::zero(&g, &v), &g, &v).unwrap().passed());
    }

    #[test]
    fn homotopy_examples() {
        let v = build_der2(&HomLieAlgebra::sl2()).unwrap();
        let g = HomLie2Algebra::from_algebra(&HomLieAlgebra::abelian(1));
        let zero = TwoAlgMorphism::zero(&g, &v);
        let tau0 = HomotopyData { tau: Matrix::zeros(3, 1) };
        assert!(check_homotopy(&tau0, &zero, &zero, &g, &v).unwrap().passed());

        // f₀ = 0 and g₀ = d(e): τ = e works, τ = 0 fails the chain condition
        let mut other = zero.clone();
        other.f0 = Matrix::from_columns(&[v.d.column(1)], 3).unwrap();
        assert!(check_2alg_morphism(&other, &g, &v).unwrap().passed());
        let rep = check_homotopy(&tau0, &zero, &other, &g, &v).unwrap();
        assert!(!rep.passes(CHECK_HOMOTOPY_0));
        let tau = HomotopyData { tau: Matrix::from_i64(3, 1, &[0, 1, 0]) };
        assert!(check_homotopy(&tau, &zero, &other, &g, &v).unwrap().passed());
    }
}
