//! The graded Hom-Lie algebra of cochains `C(L, L)` with the circle product
//! over unshuffles, `Ad_φ`, the differential `∂ = ±[μ, ·]`, and the
//! Maurer–Cartan test for packed cocycles on `g ⊕ h`.
//!
//! A cochain of arity `k` has degree `k − 1`. Cochains are [`AltMap`]s on the
//! ambient space with values in the ambient space; the restricted cochains
//! `C_>` keep only `h`-valued components that do not vanish identically on
//! the `g` directions.

use num_traits::{One, Zero};

use crate::alt::{unshuffles, AltMap};
use crate::error::{dim_err, Error, Result};
use crate::exactlin::{axpy, rat, zero_vec, Matrix, Rational, Vector};
use crate::extensions::CocyclePair;
use crate::homlie::{require_valid, HomLieAlgebra};
use crate::report::CheckReport;

pub type GradedCochain = AltMap;

/// Highest cochain arity accepted.
pub const MAX_ARITY: usize = 4;

/// Sign convention for `∂P = ±[μ, P]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DifferentialSign {
    /// `(−1)^{k+1}` with `k` the arity.
    Arity,
    /// `(−1)^{k+1}` with `k` the degree, i.e. `(−1)^{arity}`; the default.
    Degree,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DghlaContext {
    ambient: HomLieAlgebra,
    phi_inv_cols: Vec<Vector>,
    mu: GradedCochain,
    /// Dimension of the `g` block in a direct-sum context.
    split: Option<usize>,
}

impl DghlaContext {
    pub fn single(alg: &HomLieAlgebra) -> Result<Self> {
        Self::build(alg.clone(), None)
    }

    /// `g ⊕ h` with `[x+u, y+v] = [x,y]_g + [u,v]_h`.
    pub fn direct_sum(g: &HomLieAlgebra, h: &HomLieAlgebra) -> Result<Self> {
        Self::build(g.direct_sum(h), Some(g.dim()))
    }

    fn build(ambient: HomLieAlgebra, split: Option<usize>) -> Result<Self> {
        require_valid(&ambient, "ambient algebra")?;
        let n = ambient.dim();
        let phi_inv_cols = ambient.phi_inverse()?.column_vectors();
        let mu = AltMap::from_fn(2, n, n, |t| ambient.bracket_basis(t[0], t[1]).clone());
        Ok(DghlaContext { ambient, phi_inv_cols, mu, split })
    }

    pub fn ambient(&self) -> &HomLieAlgebra {
        &self.ambient
    }

    pub fn mu(&self) -> &GradedCochain {
        &self.mu
    }

    pub fn dim(&self) -> usize {
        self.ambient.dim()
    }

    pub fn split(&self) -> Option<usize> {
        self.split
    }

    fn check(&self, p: &GradedCochain) -> Result<()> {
        let n = self.dim();
        if p.src_dim() != n || p.tgt_dim() != n {
            return dim_err(format!(
                "cochain on F^{} with values in F^{} does not live on the {n}-dimensional ambient algebra",
                p.src_dim(),
                p.tgt_dim()
            ));
        }
        if p.arity() == 0 || p.arity() > MAX_ARITY {
            return Err(Error::Degree(p.arity()));
        }
        Ok(())
    }

    fn phi_inv(&self, v: &[Rational]) -> Vector {
        let mut out = zero_vec(self.dim());
        for (i, c) in v.iter().enumerate() {
            if !c.is_zero() {
                axpy(&mut out, c, &self.phi_inv_cols[i]);
            }
        }
        out
    }
}

fn sign_of(s: i32) -> Rational {
    if s > 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// `P∘Q`, summed over `(q+1, p)`-unshuffles with their permutation signs.
pub fn circle(ctx: &DghlaContext, p: &GradedCochain, q: &GradedCochain) -> Result<GradedCochain> {
    ctx.check(p)?;
    ctx.check(q)?;
    let (ap, aq) = (p.arity(), q.arity());
    let k = ap + aq - 1;
    if k > MAX_ARITY {
        return Err(Error::Degree(k));
    }
    let n = ctx.dim();
    let shuffles = unshuffles(aq, ap - 1);
    let phi = ctx.ambient.phi();
    Ok(AltMap::from_fn(k, n, n, |xs| {
        let args: Vec<&Vector> = xs.iter().map(|&x| &ctx.phi_inv_cols[x]).collect();
        let mut acc = zero_vec(n);
        for (perm, s) in &shuffles {
            let q_args: Vec<&[Rational]> = perm[..aq].iter().map(|&i| args[i].as_slice()).collect();
            let inner = q.eval(&q_args);
            if inner.iter().all(Zero::is_zero) {
                continue;
            }
            let inner = ctx.phi_inv(&inner);
            let mut p_args: Vec<&[Rational]> = vec![&inner];
            p_args.extend(perm[aq..].iter().map(|&i| args[i].as_slice()));
            axpy(&mut acc, &sign_of(*s), &p.eval(&p_args));
        }
        phi.mul_vec(&acc)
    }))
}

/// `[P, Q] = P∘Q − (−1)^{pq} Q∘P` with `p, q` the degrees.
pub fn graded_bracket(ctx: &DghlaContext, p: &GradedCochain, q: &GradedCochain) -> Result<GradedCochain> {
    let pq = circle(ctx, p, q)?;
    let qp = circle(ctx, q, p)?;
    let (dp, dq) = (p.arity() - 1, q.arity() - 1);
    Ok(if (dp * dq) % 2 == 0 { pq.sub(&qp) } else { pq.add(&qp) })
}

/// `(Ad_φ P)(x…) = φ P(φ⁻¹x…)`.
pub fn ad_phi_cochain(ctx: &DghlaContext, p: &GradedCochain) -> Result<GradedCochain> {
    ctx.check(p)?;
    let n = ctx.dim();
    let phi = ctx.ambient.phi();
    Ok(AltMap::from_fn(p.arity(), n, n, |xs| {
        let args: Vec<&[Rational]> = xs.iter().map(|&x| ctx.phi_inv_cols[x].as_slice()).collect();
        phi.mul_vec(&p.eval(&args))
    }))
}

pub fn differential_with(ctx: &DghlaContext, p: &GradedCochain, sign: DifferentialSign) -> Result<GradedCochain> {
    let b = graded_bracket(ctx, &ctx.mu, p)?;
    let k = match sign {
        DifferentialSign::Arity => p.arity(),
        DifferentialSign::Degree => p.arity() - 1,
    };
    Ok(if k % 2 == 1 { b } else { b.scale(&-Rational::one()) })
}

/// `∂P = (−1)^{arity}[μ, P]`.
pub fn differential(ctx: &DghlaContext, p: &GradedCochain) -> Result<GradedCochain> {
    differential_with(ctx, p, DifferentialSign::Degree)
}

fn split_of(ctx: &DghlaContext) -> Result<usize> {
    ctx.split.ok_or_else(|| Error::Precondition("this operation needs a direct-sum context".into()))
}

/// Projects onto the `h` block of the target and drops the part supported on `∧^k h`.
pub fn restrict_gt(ctx: &DghlaContext, p: &GradedCochain) -> Result<GradedCochain> {
    ctx.check(p)?;
    let n = split_of(ctx)?;
    let big = ctx.dim();
    Ok(AltMap::from_fn(p.arity(), big, big, |t| {
        if t.iter().all(|&i| i >= n) {
            return zero_vec(big);
        }
        let mut v = p.value_sorted(t).clone();
        for x in v.iter_mut().take(n) {
            *x = Rational::zero();
        }
        v
    }))
}

pub fn is_restricted(ctx: &DghlaContext, p: &GradedCochain) -> Result<bool> {
    Ok(&restrict_gt(ctx, p)? == p)
}

/// `α(x+u, y+v) = ω(x,y) + ρ_x v − ρ_y u` on `g ⊕ h`.
pub fn pack_cocycle(c: &CocyclePair) -> Result<GradedCochain> {
    c.check_shapes()?;
    let (n, m) = (c.g.dim(), c.h.dim());
    let big = n + m;
    Ok(AltMap::from_fn(2, big, big, |t| {
        let (i, j) = (t[0], t[1]);
        let mut v = zero_vec(n);
        if j < n {
            v.extend(c.omega.value_at(&[i, j]));
        } else if i < n {
            v.extend(c.rho[i].column(j - n));
        } else {
            v.extend(zero_vec(m));
        }
        v
    }))
}

/// Inverse of [`pack_cocycle`] on the `g∧g` and `g∧h` blocks.
pub fn unpack_cocycle(alpha: &GradedCochain, g: &HomLieAlgebra, h: &HomLieAlgebra) -> Result<CocyclePair> {
    let (n, m) = (g.dim(), h.dim());
    if alpha.arity() != 2 || alpha.src_dim() != n + m || alpha.tgt_dim() != n + m {
        return dim_err("a packed cocycle is a 2-cochain on g ⊕ h");
    }
    let tail = |v: Vector| v[n..].to_vec();
    let rho = (0..n)
        .map(|i| {
            let cols: Vec<Vector> = (0..m).map(|a| tail(alpha.value_at(&[i, n + a]))).collect();
            Matrix::from_columns(&cols, m)
        })
        .collect::<Result<Vec<_>>>()?;
    let omega = AltMap::from_fn(2, n, m, |t| tail(alpha.value_sorted(t).clone()));
    CocyclePair::new(g.clone(), h.clone(), rho, omega)
}

pub const CHECK_FLATNESS: &str = "flatness";
pub const CHECK_INVARIANCE: &str = "invariance";

pub fn mc_check(ctx: &DghlaContext, alpha: &GradedCochain) -> Result<CheckReport> {
    mc_check_with(ctx, alpha, DifferentialSign::Degree)
}

/// `∂α + ½[α, α] = 0` and `Ad_φ α = α` for a restricted 2-cochain.
pub fn mc_check_with(ctx: &DghlaContext, alpha: &GradedCochain, sign: DifferentialSign) -> Result<CheckReport> {
    ctx.check(alpha)?;
    if alpha.arity() != 2 {
        return Err(Error::Degree(alpha.arity()));
    }
    if !is_restricted(ctx, alpha)? {
        return Err(Error::Precondition("alpha is not a restricted cochain".into()));
    }
    let flat = differential_with(ctx, alpha, sign)?.add(&graded_bracket(ctx, alpha, alpha)?.scale(&rat(1, 2)));
    let twisted = ad_phi_cochain(ctx, alpha)?;
    let labels = ctx.ambient.basis().to_vec();
    let zero = zero_vec(ctx.dim());
    let mut r = CheckReport::new();
    r.check(CHECK_FLATNESS, &[&labels, &labels, &labels], |t| (flat.value_at(t), zero.clone()));
    r.check(CHECK_INVARIANCE, &[&labels, &labels], |t| (twisted.value_at(t), alpha.value_at(t)));
    Ok(r)
}

/// `∂` and `[·,·]` keep restricted cochains restricted.
pub fn check_restriction_closure(ctx: &DghlaContext, p: &GradedCochain, q: &GradedCochain) -> Result<CheckReport> {
    let (p, q) = (restrict_gt(ctx, p)?, restrict_gt(ctx, q)?);
    let mut r = CheckReport::new();
    let mut record = |name: &str, c: GradedCochain| -> Result<()> {
        let rc = restrict_gt(ctx, &c)?;
        if rc == c {
            r.push_pass(name);
        } else {
            let tuple = c.tuples().into_iter().find(|t| c.value_sorted(t) != rc.value_sorted(t)).expect("differs");
            let labels = tuple.iter().map(|&i| ctx.ambient.basis()[i].clone()).collect();
            let cx = crate::report::Counterexample {
                lhs: c.value_sorted(&tuple).clone(),
                rhs: rc.value_sorted(&tuple).clone(),
                indices: tuple,
                labels,
            };
            r.push_fail(name, cx);
        }
        Ok(())
    };
    if p.arity() < MAX_ARITY {
        record("differential-closure", differential(ctx, &p)?)?;
    }
    if p.arity() + q.arity() - 1 <= MAX_ARITY {
        record("bracket-closure", graded_bracket(ctx, &p, &q)?)?;
    }
    Ok(r)
}

/// The arity-1 cochain `x ↦ A x`.
pub fn matrix_cochain(a: &Matrix) -> GradedCochain {
    crate::deriv::matrix_to_cochain(a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::deriv::{cochain_to_matrix, GlContext};
    use crate::exactlin::int;
    use crate::extensions::check_cocycle;

    fn twisted_plane() -> HomLieAlgebra {
        HomLieAlgebra::abelian_with_phi(Matrix::from_i64(2, 2, &[2, 1, 0, 1])).unwrap()
    }

    #[test]
    fn circle_on_one_cochains_is_twisted_composition() {
        let g = twisted_plane();
        let ctx = DghlaContext::single(&g).unwrap();
        let a = Matrix::from_i64(2, 2, &[1, 2, 0, -1]);
        let b = Matrix::from_i64(2, 2, &[0, 1, 3, 1]);
        let got = cochain_to_matrix(&circle(&ctx, &matrix_cochain(&a), &matrix_cochain(&b)).unwrap());
        let inv = g.phi_inverse().unwrap();
        assert_eq!(got, g.phi().mul(&a).mul(&inv).mul(&b).mul(&inv));
        let zero = AltMap::zero(1, 2, 2);
        assert!(circle(&ctx, &zero, &matrix_cochain(&b)).unwrap().is_zero());
    }

    #[test]
    fn bracket_of_one_cochains_matches_gl() {
        let g = twisted_plane();
        let ctx = DghlaContext::single(&g).unwrap();
        let gl = GlContext::new(g.phi().clone()).unwrap();
        let a = Matrix::from_i64(2, 2, &[1, 2, 0, -1]);
        let b = Matrix::from_i64(2, 2, &[0, 1, 3, 1]);
        let got = cochain_to_matrix(&graded_bracket(&ctx, &matrix_cochain(&a), &matrix_cochain(&b)).unwrap());
        assert_eq!(got, gl.gl_bracket(&a, &b).unwrap());
    }

    #[test]
    fn odd_self_bracket_doubles() {
        let ctx = DghlaContext::single(&HomLieAlgebra::sl2()).unwrap();
        let mu = ctx.mu().clone();
        let pp = circle(&ctx, &mu, &mu).unwrap();
        assert_eq!(graded_bracket(&ctx, &mu, &mu).unwrap(), pp.scale(&int(2)));
        // the bracket satisfies Hom-Jacobi, so [μ, μ] = 0
        assert!(pp.is_zero());
        assert!(differential(&ctx, &mu).unwrap().is_zero());
    }

    #[test]
    fn ad_phi_examples() {
        let g = twisted_plane();
        let ctx = DghlaContext::single(&g).unwrap();
        let a = Matrix::from_i64(2, 2, &[1, 2, 0, -1]);
        let gl = GlContext::new(g.phi().clone()).unwrap();
        let got = cochain_to_matrix(&ad_phi_cochain(&ctx, &matrix_cochain(&a)).unwrap());
        assert_eq!(got, gl.ad_conjugate(&a).unwrap());
        let s = DghlaContext::single(&HomLieAlgebra::heisenberg()).unwrap();
        assert_eq!(&ad_phi_cochain(&s, s.mu()).unwrap(), s.mu());
    }

    #[test]
    fn restriction() {
        let g = HomLieAlgebra::abelian(1);
        let h = HomLieAlgebra::heisenberg();
        let ctx = DghlaContext::direct_sum(&g, &h).unwrap();
        assert!(restrict_gt(&ctx, ctx.mu()).unwrap().is_zero());
        let c = CocyclePair::new(g.clone(), h.clone(), vec![h.ad_matrix(0)], AltMap::zero(2, 1, 3)).unwrap();
        let alpha = pack_cocycle(&c).unwrap();
        assert!(is_restricted(&ctx, &alpha).unwrap());
        assert_eq!(unpack_cocycle(&alpha, &g, &h).unwrap(), c);
        assert!(DghlaContext::single(&g).and_then(|s| restrict_gt(&s, s.mu())).is_err());
    }

    #[test]
    fn affine_line_packs_to_single_value() {
        let a = HomLieAlgebra::abelian(1);
        let c = CocyclePair::new(a.clone(), a.clone(), vec![Matrix::identity(1)], AltMap::zero(2, 1, 1)).unwrap();
        let alpha = pack_cocycle(&c).unwrap();
        assert_eq!(alpha.value_at(&[0, 1]), vec![int(0), int(1)]);
        let ctx = DghlaContext::direct_sum(&a, &a).unwrap();
        assert!(mc_check(&ctx, &alpha).unwrap().passed());
        assert!(check_cocycle(&c).unwrap().passed());
    }

    #[test]
    fn literal_arity_sign_disagrees_on_semidirect_sl2() {
        let g = HomLieAlgebra::sl2();
        let h = HomLieAlgebra::abelian(3);
        let rho = (0..3).map(|i| g.ad_matrix(i)).collect();
        let c = CocyclePair::new(g.clone(), h.clone(), rho, AltMap::zero(2, 3, 3)).unwrap();
        assert!(check_cocycle(&c).unwrap().passed());
        let ctx = DghlaContext::direct_sum(&g, &h).unwrap();
        let alpha = pack_cocycle(&c).unwrap();
        assert!(mc_check(&ctx, &alpha).unwrap().passed());
        assert!(!mc_check_with(&ctx, &alpha, DifferentialSign::Arity).unwrap().passes(CHECK_FLATNESS));
    }
}
