//! Deterministic test corpus: small Lie algebras, their Yau twists, and
//! valid or deliberately broken non-abelian cocycles.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::alt::AltMap;
use crate::exactlin::{int, rat, Matrix, Rational};
use crate::extensions::{forward_equivalent, intertwiner_basis, CocyclePair, ExtensionPresentation};
use crate::homlie::{yau_twist, HomLieAlgebra};
use crate::homlie2::{check_homlie2, HomLie2Algebra};

pub const DEFAULT_SEED: u64 = 0x5eed_2024;

/// A nonzero rational with small numerator and denominator.
pub fn small_rational(rng: &mut impl Rng) -> Rational {
    let n = *[-3i64, -2, -1, 1, 2, 3].choose(rng).expect("nonempty");
    rat(n, rng.gen_range(1..=3))
}

/// A rational in `[-2, 2]`, possibly zero.
pub fn small_rational_or_zero(rng: &mut impl Rng) -> Rational {
    rat(rng.gen_range(-2..=2), rng.gen_range(1..=2))
}

pub fn random_matrix(rng: &mut impl Rng, rows: usize, cols: usize) -> Matrix {
    Matrix::from_fn(rows, cols, |_, _| small_rational_or_zero(rng))
}

/// `h ↦ h − 2t e`, `e ↦ e`, `f ↦ f + t h − t² e`, i.e. `exp(t ad_e)` on sl₂.
pub fn sl2_unipotent(t: &Rational) -> Matrix {
    let mut m = Matrix::identity(3);
    m.set(1, 0, int(-2) * t);
    m.set(0, 2, t.clone());
    m.set(1, 2, -(t * t));
    m
}

/// `e ↔ f`, `h ↦ −h`.
pub fn sl2_swap() -> Matrix {
    Matrix::from_i64(3, 3, &[-1, 0, 0, 0, 0, 1, 0, 1, 0])
}

/// `A` on `span{x, y}`, `z ↦ det(A) z`.
pub fn heisenberg_automorphism(a: &Matrix) -> Matrix {
    let det = a.get(0, 0) * a.get(1, 1) - a.get(0, 1) * a.get(1, 0);
    let mut m = Matrix::zeros(3, 3);
    for r in 0..2 {
        for c in 0..2 {
            m.set(r, c, a.get(r, c).clone());
        }
    }
    m.set(2, 2, det);
    m
}

pub fn sl2_plus_line() -> HomLieAlgebra {
    HomLieAlgebra::sl2().direct_sum(&HomLieAlgebra::abelian(1))
}

pub fn twisted_sl2(q: &Rational) -> HomLieAlgebra {
    yau_twist(&HomLieAlgebra::sl2(), &Matrix::diag(&[int(1), q.clone(), q.recip()])).expect("diagonal automorphism")
}

/// `sl₂` with the non-multiplicative twist `diag(1,2,3)`.
pub fn sl2_badphi() -> HomLieAlgebra {
    HomLieAlgebra::sl2().with_phi(Matrix::diag(&[int(1), int(2), int(3)])).expect("3x3")
}

/// Yau twists of sl₂, Heisenberg and sl₂ ⊕ F by random automorphisms.
pub fn random_twists(seed: u64, count: usize) -> Vec<(String, HomLieAlgebra)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    let mut i = 0;
    while out.len() < count {
        let q = small_rational(&mut rng);
        let (name, alg) = match i % 5 {
            0 => ("sl2-diag", yau_twist(&HomLieAlgebra::sl2(), &Matrix::diag(&[int(1), q.clone(), q.recip()]))),
            1 => {
                let t = small_rational(&mut rng);
                let psi = Matrix::diag(&[int(1), q.clone(), q.recip()]).mul(&sl2_unipotent(&t));
                let psi = if rng.gen_bool(0.5) { psi.mul(&sl2_swap()) } else { psi };
                ("sl2-mixed", yau_twist(&HomLieAlgebra::sl2(), &psi))
            }
            2 => {
                let b = small_rational(&mut rng);
                let a = Matrix::diag(&[q.clone(), b]);
                ("heisenberg-diag", yau_twist(&HomLieAlgebra::heisenberg(), &heisenberg_automorphism(&a)))
            }
            3 => {
                let a = loop {
                    let a = random_matrix(&mut rng, 2, 2);
                    if a.rank() == 2 {
                        break a;
                    }
                };
                let mut psi = heisenberg_automorphism(&a);
                // z-components of the images of x and y keep ψ an automorphism
                psi.set(2, 0, small_rational_or_zero(&mut rng));
                psi.set(2, 1, small_rational_or_zero(&mut rng));
                ("heisenberg-gl2", yau_twist(&HomLieAlgebra::heisenberg(), &psi))
            }
            _ => {
                let s = small_rational(&mut rng);
                let psi = Matrix::block_diag(&Matrix::diag(&[int(1), q.clone(), q.recip()]), &Matrix::diag(&[s]));
                ("sl2-plus-line", yau_twist(&sl2_plus_line(), &psi))
            }
        };
        i += 1;
        let alg = alg.expect("fixture automorphisms are valid");
        out.push((format!("{name}-{}", out.len()), alg));
    }
    out
}

/// abelian(1..3), sl₂, Heisenberg, sl₂ ⊕ F and 24 random Yau twists.
pub fn corpus_algebras() -> Vec<(String, HomLieAlgebra)> {
    let mut v = vec![
        ("abelian-1".to_string(), HomLieAlgebra::abelian(1)),
        ("abelian-2".to_string(), HomLieAlgebra::abelian(2)),
        ("abelian-3".to_string(), HomLieAlgebra::abelian(3)),
        ("abelian-2-twisted".to_string(), HomLieAlgebra::abelian_with_phi(Matrix::from_i64(2, 2, &[2, 1, 0, 1])).expect("2x2")),
        ("sl2".to_string(), HomLieAlgebra::sl2()),
        ("heisenberg".to_string(), HomLieAlgebra::heisenberg()),
        ("sl2-plus-line".to_string(), sl2_plus_line()),
    ];
    v.extend(random_twists(DEFAULT_SEED, 24));
    v
}

/// `g = h = F`, `ρ = (1)`: the affine line algebra.
pub fn affine_line() -> CocyclePair {
    let a = HomLieAlgebra::abelian(1);
    CocyclePair::new(a.clone(), a, vec![Matrix::identity(1)], AltMap::zero(2, 1, 1)).expect("shapes")
}

/// `g` acting on `h` by `ρ = ad`, where `h` is `g` itself or the abelian
/// algebra on the same space and twist.
pub fn adjoint_cocycle(g: &HomLieAlgebra, abelian_target: bool) -> CocyclePair {
    let h = if abelian_target { HomLieAlgebra::abelian_with_phi(g.phi().clone()).expect("square") } else { g.clone() };
    let rho = (0..g.dim()).map(|i| g.ad_matrix(i)).collect();
    CocyclePair::new(g.clone(), h, rho, AltMap::zero(2, g.dim(), g.dim())).expect("shapes")
}

/// Central extension of `abelian(2)` with twist `diag(a, b)` by `F` with twist `ab`.
pub fn central_extension(a: &Rational, b: &Rational) -> CocyclePair {
    let g = HomLieAlgebra::abelian_with_phi(Matrix::diag(&[a.clone(), b.clone()])).expect("2x2");
    let h = HomLieAlgebra::abelian_with_phi(Matrix::diag(&[a * b])).expect("1x1");
    let mut omega = AltMap::zero(2, 2, 1);
    omega.set(&[0, 1], vec![int(1)]).expect("in range");
    CocyclePair::new(g, h, vec![Matrix::zeros(1, 1); 2], omega).expect("shapes")
}

/// Hand-built valid cocycles.
pub fn base_cocycles() -> Vec<(String, CocyclePair)> {
    let sl2 = HomLieAlgebra::sl2();
    let heis = HomLieAlgebra::heisenberg();
    let tw = twisted_sl2(&int(2));
    let tw_heis = yau_twist(&heis, &heisenberg_automorphism(&Matrix::diag(&[int(2), rat(-1, 3)]))).expect("automorphism");
    vec![
        ("direct-sl2-line".into(), CocyclePair::zero(&sl2, &HomLieAlgebra::abelian(1))),
        ("direct-plane-heisenberg".into(), CocyclePair::zero(&HomLieAlgebra::abelian(2), &heis)),
        ("direct-line-sl2".into(), CocyclePair::zero(&HomLieAlgebra::abelian(1), &sl2)),
        ("direct-twisted".into(), CocyclePair::zero(&tw, &tw_heis)),
        ("affine-line".into(), affine_line()),
        ("semidirect-sl2".into(), adjoint_cocycle(&sl2, true)),
        ("semidirect-heisenberg".into(), adjoint_cocycle(&heis, true)),
        ("semidirect-twisted-sl2".into(), adjoint_cocycle(&tw, true)),
        ("semidirect-twisted-heisenberg".into(), adjoint_cocycle(&tw_heis, true)),
        ("adjoint-heisenberg".into(), adjoint_cocycle(&heis, false)),
        ("adjoint-sl2".into(), adjoint_cocycle(&sl2, false)),
        ("adjoint-twisted-sl2".into(), adjoint_cocycle(&tw, false)),
        ("central-plane".into(), central_extension(&int(1), &int(1))),
        ("central-plane-twisted".into(), central_extension(&int(2), &rat(1, 3))),
    ]
}

/// `(c1, c2, φ_θ)` with `c1` forward-generated from `c2` through a random intertwiner.
pub fn equivalent_pairs(seed: u64) -> Vec<(String, CocyclePair, CocyclePair, Matrix)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for (name, c2) in base_cocycles() {
        let basis = intertwiner_basis(&c2.g, &c2.h);
        if basis.is_empty() {
            continue;
        }
        let (m, n) = (c2.h.dim(), c2.g.dim());
        let mut x = Matrix::zeros(m, n);
        for b in &basis {
            x = x.add(&b.scale(&small_rational_or_zero(&mut rng)));
        }
        if x.is_zero() {
            x = basis[0].clone();
        }
        let c1 = forward_equivalent(&c2, &x).expect("intertwiner");
        out.push((format!("{name}-equivalent"), c1, c2, x));
    }
    out
}

/// Base cocycles plus one forward-generated partner of each.
pub fn valid_cocycles() -> Vec<(String, CocyclePair)> {
    let mut v = base_cocycles();
    v.extend(equivalent_pairs(DEFAULT_SEED).into_iter().map(|(n, c1, _, _)| (n, c1)));
    v
}

/// One cocycle per identity, each violating exactly that identity.
pub fn targeted_mutations() -> Vec<(String, &'static str, CocyclePair)> {
    let ab = HomLieAlgebra::abelian;
    let abw = |d: &[i64]| {
        HomLieAlgebra::abelian_with_phi(Matrix::diag(&d.iter().map(|&x| int(x)).collect::<Vec<_>>())).expect("square")
    };
    let e = |m: usize, r: usize, c: usize| {
        let mut x = Matrix::zeros(m, m);
        x.set(r, c, int(1));
        x
    };
    let mut om = AltMap::zero(2, 2, 1);
    om.set(&[0, 1], vec![int(1)]).expect("in range");
    let p1 = CocyclePair::new(abw(&[1, 2]), ab(1), vec![Matrix::zeros(1, 1); 2], om).expect("shapes");
    let p2 = CocyclePair::new(ab(1), abw(&[1, 2]), vec![e(2, 0, 1)], AltMap::zero(2, 1, 2)).expect("shapes");
    let p3 = CocyclePair::new(ab(1), HomLieAlgebra::sl2(), vec![Matrix::identity(3)], AltMap::zero(2, 1, 3)).expect("shapes");
    let p4 = CocyclePair::new(ab(2), ab(2), vec![e(2, 0, 1), e(2, 1, 0)], AltMap::zero(2, 2, 2)).expect("shapes");
    let mut om5 = AltMap::zero(2, 3, 1);
    om5.set(&[1, 2], vec![int(1)]).expect("in range");
    let p5 =
        CocyclePair::new(ab(3), ab(1), vec![Matrix::identity(1), Matrix::zeros(1, 1), Matrix::zeros(1, 1)], om5).expect("shapes");
    vec![
        ("break-omega-equivariance".into(), "omega-equivariance", p1),
        ("break-rho-equivariance".into(), "rho-equivariance", p2),
        ("break-rho-derivation".into(), "rho-derivation", p3),
        ("break-rho-bracket-defect".into(), "rho-bracket-defect", p4),
        ("break-omega-cyclic".into(), "omega-cyclic", p5),
    ]
}

/// Valid cocycles with one random entry of `ρ` or `ω` perturbed.
pub fn random_perturbations(seed: u64) -> Vec<(String, CocyclePair)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    base_cocycles()
        .into_iter()
        .map(|(name, mut c)| {
            let (n, m) = (c.g.dim(), c.h.dim());
            if n >= 2 && rng.gen_bool(0.5) {
                let i = rng.gen_range(0..n - 1);
                let j = rng.gen_range(i + 1..n);
                let mut v = c.omega.value_at(&[i, j]);
                let a = rng.gen_range(0..m);
                v[a] += small_rational(&mut rng);
                c.omega.set(&[i, j], v).expect("in range");
            } else {
                let i = rng.gen_range(0..n);
                let (r, col) = (rng.gen_range(0..m), rng.gen_range(0..m));
                let v = c.rho[i].get(r, col) + small_rational(&mut rng);
                c.rho[i].set(r, col, v);
            }
            (format!("{name}-perturbed"), c)
        })
        .collect()
}

/// `ĝ = F²` with the Jordan-block twist, `h` the first coordinate: not diagonal.
pub fn jordan_presentation() -> (ExtensionPresentation, HomLieAlgebra, HomLieAlgebra) {
    let ghat = HomLieAlgebra::abelian_with_phi(Matrix::from_i64(2, 2, &[1, 1, 0, 1])).expect("2x2");
    let e = ExtensionPresentation { ghat, iota: Matrix::from_i64(2, 1, &[1, 0]), p: Matrix::from_i64(1, 2, &[0, 1]) };
    (e, HomLieAlgebra::abelian(1), HomLieAlgebra::abelian(1))
}

/// Single-condition corruptions of a 2-algebra, each tagged with the
/// condition it is meant to break. `v` should be strict with `dim0 ≥ 4`,
/// `dim1 ≥ 1` and non-abelian `l₂`. When `dim0 = 3` the four-argument
/// `l3-coherence` identity cannot fail, because alternating 4-forms on `V₀` vanish.
pub fn homlie2_mutations(v: &HomLie2Algebra) -> Vec<(&'static str, HomLie2Algebra)> {
    let n0 = v.dim0;
    let mut a = v.clone();
    // make l2 fail skew-symmetry on the diagonal
    a.l2_00[0] = a.l2_00[0].iter().enumerate().map(|(i, x)| if i == 0 { x + int(1) } else { x.clone() }).collect();
    let mut b = v.clone();
    b.l2_01 = b.l2_01.iter().map(|w| w.iter().map(|x| -x).collect()).collect();
    let mut c = v.clone();
    c.phi0 = c.phi0.scale(&int(2));
    let mut l3 = AltMap::zero(3, n0, v.dim1);
    let mut e0 = vec![int(0); v.dim1];
    e0[0] = int(1);
    l3.set(&[0, 1, 2], e0).expect("in range");
    let mut d = v.clone();
    d.l3 = l3;
    let mut e = v.clone();
    e.l2_01 = e.l2_01.iter().map(|w| w.iter().map(|x| x * int(2)).collect()).collect();
    let f = elementary_l3_candidates(v)
        .into_iter()
        .find(|c| check_homlie2(c).is_ok_and(|r| !r.passes("l3-coherence")))
        .unwrap_or_else(|| d.clone());
    vec![
        ("l2-antisymmetry", a),
        ("d-compatibility", b),
        ("l2-multiplicativity", c),
        ("jacobiator-d", d),
        ("jacobiator-l3", e),
        ("l3-coherence", f),
    ]
}

/// Applies `ψ` to every structure constant and installs it as the twist,
/// without checking anything. Used to build twisted but broken algebras.
fn raw_twist(alg: &HomLieAlgebra, psi: &Matrix) -> HomLieAlgebra {
    let n = alg.dim();
    let table = (0..n * n).map(|k| psi.mul_vec(alg.bracket_basis(k / n, k % n))).collect();
    HomLieAlgebra::from_table(alg.basis().to_vec(), table, psi.clone()).expect("square")
}

/// Antisymmetric, multiplicative brackets that violate Hom-Jacobi.
pub fn jacobi_breakers() -> Vec<(String, HomLieAlgebra)> {
    // sl₂ with [h, e] = 3e: still graded by h, so diagonal scalings stay automorphisms
    let sl2_bad = HomLieAlgebra::new(
        vec!["h".into(), "e".into(), "f".into()],
        [((0, 1), vec![int(0), int(3), int(0)]), ((0, 2), vec![int(0), int(0), int(-2)]), ((1, 2), vec![int(1), int(0), int(0)])],
        Matrix::identity(3),
    )
    .expect("3-dimensional");
    // Heisenberg with [x, z] = x added; diag(a, 1/a, 1) preserves it
    let heis_bad = HomLieAlgebra::new(
        vec!["x".into(), "y".into(), "z".into()],
        [((0, 1), vec![int(0), int(0), int(1)]), ((0, 2), vec![int(1), int(0), int(0)])],
        Matrix::identity(3),
    )
    .expect("3-dimensional");
    let mut v = vec![("sl2-bad-jacobi".to_string(), sl2_bad.clone()), ("heisenberg-bad-jacobi".to_string(), heis_bad.clone())];
    for q in [int(2), rat(-1, 3), rat(3, 2)] {
        let psi = Matrix::diag(&[int(1), q.clone(), q.recip()]);
        v.push((format!("sl2-bad-jacobi-twisted-{q}"), raw_twist(&sl2_bad, &psi)));
        let psi = Matrix::diag(&[q.clone(), q.recip(), int(1)]);
        v.push((format!("heisenberg-bad-jacobi-twisted-{q}"), raw_twist(&heis_bad, &psi)));
    }
    v
}

fn elementary_l3_candidates(v: &HomLie2Algebra) -> Vec<HomLie2Algebra> {
    let n = crate::alt::binomial(v.dim0, 3) * v.dim1;
    (0..n)
        .map(|k| {
            let mut c = v.clone();
            c.l3 = AltMap::elementary(3, v.dim0, v.dim1, k);
            c
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extensions::check_cocycle;
    use crate::homlie::verify;

    #[test]
    fn corpus_is_valid_and_small() {
        let c = corpus_algebras();
        assert!(c.len() >= 30);
        for (name, a) in &c {
            assert!(a.dim() <= 4, "{name}");
            assert!(verify(a).passed(), "{name}");
        }
        let twisted = c.iter().filter(|(_, a)| a.phi() != &Matrix::identity(a.dim())).count();
        assert!(twisted >= 20);
    }

    #[test]
    fn homlie2_mutations_break_their_condition() {
        let v = crate::homlie2::build_der2(&sl2_plus_line()).unwrap();
        assert_eq!(v.dim0, 4);
        for (cond, m) in homlie2_mutations(&v) {
            let rep = crate::homlie2::check_homlie2(&m).unwrap();
            eprintln!("{cond}: {:?}", rep.failed_names());
            assert!(!rep.passes(cond), "{cond}");
        }
    }

    #[test]
    fn jacobi_breakers_break_only_jacobi() {
        for (name, a) in jacobi_breakers() {
            assert_eq!(verify(&a).failed_names(), vec!["hom-jacobi"], "{name}");
        }
    }

    #[test]
    fn cocycle_corpus_verdicts() {
        for (name, c) in valid_cocycles() {
            assert!(check_cocycle(&c).unwrap().passed(), "{name}");
        }
        for (name, which, c) in targeted_mutations() {
            let rep = check_cocycle(&c).unwrap();
            assert_eq!(rep.failed_names(), vec![which], "{name}");
        }
    }
}
