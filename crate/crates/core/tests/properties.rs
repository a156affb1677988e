//! Randomized identities, each checked with exact arithmetic.

use proptest::prelude::*;

use homlie_kit::alt::AltMap;
use homlie_kit::deriv::{check_gl_homlie, derivation_space, is_derivation, GlContext};
use homlie_kit::dghla::{differential, graded_bracket, DghlaContext};
use homlie_kit::exactlin::{format_rational, int, parse_rational, rat, Matrix, Rational};
use homlie_kit::extensions::{
    build_extension, check_cocycle, check_iso_witness, extract_cocycle, forward_equivalent, intertwiner_basis, IsoWitness,
};
use homlie_kit::fixtures::{self, heisenberg_automorphism, sl2_swap, sl2_unipotent};
use homlie_kit::homlie::{verify, yau_twist, HomLieAlgebra};
use homlie_kit::io;
use homlie_kit::repcoh::{adjoint, coboundary, Representation};

fn small() -> impl Strategy<Value = Rational> {
    (-4i64..=4, 1i64..=3).prop_map(|(n, d)| rat(n, d))
}

fn nonzero() -> impl Strategy<Value = Rational> {
    small().prop_filter("nonzero", |q| q != &int(0))
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(small(), rows * cols).prop_map(move |v| Matrix::from_flat(rows, cols, v).unwrap())
}

fn invertible(n: usize) -> impl Strategy<Value = Matrix> {
    matrix(n, n).prop_filter("invertible", move |m| m.rank() == n)
}

/// Yau twists of sl₂ and Heisenberg by random automorphisms.
fn twisted_algebra() -> impl Strategy<Value = HomLieAlgebra> {
    prop_oneof![
        (nonzero(), small(), any::<bool>()).prop_map(|(q, t, swap)| {
            let mut psi = Matrix::diag(&[int(1), q.clone(), q.recip()]).mul(&sl2_unipotent(&t));
            if swap {
                psi = psi.mul(&sl2_swap());
            }
            yau_twist(&HomLieAlgebra::sl2(), &psi).unwrap()
        }),
        (invertible(2), small(), small()).prop_map(|(a, u, v)| {
            let mut psi = heisenberg_automorphism(&a);
            psi.set(2, 0, u);
            psi.set(2, 1, v);
            yau_twist(&HomLieAlgebra::heisenberg(), &psi).unwrap()
        }),
    ]
}

fn cochain(arity: usize, n: usize, m: usize) -> impl Strategy<Value = AltMap> {
    let len = homlie_kit::alt::binomial(n, arity) * m;
    prop::collection::vec(small(), len).prop_map(move |c| AltMap::from_coords(arity, n, m, &c).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rationals_round_trip(p in -1000i64..1000, q in 1i64..1000) {
        let r = rat(p, q);
        prop_assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r);
    }

    #[test]
    fn rref_is_idempotent_and_kernel_is_exact(m in matrix(3, 4)) {
        let r = m.rref();
        prop_assert_eq!(r.rref(), r.clone());
        for v in m.nullspace().basis_vectors() {
            prop_assert!(m.mul_vec(&v).iter().all(|x| x == &int(0)));
        }
        prop_assert_eq!(m.rank() + m.nullspace().dim(), 4);
    }

    #[test]
    fn inverse_is_two_sided(m in invertible(3)) {
        let inv = m.inverse().unwrap();
        prop_assert_eq!(m.mul(&inv), Matrix::identity(3));
        prop_assert_eq!(inv.mul(&m), Matrix::identity(3));
    }

    #[test]
    fn alternating_maps_flip_sign(f in cochain(3, 4, 2)) {
        for (i, j, k) in [(0, 1, 2), (1, 2, 3), (0, 2, 3)] {
            let a = f.value_at(&[i, j, k]);
            let b: Vec<Rational> = f.value_at(&[j, i, k]).into_iter().map(|x| -x).collect();
            prop_assert_eq!(a, b);
            prop_assert!(f.value_at(&[i, i, k]).iter().all(|x| x == &int(0)));
        }
    }

    #[test]
    fn twists_verify(a in twisted_algebra()) {
        prop_assert!(verify(&a).passed());
    }

    #[test]
    fn algebra_json_round_trips(a in twisted_algebra()) {
        let text = io::algebra_json(&a).to_string();
        prop_assert_eq!(io::from_str_with(&text, "p", |n, _| io::algebra_of(n)).unwrap(), a);
    }

    #[test]
    fn coboundary_squares_to_zero(a in twisted_algebra(), c1 in cochain(1, 3, 3), c2 in cochain(2, 3, 3)) {
        let ad = adjoint(&a);
        for c in [c1, c2] {
            let dd = coboundary(&ad, &coboundary(&ad, &c).unwrap()).unwrap();
            prop_assert!(dd.is_zero());
        }
    }

    #[test]
    fn coboundary_squares_to_zero_for_trivial_modules(a in twisted_algebra(), beta in invertible(2), c in cochain(1, 3, 2)) {
        let rep = Representation::new(a, vec![Matrix::zeros(2, 2); 3], beta).unwrap();
        let dd = coboundary(&rep, &coboundary(&rep, &c).unwrap()).unwrap();
        prop_assert!(dd.is_zero());
    }

    #[test]
    fn inner_maps_and_twisted_commutators_are_derivations(a in twisted_algebra(), x in prop::collection::vec(small(), 3)) {
        prop_assert!(is_derivation(&a, &a.ad_of(&x)).unwrap());
        let der = derivation_space(&a).unwrap();
        let gl = GlContext::new(a.phi().clone()).unwrap();
        let b = der.basis_matrices();
        let c = gl.gl_bracket(&b[0], &b[b.len() - 1]).unwrap();
        prop_assert!(der.contains(&c));
        prop_assert!(der.contains(&gl.ad_conjugate(&b[0]).unwrap()));
    }

    #[test]
    fn gl_is_hom_lie(beta in invertible(2)) {
        prop_assert!(check_gl_homlie(&GlContext::new(beta).unwrap()).passed());
    }

    #[test]
    fn graded_antisymmetry(a in twisted_algebra(), p in cochain(1, 3, 3), q in cochain(2, 3, 3), r in cochain(2, 3, 3)) {
        let ctx = DghlaContext::single(&a).unwrap();
        // degrees 0 and 1: [P, Q] = −[Q, P]
        let pq = graded_bracket(&ctx, &p, &q).unwrap();
        prop_assert_eq!(pq, graded_bracket(&ctx, &q, &p).unwrap().scale(&int(-1)));
        // degrees 1 and 1: [Q, R] = [R, Q]
        prop_assert_eq!(graded_bracket(&ctx, &q, &r).unwrap(), graded_bracket(&ctx, &r, &q).unwrap());
        let dd = differential(&ctx, &differential(&ctx, &q).unwrap()).unwrap();
        prop_assert!(dd.is_zero());
    }

    #[test]
    fn forward_equivalents_are_valid_and_witnessed(idx in 0usize..14, coeffs in prop::collection::vec(small(), 12)) {
        let (_, c2) = fixtures::base_cocycles().swap_remove(idx);
        let basis = intertwiner_basis(&c2.g, &c2.h);
        prop_assume!(!basis.is_empty());
        let mut x = Matrix::zeros(c2.h.dim(), c2.g.dim());
        for (b, k) in basis.iter().zip(coeffs.iter().cycle()) {
            x = x.add(&b.scale(k));
        }
        let c1 = forward_equivalent(&c2, &x).unwrap();
        prop_assert!(check_cocycle(&c1).unwrap().passed());
        let witness = IsoWitness { phitheta: x };
        prop_assert!(check_iso_witness(&witness, &c1, &c2).unwrap().passed());
    }

    #[test]
    fn extraction_inverts_extension(idx in 0usize..14) {
        let (_, c) = fixtures::base_cocycles().swap_remove(idx);
        let (_, e, s) = build_extension(&c).unwrap();
        prop_assert_eq!(extract_cocycle(&e, &s, &c.g, &c.h).unwrap(), c);
    }

    #[test]
    fn cocycle_json_round_trips(idx in 0usize..14) {
        let (_, c) = fixtures::base_cocycles().swap_remove(idx);
        let text = io::cocycle_json(&c).to_string();
        prop_assert_eq!(io::from_str_with(&text, "c", io::cocycle_of).unwrap(), c);
    }
}
