//! Derivations, inner derivations, and the outer quotient Der/Inn.

use homlie_kit::deriv::{check_derivation_identities, der_algebra, derivation_space, inner_space, outer_data};
use homlie_kit::homlie::{verify, HomLieAlgebra};

pub fn main() {
    for (name, alg) in [("sl2", HomLieAlgebra::sl2()), ("heisenberg", HomLieAlgebra::heisenberg())] {
        let der = derivation_space(&alg).unwrap();
        let inn = inner_space(&alg).unwrap();
        let out = outer_data(&alg).unwrap();
        println!("{name}: dim Der = {}, dim Inn = {}, dim Out = {}", der.dim(), inn.dim(), out.dim);

        let ids = check_derivation_identities(&alg).unwrap();
        assert!(ids.passed());

        // Der(g) is itself a Hom-Lie algebra with twist Ad_φ
        let d = der_algebra(&alg).unwrap();
        assert!(verify(&d.algebra).passed());
        for (i, m) in d.basis.iter().enumerate().take(2) {
            println!(
                "  D{i} = {:?}",
                m.row_vectors().iter().map(|r| r.iter().map(|q| q.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>()
            );
        }
    }
}
