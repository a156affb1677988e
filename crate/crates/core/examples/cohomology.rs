//! Twisted cohomology of the adjoint representation, degree by degree.

use homlie_kit::exactlin::int;
use homlie_kit::fixtures::twisted_sl2;
use homlie_kit::homlie::HomLieAlgebra;
use homlie_kit::repcoh::{adjoint, check_representation, coboundary_matrix, cohomology};

pub fn main() {
    let algebras = [
        ("sl2", HomLieAlgebra::sl2()),
        ("heisenberg", HomLieAlgebra::heisenberg()),
        ("sl2 twisted by diag(1,3,1/3)", twisted_sl2(&int(3))),
    ];
    for (name, alg) in algebras {
        let ad = adjoint(&alg);
        assert!(check_representation(&ad).expect("valid algebra").passed());
        let dims: Vec<usize> = (0..=3).map(|k| cohomology(&ad, k).expect("k <= 4").dim).collect();
        println!("{name}: dim H^0..H^3 = {dims:?}");

        // d∘d vanishes on every basis cochain
        for k in 0..=2 {
            let dd = coboundary_matrix(&ad, k + 1).unwrap().mul(&coboundary_matrix(&ad, k).unwrap());
            assert!(dd.is_zero());
        }
    }
}
