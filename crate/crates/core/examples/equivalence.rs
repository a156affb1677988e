//! Equivalent cocycles, their isomorphism witness, and the matching homotopy.

use homlie_kit::extensions::{
    check_iso_witness, forward_equivalent, homotopy_to_iso, intertwiner_basis, iso_to_homotopy, IsoWitness,
};
use homlie_kit::fixtures::adjoint_cocycle;
use homlie_kit::homlie::HomLieAlgebra;

pub fn main() {
    let c2 = adjoint_cocycle(&HomLieAlgebra::heisenberg(), false);
    // maps g -> h commuting with the twists
    let basis = intertwiner_basis(&c2.g, &c2.h);
    println!("{} independent intertwiners", basis.len());
    let phitheta = basis[0].add(&basis[basis.len() - 1]);

    let c1 = forward_equivalent(&c2, &phitheta).unwrap();
    let w = IsoWitness { phitheta };
    print!("{}", check_iso_witness(&w, &c1, &c2).unwrap().render_text());

    let tau = iso_to_homotopy(&w, &c1, &c2).unwrap();
    assert_eq!(homotopy_to_iso(&tau, &c1, &c2).unwrap(), w);
    println!("witness -> homotopy -> witness is the identity");
}
