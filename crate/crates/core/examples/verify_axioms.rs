//! Build a few Hom-Lie algebras, check their axioms, and look at a failure.

use homlie_kit::exactlin::{int, Matrix};
use homlie_kit::homlie::{check_morphism, verify, yau_twist, HomLieAlgebra};

pub fn main() {
    let sl2 = HomLieAlgebra::sl2();
    println!("sl2:\n{}", verify(&sl2).render_text());

    // bracket ψ∘[·,·] with twist ψ = diag(1, 2, 1/2)
    let psi = Matrix::diag(&[int(1), int(2), int(1) / int(2)]);
    let twisted = yau_twist(&sl2, &psi).expect("diagonal scalings are automorphisms of sl2");
    println!("Yau twist of sl2:\n{}", verify(&twisted).render_text());

    // ψ is a morphism from the twisted algebra to itself
    let m = check_morphism(&psi, &twisted, &twisted).expect("shapes agree");
    println!("psi as a morphism:\n{}", m.render_text());

    let bad = sl2.with_phi(Matrix::diag(&[int(1), int(2), int(3)])).expect("3x3");
    let rep = verify(&bad);
    assert!(!rep.passed());
    println!("sl2 with phi = diag(1,2,3):\n{}", rep.render_text());
}
