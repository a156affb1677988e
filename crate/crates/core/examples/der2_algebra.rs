//! The derivation 2-algebra DER(h) = (h --ad--> Der(h)) and its conditions.

use homlie_kit::exactlin::{int, Matrix};
use homlie_kit::fixtures::{heisenberg_automorphism, homlie2_mutations, sl2_plus_line};
use homlie_kit::homlie::{yau_twist, HomLieAlgebra};
use homlie_kit::homlie2::{build_der2, check_homlie2};

pub fn main() {
    let psi = heisenberg_automorphism(&Matrix::diag(&[int(2), int(-1)]));
    let h = yau_twist(&HomLieAlgebra::heisenberg(), &psi).unwrap();
    let v = build_der2(&h).unwrap();
    println!("DER(twisted heisenberg): dim V1 = {}, dim V0 = {}, strict = {}", v.dim1, v.dim0, v.is_strict());
    print!("{}", check_homlie2(&v).unwrap().render_text());

    // each corruption breaks the condition it targets
    let w = build_der2(&sl2_plus_line()).unwrap();
    for (cond, m) in homlie2_mutations(&w) {
        let rep = check_homlie2(&m).unwrap();
        println!("corrupting {cond}: fails {:?}", rep.failed_names());
        assert!(!rep.passes(cond));
    }
}
