//! From a cocycle to an extension and back, and the morphism into DER(h).

use homlie_kit::extensions::{
    build_extension, check_cocycle, check_presentation, cocycle_to_morphism, extension_verdicts, extract_cocycle,
    morphism_to_cocycle,
};
use homlie_kit::fixtures::{adjoint_cocycle, targeted_mutations};
use homlie_kit::homlie::{verify, HomLieAlgebra};

pub fn main() {
    // sl2 acting on itself by ad
    let c = adjoint_cocycle(&HomLieAlgebra::sl2(), false);
    assert!(check_cocycle(&c).unwrap().passed());

    let (ghat, pres, section) = build_extension(&c).unwrap();
    println!("extension has dimension {} and verifies: {}", ghat.dim(), verify(&ghat).passed());
    assert!(check_presentation(&pres, &c.g, &c.h).unwrap().passed());
    assert_eq!(extract_cocycle(&pres, &section, &c.g, &c.h).unwrap(), c);

    let f = cocycle_to_morphism(&c).unwrap();
    assert_eq!(morphism_to_cocycle(&f, &c.g, &c.h).unwrap(), c);
    println!("cocycle -> morphism -> cocycle is the identity");

    // a broken identity shows up both in the report and in the extension
    for (name, which, bad) in targeted_mutations() {
        let (cocycle_ok, algebra_ok) = extension_verdicts(&bad).unwrap();
        println!("{name}: {which} fails; cocycle ok = {cocycle_ok}, extension ok = {algebra_ok}");
    }
}
