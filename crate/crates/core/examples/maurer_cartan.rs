//! Cocycles on (g, h) as Maurer-Cartan elements of the cochain algebra of g ⊕ h.

use homlie_kit::dghla::{differential, graded_bracket, mc_check, pack_cocycle, DghlaContext};
use homlie_kit::extensions::check_cocycle;
use homlie_kit::fixtures::{base_cocycles, targeted_mutations};

pub fn main() {
    let mut cases = base_cocycles();
    cases.extend(targeted_mutations().into_iter().map(|(n, _, c)| (n, c)));
    for (name, c) in cases {
        let ctx = DghlaContext::direct_sum(&c.g, &c.h).unwrap();
        let alpha = pack_cocycle(&c).unwrap();
        let mc = mc_check(&ctx, &alpha).unwrap().passed();
        assert_eq!(mc, check_cocycle(&c).unwrap().passed());
        println!("{name:32} Maurer-Cartan: {mc}");
    }

    // μ itself is closed, and [μ, μ] = 0 because the bracket is Hom-Lie
    let (_, c) = &base_cocycles()[0];
    let ctx = DghlaContext::direct_sum(&c.g, &c.h).unwrap();
    assert!(graded_bracket(&ctx, ctx.mu(), ctx.mu()).unwrap().is_zero());
    assert!(differential(&ctx, ctx.mu()).unwrap().is_zero());
}
