//! Every example runs to completion; their own assertions are the checks.

macro_rules! example {
    ($name:ident, $file:literal) => {
        #[path = $file]
        mod $name;
    };
}

example!(verify_axioms, "../examples/verify_axioms.rs");
example!(cohomology, "../examples/cohomology.rs");
example!(derivations, "../examples/derivations.rs");
example!(der2_algebra, "../examples/der2_algebra.rs");
example!(extensions, "../examples/extensions.rs");
example!(equivalence, "../examples/equivalence.rs");
example!(maurer_cartan, "../examples/maurer_cartan.rs");
example!(file_formats, "../examples/file_formats.rs");

#[test]
fn verify_axioms_runs() {
    verify_axioms::main();
}

#[test]
fn cohomology_runs() {
    cohomology::main();
}

#[test]
fn derivations_runs() {
    derivations::main();
}

#[test]
fn der2_algebra_runs() {
    der2_algebra::main();
}

#[test]
fn extensions_runs() {
    extensions::main();
}

#[test]
fn equivalence_runs() {
    equivalence::main();
}

#[test]
fn maurer_cartan_runs() {
    maurer_cartan::main();
}

#[test]
fn file_formats_runs() {
    file_formats::main();
}
