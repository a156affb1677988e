//! The acceptance suite: eleven end-to-end criteria run over a corpus of
//! algebras and cocycles. Shared by `homlie selftest` and the `acceptance`
//! test target.

use std::path::Path;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::alt::AltMap;
use crate::deriv::{
    check_derivation_identities, derivation_space, gl_bracket, inner_space, map_space_to_cochain_space, GlContext,
};
use crate::dghla::{
    check_restriction_closure, differential, graded_bracket, matrix_cochain, mc_check, pack_cocycle, restrict_gt, DghlaContext,
    GradedCochain,
};
use crate::error::Result;
use crate::exactlin::{int, Matrix};
use crate::extensions::{
    check_cocycle, check_iso_witness, cocycle_to_morphism_in, equivalence_morphisms, extension_verdicts, find_diagonal_section,
    homotopy_to_iso, iso_to_homotopy, morphism_to_cocycle, CocyclePair, IsoWitness, CHECK_THETA_DIAGRAM, CHECK_THETA_MORPHISM,
};
use crate::fixtures::{self, random_matrix, DEFAULT_SEED};
use crate::homlie::{center, verify, HomLieAlgebra, CHECK_ANTISYMMETRY, CHECK_HOM_JACOBI, CHECK_MULTIPLICATIVITY};
use crate::homlie2::{build_der2, check_2alg_morphism, check_homlie2, check_homotopy, der2_with_basis, HomLie2Algebra};
use crate::io;
use crate::repcoh::{adjoint, coboundary_matrix, coboundary_space, cocycle_space};
use crate::report::{CheckReport, Counterexample};

/// Per-algebra time budget for `verify`.
pub const VERIFY_BUDGET: Duration = Duration::from_millis(50);

/// Algebras and cocycles the criteria run over. Every entry is expected to
/// be valid; mutations are generated internally.
#[derive(Clone, Debug)]
pub struct Corpus {
    pub algebras: Vec<(String, HomLieAlgebra)>,
    pub cocycles: Vec<(String, CocyclePair)>,
    /// `(name, c1, c2, φ_θ)` with `c1` equivalent to `c2` through `φ_θ`.
    pub equivalent: Vec<(String, CocyclePair, CocyclePair, Matrix)>,
}

const SHIPPED_ALGEBRAS: [(&str, &str); 4] = [
    ("sl2.alg.json", include_str!("../fixtures/sl2.alg.json")),
    ("heisenberg.alg.json", include_str!("../fixtures/heisenberg.alg.json")),
    ("sl2-twisted.alg.json", include_str!("../fixtures/sl2-twisted.alg.json")),
    ("plane-jordan.alg.json", include_str!("../fixtures/plane-jordan.alg.json")),
];

const SHIPPED_COCYCLES: [(&str, &str); 2] = [
    ("affine-line.cocycle.json", include_str!("../fixtures/affine-line.cocycle.json")),
    ("semidirect-sl2.cocycle.json", include_str!("../fixtures/semidirect-sl2.cocycle.json")),
];

impl Corpus {
    /// The generated corpus plus the JSON fixtures shipped with the crate.
    pub fn builtin() -> Self {
        let mut c = Corpus {
            algebras: fixtures::corpus_algebras(),
            cocycles: fixtures::valid_cocycles(),
            equivalent: fixtures::equivalent_pairs(DEFAULT_SEED),
        };
        for (name, text) in SHIPPED_ALGEBRAS {
            let a = io::from_str_with(text, name, |n, _| io::algebra_of(n)).expect("shipped fixture parses");
            c.algebras.push((name.to_string(), a));
        }
        for (name, text) in SHIPPED_COCYCLES {
            let x = io::from_str_with(text, name, io::cocycle_of).expect("shipped fixture parses");
            c.cocycles.push((name.to_string(), x));
        }
        c
    }

    /// Adds every `*.alg.json` and `*.cocycle.json` file in `dir`, in file-name order.
    pub fn load_dir(&mut self, dir: &Path) -> Result<()> {
        let mut paths: Vec<_> = std::fs::read_dir(dir)?.filter_map(|e| e.ok().map(|e| e.path())).collect();
        paths.sort();
        for p in paths {
            let name = p.file_name().map(|n| n.to_string_lossy().into_owned()).unwrap_or_default();
            if name.ends_with(".alg.json") {
                self.algebras.push((name, io::read_algebra(&p)?));
            } else if name.ends_with(".cocycle.json") {
                self.cocycles.push((name, io::read_with(&p, io::cocycle_of)?));
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriterionOutcome {
    pub id: usize,
    pub module: &'static str,
    pub title: &'static str,
    pub checked: usize,
    pub failures: Vec<String>,
    pub elapsed: Duration,
}

impl CriterionOutcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Default)]
struct Tally {
    checked: usize,
    failures: Vec<String>,
}

impl Tally {
    fn expect(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(msg());
        }
    }

    /// Records an error as a failure and returns `None`.
    fn ok<T>(&mut self, r: Result<T>, context: &str) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.checked += 1;
                self.failures.push(format!("{context}: {e}"));
                None
            }
        }
    }
}

type CriterionFn = fn(&Corpus, &mut Tally);

struct Criterion {
    id: usize,
    module: &'static str,
    title: &'static str,
    run: CriterionFn,
}

const CRITERIA: [Criterion; 11] = [
    Criterion { id: 1, module: "homlie", title: "axiom soundness", run: axiom_soundness },
    Criterion { id: 2, module: "repcoh", title: "d squared is zero", run: d_squared },
    Criterion { id: 3, module: "deriv", title: "derivations are 1-cocycles", run: derivations_are_cocycles },
    Criterion { id: 4, module: "deriv", title: "derivation closure and ideal identities", run: derivation_identities },
    Criterion { id: 5, module: "homlie2", title: "DER(h) is a strict Hom-Lie 2-algebra", run: der2_strict },
    Criterion { id: 6, module: "extensions", title: "cocycle iff extension is Hom-Lie", run: cocycle_iff_extension },
    Criterion { id: 7, module: "extensions", title: "cocycles are morphisms into DER(h)", run: cocycles_are_morphisms },
    Criterion { id: 8, module: "extensions", title: "equivalences are homotopies", run: equivalences_are_homotopies },
    Criterion { id: 9, module: "dghla", title: "cocycles are Maurer-Cartan elements", run: mc_agreement },
    Criterion { id: 10, module: "dghla", title: "graded Hom-Lie structure on cochains", run: dghla_structure },
    Criterion { id: 11, module: "extensions", title: "non-diagonal extension detection", run: non_diagonal },
];

/// Whether `filter` selects the criterion: a module name or a criterion number.
pub fn selects(filter: Option<&str>, id: usize, module: &str) -> bool {
    match filter {
        None => true,
        Some(f) => f == module || f.parse::<usize>() == Ok(id),
    }
}

pub fn known_filters() -> Vec<&'static str> {
    let mut v: Vec<&str> = CRITERIA.iter().map(|c| c.module).collect();
    v.sort_unstable();
    v.dedup();
    v
}

/// Runs the selected criteria in order.
pub fn run_suite(corpus: &Corpus, filter: Option<&str>) -> Vec<CriterionOutcome> {
    CRITERIA
        .iter()
        .filter(|c| selects(filter, c.id, c.module))
        .map(|c| {
            let start = Instant::now();
            let mut t = Tally::default();
            (c.run)(corpus, &mut t);
            CriterionOutcome {
                id: c.id,
                module: c.module,
                title: c.title,
                checked: t.checked,
                failures: t.failures,
                elapsed: start.elapsed(),
            }
        })
        .collect()
}

const SHOWN_FAILURES: usize = 5;

pub fn render_text(outcomes: &[CriterionOutcome]) -> String {
    let mut s = String::new();
    for o in outcomes {
        let status = if o.passed() { "PASS" } else { "FAIL" };
        s.push_str(&format!(
            "{status}  criterion {:>2} [{}] {} ({} checks, {} ms)\n",
            o.id,
            o.module,
            o.title,
            o.checked,
            o.elapsed.as_millis()
        ));
        for f in o.failures.iter().take(SHOWN_FAILURES) {
            s.push_str(&format!("      {f}\n"));
        }
        if o.failures.len() > SHOWN_FAILURES {
            s.push_str(&format!("      ... {} more\n", o.failures.len() - SHOWN_FAILURES));
        }
    }
    s
}

/// One JSON line per criterion; timings are omitted so output is reproducible.
pub fn render_records(outcomes: &[CriterionOutcome]) -> String {
    outcomes
        .iter()
        .map(|o| {
            json!({
                "criterion": o.id,
                "module": o.module,
                "title": o.title,
                "status": if o.passed() { "pass" } else { "fail" },
                "checks": o.checked,
                "failures": o.failures,
            })
            .to_string()
                + "\n"
        })
        .collect()
}

// ------------------------------------------------------------ criteria

fn axiom_soundness(c: &Corpus, t: &mut Tally) {
    for (name, a) in &c.algebras {
        let start = Instant::now();
        let rep = verify(a);
        let took = start.elapsed();
        t.expect(rep.passed(), || format!("{name}: verify fails {}", rep.failed_names().join(", ")));
        t.expect(took < VERIFY_BUDGET, || format!("{name}: verify took {} ms", took.as_millis()));
    }
    let localized = |a: &HomLieAlgebra, check: &str| {
        let rep = verify(a);
        rep.entry(check).is_some_and(|e| !e.passed && e.counterexample.is_some())
    };
    for (name, a) in &c.algebras {
        if a.dim() >= 2 {
            let mut m = a.clone();
            let mut v = m.bracket_basis(0, 1).clone();
            v[0] += int(1);
            m.set_bracket_raw(0, 1, v);
            t.expect(localized(&m, CHECK_ANTISYMMETRY), || format!("{name}: asymmetric bracket not localized"));
        }
        if !a.is_abelian() {
            let m = a.with_phi(a.phi().scale(&int(2))).expect("same shape");
            t.expect(localized(&m, CHECK_MULTIPLICATIVITY), || format!("{name}: doubled twist not localized"));
        }
    }
    for (name, m) in fixtures::jacobi_breakers() {
        let rep = verify(&m);
        t.expect(rep.passes(CHECK_ANTISYMMETRY) && rep.passes(CHECK_MULTIPLICATIVITY), || {
            format!("{name}: mutation should only break hom-jacobi")
        });
        t.expect(localized(&m, CHECK_HOM_JACOBI), || format!("{name}: hom-jacobi failure not localized"));
    }
}

fn d_squared(c: &Corpus, t: &mut Tally) {
    for (name, a) in &c.algebras {
        let rep = adjoint(a);
        for k in 0..=2 {
            let Some(d0) = t.ok(coboundary_matrix(&rep, k), name) else { continue };
            let Some(d1) = t.ok(coboundary_matrix(&rep, k + 1), name) else { continue };
            let dd = d1.mul(&d0);
            let bad = (0..dd.cols()).find(|&j| dd.column(j).iter().any(|q| q != &int(0)));
            t.expect(bad.is_none(), || format!("{name}: d(d(e_{})) != 0 in degree {k}", bad.unwrap_or(0)));
        }
    }
}

fn derivations_are_cocycles(c: &Corpus, t: &mut Tally) {
    for (name, a) in &c.algebras {
        let n = a.dim();
        let ad = adjoint(a);
        let Some(der) = t.ok(derivation_space(a), name) else { continue };
        let Some(inn) = t.ok(inner_space(a), name) else { continue };
        let Some(z1) = t.ok(cocycle_space(&ad, 1), name) else { continue };
        let Some(b1) = t.ok(coboundary_space(&ad, 1), name) else { continue };
        let Some(der_c) = t.ok(map_space_to_cochain_space(&der.space, n), name) else { continue };
        let Some(inn_c) = t.ok(map_space_to_cochain_space(&inn, n), name) else { continue };
        t.expect(der_c == z1, || format!("{name}: Der != Z^1 (dims {} and {})", der_c.dim(), z1.dim()));
        t.expect(inn_c == b1, || format!("{name}: Inn != B^1 (dims {} and {})", inn_c.dim(), b1.dim()));
        let Some(z0) = t.ok(cocycle_space(&ad, 0), name) else { continue };
        let cen = center(a);
        t.expect(z0 == cen, || format!("{name}: H^0 != center (dims {} and {})", z0.dim(), cen.dim()));
    }
}

fn derivation_identities(c: &Corpus, t: &mut Tally) {
    for (name, a) in &c.algebras {
        if let Some(rep) = t.ok(check_derivation_identities(a), name) {
            t.expect(rep.passed(), || format!("{name}: {} fails", rep.failed_names().join(", ")));
        }
    }
}

fn der2_strict(c: &Corpus, t: &mut Tally) {
    for (name, a) in &c.algebras {
        let Some(v) = t.ok(build_der2(a), name) else { continue };
        t.expect(v.is_strict(), || format!("{name}: DER has nonzero l3"));
        if let Some(rep) = t.ok(check_homlie2(&v), name) {
            t.expect(rep.passed(), || format!("{name}: DER fails {}", rep.failed_names().join(", ")));
        }
    }
    for (label, h) in [("sl2-plus-line", fixtures::sl2_plus_line()), ("heisenberg", HomLieAlgebra::heisenberg())] {
        let Some(v) = t.ok(build_der2(&h), label) else { continue };
        for (cond, m) in fixtures::homlie2_mutations(&v) {
            if let Some(rep) = t.ok(check_homlie2(&m), label) {
                t.expect(!rep.passes(cond), || format!("DER({label}) mutated for {cond} still passes {cond}"));
            }
        }
    }
}

fn all_cocycles(c: &Corpus) -> Vec<(String, CocyclePair, Option<&'static str>)> {
    let mut v: Vec<_> = c.cocycles.iter().map(|(n, x)| (n.clone(), x.clone(), None)).collect();
    v.extend(fixtures::targeted_mutations().into_iter().map(|(n, w, x)| (n, x, Some(w))));
    v.extend(fixtures::random_perturbations(DEFAULT_SEED).into_iter().map(|(n, x)| (n, x, None)));
    v
}

fn cocycle_iff_extension(c: &Corpus, t: &mut Tally) {
    for (name, x, target) in all_cocycles(c) {
        let Some((cocycle_ok, algebra_ok)) = t.ok(extension_verdicts(&x), &name) else { continue };
        t.expect(cocycle_ok == algebra_ok, || format!("{name}: cocycle verdict {cocycle_ok} but extension verdict {algebra_ok}"));
        if let Some(which) = target {
            let Some(rep) = t.ok(check_cocycle(&x), &name) else { continue };
            t.expect(rep.failed_names() == vec![which], || {
                format!("{name}: expected only {which} to fail, got {:?}", rep.failed_names())
            });
            t.expect(!algebra_ok, || format!("{name}: extension still verifies"));
        }
    }
    for (name, x) in &c.cocycles {
        let ok = check_cocycle(x).is_ok_and(|r| r.passed());
        t.expect(ok, || format!("{name}: corpus cocycle is not valid"));
    }
}

fn cocycles_are_morphisms(c: &Corpus, t: &mut Tally) {
    for (name, x) in &c.cocycles {
        let Some(der2) = t.ok(der2_with_basis(&x.h), name) else { continue };
        let Some(f) = t.ok(cocycle_to_morphism_in(x, &der2), name) else { continue };
        let src = HomLie2Algebra::from_algebra(&x.g);
        if let Some(rep) = t.ok(check_2alg_morphism(&f, &src, &der2.algebra), name) {
            t.expect(rep.passed(), || format!("{name}: morphism fails {}", rep.failed_names().join(", ")));
        }
        if let Some(back) = t.ok(morphism_to_cocycle(&f, &x.g, &x.h), name) {
            t.expect(&back == x, || format!("{name}: round trip changes the cocycle"));
        }
    }
}

fn equivalences_are_homotopies(c: &Corpus, t: &mut Tally) {
    t.expect(c.equivalent.len() >= 10, || format!("only {} equivalent pairs", c.equivalent.len()));
    for (name, c1, c2, phitheta) in &c.equivalent {
        let w = IsoWitness { phitheta: phitheta.clone() };
        let Some(rep) = t.ok(check_iso_witness(&w, c1, c2), name) else { continue };
        t.expect(rep.passed(), || format!("{name}: witness fails {}", rep.failed_names().join(", ")));
        t.expect(rep.passes(CHECK_THETA_MORPHISM) && rep.passes(CHECK_THETA_DIAGRAM), || {
            format!("{name}: theta is not a morphism of extensions")
        });
        let Some(tau) = t.ok(iso_to_homotopy(&w, c1, c2), name) else { continue };
        let Some((der2, f, g)) = t.ok(equivalence_morphisms(c1, c2), name) else { continue };
        let src = HomLie2Algebra::from_algebra(&c1.g);
        if let Some(rep) = t.ok(check_homotopy(&tau, &f, &g, &src, &der2.algebra), name) {
            t.expect(rep.passed(), || format!("{name}: homotopy fails {}", rep.failed_names().join(", ")));
        }
        if let Some(back) = t.ok(homotopy_to_iso(&tau, c1, c2), name) {
            t.expect(back == w, || format!("{name}: homotopy does not recover the witness"));
        }
    }
}

fn mc_agreement(c: &Corpus, t: &mut Tally) {
    for (name, x, _) in all_cocycles(c) {
        let Some(ctx) = t.ok(DghlaContext::direct_sum(&x.g, &x.h), &name) else { continue };
        let Some(alpha) = t.ok(pack_cocycle(&x), &name) else { continue };
        let Some(mc) = t.ok(mc_check(&ctx, &alpha), &name) else { continue };
        let Some(direct) = t.ok(check_cocycle(&x), &name) else { continue };
        t.expect(mc.passed() == direct.passed(), || {
            format!("{name}: Maurer-Cartan verdict {} but cocycle verdict {}", mc.passed(), direct.passed())
        });
    }
}

fn random_cochain(rng: &mut ChaCha8Rng, arity: usize, n: usize) -> GradedCochain {
    let coords = random_matrix(rng, 1, crate::alt::binomial(n, arity) * n).row(0).to_vec();
    AltMap::from_coords(arity, n, n, &coords).expect("sized to fit")
}

fn graded_checks(name: &str, ctx: &DghlaContext, rng: &mut ChaCha8Rng, t: &mut Tally) {
    let n = ctx.dim();
    for (pa, qa) in [(1, 1), (1, 2), (2, 2), (1, 3), (2, 3)] {
        if pa > n || qa > n {
            continue;
        }
        let p = random_cochain(rng, pa, n);
        let q = random_cochain(rng, qa, n);
        let (Some(pq), Some(qp)) = (t.ok(graded_bracket(ctx, &p, &q), name), t.ok(graded_bracket(ctx, &q, &p), name)) else {
            continue;
        };
        // degrees are arity − 1
        let sign = if (pa - 1) * (qa - 1) % 2 == 0 { int(-1) } else { int(1) };
        t.expect(pq == qp.scale(&sign), || format!("{name}: graded antisymmetry fails for arities ({pa},{qa})"));
    }
    for arity in [1, 2] {
        if arity > n {
            continue;
        }
        let p = random_cochain(rng, arity, n);
        let Some(dp) = t.ok(differential(ctx, &p), name) else { continue };
        if let Some(ddp) = t.ok(differential(ctx, &dp), name) {
            t.expect(ddp.is_zero(), || format!("{name}: d(d(P)) != 0 for arity {arity}"));
        }
    }
}

const GRADED_PAIRS: [(usize, usize); 5] = [(1, 1), (1, 2), (2, 2), (1, 3), (2, 3)];

fn cochain_cx(tag: &[usize], labels: &[&str], lhs: &GradedCochain, rhs: &GradedCochain) -> Counterexample {
    Counterexample {
        indices: tag.to_vec(),
        labels: labels.iter().map(|s| s.to_string()).collect(),
        lhs: lhs.coords(),
        rhs: rhs.coords(),
    }
}

fn push_outcome(r: &mut CheckReport, name: String, fail: Option<Counterexample>) {
    match fail {
        None => r.push_pass(name),
        Some(cx) => r.push_fail(name, cx),
    }
}

/// Graded antisymmetry, `∂² = 0` and agreement with the `gl` bracket on the
/// single contexts of `g` and `h` and on `g ⊕ h`, plus closure of the
/// restricted cochains on `g ⊕ h`. Random cochains use a fixed seed.
pub fn dghla_report(g: &HomLieAlgebra, h: &HomLieAlgebra) -> Result<CheckReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    let mut r = CheckReport::new();
    let contexts = [("g", DghlaContext::single(g)?), ("h", DghlaContext::single(h)?), ("g+h", DghlaContext::direct_sum(g, h)?)];
    for (label, ctx) in &contexts {
        let n = ctx.dim();
        let mut fail = None;
        for (pa, qa) in GRADED_PAIRS.into_iter().filter(|&(p, q)| p <= n && q <= n) {
            let (p, q) = (random_cochain(&mut rng, pa, n), random_cochain(&mut rng, qa, n));
            let pq = graded_bracket(ctx, &p, &q)?;
            let sign = if (pa - 1) * (qa - 1) % 2 == 0 { int(-1) } else { int(1) };
            let qp = graded_bracket(ctx, &q, &p)?.scale(&sign);
            if pq != qp {
                fail = Some(cochain_cx(&[pa, qa], &["arity P", "arity Q"], &pq, &qp));
                break;
            }
        }
        push_outcome(&mut r, format!("{label}: graded-antisymmetry"), fail);

        let mut fail = None;
        for arity in [1, 2].into_iter().filter(|&a| a <= n) {
            let p = random_cochain(&mut rng, arity, n);
            let ddp = differential(ctx, &differential(ctx, &p)?)?;
            if !ddp.is_zero() {
                fail = Some(cochain_cx(&[arity], &["arity P"], &ddp, &AltMap::zero(ddp.arity(), n, n)));
                break;
            }
        }
        push_outcome(&mut r, format!("{label}: differential-squared"), fail);

        let gl = GlContext::new(ctx.ambient().phi().clone())?;
        let mut fail = None;
        for _ in 0..4 {
            let (x, y) = (random_matrix(&mut rng, n, n), random_matrix(&mut rng, n, n));
            let graded = graded_bracket(ctx, &matrix_cochain(&x), &matrix_cochain(&y))?;
            let direct = matrix_cochain(&gl_bracket(&gl, &x, &y)?);
            if graded != direct {
                fail = Some(cochain_cx(&[1, 1], &["arity P", "arity Q"], &graded, &direct));
                break;
            }
        }
        push_outcome(&mut r, format!("{label}: gl-bracket-agreement"), fail);
    }
    let sum = &contexts[2].1;
    let n = sum.dim();
    let mut parts = Vec::new();
    for (pa, qa) in [(1, 1), (1, 2), (2, 2)].into_iter().filter(|&(p, q)| p <= n && q <= n) {
        let p = restrict_gt(sum, &random_cochain(&mut rng, pa, n))?;
        let q = restrict_gt(sum, &random_cochain(&mut rng, qa, n))?;
        parts.push(check_restriction_closure(sum, &p, &q)?);
    }
    r.check_all("g+h: restriction-closure", parts);
    Ok(r)
}

fn dghla_structure(c: &Corpus, t: &mut Tally) {
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED ^ 0xd9);
    for (name, a) in &c.algebras {
        let Some(ctx) = t.ok(DghlaContext::single(a), name) else { continue };
        graded_checks(name, &ctx, &mut rng, t);
        let Some(gl) = t.ok(GlContext::new(a.phi().clone()), name) else { continue };
        let n = a.dim();
        let elementary = |k: usize| Matrix::from_fn(n, n, |r, s| if r * n + s == k { int(1) } else { int(0) });
        for i in 0..n * n {
            for j in 0..n * n {
                let (x, y) = (elementary(i), elementary(j));
                let graded = graded_bracket(&ctx, &matrix_cochain(&x), &matrix_cochain(&y));
                let direct = gl_bracket(&gl, &x, &y).map(|m| matrix_cochain(&m));
                t.expect(matches!((&graded, &direct), (Ok(p), Ok(q)) if p == q), || {
                    format!("{name}: graded bracket of E{i}, E{j} differs from the gl bracket")
                });
            }
        }
    }
    let pairs = [
        ("sl2+line", HomLieAlgebra::sl2(), HomLieAlgebra::abelian(1)),
        ("line+heisenberg", HomLieAlgebra::abelian(1), HomLieAlgebra::heisenberg()),
        (
            "twisted-plane+line",
            HomLieAlgebra::abelian_with_phi(Matrix::from_i64(2, 2, &[2, 1, 0, 1])).expect("2x2"),
            HomLieAlgebra::abelian(1),
        ),
        ("twisted-sl2+plane", fixtures::twisted_sl2(&int(3)), HomLieAlgebra::abelian(2)),
    ];
    for (name, g, h) in pairs {
        let Some(ctx) = t.ok(DghlaContext::direct_sum(&g, &h), name) else { continue };
        graded_checks(name, &ctx, &mut rng, t);
        let n = ctx.dim();
        for (pa, qa) in [(1, 1), (1, 2), (2, 2)] {
            let p = restrict_gt(&ctx, &random_cochain(&mut rng, pa, n));
            let q = restrict_gt(&ctx, &random_cochain(&mut rng, qa, n));
            let (Some(p), Some(q)) = (t.ok(p, name), t.ok(q, name)) else { continue };
            if let Some(rep) = t.ok(check_restriction_closure(&ctx, &p, &q), name) {
                t.expect(rep.passed(), || format!("{name}: restricted cochains not closed: {}", rep.failed_names().join(", ")));
            }
        }
    }
}

fn non_diagonal(_: &Corpus, t: &mut Tally) {
    let (e, g, h) = fixtures::jordan_presentation();
    match find_diagonal_section(&e, &g) {
        Ok(None) => t.expect(true, String::new),
        Ok(Some(_)) => t.expect(false, || "jordan: a diagonal section was found".into()),
        Err(err) => t.expect(false, || format!("jordan: {err}")),
    }
    let path = std::env::temp_dir().join(format!("homlie-jordan-{}.json", std::process::id()));
    let text = io::presentation_json(&e, &g, &h, None).to_string();
    if t.ok(std::fs::write(&path, text).map_err(Into::into), "jordan").is_none() {
        return;
    }
    let out = crate::cli::run(["homlie", "section", &path.to_string_lossy()]);
    let _ = std::fs::remove_file(&path);
    t.expect(out.status == crate::cli::STATUS_NOT_DIAGONAL, || {
        format!("jordan: section exited with status {} instead of {}", out.status, crate::cli::STATUS_NOT_DIAGONAL)
    });
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn filters_select_modules_and_numbers() {
        assert!(selects(Some("dghla"), 9, "dghla"));
        assert!(!selects(Some("dghla"), 1, "homlie"));
        assert!(selects(Some("3"), 3, "deriv"));
        assert!(known_filters().contains(&"homlie2"));
    }
}
