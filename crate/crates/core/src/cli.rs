//! Command-line front end. [`run`] parses arguments, loads every input file,
//! validates the algebras it found, and only then computes.
//!
//! Exit statuses: 0 when every check passes, 1 when a check fails or a
//! precondition is refused, 2 on malformed input, 3 when an extension has
//! no diagonal section.

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::deriv::{commutes_with_twist, der_algebra, derivation_space, inner_space, outer_data};
use crate::dghla::{mc_check, pack_cocycle, DghlaContext};
use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Subspace};
use crate::extensions::{
    build_extension, check_cocycle, check_iso_witness, check_presentation, cocycle_to_morphism_in, equivalence_morphisms,
    extract_cocycle, find_diagonal_section, homotopy_to_iso, iso_to_homotopy, CocyclePair,
};
use crate::homlie::{center, check_morphism, verify, yau_twist, HomLieAlgebra};
use crate::homlie2::{check_2alg_morphism, check_homlie2, check_homotopy, der2_with_basis, HomLie2Algebra};
use crate::io;
use crate::repcoh::{adjoint, check_representation, cochain_coord_labels, cohomology, Representation, MAX_DEGREE};
use crate::report::{fmt_vec, CheckReport};
use crate::suite;

pub const STATUS_OK: i32 = 0;
pub const STATUS_FAIL: i32 = 1;
pub const STATUS_MALFORMED: i32 = 2;
pub const STATUS_NOT_DIAGONAL: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Human-readable; no stability guarantee.
    Text,
    /// One JSON object per line with sorted keys.
    Records,
}

#[derive(Debug, Parser)]
#[command(name = "homlie", version, about = "Exact checks and constructions for finite-dimensional Hom-Lie algebras")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check antisymmetry, multiplicativity and Hom-Jacobi.
    Verify { algebra: PathBuf },
    /// Check that a map `{"map": matrix}` is a morphism from SRC to DST.
    Morphism { map: PathBuf, src: PathBuf, dst: PathBuf },
    /// Compute the center.
    Center { algebra: PathBuf },
    /// Yau-twist a Lie algebra by an automorphism `{"psi": matrix}`.
    Twist { algebra: PathBuf, psi: PathBuf },
    /// Check the two compatibility conditions of a representation.
    RepCheck { representation: PathBuf },
    /// Compute H^k of the adjoint representation or of a representation file.
    Cohomology {
        #[arg(long)]
        k: usize,
        /// `adjoint`, or a representation file
        #[arg(long, default_value = "adjoint")]
        rep: String,
        /// Required with `--rep adjoint`
        algebra: Option<PathBuf>,
    },
    /// Basis of the derivations.
    Derivations {
        algebra: PathBuf,
        /// Also report which basis derivations commute with the twist
        #[arg(long)]
        commuting: bool,
    },
    /// Basis of the inner derivations.
    Inner { algebra: PathBuf },
    /// Outer derivations Der/Inn.
    Outer { algebra: PathBuf },
    /// The Hom-Lie algebra of derivations, in its canonical basis.
    DerAlgebra { algebra: PathBuf },
    /// Check the Hom-Lie 2-algebra conditions.
    #[command(name = "check-2alg")]
    Check2Alg { file: PathBuf },
    /// Build the derivation 2-algebra DER(h).
    Der2 { algebra: PathBuf },
    /// Check a 2-algebra morphism. Without SRC and DST the file must bundle
    /// `morphism`, `source` and `target`.
    #[command(name = "check-2morphism")]
    Check2Morphism { morphism: PathBuf, src: Option<PathBuf>, dst: Option<PathBuf> },
    /// Check a homotopy. Given a single file it must bundle `tau`, `f`, `g`,
    /// `source` and `target`; otherwise pass TAU F G SRC DST.
    CheckHomotopy { tau: PathBuf, rest: Vec<PathBuf> },
    /// Check the five cocycle identities.
    CheckCocycle { cocycle: PathBuf },
    /// Build the extension of a valid cocycle.
    Extend { cocycle: PathBuf },
    /// Find a diagonal section of an extension presentation.
    Section { presentation: PathBuf },
    /// Extract the cocycle of a presentation through a diagonal section.
    Extract {
        presentation: PathBuf,
        /// `{"section": matrix}`; defaults to the presentation's own or a computed one
        #[arg(long)]
        section: Option<PathBuf>,
    },
    /// The 2-algebra morphism g -> DER(h) of a valid cocycle.
    CocycleToMorphism { cocycle: PathBuf },
    /// Check an equivalence witness `{"phitheta": matrix}` from C1 to C2.
    CheckIso { witness: PathBuf, c1: PathBuf, c2: PathBuf },
    /// Turn an equivalence witness into a homotopy between the two morphisms.
    IsoToHomotopy { witness: PathBuf, c1: PathBuf, c2: PathBuf },
    /// Turn a homotopy `{"tau": matrix}` into an equivalence witness.
    HomotopyToIso { tau: PathBuf, c1: PathBuf, c2: PathBuf },
    /// Check the Maurer-Cartan equation for the packed cocycle.
    McCheck { cocycle: PathBuf },
    /// Exercise the graded cochain algebra on the single and direct-sum contexts.
    DghlaSelftest { g: PathBuf, h: PathBuf },
    /// Run the acceptance suite.
    Selftest {
        /// A module name or criterion number
        #[arg(long)]
        filter: Option<String>,
        /// Directory of extra `*.alg.json` and `*.cocycle.json` fixtures
        #[arg(long)]
        corpus: Option<PathBuf>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RenderedReport {
    pub stdout: String,
    pub stderr: String,
    pub status: i32,
}

impl RenderedReport {
    fn out(stdout: String, status: i32) -> Self {
        RenderedReport { stdout, stderr: String::new(), status }
    }

    fn err(stderr: String, status: i32) -> Self {
        RenderedReport { stdout: String::new(), stderr, status }
    }
}

/// Parses `args` (the first item is the program name) and runs the verb.
pub fn run<I, T>(args: I) -> RenderedReport
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli),
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                RenderedReport::err(text, STATUS_MALFORMED)
            } else {
                RenderedReport::out(text, STATUS_OK)
            }
        }
    }
}

pub fn execute(cli: &Cli) -> RenderedReport {
    match dispatch(&cli.command, cli.format) {
        Ok(r) => r,
        Err(e) => RenderedReport::err(format!("error: {e}\n"), status_of(&e)),
    }
}

pub fn status_of(e: &Error) -> i32 {
    match e {
        Error::Parse(_) | Error::Io(_) | Error::Dimension(_) | Error::Degree(_) => STATUS_MALFORMED,
        Error::NotDiagonal => STATUS_NOT_DIAGONAL,
        Error::Precondition(_) | Error::Singular | Error::Internal(_) => STATUS_FAIL,
    }
}

// ------------------------------------------------------------- rendering

fn report(r: &CheckReport, fmt: Format) -> RenderedReport {
    let text = match fmt {
        Format::Text => r.render_text(),
        Format::Records => r.render_records(),
    };
    RenderedReport::out(text, if r.passed() { STATUS_OK } else { STATUS_FAIL })
}

/// A document in one of the file formats; text mode pretty-prints it.
fn document(v: &Value, fmt: Format) -> RenderedReport {
    let text = match fmt {
        Format::Text => pretty(v, 0) + "\n",
        Format::Records => v.to_string() + "\n",
    };
    RenderedReport::out(text, STATUS_OK)
}

/// Pretty JSON that keeps arrays of scalars on one line, so matrices read as rows.
fn pretty(v: &Value, depth: usize) -> String {
    let pad = "  ".repeat(depth + 1);
    let close = "  ".repeat(depth);
    match v {
        Value::Array(items) if items.iter().all(|x| !x.is_array() && !x.is_object()) => v.to_string(),
        Value::Array(items) if items.is_empty() => "[]".into(),
        Value::Array(items) => {
            let inner: Vec<String> = items.iter().map(|x| format!("{pad}{}", pretty(x, depth + 1))).collect();
            format!("[\n{}\n{close}]", inner.join(",\n"))
        }
        Value::Object(m) if m.is_empty() => "{}".into(),
        Value::Object(m) => {
            let inner: Vec<String> =
                m.iter().map(|(k, x)| format!("{pad}{}: {}", Value::String(k.clone()), pretty(x, depth + 1))).collect();
            format!("{{\n{}\n{close}}}", inner.join(",\n"))
        }
        _ => v.to_string(),
    }
}

fn fmt_matrix(m: &Matrix, indent: &str) -> String {
    m.row_vectors().iter().map(|r| format!("{indent}{}\n", fmt_vec(r))).collect()
}

fn basis_summary(kind: &str, label: &str, dim: usize, mats: &[Matrix], fmt: Format) -> RenderedReport {
    match fmt {
        Format::Records => {
            let v = json!({ "kind": kind, "dim": dim, "basis": mats.iter().map(io::matrix_json).collect::<Vec<_>>() });
            RenderedReport::out(v.to_string() + "\n", STATUS_OK)
        }
        Format::Text => {
            let mut s = format!("dim {label} = {dim}\n");
            for (i, m) in mats.iter().enumerate() {
                s.push_str(&format!("  D{i} =\n{}", fmt_matrix(m, "    ")));
            }
            RenderedReport::out(s, STATUS_OK)
        }
    }
}

fn subspace_summary(kind: &str, label: &str, s: &Subspace, fmt: Format) -> RenderedReport {
    let basis = s.basis_vectors();
    match fmt {
        Format::Records => {
            let v =
                json!({ "kind": kind, "dim": s.dim(), "basis": basis.iter().map(|b| io::rationals_json(b)).collect::<Vec<_>>() });
            RenderedReport::out(v.to_string() + "\n", STATUS_OK)
        }
        Format::Text => {
            let mut out = format!("dim {label} = {}\n", s.dim());
            for b in &basis {
                out.push_str(&format!("  {}\n", fmt_vec(b)));
            }
            RenderedReport::out(out, STATUS_OK)
        }
    }
}

// --------------------------------------------------------------- loading

fn load_algebra(p: &Path) -> Result<HomLieAlgebra> {
    io::read_algebra(p)
}

fn load_cocycle(p: &Path) -> Result<CocyclePair> {
    io::read_with(p, io::cocycle_of)
}

fn load_2alg(p: &Path) -> Result<HomLie2Algebra> {
    io::read_with(p, |n, _| io::homlie2_of(n))
}

/// The algebras a verb refuses to work with, with their failing reports.
fn refuse(algebras: &[(&str, &HomLieAlgebra)], fmt: Format) -> Option<RenderedReport> {
    for (label, a) in algebras {
        let rep = verify(a);
        if !rep.passed() {
            let mut r = report(&rep.prefixed(&format!("{label}: ")), fmt);
            r.stderr = format!("refusing: {label} is not a Hom-Lie algebra\n");
            r.status = STATUS_FAIL;
            return Some(r);
        }
    }
    None
}

fn refuse_cocycle(c: &CocyclePair, fmt: Format) -> Option<RenderedReport> {
    refuse(&[("g", &c.g), ("h", &c.h)], fmt)
}

// -------------------------------------------------------------- dispatch

fn dispatch(cmd: &Command, fmt: Format) -> Result<RenderedReport> {
    use Command::*;
    match cmd {
        Verify { algebra } => Ok(report(&verify(&load_algebra(algebra)?), fmt)),
        Morphism { map, src, dst } => {
            let (s, d) = (load_algebra(src)?, load_algebra(dst)?);
            let f = io::read_with(map, |n, _| io::keyed_matrix_of(n, "map", d.dim(), s.dim()))?;
            if let Some(r) = refuse(&[("source", &s), ("target", &d)], fmt) {
                return Ok(r);
            }
            Ok(report(&check_morphism(&f, &s, &d)?, fmt))
        }
        Center { algebra } => {
            let a = load_algebra(algebra)?;
            Ok(refuse(&[("algebra", &a)], fmt).unwrap_or_else(|| subspace_summary("center", "Z", &center(&a), fmt)))
        }
        Twist { algebra, psi } => {
            let a = load_algebra(algebra)?;
            let m = io::read_with(psi, |n, _| io::keyed_matrix_of(n, "psi", a.dim(), a.dim()))?;
            if let Some(r) = refuse(&[("algebra", &a)], fmt) {
                return Ok(r);
            }
            Ok(document(&io::algebra_json(&yau_twist(&a, &m)?), fmt))
        }
        RepCheck { representation } => {
            let rep = io::read_with(representation, io::representation_of)?;
            if let Some(r) = refuse(&[("algebra", &rep.alg)], fmt) {
                return Ok(r);
            }
            Ok(report(&check_representation(&rep)?, fmt))
        }
        Cohomology { k, rep, algebra } => cohomology_verb(*k, rep, algebra.as_deref(), fmt),
        Derivations { algebra, commuting } => {
            let a = load_algebra(algebra)?;
            if let Some(r) = refuse(&[("algebra", &a)], fmt) {
                return Ok(r);
            }
            let d = derivation_space(&a)?;
            let mut out = basis_summary("derivations", "Der", d.dim(), &d.basis_matrices(), fmt);
            if *commuting {
                let flags = commutes_with_twist(&d);
                match fmt {
                    Format::Records => {
                        let mut v: Value = serde_json::from_str(&out.stdout).map_err(|e| Error::Internal(e.to_string()))?;
                        v["commutes_with_twist"] = json!(flags);
                        out.stdout = v.to_string() + "\n";
                    }
                    Format::Text => {
                        let idx: Vec<String> =
                            flags.iter().enumerate().filter(|(_, &c)| c).map(|(i, _)| format!("D{i}")).collect();
                        out.stdout += &format!(
                            "commuting with the twist: {}\n",
                            if idx.is_empty() { "none".into() } else { idx.join(", ") }
                        );
                    }
                }
            }
            Ok(out)
        }
        Inner { algebra } => {
            let a = load_algebra(algebra)?;
            if let Some(r) = refuse(&[("algebra", &a)], fmt) {
                return Ok(r);
            }
            let s = inner_space(&a)?;
            let n = a.dim();
            let mats = s.basis_vectors().into_iter().map(|v| Matrix::from_flat(n, n, v)).collect::<Result<Vec<_>>>()?;
            Ok(basis_summary("inner", "Inn", s.dim(), &mats, fmt))
        }
        Outer { algebra } => {
            let a = load_algebra(algebra)?;
            if let Some(r) = refuse(&[("algebra", &a)], fmt) {
                return Ok(r);
            }
            let o = outer_data(&a)?;
            Ok(basis_summary("outer", "Out", o.dim, &o.representatives, fmt))
        }
        DerAlgebra { algebra } => {
            let a = load_algebra(algebra)?;
            if let Some(r) = refuse(&[("algebra", &a)], fmt) {
                return Ok(r);
            }
            let d = der_algebra(&a)?;
            let v = json!({ "algebra": io::algebra_json(&d.algebra), "basis": d.basis.iter().map(io::matrix_json).collect::<Vec<_>>() });
            Ok(document(&v, fmt))
        }
        Check2Alg { file } => Ok(report(&check_homlie2(&load_2alg(file)?)?, fmt)),
        Der2 { algebra } => {
            let a = load_algebra(algebra)?;
            if let Some(r) = refuse(&[("algebra", &a)], fmt) {
                return Ok(r);
            }
            let d = der2_with_basis(&a)?;
            let mut v = io::homlie2_json(&d.algebra);
            v["der_basis"] = Value::Array(d.der.basis_matrices().iter().map(io::matrix_json).collect());
            Ok(document(&v, fmt))
        }
        Check2Morphism { morphism, src, dst } => {
            let (f, s, d) = match (src, dst) {
                (Some(s), Some(d)) => {
                    let (s, d) = (load_2alg(s)?, load_2alg(d)?);
                    let f = io::read_with(morphism, |n, _| io::morphism2_of(n, &s, &d))?;
                    (f, s, d)
                }
                (None, None) => io::read_with(morphism, |n, _| {
                    let s = io::with_child(n, "source", io::homlie2_of)?;
                    let d = io::with_child(n, "target", io::homlie2_of)?;
                    let f = io::with_child(n, "morphism", |m| io::morphism2_of(m, &s, &d))?;
                    Ok((f, s, d))
                })?,
                _ => return Err(Error::Parse("give both SRC and DST, or neither".into())),
            };
            Ok(report(&check_2alg_morphism(&f, &s, &d)?, fmt))
        }
        CheckHomotopy { tau, rest } => {
            let (t, f, g, s, d) = match rest.as_slice() {
                [] => io::read_with(tau, |n, _| {
                    let s = io::with_child(n, "source", io::homlie2_of)?;
                    let d = io::with_child(n, "target", io::homlie2_of)?;
                    let f = io::with_child(n, "f", |m| io::morphism2_of(m, &s, &d))?;
                    let g = io::with_child(n, "g", |m| io::morphism2_of(m, &s, &d))?;
                    Ok((io::homotopy_of(n, &s, &d)?, f, g, s, d))
                })?,
                [f, g, s, d] => {
                    let (s, d) = (load_2alg(s)?, load_2alg(d)?);
                    let f = io::read_with(f, |n, _| io::morphism2_of(n, &s, &d))?;
                    let g = io::read_with(g, |n, _| io::morphism2_of(n, &s, &d))?;
                    let t = io::read_with(tau, |n, _| io::homotopy_of(n, &s, &d))?;
                    (t, f, g, s, d)
                }
                _ => return Err(Error::Parse("check-homotopy takes TAU, or TAU F G SRC DST".into())),
            };
            Ok(report(&check_homotopy(&t, &f, &g, &s, &d)?, fmt))
        }
        CheckCocycle { cocycle } => {
            let c = load_cocycle(cocycle)?;
            Ok(refuse_cocycle(&c, fmt).map_or_else(|| check_cocycle(&c).map(|r| report(&r, fmt)), Ok)?)
        }
        Extend { cocycle } => {
            let c = load_cocycle(cocycle)?;
            if let Some(r) = refuse_cocycle(&c, fmt) {
                return Ok(r);
            }
            let rep = check_cocycle(&c)?;
            if !rep.passed() {
                let mut r = report(&rep, fmt);
                r.stderr = "refusing: not a cocycle\n".into();
                return Ok(r);
            }
            let (_, e, s) = build_extension(&c)?;
            Ok(document(&io::presentation_json(&e, &c.g, &c.h, Some(&s)), fmt))
        }
        Section { presentation } => {
            let (e, g, h, _) = io::read_with(presentation, io::presentation_of)?;
            if let Some(r) = refuse(&[("ghat", &e.ghat), ("g", &g), ("h", &h)], fmt) {
                return Ok(r);
            }
            if let Some(r) = bad_presentation(&e, &g, &h, fmt)? {
                return Ok(r);
            }
            match find_diagonal_section(&e, &g)? {
                Some(s) => Ok(document(&json!({ "section": io::matrix_json(&s.s) }), fmt)),
                None => Err(Error::NotDiagonal),
            }
        }
        Extract { presentation, section } => {
            let (e, g, h, own) = io::read_with(presentation, io::presentation_of)?;
            let given = match section {
                Some(p) => Some(crate::extensions::SectionData {
                    s: io::read_with(p, |n, _| io::keyed_matrix_of(n, "section", e.ghat.dim(), g.dim()))?,
                }),
                None => own,
            };
            if let Some(r) = refuse(&[("ghat", &e.ghat), ("g", &g), ("h", &h)], fmt) {
                return Ok(r);
            }
            if let Some(r) = bad_presentation(&e, &g, &h, fmt)? {
                return Ok(r);
            }
            let s = match given {
                Some(s) => s,
                None => find_diagonal_section(&e, &g)?.ok_or(Error::NotDiagonal)?,
            };
            Ok(document(&io::cocycle_json(&extract_cocycle(&e, &s, &g, &h)?), fmt))
        }
        CocycleToMorphism { cocycle } => {
            let c = load_cocycle(cocycle)?;
            if let Some(r) = refuse_cocycle(&c, fmt) {
                return Ok(r);
            }
            let der2 = der2_with_basis(&c.h)?;
            let f = cocycle_to_morphism_in(&c, &der2)?;
            let v = json!({
                "source": io::homlie2_json(&HomLie2Algebra::from_algebra(&c.g)),
                "target": io::homlie2_json(&der2.algebra),
                "morphism": io::morphism2_json(&f),
            });
            Ok(document(&v, fmt))
        }
        CheckIso { witness, c1, c2 } => {
            let (a, b) = (load_cocycle(c1)?, load_cocycle(c2)?);
            let w = io::read_with(witness, |n, _| io::witness_of(n, &a.g, &a.h))?;
            if let Some(r) = refuse_cocycle(&a, fmt).or_else(|| refuse_cocycle(&b, fmt)) {
                return Ok(r);
            }
            Ok(report(&check_iso_witness(&w, &a, &b)?, fmt))
        }
        IsoToHomotopy { witness, c1, c2 } => {
            let (a, b) = (load_cocycle(c1)?, load_cocycle(c2)?);
            let w = io::read_with(witness, |n, _| io::witness_of(n, &a.g, &a.h))?;
            if let Some(r) = refuse_cocycle(&a, fmt).or_else(|| refuse_cocycle(&b, fmt)) {
                return Ok(r);
            }
            let tau = iso_to_homotopy(&w, &a, &b)?;
            let (der2, f, g) = equivalence_morphisms(&a, &b)?;
            let mut v = io::homotopy_json(&tau);
            v["f"] = io::morphism2_json(&f);
            v["g"] = io::morphism2_json(&g);
            v["source"] = io::homlie2_json(&HomLie2Algebra::from_algebra(&a.g));
            v["target"] = io::homlie2_json(&der2.algebra);
            Ok(document(&v, fmt))
        }
        HomotopyToIso { tau, c1, c2 } => {
            let (a, b) = (load_cocycle(c1)?, load_cocycle(c2)?);
            if let Some(r) = refuse_cocycle(&a, fmt).or_else(|| refuse_cocycle(&b, fmt)) {
                return Ok(r);
            }
            let (der2, _, _) = equivalence_morphisms(&a, &b)?;
            let src = HomLie2Algebra::from_algebra(&a.g);
            let t = io::read_with(tau, |n, _| io::homotopy_of(n, &src, &der2.algebra))?;
            Ok(document(&io::witness_json(&homotopy_to_iso(&t, &a, &b)?), fmt))
        }
        McCheck { cocycle } => {
            let c = load_cocycle(cocycle)?;
            if let Some(r) = refuse_cocycle(&c, fmt) {
                return Ok(r);
            }
            let ctx = DghlaContext::direct_sum(&c.g, &c.h)?;
            Ok(report(&mc_check(&ctx, &pack_cocycle(&c)?)?, fmt))
        }
        DghlaSelftest { g, h } => {
            let (g, h) = (load_algebra(g)?, load_algebra(h)?);
            if let Some(r) = refuse(&[("g", &g), ("h", &h)], fmt) {
                return Ok(r);
            }
            Ok(report(&suite::dghla_report(&g, &h)?, fmt))
        }
        Selftest { filter, corpus } => {
            if let Some(f) = filter {
                let known = suite::known_filters();
                if !known.contains(&f.as_str()) && !(f.parse::<usize>().is_ok_and(|k| (1..=11).contains(&k))) {
                    return Err(Error::Parse(format!(
                        "unknown filter {f:?}; use a criterion number or one of {}",
                        known.join(", ")
                    )));
                }
            }
            let mut c = suite::Corpus::builtin();
            if let Some(dir) = corpus {
                c.load_dir(dir)?;
            }
            let outcomes = suite::run_suite(&c, filter.as_deref());
            let text = match fmt {
                Format::Text => suite::render_text(&outcomes),
                Format::Records => suite::render_records(&outcomes),
            };
            let ok = outcomes.iter().all(|o| o.passed());
            Ok(RenderedReport::out(text, if ok { STATUS_OK } else { STATUS_FAIL }))
        }
    }
}

fn bad_presentation(
    e: &crate::extensions::ExtensionPresentation,
    g: &HomLieAlgebra,
    h: &HomLieAlgebra,
    fmt: Format,
) -> Result<Option<RenderedReport>> {
    let rep = check_presentation(e, g, h)?;
    if rep.passed() {
        return Ok(None);
    }
    let mut r = report(&rep, fmt);
    r.stderr = "refusing: not a short exact sequence of Hom-Lie algebras\n".into();
    Ok(Some(r))
}

fn cohomology_verb(k: usize, rep_arg: &str, algebra: Option<&Path>, fmt: Format) -> Result<RenderedReport> {
    if k > MAX_DEGREE {
        return Err(Error::Degree(k));
    }
    let rep: Representation = if rep_arg == "adjoint" {
        let p = algebra.ok_or_else(|| Error::Parse("--rep adjoint needs an algebra file".into()))?;
        adjoint(&load_algebra(p)?)
    } else {
        let rep = io::read_with(Path::new(rep_arg), io::representation_of)?;
        if let Some(p) = algebra {
            if load_algebra(p)? != rep.alg {
                return Err(Error::Parse("the algebra file differs from the representation's algebra".into()));
            }
        }
        rep
    };
    if let Some(r) = refuse(&[("algebra", &rep.alg)], fmt) {
        return Ok(r);
    }
    let rc = check_representation(&rep)?;
    if !rc.passed() {
        let mut r = report(&rc, fmt);
        r.stderr = "refusing: not a representation\n".into();
        return Ok(r);
    }
    let h = cohomology(&rep, k)?;
    let out = match fmt {
        Format::Records => {
            let v = json!({
                "kind": "cohomology",
                "degree": k,
                "dim": h.dim,
                "cocycle_dim": h.cocycles.dim(),
                "coboundary_dim": h.coboundaries.dim(),
                "representatives": h.representatives.iter().map(io::cochain_json).collect::<Vec<_>>(),
            });
            v.to_string() + "\n"
        }
        Format::Text => {
            let labels = cochain_coord_labels(&rep, k);
            let mut s = format!("dim H^{k} = {}\n", h.dim);
            s.push_str(&format!("  dim Z^{k} = {}, dim B^{k} = {}\n", h.cocycles.dim(), h.coboundaries.dim()));
            for (i, c) in h.representatives.iter().enumerate() {
                let terms: Vec<String> = c
                    .coords()
                    .iter()
                    .zip(&labels)
                    .filter(|(q, _)| **q != crate::exactlin::int(0))
                    .map(|(q, l)| match q.to_string().as_str() {
                        "1" => format!("+ {l}"),
                        "-1" => format!("- {l}"),
                        c if c.starts_with('-') => format!("- {}*{l}", &c[1..]),
                        c => format!("+ {c}*{l}"),
                    })
                    .collect();
                let joined = terms.join(" ");
                s.push_str(&format!("  class {i}: {}\n", joined.strip_prefix("+ ").unwrap_or(&joined)));
            }
            s
        }
    };
    Ok(RenderedReport::out(out, STATUS_OK))
}
