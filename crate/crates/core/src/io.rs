//! JSON file formats. Every parse error names the offending location, either
//! as `line:column` for syntax errors or as a JSON path for shape errors.
//!
//! Rationals are strings `"p/q"` or `"p"`; plain JSON integers are accepted
//! on input. Matrices are arrays of rows. Multilinear tables are objects keyed
//! by comma-separated basis indices (`"0,2"`), missing keys meaning zero.
//! Algebras referenced from other files may be inline objects or path strings
//! resolved relative to the referencing file.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use num_traits::Zero;
use serde_json::{json, Map, Value};

use crate::alt::AltMap;
use crate::error::{Error, Result};
use crate::exactlin::{format_rational, parse_rational, zero_vec, Matrix, Rational, Vector};
use crate::extensions::{CocyclePair, ExtensionPresentation, IsoWitness, SectionData};
use crate::homlie::{default_labels, HomLieAlgebra};
use crate::homlie2::{HomLie2Algebra, HomotopyData, TwoAlgMorphism};
use crate::repcoh::Representation;

/// A JSON value together with its path from the document root.
#[derive(Clone, Copy)]
pub struct Node<'a> {
    value: &'a Value,
    path: &'a str,
}

fn perr<T>(path: &str, msg: impl std::fmt::Display) -> Result<T> {
    Err(Error::Parse(format!("at {path}: {msg}")))
}

/// Where nested file references are resolved from.
#[derive(Clone, Debug, Default)]
pub struct Source {
    pub name: String,
    pub dir: Option<PathBuf>,
}

impl Source {
    pub fn inline(name: &str) -> Self {
        Source { name: name.to_string(), dir: None }
    }
}

/// Parses JSON text; syntax errors carry `name:line:column`.
pub fn parse_document(text: &str, name: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| Error::Parse(format!("{name}:{}:{}: {e}", e.line(), e.column())))
}

pub fn read_document(path: &Path) -> Result<(Value, Source)> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: cannot read: {e}", path.display())))?;
    let name = path.display().to_string();
    let v = parse_document(&text, &name)?;
    Ok((v, Source { name, dir: path.parent().map(Path::to_path_buf) }))
}

fn child_path(path: &str, key: &str) -> String {
    format!("{path}.{key}")
}

/// Applies `f` to the field `key`, which must be present.
pub fn with_child<T>(n: Node, key: &str, f: impl FnOnce(Node) -> Result<T>) -> Result<T> {
    let path = child_path(n.path, key);
    match n.value.get(key) {
        Some(v) => f(Node { value: v, path: &path }),
        None => perr(n.path, format!("missing field {key:?}")),
    }
}

fn with_optional<T>(n: Node, key: &str, f: impl FnOnce(Node) -> Result<T>) -> Result<Option<T>> {
    let path = child_path(n.path, key);
    match n.value.get(key) {
        Some(Value::Null) | None => Ok(None),
        Some(v) => f(Node { value: v, path: &path }).map(Some),
    }
}

fn object<'a>(n: Node<'a>) -> Result<&'a Map<String, Value>> {
    n.value.as_object().map_or_else(|| perr(n.path, "expected an object"), Ok)
}

fn array<'a>(n: Node<'a>) -> Result<&'a Vec<Value>> {
    n.value.as_array().map_or_else(|| perr(n.path, "expected an array"), Ok)
}

fn each<T>(n: Node, mut f: impl FnMut(Node) -> Result<T>) -> Result<Vec<T>> {
    array(n)?
        .iter()
        .enumerate()
        .map(|(i, v)| {
            let p = format!("{}[{i}]", n.path);
            f(Node { value: v, path: &p })
        })
        .collect()
}

fn usize_of(n: Node) -> Result<usize> {
    match n.value.as_u64() {
        Some(k) => Ok(k as usize),
        None => perr(n.path, "expected a non-negative integer"),
    }
}

pub fn rational_of(n: Node) -> Result<Rational> {
    match n.value {
        Value::String(s) => parse_rational(s).or_else(|e| perr(n.path, e)),
        Value::Number(x) => match x.as_i64() {
            Some(k) => Ok(Rational::from_integer(k.into())),
            None => perr(n.path, "numbers must be integers; write fractions as \"p/q\""),
        },
        _ => perr(n.path, "expected a rational string"),
    }
}

pub fn vector_of(n: Node, len: usize) -> Result<Vector> {
    let v = each(n, rational_of)?;
    if v.len() != len {
        return perr(n.path, format!("expected {len} entries, found {}", v.len()));
    }
    Ok(v)
}

/// A `rows × cols` matrix. An empty array is accepted when either side is zero.
pub fn matrix_of(n: Node, rows: usize, cols: usize) -> Result<Matrix> {
    if rows * cols == 0 && array(n)?.is_empty() {
        return Ok(Matrix::zeros(rows, cols));
    }
    let rs = each(n, |r| vector_of(r, cols))?;
    if rs.len() != rows {
        return perr(n.path, format!("expected {rows} rows, found {}", rs.len()));
    }
    Matrix::from_rows(rs, cols).or_else(|e| perr(n.path, e))
}

/// A square matrix whose size is read from the data.
pub fn square_matrix_of(n: Node) -> Result<Matrix> {
    let rows = array(n)?.len();
    matrix_of(n, rows, rows)
}

fn parse_key(path: &str, key: &str, arity: usize, bounds: &[usize]) -> Result<Vec<usize>> {
    let parts: Vec<&str> = if key.trim().is_empty() { Vec::new() } else { key.split(',').collect() };
    if parts.len() != arity {
        return perr(path, format!("key {key:?} should list {arity} indices"));
    }
    let mut out = Vec::with_capacity(arity);
    for (p, &b) in parts.iter().zip(bounds) {
        match p.trim().parse::<usize>() {
            Ok(i) if i < b => out.push(i),
            _ => return perr(path, format!("key {key:?}: index {p:?} is not below {b}")),
        }
    }
    Ok(out)
}

fn keyed_entries(n: Node, arity: usize, bounds: &[usize], len: usize) -> Result<Vec<(Vec<usize>, Vector)>> {
    let mut out = Vec::new();
    for (k, v) in object(n)? {
        let p = format!("{}[{k:?}]", n.path);
        let idx = parse_key(&p, k, arity, bounds)?;
        out.push((idx, vector_of(Node { value: v, path: &p }, len)?));
    }
    Ok(out)
}

fn key_string(idx: &[usize]) -> String {
    idx.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

/// Dense `i·cols + j` table from keyed entries.
fn table_of(n: Node, rows: usize, cols: usize, len: usize) -> Result<Vec<Vector>> {
    let mut t = vec![zero_vec(len); rows * cols];
    for (idx, v) in keyed_entries(n, 2, &[rows, cols], len)? {
        t[idx[0] * cols + idx[1]] = v;
    }
    Ok(t)
}

pub fn altmap_of(n: Node, arity: usize, src: usize, tgt: usize) -> Result<AltMap> {
    let mut m = AltMap::zero(arity, src, tgt);
    for (idx, v) in keyed_entries(n, arity, &vec![src; arity], tgt)? {
        m.set(&idx, v).or_else(|e| perr(n.path, e))?;
    }
    Ok(m)
}

pub fn rationals_json(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(|q| Value::String(format_rational(q))).collect())
}

pub fn matrix_json(m: &Matrix) -> Value {
    Value::Array(m.row_vectors().iter().map(|r| rationals_json(r)).collect())
}

fn nonzero_table_json(entries: impl Iterator<Item = (Vec<usize>, Vector)>) -> Value {
    let map: BTreeMap<String, Value> =
        entries.filter(|(_, v)| !crate::exactlin::is_zero_vec(v)).map(|(k, v)| (key_string(&k), rationals_json(&v))).collect();
    json!(map)
}

pub fn altmap_json(m: &AltMap) -> Value {
    nonzero_table_json(m.tuples().into_iter().map(|t| {
        let v = m.value_sorted(&t).clone();
        (t, v)
    }))
}

fn dense_table_json(t: &[Vector], cols: usize) -> Value {
    nonzero_table_json(t.iter().enumerate().map(|(k, v)| (vec![k / cols, k % cols], v.clone())))
}

// ---------------------------------------------------------------- algebras

/// A sparse vector `{"k": rational}` of length `len`; absent keys are zero.
fn sparse_vector_of(n: Node, len: usize) -> Result<Vector> {
    let mut v = zero_vec(len);
    for (k, x) in object(n)? {
        let p = format!("{}[{k:?}]", n.path);
        let i = parse_key(&p, k, 1, &[len])?[0];
        v[i] = rational_of(Node { value: x, path: &p })?;
    }
    Ok(v)
}

fn sparse_vector_json(v: &[Rational]) -> Value {
    let map: BTreeMap<String, Value> = v
        .iter()
        .enumerate()
        .filter(|(_, q)| !q.is_zero())
        .map(|(k, q)| (k.to_string(), Value::String(format_rational(q))))
        .collect();
    json!(map)
}

fn sparse_entries(n: Node, dim: usize) -> Result<Vec<(Vec<usize>, Vector)>> {
    let mut out = Vec::new();
    for (k, v) in object(n)? {
        let p = format!("{}[{k:?}]", n.path);
        let idx = parse_key(&p, k, 2, &[dim, dim])?;
        out.push((idx, sparse_vector_of(Node { value: v, path: &p }, dim)?));
    }
    Ok(out)
}

fn sparse_table_json(entries: impl Iterator<Item = ((usize, usize), Vector)>) -> Value {
    let map: BTreeMap<String, Value> = entries
        .filter(|(_, v)| !crate::exactlin::is_zero_vec(v))
        .map(|((i, j), v)| (format!("{i},{j}"), sparse_vector_json(&v)))
        .collect();
    json!(map)
}

/// `{"dim", "basis", "bracket" | "full_bracket", "phi"}`. Either `dim` or
/// `basis` may be omitted; `phi` defaults to the identity.
pub fn algebra_of(n: Node) -> Result<HomLieAlgebra> {
    let basis: Option<Vec<String>> = with_optional(n, "basis", |b| {
        each(b, |x| x.value.as_str().map(str::to_string).map_or_else(|| perr(x.path, "expected a label string"), Ok))
    })?;
    let declared = with_optional(n, "dim", usize_of)?;
    let basis = match (basis, declared) {
        (Some(b), Some(d)) if b.len() != d => return perr(n.path, format!("dim is {d} but basis lists {} labels", b.len())),
        (Some(b), _) => b,
        (None, Some(d)) => default_labels(d),
        (None, None) => return perr(n.path, "missing field \"dim\" or \"basis\""),
    };
    let dim = basis.len();
    let phi = with_optional(n, "phi", |p| matrix_of(p, dim, dim))?.unwrap_or_else(|| Matrix::identity(dim));
    let mut table = vec![zero_vec(dim); dim * dim];
    // `bracket` lists [e_i, e_j] for i < j and is completed antisymmetrically.
    // `full_bracket` is the raw table and exists so that broken input can be
    // written down and rejected by verification rather than by the parser.
    let full = n.value.get("full_bracket").is_some();
    if full && n.value.get("bracket").is_some() {
        return perr(n.path, "give either \"bracket\" or \"full_bracket\", not both");
    }
    let key = if full { "full_bracket" } else { "bracket" };
    let entries = with_optional(n, key, |b| sparse_entries(b, dim))?.unwrap_or_default();
    for (k, v) in entries {
        if !full {
            if k[0] >= k[1] {
                return perr(
                    &format!("{}.bracket[\"{},{}\"]", n.path, k[0], k[1]),
                    "keys must satisfy i < j; use \"full_bracket\" for a non-antisymmetric table",
                );
            }
            table[k[1] * dim + k[0]] = v.iter().map(|q| -q).collect();
        }
        table[k[0] * dim + k[1]] = v;
    }
    HomLieAlgebra::from_table(basis, table, phi).or_else(|e| perr(n.path, e))
}

pub fn algebra_json(a: &HomLieAlgebra) -> Value {
    let n = a.dim();
    let entry = |i: usize, j: usize| ((i, j), a.bracket_basis(i, j).clone());
    let mut v = json!({ "dim": n, "basis": a.basis(), "phi": matrix_json(a.phi()) });
    if a.is_antisymmetric() {
        v["bracket"] = sparse_table_json((0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).map(|(i, j)| entry(i, j)));
    } else {
        v["full_bracket"] = sparse_table_json((0..n * n).map(|k| entry(k / n, k % n)));
    }
    v
}

/// An inline algebra object or a path string relative to `src`.
pub fn algebra_ref(n: Node, src: &Source) -> Result<HomLieAlgebra> {
    match n.value {
        Value::String(p) => {
            let path = src.dir.as_ref().map_or_else(|| PathBuf::from(p), |d| d.join(p));
            let (v, _) = read_document(&path)?;
            algebra_of(Node { value: &v, path: "$" })
        }
        _ => algebra_of(n),
    }
}

fn root(v: &Value) -> Node<'_> {
    Node { value: v, path: "$" }
}

pub fn read_algebra(path: &Path) -> Result<HomLieAlgebra> {
    let (v, _) = read_document(path)?;
    algebra_of(root(&v))
}

// ---------------------------------------------------------- other formats

/// `{"algebra", "module_dim", "rho": [matrix per basis vector], "beta"}`;
/// `module_dim` may be omitted and is then read off `beta`.
pub fn representation_of(n: Node, src: &Source) -> Result<Representation> {
    let alg = with_child(n, "algebra", |a| algebra_ref(a, src))?;
    let beta = with_child(n, "beta", square_matrix_of)?;
    let m = beta.rows();
    if let Some(d) = with_optional(n, "module_dim", usize_of)? {
        if d != m {
            return perr(n.path, format!("module_dim is {d} but beta is {m}x{m}"));
        }
    }
    let rho = with_child(n, "rho", |r| each(r, |x| matrix_of(x, m, m)))?;
    if rho.len() != alg.dim() {
        return perr(n.path, format!("rho lists {} matrices for an algebra of dimension {}", rho.len(), alg.dim()));
    }
    Representation::new(alg, rho, beta).or_else(|e| perr(n.path, e))
}

pub fn representation_json(r: &Representation) -> Value {
    json!({
        "algebra": algebra_json(&r.alg),
        "module_dim": r.module_dim,
        "rho": r.rho.iter().map(matrix_json).collect::<Vec<_>>(),
        "beta": matrix_json(&r.beta),
    })
}

/// A single matrix stored under `key`, with the expected shape.
pub fn keyed_matrix_of(n: Node, key: &str, rows: usize, cols: usize) -> Result<Matrix> {
    with_child(n, key, |m| matrix_of(m, rows, cols))
}

/// `{"degree", "values": {"i,j,…": vector}}`, a cochain on an algebra of
/// dimension `src` with values in a module of dimension `tgt`.
pub fn cochain_of(n: Node, src: usize, tgt: usize) -> Result<AltMap> {
    let degree = with_child(n, "degree", usize_of)?;
    if degree > src && degree > 0 {
        return perr(n.path, format!("degree {degree} exceeds the algebra dimension {src}"));
    }
    with_child(n, "values", |v| altmap_of(v, degree, src, tgt))
}

pub fn cochain_json(m: &AltMap) -> Value {
    json!({ "degree": m.arity(), "values": altmap_json(m) })
}

/// `{"dim1", "dim0", "d", "l2_00", "l2_01", "l3", "phi0", "phi1"}`.
/// `l2_00` is keyed `"i,j"`, `l2_01` is keyed `"i,a"` with `i` in `V₀` and
/// `a` in `V₁`, `l3` is keyed by increasing triples.
pub fn homlie2_of(n: Node) -> Result<HomLie2Algebra> {
    let dim1 = with_child(n, "dim1", usize_of)?;
    let dim0 = with_child(n, "dim0", usize_of)?;
    let v = HomLie2Algebra {
        dim1,
        dim0,
        d: keyed_matrix_of(n, "d", dim0, dim1)?,
        l2_00: with_optional(n, "l2_00", |t| table_of(t, dim0, dim0, dim0))?.unwrap_or_else(|| vec![zero_vec(dim0); dim0 * dim0]),
        l2_01: with_optional(n, "l2_01", |t| table_of(t, dim0, dim1, dim1))?.unwrap_or_else(|| vec![zero_vec(dim1); dim0 * dim1]),
        l3: with_optional(n, "l3", |t| altmap_of(t, 3, dim0, dim1))?.unwrap_or_else(|| AltMap::zero(3, dim0, dim1)),
        phi0: keyed_matrix_of(n, "phi0", dim0, dim0)?,
        phi1: keyed_matrix_of(n, "phi1", dim1, dim1)?,
    };
    v.check_shapes().or_else(|e| perr(n.path, e))?;
    Ok(v)
}

pub fn homlie2_json(v: &HomLie2Algebra) -> Value {
    json!({
        "dim1": v.dim1,
        "dim0": v.dim0,
        "d": matrix_json(&v.d),
        "l2_00": dense_table_json(&v.l2_00, v.dim0),
        "l2_01": dense_table_json(&v.l2_01, v.dim1.max(1)),
        "l3": altmap_json(&v.l3),
        "phi0": matrix_json(&v.phi0),
        "phi1": matrix_json(&v.phi1),
    })
}

/// `{"f0", "f1", "f2"}` between the given source and target.
pub fn morphism2_of(n: Node, src: &HomLie2Algebra, dst: &HomLie2Algebra) -> Result<TwoAlgMorphism> {
    Ok(TwoAlgMorphism {
        f0: keyed_matrix_of(n, "f0", dst.dim0, src.dim0)?,
        f1: keyed_matrix_of(n, "f1", dst.dim1, src.dim1)?,
        f2: with_optional(n, "f2", |t| altmap_of(t, 2, src.dim0, dst.dim1))?
            .unwrap_or_else(|| AltMap::zero(2, src.dim0, dst.dim1)),
    })
}

pub fn morphism2_json(f: &TwoAlgMorphism) -> Value {
    json!({ "f0": matrix_json(&f.f0), "f1": matrix_json(&f.f1), "f2": altmap_json(&f.f2) })
}

/// `{"tau"}`, a `dim1(dst) × dim0(src)` matrix.
pub fn homotopy_of(n: Node, src: &HomLie2Algebra, dst: &HomLie2Algebra) -> Result<HomotopyData> {
    Ok(HomotopyData { tau: keyed_matrix_of(n, "tau", dst.dim1, src.dim0)? })
}

pub fn homotopy_json(t: &HomotopyData) -> Value {
    json!({ "tau": matrix_json(&t.tau) })
}

/// `{"g", "h", "rho": [m×m per basis vector of g], "omega": {"i,j": vector}}`.
pub fn cocycle_of(n: Node, src: &Source) -> Result<CocyclePair> {
    let g = with_child(n, "g", |a| algebra_ref(a, src))?;
    let h = with_child(n, "h", |a| algebra_ref(a, src))?;
    let (dn, dm) = (g.dim(), h.dim());
    let rho = with_optional(n, "rho", |r| each(r, |x| matrix_of(x, dm, dm)))?.unwrap_or_else(|| vec![Matrix::zeros(dm, dm); dn]);
    if rho.len() != dn {
        return perr(&child_path(n.path, "rho"), format!("expected {dn} matrices, found {}", rho.len()));
    }
    let omega = with_optional(n, "omega", |o| altmap_of(o, 2, dn, dm))?.unwrap_or_else(|| AltMap::zero(2, dn, dm));
    CocyclePair::new(g, h, rho, omega).or_else(|e| perr(n.path, e))
}

pub fn cocycle_json(c: &CocyclePair) -> Value {
    json!({
        "g": algebra_json(&c.g),
        "h": algebra_json(&c.h),
        "rho": c.rho.iter().map(matrix_json).collect::<Vec<_>>(),
        "omega": altmap_json(&c.omega),
    })
}

/// `{"phitheta"}`, an `m × n` matrix for cocycles on `(g, h)`.
pub fn witness_of(n: Node, g: &HomLieAlgebra, h: &HomLieAlgebra) -> Result<IsoWitness> {
    Ok(IsoWitness { phitheta: keyed_matrix_of(n, "phitheta", h.dim(), g.dim())? })
}

pub fn witness_json(w: &IsoWitness) -> Value {
    json!({ "phitheta": matrix_json(&w.phitheta) })
}

/// `{"ghat", "g", "h", "iota", "p"}` with an optional `"section"` matrix.
pub fn presentation_of(
    n: Node,
    src: &Source,
) -> Result<(ExtensionPresentation, HomLieAlgebra, HomLieAlgebra, Option<SectionData>)> {
    let ghat = with_child(n, "ghat", |a| algebra_ref(a, src))?;
    let g = with_child(n, "g", |a| algebra_ref(a, src))?;
    let h = with_child(n, "h", |a| algebra_ref(a, src))?;
    let big = ghat.dim();
    let iota = keyed_matrix_of(n, "iota", big, h.dim())?;
    let p = keyed_matrix_of(n, "p", g.dim(), big)?;
    let s = with_optional(n, "section", |s| matrix_of(s, big, g.dim()))?.map(|s| SectionData { s });
    Ok((ExtensionPresentation { ghat, iota, p }, g, h, s))
}

pub fn presentation_json(e: &ExtensionPresentation, g: &HomLieAlgebra, h: &HomLieAlgebra, s: Option<&SectionData>) -> Value {
    let mut v = json!({
        "ghat": algebra_json(&e.ghat),
        "g": algebra_json(g),
        "h": algebra_json(h),
        "iota": matrix_json(&e.iota),
        "p": matrix_json(&e.p),
    });
    if let Some(s) = s {
        v["section"] = matrix_json(&s.s);
    }
    v
}

/// Parses a whole document with `f` applied at the root.
pub fn from_str_with<T>(text: &str, name: &str, f: impl FnOnce(Node, &Source) -> Result<T>) -> Result<T> {
    let v = parse_document(text, name)?;
    f(root(&v), &Source::inline(name))
}

pub fn read_with<T>(path: &Path, f: impl FnOnce(Node, &Source) -> Result<T>) -> Result<T> {
    let (v, src) = read_document(path)?;
    f(root(&v), &src)
}

pub fn labels_or_default(a: &HomLieAlgebra) -> Vec<String> {
    if a.basis().is_empty() {
        default_labels(a.dim())
    } else {
        a.basis().to_vec()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{int, rat};
    use crate::fixtures;

    fn round_trip_algebra(a: &HomLieAlgebra) {
        let text = algebra_json(a).to_string();
        let b = from_str_with(&text, "t", |n, _| algebra_of(n)).unwrap();
        assert_eq!(&b, a);
    }

    #[test]
    fn algebras_round_trip() {
        for (_, a) in fixtures::corpus_algebras() {
            round_trip_algebra(&a);
        }
        let mut raw = HomLieAlgebra::sl2();
        raw.set_bracket_raw(0, 1, vec![int(1), int(0), int(0)]);
        round_trip_algebra(&raw);
    }

    #[test]
    fn cocycles_and_2algebras_round_trip() {
        for (_, c) in fixtures::valid_cocycles() {
            let text = cocycle_json(&c).to_string();
            assert_eq!(from_str_with(&text, "c", cocycle_of).unwrap(), c);
        }
        let v = crate::homlie2::build_der2(&HomLieAlgebra::heisenberg()).unwrap();
        let text = homlie2_json(&v).to_string();
        assert_eq!(from_str_with(&text, "v", |n, _| homlie2_of(n)).unwrap(), v);
    }

    #[test]
    fn parse_errors_name_their_location() {
        let e = parse_document("{\n  \"basis\": [\"a\",]\n}", "x.json").unwrap_err().to_string();
        assert!(e.contains("x.json:2:"), "{e}");
        let e = from_str_with(r#"{"basis":["a","b"],"phi":[["1","0"],["0","1/0"]]}"#, "y", |n, _| algebra_of(n))
            .unwrap_err()
            .to_string();
        assert!(e.contains("$.phi[1][1]"), "{e}");
        let e = from_str_with(r#"{"dim":2,"bracket":{"0,5":{"0":"1"}}}"#, "z", |n, _| algebra_of(n)).unwrap_err().to_string();
        assert!(e.contains("\"0,5\""), "{e}");
        let e = from_str_with(r#"{"dim":2,"bracket":{"0,1":{"2":"1"}}}"#, "w", |n, _| algebra_of(n)).unwrap_err().to_string();
        assert!(e.contains("$.bracket[\"0,1\"]"), "{e}");
        let e = from_str_with(r#"{"dim":3,"basis":["a","b"]}"#, "v", |n, _| algebra_of(n)).unwrap_err().to_string();
        assert!(e.contains("dim is 3"), "{e}");
    }

    #[test]
    fn sparse_brackets_and_default_labels() {
        let a = from_str_with(r#"{"dim":3,"bracket":{"0,1":{"2":"1"}}}"#, "h", |n, _| algebra_of(n)).unwrap();
        assert_eq!(a.bracket_basis(1, 0), &vec![int(0), int(0), int(-1)]);
        assert_eq!(a.basis(), ["e0", "e1", "e2"]);
        let c = AltMap::from_coords(2, 3, 1, &[int(1), rat(1, 2), int(0)]).unwrap();
        let text = cochain_json(&c).to_string();
        assert_eq!(text, r#"{"degree":2,"values":{"0,1":["1"],"0,2":["1/2"]}}"#);
        assert_eq!(from_str_with(&text, "c", |n, _| cochain_of(n, 3, 1)).unwrap(), c);
    }

    #[test]
    fn rationals_accept_integers_and_fractions() {
        let v: Value = serde_json::from_str(r#"[2, "-3/6", " 4 "]"#).unwrap();
        assert_eq!(vector_of(root(&v), 3).unwrap(), vec![int(2), rat(-1, 2), int(4)]);
    }

    #[test]
    fn one_sided_tables_survive_a_round_trip() {
        let mut a = HomLieAlgebra::heisenberg();
        a.set_bracket_raw(1, 0, zero_vec(3));
        assert!(!a.is_antisymmetric());
        round_trip_algebra(&a);
        let v: Value = serde_json::from_str(r#"{"basis": ["a", "b"], "bracket": {"1,0": {"0": "1"}}}"#).unwrap();
        assert!(algebra_of(root(&v)).unwrap_err().to_string().contains("full_bracket"));
    }
}
