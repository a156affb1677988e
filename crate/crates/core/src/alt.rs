//! Alternating multilinear maps `∧^k F^n → F^t`, stored densely over
//! strictly increasing index tuples in lexicographic order.
//!
//! This one representation backs module-valued cochains, the graded
//! cochains of the deformation complex, 2-cocycle components and the
//! ternary bracket of a 2-algebra.

use num_traits::{One, Zero};

use crate::error::{dim_err, Error, Result};
use crate::exactlin::{axpy, is_zero_vec, zero_vec, Rational, Vector};

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: usize = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// All strictly increasing `k`-tuples of `0..n`, lexicographically.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::with_capacity(binomial(n, k));
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Lexicographic rank of a strictly increasing tuple among `combinations(n, len)`.
pub fn combination_rank(tuple: &[usize], n: usize) -> usize {
    let k = tuple.len();
    let mut rank = 0;
    let mut prev: usize = 0;
    for (i, &c) in tuple.iter().enumerate() {
        for v in prev..c {
            rank += binomial(n - 1 - v, k - 1 - i);
        }
        prev = c + 1;
    }
    rank
}

/// Sign of a permutation given as the image list of `0..len`.
pub fn permutation_sign(perm: &[usize]) -> i32 {
    let mut inversions = 0;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Sorts indices, returning the sign of the sorting permutation, or `None`
/// when an index repeats.
pub fn sort_with_sign(indices: &[usize]) -> Option<(Vec<usize>, i32)> {
    let mut v = indices.to_vec();
    let mut sign = 1;
    // insertion sort, counting transpositions
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((v, sign))
}

/// `(first, second)`-unshuffles of `0..first+second`: permutations σ increasing
/// on the first `first` slots and on the last `second` slots. Each is returned
/// as its image list `[σ(0), …]` with its sign.
pub fn unshuffles(first: usize, second: usize) -> Vec<(Vec<usize>, i32)> {
    let total = first + second;
    combinations(total, first)
        .into_iter()
        .map(|head| {
            let mut perm = head.clone();
            perm.extend((0..total).filter(|i| !head.contains(i)));
            let sign = permutation_sign(&perm);
            (perm, sign)
        })
        .collect()
}

/// Alternating `arity`-linear map from `F^src_dim` to `F^tgt_dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AltMap {
    arity: usize,
    src_dim: usize,
    tgt_dim: usize,
    values: Vec<Vector>,
}

impl AltMap {
    pub fn zero(arity: usize, src_dim: usize, tgt_dim: usize) -> AltMap {
        AltMap { arity, src_dim, tgt_dim, values: vec![zero_vec(tgt_dim); binomial(src_dim, arity)] }
    }

    /// An arity-0 map is just a vector.
    pub fn constant(v: Vector) -> AltMap {
        AltMap { arity: 0, src_dim: 0, tgt_dim: v.len(), values: vec![v] }
    }

    pub fn constant_on(src_dim: usize, v: Vector) -> AltMap {
        AltMap { arity: 0, src_dim, tgt_dim: v.len(), values: vec![v] }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn src_dim(&self) -> usize {
        self.src_dim
    }

    pub fn tgt_dim(&self) -> usize {
        self.tgt_dim
    }

    /// Number of coordinates: `C(src_dim, arity) * tgt_dim`.
    pub fn coord_dim(&self) -> usize {
        self.values.len() * self.tgt_dim
    }

    pub fn tuples(&self) -> Vec<Vec<usize>> {
        combinations(self.src_dim, self.arity)
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| is_zero_vec(v))
    }

    /// Value on an increasing tuple.
    pub fn value_sorted(&self, tuple: &[usize]) -> &Vector {
        &self.values[combination_rank(tuple, self.src_dim)]
    }

    /// Value on basis vectors in any order; repeats give zero.
    pub fn value_at(&self, indices: &[usize]) -> Vector {
        match sort_with_sign(indices) {
            None => zero_vec(self.tgt_dim),
            Some((t, s)) => {
                let v = self.value_sorted(&t);
                if s == 1 {
                    v.clone()
                } else {
                    v.iter().map(|x| -x).collect()
                }
            }
        }
    }

    /// Sets the value on basis vectors in any order, keeping the map alternating.
    pub fn set(&mut self, indices: &[usize], value: Vector) -> Result<()> {
        if indices.len() != self.arity || indices.iter().any(|&i| i >= self.src_dim) {
            return dim_err(format!("index tuple {indices:?} for an arity-{} map on F^{}", self.arity, self.src_dim));
        }
        if value.len() != self.tgt_dim {
            return dim_err(format!("value of length {} for target F^{}", value.len(), self.tgt_dim));
        }
        let (t, s) = sort_with_sign(indices).ok_or_else(|| Error::Dimension(format!("repeated index in {indices:?}")))?;
        let r = combination_rank(&t, self.src_dim);
        self.values[r] = if s == 1 { value } else { value.into_iter().map(|x| -x).collect() };
        Ok(())
    }

    /// Multilinear evaluation on arbitrary vectors.
    pub fn eval(&self, args: &[&[Rational]]) -> Vector {
        assert_eq!(args.len(), self.arity, "argument count");
        let mut out = zero_vec(self.tgt_dim);
        let mut chosen = Vec::with_capacity(self.arity);
        self.eval_rec(args, &mut chosen, &Rational::one(), &mut out);
        out
    }

    fn eval_rec(&self, args: &[&[Rational]], chosen: &mut Vec<usize>, coeff: &Rational, out: &mut Vector) {
        let pos = chosen.len();
        if pos == args.len() {
            let (t, s) = sort_with_sign(chosen).expect("repeats are skipped");
            let v = self.value_sorted(&t);
            let c = if s == 1 { coeff.clone() } else { -coeff.clone() };
            axpy(out, &c, v);
            return;
        }
        for (i, a) in args[pos].iter().enumerate() {
            if a.is_zero() || chosen.contains(&i) {
                continue;
            }
            chosen.push(i);
            self.eval_rec(args, chosen, &(coeff * a), out);
            chosen.pop();
        }
    }

    /// Flat coordinates: tuple-major, target index minor.
    pub fn coords(&self) -> Vector {
        self.values.iter().flat_map(|v| v.iter().cloned()).collect()
    }

    pub fn from_coords(arity: usize, src_dim: usize, tgt_dim: usize, coords: &[Rational]) -> Result<AltMap> {
        let n = binomial(src_dim, arity);
        if coords.len() != n * tgt_dim {
            return dim_err(format!("{} coordinates, expected {}", coords.len(), n * tgt_dim));
        }
        let values = if tgt_dim == 0 { vec![Vec::new(); n] } else { coords.chunks(tgt_dim).map(|c| c.to_vec()).collect() };
        Ok(AltMap { arity, src_dim, tgt_dim, values })
    }

    pub fn elementary(arity: usize, src_dim: usize, tgt_dim: usize, coord: usize) -> AltMap {
        let mut m = AltMap::zero(arity, src_dim, tgt_dim);
        m.values[coord / tgt_dim][coord % tgt_dim] = Rational::one();
        m
    }

    fn same_shape(&self, other: &AltMap) -> bool {
        self.arity == other.arity && self.src_dim == other.src_dim && self.tgt_dim == other.tgt_dim
    }

    pub fn add(&self, other: &AltMap) -> AltMap {
        assert!(self.same_shape(other), "alternating map shapes differ");
        let mut out = self.clone();
        for (a, b) in out.values.iter_mut().zip(&other.values) {
            axpy(a, &Rational::one(), b);
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> AltMap {
        let mut out = self.clone();
        for v in &mut out.values {
            for x in v.iter_mut() {
                *x *= c;
            }
        }
        out
    }

    pub fn sub(&self, other: &AltMap) -> AltMap {
        self.add(&other.scale(&-Rational::one()))
    }

    /// Applies a linear map to every value.
    pub fn map_values(&self, m: &crate::exactlin::Matrix) -> AltMap {
        assert_eq!(m.cols(), self.tgt_dim, "post-composition shape");
        AltMap {
            arity: self.arity,
            src_dim: self.src_dim,
            tgt_dim: m.rows(),
            values: self.values.iter().map(|v| m.mul_vec(v)).collect(),
        }
    }

    /// Builds a map by evaluating `f` on every increasing basis tuple.
    pub fn from_fn(arity: usize, src_dim: usize, tgt_dim: usize, mut f: impl FnMut(&[usize]) -> Vector) -> AltMap {
        let values = combinations(src_dim, arity).iter().map(|t| f(t)).collect::<Vec<_>>();
        debug_assert!(values.iter().all(|v| v.len() == tgt_dim));
        AltMap { arity, src_dim, tgt_dim, values }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{int, unit_vec};

    #[test]
    fn ranks_match_enumeration() {
        for n in 0..7 {
            for k in 0..=n {
                for (i, t) in combinations(n, k).iter().enumerate() {
                    assert_eq!(combination_rank(t, n), i);
                }
            }
        }
    }

    #[test]
    fn unshuffle_signs() {
        // (2,1)-unshuffles of three slots: 012 (+), 021 (-), 120 (+)
        let u = unshuffles(2, 1);
        assert_eq!(u, vec![(vec![0, 1, 2], 1), (vec![0, 2, 1], -1), (vec![1, 2, 0], 1)]);
        assert_eq!(unshuffles(1, 0), vec![(vec![0], 1)]);
    }

    #[test]
    fn alternating_access() {
        let mut f = AltMap::zero(2, 3, 1);
        f.set(&[2, 0], vec![int(5)]).unwrap();
        assert_eq!(f.value_at(&[0, 2]), vec![int(-5)]);
        assert_eq!(f.value_at(&[2, 0]), vec![int(5)]);
        assert_eq!(f.value_at(&[1, 1]), vec![int(0)]);
        assert!(f.set(&[1, 1], vec![int(1)]).is_err());
        let e0 = unit_vec(3, 0);
        let e2 = unit_vec(3, 2);
        assert_eq!(f.eval(&[&e2, &e0]), vec![int(5)]);
        let s = vec![int(1), int(0), int(1)];
        assert_eq!(f.eval(&[&s, &s]), vec![int(0)]);
    }
}
