//! Exact integer matrices and the structural notions everything else builds
//! on: sign symmetry, principal submatrices, simultaneous permutation, direct
//! sums, connectivity of the nonzero pattern, and fraction-free determinants.
//!
//! Indices are 0-based throughout the API; user-facing formats (matrix text,
//! JSON reports, error messages) render them 1-based.

use std::collections::VecDeque;
use std::fmt;
use std::ops::{Index, IndexMut};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{Number, Value};

/// Exact rational number; always in lowest terms with a positive denominator.
pub type Rational = num_rational::BigRational;

/// A square matrix of arbitrary-precision integers, stored row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    n: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    /// The `n` x `n` zero matrix. `n = 0` is allowed.
    pub fn zero(n: usize) -> Self {
        IntMatrix {
            n,
            entries: vec![BigInt::zero(); n * n],
        }
    }

    /// Builds a matrix from rows.
    ///
    /// Panics if the rows do not form a square matrix.
    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Self {
        let n = rows.len();
        assert!(
            rows.iter().all(|r| r.len() == n),
            "rows do not form a square matrix"
        );
        IntMatrix {
            n,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    /// Convenience constructor from machine integers, mostly for tests.
    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    /// Builds a matrix from a flat row-major buffer of machine integers.
    /// Returns `None` unless `entries.len() == n * n`.
    pub fn from_flat_i64(n: usize, entries: &[i64]) -> Option<Self> {
        (entries.len() == n * n).then(|| IntMatrix {
            n,
            entries: entries.iter().map(|&x| BigInt::from(x)).collect(),
        })
    }

    /// The entry as an `i64`, or `None` when it does not fit.
    pub fn entry_i64(&self, i: usize, j: usize) -> Option<i64> {
        num_traits::ToPrimitive::to_i64(self.entry(i, j))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[BigInt]> {
        self.entries.chunks(self.n.max(1)).take(self.n)
    }

    /// Entrywise absolute value.
    pub fn entrywise_abs(&self) -> IntMatrix {
        IntMatrix {
            n: self.n,
            entries: self.entries.iter().map(|x| x.abs()).collect(),
        }
    }

    /// The first off-diagonal pair `(i, j)` violating sign symmetry, if any.
    ///
    /// A pair violates sign symmetry when exactly one of `a_ij`, `a_ji` is
    /// zero or when `a_ij * a_ji < 0`.
    pub fn sign_symmetry_violation(&self) -> Option<(usize, usize)> {
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                let a = self.entry(i, j);
                let b = self.entry(j, i);
                let ok = (a.is_zero() && b.is_zero()) || (!a.is_zero() && a.sign() == b.sign());
                if !ok {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// True iff every off-diagonal pair is both zero or has a strictly
    /// positive product. The diagonal is unconstrained.
    pub fn is_symmetric_by_signs(&self) -> bool {
        self.sign_symmetry_violation().is_none()
    }

    /// True iff the diagonal is zero and every off-diagonal pair is both zero
    /// or has a strictly negative product.
    pub fn is_skew_symmetric_by_signs(&self) -> bool {
        for i in 0..self.n {
            if !self.entry(i, i).is_zero() {
                return false;
            }
            for j in (i + 1)..self.n {
                let a = self.entry(i, j);
                let b = self.entry(j, i);
                let ok = (a.is_zero() && b.is_zero())
                    || (!a.is_zero() && !b.is_zero() && a.sign() != b.sign());
                if !ok {
                    return false;
                }
            }
        }
        true
    }

    /// Restriction to the rows and columns in `keep`, preserving their order.
    ///
    /// `keep` must be strictly increasing to produce a principal submatrix in
    /// the usual sense. Panics on out-of-range indices.
    pub fn principal_submatrix(&self, keep: &[usize]) -> IntMatrix {
        debug_assert!(keep.windows(2).all(|w| w[0] < w[1]));
        let k = keep.len();
        let mut entries = Vec::with_capacity(k * k);
        for &i in keep {
            for &j in keep {
                entries.push(self.entry(i, j).clone());
            }
        }
        IntMatrix { n: k, entries }
    }

    /// The top-left `k` x `k` block. Panics if `k > n`.
    pub fn leading_principal_submatrix(&self, k: usize) -> IntMatrix {
        assert!(k <= self.n, "leading block size {k} exceeds dimension {}", self.n);
        let mut entries = Vec::with_capacity(k * k);
        for i in 0..k {
            for j in 0..k {
                entries.push(self.entry(i, j).clone());
            }
        }
        IntMatrix { n: k, entries }
    }

    /// Block-diagonal composition: `self` top-left, `other` bottom-right.
    pub fn direct_sum(&self, other: &IntMatrix) -> IntMatrix {
        let n = self.n + other.n;
        let mut out = IntMatrix::zero(n);
        for i in 0..self.n {
            for j in 0..self.n {
                out[(i, j)] = self.entry(i, j).clone();
            }
        }
        for i in 0..other.n {
            for j in 0..other.n {
                out[(self.n + i, self.n + j)] = other.entry(i, j).clone();
            }
        }
        out
    }

    /// Simultaneous row/column permutation: `out[p(i)][p(j)] = self[i][j]`.
    ///
    /// Panics if the permutation is on a different index range.
    pub fn permute(&self, p: &Permutation) -> IntMatrix {
        assert_eq!(p.len(), self.n, "permutation size mismatch");
        let mut out = IntMatrix::zero(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                out[(p.apply(i), p.apply(j))] = self.entry(i, j).clone();
            }
        }
        out
    }

    /// Connected components of the graph with an edge `i ~ j` whenever
    /// `a_ij != 0` or `a_ji != 0`.
    pub fn connected_components(&self) -> ComponentPartition {
        let n = self.n;
        let mut seen = vec![false; n];
        let mut blocks = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut block = Vec::new();
            let mut queue = VecDeque::from([start]);
            seen[start] = true;
            while let Some(i) = queue.pop_front() {
                block.push(i);
                for j in 0..n {
                    if !seen[j] && (!self.entry(i, j).is_zero() || !self.entry(j, i).is_zero()) {
                        seen[j] = true;
                        queue.push_back(j);
                    }
                }
            }
            block.sort_unstable();
            blocks.push(block);
        }
        ComponentPartition { n, blocks }
    }

    /// True iff the nonzero pattern is connected (vacuously true for n <= 1).
    pub fn is_connected(&self) -> bool {
        self.connected_components().blocks.len() <= 1
    }

    /// Exact determinant by Bareiss fraction-free elimination, O(n^3)
    /// arithmetic operations. The determinant of the 0 x 0 matrix is 1.
    pub fn determinant(&self) -> BigInt {
        let n = self.n;
        if n == 0 {
            return BigInt::one();
        }
        let mut m: Vec<BigInt> = self.entries.clone();
        let at = |i: usize, j: usize| i * n + j;
        let mut negated = false;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[at(k, k)].is_zero() {
                match (k + 1..n).find(|&r| !m[at(r, k)].is_zero()) {
                    Some(r) => {
                        for c in 0..n {
                            m.swap(at(k, c), at(r, c));
                        }
                        negated = !negated;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    // Exact by the Bareiss identity: prev divides the numerator.
                    let num = &m[at(i, j)] * &m[at(k, k)] - &m[at(i, k)] * &m[at(k, j)];
                    m[at(i, j)] = num / &prev;
                }
                m[at(i, k)] = BigInt::zero();
            }
            prev = m[at(k, k)].clone();
        }
        let det = m.swap_remove(at(n - 1, n - 1));
        if negated {
            -det
        } else {
            det
        }
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;

    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        self.entry(i, j)
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        let n = self.n;
        &mut self.entries[i * n + j]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntMatrix({}x{})", self.n, self.n)?;
        for row in self.rows() {
            write!(f, " [")?;
            for (j, x) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}

/// Whether a diagonal certificate makes `D*A` symmetric or skew-symmetric.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SymmetrizerKind {
    Symmetric,
    Skew,
}

impl SymmetrizerKind {
    pub fn as_str(self) -> &'static str {
        match self {
            SymmetrizerKind::Symmetric => "symmetric",
            SymmetrizerKind::Skew => "skew",
        }
    }
}

/// A positive diagonal matrix `D`, witnessing that `D*A` is symmetric
/// (`kind = Symmetric`, i.e. `d_i * a_ij = d_j * a_ji`) or skew-symmetric
/// (`kind = Skew`, i.e. `d_i * b_ij = -d_j * b_ji`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Symmetrizer {
    pub kind: SymmetrizerKind,
    pub diag: Vec<Rational>,
}

impl Symmetrizer {
    pub fn identity(kind: SymmetrizerKind, n: usize) -> Self {
        Symmetrizer {
            kind,
            diag: vec![Rational::one(); n],
        }
    }

    /// Checks the certificate against a matrix: all diagonal entries positive
    /// and the defining equation holds for every pair.
    pub fn certifies(&self, m: &IntMatrix) -> bool {
        if self.diag.len() != m.n() || self.diag.iter().any(|d| !d.is_positive()) {
            return false;
        }
        for i in 0..m.n() {
            for j in 0..m.n() {
                let lhs = &self.diag[i] * Rational::from(m.entry(i, j).clone());
                let rhs = &self.diag[j] * Rational::from(m.entry(j, i).clone());
                let ok = match self.kind {
                    SymmetrizerKind::Symmetric => lhs == rhs,
                    SymmetrizerKind::Skew => lhs == -rhs,
                };
                if !ok {
                    return false;
                }
            }
        }
        true
    }

    /// JSON form: `{"diag": ["1", "1/2", ...], "kind": "symmetric"|"skew"}`,
    /// rationals in lowest terms.
    pub fn to_json_value(&self) -> Value {
        let diag: Vec<Value> = self.diag.iter().map(|d| Value::String(d.to_string())).collect();
        let mut obj = serde_json::Map::new();
        obj.insert("diag".into(), Value::Array(diag));
        obj.insert("kind".into(), Value::String(self.kind.as_str().into()));
        Value::Object(obj)
    }

    pub fn from_json_value(v: &Value) -> Result<Self, String> {
        let obj = v.as_object().ok_or("symmetrizer: expected object")?;
        let kind = match obj.get("kind").and_then(Value::as_str) {
            Some("symmetric") => SymmetrizerKind::Symmetric,
            Some("skew") => SymmetrizerKind::Skew,
            _ => return Err("symmetrizer: bad kind".into()),
        };
        let diag = obj
            .get("diag")
            .and_then(Value::as_array)
            .ok_or("symmetrizer: missing diag")?
            .iter()
            .map(|x| {
                x.as_str()
                    .ok_or_else(|| "symmetrizer: diag entry not a string".to_string())
                    .and_then(|s| Rational::from_str(s).map_err(|e| e.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Symmetrizer { kind, diag })
    }
}

impl fmt::Display for Symmetrizer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "diag(")?;
        for (i, d) in self.diag.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, ")")
    }
}

/// A bijection on `{0..n-1}`, applied to matrices as a simultaneous
/// row/column relabeling.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Permutation {
    map: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { map: (0..n).collect() }
    }

    /// Builds a permutation sending `i` to `map[i]`. Returns `None` if `map`
    /// is not a bijection on `{0..map.len()-1}`.
    pub fn from_mapping(map: Vec<usize>) -> Option<Self> {
        let n = map.len();
        let mut seen = vec![false; n];
        for &v in &map {
            if v >= n || seen[v] {
                return None;
            }
            seen[v] = true;
        }
        Some(Permutation { map })
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.map[i]
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.map.len()];
        for (i, &v) in self.map.iter().enumerate() {
            inv[v] = i;
        }
        Permutation { map: inv }
    }
}

/// Partition of `{0..n-1}` into the connected blocks of a matrix's nonzero
/// pattern. Blocks are sorted internally and ordered by smallest element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl ComponentPartition {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Index of the block containing `i`.
    pub fn block_of(&self, i: usize) -> usize {
        self.blocks
            .iter()
            .position(|b| b.binary_search(&i).is_ok())
            .expect("index not covered by partition")
    }

    /// Size of the block containing `i`.
    pub fn block_size_of(&self, i: usize) -> usize {
        self.blocks[self.block_of(i)].len()
    }

    /// JSON form: list of 1-based index lists, e.g. `[[1,2],[3,4]]`.
    pub fn to_json_value(&self) -> Value {
        Value::Array(
            self.blocks
                .iter()
                .map(|b| {
                    Value::Array(
                        b.iter()
                            .map(|&i| Value::Number(Number::from((i + 1) as u64)))
                            .collect(),
                    )
                })
                .collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::cofactor_determinant;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_i64_rows(rows)
    }

    fn paper_c() -> IntMatrix {
        m(&[&[2, -1, 1, 0], &[-1, 2, 0, 1], &[1, 0, 2, 1], &[0, 1, 1, 2]])
    }

    fn paper_c_plus() -> IntMatrix {
        m(&[&[2, 1, 1, 0], &[1, 2, 0, 1], &[1, 0, 2, 1], &[0, 1, 1, 2]])
    }

    #[test]
    fn sign_symmetry_predicates() {
        assert!(m(&[&[2, 1], &[1, 2]]).is_symmetric_by_signs());
        assert!(!m(&[&[0, 1], &[-1, 0]]).is_symmetric_by_signs());
        assert!(!m(&[&[0, 1], &[0, 0]]).is_symmetric_by_signs());

        assert!(m(&[&[0, 1], &[-1, 0]]).is_skew_symmetric_by_signs());
        assert!(!m(&[&[0, 1], &[1, 0]]).is_skew_symmetric_by_signs());
        assert!(!m(&[&[1, 1], &[-1, 0]]).is_skew_symmetric_by_signs());
    }

    #[test]
    fn submatrices() {
        let cp = paper_c_plus();
        assert_eq!(
            cp.principal_submatrix(&[0, 1, 2]),
            m(&[&[2, 1, 1], &[1, 2, 0], &[1, 0, 2]])
        );
        assert_eq!(cp.principal_submatrix(&[0, 1, 2, 3]), cp);
        assert_eq!(m(&[&[2, 3], &[1, 2]]).principal_submatrix(&[1]), m(&[&[2]]));

        assert_eq!(cp.leading_principal_submatrix(2), m(&[&[2, 1], &[1, 2]]));
        assert_eq!(cp.leading_principal_submatrix(4), cp);
        assert_eq!(paper_c().leading_principal_submatrix(1), m(&[&[2]]));
    }

    #[test]
    fn direct_sum_blocks() {
        assert_eq!(
            m(&[&[2]]).direct_sum(&m(&[&[3]])),
            m(&[&[2, 0], &[0, 3]])
        );
        let a = m(&[&[0, 1], &[1, 0]]);
        assert_eq!(a.direct_sum(&IntMatrix::zero(0)), a);
        assert_eq!(
            a.direct_sum(&m(&[&[0, 2], &[2, 0]])),
            m(&[
                &[0, 1, 0, 0],
                &[1, 0, 0, 0],
                &[0, 0, 0, 2],
                &[0, 0, 2, 0]
            ])
        );
    }

    #[test]
    fn permute_roundtrip() {
        let a = m(&[&[0, 1], &[2, 0]]);
        let id = Permutation::identity(2);
        assert_eq!(a.permute(&id), a);
        let swap = Permutation::from_mapping(vec![1, 0]).unwrap();
        assert_eq!(a.permute(&swap), m(&[&[0, 2], &[1, 0]]));
        let p = Permutation::from_mapping(vec![2, 0, 1]).unwrap();
        let b = m(&[&[0, 1, 2], &[3, 0, 4], &[5, 6, 0]]);
        assert_eq!(b.permute(&p).permute(&p.inverse()), b);
    }

    #[test]
    fn permutation_rejects_non_bijection() {
        assert!(Permutation::from_mapping(vec![0, 0]).is_none());
        assert!(Permutation::from_mapping(vec![1, 2]).is_none());
    }

    #[test]
    fn components() {
        let two_blocks = m(&[&[0, 1], &[1, 0]]).direct_sum(&m(&[&[0, 2], &[2, 0]]));
        assert_eq!(
            two_blocks.connected_components().blocks(),
            &[vec![0, 1], vec![2, 3]]
        );
        assert!(paper_c_plus().is_connected());
        assert_eq!(IntMatrix::zero(3).connected_components().len(), 3);
        assert!(IntMatrix::zero(1).is_connected());
        assert!(IntMatrix::zero(0).is_connected());
    }

    #[test]
    fn determinant_matches_paper_values() {
        // Reference values from the cofactor oracle.
        assert_eq!(cofactor_determinant(&paper_c()).unwrap(), paper_c().determinant());
        assert_eq!(paper_c().determinant(), BigInt::from(4));
        assert_eq!(paper_c_plus().determinant(), BigInt::zero());
        // det [[2,c],[d,2]] = 4 - c*d
        for (c, d) in [(3i64, 1i64), (-2, -2), (0, 5), (7, 7)] {
            assert_eq!(
                m(&[&[2, c], &[d, 2]]).determinant(),
                BigInt::from(4 - c * d)
            );
        }
        assert_eq!(IntMatrix::zero(0).determinant(), BigInt::one());
        assert_eq!(m(&[&[-7]]).determinant(), BigInt::from(-7));
    }

    #[test]
    fn determinant_needs_pivot_swap() {
        let a = m(&[&[0, 1, 2], &[1, 0, 3], &[4, 5, 0]]);
        assert_eq!(a.determinant(), cofactor_determinant(&a).unwrap());
    }

    #[test]
    fn symmetrizer_certifies() {
        let a = m(&[&[0, 2], &[1, 0]]);
        let d = Symmetrizer {
            kind: SymmetrizerKind::Symmetric,
            diag: vec![Rational::one(), Rational::from(BigInt::from(2))],
        };
        assert!(d.certifies(&a));
        assert!(!d.certifies(&m(&[&[0, 1], &[1, 0]])));
        let skew = Symmetrizer::identity(SymmetrizerKind::Skew, 2);
        assert!(skew.certifies(&m(&[&[0, 1], &[-1, 0]])));
        assert!(!skew.certifies(&m(&[&[0, 1], &[1, 0]])));
    }

    #[test]
    fn symmetrizer_json_roundtrip() {
        let d = Symmetrizer {
            kind: SymmetrizerKind::Skew,
            diag: vec![Rational::one(), Rational::new(BigInt::from(1), BigInt::from(2))],
        };
        let v = d.to_json_value();
        assert_eq!(v.to_string(), r#"{"diag":["1","1/2"],"kind":"skew"}"#);
        assert_eq!(Symmetrizer::from_json_value(&v).unwrap(), d);
    }
}
