//! Dense square matrices over an exact coefficient ring.

use std::fmt;
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Dense `n × n` matrix stored row-major.
///
/// Matrices act on column vectors, so column `j` holds the image of the
/// basis vector `e_j`. Indices are 0-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    n: usize,
    entries: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::EmptyMatrix);
        }
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::RaggedRows);
        }
        Ok(Matrix {
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Builds a matrix from small integers; convenient for literals.
    pub fn from_i64_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self>
    where
        T: From<i64>,
    {
        Self::from_rows(
            rows.iter()
                .map(|r| r.as_ref().iter().map(|&x| T::from(x)).collect())
                .collect(),
        )
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        assert!(n > 0, "matrix dimension must be positive");
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        Matrix { n, entries }
    }

    pub fn zero(n: usize) -> Self {
        Self::from_fn(n, |_, _| T::zero())
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    /// Permutation matrix `P` with `P e_i = e_{perm[i]}`.
    ///
    /// With this convention `permutation(σ) * permutation(τ) = permutation(σ ∘ τ)`.
    pub fn permutation(perm: &[usize]) -> Result<Self> {
        check_permutation(perm)?;
        let mut m = Self::zero(perm.len().max(1));
        for (i, &p) in perm.iter().enumerate() {
            m.set(p, i, T::one());
        }
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: T) {
        self.entries[i * self.n + j] = value;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[T]> {
        self.entries.chunks(self.n)
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        self.rows().map(|r| r.to_vec()).collect()
    }

    pub fn map<U: Scalar>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix {
            n: self.n,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn is_zero_at(&self, i: usize, j: usize) -> bool {
        self.get(i, j).is_zero()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self.get(j, i).clone())
    }

    /// Exact product `self · other`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let n = self.n;
        let mut out = Self::zero(n);
        for i in 0..n {
            for l in 0..n {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(l, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cell = &mut out.entries[i * n + j];
                    *cell = cell.clone() + a.clone() * b.clone();
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity(self.n);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base).expect("same dimension");
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base).expect("same dimension");
            }
        }
        acc
    }

    /// Matrix-vector product `self · v`.
    pub fn apply(&self, v: &[T]) -> Result<Vec<T>> {
        if v.len() != self.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: v.len(),
            });
        }
        Ok(self
            .rows()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect())
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    ///
    /// Every intermediate division is exact, so this stays inside the ring.
    pub fn determinant(&self) -> T {
        let n = self.n;
        let mut a = self.entries.clone();
        let mut negate = false;
        let mut prev = T::one();
        for k in 0..n.saturating_sub(1) {
            if a[k * n + k].is_zero() {
                let Some(p) = (k + 1..n).find(|&r| !a[r * n + k].is_zero()) else {
                    return T::zero();
                };
                for j in 0..n {
                    a.swap(k * n + j, p * n + j);
                }
                negate = !negate;
            }
            let pivot = a[k * n + k].clone();
            for i in k + 1..n {
                let lead = a[i * n + k].clone();
                for j in k + 1..n {
                    let v = (a[i * n + j].clone() * pivot.clone()
                        - lead.clone() * a[k * n + j].clone())
                        / prev.clone();
                    a[i * n + j] = v;
                }
                a[i * n + k] = T::zero();
            }
            prev = pivot;
        }
        let det = a[n * n - 1].clone();
        if negate {
            -det
        } else {
            det
        }
    }

    /// Similar matrix `P · M · P⁻¹` for the permutation matrix `P` of `perm`.
    ///
    /// Entry `(i, j)` of `self` lands at `(perm[i], perm[j])`.
    pub fn permute_basis(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: perm.len(),
            });
        }
        check_permutation(perm)?;
        let mut out = Self::zero(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                out.set(perm[i], perm[j], self.get(i, j).clone());
            }
        }
        Ok(out)
    }

    /// Principal submatrix on `indices`, in the given order.
    pub fn submatrix(&self, indices: &[usize]) -> Result<Self> {
        if indices.is_empty() {
            return Err(Error::EmptyMatrix);
        }
        if let Some(&bad) = indices.iter().find(|&&i| i >= self.n) {
            return Err(Error::IndexOutOfRange {
                index: bad,
                dim: self.n,
            });
        }
        Ok(Self::from_fn(indices.len(), |a, b| {
            self.get(indices[a], indices[b]).clone()
        }))
    }

    /// Restriction of the column action to a coordinate-invariant block.
    ///
    /// Fails unless every column indexed by `block` vanishes outside `block`.
    pub fn restrict(&self, block: &[usize]) -> Result<Self> {
        let sub = self.submatrix(block)?;
        let mut inside = vec![false; self.n];
        for &b in block {
            inside[b] = true;
        }
        for &col in block {
            if (0..self.n).any(|row| !inside[row] && !self.is_zero_at(row, col)) {
                return Err(Error::NotInvariant { column: col });
            }
        }
        Ok(sub)
    }
}

impl<T: Scalar + PartialOrd> Matrix<T> {
    pub fn is_nonnegative(&self) -> bool {
        self.entries.iter().all(|x| *x >= T::zero())
    }
}

pub(crate) fn check_permutation(perm: &[usize]) -> Result<()> {
    let n = perm.len();
    let mut seen = vec![false; n];
    for &p in perm {
        if p >= n || seen[p] {
            return Err(Error::InvalidPermutation(n));
        }
        seen[p] = true;
    }
    Ok(())
}

impl<T: Scalar + fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.entries.iter().map(|x| x.to_string()).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        for (i, row) in cells.chunks(self.n).enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            write!(f, "[{}]", line.join(" "))?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixRepr {
    n: usize,
    rows: Vec<Vec<String>>,
}

/// `{"n": int, "rows": [[decimal-string, ...], ...]}`
impl<T: Scalar + fmt::Display> Serialize for Matrix<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        MatrixRepr {
            n: self.n,
            rows: self
                .rows()
                .map(|r| r.iter().map(|x| x.to_string()).collect())
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de, T: Scalar + FromStr> Deserialize<'de> for Matrix<T> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = MatrixRepr::deserialize(deserializer)?;
        let rows = repr
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|s| {
                        s.parse::<T>()
                            .map_err(|_| D::Error::custom(format!("bad integer {s:?}")))
                    })
                    .collect::<std::result::Result<Vec<T>, _>>()
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        let m = Matrix::from_rows(rows).map_err(D::Error::custom)?;
        if m.n != repr.n {
            return Err(D::Error::custom("\"n\" does not match row count"));
        }
        Ok(m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type M = Matrix<i64>;

    #[test]
    fn identity_is_neutral() {
        let m = M::from_i64_rows(&[[1, 2, 0], [-3, 4, 5], [0, 0, 7]]).unwrap();
        assert_eq!(M::identity(3).mul(&m).unwrap(), m);
        assert_eq!(m.mul(&M::identity(3)).unwrap(), m);
    }

    #[test]
    fn permutation_matrices_compose() {
        let sigma = [2, 0, 1, 3];
        let tau = [1, 3, 0, 2];
        let composed: Vec<usize> = (0..4).map(|i| sigma[tau[i]]).collect();
        let lhs = M::permutation(&sigma)
            .unwrap()
            .mul(&M::permutation(&tau).unwrap())
            .unwrap();
        assert_eq!(lhs, M::permutation(&composed).unwrap());
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let err = M::identity(2).mul(&M::identity(3)).unwrap_err();
        assert_eq!(err, Error::DimensionMismatch { left: 2, right: 3 });
    }

    #[test]
    fn from_rows_rejects_bad_shapes() {
        assert_eq!(M::from_rows(vec![]).unwrap_err(), Error::EmptyMatrix);
        assert_eq!(
            M::from_rows(vec![vec![1, 2], vec![3]]).unwrap_err(),
            Error::RaggedRows
        );
    }

    #[test]
    fn bareiss_determinant_small_cases() {
        assert_eq!(M::from_i64_rows(&[[5]]).unwrap().determinant(), 5);
        assert_eq!(
            M::from_i64_rows(&[[0, 1], [1, 1]]).unwrap().determinant(),
            -1
        );
        // needs a row swap on the first pivot
        let m = M::from_i64_rows(&[[0, 2, 1], [3, 0, 4], [1, 1, 1]]).unwrap();
        // cofactor expansion: 0*(0-4) - 2*(3-4) + 1*(3-0) = 5
        assert_eq!(m.determinant(), 5);
        let singular = M::from_i64_rows(&[[1, 2], [2, 4]]).unwrap();
        assert_eq!(singular.determinant(), 0);
    }

    #[test]
    fn permute_basis_rejects_non_bijection() {
        let m = M::identity(3);
        assert_eq!(
            m.permute_basis(&[0, 0, 1]).unwrap_err(),
            Error::InvalidPermutation(3)
        );
        assert!(m.permute_basis(&[0, 1]).is_err());
    }

    #[test]
    fn permute_basis_is_conjugation() {
        let m = M::from_i64_rows(&[[1, 2, 3], [4, 5, 6], [7, 8, 9]]).unwrap();
        let perm = [1, 2, 0];
        let p = M::permutation(&perm).unwrap();
        let p_inv = p.transpose();
        let expected = p.mul(&m).unwrap().mul(&p_inv).unwrap();
        assert_eq!(m.permute_basis(&perm).unwrap(), expected);
    }

    #[test]
    fn restrict_checks_invariance() {
        let m = M::from_i64_rows(&[[1, 0, 0], [1, 2, 3], [0, 4, 5]]).unwrap();
        assert_eq!(
            m.restrict(&[1, 2]).unwrap(),
            M::from_i64_rows(&[[2, 3], [4, 5]]).unwrap()
        );
        assert_eq!(
            m.restrict(&[0]).unwrap_err(),
            Error::NotInvariant { column: 0 }
        );
        assert_eq!(m.restrict(&[0, 1, 2]).unwrap(), m);
    }

    #[test]
    fn pow_matches_repeated_product() {
        let m = M::from_i64_rows(&[[1, 1], [1, 0]]).unwrap();
        let mut acc = M::identity(2);
        for _ in 0..10 {
            acc = acc.mul(&m).unwrap();
        }
        assert_eq!(m.pow(10), acc);
        assert_eq!(m.pow(0), M::identity(2));
    }

    #[test]
    fn json_uses_decimal_strings() {
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        let m = Matrix::from_rows(vec![
            vec![big.clone(), BigInt::from(-1)],
            vec![BigInt::from(0), BigInt::from(1)],
        ])
        .unwrap();
        let text = serde_json::to_string(&m).unwrap();
        assert_eq!(
            text,
            r#"{"n":2,"rows":[["123456789012345678901234567890","-1"],["0","1"]]}"#
        );
        let back: Matrix<BigInt> = serde_json::from_str(&text).unwrap();
        assert_eq!(back, m);
        assert!(serde_json::from_str::<Matrix<BigInt>>(r#"{"n":3,"rows":[["1"]]}"#).is_err());
    }
}
