//! Perron-Frobenius eigenvalue of an irreducible nonnegative matrix.

use num_traits::{NumCast, ToPrimitive};

use crate::error::{Error, Result};
use crate::linalg::{scc_blocks, Matrix};
use crate::scalar::{Real, Scalar};

const MAX_ITERATIONS: usize = 100_000;

/// Spectral radius of a nonnegative matrix whose nonzero pattern is strongly
/// connected.
///
/// Dimensions one and two use the closed form. Larger matrices run power
/// iteration on `M + I` (primitive whenever `M` is irreducible) and stop once
/// the Collatz-Wielandt bounds `min (Bv)_i / v_i <= ρ(B) <= max (Bv)_i / v_i`
/// are within `tol` of each other.
pub fn dominant_eigenvalue<T, F>(m: &Matrix<T>, tol: F) -> Result<F>
where
    T: Scalar + PartialOrd + ToPrimitive,
    F: Real,
{
    if !m.is_nonnegative() {
        return Err(Error::NegativeEntry);
    }
    let n = m.dim();
    let blocks = scc_blocks(m);
    let all_zero = (0..n).all(|i| (0..n).all(|j| m.is_zero_at(i, j)));
    if blocks.len() != 1 || all_zero {
        return Err(Error::Reducible);
    }

    let a = m.map_to_float::<F>()?;
    let two = F::one() + F::one();
    match n {
        1 => return Ok(a[0][0]),
        2 => {
            let (p, q, r, s) = (a[0][0], a[0][1], a[1][0], a[1][1]);
            let disc = (p - s) * (p - s) + (two + two) * q * r;
            return Ok((p + s + disc.sqrt()) / two);
        }
        _ => {}
    }

    let mut v = vec![F::one(); n];
    for _ in 0..MAX_ITERATIONS {
        let w: Vec<F> = (0..n)
            .map(|i| v[i] + (0..n).fold(F::zero(), |acc, j| acc + a[i][j] * v[j]))
            .collect();
        let (mut lo, mut hi) = (F::infinity(), F::zero());
        for i in 0..n {
            let ratio = w[i] / v[i];
            lo = lo.min(ratio);
            hi = hi.max(ratio);
        }
        if hi - lo <= tol {
            return Ok((lo + hi) / two - F::one());
        }
        let scale = w.iter().copied().fold(F::zero(), F::max);
        v = w.into_iter().map(|x| x / scale).collect();
    }
    Err(Error::NotConverged(MAX_ITERATIONS))
}

impl<T: Scalar + ToPrimitive> Matrix<T> {
    fn map_to_float<F: Real>(&self) -> Result<Vec<Vec<F>>> {
        self.rows()
            .map(|row| {
                row.iter()
                    .map(|x| <F as NumCast>::from(x.clone()).ok_or(Error::Unrepresentable))
                    .collect()
            })
            .collect()
    }
}
