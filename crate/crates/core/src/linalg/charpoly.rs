//! Characteristic polynomials by the division-free Berkowitz recursion.

use crate::linalg::{Matrix, Polynomial};
use crate::scalar::Scalar;

/// `det(xI - M)`, computed exactly with ring operations only.
///
/// Grows the leading principal submatrix one row and column at a time. If
/// `A_{r+1} = [[A_r, c], [s, a]]`, then `p_{r+1} = T · p_r` where `T` is the
/// lower-triangular Toeplitz matrix with first column
/// `(1, -a, -s·c, -s·A_r·c, …, -s·A_r^{r-1}·c)`.
pub fn char_poly<T: Scalar>(m: &Matrix<T>) -> Polynomial<T> {
    let n = m.dim();
    // highest degree first while building
    let mut p: Vec<T> = vec![T::one()];
    for r in 0..n {
        let mut toeplitz = Vec::with_capacity(r + 2);
        toeplitz.push(T::one());
        toeplitz.push(-m.get(r, r).clone());

        // column above the new diagonal entry, repeatedly hit by A_r
        let mut v: Vec<T> = (0..r).map(|i| m.get(i, r).clone()).collect();
        for step in 0..r {
            let dot = (0..r).fold(T::zero(), |acc, j| acc + m.get(r, j).clone() * v[j].clone());
            toeplitz.push(-dot);
            if step + 1 < r {
                v = (0..r)
                    .map(|i| {
                        (0..r).fold(T::zero(), |acc, j| {
                            let a = m.get(i, j);
                            if a.is_zero() {
                                acc
                            } else {
                                acc + a.clone() * v[j].clone()
                            }
                        })
                    })
                    .collect();
            }
        }

        let next: Vec<T> = (0..r + 2)
            .map(|i| {
                (0..=r.min(i)).fold(T::zero(), |acc, j| {
                    if i - j < toeplitz.len() && j < p.len() {
                        acc + toeplitz[i - j].clone() * p[j].clone()
                    } else {
                        acc
                    }
                })
            })
            .collect();
        p = next;
    }
    p.reverse();
    Polynomial::new(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    /// Independent route: evaluate `det(tI - M)` by Bareiss at `n + 1`
    /// integer points and compare with the polynomial's values there.
    fn agrees_with_determinants(m: &Matrix<BigInt>) -> bool {
        let p = char_poly(m);
        let n = m.dim();
        (0..=n as i64).all(|t| {
            let t = BigInt::from(t - (n as i64) / 2);
            let shifted = Matrix::from_fn(n, |i, j| {
                let diag = if i == j { t.clone() } else { BigInt::from(0) };
                diag - m.get(i, j).clone()
            });
            p.eval(&t) == shifted.determinant()
        })
    }

    #[test]
    fn torus_matrix() {
        let m = Matrix::<i64>::from_i64_rows(&[[0, 1], [1, 1]]).unwrap();
        assert_eq!(char_poly(&m), Polynomial::from_i64(&[-1, -1, 1]));
    }

    #[test]
    fn identity_gives_power_of_x_minus_one() {
        for n in 1..6 {
            let expected = Polynomial::<i64>::linear(1).pow(n as u32);
            assert_eq!(char_poly(&Matrix::<i64>::identity(n)), expected);
        }
    }

    #[test]
    fn one_by_one() {
        let m = Matrix::<i64>::from_i64_rows(&[[7]]).unwrap();
        assert_eq!(char_poly(&m), Polynomial::linear(7));
    }

    #[test]
    fn three_by_three_by_hand() {
        // trace 15, principal 2-minors sum -18, det 0
        let m = Matrix::<i64>::from_i64_rows(&[[1, 2, 3], [4, 5, 6], [7, 8, 9]]).unwrap();
        assert_eq!(char_poly(&m), Polynomial::from_i64(&[0, -18, -15, 1]));
    }

    fn int_matrix() -> impl Strategy<Value = Matrix<BigInt>> {
        (1usize..7).prop_flat_map(|n| {
            prop::collection::vec(-9i64..=9, n * n)
                .prop_map(move |v| Matrix::from_fn(n, |i, j| BigInt::from(v[i * n + j])))
        })
    }

    proptest! {
        #[test]
        fn matches_determinant_oracle(m in int_matrix()) {
            prop_assert!(agrees_with_determinants(&m));
        }

        #[test]
        fn constant_term_is_signed_determinant(m in int_matrix()) {
            let p = char_poly(&m);
            let sign = if m.dim() % 2 == 0 { BigInt::from(1) } else { BigInt::from(-1) };
            prop_assert_eq!(sign * p.coeff(0), m.determinant());
            prop_assert!(p.is_monic());
            prop_assert_eq!(p.degree(), Some(m.dim()));
        }
    }
}
