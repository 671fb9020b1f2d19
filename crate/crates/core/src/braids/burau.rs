//! The reduced Burau representation `ρ: B_n → GL_{n-1}(Z[t^±1])`.
//!
//! Matrices act on row vectors from the right. With 1-based indices, `ρ(σ_i)`
//! is the identity except in column `i`: the diagonal entry is `-t`, the entry
//! above it (row `i-1`) is `t` and the entry below it (row `i+1`) is `1`.

use std::fmt;
use std::ops::Mul;

use serde::Serialize;

use super::word::{BraidWord, Letter};
use crate::coeff::{int, LaurentPoly, Rational};

/// A square matrix over `Q[t^±1]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BurauMatrix {
    rows: Vec<Vec<LaurentPoly>>,
}

impl BurauMatrix {
    pub fn from_rows(rows: Vec<Vec<LaurentPoly>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        Self { rows }
    }

    pub fn identity(size: usize) -> Self {
        let rows = (0..size)
            .map(|i| (0..size).map(|j| if i == j { LaurentPoly::one() } else { LaurentPoly::zero() }).collect())
            .collect();
        Self { rows }
    }

    /// `ρ(σ_i^{±1})` for a braid on `strands` strands.
    pub fn generator(strands: usize, letter: Letter) -> Self {
        let size = strands - 1;
        let mut m = Self::identity(size);
        let c = letter.index - 1;
        let t = LaurentPoly::t();
        let t_inv = LaurentPoly::t_pow(-1);
        if letter.sign == 1 {
            m.rows[c][c] = -&t;
            if c >= 1 {
                m.rows[c - 1][c] = t;
            }
            if c + 1 < size {
                m.rows[c + 1][c] = LaurentPoly::one();
            }
        } else {
            m.rows[c][c] = -&t_inv;
            if c >= 1 {
                m.rows[c - 1][c] = LaurentPoly::one();
            }
            if c + 1 < size {
                m.rows[c + 1][c] = t_inv;
            }
        }
        m
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<LaurentPoly>] {
        &self.rows
    }

    /// Entry with 0-based indices.
    pub fn get(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.rows[i][j]
    }

    pub fn trace(&self) -> LaurentPoly {
        let mut acc = LaurentPoly::zero();
        for (i, r) in self.rows.iter().enumerate() {
            acc += &r[i];
        }
        acc
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> LaurentPoly {
        let n = self.size();
        if n == 0 {
            return LaurentPoly::one();
        }
        let mut a = self.rows.clone();
        let mut sign = int(1);
        let mut prev = LaurentPoly::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                    return LaurentPoly::zero();
                };
                a.swap(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                    a[i][j] = v.div_exact(&prev).expect("Bareiss division is exact");
                }
            }
            prev = a[k][k].clone();
        }
        a[n - 1][n - 1].scale(&sign)
    }

    /// `v·M` for a row vector `v`.
    pub fn apply_row(&self, v: &[LaurentPoly]) -> Vec<LaurentPoly> {
        (0..self.size())
            .map(|j| {
                let mut acc = LaurentPoly::zero();
                for (i, vi) in v.iter().enumerate() {
                    if !vi.is_zero() {
                        acc += &(vi * &self.rows[i][j]);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.size())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self { rows: self.rows.iter().map(|r| r.iter().map(|x| x.scale(c)).collect()).collect() }
    }
}

impl<'a> Mul<&'a BurauMatrix> for &'a BurauMatrix {
    type Output = BurauMatrix;
    fn mul(self, rhs: &BurauMatrix) -> BurauMatrix {
        let n = self.size();
        assert_eq!(n, rhs.size(), "size mismatch");
        let mut rows = vec![vec![LaurentPoly::zero(); n]; n];
        for (i, row) in rows.iter_mut().enumerate() {
            for k in 0..n {
                let a = &self.rows[i][k];
                if a.is_zero() {
                    continue;
                }
                for (j, cell) in row.iter_mut().enumerate() {
                    let b = &rhs.rows[k][j];
                    if !b.is_zero() {
                        *cell += &(a * b);
                    }
                }
            }
        }
        BurauMatrix { rows }
    }
}

impl fmt::Display for BurauMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            let cells: Vec<String> = r.iter().map(|x| x.to_string()).collect();
            write!(f, "[{}]", cells.join(", "))?;
        }
        f.write_str("]")
    }
}

impl Serialize for BurauMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> = self.rows.iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect();
        rows.serialize(s)
    }
}

/// `ρ(β)`, the left-to-right product of generator matrices.
pub fn burau(braid: &BraidWord) -> BurauMatrix {
    let n = braid.strands();
    braid.letters().iter().fold(BurauMatrix::identity(n - 1), |m, l| &m * &BurauMatrix::generator(n, *l))
}
