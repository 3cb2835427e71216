use std::fmt;
use std::ops::Mul;

use crate::exactnum::{Cyclotomic, Rational};
use crate::{Error, Result};

/// Square matrix over the cyclotomic numbers, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycMatrix {
    dim: usize,
    entries: Vec<Cyclotomic>,
}

/// Hashable canonical form of a matrix whose entries live in one fixed conductor.
pub type MatrixKey = Vec<Vec<(u32, Rational)>>;

impl CycMatrix {
    pub fn new(dim: usize, entries: Vec<Cyclotomic>) -> Result<Self> {
        if dim == 0 || entries.len() != dim * dim {
            return Err(Error::DataIntegrity(format!("{} entries do not form a {dim}x{dim} matrix", entries.len())));
        }
        Ok(Self { dim, entries })
    }

    pub fn from_rows(rows: Vec<Vec<Cyclotomic>>) -> Result<Self> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return Err(Error::DataIntegrity("matrix rows are not square".into()));
        }
        Self::new(dim, rows.into_iter().flatten().collect())
    }

    pub fn scalar(value: Cyclotomic) -> Self {
        Self { dim: 1, entries: vec![value] }
    }

    pub fn identity(dim: usize) -> Self {
        let entries =
            (0..dim * dim).map(|k| if k % (dim + 1) == 0 { Cyclotomic::one() } else { Cyclotomic::zero() }).collect();
        Self { dim, entries }
    }

    pub fn diagonal(values: Vec<Cyclotomic>) -> Self {
        let dim = values.len();
        let mut m = Self::identity(dim);
        for (i, v) in values.into_iter().enumerate() {
            m.entries[i * dim + i] = v;
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &Cyclotomic {
        &self.entries[i * self.dim + j]
    }

    pub fn entries(&self) -> &[Cyclotomic] {
        &self.entries
    }

    pub fn embed(&self, conductor: u32) -> Result<Self> {
        let entries = self.entries.iter().map(|e| e.embed(conductor)).collect::<Result<_>>()?;
        Ok(Self { dim: self.dim, entries })
    }

    /// Canonical key after embedding every entry into `Q(zeta_conductor)`.
    pub fn key(&self, conductor: u32) -> Result<MatrixKey> {
        self.entries.iter().map(|e| Ok(e.embed(conductor)?.terms().to_vec())).collect()
    }

    pub fn trace(&self) -> Cyclotomic {
        (0..self.dim).map(|i| self.get(i, i).clone()).sum()
    }

    pub fn scale(&self, factor: &Cyclotomic) -> Self {
        Self { dim: self.dim, entries: self.entries.iter().map(|e| e * factor).collect() }
    }

    pub fn neg(&self) -> Self {
        Self { dim: self.dim, entries: self.entries.iter().map(|e| -e).collect() }
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.dim)
    }

    /// Determinant by Gaussian elimination over the field.
    pub fn det(&self) -> Result<Cyclotomic> {
        let n = self.dim;
        if n == 1 {
            return Ok(self.entries[0].clone());
        }
        if n == 2 {
            return Ok(self.get(0, 0) * self.get(1, 1) - self.get(0, 1) * self.get(1, 0));
        }
        let mut a = self.entries.clone();
        let mut det = Cyclotomic::one();
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| !a[r * n + col].is_zero()) else {
                return Ok(Cyclotomic::zero());
            };
            if pivot != col {
                for k in 0..n {
                    a.swap(pivot * n + k, col * n + k);
                }
                det = -det;
            }
            let p = a[col * n + col].clone();
            det = &det * &p;
            let p_inv = p.inv()?;
            for r in col + 1..n {
                if a[r * n + col].is_zero() {
                    continue;
                }
                let factor = &a[r * n + col] * &p_inv;
                for k in col..n {
                    let delta = &factor * &a[col * n + k];
                    a[r * n + k] = &a[r * n + k] - &delta;
                }
            }
        }
        Ok(det)
    }

    /// Inverse by Gauss-Jordan elimination.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.dim;
        let mut a = self.entries.clone();
        let mut inv = Self::identity(n).entries;
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !a[r * n + col].is_zero())
                .ok_or_else(|| Error::DataIntegrity("singular matrix".into()))?;
            if pivot != col {
                for k in 0..n {
                    a.swap(pivot * n + k, col * n + k);
                    inv.swap(pivot * n + k, col * n + k);
                }
            }
            let p_inv = a[col * n + col].inv()?;
            for k in 0..n {
                a[col * n + k] = &a[col * n + k] * &p_inv;
                inv[col * n + k] = &inv[col * n + k] * &p_inv;
            }
            for r in 0..n {
                if r == col || a[r * n + col].is_zero() {
                    continue;
                }
                let factor = a[r * n + col].clone();
                for k in 0..n {
                    let da = &factor * &a[col * n + k];
                    a[r * n + k] = &a[r * n + k] - &da;
                    let di = &factor * &inv[col * n + k];
                    inv[r * n + k] = &inv[r * n + k] - &di;
                }
            }
        }
        Ok(Self { dim: n, entries: inv })
    }

    pub fn pow(&self, mut k: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity(self.dim);
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }
}

impl Mul for &CycMatrix {
    type Output = CycMatrix;
    fn mul(self, rhs: &CycMatrix) -> CycMatrix {
        assert_eq!(self.dim, rhs.dim, "matrix dimension mismatch");
        let n = self.dim;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = Cyclotomic::zero();
                for k in 0..n {
                    let (x, y) = (self.get(i, k), rhs.get(k, j));
                    if !x.is_zero() && !y.is_zero() {
                        acc = acc + x * y;
                    }
                }
                entries.push(acc);
            }
        }
        CycMatrix { dim: n, entries }
    }
}

impl fmt::Display for CycMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.dim {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.dim {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u32, k: i64) -> Cyclotomic {
        Cyclotomic::root_of_unity(n, k).unwrap()
    }

    fn c(v: i64) -> Cyclotomic {
        Cyclotomic::from_int(v)
    }

    #[test]
    fn determinant_and_inverse_of_bt_alpha7() {
        let b = CycMatrix::from_rows(vec![vec![c(-1), c(-1), c(-1)], vec![c(1), c(0), c(0)], vec![c(0), c(0), c(1)]])
            .unwrap();
        assert_eq!(b.det().unwrap(), c(1));
        let inv = b.inverse().unwrap();
        assert!((&b * &inv).is_identity());
        assert_eq!(b.pow(3), CycMatrix::identity(3));
    }

    #[test]
    fn det_with_roots() {
        let m = CycMatrix::from_rows(vec![vec![c(0), -z(3, 1)], vec![z(3, 2), c(1)]]).unwrap();
        assert_eq!(m.det().unwrap(), c(1));
        assert_eq!(m.trace(), c(1));
    }

    #[test]
    fn rejects_ragged_rows() {
        assert!(CycMatrix::from_rows(vec![vec![c(1)], vec![c(1), c(2)]]).is_err());
    }
}
