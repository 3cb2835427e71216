//! Smith normal form over the integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type IntMatrix = Vec<Vec<BigInt>>;

/// `u * a * v == s` with `s` diagonal, `s[i][i] | s[i+1][i+1]`, and `u`, `v` unimodular.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub s: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

impl SmithForm {
    pub fn diagonal(&self) -> Vec<BigInt> {
        let k = self.s.len().min(self.s.first().map_or(0, Vec::len));
        (0..k).map(|i| self.s[i][i].clone()).collect()
    }
}

fn identity(n: usize) -> IntMatrix {
    (0..n).map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect()).collect()
}

fn swap_rows(m: &mut IntMatrix, i: usize, j: usize) {
    m.swap(i, j);
}

fn swap_cols(m: &mut IntMatrix, i: usize, j: usize) {
    for row in m.iter_mut() {
        row.swap(i, j);
    }
}

/// row_dst -= factor * row_src
fn row_axpy(m: &mut IntMatrix, dst: usize, src: usize, factor: &BigInt) {
    let src_row = m[src].clone();
    for (d, s) in m[dst].iter_mut().zip(&src_row) {
        *d -= factor * s;
    }
}

/// col_dst -= factor * col_src
fn col_axpy(m: &mut IntMatrix, dst: usize, src: usize, factor: &BigInt) {
    for row in m.iter_mut() {
        let s = row[src].clone();
        row[dst] -= factor * s;
    }
}

pub fn smith_normal_form(a: &IntMatrix) -> SmithForm {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut s = a.clone();
    let mut u = identity(rows);
    let mut v = identity(cols);

    for t in 0..rows.min(cols) {
        loop {
            // Smallest nonzero entry of the trailing block becomes the pivot.
            let pivot = (t..rows)
                .flat_map(|i| (t..cols).map(move |j| (i, j)))
                .filter(|&(i, j)| !s[i][j].is_zero())
                .min_by(|&(i1, j1), &(i2, j2)| s[i1][j1].abs().cmp(&s[i2][j2].abs()));
            let Some((pi, pj)) = pivot else {
                break;
            };
            swap_rows(&mut s, t, pi);
            swap_rows(&mut u, t, pi);
            swap_cols(&mut s, t, pj);
            swap_cols(&mut v, t, pj);

            let mut clean = true;
            for i in t + 1..rows {
                let f = s[i][t].div_floor(&s[t][t]);
                if !f.is_zero() {
                    row_axpy(&mut s, i, t, &f);
                    row_axpy(&mut u, i, t, &f);
                }
                clean &= s[i][t].is_zero();
            }
            for j in t + 1..cols {
                let f = s[t][j].div_floor(&s[t][t]);
                if !f.is_zero() {
                    col_axpy(&mut s, j, t, &f);
                    col_axpy(&mut v, j, t, &f);
                }
                clean &= s[t][j].is_zero();
            }
            if !clean {
                continue;
            }
            // Divisibility: fold an offending row into row t and retry.
            let offending = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !(&s[i][j] % &s[t][t]).is_zero()));
            match offending {
                Some(i) => {
                    let minus_one = -BigInt::one();
                    row_axpy(&mut s, t, i, &minus_one);
                    row_axpy(&mut u, t, i, &minus_one);
                }
                None => break,
            }
        }
        if s[t][t].is_negative() {
            for x in s[t].iter_mut() {
                *x = -&*x;
            }
            for x in u[t].iter_mut() {
                *x = -&*x;
            }
        }
    }
    SmithForm { s, u, v }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    fn mul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
        let inner = b.len();
        let cols = b.first().map_or(0, Vec::len);
        a.iter().map(|row| (0..cols).map(|j| (0..inner).map(|k| &row[k] * &b[k][j]).sum()).collect()).collect()
    }

    /// Leibniz-style cofactor determinant, independent of the elimination above.
    fn det(a: &IntMatrix) -> BigInt {
        let n = a.len();
        if n == 1 {
            return a[0][0].clone();
        }
        (0..n)
            .map(|j| {
                let minor: IntMatrix = a[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, x)| x.clone()).collect())
                    .collect();
                let sign = if j % 2 == 0 { BigInt::one() } else { -BigInt::one() };
                sign * &a[0][j] * det(&minor)
            })
            .sum()
    }

    fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
        if k == 0 {
            return vec![vec![]];
        }
        if n < k {
            return vec![];
        }
        let mut out = subsets(n - 1, k);
        for mut s in subsets(n - 1, k - 1) {
            s.push(n - 1);
            out.push(s);
        }
        out
    }

    /// d_k = gcd of all k x k minors.
    fn determinantal_divisor(a: &IntMatrix, k: usize) -> BigInt {
        let rows = a.len();
        let cols = a[0].len();
        let mut g = BigInt::zero();
        for rs in subsets(rows, k) {
            for cs in subsets(cols, k) {
                let minor: IntMatrix = rs.iter().map(|&i| cs.iter().map(|&j| a[i][j].clone()).collect()).collect();
                g = g.gcd(&det(&minor));
            }
        }
        g
    }

    fn check(a: &IntMatrix) {
        let f = smith_normal_form(a);
        assert_eq!(mul(&mul(&f.u, a), &f.v), f.s);
        assert_eq!(det(&f.u).abs(), BigInt::one());
        assert_eq!(det(&f.v).abs(), BigInt::one());
        let rows = a.len();
        let cols = a[0].len();
        for i in 0..rows {
            for j in 0..cols {
                if i != j {
                    assert!(f.s[i][j].is_zero());
                }
            }
        }
        let diag = f.diagonal();
        for w in diag.windows(2) {
            if !w[0].is_zero() {
                assert!((&w[1] % &w[0]).is_zero(), "{diag:?}");
            } else {
                assert!(w[1].is_zero());
            }
        }
        let mut prefix = BigInt::one();
        for (k, d) in diag.iter().enumerate() {
            prefix *= d;
            assert_eq!(prefix, determinantal_divisor(a, k + 1), "k = {}", k + 1);
        }
    }

    #[test]
    fn gcd_lcm_normalization() {
        let f = smith_normal_form(&m(&[&[2, 0], &[0, 3]]));
        assert_eq!(f.diagonal(), vec![BigInt::from(1), BigInt::from(6)]);
    }

    #[test]
    fn tetrahedral_relation_matrix() {
        let a = m(&[&[-1, 2], &[3, -3]]);
        assert_eq!(smith_normal_form(&a).diagonal(), vec![BigInt::from(1), BigInt::from(3)]);
        check(&a);
    }

    #[test]
    fn binary_dihedral_relation_matrices() {
        for r in 2..12i64 {
            let a = m(&[&[0, 2], &[2, -r]]);
            let expected = if r % 2 == 1 { [1, 4] } else { [2, 2] };
            let diag = smith_normal_form(&a).diagonal();
            assert_eq!(diag, expected.map(BigInt::from).to_vec(), "r = {r}");
            check(&a);
        }
    }

    proptest! {
        #[test]
        fn smith_invariants_match_minor_gcds(
            rows in 1usize..4,
            cols in 1usize..4,
            data in proptest::collection::vec(-9i64..10, 16),
        ) {
            let a: IntMatrix = (0..rows)
                .map(|i| (0..cols).map(|j| BigInt::from(data[i * 4 + j])).collect())
                .collect();
            check(&a);
        }
    }
}
