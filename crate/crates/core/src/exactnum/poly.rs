use std::collections::HashMap;
use std::sync::{Arc, LazyLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// The monic cyclotomic polynomial `Phi_n`, kept as its sparse lower-order part:
/// `x^degree = -sum(coeff * x^exp)` in `Q(zeta_n)`.
#[derive(Debug)]
pub(crate) struct Modulus {
    pub degree: usize,
    pub lower: Vec<(usize, BigInt)>,
}

static MODULI: LazyLock<RwLock<HashMap<u32, Arc<Modulus>>>> = LazyLock::new(Default::default);

pub(crate) fn modulus(n: u32) -> Arc<Modulus> {
    if let Some(m) = MODULI.read().expect("moduli cache poisoned").get(&n) {
        return m.clone();
    }
    let dense = cyclotomic_polynomial(n);
    let degree = dense.len() - 1;
    let lower = dense[..degree].iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(e, c)| (e, c.clone())).collect();
    let m = Arc::new(Modulus { degree, lower });
    MODULI.write().expect("moduli cache poisoned").entry(n).or_insert(m).clone()
}

pub fn euler_phi(n: u32) -> u32 {
    let mut n = n as u64;
    let mut result = n;
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result as u32
}

fn divisors(n: u32) -> Vec<u32> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n.is_multiple_of(d) {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Dense integer coefficients of `Phi_n`, constant term first.
///
/// Built as `(x^n - 1) / prod_{d | n, d < n} Phi_d` by exact division.
pub fn cyclotomic_polynomial(n: u32) -> Vec<BigInt> {
    assert!(n >= 1, "cyclotomic polynomial of conductor 0");
    let divs = divisors(n);
    let mut known: HashMap<u32, Vec<BigInt>> = HashMap::new();
    for &d in &divs {
        if !n.is_multiple_of(d) {
            continue;
        }
        let mut poly = vec![BigInt::zero(); d as usize + 1];
        poly[0] = -BigInt::one();
        poly[d as usize] = BigInt::one();
        for &e in divs.iter().filter(|&&e| e < d && d % e == 0) {
            poly = exact_div_monic(&poly, &known[&e]);
        }
        known.insert(d, poly);
    }
    known.remove(&n).expect("n divides itself")
}

fn exact_div_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dd = den.len() - 1;
    let mut rem = num.to_vec();
    let mut quot = vec![BigInt::zero(); num.len() - dd];
    let den_terms: Vec<(usize, &BigInt)> = den[..dd].iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
    for i in (dd..num.len()).rev() {
        if rem[i].is_zero() {
            continue;
        }
        let q = std::mem::take(&mut rem[i]);
        for &(j, c) in &den_terms {
            rem[i - dd + j] -= &q * c;
        }
        quot[i - dd] = q;
    }
    debug_assert!(rem.iter().all(|c| c.is_zero()), "inexact cyclotomic division");
    quot
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), ints(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(2), ints(&[1, 1]));
        assert_eq!(cyclotomic_polynomial(3), ints(&[1, 1, 1]));
        assert_eq!(cyclotomic_polynomial(4), ints(&[1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(8), ints(&[1, 0, 0, 0, 1]));
        assert_eq!(cyclotomic_polynomial(12), ints(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn phi_105_has_a_coefficient_minus_two() {
        let p = cyclotomic_polynomial(105);
        assert_eq!(p.len() - 1, 48);
        assert!(p.contains(&BigInt::from(-2)));
    }

    #[test]
    fn degree_is_euler_phi() {
        for n in 1..200 {
            assert_eq!(cyclotomic_polynomial(n).len() - 1, euler_phi(n) as usize, "n = {n}");
        }
    }
}
