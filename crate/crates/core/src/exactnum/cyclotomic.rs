use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::poly::{euler_phi, modulus};
use super::{gcd_u64, lcm_u32, QmodZ, Rational};
use crate::{Error, Result};

/// An element of `Q(zeta_n)` in the power basis `1, zeta_n, ..., zeta_n^(phi(n)-1)`.
///
/// Coefficients are stored sparsely (exponent, nonzero coefficient) in
/// increasing exponent order, which makes the representation canonical for a
/// fixed conductor. Values with different conductors compare equal when they
/// agree after embedding into `Q(zeta_lcm)`.
#[derive(Clone, Debug)]
pub struct Cyclotomic {
    conductor: u32,
    terms: Vec<(u32, Rational)>,
}

impl Cyclotomic {
    /// Builds `sum_k coefficients[k] * zeta_n^k` and reduces it modulo `Phi_n`.
    pub fn new(conductor: u32, coefficients: Vec<Rational>) -> Result<Self> {
        if conductor == 0 {
            return Err(Error::InvalidConductor);
        }
        if coefficients.len() > conductor as usize {
            return Err(Error::TooManyCoefficients { conductor, len: coefficients.len() });
        }
        let acc =
            coefficients.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(e, c)| (e as u64, c)).collect();
        Ok(Self::reduced(conductor, acc))
    }

    pub fn zero() -> Self {
        Self { conductor: 1, terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_rational(q: Rational) -> Self {
        let terms = if q.is_zero() { Vec::new() } else { vec![(0, q)] };
        Self { conductor: 1, terms }
    }

    pub fn from_int(value: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(value)))
    }

    /// `zeta_n^k` for any integer `k`.
    pub fn root_of_unity(n: u32, k: i64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidConductor);
        }
        let e = k.rem_euclid(n as i64) as u64;
        Ok(Self::reduced(n, BTreeMap::from([(e, Rational::one())])))
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// Dense coefficient vector of length `phi(conductor)`.
    pub fn coefficients(&self) -> Vec<Rational> {
        let mut dense = vec![Rational::zero(); euler_phi(self.conductor) as usize];
        for (e, c) in &self.terms {
            dense[*e as usize] = c.clone();
        }
        dense
    }

    pub fn terms(&self) -> &[(u32, Rational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The rational value, if this element lies in `Q`.
    pub fn to_rational(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [(0, c)] => Some(c.clone()),
            _ => None,
        }
    }

    /// Re-expresses the element in `Q(zeta_m)`; `m` must be a multiple of the conductor.
    pub fn embed(&self, m: u32) -> Result<Self> {
        if m == 0 || !m.is_multiple_of(self.conductor) {
            return Err(Error::InvalidEmbedding { from: self.conductor, to: m });
        }
        if m == self.conductor {
            return Ok(self.clone());
        }
        let step = (m / self.conductor) as u64;
        let acc = self.terms.iter().map(|(e, c)| (*e as u64 * step, c.clone())).collect();
        Ok(Self::reduced(m, acc))
    }

    fn aligned(&self, other: &Self) -> (Self, Self) {
        let m = lcm_u32(self.conductor, other.conductor);
        (self.embed(m).expect("lcm is a multiple"), other.embed(m).expect("lcm is a multiple"))
    }

    fn combine(&self, other: &Self, sign: i8) -> Self {
        if self.conductor != other.conductor {
            let (a, b) = self.aligned(other);
            return a.combine(&b, sign);
        }
        let mut acc: BTreeMap<u64, Rational> = self.terms.iter().map(|(e, c)| (*e as u64, c.clone())).collect();
        for (e, c) in &other.terms {
            let slot = acc.entry(*e as u64).or_insert_with(Rational::zero);
            if sign > 0 {
                *slot += c;
            } else {
                *slot -= c;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Self::from_reduced_map(self.conductor, acc)
    }

    fn product(&self, other: &Self) -> Self {
        if self.conductor != other.conductor {
            if self.conductor == 1 || other.conductor == 1 {
                let (scalar, elt) = if self.conductor == 1 { (self, other) } else { (other, self) };
                return match scalar.to_rational() {
                    Some(q) => elt.scale(&q),
                    None => unreachable!("conductor 1 elements are rational"),
                };
            }
            let (a, b) = self.aligned(other);
            return a.product(&b);
        }
        let mut acc: BTreeMap<u64, Rational> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let slot = acc.entry((*ea + *eb) as u64).or_insert_with(Rational::zero);
                *slot += ca * cb;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Self::reduced(self.conductor, acc)
    }

    pub fn scale(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return Self { conductor: self.conductor, terms: Vec::new() };
        }
        Self { conductor: self.conductor, terms: self.terms.iter().map(|(e, c)| (*e, c * q)).collect() }
    }

    pub fn pow(&self, k: i64) -> Result<Self> {
        let mut base = if k < 0 { self.inv()? } else { self.clone() };
        let mut k = k.unsigned_abs();
        let mut acc = Self::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        Ok(acc)
    }

    /// The Galois automorphism `zeta_n -> zeta_n^k`; `k` must be coprime to the conductor.
    pub fn galois(&self, k: i64) -> Self {
        let n = self.conductor as i64;
        debug_assert_eq!(gcd_u64(k.rem_euclid(n.max(1)) as u64, n as u64), 1);
        let mut acc: BTreeMap<u64, Rational> = BTreeMap::new();
        for (e, c) in &self.terms {
            let img = (*e as i64 * k).rem_euclid(n) as u64;
            *acc.entry(img).or_insert_with(Rational::zero) += c;
        }
        acc.retain(|_, c| !c.is_zero());
        Self::reduced(self.conductor, acc)
    }

    /// Complex conjugation, `zeta_n -> zeta_n^-1`.
    pub fn conjugate(&self) -> Self {
        self.galois(-1)
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against `Phi_n`.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero(self.conductor));
        }
        if let Some(q) = self.to_rational() {
            return Self::from_rational(q.recip()).embed(self.conductor);
        }
        let n = self.conductor;
        let m = modulus(n);
        let mut phi = vec![Rational::zero(); m.degree + 1];
        phi[m.degree] = Rational::one();
        for (e, c) in &m.lower {
            phi[*e] = Rational::from_integer(c.clone());
        }
        let inverse = dense_inverse_mod(&self.coefficients(), &phi).ok_or(Error::DivisionByZero(n))?;
        Self::new(n, inverse)
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    /// Total order on canonical forms: by conductor, then lexicographically on terms.
    /// Only meaningful between values sharing a conductor.
    pub fn cmp_canonical(&self, other: &Self) -> Ordering {
        self.conductor.cmp(&other.conductor).then_with(|| self.terms.cmp(&other.terms))
    }

    fn reduced(conductor: u32, mut acc: BTreeMap<u64, Rational>) -> Self {
        let m = modulus(conductor);
        let degree = m.degree as u64;
        while let Some((&top, _)) = acc.last_key_value() {
            if top < degree {
                break;
            }
            let c = acc.remove(&top).expect("key present");
            let shift = top - degree;
            for (e, a) in &m.lower {
                let key = shift + *e as u64;
                let slot = acc.entry(key).or_insert_with(Rational::zero);
                *slot -= &c * a;
                if slot.is_zero() {
                    acc.remove(&key);
                }
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Self::from_reduced_map(conductor, acc)
    }

    fn from_reduced_map(conductor: u32, acc: BTreeMap<u64, Rational>) -> Self {
        Self { conductor, terms: acc.into_iter().map(|(e, c)| (e as u32, c)).collect() }
    }
}

/// Inverse of `a` modulo the monic `modulus` over `Q`, or `None` if they share a factor.
fn dense_inverse_mod(a: &[Rational], modulus: &[Rational]) -> Option<Vec<Rational>> {
    fn trim(p: &mut Vec<Rational>) {
        while p.last().is_some_and(|c| c.is_zero()) {
            p.pop();
        }
    }
    fn sub_mul_shift(target: &mut Vec<Rational>, p: &[Rational], q: &Rational, shift: usize) {
        if target.len() < p.len() + shift {
            target.resize(p.len() + shift, Rational::zero());
        }
        for (i, c) in p.iter().enumerate() {
            target[i + shift] -= c * q;
        }
        trim(target);
    }
    // Invariant: s_i * a == r_i (mod modulus).
    let mut r0 = modulus.to_vec();
    let mut r1 = a.to_vec();
    trim(&mut r1);
    let mut s0: Vec<Rational> = Vec::new();
    let mut s1: Vec<Rational> = vec![Rational::one()];
    while !r1.is_empty() {
        let mut q: Vec<Rational> = Vec::new();
        let lead = r1.last().cloned().expect("nonempty");
        while r0.len() >= r1.len() && !r0.is_empty() {
            let shift = r0.len() - r1.len();
            let coeff = r0.last().expect("nonempty") / &lead;
            if q.len() <= shift {
                q.resize(shift + 1, Rational::zero());
            }
            q[shift] = coeff.clone();
            sub_mul_shift(&mut r0, &r1, &coeff, shift);
        }
        // s_next = s0 - q * s1
        let mut s_next = s0.clone();
        for (i, qc) in q.iter().enumerate() {
            if !qc.is_zero() {
                sub_mul_shift(&mut s_next, &s1, qc, i);
            }
        }
        trim(&mut s_next);
        r0 = std::mem::replace(&mut r1, r0);
        s0 = std::mem::replace(&mut s1, s_next);
    }
    // r0 is the gcd; it must be a nonzero constant.
    if r0.len() != 1 {
        return None;
    }
    let g = r0[0].clone();
    let deg = modulus.len() - 1;
    let mut out: Vec<Rational> = s0.iter().map(|c| c / &g).collect();
    // s0 already has degree < deg, but reduce defensively if it does not.
    while out.len() > deg {
        let top = out.pop().expect("nonempty");
        let shift = out.len() - deg;
        for (i, c) in modulus[..deg].iter().enumerate() {
            out[i + shift] -= c * &top;
        }
    }
    Some(out)
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.terms == other.terms;
        }
        let (a, b) = self.aligned(other);
        a.terms == b.terms
    }
}

impl Eq for Cyclotomic {}

impl From<Rational> for Cyclotomic {
    fn from(q: Rational) -> Self {
        Self::from_rational(q)
    }
}

impl From<i64> for Cyclotomic {
    fn from(v: i64) -> Self {
        Self::from_int(v)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl $tr<&Cyclotomic> for &Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: &Cyclotomic) -> Cyclotomic {
                $body(self, rhs)
            }
        }
        impl $tr<Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: Cyclotomic) -> Cyclotomic {
                $body(&self, &rhs)
            }
        }
        impl $tr<&Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: &Cyclotomic) -> Cyclotomic {
                $body(&self, rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a: &Cyclotomic, b: &Cyclotomic| a.combine(b, 1));
forward_binop!(Sub, sub, |a: &Cyclotomic, b: &Cyclotomic| a.combine(b, -1));
forward_binop!(Mul, mul, |a: &Cyclotomic, b: &Cyclotomic| a.product(b));

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic { conductor: self.conductor, terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

impl std::iter::Sum for Cyclotomic {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Cyclotomic::zero(), |a, b| a + b)
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            let mag = c.abs();
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let root = match e {
                0 => String::new(),
                1 => format!("z{}", self.conductor),
                _ => format!("z{}^{}", self.conductor, e),
            };
            match (root.is_empty(), mag.is_one()) {
                (true, _) => write!(f, "{mag}")?,
                (false, true) => write!(f, "{root}")?,
                (false, false) => write!(f, "{mag}*{root}")?,
            }
        }
        Ok(())
    }
}

/// `k/m` in `[0, 1)` such that `z = zeta_m^k`, found by matching `z` against
/// every power of `zeta_m`. Here `m` is the conductor of `z`, doubled when odd so
/// that `-1` and its multiples are reachable.
pub fn log_root_of_unity(z: &Cyclotomic) -> Result<QmodZ> {
    let c = z.conductor();
    let m = if c.is_multiple_of(2) { c } else { 2 * c };
    let target = z.embed(m)?;
    let step = Cyclotomic::root_of_unity(m, 1)?;
    let mut power = Cyclotomic::root_of_unity(m, 0)?;
    for k in 0..m {
        if power.terms == target.terms {
            return Ok(QmodZ::new(Rational::new(BigInt::from(k), BigInt::from(m))));
        }
        power = &power * &step;
    }
    Err(Error::NotRootOfUnity(z.to_string()))
}
