//! Exact scalars: rationals, cyclotomic field elements and `Q/Z`.

mod cyclotomic;
mod poly;
mod qmodz;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

pub use cyclotomic::{log_root_of_unity, Cyclotomic};
pub use poly::{cyclotomic_polynomial, euler_phi};
pub use qmodz::QmodZ;

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = BigRational;

pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_rational(text: &str) -> crate::Result<Rational> {
    let text = text.trim();
    let parsed = match text.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| parse_err(text))?;
            let q: BigInt = q.trim().parse().map_err(|_| parse_err(text))?;
            if q.is_zero() {
                return Err(parse_err(text));
            }
            Rational::new(p, q)
        }
        None => Rational::from_integer(text.parse().map_err(|_| parse_err(text))?),
    };
    Ok(parsed)
}

fn parse_err(text: &str) -> crate::Error {
    crate::Error::Parse(format!("`{text}` is not a rational number"))
}

/// Serde adapter writing a [`Rational`] as the string `"p/q"`.
pub mod rational_string {
    use serde::{Deserialize, Deserializer, Serializer};

    use super::{parse_rational, Rational};

    pub fn serialize<S: Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(q)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let text = String::deserialize(d)?;
        parse_rational(&text).map_err(serde::de::Error::custom)
    }
}

pub(crate) fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub(crate) fn lcm_u32(a: u32, b: u32) -> u32 {
    let g = gcd_u64(a as u64, b as u64);
    (a as u64 / g * b as u64) as u32
}
