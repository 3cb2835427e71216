use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{parse_rational, Rational};

/// A rational number modulo 1, stored by its representative in `[0, 1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QmodZ(Rational);

impl QmodZ {
    pub fn new(q: Rational) -> Self {
        let floor = q.floor();
        Self(q - floor)
    }

    pub fn zero() -> Self {
        Self(Rational::zero())
    }

    pub fn from_ratio(numer: i64, denom: i64) -> Self {
        Self::new(Rational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    /// The canonical representative in `[0, 1)`.
    pub fn value(&self) -> &Rational {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// Multiplies the canonical representative by `factor` and reduces mod 1.
    pub fn scale(&self, factor: &Rational) -> Self {
        Self::new(&self.0 * factor)
    }

    pub fn times(&self, k: i64) -> Self {
        Self::new(&self.0 * BigInt::from(k))
    }
}

impl Add for QmodZ {
    type Output = QmodZ;
    fn add(self, rhs: QmodZ) -> QmodZ {
        QmodZ::new(self.0 + rhs.0)
    }
}

impl<'a> Add<&'a QmodZ> for &'a QmodZ {
    type Output = QmodZ;
    fn add(self, rhs: &QmodZ) -> QmodZ {
        QmodZ::new(&self.0 + &rhs.0)
    }
}

impl Sub for QmodZ {
    type Output = QmodZ;
    fn sub(self, rhs: QmodZ) -> QmodZ {
        QmodZ::new(self.0 - rhs.0)
    }
}

impl<'a> Sub<&'a QmodZ> for &'a QmodZ {
    type Output = QmodZ;
    fn sub(self, rhs: &QmodZ) -> QmodZ {
        QmodZ::new(&self.0 - &rhs.0)
    }
}

impl Neg for QmodZ {
    type Output = QmodZ;
    fn neg(self) -> QmodZ {
        QmodZ::new(-self.0)
    }
}

impl fmt::Display for QmodZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl FromStr for QmodZ {
    type Err = crate::Error;
    fn from_str(s: &str) -> crate::Result<Self> {
        parse_rational(s).map(QmodZ::new)
    }
}

impl Serialize for QmodZ {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for QmodZ {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;
    use proptest::prelude::*;

    #[test]
    fn wraps_into_unit_interval() {
        assert_eq!(QmodZ::new(rat(-44, 24)).to_string(), "1/6");
        assert_eq!(QmodZ::new(rat(-31, 24)).to_string(), "17/24");
        assert_eq!(QmodZ::from_ratio(5, 5), QmodZ::zero());
        assert_eq!(QmodZ::from_ratio(1, 24).times(9).to_string(), "3/8");
    }

    #[test]
    fn string_round_trip() {
        let q: QmodZ = "17/24".parse().unwrap();
        assert_eq!(q, QmodZ::from_ratio(17, 24));
        assert_eq!("0".parse::<QmodZ>().unwrap(), QmodZ::zero());
        assert!("1/0".parse::<QmodZ>().is_err());
        assert!("x".parse::<QmodZ>().is_err());
    }

    fn q() -> impl Strategy<Value = QmodZ> {
        (-500i64..500, 1i64..60).prop_map(|(p, d)| QmodZ::from_ratio(p, d))
    }

    proptest! {
        #[test]
        fn group_laws(a in q(), b in q(), c in q()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a + &(-a.clone()), QmodZ::zero());
            prop_assert_eq!(&a + &b, &b + &a);
            let s = &a + &b;
            prop_assert!(*s.value() >= Rational::zero());
            prop_assert!(*s.value() < Rational::from_integer(1.into()));
        }
    }
}
