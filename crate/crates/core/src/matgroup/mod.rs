//! The finite subgroups of `SU(2)`: identifiers, explicit natural generators,
//! closure into matrix groups, conjugacy classes and abelianizations.

mod abelian;
mod group;
mod matrix;
mod snf;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

pub use abelian::{abelianization, AbelianizationData, GeneratorRelation};
pub(crate) use group::golden_ratio;
pub use group::{build_group, check_presentation, ConjugacyClass, FiniteMatrixGroup};
pub use matrix::{CycMatrix, MatrixKey};
pub use snf::{smith_normal_form, IntMatrix, SmithForm};

/// Largest family parameter accepted when parsing a group spec.
pub const MAX_PARAMETER: u32 = 10_000;

/// A finite subgroup of `SU(2)` up to conjugacy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupId {
    /// `C_l`, order `l`.
    Cyclic(u32),
    /// `BD_2r = <2,2,r>`, order `4r`; holds `r`.
    BinaryDihedral(u32),
    BinaryTetrahedral,
    BinaryOctahedral,
    BinaryIcosahedral,
}

impl GroupId {
    pub fn cyclic(l: u32) -> Result<Self> {
        let id = GroupId::Cyclic(l);
        id.validate()?;
        Ok(id)
    }

    pub fn binary_dihedral(r: u32) -> Result<Self> {
        let id = GroupId::BinaryDihedral(r);
        id.validate()?;
        Ok(id)
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            GroupId::Cyclic(l) if l < 2 => Err(Error::InvalidGroup(format!("cyclic group needs l >= 2, got {l}"))),
            GroupId::BinaryDihedral(r) if r < 2 => {
                Err(Error::InvalidGroup(format!("binary dihedral group needs r >= 2, got {r}")))
            }
            _ => Ok(()),
        }
    }

    pub fn order(&self) -> u64 {
        match *self {
            GroupId::Cyclic(l) => l as u64,
            GroupId::BinaryDihedral(r) => 4 * r as u64,
            GroupId::BinaryTetrahedral => 24,
            GroupId::BinaryOctahedral => 48,
            GroupId::BinaryIcosahedral => 120,
        }
    }

    /// `(q, r)` of the presentation `<b, c | (bc)^2 = b^q = c^r>`.
    pub fn presentation(&self) -> Option<(u32, u32)> {
        match *self {
            GroupId::Cyclic(_) => None,
            GroupId::BinaryDihedral(r) => Some((2, r)),
            GroupId::BinaryTetrahedral => Some((3, 3)),
            GroupId::BinaryOctahedral => Some((3, 4)),
            GroupId::BinaryIcosahedral => Some((3, 5)),
        }
    }

    /// The field `Q(zeta_n)` holding the natural generators and all characters.
    pub fn ambient_conductor(&self) -> u32 {
        match *self {
            GroupId::Cyclic(l) => l,
            GroupId::BinaryDihedral(r) => crate::exactnum::lcm_u32(4, 2 * r),
            GroupId::BinaryTetrahedral => 12,
            GroupId::BinaryOctahedral => 24,
            GroupId::BinaryIcosahedral => 20,
        }
    }

    /// Generators of `H_1(S^3/G) = Ab(G)` as listed in the first CCS-number table.
    pub fn h1_generators(&self) -> Vec<H1Generator> {
        match self {
            GroupId::Cyclic(_) => vec![H1Generator::Zeta],
            GroupId::BinaryDihedral(_) => vec![H1Generator::B, H1Generator::C],
            GroupId::BinaryTetrahedral | GroupId::BinaryOctahedral => vec![H1Generator::C],
            GroupId::BinaryIcosahedral => vec![],
        }
    }

    /// Group elements that may be used to evaluate first CCS-numbers.
    pub fn evaluation_generators(&self) -> Vec<H1Generator> {
        match self {
            GroupId::Cyclic(_) => vec![H1Generator::Zeta],
            _ => vec![H1Generator::B, H1Generator::C],
        }
    }

    /// Human name, e.g. `BD_8` for `r = 4`.
    pub fn name(&self) -> String {
        match *self {
            GroupId::Cyclic(l) => format!("C_{l}"),
            GroupId::BinaryDihedral(r) => format!("BD_{}", 2 * r),
            GroupId::BinaryTetrahedral => "BT".into(),
            GroupId::BinaryOctahedral => "BO".into(),
            GroupId::BinaryIcosahedral => "BI".into(),
        }
    }

    pub fn is_cyclic(&self) -> bool {
        matches!(self, GroupId::Cyclic(_))
    }
}

impl fmt::Display for GroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GroupId::Cyclic(l) => write!(f, "c:{l}"),
            GroupId::BinaryDihedral(r) => write!(f, "bd:{r}"),
            GroupId::BinaryTetrahedral => write!(f, "bt"),
            GroupId::BinaryOctahedral => write!(f, "bo"),
            GroupId::BinaryIcosahedral => write!(f, "bi"),
        }
    }
}

impl FromStr for GroupId {
    type Err = Error;

    /// Grammar: `c:<l> | bd:<r> | bt | bo | bi`, with `2 <= l, r <= 10^4`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_lowercase();
        let param = |text: &str| -> Result<u32> {
            let v: u32 = text.parse().map_err(|_| Error::Parse(format!("bad group parameter `{text}`")))?;
            if !(2..=MAX_PARAMETER).contains(&v) {
                return Err(Error::Parse(format!("group parameter {v} outside [2, {MAX_PARAMETER}]")));
            }
            Ok(v)
        };
        match s.as_str() {
            "bt" => Ok(GroupId::BinaryTetrahedral),
            "bo" => Ok(GroupId::BinaryOctahedral),
            "bi" => Ok(GroupId::BinaryIcosahedral),
            _ => match s.split_once(':') {
                Some(("c", l)) => Ok(GroupId::Cyclic(param(l)?)),
                Some(("bd", r)) => Ok(GroupId::BinaryDihedral(param(r)?)),
                _ => Err(Error::Parse(format!("unknown group `{s}` (expected c:<l>, bd:<r>, bt, bo or bi)"))),
            },
        }
    }
}

impl Serialize for GroupId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for GroupId {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// A named element whose image in `Ab(G)` is used as an `H_1` class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum H1Generator {
    Zeta,
    B,
    C,
}

impl fmt::Display for H1Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            H1Generator::Zeta => "zeta",
            H1Generator::B => "b",
            H1Generator::C => "c",
        })
    }
}

impl FromStr for H1Generator {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "zeta" => Ok(H1Generator::Zeta),
            "b" => Ok(H1Generator::B),
            "c" => Ok(H1Generator::C),
            other => Err(Error::Parse(format!("unknown generator `{other}`"))),
        }
    }
}

impl Serialize for H1Generator {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for H1Generator {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_group_specs() {
        assert_eq!("c:5".parse::<GroupId>().unwrap(), GroupId::Cyclic(5));
        assert_eq!("bd:7".parse::<GroupId>().unwrap(), GroupId::BinaryDihedral(7));
        assert_eq!("BT".parse::<GroupId>().unwrap(), GroupId::BinaryTetrahedral);
        assert!("c:1".parse::<GroupId>().is_err());
        assert!("bd:10001".parse::<GroupId>().is_err());
        assert!("e8".parse::<GroupId>().is_err());
        for id in ["c:2", "bd:10000", "bt", "bo", "bi"] {
            assert_eq!(id.parse::<GroupId>().unwrap().to_string(), id);
        }
    }

    #[test]
    fn constructor_bounds() {
        assert!(GroupId::cyclic(1).is_err());
        assert!(GroupId::binary_dihedral(1).is_err());
        assert_eq!(GroupId::binary_dihedral(3).unwrap().order(), 12);
    }
}
