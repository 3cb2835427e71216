//! Spectra of rational double points: recovery from CCS-numbers, the
//! reference table, and the topological spectrum.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_integer::Integer;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::exactnum::{rat, QmodZ, Rational};
use crate::invariants::{first_ccs, second_ccs, xi_capital};
use crate::matgroup::{build_group, FiniteMatrixGroup, GroupId, H1Generator};
use crate::reps::{catalog, Rep};
use crate::resolution::{ade_graph, fundamental_cycle};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumEntry {
    #[serde(with = "crate::exactnum::rational_string")]
    pub value: Rational,
    pub multiplicity: u32,
}

/// Spectral numbers in `(0, 1)` with multiplicities, sorted by value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumMultiset {
    pub group: GroupId,
    pub entries: Vec<SpectrumEntry>,
}

impl SpectrumMultiset {
    /// Collects values, merging repeats into multiplicities.
    pub fn from_values(group: GroupId, values: impl IntoIterator<Item = Rational>) -> Self {
        let mut counts: BTreeMap<Rational, u32> = BTreeMap::new();
        for v in values {
            *counts.entry(v).or_default() += 1;
        }
        let entries = counts.into_iter().map(|(value, multiplicity)| SpectrumEntry { value, multiplicity }).collect();
        Self { group, entries }
    }

    /// Count with multiplicity (the Milnor number).
    pub fn total(&self) -> u32 {
        self.entries.iter().map(|e| e.multiplicity).sum()
    }

    pub fn multiplicity(&self, value: &Rational) -> u32 {
        self.entries.iter().find(|e| &e.value == value).map_or(0, |e| e.multiplicity)
    }

    fn counts(&self) -> BTreeMap<Rational, u32> {
        let mut counts = BTreeMap::new();
        for e in &self.entries {
            *counts.entry(e.value.clone()).or_default() += e.multiplicity;
        }
        counts
    }
}

impl fmt::Display for SpectrumMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|e| format!("({}, {})", e.value, e.multiplicity)).collect();
        write!(f, "{}", parts.join(", "))
    }
}

/// Multiset difference between two spectra.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumDiff {
    pub equal: bool,
    /// `(value, multiplicity in left, multiplicity in right)` for every disagreement;
    /// a zero marks a value missing on that side.
    pub mismatches: Vec<(String, u32, u32)>,
}

impl fmt::Display for SpectrumDiff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.equal {
            return write!(f, "equal");
        }
        for (i, (v, a, b)) in self.mismatches.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            match (a, b) {
                (0, _) => write!(f, "{v} missing on the left (right has {b})")?,
                (_, 0) => write!(f, "{v} missing on the right (left has {a})")?,
                _ => write!(f, "{v} multiplicity {a} vs {b}")?,
            }
        }
        Ok(())
    }
}

/// Exact multiset comparison, ignoring entry order.
pub fn compare_spectra(a: &SpectrumMultiset, b: &SpectrumMultiset) -> SpectrumDiff {
    let (ca, cb) = (a.counts(), b.counts());
    let keys: BTreeSet<&Rational> = ca.keys().chain(cb.keys()).collect();
    let mismatches: Vec<(String, u32, u32)> = keys
        .into_iter()
        .filter_map(|k| {
            let (x, y) = (ca.get(k).copied().unwrap_or(0), cb.get(k).copied().unwrap_or(0));
            (x != y).then(|| (k.to_string(), x, y))
        })
        .collect();
    SpectrumDiff { equal: mismatches.is_empty(), mismatches }
}

/// Steenbrink's spectra of the rational double points.
pub fn steenbrink_reference(id: GroupId) -> Result<SpectrumMultiset> {
    id.validate()?;
    let over = |numerators: &[i64], d: i64| -> Vec<Rational> { numerators.iter().map(|&n| rat(n, d)).collect() };
    let values = match id {
        GroupId::Cyclic(l) => (1..l as i64).map(|k| rat(k, l as i64)).collect(),
        GroupId::BinaryDihedral(r) => {
            // (2i+1)/(2(r+1)) for i = 0..r, together with 1/2.
            let r = r as i64;
            let mut v: Vec<Rational> = (0..=r).map(|i| rat(2 * i + 1, 2 * (r + 1))).collect();
            v.push(rat(1, 2));
            v
        }
        GroupId::BinaryTetrahedral => over(&[1, 4, 5, 7, 8, 11], 12),
        GroupId::BinaryOctahedral => over(&[1, 5, 7, 9, 11, 13, 17], 18),
        GroupId::BinaryIcosahedral => over(&[1, 7, 11, 13, 17, 19, 23, 29], 30),
    };
    Ok(SpectrumMultiset::from_values(id, values))
}

fn irreducibles(group: &FiniteMatrixGroup) -> Result<Vec<Rep>> {
    catalog(group.id()).iter().map(|spec| Rep::from_spec(group, spec)).collect()
}

/// Distinct nonzero first CCS-numbers of the irreducibles on `generator`.
fn distinct_first_ccs(group: &FiniteMatrixGroup, generator: H1Generator) -> Result<BTreeSet<QmodZ>> {
    let mut values = BTreeSet::new();
    for rep in irreducibles(group)? {
        let v = first_ccs(group, &rep, generator)?;
        if !v.is_zero() {
            values.insert(v);
        }
    }
    Ok(values)
}

/// `Xi` of the natural representation on the minimal resolution.
pub fn natural_xi_capital(group: &FiniteMatrixGroup) -> Result<QmodZ> {
    let cycle = fundamental_cycle(&ade_graph(group.id())?)?;
    xi_capital(group, &Rep::natural(group)?, &cycle)
}

/// Spectrum assembled from the nonzero first CCS-numbers (on `zeta`, or on
/// `c`), `Xi = 1/m`, and its multiples: `(2i+1) Xi` for `i = 1..r` in the
/// binary dihedral case, `k Xi` for `1 < k < m` coprime to `m` otherwise.
pub fn recover_spectrum(id: GroupId) -> Result<SpectrumMultiset> {
    let group = build_group(id)?;
    if let GroupId::Cyclic(_) = id {
        let values = distinct_first_ccs(&group, H1Generator::Zeta)?;
        return Ok(SpectrumMultiset::from_values(id, values.into_iter().map(|v| v.value().clone())));
    }
    let mut values: Vec<QmodZ> = distinct_first_ccs(&group, H1Generator::C)?.into_iter().collect();

    let xi = natural_xi_capital(&group)?;
    if xi.is_zero() {
        return Err(Error::DataIntegrity(format!("Xi vanishes for {id}")));
    }
    if !xi.value().numer().is_one() {
        return Err(Error::DataIntegrity(format!("Xi = {xi} is not of the form 1/m")));
    }
    let m = xi.value().denom().clone();
    values.push(xi.clone());
    match id {
        GroupId::BinaryDihedral(r) => {
            values.extend((1..=r as i64).map(|i| xi.times(2 * i + 1)));
        }
        _ => {
            let mut k = num_bigint::BigInt::from(2);
            while k < m {
                if k.gcd(&m).is_one() {
                    values.push(xi.scale(&Rational::from_integer(k.clone())));
                }
                k += 1;
            }
        }
    }
    if values.iter().any(QmodZ::is_zero) {
        return Err(Error::DataIntegrity(format!("spectral number 0 produced for {id}")));
    }
    Ok(SpectrumMultiset::from_values(id, values.into_iter().map(|v| v.value().clone())))
}

/// Which nontrivial irreducibles (catalog order, `a1` excluded) are special.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecialityMask {
    pub special: Vec<bool>,
}

impl SpecialityMask {
    /// Every representation of a rational double point is special.
    pub fn all(id: GroupId) -> Self {
        Self { special: vec![true; catalog(id).len() - 1] }
    }
}

/// One first-class entry: the value of a class on each `H_1` generator.
pub type ClassTuple = Vec<(H1Generator, QmodZ)>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TopSpectrum {
    pub group: GroupId,
    /// Distinct nonzero first CCS classes of special irreducibles.
    pub first_classes: BTreeSet<ClassTuple>,
    /// Second CCS-number of the natural representation.
    pub natural: Option<QmodZ>,
}

fn first_classes<'a>(
    group: &FiniteMatrixGroup,
    flagged: impl Iterator<Item = (&'a Rep, bool)>,
) -> Result<BTreeSet<ClassTuple>> {
    let generators = group.id().h1_generators();
    let mut classes = BTreeSet::new();
    for (rep, _) in flagged.filter(|(_, special)| *special) {
        let tuple: ClassTuple =
            generators.iter().map(|&g| Ok((g, first_ccs(group, rep, g)?))).collect::<Result<_>>()?;
        if tuple.iter().any(|(_, v)| !v.is_zero()) {
            classes.insert(tuple);
        }
    }
    Ok(classes)
}

pub fn topological_spectrum(id: GroupId, mask: &SpecialityMask) -> Result<TopSpectrum> {
    let group = build_group(id)?;
    let reps = irreducibles(&group)?;
    let expected = reps.len() - 1;
    if mask.special.len() != expected {
        return Err(Error::MaskLength { got: mask.special.len(), expected });
    }
    let first_classes = first_classes(&group, reps.iter().skip(1).zip(mask.special.iter().copied()))?;
    let natural = Some(second_ccs(&group, &Rep::natural(&group)?)?);
    Ok(TopSpectrum { group: id, first_classes, natural })
}

/// First CCS-numbers on `b` for a binary dihedral group with `r` odd, and
/// those among them that are not spectral numbers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NegativeControl {
    pub r: u32,
    /// Distinct nonzero values on `b`.
    pub values: Vec<QmodZ>,
    /// Values absent from the reference spectrum; empty exactly when `r = 1 mod 4`.
    pub non_spectral: Vec<QmodZ>,
}

pub fn negative_control_bd_odd(r: u32) -> Result<NegativeControl> {
    if r.is_multiple_of(2) {
        return Err(Error::InvalidGroup(format!("r = {r} is even")));
    }
    let id = GroupId::binary_dihedral(r)?;
    let group = build_group(id)?;
    let values: Vec<QmodZ> = distinct_first_ccs(&group, H1Generator::B)?.into_iter().collect();
    let reference = steenbrink_reference(id)?;
    let non_spectral = values.iter().filter(|v| reference.multiplicity(v.value()) == 0).cloned().collect();
    Ok(NegativeControl { r, values, non_spectral })
}
