//! Irreducible representations, their characters and determinant characters.

mod catalog;
mod character;
mod icosahedral;

use std::collections::HashMap;

pub use catalog::catalog;
pub use character::Character;

use crate::exactnum::Cyclotomic;
use crate::matgroup::{CycMatrix, FiniteMatrixGroup, GroupId};
use crate::{Error, Result};

/// Where the data of a catalogued representation comes from.
#[derive(Clone, Debug)]
pub enum RepSource {
    /// Images of the primary generators (`[b, c]`, or `[zeta]` for cyclic groups).
    Generators(Vec<CycMatrix>),
    /// Row of the embedded binary icosahedral character table.
    CharacterRow(usize),
}

/// One entry of [`catalog`].
#[derive(Clone, Debug)]
pub struct RepSpec {
    pub group: GroupId,
    pub name: String,
    pub dimension: usize,
    pub source: RepSource,
    /// Whether this is the defining 2-dimensional representation.
    pub natural: bool,
}

impl RepSpec {
    pub fn images(&self) -> Option<&[CycMatrix]> {
        match &self.source {
            RepSource::Generators(images) => Some(images),
            RepSource::CharacterRow(_) => None,
        }
    }

    fn check_group(&self, group: &FiniteMatrixGroup) -> Result<()> {
        if self.group != group.id() {
            return Err(Error::GroupMismatch(self.group.to_string(), group.id().to_string()));
        }
        Ok(())
    }

    /// Image of every listed element, evaluated along the closure words.
    fn evaluate(&self, group: &FiniteMatrixGroup, elements: &[usize]) -> Result<Vec<CycMatrix>> {
        let images = self
            .images()
            .ok_or_else(|| Error::DataIntegrity(format!("{} of {} has no generator images", self.name, self.group)))?;
        let mut slots = images.to_vec();
        for g in images {
            slots.push(g.inverse()?);
        }
        let mut cache: HashMap<usize, CycMatrix> =
            HashMap::from([(group.identity_index(), CycMatrix::identity(self.dimension))]);
        let mut out = Vec::with_capacity(elements.len());
        for &e in elements {
            // Walk up to the nearest evaluated ancestor, then back down.
            let mut chain = Vec::new();
            let mut at = e;
            while !cache.contains_key(&at) {
                let (parent, slot) = group.parent(at).ok_or(Error::MissingWord(e))?;
                chain.push((at, slot));
                at = parent;
            }
            let mut m = cache[&at].clone();
            for &(node, slot) in chain.iter().rev() {
                m = &m * &slots[slot];
                cache.insert(node, m.clone());
            }
            out.push(m);
        }
        Ok(out)
    }

    fn representatives(group: &FiniteMatrixGroup) -> Vec<usize> {
        group.classes().iter().map(|c| c.representative).collect()
    }

    pub fn character(&self, group: &FiniteMatrixGroup) -> Result<Character> {
        self.check_group(group)?;
        match &self.source {
            RepSource::Generators(_) => {
                let images = self.evaluate(group, &Self::representatives(group))?;
                Ok(Character::new(group.id(), images.iter().map(CycMatrix::trace).collect()))
            }
            RepSource::CharacterRow(row) => {
                let columns: Vec<Cyclotomic> =
                    icosahedral::COLUMN_TRACES.iter().map(|&t| icosahedral::golden(t)).collect();
                let values = group
                    .classes()
                    .iter()
                    .map(|class| {
                        let col = columns.iter().position(|c| *c == class.natural_character).ok_or_else(|| {
                            Error::DataIntegrity(format!("no table column for trace {}", class.natural_character))
                        })?;
                        Ok(icosahedral::golden(icosahedral::TABLE[*row][col]))
                    })
                    .collect::<Result<_>>()?;
                Ok(Character::new(group.id(), values))
            }
        }
    }

    /// Character and determinant character together, evaluating each class
    /// image only once.
    pub fn character_and_det(&self, group: &FiniteMatrixGroup) -> Result<(Character, Character)> {
        self.check_group(group)?;
        match &self.source {
            RepSource::Generators(_) => {
                let images = self.evaluate(group, &Self::representatives(group))?;
                let traces = images.iter().map(CycMatrix::trace).collect();
                let dets = images.iter().map(CycMatrix::det).collect::<Result<_>>()?;
                Ok((Character::new(group.id(), traces), Character::new(group.id(), dets)))
            }
            RepSource::CharacterRow(_) => {
                let character = self.character(group)?;
                let det = character.determinant(group)?;
                Ok((character, det))
            }
        }
    }

    /// `det` of the image of each class, from the matrices when available and
    /// from power maps otherwise.
    pub fn det_character(&self, group: &FiniteMatrixGroup) -> Result<Character> {
        self.check_group(group)?;
        match &self.source {
            RepSource::Generators(_) => {
                let images = self.evaluate(group, &Self::representatives(group))?;
                let values = images.iter().map(CycMatrix::det).collect::<Result<_>>()?;
                Ok(Character::new(group.id(), values))
            }
            RepSource::CharacterRow(_) => self.character(group)?.determinant(group),
        }
    }

    /// Checks that the generator images satisfy the defining relations:
    /// `zeta^l = 1`, or `(bc)^2 = b^q = c^r = z` with `z^2 = 1`.
    pub fn satisfies_relations(&self) -> Result<bool> {
        let Some(images) = self.images() else {
            return Ok(true);
        };
        let identity = CycMatrix::identity(self.dimension);
        Ok(match self.group.presentation() {
            None => {
                let GroupId::Cyclic(l) = self.group else { unreachable!() };
                images[0].pow(l as u64) == identity
            }
            Some((q, r)) => {
                let (b, c) = (&images[0], &images[1]);
                let bc = b * c;
                let z = bc.pow(2);
                z == b.pow(q as u64) && z == c.pow(r as u64) && z.pow(2) == identity
            }
        })
    }
}

/// Looks up `name` (`a1`, `r2`, ...) in the catalog of `group`.
pub fn find_rep(group: GroupId, name: &str) -> Result<RepSpec> {
    catalog(group)
        .into_iter()
        .find(|r| r.name == name)
        .ok_or_else(|| Error::UnknownRepresentation { group: group.to_string(), rep: name.to_string() })
}

/// Checks that the catalog is a complete list of distinct irreducibles:
/// as many rows as classes, orthonormal, with the expected degrees.
pub fn verify_character_table(group: &FiniteMatrixGroup) -> Result<()> {
    let specs = catalog(group.id());
    if specs.len() != group.classes().len() {
        return Err(Error::DataIntegrity(format!(
            "{} has {} classes but {} catalogued irreducibles",
            group.id(),
            group.classes().len(),
            specs.len()
        )));
    }
    let chars: Vec<Character> = specs.iter().map(|s| s.character(group)).collect::<Result<_>>()?;
    for (i, (si, ci)) in specs.iter().zip(&chars).enumerate() {
        if ci.degree()? != si.dimension {
            return Err(Error::DataIntegrity(format!("{} has the wrong degree", si.name)));
        }
        for (j, cj) in chars.iter().enumerate() {
            let expected = if i == j { Cyclotomic::one() } else { Cyclotomic::zero() };
            if ci.inner_product(cj, group)? != expected {
                return Err(Error::DataIntegrity(format!("<{}, {}> != {}", si.name, specs[j].name, expected)));
            }
        }
    }
    Ok(())
}

/// A representation known through its character and determinant character.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rep {
    pub name: String,
    pub character: Character,
    pub det: Character,
}

impl Rep {
    pub fn from_spec(group: &FiniteMatrixGroup, spec: &RepSpec) -> Result<Self> {
        let (character, det) = spec.character_and_det(group)?;
        Ok(Self { name: spec.name.clone(), character, det })
    }

    /// A catalogued irreducible, or `nat` for the defining representation.
    pub fn named(group: &FiniteMatrixGroup, name: &str) -> Result<Self> {
        if name == "nat" {
            return Self::natural(group);
        }
        Self::from_spec(group, &find_rep(group.id(), name)?)
    }

    pub fn from_character(group: &FiniteMatrixGroup, name: &str, character: Character) -> Result<Self> {
        let det = character.determinant(group)?;
        Ok(Self { name: name.into(), character, det })
    }

    pub fn trivial(group: &FiniteMatrixGroup) -> Self {
        Self { name: "a1".into(), character: Character::trivial(group), det: Character::trivial(group) }
    }

    /// The defining representation `G -> SU(2)`.
    pub fn natural(group: &FiniteMatrixGroup) -> Result<Self> {
        let character = Character::natural(group);
        let det = Character::trivial(group);
        Ok(Self { name: "nat".into(), character, det })
    }

    pub fn dimension(&self) -> Result<usize> {
        self.character.degree()
    }

    pub fn group(&self) -> GroupId {
        self.character.group()
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        Ok(Self {
            name: format!("{}+{}", self.name, other.name),
            character: self.character.direct_sum(&other.character)?,
            det: self.det.tensor(&other.det)?,
        })
    }

    /// `det(V (x) W) = det(V)^dim W * det(W)^dim V`.
    pub fn tensor(&self, other: &Self) -> Result<Self> {
        let (n, m) = (self.dimension()? as i64, other.dimension()? as i64);
        Ok(Self {
            name: format!("{}*{}", self.name, other.name),
            character: self.character.tensor(&other.character)?,
            det: self.det.pointwise_pow(m)?.tensor(&other.det.pointwise_pow(n)?)?,
        })
    }

    pub fn dual(&self) -> Self {
        Self { name: format!("{}^", self.name), character: self.character.dual(), det: self.det.dual() }
    }

    /// The 1-dimensional representation `det(self)`.
    pub fn determinant(&self) -> Self {
        Self { name: format!("det({})", self.name), character: self.det.clone(), det: self.det.clone() }
    }
}
