use std::fmt;

use crate::exactnum::{int, Cyclotomic, Rational};
use crate::matgroup::{FiniteMatrixGroup, GroupId};
use crate::{Error, Result};

/// A class function, one value per conjugacy class of the built group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    group: GroupId,
    values: Vec<Cyclotomic>,
}

impl Character {
    pub fn new(group: GroupId, values: Vec<Cyclotomic>) -> Self {
        Self { group, values }
    }

    pub fn trivial(group: &FiniteMatrixGroup) -> Self {
        Self::new(group.id(), vec![Cyclotomic::one(); group.classes().len()])
    }

    /// Trace of the defining embedding into `SU(2)`.
    pub fn natural(group: &FiniteMatrixGroup) -> Self {
        Self::new(group.id(), group.natural_character_values())
    }

    pub fn group(&self) -> GroupId {
        self.group
    }

    pub fn values(&self) -> &[Cyclotomic] {
        &self.values
    }

    pub fn value(&self, class: usize) -> &Cyclotomic {
        &self.values[class]
    }

    /// Value at the identity (class 0).
    pub fn degree(&self) -> Result<usize> {
        let d = self.values[0]
            .to_rational()
            .filter(|q| q.is_integer() && *q >= int(0))
            .ok_or_else(|| Error::DataIntegrity(format!("non-integral degree {}", self.values[0])))?;
        usize::try_from(d.to_integer()).map_err(|e| Error::DataIntegrity(e.to_string()))
    }

    fn same_group(&self, other: &Self) -> Result<()> {
        if self.group != other.group || self.values.len() != other.values.len() {
            return Err(Error::GroupMismatch(self.group.to_string(), other.group.to_string()));
        }
        Ok(())
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&Cyclotomic, &Cyclotomic) -> Cyclotomic) -> Result<Self> {
        self.same_group(other)?;
        let values = self.values.iter().zip(&other.values).map(|(a, b)| f(a, b)).collect();
        Ok(Self::new(self.group, values))
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn tensor(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a * b)
    }

    pub fn dual(&self) -> Self {
        Self::new(self.group, self.values.iter().map(Cyclotomic::conjugate).collect())
    }

    pub fn galois(&self, k: i64) -> Self {
        Self::new(self.group, self.values.iter().map(|v| v.galois(k)).collect())
    }

    /// `chi^k` pointwise, for `k` of either sign (values must be units).
    pub fn pointwise_pow(&self, k: i64) -> Result<Self> {
        let values = self.values.iter().map(|v| v.pow(k)).collect::<Result<_>>()?;
        Ok(Self::new(self.group, values))
    }

    /// `<self, other> = 1/|G| sum_g self(g) conj(other(g))`.
    pub fn inner_product(&self, other: &Self, group: &FiniteMatrixGroup) -> Result<Cyclotomic> {
        self.same_group(other)?;
        if self.group != group.id() {
            return Err(Error::GroupMismatch(self.group.to_string(), group.id().to_string()));
        }
        let sum: Cyclotomic = group
            .classes()
            .iter()
            .zip(self.values.iter().zip(&other.values))
            .map(|(class, (a, b))| (a * &b.conjugate()).scale(&int(class.size as i64)))
            .sum();
        Ok(sum.scale(&Rational::new(1.into(), group.order().into())))
    }

    pub fn is_irreducible(&self, group: &FiniteMatrixGroup) -> Result<bool> {
        Ok(self.inner_product(self, group)? == Cyclotomic::one())
    }

    /// Determinant character recovered from power maps by Newton's identities:
    /// `k e_k = sum_{i=1..k} (-1)^(i-1) e_(k-i) chi(g^i)`, `det = e_n`.
    pub fn determinant(&self, group: &FiniteMatrixGroup) -> Result<Self> {
        let n = self.degree()?;
        let mut values = Vec::with_capacity(self.values.len());
        for class in 0..group.classes().len() {
            let powers = (1..=n as u64)
                .map(|i| Ok(self.values[group.power_class(class, i)?].clone()))
                .collect::<Result<Vec<_>>>()?;
            let mut e = vec![Cyclotomic::one()];
            for k in 1..=n {
                let mut acc = Cyclotomic::zero();
                for i in 1..=k {
                    let term = &e[k - i] * &powers[i - 1];
                    acc = if i % 2 == 1 { acc + term } else { acc - term };
                }
                e.push(acc.scale(&Rational::new(1.into(), (k as i64).into())));
            }
            values.push(e.pop().expect("e_0 present"));
        }
        Ok(Self::new(self.group, values))
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}
