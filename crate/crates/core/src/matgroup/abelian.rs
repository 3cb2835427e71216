use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};

use super::snf::{smith_normal_form, IntMatrix};
use super::{GroupId, H1Generator};

/// `Ab(G)` as a direct sum of cyclic groups, with the images of `b, c` (or `zeta`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbelianizationData {
    /// Invariant factors `d_1 | d_2 | ...`, all greater than 1.
    pub invariant_factors: Vec<u64>,
    /// Coordinates of each generator image in `Z/d_1 + Z/d_2 + ...`.
    pub generators: Vec<(H1Generator, Vec<u64>)>,
}

/// `other = generator^exponent` in `Ab(G)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorRelation {
    pub generator: H1Generator,
    pub other: H1Generator,
    pub exponent: i64,
}

impl fmt::Display for GeneratorRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.exponent {
            0 => write!(f, "{} = 1", self.other),
            1 => write!(f, "{} = {}", self.other, self.generator),
            e => write!(f, "{} = {}^{}", self.other, self.generator, e),
        }
    }
}

impl AbelianizationData {
    pub fn order(&self) -> u64 {
        self.invariant_factors.iter().product()
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty()
    }

    pub fn coordinates(&self, generator: H1Generator) -> Option<&[u64]> {
        self.generators.iter().find(|(g, _)| *g == generator).map(|(_, c)| c.as_slice())
    }

    /// Order of the image of `generator`.
    pub fn element_order(&self, generator: H1Generator) -> Option<u64> {
        let coords = self.coordinates(generator)?;
        Some(coords.iter().zip(&self.invariant_factors).map(|(&x, &d)| d / x.gcd(&d)).fold(1, |acc, o| acc.lcm(&o)))
    }

    /// `C_d` label string, e.g. `C_2+C_2`, `{1}` for the trivial group.
    pub fn structure(&self) -> String {
        if self.is_trivial() {
            return "{1}".into();
        }
        self.invariant_factors.iter().map(|d| format!("C_{d}")).collect::<Vec<_>>().join("+")
    }

    /// For cyclic `Ab(G)`: picks a generating image (preferring `c`) and
    /// expresses the remaining generator images as its powers.
    pub fn relations(&self) -> Vec<GeneratorRelation> {
        if self.invariant_factors.len() != 1 {
            return Vec::new();
        }
        let d = self.invariant_factors[0];
        let mut candidates: Vec<H1Generator> = self.generators.iter().map(|(g, _)| *g).collect();
        candidates.sort_by_key(|g| match g {
            H1Generator::C => 0,
            H1Generator::Zeta => 1,
            H1Generator::B => 2,
        });
        let Some(gen) = candidates.into_iter().find(|g| self.element_order(*g) == Some(d)) else {
            return Vec::new();
        };
        let x = self.coordinates(gen).expect("listed")[0];
        self.generators
            .iter()
            .filter(|(g, _)| *g != gen)
            .map(|(g, coords)| {
                let y = coords[0];
                // Solve k * x = y (mod d) with the smallest |k|, preferring k > 0.
                let k = (0..d).find(|k| (k * x) % d == y).expect("x generates");
                let signed = if 2 * k > d { k as i64 - d as i64 } else { k as i64 };
                GeneratorRelation { generator: gen, other: *g, exponent: signed }
            })
            .collect()
    }

    pub fn generating_set(&self) -> Vec<H1Generator> {
        if self.invariant_factors.len() == 1 {
            if let Some(r) = self.relations().first() {
                return vec![r.generator];
            }
        }
        self.generators.iter().map(|(g, _)| *g).collect()
    }
}

/// Abelianization from the relation matrix of `<b, c | (bc)^2 b^-q, b^q c^-r>`,
/// or `C_l` generated by `zeta` in the cyclic case.
pub fn abelianization(id: GroupId) -> AbelianizationData {
    let (relations, labels): (IntMatrix, Vec<H1Generator>) = match id.presentation() {
        None => {
            let GroupId::Cyclic(l) = id else { unreachable!("only cyclic lacks a presentation") };
            (vec![vec![BigInt::from(l)]], vec![H1Generator::Zeta])
        }
        Some((q, r)) => {
            let (q, r) = (BigInt::from(q), BigInt::from(r));
            (vec![vec![BigInt::from(2) - &q, BigInt::from(2)], vec![q, -r]], vec![H1Generator::B, H1Generator::C])
        }
    };
    let smith = smith_normal_form(&relations);
    let diag = smith.diagonal();
    // Generator e_k maps to row k of V; only coordinates with d_i > 1 survive.
    let kept: Vec<(usize, u64)> = diag
        .iter()
        .enumerate()
        .filter(|(_, d)| !d.is_one())
        .map(|(i, d)| (i, d.to_u64().expect("finite abelianization")))
        .collect();
    debug_assert!(kept.iter().all(|(_, d)| *d != 0), "abelianization is finite");
    let generators = labels
        .iter()
        .enumerate()
        .map(|(k, &label)| {
            let coords = kept
                .iter()
                .map(|&(i, d)| {
                    let c = smith.v[k][i].mod_floor(&BigInt::from(d));
                    c.to_u64().unwrap_or(0)
                })
                .collect();
            (label, coords)
        })
        .collect();
    let invariant_factors = kept.iter().map(|&(_, d)| d).collect();
    AbelianizationData { invariant_factors, generators }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(g: H1Generator, o: H1Generator, e: i64) -> GeneratorRelation {
        GeneratorRelation { generator: g, other: o, exponent: e }
    }

    #[test]
    fn tetrahedral_is_c3_with_b_inverse_of_c() {
        let ab = abelianization(GroupId::BinaryTetrahedral);
        assert_eq!(ab.invariant_factors, vec![3]);
        assert_eq!(ab.relations(), vec![rel(H1Generator::C, H1Generator::B, -1)]);
    }

    #[test]
    fn icosahedral_is_perfect() {
        let ab = abelianization(GroupId::BinaryIcosahedral);
        assert!(ab.is_trivial());
        assert_eq!(ab.order(), 1);
        assert_eq!(ab.structure(), "{1}");
    }

    #[test]
    fn octahedral_has_trivial_b() {
        let ab = abelianization(GroupId::BinaryOctahedral);
        assert_eq!(ab.invariant_factors, vec![2]);
        assert_eq!(ab.relations(), vec![rel(H1Generator::C, H1Generator::B, 0)]);
        assert_eq!(ab.relations()[0].to_string(), "b = 1");
    }

    #[test]
    fn binary_dihedral_by_parity() {
        let even = abelianization(GroupId::BinaryDihedral(6));
        assert_eq!(even.invariant_factors, vec![2, 2]);
        assert_eq!(even.element_order(H1Generator::B), Some(2));
        assert_eq!(even.element_order(H1Generator::C), Some(2));
        assert_ne!(even.coordinates(H1Generator::B), even.coordinates(H1Generator::C));

        let odd = abelianization(GroupId::BinaryDihedral(7));
        assert_eq!(odd.invariant_factors, vec![4]);
        assert_eq!(odd.relations(), vec![rel(H1Generator::B, H1Generator::C, 2)]);
    }

    #[test]
    fn cyclic_generated_by_zeta() {
        let ab = abelianization(GroupId::Cyclic(9));
        assert_eq!(ab.invariant_factors, vec![9]);
        assert_eq!(ab.element_order(H1Generator::Zeta), Some(9));
    }
}
