//! First and second Cheeger-Chern-Simons numbers, reduced xi-invariants of
//! the Dirac operator, and the invariant `Xi`.

use serde::{Deserialize, Serialize};

use crate::exactnum::{log_root_of_unity, Cyclotomic, QmodZ, Rational};
use crate::matgroup::{FiniteMatrixGroup, GroupId, H1Generator};
use crate::reps::{Character, Rep};
use crate::resolution::{t_factor, Cycle};
use crate::{Error, Result};

/// First CCS-numbers of one representation, per generator.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CcsFirst {
    pub values: Vec<(H1Generator, QmodZ)>,
}

impl CcsFirst {
    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|(_, v)| v.is_zero())
    }

    pub fn get(&self, generator: H1Generator) -> Option<&QmodZ> {
        self.values.iter().find(|(g, _)| *g == generator).map(|(_, v)| v)
    }
}

/// A reduced xi-invariant together with the unreduced defect sum.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct XiValue {
    pub value: QmodZ,
    #[serde(with = "crate::exactnum::rational_string")]
    pub defect_sum: Rational,
}

fn check_group(group: &FiniteMatrixGroup, id: GroupId) -> Result<()> {
    if group.id() != id {
        return Err(Error::GroupMismatch(group.id().to_string(), id.to_string()));
    }
    Ok(())
}

/// True iff the determinant character is trivial.
pub fn is_topologically_trivial(rep: &Rep) -> bool {
    rep.det.values().iter().all(|v| *v == Cyclotomic::one())
}

/// `1/(2 pi i) log det rho(gamma)` for `gamma` the named generator.
pub fn first_ccs(group: &FiniteMatrixGroup, rep: &Rep, generator: H1Generator) -> Result<QmodZ> {
    check_group(group, rep.group())?;
    if !group.id().evaluation_generators().contains(&generator) {
        return Err(Error::UnknownGenerator { group: group.id().to_string(), generator: generator.to_string() });
    }
    let element = group
        .element_of(generator)
        .ok_or_else(|| Error::UnknownGenerator { group: group.id().to_string(), generator: generator.to_string() })?;
    log_root_of_unity(rep.det.value(group.class_of(element)))
}

/// First CCS-numbers on every generator (`zeta`, or `b` and `c`).
pub fn first_ccs_all(group: &FiniteMatrixGroup, rep: &Rep) -> Result<CcsFirst> {
    let values = group
        .id()
        .evaluation_generators()
        .into_iter()
        .map(|g| Ok((g, first_ccs(group, rep, g)?)))
        .collect::<Result<_>>()?;
    Ok(CcsFirst { values })
}

/// Defect sum `1/|G| sum_{g != 1} (chi(g) - chi(1)) / (2 - chi_nat(g))`, reduced mod 1.
pub fn xi_tilde(group: &FiniteMatrixGroup, character: &Character) -> Result<XiValue> {
    check_group(group, character.group())?;
    let degree = character.value(0);
    let total: Cyclotomic =
        group.defect_weights()?.iter().enumerate().skip(1).map(|(k, w)| &(character.value(k) - degree) * w).sum();
    let defect_sum = total.to_rational().ok_or_else(|| Error::IrrationalDefect(total.to_string()))?;
    Ok(XiValue { value: QmodZ::new(defect_sum.clone()), defect_sum })
}

/// `xi~(rho) - xi~(det rho)`.
pub fn second_ccs(group: &FiniteMatrixGroup, rep: &Rep) -> Result<QmodZ> {
    let xi = xi_tilde(group, &rep.character)?.value;
    let xi_det = xi_tilde(group, &rep.det)?.value;
    Ok(xi - xi_det)
}

/// `t * c2(rho)` with `t = (1 + sum n_i^2) / (1 + sum n_i)`, on the `[0,1)` representative.
pub fn xi_capital(group: &FiniteMatrixGroup, rep: &Rep, cycle: &Cycle) -> Result<QmodZ> {
    let t = t_factor(cycle)?;
    Ok(second_ccs(group, rep)?.scale(&t))
}

/// `multiplier * c2(base) = c2(target)` in `Q/Z`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultipleRelation {
    pub multiplier: i64,
    pub base: String,
    pub target: String,
    pub lhs: QmodZ,
    pub rhs: QmodZ,
    pub holds: bool,
}

pub fn check_multiple_relation(
    group: &FiniteMatrixGroup,
    multiplier: i64,
    base: &str,
    target: &str,
) -> Result<MultipleRelation> {
    let lhs = second_ccs(group, &Rep::named(group, base)?)?.times(multiplier);
    let rhs = second_ccs(group, &Rep::named(group, target)?)?;
    Ok(MultipleRelation { multiplier, base: base.into(), target: target.into(), holds: lhs == rhs, lhs, rhs })
}

/// The binary tetrahedral relations `9 c2(a4) = c2(a5) = c2(a6)` and `4 c2(a4) = c2(a7)`.
pub fn thomas_relations(group: &FiniteMatrixGroup) -> Result<Vec<MultipleRelation>> {
    check_group(group, GroupId::BinaryTetrahedral)?;
    [(9, "a5"), (9, "a6"), (4, "a7")]
        .into_iter()
        .map(|(k, target)| check_multiple_relation(group, k, "a4", target))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;
    use crate::matgroup::build_group;
    use crate::reps::{catalog, find_rep};

    fn q(n: i64, d: i64) -> QmodZ {
        QmodZ::from_ratio(n, d)
    }

    fn rep(g: &FiniteMatrixGroup, name: &str) -> Rep {
        Rep::named(g, name).unwrap()
    }

    #[test]
    fn tetrahedral_examples() {
        let g = build_group(GroupId::BinaryTetrahedral).unwrap();
        assert!(is_topologically_trivial(&rep(&g, "a4")));
        assert!(!is_topologically_trivial(&rep(&g, "a2")));
        assert!(is_topologically_trivial(&Rep::trivial(&g)));
        assert_eq!(first_ccs(&g, &rep(&g, "a2"), H1Generator::C).unwrap(), q(2, 3));
        assert_eq!(xi_tilde(&g, &rep(&g, "a5").character).unwrap().value, q(17, 24));
        assert_eq!(xi_tilde(&g, &rep(&g, "a5").character).unwrap().defect_sum, rat(-31, 24));
        assert_eq!(xi_tilde(&g, &rep(&g, "a7").character).unwrap().defect_sum, rat(-44, 24));
        assert_eq!(second_ccs(&g, &rep(&g, "a5")).unwrap(), q(3, 8));
    }

    #[test]
    fn zeta_is_rejected_for_noncyclic_groups() {
        let g = build_group(GroupId::BinaryOctahedral).unwrap();
        assert!(matches!(first_ccs(&g, &rep(&g, "a2"), H1Generator::Zeta), Err(Error::UnknownGenerator { .. })));
        let c = build_group(GroupId::Cyclic(4)).unwrap();
        assert!(first_ccs(&c, &rep(&c, "a2"), H1Generator::B).is_err());
    }

    #[test]
    fn cyclic_first_ccs_is_j_minus_one_over_l() {
        for l in 2..12u32 {
            let g = build_group(GroupId::Cyclic(l)).unwrap();
            for j in 1..=l {
                let value = first_ccs(&g, &rep(&g, &format!("a{j}")), H1Generator::Zeta).unwrap();
                assert_eq!(value, q(j as i64 - 1, l as i64));
            }
        }
    }

    #[test]
    fn binary_dihedral_natural_xi() {
        for r in 2..10u32 {
            let g = build_group(GroupId::BinaryDihedral(r)).unwrap();
            assert_eq!(xi_tilde(&g, &rep(&g, "r1").character).unwrap().value, q(1, 4 * r as i64));
        }
    }

    fn sample_groups() -> Vec<FiniteMatrixGroup> {
        let mut ids = vec![GroupId::BinaryTetrahedral, GroupId::BinaryOctahedral, GroupId::BinaryIcosahedral];
        ids.extend([GroupId::BinaryDihedral(4), GroupId::BinaryDihedral(5), GroupId::Cyclic(5)]);
        ids.into_iter().map(|id| build_group(id).unwrap()).collect()
    }

    #[test]
    fn xi_is_additive_and_vanishes_on_trivial() {
        for g in sample_groups() {
            assert!(xi_tilde(&g, &Character::trivial(&g)).unwrap().value.is_zero());
            let reps: Vec<Rep> = catalog(g.id()).iter().map(|s| Rep::from_spec(&g, s).unwrap()).collect();
            for a in &reps {
                for b in &reps {
                    let sum = a.direct_sum(b).unwrap();
                    let lhs = xi_tilde(&g, &sum.character).unwrap().value;
                    let rhs = xi_tilde(&g, &a.character).unwrap().value + xi_tilde(&g, &b.character).unwrap().value;
                    assert_eq!(lhs, rhs, "{} {} {}", g.id(), a.name, b.name);
                }
            }
        }
    }

    #[test]
    fn one_dimensional_reps_have_zero_second_ccs() {
        for g in sample_groups() {
            for spec in catalog(g.id()).iter().filter(|s| s.dimension == 1) {
                assert!(second_ccs(&g, &Rep::from_spec(&g, spec).unwrap()).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn first_ccs_agrees_with_determinant_and_trivializes() {
        for g in sample_groups() {
            for spec in catalog(g.id()) {
                let rho = Rep::from_spec(&g, &spec).unwrap();
                let det = rho.determinant();
                assert_eq!(first_ccs_all(&g, &rho).unwrap(), first_ccs_all(&g, &det).unwrap());
                let fixed = rho.direct_sum(&det.dual()).unwrap();
                assert!(first_ccs_all(&g, &fixed).unwrap().is_zero(), "{} {}", g.id(), spec.name);
                if is_topologically_trivial(&rho) {
                    assert_eq!(second_ccs(&g, &rho).unwrap(), xi_tilde(&g, &rho.character).unwrap().value);
                }
            }
        }
    }

    #[test]
    fn natural_representation_is_topologically_trivial() {
        for g in sample_groups() {
            let nat = Rep::natural(&g).unwrap();
            assert!(first_ccs_all(&g, &nat).unwrap().is_zero());
            assert_eq!(second_ccs(&g, &nat).unwrap(), QmodZ::new(Rational::new(1.into(), g.order().into())));
        }
    }

    #[test]
    fn thomas_relations_hold_and_control_fails() {
        let g = build_group(GroupId::BinaryTetrahedral).unwrap();
        let relations = thomas_relations(&g).unwrap();
        assert_eq!(relations.len(), 3);
        assert!(relations.iter().all(|r| r.holds));
        assert_eq!(relations[0].lhs, q(3, 8));
        assert!(!check_multiple_relation(&g, 2, "a4", "a7").unwrap().holds);
    }

    #[test]
    fn irrational_defect_is_reported() {
        // Not a character: a lone value i on one class cannot be Galois-stable.
        let g = build_group(GroupId::BinaryTetrahedral).unwrap();
        let mut values = Character::trivial(&g).values().to_vec();
        values[1] = Cyclotomic::root_of_unity(4, 1).unwrap();
        let bogus = Character::new(g.id(), values);
        assert!(matches!(xi_tilde(&g, &bogus), Err(Error::IrrationalDefect(_))));
        assert!(find_rep(g.id(), "a2").is_ok());
    }
}
