use std::cmp::Ordering;
use std::collections::{HashMap, VecDeque};
use std::sync::OnceLock;

use super::matrix::{CycMatrix, MatrixKey};
use super::{GroupId, H1Generator};
use crate::exactnum::{rat, Cyclotomic, Rational};
use crate::{Error, Result};

const CLOSURE_BOUND: usize = 1000;

/// One conjugacy class of a [`FiniteMatrixGroup`].
#[derive(Clone, Debug)]
pub struct ConjugacyClass {
    /// Element index of the member with the shortest generator word.
    pub representative: usize,
    pub members: Vec<usize>,
    pub size: usize,
    pub order: u64,
    /// Trace of the natural 2x2 image.
    pub natural_character: Cyclotomic,
}

/// A finite subgroup of `SL(2, C)` stored element by element.
///
/// Every element remembers how it was first reached during the breadth-first
/// closure (parent element and generator slot), so any representation given
/// by generator images can be evaluated along that word.
#[derive(Clone, Debug)]
pub struct FiniteMatrixGroup {
    id: GroupId,
    conductor: u32,
    elements: Vec<CycMatrix>,
    parents: Vec<Option<(usize, usize)>>,
    /// Natural images of the primary generators (`b, c` or `zeta`).
    generators: Vec<CycMatrix>,
    named: Vec<(H1Generator, usize)>,
    classes: Vec<ConjugacyClass>,
    class_of: Vec<usize>,
    lookup: HashMap<MatrixKey, usize>,
    defect_weights: OnceLock<Result<Vec<Cyclotomic>>>,
}

impl FiniteMatrixGroup {
    pub fn id(&self) -> GroupId {
        self.id
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn elements(&self) -> &[CycMatrix] {
        &self.elements
    }

    pub fn identity_index(&self) -> usize {
        0
    }

    /// Natural images of the primary generators: `[b, c]`, or `[zeta]` for cyclic groups.
    pub fn generators(&self) -> &[CycMatrix] {
        &self.generators
    }

    pub fn classes(&self) -> &[ConjugacyClass] {
        &self.classes
    }

    pub fn class_of(&self, element: usize) -> usize {
        self.class_of[element]
    }

    /// Element index of a named generator, if the group has one.
    pub fn element_of(&self, generator: H1Generator) -> Option<usize> {
        self.named.iter().find(|(g, _)| *g == generator).map(|(_, i)| *i)
    }

    pub fn index_of(&self, m: &CycMatrix) -> Option<usize> {
        self.lookup.get(&m.key(self.conductor).ok()?).copied()
    }

    /// The element this one was first reached from, and the generator slot used.
    pub fn parent(&self, element: usize) -> Option<(usize, usize)> {
        self.parents.get(element).copied().flatten()
    }

    /// Generator word of an element as slot indices: slot `k < n` is the `k`-th
    /// primary generator, slot `n + k` its inverse.
    pub fn word(&self, element: usize) -> Result<Vec<usize>> {
        let mut word = Vec::new();
        let mut at = element;
        while at != 0 {
            let (parent, slot) = self.parents.get(at).copied().flatten().ok_or(Error::MissingWord(element))?;
            word.push(slot);
            at = parent;
        }
        word.reverse();
        Ok(word)
    }

    /// Class index of `g^k` for `g` in class `class`.
    pub fn power_class(&self, class: usize, k: u64) -> Result<usize> {
        let rep = &self.elements[self.classes[class].representative];
        let idx = self.index_of(&rep.pow(k)).ok_or_else(|| Error::DataIntegrity("power left the group".into()))?;
        Ok(self.class_of[idx])
    }

    /// `|C| / (|G| (2 - chi_nat(C)))` per class, with 0 for the identity class.
    pub fn defect_weights(&self) -> Result<&[Cyclotomic]> {
        let weights = self.defect_weights.get_or_init(|| {
            let two = Cyclotomic::from_int(2);
            let order = Rational::from_integer(self.order().into());
            self.classes
                .iter()
                .enumerate()
                .map(|(k, class)| {
                    if k == 0 {
                        return Ok(Cyclotomic::zero());
                    }
                    let denominator = (&two - &class.natural_character).scale(&order);
                    if denominator.is_zero() {
                        return Err(Error::SingularDefect);
                    }
                    Ok(denominator.inv()?.scale(&Rational::from_integer(class.size.into())))
                })
                .collect()
        });
        weights.as_ref().map(Vec::as_slice).map_err(Clone::clone)
    }

    pub fn natural_character_values(&self) -> Vec<Cyclotomic> {
        self.classes.iter().map(|c| c.natural_character.clone()).collect()
    }
}

fn z(n: u32, k: i64) -> Cyclotomic {
    Cyclotomic::root_of_unity(n, k).expect("positive conductor")
}

fn q(n: i64, d: i64) -> Cyclotomic {
    Cyclotomic::from_rational(rat(n, d))
}

fn m2(a: Cyclotomic, b: Cyclotomic, c: Cyclotomic, d: Cyclotomic) -> CycMatrix {
    CycMatrix::from_rows(vec![vec![a, b], vec![c, d]]).expect("2x2")
}

/// `a + b i + c j + d k` as an element of `SU(2)`.
fn quaternion(a: Cyclotomic, b: Cyclotomic, c: Cyclotomic, d: Cyclotomic) -> CycMatrix {
    let i = z(4, 1);
    m2(&a + &(&b * &i), &c + &(&d * &i), -&c + &(&d * &i), &a - &(&b * &i))
}

/// The golden ratio `-(zeta_5^2 + zeta_5^3)`.
pub(crate) fn golden_ratio() -> Cyclotomic {
    -(z(5, 2) + z(5, 3))
}

/// Natural 2x2 images of the primary generators.
fn natural_generators(id: GroupId) -> Vec<CycMatrix> {
    let zero = || Cyclotomic::zero();
    let one = || Cyclotomic::one();
    match id {
        GroupId::Cyclic(l) => vec![CycMatrix::diagonal(vec![z(l, 1), z(l, -1)])],
        GroupId::BinaryDihedral(r) => {
            vec![m2(zero(), one(), -one(), zero()), CycMatrix::diagonal(vec![z(2 * r, 1), z(2 * r, -1)])]
        }
        GroupId::BinaryTetrahedral => vec![m2(zero(), one(), -one(), one()), m2(zero(), -z(3, 1), z(3, 2), one())],
        GroupId::BinaryOctahedral => {
            let i = z(8, 2);
            let sqrt2 = z(8, 1) + z(8, 7);
            let half = q(1, 2);
            let sqrt2_i = &sqrt2 * &i;
            vec![
                m2(one() + sqrt2_i.clone(), -&i, -&i, one() - sqrt2_i).scale(&half),
                m2(-&sqrt2 - &i, -one(), one(), -&sqrt2 + &i).scale(&half),
            ]
        }
        GroupId::BinaryIcosahedral => {
            let half = q(1, 2);
            let phi = golden_ratio();
            let phi_inv = &phi - &one();
            vec![
                quaternion(half.clone(), half.clone(), half.clone(), half.clone()),
                quaternion(&phi * &half, zero(), half.clone(), &phi_inv * &half),
            ]
        }
    }
}

fn inverse_2x2_unimodular(m: &CycMatrix) -> CycMatrix {
    m2(m.get(1, 1).clone(), -m.get(0, 1), -m.get(1, 0), m.get(0, 0).clone())
}

/// Closes the natural generators of `id` into a finite matrix group.
pub fn build_group(id: GroupId) -> Result<FiniteMatrixGroup> {
    id.validate()?;
    let conductor = id.ambient_conductor();
    let generators: Vec<CycMatrix> =
        natural_generators(id).iter().map(|g| g.embed(conductor)).collect::<Result<_>>()?;
    let mut slots = generators.clone();
    slots.extend(generators.iter().map(inverse_2x2_unimodular));

    let bound = CLOSURE_BOUND.max(id.order() as usize);
    let identity = CycMatrix::identity(2).embed(conductor)?;
    let mut elements = vec![identity.clone()];
    let mut parents = vec![None];
    let mut lookup = HashMap::from([(identity.key(conductor)?, 0usize)]);
    let mut queue = VecDeque::from([0usize]);
    while let Some(at) = queue.pop_front() {
        for (slot, g) in slots.iter().enumerate() {
            let next = &elements[at] * g;
            let key = next.key(conductor)?;
            if lookup.contains_key(&key) {
                continue;
            }
            if elements.len() >= bound {
                return Err(Error::ClosureBound(bound));
            }
            lookup.insert(key, elements.len());
            queue.push_back(elements.len());
            elements.push(next);
            parents.push(Some((at, slot)));
        }
    }
    if elements.len() as u64 != id.order() {
        return Err(Error::DataIntegrity(format!(
            "{} closed to {} elements, expected {}",
            id.name(),
            elements.len(),
            id.order()
        )));
    }

    let named = match id {
        GroupId::Cyclic(_) => vec![(H1Generator::Zeta, lookup[&slots[0].key(conductor)?])],
        _ => vec![
            (H1Generator::B, lookup[&slots[0].key(conductor)?]),
            (H1Generator::C, lookup[&slots[1].key(conductor)?]),
        ],
    };

    let mut group = FiniteMatrixGroup {
        id,
        conductor,
        elements,
        parents,
        generators,
        named,
        classes: Vec::new(),
        class_of: Vec::new(),
        lookup,
        defect_weights: OnceLock::new(),
    };
    compute_classes(&mut group, &slots)?;
    Ok(group)
}

fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

fn compute_classes(group: &mut FiniteMatrixGroup, slots: &[CycMatrix]) -> Result<()> {
    let n = group.elements.len();
    let half = slots.len() / 2;
    let (gens, invs) = slots.split_at(half);
    let mut class_of = vec![usize::MAX; n];
    let mut raw: Vec<Vec<usize>> = Vec::new();
    for start in 0..n {
        if class_of[start] != usize::MAX {
            continue;
        }
        let label = raw.len();
        class_of[start] = label;
        let mut members = vec![start];
        let mut frontier = vec![start];
        while let Some(x) = frontier.pop() {
            for (g, g_inv) in gens.iter().zip(invs) {
                let conj = &(g * &group.elements[x]) * g_inv;
                let idx =
                    group.index_of(&conj).ok_or_else(|| Error::DataIntegrity("conjugate left the group".into()))?;
                if class_of[idx] == usize::MAX {
                    class_of[idx] = label;
                    members.push(idx);
                    frontier.push(idx);
                }
            }
        }
        members.sort_unstable();
        raw.push(members);
    }

    let divs = divisors(n as u64);
    let mut classes: Vec<ConjugacyClass> = raw
        .into_iter()
        .map(|members| {
            let representative = members[0];
            let g = &group.elements[representative];
            let order =
                divs.iter().copied().find(|&d| g.pow(d).is_identity()).expect("element order divides the group order");
            ConjugacyClass { representative, size: members.len(), members, order, natural_character: g.trace() }
        })
        .collect();

    let conductor = group.conductor;
    let key_of = |c: &ConjugacyClass| -> Vec<Vec<(u32, Rational)>> {
        group.elements[c.representative].key(conductor).expect("group conductor")
    };
    classes
        .sort_by(|a, b| a.order.cmp(&b.order).then(a.size.cmp(&b.size)).then_with(|| cmp_keys(&key_of(a), &key_of(b))));
    for (label, class) in classes.iter().enumerate() {
        for &m in &class.members {
            class_of[m] = label;
        }
    }
    group.classes = classes;
    group.class_of = class_of;
    Ok(())
}

fn cmp_keys(a: &MatrixKey, b: &MatrixKey) -> Ordering {
    a.cmp(b)
}

/// Checks `(bc)^2 = b^q = c^r = -I` on the natural generators.
pub fn check_presentation(group: &FiniteMatrixGroup) -> bool {
    let Some((q, r)) = group.id().presentation() else {
        return false;
    };
    let [b, c] = group.generators() else {
        return false;
    };
    let minus_one = CycMatrix::identity(2).neg();
    let bc = b * c;
    let central = bc.pow(2);
    central == b.pow(q as u64) && central == c.pow(r as u64) && central == minus_one
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quaternion_group_has_five_classes() {
        let g = build_group(GroupId::BinaryDihedral(2)).unwrap();
        assert_eq!(g.order(), 8);
        assert_eq!(g.classes().len(), 5);
        let sizes: Vec<usize> = g.classes().iter().map(|c| c.size).collect();
        assert_eq!(sizes, vec![1, 1, 2, 2, 2]);
    }

    #[test]
    fn cyclic_group_classes_are_singletons() {
        let g = build_group(GroupId::Cyclic(5)).unwrap();
        assert_eq!(g.order(), 5);
        assert_eq!(g.classes().len(), 5);
        assert!(g.classes().iter().all(|c| c.size == 1));
    }

    #[test]
    fn binary_polyhedral_orders_and_presentations() {
        for (id, order, classes) in [
            (GroupId::BinaryTetrahedral, 24, 7),
            (GroupId::BinaryOctahedral, 48, 8),
            (GroupId::BinaryIcosahedral, 120, 9),
            (GroupId::BinaryDihedral(4), 16, 7),
        ] {
            let g = build_group(id).unwrap();
            assert_eq!(g.order(), order, "{id}");
            assert_eq!(g.classes().len(), classes, "{id}");
            assert!(check_presentation(&g), "{id}");
        }
    }

    #[test]
    fn words_reproduce_elements() {
        let g = build_group(GroupId::BinaryTetrahedral).unwrap();
        let mut slots = g.generators().to_vec();
        slots.extend(g.generators().iter().map(inverse_2x2_unimodular));
        for (i, e) in g.elements().iter().enumerate() {
            let w = g.word(i).unwrap();
            let m = w.iter().fold(CycMatrix::identity(2), |acc, &s| &acc * &slots[s]);
            assert_eq!(&m, e);
        }
    }

    #[test]
    fn identity_class_first_and_natural_character_faithful() {
        let g = build_group(GroupId::BinaryOctahedral).unwrap();
        assert_eq!(g.classes()[0].members, vec![0]);
        let two = Cyclotomic::from_int(2);
        let twos = g.classes().iter().filter(|c| c.natural_character == two).count();
        assert_eq!(twos, 1);
        let minus_two = g.classes().iter().find(|c| c.natural_character == Cyclotomic::from_int(-2)).unwrap();
        assert_eq!((minus_two.order, minus_two.size), (2, 1));
    }

    #[test]
    fn all_elements_have_determinant_one() {
        for id in [GroupId::BinaryIcosahedral, GroupId::Cyclic(7), GroupId::BinaryDihedral(5)] {
            let g = build_group(id).unwrap();
            assert!(g.elements().iter().all(|e| e.det().unwrap() == Cyclotomic::one()));
        }
    }
}
