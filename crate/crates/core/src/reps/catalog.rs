//! Irreducible representations of each family, transcribed as images of the
//! presentation generators.

use super::{icosahedral, RepSource, RepSpec};
use crate::exactnum::{rat, Cyclotomic};
use crate::matgroup::{CycMatrix, GroupId};

fn z(n: u32, k: i64) -> Cyclotomic {
    Cyclotomic::root_of_unity(n, k).expect("positive conductor")
}

fn c(v: i64) -> Cyclotomic {
    Cyclotomic::from_int(v)
}

fn mat(rows: Vec<Vec<Cyclotomic>>) -> CycMatrix {
    CycMatrix::from_rows(rows).expect("square transcription")
}

fn scalar(v: Cyclotomic) -> CycMatrix {
    CycMatrix::scalar(v)
}

fn spec(group: GroupId, name: String, images: Vec<CycMatrix>, natural: bool) -> RepSpec {
    RepSpec { group, dimension: images[0].dim(), name, source: RepSource::Generators(images), natural }
}

/// All irreducible representations of `id`, in the order `a1, a2, ...` then `r1, r2, ...`.
pub fn catalog(id: GroupId) -> Vec<RepSpec> {
    match id {
        GroupId::Cyclic(l) => {
            (1..=l).map(|j| spec(id, format!("a{j}"), vec![scalar(z(l, j as i64 - 1))], false)).collect()
        }
        GroupId::BinaryDihedral(r) => binary_dihedral(id, r),
        GroupId::BinaryTetrahedral => binary_tetrahedral(id),
        GroupId::BinaryOctahedral => binary_octahedral(id),
        GroupId::BinaryIcosahedral => icosahedral::DIMENSIONS
            .iter()
            .enumerate()
            .map(|(row, &dimension)| RepSpec {
                group: id,
                name: format!("a{}", row + 1),
                dimension,
                source: RepSource::CharacterRow(row),
                natural: row == icosahedral::NATURAL_ROW,
            })
            .collect(),
    }
}

fn binary_dihedral(id: GroupId, r: u32) -> Vec<RepSpec> {
    let i = z(4, 1);
    let one_dim: [(Cyclotomic, Cyclotomic); 4] = if r.is_multiple_of(2) {
        [(c(1), c(1)), (c(-1), c(1)), (c(1), c(-1)), (c(-1), c(-1))]
    } else {
        [(c(1), c(1)), (c(-1), c(1)), (i.clone(), c(-1)), (-i, c(-1))]
    };
    let mut reps: Vec<RepSpec> = one_dim
        .into_iter()
        .enumerate()
        .map(|(k, (b, cc))| spec(id, format!("a{}", k + 1), vec![scalar(b), scalar(cc)], false))
        .collect();
    for t in 1..r as i64 {
        let sign = if t % 2 == 0 { 1 } else { -1 };
        let b = mat(vec![vec![c(0), c(1)], vec![c(sign), c(0)]]);
        let cc = CycMatrix::diagonal(vec![z(2 * r, t), z(2 * r, -t)]);
        reps.push(spec(id, format!("r{t}"), vec![b, cc], t == 1));
    }
    reps
}

fn binary_tetrahedral(id: GroupId) -> Vec<RepSpec> {
    let w = z(3, 1);
    let w2 = z(3, 2);
    let table: Vec<(CycMatrix, CycMatrix)> = vec![
        (scalar(c(1)), scalar(c(1))),
        (scalar(w.clone()), scalar(w2.clone())),
        (scalar(w2.clone()), scalar(w.clone())),
        (mat(vec![vec![c(0), c(1)], vec![c(-1), c(1)]]), mat(vec![vec![c(0), -&w], vec![w2.clone(), c(1)]])),
        (mat(vec![vec![-&w2, w.clone()], vec![c(0), c(-1)]]), mat(vec![vec![c(-1), c(0)], vec![w2.clone(), -&w]])),
        (mat(vec![vec![-&w, -&w2], vec![c(0), c(-1)]]), mat(vec![vec![c(0), c(1)], vec![-&w2, w.clone()]])),
        (
            mat(vec![vec![c(-1), c(-1), c(-1)], vec![c(1), c(0), c(0)], vec![c(0), c(0), c(1)]]),
            mat(vec![vec![c(-1), c(-1), c(-1)], vec![c(0), c(1), c(0)], vec![c(1), c(0), c(0)]]),
        ),
    ];
    table.into_iter().enumerate().map(|(k, (b, cc))| spec(id, format!("a{}", k + 1), vec![b, cc], k == 3)).collect()
}

fn binary_octahedral(id: GroupId) -> Vec<RepSpec> {
    let i = z(4, 1);
    let s2 = z(8, 1) + z(8, 7);
    let s2i = &s2 * &i;
    let half = Cyclotomic::from_rational(rat(1, 2));
    let w = z(3, 1);
    let w2 = z(3, 2);
    let table: Vec<(CycMatrix, CycMatrix)> = vec![
        (scalar(c(1)), scalar(c(1))),
        (scalar(c(1)), scalar(c(-1))),
        (mat(vec![vec![c(0), c(1)], vec![c(-1), c(-1)]]), mat(vec![vec![c(-1), c(-1)], vec![c(0), c(1)]])),
        (
            mat(vec![vec![c(1) + &s2i, -&i], vec![-&i, c(1) - &s2i]]).scale(&half),
            mat(vec![vec![-&s2 - &i, c(-1)], vec![c(1), -&s2 + &i]]).scale(&half),
        ),
        (mat(vec![vec![c(0), -&i], vec![-&i, c(1)]]), mat(vec![vec![i.clone(), -&s2i], vec![c(-1), &s2 - &i]])),
        (
            mat(vec![vec![c(1), c(0), c(-1)], vec![c(0), c(0), c(1)], vec![c(0), c(-1), c(-1)]]),
            mat(vec![vec![c(0), c(1), c(1)], vec![c(-1), c(-1), c(0)], vec![c(0), c(1), c(0)]]),
        ),
        (
            mat(vec![vec![c(-1), c(0), c(-1)], vec![c(1), c(1), c(0)], vec![c(1), c(0), c(0)]]),
            mat(vec![vec![c(0), c(0), c(-1)], vec![c(1), c(0), c(1)], vec![c(0), c(-1), c(1)]]),
        ),
        (
            mat(vec![
                vec![-&w, c(0), c(0), c(0)],
                vec![c(-1), c(-1), c(0), c(0)],
                vec![c(0), c(0), c(-1), c(-1)],
                vec![c(0), c(0), c(0), -&w2],
            ]),
            mat(vec![
                vec![c(0), c(0), w2.clone(), w2.clone()],
                vec![c(0), c(0), c(0), w.clone()],
                vec![c(0), -&w, c(0), c(0)],
                vec![w2.clone(), c(-1), c(0), c(0)],
            ]),
        ),
    ];
    table.into_iter().enumerate().map(|(k, (b, cc))| spec(id, format!("a{}", k + 1), vec![b, cc], k == 3)).collect()
}
