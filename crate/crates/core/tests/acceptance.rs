//! Acceptance checks against the published tables. Every comparison is exact.
//!
//! Runs as a plain binary (`harness = false`) so that each criterion prints
//! exactly one PASS/FAIL line.

use std::time::Instant;

use ccs_core::exactnum::{rat, Rational};
use ccs_core::invariants::{
    check_multiple_relation, first_ccs, first_ccs_all, second_ccs, thomas_relations, xi_capital, xi_tilde,
};
use ccs_core::matgroup::{abelianization, check_presentation, GeneratorRelation};
use ccs_core::reps::{catalog, verify_character_table};
use ccs_core::resolution::{ade_graph, fundamental_cycle, t_factor};
use ccs_core::spectrum::{
    compare_spectra, negative_control_bd_odd, recover_spectrum, steenbrink_reference, topological_spectrum,
    SpecialityMask, SpectrumMultiset,
};
use ccs_core::{build_group, Character, FiniteMatrixGroup, GroupId, H1Generator, QmodZ, Rep};

const MAX_PARAM: u32 = 20;

type Failures = Vec<String>;

fn q(n: i64, d: i64) -> QmodZ {
    QmodZ::from_ratio(n, d)
}

fn check<T: PartialEq + std::fmt::Debug>(failures: &mut Failures, what: impl FnOnce() -> String, got: T, want: T) {
    if got != want {
        failures.push(format!("{}: got {got:?}, expected {want:?}", what()));
    }
}

fn group(id: GroupId) -> FiniteMatrixGroup {
    build_group(id).unwrap_or_else(|e| panic!("building {id}: {e}"))
}

fn rep(g: &FiniteMatrixGroup, name: &str) -> Rep {
    Rep::named(g, name).unwrap_or_else(|e| panic!("{} {name}: {e}", g.id()))
}

fn cyclic() -> impl Iterator<Item = GroupId> {
    (2..=MAX_PARAM).map(GroupId::Cyclic)
}

fn dihedral() -> impl Iterator<Item = GroupId> {
    (2..=MAX_PARAM).map(GroupId::BinaryDihedral)
}

fn exceptional() -> impl Iterator<Item = GroupId> {
    [GroupId::BinaryTetrahedral, GroupId::BinaryOctahedral, GroupId::BinaryIcosahedral].into_iter()
}

fn all_groups() -> impl Iterator<Item = GroupId> {
    cyclic().chain(dihedral()).chain(exceptional())
}

fn group_orders() -> Failures {
    let mut f = Failures::new();
    for id in all_groups() {
        let g = group(id);
        let want = match id {
            GroupId::Cyclic(l) => l as usize,
            GroupId::BinaryDihedral(r) => 4 * r as usize,
            GroupId::BinaryTetrahedral => 24,
            GroupId::BinaryOctahedral => 48,
            GroupId::BinaryIcosahedral => 120,
        };
        check(&mut f, || format!("|{id}|"), g.order(), want);
        if !id.is_cyclic() && !check_presentation(&g) {
            f.push(format!("{id}: presentation fails"));
        }
    }
    f
}

fn abelianizations() -> Failures {
    let mut f = Failures::new();
    let relation = |generator, other, exponent| GeneratorRelation { generator, other, exponent };
    for id in all_groups() {
        let ab = abelianization(id);
        match id {
            GroupId::Cyclic(l) => {
                check(&mut f, || format!("{id} factors"), ab.invariant_factors.clone(), vec![l as u64]);
                check(&mut f, || format!("{id} ord zeta"), ab.element_order(H1Generator::Zeta), Some(l as u64));
            }
            GroupId::BinaryDihedral(r) if r % 2 == 0 => {
                check(&mut f, || format!("{id} factors"), ab.invariant_factors.clone(), vec![2, 2]);
                // b and c generate: distinct elements of order 2 in C2 + C2.
                check(&mut f, || format!("{id} ord b"), ab.element_order(H1Generator::B), Some(2));
                check(&mut f, || format!("{id} ord c"), ab.element_order(H1Generator::C), Some(2));
                if ab.coordinates(H1Generator::B) == ab.coordinates(H1Generator::C) {
                    f.push(format!("{id}: b and c coincide"));
                }
            }
            GroupId::BinaryDihedral(_) => {
                check(&mut f, || format!("{id} factors"), ab.invariant_factors.clone(), vec![4]);
                check(
                    &mut f,
                    || format!("{id} relations"),
                    ab.relations(),
                    vec![relation(H1Generator::B, H1Generator::C, 2)],
                );
            }
            GroupId::BinaryTetrahedral => {
                check(&mut f, || "BT factors".into(), ab.invariant_factors.clone(), vec![3]);
                check(
                    &mut f,
                    || "BT relations".into(),
                    ab.relations(),
                    vec![relation(H1Generator::C, H1Generator::B, -1)],
                );
            }
            GroupId::BinaryOctahedral => {
                check(&mut f, || "BO factors".into(), ab.invariant_factors.clone(), vec![2]);
                check(
                    &mut f,
                    || "BO relations".into(),
                    ab.relations(),
                    vec![relation(H1Generator::C, H1Generator::B, 0)],
                );
            }
            GroupId::BinaryIcosahedral => {
                check(&mut f, || "BI trivial".into(), ab.is_trivial(), true);
            }
        }
    }
    f
}

fn first_ccs_table() -> Failures {
    let mut f = Failures::new();
    let row = |f: &mut Failures, g: &FiniteMatrixGroup, gen: H1Generator, want: &[(&str, QmodZ)]| {
        for (name, value) in want {
            let got = first_ccs(g, &rep(g, name), gen).unwrap();
            check(f, || format!("{} {name} on {gen}", g.id()), got, value.clone());
        }
    };
    for id in cyclic() {
        let g = group(id);
        let l = g.order() as i64;
        let want: Vec<(String, QmodZ)> = (1..=l).map(|j| (format!("a{j}"), q(j - 1, l))).collect();
        let want: Vec<(&str, QmodZ)> = want.iter().map(|(n, v)| (n.as_str(), v.clone())).collect();
        row(&mut f, &g, H1Generator::Zeta, &want);
    }
    for id in dihedral() {
        let GroupId::BinaryDihedral(r) = id else { unreachable!() };
        let g = group(id);
        let (b, c) = if r % 2 == 0 {
            ([q(0, 1), q(1, 2), q(0, 1), q(1, 2)], [q(0, 1), q(0, 1), q(1, 2), q(1, 2)])
        } else {
            ([q(0, 1), q(1, 2), q(1, 4), q(3, 4)], [q(0, 1), q(0, 1), q(1, 2), q(1, 2)])
        };
        for (k, (vb, vc)) in b.into_iter().zip(c).enumerate() {
            let name = format!("a{}", k + 1);
            row(&mut f, &g, H1Generator::B, &[(&name, vb)]);
            row(&mut f, &g, H1Generator::C, &[(&name, vc)]);
        }
        for t in 1..r as i64 {
            let name = format!("r{t}");
            let vb = if t % 2 == 1 { q(0, 1) } else { q(1, 2) };
            row(&mut f, &g, H1Generator::B, &[(&name, vb)]);
            row(&mut f, &g, H1Generator::C, &[(&name, q(0, 1))]);
        }
    }
    let bt = group(GroupId::BinaryTetrahedral);
    let bt_row = [q(0, 1), q(2, 3), q(1, 3), q(0, 1), q(1, 3), q(2, 3), q(0, 1)];
    let bo = group(GroupId::BinaryOctahedral);
    let bo_row = [q(0, 1), q(1, 2), q(1, 2), q(0, 1), q(0, 1), q(1, 2), q(0, 1), q(0, 1)];
    for (g, values) in [(&bt, &bt_row[..]), (&bo, &bo_row[..])] {
        for (k, v) in values.iter().enumerate() {
            row(&mut f, g, H1Generator::C, &[(&format!("a{}", k + 1), v.clone())]);
        }
    }
    let bi = group(GroupId::BinaryIcosahedral);
    for k in 1..=9 {
        let name = format!("a{k}");
        let all = first_ccs_all(&bi, &rep(&bi, &name)).unwrap();
        check(&mut f, || format!("BI {name} vanishes"), all.is_zero(), true);
    }
    f
}

fn xi_table() -> Failures {
    let mut f = Failures::new();
    let rows: [(GroupId, &[(&str, QmodZ)]); 3] = [
        (GroupId::BinaryTetrahedral, &[("a4", q(1, 24)), ("a5", q(17, 24)), ("a6", q(17, 24)), ("a7", q(1, 6))]),
        (
            GroupId::BinaryOctahedral,
            &[
                ("a3", q(7, 12)),
                ("a4", q(1, 48)),
                ("a5", q(25, 48)),
                ("a6", q(5, 6)),
                ("a7", q(1, 12)),
                ("a8", q(5, 24)),
            ],
        ),
        (
            GroupId::BinaryIcosahedral,
            &[
                ("a2", q(1, 120)),
                ("a3", q(49, 120)),
                ("a4", q(19, 30)),
                ("a5", q(1, 30)),
                ("a6", q(5, 6)),
                ("a7", q(1, 12)),
                ("a8", q(1, 6)),
                ("a9", q(7, 24)),
            ],
        ),
    ];
    for (id, values) in rows {
        let g = group(id);
        for (name, want) in values {
            let got = xi_tilde(&g, &rep(&g, name).character).unwrap().value;
            check(&mut f, || format!("xi {id} {name}"), got, want.clone());
        }
    }
    for id in dihedral() {
        let g = group(id);
        let GroupId::BinaryDihedral(r) = id else { unreachable!() };
        let got = xi_tilde(&g, &rep(&g, "r1").character).unwrap().value;
        check(&mut f, || format!("xi {id} r1"), got, q(1, 4 * r as i64));
    }
    f
}

fn second_ccs_table() -> Failures {
    let mut f = Failures::new();
    for id in cyclic() {
        let g = group(id);
        for spec in catalog(id) {
            let got = second_ccs(&g, &Rep::from_spec(&g, &spec).unwrap()).unwrap();
            check(&mut f, || format!("{id} {}", spec.name), got, q(0, 1));
        }
    }
    for id in dihedral() {
        let g = group(id);
        let GroupId::BinaryDihedral(r) = id else { unreachable!() };
        for name in ["a1", "a2", "a3", "a4"] {
            check(&mut f, || format!("{id} {name}"), second_ccs(&g, &rep(&g, name)).unwrap(), q(0, 1));
        }
        check(&mut f, || format!("{id} r1"), second_ccs(&g, &rep(&g, "r1")).unwrap(), q(1, 4 * r as i64));
    }
    let rows: [(GroupId, Vec<QmodZ>); 3] = [
        (GroupId::BinaryTetrahedral, vec![q(0, 1), q(0, 1), q(0, 1), q(1, 24), q(3, 8), q(3, 8), q(1, 6)]),
        (GroupId::BinaryOctahedral, vec![q(0, 1), q(0, 1), q(1, 3), q(1, 48), q(25, 48), q(7, 12), q(1, 12), q(5, 24)]),
        (
            GroupId::BinaryIcosahedral,
            vec![q(0, 1), q(1, 120), q(49, 120), q(19, 30), q(1, 30), q(5, 6), q(1, 12), q(1, 6), q(7, 24)],
        ),
    ];
    for (id, values) in rows {
        let g = group(id);
        for (k, want) in values.into_iter().enumerate() {
            let name = format!("a{}", k + 1);
            check(&mut f, || format!("{id} {name}"), second_ccs(&g, &rep(&g, &name)).unwrap(), want);
        }
    }
    f
}

/// Coefficients within `1..=max`, all satisfying `Z . E_j <= 0`, must dominate `fundamental`.
fn brute_force_minimal(id: GroupId, max: u64) -> Result<(), String> {
    let graph = ade_graph(id).map_err(|e| e.to_string())?;
    let adjacency = graph.adjacency().map_err(|e| e.to_string())?;
    let fundamental = fundamental_cycle(&graph).map_err(|e| e.to_string())?.coefficients;
    let n = graph.len();
    let mut z = vec![1u64; n];
    let mut dots: Vec<i64> = (0..n).map(|j| adjacency[j].len() as i64 - 2).collect();
    let mut anticanonical = 0usize;
    loop {
        if dots.iter().all(|&d| d <= 0) {
            anticanonical += 1;
            if z.iter().zip(&fundamental).any(|(a, b)| a < b) {
                return Err(format!("{id}: {z:?} is not above {fundamental:?}"));
            }
        }
        let mut k = 0;
        while k < n && z[k] == max {
            let drop = (max - 1) as i64;
            z[k] = 1;
            dots[k] += 2 * drop;
            for &m in &adjacency[k] {
                dots[m] -= drop;
            }
            k += 1;
        }
        if k == n {
            break;
        }
        z[k] += 1;
        dots[k] -= 2;
        for &m in &adjacency[k] {
            dots[m] += 1;
        }
    }
    if anticanonical == 0 {
        return Err(format!("{id}: no cycle found in the search box"));
    }
    Ok(())
}

fn fundamental_cycles() -> Failures {
    let mut f = Failures::new();
    for id in all_groups() {
        let got = fundamental_cycle(&ade_graph(id).unwrap()).unwrap().multiset();
        let mut want: Vec<u64> = match id {
            GroupId::Cyclic(l) => vec![1; l as usize - 1],
            GroupId::BinaryDihedral(r) => {
                let mut v = vec![1, 1, 1];
                v.extend(vec![2; r as usize - 1]);
                v
            }
            GroupId::BinaryTetrahedral => vec![1, 1, 2, 2, 2, 3],
            GroupId::BinaryOctahedral => vec![1, 2, 2, 2, 3, 3, 4],
            GroupId::BinaryIcosahedral => vec![2, 2, 3, 3, 4, 4, 5, 6],
        };
        want.sort_unstable();
        check(&mut f, || format!("Z_fund {id}"), got, want);
    }
    // Every ADE graph with at most 8 nodes.
    let mut small: Vec<GroupId> = (2..=9).map(GroupId::Cyclic).collect();
    small.extend((2..=6).map(GroupId::BinaryDihedral));
    small.extend(exceptional());
    for id in small {
        if let Err(e) = brute_force_minimal(id, 8) {
            f.push(e);
        }
    }
    f
}

fn t_and_xi() -> Failures {
    let mut f = Failures::new();
    let row = |f: &mut Failures, id: GroupId, t: Rational, xi: QmodZ| {
        let g = group(id);
        let cycle = fundamental_cycle(&ade_graph(id).unwrap()).unwrap();
        check(f, || format!("t {id}"), t_factor(&cycle).unwrap(), t);
        let nat = Rep::natural(&g).unwrap();
        check(f, || format!("Xi {id}"), xi_capital(&g, &nat, &cycle).unwrap(), xi);
    };
    for r in 2..=MAX_PARAM as i64 {
        row(&mut f, GroupId::BinaryDihedral(r as u32), rat(2 * r, r + 1), q(1, 2 * (r + 1)));
    }
    row(&mut f, GroupId::BinaryTetrahedral, rat(24, 12), q(1, 12));
    row(&mut f, GroupId::BinaryOctahedral, rat(48, 18), q(1, 18));
    row(&mut f, GroupId::BinaryIcosahedral, rat(120, 30), q(1, 30));
    f
}

/// The spectrum rows as printed, with the odd-`r` row continuing at `(2l+1)/(2(r+1))`.
fn printed_spectrum(id: GroupId) -> SpectrumMultiset {
    let over = |ns: Vec<i64>, d: i64| ns.into_iter().map(move |n| rat(n, d)).collect::<Vec<_>>();
    let values = match id {
        GroupId::Cyclic(l) => over((1..l as i64).collect(), l as i64),
        GroupId::BinaryDihedral(r) => {
            let r = r as i64;
            let d = 2 * (r + 1);
            if r % 2 == 0 {
                let l = r / 2;
                let mut v = over((1..=2 * l - 1).step_by(2).collect(), d);
                v.extend([rat(1, 2), rat(1, 2)]);
                v.extend(over((2 * l + 3..=2 * r + 1).step_by(2).collect(), d));
                v
            } else {
                let l = (r + 1) / 2;
                let mut v = over((1..=2 * l - 1).step_by(2).collect(), d);
                v.push(rat(1, 2));
                v.extend(over((2 * l + 1..=2 * r + 1).step_by(2).collect(), d));
                v
            }
        }
        GroupId::BinaryTetrahedral => over(vec![1, 4, 5, 7, 8, 11], 12),
        GroupId::BinaryOctahedral => over(vec![1, 5, 7, 9, 11, 13, 17], 18),
        GroupId::BinaryIcosahedral => over(vec![1, 7, 11, 13, 17, 19, 23, 29], 30),
    };
    SpectrumMultiset::from_values(id, values)
}

fn spectrum_recovery() -> Failures {
    let mut f = Failures::new();
    for id in all_groups() {
        let recovered = recover_spectrum(id).unwrap();
        let reference = steenbrink_reference(id).unwrap();
        let printed = printed_spectrum(id);
        let diff = compare_spectra(&recovered, &reference);
        if !diff.equal {
            f.push(format!("{id} recovered vs reference: {diff}"));
        }
        let diff = compare_spectra(&reference, &printed);
        if !diff.equal {
            f.push(format!("{id} reference vs printed: {diff}"));
        }
        let nodes = match id {
            GroupId::Cyclic(l) => l - 1,
            GroupId::BinaryDihedral(r) => r + 2,
            GroupId::BinaryTetrahedral => 6,
            GroupId::BinaryOctahedral => 7,
            GroupId::BinaryIcosahedral => 8,
        };
        check(&mut f, || format!("{id} count"), recovered.total(), nodes);
        if let GroupId::BinaryDihedral(r) = id {
            let want = if r % 2 == 0 { 2 } else { 1 };
            check(&mut f, || format!("{id} mult 1/2"), recovered.multiplicity(&rat(1, 2)), want);
        }
    }
    f
}

fn thomas() -> Failures {
    let mut f = Failures::new();
    let g = group(GroupId::BinaryTetrahedral);
    for relation in thomas_relations(&g).unwrap() {
        if !relation.holds {
            f.push(format!("{relation:?} fails"));
        }
    }
    let relations = thomas_relations(&g).unwrap();
    check(&mut f, || "9 c2(a4)".into(), relations[0].lhs.clone(), q(9, 24));
    check(&mut f, || "4 c2(a4)".into(), relations[2].lhs.clone(), q(4, 24));
    if check_multiple_relation(&g, 2, "a4", "a7").unwrap().holds {
        f.push("negative control 2 c2(a4) = c2(a7) holds".into());
    }
    f
}

fn properties() -> Failures {
    let mut f = Failures::new();
    for id in all_groups() {
        let g = group(id);
        if let Err(e) = verify_character_table(&g) {
            f.push(format!("{id}: {e}"));
        }
        let dims: usize = catalog(id).iter().map(|s| s.dimension * s.dimension).sum();
        check(&mut f, || format!("{id} sum dim^2"), dims, g.order());
        check(&mut f, || format!("{id} xi(trivial)"), xi_tilde(&g, &Character::trivial(&g)).unwrap().value, q(0, 1));

        let reps: Vec<Rep> = catalog(id).iter().map(|s| Rep::from_spec(&g, s).unwrap()).collect();
        let xis: Vec<QmodZ> = match reps.iter().map(|r| xi_tilde(&g, &r.character)).collect::<Result<Vec<_>, _>>() {
            Ok(xs) => xs.into_iter().map(|x| x.value).collect(),
            Err(e) => {
                f.push(format!("{id}: defect sum {e}"));
                continue;
            }
        };
        for (i, a) in reps.iter().enumerate() {
            let trivialized = a.direct_sum(&a.determinant().dual()).unwrap();
            check(
                &mut f,
                || format!("{id} c1({} + det*)", a.name),
                first_ccs_all(&g, &trivialized).unwrap().is_zero(),
                true,
            );
            for (j, b) in reps.iter().enumerate().skip(i) {
                let sum = xi_tilde(&g, &a.direct_sum(b).unwrap().character).unwrap().value;
                check(&mut f, || format!("{id} xi({} + {})", a.name, b.name), sum, &xis[i] + &xis[j]);
            }
        }
    }
    let control = negative_control_bd_odd(3).unwrap();
    check(&mut f, || "negative control values".into(), control.values, vec![q(1, 4), q(1, 2), q(3, 4)]);
    if !control.non_spectral.contains(&q(1, 4)) {
        f.push("1/4 is spectral for r = 3".into());
    }
    f
}

fn topological() -> Failures {
    let mut f = Failures::new();
    let id = GroupId::Cyclic(3);
    let all = topological_spectrum(id, &SpecialityMask::all(id)).unwrap();
    check(&mut f, || "all special".into(), all.first_classes.len(), 2);
    let single = topological_spectrum(id, &SpecialityMask { special: vec![true, false] }).unwrap();
    check(&mut f, || "one special".into(), single.first_classes.len(), 1);
    f
}

type Criterion = (&'static str, fn() -> Failures);

fn main() {
    let criteria: [Criterion; 11] = [
        ("group orders and presentations", group_orders),
        ("abelianizations", abelianizations),
        ("first CCS-numbers", first_ccs_table),
        ("xi defect sums", xi_table),
        ("second CCS-numbers", second_ccs_table),
        ("fundamental cycles and minimality", fundamental_cycles),
        ("t factor and Xi", t_and_xi),
        ("spectrum recovery", spectrum_recovery),
        ("Thomas relations", thomas),
        ("property suites", properties),
        ("topological spectrum", topological),
    ];
    let start = Instant::now();
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let failures = run();
        let status = if failures.is_empty() { "PASS" } else { "FAIL" };
        println!("criterion {:>2} {status}  {name} ({} ms)", k + 1, t.elapsed().as_millis());
        for line in failures.iter().take(20) {
            println!("    {line}");
        }
        if !failures.is_empty() {
            failed += 1;
        }
    }
    println!("{} of {} criteria passed in {} ms", criteria.len() - failed, criteria.len(), start.elapsed().as_millis());
    if failed > 0 {
        std::process::exit(1);
    }
}
