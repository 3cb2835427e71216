//! `ccs`: exact Cheeger-Chern-Simons numbers, xi-invariants, fundamental
//! cycles and spectra of the quotient singularities `C^2/G`, `G < SU(2)`.

mod docs;
mod verify;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use ccs_core::invariants::{first_ccs, is_topologically_trivial, second_ccs, xi_capital, xi_tilde};
use ccs_core::matgroup::{abelianization, check_presentation};
use ccs_core::resolution::{ade_graph, fundamental_cycle, t_factor, DualGraph};
use ccs_core::spectrum::{recover_spectrum, topological_spectrum, SpecialityMask};
use ccs_core::{build_group, catalog, Error, FiniteMatrixGroup, GroupId, H1Generator, Rep};
use clap::{Parser, Subcommand};

use docs::{
    render, Ccs1Doc, Ccs2Doc, ClassDoc, CycleDoc, Format, GroupDoc, RepDoc, RepValue, RepValues, RepsDoc, TopSpecDoc,
    ValueDoc, XiDoc, XiRow,
};

#[derive(Parser)]
#[command(name = "ccs", version, about = "Exact CCS-numbers, xi-invariants and spectra for C^2/G")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Order, presentation, abelianization and conjugacy classes.
    Group { group: GroupId },
    /// Irreducible representations and their characters.
    Reps { group: GroupId },
    /// First CCS-numbers.
    Ccs1 {
        group: GroupId,
        #[arg(long)]
        rep: Option<String>,
        #[arg(long)]
        generator: Option<H1Generator>,
    },
    /// Second CCS-numbers.
    Ccs2 {
        group: GroupId,
        #[arg(long)]
        rep: Option<String>,
    },
    /// Reduced xi-invariants of the twisted Dirac operator.
    Xi {
        group: GroupId,
        #[arg(long)]
        rep: Option<String>,
    },
    /// Fundamental cycle, t factor and Xi, for a group, an ADE type or a graph file.
    Cycle {
        /// `c:<l>`, `bd:<r>`, `bt`, `bo`, `bi`, or an ADE type such as `D_5`.
        #[arg(required_unless_present = "graph", conflicts_with = "graph")]
        spec: Option<String>,
        /// Dual graph as JSON: `{"family", "nodes": [{"id", "self_intersection"}], "edges"}`.
        #[arg(long)]
        graph: Option<PathBuf>,
    },
    /// Spectrum recovered from the CCS-numbers.
    Spectrum { group: GroupId },
    /// Topological spectrum from a speciality mask.
    Topspec {
        group: GroupId,
        /// JSON `{"special": [true, false, ...]}` over the nontrivial irreducibles in catalog order.
        #[arg(long)]
        mask: Option<PathBuf>,
    },
    /// Recompute every golden table and report mismatches.
    Verify {
        #[arg(long, default_value_t = 20, value_parser = clap::value_parser!(u32).range(2..=10_000))]
        max_l: u32,
        #[arg(long, default_value_t = 20, value_parser = clap::value_parser!(u32).range(2..=10_000))]
        max_r: u32,
    },
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Compute(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::UnknownRepresentation { .. }
            | Error::UnknownGenerator { .. }
            | Error::MaskLength { .. }
            | Error::InvalidGraph(_)
            | Error::InvalidGroup(_)
            | Error::Parse(_) => Failure::Usage(e.to_string()),
            _ => Failure::Compute(e.to_string()),
        }
    }
}

type Outcome = std::result::Result<(String, bool), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command, cli.format) {
        Ok((text, ok)) => {
            print!("{text}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Compute(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn emit<D: docs::Document>(doc: &D, format: Format) -> Outcome {
    render(doc, format).map(|text| (text, true)).map_err(Failure::Compute)
}

fn run(command: Command, format: Format) -> Outcome {
    match command {
        Command::Group { group } => emit(&group_doc(&build_group(group)?), format),
        Command::Reps { group } => emit(&reps_doc(&build_group(group)?)?, format),
        Command::Ccs1 { group, rep, generator } => {
            let g = build_group(group)?;
            let reps = select_reps(&g, rep.as_deref())?;
            if let (Some(generator), [rho]) = (generator, reps.as_slice()) {
                let value = first_ccs(&g, rho, generator)?;
                let doc = ValueDoc { value, object: rho.name.clone(), invariant: format!("ccs1({generator})") };
                return emit(&doc, format);
            }
            let generators = match generator {
                Some(generator) => vec![generator],
                None if group.h1_generators().is_empty() => group.evaluation_generators(),
                None => group.h1_generators(),
            };
            let reps = reps
                .iter()
                .map(|rho| {
                    let values =
                        generators.iter().map(|&h| Ok((h, first_ccs(&g, rho, h)?))).collect::<Result<_, Error>>()?;
                    Ok(RepValues { rep: rho.name.clone(), values })
                })
                .collect::<Result<_, Error>>()?;
            emit(&Ccs1Doc { group, generators, reps }, format)
        }
        Command::Ccs2 { group, rep } => {
            let g = build_group(group)?;
            let reps = select_reps(&g, rep.as_deref())?;
            if rep.is_some() {
                let value = second_ccs(&g, &reps[0])?;
                return emit(&ValueDoc { value, object: reps[0].name.clone(), invariant: "ccs2".into() }, format);
            }
            let values = reps
                .iter()
                .map(|rho| Ok(RepValue { rep: rho.name.clone(), value: second_ccs(&g, rho)? }))
                .collect::<Result<_, Error>>()?;
            emit(&Ccs2Doc { group, values }, format)
        }
        Command::Xi { group, rep } => {
            let g = build_group(group)?;
            let reps = select_reps(&g, rep.as_deref())?;
            if rep.is_some() {
                let value = xi_tilde(&g, &reps[0].character)?.value;
                return emit(&ValueDoc { value, object: reps[0].name.clone(), invariant: "xi".into() }, format);
            }
            let values = reps
                .iter()
                .map(|rho| {
                    let xi = xi_tilde(&g, &rho.character)?;
                    Ok(XiRow { rep: rho.name.clone(), value: xi.value, defect_sum: xi.defect_sum.to_string() })
                })
                .collect::<Result<_, Error>>()?;
            emit(&XiDoc { group, values }, format)
        }
        Command::Cycle { spec, graph } => {
            let (graph, group) = match (spec, graph) {
                (_, Some(path)) => (read_json::<DualGraph>(&path)?, None),
                (Some(spec), None) => {
                    let id = parse_cycle_spec(&spec)?;
                    (ade_graph(id)?, Some(id))
                }
                (None, None) => return Err(Failure::Usage("give a group, an ADE type or --graph".into())),
            };
            emit(&cycle_doc(&graph, group)?, format)
        }
        Command::Spectrum { group } => emit(&recover_spectrum(group)?, format),
        Command::Topspec { group, mask } => {
            let mask = match mask {
                Some(path) => read_json::<SpecialityMask>(&path)?,
                None => SpecialityMask::all(group),
            };
            let names = catalog(group).into_iter().skip(1).map(|s| s.name);
            let special = names.zip(&mask.special).filter(|(_, &s)| s).map(|(n, _)| n).collect();
            let spectrum = topological_spectrum(group, &mask)?;
            emit(&TopSpecDoc::new(spectrum, special), format)
        }
        Command::Verify { max_l, max_r } => {
            let report = verify::run(max_l, max_r)?;
            let (text, _) = emit(&report, format)?;
            Ok((text, report.pass))
        }
    }
}

fn select_reps(g: &FiniteMatrixGroup, name: Option<&str>) -> Result<Vec<Rep>, Error> {
    match name {
        Some(name) => Ok(vec![Rep::named(g, name)?]),
        None => catalog(g.id()).iter().map(|spec| Rep::from_spec(g, spec)).collect(),
    }
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

/// A group spec, or an ADE type `A_n`, `D_n`, `E_6`, `E_7`, `E_8`.
fn parse_cycle_spec(spec: &str) -> Result<GroupId, Error> {
    if let Ok(id) = spec.parse::<GroupId>() {
        return Ok(id);
    }
    let bad = || Error::Parse(format!("`{spec}` is neither a group nor an ADE type"));
    let (family, n) = spec.trim().split_once('_').ok_or_else(bad)?;
    let n: u32 = n.parse().map_err(|_| bad())?;
    match (family.to_ascii_uppercase().as_str(), n) {
        ("A", n) if n >= 1 => GroupId::cyclic(n + 1),
        ("D", n) if n >= 4 => GroupId::binary_dihedral(n - 2),
        ("E", 6) => Ok(GroupId::BinaryTetrahedral),
        ("E", 7) => Ok(GroupId::BinaryOctahedral),
        ("E", 8) => Ok(GroupId::BinaryIcosahedral),
        _ => Err(bad()),
    }
}

fn group_doc(g: &FiniteMatrixGroup) -> GroupDoc {
    let id = g.id();
    let ab = abelianization(id);
    GroupDoc {
        group: id,
        name: id.name(),
        order: g.order(),
        conductor: g.conductor(),
        presentation: id.presentation(),
        presentation_holds: id.presentation().is_some() && check_presentation(g),
        structure: ab.structure(),
        relations: ab.relations().iter().map(ToString::to_string).collect(),
        abelianization: ab,
        classes: g
            .classes()
            .iter()
            .enumerate()
            .map(|(index, c)| ClassDoc {
                index,
                order: c.order,
                size: c.size,
                natural_trace: c.natural_character.to_string(),
            })
            .collect(),
    }
}

fn reps_doc(g: &FiniteMatrixGroup) -> Result<RepsDoc, Error> {
    let reps = catalog(g.id())
        .iter()
        .map(|spec| {
            let rho = Rep::from_spec(g, spec)?;
            Ok(RepDoc {
                name: spec.name.clone(),
                dimension: spec.dimension,
                natural: spec.natural,
                topologically_trivial: is_topologically_trivial(&rho),
                character: rho.character.values().iter().map(ToString::to_string).collect(),
            })
        })
        .collect::<Result<_, Error>>()?;
    Ok(RepsDoc { group: g.id(), reps })
}

fn cycle_doc(graph: &DualGraph, group: Option<GroupId>) -> Result<CycleDoc, Error> {
    let negative_definite = graph.intersection_matrix()?.is_negative_definite();
    let cycle = fundamental_cycle(graph)?;
    let xi = match group {
        Some(id) => {
            let g = build_group(id)?;
            Some(xi_capital(&g, &Rep::natural(&g)?, &cycle)?)
        }
        None => None,
    };
    Ok(CycleDoc {
        family: graph.family.clone(),
        multiset: cycle.multiset(),
        t: t_factor(&cycle)?.to_string(),
        coefficients: cycle.coefficients,
        negative_definite,
        xi,
    })
}

#[cfg(test)]
mod tests {
    use ccs_core::spectrum::SpectrumMultiset;
    use serde::de::DeserializeOwned;

    use super::*;

    fn round_trip<D: docs::Document + DeserializeOwned + PartialEq + std::fmt::Debug>(doc: &D) {
        let text = render(doc, Format::Json).unwrap();
        assert_eq!(&serde_json::from_str::<D>(&text).unwrap(), doc, "{text}");
    }

    fn sample() -> Vec<GroupId> {
        ["c:5", "bd:4", "bd:7", "bt", "bo", "bi"].iter().map(|s| s.parse().unwrap()).collect()
    }

    #[test]
    fn documents_round_trip_through_json() {
        for id in sample() {
            let g = build_group(id).unwrap();
            round_trip(&group_doc(&g));
            round_trip(&reps_doc(&g).unwrap());
            round_trip(&cycle_doc(&ade_graph(id).unwrap(), Some(id)).unwrap());
            round_trip(&recover_spectrum(id).unwrap());
            let top = topological_spectrum(id, &SpecialityMask::all(id)).unwrap();
            round_trip(&TopSpecDoc::new(top, vec!["a2".into()]));
            let (text, ok) = run(Command::Ccs2 { group: id, rep: None }, Format::Json).unwrap();
            assert!(ok);
            round_trip(&serde_json::from_str::<Ccs2Doc>(&text).unwrap());
            let (text, _) = run(Command::Ccs1 { group: id, rep: None, generator: None }, Format::Json).unwrap();
            round_trip(&serde_json::from_str::<Ccs1Doc>(&text).unwrap());
            let (text, _) = run(Command::Xi { group: id, rep: None }, Format::Json).unwrap();
            round_trip(&serde_json::from_str::<XiDoc>(&text).unwrap());
        }
        let single: SpectrumMultiset =
            serde_json::from_str(r#"{"group":"bd:2","entries":[{"value":"1/2","multiplicity":2}]}"#).unwrap();
        round_trip(&single);
    }

    #[test]
    fn value_documents_keep_the_value() {
        let (text, _) =
            run(Command::Ccs2 { group: GroupId::BinaryTetrahedral, rep: Some("a5".into()) }, Format::Json).unwrap();
        let doc: ValueDoc = serde_json::from_str(&text).unwrap();
        assert_eq!(doc.value, ccs_core::QmodZ::from_ratio(3, 8));
    }

    #[test]
    fn verification_report_round_trips() {
        round_trip(&verify::run(3, 3).unwrap());
    }

    #[test]
    fn cycle_specs() {
        assert_eq!(parse_cycle_spec("A_4").unwrap(), GroupId::Cyclic(5));
        assert_eq!(parse_cycle_spec("D_4").unwrap(), GroupId::BinaryDihedral(2));
        assert_eq!(parse_cycle_spec("e_8").unwrap(), GroupId::BinaryIcosahedral);
        assert_eq!(parse_cycle_spec("bd:3").unwrap(), GroupId::BinaryDihedral(3));
        for bad in ["D_3", "E_9", "A_0", "B_2", "A"] {
            assert!(parse_cycle_spec(bad).is_err(), "{bad}");
        }
    }
}
