//! Output documents. Each one serializes to JSON with exact `p/q` strings,
//! flattens to `(object, invariant, value)` CSV rows, and renders as a plain
//! text table laid out like the published tables.

use std::collections::BTreeSet;

use ccs_core::matgroup::AbelianizationData;
use ccs_core::spectrum::{compare_spectra, steenbrink_reference, SpectrumMultiset, TopSpectrum};
use ccs_core::{GroupId, H1Generator, QmodZ};
use clap::ValueEnum;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

pub trait Document: Serialize {
    fn table(&self) -> String;

    fn csv_header(&self) -> Vec<&'static str> {
        vec!["object", "invariant", "value"]
    }

    fn csv_rows(&self) -> Vec<Vec<String>>;
}

pub fn render<D: Document>(doc: &D, format: Format) -> Result<String, String> {
    match format {
        Format::Table => Ok(doc.table()),
        Format::Json => serde_json::to_string(doc).map(|s| s + "\n").map_err(|e| e.to_string()),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(doc.csv_header()).map_err(|e| e.to_string())?;
            for row in doc.csv_rows() {
                w.write_record(&row).map_err(|e| e.to_string())?;
            }
            let bytes = w.into_inner().map_err(|e| e.to_string())?;
            String::from_utf8(bytes).map_err(|e| e.to_string())
        }
    }
}

/// Left-aligned columns separated by two spaces.
pub fn grid(header: &[String], rows: &[Vec<String>]) -> String {
    let cols = header.len().max(rows.iter().map(Vec::len).max().unwrap_or(0));
    let mut widths = vec![0; cols];
    for row in std::iter::once(header).chain(rows.iter().map(Vec::as_slice)) {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    for row in std::iter::once(header).chain(rows.iter().map(Vec::as_slice)) {
        let line: Vec<String> = row.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    out
}

fn strings<T: ToString>(items: impl IntoIterator<Item = T>) -> Vec<String> {
    items.into_iter().map(|x| x.to_string()).collect()
}

/// A single exact value, e.g. `{"value":"3/8"}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValueDoc {
    pub value: QmodZ,
    #[serde(skip)]
    pub object: String,
    #[serde(skip)]
    pub invariant: String,
}

impl Document for ValueDoc {
    fn table(&self) -> String {
        format!("{}\n", self.value)
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        vec![vec![self.object.clone(), self.invariant.clone(), self.value.to_string()]]
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassDoc {
    pub index: usize,
    pub order: u64,
    pub size: usize,
    pub natural_trace: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupDoc {
    pub group: GroupId,
    pub name: String,
    pub order: usize,
    pub conductor: u32,
    /// `(q, r)` in `<b, c | (bc)^2 = b^q = c^r>`.
    pub presentation: Option<(u32, u32)>,
    pub presentation_holds: bool,
    pub abelianization: AbelianizationData,
    pub structure: String,
    pub relations: Vec<String>,
    pub classes: Vec<ClassDoc>,
}

impl Document for GroupDoc {
    fn table(&self) -> String {
        let mut out = format!("{} ({})  order {}  Q(zeta_{})\n", self.name, self.group, self.order, self.conductor);
        if let Some((q, r)) = self.presentation {
            let status = if self.presentation_holds { "holds" } else { "FAILS" };
            out += &format!("presentation  <b, c | (bc)^2 = b^{q} = c^{r}>  {status}\n");
        }
        out += &format!("Ab            {}", self.structure);
        if !self.relations.is_empty() {
            out += &format!("  ({})", self.relations.join(", "));
        }
        out += "\n\n";
        let header = strings(["class", "order", "size", "trace"]);
        let rows: Vec<Vec<String>> = self
            .classes
            .iter()
            .map(|c| vec![c.index.to_string(), c.order.to_string(), c.size.to_string(), c.natural_trace.clone()])
            .collect();
        out + &grid(&header, &rows)
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        let g = self.group.to_string();
        let mut rows = vec![
            vec![g.clone(), "order".into(), self.order.to_string()],
            vec![g.clone(), "conductor".into(), self.conductor.to_string()],
            vec![g.clone(), "abelianization".into(), self.structure.clone()],
        ];
        for r in &self.relations {
            rows.push(vec![g.clone(), "relation".into(), r.clone()]);
        }
        for c in &self.classes {
            let object = format!("{g} class {}", c.index);
            rows.push(vec![object.clone(), "order".into(), c.order.to_string()]);
            rows.push(vec![object.clone(), "size".into(), c.size.to_string()]);
            rows.push(vec![object, "natural trace".into(), c.natural_trace.clone()]);
        }
        rows
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepDoc {
    pub name: String,
    pub dimension: usize,
    pub natural: bool,
    pub topologically_trivial: bool,
    pub character: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepsDoc {
    pub group: GroupId,
    pub reps: Vec<RepDoc>,
}

impl Document for RepsDoc {
    fn table(&self) -> String {
        let classes = self.reps.first().map_or(0, |r| r.character.len());
        let mut header = strings(["rep", "dim", "det"]);
        header.extend((0..classes).map(|k| format!("C{k}")));
        let rows: Vec<Vec<String>> = self
            .reps
            .iter()
            .map(|r| {
                let name = if r.natural { format!("{}*", r.name) } else { r.name.clone() };
                let det = if r.topologically_trivial { "1" } else { "-" };
                let mut row = vec![name, r.dimension.to_string(), det.into()];
                row.extend(r.character.iter().cloned());
                row
            })
            .collect();
        grid(&header, &rows) + "(* natural representation; det 1 = topologically trivial)\n"
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        let mut rows = Vec::new();
        for r in &self.reps {
            rows.push(vec![r.name.clone(), "dimension".into(), r.dimension.to_string()]);
            rows.push(vec![r.name.clone(), "topologically trivial".into(), r.topologically_trivial.to_string()]);
            for (k, v) in r.character.iter().enumerate() {
                rows.push(vec![r.name.clone(), format!("chi(C{k})"), v.clone()]);
            }
        }
        rows
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepValues {
    pub rep: String,
    pub values: Vec<(H1Generator, QmodZ)>,
}

/// First CCS-numbers, one column per representation and one row per generator.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ccs1Doc {
    pub group: GroupId,
    pub generators: Vec<H1Generator>,
    pub reps: Vec<RepValues>,
}

impl Document for Ccs1Doc {
    fn table(&self) -> String {
        let mut header = vec![String::new()];
        header.extend(self.reps.iter().map(|r| r.rep.clone()));
        let rows: Vec<Vec<String>> = self
            .generators
            .iter()
            .map(|g| {
                let mut row = vec![g.to_string()];
                for r in &self.reps {
                    let v = r.values.iter().find(|(h, _)| h == g).map(|(_, v)| v.to_string());
                    row.push(v.unwrap_or_default());
                }
                row
            })
            .collect();
        grid(&header, &rows)
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        self.reps
            .iter()
            .flat_map(|r| r.values.iter().map(|(g, v)| vec![r.rep.clone(), format!("ccs1({g})"), v.to_string()]))
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepValue {
    pub rep: String,
    pub value: QmodZ,
}

/// Second CCS-numbers in one row under the representation names.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ccs2Doc {
    pub group: GroupId,
    pub values: Vec<RepValue>,
}

impl Document for Ccs2Doc {
    fn table(&self) -> String {
        let mut header = vec![String::new()];
        header.extend(self.values.iter().map(|v| v.rep.clone()));
        let mut row = vec!["c2".to_string()];
        row.extend(self.values.iter().map(|v| v.value.to_string()));
        grid(&header, &[row])
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        self.values.iter().map(|v| vec![v.rep.clone(), "ccs2".into(), v.value.to_string()]).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct XiRow {
    pub rep: String,
    pub value: QmodZ,
    /// Unreduced defect sum as `p/q`.
    pub defect_sum: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct XiDoc {
    pub group: GroupId,
    pub values: Vec<XiRow>,
}

impl Document for XiDoc {
    fn table(&self) -> String {
        let mut header = vec![String::new()];
        header.extend(self.values.iter().map(|v| v.rep.clone()));
        let mut reduced = vec!["xi~".to_string()];
        reduced.extend(self.values.iter().map(|v| v.value.to_string()));
        let mut sums = vec!["defect".to_string()];
        sums.extend(self.values.iter().map(|v| v.defect_sum.clone()));
        grid(&header, &[reduced, sums])
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        self.values
            .iter()
            .flat_map(|v| {
                [
                    vec![v.rep.clone(), "xi".into(), v.value.to_string()],
                    vec![v.rep.clone(), "defect sum".into(), v.defect_sum.clone()],
                ]
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleDoc {
    pub family: String,
    pub coefficients: Vec<u64>,
    pub multiset: Vec<u64>,
    pub negative_definite: bool,
    pub t: String,
    /// `Xi` of the natural representation, when the graph comes from a group.
    pub xi: Option<QmodZ>,
}

impl Document for CycleDoc {
    fn table(&self) -> String {
        let mut rows = vec![
            vec!["graph".into(), self.family.clone()],
            vec!["negative definite".into(), self.negative_definite.to_string()],
            vec!["Z_fund".into(), strings(&self.coefficients).join(" ")],
            vec!["multiset".into(), strings(&self.multiset).join(" ")],
            vec!["t".into(), self.t.clone()],
        ];
        if let Some(xi) = &self.xi {
            rows.push(vec!["Xi".into(), xi.to_string()]);
        }
        let (header, body) = rows.split_first().expect("nonempty");
        grid(header, body)
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        let f = &self.family;
        let mut rows: Vec<Vec<String>> = self
            .coefficients
            .iter()
            .enumerate()
            .map(|(i, n)| vec![f.clone(), format!("n{i}"), n.to_string()])
            .collect();
        rows.push(vec![f.clone(), "negative definite".into(), self.negative_definite.to_string()]);
        rows.push(vec![f.clone(), "t".into(), self.t.clone()]);
        if let Some(xi) = &self.xi {
            rows.push(vec![f.clone(), "Xi".into(), xi.to_string()]);
        }
        rows
    }
}

impl Document for SpectrumMultiset {
    fn table(&self) -> String {
        let header = strings(["value", "multiplicity"]);
        let rows: Vec<Vec<String>> =
            self.entries.iter().map(|e| vec![e.value.to_string(), e.multiplicity.to_string()]).collect();
        let check = match steenbrink_reference(self.group) {
            Ok(reference) => compare_spectra(self, &reference).to_string(),
            Err(e) => e.to_string(),
        };
        format!("{} ({})  {} entries\n", self.group.name(), self.group, self.total())
            + &grid(&header, &rows)
            + &format!("reference spectrum: {check}\n")
    }

    fn csv_header(&self) -> Vec<&'static str> {
        vec!["value", "multiplicity"]
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        self.entries.iter().map(|e| vec![e.value.to_string(), e.multiplicity.to_string()]).collect()
    }
}

/// Topological spectrum with the mask that produced it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TopSpecDoc {
    pub group: GroupId,
    pub special: Vec<String>,
    pub first_classes: BTreeSet<Vec<(H1Generator, QmodZ)>>,
    pub natural: Option<QmodZ>,
}

impl TopSpecDoc {
    pub fn new(spectrum: TopSpectrum, special: Vec<String>) -> Self {
        Self { group: spectrum.group, special, first_classes: spectrum.first_classes, natural: spectrum.natural }
    }
}

fn class_text(class: &[(H1Generator, QmodZ)]) -> String {
    class.iter().map(|(g, v)| format!("{g}={v}")).collect::<Vec<_>>().join(" ")
}

impl Document for TopSpecDoc {
    fn table(&self) -> String {
        let mut out = format!("{} ({})  special: {}\n", self.group.name(), self.group, self.special.join(" "));
        let header = strings(["#", "first class"]);
        let rows: Vec<Vec<String>> =
            self.first_classes.iter().enumerate().map(|(i, c)| vec![(i + 1).to_string(), class_text(c)]).collect();
        out += &grid(&header, &rows);
        if let Some(v) = &self.natural {
            out += &format!("c2(nat) = {v}\n");
        }
        out
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        let mut rows = Vec::new();
        for (i, class) in self.first_classes.iter().enumerate() {
            for (g, v) in class {
                rows.push(vec![format!("class {}", i + 1), format!("ccs1({g})"), v.to_string()]);
            }
        }
        if let Some(v) = &self.natural {
            rows.push(vec!["nat".into(), "ccs2".into(), v.to_string()]);
        }
        rows
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_pads_and_trims() {
        let text = grid(&strings(["a", "bb"]), &[strings(["ccc", "d"])]);
        assert_eq!(text, "a    bb\nccc  d\n");
    }

    #[test]
    fn value_json_is_exact() {
        let doc = ValueDoc { value: QmodZ::from_ratio(17, 24), object: "a5".into(), invariant: "xi".into() };
        assert_eq!(render(&doc, Format::Json).unwrap(), "{\"value\":\"17/24\"}\n");
        assert_eq!(render(&doc, Format::Csv).unwrap(), "object,invariant,value\na5,xi,17/24\n");
    }
}
