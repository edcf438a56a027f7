//! Deterministic table documents for the three census families, with
//! Markdown and JSON renderers. Same inputs, same bytes.

use serde::Serialize;

use crate::census::{alpha4_r9_families, verdict, ComponentModel, ComponentRecord, TriState, SCHEMA};
use crate::error::{Error, Result};
use crate::invariants::Triple;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableFamily {
    /// d = 2r+4, g = r+8, r = 3..8 plus the empty tail.
    R8,
    /// d = 2r+5, g = r+9, r = 3..11 plus the empty tail.
    R9,
    /// d = g in P^4, g = 11..19.
    Gg4,
}

impl std::str::FromStr for TableFamily {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "r+8" => Ok(TableFamily::R8),
            "r+9" => Ok(TableFamily::R9),
            "gg4" => Ok(TableFamily::Gg4),
            other => Err(Error::Precondition(format!(
                "unknown table family {other:?}; expected r+8, r+9 or gg4"
            ))),
        }
    }
}

impl TableFamily {
    pub fn tag(&self) -> &'static str {
        match self {
            TableFamily::R8 => "r+8",
            TableFamily::R9 => "r+9",
            TableFamily::Gg4 => "gg4",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TableEntry {
    pub description: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stratum: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub base_locus: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dim: Option<i64>,
    pub is_component: TriState,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub remark: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TableRow {
    pub label: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub triple: Option<Triple>,
    pub exists: TriState,
    pub irreducible: TriState,
    pub entries: Vec<TableEntry>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TableDoc {
    pub schema: &'static str,
    pub family: String,
    pub title: String,
    pub rows: Vec<TableRow>,
}

fn entry_from_component(c: &ComponentRecord, remark: Option<String>) -> TableEntry {
    TableEntry {
        description: c.description.clone(),
        stratum: c.stratum.clone(),
        base_locus: c.base_locus,
        dim: c.dim,
        is_component: c.is_component,
        remark,
    }
}

fn row_for(t: Triple, entries: Vec<TableEntry>) -> Result<TableRow> {
    let v = verdict(t)?;
    Ok(TableRow {
        label: t.to_string(),
        triple: Some(t),
        exists: v.exists,
        irreducible: v.irreducible,
        entries,
    })
}

fn empty_tail_row(label: &str) -> TableRow {
    TableRow {
        label: label.to_string(),
        triple: None,
        exists: TriState::No,
        irreducible: TriState::Unknown,
        entries: vec![TableEntry {
            description: "empty".to_string(),
            stratum: None,
            base_locus: None,
            dim: None,
            is_component: TriState::Unknown,
            remark: None,
        }],
    }
}

/// Gonality annotation for the d = g tables in P^4.
fn gg4_remark(g: i64, components: &[ComponentRecord]) -> String {
    for c in components {
        if let Some(ComponentModel::GonalRecipe(rec)) = &c.model {
            return match rec.k {
                3 => "trigonal".to_string(),
                4 => "tetragonal".to_string(),
                5 => "pentagonal".to_string(),
                k => format!("{k}-gonal"),
            };
        }
    }
    match g {
        11 => "trigonal".to_string(),
        12 | 13 => "pentagonal".to_string(),
        16 | 19 => "cited construction".to_string(),
        _ => String::new(),
    }
}

/// Assemble one of the three census tables.
pub fn table(family: TableFamily) -> Result<TableDoc> {
    let mut rows = Vec::new();
    let title;
    match family {
        TableFamily::R8 => {
            title = "Linearly normal curves of degree 2r+4 and genus r+8".to_string();
            for r in 3..=8 {
                let t = Triple::new(2 * r + 4, r + 8, r)?;
                let v = verdict(t)?;
                let entries =
                    v.components.iter().map(|c| entry_from_component(c, None)).collect();
                rows.push(row_for(t, entries)?);
            }
            rows.push(empty_tail_row("(2r+4,r+8,r), r>=9"));
        }
        TableFamily::R9 => {
            title = "Linearly normal curves of degree 2r+5 and genus r+9".to_string();
            for r in 3..=11 {
                let t = Triple::new(2 * r + 5, r + 9, r)?;
                let fams = alpha4_r9_families(t)?;
                let entries = fams.iter().map(|c| entry_from_component(c, None)).collect();
                rows.push(row_for(t, entries)?);
            }
            rows.push(empty_tail_row("(2r+5,r+9,r), r>=12"));
        }
        TableFamily::Gg4 => {
            title = "Linearly normal curves of degree g and genus g in P^4".to_string();
            for g in 11..=19 {
                let t = Triple::new(g, g, 4)?;
                let v = verdict(t)?;
                let remark = gg4_remark(g, &v.components);
                let entries: Vec<TableEntry> = v
                    .components
                    .iter()
                    .map(|c| entry_from_component(c, Some(remark.clone())))
                    .collect();
                rows.push(row_for(t, entries)?);
            }
        }
    }
    Ok(TableDoc {
        schema: SCHEMA,
        family: family.tag().to_string(),
        title,
        rows,
    })
}

fn tri_cell(s: TriState) -> &'static str {
    match s {
        TriState::Yes => "yes",
        TriState::No => "no",
        TriState::Unknown => "?",
    }
}

impl TableDoc {
    /// Fixed-format Markdown; byte-stable across runs.
    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("# {}\n\n", self.title));
        out.push_str("| (d,g,r) | family | C_E | dim | component | irreducible | remark |\n");
        out.push_str("|---|---|---|---|---|---|---|\n");
        for row in &self.rows {
            for (i, e) in row.entries.iter().enumerate() {
                let label = if i == 0 { row.label.as_str() } else { "" };
                let irr = if i == 0 { tri_cell(row.irreducible) } else { "" };
                let mut model = e.stratum.clone().unwrap_or_default();
                if e.base_locus == Some(true) {
                    model.push_str(", base point");
                }
                let dim = e.dim.map(|d| d.to_string()).unwrap_or_default();
                out.push_str(&format!(
                    "| {} | {} | {} | {} | {} | {} | {} |\n",
                    label,
                    e.description,
                    model,
                    dim,
                    tri_cell(e.is_component),
                    irr,
                    e.remark.clone().unwrap_or_default(),
                ));
            }
            if row.entries.is_empty() {
                out.push_str(&format!(
                    "| {} | | | | | {} | |\n",
                    row.label,
                    tri_cell(row.irreducible)
                ));
            }
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("table serialization cannot fail")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_row_counts() {
        assert_eq!(table(TableFamily::R8).unwrap().rows.len(), 7);
        assert_eq!(table(TableFamily::R9).unwrap().rows.len(), 10);
        assert_eq!(table(TableFamily::Gg4).unwrap().rows.len(), 9);
    }

    #[test]
    fn r8_strata() {
        let doc = table(TableFamily::R8).unwrap();
        let strata: Vec<String> = doc
            .rows
            .iter()
            .flat_map(|r| r.entries.iter().filter_map(|e| e.stratum.clone()))
            .collect();
        assert_eq!(
            strata,
            vec![
                "Sigma_{|(5,5)|,5}", // (10,11,3), non-component family
                "Sigma_{|(5,5)|,4}", // (12,12,4)
                "Sigma_{|(5,5)|,3}", // (14,13,5)
                "Sigma_{|(5,5)|,2}", // (16,14,6)
                "Sigma_{|(4,6)|,0}", // (18,15,7), second component
                "Sigma_{|(5,5)|,1}", // (18,15,7)
                "Sigma_{|(5,5)|,0}", // (20,16,8)
            ]
        );
    }

    #[test]
    fn r9_strata_and_base_points() {
        let doc = table(TableFamily::R9).unwrap();
        let with_base: Vec<&str> = doc
            .rows
            .iter()
            .flat_map(|r| r.entries.iter())
            .filter(|e| e.base_locus == Some(true))
            .filter_map(|e| e.stratum.as_deref())
            .collect();
        assert_eq!(
            with_base,
            vec![
                "Sigma_{|(5,5)|,4}", // (11,12,3)
                "Sigma_{|(5,5)|,3}", // (13,13,4)
                "Sigma_{|(5,5)|,2}", // (15,14,5)
                "Sigma_{|(5,5)|,0}", // (19,16,7)
            ]
        );
        let five_six: usize = doc
            .rows
            .iter()
            .flat_map(|r| r.entries.iter())
            .filter(|e| e.stratum.as_deref().map_or(false, |s| s.contains("(5,6)")))
            .count();
        assert_eq!(five_six, 8); // delta = 7..0
        let four_seven: usize = doc
            .rows
            .iter()
            .flat_map(|r| r.entries.iter())
            .filter(|e| e.stratum.as_deref().map_or(false, |s| s.contains("(4,7)")))
            .count();
        assert_eq!(four_seven, 1); // (23,18,9)
    }

    #[test]
    fn gg4_remarks() {
        let doc = table(TableFamily::Gg4).unwrap();
        let remarks: Vec<String> = doc
            .rows
            .iter()
            .map(|r| r.entries.first().and_then(|e| e.remark.clone()).unwrap_or_default())
            .collect();
        assert_eq!(
            remarks,
            vec![
                "trigonal",
                "pentagonal",
                "pentagonal",
                "tetragonal",
                "tetragonal",
                "cited construction",
                "pentagonal",
                "pentagonal",
                "cited construction",
            ]
        );
    }

    #[test]
    fn renderers_are_byte_stable() {
        for fam in [TableFamily::R8, TableFamily::R9, TableFamily::Gg4] {
            let a = table(fam).unwrap();
            let b = table(fam).unwrap();
            assert_eq!(a.to_markdown(), b.to_markdown());
            assert_eq!(a.to_json(), b.to_json());
            assert!(a.to_markdown().contains("| (d,g,r) |"));
        }
    }

    #[test]
    fn irreducibility_column_matches_known_rows() {
        let doc = table(TableFamily::R9).unwrap();
        let irr: Vec<TriState> = doc.rows.iter().map(|r| r.irreducible).collect();
        assert_eq!(
            irr,
            vec![
                TriState::Yes,     // (11,12,3)
                TriState::Unknown, // (13,13,4)
                TriState::Unknown, // (15,14,5)
                TriState::No,      // (17,15,6)
                TriState::Unknown, // (19,16,7)
                TriState::Yes,     // (21,17,8)
                TriState::No,      // (23,18,9)
                TriState::Yes,     // (25,19,10)
                TriState::Yes,     // (27,20,11)
                TriState::Unknown, // empty tail
            ]
        );
    }
}
