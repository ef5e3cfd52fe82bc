//! The bundled catalog of every group of order at most 24.
//!
//! Each line of `data/catalog.txt` reads
//! `order index label gens=(cycles);(cycles)...`, with generators acting on
//! 0-based points. Lines starting with `#` are comments. Every entry is
//! closed under its generators at load time and rejected if the resulting
//! order disagrees with the stated one.

use std::sync::OnceLock;

use cycgroups_core::perm::Permutation;
use cycgroups_core::{census, from_permutations, CensusReport, GroupTable};
use serde::Serialize;

use crate::error::{Error, Result};

/// Largest order in the catalog.
pub const CATALOG_MAX_ORDER: usize = 24;

/// Number of isomorphism types of each order `1..=24`.
pub const EXPECTED_COUNTS: [usize; CATALOG_MAX_ORDER] = [
    1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1, 14, 1, 5, 1, 5, 2, 2, 1, 15,
];

const BUNDLED: &str = include_str!("../data/catalog.txt");

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CatalogEntry {
    pub order: usize,
    /// Position within its order, starting at 1.
    pub index: usize,
    pub label: String,
    #[serde(serialize_with = "serialize_perms")]
    pub generators: Vec<Permutation>,
}

fn serialize_perms<S: serde::Serializer>(perms: &[Permutation], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(perms.iter().map(ToString::to_string))
}

impl CatalogEntry {
    pub fn id(&self) -> String {
        format!("({},{})", self.order, self.index)
    }
}

/// Catalog entries with their groups and census reports.
#[derive(Debug)]
pub struct Catalog {
    entries: Vec<CatalogEntry>,
    groups: Vec<GroupTable>,
    reports: Vec<CensusReport>,
}

impl Catalog {
    /// Parses catalog text and builds every group.
    pub fn parse(text: &str) -> Result<Self> {
        let mut entries = Vec::new();
        let mut groups = Vec::new();
        for (k, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let fail = |reason: String| Error::Catalog {
                line: k + 1,
                reason,
            };
            let entry = parse_line(line).map_err(fail)?;
            let group = if entry.generators.is_empty() {
                cycgroups_core::make_cyclic(1)?
            } else {
                from_permutations(&entry.generators).map_err(|e| fail(e.to_string()))?
            };
            if group.order() != entry.order {
                return Err(fail(format!(
                    "generators close to order {}, but the entry states {}",
                    group.order(),
                    entry.order
                )));
            }
            groups.push(group.with_name(entry.label.clone()));
            entries.push(entry);
        }
        let reports = groups.iter().map(census).collect();
        Ok(Self {
            entries,
            groups,
            reports,
        })
    }

    /// The catalog shipped with the crate, loaded once.
    pub fn bundled() -> &'static Catalog {
        static CATALOG: OnceLock<Catalog> = OnceLock::new();
        CATALOG.get_or_init(|| Catalog::parse(BUNDLED).expect("bundled catalog is well formed"))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    /// Entries with their groups and census reports, in file order.
    pub fn iter(&self) -> impl Iterator<Item = (&CatalogEntry, &GroupTable, &CensusReport)> {
        self.entries
            .iter()
            .zip(&self.groups)
            .zip(&self.reports)
            .map(|((e, g), r)| (e, g, r))
    }

    pub fn get(
        &self,
        order: usize,
        index: usize,
    ) -> Option<(&CatalogEntry, &GroupTable, &CensusReport)> {
        self.iter()
            .find(|(e, _, _)| e.order == order && e.index == index)
    }
}

fn parse_line(line: &str) -> std::result::Result<CatalogEntry, String> {
    let mut fields = line.splitn(4, ' ');
    let mut number = |what: &str| -> std::result::Result<usize, String> {
        let tok = fields.next().ok_or_else(|| format!("missing {what}"))?;
        tok.parse()
            .map_err(|_| format!("{what} {tok:?} is not an integer"))
    };
    let order = number("order")?;
    let index = number("index")?;
    let label = fields.next().ok_or("missing label")?.to_string();
    let gens = fields
        .next()
        .and_then(|rest| rest.trim().strip_prefix("gens="))
        .ok_or("missing gens= field")?;
    let mut generators = Vec::new();
    for cycles in gens.split(';').map(str::trim).filter(|c| !c.is_empty()) {
        generators.push(Permutation::parse_cycles(cycles, None).map_err(|e| e.to_string())?);
    }
    Ok(CatalogEntry {
        order,
        index,
        label,
        generators: cycgroups_core::perm::pad_to_common_degree(&generators),
    })
}
