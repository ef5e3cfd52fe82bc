//! Cyclic subgroup census: `n_d`, `|C(G)|`, the deficiency `Δ(G) = |G| - |C(G)|`
//! and the signature `σ(G)`, plus the totient helpers they rest on.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{GroupError, Result};
use crate::group::{Element, GroupTable, SubgroupSet};

/// Euler's totient.
pub fn euler_phi(d: usize) -> usize {
    let mut n = d;
    let mut phi = d;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            phi -= phi / p;
        }
        p += 1;
    }
    if n > 1 {
        phi -= phi / n;
    }
    phi
}

/// Every `d` with `φ(d) = m`, ascending. Scans `d ≤ 2m²`, which suffices
/// because `φ(d) ≥ √(d/2)`.
pub fn phi_inverse(m: usize) -> Vec<usize> {
    if m == 0 {
        return Vec::new();
    }
    (1..=2 * m * m).filter(|&d| euler_phi(d) == m).collect()
}

/// Number of `x` with `x^n = 1`.
pub fn count_solutions(g: &GroupTable, n: usize) -> usize {
    g.elements()
        .filter(|&x| n.is_multiple_of(g.element_order(x)))
        .count()
}

/// Sorted multiset of cyclic subgroup orders greater than 2.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(try_from = "Vec<usize>", into = "Vec<usize>"))]
pub struct Signature(Vec<usize>);

impl Signature {
    pub fn new(mut entries: Vec<usize>) -> Result<Self> {
        if let Some(bad) = entries.iter().find(|&&d| d <= 2) {
            return Err(GroupError::InvalidSignature(format!(
                "entry {bad} is not greater than 2"
            )));
        }
        entries.sort_unstable();
        Ok(Self(entries))
    }

    /// Each `d` repeated `count` times.
    pub fn from_counts<'a>(counts: impl IntoIterator<Item = (&'a usize, &'a usize)>) -> Self {
        let mut entries = Vec::new();
        for (&d, &count) in counts {
            if d > 2 {
                entries.extend(core::iter::repeat_n(d, count));
            }
        }
        entries.sort_unstable();
        Self(entries)
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn multiplicity(&self, d: usize) -> usize {
        self.0.iter().filter(|&&e| e == d).count()
    }

    pub fn contains(&self, d: usize) -> bool {
        self.0.binary_search(&d).is_ok()
    }

    /// Distinct entries with their multiplicities, ascending.
    pub fn counts(&self) -> BTreeMap<usize, usize> {
        let mut counts = BTreeMap::new();
        for &d in &self.0 {
            *counts.entry(d).or_insert(0) += 1;
        }
        counts
    }

    /// `Σ (φ(d) − 1)` over the entries: the deficiency this signature implies.
    pub fn implied_delta(&self) -> usize {
        self.0.iter().map(|&d| euler_phi(d) - 1).sum()
    }
}

impl TryFrom<Vec<usize>> for Signature {
    type Error = GroupError;

    fn try_from(entries: Vec<usize>) -> Result<Self> {
        Self::new(entries)
    }
}

impl From<Signature> for Vec<usize> {
    fn from(sig: Signature) -> Self {
        sig.0
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, d) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{d}")?;
        }
        f.write_str(")")
    }
}

/// Accepts `3,4,4`, `(3,4,4)` or `(3, 4, 4)`; `()` and the empty string give
/// the empty signature.
impl FromStr for Signature {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let inner = s
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .unwrap_or(s);
        let mut entries = Vec::new();
        for tok in inner.split(',') {
            let tok = tok.trim();
            if tok.is_empty() {
                continue;
            }
            let d = tok
                .parse()
                .map_err(|_| GroupError::InvalidSignature(format!("{tok:?} is not an integer")))?;
            entries.push(d);
        }
        Self::new(entries)
    }
}

/// Everything the census computes for one group.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CensusReport {
    #[cfg_attr(feature = "serde", serde(rename = "order"))]
    pub group_order: usize,
    /// Cyclic subgroups per order; only orders that occur are present.
    pub n_d: BTreeMap<usize, usize>,
    #[cfg_attr(feature = "serde", serde(rename = "cyclic_count"))]
    pub total_cyclic: usize,
    pub delta: usize,
    #[cfg_attr(feature = "serde", serde(rename = "sigma"))]
    pub signature: Signature,
}

impl CensusReport {
    /// Re-checks the counting identities `Σ n_d φ(d) = |G|`,
    /// `Σ n_d (φ(d) − 1) = Δ` and `Δ = |G| − |C(G)|`.
    pub fn identities_hold(&self) -> bool {
        let by_generators: usize = self.n_d.iter().map(|(&d, &n)| n * euler_phi(d)).sum();
        let weighted: usize = self.n_d.iter().map(|(&d, &n)| n * (euler_phi(d) - 1)).sum();
        let total: usize = self.n_d.values().sum();
        by_generators == self.group_order
            && weighted == self.delta
            && total == self.total_cyclic
            && self.group_order == self.total_cyclic + self.delta
            && self.signature == Signature::from_counts(&self.n_d)
    }
}

/// `⟨x⟩` as a sorted member list.
fn cyclic_members(g: &GroupTable, x: Element) -> Vec<Element> {
    let mut members = alloc::vec![0];
    let mut acc = x;
    while acc != 0 {
        members.push(acc);
        acc = g.mul(acc, x);
    }
    members.sort_unstable();
    members
}

/// All cyclic subgroups `⟨x⟩`, deduplicated by member set and sorted.
pub fn cyclic_subgroups(g: &GroupTable) -> Vec<SubgroupSet<'_>> {
    let distinct: BTreeSet<Vec<Element>> = g.elements().map(|x| cyclic_members(g, x)).collect();
    distinct
        .into_iter()
        .map(|members| SubgroupSet::new(g, members).expect("powers of an element form a subgroup"))
        .collect()
}

/// Full census of `g`. The counting identities are asserted on the way out.
pub fn census(g: &GroupTable) -> CensusReport {
    let subgroups = cyclic_subgroups(g);
    let mut n_d = BTreeMap::new();
    for h in &subgroups {
        *n_d.entry(h.len()).or_insert(0) += 1;
    }
    let total_cyclic = subgroups.len();
    let report = CensusReport {
        group_order: g.order(),
        signature: Signature::from_counts(&n_d),
        n_d,
        total_cyclic,
        delta: g.order() - total_cyclic,
    };
    assert!(
        report.identities_hold(),
        "census identities failed for {}",
        g.name()
    );
    report
}
