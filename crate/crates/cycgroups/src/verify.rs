//! Machine checks of the classification for deficiencies 1 through 5.
//!
//! Theorem groups are built from constructors, never looked up in the
//! catalog, so a theorem check and the catalog sweep are independent
//! witnesses. The catalog stops at order 24; claimed groups above that order
//! are verified by construction only, and completeness there rests on the
//! published proof.

use std::collections::{BTreeMap, BTreeSet};

use cycgroups_core::classify::{known_groups_for, theorem_claims};
use cycgroups_core::exclusion::classify_candidates;
use cycgroups_core::{
    apply_rules, census, count_solutions, cyclic_subgroups, direct_product, enumerate_candidates,
    euler_phi, is_isomorphic, make_cyclic, make_dicyclic, make_dihedral, make_quasidihedral,
    revised_table, Element, GroupError, GroupTable, Signature,
};
use serde::Serialize;

use crate::catalog::{Catalog, CatalogEntry, CATALOG_MAX_ORDER, EXPECTED_COUNTS};
use crate::error::{Error, Result};

/// One theorem group: what was built and what the census found.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClaimCheck {
    pub delta: usize,
    pub group: String,
    pub order: Option<usize>,
    pub computed_delta: Option<usize>,
    pub computed_sigma: Option<Signature>,
    pub expected_sigma: Signature,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

/// One catalog group met by a sweep, and the claimed group it matched.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepRow {
    pub order: usize,
    pub index: usize,
    pub label: String,
    pub delta: usize,
    pub sigma: Signature,
    pub matched: Option<String>,
    pub pass: bool,
}

/// A named check over many cases, with a witness on failure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyCheck {
    pub name: String,
    pub pass: bool,
    /// How many cases were examined.
    pub checked: usize,
    pub detail: String,
}

impl PropertyCheck {
    fn new(
        name: impl Into<String>,
        checked: usize,
        failure: Option<String>,
        summary: impl Into<String>,
    ) -> Self {
        Self {
            name: name.into(),
            pass: failure.is_none(),
            checked,
            detail: failure.unwrap_or_else(|| summary.into()),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub claims: Vec<ClaimCheck>,
    pub sweep: Vec<SweepRow>,
    pub properties: Vec<PropertyCheck>,
    pub pass: bool,
}

impl VerificationReport {
    fn seal(mut self) -> Self {
        self.pass = self.claims.iter().all(|c| c.pass)
            && self.sweep.iter().all(|s| s.pass)
            && self.properties.iter().all(|p| p.pass);
        self
    }

    pub fn merge(mut self, other: VerificationReport) -> Self {
        self.claims.extend(other.claims);
        self.sweep.extend(other.sweep);
        self.properties.extend(other.properties);
        self.seal()
    }

    /// One line per failed sub-check.
    pub fn failures(&self) -> Vec<String> {
        let claims = self.claims.iter().filter(|c| !c.pass).map(|c| {
            format!(
                "claim {} (delta {}): {}",
                c.group,
                c.delta,
                c.detail.as_deref().unwrap_or("mismatch")
            )
        });
        let sweep = self.sweep.iter().filter(|s| !s.pass).map(|s| {
            format!(
                "catalog ({},{}) {} has delta {} and sigma {} but matches no claim",
                s.order, s.index, s.label, s.delta, s.sigma
            )
        });
        let props = self
            .properties
            .iter()
            .filter(|p| !p.pass)
            .map(|p| format!("{}: {}", p.name, p.detail));
        claims.chain(sweep).chain(props).collect()
    }
}

fn check_theorem_delta(delta: usize) -> Result<()> {
    if (1..=5).contains(&delta) {
        Ok(())
    } else {
        Err(GroupError::DeltaOutOfRange {
            value: delta,
            min: 1,
            max: 5,
        }
        .into())
    }
}

/// Builds every group the classification names for `delta`, checks each
/// census against the revised table, and sweeps the catalog for groups with
/// that deficiency.
pub fn verify_theorem(delta: usize, catalog: &Catalog) -> Result<VerificationReport> {
    check_theorem_delta(delta)?;
    let claim = theorem_claims()
        .into_iter()
        .find(|c| c.delta == delta)
        .expect("a claim for each deficiency 1..=5");
    let revised: BTreeSet<Signature> = revised_table(delta)?.into_iter().collect();
    let mut report = VerificationReport::default();
    let mut built: Vec<(String, GroupTable)> = Vec::new();

    for g in &claim.groups {
        let label = g.recipe.label();
        let mut check = ClaimCheck {
            delta,
            group: label.clone(),
            order: None,
            computed_delta: None,
            computed_sigma: None,
            expected_sigma: g.signature.clone(),
            pass: false,
            detail: None,
        };
        match g.recipe.build() {
            Err(e) => check.detail = Some(format!("construction failed: {e}")),
            Ok(table) => {
                let c = census(&table);
                let mut problems = Vec::new();
                if c.delta != delta {
                    problems.push(format!("delta is {}, expected {delta}", c.delta));
                }
                if c.signature != g.signature {
                    problems.push(format!(
                        "sigma is {}, expected {}",
                        c.signature, g.signature
                    ));
                }
                if !revised.contains(&c.signature) {
                    problems.push(format!("sigma {} is not in the revised table", c.signature));
                }
                check.order = Some(table.order());
                check.computed_delta = Some(c.delta);
                check.computed_sigma = Some(c.signature);
                check.pass = problems.is_empty();
                check.detail = (!problems.is_empty()).then(|| problems.join("; "));
                built.push((label, table));
            }
        }
        report.claims.push(check);
    }

    let claimed: BTreeSet<Signature> = claim.groups.iter().map(|g| g.signature.clone()).collect();
    let stray: Vec<String> = claimed
        .symmetric_difference(&revised)
        .map(ToString::to_string)
        .collect();
    report.properties.push(PropertyCheck::new(
        format!("delta {delta}: claimed signatures equal the revised table"),
        revised.len(),
        (!stray.is_empty()).then(|| {
            format!(
                "signatures in only one of the two sets: {}",
                stray.join(" ")
            )
        }),
        format!("{} signatures", revised.len()),
    ));
    report.properties.push(pairwise_distinct(delta, &built)?);

    let (rows, coverage) = sweep_delta(delta, catalog, &built)?;
    report.sweep = rows;
    report.properties.push(coverage);
    Ok(report.seal())
}

fn pairwise_distinct(delta: usize, built: &[(String, GroupTable)]) -> Result<PropertyCheck> {
    let mut pairs = 0;
    let mut failure = None;
    for (i, (la, a)) in built.iter().enumerate() {
        for (lb, b) in &built[i + 1..] {
            pairs += 1;
            if a.order() == b.order() && is_isomorphic(a, b)? {
                failure.get_or_insert_with(|| format!("{la} and {lb} are isomorphic"));
            }
        }
    }
    Ok(PropertyCheck::new(
        format!("delta {delta}: claimed groups pairwise non-isomorphic"),
        pairs,
        failure,
        format!("{} groups", built.len()),
    ))
}

/// Every catalog group with deficiency `delta` must match exactly one claimed
/// group, and every claimed group inside the catalog's range must be found.
fn sweep_delta(
    delta: usize,
    catalog: &Catalog,
    built: &[(String, GroupTable)],
) -> Result<(Vec<SweepRow>, PropertyCheck)> {
    let mut rows = Vec::new();
    let mut hits: BTreeMap<&str, usize> = BTreeMap::new();
    for (entry, group, c) in catalog.iter().filter(|(_, _, c)| c.delta == delta) {
        let mut matches = Vec::new();
        for (label, table) in built.iter().filter(|(_, t)| t.order() == group.order()) {
            if is_isomorphic(group, table)? {
                matches.push(label.as_str());
            }
        }
        for m in &matches {
            *hits.entry(m).or_insert(0) += 1;
        }
        rows.push(SweepRow {
            order: entry.order,
            index: entry.index,
            label: entry.label.clone(),
            delta: c.delta,
            sigma: c.signature.clone(),
            matched: matches.first().map(|m| m.to_string()),
            pass: matches.len() == 1,
        });
    }
    let in_range: Vec<&(String, GroupTable)> = built
        .iter()
        .filter(|(_, t)| t.order() <= CATALOG_MAX_ORDER)
        .collect();
    let missing: Vec<&str> = in_range
        .iter()
        .filter(|(l, _)| hits.get(l.as_str()) != Some(&1))
        .map(|(l, _)| l.as_str())
        .collect();
    let beyond: Vec<&str> = built
        .iter()
        .filter(|(_, t)| t.order() > CATALOG_MAX_ORDER)
        .map(|(l, _)| l.as_str())
        .collect();
    let mut summary = format!(
        "{} catalog groups with delta {delta}, each matched once; {} claimed groups found in the catalog",
        rows.len(),
        in_range.len()
    );
    if !beyond.is_empty() {
        summary.push_str(&format!(
            "; beyond order {CATALOG_MAX_ORDER} checked by construction only: {}",
            beyond.join(", ")
        ));
    }
    let check = PropertyCheck::new(
        format!("delta {delta}: catalog sweep up to order {CATALOG_MAX_ORDER}"),
        rows.len(),
        (!missing.is_empty()).then(|| {
            format!(
                "claimed groups not found exactly once: {}",
                missing.join(", ")
            )
        }),
        summary,
    );
    Ok((rows, check))
}

fn is_elementary_abelian_2(g: &GroupTable) -> bool {
    g.elements().all(|x| g.element_order(x) <= 2)
}

/// Deficiency 0 holds exactly for the elementary abelian 2-groups.
pub fn verify_delta_zero(catalog: &Catalog) -> VerificationReport {
    let mut report = VerificationReport::default();
    for (entry, group, c) in catalog.iter() {
        let elementary = is_elementary_abelian_2(group);
        if c.delta == 0 || elementary {
            report.sweep.push(SweepRow {
                order: entry.order,
                index: entry.index,
                label: entry.label.clone(),
                delta: c.delta,
                sigma: c.signature.clone(),
                matched: elementary.then(|| format!("C2^{}", entry.order.trailing_zeros())),
                pass: (c.delta == 0) == elementary,
            });
        }
    }
    report.seal()
}

/// Counts per order, contiguous indices and pairwise non-isomorphism within
/// each order.
pub fn catalog_validate(catalog: &Catalog) -> Result<VerificationReport> {
    let mut report = VerificationReport::default();
    let mut by_order: BTreeMap<usize, Vec<(&CatalogEntry, &GroupTable)>> = BTreeMap::new();
    for (entry, group, _) in catalog.iter() {
        by_order
            .entry(entry.order)
            .or_default()
            .push((entry, group));
    }
    if let Some(&order) = by_order.keys().find(|&&n| n == 0 || n > CATALOG_MAX_ORDER) {
        report.properties.push(PropertyCheck::new(
            format!("catalog order {order}"),
            0,
            Some(format!("order {order} is outside 1..={CATALOG_MAX_ORDER}")),
            "",
        ));
    }
    for order in 1..=CATALOG_MAX_ORDER {
        let members = by_order.get(&order).map(Vec::as_slice).unwrap_or(&[]);
        let expected = EXPECTED_COUNTS[order - 1];
        let mut failure = None;
        if members.len() != expected {
            failure = Some(format!(
                "order {order} has {} entries, expected {expected}",
                members.len()
            ));
        }
        let indices: Vec<usize> = members.iter().map(|(e, _)| e.index).collect();
        if failure.is_none() && indices != (1..=members.len()).collect::<Vec<_>>() {
            failure = Some(format!(
                "order {order} indices are {indices:?}, expected 1..={}",
                members.len()
            ));
        }
        if let Some((e, g)) = members.iter().find(|(e, g)| g.order() != e.order) {
            failure.get_or_insert_with(|| format!("{} closes to order {}", e.id(), g.order()));
        }
        for (i, (ea, a)) in members.iter().enumerate() {
            for (eb, b) in &members[i + 1..] {
                if is_isomorphic(a, b)? {
                    failure.get_or_insert_with(|| {
                        format!(
                            "order {order}: {} {} and {} {} are isomorphic",
                            ea.id(),
                            ea.label,
                            eb.id(),
                            eb.label
                        )
                    });
                }
            }
        }
        report.properties.push(PropertyCheck::new(
            format!("catalog order {order}"),
            members.len(),
            failure,
            format!("{expected} pairwise non-isomorphic types"),
        ));
    }
    Ok(report.seal())
}

/// Catalog entries up to `max_order`, optionally filtered by deficiency and
/// signature, with their census reports.
pub fn catalog_search<'c>(
    catalog: &'c Catalog,
    max_order: usize,
    delta: Option<usize>,
    sigma: Option<&Signature>,
) -> Result<Vec<(&'c CatalogEntry, &'c cycgroups_core::CensusReport)>> {
    if max_order > CATALOG_MAX_ORDER {
        return Err(Error::BeyondCatalog {
            requested: max_order,
            max: CATALOG_MAX_ORDER,
        });
    }
    Ok(catalog
        .iter()
        .filter(|(e, _, c)| {
            e.order <= max_order
                && delta.is_none_or(|d| c.delta == d)
                && sigma.is_none_or(|s| c.signature == *s)
        })
        .map(|(e, _, c)| (e, c))
        .collect())
}

/// The first failing case of `cases`, if any, and how many were examined.
fn first_failure<T>(
    cases: impl IntoIterator<Item = T>,
    mut check: impl FnMut(&T) -> Option<String>,
) -> (usize, Option<String>) {
    let mut count = 0;
    for case in cases {
        count += 1;
        if let Some(w) = check(&case) {
            return (count, Some(w));
        }
    }
    (count, None)
}

fn name_of(entry: &CatalogEntry) -> String {
    format!("{} {}", entry.id(), entry.label)
}

/// `Δ(G × C2) = 2Δ(G)` for catalog groups of order at most 12.
pub fn doubling_check(catalog: &Catalog) -> Result<PropertyCheck> {
    let c2 = make_cyclic(2)?;
    let (checked, failure) = first_failure(
        catalog.iter().filter(|(e, _, _)| e.order <= 12),
        |(e, g, c)| {
            let doubled = census(&direct_product(g, &c2).expect("order at most 24"));
            (doubled.delta != 2 * c.delta).then(|| {
                format!(
                    "{}: delta {} but {} after doubling",
                    name_of(e),
                    c.delta,
                    doubled.delta
                )
            })
        },
    );
    Ok(PropertyCheck::new(
        "doubling",
        checked,
        failure,
        "delta(G x C2) = 2 delta(G) for |G| <= 12",
    ))
}

fn n4(g: &GroupTable) -> usize {
    cyclic_subgroups(g).iter().filter(|h| h.len() == 4).count()
}

/// The four families a 2-group with an odd number of cyclic subgroups of
/// order 4 can belong to, at order `n`.
fn herzog_families(n: usize) -> Result<Vec<GroupTable>> {
    let mut out = vec![make_cyclic(n)?];
    if n >= 4 {
        out.push(make_dihedral(n)?);
    }
    if n >= 8 {
        out.push(make_dicyclic(n)?);
    }
    if n >= 16 {
        out.push(make_quasidihedral(n)?);
    }
    Ok(out)
}

/// 2-groups of order at most 16 with an odd number of cyclic subgroups of
/// order 4 are cyclic, dihedral, generalized quaternion or quasidihedral.
pub fn herzog_check(catalog: &Catalog) -> Result<PropertyCheck> {
    let mut checked = 0;
    let mut failure = None;
    for (e, g, _) in catalog.iter() {
        if !e.order.is_power_of_two() || e.order > 16 || n4(g).is_multiple_of(2) {
            continue;
        }
        checked += 1;
        let mut found = false;
        for f in herzog_families(e.order)? {
            found |= is_isomorphic(g, &f)?;
        }
        if !found {
            failure.get_or_insert_with(|| {
                format!(
                    "{} has {} cyclic subgroups of order 4 but lies in no family",
                    name_of(e),
                    n4(g)
                )
            });
        }
    }
    Ok(PropertyCheck::new(
        "herzog",
        checked,
        failure,
        "odd count of C4 in a 2-group of order <= 16 implies cyclic, dihedral, quaternion or quasidihedral",
    ))
}

/// The subgroup generated by one generator of each cyclic subgroup of order
/// above 2, taking the least element index that generates it.
pub fn from_h_subgroup(g: &GroupTable) -> Vec<Element> {
    let reps: Vec<Element> = cyclic_subgroups(g)
        .iter()
        .filter(|h| h.len() > 2)
        .map(|h| {
            *h.members()
                .iter()
                .find(|&&x| g.element_order(x) == h.len())
                .expect("a cyclic subgroup has a generator")
        })
        .collect();
    g.generated_subgroup(&reps).members().to_vec()
}

/// For catalog groups with deficiency 1 to 5, that subgroup has index 1 or 2.
///
/// Deficiency 0 is left out: there the signature is empty, the subgroup is
/// trivial, and the index is the whole order.
pub fn from_h_check(catalog: &Catalog) -> PropertyCheck {
    let (checked, failure) = first_failure(
        catalog
            .iter()
            .filter(|(_, _, c)| (1..=5).contains(&c.delta)),
        |(e, g, _)| {
            let index = g.order() / from_h_subgroup(g).len();
            (index > 2).then(|| format!("{}: index {index}", name_of(e)))
        },
    );
    PropertyCheck::new(
        "from_h",
        checked,
        failure,
        "index 1 or 2 for every catalog group with delta 1..=5",
    )
}

/// `|{x : x^n = 1}|` is a multiple of `n` for every `n` dividing `|G|`.
pub fn frobenius_check(catalog: &Catalog) -> PropertyCheck {
    let cases = catalog.iter().flat_map(|(e, g, _)| {
        (1..=e.order)
            .filter(move |n| e.order % n == 0)
            .map(move |n| (e, g, n))
    });
    let (checked, failure) = first_failure(cases, |&(e, g, n)| {
        let count = count_solutions(g, n);
        (!count.is_multiple_of(n))
            .then(|| format!("{}: {count} solutions of x^{n} = 1", name_of(e)))
    });
    PropertyCheck::new(
        "frobenius",
        checked,
        failure,
        "solution counts divisible by n for all n dividing |G|",
    )
}

/// Both counting identities on every catalog census.
pub fn identity_check(catalog: &Catalog) -> PropertyCheck {
    let (checked, failure) = first_failure(catalog.iter(), |(e, _, c)| {
        (!c.identities_hold()).then(|| format!("{}: counting identities fail", name_of(e)))
    });
    PropertyCheck::new(
        "identities",
        checked,
        failure,
        "sum n_d phi(d) = |G| and sum n_d (phi(d) - 1) = delta",
    )
}

/// With fewer than six cyclic subgroups of order 4, distinct elements `s, t`
/// of order 4 with `t s t⁻¹ ∈ ⟨s⟩` have `s² = t²`.
pub fn lemma_z_check(catalog: &Catalog) -> PropertyCheck {
    let mut checked = 0;
    let mut failure = None;
    for (e, g, _) in catalog.iter().filter(|(_, g, _)| n4(g) < 6) {
        let fours: Vec<Element> = g.elements().filter(|&x| g.element_order(x) == 4).collect();
        for &s in &fours {
            let span = [0, s, g.mul(s, s), g.inv(s)];
            for &t in fours.iter().filter(|&&t| t != s) {
                if !span.contains(&g.conjugate(t, s)) {
                    continue;
                }
                checked += 1;
                if g.mul(s, s) != g.mul(t, t) {
                    failure.get_or_insert_with(|| format!("{}: elements {s} and {t}", name_of(e)));
                }
            }
        }
    }
    PropertyCheck::new(
        "lemma_z",
        checked,
        failure,
        "s^2 = t^2 for every qualifying pair",
    )
}

/// `Δ(C_a) = Δ(D_2a) = φ(a) − 1` and `Δ(C_2a) = Δ(D_4a) = 2a − 4` for `a = 4`
/// and odd primes `a`, wherever the groups fit in a table. For odd primes
/// `φ(a) − 1 = a − 2`; at `a = 4` it is 1, not 2.
pub fn family_check() -> Result<PropertyCheck> {
    let mut checked = 0;
    let mut failure = None;
    for a in [3, 4, 5, 7, 11, 13, 17, 19, 23] {
        let single = euler_phi(a) - 1;
        let cases = [
            (make_cyclic(a), single),
            (make_dihedral(2 * a), single),
            (make_cyclic(2 * a), 2 * a - 4),
            (make_dihedral(4 * a), 2 * a - 4),
        ];
        for (group, expected) in cases {
            let g = match group {
                Ok(g) => g,
                Err(GroupError::OrderOverflow { .. }) => continue,
                Err(e) => return Err(e.into()),
            };
            checked += 1;
            let found = census(&g).delta;
            if found != expected {
                failure.get_or_insert_with(|| {
                    format!("{}: delta {found}, expected {expected}", g.name())
                });
            }
        }
    }
    Ok(PropertyCheck::new(
        "a_2a",
        checked,
        failure,
        "C_a, D_2a, C_2a, D_4a have the stated deficiencies",
    ))
}

/// No exclusion rule fires on the signature of a real group.
pub fn soundness_check(catalog: &Catalog) -> PropertyCheck {
    let (checked, failure) = first_failure(catalog.iter(), |(e, _, c)| {
        let verdict = apply_rules(&c.signature);
        verdict.excluded.then(|| {
            let fired: Vec<&str> = verdict.fired_rules.iter().map(|r| r.tag()).collect();
            format!(
                "{}: sigma {} excluded by {}",
                name_of(e),
                c.signature,
                fired.join(", ")
            )
        })
    });
    PropertyCheck::new(
        "exclusion_soundness",
        checked,
        failure,
        "no rule fires on a catalog signature",
    )
}

/// Every catalog signature with deficiency 1..=8 is an enumerated candidate.
pub fn candidate_soundness_check(catalog: &Catalog) -> Result<PropertyCheck> {
    let mut tables: BTreeMap<usize, BTreeSet<Signature>> = BTreeMap::new();
    for delta in 1..=8 {
        tables.insert(
            delta,
            enumerate_candidates(delta)?
                .into_iter()
                .map(|r| r.signature)
                .collect(),
        );
    }
    let (checked, failure) = first_failure(
        catalog
            .iter()
            .filter(|(_, _, c)| (1..=8).contains(&c.delta)),
        |(e, _, c)| {
            (!tables[&c.delta].contains(&c.signature)).then(|| {
                format!(
                    "{}: sigma {} is not a candidate for delta {}",
                    name_of(e),
                    c.signature,
                    c.delta
                )
            })
        },
    );
    Ok(PropertyCheck::new(
        "candidate_soundness",
        checked,
        failure,
        "catalog signatures appear among the candidates",
    ))
}

/// Every structural property over the catalog.
pub fn property_suite(catalog: &Catalog) -> Result<VerificationReport> {
    let report = VerificationReport {
        properties: vec![
            doubling_check(catalog)?,
            herzog_check(catalog)?,
            from_h_check(catalog),
            frobenius_check(catalog),
            identity_check(catalog),
            lemma_z_check(catalog),
            family_check()?,
            soundness_check(catalog),
            candidate_soundness_check(catalog)?,
        ],
        ..Default::default()
    };
    Ok(report.seal())
}

/// All five theorems, deficiency 0, catalog validation and the property
/// suite.
pub fn verify_all(catalog: &Catalog) -> Result<VerificationReport> {
    let mut report = VerificationReport::default();
    for delta in 1..=5 {
        report = report.merge(verify_theorem(delta, catalog)?);
    }
    Ok(report
        .merge(verify_delta_zero(catalog))
        .merge(catalog_validate(catalog)?)
        .merge(property_suite(catalog)?))
}

/// A catalog group offered as evidence for a signature.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub order: usize,
    pub index: usize,
    pub label: String,
    pub delta: usize,
    pub sigma: Signature,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SurvivorRow {
    pub signature: Signature,
    /// `classified` for deficiencies 1..=5, `undecided` above.
    pub status: &'static str,
    /// Groups proven to be the only ones with this signature, when known.
    pub known: Vec<String>,
    pub witnesses: Vec<Witness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Exploration {
    pub delta: usize,
    pub candidates: usize,
    pub excluded: usize,
    pub survivors: Vec<SurvivorRow>,
    /// Catalog groups with this deficiency whose signature did not survive;
    /// any entry here means a rule is unsound.
    pub contradictions: Vec<Witness>,
    pub consistent: bool,
}

/// Runs the enumerator and exclusion rules at `delta` and pairs each
/// surviving signature with the catalog groups that carry it.
pub fn explore(delta: usize, catalog: &Catalog) -> Result<Exploration> {
    let rows = classify_candidates(delta)?;
    let status = if delta <= 5 {
        "classified"
    } else {
        "undecided"
    };
    let witnesses: Vec<Witness> = catalog
        .iter()
        .filter(|(_, _, c)| c.delta == delta)
        .map(|(e, _, c)| Witness {
            order: e.order,
            index: e.index,
            label: e.label.clone(),
            delta: c.delta,
            sigma: c.signature.clone(),
        })
        .collect();
    let survivors: Vec<SurvivorRow> = rows
        .iter()
        .filter(|(_, v)| !v.excluded)
        .map(|(row, _)| SurvivorRow {
            signature: row.signature.clone(),
            status,
            known: known_groups_for(&row.signature)
                .map(|gs| gs.iter().map(|g| g.label()).collect())
                .unwrap_or_default(),
            witnesses: witnesses
                .iter()
                .filter(|w| w.sigma == row.signature)
                .cloned()
                .collect(),
        })
        .collect();
    let contradictions: Vec<Witness> = witnesses
        .iter()
        .filter(|w| !survivors.iter().any(|s| s.signature == w.sigma))
        .cloned()
        .collect();
    Ok(Exploration {
        delta,
        candidates: rows.len(),
        excluded: rows.iter().filter(|(_, v)| v.excluded).count(),
        consistent: contradictions.is_empty(),
        survivors,
        contradictions,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use cycgroups_core::make_dihedral;

    fn sig(s: &str) -> Signature {
        s.parse().unwrap()
    }

    #[test]
    fn from_h_on_d12() {
        let d12 = make_dihedral(12).unwrap();
        let h = from_h_subgroup(&d12);
        assert_eq!(h.len(), 6);
        let sub = d12.generated_subgroup(&h).to_group("H");
        assert!(is_isomorphic(&sub, &make_cyclic(6).unwrap()).unwrap());
    }

    #[test]
    fn doubling_on_d8() {
        let d8 = make_dihedral(8).unwrap();
        assert_eq!(census(&d8).delta, 1);
        let doubled = direct_product(&d8, &make_cyclic(2).unwrap()).unwrap();
        assert_eq!(census(&doubled).delta, 2);
    }

    #[test]
    fn q8_is_in_the_herzog_families() {
        let q8 = make_dicyclic(8).unwrap();
        assert_eq!(n4(&q8), 3);
        assert!(herzog_families(8)
            .unwrap()
            .iter()
            .any(|f| is_isomorphic(&q8, f).unwrap()));
    }

    #[test]
    fn theorem_one() {
        let report = verify_theorem(1, Catalog::bundled()).unwrap();
        assert!(report.pass, "{:?}", report.failures());
        assert_eq!(report.claims.len(), 4);
        assert!(verify_theorem(6, Catalog::bundled()).is_err());
    }

    #[test]
    fn failures_are_reported() {
        let mut report = VerificationReport::default();
        report
            .properties
            .push(PropertyCheck::new("x", 1, Some("witness".into()), ""));
        let report = report.seal();
        assert!(!report.pass);
        assert_eq!(report.failures(), ["x: witness"]);
    }

    #[test]
    fn search_filters() {
        let cat = Catalog::bundled();
        let zero: Vec<&str> = catalog_search(cat, 24, Some(0), None)
            .unwrap()
            .iter()
            .map(|(e, _)| e.label.as_str())
            .collect();
        assert_eq!(zero, ["C1", "C2", "C2xC2", "C2xC2xC2", "C2xC2xC2xC2"]);
        assert_eq!(
            catalog_search(cat, 16, None, Some(&sig("4,4,4,4")))
                .unwrap()
                .len(),
            3
        );
        assert!(matches!(
            catalog_search(cat, 25, None, None),
            Err(Error::BeyondCatalog { .. })
        ));
    }
}
