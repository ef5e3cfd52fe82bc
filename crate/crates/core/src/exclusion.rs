//! Rules that rule out candidate signatures.
//!
//! Each rule encodes a nonexistence argument: if its predicate holds for a
//! signature, no finite group has that signature. Rules are evaluated
//! exhaustively so a verdict lists every rule that fires.

use alloc::vec::Vec;
use core::fmt;

use crate::census::Signature;
use crate::enumerate::{enumerate_candidates, CandidateRow};
use crate::error::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum RuleId {
    NoCn,
    Sylow,
    CoprimeProduct,
    Les1,
    Les2,
    Lemma366,
    LemmaR,
    Odd4s,
    Lemma33336,
    Lemma36666,
    Lemma445,
    Lemma448,
    Lemma34466a,
}

impl RuleId {
    pub fn tag(self) -> &'static str {
        match self {
            RuleId::NoCn => "no_cn",
            RuleId::Sylow => "sylow",
            RuleId::CoprimeProduct => "coprime_product",
            RuleId::Les1 => "les1",
            RuleId::Les2 => "les2",
            RuleId::Lemma366 => "lemma366",
            RuleId::LemmaR => "lemma_r",
            RuleId::Odd4s => "odd_4s",
            RuleId::Lemma33336 => "lemma33336",
            RuleId::Lemma36666 => "lemma36666",
            RuleId::Lemma445 => "lemma445",
            RuleId::Lemma448 => "lemma448",
            RuleId::Lemma34466a => "lemma34466a",
        }
    }

    pub fn rule(self) -> &'static ExclusionRule {
        &RULES[self as usize]
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// A named nonexistence argument over signatures.
pub struct ExclusionRule {
    pub id: RuleId,
    pub description: &'static str,
    /// Where the argument comes from: the argument it encodes.
    pub anchor: &'static str,
    /// `true` means the signature is impossible.
    pub predicate: fn(&Signature) -> bool,
}

impl fmt::Debug for ExclusionRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ExclusionRule")
            .field("id", &self.id)
            .finish_non_exhaustive()
    }
}

fn is_prime(n: usize) -> bool {
    n >= 2
        && (2..)
            .take_while(|p| p * p <= n)
            .all(|p| !n.is_multiple_of(p))
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Smallest `n > 2` dividing an entry but missing from the signature.
pub fn missing_divisor(sig: &Signature) -> Option<usize> {
    sig.entries()
        .iter()
        .flat_map(|&m| (3..=m).filter(move |n| m % n == 0))
        .filter(|&n| !sig.contains(n))
        .min()
}

fn no_cn(sig: &Signature) -> bool {
    missing_divisor(sig).is_some()
}

fn sylow(sig: &Signature) -> bool {
    let max = sig.entries().last().copied().unwrap_or(0);
    (3..=max)
        .filter(|&p| is_prime(p) && sig.entries().iter().any(|&m| m % p == 0))
        .any(|p| sig.multiplicity(p) % p != 1)
}

fn coprime_product(sig: &Signature) -> bool {
    let singles: Vec<usize> = sig
        .counts()
        .into_iter()
        .filter(|&(_, n)| n == 1)
        .map(|(d, _)| d)
        .collect();
    singles.iter().enumerate().any(|(i, &a)| {
        singles[i + 1..]
            .iter()
            .any(|&b| gcd(a, b) == 1 && !sig.contains(a * b))
    })
}

fn les1(sig: &Signature) -> bool {
    sig.multiplicity(3) == 1 && sig.contains(4) && !sig.contains(6)
}

fn les2(sig: &Signature) -> bool {
    sig.multiplicity(4) == 2 && sig.contains(3) && !sig.contains(12)
}

fn lemma366(sig: &Signature) -> bool {
    sig.multiplicity(3) == 1 && sig.multiplicity(6) == 2
}

fn lemma_r(sig: &Signature) -> bool {
    sig.multiplicity(4) == 1 && sig.contains(3) && !sig.contains(12)
}

fn odd_4s(sig: &Signature) -> bool {
    let n = sig.len();
    n > 0 && sig.multiplicity(4) == n && n % 2 == 1 && n != 1 && n != 3
}

fn lemma33336(sig: &Signature) -> bool {
    sig.multiplicity(6) == 1 && sig.multiplicity(3) >= 2
}

fn exact(sig: &Signature, pattern: &[usize]) -> bool {
    sig.entries() == pattern
}

static RULES: [ExclusionRule; 13] = [
    ExclusionRule {
        id: RuleId::NoCn,
        description: "an entry m has a divisor n > 2 that is not itself an entry",
        anchor: "No C_n: a cyclic subgroup of order m contains one of each order dividing m",
        predicate: no_cn,
    },
    ExclusionRule {
        id: RuleId::Sylow,
        description: "an odd prime p divides an entry but p occurs a number of times not congruent to 1 mod p",
        anchor: "Sylow: Frobenius' count of subgroups of prime order p",
        predicate: sylow,
    },
    ExclusionRule {
        id: RuleId::CoprimeProduct,
        description: "two coprime entries a, b each occur once but ab is not an entry",
        anchor: "unique cyclic subgroups of coprime orders a, b give an element of order ab",
        predicate: coprime_product,
    },
    ExclusionRule {
        id: RuleId::Les1,
        description: "3 occurs once, 4 occurs, 6 does not",
        anchor: "lemma les1: a C4 and a unique C3 give an element of order 6",
        predicate: les1,
    },
    ExclusionRule {
        id: RuleId::Les2,
        description: "4 occurs exactly twice, 3 occurs, 12 does not",
        anchor: "lemma les2: exactly two C4 and a C3 give an element of order 12",
        predicate: les2,
    },
    ExclusionRule {
        id: RuleId::Lemma366,
        description: "3 occurs once and 6 occurs exactly twice",
        anchor: "lemma 366: no group has exactly two C6 and a unique C3",
        predicate: lemma366,
    },
    ExclusionRule {
        id: RuleId::LemmaR,
        description: "4 occurs once, 3 occurs, 12 does not",
        anchor: "lemma r: a unique C4 and a C3 give an element of order 12",
        predicate: lemma_r,
    },
    ExclusionRule {
        id: RuleId::Odd4s,
        description: "only 4s, an odd number of them other than 1 or 3",
        anchor: "odd_4s: an odd count of C4 and nothing larger forces C4, D8 or Q8",
        predicate: odd_4s,
    },
    ExclusionRule {
        id: RuleId::Lemma33336,
        description: "6 occurs once and 3 occurs at least twice",
        anchor: "lemma 33336: a normal C6 and a disjoint C3 give C6 x C3, with four C6",
        predicate: lemma33336,
    },
    ExclusionRule {
        id: RuleId::Lemma36666,
        description: "exactly (3,6,6,6,6)",
        anchor: "ad hoc: no group has signature (3,6,6,6,6)",
        predicate: |s| exact(s, &[3, 6, 6, 6, 6]),
    },
    ExclusionRule {
        id: RuleId::Lemma445,
        description: "exactly (4,4,5)",
        anchor: "ad hoc: no group has signature (4,4,5)",
        predicate: |s| exact(s, &[4, 4, 5]),
    },
    ExclusionRule {
        id: RuleId::Lemma448,
        description: "exactly (4,4,8)",
        anchor: "ad hoc: no group has signature (4,4,8)",
        predicate: |s| exact(s, &[4, 4, 8]),
    },
    ExclusionRule {
        id: RuleId::Lemma34466a,
        description: "exactly (3,4,4,6,6)",
        anchor: "ad hoc: no group has signature (3,4,4,6,6)",
        predicate: |s| exact(s, &[3, 4, 4, 6, 6]),
    },
];

/// The rules in evaluation order.
pub fn rule_registry() -> &'static [ExclusionRule] {
    &RULES
}

/// Outcome of running every rule on one signature.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Verdict {
    pub signature: Signature,
    pub excluded: bool,
    pub fired_rules: Vec<RuleId>,
    /// The rule the published exclusion tables give for this signature, for
    /// deficiencies 1 through 5.
    pub cited_rule: Option<RuleId>,
}

pub fn apply_rules(sig: &Signature) -> Verdict {
    let fired_rules: Vec<RuleId> = RULES
        .iter()
        .filter(|r| (r.predicate)(sig))
        .map(|r| r.id)
        .collect();
    Verdict {
        signature: sig.clone(),
        excluded: !fired_rules.is_empty(),
        fired_rules,
        cited_rule: cited_rule(sig),
    }
}

/// Verdicts for every candidate of `delta`, in candidate order.
pub fn classify_candidates(delta: usize) -> Result<Vec<(CandidateRow, Verdict)>> {
    Ok(enumerate_candidates(delta)?
        .into_iter()
        .map(|row| {
            let verdict = apply_rules(&row.signature);
            (row, verdict)
        })
        .collect())
}

/// Candidates of `delta` that no rule excludes, sorted.
pub fn revised_table(delta: usize) -> Result<Vec<Signature>> {
    Ok(classify_candidates(delta)?
        .into_iter()
        .filter(|(_, v)| !v.excluded)
        .map(|(row, _)| row.signature)
        .collect())
}

use RuleId::*;

/// Exclusion tables for deficiencies 1..=5: each excluded signature with the
/// argument the published tables give for it.
static CITATIONS: &[(&[usize], RuleId)] = &[
    // 1
    (&[6], NoCn),
    // 2
    (&[3, 3], Sylow),
    (&[6, 6], NoCn),
    (&[3, 4], CoprimeProduct),
    (&[4, 6], NoCn),
    // 3
    (&[3, 3, 3], Sylow),
    (&[6, 6, 6], NoCn),
    (&[8], NoCn),
    (&[10], NoCn),
    (&[12], NoCn),
    (&[3, 3, 4], Sylow),
    (&[3, 3, 6], Sylow),
    (&[3, 4, 4], Les1),
    (&[4, 4, 6], NoCn),
    (&[3, 6, 6], Lemma366),
    (&[4, 6, 6], NoCn),
    (&[3, 4, 6], CoprimeProduct),
    // 4
    (&[6, 6, 6, 6], NoCn),
    (&[3, 3, 3, 4], Sylow),
    (&[3, 3, 3, 6], Sylow),
    (&[3, 4, 4, 4], Les1),
    (&[4, 4, 4, 6], NoCn),
    (&[4, 6, 6, 6], NoCn),
    (&[3, 5], CoprimeProduct),
    (&[4, 5], CoprimeProduct),
    (&[5, 6], NoCn),
    (&[3, 8], NoCn),
    (&[6, 8], NoCn),
    (&[3, 10], NoCn),
    (&[4, 10], NoCn),
    (&[6, 10], NoCn),
    (&[3, 12], NoCn),
    (&[4, 12], NoCn),
    (&[6, 12], NoCn),
    (&[3, 3, 4, 4], Sylow),
    (&[3, 3, 6, 6], Sylow),
    (&[4, 4, 6, 6], NoCn),
    (&[3, 3, 4, 6], Sylow),
    (&[3, 4, 4, 6], Les2),
    (&[3, 4, 6, 6], CoprimeProduct),
    // 5
    (&[9], NoCn),
    (&[14], NoCn),
    (&[18], NoCn),
    (&[3, 3, 3, 3, 3], Sylow),
    (&[4, 4, 4, 4, 4], Odd4s),
    (&[6, 6, 6, 6, 6], NoCn),
    (&[3, 3, 3, 3, 4], LemmaR),
    (&[3, 3, 3, 3, 6], Lemma33336),
    (&[3, 4, 4, 4, 4], Les1),
    (&[4, 4, 4, 4, 6], NoCn),
    (&[3, 6, 6, 6, 6], Lemma36666),
    (&[4, 6, 6, 6, 6], NoCn),
    (&[3, 3, 3, 4, 4], Sylow),
    (&[3, 3, 3, 6, 6], Sylow),
    (&[3, 3, 4, 4, 4], Sylow),
    (&[4, 4, 4, 6, 6], NoCn),
    (&[3, 3, 6, 6, 6], Sylow),
    (&[4, 4, 6, 6, 6], NoCn),
    (&[3, 3, 5], Sylow),
    (&[4, 4, 5], Lemma445),
    (&[5, 6, 6], NoCn),
    (&[3, 3, 8], NoCn),
    (&[4, 4, 8], Lemma448),
    (&[6, 6, 8], NoCn),
    (&[3, 3, 10], NoCn),
    (&[4, 4, 10], NoCn),
    (&[6, 6, 10], NoCn),
    (&[3, 3, 12], NoCn),
    (&[4, 4, 12], NoCn),
    (&[6, 6, 12], NoCn),
    (&[3, 3, 3, 4, 6], Sylow),
    (&[3, 4, 6, 6, 6], CoprimeProduct),
    (&[3, 4, 5], CoprimeProduct),
    (&[3, 5, 6], CoprimeProduct),
    (&[4, 5, 6], NoCn),
    (&[3, 4, 8], CoprimeProduct),
    (&[3, 6, 8], CoprimeProduct),
    (&[4, 6, 8], NoCn),
    (&[3, 4, 10], NoCn),
    (&[3, 6, 10], NoCn),
    (&[4, 6, 10], NoCn),
    (&[3, 4, 12], NoCn),
    (&[3, 6, 12], NoCn),
    (&[4, 6, 12], NoCn),
    (&[3, 3, 4, 4, 6], Sylow),
    (&[3, 3, 4, 6, 6], Sylow),
    (&[3, 4, 4, 6, 6], Lemma34466a),
];

/// The argument the published tables cite for an excluded signature of
/// deficiency at most 5.
pub fn cited_rule(sig: &Signature) -> Option<RuleId> {
    CITATIONS
        .iter()
        .find(|(entries, _)| *entries == sig.entries())
        .map(|&(_, id)| id)
}

/// Every signature the published exclusion tables list for `delta` (1..=5).
pub fn cited_exclusions(delta: usize) -> Vec<Signature> {
    let mut out: Vec<Signature> = CITATIONS
        .iter()
        .map(|(entries, _)| Signature::new(entries.to_vec()).expect("static entries are valid"))
        .filter(|s| s.implied_delta() == delta)
        .collect();
    out.sort();
    out
}
