//! Candidate signatures for a given deficiency.
//!
//! The census identity `Σ n_d (φ(d) − 1) = Δ` splits `Δ` into one part per
//! order `d > 2` that occurs. Each part `p` factors as `n_d · m` with
//! `m = φ(d) − 1` odd, so a candidate is a partition of `Δ` plus one
//! `(n_d, d)` choice per part with pairwise distinct `d`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::census::{euler_phi, phi_inverse, Signature};
use crate::error::{GroupError, Result};

pub const MAX_PARTITION_DELTA: usize = 64;
pub const MAX_CANDIDATE_DELTA: usize = 16;

/// One candidate signature and the partition it comes from.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct CandidateRow {
    /// Non-increasing parts summing to the deficiency.
    pub partition: Vec<usize>,
    /// Per part, the pair `(n_d, φ(d) − 1)`.
    pub factorization: Vec<(usize, usize)>,
    pub signature: Signature,
}

fn check_delta(delta: usize, max: usize) -> Result<()> {
    if (1..=max).contains(&delta) {
        Ok(())
    } else {
        Err(GroupError::DeltaOutOfRange {
            value: delta,
            min: 1,
            max,
        })
    }
}

/// All partitions of `delta` into non-increasing parts, in reverse
/// lexicographic order (`[4], [3,1], [2,2], [2,1,1], [1,1,1,1]`).
pub fn integer_partitions(delta: usize) -> Result<Vec<Vec<usize>>> {
    check_delta(delta, MAX_PARTITION_DELTA)?;
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill_partitions(delta, delta, &mut current, &mut out);
    Ok(out)
}

fn fill_partitions(
    remaining: usize,
    max_part: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if remaining == 0 {
        out.push(current.clone());
        return;
    }
    for part in (1..=max_part.min(remaining)).rev() {
        current.push(part);
        fill_partitions(remaining - part, part, current, out);
        current.pop();
    }
}

/// The `(n_d, d)` choices for a single part `p`: for each odd divisor `m` of
/// `p` (ascending) and each `d` with `φ(d) = m + 1`, the option `(p/m, d)`.
pub fn expand_part(p: usize) -> Vec<(usize, usize)> {
    let mut options = Vec::new();
    for m in (1..=p).step_by(2).filter(|m| p.is_multiple_of(*m)) {
        for d in phi_inverse(m + 1) {
            options.push((p / m, d));
        }
    }
    options
}

/// Every candidate signature for `delta`, deduplicated and sorted by
/// signature.
pub fn enumerate_candidates(delta: usize) -> Result<Vec<CandidateRow>> {
    check_delta(delta, MAX_CANDIDATE_DELTA)?;
    let mut rows: BTreeMap<Signature, CandidateRow> = BTreeMap::new();
    for partition in integer_partitions(delta)? {
        let options: Vec<Vec<(usize, usize)>> = partition.iter().map(|&p| expand_part(p)).collect();
        let mut chosen = Vec::with_capacity(partition.len());
        choose(&partition, &options, &mut chosen, &mut rows);
    }
    Ok(rows.into_values().collect())
}

fn choose(
    partition: &[usize],
    options: &[Vec<(usize, usize)>],
    chosen: &mut Vec<(usize, usize)>,
    rows: &mut BTreeMap<Signature, CandidateRow>,
) {
    let depth = chosen.len();
    if depth == partition.len() {
        let mut entries = Vec::new();
        for &(count, d) in chosen.iter() {
            entries.extend(core::iter::repeat_n(d, count));
        }
        let signature = Signature::new(entries).expect("every d is above 2");
        let factorization = chosen
            .iter()
            .map(|&(count, d)| (count, euler_phi(d) - 1))
            .collect();
        rows.entry(signature.clone())
            .or_insert_with(|| CandidateRow {
                partition: partition.to_vec(),
                factorization,
                signature,
            });
        return;
    }
    for &(count, d) in &options[depth] {
        if chosen.iter().any(|&(_, used)| used == d) {
            continue;
        }
        chosen.push((count, d));
        choose(partition, options, chosen, rows);
        chosen.pop();
    }
}
