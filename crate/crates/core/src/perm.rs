//! Permutations of `0..degree` with cycle-notation parsing and printing.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{GroupError, Result};

/// A bijection on `0..degree`, stored as its image table.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Self {
            images: (0..degree).collect(),
        }
    }

    /// Builds a permutation from its image table, rejecting anything that is
    /// not a bijection.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let degree = images.len();
        let mut seen = alloc::vec![false; degree];
        for &i in &images {
            if i >= degree || seen[i] {
                return Err(GroupError::InvalidPermutation(format!(
                    "image table {images:?} is not a bijection"
                )));
            }
            seen[i] = true;
        }
        Ok(Self { images })
    }

    /// Parses cycle notation such as `(0 1 2)(3 4)`. Points are 0-based and
    /// may be separated by spaces or commas; `()` or the empty string is the
    /// identity. With `degree = None` the degree is one more than the largest
    /// point mentioned.
    pub fn parse_cycles(text: &str, degree: Option<usize>) -> Result<Self> {
        let bad = |msg: &str| GroupError::InvalidPermutation(format!("{msg} in {text:?}"));
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            let body = rest.strip_prefix('(').ok_or_else(|| bad("expected '('"))?;
            let close = body.find(')').ok_or_else(|| bad("unclosed cycle"))?;
            let mut cycle = Vec::new();
            for tok in body[..close].split(|c: char| c == ',' || c.is_whitespace()) {
                if tok.is_empty() {
                    continue;
                }
                let point: usize = tok.parse().map_err(|_| bad("bad point"))?;
                cycle.push(point);
            }
            cycles.push(cycle);
            rest = body[close + 1..].trim_start();
        }

        let needed = cycles.iter().flatten().map(|&p| p + 1).max().unwrap_or(0);
        let degree = match degree {
            Some(d) if d < needed => return Err(bad("point exceeds degree")),
            Some(d) => d,
            None => needed,
        };
        let mut images: Vec<usize> = (0..degree).collect();
        let mut touched = alloc::vec![false; degree];
        for cycle in &cycles {
            for (k, &p) in cycle.iter().enumerate() {
                if touched[p] {
                    return Err(bad("point repeated across cycles"));
                }
                touched[p] = true;
                images[p] = cycle[(k + 1) % cycle.len()];
            }
        }
        Ok(Self { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Self) -> Self {
        debug_assert_eq!(self.degree(), other.degree());
        Self {
            images: other.images.iter().map(|&j| self.images[j]).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut images = alloc::vec![0; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Self { images }
    }

    /// Extends the permutation to a larger degree, fixing the new points.
    pub fn padded(&self, degree: usize) -> Self {
        let mut images = self.images.clone();
        images.extend(self.degree()..degree.max(self.degree()));
        Self { images }
    }

    /// Disjoint cycles of length at least 2, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = alloc::vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cycle.push(p);
                p = self.images[p];
            }
            out.push(cycle);
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles {
            f.write_str("(")?;
            for (k, p) in cycle.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{p}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse_cycles(s, None)
    }
}

/// Pads every permutation to the largest degree in the list.
pub fn pad_to_common_degree(perms: &[Permutation]) -> Vec<Permutation> {
    let degree = perms.iter().map(Permutation::degree).max().unwrap_or(0);
    perms.iter().map(|p| p.padded(degree)).collect()
}

pub(crate) fn join_cycles(perms: &[Permutation]) -> String {
    let parts: Vec<String> = perms.iter().map(|p| format!("{p}")).collect();
    parts.join(";")
}
