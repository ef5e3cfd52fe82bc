//! Construction recipes for the groups that realise each surviving signature,
//! and the classification claims for deficiencies 1 through 5.

use alloc::boxed::Box;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::action::{inversion_action, semidirect_product};
use crate::census::Signature;
use crate::construct::*;
use crate::error::{GroupError, Result};
use crate::group::GroupTable;

/// A way to build a group from the kernel constructors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Recipe {
    Cyclic(usize),
    Dihedral(usize),
    Dicyclic(usize),
    Quasidihedral(usize),
    Symmetric(usize),
    Alternating(usize),
    Direct(Box<Recipe>, Box<Recipe>),
    /// `N ⋊ C_2` with the generator acting by inversion on an abelian `N`.
    InversionExtension(Box<Recipe>),
    /// `(C_2 × C_2) ⋊ C_4` with `c: a ↦ a, b ↦ ab`.
    KleinByCyclic4,
    /// `Q_8 ⋊ C_2` with `c: a ↦ a, b ↦ a²b`.
    QuaternionByCyclic2,
}

impl Recipe {
    pub fn direct(a: Recipe, b: Recipe) -> Self {
        Recipe::Direct(Box::new(a), Box::new(b))
    }

    pub fn inversion(base: Recipe) -> Self {
        Recipe::InversionExtension(Box::new(base))
    }

    pub fn build(&self) -> Result<GroupTable> {
        let g = match self {
            Recipe::Cyclic(n) => make_cyclic(*n)?,
            Recipe::Dihedral(n) => make_dihedral(*n)?,
            Recipe::Dicyclic(n) => make_dicyclic(*n)?,
            Recipe::Quasidihedral(n) => make_quasidihedral(*n)?,
            Recipe::Symmetric(n) => make_symmetric(*n)?,
            Recipe::Alternating(n) => make_alternating(*n)?,
            Recipe::Direct(a, b) => direct_product(&a.build()?, &b.build()?)?,
            Recipe::InversionExtension(base) => {
                semidirect_product(&inversion_action(&base.build()?)?)?
            }
            Recipe::KleinByCyclic4 => klein_by_cyclic4()?,
            Recipe::QuaternionByCyclic2 => quaternion_by_cyclic2()?,
        };
        Ok(g.with_name(self.label()))
    }

    /// Display name, e.g. `(C3 x C3) : C2`.
    pub fn label(&self) -> String {
        format!("{self}")
    }

    /// Expected order without building the table.
    pub fn order(&self) -> usize {
        match self {
            Recipe::Cyclic(n)
            | Recipe::Dihedral(n)
            | Recipe::Dicyclic(n)
            | Recipe::Quasidihedral(n) => *n,
            Recipe::Symmetric(n) => (1..=*n).product(),
            Recipe::Alternating(n) => ((1..=*n).product::<usize>() / 2).max(1),
            Recipe::Direct(a, b) => a.order() * b.order(),
            Recipe::InversionExtension(base) => 2 * base.order(),
            Recipe::KleinByCyclic4 | Recipe::QuaternionByCyclic2 => 16,
        }
    }
}

impl fmt::Display for Recipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Recipe::Cyclic(n) => write!(f, "C{n}"),
            Recipe::Dihedral(n) => write!(f, "D{n}"),
            Recipe::Dicyclic(8) => f.write_str("Q8"),
            Recipe::Dicyclic(12) => f.write_str("C3 : C4"),
            Recipe::Dicyclic(n) => write!(f, "Q{n}"),
            Recipe::Quasidihedral(n) => write!(f, "SD{n}"),
            Recipe::Symmetric(n) => write!(f, "S{n}"),
            Recipe::Alternating(n) => write!(f, "A{n}"),
            Recipe::Direct(a, b) => {
                let wrap = |r: &Recipe| matches!(r, Recipe::InversionExtension(_));
                if wrap(a) {
                    write!(f, "({a})")?;
                } else {
                    write!(f, "{a}")?;
                }
                f.write_str(" x ")?;
                if wrap(b) || matches!(**b, Recipe::Direct(..)) {
                    write!(f, "({b})")
                } else {
                    write!(f, "{b}")
                }
            }
            Recipe::InversionExtension(base) => match **base {
                Recipe::Direct(..) => write!(f, "({base}) : C2"),
                _ => write!(f, "{base} : C2"),
            },
            Recipe::KleinByCyclic4 => f.write_str("(C2 x C2) : C4"),
            Recipe::QuaternionByCyclic2 => f.write_str("Q8 : C2"),
        }
    }
}

/// One group named by a classification theorem and the signature it carries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClaimedGroup {
    pub recipe: Recipe,
    pub signature: Signature,
}

/// The complete list of groups with a given deficiency.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremClaim {
    pub delta: usize,
    pub groups: Vec<ClaimedGroup>,
}

fn sig(entries: &[usize]) -> Signature {
    Signature::new(entries.to_vec()).expect("static signatures are valid")
}

fn c(n: usize) -> Recipe {
    Recipe::Cyclic(n)
}

fn d(n: usize) -> Recipe {
    Recipe::Dihedral(n)
}

fn x(a: Recipe, b: Recipe) -> Recipe {
    Recipe::direct(a, b)
}

fn claim(delta: usize, groups: Vec<(Recipe, &[usize])>) -> TheoremClaim {
    TheoremClaim {
        delta,
        groups: groups
            .into_iter()
            .map(|(recipe, entries)| ClaimedGroup {
                recipe,
                signature: sig(entries),
            })
            .collect(),
    }
}

/// The five classification statements, deficiency 1 through 5, with 25
/// groups in total.
pub fn theorem_claims() -> Vec<TheoremClaim> {
    alloc::vec![
        claim(
            1,
            alloc::vec![
                (c(3), &[3][..]),
                (c(4), &[4]),
                (Recipe::Symmetric(3), &[3]),
                (d(8), &[4]),
            ],
        ),
        claim(
            2,
            alloc::vec![
                (x(c(4), c(2)), &[4, 4][..]),
                (x(d(8), c(2)), &[4, 4]),
                (c(6), &[3, 6]),
                (d(12), &[3, 6]),
            ],
        ),
        claim(
            3,
            alloc::vec![
                (Recipe::Dicyclic(8), &[4, 4, 4][..]),
                (c(5), &[5]),
                (d(10), &[5])
            ],
        ),
        claim(
            4,
            alloc::vec![
                (x(x(c(4), c(2)), c(2)), &[4, 4, 4, 4][..]),
                (x(x(c(2), c(2)), d(8)), &[4, 4, 4, 4]),
                (Recipe::KleinByCyclic4, &[4, 4, 4, 4]),
                (Recipe::QuaternionByCyclic2, &[4, 4, 4, 4]),
                (x(c(3), c(3)), &[3, 3, 3, 3]),
                (Recipe::inversion(x(c(3), c(3))), &[3, 3, 3, 3]),
                (Recipe::Alternating(4), &[3, 3, 3, 3]),
                (x(c(6), c(2)), &[3, 6, 6, 6]),
                (x(x(c(2), c(2)), Recipe::Symmetric(3)), &[3, 6, 6, 6]),
                (c(8), &[4, 8]),
                (d(16), &[4, 8]),
            ],
        ),
        claim(
            5,
            alloc::vec![
                (c(7), &[7][..]),
                (d(14), &[7]),
                (Recipe::Dicyclic(12), &[3, 4, 4, 4, 6])
            ],
        ),
    ]
}

fn is_odd_prime(n: usize) -> bool {
    n >= 3
        && n % 2 == 1
        && (3..)
            .step_by(2)
            .take_while(|p| p * p <= n)
            .all(|p| !n.is_multiple_of(p))
}

/// Every isomorphism type known to realise `sig`.
///
/// Covers the surviving signatures for deficiency 1 through 5 and the two
/// infinite families `(a)` and `(a, 2a)` with `a = 4` or an odd prime.
/// Anything else is [`GroupError::Unclassified`].
pub fn known_groups_for(signature: &Signature) -> Result<Vec<Recipe>> {
    let e = signature.entries();
    let family = |a: usize| a == 4 || is_odd_prime(a);
    let groups = match e {
        [a] if family(*a) => alloc::vec![c(*a), d(2 * a)],
        [a, b] if *b == 2 * a && family(*a) => alloc::vec![c(*b), d(2 * b)],
        [4, 4] => alloc::vec![x(c(4), c(2)), x(d(8), c(2))],
        [4, 4, 4] => alloc::vec![Recipe::Dicyclic(8)],
        [3, 3, 3, 3] => alloc::vec![
            x(c(3), c(3)),
            Recipe::inversion(x(c(3), c(3))),
            Recipe::Alternating(4)
        ],
        [4, 4, 4, 4] => alloc::vec![
            x(x(c(4), c(2)), c(2)),
            x(x(c(2), c(2)), d(8)),
            Recipe::KleinByCyclic4,
            Recipe::QuaternionByCyclic2,
        ],
        [3, 6, 6, 6] => alloc::vec![x(c(6), c(2)), x(x(c(2), c(2)), Recipe::Symmetric(3))],
        [3, 4, 4, 4, 6] => alloc::vec![Recipe::Dicyclic(12)],
        _ => return Err(GroupError::Unclassified(signature.clone())),
    };
    Ok(groups)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::census::census;

    #[test]
    fn claim_sizes() {
        let sizes: Vec<usize> = theorem_claims().iter().map(|c| c.groups.len()).collect();
        assert_eq!(sizes, [4, 4, 3, 11, 3]);
    }

    #[test]
    fn labels() {
        let labels: Vec<String> = theorem_claims()[3]
            .groups
            .iter()
            .map(|g| g.recipe.label())
            .collect();
        assert_eq!(
            labels,
            [
                "C4 x C2 x C2",
                "C2 x C2 x D8",
                "(C2 x C2) : C4",
                "Q8 : C2",
                "C3 x C3",
                "(C3 x C3) : C2",
                "A4",
                "C6 x C2",
                "C2 x C2 x S3",
                "C8",
                "D16"
            ]
        );
        assert_eq!(Recipe::Dicyclic(12).label(), "C3 : C4");
    }

    #[test]
    fn recipe_orders_match_builds() {
        for claim in theorem_claims() {
            for g in &claim.groups {
                assert_eq!(g.recipe.build().unwrap().order(), g.recipe.order());
            }
        }
    }

    #[test]
    fn families() {
        let s: Signature = "4,8".parse().unwrap();
        assert_eq!(known_groups_for(&s).unwrap(), [c(8), d(16)]);
        let s: Signature = "5".parse().unwrap();
        assert_eq!(known_groups_for(&s).unwrap(), [c(5), d(10)]);
        let s: Signature = "11,22".parse().unwrap();
        let groups = known_groups_for(&s).unwrap();
        assert_eq!(groups, [c(22), d(44)]);
        for g in groups {
            let report = census(&g.build().unwrap());
            assert_eq!(report.signature, s);
            assert_eq!(report.delta, 18);
        }
        assert!(matches!(
            known_groups_for(&"9".parse().unwrap()),
            Err(GroupError::Unclassified(_))
        ));
        assert!(known_groups_for(&"4,4,4,4,4,4".parse().unwrap()).is_err());
    }
}
