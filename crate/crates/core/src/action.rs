//! Group actions by automorphisms and the semidirect products they define.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{GroupError, Result};
use crate::group::{Element, GroupTable, MAX_ORDER};
use crate::perm::Permutation;

/// A homomorphism from `acting` into the automorphism group of `target`,
/// given explicitly by one permutation of `target`'s elements per element of
/// `acting`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutomorphismAction {
    acting: GroupTable,
    target: GroupTable,
    maps: Vec<Permutation>,
}

impl AutomorphismAction {
    /// Validates that every map is an automorphism of `target` and that
    /// `maps[h1·h2] = maps[h1] ∘ maps[h2]`.
    pub fn new(acting: GroupTable, target: GroupTable, maps: Vec<Permutation>) -> Result<Self> {
        if maps.len() != acting.order() {
            return Err(GroupError::InvalidAction(format!(
                "{} maps supplied for an acting group of order {}",
                maps.len(),
                acting.order()
            )));
        }
        for (h, map) in maps.iter().enumerate() {
            if map.degree() != target.order() {
                return Err(GroupError::InvalidAction(format!(
                    "map for element {h} has degree {} but the target has order {}",
                    map.degree(),
                    target.order()
                )));
            }
            if map.apply(0) != 0 {
                return Err(GroupError::InvalidAction(format!(
                    "map for element {h} moves the identity"
                )));
            }
            for x in target.elements() {
                for y in target.elements() {
                    let lhs = map.apply(target.mul(x, y) as usize);
                    let rhs = target.mul(
                        map.apply(x as usize) as Element,
                        map.apply(y as usize) as Element,
                    );
                    if lhs != rhs as usize {
                        return Err(GroupError::InvalidAction(format!(
                            "map for element {h} is not an automorphism: it breaks {x}·{y}"
                        )));
                    }
                }
            }
        }
        for h1 in acting.elements() {
            for h2 in acting.elements() {
                let composed = maps[h1 as usize].compose(&maps[h2 as usize]);
                if maps[acting.mul(h1, h2) as usize] != composed {
                    return Err(GroupError::InvalidAction(format!(
                        "not a homomorphism: map({h1}·{h2}) differs from map({h1}) ∘ map({h2})"
                    )));
                }
            }
        }
        Ok(Self {
            acting,
            target,
            maps,
        })
    }

    /// Every element acts as the identity.
    pub fn trivial(acting: GroupTable, target: GroupTable) -> Self {
        let maps = alloc::vec![Permutation::identity(target.order()); acting.order()];
        Self {
            acting,
            target,
            maps,
        }
    }

    /// Extends images of generators of `acting` to the whole group, then
    /// validates as in [`new`](Self::new).
    pub fn from_generator_images(
        acting: GroupTable,
        target: GroupTable,
        generators: &[(Element, Permutation)],
    ) -> Result<Self> {
        let mut maps: Vec<Option<Permutation>> = alloc::vec![None; acting.order()];
        maps[0] = Some(Permutation::identity(target.order()));
        let mut queue = alloc::vec![0 as Element];
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            for (g, perm) in generators {
                if *g as usize >= acting.order() || perm.degree() != target.order() {
                    return Err(GroupError::InvalidAction(format!(
                        "generator {g} or its image is out of range"
                    )));
                }
                let y = acting.mul(x, *g);
                let image = maps[x as usize]
                    .as_ref()
                    .expect("queued elements are mapped")
                    .compose(perm);
                match &maps[y as usize] {
                    None => {
                        maps[y as usize] = Some(image);
                        queue.push(y);
                    }
                    Some(existing) if *existing != image => {
                        return Err(GroupError::InvalidAction(format!(
                            "generator images do not respect the relations of {}",
                            acting.name()
                        )));
                    }
                    Some(_) => {}
                }
            }
        }
        if queue.len() != acting.order() {
            return Err(GroupError::InvalidAction(format!(
                "generators span only {} of {} elements",
                queue.len(),
                acting.order()
            )));
        }
        let maps = maps
            .into_iter()
            .map(|m| m.expect("every element reached"))
            .collect();
        Self::new(acting, target, maps)
    }

    pub fn acting(&self) -> &GroupTable {
        &self.acting
    }

    pub fn target(&self) -> &GroupTable {
        &self.target
    }

    pub fn map(&self, h: Element) -> &Permutation {
        &self.maps[h as usize]
    }

    pub fn is_trivial(&self) -> bool {
        self.maps.iter().all(Permutation::is_identity)
    }
}

/// The `C_2`-action on an abelian group sending every element to its inverse.
pub fn inversion_action(a: &GroupTable) -> Result<AutomorphismAction> {
    if !a.is_abelian() {
        return Err(GroupError::NotAbelian(a.name().into()));
    }
    let inversion = Permutation::from_images(a.elements().map(|x| a.inv(x) as usize).collect())?;
    let c2 = crate::construct::make_cyclic(2)?;
    AutomorphismAction::new(
        c2,
        a.clone(),
        alloc::vec![Permutation::identity(a.order()), inversion],
    )
}

/// `N ⋊ H` on pairs `(x, k)`, numbered `x·|H| + k`, with
/// `(x₁, k₁)(x₂, k₂) = (x₁ · k₁(x₂), k₁k₂)`.
pub fn semidirect_product(action: &AutomorphismAction) -> Result<GroupTable> {
    let (normal, acting) = (&action.target, &action.acting);
    let (n, h) = (normal.order(), acting.order());
    if n * h > MAX_ORDER {
        return Err(GroupError::OrderOverflow {
            order: n * h,
            max: MAX_ORDER,
        });
    }
    let name = if action.is_trivial() {
        format!("{} x {}", normal.name(), acting.name())
    } else {
        format!("({}) : {}", normal.name(), acting.name())
    };
    GroupTable::from_fn(name, n * h, |a, b| {
        let (x1, k1) = (a / h, a % h);
        let (x2, k2) = (b / h, b % h);
        let twisted = action.maps[k1].apply(x2) as Element;
        let x = normal.mul(x1 as Element, twisted) as usize;
        let k = acting.mul(k1 as Element, k2 as Element) as usize;
        x * h + k
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::census::census;
    use crate::construct::{direct_product, make_cyclic, make_dicyclic, make_dihedral};
    use crate::iso::is_isomorphic;

    #[test]
    fn inversion_on_c3_gives_s3() {
        let c3 = make_cyclic(3).unwrap();
        let s3 = semidirect_product(&inversion_action(&c3).unwrap()).unwrap();
        assert!(is_isomorphic(&s3, &make_dihedral(6).unwrap()).unwrap());
    }

    #[test]
    fn inversion_needs_abelian_base() {
        let q8 = make_dicyclic(8).unwrap();
        assert!(matches!(
            inversion_action(&q8),
            Err(GroupError::NotAbelian(_))
        ));
    }

    #[test]
    fn trivial_action_matches_direct_product() {
        let n = make_cyclic(3).unwrap();
        let h = make_cyclic(4).unwrap();
        let sd = semidirect_product(&AutomorphismAction::trivial(h.clone(), n.clone())).unwrap();
        let dp = direct_product(&n, &h).unwrap();
        assert_eq!(sd.table(), dp.table());
    }

    #[test]
    fn c3c3_by_inversion_has_delta_four() {
        let c3 = make_cyclic(3).unwrap();
        let base = direct_product(&c3, &c3).unwrap();
        let g = semidirect_product(&inversion_action(&base).unwrap()).unwrap();
        assert_eq!(g.order(), 18);
        assert_eq!(census(&g).delta, 4);
    }

    #[test]
    fn rejects_invalid_actions() {
        let c3 = make_cyclic(3).unwrap();
        let c2 = make_cyclic(2).unwrap();
        // x ↦ x + 1 moves the identity
        let shift = Permutation::from_images(alloc::vec![1, 2, 0]).unwrap();
        let err = AutomorphismAction::new(
            c2.clone(),
            c3.clone(),
            alloc::vec![Permutation::identity(3), shift],
        );
        assert!(matches!(err, Err(GroupError::InvalidAction(ref m)) if m.contains("identity")));

        // on C5, x ↦ 2x is an automorphism of order 4, so C2 cannot act by it
        let c5 = make_cyclic(5).unwrap();
        let doubling = Permutation::from_images(alloc::vec![0, 2, 4, 1, 3]).unwrap();
        let err = AutomorphismAction::new(
            c2.clone(),
            c5.clone(),
            alloc::vec![Permutation::identity(5), doubling.clone()],
        );
        assert!(matches!(err, Err(GroupError::InvalidAction(ref m)) if m.contains("homomorphism")));
        assert!(AutomorphismAction::from_generator_images(
            c2,
            c5.clone(),
            &[(1, doubling.clone())]
        )
        .is_err());
        // but C4 can
        let c4 = make_cyclic(4).unwrap();
        let f20 = semidirect_product(
            &AutomorphismAction::from_generator_images(c4, c5, &[(1, doubling)]).unwrap(),
        );
        assert_eq!(f20.unwrap().center().len(), 1);

        // a swap of two non-identity elements of C4 that is not an automorphism
        let c4 = make_cyclic(4).unwrap();
        let bad = Permutation::from_images(alloc::vec![0, 2, 1, 3]).unwrap();
        let err = AutomorphismAction::new(
            make_cyclic(2).unwrap(),
            c4,
            alloc::vec![Permutation::identity(4), bad],
        );
        assert!(matches!(err, Err(GroupError::InvalidAction(ref m)) if m.contains("automorphism")));
    }
}
