//! Isomorphism testing for small groups.
//!
//! Cheap invariants are compared first. When they agree, a backtracking
//! search assigns images to a greedy generating set of the first group,
//! restricted to elements of the same order and conjugacy class size, and
//! extends each partial assignment to a homomorphism on the subgroup it
//! generates, pruning on the first clash.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::error::{GroupError, Result};
use crate::group::{Element, GroupTable};
use crate::hom::PartialHom;

/// Largest order for which [`is_isomorphic`] answers.
pub const ISO_MAX_ORDER: usize = 32;

/// Isomorphism invariants that are cheap to compute on a table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Invariants {
    pub order: usize,
    pub abelian: bool,
    pub order_histogram: BTreeMap<usize, usize>,
    pub center_size: usize,
    pub derived_size: usize,
    pub class_sizes: Vec<usize>,
}

impl Invariants {
    pub fn of(g: &GroupTable) -> Self {
        let mut class_sizes: Vec<usize> = g.conjugacy_classes().iter().map(Vec::len).collect();
        class_sizes.sort_unstable();
        Self {
            order: g.order(),
            abelian: g.is_abelian(),
            order_histogram: g.order_histogram(),
            center_size: g.center().len(),
            derived_size: g.derived_subgroup().len(),
            class_sizes,
        }
    }
}

/// Whether `a ≅ b`. Orders above [`ISO_MAX_ORDER`] are refused.
pub fn is_isomorphic(a: &GroupTable, b: &GroupTable) -> Result<bool> {
    for g in [a, b] {
        if g.order() > ISO_MAX_ORDER {
            return Err(GroupError::UnsupportedOrder {
                order: g.order(),
                max: ISO_MAX_ORDER,
            });
        }
    }
    if a.order() != b.order() {
        return Ok(false);
    }
    if Invariants::of(a) != Invariants::of(b) {
        return Ok(false);
    }
    Ok(find_isomorphism(a, b).is_some())
}

/// An explicit isomorphism `a → b` as an element map, if one exists.
pub fn find_isomorphism(a: &GroupTable, b: &GroupTable) -> Option<Vec<Element>> {
    if a.order() != b.order() {
        return None;
    }
    let gens = a.generating_set();
    let (sizes_a, sizes_b) = (a.class_sizes(), b.class_sizes());
    let key = |g: &GroupTable, sizes: &[usize], x: Element| (g.element_order(x), sizes[x as usize]);
    let candidates: Vec<Vec<Element>> = gens
        .iter()
        .map(|&x| {
            let want = key(a, &sizes_a, x);
            b.elements()
                .filter(|&y| key(b, &sizes_b, y) == want)
                .collect()
        })
        .collect();
    let hom = PartialHom::new(a, b, true);
    search(&gens, &candidates, 0, hom).map(PartialHom::into_map)
}

fn search<'a>(
    gens: &[Element],
    candidates: &[Vec<Element>],
    depth: usize,
    hom: PartialHom<'a>,
) -> Option<PartialHom<'a>> {
    if depth == gens.len() {
        return Some(hom);
    }
    for &image in &candidates[depth] {
        let mut next = hom.clone();
        if next.assign(gens[depth], image) {
            if let Some(done) = search(gens, candidates, depth + 1, next) {
                return Some(done);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::{inversion_action, semidirect_product};
    use crate::construct::*;

    #[test]
    fn s3_and_d6() {
        assert!(is_isomorphic(&make_dihedral(6).unwrap(), &make_symmetric(3).unwrap()).unwrap());
    }

    #[test]
    fn q8_is_not_d8() {
        let q8 = make_dicyclic(8).unwrap();
        let d8 = make_dihedral(8).unwrap();
        let (hq, hd) = (q8.order_histogram(), d8.order_histogram());
        assert_ne!(hq, hd);
        assert!(!is_isomorphic(&q8, &d8).unwrap());
    }

    #[test]
    fn c4c2_by_inversion_is_d8_times_c2() {
        let c4c2 = direct_product(&make_cyclic(4).unwrap(), &make_cyclic(2).unwrap()).unwrap();
        let g = semidirect_product(&inversion_action(&c4c2).unwrap()).unwrap();
        let d8c2 = direct_product(&make_dihedral(8).unwrap(), &make_cyclic(2).unwrap()).unwrap();
        assert!(is_isomorphic(&g, &d8c2).unwrap());
        let map = find_isomorphism(&g, &d8c2).unwrap();
        for x in g.elements() {
            for y in g.elements() {
                assert_eq!(
                    map[g.mul(x, y) as usize],
                    d8c2.mul(map[x as usize], map[y as usize])
                );
            }
        }
    }

    #[test]
    fn q8_times_c2_is_not_q8_by_c2() {
        // both non-abelian of order 16 with exponent 4
        let q8c2 = direct_product(&make_dicyclic(8).unwrap(), &make_cyclic(2).unwrap()).unwrap();
        let g13 = quaternion_by_cyclic2().unwrap();
        assert!(!is_isomorphic(&q8c2, &g13).unwrap());
    }

    #[test]
    fn refuses_large_orders() {
        let c33 = make_cyclic(33).unwrap();
        assert!(matches!(
            is_isomorphic(&c33, &c33),
            Err(GroupError::UnsupportedOrder { order: 33, .. })
        ));
    }

    #[test]
    fn different_orders_are_not_isomorphic() {
        assert!(!is_isomorphic(&make_cyclic(4).unwrap(), &make_cyclic(5).unwrap()).unwrap());
    }
}
