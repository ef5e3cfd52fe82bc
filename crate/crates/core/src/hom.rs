//! Extending generator assignments to homomorphisms.

use alloc::vec::Vec;

use crate::group::{Element, GroupTable};

const UNSET: Element = Element::MAX;

/// A homomorphism defined on the subgroup generated by the generators
/// assigned so far. Assigning a generator closes the domain under right
/// multiplication by every generator and rejects any clash.
#[derive(Clone)]
pub(crate) struct PartialHom<'a> {
    src: &'a GroupTable,
    dst: &'a GroupTable,
    map: Vec<Element>,
    used: Vec<bool>,
    domain: Vec<Element>,
    gens: Vec<(Element, Element)>,
    injective: bool,
}

impl<'a> PartialHom<'a> {
    pub(crate) fn new(src: &'a GroupTable, dst: &'a GroupTable, injective: bool) -> Self {
        let mut map = alloc::vec![UNSET; src.order()];
        let mut used = alloc::vec![false; dst.order()];
        map[0] = 0;
        used[0] = true;
        Self {
            src,
            dst,
            map,
            used,
            domain: alloc::vec![0],
            gens: Vec::new(),
            injective,
        }
    }

    pub(crate) fn domain_len(&self) -> usize {
        self.domain.len()
    }

    pub(crate) fn into_map(self) -> Vec<Element> {
        self.map
    }

    /// Adds `gen ↦ image`. Returns `false` (leaving `self` in an unspecified
    /// state) if the assignment is inconsistent.
    pub(crate) fn assign(&mut self, gen: Element, image: Element) -> bool {
        self.gens.push((gen, image));
        // Every existing domain element must now also respect the new
        // generator, and every newly reached element must respect all of them.
        let mut head = 0;
        while head < self.domain.len() {
            let x = self.domain[head];
            head += 1;
            let fx = self.map[x as usize];
            for k in 0..self.gens.len() {
                let (g, h) = self.gens[k];
                let y = self.src.mul(x, g);
                let fy = self.dst.mul(fx, h);
                match self.map[y as usize] {
                    UNSET => {
                        if self.injective && self.used[fy as usize] {
                            return false;
                        }
                        self.map[y as usize] = fy;
                        self.used[fy as usize] = true;
                        self.domain.push(y);
                    }
                    existing if existing != fy => return false,
                    _ => {}
                }
            }
        }
        true
    }
}

/// Extends `gens[i] ↦ images[i]` to a homomorphism `src → dst`.
///
/// Returns the full element map when the generators generate `src` and the
/// assignment respects every relation; `None` otherwise.
pub fn extend_homomorphism(
    src: &GroupTable,
    dst: &GroupTable,
    gens: &[Element],
    images: &[Element],
) -> Option<Vec<Element>> {
    if gens.len() != images.len() {
        return None;
    }
    let mut hom = PartialHom::new(src, dst, false);
    for (&g, &h) in gens.iter().zip(images) {
        if g as usize >= src.order() || h as usize >= dst.order() || !hom.assign(g, h) {
            return None;
        }
    }
    (hom.domain_len() == src.order()).then(|| hom.into_map())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic(n: usize) -> GroupTable {
        GroupTable::from_fn("C", n, |a, b| (a + b) % n).unwrap()
    }

    #[test]
    fn respects_relations() {
        let c6 = cyclic(6);
        let c3 = cyclic(3);
        // 1 ↦ 1 has order 3 in C3: fine, 1^6 = 1
        let map = extend_homomorphism(&c6, &c3, &[1], &[1]).unwrap();
        assert_eq!(map, alloc::vec![0, 1, 2, 0, 1, 2]);
        // C3 → C6 sending the generator to an element of order 6 is not a homomorphism
        assert!(extend_homomorphism(&c3, &c6, &[1], &[1]).is_none());
        assert!(extend_homomorphism(&c3, &c6, &[1], &[2]).is_some());
    }

    #[test]
    fn requires_generation() {
        let c6 = cyclic(6);
        assert!(extend_homomorphism(&c6, &c6, &[2], &[2]).is_none());
    }
}
