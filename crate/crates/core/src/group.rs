//! Dense Cayley-table representation of a finite group.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::{GroupError, Result};
use crate::perm::Permutation;

/// Index of a group element. Index 0 is always the identity.
pub type Element = u8;

/// Largest group order a table may have.
pub const MAX_ORDER: usize = 64;

/// A finite group given by its complete multiplication table.
///
/// Construction validates the Latin-square property, that 0 is a two-sided
/// identity, and associativity over all triples, so every live value is a
/// group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    order: usize,
    product: Vec<Element>,
    inverse: Vec<Element>,
    name: String,
}

impl GroupTable {
    /// Validates a row-major `n × n` table (`product[a * n + b] = a·b`).
    pub fn from_cayley(name: impl Into<String>, product: Vec<Element>) -> Result<Self> {
        let n = (0..=MAX_ORDER)
            .find(|&k| k * k == product.len())
            .ok_or_else(|| {
                GroupError::InvalidTable(format!(
                    "{} entries is not a square of at most {MAX_ORDER}",
                    product.len()
                ))
            })?;
        if n == 0 {
            return Err(GroupError::InvalidTable("empty table".to_string()));
        }
        if let Some(&bad) = product.iter().find(|&&x| x as usize >= n) {
            return Err(GroupError::InvalidTable(format!(
                "entry {bad} out of range for order {n}"
            )));
        }
        for x in 0..n {
            if product[x] as usize != x || product[x * n] as usize != x {
                return Err(GroupError::InvalidTable(format!(
                    "element 0 is not an identity at {x}"
                )));
            }
        }
        for i in 0..n {
            let mut row = alloc::vec![false; n];
            let mut col = alloc::vec![false; n];
            for j in 0..n {
                let r = product[i * n + j] as usize;
                let c = product[j * n + i] as usize;
                if row[r] || col[c] {
                    return Err(GroupError::InvalidTable(format!(
                        "row or column {i} repeats an entry"
                    )));
                }
                row[r] = true;
                col[c] = true;
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = product[a * n + b] as usize;
                for c in 0..n {
                    let bc = product[b * n + c] as usize;
                    if product[ab * n + c] != product[a * n + bc] {
                        return Err(GroupError::InvalidTable(format!(
                            "not associative at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        let mut inverse = alloc::vec![0; n];
        for (a, inv) in inverse.iter_mut().enumerate() {
            *inv = (0..n)
                .find(|&b| product[a * n + b] == 0)
                .expect("Latin square has a 0 in every row") as Element;
        }
        Ok(Self {
            order: n,
            product,
            inverse,
            name: name.into(),
        })
    }

    /// Tabulates `mul` over `0..order` and validates the result.
    pub fn from_fn(
        name: impl Into<String>,
        order: usize,
        mul: impl Fn(usize, usize) -> usize,
    ) -> Result<Self> {
        if order == 0 || order > MAX_ORDER {
            return Err(GroupError::OrderOverflow {
                order,
                max: MAX_ORDER,
            });
        }
        let mut product = Vec::with_capacity(order * order);
        for a in 0..order {
            for b in 0..order {
                let c = mul(a, b);
                if c >= order {
                    return Err(GroupError::InvalidTable(format!(
                        "{a}·{b} = {c} out of range"
                    )));
                }
                product.push(c as Element);
            }
        }
        Self::from_cayley(name, product)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn identity(&self) -> Element {
        0
    }

    pub fn elements(&self) -> impl Iterator<Item = Element> {
        (0..self.order).map(|x| x as Element)
    }

    #[inline]
    pub fn mul(&self, a: Element, b: Element) -> Element {
        self.product[a as usize * self.order + b as usize]
    }

    #[inline]
    pub fn inv(&self, a: Element) -> Element {
        self.inverse[a as usize]
    }

    /// Row-major multiplication table.
    pub fn table(&self) -> &[Element] {
        &self.product
    }

    pub fn check_element(&self, x: usize) -> Result<Element> {
        if x < self.order {
            Ok(x as Element)
        } else {
            Err(GroupError::ElementOutOfRange {
                element: x,
                order: self.order,
            })
        }
    }

    pub fn pow(&self, x: Element, k: usize) -> Element {
        let mut acc = 0;
        for _ in 0..k % self.element_order(x) {
            acc = self.mul(acc, x);
        }
        acc
    }

    /// Least `k ≥ 1` with `x^k = 1`.
    pub fn element_order(&self, x: Element) -> usize {
        let mut k = 1;
        let mut acc = x;
        while acc != 0 {
            acc = self.mul(acc, x);
            k += 1;
        }
        k
    }

    pub fn conjugate(&self, g: Element, x: Element) -> Element {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn is_abelian(&self) -> bool {
        self.elements()
            .all(|a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Number of elements of each order.
    pub fn order_histogram(&self) -> BTreeMap<usize, usize> {
        let mut hist = BTreeMap::new();
        for x in self.elements() {
            *hist.entry(self.element_order(x)).or_insert(0) += 1;
        }
        hist
    }

    pub fn center(&self) -> Vec<Element> {
        self.elements()
            .filter(|&z| self.elements().all(|g| self.mul(z, g) == self.mul(g, z)))
            .collect()
    }

    /// Conjugacy classes, each sorted, listed in order of their least element.
    pub fn conjugacy_classes(&self) -> Vec<Vec<Element>> {
        let mut assigned = alloc::vec![false; self.order];
        let mut classes = Vec::new();
        for x in self.elements() {
            if assigned[x as usize] {
                continue;
            }
            let class: BTreeSet<Element> = self.elements().map(|g| self.conjugate(g, x)).collect();
            for &y in &class {
                assigned[y as usize] = true;
            }
            classes.push(class.into_iter().collect());
        }
        classes
    }

    /// Size of the conjugacy class of every element, indexed by element.
    pub fn class_sizes(&self) -> Vec<usize> {
        let mut sizes = alloc::vec![0; self.order];
        for class in self.conjugacy_classes() {
            for &x in &class {
                sizes[x as usize] = class.len();
            }
        }
        sizes
    }

    pub fn commutator(&self, a: Element, b: Element) -> Element {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    pub fn derived_subgroup(&self) -> SubgroupSet<'_> {
        let commutators: BTreeSet<Element> = self
            .elements()
            .flat_map(|a| self.elements().map(move |b| (a, b)))
            .map(|(a, b)| self.commutator(a, b))
            .collect();
        let seed: Vec<Element> = commutators.into_iter().collect();
        self.generated_subgroup(&seed)
    }

    /// Smallest subgroup containing `seed`.
    pub fn generated_subgroup(&self, seed: &[Element]) -> SubgroupSet<'_> {
        let mut member = alloc::vec![false; self.order];
        member[0] = true;
        let mut queue: Vec<Element> = alloc::vec![0];
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            for &s in seed {
                let y = self.mul(x, s);
                if !member[y as usize] {
                    member[y as usize] = true;
                    queue.push(y);
                }
            }
        }
        queue.sort_unstable();
        SubgroupSet {
            parent: self,
            members: queue,
        }
    }

    /// The permutation `x ↦ g·x` of the element indices.
    pub fn left_regular(&self, g: Element) -> Permutation {
        let images = self.elements().map(|x| self.mul(g, x) as usize).collect();
        Permutation::from_images(images).expect("rows of a Latin square are bijections")
    }

    /// A small generating set, chosen greedily: repeatedly add an element of
    /// largest order not yet in the generated subgroup (least index on ties).
    pub fn generating_set(&self) -> Vec<Element> {
        let mut by_order: Vec<Element> = self.elements().skip(1).collect();
        by_order.sort_by_key(|&x| (core::cmp::Reverse(self.element_order(x)), x));
        let mut gens = Vec::new();
        let mut span = self.generated_subgroup(&[]).members;
        while span.len() < self.order {
            let next = *by_order
                .iter()
                .find(|x| span.binary_search(x).is_err())
                .expect("a proper subgroup misses some element");
            gens.push(next);
            span = self.generated_subgroup(&gens).members;
        }
        gens
    }

    /// Left-regular images of [`generating_set`](Self::generating_set).
    pub fn permutation_generators(&self) -> Vec<Permutation> {
        self.generating_set()
            .into_iter()
            .map(|g| self.left_regular(g))
            .collect()
    }
}

/// A subgroup of a [`GroupTable`], stored as its sorted member list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgroupSet<'g> {
    parent: &'g GroupTable,
    members: Vec<Element>,
}

impl<'g> SubgroupSet<'g> {
    /// Checks closure and sorts; `None` if `members` is not a subgroup.
    pub fn new(parent: &'g GroupTable, members: impl IntoIterator<Item = Element>) -> Option<Self> {
        let set: BTreeSet<Element> = members.into_iter().collect();
        if !set.contains(&0) || set.iter().any(|&x| x as usize >= parent.order()) {
            return None;
        }
        let closed = set.iter().all(|&a| set.contains(&parent.inv(a)))
            && set
                .iter()
                .all(|&a| set.iter().all(|&b| set.contains(&parent.mul(a, b))));
        closed.then(|| Self {
            parent,
            members: set.into_iter().collect(),
        })
    }

    pub fn parent(&self) -> &'g GroupTable {
        self.parent
    }

    pub fn members(&self) -> &[Element] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: Element) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn index(&self) -> usize {
        self.parent.order() / self.members.len()
    }

    /// The subgroup as a standalone table, members relabelled in sorted order.
    pub fn to_group(&self, name: impl Into<String>) -> GroupTable {
        let pos = |x: Element| self.members.binary_search(&x).expect("closed subset");
        let n = self.members.len();
        GroupTable::from_fn(name, n, |a, b| {
            pos(self.parent.mul(self.members[a], self.members[b]))
        })
        .expect("a subgroup is a group")
    }
}
