//! Constructors for the families of small groups used throughout the crate.
//!
//! Dihedral groups follow the order convention: `make_dihedral(8)` is the
//! symmetry group of the square, of order 8.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::action::{semidirect_product, AutomorphismAction};
use crate::error::{GroupError, Result};
use crate::group::{Element, GroupTable, MAX_ORDER};
use crate::hom::extend_homomorphism;
use crate::perm::Permutation;

fn invalid(constructor: &'static str, value: usize, reason: &'static str) -> GroupError {
    GroupError::InvalidParameter {
        constructor,
        value,
        reason,
    }
}

fn check_cap(order: usize) -> Result<()> {
    if order > MAX_ORDER {
        Err(GroupError::OrderOverflow {
            order,
            max: MAX_ORDER,
        })
    } else {
        Ok(())
    }
}

/// `C_n`, with element `i` standing for the `i`-th power of a generator.
pub fn make_cyclic(n: usize) -> Result<GroupTable> {
    if n == 0 {
        return Err(invalid("make_cyclic", n, "order must be positive"));
    }
    check_cap(n)?;
    GroupTable::from_fn(format!("C{n}"), n, |a, b| (a + b) % n)
}

/// `C_n ⋊ C_2` where the involution `s` acts by `s r s = r^twist`.
/// Element `i + n·j` stands for `r^i s^j`.
fn cyclic_by_involution(name: String, n: usize, twist: usize) -> Result<GroupTable> {
    GroupTable::from_fn(name, 2 * n, |a, b| {
        let (i, j) = (a % n, a / n);
        let (k, l) = (b % n, b / n);
        let k = if j == 1 { k * twist % n } else { k };
        (i + k) % n + n * ((j + l) % 2)
    })
}

/// `D_{two_n} = ⟨r, s | r^n = s^2 = 1, srs = r^{-1}⟩`.
pub fn make_dihedral(two_n: usize) -> Result<GroupTable> {
    if two_n < 2 || !two_n.is_multiple_of(2) {
        return Err(invalid(
            "make_dihedral",
            two_n,
            "order must be even and at least 2",
        ));
    }
    check_cap(two_n)?;
    let n = two_n / 2;
    cyclic_by_involution(format!("D{two_n}"), n, n - 1)
}

/// Dicyclic group `⟨a, b | a^{2m} = 1, b^2 = a^m, bab^{-1} = a^{-1}⟩` of
/// order `4m`. Element `i + 2m·j` stands for `a^i b^j`, so `a` is element 1
/// and `b` is element `2m`.
pub fn make_dicyclic(four_n: usize) -> Result<GroupTable> {
    if !four_n.is_multiple_of(4) || four_n < 8 {
        return Err(invalid(
            "make_dicyclic",
            four_n,
            "order must be a multiple of 4 and at least 8",
        ));
    }
    check_cap(four_n)?;
    let m = four_n / 4;
    let n = 2 * m;
    GroupTable::from_fn(format!("Q{four_n}"), four_n, |a, b| {
        let (i, j) = (a % n, a / n);
        let (k, l) = (b % n, b / n);
        let k = if j == 1 { (n - k) % n } else { k };
        let carry = if j + l == 2 { m } else { 0 };
        (i + k + carry) % n + n * ((j + l) % 2)
    })
}

/// Quasidihedral group `⟨r, s | r^{2^k/2} = s^2 = 1, srs = r^{2^k/4 - 1}⟩`.
pub fn make_quasidihedral(two_k: usize) -> Result<GroupTable> {
    if !two_k.is_power_of_two() || two_k < 16 {
        return Err(invalid(
            "make_quasidihedral",
            two_k,
            "order must be a power of 2, at least 16",
        ));
    }
    check_cap(two_k)?;
    let n = two_k / 2;
    cyclic_by_involution(format!("SD{two_k}"), n, n / 2 - 1)
}

fn cycle_perm(degree: usize, points: &[usize]) -> Permutation {
    let mut images: Vec<usize> = (0..degree).collect();
    for (k, &p) in points.iter().enumerate() {
        images[p] = points[(k + 1) % points.len()];
    }
    Permutation::from_images(images).expect("a cycle is a bijection")
}

/// `S_n` from the generators `(0 1 … n-1)` and `(0 1)`.
pub fn make_symmetric(n: usize) -> Result<GroupTable> {
    let order: usize = (1..=n).product();
    if n == 0 {
        return Err(invalid("make_symmetric", n, "degree must be positive"));
    }
    check_cap(order)?;
    let mut gens = Vec::new();
    if n >= 2 {
        gens.push(cycle_perm(n, &(0..n).collect::<Vec<_>>()));
        gens.push(cycle_perm(n, &[0, 1]));
    }
    Ok(from_permutations(&gens)?.with_name(format!("S{n}")))
}

/// `A_n` from the 3-cycles `(i i+1 i+2)`.
pub fn make_alternating(n: usize) -> Result<GroupTable> {
    if n == 0 {
        return Err(invalid("make_alternating", n, "degree must be positive"));
    }
    let order = ((1..=n).product::<usize>() / 2).max(1);
    check_cap(order)?;
    let gens: Vec<Permutation> = (0..n.saturating_sub(2))
        .map(|i| cycle_perm(n, &[i, i + 1, i + 2]))
        .collect();
    Ok(from_permutations(&gens)?.with_name(format!("A{n}")))
}

/// Componentwise product; the pair `(x, y)` is element `x·|b| + y`.
pub fn direct_product(a: &GroupTable, b: &GroupTable) -> Result<GroupTable> {
    let (m, n) = (a.order(), b.order());
    check_cap(m * n)?;
    GroupTable::from_fn(format!("{} x {}", a.name(), b.name()), m * n, |x, y| {
        let p = a.mul((x / n) as Element, (y / n) as Element) as usize;
        let q = b.mul((x % n) as Element, (y % n) as Element) as usize;
        p * n + q
    })
}

/// Closes a set of permutations under composition.
///
/// Elements are numbered in breadth-first discovery order starting from the
/// identity, multiplying each discovered element on the right by each
/// generator in turn. The group product is composition `x·y = x ∘ y`.
pub fn from_permutations(gens: &[Permutation]) -> Result<GroupTable> {
    let degree = gens.first().map_or(0, Permutation::degree);
    if let Some(bad) = gens.iter().find(|g| g.degree() != degree) {
        return Err(GroupError::DegreeMismatch(degree, bad.degree()));
    }
    let mut index: BTreeMap<Permutation, usize> = BTreeMap::new();
    let mut elements = alloc::vec![Permutation::identity(degree)];
    index.insert(elements[0].clone(), 0);
    let mut head = 0;
    while head < elements.len() {
        for g in gens {
            let next = elements[head].compose(g);
            if !index.contains_key(&next) {
                if elements.len() == MAX_ORDER {
                    return Err(GroupError::ClosureTooLarge {
                        partial: elements.len(),
                        max: MAX_ORDER,
                    });
                }
                index.insert(next.clone(), elements.len());
                elements.push(next);
            }
        }
        head += 1;
    }
    let n = elements.len();
    let name = format!("<{}>", crate::perm::join_cycles(gens));
    GroupTable::from_fn(name, n, |a, b| index[&elements[a].compose(&elements[b])])
}

/// `(C_2 × C_2) ⋊ C_4 = ⟨a, b, c | a² = b² = c⁴ = 1, ab = ba, ac = ca, cbc⁻¹ = ab⟩`.
pub fn klein_by_cyclic4() -> Result<GroupTable> {
    let klein = direct_product(&make_cyclic(2)?, &make_cyclic(2)?)?;
    let c4 = make_cyclic(4)?;
    // a = (1,0) = element 2, b = (0,1) = element 1, ab = element 3
    let (a, b, ab) = (2, 1, 3);
    let images = extend_homomorphism(&klein, &klein, &[a, b], &[a, ab])
        .expect("a ↦ a, b ↦ ab is an automorphism");
    let action =
        AutomorphismAction::from_generator_images(c4, klein, &[(1, element_perm(&images))])?;
    Ok(semidirect_product(&action)?.with_name("(C2 x C2) : C4"))
}

/// `Q_8 ⋊ C_2 = ⟨a, b, c | a⁴ = c² = 1, a² = b², bab⁻¹ = a⁻¹, ac = ca, cbc⁻¹ = a²b⟩`.
pub fn quaternion_by_cyclic2() -> Result<GroupTable> {
    let q8 = make_dicyclic(8)?;
    let (a, b) = (1, 4);
    let a2b = q8.mul(q8.mul(a, a), b);
    let images = extend_homomorphism(&q8, &q8, &[a, b], &[a, a2b])
        .expect("a ↦ a, b ↦ a²b is an automorphism");
    let action = AutomorphismAction::from_generator_images(
        make_cyclic(2)?,
        q8,
        &[(1, element_perm(&images))],
    )?;
    Ok(semidirect_product(&action)?.with_name("Q8 : C2"))
}

pub(crate) fn element_perm(map: &[Element]) -> Permutation {
    Permutation::from_images(map.iter().map(|&x| x as usize).collect())
        .expect("automorphism is a bijection")
}
