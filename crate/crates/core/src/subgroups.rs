//! Cyclic subgroups, the family M(G) of maximal cyclic subgroups, Cyc(G), and
//! Sylow profiles obtained by counting element orders.

use fixedbitset::FixedBitSet;
use thiserror::Error;

use crate::factor::factorize;
use crate::group::{ElementId, GroupTable};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SubgroupError {
    #[error("{p} is not a prime divisor of the group order {order}")]
    NotAPrimeDivisor { p: u64, order: usize },
}

/// ⟨g⟩ with constant-time membership.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicSubgroup {
    generator: ElementId,
    members: FixedBitSet,
    order: usize,
}

impl CyclicSubgroup {
    pub fn generator(&self) -> ElementId {
        self.generator
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn contains(&self, g: ElementId) -> bool {
        self.members.contains(g.0)
    }

    pub fn members(&self) -> &FixedBitSet {
        &self.members
    }

    pub fn elements(&self) -> impl Iterator<Item = ElementId> + '_ {
        self.members.ones().map(ElementId)
    }

    pub fn is_subset(&self, other: &CyclicSubgroup) -> bool {
        self.members.is_subset(&other.members)
    }
}

pub fn cyclic_subgroup(group: &GroupTable, g: ElementId) -> CyclicSubgroup {
    let mut members = FixedBitSet::with_capacity(group.order());
    let mut cur = 0;
    let mut order = 0;
    loop {
        members.insert(cur);
        order += 1;
        cur = group.mul(cur, g.0);
        if cur == 0 {
            break;
        }
    }
    CyclicSubgroup { generator: g, members, order }
}

/// ⟨g⟩ for every element g, computed once and shared by the graph builders.
#[derive(Clone, Debug)]
pub struct CyclicLattice {
    subgroups: Vec<CyclicSubgroup>,
}

impl CyclicLattice {
    pub fn new(group: &GroupTable) -> Self {
        CyclicLattice { subgroups: group.elements().map(|g| cyclic_subgroup(group, g)).collect() }
    }

    pub fn get(&self, g: ElementId) -> &CyclicSubgroup {
        &self.subgroups[g.0]
    }

    /// True iff `g` is a power of `h`, i.e. ⟨g⟩ ⊆ ⟨h⟩.
    #[inline]
    pub fn is_power_of(&self, g: usize, h: usize) -> bool {
        self.subgroups[h].members.contains(g)
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }
}

/// M(G) together with, for every element, the set of family indices whose
/// subgroup contains it.
#[derive(Clone, Debug)]
pub struct MaximalCyclicFamily {
    subgroups: Vec<CyclicSubgroup>,
    masks: Vec<FixedBitSet>,
}

impl MaximalCyclicFamily {
    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn subgroups(&self) -> &[CyclicSubgroup] {
        &self.subgroups
    }

    /// M_g as a set of family indices.
    pub fn mask(&self, g: ElementId) -> &FixedBitSet {
        &self.masks[g.0]
    }

    /// Some member contains both `g` and `h`, i.e. ⟨g, h⟩ is cyclic.
    #[inline]
    pub fn generate_cyclic(&self, g: usize, h: usize) -> bool {
        !self.masks[g].is_disjoint(&self.masks[h])
    }

    /// ⟨g⟩ ∈ M(G).
    pub fn generates_member(&self, group: &GroupTable, g: ElementId) -> bool {
        let o = group.orders()[g.0] as usize;
        self.masks[g.0].ones().any(|i| self.subgroups[i].order == o)
    }
}

pub fn maximal_cyclic_subgroups(group: &GroupTable) -> MaximalCyclicFamily {
    maximal_cyclic_from_lattice(group, &CyclicLattice::new(group))
}

/// ⟨g⟩ is maximal iff no h of larger order has g as a power. Among generators
/// of the same maximal subgroup the smallest index represents it.
pub fn maximal_cyclic_from_lattice(group: &GroupTable, lattice: &CyclicLattice) -> MaximalCyclicFamily {
    let n = group.order();
    let orders = group.orders();
    let mut subgroups = Vec::new();
    for g in 0..n {
        let og = orders[g];
        let dominated = (0..n).any(|h| orders[h] > og && lattice.is_power_of(g, h));
        if dominated {
            continue;
        }
        let duplicate = (0..g).any(|h| orders[h] == og && lattice.is_power_of(g, h));
        if !duplicate {
            subgroups.push(lattice.subgroups[g].clone());
        }
    }
    let mut masks = vec![FixedBitSet::with_capacity(subgroups.len()); n];
    for (i, s) in subgroups.iter().enumerate() {
        for e in s.members.ones() {
            masks[e].insert(i);
        }
    }
    MaximalCyclicFamily { subgroups, masks }
}

/// M_S: indices of the members containing every element of `s`.
pub fn m_restricted(family: &MaximalCyclicFamily, s: &[ElementId]) -> FixedBitSet {
    let mut acc = FixedBitSet::with_capacity(family.len());
    acc.insert_range(..);
    for g in s {
        acc.intersect_with(family.mask(*g));
    }
    acc
}

/// Cyc(G): elements g such that ⟨g, h⟩ is cyclic for every h.
pub fn cyc_set(group: &GroupTable, family: &MaximalCyclicFamily) -> FixedBitSet {
    let n = group.order();
    let mut out = FixedBitSet::with_capacity(n);
    for g in 0..n {
        if (0..n).all(|h| family.generate_cyclic(g, h)) {
            out.insert(g);
        }
    }
    out
}

fn check_divisor(group: &GroupTable, p: u64) -> Result<u32, SubgroupError> {
    let alpha = factorize(group.order() as u64).exponent_of(p);
    if alpha == 0 {
        Err(SubgroupError::NotAPrimeDivisor { p, order: group.order() })
    } else {
        Ok(alpha)
    }
}

/// A subgroup of order p is unique iff exactly p − 1 elements have order p.
pub fn has_unique_subgroup_of_prime_order(group: &GroupTable, p: u64) -> Result<bool, SubgroupError> {
    check_divisor(group, p)?;
    let count = group.orders().iter().filter(|&&o| o as u64 == p).count() as u64;
    Ok(count == p - 1)
}

fn is_power_of(mut m: u64, p: u64) -> bool {
    while m.is_multiple_of(p) {
        m /= p;
    }
    m == 1
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SylowProfile {
    pub prime: u64,
    /// α with p^α ∥ |G|.
    pub exponent: u32,
    pub unique: bool,
    pub cyclic: bool,
    pub generalized_quaternion: bool,
}

/// Profiles the Sylow p-subgroups by counting p-elements (identity included).
///
/// The p-elements number exactly p^α iff they form a single (hence unique)
/// Sylow subgroup. A Sylow subgroup is cyclic iff G has an element of order
/// p^α. Generalized quaternion is recognized as a non-cyclic Sylow 2-subgroup
/// of order at least 8 with a unique involution in G.
pub fn sylow_profile(group: &GroupTable, p: u64) -> Result<SylowProfile, SubgroupError> {
    let alpha = check_divisor(group, p)?;
    let full = p.pow(alpha);
    let p_elements = group.orders().iter().filter(|&&o| is_power_of(o as u64, p)).count() as u64;
    let unique = p_elements == full;
    let cyclic = has_element_of_order(group, full).is_some();
    let generalized_quaternion =
        p == 2 && alpha >= 3 && !cyclic && has_unique_subgroup_of_prime_order(group, 2)?;
    Ok(SylowProfile { prime: p, exponent: alpha, unique, cyclic, generalized_quaternion })
}

pub fn has_element_of_order(group: &GroupTable, m: u64) -> Option<ElementId> {
    group.orders().iter().position(|&o| o as u64 == m).map(ElementId)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_group, parse_group_expr};

    fn build(text: &str) -> GroupTable {
        build_group(&parse_group_expr(text).unwrap()).unwrap()
    }

    fn ids(set: &FixedBitSet) -> Vec<usize> {
        set.ones().collect()
    }

    #[test]
    fn cyclic_subgroup_examples() {
        let z12 = build("cyclic:12");
        let h = cyclic_subgroup(&z12, ElementId(4));
        assert_eq!(ids(h.members()), vec![0, 4, 8]);
        assert_eq!(h.order(), 3);

        let q8 = build("quaternion:8");
        let y = q8.dicyclic_generators().unwrap().y;
        let h = cyclic_subgroup(&q8, y);
        assert_eq!(h.order(), 4);
        let y2 = q8.mul(y.0, y.0);
        let y3 = q8.mul(y2, y.0);
        assert_eq!(ids(h.members()), {
            let mut v = vec![0, y.0, y2, y3];
            v.sort();
            v
        });

        assert_eq!(ids(cyclic_subgroup(&q8, ElementId::IDENTITY).members()), vec![0]);
    }

    #[test]
    fn cyclic_subgroup_closed_under_inverse() {
        let g = build("symmetric:4");
        for x in g.elements() {
            let h = cyclic_subgroup(&g, x);
            assert_eq!(h.order(), g.orders()[x.0] as usize);
            for e in h.elements() {
                assert!(h.contains(ElementId(g.inverse(e.0))));
            }
        }
    }

    #[test]
    fn maximal_family_examples() {
        assert_eq!(maximal_cyclic_subgroups(&build("cyclic:6")).len(), 1);

        let q8 = maximal_cyclic_subgroups(&build("quaternion:8"));
        assert_eq!(q8.len(), 3);
        assert!(q8.subgroups().iter().all(|s| s.order() == 4));

        let s3 = maximal_cyclic_subgroups(&build("symmetric:3"));
        let mut orders: Vec<usize> = s3.subgroups().iter().map(|s| s.order()).collect();
        orders.sort();
        assert_eq!(orders, vec![2, 2, 2, 3]);
    }

    #[test]
    fn family_is_antichain_and_covers() {
        for text in ["symmetric:4", "dihedral:6", "product(quaternion:8,cyclic:3)", "abelian:2,4", "alternating:5"] {
            let g = build(text);
            let f = maximal_cyclic_subgroups(&g);
            for (i, a) in f.subgroups().iter().enumerate() {
                for (j, b) in f.subgroups().iter().enumerate() {
                    if i != j {
                        assert!(!a.is_subset(b), "{text}");
                    }
                }
            }
            for x in g.elements() {
                assert!(!f.mask(x).is_clear(), "{text}");
            }
            assert_eq!(f.len() == 1, g.is_cyclic());
        }
    }

    #[test]
    fn m_restricted_examples() {
        let q8 = build("quaternion:8");
        let f = maximal_cyclic_subgroups(&q8);
        let x = q8.dicyclic_generators().unwrap().x.0;
        let x2 = ElementId(q8.mul(x, x));
        assert_eq!(m_restricted(&f, &[x2]).count_ones(..), 3);
        assert_eq!(m_restricted(&f, &[ElementId::IDENTITY]).count_ones(..), 3);

        let s3 = build("symmetric:3");
        let f = maximal_cyclic_subgroups(&s3);
        let three_cycle = ElementId(s3.orders().iter().position(|&o| o == 3).unwrap());
        assert_eq!(m_restricted(&f, &[three_cycle]).count_ones(..), 1);
    }

    #[test]
    fn cyc_set_examples() {
        let z6 = build("cyclic:6");
        assert_eq!(cyc_set(&z6, &maximal_cyclic_subgroups(&z6)).count_ones(..), 6);

        let s3 = build("symmetric:3");
        assert_eq!(ids(&cyc_set(&s3, &maximal_cyclic_subgroups(&s3))), vec![0]);

        let q8 = build("quaternion:8");
        let y = q8.dicyclic_generators().unwrap().y.0;
        let mut expected = vec![0, q8.mul(y, y)];
        expected.sort();
        assert_eq!(ids(&cyc_set(&q8, &maximal_cyclic_subgroups(&q8))), expected);
    }

    #[test]
    fn unique_prime_order_subgroups() {
        assert_eq!(has_unique_subgroup_of_prime_order(&build("quaternion:8"), 2), Ok(true));
        assert_eq!(has_unique_subgroup_of_prime_order(&build("symmetric:3"), 2), Ok(false));
        assert_eq!(has_unique_subgroup_of_prime_order(&build("cyclic:12"), 3), Ok(true));
        assert_eq!(
            has_unique_subgroup_of_prime_order(&build("cyclic:12"), 5),
            Err(SubgroupError::NotAPrimeDivisor { p: 5, order: 12 })
        );
    }

    #[test]
    fn sylow_profiles() {
        let s3 = build("symmetric:3");
        let p3 = sylow_profile(&s3, 3).unwrap();
        assert!(p3.unique && p3.cyclic && !p3.generalized_quaternion);
        assert!(!sylow_profile(&s3, 2).unwrap().unique);

        let q8z3 = build("product(quaternion:8,cyclic:3)");
        let p2 = sylow_profile(&q8z3, 2).unwrap();
        assert_eq!(p2.exponent, 3);
        assert!(p2.unique && !p2.cyclic && p2.generalized_quaternion);

        assert!(sylow_profile(&s3, 7).is_err());
        // Dihedral 2-groups are neither cyclic nor quaternion.
        let d4 = sylow_profile(&build("dihedral:4"), 2).unwrap();
        assert!(!d4.cyclic && !d4.generalized_quaternion);
    }

    #[test]
    fn element_of_order() {
        assert!(has_element_of_order(&build("cyclic:12"), 6).is_some());
        assert!(has_element_of_order(&build("quaternion:8"), 8).is_none());
        assert!(has_element_of_order(&build("symmetric:3"), 6).is_none());
    }

    #[test]
    fn power_relation_matches_inclusion() {
        let g = build("dicyclic:3");
        let lattice = CyclicLattice::new(&g);
        for a in g.elements() {
            for b in g.elements() {
                assert_eq!(lattice.get(a).is_subset(lattice.get(b)), lattice.is_power_of(a.0, b.0));
            }
        }
    }
}
