//! Finite groups given by their Cayley table.
//!
//! Every group in this crate is an immutable [`GroupTable`]: a validated
//! multiplication table on the indices `0..n` with the identity normalized to
//! index 0 and the element orders cached. Tables come from three places:
//! the constructors in [`build`] (driven by a [`GroupExpr`]), permutation
//! closure in [`perm`], and ingestion of `.cay` / `.perm` files in [`io`].

pub mod build;
pub mod expr;
pub mod io;
pub mod perm;
mod validate;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use build::{build_group, build_group_with_cap, DEFAULT_ORDER_CAP};
pub use expr::{parse_group_expr, GroupExpr};
pub use perm::{closure_from_permutations, Permutation};
pub use validate::{validate_table, Axiom, FULL_ASSOCIATIVITY_LIMIT};

/// Index of an element inside a [`GroupTable`]. Index 0 is the identity.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ElementId(pub usize);

impl ElementId {
    pub const IDENTITY: ElementId = ElementId(0);

    #[inline]
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<usize> for ElementId {
    fn from(i: usize) -> Self {
        ElementId(i)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("invalid parameter: {0}")]
    Parameter(String),
    #[error("invalid semidirect action: {k}^{n} is not 1 mod {m} or gcd({k}, {m}) != 1")]
    InvalidSemidirect { m: u64, n: u64, k: u64 },
    #[error("group order {order} exceeds the configured cap of {cap}")]
    OrderCap { order: u128, cap: usize },
    #[error("not a group: {axiom} fails at ({}, {}, {})", .witness.0, .witness.1, .witness.2)]
    NotAGroup { axiom: Axiom, witness: (usize, usize, usize) },
    #[error("malformed table: {0}")]
    Malformed(String),
}

/// Which elements realize `x` and `y` in `<x, y | x^{2m} = e, y^2 = x^m, y^-1 x y = x^-1>`.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct DicyclicGenerators {
    pub x: ElementId,
    pub y: ElementId,
}

/// A finite group as a validated operation table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    name: String,
    n: usize,
    table: Vec<u32>,
    orders: Vec<u32>,
    inverses: Vec<u32>,
    dicyclic: Option<DicyclicGenerators>,
}

impl GroupTable {
    /// Wraps a table that is already known to be a group with identity at 0.
    pub(crate) fn from_trusted(name: impl Into<String>, n: usize, table: Vec<u32>) -> Self {
        debug_assert_eq!(table.len(), n * n);
        let mut inverses = vec![0u32; n];
        for a in 0..n {
            let row = &table[a * n..(a + 1) * n];
            let inv = row.iter().position(|&v| v == 0).expect("row contains identity");
            inverses[a] = inv as u32;
        }
        let mut orders = vec![0u32; n];
        for g in 0..n {
            let mut k = 1u32;
            let mut cur = g;
            while cur != 0 {
                cur = table[cur * n + g] as usize;
                k += 1;
            }
            orders[g] = k;
        }
        GroupTable {
            name: name.into(),
            n,
            table,
            orders,
            inverses,
            dicyclic: None,
        }
    }

    pub(crate) fn with_dicyclic(mut self, gens: DicyclicGenerators) -> Self {
        self.dicyclic = Some(gens);
        self
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// |G|.
    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b] as usize
    }

    #[inline]
    pub fn inverse(&self, a: usize) -> usize {
        self.inverses[a] as usize
    }

    pub fn pow(&self, g: usize, k: u64) -> usize {
        let k = k % self.orders[g] as u64;
        let mut acc = 0;
        for _ in 0..k {
            acc = self.mul(acc, g);
        }
        acc
    }

    /// Cached element orders, indexed by element.
    pub fn orders(&self) -> &[u32] {
        &self.orders
    }

    pub fn row(&self, a: usize) -> &[u32] {
        &self.table[a * self.n..(a + 1) * self.n]
    }

    /// The raw table in row-major order.
    pub fn table(&self) -> &[u32] {
        &self.table
    }

    pub fn elements(&self) -> impl Iterator<Item = ElementId> {
        (0..self.n).map(ElementId)
    }

    /// Generators from the dicyclic constructor, when the group was built that way.
    pub fn dicyclic_generators(&self) -> Option<DicyclicGenerators> {
        self.dicyclic
    }

    /// Multiset of element orders as `order -> count`.
    pub fn order_multiset(&self) -> BTreeMap<u32, usize> {
        let mut m = BTreeMap::new();
        for &o in &self.orders {
            *m.entry(o).or_insert(0) += 1;
        }
        m
    }

    pub fn exponent(&self) -> u64 {
        self.orders.iter().fold(1u64, |acc, &o| lcm(acc, o as u64))
    }

    pub fn is_cyclic(&self) -> bool {
        self.orders.iter().any(|&o| o as usize == self.n)
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.n).all(|a| (a + 1..self.n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// True for the trivial group and for Z_{p^k}.
    pub fn is_cyclic_p_group(&self) -> bool {
        self.is_cyclic() && crate::factor::factorize(self.n as u64).len() <= 1
    }
}

/// Least m ≥ 1 with g^m = e, computed by repeated multiplication.
pub fn element_order(group: &GroupTable, g: ElementId) -> u64 {
    let mut cur = g.0;
    let mut k = 1u64;
    while cur != 0 {
        cur = group.mul(cur, g.0);
        k += 1;
    }
    k
}

/// True iff every non-identity element has order 2, i.e. G ≅ Z_2^m.
pub fn is_elementary_abelian_2(group: &GroupTable) -> bool {
    group.order() > 1 && group.orders()[1..].iter().all(|&o| o == 2)
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

#[cfg(test)]
mod tests {
    use super::*;

    fn build(text: &str) -> GroupTable {
        build_group(&parse_group_expr(text).unwrap()).unwrap()
    }

    #[test]
    fn element_order_examples() {
        let z12 = build("cyclic:12");
        assert_eq!(element_order(&z12, ElementId(2)), 6);
        assert_eq!(element_order(&z12, ElementId::IDENTITY), 1);
        let q8 = build("quaternion:8");
        let y = q8.dicyclic_generators().unwrap().y;
        assert_eq!(element_order(&q8, y), 4);
        for g in q8.elements() {
            assert_eq!(element_order(&q8, g), q8.orders()[g.0] as u64);
        }
    }

    #[test]
    fn elementary_abelian_detection() {
        assert!(is_elementary_abelian_2(&build("abelian:2,2,2")));
        assert!(!is_elementary_abelian_2(&build("cyclic:4")));
        assert!(!is_elementary_abelian_2(&build("quaternion:8")));
        assert!(!is_elementary_abelian_2(&build("cyclic:1")));
    }

    #[test]
    fn cyclic_p_group_detection() {
        assert!(build("cyclic:8").is_cyclic_p_group());
        assert!(build("cyclic:1").is_cyclic_p_group());
        assert!(!build("cyclic:12").is_cyclic_p_group());
        assert!(!build("abelian:2,2").is_cyclic_p_group());
    }

    #[test]
    fn order_is_conjugation_invariant() {
        for text in ["symmetric:4", "quaternion:16", "semidirect:7,3,2", "product(dihedral:4,cyclic:3)"] {
            let g = build(text);
            for a in 0..g.order() {
                for b in 0..g.order() {
                    assert_eq!(g.orders()[g.mul(a, b)], g.orders()[g.mul(b, a)], "{text}");
                }
            }
        }
    }
}
