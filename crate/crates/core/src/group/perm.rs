//! Permutation groups closed from a generating set.

use std::collections::HashMap;

use super::build::DEFAULT_ORDER_CAP;
use super::{GroupError, GroupTable};

/// A permutation of `0..d` stored as its image list.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<u32>);

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation((0..degree as u32).collect())
    }

    pub fn from_images(images: Vec<u32>) -> Result<Self, GroupError> {
        let d = images.len();
        let mut seen = vec![false; d];
        for &i in &images {
            let i = i as usize;
            if i >= d || seen[i] {
                return Err(GroupError::Malformed(format!("{images:?} is not a permutation of 0..{d}")));
            }
            seen[i] = true;
        }
        Ok(Permutation(images))
    }

    pub fn transposition(degree: usize, a: usize, b: usize) -> Self {
        let mut p = Self::identity(degree);
        p.0.swap(a, b);
        p
    }

    /// The cycle `points[0] -> points[1] -> ... -> points[0]`.
    pub fn cycle(degree: usize, points: &[usize]) -> Self {
        let mut p = Self::identity(degree);
        for w in 0..points.len() {
            p.0[points[w]] = points[(w + 1) % points.len()] as u32;
        }
        p
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.0
    }

    /// Apply `self` first, then `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation(self.0.iter().map(|&i| other.0[i as usize]).collect())
    }
}

/// Closes the group generated by `generators` and returns its Cayley table.
/// The identity permutation becomes element 0; the rest follow in discovery order.
pub fn closure_from_permutations(degree: usize, generators: &[Permutation]) -> Result<GroupTable, GroupError> {
    closure_with_cap(degree, generators, DEFAULT_ORDER_CAP)
}

pub(crate) fn closure_with_cap(
    degree: usize,
    generators: &[Permutation],
    cap: usize,
) -> Result<GroupTable, GroupError> {
    for g in generators {
        if g.degree() != degree {
            return Err(GroupError::Malformed(format!(
                "generator of degree {} in a group of degree {degree}",
                g.degree()
            )));
        }
        Permutation::from_images(g.0.clone())?;
    }
    let mut elements = vec![Permutation::identity(degree)];
    let mut index: HashMap<Permutation, usize> = HashMap::new();
    index.insert(elements[0].clone(), 0);
    let mut next = 0;
    while next < elements.len() {
        for s in generators {
            let p = elements[next].then(s);
            if !index.contains_key(&p) {
                if elements.len() >= cap {
                    return Err(GroupError::OrderCap { order: elements.len() as u128 + 1, cap });
                }
                index.insert(p.clone(), elements.len());
                elements.push(p);
            }
        }
        next += 1;
    }
    let n = elements.len();
    let mut table = Vec::with_capacity(n * n);
    for a in &elements {
        for b in &elements {
            table.push(index[&a.then(b)] as u32);
        }
    }
    Ok(GroupTable::from_trusted(format!("permutations of degree {degree}"), n, table))
}
