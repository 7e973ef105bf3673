//! Structural recognizers and the closed-form diameter predictions.
//!
//! For a group that is not a cyclic p-group, the star of the power-graph
//! complement has diameter 1 for Z_2^m, 3 for Ψ-groups and 2 otherwise. For a
//! non-cyclic group the star of the enhanced-power-graph complement has
//! diameter 1 for Z_2^m, 3 for Φ-groups and 2 otherwise.

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::factor::factorize;
use crate::graphs::GraphKind;
use crate::group::{is_elementary_abelian_2, ElementId, GroupTable};
use crate::subgroups::{
    cyc_set, has_element_of_order, has_unique_subgroup_of_prime_order, maximal_cyclic_subgroups,
    sylow_profile, MaximalCyclicFamily,
};

#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
pub enum ClassifyError {
    /// The complement has no edges: cyclic p-groups for the power graph,
    /// cyclic groups for the enhanced power graph.
    #[error("the complement of the {0} graph has no edges")]
    EdgelessComplement(GraphKind),
}

/// An element of order |G| / p_k^{α_k − β_k} with every Sylow p-subgroup, p ≠ p_k, unique.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PsiWitness {
    /// Position of p_k in the ascending factorization of |G|.
    pub k: usize,
    pub prime: u64,
    pub beta: u32,
    pub element: ElementId,
}

/// A pair x, y with ⟨x, y⟩ cyclic, neither ⟨x⟩ nor ⟨y⟩ maximal cyclic, and
/// every maximal cyclic subgroup containing x or y.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PhiWitness {
    pub x: ElementId,
    pub y: ElementId,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Reason {
    ElemAbelian2,
    Psi,
    Phi,
    Otherwise,
}

impl std::fmt::Display for Reason {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Reason::ElemAbelian2 => "ElemAbelian2",
            Reason::Psi => "Psi",
            Reason::Phi => "Phi",
            Reason::Otherwise => "Otherwise",
        })
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Psi(PsiWitness),
    Phi(PhiWitness),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct DiameterPrediction {
    pub value: u8,
    pub reason: Reason,
    pub witness: Option<Witness>,
}

impl DiameterPrediction {
    fn elementary() -> Self {
        DiameterPrediction { value: 1, reason: Reason::ElemAbelian2, witness: None }
    }

    fn otherwise() -> Self {
        DiameterPrediction { value: 2, reason: Reason::Otherwise, witness: None }
    }
}

pub fn is_psi_group(group: &GroupTable) -> Option<PsiWitness> {
    let n = group.order() as u64;
    let f = factorize(n);
    if f.len() < 2 {
        return None;
    }
    let unique_prime_subgroups =
        f.primes().all(|p| has_unique_subgroup_of_prime_order(group, p).unwrap_or(false));
    if !unique_prime_subgroups {
        return None;
    }
    let sylow_unique: Vec<bool> =
        f.primes().map(|p| sylow_profile(group, p).map(|s| s.unique).unwrap_or(false)).collect();
    for (k, &(p, alpha)) in f.pairs().iter().enumerate() {
        let others_unique = sylow_unique.iter().enumerate().all(|(i, &u)| i == k || u);
        if !others_unique {
            continue;
        }
        for beta in 1..alpha {
            let target = n / p.pow(alpha - beta);
            if let Some(element) = has_element_of_order(group, target) {
                return Some(PsiWitness { k, prime: p, beta, element });
            }
        }
    }
    None
}

/// Scans pairs x < y outside Cyc(G) in lexicographic order.
pub fn is_phi_group(group: &GroupTable, family: &MaximalCyclicFamily, cyc: &FixedBitSet) -> Option<PhiWitness> {
    if group.is_cyclic() {
        return None;
    }
    let candidates: Vec<usize> = group
        .elements()
        .filter(|&g| !cyc.contains(g.0) && !family.generates_member(group, g))
        .map(|g| g.0)
        .collect();
    let total = family.len();
    for (i, &x) in candidates.iter().enumerate() {
        let mx = family.mask(ElementId(x));
        for &y in &candidates[i + 1..] {
            let my = family.mask(ElementId(y));
            if mx.is_disjoint(my) {
                continue;
            }
            if mx.union_count(my) == total {
                return Some(PhiWitness { x: ElementId(x), y: ElementId(y) });
            }
        }
    }
    None
}

pub fn predict_power_diameter(group: &GroupTable) -> Result<DiameterPrediction, ClassifyError> {
    if group.is_cyclic_p_group() {
        return Err(ClassifyError::EdgelessComplement(GraphKind::Power));
    }
    if is_elementary_abelian_2(group) {
        return Ok(DiameterPrediction::elementary());
    }
    Ok(match is_psi_group(group) {
        Some(w) => DiameterPrediction { value: 3, reason: Reason::Psi, witness: Some(Witness::Psi(w)) },
        None => DiameterPrediction::otherwise(),
    })
}

pub fn predict_enhanced_diameter(group: &GroupTable) -> Result<DiameterPrediction, ClassifyError> {
    let family = maximal_cyclic_subgroups(group);
    let cyc = cyc_set(group, &family);
    predict_enhanced_diameter_with(group, &family, &cyc)
}

pub fn predict_enhanced_diameter_with(
    group: &GroupTable,
    family: &MaximalCyclicFamily,
    cyc: &FixedBitSet,
) -> Result<DiameterPrediction, ClassifyError> {
    if group.is_cyclic() {
        return Err(ClassifyError::EdgelessComplement(GraphKind::Enhanced));
    }
    if is_elementary_abelian_2(group) {
        return Ok(DiameterPrediction::elementary());
    }
    Ok(match is_phi_group(group, family, cyc) {
        Some(w) => DiameterPrediction { value: 3, reason: Reason::Phi, witness: Some(Witness::Phi(w)) },
        None => DiameterPrediction::otherwise(),
    })
}

/// Finite nilpotent iff every Sylow subgroup is unique.
pub fn is_nilpotent(group: &GroupTable) -> bool {
    factorize(group.order() as u64)
        .primes()
        .all(|p| sylow_profile(group, p).map(|s| s.unique).unwrap_or(false))
}

/// G ≅ Q_{2^m} × Z_n with m ≥ 3 and odd n ≥ 3.
pub fn recognize_q2m_times_odd_cyclic(group: &GroupTable) -> bool {
    let n = group.order() as u64;
    let f = factorize(n);
    let odd_part = n >> f.exponent_of(2);
    if f.exponent_of(2) == 0 || odd_part < 3 || !is_nilpotent(group) {
        return false;
    }
    let two = sylow_profile(group, 2).expect("2 divides |G|");
    two.generalized_quaternion
        && f.primes().filter(|&p| p != 2).all(|p| sylow_profile(group, p).map(|s| s.cyclic).unwrap_or(false))
}

/// Everything the recognizers report about one group.
#[derive(Clone, Debug)]
pub struct Classification {
    pub elementary_abelian_2: bool,
    pub nilpotent: bool,
    pub psi: Option<PsiWitness>,
    pub phi: Option<PhiWitness>,
    pub q2m_times_odd_cyclic: bool,
    pub power: Result<DiameterPrediction, ClassifyError>,
    pub enhanced: Result<DiameterPrediction, ClassifyError>,
}

pub fn classify(group: &GroupTable) -> Classification {
    let family = maximal_cyclic_subgroups(group);
    let cyc = cyc_set(group, &family);
    Classification {
        elementary_abelian_2: is_elementary_abelian_2(group),
        nilpotent: is_nilpotent(group),
        psi: is_psi_group(group),
        phi: is_phi_group(group, &family, &cyc),
        q2m_times_odd_cyclic: recognize_q2m_times_odd_cyclic(group),
        power: predict_power_diameter(group),
        enhanced: predict_enhanced_diameter_with(group, &family, &cyc),
    }
}
