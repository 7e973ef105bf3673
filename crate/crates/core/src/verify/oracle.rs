//! Brute-force checks that avoid the maximal-cyclic machinery.

use fixedbitset::FixedBitSet;

use crate::classify::{PhiWitness, PsiWitness};
use crate::factor::factorize;
use crate::group::{ElementId, GroupTable};

/// Closes `gens` under multiplication.
pub fn generated_subgroup(group: &GroupTable, gens: &[ElementId]) -> FixedBitSet {
    let mut members = FixedBitSet::with_capacity(group.order());
    members.insert(0);
    let mut frontier = vec![0usize];
    while let Some(a) = frontier.pop() {
        for s in gens {
            let b = group.mul(a, s.0);
            if !members.put(b) {
                frontier.push(b);
            }
        }
    }
    members
}

/// ⟨x, y⟩ is cyclic iff it contains an element whose order is |⟨x, y⟩|.
pub fn oracle_pair_cyclic(group: &GroupTable, x: ElementId, y: ElementId) -> bool {
    let h = generated_subgroup(group, &[x, y]);
    let size = h.count_ones(..) as u32;
    h.ones().any(|g| group.orders()[g] == size)
}

fn is_power(group: &GroupTable, g: ElementId, h: ElementId) -> bool {
    generated_subgroup(group, &[h]).contains(g.0)
}

/// Re-derives a Ψ witness from subgroup closures rather than order counts.
pub fn audit_psi(group: &GroupTable, w: &PsiWitness) -> Result<(), String> {
    let n = group.order() as u64;
    let f = factorize(n);
    if f.len() < 2 {
        return Err("order has fewer than two prime divisors".into());
    }
    let (p, alpha) = *f.pairs().get(w.k).ok_or("prime index out of range")?;
    if p != w.prime || w.beta < 1 || w.beta >= alpha {
        return Err(format!("beta {} not in [1, {alpha}) for prime {p}", w.beta));
    }
    let expected = n / p.pow(alpha - w.beta);
    let got = generated_subgroup(group, &[w.element]).count_ones(..) as u64;
    if got != expected {
        return Err(format!("witness element has order {got}, expected {expected}"));
    }
    for &(q, beta) in f.pairs() {
        let of_order_q: Vec<ElementId> =
            group.elements().filter(|g| group.orders()[g.0] as u64 == q).collect();
        if generated_subgroup(group, &of_order_q).count_ones(..) as u64 != q {
            return Err(format!("more than one subgroup of order {q}"));
        }
        if q != p {
            let q_elements: Vec<ElementId> = group
                .elements()
                .filter(|g| {
                    let mut o = group.orders()[g.0] as u64;
                    while o.is_multiple_of(q) {
                        o /= q;
                    }
                    o == 1
                })
                .collect();
            if generated_subgroup(group, &q_elements).count_ones(..) as u64 != q.pow(beta) {
                return Err(format!("Sylow {q}-subgroup is not unique"));
            }
        }
    }
    Ok(())
}

/// Re-derives a Φ witness with subgroup closures and the pairwise oracle.
pub fn audit_phi(group: &GroupTable, w: &PhiWitness) -> Result<(), String> {
    let (x, y) = (w.x, w.y);
    if x == y {
        return Err("x = y".into());
    }
    for v in [x, y] {
        if group.elements().all(|h| oracle_pair_cyclic(group, v, h)) {
            return Err(format!("{v} lies in Cyc(G)"));
        }
    }
    if !oracle_pair_cyclic(group, x, y) {
        return Err("<x, y> is not cyclic".into());
    }
    let orders = group.orders();
    let properly_inside = |v: ElementId| {
        group.elements().any(|h| orders[h.0] > orders[v.0] && is_power(group, v, h))
    };
    for v in [x, y] {
        if !properly_inside(v) {
            return Err(format!("<{v}> is a maximal cyclic subgroup"));
        }
    }
    for h in group.elements() {
        if properly_inside(h) {
            continue;
        }
        let m = generated_subgroup(group, &[h]);
        if !m.contains(x.0) && !m.contains(y.0) {
            return Err(format!("maximal cyclic <{h}> avoids both x and y"));
        }
    }
    Ok(())
}

/// Elements adjacent in the power graph to every other element, by brute force.
pub fn power_universal_vertices(group: &GroupTable) -> Vec<usize> {
    let subgroups: Vec<FixedBitSet> =
        group.elements().map(|g| generated_subgroup(group, &[g])).collect();
    (0..group.order())
        .filter(|&g| (0..group.order()).all(|h| subgroups[g].contains(h) || subgroups[h].contains(g)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::is_psi_group;
    use crate::group::{build_group, parse_group_expr};

    fn build(text: &str) -> GroupTable {
        build_group(&parse_group_expr(text).unwrap()).unwrap()
    }

    #[test]
    fn pair_cyclic_examples() {
        let z6 = build("cyclic:6");
        assert!(oracle_pair_cyclic(&z6, ElementId(2), ElementId(3)));
        let v4 = build("abelian:2,2");
        assert!(!oracle_pair_cyclic(&v4, ElementId(1), ElementId(2)));
        let q8 = build("quaternion:8");
        let gens = q8.dicyclic_generators().unwrap();
        assert!(!oracle_pair_cyclic(&q8, gens.x, gens.y));
        assert_eq!(generated_subgroup(&q8, &[gens.x, gens.y]).count_ones(..), 8);
    }

    #[test]
    fn psi_audit_accepts_search_result() {
        for text in ["cyclic:12", "product(quaternion:8,cyclic:3)", "dicyclic:3", "cyclic:36"] {
            let g = build(text);
            let w = is_psi_group(&g).unwrap();
            assert_eq!(audit_psi(&g, &w), Ok(()), "{text}");
        }
    }

    #[test]
    fn psi_audit_rejects_tampered_witness() {
        let g = build("cyclic:12");
        let mut w = is_psi_group(&g).unwrap();
        w.element = ElementId(1);
        assert!(audit_psi(&g, &w).is_err());
        w = is_psi_group(&g).unwrap();
        w.beta = 2;
        assert!(audit_psi(&g, &w).is_err());
    }

    #[test]
    fn phi_audit_rejects_non_witness() {
        let q8 = build("quaternion:8");
        let gens = q8.dicyclic_generators().unwrap();
        assert!(audit_phi(&q8, &PhiWitness { x: gens.x, y: gens.y }).is_err());
    }

    #[test]
    fn universal_vertices() {
        assert_eq!(power_universal_vertices(&build("symmetric:3")), vec![0]);
        assert_eq!(power_universal_vertices(&build("cyclic:6")), vec![0, 1, 5]);
        let q = build("quaternion:16");
        let y = q.dicyclic_generators().unwrap().y.0;
        let mut expected = vec![0, q.pow(y, 2)];
        expected.sort();
        assert_eq!(power_universal_vertices(&q), expected);
    }
}
