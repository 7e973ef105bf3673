//! Cross-module invariants on randomly chosen small groups.

use proptest::prelude::*;

use powergraph::classify::{predict_enhanced_diameter, predict_power_diameter};
use powergraph::graphs::{complement, components, enhanced_power_graph, power_graph, star, GraphKind};
use powergraph::group::validate_table;
use powergraph::subgroups::{cyc_set, cyclic_subgroup, maximal_cyclic_subgroups};
use powergraph::verify::{catalog_exprs, power_universal_vertices, CatalogSpec, GroupAnalysis};
use powergraph::{build_group, GroupExpr, GroupTable};

fn small_catalog() -> Vec<GroupExpr> {
    catalog_exprs(&CatalogSpec { max_order: 60, ..CatalogSpec::default() })
}

fn any_group() -> impl Strategy<Value = GroupTable> {
    let exprs = small_catalog();
    (0..exprs.len()).prop_map(move |i| build_group(&exprs[i]).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn identity_isolated_in_both_complements(g in any_group()) {
        let family = maximal_cyclic_subgroups(&g);
        prop_assert!(star(&complement(&power_graph(&g))).isolated.contains(&0));
        prop_assert!(star(&complement(&enhanced_power_graph(&g, &family))).isolated.contains(&0));
    }

    #[test]
    fn cyc_set_is_enhanced_isolated_set(g in any_group()) {
        let family = maximal_cyclic_subgroups(&g);
        let cyc: Vec<usize> = cyc_set(&g, &family).ones().collect();
        prop_assert_eq!(cyc, star(&complement(&enhanced_power_graph(&g, &family))).isolated);
    }

    #[test]
    fn power_isolated_set_matches_brute_force(g in any_group()) {
        prop_assume!(!g.is_cyclic_p_group());
        prop_assert_eq!(
            star(&complement(&power_graph(&g))).isolated,
            power_universal_vertices(&g)
        );
    }

    #[test]
    fn table_round_trips_through_validation(g in any_group()) {
        let rows: Vec<Vec<u32>> = (0..g.order()).map(|a| g.row(a).to_vec()).collect();
        let v = validate_table(&rows).unwrap();
        prop_assert_eq!(v.table(), g.table());
        prop_assert_eq!(v.orders(), g.orders());
    }

    #[test]
    fn element_orders_divide_group_order(g in any_group()) {
        for (i, &o) in g.orders().iter().enumerate() {
            prop_assert_eq!(g.order() % o as usize, 0);
            prop_assert_eq!(o == 1, i == 0);
            prop_assert_eq!(cyclic_subgroup(&g, i.into()).order(), o as usize);
        }
    }

    #[test]
    fn star_complements_are_connected(g in any_group()) {
        for kind in [GraphKind::Power, GraphKind::Enhanced] {
            let a = GroupAnalysis::new(&g);
            let s = star(&complement(&a.graph(kind)));
            if a.is_applicable(kind) {
                prop_assert_eq!(components(&s.graph).len(), 1);
            } else {
                prop_assert!(s.kept.is_empty());
            }
        }
    }

    #[test]
    fn measured_equals_predicted(g in any_group()) {
        let a = GroupAnalysis::new(&g);
        if let Ok(p) = predict_power_diameter(&g) {
            prop_assert_eq!(a.measure(GraphKind::Power).diameter, Some(p.value as usize));
        }
        if let Ok(p) = predict_enhanced_diameter(&g) {
            prop_assert_eq!(a.measure(GraphKind::Enhanced).diameter, Some(p.value as usize));
        }
    }
}

#[test]
fn product_order_and_lcm_law() {
    let exprs = [("dihedral:4", "cyclic:6"), ("quaternion:8", "cyclic:5"), ("alternating:4", "abelian:2,2")];
    for (a, b) in exprs {
        let ga = build_group(&a.parse().unwrap()).unwrap();
        let gb = build_group(&b.parse().unwrap()).unwrap();
        let p = build_group(&format!("product({a},{b})").parse().unwrap()).unwrap();
        assert_eq!(p.order(), ga.order() * gb.order());
        let mut expected: Vec<u64> = Vec::new();
        for &x in ga.orders() {
            for &y in gb.orders() {
                let (x, y) = (x as u64, y as u64);
                let g = (1..=x.min(y)).rev().find(|d| x % d == 0 && y % d == 0).unwrap();
                expected.push(x * y / g);
            }
        }
        let got: Vec<u64> = p.orders().iter().map(|&o| o as u64).collect();
        assert_eq!(got, expected);
    }
}
