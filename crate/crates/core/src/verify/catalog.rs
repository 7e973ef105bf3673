//! Deterministic catalog of small groups built from expressions.

use crate::group::expr::semidirect_action_is_valid;
use crate::group::{build_group, GroupError, GroupExpr, GroupTable};

#[derive(Clone, Debug)]
pub struct CatalogSpec {
    pub max_order: usize,
    pub abelian: bool,
    pub dihedral: bool,
    pub dicyclic: bool,
    pub symmetric_alternating: bool,
    pub semidirect: bool,
    pub products: bool,
    pub extra: Vec<GroupExpr>,
}

impl Default for CatalogSpec {
    fn default() -> Self {
        CatalogSpec {
            max_order: 100,
            abelian: true,
            dihedral: true,
            dicyclic: true,
            symmetric_alternating: true,
            semidirect: true,
            products: true,
            extra: Vec::new(),
        }
    }
}

impl CatalogSpec {
    pub fn only_abelian(max_order: usize) -> Self {
        CatalogSpec {
            max_order,
            abelian: true,
            dihedral: false,
            dicyclic: false,
            symmetric_alternating: false,
            semidirect: false,
            products: false,
            extra: Vec::new(),
        }
    }

    pub fn only_extra(extra: Vec<GroupExpr>) -> Self {
        CatalogSpec { abelian: false, ..Self::only_abelian(usize::MAX) }.with_extra(extra)
    }

    pub fn with_extra(mut self, extra: Vec<GroupExpr>) -> Self {
        self.extra = extra;
        self
    }
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub expr: GroupExpr,
    pub group: GroupTable,
}

/// Largest normal-subgroup order used for semidirect products.
pub const SEMIDIRECT_MAX_M: u64 = 32;

/// Invariant-factor lists a_1 | a_2 | ... with a_1 ≥ 2 and product n.
pub fn abelian_invariant_factors(n: u64) -> Vec<Vec<u64>> {
    fn rec(rem: u64, prev: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if rem == 1 {
            out.push(cur.clone());
            return;
        }
        let mut a = prev.max(2);
        while a <= rem {
            if a.is_multiple_of(prev) && rem.is_multiple_of(a) && (rem / a == 1 || (rem / a).is_multiple_of(a)) {
                cur.push(a);
                rec(rem / a, a, cur, out);
                cur.pop();
            }
            a += 1;
        }
    }
    let mut out = Vec::new();
    if n >= 2 {
        rec(n, 1, &mut Vec::new(), &mut out);
    } else {
        out.push(vec![1]);
    }
    out
}

fn abelian_expr(factors: Vec<u64>) -> GroupExpr {
    if factors.len() == 1 {
        GroupExpr::Cyclic(factors[0])
    } else {
        GroupExpr::Abelian(factors)
    }
}

/// Expressions of the catalog, in catalog order, before building.
pub fn catalog_exprs(spec: &CatalogSpec) -> Vec<GroupExpr> {
    let max = spec.max_order as u128;
    let lo = 4u128;
    let mut out: Vec<GroupExpr> = Vec::new();
    if spec.abelian {
        for n in lo as u64..=spec.max_order as u64 {
            out.extend(abelian_invariant_factors(n).into_iter().map(abelian_expr));
        }
    }
    if spec.dihedral {
        out.extend((2..).map(GroupExpr::Dihedral).take_while(|e| e.order() <= max));
    }
    if spec.dicyclic {
        out.extend((2..).map(GroupExpr::Dicyclic).take_while(|e| e.order() <= max));
    }
    if spec.symmetric_alternating {
        for e in [3, 4, 5].map(GroupExpr::Symmetric).into_iter().chain([4, 5].map(GroupExpr::Alternating)) {
            if e.order() <= max {
                out.push(e);
            }
        }
    }
    if spec.semidirect {
        for m in 3..=SEMIDIRECT_MAX_M {
            for n in 2..=(spec.max_order as u64 / m) {
                for k in 2..m {
                    if semidirect_action_is_valid(m, n, k) {
                        out.push(GroupExpr::Semidirect { m, n, k });
                    }
                }
            }
        }
    }
    if spec.products {
        let nonabelian: Vec<GroupExpr> = (3..)
            .map(GroupExpr::Dihedral)
            .take_while(|e| e.order() * 2 <= max)
            .chain((2..).map(GroupExpr::Dicyclic).take_while(|e| e.order() * 2 <= max))
            .chain([GroupExpr::Alternating(4), GroupExpr::Symmetric(4)].into_iter().filter(|e| e.order() * 2 <= max))
            .collect();
        let abelian_partners: Vec<GroupExpr> = (2..)
            .map(GroupExpr::Cyclic)
            .take_while(|e| e.order() <= max / 6)
            .chain(std::iter::once(GroupExpr::Abelian(vec![2, 2])))
            .collect();
        for (i, a) in nonabelian.iter().enumerate() {
            for b in abelian_partners.iter().chain(&nonabelian[i..]) {
                if a.order() * b.order() <= max {
                    out.push(GroupExpr::Product(vec![a.clone(), b.clone()]));
                }
            }
        }
    }
    out.extend(spec.extra.iter().cloned());
    let mut seen = std::collections::HashSet::new();
    out.retain(|e| seen.insert(e.to_string()));
    out
}

pub fn build_catalog(spec: &CatalogSpec) -> Result<Vec<CatalogEntry>, GroupError> {
    catalog_exprs(spec)
        .into_iter()
        .map(|expr| {
            let group = build_group(&expr)?;
            Ok(CatalogEntry { name: expr.to_string(), expr, group })
        })
        .collect()
}
