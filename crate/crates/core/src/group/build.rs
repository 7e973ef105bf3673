//! Constructors for the groups a [`GroupExpr`] can name.

use super::expr::pow_mod;
use super::perm::{closure_with_cap, Permutation};
use super::{DicyclicGenerators, ElementId, GroupError, GroupExpr, GroupTable};

/// Largest order `build_group` will materialize.
pub const DEFAULT_ORDER_CAP: usize = 20_000;

pub fn build_group(expr: &GroupExpr) -> Result<GroupTable, GroupError> {
    build_group_with_cap(expr, DEFAULT_ORDER_CAP)
}

pub fn build_group_with_cap(expr: &GroupExpr, cap: usize) -> Result<GroupTable, GroupError> {
    expr.validate()?;
    let order = expr.order();
    if order > cap as u128 {
        return Err(GroupError::OrderCap { order, cap });
    }
    let g = build_unchecked(expr, cap)?;
    debug_assert_eq!(g.order() as u128, order);
    Ok(g.with_name(expr.to_string()))
}

fn build_unchecked(expr: &GroupExpr, cap: usize) -> Result<GroupTable, GroupError> {
    Ok(match expr {
        GroupExpr::Cyclic(n) => cyclic(*n as usize),
        GroupExpr::Abelian(fs) => {
            let mut acc = cyclic(fs[0] as usize);
            for &f in &fs[1..] {
                acc = direct_product(&acc, &cyclic(f as usize));
            }
            acc
        }
        GroupExpr::Dihedral(n) => dihedral(*n as usize),
        GroupExpr::Dicyclic(m) => dicyclic(*m as usize),
        GroupExpr::Symmetric(d) => {
            let d = *d as usize;
            let mut gens = vec![];
            if d >= 2 {
                gens.push(Permutation::transposition(d, 0, 1));
                gens.push(Permutation::cycle(d, &(0..d).collect::<Vec<_>>()));
            }
            closure_with_cap(d, &gens, cap)?
        }
        GroupExpr::Alternating(d) => {
            let d = *d as usize;
            let gens: Vec<_> = (2..d).map(|i| Permutation::cycle(d, &[0, 1, i])).collect();
            closure_with_cap(d, &gens, cap)?
        }
        GroupExpr::Product(parts) => {
            let mut acc = build_unchecked(&parts[0], cap)?;
            for p in &parts[1..] {
                acc = direct_product(&acc, &build_unchecked(p, cap)?);
            }
            acc
        }
        GroupExpr::Semidirect { m, n, k } => semidirect(*m as usize, *n as usize, *k),
    })
}

fn from_fn(n: usize, name: String, op: impl Fn(usize, usize) -> usize) -> GroupTable {
    let mut table = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            table.push(op(a, b) as u32);
        }
    }
    GroupTable::from_trusted(name, n, table)
}

fn cyclic(n: usize) -> GroupTable {
    from_fn(n, format!("cyclic:{n}"), |a, b| (a + b) % n)
}

/// D_n of order 2n; element r^i s^j has index i + n·j.
fn dihedral(n: usize) -> GroupTable {
    from_fn(2 * n, format!("dihedral:{n}"), |a, b| {
        let (i, j) = (a % n, a / n);
        let (c, d) = (b % n, b / n);
        let rot = if j == 0 { (i + c) % n } else { (i + n - c) % n };
        rot + n * ((j + d) % 2)
    })
}

/// Dic_m of order 4m; x^i y^j has index i + 2m·j, with x^{2m} = e, y^2 = x^m, y x = x^-1 y.
fn dicyclic(m: usize) -> GroupTable {
    let n2 = 2 * m;
    let g = from_fn(4 * m, format!("dicyclic:{m}"), |a, b| {
        let (i, j) = (a % n2, a / n2);
        let (c, d) = (b % n2, b / n2);
        if j == 0 {
            (i + c) % n2 + n2 * d
        } else {
            // x^i y x^c y^d = x^{i-c} y^{1+d}
            let e = (i + n2 - c) % n2;
            if d == 0 {
                e + n2
            } else {
                (e + m) % n2
            }
        }
    });
    g.with_dicyclic(DicyclicGenerators { x: ElementId(1 % n2), y: ElementId(n2) })
}

/// Z_m ⋊ Z_n with b a b^-1 = a^k; a^i b^j has index i + m·j.
fn semidirect(m: usize, n: usize, k: u64) -> GroupTable {
    let twists: Vec<usize> = (0..n).map(|j| pow_mod(k, j as u64, m as u64) as usize).collect();
    from_fn(m * n, String::new(), |a, b| {
        let (i, j) = (a % m, a / m);
        let (c, d) = (b % m, b / m);
        (i + twists[j] * c) % m + m * ((j + d) % n)
    })
}

/// Direct product; (a, b) has index a·|B| + b.
pub fn direct_product(a: &GroupTable, b: &GroupTable) -> GroupTable {
    let nb = b.order();
    from_fn(a.order() * nb, format!("product({},{})", a.name(), b.name()), |x, y| {
        a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb)
    })
}
