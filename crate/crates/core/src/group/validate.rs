use std::fmt;

use rand_chacha::rand_core::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{GroupError, GroupTable};

/// Largest order for which associativity is checked on every triple.
pub const FULL_ASSOCIATIVITY_LIMIT: usize = 512;

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Axiom {
    /// Witness `(a, b, c)`: either `a·b = a·c` (row) or `b·a = c·a` (column) with `b ≠ c`.
    Cancellation,
    /// No two-sided identity exists; the witness is `(0, 0, 0)`.
    Identity,
    /// Witness `(a, b, c)` with `(a·b)·c ≠ a·(b·c)`.
    Associativity,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axiom::Cancellation => "cancellation",
            Axiom::Identity => "identity",
            Axiom::Associativity => "associativity",
        })
    }
}

/// Checks the group axioms on a raw table and relabels the identity to index 0.
///
/// Associativity is exhaustive up to [`FULL_ASSOCIATIVITY_LIMIT`]; above that,
/// `10·n²` triples are sampled with a generator seeded from `n`.
pub fn validate_table(raw: &[Vec<u32>]) -> Result<GroupTable, GroupError> {
    let n = raw.len();
    if n == 0 {
        return Err(GroupError::Malformed("empty table".into()));
    }
    for (a, row) in raw.iter().enumerate() {
        if row.len() != n {
            return Err(GroupError::Malformed(format!("row {a} has {} entries, expected {n}", row.len())));
        }
        if let Some(&v) = row.iter().find(|&&v| v as usize >= n) {
            return Err(GroupError::Malformed(format!("entry {v} in row {a} is out of range")));
        }
    }
    let at = |a: usize, b: usize| raw[a][b] as usize;
    let not_a_group = |axiom, witness| GroupError::NotAGroup { axiom, witness };

    let mut seen = vec![usize::MAX; n];
    for a in 0..n {
        for b in 0..n {
            let v = at(a, b);
            if seen[v] != usize::MAX && seen[v] >= a * n {
                return Err(not_a_group(Axiom::Cancellation, (a, seen[v] - a * n, b)));
            }
            seen[v] = a * n + b;
        }
    }
    seen.fill(usize::MAX);
    for b in 0..n {
        for a in 0..n {
            let v = at(a, b);
            if seen[v] != usize::MAX && seen[v] >= b * n {
                return Err(not_a_group(Axiom::Cancellation, (seen[v] - b * n, a, b)));
            }
            seen[v] = b * n + a;
        }
    }

    let e = (0..n)
        .find(|&e| (0..n).all(|j| at(e, j) == j && at(j, e) == j))
        .ok_or(not_a_group(Axiom::Identity, (0, 0, 0)))?;

    let assoc = |a: usize, b: usize, c: usize| at(at(a, b), c) == at(a, at(b, c));
    if n <= FULL_ASSOCIATIVITY_LIMIT {
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if !assoc(a, b, c) {
                        return Err(not_a_group(Axiom::Associativity, (a, b, c)));
                    }
                }
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(n as u64);
        let mut pick = || (rng.next_u64() % n as u64) as usize;
        for _ in 0..10 * n * n {
            let (a, b, c) = (pick(), pick(), pick());
            if !assoc(a, b, c) {
                return Err(not_a_group(Axiom::Associativity, (a, b, c)));
            }
        }
    }

    let relabel = |i: usize| {
        if i == e {
            0
        } else if i == 0 {
            e
        } else {
            i
        }
    };
    let mut table = vec![0u32; n * n];
    for a in 0..n {
        for b in 0..n {
            table[relabel(a) * n + relabel(b)] = relabel(at(a, b)) as u32;
        }
    }
    Ok(GroupTable::from_trusted(format!("table of order {n}"), n, table))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic_rows(n: u32, shift_identity_to: u32) -> Vec<Vec<u32>> {
        // Z_n with labels rotated so that the identity sits at `shift_identity_to`.
        let lab = |i: u32| (i + shift_identity_to) % n;
        let mut rows = vec![vec![0; n as usize]; n as usize];
        for a in 0..n {
            for b in 0..n {
                rows[lab(a) as usize][lab(b) as usize] = lab((a + b) % n);
            }
        }
        rows
    }

    #[test]
    fn trivial_group() {
        let g = validate_table(&[vec![0]]).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.orders(), &[1]);
    }

    #[test]
    fn klein_four() {
        let rows: Vec<Vec<u32>> = (0..4u32).map(|a| (0..4u32).map(|b| a ^ b).collect()).collect();
        let g = validate_table(&rows).unwrap();
        assert_eq!(g.orders(), &[1, 2, 2, 2]);
    }

    #[test]
    fn repeated_row_entry() {
        let rows = vec![vec![0, 1], vec![1, 1]];
        assert!(matches!(
            validate_table(&rows),
            Err(GroupError::NotAGroup { axiom: Axiom::Cancellation, witness: (1, 0, 1) })
        ));
    }

    #[test]
    fn missing_identity() {
        // Latin square with no identity: a·b = -(a + b) mod 3
        let rows: Vec<Vec<u32>> = (0..3u32).map(|a| (0..3u32).map(|b| (6 - a - b) % 3).collect()).collect();
        assert!(matches!(
            validate_table(&rows),
            Err(GroupError::NotAGroup { axiom: Axiom::Identity, .. })
        ));
    }

    #[test]
    fn non_associative_loop() {
        // The smallest non-associative loop with identity 0 (order 5).
        let rows = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        match validate_table(&rows) {
            Err(GroupError::NotAGroup { axiom: Axiom::Associativity, witness: (a, b, c) }) => {
                let at = |x: usize, y: usize| rows[x][y] as usize;
                assert_ne!(at(at(a, b), c), at(a, at(b, c)));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn identity_is_relabelled_to_zero() {
        let g = validate_table(&cyclic_rows(5, 3)).unwrap();
        assert_eq!(g.row(0), &[0, 1, 2, 3, 4]);
        assert_eq!(g.orders()[0], 1);
        assert!(g.is_cyclic());
    }

    #[test]
    fn malformed_tables() {
        assert!(matches!(validate_table(&[]), Err(GroupError::Malformed(_))));
        assert!(matches!(validate_table(&[vec![0, 1]]), Err(GroupError::Malformed(_))));
        assert!(matches!(validate_table(&[vec![0, 2], vec![1, 0]]), Err(GroupError::Malformed(_))));
    }

    #[test]
    fn sampled_associativity_above_limit() {
        let rows = cyclic_rows(FULL_ASSOCIATIVITY_LIMIT as u32 + 8, 0);
        assert!(validate_table(&rows).is_ok());
    }
}
