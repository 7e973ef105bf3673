//! Prime factorization by trial division.

/// `n = ∏ p^α` as ascending `(p, α)` pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization(Vec<(u64, u32)>);

impl Factorization {
    pub fn pairs(&self) -> &[(u64, u32)] {
        &self.0
    }

    /// π(n), the prime divisors.
    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.0.iter().map(|&(p, _)| p)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponent_of(&self, p: u64) -> u32 {
        self.0.iter().find(|&&(q, _)| q == p).map_or(0, |&(_, a)| a)
    }

    pub fn value(&self) -> u64 {
        self.0.iter().map(|&(p, a)| p.pow(a)).product()
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&(_, a)| a == 1)
    }
}

pub fn factorize(mut n: u64) -> Factorization {
    assert!(n >= 1, "factorize expects a positive integer");
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut a = 0;
            while n.is_multiple_of(p) {
                n /= p;
                a += 1;
            }
            out.push((p, a));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    Factorization(out)
}
