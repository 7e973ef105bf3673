//! Group-expression grammar.
//!
//! ```text
//! expr := atom | "product(" expr ("," expr)+ ")"
//! atom := "cyclic:" INT | "abelian:" INT ("," INT)* | "dihedral:" INT
//!       | "dicyclic:" INT | "quaternion:" INT | "symmetric:" INT
//!       | "alternating:" INT | "semidirect:" INT "," INT "," INT
//! ```
//!
//! Whitespace is ignored everywhere. `quaternion:N` is sugar for
//! `dicyclic:N/4` and requires N to be a power of two, at least 8.

use std::fmt;

use super::{gcd, GroupError};

/// Largest degree accepted for `symmetric:` and `alternating:`.
pub const MAX_PERMUTATION_DEGREE: u64 = 6;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GroupExpr {
    Cyclic(u64),
    /// Direct product of cyclic groups of the given orders.
    Abelian(Vec<u64>),
    /// D_n of order 2n.
    Dihedral(u64),
    /// Dic_n of order 4n; Q_{2^k} is Dic_{2^{k-2}}.
    Dicyclic(u64),
    Symmetric(u64),
    Alternating(u64),
    Product(Vec<GroupExpr>),
    /// Z_m ⋊ Z_n with b a b^-1 = a^k.
    Semidirect { m: u64, n: u64, k: u64 },
}

impl GroupExpr {
    /// Order of the group the expression denotes, without building it.
    pub fn order(&self) -> u128 {
        match self {
            GroupExpr::Cyclic(n) => *n as u128,
            GroupExpr::Abelian(fs) => fs.iter().map(|&f| f as u128).product(),
            GroupExpr::Dihedral(n) => 2 * *n as u128,
            GroupExpr::Dicyclic(n) => 4 * *n as u128,
            GroupExpr::Symmetric(n) => (1..=*n as u128).product(),
            GroupExpr::Alternating(n) => {
                let f: u128 = (1..=*n as u128).product();
                if *n >= 2 {
                    f / 2
                } else {
                    f
                }
            }
            GroupExpr::Product(parts) => parts.iter().map(GroupExpr::order).product(),
            GroupExpr::Semidirect { m, n, .. } => *m as u128 * *n as u128,
        }
    }

    /// Checks parameter ranges and the semidirect action.
    pub fn validate(&self) -> Result<(), GroupError> {
        let positive = |what: &str, v: u64| {
            if v == 0 {
                Err(GroupError::Parameter(format!("{what} must be positive")))
            } else {
                Ok(())
            }
        };
        match self {
            GroupExpr::Cyclic(n) => positive("cyclic order", *n),
            GroupExpr::Abelian(fs) => {
                if fs.is_empty() {
                    return Err(GroupError::Parameter("abelian needs at least one factor".into()));
                }
                fs.iter().try_for_each(|&f| positive("abelian factor", f))
            }
            GroupExpr::Dihedral(n) => positive("dihedral parameter", *n),
            GroupExpr::Dicyclic(n) => positive("dicyclic parameter", *n),
            GroupExpr::Symmetric(n) | GroupExpr::Alternating(n) => {
                if *n == 0 || *n > MAX_PERMUTATION_DEGREE {
                    Err(GroupError::Parameter(format!(
                        "permutation degree {n} outside 1..={MAX_PERMUTATION_DEGREE}"
                    )))
                } else {
                    Ok(())
                }
            }
            GroupExpr::Product(parts) => {
                if parts.len() < 2 {
                    return Err(GroupError::Parameter("product needs at least two factors".into()));
                }
                parts.iter().try_for_each(GroupExpr::validate)
            }
            GroupExpr::Semidirect { m, n, k } => {
                positive("semidirect m", *m)?;
                positive("semidirect n", *n)?;
                if semidirect_action_is_valid(*m, *n, *k) {
                    Ok(())
                } else {
                    Err(GroupError::InvalidSemidirect { m: *m, n: *n, k: *k })
                }
            }
        }
    }
}

/// k^n ≡ 1 (mod m) and gcd(k, m) = 1.
pub fn semidirect_action_is_valid(m: u64, n: u64, k: u64) -> bool {
    if m == 0 {
        return false;
    }
    if gcd(k % m, m) != 1 && m != 1 {
        return false;
    }
    pow_mod(k, n, m) == 1 % m
}

pub(crate) fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    let m = m as u128;
    let mut b = base as u128 % m;
    let mut acc = 1u128 % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

impl fmt::Display for GroupExpr {
    /// Canonical text; parses back to an equal expression.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupExpr::Cyclic(n) => write!(f, "cyclic:{n}"),
            GroupExpr::Abelian(fs) => {
                write!(f, "abelian:")?;
                for (i, x) in fs.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{x}")?;
                }
                Ok(())
            }
            GroupExpr::Dihedral(n) => write!(f, "dihedral:{n}"),
            GroupExpr::Dicyclic(n) => write!(f, "dicyclic:{n}"),
            GroupExpr::Symmetric(n) => write!(f, "symmetric:{n}"),
            GroupExpr::Alternating(n) => write!(f, "alternating:{n}"),
            GroupExpr::Product(parts) => {
                write!(f, "product(")?;
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{p}")?;
                }
                write!(f, ")")
            }
            GroupExpr::Semidirect { m, n, k } => write!(f, "semidirect:{m},{n},{k}"),
        }
    }
}

impl std::str::FromStr for GroupExpr {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_group_expr(s)
    }
}

/// Parses and validates a group expression.
pub fn parse_group_expr(text: &str) -> Result<GroupExpr, GroupError> {
    let chars: Vec<(usize, char)> = text.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
    let mut p = Parser { chars, pos: 0, end: text.len() };
    let expr = p.expr()?;
    if p.pos < p.chars.len() {
        return Err(p.error("unexpected trailing input"));
    }
    expr.validate()?;
    Ok(expr)
}

struct Parser {
    chars: Vec<(usize, char)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn offset(&self) -> usize {
        self.chars.get(self.pos).map_or(self.end, |&(o, _)| o)
    }

    fn error(&self, message: &str) -> GroupError {
        GroupError::Syntax { position: self.offset(), message: message.to_string() }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn expect(&mut self, c: char) -> Result<(), GroupError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected '{c}'")))
        }
    }

    fn ident(&mut self) -> String {
        let mut s = String::new();
        while let Some(c) = self.peek().filter(|c| c.is_ascii_alphabetic()) {
            s.push(c.to_ascii_lowercase());
            self.pos += 1;
        }
        s
    }

    fn int(&mut self) -> Result<u64, GroupError> {
        let start = self.pos;
        let mut v: u64 = 0;
        while let Some(d) = self.peek().and_then(|c| c.to_digit(10)) {
            v = v
                .checked_mul(10)
                .and_then(|v| v.checked_add(d as u64))
                .ok_or_else(|| self.error("integer too large"))?;
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected integer"));
        }
        Ok(v)
    }

    fn next_is_int_after_comma(&self) -> bool {
        self.peek() == Some(',')
            && self.chars.get(self.pos + 1).is_some_and(|&(_, c)| c.is_ascii_digit())
    }

    fn expr(&mut self) -> Result<GroupExpr, GroupError> {
        let start = self.pos;
        let name = self.ident();
        if name.is_empty() {
            return Err(self.error("expected group constructor"));
        }
        if name == "product" {
            self.expect('(')?;
            let mut parts = vec![self.expr()?];
            while self.peek() == Some(',') {
                self.pos += 1;
                parts.push(self.expr()?);
            }
            self.expect(')')?;
            if parts.len() < 2 {
                return Err(self.error("product needs at least two factors"));
            }
            return Ok(GroupExpr::Product(parts));
        }
        self.expect(':')?;
        let first = self.int()?;
        let expr = match name.as_str() {
            "cyclic" => GroupExpr::Cyclic(first),
            "abelian" => {
                let mut fs = vec![first];
                while self.next_is_int_after_comma() {
                    self.pos += 1;
                    fs.push(self.int()?);
                }
                GroupExpr::Abelian(fs)
            }
            "dihedral" => GroupExpr::Dihedral(first),
            "dicyclic" => GroupExpr::Dicyclic(first),
            "quaternion" => {
                if first < 8 || !first.is_power_of_two() {
                    return Err(GroupError::Parameter(format!(
                        "quaternion order {first} must be a power of two, at least 8"
                    )));
                }
                GroupExpr::Dicyclic(first / 4)
            }
            "symmetric" => GroupExpr::Symmetric(first),
            "alternating" => GroupExpr::Alternating(first),
            "semidirect" => {
                self.expect(',')?;
                let n = self.int()?;
                self.expect(',')?;
                let k = self.int()?;
                GroupExpr::Semidirect { m: first, n, k }
            }
            _ => {
                self.pos = start;
                return Err(self.error(&format!("unknown constructor '{name}'")));
            }
        };
        Ok(expr)
    }
}
