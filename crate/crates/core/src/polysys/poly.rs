//! Sparse polynomials over ℚ in structure-constant variables.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::exactla::{parse_rational, Rational};

/// Which kind of structure constant a variable stands for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VarKind {
    /// `e_k f_i = Σ_j a_i^j f_j`.
    A,
    /// `f_i e_k = Σ_j b_i^j f_j`.
    B,
    /// `f_i f_j = Σ_k c_ij e_k`.
    C,
    /// `e_i e_j = Σ_k d_ij e_k`, used only when the even part has dimension at least 2.
    D,
}

impl VarKind {
    fn letter(self) -> char {
        match self {
            VarKind::A => 'a',
            VarKind::B => 'b',
            VarKind::C => 'c',
            VarKind::D => 'd',
        }
    }
}

/// A structure constant. `k` is the even basis index involved; it is 1
/// throughout the `(1, 2)` pattern and is then left out of the name.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var {
    pub kind: VarKind,
    pub i: usize,
    pub j: usize,
    pub k: usize,
}

impl Var {
    pub const fn new(kind: VarKind, i: usize, j: usize, k: usize) -> Self {
        Var { kind, i, j, k }
    }

    /// `a_i^j` with `k = 1`.
    pub const fn a(i: usize, j: usize) -> Self {
        Var::new(VarKind::A, i, j, 1)
    }

    pub const fn b(i: usize, j: usize) -> Self {
        Var::new(VarKind::B, i, j, 1)
    }

    pub const fn c(i: usize, j: usize) -> Self {
        Var::new(VarKind::C, i, j, 1)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letter = self.kind.letter();
        if self.i > 9 || self.j > 9 {
            return write!(f, "{letter}_{}_{}_{}", self.i, self.j, self.k);
        }
        write!(f, "{letter}{}{}", self.i, self.j)?;
        if self.k != 1 || self.kind == VarKind::D {
            write!(f, "_{}", self.k)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("no value assigned to {0}")]
    MissingVariable(Var),
    #[error("cannot parse polynomial {input:?}: {reason}")]
    Parse { input: String, reason: &'static str },
}

/// Product of variables with positive exponents, sorted by variable.
///
/// Ordered graded lexicographically: higher degree first, then by the
/// sorted sequence of variables with repetition.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(Var, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: Var) -> Self {
        Monomial(alloc::vec![(v, 1)])
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    pub fn factors(&self) -> &[(Var, u32)] {
        &self.0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut map: BTreeMap<Var, u32> = self.0.iter().copied().collect();
        for &(v, e) in &other.0 {
            *map.entry(v).or_insert(0) += e;
        }
        Monomial(map.into_iter().collect())
    }

    fn expanded(&self) -> impl Iterator<Item = &Var> + '_ {
        self.0.iter().flat_map(|(v, e)| core::iter::repeat_n(v, *e as usize))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .degree()
            .cmp(&self.degree())
            .then_with(|| self.expanded().cmp(other.expanded()))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, (v, e)) in self.0.iter().enumerate() {
            if idx > 0 {
                f.write_str("*")?;
            }
            write!(f, "{v}")?;
            if *e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Polynomial with no zero coefficients stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, Rational>,
}

pub type Assignment = BTreeMap<Var, Rational>;

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = Poly::zero();
        p.add_term(Monomial::one(), c);
        p
    }

    pub fn var(v: Var) -> Self {
        let mut p = Poly::zero();
        p.add_term(Monomial::var(v), Rational::one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, mono: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(mono);
        match entry {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Poly {
        self.scale(&-Rational::one())
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn variables(&self) -> BTreeSet<Var> {
        self.terms.keys().flat_map(|m| m.0.iter().map(|(v, _)| *v)).collect()
    }

    pub fn eval(&self, assignment: &Assignment) -> Result<Rational, PolyError> {
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, e) in &m.0 {
                let x = assignment.get(v).ok_or(PolyError::MissingVariable(*v))?;
                for _ in 0..*e {
                    t *= x;
                }
            }
            total += t;
        }
        Ok(total)
    }

    /// Scaled so the leading term has coefficient 1; zero stays zero.
    pub fn normalized(&self) -> Poly {
        match self.terms.values().next() {
            Some(lead) => self.scale(&lead.recip()),
            None => Poly::zero(),
        }
    }

    pub fn equals_up_to_scalar(&self, other: &Poly) -> bool {
        self.normalized() == other.normalized()
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            if c.is_negative() {
                f.write_str("-")?;
            } else if idx > 0 {
                f.write_str("+")?;
            }
            let abs = c.abs();
            let constant = m.0.is_empty();
            if constant {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

struct Parser<'a> {
    input: &'a str,
    chars: Vec<char>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, reason: &'static str) -> Result<T, PolyError> {
        Err(PolyError::Parse {
            input: self.input.to_string(),
            reason,
        })
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn number(&mut self) -> Option<usize> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        self.chars[start..self.pos].iter().collect::<String>().parse().ok()
    }

    fn digit(&mut self) -> Option<usize> {
        let d = self.peek()?.to_digit(10)?;
        self.pos += 1;
        Some(d as usize)
    }

    fn var(&mut self, kind: VarKind) -> Result<Var, PolyError> {
        if self.peek() == Some('_') {
            let mut idx = [0usize; 3];
            for slot in &mut idx {
                if self.peek() != Some('_') {
                    return self.err("expected '_' in variable index");
                }
                self.pos += 1;
                match self.number() {
                    Some(n) => *slot = n,
                    None => return self.err("expected variable index"),
                }
            }
            return Ok(Var::new(kind, idx[0], idx[1], idx[2]));
        }
        let (Some(i), Some(j)) = (self.digit(), self.digit()) else {
            return self.err("variables need two index digits");
        };
        let k = if self.peek() == Some('_') {
            self.pos += 1;
            match self.number() {
                Some(k) => k,
                None => return self.err("expected even index after '_'"),
            }
        } else if kind == VarKind::D {
            return self.err("d variables need an even output index");
        } else {
            1
        };
        Ok(Var::new(kind, i, j, k))
    }

    fn factor(&mut self) -> Result<Poly, PolyError> {
        let kind = match self.peek() {
            Some('a') => Some(VarKind::A),
            Some('b') => Some(VarKind::B),
            Some('c') => Some(VarKind::C),
            Some('d') => Some(VarKind::D),
            _ => None,
        };
        if let Some(kind) = kind {
            self.pos += 1;
            let v = self.var(kind)?;
            let mut e = 1;
            if self.peek() == Some('^') {
                self.pos += 1;
                match self.number() {
                    Some(n) if n > 0 => e = n,
                    _ => return self.err("bad exponent"),
                }
            }
            let base = Poly::var(v);
            let mut p = Poly::constant(Rational::one());
            for _ in 0..e {
                p = p.mul(&base);
            }
            return Ok(p);
        }
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit() || c == '/') {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a variable or a rational");
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        match parse_rational(&text) {
            Ok(c) => Ok(Poly::constant(c)),
            Err(_) => self.err("bad rational coefficient"),
        }
    }

    fn term(&mut self) -> Result<Poly, PolyError> {
        let mut p = self.factor()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            p = p.mul(&self.factor()?);
        }
        Ok(p)
    }

    fn poly(&mut self) -> Result<Poly, PolyError> {
        let mut total = Poly::zero();
        let mut first = true;
        loop {
            let negative = match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    false
                }
                Some('-') => {
                    self.pos += 1;
                    true
                }
                None if !first => break,
                _ if first => false,
                _ => return self.err("expected '+' or '-'"),
            };
            let t = self.term()?;
            total = if negative { total.sub(&t) } else { total.add(&t) };
            first = false;
            if self.peek().is_none() {
                break;
            }
        }
        Ok(total)
    }
}

impl FromStr for Poly {
    type Err = PolyError;

    /// Parses sums of `*`-separated factors such as `a11^2-1/2*a12*b21`.
    /// Whitespace is ignored.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut parser = Parser { input: s, chars, pos: 0 };
        if parser.chars.is_empty() {
            return parser.err("empty input");
        }
        parser.poly()
    }
}
