//! Z2-graded algebras given by structure constants, and the Zinbiel
//! superidentity.
//!
//! The basis is always ordered `e1..en` (even) followed by `f1..fm` (odd);
//! coordinate vectors, tensors and witnesses use that order. Basis products
//! that are never set are zero.
//!
//! The superidentity residual is
//!
//! ```text
//! sZ{a,b,c} = (ab)c - a(bc + (-1)^{|b||c|} cb)
//! ```
//!
//! with the sign taken from the parities of the *second and third*
//! arguments. [`SignConvention::FirstSecond`] exists only so the symbolic
//! system can be compared against equation lists produced with the other
//! exponent.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_traits::Zero;
use thiserror::Error;

use crate::exactla::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Parity {
    Even,
    Odd,
}

/// Parity of a product: the sum mod 2.
impl core::ops::Add for Parity {
    type Output = Parity;

    fn add(self, other: Parity) -> Parity {
        if self == other {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl Parity {
    /// Whether `(-1)^{|self||other|}` is `-1`.
    pub fn sign_flips(self, other: Parity) -> bool {
        self == Parity::Odd && other == Parity::Odd
    }
}

/// `e{index}` for even basis vectors, `f{index}` for odd ones; indices start
/// at 1. Ordering is basis order: all `e` before all `f`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BasisLabel {
    pub parity: Parity,
    pub index: usize,
}

impl BasisLabel {
    pub const fn even(index: usize) -> Self {
        BasisLabel {
            parity: Parity::Even,
            index,
        }
    }

    pub const fn odd(index: usize) -> Self {
        BasisLabel {
            parity: Parity::Odd,
            index,
        }
    }
}

impl fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let symbol = match self.parity {
            Parity::Even => 'e',
            Parity::Odd => 'f',
        };
        write!(f, "{symbol}{}", self.index)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid basis label {0:?}")]
pub struct ParseLabelError(pub String);

impl FromStr for BasisLabel {
    type Err = ParseLabelError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseLabelError(String::from(s));
        let mut chars = s.chars();
        let parity = match chars.next() {
            Some('e') => Parity::Even,
            Some('f') => Parity::Odd,
            _ => return Err(err()),
        };
        let digits = chars.as_str();
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(err());
        }
        let index: usize = digits.parse().map_err(|_| err())?;
        if index == 0 {
            return Err(err());
        }
        Ok(BasisLabel { parity, index })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("element has dimensions ({found_even}, {found_odd}), algebra has ({n}, {m})")]
    DimensionMismatch {
        n: usize,
        m: usize,
        found_even: usize,
        found_odd: usize,
    },
    #[error("basis label {label} is out of range for dimensions ({n}, {m})")]
    LabelOutOfRange { label: BasisLabel, n: usize, m: usize },
    #[error("argument {position} is not homogeneous")]
    NonHomogeneous { position: usize },
    #[error("product {left}*{right} has a component of the wrong parity")]
    GradingViolation { left: BasisLabel, right: BasisLabel },
}

/// Whether an element is zero, purely of one parity, or mixed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Homogeneity {
    Zero,
    Pure(Parity),
    Mixed,
}

/// An element `sum x_i e_i + sum y_j f_j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SuperElement {
    even: Vec<Rational>,
    odd: Vec<Rational>,
}

impl SuperElement {
    pub fn zero(n: usize, m: usize) -> Self {
        SuperElement {
            even: vec![Rational::zero(); n],
            odd: vec![Rational::zero(); m],
        }
    }

    pub fn from_parts(even: Vec<Rational>, odd: Vec<Rational>) -> Self {
        SuperElement { even, odd }
    }

    /// Splits a full coordinate vector (even coordinates first).
    pub fn from_coords(n: usize, coords: &[Rational]) -> Self {
        SuperElement {
            even: coords[..n].to_vec(),
            odd: coords[n..].to_vec(),
        }
    }

    pub fn basis(n: usize, m: usize, label: BasisLabel) -> Result<Self, AlgebraError> {
        let mut x = Self::zero(n, m);
        let slot = match label.parity {
            Parity::Even => x.even.get_mut(label.index.wrapping_sub(1)),
            Parity::Odd => x.odd.get_mut(label.index.wrapping_sub(1)),
        };
        match slot {
            Some(c) => *c = Rational::from_integer(1.into()),
            None => return Err(AlgebraError::LabelOutOfRange { label, n, m }),
        }
        Ok(x)
    }

    pub fn even(&self) -> &[Rational] {
        &self.even
    }

    pub fn odd(&self) -> &[Rational] {
        &self.odd
    }

    pub fn coords(&self) -> Vec<Rational> {
        self.even.iter().chain(&self.odd).cloned().collect()
    }

    pub fn is_zero(&self) -> bool {
        self.even.iter().chain(&self.odd).all(Zero::is_zero)
    }

    pub fn homogeneity(&self) -> Homogeneity {
        let even = self.even.iter().any(|x| !x.is_zero());
        let odd = self.odd.iter().any(|x| !x.is_zero());
        match (even, odd) {
            (false, false) => Homogeneity::Zero,
            (true, false) => Homogeneity::Pure(Parity::Even),
            (false, true) => Homogeneity::Pure(Parity::Odd),
            (true, true) => Homogeneity::Mixed,
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneity() != Homogeneity::Mixed
    }

    /// Nonzero coordinates as `(label, coefficient)` in basis order.
    pub fn terms(&self) -> Vec<(BasisLabel, Rational)> {
        let even = self
            .even
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (BasisLabel::even(i + 1), c.clone()));
        let odd = self
            .odd
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (BasisLabel::odd(i + 1), c.clone()));
        even.chain(odd).collect()
    }

    pub fn add(&self, other: &SuperElement) -> SuperElement {
        SuperElement {
            even: add_vec(&self.even, &other.even),
            odd: add_vec(&self.odd, &other.odd),
        }
    }

    pub fn scale(&self, factor: &Rational) -> SuperElement {
        SuperElement {
            even: self.even.iter().map(|x| x * factor).collect(),
            odd: self.odd.iter().map(|x| x * factor).collect(),
        }
    }
}

impl fmt::Display for SuperElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms();
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (label, c)) in terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c}){label}")?;
        }
        Ok(())
    }
}

fn add_vec(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// Which factor parities govern the sign in the superidentity residual.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SignConvention {
    /// `(-1)^{|b||c|}`, the defining identity.
    #[default]
    SecondThird,
    /// `(-1)^{|a||b|}`.
    FirstSecond,
}

impl SignConvention {
    pub fn flips(self, a: Parity, b: Parity, c: Parity) -> bool {
        match self {
            SignConvention::SecondThird => b.sign_flips(c),
            SignConvention::FirstSecond => a.sign_flips(b),
        }
    }
}

/// A superalgebra with even dimension `n` and odd dimension `m`.
///
/// Each basis product is stored sparsely as `(output index, coefficient)`
/// pairs sorted by index with no zero coefficients, so derived equality is
/// equality of multiplication tables.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SuperAlgebra {
    n: usize,
    m: usize,
    table: Vec<Vec<(usize, Rational)>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ZinbielVerdict {
    Ok,
    Violation {
        triple: [BasisLabel; 3],
        residual: SuperElement,
    },
}

impl ZinbielVerdict {
    pub fn is_ok(&self) -> bool {
        matches!(self, ZinbielVerdict::Ok)
    }
}

impl SuperAlgebra {
    /// The zero algebra of dimensions `(n, m)`.
    pub fn new(n: usize, m: usize) -> Self {
        let d = n + m;
        SuperAlgebra {
            n,
            m,
            table: vec![Vec::new(); d * d],
        }
    }

    pub fn with_products<I>(n: usize, m: usize, products: I) -> Result<Self, AlgebraError>
    where
        I: IntoIterator<Item = (BasisLabel, BasisLabel, SuperElement)>,
    {
        let mut alg = Self::new(n, m);
        for (left, right, result) in products {
            alg.set_product(left, right, &result)?;
        }
        Ok(alg)
    }

    pub fn dim_even(&self) -> usize {
        self.n
    }

    pub fn dim_odd(&self) -> usize {
        self.m
    }

    pub fn dim(&self) -> usize {
        self.n + self.m
    }

    pub fn labels(&self) -> Vec<BasisLabel> {
        (0..self.dim()).map(|i| self.label(i)).collect()
    }

    pub fn label(&self, index: usize) -> BasisLabel {
        if index < self.n {
            BasisLabel::even(index + 1)
        } else {
            BasisLabel::odd(index - self.n + 1)
        }
    }

    pub fn index_of(&self, label: BasisLabel) -> Result<usize, AlgebraError> {
        let out_of_range = AlgebraError::LabelOutOfRange {
            label,
            n: self.n,
            m: self.m,
        };
        match label.parity {
            Parity::Even if (1..=self.n).contains(&label.index) => Ok(label.index - 1),
            Parity::Odd if (1..=self.m).contains(&label.index) => Ok(self.n + label.index - 1),
            _ => Err(out_of_range),
        }
    }

    pub fn parity_of(&self, index: usize) -> Parity {
        if index < self.n {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// Range of coordinate indices holding the given parity.
    pub fn parity_range(&self, parity: Parity) -> core::ops::Range<usize> {
        match parity {
            Parity::Even => 0..self.n,
            Parity::Odd => self.n..self.dim(),
        }
    }

    pub fn zero_element(&self) -> SuperElement {
        SuperElement::zero(self.n, self.m)
    }

    pub fn basis_element(&self, index: usize) -> SuperElement {
        SuperElement::basis(self.n, self.m, self.label(index)).expect("index in range")
    }

    /// Replaces the product `left * right`. Rejects results with a
    /// component of the wrong parity.
    pub fn set_product(
        &mut self,
        left: BasisLabel,
        right: BasisLabel,
        result: &SuperElement,
    ) -> Result<(), AlgebraError> {
        self.check_element(result)?;
        let i = self.index_of(left)?;
        let j = self.index_of(right)?;
        let target = left.parity + right.parity;
        let terms: Vec<(usize, Rational)> = result
            .coords()
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        if terms.iter().any(|&(k, _)| self.parity_of(k) != target) {
            return Err(AlgebraError::GradingViolation { left, right });
        }
        let d = self.dim();
        self.table[i * d + j] = terms;
        Ok(())
    }

    /// Adds `coeff * out` to the product `left * right`.
    pub fn add_term(
        &mut self,
        left: BasisLabel,
        right: BasisLabel,
        out: BasisLabel,
        coeff: Rational,
    ) -> Result<(), AlgebraError> {
        let i = self.index_of(left)?;
        let j = self.index_of(right)?;
        let k = self.index_of(out)?;
        if (left.parity + right.parity) != out.parity {
            return Err(AlgebraError::GradingViolation { left, right });
        }
        let d = self.dim();
        let entry = &mut self.table[i * d + j];
        match entry.binary_search_by_key(&k, |(idx, _)| *idx) {
            Ok(pos) => {
                entry[pos].1 += coeff;
                if entry[pos].1.is_zero() {
                    entry.remove(pos);
                }
            }
            Err(pos) if !coeff.is_zero() => entry.insert(pos, (k, coeff)),
            Err(_) => {}
        }
        Ok(())
    }

    /// Sparse product of basis vectors `i * j`.
    pub fn product_terms(&self, i: usize, j: usize) -> &[(usize, Rational)] {
        &self.table[i * self.dim() + j]
    }

    /// Dense coordinates of the product of basis vectors `i * j`.
    pub fn basis_product(&self, i: usize, j: usize) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim()];
        for (k, c) in self.product_terms(i, j) {
            out[*k] = c.clone();
        }
        out
    }

    /// All nonzero basis products in basis order of `(left, right)`.
    pub fn nonzero_products(&self) -> impl Iterator<Item = (usize, usize, &[(usize, Rational)])> {
        let d = self.dim();
        self.table
            .iter()
            .enumerate()
            .filter(|(_, t)| !t.is_empty())
            .map(move |(idx, t)| (idx / d, idx % d, t.as_slice()))
    }

    pub fn is_zero_algebra(&self) -> bool {
        self.table.iter().all(Vec::is_empty)
    }

    /// Bilinear product of coordinate vectors; lengths must equal `dim()`.
    pub fn mul_coords(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let d = self.dim();
        debug_assert_eq!(x.len(), d);
        debug_assert_eq!(y.len(), d);
        let mut out = vec![Rational::zero(); d];
        for (i, xi) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let terms = &self.table[i * d + j];
                if terms.is_empty() {
                    continue;
                }
                let xy = xi * yj;
                for (k, c) in terms {
                    out[*k] += &xy * c;
                }
            }
        }
        out
    }

    /// Product of basis vector `i` with an arbitrary coordinate vector.
    pub fn mul_basis_left(&self, i: usize, y: &[Rational]) -> Vec<Rational> {
        let d = self.dim();
        let mut out = vec![Rational::zero(); d];
        for (j, yj) in y.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (k, c) in &self.table[i * d + j] {
                out[*k] += yj * c;
            }
        }
        out
    }

    /// Product of an arbitrary coordinate vector with basis vector `j`.
    pub fn mul_basis_right(&self, x: &[Rational], j: usize) -> Vec<Rational> {
        let d = self.dim();
        let mut out = vec![Rational::zero(); d];
        for (i, xi) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (k, c) in &self.table[i * d + j] {
                out[*k] += xi * c;
            }
        }
        out
    }

    pub fn multiply(&self, x: &SuperElement, y: &SuperElement) -> Result<SuperElement, AlgebraError> {
        self.check_element(x)?;
        self.check_element(y)?;
        Ok(SuperElement::from_coords(
            self.n,
            &self.mul_coords(&x.coords(), &y.coords()),
        ))
    }

    pub fn superidentity_residual(
        &self,
        a: &SuperElement,
        b: &SuperElement,
        c: &SuperElement,
    ) -> Result<SuperElement, AlgebraError> {
        self.residual_with(SignConvention::SecondThird, a, b, c)
    }

    /// `(ab)c - a(bc + s cb)` with `s` chosen by `convention`.
    pub fn residual_with(
        &self,
        convention: SignConvention,
        a: &SuperElement,
        b: &SuperElement,
        c: &SuperElement,
    ) -> Result<SuperElement, AlgebraError> {
        let [pa, pb, pc] = self.homogeneous_parities([a, b, c])?;
        let (a, b, c) = (a.coords(), b.coords(), c.coords());
        let flips = convention.flips(pa, pb, pc);
        Ok(SuperElement::from_coords(
            self.n,
            &self.residual_coords(flips, &a, &b, &c),
        ))
    }

    fn residual_coords(
        &self,
        flips: bool,
        a: &[Rational],
        b: &[Rational],
        c: &[Rational],
    ) -> Vec<Rational> {
        let left = self.mul_coords(&self.mul_coords(a, b), c);
        let bc = self.mul_coords(b, c);
        let cb = self.mul_coords(c, b);
        let inner: Vec<Rational> = if flips {
            bc.iter().zip(&cb).map(|(x, y)| x - y).collect()
        } else {
            bc.iter().zip(&cb).map(|(x, y)| x + y).collect()
        };
        let right = self.mul_coords(a, &inner);
        left.iter().zip(&right).map(|(x, y)| x - y).collect()
    }

    /// Residual on basis vectors `(i, j, k)`, as dense coordinates.
    pub fn basis_residual(&self, convention: SignConvention, i: usize, j: usize, k: usize) -> Vec<Rational> {
        let d = self.dim();
        let flips = convention.flips(self.parity_of(i), self.parity_of(j), self.parity_of(k));
        let mut out = vec![Rational::zero(); d];
        // (e_i e_j) e_k
        for (p, c) in self.product_terms(i, j) {
            for (q, c2) in self.product_terms(*p, k) {
                out[*q] += c * c2;
            }
        }
        // - e_i (e_j e_k +- e_k e_j)
        for (p, c) in self.product_terms(j, k) {
            for (q, c2) in self.product_terms(i, *p) {
                out[*q] -= c * c2;
            }
        }
        for (p, c) in self.product_terms(k, j) {
            for (q, c2) in self.product_terms(i, *p) {
                if flips {
                    out[*q] += c * c2;
                } else {
                    out[*q] -= c * c2;
                }
            }
        }
        out
    }

    /// Checks the superidentity on every ordered basis triple; by
    /// trilinearity this decides the identity on all homogeneous elements.
    /// Returns the lexicographically first violating triple.
    pub fn is_zinbiel(&self) -> ZinbielVerdict {
        let d = self.dim();
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let r = self.basis_residual(SignConvention::SecondThird, i, j, k);
                    if r.iter().any(|x| !x.is_zero()) {
                        return ZinbielVerdict::Violation {
                            triple: [self.label(i), self.label(j), self.label(k)],
                            residual: SuperElement::from_coords(self.n, &r),
                        };
                    }
                }
            }
        }
        ZinbielVerdict::Ok
    }

    /// `(xy)z - (-1)^{|y||z|} (xz)y`.
    pub fn right_supercommutativity_residual(
        &self,
        x: &SuperElement,
        y: &SuperElement,
        z: &SuperElement,
    ) -> Result<SuperElement, AlgebraError> {
        let [_, py, pz] = self.homogeneous_parities([x, y, z])?;
        let (x, y, z) = (x.coords(), y.coords(), z.coords());
        let left = self.mul_coords(&self.mul_coords(&x, &y), &z);
        let right = self.mul_coords(&self.mul_coords(&x, &z), &y);
        let coords: Vec<Rational> = if py.sign_flips(pz) {
            left.iter().zip(&right).map(|(a, b)| a + b).collect()
        } else {
            left.iter().zip(&right).map(|(a, b)| a - b).collect()
        };
        Ok(SuperElement::from_coords(self.n, &coords))
    }

    /// First basis triple where right supercommutativity fails, if any.
    pub fn right_supercommutativity_violation(&self) -> Option<[BasisLabel; 3]> {
        let d = self.dim();
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let r = self
                        .right_supercommutativity_residual(
                            &self.basis_element(i),
                            &self.basis_element(j),
                            &self.basis_element(k),
                        )
                        .expect("basis vectors are homogeneous");
                    if !r.is_zero() {
                        return Some([self.label(i), self.label(j), self.label(k)]);
                    }
                }
            }
        }
        None
    }

    pub fn check_element(&self, x: &SuperElement) -> Result<(), AlgebraError> {
        if x.even.len() != self.n || x.odd.len() != self.m {
            return Err(AlgebraError::DimensionMismatch {
                n: self.n,
                m: self.m,
                found_even: x.even.len(),
                found_odd: x.odd.len(),
            });
        }
        Ok(())
    }

    /// Parities of homogeneous arguments; a zero argument counts as even,
    /// which never changes a residual because every term involving it
    /// vanishes.
    fn homogeneous_parities(&self, args: [&SuperElement; 3]) -> Result<[Parity; 3], AlgebraError> {
        let mut out = [Parity::Even; 3];
        for (pos, x) in args.iter().enumerate() {
            self.check_element(x)?;
            out[pos] = match x.homogeneity() {
                Homogeneity::Zero => Parity::Even,
                Homogeneity::Pure(p) => p,
                Homogeneity::Mixed => return Err(AlgebraError::NonHomogeneous { position: pos + 1 }),
            };
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{int, rat};
    use alloc::string::ToString;
    use proptest::prelude::*;

    fn e(i: usize) -> BasisLabel {
        BasisLabel::even(i)
    }

    fn f(i: usize) -> BasisLabel {
        BasisLabel::odd(i)
    }

    fn elem(alg: &SuperAlgebra, terms: &[(BasisLabel, Rational)]) -> SuperElement {
        let mut x = alg.zero_element();
        for (l, c) in terms {
            x = x.add(&SuperElement::basis(alg.dim_even(), alg.dim_odd(), *l).unwrap().scale(c));
        }
        x
    }

    /// e1e1 = e2, e2e1 = e3, everything even: not Zinbiel.
    fn non_example() -> SuperAlgebra {
        let mut a = SuperAlgebra::new(3, 0);
        a.add_term(e(1), e(1), e(2), int(1)).unwrap();
        a.add_term(e(2), e(1), e(3), int(1)).unwrap();
        a
    }

    /// f1 f2 = e1, f2 f1 = -e1.
    fn z34() -> SuperAlgebra {
        let mut a = SuperAlgebra::new(1, 2);
        a.add_term(f(1), f(2), e(1), int(1)).unwrap();
        a.add_term(f(2), f(1), e(1), int(-1)).unwrap();
        a
    }

    #[test]
    fn labels_parse_and_order() {
        assert_eq!("e3".parse::<BasisLabel>().unwrap(), e(3));
        assert_eq!("f12".parse::<BasisLabel>().unwrap(), f(12));
        for bad in ["e0", "g1", "e", "f-1", "e1x", ""] {
            assert!(bad.parse::<BasisLabel>().is_err(), "{bad}");
        }
        assert!(e(10) < f(1));
        assert!(e(2) < e(10));
        assert_eq!(f(2).to_string(), "f2");
    }

    #[test]
    fn multiply_examples() {
        let a = z34();
        let x = a.multiply(&elem(&a, &[(f(1), int(1))]), &elem(&a, &[(f(2), int(1))])).unwrap();
        assert_eq!(x, elem(&a, &[(e(1), int(1))]));
        let y = a.multiply(&elem(&a, &[(f(2), int(1))]), &elem(&a, &[(f(1), int(1))])).unwrap();
        assert_eq!(y, elem(&a, &[(e(1), int(-1))]));

        let zero = SuperAlgebra::new(2, 2);
        let any = elem(&zero, &[(e(1), int(3)), (f(2), rat(1, 2))]);
        assert!(zero.multiply(&any, &any).unwrap().is_zero());
        assert!(zero.multiply(&any, &SuperElement::zero(1, 1)).is_err());
    }

    #[test]
    fn grading_enforced_on_construction() {
        let mut a = SuperAlgebra::new(1, 1);
        let bad = SuperElement::basis(1, 1, f(1)).unwrap();
        assert_eq!(
            a.set_product(e(1), e(1), &bad),
            Err(AlgebraError::GradingViolation { left: e(1), right: e(1) })
        );
        assert!(a.add_term(e(1), f(1), e(1), int(1)).is_err());
        assert!(a.add_term(e(2), f(1), f(1), int(1)).is_err());
    }

    #[test]
    fn residual_of_non_example() {
        let a = non_example();
        let e1 = a.basis_element(0);
        let r = a.superidentity_residual(&e1, &e1, &e1).unwrap();
        // (e1e1)e1 - 2 e1(e1e1) = e2e1 - 2 e1e2 = e3
        assert_eq!(r, elem(&a, &[(e(3), int(1))]));
        assert_eq!(
            a.is_zinbiel(),
            ZinbielVerdict::Violation { triple: [e(1), e(1), e(1)], residual: r }
        );
    }

    #[test]
    fn odd_generator_sign_case() {
        // f1 f1 = e1, f1 e1 = f2: sZ{f1,f1,f1} = (f1f1)f1 - f1(f1f1 - f1f1) = e1 f1 = 0
        let mut a = SuperAlgebra::new(1, 2);
        a.add_term(f(1), f(1), e(1), int(1)).unwrap();
        a.add_term(f(1), e(1), f(2), int(1)).unwrap();
        let f1 = a.basis_element(1);
        assert!(a.superidentity_residual(&f1, &f1, &f1).unwrap().is_zero());
        // a nonzero e1 f1 would break it: (f1f1)f1 = e1f1
        a.add_term(e(1), f(1), f(2), int(1)).unwrap();
        let r = a.superidentity_residual(&f1, &f1, &f1).unwrap();
        assert_eq!(r, elem(&a, &[(f(2), int(1))]));
    }

    #[test]
    fn zero_algebra_is_zinbiel() {
        assert!(SuperAlgebra::new(3, 2).is_zinbiel().is_ok());
        assert!(SuperAlgebra::new(0, 0).is_zinbiel().is_ok());
    }

    #[test]
    fn non_homogeneous_arguments_rejected() {
        let a = z34();
        let mixed = elem(&a, &[(e(1), int(1)), (f(1), int(1))]);
        let f1 = a.basis_element(1);
        assert_eq!(
            a.superidentity_residual(&f1, &mixed, &f1),
            Err(AlgebraError::NonHomogeneous { position: 2 })
        );
        assert!(a.right_supercommutativity_residual(&mixed, &f1, &f1).is_err());
        // zero is homogeneous of either parity
        assert!(a.superidentity_residual(&a.zero_element(), &f1, &f1).is_ok());
    }

    #[test]
    fn right_supercommutativity_trivial_case() {
        // commutative, everything annihilates products: e1e2 = e2e1 = e3
        let mut a = SuperAlgebra::new(3, 0);
        a.add_term(e(1), e(2), e(3), int(1)).unwrap();
        a.add_term(e(2), e(1), e(3), int(1)).unwrap();
        assert_eq!(a.right_supercommutativity_violation(), None);
    }

    #[test]
    fn sign_conventions_differ_only_where_parities_do() {
        assert!(SignConvention::SecondThird.flips(Parity::Even, Parity::Odd, Parity::Odd));
        assert!(!SignConvention::FirstSecond.flips(Parity::Even, Parity::Odd, Parity::Odd));
        assert!(SignConvention::FirstSecond.flips(Parity::Odd, Parity::Odd, Parity::Even));
    }

    fn arb_small() -> impl Strategy<Value = Rational> {
        (-3i64..4, 1i64..3).prop_map(|(p, q)| rat(p, q))
    }

    /// A random graded algebra of dims (1, 2).
    fn arb_graded() -> impl Strategy<Value = SuperAlgebra> {
        proptest::collection::vec(arb_small(), 27).prop_map(|cs| {
            let mut a = SuperAlgebra::new(1, 2);
            let mut it = cs.into_iter();
            for i in 0..3 {
                for j in 0..3 {
                    for k in 0..3 {
                        let c = it.next().unwrap();
                        let (l, r, o) = (a.label(i), a.label(j), a.label(k));
                        if l.parity + r.parity == o.parity {
                            a.add_term(l, r, o, c).unwrap();
                        }
                    }
                }
            }
            a
        })
    }

    proptest! {
        #[test]
        fn grading_closure(a in arb_graded()) {
            for (i, j, terms) in a.nonzero_products() {
                let target = a.parity_of(i) + a.parity_of(j);
                prop_assert!(terms.iter().all(|(k, _)| a.parity_of(*k) == target));
            }
        }

        // Residual is trilinear on same-parity combinations.
        #[test]
        fn residual_is_trilinear(
            a in arb_graded(),
            x in proptest::collection::vec(arb_small(), 2),
            y in proptest::collection::vec(arb_small(), 2),
            pb in 0usize..3,
        ) {
            let f1 = a.basis_element(1);
            let f2 = a.basis_element(2);
            let e1 = a.basis_element(0);
            let u = f1.scale(&x[0]).add(&f2.scale(&x[1]));
            let w = f1.scale(&y[0]).add(&f2.scale(&y[1]));
            let b = a.basis_element(pb);
            let direct = a.superidentity_residual(&u, &b, &w).unwrap();
            let mut combined = a.zero_element();
            for (cu, bu) in x.iter().zip([&f1, &f2]) {
                for (cw, bw) in y.iter().zip([&f1, &f2]) {
                    let r = a.superidentity_residual(bu, &b, bw).unwrap();
                    combined = combined.add(&r.scale(&(cu * cw)));
                }
            }
            prop_assert_eq!(direct, combined);
            let r1 = a.superidentity_residual(&e1, &u, &e1).unwrap();
            let r2 = a.superidentity_residual(&e1, &f1, &e1).unwrap().scale(&x[0])
                .add(&a.superidentity_residual(&e1, &f2, &e1).unwrap().scale(&x[1]));
            prop_assert_eq!(r1, r2);
        }

        #[test]
        fn basis_residual_matches_element_residual(a in arb_graded(), i in 0usize..3, j in 0usize..3, k in 0usize..3) {
            let fast = a.basis_residual(SignConvention::SecondThird, i, j, k);
            let slow = a
                .superidentity_residual(&a.basis_element(i), &a.basis_element(j), &a.basis_element(k))
                .unwrap();
            prop_assert_eq!(fast, slow.coords());
        }
    }
}
