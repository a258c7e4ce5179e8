//! Constructors for the classified Zinbiel algebras and superalgebras.
//!
//! Products whose target index exceeds the dimension are zero. Family
//! parameters are exact rationals.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::exactla::{int, rat, Rational};
use crate::superalg::{BasisLabel, SuperAlgebra};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FamilyId {
    NullFiliformAlg,
    NgFiliformAlg,
    NullFiliformSuper,
    NF1,
    NF2,
    NF3,
    NF4,
    NF5,
    A1,
    A2,
    Z21,
    Z31,
    Z32,
    Z33,
    Z34,
    Z35,
    LowerZ31,
    LowerZ32,
    LowerZ33,
    LowerZ34,
    LowerZ35,
    LowerZ36,
    LowerZ37,
    LowerZ38,
    LowerZ39,
}

use FamilyId::*;

impl FamilyId {
    pub const ALL: [FamilyId; 25] = [
        NullFiliformAlg,
        NgFiliformAlg,
        NullFiliformSuper,
        NF1,
        NF2,
        NF3,
        NF4,
        NF5,
        A1,
        A2,
        Z21,
        Z31,
        Z32,
        Z33,
        Z34,
        Z35,
        LowerZ31,
        LowerZ32,
        LowerZ33,
        LowerZ34,
        LowerZ35,
        LowerZ36,
        LowerZ37,
        LowerZ38,
        LowerZ39,
    ];

    pub fn name(self) -> &'static str {
        match self {
            NullFiliformAlg => "NullFiliformAlg",
            NgFiliformAlg => "NgFiliformAlg",
            NullFiliformSuper => "NullFiliformSuper",
            NF1 => "NF1",
            NF2 => "NF2",
            NF3 => "NF3",
            NF4 => "NF4",
            NF5 => "NF5",
            A1 => "A1",
            A2 => "A2",
            Z21 => "Z21",
            Z31 => "Z31",
            Z32 => "Z32",
            Z33 => "Z33",
            Z34 => "Z34",
            Z35 => "Z35",
            LowerZ31 => "z31",
            LowerZ32 => "z32",
            LowerZ33 => "z33",
            LowerZ34 => "z34",
            LowerZ35 => "z35",
            LowerZ36 => "z36",
            LowerZ37 => "z37",
            LowerZ38 => "z38",
            LowerZ39 => "z39",
        }
    }

    /// Dimensions of families that exist in a single size.
    pub fn fixed_dims(self) -> Option<(usize, usize)> {
        match self {
            A2 => Some((5, 3)),
            Z21 => Some((2, 0)),
            Z31 | Z32 | Z33 | Z34 | Z35 => Some((3, 0)),
            LowerZ31 | LowerZ32 | LowerZ33 | LowerZ34 | LowerZ35 | LowerZ36 | LowerZ37 | LowerZ38 => Some((1, 2)),
            LowerZ39 => Some((2, 1)),
            _ => None,
        }
    }

    /// Name of the rational parameter the family takes, if any.
    pub fn parameter(self) -> Option<Param> {
        match self {
            NF2 | LowerZ31 | LowerZ37 => Some(Param::Alpha),
            Z34 => Some(Param::Beta),
            _ => None,
        }
    }

    /// Whether the family's members are all of the even dimension only.
    pub fn is_pure_even(self) -> bool {
        matches!(self, NullFiliformAlg | NgFiliformAlg | Z21 | Z31 | Z32 | Z33 | Z34 | Z35)
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyId {
    type Err = CatalogError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FamilyId::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| CatalogError::UnknownFamily(String::from(s)))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Param {
    Alpha,
    Beta,
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Param::Alpha => "alpha",
            Param::Beta => "beta",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
    #[error("{family} requires {constraint}")]
    Constraint { family: FamilyId, constraint: &'static str },
    #[error("{family} requires parameter {param}")]
    MissingParameter { family: FamilyId, param: Param },
    #[error("{family} takes no parameter {param}")]
    UnexpectedParameter { family: FamilyId, param: Param },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySpec {
    pub family: FamilyId,
    pub n: usize,
    pub m: usize,
    pub alpha: Option<Rational>,
    pub beta: Option<Rational>,
}

impl FamilySpec {
    pub fn new(family: FamilyId, n: usize, m: usize) -> Self {
        FamilySpec {
            family,
            n,
            m,
            alpha: None,
            beta: None,
        }
    }

    /// A family of fixed size at its only dimensions; other families get
    /// `(0, 0)` and fail their constraints.
    pub fn fixed(family: FamilyId) -> Self {
        let (n, m) = family.fixed_dims().unwrap_or((0, 0));
        Self::new(family, n, m)
    }

    /// Null-filiform superalgebra of total dimension `d`: `(⌊d/2⌋, ⌈d/2⌉)`.
    pub fn null_filiform_super(d: usize) -> Self {
        Self::new(NullFiliformSuper, d / 2, d - d / 2)
    }

    pub fn with_alpha(mut self, alpha: Rational) -> Self {
        self.alpha = Some(alpha);
        self
    }

    pub fn with_beta(mut self, beta: Rational) -> Self {
        self.beta = Some(beta);
        self
    }

    /// Parameter value, or an error naming it.
    fn param(&self, param: Param) -> Result<Rational, CatalogError> {
        let value = match param {
            Param::Alpha => &self.alpha,
            Param::Beta => &self.beta,
        };
        value.clone().ok_or(CatalogError::MissingParameter {
            family: self.family,
            param,
        })
    }

    fn check_params(&self) -> Result<(), CatalogError> {
        for (param, value) in [(Param::Alpha, &self.alpha), (Param::Beta, &self.beta)] {
            if value.is_some() && self.family.parameter() != Some(param) {
                return Err(CatalogError::UnexpectedParameter {
                    family: self.family,
                    param,
                });
            }
        }
        Ok(())
    }

    /// The constraint the dimensions violate, if any.
    pub fn violated_constraint(&self) -> Option<&'static str> {
        let (n, m) = (self.n, self.m);
        let nf = |extra: Option<(&'static str, bool)>| {
            if n < 5 {
                Some("n >= 5")
            } else if m <= 3 {
                Some("m > 3")
            } else {
                extra.and_then(|(name, ok)| (!ok).then_some(name))
            }
        };
        match self.family {
            NullFiliformAlg => {
                if m != 0 {
                    Some("m = 0")
                } else if n < 1 {
                    Some("n >= 1")
                } else {
                    None
                }
            }
            NgFiliformAlg => {
                if m != 0 {
                    Some("m = 0")
                } else if n < 5 {
                    Some("n >= 5")
                } else {
                    None
                }
            }
            NullFiliformSuper => {
                if n + m == 0 {
                    Some("n + m >= 1")
                } else if m != n && m != n + 1 {
                    Some("m = n or m = n + 1")
                } else {
                    None
                }
            }
            NF1 | NF2 | NF3 => nf(None),
            NF4 => nf(Some(("m >= n - 2", m + 2 >= n))),
            NF5 => nf(Some(("m = n - 1", m + 1 == n))),
            A1 => {
                if n < 5 {
                    Some("n >= 5")
                } else if m != 3 {
                    Some("m = 3")
                } else {
                    None
                }
            }
            fixed => {
                let dims = fixed.fixed_dims().expect("remaining families have fixed dimensions");
                match dims {
                    (5, 3) => (dims != (n, m)).then_some("(n, m) = (5, 3)"),
                    (2, 0) => (dims != (n, m)).then_some("(n, m) = (2, 0)"),
                    (3, 0) => (dims != (n, m)).then_some("(n, m) = (3, 0)"),
                    (1, 2) => (dims != (n, m)).then_some("(n, m) = (1, 2)"),
                    _ => (dims != (n, m)).then_some("(n, m) = (2, 1)"),
                }
            }
        }
    }
}

fn e(i: usize) -> BasisLabel {
    BasisLabel::even(i)
}

fn f(i: usize) -> BasisLabel {
    BasisLabel::odd(i)
}

/// `C_a^b`: binomial coefficient with top index `a`.
pub fn binomial(a: usize, b: usize) -> Rational {
    if b > a {
        return Rational::zero();
    }
    Rational::from_integer(num_integer::binomial(BigInt::from(a), BigInt::from(b)))
}

fn factorial(k: usize) -> Rational {
    (1..=k).fold(Rational::one(), |acc, t| acc * int(t as i64))
}

/// `∏_{k=0}^{len-1}(start + k) / len!`; the empty product is 1.
fn rising_over_factorial(start: &Rational, len: usize) -> Rational {
    let mut p = Rational::one();
    for k in 0..len {
        p *= start + int(k as i64);
    }
    p / factorial(len)
}

/// Sets a product, ignoring targets past the dimension and zero
/// coefficients.
struct Builder {
    alg: SuperAlgebra,
}

impl Builder {
    fn new(n: usize, m: usize) -> Self {
        Builder {
            alg: SuperAlgebra::new(n, m),
        }
    }

    fn put(&mut self, left: BasisLabel, right: BasisLabel, out: BasisLabel, c: Rational) {
        let fits = |l: BasisLabel| match l.parity {
            crate::superalg::Parity::Even => l.index <= self.alg.dim_even(),
            crate::superalg::Parity::Odd => l.index <= self.alg.dim_odd(),
        };
        if c.is_zero() || !fits(left) || !fits(right) || !fits(out) {
            return;
        }
        self.alg.add_term(left, right, out, c).expect("catalog tables are graded");
    }

    /// `e_i e_j = C_{i+j-1}^j e_{i+j}` for `2 ≤ i + j ≤ limit`.
    fn chain(&mut self, limit: usize) {
        for i in 1..limit {
            for j in 1..=limit - i {
                self.put(e(i), e(j), e(i + j), binomial(i + j - 1, j));
            }
        }
    }

    /// `e_i f_j` and `f_j e_i` of the filiform families with shift `s`,
    /// for `1 ≤ i ≤ n − 1`.
    fn odd_module(&mut self, s: &Rational) {
        let (n, m) = (self.alg.dim_even(), self.alg.dim_odd());
        for i in 1..n {
            for j in 1..=m {
                if i + j > m {
                    continue;
                }
                let base = s + int(j as i64);
                self.put(e(i), f(j), f(i + j), rising_over_factorial(&base, i - 1));
                self.put(f(j), e(i), f(i + j), rising_over_factorial(&(base - int(1)), i));
            }
        }
    }
}

/// Builds the multiplication table of `spec`.
pub fn build(spec: &FamilySpec) -> Result<SuperAlgebra, CatalogError> {
    spec.check_params()?;
    if let Some(constraint) = spec.violated_constraint() {
        return Err(CatalogError::Constraint {
            family: spec.family,
            constraint,
        });
    }
    let (n, m) = (spec.n, spec.m);
    let mut b = Builder::new(n, m);
    match spec.family {
        NullFiliformAlg => b.chain(n),
        NgFiliformAlg => b.chain(n - 1),
        NullFiliformSuper => null_filiform_super(&mut b, n + m),
        NF1 => {
            b.chain(n - 1);
            b.odd_module(&int(-1));
            b.put(e(n), f(1), f(2), int(1));
            b.put(f(1), e(n), f(2), int(-1));
        }
        NF2 => {
            b.chain(n - 1);
            b.odd_module(&spec.param(Param::Alpha)?);
        }
        NF3 => {
            b.chain(n - 1);
            b.odd_module(&(int(2) - int(m as i64)));
            b.put(e(n), f(m - 1), f(m), int(1));
        }
        NF4 => {
            b.chain(n - 1);
            b.odd_module(&nf4_shift(n));
            b.put(f(1), f(n - 2), e(n - 1), int(1));
        }
        NF5 => {
            b.chain(n - 1);
            b.odd_module(&(int(3) - int(n as i64)));
            b.put(e(n), f(n - 2), f(n - 1), int(1));
            b.put(f(1), f(n - 2), e(n - 1), int(1));
        }
        A1 => {
            b.chain(n - 1);
            b.put(e(1), f(1), f(2), int(1));
            b.put(e(1), f(2), f(3), int(1));
            b.put(f(1), e(1), f(2), int(-1));
            b.put(e(n), f(1), f(2), int(1));
            b.put(e(n), f(2), f(3), int(1));
            b.put(f(1), e(n), f(2), int(-1));
        }
        A2 => {
            b.chain(n - 1);
            b.put(f(1), e(1), f(2), int(-2));
            b.put(f(2), e(1), f(3), int(-1));
            b.put(f(1), e(2), f(3), int(1));
            b.put(e(1), f(1), f(2), int(1));
            b.put(e(1), f(2), f(3), int(1));
            b.put(e(2), f(1), A2_E2F1, int(-1));
            b.put(f(1), f(n - 2), e(n - 1), int(1));
        }
        Z21 | Z31 => b.put(e(1), e(1), e(2), int(1)),
        Z32 => {
            b.put(e(1), e(1), e(2), int(1));
            b.put(e(1), e(2), e(3), rat(1, 2));
            b.put(e(2), e(1), e(3), int(1));
        }
        Z33 => {
            b.put(e(1), e(2), e(3), int(1));
            b.put(e(2), e(1), e(3), int(-1));
        }
        Z34 => {
            let beta = spec.param(Param::Beta)?;
            b.put(e(1), e(1), e(3), int(1));
            b.put(e(1), e(2), e(3), int(1));
            b.put(e(2), e(2), e(3), beta);
        }
        Z35 => {
            b.put(e(1), e(1), e(3), int(1));
            b.put(e(1), e(2), e(3), int(1));
            b.put(e(2), e(1), e(3), int(1));
        }
        LowerZ31 => {
            let alpha = spec.param(Param::Alpha)?;
            b.put(f(1), f(1), e(1), int(1));
            b.put(f(2), f(1), e(1), int(1));
            b.put(f(2), f(2), e(1), alpha);
        }
        LowerZ32 => {
            b.put(f(1), f(1), e(1), int(1));
            b.put(f(2), f(2), e(1), int(1));
        }
        LowerZ33 => b.put(f(1), f(1), e(1), int(1)),
        LowerZ34 => {
            b.put(f(1), f(2), e(1), int(1));
            b.put(f(2), f(1), e(1), int(-1));
        }
        LowerZ35 => {
            b.put(f(1), e(1), f(2), int(1));
            b.put(f(1), f(1), e(1), int(1));
        }
        LowerZ36 => b.put(f(1), e(1), f(2), int(1)),
        LowerZ37 => {
            let alpha = spec.param(Param::Alpha)?;
            b.put(e(1), f(1), f(2), alpha);
            b.put(f(1), e(1), f(2), int(1));
        }
        LowerZ38 => b.put(e(1), f(1), f(2), int(1)),
        LowerZ39 => {
            b.put(e(1), e(1), e(2), int(1));
            b.put(f(1), f(1), e(2), int(1));
        }
    }
    Ok(b.alg)
}

/// Target of the `e2 f1` product in `A2`.
const A2_E2F1: BasisLabel = BasisLabel::odd(3);

/// Shift parameter of `NF4`.
fn nf4_shift(n: usize) -> Rational {
    int(3) - int(n as i64)
}

/// Chain index `t` of the odd-generated null-filiform superalgebra, mapped
/// to the graded basis: `2k → e_k`, `2k+1 → f_{k+1}`.
fn chain_label(t: usize) -> BasisLabel {
    if t.is_multiple_of(2) {
        e(t / 2)
    } else {
        f(t / 2 + 1)
    }
}

fn null_filiform_super(b: &mut Builder, d: usize) {
    let put = |b: &mut Builder, x: usize, y: usize, c: Rational| {
        if x + y <= d {
            b.put(chain_label(x), chain_label(y), chain_label(x + y), c);
        }
    };
    // e_{2k+1} e_{2l} = C_{k+l}^k e_{2k+2l+1}
    for k in 0..=d / 2 {
        for l in 1..=d / 2 {
            put(b, 2 * k + 1, 2 * l, binomial(k + l, k));
        }
    }
    // e_{2k} e_{2l} = C_{k+l-1}^l e_{2k+2l}
    for k in 1..=d / 2 {
        for l in 1..=d / 2 {
            put(b, 2 * k, 2 * l, binomial(k + l - 1, l));
        }
    }
    // e_{2k+1} e_{2l+1} = C_{k+l}^l e_{2k+2l+2}
    for k in 0..=d / 2 {
        for l in 0..=d / 2 {
            put(b, 2 * k + 1, 2 * l + 1, binomial(k + l, l));
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub family: FamilyId,
    /// Default instance used when nothing else is specified.
    pub template: FamilySpec,
    pub constraint: &'static str,
    pub table: &'static str,
    pub source: &'static str,
}

const NF_TABLE: &str = "e_ie_j = C(i+j-1,j) e_{i+j} (2 <= i+j <= n-1), e_if_j = prod_{k=0}^{i-2}(s+j+k)/(i-1)! f_{i+j}, f_je_i = prod_{k=0}^{i-1}(s+j+k-1)/i! f_{i+j} (1 <= i <= n-1)";

/// Every family with its constraint, table summary and source.
pub fn catalog_index() -> Vec<CatalogEntry> {
    let entry = |family: FamilyId, template: FamilySpec, constraint, table, source| CatalogEntry {
        family,
        template,
        constraint,
        table,
        source,
    };
    let filiform_source = "naturally graded filiform Zinbiel superalgebras, m > 3";
    let small_odd_source = "naturally graded filiform Zinbiel superalgebras, m = 3";
    let algebra_source = "Zinbiel algebras of dimension at most 3";
    let super_source = "3-dimensional non-split Zinbiel superalgebras";
    vec![
        entry(NullFiliformAlg, FamilySpec::new(NullFiliformAlg, 4, 0), "m = 0, n >= 1", "e_ie_j = C(i+j-1,j) e_{i+j}", "null-filiform Zinbiel algebras"),
        entry(NgFiliformAlg, FamilySpec::new(NgFiliformAlg, 5, 0), "m = 0, n >= 5", "e_ie_j = C(i+j-1,j) e_{i+j} (2 <= i+j <= n-1)", "naturally graded filiform Zinbiel algebras"),
        entry(NullFiliformSuper, FamilySpec::null_filiform_super(5), "m = n or m = n + 1", "e_{2k+1}e_{2l} = C(k+l,k) e_{2k+2l+1}, e_{2k}e_{2l} = C(k+l-1,l) e_{2k+2l}, e_{2k+1}e_{2l+1} = C(k+l,l) e_{2k+2l+2}; e_{2k} -> e_k, e_{2k+1} -> f_{k+1}", "null-filiform Zinbiel superalgebras"),
        entry(NF1, FamilySpec::new(NF1, 6, 5), "n >= 5, m > 3", "s = -1; e_nf_1 = f_2, f_1e_n = -f_2", filiform_source),
        entry(NF2, FamilySpec::new(NF2, 6, 5).with_alpha(int(0)), "n >= 5, m > 3", "s = alpha", filiform_source),
        entry(NF3, FamilySpec::new(NF3, 6, 5), "n >= 5, m > 3", "s = 2-m; e_nf_{m-1} = f_m", filiform_source),
        entry(NF4, FamilySpec::new(NF4, 6, 4), "n >= 5, m > 3, m >= n - 2", "s = 3-n; f_1f_{n-2} = e_{n-1}", filiform_source),
        entry(NF5, FamilySpec::new(NF5, 6, 5), "n >= 5, m > 3, m = n - 1", "s = 3-n; e_nf_{n-2} = f_{n-1}, f_1f_{n-2} = e_{n-1}", filiform_source),
        entry(A1, FamilySpec::new(A1, 5, 3), "n >= 5, m = 3", "chain; e_1f_1 = f_2, e_1f_2 = f_3, f_1e_1 = -f_2, e_nf_1 = f_2, e_nf_2 = f_3, f_1e_n = -f_2", small_odd_source),
        entry(A2, FamilySpec::fixed(A2), "(n, m) = (5, 3)", "chain; f_1e_1 = -2f_2, f_2e_1 = -f_3, f_1e_2 = f_3, e_1f_1 = f_2, e_1f_2 = f_3, e_2f_1 = -f_3, f_1f_3 = e_4", small_odd_source),
        entry(Z21, FamilySpec::fixed(Z21), "(n, m) = (2, 0)", "e_1e_1 = e_2", algebra_source),
        entry(Z31, FamilySpec::fixed(Z31), "(n, m) = (3, 0)", "e_1e_1 = e_2", algebra_source),
        entry(Z32, FamilySpec::fixed(Z32), "(n, m) = (3, 0)", "e_1e_1 = e_2, e_1e_2 = 1/2 e_3, e_2e_1 = e_3", algebra_source),
        entry(Z33, FamilySpec::fixed(Z33), "(n, m) = (3, 0)", "e_1e_2 = e_3, e_2e_1 = -e_3", algebra_source),
        entry(Z34, FamilySpec::fixed(Z34).with_beta(int(0)), "(n, m) = (3, 0)", "e_1e_1 = e_3, e_1e_2 = e_3, e_2e_2 = beta e_3", algebra_source),
        entry(Z35, FamilySpec::fixed(Z35), "(n, m) = (3, 0)", "e_1e_1 = e_3, e_1e_2 = e_3, e_2e_1 = e_3", algebra_source),
        entry(LowerZ31, FamilySpec::fixed(LowerZ31).with_alpha(int(0)), "(n, m) = (1, 2)", "f_1f_1 = e_1, f_2f_1 = e_1, f_2f_2 = alpha e_1", super_source),
        entry(LowerZ32, FamilySpec::fixed(LowerZ32), "(n, m) = (1, 2)", "f_1f_1 = e_1, f_2f_2 = e_1", super_source),
        entry(LowerZ33, FamilySpec::fixed(LowerZ33), "(n, m) = (1, 2)", "f_1f_1 = e_1", super_source),
        entry(LowerZ34, FamilySpec::fixed(LowerZ34), "(n, m) = (1, 2)", "f_1f_2 = e_1, f_2f_1 = -e_1", super_source),
        entry(LowerZ35, FamilySpec::fixed(LowerZ35), "(n, m) = (1, 2)", "f_1e_1 = f_2, f_1f_1 = e_1", super_source),
        entry(LowerZ36, FamilySpec::fixed(LowerZ36), "(n, m) = (1, 2)", "f_1e_1 = f_2", super_source),
        entry(LowerZ37, FamilySpec::fixed(LowerZ37).with_alpha(int(0)), "(n, m) = (1, 2)", "e_1f_1 = alpha f_2, f_1e_1 = f_2", super_source),
        entry(LowerZ38, FamilySpec::fixed(LowerZ38), "(n, m) = (1, 2)", "e_1f_1 = f_2", super_source),
        entry(LowerZ39, FamilySpec::fixed(LowerZ39), "(n, m) = (2, 1)", "e_1e_1 = e_2, f_1f_1 = e_2", super_source),
    ]
}

/// Table summary shared by the filiform families.
pub fn filiform_table_summary() -> &'static str {
    NF_TABLE
}

/// The reference instance set: every family at the dimensions and
/// parameter values exercised by the acceptance suite.
pub fn reference_instances() -> Vec<FamilySpec> {
    let mut out = Vec::new();
    for n in 3..=10 {
        out.push(FamilySpec::new(NullFiliformAlg, n, 0));
    }
    for n in 5..=9 {
        out.push(FamilySpec::new(NgFiliformAlg, n, 0));
    }
    for d in 3..=11 {
        out.push(FamilySpec::null_filiform_super(d));
    }
    let nf_dims = [(6, 4), (6, 5), (7, 5)];
    let nf_alphas = [int(0), int(1), int(-2), rat(3, 7)];
    for &(n, m) in &nf_dims {
        out.push(FamilySpec::new(NF1, n, m));
        for a in &nf_alphas {
            out.push(FamilySpec::new(NF2, n, m).with_alpha(a.clone()));
        }
        out.push(FamilySpec::new(NF3, n, m));
    }
    for (n, m) in [(6, 4), (6, 5)] {
        out.push(FamilySpec::new(NF4, n, m));
    }
    for (n, m) in [(6, 5), (7, 6)] {
        out.push(FamilySpec::new(NF5, n, m));
    }
    for n in 5..=7 {
        out.push(FamilySpec::new(A1, n, 3));
    }
    out.push(FamilySpec::fixed(A2));
    let small_params = [int(0), int(1), int(-1), rat(2, 3)];
    for family in FamilyId::ALL {
        if family.fixed_dims().is_none() || family == A2 {
            continue;
        }
        match family.parameter() {
            Some(Param::Alpha) => {
                for p in &small_params {
                    out.push(FamilySpec::fixed(family).with_alpha(p.clone()));
                }
            }
            Some(Param::Beta) => {
                for p in &small_params {
                    out.push(FamilySpec::fixed(family).with_beta(p.clone()));
                }
            }
            None => out.push(FamilySpec::fixed(family)),
        }
    }
    out
}

/// Whether a family belongs to the naturally graded filiform list.
pub fn is_filiform_family(family: FamilyId) -> bool {
    matches!(family, NF1 | NF2 | NF3 | NF4 | NF5 | A1 | A2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{is_null_filiform, nilpotency_index, power_sequence, Nilpotency};
    use crate::superalg::ZinbielVerdict;

    fn product(alg: &SuperAlgebra, l: BasisLabel, r: BasisLabel) -> Vec<(BasisLabel, Rational)> {
        let i = alg.index_of(l).unwrap();
        let j = alg.index_of(r).unwrap();
        alg.product_terms(i, j).iter().map(|(k, c)| (alg.label(*k), c.clone())).collect()
    }

    #[test]
    fn index_has_25_families() {
        let idx = catalog_index();
        assert_eq!(idx.len(), 25);
        let z34 = idx.iter().find(|e| e.family == LowerZ34).unwrap();
        assert_eq!(z34.table, "f_1f_2 = e_1, f_2f_1 = -e_1");
        let z32 = idx.iter().find(|e| e.family == Z32).unwrap();
        assert_eq!(z32.table, "e_1e_1 = e_2, e_1e_2 = 1/2 e_3, e_2e_1 = e_3");
        for entry in &idx {
            assert!(build(&entry.template).is_ok(), "{}", entry.family);
        }
    }

    #[test]
    fn names_roundtrip_case_sensitively() {
        for family in FamilyId::ALL {
            assert_eq!(family.name().parse::<FamilyId>().unwrap(), family);
        }
        assert_ne!("Z31".parse::<FamilyId>().unwrap(), "z31".parse::<FamilyId>().unwrap());
        assert!("nf1".parse::<FamilyId>().is_err());
    }

    #[test]
    fn null_filiform_algebra_product() {
        let a = build(&FamilySpec::new(NullFiliformAlg, 4, 0)).unwrap();
        assert_eq!(product(&a, e(2), e(1)), vec![(e(3), int(2))]);
    }

    #[test]
    fn null_filiform_super_examples() {
        let a = build(&FamilySpec::null_filiform_super(5)).unwrap();
        assert_eq!((a.dim_even(), a.dim_odd()), (2, 3));
        // chain e2 e2 = e4, e3 e2 = 2 e5, e2 e3 = 0
        assert_eq!(product(&a, e(1), e(1)), vec![(e(2), int(1))]);
        assert_eq!(product(&a, f(2), e(1)), vec![(f(3), int(2))]);
        assert!(product(&a, e(1), f(2)).is_empty());
        // e1 e1 = e2 with the generator odd
        assert_eq!(product(&a, f(1), f(1)), vec![(e(1), int(1))]);
        assert!(is_null_filiform(&a));
    }

    #[test]
    fn null_filiform_super_parity_gate() {
        for (n, m) in [(3, 1), (1, 3), (3, 2), (0, 2), (0, 0)] {
            let err = build(&FamilySpec::new(NullFiliformSuper, n, m)).unwrap_err();
            assert!(matches!(err, CatalogError::Constraint { .. }), "{n},{m}");
        }
        for (n, m) in [(2, 2), (2, 3), (0, 1)] {
            assert!(build(&FamilySpec::new(NullFiliformSuper, n, m)).is_ok());
        }
    }

    #[test]
    fn nf2_edge_products() {
        let alpha = rat(3, 7);
        let a = build(&FamilySpec::new(NF2, 7, 5).with_alpha(alpha.clone())).unwrap();
        for j in 1..5 {
            assert_eq!(product(&a, e(1), f(j)), vec![(f(j + 1), int(1))]);
            let c = &alpha + int(j as i64 - 1);
            assert_eq!(product(&a, f(j), e(1)), vec![(f(j + 1), c)]);
        }
        assert!(product(&a, e(1), f(5)).is_empty());
    }

    #[test]
    fn a2_products() {
        let a = build(&FamilySpec::fixed(A2)).unwrap();
        assert_eq!(product(&a, f(1), e(1)), vec![(f(2), int(-2))]);
        assert_eq!(product(&a, f(1), f(3)), vec![(e(4), int(1))]);
    }

    #[test]
    fn constraint_errors_name_the_inequality() {
        let err = build(&FamilySpec::new(NF1, 4, 5)).unwrap_err();
        assert_eq!(err, CatalogError::Constraint { family: NF1, constraint: "n >= 5" });
        let err = build(&FamilySpec::new(NF2, 6, 3).with_alpha(int(1))).unwrap_err();
        assert_eq!(err, CatalogError::Constraint { family: NF2, constraint: "m > 3" });
        let err = build(&FamilySpec::new(NF5, 7, 5)).unwrap_err();
        assert_eq!(err, CatalogError::Constraint { family: NF5, constraint: "m = n - 1" });
        let err = build(&FamilySpec::new(NF4, 7, 4)).unwrap_err();
        assert_eq!(err, CatalogError::Constraint { family: NF4, constraint: "m >= n - 2" });
        assert_eq!(
            build(&FamilySpec::new(NF2, 6, 5)),
            Err(CatalogError::MissingParameter { family: NF2, param: Param::Alpha })
        );
        assert_eq!(
            build(&FamilySpec::fixed(LowerZ33).with_alpha(int(1))),
            Err(CatalogError::UnexpectedParameter { family: LowerZ33, param: Param::Alpha })
        );
    }

    #[test]
    fn every_reference_instance_is_zinbiel() {
        for spec in reference_instances() {
            let alg = build(&spec).unwrap();
            assert_eq!(alg.is_zinbiel(), ZinbielVerdict::Ok, "{spec:?}");
        }
    }

    /// The `n − 3` shift for `NF4` and an `e2 f1 = −f2` product for `A2`
    /// both break the identity; the constructors use `3 − n` and `−f3`.
    #[test]
    fn rejected_table_variants_fail_the_identity() {
        for (n, m) in [(6, 4), (6, 5), (7, 5)] {
            let mut b = Builder::new(n, m);
            b.chain(n - 1);
            b.odd_module(&int(n as i64 - 3));
            b.put(f(1), f(n - 2), e(n - 1), int(1));
            assert!(!b.alg.is_zinbiel().is_ok(), "{n},{m}");
        }
        let mut a2 = build(&FamilySpec::fixed(A2)).unwrap();
        a2.set_product(e(2), f(1), &crate::superalg::SuperElement::zero(5, 3)).unwrap();
        a2.add_term(e(2), f(1), f(2), int(-1)).unwrap();
        assert!(!a2.is_zinbiel().is_ok());
    }

    #[test]
    fn null_filiform_dimension_law() {
        for d in 3..=11 {
            let a = build(&FamilySpec::null_filiform_super(d)).unwrap();
            let dims: Vec<usize> = (0..=d).rev().collect();
            assert_eq!(power_sequence(&a).full_dims(), dims);
            assert_eq!(nilpotency_index(&a), Nilpotency::Index(d + 1));
        }
    }
}
