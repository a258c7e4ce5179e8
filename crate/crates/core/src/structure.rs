//! Annihilators, ideals and the constructive annihilator lemmas.

use alloc::vec::Vec;

use num_traits::Zero;
use thiserror::Error;

use crate::exactla::{LinalgError, Matrix, Rational, Subspace};
use crate::series::{even_part, odd_part, power_sequence, product_subspace};
use crate::superalg::{AlgebraError, Homogeneity, Parity, SuperAlgebra, SuperElement};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("the algebra is zero-dimensional")]
    ZeroDimensional,
    #[error("no even seed annihilating the even part exists")]
    NoSeed,
    #[error("the constructed element does not annihilate the algebra")]
    Falsified { element: SuperElement },
    #[error("the two-sided annihilator is zero")]
    TrivialAnnihilator,
    #[error("odd dimension is {0}, expected 1")]
    OddDimension(usize),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// `{x : x e_j = 0 for every j in targets}`.
fn left_annihilator_of(alg: &SuperAlgebra, targets: &[usize]) -> Subspace {
    let d = alg.dim();
    // One row per (target j, output k): sum_i x_i c_{ij}^k = 0.
    let mut rows = Vec::new();
    for &j in targets {
        let mut block = alloc::vec![alloc::vec![Rational::zero(); d]; d];
        #[allow(clippy::needless_range_loop)]
        for i in 0..d {
            for (k, c) in alg.product_terms(i, j) {
                block[*k][i] = c.clone();
            }
        }
        rows.extend(block.into_iter().filter(|r| r.iter().any(|c| !c.is_zero())));
    }
    kernel_subspace(d, rows)
}

/// `{x : v x = 0 for all v in basis}`.
fn right_annihilator_of(alg: &SuperAlgebra, sources: &[usize]) -> Subspace {
    let d = alg.dim();
    let mut rows = Vec::new();
    for &i in sources {
        let mut block = alloc::vec![alloc::vec![Rational::zero(); d]; d];
        #[allow(clippy::needless_range_loop)]
        for j in 0..d {
            for (k, c) in alg.product_terms(i, j) {
                block[*k][j] = c.clone();
            }
        }
        rows.extend(block.into_iter().filter(|r| r.iter().any(|c| !c.is_zero())));
    }
    kernel_subspace(d, rows)
}

fn kernel_subspace(d: usize, rows: Vec<Vec<Rational>>) -> Subspace {
    if rows.is_empty() {
        return Subspace::full(d);
    }
    let m = Matrix::from_rows(d, rows).expect("rows have length d");
    Subspace::span(&m.kernel(), d).expect("kernel vectors have length d")
}

/// `RC(a) = {x : a x = 0}`.
pub fn right_annihilator(alg: &SuperAlgebra, a: &SuperElement) -> Result<Subspace, StructureError> {
    alg.check_element(a)?;
    let d = alg.dim();
    let coords = a.coords();
    let columns: Vec<Vec<Rational>> = (0..d).map(|j| alg.mul_basis_right(&coords, j)).collect();
    let la = Matrix::from_columns(d, &columns)?;
    Ok(Subspace::span(&la.kernel(), d)?)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnnihilatorReport {
    /// `{x : xZ = 0}`.
    pub left: Subspace,
    /// `{x : Zx = 0}`.
    pub right: Subspace,
    pub two_sided: Subspace,
}

pub fn annihilators(alg: &SuperAlgebra) -> AnnihilatorReport {
    let all: Vec<usize> = (0..alg.dim()).collect();
    let left = left_annihilator_of(alg, &all);
    let right = right_annihilator_of(alg, &all);
    let two_sided = left.intersection(&right).expect("same ambient");
    AnnihilatorReport { left, right, two_sided }
}

/// `Ann_L(Z₀) = {x : x Z₀ = 0}`.
pub fn left_annihilator_of_even(alg: &SuperAlgebra) -> Subspace {
    let evens: Vec<usize> = alg.parity_range(Parity::Even).collect();
    left_annihilator_of(alg, &evens)
}

/// `RC(a₁) ⊆ RC(a₁a₂)` for homogeneous `a₁`, `a₂`.
pub fn rc_monotonicity_check(
    alg: &SuperAlgebra,
    a1: &SuperElement,
    a2: &SuperElement,
) -> Result<bool, StructureError> {
    for (pos, a) in [a1, a2].into_iter().enumerate() {
        alg.check_element(a)?;
        if a.homogeneity() == Homogeneity::Mixed {
            return Err(AlgebraError::NonHomogeneous { position: pos + 1 }.into());
        }
    }
    let product = alg.multiply(a1, a2)?;
    let small = right_annihilator(alg, a1)?;
    let big = right_annihilator(alg, &product)?;
    Ok(small.is_subspace_of(&big)?)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeftAnnihilatingElement {
    pub element: SuperElement,
    pub parity: Parity,
    /// Elements visited by the loop, the seed first.
    pub trail: Vec<SuperElement>,
}

fn annihilates_left(alg: &SuperAlgebra, x: &[Rational]) -> bool {
    (0..alg.dim()).all(|j| alg.mul_basis_right(x, j).iter().all(Zero::is_zero))
}

fn first_vector(s: &Subspace) -> Option<Vec<Rational>> {
    s.basis_vectors().into_iter().next()
}

/// A nonzero homogeneous `e` with `eZ = 0`, built by the seed-and-multiply
/// loop: seed in the last nonzero `Z₀^k` annihilating `Z₀` on the right,
/// then replace `e` by `e x` for the first odd basis `x` with `e x ≠ 0`
/// until none remains.
pub fn find_left_annihilating_homogeneous(alg: &SuperAlgebra) -> Result<LeftAnnihilatingElement, StructureError> {
    let d = alg.dim();
    if d == 0 {
        return Err(StructureError::ZeroDimensional);
    }
    let n = alg.dim_even();
    let seed: Vec<Rational> = if n == 0 {
        alg.basis_element(0).coords()
    } else {
        let chain = power_sequence(alg).even_chain;
        let top = chain.iter().rev().find(|s| !s.is_zero()).cloned().unwrap_or_else(|| even_part(alg));
        let ann = left_annihilator_of_even(alg).intersection(&even_part(alg))?;
        let candidates = top.intersection(&ann)?;
        first_vector(&candidates)
            .or_else(|| first_vector(&ann))
            .ok_or(StructureError::NoSeed)?
    };
    let mut e = seed;
    let mut trail = alloc::vec![SuperElement::from_coords(n, &e)];
    for _ in 0..=d {
        let next = alg
            .parity_range(Parity::Odd)
            .map(|j| alg.mul_basis_right(&e, j))
            .find(|p| p.iter().any(|c| !c.is_zero()));
        match next {
            Some(p) => {
                e = p;
                trail.push(SuperElement::from_coords(n, &e));
            }
            None => break,
        }
    }
    let element = SuperElement::from_coords(n, &e);
    let parity = match element.homogeneity() {
        Homogeneity::Pure(p) => p,
        _ => return Err(StructureError::Falsified { element }),
    };
    if !annihilates_left(alg, &e) {
        return Err(StructureError::Falsified { element });
    }
    Ok(LeftAnnihilatingElement { element, parity, trail })
}

fn check_ambient(alg: &SuperAlgebra, s: &Subspace) -> Result<(), StructureError> {
    if s.ambient_dim() != alg.dim() {
        return Err(LinalgError::DimensionMismatch {
            expected: alg.dim(),
            found: s.ambient_dim(),
        }
        .into());
    }
    Ok(())
}

/// `I Z ⊆ I`.
pub fn is_right_ideal(alg: &SuperAlgebra, ideal: &Subspace) -> Result<bool, StructureError> {
    check_ambient(alg, ideal)?;
    let iz = product_subspace(alg, ideal, &Subspace::full(alg.dim()))?;
    Ok(iz.is_subspace_of(ideal)?)
}

/// `Z I`.
pub fn left_product_ideal(alg: &SuperAlgebra, ideal: &Subspace) -> Result<Subspace, StructureError> {
    check_ambient(alg, ideal)?;
    Ok(product_subspace(alg, &Subspace::full(alg.dim()), ideal)?)
}

/// `I Z ⊆ I` and `Z I ⊆ I`.
pub fn is_ideal(alg: &SuperAlgebra, ideal: &Subspace) -> Result<bool, StructureError> {
    Ok(is_right_ideal(alg, ideal)? && left_product_ideal(alg, ideal)?.is_subspace_of(ideal)?)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalIdeal {
    pub ideal: Subspace,
    pub generator: SuperElement,
    pub parity: Parity,
    /// `e Z = 0`, checked on every basis vector.
    pub left_zero: bool,
    /// `Z e = 0`, checked on every basis vector.
    pub right_zero: bool,
}

/// A one-dimensional graded ideal spanned by a homogeneous element of the
/// two-sided annihilator; even generators are preferred.
pub fn minimal_graded_ideal(alg: &SuperAlgebra) -> Result<MinimalIdeal, StructureError> {
    let d = alg.dim();
    if d == 0 {
        return Err(StructureError::ZeroDimensional);
    }
    let ann = annihilators(alg).two_sided;
    let (generator, parity) = [(even_part(alg), Parity::Even), (odd_part(alg), Parity::Odd)]
        .into_iter()
        .find_map(|(part, parity)| {
            let piece = ann.intersection(&part).expect("same ambient");
            first_vector(&piece).map(|v| (v, parity))
        })
        .ok_or(StructureError::TrivialAnnihilator)?;
    let left_zero = annihilates_left(alg, &generator);
    let right_zero = (0..d).all(|i| alg.mul_basis_left(i, &generator).iter().all(Zero::is_zero));
    Ok(MinimalIdeal {
        ideal: Subspace::span(core::slice::from_ref(&generator), d)?,
        generator: SuperElement::from_coords(alg.dim_even(), &generator),
        parity,
        left_zero,
        right_zero,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TypeN1Report {
    pub even_odd_zero: bool,
    pub odd_even_zero: bool,
    /// `Z₁Z₁ ⊆ Ann_L(Z₀)`.
    pub odd_square_in_left_annihilator: bool,
}

impl TypeN1Report {
    pub fn holds(&self) -> bool {
        self.even_odd_zero && self.odd_even_zero && self.odd_square_in_left_annihilator
    }
}

/// Checks `Z₀Z₁ = Z₁Z₀ = 0` and `Z₁Z₁ ⊆ Ann_L(Z₀)` for odd dimension 1.
pub fn type_n1_structure_check(alg: &SuperAlgebra) -> Result<TypeN1Report, StructureError> {
    if alg.dim_odd() != 1 {
        return Err(StructureError::OddDimension(alg.dim_odd()));
    }
    let (even, odd) = (even_part(alg), odd_part(alg));
    let prod = |u: &Subspace, v: &Subspace| product_subspace(alg, u, v).expect("same ambient");
    let odd_square = prod(&odd, &odd);
    Ok(TypeN1Report {
        even_odd_zero: prod(&even, &odd).is_zero(),
        odd_even_zero: prod(&odd, &even).is_zero(),
        odd_square_in_left_annihilator: odd_square.is_subspace_of(&left_annihilator_of_even(alg))?,
    })
}
