//! Graded changes of basis, isomorphism checks and an invariant battery.
//!
//! A [`GradedLinearMap`] stores an even block and an odd block. Column `j`
//! of a block is the image of the `j`-th basis vector of that part.
//! [`transport`] moves a product along a map: `x ∘ y = P(P⁻¹x · P⁻¹y)`, so
//! `P` is an isomorphism from `A` onto `transport(A, P)`.

use alloc::vec::Vec;

use num_traits::Zero;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::exactla::{int, Matrix, Rational, Subspace};
use crate::polysys::{Family, FamilyError};
use crate::series::{even_part, even_square, nilpotency_index, odd_part, power_sequence, product_subspace, Nilpotency};
use crate::spectra::{characteristic_sequence, CharSequence};
use crate::structure::annihilators;
use crate::superalg::{BasisLabel, SuperAlgebra, SuperElement};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MapError {
    #[error("{block} block is not square")]
    NotSquare { block: &'static str },
    #[error("{block} block is singular")]
    Singular { block: &'static str },
    #[error("map has blocks ({n}, {m}), algebra has ({algebra_n}, {algebra_m})")]
    DimensionMismatch {
        n: usize,
        m: usize,
        algebra_n: usize,
        algebra_m: usize,
    },
    #[error("algebras have total dimensions {0} and {1}")]
    TotalDimensionMismatch(usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedLinearMap {
    even: Matrix,
    odd: Matrix,
}

impl GradedLinearMap {
    pub fn new(even: Matrix, odd: Matrix) -> Result<Self, MapError> {
        for (block, m) in [("even", &even), ("odd", &odd)] {
            if !m.is_square() {
                return Err(MapError::NotSquare { block });
            }
            if m.determinant().map_or(true, |d| d.is_zero()) {
                return Err(MapError::Singular { block });
            }
        }
        Ok(GradedLinearMap { even, odd })
    }

    pub fn identity(n: usize, m: usize) -> Self {
        GradedLinearMap {
            even: Matrix::identity(n),
            odd: Matrix::identity(m),
        }
    }

    /// Diagonal map scaling each basis vector.
    pub fn diagonal(even: &[Rational], odd: &[Rational]) -> Result<Self, MapError> {
        let diag = |xs: &[Rational]| {
            let mut m = Matrix::zeros(xs.len(), xs.len());
            for (i, x) in xs.iter().enumerate() {
                m[(i, i)] = x.clone();
            }
            m
        };
        Self::new(diag(even), diag(odd))
    }

    pub fn even_block(&self) -> &Matrix {
        &self.even
    }

    pub fn odd_block(&self) -> &Matrix {
        &self.odd
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.even.rows(), self.odd.rows())
    }

    /// Block-diagonal matrix on the full coordinate space.
    pub fn full_matrix(&self) -> Matrix {
        let (n, m) = self.dims();
        let mut full = Matrix::zeros(n + m, n + m);
        for i in 0..n {
            for j in 0..n {
                full[(i, j)] = self.even[(i, j)].clone();
            }
        }
        for i in 0..m {
            for j in 0..m {
                full[(n + i, n + j)] = self.odd[(i, j)].clone();
            }
        }
        full
    }

    pub fn inverse(&self) -> GradedLinearMap {
        GradedLinearMap {
            even: self.even.inverse().expect("blocks are invertible"),
            odd: self.odd.inverse().expect("blocks are invertible"),
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &GradedLinearMap) -> Result<GradedLinearMap, MapError> {
        if self.dims() != other.dims() {
            let (n, m) = other.dims();
            let (algebra_n, algebra_m) = self.dims();
            return Err(MapError::DimensionMismatch { n, m, algebra_n, algebra_m });
        }
        Ok(GradedLinearMap {
            even: self.even.mul(&other.even).expect("same size"),
            odd: self.odd.mul(&other.odd).expect("same size"),
        })
    }

    pub fn apply_coords(&self, x: &[Rational]) -> Vec<Rational> {
        let n = self.even.rows();
        let mut out = self.even.apply(&x[..n]).expect("even length");
        out.extend(self.odd.apply(&x[n..]).expect("odd length"));
        out
    }

    pub fn apply(&self, x: &SuperElement) -> SuperElement {
        SuperElement::from_coords(self.even.rows(), &self.apply_coords(&x.coords()))
    }

    fn check_dims(&self, alg: &SuperAlgebra) -> Result<(), MapError> {
        let (n, m) = self.dims();
        if (n, m) != (alg.dim_even(), alg.dim_odd()) {
            return Err(MapError::DimensionMismatch {
                n,
                m,
                algebra_n: alg.dim_even(),
                algebra_m: alg.dim_odd(),
            });
        }
        Ok(())
    }
}

/// `B` with `x ∘ y = P(P⁻¹x · P⁻¹y)`.
pub fn transport(alg: &SuperAlgebra, p: &GradedLinearMap) -> Result<SuperAlgebra, MapError> {
    p.check_dims(alg)?;
    let d = alg.dim();
    let pinv = p.inverse().full_matrix();
    let pinv_cols: Vec<Vec<Rational>> = (0..d).map(|j| pinv.column(j)).collect();
    let mut out = SuperAlgebra::new(alg.dim_even(), alg.dim_odd());
    for i in 0..d {
        for j in 0..d {
            let prod = alg.mul_coords(&pinv_cols[i], &pinv_cols[j]);
            if prod.iter().all(Zero::is_zero) {
                continue;
            }
            let image = SuperElement::from_coords(alg.dim_even(), &p.apply_coords(&prod));
            out.set_product(alg.label(i), alg.label(j), &image)
                .expect("graded maps preserve the grading");
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsomorphismCheck {
    pub is_isomorphism: bool,
    /// First basis pair where `transport(A, P)` and `B` differ.
    pub first_failure: Option<(BasisLabel, BasisLabel)>,
}

/// Whether `transport(A, P) = B`.
pub fn is_isomorphism(a: &SuperAlgebra, b: &SuperAlgebra, p: &GradedLinearMap) -> Result<IsomorphismCheck, MapError> {
    p.check_dims(b)?;
    let moved = transport(a, p)?;
    let d = a.dim();
    for i in 0..d {
        for j in 0..d {
            if moved.product_terms(i, j) != b.product_terms(i, j) {
                return Ok(IsomorphismCheck {
                    is_isomorphism: false,
                    first_failure: Some((a.label(i), a.label(j))),
                });
            }
        }
    }
    Ok(IsomorphismCheck {
        is_isomorphism: true,
        first_failure: None,
    })
}

/// Random invertible graded map with small integer entries.
pub fn random_graded_map<R: Rng>(n: usize, m: usize, rng: &mut R) -> GradedLinearMap {
    let mut block = |k: usize| loop {
        let mut mat = Matrix::zeros(k, k);
        for i in 0..k {
            for j in 0..k {
                mat[(i, j)] = int(rng.gen_range(-3..=3));
            }
        }
        if mat.determinant().is_ok_and(|d| !d.is_zero()) {
            return mat;
        }
    };
    let even = block(n);
    let odd = block(m);
    GradedLinearMap { even, odd }
}

/// `count` random graded maps from a fixed seed.
pub fn seeded_graded_maps(n: usize, m: usize, seed: u64, count: usize) -> Vec<GradedLinearMap> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_graded_map(n, m, &mut rng)).collect()
}

/// Even and odd dimensions of a graded subspace.
pub fn graded_dims(s: &Subspace, n: usize) -> (usize, usize) {
    let d = s.ambient_dim();
    let even = s.intersection(&Subspace::coordinate(d, 0..n)).expect("same ambient").dim();
    (even, s.dim() - even)
}

/// Graded-isomorphism invariants. Field order is the order in which
/// [`distinguish`] compares them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantBattery {
    pub graded_dims: (usize, usize),
    /// `dim span{xy + yx}` over odd `x, y`.
    pub odd_pairing_symmetric_rank: usize,
    /// `dim span{xy − yx}` over odd `x, y`.
    pub odd_pairing_antisymmetric_rank: usize,
    /// Dimensions of `Z₀Z₀`, `Z₀Z₁`, `Z₁Z₀`, `Z₁Z₁`.
    pub parity_product_dims: [usize; 4],
    /// `(even, odd)` dimensions of `Z^k`.
    pub power_dims: Vec<(usize, usize)>,
    pub even_chain_dims: Vec<usize>,
    pub odd_chain_dims: Vec<usize>,
    pub nilpotency: Nilpotency,
    pub left_annihilator_dims: (usize, usize),
    pub right_annihilator_dims: (usize, usize),
    pub two_sided_annihilator_dims: (usize, usize),
    pub even_square_dim: usize,
    /// `None` when the even part lies in its own square.
    pub characteristic_sequence: Option<CharSequence>,
}

impl InvariantBattery {
    /// `(name, differs)` for each invariant, in comparison order.
    fn differences(&self, other: &Self) -> [(&'static str, bool); 13] {
        [
            ("graded dims", self.graded_dims != other.graded_dims),
            ("odd pairing symmetric rank", self.odd_pairing_symmetric_rank != other.odd_pairing_symmetric_rank),
            ("odd pairing antisymmetric rank", self.odd_pairing_antisymmetric_rank != other.odd_pairing_antisymmetric_rank),
            ("parity product dims", self.parity_product_dims != other.parity_product_dims),
            ("power dims", self.power_dims != other.power_dims),
            ("even chain dims", self.even_chain_dims != other.even_chain_dims),
            ("odd chain dims", self.odd_chain_dims != other.odd_chain_dims),
            ("nilpotency index", self.nilpotency != other.nilpotency),
            ("left annihilator dims", self.left_annihilator_dims != other.left_annihilator_dims),
            ("right annihilator dims", self.right_annihilator_dims != other.right_annihilator_dims),
            ("two-sided annihilator dims", self.two_sided_annihilator_dims != other.two_sided_annihilator_dims),
            ("even square dim", self.even_square_dim != other.even_square_dim),
            ("characteristic sequence", self.characteristic_sequence != other.characteristic_sequence),
        ]
    }
}

fn pairing_rank(alg: &SuperAlgebra, symmetric: bool) -> usize {
    let odd: Vec<usize> = alg.parity_range(crate::superalg::Parity::Odd).collect();
    let mut vectors = Vec::new();
    for &i in &odd {
        for &j in &odd {
            let xy = alg.basis_product(i, j);
            let yx = alg.basis_product(j, i);
            let v: Vec<Rational> = if symmetric {
                xy.iter().zip(&yx).map(|(a, b)| a + b).collect()
            } else {
                xy.iter().zip(&yx).map(|(a, b)| a - b).collect()
            };
            vectors.push(v);
        }
    }
    Subspace::span(&vectors, alg.dim()).expect("length d").dim()
}

pub fn invariant_battery(alg: &SuperAlgebra, seed: u64) -> InvariantBattery {
    let n = alg.dim_even();
    let (even, odd) = (even_part(alg), odd_part(alg));
    let prod = |u: &Subspace, v: &Subspace| product_subspace(alg, u, v).expect("same ambient").dim();
    let seq = power_sequence(alg);
    let ann = annihilators(alg);
    InvariantBattery {
        graded_dims: (n, alg.dim_odd()),
        odd_pairing_symmetric_rank: pairing_rank(alg, true),
        odd_pairing_antisymmetric_rank: pairing_rank(alg, false),
        parity_product_dims: [prod(&even, &even), prod(&even, &odd), prod(&odd, &even), prod(&odd, &odd)],
        power_dims: seq.full.iter().map(|s| graded_dims(s, n)).collect(),
        even_chain_dims: seq.even_dims(),
        odd_chain_dims: seq.odd_dims(),
        nilpotency: nilpotency_index(alg),
        left_annihilator_dims: graded_dims(&ann.left, n),
        right_annihilator_dims: graded_dims(&ann.right, n),
        two_sided_annihilator_dims: graded_dims(&ann.two_sided, n),
        even_square_dim: even_square(alg).dim(),
        characteristic_sequence: characteristic_sequence(alg, seed).ok().map(|c| c.sequence),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Distinction {
    /// Names the first invariant that differs.
    Distinguishable(&'static str),
    Inconclusive,
}

/// Compares batteries; never claims isomorphism. Algebras of different
/// total dimension are an input error, while different graded dimensions
/// already separate them.
pub fn distinguish(a: &SuperAlgebra, b: &SuperAlgebra, seed: u64) -> Result<Distinction, MapError> {
    if a.dim() != b.dim() {
        return Err(MapError::TotalDimensionMismatch(a.dim(), b.dim()));
    }
    let (ba, bb) = (invariant_battery(a, seed), invariant_battery(b, seed));
    Ok(ba
        .differences(&bb)
        .into_iter()
        .find(|(_, differs)| *differs)
        .map_or(Distinction::Inconclusive, |(name, _)| Distinction::Distinguishable(name)))
}

/// The three reduction maps between the `(1, 2)` families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Reduction {
    /// `(b) → (e)`.
    Phi1,
    /// `(c) → (g)`.
    Phi2,
    /// `(d) → (g)`.
    Phi3,
}

/// A reduction map with its source and the predicted target.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionInstance {
    pub source: SuperAlgebra,
    pub target: SuperAlgebra,
    pub map: GradedLinearMap,
    pub target_params: Vec<Rational>,
}

impl Reduction {
    pub const ALL: [Reduction; 3] = [Reduction::Phi1, Reduction::Phi2, Reduction::Phi3];

    pub fn source(self) -> Family {
        match self {
            Reduction::Phi1 => Family::B,
            Reduction::Phi2 => Family::C,
            Reduction::Phi3 => Family::D,
        }
    }

    pub fn target(self) -> Family {
        match self {
            Reduction::Phi1 => Family::E,
            Reduction::Phi2 | Reduction::Phi3 => Family::G,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Reduction::Phi1 => "phi1",
            Reduction::Phi2 => "phi2",
            Reduction::Phi3 => "phi3",
        }
    }

    /// Instantiates the map at source parameters. `e1` is fixed and the odd
    /// block columns are the images of `f1`, `f2`:
    ///
    /// - φ₁: `f1 ↦ (λ11/λ12) f1`, `f2 ↦ f1 + f2`, landing on (e) with `(−μ, λ12²/λ11)`;
    /// - φ₂: `f1 ↦ (μ/μ')(f1 + f2)`, `f2 ↦ f1`, landing on (g) with `(μ, 0)`;
    /// - φ₃: `f1 ↦ f1`, `f2 ↦ (ν'/ν)(f1 − f2)`, landing on (g) with `(μ, ν)`.
    ///
    /// Requires `μ ≠ 0` for φ₂, since the map is singular otherwise.
    pub fn instantiate(self, params: &[Rational]) -> Result<ReductionInstance, ReductionError> {
        let source = self.source().algebra(params)?;
        let p = |i: usize| params[i].clone();
        let (cols, target_params) = match self {
            Reduction::Phi1 => {
                let (l11, l12, mu) = (p(0), p(1), p(2));
                ([[&l11 / &l12, int(0)], [int(1), int(1)]], alloc::vec![-mu, &l12 * &l12 / &l11])
            }
            Reduction::Phi2 => {
                let (mu, mup) = (p(0), p(1));
                let r = &mu / &mup;
                ([[r.clone(), r], [int(1), int(0)]], alloc::vec![mu, int(0)])
            }
            Reduction::Phi3 => {
                let (mu, nu, nup) = (p(0), p(1), p(2));
                let r = &nup / &nu;
                ([[int(1), int(0)], [r.clone(), -r]], alloc::vec![mu, nu])
            }
        };
        let odd = Matrix::from_columns(2, &[cols[0].to_vec(), cols[1].to_vec()]).expect("2x2");
        let map = GradedLinearMap::new(Matrix::identity(1), odd)?;
        let target = self.target().algebra(&target_params)?;
        Ok(ReductionInstance {
            source,
            target,
            map,
            target_params,
        })
    }

    /// Seeded source samples, skipping those where the map is singular.
    pub fn seeded_samples(self, seed: u64, count: usize) -> Vec<Vec<Rational>> {
        let mut out = Vec::with_capacity(count);
        let mut round = 0u64;
        while out.len() < count {
            for s in self.source().seeded_samples(seed.wrapping_add(round), count) {
                if out.len() < count && self.instantiate(&s).is_ok() {
                    out.push(s);
                }
            }
            round += 1;
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Map(#[from] MapError),
}

/// Checks a reduction at one parameter sample.
pub fn verify_reduction(r: Reduction, params: &[Rational]) -> Result<IsomorphismCheck, ReductionError> {
    let inst = r.instantiate(params)?;
    Ok(is_isomorphism(&inst.source, &inst.target, &inst.map)?)
}
