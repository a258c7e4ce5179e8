//! Left-multiplication operators, Jordan-block profiles and characteristic
//! sequences.
//!
//! The characteristic sequence is a maximum over the infinite set
//! `Z₀ \ Z₀²`. [`characteristic_sequence`] maximizes over a finite,
//! deterministic candidate set instead, so its result is a certified lower
//! bound. The filiform target `(n−1 | m)` is read as `C₀ = (n−1, 1)`,
//! `C₁ = (m)`, the only partition of `n` with largest part `n − 1`.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::exactla::{int, rat, Matrix, Rational, Subspace};
use crate::series::even_square;
use crate::superalg::{SuperAlgebra, SuperElement};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpectraError {
    #[error("element dimensions do not match the algebra")]
    DimensionMismatch,
    #[error("element has a nonzero odd part")]
    NotEven,
    #[error("element lies in the even square")]
    InEvenSquare,
    #[error("matrix is not square")]
    NotSquare,
    #[error("operator is not nilpotent")]
    NotNilpotent,
    #[error("the even part lies inside its own square")]
    Degenerate,
    #[error("no candidate has a nilpotent left multiplication")]
    NoNilpotentCandidate,
}

/// A pair of partitions `(C₀ | C₁)`; derived order is lexicographic on
/// `c0` and then on `c1`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CharSequence {
    pub c0: Vec<usize>,
    pub c1: Vec<usize>,
}

impl CharSequence {
    /// `((n−1, 1) | (m))`.
    pub fn filiform(n: usize, m: usize) -> Self {
        CharSequence {
            c0: if n >= 2 { vec![n - 1, 1] } else { vec![n] },
            c1: single_block(m),
        }
    }
}

/// Coordinates scaled so the first nonzero entry is 1.
fn projective_class(v: &[Rational]) -> Vec<Rational> {
    match v.iter().find(|c| !c.is_zero()) {
        Some(lead) => {
            let inv = lead.recip();
            v.iter().map(|c| c * &inv).collect()
        }
        None => v.to_vec(),
    }
}

fn single_block(k: usize) -> Vec<usize> {
    if k == 0 {
        Vec::new()
    } else {
        vec![k]
    }
}

/// Matrices of `L_x` on `Z₀` and on `Z₁`; column `j` holds the image of
/// the `j`-th basis vector of that part.
pub fn left_mult_matrices(alg: &SuperAlgebra, x: &SuperElement) -> Result<(Matrix, Matrix), SpectraError> {
    alg.check_element(x).map_err(|_| SpectraError::DimensionMismatch)?;
    if x.odd().iter().any(|c| !c.is_zero()) {
        return Err(SpectraError::NotEven);
    }
    let (n, m) = (alg.dim_even(), alg.dim_odd());
    let coords = x.coords();
    let mut m0 = Matrix::zeros(n, n);
    let mut m1 = Matrix::zeros(m, m);
    for j in 0..n + m {
        let image = alg.mul_basis_right(&coords, j);
        if j < n {
            for k in 0..n {
                m0[(k, j)] = image[k].clone();
            }
        } else {
            for k in 0..m {
                m1[(k, j - n)] = image[n + k].clone();
            }
        }
    }
    Ok((m0, m1))
}

/// `[rank M^0, rank M^1, ...]` up to the first zero rank.
fn rank_profile(m: &Matrix) -> Result<Vec<usize>, SpectraError> {
    if !m.is_square() {
        return Err(SpectraError::NotSquare);
    }
    let mut profile = vec![m.rows()];
    let mut power = Matrix::identity(m.rows());
    while *profile.last().expect("nonempty") > 0 {
        power = power.mul(m).expect("square");
        let r = power.rank();
        if r == *profile.last().expect("nonempty") {
            return Err(SpectraError::NotNilpotent);
        }
        profile.push(r);
    }
    Ok(profile)
}

/// Jordan block sizes of a nilpotent matrix, descending.
pub fn jordan_blocks(m: &Matrix) -> Result<Vec<usize>, SpectraError> {
    let r = rank_profile(m)?;
    // at_least[k-1] = #blocks of size >= k = r[k-1] - r[k]
    let at_least: Vec<usize> = r.windows(2).map(|w| w[0] - w[1]).collect();
    let mut blocks = Vec::new();
    for size in (1..=at_least.len()).rev() {
        let bigger = at_least.get(size).copied().unwrap_or(0);
        for _ in 0..at_least[size - 1] - bigger {
            blocks.push(size);
        }
    }
    Ok(blocks)
}

/// `(C₀(x) | C₁(x))` at a specific even `x ∉ Z₀²`.
pub fn char_sequence_at(alg: &SuperAlgebra, x: &SuperElement) -> Result<CharSequence, SpectraError> {
    let (m0, m1) = left_mult_matrices(alg, x)?;
    if even_square(alg).contains(&x.coords()).expect("ambient dims agree") {
        return Err(SpectraError::InEvenSquare);
    }
    Ok(CharSequence {
        c0: jordan_blocks(&m0)?,
        c1: jordan_blocks(&m1)?,
    })
}

/// Seed used when the caller does not supply one.
pub const DEFAULT_SEED: u64 = 0x5EED;

/// Number of random combinations tried after the structured candidates.
pub const RANDOM_CANDIDATES: usize = 200;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacteristicSequence {
    pub sequence: CharSequence,
    pub witness: SuperElement,
    /// Position of the witness in the candidate order.
    pub candidate_index: usize,
}

/// Even candidates outside `Z₀²`, in the documented order: basis vectors,
/// then `e_i + q e_j` for `q ∈ {1, −1, 2, −2, 1/2}`, then seeded random
/// combinations.
pub fn candidates(alg: &SuperAlgebra, seed: u64) -> Vec<SuperElement> {
    let n = alg.dim_even();
    let square = even_square(alg);
    let outside = |coords: &[Rational]| !square.contains(coords).expect("ambient dims agree");
    let mut out = Vec::new();
    let unit = |i: usize| {
        let mut v = vec![Rational::zero(); alg.dim()];
        v[i] = Rational::one();
        v
    };
    for i in 0..n {
        let v = unit(i);
        if outside(&v) {
            out.push(SuperElement::from_coords(n, &v));
        }
    }
    let qs = [int(1), int(-1), int(2), int(-2), rat(1, 2)];
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            for q in &qs {
                let mut v = unit(i);
                v[j] = q.clone();
                if outside(&v) {
                    out.push(SuperElement::from_coords(n, &v));
                }
            }
        }
    }
    if n > 0 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut produced = 0;
        let mut attempts = 0;
        while produced < RANDOM_CANDIDATES && attempts < 4 * RANDOM_CANDIDATES {
            attempts += 1;
            let mut v = vec![Rational::zero(); alg.dim()];
            for c in v.iter_mut().take(n) {
                *c = rat(rng.gen_range(-5..=5), rng.gen_range(1..=3));
            }
            if outside(&v) {
                out.push(SuperElement::from_coords(n, &v));
                produced += 1;
            }
        }
    }
    out
}

/// Lexicographic maximum of `char_sequence_at` over [`candidates`]; ties go
/// to the earliest candidate. Candidates with non-nilpotent `L_x` are
/// skipped.
///
/// The sequence of `λx` equals that of `x`, so scalar multiples of earlier
/// candidates are not recomputed, and the search stops at `((n) | (m))`.
pub fn characteristic_sequence(alg: &SuperAlgebra, seed: u64) -> Result<CharacteristicSequence, SpectraError> {
    let all = candidates(alg, seed);
    if all.is_empty() {
        return Err(SpectraError::Degenerate);
    }
    let top = CharSequence {
        c0: single_block(alg.dim_even()),
        c1: single_block(alg.dim_odd()),
    };
    let mut seen = BTreeSet::new();
    let mut best: Option<CharacteristicSequence> = None;
    for (idx, x) in all.into_iter().enumerate() {
        if best.as_ref().is_some_and(|b| b.sequence == top) {
            break;
        }
        if !seen.insert(projective_class(x.even())) {
            continue;
        }
        let seq = match char_sequence_at(alg, &x) {
            Ok(s) => s,
            Err(SpectraError::NotNilpotent) => continue,
            Err(e) => return Err(e),
        };
        if best.as_ref().is_none_or(|b| seq > b.sequence) {
            best = Some(CharacteristicSequence {
                sequence: seq,
                witness: x,
                candidate_index: idx,
            });
        }
    }
    best.ok_or(SpectraError::NoNilpotentCandidate)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FiliformVerdict {
    /// One witness attains `((n−1,1) | (m))` and `dim Z₀² ≤ n − 2` rules out
    /// anything larger.
    Yes { witness: SuperElement },
    No { reason: NotFiliformReason },
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NotFiliformReason {
    /// `n < 2`, so `(n−1, 1)` is not a partition of `n`.
    EvenPartTooSmall,
    /// `dim Z₀² < n − 2`: no `L_x` has rank `n − 2` on `Z₀`.
    EvenSquareTooSmall,
    /// `dim Z₀Z₁ < m − 1`: no `L_x` has rank `m − 1` on `Z₁`.
    OddProductTooSmall,
    /// Some even `x` has `C₀(x) = (n)`, which exceeds `(n−1, 1)`.
    NullFiliformEvenPart { witness: SuperElement },
}

pub fn is_filiform(alg: &SuperAlgebra, seed: u64) -> FiliformVerdict {
    let (n, m) = (alg.dim_even(), alg.dim_odd());
    let no = |reason| FiliformVerdict::No { reason };
    if n < 2 {
        return no(NotFiliformReason::EvenPartTooSmall);
    }
    let sq = even_square(alg);
    if sq.dim() + 2 < n {
        return no(NotFiliformReason::EvenSquareTooSmall);
    }
    let even = crate::series::even_part(alg);
    let odd = crate::series::odd_part(alg);
    let z0z1: Subspace = crate::series::product_subspace(alg, &even, &odd).expect("ambient dims agree");
    if m > 0 && z0z1.dim() + 1 < m {
        return no(NotFiliformReason::OddProductTooSmall);
    }
    let target = CharSequence::filiform(n, m);
    let mut witness = None;
    for x in candidates(alg, seed) {
        let seq = match char_sequence_at(alg, &x) {
            Ok(s) => s,
            Err(_) => continue,
        };
        if seq.c0 == [n] {
            return no(NotFiliformReason::NullFiliformEvenPart { witness: x });
        }
        if witness.is_none() && seq == target {
            witness = Some(x);
        }
    }
    match witness {
        Some(w) if sq.dim() + 2 <= n => FiliformVerdict::Yes { witness: w },
        _ => FiliformVerdict::Unknown,
    }
}
