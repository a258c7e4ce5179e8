//! Power sequences `Z^k`, `Z₀^k`, `Z₁^k`, nilpotency, solvability and the
//! null-filiform predicate.
//!
//! All chains are subspaces of the full `n + m` coordinate space. A chain
//! stops at the first zero term or at the first term equal to its
//! successor; the repeated term is not listed again.

use alloc::vec::Vec;

use num_traits::Zero;

use crate::exactla::{LinalgError, Subspace};
use crate::superalg::{Parity, SuperAlgebra};

/// Span of `u·v` over canonical basis vectors of `u` and `v`.
pub fn product_subspace(alg: &SuperAlgebra, u: &Subspace, v: &Subspace) -> Result<Subspace, LinalgError> {
    let d = alg.dim();
    for s in [u, v] {
        if s.ambient_dim() != d {
            return Err(LinalgError::DimensionMismatch {
                expected: d,
                found: s.ambient_dim(),
            });
        }
    }
    let vs = v.basis_vectors();
    let mut products = Vec::with_capacity(u.dim() * v.dim());
    for x in u.basis_vectors() {
        for y in &vs {
            let p = alg.mul_coords(&x, y);
            if p.iter().any(|c| !c.is_zero()) {
                products.push(p);
            }
        }
    }
    Subspace::span(&products, d)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSequence {
    /// `Z^1 = Z`, `Z^{k+1} = Z Z^k`.
    pub full: Vec<Subspace>,
    /// `Z₀^1 = Z₀`, `Z₀^{k+1} = Z₀ Z₀^k`.
    pub even_chain: Vec<Subspace>,
    /// `Z₁^1 = Z₁`, `Z₁^{k+1} = Z₀ Z₁^k`.
    pub odd_chain: Vec<Subspace>,
}

fn dims(chain: &[Subspace]) -> Vec<usize> {
    chain.iter().map(Subspace::dim).collect()
}

impl PowerSequence {
    pub fn full_dims(&self) -> Vec<usize> {
        dims(&self.full)
    }

    pub fn even_dims(&self) -> Vec<usize> {
        dims(&self.even_chain)
    }

    pub fn odd_dims(&self) -> Vec<usize> {
        dims(&self.odd_chain)
    }
}

/// Iterates `next = left · current` from `start` until zero or a fixed point.
fn left_chain(alg: &SuperAlgebra, left: &Subspace, start: Subspace) -> Vec<Subspace> {
    let mut chain = alloc::vec![start];
    loop {
        let last = chain.last().expect("nonempty");
        if last.is_zero() {
            break;
        }
        let next = product_subspace(alg, left, last).expect("ambient dims agree");
        if &next == last {
            break;
        }
        chain.push(next);
    }
    chain
}

pub fn even_part(alg: &SuperAlgebra) -> Subspace {
    Subspace::coordinate(alg.dim(), alg.parity_range(Parity::Even))
}

pub fn odd_part(alg: &SuperAlgebra) -> Subspace {
    Subspace::coordinate(alg.dim(), alg.parity_range(Parity::Odd))
}

pub fn power_sequence(alg: &SuperAlgebra) -> PowerSequence {
    let full = Subspace::full(alg.dim());
    let even = even_part(alg);
    let odd = odd_part(alg);
    PowerSequence {
        full: left_chain(alg, &full, full.clone()),
        even_chain: left_chain(alg, &even, even.clone()),
        odd_chain: left_chain(alg, &even, odd),
    }
}

/// `Z₀²`, the even square.
pub fn even_square(alg: &SuperAlgebra) -> Subspace {
    let even = even_part(alg);
    product_subspace(alg, &even, &even).expect("ambient dims agree")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Nilpotency {
    Index(usize),
    NotNilpotent,
}

/// Least `s` with `Z^s = 0`.
pub fn nilpotency_index(alg: &SuperAlgebra) -> Nilpotency {
    let seq = power_sequence(alg);
    match seq.full.last() {
        Some(last) if last.is_zero() => Nilpotency::Index(seq.full.len()),
        _ => Nilpotency::NotNilpotent,
    }
}

/// Derived series `Z^{(k+1)} = Z^{(k)} Z^{(k)}`, listed like the power
/// sequences.
pub fn derived_series(alg: &SuperAlgebra) -> Vec<Subspace> {
    let mut chain = alloc::vec![Subspace::full(alg.dim())];
    loop {
        let last = chain.last().expect("nonempty");
        if last.is_zero() {
            break;
        }
        let next = product_subspace(alg, last, last).expect("ambient dims agree");
        if &next == last {
            break;
        }
        chain.push(next);
    }
    chain
}

pub fn is_solvable(alg: &SuperAlgebra) -> bool {
    derived_series(alg).last().is_some_and(Subspace::is_zero)
}

/// `dim Z^i = d + 1 - i` for every `i` up to the nilpotency index.
pub fn is_null_filiform(alg: &SuperAlgebra) -> bool {
    let d = alg.dim();
    let expected: Vec<usize> = (0..=d).rev().collect();
    power_sequence(alg).full_dims() == expected
}

/// Whether the canonical basis of `s` consists of homogeneous rows, with
/// the first `n` coordinates even.
pub fn is_graded_subspace(s: &Subspace, n: usize) -> bool {
    s.basis_vectors().iter().all(|row| {
        let even = row[..n].iter().any(|c| !c.is_zero());
        let odd = row[n..].iter().any(|c| !c.is_zero());
        !(even && odd)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::int;
    use crate::superalg::BasisLabel;
    use alloc::vec;

    fn e(i: usize) -> BasisLabel {
        BasisLabel::even(i)
    }

    fn f(i: usize) -> BasisLabel {
        BasisLabel::odd(i)
    }

    /// Even null-filiform table e_i e_j = C(i+j-1, j) e_{i+j}, built with an
    /// independent binomial loop.
    fn null_filiform(n: usize) -> SuperAlgebra {
        let mut a = SuperAlgebra::new(n, 0);
        for i in 1..=n {
            for j in 1..=n {
                if i + j <= n {
                    let top = i + j - 1;
                    let mut c: i64 = 1;
                    for t in 0..j {
                        c = c * (top - t) as i64 / (t + 1) as i64;
                    }
                    a.add_term(e(i), e(j), e(i + j), int(c)).unwrap();
                }
            }
        }
        a
    }

    fn z36() -> SuperAlgebra {
        let mut a = SuperAlgebra::new(1, 2);
        a.add_term(f(1), e(1), f(2), int(1)).unwrap();
        a
    }

    fn z39() -> SuperAlgebra {
        let mut a = SuperAlgebra::new(2, 1);
        a.add_term(e(1), e(1), e(2), int(1)).unwrap();
        a.add_term(f(1), f(1), e(2), int(1)).unwrap();
        a
    }

    #[test]
    fn product_subspace_examples() {
        let a = z36();
        let full = Subspace::full(3);
        let sq = product_subspace(&a, &full, &full).unwrap();
        assert_eq!(sq, Subspace::coordinate(3, 2..3));

        let zero = SuperAlgebra::new(2, 1);
        assert!(product_subspace(&zero, &full, &full).unwrap().is_zero());

        let nf = null_filiform(4);
        let f4 = Subspace::full(4);
        assert_eq!(product_subspace(&nf, &f4, &f4).unwrap(), Subspace::coordinate(4, 1..4));
        assert!(product_subspace(&nf, &f4, &full).is_err());
    }

    #[test]
    fn power_sequence_examples() {
        assert_eq!(power_sequence(&z36()).full_dims(), vec![3, 1, 0]);
        assert_eq!(power_sequence(&SuperAlgebra::new(2, 1)).full_dims(), vec![3, 0]);
        assert_eq!(power_sequence(&null_filiform(5)).full_dims(), vec![5, 4, 3, 2, 1, 0]);
        let z39 = power_sequence(&z39());
        assert_eq!(z39.even_dims(), vec![2, 1, 0]);
        // Z₁^2 = Z₀ Z₁ = 0
        assert_eq!(z39.odd_dims(), vec![1, 0]);
    }

    #[test]
    fn nilpotency_examples() {
        for n in 1..7 {
            assert_eq!(nilpotency_index(&null_filiform(n)), Nilpotency::Index(n + 1));
        }
        assert_eq!(nilpotency_index(&z39()), Nilpotency::Index(3));
        assert_eq!(nilpotency_index(&SuperAlgebra::new(1, 1)), Nilpotency::Index(2));
        let mut idem = SuperAlgebra::new(1, 0);
        idem.add_term(e(1), e(1), e(1), int(1)).unwrap();
        assert_eq!(nilpotency_index(&idem), Nilpotency::NotNilpotent);
    }

    #[test]
    fn solvability_examples() {
        assert!(is_solvable(&z39()));
        assert!(is_solvable(&SuperAlgebra::new(3, 0)));
        let mut idem = SuperAlgebra::new(1, 0);
        idem.add_term(e(1), e(1), e(1), int(1)).unwrap();
        assert!(!is_solvable(&idem));
    }

    #[test]
    fn null_filiform_predicate() {
        assert!(is_null_filiform(&null_filiform(4)));
        assert!(!is_null_filiform(&SuperAlgebra::new(2, 0)));
        assert!(!is_null_filiform(&z39()));
    }

    #[test]
    fn chains_descend_and_are_graded() {
        for alg in [z36(), z39(), null_filiform(6)] {
            let seq = power_sequence(&alg);
            for chain in [&seq.full, &seq.even_chain, &seq.odd_chain] {
                for w in chain.windows(2) {
                    assert!(w[1].is_subspace_of(&w[0]).unwrap());
                }
                for s in chain {
                    assert!(is_graded_subspace(s, alg.dim_even()));
                }
            }
        }
    }
}
