//! The eight solution families of the `(1, 2)` system over the zero even
//! part, and their verification against the generic system.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_traits::Zero;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use super::poly::Poly;
use super::system::{assignment_from_algebra, first_nonvanishing, generic_superidentity_system};
use crate::exactla::{rat, Rational};
use crate::superalg::{BasisLabel, SuperAlgebra};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
    H,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("unknown family {0:?}, expected one of a..h")]
    Unknown(alloc::string::String),
    #[error("family ({family}) takes {expected} parameters, got {found}")]
    ParameterCount { family: Family, expected: usize, found: usize },
    #[error("family ({family}) divides by {param}, which is zero")]
    ZeroDenominator { family: Family, param: &'static str },
}

impl Family {
    pub const ALL: [Family; 8] = [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::E,
        Family::F,
        Family::G,
        Family::H,
    ];

    pub fn letter(self) -> char {
        (b'a' + self as u8) as char
    }

    pub fn parameter_names(self) -> &'static [&'static str] {
        match self {
            Family::A => &["l11", "l12", "l21", "l22"],
            Family::B => &["l11", "l12", "mu"],
            Family::D => &["mu", "nu", "nu'"],
            _ => &["mu", "mu'"],
        }
    }

    /// Parameters that appear in a denominator.
    pub fn nonzero_parameters(self) -> &'static [&'static str] {
        match self {
            Family::B => &["l11", "l12"],
            Family::C => &["mu'"],
            Family::D => &["nu", "nu'"],
            _ => &[],
        }
    }

    fn check(self, params: &[Rational]) -> Result<(), FamilyError> {
        let names = self.parameter_names();
        if params.len() != names.len() {
            return Err(FamilyError::ParameterCount {
                family: self,
                expected: names.len(),
                found: params.len(),
            });
        }
        for (name, value) in names.iter().zip(params) {
            if value.is_zero() && self.nonzero_parameters().contains(name) {
                return Err(FamilyError::ZeroDenominator { family: self, param: name });
            }
        }
        Ok(())
    }

    /// Nonzero products `(left, right, output, coefficient)`.
    pub fn products(self, params: &[Rational]) -> Result<Vec<(BasisLabel, BasisLabel, BasisLabel, Rational)>, FamilyError> {
        self.check(params)?;
        let (e1, f1, f2) = (BasisLabel::even(1), BasisLabel::odd(1), BasisLabel::odd(2));
        let p = |i: usize| params[i].clone();
        let out = match self {
            Family::A => alloc::vec![
                (f1, f1, e1, p(0)),
                (f1, f2, e1, p(1)),
                (f2, f1, e1, p(2)),
                (f2, f2, e1, p(3)),
            ],
            Family::B => {
                let (l11, l12, mu) = (p(0), p(1), p(2));
                alloc::vec![
                    (f1, e1, f1, mu.clone()),
                    (f1, e1, f2, -(&l11 / &l12) * &mu),
                    (f2, e1, f1, (&l12 / &l11) * &mu),
                    (f2, e1, f2, -mu.clone()),
                    (f1, f1, e1, l11.clone()),
                    (f1, f2, e1, l12.clone()),
                    (f2, f1, e1, l12.clone()),
                    (f2, f2, e1, &l12 * &l12 / &l11),
                ]
            }
            Family::C => {
                let (mu, mup) = (p(0), p(1));
                alloc::vec![
                    (e1, f1, f1, mu.clone()),
                    (e1, f1, f2, -(&mu * &mu) / &mup),
                    (e1, f2, f1, mup.clone()),
                    (e1, f2, f2, -mu.clone()),
                ]
            }
            Family::D => {
                let (mu, nu, nup) = (p(0), p(1), p(2));
                alloc::vec![
                    (e1, f1, f1, mu.clone()),
                    (e1, f1, f2, -(&mu * &nu) / &nup),
                    (e1, f2, f1, &mu * &nup / &nu),
                    (e1, f2, f2, -mu.clone()),
                    (f1, e1, f1, nu.clone()),
                    (f1, e1, f2, -(&nu * &nu) / &nup),
                    (f2, e1, f1, nup.clone()),
                    (f2, e1, f2, -nu.clone()),
                ]
            }
            Family::E => alloc::vec![(f1, e1, f2, p(0)), (f1, f1, e1, p(1))],
            Family::F => alloc::vec![(f2, e1, f1, p(0)), (f2, f2, e1, p(1))],
            Family::G => alloc::vec![(e1, f1, f2, p(0)), (f1, e1, f2, p(1))],
            Family::H => alloc::vec![(e1, f2, f1, p(0)), (f2, e1, f1, p(1))],
        };
        Ok(out.into_iter().filter(|t| !t.3.is_zero()).collect())
    }

    pub fn algebra(self, params: &[Rational]) -> Result<SuperAlgebra, FamilyError> {
        let mut alg = SuperAlgebra::new(1, 2);
        for (l, r, o, c) in self.products(params)? {
            alg.add_term(l, r, o, c).expect("families respect the grading");
        }
        Ok(alg)
    }

    /// `count` parameter samples `p/q` with `p ∈ −5..=5`, `q ∈ 1..=3`,
    /// redrawn where a denominator would vanish.
    pub fn seeded_samples(self, seed: u64, count: usize) -> Vec<Vec<Rational>> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (self as u64 + 1));
        let nonzero = self.nonzero_parameters();
        (0..count)
            .map(|_| {
                self.parameter_names()
                    .iter()
                    .map(|name| loop {
                        let x = rat(rng.gen_range(-5..=5), rng.gen_range(1..=3));
                        if !(x.is_zero() && nonzero.contains(name)) {
                            break x;
                        }
                    })
                    .collect()
            })
            .collect()
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl FromStr for Family {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim_start_matches('(').trim_end_matches(')');
        Family::ALL
            .into_iter()
            .find(|f| t.len() == 1 && t.starts_with(f.letter()))
            .ok_or_else(|| FamilyError::Unknown(s.into()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyCheck {
    pub family: Family,
    pub samples: usize,
    /// Sample index and the first polynomial that does not vanish on it.
    pub failure: Option<(usize, Poly)>,
}

impl FamilyCheck {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// Substitutes each sample into the full generic `(1, 2)` system.
pub fn verify_family(family: Family, samples: &[Vec<Rational>]) -> Result<FamilyCheck, FamilyError> {
    let system = generic_superidentity_system(1, 2);
    for (idx, sample) in samples.iter().enumerate() {
        let asg = assignment_from_algebra(&family.algebra(sample)?).expect("e1e1 = 0 in every family");
        if let Some(p) = first_nonvanishing(&system, &asg).expect("assignment covers the pattern") {
            return Ok(FamilyCheck {
                family,
                samples: samples.len(),
                failure: Some((idx, p)),
            });
        }
    }
    Ok(FamilyCheck {
        family,
        samples: samples.len(),
        failure: None,
    })
}
