//! The superidentity system in generic structure constants.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use super::poly::{Assignment, Poly, PolyError, Var, VarKind};
use crate::exactla::{rat, Rational};
use crate::superalg::{BasisLabel, Parity, SignConvention, SuperAlgebra};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SystemError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("product {left}{right} has no variable in the pattern")]
    Unrepresented { left: BasisLabel, right: BasisLabel },
}

/// The variables of the generic pattern, in canonical order.
///
/// Every grading-legal slot gets a variable. Even times even slots are
/// left out when the even part is one-dimensional: there `e₁e₁ = λe₁` and
/// the identity at `(e₁, e₁, e₁)` forces `λ² = 0`.
pub fn pattern_vars(n0: usize, n1: usize) -> Vec<Var> {
    let mut out = Vec::new();
    for kind in [VarKind::A, VarKind::B, VarKind::C, VarKind::D] {
        let (ri, rj, rk) = match kind {
            VarKind::A | VarKind::B | VarKind::C => (n1, n1, n0),
            VarKind::D if n0 >= 2 => (n0, n0, n0),
            VarKind::D => continue,
        };
        for i in 1..=ri {
            for j in 1..=rj {
                for k in 1..=rk {
                    out.push(Var::new(kind, i, j, k));
                }
            }
        }
    }
    out.sort();
    out
}

/// Slot a variable occupies: `(left index, right index, output index)`
/// as 0-based positions in the ordering `e₁..e_n0, f₁..f_n1`.
fn slot(n0: usize, v: Var) -> (usize, usize, usize) {
    let (e, f) = (|x: usize| x - 1, |x: usize| n0 + x - 1);
    match v.kind {
        VarKind::A => (e(v.k), f(v.i), f(v.j)),
        VarKind::B => (f(v.i), e(v.k), f(v.j)),
        VarKind::C => (f(v.i), f(v.j), e(v.k)),
        VarKind::D => (e(v.i), e(v.j), e(v.k)),
    }
}

/// Multiplication table with polynomial coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolicAlgebra {
    n0: usize,
    n1: usize,
    /// `table[i][j]` lists `(output, coefficient)`.
    table: Vec<Vec<Vec<(usize, Poly)>>>,
}

impl SymbolicAlgebra {
    pub fn generic(n0: usize, n1: usize) -> Self {
        let d = n0 + n1;
        let mut table = vec![vec![Vec::new(); d]; d];
        for v in pattern_vars(n0, n1) {
            let (l, r, o) = slot(n0, v);
            table[l][r].push((o, Poly::var(v)));
        }
        SymbolicAlgebra { n0, n1, table }
    }

    pub fn dim(&self) -> usize {
        self.n0 + self.n1
    }

    pub fn label(&self, idx: usize) -> BasisLabel {
        if idx < self.n0 {
            BasisLabel::even(idx + 1)
        } else {
            BasisLabel::odd(idx - self.n0 + 1)
        }
    }

    fn parity(&self, idx: usize) -> Parity {
        if idx < self.n0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// Dense residual coordinates on basis `(i, j, k)`, expanded the same
    /// way as the concrete residual.
    pub fn basis_residual(&self, conv: SignConvention, i: usize, j: usize, k: usize) -> Vec<Poly> {
        let flips = conv.flips(self.parity(i), self.parity(j), self.parity(k));
        let mut out = vec![Poly::zero(); self.dim()];
        for (p, c) in &self.table[i][j] {
            for (q, c2) in &self.table[*p][k] {
                out[*q] = out[*q].add(&c.mul(c2));
            }
        }
        for (p, c) in &self.table[j][k] {
            for (q, c2) in &self.table[i][*p] {
                out[*q] = out[*q].sub(&c.mul(c2));
            }
        }
        for (p, c) in &self.table[k][j] {
            for (q, c2) in &self.table[i][*p] {
                let t = c.mul(c2);
                out[*q] = if flips { out[*q].add(&t) } else { out[*q].sub(&t) };
            }
        }
        out
    }
}

/// Nonzero equations from one basis triple, normalized and deduplicated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TripleEquations {
    pub triple: [BasisLabel; 3],
    pub equations: Vec<Poly>,
}

fn push_unique(list: &mut Vec<Poly>, p: Poly) {
    let p = p.normalized();
    if !p.is_zero() && !list.contains(&p) {
        list.push(p);
    }
}

/// Equations per ordered basis triple; triples are in lexicographic basis
/// order, and only triples with a nonzero equation are listed.
pub fn superidentity_equations(n0: usize, n1: usize, conv: SignConvention) -> Vec<TripleEquations> {
    let alg = SymbolicAlgebra::generic(n0, n1);
    let d = alg.dim();
    let mut out = Vec::new();
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                let mut equations = Vec::new();
                for p in alg.basis_residual(conv, i, j, k) {
                    push_unique(&mut equations, p);
                }
                if !equations.is_empty() {
                    out.push(TripleEquations {
                        triple: [alg.label(i), alg.label(j), alg.label(k)],
                        equations,
                    });
                }
            }
        }
    }
    out
}

/// The defining-sign system, deduplicated up to scalar, in triple order.
pub fn generic_superidentity_system(n0: usize, n1: usize) -> Vec<Poly> {
    generic_superidentity_system_with(n0, n1, SignConvention::SecondThird)
}

pub fn generic_superidentity_system_with(n0: usize, n1: usize, conv: SignConvention) -> Vec<Poly> {
    let mut out = Vec::new();
    for t in superidentity_equations(n0, n1, conv) {
        for p in t.equations {
            push_unique(&mut out, p);
        }
    }
    out
}

/// Concrete algebra for a pattern; unassigned variables are an error.
pub fn algebra_from_assignment(n0: usize, n1: usize, asg: &Assignment) -> Result<SuperAlgebra, SystemError> {
    let mut alg = SuperAlgebra::new(n0, n1);
    for v in pattern_vars(n0, n1) {
        let c = asg.get(&v).ok_or(PolyError::MissingVariable(v))?;
        if c.is_zero() {
            continue;
        }
        let (l, r, o) = slot(n0, v);
        alg.add_term(alg.label(l), alg.label(r), alg.label(o), c.clone())
            .expect("pattern slots respect the grading");
    }
    Ok(alg)
}

/// Reads every pattern variable off a concrete table.
pub fn assignment_from_algebra(alg: &SuperAlgebra) -> Result<Assignment, SystemError> {
    let (n0, n1) = (alg.dim_even(), alg.dim_odd());
    if n0 == 1 && !alg.product_terms(0, 0).is_empty() {
        return Err(SystemError::Unrepresented {
            left: alg.label(0),
            right: alg.label(0),
        });
    }
    let mut asg = Assignment::new();
    for v in pattern_vars(n0, n1) {
        let (l, r, o) = slot(n0, v);
        let c = alg
            .product_terms(l, r)
            .iter()
            .find(|(k, _)| *k == o)
            .map_or_else(Rational::zero, |(_, c)| c.clone());
        asg.insert(v, c);
    }
    Ok(asg)
}

/// Pattern assignment with entries `p/q`, `p ∈ −5..=5`, `q ∈ 1..=3`.
pub fn random_assignment<R: Rng>(n0: usize, n1: usize, rng: &mut R) -> Assignment {
    pattern_vars(n0, n1)
        .into_iter()
        .map(|v| (v, rat(rng.gen_range(-5..=5), rng.gen_range(1..=3))))
        .collect()
}

/// First place where the symbolic and the concrete residual disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossMismatch {
    pub sample: usize,
    pub triple: [BasisLabel; 3],
    pub coordinate: BasisLabel,
    pub symbolic: Rational,
    pub concrete: Rational,
}

/// Evaluates every symbolic residual coordinate at `count` seeded random
/// assignments and compares with the residual of the concrete algebra.
pub fn cross_validate(
    n0: usize,
    n1: usize,
    conv: SignConvention,
    seed: u64,
    count: usize,
) -> Result<Option<CrossMismatch>, SystemError> {
    let sym = SymbolicAlgebra::generic(n0, n1);
    let d = sym.dim();
    let mut residuals = Vec::with_capacity(d * d * d);
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                residuals.push(((i, j, k), sym.basis_residual(conv, i, j, k)));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for sample in 0..count {
        let asg = random_assignment(n0, n1, &mut rng);
        let alg = algebra_from_assignment(n0, n1, &asg)?;
        for ((i, j, k), polys) in &residuals {
            let concrete = alg.basis_residual(conv, *i, *j, *k);
            for (q, p) in polys.iter().enumerate() {
                let s = p.eval(&asg)?;
                if s != concrete[q] {
                    return Ok(Some(CrossMismatch {
                        sample,
                        triple: [sym.label(*i), sym.label(*j), sym.label(*k)],
                        coordinate: sym.label(q),
                        symbolic: s,
                        concrete: concrete[q].clone(),
                    }));
                }
            }
        }
    }
    Ok(None)
}

/// First polynomial that does not vanish at `asg`.
pub fn first_nonvanishing(system: &[Poly], asg: &Assignment) -> Result<Option<Poly>, PolyError> {
    for p in system {
        if !p.eval(asg)?.is_zero() {
            return Ok(Some(p.clone()));
        }
    }
    Ok(None)
}
