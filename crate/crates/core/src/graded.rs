//! Filtration quotients of the even and odd power chains, the associated
//! graded algebra and the naturally graded verdict.
//!
//! Layer `i` is `Z₀^i/Z₀^{i+1} ⊕ Z₁^i/Z₁^{i+1}`, so layer 1 holds the
//! generators. Each quotient is represented by the canonical rows of the
//! larger subspace whose pivots are not pivots of the smaller one.

use alloc::vec::Vec;

use thiserror::Error;

use crate::exactla::{Matrix, Rational, Subspace};
use crate::maps::{distinguish, transport, Distinction, GradedLinearMap};
use crate::series::power_sequence;
use crate::superalg::{BasisLabel, SuperAlgebra, SuperElement};

/// Even and odd flags `Z₀ ⊇ Z₀² ⊇ …` and `Z₁ ⊇ Z₀Z₁ ⊇ …`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Filtration {
    pub even: Vec<Subspace>,
    pub odd: Vec<Subspace>,
}

impl Filtration {
    pub fn even_dims(&self) -> Vec<usize> {
        self.even.iter().map(Subspace::dim).collect()
    }

    pub fn odd_dims(&self) -> Vec<usize> {
        self.odd.iter().map(Subspace::dim).collect()
    }

    fn terminates(&self) -> bool {
        [&self.even, &self.odd].iter().all(|c| c.last().is_some_and(Subspace::is_zero))
    }
}

pub fn filtration(alg: &SuperAlgebra) -> Filtration {
    let seq = power_sequence(alg);
    Filtration {
        even: seq.even_chain,
        odd: seq.odd_chain,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedLayers {
    /// `(even, odd)` dimension of each layer, starting at layer 1.
    pub layers: Vec<(usize, usize)>,
    /// Columns are the adapted basis vectors, layer by layer within each parity.
    pub adapted_basis: GradedLinearMap,
    /// Layer of each adapted basis vector, in basis order.
    pub basis_layer: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GradedError {
    /// Product of layers `i` and `j` reaches below level `i + j`.
    #[error("layers {i} and {j} multiply outside level {}: {left}{right} = {product}", i + j)]
    Violation {
        i: usize,
        j: usize,
        left: BasisLabel,
        right: BasisLabel,
        /// In adapted coordinates.
        product: SuperElement,
    },
    #[error("a power chain stabilizes at a nonzero subspace")]
    NotNilpotent,
}

/// Complement representatives of `chain[k+1]` in `chain[k]`, per layer.
fn layer_representatives(chain: &[Subspace]) -> Vec<Vec<Vec<Rational>>> {
    chain
        .windows(2)
        .map(|w| {
            let (big, small) = (&w[0], &w[1]);
            big.basis_vectors()
                .into_iter()
                .zip(big.pivots())
                .filter(|(_, p)| !small.pivots().contains(p))
                .map(|(v, _)| v)
                .collect()
        })
        .collect()
}

pub fn graded_layers(alg: &SuperAlgebra) -> Result<GradedLayers, GradedError> {
    let filt = filtration(alg);
    if !filt.terminates() {
        return Err(GradedError::NotNilpotent);
    }
    let (n, m) = (alg.dim_even(), alg.dim_odd());
    let even_reps = layer_representatives(&filt.even);
    let odd_reps = layer_representatives(&filt.odd);
    let count = even_reps.len().max(odd_reps.len());
    let layers: Vec<(usize, usize)> = (0..count)
        .map(|i| (even_reps.get(i).map_or(0, Vec::len), odd_reps.get(i).map_or(0, Vec::len)))
        .collect();
    let mut basis_layer = Vec::with_capacity(n + m);
    let mut even_cols = Vec::with_capacity(n);
    for (i, reps) in even_reps.iter().enumerate() {
        for v in reps {
            even_cols.push(v[..n].to_vec());
            basis_layer.push(i + 1);
        }
    }
    let mut odd_cols = Vec::with_capacity(m);
    for (i, reps) in odd_reps.iter().enumerate() {
        for v in reps {
            odd_cols.push(v[n..].to_vec());
            basis_layer.push(i + 1);
        }
    }
    let adapted_basis = GradedLinearMap::new(
        Matrix::from_columns(n, &even_cols).expect("n rows"),
        Matrix::from_columns(m, &odd_cols).expect("m rows"),
    )
    .expect("representatives form a basis");
    Ok(GradedLayers {
        layers,
        adapted_basis,
        basis_layer,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssociatedGraded {
    pub gr: SuperAlgebra,
    pub layers: GradedLayers,
    /// The input algebra written in the adapted basis.
    pub adapted: SuperAlgebra,
}

/// Builds gr(Z) on the adapted basis, keeping the layer `i + j` part of
/// each product of layers `i` and `j`.
pub fn associated_graded(alg: &SuperAlgebra) -> Result<AssociatedGraded, GradedError> {
    let layers = graded_layers(alg)?;
    let adapted = transport(alg, &layers.adapted_basis.inverse()).expect("dims match");
    let mut gr = SuperAlgebra::new(alg.dim_even(), alg.dim_odd());
    let d = alg.dim();
    for a in 0..d {
        for b in 0..d {
            let level = layers.basis_layer[a] + layers.basis_layer[b];
            let terms = adapted.product_terms(a, b);
            if terms.iter().any(|(k, _)| layers.basis_layer[*k] < level) {
                return Err(GradedError::Violation {
                    i: layers.basis_layer[a],
                    j: layers.basis_layer[b],
                    left: alg.label(a),
                    right: alg.label(b),
                    product: SuperElement::from_coords(alg.dim_even(), &adapted.basis_product(a, b)),
                });
            }
            for (k, c) in terms.iter().filter(|(k, _)| layers.basis_layer[*k] == level) {
                gr.add_term(alg.label(a), alg.label(b), alg.label(*k), c.clone())
                    .expect("graded products stay graded");
            }
        }
    }
    Ok(AssociatedGraded { gr, layers, adapted })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NaturalGrading {
    /// The table in the adapted basis already equals gr's table.
    Yes,
    No(NotNaturallyGraded),
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NotNaturallyGraded {
    Condition1(GradedError),
    /// Named battery invariant differs between the algebra and gr.
    Invariant(&'static str),
}

pub fn natural_grading_verdict(alg: &SuperAlgebra, seed: u64) -> NaturalGrading {
    let ag = match associated_graded(alg) {
        Ok(ag) => ag,
        Err(e @ GradedError::Violation { .. }) => return NaturalGrading::No(NotNaturallyGraded::Condition1(e)),
        Err(GradedError::NotNilpotent) => return NaturalGrading::Unknown,
    };
    if ag.adapted == ag.gr {
        return NaturalGrading::Yes;
    }
    match distinguish(alg, &ag.gr, seed).expect("same dimensions") {
        Distinction::Distinguishable(name) => NaturalGrading::No(NotNaturallyGraded::Invariant(name)),
        Distinction::Inconclusive => NaturalGrading::Unknown,
    }
}

/// Whether every product of basis vectors lands in a single layer sum, i.e.
/// the table is already graded by `basis_layer`.
pub fn is_graded_by(alg: &SuperAlgebra, basis_layer: &[usize]) -> bool {
    alg.nonzero_products().all(|(a, b, terms)| {
        terms
            .iter()
            .all(|(k, _)| basis_layer[*k] == basis_layer[a] + basis_layer[b])
    })
}
