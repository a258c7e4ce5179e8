//! Polynomial form of the superidentity on generic structure constants.

mod families;
mod poly;
mod system;
mod transcribed;

pub use families::{verify_family, Family, FamilyCheck, FamilyError};
pub use poly::{Assignment, Monomial, Poly, PolyError, Var, VarKind};
pub use system::{
    algebra_from_assignment, assignment_from_algebra, cross_validate, first_nonvanishing, generic_superidentity_system,
    generic_superidentity_system_with, pattern_vars, random_assignment, superidentity_equations, CrossMismatch,
    SymbolicAlgebra, SystemError, TripleEquations,
};
pub use transcribed::{
    sign_outcome, system_matches_paper, transcribed_by_triple, transcribed_system, SignOutcome, SystemMatchReport,
    PRINTED_EQUATIONS, RECORDED_SIGN_OUTCOME,
};
