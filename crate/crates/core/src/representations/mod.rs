//! The modules `π_{J,Γ,χ}` of the affine 0-Hecke algebra and their
//! characters.

mod character;
mod functors;
mod module;
mod parahoric;

pub use character::{
    char_formula, char_map, char_vector, class_pair, cocenter_trace, decompose, e_vanishing, EBasisTable, is_rigid,
    is_supersingular_pair, supersingular_bound, supersingular_evidence, Candidate, FormulaCase, FormulaValue,
    SupersingularEvidence, Verdict,
};
pub use functors::{m_j, GammaPart, LeviRestriction};
pub use module::{induce, induce_q, CosetModule, FDModule};
pub use parahoric::{all_pairs, canonical_pair, equivalent, precedes, Character, ParahoricDatum};

#[cfg(test)]
mod tests;
