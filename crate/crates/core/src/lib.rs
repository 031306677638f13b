//! Seaweed (biparabolic) subalgebras of simple Lie algebras: root systems,
//! cascades of strongly orthogonal roots, Chevalley structure constants and
//! the index computed as the generic corank of the coadjoint form.
//!
//! The index of `g_{S,T}` is compared against
//! `d_{S,T} = l + |K(S)| + |K(T)| - 2 dim E_{S,T}`, which bounds it from above.

pub mod cascade;
pub mod chevalley;
pub mod enumerate;
pub mod error;
pub mod linalg;
pub mod meander;
pub mod parabolic;
pub mod rootsys;
pub mod seaweed;

pub use cascade::{cascade, cascade_chain, dim_span_epsilons, kg, CascadeMember, CascadeSet};
pub use chevalley::{GBasis, SignConvention, StructureConstants};
pub use error::{Error, Result};
pub use meander::{compositions_from_subsets, meander_index_sl, CompositionPair, MeanderGraph};
pub use parabolic::parabolic_of_index;
pub use rootsys::{Root, RootId, RootSystem, SimpleType, Subset, TypeLetter};
pub use seaweed::{
    candidate_form, check_rank_bound, d_bound, generic_index, kernel_basis, phi_matrix, phi_rank,
    trial_forms, verify_pair, witness_quantities, LinearForm, PairReport, Seaweed, WitnessData,
};
