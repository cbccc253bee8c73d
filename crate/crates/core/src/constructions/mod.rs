//! Quotient to ordinary ADHM data, the block-triangular lifting solver, the
//! diagonal (Vandermonde) family and random generators.

mod corpus;
mod lift;
mod quotient;
mod sampling;
mod vandermonde;

pub use corpus::{read_corpus, write_corpus, CorpusHeader, CORPUS_FORMAT};
pub use lift::{assemble_lift, lift_solve, LiftAnsatz, LiftSolution};
pub use quotient::{complete_image_basis, quotient_adhm};
pub use sampling::{
    random_adhm, random_commuting_pair, random_gauge, random_lift, random_matrix, random_unimodular, rng_from_seed,
    sample_representations, sample_stable, search_obstructed, ObstructedInstance, ENTRY_BOUND,
};
pub use vandermonde::{vandermonde_rep, VandermondeParams};
