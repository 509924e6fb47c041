//! Brute-force oracles: Smirnov words, proper colorings, permutation
//! statistics and fundamental quasisymmetric functions.

mod graph;
mod perm;
mod quasisym;
mod words;

pub use graph::{chromatic_qsym, Digraph, GraphMode};
pub use perm::{drops, inverse, perm_stats, permutations, rises, validate_permutation, PermStats, Positions};
pub use quasisym::{f_ones_specialization, f_principal_specialization, fundamental_f};
pub use words::{
    brute_enumerator, smirnov_words, word_stats, ClassFilter, EndpointClass, SmirnovWords, Word, WordStats,
};
