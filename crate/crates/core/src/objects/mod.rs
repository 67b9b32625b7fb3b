//! Partitions, permutations, words and their statistics.

mod derangement;
mod partition;
mod permutation;
mod word;

pub use derangement::{derangement_cycle_word, q_derangement};
pub use partition::{partitions, partitions_filtered, Partition};
pub use permutation::{
    eulerian_polynomial, factorial, maj_des_polynomial, permutations, standardize, PermStats, Permutation,
    Permutations,
};
pub use word::{word_statistics_polynomial, words, Word};
