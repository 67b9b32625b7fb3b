//! q-derangement numbers through the cycle normalisation `sigma -> sigma-bar`.

use super::Permutation;
use crate::algebra::{MultiPoly, Scalar};
use crate::error::{Error, Result};

/// Rotates every cycle so its second-smallest element is rightmost, orders
/// cycles by that element, and concatenates them.
pub fn derangement_cycle_word(sigma: &Permutation) -> Result<Permutation> {
    let mut keyed = Vec::new();
    for cycle in sigma.cycles() {
        if cycle.len() < 2 {
            return Err(Error::domain(format!("{sigma} has a fixed point at {}", cycle[0])));
        }
        let mut sorted = cycle.clone();
        sorted.sort_unstable();
        let second = sorted[1];
        let pos = cycle.iter().position(|&v| v == second).expect("element of its own cycle");
        let mut rotated = cycle.clone();
        rotated.rotate_left((pos + 1) % cycle.len());
        keyed.push((second, rotated));
    }
    keyed.sort_by_key(|(k, _)| *k);
    Permutation::new(keyed.into_iter().flat_map(|(_, c)| c).collect())
}

/// `d_{n,q} = sum over derangements of q^inv(sigma-bar)`, with `d_{0,q} = 1`.
pub fn q_derangement<S: Scalar>(n: usize) -> MultiPoly<S> {
    let mut out = MultiPoly::zero();
    for sigma in super::permutations(n).filter(|p| p.is_derangement()) {
        let bar = derangement_cycle_word(&sigma).expect("derangements have no fixed points");
        out.add_term([bar.stats().inv as u32, 0, 0, 0], S::one());
    }
    out
}
