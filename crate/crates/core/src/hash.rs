//! Labeled state hashing for the tabu set.
//!
//! The hash of a coloring is the XOR over all edges of `mix(edge, color)`, so a
//! single recoloring updates it in O(1). It is a function of the labeled
//! coloring, not of its isomorphism class, and uses no per-process seed.

use crate::coloring::MultiColoring;

/// SplitMix64 finalizer: a fixed bijective avalanche on 64-bit words.
#[inline]
pub fn avalanche(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Contribution of `edge` (a [`crate::graph::pair_index`]) carrying `color`.
#[inline]
pub fn edge_term(edge: usize, color: u8) -> u64 {
    avalanche(((edge as u64) << 4 | color as u64).wrapping_add(0x9e37_79b9_7f4a_7c15))
}

/// Hash after recoloring `edge` from `old` to `new` in a state hashing to `hash`.
#[inline]
pub fn recolor(hash: u64, edge: usize, old: u8, new: u8) -> u64 {
    hash ^ edge_term(edge, old) ^ edge_term(edge, new)
}

pub fn state_hash(mc: &MultiColoring) -> u64 {
    mc.edge_colors()
        .iter()
        .enumerate()
        .fold(0, |h, (e, &c)| h ^ edge_term(e, c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::pair_index;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::collections::HashSet;

    #[test]
    fn incremental_matches_full() {
        let mut mc = MultiColoring::monochromatic(10, 3).unwrap();
        let mut h = state_hash(&mc);
        mc.set_color(2, 7, 3);
        h = recolor(h, pair_index(2, 7), 1, 3);
        assert_eq!(h, state_hash(&mc));
    }

    #[test]
    fn fixed_value_across_runs() {
        let mc = MultiColoring::monochromatic(4, 2).unwrap();
        // frozen: any change to the mixing constants changes stored traces
        assert_eq!(state_hash(&mc), 0x875e_4700_7249_4416);
        let mixed = MultiColoring::from_colors(4, 3, vec![1, 2, 3, 1, 2, 3]).unwrap();
        assert_eq!(state_hash(&mixed), 0xf4a1_1308_7ef7_fbbc);
        assert_eq!(avalanche(0), 0);
        // first output of the reference SplitMix64 generator seeded with 0
        assert_eq!(avalanche(0x9e37_79b9_7f4a_7c15), 0xe220_a839_7b1d_cdaf);
    }

    #[test]
    fn single_edge_neighbours_do_not_collide() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut collisions = 0;
        for _ in 0..10_000 {
            let n = rng.random_range(3..20);
            let r = rng.random_range(2..5);
            let colors: Vec<u8> = (0..n * (n - 1) / 2)
                .map(|_| rng.random_range(1..=r as u8))
                .collect();
            let a = MultiColoring::from_colors(n, r, colors).unwrap();
            let mut b = a.clone();
            let e = rng.random_range(0..a.edge_count());
            let old = a.color_at(e);
            let new = (old % r as u8) + 1;
            let (u, v) = crate::graph::pair_from_index(e);
            b.set_color(u, v, new);
            if state_hash(&a) == state_hash(&b) {
                collisions += 1;
            }
        }
        assert_eq!(collisions, 0);
    }

    #[test]
    fn distinct_random_states_hash_apart() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut seen = HashSet::new();
        for _ in 0..5000 {
            let colors: Vec<u8> = (0..45).map(|_| rng.random_range(1..=2)).collect();
            let mc = MultiColoring::from_colors(10, 2, colors).unwrap();
            seen.insert((state_hash(&mc), mc));
        }
        let hashes: HashSet<u64> = seen.iter().map(|(h, _)| *h).collect();
        assert_eq!(hashes.len(), seen.len());
    }
}
