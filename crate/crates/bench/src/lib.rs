//! Deterministic input generators shared by the benchmark suite.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use lccp::oracle::{random_partial_word, GeneratorParams};
use lccp::{PartialWord, Symbol};

/// Random word with independently scattered holes.
pub fn scattered(n: usize, sigma: u32, hole_density: f64, seed: u64) -> PartialWord {
    random_partial_word(&GeneratorParams {
        n,
        sigma,
        hole_density,
        seed,
    })
}

/// Random solid word with exactly `mu` isolated holes spread evenly, so
/// the hole-block count is exactly `mu`. Needs `n >= 2 * (mu + 1)`.
pub fn evenly_holed(n: usize, sigma: u32, mu: usize, seed: u64) -> PartialWord {
    assert!(
        mu == 0 || n >= 2 * (mu + 1),
        "isolated holes need n >= 2*(mu+1)"
    );
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut symbols: Vec<Symbol> = (0..n)
        .map(|_| Symbol::Letter(u32::from(b'a') + rng.random_range(0..sigma)))
        .collect();
    for k in 1..=mu {
        symbols[k * n / (mu + 1)] = Symbol::Hole;
    }
    PartialWord::new(symbols).expect("n >= 1")
}

/// Fixed query workload: `count` uniform position pairs in 1..=n.
pub fn query_pairs(n: usize, count: usize, seed: u64) -> Vec<(usize, usize)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| (rng.random_range(1..=n), rng.random_range(1..=n)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn evenly_holed_block_count_is_exact() {
        for mu in [0, 1, 7, 50] {
            let word = evenly_holed(2_000, 4, mu, 9);
            assert_eq!(word.holes(), mu);
            assert_eq!(word.hole_blocks(), mu);
        }
    }

    #[test]
    fn generators_are_deterministic() {
        assert_eq!(scattered(500, 3, 0.2, 5), scattered(500, 3, 0.2, 5));
        assert_eq!(query_pairs(100, 64, 1), query_pairs(100, 64, 1));
    }
}
