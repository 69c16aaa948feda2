//! Instance generators shared by the benchmarks.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use symrev::gen::{random_chromosome, scramble_fast};
use symrev::Chromosome;

/// Solvable pair with about `n` tokens: `n / 4` repeats with three copies
/// each, the rest genes, scrambled by `n` random reversals.
pub fn scaling_pair(n: usize, seed: u64) -> (Chromosome, Chromosome) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let repeats = n / 4;
    let genes = n - 3 * repeats;
    let pi = random_chromosome(&mut rng, genes, &vec![3; repeats]);
    let tau = scramble_fast(&mut rng, &pi, n);
    (pi, tau)
}

/// Solvable dp=2 pair with `repeats` repeats and as many genes.
pub fn dp2_pair(repeats: usize, seed: u64) -> (Chromosome, Chromosome) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pi = random_chromosome(&mut rng, repeats, &vec![2; repeats]);
    let tau = scramble_fast(&mut rng, &pi, 2 * repeats);
    (pi, tau)
}
