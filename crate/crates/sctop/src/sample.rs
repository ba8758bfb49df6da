//! Seeded random finite spaces.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use sctop_core::{FinPoset, FinSpace};

pub const DEFAULT_SEED: u64 = 0x5c70_9e11;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random partial order on `n` points: each pair `i < j` of a random
/// linear extension is related with probability `density`.
pub fn random_poset(rng: &mut impl Rng, n: usize, density: f64) -> FinPoset {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut gens = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(density) {
                gens.push((perm[i], perm[j]));
            }
        }
    }
    FinPoset::from_generators(n, gens).expect("generators follow a linear order")
}

/// `count` Alexandroff spaces of size `n` with densities spread over `(0, 1)`.
pub fn random_spaces(rng: &mut impl Rng, n: usize, count: usize) -> Vec<FinSpace> {
    (0..count)
        .map(|k| {
            let density = (k as f64 + 0.5) / count as f64 * 0.6;
            FinSpace::alexandroff(&random_poset(rng, n, density))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeded_sampling_is_reproducible() {
        let a = random_spaces(&mut rng(7), 6, 5);
        let b = random_spaces(&mut rng(7), 6, 5);
        assert_eq!(a, b);
        assert!(a.iter().all(|x| x.size() == 6));
    }
}
