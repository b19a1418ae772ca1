//! Seeded generation of random square-free ideals.

use std::ops::RangeInclusive;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal};

/// The generator stream for item `index` of a run seeded with `seed`.
/// Items are independent of each other and of scheduling.
pub fn stream(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Draws between 1 and `max_generators` supports, each a uniform subset
/// whose size is uniform in `degrees`, and minimalizes. Zero and unit draws
/// are redrawn; the number of redraws is returned alongside the ideal.
pub fn random_squarefree_ideal<R: Rng>(
    rng: &mut R,
    num_vars: usize,
    max_generators: usize,
    degrees: RangeInclusive<usize>,
) -> Result<(MonomialIdeal, usize)> {
    if max_generators == 0 || degrees.is_empty() || *degrees.end() > num_vars {
        return Err(Error::Invalid(format!(
            "cannot draw up to {max_generators} generators of degree {degrees:?} in {num_vars} variables"
        )));
    }
    let mut redraws = 0;
    loop {
        let count = rng.gen_range(1..=max_generators);
        let gens = (0..count).map(|_| {
            let size = rng.gen_range(degrees.clone());
            Monomial::from_support(num_vars, sample(rng, num_vars, size))
        });
        let gens: Vec<Monomial> = gens.collect();
        let ideal = MonomialIdeal::minimalize(num_vars, gens)?;
        if ideal.is_zero() || ideal.is_unit() {
            redraws += 1;
            continue;
        }
        return Ok((ideal, redraws));
    }
}
