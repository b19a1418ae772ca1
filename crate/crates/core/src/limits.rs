/// Size guards shared by the exponential algorithms.
///
/// Every guarded routine aborts with [`Error::SizeGuard`](crate::Error::SizeGuard)
/// instead of exhausting memory or time.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of minimal primes a decomposition may produce.
    pub max_primes: usize,
    /// Maximum support size for minor enumeration (3^s assignments).
    pub max_minor_support: usize,
    /// Maximum number of minimal generators of a symbolic power.
    pub max_symbolic_gens: usize,
    /// Largest `up_to` accepted by threshold verification.
    pub max_threshold_power: u32,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_primes: 100_000, max_minor_support: 15, max_symbolic_gens: 2_000_000, max_threshold_power: 6 }
    }
}
