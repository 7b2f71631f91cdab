//! Exact computational machinery behind effective finiteness results for
//! ternary recurrences of Cullen type expressed as sums of factorials and
//! smooth numbers.
//!
//! The crate is organised around five pillars:
//!
//! * [`padic`] — arbitrary-precision p-adic valuations, Legendre's factorial
//!   valuation, smooth-number factorization over a prime basis, and the
//!   specialised `nu2` box search over `3^a 5^b 7^c - 1`.
//! * [`recurrence`] — ternary recurrences whose characteristic cubic is
//!   `(X - alpha)^2 (X - beta)` with `1` among the roots: validation, exact
//!   closed form, evaluation, and structural growth bounds.
//! * [`lifting`] — solving `n * 2^n ≡ t' (mod p^k)` for odd primes `p` by
//!   digit-by-digit lifting, together with valuation ceilings over huge
//!   index ranges.
//! * [`bounds`] — directed-rounding evaluation of the effective constants
//!   (`c1..c7`, `n0`, `n1`, the linear-forms-in-logarithms bound, Pethő's
//!   fixed-point bound).
//! * [`search`] — the exhaustive desk-scale solver for
//!   `C_n = m1! + m2! + s` over `{2,3,5,7}`-units, degeneracy
//!   classification, and the block-parallel valuation scans.
//!
//! All integers cross module boundaries as arbitrary-precision values and
//! serialize as decimal strings in JSON.

pub mod bounds;
pub mod cache;
pub mod lifting;
pub mod padic;
pub mod real;
pub mod recurrence;
pub mod reference;
pub mod search;

/// Configure the global thread pool used by the block-parallel scans.
///
/// `jobs = 0` leaves the default (one thread per core). Returns an error if
/// the pool was already initialised with a different size.
pub fn configure_parallelism(jobs: usize) -> Result<(), String> {
    if jobs == 0 {
        return Ok(());
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build_global()
        .map_err(|e| e.to_string())
}
