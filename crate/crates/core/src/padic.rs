//! p-adic valuations, Legendre's factorial valuation, smooth factorization
//! over a fixed prime basis, and the `nu2` box search over `3^a 5^b 7^c - 1`.
//!
//! Valuations are exact; `vp(0, p)` is the distinguished value
//! [`Valuation::Infinite`]. Negative inputs are valued as their absolute
//! value, so `vp(s - 1) = vp(1 - s)` holds by construction.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PadicError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("input must be a positive integer")]
    NonPositive,
    #[error("|y| must be at least 2")]
    InputTooSmall,
    #[error("basis must be a nonempty strictly increasing list of primes")]
    InvalidBasis,
    #[error("search box must contain a point other than the origin")]
    EmptyBox,
    #[error("trial division budget of {0} candidate divisors exhausted; input has a large prime cofactor")]
    DivisorBudget(u64),
    #[error("valuation exceeds the escalated modulus window")]
    ValuationOverflow,
}

/// A p-adic valuation: finite exponent, or infinite exactly for input 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Valuation {
    Finite(u64),
    Infinite,
}

impl Valuation {
    pub fn finite(self) -> Option<u64> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinite => None,
        }
    }
}

impl std::fmt::Display for Valuation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => write!(f, "infinity"),
        }
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller–Rabin, valid for all `n < 2^64`.
///
/// The witness set {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37} is known to
/// be deterministic up to 3.3 * 10^24. Basis primes beyond `u64` are never
/// needed and are rejected upstream.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    let d = n - 1;
    let s = d.trailing_zeros();
    let d = d >> s;
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn require_prime(p: u64) -> Result<(), PadicError> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(PadicError::NotPrime(p))
    }
}

/// The p-adic valuation of `n`, with `vp(0) = Infinite` and
/// `vp(-n) = vp(n)`.
pub fn vp(n: &BigInt, p: u64) -> Result<Valuation, PadicError> {
    require_prime(p)?;
    if n.is_zero() {
        return Ok(Valuation::Infinite);
    }
    let mut m = n.magnitude().clone();
    let p_big = BigUint::from(p);
    let mut v = 0u64;
    loop {
        let (q, r) = num_integer::Integer::div_rem(&m, &p_big);
        if !r.is_zero() {
            return Ok(Valuation::Finite(v));
        }
        m = q;
        v += 1;
    }
}

/// Valuation of a `u64`, for the scan kernels. `0` maps to `Infinite`.
pub fn vp_u64(mut n: u64, p: u64) -> Valuation {
    if n == 0 {
        return Valuation::Infinite;
    }
    let mut v = 0;
    while n.is_multiple_of(p) {
        n /= p;
        v += 1;
    }
    Valuation::Finite(v)
}

/// `vp(a!)` by Legendre's formula, as the finite sum of `floor(a / p^i)`.
///
/// The factorial itself is never materialised.
pub fn factorial_valuation(a: u64, p: u64) -> Result<u64, PadicError> {
    require_prime(p)?;
    if a == 0 {
        return Err(PadicError::NonPositive);
    }
    let mut sum = 0u64;
    let mut pk = p;
    loop {
        sum += a / pk;
        match pk.checked_mul(p) {
            Some(next) if next <= a => pk = next,
            _ => break,
        }
    }
    Ok(sum)
}

/// A finite, strictly increasing set of primes; the paper-facing `P` is the
/// largest entry.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SmoothnessBasis {
    primes: Vec<u64>,
}

impl SmoothnessBasis {
    pub fn new(primes: Vec<u64>) -> Result<Self, PadicError> {
        if primes.is_empty() {
            return Err(PadicError::InvalidBasis);
        }
        for w in primes.windows(2) {
            if w[0] >= w[1] {
                return Err(PadicError::InvalidBasis);
            }
        }
        for &p in &primes {
            require_prime(p)?;
        }
        Ok(SmoothnessBasis { primes })
    }

    /// The standard `{2, 3, 5, 7}` basis.
    pub fn standard() -> Self {
        SmoothnessBasis::new(vec![2, 3, 5, 7]).expect("2,3,5,7 are prime")
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    pub fn largest_prime(&self) -> u64 {
        *self.primes.last().expect("basis is nonempty")
    }
}

/// The basis part of a factorization: one exponent per basis prime plus a
/// cofactor coprime to the whole basis. The input is a smooth number (an
/// S-unit) exactly when the cofactor is 1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisFactorization {
    pub exponents: Vec<u64>,
    #[serde(with = "crate::cache::biguint_string")]
    pub cofactor: BigUint,
}

impl BasisFactorization {
    pub fn is_smooth(&self) -> bool {
        self.cofactor.is_one()
    }

    /// Reconstructs the factored integer; used to assert the round-trip
    /// invariant.
    pub fn reconstruct(&self, basis: &SmoothnessBasis) -> BigUint {
        let mut acc = self.cofactor.clone();
        for (&p, &e) in basis.primes().iter().zip(&self.exponents) {
            for _ in 0..e {
                acc *= p;
            }
        }
        acc
    }
}

/// Factors out every basis prime from `n >= 1`.
pub fn factor_over_basis(
    n: &BigInt,
    basis: &SmoothnessBasis,
) -> Result<BasisFactorization, PadicError> {
    if !n.is_positive() {
        return Err(PadicError::NonPositive);
    }
    let mut m = n.magnitude().clone();
    let mut exponents = Vec::with_capacity(basis.primes().len());
    for &p in basis.primes() {
        let p_big = BigUint::from(p);
        let mut e = 0u64;
        loop {
            let (q, r) = num_integer::Integer::div_rem(&m, &p_big);
            if !r.is_zero() {
                break;
            }
            m = q;
            e += 1;
        }
        exponents.push(e);
    }
    Ok(BasisFactorization {
        exponents,
        cofactor: m,
    })
}

/// Default budget for [`greatest_prime_factor`]: enough for any input whose
/// second-largest prime factor is below ~2 * 10^7. Larger inputs fail with a
/// clear error instead of running without bound.
pub const TRIAL_DIVISION_BUDGET: u64 = 20_000_000;

/// The greatest prime dividing `y`, `|y| >= 2`, by trial division.
///
/// Intended for desk-scale inputs (fewer than ~40 digits); inputs with a
/// large composite cofactor exhaust the divisor budget and error out.
pub fn greatest_prime_factor(y: &BigInt) -> Result<BigInt, PadicError> {
    let mut m = y.magnitude().clone();
    if m < BigUint::from(2u32) {
        return Err(PadicError::InputTooSmall);
    }
    let mut largest = BigUint::zero();
    let two = BigUint::from(2u32);
    while (&m % &two).is_zero() {
        m /= &two;
        largest = two.clone();
    }
    let mut d = 3u64;
    let mut steps = 0u64;
    while !m.is_one() {
        // A u64 remainder is prime once trial division passes its square root.
        if let Some(small) = m.to_u64() {
            if is_prime(small) {
                largest = BigUint::from(small);
                break;
            }
        }
        let d_big = BigUint::from(d);
        if &d_big * &d_big > m {
            largest = m.clone();
            break;
        }
        while (&m % &d_big).is_zero() {
            m /= &d_big;
            largest = d_big.clone();
        }
        d += 2;
        steps += 1;
        if steps > TRIAL_DIVISION_BUDGET {
            return Err(PadicError::DivisorBudget(TRIAL_DIVISION_BUDGET));
        }
    }
    Ok(BigInt::from(largest))
}

/// Result of the `nu2` box search: the exact maximum of
/// `nu_2(3^a 5^b 7^c - 1)` over the box minus the origin, with the
/// lexicographically smallest attaining triple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoxMaximum {
    pub max: u64,
    pub witness: (u64, u64, u64),
}

/// `nu_2` exceeding this in the 2^64 window triggers a 2^192 recomputation.
/// The threshold leaves 16 bits of headroom over the expected maximum of 20.
const NU2_ESCALATION: u32 = 48;

fn nu2_cell_escalated(a: u64, b: u64, c: u64) -> Result<u64, PadicError> {
    let modulus = BigUint::one() << 192;
    let v = BigUint::from(3u32).modpow(&BigUint::from(a), &modulus)
        * BigUint::from(5u32).modpow(&BigUint::from(b), &modulus)
        * BigUint::from(7u32).modpow(&BigUint::from(c), &modulus);
    let x = (v - 1u32) % &modulus;
    if x.is_zero() {
        return Err(PadicError::ValuationOverflow);
    }
    Ok(x.trailing_zeros().expect("nonzero"))
}

fn merge_box(
    lhs: Result<Option<BoxMaximum>, PadicError>,
    rhs: Result<Option<BoxMaximum>, PadicError>,
) -> Result<Option<BoxMaximum>, PadicError> {
    // Ties break toward the lexicographically smallest witness so parallel
    // and serial runs agree.
    Ok(match (lhs?, rhs?) {
        (Some(l), Some(r)) => {
            if r.max > l.max || (r.max == l.max && r.witness < l.witness) {
                Some(r)
            } else {
                Some(l)
            }
        }
        (l, r) => l.or(r),
    })
}

/// Exact maximum of `nu_2(3^a 5^b 7^c - 1)` over `0 <= a <= a_max`,
/// `0 <= b <= b_max`, `0 <= c <= c_max`, excluding `(0, 0, 0)`.
///
/// The product is maintained modulo 2^64 along a lexicographic walk; any
/// observed valuation reaching 48 is recomputed modulo 2^192. Partitioned
/// over the `a`-axis with an associative `(max, witness)` merge.
pub fn nu2_max_over_box(a_max: u64, b_max: u64, c_max: u64) -> Result<BoxMaximum, PadicError> {
    if a_max == 0 && b_max == 0 && c_max == 0 {
        return Err(PadicError::EmptyBox);
    }
    (0..=a_max)
        .into_par_iter()
        .map(|a| {
            let mut best: Option<BoxMaximum> = None;
            let pa = 3u64.wrapping_pow(a as u32);
            let mut pab = pa;
            for b in 0..=b_max {
                let mut v = pab;
                for c in 0..=c_max {
                    if a != 0 || b != 0 || c != 0 {
                        let x = v.wrapping_sub(1);
                        let t = if x == 0 { 64 } else { x.trailing_zeros() };
                        let nu = if t >= NU2_ESCALATION {
                            nu2_cell_escalated(a, b, c)?
                        } else {
                            t as u64
                        };
                        if best.is_none_or(|m| nu > m.max) {
                            best = Some(BoxMaximum {
                                max: nu,
                                witness: (a, b, c),
                            });
                        }
                    }
                    v = v.wrapping_mul(7);
                }
                pab = pab.wrapping_mul(5);
            }
            Ok(best)
        })
        .reduce(|| Ok(None), merge_box)?
        .ok_or(PadicError::EmptyBox)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use proptest::prelude::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn vpn(n: i64, p: u64) -> Valuation {
        vp(&BigInt::from(n), p).unwrap()
    }

    #[test]
    fn vp_powers_and_zero() {
        assert_eq!(vpn(8, 2), Valuation::Finite(3));
        assert_eq!(vpn(0, 5), Valuation::Infinite);
        assert_eq!(vpn(2025, 3), Valuation::Finite(4));
        assert_eq!(vpn(2025, 5), Valuation::Finite(2));
        assert_eq!(vpn(-2025, 3), Valuation::Finite(4));
        assert_eq!(vpn(7, 3), Valuation::Finite(0));
    }

    #[test]
    fn vp_rejects_composite_modulus() {
        assert_eq!(vp(&BigInt::from(10), 4), Err(PadicError::NotPrime(4)));
        assert_eq!(vp(&BigInt::from(10), 1), Err(PadicError::NotPrime(1)));
    }

    #[test]
    fn valuation_ordering() {
        assert!(Valuation::Finite(3) < Valuation::Finite(4));
        assert!(Valuation::Finite(u64::MAX) < Valuation::Infinite);
    }

    #[test]
    fn legendre_reference_values() {
        assert_eq!(factorial_valuation(500, 3).unwrap(), 247);
        assert_eq!(factorial_valuation(500, 2).unwrap(), 494);
        assert_eq!(factorial_valuation(500, 5).unwrap(), 124);
        assert_eq!(factorial_valuation(500, 7).unwrap(), 82);
        // 49! has 2-adic valuation 46 (the reference table lists 47; the
        // downstream argument only needs it positive).
        assert_eq!(factorial_valuation(49, 2).unwrap(), 46);
        assert_eq!(factorial_valuation(56, 3).unwrap(), 26);
        assert_eq!(factorial_valuation(10_000, 2).unwrap(), 9995);
        assert_eq!(factorial_valuation(560, 3).unwrap(), 276);
        assert_eq!(factorial_valuation(560, 5).unwrap(), 138);
        assert_eq!(factorial_valuation(560, 7).unwrap(), 92);
        assert_eq!(factorial_valuation(24, 2).unwrap(), 22);
    }

    #[test]
    fn legendre_matches_explicit_factorial() {
        for p in [2u64, 3, 5, 7] {
            let mut fact = BigInt::one();
            for a in 1..=200u64 {
                fact *= a;
                let direct = vp(&fact, p).unwrap().finite().unwrap();
                assert_eq!(factorial_valuation(a, p).unwrap(), direct, "a={a} p={p}");
            }
        }
    }

    #[test]
    fn factorial_valuation_lower_bound() {
        // nu_p(a!) > a / (2p) whenever a >= p, tested as 2p * nu > a.
        for p in (2..=97).filter(|&p| is_prime(p)) {
            for a in p..=5000 {
                let v = factorial_valuation(a, p).unwrap();
                assert!(2 * p * v > a, "a={a} p={p} v={v}");
            }
        }
    }

    #[test]
    fn factor_over_basis_examples() {
        let basis = SmoothnessBasis::standard();
        let f = factor_over_basis(&BigInt::from(2025), &basis).unwrap();
        assert_eq!(f.exponents, vec![0, 4, 2, 0]);
        assert!(f.is_smooth());

        let f = factor_over_basis(&BigInt::from(1), &basis).unwrap();
        assert_eq!(f.exponents, vec![0, 0, 0, 0]);
        assert!(f.is_smooth());

        let f = factor_over_basis(&BigInt::from(2049), &basis).unwrap();
        assert_eq!(f.exponents, vec![0, 1, 0, 0]);
        assert_eq!(f.cofactor, BigUint::from(683u32));

        assert_eq!(
            factor_over_basis(&BigInt::from(0), &basis),
            Err(PadicError::NonPositive)
        );
    }

    #[test]
    fn factor_over_basis_round_trips() {
        let basis = SmoothnessBasis::standard();
        let mut rng = StdRng::seed_from_u64(0x5eed);
        for _ in 0..10_000 {
            let bytes: [u8; 32] = rng.gen();
            let n = BigUint::from_bytes_le(&bytes) + 1u32;
            let f = factor_over_basis(&BigInt::from(n.clone()), &basis).unwrap();
            assert_eq!(f.reconstruct(&basis), n);
            for (&p, &_e) in basis.primes().iter().zip(&f.exponents) {
                assert!(!(&f.cofactor % p).is_zero() || f.cofactor.is_one());
            }
        }
    }

    #[test]
    fn greatest_prime_factor_examples() {
        assert_eq!(
            greatest_prime_factor(&BigInt::from(2049)).unwrap(),
            BigInt::from(683)
        );
        assert_eq!(
            greatest_prime_factor(&BigInt::from(8)).unwrap(),
            BigInt::from(2)
        );
        assert_eq!(
            greatest_prime_factor(&BigInt::from(2025)).unwrap(),
            BigInt::from(5)
        );
        assert_eq!(
            greatest_prime_factor(&BigInt::from(-2049)).unwrap(),
            BigInt::from(683)
        );
        assert_eq!(
            greatest_prime_factor(&BigInt::from(1)),
            Err(PadicError::InputTooSmall)
        );
        assert_eq!(
            greatest_prime_factor(&BigInt::from(-1)),
            Err(PadicError::InputTooSmall)
        );
    }

    #[test]
    fn basis_validation() {
        assert!(SmoothnessBasis::new(vec![]).is_err());
        assert!(SmoothnessBasis::new(vec![2, 2]).is_err());
        assert!(SmoothnessBasis::new(vec![3, 2]).is_err());
        assert!(SmoothnessBasis::new(vec![2, 3, 4]).is_err());
        let b = SmoothnessBasis::new(vec![2, 3, 5, 7, 11]).unwrap();
        assert_eq!(b.largest_prime(), 11);
    }

    #[test]
    fn nu2_box_small_cases() {
        assert_eq!(
            nu2_max_over_box(2, 0, 0).unwrap(),
            BoxMaximum {
                max: 3,
                witness: (2, 0, 0)
            }
        );
        assert_eq!(
            nu2_max_over_box(1, 1, 1).unwrap(),
            BoxMaximum {
                max: 3,
                witness: (1, 1, 1)
            }
        );
        assert_eq!(nu2_max_over_box(0, 0, 0), Err(PadicError::EmptyBox));
    }

    #[test]
    fn nu2_box_matches_big_integer_oracle() {
        // Full-box oracle at small scale: direct big-integer subtraction.
        let mut best = BoxMaximum {
            max: 0,
            witness: (u64::MAX, 0, 0),
        };
        for a in 0..=10u64 {
            for b in 0..=10u64 {
                for c in 0..=10u64 {
                    if a == 0 && b == 0 && c == 0 {
                        continue;
                    }
                    let v = BigUint::from(3u32).pow(a as u32)
                        * BigUint::from(5u32).pow(b as u32)
                        * BigUint::from(7u32).pow(c as u32)
                        - 1u32;
                    let nu = v.trailing_zeros().unwrap();
                    if nu > best.max {
                        best = BoxMaximum {
                            max: nu,
                            witness: (a, b, c),
                        };
                    }
                }
            }
        }
        assert_eq!(nu2_max_over_box(10, 10, 10).unwrap(), best);
        assert_eq!(best.max, 14);
        assert_eq!(best.witness, (5, 7, 1));
    }

    #[test]
    fn prime_test_agrees_with_sieve() {
        let mut sieve = vec![true; 10_000];
        sieve[0] = false;
        sieve[1] = false;
        for i in 2..10_000usize {
            if sieve[i] {
                for j in (i * i..10_000).step_by(i) {
                    sieve[j] = false;
                }
            }
        }
        for (n, &expected) in sieve.iter().enumerate() {
            assert_eq!(is_prime(n as u64), expected, "n={n}");
        }
        assert!(is_prime(2_147_483_647));
        assert!(!is_prime(u64::MAX));
        assert!(is_prime(18_446_744_073_709_551_557)); // largest u64 prime
    }

    proptest! {
        // 10^3 pairs per prime in {2,3,5,7,11,13}.
        #![proptest_config(ProptestConfig::with_cases(6000))]

        #[test]
        fn vp_is_multiplicative(a in 1i64..=1_000_000, b in 1i64..=1_000_000,
                                idx in 0usize..6) {
            let p = [2u64, 3, 5, 7, 11, 13][idx];
            let va = vpn(a, p).finite().unwrap();
            let vb = vpn(b, p).finite().unwrap();
            let vab = vp(&(BigInt::from(a) * b), p).unwrap().finite().unwrap();
            prop_assert_eq!(vab, va + vb);
        }

        #[test]
        fn vp_is_ultrametric(a in 1i64..=1_000_000, b in 1i64..=1_000_000,
                             idx in 0usize..6) {
            let p = [2u64, 3, 5, 7, 11, 13][idx];
            let va = vpn(a, p);
            let vb = vpn(b, p);
            let vsum = vp(&BigInt::from(a + b), p).unwrap();
            prop_assert!(vsum >= va.min(vb));
            if va != vb {
                prop_assert_eq!(vsum, va.min(vb));
            }
        }
    }
}
