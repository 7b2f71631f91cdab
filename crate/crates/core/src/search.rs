//! Exhaustive desk-scale solving of `C_n = m1! + m2! + s` over smooth `s`,
//! the degeneracy classifier, and the valuation scans driving the case
//! analysis.
//!
//! Scans are partitioned into contiguous blocks of 2^14 indices and merged
//! in block order, so parallel and serial runs produce identical output.

use crate::padic::{vp_u64, BasisFactorization, SmoothnessBasis, Valuation};
use crate::recurrence::{ClosedForm, TernaryRecurrence};
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SearchError {
    #[error("empty scan range")]
    EmptyRange,
    #[error("valuation at n = {n} still exceeds the cap after two escalations (cap {cap})")]
    CapEscalationFailed { n: u64, cap: u32 },
    #[error("range [{0}, {1}] must lie within [201, 236898]")]
    Nu11RangeInvalid(u64, u64),
    #[error("desk-scale check capped at n <= 100000, got {0}")]
    WoodallRangeTooLarge(u64),
}

/// `C_n = n 2^n + 1`.
pub fn cullen_value(n: u64) -> BigInt {
    BigInt::from(n) * (BigInt::one() << n) + 1
}

/// Which closed-form component a degenerate subsum matches.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum ClosedFormPart {
    /// `(a n + c) alpha^n`
    DoubleRootTerm,
    /// `b beta^n`
    SimpleRootTerm,
}

/// A contiguous factorial subsum equal to a closed-form component.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegeneracyWitness {
    /// 1-based inclusive index range into the `m` list.
    pub range: (usize, usize),
    pub matched: ClosedFormPart,
}

/// One solution tuple `(n, m1 >= m2 >= ... >= mk, s)` with the basis
/// factorization of `s` and its degeneracy tag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub n: u64,
    pub ms: Vec<u64>,
    pub s: BigInt,
    pub s_factorization: BasisFactorization,
    pub degenerate: bool,
    pub witness: Option<DegeneracyWitness>,
}

impl Solution {
    /// Wire format: integers as decimal strings, exponents keyed by prime.
    pub fn to_json(&self, basis: &SmoothnessBasis) -> serde_json::Value {
        let mut factor_map = serde_json::Map::new();
        for (&p, &e) in basis.primes().iter().zip(&self.s_factorization.exponents) {
            factor_map.insert(p.to_string(), serde_json::Value::String(e.to_string()));
        }
        serde_json::json!({
            "n": self.n.to_string(),
            "m": self.ms.iter().map(|m| m.to_string()).collect::<Vec<_>>(),
            "s": self.s.to_string(),
            "sFactorization": factor_map,
            "degenerate": self.degenerate,
            "witness": self.witness.map(|w| serde_json::json!({
                "range": [w.range.0, w.range.1],
                "matched": match w.matched {
                    ClosedFormPart::DoubleRootTerm => "doubleRootTerm",
                    ClosedFormPart::SimpleRootTerm => "simpleRootTerm",
                },
            })),
        })
    }
}

/// Pruning predicate: a solution with `m1 >= 6` must have `n > m1`
/// (from `n 2^n > m1! > m1 2^{m1}`). Below 6 the lemma does not apply and
/// the predicate never prunes.
pub fn check_inequality_n_gt_m1(n: u64, m1: u64) -> bool {
    m1 < 6 || n > m1
}

/// Exact equality of a factorial subsum against each closed-form component,
/// over every contiguous index range. No floating point anywhere: both
/// sides are exact rationals.
pub fn classify_degenerate(
    n: u64,
    terms: &[(i64, u64)],
    factorials: &[BigInt],
    cf: &ClosedForm,
) -> Option<DegeneracyWitness> {
    let double_root = cf.double_root_term(n).expect("desk-scale index");
    let simple_root = cf.simple_root_term(n).expect("desk-scale index");
    for j1 in 0..terms.len() {
        let mut subsum = BigInt::zero();
        for (j2, &(coeff, m)) in terms.iter().enumerate().skip(j1) {
            subsum += BigInt::from(coeff) * &factorials[m as usize];
            let subsum_q = BigRational::from(subsum.clone());
            let matched = if subsum_q == double_root {
                Some(ClosedFormPart::DoubleRootTerm)
            } else if subsum_q == simple_root {
                Some(ClosedFormPart::SimpleRootTerm)
            } else {
                None
            };
            if let Some(matched) = matched {
                return Some(DegeneracyWitness {
                    range: (j1 + 1, j2 + 1),
                    matched,
                });
            }
        }
    }
    None
}

/// Every `(n, m1, m2, s)` with `n <= n_max`, `m1_max >= m1 >= m2 >= 1`,
/// `s = C_n - m1! - m2! >= 1` smooth over `basis`, tagged by the degeneracy
/// classifier and sorted by `(n, m1, m2)`.
pub fn solve_cullen(
    n_max: u64,
    m1_max: u64,
    basis: &SmoothnessBasis,
    rec: &TernaryRecurrence,
) -> Vec<Solution> {
    let mut factorials = vec![BigInt::one()];
    for m in 1..=m1_max {
        let next = factorials.last().unwrap() * m;
        factorials.push(next);
    }
    let cf = rec.closed_form();

    let mut out = Vec::new();
    for n in 1..=n_max {
        let c = cullen_value(n);
        let budget = &c - 2; // m1! + m2! <= C_n - 1 and m2! >= 1
        for m1 in 1..=m1_max {
            if !check_inequality_n_gt_m1(n, m1) {
                break;
            }
            let f1 = &factorials[m1 as usize];
            if *f1 > budget {
                break;
            }
            for m2 in 1..=m1 {
                let s = &c - f1 - &factorials[m2 as usize];
                if s < BigInt::one() {
                    break;
                }
                let f = crate::padic::factor_over_basis(&s, basis).expect("s >= 1");
                if !f.is_smooth() {
                    continue;
                }
                // Re-verify by independent evaluation before emitting.
                assert_eq!(rec.eval(n) - f1 - &factorials[m2 as usize], s);
                let witness = classify_degenerate(n, &[(1, m1), (1, m2)], &factorials, cf);
                out.push(Solution {
                    n,
                    ms: vec![m1, m2],
                    s,
                    s_factorization: f,
                    degenerate: witness.is_some(),
                    witness,
                });
            }
        }
    }
    out
}

const BLOCK: u64 = 1 << 14;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanOutcome {
    /// Maximum finite valuation over the range.
    pub max: Valuation,
    /// All indices attaining the maximum.
    pub argmax: Vec<u64>,
    /// Indices with valuation at or above the queried threshold.
    pub over_threshold: Vec<u64>,
    /// Indices where `C_n - t(n)` is exactly zero (infinite valuation).
    pub zeros: Vec<u64>,
}

struct BlockResult {
    max: u64,
    argmax: Vec<u64>,
    over: Vec<u64>,
    capped: Vec<u64>,
}

/// Maximum of `nu_p(C_n - t(n))` over `n_lo <= n <= n_hi`, by modular
/// evaluation at `p^(v_cap + 1)`; indices exceeding the cap escalate to a
/// doubled then quadrupled cap before failing loudly. Zero values are
/// reported separately as infinite.
pub fn scan_valuation<F>(
    p: u64,
    t_builder: F,
    n_lo: u64,
    n_hi: u64,
    v_cap: u32,
    threshold: Option<u64>,
) -> Result<ScanOutcome, SearchError>
where
    F: Fn(u64) -> BigInt + Sync,
{
    if n_lo > n_hi {
        return Err(SearchError::EmptyRange);
    }
    let modulus = BigUint::from(p).pow(v_cap + 1);
    let small = modulus.to_u64();

    let blocks: Vec<(u64, u64)> = split_blocks(n_lo, n_hi);
    let partials: Vec<BlockResult> = blocks
        .par_iter()
        .map(|&(lo, hi)| {
            let mut r = BlockResult {
                max: 0,
                argmax: Vec::new(),
                over: Vec::new(),
                capped: Vec::new(),
            };
            match small {
                Some(m) => scan_block_u64(p, &t_builder, lo, hi, m, threshold, &mut r),
                None => scan_block_big(p, &t_builder, lo, hi, &modulus, threshold, &mut r),
            }
            r
        })
        .collect();

    let mut max = 0u64;
    let mut argmax = Vec::new();
    let mut over = Vec::new();
    let mut capped = Vec::new();
    for r in partials {
        if r.max > max {
            max = r.max;
            argmax = r.argmax;
        } else if r.max == max {
            argmax.extend(r.argmax);
        }
        over.extend(r.over);
        capped.extend(r.capped);
    }

    // Escalation pass: doubled then quadrupled cap, then the exact value.
    let mut zeros = Vec::new();
    for n in capped {
        let value = cullen_value(n) - t_builder(n);
        if value.is_zero() {
            zeros.push(n);
            continue;
        }
        let mut resolved = None;
        for factor in [2u32, 4] {
            let cap = v_cap * factor;
            let m = BigUint::from(p).pow(cap + 1);
            let r = value.mod_floor(&BigInt::from(m)).magnitude().clone();
            if !r.is_zero() {
                resolved = Some(big_valuation(&r, p));
                break;
            }
        }
        let nu = resolved.ok_or(SearchError::CapEscalationFailed { n, cap: v_cap })?;
        if nu > max {
            max = nu;
            argmax = vec![n];
        } else if nu == max {
            argmax.push(n);
        }
        if threshold.is_some_and(|t| nu >= t) {
            over.push(n);
        }
    }
    argmax.sort_unstable();
    over.sort_unstable();
    zeros.sort_unstable();
    Ok(ScanOutcome {
        max: Valuation::Finite(max),
        argmax,
        over_threshold: over,
        zeros,
    })
}

fn split_blocks(lo: u64, hi: u64) -> Vec<(u64, u64)> {
    let mut blocks = Vec::new();
    let mut start = lo;
    while start <= hi {
        let end = hi.min(start + BLOCK - 1);
        blocks.push((start, end));
        start = end + 1;
    }
    blocks
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn scan_block_u64<F: Fn(u64) -> BigInt>(
    p: u64,
    t_builder: &F,
    lo: u64,
    hi: u64,
    m: u64,
    threshold: Option<u64>,
    r: &mut BlockResult,
) {
    let m_big = BigInt::from(m);
    let mut pow2 = BigUint::from(2u32)
        .modpow(&BigUint::from(lo), &BigUint::from(m))
        .to_u64()
        .expect("fits");
    for n in lo..=hi {
        let t_mod = t_builder(n).mod_floor(&m_big).to_u64().expect("fits");
        let c_mod = (mul_mod(n % m, pow2, m) + 1) % m;
        let val = (c_mod + m - t_mod) % m;
        if val == 0 {
            r.capped.push(n);
        } else {
            let nu = match vp_u64(val, p) {
                Valuation::Finite(v) => v,
                Valuation::Infinite => unreachable!("val is nonzero"),
            };
            if nu > r.max {
                r.max = nu;
                r.argmax = vec![n];
            } else if nu == r.max {
                r.argmax.push(n);
            }
            if threshold.is_some_and(|t| nu >= t) {
                r.over.push(n);
            }
        }
        pow2 = mul_mod(pow2, 2, m);
    }
}

fn big_valuation(x: &BigUint, p: u64) -> u64 {
    let mut m = x.clone();
    let p_big = BigUint::from(p);
    let mut v = 0;
    loop {
        let (q, rem) = m.div_rem(&p_big);
        if !rem.is_zero() {
            return v;
        }
        m = q;
        v += 1;
    }
}

fn scan_block_big<F: Fn(u64) -> BigInt>(
    p: u64,
    t_builder: &F,
    lo: u64,
    hi: u64,
    modulus: &BigUint,
    threshold: Option<u64>,
    r: &mut BlockResult,
) {
    let m_big = BigInt::from(modulus.clone());
    let mut pow2 = BigUint::from(2u32).modpow(&BigUint::from(lo), modulus);
    for n in lo..=hi {
        let c_mod = (BigUint::from(n) % modulus * &pow2 + 1u32) % modulus;
        let val = (BigInt::from(c_mod) - t_builder(n)).mod_floor(&m_big);
        if val.is_zero() {
            r.capped.push(n);
        } else {
            let nu = big_valuation(val.magnitude(), p);
            if nu > r.max {
                r.max = nu;
                r.argmax = vec![n];
            } else if nu == r.max {
                r.argmax.push(n);
            }
            if threshold.is_some_and(|t| nu >= t) {
                r.over.push(n);
            }
        }
        pow2 = (&pow2 << 1) % modulus;
    }
}

/// Output of [`scan_nu11_case`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Nu11Report {
    /// Indices with `nu_11(C_n - s(n)) >= 4`.
    pub list11: Vec<u64>,
    /// Members of `list11` that also satisfy `nu_13(C_n - s(n)) >= 3`.
    pub list13: Vec<u64>,
}

// Scan moduli: stated maxima plus four extra digits of headroom.
const M3: u64 = 129_140_163; // 3^17
const M5: u64 = 244_140_625; // 5^12
const M7: u64 = 1_977_326_743; // 7^11
const M11: u64 = 214_358_881; // 11^8
const M11_GATE: u64 = 14_641; // 11^4
const M13: u64 = 4_826_809; // 13^6
const M13_GATE: u64 = 2_197; // 13^3

/// The `nu_11`/`nu_13` case: with
/// `s(n) = 2^{nu_2(C_n)} 3^{nu_3(C_n)} 5^{nu_5(C_n)} 7^{nu_7(C_n)}`,
/// collect indices in the range with `nu_11(C_n - s(n)) >= 4` (modulus
/// 11^8), then recheck those at 13^3. Valid for ranges inside
/// `[201, 236898]`, where the per-prime caps 16/11/10 are known to hold.
pub fn scan_nu11_case(n_lo: u64, n_hi: u64) -> Result<Nu11Report, SearchError> {
    if n_lo < 201 || n_hi > 236_898 || n_lo > n_hi {
        return Err(SearchError::Nu11RangeInvalid(n_lo, n_hi));
    }
    // 3^a 5^b 7^c mod M11 / M13 for every exponent the caps admit.
    let table = |base: u64, cap: u32, m: u64| -> Vec<u64> {
        (0..=cap)
            .scan(1u64, |acc, _| {
                let v = *acc;
                *acc = mul_mod(v, base, m);
                Some(v)
            })
            .collect()
    };
    let t3_11 = table(3, 16, M11);
    let t5_11 = table(5, 11, M11);
    let t7_11 = table(7, 10, M11);
    let t3_13 = table(3, 16, M13);
    let t5_13 = table(5, 11, M13);
    let t7_13 = table(7, 10, M13);

    let blocks = split_blocks(n_lo, n_hi);
    let partials: Vec<Nu11Report> = blocks
        .par_iter()
        .map(|&(lo, hi)| {
            let pow = |m: u64| {
                BigUint::from(2u32)
                    .modpow(&BigUint::from(lo), &BigUint::from(m))
                    .to_u64()
                    .expect("fits")
            };
            let (mut p3, mut p5, mut p7, mut p11, mut p13) =
                (pow(M3), pow(M5), pow(M7), pow(M11), pow(M13));
            let mut report = Nu11Report {
                list11: Vec::new(),
                list13: Vec::new(),
            };
            for n in lo..=hi {
                let c3 = (mul_mod(n % M3, p3, M3) + 1) % M3;
                let c5 = (mul_mod(n % M5, p5, M5) + 1) % M5;
                let c7 = (mul_mod(n % M7, p7, M7) + 1) % M7;
                // In-range maxima are 12/7/6; a capped residue would mean
                // the modulus window is too small for this range.
                assert!(
                    c3 != 0 && c5 != 0 && c7 != 0,
                    "valuation cap hit at n = {n}"
                );
                let a = vp_u64(c3, 3).finite().expect("nonzero") as usize;
                let b = vp_u64(c5, 5).finite().expect("nonzero") as usize;
                let c = vp_u64(c7, 7).finite().expect("nonzero") as usize;
                // nu_2(C_n) = 0: C_n is odd.
                let c11 = (mul_mod(n % M11, p11, M11) + 1) % M11;
                let s11 = mul_mod(mul_mod(t3_11[a], t5_11[b], M11), t7_11[c], M11);
                let d11 = (c11 + M11 - s11) % M11;
                if d11.is_multiple_of(M11_GATE) {
                    report.list11.push(n);
                    let c13 = (mul_mod(n % M13, p13, M13) + 1) % M13;
                    let s13 = mul_mod(mul_mod(t3_13[a], t5_13[b], M13), t7_13[c], M13);
                    let d13 = (c13 + M13 - s13) % M13;
                    if d13.is_multiple_of(M13_GATE) {
                        report.list13.push(n);
                    }
                }
                p3 = mul_mod(p3, 2, M3);
                p5 = mul_mod(p5, 2, M5);
                p7 = mul_mod(p7, 2, M7);
                p11 = mul_mod(p11, 2, M11);
                p13 = mul_mod(p13, 2, M13);
            }
            report
        })
        .collect();

    let mut merged = Nu11Report {
        list11: Vec::new(),
        list13: Vec::new(),
    };
    for p in partials {
        merged.list11.extend(p.list11);
        merged.list13.extend(p.list13);
    }
    Ok(merged)
}

/// All `n <= n_max` with `W_n - 1 = n 2^n - 2` a positive `{2,3,5,7}`-unit,
/// i.e. the solutions of `W_n = 1! + s` in the slice.
pub fn woodall_check(n_max: u64) -> Result<Vec<(u64, BigInt)>, SearchError> {
    if n_max > 100_000 {
        return Err(SearchError::WoodallRangeTooLarge(n_max));
    }
    let basis = SmoothnessBasis::standard();
    let mut out = Vec::new();
    for n in 1..=n_max {
        let s = BigInt::from(n) * (BigInt::one() << n) - 2;
        if s < BigInt::one() {
            continue;
        }
        let f = crate::padic::factor_over_basis(&s, &basis).expect("positive");
        if f.is_smooth() {
            out.push((n, s));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::padic::vp;
    use crate::recurrence::cullen;
    use proptest::prelude::*;

    fn factorial(m: u64) -> BigInt {
        (1..=m).fold(BigInt::one(), |acc, k| acc * k)
    }

    #[test]
    fn smallest_case() {
        let sols = solve_cullen(1, 1, &SmoothnessBasis::standard(), &cullen());
        assert_eq!(sols.len(), 1);
        assert_eq!(sols[0].n, 1);
        assert_eq!(sols[0].ms, vec![1, 1]);
        assert_eq!(sols[0].s, BigInt::one());
        assert!(sols[0].degenerate);
    }

    #[test]
    fn classifier_reference_cases() {
        let rec = cullen();
        let cf = rec.closed_form();
        let factorials: Vec<BigInt> = (0..=10).map(factorial).collect();

        // m1! + m2! = 6 + 2 = 8 = n 2^n at n = 2.
        let w = classify_degenerate(2, &[(1, 3), (1, 2)], &factorials, cf).unwrap();
        assert_eq!(w.range, (1, 2));
        assert_eq!(w.matched, ClosedFormPart::DoubleRootTerm);

        // m2! = 1 = b beta^n.
        let w = classify_degenerate(9, &[(1, 6), (1, 1)], &factorials, cf).unwrap();
        assert_eq!(w.range, (2, 2));
        assert_eq!(w.matched, ClosedFormPart::SimpleRootTerm);

        assert!(classify_degenerate(4, &[(1, 4), (1, 3)], &factorials, cf).is_none());
    }

    #[test]
    fn solution_table_up_to_476() {
        // Completeness on the n <= 476, m1 <= 56 slice: exactly the
        // reference tuples, nothing else.
        let sols = solve_cullen(476, 56, &SmoothnessBasis::standard(), &cullen());
        let got: Vec<[u64; 4]> = sols
            .iter()
            .map(|s| [s.n, s.ms[0], s.ms[1], s.s.to_u64().unwrap()])
            .collect();
        let mut expected: Vec<[u64; 4]> = crate::reference::NONDEGENERATE_SOLUTIONS
            .iter()
            .chain(crate::reference::DEGENERATE_SOLUTIONS.iter())
            .copied()
            .collect();
        expected.sort();
        let mut got_sorted = got.clone();
        got_sorted.sort();
        assert_eq!(got_sorted, expected);

        // Output ordering is (n, m1, m2).
        let mut keys: Vec<(u64, u64, u64)> = sols.iter().map(|s| (s.n, s.ms[0], s.ms[1])).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        keys.dedup();
        assert_eq!(keys.len(), sols.len());

        // Degeneracy tags match the reference split.
        for s in &sols {
            let tuple = [s.n, s.ms[0], s.ms[1], s.s.to_u64().unwrap()];
            if s.degenerate {
                assert!(
                    crate::reference::DEGENERATE_SOLUTIONS.contains(&tuple),
                    "{tuple:?}"
                );
            } else {
                assert!(
                    crate::reference::NONDEGENERATE_SOLUTIONS.contains(&tuple),
                    "{tuple:?}"
                );
            }
        }
    }

    #[test]
    fn pruning_predicate() {
        assert!(check_inequality_n_gt_m1(7, 6));
        assert!(!check_inequality_n_gt_m1(10, 12)); // 12! > 10 * 2^10
        assert!(check_inequality_n_gt_m1(2, 5)); // below 6: not applicable
    }

    #[test]
    fn scan_small_range() {
        let out = scan_valuation(3, |_| BigInt::zero(), 1, 10, 16, None).unwrap();
        assert_eq!(out.max, Valuation::Finite(2));
        assert_eq!(out.argmax, vec![2]); // nu_3(9) = 2
        assert!(out.zeros.is_empty());
    }

    #[test]
    fn scan_agrees_with_big_integer_valuations() {
        for t in [0i64, 1, 2, 25] {
            let out = scan_valuation(3, |_| BigInt::from(t), 1, 2000, 16, Some(3)).unwrap();
            let mut max = 0;
            let mut argmax = Vec::new();
            let mut over = Vec::new();
            let mut zeros = Vec::new();
            for n in 1..=2000u64 {
                let v = cullen_value(n) - t;
                if v.is_zero() {
                    zeros.push(n); // C_3 = 25 is hit by t = 25
                    continue;
                }
                let nu = vp(&v, 3).unwrap().finite().unwrap();
                if nu > max {
                    max = nu;
                    argmax = vec![n];
                } else if nu == max {
                    argmax.push(n);
                }
                if nu >= 3 {
                    over.push(n);
                }
            }
            assert_eq!(out.max, Valuation::Finite(max), "t={t}");
            assert_eq!(out.argmax, argmax, "t={t}");
            assert_eq!(out.over_threshold, over, "t={t}");
            assert_eq!(out.zeros, zeros, "t={t}");
        }
    }

    #[test]
    fn scan_reports_exact_zeros_as_infinite() {
        // t(n) = C_n at n = 5 exactly.
        let out = scan_valuation(
            3,
            |n| {
                if n == 5 {
                    cullen_value(5)
                } else {
                    BigInt::zero()
                }
            },
            1,
            10,
            16,
            None,
        )
        .unwrap();
        assert_eq!(out.zeros, vec![5]);
        assert_eq!(out.max, Valuation::Finite(2));
    }

    #[test]
    fn scan_cap_escalation_resolves() {
        // Cap of 1 forces escalation wherever nu_3 >= 2.
        let out = scan_valuation(3, |_| BigInt::zero(), 1, 100, 1, None).unwrap();
        let direct = scan_valuation(3, |_| BigInt::zero(), 1, 100, 16, None).unwrap();
        assert_eq!(out.max, direct.max);
        assert_eq!(out.argmax, direct.argmax);
    }

    #[test]
    fn nu11_range_validation_and_empty_slice() {
        assert!(scan_nu11_case(100, 300).is_err());
        assert!(scan_nu11_case(300, 200_000_000).is_err());
        let report = scan_nu11_case(201, 300).unwrap();
        assert!(report.list11.is_empty());
        assert!(report.list13.is_empty());
    }

    #[test]
    fn woodall_examples() {
        let out = woodall_check(100).unwrap();
        assert_eq!(out, vec![(2, BigInt::from(6))]);
        // n = 1: W_1 - 1 = 0 excluded; n = 3: 22 = 2 * 11 not smooth.
        assert!(woodall_check(200_000).is_err());
    }

    #[test]
    fn solution_json_shape() {
        let basis = SmoothnessBasis::standard();
        let sols = solve_cullen(8, 6, &basis, &cullen());
        let c8 = sols
            .iter()
            .find(|s| s.n == 8 && s.ms == vec![6, 3])
            .unwrap();
        let json = c8.to_json(&basis);
        assert_eq!(json["n"], "8");
        assert_eq!(json["s"], "1323");
        assert_eq!(json["sFactorization"]["3"], "3");
        assert_eq!(json["sFactorization"]["7"], "2");
        assert_eq!(json["degenerate"], false);
        assert!(json["witness"].is_null());
    }

    proptest! {
        #[test]
        fn scan_matches_oracle_on_random_slices(start in 1u64..5000, t in -50i64..50) {
            let end = start + 200;
            let out = scan_valuation(5, |_| BigInt::from(t), start, end, 12, None).unwrap();
            let mut max = 0;
            for n in start..=end {
                let v = cullen_value(n) - t;
                if v.is_zero() { continue; }
                max = max.max(vp(&v, 5).unwrap().finite().unwrap());
            }
            prop_assert_eq!(out.max, Valuation::Finite(max));
        }
    }
}
