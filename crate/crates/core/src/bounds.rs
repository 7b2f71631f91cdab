//! Numeric evaluation of the effective constants: the linear-forms-in-
//! logarithms valuation bound, Pethő's fixed-point bound, and the
//! `c1..c7` / `n0` / `n1` constant chains.
//!
//! Everything is computed through the directed-rounding enclosures of
//! [`crate::real`]: upper bounds report their `hi` endpoint, the one lower
//! bound (`c3`, a floor on the greatest prime factor) reports `lo`.
//! Recomputing any constant at doubled precision never loosens it.

use crate::padic::is_prime;
use crate::real::{ln2, Dir, Dyadic, Precision, Real};
use crate::recurrence::{TernaryRecurrence, UnitRoot};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BoundsError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("fixed-point iteration did not stabilise within {0} rounds")]
    NoConvergence(u32),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
}

/// Parameters of the p-adic valuation bound for
/// `Lambda = eta_1^{d_1} ... eta_l^{d_l} - 1`.
///
/// Heights and `B*` arrive as plain numbers; the algebraic objects behind
/// them are never materialised here.
#[derive(Debug, Clone, PartialEq)]
pub struct YuParams {
    /// Number of terms `l >= 1`.
    pub terms: u32,
    /// Field degree `D >= 1`.
    pub degree: u32,
    /// Ramification index `e >= 1` of the prime ideal.
    pub ramification: u32,
    /// Inertial degree `f >= 1` of the prime ideal.
    pub inertia: u32,
    /// The rational prime below the ideal.
    pub p: u64,
    /// One height parameter per term, each at least `log p`.
    pub heights: Vec<f64>,
    /// `B* = max(|d_1|, ..., |d_l|, 3)`.
    pub b_star: f64,
}

impl YuParams {
    fn validate(&self, prec: Precision) -> Result<(), BoundsError> {
        let fail = |m: &str| Err(BoundsError::InvalidParams(m.to_string()));
        if self.terms < 1 || self.heights.len() != self.terms as usize {
            return fail("need l >= 1 heights, one per term");
        }
        if self.degree < 1 || self.ramification < 1 || self.inertia < 1 {
            return fail("degree, ramification and inertia must be >= 1");
        }
        if !is_prime(self.p) {
            return fail("p must be prime");
        }
        if !self.b_star.is_finite() || self.b_star < 3.0 {
            return fail("B* must be at least 3");
        }
        let ln_p = Real::from_u64(self.p, prec).ln(prec);
        for &h in &self.heights {
            if !h.is_finite() || Dyadic::from_f64(h).cmp_val(ln_p.lo()) == std::cmp::Ordering::Less
            {
                return fail("every height must be at least log p");
            }
        }
        Ok(())
    }
}

/// Upper bound for `nu_pi(Lambda)`:
///
/// ```text
/// 19 (20 sqrt(l+1) D)^{2(l+1)} e^{l-1} p^f / (f log p)^2
///     * log(e^5 l D) * H_1 ... H_l * log B*
/// ```
///
/// `(20 sqrt(l+1) D)^{2(l+1)} = (400 (l+1) D^2)^{l+1}` and
/// `log(e^5 l D) = 5 + log(l D)` are evaluated exactly/symbolically, so the
/// only rounded pieces are the logarithms.
pub fn yu_valuation_bound(params: &YuParams, prec: Precision) -> Result<Real, BoundsError> {
    params.validate(prec)?;
    let l = params.terms;
    let structural = BigInt::from(19)
        * (BigInt::from(400u32) * (l + 1) * BigInt::from(params.degree).pow(2)).pow(l + 1)
        * BigInt::from(params.ramification).pow(l - 1)
        * BigInt::from(params.p).pow(params.inertia);
    let f_ln_p = Real::from_u64(params.inertia as u64, prec)
        .mul(&Real::from_u64(params.p, prec).ln(prec), prec);
    let log_term = Real::from_u64(5, prec).add(
        &Real::from_u64(l as u64 * params.degree as u64, prec).ln(prec),
        prec,
    );
    let mut acc = Real::from_int(structural, prec)
        .div(&f_ln_p.powi(2, prec), prec)
        .mul(&log_term, prec);
    for &h in &params.heights {
        acc = acc.mul(&Real::from_f64(h), prec);
    }
    Ok(acc.mul(&Real::from_f64(params.b_star).ln(prec), prec))
}

/// Upper bound for the largest real solution of `x = u + v (log x)^h`:
///
/// ```text
/// max( 2^h (u^{1/h} + v^{1/h} log(h^h v))^h ,  2^h (u^{1/h} + 2 e^2)^h )
/// ```
///
/// The first branch only participates when it is defined (`v > 0` and a
/// positive base); otherwise the second branch alone is the bound, which is
/// then dominant anyway.
pub fn petho_bound(u: f64, v: f64, h: f64, prec: Precision) -> Result<Real, BoundsError> {
    if !(u >= 0.0 && v >= 0.0 && h >= 1.0) || !u.is_finite() || !v.is_finite() || !h.is_finite() {
        return Err(BoundsError::InvalidParams(
            "need u, v >= 0 and h >= 1".to_string(),
        ));
    }
    let hr = Real::from_f64(h);
    let inv_h = Real::from_u64(1, prec).div(&hr, prec);
    let two_pow_h = Real::from_u64(2, prec).powf(&hr, prec);
    let u_root = Real::from_f64(u).powf(&inv_h, prec);

    let two_e2 = Real::from_u64(2, prec).exp(prec).shl2(1);
    let branch2 = two_pow_h.mul(&u_root.add(&two_e2, prec).powf(&hr, prec), prec);

    if v == 0.0 {
        return Ok(branch2);
    }
    let vr = Real::from_f64(v);
    let hh_v = hr.powf(&hr, prec).mul(&vr, prec);
    let inner = u_root.add(&vr.powf(&inv_h, prec).mul(&hh_v.ln(prec), prec), prec);
    if !inner.is_strictly_positive() {
        // A nonpositive base would make the first branch undefined; it is
        // dominated by the second branch there.
        return Ok(branch2);
    }
    let branch1 = two_pow_h.mul(&inner.powf(&hr, prec), prec);
    Ok(branch1.max(&branch2))
}

const FIXED_POINT_ROUNDS: u32 = 1000;

/// Largest integer `n` with `n < C (D + E log^3 n)^k`, via the integer map
/// `n -> ceil(RHS_hi(n)) - 1` iterated to its fixed point. The rounded-up
/// right-hand side makes the result an upper bound for the exact largest
/// solution, and the fixed point certifies `n < RHS_hi(n)`.
pub fn solve_log_inequality(
    c: &Real,
    d: &Real,
    e: &Real,
    k: u32,
    prec: Precision,
) -> Result<BigInt, BoundsError> {
    if !c.is_strictly_positive() {
        return Err(BoundsError::InvalidParams("C must be positive".to_string()));
    }
    let rhs_hi = |n: &BigInt| -> Dyadic {
        let ln_n = Real::from_int(n.clone(), prec).ln(prec);
        c.mul(
            &d.add(&e.mul(&ln_n.powi(3, prec), prec), prec)
                .powi(k as u64, prec),
            prec,
        )
        .hi()
        .clone()
    };
    let step = |n: &BigInt| -> BigInt {
        let next: BigInt = rhs_hi(n).ceil_int() - 1;
        next.max(BigInt::one())
    };
    let mut n = BigInt::from(3);
    for _ in 0..FIXED_POINT_ROUNDS {
        let next = step(&n);
        if next == n {
            return Ok(n);
        }
        n = next;
    }
    Err(BoundsError::NoConvergence(FIXED_POINT_ROUNDS))
}

/// Lower bound on the greatest prime factor as a function of the index:
/// `c3(n) = (n / 1.45)^{1/(2k+2)} (log(4A)/4 + 2.63 c2 log^3 n)^{-1/2}`,
/// rounded down.
#[derive(Debug, Clone)]
pub struct PrimeFactorFloor {
    k: u32,
    a_bound: u64,
    c2: Real,
}

impl PrimeFactorFloor {
    pub fn eval(&self, n: &BigInt, prec: Precision) -> Dyadic {
        let nr = Real::from_int(n.clone(), prec);
        let root = nr
            .div(&Real::from_decimal("1.45", prec), prec)
            .powf(&Real::from_ratio(1, 2 * self.k as i64 + 2, prec), prec);
        let ln_n = nr.ln(prec);
        let inner = Real::from_u64(4 * self.a_bound, prec)
            .ln(prec)
            .div_u64(4, prec)
            .add(
                &Real::from_decimal("2.63", prec)
                    .mul(&self.c2, prec)
                    .mul(&ln_n.powi(3, prec), prec),
                prec,
            );
        root.div(&inner.sqrt(prec), prec)
            .lo()
            .round(prec, Dir::Down)
    }
}

/// The index-bound constants of the factorial-combination theorem.
#[derive(Debug, Clone)]
pub struct GeneralConstants {
    /// `Y^8`, exact.
    pub c1: BigInt,
    /// `2.02e12 log^2 Y`, enclosed.
    pub c2: Real,
    /// Largest integer solution of
    /// `n < (log 4A + 10.49 c2 log^3 n)^k / log gamma`.
    pub n0: BigInt,
    /// Largest integer solution of
    /// `n < 1.45 (log 4(A+1) + 10.49 c2 log^3 n)^k`.
    pub n1: BigInt,
    /// `max(c1, n1)`.
    pub c4: BigInt,
    /// `c3` as a function of the index.
    pub c3: PrimeFactorFloor,
}

/// Evaluates `c1`, `c2`, `n0`, `n1`, `c4` and the `c3` functional for a
/// term count `k` and coefficient bound `A`.
pub fn general_constants(
    k: u32,
    a_bound: u64,
    rec: &TernaryRecurrence,
    prec: Precision,
) -> Result<GeneralConstants, BoundsError> {
    if k < 1 || a_bound < 1 {
        return Err(BoundsError::InvalidParams(
            "need k >= 1 and A >= 1".to_string(),
        ));
    }
    let c1 = rec.y_pow8();
    let ln_y = Real::from_u64(rec.y(), prec).ln(prec);
    let c2 =
        Real::from_int(BigInt::from(2_020_000_000_000u64), prec).mul(&ln_y.powi(2, prec), prec);
    let e_coeff = Real::from_decimal("10.49", prec).mul(&c2, prec);

    let ln_gamma = Real::from_u64(rec.gamma(), prec).ln(prec);
    let n0 = solve_log_inequality(
        &Real::from_u64(1, prec).div(&ln_gamma, prec),
        &Real::from_u64(4 * a_bound, prec).ln(prec),
        &e_coeff,
        k,
        prec,
    )?;
    let n1 = solve_log_inequality(
        &Real::from_decimal("1.45", prec),
        &Real::from_u64(4 * (a_bound + 1), prec).ln(prec),
        &e_coeff,
        k,
        prec,
    )?;
    let c4 = c1.clone().max(n1.clone());
    Ok(GeneralConstants {
        c1,
        c2: c2.clone(),
        n0,
        n1,
        c4,
        c3: PrimeFactorFloor { k, a_bound, c2 },
    })
}

/// The smooth-part constants of the S-unit theorem.
#[derive(Debug, Clone)]
pub struct SUnitConstants {
    /// `1.45 max(P, A)^{2k+2} (2 c2 log 4A)^{k+1}`.
    pub c7: Real,
    /// `2^{3k+3} c7 log^{3k+3}(c7 (3k+3)^{3k+3})`.
    pub c6: Real,
    /// `max(c4, c6)` as an integer index bound (ceiling of the `c6` upper
    /// endpoint).
    pub c5: BigInt,
}

/// Evaluates `c7`, `c6` and `c5 = max(c4, c6)` for the largest basis prime
/// `P`.
pub fn sunit_constants(
    k: u32,
    a_bound: u64,
    largest_prime: u64,
    rec: &TernaryRecurrence,
    prec: Precision,
) -> Result<SUnitConstants, BoundsError> {
    if !is_prime(largest_prime) {
        return Err(BoundsError::InvalidParams("P must be prime".to_string()));
    }
    let general = general_constants(k, a_bound, rec, prec)?;
    let base = BigInt::from(largest_prime.max(a_bound)).pow(2 * k + 2);
    let ln_4a = Real::from_u64(4 * a_bound, prec).ln(prec);
    let c7 = Real::from_decimal("1.45", prec)
        .mul(&Real::from_int(base, prec), prec)
        .mul(
            &general
                .c2
                .shl2(1)
                .mul(&ln_4a, prec)
                .powi(k as u64 + 1, prec),
            prec,
        );
    let h = 3 * k + 3;
    let inner = c7.mul(&Real::from_int(BigInt::from(h).pow(h), prec), prec);
    let c6 = c7
        .mul(&inner.ln(prec).powi(h as u64, prec), prec)
        .shl2(h as i64);
    let c5 = general.c4.clone().max(c6.hi().ceil_int());
    Ok(SUnitConstants { c7, c6, c5 })
}

/// Upper bound for `nu_p(u_n - t)` when `n > c1`:
/// `c2 p log^2 n` for `t = 0`, times `log+ t = max(1, log |t|)` otherwise.
///
/// Preconditions checked exactly: `t != u_n`, and `t` differs from the
/// closed-form component that is constant in the relevant root
/// configuration (`t != b` when `beta = 1`, `t != a n + c` when
/// `alpha = 1`).
pub fn vp_un_minus_t_bound(
    rec: &TernaryRecurrence,
    n: &BigInt,
    t: &BigInt,
    p: u64,
    prec: Precision,
) -> Result<Dyadic, BoundsError> {
    if !is_prime(p) {
        return Err(BoundsError::InvalidParams("p must be prime".to_string()));
    }
    let c1 = rec.y_pow8();
    if *n <= c1 {
        return Err(BoundsError::PreconditionViolated(format!(
            "n must exceed c1 = {c1}"
        )));
    }
    let cf = rec.closed_form();
    let t_rat = BigRational::from(t.clone());
    match rec.unit_root() {
        UnitRoot::Simple => {
            if t_rat == cf.b {
                return Err(BoundsError::PreconditionViolated(
                    "t equals the constant component b (beta = 1)".to_string(),
                ));
            }
        }
        UnitRoot::Double => {
            let linear = &cf.a * BigRational::from(n.clone()) + &cf.c;
            if t_rat == linear {
                return Err(BoundsError::PreconditionViolated(
                    "t equals the linear component a n + c (alpha = 1)".to_string(),
                ));
            }
        }
    }
    // t != u_n: |u_n| >= gamma^n / (6 Y^3) > 2^(n - 130) at this scale, so
    // any t at least 130 bits shorter than n is distinct; otherwise compare
    // exactly (only possible at materialisable indices).
    let n_u64 = n.to_u64();
    let distinct = match n_u64 {
        Some(nv) => {
            if t.magnitude().bits() + 130 < nv {
                true
            } else if nv <= 1 << 22 {
                rec.eval(nv) != *t
            } else {
                false
            }
        }
        None => t.magnitude().bits() + 130 < u64::MAX,
    };
    if !distinct {
        return Err(BoundsError::PreconditionViolated(
            "cannot separate t from u_n".to_string(),
        ));
    }

    let ln_y = Real::from_u64(rec.y(), prec).ln(prec);
    let c2 =
        Real::from_int(BigInt::from(2_020_000_000_000u64), prec).mul(&ln_y.powi(2, prec), prec);
    let ln_n = Real::from_int(n.clone(), prec).ln(prec);
    let mut bound = c2
        .mul(&Real::from_u64(p, prec), prec)
        .mul(&ln_n.powi(2, prec), prec);
    if !t.is_zero() {
        let log_plus = Real::from_int(t.abs(), prec)
            .ln(prec)
            .max(&Real::from_u64(1, prec));
        bound = bound.mul(&log_plus, prec);
    }
    Ok(bound.hi().round(prec, Dir::Up))
}

/// The structural coefficient of the two-term valuation bound,
/// `19 (20 sqrt(3))^6 log(2 e^5)`, and its tripled form. Used by the
/// verification suite against the caps 1.87e11 and 5.61e11.
pub fn yu_structural_coefficient(prec: Precision) -> Real {
    let base = BigInt::from(19) * BigInt::from(1200u32).pow(3); // (20 sqrt 3)^6 = 1200^3
    let log_2e5 = Real::from_u64(5, prec).add(&ln2(prec), prec);
    Real::from_int(base, prec).mul(&log_2e5, prec)
}
