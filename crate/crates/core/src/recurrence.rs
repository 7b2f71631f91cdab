//! Ternary recurrences `u_n = r1 u_{n-1} + r2 u_{n-2} + r3 u_{n-3}` whose
//! characteristic cubic factors as `(X - alpha)^2 (X - beta)` with integer
//! roots, one of them equal to 1, and `alpha/beta` not a unit.
//!
//! Every accepted recurrence carries its exact closed form
//! `u_n = (a n + c) alpha^n + b beta^n` with rational `a, b, c`, solved from
//! `n = 0, 1, 2` and cross-checked against the recurrence for `n <= 64` at
//! construction time. All evaluation is exact integer/rational arithmetic.

use crate::real::{Precision, Real};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RecurrenceError {
    #[error("recurrence coefficients must be nonzero (r{0} = 0)")]
    ZeroCoefficient(usize),
    #[error("characteristic cubic {0} does not factor as (X - alpha)^2 (X - beta) with a root 1")]
    DegenerateRecurrence(String),
    #[error("root ratio alpha/beta is {0}, which is excluded")]
    RatioUnit(i64),
    #[error(
        "initial values satisfy a shorter recurrence (leading closed-form coefficient vanishes)"
    )]
    CollapsedClosedForm,
    #[error("index must exceed Y^8 = {0}")]
    IndexTooSmall(BigInt),
    #[error("index too large to materialise the closed-form power")]
    IndexTooLarge,
}

/// Which characteristic root equals 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnitRoot {
    /// beta = 1; alpha is the double root.
    Simple,
    /// alpha = 1; the double root is 1.
    Double,
}

/// Exact closed form `u_n = (a n + c) alpha^n + b beta^n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedForm {
    pub alpha: i64,
    pub beta: i64,
    pub a: BigRational,
    pub b: BigRational,
    pub c: BigRational,
    // a, b, c over a common denominator q, for integer-only evaluation.
    pa: BigInt,
    pb: BigInt,
    pc: BigInt,
    q: BigInt,
}

impl ClosedForm {
    /// `(a n + c) alpha^n` as an exact rational.
    pub fn double_root_term(&self, n: u64) -> Result<BigRational, RecurrenceError> {
        let pow = int_pow(self.alpha, n)?;
        Ok(BigRational::new(
            (&self.pa * BigInt::from(n) + &self.pc) * pow,
            self.q.clone(),
        ))
    }

    /// `b beta^n` as an exact rational.
    pub fn simple_root_term(&self, n: u64) -> Result<BigRational, RecurrenceError> {
        let pow = int_pow(self.beta, n)?;
        Ok(BigRational::new(&self.pb * pow, self.q.clone()))
    }
}

/// `base^n` with a shift fast path for `|base|` a power of two; the general
/// path materialises the power by repeated squaring.
pub fn int_pow(base: i64, n: u64) -> Result<BigInt, RecurrenceError> {
    let exp = u32::try_from(n).map_err(|_| RecurrenceError::IndexTooLarge)?;
    let mag = base.unsigned_abs();
    let negative = base < 0 && n % 2 == 1;
    let value = if mag.is_power_of_two() {
        BigInt::one() << (mag.trailing_zeros() as u64 * n)
    } else {
        BigInt::from(mag).pow(exp)
    };
    Ok(if negative { -value } else { value })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TernaryRecurrence {
    r: [i64; 3],
    u: [i64; 3],
    y: u64,
    gamma: u64,
    unit_root: UnitRoot,
    closed: ClosedForm,
}

/// Validates coefficients and initial values, extracts the integer roots,
/// and solves for the closed form.
///
/// Root extraction: `1` must be a root, so the cubic is divided by `(X - 1)`
/// and the quadratic quotient is matched against the two admissible shapes —
/// a perfect square `(X - alpha)^2` (so beta = 1) or `(X - 1)(X - beta)`
/// (so the double root is 1).
pub fn make_recurrence(
    r1: i64,
    r2: i64,
    r3: i64,
    u0: i64,
    u1: i64,
    u2: i64,
) -> Result<TernaryRecurrence, RecurrenceError> {
    for (i, r) in [r1, r2, r3].iter().enumerate() {
        if *r == 0 {
            return Err(RecurrenceError::ZeroCoefficient(i + 1));
        }
    }
    let cubic = format!("X^3 - ({r1}) X^2 - ({r2}) X - ({r3})");
    // Synthetic division by (X - 1): quotient X^2 + s1 X + s0.
    let s1 = 1i64
        .checked_sub(r1)
        .ok_or_else(|| RecurrenceError::DegenerateRecurrence(cubic.clone()))?;
    let s0 = s1
        .checked_sub(r2)
        .ok_or_else(|| RecurrenceError::DegenerateRecurrence(cubic.clone()))?;
    let remainder = s0
        .checked_sub(r3)
        .ok_or_else(|| RecurrenceError::DegenerateRecurrence(cubic.clone()))?;
    if remainder != 0 {
        return Err(RecurrenceError::DegenerateRecurrence(format!(
            "{cubic} has no root 1"
        )));
    }

    let disc = s1
        .checked_mul(s1)
        .and_then(|s| s.checked_sub(4i64.checked_mul(s0)?))
        .ok_or_else(|| RecurrenceError::DegenerateRecurrence(cubic.clone()))?;

    let (alpha, beta, unit_root) = if disc == 0 && s1 % 2 == 0 {
        // Quotient is (X - alpha)^2, beta = 1.
        let alpha = -s1 / 2;
        match alpha {
            0 => return Err(RecurrenceError::DegenerateRecurrence(cubic)),
            1 | -1 => return Err(RecurrenceError::RatioUnit(alpha)),
            _ => (alpha, 1i64, UnitRoot::Simple),
        }
    } else if 1 + s1 + s0 == 0 {
        // Quotient is (X - 1)(X - beta): the double root is 1.
        let beta = s0;
        match beta {
            0 => return Err(RecurrenceError::DegenerateRecurrence(cubic)),
            1 | -1 => return Err(RecurrenceError::RatioUnit(beta)),
            _ => (1i64, beta, UnitRoot::Double),
        }
    } else {
        return Err(RecurrenceError::DegenerateRecurrence(format!(
            "{cubic} = (X - 1)(X^2 + ({s1}) X + ({s0})) has no admissible double root"
        )));
    };

    let y = [r1, r2, r3, u0, u1, u2]
        .iter()
        .map(|v| v.unsigned_abs())
        .chain(std::iter::once(11))
        .max()
        .expect("nonempty");
    let gamma = alpha.unsigned_abs().max(beta.unsigned_abs());
    assert!(
        gamma >= 2,
        "gamma >= 2 is forced by the excluded root ratios"
    );

    let closed = solve_closed_form(alpha, beta, u0, u1, u2)?;

    let rec = TernaryRecurrence {
        r: [r1, r2, r3],
        u: [u0, u1, u2],
        y,
        gamma,
        unit_root,
        closed,
    };

    // Closed form against the unrolled recurrence for n <= 64.
    let mut win = [BigInt::from(u0), BigInt::from(u1), BigInt::from(u2)];
    for n in 0..=64u64 {
        let expected = if n < 3 {
            win[n as usize].clone()
        } else {
            let next = BigInt::from(r1) * &win[2]
                + BigInt::from(r2) * &win[1]
                + BigInt::from(r3) * &win[0];
            win.rotate_left(1);
            win[2] = next;
            win[2].clone()
        };
        assert_eq!(rec.eval(n), expected, "closed form disagrees at n = {n}");
    }
    Ok(rec)
}

fn solve_closed_form(
    alpha: i64,
    beta: i64,
    u0: i64,
    u1: i64,
    u2: i64,
) -> Result<ClosedForm, RecurrenceError> {
    // Linear system from n = 0, 1, 2:
    //   c + b                          = u0
    //   (a + c) alpha + b beta         = u1
    //   (2a + c) alpha^2 + b beta^2    = u2
    let al = BigRational::from(BigInt::from(alpha));
    let be = BigRational::from(BigInt::from(beta));
    let r0 = BigRational::from(BigInt::from(u0));
    let r1 = BigRational::from(BigInt::from(u1));
    let r2 = BigRational::from(BigInt::from(u2));

    // b = (u2 - 2 alpha u1 + alpha^2 u0) / (beta - alpha)^2, from eliminating
    // a and c; alpha != beta is guaranteed.
    let diff = &be - &al;
    let b =
        (&r2 - BigRational::from(BigInt::from(2)) * &al * &r1 + &al * &al * &r0) / (&diff * &diff);
    let c = &r0 - &b;
    let a = (&r1 - &b * &be) / &al - &c;

    if a.is_zero() {
        return Err(RecurrenceError::CollapsedClosedForm);
    }

    let q_int = a.denom().lcm(b.denom()).lcm(c.denom());
    let q = BigRational::from(q_int.clone());
    let pa = (&a * &q).to_integer();
    let pb = (&b * &q).to_integer();
    let pc = (&c * &q).to_integer();
    Ok(ClosedForm {
        alpha,
        beta,
        a,
        b,
        c,
        pa,
        pb,
        pc,
        q: q_int,
    })
}

impl TernaryRecurrence {
    pub fn coefficients(&self) -> [i64; 3] {
        self.r
    }

    pub fn initial_values(&self) -> [i64; 3] {
        self.u
    }

    /// `Y = max(|r1|, |r2|, |r3|, |u0|, |u1|, |u2|, 11)`.
    pub fn y(&self) -> u64 {
        self.y
    }

    /// `gamma = max(|alpha|, |beta|) >= 2`.
    pub fn gamma(&self) -> u64 {
        self.gamma
    }

    pub fn unit_root(&self) -> UnitRoot {
        self.unit_root
    }

    pub fn closed_form(&self) -> &ClosedForm {
        &self.closed
    }

    /// `Y^8`, the index threshold of the growth bound.
    pub fn y_pow8(&self) -> BigInt {
        BigInt::from(self.y).pow(8)
    }

    /// Evaluates `u_n` exactly through the closed form, integer-only:
    /// `((pa n + pc) alpha^n + pb beta^n) / q` with exact division.
    pub fn eval(&self, n: u64) -> BigInt {
        let cf = &self.closed;
        let alpha_pow = int_pow(cf.alpha, n).expect("index fits u32");
        let beta_pow = int_pow(cf.beta, n).expect("index fits u32");
        let numer = (&cf.pa * BigInt::from(n) + &cf.pc) * alpha_pow + &cf.pb * beta_pow;
        let (quot, rem) = num_integer::Integer::div_rem(&numer, &cf.q);
        assert!(rem.is_zero(), "closed form must divide exactly");
        quot
    }

    /// `ceil(39 Y log Y)` with the log rounded up; every zero of the
    /// sequence has index strictly below it.
    pub fn zero_index_bound(&self) -> u64 {
        let prec = Precision::bits(96);
        let bound = Real::from_int(BigInt::from(self.y) * 39, prec)
            .mul(&Real::from_int(BigInt::from(self.y), prec).ln(prec), prec);
        bound.hi().ceil_int().to_u64().expect("desk-scale bound")
    }

    /// Growth floor for `|u_n|` when `n > Y^8`: `|beta|^n / (2 Y^3)` when
    /// `|beta| > |alpha|`, else `n |alpha|^n / (6 Y^3)`.
    pub fn growth_lower_bound(&self, n: &BigInt) -> Result<BigRational, RecurrenceError> {
        let threshold = self.y_pow8();
        if *n <= threshold {
            return Err(RecurrenceError::IndexTooSmall(threshold));
        }
        let n_u64 = n.to_u64().ok_or(RecurrenceError::IndexTooLarge)?;
        let y3 = BigInt::from(self.y).pow(3);
        let cf = &self.closed;
        let bound = if cf.beta.unsigned_abs() > cf.alpha.unsigned_abs() {
            BigRational::new(int_pow(cf.beta, n_u64)?.abs(), 2 * y3)
        } else {
            BigRational::new(n * int_pow(cf.alpha, n_u64)?.abs(), 6 * y3)
        };
        Ok(bound)
    }
}

/// The Cullen sequence `C_n = n 2^n + 1`:
/// `C_n = 5 C_{n-1} - 8 C_{n-2} + 4 C_{n-3}` with `C_0, C_1, C_2 = 1, 3, 9`.
pub fn cullen() -> TernaryRecurrence {
    make_recurrence(5, -8, 4, 1, 3, 9).expect("Cullen recurrence is valid")
}

/// The Woodall sequence `W_n = n 2^n - 1`, same characteristic cubic as
/// Cullen with `W_0, W_1, W_2 = -1, 1, 7`.
pub fn woodall() -> TernaryRecurrence {
    make_recurrence(5, -8, 4, -1, 1, 7).expect("Woodall recurrence is valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_integer::Integer;
    use proptest::prelude::*;

    #[test]
    fn cullen_closed_form() {
        let rec = cullen();
        let cf = rec.closed_form();
        assert_eq!(cf.alpha, 2);
        assert_eq!(cf.beta, 1);
        assert_eq!(cf.a, BigRational::from(BigInt::one()));
        assert_eq!(cf.b, BigRational::from(BigInt::one()));
        assert!(cf.c.is_zero());
        assert_eq!(rec.y(), 11);
        assert_eq!(rec.gamma(), 2);
        assert_eq!(rec.unit_root(), UnitRoot::Simple);
    }

    #[test]
    fn woodall_closed_form() {
        let rec = woodall();
        let cf = rec.closed_form();
        assert_eq!((cf.alpha, cf.beta), (2, 1));
        assert_eq!(cf.a, BigRational::from(BigInt::one()));
        assert_eq!(cf.b, BigRational::from(BigInt::from(-1)));
        assert!(cf.c.is_zero());
        assert_eq!(rec.eval(2), BigInt::from(7)); // W_2 = 1! + 6
    }

    #[test]
    fn triple_root_is_rejected_as_unit_ratio() {
        assert_eq!(
            make_recurrence(3, -3, 1, 0, 1, 2),
            Err(RecurrenceError::RatioUnit(1))
        );
    }

    #[test]
    fn shape_rejections() {
        // 1 not a root.
        assert!(matches!(
            make_recurrence(1, 1, 1, 0, 1, 2),
            Err(RecurrenceError::DegenerateRecurrence(_))
        ));
        // Roots {1, 2, 3}: no double root.
        // (X-1)(X-2)(X-3) = X^3 - 6X^2 + 11X - 6 -> r = (6, -11, 6).
        assert!(matches!(
            make_recurrence(6, -11, 6, 0, 1, 2),
            Err(RecurrenceError::DegenerateRecurrence(_))
        ));
        // (X-2)^2(X+1): no root 1.
        // = X^3 - 3X^2 + 4 -> r1 = 3, r2 = 0 rejected earlier as zero coeff.
        assert_eq!(
            make_recurrence(3, 0, -4, 0, 1, 2),
            Err(RecurrenceError::ZeroCoefficient(2))
        );
        // (X+1)^2(X-1) = X^3 + X^2 - X - 1 -> alpha = -1: unit ratio.
        assert_eq!(
            make_recurrence(-1, 1, 1, 0, 1, 2),
            Err(RecurrenceError::RatioUnit(-1))
        );
    }

    #[test]
    fn collapsed_closed_form_is_rejected() {
        // u_n = 2^n satisfies the Cullen cubic with a = 0.
        assert_eq!(
            make_recurrence(5, -8, 4, 1, 2, 4),
            Err(RecurrenceError::CollapsedClosedForm)
        );
    }

    #[test]
    fn eval_reference_points() {
        let rec = cullen();
        assert_eq!(rec.eval(8), BigInt::from(2049)); // 4! + 3^4 5^2
        assert_eq!(rec.eval(0), BigInt::from(1));
        assert_eq!(woodall().eval(2), BigInt::from(7));
    }

    #[test]
    fn cullen_identity_to_ten_thousand() {
        let rec = cullen();
        for n in 0..=10_000u64 {
            let direct = BigInt::from(n) * (BigInt::one() << n) + 1;
            assert_eq!(rec.eval(n), direct, "n={n}");
        }
    }

    #[test]
    fn zero_index_bound_cullen() {
        // ceil(39 * 11 * ln 11) = 1029
        assert_eq!(cullen().zero_index_bound(), 1029);
        // C_n >= 1 for all n, and W_n != 0 below the bound.
        let w = woodall();
        for n in 0..1029u64 {
            assert!(!w.eval(n).is_zero());
        }
    }

    #[test]
    fn growth_bound_boundary_and_value() {
        let rec = cullen();
        let y8 = BigInt::from(11u64).pow(8);
        assert!(matches!(
            rec.growth_lower_bound(&y8),
            Err(RecurrenceError::IndexTooSmall(_))
        ));

        let n = &y8 + 1;
        let bound = rec.growth_lower_bound(&n).unwrap();
        let n_u64 = n.to_u64().unwrap();
        let expected = BigRational::new(
            &n * (BigInt::one() << n_u64),
            BigInt::from(6) * BigInt::from(11u64).pow(3),
        );
        assert_eq!(bound, expected);

        // bound < |u_n|, compared exactly.
        let u_n = rec.eval(n_u64);
        assert!(bound < BigRational::from(u_n.abs()));
    }

    fn arbitrary_valid_recurrence() -> impl Strategy<Value = TernaryRecurrence> {
        let double_simple = (2i64..=9, prop::bool::ANY).prop_map(|(m, neg)| {
            let alpha = if neg { -m } else { m };
            (alpha, 1i64)
        });
        let unit_double = (2i64..=9, prop::bool::ANY).prop_map(|(m, neg)| {
            let beta = if neg { -m } else { m };
            (1i64, beta)
        });
        (
            prop_oneof![double_simple, unit_double],
            -50i64..=50,
            -50i64..=50,
            -50i64..=50,
        )
            .prop_filter_map("valid recurrence", |((alpha, beta), u0, u1, u2)| {
                let r1 = 2 * alpha + beta;
                let r2 = -(alpha * alpha + 2 * alpha * beta);
                let r3 = alpha * alpha * beta;
                make_recurrence(r1, r2, r3, u0, u1, u2).ok()
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]

        #[test]
        fn closed_form_matches_unrolled_recurrence(rec in arbitrary_valid_recurrence()) {
            let [r1, r2, r3] = rec.coefficients();
            let [u0, u1, u2] = rec.initial_values();
            let mut w = [BigInt::from(u0), BigInt::from(u1), BigInt::from(u2)];
            prop_assert_eq!(rec.eval(0), w[0].clone());
            prop_assert_eq!(rec.eval(1), w[1].clone());
            prop_assert_eq!(rec.eval(2), w[2].clone());
            for n in 3..=1000u64 {
                let next = BigInt::from(r1) * &w[2] + BigInt::from(r2) * &w[1] + BigInt::from(r3) * &w[0];
                w.rotate_left(1);
                w[2] = next;
                prop_assert_eq!(rec.eval(n), w[2].clone());
            }
        }

        #[test]
        fn coefficient_bounds_hold(rec in arbitrary_valid_recurrence()) {
            // Numerators of a, b, c at most 4 Y^3, denominators at most Y^3.
            let y3 = BigInt::from(rec.y()).pow(3);
            let cap = BigInt::from(4) * &y3;
            let cf = rec.closed_form();
            for r in [&cf.a, &cf.b, &cf.c] {
                prop_assert!(r.numer().abs() <= cap);
                prop_assert!(r.denom().abs() <= y3);
            }
        }

        #[test]
        fn accepted_coefficients_are_coprime(rec in arbitrary_valid_recurrence()) {
            let [r1, r2, r3] = rec.coefficients();
            prop_assert_eq!(r1.gcd(&r2).gcd(&r3), 1);
        }
    }
}
