//! Directed-rounding dyadic arithmetic and interval enclosures.
//!
//! Every effective constant in [`crate::bounds`] must be a *valid* bound, so
//! all transcendental evaluation here goes through enclosures `[lo, hi]`
//! whose endpoints are dyadic rationals `mant * 2^exp`. Addition,
//! subtraction and multiplication of dyadics are exact; division, `ln`,
//! `exp`, `sqrt` and real powers round outward. Recomputing an enclosure at
//! higher precision always nests inside the coarser one.
//!
//! `ln` reduces to `[1, 2)` and sums the `atanh` series with an explicit
//! tail bound; `exp` reduces modulo `ln 2` and sums the Taylor series with a
//! geometric tail. Precision is an explicit context, never ambient state.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;

/// Working precision in significand bits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Precision {
    bits: u32,
}

impl Precision {
    pub fn bits(bits: u32) -> Self {
        Precision { bits: bits.max(32) }
    }

    /// Precision carrying at least `d` significant decimal digits.
    pub fn digits(d: u32) -> Self {
        Precision::bits((d as u64 * 3322).div_ceil(1000) as u32 + 16)
    }

    pub fn bit_count(self) -> u32 {
        self.bits
    }

    fn guarded(self) -> Precision {
        Precision {
            bits: self.bits + 48,
        }
    }
}

impl Default for Precision {
    /// 224 bits, a little over 67 decimal digits.
    fn default() -> Self {
        Precision { bits: 224 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dir {
    Down,
    Up,
}

impl Dir {
    fn flip(self) -> Dir {
        match self {
            Dir::Down => Dir::Up,
            Dir::Up => Dir::Down,
        }
    }
}

/// An exact dyadic rational `mant * 2^exp`, mantissa kept odd.
#[derive(Debug, Clone)]
pub struct Dyadic {
    mant: BigInt,
    exp: i64,
}

impl Dyadic {
    pub fn new(mant: BigInt, exp: i64) -> Self {
        let mut d = Dyadic { mant, exp };
        d.normalize();
        d
    }

    fn normalize(&mut self) {
        if self.mant.is_zero() {
            self.exp = 0;
            return;
        }
        if let Some(tz) = self.mant.trailing_zeros() {
            if tz > 0 {
                self.mant >>= tz;
                self.exp += tz as i64;
            }
        }
    }

    pub fn zero() -> Self {
        Dyadic {
            mant: BigInt::zero(),
            exp: 0,
        }
    }

    pub fn one() -> Self {
        Dyadic {
            mant: BigInt::one(),
            exp: 0,
        }
    }

    pub fn from_int(v: impl Into<BigInt>) -> Self {
        Dyadic::new(v.into(), 0)
    }

    /// Exact conversion; every finite `f64` is dyadic.
    pub fn from_f64(v: f64) -> Self {
        assert!(v.is_finite(), "non-finite input");
        if v == 0.0 {
            return Dyadic::zero();
        }
        let bits = v.to_bits();
        let sign = if bits >> 63 == 1 { -1 } else { 1 };
        let raw_exp = ((bits >> 52) & 0x7ff) as i64;
        let frac = bits & ((1u64 << 52) - 1);
        let (mant, exp) = if raw_exp == 0 {
            (frac, -1074) // subnormal
        } else {
            (frac | (1u64 << 52), raw_exp - 1075)
        };
        Dyadic::new(BigInt::from(sign) * BigInt::from(mant), exp)
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.mant.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.mant.is_negative()
    }

    fn mant_bits(&self) -> u64 {
        self.mant.magnitude().bits()
    }

    /// floor(log2 |x|) + 1: the value lies in [2^(b-1), 2^b).
    fn magnitude_bound(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.mant_bits() as i64 + self.exp)
        }
    }

    pub fn neg(&self) -> Dyadic {
        Dyadic {
            mant: -self.mant.clone(),
            exp: self.exp,
        }
    }

    pub fn add(&self, other: &Dyadic) -> Dyadic {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let (lo_exp, a, b) = if self.exp <= other.exp {
            (
                self.exp,
                self.mant.clone(),
                &other.mant << (other.exp - self.exp) as u64,
            )
        } else {
            (
                other.exp,
                &self.mant << (self.exp - other.exp) as u64,
                other.mant.clone(),
            )
        };
        Dyadic::new(a + b, lo_exp)
    }

    pub fn sub(&self, other: &Dyadic) -> Dyadic {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Dyadic) -> Dyadic {
        Dyadic::new(&self.mant * &other.mant, self.exp + other.exp)
    }

    /// Multiplies by 2^k.
    pub fn shl2(&self, k: i64) -> Dyadic {
        if self.is_zero() {
            return Dyadic::zero();
        }
        Dyadic {
            mant: self.mant.clone(),
            exp: self.exp + k,
        }
    }

    /// Keeps `prec` significant bits, rounding toward `dir`.
    pub fn round(&self, prec: Precision, dir: Dir) -> Dyadic {
        let bits = self.mant_bits();
        if bits <= prec.bits as u64 {
            return self.clone();
        }
        let shift = (bits - prec.bits as u64) as usize;
        let mant = match dir {
            Dir::Down => &self.mant >> shift,
            Dir::Up => -(&(-&self.mant) >> shift),
        };
        Dyadic::new(mant, self.exp + shift as i64)
    }

    /// Directed quotient with about `prec` significant bits.
    pub fn div(&self, other: &Dyadic, prec: Precision, dir: Dir) -> Dyadic {
        assert!(!other.is_zero(), "division by zero");
        if self.is_zero() {
            return Dyadic::zero();
        }
        let ba = self.mant_bits() as i64;
        let bb = other.mant_bits() as i64;
        let k = (prec.bits as i64 + 2 - (ba - bb)).max(0) as usize;
        let num = &self.mant << k;
        let q = match dir {
            Dir::Down => num.div_floor(&other.mant),
            Dir::Up => num.div_ceil(&other.mant),
        };
        Dyadic::new(q, self.exp - other.exp - k as i64)
    }

    pub fn cmp_val(&self, other: &Dyadic) -> Ordering {
        let diff = self.sub(other);
        if diff.mant.is_zero() {
            Ordering::Equal
        } else if diff.mant.is_positive() {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }

    pub fn floor_int(&self) -> BigInt {
        if self.exp >= 0 {
            &self.mant << self.exp as u64
        } else {
            &self.mant >> (-self.exp) as u64
        }
    }

    pub fn ceil_int(&self) -> BigInt {
        -self.neg().floor_int()
    }

    /// Lossy conversion for diagnostics.
    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let bits = self.mant_bits();
        let (top, exp) = if bits > 64 {
            let shift = (bits - 64) as usize;
            (
                (&self.mant >> shift).to_f64().unwrap_or(f64::NAN),
                self.exp + shift as i64,
            )
        } else {
            (self.mant.to_f64().unwrap_or(f64::NAN), self.exp)
        };
        top * 2f64.powi(exp.clamp(-2000, 2000) as i32)
    }

    /// Compares against an exact rational `num / den`, `den > 0`.
    pub fn cmp_ratio(&self, num: &BigInt, den: &BigInt) -> Ordering {
        assert!(den.is_positive());
        let lhs_mant = &self.mant * den;
        if self.exp >= 0 {
            (lhs_mant << self.exp as u64).cmp(num)
        } else {
            lhs_mant.cmp(&(num << (-self.exp) as u64))
        }
    }

    /// Scientific-notation rendering with `sig` significant digits, rounded
    /// toward `dir`.
    pub fn to_sci(&self, sig: usize, dir: Dir) -> String {
        assert!(sig >= 1);
        if self.is_zero() {
            return "0".to_string();
        }
        let negative = self.is_negative();
        let mag_dir = if negative { dir.flip() } else { dir };
        let b = self.magnitude_bound().expect("nonzero");
        // |x| >= 2^(b-1) >= 10^floor((b-1) log10 2).
        let d10 = ((b - 1) as f64 * std::f64::consts::LOG10_2).floor() as i64;
        let t = sig as i64 + 2 - d10;
        let ten = BigInt::from(10);
        let mut num: BigInt = self.mant.magnitude().clone().into();
        let mut den = BigInt::one();
        match t.cmp(&0) {
            Ordering::Greater => num *= ten.pow(t as u32),
            Ordering::Less => den *= ten.pow((-t) as u32),
            Ordering::Equal => {}
        }
        if self.exp >= 0 {
            num <<= self.exp as u64;
        } else {
            den <<= (-self.exp) as u64;
        }
        let a: BigInt = match mag_dir {
            Dir::Down => num.div_floor(&den),
            Dir::Up => num.div_ceil(&den),
        };
        let digits = a.to_string();
        let mut exp10 = digits.len() as i64 - 1 - t;
        let (mut head, tail) = if digits.len() > sig {
            (digits[..sig].to_string(), &digits[sig..])
        } else {
            (digits.clone(), "")
        };
        if mag_dir == Dir::Up && tail.bytes().any(|c| c != b'0') {
            // Bump the kept prefix; a cascade of 9s lengthens it.
            let bumped: BigInt = head.parse::<BigInt>().expect("digit prefix") + 1;
            head = bumped.to_string();
            if head.len() > sig {
                head.truncate(sig);
                exp10 += 1;
            }
        }
        let head = head.trim_end_matches('0');
        let head = if head.is_empty() { "1" } else { head };
        let sign = if negative { "-" } else { "" };
        if head.len() == 1 {
            format!("{sign}{head}e{exp10}")
        } else {
            format!("{sign}{}.{}e{exp10}", &head[..1], &head[1..])
        }
    }
}

/// An interval enclosure `[lo, hi]` with dyadic endpoints.
#[derive(Debug, Clone)]
pub struct Real {
    lo: Dyadic,
    hi: Dyadic,
}

impl Real {
    pub fn point(d: Dyadic) -> Real {
        Real {
            lo: d.clone(),
            hi: d,
        }
    }

    pub fn interval(lo: Dyadic, hi: Dyadic) -> Real {
        debug_assert!(lo.cmp_val(&hi) != Ordering::Greater);
        Real { lo, hi }
    }

    pub fn from_int(v: impl Into<BigInt>, _prec: Precision) -> Real {
        Real::point(Dyadic::from_int(v))
    }

    pub fn from_u64(v: u64, prec: Precision) -> Real {
        Real::from_int(BigInt::from(v), prec)
    }

    pub fn from_f64(v: f64) -> Real {
        Real::point(Dyadic::from_f64(v))
    }

    /// Enclosure of `num / den`, `den != 0`.
    pub fn from_ratio(num: impl Into<BigInt>, den: impl Into<BigInt>, prec: Precision) -> Real {
        let (n, d) = (Dyadic::from_int(num), Dyadic::from_int(den));
        Real::interval(
            n.div(&d, prec.guarded(), Dir::Down),
            n.div(&d, prec.guarded(), Dir::Up),
        )
    }

    /// Parses a plain decimal literal ("2.63", "-0.5", "1045") exactly.
    pub fn from_decimal(s: &str, prec: Precision) -> Real {
        let (num, den) = parse_decimal(s);
        Real::from_ratio(num, den, prec)
    }

    pub fn lo(&self) -> &Dyadic {
        &self.lo
    }

    pub fn hi(&self) -> &Dyadic {
        &self.hi
    }

    pub fn width(&self) -> Dyadic {
        self.hi.sub(&self.lo)
    }

    pub fn is_strictly_positive(&self) -> bool {
        self.lo.is_positive()
    }

    pub fn neg(&self) -> Real {
        Real {
            lo: self.hi.neg(),
            hi: self.lo.neg(),
        }
    }

    pub fn add(&self, other: &Real, prec: Precision) -> Real {
        Real::interval(
            self.lo.add(&other.lo).round(prec.guarded(), Dir::Down),
            self.hi.add(&other.hi).round(prec.guarded(), Dir::Up),
        )
    }

    pub fn sub(&self, other: &Real, prec: Precision) -> Real {
        self.add(&other.neg(), prec)
    }

    pub fn mul(&self, other: &Real, prec: Precision) -> Real {
        let products = [
            self.lo.mul(&other.lo),
            self.lo.mul(&other.hi),
            self.hi.mul(&other.lo),
            self.hi.mul(&other.hi),
        ];
        let mut lo = products[0].clone();
        let mut hi = products[0].clone();
        for p in &products[1..] {
            if p.cmp_val(&lo) == Ordering::Less {
                lo = p.clone();
            }
            if p.cmp_val(&hi) == Ordering::Greater {
                hi = p.clone();
            }
        }
        Real::interval(
            lo.round(prec.guarded(), Dir::Down),
            hi.round(prec.guarded(), Dir::Up),
        )
    }

    /// Interval division; `other` must not contain zero.
    pub fn div(&self, other: &Real, prec: Precision) -> Real {
        assert!(
            other.lo.is_positive() || other.hi.is_negative(),
            "divisor interval must be sign-definite"
        );
        let p = prec.guarded();
        let mut lo: Option<Dyadic> = None;
        let mut hi: Option<Dyadic> = None;
        for a in [&self.lo, &self.hi] {
            for b in [&other.lo, &other.hi] {
                let down = a.div(b, p, Dir::Down);
                let up = a.div(b, p, Dir::Up);
                if lo
                    .as_ref()
                    .is_none_or(|l| down.cmp_val(l) == Ordering::Less)
                {
                    lo = Some(down);
                }
                if hi
                    .as_ref()
                    .is_none_or(|h| up.cmp_val(h) == Ordering::Greater)
                {
                    hi = Some(up);
                }
            }
        }
        Real::interval(lo.unwrap(), hi.unwrap())
    }

    pub fn div_u64(&self, den: u64, prec: Precision) -> Real {
        self.div(&Real::from_u64(den, prec), prec)
    }

    pub fn max(&self, other: &Real) -> Real {
        Real::interval(
            if self.lo.cmp_val(&other.lo) == Ordering::Greater {
                self.lo.clone()
            } else {
                other.lo.clone()
            },
            if self.hi.cmp_val(&other.hi) == Ordering::Greater {
                self.hi.clone()
            } else {
                other.hi.clone()
            },
        )
    }

    /// Integer power by interval squaring.
    pub fn powi(&self, e: u64, prec: Precision) -> Real {
        let mut result = Real::point(Dyadic::one());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base, prec);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base, prec);
            }
        }
        result
    }

    pub fn shl2(&self, k: i64) -> Real {
        Real {
            lo: self.lo.shl2(k),
            hi: self.hi.shl2(k),
        }
    }

    /// Natural logarithm; requires a strictly positive enclosure.
    pub fn ln(&self, prec: Precision) -> Real {
        assert!(self.lo.is_positive(), "ln requires a positive enclosure");
        Real::interval(
            ln_point(&self.lo, prec, Dir::Down),
            ln_point(&self.hi, prec, Dir::Up),
        )
    }

    pub fn exp(&self, prec: Precision) -> Real {
        Real::interval(
            exp_point(&self.lo, prec, Dir::Down),
            exp_point(&self.hi, prec, Dir::Up),
        )
    }

    /// Square root; requires a nonnegative enclosure.
    pub fn sqrt(&self, prec: Precision) -> Real {
        assert!(
            !self.lo.is_negative(),
            "sqrt requires a nonnegative enclosure"
        );
        Real::interval(
            sqrt_point(&self.lo, prec, Dir::Down),
            sqrt_point(&self.hi, prec, Dir::Up),
        )
    }

    /// Real power `self^y = exp(y ln self)`; the base must be positive, or
    /// zero with a positive exponent (then `0^y = 0` is used exactly).
    pub fn powf(&self, y: &Real, prec: Precision) -> Real {
        if self.lo.is_zero() && self.hi.is_zero() {
            assert!(y.lo.is_positive(), "0^y needs y > 0");
            return Real::point(Dyadic::zero());
        }
        if self.lo.is_zero() {
            assert!(y.lo.is_positive(), "0^y needs y > 0");
            let upper = Real::point(self.hi.clone()).ln(prec).mul(y, prec).exp(prec);
            return Real::interval(Dyadic::zero(), upper.hi.clone());
        }
        self.ln(prec).mul(y, prec).exp(prec)
    }

    /// Does the enclosure contain the exact value of a decimal literal?
    pub fn contains_decimal(&self, s: &str) -> bool {
        let (num, den) = parse_decimal(s);
        self.lo.cmp_ratio(&num, &den) != Ordering::Greater
            && self.hi.cmp_ratio(&num, &den) != Ordering::Less
    }

    /// Does the enclosure sit inside `literal ± ulps` units of the literal's
    /// last *significant* digit? The right check against a reference value
    /// that was rounded at its final digit.
    pub fn within_decimal(&self, s: &str, ulps: u32) -> bool {
        let (num, den, unit) = parse_decimal_with_unit(s);
        let slack = BigInt::from(ulps) * unit;
        self.lo.cmp_ratio(&(&num - &slack), &den) != Ordering::Less
            && self.hi.cmp_ratio(&(&num + &slack), &den) != Ordering::Greater
    }

    /// `[lo, hi]` nests inside `[outer.lo, outer.hi]`.
    pub fn nests_inside(&self, outer: &Real) -> bool {
        outer.lo.cmp_val(&self.lo) != Ordering::Greater
            && self.hi.cmp_val(&outer.hi) != Ordering::Greater
    }

    pub fn to_f64(&self) -> f64 {
        (self.lo.to_f64() + self.hi.to_f64()) / 2.0
    }
}

/// Parses a decimal literal with optional exponent ("2.63", "-0.5",
/// "2.02e12", "1e-3") into an exact `num / den` pair, `den > 0`.
pub fn parse_decimal(s: &str) -> (BigInt, BigInt) {
    let s = s.trim();
    let (body, exp10) = match s.split_once(['e', 'E']) {
        Some((b, e)) => (b, e.parse::<i64>().expect("exponent digits")),
        None => (s, 0),
    };
    let (sign, body) = match body.strip_prefix('-') {
        Some(rest) => (-1, rest),
        None => (1, body.strip_prefix('+').unwrap_or(body)),
    };
    let (int_part, frac_part) = match body.split_once('.') {
        Some((i, f)) => (i, f),
        None => (body, ""),
    };
    let digits: String = format!("{int_part}{frac_part}");
    assert!(
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit()),
        "malformed decimal literal {s:?}"
    );
    let mut num: BigInt = digits.parse::<BigInt>().expect("digits") * sign;
    let scale = exp10 - frac_part.len() as i64;
    let mut den = BigInt::one();
    if scale >= 0 {
        num *= BigInt::from(10).pow(scale as u32);
    } else {
        den = BigInt::from(10).pow((-scale) as u32);
    }
    (num, den)
}

/// Like [`parse_decimal`], also returning the weight of one unit in the
/// literal's last significant digit, as a numerator over the same `den`.
fn parse_decimal_with_unit(s: &str) -> (BigInt, BigInt, BigInt) {
    let (num, den) = parse_decimal(s);
    let exp10 = match s.split_once(['e', 'E']) {
        Some((_, e)) => e.parse::<i64>().expect("exponent digits"),
        None => 0,
    };
    let frac_len = match s.split_once(['e', 'E']) {
        Some((b, _)) => b,
        None => s,
    }
    .split_once('.')
    .map_or(0, |(_, f)| f.len() as i64);
    let scale = exp10 - frac_len;
    let unit = if scale >= 0 {
        BigInt::from(10).pow(scale as u32)
    } else {
        BigInt::one()
    };
    (num, den, unit)
}

/// `[ln 2]` enclosure via `2 atanh(1/3)`.
pub fn ln2(prec: Precision) -> Real {
    let p = prec.guarded();
    let third_lo = Dyadic::one().div(&Dyadic::from_int(3), p, Dir::Down);
    let third_hi = Dyadic::one().div(&Dyadic::from_int(3), p, Dir::Up);
    Real::interval(
        atanh_series(&third_lo, p, Dir::Down).shl2(1),
        atanh_series(&third_hi, p, Dir::Up).shl2(1),
    )
}

/// Sum of `z + z^3/3 + z^5/5 + ...` for `0 <= z < 1/2`, rounded toward
/// `dir`. Truncation under-estimates, so `Down` adds no tail; `Up` adds the
/// geometric tail bound `z^(2T+1) / (1 - z^2) <= 2 z^(2T+1)`.
fn atanh_series(z: &Dyadic, p: Precision, dir: Dir) -> Dyadic {
    assert!(!z.is_negative());
    if z.is_zero() {
        return Dyadic::zero();
    }
    debug_assert!(
        z.magnitude_bound().unwrap() <= -1,
        "argument reduction gives z < 1/2"
    );
    let zz = z.mul(z).round(p, dir);
    let threshold = -(p.bit_count() as i64 + 2);
    let mut term = z.clone();
    let mut sum = Dyadic::zero();
    let mut i: u64 = 0;
    loop {
        let contrib = term.div(&Dyadic::from_int(BigInt::from(2 * i + 1)), p, dir);
        sum = sum.add(&contrib).round(p, dir);
        i += 1;
        term = term.mul(&zz).round(p, dir);
        if term.magnitude_bound().is_none_or(|b| b < threshold) {
            break;
        }
    }
    if dir == Dir::Up {
        sum = sum.add(&term.shl2(1)).round(p, Dir::Up);
    }
    sum
}

fn ln_point(d: &Dyadic, prec: Precision, dir: Dir) -> Dyadic {
    assert!(d.is_positive());
    let p = prec.guarded();
    let bits = d.mant_bits() as i64;
    let k = d.exp + bits - 1; // d = m * 2^k with m in [1, 2)
    let m = Dyadic {
        mant: d.mant.clone(),
        exp: -(bits - 1),
    };
    // ln m = 2 atanh((m - 1)/(m + 1)), argument in [0, 1/3).
    let num = m.sub(&Dyadic::one());
    let den = m.add(&Dyadic::one());
    let z = num.div(&den, p, dir);
    let ln_m = atanh_series(&z, p, dir).shl2(1);
    let l2 = ln2(prec);
    let k_ln2 = if k >= 0 {
        let side = if dir == Dir::Down { l2.lo() } else { l2.hi() };
        side.mul(&Dyadic::from_int(k))
    } else {
        let side = if dir == Dir::Down { l2.hi() } else { l2.lo() };
        side.mul(&Dyadic::from_int(k))
    };
    ln_m.add(&k_ln2).round(prec, dir)
}

fn exp_point(d: &Dyadic, prec: Precision, dir: Dir) -> Dyadic {
    let p = prec.guarded();
    // Argument reduction: exp(d) = 2^k exp(r), r = d - k ln 2, |r| <= 0.7.
    let approx = d.to_f64();
    assert!(approx.abs() < 1e15, "exp argument out of supported range");
    let k = (approx / std::f64::consts::LN_2).round() as i64;
    let l2 = ln2(prec);
    let k_real = Real::from_int(BigInt::from(k), prec);
    let r = Real::point(d.clone()).sub(&k_real.mul(&l2, prec), prec);
    debug_assert!(r.lo.cmp_val(&Dyadic::from_f64(-0.75)) == Ordering::Greater);
    debug_assert!(r.hi.cmp_val(&Dyadic::from_f64(0.75)) == Ordering::Less);

    let threshold = -(p.bit_count() as i64 + 2);
    let mut term = Real::point(Dyadic::one());
    let mut sum = Real::point(Dyadic::one());
    let mut i: u64 = 1;
    loop {
        term = term.mul(&r, prec).div_u64(i, prec);
        sum = sum.add(&term, prec);
        let done = [&term.lo, &term.hi]
            .iter()
            .all(|t| t.magnitude_bound().is_none_or(|b| b < threshold));
        if done {
            break;
        }
        i += 1;
        assert!(i < 10_000, "exp series failed to converge");
    }
    // Geometric tail: |r| <= 0.75 < (i+1)/2 from the first term on.
    let tail = Dyadic::new(BigInt::one(), threshold + 1);
    let sum = Real::interval(
        sum.lo.sub(&tail).round(p, Dir::Down),
        sum.hi.add(&tail).round(p, Dir::Up),
    );
    let side = match dir {
        Dir::Down => sum.lo,
        Dir::Up => sum.hi,
    };
    side.shl2(k).round(prec, dir)
}

fn sqrt_point(d: &Dyadic, prec: Precision, dir: Dir) -> Dyadic {
    assert!(!d.is_negative());
    if d.is_zero() {
        return Dyadic::zero();
    }
    let p = prec.guarded();
    let bits = d.mant_bits() as i64;
    let mut t = (2 * p.bit_count() as i64 - bits).max(0);
    if (d.exp - t) % 2 != 0 {
        t += 1;
    }
    let shifted = &d.mant << t as u64;
    let root = shifted.sqrt();
    let exact = (&root * &root) == shifted;
    let mant = match dir {
        Dir::Down => root,
        Dir::Up => {
            if exact {
                root
            } else {
                root + 1
            }
        }
    };
    Dyadic::new(mant, (d.exp - t) / 2).round(prec, dir)
}
