//! Partition numbers: the count of similarity classes of permutation matrices
//! of order `n` is `p(n)`.
//!
//! Exact values come from Euler's pentagonal-number recursion
//!
//! ```text
//! p(n) = Σ_{k=1}^{k1} (-1)^(k-1) p(n - (3k²+k)/2) + Σ_{k=1}^{k2} (-1)^(k-1) p(n - (3k²-k)/2)
//! k1 = ⌊(√(24n+1) - 1)/6⌋,  k2 = ⌊(√(24n+1) + 1)/6⌋,  p(0) = 1
//! ```
//!
//! and three closed-form estimates built on `E(n) = exp(π √(2/3) √n)`:
//!
//! * Hardy–Ramanujan: `E(n) / (4 n √3)`;
//! * small `n` (3..=80): `⌊E(n) / (4√3 (n + C(n))) + 1/2⌋` with a parity
//!   dependent correction `C(n) = s √(n + h) + o`;
//! * large `n` (>= 80): `⌊E(n) / (4√3 (n + a √(n + c) + b)) + 1/2⌋`.
//!
//! Estimates are evaluated with `astro-float` at a configurable number of
//! decimal digits (default 50, overridable through `PERMCLASS_PRECISION`).

use std::sync::{OnceLock, RwLock};

use astro_float::{BigFloat, Consts, Radix, RoundingMode};
use num_bigint::{BigInt, BigUint};
use num_integer::Roots;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::cycle_structure::CycleType;
use crate::error::{Error, Result};
use crate::perm::Permutation;

pub use astro_float::BigFloat as Real;

pub const DEFAULT_PRECISION_DIGITS: usize = 50;
pub const PRECISION_ENV: &str = "PERMCLASS_PRECISION";

/// Published constants of the modified estimators, as decimal text.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EstimatorConstants {
    pub odd_scale: &'static str,
    pub odd_shift: &'static str,
    pub odd_offset: &'static str,
    pub even_scale: &'static str,
    pub even_shift: &'static str,
    pub even_offset: &'static str,
    pub a2: &'static str,
    pub b2: &'static str,
    pub c2: &'static str,
}

impl EstimatorConstants {
    pub const PUBLISHED: EstimatorConstants = EstimatorConstants {
        odd_scale: "0.4527092482",
        odd_shift: "4.35278",
        odd_offset: "-0.05498719946",
        even_scale: "0.4412187317",
        even_shift: "-2.01699",
        even_offset: "0.2102618735",
        a2: "0.4432884566",
        b2: "0.1325096085",
        c2: "0.274078",
    };
}

pub const SMALL_RANGE: std::ops::RangeInclusive<u64> = 3..=80;
pub const LARGE_MIN: u64 = 80;

/// Memoized `p(0..=max_n)`. Readers share the table; extension takes the
/// write lock. Published entries never change.
#[derive(Debug)]
pub struct PartitionTable {
    values: RwLock<Vec<BigUint>>,
}

impl Default for PartitionTable {
    fn default() -> Self {
        Self::new()
    }
}

impl PartitionTable {
    pub fn new() -> Self {
        PartitionTable {
            values: RwLock::new(vec![BigUint::from(1u32)]),
        }
    }

    /// Largest `n` computed so far.
    pub fn max_n(&self) -> usize {
        self.values.read().unwrap().len() - 1
    }

    pub fn get(&self, n: usize) -> BigUint {
        if let Some(v) = self.values.read().unwrap().get(n) {
            return v.clone();
        }
        let mut values = self.values.write().unwrap();
        while values.len() <= n {
            let m = values.len();
            let next = recurrence_step(&values, m);
            values.push(next);
        }
        values[n].clone()
    }

    /// `p(0..=n)`, extending the table as needed.
    pub fn prefix(&self, n: usize) -> Vec<BigUint> {
        self.get(n);
        self.values.read().unwrap()[..=n].to_vec()
    }
}

fn recurrence_step(values: &[BigUint], m: usize) -> BigUint {
    let (k1, k2) = pentagonal_limits(m as u64);
    let mut plus = BigUint::zero();
    let mut minus = BigUint::zero();
    let mut add = |k: u64, offset: u64| {
        let term = &values[m - offset as usize];
        if k % 2 == 1 {
            plus += term;
        } else {
            minus += term;
        }
    };
    for k in 1..=k1 {
        add(k, (3 * k * k + k) / 2);
    }
    for k in 1..=k2 {
        add(k, (3 * k * k - k) / 2);
    }
    plus - minus
}

/// Summation limits `(k1, k2)` of the recursion, via integer square root.
///
/// `⌊(√x - 1)/6⌋ = ⌊(⌊√x⌋ - 1)/6⌋` because `6m + 1` is an integer, and the
/// same holds for the `+ 1` variant.
pub fn pentagonal_limits(n: u64) -> (u64, u64) {
    let s = (24 * n + 1).sqrt();
    ((s - 1) / 6, (s + 1) / 6)
}

fn global_table() -> &'static PartitionTable {
    static TABLE: OnceLock<PartitionTable> = OnceLock::new();
    TABLE.get_or_init(PartitionTable::new)
}

/// `p(n)`, memoized in a process-wide table.
pub fn partition_exact(n: u64) -> BigUint {
    global_table().get(n as usize)
}

/// Number of similarity classes of permutation matrices of order `n`.
pub fn class_count(n: u64) -> BigUint {
    partition_exact(n)
}

/// Decimal digits requested through `PERMCLASS_PRECISION`, or the default.
pub fn precision_digits() -> usize {
    std::env::var(PRECISION_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&d| d > 0)
        .unwrap_or(DEFAULT_PRECISION_DIGITS)
}

struct Ctx {
    bits: usize,
    rm: RoundingMode,
    cc: Consts,
}

impl Ctx {
    fn new(digits: usize) -> Self {
        // log2(10) bits per digit plus a guard word
        let bits = (digits as f64 * std::f64::consts::LOG2_10).ceil() as usize + 64;
        Ctx {
            bits,
            rm: RoundingMode::ToEven,
            cc: Consts::new().expect("constant cache"),
        }
    }

    fn int(&self, v: u64) -> BigFloat {
        BigFloat::from_u64(v, self.bits)
    }

    fn parse(&mut self, s: &str) -> BigFloat {
        BigFloat::parse(s, Radix::Dec, self.bits, self.rm, &mut self.cc)
    }

    fn add(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.add(b, self.bits, self.rm)
    }

    fn mul(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.mul(b, self.bits, self.rm)
    }

    fn div(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.div(b, self.bits, self.rm)
    }

    fn sqrt(&self, a: &BigFloat) -> BigFloat {
        a.sqrt(self.bits, self.rm)
    }

    /// `exp(π √(2/3) √n)`.
    fn growth(&mut self, n: u64) -> BigFloat {
        let two_thirds = self.div(&self.int(2), &self.int(3));
        let pi = self.cc.pi(self.bits, self.rm);
        let arg = self.mul(
            &self.mul(&self.sqrt(&two_thirds), &pi),
            &self.sqrt(&self.int(n)),
        );
        arg.exp(self.bits, self.rm, &mut self.cc)
    }

    /// `E(n) / (4 √3 · tail)`.
    fn scaled(&mut self, n: u64, tail: &BigFloat) -> BigFloat {
        let growth = self.growth(n);
        let four_root3 = self.mul(&self.int(4), &self.sqrt(&self.int(3)));
        self.div(&growth, &self.mul(&four_root3, tail))
    }

    fn round_half_up(&self, x: &BigFloat) -> BigUint {
        let half = self.div(&self.int(1), &self.int(2));
        to_biguint(&self.add(x, &half).floor())
    }
}

/// Integer part of a nonnegative finite value.
fn to_biguint(x: &BigFloat) -> BigUint {
    let Some((words, _, _, exponent, _)) = x.as_raw_parts() else {
        panic!("non-finite estimate");
    };
    assert!(!x.is_negative(), "negative estimate");
    // value = 0.M × 2^exponent with M spanning all mantissa words
    let mantissa = BigUint::from_bytes_le(
        &words
            .iter()
            .flat_map(|w| w.to_le_bytes())
            .collect::<Vec<u8>>(),
    );
    let width = (words.len() * std::mem::size_of_val(&words[0]) * 8) as i64;
    let shift = width - exponent as i64;
    if shift >= width {
        BigUint::zero()
    } else if shift >= 0 {
        mantissa >> shift as usize
    } else {
        mantissa << (-shift) as usize
    }
}

fn require(n: u64, ok: bool, what: &'static str, domain: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::OutOfRange {
            what,
            detail: format!("n = {n} is outside {domain}"),
        })
    }
}

/// Hardy–Ramanujan asymptotic `E(n) / (4 n √3)` at `digits` decimal digits.
pub fn hr_estimate_with(n: u64, digits: usize) -> Result<Real> {
    require(n, n >= 1, "Hardy-Ramanujan estimate", "n >= 1")?;
    let mut ctx = Ctx::new(digits);
    let tail = ctx.int(n);
    Ok(ctx.scaled(n, &tail))
}

pub fn hr_estimate(n: u64) -> Result<Real> {
    hr_estimate_with(n, precision_digits())
}

/// Estimator with the parity-dependent correction, valid for `3 <= n <= 80`.
pub fn modified_estimate_small_with(n: u64, digits: usize) -> Result<BigUint> {
    require(n, SMALL_RANGE.contains(&n), "small-n estimate", "3..=80")?;
    let c = EstimatorConstants::PUBLISHED;
    let mut ctx = Ctx::new(digits);
    let (scale, shift, offset) = if n % 2 == 1 {
        (c.odd_scale, c.odd_shift, c.odd_offset)
    } else {
        (c.even_scale, c.even_shift, c.even_offset)
    };
    let (scale, shift, offset) = (ctx.parse(scale), ctx.parse(shift), ctx.parse(offset));
    let correction = ctx.add(
        &ctx.mul(&scale, &ctx.sqrt(&ctx.add(&ctx.int(n), &shift))),
        &offset,
    );
    let tail = ctx.add(&ctx.int(n), &correction);
    let value = ctx.scaled(n, &tail);
    Ok(ctx.round_half_up(&value))
}

pub fn modified_estimate_small(n: u64) -> Result<BigUint> {
    modified_estimate_small_with(n, precision_digits())
}

/// Estimator for `n >= 80`.
pub fn modified_estimate_large_with(n: u64, digits: usize) -> Result<BigUint> {
    require(n, n >= LARGE_MIN, "large-n estimate", "n >= 80")?;
    let c = EstimatorConstants::PUBLISHED;
    let mut ctx = Ctx::new(digits);
    let (a2, b2, c2) = (ctx.parse(c.a2), ctx.parse(c.b2), ctx.parse(c.c2));
    let root = ctx.sqrt(&ctx.add(&ctx.int(n), &c2));
    let tail = ctx.add(&ctx.add(&ctx.int(n), &ctx.mul(&a2, &root)), &b2);
    let value = ctx.scaled(n, &tail);
    Ok(ctx.round_half_up(&value))
}

pub fn modified_estimate_large(n: u64) -> Result<BigUint> {
    modified_estimate_large_with(n, precision_digits())
}

/// `|estimate - exact| / exact`, computed exactly and rounded to `f64`.
pub fn relative_error_int(estimate: &BigUint, exact: &BigUint) -> f64 {
    let diff = BigInt::from(estimate.clone()) - BigInt::from(exact.clone());
    BigRational::new(diff, BigInt::from(exact.clone()))
        .to_f64()
        .map(f64::abs)
        .unwrap_or(f64::INFINITY)
}

/// `|estimate - exact| / exact` for a high-precision estimate.
pub fn relative_error_real(estimate: &Real, exact: &BigUint) -> f64 {
    let mut ctx = Ctx::new(estimate.precision().unwrap_or(256) * 3 / 10);
    let exact = ctx.parse(&exact.to_string());
    let ratio = ctx.div(estimate, &exact);
    let err = ratio.sub(&ctx.int(1), ctx.bits, ctx.rm).abs();
    real_to_f64(&err)
}

pub fn real_to_f64(x: &Real) -> f64 {
    x.to_string().parse().unwrap_or(f64::NAN)
}

/// Scientific notation with `sig` significant digits, e.g. `1.9956e+8`.
pub fn format_real(x: &Real, sig: usize) -> String {
    let text = x.to_string();
    let Some((mantissa, exponent)) = text.split_once('e') else {
        return text;
    };
    let (sign, mantissa) = match mantissa.strip_prefix('-') {
        Some(m) => ("-", m),
        None => ("", mantissa),
    };
    let mut digits: Vec<u8> = mantissa
        .bytes()
        .filter(u8::is_ascii_digit)
        .map(|b| b - b'0')
        .collect();
    let mut exp: i64 = exponent.parse().unwrap_or(0);
    let sig = sig.max(1);
    if digits.len() > sig {
        let round_up = digits[sig] >= 5;
        digits.truncate(sig);
        if round_up {
            let mut i = sig;
            loop {
                if i == 0 {
                    digits.insert(0, 1);
                    digits.truncate(sig);
                    exp += 1;
                    break;
                }
                i -= 1;
                if digits[i] == 9 {
                    digits[i] = 0;
                } else {
                    digits[i] += 1;
                    break;
                }
            }
        }
    }
    let body: String = digits.iter().map(|d| char::from(b'0' + d)).collect();
    let (head, tail) = body.split_at(1);
    if tail.is_empty() {
        format!("{sign}{head}e{exp:+}")
    } else {
        format!("{sign}{head}.{tail}e{exp:+}")
    }
}

/// Partitions of `n` as ascending part lists, in lexicographic order
/// (`[1, 1, 1, 1]`, `[1, 1, 2]`, `[1, 3]`, `[2, 2]`, `[4]` for `n = 4`).
///
/// Kelleher's rule-ascending generator: each step bumps the second-to-last
/// part and refills the tail with copies of it.
#[derive(Clone, Debug)]
pub struct AscendingPartitions {
    parts: Vec<usize>,
    k: usize,
    empty_pending: bool,
}

impl AscendingPartitions {
    pub fn new(n: usize) -> Self {
        let mut parts = vec![0; n + 1];
        if n > 0 {
            parts[1] = n;
        }
        AscendingPartitions {
            parts,
            k: usize::from(n > 0),
            empty_pending: n == 0,
        }
    }
}

impl Iterator for AscendingPartitions {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if std::mem::take(&mut self.empty_pending) {
            return Some(Vec::new());
        }
        if self.k == 0 {
            return None;
        }
        let a = &mut self.parts;
        let mut k = self.k;
        let x = a[k - 1] + 1;
        let mut y = a[k] - 1;
        k -= 1;
        while x <= y {
            a[k] = x;
            y -= x;
            k += 1;
        }
        a[k] = x + y;
        self.k = k;
        Some(a[..=k].to_vec())
    }
}

/// One canonical permutation per similarity class of order `n`: fixed points
/// for the parts equal to 1, then standard cycle blocks for the larger parts
/// in ascending order. Classes come in the order of [`AscendingPartitions`].
pub fn enumerate_class_representatives(n: usize) -> impl Iterator<Item = Permutation> {
    AscendingPartitions::new(n).map(move |parts| {
        let t = parts.iter().take_while(|&&x| x == 1).count();
        CycleType::new(n, t, parts[t..].to_vec())
            .expect("partition of n")
            .representative()
    })
}
