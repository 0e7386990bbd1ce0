//! Exact rational scalars used throughout the crate.
//!
//! Every intersection number, slope, and Euler characteristic in this crate
//! is an exact rational with arbitrary-precision integer numerator and
//! denominator. There is no floating point anywhere.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};

/// Exact rational scalar: arbitrary-precision numerator and denominator.
pub type Rat = BigRational;

/// The rational `n`.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// The rational `n/d`. Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// True iff `r` has denominator 1.
pub fn is_integer(r: &Rat) -> bool {
    r.denom().is_one()
}

/// True iff `r` is an even integer.
pub fn is_even_integer(r: &Rat) -> bool {
    is_integer(r) && (r.numer() % BigInt::from(2)).is_zero()
}

/// Canonical text form: `p` for integers, `p/q` otherwise, always reduced.
pub fn fmt_rat(r: &Rat) -> String {
    if is_integer(r) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses the output of [`fmt_rat`]: an optionally signed integer or `p/q`.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        None => s.parse::<BigInt>().ok().map(Rat::from_integer),
        Some((p, q)) => {
            let p = p.trim().parse::<BigInt>().ok()?;
            let q = q.trim().parse::<BigInt>().ok()?;
            if q.is_zero() {
                None
            } else {
                Some(Rat::new(p, q))
            }
        }
    }
}

/// gcd of two integers, always nonnegative.
pub fn gcd_i64(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Nonnegative remainder of `a` modulo `n > 0`.
pub fn rem_euclid_i64(a: i64, n: i64) -> i64 {
    a.rem_euclid(n)
}

/// True iff the largest odd divisor of `n > 0` is a perfect square.
pub fn odd_part_is_square(n: u64) -> bool {
    let mut m = n;
    while m.is_multiple_of(2) {
        m /= 2;
    }
    let r = isqrt_u64(m);
    r * r == m
}

/// Integer square root (floor), by Newton iteration on integers.
fn isqrt_u64(n: u64) -> u64 {
    if n < 2 {
        return n;
    }
    let mut x = n;
    let mut y = x.div_ceil(2);
    while y < x {
        x = y;
        y = (x + n / x) / 2;
    }
    x
}
