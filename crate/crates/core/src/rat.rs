//! Aliases and small helpers for exact rational arithmetic.

use crate::error::{Error, Result};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

pub type Int = BigInt;
pub type Rat = BigRational;

pub fn int(n: i64) -> Int {
    Int::from(n)
}

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

pub fn rat_from(n: Int) -> Rat {
    Rat::from_integer(n)
}

/// Formats a rational as `num/den`, or just `num` when the denominator is 1.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `num/den` or a plain integer literal.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let bad = || Error::BadRational(s.to_string());
    match s.split_once('/') {
        None => {
            let n: Int = s.trim().parse().map_err(|_| bad())?;
            Ok(Rat::from_integer(n))
        }
        Some((n, d)) => {
            let n: Int = n.trim().parse().map_err(|_| bad())?;
            let d: Int = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rat::new(n, d))
        }
    }
}

/// Floor of a nonnegative square root, exact.
pub fn isqrt_floor(n: &Int) -> Int {
    assert!(!n.is_negative(), "isqrt of negative integer");
    n.sqrt()
}

/// Largest integer m with m <= c + sqrt(r), for rational c and r >= 0.
pub fn floor_plus_sqrt(c: &Rat, r: &Rat) -> Int {
    assert!(!r.is_negative());
    // sqrt(a/b) = sqrt(a*b)/b with t = floor(sqrt(a*b)): t/b <= sqrt(r) < (t+1)/b
    let t = isqrt_floor(&(r.numer() * r.denom()));
    let lo = c + Rat::new(t.clone(), r.denom().clone());
    let hi = c + Rat::new(t + 1, r.denom().clone());
    let mut m = hi.floor().to_integer();
    let lo_floor = lo.floor().to_integer();
    // m is within one of the answer; walk down until (m - c)^2 <= r or m <= c.
    while m > lo_floor {
        let diff = Rat::from_integer(m.clone()) - c;
        if !diff.is_positive() || &diff * &diff <= *r {
            return m;
        }
        m -= 1;
    }
    m
}

/// Smallest integer m with m >= c - sqrt(r).
pub fn ceil_minus_sqrt(c: &Rat, r: &Rat) -> Int {
    -floor_plus_sqrt(&-c, r)
}

/// Clears denominators and divides by the content, preserving sign.
/// Returns the zero vector unchanged.
pub fn primitive_int_vector(v: &[Rat]) -> Vec<Int> {
    use num::Integer;
    if v.iter().all(|x| x.is_zero()) {
        return vec![Int::zero(); v.len()];
    }
    let mut den = Int::one();
    for x in v {
        den = den.lcm(x.denom());
    }
    let ints: Vec<Int> = v.iter().map(|x| (x * Rat::from_integer(den.clone())).to_integer()).collect();
    let mut g = Int::zero();
    for x in &ints {
        g = g.gcd(x);
    }
    ints.into_iter().map(|x| x / &g).collect()
}
