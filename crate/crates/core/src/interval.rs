//! Rational-endpoint interval arithmetic.
//!
//! Used as the fast path for sign and positivity decisions on field elements.
//! Every decision made with intervals has an exact symbolic fallback in the
//! callers, so widening is always safe and narrowing is only a speed matter.

use crate::rat::{isqrt_floor, Int, Rat};
use num::{One, Signed, Zero};
use std::cmp::Ordering;

#[derive(Debug, Clone, PartialEq)]
pub struct Interval {
    pub lo: Rat,
    pub hi: Rat,
}

impl Interval {
    pub fn new(lo: Rat, hi: Rat) -> Self {
        assert!(lo <= hi, "interval endpoints out of order");
        Interval { lo, hi }
    }

    pub fn point(x: Rat) -> Self {
        Interval { lo: x.clone(), hi: x }
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn contains(&self, x: &Rat) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    /// Definite sign of every point in the interval, if there is one.
    pub fn sign(&self) -> Option<Ordering> {
        if self.lo.is_positive() {
            Some(Ordering::Greater)
        } else if self.hi.is_negative() {
            Some(Ordering::Less)
        } else if self.lo.is_zero() && self.hi.is_zero() {
            Some(Ordering::Equal)
        } else {
            None
        }
    }

    pub fn add(&self, rhs: &Interval) -> Interval {
        Interval::new(&self.lo + &rhs.lo, &self.hi + &rhs.hi)
    }

    pub fn sub(&self, rhs: &Interval) -> Interval {
        Interval::new(&self.lo - &rhs.hi, &self.hi - &rhs.lo)
    }

    pub fn neg(&self) -> Interval {
        Interval::new(-self.hi.clone(), -self.lo.clone())
    }

    pub fn mul(&self, rhs: &Interval) -> Interval {
        let cands = [
            &self.lo * &rhs.lo,
            &self.lo * &rhs.hi,
            &self.hi * &rhs.lo,
            &self.hi * &rhs.hi,
        ];
        let lo = cands.iter().min().unwrap().clone();
        let hi = cands.iter().max().unwrap().clone();
        Interval::new(lo, hi)
    }

    pub fn scale(&self, c: &Rat) -> Interval {
        if c.is_negative() {
            Interval::new(&self.hi * c, &self.lo * c)
        } else {
            Interval::new(&self.lo * c, &self.hi * c)
        }
    }

    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }
}

/// Enclosure of sqrt(x) for an interval with x.lo >= 0, to roughly `bits`
/// fractional bits.
pub fn sqrt_interval(x: &Interval, bits: u32) -> Interval {
    assert!(!x.lo.is_negative(), "sqrt of a possibly negative interval");
    Interval::new(sqrt_lower(&x.lo, bits), sqrt_upper(&x.hi, bits))
}

fn sqrt_lower(r: &Rat, bits: u32) -> Rat {
    let scale: Int = Int::one() << bits;
    // sqrt(a/b) >= floor(sqrt(a*b*s^2)) / (b*s)
    let t = isqrt_floor(&(r.numer() * r.denom() * &scale * &scale));
    Rat::new(t, r.denom() * &scale)
}

fn sqrt_upper(r: &Rat, bits: u32) -> Rat {
    let scale: Int = Int::one() << bits;
    let t = isqrt_floor(&(r.numer() * r.denom() * &scale * &scale));
    Rat::new(t + 1, r.denom() * &scale)
}

/// Enclosure of sqrt(5).
pub fn sqrt5(bits: u32) -> Interval {
    sqrt_interval(&Interval::point(Rat::from_integer(Int::from(5))), bits)
}

/// Box around a complex value.
#[derive(Debug, Clone)]
pub struct ComplexBox {
    pub re: Interval,
    pub im: Interval,
}

impl ComplexBox {
    pub fn add(&self, rhs: &ComplexBox) -> ComplexBox {
        ComplexBox { re: self.re.add(&rhs.re), im: self.im.add(&rhs.im) }
    }

    pub fn scale(&self, c: &Rat) -> ComplexBox {
        ComplexBox { re: self.re.scale(c), im: self.im.scale(c) }
    }
}

/// Enclosures of the two complex embeddings of a field element; the first
/// sends the generator to exp(2 pi i / 5), the second to exp(6 pi i / 5).
#[derive(Debug, Clone)]
pub struct EmbeddingApprox {
    pub iota1: ComplexBox,
    pub iota2: ComplexBox,
    pub bits: u32,
}

/// cos and sin boxes for the four primitive fifth roots of unity zeta^j,
/// j = 1..4, in that order.
pub fn fifth_root_boxes(bits: u32) -> [ComplexBox; 4] {
    let s5 = sqrt5(bits);
    let quarter = Rat::new(Int::one(), Int::from(4));
    // cos 72 = (sqrt5 - 1)/4, cos 144 = -(sqrt5 + 1)/4
    let one = Interval::point(Rat::one());
    let cos72 = s5.sub(&one).scale(&quarter);
    let cos144 = s5.add(&one).neg().scale(&quarter);
    // sin 72 = sqrt(10 + 2 sqrt5)/4, sin 144 = sqrt(10 - 2 sqrt5)/4
    let ten = Interval::point(Rat::from_integer(Int::from(10)));
    let two = Rat::from_integer(Int::from(2));
    let sin72 = sqrt_interval(&ten.add(&s5.scale(&two)), bits).scale(&quarter);
    let sin144 = sqrt_interval(&ten.sub(&s5.scale(&two)), bits).scale(&quarter);
    [
        ComplexBox { re: cos72.clone(), im: sin72.clone() },
        ComplexBox { re: cos144.clone(), im: sin144.clone() },
        ComplexBox { re: cos144, im: sin144.neg() },
        ComplexBox { re: cos72, im: sin72.neg() },
    ]
}
