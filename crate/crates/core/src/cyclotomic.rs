//! Exact arithmetic in the degree-four field Q(z) with z^5 = 1, z != 1,
//! and in its real quadratic subfield.
//!
//! Elements are stored on the power basis {1, z, z^2, z^3} with the
//! reduction z^4 = -1 - z - z^2 - z^3. The real subfield is generated by
//! u = -z^2 - z^3, the golden ratio, with u^2 = u + 1. All operations are
//! exact over the rationals; sign questions about real embeddings are
//! settled by integer comparisons, never by floating point.

use crate::enumerate::{short_vectors, EnumMode, EnumRequest};
use crate::error::{Error, Result};
use crate::linalg::hnf_basis;
use crate::rat::{Int, Rat};
use num::{BigInt, One, Signed, Zero};
use once_cell::sync::Lazy;
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// The four automorphisms z -> z^e of the field, indexed by the exponent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GaloisTag {
    Id,
    Sigma2,
    Sigma3,
    Sigma4,
}

impl GaloisTag {
    /// Complex conjugation, z -> z^4.
    pub const CONJ: GaloisTag = GaloisTag::Sigma4;
    /// A generator of the Galois group, z -> z^3; it restricts to the
    /// nontrivial automorphism u -> 1 - u of the real subfield.
    pub const PRIME: GaloisTag = GaloisTag::Sigma3;

    pub fn exponent(self) -> usize {
        match self {
            GaloisTag::Id => 1,
            GaloisTag::Sigma2 => 2,
            GaloisTag::Sigma3 => 3,
            GaloisTag::Sigma4 => 4,
        }
    }

    pub fn from_exponent(e: usize) -> GaloisTag {
        match e % 5 {
            1 => GaloisTag::Id,
            2 => GaloisTag::Sigma2,
            3 => GaloisTag::Sigma3,
            4 => GaloisTag::Sigma4,
            _ => panic!("exponent must be invertible mod 5"),
        }
    }

    pub fn compose(self, other: GaloisTag) -> GaloisTag {
        GaloisTag::from_exponent(self.exponent() * other.exponent())
    }

    pub const ALL: [GaloisTag; 4] = [
        GaloisTag::Id,
        GaloisTag::Sigma2,
        GaloisTag::Sigma3,
        GaloisTag::Sigma4,
    ];
}

fn galois_coords<T>(c: &[T; 4], e: usize) -> [T; 4]
where
    T: Clone + Zero + Add<Output = T> + Sub<Output = T>,
{
    let mut out = [T::zero(), T::zero(), T::zero(), T::zero()];
    for (i, ci) in c.iter().enumerate() {
        match (i * e) % 5 {
            4 => {
                for o in out.iter_mut() {
                    *o = o.clone() - ci.clone();
                }
            }
            k => out[k] = out[k].clone() + ci.clone(),
        }
    }
    out
}

fn mul_coords<T>(a: &[T; 4], b: &[T; 4]) -> [T; 4]
where
    T: Clone + Zero + Add<Output = T> + Sub<Output = T> + Mul<Output = T>,
{
    let mut d = [T::zero(), T::zero(), T::zero(), T::zero(), T::zero()];
    for (i, ai) in a.iter().enumerate() {
        for (j, bj) in b.iter().enumerate() {
            let k = (i + j) % 5;
            d[k] = d[k].clone() + ai.clone() * bj.clone();
        }
    }
    let t = d[4].clone();
    [
        d[0].clone() - t.clone(),
        d[1].clone() - t.clone(),
        d[2].clone() - t.clone(),
        d[3].clone() - t,
    ]
}

/// An algebraic integer of the field: integer coordinates on {1, z, z^2, z^3}.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycInt {
    pub c: [Int; 4],
}

impl CycInt {
    pub fn new(c: [Int; 4]) -> CycInt {
        CycInt { c }
    }

    pub fn from_ints(c: [i64; 4]) -> CycInt {
        CycInt {
            c: c.map(BigInt::from),
        }
    }

    pub fn zero() -> CycInt {
        CycInt::from_ints([0, 0, 0, 0])
    }

    pub fn one() -> CycInt {
        CycInt::from_ints([1, 0, 0, 0])
    }

    pub fn zeta() -> CycInt {
        CycInt::from_ints([0, 1, 0, 0])
    }

    /// z^i, reduced to the basis.
    pub fn zeta_pow(i: usize) -> CycInt {
        match i % 5 {
            0 => CycInt::one(),
            4 => CycInt::from_ints([-1, -1, -1, -1]),
            k => {
                let mut c = [Int::zero(), Int::zero(), Int::zero(), Int::zero()];
                c[k] = Int::one();
                CycInt { c }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }

    pub fn galois(&self, tag: GaloisTag) -> CycInt {
        CycInt {
            c: galois_coords(&self.c, tag.exponent()),
        }
    }

    pub fn conj(&self) -> CycInt {
        self.galois(GaloisTag::CONJ)
    }

    pub fn to_num(&self) -> CycNum {
        CycNum {
            c: self.c.clone().map(Rat::from),
        }
    }

    /// x * conj(x), landing in the real subfield.
    pub fn rel_norm(&self) -> KNum {
        self.to_num().rel_norm().expect("x * conj(x) lies in the real subfield")
    }

    /// Sum of absolute values of the coordinates.
    pub fn l1(&self) -> Int {
        self.c.iter().map(|x| x.abs()).sum()
    }
}

impl fmt::Debug for CycInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for CycInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_num())
    }
}

impl Add for &CycInt {
    type Output = CycInt;
    fn add(self, rhs: &CycInt) -> CycInt {
        let mut c = self.c.clone();
        for (a, b) in c.iter_mut().zip(&rhs.c) {
            *a += b;
        }
        CycInt { c }
    }
}

impl Sub for &CycInt {
    type Output = CycInt;
    fn sub(self, rhs: &CycInt) -> CycInt {
        let mut c = self.c.clone();
        for (a, b) in c.iter_mut().zip(&rhs.c) {
            *a -= b;
        }
        CycInt { c }
    }
}

impl Mul for &CycInt {
    type Output = CycInt;
    fn mul(self, rhs: &CycInt) -> CycInt {
        CycInt {
            c: mul_coords(&self.c, &rhs.c),
        }
    }
}

impl Neg for &CycInt {
    type Output = CycInt;
    fn neg(self) -> CycInt {
        CycInt {
            c: self.c.clone().map(|x| -x),
        }
    }
}

impl Add for CycInt {
    type Output = CycInt;
    fn add(self, rhs: CycInt) -> CycInt {
        &self + &rhs
    }
}

impl Sub for CycInt {
    type Output = CycInt;
    fn sub(self, rhs: CycInt) -> CycInt {
        &self - &rhs
    }
}

impl Mul for CycInt {
    type Output = CycInt;
    fn mul(self, rhs: CycInt) -> CycInt {
        &self * &rhs
    }
}

impl Neg for CycInt {
    type Output = CycInt;
    fn neg(self) -> CycInt {
        -&self
    }
}

/// A field element: rational coordinates on {1, z, z^2, z^3}.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycNum {
    pub c: [Rat; 4],
}

impl CycNum {
    pub fn new(c: [Rat; 4]) -> CycNum {
        CycNum { c }
    }

    pub fn zero() -> CycNum {
        CycNum::from_rat(Rat::zero())
    }

    pub fn one() -> CycNum {
        CycNum::from_rat(Rat::one())
    }

    pub fn from_rat(r: Rat) -> CycNum {
        CycNum {
            c: [r, Rat::zero(), Rat::zero(), Rat::zero()],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.c[0].is_one() && self.c[1..].iter().all(|x| x.is_zero())
    }

    pub fn scale(&self, r: &Rat) -> CycNum {
        CycNum {
            c: self.c.clone().map(|x| x * r),
        }
    }

    pub fn galois(&self, tag: GaloisTag) -> CycNum {
        CycNum {
            c: galois_coords(&self.c, tag.exponent()),
        }
    }

    pub fn conj(&self) -> CycNum {
        self.galois(GaloisTag::CONJ)
    }

    /// Product of all four conjugates, a rational number.
    pub fn field_norm(&self) -> Rat {
        let prod = self
            * &(&self.galois(GaloisTag::Sigma2)
                * &(&self.galois(GaloisTag::Sigma3) * &self.galois(GaloisTag::Sigma4)));
        debug_assert!(prod.c[1..].iter().all(|x| x.is_zero()));
        prod.c[0].clone()
    }

    pub fn inv(&self) -> Result<CycNum> {
        let n = self.field_norm();
        if n.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let cof = &self.galois(GaloisTag::Sigma2)
            * &(&self.galois(GaloisTag::Sigma3) * &self.galois(GaloisTag::Sigma4));
        Ok(cof.scale(&n.recip()))
    }

    pub fn div(&self, rhs: &CycNum) -> Result<CycNum> {
        Ok(self * &rhs.inv()?)
    }

    /// x * conj(x) as an element of the real subfield.
    pub fn rel_norm(&self) -> Result<KNum> {
        (self * &self.conj()).to_k()
    }

    /// x + conj(x) as an element of the real subfield.
    pub fn trace_to_k(&self) -> Result<KNum> {
        (self + &self.conj()).to_k()
    }

    /// Absolute trace down to the rationals: each power of z has trace -1.
    pub fn trace_q(&self) -> Rat {
        &self.c[0] * Rat::from_integer(Int::from(4)) - &self.c[1] - &self.c[2] - &self.c[3]
    }

    /// Recognizes elements of the real subfield: coordinates (p, 0, -q, -q)
    /// correspond to p + q*u.
    pub fn to_k(&self) -> Result<KNum> {
        if self.c[1].is_zero() && self.c[2] == self.c[3] {
            Ok(KNum {
                p: self.c[0].clone(),
                q: -self.c[2].clone(),
            })
        } else {
            Err(Error::NotInRealSubfield(format!("{self}")))
        }
    }

    pub fn from_k(x: &KNum) -> CycNum {
        CycNum {
            c: [x.p.clone(), Rat::zero(), -x.q.clone(), -x.q.clone()],
        }
    }

    pub fn is_integral(&self) -> bool {
        self.c.iter().all(|x| x.is_integer())
    }

    pub fn to_int(&self) -> Option<CycInt> {
        if self.is_integral() {
            Some(CycInt {
                c: self.c.clone().map(|x| x.to_integer()),
            })
        } else {
            None
        }
    }
}

impl fmt::Debug for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, x) in self.c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let mag = x.abs();
            if first {
                if x.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if x.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if i == 1 {
                        write!(f, "z")?;
                    } else {
                        write!(f, "z^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl Add for &CycNum {
    type Output = CycNum;
    fn add(self, rhs: &CycNum) -> CycNum {
        let mut c = self.c.clone();
        for (a, b) in c.iter_mut().zip(&rhs.c) {
            *a += b;
        }
        CycNum { c }
    }
}

impl Sub for &CycNum {
    type Output = CycNum;
    fn sub(self, rhs: &CycNum) -> CycNum {
        let mut c = self.c.clone();
        for (a, b) in c.iter_mut().zip(&rhs.c) {
            *a -= b;
        }
        CycNum { c }
    }
}

impl Mul for &CycNum {
    type Output = CycNum;
    fn mul(self, rhs: &CycNum) -> CycNum {
        CycNum {
            c: mul_coords(&self.c, &rhs.c),
        }
    }
}

impl Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        CycNum {
            c: self.c.clone().map(|x| -x),
        }
    }
}

impl Add for CycNum {
    type Output = CycNum;
    fn add(self, rhs: CycNum) -> CycNum {
        &self + &rhs
    }
}

impl Sub for CycNum {
    type Output = CycNum;
    fn sub(self, rhs: CycNum) -> CycNum {
        &self - &rhs
    }
}

impl Mul for CycNum {
    type Output = CycNum;
    fn mul(self, rhs: CycNum) -> CycNum {
        &self * &rhs
    }
}

impl Neg for CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        -&self
    }
}

/// An element p + q*u of the real quadratic subfield, u the golden ratio.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KNum {
    pub p: Rat,
    pub q: Rat,
}

impl KNum {
    pub fn new(p: Rat, q: Rat) -> KNum {
        KNum { p, q }
    }

    pub fn from_ints(p: i64, q: i64) -> KNum {
        KNum {
            p: Rat::from(Int::from(p)),
            q: Rat::from(Int::from(q)),
        }
    }

    pub fn zero() -> KNum {
        KNum::from_ints(0, 0)
    }

    pub fn one() -> KNum {
        KNum::from_ints(1, 0)
    }

    /// The golden ratio u itself.
    pub fn u5() -> KNum {
        KNum::from_ints(0, 1)
    }

    /// u^n for any integer exponent (u is a unit: u^-1 = u - 1).
    pub fn u5_pow(n: i64) -> KNum {
        let step = if n >= 0 {
            KNum::u5()
        } else {
            KNum::from_ints(-1, 1)
        };
        let mut out = KNum::one();
        for _ in 0..n.unsigned_abs() {
            out = &out * &step;
        }
        out
    }

    pub fn from_rat(r: Rat) -> KNum {
        KNum {
            p: r,
            q: Rat::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.p.is_one() && self.q.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.q.is_zero()
    }

    pub fn is_integral(&self) -> bool {
        self.p.is_integer() && self.q.is_integer()
    }

    pub fn scale(&self, r: &Rat) -> KNum {
        KNum {
            p: &self.p * r,
            q: &self.q * r,
        }
    }

    /// The nontrivial automorphism u -> 1 - u.
    pub fn conj_k(&self) -> KNum {
        KNum {
            p: &self.p + &self.q,
            q: -self.q.clone(),
        }
    }

    /// Trace down to Q: 2p + q.
    pub fn trace(&self) -> Rat {
        &self.p + &self.p + &self.q
    }

    /// Norm down to Q: p^2 + pq - q^2.
    pub fn norm(&self) -> Rat {
        &self.p * &self.p + &self.p * &self.q - &self.q * &self.q
    }

    pub fn recip(&self) -> Result<KNum> {
        let n = self.norm();
        if n.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.conj_k().scale(&n.recip()))
    }

    pub fn div(&self, rhs: &KNum) -> Result<KNum> {
        Ok(self * &rhs.recip()?)
    }

    /// Writes p + q*u as r + s*sqrt(5).
    pub fn sqrt5_parts(&self) -> (Rat, Rat) {
        let half = Rat::new(Int::one(), Int::from(2));
        (&self.p + &self.q * &half, &self.q * half)
    }

    /// Exact sign at the real embedding sending u to (1 + sqrt 5)/2 when
    /// `positive_root` is true, to (1 - sqrt 5)/2 otherwise.
    pub fn sign_at(&self, positive_root: bool) -> Ordering {
        let (r, mut s) = self.sqrt5_parts();
        if !positive_root {
            s = -s;
        }
        sign_r_plus_s_sqrt5(&r, &s)
    }

    pub fn is_totally_positive(&self) -> bool {
        self.sign_at(true) == Ordering::Greater && self.sign_at(false) == Ordering::Greater
    }

    /// Totally positive or exactly zero.
    pub fn is_tp_or_zero(&self) -> bool {
        self.is_zero() || self.is_totally_positive()
    }

    pub fn to_cyc(&self) -> CycNum {
        CycNum::from_k(self)
    }
}

impl fmt::Debug for KNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for KNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        if self.q.is_zero() {
            return write!(f, "{}", self.p);
        }
        if self.p.is_zero() {
            if self.q.is_one() {
                return write!(f, "u");
            }
            return write!(f, "{}*u", self.q);
        }
        if self.q.is_negative() {
            let m = self.q.abs();
            if m.is_one() {
                write!(f, "{} - u", self.p)
            } else {
                write!(f, "{} - {}*u", self.p, m)
            }
        } else if self.q.is_one() {
            write!(f, "{} + u", self.p)
        } else {
            write!(f, "{} + {}*u", self.p, self.q)
        }
    }
}

impl Add for &KNum {
    type Output = KNum;
    fn add(self, rhs: &KNum) -> KNum {
        KNum {
            p: &self.p + &rhs.p,
            q: &self.q + &rhs.q,
        }
    }
}

impl Sub for &KNum {
    type Output = KNum;
    fn sub(self, rhs: &KNum) -> KNum {
        KNum {
            p: &self.p - &rhs.p,
            q: &self.q - &rhs.q,
        }
    }
}

impl Mul for &KNum {
    type Output = KNum;
    fn mul(self, rhs: &KNum) -> KNum {
        // (p1 + q1 u)(p2 + q2 u) with u^2 = u + 1.
        let qq = &self.q * &rhs.q;
        KNum {
            p: &self.p * &rhs.p + &qq,
            q: &self.p * &rhs.q + &self.q * &rhs.p + qq,
        }
    }
}

impl Neg for &KNum {
    type Output = KNum;
    fn neg(self) -> KNum {
        KNum {
            p: -self.p.clone(),
            q: -self.q.clone(),
        }
    }
}

impl Add for KNum {
    type Output = KNum;
    fn add(self, rhs: KNum) -> KNum {
        &self + &rhs
    }
}

impl Sub for KNum {
    type Output = KNum;
    fn sub(self, rhs: KNum) -> KNum {
        &self - &rhs
    }
}

impl Mul for KNum {
    type Output = KNum;
    fn mul(self, rhs: KNum) -> KNum {
        &self * &rhs
    }
}

impl Neg for KNum {
    type Output = KNum;
    fn neg(self) -> KNum {
        -&self
    }
}

/// Exact sign of r + s*sqrt(5) for rational r, s.
fn sign_r_plus_s_sqrt5(r: &Rat, s: &Rat) -> Ordering {
    let zero = Rat::zero();
    match (r.cmp(&zero), s.cmp(&zero)) {
        (Ordering::Equal, sq) => sq,
        (sr, Ordering::Equal) => sr,
        (Ordering::Greater, Ordering::Greater) => Ordering::Greater,
        (Ordering::Less, Ordering::Less) => Ordering::Less,
        (Ordering::Greater, Ordering::Less) | (Ordering::Less, Ordering::Greater) => {
            // Sign is decided by |r| vs |s|*sqrt(5); equality would make
            // sqrt(5) rational, so it cannot occur here.
            let r2 = r * r;
            let s2_5 = s * s * Rat::from(Int::from(5));
            let dominant_r = r2.cmp(&s2_5) == Ordering::Greater;
            if dominant_r {
                r.cmp(&zero)
            } else {
                s.cmp(&zero)
            }
        }
    }
}

/// The ten roots of unity of the field: ±z^i for i = 0..5.
pub fn torsion_units() -> &'static [CycInt; 10] {
    static TORSION: Lazy<[CycInt; 10]> = Lazy::new(|| {
        let mut out: Vec<CycInt> = (0..5).map(CycInt::zeta_pow).collect();
        let negs: Vec<CycInt> = out.iter().map(|t| -t).collect();
        out.extend(negs);
        out.try_into().unwrap()
    });
    &TORSION
}

/// Canonical representative of {t * x : t a root of unity}, applied to a
/// tuple of coordinates at once: the multiple minimizing the total L1 size
/// of the coordinates, ties broken by lexicographically greatest coordinate
/// vector. Returns the representative and the index into `torsion_units`
/// of the unit that produced it.
pub fn canonical_torsion_multiple(parts: &[CycInt]) -> (Vec<CycInt>, usize) {
    let mut best: Option<(Int, Vec<Int>, Vec<CycInt>, usize)> = None;
    for (idx, t) in torsion_units().iter().enumerate() {
        let cand: Vec<CycInt> = parts.iter().map(|x| x * t).collect();
        let l1: Int = cand.iter().map(|x| x.l1()).sum();
        let flat: Vec<Int> = cand.iter().flat_map(|x| x.c.iter().cloned()).collect();
        let better = match &best {
            None => true,
            Some((bl1, bflat, _, _)) => match l1.cmp(bl1) {
                Ordering::Less => true,
                Ordering::Greater => false,
                Ordering::Equal => flat > *bflat,
            },
        };
        if better {
            best = Some((l1, flat, cand, idx));
        }
    }
    let (_, _, cand, idx) = best.unwrap();
    (cand, idx)
}

/// Canonical representative for a single element.
pub fn canonical_torsion_scalar(x: &CycInt) -> CycInt {
    canonical_torsion_multiple(std::slice::from_ref(x)).0.pop().unwrap()
}

fn round_rat(x: &Rat) -> Int {
    let half = Rat::new(Int::one(), Int::from(2));
    (x + half).floor().to_integer()
}

/// Gcd in the ring of integers of the real subfield, which is Euclidean
/// for the norm: rounding both coordinates of the exact quotient leaves a
/// remainder with |N| <= 5/16 of the divisor's. Returns some generator of
/// the ideal (a, b); zero if both inputs are zero.
pub fn gcd_ok(a: &KNum, b: &KNum) -> Result<KNum> {
    if !a.is_integral() || !b.is_integral() {
        return Err(Error::NotIntegral);
    }
    let mut x = a.clone();
    let mut y = b.clone();
    while !y.is_zero() {
        let quot = x.div(&y)?;
        let rounded = KNum {
            p: Rat::from(round_rat(&quot.p)),
            q: Rat::from(round_rat(&quot.q)),
        };
        let rem = &x - &(&rounded * &y);
        debug_assert!(rem.norm().abs() < y.norm().abs());
        x = y;
        y = rem;
    }
    Ok(x)
}

static U5_SQ: Lazy<KNum> = Lazy::new(|| KNum::from_ints(1, 1));
static U5_INV_SQ: Lazy<KNum> = Lazy::new(|| KNum::from_ints(2, -1));

/// The canonical totally positive associate of a nonzero integer g of the
/// real subfield: among the totally positive elements g * (unit), the one
/// of least trace; when two consecutive ones tie, the one whose u^2
/// multiple is the other (the "lower" of the pair).
pub fn canonical_tp_associate(g: &KNum) -> Result<KNum> {
    if g.is_zero() {
        return Err(Error::NotTotallyPositive);
    }
    if !g.is_integral() {
        return Err(Error::NotIntegral);
    }
    // Reach a totally positive associate first: u has norm -1, so one of
    // ±g, ±g*u has positive norm and a sign flip makes it totally positive.
    let mut h = if g.norm().is_negative() {
        g * &KNum::u5()
    } else {
        g.clone()
    };
    if !h.is_totally_positive() {
        h = -&h;
    }
    debug_assert!(h.is_totally_positive());
    // Trace is strictly convex along h * u^(2j); walk to the minimum.
    loop {
        let left = &h * &*U5_INV_SQ;
        if left.trace() < h.trace() {
            h = left;
            continue;
        }
        let right = &h * &*U5_SQ;
        if right.trace() < h.trace() {
            h = right;
            continue;
        }
        break;
    }
    // Of a tied adjacent pair, prefer the lower one.
    let left = &h * &*U5_INV_SQ;
    if left.trace() == h.trace() {
        h = left;
    }
    Ok(h)
}

/// Gram matrix of (x, y) -> Trace(x * conj(y)) on the basis {1, z, z^2, z^3}.
fn trace_form_gram() -> Vec<Vec<Rat>> {
    (0..4)
        .map(|i| {
            (0..4)
                .map(|j| {
                    if i == j {
                        Rat::from(Int::from(4))
                    } else {
                        -Rat::one()
                    }
                })
                .collect()
        })
        .collect()
}

/// All solutions x of x * conj(x) = b up to roots of unity: one canonical
/// representative per torsion orbit, sorted by coordinates. Empty when the
/// equation has no solution.
pub fn solve_rel_norm(b: &KNum) -> Result<Vec<CycInt>> {
    if !b.is_integral() {
        return Err(Error::NotIntegral);
    }
    if b.is_zero() {
        return Ok(vec![CycInt::zero()]);
    }
    if !b.is_totally_positive() {
        return Ok(Vec::new());
    }
    // Trace(x conj x) over Q is twice the subfield trace of the relative
    // norm, so solutions sit exactly on that shell of the trace form.
    let bound = b.trace() * Rat::from(Int::from(2));
    let found = short_vectors(&EnumRequest {
        gram: trace_form_gram(),
        bound: bound.clone(),
        mode: EnumMode::AllBelow,
    })?;
    let mut reps: Vec<CycInt> = Vec::new();
    for sv in found {
        if sv.value != bound {
            continue;
        }
        let x = CycInt::new(sv.coords.try_into().expect("rank four form"));
        if &x.rel_norm() == b {
            let rep = canonical_torsion_scalar(&x);
            if !reps.contains(&rep) {
                reps.push(rep);
            }
        }
    }
    reps.sort();
    Ok(reps)
}

/// Splits a totally positive integer b of the real subfield as
/// b = x*conj(x) + t with x a nonzero integer of the field and t totally
/// positive or zero. Candidates x are tried in order of the trace of their
/// relative norm (canonical orbit representatives, sorted by coordinates),
/// and the first admissible one wins.
pub fn tp_decompose(b: &KNum) -> Result<(CycInt, KNum)> {
    if !b.is_integral() {
        return Err(Error::NotIntegral);
    }
    if !b.is_totally_positive() {
        return Err(Error::NotTotallyPositive);
    }
    let bound = b.trace() * Rat::from(Int::from(2));
    let found = short_vectors(&EnumRequest {
        gram: trace_form_gram(),
        bound,
        mode: EnumMode::AllBelow,
    })?;
    let mut orbits: Vec<(Rat, CycInt)> = Vec::new();
    for sv in found {
        let x = CycInt::new(sv.coords.try_into().expect("rank four form"));
        let rep = canonical_torsion_scalar(&x);
        if !orbits.iter().any(|(_, r)| *r == rep) {
            orbits.push((sv.value, rep));
        }
    }
    orbits.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.cmp(&b.1)));
    for (_, x) in orbits {
        let t = b - &x.rel_norm();
        if t.is_tp_or_zero() {
            return Ok((x, t));
        }
    }
    Err(Error::UnsolvableNormEquation)
}

/// Generator of the ideal x*O + y*O. The ring of integers is a principal
/// ideal domain, so a generator always exists; it is found among the short
/// elements of the ideal, since an element of the ideal generates it exactly
/// when its absolute norm equals the index of the ideal. The result is the
/// canonical representative of its torsion orbit, and zero only when both
/// inputs are zero.
pub fn gcd_o(x: &CycInt, y: &CycInt) -> Result<CycInt> {
    if x.is_zero() && y.is_zero() {
        return Ok(CycInt::zero());
    }
    let mut rows: Vec<Vec<Int>> = Vec::new();
    for i in 0..4 {
        let zi = CycInt::zeta_pow(i);
        rows.push((&zi * x).c.to_vec());
        rows.push((&zi * y).c.to_vec());
    }
    let basis = hnf_basis(&rows);
    if basis.len() != 4 {
        return Err(Error::RankDeficient {
            rank: basis.len(),
            expected: 4,
        });
    }
    let index: Int = (0..4).map(|i| basis[i][i].clone()).product();
    let index = index.abs();
    let trace = trace_form_gram();
    let gram: Vec<Vec<Rat>> = (0..4)
        .map(|i| {
            (0..4)
                .map(|j| {
                    let mut acc = Rat::zero();
                    for p in 0..4 {
                        for q in 0..4 {
                            acc += Rat::from(&basis[i][p] * &basis[j][q]) * &trace[p][q];
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect();
    let mut bound = gram
        .iter()
        .enumerate()
        .map(|(i, row)| row[i].clone())
        .min()
        .expect("nonempty diagonal");
    loop {
        let found = short_vectors(&EnumRequest {
            gram: gram.clone(),
            bound: bound.clone(),
            mode: EnumMode::AllBelow,
        })?;
        for sv in found {
            let mut elem = CycInt::zero();
            for (j, u) in sv.coords.iter().enumerate() {
                let mut coords = [Int::zero(), Int::zero(), Int::zero(), Int::zero()];
                for (c, b) in coords.iter_mut().zip(&basis[j]) {
                    *c = u * b;
                }
                elem = &elem + &CycInt::new(coords);
            }
            if elem.to_num().field_norm().abs() == Rat::from(index.clone()) {
                return Ok(canonical_torsion_scalar(&elem));
            }
        }
        bound = bound * Rat::from(Int::from(2));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat_int;

    fn k(p: i64, q: i64) -> KNum {
        KNum::from_ints(p, q)
    }

    fn z(c: [i64; 4]) -> CycInt {
        CycInt::from_ints(c)
    }

    #[test]
    fn zeta_power_reduction() {
        let z1 = CycInt::zeta();
        let z3 = CycInt::zeta_pow(3);
        assert_eq!(&z1 * &z3, z([-1, -1, -1, -1]));
        assert_eq!(&CycInt::zeta_pow(2) * &z3, CycInt::one());
        assert_eq!(CycInt::zeta_pow(7), CycInt::zeta_pow(2));
    }

    #[test]
    fn golden_ratio_relations() {
        let u = KNum::u5();
        assert_eq!(&u * &u, k(1, 1));
        let u_inv = u.recip().unwrap();
        assert_eq!(u_inv, k(-1, 1));
        assert_eq!(&u_inv * &u_inv, k(2, -1));
        // u embeds as -z^2 - z^3 and satisfies the same relation there.
        let uc = u.to_cyc();
        assert_eq!(uc.c, z([0, 0, -1, -1]).to_num().c);
        assert_eq!((&uc * &uc).to_k().unwrap(), k(1, 1));
    }

    #[test]
    fn galois_structure() {
        let x = z([3, -1, 2, 5]).to_num();
        // Sigma3 generates: applying it twice gives conjugation.
        assert_eq!(
            x.galois(GaloisTag::PRIME).galois(GaloisTag::PRIME).c,
            x.conj().c
        );
        assert_eq!(GaloisTag::PRIME.compose(GaloisTag::PRIME), GaloisTag::CONJ);
        assert_eq!(
            GaloisTag::PRIME.compose(GaloisTag::CONJ),
            GaloisTag::Sigma2
        );
        // PRIME restricts to u -> 1 - u on the real subfield.
        let u = KNum::u5().to_cyc();
        assert_eq!(u.galois(GaloisTag::PRIME).to_k().unwrap(), k(1, -1));
        assert_eq!(u.conj().to_k().unwrap(), KNum::u5());
    }

    #[test]
    fn norms_and_traces() {
        // (1 - z)(1 - z^4) = 3 - u.
        let x = z([1, -1, 0, 0]);
        assert_eq!(x.rel_norm(), k(3, -1));
        assert_eq!(k(3, -1).trace(), rat_int(5));
        assert_eq!(x.to_num().field_norm(), rat_int(5));
        // w = z + z^2 has relative norm 1 + u = u^2 and inverse -1 - z^2.
        let w = z([0, 1, 1, 0]);
        assert_eq!(w.rel_norm(), k(1, 1));
        let w_inv = w.to_num().inv().unwrap();
        assert_eq!(w_inv.to_int().unwrap(), z([-1, 0, -1, 0]));
        // norm of the real subfield matches the field norm through it.
        assert_eq!(k(3, -1).norm(), rat_int(9 - 3 - 1));
    }

    #[test]
    fn unit_factorization() {
        // 1 + z is a root of unity times the golden ratio.
        let x = z([1, 1, 0, 0]).to_num();
        let quot = x.div(&KNum::u5().to_cyc()).unwrap();
        let q_int = quot.to_int().unwrap();
        assert!(torsion_units().contains(&q_int));
        assert_eq!(q_int, -CycInt::zeta_pow(3));
    }

    #[test]
    fn total_positivity() {
        assert!(!KNum::u5().is_totally_positive());
        assert!(k(1, 1).is_totally_positive());
        assert!(k(4, 1).is_totally_positive());
        assert!(k(3, -1).is_totally_positive());
        assert!(!k(-1, 0).is_totally_positive());
        assert!(!k(0, 0).is_totally_positive());
        assert!(k(0, 0).is_tp_or_zero());
        // 2 - u is u^(-2), totally positive; 1 - u = -1/u is not.
        assert!(k(2, -1).is_totally_positive());
        assert!(!k(1, -1).is_totally_positive());
    }

    #[test]
    fn torsion_canonicalization() {
        let units = torsion_units();
        assert_eq!(units.len(), 10);
        for t in units.iter() {
            assert_eq!(t * &t.conj(), CycInt::one());
        }
        assert_eq!(canonical_torsion_scalar(&CycInt::zeta_pow(3)), CycInt::one());
        assert_eq!(canonical_torsion_scalar(&-CycInt::one()), CycInt::one());
        let x = z([1, -1, 0, 0]);
        for t in units.iter() {
            assert_eq!(canonical_torsion_scalar(&(&x * t)), x);
        }
    }

    #[test]
    fn gcd_and_tp_associate() {
        let g = gcd_ok(&k(6, 0), &k(4, 0)).unwrap();
        assert_eq!(canonical_tp_associate(&g).unwrap(), k(2, 0));
        // 3 - u and 2 + u are associates; both normalize to 3 - u.
        assert_eq!(&k(3, -1) * &KNum::from_ints(1, 1), k(2, 1));
        assert_eq!(canonical_tp_associate(&k(3, -1)).unwrap(), k(3, -1));
        assert_eq!(canonical_tp_associate(&k(2, 1)).unwrap(), k(3, -1));
        assert_eq!(canonical_tp_associate(&k(4, 1)).unwrap(), k(4, 1));
        // Units normalize to 1.
        assert_eq!(canonical_tp_associate(&KNum::u5()).unwrap(), KNum::one());
        assert_eq!(canonical_tp_associate(&k(-1, 0)).unwrap(), KNum::one());
        let g = gcd_ok(&k(3, -1), &k(2, 1)).unwrap();
        assert_eq!(canonical_tp_associate(&g).unwrap(), k(3, -1));
    }

    #[test]
    fn rel_norm_equation() {
        let sols = solve_rel_norm(&k(3, -1)).unwrap();
        assert_eq!(sols, vec![z([1, -1, 0, 0])]);
        assert!(solve_rel_norm(&k(4, 1)).unwrap().is_empty());
        let ones = solve_rel_norm(&KNum::one()).unwrap();
        assert_eq!(ones, vec![CycInt::one()]);
        // 2 + u is the relative norm of 1 - z^2.
        let sols = solve_rel_norm(&k(2, 1)).unwrap();
        assert_eq!(sols.len(), 1);
        assert_eq!(sols[0].rel_norm(), k(2, 1));
    }

    #[test]
    fn tp_decomposition() {
        let (x, t) = tp_decompose(&KNum::one()).unwrap();
        assert_eq!((x, t), (CycInt::one(), KNum::zero()));
        let (x, t) = tp_decompose(&k(2, 0)).unwrap();
        assert_eq!((x, t), (CycInt::one(), KNum::one()));
        let (x, t) = tp_decompose(&k(4, 1)).unwrap();
        assert_eq!((x, t), (CycInt::one(), k(3, 1)));
        assert!(tp_decompose(&KNum::u5()).is_err());
    }

    #[test]
    fn ideal_gcd() {
        let two = z([2, 0, 0, 0]);
        let six = z([6, 0, 0, 0]);
        let four = z([4, 0, 0, 0]);
        assert_eq!(gcd_o(&six, &four).unwrap(), two);
        // 1 - z^2 = (1 - z)(1 + z) is an associate of 1 - z, the ramified
        // prime above five.
        let p5 = z([1, -1, 0, 0]);
        assert_eq!(gcd_o(&p5, &z([1, 0, -1, 0])).unwrap(), p5);
        // z + z^2 is a unit (its norm down to Q is 1).
        assert_eq!(gcd_o(&z([0, 1, 1, 0]), &two).unwrap(), CycInt::one());
        assert_eq!(gcd_o(&two, &CycInt::zero()).unwrap(), two);
        assert_eq!(gcd_o(&CycInt::zero(), &CycInt::zero()).unwrap(), CycInt::zero());
    }

    #[test]
    fn golden_unit_powers() {
        assert_eq!(KNum::u5_pow(2), k(1, 1));
        assert_eq!(KNum::u5_pow(-2), k(2, -1));
        assert_eq!(&KNum::u5_pow(-3) * &KNum::u5_pow(3), KNum::one());
        assert_eq!(KNum::u5_pow(0), KNum::one());
    }

    #[test]
    fn rational_trace() {
        assert_eq!(CycNum::one().trace_q(), rat_int(4));
        assert_eq!(CycInt::zeta().to_num().trace_q(), rat_int(-1));
        // Trace of x * conj(x) for x = 1 - z is twice the subfield trace
        // of its relative norm 3 - u.
        let x = z([1, -1, 0, 0]).to_num();
        assert_eq!((&x * &x.conj()).trace_q(), rat_int(10));
    }

    #[test]
    fn sqrt5_signs() {
        // 7 - 3*sqrt(5) > 0 and 7 + 3*sqrt(5) > 0, but 2 - sqrt(5) < 0.
        assert_eq!(
            sign_r_plus_s_sqrt5(&rat_int(7), &rat_int(-3)),
            Ordering::Greater
        );
        assert_eq!(
            sign_r_plus_s_sqrt5(&rat_int(2), &rat_int(-1)),
            Ordering::Less
        );
        assert_eq!(
            sign_r_plus_s_sqrt5(&rat_int(-2), &rat_int(1)),
            Ordering::Greater
        );
        assert_eq!(
            sign_r_plus_s_sqrt5(&rat_int(0), &rat_int(0)),
            Ordering::Equal
        );
    }
}
