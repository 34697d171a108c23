//! Binary Hermitian forms over the ring of integers of the cyclotomic
//! field: evaluation, positive definiteness, minima and minimal vectors,
//! the rank-one point attached to a vector, and the unimodular group
//! action on forms.

use crate::cyclotomic::{
    canonical_torsion_multiple, canonical_tp_associate, gcd_o, CycInt, CycNum, KNum,
};
use crate::enumerate::{ldl_accepts, short_vectors, EnumMode, EnumRequest};
use crate::error::{Error, Result};
use crate::linalg::{hnf_basis, hnf_with_transform, int_rank};
use crate::rat::{primitive_int_vector, Int, Rat};
use num::{One, Signed, Zero};
use once_cell::sync::Lazy;
use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, Neg, Sub};

/// Column vector with entries in the ring of integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OVec {
    pub alpha: CycInt,
    pub beta: CycInt,
}

impl OVec {
    pub fn new(alpha: CycInt, beta: CycInt) -> OVec {
        OVec { alpha, beta }
    }

    pub fn from_ints(alpha: [i64; 4], beta: [i64; 4]) -> OVec {
        OVec::new(CycInt::from_ints(alpha), CycInt::from_ints(beta))
    }

    pub fn e1() -> OVec {
        OVec::new(CycInt::one(), CycInt::zero())
    }

    pub fn e2() -> OVec {
        OVec::new(CycInt::zero(), CycInt::one())
    }

    pub fn is_zero(&self) -> bool {
        self.alpha.is_zero() && self.beta.is_zero()
    }

    /// The eight integer coordinates, entry coordinates concatenated.
    pub fn coords8(&self) -> Vec<Int> {
        let mut out = Vec::with_capacity(8);
        out.extend(self.alpha.c.iter().cloned());
        out.extend(self.beta.c.iter().cloned());
        out
    }

    pub fn from_coords8(c: &[Int]) -> OVec {
        assert_eq!(c.len(), 8, "vector needs eight coordinates");
        OVec::new(
            CycInt::new([c[0].clone(), c[1].clone(), c[2].clone(), c[3].clone()]),
            CycInt::new([c[4].clone(), c[5].clone(), c[6].clone(), c[7].clone()]),
        )
    }

    pub fn mul_scalar(&self, s: &CycInt) -> OVec {
        OVec::new(s * &self.alpha, s * &self.beta)
    }

    /// Canonical representative of the orbit under the ten roots of unity.
    pub fn canonical(&self) -> OVec {
        let (parts, _) = canonical_torsion_multiple(&[self.alpha.clone(), self.beta.clone()]);
        let mut it = parts.into_iter();
        OVec::new(it.next().unwrap(), it.next().unwrap())
    }

    /// Generators of the module of Z-linear combinations of the two entries
    /// (the fractional ideal they span), as rows in the power basis.
    fn ideal_rows(&self) -> Vec<Vec<Int>> {
        let mut rows = Vec::with_capacity(8);
        for i in 0..4 {
            let zi = CycInt::zeta_pow(i);
            rows.push((&zi * &self.alpha).c.to_vec());
            rows.push((&zi * &self.beta).c.to_vec());
        }
        rows
    }

    /// A vector is primitive when its entries generate the unit ideal.
    pub fn is_primitive(&self) -> bool {
        let h = hnf_basis(&self.ideal_rows());
        h.len() == 4 && (0..4).all(|i| h[i][i].is_one())
    }

    /// Solves x*alpha + y*beta = 1; exists exactly for primitive vectors.
    pub fn bezout(&self) -> Result<(CycInt, CycInt)> {
        if !self.is_primitive() {
            return Err(Error::NotPrimitive);
        }
        let rows = self.ideal_rows();
        let (h, u) = hnf_with_transform(&rows);
        let leading = (0..4)
            .position(|i| (0..4).all(|j| h[i][j] == if i == j { Int::one() } else { Int::zero() }));
        debug_assert_eq!(leading, Some(0));
        let mut x = CycInt::zero();
        let mut y = CycInt::zero();
        for i in 0..4 {
            x = &x + &scale_cyc(&CycInt::zeta_pow(i), &u[0][2 * i]);
            y = &y + &scale_cyc(&CycInt::zeta_pow(i), &u[0][2 * i + 1]);
        }
        debug_assert_eq!(&(&x * &self.alpha) + &(&y * &self.beta), CycInt::one());
        Ok((x, y))
    }

    /// Unimodular matrix with this vector as its first column.
    pub fn complete_to_basis(&self) -> Result<GMat> {
        let (x, y) = self.bezout()?;
        let g = GMat::new([
            [self.alpha.clone(), -&y],
            [self.beta.clone(), x],
        ])?;
        debug_assert_eq!(g.det(), CycInt::one());
        Ok(g)
    }
}

impl Neg for &OVec {
    type Output = OVec;
    fn neg(self) -> OVec {
        OVec::new(-&self.alpha, -&self.beta)
    }
}

impl fmt::Display for OVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.alpha, self.beta)
    }
}

fn scale_cyc(x: &CycInt, s: &Int) -> CycInt {
    CycInt::new(x.c.clone().map(|e| e * s))
}

/// Two-by-two matrix over the ring of integers whose determinant is a unit.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GMat {
    pub e: [[CycInt; 2]; 2],
}

impl GMat {
    pub fn new(e: [[CycInt; 2]; 2]) -> Result<GMat> {
        let g = GMat { e };
        if g.det().to_num().field_norm().abs() != Rat::one() {
            return Err(Error::NonUnitDeterminant);
        }
        Ok(g)
    }

    pub fn identity() -> GMat {
        GMat {
            e: [
                [CycInt::one(), CycInt::zero()],
                [CycInt::zero(), CycInt::one()],
            ],
        }
    }

    pub fn scalar(t: &CycInt) -> Result<GMat> {
        GMat::new([
            [t.clone(), CycInt::zero()],
            [CycInt::zero(), t.clone()],
        ])
    }

    pub fn from_columns(c1: &OVec, c2: &OVec) -> Result<GMat> {
        GMat::new([
            [c1.alpha.clone(), c2.alpha.clone()],
            [c1.beta.clone(), c2.beta.clone()],
        ])
    }

    pub fn columns(&self) -> (OVec, OVec) {
        (
            OVec::new(self.e[0][0].clone(), self.e[1][0].clone()),
            OVec::new(self.e[0][1].clone(), self.e[1][1].clone()),
        )
    }

    pub fn det(&self) -> CycInt {
        &(&self.e[0][0] * &self.e[1][1]) - &(&self.e[0][1] * &self.e[1][0])
    }

    pub fn mul(&self, rhs: &GMat) -> GMat {
        let mut e = [
            [CycInt::zero(), CycInt::zero()],
            [CycInt::zero(), CycInt::zero()],
        ];
        for (i, row) in e.iter_mut().enumerate() {
            for (j, out) in row.iter_mut().enumerate() {
                *out = &(&self.e[i][0] * &rhs.e[0][j]) + &(&self.e[i][1] * &rhs.e[1][j]);
            }
        }
        GMat { e }
    }

    pub fn apply(&self, v: &OVec) -> OVec {
        OVec::new(
            &(&self.e[0][0] * &v.alpha) + &(&self.e[0][1] * &v.beta),
            &(&self.e[1][0] * &v.alpha) + &(&self.e[1][1] * &v.beta),
        )
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> GMat {
        GMat {
            e: [
                [self.e[0][0].conj(), self.e[1][0].conj()],
                [self.e[0][1].conj(), self.e[1][1].conj()],
            ],
        }
    }

    pub fn inverse(&self) -> GMat {
        let dinv = self
            .det()
            .to_num()
            .inv()
            .expect("unit determinant")
            .to_int()
            .expect("inverse of a unit is integral");
        let adj = [
            [self.e[1][1].clone(), -&self.e[0][1]],
            [-&self.e[1][0], self.e[0][0].clone()],
        ];
        GMat {
            e: adj.map(|row| row.map(|x| &x * &dinv)),
        }
    }

    pub fn is_identity(&self) -> bool {
        *self == GMat::identity()
    }
}

impl fmt::Display for GMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            self.e[0][0], self.e[0][1], self.e[1][0], self.e[1][1]
        )
    }
}

/// Binary Hermitian form: the matrix [[a, b], [conj(b), c]] with a and c in
/// the real subfield.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HermForm {
    pub a: KNum,
    pub b: CycNum,
    pub c: KNum,
}

impl HermForm {
    pub fn new(a: KNum, b: CycNum, c: KNum) -> HermForm {
        HermForm { a, b, c }
    }

    pub fn zero() -> HermForm {
        HermForm::new(KNum::zero(), CycNum::zero(), KNum::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero()
    }

    /// The eight rational coordinates (a, b, c flattened in that order).
    pub fn coords8(&self) -> Vec<Rat> {
        let mut out = Vec::with_capacity(8);
        out.push(self.a.p.clone());
        out.push(self.a.q.clone());
        out.extend(self.b.c.iter().cloned());
        out.push(self.c.p.clone());
        out.push(self.c.q.clone());
        out
    }

    pub fn from_coords8(c: &[Rat]) -> HermForm {
        assert_eq!(c.len(), 8, "form needs eight coordinates");
        HermForm::new(
            KNum::new(c[0].clone(), c[1].clone()),
            CycNum::new([c[2].clone(), c[3].clone(), c[4].clone(), c[5].clone()]),
            KNum::new(c[6].clone(), c[7].clone()),
        )
    }

    pub fn scale(&self, r: &Rat) -> HermForm {
        HermForm::new(self.a.scale(r), self.b.scale(r), self.c.scale(r))
    }

    /// Scaling by an element of the real subfield (which keeps the matrix
    /// Hermitian).
    pub fn scale_k(&self, s: &KNum) -> HermForm {
        HermForm::new(&self.a * s, &self.b * &s.to_cyc(), &self.c * s)
    }

    pub fn is_integral(&self) -> bool {
        self.a.is_integral() && self.b.is_integral() && self.c.is_integral()
    }

    /// Value of the form at a vector, inside the real subfield:
    /// a*N(alpha) + Tr(b*conj(alpha)*beta) + c*N(beta).
    pub fn eval_k(&self, v: &OVec) -> KNum {
        let na = v.alpha.rel_norm();
        let nb = v.beta.rel_norm();
        let cross = &self.b * &(&v.alpha.conj().to_num() * &v.beta.to_num());
        let cross_k = cross
            .trace_to_k()
            .expect("x plus conj(x) lies in the real subfield");
        &(&(&self.a * &na) + &cross_k) + &(&self.c * &nb)
    }

    /// Rational value of the form at a vector: the subfield trace of eval_k.
    pub fn evaluate(&self, v: &OVec) -> Rat {
        self.eval_k(v).trace()
    }

    /// Determinant a*c - b*conj(b), an element of the real subfield.
    pub fn det_k(&self) -> KNum {
        &(&self.a * &self.c) - &self.b.rel_norm().expect("b conj(b) lies in the real subfield")
    }

    /// Gram matrix of `evaluate` as a rational quadratic form in the eight
    /// integer coordinates of a vector.
    pub fn gram8(&self) -> Vec<Vec<Rat>> {
        let diag: Vec<Rat> = (0..8).map(|i| self.evaluate(&basis_vec(i))).collect();
        let half = Rat::new(Int::one(), Int::from(2));
        let mut g = vec![vec![Rat::zero(); 8]; 8];
        for i in 0..8 {
            g[i][i] = diag[i].clone();
            for j in i + 1..8 {
                let mut coords = vec![Int::zero(); 8];
                coords[i] = Int::one();
                coords[j] = Int::one();
                let val = self.evaluate(&OVec::from_coords8(&coords));
                let off = (&val - &diag[i] - &diag[j]) * &half;
                g[i][j] = off.clone();
                g[j][i] = off;
            }
        }
        g
    }

    /// Positive definiteness, decided along two independent routes that must
    /// agree: the algebraic criterion (a and the determinant both totally
    /// positive) and the pivot signs of the rational Gram matrix.
    pub fn is_positive_definite(&self) -> bool {
        let algebraic = self.a.is_totally_positive() && self.det_k().is_totally_positive();
        let pivots = ldl_accepts(&self.gram8());
        assert_eq!(algebraic, pivots, "positive definiteness routes disagree");
        algebraic && pivots
    }

    /// The form pulled back along g: the matrix adj(g) * A * g.
    pub fn pullback(&self, g: &GMat) -> HermForm {
        let m = [
            [self.a.to_cyc(), self.b.clone()],
            [self.b.conj(), self.c.to_cyc()],
        ];
        let gn = [
            [g.e[0][0].to_num(), g.e[0][1].to_num()],
            [g.e[1][0].to_num(), g.e[1][1].to_num()],
        ];
        let gs = [
            [gn[0][0].conj(), gn[1][0].conj()],
            [gn[0][1].conj(), gn[1][1].conj()],
        ];
        let full = mat_mul(&gs, &mat_mul(&m, &gn));
        debug_assert_eq!(full[0][1].conj(), full[1][0]);
        HermForm::new(
            full[0][0].to_k().expect("diagonal of a Hermitian matrix"),
            full[0][1].clone(),
            full[1][1].to_k().expect("diagonal of a Hermitian matrix"),
        )
    }

    /// Group action on forms; minimal vectors transform by g itself.
    pub fn act(&self, g: &GMat) -> HermForm {
        self.pullback(&g.inverse())
    }

    /// Minimum over nonzero integral vectors with the complete set of
    /// minimal vectors; positive definite forms only.
    pub fn minimum_and_vectors(&self) -> Result<MinData> {
        if !self.is_positive_definite() {
            return Err(Error::NotPositiveDefinite);
        }
        let gram = self.gram8();
        let bound = (0..8)
            .map(|i| gram[i][i].clone())
            .min()
            .expect("eight diagonal entries");
        let found = short_vectors(&EnumRequest {
            gram,
            bound,
            mode: EnumMode::ShortestNonzero,
        })?;
        let min = found
            .first()
            .expect("a basis vector realizes the starting bound")
            .value
            .clone();
        let mut vectors = Vec::with_capacity(found.len() * 2);
        let mut orbits: BTreeSet<OVec> = BTreeSet::new();
        for sv in &found {
            let v = OVec::from_coords8(&sv.coords);
            orbits.insert(v.canonical());
            vectors.push(-&v);
            vectors.push(v);
        }
        vectors.sort();
        Ok(MinData {
            min,
            vectors,
            orbit_reps: orbits.into_iter().collect(),
        })
    }

    /// A form is perfect when the rank-one points of its minimal vectors
    /// span the full eight-dimensional space of forms.
    pub fn is_perfect(&self) -> Result<bool> {
        let data = self.minimum_and_vectors()?;
        Ok(min_config_rank(&data.orbit_reps) == 8)
    }
}

impl Add for &HermForm {
    type Output = HermForm;
    fn add(self, rhs: &HermForm) -> HermForm {
        HermForm::new(&self.a + &rhs.a, &self.b + &rhs.b, &self.c + &rhs.c)
    }
}

impl Sub for &HermForm {
    type Output = HermForm;
    fn sub(self, rhs: &HermForm) -> HermForm {
        HermForm::new(&self.a - &rhs.a, &self.b - &rhs.b, &self.c - &rhs.c)
    }
}

impl fmt::Display for HermForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.b.conj(), self.c)
    }
}

fn mat_mul(x: &[[CycNum; 2]; 2], y: &[[CycNum; 2]; 2]) -> [[CycNum; 2]; 2] {
    let mut out = [
        [CycNum::zero(), CycNum::zero()],
        [CycNum::zero(), CycNum::zero()],
    ];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, entry) in row.iter_mut().enumerate() {
            *entry = &(&x[i][0] * &y[0][j]) + &(&x[i][1] * &y[1][j]);
        }
    }
    out
}

fn basis_vec(i: usize) -> OVec {
    let mut coords = vec![Int::zero(); 8];
    coords[i] = Int::one();
    OVec::from_coords8(&coords)
}

/// Minimum of a positive definite form together with its minimal vectors:
/// the full signed set and one canonical representative per orbit under the
/// roots of unity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinData {
    pub min: Rat,
    pub vectors: Vec<OVec>,
    pub orbit_reps: Vec<OVec>,
}

/// Integer coordinate vector of the rank-one form attached to a vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RankOnePoint {
    pub coords: Vec<Int>,
}

impl RankOnePoint {
    pub fn from_vector(v: &OVec) -> RankOnePoint {
        let coords = q_map(v)
            .coords8()
            .into_iter()
            .map(|r| {
                debug_assert!(r.is_integer());
                r.to_integer()
            })
            .collect();
        RankOnePoint { coords }
    }

    pub fn form(&self) -> HermForm {
        let coords: Vec<Rat> = self.coords.iter().cloned().map(Rat::from).collect();
        HermForm::from_coords8(&coords)
    }
}

/// The rank-one form attached to a vector, the matrix v * adj(v); it pairs
/// against any form to the value of that form at v.
pub fn q_map(v: &OVec) -> HermForm {
    HermForm::new(
        v.alpha.rel_norm(),
        &v.alpha.to_num() * &v.beta.conj().to_num(),
        v.beta.rel_norm(),
    )
}

/// Trace pairing of two forms.
pub fn pairing(x: &HermForm, y: &HermForm) -> Rat {
    let diag = &(&x.a * &y.a) + &(&x.c * &y.c);
    diag.trace() + (&x.b * &y.b.conj()).trace_q()
}

/// Gram matrix of the trace pairing in the eight form coordinates.
pub fn pairing_gram8() -> &'static [Vec<Rat>] {
    static G: Lazy<Vec<Vec<Rat>>> = Lazy::new(|| {
        let basis: Vec<HermForm> = (0..8)
            .map(|i| {
                let mut coords = vec![Rat::zero(); 8];
                coords[i] = Rat::one();
                HermForm::from_coords8(&coords)
            })
            .collect();
        (0..8)
            .map(|i| (0..8).map(|j| pairing(&basis[i], &basis[j])).collect())
            .collect()
    });
    &G
}

/// Rank of the span of the rank-one points attached to a set of vectors.
pub fn min_config_rank(vs: &[OVec]) -> usize {
    let rows: Vec<Vec<Int>> = vs
        .iter()
        .map(|v| RankOnePoint::from_vector(v).coords.clone())
        .collect();
    int_rank(&rows)
}

/// Writes a nonzero rank-one form as s * q(v) with s totally positive in
/// the real subfield (times the positive rational content) and v primitive
/// and canonical. The factorization exists because the ring of integers is
/// a principal ideal domain.
pub fn lift_rank_one(phi: &HermForm) -> Result<(KNum, OVec)> {
    if phi.is_zero() || !phi.det_k().is_zero() {
        return Err(Error::NotRankOne);
    }
    let coords = phi.coords8();
    let prim = primitive_int_vector(&coords);
    let k0 = coords
        .iter()
        .position(|x| !x.is_zero())
        .expect("nonzero form");
    let content = &coords[k0] / Rat::from(prim[k0].clone());
    debug_assert!(content.is_positive());
    let prim_rat: Vec<Rat> = prim.into_iter().map(Rat::from).collect();
    let phi0 = HermForm::from_coords8(&prim_rat);
    // A rank-one matrix s*v*adj(v) has first column s*conj(v1)*v and second
    // column s*conj(v2)*v; divide whichever has a nonzero diagonal entry by
    // a generator of the ideal its entries span.
    let (col_top, col_bot, pivot_a) = if !phi0.a.is_zero() {
        (phi0.a.to_cyc(), phi0.b.conj(), true)
    } else if !phi0.c.is_zero() {
        (phi0.b.clone(), phi0.c.to_cyc(), false)
    } else {
        // Zero diagonal with zero determinant forces b = 0, excluded above.
        return Err(Error::NotRankOne);
    };
    let ct = col_top.to_int().expect("primitive integer coordinates");
    let cb = col_bot.to_int().expect("primitive integer coordinates");
    let lam = gcd_o(&ct, &cb)?.to_num();
    let w = OVec::new(
        col_top.div(&lam)?.to_int().ok_or(Error::NotRankOne)?,
        col_bot.div(&lam)?.to_int().ok_or(Error::NotRankOne)?,
    );
    let s = if pivot_a {
        phi0.a.div(&w.alpha.rel_norm())?
    } else {
        phi0.c.div(&w.beta.rel_norm())?
    };
    if !s.is_integral() {
        return Err(Error::NotIntegral);
    }
    if !s.is_totally_positive() {
        return Err(Error::NotTotallyPositive);
    }
    if q_map(&w).scale_k(&s) != phi0 || !w.is_primitive() {
        return Err(Error::NotRankOne);
    }
    let s_can = canonical_tp_associate(&s)?;
    let mut shift: Option<i64> = None;
    for j in -90..=90_i64 {
        if &s * &KNum::u5_pow(2 * j) == s_can {
            shift = Some(j);
            break;
        }
    }
    let j = shift.ok_or_else(|| Error::Undecided("associate shift out of range".into()))?;
    let unit = KNum::u5_pow(-j)
        .to_cyc()
        .to_int()
        .expect("powers of a unit are integral");
    let v = w.mul_scalar(&unit).canonical();
    debug_assert_eq!(q_map(&v).scale_k(&s_can), phi0);
    Ok((s_can.scale(&content), v))
}

/// Upper triangular basis of the lattice spanned by the rank-one points of
/// all integer vectors. Vectors are enumerated by coordinate size, growing
/// the cutoff until the lattice stops changing between consecutive cutoffs.
pub fn lambda_basis(initial_bound: u32) -> Vec<Vec<Int>> {
    let mut bound = initial_bound.max(1);
    let mut prev: Option<Vec<Vec<Int>>> = None;
    loop {
        let current = lambda_at(bound);
        if current.len() == 8 && prev.as_ref() == Some(&current) {
            return current;
        }
        prev = Some(current);
        bound += 1;
    }
}

fn lambda_at(bound: u32) -> Vec<Vec<Int>> {
    let gram: Vec<Vec<Rat>> = (0..8)
        .map(|i| {
            (0..8)
                .map(|j| if i == j { Rat::one() } else { Rat::zero() })
                .collect()
        })
        .collect();
    let found = short_vectors(&EnumRequest {
        gram,
        bound: Rat::from(Int::from(bound)),
        mode: EnumMode::AllBelow,
    })
    .expect("identity form is positive definite");
    let mut pts: BTreeSet<Vec<Int>> = BTreeSet::new();
    for sv in found {
        let v = OVec::from_coords8(&sv.coords);
        pts.insert(RankOnePoint::from_vector(&v).coords);
    }
    let rows: Vec<Vec<Int>> = pts.into_iter().collect();
    hnf_basis(&rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int};

    fn kn(p: i64, q: i64) -> KNum {
        KNum::from_ints(p, q)
    }

    fn identity_form() -> HermForm {
        HermForm::new(KNum::one(), CycNum::zero(), KNum::one())
    }

    fn sample_form() -> HermForm {
        let coords = [
            rat(3, 5),
            rat(-1, 5),
            rat(-1, 5),
            rat(1, 5),
            rat(-1, 5),
            rat(1, 5),
            rat(3, 5),
            rat(-1, 5),
        ];
        HermForm::from_coords8(&coords)
    }

    #[test]
    fn identity_form_minimum() {
        let f = identity_form();
        assert!(f.is_positive_definite());
        let data = f.minimum_and_vectors().unwrap();
        assert_eq!(data.min, rat_int(2));
        assert_eq!(data.vectors.len(), 20);
        assert_eq!(data.orbit_reps, vec![OVec::e2(), OVec::e1()]);
        assert!(!f.is_perfect().unwrap());
    }

    #[test]
    fn sample_form_minimum() {
        let f = sample_form();
        assert!(f.is_positive_definite());
        assert_eq!(f.evaluate(&OVec::e1()), rat_int(1));
        let data = f.minimum_and_vectors().unwrap();
        assert_eq!(data.min, rat_int(1));
        assert_eq!(data.vectors.len(), 240);
        assert_eq!(data.orbit_reps.len(), 24);
        assert!(data.orbit_reps.contains(&OVec::e1()));
        assert!(f.is_perfect().unwrap());
    }

    #[test]
    fn evaluation_matches_pairing() {
        let forms = [identity_form(), sample_form()];
        let vectors = [
            OVec::e1(),
            OVec::e2(),
            OVec::from_ints([1, -1, 0, 0], [1, 0, 0, 1]),
            OVec::from_ints([2, 0, -1, 3], [0, 1, 1, -2]),
        ];
        for f in &forms {
            for v in &vectors {
                assert_eq!(pairing(&q_map(v), f), f.evaluate(v));
            }
        }
    }

    #[test]
    fn pairing_gram_structure() {
        let g = pairing_gram8();
        let expected_corner = [[2, 1], [1, 3]];
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(g[i][j], rat_int(expected_corner[i][j]));
                assert_eq!(g[6 + i][6 + j], rat_int(expected_corner[i][j]));
            }
        }
        for i in 2..6 {
            for j in 2..6 {
                let expected = if i == j { 4 } else { -1 };
                assert_eq!(g[i][j], rat_int(expected));
            }
            assert_eq!(g[i][0], Rat::zero());
            assert_eq!(g[i][7], Rat::zero());
        }
        // The pairing of two forms is the bilinear form of this matrix.
        let x = sample_form();
        let y = q_map(&OVec::from_ints([1, 0, 0, 0], [1, 1, 0, 0]));
        let xc = x.coords8();
        let yc = y.coords8();
        let mut via_gram = Rat::zero();
        for i in 0..8 {
            for j in 0..8 {
                via_gram += &xc[i] * &g[i][j] * &yc[j];
            }
        }
        assert_eq!(via_gram, pairing(&x, &y));
    }

    #[test]
    fn group_action() {
        let swap = GMat::new([
            [CycInt::zero(), CycInt::one()],
            [CycInt::one(), CycInt::zero()],
        ])
        .unwrap();
        assert_eq!(identity_form().act(&swap), identity_form());
        let g = GMat::new([
            [CycInt::one(), CycInt::zeta()],
            [CycInt::zero(), CycInt::one()],
        ])
        .unwrap();
        let f = sample_form();
        let v = OVec::from_ints([1, 0, 0, 0], [0, 0, -1, 0]);
        // Transformed form at transformed vector gives the original value.
        assert_eq!(f.act(&g).evaluate(&g.apply(&v)), f.evaluate(&v));
        let h = swap.mul(&g);
        assert_eq!(f.act(&h), f.act(&g).act(&swap));
        assert!(g.mul(&g.inverse()).is_identity());
        // Determinant of norm one that is not a unit times identity.
        assert!(GMat::new([
            [CycInt::from_ints([2, 0, 0, 0]), CycInt::zero()],
            [CycInt::zero(), CycInt::one()],
        ])
        .is_err());
    }

    #[test]
    fn primitivity_and_bezout() {
        assert!(OVec::e1().is_primitive());
        let v = OVec::from_ints([1, 0, 0, 0], [1, 0, 0, 1]);
        assert!(v.is_primitive());
        let (x, y) = v.bezout().unwrap();
        assert_eq!(&(&x * &v.alpha) + &(&y * &v.beta), CycInt::one());
        let g = v.complete_to_basis().unwrap();
        assert_eq!(g.det(), CycInt::one());
        assert_eq!(g.columns().0, v);
        let imprimitive = v.mul_scalar(&CycInt::from_ints([1, -1, 0, 0]));
        assert!(!imprimitive.is_primitive());
        assert!(imprimitive.bezout().is_err());
        // Scaling by a unit keeps primitivity.
        assert!(v.mul_scalar(&CycInt::from_ints([0, 1, 1, 0])).is_primitive());
    }

    #[test]
    fn rank_one_lift() {
        let v = OVec::from_ints([1, -1, 0, 0], [1, 0, 0, 1]);
        let (s, w) = lift_rank_one(&q_map(&v)).unwrap();
        assert_eq!(s, KNum::one());
        assert_eq!(w, v.canonical());
        // Ramified scaling: the form of (1 - z, 0) is (3 - u) times the
        // form of e1.
        let ram = q_map(&OVec::from_ints([1, -1, 0, 0], [0, 0, 0, 0]));
        let (s, w) = lift_rank_one(&ram).unwrap();
        assert_eq!(s, kn(3, -1));
        assert_eq!(w, OVec::e1());
        // Rational content passes through.
        let (s, w) = lift_rank_one(&q_map(&OVec::e2()).scale(&rat_int(3))).unwrap();
        assert_eq!(s, kn(3, 0));
        assert_eq!(w, OVec::e2());
        assert!(lift_rank_one(&identity_form()).is_err());
        assert!(lift_rank_one(&HermForm::zero()).is_err());
    }

    #[test]
    fn rank_one_points_span_everything() {
        let basis = lambda_basis(4);
        assert_eq!(basis.len(), 8);
        for (i, row) in basis.iter().enumerate() {
            for (j, entry) in row.iter().enumerate() {
                let expected = if i == j { Int::one() } else { Int::zero() };
                assert_eq!(*entry, expected, "row {i} column {j}");
            }
        }
    }

    #[test]
    fn gram_matches_evaluation() {
        let f = sample_form();
        let g = f.gram8();
        for i in 0..8 {
            for j in 0..8 {
                assert_eq!(g[i][j], g[j][i]);
            }
        }
        let v = OVec::from_ints([1, 2, 0, -1], [0, 3, -1, 1]);
        let coords = v.coords8();
        let mut via_gram = Rat::zero();
        for i in 0..8 {
            for j in 0..8 {
                via_gram += Rat::from(&coords[i] * &coords[j]) * &g[i][j];
            }
        }
        assert_eq!(via_gram, f.evaluate(&v));
    }
}
