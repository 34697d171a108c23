//! Stabilizers and conjugacy of vector configurations under the group of
//! integral 2x2 matrices with unit determinant.
//!
//! A configuration is a finite set of primitive column vectors, considered
//! modulo torsion units. A matrix g acts by v -> g v; it stabilizes the
//! configuration when the canonical torsion representatives are permuted.
//!
//! Matrices are found by a complete pair search: once an independent pair
//! (p1, p2) of the configuration is fixed, any matrix carrying the
//! configuration onto a target is determined by the exact images of p1 and
//! p2, which must be torsion multiples of target vectors. Enumerating those
//! images, keeping the integral ones of unit determinant, and filtering by
//! the full membership test is therefore exhaustive. When no independent
//! pair exists all vectors share one line; the stabilizer then contains a
//! unipotent shear fixing that line pointwise and is infinite, and two such
//! configurations are conjugate exactly when their unit exponent multisets
//! agree up to a common shift.

use crate::cyclotomic::{torsion_units, CycInt, GaloisTag};
use crate::error::{Error, Result};
use crate::hermitian::{GMat, OVec};
use crate::rat::Int;
use num::{Integer, One, Signed, Zero};
use std::collections::BTreeSet;

/// Order of a matrix group: finite with the exact count, or infinite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupOrder {
    Finite(u64),
    Infinite,
}

impl GroupOrder {
    pub fn as_string(&self) -> String {
        match self {
            GroupOrder::Finite(n) => n.to_string(),
            GroupOrder::Infinite => "infinite".into(),
        }
    }
}

/// Result of a stabilizer computation. For a finite stabilizer `elements`
/// lists every matrix; for an infinite one it is empty and `certificate`
/// holds a non-identity unipotent element, which has infinite order.
#[derive(Clone, Debug)]
pub struct GroupRecord {
    pub order: GroupOrder,
    pub elements: Vec<GMat>,
    pub certificate: Option<GMat>,
}

/// Outcome of a conjugacy test between two configurations: a matrix carrying
/// the first onto the second, or a proof of distinctness by exhaustion.
#[derive(Clone, Debug)]
pub enum ConjugacyOutcome {
    Conjugate(GMat),
    Distinct,
}

impl ConjugacyOutcome {
    pub fn witness(&self) -> Option<&GMat> {
        match self {
            ConjugacyOutcome::Conjugate(g) => Some(g),
            ConjugacyOutcome::Distinct => None,
        }
    }
}

fn u5() -> CycInt {
    CycInt::from_ints([0, 0, -1, -1])
}

fn u5_inv() -> CycInt {
    CycInt::from_ints([-1, 0, -1, -1])
}

fn u5_pow(n: i64) -> CycInt {
    let step = if n >= 0 { u5() } else { u5_inv() };
    let mut out = CycInt::one();
    for _ in 0..n.unsigned_abs() {
        out = &out * &step;
    }
    out
}

fn is_torsion(x: &CycInt) -> bool {
    torsion_units().contains(x)
}

fn det2(v: &OVec, w: &OVec) -> CycInt {
    &(&v.alpha * &w.beta) - &(&w.alpha * &v.beta)
}

/// Product of the three nontrivial Galois conjugates; x times this is the
/// rational field norm of x.
fn conjugate_product(x: &CycInt) -> CycInt {
    &(&x.galois(GaloisTag::Sigma2) * &x.galois(GaloisTag::Sigma3)) * &x.galois(GaloisTag::Sigma4)
}

/// Absolute value of the rational field norm.
fn abs_norm(x: &CycInt) -> Int {
    let prod = x * &conjugate_product(x);
    debug_assert!(prod.c[1].is_zero() && prod.c[2].is_zero() && prod.c[3].is_zero());
    prod.c[0].abs()
}

/// Exact division in the ring of integers, entirely over the integers:
/// multiply by the conjugate product of the divisor and divide coordinates
/// by its norm. Returns None when the quotient is not integral.
fn div_exact(n: &CycInt, d: &CycInt) -> Option<CycInt> {
    let adj = conjugate_product(d);
    let den = (d * &adj).c[0].clone();
    if den.is_zero() {
        return None;
    }
    divide_with(n, &adj, &den)
}

fn divide_with(x: &CycInt, adj: &CycInt, den: &Int) -> Option<CycInt> {
    let num = x * adj;
    let mut out = [Int::zero(), Int::zero(), Int::zero(), Int::zero()];
    for (slot, coord) in out.iter_mut().zip(num.c.iter()) {
        let (q, r) = coord.div_rem(den);
        if !r.is_zero() {
            return None;
        }
        *slot = q;
    }
    Some(CycInt::new(out))
}

fn validate(config: &[OVec]) -> Result<Vec<OVec>> {
    if config.is_empty() {
        return Err(Error::ZeroVector);
    }
    let mut canon = Vec::with_capacity(config.len());
    let mut seen = BTreeSet::new();
    for v in config {
        if v.is_zero() {
            return Err(Error::ZeroVector);
        }
        if !v.is_primitive() {
            return Err(Error::NotPrimitive);
        }
        let c = v.canonical();
        if !seen.insert(c.clone()) {
            return Err(Error::Undecided(
                "configuration contains torsion-equivalent vectors".into(),
            ));
        }
        canon.push(c);
    }
    Ok(canon)
}

/// When every vector of the configuration lies on one line, returns a
/// primitive generator of the line and the unit ratios of the vectors to it.
fn cusp_line(config: &[OVec]) -> Option<(OVec, Vec<CycInt>)> {
    let w = &config[0];
    let mut units = Vec::with_capacity(config.len());
    for v in config {
        if !det2(w, v).is_zero() {
            return None;
        }
        let (num, den) = if !w.alpha.is_zero() {
            (&v.alpha, &w.alpha)
        } else {
            (&v.beta, &w.beta)
        };
        let mu = div_exact(num, den)?;
        if &mu * &w.alpha != v.alpha || &mu * &w.beta != v.beta {
            return None;
        }
        debug_assert_eq!(abs_norm(&mu), Int::one());
        units.push(mu);
    }
    Some((w.clone(), units))
}

/// Writes a unit as torsion times a power of the fundamental totally
/// positive unit and returns the exponent.
fn unit_exponent(mu: &CycInt) -> Result<i64> {
    let mut down = mu.clone();
    let mut up = mu.clone();
    for a in 0..=200i64 {
        if is_torsion(&down) {
            return Ok(a);
        }
        if a > 0 && is_torsion(&up) {
            return Ok(-a);
        }
        down = &down * &u5_inv();
        up = &up * &u5();
    }
    Err(Error::Undecided("unit exponent out of range".into()))
}

fn shear() -> GMat {
    GMat::new([
        [CycInt::one(), CycInt::one()],
        [CycInt::zero(), CycInt::one()],
    ])
    .expect("unit determinant")
}

/// A non-identity unipotent matrix fixing every vector on the line of w.
fn line_fixing_unipotent(w: &OVec) -> Result<GMat> {
    let p = w.complete_to_basis()?;
    let u = p.mul(&shear()).mul(&p.inverse());
    debug_assert!(!u.is_identity());
    Ok(u)
}

fn maps_config(g: &GMat, base: &[OVec], target_set: &BTreeSet<OVec>) -> bool {
    base.iter()
        .all(|v| target_set.contains(&g.apply(v).canonical()))
}

/// Complete enumeration of matrices carrying `base` onto `target` modulo
/// torsion. With `want_all` the full list is returned; otherwise the search
/// stops at the first hit. Requires `base` to contain an independent pair.
fn pair_search(base: &[OVec], target: &[OVec], want_all: bool) -> Result<Vec<GMat>> {
    let target_set: BTreeSet<OVec> = target.iter().cloned().collect();
    let m = target.len();
    let mut norms = vec![vec![Int::zero(); m]; m];
    for k in 0..m {
        for l in 0..m {
            if k != l {
                norms[k][l] = abs_norm(&det2(&target[k], &target[l]));
            }
        }
    }
    let mut best: Option<(usize, usize, Int, usize)> = None;
    for i in 0..base.len() {
        for j in (i + 1)..base.len() {
            let d = det2(&base[i], &base[j]);
            if d.is_zero() {
                continue;
            }
            let inv = abs_norm(&d);
            let count = (0..m)
                .flat_map(|k| (0..m).map(move |l| (k, l)))
                .filter(|&(k, l)| k != l && norms[k][l] == inv)
                .count();
            if best.as_ref().map_or(true, |b| count < b.3) {
                best = Some((i, j, inv.clone(), count));
            }
        }
    }
    let (i, j, inv, _) = best.ok_or_else(|| {
        Error::Undecided("configuration has no independent pair".into())
    })?;
    let (p1, p2) = (&base[i], &base[j]);
    let det_p = det2(p1, p2);
    let adj = conjugate_product(&det_p);
    let den = (&det_p * &adj).c[0].abs();
    let sign = if (&det_p * &adj).c[0].is_negative() {
        -CycInt::one()
    } else {
        CycInt::one()
    };
    let adj = &adj * &sign;
    // adjugate of the matrix with columns p1, p2
    let adj_p = [
        [p2.beta.clone(), -(&p2.alpha).clone()],
        [-(&p1.beta).clone(), p1.alpha.clone()],
    ];
    let torsions = torsion_units();
    let mut found = Vec::new();
    for k in 0..m {
        for l in 0..m {
            if k == l || norms[k][l] != inv {
                continue;
            }
            let (wk, wl) = (&target[k], &target[l]);
            // numerator of the candidate splits as t1 * kk + t2 * ll
            let kk = [
                [&wk.alpha * &adj_p[0][0], &wk.alpha * &adj_p[0][1]],
                [&wk.beta * &adj_p[0][0], &wk.beta * &adj_p[0][1]],
            ];
            let ll = [
                [&wl.alpha * &adj_p[1][0], &wl.alpha * &adj_p[1][1]],
                [&wl.beta * &adj_p[1][0], &wl.beta * &adj_p[1][1]],
            ];
            for t1 in torsions.iter() {
                for t2 in torsions.iter() {
                    let entry = |r: usize, c: usize| -> Option<CycInt> {
                        let num = &(t1 * &kk[r][c]) + &(t2 * &ll[r][c]);
                        divide_with(&num, &adj, &den)
                    };
                    let Some(e00) = entry(0, 0) else { continue };
                    let Some(e01) = entry(0, 1) else { continue };
                    let Some(e10) = entry(1, 0) else { continue };
                    let Some(e11) = entry(1, 1) else { continue };
                    let Ok(g) = GMat::new([[e00, e01], [e10, e11]]) else {
                        continue;
                    };
                    if maps_config(&g, base, &target_set) {
                        if !want_all {
                            return Ok(vec![g]);
                        }
                        found.push(g);
                    }
                }
            }
        }
    }
    Ok(found)
}

fn gmat_key(g: &GMat) -> Vec<Int> {
    g.e.iter()
        .flat_map(|row| row.iter())
        .flat_map(|x| x.c.iter().cloned())
        .collect()
}

/// All matrices permuting the configuration modulo torsion, or an infinite
/// verdict with a unipotent certificate when the configuration lies on one
/// line (then the whole line-fixing unipotent group stabilizes it).
pub fn stabilizer(config: &[OVec]) -> Result<GroupRecord> {
    let canon = validate(config)?;
    if let Some((w, _)) = cusp_line(&canon) {
        let u = line_fixing_unipotent(&w)?;
        debug_assert!(canon.iter().all(|v| u.apply(v) == *v));
        return Ok(GroupRecord {
            order: GroupOrder::Infinite,
            elements: Vec::new(),
            certificate: Some(u),
        });
    }
    let mut elements = pair_search(&canon, &canon, true)?;
    elements.sort_by_key(gmat_key);
    Ok(GroupRecord {
        order: GroupOrder::Finite(elements.len() as u64),
        elements,
        certificate: None,
    })
}

/// Decides whether some unit-determinant integral matrix carries `base`
/// onto `target` modulo torsion, returning one when it exists.
pub fn conjugacy(base: &[OVec], target: &[OVec]) -> Result<ConjugacyOutcome> {
    let b = validate(base)?;
    let t = validate(target)?;
    if b.len() != t.len() {
        return Ok(ConjugacyOutcome::Distinct);
    }
    match (cusp_line(&b), cusp_line(&t)) {
        (Some(lb), Some(lt)) => one_line_conjugacy(&b, lb, &t, lt),
        (Some(_), None) | (None, Some(_)) => Ok(ConjugacyOutcome::Distinct),
        (None, None) => {
            let mut base_inv: Vec<Int> = pair_invariants(&b);
            let mut target_inv: Vec<Int> = pair_invariants(&t);
            base_inv.sort();
            target_inv.sort();
            if base_inv != target_inv {
                return Ok(ConjugacyOutcome::Distinct);
            }
            let hits = pair_search(&b, &t, false)?;
            Ok(match hits.into_iter().next() {
                Some(g) => ConjugacyOutcome::Conjugate(g),
                None => ConjugacyOutcome::Distinct,
            })
        }
    }
}

/// Multiset of absolute determinant norms over unordered pairs; invariant
/// under the action and under torsion rescaling of individual vectors.
pub fn pair_invariants(config: &[OVec]) -> Vec<Int> {
    let mut out = Vec::new();
    for i in 0..config.len() {
        for j in (i + 1)..config.len() {
            out.push(abs_norm(&det2(&config[i], &config[j])));
        }
    }
    out.sort();
    out
}

fn one_line_conjugacy(
    base: &[OVec],
    (wb, mus): (OVec, Vec<CycInt>),
    target: &[OVec],
    (wt, nus): (OVec, Vec<CycInt>),
) -> Result<ConjugacyOutcome> {
    let mut a = mus
        .iter()
        .map(unit_exponent)
        .collect::<Result<Vec<i64>>>()?;
    let mut b = nus
        .iter()
        .map(unit_exponent)
        .collect::<Result<Vec<i64>>>()?;
    a.sort_unstable();
    b.sort_unstable();
    let shift = b[0] - a[0];
    if a.iter().map(|x| x + shift).ne(b.iter().copied()) {
        return Ok(ConjugacyOutcome::Distinct);
    }
    let pb = wb.complete_to_basis()?;
    let pt = wt.complete_to_basis()?;
    let d = GMat::new([
        [u5_pow(shift), CycInt::zero()],
        [CycInt::zero(), u5_pow(-shift)],
    ])?;
    let g = pt.mul(&d).mul(&pb.inverse());
    let target_set: BTreeSet<OVec> = target.iter().cloned().collect();
    debug_assert!(maps_config(&g, base, &target_set));
    if !maps_config(&g, base, &target_set) {
        return Err(Error::Undecided(
            "shift witness fails the membership test".into(),
        ));
    }
    Ok(ConjugacyOutcome::Conjugate(g))
}

/// The distinct permutations the matrices induce on a vertex list, each
/// vertex taken modulo torsion.
pub fn vertex_permutations(elements: &[GMat], vertices: &[OVec]) -> Result<Vec<Vec<usize>>> {
    let index: std::collections::BTreeMap<OVec, usize> = vertices
        .iter()
        .enumerate()
        .map(|(i, v)| (v.canonical(), i))
        .collect();
    let mut perms = BTreeSet::new();
    for g in elements {
        let mut perm = Vec::with_capacity(vertices.len());
        for v in vertices {
            let image = g.apply(v).canonical();
            match index.get(&image) {
                Some(&i) => perm.push(i),
                None => {
                    return Err(Error::Undecided(
                        "matrix does not permute the vertex list".into(),
                    ))
                }
            }
        }
        perms.insert(perm);
    }
    Ok(perms.into_iter().collect())
}

/// True when all elements commute; exits on the first non-commuting pair.
pub fn is_abelian(elements: &[GMat]) -> bool {
    for (i, g) in elements.iter().enumerate() {
        for h in &elements[i + 1..] {
            if g.mul(h) != h.mul(g) {
                return false;
            }
        }
    }
    true
}
