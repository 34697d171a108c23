//! Exact short-vector enumeration for positive definite quadratic forms.
//!
//! Works entirely over the rationals: the Gram matrix is factored as
//! L·D·Lᵀ and coordinate ranges are cut with exact integer-sqrt bounds,
//! so the reported vectors are exactly those with Q(x) <= bound, no
//! floating point anywhere.

use crate::error::{Error, Result};
use crate::rat::{ceil_minus_sqrt, floor_plus_sqrt, Int, Rat};
use num::{One, Signed, Zero};

/// What the search should return.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EnumMode {
    /// Every nonzero vector with Q(x) <= bound, one per ± pair.
    AllBelow,
    /// Only the vectors attaining the minimal nonzero value <= bound.
    ShortestNonzero,
}

/// A search request: Gram matrix, bound, and mode.
#[derive(Debug, Clone)]
pub struct EnumRequest {
    pub gram: Vec<Vec<Rat>>,
    pub bound: Rat,
    pub mode: EnumMode,
}

/// One vector found by the search, with its form value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShortVector {
    pub coords: Vec<Int>,
    pub value: Rat,
}

struct Ldl {
    /// Strictly-lower entries, l[j][i] for j > i.
    l: Vec<Vec<Rat>>,
    /// Positive diagonal pivots.
    d: Vec<Rat>,
}

/// Positive-definiteness probe by pivot signs: succeeds exactly when the
/// L·D·Lᵀ factorization goes through with positive pivots.
pub(crate) fn ldl_accepts(gram: &[Vec<Rat>]) -> bool {
    ldl(gram).is_ok()
}

/// L·D·Lᵀ factorization; fails unless the matrix is positive definite.
fn ldl(gram: &[Vec<Rat>]) -> Result<Ldl> {
    let n = gram.len();
    let mut l = vec![vec![Rat::zero(); n]; n];
    let mut d = vec![Rat::zero(); n];
    for i in 0..n {
        let mut di = gram[i][i].clone();
        for k in 0..i {
            di -= &l[i][k] * &l[i][k] * &d[k];
        }
        if !di.is_positive() {
            return Err(Error::NotPositiveDefinite);
        }
        d[i] = di;
        l[i][i] = Rat::one();
        for j in i + 1..n {
            let mut v = gram[j][i].clone();
            for k in 0..i {
                v -= &l[j][k] * &l[i][k] * &d[k];
            }
            l[j][i] = v / &d[i];
        }
    }
    Ok(Ldl { l, d })
}

struct Search<'a> {
    ldl: &'a Ldl,
    n: usize,
    coords: Vec<Int>,
    /// Current acceptance limit; shrinks while hunting for the minimum.
    limit: Rat,
    shrink: bool,
    out: Vec<ShortVector>,
}

impl Search<'_> {
    /// Descends levels n-1 .. 0; `spent` is the value accumulated by the
    /// coordinates above level i, and `top_zero` tracks whether they are
    /// all zero (used to keep one representative per ± pair: the highest
    /// nonzero entry is forced positive).
    fn descend(&mut self, i: usize, spent: &Rat, top_zero: bool) {
        let slack = &self.limit - spent;
        if slack.is_negative() {
            return;
        }
        // Center of the allowed window for x_i.
        let mut c = Rat::zero();
        for j in i + 1..self.n {
            c += &self.ldl.l[j][i] * Rat::from(self.coords[j].clone());
        }
        let t = slack / &self.ldl.d[i];
        let hi = floor_plus_sqrt(&(-c.clone()), &t);
        let lo = if top_zero {
            Int::zero()
        } else {
            ceil_minus_sqrt(&(-c.clone()), &t)
        };
        let mut x = lo;
        while x <= hi {
            let y = Rat::from(x.clone()) + &c;
            let next_spent = spent + &y * &y * &self.ldl.d[i];
            // Re-check against the limit: it may have shrunk mid-window.
            if next_spent <= self.limit {
                self.coords[i] = x.clone();
                let next_zero = top_zero && x.is_zero();
                if i == 0 {
                    if !next_zero {
                        self.emit(next_spent);
                    }
                } else {
                    self.descend(i - 1, &next_spent, next_zero);
                }
            }
            x += Int::one();
        }
        self.coords[i] = Int::zero();
    }

    fn emit(&mut self, value: Rat) {
        if self.shrink {
            if value < self.limit {
                self.limit = value.clone();
                self.out.clear();
            } else if value > self.limit {
                return;
            }
        }
        self.out.push(ShortVector {
            coords: self.coords.clone(),
            value,
        });
    }
}

/// Enumerates nonzero integer vectors with Q(x) <= bound, one per ± pair
/// (the highest-index nonzero coordinate is positive). Results are sorted
/// by (value, coordinates).
pub fn short_vectors(req: &EnumRequest) -> Result<Vec<ShortVector>> {
    let n = req.gram.len();
    if n == 0 {
        return Ok(Vec::new());
    }
    for row in &req.gram {
        if row.len() != n {
            return Err(Error::RankDeficient {
                rank: row.len(),
                expected: n,
            });
        }
    }
    let ldl = ldl(&req.gram)?;
    if req.bound.is_negative() {
        return Ok(Vec::new());
    }
    let mut search = Search {
        ldl: &ldl,
        n,
        coords: vec![Int::zero(); n],
        limit: req.bound.clone(),
        shrink: matches!(req.mode, EnumMode::ShortestNonzero),
        out: Vec::new(),
    };
    search.descend(n - 1, &Rat::zero(), true);
    let mut out = search.out;
    if matches!(req.mode, EnumMode::ShortestNonzero) {
        // Early emits may predate later shrinks of the limit.
        let best = out.iter().map(|v| v.value.clone()).min();
        if let Some(best) = best {
            out.retain(|v| v.value == best);
        }
    }
    out.sort_by(|a, b| a.value.cmp(&b.value).then_with(|| a.coords.cmp(&b.coords)));
    Ok(out)
}

/// Reference search by exhaustive box scan, for cross-checking the main
/// enumeration on small dimensions. Exponential; keep n <= 4 or so.
pub fn short_vectors_bruteforce(req: &EnumRequest) -> Result<Vec<ShortVector>> {
    let n = req.gram.len();
    if n == 0 {
        return Ok(Vec::new());
    }
    ldl(&req.gram)?;
    if req.bound.is_negative() {
        return Ok(Vec::new());
    }
    // Per-coordinate window from the dual form: x_i^2 <= bound * (A^-1)_ii.
    let inv = invert(&req.gram).ok_or(Error::NotPositiveDefinite)?;
    let mut limits = Vec::with_capacity(n);
    for (i, row) in inv.iter().enumerate() {
        let m = floor_plus_sqrt(&Rat::zero(), &(&req.bound * &row[i]));
        limits.push(m.max(Int::zero()));
    }
    let mut out = Vec::new();
    let mut coords = vec![Int::zero(); n];
    scan_box(req, &limits, &mut coords, n, &mut out);
    if matches!(req.mode, EnumMode::ShortestNonzero) {
        let best = out.iter().map(|v: &ShortVector| v.value.clone()).min();
        if let Some(best) = best {
            out.retain(|v| v.value == best);
        }
    }
    out.sort_by(|a: &ShortVector, b| a.value.cmp(&b.value).then_with(|| a.coords.cmp(&b.coords)));
    Ok(out)
}

fn scan_box(
    req: &EnumRequest,
    limits: &[Int],
    coords: &mut Vec<Int>,
    level: usize,
    out: &mut Vec<ShortVector>,
) {
    if level == 0 {
        if coords.iter().all(|c| c.is_zero()) {
            return;
        }
        // One representative per ± pair: highest nonzero coordinate positive.
        let last = coords.iter().rposition(|c| !c.is_zero()).unwrap();
        if coords[last].is_negative() {
            return;
        }
        let value = eval_gram(&req.gram, coords);
        if value <= req.bound {
            out.push(ShortVector {
                coords: coords.clone(),
                value,
            });
        }
        return;
    }
    let i = level - 1;
    let lim = limits[i].clone();
    let mut x = -lim.clone();
    while x <= lim {
        coords[i] = x.clone();
        scan_box(req, limits, coords, i, out);
        x += Int::one();
    }
    coords[i] = Int::zero();
}

fn eval_gram(gram: &[Vec<Rat>], x: &[Int]) -> Rat {
    let n = gram.len();
    let mut acc = Rat::zero();
    for i in 0..n {
        for j in 0..n {
            acc += &gram[i][j] * Rat::from(&x[i] * &x[j]);
        }
    }
    acc
}

/// Exact inverse of a square rational matrix, None if singular.
pub fn invert(a: &[Vec<Rat>]) -> Option<Vec<Vec<Rat>>> {
    let n = a.len();
    let mut m: Vec<Vec<Rat>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| {
                if i == j {
                    Rat::one()
                } else {
                    Rat::zero()
                }
            }));
            r
        })
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, p);
        let inv = m[col][col].recip();
        for c in 0..2 * n {
            let v = &m[col][c] * &inv;
            m[col][c] = v;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in 0..2 * n {
                    let v = &m[r][c] - &f * &m[col][c];
                    m[r][c] = v;
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[n..].to_vec()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat_int;

    fn gram_from(rows: &[&[i64]]) -> Vec<Vec<Rat>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| rat_int(x)).collect())
            .collect()
    }

    #[test]
    fn cubic_lattice_counts() {
        let req = EnumRequest {
            gram: gram_from(&[
                &[1, 0, 0, 0],
                &[0, 1, 0, 0],
                &[0, 0, 1, 0],
                &[0, 0, 0, 1],
            ]),
            bound: rat_int(4),
            mode: EnumMode::AllBelow,
        };
        let found = short_vectors(&req).unwrap();
        // |x|^2 <= 4 in Z^4, one per ± pair: 4 + 12 + 16 + 12 = 44.
        assert_eq!(found.len(), 44);
        let brute = short_vectors_bruteforce(&req).unwrap();
        assert_eq!(found, brute);
    }

    #[test]
    fn e8_kissing_number() {
        let gram = gram_from(&[
            &[2, -1, 0, 0, 0, 0, 0, 0],
            &[-1, 2, -1, 0, 0, 0, 0, 0],
            &[0, -1, 2, -1, 0, 0, 0, 0],
            &[0, 0, -1, 2, -1, 0, 0, 0],
            &[0, 0, 0, -1, 2, -1, 0, -1],
            &[0, 0, 0, 0, -1, 2, -1, 0],
            &[0, 0, 0, 0, 0, -1, 2, 0],
            &[0, 0, 0, 0, -1, 0, 0, 2],
        ]);
        let req = EnumRequest {
            gram,
            bound: rat_int(2),
            mode: EnumMode::ShortestNonzero,
        };
        let found = short_vectors(&req).unwrap();
        assert_eq!(found.len(), 120);
        assert!(found.iter().all(|v| v.value == rat_int(2)));
    }

    #[test]
    fn shortest_mode_shrinks() {
        let req = EnumRequest {
            gram: gram_from(&[&[1, 0], &[0, 3]]),
            bound: rat_int(10),
            mode: EnumMode::ShortestNonzero,
        };
        let found = short_vectors(&req).unwrap();
        assert_eq!(found.len(), 1);
        assert_eq!(found[0].coords, vec![crate::rat::int(1), crate::rat::int(0)]);
        assert_eq!(found[0].value, rat_int(1));
    }

    #[test]
    fn not_positive_definite_rejected() {
        let req = EnumRequest {
            gram: gram_from(&[&[1, 2], &[2, 1]]),
            bound: rat_int(1),
            mode: EnumMode::AllBelow,
        };
        assert!(matches!(
            short_vectors(&req),
            Err(Error::NotPositiveDefinite)
        ));
    }

    #[test]
    fn fractional_gram() {
        // Gram with denominators; value equality must be exact.
        let gram = vec![
            vec![rat_int(3) / rat_int(5), rat_int(1) / rat_int(5)],
            vec![rat_int(1) / rat_int(5), rat_int(2) / rat_int(5)],
        ];
        let req = EnumRequest {
            gram,
            bound: rat_int(2),
            mode: EnumMode::AllBelow,
        };
        let found = short_vectors(&req).unwrap();
        let brute = short_vectors_bruteforce(&req).unwrap();
        assert_eq!(found, brute);
        assert!(!found.is_empty());
    }
}
