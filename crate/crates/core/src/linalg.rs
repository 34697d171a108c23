//! Exact dense linear algebra over the rationals and integers.
//!
//! Small fixed-size systems only; everything here is O(n^3) elimination with
//! big integers, which is plenty for dimension eight.

use crate::rat::{Int, Rat};
use num::{Integer, One, Signed, Zero};

/// Rank of a rational matrix given as rows.
pub fn rank(rows: &[Vec<Rat>]) -> usize {
    let mut m: Vec<Vec<Rat>> = rows.to_vec();
    let nrows = m.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = m[0].len();
    let mut rank = 0;
    let mut col = 0;
    while rank < nrows && col < ncols {
        let pivot = (rank..nrows).find(|&r| !m[r][col].is_zero());
        let Some(p) = pivot else {
            col += 1;
            continue;
        };
        m.swap(rank, p);
        let inv = m[rank][col].recip();
        for c in col..ncols {
            let v = &m[rank][c] * &inv;
            m[rank][c] = v;
        }
        for r in 0..nrows {
            if r != rank && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..ncols {
                    let v = &m[r][c] - &f * &m[rank][c];
                    m[r][c] = v;
                }
            }
        }
        rank += 1;
        col += 1;
    }
    rank
}

/// Rank of an integer matrix (rows), fraction-free.
pub fn int_rank(rows: &[Vec<Int>]) -> usize {
    let mut m: Vec<Vec<Int>> = rows.to_vec();
    let nrows = m.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = m[0].len();
    let mut rank = 0;
    let mut col = 0;
    let mut prev = Int::one();
    while rank < nrows && col < ncols {
        let pivot = (rank..nrows).find(|&r| !m[r][col].is_zero());
        let Some(p) = pivot else {
            col += 1;
            continue;
        };
        m.swap(rank, p);
        for r in rank + 1..nrows {
            for c in col + 1..ncols {
                let v = (&m[rank][col] * &m[r][c] - &m[r][col] * &m[rank][c]) / &prev;
                m[r][c] = v;
            }
            m[r][col] = Int::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
        col += 1;
    }
    rank
}

/// Outcome of solving A x = b for x.
#[derive(Debug, Clone)]
pub enum SolveOutcome {
    NoSolution,
    Unique(Vec<Rat>),
    /// Solutions form an affine space of the given positive dimension;
    /// carries one particular solution and a basis of the homogeneous kernel.
    Underdetermined {
        particular: Vec<Rat>,
        kernel: Vec<Vec<Rat>>,
    },
}

/// Solves a general rectangular rational system A x = b by row reduction.
pub fn solve(a: &[Vec<Rat>], b: &[Rat]) -> SolveOutcome {
    let nrows = a.len();
    assert_eq!(nrows, b.len());
    let ncols = if nrows == 0 { 0 } else { a[0].len() };
    let mut m: Vec<Vec<Rat>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let mut pivots: Vec<usize> = Vec::new();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..nrows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let inv = m[rank][col].recip();
        for c in col..=ncols {
            let v = &m[rank][c] * &inv;
            m[rank][c] = v;
        }
        for r in 0..nrows {
            if r != rank && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..=ncols {
                    let v = &m[r][c] - &f * &m[rank][c];
                    m[r][c] = v;
                }
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    for r in rank..nrows {
        if !m[r][ncols].is_zero() {
            return SolveOutcome::NoSolution;
        }
    }
    let mut particular = vec![Rat::zero(); ncols];
    for (i, &col) in pivots.iter().enumerate() {
        particular[col] = m[i][ncols].clone();
    }
    if rank == ncols {
        return SolveOutcome::Unique(particular);
    }
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    let mut kernel = Vec::new();
    for &f in &free {
        let mut v = vec![Rat::zero(); ncols];
        v[f] = Rat::one();
        for (i, &col) in pivots.iter().enumerate() {
            v[col] = -m[i][f].clone();
        }
        kernel.push(v);
    }
    SolveOutcome::Underdetermined { particular, kernel }
}

/// Unique solution of a square nonsingular system, or None.
pub fn solve_square(a: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    match solve(a, b) {
        SolveOutcome::Unique(x) => Some(x),
        _ => None,
    }
}

/// Basis of the right kernel {x : A x = 0} of a rational matrix.
pub fn kernel(a: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let ncols = if a.is_empty() { 0 } else { a[0].len() };
    match solve(a, &vec![Rat::zero(); a.len()]) {
        SolveOutcome::Underdetermined { kernel, .. } => kernel,
        SolveOutcome::Unique(_) => Vec::new(),
        SolveOutcome::NoSolution => unreachable!("homogeneous system is always consistent"),
        // ncols == 0 cannot reach here; keep the compiler informed
    }
    .into_iter()
    .map(|mut v| {
        v.truncate(ncols);
        v
    })
    .collect()
}

/// Indices of a maximal set of linearly independent rows, greedy in order.
pub fn independent_rows(rows: &[Vec<Rat>]) -> Vec<usize> {
    let mut chosen: Vec<Vec<Rat>> = Vec::new();
    let mut idx = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        chosen.push(row.clone());
        if rank(&chosen) == chosen.len() {
            idx.push(i);
        } else {
            chosen.pop();
        }
    }
    idx
}

/// Column indices carrying the pivots of a row reduction. Projection onto
/// these columns is injective on the row space.
pub fn pivot_columns(rows: &[Vec<Rat>]) -> Vec<usize> {
    let mut m: Vec<Vec<Rat>> = rows.to_vec();
    let ncols = if m.is_empty() { 0 } else { m[0].len() };
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let lead = m[r][col].clone();
        for j in col..ncols {
            m[r][j] = &m[r][j] / &lead;
        }
        for i in 0..m.len() {
            if i != r && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                for j in col..ncols {
                    let sub = &f * &m[r][j];
                    m[i][j] = &m[i][j] - &sub;
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    pivots
}

/// Row-style Hermite normal form with transform: returns (H, U) with
/// U * A = H, U unimodular, H with positive pivots and reduced entries
/// above them, zero rows last.
pub fn hnf_with_transform(a: &[Vec<Int>]) -> (Vec<Vec<Int>>, Vec<Vec<Int>>) {
    let nrows = a.len();
    let ncols = if nrows == 0 { 0 } else { a[0].len() };
    let mut h: Vec<Vec<Int>> = a.to_vec();
    let mut u: Vec<Vec<Int>> = (0..nrows)
        .map(|i| {
            let mut row = vec![Int::zero(); nrows];
            row[i] = Int::one();
            row
        })
        .collect();
    let mut pivot_row = 0;
    for col in 0..ncols {
        // Euclidean elimination below the pivot.
        loop {
            let mut best: Option<usize> = None;
            for r in pivot_row..nrows {
                if !h[r][col].is_zero() {
                    let better = match best {
                        None => true,
                        Some(b) => h[r][col].abs() < h[b][col].abs(),
                    };
                    if better {
                        best = Some(r);
                    }
                }
            }
            let Some(b) = best else { break };
            h.swap(pivot_row, b);
            u.swap(pivot_row, b);
            let mut done = true;
            for r in pivot_row + 1..nrows {
                if !h[r][col].is_zero() {
                    let q = div_round(&h[r][col], &h[pivot_row][col]);
                    row_sub(&mut h, r, pivot_row, &q);
                    row_sub(&mut u, r, pivot_row, &q);
                    if !h[r][col].is_zero() {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if pivot_row < nrows && !h[pivot_row][col].is_zero() {
            if h[pivot_row][col].is_negative() {
                row_neg(&mut h, pivot_row);
                row_neg(&mut u, pivot_row);
            }
            // Reduce entries above the pivot into [0, pivot).
            for r in 0..pivot_row {
                let q = h[r][col].div_floor(&h[pivot_row][col]);
                if !q.is_zero() {
                    row_sub(&mut h, r, pivot_row, &q);
                    row_sub(&mut u, r, pivot_row, &q);
                }
            }
            pivot_row += 1;
            if pivot_row == nrows {
                break;
            }
        }
    }
    (h, u)
}

/// Nonzero rows of the Hermite normal form: a canonical basis of the row span.
pub fn hnf_basis(a: &[Vec<Int>]) -> Vec<Vec<Int>> {
    let (h, _) = hnf_with_transform(a);
    h.into_iter().filter(|r| r.iter().any(|x| !x.is_zero())).collect()
}

fn row_sub(m: &mut [Vec<Int>], dst: usize, src: usize, q: &Int) {
    if q.is_zero() {
        return;
    }
    let src_row = m[src].clone();
    for (d, s) in m[dst].iter_mut().zip(src_row.iter()) {
        *d -= q * s;
    }
}

fn row_neg(m: &mut [Vec<Int>], r: usize) {
    for x in m[r].iter_mut() {
        let v = -x.clone();
        *x = v;
    }
}

/// Rounded integer division, ties toward negative infinity.
fn div_round(a: &Int, b: &Int) -> Int {
    let two = Int::from(2);
    (a * &two + b).div_floor(&(b * &two))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{int, rat_int};

    fn irow(v: &[i64]) -> Vec<Int> {
        v.iter().map(|&x| int(x)).collect()
    }

    fn qrow(v: &[i64]) -> Vec<Rat> {
        v.iter().map(|&x| rat_int(x)).collect()
    }

    #[test]
    fn rank_agreement() {
        let rows_q = vec![qrow(&[1, 2, 3]), qrow(&[2, 4, 6]), qrow(&[0, 1, 1])];
        let rows_i = vec![irow(&[1, 2, 3]), irow(&[2, 4, 6]), irow(&[0, 1, 1])];
        assert_eq!(rank(&rows_q), 2);
        assert_eq!(int_rank(&rows_i), 2);
    }

    #[test]
    fn solve_unique_and_under() {
        let a = vec![qrow(&[1, 1]), qrow(&[1, -1])];
        match solve(&a, &[rat_int(3), rat_int(1)]) {
            SolveOutcome::Unique(x) => assert_eq!(x, vec![rat_int(2), rat_int(1)]),
            other => panic!("expected unique, got {other:?}"),
        }
        let a = vec![qrow(&[1, 1])];
        match solve(&a, &[rat_int(3)]) {
            SolveOutcome::Underdetermined { particular, kernel } => {
                assert_eq!(particular[0].clone() + particular[1].clone(), rat_int(3));
                assert_eq!(kernel.len(), 1);
            }
            other => panic!("expected underdetermined, got {other:?}"),
        }
        let a = vec![qrow(&[1, 1]), qrow(&[1, 1])];
        match solve(&a, &[rat_int(1), rat_int(2)]) {
            SolveOutcome::NoSolution => {}
            other => panic!("expected no solution, got {other:?}"),
        }
    }

    #[test]
    fn hnf_transform_invariant() {
        let a = vec![irow(&[4, 6]), irow(&[2, 2]), irow(&[6, 8])];
        let (h, u) = hnf_with_transform(&a);
        // U * A = H
        for i in 0..3 {
            for j in 0..2 {
                let mut acc = Int::zero();
                for k in 0..3 {
                    acc += &u[i][k] * &a[k][j];
                }
                assert_eq!(acc, h[i][j]);
            }
        }
        let basis = hnf_basis(&a);
        assert_eq!(basis, vec![irow(&[2, 0]), irow(&[0, 2])]);
    }

    #[test]
    fn kernel_orthogonal() {
        let a = vec![qrow(&[1, 2, 3])];
        let k = kernel(&a);
        assert_eq!(k.len(), 2);
        for v in &k {
            let dot: Rat = v
                .iter()
                .zip(&a[0])
                .map(|(x, y)| x * y)
                .fold(Rat::zero(), |s, t| s + t);
            assert!(dot.is_zero());
        }
    }
}
