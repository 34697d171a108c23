//! Exact polyhedral machinery for pointed full-dimensional rational cones
//! given by generating points: facet enumeration along two independent
//! routes (double description and recursive gift wrapping) and the graded
//! face lattice.

use crate::error::{Error, Result};
use crate::linalg::{int_rank, kernel, pivot_columns};
use crate::rat::{primitive_int_vector, Int, Rat};
use num::{Signed, Zero};
use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

/// Generating points of a cone, all nonzero, spanning the full space.
#[derive(Clone, Debug)]
pub struct PointConfig {
    pub dim: usize,
    pub points: Vec<Vec<Int>>,
}

impl PointConfig {
    pub fn new(points: Vec<Vec<Int>>) -> Result<PointConfig> {
        let dim = match points.first() {
            Some(p) => p.len(),
            None => return Err(Error::RankDeficient { rank: 0, expected: 1 }),
        };
        if points.len() > 64 {
            return Err(Error::TooManyPoints(points.len()));
        }
        for p in &points {
            if p.len() != dim {
                return Err(Error::RankDeficient {
                    rank: p.len(),
                    expected: dim,
                });
            }
            if p.iter().all(|x| x.is_zero()) {
                return Err(Error::ZeroVector);
            }
        }
        let rank = int_rank(&points);
        if rank != dim {
            return Err(Error::RankDeficient {
                rank,
                expected: dim,
            });
        }
        Ok(PointConfig { dim, points })
    }

    fn rows(&self, indices: &[usize]) -> Vec<Vec<Int>> {
        indices.iter().map(|&i| self.points[i].clone()).collect()
    }
}

/// Supporting hyperplane of the cone: an inner normal (nonnegative on every
/// point) whose zero set spans one dimension less than the cone.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Facet {
    pub normal: Vec<Int>,
    pub mask: u64,
    pub support: Vec<usize>,
}

fn dot(a: &[Int], b: &[Int]) -> Int {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn primitive_int(v: &[Int]) -> Vec<Int> {
    let rats: Vec<Rat> = v.iter().cloned().map(Rat::from).collect();
    primitive_int_vector(&rats)
}

fn build_facet(cfg: &PointConfig, normal: Vec<Int>) -> Facet {
    let mut support = Vec::new();
    let mut mask = 0u64;
    for (i, p) in cfg.points.iter().enumerate() {
        let d = dot(&normal, p);
        debug_assert!(!d.is_negative(), "normal is not inner");
        if d.is_zero() {
            support.push(i);
            mask |= 1u64 << i;
        }
    }
    debug_assert_eq!(int_rank(&cfg.rows(&support)), cfg.dim - 1);
    Facet {
        normal,
        mask,
        support,
    }
}

/// Facet enumeration by double description: the dual cone is built one
/// inequality at a time from a simplicial start, keeping extreme rays only
/// (combinatorial adjacency on zero sets, valid because the input spans the
/// full space and hence the dual cone is pointed).
pub fn facets(cfg: &PointConfig) -> Result<Vec<Facet>> {
    let d = cfg.dim;
    if d < 2 {
        return Err(Error::Undecided("cone dimension below two".into()));
    }
    let n = cfg.points.len();
    let mut chosen: Vec<usize> = Vec::new();
    for i in 0..n {
        let mut rows = cfg.rows(&chosen);
        rows.push(cfg.points[i].clone());
        if int_rank(&rows) == rows.len() {
            chosen.push(i);
        }
        if chosen.len() == d {
            break;
        }
    }
    debug_assert_eq!(chosen.len(), d);
    let m_rat: Vec<Vec<Rat>> = cfg
        .rows(&chosen)
        .into_iter()
        .map(|r| r.into_iter().map(Rat::from).collect())
        .collect();
    let minv = crate::enumerate::invert(&m_rat).expect("independent rows");
    // Rays of the simplicial dual region: columns of the inverse, each tight
    // at every starting constraint but its own.
    let mut rays: Vec<(Vec<Int>, u64)> = Vec::new();
    for j in 0..d {
        let col: Vec<Rat> = (0..d).map(|i| minv[i][j].clone()).collect();
        let ray = primitive_int_vector(&col);
        let mut mask = 0u64;
        for &i in &chosen {
            if dot(&ray, &cfg.points[i]).is_zero() {
                mask |= 1u64 << i;
            }
        }
        rays.push((ray, mask));
    }
    for i in 0..n {
        if chosen.contains(&i) {
            continue;
        }
        let p = &cfg.points[i];
        let bit = 1u64 << i;
        let mut pos: Vec<(Vec<Int>, u64, Int)> = Vec::new();
        let mut zero: Vec<(Vec<Int>, u64)> = Vec::new();
        let mut neg: Vec<(Vec<Int>, u64, Int)> = Vec::new();
        for (ray, mask) in rays.drain(..) {
            let v = dot(&ray, p);
            if v.is_zero() {
                zero.push((ray, mask | bit));
            } else if v.is_positive() {
                pos.push((ray, mask, v));
            } else {
                neg.push((ray, mask, v));
            }
        }
        if neg.is_empty() {
            rays = pos.into_iter().map(|(r, m, _)| (r, m)).collect();
            rays.extend(zero);
            continue;
        }
        let mut fresh: Vec<(Vec<Int>, u64)> = Vec::new();
        for (rp, mp, vp) in &pos {
            for (rn, mn, vn) in &neg {
                let common = mp & mn;
                let blocked = pos
                    .iter()
                    .map(|(r, m, _)| (r, m))
                    .chain(zero.iter().map(|(r, m)| (r, m)))
                    .chain(neg.iter().map(|(r, m, _)| (r, m)))
                    .any(|(r, m)| r != rp && r != rn && m & common == common);
                if blocked {
                    continue;
                }
                // Positive combination vanishing on the new constraint.
                let comb: Vec<Int> = rp
                    .iter()
                    .zip(rn)
                    .map(|(a, b)| {
                        let vn_abs = -vn.clone();
                        vp * b + vn_abs * a
                    })
                    .collect();
                fresh.push((primitive_int(&comb), common | bit));
            }
        }
        rays = pos.into_iter().map(|(r, m, _)| (r, m)).collect();
        rays.extend(zero);
        rays.extend(fresh);
    }
    let unique: BTreeSet<Vec<Int>> = rays.into_iter().map(|(r, _)| r).collect();
    let mut out: Vec<Facet> = unique
        .into_iter()
        .map(|normal| build_facet(cfg, normal))
        .collect();
    out.sort_by(|a, b| a.normal.cmp(&b.normal));
    Ok(out)
}

/// Facet enumeration by recursive gift wrapping: a first facet is reached by
/// rotating a strictly positive functional onto the boundary, then the facet
/// graph is traversed by pivoting across ridges; ridges of a facet are the
/// facets of its point set one dimension down, found by recursion.
pub fn facets_by_pivoting(cfg: &PointConfig) -> Result<Vec<Facet>> {
    if cfg.dim < 2 {
        return Err(Error::Undecided("cone dimension below two".into()));
    }
    let raw = pivot_hull(&cfg.points, cfg.dim)?;
    let mut out: Vec<Facet> = raw
        .into_iter()
        .map(|(normal, _)| build_facet(cfg, normal))
        .collect();
    out.sort_by(|a, b| a.normal.cmp(&b.normal));
    Ok(out)
}

const PERCEPTRON_CAP: usize = 200_000;

/// A functional strictly positive on every point; exists exactly when the
/// cone generated by the points is pointed.
fn strict_dual_interior(points: &[Vec<Int>]) -> Result<Vec<Int>> {
    let k = points[0].len();
    let mut w = vec![Int::zero(); k];
    for p in points {
        for (wi, pi) in w.iter_mut().zip(p) {
            *wi += pi;
        }
    }
    for _ in 0..PERCEPTRON_CAP {
        match points.iter().find(|p| !dot(&w, p).is_positive()) {
            None => return Ok(w),
            Some(p) => {
                for (wi, pi) in w.iter_mut().zip(p) {
                    *wi += pi;
                }
            }
        }
    }
    Err(Error::Undecided(
        "no strictly positive functional found; the cone may contain a line".into(),
    ))
}

/// Rotates a functional that is nonnegative on all points until its zero set
/// spans one dimension less than the ambient space, without leaving the dual
/// cone. The result is a facet normal.
fn descend_to_facet(points: &[Vec<Int>], start: Vec<Int>) -> Vec<Int> {
    let k = start.len();
    let mut w = start;
    loop {
        let tight: Vec<Vec<Int>> = points
            .iter()
            .filter(|p| dot(&w, p).is_zero())
            .cloned()
            .collect();
        if int_rank(&tight) == k - 1 {
            return primitive_int(&w);
        }
        let tight_rat: Vec<Vec<Rat>> = if tight.is_empty() {
            vec![vec![Rat::zero(); k]]
        } else {
            tight
                .iter()
                .map(|r| r.iter().cloned().map(Rat::from).collect())
                .collect()
        };
        let directions = kernel(&tight_rat);
        let mut rotation: Option<Vec<Int>> = None;
        'outer: for b in &directions {
            let base = primitive_int_vector(b);
            for cand in [base.clone(), base.iter().map(|x| -x).collect()] {
                let has_negative = points.iter().any(|p| dot(&cand, p).is_negative());
                let independent = int_rank(&[cand.clone(), w.clone()]) == 2;
                if has_negative && independent {
                    rotation = Some(cand);
                    break 'outer;
                }
            }
        }
        let y = rotation.expect("rotation direction exists below facet rank");
        let t = points
            .iter()
            .filter_map(|p| {
                let dy = dot(&y, p);
                if dy.is_negative() {
                    Some(Rat::new(dot(&w, p), -dy))
                } else {
                    None
                }
            })
            .min()
            .expect("some point bounds the rotation");
        let moved: Vec<Rat> = w
            .iter()
            .zip(&y)
            .map(|(wi, yi)| Rat::from(wi.clone()) + &t * Rat::from(yi.clone()))
            .collect();
        w = primitive_int_vector(&moved);
        debug_assert!(points.iter().all(|p| !dot(&w, p).is_negative()));
    }
}

/// Crosses the ridge of a facet to the unique other facet containing it:
/// the new normal is an exact min-ratio combination of the old normal and a
/// direction orthogonal to the ridge.
fn pivot_across(
    points: &[Vec<Int>],
    nf: &[Int],
    support: &[usize],
    ridge: &[usize],
) -> Vec<Int> {
    let ridge_rows: Vec<Vec<Int>> = ridge.iter().map(|&i| points[i].clone()).collect();
    let base_rank = int_rank(&ridge_rows);
    let xf = *support
        .iter()
        .find(|&&i| {
            let mut rows = ridge_rows.clone();
            rows.push(points[i].clone());
            int_rank(&rows) > base_rank
        })
        .expect("facet support exceeds the ridge span");
    let ridge_rat: Vec<Vec<Rat>> = ridge_rows
        .iter()
        .map(|r| r.iter().cloned().map(Rat::from).collect())
        .collect();
    let kern = kernel(&ridge_rat);
    debug_assert_eq!(kern.len(), 2);
    let first = primitive_int_vector(&kern[0]);
    let mut y = if int_rank(&[first.clone(), nf.to_vec()]) == 2 {
        first
    } else {
        primitive_int_vector(&kern[1])
    };
    debug_assert_eq!(int_rank(&[y.clone(), nf.to_vec()]), 2);
    let at_xf = dot(&y, &points[xf]);
    debug_assert!(!at_xf.is_zero());
    if at_xf.is_positive() {
        y = y.into_iter().map(|x| -x).collect();
    }
    let ratio = points
        .iter()
        .filter_map(|p| {
            let dn = dot(nf, p);
            if dn.is_positive() {
                Some(Rat::new(dot(&y, p), dn))
            } else {
                None
            }
        })
        .max()
        .expect("full-dimensional cone has points off each facet");
    let fresh: Vec<Rat> = nf
        .iter()
        .zip(&y)
        .map(|(ni, yi)| &ratio * Rat::from(ni.clone()) - Rat::from(yi.clone()))
        .collect();
    let normal = primitive_int_vector(&fresh);
    debug_assert!(points.iter().all(|p| !dot(&normal, p).is_negative()));
    normal
}

fn tight_set(points: &[Vec<Int>], normal: &[Int]) -> Vec<usize> {
    (0..points.len())
        .filter(|&i| dot(normal, &points[i]).is_zero())
        .collect()
}

/// All facets (normal, support) of the pointed cone generated by `points`
/// spanning a k-dimensional space, with k equal to the ambient dimension.
fn pivot_hull(points: &[Vec<Int>], k: usize) -> Result<Vec<(Vec<Int>, Vec<usize>)>> {
    debug_assert_eq!(int_rank(points), k);
    debug_assert_eq!(points[0].len(), k);
    if k == 2 {
        return two_dim_boundary(points);
    }
    let all: Vec<usize> = (0..points.len()).collect();
    let mut cache: SupportCache = HashMap::new();
    let supports = sub_facet_supports(points, &all, k, &mut cache)?;
    let mut out = Vec::with_capacity(supports.len());
    for support in supports {
        let rows: Vec<Vec<Rat>> = support
            .iter()
            .map(|&i| points[i].iter().cloned().map(Rat::from).collect())
            .collect();
        let kern = kernel(&rows);
        debug_assert_eq!(kern.len(), 1);
        let mut normal = primitive_int_vector(&kern[0]);
        let side = points
            .iter()
            .map(|p| dot(&normal, p))
            .find(|d| !d.is_zero())
            .expect("cone spans more than the facet");
        if side.is_negative() {
            normal = normal.into_iter().map(|x| -x).collect();
        }
        debug_assert!(points.iter().all(|p| !dot(&normal, p).is_negative()));
        out.push((normal, support));
    }
    out.sort();
    Ok(out)
}

/// Cache for wrapped sub-cones, keyed by the sorted global index set of their
/// generators. A face is determined by the generators lying on it, so the
/// cache turns the recursion tree into the face graph: each face is wrapped
/// once no matter how many chains of the recursion reach it.
type SupportCache = HashMap<Vec<usize>, Vec<Vec<usize>>>;

/// Facet supports, in global indices, of the sub-cone generated by the
/// `subset` rows of `points`. The subset is sorted and its rows span rank k;
/// they are projected onto k independent coordinates before wrapping, which
/// changes normals but no incidence data.
fn sub_facet_supports(
    points: &[Vec<Int>],
    subset: &[usize],
    k: usize,
    cache: &mut SupportCache,
) -> Result<Vec<Vec<usize>>> {
    if let Some(hit) = cache.get(subset) {
        return Ok(hit.clone());
    }
    let local: Vec<Vec<Int>> = subset.iter().map(|&i| points[i].clone()).collect();
    let cols = pivot_columns(
        &local
            .iter()
            .map(|r| r.iter().cloned().map(Rat::from).collect::<Vec<Rat>>())
            .collect::<Vec<_>>(),
    );
    debug_assert_eq!(cols.len(), k);
    let projected: Vec<Vec<Int>> = local
        .iter()
        .map(|r| cols.iter().map(|&c| r[c].clone()).collect())
        .collect();
    let locals: Vec<Vec<usize>> = if k == 2 {
        two_dim_boundary(&projected)?
            .into_iter()
            .map(|(_, support)| support)
            .collect()
    } else {
        let interior = strict_dual_interior(&projected)?;
        let first = descend_to_facet(&projected, interior);
        let mut seen: BTreeMap<Vec<Int>, Vec<usize>> = BTreeMap::new();
        let mut queue = VecDeque::new();
        seen.insert(first.clone(), tight_set(&projected, &first));
        queue.push_back(first);
        while let Some(normal) = queue.pop_front() {
            let support = seen[&normal].clone();
            let sub_global: Vec<usize> = support.iter().map(|&t| subset[t]).collect();
            for ridge_global in sub_facet_supports(points, &sub_global, k - 1, cache)? {
                let ridge: Vec<usize> = ridge_global
                    .iter()
                    .map(|g| {
                        subset
                            .binary_search(g)
                            .expect("ridge generators lie inside the face")
                    })
                    .collect();
                let neighbor = pivot_across(&projected, &normal, &support, &ridge);
                if !seen.contains_key(&neighbor) {
                    seen.insert(neighbor.clone(), tight_set(&projected, &neighbor));
                    queue.push_back(neighbor);
                }
            }
        }
        seen.into_values().collect()
    };
    let globals: Vec<Vec<usize>> = locals
        .into_iter()
        .map(|s| s.into_iter().map(|t| subset[t]).collect())
        .collect();
    cache.insert(subset.to_vec(), globals.clone());
    Ok(globals)
}

/// Facets of a pointed planar cone: its two boundary rays.
fn two_dim_boundary(points: &[Vec<Int>]) -> Result<Vec<(Vec<Int>, Vec<usize>)>> {
    let det2 = |a: &[Int], b: &[Int]| &a[0] * &b[1] - &a[1] * &b[0];
    let mut out: BTreeMap<Vec<Int>, Vec<usize>> = BTreeMap::new();
    for p in points {
        let mut above = false;
        let mut below = false;
        for q in points {
            let d = det2(p, q);
            if d.is_positive() {
                above = true;
            } else if d.is_negative() {
                below = true;
            }
        }
        if above && below {
            continue;
        }
        let mut normal = vec![-p[1].clone(), p[0].clone()];
        if below {
            normal = normal.into_iter().map(|x| -x).collect();
        }
        let normal = primitive_int(&normal);
        let support: Vec<usize> = (0..points.len())
            .filter(|&j| det2(p, &points[j]).is_zero())
            .collect();
        out.insert(normal, support);
    }
    if out.len() != 2 {
        return Err(Error::Undecided(
            "planar cone does not have two boundary rays; it may contain a line".into(),
        ));
    }
    Ok(out.into_iter().collect())
}

/// Face of the cone as a set of incident generating points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub mask: u64,
    pub rank: usize,
    pub vertices: Vec<usize>,
}

/// All faces of the cone, graded by the dimension of their span.
#[derive(Clone, Debug)]
pub struct FaceLattice {
    pub dim: usize,
    pub faces: Vec<Face>,
}

impl FaceLattice {
    /// Number of faces of each rank, indexed 0..=dim.
    pub fn count_by_rank(&self) -> Vec<usize> {
        let mut counts = vec![0usize; self.dim + 1];
        for f in &self.faces {
            counts[f.rank] += 1;
        }
        counts
    }

    pub fn of_rank(&self, rank: usize) -> Vec<&Face> {
        self.faces.iter().filter(|f| f.rank == rank).collect()
    }
}

/// Builds the full face lattice as the closure of the facet supports under
/// intersection, graded by span dimension, and checks gradedness (every
/// face below the top has a cover one rank up).
pub fn face_lattice(cfg: &PointConfig, facet_list: &[Facet]) -> Result<FaceLattice> {
    let n = cfg.points.len();
    if n > 64 {
        return Err(Error::TooManyPoints(n));
    }
    let full: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut masks: BTreeSet<u64> = BTreeSet::new();
    masks.insert(full);
    masks.insert(0);
    let mut work: VecDeque<u64> = VecDeque::new();
    work.push_back(full);
    while let Some(m) = work.pop_front() {
        for f in facet_list {
            let cut = m & f.mask;
            if cut != m && masks.insert(cut) {
                work.push_back(cut);
            }
        }
    }
    let mut faces: Vec<Face> = masks
        .into_iter()
        .map(|mask| {
            let vertices: Vec<usize> = (0..n).filter(|&i| mask & (1u64 << i) != 0).collect();
            let rank = int_rank(&cfg.rows(&vertices));
            Face {
                mask,
                rank,
                vertices,
            }
        })
        .collect();
    faces.sort_by_key(|f| (f.rank, f.mask));
    let top_rank = faces.last().map(|f| f.rank).unwrap_or(0);
    if top_rank != cfg.dim {
        return Err(Error::RankDeficient {
            rank: top_rank,
            expected: cfg.dim,
        });
    }
    for f in &faces {
        if f.rank == cfg.dim {
            continue;
        }
        let covered = faces
            .iter()
            .any(|g| g.rank == f.rank + 1 && g.mask & f.mask == f.mask);
        if !covered {
            return Err(Error::Undecided(format!(
                "face of rank {} has no cover one rank up",
                f.rank
            )));
        }
    }
    Ok(FaceLattice {
        dim: cfg.dim,
        faces,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(rows: &[&[i64]]) -> PointConfig {
        let points = rows
            .iter()
            .map(|r| r.iter().map(|&x| Int::from(x)).collect())
            .collect();
        PointConfig::new(points).unwrap()
    }

    /// Reference facet search over all (d-1)-subsets; exponential, tests only.
    fn facets_reference(cfg: &PointConfig) -> BTreeSet<Vec<Int>> {
        let d = cfg.dim;
        let mut found = BTreeSet::new();
        let mut subset = vec![0usize; d - 1];
        fn rec(
            cfg: &PointConfig,
            subset: &mut Vec<usize>,
            pos: usize,
            start: usize,
            found: &mut BTreeSet<Vec<Int>>,
        ) {
            let d = cfg.dim;
            let n = cfg.points.len();
            if pos == d - 1 {
                let rows: Vec<Vec<Rat>> = subset
                    .iter()
                    .map(|&i| {
                        cfg.points[i]
                            .iter()
                            .cloned()
                            .map(Rat::from)
                            .collect::<Vec<Rat>>()
                    })
                    .collect();
                if crate::linalg::rank(&rows) != d - 1 {
                    return;
                }
                let kern = kernel(&rows);
                if kern.len() != 1 {
                    return;
                }
                let mut normal = primitive_int_vector(&kern[0]);
                let mut above = false;
                let mut below = false;
                for p in &cfg.points {
                    let v = dot(&normal, p);
                    if v.is_positive() {
                        above = true;
                    } else if v.is_negative() {
                        below = true;
                    }
                }
                if above && below {
                    return;
                }
                if below {
                    normal = normal.into_iter().map(|x| -x).collect();
                }
                found.insert(normal);
                return;
            }
            for i in start..n {
                subset[pos] = i;
                rec(cfg, subset, pos + 1, i + 1, found);
            }
        }
        rec(cfg, &mut subset, 0, 0, &mut found);
        found
    }

    fn assert_routes_agree(cfg: &PointConfig) {
        let a = facets(cfg).unwrap();
        let b = facets_by_pivoting(cfg).unwrap();
        assert_eq!(a, b);
        let normals: BTreeSet<Vec<Int>> = a.iter().map(|f| f.normal.clone()).collect();
        assert_eq!(normals, facets_reference(cfg));
        for f in &a {
            assert_eq!(
                int_rank(&cfg.rows(&f.support)),
                cfg.dim - 1,
                "support spans a hyperplane"
            );
        }
    }

    #[test]
    fn simplicial_cone() {
        let cfg = pts(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        let fs = facets(&cfg).unwrap();
        assert_eq!(fs.len(), 3);
        assert_routes_agree(&cfg);
        let lattice = face_lattice(&cfg, &fs).unwrap();
        assert_eq!(lattice.count_by_rank(), vec![1, 3, 3, 1]);
    }

    #[test]
    fn square_cone() {
        let cfg = pts(&[&[1, 1, 1], &[-1, 1, 1], &[1, -1, 1], &[-1, -1, 1]]);
        let fs = facets(&cfg).unwrap();
        assert_eq!(fs.len(), 4);
        assert_routes_agree(&cfg);
        let lattice = face_lattice(&cfg, &fs).unwrap();
        assert_eq!(lattice.count_by_rank(), vec![1, 4, 4, 1]);
        // Redundant interior generator changes no facet.
        let with_center = pts(&[
            &[1, 1, 1],
            &[-1, 1, 1],
            &[1, -1, 1],
            &[-1, -1, 1],
            &[0, 0, 1],
        ]);
        let fs2 = facets(&with_center).unwrap();
        assert_eq!(fs2.len(), 4);
        assert_routes_agree(&with_center);
    }

    #[test]
    fn cross_polytope_cone() {
        let cfg = pts(&[
            &[1, 0, 0, 1],
            &[-1, 0, 0, 1],
            &[0, 1, 0, 1],
            &[0, -1, 0, 1],
            &[0, 0, 1, 1],
            &[0, 0, -1, 1],
        ]);
        let fs = facets(&cfg).unwrap();
        assert_eq!(fs.len(), 8);
        assert_routes_agree(&cfg);
        let lattice = face_lattice(&cfg, &fs).unwrap();
        assert_eq!(lattice.count_by_rank(), vec![1, 6, 12, 8, 1]);
    }

    #[test]
    fn degenerate_inputs() {
        assert!(PointConfig::new(vec![vec![Int::zero(), Int::zero()]]).is_err());
        // Planar points do not span three dimensions.
        let planar = PointConfig::new(vec![
            vec![Int::from(1), Int::from(0), Int::from(0)],
            vec![Int::from(0), Int::from(1), Int::from(0)],
            vec![Int::from(1), Int::from(1), Int::from(0)],
        ]);
        assert!(planar.is_err());
        // A cone containing a line has no strictly positive functional.
        let line = pts(&[&[1, 0], &[-1, 0], &[0, 1]]);
        assert!(facets_by_pivoting(&line).is_err());
    }

    #[test]
    fn pseudorandom_cones_match_reference() {
        // Deterministic congruential stream; last coordinate forced positive
        // so every instance is pointed.
        let mut state: u64 = 0x9e3779b97f4a7c15;
        let mut next = move || {
            state = state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            state
        };
        let mut tested = 0;
        while tested < 12 {
            let dim = 3 + (next() % 2) as usize;
            let count = dim + 2 + (next() % 3) as usize;
            let points: Vec<Vec<Int>> = (0..count)
                .map(|_| {
                    let mut p: Vec<Int> = (0..dim - 1)
                        .map(|_| Int::from((next() % 7) as i64 - 3))
                        .collect();
                    p.push(Int::from((next() % 3) as i64 + 1));
                    p
                })
                .collect();
            let Ok(cfg) = PointConfig::new(points) else {
                continue;
            };
            assert_routes_agree(&cfg);
            tested += 1;
        }
    }
}
