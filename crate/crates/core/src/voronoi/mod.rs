//! The polyhedral side of the classification.
//!
//! A perfect form spans, through the rank-one points of its minimal
//! vectors, a top-dimensional cone in the eight-dimensional space of forms.
//! This module builds that cone, walks across its facets to the neighboring
//! perfect forms, and classifies forms and cones up to the action of the
//! integral unit-determinant matrices.

pub mod classify;
pub mod group;

pub use classify::{
    build_census, classify_cones, classify_min_configs, facet_orbits, ConeClass, FacetOrbit,
};
pub use group::{
    conjugacy, is_abelian, stabilizer, vertex_permutations, ConjugacyOutcome, GroupOrder,
    GroupRecord,
};

use crate::enumerate::{short_vectors, EnumMode, EnumRequest};
use crate::error::{Error, Result};
use crate::hermitian::{
    min_config_rank, pairing, pairing_gram8, q_map, GMat, HermForm, MinData, OVec, RankOnePoint,
};
use crate::linalg::kernel;
use crate::polyhedra::{face_lattice, facets, facets_by_pivoting, FaceLattice, Facet, PointConfig};
use crate::rat::{primitive_int_vector, rat, rat_int, Int, Rat};
use num::{One, Signed, Zero};
use std::collections::BTreeSet;

/// The base perfect form together with its minimal vectors, the cone over
/// their rank-one points, the cone's facets, and the full face lattice.
pub struct Complex {
    pub form: HermForm,
    pub min: MinData,
    pub config: PointConfig,
    pub facets: Vec<Facet>,
    pub lattice: FaceLattice,
}

impl Complex {
    /// Minimal vectors modulo torsion, in canonical order; the cone point
    /// with index i is the rank-one point of `vertices()[i]`.
    pub fn vertices(&self) -> &[OVec] {
        &self.min.orbit_reps
    }
}

/// The built-in starting form. It is perfect with minimum 1.
pub fn initial_form() -> HermForm {
    HermForm::from_coords8(&[
        rat(3, 5),
        rat(-1, 5),
        rat(-1, 5),
        rat(1, 5),
        rat(-1, 5),
        rat(1, 5),
        rat(3, 5),
        rat(-1, 5),
    ])
}

/// Checks the structural claims about the starting form: positive definite
/// and perfect. Returns the form with its minimum data for reuse.
pub fn verify_initial_form() -> Result<(HermForm, MinData)> {
    let form = initial_form();
    let data = form.minimum_and_vectors()?;
    if min_config_rank(&data.orbit_reps) != 8 {
        return Err(Error::Undecided(
            "starting form is not perfect: its rank-one points do not span".into(),
        ));
    }
    Ok((form, data))
}

/// Builds the cone over the rank-one points of the starting form's minimal
/// vectors. With `cross_check` the facets are computed by both the double
/// description method and recursive gift wrapping, which must agree exactly;
/// otherwise only the first is used.
pub fn build_complex(cross_check: bool) -> Result<Complex> {
    let (form, min) = verify_initial_form()?;
    let points: Vec<Vec<Int>> = min
        .orbit_reps
        .iter()
        .map(|v| RankOnePoint::from_vector(v).coords)
        .collect();
    let config = PointConfig::new(points)?;
    let facet_list = facets(&config)?;
    if cross_check {
        let wrapped = facets_by_pivoting(&config)?;
        if facet_list != wrapped {
            return Err(Error::Undecided(
                "facet enumeration algorithms disagree".into(),
            ));
        }
    }
    let lattice = face_lattice(&config, &facet_list)?;
    Ok(Complex {
        form,
        min,
        config,
        facets: facet_list,
        lattice,
    })
}

/// Result of a line search: the exact step length, the form at the step,
/// and the canonical new vectors that join the minimum there.
#[derive(Clone, Debug)]
pub struct LineHit {
    pub rho: Rat,
    pub form: HermForm,
    pub joined: Vec<OVec>,
}

/// Moves from `phi` along `dir` to the first point where a new vector
/// reaches the value `m`. The vectors in `keep` must evaluate to `m` and be
/// orthogonal to the direction, so they stay on the minimum throughout.
///
/// The step is found exactly: once a positive-definite witness `hi` past
/// the crossing is bracketed, every vector with value at most `m` there is
/// enumerated and the smallest crossing parameter (m - phi(w)) / <q(w), dir>
/// over the decreasing vectors is the answer. Returns None when the search
/// window grows huge without any crossing.
pub fn line_search(
    phi: &HermForm,
    m: &Rat,
    keep: &BTreeSet<OVec>,
    dir: &HermForm,
) -> Result<Option<LineHit>> {
    debug_assert!(keep.iter().all(|v| phi.evaluate(v) == *m));
    debug_assert!(keep.iter().all(|v| pairing(&q_map(v), dir).is_zero()));
    let half = rat(1, 2);
    let two = rat_int(2);
    let mut hi = Rat::one();
    let mut guard = 0;
    while !(phi + &dir.scale(&hi)).is_positive_definite() {
        hi = &hi * &half;
        guard += 1;
        if guard > 128 {
            return Err(Error::Undecided(
                "no positive definite point on the ray".into(),
            ));
        }
    }
    for _ in 0..64 {
        let cand = phi + &dir.scale(&hi);
        let data = cand.minimum_and_vectors()?;
        let unchanged = data.min == *m
            && data.orbit_reps.len() == keep.len()
            && data.orbit_reps.iter().all(|v| keep.contains(v));
        if !unchanged {
            return exact_crossing(phi, m, keep, dir, &cand).map(Some);
        }
        let lo = hi.clone();
        hi = &hi * &two;
        let mut squeeze = 0;
        while !(phi + &dir.scale(&hi)).is_positive_definite() {
            hi = (&lo + &hi) * &half;
            squeeze += 1;
            if squeeze > 128 {
                return Err(Error::Undecided(
                    "minimum unchanged up to the definiteness boundary".into(),
                ));
            }
        }
    }
    Ok(None)
}

fn exact_crossing(
    phi: &HermForm,
    m: &Rat,
    keep: &BTreeSet<OVec>,
    dir: &HermForm,
    witness: &HermForm,
) -> Result<LineHit> {
    let found = short_vectors(&EnumRequest {
        gram: witness.gram8(),
        bound: m.clone(),
        mode: EnumMode::AllBelow,
    })?;
    let mut rho: Option<Rat> = None;
    let mut joined: BTreeSet<OVec> = BTreeSet::new();
    for sv in &found {
        let w = OVec::from_coords8(&sv.coords);
        let slope = pairing(&q_map(&w), dir);
        if !slope.is_negative() {
            continue;
        }
        let t = (m - &phi.evaluate(&w)) / &slope;
        debug_assert!(t.is_positive());
        match &rho {
            Some(r) if &t > r => {}
            Some(r) if &t == r => {
                joined.insert(w.canonical());
            }
            _ => {
                rho = Some(t);
                joined.clear();
                joined.insert(w.canonical());
            }
        }
    }
    let rho = rho.ok_or_else(|| {
        Error::Undecided("minimum moved without any decreasing vector".into())
    })?;
    let form = phi + &dir.scale(&rho);
    debug_assert!(form.is_positive_definite());
    debug_assert!(joined.iter().all(|w| form.evaluate(w) == *m));
    debug_assert!(keep.iter().all(|v| form.evaluate(v) == *m));
    Ok(LineHit {
        rho,
        form,
        joined: joined.into_iter().collect(),
    })
}

/// The perfect form on the other side of a facet, with the exact step.
#[derive(Clone, Debug)]
pub struct NeighborStep {
    pub facet: usize,
    pub rho: Rat,
    pub form: HermForm,
    pub joined: Vec<OVec>,
}

/// Converts a facet normal, living in the dual of the point coordinates,
/// into the form realizing the same functional through the pairing.
fn direction_from_normal(normal: &[Int]) -> HermForm {
    let g = pairing_gram8();
    let inverse = crate::enumerate::invert(g).expect("pairing matrix is invertible");
    let n: Vec<Rat> = normal.iter().cloned().map(Rat::from).collect();
    let coords: Vec<Rat> = (0..8)
        .map(|i| (0..8).map(|j| &inverse[i][j] * &n[j]).sum())
        .collect();
    let prim = primitive_int_vector(&coords);
    HermForm::from_coords8(&prim.into_iter().map(Rat::from).collect::<Vec<_>>())
}

/// Walks across one facet of the cone to the neighboring perfect form: the
/// facet's vertices stay on minimum 1, every other vertex leaves it, and the
/// walk stops exactly where the first new vectors arrive.
pub fn neighbor(complex: &Complex, facet_index: usize) -> Result<NeighborStep> {
    let facet: &Facet = complex
        .facets
        .get(facet_index)
        .ok_or_else(|| Error::Undecided("facet index out of range".into()))?;
    let dir = direction_from_normal(&facet.normal);
    let vertices = complex.vertices();
    let keep: BTreeSet<OVec> = facet.support.iter().map(|&i| vertices[i].clone()).collect();
    let m = complex.min.min.clone();
    let hit = line_search(&complex.form, &m, &keep, &dir)?
        .ok_or_else(|| Error::Undecided("no crossing beyond the facet".into()))?;
    let data = hit.form.minimum_and_vectors()?;
    if data.min != m {
        return Err(Error::Undecided("facet walk changed the minimum".into()));
    }
    let reps: BTreeSet<OVec> = data.orbit_reps.iter().cloned().collect();
    if !keep.iter().all(|v| reps.contains(v)) || !hit.joined.iter().all(|v| reps.contains(v)) {
        return Err(Error::Undecided(
            "facet walk lost expected minimal vectors".into(),
        ));
    }
    Ok(NeighborStep {
        facet: facet_index,
        rho: hit.rho,
        form: hit.form,
        joined: hit.joined,
    })
}

/// A neighboring perfect form with a change of basis carrying it back to
/// the base form of the complex.
#[derive(Clone, Debug)]
pub struct PerfectFormRecord {
    pub facet: usize,
    pub rho: Rat,
    pub form: HermForm,
    pub witness: GMat,
}

/// Classifies the perfect forms reachable across the given facets
/// (typically one representative per stabilizer orbit). Returns the number
/// of classes including the base form, and for every neighbor conjugate to
/// the base form the witness matrix g with form.act(g) equal to the base.
pub fn classify_perfect_forms(
    complex: &Complex,
    facet_reps: &[usize],
) -> Result<(usize, Vec<PerfectFormRecord>)> {
    let base_reps = complex.vertices();
    let mut records = Vec::new();
    let mut strangers: Vec<Vec<OVec>> = Vec::new();
    for &f in facet_reps {
        let step = neighbor(complex, f)?;
        let data = step.form.minimum_and_vectors()?;
        if min_config_rank(&data.orbit_reps) != 8 {
            return Err(Error::Undecided("neighbor form is not perfect".into()));
        }
        match group::conjugacy(&data.orbit_reps, base_reps)? {
            ConjugacyOutcome::Conjugate(g) => {
                if step.form.act(&g) != complex.form {
                    return Err(Error::Undecided(
                        "vector witness does not carry the neighbor form back".into(),
                    ));
                }
                records.push(PerfectFormRecord {
                    facet: f,
                    rho: step.rho,
                    form: step.form,
                    witness: g,
                });
            }
            ConjugacyOutcome::Distinct => {
                let already = strangers.iter().any(|other| {
                    matches!(
                        group::conjugacy(&data.orbit_reps, other),
                        Ok(ConjugacyOutcome::Conjugate(_))
                    )
                });
                if !already {
                    strangers.push(data.orbit_reps.clone());
                }
            }
        }
    }
    Ok((1 + strangers.len(), records))
}

/// Finds a perfect form from scratch: starting at the identity form, walk
/// along directions orthogonal to all current rank-one points until new
/// vectors join the minimum, growing the configuration until it spans. The
/// result is scaled to minimum 1. The budget caps the number of line
/// searches.
pub fn find_perfect_form(budget: usize) -> Result<HermForm> {
    use crate::cyclotomic::{CycNum, KNum};
    let mut phi = HermForm::new(KNum::one(), CycNum::zero(), KNum::one());
    let mut spent = 0usize;
    loop {
        let data = phi.minimum_and_vectors()?;
        if min_config_rank(&data.orbit_reps) == 8 {
            let unit = Rat::one() / &data.min;
            return Ok(phi.scale(&unit));
        }
        let g = pairing_gram8();
        let rows: Vec<Vec<Rat>> = data
            .orbit_reps
            .iter()
            .map(|v| {
                let x = q_map(v).coords8();
                (0..8)
                    .map(|j| (0..8).map(|i| &x[i] * &g[i][j]).sum())
                    .collect()
            })
            .collect();
        let directions = kernel(&rows);
        let keep: BTreeSet<OVec> = data.orbit_reps.iter().cloned().collect();
        let mut advanced = false;
        'dirs: for b in &directions {
            let prim = primitive_int_vector(b);
            let forward =
                HermForm::from_coords8(&prim.iter().cloned().map(Rat::from).collect::<Vec<_>>());
            let backward = forward.scale(&rat_int(-1));
            for dir in [forward, backward] {
                spent += 1;
                if spent > budget {
                    return Err(Error::PoolExhausted { nodes: budget });
                }
                match line_search(&phi, &data.min, &keep, &dir) {
                    Ok(Some(hit)) => {
                        phi = hit.form;
                        advanced = true;
                        break 'dirs;
                    }
                    Ok(None) => {}
                    Err(Error::Undecided(_)) => {}
                    Err(e) => return Err(e),
                }
            }
        }
        if !advanced {
            return Err(Error::Undecided(
                "imperfect form admits no growth direction".into(),
            ));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn starting_form_is_perfect() {
        let (form, data) = verify_initial_form().unwrap();
        assert_eq!(data.min, Rat::one());
        assert_eq!(data.vectors.len(), 240);
        assert_eq!(data.orbit_reps.len(), 24);
        assert!(form.is_positive_definite());
    }

    #[test]
    fn walk_from_identity_reaches_a_perfect_form() {
        let found = find_perfect_form(400).unwrap();
        let data = found.minimum_and_vectors().unwrap();
        assert_eq!(data.min, Rat::one());
        assert_eq!(min_config_rank(&data.orbit_reps), 8);
        let (_, base) = verify_initial_form().unwrap();
        let outcome = group::conjugacy(&data.orbit_reps, &base.orbit_reps).unwrap();
        let g = outcome.witness().expect("perfect forms are all conjugate");
        assert_eq!(found.act(g), initial_form());
    }
}
