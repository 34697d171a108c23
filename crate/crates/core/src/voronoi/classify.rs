//! Orbit and conjugacy classification of facets and cone faces, and the
//! census assembling every computed result into one serializable record.

use std::collections::{BTreeMap, BTreeSet};

use super::group::{self, ConjugacyOutcome, GroupOrder};
use super::{classify_perfect_forms, Complex};
use crate::error::{Error, Result};
use crate::hermitian::OVec;
use crate::rat::{format_rat, Int};
use crate::serial::{
    form_to_dto, matrix_to_dto, vector_to_dto, CensusDto, ClassDto, FacetDto, NeighborDto,
    OrbitDto, CENSUS_SCHEMA,
};

fn permute_mask(perm: &[usize], mask: u64) -> u64 {
    let mut out = 0u64;
    for (i, &pi) in perm.iter().enumerate() {
        if mask >> i & 1 == 1 {
            out |= 1 << pi;
        }
    }
    out
}

/// Partitions masks into orbits under the permutation group. Returns, for
/// each orbit, the sorted member indices. `index` maps a mask back to its
/// position in the input list; an image missing from it is an error.
fn mask_orbits(masks: &[u64], perms: &[Vec<usize>]) -> Result<Vec<Vec<usize>>> {
    let index: BTreeMap<u64, usize> = masks.iter().enumerate().map(|(i, &m)| (m, i)).collect();
    let mut seen = vec![false; masks.len()];
    let mut orbits = Vec::new();
    for start in 0..masks.len() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut members = BTreeSet::new();
        members.insert(start);
        let mut queue = vec![start];
        while let Some(at) = queue.pop() {
            for p in perms {
                let image = permute_mask(p, masks[at]);
                let Some(&j) = index.get(&image) else {
                    return Err(Error::Undecided(
                        "stabilizer moved a face outside the complex".into(),
                    ));
                };
                if !seen[j] {
                    seen[j] = true;
                    members.insert(j);
                    queue.push(j);
                }
            }
        }
        orbits.push(members.into_iter().collect());
    }
    Ok(orbits)
}

/// An orbit of facets under the vertex permutations induced by the
/// stabilizer of the base form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FacetOrbit {
    pub vertex_count: usize,
    pub representative: usize,
    pub members: Vec<usize>,
}

/// Groups the facets of the complex into orbits under the stabilizer,
/// sorted by vertex count and then by smallest member index.
pub fn facet_orbits(complex: &Complex, perms: &[Vec<usize>]) -> Result<Vec<FacetOrbit>> {
    let masks: Vec<u64> = complex.facets.iter().map(|f| f.mask).collect();
    let mut orbits: Vec<FacetOrbit> = mask_orbits(&masks, perms)?
        .into_iter()
        .map(|members| FacetOrbit {
            vertex_count: complex.facets[members[0]].support.len(),
            representative: members[0],
            members,
        })
        .collect();
    orbits.sort_by_key(|o| (o.vertex_count, o.representative));
    Ok(orbits)
}

/// A conjugacy class of faces of the complex: the rank and vertex count of
/// its members, a representative vertex set, the number of faces in the
/// class, and the order of the representative's stabilizer.
#[derive(Clone, Debug)]
pub struct ConeClass {
    pub label: String,
    pub rank: usize,
    pub vertex_count: usize,
    pub representative: Vec<usize>,
    pub members: usize,
    pub order: GroupOrder,
}

fn class_label(rank: usize, position: usize, classes_in_rank: usize) -> String {
    let letter = (b'A' + (8 - rank) as u8) as char;
    if classes_in_rank == 1 {
        letter.to_string()
    } else {
        format!("{}{}", letter, position + 1)
    }
}

struct ClassAcc {
    rank: usize,
    vertex_count: usize,
    representative: Vec<usize>,
    config: Vec<OVec>,
    members: usize,
}

/// Classifies every face of rank at least two up to the action of the full
/// matrix group: first into stabilizer orbits by permutation of vertex
/// masks, then orbits are merged whenever some unit-determinant matrix
/// carries one representative vertex set onto the other. Faces agreeing in
/// rank, vertex count, and the multiset of pairwise determinant norms are
/// the only merge candidates; each candidate pair is settled by the exact
/// conjugacy search. Class labels go from A for the full cone down by rank.
pub fn classify_cones(complex: &Complex, perms: &[Vec<usize>]) -> Result<Vec<ConeClass>> {
    let vertices = complex.vertices();
    let relevant: Vec<(u64, usize, Vec<usize>)> = complex
        .lattice
        .faces
        .iter()
        .filter(|f| f.rank >= 2)
        .map(|f| (f.mask, f.rank, f.vertices.clone()))
        .collect();
    let masks: Vec<u64> = relevant.iter().map(|r| r.0).collect();
    let orbits = mask_orbits(&masks, perms)?;

    let mut buckets: BTreeMap<(usize, usize, Vec<Int>), Vec<ClassAcc>> = BTreeMap::new();
    for orbit in &orbits {
        let (_, rank, ref support) = relevant[orbit[0]];
        let config: Vec<OVec> = support.iter().map(|&i| vertices[i].clone()).collect();
        let key = (rank, support.len(), group::pair_invariants(&config));
        let bucket = buckets.entry(key).or_default();
        let mut merged = false;
        for acc in bucket.iter_mut() {
            if let ConjugacyOutcome::Conjugate(_) = group::conjugacy(&config, &acc.config)? {
                acc.members += orbit.len();
                if *support < acc.representative {
                    acc.representative = support.clone();
                    acc.config = config.clone();
                }
                merged = true;
                break;
            }
        }
        if !merged {
            bucket.push(ClassAcc {
                rank,
                vertex_count: support.len(),
                representative: support.clone(),
                config,
                members: orbit.len(),
            });
        }
    }

    let mut accs: Vec<ClassAcc> = buckets.into_values().flatten().collect();
    accs.sort_by(|a, b| {
        (std::cmp::Reverse(a.rank), a.vertex_count, &a.representative).cmp(&(
            std::cmp::Reverse(b.rank),
            b.vertex_count,
            &b.representative,
        ))
    });

    let mut per_rank: BTreeMap<usize, usize> = BTreeMap::new();
    for acc in &accs {
        *per_rank.entry(acc.rank).or_default() += 1;
    }
    let mut face_count_by_rank: BTreeMap<usize, usize> = BTreeMap::new();
    for (_, rank, _) in &relevant {
        *face_count_by_rank.entry(*rank).or_default() += 1;
    }
    let mut covered_by_rank: BTreeMap<usize, usize> = BTreeMap::new();
    for acc in &accs {
        *covered_by_rank.entry(acc.rank).or_default() += acc.members;
    }
    if covered_by_rank != face_count_by_rank {
        return Err(Error::Undecided(
            "class sizes do not cover the face counts".into(),
        ));
    }

    let mut position: BTreeMap<usize, usize> = BTreeMap::new();
    let mut out = Vec::with_capacity(accs.len());
    for acc in accs {
        let pos = position.entry(acc.rank).or_default();
        let label = class_label(acc.rank, *pos, per_rank[&acc.rank]);
        *pos += 1;
        let stab = group::stabilizer(&acc.config)?;
        out.push(ConeClass {
            label,
            rank: acc.rank,
            vertex_count: acc.vertex_count,
            representative: acc.representative,
            members: acc.members,
            order: stab.order,
        });
    }
    Ok(out)
}

/// The minimal-vector configurations at points of the closed cone are the
/// vertex sets of its faces, so their classification extends the cone
/// classification by the single class of one-vertex configurations.
pub fn classify_min_configs(
    complex: &Complex,
    cone_classes: &[ConeClass],
) -> Result<Vec<ConeClass>> {
    let vertices = complex.vertices();
    let singleton = vec![vertices[0].clone()];
    let stab = group::stabilizer(&singleton)?;
    let rays = complex
        .lattice
        .faces
        .iter()
        .filter(|f| f.rank == 1)
        .count();
    let mut out = cone_classes.to_vec();
    out.push(ConeClass {
        label: "H".to_string(),
        rank: 1,
        vertex_count: 1,
        representative: vec![0],
        members: rays,
        order: stab.order,
    });
    Ok(out)
}

fn class_to_dto(class: &ConeClass) -> ClassDto {
    ClassDto {
        label: class.label.clone(),
        rank: class.rank,
        representative: class.representative.iter().map(|&i| i + 1).collect(),
        members: class.members,
        order: class.order.as_string(),
    }
}

/// Runs the whole pipeline on a built complex and collects the results
/// into the serializable census. All vertex and facet indices are
/// one-based; vectors are listed in canonical order.
pub fn build_census(complex: &Complex) -> Result<CensusDto> {
    let vertices = complex.vertices();
    let stab = group::stabilizer(vertices)?;
    let GroupOrder::Finite(_) = stab.order else {
        return Err(Error::Undecided("base form stabilizer is infinite".into()));
    };
    let perms = group::vertex_permutations(&stab.elements, vertices)?;
    let orbits = facet_orbits(complex, &perms)?;
    let reps: Vec<usize> = orbits.iter().map(|o| o.representative).collect();
    let (perfect_classes, neighbors) = classify_perfect_forms(complex, &reps)?;
    let cone_classes = classify_cones(complex, &perms)?;
    let min_configs = classify_min_configs(complex, &cone_classes)?;

    Ok(CensusDto {
        schema: CENSUS_SCHEMA,
        form: form_to_dto(&complex.form),
        minimum: format_rat(&complex.min.min),
        signed_minimal_vectors: complex.min.vectors.len(),
        minimal_vectors: vertices.iter().map(vector_to_dto).collect(),
        facets: complex
            .facets
            .iter()
            .map(|f| FacetDto {
                normal: f.normal.iter().map(|x| x.to_string()).collect(),
                vertices: f.support.iter().map(|&i| i + 1).collect(),
            })
            .collect(),
        stabilizer_order: stab.order.as_string(),
        stabilizer_abelian: group::is_abelian(&stab.elements),
        facet_orbits: orbits
            .iter()
            .map(|o| OrbitDto {
                vertex_count: o.vertex_count,
                size: o.members.len(),
                representative: o.representative + 1,
            })
            .collect(),
        perfect_classes,
        neighbors: neighbors
            .iter()
            .map(|n| NeighborDto {
                facet: n.facet + 1,
                form: form_to_dto(&n.form),
                witness: matrix_to_dto(&n.witness),
            })
            .collect(),
        cone_classes: cone_classes.iter().map(class_to_dto).collect(),
        min_configs: min_configs.iter().map(class_to_dto).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::voronoi::build_complex;

    #[test]
    fn facet_orbit_partition() {
        let complex = build_complex(false).unwrap();
        let stab = group::stabilizer(complex.vertices()).unwrap();
        assert_eq!(stab.order, GroupOrder::Finite(600));
        let perms = group::vertex_permutations(&stab.elements, complex.vertices()).unwrap();
        assert_eq!(perms.len(), 60);
        let orbits = facet_orbits(&complex, &perms).unwrap();
        let total: usize = orbits.iter().map(|o| o.members.len()).sum();
        assert_eq!(total, complex.facets.len());
        let mut sizes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for o in &orbits {
            sizes.entry(o.vertex_count).or_default().push(o.members.len());
        }
        for v in sizes.values_mut() {
            v.sort_unstable();
        }
        assert_eq!(sizes[&7], vec![12, 12]);
        assert_eq!(sizes[&9], vec![20, 20, 20, 20]);
        assert_eq!(sizes[&12], vec![1, 1, 12]);
    }
}
