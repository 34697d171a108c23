//! Frozen outputs of the full pipeline.
//!
//! The numbers and reference objects here were produced by a verified run
//! and double-checked against independent computations; the test suite and
//! the command line `--check` mode compare fresh results against them. The
//! raw data lives in `data/golden.json` and is compiled into the library.

use crate::error::{Error, Result};
use crate::hermitian::{HermForm, OVec};
use crate::rat::{parse_rat, Rat};
use crate::serial::{form_from_dto, vector_from_dto, FormDto, VectorDto};
use once_cell::sync::Lazy;
use serde::Deserialize;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GoldenDto {
    schema: u32,
    form: FormDto,
    minimum: String,
    signed_minimal_vectors: usize,
    vector_orbits: usize,
    reference_vectors: Vec<VectorDto>,
    facet_count: usize,
    facet_sizes: Vec<(usize, usize)>,
    face_rank_counts: Vec<usize>,
    stabilizer_order: u64,
    stabilizer_abelian: bool,
    facet_orbit_sizes: Vec<(usize, Vec<usize>)>,
    perfect_classes: usize,
    neighbor_count: usize,
    cone_classes: Vec<(String, usize, usize, String)>,
    min_config_rank_counts: Vec<(usize, usize)>,
    reference_configs: Vec<Vec<usize>>,
}

/// Expected results, with field elements parsed into their exact types.
/// Vertex indices in `reference_configs` are 1-based into
/// `reference_vectors`.
pub struct Golden {
    pub form: HermForm,
    pub minimum: Rat,
    pub signed_minimal_vectors: usize,
    pub vector_orbits: usize,
    pub reference_vectors: Vec<OVec>,
    pub facet_count: usize,
    pub facet_sizes: Vec<(usize, usize)>,
    pub face_rank_counts: Vec<usize>,
    pub stabilizer_order: u64,
    pub stabilizer_abelian: bool,
    pub facet_orbit_sizes: Vec<(usize, Vec<usize>)>,
    pub perfect_classes: usize,
    pub neighbor_count: usize,
    pub cone_classes: Vec<(String, usize, usize, String)>,
    pub min_config_rank_counts: Vec<(usize, usize)>,
    pub reference_configs: Vec<Vec<usize>>,
}

static RAW: &str = include_str!("../data/golden.json");

fn load() -> Result<Golden> {
    let dto: GoldenDto =
        serde_json::from_str(RAW).map_err(|e| Error::Serialization(e.to_string()))?;
    if dto.schema != 1 {
        return Err(Error::Serialization(format!(
            "unsupported golden schema {}",
            dto.schema
        )));
    }
    let reference_vectors = dto
        .reference_vectors
        .iter()
        .map(vector_from_dto)
        .collect::<Result<Vec<_>>>()?;
    Ok(Golden {
        form: form_from_dto(&dto.form)?,
        minimum: parse_rat(&dto.minimum)?,
        signed_minimal_vectors: dto.signed_minimal_vectors,
        vector_orbits: dto.vector_orbits,
        reference_vectors,
        facet_count: dto.facet_count,
        facet_sizes: dto.facet_sizes,
        face_rank_counts: dto.face_rank_counts,
        stabilizer_order: dto.stabilizer_order,
        stabilizer_abelian: dto.stabilizer_abelian,
        facet_orbit_sizes: dto.facet_orbit_sizes,
        perfect_classes: dto.perfect_classes,
        neighbor_count: dto.neighbor_count,
        cone_classes: dto.cone_classes,
        min_config_rank_counts: dto.min_config_rank_counts,
        reference_configs: dto.reference_configs,
    })
}

static GOLDEN: Lazy<Golden> = Lazy::new(|| load().expect("bundled reference data is well formed"));

/// The frozen reference results.
pub fn reference() -> &'static Golden {
    &GOLDEN
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn reference_data_is_consistent() {
        let g = reference();
        assert_eq!(g.reference_vectors.len(), 24);
        assert_eq!(g.vector_orbits, 24);
        assert_eq!(g.signed_minimal_vectors, 240);
        assert_eq!(g.cone_classes.len(), 42);
        assert_eq!(g.reference_configs.len(), 43);
        assert_eq!(g.facet_count, 118);
        let size_total: usize = g.facet_sizes.iter().map(|&(_, n)| n).sum();
        assert_eq!(size_total, g.facet_count);
        let orbit_total: usize = g
            .facet_orbit_sizes
            .iter()
            .flat_map(|(_, sizes)| sizes.iter())
            .sum();
        assert_eq!(orbit_total, g.facet_count);
        assert_eq!(
            g.facet_orbit_sizes
                .iter()
                .map(|(_, sizes)| sizes.len())
                .sum::<usize>(),
            g.neighbor_count
        );
        let rank_total: usize = g.min_config_rank_counts.iter().map(|&(_, n)| n).sum();
        assert_eq!(rank_total, g.reference_configs.len());
        assert_eq!(g.face_rank_counts.len(), 9);
        assert_eq!(g.face_rank_counts[8], 1);
        assert_eq!(g.face_rank_counts[7], g.facet_count);
        assert_eq!(g.face_rank_counts[1], g.reference_vectors.len());
    }

    #[test]
    fn config_sizes_match_class_vertex_counts() {
        let g = reference();
        let mut from_classes: Vec<usize> =
            g.cone_classes.iter().map(|&(_, v, _, _)| v).collect();
        from_classes.push(1);
        from_classes.sort_unstable();
        let mut from_configs: Vec<usize> =
            g.reference_configs.iter().map(|c| c.len()).collect();
        from_configs.sort_unstable();
        assert_eq!(from_classes, from_configs);
    }

    #[test]
    fn reference_configs_are_valid_index_sets() {
        let g = reference();
        let mut seen = BTreeSet::new();
        for config in &g.reference_configs {
            assert!(!config.is_empty());
            let set: BTreeSet<usize> = config.iter().copied().collect();
            assert_eq!(set.len(), config.len(), "duplicate index in {config:?}");
            assert!(set.iter().all(|&i| (1..=24).contains(&i)));
            assert!(seen.insert(set), "duplicate config {config:?}");
        }
    }

    #[test]
    fn reference_vectors_generate_the_expected_minimum_data() {
        let g = reference();
        let data = g.form.minimum_and_vectors().unwrap();
        assert_eq!(data.min, g.minimum);
        assert_eq!(data.vectors.len(), g.signed_minimal_vectors);
        let computed: BTreeSet<OVec> = data.orbit_reps.iter().cloned().collect();
        let canonical: BTreeSet<OVec> = g
            .reference_vectors
            .iter()
            .map(|v| v.canonical())
            .collect();
        assert_eq!(canonical.len(), 24);
        assert_eq!(computed, canonical);
        for v in &g.reference_vectors {
            assert!(v.is_primitive());
            assert_eq!(g.form.evaluate(v), g.minimum);
        }
    }
}
