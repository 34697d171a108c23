//! Exact computational machinery for binary Hermitian forms over the fifth
//! cyclotomic field.

pub mod cyclotomic;
pub mod enumerate;
pub mod error;
pub mod golden;
pub mod hermitian;
pub mod interval;
pub mod linalg;
pub mod polyhedra;
pub mod rat;
pub mod serial;
pub mod voronoi;

pub use cyclotomic::{CycInt, CycNum, GaloisTag, KNum};
pub use enumerate::{short_vectors, EnumMode, EnumRequest, ShortVector};
pub use error::{Error, Result};
pub use hermitian::{
    lift_rank_one, pairing, q_map, GMat, HermForm, MinData, OVec, RankOnePoint,
};
pub use polyhedra::{
    face_lattice, facets, facets_by_pivoting, Face, FaceLattice, Facet, PointConfig,
};
pub use rat::{Int, Rat};
pub use serial::CensusDto;
pub use voronoi::{
    build_census, build_complex, classify_cones, classify_min_configs, classify_perfect_forms,
    conjugacy, find_perfect_form, initial_form, neighbor, stabilizer, verify_initial_form,
    Complex, ConeClass, ConjugacyOutcome, GroupOrder, GroupRecord, NeighborStep,
    PerfectFormRecord,
};
