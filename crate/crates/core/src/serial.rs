//! Plain-data snapshot of a classification run.
//!
//! Everything numeric is carried as a decimal or `p/q` string so the JSON
//! encoding is exact, diff-friendly, and stable across platforms. Exporting
//! the same census twice produces identical bytes; importing and re-exporting
//! is the identity on bytes.

use crate::cyclotomic::{CycInt, CycNum, KNum};
use crate::error::{Error, Result};
use crate::hermitian::{GMat, HermForm, OVec};
use crate::rat::{format_rat, parse_rat, Int};
use serde::{Deserialize, Serialize};

/// A binary Hermitian form: the two diagonal entries as coordinates over
/// {1, u} with u the fundamental totally positive unit, and the off-diagonal
/// entry as coordinates over {1, z, z^2, z^3}.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FormDto {
    pub a: Vec<String>,
    pub b: Vec<String>,
    pub c: Vec<String>,
}

/// A column vector with two integral entries, each written over the basis
/// {1, z, z^2, z^3}.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VectorDto {
    pub alpha: Vec<String>,
    pub beta: Vec<String>,
}

/// An integral 2x2 matrix of unit determinant, stored by columns.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixDto {
    pub columns: Vec<VectorDto>,
}

/// One facet of the cone over the rank-one points of the minimal vectors:
/// an inner normal in the rational coordinates of the form space and the
/// 1-based indices of the vertices lying on the facet.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FacetDto {
    pub normal: Vec<String>,
    pub vertices: Vec<usize>,
}

/// A stabilizer orbit of facets: how many vertices those facets have, the
/// orbit size, and the 1-based index of a representative facet.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OrbitDto {
    pub vertex_count: usize,
    pub size: usize,
    pub representative: usize,
}

/// A perfect form sharing a facet with the base form, together with a change
/// of basis carrying it back to the base form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NeighborDto {
    pub facet: usize,
    pub form: FormDto,
    pub witness: MatrixDto,
}

/// A conjugacy class of cones (equivalently, of minimal-vector
/// configurations): representative vertex indices are 1-based into the
/// census vector list, and `order` is the stabilizer order as a decimal
/// string or the word "infinite".
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassDto {
    pub label: String,
    pub rank: usize,
    pub representative: Vec<usize>,
    pub members: usize,
    pub order: String,
}

/// Complete result of a classification run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CensusDto {
    pub schema: u32,
    pub form: FormDto,
    pub minimum: String,
    pub signed_minimal_vectors: usize,
    pub minimal_vectors: Vec<VectorDto>,
    pub facets: Vec<FacetDto>,
    pub stabilizer_order: String,
    pub stabilizer_abelian: bool,
    pub facet_orbits: Vec<OrbitDto>,
    pub perfect_classes: usize,
    pub neighbors: Vec<NeighborDto>,
    pub cone_classes: Vec<ClassDto>,
    pub min_configs: Vec<ClassDto>,
}

pub const CENSUS_SCHEMA: u32 = 1;

fn parse_int(s: &str) -> Result<Int> {
    s.parse::<Int>()
        .map_err(|_| Error::BadRational(s.to_string()))
}

fn k_to_strings(x: &KNum) -> Vec<String> {
    vec![format_rat(&x.p), format_rat(&x.q)]
}

fn k_from_strings(s: &[String]) -> Result<KNum> {
    if s.len() != 2 {
        return Err(Error::Serialization(
            "diagonal entry needs exactly two coordinates".into(),
        ));
    }
    Ok(KNum::new(parse_rat(&s[0])?, parse_rat(&s[1])?))
}

fn cyc_to_strings(x: &CycNum) -> Vec<String> {
    x.c.iter().map(format_rat).collect()
}

fn cyc_from_strings(s: &[String]) -> Result<CycNum> {
    if s.len() != 4 {
        return Err(Error::Serialization(
            "field element needs exactly four coordinates".into(),
        ));
    }
    Ok(CycNum::new([
        parse_rat(&s[0])?,
        parse_rat(&s[1])?,
        parse_rat(&s[2])?,
        parse_rat(&s[3])?,
    ]))
}

fn cyc_int_to_strings(x: &CycInt) -> Vec<String> {
    x.c.iter().map(|n| n.to_string()).collect()
}

fn cyc_int_from_strings(s: &[String]) -> Result<CycInt> {
    if s.len() != 4 {
        return Err(Error::Serialization(
            "integral element needs exactly four coordinates".into(),
        ));
    }
    Ok(CycInt::new([
        parse_int(&s[0])?,
        parse_int(&s[1])?,
        parse_int(&s[2])?,
        parse_int(&s[3])?,
    ]))
}

pub fn form_to_dto(f: &HermForm) -> FormDto {
    FormDto {
        a: k_to_strings(&f.a),
        b: cyc_to_strings(&f.b),
        c: k_to_strings(&f.c),
    }
}

pub fn form_from_dto(dto: &FormDto) -> Result<HermForm> {
    Ok(HermForm::new(
        k_from_strings(&dto.a)?,
        cyc_from_strings(&dto.b)?,
        k_from_strings(&dto.c)?,
    ))
}

pub fn vector_to_dto(v: &OVec) -> VectorDto {
    VectorDto {
        alpha: cyc_int_to_strings(&v.alpha),
        beta: cyc_int_to_strings(&v.beta),
    }
}

pub fn vector_from_dto(dto: &VectorDto) -> Result<OVec> {
    Ok(OVec::new(
        cyc_int_from_strings(&dto.alpha)?,
        cyc_int_from_strings(&dto.beta)?,
    ))
}

pub fn matrix_to_dto(m: &GMat) -> MatrixDto {
    let (u, v) = m.columns();
    MatrixDto {
        columns: vec![vector_to_dto(&u), vector_to_dto(&v)],
    }
}

pub fn matrix_from_dto(dto: &MatrixDto) -> Result<GMat> {
    if dto.columns.len() != 2 {
        return Err(Error::Serialization(
            "matrix needs exactly two columns".into(),
        ));
    }
    let u = vector_from_dto(&dto.columns[0])?;
    let v = vector_from_dto(&dto.columns[1])?;
    GMat::from_columns(&u, &v)
}

/// Serializes a census as pretty-printed JSON with a trailing newline. The
/// field order is fixed by the struct definitions and every value is a
/// string, integer, or bool, so the output is byte-stable.
pub fn census_to_json(census: &CensusDto) -> Result<String> {
    let mut s = serde_json::to_string_pretty(census)
        .map_err(|e| Error::Serialization(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

pub fn census_from_json(text: &str) -> Result<CensusDto> {
    serde_json::from_str(text).map_err(|e| Error::Serialization(e.to_string()))
}
