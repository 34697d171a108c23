//! Deterministic report rendering. Identical input always yields identical
//! bytes, so cached and freshly computed runs produce the same artifacts.

use std::collections::BTreeMap;

use anyhow::Result;
use serde_json::json;
use vorform::serial::{CensusDto, ClassDto, FacetDto, NeighborDto};

use crate::Format;

fn pretty(value: &serde_json::Value) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

fn md_table(headers: &[&str], align_last_left: bool, rows: &[Vec<String>]) -> String {
    let mut out = String::new();
    out.push('|');
    for h in headers {
        out.push_str(&format!(" {h} |"));
    }
    out.push('\n');
    out.push('|');
    for (i, _) in headers.iter().enumerate() {
        if align_last_left && i + 1 == headers.len() {
            out.push_str(":---|");
        } else {
            out.push_str("---:|");
        }
    }
    out.push('\n');
    for row in rows {
        out.push('|');
        for cell in row {
            out.push_str(&format!(" {cell} |"));
        }
        out.push('\n');
    }
    out
}

fn csv_table(header: &str, rows: &[Vec<String>]) -> String {
    let mut out = String::from(header);
    out.push('\n');
    for row in rows {
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

pub fn facet_histogram(facets: &[FacetDto]) -> String {
    let mut sizes: BTreeMap<usize, usize> = BTreeMap::new();
    for f in facets {
        *sizes.entry(f.vertices.len()).or_default() += 1;
    }
    let parts: Vec<String> = sizes
        .iter()
        .rev()
        .map(|(size, count)| format!("{count}x{size}"))
        .collect();
    format!("{} facets: {}", facets.len(), parts.join(", "))
}

pub fn verify_report(
    format: Format,
    minimum: &str,
    signed: usize,
    orbits: usize,
    perfect: bool,
    height_bound: i64,
    lambda_rank: usize,
) -> Result<String> {
    match format {
        Format::Json => pretty(&json!({
            "minimum": minimum,
            "signed_minimal_vectors": signed,
            "vector_orbits": orbits,
            "perfect": perfect,
            "box_certificate_height": height_bound,
            "rank_one_lattice_rank": lambda_rank,
        })),
        Format::Csv => Ok(csv_table(
            "minimum,signed_vectors,orbits,perfect,lattice_rank",
            &[vec![
                minimum.to_string(),
                signed.to_string(),
                orbits.to_string(),
                perfect.to_string(),
                lambda_rank.to_string(),
            ]],
        )),
        Format::Md => Ok(format!(
            "minimum: {minimum}\n{signed} minimal vectors / {orbits} mod torsion\nperfect: {}\nbox certificate up to height {height_bound}: no smaller value\nrank-one lattice rank: {lambda_rank}\n",
            if perfect { "yes" } else { "no" }
        )),
    }
}

pub fn facets_report(format: Format, facets: &[FacetDto]) -> Result<String> {
    match format {
        Format::Json => pretty(&serde_json::to_value(facets)?),
        Format::Csv => {
            let rows: Vec<Vec<String>> = facets
                .iter()
                .enumerate()
                .map(|(i, f)| {
                    vec![
                        (i + 1).to_string(),
                        f.vertices.len().to_string(),
                        f.vertices
                            .iter()
                            .map(|v| v.to_string())
                            .collect::<Vec<_>>()
                            .join(" "),
                    ]
                })
                .collect();
            Ok(csv_table("facet,vertices,support", &rows))
        }
        Format::Md => {
            let rows: Vec<Vec<String>> = facets
                .iter()
                .enumerate()
                .map(|(i, f)| {
                    vec![
                        (i + 1).to_string(),
                        f.vertices.len().to_string(),
                        f.vertices
                            .iter()
                            .map(|v| v.to_string())
                            .collect::<Vec<_>>()
                            .join(" "),
                    ]
                })
                .collect();
            Ok(format!(
                "{}\n\n{}",
                facet_histogram(facets),
                md_table(&["facet", "vertices", "support"], true, &rows)
            ))
        }
    }
}

pub fn stabilizer_report(
    format: Format,
    order: &str,
    abelian: bool,
    elements: usize,
) -> Result<String> {
    match format {
        Format::Json => pretty(&json!({
            "order": order,
            "abelian": abelian,
            "elements": elements,
        })),
        Format::Csv => Ok(csv_table(
            "order,abelian,elements",
            &[vec![order.to_string(), abelian.to_string(), elements.to_string()]],
        )),
        Format::Md => Ok(format!(
            "order: {order}\nabelian: {}\nelements listed: {elements}\n",
            if abelian { "yes" } else { "no" }
        )),
    }
}

pub fn neighbors_report(
    format: Format,
    perfect_classes: usize,
    neighbors: &[NeighborDto],
) -> Result<String> {
    match format {
        Format::Json => pretty(&json!({
            "perfect_classes": perfect_classes,
            "neighbors": serde_json::to_value(neighbors)?,
        })),
        Format::Csv => {
            let rows: Vec<Vec<String>> = neighbors
                .iter()
                .map(|n| vec![n.facet.to_string(), "yes".to_string()])
                .collect();
            Ok(csv_table("facet,conjugate", &rows))
        }
        Format::Md => {
            let rows: Vec<Vec<String>> = neighbors
                .iter()
                .map(|n| vec![n.facet.to_string(), "yes".to_string()])
                .collect();
            Ok(format!(
                "{perfect_classes} perfect class(es); {} neighbors checked\n\n{}",
                neighbors.len(),
                md_table(&["facet", "conjugate"], true, &rows)
            ))
        }
    }
}

pub fn classes_report(format: Format, classes: &[ClassDto]) -> Result<String> {
    let rows: Vec<Vec<String>> = classes
        .iter()
        .map(|c| {
            vec![
                c.label.clone(),
                c.representative.len().to_string(),
                c.rank.to_string(),
                c.members.to_string(),
                c.order.clone(),
            ]
        })
        .collect();
    match format {
        Format::Json => pretty(&serde_json::to_value(classes)?),
        Format::Csv => Ok(csv_table("label,vertices,rank,members,order", &rows)),
        Format::Md => Ok(md_table(
            &["class", "vertices", "rank", "members", "stabilizer"],
            false,
            &rows,
        )),
    }
}

pub fn census_report(format: Format, census: &CensusDto) -> Result<String> {
    match format {
        Format::Json => Ok(vorform::serial::census_to_json(census)?),
        Format::Csv => classes_report(format, &census.cone_classes),
        Format::Md => {
            let mut out = String::new();
            out.push_str(&format!("minimum: {}\n", census.minimum));
            out.push_str(&format!(
                "{} minimal vectors / {} mod torsion\n",
                census.signed_minimal_vectors,
                census.minimal_vectors.len()
            ));
            out.push_str(&format!("{}\n", facet_histogram(&census.facets)));
            out.push_str(&format!(
                "stabilizer order {}, {}\n",
                census.stabilizer_order,
                if census.stabilizer_abelian {
                    "abelian"
                } else {
                    "non-abelian"
                }
            ));
            out.push_str(&format!(
                "{} perfect class(es), {} neighbors verified\n\n",
                census.perfect_classes,
                census.neighbors.len()
            ));
            out.push_str("cone classes\n\n");
            out.push_str(&classes_report(Format::Md, &census.cone_classes)?);
            out.push_str("\nminimal configurations\n\n");
            out.push_str(&classes_report(Format::Md, &census.min_configs)?);
            Ok(out)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_class_table_is_header_only() {
        let csv = classes_report(Format::Csv, &[]).unwrap();
        assert_eq!(csv, "label,vertices,rank,members,order\n");
        let md = classes_report(Format::Md, &[]).unwrap();
        assert_eq!(md.lines().count(), 2);
    }

    #[test]
    fn histogram_orders_sizes_downward() {
        let facet = |n: usize| FacetDto {
            normal: vec!["1".into()],
            vertices: (1..=n).collect(),
        };
        let facets: Vec<FacetDto> =
            std::iter::repeat_with(|| facet(7)).take(2).chain([facet(9)]).collect();
        assert_eq!(facet_histogram(&facets), "3 facets: 1x9, 2x7");
    }
}
