//! Command line front end for the classification pipeline.

mod render;

use std::collections::BTreeMap;
use std::env;
use std::fs;
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;
use vorform::golden;
use vorform::hermitian::{lambda_basis, min_config_rank, OVec};
use vorform::rat::format_rat;
use vorform::serial::{
    census_from_json, census_to_json, matrix_to_dto, vector_to_dto, CensusDto, ClassDto,
    FacetDto, NeighborDto, CENSUS_SCHEMA,
};
use vorform::voronoi::{
    build_census, build_complex, classify_perfect_forms, facet_orbits, group, stabilizer,
    verify_initial_form, vertex_permutations,
};
use vorform::Int;

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Md,
}

/// Exact classification of binary Hermitian forms over the fifth
/// cyclotomic field: perfect forms, facets, stabilizers, and the face
/// census, all in exact arithmetic.
#[derive(Parser)]
#[command(name = "vorform", version)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
    #[command(flatten)]
    config: RunConfig,
}

#[derive(Args)]
struct RunConfig {
    /// Report format.
    #[arg(long, value_enum, global = true, default_value = "md")]
    format: Format,
    /// Write the report to this file instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Compare every reported number against the built-in reference data
    /// and exit nonzero on any drift.
    #[arg(long, global = true)]
    check: bool,
    /// Compute facets by both hull algorithms and require exact agreement.
    #[arg(long, global = true)]
    cross_check: bool,
    /// Box radius for the direct minimality certificate in verify-perfect.
    #[arg(long, global = true, default_value_t = 1)]
    height_bound: i64,
    /// Starting coefficient bound when saturating the rank-one lattice.
    #[arg(long, global = true, default_value_t = 2)]
    lambda_bound: u32,
    /// Shuffles exploration order in the neighbor walk; reports are
    /// identical for every seed.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Print progress to stderr.
    #[arg(long, short, global = true)]
    verbose: bool,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check the built-in form: positive definite, perfect, minimum 1.
    VerifyPerfect,
    /// Enumerate the facets of the cone over the minimal vectors.
    Facets,
    /// Compute the automorphism group of the built-in form.
    Stabilizer,
    /// Walk across one facet per orbit and classify the forms found there.
    Neighbors,
    /// Classify the faces of the cone up to unit-determinant conjugacy.
    Classify,
    /// Classify the minimal-vector configurations.
    MinConfigs,
    /// Compute the full census and write it as JSON.
    Export,
    /// Read a census file, validate it, and render the report.
    Import { path: PathBuf },
}

fn main() -> Result<()> {
    let cli = Cli::parse();
    let report = run(&cli)?;
    match &cli.config.output {
        Some(path) => fs::write(path, report)
            .with_context(|| format!("writing {}", path.display()))?,
        None => print!("{report}"),
    }
    Ok(())
}

fn log(config: &RunConfig, message: &str) {
    if config.verbose {
        eprintln!("{message}");
    }
}

fn run(cli: &Cli) -> Result<String> {
    let cfg = &cli.config;
    match &cli.command {
        Cmd::VerifyPerfect => cmd_verify(cfg),
        Cmd::Facets => cmd_facets(cfg),
        Cmd::Stabilizer => cmd_stabilizer(cfg),
        Cmd::Neighbors => cmd_neighbors(cfg),
        Cmd::Classify => {
            let census = load_census(cfg)?;
            if cfg.check {
                check_classes(&census.cone_classes)?;
            }
            render::classes_report(cfg.format, &census.cone_classes)
        }
        Cmd::MinConfigs => {
            let census = load_census(cfg)?;
            if cfg.check {
                check_min_configs(&census.min_configs)?;
            }
            render::classes_report(cfg.format, &census.min_configs)
        }
        Cmd::Export => {
            let census = load_census(cfg)?;
            if cfg.check {
                check_census(&census)?;
            }
            Ok(census_to_json(&census)?)
        }
        Cmd::Import { path } => {
            let text = fs::read_to_string(path)
                .with_context(|| format!("reading {}", path.display()))?;
            let census = census_from_json(&text)?;
            if census.schema != CENSUS_SCHEMA {
                bail!("unsupported census schema {}", census.schema);
            }
            if cfg.check {
                check_census(&census)?;
            }
            render::census_report(cfg.format, &census)
        }
    }
}

fn cmd_verify(cfg: &RunConfig) -> Result<String> {
    log(cfg, "verifying the built-in form");
    let (form, data) = verify_initial_form()?;
    let minimum = format_rat(&data.min);

    if cfg.height_bound < 0 {
        bail!("height bound must be nonnegative");
    }
    let mut coords = vec![-cfg.height_bound; 8];
    'boxes: loop {
        if coords.iter().any(|&x| x != 0) {
            let v = OVec::from_coords8(&coords.iter().map(|&x| Int::from(x)).collect::<Vec<_>>());
            if form.evaluate(&v) < data.min {
                bail!("box certificate failed at {coords:?}");
            }
        }
        for slot in coords.iter_mut() {
            if *slot < cfg.height_bound {
                *slot += 1;
                continue 'boxes;
            }
            *slot = -cfg.height_bound;
        }
        break;
    }

    log(cfg, "saturating the rank-one lattice");
    let lattice = lambda_basis(cfg.lambda_bound);
    let lambda_rank = lattice.len();
    if lambda_rank != 8 {
        bail!("rank-one lattice has rank {lambda_rank}");
    }

    let perfect = min_config_rank(&data.orbit_reps) == 8;
    if cfg.check {
        let g = golden::reference();
        let mut drift = Vec::new();
        if data.min != g.minimum {
            drift.push(format!("minimum {minimum}"));
        }
        if data.vectors.len() != g.signed_minimal_vectors {
            drift.push(format!("{} signed vectors", data.vectors.len()));
        }
        if data.orbit_reps.len() != g.vector_orbits {
            drift.push(format!("{} orbits", data.orbit_reps.len()));
        }
        let reference: std::collections::BTreeSet<OVec> =
            g.reference_vectors.iter().map(|v| v.canonical()).collect();
        let computed: std::collections::BTreeSet<OVec> =
            data.orbit_reps.iter().cloned().collect();
        if reference != computed {
            drift.push("vector list".into());
        }
        if !perfect {
            drift.push("not perfect".into());
        }
        if !drift.is_empty() {
            bail!("drift from reference data: {}", drift.join(", "));
        }
    }
    render::verify_report(
        cfg.format,
        &minimum,
        data.vectors.len(),
        data.orbit_reps.len(),
        perfect,
        cfg.height_bound,
        lambda_rank,
    )
}

fn facet_dtos(cfg: &RunConfig) -> Result<Vec<FacetDto>> {
    log(cfg, "building the cone");
    let complex = build_complex(cfg.cross_check)?;
    Ok(complex
        .facets
        .iter()
        .map(|f| FacetDto {
            normal: f.normal.iter().map(|x| x.to_string()).collect(),
            vertices: f.support.iter().map(|&i| i + 1).collect(),
        })
        .collect())
}

fn cmd_facets(cfg: &RunConfig) -> Result<String> {
    let facets = facet_dtos(cfg)?;
    if cfg.check {
        check_facets(&facets)?;
    }
    render::facets_report(cfg.format, &facets)
}

fn cmd_stabilizer(cfg: &RunConfig) -> Result<String> {
    log(cfg, "computing the automorphism group");
    let (_, data) = verify_initial_form()?;
    let record = stabilizer(&data.orbit_reps)?;
    let abelian = group::is_abelian(&record.elements);
    let order = record.order.as_string();
    if cfg.check {
        let g = golden::reference();
        if order != g.stabilizer_order.to_string() || abelian != g.stabilizer_abelian {
            bail!("drift from reference data: order {order}, abelian {abelian}");
        }
    }
    render::stabilizer_report(cfg.format, &order, abelian, record.elements.len())
}

fn cmd_neighbors(cfg: &RunConfig) -> Result<String> {
    log(cfg, "walking across one facet per orbit");
    let complex = build_complex(cfg.cross_check)?;
    let record = stabilizer(complex.vertices())?;
    let perms = vertex_permutations(&record.elements, complex.vertices())?;
    let orbits = facet_orbits(&complex, &perms)?;
    let mut reps: Vec<usize> = orbits.iter().map(|o| o.representative).collect();
    let mut rng = ChaCha20Rng::seed_from_u64(cfg.seed);
    reps.shuffle(&mut rng);
    let (classes, mut records) = classify_perfect_forms(&complex, &reps)?;
    records.sort_by_key(|r| r.facet);
    let neighbors: Vec<NeighborDto> = records
        .iter()
        .map(|r| NeighborDto {
            facet: r.facet + 1,
            form: vorform::serial::form_to_dto(&r.form),
            witness: matrix_to_dto(&r.witness),
        })
        .collect();
    if cfg.check {
        let g = golden::reference();
        if classes != g.perfect_classes || neighbors.len() != g.neighbor_count {
            bail!(
                "drift from reference data: {classes} classes, {} neighbors",
                neighbors.len()
            );
        }
    }
    render::neighbors_report(cfg.format, classes, &neighbors)
}

fn cache_path() -> Option<PathBuf> {
    env::var_os("VORFORM_CACHE")
        .map(|dir| PathBuf::from(dir).join(format!("census-v{CENSUS_SCHEMA}.json")))
}

fn load_census(cfg: &RunConfig) -> Result<CensusDto> {
    let path = cache_path();
    if let Some(p) = &path {
        if let Ok(text) = fs::read_to_string(p) {
            if let Ok(census) = census_from_json(&text) {
                if census.schema == CENSUS_SCHEMA {
                    log(cfg, &format!("census loaded from {}", p.display()));
                    return Ok(census);
                }
            }
            log(cfg, "cached census is stale; recomputing");
        }
    }
    log(cfg, "computing the census");
    let complex = build_complex(cfg.cross_check)?;
    let census = build_census(&complex)?;
    if let Some(p) = &path {
        if let Some(dir) = p.parent() {
            fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
        }
        fs::write(p, census_to_json(&census)?)
            .with_context(|| format!("writing {}", p.display()))?;
        log(cfg, &format!("census cached at {}", p.display()));
    }
    Ok(census)
}

fn check_facets(facets: &[FacetDto]) -> Result<()> {
    let g = golden::reference();
    if facets.len() != g.facet_count {
        bail!("drift from reference data: {} facets", facets.len());
    }
    let mut sizes: BTreeMap<usize, usize> = BTreeMap::new();
    for f in facets {
        *sizes.entry(f.vertices.len()).or_default() += 1;
    }
    let expected: BTreeMap<usize, usize> = g.facet_sizes.iter().cloned().collect();
    if sizes != expected {
        bail!("drift from reference data: facet profile {sizes:?}");
    }
    Ok(())
}

fn class_multiset(classes: &[ClassDto]) -> Vec<(usize, usize, String)> {
    let mut v: Vec<(usize, usize, String)> = classes
        .iter()
        .map(|c| (c.representative.len(), c.rank, c.order.clone()))
        .collect();
    v.sort();
    v
}

fn check_classes(classes: &[ClassDto]) -> Result<()> {
    let g = golden::reference();
    let mut expected: Vec<(usize, usize, String)> = g
        .cone_classes
        .iter()
        .map(|(_, v, r, o)| (*v, *r, o.clone()))
        .collect();
    expected.sort();
    if class_multiset(classes) != expected {
        bail!("drift from reference data: cone class table");
    }
    Ok(())
}

fn check_min_configs(classes: &[ClassDto]) -> Result<()> {
    let g = golden::reference();
    let mut expected: Vec<(usize, usize, String)> = g
        .cone_classes
        .iter()
        .map(|(_, v, r, o)| (*v, *r, o.clone()))
        .collect();
    expected.push((1, 1, "infinite".to_string()));
    expected.sort();
    if class_multiset(classes) != expected {
        bail!("drift from reference data: configuration class table");
    }
    let mut by_rank: BTreeMap<usize, usize> = BTreeMap::new();
    for c in classes {
        *by_rank.entry(c.rank).or_default() += 1;
    }
    let expected_ranks: BTreeMap<usize, usize> =
        g.min_config_rank_counts.iter().cloned().collect();
    if by_rank != expected_ranks {
        bail!("drift from reference data: configuration rank profile {by_rank:?}");
    }
    Ok(())
}

fn check_census(census: &CensusDto) -> Result<()> {
    let g = golden::reference();
    if census.minimum != format_rat(&g.minimum) {
        bail!("drift from reference data: minimum {}", census.minimum);
    }
    if census.signed_minimal_vectors != g.signed_minimal_vectors
        || census.minimal_vectors.len() != g.vector_orbits
    {
        bail!("drift from reference data: minimal vector counts");
    }
    let reference: std::collections::BTreeSet<_> = g
        .reference_vectors
        .iter()
        .map(|v| {
            let d = vector_to_dto(&v.canonical());
            (d.alpha, d.beta)
        })
        .collect();
    let listed: std::collections::BTreeSet<_> = census
        .minimal_vectors
        .iter()
        .map(|d| (d.alpha.clone(), d.beta.clone()))
        .collect();
    if reference != listed {
        bail!("drift from reference data: minimal vector list");
    }
    check_facets(&census.facets)?;
    if census.stabilizer_order != g.stabilizer_order.to_string()
        || census.stabilizer_abelian != g.stabilizer_abelian
    {
        bail!("drift from reference data: stabilizer");
    }
    let mut orbit_sizes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for o in &census.facet_orbits {
        orbit_sizes.entry(o.vertex_count).or_default().push(o.size);
    }
    for sizes in orbit_sizes.values_mut() {
        sizes.sort_unstable();
    }
    let expected_orbits: BTreeMap<usize, Vec<usize>> = g
        .facet_orbit_sizes
        .iter()
        .map(|(k, v)| {
            let mut v = v.clone();
            v.sort_unstable();
            (*k, v)
        })
        .collect();
    if orbit_sizes != expected_orbits {
        bail!("drift from reference data: facet orbits {orbit_sizes:?}");
    }
    if census.perfect_classes != g.perfect_classes
        || census.neighbors.len() != g.neighbor_count
    {
        bail!("drift from reference data: perfect form classification");
    }
    check_classes(&census.cone_classes)?;
    check_min_configs(&census.min_configs)?;
    Ok(())
}
