//! Generate → close → enumerate → incidences → bounded complex, and the
//! benchmark suites built on it.

use std::fmt;
use std::path::Path;
use std::str::FromStr;
use std::time::Instant;

use crate::complex::{filter_bounded, full_face_lattice, selective_generation, HasseDiagram};
use crate::error::{Error, Result};
use crate::generators::{
    cyclic_matrix, dwarfed_cube_reversal, permutohedron_matrix, random_metric, thrackle_metric, tight_span_hrep,
    tropical_hrep,
};
use crate::io::{write_hrep, write_incidences};
use crate::moebius::moebius_generation;
use crate::polyhedron::{
    compute_incidences, enumerate_vertices, far_face_vertices, projective_closure, ClosureResult, HRep,
    IncidenceMatrix, VRep,
};
use crate::set::VertexSet;

/// Default cap on the number of rows a generator may produce.
pub const DEFAULT_ROW_BUDGET: u128 = 100_000;

/// A benchmark instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    DwarfedCube(usize),
    Thrackle(usize),
    RandomMetric { d: usize, seed: u64 },
    TropicalCyclic { s: usize, t: usize },
    TropicalPermutohedron(usize),
}

impl Family {
    /// Builds a family from its CLI name and numeric parameters.
    pub fn from_args(name: &str, params: &[u64]) -> Result<Family> {
        let arity = |k: usize| {
            if params.len() == k {
                Ok(())
            } else {
                Err(Error::Invalid(format!("{name} takes {k} parameter(s), got {}", params.len())))
            }
        };
        let p = |i: usize| params[i] as usize;
        Ok(match name {
            "dwarfed-cube" => {
                arity(1)?;
                Family::DwarfedCube(p(0))
            }
            "thrackle" => {
                arity(1)?;
                Family::Thrackle(p(0))
            }
            "random-metric" => {
                arity(2)?;
                Family::RandomMetric { d: p(0), seed: params[1] }
            }
            "tropical-cyclic" => {
                arity(2)?;
                Family::TropicalCyclic { s: p(0), t: p(1) }
            }
            "tropical-permutohedron" => {
                arity(1)?;
                Family::TropicalPermutohedron(p(0))
            }
            _ => return Err(Error::Invalid(format!("unknown family {name:?}"))),
        })
    }

    /// Ambient dimension of the generated polyhedron.
    pub fn dim(&self) -> usize {
        match *self {
            Family::DwarfedCube(d) | Family::Thrackle(d) | Family::RandomMetric { d, .. } => d,
            Family::TropicalCyclic { s, t } => s + t - 1,
            Family::TropicalPermutohedron(t) => (1..=t).product::<usize>() + t - 1,
        }
    }

    /// The unbounded polyhedron `P`.
    pub fn hrep(&self, row_budget: u128) -> Result<HRep> {
        match *self {
            Family::DwarfedCube(d) => dwarfed_cube_reversal(d),
            Family::Thrackle(d) => Ok(tight_span_hrep(&thrackle_metric(d)?)),
            Family::RandomMetric { d, seed } => Ok(tight_span_hrep(&random_metric(d, seed)?)),
            Family::TropicalCyclic { s, t } => Ok(tropical_hrep(&cyclic_matrix(s, t)?)),
            Family::TropicalPermutohedron(t) => Ok(tropical_hrep(&permutohedron_matrix(t, row_budget)?)),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::DwarfedCube(d) => write!(f, "dwarfed-cube {d}"),
            Family::Thrackle(d) => write!(f, "thrackle {d}"),
            Family::RandomMetric { d, seed } => write!(f, "random-metric {d} {seed}"),
            Family::TropicalCyclic { s, t } => write!(f, "tropical-cyclic {s} {t}"),
            Family::TropicalPermutohedron(t) => write!(f, "tropical-permutohedron {t}"),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Algorithm {
    /// Selective generation on the closure's incidences.
    #[default]
    Selective,
    /// Möbius numbers on the incidences of `P` alone.
    Moebius,
    /// Full face lattice of the closure, unbounded faces removed.
    Filter,
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "selective" => Ok(Algorithm::Selective),
            "moebius" => Ok(Algorithm::Moebius),
            "filter" => Ok(Algorithm::Filter),
            _ => Err(Error::Invalid(format!("unknown algorithm {s:?}"))),
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Algorithm::Selective => "selective",
            Algorithm::Moebius => "moebius",
            Algorithm::Filter => "filter",
        })
    }
}

/// An instance carried through closure, vertex enumeration and
/// incidences.
#[derive(Clone, Debug)]
pub struct Prepared {
    pub hrep: HRep,
    pub closure: ClosureResult,
    /// Vertices of the closure.
    pub vertices: VRep,
    /// Incidences of the closure, with far face.
    pub incidences: IncidenceMatrix,
}

impl Prepared {
    pub fn far_face(&self) -> &VertexSet {
        self.incidences.far_face().expect("prepared incidences carry a far face")
    }
}

/// Closes `hrep`, enumerates the closure's vertices and computes its
/// incidences with far face.
pub fn prepare(hrep: HRep) -> Result<Prepared> {
    let closure = projective_closure(&hrep).map_err(Error::at("close"))?;
    let vertices = enumerate_vertices(&closure.closure).map_err(Error::at("vertices"))?;
    let far = far_face_vertices(&closure, &vertices);
    let incidences = compute_incidences(&closure.closure, &vertices)
        .and_then(|i| i.with_far_face(far))
        .map_err(Error::at("incidences"))?;
    Ok(Prepared { hrep, closure, vertices, incidences })
}

/// Bounded subcomplex from the closure's incidences, vertex indices
/// referring to the closure. The Möbius algorithm runs on the incidences
/// of `P` and its output is mapped back.
pub fn bounded_complex(inc: &IncidenceMatrix, alg: Algorithm, max_dim: Option<usize>) -> Result<HasseDiagram> {
    match alg {
        Algorithm::Selective => selective_generation(inc, max_dim),
        Algorithm::Filter => {
            let far = inc.far_face().ok_or(Error::FarFaceRequired)?;
            let hd = filter_bounded(&full_face_lattice(inc), far);
            Ok(match max_dim {
                Some(k) => hd.restrict_rank(k as i32),
                None => hd,
            })
        }
        Algorithm::Moebius => {
            let (p, map) = inc.restrict_to_polyhedron()?;
            Ok(lift(&moebius_generation(&p, max_dim), &map, inc.n()))
        }
    }
}

/// Re-indexes vertex sets through `map` into sets over `0..n`.
pub fn lift(hd: &HasseDiagram, map: &[usize], n: usize) -> HasseDiagram {
    let mut out = hd.clone();
    for node in &mut out.nodes {
        node.vertices = VertexSet::from_indices(n, node.vertices.iter().map(|v| map[v]));
    }
    out
}

/// One row of a benchmark table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BenchRow {
    pub label: String,
    pub d: usize,
    pub m_bar: usize,
    pub n_bar: usize,
    pub alpha: usize,
    /// Nodes of the Hasse diagram, including the empty face.
    pub phi_prime: usize,
    pub millis: u128,
}

#[derive(Clone, Debug, Default)]
pub struct RunOptions {
    pub algorithm: Algorithm,
    pub max_dim: Option<usize>,
    /// Also run the other two algorithms and compare.
    pub verify: bool,
    pub row_budget: Option<u128>,
}

pub struct RunOutput {
    pub row: BenchRow,
    pub prepared: Prepared,
    pub diagram: HasseDiagram,
}

/// Runs one instance end to end, writing `hrep.txt`, `inc.txt` and
/// `hasse.json` into `out_dir` if given.
pub fn run_pipeline(family: &Family, opts: &RunOptions, out_dir: Option<&Path>) -> Result<RunOutput> {
    let start = Instant::now();
    let hrep = family.hrep(opts.row_budget.unwrap_or(DEFAULT_ROW_BUDGET)).map_err(Error::at("generate"))?;
    let prepared = prepare(hrep)?;
    let inc = &prepared.incidences;
    let diagram = bounded_complex(inc, opts.algorithm, opts.max_dim).map_err(Error::at("bounded"))?;
    if opts.verify {
        let expect = diagram.canonical();
        for alg in [Algorithm::Selective, Algorithm::Moebius] {
            if alg != opts.algorithm && bounded_complex(inc, alg, opts.max_dim)?.canonical() != expect {
                return Err(Error::Stage {
                    stage: "verify",
                    source: Box::new(Error::Invariant(format!("{alg} disagrees with {}", opts.algorithm))),
                });
            }
        }
    }
    let row = BenchRow {
        label: family.to_string(),
        d: prepared.hrep.dim(),
        m_bar: inc.m(),
        n_bar: inc.n(),
        alpha: inc.alpha(),
        phi_prime: diagram.len(),
        millis: start.elapsed().as_millis(),
    };
    if let Some(dir) = out_dir {
        std::fs::create_dir_all(dir)?;
        std::fs::write(dir.join("hrep.txt"), write_hrep(&prepared.hrep))?;
        std::fs::write(dir.join("inc.txt"), write_incidences(inc))?;
        std::fs::write(dir.join("hasse.json"), diagram.to_json(inc.far_face()))?;
    }
    Ok(RunOutput { row, prepared, diagram })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Dwarfed,
    Thrackle,
    Random,
    TropicalCyclic,
    TropicalPermutohedron,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dwarfed" => Ok(Suite::Dwarfed),
            "thrackle" => Ok(Suite::Thrackle),
            "random" => Ok(Suite::Random),
            "tropical-cyclic" => Ok(Suite::TropicalCyclic),
            "tropical-perm" => Ok(Suite::TropicalPermutohedron),
            _ => Err(Error::Invalid(format!("unknown suite {s:?}"))),
        }
    }
}

impl Suite {
    /// Largest dimension run when no bound is given.
    pub fn default_max_size(&self) -> usize {
        match self {
            Suite::Dwarfed => 15,
            Suite::Thrackle => 8,
            Suite::Random => 6,
            Suite::TropicalCyclic => 12,
            Suite::TropicalPermutohedron => 8,
        }
    }

    /// Instances with dimension at most `max_size`, grouped into table
    /// rows. Random metrics give one group per dimension.
    pub fn instances(&self, max_size: usize, seeds: u64) -> Vec<Vec<Family>> {
        let single = |v: Vec<Family>| v.into_iter().map(|f| vec![f]).collect();
        match self {
            Suite::Dwarfed => single((5..=max_size).step_by(5).map(Family::DwarfedCube).collect()),
            Suite::Thrackle => single((3..=max_size).map(Family::Thrackle).collect()),
            Suite::Random => {
                (5..=max_size).map(|d| (0..seeds).map(|seed| Family::RandomMetric { d, seed }).collect()).collect()
            }
            Suite::TropicalCyclic => {
                let square = (3..).map(|s| Family::TropicalCyclic { s, t: s });
                let wide = (1..).map(|k| Family::TropicalCyclic { s: 3, t: 10 * k });
                single(
                    square
                        .take_while(|f| f.dim() <= max_size)
                        .chain(wide.take_while(|f| f.dim() <= max_size))
                        .collect(),
                )
            }
            Suite::TropicalPermutohedron => {
                single((3..=5).map(Family::TropicalPermutohedron).filter(|f| f.dim() <= max_size).collect())
            }
        }
    }
}

/// Summary of several random instances of one dimension.
#[derive(Clone, Debug, PartialEq)]
pub struct Sample {
    pub label: String,
    pub d: usize,
    pub count: usize,
    pub m_bar: f64,
    pub n_bar: f64,
    pub alpha: f64,
    pub phi_prime: f64,
    pub phi_prime_stddev: f64,
    pub millis: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub enum SuiteRow {
    Instance(BenchRow),
    Sample(Sample),
    Failed { label: String, error: String },
}

fn mean_std(xs: &[f64]) -> (f64, f64) {
    let n = xs.len() as f64;
    let mean = xs.iter().sum::<f64>() / n;
    let var = xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / n;
    (mean, var.sqrt())
}

/// Runs every instance of a suite; failures are recorded per row.
pub fn run_suite(suite: Suite, max_size: Option<usize>, seeds: u64, opts: &RunOptions) -> Vec<SuiteRow> {
    let groups = suite.instances(max_size.unwrap_or(suite.default_max_size()), seeds);
    std::thread::scope(|scope| {
        let handles: Vec<_> = groups.iter().map(|group| scope.spawn(move || run_group(group, opts))).collect();
        handles.into_iter().map(|h| h.join().expect("suite worker panicked")).collect()
    })
}

fn run_group(group: &[Family], opts: &RunOptions) -> SuiteRow {
    let mut rows = Vec::with_capacity(group.len());
    for f in group {
        match run_pipeline(f, opts, None) {
            Ok(out) => rows.push(out.row),
            Err(e) => return SuiteRow::Failed { label: f.to_string(), error: e.to_string() },
        }
    }
    if let [row] = rows.as_slice() {
        if !matches!(group[0], Family::RandomMetric { .. }) {
            return SuiteRow::Instance(row.clone());
        }
    }
    let col = |f: fn(&BenchRow) -> f64| rows.iter().map(f).collect::<Vec<f64>>();
    let (phi, phi_sd) = mean_std(&col(|r| r.phi_prime as f64));
    SuiteRow::Sample(Sample {
        label: format!("random-metric {}", rows[0].d),
        d: rows[0].d,
        count: rows.len(),
        m_bar: mean_std(&col(|r| r.m_bar as f64)).0,
        n_bar: mean_std(&col(|r| r.n_bar as f64)).0,
        alpha: mean_std(&col(|r| r.alpha as f64)).0,
        phi_prime: phi,
        phi_prime_stddev: phi_sd,
        millis: mean_std(&col(|r| r.millis as f64)).0,
    })
}

/// Renders suite rows as CSV.
pub fn format_csv(rows: &[SuiteRow]) -> String {
    let mut s = String::from("instance,d,m_bar,n_bar,alpha,phi_prime,phi_prime_stddev,millis,error\n");
    for r in rows {
        let line = match r {
            SuiteRow::Instance(b) => {
                format!("{},{},{},{},{},{},,{},", b.label, b.d, b.m_bar, b.n_bar, b.alpha, b.phi_prime, b.millis)
            }
            SuiteRow::Sample(x) => format!(
                "{},{},{:.2},{:.2},{:.2},{:.2},{:.2},{:.0},",
                x.label, x.d, x.m_bar, x.n_bar, x.alpha, x.phi_prime, x.phi_prime_stddev, x.millis
            ),
            SuiteRow::Failed { label, error } => format!("{label},,,,,,,,\"{}\"", error.replace('"', "'")),
        };
        s.push_str(&line);
        s.push('\n');
    }
    s
}

/// Renders suite rows as an aligned text table.
pub fn format_table(rows: &[SuiteRow]) -> String {
    let mut cells: Vec<[String; 8]> = vec![["instance", "d", "m̄", "n̄", "α", "φ′", "stddev", "ms"].map(String::from)];
    for r in rows {
        cells.push(match r {
            SuiteRow::Instance(b) => [
                b.label.clone(),
                b.d.to_string(),
                b.m_bar.to_string(),
                b.n_bar.to_string(),
                b.alpha.to_string(),
                b.phi_prime.to_string(),
                String::new(),
                b.millis.to_string(),
            ],
            SuiteRow::Sample(x) => [
                format!("{} (×{})", x.label, x.count),
                x.d.to_string(),
                format!("{:.2}", x.m_bar),
                format!("{:.2}", x.n_bar),
                format!("{:.2}", x.alpha),
                format!("{:.2}", x.phi_prime),
                format!("{:.2}", x.phi_prime_stddev),
                format!("{:.0}", x.millis),
            ],
            SuiteRow::Failed { label, error } => [
                label.clone(),
                format!("failed: {error}"),
                String::new(),
                String::new(),
                String::new(),
                String::new(),
                String::new(),
                String::new(),
            ],
        });
    }
    let mut width = [0usize; 8];
    for row in &cells {
        for (w, c) in width.iter_mut().zip(row) {
            *w = (*w).max(c.chars().count());
        }
    }
    let mut s = String::new();
    for row in &cells {
        let mut line = String::new();
        for (k, (c, w)) in row.iter().zip(width).enumerate() {
            let pad = w - c.chars().count();
            if k == 0 {
                line.push_str(c);
                line.push_str(&" ".repeat(pad));
            } else {
                line.push_str("  ");
                line.push_str(&" ".repeat(pad));
                line.push_str(c);
            }
        }
        s.push_str(line.trim_end());
        s.push('\n');
    }
    s
}
