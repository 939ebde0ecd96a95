//! Claimed values of `R(kP_n, J_{2m})`, the Chvátal–Harary lower bound,
//! witness graphs, and exhaustive or sampled verification.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::detect::{self, Budget};
use crate::enumerate::{self, CheckpointSet, RunOptions, Tally, ENUM_CEILING};
use crate::error::{Error, Result};
use crate::graph::{chromatic_number, Graph, StandardGraph};
use crate::graph6::emit_graph6;

/// The pair `(kP_n, J_{2m})`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RamseyInstance {
    pub k: usize,
    pub n: usize,
    pub m: usize,
}

impl RamseyInstance {
    pub fn new(k: usize, n: usize, m: usize) -> Result<RamseyInstance> {
        if k < 1 || n < 2 || m < 2 {
            return Err(Error::InvalidInstance { k, n, m });
        }
        Ok(RamseyInstance { k, n, m })
    }

    /// `kP_n` as `k` consecutive path blocks.
    pub fn path_pattern(&self) -> Result<Graph> {
        let p = StandardGraph::Path(self.n).build()?;
        let mut g = p.clone();
        for _ in 1..self.k {
            g = g.disjoint_union(&p)?;
        }
        Ok(g)
    }

    pub fn jahangir(&self) -> Result<Graph> {
        StandardGraph::Jahangir(self.m).build()
    }

    pub fn label(&self) -> String {
        format!("k={} n={} m={}", self.k, self.n, self.m)
    }
}

/// Which published result fixes the value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Regime {
    /// `k = 1`, `(n, m) = (4, 2)`: value 6.
    SinglePathJ4Base,
    /// `k = 1`, `m = 2`, `n >= 5`: `n + 1`.
    SinglePathJ4,
    /// `k = 1`, `m` in 3..=5, `n >= 2m + 1`: `n + m - 1`.
    SinglePathSmallJahangir,
    /// `k = 1`, `m >= 3`, `n >= (4m - 1)(m - 1) + 1`: `n + m - 1`.
    SinglePathLongPaths,
    /// `k >= 1`, `m = 2`, `n >= 4`, not `(n, k) = (4, 1)`: `kn + 1`.
    PathCopiesJ4,
    /// `k >= 2`, `m` in 3..=5, `n >= 2m + 1`: `kn + m - 1`.
    PathCopiesSmallJahangir,
    /// `k >= 2`, `m >= 6`, `n >= (4m - 1)(m - 1) + 1`: `kn + m - 1`.
    PathCopiesLongPaths,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "status")]
pub enum Claim {
    Proven { value: usize, regime: Regime },
    OutOfProvenRange,
}

impl Claim {
    pub fn value(&self) -> Option<usize> {
        match self {
            Claim::Proven { value, .. } => Some(*value),
            Claim::OutOfProvenRange => None,
        }
    }
}

/// Smallest `n` covered for a single path when `m >= 3` by the general result.
pub fn long_path_threshold(m: usize) -> usize {
    (4 * m - 1) * (m - 1) + 1
}

/// The claimed value of `R(kP_n, J_{2m})`, piecewise by regime. The
/// single-path `m = 2` rows and the `k = 1` case of the `J_4` family agree
/// wherever both apply.
pub fn claimed_value(inst: RamseyInstance) -> Claim {
    let RamseyInstance { k, n, m } = inst;
    let proven = |value, regime| Claim::Proven { value, regime };
    if k == 1 {
        return match m {
            2 if n == 4 => proven(6, Regime::SinglePathJ4Base),
            2 if n >= 5 => proven(n + 1, Regime::SinglePathJ4),
            3..=5 if n > 2 * m => proven(n + m - 1, Regime::SinglePathSmallJahangir),
            _ if m >= 3 && n >= long_path_threshold(m) => {
                proven(n + m - 1, Regime::SinglePathLongPaths)
            }
            _ => Claim::OutOfProvenRange,
        };
    }
    match m {
        2 if n >= 4 => proven(k * n + 1, Regime::PathCopiesJ4),
        3..=5 if n > 2 * m => proven(k * n + m - 1, Regime::PathCopiesSmallJahangir),
        _ if m >= 6 && n >= long_path_threshold(m) => {
            proven(k * n + m - 1, Regime::PathCopiesLongPaths)
        }
        _ => Claim::OutOfProvenRange,
    }
}

/// `(χ(G) - 1)(c(H) - 1) + 1`.
pub fn chvatal_harary_bound(g: &Graph, h: &Graph) -> Result<usize> {
    Ok((chromatic_number(g)? - 1) * (h.largest_component_order() - 1) + 1)
}

/// How a lower-bound witness was obtained.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum WitnessConstruction {
    /// Disjoint cliques of these sizes.
    Cliques { sizes: Vec<usize> },
    /// First failing class of an exhaustive pass at the witness order.
    Searched { order: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub graph: Graph,
    pub construction: WitnessConstruction,
}

/// A graph of order `R - 1` containing no `kP_n` whose complement contains
/// no `J_{2m}`.
///
/// In every proven regime this is `K_{m-1} ∪ K_{kn-1}`, except for
/// `(k, n, m) = (1, 4, 2)` where that graph has only 4 vertices; there the
/// witness comes from an exhaustive pass over order 5.
pub fn build_lower_witness(inst: RamseyInstance) -> Result<Witness> {
    let value = claimed_value(inst).value().ok_or(Error::OutOfProvenRange {
        k: inst.k,
        n: inst.n,
        m: inst.m,
    })?;
    let order = value - 1;
    let sizes = vec![inst.m - 1, inst.k * inst.n - 1];
    if sizes.iter().sum::<usize>() == order {
        let graph = StandardGraph::UnionOfCompletes(sizes.clone()).build()?;
        return Ok(Witness {
            graph,
            construction: WitnessConstruction::Cliques { sizes },
        });
    }
    if order > ENUM_CEILING {
        return Err(Error::CeilingExceeded {
            what: "witness search",
            limit: ENUM_CEILING,
            got: order,
        });
    }
    let mut found = None;
    enumerate::enumerate_graphs(order, None, |g| {
        if found.is_none() && fails(g, inst).unwrap_or(false) {
            found = Some(g.clone());
        }
    })?;
    let graph = found.ok_or_else(|| {
        Error::Precondition(format!(
            "no order-{order} graph avoids both patterns for {}",
            inst.label()
        ))
    })?;
    Ok(Witness {
        graph,
        construction: WitnessConstruction::Searched { order },
    })
}

/// True iff `f` contains no `kP_n` and its complement contains no `J_{2m}`.
///
/// Exact searches handle order up to the path ceiling. Above it, only
/// disjoint unions of at most two cliques are accepted; for those both
/// containments follow from the clique sizes.
pub fn verify_witness(f: &Graph, inst: RamseyInstance) -> Result<bool> {
    if f.order() <= detect::PATH_CEILING {
        return fails(f, inst);
    }
    let cliques = clique_sizes(f)
        .filter(|s| s.len() <= 2)
        .ok_or(Error::CeilingExceeded {
            what: "witness verification of a graph that is not a union of two cliques",
            limit: detect::PATH_CEILING,
            got: f.order(),
        })?;
    let paths: usize = cliques.iter().map(|c| c / inst.n).sum();
    let has_paths = paths >= inst.k;
    // The complement is complete bipartite (or edgeless); J_{2m} has the
    // unique bipartition m / m + 1.
    let has_jahangir = match cliques[..] {
        [a, b] => (a >= inst.m && b > inst.m) || (a > inst.m && b >= inst.m),
        _ => false,
    };
    Ok(!has_paths && !has_jahangir)
}

/// Component sizes if `g` is a disjoint union of cliques.
fn clique_sizes(g: &Graph) -> Option<Vec<usize>> {
    let comps = g.components();
    comps
        .iter()
        .all(|c| c.iter().all(|v| g.degree(v) == c.len() - 1))
        .then(|| comps.iter().map(|c| c.len()).collect())
}

/// Exact check used on every enumerated class.
fn fails(f: &Graph, inst: RamseyInstance) -> Result<bool> {
    if f.order() >= inst.k * inst.n && detect::contains_disjoint_paths(f, inst.k, inst.n)?.is_some()
    {
        return Ok(false);
    }
    if f.order() < 2 * inst.m + 1 {
        return Ok(true);
    }
    Ok(detect::contains_jahangir(&f.complement(), inst.m)?.is_none())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ReportKind {
    Exhaustive,
    Witness,
    Sampled,
}

/// Result of one verification pass.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub kind: ReportKind,
    pub instance: RamseyInstance,
    pub order: usize,
    /// Classes (exhaustive), witnesses (1) or trials (sampled) checked.
    pub classes_total: u64,
    pub classes_failed: u64,
    /// Graphs avoiding both patterns, as graph6.
    pub counterexamples: Vec<String>,
    /// Sampled trials the bounded path search could not decide.
    pub inconclusive: u64,
    pub complete: bool,
    pub elapsed_ms: u64,
    pub seed: Option<u64>,
    pub checkpoint: Option<String>,
    /// The witness graph, for witness reports.
    pub witness: Option<String>,
    pub witness_construction: Option<WitnessConstruction>,
}

impl VerificationReport {
    fn new(kind: ReportKind, instance: RamseyInstance, order: usize) -> VerificationReport {
        VerificationReport {
            kind,
            instance,
            order,
            classes_total: 0,
            classes_failed: 0,
            counterexamples: Vec::new(),
            inconclusive: 0,
            complete: true,
            elapsed_ms: 0,
            seed: None,
            checkpoint: None,
            witness: None,
            witness_construction: None,
        }
    }

    /// No failures among a complete set of checks.
    pub fn passed(&self) -> bool {
        self.complete && self.classes_failed == 0
    }
}

/// Graph encoding for reports: graph6 up to order 62, an edge list beyond.
pub fn describe_graph(g: &Graph) -> String {
    emit_graph6(g).unwrap_or_else(|_| {
        let edges: Vec<String> = g.edges().map(|(u, v)| format!("{u}-{v}")).collect();
        format!("order={} edges={}", g.order(), edges.join(","))
    })
}

/// Checks every isomorphism class of the given order. A class fails when it
/// contains no `kP_n` and its complement no `J_{2m}`.
pub fn verify_upper(
    inst: RamseyInstance,
    order: usize,
    shards: usize,
    opts: &RunOptions,
) -> Result<VerificationReport> {
    let start = Instant::now();
    let label = format!("verify {}", inst.label());
    let set = enumerate::resume_or_fresh(&label, order, shards.max(1), opts)?;
    let set = enumerate::run_sharded(set, opts, |g, tally: &mut Tally| {
        // Exact searches cannot exceed their ceilings at enumerable orders.
        if fails(g, inst).expect("order within search ceilings") {
            tally.bump("failed");
            tally.found.push(emit_graph6(g).expect("order <= 10"));
        }
    })?;
    Ok(report_from_set(inst, order, &set, opts, start))
}

fn report_from_set(
    inst: RamseyInstance,
    order: usize,
    set: &CheckpointSet,
    opts: &RunOptions,
    start: Instant,
) -> VerificationReport {
    let tally = set.merged_tallies();
    let mut r = VerificationReport::new(ReportKind::Exhaustive, inst, order);
    r.classes_total = set.processed();
    r.classes_failed = tally.get("failed");
    r.counterexamples = tally.found;
    r.complete = set.complete();
    r.elapsed_ms = start.elapsed().as_millis() as u64;
    r.checkpoint = opts.checkpoint.as_ref().map(|p| p.display().to_string());
    r
}

/// Builds the lower-bound witness and checks it.
pub fn verify_lower(inst: RamseyInstance) -> Result<VerificationReport> {
    let start = Instant::now();
    let w = build_lower_witness(inst)?;
    let ok = verify_witness(&w.graph, inst)?;
    let mut r = VerificationReport::new(ReportKind::Witness, inst, w.graph.order());
    r.classes_total = 1;
    if !ok {
        r.classes_failed = 1;
        r.counterexamples.push(describe_graph(&w.graph));
    }
    r.witness = Some(describe_graph(&w.graph));
    r.witness_construction = Some(w.construction);
    r.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(r)
}

/// Both halves of a claimed value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RamseyVerification {
    pub claimed: usize,
    /// Every class of order `claimed` contains a pattern.
    pub upper: VerificationReport,
    /// A graph of order `claimed - 1` avoids both.
    pub lower: VerificationReport,
}

impl RamseyVerification {
    pub fn confirmed(&self) -> bool {
        self.upper.passed() && self.lower.passed()
    }
}

pub fn verify_ramsey(
    inst: RamseyInstance,
    shards: usize,
    opts: &RunOptions,
) -> Result<RamseyVerification> {
    let claimed = claimed_value(inst).value().ok_or(Error::OutOfProvenRange {
        k: inst.k,
        n: inst.n,
        m: inst.m,
    })?;
    if claimed > ENUM_CEILING {
        return Err(Error::CeilingExceeded {
            what: "exhaustive Ramsey verification",
            limit: ENUM_CEILING,
            got: claimed,
        });
    }
    let upper = verify_upper(inst, claimed, shards, opts)?;
    let lower = verify_lower(inst)?;
    Ok(RamseyVerification {
        claimed,
        upper,
        lower,
    })
}

/// Node budget of the path search for a sampled graph above the exact ceiling.
const SAMPLE_PATH_BUDGET: u64 = 2_000_000;

/// Random graphs `G(order, 1/2)`, split over `workers` with seeds
/// `seed + worker`. Above the exact path ceiling a path search that runs out
/// of budget makes the trial inconclusive instead of a counterexample.
pub fn sample_check(
    inst: RamseyInstance,
    order: usize,
    trials: u64,
    seed: u64,
    workers: usize,
) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut report = VerificationReport::new(ReportKind::Sampled, inst, order);
    report.seed = Some(seed);
    if trials == 0 {
        return Ok(report);
    }
    Graph::empty(order)?;
    let workers = workers.max(1) as u64;
    let parts: Vec<Result<(u64, u64, Vec<String>)>> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                let count = trials / workers + u64::from(w < trials % workers);
                scope.spawn(move || sample_worker(inst, order, count, seed.wrapping_add(w)))
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("sampling worker panicked"))
            .collect()
    });
    for part in parts {
        let (failed, inconclusive, found) = part?;
        report.classes_failed += failed;
        report.inconclusive += inconclusive;
        report.counterexamples.extend(found);
    }
    report.classes_total = trials;
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

fn sample_worker(
    inst: RamseyInstance,
    order: usize,
    trials: u64,
    seed: u64,
) -> Result<(u64, u64, Vec<String>)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut failed, mut inconclusive, mut found) = (0, 0, Vec::new());
    for _ in 0..trials {
        let g = random_graph(order, 0.5, &mut rng)?;
        if order > 2 * inst.m && detect::contains_jahangir(&g.complement(), inst.m)?.is_some() {
            continue;
        }
        let mut budget = if order <= detect::PATH_CEILING {
            Budget::unlimited()
        } else {
            Budget::nodes(SAMPLE_PATH_BUDGET)
        };
        let paths = if order >= inst.k * inst.n {
            detect::disjoint_paths_within(&g, g.vertices(), inst.k, inst.n, &mut budget)
        } else {
            None
        };
        if paths.is_some() {
            continue;
        }
        if budget.exhausted() {
            inconclusive += 1;
        } else {
            failed += 1;
            found.push(describe_graph(&g));
        }
    }
    Ok((failed, inconclusive, found))
}

/// Each edge present independently with probability `p`.
pub fn random_graph<R: Rng>(order: usize, p: f64, rng: &mut R) -> Result<Graph> {
    let mut edges = Vec::new();
    for u in 0..order {
        for v in u + 1..order {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(order, edges)
}
