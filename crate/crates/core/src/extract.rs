//! Proof-guided extraction of certified embeddings.
//!
//! Each extractor localizes a candidate vertex set from a longest path and
//! hands the last step to the restricted matcher. Anything returned has
//! passed [`validate_embedding`], which shares no code with the searchers.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::detect::{self, Budget, Embedding, JahangirEmbedding};
use crate::enumerate::{self, RunOptions, Tally};
use crate::error::{Error, Result};
use crate::graph::{Graph, StandardGraph, VertexSet};
use crate::graph6::emit_graph6;
use crate::ramsey::{claimed_value, describe_graph, RamseyInstance};

/// True iff `e` is injective into `host` and carries every edge of
/// `pattern` to an edge of `host`.
pub fn validate_embedding(pattern: &Graph, host: &Graph, e: &Embedding) -> bool {
    let map = e.map();
    if map.len() != pattern.order() {
        return false;
    }
    let mut seen = vec![false; host.order()];
    for &h in map {
        if h >= host.order() || seen[h] {
            return false;
        }
        seen[h] = true;
    }
    pattern.edges().all(|(u, v)| host.has_edge(map[u], map[v]))
}

/// Branch of the case analysis that produced an extraction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Subcase {
    #[serde(rename = "1.1")]
    OneOne,
    #[serde(rename = "1.2")]
    OneTwo,
    #[serde(rename = "2.1")]
    TwoOne,
    #[serde(rename = "2.2")]
    TwoTwo,
    #[serde(rename = "2.3")]
    TwoThree,
    #[serde(rename = "2.4")]
    TwoFour,
    #[serde(rename = "2.5")]
    TwoFive,
    /// Three or more vertices off a longest path at order 9.
    #[serde(rename = "T2-A")]
    BaseOffPath,
    #[serde(rename = "T2-C1")]
    BaseCommonNeighbor,
    #[serde(rename = "T2-C2")]
    BaseFreeInterior,
    #[serde(rename = "fallback")]
    Fallback,
}

impl Subcase {
    pub fn label(self) -> &'static str {
        match self {
            Subcase::OneOne => "1.1",
            Subcase::OneTwo => "1.2",
            Subcase::TwoOne => "2.1",
            Subcase::TwoTwo => "2.2",
            Subcase::TwoThree => "2.3",
            Subcase::TwoFour => "2.4",
            Subcase::TwoFive => "2.5",
            Subcase::BaseOffPath => "T2-A",
            Subcase::BaseCommonNeighbor => "T2-C1",
            Subcase::BaseFreeInterior => "T2-C2",
            Subcase::Fallback => "fallback",
        }
    }
}

impl fmt::Display for Subcase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Audit record of one extraction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseTrace {
    pub subcase: Subcase,
    /// For a fallback, the branch whose restricted search failed.
    pub intended: Option<Subcase>,
    pub longest_path: Vec<usize>,
    /// Vertices off the longest path.
    pub off_path: VertexSet,
    pub a: Option<VertexSet>,
    pub b_set: Option<VertexSet>,
    pub d1: Option<VertexSet>,
    pub d2: Option<VertexSet>,
    pub b: Option<usize>,
    pub v1: Option<usize>,
}

impl CaseTrace {
    fn new(subcase: Subcase, longest_path: Vec<usize>, off_path: VertexSet) -> CaseTrace {
        CaseTrace {
            subcase,
            intended: None,
            longest_path,
            off_path,
            a: None,
            b_set: None,
            d1: None,
            d2: None,
            b: None,
            v1: None,
        }
    }

    /// `D1 ∪ D2` when both are set.
    pub fn restriction(&self) -> Option<VertexSet> {
        Some(self.d1? | self.d2?)
    }
}

/// A graph on which an extractor failed outright.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FalsificationRecord {
    pub graph: String,
    pub context: String,
    pub trace: Option<CaseTrace>,
}

impl fmt::Display for FalsificationRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} on {}", self.context, self.graph)?;
        if let Some(t) = &self.trace {
            write!(f, " (branch {})", t.intended.unwrap_or(t.subcase))?;
        }
        Ok(())
    }
}

fn falsification(g: &Graph, context: String, trace: Option<CaseTrace>) -> Error {
    Error::Falsification(Box::new(FalsificationRecord {
        graph: describe_graph(g),
        context,
        trace,
    }))
}

/// Which branch handles a longest path of `t` vertices. Long paths report
/// `OneOne`; telling 1.1 from 1.2 needs the off-path vertices.
pub fn subcase_for(t: usize, m: usize) -> Subcase {
    match t {
        _ if t >= 2 * m => Subcase::OneOne,
        0..=3 => Subcase::TwoOne,
        _ if t <= m + 1 => Subcase::TwoTwo,
        _ if t == m + 2 => Subcase::TwoThree,
        _ if t == m + 3 => Subcase::TwoFour,
        _ => Subcase::TwoFive,
    }
}

/// One localized attempt: restrict the matcher to `d1 ∪ d2`.
#[derive(Clone, Debug)]
struct Attempt {
    subcase: Subcase,
    d1: VertexSet,
    d2: VertexSet,
    b: Option<usize>,
    v1: Option<usize>,
}

impl Attempt {
    fn new(subcase: Subcase, d1: VertexSet, d2: VertexSet) -> Attempt {
        Attempt {
            subcase,
            d1,
            d2: d2 - d1,
            b: None,
            v1: None,
        }
    }

    fn with_b(mut self, b: usize) -> Attempt {
        self.b = Some(b);
        self
    }
}

/// The longest path read with one-based positions.
struct PathView<'a> {
    g: &'a Graph,
    path: &'a [usize],
    off: VertexSet,
}

impl PathView<'_> {
    fn x(&self, i: usize) -> usize {
        self.path[i - 1]
    }

    fn t(&self) -> usize {
        self.path.len()
    }

    fn set(&self, positions: &[usize]) -> VertexSet {
        positions.iter().map(|&i| self.x(i)).collect()
    }

    /// Neighbors among the off-path vertices.
    fn n_off(&self, v: usize) -> VertexSet {
        self.g.neighbors(v) & self.off
    }

    /// Off-path vertices at distance exactly two from `v`.
    fn off_at_distance_two(&self, v: usize) -> VertexSet {
        let near = self.g.neighbors(v);
        let mut second = VertexSet::EMPTY;
        for u in near {
            second |= self.g.neighbors(u);
        }
        (second - near - VertexSet::singleton(v)) & self.off
    }
}

/// Smallest `count` members of `s`.
fn first(s: VertexSet, count: usize) -> VertexSet {
    s.take(count)
}

/// Extracts `J_{2m}` from the complement of a `P_n`-free graph of order
/// `n + m - 1`, for `m` in 3..=5 and `n >= 2m + 1`.
pub fn extract_jahangir_theorem1(
    f: &Graph,
    n: usize,
    m: usize,
) -> Result<(JahangirEmbedding, CaseTrace)> {
    if !(3..=5).contains(&m) {
        return Err(Error::Precondition(format!("m must be 3, 4 or 5, got {m}")));
    }
    if n < 2 * m + 1 {
        return Err(Error::Precondition(format!(
            "need n >= 2m + 1 = {}, got {n}",
            2 * m + 1
        )));
    }
    if f.order() != n + m - 1 {
        return Err(Error::Precondition(format!(
            "host order must be n + m - 1 = {}, got {}",
            n + m - 1,
            f.order()
        )));
    }
    if detect::contains_path(f, n)?.is_some() {
        return Err(Error::Precondition(format!("host contains P_{n}")));
    }
    let mut path = detect::longest_path(f)?;
    let off = f.vertices() - path.iter().collect::<VertexSet>();
    let subcase = subcase_for(path.len(), m);
    // Short paths are read from the end whose second vertex sees more of Y.
    if path.len() >= 4 && subcase != Subcase::OneOne {
        let seen = |v: usize| (f.neighbors(v) & off).len();
        if seen(path[path.len() - 2]) > seen(path[1]) {
            path.reverse();
        }
    }
    let view = PathView {
        g: f,
        path: &path,
        off,
    };
    let mut trace = CaseTrace::new(subcase, path.clone(), off);
    let attempts = match subcase {
        Subcase::OneOne => case_one(&view, m, &mut trace),
        Subcase::TwoOne => Vec::new(),
        Subcase::TwoTwo => low_degree_branches(&view, m, Subcase::TwoTwo, None),
        Subcase::TwoThree => case_two_three(&view, m),
        Subcase::TwoFour => case_two_four(&view, m),
        Subcase::TwoFive => case_two_five(&view, m),
        _ => unreachable!("not a branch of this analysis"),
    };
    let complement = f.complement();
    let found = if subcase == Subcase::TwoOne {
        detect::contains_jahangir(&complement, m)?
    } else {
        run_attempts(&complement, m, &attempts, &mut trace)?
    };
    finish(f, &complement, m, found, trace)
}

fn run_attempts(
    complement: &Graph,
    m: usize,
    attempts: &[Attempt],
    trace: &mut CaseTrace,
) -> Result<Option<JahangirEmbedding>> {
    for att in attempts {
        let restrict = att.d1 | att.d2;
        if restrict.len() < 2 * m + 1 {
            continue;
        }
        if let Some(j) = detect::contains_jahangir_within(complement, m, Some(restrict))? {
            trace.subcase = att.subcase;
            trace.d1 = Some(att.d1);
            trace.d2 = Some(att.d2);
            trace.b = att.b;
            trace.v1 = att.v1;
            return Ok(Some(j));
        }
    }
    // Record the first localization for the audit.
    if let Some(att) = attempts.first() {
        trace.d1 = Some(att.d1);
        trace.d2 = Some(att.d2);
        trace.b = att.b;
        trace.v1 = att.v1;
    }
    trace.intended = Some(trace.subcase);
    trace.subcase = Subcase::Fallback;
    Ok(None)
}

/// Unrestricted retry, then certification.
fn finish(
    f: &Graph,
    complement: &Graph,
    m: usize,
    found: Option<JahangirEmbedding>,
    mut trace: CaseTrace,
) -> Result<(JahangirEmbedding, CaseTrace)> {
    let found = match found {
        Some(j) => Some(j),
        None => {
            if trace.subcase != Subcase::Fallback && trace.subcase != Subcase::TwoOne {
                trace.intended = Some(trace.subcase);
                trace.subcase = Subcase::Fallback;
            }
            detect::contains_jahangir(complement, m)?
        }
    };
    let Some(j) = found else {
        return Err(falsification(
            f,
            format!("no J_{} in the complement", 2 * m),
            Some(trace),
        ));
    };
    let pattern = StandardGraph::Jahangir(m).build()?;
    if !validate_embedding(&pattern, complement, &j.to_embedding()) {
        return Err(falsification(
            f,
            "extracted embedding failed validation".into(),
            Some(trace),
        ));
    }
    Ok((j, trace))
}

/// Long path: `A` is the `2m - 2` vertices after `x_1`, `B` the first `m`
/// off-path vertices.
fn case_one(view: &PathView, m: usize, trace: &mut CaseTrace) -> Vec<Attempt> {
    let g = view.g;
    let t = view.t();
    let a: VertexSet = (2..2 * m).map(|i| view.x(i)).collect();
    let b_set = first(view.off, m);
    trace.a = Some(a);
    trace.b_set = Some(b_set);
    let ends = view.set(&[1, t]);
    let into_b = |v: usize| (g.neighbors(v) & b_set).len();

    let heavy: Vec<usize> = b_set
        .iter()
        .filter(|&b| (g.neighbors(b) & a).len() >= m - 1)
        .collect();
    if !heavy.is_empty() {
        trace.subcase = Subcase::OneOne;
        return heavy
            .into_iter()
            .map(|b| {
                let a1 = a - g.neighbors(b);
                let v1 = a1
                    .iter()
                    .max_by_key(|&v| (into_b(v), std::cmp::Reverse(v)))
                    .expect("A has more vertices than N_A(b)");
                let d1 = ends | VertexSet::singleton(b) | (a1 - VertexSet::singleton(v1));
                let d2 = VertexSet::singleton(v1) | (b_set - VertexSet::singleton(b));
                let mut att = Attempt::new(Subcase::OneOne, d1, d2).with_b(b);
                att.v1 = Some(v1);
                att
            })
            .collect();
    }

    trace.subcase = Subcase::OneTwo;
    // The m - 1 vertices of A least attached to B, ties by path position.
    let mut ranked: Vec<usize> = (2..2 * m).map(|i| view.x(i)).collect();
    ranked.sort_by_key(|&v| into_b(v));
    let chosen: VertexSet = ranked.into_iter().take(m - 1).collect();
    vec![Attempt::new(Subcase::OneTwo, ends | chosen, b_set)]
}

/// Branches on `s = |N_Y(x_2)|` below `m - 2`, shared by the short-path
/// subcases. `high` builds the attempts for `s >= m - 2`.
fn low_degree_branches(
    view: &PathView,
    m: usize,
    subcase: Subcase,
    high: Option<Vec<Attempt>>,
) -> Vec<Attempt> {
    let t = view.t();
    let n2 = view.n_off(view.x(2));
    let s = n2.len();
    let off = view.off;
    if s + 2 >= m {
        return high.unwrap_or_else(|| {
            let d1 = view.set(&[1, t]) | first(n2, m - 2);
            vec![Attempt::new(subcase, d1, off)]
        });
    }
    if s + 3 == m {
        let d1 = view.set(&[1, t, 2]) | n2;
        return vec![Attempt::new(subcase, d1, off)];
    }
    if s + 4 == m {
        let d1 = view.set(&[1, t, 2, t - 1]) | n2;
        return vec![Attempt::new(subcase, d1, off - view.n_off(view.x(t - 1)))];
    }
    // s = 0 with m = 5: b at distance two from x_3, else a least-degree
    // off-path vertex.
    let x3 = view.x(3);
    let mut candidates: Vec<usize> = view.off_at_distance_two(x3).to_vec();
    if let Some(low) = off.iter().min_by_key(|&y| (view.g.degree(y), y)) {
        if !candidates.contains(&low) {
            candidates.push(low);
        }
    }
    let core = view.set(&[1, 2, t - 1, t]);
    candidates
        .into_iter()
        .map(|b| Attempt::new(subcase, core | VertexSet::singleton(b), off).with_b(b))
        .collect()
}

fn case_two_three(view: &PathView, m: usize) -> Vec<Attempt> {
    let g = view.g;
    let t = view.t();
    let n2 = view.n_off(view.x(2));
    let chosen = first(n2, m - 2);
    let high = if g.has_edge(view.x(3), view.x(t)) {
        let d1 = view.set(&[1, t, 4]) | chosen;
        Attempt::new(Subcase::TwoThree, d1, first(view.off - d1, m))
    } else {
        let d1 = view.set(&[1, t]) | chosen;
        Attempt::new(Subcase::TwoThree, d1, view.set(&[3]) | view.off)
    };
    low_degree_branches(view, m, Subcase::TwoThree, Some(vec![high]))
}

fn case_two_four(view: &PathView, m: usize) -> Vec<Attempt> {
    let g = view.g;
    let t = view.t();
    let x = |i| view.x(i);
    let n2 = view.n_off(x(2));
    let off = view.off;
    let s = n2.len();
    let sub = Subcase::TwoFour;
    if s + 1 >= m {
        let b = if !(g.neighbors(x(t - 1)) & n2).is_empty() || g.has_edge(x(t - 1), x(1)) {
            x(t - 2)
        } else {
            x(t - 1)
        };
        let d1 = view.set(&[1]) | first(n2, m - 1);
        let d2 = view.set(&[3, t]) | VertexSet::singleton(b) | first(off - d1, m - 2);
        return vec![Attempt::new(sub, d1, d2).with_b(b)];
    }
    if s + 2 == m {
        let d1 = view.set(&[1, 2]) | n2;
        return vec![Attempt::new(
            sub,
            d1,
            view.set(&[3, t]) | first(off - n2, m - 1),
        )];
    }
    if s + 3 == m {
        let d1 = view.set(&[1, 2, t]) | n2;
        return vec![Attempt::new(sub, d1, view.set(&[3]) | first(off - n2, m))];
    }
    let core = view.set(&[1, 2, t - 1, t]);
    if s + 4 == m {
        let d1 = core | n2 | view.n_off(x(t - 1));
        return vec![Attempt::new(sub, d1, off)];
    }
    // s = 0, m = 5: b is x_3, an off-path neighbor of x_3, or an off-path
    // vertex at distance two from it.
    let mut candidates = vec![x(3)];
    candidates.extend(view.n_off(x(3)));
    candidates.extend(view.off_at_distance_two(x(3)));
    candidates
        .into_iter()
        .map(|b| Attempt::new(sub, core | VertexSet::singleton(b), off).with_b(b))
        .collect()
}

fn case_two_five(view: &PathView, m: usize) -> Vec<Attempt> {
    let g = view.g;
    let t = view.t();
    let x = |i| view.x(i);
    let n2 = view.n_off(x(2));
    let off = view.off;
    let s = n2.len();
    let sub = Subcase::TwoFive;
    let free_of = |i: usize| (g.neighbors(x(i)) & n2).is_empty();
    let pick = |pair: [usize; 2]| -> Vec<usize> {
        pair.into_iter().filter(|&i| free_of(i)).map(x).collect()
    };
    if s + 2 >= m {
        let d1 = view.set(&[1, t]) | first(n2, m - 2);
        let rest = first(off - d1, m - 2);
        let mut out = Vec::new();
        for b in pick([4, 5]) {
            for c in pick([6, 7]) {
                let d2 = view.set(&[3]) | VertexSet::singleton(b) | VertexSet::singleton(c) | rest;
                out.push(Attempt::new(sub, d1, d2).with_b(b));
            }
        }
        return out;
    }
    if s + 3 == m {
        let d1 = view.set(&[1, 2, t]) | n2;
        let rest = first(off - n2, m - 1);
        return pick([4, 5])
            .into_iter()
            .map(|b| {
                Attempt::new(sub, d1, view.set(&[3]) | VertexSet::singleton(b) | rest).with_b(b)
            })
            .collect();
    }
    if s + 4 == m {
        let d1 = view.set(&[1, 2, t - 1, t]) | n2 | view.n_off(x(t - 1));
        return vec![Attempt::new(sub, d1, view.set(&[3]) | off)];
    }
    // s = 0: x_3 or x_4, fewer off-path neighbors first.
    let mut candidates = vec![x(3), x(4)];
    candidates.sort_by_key(|&v| view.n_off(v).len());
    let core = view.set(&[1, 2, t - 1, t]);
    candidates
        .into_iter()
        .map(|b| Attempt::new(sub, core | VertexSet::singleton(b), off).with_b(b))
        .collect()
}

/// Extracts `J_4` from the complement of an order-9 graph with no `2P_4`.
pub fn extract_j4_theorem2_base(f: &Graph) -> Result<(JahangirEmbedding, CaseTrace)> {
    if f.order() != 9 {
        return Err(Error::Precondition(format!(
            "host order must be 9, got {}",
            f.order()
        )));
    }
    if detect::contains_disjoint_paths(f, 2, 4)?.is_some() {
        return Err(Error::Precondition("host contains 2P_4".into()));
    }
    let path = detect::longest_path(f)?;
    let off = f.vertices() - path.iter().collect::<VertexSet>();
    let view = PathView {
        g: f,
        path: &path,
        off,
    };
    let t = view.t();
    let ends = view.set(&[1, t]);
    let mut trace = CaseTrace::new(Subcase::BaseOffPath, path.clone(), off);
    trace.a = Some(off);

    let mut attempts = Vec::new();
    if off.len() >= 3 {
        // The ends see no off-path vertex; pad to five vertices.
        let d2 = first(off, 5 - ends.len());
        attempts.push(Attempt::new(Subcase::BaseOffPath, ends, d2));
    } else if off.len() == 2 && t == 7 {
        let yz = off;
        let common = (2..=6).find(|&i| (f.neighbors(view.x(i)) & yz) == yz);
        if let Some(i) = common {
            let w = if i - 1 != 1 {
                view.x(i - 1)
            } else {
                view.x(i + 1)
            };
            attempts.push(
                Attempt::new(
                    Subcase::BaseCommonNeighbor,
                    yz,
                    ends | VertexSet::singleton(w),
                )
                .with_b(w),
            );
        }
        for i in (2..=6).filter(|&i| (f.neighbors(view.x(i)) & yz).is_empty()) {
            let xi = view.x(i);
            attempts.push(
                Attempt::new(
                    Subcase::BaseFreeInterior,
                    yz,
                    ends | VertexSet::singleton(xi),
                )
                .with_b(xi),
            );
        }
        trace.subcase = attempts
            .first()
            .map_or(Subcase::BaseFreeInterior, |a| a.subcase);
    }
    let complement = f.complement();
    let found = run_attempts(&complement, 2, &attempts, &mut trace)?;
    finish(f, &complement, 2, found, trace)
}

/// `k` disjoint `P_n` in a graph of order `kn + m - 1` whose complement has
/// no `J_{2m}`, peeled one path at a time.
///
/// Peeling leaves `n + m - 1` vertices for the last path, which is not
/// enough when `(n, m) = (4, 2)`; that family uses the joint search.
pub fn extract_k_paths(f: &Graph, inst: RamseyInstance) -> Result<Vec<Embedding>> {
    let RamseyInstance { k, n, m } = inst;
    let target = k * n + m - 1;
    if claimed_value(inst).value() != Some(target) {
        return Err(Error::OutOfProvenRange { k, n, m });
    }
    if f.order() != target {
        return Err(Error::Precondition(format!(
            "host order must be kn + m - 1 = {target}, got {}",
            f.order()
        )));
    }
    if f.order() > detect::PATH_CEILING {
        return Err(Error::CeilingExceeded {
            what: "path extraction",
            limit: detect::PATH_CEILING,
            got: f.order(),
        });
    }
    if detect::contains_jahangir(&f.complement(), m)?.is_some() {
        return Err(Error::Precondition(format!(
            "complement contains J_{}",
            2 * m
        )));
    }
    let paths = if (n, m) == (4, 2) {
        detect::disjoint_paths_within(f, f.vertices(), k, n, &mut Budget::unlimited())
    } else {
        peel(f, k, n)
    };
    let Some(paths) = paths else {
        return Err(falsification(f, format!("no {k}P_{n} found"), None));
    };
    let pattern = StandardGraph::Path(n).build()?;
    let mut used = VertexSet::EMPTY;
    for p in &paths {
        let image = p.image();
        if !validate_embedding(&pattern, f, p) || !(image & used).is_empty() {
            return Err(falsification(
                f,
                "extracted paths failed validation".into(),
                None,
            ));
        }
        used |= image;
    }
    Ok(paths)
}

fn peel(f: &Graph, k: usize, n: usize) -> Option<Vec<Embedding>> {
    let mut left = f.vertices();
    let mut out = Vec::with_capacity(k);
    for _ in 0..k {
        let p = detect::path_within(f, left, n, &mut Budget::unlimited())?;
        left = left - p.image();
        out.push(p);
    }
    Some(out)
}

/// Totals of an extraction sweep over every isomorphism class of an order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub order: usize,
    pub classes_total: u64,
    /// Classes meeting the extractor's precondition.
    pub eligible: u64,
    pub certified: u64,
    pub fallbacks: u64,
    pub subcase_tallies: BTreeMap<String, u64>,
    /// Extraction failures, as graph6 plus context.
    pub falsifications: Vec<String>,
    pub complete: bool,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.complete && self.certified == self.eligible && self.falsifications.is_empty()
    }

    fn from_tally(order: usize, processed: u64, complete: bool, tally: Tally) -> SweepReport {
        let mut subcase_tallies = tally.counts;
        let eligible = subcase_tallies.remove("eligible").unwrap_or(0);
        let certified = subcase_tallies.remove("certified").unwrap_or(0);
        SweepReport {
            order,
            classes_total: processed,
            eligible,
            certified,
            fallbacks: subcase_tallies
                .get(Subcase::Fallback.label())
                .copied()
                .unwrap_or(0),
            subcase_tallies,
            falsifications: tally.found,
            complete,
        }
    }
}

fn record(tally: &mut Tally, g: &Graph, outcome: Result<(JahangirEmbedding, CaseTrace)>) {
    tally.bump("eligible");
    match outcome {
        Ok((_, trace)) => {
            tally.bump("certified");
            tally.bump(trace.subcase.label());
            if let Some(i) = trace.intended {
                tally.bump(&format!("fallback from {i}"));
            }
        }
        Err(e) => tally
            .found
            .push(format!("{} {e}", emit_graph6(g).unwrap_or_default())),
    }
}

/// Runs [`extract_jahangir_theorem1`] on every `P_n`-free class of order
/// `n + m - 1`.
pub fn sweep_theorem1(n: usize, m: usize, shards: usize, opts: &RunOptions) -> Result<SweepReport> {
    let order = n + m - 1;
    let label = format!("extract thm1 n={n} m={m}");
    sweep(&label, order, shards, opts, move |g, tally| {
        if matches!(detect::contains_path(g, n), Ok(None)) {
            record(tally, g, extract_jahangir_theorem1(g, n, m));
        }
    })
}

/// Runs [`extract_j4_theorem2_base`] on every order-9 class with no `2P_4`.
pub fn sweep_theorem2_base(shards: usize, opts: &RunOptions) -> Result<SweepReport> {
    sweep("extract thm2", 9, shards, opts, |g, tally| {
        if matches!(detect::contains_disjoint_paths(g, 2, 4), Ok(None)) {
            record(tally, g, extract_j4_theorem2_base(g));
        }
    })
}

fn sweep<F>(
    label: &str,
    order: usize,
    shards: usize,
    opts: &RunOptions,
    visit: F,
) -> Result<SweepReport>
where
    F: Fn(&Graph, &mut Tally) + Sync,
{
    let set = enumerate::resume_or_fresh(label, order, shards.max(1), opts)?;
    let set = enumerate::run_sharded(set, opts, visit)?;
    Ok(SweepReport::from_tally(
        order,
        set.processed(),
        set.complete(),
        set.merged_tallies(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::make_standard;
    use crate::ramsey::random_graph;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn std_graph(kind: StandardGraph) -> Graph {
        make_standard(kind).unwrap()
    }

    #[test]
    fn validator_basics() {
        let p3 = std_graph(StandardGraph::Path(3));
        assert!(validate_embedding(&p3, &p3, &Embedding::new(vec![0, 1, 2])));
        assert!(!validate_embedding(
            &p3,
            &p3,
            &Embedding::new(vec![0, 1, 1])
        ));
        assert!(!validate_embedding(
            &p3,
            &p3,
            &Embedding::new(vec![0, 2, 1])
        ));
        assert!(!validate_embedding(&p3, &p3, &Embedding::new(vec![0, 1])));
        assert!(!validate_embedding(
            &p3,
            &p3,
            &Embedding::new(vec![0, 1, 3])
        ));
        let k34 = std_graph(StandardGraph::CompleteBipartite(3, 4));
        let j = detect::contains_jahangir(&k34, 3).unwrap().unwrap();
        let j6 = std_graph(StandardGraph::Jahangir(3));
        assert!(validate_embedding(&j6, &k34, &j.to_embedding()));
    }

    #[test]
    fn dispatch_is_total() {
        for m in 3..=5 {
            for t in 1..(2 * m + 6) {
                let s = subcase_for(t, m);
                let expected = if t >= 2 * m {
                    Subcase::OneOne
                } else if t <= 3 {
                    Subcase::TwoOne
                } else if t <= m + 1 {
                    Subcase::TwoTwo
                } else if t == m + 2 {
                    Subcase::TwoThree
                } else if t == m + 3 {
                    Subcase::TwoFour
                } else {
                    assert_eq!((m, t), (5, 9));
                    Subcase::TwoFive
                };
                assert_eq!(s, expected, "t={t} m={m}");
            }
        }
    }

    #[test]
    fn theorem1_examples() {
        let (j, trace) = extract_jahangir_theorem1(&Graph::empty(9).unwrap(), 7, 3).unwrap();
        assert_eq!(trace.subcase, Subcase::TwoOne);
        assert_eq!(j.m(), 3);

        let g = std_graph(StandardGraph::UnionOfCompletes(vec![2, 6]))
            .disjoint_union(&Graph::empty(1).unwrap())
            .unwrap();
        let (j, trace) = extract_jahangir_theorem1(&g, 7, 3).unwrap();
        let j6 = std_graph(StandardGraph::Jahangir(3));
        assert!(validate_embedding(&j6, &g.complement(), &j.to_embedding()));
        if let Some(r) = trace.restriction() {
            assert!(j.vertices().is_subset(r));
        }

        let c9 = std_graph(StandardGraph::Cycle(9));
        assert!(matches!(
            extract_jahangir_theorem1(&c9, 7, 3),
            Err(Error::Precondition(_))
        ));
        assert!(extract_jahangir_theorem1(&Graph::empty(9).unwrap(), 7, 6).is_err());
        assert!(extract_jahangir_theorem1(&Graph::empty(9).unwrap(), 6, 3).is_err());
        assert!(extract_jahangir_theorem1(&Graph::empty(10).unwrap(), 7, 3).is_err());
    }

    #[test]
    fn long_path_case() {
        // P_6 plus three isolated vertices: longest path of 6 = 2m.
        let g = std_graph(StandardGraph::Path(6))
            .disjoint_union(&Graph::empty(3).unwrap())
            .unwrap();
        let (_, trace) = extract_jahangir_theorem1(&g, 7, 3).unwrap();
        assert_eq!(trace.subcase, Subcase::OneTwo);
        assert_eq!(trace.longest_path.len(), 6);
        assert!(trace.d1.unwrap().len() + trace.d2.unwrap().len() == 7);
    }

    #[test]
    fn theorem2_examples() {
        let g = std_graph(StandardGraph::UnionOfCompletes(vec![1, 7]))
            .disjoint_union(&Graph::empty(1).unwrap())
            .unwrap();
        let (j, _) = extract_j4_theorem2_base(&g).unwrap();
        let j4 = std_graph(StandardGraph::Jahangir(2));
        assert!(validate_embedding(&j4, &g.complement(), &j.to_embedding()));

        let k9 = std_graph(StandardGraph::Complete(9));
        assert!(matches!(
            extract_j4_theorem2_base(&k9),
            Err(Error::Precondition(_))
        ));
        let (_, trace) = extract_j4_theorem2_base(&Graph::empty(9).unwrap()).unwrap();
        assert_eq!(trace.subcase, Subcase::BaseOffPath);
    }

    #[test]
    fn k_paths_examples() {
        let inst = RamseyInstance::new(2, 7, 3).unwrap();
        let k16 = std_graph(StandardGraph::Complete(16));
        assert_eq!(extract_k_paths(&k16, inst).unwrap().len(), 2);
        let g = std_graph(StandardGraph::UnionOfCompletes(vec![1, 15]));
        let paths = extract_k_paths(&g, inst).unwrap();
        assert!(paths.iter().all(|p| !p.image().contains(0)));
        let witness = std_graph(StandardGraph::UnionOfCompletes(vec![2, 13]));
        assert!(matches!(
            extract_k_paths(&witness, inst),
            Err(Error::Precondition(_))
        ));
        let out = RamseyInstance::new(1, 4, 2).unwrap();
        assert!(extract_k_paths(&Graph::empty(5).unwrap(), out).is_err());
    }

    #[test]
    fn k_paths_j4_family_uses_joint_search() {
        // Order 9, complement J_4-free, where greedy peeling of the first
        // path can strand the rest: K_1 ∪ K_8 minus nothing still works,
        // and so does any dense host.
        let inst = RamseyInstance::new(2, 4, 2).unwrap();
        let g = std_graph(StandardGraph::UnionOfCompletes(vec![1, 8]));
        assert_eq!(extract_k_paths(&g, inst).unwrap().len(), 2);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(300))]
        // Sparse hosts are mostly P_n-free; every one must certify.
        #[test]
        fn sparse_hosts_certify(seed in any::<u64>(), which in 0usize..3, density in 1u32..6) {
            let (n, m) = [(7, 3), (9, 4), (11, 5)][which];
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let g = random_graph(n + m - 1, f64::from(density) * 0.04, &mut rng).unwrap();
            prop_assume!(detect::contains_path(&g, n).unwrap().is_none());
            let (j, trace) = extract_jahangir_theorem1(&g, n, m).unwrap();
            let pattern = std_graph(StandardGraph::Jahangir(m));
            prop_assert!(validate_embedding(&pattern, &g.complement(), &j.to_embedding()));
            if let (Some(r), true) = (trace.restriction(), trace.subcase != Subcase::Fallback) {
                prop_assert!(j.vertices().is_subset(r));
                prop_assert!((trace.d1.unwrap() & trace.d2.unwrap()).is_empty());
            }
        }
    }

    #[test]
    fn falsification_display_names_branch() {
        let mut trace = CaseTrace::new(Subcase::Fallback, vec![0], VertexSet::EMPTY);
        trace.intended = Some(Subcase::TwoThree);
        let rec = FalsificationRecord {
            graph: "@".into(),
            context: "x".into(),
            trace: Some(trace),
        };
        assert_eq!(rec.to_string(), "x on @ (branch 2.3)");
    }
}
