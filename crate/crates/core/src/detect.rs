//! Exact containment searches: longest paths, disjoint paths and subgraph
//! monomorphisms (with Jahangir patterns as the main client).
//!
//! Containment is always subgraph containment, never induced.

use std::collections::HashSet;
use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, StandardGraph, VertexSet};

/// Largest host order for the exact path searches.
pub const PATH_CEILING: usize = 24;

/// Injective map from pattern vertices (by index) to host vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Embedding {
    map: Vec<usize>,
}

impl Embedding {
    pub fn new(map: Vec<usize>) -> Embedding {
        Embedding { map }
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn image(&self) -> VertexSet {
        self.map.iter().collect()
    }
}

/// A copy of `J_{2m}`: `cycle` lists the 2m cycle vertices in cyclic order,
/// and the hub is adjacent to the even positions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JahangirEmbedding {
    pub hub: usize,
    pub cycle: Vec<usize>,
}

impl JahangirEmbedding {
    pub fn m(&self) -> usize {
        self.cycle.len() / 2
    }

    /// As a map from the `jahangir(m)` pattern labeling: cycle position `i`
    /// is pattern vertex `i`, the hub is pattern vertex `2m`.
    pub fn to_embedding(&self) -> Embedding {
        let mut map = self.cycle.clone();
        map.push(self.hub);
        Embedding::new(map)
    }

    fn from_embedding(e: Embedding) -> JahangirEmbedding {
        let mut map = e.map;
        let hub = map.pop().expect("nonempty pattern");
        JahangirEmbedding { hub, cycle: map }
    }

    pub fn vertices(&self) -> VertexSet {
        self.cycle
            .iter()
            .chain(std::iter::once(&self.hub))
            .collect()
    }
}

fn path_ceiling(g: &Graph) -> Result<()> {
    if g.order() > PATH_CEILING {
        return Err(Error::CeilingExceeded {
            what: "exact path search",
            limit: PATH_CEILING,
            got: g.order(),
        });
    }
    Ok(())
}

fn path_embedding(path: Vec<usize>) -> Embedding {
    Embedding::new(path)
}

/// A maximum-length path; among those, the lexicographically smallest
/// vertex sequence.
pub fn longest_path(g: &Graph) -> Result<Vec<usize>> {
    path_ceiling(g)?;
    Ok(longest_path_within(g, g.vertices()))
}

pub(crate) fn longest_path_within(g: &Graph, within: VertexSet) -> Vec<usize> {
    let upper = g
        .components_within(within)
        .iter()
        .map(|c| c.len())
        .max()
        .unwrap_or(0);
    let mut search = Longest {
        g,
        within,
        upper,
        best: Vec::new(),
        path: Vec::with_capacity(upper),
    };
    for s in within {
        search.path.push(s);
        let done = search.dfs(VertexSet::singleton(s));
        search.path.pop();
        if done.is_break() {
            break;
        }
    }
    search.best
}

struct Longest<'a> {
    g: &'a Graph,
    within: VertexSet,
    upper: usize,
    best: Vec<usize>,
    path: Vec<usize>,
}

impl Longest<'_> {
    fn dfs(&mut self, visited: VertexSet) -> ControlFlow<()> {
        if self.path.len() > self.best.len() {
            self.best.clone_from(&self.path);
            if self.best.len() == self.upper {
                return ControlFlow::Break(());
            }
        }
        let last = *self.path.last().expect("nonempty path");
        let open = self.within - visited;
        let reach = self.g.reach(last, open);
        if self.path.len() + reach.len() - 1 <= self.best.len() {
            return ControlFlow::Continue(());
        }
        for next in self.g.neighbors(last) & open {
            self.path.push(next);
            let flow = self.dfs(visited | VertexSet::singleton(next));
            self.path.pop();
            flow?;
        }
        ControlFlow::Continue(())
    }
}

/// Calls `f` on every path with exactly `n` vertices inside `within`, each
/// undirected path once (first vertex smaller than last), in lexicographic
/// order. Stops early when `f` breaks or the node `budget` runs out.
fn for_each_path<F>(
    g: &Graph,
    within: VertexSet,
    n: usize,
    budget: &mut Budget,
    mut f: F,
) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    if n == 0 || within.len() < n {
        return ControlFlow::Continue(());
    }
    let mut path = Vec::with_capacity(n);
    for s in within {
        path.push(s);
        let flow = exact_dfs(
            g,
            within,
            n,
            &mut path,
            VertexSet::singleton(s),
            budget,
            &mut f,
        );
        path.pop();
        flow?;
    }
    ControlFlow::Continue(())
}

fn exact_dfs<F>(
    g: &Graph,
    within: VertexSet,
    n: usize,
    path: &mut Vec<usize>,
    visited: VertexSet,
    budget: &mut Budget,
    f: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    budget.spend()?;
    if path.len() == n {
        if n == 1 || path[0] < path[n - 1] {
            return f(path);
        }
        return ControlFlow::Continue(());
    }
    let last = *path.last().expect("nonempty path");
    let open = within - visited;
    if path.len() + g.reach(last, open).len() - 1 < n {
        return ControlFlow::Continue(());
    }
    for next in g.neighbors(last) & open {
        path.push(next);
        let flow = exact_dfs(
            g,
            within,
            n,
            path,
            visited | VertexSet::singleton(next),
            budget,
            f,
        );
        path.pop();
        flow?;
    }
    ControlFlow::Continue(())
}

/// Node budget for searches that may be cut short. Exhaustion is reported
/// through [`Budget::exhausted`].
#[derive(Debug)]
pub(crate) struct Budget {
    left: Option<u64>,
    exhausted: bool,
}

impl Budget {
    pub fn unlimited() -> Budget {
        Budget {
            left: None,
            exhausted: false,
        }
    }

    pub fn nodes(n: u64) -> Budget {
        Budget {
            left: Some(n),
            exhausted: false,
        }
    }

    #[inline]
    fn spend(&mut self) -> ControlFlow<()> {
        match &mut self.left {
            None => ControlFlow::Continue(()),
            Some(0) => {
                self.exhausted = true;
                ControlFlow::Break(())
            }
            Some(left) => {
                *left -= 1;
                ControlFlow::Continue(())
            }
        }
    }

    pub fn exhausted(&self) -> bool {
        self.exhausted
    }
}

/// Some `P_n` in `g`, as the map from path position to host vertex.
pub fn contains_path(g: &Graph, n: usize) -> Result<Option<Embedding>> {
    if n == 0 {
        return Err(Error::Precondition("path order must be at least 1".into()));
    }
    path_ceiling(g)?;
    Ok(path_within(g, g.vertices(), n, &mut Budget::unlimited()))
}

pub(crate) fn path_within(
    g: &Graph,
    within: VertexSet,
    n: usize,
    budget: &mut Budget,
) -> Option<Embedding> {
    let mut found = None;
    let _ = for_each_path(g, within, n, budget, |p| {
        found = Some(p.to_vec());
        ControlFlow::Break(())
    });
    found.map(path_embedding)
}

/// `k` vertex-disjoint copies of `P_n`.
pub fn contains_disjoint_paths(g: &Graph, k: usize, n: usize) -> Result<Option<Vec<Embedding>>> {
    if k == 0 || n == 0 {
        return Err(Error::Precondition("need k >= 1 and n >= 1".into()));
    }
    path_ceiling(g)?;
    Ok(disjoint_paths_within(
        g,
        g.vertices(),
        k,
        n,
        &mut Budget::unlimited(),
    ))
}

/// Backtracking search. Paths are produced in increasing order of their
/// smallest vertex, so each unordered family is tried once; path vertex
/// sets already tried at a level are skipped.
pub(crate) fn disjoint_paths_within(
    g: &Graph,
    within: VertexSet,
    k: usize,
    n: usize,
    budget: &mut Budget,
) -> Option<Vec<Embedding>> {
    let mut out = Vec::with_capacity(k);
    if disjoint_rec(g, within, k, n, budget, &mut out) {
        Some(out.into_iter().map(path_embedding).collect())
    } else {
        None
    }
}

fn disjoint_rec(
    g: &Graph,
    within: VertexSet,
    k: usize,
    n: usize,
    budget: &mut Budget,
    out: &mut Vec<Vec<usize>>,
) -> bool {
    if k == 0 {
        return true;
    }
    if capacity(g, within, n) < k {
        return false;
    }
    if k == 1 {
        return match path_within(g, within, n, budget) {
            Some(p) => {
                out.push(p.map().to_vec());
                true
            }
            None => false,
        };
    }
    for v in within {
        let pool = within.at_least(v);
        if capacity(g, pool, n) < k {
            return false;
        }
        let mut tried = HashSet::new();
        let mut candidates = Vec::new();
        let flow = for_each_path(g, pool, n, budget, |p| {
            if p.contains(&v) {
                let set: VertexSet = p.iter().collect();
                if tried.insert(set) {
                    candidates.push((set, p.to_vec()));
                }
            }
            ControlFlow::Continue(())
        });
        if flow.is_break() {
            // Budget exhausted.
            return false;
        }
        for (set, p) in candidates {
            out.push(p);
            if disjoint_rec(g, pool - set, k - 1, n, budget, out) {
                return true;
            }
            out.pop();
            if budget.exhausted() {
                return false;
            }
        }
    }
    false
}

/// Upper bound on the number of disjoint `P_n` inside `within`.
fn capacity(g: &Graph, within: VertexSet, n: usize) -> usize {
    g.components_within(within)
        .iter()
        .map(|c| c.len() / n)
        .sum()
}

/// Searches for an injective map of `pattern` into `host` carrying every
/// pattern edge to a host edge, with the image inside `restrict` if given.
pub fn find_monomorphism(
    pattern: &Graph,
    host: &Graph,
    restrict: Option<VertexSet>,
) -> Result<Option<Embedding>> {
    check_mono(pattern, host, restrict)?;
    Ok(monomorphism(pattern, host, restrict, None))
}

fn check_mono(pattern: &Graph, host: &Graph, restrict: Option<VertexSet>) -> Result<()> {
    if pattern.order() > host.order() {
        return Err(Error::Precondition(format!(
            "pattern order {} exceeds host order {}",
            pattern.order(),
            host.order()
        )));
    }
    if let Some(r) = restrict {
        if !r.is_subset(host.vertices()) {
            return Err(Error::Precondition(
                "restriction set leaves the host".into(),
            ));
        }
    }
    Ok(())
}

pub(crate) fn monomorphism(
    pattern: &Graph,
    host: &Graph,
    restrict: Option<VertexSet>,
    root: Option<usize>,
) -> Option<Embedding> {
    let allowed = restrict.unwrap_or(host.vertices()) & host.vertices();
    let p = pattern.order();
    if allowed.len() < p {
        return None;
    }
    let order = match_order(pattern, root);
    let mut position = vec![0usize; p];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    // Pattern neighbors placed before each step.
    let earlier: Vec<Vec<usize>> = order
        .iter()
        .enumerate()
        .map(|(i, &v)| {
            pattern
                .neighbors(v)
                .iter()
                .filter(|&u| position[u] < i)
                .collect()
        })
        .collect();
    let host_deg: Vec<usize> = (0..host.order())
        .map(|h| (host.neighbors(h) & allowed).len())
        .collect();
    let fits: Vec<VertexSet> = order
        .iter()
        .map(|&v| {
            let need = pattern.degree(v);
            allowed.iter().filter(|&h| host_deg[h] >= need).collect()
        })
        .collect();

    let mut image = vec![usize::MAX; p];
    if mono_rec(
        host,
        &order,
        &earlier,
        &fits,
        0,
        VertexSet::EMPTY,
        &mut image,
    ) {
        Some(Embedding::new(image))
    } else {
        None
    }
}

fn mono_rec(
    host: &Graph,
    order: &[usize],
    earlier: &[Vec<usize>],
    fits: &[VertexSet],
    depth: usize,
    used: VertexSet,
    image: &mut [usize],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let mut cands = fits[depth] - used;
    for &q in &earlier[depth] {
        cands &= host.neighbors(image[q]);
        if cands.is_empty() {
            return false;
        }
    }
    let v = order[depth];
    for h in cands {
        image[v] = h;
        if mono_rec(
            host,
            order,
            earlier,
            fits,
            depth + 1,
            used | VertexSet::singleton(h),
            image,
        ) {
            return true;
        }
    }
    image[v] = usize::MAX;
    false
}

/// Root first (default: highest degree, ties to the larger index), then
/// repeatedly the vertex with most already-ordered neighbors, ties by
/// degree and then smallest index.
fn match_order(pattern: &Graph, root: Option<usize>) -> Vec<usize> {
    let p = pattern.order();
    let root = root.unwrap_or_else(|| {
        (0..p)
            .max_by_key(|&v| (pattern.degree(v), v))
            .expect("nonempty")
    });
    let mut order = vec![root];
    let mut placed = VertexSet::singleton(root);
    while order.len() < p {
        let next = (0..p)
            .filter(|&v| !placed.contains(v))
            .max_by_key(|&v| {
                (
                    (pattern.neighbors(v) & placed).len(),
                    pattern.degree(v),
                    std::cmp::Reverse(v),
                )
            })
            .expect("unplaced vertex");
        order.push(next);
        placed.insert(next);
    }
    order
}

/// A copy of `J_{2m}` in `g`, searched hub first.
pub fn contains_jahangir(g: &Graph, m: usize) -> Result<Option<JahangirEmbedding>> {
    contains_jahangir_within(g, m, None)
}

pub(crate) fn contains_jahangir_within(
    g: &Graph,
    m: usize,
    restrict: Option<VertexSet>,
) -> Result<Option<JahangirEmbedding>> {
    if m < 2 {
        return Err(Error::BelowMinimum {
            family: "jahangir",
            min: 2,
            got: m,
        });
    }
    if g.order() < 2 * m + 1 {
        return Err(Error::Precondition(format!(
            "host of order {} is smaller than J_{} ({} vertices)",
            g.order(),
            2 * m,
            2 * m + 1
        )));
    }
    let pattern = StandardGraph::Jahangir(m).build()?;
    check_mono(&pattern, g, restrict)?;
    Ok(monomorphism(&pattern, g, restrict, Some(2 * m)).map(JahangirEmbedding::from_embedding))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extract::validate_embedding;
    use proptest::prelude::*;

    fn sg(kind: StandardGraph) -> Graph {
        kind.build().unwrap()
    }

    fn is_path(g: &Graph, p: &[usize]) -> bool {
        let set: VertexSet = p.iter().collect();
        set.len() == p.len() && p.windows(2).all(|w| g.has_edge(w[0], w[1]))
    }

    #[test]
    fn longest_path_examples() {
        assert_eq!(
            longest_path(&sg(StandardGraph::Cycle(5))).unwrap(),
            vec![0, 1, 2, 3, 4]
        );
        let g = sg(StandardGraph::UnionOfCompletes(vec![1, 3]));
        assert_eq!(longest_path(&g).unwrap(), vec![1, 2, 3]);
        let j3 = sg(StandardGraph::Jahangir(3));
        let l = longest_path(&j3).unwrap();
        assert_eq!(l.len(), 7);
        assert!(is_path(&j3, &l));
        assert_eq!(longest_path(&Graph::empty(3).unwrap()).unwrap(), vec![0]);
        assert!(longest_path(&Graph::empty(25).unwrap()).is_err());
    }

    #[test]
    fn longest_path_is_lexicographically_smallest() {
        // Star K_{1,3}: max length 3; smallest sequence is 1,0,2.
        let star = sg(StandardGraph::Star(3));
        assert_eq!(longest_path(&star).unwrap(), vec![1, 0, 2]);
        // No Hamiltonian path of J_6 starts at 0; the first one from 1 is below.
        let j3 = sg(StandardGraph::Jahangir(3));
        assert_eq!(longest_path(&j3).unwrap(), vec![1, 0, 5, 4, 3, 2, 6]);
    }

    #[test]
    fn contains_path_examples() {
        let g = sg(StandardGraph::UnionOfCompletes(vec![2, 6]));
        assert!(contains_path(&g, 7).unwrap().is_none());
        assert!(contains_path(&g, 6).unwrap().is_some());
        let c9 = sg(StandardGraph::Cycle(9));
        let e = contains_path(&c9, 7).unwrap().unwrap();
        assert!(is_path(&c9, e.map()) && e.len() == 7);
        assert!(contains_path(&Graph::empty(9).unwrap(), 2)
            .unwrap()
            .is_none());
        assert!(contains_path(&Graph::empty(9).unwrap(), 1)
            .unwrap()
            .is_some());
        assert!(contains_path(&c9, 10).unwrap().is_none());
        assert!(contains_path(&c9, 0).is_err());
    }

    #[test]
    fn disjoint_paths_examples() {
        let g = sg(StandardGraph::UnionOfCompletes(vec![1, 7]));
        assert!(contains_disjoint_paths(&g, 2, 4).unwrap().is_none());
        let k9 = sg(StandardGraph::Complete(9));
        let ps = contains_disjoint_paths(&k9, 2, 4).unwrap().unwrap();
        assert_eq!(ps.len(), 2);
        assert!((ps[0].image() & ps[1].image()).is_empty());
        let p4 = sg(StandardGraph::Path(4));
        let two = p4.disjoint_union(&p4).unwrap();
        let ps = contains_disjoint_paths(&two, 2, 4).unwrap().unwrap();
        for p in &ps {
            assert!(is_path(&two, p.map()));
        }
        assert!(contains_disjoint_paths(&two, 3, 2).unwrap().is_some());
        assert!(contains_disjoint_paths(&two, 3, 3).unwrap().is_none());
    }

    #[test]
    fn disjoint_paths_need_backtracking() {
        // Only 0,1,2 with 3,4,5 works; any path using 1-3 strands 0 or 2.
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (1, 3), (3, 4), (4, 5)]).unwrap();
        let ps = contains_disjoint_paths(&g, 2, 3).unwrap().unwrap();
        assert_eq!(ps[0].image() | ps[1].image(), g.vertices());
        // A spider with three legs of two vertices: every P_3 uses the center
        // or lies in one leg, so 2P_3 is absent while 3P_2 is present.
        let spider =
            Graph::from_edges(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap();
        assert!(contains_disjoint_paths(&spider, 2, 3).unwrap().is_none());
        assert!(contains_disjoint_paths(&spider, 3, 2).unwrap().is_some());
    }

    #[test]
    fn monomorphism_examples() {
        let p3 = sg(StandardGraph::Path(3));
        let k3 = sg(StandardGraph::Complete(3));
        assert!(find_monomorphism(&p3, &k3, None).unwrap().is_some());
        let k23 = sg(StandardGraph::CompleteBipartite(2, 3));
        assert!(find_monomorphism(&k3, &k23, None).unwrap().is_none());
        let j3 = sg(StandardGraph::Jahangir(3));
        let w = sg(StandardGraph::UnionOfCompletes(vec![2, 6]));
        assert!(find_monomorphism(&j3, &w.complement(), None)
            .unwrap()
            .is_none());
        assert!(find_monomorphism(&k23, &k3, None).is_err());
    }

    #[test]
    fn monomorphism_respects_restriction() {
        let k5 = sg(StandardGraph::Complete(5));
        let k3 = sg(StandardGraph::Complete(3));
        let r: VertexSet = [1, 3, 4].iter().collect();
        let e = find_monomorphism(&k3, &k5, Some(r)).unwrap().unwrap();
        assert_eq!(e.image(), r);
        let r2: VertexSet = [1, 3].iter().collect();
        assert!(find_monomorphism(&k3, &k5, Some(r2)).unwrap().is_none());
        assert!(find_monomorphism(&k3, &k5, Some(VertexSet::singleton(7))).is_err());
    }

    #[test]
    fn jahangir_examples() {
        let k23 = sg(StandardGraph::CompleteBipartite(2, 3));
        let e = contains_jahangir(&k23, 2).unwrap().unwrap();
        assert_eq!(e.cycle.len(), 4);
        let k34 = sg(StandardGraph::CompleteBipartite(3, 4));
        assert!(contains_jahangir(&k34, 3).unwrap().is_some());
        let star = sg(StandardGraph::Star(7));
        assert!(contains_jahangir(&star, 2).unwrap().is_none());
        assert!(contains_jahangir(&k23, 3).is_err());
        assert!(contains_jahangir(&k23, 1).is_err());
        for m in 2..=5 {
            let h = sg(StandardGraph::CompleteBipartite(m, m + 1));
            let e = contains_jahangir(&h, m).unwrap().unwrap();
            let c = &e.cycle;
            for i in 0..2 * m {
                assert!(h.has_edge(c[i], c[(i + 1) % (2 * m)]));
            }
            for i in (0..2 * m).step_by(2) {
                assert!(h.has_edge(e.hub, c[i]));
            }
            assert_eq!(e.vertices().len(), 2 * m + 1);
            // K_{m-1, big} never holds J_{2m}.
            let h = sg(StandardGraph::CompleteBipartite(m - 1, 2 * m + 3));
            assert!(contains_jahangir(&h, m).unwrap().is_none());
        }
    }

    #[test]
    fn budget_cuts_search() {
        let g = Graph::empty(20).unwrap();
        let mut b = Budget::nodes(5);
        assert!(path_within(&g, g.vertices(), 2, &mut b).is_none());
        assert!(b.exhausted());
        let mut b = Budget::nodes(1_000);
        let k = sg(StandardGraph::Complete(20));
        assert!(path_within(&k, k.vertices(), 20, &mut b).is_some());
        assert!(!b.exhausted());
    }

    fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
        let edges = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .zip(bits)
            .filter(|(_, &b)| b)
            .map(|(e, _)| e);
        Graph::from_edges(n, edges).unwrap()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(300))]
        #[test]
        fn path_containment_is_monotone(n in 2usize..=12, bits in prop::collection::vec(any::<bool>(), 66)) {
            let g = graph_from_bits(n, &bits);
            let longest = longest_path(&g).unwrap().len();
            for len in 1..=n {
                let found = contains_path(&g, len).unwrap();
                prop_assert_eq!(found.is_some(), len <= longest);
                if let Some(e) = found {
                    let pattern = StandardGraph::Path(len).build().unwrap();
                    prop_assert!(validate_embedding(&pattern, &g, &e));
                }
            }
        }

        #[test]
        fn found_embeddings_validate(n in 5usize..=11, bits in prop::collection::vec(any::<bool>(), 55), k in 1usize..=3, len in 1usize..=4) {
            let g = graph_from_bits(n, &bits);
            if let Some(j) = contains_jahangir(&g, 2).unwrap() {
                let pattern = StandardGraph::Jahangir(2).build().unwrap();
                prop_assert!(validate_embedding(&pattern, &g, &j.to_embedding()));
            }
            if let Some(ps) = contains_disjoint_paths(&g, k, len).unwrap() {
                let pattern = StandardGraph::Path(len).build().unwrap();
                let mut used = VertexSet::EMPTY;
                for p in &ps {
                    prop_assert!(validate_embedding(&pattern, &g, p));
                    prop_assert!((p.image() & used).is_empty());
                    used |= p.image();
                }
            }
        }
    }
}
