//! Immutable simple graphs on at most 128 vertices.
//!
//! Every vertex owns one `u128` neighbor row, so set operations such as
//! `N_A(x)` are single word intersections.

use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, Not, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const MAX_ORDER: usize = 128;

/// A set of vertices `< 128`, one bit per vertex.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u128);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub const fn from_bits(bits: u128) -> Self {
        VertexSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u128 {
        self.0
    }

    /// `{0, 1, ..., n-1}`.
    #[inline]
    pub const fn full(n: usize) -> Self {
        if n >= 128 {
            VertexSet(u128::MAX)
        } else {
            VertexSet((1u128 << n) - 1)
        }
    }

    #[inline]
    pub const fn singleton(v: usize) -> Self {
        VertexSet(1u128 << v)
    }

    #[inline]
    pub const fn contains(self, v: usize) -> bool {
        v < 128 && (self.0 >> v) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u128 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u128 << v);
    }

    #[inline]
    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Smallest member.
    #[inline]
    pub const fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    #[inline]
    pub const fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Members `>= v`.
    #[inline]
    pub const fn at_least(self, v: usize) -> VertexSet {
        if v >= 128 {
            VertexSet(0)
        } else {
            VertexSet(self.0 & !((1u128 << v) - 1))
        }
    }

    /// The `count` smallest members (or all of them).
    pub fn take(self, count: usize) -> VertexSet {
        self.iter().take(count).collect()
    }

    #[inline]
    pub fn iter(self) -> Members {
        Members(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

/// Ascending iterator over a [`VertexSet`].
#[derive(Clone)]
pub struct Members(u128);

impl Iterator for Members {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Members {}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Members;

    fn into_iter(self) -> Members {
        self.iter()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl<'a> FromIterator<&'a usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = &'a usize>>(iter: I) -> Self {
        iter.into_iter().copied().collect()
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & rhs.0)
    }
}

impl BitAndAssign for VertexSet {
    fn bitand_assign(&mut self, rhs: VertexSet) {
        self.0 &= rhs.0;
    }
}

impl BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 | rhs.0)
    }
}

impl BitOrAssign for VertexSet {
    fn bitor_assign(&mut self, rhs: VertexSet) {
        self.0 |= rhs.0;
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & !rhs.0)
    }
}

impl Not for VertexSet {
    type Output = VertexSet;
    fn not(self) -> VertexSet {
        VertexSet(!self.0)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v: Vec<usize> = Vec::deserialize(d)?;
        if let Some(&bad) = v.iter().find(|&&x| x >= MAX_ORDER) {
            return Err(serde::de::Error::custom(format!("vertex {bad} >= 128")));
        }
        Ok(v.into_iter().collect())
    }
}

/// A simple undirected graph. Values are immutable; every transformation
/// returns a new graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    adj: Vec<u128>,
}

impl Graph {
    /// Edgeless graph on `order` vertices.
    pub fn empty(order: usize) -> Result<Graph> {
        if order == 0 || order > MAX_ORDER {
            return Err(Error::OrderOutOfRange(order));
        }
        Ok(Graph {
            order,
            adj: vec![0; order],
        })
    }

    pub fn from_edges<I>(order: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(order)?;
        for (u, v) in edges {
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            for x in [u, v] {
                if x >= order {
                    return Err(Error::VertexOutOfRange { vertex: x, order });
                }
            }
            g.adj[u] |= 1 << v;
            g.adj[v] |= 1 << u;
        }
        Ok(g)
    }

    /// Builds a graph from neighbor rows. Rows must already be symmetric,
    /// loop-free and confined to `0..rows.len()`.
    pub(crate) fn from_rows_unchecked(rows: Vec<u128>) -> Graph {
        debug_assert!(!rows.is_empty() && rows.len() <= MAX_ORDER);
        let g = Graph {
            order: rows.len(),
            adj: rows,
        };
        debug_assert!(g.check_invariants());
        g
    }

    /// Builds a graph from neighbor rows, validating every invariant.
    pub fn from_rows(rows: Vec<u128>) -> Result<Graph> {
        let order = rows.len();
        if order == 0 || order > MAX_ORDER {
            return Err(Error::OrderOutOfRange(order));
        }
        let g = Graph { order, adj: rows };
        if !g.check_invariants() {
            return Err(Error::Precondition(
                "adjacency rows must be symmetric, loop-free and within the order".into(),
            ));
        }
        Ok(g)
    }

    fn check_invariants(&self) -> bool {
        let full = VertexSet::full(self.order).bits();
        self.adj.iter().enumerate().all(|(u, &row)| {
            row & !full == 0
                && (row >> u) & 1 == 0
                && VertexSet(row).iter().all(|v| (self.adj[v] >> u) & 1 == 1)
        })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order)
    }

    #[inline]
    pub fn rows(&self) -> &[u128] {
        &self.adj
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order && v < self.order && (self.adj[u] >> v) & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges `(u, v)` with `u < v`, in row-major order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order).flat_map(move |u| {
            VertexSet(self.adj[u])
                .at_least(u + 1)
                .iter()
                .map(move |v| (u, v))
        })
    }

    /// `N_A(x)`: the neighbors of `x` inside `within`.
    pub fn neighbors_in(&self, x: usize, within: VertexSet) -> Result<VertexSet> {
        if x >= self.order {
            return Err(Error::VertexOutOfRange {
                vertex: x,
                order: self.order,
            });
        }
        Ok(VertexSet(self.adj[x]) & within)
    }

    pub fn complement(&self) -> Graph {
        let full = VertexSet::full(self.order).bits();
        let adj = self
            .adj
            .iter()
            .enumerate()
            .map(|(u, &row)| !row & full & !(1u128 << u))
            .collect();
        Graph {
            order: self.order,
            adj,
        }
    }

    /// `self` on labels `0..|self|`, `other` shifted after it, no cross edges.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let order = self.order + other.order;
        if order > MAX_ORDER {
            return Err(Error::OrderOutOfRange(order));
        }
        let shift = self.order;
        let adj = self
            .adj
            .iter()
            .copied()
            .chain(other.adj.iter().map(|&r| r << shift))
            .collect();
        Ok(Graph { order, adj })
    }

    /// Subgraph induced by `keep`, relabeled `0..|keep|` in ascending order.
    /// Returns the graph and the old label of each new vertex.
    pub fn induced(&self, keep: VertexSet) -> Result<(Graph, Vec<usize>)> {
        let keep = keep & self.vertices();
        let labels = keep.to_vec();
        if labels.is_empty() {
            return Err(Error::OrderOutOfRange(0));
        }
        let mut adj = vec![0u128; labels.len()];
        for (i, &u) in labels.iter().enumerate() {
            for (j, &v) in labels.iter().enumerate() {
                if self.has_edge(u, v) {
                    adj[i] |= 1 << j;
                }
            }
        }
        Ok((Graph::from_rows_unchecked(adj), labels))
    }

    /// Graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.order || perm.iter().collect::<VertexSet>() != self.vertices() {
            return Err(Error::Precondition(
                "relabeling must be a permutation of the vertices".into(),
            ));
        }
        Graph::from_edges(self.order, self.edges().map(|(u, v)| (perm[u], perm[v])))
    }

    /// Vertex sets of the connected components of `within`, ordered by smallest member.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut left = within & self.vertices();
        let mut out = Vec::new();
        while let Some(start) = left.first() {
            let comp = self.reach(start, left);
            left = left - comp;
            out.push(comp);
        }
        out
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    /// Vertices reachable from `start` using only vertices in `within`
    /// (`start` is always included).
    #[inline]
    pub fn reach(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = 1u128 << start;
        let mut frontier = seen;
        let within = within.bits() | seen;
        while frontier != 0 {
            let mut next = 0u128;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.adj[v];
            }
            next &= within & !seen;
            seen |= next;
            frontier = next;
        }
        VertexSet(seen)
    }

    /// `c(G)`: order of the largest connected component.
    pub fn largest_component_order(&self) -> usize {
        self.components().iter().map(|c| c.len()).max().unwrap_or(0)
    }

    pub fn is_connected(&self) -> bool {
        self.reach(0, self.vertices()) == self.vertices()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(order={}, edges=", self.order)?;
        f.debug_list().entries(self.edges()).finish()?;
        write!(f, ")")
    }
}

/// Largest order accepted by [`chromatic_number`].
pub const CHROMATIC_CEILING: usize = 16;

/// Exact chromatic number by backtracking over colorings with symmetry
/// breaking on fresh colors.
pub fn chromatic_number(g: &Graph) -> Result<usize> {
    let n = g.order();
    if n > CHROMATIC_CEILING {
        return Err(Error::CeilingExceeded {
            what: "chromatic_number",
            limit: CHROMATIC_CEILING,
            got: n,
        });
    }
    if g.edge_count() == 0 {
        return Ok(1);
    }
    // Highest degree first keeps conflicts early.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut colors = vec![usize::MAX; n];
    for k in 2..=n {
        if color_with(g, &order, 0, k, 0, &mut colors) {
            return Ok(k);
        }
    }
    Ok(n)
}

fn color_with(
    g: &Graph,
    order: &[usize],
    idx: usize,
    k: usize,
    used: usize,
    colors: &mut [usize],
) -> bool {
    if idx == order.len() {
        return true;
    }
    let v = order[idx];
    let limit = (used + 1).min(k);
    for c in 0..limit {
        if g.neighbors(v).iter().any(|u| colors[u] == c) {
            continue;
        }
        colors[v] = c;
        if color_with(g, order, idx + 1, k, used.max(c + 1), colors) {
            return true;
        }
    }
    colors[v] = usize::MAX;
    false
}

/// Standard graph families with fixed labeling conventions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StandardGraph {
    /// `n` isolated vertices.
    Empty(usize),
    /// `P_n`: `0 - 1 - ... - (n-1)`.
    Path(usize),
    /// `C_n`: `0 - 1 - ... - (n-1) - 0`.
    Cycle(usize),
    Complete(usize),
    /// `K_{a,b}`: parts `0..a` and `a..a+b`.
    CompleteBipartite(usize, usize),
    /// `K_{1,leaves}` with center 0.
    Star(usize),
    /// `W_m`: cycle on `0..m`, hub `m` adjacent to every cycle vertex.
    Wheel(usize),
    /// `J_{2m}`: cycle on `0..2m`, hub `2m` adjacent to the even cycle vertices.
    Jahangir(usize),
    /// Disjoint cliques of the given sizes, laid out consecutively.
    UnionOfCompletes(Vec<usize>),
}

impl StandardGraph {
    /// Parses a family name and its size parameters, e.g. `("jahangir", [3])`.
    pub fn from_parts(kind: &str, params: &[usize]) -> Result<StandardGraph> {
        let one = |family: &'static str| -> Result<usize> {
            match params {
                [x] => Ok(*x),
                _ => Err(Error::BadParameters {
                    family,
                    expected: "1",
                    got: params.len(),
                }),
            }
        };
        Ok(match kind {
            "empty" => StandardGraph::Empty(one("empty")?),
            "path" => StandardGraph::Path(one("path")?),
            "cycle" => StandardGraph::Cycle(one("cycle")?),
            "complete" => StandardGraph::Complete(one("complete")?),
            "star" => StandardGraph::Star(one("star")?),
            "wheel" => StandardGraph::Wheel(one("wheel")?),
            "jahangir" => StandardGraph::Jahangir(one("jahangir")?),
            "complete_bipartite" => match params {
                [a, b] => StandardGraph::CompleteBipartite(*a, *b),
                _ => {
                    return Err(Error::BadParameters {
                        family: "complete_bipartite",
                        expected: "2",
                        got: params.len(),
                    })
                }
            },
            "union_of_completes" => StandardGraph::UnionOfCompletes(params.to_vec()),
            other => {
                return Err(Error::Precondition(format!(
                    "unknown graph family `{other}`"
                )))
            }
        })
    }

    pub fn build(&self) -> Result<Graph> {
        fn at_least(family: &'static str, min: usize, got: usize) -> Result<()> {
            if got < min {
                Err(Error::BelowMinimum { family, min, got })
            } else {
                Ok(())
            }
        }
        match *self {
            StandardGraph::Empty(n) => {
                at_least("empty", 1, n)?;
                Graph::empty(n)
            }
            StandardGraph::Path(n) => {
                at_least("path", 1, n)?;
                Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
            }
            StandardGraph::Cycle(n) => {
                at_least("cycle", 3, n)?;
                Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
            }
            StandardGraph::Complete(n) => {
                at_least("complete", 1, n)?;
                Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
            }
            StandardGraph::CompleteBipartite(a, b) => {
                at_least("complete_bipartite", 1, a)?;
                at_least("complete_bipartite", 1, b)?;
                Graph::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
            }
            StandardGraph::Star(leaves) => {
                at_least("star", 1, leaves)?;
                Graph::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v)))
            }
            StandardGraph::Wheel(m) => {
                at_least("wheel", 3, m)?;
                let cycle = (0..m).map(|i| (i, (i + 1) % m));
                Graph::from_edges(m + 1, cycle.chain((0..m).map(|i| (i, m))))
            }
            StandardGraph::Jahangir(m) => {
                at_least("jahangir", 2, m)?;
                let c = 2 * m;
                let cycle = (0..c).map(|i| (i, (i + 1) % c));
                Graph::from_edges(c + 1, cycle.chain((0..c).step_by(2).map(|i| (i, c))))
            }
            StandardGraph::UnionOfCompletes(ref sizes) => {
                if sizes.is_empty() {
                    return Err(Error::BadParameters {
                        family: "union_of_completes",
                        expected: "at least 1",
                        got: 0,
                    });
                }
                let mut edges = Vec::new();
                let mut base = 0;
                for &s in sizes {
                    at_least("union_of_completes", 1, s)?;
                    for u in base..base + s {
                        for v in u + 1..base + s {
                            edges.push((u, v));
                        }
                    }
                    base += s;
                }
                Graph::from_edges(base, edges)
            }
        }
    }
}

/// Shorthand for [`StandardGraph::build`].
pub fn make_standard(kind: StandardGraph) -> Result<Graph> {
    kind.build()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        StandardGraph::Path(n).build().unwrap()
    }

    #[test]
    fn from_edges_examples() {
        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3, path(3));
        assert_eq!(p3.edge_count(), 2);

        let k1 = Graph::from_edges(1, []).unwrap();
        assert_eq!(k1.order(), 1);
        assert_eq!(k1.edge_count(), 0);

        assert!(matches!(
            Graph::from_edges(3, [(0, 0)]),
            Err(Error::LoopEdge(0))
        ));
        assert!(matches!(
            Graph::from_edges(3, [(0, 3)]),
            Err(Error::VertexOutOfRange {
                vertex: 3,
                order: 3
            })
        ));
        assert!(matches!(
            Graph::from_edges(0, []),
            Err(Error::OrderOutOfRange(0))
        ));
        assert!(matches!(
            Graph::from_edges(129, []),
            Err(Error::OrderOutOfRange(129))
        ));
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::from_edges(3, [(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn order_128_is_representable() {
        let g = StandardGraph::Path(128).build().unwrap();
        assert_eq!(g.edge_count(), 127);
        assert!(g.has_edge(126, 127));
        assert_eq!(g.complement().edge_count(), 128 * 127 / 2 - 127);
    }

    #[test]
    fn jahangir_shape() {
        let j2 = StandardGraph::Jahangir(2).build().unwrap();
        assert_eq!(j2.order(), 5);
        assert_eq!(j2.edge_count(), 6);
        // hub 4 sees 0 and 2; 1 and 3 see 0 and 2: K_{2,3} with parts {0,2}, {1,3,4}.
        for a in [0, 2] {
            for b in [1, 3, 4] {
                assert!(j2.has_edge(a, b));
            }
        }
        let j3 = StandardGraph::Jahangir(3).build().unwrap();
        assert_eq!((j3.order(), j3.edge_count()), (7, 9));
        assert_eq!(j3.neighbors(6).to_vec(), vec![0, 2, 4]);
        for m in 2..=10 {
            let j = StandardGraph::Jahangir(m).build().unwrap();
            assert_eq!(j.order(), 2 * m + 1);
            assert_eq!(j.edge_count(), 3 * m);
        }
        assert!(matches!(
            StandardGraph::Jahangir(1).build(),
            Err(Error::BelowMinimum {
                family: "jahangir",
                ..
            })
        ));
    }

    #[test]
    fn family_minimums() {
        assert!(StandardGraph::Cycle(2).build().is_err());
        assert!(StandardGraph::Wheel(2).build().is_err());
        assert!(StandardGraph::Path(0).build().is_err());
        assert!(StandardGraph::UnionOfCompletes(vec![]).build().is_err());
        assert!(StandardGraph::UnionOfCompletes(vec![2, 0]).build().is_err());
        let w = StandardGraph::Wheel(5).build().unwrap();
        assert_eq!(w.order(), 6);
        assert_eq!(w.degree(5), 5);
    }

    #[test]
    fn union_of_completes_layout() {
        let g = StandardGraph::UnionOfCompletes(vec![2, 6]).build().unwrap();
        assert_eq!(g.order(), 8);
        assert_eq!(g.edge_count(), 1 + 15);
        assert!(g.has_edge(0, 1));
        assert!(!g.has_edge(1, 2));
        assert_eq!(g.components().len(), 2);
    }

    #[test]
    fn complement_examples() {
        let k5 = StandardGraph::Complete(5).build().unwrap();
        assert_eq!(k5.complement(), Graph::empty(5).unwrap());
        let p4 = path(4);
        assert_eq!(p4.complement().complement(), p4);
        let g = StandardGraph::UnionOfCompletes(vec![1, 7]).build().unwrap();
        assert_eq!(g.complement(), StandardGraph::Star(7).build().unwrap());
    }

    #[test]
    fn disjoint_union_examples() {
        let k1 = StandardGraph::Complete(1).build().unwrap();
        let k7 = StandardGraph::Complete(7).build().unwrap();
        assert_eq!(
            k1.disjoint_union(&k7).unwrap(),
            StandardGraph::UnionOfCompletes(vec![1, 7]).build().unwrap()
        );
        let two_p4 = path(4).disjoint_union(&path(4)).unwrap();
        assert_eq!(two_p4.order(), 8);
        assert_eq!(
            two_p4.edges().collect::<Vec<_>>(),
            vec![(0, 1), (1, 2), (2, 3), (4, 5), (5, 6), (6, 7)]
        );
        // There is no order-0 operand to pass in the first place.
        assert!(Graph::empty(0).is_err());
        let big = Graph::empty(100).unwrap();
        assert!(matches!(
            big.disjoint_union(&big),
            Err(Error::OrderOutOfRange(200))
        ));
    }

    #[test]
    fn neighbors_in_examples() {
        let p4 = path(4);
        let a: VertexSet = [0, 2, 3].iter().collect();
        assert_eq!(p4.neighbors_in(1, a).unwrap().to_vec(), vec![0, 2]);
        let k5 = StandardGraph::Complete(5).build().unwrap();
        assert_eq!(
            k5.neighbors_in(0, [1, 2].iter().collect())
                .unwrap()
                .to_vec(),
            vec![1, 2]
        );
        let e5 = Graph::empty(5).unwrap();
        assert!(e5.neighbors_in(0, e5.vertices()).unwrap().is_empty());
        assert!(e5.neighbors_in(5, e5.vertices()).is_err());
    }

    #[test]
    fn largest_component_examples() {
        let g = StandardGraph::UnionOfCompletes(vec![2, 6]).build().unwrap();
        assert_eq!(g.largest_component_order(), 6);
        assert_eq!(
            StandardGraph::Jahangir(3)
                .build()
                .unwrap()
                .largest_component_order(),
            7
        );
        assert_eq!(Graph::empty(5).unwrap().largest_component_order(), 1);
    }

    #[test]
    fn chromatic_examples() {
        assert_eq!(chromatic_number(&path(7)).unwrap(), 2);
        assert_eq!(
            chromatic_number(&StandardGraph::Complete(4).build().unwrap()).unwrap(),
            4
        );
        assert_eq!(
            chromatic_number(&StandardGraph::Jahangir(3).build().unwrap()).unwrap(),
            2
        );
        assert_eq!(
            chromatic_number(&StandardGraph::Cycle(5).build().unwrap()).unwrap(),
            3
        );
        assert_eq!(
            chromatic_number(&StandardGraph::Wheel(5).build().unwrap()).unwrap(),
            4
        );
        assert_eq!(chromatic_number(&Graph::empty(3).unwrap()).unwrap(), 1);
        assert!(matches!(
            chromatic_number(&Graph::empty(17).unwrap()),
            Err(Error::CeilingExceeded {
                limit: 16,
                got: 17,
                ..
            })
        ));
        for a in 1..=5 {
            for b in 1..=5 {
                let g = StandardGraph::CompleteBipartite(a, b).build().unwrap();
                assert_eq!(chromatic_number(&g).unwrap(), 2);
            }
        }
    }

    #[test]
    fn induced_relabels_ascending() {
        let c5 = StandardGraph::Cycle(5).build().unwrap();
        let (h, labels) = c5.induced([0, 1, 2, 4].iter().collect()).unwrap();
        assert_eq!(labels, vec![0, 1, 2, 4]);
        assert_eq!(h.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 3), (1, 2)]);
    }
}
