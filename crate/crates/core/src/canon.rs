//! Canonical labeling for small graphs.
//!
//! Equitable partition refinement, individualization of the first
//! non-singleton cell, and a search over the resulting tree that keeps the
//! labeling whose upper-triangle adjacency string is smallest. Leaves that
//! reproduce the first or the best string yield automorphisms, which prune
//! sibling branches lying in an already explored orbit.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order accepted by [`canonical_form`].
pub const CANON_CEILING: usize = 12;

/// Internal hard limit of the 16-bit row representation.
pub(crate) const SMALL_MAX: usize = 16;

/// Relabeling-invariant form of a graph: its order plus the adjacency
/// string of the canonically relabeled graph, upper triangle read column by
/// column, first pair in the most significant position.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct CanonicalForm {
    order: u8,
    code: u128,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.order as usize
    }

    /// Order byte followed by the adjacency string, big endian.
    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(17);
        out.push(self.order);
        out.extend_from_slice(&self.code.to_be_bytes());
        out
    }

    /// The canonically labeled representative.
    pub fn to_graph(&self) -> Graph {
        let n = self.order as usize;
        let rows = decode_rows(n, self.code);
        Graph::from_rows_unchecked(rows[..n].iter().map(|&r| r as u128).collect())
    }

    pub(crate) fn from_code(order: usize, code: u128) -> CanonicalForm {
        CanonicalForm {
            order: order as u8,
            code,
        }
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    if g.order() > CANON_CEILING {
        return Err(Error::CeilingExceeded {
            what: "canonical_form",
            limit: CANON_CEILING,
            got: g.order(),
        });
    }
    let small = SmallGraph::from_graph(g);
    let lab = canonical_labeling(&small);
    Ok(CanonicalForm::from_code(small.n, lab.code))
}

/// Fixed-size adjacency rows for graphs of order `<= 16`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub(crate) struct SmallGraph {
    pub n: usize,
    pub rows: [u16; SMALL_MAX],
}

impl SmallGraph {
    pub fn from_graph(g: &Graph) -> SmallGraph {
        assert!(g.order() <= SMALL_MAX);
        let mut rows = [0u16; SMALL_MAX];
        for (r, &src) in rows.iter_mut().zip(g.rows()) {
            *r = src as u16;
        }
        SmallGraph { n: g.order(), rows }
    }

    pub fn to_graph(self) -> Graph {
        Graph::from_rows_unchecked(self.rows[..self.n].iter().map(|&r| r as u128).collect())
    }

    /// Relabel so that new vertex `i` is old vertex `lab[i]`.
    pub fn permuted(&self, lab: &[u8; SMALL_MAX]) -> SmallGraph {
        let mut pos = [0u8; SMALL_MAX];
        for i in 0..self.n {
            pos[lab[i] as usize] = i as u8;
        }
        let mut rows = [0u16; SMALL_MAX];
        for i in 0..self.n {
            let mut r = self.rows[lab[i] as usize];
            while r != 0 {
                let v = r.trailing_zeros() as usize;
                r &= r - 1;
                rows[i] |= 1 << pos[v];
            }
        }
        SmallGraph { n: self.n, rows }
    }
}

fn decode_rows(n: usize, code: u128) -> [u16; SMALL_MAX] {
    let mut rows = [0u16; SMALL_MAX];
    let bits = n * n.saturating_sub(1) / 2;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if (code >> (bits - 1 - k)) & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
            k += 1;
        }
    }
    rows
}

fn encode(g: &SmallGraph, lab: &[u8; SMALL_MAX]) -> u128 {
    let mut code = 0u128;
    for j in 1..g.n {
        let row = g.rows[lab[j] as usize];
        for &li in &lab[..j] {
            code = (code << 1) | ((row >> li) & 1) as u128;
        }
    }
    code
}

/// Ordered partition of the vertex set: `lab` lists vertices by position and
/// bit `p` of `starts` marks the first position of a cell.
#[derive(Clone, Copy)]
pub(crate) struct Partition {
    lab: [u8; SMALL_MAX],
    starts: u32,
    n: usize,
}

impl Partition {
    pub fn unit(n: usize) -> Partition {
        let mut lab = [0u8; SMALL_MAX];
        for (i, l) in lab.iter_mut().enumerate().take(n) {
            *l = i as u8;
        }
        Partition { lab, starts: 1, n }
    }

    #[inline]
    fn cell_end(&self, start: usize) -> usize {
        let rest = self.starts >> (start + 1);
        if rest == 0 {
            self.n
        } else {
            start + 1 + rest.trailing_zeros() as usize
        }
    }

    fn mask(&self, start: usize, end: usize) -> u16 {
        self.lab[start..end].iter().fold(0u16, |m, &v| m | 1 << v)
    }

    /// Vertices of the last cell.
    pub fn last_cell(&self) -> u16 {
        let start = 31 - self.starts.leading_zeros() as usize;
        self.mask(start, self.n)
    }

    /// Splits cells until every vertex of a cell has the same number of
    /// neighbors in every cell. Subcells are ordered by that count.
    pub fn refine(&mut self, g: &SmallGraph) {
        'outer: loop {
            let mut ws = 0;
            while ws < self.n {
                let we = self.cell_end(ws);
                let wmask = self.mask(ws, we);
                let mut split = false;
                let mut xs = 0;
                while xs < self.n {
                    let xe = self.cell_end(xs);
                    if xe - xs > 1 && self.split_cell(g, xs, xe, wmask) {
                        split = true;
                    }
                    xs = xe;
                }
                if split {
                    continue 'outer;
                }
                ws = we;
            }
            break;
        }
    }

    fn split_cell(&mut self, g: &SmallGraph, xs: usize, xe: usize, wmask: u16) -> bool {
        let mut keyed = [(0u8, 0u8); SMALL_MAX];
        let len = xe - xs;
        let mut distinct = false;
        for i in 0..len {
            let v = self.lab[xs + i];
            let c = (g.rows[v as usize] & wmask).count_ones() as u8;
            keyed[i] = (c, v);
            if c != keyed[0].0 {
                distinct = true;
            }
        }
        if !distinct {
            return false;
        }
        let keyed = &mut keyed[..len];
        keyed.sort_unstable();
        for i in 0..len {
            self.lab[xs + i] = keyed[i].1;
            if i > 0 && keyed[i].0 != keyed[i - 1].0 {
                self.starts |= 1 << (xs + i);
            }
        }
        true
    }

    fn first_nonsingleton(&self) -> Option<(usize, usize)> {
        let mut s = 0;
        while s < self.n {
            let e = self.cell_end(s);
            if e - s > 1 {
                return Some((s, e));
            }
            s = e;
        }
        None
    }

    /// Moves `v` (which lies in the cell starting at `start`) into its own
    /// cell at the front of that cell.
    fn individualize(&self, start: usize, v: u8) -> Partition {
        let mut p = *self;
        let pos = (start..self.n)
            .find(|&i| p.lab[i] == v)
            .expect("vertex in cell");
        p.lab.swap(start, pos);
        p.starts |= 1 << start;
        p.starts |= 1 << (start + 1);
        p
    }
}

/// Outcome of the canonical labeling search.
pub(crate) struct Labeling {
    /// Adjacency string of the canonical relabeling.
    pub code: u128,
    /// Canonical position `i` holds original vertex `lab[i]`.
    pub lab: [u8; SMALL_MAX],
    /// Automorphisms found during the search; they generate the full group.
    pub autos: Vec<[u8; SMALL_MAX]>,
}

impl Labeling {
    /// Smallest vertex of the automorphism orbit of every vertex.
    pub fn orbits(&self, n: usize) -> [u8; SMALL_MAX] {
        let mut rep = [0u8; SMALL_MAX];
        for (i, r) in rep.iter_mut().enumerate() {
            *r = i as u8;
        }
        fn find(rep: &mut [u8; SMALL_MAX], mut x: u8) -> u8 {
            while rep[x as usize] != x {
                rep[x as usize] = rep[rep[x as usize] as usize];
                x = rep[x as usize];
            }
            x
        }
        for a in &self.autos {
            for (v, &image) in a.iter().enumerate().take(n) {
                let (x, y) = (find(&mut rep, v as u8), find(&mut rep, image));
                if x != y {
                    let (lo, hi) = if x < y { (x, y) } else { (y, x) };
                    rep[hi as usize] = lo;
                }
            }
        }
        for v in 0..n {
            rep[v] = find(&mut rep, v as u8);
        }
        rep
    }
}

pub(crate) fn canonical_labeling(g: &SmallGraph) -> Labeling {
    let mut root = Partition::unit(g.n);
    root.refine(g);
    canonical_labeling_from(g, root)
}

/// Search starting from an already refined root partition.
pub(crate) fn canonical_labeling_from(g: &SmallGraph, root: Partition) -> Labeling {
    let mut search = Search {
        g,
        first: None,
        best_code: 0,
        best_lab: [0; SMALL_MAX],
        autos: Vec::new(),
        prefix: Vec::with_capacity(g.n),
    };
    search.visit(root);
    Labeling {
        code: search.best_code,
        lab: search.best_lab,
        autos: search.autos,
    }
}

struct Search<'a> {
    g: &'a SmallGraph,
    first: Option<(u128, [u8; SMALL_MAX])>,
    best_code: u128,
    best_lab: [u8; SMALL_MAX],
    autos: Vec<[u8; SMALL_MAX]>,
    prefix: Vec<u8>,
}

impl Search<'_> {
    fn visit(&mut self, mut part: Partition) {
        part.refine(self.g);
        let Some((start, end)) = part.first_nonsingleton() else {
            self.leaf(&part.lab);
            return;
        };
        let mut cell = part.mask(start, end);
        let mut explored = 0u16;
        while cell != 0 {
            let v = cell.trailing_zeros() as u8;
            cell &= cell - 1;
            if explored != 0 && self.orbit_under_stabilizer(v) & explored != 0 {
                continue;
            }
            self.prefix.push(v);
            self.visit(part.individualize(start, v));
            self.prefix.pop();
            explored |= 1 << v;
        }
    }

    fn leaf(&mut self, lab: &[u8; SMALL_MAX]) {
        let code = encode(self.g, lab);
        let n = self.g.n;
        let Some((first_code, first_lab)) = self.first else {
            self.first = Some((code, *lab));
            self.best_code = code;
            self.best_lab = *lab;
            return;
        };
        let reference = if code == first_code {
            Some(first_lab)
        } else if code == self.best_code {
            Some(self.best_lab)
        } else {
            None
        };
        if let Some(base) = reference {
            let mut auto = [0u8; SMALL_MAX];
            for (i, a) in auto.iter_mut().enumerate() {
                *a = i as u8;
            }
            for i in 0..n {
                auto[base[i] as usize] = lab[i];
            }
            self.autos.push(auto);
        } else if code < self.best_code {
            self.best_code = code;
            self.best_lab = *lab;
        }
    }

    /// Orbit of `v` under the known automorphisms that fix the current
    /// individualization prefix pointwise.
    fn orbit_under_stabilizer(&self, v: u8) -> u16 {
        let gens: Vec<&[u8; SMALL_MAX]> = self
            .autos
            .iter()
            .filter(|a| self.prefix.iter().all(|&p| a[p as usize] == p))
            .collect();
        let mut orbit = 1u16 << v;
        let mut frontier = orbit;
        while frontier != 0 {
            let x = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            for a in &gens {
                let y = 1u16 << a[x];
                if orbit & y == 0 {
                    orbit |= y;
                    frontier |= y;
                }
            }
        }
        orbit
    }
}
