//! Isomorph-free generation of all graphs of a given order by canonical
//! augmentation.
//!
//! Every node of the generation tree is a canonically labeled graph. A
//! child of a parent on `t` vertices adds vertex `t` with some neighborhood
//! and is kept only if the new vertex lies in the automorphism orbit of the
//! vertex that the canonical labeling puts last (the canonical deletion).
//! Isomorphic siblings are dropped by comparing canonical codes. The result
//! is exactly one representative per isomorphism class.
//!
//! Work is split at a fixed tree level: the nodes at that level are the
//! branches, handed out round-robin to shards. A [`Checkpoint`] counts the
//! finished branches of one shard.

use std::collections::{BTreeMap, HashSet};
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::canon::{canonical_labeling_from, Partition, SmallGraph, SMALL_MAX};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order accepted by the enumerator.
pub const ENUM_CEILING: usize = 10;

/// Format version written into every checkpoint.
pub const CHECKPOINT_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShardSpec {
    pub shard_index: usize,
    pub shard_total: usize,
    pub order: usize,
}

impl ShardSpec {
    pub fn new(shard_index: usize, shard_total: usize, order: usize) -> Result<ShardSpec> {
        if shard_total == 0 || shard_index >= shard_total {
            return Err(Error::Precondition(format!(
                "shard index {shard_index} must be below shard total {shard_total}"
            )));
        }
        check_order(order)?;
        Ok(ShardSpec {
            shard_index,
            shard_total,
            order,
        })
    }

    pub fn whole(order: usize) -> Result<ShardSpec> {
        ShardSpec::new(0, 1, order)
    }
}

/// Partial results a visitor accumulates while a shard runs.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tally {
    pub counts: BTreeMap<String, u64>,
    /// graph6 strings of notable graphs (counterexamples, falsifications).
    pub found: Vec<String>,
}

impl Tally {
    pub fn bump(&mut self, key: &str) {
        *self.counts.entry(key.to_string()).or_default() += 1;
    }

    pub fn get(&self, key: &str) -> u64 {
        self.counts.get(key).copied().unwrap_or(0)
    }

    pub fn merge(&mut self, other: &Tally) {
        for (k, v) in &other.counts {
            *self.counts.entry(k.clone()).or_default() += v;
        }
        self.found.extend(other.found.iter().cloned());
    }
}

/// Resumable position of one shard.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Checkpoint {
    pub version: u32,
    pub order: usize,
    pub shard: ShardSpec,
    /// Number of this shard's branches already finished.
    pub cursor: usize,
    /// Classes visited so far.
    pub processed: u64,
    pub complete: bool,
    pub tallies: Tally,
}

impl Checkpoint {
    pub fn fresh(shard: ShardSpec) -> Checkpoint {
        Checkpoint {
            version: CHECKPOINT_VERSION,
            order: shard.order,
            shard,
            cursor: 0,
            processed: 0,
            complete: false,
            tallies: Tally::default(),
        }
    }

    /// Rejects checkpoints written by another format version or for
    /// another order.
    pub fn validate(&self, order: usize) -> Result<()> {
        if self.version != CHECKPOINT_VERSION {
            return Err(Error::Checkpoint(format!(
                "version {} does not match {}",
                self.version, CHECKPOINT_VERSION
            )));
        }
        if self.order != order || self.shard.order != order {
            return Err(Error::Checkpoint(format!(
                "checkpoint is for order {}, run is for order {order}",
                self.order
            )));
        }
        if self.shard.shard_total == 0 || self.shard.shard_index >= self.shard.shard_total {
            return Err(Error::Checkpoint("invalid shard layout".into()));
        }
        Ok(())
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        save_json(path, self)
    }

    pub fn load(path: &Path, order: usize) -> Result<Checkpoint> {
        let cp: Checkpoint = serde_json::from_str(&fs::read_to_string(path)?)?;
        cp.validate(order)?;
        Ok(cp)
    }
}

/// Writes through a temporary file so an interrupted save never leaves a
/// truncated document behind.
pub(crate) fn save_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let tmp = path.with_extension("tmp");
    fs::write(&tmp, serde_json::to_string_pretty(value)?)?;
    fs::rename(&tmp, path)?;
    Ok(())
}

fn check_order(order: usize) -> Result<()> {
    if order == 0 {
        return Err(Error::OrderOutOfRange(0));
    }
    if order > ENUM_CEILING {
        return Err(Error::CeilingExceeded {
            what: "graph enumeration",
            limit: ENUM_CEILING,
            got: order,
        });
    }
    Ok(())
}

/// Tree level whose nodes are the shardable branches.
pub fn split_level(order: usize) -> usize {
    order.saturating_sub(3).max(1)
}

fn root() -> SmallGraph {
    SmallGraph {
        n: 1,
        rows: [0; SMALL_MAX],
    }
}

/// Canonical children of a canonically labeled parent, in order of the new
/// vertex's neighborhood bitmask.
fn children(parent: &SmallGraph) -> Vec<SmallGraph> {
    let t = parent.n;
    let n = t + 1;
    let new_bit = 1u16 << t;
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for nbhd in 0u16..(1 << t) {
        let mut g = *parent;
        g.n = n;
        g.rows[t] = nbhd;
        let mut rest = nbhd;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            g.rows[v] |= new_bit;
        }
        // The canonical labeling keeps the root cell order, so the vertex it
        // puts last sits in the last cell of the refined unit partition.
        let mut part = Partition::unit(n);
        part.refine(&g);
        if part.last_cell() & new_bit == 0 {
            continue;
        }
        let lab = canonical_labeling_from(&g, part);
        let last = lab.lab[n - 1] as usize;
        if last != t {
            let orbits = lab.orbits(n);
            if orbits[t] != orbits[last] {
                continue;
            }
        }
        if seen.insert(lab.code) {
            out.push(g.permuted(&lab.lab));
        }
    }
    out
}

/// All nodes of the given level, in generation order.
fn level_nodes(level: usize) -> Vec<SmallGraph> {
    let mut nodes = vec![root()];
    for _ in 1..level {
        nodes = nodes.iter().flat_map(children).collect();
    }
    nodes
}

fn descend<F: FnMut(&SmallGraph)>(node: &SmallGraph, order: usize, visit: &mut F) -> u64 {
    if node.n == order {
        visit(node);
        return 1;
    }
    children(node)
        .iter()
        .map(|c| descend(c, order, visit))
        .sum()
}

/// Advances `checkpoint` branch by branch, calling `visit` on every class.
/// Stops once the shard is complete or, if `stop_after` is given, at the
/// first branch boundary where at least that many classes were processed
/// during this call.
pub fn run_shard<F>(
    checkpoint: &mut Checkpoint,
    stop_after: Option<u64>,
    mut visit: F,
) -> Result<()>
where
    F: FnMut(&Graph, &mut Tally),
{
    let order = checkpoint.order;
    check_order(order)?;
    checkpoint.validate(order)?;
    if checkpoint.complete {
        return Ok(());
    }
    let shard = checkpoint.shard;
    let branches = level_nodes(split_level(order));
    let mine: Vec<&SmallGraph> = branches
        .iter()
        .enumerate()
        .filter(|(i, _)| i % shard.shard_total == shard.shard_index)
        .map(|(_, b)| b)
        .collect();
    if checkpoint.cursor > mine.len() {
        return Err(Error::Checkpoint(format!(
            "cursor {} beyond the shard's {} branches",
            checkpoint.cursor,
            mine.len()
        )));
    }
    let mut this_call = 0u64;
    while checkpoint.cursor < mine.len() {
        if stop_after.is_some_and(|limit| this_call >= limit) {
            return Ok(());
        }
        let tallies = &mut checkpoint.tallies;
        let visited = descend(mine[checkpoint.cursor], order, &mut |g: &SmallGraph| {
            visit(&g.to_graph(), tallies);
        });
        checkpoint.processed += visited;
        this_call += visited;
        checkpoint.cursor += 1;
    }
    checkpoint.complete = true;
    Ok(())
}

/// Visits one representative of every isomorphism class of graphs of the
/// given order (restricted to one shard if given). Returns the number of
/// classes visited.
///
/// Graphs handed to `visitor` are canonically labeled.
pub fn enumerate_graphs<F>(order: usize, shard: Option<ShardSpec>, mut visitor: F) -> Result<u64>
where
    F: FnMut(&Graph),
{
    check_order(order)?;
    let shard = match shard {
        Some(s) if s.order != order => {
            return Err(Error::Precondition(format!(
                "shard is for order {}, enumeration is for order {order}",
                s.order
            )))
        }
        Some(s) => s,
        None => ShardSpec::whole(order)?,
    };
    let mut cp = Checkpoint::fresh(shard);
    run_shard(&mut cp, None, |g, _| visitor(g))?;
    Ok(cp.processed)
}

pub fn count_graphs(order: usize) -> Result<u64> {
    enumerate_graphs(order, None, |_| {})
}

/// Checkpoints of every shard of one run, stored as a single document.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckpointSet {
    pub version: u32,
    /// What the run computes, e.g. `verify k=1 n=4 m=2`; resuming under a
    /// different label is rejected.
    pub label: String,
    pub order: usize,
    pub shard_total: usize,
    pub shards: Vec<Checkpoint>,
}

impl CheckpointSet {
    pub fn fresh(label: &str, order: usize, shard_total: usize) -> Result<CheckpointSet> {
        let shards = (0..shard_total)
            .map(|i| ShardSpec::new(i, shard_total, order).map(Checkpoint::fresh))
            .collect::<Result<_>>()?;
        Ok(CheckpointSet {
            version: CHECKPOINT_VERSION,
            label: label.to_string(),
            order,
            shard_total,
            shards,
        })
    }

    pub fn validate(&self, label: &str, order: usize, shard_total: usize) -> Result<()> {
        if self.version != CHECKPOINT_VERSION {
            return Err(Error::Checkpoint(format!(
                "version {} does not match {}",
                self.version, CHECKPOINT_VERSION
            )));
        }
        if self.label != label {
            return Err(Error::Checkpoint(format!(
                "checkpoint belongs to `{}`, not `{label}`",
                self.label
            )));
        }
        if self.order != order {
            return Err(Error::Checkpoint(format!(
                "checkpoint is for order {}, run is for order {order}",
                self.order
            )));
        }
        if self.shard_total != shard_total || self.shards.len() != shard_total {
            return Err(Error::Checkpoint(format!(
                "checkpoint has {} shards, run uses {shard_total}",
                self.shard_total
            )));
        }
        for (i, cp) in self.shards.iter().enumerate() {
            cp.validate(order)?;
            if cp.shard.shard_index != i || cp.shard.shard_total != shard_total {
                return Err(Error::Checkpoint(format!(
                    "shard entry {i} is out of place"
                )));
            }
        }
        Ok(())
    }

    pub fn load(path: &Path) -> Result<CheckpointSet> {
        Ok(serde_json::from_str(&fs::read_to_string(path)?)?)
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        save_json(path, self)
    }

    pub fn complete(&self) -> bool {
        self.shards.iter().all(|c| c.complete)
    }

    pub fn processed(&self) -> u64 {
        self.shards.iter().map(|c| c.processed).sum()
    }

    /// Tallies of all shards merged in shard order.
    pub fn merged_tallies(&self) -> Tally {
        let mut t = Tally::default();
        for cp in &self.shards {
            t.merge(&cp.tallies);
        }
        t
    }
}

/// How a multi-shard run is driven.
#[derive(Clone, Debug, Default)]
pub struct RunOptions {
    /// Where to persist progress; an existing file there is resumed.
    pub checkpoint: Option<std::path::PathBuf>,
    /// Per shard: stop at the first branch boundary after this many classes.
    pub stop_after: Option<u64>,
    /// Classes between checkpoint saves (per shard). Zero means 20 000.
    pub save_every: u64,
}

/// Runs every shard of `set` on its own thread and returns the updated set.
/// Shards are independent; the merged view is ordered by shard index.
pub fn run_sharded<F>(mut set: CheckpointSet, opts: &RunOptions, visit: F) -> Result<CheckpointSet>
where
    F: Fn(&Graph, &mut Tally) + Sync,
{
    let save_every = if opts.save_every == 0 {
        20_000
    } else {
        opts.save_every
    };
    let shared = std::sync::Mutex::new(set.clone());
    let results: Vec<Result<Checkpoint>> = std::thread::scope(|scope| {
        let handles: Vec<_> = std::mem::take(&mut set.shards)
            .into_iter()
            .map(|mut cp| {
                let shared = &shared;
                let visit = &visit;
                scope.spawn(move || -> Result<Checkpoint> {
                    let mut budget = opts.stop_after;
                    while !cp.complete {
                        let chunk = match budget {
                            Some(0) => break,
                            Some(b) => b.min(save_every),
                            None => save_every,
                        };
                        let before = cp.processed;
                        run_shard(&mut cp, Some(chunk), visit)?;
                        if let Some(b) = budget.as_mut() {
                            *b = b.saturating_sub(cp.processed - before);
                        }
                        if let Some(path) = &opts.checkpoint {
                            let mut all = shared.lock().expect("checkpoint lock");
                            let idx = cp.shard.shard_index;
                            all.shards[idx] = cp.clone();
                            all.save(path)?;
                        }
                    }
                    Ok(cp)
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("shard worker panicked"))
            .collect()
    });
    set.shards = results.into_iter().collect::<Result<_>>()?;
    if let Some(path) = &opts.checkpoint {
        set.save(path)?;
    }
    Ok(set)
}

/// Starts from the checkpoint file in `opts` if it exists, else fresh.
pub fn resume_or_fresh(
    label: &str,
    order: usize,
    shard_total: usize,
    opts: &RunOptions,
) -> Result<CheckpointSet> {
    check_order(order)?;
    match &opts.checkpoint {
        Some(path) if path.exists() => {
            let set = CheckpointSet::load(path)?;
            set.validate(label, order, shard_total)?;
            Ok(set)
        }
        _ => CheckpointSet::fresh(label, order, shard_total),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_form;

    #[test]
    fn small_counts() {
        assert_eq!(count_graphs(1).unwrap(), 1);
        assert_eq!(count_graphs(2).unwrap(), 2);
        assert_eq!(count_graphs(3).unwrap(), 4);
        assert_eq!(count_graphs(4).unwrap(), 11);
        assert_eq!(count_graphs(5).unwrap(), 34);
    }

    #[test]
    fn ceiling() {
        assert!(matches!(
            count_graphs(11),
            Err(Error::CeilingExceeded { limit: 10, .. })
        ));
        assert!(count_graphs(0).is_err());
    }

    #[test]
    fn visited_graphs_are_canonical_and_distinct() {
        for order in 1..=6 {
            let mut forms = HashSet::new();
            enumerate_graphs(order, None, |g| {
                let cf = canonical_form(g).unwrap();
                assert_eq!(&cf.to_graph(), g, "visited graphs are canonically labeled");
                assert!(forms.insert(cf));
            })
            .unwrap();
        }
    }

    #[test]
    fn checkpoint_rejects_mismatch() {
        let cp = Checkpoint::fresh(ShardSpec::whole(5).unwrap());
        assert!(cp.validate(6).is_err());
        let mut old = cp.clone();
        old.version = 0;
        assert!(old.validate(5).is_err());
        assert!(cp.validate(5).is_ok());
    }

    #[test]
    fn stop_and_resume() {
        let mut cp = Checkpoint::fresh(ShardSpec::whole(6).unwrap());
        let mut seen = Vec::new();
        run_shard(&mut cp, Some(40), |g, t| {
            seen.push(g.clone());
            t.bump("visited");
        })
        .unwrap();
        assert!(!cp.complete);
        assert!(cp.processed >= 40 && cp.processed < 156);
        assert_eq!(cp.tallies.get("visited"), cp.processed);
        run_shard(&mut cp, None, |g, t| {
            seen.push(g.clone());
            t.bump("visited");
        })
        .unwrap();
        assert!(cp.complete);
        assert_eq!(cp.processed, 156);
        assert_eq!(seen.len(), 156);
        assert_eq!(cp.tallies.get("visited"), 156);
    }

    #[test]
    fn shard_spec_validation() {
        assert!(ShardSpec::new(2, 2, 5).is_err());
        assert!(ShardSpec::new(0, 0, 5).is_err());
        assert!(ShardSpec::new(0, 1, 11).is_err());
        let s = ShardSpec::new(1, 2, 5).unwrap();
        assert!(enumerate_graphs(6, Some(s), |_| {}).is_err());
    }
}
