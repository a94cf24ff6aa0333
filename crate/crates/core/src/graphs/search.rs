//! Breadth-first searches over [`Space`]s.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use super::state::{check_disks, Component, Kind, Level, Located, Space, StateCode};
use crate::error::{Error, Result};
use crate::words::{Config, CoupledConfig};

/// Distance entry for states not reached from the source.
pub const UNREACHED: u16 = u16::MAX;

/// Largest dense array (in entries) a search may allocate.
pub const DEFAULT_STATE_BUDGET: u64 = 1 << 27;

/// Largest `vertices²` an all-pairs sweep may take on.
pub const DEFAULT_SWEEP_BUDGET: u64 = 1 << 31;

pub fn check_budget(needed: u64, budget: u64) -> Result<()> {
    if needed > budget {
        return Err(Error::CapacityExceeded { needed, budget });
    }
    Ok(())
}

/// Hop counts from one source over the source's connected component.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DistanceField {
    pub kind: Kind,
    pub n: usize,
    pub source: StateCode,
    /// Indexed by dense (component-local for coupled states) index, which
    /// enumerates states in increasing packed order.
    pub dist: Vec<u16>,
}

impl DistanceField {
    pub fn get(&self, state: StateCode) -> Option<u16> {
        let idx = match self.kind {
            Kind::Single => state.0,
            Kind::Coupled => self.component().index_of_code(state)?,
        };
        self.dist.get(idx as usize).copied().filter(|&d| d != UNREACHED)
    }

    /// For coupled fields: the component holding the source.
    pub fn component(&self) -> Component {
        match Located::find(self.source, Kind::Coupled, self.n) {
            Ok(Located::Coupled(c, _)) => c,
            _ => panic!("distance field is not coupled"),
        }
    }

    pub fn code_at(&self, idx: u64) -> StateCode {
        match self.kind {
            Kind::Single => StateCode(idx),
            Kind::Coupled => self.component().code(idx),
        }
    }

    pub fn eccentricity(&self) -> u16 {
        self.dist.iter().copied().filter(|&d| d != UNREACHED).max().unwrap_or(0)
    }

    pub fn reached(&self) -> usize {
        self.dist.iter().filter(|&&d| d != UNREACHED).count()
    }
}

/// Plain BFS over dense indices. Loops are never relaxed.
pub fn bfs_space(space: &dyn Space, source: u64) -> Vec<u16> {
    let size = space.size() as usize;
    let mut dist = vec![UNREACHED; size];
    let mut queue: Vec<u32> = Vec::with_capacity(size.min(1 << 20));
    dist[source as usize] = 0;
    queue.push(source as u32);
    let mut head = 0;
    while head < queue.len() {
        let u = queue[head] as u64;
        head += 1;
        let next = dist[u as usize] + 1;
        for v in space.neighbors(u) {
            if v != u && dist[v as usize] == UNREACHED {
                dist[v as usize] = next;
                queue.push(v as u32);
            }
        }
    }
    dist
}

pub fn bfs(source: StateCode, kind: Kind, n: usize) -> Result<DistanceField> {
    bfs_with_budget(source, kind, n, DEFAULT_STATE_BUDGET)
}

pub fn bfs_with_budget(source: StateCode, kind: Kind, n: usize, budget: u64) -> Result<DistanceField> {
    let located = Located::find(source, kind, n)?;
    let space = located.space();
    check_budget(space.size(), budget.min(u32::MAX as u64))?;
    Ok(DistanceField { kind, n, source, dist: bfs_space(space, located.index()) })
}

trait DistStore {
    fn get(&self, idx: u64) -> Option<u16>;
    fn set(&mut self, idx: u64, d: u16);
}

struct Dense(Vec<u16>);

impl DistStore for Dense {
    fn get(&self, idx: u64) -> Option<u16> {
        Some(self.0[idx as usize]).filter(|&d| d != UNREACHED)
    }

    fn set(&mut self, idx: u64, d: u16) {
        self.0[idx as usize] = d;
    }
}

impl DistStore for HashMap<u64, u16> {
    fn get(&self, idx: u64) -> Option<u16> {
        HashMap::get(self, &idx).copied()
    }

    fn set(&mut self, idx: u64, d: u16) {
        self.insert(idx, d);
    }
}

/// Expands whole layers from whichever side has the smaller frontier. The
/// first layer that touches the other side's visited set yields the
/// distance (minimized over that layer).
fn bidirectional<S: DistStore>(space: &dyn Space, from: u64, to: u64, mut near: S, mut far: S) -> Option<u32> {
    if from == to {
        return Some(0);
    }
    near.set(from, 0);
    far.set(to, 0);
    let (mut front_near, mut front_far) = (vec![from], vec![to]);
    let (mut depth_near, mut depth_far) = (0u16, 0u16);
    loop {
        if front_near.is_empty() || front_far.is_empty() {
            return None;
        }
        let expand_near = front_near.len() <= front_far.len();
        let (front, mine, other, depth) = if expand_near {
            (&mut front_near, &mut near, &far, &mut depth_near)
        } else {
            (&mut front_far, &mut far, &near, &mut depth_far)
        };
        let mut best: Option<u32> = None;
        let mut next = Vec::new();
        for &u in front.iter() {
            for v in space.neighbors(u) {
                if v == u || mine.get(v).is_some() {
                    continue;
                }
                if let Some(d) = other.get(v) {
                    let total = *depth as u32 + 1 + d as u32;
                    best = Some(best.map_or(total, |b| b.min(total)));
                }
                mine.set(v, *depth + 1);
                next.push(v);
            }
        }
        if best.is_some() {
            return best;
        }
        *front = next;
        *depth += 1;
    }
}

/// Exact graph distance between two states of the same kind and size.
///
/// Coupled states must share their common-prefix length; states in
/// different components are [`Error::Incompatible`].
pub fn distance(from: StateCode, to: StateCode, kind: Kind, n: usize) -> Result<u32> {
    let a = Located::find(from, kind, n)?;
    let b = Located::find(to, kind, n)?;
    if let (Some(i), Some(j)) = (a.prefix_len(), b.prefix_len()) {
        if i != j {
            return Err(Error::Incompatible { from: i, to: j });
        }
    }
    let space = a.space();
    let found = if space.size() <= DEFAULT_STATE_BUDGET {
        let size = space.size() as usize;
        bidirectional(space, a.index(), b.index(), Dense(vec![UNREACHED; size]), Dense(vec![UNREACHED; size]))
    } else {
        bidirectional(space, a.index(), b.index(), HashMap::new(), HashMap::new())
    };
    found.ok_or_else(|| Error::Internal("search exhausted without meeting".into()))
}

pub fn distance_single(u: &Config, v: &Config) -> Result<u32> {
    if u.len() != v.len() {
        return Err(Error::SizeMismatch(u.len(), v.len()));
    }
    distance(StateCode::single(u), StateCode::single(v), Kind::Single, u.len())
}

pub fn distance_coupled(u: &CoupledConfig, v: &CoupledConfig) -> Result<u32> {
    if u.len() != v.len() {
        return Err(Error::SizeMismatch(u.len(), v.len()));
    }
    distance(StateCode::coupled(u), StateCode::coupled(v), Kind::Coupled, u.len())
}

/// Number of shortest paths from `source` to `target` (saturating).
pub fn count_geodesics(source: StateCode, target: StateCode, kind: Kind, n: usize) -> Result<u64> {
    let a = Located::find(source, kind, n)?;
    let b = Located::find(target, kind, n)?;
    if a.prefix_len() != b.prefix_len() {
        return Ok(0);
    }
    let space = a.space();
    check_budget(space.size(), DEFAULT_STATE_BUDGET)?;
    let dist = bfs_space(space, a.index());
    let mut order: Vec<u64> = (0..space.size()).filter(|&i| dist[i as usize] != UNREACHED).collect();
    order.sort_by_key(|&i| dist[i as usize]);
    let mut count = vec![0u64; space.size() as usize];
    count[a.index() as usize] = 1;
    for u in order {
        let c = count[u as usize];
        for v in space.neighbors(u) {
            if dist[v as usize] == dist[u as usize].wrapping_add(1) {
                count[v as usize] = count[v as usize].saturating_add(c);
            }
        }
    }
    Ok(count[b.index() as usize])
}

/// Explicit neighbor table, used when one graph is searched from many sources.
pub struct Adjacency {
    nbrs: Vec<[u32; 3]>,
}

impl Adjacency {
    pub fn build(space: &dyn Space) -> Adjacency {
        let nbrs = (0..space.size()).map(|i| space.neighbors(i).map(|v| v as u32)).collect();
        Adjacency { nbrs }
    }

    pub fn len(&self) -> usize {
        self.nbrs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nbrs.is_empty()
    }

    /// Eccentricity of `source`; `None` if some vertex is unreachable.
    fn eccentricity(&self, source: u32, dist: &mut [u16], queue: &mut Vec<u32>) -> Option<u16> {
        dist.fill(UNREACHED);
        queue.clear();
        dist[source as usize] = 0;
        queue.push(source);
        let mut head = 0;
        while head < queue.len() {
            let u = queue[head];
            head += 1;
            let next = dist[u as usize] + 1;
            for &v in &self.nbrs[u as usize] {
                if dist[v as usize] == UNREACHED {
                    dist[v as usize] = next;
                    queue.push(v);
                }
            }
        }
        (queue.len() == self.nbrs.len()).then(|| dist[*queue.last().unwrap() as usize])
    }

    /// Maximum eccentricity over all sources; `None` if disconnected.
    pub fn diameter(&self) -> Option<u32> {
        let size = self.nbrs.len();
        (0..size as u32)
            .into_par_iter()
            .map_init(|| (vec![UNREACHED; size], Vec::with_capacity(size)), |(dist, queue), s| self.eccentricity(s, dist, queue))
            .try_reduce(|| 0u16, |a, b| Some(a.max(b)))
            .map(u32::from)
    }
}

/// The graph a diameter is asked of.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    /// `Γ_n`.
    Hanoi(usize),
    /// `CΓ_{n,i}`.
    Coupled { n: usize, prefix_len: usize },
}

impl Target {
    pub fn space(self) -> Result<Box<dyn Space>> {
        match self {
            Target::Hanoi(n) => {
                check_disks(Kind::Single, n)?;
                Ok(Box::new(Level::new(n)))
            }
            Target::Coupled { n, prefix_len } => {
                check_disks(Kind::Coupled, n)?;
                if prefix_len > n {
                    return Err(Error::InvalidArgument(format!("prefix length {prefix_len} exceeds {n} disks")));
                }
                Ok(Box::new(Component::new(n, prefix_len)))
            }
        }
    }
}

/// Exact diameter by an all-pairs eccentricity sweep.
pub fn diameter(target: Target) -> Result<u32> {
    let space = target.space()?;
    let size = space.size();
    check_budget(size.saturating_mul(size), DEFAULT_SWEEP_BUDGET)?;
    Adjacency::build(space.as_ref()).diameter().ok_or_else(|| Error::Internal(format!("{target:?} is disconnected")))
}
