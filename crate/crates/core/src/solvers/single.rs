//! Paths between arbitrary configurations of one tower.

use crate::error::{Error, Result};
use crate::graphs::search::{bfs_space, UNREACHED};
use crate::graphs::state::{Kind, Located, Space, StateCode};
use crate::graphs::Level;
use crate::words::{Config, Move, MoveSeq, Peg};

/// Largest disk count solved by exhaustive search in [`Backend::Auto`].
pub const BFS_MAX_DISKS: usize = 14;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Backend {
    /// Search for `n ≤ BFS_MAX_DISKS`, recursion beyond.
    #[default]
    Auto,
    Bfs,
    Constructive,
}

/// Shortest move sequence between two states, ties broken by `a < b < c`.
pub fn geodesic(from: StateCode, to: StateCode, kind: Kind, n: usize) -> Result<MoveSeq> {
    let start = Located::find(from, kind, n)?;
    let goal = Located::find(to, kind, n)?;
    if start.prefix_len() != goal.prefix_len() {
        return Err(Error::Incompatible { from: start.prefix_len().unwrap_or(0), to: goal.prefix_len().unwrap_or(0) });
    }
    let space = goal.space();
    crate::graphs::search::check_budget(space.size(), crate::graphs::search::DEFAULT_STATE_BUDGET)?;
    let dist = bfs_space(space, goal.index());
    Ok(descend(space, &dist, start.index()))
}

fn descend(space: &dyn Space, dist: &[u16], mut at: u64) -> MoveSeq {
    debug_assert_ne!(dist[at as usize], UNREACHED);
    let mut out = MoveSeq::new();
    while dist[at as usize] > 0 {
        let d = dist[at as usize];
        let (m, next) =
            Move::ALL.into_iter().zip(space.neighbors(at)).find(|&(_, v)| dist[v as usize] == d - 1).expect("a neighbor one step closer");
        out.push(m);
        at = next;
    }
    out
}

/// A path from `u` to `v` of length at most `2^n − 1` with no loop edges.
pub fn transform_single(u: &Config, v: &Config) -> Result<MoveSeq> {
    transform_single_with(u, v, Backend::Auto)
}

pub fn transform_single_with(u: &Config, v: &Config, backend: Backend) -> Result<MoveSeq> {
    if u.len() != v.len() {
        return Err(Error::SizeMismatch(u.len(), v.len()));
    }
    let use_bfs = match backend {
        Backend::Auto => u.len() <= BFS_MAX_DISKS,
        Backend::Bfs => true,
        Backend::Constructive => false,
    };
    if use_bfs {
        let level = Level::new(u.len());
        let dist = bfs_space(&level, level.pack(v));
        return Ok(descend(&level, &dist, level.pack(u)));
    }
    let mut out = Vec::new();
    constructive(u.letters(), v.letters(), &mut out);
    Ok(MoveSeq::from_applied(out))
}

/// Gathers the smaller disks on the spare peg, moves the largest misplaced
/// disk, then scatters.
fn constructive(u: &[Peg], v: &[Peg], out: &mut Vec<Move>) {
    let Some(k) = (0..u.len()).rev().find(|&k| u[k] != v[k]) else {
        return;
    };
    let spare = vec![u[k].third(v[k]); k];
    constructive(&u[..k], &spare, out);
    out.push(Move::between(u[k], v[k]));
    constructive(&spare, &v[..k], out);
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(s: &str) -> Config {
        s.parse().unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(transform_single(&cfg("000"), &cfg("222")).unwrap().len(), 7);
        assert!(transform_single(&cfg("0121"), &cfg("0121")).unwrap().is_empty());
        assert_eq!(transform_single(&cfg("20"), &cfg("01")).unwrap().to_string(), "ba");
    }

    #[test]
    fn backends_reach_target_within_bound() {
        let level = Level::new(4);
        for a in (0..level.size()).step_by(5) {
            for b in (0..level.size()).step_by(7) {
                let (u, v) = (level.unpack(a), level.unpack(b));
                for backend in [Backend::Bfs, Backend::Constructive] {
                    let s = transform_single_with(&u, &v, backend).unwrap();
                    assert_eq!(u.apply_seq(&s), v);
                    assert!(s.len() <= 15);
                    let mut x = u.clone();
                    for &m in s.moves() {
                        let y = x.apply(m);
                        assert_ne!(x, y, "loop in {backend:?} path");
                        x = y;
                    }
                }
            }
        }
        let big = transform_single(&Config::corner(Peg::ZERO, 16), &Config::corner(Peg::ONE, 16)).unwrap();
        assert_eq!(big.len(), (1 << 16) - 1);
    }
}
