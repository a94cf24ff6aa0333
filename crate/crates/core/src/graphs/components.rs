//! Connected components of the coupled graph, found by flood fill over all `9^n` states.

use serde::Serialize;

use super::search::{check_budget, diameter, Target, DEFAULT_STATE_BUDGET, DEFAULT_SWEEP_BUDGET};
use super::state::{check_disks, component_size, interleave, split, Kind, Level};
use crate::error::{Error, Result};
use crate::words::Move;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentEntry {
    /// Common-prefix length shared by every state of these components.
    pub prefix_len: usize,
    /// Number of connected components found with this prefix length.
    pub count: usize,
    /// Total vertices over those components.
    pub vertices: u64,
    /// Closed-form vertex count.
    pub expected: u64,
    pub diameter: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentReport {
    pub n: usize,
    pub entries: Vec<ComponentEntry>,
}

impl ComponentReport {
    pub fn total_vertices(&self) -> u64 {
        self.entries.iter().map(|e| e.vertices).sum()
    }

    /// One component per prefix length, each of the closed-form size.
    pub fn matches_closed_forms(&self) -> bool {
        self.entries.len() == self.n + 1
            && self.entries.iter().enumerate().all(|(i, e)| e.prefix_len == i && e.count == 1 && e.vertices == e.expected)
            && self.total_vertices() == 9u64.pow(self.n as u32)
    }
}

/// Flood-fills the whole coupled state space. Diameters are attached for
/// components whose all-pairs sweep fits `sweep_budget` (pass 0 to skip).
pub fn components_with(n: usize, sweep_budget: u64) -> Result<ComponentReport> {
    check_disks(Kind::Coupled, n)?;
    let total = 9u64.pow(n as u32);
    check_budget(total, DEFAULT_STATE_BUDGET)?;
    let level = Level::new(n);
    let mut seen = vec![false; total as usize];
    let mut entries: Vec<ComponentEntry> =
        (0..=n).map(|i| ComponentEntry { prefix_len: i, count: 0, vertices: 0, expected: component_size(n, i), diameter: None }).collect();
    let mut stack = Vec::new();
    for start in 0..total {
        if seen[start as usize] {
            continue;
        }
        let (t, b) = split(start, n);
        let entry = &mut entries[level.common_prefix_len(t, b)];
        entry.count += 1;
        seen[start as usize] = true;
        stack.push(start);
        while let Some(code) = stack.pop() {
            entry.vertices += 1;
            let (t, b) = split(code, n);
            for m in Move::ALL {
                let next = interleave(level.apply(m, t), level.apply(m, b), n);
                if !seen[next as usize] {
                    seen[next as usize] = true;
                    stack.push(next);
                }
            }
        }
    }
    for e in &mut entries {
        if e.count != 1 {
            continue;
        }
        let size = e.vertices;
        if size.saturating_mul(size) <= sweep_budget.min(DEFAULT_SWEEP_BUDGET) {
            e.diameter = Some(diameter(Target::Coupled { n, prefix_len: e.prefix_len })?);
        }
    }
    Ok(ComponentReport { n, entries })
}

pub fn components(n: usize) -> Result<ComponentReport> {
    let report = components_with(n, 0)?;
    if !report.matches_closed_forms() {
        return Err(Error::Internal(format!("component census at n={n} contradicts the closed forms")));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sizes(n: usize) -> Vec<u64> {
        components(n).unwrap().entries.iter().map(|e| e.vertices).collect()
    }

    #[test]
    fn census() {
        assert_eq!(sizes(1), [6, 3]);
        assert_eq!(sizes(2), [54, 18, 9]);
        assert_eq!(sizes(3), [486, 162, 54, 27]);
    }

    #[test]
    fn diameters_attached_when_cheap() {
        let report = components_with(2, 1 << 20).unwrap();
        let d: Vec<_> = report.entries.iter().map(|e| e.diameter).collect();
        assert_eq!(d, [Some(6), Some(4), Some(3)]);
    }
}
