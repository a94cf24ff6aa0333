//! Graphviz rendering of `Γ_n` and `CΓ_n`.

use std::fmt::Write;

use super::search::check_budget;
use super::state::{check_disks, Component, Kind, Level, Space, StateCode};
use crate::error::{Error, Result};
use crate::words::Move;

pub const MAX_DOT_VERTICES: u64 = 10_000;

/// Undirected DOT text. Each edge appears once; loops are kept.
///
/// For coupled graphs, `component = Some(i)` restricts the output to `CΓ_{n,i}`.
pub fn export_dot(n: usize, kind: Kind, component: Option<usize>) -> Result<String> {
    check_disks(kind, n)?;
    let level = Level::new(n);
    let parts: Vec<Component> = match (kind, component) {
        (Kind::Single, Some(_)) => return Err(Error::InvalidArgument("--component applies to coupled graphs only".into())),
        (Kind::Single, None) => Vec::new(),
        (Kind::Coupled, Some(i)) if i > n => return Err(Error::InvalidArgument(format!("component {i} does not exist for {n} disks"))),
        (Kind::Coupled, Some(i)) => vec![Component::new(n, i)],
        (Kind::Coupled, None) => (0..=n).map(|i| Component::new(n, i)).collect(),
    };
    let vertices = match kind {
        Kind::Single => level.size(),
        Kind::Coupled => parts.iter().map(|c| c.size()).sum(),
    };
    check_budget(vertices, MAX_DOT_VERTICES)?;

    let mut out = String::new();
    let name = match kind {
        Kind::Single => format!("hanoi_{n}"),
        Kind::Coupled => match component {
            Some(i) => format!("coupled_hanoi_{n}_{i}"),
            None => format!("coupled_hanoi_{n}"),
        },
    };
    writeln!(out, "graph {name} {{").unwrap();
    let label = |code: StateCode| format!("\"{}\"", code.render(kind, n));
    let mut emit = |space: &dyn Space, code_of: &dyn Fn(u64) -> StateCode| {
        for v in 0..space.size() {
            writeln!(out, "  {};", label(code_of(v))).unwrap();
        }
        for v in 0..space.size() {
            for (m, w) in Move::ALL.iter().zip(space.neighbors(v)) {
                if v <= w {
                    writeln!(out, "  {} -- {} [label=\"{m}\"];", label(code_of(v)), label(code_of(w))).unwrap();
                }
            }
        }
    };
    match kind {
        Kind::Single => emit(&level, &StateCode),
        Kind::Coupled => {
            for comp in &parts {
                emit(comp, &|i| comp.code(i));
            }
        }
    }
    out.push_str("}\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn edges(dot: &str) -> Vec<&str> {
        dot.lines().filter(|l| l.contains(" -- ")).collect()
    }

    #[test]
    fn single_one_disk() {
        let dot = export_dot(1, Kind::Single, None).unwrap();
        let e = edges(&dot);
        assert_eq!(e.len(), 6);
        assert_eq!(e.iter().filter(|l| l.starts_with("  \"0\" -- \"0\"")).count(), 1);
        assert!(dot.contains("\"0\" -- \"1\" [label=\"a\"]"));
        assert_eq!(dot.lines().filter(|l| l.ends_with("\";")).count(), 3);
    }

    #[test]
    fn coupled_one_disk() {
        let dot = export_dot(1, Kind::Coupled, None).unwrap();
        assert_eq!(dot.lines().filter(|l| l.ends_with("\";")).count(), 9);
        let small = export_dot(1, Kind::Coupled, Some(1)).unwrap();
        assert_eq!(small.lines().filter(|l| l.ends_with("\";")).count(), 3);
        assert_eq!(dot, export_dot(1, Kind::Coupled, None).unwrap());
    }

    #[test]
    fn guard() {
        assert!(matches!(export_dot(9, Kind::Single, None), Err(Error::CapacityExceeded { .. })));
        assert!(export_dot(8, Kind::Single, None).is_ok());
    }
}
