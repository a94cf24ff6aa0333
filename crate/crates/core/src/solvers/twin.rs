//! Solving arbitrary compatible pairs of coupled configurations.
//!
//! Basic pairs are normalized so the target top starts with 2 and the
//! target bottom with 0. The top is then aligned directly, and the bottom
//! is moved by a word that fixes everything starting with 2: its suffix
//! path is pushed into the Apollonian subgroup, factored into syllables,
//! and each syllable is replaced by its lift.

use std::fmt;

use serde::Serialize;

use super::apollonian::{factor_apollonian, lift_syllable, Syllable};
use super::closed_forms::{within_compatible_bound, within_gp_bound};
use super::sequences::w;
use super::single::{geodesic, transform_single};
use crate::error::{Error, Result};
use crate::graphs::state::{Kind, StateCode};
use crate::group::{coset, free_reduce, lift_through_prefix, CosetClass};
use crate::words::{Config, CoupledConfig, Move, MoveSeq, Peg, PegPerm};

/// The detour that moves a suffix path into `A`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Adjustment {
    pub letter: Move,
    pub corner: Config,
    /// From the start to the corner.
    pub to_corner: MoveSeq,
    /// From the corner to the end.
    pub from_corner: MoveSeq,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Audit {
    pub h: usize,
    pub fix: usize,
    pub g_s: usize,
    pub g0: usize,
    pub f: usize,
    pub total: usize,
    /// `⌊(11/3)·2^n⌋`.
    pub bound: u64,
    pub within_bound: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    /// One disk: shortest path in the six-vertex component.
    Geodesic,
    Pipeline,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SolvePlan {
    pub from: CoupledConfig,
    pub to: CoupledConfig,
    pub method: Method,
    /// Relabeling applied before solving; the stage words below are in
    /// normalized pegs, `total` is not.
    pub sigma: PegPerm,
    pub h: MoveSeq,
    pub fix: Option<MoveSeq>,
    pub g_s: MoveSeq,
    pub adjustment: Option<Adjustment>,
    pub g0: MoveSeq,
    pub syllables: Vec<Syllable>,
    pub f: MoveSeq,
    pub total: MoveSeq,
    pub audit: Audit,
}

impl fmt::Display for SolvePlan {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |s: &MoveSeq| if s.is_empty() { "1".to_string() } else { s.to_string() };
        writeln!(out, "from: {}", self.from)?;
        writeln!(out, "to: {}", self.to)?;
        writeln!(out, "sigma: {}", self.sigma)?;
        if self.method == Method::Geodesic {
            writeln!(out, "method: geodesic")?;
        } else {
            writeln!(out, "h: {} ({})", show(&self.h), self.h.len())?;
            if let Some(fix) = &self.fix {
                writeln!(out, "fix: {fix} ({})", fix.len())?;
            }
            writeln!(out, "g_s: {} ({})", show(&self.g_s), self.g_s.len())?;
            if let Some(adj) = &self.adjustment {
                writeln!(out, "adjust: {} via {}, g1 = {}, g2 = {}", adj.letter, adj.corner, show(&adj.to_corner), show(&adj.from_corner))?;
            }
            writeln!(out, "g0: {} ({})", show(&self.g0), self.g0.len())?;
            for s in &self.syllables {
                writeln!(out, "  syllable {} ({}<-{}, {:?}, k={})", s.word, s.exit, s.entry, s.orientation, s.cycles)?;
            }
            writeln!(out, "f: {} ({})", show(&self.f), self.f.len())?;
        }
        writeln!(out, "total: {}", show(&self.total))?;
        write!(
            out,
            "length: {} (bound {}, {})",
            self.audit.total,
            self.audit.bound,
            if self.audit.within_bound { "ok" } else { "EXCEEDED" }
        )
    }
}

/// Reroutes a loop-free path through the corner fixed by its coset letter so
/// that the result lies in `A`.
pub fn adjust_coset(path: &MoveSeq, from: &Config, to: &Config) -> Result<(MoveSeq, Option<Adjustment>)> {
    let not_a_path = |word: &MoveSeq| Error::NotAPath { word: word.to_string(), from: from.to_string(), to: to.to_string() };
    if from.apply_seq(path) != *to {
        return Err(not_a_path(path));
    }
    let Some(letter) = coset(path).transversal() else {
        return Ok((path.clone(), None));
    };
    let corner = Config::corner(letter.fixed_peg(), from.len());
    let to_corner = transform_single(from, &corner)?;
    let from_corner = transform_single(&corner, to)?;
    if to_corner.last_applied() == Some(letter) || from_corner.first_applied() == Some(letter) {
        return Err(Error::JunctionSquare(corner.to_string(), letter));
    }
    let mut out = to_corner.clone();
    out.push(letter);
    out.append(&from_corner);
    if from.apply_seq(&out) != *to {
        return Err(not_a_path(&out));
    }
    if coset(&out) != CosetClass::Apollonian {
        return Err(Error::Internal(format!("adjusted path {out} lies outside A")));
    }
    Ok((out, Some(Adjustment { letter, corner, to_corner, from_corner })))
}

fn check_endpoint(word: &MoveSeq, from: &CoupledConfig, to: &CoupledConfig) -> Result<()> {
    if from.apply_seq(word) != *to {
        return Err(Error::NotAPath { word: word.to_string(), from: from.to_string(), to: to.to_string() });
    }
    Ok(())
}

/// Solves a pair of basic coupled configurations within `(11/3)·2^n` moves.
pub fn solve_basic(from: &CoupledConfig, to: &CoupledConfig) -> Result<SolvePlan> {
    let n = from.len();
    if n != to.len() {
        return Err(Error::SizeMismatch(n, to.len()));
    }
    for u in [from, to] {
        if !u.is_basic() {
            return Err(Error::NotBasic(u.to_string()));
        }
    }
    let bound = super::closed_forms::gp_bound(n);
    let audit = |plan_total: usize, h: usize, fix: usize, g_s: usize, g0: usize, f: usize| Audit {
        h,
        fix,
        g_s,
        g0,
        f,
        total: plan_total,
        bound,
        within_bound: within_gp_bound(plan_total as u64, n),
    };

    if n == 1 {
        let total = geodesic(StateCode::coupled(from), StateCode::coupled(to), Kind::Coupled, 1)?;
        check_endpoint(&total, from, to)?;
        return Ok(SolvePlan {
            from: from.clone(),
            to: to.clone(),
            method: Method::Geodesic,
            sigma: PegPerm::IDENTITY,
            h: MoveSeq::new(),
            fix: None,
            g_s: MoveSeq::new(),
            adjustment: None,
            g0: MoveSeq::new(),
            syllables: Vec::new(),
            f: MoveSeq::new(),
            audit: audit(total.len(), 0, 0, 0, 0, 0),
            total,
        });
    }

    let first = |c: &Config| c.first().expect("n >= 1");
    let sigma = PegPerm::sending(first(to.top()), Peg::TWO, first(to.bottom()), Peg::ZERO);
    let (u, v) = (from.relabel(sigma), to.relabel(sigma));

    let h = transform_single(u.top(), v.top())?;
    let mut current = u.apply_seq(&h);
    let fix = (first(current.bottom()) == Peg::ONE).then(|| w("cab"));
    if let Some(fix) = &fix {
        current = current.apply_seq(fix);
    }
    debug_assert_eq!(current.top(), v.top());
    debug_assert_eq!(first(current.bottom()), Peg::ZERO);

    let (s, s_target) = (current.bottom().suffix(1), v.bottom().suffix(1));
    let g_s = transform_single(&s, &s_target)?;
    let (adjusted, adjustment) = adjust_coset(&g_s, &s, &s_target)?;
    let g0 = free_reduce(&adjusted);
    let syllables = if g0.is_empty() { Vec::new() } else { factor_apollonian(&g0)? };
    let mut f = MoveSeq::new();
    for syl in &syllables {
        f.append(&lift_syllable(syl)?);
    }

    let mut normalized = h.clone();
    if let Some(fix) = &fix {
        normalized.append(fix);
    }
    normalized.append(&f);
    check_endpoint(&normalized, &u, &v)?;
    let total = normalized.relabel(sigma.inverse());
    check_endpoint(&total, from, to)?;

    let plan = SolvePlan {
        from: from.clone(),
        to: to.clone(),
        method: Method::Pipeline,
        sigma,
        audit: audit(total.len(), h.len(), fix.as_ref().map_or(0, MoveSeq::len), g_s.len(), g0.len(), f.len()),
        h,
        fix,
        g_s,
        adjustment,
        g0,
        syllables,
        f,
        total,
    };
    if !plan.audit.within_bound {
        return Err(Error::Internal(format!("plan of length {} exceeds the bound {bound}", plan.total.len())));
    }
    Ok(plan)
}

/// Solves any pair with equal common-prefix length.
pub fn solve_compatible(from: &CoupledConfig, to: &CoupledConfig) -> Result<MoveSeq> {
    let n = from.len();
    if n != to.len() {
        return Err(Error::SizeMismatch(n, to.len()));
    }
    let (i, j) = (from.common_prefix_len(), to.common_prefix_len());
    if i != j {
        return Err(Error::Incompatible { from: i, to: j });
    }
    if i == 0 {
        return Ok(solve_basic(from, to)?.total);
    }
    let mut total = transform_single(&from.top().prefix(i), &to.top().prefix(i))?;
    if i < n {
        let inner_from = CoupledConfig::new(from.top().suffix(i), from.bottom().suffix(i))?;
        let inner_to = CoupledConfig::new(to.top().suffix(i), to.bottom().suffix(i))?;
        let inner = solve_basic(&inner_from, &inner_to)?.total;
        total.append(&lift_through_prefix(&to.top().prefix(i), &inner));
    }
    check_endpoint(&total, from, to)?;
    if !within_compatible_bound(total.len() as u64, n, i) {
        return Err(Error::Internal(format!("compatible solution of length {} exceeds its bound", total.len())));
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cc(s: &str) -> CoupledConfig {
        s.parse().unwrap()
    }

    fn cfg(s: &str) -> Config {
        s.parse().unwrap()
    }

    #[test]
    fn adjustment_examples() {
        let (out, adj) = adjust_coset(&w("a"), &cfg("0"), &cfg("1")).unwrap();
        assert_eq!(out, w("cab"));
        assert_eq!(adj.unwrap().corner, cfg("2"));
        assert_eq!(adjust_coset(&w("b"), &cfg("0"), &cfg("2")).unwrap().0, w("cba"));
        assert_eq!(adjust_coset(&w("cba"), &cfg("00"), &cfg("22")).unwrap(), (w("cba"), None));
        assert!(matches!(adjust_coset(&w("a"), &cfg("0"), &cfg("2")), Err(Error::NotAPath { .. })));
    }

    #[test]
    fn basic_examples() {
        let plan = solve_basic(&cc("0,2"), &cc("2,0")).unwrap();
        assert_eq!(plan.total, w("b"));
        let plan = solve_basic(&cc("00,10"), &cc("10,20")).unwrap();
        assert!(plan.total.len() <= 14);
        let plan = solve_basic(&cc("000,222"), &cc("222,000")).unwrap();
        assert!(plan.total.len() <= 29);
        assert!(matches!(solve_basic(&cc("20,21"), &cc("10,20")), Err(Error::NotBasic(_))));
    }

    #[test]
    fn lift_stage_fixes_words_starting_with_two() {
        let plan = solve_basic(&cc("0120,1201"), &cc("2102,0211")).unwrap();
        let level = crate::graphs::Level::new(5);
        for code in 0..level.size() {
            let u = Config::corner(Peg::TWO, 1).concat(&level.unpack(code).prefix(3));
            assert_eq!(u.apply_seq(&plan.f), u);
        }
    }

    #[test]
    fn exhaustive_two_disks() {
        let level = crate::graphs::Level::new(2);
        let basic: Vec<CoupledConfig> = (0..9)
            .flat_map(|t| (0..9).map(move |b| (t, b)))
            .map(|(t, b)| CoupledConfig::new(level.unpack(t), level.unpack(b)).unwrap())
            .filter(CoupledConfig::is_basic)
            .collect();
        for u in &basic {
            for v in &basic {
                let plan = solve_basic(u, v).unwrap();
                assert_eq!(u.apply_seq(&plan.total), *v);
            }
        }
    }

    #[test]
    fn compatible_examples() {
        let s = solve_compatible(&cc("00,01"), &cc("11,10")).unwrap();
        assert_eq!(cc("00,01").apply_seq(&s), cc("11,10"));
        assert!(matches!(solve_compatible(&cc("00,01"), &cc("01,20")), Err(Error::Incompatible { from: 1, to: 0 })));
        let s = solve_compatible(&cc("012,012"), &cc("120,120")).unwrap();
        assert_eq!(cc("012,012").apply_seq(&s), cc("120,120"));
        assert_eq!(solve_compatible(&cc("01,21"), &cc("10,20")).unwrap(), solve_basic(&cc("01,21"), &cc("10,20")).unwrap().total);
    }
}
