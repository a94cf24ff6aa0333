//! The general coupled problem: lifting identities, solver bounds and diameters.

use rand::Rng;
use rayon::prelude::*;

use super::{nid, Outcome, Recorder};
use crate::graphs::{diameter, Level, Target};
use crate::group::{decompose, is_trivial_on_level, DEFAULT_TEST_DEPTH};
use crate::solvers::apollonian::{is_lift_of, lift_row, lift_syllable, Syllable};
use crate::solvers::closed_forms::{small_diam, within_gp_bound};
use crate::solvers::sequences::w;
use crate::solvers::{solve_basic, solve_compatible};
use crate::words::{Config, CoupledConfig, Move, MoveSeq, Peg};

const EXHAUSTIVE_CAP: usize = 3;
const SAMPLED_CAP: usize = 8;
const DIAMETER_CAP: usize = 4;
const SMALL_DIAMETER_CAP: usize = 8;
const COMPATIBLE_CAP: usize = 6;
const MAX_K: i64 = 4;

/// A row of the lifting table as printed: words with `k` exponents, lengths
/// `6k + f_len` and `3k + f0_len`, and the rounded-up ratio in hundredths.
#[derive(Clone, Copy, Debug)]
pub struct TableRow {
    pub exit: Move,
    pub entry: Move,
    pub f: &'static str,
    pub f0: &'static str,
    pub f_len: usize,
    pub f0_len: usize,
    pub ratio: usize,
    pub base: Option<(&'static str, &'static str, usize, usize, usize)>,
}

pub fn table_rows() -> [TableRow; 9] {
    use Move::*;
    let r = |exit, entry, f, f0, f_len, f0_len, ratio, base| TableRow { exit, entry, f, f0, f_len, f0_len, ratio, base };
    [
        r(A, A, "bab(cba)^{2k+2}bab", "a(cab)^{k+1}a", 12, 5, 240, None),
        r(B, B, "abc(acb)^{2k+2}cba", "b(abc)^{k+1}b", 12, 5, 240, None),
        r(C, C, "cb(cba)^{2k+2}bc", "c(bca)^{k+1}c", 10, 5, 200, None),
        r(C, A, "cabcb(cba)^{2k+2}bab", "cb(cab)^{k+1}a", 14, 6, 234, Some(("cabcab", "cba", 6, 3, 200))),
        r(A, B, "bacacac(acb)^{2k+2}cba", "ac(abc)^{k+1}b", 16, 6, 267, Some(("bacacaba", "acb", 8, 3, 267))),
        r(B, C, "bcbcacbcb(cba)^{2k+1}bc", "ba(bca)^{k+1}c", 14, 6, 234, Some(("bcbcacac", "bac", 8, 3, 267))),
        r(B, A, "bcbcacbcb(cba)^{2k+2}bab", "bab(cab)^{k+1}a", 18, 7, 258, Some(("bcbcacbcab", "baba", 10, 4, 250))),
        r(C, B, "cabacac(acb)^{2k+2}cba", "cbc(abc)^{k+1}b", 16, 7, 229, Some(("cabacaba", "cbcb", 8, 4, 200))),
        r(A, C, "bab(cba)^{2k+3}bc", "aca(bca)^{k+1}c", 14, 7, 200, Some(("babcbabc", "acac", 8, 4, 200))),
    ]
}

/// Substitutes `k` into a printed row word.
fn at_k(template: &str, k: i64) -> MoveSeq {
    let mut s = template.to_string();
    for (pat, value) in [("{k+1}", k + 1), ("{2k+1}", 2 * k + 1), ("{2k+2}", 2 * k + 2), ("{2k+3}", 2 * k + 3)] {
        s = s.replace(pat, &value.to_string());
    }
    MoveSeq::parse_expr(&s).expect("table word")
}

fn ceil_hundredths(num: usize, den: usize) -> usize {
    (100 * num).div_ceil(den)
}

fn random_config(rng: &mut impl Rng, n: usize) -> Config {
    Config::new((0..n).map(|_| Peg::new(rng.gen_range(0..3)).unwrap()).collect())
}

fn random_basic(rng: &mut impl Rng, n: usize) -> CoupledConfig {
    let top = random_config(rng, n);
    let shift = rng.gen_range(1..3u8);
    let first = Peg::new((top.first().unwrap().value() + shift) % 3).unwrap();
    let bottom = Config::corner(first, 1).concat(&random_config(rng, n - 1));
    CoupledConfig::new(top, bottom).unwrap()
}

fn random_compatible(rng: &mut impl Rng, n: usize, i: usize) -> CoupledConfig {
    let prefix = random_config(rng, i);
    if i == n {
        return CoupledConfig::new(prefix.clone(), prefix).unwrap();
    }
    let rest = random_basic(rng, n - i);
    CoupledConfig::new(prefix.concat(rest.top()), prefix.concat(rest.bottom())).unwrap()
}

/// Solves one pair and audits it; returns the total length when every check holds.
fn audited_solve(u: &CoupledConfig, v: &CoupledConfig) -> Option<usize> {
    let plan = solve_basic(u, v).ok()?;
    let n = u.len();
    let f = decompose(&plan.f);
    let f_fixes_two = f.root.is_identity() && is_trivial_on_level(f.section(Peg::TWO), n - 1);
    (u.apply_seq(&plan.total) == *v && within_gp_bound(plan.total.len() as u64, n) && f_fixes_two).then_some(plan.total.len())
}

fn all_basic(n: usize) -> Vec<CoupledConfig> {
    let level = Level::new(n);
    (0..level.size())
        .flat_map(|t| (0..level.size()).map(move |b| (t, b)))
        .map(|(t, b)| CoupledConfig::new(level.unpack(t), level.unpack(b)).unwrap())
        .filter(CoupledConfig::is_basic)
        .collect()
}

fn solver_outcome(n: usize, results: &[Option<usize>]) -> Outcome {
    let valid = results.iter().flatten().count();
    let longest = results.iter().flatten().max().copied().unwrap_or(0);
    Outcome::holds(
        format!("{} pairs valid, length <= 11/3*2^{n}", results.len()),
        format!("{valid} valid, longest {longest}"),
        valid == results.len(),
    )
}

fn identity_checks(rec: &mut Recorder) {
    let depth = DEFAULT_TEST_DEPTH;
    for (name, word, shown) in
        [("a", "a", "(01) (1,1,a)"), ("b", "b", "(02) (1,b,1)"), ("c", "c", "(12) (c,1,1)"), ("cab", "cab", "(01) (a,cb,1)")]
    {
        rec.check(format!("gp.identity.decompose-{name}"), || Ok(Outcome::eq(shown.to_string(), decompose(&w(word)).to_string())));
    }
    for (f, f0) in [
        ("cabcab", "cba"),
        ("bacacaba", "acb"),
        ("bcbcacac", "bac"),
        ("bab(cba)^2bab", "acaba"),
        ("abc(acb)^2cba", "babcb"),
        ("cb(cba)^2bc", "cbcac"),
    ] {
        rec.check(format!("gp.identity.{f}"), || {
            let f = MoveSeq::parse_expr(f)?;
            Ok(Outcome::holds(format!("1 ({f0},*,1)"), decompose(&f), is_lift_of(&f, &w(f0), depth)))
        });
    }
}

fn table_checks(rec: &mut Recorder) {
    let depth = DEFAULT_TEST_DEPTH;
    for row in table_rows() {
        let label = format!("{}<-{}", row.exit, row.entry);
        let stored = lift_row(row.exit, row.entry);
        rec.check(format!("gp.table.{label}.ratio"), || {
            let family = ceil_hundredths(row.f_len, row.f0_len).max(200);
            let base = row.base.map(|(_, _, lf, lf0, r)| (ceil_hundredths(lf, lf0), r, 3 * lf <= 8 * lf0));
            let within = 3 * row.f_len <= 8 * row.f0_len && base.is_none_or(|b| b.2);
            Ok(Outcome::holds(
                format!("{} / {}, <= 8/3", row.ratio, base.map_or("-".into(), |b| b.1.to_string())),
                format!("{family} / {}", base.map_or("-".into(), |b| b.0.to_string())),
                family == row.ratio && base.is_none_or(|b| b.0 == b.1) && within,
            ))
        });
        let first = if row.base.is_some() { -1 } else { 0 };
        for k in first..=MAX_K {
            let (f, f0, lf, lf0) = match (k, row.base) {
                (-1, Some((f, f0, lf, lf0, _))) => (w(f), w(f0), lf, lf0),
                _ => (at_k(row.f, k), at_k(row.f0, k), 6 * k as usize + row.f_len, 3 * k as usize + row.f0_len),
            };
            let kid = if k < 0 { "base".to_string() } else { format!("k{k}") };
            rec.check(format!("gp.table.{label}.{kid}"), || {
                let lengths = f.len() == lf && f0.len() == lf0;
                let lifts = is_lift_of(&f, &f0, depth);
                let syllable = Syllable::classify(f0.clone())?;
                let matches_solver = lift_syllable(&syllable)? == f && stored.lift(k).as_ref() == Some(&f);
                Ok(Outcome::holds(
                    format!("lengths {lf}/{lf0}, lift of section at 0, solver agrees"),
                    format!("lengths {}/{}, lift {lifts}, solver {matches_solver}", f.len(), f0.len()),
                    lengths && lifts && matches_solver && 3 * f.len() <= 8 * f0.len(),
                ))
            });
            rec.check(format!("gp.table.{label}.{kid}.inverse"), || {
                let inverse = Syllable::classify(f0.reversed())?;
                let lifted = lift_syllable(&inverse)?;
                Ok(Outcome::holds(
                    "reversed lift of reversed section",
                    format!("length {}", lifted.len()),
                    lifted == f.reversed() && is_lift_of(&lifted, &f0.reversed(), depth),
                ))
            });
        }
    }
}

pub(super) fn run(rec: &mut Recorder) {
    let params = rec.params();
    identity_checks(rec);
    table_checks(rec);

    for n in 1..=params.max_n.min(EXHAUSTIVE_CAP) {
        rec.check(format!("gp.{}.exhaustive", nid(n)), || {
            let states = all_basic(n);
            let results: Vec<Option<usize>> =
                states.par_iter().flat_map_iter(|u| states.iter().map(move |v| audited_solve(u, v))).collect();
            Ok(solver_outcome(n, &results))
        });
    }
    for n in (EXHAUSTIVE_CAP + 1)..=params.max_n.min(SAMPLED_CAP) {
        let mut rng = rec.rng();
        rec.check(format!("gp.{}.sampled", nid(n)), || {
            let pairs: Vec<_> = (0..params.samples).map(|_| (random_basic(&mut rng, n), random_basic(&mut rng, n))).collect();
            let results: Vec<Option<usize>> = pairs.par_iter().map(|(u, v)| audited_solve(u, v)).collect();
            Ok(solver_outcome(n, &results))
        });
    }
    for n in 1..=params.max_n.min(DIAMETER_CAP) {
        rec.check(format!("gp.{}.diameter", nid(n)), || {
            let d = u64::from(diameter(Target::Coupled { n, prefix_len: 0 })?);
            Ok(match n {
                1 => Outcome::eq(2, d),
                2 => Outcome::eq(6, d),
                _ => {
                    let (lo, hi) = (2u64 << n, 11u64 << n);
                    Outcome::holds(format!("in [{lo}, {hi}/3]"), d, lo <= d && 3 * d <= hi)
                }
            })
        });
    }
    for n in 1..=params.max_n.min(SMALL_DIAMETER_CAP) {
        rec.check(format!("gp.{}.small-diameter", nid(n)), || {
            Ok(Outcome::eq(small_diam(n), u64::from(diameter(Target::Coupled { n, prefix_len: n - 1 })?)))
        });
    }
    let top = params.max_n.min(COMPATIBLE_CAP);
    if top >= 1 {
        let mut rng = rec.rng();
        rec.check("gp.compatible", || {
            let pairs: Vec<_> = (0..params.samples)
                .map(|_| {
                    let n = rng.gen_range(1..=top);
                    let i = rng.gen_range(1..=n);
                    (random_compatible(&mut rng, n, i), random_compatible(&mut rng, n, i))
                })
                .collect();
            let valid = pairs.par_iter().filter(|(u, v)| solve_compatible(u, v).is_ok_and(|s| u.apply_seq(&s) == *v)).count();
            Ok(Outcome::holds(
                format!("{} pairs with prefix length >= 1 solved", pairs.len()),
                format!("{valid} solved"),
                valid == pairs.len(),
            ))
        });
    }
}
