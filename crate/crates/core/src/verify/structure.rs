//! Components, invariants of the coupled action, and the Apollonian subgroup.

use std::collections::BTreeSet;

use rand::Rng;

use super::{nid, Outcome, Recorder};
use crate::graphs::{components, distance_coupled, distance_single, Level};
use crate::group::{coset, CosetClass};
use crate::solvers::sequences::w;
use crate::words::{Config, CoupledConfig, Move, MoveSeq, Peg};

const COMPONENT_CAP: usize = 6;
const ORBIT_CAP: usize = 7;
const REWIRING_CAP: usize = 6;
const ISOMORPHISM_CAP: usize = 7;
const ISOMORPHISM_PAIRS: usize = 200;
pub const LCP_TRIALS: usize = 100_000;
const LCP_MAX_DISKS: usize = 12;
pub const COSET_PAIRS: usize = 10_000;
const COSET_MAX_LEN: usize = 24;

fn random_config(rng: &mut impl Rng, n: usize) -> Config {
    Config::new((0..n).map(|_| Peg::new(rng.gen_range(0..3)).unwrap()).collect())
}

fn random_word(rng: &mut impl Rng) -> MoveSeq {
    let len = rng.gen_range(0..=COSET_MAX_LEN);
    (0..len).map(|_| Move::ALL[rng.gen_range(0..3)]).collect()
}

/// Size of the orbit of `0^n` under the words `cba`, `acb`, `bac`.
pub fn apollonian_orbit_size(n: usize) -> u64 {
    let level = Level::new(n);
    let gens = [w("cba"), w("acb"), w("bac")];
    let mut seen = vec![false; level.size() as usize];
    let mut stack = vec![level.corner(Peg::ZERO)];
    seen[stack[0] as usize] = true;
    let mut count = 1;
    while let Some(code) = stack.pop() {
        for g in &gens {
            let next = level.apply_seq(g, code);
            if !seen[next as usize] {
                seen[next as usize] = true;
                count += 1;
                stack.push(next);
            }
        }
    }
    count
}

type EdgeSet = BTreeSet<(u64, u64, char)>;

fn edge(u: u64, v: u64, m: Move) -> (u64, u64, char) {
    (u.min(v), u.max(v), m.to_char())
}

/// Edges of `Γ_n` generated by the move action, loops included.
pub fn hanoi_edges(n: usize) -> EdgeSet {
    let level = Level::new(n);
    (0..level.size()).flat_map(|u| Move::ALL.map(|m| edge(u, level.apply(m, u), m))).collect()
}

/// `Γ_{n+1}` assembled from three copies of `Γ_n`, one per peg of the
/// largest disk, with the corner loops of each copy redirected between copies.
pub fn rewired_edges(n: usize) -> EdgeSet {
    let small = Level::new(n);
    let lift = |u: u64, x: Peg| u + small.size() * x.value() as u64;
    let mut out = EdgeSet::new();
    for x in Peg::ALL {
        for &(u, v, label) in &hanoi_edges(n) {
            let m = Move::from_char(label).unwrap();
            let loop_at_corner = u == v && u == small.corner(m.fixed_peg());
            if loop_at_corner && x != m.fixed_peg() {
                let (i, j) = m.pegs();
                let y = if x == i { j } else { i };
                out.insert(edge(lift(u, x), lift(u, y), m));
            } else {
                out.insert(edge(lift(u, x), lift(v, x), m));
            }
        }
    }
    out
}

pub(super) fn run(rec: &mut Recorder) {
    let max_n = rec.params().max_n;
    for n in 1..=max_n.min(COMPONENT_CAP) {
        rec.check(format!("structure.{}.components", nid(n)), || {
            let report = components(n)?;
            let sizes = |f: &dyn Fn(&crate::graphs::ComponentEntry) -> u64| {
                report.entries.iter().map(|e| f(e).to_string()).collect::<Vec<_>>().join(",")
            };
            Ok(Outcome::holds(
                format!("{} components of sizes {}", n + 1, sizes(&|e| e.expected)),
                format!("{} components of sizes {}", report.entries.iter().map(|e| e.count).sum::<usize>(), sizes(&|e| e.vertices)),
                report.matches_closed_forms(),
            ))
        });
    }
    for n in 1..=max_n.min(ORBIT_CAP) {
        rec.check(format!("structure.{}.orbit", nid(n)), || Ok(Outcome::eq(Level::new(n).size(), apollonian_orbit_size(n))));
    }
    for n in 1..=max_n.min(REWIRING_CAP) {
        rec.check(format!("structure.{}.rewiring", nid(n)), || {
            let (generated, built) = (hanoi_edges(n + 1), rewired_edges(n));
            let loops: Vec<_> = generated.iter().filter(|e| e.0 == e.1).collect();
            let level = Level::new(n + 1);
            let census = loops.len() == 3 && loops.iter().all(|&&(u, _, m)| u == level.corner(Move::from_char(m).unwrap().fixed_peg()));
            Ok(Outcome::holds(
                "copies of the smaller graph rewired at the corners; 3 corner loops",
                format!("{} edges generated, {} assembled, {} loops", generated.len(), built.len(), loops.len()),
                generated == built && census,
            ))
        });
    }
    let mut rng = rec.rng();
    for n in 1..=max_n.min(ISOMORPHISM_CAP) {
        rec.check(format!("structure.{}.diagonal-isometry", nid(n)), || {
            let mut mismatches = 0;
            for _ in 0..ISOMORPHISM_PAIRS {
                let (u, v) = (random_config(&mut rng, n), random_config(&mut rng, n));
                let single = distance_single(&u, &v)?;
                let coupled = distance_coupled(&CoupledConfig::new(u.clone(), u)?, &CoupledConfig::new(v.clone(), v)?)?;
                mismatches += usize::from(single != coupled);
            }
            Ok(Outcome::holds(format!("0 mismatches in {ISOMORPHISM_PAIRS} pairs"), format!("{mismatches} mismatches"), mismatches == 0))
        });
    }
    let mut rng = rec.rng();
    rec.check("structure.lcp-invariance", || {
        let mut violations = 0;
        for _ in 0..LCP_TRIALS {
            let n = rng.gen_range(1..=LCP_MAX_DISKS);
            let u = CoupledConfig::new(random_config(&mut rng, n), random_config(&mut rng, n))?;
            let m = Move::ALL[rng.gen_range(0..3)];
            violations += usize::from(u.apply(m).common_prefix_len() != u.common_prefix_len());
        }
        Ok(Outcome::holds(format!("0 violations in {LCP_TRIALS} trials"), format!("{violations} violations"), violations == 0))
    });
    let mut rng = rec.rng();
    rec.check("structure.coset-homomorphism", || {
        let mut violations = 0;
        for _ in 0..COSET_PAIRS {
            let (s, t) = (random_word(&mut rng), random_word(&mut rng));
            violations += usize::from(coset(&s.then(&t)) != coset(&s) * coset(&t));
        }
        Ok(Outcome::holds(format!("0 violations in {COSET_PAIRS} pairs"), format!("{violations} violations"), violations == 0))
    });
    rec.check("structure.klein-quotient", || {
        let square_free = CosetClass::ALL.iter().all(|&x| x * x == CosetClass::Apollonian);
        let closed = coset(&w("ab")) * coset(&w("c")) == coset(&w("abc")) && coset(&w("abc")) == CosetClass::Apollonian;
        Ok(Outcome::holds("every coset squares to A; cA * cA = A", format!("squares {square_free}, abc {closed}"), square_free && closed))
    });
}
