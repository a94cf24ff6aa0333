//! Factoring words of the Apollonian subgroup into syllables and lifting
//! each syllable to a word that fixes every configuration starting with 2.
//!
//! The Schreier graph of `A` has vertices `A, aA, bA, cA`. Each generator `x`
//! joins `A` to `xA`; the other three edges form a triangle on `aA, bA, cA`.
//! A syllable is a closed walk at `A` that visits `A` only at its ends: it
//! enters the triangle by `x`, goes `t ≥ 1` steps in one direction, and leaves
//! by `y`.

use serde::Serialize;

use super::sequences::{w, written};
use crate::error::{Error, Result};
use crate::group::{coset, decompose, equal_on_level, is_trivial_on_level, CosetClass};
use crate::words::{Move, MoveSeq, Peg};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    /// Around the triangle as `aA → cA → bA → aA`.
    Negative,
    Positive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Syllable {
    pub word: MoveSeq,
    /// First applied letter.
    pub entry: Move,
    /// Last applied letter.
    pub exit: Move,
    pub orientation: Orientation,
    /// `−1` for the short rows without a repeated block.
    pub cycles: i64,
}

/// The triangle neighbor of `x` in the negative direction.
fn negative_next(x: Move) -> Move {
    match x {
        Move::A => Move::C,
        Move::C => Move::B,
        Move::B => Move::A,
    }
}

/// Vertex of the coset graph reached from `at` along `m`.
fn step(at: CosetClass, m: Move) -> CosetClass {
    at * CosetClass::of_move(m)
}

fn vertex(m: Move) -> CosetClass {
    CosetClass::of_move(m)
}

impl Syllable {
    /// Classifies a single prime word of `A`.
    pub fn classify(word: MoveSeq) -> Result<Syllable> {
        let moves = word.moves();
        let unclassified = || Error::UnclassifiedSyllable(word.to_string());
        if moves.len() < 3 || !word.is_square_free() {
            return Err(unclassified());
        }
        let entry = moves[0];
        let exit = moves[moves.len() - 1];
        let mut at = vertex(entry);
        let mut orientation = None;
        for &m in &moves[1..moves.len() - 1] {
            let next = step(at, m);
            if next == CosetClass::Apollonian {
                return Err(unclassified());
            }
            let o = if next == vertex(negative_next(at.transversal().unwrap())) { Orientation::Negative } else { Orientation::Positive };
            if orientation.replace(o).is_some_and(|prev| prev != o) {
                return Err(unclassified());
            }
            at = next;
        }
        if at != vertex(exit) {
            return Err(unclassified());
        }
        let t = (moves.len() - 2) as i64;
        let cycles = (t - t % 3) / 3 - 1;
        Ok(Syllable { entry, exit, orientation: orientation.ok_or_else(unclassified)?, cycles, word })
    }

    /// The same syllable read backwards; orientation flips and entry and exit swap.
    pub fn reversed(&self) -> Syllable {
        Syllable {
            word: self.word.reversed(),
            entry: self.exit,
            exit: self.entry,
            orientation: match self.orientation {
                Orientation::Negative => Orientation::Positive,
                Orientation::Positive => Orientation::Negative,
            },
            cycles: self.cycles,
        }
    }
}

/// Splits a square-free word of `A` into syllables, in application order.
pub fn factor_apollonian(g0: &MoveSeq) -> Result<Vec<Syllable>> {
    if coset(g0) != CosetClass::Apollonian {
        return Err(Error::NotInA(g0.to_string()));
    }
    if !g0.is_square_free() {
        return Err(Error::NotSquareFree(g0.to_string()));
    }
    let mut out = Vec::new();
    let mut at = CosetClass::Apollonian;
    let mut current = Vec::new();
    for &m in g0.moves() {
        current.push(m);
        at = step(at, m);
        if at == CosetClass::Apollonian {
            out.push(Syllable::classify(MoveSeq::from_applied(std::mem::take(&mut current)))?);
        }
    }
    debug_assert!(current.is_empty());
    Ok(out)
}

/// One negative-orientation row of the lifting table, keyed by `(exit, entry)`.
///
/// For `k ≥ 0` the lift is `head (unit)^(2k+offset) tail` and the syllable is
/// `s_head (s_unit)^(k+1) s_tail`; rows with `entry ≠ exit` also have a short
/// form used at `k = −1`.
#[derive(Clone, Copy, Debug)]
pub struct LiftRow {
    pub exit: Move,
    pub entry: Move,
    pub head: &'static str,
    pub unit: &'static str,
    pub offset: u64,
    pub tail: &'static str,
    pub s_head: &'static str,
    pub s_unit: &'static str,
    pub s_tail: &'static str,
    pub base: Option<(&'static str, &'static str)>,
}

macro_rules! row {
    ($exit:ident <- $entry:ident, $h:literal ($u:literal)^$o:literal $t:literal, $sh:literal ($su:literal) $st:literal, $base:expr) => {
        LiftRow {
            exit: Move::$exit,
            entry: Move::$entry,
            head: $h,
            unit: $u,
            offset: $o,
            tail: $t,
            s_head: $sh,
            s_unit: $su,
            s_tail: $st,
            base: $base,
        }
    };
}

pub const LIFT_TABLE: [LiftRow; 9] = [
    row!(A <- A, "bab" ("cba")^2 "bab", "a" ("cab") "a", None),
    row!(B <- B, "abc" ("acb")^2 "cba", "b" ("abc") "b", None),
    row!(C <- C, "cb" ("cba")^2 "bc", "c" ("bca") "c", None),
    row!(C <- A, "cabcb" ("cba")^2 "bab", "cb" ("cab") "a", Some(("cabcab", "cba"))),
    row!(A <- B, "bacacac" ("acb")^2 "cba", "ac" ("abc") "b", Some(("bacacaba", "acb"))),
    row!(B <- C, "bcbcacbcb" ("cba")^1 "bc", "ba" ("bca") "c", Some(("bcbcacac", "bac"))),
    row!(B <- A, "bcbcacbcb" ("cba")^2 "bab", "bab" ("cab") "a", Some(("bcbcacbcab", "baba"))),
    row!(C <- B, "cabacac" ("acb")^2 "cba", "cbc" ("abc") "b", Some(("cabacaba", "cbcb"))),
    row!(A <- C, "bab" ("cba")^3 "bc", "aca" ("bca") "c", Some(("babcbabc", "acac"))),
];

impl LiftRow {
    /// The lift at `k` (`k ≥ −1`; `−1` only for rows with a short form).
    pub fn lift(&self, k: i64) -> Option<MoveSeq> {
        if k < 0 {
            return self.base.filter(|_| k == -1).map(|(f, _)| w(f));
        }
        let k = k as usize;
        Some(written(&[w(self.head), w(self.unit).pow(2 * k + self.offset as usize), w(self.tail)]))
    }

    /// The syllable this row lifts at `k`.
    pub fn syllable(&self, k: i64) -> Option<MoveSeq> {
        if k < 0 {
            return self.base.filter(|_| k == -1).map(|(_, s)| w(s));
        }
        Some(written(&[w(self.s_head), w(self.s_unit).pow(k as usize + 1), w(self.s_tail)]))
    }

    pub fn label(&self) -> String {
        format!("{}<-{}", self.exit, self.entry)
    }
}

pub fn lift_row(exit: Move, entry: Move) -> &'static LiftRow {
    LIFT_TABLE.iter().find(|r| r.exit == exit && r.entry == entry).expect("table covers all pairs")
}

/// A word with trivial root, trivial section at 2, and section at 0 equal to the syllable.
pub fn lift_syllable(s: &Syllable) -> Result<MoveSeq> {
    if s.orientation == Orientation::Positive {
        return Ok(lift_syllable(&s.reversed())?.reversed());
    }
    let row = lift_row(s.exit, s.entry);
    let unclassified = || Error::UnclassifiedSyllable(s.word.to_string());
    if row.syllable(s.cycles).as_ref() != Some(&s.word) {
        return Err(unclassified());
    }
    row.lift(s.cycles).ok_or_else(unclassified)
}

/// Checks the defining properties of a lift at `depth`.
pub fn is_lift_of(f: &MoveSeq, section0: &MoveSeq, depth: usize) -> bool {
    let d = decompose(f);
    d.root.is_identity() && is_trivial_on_level(d.section(Peg::TWO), depth) && equal_on_level(d.section(Peg::ZERO), section0, depth)
}
