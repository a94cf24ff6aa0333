//! Packed base-3 state codes.
//!
//! A configuration `x_1 … x_n` packs to `Σ x_k·3^(k-1)`, so the smallest
//! disk is the least significant digit. A coupled configuration packs its
//! letter pairs as base-9 digits `3·top + bottom` in the same order.
//!
//! Coupled searches never index the full `9^n` space: each component
//! `{(t, b) : lcp(t, b) = i}` has its own dense index (see [`Component`]),
//! which enumerates its states in increasing packed order.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::words::{Config, CoupledConfig, Move, MoveSeq, Peg};

pub const MAX_SINGLE_DISKS: usize = 40;
pub const MAX_COUPLED_DISKS: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Single,
    Coupled,
}

impl Kind {
    pub fn as_byte(self) -> u8 {
        match self {
            Kind::Single => 0,
            Kind::Coupled => 1,
        }
    }

    pub fn from_byte(b: u8) -> Option<Kind> {
        match b {
            0 => Some(Kind::Single),
            1 => Some(Kind::Coupled),
            _ => None,
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Single => "single",
            Kind::Coupled => "coupled",
        })
    }
}

pub fn pow3(k: usize) -> u64 {
    3u64.pow(k as u32)
}

/// Single configurations on `n` disks as codes in `0..3^n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Level {
    n: usize,
}

impl Level {
    pub fn new(n: usize) -> Level {
        assert!(n <= MAX_SINGLE_DISKS, "{n} disks do not fit a 64-bit code");
        Level { n }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> u64 {
        pow3(self.n)
    }

    pub fn pack(&self, u: &Config) -> u64 {
        debug_assert_eq!(u.len(), self.n);
        u.letters().iter().rev().fold(0, |acc, p| acc * 3 + p.value() as u64)
    }

    pub fn unpack(&self, mut code: u64) -> Config {
        let mut letters = Vec::with_capacity(self.n);
        for _ in 0..self.n {
            letters.push(Peg::new((code % 3) as u8).unwrap());
            code /= 3;
        }
        Config::new(letters)
    }

    pub fn corner(&self, p: Peg) -> u64 {
        (self.size() - 1) / 2 * p.value() as u64
    }

    pub fn apply(&self, m: Move, code: u64) -> u64 {
        let skip = m.fixed_peg().value() as u64;
        let mut rest = code;
        let mut place = 1u64;
        for _ in 0..self.n {
            let digit = rest % 3;
            if digit != skip {
                let toggled = 3 - skip - digit;
                return code - digit * place + toggled * place;
            }
            rest /= 3;
            place *= 3;
        }
        code
    }

    pub fn apply_seq(&self, s: &MoveSeq, code: u64) -> u64 {
        s.moves().iter().fold(code, |c, &m| self.apply(m, c))
    }

    /// Length of the common prefix of two packed words.
    pub fn common_prefix_len(&self, mut top: u64, mut bottom: u64) -> usize {
        for k in 0..self.n {
            if top % 3 != bottom % 3 {
                return k;
            }
            top /= 3;
            bottom /= 3;
        }
        self.n
    }
}

/// A packed configuration or coupled configuration.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct StateCode(pub u64);

impl StateCode {
    pub fn single(u: &Config) -> StateCode {
        StateCode(Level::new(u.len()).pack(u))
    }

    pub fn coupled(u: &CoupledConfig) -> StateCode {
        let level = Level::new(u.len());
        StateCode(interleave(level.pack(u.top()), level.pack(u.bottom()), u.len()))
    }

    pub fn to_config(self, n: usize) -> Config {
        Level::new(n).unpack(self.0)
    }

    pub fn to_coupled(self, n: usize) -> CoupledConfig {
        let (top, bottom) = split(self.0, n);
        let level = Level::new(n);
        CoupledConfig::new(level.unpack(top), level.unpack(bottom)).unwrap()
    }

    pub fn render(self, kind: Kind, n: usize) -> String {
        match kind {
            Kind::Single => self.to_config(n).to_string(),
            Kind::Coupled => self.to_coupled(n).to_string(),
        }
    }
}

/// Base-9 digits `3·top_k + bottom_k` from two packed words.
pub fn interleave(mut top: u64, mut bottom: u64, n: usize) -> u64 {
    let mut code = 0u64;
    let mut place = 1u64;
    for _ in 0..n {
        code += (3 * (top % 3) + bottom % 3) * place;
        top /= 3;
        bottom /= 3;
        place = place.wrapping_mul(9);
    }
    code
}

pub fn split(mut code: u64, n: usize) -> (u64, u64) {
    let (mut top, mut bottom, mut place) = (0u64, 0u64, 1u64);
    for _ in 0..n {
        let d = code % 9;
        top += (d / 3) * place;
        bottom += (d % 3) * place;
        code /= 9;
        place = place.wrapping_mul(3);
    }
    (top, bottom)
}

pub fn check_disks(kind: Kind, n: usize) -> Result<()> {
    let max = match kind {
        Kind::Single => MAX_SINGLE_DISKS,
        Kind::Coupled => MAX_COUPLED_DISKS,
    };
    if n > max {
        return Err(Error::InvalidArgument(format!("{kind} states support at most {max} disks, got {n}")));
    }
    Ok(())
}

/// The component `CΓ_{n,i}` of coupled configurations whose top and
/// bottom share a common prefix of length exactly `i`.
///
/// Local index = `prefix + 3^i·(pair + 6·rest)`, where `prefix` packs the
/// shared letters, `pair` ranks the differing pair at position `i` among
/// the six ordered pairs, and `rest` packs the remaining letter pairs in
/// base 9.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Component {
    level: Level,
    prefix_len: usize,
}

impl Component {
    pub fn new(n: usize, prefix_len: usize) -> Component {
        assert!(prefix_len <= n && n <= MAX_COUPLED_DISKS);
        Component { level: Level::new(n), prefix_len }
    }

    pub fn n(&self) -> usize {
        self.level.n
    }

    pub fn prefix_len(&self) -> usize {
        self.prefix_len
    }

    pub fn level(&self) -> Level {
        self.level
    }

    pub fn size(&self) -> u64 {
        component_size(self.n(), self.prefix_len)
    }

    pub fn index(&self, mut top: u64, mut bottom: u64) -> u64 {
        let i = self.prefix_len;
        let mut prefix = 0u64;
        let mut place = 1u64;
        for _ in 0..i {
            prefix += (top % 3) * place;
            top /= 3;
            bottom /= 3;
            place *= 3;
        }
        if i == self.n() {
            return prefix;
        }
        let (t, b) = (top % 3, bottom % 3);
        debug_assert_ne!(t, b);
        let pair = 2 * t + if b < t { b } else { b - 1 };
        top /= 3;
        bottom /= 3;
        let mut rest = 0u64;
        let mut rplace = 1u64;
        for _ in i + 1..self.n() {
            rest += (3 * (top % 3) + bottom % 3) * rplace;
            top /= 3;
            bottom /= 3;
            rplace *= 9;
        }
        prefix + pow3(i) * (pair + 6 * rest)
    }

    /// Packed `(top, bottom)` for a local index.
    pub fn state(&self, idx: u64) -> (u64, u64) {
        let i = self.prefix_len;
        let p3 = pow3(i);
        let prefix = idx % p3;
        if i == self.n() {
            return (prefix, prefix);
        }
        let r = idx / p3;
        let pair = r % 6;
        let mut rest = r / 6;
        let t = pair / 2;
        let j = pair % 2;
        let b = if j < t { j } else { j + 1 };
        let mut top = prefix + t * p3;
        let mut bottom = prefix + b * p3;
        let mut place = p3 * 3;
        for _ in i + 1..self.n() {
            let d = rest % 9;
            top += (d / 3) * place;
            bottom += (d % 3) * place;
            rest /= 9;
            place *= 3;
        }
        (top, bottom)
    }

    pub fn code(&self, idx: u64) -> StateCode {
        let (t, b) = self.state(idx);
        StateCode(interleave(t, b, self.n()))
    }

    pub fn index_of_code(&self, code: StateCode) -> Option<u64> {
        let (t, b) = split(code.0, self.n());
        (self.level.common_prefix_len(t, b) == self.prefix_len).then(|| self.index(t, b))
    }
}

/// `3^i · 6 · 9^(n-1-i)` for `i < n`, and `3^n` for `i = n`.
pub fn component_size(n: usize, i: usize) -> u64 {
    if i == n {
        pow3(n)
    } else {
        pow3(i) * 6 * 9u64.pow((n - 1 - i) as u32)
    }
}

/// A finite graph on dense indices with exactly three (possibly looping)
/// edges per vertex, one per move in the order `a, b, c`.
pub trait Space: Sync {
    fn size(&self) -> u64;
    fn neighbors(&self, idx: u64) -> [u64; 3];
}

impl Space for Level {
    fn size(&self) -> u64 {
        Level::size(self)
    }

    fn neighbors(&self, idx: u64) -> [u64; 3] {
        Move::ALL.map(|m| self.apply(m, idx))
    }
}

impl Space for Component {
    fn size(&self) -> u64 {
        Component::size(self)
    }

    fn neighbors(&self, idx: u64) -> [u64; 3] {
        let (t, b) = self.state(idx);
        Move::ALL.map(|m| self.index(self.level.apply(m, t), self.level.apply(m, b)))
    }
}

/// The space containing `code` and the state's index inside it.
pub enum Located {
    Single(Level, u64),
    Coupled(Component, u64),
}

impl Located {
    pub fn find(code: StateCode, kind: Kind, n: usize) -> Result<Located> {
        check_disks(kind, n)?;
        match kind {
            Kind::Single => {
                let level = Level::new(n);
                if code.0 >= level.size() {
                    return Err(Error::InvalidArgument(format!("state code {} out of range", code.0)));
                }
                Ok(Located::Single(level, code.0))
            }
            Kind::Coupled => {
                let level = Level::new(n);
                if code.0 >= 9u64.pow(n as u32) {
                    return Err(Error::InvalidArgument(format!("state code {} out of range", code.0)));
                }
                let (t, b) = split(code.0, n);
                let comp = Component::new(n, level.common_prefix_len(t, b));
                Ok(Located::Coupled(comp, comp.index(t, b)))
            }
        }
    }

    pub fn index(&self) -> u64 {
        match self {
            Located::Single(_, i) | Located::Coupled(_, i) => *i,
        }
    }

    pub fn space(&self) -> &dyn Space {
        match self {
            Located::Single(l, _) => l,
            Located::Coupled(c, _) => c,
        }
    }

    pub fn prefix_len(&self) -> Option<usize> {
        match self {
            Located::Single(..) => None,
            Located::Coupled(c, _) => Some(c.prefix_len()),
        }
    }
}

/// Images of a state under `a`, `b`, `c`; an image equal to the state is a loop.
pub fn neighbors(code: StateCode, kind: Kind, n: usize) -> Result<[StateCode; 3]> {
    check_disks(kind, n)?;
    let level = Level::new(n);
    Ok(match kind {
        Kind::Single => Move::ALL.map(|m| StateCode(level.apply(m, code.0))),
        Kind::Coupled => {
            let (t, b) = split(code.0, n);
            Move::ALL.map(|m| StateCode(interleave(level.apply(m, t), level.apply(m, b), n)))
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(s: &str) -> Config {
        s.parse().unwrap()
    }

    #[test]
    fn packing_round_trips() {
        let level = Level::new(4);
        for code in 0..level.size() {
            assert_eq!(level.pack(&level.unpack(code)), code);
        }
        assert_eq!(level.pack(&cfg("1000")), 1);
        assert_eq!(level.corner(Peg::TWO), level.pack(&cfg("2222")));
        let u: CoupledConfig = "0120,2201".parse().unwrap();
        assert_eq!(StateCode::coupled(&u).to_coupled(4), u);
        let big = Config::corner(Peg::TWO, MAX_SINGLE_DISKS);
        assert_eq!(StateCode::single(&big).to_config(MAX_SINGLE_DISKS), big);
    }

    #[test]
    fn packed_moves_match_word_moves() {
        let level = Level::new(5);
        for code in 0..level.size() {
            let u = level.unpack(code);
            for m in Move::ALL {
                assert_eq!(level.unpack(level.apply(m, code)), u.apply(m));
            }
        }
    }

    #[test]
    fn neighbor_examples() {
        let nb = |s: &str| neighbors(StateCode::single(&cfg(s)), Kind::Single, s.len()).unwrap().map(|c| c.to_config(s.len()).to_string());
        assert_eq!(nb("000"), ["100", "200", "000"]);
        assert_eq!(nb("111"), ["011", "111", "211"]);
        assert_eq!(nb("2120"), ["2020", "0120", "1120"]);
    }

    #[test]
    fn component_indexing_is_increasing_and_bijective() {
        for n in 1..=4 {
            let level = Level::new(n);
            let mut seen = 0u64;
            for i in 0..=n {
                let comp = Component::new(n, i);
                let mut last = None;
                for idx in 0..comp.size() {
                    let (t, b) = comp.state(idx);
                    assert_eq!(level.common_prefix_len(t, b), i);
                    assert_eq!(comp.index(t, b), idx);
                    let code = comp.code(idx);
                    assert!(last.is_none_or(|l| l < code), "order at n={n} i={i}");
                    last = Some(code);
                }
                seen += comp.size();
            }
            assert_eq!(seen, 9u64.pow(n as u32));
        }
    }
}
