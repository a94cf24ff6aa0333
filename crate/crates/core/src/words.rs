//! Configurations, moves and move sequences.
//!
//! A configuration on `n` disks is a word over `{0,1,2}` whose letter `i` is
//! the peg holding disk `i` (smallest disk first). A move `a_ij` toggles the
//! first occurrence of `i` or `j` to the other letter; words with neither
//! letter are fixed.
//!
//! [`MoveSeq`] stores moves in the order they are applied. The conventional
//! written form reads right to left, so `"cab"` applies `b`, then `a`, then
//! `c`. Parsing and printing default to that written form.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Peg(u8);

impl Peg {
    pub const ZERO: Peg = Peg(0);
    pub const ONE: Peg = Peg(1);
    pub const TWO: Peg = Peg(2);
    pub const ALL: [Peg; 3] = [Peg::ZERO, Peg::ONE, Peg::TWO];

    pub fn new(value: u8) -> Option<Peg> {
        (value < 3).then_some(Peg(value))
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn value(self) -> u8 {
        self.0
    }

    pub fn from_char(c: char) -> Result<Peg> {
        match c {
            '0' => Ok(Peg::ZERO),
            '1' => Ok(Peg::ONE),
            '2' => Ok(Peg::TWO),
            other => Err(Error::InvalidPeg(other)),
        }
    }

    pub fn to_char(self) -> char {
        (b'0' + self.0) as char
    }

    /// The peg different from both `self` and `other` (which must differ).
    pub fn third(self, other: Peg) -> Peg {
        debug_assert_ne!(self, other);
        Peg(3 - self.0 - other.0)
    }
}

impl fmt::Display for Peg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// One of the three moves: `a = a01`, `b = a02`, `c = a12`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Move {
    A,
    B,
    C,
}

impl Move {
    pub const ALL: [Move; 3] = [Move::A, Move::B, Move::C];

    /// The two pegs the move transfers between, smaller first.
    pub fn pegs(self) -> (Peg, Peg) {
        match self {
            Move::A => (Peg::ZERO, Peg::ONE),
            Move::B => (Peg::ZERO, Peg::TWO),
            Move::C => (Peg::ONE, Peg::TWO),
        }
    }

    /// The peg the move ignores; the corner word on this peg is the move's fixed point.
    pub fn fixed_peg(self) -> Peg {
        match self {
            Move::A => Peg::TWO,
            Move::B => Peg::ONE,
            Move::C => Peg::ZERO,
        }
    }

    /// The move `a_ij` for two distinct pegs.
    pub fn between(i: Peg, j: Peg) -> Move {
        debug_assert_ne!(i, j);
        Move::avoiding(i.third(j))
    }

    /// The unique move whose fixed peg is `p`.
    pub fn avoiding(p: Peg) -> Move {
        match p.0 {
            0 => Move::C,
            1 => Move::B,
            _ => Move::A,
        }
    }

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_char(c: char) -> Result<Move> {
        match c {
            'a' => Ok(Move::A),
            'b' => Ok(Move::B),
            'c' => Ok(Move::C),
            other => Err(Error::InvalidMove(other)),
        }
    }

    pub fn to_char(self) -> char {
        match self {
            Move::A => 'a',
            Move::B => 'b',
            Move::C => 'c',
        }
    }

    /// Toggles the first occurrence of either of the move's pegs in place.
    pub fn apply_in_place(self, word: &mut [Peg]) {
        let skip = self.fixed_peg();
        if let Some(letter) = word.iter_mut().find(|p| **p != skip) {
            *letter = letter.third(skip);
        }
    }

    pub fn relabel(self, sigma: PegPerm) -> Move {
        let (i, j) = self.pegs();
        Move::between(sigma.apply(i), sigma.apply(j))
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

/// A configuration of `n` disks on three pegs.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Config(Vec<Peg>);

impl Config {
    pub fn new(letters: Vec<Peg>) -> Config {
        Config(letters)
    }

    pub fn empty() -> Config {
        Config(Vec::new())
    }

    /// All `n` disks on peg `p`.
    pub fn corner(p: Peg, n: usize) -> Config {
        Config(vec![p; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Peg] {
        &self.0
    }

    pub fn first(&self) -> Option<Peg> {
        self.0.first().copied()
    }

    pub fn prefix(&self, len: usize) -> Config {
        Config(self.0[..len].to_vec())
    }

    pub fn suffix(&self, start: usize) -> Config {
        Config(self.0[start..].to_vec())
    }

    pub fn concat(&self, tail: &Config) -> Config {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&tail.0);
        Config(letters)
    }

    pub fn apply(&self, m: Move) -> Config {
        let mut out = self.clone();
        m.apply_in_place(&mut out.0);
        out
    }

    pub fn apply_seq(&self, s: &MoveSeq) -> Config {
        let mut out = self.clone();
        for &m in s.moves() {
            m.apply_in_place(&mut out.0);
        }
        out
    }

    /// Parity of the number of occurrences of `x`.
    pub fn parity(&self, x: Peg) -> u8 {
        (self.0.iter().filter(|&&p| p == x).count() % 2) as u8
    }

    /// `true` for `0^n`, `1^n` and `2^n` (and the empty word).
    pub fn is_corner(&self) -> bool {
        self.0.windows(2).all(|w| w[0] == w[1])
    }

    pub fn relabel(&self, sigma: PegPerm) -> Config {
        Config(self.0.iter().map(|&p| sigma.apply(p)).collect())
    }
}

impl FromStr for Config {
    type Err = Error;

    fn from_str(s: &str) -> Result<Config> {
        s.trim().chars().map(Peg::from_char).collect::<Result<Vec<_>>>().map(Config)
    }
}

impl fmt::Display for Config {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in &self.0 {
            write!(f, "{}", p.to_char())?;
        }
        Ok(())
    }
}

/// Top and bottom configurations moved together by the same moves.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CoupledConfig {
    top: Config,
    bottom: Config,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Classification {
    /// At least one side is a corner configuration.
    pub corner: bool,
    /// The two smallest disks sit on different pegs.
    pub basic: bool,
}

impl CoupledConfig {
    pub fn new(top: Config, bottom: Config) -> Result<CoupledConfig> {
        if top.len() != bottom.len() {
            return Err(Error::SizeMismatch(top.len(), bottom.len()));
        }
        Ok(CoupledConfig { top, bottom })
    }

    pub fn top(&self) -> &Config {
        &self.top
    }

    pub fn bottom(&self) -> &Config {
        &self.bottom
    }

    pub fn len(&self) -> usize {
        self.top.len()
    }

    pub fn is_empty(&self) -> bool {
        self.top.is_empty()
    }

    pub fn apply(&self, m: Move) -> CoupledConfig {
        CoupledConfig { top: self.top.apply(m), bottom: self.bottom.apply(m) }
    }

    pub fn apply_seq(&self, s: &MoveSeq) -> CoupledConfig {
        CoupledConfig { top: self.top.apply_seq(s), bottom: self.bottom.apply_seq(s) }
    }

    /// Sum of the top and bottom parities of `x`, mod 2.
    pub fn parity(&self, x: Peg) -> u8 {
        self.top.parity(x) ^ self.bottom.parity(x)
    }

    /// Length of the longest common prefix of top and bottom.
    pub fn common_prefix_len(&self) -> usize {
        self.top.letters().iter().zip(self.bottom.letters()).take_while(|(t, b)| t == b).count()
    }

    pub fn is_basic(&self) -> bool {
        matches!((self.top.first(), self.bottom.first()), (Some(t), Some(b)) if t != b)
    }

    pub fn classify(&self) -> Classification {
        Classification { corner: self.top.is_corner() || self.bottom.is_corner(), basic: self.is_basic() }
    }

    pub fn relabel(&self, sigma: PegPerm) -> CoupledConfig {
        CoupledConfig { top: self.top.relabel(sigma), bottom: self.bottom.relabel(sigma) }
    }
}

impl FromStr for CoupledConfig {
    type Err = Error;

    fn from_str(s: &str) -> Result<CoupledConfig> {
        let (top, bottom) = s.split_once(',').ok_or_else(|| Error::MalformedCoupled(s.to_string()))?;
        CoupledConfig::new(top.parse()?, bottom.parse()?)
    }
}

impl fmt::Display for CoupledConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.top, self.bottom)
    }
}

/// Reading order of a written move sequence.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Order {
    /// Rightmost letter is applied first.
    #[default]
    Written,
    /// Leftmost letter is applied first.
    Applied,
}

/// A sequence of moves, stored first-applied first.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MoveSeq(Vec<Move>);

impl MoveSeq {
    pub fn new() -> MoveSeq {
        MoveSeq(Vec::new())
    }

    pub fn from_applied(moves: Vec<Move>) -> MoveSeq {
        MoveSeq(moves)
    }

    pub fn single(m: Move) -> MoveSeq {
        MoveSeq(vec![m])
    }

    pub fn parse(s: &str, order: Order) -> Result<MoveSeq> {
        let mut moves = s.trim().chars().map(Move::from_char).collect::<Result<Vec<_>>>()?;
        if order == Order::Written {
            moves.reverse();
        }
        Ok(MoveSeq(moves))
    }

    /// Parses written (right-to-left) notation with `^k` powers and
    /// parentheses, e.g. `"ababa(cacababa)^2"`.
    pub fn parse_expr(s: &str) -> Result<MoveSeq> {
        fn group(chars: &[char], pos: &mut usize) -> Result<String> {
            let mut out = String::new();
            while *pos < chars.len() {
                let c = chars[*pos];
                *pos += 1;
                let piece = match c {
                    '(' => group(chars, pos)?,
                    ')' => return Ok(out),
                    c if c.is_whitespace() => continue,
                    c => {
                        Move::from_char(c)?;
                        c.to_string()
                    }
                };
                let mut reps = 1usize;
                if chars.get(*pos) == Some(&'^') {
                    *pos += 1;
                    let start = *pos;
                    while chars.get(*pos).is_some_and(|d| d.is_ascii_digit()) {
                        *pos += 1;
                    }
                    let digits: String = chars[start..*pos].iter().collect();
                    reps = digits.parse().map_err(|_| Error::InvalidArgument("bad exponent".to_string()))?;
                }
                out.push_str(&piece.repeat(reps));
            }
            Ok(out)
        }
        let chars: Vec<char> = s.chars().collect();
        let mut pos = 0;
        let flat = group(&chars, &mut pos)?;
        MoveSeq::parse(&flat, Order::Written)
    }

    pub fn moves(&self) -> &[Move] {
        &self.0
    }

    pub fn into_moves(self) -> Vec<Move> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first_applied(&self) -> Option<Move> {
        self.0.first().copied()
    }

    pub fn last_applied(&self) -> Option<Move> {
        self.0.last().copied()
    }

    pub fn push(&mut self, m: Move) {
        self.0.push(m);
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &MoveSeq) -> MoveSeq {
        let mut moves = Vec::with_capacity(self.len() + next.len());
        moves.extend_from_slice(&self.0);
        moves.extend_from_slice(&next.0);
        MoveSeq(moves)
    }

    pub fn append(&mut self, next: &MoveSeq) {
        self.0.extend_from_slice(&next.0);
    }

    pub fn pow(&self, k: usize) -> MoveSeq {
        MoveSeq(self.0.repeat(k))
    }

    pub fn reversed(&self) -> MoveSeq {
        MoveSeq(self.0.iter().rev().copied().collect())
    }

    pub fn is_palindrome(&self) -> bool {
        self.0.iter().eq(self.0.iter().rev())
    }

    pub fn count(&self, m: Move) -> usize {
        self.0.iter().filter(|&&x| x == m).count()
    }

    pub fn is_square_free(&self) -> bool {
        self.0.windows(2).all(|w| w[0] != w[1])
    }

    pub fn relabel(&self, sigma: PegPerm) -> MoveSeq {
        MoveSeq(self.0.iter().map(|m| m.relabel(sigma)).collect())
    }

    pub fn render(&self, order: Order) -> String {
        match order {
            Order::Written => self.0.iter().rev().map(|m| m.to_char()).collect(),
            Order::Applied => self.0.iter().map(|m| m.to_char()).collect(),
        }
    }
}

impl FromStr for MoveSeq {
    type Err = Error;

    fn from_str(s: &str) -> Result<MoveSeq> {
        MoveSeq::parse(s, Order::Written)
    }
}

impl fmt::Display for MoveSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(Order::Written))
    }
}

impl Serialize for MoveSeq {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.render(Order::Written))
    }
}

macro_rules! serialize_as_display {
    ($($t:ty),*) => {$(
        impl Serialize for $t {
            fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
                serializer.collect_str(self)
            }
        }
    )*};
}

serialize_as_display!(Peg, Move, Config, CoupledConfig, PegPerm);

impl FromIterator<Move> for MoveSeq {
    fn from_iter<I: IntoIterator<Item = Move>>(iter: I) -> Self {
        MoveSeq(iter.into_iter().collect())
    }
}

/// A permutation of the pegs, stored as the image of `0, 1, 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PegPerm([u8; 3]);

impl PegPerm {
    pub const IDENTITY: PegPerm = PegPerm([0, 1, 2]);

    pub fn from_images(images: [u8; 3]) -> Option<PegPerm> {
        let mut seen = [false; 3];
        for &i in &images {
            if i > 2 || seen[i as usize] {
                return None;
            }
            seen[i as usize] = true;
        }
        Some(PegPerm(images))
    }

    pub fn transposition(i: Peg, j: Peg) -> PegPerm {
        let mut images = [0, 1, 2];
        images.swap(i.index(), j.index());
        PegPerm(images)
    }

    pub fn all() -> [PegPerm; 6] {
        [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]].map(PegPerm)
    }

    /// The unique permutation sending `x` to `x_image` and `y` to `y_image`.
    pub fn sending(x: Peg, x_image: Peg, y: Peg, y_image: Peg) -> PegPerm {
        debug_assert!(x != y && x_image != y_image);
        let mut images = [0; 3];
        images[x.index()] = x_image.0;
        images[y.index()] = y_image.0;
        images[x.third(y).index()] = x_image.third(y_image).0;
        PegPerm(images)
    }

    pub fn images(&self) -> [u8; 3] {
        self.0
    }

    pub fn apply(&self, p: Peg) -> Peg {
        Peg(self.0[p.index()])
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &PegPerm) -> PegPerm {
        PegPerm(other.0.map(|i| self.0[i as usize]))
    }

    pub fn inverse(&self) -> PegPerm {
        let mut images = [0; 3];
        for (i, &img) in self.0.iter().enumerate() {
            images[img as usize] = i as u8;
        }
        PegPerm(images)
    }

    pub fn is_identity(&self) -> bool {
        *self == PegPerm::IDENTITY
    }

    pub fn is_even(&self) -> bool {
        let fixed = self.0.iter().enumerate().filter(|(i, &img)| *i as u8 == img).count();
        fixed != 1
    }
}

impl fmt::Display for PegPerm {
    /// Cycle notation; the identity prints as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return f.write_str("1");
        }
        let mut seen = [false; 3];
        for start in 0..3u8 {
            if seen[start as usize] || self.0[start as usize] == start {
                continue;
            }
            f.write_str("(")?;
            let mut x = start;
            while !seen[x as usize] {
                seen[x as usize] = true;
                write!(f, "{x}")?;
                x = self.0[x as usize];
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

pub fn apply_move(m: Move, u: &Config) -> Config {
    u.apply(m)
}

pub fn apply_seq(s: &MoveSeq, u: &Config) -> Config {
    u.apply_seq(s)
}

pub fn apply_seq_coupled(s: &MoveSeq, u: &CoupledConfig) -> CoupledConfig {
    u.apply_seq(s)
}
