//! Wreath recursion for words over `{a, b, c}`.
//!
//! Every word `g` acts on the ternary tree as `g(x·u) = π(x)·g_x(u)`, where
//! `π` is the root permutation and `g_0, g_1, g_2` are the sections. The
//! generators decompose as
//!
//! ```text
//! a = (01) (1,1,a)    b = (02) (1,b,1)    c = (12) (c,1,1)
//! ```
//!
//! and a word's decomposition is the product of its letters'. Group elements
//! are kept as free words; equality is only ever asked on a finite level.

use std::fmt;

use crate::words::{Config, Move, MoveSeq, Peg, PegPerm};

/// Identities from the generator decompositions are checked on words of this length.
pub const DEFAULT_TEST_DEPTH: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub root: PegPerm,
    pub sections: [MoveSeq; 3],
}

impl Decomposition {
    pub fn section(&self, x: Peg) -> &MoveSeq {
        &self.sections[x.index()]
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |s: &MoveSeq| if s.is_empty() { "1".to_string() } else { s.to_string() };
        write!(f, "{} ({},{},{})", self.root, show(&self.sections[0]), show(&self.sections[1]), show(&self.sections[2]))
    }
}

/// A single move swaps its two pegs at the root.
fn generator_root(m: Move) -> PegPerm {
    let (i, j) = m.pegs();
    PegPerm::transposition(i, j)
}

pub fn decompose(s: &MoveSeq) -> Decomposition {
    let mut root = PegPerm::IDENTITY;
    let mut sections: [Vec<Move>; 3] = Default::default();
    for &m in s.moves() {
        let fixed = m.fixed_peg();
        for x in Peg::ALL {
            if root.apply(x) == fixed {
                sections[x.index()].push(m);
            }
        }
        root = generator_root(m).compose(&root);
    }
    Decomposition { root, sections: sections.map(MoveSeq::from_applied) }
}

/// The section of `s` below the vertex `u`.
pub fn section_at(s: &MoveSeq, u: &[Peg]) -> MoveSeq {
    let mut current = s.clone();
    for &x in u {
        current = decompose(&current).sections[x.index()].clone();
    }
    current
}

/// The four cosets of the Apollonian subgroup `A = <cba, acb, bac>`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CosetClass {
    /// `A` itself.
    Apollonian,
    /// `aA`.
    A,
    /// `bA`.
    B,
    /// `cA`.
    C,
}

impl CosetClass {
    pub const ALL: [CosetClass; 4] = [CosetClass::Apollonian, CosetClass::A, CosetClass::B, CosetClass::C];

    fn bits(self) -> u8 {
        match self {
            CosetClass::Apollonian => 0,
            CosetClass::A => 1,
            CosetClass::B => 2,
            CosetClass::C => 3,
        }
    }

    fn from_bits(bits: u8) -> CosetClass {
        match bits & 3 {
            0 => CosetClass::Apollonian,
            1 => CosetClass::A,
            2 => CosetClass::B,
            _ => CosetClass::C,
        }
    }

    pub fn of_move(m: Move) -> CosetClass {
        match m {
            Move::A => CosetClass::A,
            Move::B => CosetClass::B,
            Move::C => CosetClass::C,
        }
    }

    /// The transversal letter representing this coset (`None` for `A`).
    pub fn transversal(self) -> Option<Move> {
        match self {
            CosetClass::Apollonian => None,
            CosetClass::A => Some(Move::A),
            CosetClass::B => Some(Move::B),
            CosetClass::C => Some(Move::C),
        }
    }
}

/// Product in the quotient `H/A`, a Klein four-group.
impl std::ops::Mul for CosetClass {
    type Output = CosetClass;

    // the Klein group is (Z/2)^2, so the product is XOR of the bit pairs
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, other: CosetClass) -> CosetClass {
        CosetClass::from_bits(self.bits() ^ other.bits())
    }
}

impl fmt::Display for CosetClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CosetClass::Apollonian => "A",
            CosetClass::A => "aA",
            CosetClass::B => "bA",
            CosetClass::C => "cA",
        })
    }
}

/// Coset of `A` containing `s`: `A` when the letter counts all have the same
/// parity, otherwise the coset of the letter whose parity is the odd one out.
pub fn coset(s: &MoveSeq) -> CosetClass {
    let p = Move::ALL.map(|m| s.count(m) % 2);
    if p[0] == p[1] && p[1] == p[2] {
        CosetClass::Apollonian
    } else if p[1] == p[2] {
        CosetClass::A
    } else if p[0] == p[2] {
        CosetClass::B
    } else {
        CosetClass::C
    }
}

pub fn inverse(s: &MoveSeq) -> MoveSeq {
    s.reversed()
}

/// Cancels adjacent equal letters until none remain.
pub fn free_reduce(s: &MoveSeq) -> MoveSeq {
    let mut out: Vec<Move> = Vec::with_capacity(s.len());
    for &m in s.moves() {
        if out.last() == Some(&m) {
            out.pop();
        } else {
            out.push(m);
        }
    }
    MoveSeq::from_applied(out)
}

/// Whether `w` acts trivially on every word of length `n`, decided through
/// sections. Section lengths sum to the word length, so each level costs
/// at most `|w|`.
pub fn is_trivial_on_level(w: &MoveSeq, n: usize) -> bool {
    let w = free_reduce(w);
    if n == 0 || w.is_empty() {
        return true;
    }
    let d = decompose(&w);
    d.root.is_identity() && d.sections.iter().all(|s| is_trivial_on_level(s, n - 1))
}

/// Whether `s` and `t` act identically on every word of length `n`.
pub fn equal_on_level(s: &MoveSeq, t: &MoveSeq, n: usize) -> bool {
    is_trivial_on_level(&s.then(&inverse(t)), n)
}

/// Same question as [`equal_on_level`], answered by applying both words to
/// all `3^n` words of length `n`.
pub fn equal_on_level_exhaustive(s: &MoveSeq, t: &MoveSeq, n: usize) -> bool {
    let level = crate::graphs::Level::new(n);
    (0..level.size()).all(|code| level.apply_seq(s, code) == level.apply_seq(t, code))
}

fn lift_letter(below: Peg, m: Move) -> &'static [Move] {
    use Move::*;
    match (below.value(), m) {
        (2, A) | (0, C) | (1, B) => match m {
            A => &[A],
            B => &[B],
            C => &[C],
        },
        (2, B) => &[C, B, C],
        (2, _) => &[B, C, B],
        (0, A) => &[B, A, B],
        (0, _) => &[A, B, A],
        (_, A) => &[C, A, C],
        (_, _) => &[A, C, A],
    }
}

/// A word `h` with `h(u·w) = u·g(w)` for every `w`. Below a letter `x`, the
/// move avoiding `x` lifts to itself and the other two lift to palindromes
/// of length 3.
pub fn lift_through_prefix(u: &Config, g: &MoveSeq) -> MoveSeq {
    let mut current = g.clone();
    for &x in u.letters().iter().rev() {
        current = current.moves().iter().flat_map(|&m| lift_letter(x, m).iter().copied()).collect();
    }
    current
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(s: &str) -> MoveSeq {
        s.parse().unwrap()
    }

    fn cfg(s: &str) -> Config {
        s.parse().unwrap()
    }

    #[test]
    fn generator_decompositions() {
        assert_eq!(decompose(&seq("a")).to_string(), "(01) (1,1,a)");
        assert_eq!(decompose(&seq("b")).to_string(), "(02) (1,b,1)");
        assert_eq!(decompose(&seq("c")).to_string(), "(12) (c,1,1)");
        assert_eq!(decompose(&seq("cab")).to_string(), "(01) (a,cb,1)");
        let ab = decompose(&seq("ab"));
        assert_eq!(ab.root.images(), [2, 0, 1]);
        assert_eq!(ab.sections, [seq("a"), seq("b"), MoveSeq::new()]);
        assert_eq!(decompose(&MoveSeq::new()).to_string(), "1 (1,1,1)");
    }

    #[test]
    fn sections_along_words() {
        assert_eq!(section_at(&seq("a"), cfg("2").letters()), seq("a"));
        assert_eq!(section_at(&seq("a"), cfg("22").letters()), seq("a"));
        assert_eq!(section_at(&seq("a"), cfg("0").letters()), MoveSeq::new());
        assert!(equal_on_level_exhaustive(&section_at(&seq("a"), cfg("22").letters()), &seq("a"), 3));
    }

    #[test]
    fn cosets() {
        assert_eq!(coset(&seq("cba")), CosetClass::Apollonian);
        assert_eq!(coset(&seq("a")), CosetClass::A);
        assert_eq!(coset(&seq("ab")), CosetClass::C);
        assert_eq!(coset(&seq("cab")), CosetClass::Apollonian);
        assert_eq!(coset(&MoveSeq::new()), CosetClass::Apollonian);
        assert_eq!(CosetClass::C * CosetClass::C, CosetClass::Apollonian);
        assert_eq!(CosetClass::A * CosetClass::B, CosetClass::C);
    }

    #[test]
    fn level_equality() {
        for n in [0, 1, 4, 7] {
            assert!(equal_on_level(&seq("aa"), &MoveSeq::new(), n));
        }
        assert!(!equal_on_level(&seq("ab"), &seq("ba"), 1));
        assert!(!equal_on_level_exhaustive(&seq("ab"), &seq("ba"), 1));
        assert!(equal_on_level(&seq("bb"), &MoveSeq::new(), 5));
        // level 0 is the root alone
        assert!(equal_on_level(&seq("ab"), &seq("ba"), 0));
    }

    #[test]
    fn inverses_and_reduction() {
        assert_eq!(inverse(&seq("cab")), seq("bac"));
        assert_eq!(inverse(&MoveSeq::new()), MoveSeq::new());
        assert_eq!(cfg("000").apply_seq(&seq("cab")), cfg("110"));
        assert_eq!(cfg("110").apply_seq(&seq("bac")), cfg("000"));
        assert!(free_reduce(&seq("abba")).is_empty());
        assert_eq!(free_reduce(&seq("abab")), seq("abab"));
        assert!(free_reduce(&seq("cabbac")).is_empty());
    }

    #[test]
    fn prefix_lifting() {
        assert_eq!(lift_through_prefix(&cfg("2"), &seq("b")), seq("cbc"));
        assert_eq!(lift_through_prefix(&cfg("2"), &seq("a")), seq("a"));
        assert_eq!(lift_through_prefix(&cfg("0"), &seq("a")), seq("bab"));
        assert_eq!(lift_through_prefix(&Config::empty(), &seq("abc")), seq("abc"));
        // every substitution rule, checked by action on all depth-4 tails
        let level = crate::graphs::Level::new(4);
        for x in Peg::ALL {
            for m in Move::ALL {
                let g = MoveSeq::single(m);
                let h = lift_through_prefix(&Config::corner(x, 1), &g);
                for code in 0..level.size() {
                    let w = level.unpack(code);
                    let lifted = Config::corner(x, 1).concat(&w).apply_seq(&h);
                    assert_eq!(lifted, Config::corner(x, 1).concat(&w.apply_seq(&g)), "{x} {m}");
                }
            }
        }
    }
}
