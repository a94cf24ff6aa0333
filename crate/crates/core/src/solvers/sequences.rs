//! Explicit move sequences for the classical and twin-tower problems.
//!
//! Words are written right to left, as in [`MoveSeq::parse`]; [`written`]
//! concatenates written pieces in the order they are printed.

use super::closed_forms::m;
use crate::words::{MoveSeq, Order, Peg};

/// Parses a fixed written word. Panics on letters outside `{a,b,c}`.
pub(crate) fn w(s: &str) -> MoveSeq {
    MoveSeq::parse(s, Order::Written).expect("static word")
}

/// Written concatenation: the last piece is applied first.
pub(crate) fn written(pieces: &[MoveSeq]) -> MoveSeq {
    pieces.iter().rev().fold(MoveSeq::new(), |acc, p| acc.then(p))
}

/// `(s)^k` in written form.
pub(crate) fn rep(s: &str, k: u64) -> MoveSeq {
    w(s).pow(k as usize)
}

/// The unique shortest sequence from `x^n` to `y^n`.
pub fn corner_seq(x: Peg, y: Peg, n: usize) -> MoveSeq {
    assert!(x != y && n >= 1, "corner_seq needs distinct pegs and n >= 1");
    let k = m(n);
    let (head, unit) = match (x.value(), y.value(), n.is_multiple_of(2)) {
        (0, 1, true) => ("", "cab"),
        (0, 2, true) => ("", "cba"),
        (1, 0, true) => ("", "bac"),
        (1, 2, true) => ("", "bca"),
        (2, 0, true) => ("", "abc"),
        (2, 1, true) => ("", "acb"),
        (0, 1, false) => ("a", "cba"),
        (0, 2, false) => ("b", "cab"),
        (1, 0, false) => ("a", "bca"),
        (1, 2, false) => ("c", "bac"),
        (2, 0, false) => ("b", "acb"),
        _ => ("c", "abc"),
    };
    written(&[w(head), rep(unit, k)])
}

/// Exchanges `(0^n, 2^n)` and `(2^n, 0^n)` in `a(n)` moves.
pub fn tts_seq(n: usize) -> MoveSeq {
    assert!(n >= 1);
    let half = 1u64 << (n - 1);
    match n {
        1 => w("b"),
        2 => w("ababa"),
        _ if n.is_multiple_of(2) => written(&[w("ababa"), rep("cacababa", (half - 2) / 3)]),
        _ => written(&[w("aca"), rep("cbcbcaca", (half - 1) / 3)]),
    }
}

/// A second switching sequence of the same length, for `n ≥ 3`.
pub fn tts_alt_seq(n: usize) -> MoveSeq {
    assert!(n >= 3);
    let half = 1u64 << (n - 1);
    if n.is_multiple_of(2) {
        written(&[w("cbcbc"), rep("acacbcbc", (half - 2) / 3)])
    } else {
        written(&[w("cac"), rep("ababacac", (half - 1) / 3)])
    }
}

/// Moves `(0^n, 10^(n-1))` to `(10^(n-1), 20^(n-1))` in `d(n)` moves.
pub fn sds_seq(n: usize) -> MoveSeq {
    assert!(n >= 1);
    let p = 1u64 << n;
    match n {
        1 => w("ba"),
        2 => w("bcacba"),
        _ if n.is_multiple_of(2) => written(&[w("bab"), rep("abc", (p - 4) / 3), w("a"), rep("cba", (p - 1) / 3), w("c")]),
        _ => written(&[w("bab"), rep("abc", (p - 5) / 3), w("bcba"), rep("cba", (p - 2) / 3)]),
    }
}

/// A second small-disk shift for even `n ≥ 4`.
pub fn sds_alt_seq(n: usize) -> MoveSeq {
    assert!(n >= 4 && n.is_multiple_of(2));
    let p = 1u64 << n;
    written(&[w("caba"), rep("bac", (p - 4) / 3), w("b"), rep("cab", (p - 1) / 3)])
}

/// Initial and final states of the small-disk shift.
pub fn sds_endpoints(n: usize) -> (crate::words::CoupledConfig, crate::words::CoupledConfig) {
    use crate::words::{Config, CoupledConfig};
    let one_then_zeros = Config::corner(Peg::ONE, 1).concat(&Config::corner(Peg::ZERO, n - 1));
    let two_then_zeros = Config::corner(Peg::TWO, 1).concat(&Config::corner(Peg::ZERO, n - 1));
    (
        CoupledConfig::new(Config::corner(Peg::ZERO, n), one_then_zeros.clone()).unwrap(),
        CoupledConfig::new(one_then_zeros, two_then_zeros).unwrap(),
    )
}

/// Initial and final states of the twin-tower switch.
pub fn tts_endpoints(n: usize) -> (crate::words::CoupledConfig, crate::words::CoupledConfig) {
    use crate::words::{Config, CoupledConfig};
    let (zeros, twos) = (Config::corner(Peg::ZERO, n), Config::corner(Peg::TWO, n));
    (CoupledConfig::new(zeros.clone(), twos.clone()).unwrap(), CoupledConfig::new(twos, zeros).unwrap())
}
