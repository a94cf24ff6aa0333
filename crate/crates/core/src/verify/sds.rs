//! Small-disk shift: distances, sequences, and the parity lower bound.

use rand::Rng;

use super::{nid, Outcome, Recorder};
use crate::graphs::distance_coupled;
use crate::group::decompose;
use crate::solvers::closed_forms::d;
use crate::solvers::sequences::{rep, sds_endpoints, w, written};
use crate::solvers::{sds_alt_seq, sds_seq};
use crate::words::{Config, CoupledConfig, Move, MoveSeq, Peg, PegPerm};

const SEQUENCE_CAP: usize = 20;
const DISTANCE_CAP: usize = 7;
const CASE_MIN: usize = 3;
const CASE_CAP: usize = 12;
pub const PARITY_TRIALS: usize = 100_000;
const PARITY_MAX_DISKS: usize = 12;

/// One of the shortest parity-changing paths that fails to shift the small disks.
#[derive(Clone, Debug)]
pub struct ParityCase {
    pub name: &'static str,
    pub word: MoveSeq,
    /// Side whose configuration the path is built for, and that side's endpoints.
    pub own: (&'static str, Config, Config),
    /// The other side's start, where it lands, and where it would need to land.
    pub other: (Config, Config, Config),
}

fn letters(head: Peg, rest: Peg, n: usize) -> Config {
    Config::corner(head, 1).concat(&Config::corner(rest, n - 1))
}

/// The six cases for `n ≥ 3` of the matching parity.
pub fn parity_case_words(n: usize) -> Vec<ParityCase> {
    assert!(n >= CASE_MIN);
    let p = 1u64 << n;
    let zeros = Config::corner(Peg::ZERO, n);
    let one_zeros = letters(Peg::ONE, Peg::ZERO, n);
    let two_zeros = letters(Peg::TWO, Peg::ZERO, n);
    let top = |name, word, lands: Config| ParityCase {
        name,
        word,
        own: ("top", zeros.clone(), one_zeros.clone()),
        other: (one_zeros.clone(), lands, two_zeros.clone()),
    };
    let bottom = |name, word, lands: Config| ParityCase {
        name,
        word,
        own: ("bottom", one_zeros.clone(), two_zeros.clone()),
        other: (zeros.clone(), lands, one_zeros.clone()),
    };
    let two_then = |x: Peg, y: Peg, z: Peg| Config::corner(x, 1).concat(&Config::corner(y, 1)).concat(&Config::corner(z, n - 2));
    if n.is_multiple_of(2) {
        let m = (p - 1) / 3;
        let r = (p - 4) / 3;
        vec![
            top("top-a", written(&[rep("bca", m), rep("cba", m)]), two_then(Peg::TWO, Peg::ZERO, Peg::ONE)),
            bottom(
                "bottom-a",
                written(&[w("cbc"), rep("abc", r), rep("acb", m)]),
                letters(Peg::ONE, Peg::ZERO, 2).concat(&Config::corner(Peg::ONE, n - 2)),
            ),
            bottom("bottom-b", written(&[w("ac"), rep("bac", r), rep("bca", m), w("c")]), two_then(Peg::ONE, Peg::ZERO, Peg::TWO)),
        ]
    } else {
        let m = (p - 2) / 3;
        vec![
            top("top-b", written(&[rep("bca", m), w("ba"), rep("cba", m)]), Config::corner(Peg::TWO, n)),
            bottom("bottom-a", written(&[rep("acb", m), w("a"), rep("bca", m), w("c")]), Config::corner(Peg::ONE, n)),
            bottom("bottom-b", written(&[w("c"), rep("bca", m), w("b"), rep("acb", m)]), letters(Peg::ONE, Peg::TWO, n)),
        ]
    }
}

fn random_non_corner(rng: &mut impl Rng, n: usize) -> Config {
    loop {
        let u = Config::new((0..n).map(|_| Peg::new(rng.gen_range(0..3)).unwrap()).collect());
        if !u.is_corner() {
            return u;
        }
    }
}

pub(super) fn run(rec: &mut Recorder) {
    let max_n = rec.params().max_n;
    let cycle = PegPerm::from_images([1, 2, 0]).unwrap();
    for n in 1..=max_n.min(SEQUENCE_CAP) {
        let (from, to) = sds_endpoints(n);
        rec.check(format!("sds.{}.sequence", nid(n)), || {
            let s = sds_seq(n);
            let lands = from.apply_seq(&s) == to;
            Ok(Outcome::holds(
                format!("length {}, valid", d(n)),
                format!("length {}, {}", s.len(), if lands { "valid" } else { "invalid" }),
                lands && s.len() as u64 == d(n),
            ))
        });
        rec.check(format!("sds.{}.root", nid(n)), || {
            let s = sds_seq(n);
            let root = decompose(&s).root;
            Ok(Outcome::holds(
                format!("root {cycle}, even length"),
                format!("root {root}, length {}", s.len()),
                root == cycle && s.len().is_multiple_of(2),
            ))
        });
        if n >= 4 && n % 2 == 0 {
            rec.check(format!("sds.{}.alternative", nid(n)), || {
                let s = sds_alt_seq(n);
                let lands = from.apply_seq(&s) == to;
                Ok(Outcome::holds(
                    format!("length {}, valid", d(n)),
                    format!("length {}, {}", s.len(), if lands { "valid" } else { "invalid" }),
                    lands && s.len() as u64 == d(n),
                ))
            });
        }
        if n <= DISTANCE_CAP {
            rec.check(format!("sds.{}.distance", nid(n)), || Ok(Outcome::eq(d(n), u64::from(distance_coupled(&from, &to)?))));
        }
        if (CASE_MIN..=CASE_CAP).contains(&n) {
            for case in parity_case_words(n) {
                rec.check(format!("sds.{}.case.{}", nid(n), case.name), || {
                    let (side, start, end) = &case.own;
                    let own_ok = start.apply_seq(&case.word) == *end;
                    let (other_start, lands, needed) = &case.other;
                    let got = other_start.apply_seq(&case.word);
                    let expected_len = 2 * (1usize << n) - 2;
                    Ok(Outcome::holds(
                        format!("length {expected_len}, {side} {start}->{end}, other side {lands} != {needed}"),
                        format!("length {}, {side} {}, other side {got}", case.word.len(), if own_ok { "ok" } else { "wrong" }),
                        case.word.len() == expected_len && own_ok && got == *lands && got != *needed,
                    ))
                });
            }
        }
    }
    let mut rng = rec.rng();
    rec.check("sds.parity-invariance", || {
        let mut violations = 0;
        for _ in 0..PARITY_TRIALS {
            let n = rng.gen_range(2..=PARITY_MAX_DISKS);
            let u = CoupledConfig::new(random_non_corner(&mut rng, n), random_non_corner(&mut rng, n))?;
            let m = Move::ALL[rng.gen_range(0..3)];
            let v = u.apply(m);
            if Peg::ALL.iter().any(|&x| u.parity(x) != v.parity(x)) {
                violations += 1;
            }
        }
        Ok(Outcome::holds(format!("0 violations in {PARITY_TRIALS} trials"), format!("{violations} violations"), violations == 0))
    });
}
