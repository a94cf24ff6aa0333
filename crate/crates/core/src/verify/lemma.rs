//! Corner-to-corner distances, solutions and their uniqueness in `Γ_n`.

use super::{nid, Outcome, Recorder};
use crate::graphs::{bfs, count_geodesics, diameter, Kind, Level, StateCode, Target};
use crate::solvers::corner_seq;
use crate::words::{Config, Peg};

const DISTANCE_CAP: usize = 12;
const UNIQUENESS_CAP: usize = 7;

pub(super) fn run(rec: &mut Recorder) {
    let max_n = rec.params().max_n;
    for n in 1..=max_n.min(DISTANCE_CAP) {
        let level = Level::new(n);
        let expected = (1u64 << n) - 1;
        for x in Peg::ALL {
            let field = bfs(StateCode(level.corner(x)), Kind::Single, n);
            for y in Peg::ALL.into_iter().filter(|&y| y != x) {
                let pair = format!("{x}-{y}");
                rec.check(format!("lemma.{}.distance.{pair}", nid(n)), || {
                    let d = field.as_ref().map_err(Clone::clone)?.get(StateCode(level.corner(y))).map_or(u64::MAX, u64::from);
                    Ok(Outcome::eq(expected, d))
                });
                rec.check(format!("lemma.{}.sequence.{pair}", nid(n)), || {
                    let s = corner_seq(x, y, n);
                    let lands = Config::corner(x, n).apply_seq(&s) == Config::corner(y, n);
                    Ok(Outcome::holds(
                        format!("length {expected} reaching {}", Config::corner(y, n)),
                        format!("length {}{}", s.len(), if lands { "" } else { ", wrong endpoint" }),
                        lands && s.len() as u64 == expected,
                    ))
                });
                if n <= UNIQUENESS_CAP {
                    rec.check(format!("lemma.{}.geodesics.{pair}", nid(n)), || {
                        let count = count_geodesics(StateCode(level.corner(x)), StateCode(level.corner(y)), Kind::Single, n)?;
                        Ok(Outcome::eq(1, count))
                    });
                }
            }
        }
        if n <= UNIQUENESS_CAP {
            rec.check(format!("lemma.{}.diameter", nid(n)), || Ok(Outcome::eq(expected, u64::from(diameter(Target::Hanoi(n))?))));
        }
    }
}
