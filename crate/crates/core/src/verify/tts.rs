//! Twin-tower switching: sequence validity and exact distances.

use super::{nid, Outcome, Recorder};
use crate::graphs::distance_coupled;
use crate::solvers::closed_forms::{a, MAX_CLOSED_FORM_N};
use crate::solvers::sequences::tts_endpoints;
use crate::solvers::{tts_alt_seq, tts_seq};

const SEQUENCE_CAP: usize = 20;
const DISTANCE_CAP: usize = 7;
const RECURSION_MAX: usize = 30;

pub(super) fn run(rec: &mut Recorder) {
    let max_n = rec.params().max_n;
    for n in 1..=max_n.min(SEQUENCE_CAP) {
        let (from, to) = tts_endpoints(n);
        rec.check(format!("tts.{}.sequence", nid(n)), || {
            let s = tts_seq(n);
            let lands = from.apply_seq(&s) == to;
            let palindrome = n < 2 || s.is_palindrome();
            Ok(Outcome::holds(
                format!("length {}, valid{}", a(n), if n >= 2 { ", palindrome" } else { "" }),
                format!(
                    "length {}, {}, {}",
                    s.len(),
                    if lands { "valid" } else { "invalid" },
                    if palindrome { "palindrome" } else { "not palindrome" }
                ),
                lands && palindrome && s.len() as u64 == a(n),
            ))
        });
        if n >= 3 {
            rec.check(format!("tts.{}.alternative", nid(n)), || {
                let s = tts_alt_seq(n);
                let lands = from.apply_seq(&s) == to;
                Ok(Outcome::holds(
                    format!("length {}, valid", a(n)),
                    format!("length {}, {}", s.len(), if lands { "valid" } else { "invalid" }),
                    lands && s.len() as u64 == a(n),
                ))
            });
        }
        if n <= DISTANCE_CAP {
            let d = distance_coupled(&from, &to);
            if n <= 2 {
                rec.check(format!("tts.{}.distance", nid(n)), || Ok(Outcome::eq(a(n), u64::from(d.clone()?))));
            } else {
                rec.check(format!("tts.{}.distance-bound", nid(n)), || {
                    let d = u64::from(d.clone()?);
                    Ok(Outcome::holds(format!("<= {}", a(n)), d, d <= a(n)))
                });
                rec.check(format!("tts.{}.conjecture", nid(n)), || Ok(Outcome::recorded(a(n), d.clone()?)));
            }
        }
    }
    for n in 4..=RECURSION_MAX.min(MAX_CLOSED_FORM_N) {
        rec.check(format!("tts.jacobsthal.{}", nid(n)), || Ok(Outcome::eq(a(n - 1) + 2 * a(n - 2), a(n))));
    }
}
