//! Closed-form lengths and bounds.

use serde::Serialize;

use crate::graphs::state::component_size;

/// Largest `n` for which every form below fits in a `u64`.
pub const MAX_CLOSED_FORM_N: usize = 60;

fn pow2(n: usize) -> u64 {
    1u64 << n
}

fn sign(n: usize) -> i64 {
    if n.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Length of the twin-tower switching sequence.
pub fn a(n: usize) -> u64 {
    assert!((1..=MAX_CLOSED_FORM_N).contains(&n));
    if n == 1 {
        1
    } else {
        ((4 * pow2(n) as i64 - sign(n)) / 3) as u64
    }
}

/// Distance of the small-disk shift.
pub fn d(n: usize) -> u64 {
    assert!((1..=MAX_CLOSED_FORM_N).contains(&n));
    match n {
        1 => 2,
        2 => 6,
        _ => 2 * pow2(n),
    }
}

/// Exponent in the corner-to-corner words.
pub fn m(n: usize) -> u64 {
    assert!(n <= MAX_CLOSED_FORM_N);
    if n.is_multiple_of(2) {
        (pow2(n) - 1) / 3
    } else {
        (pow2(n) - 2) / 3
    }
}

/// `⌊(11/3)·2^n⌋`.
pub fn gp_bound(n: usize) -> u64 {
    assert!(n <= MAX_CLOSED_FORM_N);
    11 * pow2(n) / 3
}

/// Whether `len ≤ (11/3)·2^n`, decided without rounding.
pub fn within_gp_bound(len: u64, n: usize) -> bool {
    3 * len <= 11 * pow2(n)
}

/// Whether `len ≤ (2^i − 1) + 3^i·(11/3)·2^(n−i)`.
pub fn within_compatible_bound(len: u64, n: usize, i: usize) -> bool {
    let head = pow2(i) - 1;
    len <= head || 3 * (len - head) <= 11 * 3u64.pow(i as u32) * pow2(n - i)
}

/// Diameter of the component of coupled states sharing all but the largest disk's letter.
pub fn small_diam(n: usize) -> u64 {
    assert!((1..=MAX_CLOSED_FORM_N).contains(&n));
    ((7 * pow2(n) as i64 - 3 - sign(n)) / 6) as u64
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosedForms {
    pub n: usize,
    pub a: u64,
    pub d: u64,
    pub m: u64,
    pub gp_bound: u64,
    pub small_diam: u64,
    /// Sizes of the coupled components by common-prefix length `0..=n`.
    pub component_sizes: Vec<u64>,
}

pub fn closed_forms(n: usize) -> ClosedForms {
    ClosedForms {
        n,
        a: a(n),
        d: d(n),
        m: m(n),
        gp_bound: gp_bound(n),
        small_diam: small_diam(n),
        component_sizes: if n <= 20 { (0..=n).map(|i| component_size(n, i)).collect() } else { Vec::new() },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn values() {
        assert_eq!((1..=4).map(a).collect::<Vec<_>>(), [1, 5, 11, 21]);
        assert_eq!((1..=4).map(d).collect::<Vec<_>>(), [2, 6, 16, 32]);
        assert_eq!((1..=4).map(m).collect::<Vec<_>>(), [0, 1, 2, 5]);
        assert_eq!((1..=4).map(small_diam).collect::<Vec<_>>(), [2, 4, 9, 18]);
        assert_eq!(gp_bound(3), 29);
        assert!(within_gp_bound(29, 3) && !within_gp_bound(30, 3));
    }

    #[test]
    fn jacobsthal() {
        for n in 4..=MAX_CLOSED_FORM_N {
            assert_eq!(a(n), a(n - 1) + 2 * a(n - 2));
        }
    }
}
