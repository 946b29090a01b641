//! Builtin rings.

use crate::error::RingError;
use crate::ring::FiniteRing;

/// Stable public names of the builtin rings.
pub const CATALOG: &[&str] = &[
    "z2",
    "z3",
    "z4",
    "z5",
    "z6",
    "z8",
    "gf4",
    "kleinian-zero",
    "zero2",
    "zero4",
    "nc4",
];

/// Accepted alternative spellings; prime fields are the cyclic rings.
const ALIASES: &[(&str, &str)] = &[("gf2", "z2"), ("gf3", "z3"), ("gf5", "z5")];

/// Addition of the four-element Kleinian group on `0, a, b, c`.
const KLEIN_ADD: [[usize; 4]; 4] = [
    [0, 1, 2, 3], //
    [1, 0, 3, 2],
    [2, 3, 0, 1],
    [3, 2, 1, 0],
];

pub fn builtin_ring(name: &str) -> Result<FiniteRing, RingError> {
    let canonical = ALIASES
        .iter()
        .find(|(alias, _)| *alias == name)
        .map_or(name, |(_, target)| target);
    match canonical {
        "z2" => Ok(cyclic(2)),
        "z3" => Ok(cyclic(3)),
        "z4" => Ok(cyclic(4)),
        "z5" => Ok(cyclic(5)),
        "z6" => Ok(cyclic(6)),
        "z8" => Ok(cyclic(8)),
        "gf4" => Ok(gf4()),
        "kleinian-zero" => Ok(kleinian_zero()),
        "zero2" => Ok(cyclic_zero(2)),
        "zero4" => Ok(cyclic_zero(4)),
        "nc4" => Ok(nc4()),
        _ => Err(RingError::UnknownBuiltin {
            name: name.to_string(),
            known: CATALOG.join(", "),
        }),
    }
}

fn build(labels: Vec<String>, add: impl Fn(usize, usize) -> usize, mul: impl Fn(usize, usize) -> usize) -> FiniteRing {
    let n = labels.len();
    let pairs = || (0..n).flat_map(|x| (0..n).map(move |y| (x, y)));
    let add_table = pairs().map(|(x, y)| add(x, y)).collect();
    let mul_table = pairs().map(|(x, y)| mul(x, y)).collect();
    FiniteRing::from_flat(labels, add_table, mul_table).expect("builtin tables form a ring")
}

fn numeric_labels(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}

/// The integers modulo `n`.
pub fn cyclic(n: usize) -> FiniteRing {
    build(numeric_labels(n), |x, y| (x + y) % n, |x, y| (x * y) % n)
}

/// Zero multiplication on the cyclic group of order `n`.
pub fn cyclic_zero(n: usize) -> FiniteRing {
    build(numeric_labels(n), |x, y| (x + y) % n, |_, _| 0)
}

/// Zero multiplication on the Kleinian four-group.
pub fn kleinian_zero() -> FiniteRing {
    let labels = ["0", "a", "b", "c"].map(String::from).to_vec();
    build(labels, |x, y| KLEIN_ADD[x][y], |_, _| 0)
}

/// GF(2)[w]/(w² + w + 1). Index bits are the coefficients of `1` and `w`.
pub fn gf4() -> FiniteRing {
    let labels = ["0", "1", "w", "w+1"].map(String::from).to_vec();
    let mul = |x: usize, y: usize| {
        // carry-less product, then reduce w² = w + 1
        let mut p = 0;
        for i in 0..2 {
            if y >> i & 1 == 1 {
                p ^= x << i;
            }
        }
        if p & 0b100 != 0 {
            p ^= 0b111;
        }
        p
    };
    build(labels, |x, y| x ^ y, mul)
}

/// Matrices `[[p, q], [0, 0]]` over GF(2), index `2p + q`. Noncommutative,
/// with a left identity but no two-sided identity.
pub fn nc4() -> FiniteRing {
    let labels = ["00", "01", "10", "11"].map(String::from).to_vec();
    let mul = |x: usize, y: usize| {
        let p = x >> 1;
        let (r, s) = (y >> 1, y & 1);
        ((p & r) << 1) | (p & s)
    };
    build(labels, |x, y| x ^ y, mul)
}
