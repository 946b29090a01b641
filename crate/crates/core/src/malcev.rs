//! Search for a unary term `t(x) = Σ b_i x^i` with `x·t(x) = x` on a finite
//! ring.
//!
//! Such a term exists for the variety generated by a commutative ring iff
//! every ideal of every product of its members is directly decomposable.
//! Identities of a finite ring hold in the variety it generates, so deciding
//! the identity on the ring itself decides it for the variety.
//!
//! Coefficients only matter modulo the additive exponent `e`. The degree
//! bound used by default comes from the eventual periodicity of the power
//! maps `x ↦ x^k`: once `k` passes every element's preperiod, the tuple
//! `(x^k)_x` repeats with period the lcm of the individual periods, so any
//! polynomial function is already realized by a polynomial of degree at most
//! `max preperiod + lcm of periods`. That bound is this crate's own argument,
//! not an effective bound from the literature.

use num_integer::Integer;
use serde::Serialize;

use crate::error::MalcevError;
use crate::ring::FiniteRing;

pub const DEFAULT_SEARCH_CAP: u64 = 10_000_000;

/// `t(x) = Σ_{i=1..D} coeffs[i-1] · x^i`. There is no constant term.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct UnaryPolynomial {
    coeffs: Vec<i64>,
}

impl UnaryPolynomial {
    /// Panics on an empty coefficient list; the degree is at least 1.
    pub fn new(coeffs: Vec<i64>) -> Self {
        assert!(!coeffs.is_empty(), "a unary polynomial has degree at least 1");
        Self { coeffs }
    }

    /// `t(x) = x`.
    pub fn identity() -> Self {
        Self::new(vec![1])
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len()
    }

    /// Coefficientwise sum, padded to the longer degree.
    pub fn add(&self, other: &Self) -> Self {
        let d = self.degree().max(other.degree());
        let at = |p: &Self, i: usize| p.coeffs.get(i).copied().unwrap_or(0);
        Self::new((0..d).map(|i| at(self, i) + at(other, i)).collect())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MalcevSearchOutcome {
    pub found: bool,
    pub witness: Option<UnaryPolynomial>,
    pub searched_degree_bound: usize,
    pub searched_coefficient_modulus: u64,
    /// The identity was decided on a noncommutative ring, outside the
    /// setting where it characterizes decomposability.
    pub noncommutative: bool,
}

/// Least `e ≥ 1` with `e·x = 0` for every element.
pub fn additive_exponent(r: &FiniteRing) -> u64 {
    r.elements().map(|x| r.additive_order(x)).fold(1, |acc, o| acc.lcm(&o))
}

/// `k·y` by repeated addition, with `k` reduced modulo the order of `y`.
fn scalar(r: &FiniteRing, k: i64, y: usize) -> usize {
    let ord = r.additive_order(y) as i64;
    let times = k.rem_euclid(ord);
    (0..times).fold(0, |acc, _| r.add(acc, y))
}

/// Steps `coeffs` to its lexicographic successor in `[0, e)^D`, last
/// coefficient fastest. Returns `false` after the last vector.
fn advance(coeffs: &mut [u64], e: u64) -> bool {
    for b in coeffs.iter_mut().rev() {
        *b += 1;
        if *b < e {
            return true;
        }
        *b = 0;
    }
    false
}

pub fn eval_poly(r: &FiniteRing, p: &UnaryPolynomial, x: usize) -> usize {
    let mut power = x;
    let mut acc = 0;
    for (i, &b) in p.coeffs.iter().enumerate() {
        if i > 0 {
            power = r.mul(power, x);
        }
        acc = r.add(acc, scalar(r, b, power));
    }
    acc
}

pub fn satisfies_malcev(r: &FiniteRing, p: &UnaryPolynomial) -> bool {
    r.elements().all(|x| r.mul(x, eval_poly(r, p, x)) == x)
}

/// `(preperiod, period)` of `x, x², x³, …`: the smallest `s ≥ 1`, `λ ≥ 1`
/// with `x^(s+λ) = x^s`, reported as `(s - 1, λ)`.
pub fn power_cycle(r: &FiniteRing, x: usize) -> (usize, usize) {
    let mut seen = vec![usize::MAX; r.order()];
    let mut power = x;
    let mut k = 1;
    loop {
        if seen[power] != usize::MAX {
            let s = seen[power];
            return (s - 1, k - s);
        }
        seen[power] = k;
        power = r.mul(power, x);
        k += 1;
    }
}

/// `max preperiod + lcm of periods` over all elements.
pub fn completeness_degree_bound(r: &FiniteRing) -> usize {
    let (pre, period) = r
        .elements()
        .map(|x| power_cycle(r, x))
        .fold((0, 1), |(pre, per), (p, l)| (pre.max(p), per.lcm(&l)));
    (pre + period).max(1)
}

/// Exhaustive search over `[0, e)^D` in lexicographic order of
/// `(b_1, …, b_D)`; the first hit is the least witness.
pub fn find_malcev(
    r: &FiniteRing,
    degree_bound: Option<usize>,
    cap: u64,
) -> Result<MalcevSearchOutcome, MalcevError> {
    let e = additive_exponent(r);
    let d = degree_bound.unwrap_or_else(|| completeness_degree_bound(r));
    if d == 0 {
        return Err(MalcevError::ZeroDegree);
    }
    let size = u32::try_from(d).ok().and_then(|d| e.checked_pow(d));
    if size.is_none_or(|s| s > cap) {
        return Err(MalcevError::SearchSpace {
            exponent: e,
            degree: d,
            cap,
        });
    }

    let n = r.order();
    // lifted[x][i] = x^(i+2), the terms of x·t(x)
    let lifted: Vec<Vec<usize>> = r
        .elements()
        .map(|x| {
            let mut pw = r.mul(x, x);
            (0..d)
                .map(|_| {
                    let cur = pw;
                    pw = r.mul(pw, x);
                    cur
                })
                .collect()
        })
        .collect();
    // multiples[k][y] = k·y for k < e
    let multiples: Vec<Vec<usize>> = (0..e)
        .map(|k| (0..n).map(|y| scalar(r, k as i64, y)).collect())
        .collect();

    let mut coeffs = vec![0u64; d];
    let witness = loop {
        let hit = r.elements().all(|x| {
            let lhs = coeffs
                .iter()
                .zip(&lifted[x])
                .fold(0, |acc, (&b, &pw)| r.add(acc, multiples[b as usize][pw]));
            lhs == x
        });
        if hit {
            break Some(UnaryPolynomial::new(coeffs.iter().map(|&b| b as i64).collect()));
        }
        if !advance(&mut coeffs, e) {
            break None;
        }
    };

    if let Some(w) = &witness {
        assert!(satisfies_malcev(r, w), "search produced an unverified witness");
    }
    Ok(MalcevSearchOutcome {
        found: witness.is_some(),
        witness,
        searched_degree_bound: d,
        searched_coefficient_modulus: e,
        noncommutative: !r.is_commutative(),
    })
}
