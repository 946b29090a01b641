//! Principal ideals `I(a,b)` of `cZ × dZ`, with exact integers.
//!
//! `I(a,b) = (a,b)Z + (acZ × bdZ)`: integer multiples of the generator plus
//! the generator times arbitrary ring elements. Divisibility follows the
//! convention `0 | x ⟺ x = 0`, so `c = 0` forces `a = 0`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::ZzError;

/// `g = gcd(m, n) ≥ 0` together with `m·e + n·f = g`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BezoutCertificate {
    #[serde(serialize_with = "as_string")]
    pub g: BigInt,
    #[serde(serialize_with = "as_string")]
    pub e: BigInt,
    #[serde(serialize_with = "as_string")]
    pub f: BigInt,
}

fn as_string<S: serde::Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

/// Extended Euclid. `xgcd(0, 0) = (0, 0, 0)`.
pub fn xgcd(m: &BigInt, n: &BigInt) -> BezoutCertificate {
    let (mut r0, mut r1) = (m.clone(), n.clone());
    let (mut s0, mut s1) = (BigInt::one(), BigInt::zero());
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while !r1.is_zero() {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let s2 = &s0 - &q * &s1;
        let t2 = &t0 - &q * &t1;
        (r0, r1) = (r1, r2);
        (s0, s1) = (s1, s2);
        (t0, t1) = (t1, t2);
    }
    if r0.is_negative() {
        (r0, s0, t0) = (-r0, -s0, -t0);
    }
    if r0.is_zero() {
        s0 = BigInt::zero();
        t0 = BigInt::zero();
    }
    BezoutCertificate { g: r0, e: s0, f: t0 }
}

/// `m | x` with `0 | x ⟺ x = 0`.
pub fn divides(m: &BigInt, x: &BigInt) -> bool {
    if m.is_zero() {
        x.is_zero()
    } else {
        (x % m).is_zero()
    }
}

/// The ideal of `cZ × dZ` generated by `(a, b)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ZZPrincipalIdeal {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    d: BigInt,
    gcd_cd: BigInt,
}

fn check_divides(divisor: &BigInt, value: &BigInt) -> Result<(), ZzError> {
    if divides(divisor, value) {
        Ok(())
    } else {
        Err(ZzError::Divisibility {
            divisor: divisor.to_string(),
            value: value.to_string(),
        })
    }
}

impl ZZPrincipalIdeal {
    pub fn new(a: BigInt, b: BigInt, c: BigInt, d: BigInt) -> Result<Self, ZzError> {
        check_divides(&c, &a)?;
        check_divides(&d, &b)?;
        let gcd_cd = xgcd(&c, &d).g;
        Ok(Self { a, b, c, d, gcd_cd })
    }

    pub fn from_i64(a: i64, b: i64, c: i64, d: i64) -> Result<Self, ZzError> {
        Self::new(a.into(), b.into(), c.into(), d.into())
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn c(&self) -> &BigInt {
        &self.c
    }

    pub fn d(&self) -> &BigInt {
        &self.d
    }

    fn check_ambient(&self, u: &BigInt, v: &BigInt) -> Result<(), ZzError> {
        if divides(&self.c, u) && divides(&self.d, v) {
            Ok(())
        } else {
            Err(ZzError::OutsideRing {
                u: u.to_string(),
                v: v.to_string(),
                c: self.c.to_string(),
                d: self.d.to_string(),
            })
        }
    }

    /// Closed-form membership of `(u, v)`.
    ///
    /// With `a, b ≠ 0`: `(u,v) = (a(n + cx), b(n + dy))`, so `u/a ≡ n (mod c)`
    /// and `v/b ≡ n (mod d)`; a common `n` exists iff
    /// `gcd(c,d) | u/a − v/b`.
    pub fn member(&self, u: &BigInt, v: &BigInt) -> Result<bool, ZzError> {
        self.check_ambient(u, v)?;
        let (a, b) = (&self.a, &self.b);
        Ok(match (a.is_zero(), b.is_zero()) {
            (true, true) => u.is_zero() && v.is_zero(),
            (true, false) => u.is_zero() && divides(b, v),
            (false, true) => v.is_zero() && divides(a, u),
            (false, false) => {
                divides(a, u) && divides(b, v) && divides(&self.gcd_cd, &(u / a - v / b))
            }
        })
    }

    /// Membership by search over the multiplier `n` of the generator.
    ///
    /// For fixed `n` the pair is a member iff `ac | u − na` and
    /// `bd | v − nb`. The first condition depends on `n` only modulo `|c|`
    /// (not at all when `ac = 0`), the second only modulo `|d|`, so
    /// `n ∈ [0, lcm)` is exhaustive.
    pub fn member_bruteforce(&self, u: &BigInt, v: &BigInt) -> Result<bool, ZzError> {
        self.check_ambient(u, v)?;
        let ac = &self.a * &self.c;
        let bd = &self.b * &self.d;
        let period = |m: &BigInt, modulus: &BigInt| {
            if m.is_zero() {
                BigInt::one()
            } else {
                modulus.abs()
            }
        };
        let range = period(&ac, &self.c).lcm(&period(&bd, &self.d));
        let mut left = u.clone();
        let mut right = v.clone();
        let mut n = BigInt::zero();
        while n < range {
            if divides(&ac, &left) && divides(&bd, &right) {
                return Ok(true);
            }
            left -= &self.a;
            right -= &self.b;
            n += 1;
        }
        Ok(false)
    }

    /// `(a, 0)` and `(0, b)` both lie in the ideal. The projections are
    /// `aZ` and `bZ`, and these two elements generate `aZ × bZ` as a group.
    pub fn is_decomposable(&self) -> bool {
        let zero = BigInt::zero();
        self.member(&self.a, &zero).expect("(a,0) lies in cZ x dZ")
            && self.member(&zero, &self.b).expect("(0,b) lies in cZ x dZ")
    }
}

/// `a = 0 ∨ b = 0 ∨ gcd(c,d) = 1`, after checking `c | a` and `d | b`.
pub fn theorem3_predicate(a: &BigInt, b: &BigInt, c: &BigInt, d: &BigInt) -> Result<bool, ZzError> {
    check_divides(c, a)?;
    check_divides(d, b)?;
    Ok(a.is_zero() || b.is_zero() || xgcd(c, d).g.is_one())
}

pub const DEFAULT_SWEEP_BUDGET: u128 = 100_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepMismatch {
    pub kind: String,
    pub params: [i64; 4],
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pair: Option<[i64; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub bound: i64,
    pub cases: usize,
    pub grid_points: u64,
    pub skew_cases: usize,
    pub mismatches: Vec<SweepMismatch>,
    #[serde(skip)]
    pub skew: Vec<[i64; 4]>,
}

fn multiples_in(m: i64, limit: i64) -> Vec<i64> {
    if m == 0 {
        return vec![0];
    }
    let step = m.abs();
    (-(limit / step)..=limit / step).map(|k| k * step).collect()
}

/// All `(a, c)` with `|a|, |c| ≤ bound` and `c | a`.
fn divisor_pairs(bound: i64) -> Vec<(i64, i64)> {
    let mut out = vec![(0, 0)];
    for c in (-bound..=bound).filter(|&c| c != 0) {
        out.extend(multiples_in(c, bound).into_iter().map(|a| (a, c)));
    }
    out
}

fn grid_limit(a: i64, b: i64, c: i64, d: i64) -> i64 {
    3 * (a * c).abs().max((b * d).abs()).max(1)
}

/// Number of membership grid points a sweep at `bound` evaluates.
pub fn sweep_size(bound: i64) -> u128 {
    let pairs = divisor_pairs(bound);
    let mut total = 0u128;
    for &(a, c) in &pairs {
        for &(b, d) in &pairs {
            let lim = grid_limit(a, b, c, d);
            total += (multiples_in(c, lim).len() * multiples_in(d, lim).len()) as u128;
        }
    }
    total
}

struct CaseOutcome {
    params: [i64; 4],
    skew: bool,
    points: u64,
    mismatches: Vec<SweepMismatch>,
}

fn sweep_case(a: i64, b: i64, c: i64, d: i64) -> CaseOutcome {
    let params = [a, b, c, d];
    let big = |x: i64| BigInt::from(x);
    let ideal = ZZPrincipalIdeal::from_i64(a, b, c, d).expect("sweep only visits c|a, d|b");
    let mut mismatches = Vec::new();
    let mut flag = |kind: &str, pair: Option<[i64; 2]>| {
        mismatches.push(SweepMismatch {
            kind: kind.to_string(),
            params,
            pair,
        })
    };

    let decomposable = ideal.is_decomposable();
    let predicate = theorem3_predicate(&big(a), &big(b), &big(c), &big(d)).expect("valid params");
    if decomposable != predicate {
        flag("decomposability", None);
    }
    let flipped = ZZPrincipalIdeal::from_i64(-a, -b, -c, -d).unwrap();
    let abs = ZZPrincipalIdeal::from_i64(a.abs(), b.abs(), c.abs(), d.abs()).unwrap();
    if flipped.is_decomposable() != decomposable || abs.is_decomposable() != decomposable {
        flag("sign-invariance", None);
    }
    // c = a, d = b with gcd(c,d) ≠ 1 must be skew
    if a == c && b == d && a != 0 && b != 0 && !xgcd(&big(c), &big(d)).g.is_one() && decomposable {
        flag("gcd-skew-instance", None);
    }

    let same_ideal = [
        ZZPrincipalIdeal::from_i64(a, b, -c, d).unwrap(),
        ZZPrincipalIdeal::from_i64(a, b, c, -d).unwrap(),
        ZZPrincipalIdeal::from_i64(-a, -b, c, d).unwrap(),
    ];
    let lim = grid_limit(a, b, c, d);
    let mut points = 0;
    for u in multiples_in(c, lim) {
        for v in multiples_in(d, lim) {
            points += 1;
            let (bu, bv) = (big(u), big(v));
            let closed = ideal.member(&bu, &bv).unwrap();
            if closed != ideal.member_bruteforce(&bu, &bv).unwrap() {
                flag("membership", Some([u, v]));
            }
            if same_ideal.iter().any(|j| j.member(&bu, &bv).unwrap() != closed) {
                flag("membership-sign-invariance", Some([u, v]));
            }
        }
    }
    CaseOutcome {
        params,
        skew: !decomposable,
        points,
        mismatches,
    }
}

/// Cross-checks decomposability against the gcd criterion and closed-form
/// membership against the search, for every `|a|,|b|,|c|,|d| ≤ bound` with
/// `c | a`, `d | b`, on the grid `|u|,|v| ≤ 3·max(|ac|,|bd|,1)` restricted
/// to `cZ × dZ`.
pub fn theorem3_sweep(bound: i64, budget: u128) -> Result<SweepReport, ZzError> {
    let bound = bound.abs();
    if bound > 1_000_000 {
        return Err(ZzError::BudgetExceeded {
            requested: u128::MAX,
            budget,
        });
    }
    let requested = sweep_size(bound);
    if requested > budget {
        return Err(ZzError::BudgetExceeded { requested, budget });
    }
    let pairs = divisor_pairs(bound);
    let cases: Vec<(i64, i64, i64, i64)> = pairs
        .iter()
        .flat_map(|&(a, c)| pairs.iter().map(move |&(b, d)| (a, b, c, d)))
        .collect();
    let outcomes: Vec<CaseOutcome> = cases
        .par_iter()
        .map(|&(a, b, c, d)| sweep_case(a, b, c, d))
        .collect();

    let mut report = SweepReport {
        bound,
        cases: outcomes.len(),
        grid_points: 0,
        skew_cases: 0,
        mismatches: Vec::new(),
        skew: Vec::new(),
    };
    for o in outcomes {
        report.grid_points += o.points;
        if o.skew {
            report.skew_cases += 1;
            report.skew.push(o.params);
        }
        report.mismatches.extend(o.mismatches);
    }
    Ok(report)
}
