//! Finite rings given by Cayley tables.
//!
//! Elements are the indices `0..n` and index `0` is always the additive
//! identity. Every [`FiniteRing`] has passed [`verify_axioms`]; there is no
//! way to obtain one from tables that are not a ring.

use std::collections::hash_map::DefaultHasher;
use std::collections::HashSet;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::Range;

use serde::{Deserialize, Serialize};

use crate::error::RingError;

/// On-disk ring description. Tables are row-major, row = left operand.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingSpec {
    pub order: usize,
    pub labels: Vec<String>,
    pub add: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub commutative: Option<bool>,
}

impl RingSpec {
    pub fn from_json(text: &str) -> Result<Self, RingError> {
        serde_json::from_str(text).map_err(|e| RingError::Malformed(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("ring spec serializes")
    }

    fn check_shape(&self) -> Result<(), RingError> {
        let n = self.order;
        if n == 0 {
            return Err(RingError::Malformed("order must be positive".into()));
        }
        if self.labels.len() != n {
            return Err(RingError::Malformed(format!(
                "expected {n} labels, found {}",
                self.labels.len()
            )));
        }
        let mut seen = HashSet::new();
        for l in &self.labels {
            if !seen.insert(l.as_str()) {
                return Err(RingError::Malformed(format!("duplicate label `{l}`")));
            }
        }
        for (name, table) in [("add", &self.add), ("mul", &self.mul)] {
            if table.len() != n || table.iter().any(|row| row.len() != n) {
                return Err(RingError::Malformed(format!("`{name}` table must be {n}x{n}")));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Axiom {
    AdditiveClosure,
    MultiplicativeClosure,
    AdditiveIdentity,
    AdditiveCommutativity,
    AdditiveAssociativity,
    AdditiveInverse,
    MultiplicativeAssociativity,
    LeftDistributivity,
    RightDistributivity,
    Commutativity,
}

impl Axiom {
    pub fn name(self) -> &'static str {
        match self {
            Axiom::AdditiveClosure => "additive-closure",
            Axiom::MultiplicativeClosure => "multiplicative-closure",
            Axiom::AdditiveIdentity => "additive-identity",
            Axiom::AdditiveCommutativity => "additive-commutativity",
            Axiom::AdditiveAssociativity => "additive-associativity",
            Axiom::AdditiveInverse => "additive-inverse",
            Axiom::MultiplicativeAssociativity => "multiplicative-associativity",
            Axiom::LeftDistributivity => "left-distributivity",
            Axiom::RightDistributivity => "right-distributivity",
            Axiom::Commutativity => "commutativity",
        }
    }
}

/// A failed axiom together with the lexicographically least element tuple
/// that violates it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub axiom: Axiom,
    pub witness: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub passed: bool,
    pub violations: Vec<Violation>,
}

impl AxiomReport {
    fn from_violations(violations: Vec<Violation>) -> Self {
        Self {
            passed: violations.is_empty(),
            violations,
        }
    }

    pub fn violates(&self, axiom: Axiom) -> bool {
        self.violations.iter().any(|v| v.axiom == axiom)
    }

    pub fn summary(&self) -> String {
        if self.passed {
            return "all axioms hold".into();
        }
        self.violations
            .iter()
            .map(|v| format!("{} at {:?}", v.axiom.name(), v.witness))
            .collect::<Vec<_>>()
            .join(", ")
    }
}

/// Checks every ring axiom on a well-shaped spec. Shape problems (wrong
/// table sizes, label count) are reported as [`RingError::Malformed`].
pub fn verify_axioms(spec: &RingSpec) -> Result<AxiomReport, RingError> {
    spec.check_shape()?;
    let n = spec.order;
    let add: Vec<usize> = spec.add.iter().flatten().copied().collect();
    let mul: Vec<usize> = spec.mul.iter().flatten().copied().collect();
    Ok(check_tables(n, &add, &mul, spec.commutative == Some(true)))
}

fn first_pair(n: usize, bad: impl Fn(usize, usize) -> bool) -> Option<Vec<usize>> {
    (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .find(|&(x, y)| bad(x, y))
        .map(|(x, y)| vec![x, y])
}

fn first_triple(n: usize, bad: impl Fn(usize, usize, usize) -> bool) -> Option<Vec<usize>> {
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if bad(x, y, z) {
                    return Some(vec![x, y, z]);
                }
            }
        }
    }
    None
}

fn collect(checks: impl IntoIterator<Item = (Axiom, Option<Vec<usize>>)>) -> Vec<Violation> {
    checks
        .into_iter()
        .filter_map(|(axiom, witness)| witness.map(|witness| Violation { axiom, witness }))
        .collect()
}

fn check_tables(n: usize, add: &[usize], mul: &[usize], require_symmetric: bool) -> AxiomReport {
    let closure = collect([
        (Axiom::AdditiveClosure, first_pair(n, |x, y| add[x * n + y] >= n)),
        (Axiom::MultiplicativeClosure, first_pair(n, |x, y| mul[x * n + y] >= n)),
    ]);
    if !closure.is_empty() {
        return AxiomReport::from_violations(closure);
    }

    let a = |x: usize, y: usize| add[x * n + y];
    let m = |x: usize, y: usize| mul[x * n + y];
    let symmetric = || first_pair(n, |x, y| m(x, y) != m(y, x));
    AxiomReport::from_violations(collect([
        (
            Axiom::AdditiveIdentity,
            (0..n).find(|&x| a(0, x) != x || a(x, 0) != x).map(|x| vec![x]),
        ),
        (Axiom::AdditiveCommutativity, first_pair(n, |x, y| a(x, y) != a(y, x))),
        (
            Axiom::AdditiveAssociativity,
            first_triple(n, |x, y, z| a(a(x, y), z) != a(x, a(y, z))),
        ),
        (
            Axiom::AdditiveInverse,
            (0..n).find(|&x| !(0..n).any(|y| a(x, y) == 0)).map(|x| vec![x]),
        ),
        (
            Axiom::MultiplicativeAssociativity,
            first_triple(n, |x, y, z| m(m(x, y), z) != m(x, m(y, z))),
        ),
        (
            Axiom::LeftDistributivity,
            first_triple(n, |x, y, z| m(x, a(y, z)) != a(m(x, y), m(x, z))),
        ),
        (
            Axiom::RightDistributivity,
            first_triple(n, |x, y, z| m(a(x, y), z) != a(m(x, z), m(y, z))),
        ),
        (Axiom::Commutativity, if require_symmetric { symmetric() } else { None }),
    ]))
}

/// Identity of a ring's tables; ideals carry it to detect mixed-ring use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingId(u64);

/// An immutable, validated finite ring.
#[derive(Clone)]
pub struct FiniteRing {
    id: RingId,
    order: usize,
    labels: Vec<String>,
    add: Vec<usize>,
    mul: Vec<usize>,
    neg: Vec<usize>,
    commutative: bool,
}

impl FiniteRing {
    pub fn from_spec(spec: &RingSpec) -> Result<Self, RingError> {
        let report = verify_axioms(spec)?;
        if !report.passed {
            return Err(RingError::Axioms(report));
        }
        let add: Vec<usize> = spec.add.iter().flatten().copied().collect();
        let mul: Vec<usize> = spec.mul.iter().flatten().copied().collect();
        Ok(Self::assemble(spec.labels.clone(), add, mul, spec.commutative))
    }

    /// Builds a ring from flat row-major tables.
    pub(crate) fn from_flat(
        labels: Vec<String>,
        add: Vec<usize>,
        mul: Vec<usize>,
    ) -> Result<Self, RingError> {
        let n = labels.len();
        if n == 0 || add.len() != n * n || mul.len() != n * n {
            return Err(RingError::Malformed("table sizes do not match label count".into()));
        }
        let report = check_tables(n, &add, &mul, false);
        if !report.passed {
            return Err(RingError::Axioms(report));
        }
        Ok(Self::assemble(labels, add, mul, None))
    }

    fn assemble(
        labels: Vec<String>,
        add: Vec<usize>,
        mul: Vec<usize>,
        commutative: Option<bool>,
    ) -> Self {
        let n = labels.len();
        let neg = (0..n)
            .map(|x| (0..n).find(|&y| add[x * n + y] == 0).expect("inverse checked"))
            .collect();
        let symmetric = (0..n).all(|x| (0..n).all(|y| mul[x * n + y] == mul[y * n + x]));
        let mut h = DefaultHasher::new();
        n.hash(&mut h);
        add.hash(&mut h);
        mul.hash(&mut h);
        Self {
            id: RingId(h.finish()),
            order: n,
            labels,
            add,
            mul,
            neg,
            commutative: commutative.unwrap_or(symmetric),
        }
    }

    pub fn to_spec(&self) -> RingSpec {
        let n = self.order;
        RingSpec {
            order: n,
            labels: self.labels.clone(),
            add: self.add.chunks(n).map(<[usize]>::to_vec).collect(),
            mul: self.mul.chunks(n).map(<[usize]>::to_vec).collect(),
            commutative: Some(self.commutative),
        }
    }

    /// Re-runs the axiom check on the stored tables.
    pub fn axiom_report(&self) -> AxiomReport {
        check_tables(self.order, &self.add, &self.mul, self.commutative)
    }

    pub fn id(&self) -> RingId {
        self.id
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn elements(&self) -> Range<usize> {
        0..self.order
    }

    pub fn zero(&self) -> usize {
        0
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    #[inline]
    pub fn add(&self, x: usize, y: usize) -> usize {
        self.add[x * self.order + y]
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mul[x * self.order + y]
    }

    #[inline]
    pub fn neg(&self, x: usize) -> usize {
        self.neg[x]
    }

    #[inline]
    pub fn sub(&self, x: usize, y: usize) -> usize {
        self.add(x, self.neg[y])
    }

    pub fn is_commutative(&self) -> bool {
        self.commutative
    }

    /// The two-sided multiplicative identity, if there is one.
    pub fn one(&self) -> Option<usize> {
        self.elements()
            .find(|&e| self.elements().all(|x| self.mul(e, x) == x && self.mul(x, e) == x))
    }

    pub fn is_unitary(&self) -> bool {
        self.one().is_some()
    }

    /// `x·x = x` for every element.
    pub fn is_boolean(&self) -> bool {
        self.elements().all(|x| self.mul(x, x) == x)
    }

    pub fn is_zero_ring(&self) -> bool {
        self.mul.iter().all(|&p| p == 0)
    }

    /// Commutative, unitary with `1 ≠ 0`, and every nonzero element invertible.
    pub fn is_field(&self) -> bool {
        let Some(one) = self.one() else {
            return false;
        };
        self.order > 1
            && self.commutative
            && self
                .elements()
                .skip(1)
                .all(|x| self.elements().any(|y| self.mul(x, y) == one))
    }

    /// Additive order of a single element.
    pub fn additive_order(&self, x: usize) -> u64 {
        let mut k = 1;
        let mut acc = x;
        while acc != 0 {
            acc = self.add(acc, x);
            k += 1;
        }
        k
    }
}

impl fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteRing")
            .field("order", &self.order)
            .field("labels", &self.labels)
            .field("commutative", &self.commutative)
            .finish_non_exhaustive()
    }
}

impl PartialEq for FiniteRing {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order
            && self.add == other.add
            && self.mul == other.mul
            && self.labels == other.labels
    }
}

impl Eq for FiniteRing {}

#[cfg(test)]
mod tests {
    use super::*;

    fn zn_spec(n: usize) -> RingSpec {
        RingSpec {
            order: n,
            labels: (0..n).map(|i| i.to_string()).collect(),
            add: (0..n).map(|x| (0..n).map(|y| (x + y) % n).collect()).collect(),
            mul: (0..n).map(|x| (0..n).map(|y| (x * y) % n).collect()).collect(),
            commutative: None,
        }
    }

    #[test]
    fn z2_spec_builds() {
        let r = FiniteRing::from_spec(&zn_spec(2)).unwrap();
        assert_eq!(r.order(), 2);
        assert!(r.is_commutative());
        assert_eq!(r.one(), Some(1));
    }

    #[test]
    fn broken_distributivity_is_reported_with_witness() {
        let mut spec = zn_spec(4);
        spec.mul[1][1] = 0;
        let report = verify_axioms(&spec).unwrap();
        assert!(!report.passed);
        assert!(report.violates(Axiom::LeftDistributivity));
        let v = report
            .violations
            .iter()
            .find(|v| v.axiom == Axiom::LeftDistributivity)
            .unwrap();
        let (x, y, z) = (v.witness[0], v.witness[1], v.witness[2]);
        let m = |p: usize, q: usize| spec.mul[p][q];
        let a = |p: usize, q: usize| spec.add[p][q];
        assert_ne!(m(x, a(y, z)), a(m(x, y), m(x, z)));
        assert!(matches!(FiniteRing::from_spec(&spec), Err(RingError::Axioms(_))));
    }

    #[test]
    fn out_of_range_entries_stop_the_check() {
        let mut spec = zn_spec(3);
        spec.add[2][1] = 7;
        let report = verify_axioms(&spec).unwrap();
        assert_eq!(
            report.violations,
            vec![Violation {
                axiom: Axiom::AdditiveClosure,
                witness: vec![2, 1]
            }]
        );
    }

    #[test]
    fn nonzero_identity_index_rejected() {
        // Z2 with the labels swapped: index 1 acts as zero.
        let spec = RingSpec {
            order: 2,
            labels: vec!["1".into(), "0".into()],
            add: vec![vec![1, 0], vec![0, 1]],
            mul: vec![vec![0, 1], vec![1, 1]],
            commutative: None,
        };
        let report = verify_axioms(&spec).unwrap();
        assert!(report.violates(Axiom::AdditiveIdentity));
    }

    #[test]
    fn malformed_shapes() {
        let mut spec = zn_spec(2);
        spec.labels.pop();
        assert!(matches!(verify_axioms(&spec), Err(RingError::Malformed(_))));
        let mut spec = zn_spec(2);
        spec.mul[0].push(0);
        assert!(matches!(verify_axioms(&spec), Err(RingError::Malformed(_))));
        let mut spec = zn_spec(2);
        spec.labels[1] = "0".into();
        assert!(matches!(verify_axioms(&spec), Err(RingError::Malformed(_))));
        assert!(RingSpec::from_json("{\"order\": 1}").is_err());
    }

    #[test]
    fn declared_commutative_must_be_symmetric() {
        // [[a,b],[0,0]] over GF(2), declared commutative.
        let mut spec = RingSpec {
            order: 4,
            labels: vec!["00".into(), "01".into(), "10".into(), "11".into()],
            add: (0..4).map(|x| (0..4).map(|y| x ^ y).collect()).collect(),
            mul: (0..4)
                .map(|x: usize| {
                    (0..4)
                        .map(|y: usize| {
                            let a = x >> 1;
                            let (c, d) = (y >> 1, y & 1);
                            ((a & c) << 1) | (a & d)
                        })
                        .collect()
                })
                .collect(),
            commutative: Some(true),
        };
        assert!(verify_axioms(&spec).unwrap().violates(Axiom::Commutativity));
        spec.commutative = None;
        let r = FiniteRing::from_spec(&spec).unwrap();
        assert!(!r.is_commutative());
    }

    #[test]
    fn json_roundtrip_preserves_ring() {
        let r = FiniteRing::from_spec(&zn_spec(6)).unwrap();
        let text = r.to_spec().to_json();
        let back = FiniteRing::from_spec(&RingSpec::from_json(&text).unwrap()).unwrap();
        assert_eq!(r, back);
        assert_eq!(r.id(), back.id());
    }

    #[test]
    fn label_references_in_tables_are_rejected() {
        let text = r#"{"order":1,"labels":["0"],"add":[["0"]],"mul":[[0]]}"#;
        assert!(RingSpec::from_json(text).is_err());
    }
}
