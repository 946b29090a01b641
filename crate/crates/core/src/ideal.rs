//! Ideals of finite rings: closure, membership test, and enumeration.

use std::collections::{HashSet, VecDeque};

use crate::bitset::ElementSet;
use crate::error::IdealError;
use crate::ring::{FiniteRing, RingId};

/// Default bound on the number of ideals [`all_ideals`] will produce.
pub const DEFAULT_IDEAL_CAP: usize = 1 << 20;

/// A two-sided ideal of a particular ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ideal {
    ring: RingId,
    members: ElementSet,
}

impl Ideal {
    /// Wraps a set that the caller knows to be an ideal of `ring`.
    pub(crate) fn from_closed(ring: &FiniteRing, members: ElementSet) -> Self {
        debug_assert!(is_ideal_set(ring, &members));
        Self {
            ring: ring.id(),
            members,
        }
    }

    /// Checks `members` and wraps it if it is an ideal of `ring`.
    pub fn new(ring: &FiniteRing, members: ElementSet) -> Option<Self> {
        (members.universe() == ring.order() && is_ideal_set(ring, &members))
            .then(|| Self::from_closed(ring, members))
    }

    pub fn zero(ring: &FiniteRing) -> Self {
        Self::from_closed(ring, ElementSet::from_indices(ring.order(), [0]))
    }

    pub fn full(ring: &FiniteRing) -> Self {
        Self::from_closed(ring, ElementSet::full(ring.order()))
    }

    pub fn ring_id(&self) -> RingId {
        self.ring
    }

    pub fn members(&self) -> &ElementSet {
        &self.members
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    /// Never true: every ideal contains zero.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_subset(&self, other: &Ideal) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter()
    }

    pub fn labels<'r>(&self, ring: &'r FiniteRing) -> Vec<&'r str> {
        self.iter().map(|x| ring.label(x)).collect()
    }

    pub(crate) fn belongs_to(&self, ring: &FiniteRing) -> Result<(), IdealError> {
        if self.ring == ring.id() {
            Ok(())
        } else {
            Err(IdealError::RingMismatch)
        }
    }
}

fn is_ideal_set(ring: &FiniteRing, s: &ElementSet) -> bool {
    if s.is_empty() {
        return false;
    }
    s.iter().all(|x| {
        s.iter().all(|y| s.contains(ring.sub(x, y)))
            && ring
                .elements()
                .all(|r| s.contains(ring.mul(x, r)) && s.contains(ring.mul(r, x)))
    })
}

fn check_range(ring: &FiniteRing, items: impl IntoIterator<Item = usize>) -> Result<(), IdealError> {
    for index in items {
        if index >= ring.order() {
            return Err(IdealError::OutOfRange {
                index,
                order: ring.order(),
            });
        }
    }
    Ok(())
}

/// True iff `s` is nonempty and closed under subtraction and under
/// multiplication by ring elements on both sides.
pub fn is_ideal(ring: &FiniteRing, s: &[usize]) -> Result<bool, IdealError> {
    check_range(ring, s.iter().copied())?;
    Ok(is_ideal_set(ring, &ElementSet::from_indices(ring.order(), s.iter().copied())))
}

/// Saturates an already-closed set with extra generators.
fn saturate(ring: &FiniteRing, mut set: ElementSet, generators: impl IntoIterator<Item = usize>) -> ElementSet {
    let mut work: Vec<usize> = generators.into_iter().filter(|&g| !set.contains(g)).collect();
    if set.is_empty() {
        work.push(ring.zero());
    }
    while let Some(x) = work.pop() {
        if !set.insert(x) {
            continue;
        }
        for y in set.iter() {
            for z in [ring.sub(x, y), ring.sub(y, x)] {
                if !set.contains(z) {
                    work.push(z);
                }
            }
        }
        for r in ring.elements() {
            for z in [ring.mul(x, r), ring.mul(r, x)] {
                if !set.contains(z) {
                    work.push(z);
                }
            }
        }
    }
    set
}

/// The smallest ideal containing `generators`.
pub fn ideal_closure(ring: &FiniteRing, generators: &[usize]) -> Result<Ideal, IdealError> {
    check_range(ring, generators.iter().copied())?;
    let set = saturate(ring, ElementSet::empty(ring.order()), generators.iter().copied());
    Ok(Ideal::from_closed(ring, set))
}

/// The smallest ideal containing `ideal` and `extra`.
pub fn extend_ideal(ring: &FiniteRing, ideal: &Ideal, extra: &[usize]) -> Result<Ideal, IdealError> {
    ideal.belongs_to(ring)?;
    check_range(ring, extra.iter().copied())?;
    Ok(Ideal::from_closed(
        ring,
        saturate(ring, ideal.members.clone(), extra.iter().copied()),
    ))
}

/// Every ideal of `ring`, sorted by size and then by mask.
///
/// Breadth-first from `{0}`: each discovered ideal is extended by one
/// outside element and re-closed. Every ideal is reached because it is the
/// closure of its own elements.
pub fn all_ideals(ring: &FiniteRing, cap: usize) -> Result<Vec<Ideal>, IdealError> {
    let zero = Ideal::zero(ring);
    let mut seen: HashSet<ElementSet> = HashSet::from([zero.members.clone()]);
    let mut queue = VecDeque::from([zero.members]);
    let mut found = Vec::new();
    if cap == 0 {
        return Err(IdealError::CapExceeded { cap });
    }
    while let Some(set) = queue.pop_front() {
        for g in ring.elements().filter(|&g| !set.contains(g)) {
            let next = saturate(ring, set.clone(), [g]);
            if !seen.contains(&next) {
                if seen.len() >= cap {
                    return Err(IdealError::CapExceeded { cap });
                }
                seen.insert(next.clone());
                queue.push_back(next);
            }
        }
        found.push(set);
    }
    found.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(found
        .into_iter()
        .map(|members| Ideal {
            ring: ring.id(),
            members,
        })
        .collect())
}

/// `{x + y : x ∈ i, y ∈ j}`.
pub fn ideal_sum(ring: &FiniteRing, i: &Ideal, j: &Ideal) -> Result<Ideal, IdealError> {
    i.belongs_to(ring)?;
    j.belongs_to(ring)?;
    let mut set = ElementSet::empty(ring.order());
    for x in i.iter() {
        for y in j.iter() {
            set.insert(ring.add(x, y));
        }
    }
    debug_assert!(is_ideal_set(ring, &set), "sum of ideals is not closed");
    Ok(Ideal::from_closed(ring, set))
}

pub fn ideal_intersection(ring: &FiniteRing, i: &Ideal, j: &Ideal) -> Result<Ideal, IdealError> {
    i.belongs_to(ring)?;
    j.belongs_to(ring)?;
    Ok(Ideal::from_closed(ring, i.members.intersection(&j.members)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::builtin_ring;
    use crate::product::direct_product;

    #[test]
    fn closure_in_kleinian_zero() {
        let k = builtin_ring("kleinian-zero").unwrap();
        let a = k.index_of("a").unwrap();
        let i = ideal_closure(&k, &[a]).unwrap();
        assert_eq!(i.iter().collect::<Vec<_>>(), vec![0, a]);
    }

    #[test]
    fn closure_of_nothing_is_zero_ideal() {
        for name in ["z4", "nc4", "gf4"] {
            let r = builtin_ring(name).unwrap();
            assert_eq!(ideal_closure(&r, &[]).unwrap(), Ideal::zero(&r));
            assert_eq!(ideal_closure(&r, &[0]).unwrap(), Ideal::zero(&r));
        }
    }

    #[test]
    fn kleinian_square_principal_ideal() {
        let k = builtin_ring("kleinian-zero").unwrap();
        let p = direct_product(&k, &k);
        let ac = p.encode(k.index_of("a").unwrap(), k.index_of("c").unwrap());
        let i = ideal_closure(p.carrier(), &[ac]).unwrap();
        assert_eq!(i.labels(p.carrier()), vec!["(0,0)", "(a,c)"]);
    }

    #[test]
    fn is_ideal_cases() {
        let z4 = builtin_ring("z4").unwrap();
        assert!(is_ideal(&z4, &[0, 2]).unwrap());
        assert!(!is_ideal(&z4, &[0, 1]).unwrap());
        assert!(!is_ideal(&z4, &[]).unwrap());
        assert_eq!(
            is_ideal(&z4, &[5]),
            Err(IdealError::OutOfRange { index: 5, order: 4 })
        );
        assert!(ideal_closure(&z4, &[4]).is_err());
    }

    #[test]
    fn enumeration_counts() {
        let count = |name: &str| all_ideals(&builtin_ring(name).unwrap(), DEFAULT_IDEAL_CAP).unwrap().len();
        assert_eq!(count("z2"), 2);
        assert_eq!(count("z4"), 3);
        assert_eq!(count("kleinian-zero"), 5);
        let z2 = builtin_ring("z2").unwrap();
        let ideals = all_ideals(&z2, DEFAULT_IDEAL_CAP).unwrap();
        assert_eq!(ideals[0], Ideal::zero(&z2));
        assert_eq!(ideals[1], Ideal::full(&z2));
    }

    #[test]
    fn cap_is_enforced() {
        let k = builtin_ring("kleinian-zero").unwrap();
        assert_eq!(all_ideals(&k, 4), Err(IdealError::CapExceeded { cap: 4 }));
        assert!(all_ideals(&k, 5).is_ok());
    }

    #[test]
    fn sums_and_intersections() {
        let z4 = builtin_ring("z4").unwrap();
        let two = ideal_closure(&z4, &[2]).unwrap();
        assert_eq!(ideal_sum(&z4, &Ideal::zero(&z4), &two).unwrap(), two);

        let k = builtin_ring("kleinian-zero").unwrap();
        let a = ideal_closure(&k, &[1]).unwrap();
        let b = ideal_closure(&k, &[2]).unwrap();
        assert_eq!(ideal_sum(&k, &a, &b).unwrap(), Ideal::full(&k));
        assert_eq!(ideal_intersection(&k, &a, &b).unwrap(), Ideal::zero(&k));
    }

    #[test]
    fn mixed_rings_rejected() {
        let z4 = builtin_ring("z4").unwrap();
        let k = builtin_ring("kleinian-zero").unwrap();
        let i = Ideal::full(&z4);
        assert_eq!(ideal_sum(&k, &i, &Ideal::zero(&k)), Err(IdealError::RingMismatch));
        assert_eq!(extend_ideal(&k, &i, &[1]), Err(IdealError::RingMismatch));
    }
}
