//! The lattice of ideals of a finite ring, with materialized join and meet
//! tables.

use std::collections::HashMap;

use serde::Serialize;

use crate::bitset::ElementSet;
use crate::error::IdealError;
use crate::ideal::{all_ideals, ideal_intersection, ideal_sum, Ideal};
use crate::ring::FiniteRing;

#[derive(Debug, Clone)]
pub struct IdealLattice {
    ideals: Vec<Ideal>,
    join: Vec<usize>,
    meet: Vec<usize>,
    bottom: usize,
    top: usize,
}

/// Node list plus cover relation, for reports.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HasseDiagram {
    pub nodes: Vec<Vec<String>>,
    /// `(lower, upper)` index pairs where `upper` covers `lower`.
    pub covers: Vec<(usize, usize)>,
}

pub fn lattice_of_ideals(ring: &FiniteRing, cap: usize) -> Result<IdealLattice, IdealError> {
    IdealLattice::from_ideals(ring, all_ideals(ring, cap)?)
}

impl IdealLattice {
    /// Builds the tables from a complete, duplicate-free list of ideals.
    pub fn from_ideals(ring: &FiniteRing, ideals: Vec<Ideal>) -> Result<Self, IdealError> {
        let m = ideals.len();
        let index: HashMap<&ElementSet, usize> =
            ideals.iter().enumerate().map(|(k, i)| (i.members(), k)).collect();
        let lookup = |i: &Ideal| {
            *index
                .get(i.members())
                .expect("ideal list is missing a sum or intersection")
        };
        let mut join = vec![0; m * m];
        let mut meet = vec![0; m * m];
        for x in 0..m {
            for y in x..m {
                let j = lookup(&ideal_sum(ring, &ideals[x], &ideals[y])?);
                let w = lookup(&ideal_intersection(ring, &ideals[x], &ideals[y])?);
                join[x * m + y] = j;
                join[y * m + x] = j;
                meet[x * m + y] = w;
                meet[y * m + x] = w;
            }
        }
        let bottom = lookup(&Ideal::zero(ring));
        let top = lookup(&Ideal::full(ring));
        let lattice = Self {
            ideals,
            join,
            meet,
            bottom,
            top,
        };
        debug_assert!(lattice.joins_are_least());
        Ok(lattice)
    }

    fn joins_are_least(&self) -> bool {
        let m = self.len();
        (0..m).all(|x| {
            (0..m).all(|y| {
                let j = self.join(x, y);
                self.leq(x, j)
                    && self.leq(y, j)
                    && (0..m).all(|z| !(self.leq(x, z) && self.leq(y, z)) || self.leq(j, z))
            })
        })
    }

    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ideals.is_empty()
    }

    pub fn ideals(&self) -> &[Ideal] {
        &self.ideals
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    #[inline]
    pub fn join(&self, x: usize, y: usize) -> usize {
        self.join[x * self.len() + y]
    }

    #[inline]
    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.meet[x * self.len() + y]
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.meet(x, y) == x
    }

    pub fn position(&self, ideal: &Ideal) -> Option<usize> {
        self.ideals.iter().position(|i| i == ideal)
    }

    pub fn hasse(&self, ring: &FiniteRing) -> HasseDiagram {
        let m = self.len();
        let below = |x: usize, y: usize| x != y && self.leq(x, y);
        let covers = (0..m)
            .flat_map(|x| (0..m).map(move |y| (x, y)))
            .filter(|&(x, y)| below(x, y) && !(0..m).any(|z| below(x, z) && below(z, y)))
            .collect();
        HasseDiagram {
            nodes: self
                .ideals
                .iter()
                .map(|i| i.labels(ring).into_iter().map(String::from).collect())
                .collect(),
            covers,
        }
    }
}

/// `x ∧ (y ∨ z) = (x ∧ y) ∨ (x ∧ z)` for all triples.
pub fn is_distributive(l: &IdealLattice) -> bool {
    let m = l.len();
    (0..m).all(|x| {
        (0..m).all(|y| (0..m).all(|z| l.meet(x, l.join(y, z)) == l.join(l.meet(x, y), l.meet(x, z))))
    })
}

/// `x ∨ (y ∧ z) = (x ∨ y) ∧ z` for all triples with `x ≤ z`.
pub fn is_modular(l: &IdealLattice) -> bool {
    let m = l.len();
    (0..m).all(|x| {
        (0..m)
            .filter(|&z| l.leq(x, z))
            .all(|z| (0..m).all(|y| l.join(x, l.meet(y, z)) == l.meet(l.join(x, y), z)))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::builtin_ring;
    use crate::ideal::DEFAULT_IDEAL_CAP;
    use crate::product::direct_product;

    fn lattice(name: &str) -> IdealLattice {
        lattice_of_ideals(&builtin_ring(name).unwrap(), DEFAULT_IDEAL_CAP).unwrap()
    }

    #[test]
    fn chains() {
        for (name, size) in [("z2", 2), ("z4", 3), ("z8", 4)] {
            let l = lattice(name);
            assert_eq!(l.len(), size);
            assert!(is_distributive(&l));
            assert!(is_modular(&l));
            let h = l.hasse(&builtin_ring(name).unwrap());
            assert_eq!(h.covers.len(), size - 1);
        }
    }

    #[test]
    fn kleinian_zero_is_m3() {
        let k = builtin_ring("kleinian-zero").unwrap();
        let l = lattice("kleinian-zero");
        assert_eq!(l.len(), 5);
        assert!(!is_distributive(&l));
        assert!(is_modular(&l));
        let atoms: Vec<usize> = (0..5)
            .filter(|&x| x != l.bottom() && x != l.top())
            .collect();
        assert_eq!(atoms.len(), 3);
        for &x in &atoms {
            for &y in &atoms {
                if x != y {
                    assert_eq!(l.join(x, y), l.top());
                    assert_eq!(l.meet(x, y), l.bottom());
                }
            }
        }
        assert_eq!(l.hasse(&k).covers.len(), 6);
    }

    #[test]
    fn z4_square_is_distributive() {
        let z4 = builtin_ring("z4").unwrap();
        let p = direct_product(&z4, &z4);
        let l = lattice_of_ideals(p.carrier(), DEFAULT_IDEAL_CAP).unwrap();
        assert_eq!(l.len(), 9);
        assert!(is_distributive(&l));
    }

    #[test]
    fn pentagon_tables_are_not_modular() {
        // Hand-built N5 check on the predicate itself, via a lattice whose
        // tables we overwrite: 0 < a < c < 1, 0 < b < 1.
        let z2 = builtin_ring("z2").unwrap();
        let mut l = lattice("z8");
        l.ideals.push(Ideal::zero(&z2));
        let (o, a, c, i, b) = (0, 1, 2, 3, 4);
        let order = [o, a, c, i, b];
        let leq = |x: usize, y: usize| {
            x == y || x == o || y == i || (x == a && y == c)
        };
        let m = 5;
        l.join = vec![0; m * m];
        l.meet = vec![0; m * m];
        for &x in &order {
            for &y in &order {
                let j = order
                    .iter()
                    .copied()
                    .filter(|&z| leq(x, z) && leq(y, z))
                    .find(|&z| order.iter().all(|&w| !(leq(x, w) && leq(y, w)) || leq(z, w)))
                    .unwrap();
                let w = order
                    .iter()
                    .copied()
                    .filter(|&z| leq(z, x) && leq(z, y))
                    .find(|&z| order.iter().all(|&w| !(leq(w, x) && leq(w, y)) || leq(w, z)))
                    .unwrap();
                l.join[x * m + y] = j;
                l.meet[x * m + y] = w;
            }
        }
        assert!(!is_modular(&l));
        assert!(!is_distributive(&l));
    }
}
