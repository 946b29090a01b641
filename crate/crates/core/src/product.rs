//! Direct products of two finite rings.

use crate::ring::FiniteRing;

/// `left × right`, with carrier element `k` encoding the pair
/// `(k / |right|, k % |right|)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductRing {
    left: FiniteRing,
    right: FiniteRing,
    carrier: FiniteRing,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn index(self) -> u8 {
        match self {
            Side::Left => 1,
            Side::Right => 2,
        }
    }
}

pub fn direct_product(left: &FiniteRing, right: &FiniteRing) -> ProductRing {
    let (n1, n2) = (left.order(), right.order());
    let n = n1 * n2;
    let decode = |k: usize| (k / n2, k % n2);
    let encode = |a: usize, b: usize| a * n2 + b;
    let labels = (0..n)
        .map(|k| {
            let (a, b) = decode(k);
            format!("({},{})", left.label(a), right.label(b))
        })
        .collect();
    let mut add = Vec::with_capacity(n * n);
    let mut mul = Vec::with_capacity(n * n);
    for x in 0..n {
        let (a, b) = decode(x);
        for y in 0..n {
            let (c, d) = decode(y);
            add.push(encode(left.add(a, c), right.add(b, d)));
            mul.push(encode(left.mul(a, c), right.mul(b, d)));
        }
    }
    let carrier = FiniteRing::from_flat(labels, add, mul).expect("product of rings is a ring");
    ProductRing {
        left: left.clone(),
        right: right.clone(),
        carrier,
    }
}

impl ProductRing {
    pub fn left(&self) -> &FiniteRing {
        &self.left
    }

    pub fn right(&self) -> &FiniteRing {
        &self.right
    }

    pub fn carrier(&self) -> &FiniteRing {
        &self.carrier
    }

    pub fn factor(&self, side: Side) -> &FiniteRing {
        match side {
            Side::Left => &self.left,
            Side::Right => &self.right,
        }
    }

    pub fn into_carrier(self) -> FiniteRing {
        self.carrier
    }

    #[inline]
    pub fn encode(&self, a: usize, b: usize) -> usize {
        debug_assert!(a < self.left.order() && b < self.right.order());
        a * self.right.order() + b
    }

    #[inline]
    pub fn decode(&self, k: usize) -> (usize, usize) {
        (k / self.right.order(), k % self.right.order())
    }

    #[inline]
    pub fn project_element(&self, k: usize, side: Side) -> usize {
        let (a, b) = self.decode(k);
        match side {
            Side::Left => a,
            Side::Right => b,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{builtin_ring, CATALOG};

    #[test]
    fn z2_times_z2() {
        let z2 = builtin_ring("z2").unwrap();
        let p = direct_product(&z2, &z2);
        assert_eq!(p.carrier().order(), 4);
        let s = p.carrier().add(p.encode(1, 0), p.encode(1, 1));
        assert_eq!(p.decode(s), (0, 1));
        assert_eq!(p.carrier().label(s), "(0,1)");
    }

    #[test]
    fn kleinian_square_is_zero_ring() {
        let k = builtin_ring("kleinian-zero").unwrap();
        let p = direct_product(&k, &k);
        assert_eq!(p.carrier().order(), 16);
        assert!(p.carrier().is_zero_ring());
    }

    #[test]
    fn z2_times_z4_product() {
        let p = direct_product(&builtin_ring("z2").unwrap(), &builtin_ring("z4").unwrap());
        assert_eq!(p.carrier().order(), 8);
        let x = p.encode(1, 2);
        assert_eq!(p.decode(p.carrier().mul(x, x)), (1, 0));
        assert_eq!(p.carrier().zero(), p.encode(0, 0));
    }

    #[test]
    fn projections_are_homomorphisms() {
        for n1 in CATALOG {
            for n2 in ["z3", "kleinian-zero", "nc4"] {
                let (r1, r2) = (builtin_ring(n1).unwrap(), builtin_ring(n2).unwrap());
                let p = direct_product(&r1, &r2);
                let c = p.carrier();
                for k in c.elements() {
                    assert_eq!(p.encode(p.decode(k).0, p.decode(k).1), k);
                }
                for x in c.elements() {
                    for y in c.elements() {
                        let (a, b) = p.decode(x);
                        let (e, f) = p.decode(y);
                        assert_eq!(p.decode(c.add(x, y)), (r1.add(a, e), r2.add(b, f)));
                        assert_eq!(p.decode(c.mul(x, y)), (r1.mul(a, e), r2.mul(b, f)));
                    }
                }
            }
        }
    }
}
