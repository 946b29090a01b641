//! Direct decomposability of ideals of `R1 × R2`.
//!
//! An ideal `I` of the product is directly decomposable when it equals
//! `I1 × I2` for ideals of the factors, and skew otherwise. Four equivalent
//! characterizations are evaluated independently by [`theorem1_profile`];
//! the fast path used everywhere else is the elementwise test: `(a,b) ∈ I`
//! implies `(a,0), (0,b) ∈ I`.

use rayon::prelude::*;
use serde::Serialize;

use crate::bitset::ElementSet;
use crate::error::IdealError;
use crate::ideal::{all_ideals, ideal_intersection, ideal_sum, Ideal};
use crate::lattice::{is_distributive, lattice_of_ideals};
use crate::product::{direct_product, ProductRing, Side};
use crate::ring::FiniteRing;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DecompositionResult {
    Decomposable { left: Ideal, right: Ideal },
    /// `witness = (a,b) ∈ I` with `(a,0) ∉ I` or `(0,b) ∉ I`, encoded in the
    /// carrier.
    Skew { witness: usize },
}

impl DecompositionResult {
    pub fn is_decomposable(&self) -> bool {
        matches!(self, DecompositionResult::Decomposable { .. })
    }
}

/// One boolean per equivalent condition:
/// - `cond_i`: `π1(I) × π2(I) = I`
/// - `cond_ii`: `(R1×0) ∩ ((0×R2) + I) ⊆ I` and `((R1×0) + I) ∩ (0×R2) ⊆ I`
/// - `cond_iii`: `(a,b) ∈ I ⇒ (a,0), (0,b) ∈ I`
/// - `cond_iv`: `((R1×0) + I) ∩ ((0×R2) + I) = I`
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Theorem1Profile {
    pub cond_i: bool,
    pub cond_ii: bool,
    pub cond_iii: bool,
    pub cond_iv: bool,
}

impl Theorem1Profile {
    pub fn agrees(&self) -> bool {
        let v = [self.cond_ii, self.cond_iii, self.cond_iv];
        v.iter().all(|&c| c == self.cond_i)
    }
}

/// Image of `i` under the projection onto one factor, as an ideal there.
pub fn project(p: &ProductRing, i: &Ideal, side: Side) -> Result<Ideal, IdealError> {
    i.belongs_to(p.carrier())?;
    let factor = p.factor(side);
    let image = ElementSet::from_indices(factor.order(), i.iter().map(|k| p.project_element(k, side)));
    Ok(Ideal::new(factor, image).expect("image of an ideal under a projection is an ideal"))
}

fn first_skew_witness(p: &ProductRing, i: &Ideal) -> Option<usize> {
    i.iter().find(|&k| {
        let (a, b) = p.decode(k);
        !i.contains(p.encode(a, 0)) || !i.contains(p.encode(0, b))
    })
}

pub fn is_directly_decomposable(p: &ProductRing, i: &Ideal) -> Result<bool, IdealError> {
    i.belongs_to(p.carrier())?;
    Ok(first_skew_witness(p, i).is_none())
}

/// `R1 × {0}` or `{0} × R2` inside the carrier.
pub fn axis_ideal(p: &ProductRing, side: Side) -> Ideal {
    let (n1, n2) = (p.left().order(), p.right().order());
    let members = match side {
        Side::Left => ElementSet::from_indices(n1 * n2, (0..n1).map(|a| p.encode(a, 0))),
        Side::Right => ElementSet::from_indices(n1 * n2, (0..n2).map(|b| p.encode(0, b))),
    };
    Ideal::new(p.carrier(), members).expect("axis of a product is an ideal")
}

/// `I1 × I2` as a subset of the carrier.
pub fn product_set(p: &ProductRing, left: &Ideal, right: &Ideal) -> ElementSet {
    let n = p.carrier().order();
    ElementSet::from_indices(
        n,
        left.iter().flat_map(|a| right.iter().map(move |b| p.encode(a, b))),
    )
}

pub fn theorem1_profile(p: &ProductRing, i: &Ideal) -> Result<Theorem1Profile, IdealError> {
    let c = p.carrier();
    i.belongs_to(c)?;

    let pi1 = project(p, i, Side::Left)?;
    let pi2 = project(p, i, Side::Right)?;
    let cond_i = &product_set(p, &pi1, &pi2) == i.members();

    let r1 = axis_ideal(p, Side::Left);
    let r2 = axis_ideal(p, Side::Right);
    let r1_plus_i = ideal_sum(c, &r1, i)?;
    let r2_plus_i = ideal_sum(c, &r2, i)?;

    let cond_ii = ideal_intersection(c, &r1, &r2_plus_i)?.is_subset(i)
        && ideal_intersection(c, &r1_plus_i, &r2)?.is_subset(i);

    let cond_iii = i.iter().all(|k| {
        let (a, b) = p.decode(k);
        i.contains(p.encode(a, 0)) && i.contains(p.encode(0, b))
    });

    let cond_iv = &ideal_intersection(c, &r1_plus_i, &r2_plus_i)? == i;

    Ok(Theorem1Profile {
        cond_i,
        cond_ii,
        cond_iii,
        cond_iv,
    })
}

pub fn decompose(p: &ProductRing, i: &Ideal) -> Result<DecompositionResult, IdealError> {
    i.belongs_to(p.carrier())?;
    if let Some(witness) = first_skew_witness(p, i) {
        return Ok(DecompositionResult::Skew { witness });
    }
    let left = project(p, i, Side::Left)?;
    let right = project(p, i, Side::Right)?;
    assert_eq!(
        &product_set(p, &left, &right),
        i.members(),
        "projections of a decomposable ideal must rebuild it"
    );
    Ok(DecompositionResult::Decomposable { left, right })
}

/// The skew ideals of the product, sorted by mask.
pub fn skew_ideals(p: &ProductRing, cap: usize) -> Result<Vec<Ideal>, IdealError> {
    let ideals = all_ideals(p.carrier(), cap)?;
    Ok(skew_among(p, ideals))
}

/// Filters an already enumerated ideal list of the carrier.
pub fn skew_among(p: &ProductRing, ideals: Vec<Ideal>) -> Vec<Ideal> {
    let mut skew: Vec<Ideal> = ideals
        .into_par_iter()
        .filter(|i| first_skew_witness(p, i).is_some())
        .collect();
    skew.sort();
    skew
}

/// Evaluates both sides of: `Id(R1×R2)` is distributive iff every ideal of
/// `R1×R2` is decomposable and `Id R1`, `Id R2` are distributive. Returns
/// whether the two sides agree.
pub fn check_distributivity_corollary(
    r1: &FiniteRing,
    r2: &FiniteRing,
    cap: usize,
) -> Result<bool, IdealError> {
    Ok(distributivity_sides(r1, r2, cap)?.agree())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DistributivitySides {
    pub product_distributive: bool,
    pub no_skew: bool,
    pub left_distributive: bool,
    pub right_distributive: bool,
}

impl DistributivitySides {
    pub fn agree(&self) -> bool {
        self.product_distributive == (self.no_skew && self.left_distributive && self.right_distributive)
    }
}

pub fn distributivity_sides(
    r1: &FiniteRing,
    r2: &FiniteRing,
    cap: usize,
) -> Result<DistributivitySides, IdealError> {
    let p = direct_product(r1, r2);
    let lattice = lattice_of_ideals(p.carrier(), cap)?;
    let no_skew = skew_among(&p, lattice.ideals().to_vec()).is_empty();
    Ok(DistributivitySides {
        product_distributive: is_distributive(&lattice),
        no_skew,
        left_distributive: is_distributive(&lattice_of_ideals(r1, cap)?),
        right_distributive: is_distributive(&lattice_of_ideals(r2, cap)?),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::builtin_ring;
    use crate::ideal::{ideal_closure, DEFAULT_IDEAL_CAP};

    fn kk() -> (FiniteRing, ProductRing) {
        let k = builtin_ring("kleinian-zero").unwrap();
        let p = direct_product(&k, &k);
        (k, p)
    }

    fn kleinian_skew(k: &FiniteRing, p: &ProductRing) -> Ideal {
        let ac = p.encode(k.index_of("a").unwrap(), k.index_of("c").unwrap());
        ideal_closure(p.carrier(), &[ac]).unwrap()
    }

    #[test]
    fn projections_of_kleinian_skew_ideal() {
        let (k, p) = kk();
        let i = kleinian_skew(&k, &p);
        assert_eq!(project(&p, &i, Side::Left).unwrap().labels(&k), vec!["0", "a"]);
        assert_eq!(project(&p, &i, Side::Right).unwrap().labels(&k), vec!["0", "c"]);
        let z = Ideal::zero(p.carrier());
        assert_eq!(project(&p, &z, Side::Right).unwrap(), Ideal::zero(&k));
        assert_eq!(project(&p, &Ideal::full(p.carrier()), Side::Left).unwrap(), Ideal::full(&k));
    }

    #[test]
    fn kleinian_skew_profile_is_all_false() {
        let (k, p) = kk();
        let i = kleinian_skew(&k, &p);
        assert!(!is_directly_decomposable(&p, &i).unwrap());
        let prof = theorem1_profile(&p, &i).unwrap();
        assert_eq!(
            prof,
            Theorem1Profile {
                cond_i: false,
                cond_ii: false,
                cond_iii: false,
                cond_iv: false
            }
        );
        let witness = p.encode(k.index_of("a").unwrap(), k.index_of("c").unwrap());
        assert_eq!(decompose(&p, &i).unwrap(), DecompositionResult::Skew { witness });
        assert!(skew_ideals(&p, DEFAULT_IDEAL_CAP).unwrap().contains(&i));
    }

    #[test]
    fn zero_ideal_is_decomposable() {
        let (k, p) = kk();
        let z = Ideal::zero(p.carrier());
        assert!(theorem1_profile(&p, &z).unwrap().agrees());
        assert!(theorem1_profile(&p, &z).unwrap().cond_i);
        assert_eq!(
            decompose(&p, &z).unwrap(),
            DecompositionResult::Decomposable {
                left: Ideal::zero(&k),
                right: Ideal::zero(&k)
            }
        );
    }

    #[test]
    fn factor_products_are_decomposable() {
        let (k, p) = kk();
        for i1 in all_ideals(&k, DEFAULT_IDEAL_CAP).unwrap() {
            for i2 in all_ideals(&k, DEFAULT_IDEAL_CAP).unwrap() {
                let set = product_set(&p, &i1, &i2);
                let i = Ideal::new(p.carrier(), set).expect("I1 x I2 is an ideal");
                assert!(is_directly_decomposable(&p, &i).unwrap());
            }
        }
    }

    #[test]
    fn boolean_times_unitary_generated_ideal() {
        let z2 = builtin_ring("z2").unwrap();
        let z4 = builtin_ring("z4").unwrap();
        let p = direct_product(&z2, &z4);
        let i = ideal_closure(p.carrier(), &[p.encode(1, 2)]).unwrap();
        match decompose(&p, &i).unwrap() {
            DecompositionResult::Decomposable { left, right } => {
                assert_eq!(left.iter().collect::<Vec<_>>(), vec![0, 1]);
                assert_eq!(right.iter().collect::<Vec<_>>(), vec![0, 2]);
            }
            other => panic!("expected decomposable, got {other:?}"),
        }
        assert!(skew_ideals(&p, DEFAULT_IDEAL_CAP).unwrap().is_empty());
    }

    #[test]
    fn z4_square_profiles() {
        let z4 = builtin_ring("z4").unwrap();
        let p = direct_product(&z4, &z4);
        for i in all_ideals(p.carrier(), DEFAULT_IDEAL_CAP).unwrap() {
            let prof = theorem1_profile(&p, &i).unwrap();
            assert!(prof.cond_i && prof.agrees());
        }
        assert!(skew_ideals(&p, DEFAULT_IDEAL_CAP).unwrap().is_empty());
    }

    #[test]
    fn distributivity_corollary_examples() {
        let z4 = builtin_ring("z4").unwrap();
        let sides = distributivity_sides(&z4, &z4, DEFAULT_IDEAL_CAP).unwrap();
        assert!(sides.product_distributive && sides.agree());

        let k = builtin_ring("kleinian-zero").unwrap();
        let sides = distributivity_sides(&k, &k, DEFAULT_IDEAL_CAP).unwrap();
        assert!(!sides.product_distributive);
        assert!(!sides.no_skew && !sides.left_distributive);
        assert!(sides.agree());

        let z2 = builtin_ring("z2").unwrap();
        assert!(check_distributivity_corollary(&z2, &z2, DEFAULT_IDEAL_CAP).unwrap());
    }

    #[test]
    fn mismatched_ideal_rejected() {
        let (k, p) = kk();
        let i = Ideal::full(&k);
        assert_eq!(theorem1_profile(&p, &i), Err(IdealError::RingMismatch));
        assert_eq!(project(&p, &i, Side::Left), Err(IdealError::RingMismatch));
    }
}
