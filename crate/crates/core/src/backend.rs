//! A common interface over the two ideal engines, plus the verdict types
//! shared by the analyses built on top of it.

use std::fmt::Debug;
use std::sync::Arc;

use serde::Serialize;

use crate::error::Result;
use crate::ideal::{RingIdeal, SemigroupRing};
use crate::monomial::{MonomialIdeal, MonomialQuotientRing};

/// Ideal arithmetic in a local ring whose ideals are exact finite data.
pub trait IdealBackend {
    type Ideal: Clone + PartialEq + Debug;

    fn unit(&self) -> Self::Ideal;
    fn maximal(&self) -> Self::Ideal;
    fn sum(&self, a: &Self::Ideal, b: &Self::Ideal) -> Result<Self::Ideal>;
    fn product(&self, a: &Self::Ideal, b: &Self::Ideal) -> Result<Self::Ideal>;
    fn intersect(&self, a: &Self::Ideal, b: &Self::Ideal) -> Result<Self::Ideal>;
    fn colon(&self, a: &Self::Ideal, b: &Self::Ideal) -> Result<Self::Ideal>;
    fn is_subset(&self, a: &Self::Ideal, b: &Self::Ideal) -> Result<bool>;
    /// `λ(R/A)`; fails with `InfiniteLength` when not finite.
    fn colength(&self, a: &Self::Ideal) -> Result<u32>;
    /// `μ(A)`.
    fn num_generators(&self, a: &Self::Ideal) -> u32;
    /// Human-readable echelon or staircase data.
    fn summary(&self, a: &Self::Ideal) -> String;

    /// Whether the ring is a one-dimensional domain, so that every nonzero
    /// element is regular and colon criteria for principal reductions apply.
    fn is_one_dimensional_domain(&self) -> bool {
        false
    }

    /// Whether the ring itself is Gorenstein, when the backend can decide it.
    fn is_gorenstein(&self) -> Option<bool> {
        None
    }

    fn power(&self, a: &Self::Ideal, n: u32) -> Result<Self::Ideal> {
        let mut acc = self.unit();
        for _ in 0..n {
            acc = self.product(&acc, a)?;
        }
        Ok(acc)
    }

    fn maximal_times(&self, a: &Self::Ideal) -> Result<Self::Ideal> {
        self.product(&self.maximal(), a)
    }
}

impl IdealBackend for Arc<SemigroupRing> {
    type Ideal = RingIdeal;

    fn unit(&self) -> RingIdeal {
        self.unit_ideal()
    }

    fn maximal(&self) -> RingIdeal {
        self.maximal_ideal()
    }

    fn sum(&self, a: &RingIdeal, b: &RingIdeal) -> Result<RingIdeal> {
        a.sum(b)
    }

    fn product(&self, a: &RingIdeal, b: &RingIdeal) -> Result<RingIdeal> {
        a.product(b)
    }

    fn intersect(&self, a: &RingIdeal, b: &RingIdeal) -> Result<RingIdeal> {
        a.intersect(b)
    }

    fn colon(&self, a: &RingIdeal, b: &RingIdeal) -> Result<RingIdeal> {
        a.colon(b)
    }

    fn is_subset(&self, a: &RingIdeal, b: &RingIdeal) -> Result<bool> {
        a.is_subset(b)
    }

    fn colength(&self, a: &RingIdeal) -> Result<u32> {
        Ok(a.colength())
    }

    fn num_generators(&self, a: &RingIdeal) -> u32 {
        a.num_generators()
    }

    fn summary(&self, a: &RingIdeal) -> String {
        a.summary()
    }

    fn is_one_dimensional_domain(&self) -> bool {
        true
    }

    fn is_gorenstein(&self) -> Option<bool> {
        Some(self.semigroup().is_symmetric())
    }

    fn power(&self, a: &RingIdeal, n: u32) -> Result<RingIdeal> {
        a.power(n)
    }

    fn maximal_times(&self, a: &RingIdeal) -> Result<RingIdeal> {
        Ok(a.maximal_times())
    }
}

impl IdealBackend for MonomialQuotientRing {
    type Ideal = MonomialIdeal;

    fn unit(&self) -> MonomialIdeal {
        self.unit_ideal()
    }

    fn maximal(&self) -> MonomialIdeal {
        self.maximal_ideal()
    }

    fn sum(&self, a: &MonomialIdeal, b: &MonomialIdeal) -> Result<MonomialIdeal> {
        Ok(MonomialQuotientRing::sum(self, a, b))
    }

    fn product(&self, a: &MonomialIdeal, b: &MonomialIdeal) -> Result<MonomialIdeal> {
        Ok(MonomialQuotientRing::product(self, a, b))
    }

    fn intersect(&self, a: &MonomialIdeal, b: &MonomialIdeal) -> Result<MonomialIdeal> {
        Ok(MonomialQuotientRing::intersect(self, a, b))
    }

    fn colon(&self, a: &MonomialIdeal, b: &MonomialIdeal) -> Result<MonomialIdeal> {
        Ok(MonomialQuotientRing::colon(self, a, b))
    }

    fn is_subset(&self, a: &MonomialIdeal, b: &MonomialIdeal) -> Result<bool> {
        Ok(a.is_subset(b))
    }

    fn colength(&self, a: &MonomialIdeal) -> Result<u32> {
        Ok(self.length(a).finite()? as u32)
    }

    fn num_generators(&self, a: &MonomialIdeal) -> u32 {
        self.min_generators(a)
    }

    fn summary(&self, a: &MonomialIdeal) -> String {
        self.format_ideal(a)
    }

    fn power(&self, a: &MonomialIdeal, n: u32) -> Result<MonomialIdeal> {
        Ok(MonomialQuotientRing::power(self, a, n))
    }
}

/// The first index at which a checked identity fails, with both sides.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub index: i64,
    pub left: String,
    pub right: String,
}

/// A decided condition, with a witness whenever it fails.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub holds: bool,
    pub witness: Option<Witness>,
}

impl Verdict {
    pub fn pass() -> Self {
        Verdict { holds: true, witness: None }
    }

    pub fn fail(index: i64, left: String, right: String) -> Self {
        Verdict { holds: false, witness: Some(Witness { index, left, right }) }
    }

    /// Checks `lhs(i) == rhs(i)` for each `i`, stopping at the first failure.
    pub fn check_each<B: IdealBackend>(
        backend: &B,
        indices: impl IntoIterator<Item = i64>,
        mut sides: impl FnMut(i64) -> Result<(B::Ideal, B::Ideal)>,
    ) -> Result<Self> {
        for i in indices {
            let (l, r) = sides(i)?;
            if l != r {
                return Ok(Verdict::fail(i, backend.summary(&l), backend.summary(&r)));
            }
        }
        Ok(Verdict::pass())
    }
}
