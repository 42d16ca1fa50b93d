//! Ideals of `R = k[[t^S]]` as exact finite data.
//!
//! An m-primary ideal `I` contains every series in `R` of valuation at least
//! some tail `τ ≥ conductor`, so it is the preimage of a subspace of
//! `R / t^τ`. That subspace is stored as a reduced row echelon basis over
//! the columns `S ∩ [0, τ)`, with the least possible `τ`; equal ideals have
//! identical data.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, OnceLock, RwLock};

use crate::error::{Error, Result};
use crate::linalg::{self, Echelon, SparseVec};
use crate::scalar::{Field, Scalar};
use crate::semigroup::NumericalSemigroup;
use crate::series::{format_poly, TruncatedSeries};

pub const PRECISION_CAP: u32 = 1 << 16;

static NEXT_RING_ID: AtomicU64 = AtomicU64::new(1);

/// The ring `k[[t^S]]` together with its session precision registry.
#[derive(Debug)]
pub struct SemigroupRing {
    id: u64,
    semigroup: NumericalSemigroup,
    field: Field,
    precision: RwLock<u32>,
}

impl SemigroupRing {
    pub fn new(semigroup: NumericalSemigroup, field: Field) -> Arc<Self> {
        let d = Self::initial_precision(&semigroup, 1, semigroup.max_generator());
        Self::with_precision(semigroup, field, d)
    }

    /// `d` is raised to `2 * conductor` when smaller and clamped to the cap.
    pub fn with_precision(semigroup: NumericalSemigroup, field: Field, d: u32) -> Arc<Self> {
        let d = d.max(2 * semigroup.conductor()).clamp(1, PRECISION_CAP);
        Arc::new(SemigroupRing {
            id: NEXT_RING_ID.fetch_add(1, Ordering::Relaxed),
            semigroup,
            field,
            precision: RwLock::new(d),
        })
    }

    /// `max(4c, 2c + (N + 2) v_max + 8)` for powers up to `N` of ideals whose
    /// generators have valuation at most `v_max`.
    pub fn initial_precision(semigroup: &NumericalSemigroup, max_power: u32, v_max: u32) -> u32 {
        let c = semigroup.conductor();
        (4 * c).max(2 * c + (max_power + 2) * v_max + 8)
    }

    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn semigroup(&self) -> &NumericalSemigroup {
        &self.semigroup
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn conductor(&self) -> u32 {
        self.semigroup.conductor()
    }

    /// Least positive element of `S`.
    pub fn multiplicity(&self) -> u32 {
        self.semigroup.min_generator()
    }

    pub fn precision(&self) -> u32 {
        *self.precision.read().unwrap()
    }

    /// Raises the working precision to at least `d`.
    pub fn raise_precision(&self, d: u32) -> Result<u32> {
        if d > PRECISION_CAP {
            return Err(Error::PrecisionExhausted { cap: PRECISION_CAP });
        }
        let mut cur = self.precision.write().unwrap();
        *cur = (*cur).max(d);
        Ok(*cur)
    }

    /// Doubles the working precision until it covers `needed`.
    pub fn ensure_precision(&self, needed: u32) -> Result<u32> {
        let cur = self.precision();
        if cur >= needed {
            return Ok(cur);
        }
        let mut guard = self.precision.write().unwrap();
        while *guard < needed {
            if *guard >= PRECISION_CAP {
                return Err(Error::PrecisionExhausted { cap: PRECISION_CAP });
            }
            *guard = (*guard * 2).min(PRECISION_CAP);
        }
        Ok(*guard)
    }

    pub fn unit_ideal(self: &Arc<Self>) -> RingIdeal {
        let one = vec![(0, self.field.one())];
        RingIdeal::from_span_raw(self, vec![one], 0)
    }

    pub fn maximal_ideal(self: &Arc<Self>) -> RingIdeal {
        let c = self.conductor();
        let vecs = self
            .semigroup
            .elements_below(c + 1)
            .filter(|&s| s > 0)
            .map(|s| vec![(s, self.field.one())])
            .collect();
        RingIdeal::from_span_raw(self, vecs, c + 1)
    }

    /// The ideal generated by the monomials `t^e`.
    pub fn monomial_ideal(self: &Arc<Self>, exponents: &[u32]) -> Result<RingIdeal> {
        let gens: Vec<TruncatedSeries> = exponents
            .iter()
            .map(|&e| TruncatedSeries::monomial(self.field, self.field.one(), e))
            .collect();
        RingIdeal::echelonize(self, &gens)
    }

    /// Parses an element and checks that it lies in `R`.
    pub fn element(&self, text: &str) -> Result<TruncatedSeries> {
        let f = crate::series::parse_element(text, self.field)?;
        f.check_support(&self.semigroup)?;
        Ok(f)
    }
}

impl fmt::Display for SemigroupRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[[t^{}]]", self.field, self.semigroup)
    }
}

/// An m-primary ideal of a [`SemigroupRing`].
#[derive(Debug, Clone)]
pub struct RingIdeal {
    ring: Arc<SemigroupRing>,
    tail: u32,
    basis: Echelon<u32>,
    minimal: OnceLock<Vec<SparseVec<u32>>>,
}

impl PartialEq for RingIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.ring.id == other.ring.id && self.tail == other.tail && self.basis == other.basis
    }
}

impl Eq for RingIdeal {}

fn truncate(v: &mut SparseVec<u32>, horizon: u32) {
    v.retain(|(e, _)| *e < horizon);
}

fn shift(v: &[(u32, Scalar)], by: u32, horizon: u32) -> SparseVec<u32> {
    v.iter()
        .filter(|(e, _)| e + by < horizon)
        .map(|(e, c)| (e + by, c.clone()))
        .collect()
}

/// Product of two polynomials, dropping terms at or above `horizon`.
pub fn poly_mul(a: &[(u32, Scalar)], b: &[(u32, Scalar)], horizon: u32) -> SparseVec<u32> {
    let mut terms = Vec::with_capacity(a.len() * b.len());
    for (e1, c1) in a {
        for (e2, c2) in b {
            if e1 + e2 < horizon {
                terms.push((e1 + e2, c1 * c2));
            }
        }
    }
    linalg::collect(terms)
}

impl RingIdeal {
    /// Canonical form of the ideal generated by `generators`.
    pub fn echelonize(ring: &Arc<SemigroupRing>, generators: &[TruncatedSeries]) -> Result<Self> {
        for g in generators {
            if g.field() != ring.field {
                return Err(Error::FieldMismatch(g.field().to_string(), ring.field.to_string()));
            }
            g.check_support(&ring.semigroup)?;
        }
        let nonzero: Vec<&TruncatedSeries> = generators.iter().filter(|g| !g.is_zero()).collect();
        let Some(v_min) = nonzero.iter().map(|g| g.terms()[0].0).min() else {
            // the zero ideal never acquires a tail
            return Err(Error::PrecisionExhausted { cap: PRECISION_CAP });
        };
        // a generator of valuation v times t^{≥c} k[[t]] is t^{≥ v+c} k[[t]]
        let settled = v_min + ring.conductor();
        if let Some(p) = nonzero.iter().filter_map(|g| g.precision()).find(|&p| p < settled) {
            return Err(Error::PrecisionExhausted { cap: p });
        }
        let horizon = settled + ring.multiplicity();
        ring.ensure_precision(horizon)?;
        let mut vecs = Vec::new();
        for g in &nonzero {
            let v = g.terms()[0].0;
            for s in ring.semigroup.elements_below(horizon.saturating_sub(v)) {
                vecs.push(shift(g.terms(), s, horizon));
            }
        }
        Ok(Self::from_span_raw(ring, vecs, horizon))
    }

    /// The ideal `span(vectors) + (R ∩ t^{≥ horizon})`, which the caller
    /// guarantees is an ideal. Registers `horizon` with the precision registry.
    fn from_span(ring: &Arc<SemigroupRing>, vectors: Vec<SparseVec<u32>>, horizon: u32) -> Result<Self> {
        ring.ensure_precision(horizon)?;
        Ok(Self::from_span_raw(ring, vectors, horizon))
    }

    fn from_span_raw(ring: &Arc<SemigroupRing>, mut vectors: Vec<SparseVec<u32>>, horizon: u32) -> Self {
        let c = ring.conductor();
        let mut horizon = horizon;
        if horizon < c {
            vectors.extend(
                ring.semigroup
                    .elements_below(c)
                    .filter(|&s| s >= horizon)
                    .map(|s| vec![(s, ring.field.one())]),
            );
            horizon = c;
        }
        let mut ech = Echelon::new();
        for mut v in vectors {
            truncate(&mut v, horizon);
            ech.insert(v);
        }
        let mut tail = horizon;
        while tail > c && ech.is_pivot(&(tail - 1)) {
            tail -= 1;
        }
        let kept = ech.into_rows().into_iter().filter(|(k, _)| *k < tail).map(|(k, mut row)| {
            truncate(&mut row, tail);
            (k, row)
        });
        let basis = Echelon::from_rows(Echelon::from_rows(kept).into_reduced());
        RingIdeal { ring: ring.clone(), tail, basis, minimal: OnceLock::new() }
    }

    pub fn principal(ring: &Arc<SemigroupRing>, f: &TruncatedSeries) -> Result<Self> {
        Self::echelonize(ring, std::slice::from_ref(f))
    }

    pub fn ring(&self) -> &Arc<SemigroupRing> {
        &self.ring
    }

    /// Least `τ ≥ conductor` with `R ∩ t^{≥τ} ⊆ I`.
    pub fn tail(&self) -> u32 {
        self.tail
    }

    /// Reduced basis rows `(pivot, row)` below the tail, ascending by pivot.
    pub fn basis(&self) -> impl Iterator<Item = (&u32, &SparseVec<u32>)> {
        self.basis.rows()
    }

    /// Valuations of elements of `I` below the tail.
    pub fn pivots(&self) -> Vec<u32> {
        self.basis.pivots().copied().collect()
    }

    /// Valuations of `I` below `bound`, including the implicit tail.
    pub fn valuations_below(&self, bound: u32) -> Vec<u32> {
        let mut v = self.pivots();
        v.retain(|&p| p < bound);
        v.extend(self.tail..bound);
        v
    }

    pub fn min_valuation(&self) -> u32 {
        self.basis.pivots().next().copied().unwrap_or(self.tail)
    }

    /// An element of least valuation; it generates a minimal reduction.
    pub fn min_valuation_element(&self) -> TruncatedSeries {
        let field = self.ring.field;
        match self.basis.rows().next() {
            Some((_, row)) => TruncatedSeries::from_sparse(field, row.clone()),
            None => TruncatedSeries::monomial(field, field.one(), self.tail),
        }
    }

    pub fn is_unit(&self) -> bool {
        self.basis.is_pivot(&0) || (self.tail == 0)
    }

    /// `λ(R/I)`: elements of `S` below the tail that are not valuations of `I`.
    pub fn colength(&self) -> u32 {
        self.ring
            .semigroup
            .elements_below(self.tail)
            .filter(|s| !self.basis.is_pivot(s))
            .count() as u32
    }

    /// Exponents `s` whose monomials `t^s` form a k-basis of `R/I`.
    pub fn quotient_basis(&self) -> Vec<u32> {
        self.ring
            .semigroup
            .elements_below(self.tail)
            .filter(|s| !self.basis.is_pivot(s))
            .collect()
    }

    /// Normal form of `v` modulo `I`, supported on [`Self::quotient_basis`].
    pub fn reduce(&self, v: &[(u32, Scalar)]) -> SparseVec<u32> {
        let mut v = v.to_vec();
        truncate(&mut v, self.tail);
        self.basis.reduce_full(v)
    }

    pub fn contains(&self, f: &TruncatedSeries) -> bool {
        self.reduce(f.terms()).is_empty()
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if self.ring.id != other.ring.id {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    /// A k-basis of `I` modulo `t^horizon` for `horizon ≥ τ`.
    fn k_basis_below(&self, horizon: u32) -> Vec<SparseVec<u32>> {
        let one = self.ring.field.one();
        self.basis
            .rows()
            .map(|(_, r)| r.clone())
            .chain((self.tail..horizon).map(|v| vec![(v, one.clone())]))
            .collect()
    }

    pub fn is_subset(&self, other: &Self) -> Result<bool> {
        self.check_ring(other)?;
        let horizon = self.tail.max(other.tail);
        Ok(self.k_basis_below(horizon).iter().all(|v| other.reduce(v).is_empty()))
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let horizon = self.tail.min(other.tail);
        let vecs = self.basis.rows().chain(other.basis.rows()).map(|(_, r)| r.clone()).collect();
        Self::from_span(&self.ring, vecs, horizon)
    }

    pub fn product(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let (va, vb) = (self.min_valuation(), other.min_valuation());
        let horizon = (self.tail + vb).min(other.tail + va);
        // k-basis of one factor times minimal generators of the other
        let cost_a = self.basis.rank() * other.minimal_generators().len();
        let cost_b = other.basis.rank() * self.minimal_generators().len();
        let (x, y) = if cost_a <= cost_b { (self, other) } else { (other, self) };
        let mut vecs = Vec::new();
        for (_, row) in x.basis.rows() {
            for h in y.minimal_generators() {
                vecs.push(poly_mul(row, h, horizon));
            }
        }
        Self::from_span(&self.ring, vecs, horizon)
    }

    pub fn power(&self, n: u32) -> Result<Self> {
        let mut acc = self.ring.unit_ideal();
        for _ in 0..n {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// `{x ∈ R : x·B ⊆ A}` for `A = self`.
    pub fn colon(&self, b: &Self) -> Result<Self> {
        self.check_ring(b)?;
        let horizon = self.tail;
        let gens = b.minimal_generators();
        let top = gens.iter().filter_map(|h| h.last().map(|(e, _)| *e)).max().unwrap_or(0);
        self.ring.ensure_precision(horizon + top)?;
        let unknowns: Vec<u32> = self.ring.semigroup.elements_below(horizon).collect();
        let rows: Vec<SparseVec<(usize, u32)>> = unknowns
            .iter()
            .map(|&s| {
                let mut row = Vec::new();
                for (j, h) in gens.iter().enumerate() {
                    row.extend(self.reduce(&shift(h, s, horizon)).into_iter().map(|(e, c)| ((j, e), c)));
                }
                row
            })
            .collect();
        let vecs = linalg::left_kernel(self.ring.field, &rows)
            .into_iter()
            .map(|combo| linalg::collect(combo.into_iter().map(|(i, c)| (unknowns[i], c))))
            .collect();
        Self::from_span(&self.ring, vecs, horizon)
    }

    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let horizon = self.tail.max(other.tail);
        let elems = self.k_basis_below(horizon);
        let rows: Vec<SparseVec<u32>> = elems.iter().map(|v| other.reduce(v)).collect();
        let vecs = linalg::left_kernel(self.ring.field, &rows)
            .into_iter()
            .map(|combo| {
                let mut acc = Vec::new();
                for (i, c) in combo {
                    acc = linalg::axpy(&acc, &c, &elems[i]);
                }
                acc
            })
            .collect();
        Self::from_span(&self.ring, vecs, horizon)
    }

    /// `m·I`.
    pub fn maximal_times(&self) -> Self {
        let horizon = self.tail + self.ring.multiplicity();
        let mut vecs = Vec::new();
        for &n in self.ring.semigroup.generators() {
            for (_, row) in self.basis.rows() {
                vecs.push(shift(row, n, horizon));
            }
        }
        Self::from_span_raw(&self.ring, vecs, horizon)
    }

    /// A minimal generating set, chosen greedily from the reduced basis rows
    /// followed by the tail monomials.
    pub fn minimal_generators(&self) -> &[SparseVec<u32>] {
        self.minimal.get_or_init(|| {
            let m_i = self.maximal_times();
            let mut span = m_i.basis.clone();
            let one = self.ring.field.one();
            let tail_monomials = (self.tail..self.tail + self.ring.multiplicity()).map(|v| vec![(v, one.clone())]);
            let mut kept = Vec::new();
            for cand in self.basis.rows().map(|(_, r)| r.clone()).chain(tail_monomials) {
                let mut r = cand.clone();
                truncate(&mut r, m_i.tail);
                if span.insert(r) {
                    kept.push(cand);
                }
            }
            kept
        })
    }

    /// `μ(I)`.
    pub fn num_generators(&self) -> u32 {
        self.minimal_generators().len() as u32
    }

    /// `λ(B/A)` for `A = self ⊆ B`.
    pub fn length_in(&self, b: &Self) -> Result<u32> {
        if !self.is_subset(b)? {
            return Err(Error::NotContained(format!("{} in {}", self, b)));
        }
        Ok(self.colength() - b.colength())
    }

    /// Tail, pivots and minimal generators; used in witnesses.
    pub fn summary(&self) -> String {
        let pivots: Vec<String> = self.pivots().iter().map(|p| p.to_string()).collect();
        format!("{} [tail {}; pivots {{{}}}]", self, self.tail, pivots.join(","))
    }
}

impl fmt::Display for RingIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.minimal_generators().iter().map(|g| format_poly(g)).collect();
        write!(f, "({})", gens.join(", "))
    }
}

/// Ideals of `R/J` represented by ambient ideals containing `J`.
#[derive(Debug, Clone)]
pub struct QuotientView {
    modulus: RingIdeal,
}

impl QuotientView {
    pub fn new(modulus: RingIdeal) -> Self {
        QuotientView { modulus }
    }

    pub fn modulus(&self) -> &RingIdeal {
        &self.modulus
    }

    /// `λ(R/J)`.
    pub fn total_length(&self) -> u32 {
        self.modulus.colength()
    }

    /// The preimage `I + J` of `Ī`.
    pub fn lift(&self, i: &RingIdeal) -> Result<RingIdeal> {
        i.sum(&self.modulus)
    }

    /// Preimage of `Ī^n`.
    pub fn power(&self, i: &RingIdeal, n: u32) -> Result<RingIdeal> {
        self.lift(&i.power(n)?)
    }

    /// Preimage of `0 :_{R/J} X̄`.
    pub fn annihilator(&self, x: &RingIdeal) -> Result<RingIdeal> {
        self.modulus.colon(x)
    }

    /// `λ(R̄/Ī)`.
    pub fn colength(&self, i: &RingIdeal) -> Result<u32> {
        Ok(self.lift(i)?.colength())
    }

    /// Exponents of the monomial basis of `R/J` that survive modulo `I`.
    pub fn surviving(&self, i: &RingIdeal) -> Result<BTreeSet<u32>> {
        Ok(self.lift(i)?.quotient_basis().into_iter().collect())
    }
}
