//! Monomial ideals of `k[x_1..x_n]/H` for a monomial ideal `H`.
//!
//! Every ideal is stored as its ambient preimage `A + H`, minimalized, so all
//! operations are divisibility arithmetic on exponent vectors.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Field;

pub type Exponent = Vec<u32>;

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn lcm(a: &[u32], b: &[u32]) -> Exponent {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

/// An ideal of the polynomial ring given by its minimal monomial generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    nvars: usize,
    generators: Vec<Exponent>,
}

impl MonomialIdeal {
    pub fn new(nvars: usize, generators: impl IntoIterator<Item = Exponent>) -> Self {
        let gens: Vec<Exponent> = generators.into_iter().collect();
        debug_assert!(gens.iter().all(|g| g.len() == nvars));
        MonomialIdeal { nvars, generators: minimalize(gens) }
    }

    pub fn zero(nvars: usize) -> Self {
        MonomialIdeal { nvars, generators: Vec::new() }
    }

    pub fn unit(nvars: usize) -> Self {
        MonomialIdeal { nvars, generators: vec![vec![0; nvars]] }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Minimal generators in lexicographic order.
    pub fn generators(&self) -> &[Exponent] {
        &self.generators
    }

    pub fn contains(&self, m: &[u32]) -> bool {
        self.generators.iter().any(|g| divides(g, m))
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.generators.iter().all(|g| other.contains(g))
    }

    pub fn sum(&self, other: &Self) -> Self {
        Self::new(self.nvars, self.generators.iter().chain(&other.generators).cloned())
    }

    pub fn product(&self, other: &Self) -> Self {
        let gens = self
            .generators
            .iter()
            .flat_map(|a| other.generators.iter().map(move |b| a.iter().zip(b).map(|(x, y)| x + y).collect()));
        Self::new(self.nvars, gens)
    }

    pub fn intersect(&self, other: &Self) -> Self {
        let gens = self.generators.iter().flat_map(|a| other.generators.iter().map(move |b| lcm(a, b)));
        Self::new(self.nvars, gens)
    }

    /// `self : x^b`.
    pub fn colon_monomial(&self, b: &[u32]) -> Self {
        let gens = self
            .generators
            .iter()
            .map(|a| a.iter().zip(b).map(|(x, y)| x.saturating_sub(*y)).collect());
        Self::new(self.nvars, gens)
    }

    pub fn colon(&self, other: &Self) -> Self {
        let mut acc = Self::unit(self.nvars);
        for b in &other.generators {
            acc = acc.intersect(&self.colon_monomial(b));
        }
        acc
    }

    /// `m·A` for the ideal `m` of the variables.
    pub fn maximal_times(&self) -> Self {
        let gens = self.generators.iter().flat_map(|g| {
            (0..self.nvars).map(move |i| {
                let mut h = g.clone();
                h[i] += 1;
                h
            })
        });
        Self::new(self.nvars, gens)
    }
}

fn minimalize(mut gens: Vec<Exponent>) -> Vec<Exponent> {
    gens.sort_by_key(|g| (g.iter().sum::<u32>(), g.clone()));
    gens.dedup();
    let mut kept: Vec<Exponent> = Vec::new();
    for g in gens {
        if !kept.iter().any(|k| divides(k, &g)) {
            kept.push(g);
        }
    }
    kept.sort();
    kept
}

/// Length of a quotient, which may be infinite.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Length {
    Finite(u64),
    Infinite,
}

impl Length {
    pub fn finite(self) -> Result<u64> {
        match self {
            Length::Finite(n) => Ok(n),
            Length::Infinite => Err(Error::InfiniteLength),
        }
    }
}

/// `k[x_1..x_n]/H`, localized at the origin.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialQuotientRing {
    names: Vec<String>,
    relations: MonomialIdeal,
    field: Field,
}

impl MonomialQuotientRing {
    pub fn new(names: Vec<String>, relations: Vec<Exponent>) -> Result<Self> {
        if names.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if relations.iter().any(|r| r.len() != names.len()) {
            return Err(Error::Unsupported("relation has the wrong number of exponents".into()));
        }
        let relations = MonomialIdeal::new(names.len(), relations);
        Ok(MonomialQuotientRing { names, relations, field: Field::Rational })
    }

    /// Same ring over another coefficient field. Lengths and monomial
    /// ideals do not depend on it; presentations do.
    pub fn with_field(mut self, field: Field) -> Self {
        self.field = field;
        self
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// Largest set of variables containing the support of no relation.
    pub fn krull_dimension(&self) -> u32 {
        let n = self.nvars();
        (0u64..1 << n)
            .filter(|mask| {
                self.relations.generators().iter().all(|g| {
                    g.iter().enumerate().any(|(i, e)| *e > 0 && mask & (1 << i) == 0)
                })
            })
            .map(|mask| mask.count_ones())
            .max()
            .unwrap_or(0)
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn relations(&self) -> &MonomialIdeal {
        &self.relations
    }

    /// The ideal generated by the given monomials, stored as `A + H`.
    pub fn ideal(&self, generators: Vec<Exponent>) -> Result<MonomialIdeal> {
        if generators.iter().any(|g| g.len() != self.nvars()) {
            return Err(Error::Unsupported("monomial has the wrong number of exponents".into()));
        }
        Ok(MonomialIdeal::new(self.nvars(), generators).sum(&self.relations))
    }

    pub fn unit_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::unit(self.nvars())
    }

    pub fn maximal_ideal(&self) -> MonomialIdeal {
        let n = self.nvars();
        let gens = (0..n).map(|i| {
            let mut e = vec![0; n];
            e[i] = 1;
            e
        });
        MonomialIdeal::new(n, gens).sum(&self.relations)
    }

    pub fn sum(&self, a: &MonomialIdeal, b: &MonomialIdeal) -> MonomialIdeal {
        a.sum(b)
    }

    pub fn product(&self, a: &MonomialIdeal, b: &MonomialIdeal) -> MonomialIdeal {
        a.product(b).sum(&self.relations)
    }

    pub fn power(&self, a: &MonomialIdeal, n: u32) -> MonomialIdeal {
        let mut acc = self.unit_ideal();
        for _ in 0..n {
            acc = self.product(&acc, a);
        }
        acc
    }

    pub fn intersect(&self, a: &MonomialIdeal, b: &MonomialIdeal) -> MonomialIdeal {
        a.intersect(b)
    }

    pub fn colon(&self, a: &MonomialIdeal, b: &MonomialIdeal) -> MonomialIdeal {
        a.colon(b)
    }

    /// `λ(R/A)`: standard monomials outside `A + H`.
    pub fn length(&self, a: &MonomialIdeal) -> Length {
        let full = a.sum(&self.relations);
        let n = self.nvars();
        let mut bounds = vec![0u32; n];
        for (i, b) in bounds.iter_mut().enumerate() {
            let pure = full
                .generators()
                .iter()
                .filter(|g| g.iter().enumerate().all(|(j, e)| j == i || *e == 0))
                .map(|g| g[i])
                .min();
            match pure {
                Some(p) => *b = p,
                None => return Length::Infinite,
            }
        }
        Length::Finite(box_monomials(&bounds).filter(|m| !full.contains(m)).count() as u64)
    }

    /// Standard monomials outside `A + H`, when finitely many.
    pub fn standard_monomials(&self, a: &MonomialIdeal) -> Result<Vec<Exponent>> {
        self.length(a).finite()?;
        let full = a.sum(&self.relations);
        let bounds: Vec<u32> = (0..self.nvars())
            .map(|i| {
                full.generators()
                    .iter()
                    .filter(|g| g.iter().enumerate().all(|(j, e)| j == i || *e == 0))
                    .map(|g| g[i])
                    .min()
                    .unwrap()
            })
            .collect();
        Ok(box_monomials(&bounds).filter(|m| !full.contains(m)).collect())
    }

    /// `μ` of the image of `A` in the quotient: minimal generators of
    /// `A + H` outside `H`.
    pub fn min_generators(&self, a: &MonomialIdeal) -> u32 {
        a.sum(&self.relations)
            .generators()
            .iter()
            .filter(|g| !self.relations.contains(g))
            .count() as u32
    }

    /// Minimal generators of the image of `A`, as exponent vectors.
    pub fn generators_mod(&self, a: &MonomialIdeal) -> Vec<Exponent> {
        a.sum(&self.relations)
            .generators()
            .iter()
            .filter(|g| !self.relations.contains(g))
            .cloned()
            .collect()
    }

    pub fn format_monomial(&self, m: &[u32]) -> String {
        let parts: Vec<String> = m
            .iter()
            .zip(&self.names)
            .filter(|(e, _)| **e > 0)
            .map(|(e, name)| if *e == 1 { name.clone() } else { format!("{name}^{e}") })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }

    pub fn format_ideal(&self, a: &MonomialIdeal) -> String {
        let gens: Vec<String> = self.generators_mod(a).iter().map(|g| self.format_monomial(g)).collect();
        format!("({})", gens.join(", "))
    }
}

impl fmt::Display for MonomialQuotientRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rels: Vec<String> = self.relations.generators().iter().map(|g| self.format_monomial(g)).collect();
        write!(f, "k[{}]/({})", self.names.join(","), rels.join(", "))
    }
}

/// All exponent vectors `m` with `m[i] < bounds[i]`.
fn box_monomials(bounds: &[u32]) -> impl Iterator<Item = Exponent> + '_ {
    let total: u64 = bounds.iter().map(|&b| b as u64).product();
    (0..total).map(move |mut k| {
        bounds
            .iter()
            .map(|&b| {
                let e = (k % b as u64) as u32;
                k /= b as u64;
                e
            })
            .collect()
    })
}
