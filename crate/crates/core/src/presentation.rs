//! Degree-by-degree presentations of `G(I)` over `(R/I)[X_1..X_n]` and of
//! `F(I)` over `k[X_1..X_n]`: minimal generators of the kernels, relation
//! type lower bounds and complete intersection assessment.

use std::collections::HashMap;
use std::fmt::Debug;
use std::sync::Arc;

use serde::Serialize;

use crate::backend::IdealBackend;
use crate::error::{Error, Result};
use crate::ideal::{poly_mul, RingIdeal, SemigroupRing};
use crate::linalg::{axpy, collect, left_kernel, Echelon, SparseVec};
use crate::monomial::{Exponent, MonomialIdeal, MonomialQuotientRing};
use crate::scalar::{Field, Scalar};
use crate::series::format_poly;

/// Element-level arithmetic needed to write down presentation maps: ring
/// elements are sparse combinations of monomial keys.
pub trait ResidueArithmetic: IdealBackend {
    type Key: Ord + Clone + Debug + std::hash::Hash;

    fn coefficient_field(&self) -> Field;
    fn unit_key(&self) -> Self::Key;
    fn key_product(&self, a: &Self::Key, b: &Self::Key) -> Self::Key;
    /// Keys whose monomials form a k-basis of `R/A`, ascending.
    fn residue_keys(&self, a: &Self::Ideal) -> Result<Vec<Self::Key>>;
    /// Normal form modulo `A`, supported on [`Self::residue_keys`].
    fn remainder(&self, f: &[(Self::Key, Scalar)], a: &Self::Ideal) -> SparseVec<Self::Key>;
    fn ideal_from(&self, generators: &[SparseVec<Self::Key>]) -> Result<Self::Ideal>;
    fn format_element(&self, f: &[(Self::Key, Scalar)]) -> String;
    /// Krull dimension of the ring.
    fn dimension(&self) -> u32;

    fn multiply(&self, a: &[(Self::Key, Scalar)], b: &[(Self::Key, Scalar)]) -> SparseVec<Self::Key> {
        let mut terms = Vec::with_capacity(a.len() * b.len());
        for (ka, ca) in a {
            for (kb, cb) in b {
                terms.push((self.key_product(ka, kb), ca * cb));
            }
        }
        collect(terms)
    }
}

impl ResidueArithmetic for Arc<SemigroupRing> {
    type Key = u32;

    fn coefficient_field(&self) -> Field {
        self.field()
    }

    fn unit_key(&self) -> u32 {
        0
    }

    fn key_product(&self, a: &u32, b: &u32) -> u32 {
        a + b
    }

    fn residue_keys(&self, a: &RingIdeal) -> Result<Vec<u32>> {
        Ok(a.quotient_basis())
    }

    fn remainder(&self, f: &[(u32, Scalar)], a: &RingIdeal) -> SparseVec<u32> {
        a.reduce(f)
    }

    fn ideal_from(&self, generators: &[SparseVec<u32>]) -> Result<RingIdeal> {
        let els: Vec<_> = generators
            .iter()
            .map(|g| crate::series::TruncatedSeries::from_sparse(self.field(), g.clone()))
            .collect();
        RingIdeal::echelonize(self, &els)
    }

    fn format_element(&self, f: &[(u32, Scalar)]) -> String {
        format_poly(f)
    }

    fn dimension(&self) -> u32 {
        1
    }

    fn multiply(&self, a: &[(u32, Scalar)], b: &[(u32, Scalar)]) -> SparseVec<u32> {
        poly_mul(a, b, u32::MAX)
    }
}

impl ResidueArithmetic for MonomialQuotientRing {
    type Key = Exponent;

    fn coefficient_field(&self) -> Field {
        self.field()
    }

    fn unit_key(&self) -> Exponent {
        vec![0; self.nvars()]
    }

    fn key_product(&self, a: &Exponent, b: &Exponent) -> Exponent {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    fn residue_keys(&self, a: &MonomialIdeal) -> Result<Vec<Exponent>> {
        let mut keys = self.standard_monomials(a)?;
        keys.sort();
        Ok(keys)
    }

    fn remainder(&self, f: &[(Exponent, Scalar)], a: &MonomialIdeal) -> SparseVec<Exponent> {
        let full = a.sum(self.relations());
        f.iter().filter(|(m, _)| !full.contains(m)).cloned().collect()
    }

    fn ideal_from(&self, generators: &[SparseVec<Exponent>]) -> Result<MonomialIdeal> {
        let mut exps = Vec::new();
        for g in generators {
            match g.as_slice() {
                [(m, _)] => exps.push(m.clone()),
                _ => return Err(Error::Unsupported("generators must be monomials".into())),
            }
        }
        self.ideal(exps)
    }

    fn format_element(&self, f: &[(Exponent, Scalar)]) -> String {
        format_terms(f.iter().map(|(m, c)| {
            let mono = self.format_monomial(m);
            (if mono == "1" { String::new() } else { mono }, c.clone())
        }))
    }

    fn dimension(&self) -> u32 {
        self.krull_dimension()
    }
}

fn format_terms(terms: impl Iterator<Item = (String, Scalar)>) -> String {
    let mut out = String::new();
    for (i, (mono, c)) in terms.enumerate() {
        let neg = c.is_negative();
        let abs = if neg { -&c } else { c };
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if mono.is_empty() {
            out.push_str(&abs.to_string());
        } else if abs.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&format!("{abs}*{mono}"));
        }
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

/// Which blowup algebra is presented.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Algebra {
    /// `G(I)` over `(R/I)[X]`.
    Graded,
    /// `F(I)` over `k[X]`.
    Fiber,
}

/// One term of a kernel generator: a residue coefficient times a monomial.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RelationTerm {
    pub exponents: Vec<u32>,
    pub coefficient: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Relation {
    pub degree: u32,
    pub terms: Vec<RelationTerm>,
    pub text: String,
}

/// Presented against true Hilbert function value in one degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct HilbertEvidence {
    pub degree: u32,
    pub presented: u32,
    pub actual: u32,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GradedPresentation {
    pub algebra: Algebra,
    pub variables: Vec<String>,
    pub degree_bound: u32,
    /// `dim_k` of the coefficient ring (`λ(R/I)`, or 1 for the fiber cone).
    pub coefficient_length: u32,
    /// Krull dimension of the coefficient ring.
    pub coefficient_dimension: u32,
    /// Minimal generators of the kernel in each degree `0..=D`.
    pub generator_counts: Vec<u32>,
    pub generators: Vec<Relation>,
    pub relation_type_lower_bound: u32,
    /// Degrees `0..=D+1`.
    pub hilbert_evidence: Vec<HilbertEvidence>,
}

impl GradedPresentation {
    pub fn generator_degrees(&self) -> Vec<u32> {
        self.generators.iter().map(|g| g.degree).collect()
    }

    pub fn total_generators(&self) -> u32 {
        self.generator_counts.iter().sum()
    }

    pub fn evidence_matches(&self) -> bool {
        self.hilbert_evidence.iter().all(|h| h.presented == h.actual)
    }
}

/// Exponent vectors of degree `d` in `n` variables, lexicographically
/// descending so that `X_1^d` comes first.
fn monomials(n: usize, d: u32) -> Vec<Vec<u32>> {
    fn rec(n: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if prefix.len() + 1 == n {
            prefix.push(d);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for e in (0..=d).rev() {
            prefix.push(e);
            rec(n, d - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(n, d, &mut Vec::new(), &mut out);
    }
    out
}

struct Setup<'a, B: ResidueArithmetic> {
    backend: &'a B,
    generators: Vec<SparseVec<B::Key>>,
    products: HashMap<Vec<u32>, SparseVec<B::Key>>,
}

impl<B: ResidueArithmetic> Setup<'_, B> {
    /// `g^α`.
    fn product(&mut self, alpha: &[u32]) -> SparseVec<B::Key> {
        if let Some(p) = self.products.get(alpha) {
            return p.clone();
        }
        let value = match alpha.iter().position(|&e| e > 0) {
            None => vec![(self.backend.unit_key(), self.backend.coefficient_field().one())],
            Some(k) => {
                let mut lower = alpha.to_vec();
                lower[k] -= 1;
                let base = self.product(&lower);
                self.backend.multiply(&base, &self.generators[k])
            }
        };
        self.products.insert(alpha.to_vec(), value.clone());
        value
    }
}

fn check_minimal<B: ResidueArithmetic>(
    backend: &B,
    ideal: &B::Ideal,
    generators: &[SparseVec<B::Key>],
) -> Result<()> {
    let mu = backend.num_generators(ideal) as usize;
    if generators.len() != mu {
        return Err(Error::NotMinimalGenerators(format!(
            "{} generators given, the ideal needs {mu}",
            generators.len()
        )));
    }
    let m_i = backend.maximal_times(ideal)?;
    let mut span = Echelon::new();
    for g in generators {
        if !backend.remainder(g, ideal).is_empty() {
            return Err(Error::NotMinimalGenerators(format!(
                "{} is not in the ideal",
                backend.format_element(g)
            )));
        }
        if !span.insert(backend.remainder(g, &m_i)) {
            return Err(Error::NotMinimalGenerators(format!(
                "{} is redundant modulo mI",
                backend.format_element(g)
            )));
        }
    }
    Ok(())
}

fn index_of<K: Ord>(keys: &[K], k: &K) -> usize {
    keys.binary_search(k).expect("remainder is supported on the residue basis")
}

fn coordinates<B: ResidueArithmetic>(
    backend: &B,
    f: &[(B::Key, Scalar)],
    modulus: &B::Ideal,
    keys: &[B::Key],
) -> SparseVec<usize> {
    backend
        .remainder(f, modulus)
        .into_iter()
        .map(|(k, c)| (index_of(keys, &k), c))
        .collect()
}

/// Presents `G(I)` through the generators `g_1..g_n` of `I` up to degree `D`.
pub fn present_g<B: ResidueArithmetic>(
    backend: &B,
    ideal: &B::Ideal,
    generators: &[SparseVec<B::Key>],
    degree_bound: u32,
    names: Option<Vec<String>>,
) -> Result<GradedPresentation> {
    present(backend, ideal, generators, degree_bound, names, Algebra::Graded)
}

/// Presents `F(I)` through the generators `g_1..g_n` of `I` up to degree `D`.
pub fn present_f<B: ResidueArithmetic>(
    backend: &B,
    ideal: &B::Ideal,
    generators: &[SparseVec<B::Key>],
    degree_bound: u32,
    names: Option<Vec<String>>,
) -> Result<GradedPresentation> {
    present(backend, ideal, generators, degree_bound, names, Algebra::Fiber)
}

fn default_names(n: usize) -> Vec<String> {
    if n <= 3 {
        ["X", "Y", "Z"][..n].iter().map(|s| s.to_string()).collect()
    } else {
        (1..=n).map(|i| format!("X{i}")).collect()
    }
}

fn present<B: ResidueArithmetic>(
    backend: &B,
    ideal: &B::Ideal,
    generators: &[SparseVec<B::Key>],
    degree_bound: u32,
    names: Option<Vec<String>>,
    algebra: Algebra,
) -> Result<GradedPresentation> {
    check_minimal(backend, ideal, generators)?;
    let field = backend.coefficient_field();
    let n = generators.len();
    let variables = names.unwrap_or_else(|| default_names(n));
    if variables.len() != n {
        return Err(Error::Unsupported(format!("{} variable names for {n} generators", variables.len())));
    }
    let unit = backend.unit();
    let coeff_ideal = match algebra {
        Algebra::Graded => ideal.clone(),
        Algebra::Fiber => backend.maximal(),
    };
    let residues = backend.residue_keys(&coeff_ideal)?;
    let ell = residues.len();
    // `mult[a][b]`: coordinates of `t_a * t_b` in `R/I`, for non-unit `a`.
    let mut mult = Vec::new();
    for a in residues.iter().skip(1) {
        let row: Vec<SparseVec<usize>> = residues
            .iter()
            .map(|b| {
                let prod = vec![(backend.key_product(a, b), field.one())];
                coordinates(backend, &prod, &coeff_ideal, &residues)
            })
            .collect();
        mult.push(row);
    }

    let mut setup = Setup { backend, generators: generators.to_vec(), products: HashMap::new() };
    let mut power = unit;
    let mut counts = Vec::new();
    let mut relations = Vec::new();
    let mut evidence = Vec::new();
    let mut prev_kernel: Vec<SparseVec<usize>> = Vec::new();
    let mut prev_found: Vec<SparseVec<usize>> = Vec::new();
    let mut prev_monos: Vec<Vec<u32>> = Vec::new();

    for d in 0..=degree_bound + 1 {
        let next_power = backend.product(&power, ideal)?;
        let target = match algebra {
            Algebra::Graded => next_power.clone(),
            Algebra::Fiber => backend.maximal_times(&power)?,
        };
        let target_keys = backend.residue_keys(&target)?;
        let monos = monomials(n, d);
        let mono_index: HashMap<&Vec<u32>, usize> =
            monos.iter().enumerate().map(|(i, m)| (m, i)).collect();

        let mut rows = Vec::with_capacity(monos.len() * ell);
        for alpha in &monos {
            let g_alpha = setup.product(alpha);
            for b in &residues {
                let f = backend.multiply(&[(b.clone(), field.one())], &g_alpha);
                rows.push(coordinates(backend, &f, &target, &target_keys));
            }
        }

        let shift = |v: &SparseVec<usize>, k: usize| -> SparseVec<usize> {
            collect(v.iter().map(|(key, c)| {
                let mut m = prev_monos[key / ell].clone();
                m[k] += 1;
                (mono_index[&m] * ell + key % ell, c.clone())
            }))
        };
        let act = |v: &SparseVec<usize>, a: usize| -> SparseVec<usize> {
            let mut out = Vec::new();
            for (key, c) in v {
                for (j, c2) in &mult[a][key % ell] {
                    out.push(((key / ell) * ell + j, c * c2));
                }
            }
            collect(out)
        };
        let close = |vs: Vec<SparseVec<usize>>| -> Echelon<usize> {
            let mut span = Echelon::new();
            let mut queue = vs;
            while let Some(v) = queue.pop() {
                if span.insert(v.clone()) {
                    for a in 0..mult.len() {
                        queue.push(act(&v, a));
                    }
                }
            }
            span
        };

        let mut from_below = Vec::new();
        let mut found_below = Vec::new();
        if d > 0 {
            for k in 0..n {
                from_below.extend(prev_kernel.iter().map(|v| shift(v, k)));
                found_below.extend(prev_found.iter().map(|v| shift(v, k)));
            }
        }

        if d > degree_bound {
            let found = close(found_below);
            evidence.push(evidence_row(backend, algebra, d, monos.len() * ell - found.rank(), &power, &next_power)?);
            break;
        }

        let kernel: Vec<SparseVec<usize>> = left_kernel(field, &rows)
            .into_iter()
            .map(collect)
            .collect();
        let mut decomposable = from_below;
        for v in &kernel {
            for a in 0..mult.len() {
                decomposable.push(act(v, a));
            }
        }
        let mut span = Echelon::new();
        for v in decomposable {
            span.insert(v);
        }
        let mut fresh = Vec::new();
        for v in &kernel {
            let before: Vec<usize> = span.pivots().copied().collect();
            if span.insert(v.clone()) {
                let after: Vec<usize> = span.pivots().copied().collect();
                fresh.push(*after.iter().find(|p| !before.contains(p)).unwrap());
            }
        }
        let reduced: HashMap<usize, SparseVec<usize>> = span.into_reduced().into_iter().collect();
        let mut reps: Vec<SparseVec<usize>> = fresh.iter().map(|p| reduced[p].clone()).collect();
        reps.sort_by(|a, b| a[0].0.cmp(&b[0].0));

        for rep in &reps {
            let mut value = Vec::new();
            for (key, c) in rep {
                let alpha = &monos[key / ell];
                let g_alpha = setup.product(alpha);
                let term = backend.multiply(&[(residues[key % ell].clone(), c.clone())], &g_alpha);
                value = axpy(&value, &field.one(), &term);
            }
            if !backend.remainder(&value, &target).is_empty() {
                return Err(Error::CriteriaDisagree(format!(
                    "kernel representative in degree {d} does not evaluate to zero"
                )));
            }
            relations.push(render(backend, rep, d, &monos, &residues, &variables));
        }
        counts.push(reps.len() as u32);

        found_below.extend(reps.iter().cloned());
        let found = close(found_below);
        evidence.push(evidence_row(backend, algebra, d, monos.len() * ell - found.rank(), &power, &next_power)?);
        prev_found = found.into_reduced().into_iter().map(|(_, v)| v).collect();
        prev_kernel = kernel;
        prev_monos = monos;
        power = next_power;
    }

    let top = counts.iter().rposition(|&c| c > 0).map(|d| d as u32).unwrap_or(1).max(1);
    Ok(GradedPresentation {
        algebra,
        variables,
        degree_bound,
        coefficient_length: ell as u32,
        coefficient_dimension: 0,
        generator_counts: counts,
        generators: relations,
        relation_type_lower_bound: top,
        hilbert_evidence: evidence,
    })
}

fn evidence_row<B: IdealBackend>(
    backend: &B,
    algebra: Algebra,
    degree: u32,
    presented: usize,
    power: &B::Ideal,
    next_power: &B::Ideal,
) -> Result<HilbertEvidence> {
    let actual = match algebra {
        Algebra::Graded => backend.colength(next_power)? - backend.colength(power)?,
        Algebra::Fiber => backend.num_generators(power),
    };
    Ok(HilbertEvidence { degree, presented: presented as u32, actual })
}

fn render<B: ResidueArithmetic>(
    backend: &B,
    rep: &SparseVec<usize>,
    degree: u32,
    monos: &[Vec<u32>],
    residues: &[B::Key],
    variables: &[String],
) -> Relation {
    let ell = residues.len();
    let mut terms = Vec::new();
    let mut pieces = Vec::new();
    let mut i = 0;
    while i < rep.len() {
        let mi = rep[i].0 / ell;
        let mut coeff = Vec::new();
        while i < rep.len() && rep[i].0 / ell == mi {
            coeff.push((residues[rep[i].0 % ell].clone(), rep[i].1.clone()));
            i += 1;
        }
        coeff.sort_by(|a, b| a.0.cmp(&b.0));
        let coefficient = backend.format_element(&coeff);
        let mono: Vec<String> = monos[mi]
            .iter()
            .zip(variables)
            .filter(|(e, _)| **e > 0)
            .map(|(e, v)| if *e == 1 { v.clone() } else { format!("{v}^{e}") })
            .collect();
        let mono = mono.join("*");
        let piece = match (coeff.as_slice(), mono.is_empty()) {
            (_, true) => coefficient.clone(),
            ([(k, c)], false) if *k == backend.unit_key() => {
                format_terms(std::iter::once((mono.clone(), c.clone())))
            }
            ([_], false) if !coefficient.contains(" + ") && !coefficient.contains(" - ") => {
                format!("{coefficient}*{mono}")
            }
            _ => format!("({coefficient})*{mono}"),
        };
        pieces.push(piece);
        terms.push(RelationTerm { exponents: monos[mi].clone(), coefficient });
    }
    let mut text = String::new();
    for (j, p) in pieces.iter().enumerate() {
        if j == 0 {
            text.push_str(p);
        } else if let Some(rest) = p.strip_prefix('-') {
            text.push_str(" - ");
            text.push_str(rest);
        } else {
            text.push_str(" + ");
            text.push_str(p);
        }
    }
    Relation { degree, terms, text }
}

/// Outcome of the complete intersection assessment.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CiVerdict {
    /// Generated by `height` elements, with matching Hilbert function
    /// through degree `D + 1`.
    CompleteIntersection { degree_bound: u32 },
    NotCompleteIntersection,
}

/// Compares the number of minimal kernel generators with the height
/// `n + dim(coefficients) - dim(algebra)` of the kernel.
pub fn ci_assess(p: &GradedPresentation, algebra_dimension: u32) -> Result<CiVerdict> {
    let height = (p.variables.len() as i64 + p.coefficient_dimension as i64) - algebra_dimension as i64;
    let total = p.total_generators() as i64;
    if total > height {
        return Ok(CiVerdict::NotCompleteIntersection);
    }
    let top = p.generators.iter().map(|g| g.degree).max().unwrap_or(0);
    if total == height && p.degree_bound > top && p.evidence_matches() {
        return Ok(CiVerdict::CompleteIntersection { degree_bound: p.degree_bound });
    }
    Err(Error::InconclusiveAtBound(p.degree_bound))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::NumericalSemigroup;

    fn semigroup_case(gens: &[u32], ideal: &[&str]) -> (Arc<SemigroupRing>, RingIdeal, Vec<SparseVec<u32>>) {
        let r = SemigroupRing::new(NumericalSemigroup::new(gens).unwrap(), Field::Rational);
        let els: Vec<_> = ideal.iter().map(|g| r.element(g).unwrap()).collect();
        let i = RingIdeal::echelonize(&r, &els).unwrap();
        let g = els.iter().map(|e| e.terms().to_vec()).collect();
        (r, i, g)
    }

    fn mono(names: &[&str], rels: Vec<Exponent>) -> MonomialQuotientRing {
        MonomialQuotientRing::new(names.iter().map(|s| s.to_string()).collect(), rels).unwrap()
    }

    fn one() -> Scalar {
        Field::Rational.one()
    }

    #[test]
    fn two_quadrics_form_a_complete_intersection() {
        let (r, i, g) = semigroup_case(&[4, 9, 10], &["t^8", "t^9", "t^10"]);
        let p = present_g(&r, &i, &g, 6, None).unwrap();
        assert_eq!(p.generator_degrees(), vec![2, 2]);
        let texts: Vec<&str> = p.generators.iter().map(|g| g.text.as_str()).collect();
        assert_eq!(texts, vec!["t^4*X^2 - Z^2", "X*Z - Y^2"]);
        assert!(p.evidence_matches());
        assert_eq!(ci_assess(&p, 1).unwrap(), CiVerdict::CompleteIntersection { degree_bound: 6 });
        let f = present_f(&r, &i, &g, 6, None).unwrap();
        assert_eq!(f.generator_counts, p.generator_counts);
        assert_eq!(f.relation_type_lower_bound, 2);
    }

    #[test]
    fn five_relations_in_three_variables() {
        let (r, i, g) = semigroup_case(&[3, 7, 11], &["t^6", "t^7", "t^11"]);
        let p = present_g(&r, &i, &g, 6, None).unwrap();
        assert_eq!(p.generator_degrees(), vec![1, 2, 2, 2, 3]);
        assert_eq!(p.generators[0].text, "t^3*Z");
        assert_eq!(ci_assess(&p, 1).unwrap(), CiVerdict::NotCompleteIntersection);
        let f = present_f(&r, &i, &g, 6, None).unwrap();
        assert_eq!(f.generator_degrees(), vec![2, 2, 2, 3]);
    }

    #[test]
    fn fiber_cone_is_a_hypersurface_but_graded_ring_is_not() {
        let (r, i, g) = semigroup_case(&[3, 4, 5], &["t^3", "t^4"]);
        let p = present_g(&r, &i, &g, 6, None).unwrap();
        assert_eq!(p.generator_degrees(), vec![1, 1, 3]);
        assert_eq!(ci_assess(&p, 1).unwrap(), CiVerdict::NotCompleteIntersection);
        let f = present_f(&r, &i, &g, 6, None).unwrap();
        assert_eq!(f.generator_degrees(), vec![3]);
        assert_eq!(f.generators[0].text, "Y^3");
        assert!(matches!(ci_assess(&f, 1).unwrap(), CiVerdict::CompleteIntersection { .. }));
    }

    #[test]
    fn parameter_ideal_over_non_cohen_macaulay_ring() {
        let q = mono(&["x", "y"], vec![vec![2, 1], vec![0, 3]]);
        let i = q.ideal(vec![vec![1, 0]]).unwrap();
        let g = vec![vec![(vec![1, 0], one())]];
        assert_eq!(q.colength(&i).unwrap(), 3);
        assert_eq!(q.colength(&q.power(&i, 2)).unwrap(), 6);
        let p = present_g(&q, &i, &g, 6, Some(vec!["U".into()])).unwrap();
        assert_eq!(&p.generator_counts[..3], &[0, 0, 1]);
        assert_eq!(p.generators[0].text, "y*U^2");
        assert!(p.relation_type_lower_bound >= 2);
        let f = present_f(&q, &i, &g, 6, None).unwrap();
        assert_eq!(f.total_generators(), 0);
        assert_eq!(f.relation_type_lower_bound, 1);
    }

    #[test]
    fn fiber_relation_type_two_graded_three() {
        let q = mono(&["x", "y", "z"], vec![vec![2, 0, 0], vec![0, 2, 0], vec![1, 1, 2]]);
        let i = q.ideal(vec![vec![0, 1, 0], vec![0, 0, 1]]).unwrap();
        let g = vec![vec![(vec![0, 1, 0], one())], vec![(vec![0, 0, 1], one())]];
        let names = Some(vec!["Y".to_string(), "Z".to_string()]);
        let f = present_f(&q, &i, &g, 6, names.clone()).unwrap();
        assert_eq!(f.generator_degrees(), vec![2]);
        assert_eq!(f.generators[0].text, "Y^2");
        let p = present_g(&q, &i, &g, 6, names).unwrap();
        assert_eq!(p.generator_counts[1], 0);
        assert!(p.generator_counts[3] >= 1);
        assert!(p.relation_type_lower_bound >= 3);
        assert_eq!(q.krull_dimension(), 1);
    }

    #[test]
    fn redundant_generators_are_rejected() {
        let (r, i, mut g) = semigroup_case(&[4, 9, 10], &["t^8", "t^9", "t^10"]);
        g.push(vec![(16, one())]);
        assert!(matches!(present_g(&r, &i, &g, 3, None), Err(Error::NotMinimalGenerators(_))));
        g.pop();
        g[2] = vec![(17, one())];
        assert!(matches!(present_f(&r, &i, &g, 3, None), Err(Error::NotMinimalGenerators(_))));
    }

    #[test]
    fn bound_below_top_degree_is_inconclusive() {
        let (r, i, g) = semigroup_case(&[4, 9, 10], &["t^8", "t^9", "t^10"]);
        let p = present_g(&r, &i, &g, 3, None).unwrap();
        assert!(matches!(ci_assess(&p, 1), Ok(CiVerdict::CompleteIntersection { .. })));
        let p = present_g(&r, &i, &g, 2, None).unwrap();
        assert!(matches!(ci_assess(&p, 1), Err(Error::InconclusiveAtBound(2))));
    }
}
