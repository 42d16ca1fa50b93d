//! Seeded random instances over Gorenstein semigroup rings.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use graded_core::criteria::{colon_gorenstein_check, quotient_gorenstein_check, SEARCH_BOUND};
use graded_core::filtration::Filtration;
use graded_core::{Error, Field, IdealBackend, NumericalSemigroup, Result, RingIdeal, SemigroupRing};

/// Symmetric semigroups, so every ring drawn is Gorenstein.
pub const SYMMETRIC_POOL: &[&[u32]] =
    &[&[4, 9, 10], &[4, 5, 6], &[5, 6, 9], &[5, 6, 7, 8], &[4, 6, 7], &[2, 3], &[3, 4], &[3, 5]];

#[derive(Debug, Clone)]
pub struct Instance {
    pub ring: Arc<SemigroupRing>,
    pub ideal: RingIdeal,
    pub reduction: RingIdeal,
    pub ideal_text: Vec<String>,
    pub reduction_text: String,
}

impl Instance {
    pub fn describe(&self) -> String {
        format!("{} I = ({}) J = ({})", self.ring, self.ideal_text.join(", "), self.reduction_text)
    }
}

pub struct InstanceGenerator {
    rng: ChaCha8Rng,
    field: Field,
}

impl InstanceGenerator {
    pub fn new(seed: u64, field: Field) -> Self {
        InstanceGenerator { rng: ChaCha8Rng::seed_from_u64(seed), field }
    }

    fn ring(&mut self) -> Result<Arc<SemigroupRing>> {
        let gens = *SYMMETRIC_POOL.choose(&mut self.rng).expect("pool is not empty");
        Ok(SemigroupRing::new(NumericalSemigroup::new(gens)?, self.field))
    }

    fn exponent(&mut self, sg: &NumericalSemigroup, lo: u32, hi: u32) -> u32 {
        let choices: Vec<u32> = sg.elements_below(hi + 1).filter(|&v| v >= lo).collect();
        *choices.choose(&mut self.rng).expect("semigroups are unbounded")
    }

    /// `t^a` or `t^a ± c·t^b` with `b > a`, both exponents in `S`.
    fn element(&mut self, sg: &NumericalSemigroup, lo: u32, hi: u32) -> String {
        let a = self.exponent(sg, lo, hi);
        if self.rng.gen_bool(0.5) {
            return format!("t^{a}");
        }
        let b = self.exponent(sg, a + 1, a + sg.max_generator() + 2);
        let c: i64 = self.rng.gen_range(1..=3);
        let sign = if self.rng.gen_bool(0.5) { "+" } else { "-" };
        format!("t^{a} {sign} {c}*t^{b}")
    }

    /// Random `I ⊆ m` with one to three generators, and a random principal
    /// `J ⊆ m` that need not be a reduction of `I`.
    pub fn quotient_instance(&mut self) -> Result<Instance> {
        let ring = self.ring()?;
        let sg = ring.semigroup().clone();
        let hi = sg.conductor().max(sg.min_generator()) + sg.max_generator();
        let count = self.rng.gen_range(1..=3);
        let ideal_text: Vec<String> = (0..count).map(|_| self.element(&sg, 1, hi)).collect();
        let reduction_text = self.element(&sg, 1, hi);
        self.build(ring, ideal_text, reduction_text)
    }

    /// Random `I ⊆ m` with `J` generated by a lowest-valuation generator of
    /// `I`, hence a minimal reduction.
    pub fn reduction_instance(&mut self) -> Result<Instance> {
        let ring = self.ring()?;
        let sg = ring.semigroup().clone();
        let hi = sg.conductor().max(sg.min_generator()) + sg.max_generator();
        let count = self.rng.gen_range(1..=3);
        let ideal_text: Vec<String> = (0..count).map(|_| self.element(&sg, 1, hi)).collect();
        let lowest = ideal_text
            .iter()
            .min_by_key(|g| leading_exponent(g))
            .expect("at least one generator")
            .clone();
        self.build(ring, ideal_text, lowest)
    }

    pub fn build(&self, ring: Arc<SemigroupRing>, ideal_text: Vec<String>, reduction_text: String) -> Result<Instance> {
        let gens = ideal_text.iter().map(|g| ring.element(g)).collect::<Result<Vec<_>>>()?;
        let ideal = RingIdeal::echelonize(&ring, &gens)?;
        let reduction = RingIdeal::principal(&ring, &ring.element(&reduction_text)?)?;
        Ok(Instance { ring, ideal, reduction, ideal_text, reduction_text })
    }
}

fn leading_exponent(text: &str) -> u32 {
    text.trim_start_matches("t^").split(' ').next().and_then(|s| s.parse().ok()).unwrap_or(u32::MAX)
}

/// Outcome of the seven Artinian conditions on one instance.
#[derive(Debug, Clone, Serialize)]
pub struct AgreementOutcome {
    pub instance: String,
    pub gorenstein: Option<bool>,
    /// Set when the conditions disagree or the run failed.
    pub problem: Option<String>,
}

/// Runs the Artinian criteria on `count` random instances. Every condition
/// and the socle-dimension count must agree.
pub fn agreement_suite(seed: u64, count: usize, field: Field) -> Result<Vec<AgreementOutcome>> {
    let mut generator = InstanceGenerator::new(seed, field);
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let inst = generator.quotient_instance()?;
        let instance = inst.describe();
        let outcome = match quotient_gorenstein_check(&inst.ring, &inst.ideal, &inst.reduction) {
            Ok(rep) => {
                let socle_one = rep.socle.as_ref().map(|s| s.iter().sum::<u32>() == 1);
                let split = rep.conditions.iter().find(|c| c.verdict.holds != rep.gorenstein);
                let problem = match (split, socle_one) {
                    (Some(c), _) => Some(format!("`{}` disagrees", c.name)),
                    (None, Some(one)) if one != rep.gorenstein => Some("socle count disagrees".into()),
                    (None, None) => Some("no socle table".into()),
                    _ => None,
                };
                AgreementOutcome { instance, gorenstein: Some(rep.gorenstein), problem }
            }
            Err(e) => AgreementOutcome { instance, gorenstein: None, problem: Some(e.to_string()) },
        };
        out.push(outcome);
    }
    Ok(out)
}

/// What the colon criteria imply on one instance with a minimal reduction.
#[derive(Debug, Clone, Serialize)]
pub struct ImplicationOutcome {
    pub instance: String,
    /// `None` when the colon criteria do not apply (the ring is not Gorenstein).
    pub colon_conditions: Option<bool>,
    pub cohen_macaulay: bool,
    pub r: u32,
    pub s: u32,
    pub successive_colons: bool,
    pub problem: Option<String>,
}

/// Colon conditions imply Cohen-Macaulay, and Cohen-Macaulay implies `s = r`
/// and `I^{i+1} : I^i = I` for `0 ≤ i ≤ r`.
pub fn implication_suite(seed: u64, count: usize, field: Field) -> Result<Vec<ImplicationOutcome>> {
    let mut generator = InstanceGenerator::new(seed, field);
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let inst = generator.reduction_instance()?;
        out.push(implication(&inst)?);
    }
    Ok(out)
}

pub fn implication(inst: &Instance) -> Result<ImplicationOutcome> {
    let backend = &inst.ring;
    let mut f = Filtration::new(backend, inst.ideal.clone());
    let r = f.reduction_number(&inst.reduction, SEARCH_BOUND)?;
    let s = f.index_of_nilpotency(&inst.reduction, SEARCH_BOUND)?;
    let cohen_macaulay = f.cm_check_g(&inst.reduction, r)?.holds;
    let mut successive_colons = true;
    for i in 0..=r as i64 {
        successive_colons &= backend.colon(&f.power(i + 1)?, &f.power(i)?)? == inst.ideal;
    }
    let (colon_conditions, mut problem) =
        match colon_gorenstein_check(backend, &inst.ideal, &inst.reduction) {
            Ok(rep) => (Some(rep.conditions.iter().all(|c| c.verdict.holds)), None),
            Err(Error::HypothesisFailure(_)) => (None, None),
            Err(e @ Error::CriteriaDisagree(_)) => (Some(true), Some(e.to_string())),
            Err(e) => return Err(e),
        };
    if problem.is_none() {
        if colon_conditions == Some(true) && !cohen_macaulay {
            problem = Some("colon conditions hold without Cohen-Macaulay".into());
        } else if cohen_macaulay && (s != r || !successive_colons) {
            problem = Some(format!("Cohen-Macaulay with s = {s}, r = {r}, successive colons {successive_colons}"));
        }
    }
    Ok(ImplicationOutcome {
        instance: inst.describe(),
        colon_conditions,
        cohen_macaulay,
        r,
        s,
        successive_colons,
        problem,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_same_instances() {
        let a: Vec<String> = {
            let mut g = InstanceGenerator::new(7, Field::Rational);
            (0..5).map(|_| g.quotient_instance().unwrap().describe()).collect()
        };
        let mut g = InstanceGenerator::new(7, Field::Rational);
        let b: Vec<String> = (0..5).map(|_| g.quotient_instance().unwrap().describe()).collect();
        assert_eq!(a, b);
    }

    #[test]
    fn small_suites_are_clean() {
        for o in agreement_suite(1, 10, Field::Rational).unwrap() {
            assert!(o.problem.is_none(), "{}: {:?}", o.instance, o.problem);
        }
        for o in implication_suite(1, 10, Field::Rational).unwrap() {
            assert!(o.problem.is_none(), "{}: {:?}", o.instance, o.problem);
        }
    }

    #[test]
    fn reduction_is_lowest_generator() {
        assert_eq!(leading_exponent("t^9 - 2*t^11"), 9);
        assert_eq!(leading_exponent("t^12"), 12);
    }
}
