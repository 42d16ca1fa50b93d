//! The `I`-adic filtration: reductions, Hilbert functions of `G(I)` and
//! `F(I)`, freeness of the conormal modules, Ratliff-Rush closures,
//! Cohen-Macaulay tests and socle tables of the Artinian reduction.

use serde::Serialize;

use crate::backend::{IdealBackend, Verdict};
use crate::error::{Error, Result};

/// An ideal together with a cache of its powers.
pub struct Filtration<'a, B: IdealBackend> {
    backend: &'a B,
    powers: Vec<B::Ideal>,
}

impl<'a, B: IdealBackend> Filtration<'a, B> {
    pub fn new(backend: &'a B, ideal: B::Ideal) -> Self {
        Filtration { backend, powers: vec![backend.unit(), ideal] }
    }

    pub fn backend(&self) -> &'a B {
        self.backend
    }

    pub fn ideal(&self) -> &B::Ideal {
        &self.powers[1]
    }

    /// `I^n`, with `I^n = R` for `n ≤ 0`.
    pub fn power(&mut self, n: i64) -> Result<B::Ideal> {
        if n <= 0 {
            return Ok(self.powers[0].clone());
        }
        while self.powers.len() <= n as usize {
            let next = self.backend.product(self.powers.last().unwrap(), &self.powers[1])?;
            self.powers.push(next);
        }
        Ok(self.powers[n as usize].clone())
    }

    /// `r_J(I)`: least `k ≤ bound` with `J I^k = I^{k+1}`.
    pub fn reduction_number(&mut self, j: &B::Ideal, bound: u32) -> Result<u32> {
        if !self.backend.is_subset(j, self.ideal())? {
            return Err(Error::NotContained("reduction is not inside the ideal".into()));
        }
        for k in 0..=bound {
            let lhs = self.backend.product(j, &self.power(k as i64)?)?;
            if lhs == self.power(k as i64 + 1)? {
                return Ok(k);
            }
        }
        Err(Error::NoReductionWithinBound(bound))
    }

    /// `s_J(I)`: least `i ≤ bound` with `I^{i+1} ⊆ J`.
    pub fn index_of_nilpotency(&mut self, j: &B::Ideal, bound: u32) -> Result<u32> {
        for i in 0..=bound {
            if self.backend.is_subset(&self.power(i as i64 + 1)?, j)? {
                return Ok(i);
            }
        }
        Err(Error::NoReductionWithinBound(bound))
    }

    /// `λ(I^n/I^{n+1})` and `μ(I^n)` for `0 ≤ n ≤ max_degree`.
    pub fn hilbert_functions(&mut self, max_degree: u32) -> Result<HilbertData> {
        let mut colengths = Vec::new();
        let mut hilb_f = Vec::new();
        for n in 0..=max_degree as i64 + 1 {
            let p = self.power(n)?;
            colengths.push(self.backend.colength(&p)?);
            if n <= max_degree as i64 {
                hilb_f.push(self.backend.num_generators(&p));
            }
        }
        let hilb_g: Vec<u32> = colengths.windows(2).map(|w| w[1] - w[0]).collect();
        let e_i = stabilized(&hilb_g, max_degree)?;
        let e_f = stabilized(&hilb_f, max_degree)?;
        Ok(HilbertData { hilb_g, hilb_f, e_i, e_f, colengths })
    }

    /// `λ(Ī^n/Ī^{n+1})` in `R/J`, until `Ī^n = 0` or `n > max_degree`.
    pub fn quotient_hilbert_function(&mut self, j: &B::Ideal, max_degree: u32) -> Result<Vec<u32>> {
        let mut out = Vec::new();
        let mut prev = self.backend.colength(&self.backend.sum(&self.power(0)?, j)?)?;
        for n in 1..=max_degree as i64 + 1 {
            let cur = self.backend.colength(&self.backend.sum(&self.power(n)?, j)?)?;
            if cur == prev {
                break;
            }
            out.push(cur - prev);
            prev = cur;
        }
        Ok(out)
    }

    /// Per-degree freeness of `I^n/I^{n+1}` over `R/I`, decided by
    /// `λ(I^n/I^{n+1}) = λ(R/I)·μ(I^n)`.
    pub fn free_degrees(&mut self, hilbert: &HilbertData) -> Result<Vec<bool>> {
        let base = self.backend.colength(self.ideal())?;
        Ok(hilbert.hilb_g.iter().zip(&hilbert.hilb_f).map(|(g, f)| *g == base * f).collect())
    }

    /// `(I^n)~ = I^{n+r} : I^r` for a principal reduction with reduction number `r`.
    pub fn ratliff_rush_power(&mut self, n: u32, r: u32) -> Result<B::Ideal> {
        let top = self.power((n + r) as i64)?;
        let base = self.power(r as i64)?;
        self.backend.colon(&top, &base)
    }

    /// Closure of `I` as the limit of `W_n = I^{n+1} : I^n`, with the chain
    /// recorded until it has been constant for `margin` steps past `r`.
    pub fn ratliff_rush(&mut self, r: u32, margin: u32) -> Result<RatliffRush<B::Ideal>> {
        let mut chain = Vec::new();
        let mut stable_since = None;
        for n in 1..=r.max(1) + margin {
            let top = self.power(n as i64 + 1)?;
            let w = self.backend.colon(&top, &self.power(n as i64)?)?;
            match chain.last() {
                Some(prev) if *prev == w => {}
                _ => stable_since = Some(n),
            }
            chain.push(w);
        }
        let since = stable_since.unwrap_or(1);
        let closure = chain.last().unwrap().clone();
        let probe = self.power(r.max(1) as i64)?;
        let certified = since <= r.max(1)
            && self.backend.product(&closure, &probe)? == self.power(r.max(1) as i64 + 1)?;
        let colengths = chain.iter().map(|w| self.backend.colength(w)).collect::<Result<_>>()?;
        Ok(RatliffRush { closure, certified, chain_colengths: colengths })
    }

    /// Whether `(I^n)~ = I^n` for `1 ≤ n ≤ max_degree`.
    pub fn rr_all_powers(&mut self, r: u32, max_degree: u32) -> Result<bool> {
        for n in 1..=max_degree {
            if self.ratliff_rush_power(n, r)? != self.power(n as i64)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Valabrega-Valla: `J ∩ I^i = J I^{i-1}` for `1 ≤ i ≤ r`, cross-checked
    /// against the Ratliff-Rush property of the powers `I^n`, `n ≤ max(r, 1)`.
    pub fn cm_check_g(&mut self, j: &B::Ideal, r: u32) -> Result<Verdict> {
        let backend = self.backend;
        let verdict = Verdict::check_each(backend, 1..=r as i64, |i| {
            let lhs = backend.intersect(j, &self.power(i)?)?;
            let rhs = backend.product(j, &self.power(i - 1)?)?;
            Ok((lhs, rhs))
        })?;
        let rr = self.rr_all_powers(r, r.max(1))?;
        if rr != verdict.holds {
            return Err(Error::CriteriaDisagree(format!(
                "intersection test says {}, Ratliff-Rush powers say {}",
                verdict.holds, rr
            )));
        }
        Ok(verdict)
    }

    /// `F(I)` is Cohen-Macaulay iff `(m I^{i+1} : J) ∩ I^i = m I^i` for
    /// `1 ≤ i ≤ max_degree`.
    pub fn fiber_cm_dim1(&mut self, j: &B::Ideal, max_degree: u32) -> Result<Verdict> {
        let backend = self.backend;
        Verdict::check_each(backend, 1..=max_degree as i64, |i| {
            let next = backend.maximal_times(&self.power(i + 1)?)?;
            let cur = self.power(i)?;
            let lhs = backend.intersect(&backend.colon(&next, j)?, &cur)?;
            Ok((lhs, backend.maximal_times(&cur)?))
        })
    }

    /// `λ(S_i)` for `0 ≤ i ≤ top`, where
    /// `S_i = (Ī^i ∩ (Ī^{i+1} : m) ∩ (Ī^{i+2} : Ī)) / Ī^{i+1}` in `R/J`.
    pub fn socle_table(&mut self, j: &B::Ideal, top: u32) -> Result<Vec<u32>> {
        let backend = self.backend;
        backend.colength(j).map_err(|_| Error::NotArtinian)?;
        let m = backend.maximal();
        let ideal = self.ideal().clone();
        let mut out = Vec::new();
        for i in 0..=top as i64 {
            let a0 = backend.sum(&self.power(i)?, j)?;
            let a1 = backend.sum(&self.power(i + 1)?, j)?;
            let a2 = backend.sum(&self.power(i + 2)?, j)?;
            let s = backend.intersect(&a0, &backend.colon(&a1, &m)?)?;
            let s = backend.intersect(&s, &backend.colon(&a2, &ideal)?)?;
            out.push(backend.colength(&a1)? - backend.colength(&s)?);
        }
        Ok(out)
    }
}

fn stabilized(values: &[u32], max_degree: u32) -> Result<u32> {
    match values {
        [.., a, b, c] if a == b && b == c => Ok(*c),
        _ => Err(Error::StabilizationNotReached(max_degree)),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HilbertData {
    /// `λ(I^n/I^{n+1})`.
    pub hilb_g: Vec<u32>,
    /// `μ(I^n)`.
    pub hilb_f: Vec<u32>,
    pub e_i: u32,
    pub e_f: u32,
    /// `λ(R/I^n)` for `0 ≤ n ≤ max_degree + 1`.
    pub colengths: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RatliffRush<I> {
    pub closure: I,
    /// The chain was constant from index `r` on and the closure multiplies
    /// `I^r` into `I^{r+1}`.
    pub certified: bool,
    pub chain_colengths: Vec<u32>,
}

/// Everything the filtration analysis decides about `(I, J)`.
#[derive(Debug, Clone, PartialEq)]
pub struct FiltrationReport<I> {
    pub colength: u32,
    pub reduction_valid: bool,
    pub r: Option<u32>,
    pub s: Option<u32>,
    pub hilbert: HilbertData,
    pub free_degrees: Vec<bool>,
    pub normally_flat: bool,
    pub quotient_hilb: Option<Vec<u32>>,
    pub socle: Option<Vec<u32>>,
    pub g_cm: Option<Verdict>,
    pub f_cm_dim1: Option<Verdict>,
    pub rr: Option<RatliffRush<I>>,
    pub rr_all_powers: Option<bool>,
}

/// Options for [`analyze`].
#[derive(Debug, Clone, Copy)]
pub struct AnalysisBounds {
    /// Largest power probed when searching for `r` and `s`.
    pub reduction_bound: u32,
    /// Degrees beyond `r` probed for stabilization; the Hilbert functions run
    /// to `max(r + extra, min_degree)`.
    pub extra_degrees: u32,
    pub min_degree: u32,
    pub rr_margin: u32,
}

impl Default for AnalysisBounds {
    fn default() -> Self {
        AnalysisBounds { reduction_bound: 24, extra_degrees: 3, min_degree: 4, rr_margin: 2 }
    }
}

/// Runs the filtration analysis of `I`, optionally relative to a reduction `J`.
pub fn analyze<B: IdealBackend>(
    backend: &B,
    ideal: &B::Ideal,
    reduction: Option<&B::Ideal>,
    bounds: AnalysisBounds,
) -> Result<FiltrationReport<B::Ideal>> {
    let mut f = Filtration::new(backend, ideal.clone());
    let colength = backend.colength(ideal)?;
    let (r, s) = match reduction {
        Some(j) => {
            let r = f.reduction_number(j, bounds.reduction_bound)?;
            (Some(r), Some(f.index_of_nilpotency(j, r)?))
        }
        None => (None, None),
    };
    let degree = (r.unwrap_or(0) + bounds.extra_degrees).max(bounds.min_degree);
    let hilbert = f.hilbert_functions(degree)?;
    let free_degrees = f.free_degrees(&hilbert)?;
    let normally_flat = free_degrees.iter().all(|&b| b);
    let mut report = FiltrationReport {
        colength,
        reduction_valid: r.is_some(),
        r,
        s,
        hilbert,
        free_degrees,
        normally_flat,
        quotient_hilb: None,
        socle: None,
        g_cm: None,
        f_cm_dim1: None,
        rr: None,
        rr_all_powers: None,
    };
    if let (Some(j), Some(r), Some(s)) = (reduction, r, s) {
        report.quotient_hilb = Some(f.quotient_hilbert_function(j, degree)?);
        report.socle = Some(f.socle_table(j, s)?);
        if backend.is_one_dimensional_domain() && backend.num_generators(j) == 1 {
            report.g_cm = Some(f.cm_check_g(j, r)?);
            report.f_cm_dim1 = Some(f.fiber_cm_dim1(j, r + 1)?);
            report.rr = Some(f.ratliff_rush(r, bounds.rr_margin)?);
            report.rr_all_powers = Some(f.rr_all_powers(r, degree)?);
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::{RingIdeal, SemigroupRing};
    use crate::monomial::MonomialQuotientRing;
    use crate::scalar::Field;
    use crate::semigroup::NumericalSemigroup;
    use std::sync::Arc;

    fn ring(gens: &[u32]) -> Arc<SemigroupRing> {
        SemigroupRing::new(NumericalSemigroup::new(gens).unwrap(), Field::Rational)
    }

    fn mono(r: &Arc<SemigroupRing>, e: &[u32]) -> RingIdeal {
        r.monomial_ideal(e).unwrap()
    }

    #[test]
    fn semigroup_4_9_10() {
        let r = ring(&[4, 9, 10]);
        let i = mono(&r, &[8, 9, 10]);
        let j = mono(&r, &[8]);
        let rep = analyze(&r, &i, Some(&j), AnalysisBounds::default()).unwrap();
        assert_eq!(rep.r, Some(2));
        assert_eq!(rep.s, Some(2));
        assert_eq!(rep.colength, 2);
        assert_eq!(rep.hilbert.e_i, 8);
        assert_eq!(&rep.hilbert.hilb_f[..4], &[1, 3, 4, 4]);
        assert!(rep.normally_flat);
        assert!(rep.g_cm.as_ref().unwrap().holds);
        assert!(rep.f_cm_dim1.as_ref().unwrap().holds);
        assert_eq!(rep.socle.as_deref(), Some(&[0, 0, 1][..]));
        assert_eq!(rep.quotient_hilb.as_ref().unwrap().iter().sum::<u32>(), 8);
    }

    #[test]
    fn semigroup_3_7_11() {
        let r = ring(&[3, 7, 11]);
        let i = mono(&r, &[6, 7, 11]);
        let j = mono(&r, &[6]);
        let rep = analyze(&r, &i, Some(&j), AnalysisBounds { min_degree: 6, ..Default::default() }).unwrap();
        assert_eq!(rep.hilbert.hilb_g[1], 5);
        assert!(!rep.free_degrees[1]);
        assert!(rep.free_degrees[2..=6].iter().all(|&b| b));
        assert!(rep.hilbert.hilb_f[2..=6].iter().all(|&m| m == 3));
        assert_eq!(rep.hilbert.e_i, 6);
        assert_eq!(rep.hilbert.e_i, rep.colength * rep.hilbert.e_f);
        assert!(rep.g_cm.unwrap().holds);
        assert!(!rep.f_cm_dim1.unwrap().holds);
    }

    #[test]
    fn semigroup_5_6_9_quotient() {
        let r = ring(&[5, 6, 9]);
        let m = r.maximal_ideal();
        let j = mono(&r, &[5]);
        let rep = analyze(&r, &m, Some(&j), AnalysisBounds::default()).unwrap();
        assert_eq!(rep.r, Some(3));
        assert_eq!(rep.quotient_hilb.as_deref(), Some(&[1, 2, 1, 1][..]));
        assert!(rep.g_cm.as_ref().unwrap().holds);
        let socle = rep.socle.unwrap();
        assert_eq!(socle[3], 1);
        assert!(socle[..3].iter().any(|&x| x != 0));
    }

    #[test]
    fn semigroup_4_5_6() {
        let r = ring(&[4, 5, 6]);
        let i = mono(&r, &[4, 5]);
        let j = mono(&r, &[4]);
        let jp = RingIdeal::principal(&r, &r.element("t^4 - t^5").unwrap()).unwrap();
        let mut f = Filtration::new(&r, i.clone());
        assert_eq!(f.reduction_number(&j, 10).unwrap(), 3);
        assert_eq!(f.index_of_nilpotency(&j, 3).unwrap(), 1);
        assert_eq!(f.reduction_number(&jp, 10).unwrap(), 3);
        assert_eq!(f.index_of_nilpotency(&jp, 3).unwrap(), 2);
        assert_eq!(f.quotient_hilbert_function(&jp, 6).unwrap(), vec![2, 1, 1]);
        assert!(!f.cm_check_g(&j, 3).unwrap().holds);
        let m = r.maximal_ideal();
        for n in 1..=5 {
            assert_eq!(f.ratliff_rush_power(n, 3).unwrap(), m.power(n).unwrap());
        }
        let rr = f.ratliff_rush(3, 2).unwrap();
        assert_eq!(rr.closure, m);
        assert!(rr.certified);
    }

    #[test]
    fn semigroup_5_6_7_8() {
        let r = ring(&[5, 6, 7, 8]);
        let i = mono(&r, &[5, 6, 7]);
        let j = mono(&r, &[5]);
        let rep = analyze(&r, &i, Some(&j), AnalysisBounds::default()).unwrap();
        assert_eq!(rep.r, Some(2));
        assert!(!rep.g_cm.unwrap().holds);
        assert_eq!(rep.rr.unwrap().closure, r.maximal_ideal());
        assert_eq!(rep.rr_all_powers, Some(false));
    }

    #[test]
    fn trivial_cases() {
        let r = ring(&[1]);
        let i = mono(&r, &[1]);
        let rep = analyze(&r, &i, Some(&i), AnalysisBounds::default()).unwrap();
        assert!(rep.hilbert.hilb_g.iter().all(|&h| h == 1));
        assert_eq!(rep.hilbert.e_i, 1);
        assert_eq!(rep.r, Some(0));
        assert!(rep.free_degrees[0]);

        let r = ring(&[4, 5, 6]);
        let j = mono(&r, &[4]);
        let rep = analyze(&r, &j, Some(&j), AnalysisBounds::default()).unwrap();
        assert_eq!(rep.socle.as_deref(), Some(&[1][..]));
        assert!(rep.f_cm_dim1.unwrap().holds);
        assert_eq!(rep.rr.unwrap().closure, j);
    }

    #[test]
    fn reduction_errors() {
        let r = ring(&[4, 5, 6]);
        let i = mono(&r, &[4, 5]);
        let j = mono(&r, &[5]);
        let mut f = Filtration::new(&r, i);
        assert!(matches!(f.reduction_number(&r.maximal_ideal(), 4), Err(Error::NotContained(_))));
        assert_eq!(f.reduction_number(&j, 2), Err(Error::NoReductionWithinBound(2)));
    }

    #[test]
    fn monomial_inline_examples() {
        let q = MonomialQuotientRing::new(vec!["x".into(), "y".into()], vec![vec![2, 1], vec![0, 3]]).unwrap();
        let i = q.ideal(vec![vec![1, 0]]).unwrap();
        let mut f = Filtration::new(&q, i);
        let h = f.hilbert_functions(6).unwrap();
        assert_eq!(&h.colengths[..3], &[0, 3, 6]);

        let q = MonomialQuotientRing::new(
            vec!["x".into(), "y".into(), "z".into()],
            vec![vec![2, 0, 0], vec![0, 2, 0], vec![1, 1, 2]],
        )
        .unwrap();
        let i = q.ideal(vec![vec![0, 1, 0], vec![0, 0, 1]]).unwrap();
        let mut f = Filtration::new(&q, i);
        let h = f.hilbert_functions(6).unwrap();
        assert_eq!(h.hilb_g[1], 4);
        assert_eq!(h.hilb_g[2], 4);
    }
}
