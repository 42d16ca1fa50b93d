//! Gorenstein tests for associated graded rings and Rees algebras: the
//! Artinian socle criteria, the colon criteria for a principal reduction,
//! lifting from `R/J`, the canonical slices `J^i : I^r`, the blowup
//! conductor and the Ratliff-Rush variant of the slice test.

use serde::Serialize;

use crate::backend::{IdealBackend, Verdict};
use crate::error::{Error, Result};
use crate::filtration::Filtration;

/// Search bound for reduction numbers and nilpotency indices.
pub const SEARCH_BOUND: u32 = 32;

/// A named condition and its outcome.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Condition {
    pub name: String,
    pub verdict: Verdict,
}

impl Condition {
    fn new(name: &str, verdict: Verdict) -> Self {
        Condition { name: name.to_string(), verdict }
    }
}

/// Outcome of a family of equivalent Gorenstein conditions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CriterionReport {
    pub gorenstein: bool,
    /// The reduction number (or nilpotency index in the Artinian case).
    pub r: u32,
    pub conditions: Vec<Condition>,
    /// Consequences that hold whenever the ring is Gorenstein but do not
    /// characterize it.
    pub consequences: Vec<Condition>,
    /// `λ(S_i)` in the Artinian reduction, when computed.
    pub socle: Option<Vec<u32>>,
    /// `λ(Ḡ_i)`, when computed.
    pub quotient_hilbert: Option<Vec<u32>>,
}

fn agree(what: &str, conditions: &[Condition]) -> Result<bool> {
    let first = conditions[0].verdict.holds;
    if let Some(bad) = conditions.iter().find(|c| c.verdict.holds != first) {
        return Err(Error::CriteriaDisagree(format!(
            "{what}: `{}` says {first} but `{}` says {}",
            conditions[0].name, bad.name, bad.verdict.holds
        )));
    }
    Ok(first)
}

fn half(r: u32) -> i64 {
    (r as i64 - 1).div_euclid(2)
}

/// `R/J` is Gorenstein iff `λ((J : m)/J) = 1`.
pub fn artinian_gorenstein<B: IdealBackend>(backend: &B, j: &B::Ideal) -> Result<bool> {
    let base = backend.colength(j).map_err(|_| Error::NotArtinian)?;
    let socle = backend.colength(&backend.colon(j, &backend.maximal())?)?;
    Ok(base - socle == 1)
}

/// Decides whether `G(Ī)` is Gorenstein for `Ī = (I+J)/J` in the Artinian
/// Gorenstein ring `R/J`, through seven equivalent conditions: socle
/// dimension one, socle concentrated in the top degree, the annihilator
/// identities over the full and the half range, symmetry of the Hilbert
/// function, the colon identities against the top power and faithfulness of
/// the quotients `Ī^{r-i}/Ī^r`. Disagreement is an error.
pub fn quotient_gorenstein_check<B: IdealBackend>(
    backend: &B,
    ideal: &B::Ideal,
    j: &B::Ideal,
) -> Result<CriterionReport> {
    if !artinian_gorenstein(backend, j)? {
        return Err(Error::HypothesisFailure("R/J is not Gorenstein".into()));
    }
    let mut f = Filtration::new(backend, ideal.clone());
    let r = f.index_of_nilpotency(j, SEARCH_BOUND)?;
    let ri = r as i64;
    let mut lifted = Vec::new();
    for n in 0..=ri + 1 {
        lifted.push(backend.sum(&f.power(n)?, j)?);
    }
    let a = |n: i64| lifted[n.clamp(0, ri + 1) as usize].clone();

    let socle = f.socle_table(j, r)?;
    let total: u32 = socle.iter().sum();
    let one = if total == 1 {
        Verdict::pass()
    } else {
        Verdict::fail(-1, format!("socle dimension {total}"), "1".into())
    };
    let below = match socle.iter().take(r as usize).position(|&v| v != 0) {
        None => Verdict::pass(),
        Some(i) => Verdict::fail(i as i64, format!("λ(S_{i}) = {}", socle[i]), "0".into()),
    };

    let annihilator = |range: std::ops::RangeInclusive<i64>| {
        Verdict::check_each(backend, range, |i| {
            Ok((backend.colon(j, &a(ri - i))?, a(i + 1)))
        })
    };
    let full = annihilator(0..=ri - 1)?;
    let partial = annihilator(0..=half(r))?;

    let hilbert = f.quotient_hilbert_function(j, r + 1)?;
    let symmetric = match (0..=half(r)).find(|&i| {
        hilbert.get(i as usize) != hilbert.get((ri - i) as usize)
    }) {
        None => Verdict::pass(),
        Some(i) => Verdict::fail(
            i,
            format!("λ(G_{i}) = {}", hilbert[i as usize]),
            format!("λ(G_{}) = {}", ri - i, hilbert[(ri - i) as usize]),
        ),
    };

    let mut top = Verdict::check_each(backend, 1..=ri - 1, |i| {
        Ok((backend.colon(&a(ri), &a(ri - i))?, a(i)))
    })?;
    if top.holds && r > 0 {
        top = Verdict::check_each(backend, [0], |_| Ok((backend.colon(j, &a(1))?, a(ri))))?;
    }

    // Annihilators of `Ī^{r-i}/Ī^r` computed by peeling off one factor of
    // `Ī` at a time.
    let mut faithful = Verdict::check_each(backend, 1..=ri - 1, |i| {
        let mut ann = a(ri);
        for _ in 0..ri - i {
            ann = backend.colon(&ann, &a(1))?;
        }
        Ok((ann, a(i)))
    })?;
    if faithful.holds && r > 0 {
        faithful =
            Verdict::check_each(backend, [ri], |_| Ok((backend.colon(j, ideal)?, a(ri))))?;
    }

    let conditions = vec![
        Condition::new("socle-dimension-one", one),
        Condition::new("socle-only-in-top-degree", below),
        Condition::new("annihilators-of-powers", full),
        Condition::new("annihilators-of-powers-half-range", partial),
        Condition::new("symmetric-hilbert-function", symmetric),
        Condition::new("colons-into-top-power", top),
        Condition::new("faithful-power-quotients", faithful),
    ];
    let gorenstein = agree("Artinian criteria", &conditions)?;

    let conormal = Verdict::check_each(backend, 0..=ri, |i| {
        Ok((backend.colon(&a(i + 1), &a(i))?, a(1)))
    })?;
    if gorenstein && !conormal.holds {
        return Err(Error::CriteriaDisagree(
            "Gorenstein associated graded ring with I^{i+1} : I^i != I".into(),
        ));
    }
    Ok(CriterionReport {
        gorenstein,
        r,
        conditions,
        consequences: vec![Condition::new("successive-colons-equal-ideal", conormal)],
        socle: Some(socle),
        quotient_hilbert: Some(hilbert),
    })
}

fn require_principal_reduction<B: IdealBackend>(backend: &B, j: &B::Ideal) -> Result<()> {
    if !backend.is_one_dimensional_domain() {
        return Err(Error::Unsupported(
            "colon criteria need a one-dimensional domain".into(),
        ));
    }
    if backend.num_generators(j) != 1 {
        return Err(Error::HypothesisFailure("reduction is not principal".into()));
    }
    Ok(())
}

fn require_gorenstein_ring<B: IdealBackend>(backend: &B) -> Result<()> {
    match backend.is_gorenstein() {
        Some(true) => Ok(()),
        Some(false) => Err(Error::HypothesisFailure("the ring is not Gorenstein".into())),
        None => Err(Error::HypothesisFailure("cannot decide whether the ring is Gorenstein".into())),
    }
}

/// Decides whether `G(I)` is Gorenstein for a principal reduction `J` in a
/// one-dimensional Gorenstein domain, through `J : I^{r-i} = J + I^{i+1}`
/// over `0 ≤ i < r` and over `0 ≤ i ≤ ⌊(r-1)/2⌋`; for `r = 2` also through
/// `J : I^2 = I`. A positive answer must come with a Cohen-Macaulay `G(I)`.
pub fn colon_gorenstein_check<B: IdealBackend>(
    backend: &B,
    ideal: &B::Ideal,
    j: &B::Ideal,
) -> Result<CriterionReport> {
    require_principal_reduction(backend, j)?;
    require_gorenstein_ring(backend)?;
    let mut f = Filtration::new(backend, ideal.clone());
    let r = f.reduction_number(j, SEARCH_BOUND)?;
    let ri = r as i64;
    let range = |f: &mut Filtration<B>, hi: i64| {
        Verdict::check_each(backend, 0..=hi, |i| {
            let lhs = backend.colon(j, &f.power(ri - i)?)?;
            let rhs = backend.sum(j, &f.power(i + 1)?)?;
            Ok((lhs, rhs))
        })
    };
    let full = range(&mut f, ri - 1)?;
    let partial = range(&mut f, half(r))?;
    let mut conditions = vec![
        Condition::new("colon-by-powers", full),
        Condition::new("colon-by-powers-half-range", partial),
    ];
    if r == 2 {
        let square = f.power(2)?;
        let v = Verdict::check_each(backend, [2], |_| Ok((backend.colon(j, &square)?, ideal.clone())))?;
        conditions.push(Condition::new("colon-by-square", v));
    }
    let gorenstein = agree("colon criteria", &conditions)?;
    let cm = f.cm_check_g(j, r)?;
    if gorenstein && !cm.holds {
        return Err(Error::CriteriaDisagree(
            "colon identities hold but G(I) is not Cohen-Macaulay".into(),
        ));
    }
    let top = f.power(ri)?;
    let top_power = Verdict::check_each(backend, 1..=ri, |i| {
        Ok((backend.colon(&top, &f.power(ri - i)?)?, f.power(i)?))
    })?;
    if gorenstein && !top_power.holds {
        return Err(Error::CriteriaDisagree(
            "Gorenstein G(I) with I^r : I^{r-i} != I^i".into(),
        ));
    }
    Ok(CriterionReport {
        gorenstein,
        r,
        conditions,
        consequences: vec![
            Condition::new("cohen-macaulay", cm),
            Condition::new("colons-of-top-power", top_power),
        ],
        socle: None,
        quotient_hilbert: None,
    })
}

/// Lifting from the Artinian reduction: when `I^r ⊄ J` and `G(Ī)` is
/// Gorenstein in `R/J`, `G(I)` must be Gorenstein.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LiftingReport {
    pub top_power_outside_reduction: bool,
    /// `None` when `R/J` is not Gorenstein.
    pub quotient_gorenstein: Option<bool>,
    pub gorenstein: bool,
    /// Whether the lifting statement applied.
    pub applied: bool,
}

pub fn lifting_check<B: IdealBackend>(
    backend: &B,
    ideal: &B::Ideal,
    j: &B::Ideal,
) -> Result<LiftingReport> {
    let full = colon_gorenstein_check(backend, ideal, j)?;
    let mut f = Filtration::new(backend, ideal.clone());
    let outside = !backend.is_subset(&f.power(full.r as i64)?, j)?;
    let quotient = match quotient_gorenstein_check(backend, ideal, j) {
        Ok(rep) => Some(rep.gorenstein),
        Err(Error::HypothesisFailure(_)) => None,
        Err(e) => return Err(e),
    };
    let applied = outside && quotient == Some(true);
    if applied && !full.gorenstein {
        return Err(Error::CriteriaDisagree(
            "G(Ī) Gorenstein with I^r ⊄ J but G(I) is not".into(),
        ));
    }
    Ok(LiftingReport {
        top_power_outside_reduction: outside,
        quotient_gorenstein: quotient,
        gorenstein: full.gorenstein,
        applied,
    })
}

/// The graded pieces `ω_i = J^i : I^r` of the canonical module of the
/// extended Rees algebra, with the invariants read off from them.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CanonicalSlices<I> {
    pub r: u32,
    /// `s_J(I)`.
    pub s: u32,
    /// `max{n : I^r ⊆ J^n}`.
    pub w: u32,
    /// `(i, ω_i)` for `-1 ≤ i ≤ window`.
    #[serde(skip)]
    pub slices: Vec<(i64, I)>,
    /// The shift `u` with `ω_i = I^{i-u}` throughout, if any.
    pub u: Option<u32>,
    /// `a = r - u` when `u` exists.
    pub a_invariant: Option<i64>,
    /// `J ω_i = ω_{i+1}` at the top of the window.
    pub propagation: Verdict,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct QuasiGorensteinReport<I> {
    pub slices: CanonicalSlices<I>,
    pub quasi_gorenstein: bool,
    /// `J^i : I^r = I^i` for `1 ≤ i ≤ r`.
    pub finite_form: Verdict,
    /// Shift `u'` with `J^r : I^r = I^{r-u'}`, if any.
    pub top_shift: Option<u32>,
    /// Whether every power of `I` is Ratliff-Rush closed.
    pub powers_ratliff_rush: bool,
    pub gorenstein: bool,
}

/// Computes `J^i : I^r` over a window and decides whether the extended Rees
/// algebra is quasi-Gorenstein. The window is widened to `2r` when smaller,
/// since a shift can first fail at `i = r + u`. In dimension one the
/// shift-exists, shift-is-zero, finite-range and colon criteria must agree.
pub fn quasi_gorenstein_check<B: IdealBackend>(
    backend: &B,
    ideal: &B::Ideal,
    j: &B::Ideal,
    window: Option<u32>,
) -> Result<QuasiGorensteinReport<B::Ideal>> {
    require_principal_reduction(backend, j)?;
    require_gorenstein_ring(backend)?;
    let mut f = Filtration::new(backend, ideal.clone());
    let r = f.reduction_number(j, SEARCH_BOUND)?;
    let s = f.index_of_nilpotency(j, SEARCH_BOUND)?;
    let window = window.unwrap_or(r + 4);
    if window < r + 3 {
        return Err(Error::StabilizationNotReached(window));
    }
    let top = window.max(2 * r) as i64;
    let ri = r as i64;
    let ir = f.power(ri)?;

    let mut j_powers = vec![backend.unit()];
    for _ in 0..=top {
        let next = backend.product(j_powers.last().unwrap(), j)?;
        j_powers.push(next);
    }
    let jp = |n: i64| j_powers[n.max(0) as usize].clone();

    let mut slices = Vec::new();
    for i in -1..=top {
        slices.push((i, backend.colon(&jp(i), &ir)?));
    }
    let omega = |i: i64| slices[(i + 1) as usize].1.clone();

    let propagation = Verdict::check_each(backend, top - 3..=top - 1, |i| {
        Ok((backend.product(j, &omega(i))?, omega(i + 1)))
    })?;
    if !propagation.holds {
        return Err(Error::StabilizationNotReached(window));
    }

    let mut u = None;
    for cand in 0..=ri {
        let mut ok = true;
        for i in -1..=top {
            if omega(i) != f.power(i - cand)? {
                ok = false;
                break;
            }
        }
        if ok {
            u = Some(cand as u32);
            break;
        }
    }

    let mut w = 0;
    while backend.is_subset(&ir, &jp(w as i64 + 1))? {
        w += 1;
    }

    let finite_form = Verdict::check_each(backend, 1..=ri, |i| Ok((omega(i), f.power(i)?)))?;
    let shift_zero = u == Some(0);
    let criteria = colon_gorenstein_check(backend, ideal, j)?;
    let views = [
        ("shift-exists", u.is_some()),
        ("shift-is-zero", shift_zero),
        ("finite-range", finite_form.holds),
        ("colon-criteria", criteria.gorenstein),
    ];
    if let Some(bad) = views.iter().find(|v| v.1 != views[0].1) {
        return Err(Error::CriteriaDisagree(format!(
            "canonical slices: `{}` says {} but `{}` says {}",
            views[0].0, views[0].1, bad.0, bad.1
        )));
    }
    let a_invariant = u.map(|u| ri - u as i64);
    if let (Some(u), Some(a)) = (u, a_invariant) {
        if u != w || a < s as i64 || a > ri || (s == r) != (u == 0) {
            return Err(Error::CriteriaDisagree(format!(
                "shift {u} inconsistent with w = {w}, s = {s}, r = {r}"
            )));
        }
    }

    let mut top_shift = None;
    for cand in 0..=ri {
        if omega(ri) == f.power(ri - cand)? {
            top_shift = Some(cand as u32);
            break;
        }
    }
    if matches!(top_shift, Some(v) if v != 0) {
        return Err(Error::CriteriaDisagree("J^r : I^r = I^{r-u} with u > 0".into()));
    }
    let powers_rr = f.rr_all_powers(r, r.max(1))?;
    if top_shift == Some(0) && powers_rr && !criteria.gorenstein {
        return Err(Error::CriteriaDisagree(
            "J^r : I^r = I^r with Ratliff-Rush powers but G(I) is not Gorenstein".into(),
        ));
    }

    slices.truncate((window + 2) as usize);
    Ok(QuasiGorensteinReport {
        slices: CanonicalSlices { r, s, w, slices, u, a_invariant, propagation },
        quasi_gorenstein: u.is_some(),
        finite_form,
        top_shift,
        powers_ratliff_rush: powers_rr,
        gorenstein: criteria.gorenstein,
    })
}

/// Checks `I^n (J^i : I^r) ⊆ J^{n+i} : I^r` for `0 ≤ n, i ≤ max`.
pub fn slice_module_check<B: IdealBackend>(
    backend: &B,
    ideal: &B::Ideal,
    j: &B::Ideal,
    max: u32,
) -> Result<Verdict> {
    let mut f = Filtration::new(backend, ideal.clone());
    let r = f.reduction_number(j, SEARCH_BOUND)?;
    let ir = f.power(r as i64)?;
    let mut jp = vec![backend.unit()];
    for _ in 0..2 * max {
        let next = backend.product(jp.last().unwrap(), j)?;
        jp.push(next);
    }
    for n in 0..=max as usize {
        for i in 0..=max as usize {
            let lhs = backend.product(&f.power(n as i64)?, &backend.colon(&jp[i], &ir)?)?;
            let rhs = backend.colon(&jp[n + i], &ir)?;
            if !backend.is_subset(&lhs, &rhs)? {
                return Ok(Verdict::fail(
                    (n * 100 + i) as i64,
                    backend.summary(&lhs),
                    backend.summary(&rhs),
                ));
            }
        }
    }
    Ok(Verdict::pass())
}

/// `J^r : I^r` for each given principal reduction.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BlowupConductor<I> {
    pub r: u32,
    #[serde(skip)]
    pub conductor: I,
    /// `I^r ⊆ J` for each reduction.
    pub top_power_inside: Vec<bool>,
    /// `s_J(I)` for each reduction.
    pub nilpotency: Vec<u32>,
    /// Whether the conductor equals `I^r`.
    pub equals_top_power: bool,
}

/// Computes `J^r : I^r` for every reduction and checks that it, the
/// reduction number, the containment `I^r ⊆ J` and the condition `s = r`
/// do not depend on the choice of `J`.
pub fn blowup_conductor<B: IdealBackend>(
    backend: &B,
    ideal: &B::Ideal,
    reductions: &[B::Ideal],
) -> Result<BlowupConductor<B::Ideal>> {
    if reductions.is_empty() {
        return Err(Error::HypothesisFailure("no reduction given".into()));
    }
    let mut f = Filtration::new(backend, ideal.clone());
    let mut rs = Vec::new();
    for j in reductions {
        require_principal_reduction(backend, j)?;
        rs.push(f.reduction_number(j, SEARCH_BOUND)?);
    }
    if rs.iter().any(|&x| x != rs[0]) {
        return Err(Error::CriteriaDisagree(format!("reduction numbers differ: {rs:?}")));
    }
    let r = rs[0];
    let ir = f.power(r as i64)?;
    let mut conductors = Vec::new();
    let mut inside = Vec::new();
    let mut nil = Vec::new();
    for j in reductions {
        let jr = backend.power(j, r)?;
        conductors.push(backend.colon(&jr, &ir)?);
        inside.push(backend.is_subset(&ir, j)?);
        nil.push(f.index_of_nilpotency(j, SEARCH_BOUND)?);
    }
    if let Some(k) = conductors.iter().position(|c| *c != conductors[0]) {
        return Err(Error::ConductorMismatch(format!(
            "{} vs {}",
            backend.summary(&conductors[0]),
            backend.summary(&conductors[k])
        )));
    }
    if inside.iter().any(|&x| x != inside[0]) {
        return Err(Error::CriteriaDisagree(format!("I^r ⊆ J depends on J: {inside:?}")));
    }
    if nil.iter().any(|&x| (x == r) != (nil[0] == r)) {
        return Err(Error::CriteriaDisagree(format!("s = r depends on J: {nil:?}")));
    }
    let conductor = conductors.swap_remove(0);
    let equals_top_power = conductor == ir;
    if equals_top_power && (inside[0] || nil[0] != r) {
        return Err(Error::CriteriaDisagree(
            "J^r : I^r = I^r but I^r ⊆ J or s != r".into(),
        ));
    }
    Ok(BlowupConductor { r, conductor, top_power_inside: inside, nilpotency: nil, equals_top_power })
}

/// The slice test run on the Ratliff-Rush filtration `F_n = (I^n)~`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RatliffRushSlices<I> {
    /// Least `k` with `J^j F_k = F_{j+k}` for all `j ≥ 0`.
    pub k: u32,
    /// `(i, J^i : F_k)` for `-1 ≤ i ≤ window`.
    #[serde(skip)]
    pub slices: Vec<(i64, I)>,
    /// `b` with `J^i : F_k = F_{i+b-k}` throughout, if any.
    pub b: Option<i64>,
    pub quasi_gorenstein: bool,
}

/// Finds the least `k` for which the Ratliff-Rush filtration is stable under
/// `J` from `F_k` on, then searches for `b` with `J^i : F_k = F_{i+b-k}`.
pub fn ratliff_rush_slices_check<B: IdealBackend>(
    backend: &B,
    ideal: &B::Ideal,
    j: &B::Ideal,
    window: Option<u32>,
) -> Result<RatliffRushSlices<B::Ideal>> {
    require_principal_reduction(backend, j)?;
    require_gorenstein_ring(backend)?;
    let mut f = Filtration::new(backend, ideal.clone());
    let r = f.reduction_number(j, SEARCH_BOUND)?;
    let window = window.unwrap_or(r + 4);
    let top = window.max(2 * r + 2) as i64;
    let mut rr = vec![backend.unit()];
    for n in 1..=2 * top + 2 {
        rr.push(f.ratliff_rush_power(n as u32, r)?);
    }
    let fr = |n: i64| rr[n.max(0) as usize].clone();

    let mut k = None;
    'search: for cand in 0..=r as i64 {
        for n in cand..=cand + top {
            if backend.product(j, &fr(n))? != fr(n + 1) {
                continue 'search;
            }
        }
        k = Some(cand);
        break;
    }
    let k = k.ok_or_else(|| {
        Error::HypothesisNotDetected("no k with J^j (I^k)~ = (I^{j+k})~ for all j".into())
    })?;

    let mut jp = vec![backend.unit()];
    for _ in 0..=top {
        let next = backend.product(jp.last().unwrap(), j)?;
        jp.push(next);
    }
    let fk = fr(k);
    let mut slices = Vec::new();
    for i in -1..=top {
        slices.push((i, backend.colon(&jp[i.max(0) as usize], &fk)?));
    }
    let mut b = None;
    for v in 0..=k {
        if slices.iter().all(|(i, s)| *s == fr(i - v)) {
            b = Some(k - v);
            break;
        }
    }
    slices.truncate((window + 2) as usize);
    Ok(RatliffRushSlices { k: k as u32, slices, b, quasi_gorenstein: b.is_some() })
}
