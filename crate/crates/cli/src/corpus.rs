//! Built-in reference cases with an expected-value table.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;
use serde_json::{json, Value};

use graded_core::criteria::{
    blowup_conductor, colon_gorenstein_check, quasi_gorenstein_check, quotient_gorenstein_check,
    slice_module_check,
};
use graded_core::filtration::{analyze, AnalysisBounds, Filtration};
use graded_core::linalg::SparseVec;
use graded_core::presentation::{ci_assess, present_f, present_g, CiVerdict, GradedPresentation, ResidueArithmetic};
use graded_core::{
    Error, Field, IdealBackend, MonomialIdeal, MonomialQuotientRing, NumericalSemigroup, Result, RingIdeal,
    SemigroupRing,
};

/// How a case builds its rings.
#[derive(Debug, Clone, Copy)]
pub struct CaseContext {
    pub field: Field,
    /// Multiplies the default initial precision of semigroup rings.
    pub precision_factor: u32,
}

impl Default for CaseContext {
    fn default() -> Self {
        CaseContext { field: Field::Rational, precision_factor: 1 }
    }
}

pub type Fields = BTreeMap<String, Value>;

pub struct Case {
    pub id: &'static str,
    pub ring: &'static str,
    pub compute: fn(&CaseContext) -> Result<Fields>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Mismatch {
    pub case: String,
    pub field: String,
    pub expected: Value,
    pub got: Value,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CaseOutcome {
    pub id: String,
    pub ring: String,
    pub checked: usize,
    pub computed: Fields,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CorpusReport {
    pub cases: Vec<CaseOutcome>,
    pub mismatches: Vec<Mismatch>,
    pub passed: bool,
}

impl CorpusReport {
    /// `CorpusMismatch` listing every differing field.
    pub fn into_result(self) -> Result<CorpusReport> {
        if self.passed {
            return Ok(self);
        }
        let lines: Vec<String> = self
            .mismatches
            .iter()
            .map(|m| format!("{} / {}: expected {}, got {}", m.case, m.field, m.expected, m.got))
            .collect();
        Err(Error::CorpusMismatch(lines.join("; ")))
    }
}

fn semigroup(ctx: &CaseContext, gens: &[u32]) -> Result<Arc<SemigroupRing>> {
    let sg = NumericalSemigroup::new(gens)?;
    let base = SemigroupRing::new(sg.clone(), ctx.field).precision();
    Ok(SemigroupRing::with_precision(sg, ctx.field, base * ctx.precision_factor))
}

fn ideal(ring: &Arc<SemigroupRing>, gens: &[&str]) -> Result<(RingIdeal, Vec<SparseVec<u32>>)> {
    let els = gens.iter().map(|g| ring.element(g)).collect::<Result<Vec<_>>>()?;
    let i = RingIdeal::echelonize(ring, &els)?;
    Ok((i, els.iter().map(|e| e.terms().to_vec()).collect()))
}

fn ci_text(p: &GradedPresentation, dim: u32) -> Value {
    match ci_assess(p, dim) {
        Ok(CiVerdict::CompleteIntersection { .. }) => json!("complete-intersection"),
        Ok(CiVerdict::NotCompleteIntersection) => json!("not-complete-intersection"),
        Err(_) => json!("inconclusive"),
    }
}

fn texts(p: &GradedPresentation) -> Value {
    json!(p.generators.iter().map(|g| g.text.clone()).collect::<Vec<_>>())
}

/// Echelon data of an ideal, for precision comparisons.
fn shape(i: &RingIdeal) -> Value {
    json!(i.summary())
}

fn put(f: &mut Fields, key: &str, v: impl Serialize) {
    f.insert(key.to_string(), serde_json::to_value(v).unwrap());
}

/// `I^n (J^i : I^r) ⊆ J^{n+i} : I^r` for `n, i ≤ 4`.
fn slice_inclusions<B: IdealBackend>(b: &B, i: &B::Ideal, j: &B::Ideal, f: &mut Fields) -> Result<()> {
    put(f, "slice_module_inclusions", slice_module_check(b, i, j, 4)?.holds);
    Ok(())
}

fn gorenstein_quadrics(ctx: &CaseContext) -> Result<Fields> {
    let r = semigroup(ctx, &[4, 9, 10])?;
    let (i, g) = ideal(&r, &["t^8", "t^9", "t^10"])?;
    let (j, _) = ideal(&r, &["t^8"])?;
    let a = analyze(&r, &i, Some(&j), AnalysisBounds::default())?;
    let mut f = Fields::new();
    put(&mut f, "symmetric", r.semigroup().is_symmetric());
    put(&mut f, "r", a.r);
    put(&mut f, "colength", a.colength);
    put(&mut f, "e_I", a.hilbert.e_i);
    put(&mut f, "hilb_F", &a.hilbert.hilb_f[..4]);
    put(&mut f, "normally_flat", a.normally_flat);
    put(&mut f, "G_cohen_macaulay", a.g_cm.as_ref().map(|v| v.holds));
    put(&mut f, "F_cohen_macaulay", a.f_cm_dim1.as_ref().map(|v| v.holds));
    put(&mut f, "socle", &a.socle);
    let p = present_g(&r, &i, &g, 6, None)?;
    let k = present_f(&r, &i, &g, 6, None)?;
    put(&mut f, "L_degrees", p.generator_degrees());
    put(&mut f, "L_generators", texts(&p));
    put(&mut f, "L_complete_intersection", ci_text(&p, 1));
    put(&mut f, "K_counts_equal_L_counts", k.generator_counts == p.generator_counts);
    put(&mut f, "colon_criteria_gorenstein", colon_gorenstein_check(&r, &i, &j)?.gorenstein);
    put(&mut f, "quotient_criteria_gorenstein", quotient_gorenstein_check(&r, &i, &j)?.gorenstein);
    put(&mut f, "I_shape", shape(&i));
    put(&mut f, "I_squared_shape", shape(&i.power(2)?));
    slice_inclusions(&r, &i, &j, &mut f)?;
    Ok(f)
}

fn non_free_conormal(ctx: &CaseContext) -> Result<Fields> {
    let r = semigroup(ctx, &[3, 7, 11])?;
    let (i, g) = ideal(&r, &["t^6", "t^7", "t^11"])?;
    let (j, _) = ideal(&r, &["t^6"])?;
    let a = analyze(&r, &i, Some(&j), AnalysisBounds { min_degree: 7, ..Default::default() })?;
    let mut f = Fields::new();
    put(&mut f, "symmetric", r.semigroup().is_symmetric());
    put(&mut f, "colength", a.colength);
    put(&mut f, "conormal_length_1", a.hilbert.hilb_g[1]);
    put(&mut f, "conormal_1_free", a.free_degrees[1]);
    put(&mut f, "I_squared", i.power(2)?.to_string());
    let ranks: Vec<Option<u32>> =
        (2..=6).map(|n| a.free_degrees[n].then_some(a.hilbert.hilb_f[n])).collect();
    put(&mut f, "free_ranks_2_to_6", ranks);
    put(&mut f, "e_I", a.hilbert.e_i);
    put(&mut f, "e_F", a.hilbert.e_f);
    put(&mut f, "e_I_equals_colength_times_e_F", a.hilbert.e_i == a.colength * a.hilbert.e_f);
    put(&mut f, "normally_flat", a.normally_flat);
    put(&mut f, "G_cohen_macaulay", a.g_cm.as_ref().map(|v| v.holds));
    put(&mut f, "F_cohen_macaulay", a.f_cm_dim1.as_ref().map(|v| v.holds));
    let p = present_g(&r, &i, &g, 6, None)?;
    put(&mut f, "L_degrees", p.generator_degrees());
    put(&mut f, "L_generators", texts(&p));
    put(&mut f, "L_complete_intersection", ci_text(&p, 1));
    put(&mut f, "I_shape", shape(&i));
    slice_inclusions(&r, &i, &j, &mut f)?;
    Ok(f)
}

fn hypersurface_fiber_cone(ctx: &CaseContext) -> Result<Fields> {
    let r = semigroup(ctx, &[3, 4, 5])?;
    let (i, g) = ideal(&r, &["t^3", "t^4"])?;
    let (j, _) = ideal(&r, &["t^3"])?;
    let a = analyze(&r, &i, Some(&j), AnalysisBounds::default())?;
    let mut f = Fields::new();
    put(&mut f, "symmetric", r.semigroup().is_symmetric());
    put(&mut f, "r", a.r);
    put(&mut f, "colength", a.colength);
    put(&mut f, "conormal_length_1", a.hilbert.hilb_g[1]);
    put(&mut f, "conormal_1_free", a.free_degrees[1]);
    put(&mut f, "e_I", a.hilbert.e_i);
    put(&mut f, "e_F", a.hilbert.e_f);
    let p = present_g(&r, &i, &g, 6, None)?;
    let k = present_f(&r, &i, &g, 6, None)?;
    put(&mut f, "L_degrees", p.generator_degrees());
    put(&mut f, "L_generators", texts(&p));
    put(&mut f, "K_generators", texts(&k));
    put(&mut f, "L_complete_intersection", ci_text(&p, 1));
    put(&mut f, "K_complete_intersection", ci_text(&k, 1));
    put(&mut f, "I_shape", shape(&i));
    slice_inclusions(&r, &i, &j, &mut f)?;
    Ok(f)
}

fn non_gorenstein_maximal_ideal(ctx: &CaseContext) -> Result<Fields> {
    let r = semigroup(ctx, &[5, 6, 9])?;
    let m = r.maximal_ideal();
    let (j, _) = ideal(&r, &["t^5"])?;
    let a = analyze(&r, &m, Some(&j), AnalysisBounds::default())?;
    let q = quotient_gorenstein_check(&r, &m, &j)?;
    let mut f = Fields::new();
    put(&mut f, "symmetric", r.semigroup().is_symmetric());
    put(&mut f, "r", a.r);
    put(&mut f, "quotient_hilbert", &q.quotient_hilbert);
    put(&mut f, "socle", &q.socle);
    put(&mut f, "quotient_criteria_gorenstein", q.gorenstein);
    put(&mut f, "colon_criteria_gorenstein", colon_gorenstein_check(&r, &m, &j)?.gorenstein);
    put(&mut f, "G_cohen_macaulay", a.g_cm.as_ref().map(|v| v.holds));
    put(&mut f, "m_shape", shape(&m));
    slice_inclusions(&r, &m, &j, &mut f)?;
    Ok(f)
}

fn reduction_dependence(ctx: &CaseContext) -> Result<Fields> {
    let r = semigroup(ctx, &[4, 5, 6])?;
    let (i, _) = ideal(&r, &["t^4", "t^5"])?;
    let (j, _) = ideal(&r, &["t^4"])?;
    let (j2, _) = ideal(&r, &["t^4 - t^5"])?;
    let mut filt = Filtration::new(&r, i.clone());
    let a = analyze(&r, &i, Some(&j), AnalysisBounds::default())?;
    let q1 = quotient_gorenstein_check(&r, &i, &j)?;
    let q2 = quotient_gorenstein_check(&r, &i, &j2)?;
    let mut f = Fields::new();
    put(&mut f, "symmetric", r.semigroup().is_symmetric());
    put(&mut f, "r", a.r);
    put(&mut f, "r_other_reduction", filt.reduction_number(&j2, 24)?);
    put(&mut f, "s", filt.index_of_nilpotency(&j, 24)?);
    put(&mut f, "s_other_reduction", filt.index_of_nilpotency(&j2, 24)?);
    put(&mut f, "quotient_criteria_gorenstein", q1.gorenstein);
    put(&mut f, "quotient_criteria_gorenstein_other_reduction", q2.gorenstein);
    put(&mut f, "quotient_hilbert", &q1.quotient_hilbert);
    put(&mut f, "quotient_hilbert_other_reduction", &q2.quotient_hilbert);
    put(&mut f, "G_cohen_macaulay", a.g_cm.as_ref().map(|v| v.holds));
    let c = blowup_conductor(&r, &i, &[j.clone(), j2.clone()]);
    put(&mut f, "conductors_equal", c.is_ok());
    if let Ok(c) = c {
        put(&mut f, "conductor", c.conductor.to_string());
    }
    put(&mut f, "I_shape", shape(&i));
    slice_inclusions(&r, &i, &j, &mut f)?;
    Ok(f)
}

fn ratliff_rush_gap(ctx: &CaseContext) -> Result<Fields> {
    let r = semigroup(ctx, &[5, 6, 7, 8])?;
    let (i, _) = ideal(&r, &["t^5", "t^6", "t^7"])?;
    let (j, _) = ideal(&r, &["t^5"])?;
    let m = r.maximal_ideal();
    let a = analyze(&r, &i, Some(&j), AnalysisBounds::default())?;
    let mut f = Fields::new();
    put(&mut f, "symmetric", r.semigroup().is_symmetric());
    put(&mut f, "r", a.r);
    let r_i = a.r.unwrap_or(0);
    let top = i.power(r_i)?;
    put(&mut f, "J_r_colon_I_r_equals_I_r", j.power(r_i)?.colon(&top)? == top);
    put(&mut f, "G_cohen_macaulay", a.g_cm.as_ref().map(|v| v.holds));
    put(&mut f, "ratliff_rush_closure_is_maximal", a.rr.as_ref().map(|c| c.closure == m));
    let qm = quasi_gorenstein_check(&r, &m, &j, None)?;
    put(&mut f, "m_shift_u", qm.slices.u);
    put(&mut f, "m_gorenstein", qm.gorenstein);
    let qi = quasi_gorenstein_check(&r, &i, &j, None)?;
    put(&mut f, "I_top_shift", qi.top_shift);
    put(&mut f, "I_all_powers_ratliff_rush", qi.powers_ratliff_rush);
    put(&mut f, "I_gorenstein", qi.gorenstein);
    put(&mut f, "I_shape", shape(&i));
    slice_inclusions(&r, &i, &j, &mut f)?;
    slice_inclusions(&r, &m, &j, &mut f)?;
    Ok(f)
}

fn no_canonical_shift(ctx: &CaseContext) -> Result<Fields> {
    let r = semigroup(ctx, &[4, 5, 6])?;
    let (i, _) = ideal(&r, &["t^4", "t^5"])?;
    let (j, _) = ideal(&r, &["t^4"])?;
    let m = r.maximal_ideal();
    let mut filt = Filtration::new(&r, i.clone());
    let r_i = filt.reduction_number(&j, 24)?;
    let mp = |n: u32| m.power(n);
    let mut rr_ok = true;
    for n in 1..=5 {
        rr_ok &= filt.ratliff_rush_power(n, r_i)? == mp(n)?;
    }
    let i3 = filt.power(3)?;
    let mut slices_ok = true;
    let mut m_slices_ok = true;
    let m2 = mp(2)?;
    for n in 1..=6 {
        let jn = j.power(n)?;
        slices_ok &= jn.colon(&i3)? == mp(n - 1)?;
        m_slices_ok &= jn.colon(&m2)? == mp(n)?;
    }
    let q = quasi_gorenstein_check(&r, &i, &j, None)?;
    let mut mf = Filtration::new(&r, m.clone());
    let mut f = Fields::new();
    put(&mut f, "r", r_i);
    put(&mut f, "ratliff_rush_powers_are_maximal_powers", rr_ok);
    put(&mut f, "I_cubed_equals_m_cubed", i3 == mp(3)?);
    put(&mut f, "slices_are_shifted_maximal_powers", slices_ok);
    put(&mut f, "shift_u", q.slices.u);
    put(&mut f, "quasi_gorenstein", q.quasi_gorenstein);
    put(&mut f, "m_slices_are_maximal_powers", m_slices_ok);
    put(&mut f, "m_reduction_number", mf.reduction_number(&j, 24)?);
    put(&mut f, "I_shape", shape(&i));
    slice_inclusions(&r, &i, &j, &mut f)?;
    Ok(f)
}

fn monomial_ring(names: &[&str], rels: Vec<Vec<u32>>, ctx: &CaseContext) -> Result<MonomialQuotientRing> {
    Ok(MonomialQuotientRing::new(names.iter().map(|s| s.to_string()).collect(), rels)?.with_field(ctx.field))
}

fn monomial_gens(ctx: &CaseContext, exps: &[Vec<u32>]) -> Vec<SparseVec<Vec<u32>>> {
    exps.iter().map(|e| vec![(e.clone(), ctx.field.one())]).collect()
}

fn non_cm_parameter_ideal(ctx: &CaseContext) -> Result<Fields> {
    let q = monomial_ring(&["x", "y"], vec![vec![2, 1], vec![0, 3]], ctx)?;
    let exps = vec![vec![1, 0]];
    let i: MonomialIdeal = q.ideal(exps.clone())?;
    let g = monomial_gens(ctx, &exps);
    let p = present_g(&q, &i, &g, 6, Some(vec!["U".into()]))?;
    let k = present_f(&q, &i, &g, 6, Some(vec!["U".into()]))?;
    let mut f = Fields::new();
    put(&mut f, "lengths", [IdealBackend::colength(&q, &i)?, IdealBackend::colength(&q, &q.power(&i, 2))?]);
    put(&mut f, "L_counts_0_to_2", &p.generator_counts[..3]);
    put(&mut f, "L_generators", texts(&p));
    put(&mut f, "N_G_at_least_2", p.relation_type_lower_bound >= 2);
    put(&mut f, "K_total_generators", k.total_generators());
    put(&mut f, "N_F", k.relation_type_lower_bound);
    put(&mut f, "dimension", q.dimension());
    slice_inclusions(&q, &i, &i, &mut f)?;
    Ok(f)
}

fn relation_type_gap(ctx: &CaseContext) -> Result<Fields> {
    let q = monomial_ring(&["x", "y", "z"], vec![vec![2, 0, 0], vec![0, 2, 0], vec![1, 1, 2]], ctx)?;
    let exps = vec![vec![0, 1, 0], vec![0, 0, 1]];
    let i = q.ideal(exps.clone())?;
    let g = monomial_gens(ctx, &exps);
    let names = Some(vec!["Y".to_string(), "Z".to_string()]);
    let p = present_g(&q, &i, &g, 6, names.clone())?;
    let k = present_f(&q, &i, &g, 6, names)?;
    let lengths = (1..=3)
        .map(|n| IdealBackend::colength(&q, &q.power(&i, n)))
        .collect::<Result<Vec<u32>>>()?;
    let j = q.ideal(vec![vec![0, 0, 1]])?;
    let mut f = Fields::new();
    put(&mut f, "colength", lengths[0]);
    put(&mut f, "conormal_lengths_1_2", [lengths[1] - lengths[0], lengths[2] - lengths[1]]);
    put(&mut f, "N_F", k.relation_type_lower_bound);
    put(&mut f, "K_generators", texts(&k));
    put(&mut f, "L_counts_0_to_3", &p.generator_counts[..4]);
    put(&mut f, "L_new_generator_in_degree_3", p.generator_counts[3] > 0);
    put(&mut f, "N_G_at_least_3", p.relation_type_lower_bound >= 3);
    slice_inclusions(&q, &i, &j, &mut f)?;
    Ok(f)
}

pub fn cases() -> Vec<Case> {
    vec![
        Case { id: "gorenstein-quadrics", ring: "<4,9,10>", compute: gorenstein_quadrics },
        Case { id: "non-free-conormal", ring: "<3,7,11>", compute: non_free_conormal },
        Case { id: "hypersurface-fiber-cone", ring: "<3,4,5>", compute: hypersurface_fiber_cone },
        Case { id: "non-gorenstein-maximal-ideal", ring: "<5,6,9>", compute: non_gorenstein_maximal_ideal },
        Case { id: "reduction-dependence", ring: "<4,5,6>", compute: reduction_dependence },
        Case { id: "ratliff-rush-gap", ring: "<5,6,7,8>", compute: ratliff_rush_gap },
        Case { id: "no-canonical-shift", ring: "<4,5,6>", compute: no_canonical_shift },
        Case { id: "non-cm-parameter-ideal", ring: "k[x,y]/(x^2*y, y^3)", compute: non_cm_parameter_ideal },
        Case { id: "relation-type-gap", ring: "k[x,y,z]/(x^2, y^2, x*y*z^2)", compute: relation_type_gap },
    ]
}

/// `(case, field, expected)`.
pub fn expected() -> Vec<(&'static str, &'static str, Value)> {
    vec![
        ("gorenstein-quadrics", "symmetric", json!(true)),
        ("gorenstein-quadrics", "r", json!(2)),
        ("gorenstein-quadrics", "colength", json!(2)),
        ("gorenstein-quadrics", "e_I", json!(8)),
        ("gorenstein-quadrics", "hilb_F", json!([1, 3, 4, 4])),
        ("gorenstein-quadrics", "normally_flat", json!(true)),
        ("gorenstein-quadrics", "L_degrees", json!([2, 2])),
        ("gorenstein-quadrics", "L_generators", json!(["t^4*X^2 - Z^2", "X*Z - Y^2"])),
        ("gorenstein-quadrics", "L_complete_intersection", json!("complete-intersection")),
        ("gorenstein-quadrics", "K_counts_equal_L_counts", json!(true)),
        ("gorenstein-quadrics", "colon_criteria_gorenstein", json!(true)),
        ("gorenstein-quadrics", "quotient_criteria_gorenstein", json!(true)),
        ("gorenstein-quadrics", "slice_module_inclusions", json!(true)),
        ("non-free-conormal", "symmetric", json!(false)),
        ("non-free-conormal", "colength", json!(2)),
        ("non-free-conormal", "conormal_length_1", json!(5)),
        ("non-free-conormal", "conormal_1_free", json!(false)),
        ("non-free-conormal", "I_squared", json!("(t^12, t^13, t^14)")),
        ("non-free-conormal", "free_ranks_2_to_6", json!([3, 3, 3, 3, 3])),
        ("non-free-conormal", "e_I", json!(6)),
        ("non-free-conormal", "e_I_equals_colength_times_e_F", json!(true)),
        ("non-free-conormal", "normally_flat", json!(false)),
        ("non-free-conormal", "G_cohen_macaulay", json!(true)),
        ("non-free-conormal", "F_cohen_macaulay", json!(false)),
        ("non-free-conormal", "L_degrees", json!([1, 2, 2, 2, 3])),
        ("non-free-conormal", "slice_module_inclusions", json!(true)),
        ("hypersurface-fiber-cone", "symmetric", json!(false)),
        ("hypersurface-fiber-cone", "r", json!(2)),
        ("hypersurface-fiber-cone", "colength", json!(2)),
        ("hypersurface-fiber-cone", "conormal_length_1", json!(2)),
        ("hypersurface-fiber-cone", "e_I", json!(3)),
        ("hypersurface-fiber-cone", "e_F", json!(3)),
        ("hypersurface-fiber-cone", "L_degrees", json!([1, 1, 3])),
        ("hypersurface-fiber-cone", "K_generators", json!(["Y^3"])),
        ("hypersurface-fiber-cone", "L_complete_intersection", json!("not-complete-intersection")),
        ("hypersurface-fiber-cone", "K_complete_intersection", json!("complete-intersection")),
        ("hypersurface-fiber-cone", "slice_module_inclusions", json!(true)),
        ("non-gorenstein-maximal-ideal", "symmetric", json!(true)),
        ("non-gorenstein-maximal-ideal", "r", json!(3)),
        ("non-gorenstein-maximal-ideal", "quotient_hilbert", json!([1, 2, 1, 1])),
        ("non-gorenstein-maximal-ideal", "quotient_criteria_gorenstein", json!(false)),
        ("non-gorenstein-maximal-ideal", "colon_criteria_gorenstein", json!(false)),
        ("non-gorenstein-maximal-ideal", "G_cohen_macaulay", json!(true)),
        ("non-gorenstein-maximal-ideal", "slice_module_inclusions", json!(true)),
        ("reduction-dependence", "symmetric", json!(true)),
        ("reduction-dependence", "r", json!(3)),
        ("reduction-dependence", "r_other_reduction", json!(3)),
        ("reduction-dependence", "s", json!(1)),
        ("reduction-dependence", "s_other_reduction", json!(2)),
        ("reduction-dependence", "quotient_criteria_gorenstein", json!(true)),
        ("reduction-dependence", "quotient_criteria_gorenstein_other_reduction", json!(false)),
        ("reduction-dependence", "quotient_hilbert_other_reduction", json!([2, 1, 1])),
        ("reduction-dependence", "G_cohen_macaulay", json!(false)),
        ("reduction-dependence", "conductors_equal", json!(true)),
        ("reduction-dependence", "slice_module_inclusions", json!(true)),
        ("ratliff-rush-gap", "symmetric", json!(true)),
        ("ratliff-rush-gap", "r", json!(2)),
        ("ratliff-rush-gap", "J_r_colon_I_r_equals_I_r", json!(true)),
        ("ratliff-rush-gap", "G_cohen_macaulay", json!(false)),
        ("ratliff-rush-gap", "ratliff_rush_closure_is_maximal", json!(true)),
        ("ratliff-rush-gap", "m_shift_u", json!(0)),
        ("ratliff-rush-gap", "m_gorenstein", json!(true)),
        ("ratliff-rush-gap", "I_top_shift", json!(0)),
        ("ratliff-rush-gap", "I_all_powers_ratliff_rush", json!(false)),
        ("ratliff-rush-gap", "I_gorenstein", json!(false)),
        ("ratliff-rush-gap", "slice_module_inclusions", json!(true)),
        ("no-canonical-shift", "ratliff_rush_powers_are_maximal_powers", json!(true)),
        ("no-canonical-shift", "I_cubed_equals_m_cubed", json!(true)),
        ("no-canonical-shift", "slices_are_shifted_maximal_powers", json!(true)),
        ("no-canonical-shift", "shift_u", json!(null)),
        ("no-canonical-shift", "quasi_gorenstein", json!(false)),
        ("no-canonical-shift", "m_slices_are_maximal_powers", json!(true)),
        ("no-canonical-shift", "m_reduction_number", json!(2)),
        ("no-canonical-shift", "slice_module_inclusions", json!(true)),
        ("non-cm-parameter-ideal", "lengths", json!([3, 6])),
        ("non-cm-parameter-ideal", "L_counts_0_to_2", json!([0, 0, 1])),
        ("non-cm-parameter-ideal", "N_G_at_least_2", json!(true)),
        ("non-cm-parameter-ideal", "K_total_generators", json!(0)),
        ("non-cm-parameter-ideal", "N_F", json!(1)),
        ("non-cm-parameter-ideal", "slice_module_inclusions", json!(true)),
        ("relation-type-gap", "colength", json!(2)),
        ("relation-type-gap", "conormal_lengths_1_2", json!([4, 4])),
        ("relation-type-gap", "N_F", json!(2)),
        ("relation-type-gap", "K_generators", json!(["Y^2"])),
        ("relation-type-gap", "L_new_generator_in_degree_3", json!(true)),
        ("relation-type-gap", "N_G_at_least_3", json!(true)),
        ("relation-type-gap", "slice_module_inclusions", json!(true)),
    ]
}

fn selected(case: &Case, filter: Option<&str>) -> bool {
    match filter {
        None => true,
        Some(f) => case.id.contains(f) || case.ring.contains(f),
    }
}

/// Runs the selected cases and diffs them against `table`.
pub fn run_with_table(
    ctx: &CaseContext,
    filter: Option<&str>,
    table: &[(&str, &str, Value)],
) -> Result<CorpusReport> {
    let mut outcomes = Vec::new();
    let mut mismatches = Vec::new();
    for case in cases().iter().filter(|c| selected(c, filter)) {
        let computed = (case.compute)(ctx)?;
        let mut checked = 0;
        for (_, field, want) in table.iter().filter(|(c, _, _)| *c == case.id) {
            checked += 1;
            let got = computed.get(*field).cloned().unwrap_or(Value::String("<missing>".into()));
            if got != *want {
                mismatches.push(Mismatch {
                    case: case.id.into(),
                    field: field.to_string(),
                    expected: want.clone(),
                    got,
                });
            }
        }
        outcomes.push(CaseOutcome { id: case.id.into(), ring: case.ring.into(), checked, computed });
    }
    let passed = mismatches.is_empty();
    Ok(CorpusReport { cases: outcomes, mismatches, passed })
}

pub fn run_corpus(ctx: &CaseContext, filter: Option<&str>) -> Result<CorpusReport> {
    run_with_table(ctx, filter, &expected())
}

/// Same run with the first selected expected value replaced, to show that
/// the harness reports mismatches.
pub fn run_self_test(ctx: &CaseContext, filter: Option<&str>) -> Result<CorpusReport> {
    let ids: Vec<&str> = cases().iter().filter(|c| selected(c, filter)).map(|c| c.id).collect();
    let mut table = expected();
    if let Some(entry) = table.iter_mut().find(|(c, _, _)| ids.contains(c)) {
        entry.2 = json!({ "perturbed": entry.2.clone() });
    }
    run_with_table(ctx, filter, &table)
}
