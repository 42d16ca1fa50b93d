//! Builds a ring and its ideals from a script and runs the commands.

use std::collections::BTreeMap;
use std::sync::Arc;

use graded_core::criteria::{
    blowup_conductor, colon_gorenstein_check, lifting_check, quasi_gorenstein_check, quotient_gorenstein_check,
    ratliff_rush_slices_check, CriterionReport,
};
use graded_core::filtration::{analyze, AnalysisBounds};
use graded_core::linalg::SparseVec;
use graded_core::presentation::{ci_assess, present_f, present_g, Algebra, CiVerdict, ResidueArithmetic};
use graded_core::{
    Error, Field, MonomialQuotientRing, NumericalSemigroup, Result, RingIdeal, SemigroupRing,
};

use crate::report::CommandReport;
use crate::script::{parse_monomial, AnalysisScript, Command, RingDecl};

#[derive(Debug, Clone)]
pub struct Options {
    pub field: Field,
    /// Initial precision horizon for semigroup rings.
    pub precision: Option<u32>,
    pub degree_bound: u32,
    /// Window for the canonical slices; `r + 4` when absent.
    pub window: Option<u32>,
}

impl Default for Options {
    fn default() -> Self {
        Options { field: Field::Rational, precision: None, degree_bound: 6, window: None }
    }
}

struct Declared<B: ResidueArithmetic> {
    ideal: B::Ideal,
    generators: Vec<SparseVec<B::Key>>,
}

/// Runs every command of the script in order.
pub fn run_script(script: &AnalysisScript, opts: &Options) -> Result<Vec<CommandReport>> {
    match &script.ring {
        RingDecl::Semigroup(gens) => {
            let sg = NumericalSemigroup::new(gens)?;
            let ring = match opts.precision {
                Some(d) => SemigroupRing::with_precision(sg, opts.field, d),
                None => SemigroupRing::new(sg, opts.field),
            };
            let mut ideals = BTreeMap::new();
            for decl in &script.ideals {
                let els = decl.generators.iter().map(|g| ring.element(g)).collect::<Result<Vec<_>>>()?;
                let ideal = RingIdeal::echelonize(&ring, &els)?;
                let generators = els.iter().map(|e| e.terms().to_vec()).collect();
                ideals.insert(decl.name.clone(), Declared::<Arc<SemigroupRing>> { ideal, generators });
            }
            let precision = |r: &Arc<SemigroupRing>| Some(r.precision());
            run_all(&ring, &ring.to_string(), &ideals, script, opts, precision)
        }
        RingDecl::Quotient { variables, relations } => {
            let ring = MonomialQuotientRing::new(variables.clone(), relations.clone())?.with_field(opts.field);
            let mut ideals = BTreeMap::new();
            for decl in &script.ideals {
                let exps = decl
                    .generators
                    .iter()
                    .map(|g| parse_monomial(g, variables, decl.line, 1))
                    .collect::<Result<Vec<_>>>()?;
                let generators = exps.iter().map(|e| vec![(e.clone(), opts.field.one())]).collect();
                let ideal = ring.ideal(exps)?;
                ideals.insert(decl.name.clone(), Declared::<MonomialQuotientRing> { ideal, generators });
            }
            run_all(&ring, &ring.to_string(), &ideals, script, opts, |_| None)
        }
    }
}

fn run_all<B: ResidueArithmetic>(
    backend: &B,
    ring_text: &str,
    ideals: &BTreeMap<String, Declared<B>>,
    script: &AnalysisScript,
    opts: &Options,
    precision: impl Fn(&B) -> Option<u32>,
) -> Result<Vec<CommandReport>> {
    let echo: BTreeMap<String, String> =
        ideals.iter().map(|(k, d)| (k.clone(), backend.summary(&d.ideal))).collect();
    let mut out = Vec::new();
    for cmd in &script.commands {
        let mut report = CommandReport {
            ring: ring_text.to_string(),
            ideals: echo.clone(),
            command: cmd.text(),
            ..Default::default()
        };
        report.certified_flags.insert("exact-arithmetic".into(), true);
        let get = |name: &String| ideals.get(name).ok_or_else(|| Error::UnknownName(name.clone()));
        match cmd {
            Command::CheckGorenstein { ideal, reduction } => {
                check_gorenstein(backend, &get(ideal)?.ideal, &get(reduction)?.ideal, &mut report)?
            }
            Command::CheckQuasiGorenstein { ideal, reduction } => {
                check_quasi(backend, &get(ideal)?.ideal, &get(reduction)?.ideal, opts, &mut report)?
            }
            Command::AnalyzeFiltration { ideal, reduction } => {
                let j = match reduction {
                    Some(name) => Some(&get(name)?.ideal),
                    None => None,
                };
                filtration(backend, &get(ideal)?.ideal, j, &mut report)?
            }
            Command::Present { algebra, ideal } => {
                let d = get(ideal)?;
                present(backend, &d.ideal, &d.generators, *algebra, opts, &mut report)?
            }
        }
        report.precision = precision(backend);
        out.push(report);
    }
    Ok(out)
}

fn record_conditions(prefix: &str, rep: &CriterionReport, report: &mut CommandReport) {
    for c in rep.conditions.iter().chain(&rep.consequences) {
        let name = format!("{prefix}{}", c.name);
        report.verdict(&name, c.verdict.holds);
        if let Some(w) = &c.verdict.witness {
            report.witness(&name, w);
        }
    }
}

fn check_gorenstein<B: ResidueArithmetic>(
    backend: &B,
    ideal: &B::Ideal,
    j: &B::Ideal,
    report: &mut CommandReport,
) -> Result<()> {
    report.invariants.lengths.insert("R/I".into(), backend.colength(ideal)?);
    if let Ok(l) = backend.colength(j) {
        report.invariants.lengths.insert("R/J".into(), l);
    }
    if backend.is_one_dimensional_domain() {
        let rep = colon_gorenstein_check(backend, ideal, j)?;
        report.invariants.r = Some(rep.r);
        report.verdict("G-gorenstein", rep.gorenstein);
        record_conditions("", &rep, report);
        let lift = lifting_check(backend, ideal, j)?;
        report.verdict("top-power-outside-reduction", lift.top_power_outside_reduction);
        if let Some(q) = lift.quotient_gorenstein {
            report.verdict("quotient-G-gorenstein", q);
        }
        report.certified_flags.insert("lifting-applied".into(), lift.applied);
    }
    match quotient_gorenstein_check(backend, ideal, j) {
        Ok(rep) => {
            report.invariants.s = Some(rep.r);
            report.tables.socle = rep.socle.clone();
            if let Some(h) = &rep.quotient_hilbert {
                report.details.push(format!("quotient Hilbert function: {h:?}"));
            }
            if report.verdict_of("quotient-G-gorenstein").is_none() {
                report.verdict("quotient-G-gorenstein", rep.gorenstein);
            }
            record_conditions("quotient:", &rep, report);
        }
        Err(Error::HypothesisFailure(msg)) => report.details.push(format!("quotient criteria skipped: {msg}")),
        Err(e) => return Err(e),
    }
    Ok(())
}

fn check_quasi<B: ResidueArithmetic>(
    backend: &B,
    ideal: &B::Ideal,
    j: &B::Ideal,
    opts: &Options,
    report: &mut CommandReport,
) -> Result<()> {
    let rep = quasi_gorenstein_check(backend, ideal, j, opts.window)?;
    let sl = &rep.slices;
    report.invariants.r = Some(sl.r);
    report.invariants.s = Some(sl.s);
    report.invariants.u = sl.u;
    report.invariants.w = Some(sl.w);
    report.invariants.a = sl.a_invariant;
    report.verdict("quasi-gorenstein", rep.quasi_gorenstein);
    report.verdict("gorenstein", rep.gorenstein);
    report.verdict("finite-range", rep.finite_form.holds);
    if let Some(w) = &rep.finite_form.witness {
        report.witness("finite-range", w);
    }
    report.verdict("slice-propagation", sl.propagation.holds);
    report.verdict("powers-ratliff-rush", rep.powers_ratliff_rush);
    if let Some(t) = rep.top_shift {
        report.details.push(format!("J^r : I^r = I^(r-{t})"));
    }
    for (i, s) in &sl.slices {
        report.details.push(format!("J^{i} : I^{} = {}", sl.r, backend.summary(s)));
    }
    let cond = blowup_conductor(backend, ideal, std::slice::from_ref(j))?;
    report.details.push(format!("blowup conductor J^r : I^r = {}", backend.summary(&cond.conductor)));
    match ratliff_rush_slices_check(backend, ideal, j, opts.window) {
        Ok(rr) => {
            report.verdict("ratliff-rush-quasi-gorenstein", rr.quasi_gorenstein);
            report.details.push(format!("Ratliff-Rush stable from k = {}", rr.k));
            if let Some(b) = rr.b {
                report.details.push(format!("Ratliff-Rush slice shift b = {b}"));
            }
        }
        Err(Error::HypothesisNotDetected(msg)) => report.details.push(format!("Ratliff-Rush slices: {msg}")),
        Err(e) => return Err(e),
    }
    report.certified_flags.insert("window-propagation".into(), sl.propagation.holds);
    Ok(())
}

fn filtration<B: ResidueArithmetic>(
    backend: &B,
    ideal: &B::Ideal,
    j: Option<&B::Ideal>,
    report: &mut CommandReport,
) -> Result<()> {
    let rep = analyze(backend, ideal, j, AnalysisBounds::default())?;
    report.invariants.r = rep.r;
    report.invariants.s = rep.s;
    report.invariants.e_i = Some(rep.hilbert.e_i);
    report.invariants.e_f = Some(rep.hilbert.e_f);
    report.invariants.lengths.insert("R/I".into(), rep.colength);
    for (n, l) in rep.hilbert.colengths.iter().enumerate() {
        report.invariants.lengths.insert(format!("R/I^{n}"), *l);
    }
    report.tables.hilb_g = Some(rep.hilbert.hilb_g.clone());
    report.tables.hilb_f = Some(rep.hilbert.hilb_f.clone());
    report.tables.socle = rep.socle.clone();
    report.verdict("normally-flat", rep.normally_flat);
    report.details.push(format!("free conormal degrees: {:?}", rep.free_degrees));
    if let Some(q) = &rep.quotient_hilb {
        report.details.push(format!("quotient Hilbert function: {q:?}"));
    }
    if let Some(v) = &rep.g_cm {
        report.verdict("G-cohen-macaulay", v.holds);
        if let Some(w) = &v.witness {
            report.witness("G-cohen-macaulay", w);
        }
    }
    if let Some(v) = &rep.f_cm_dim1 {
        report.verdict("F-cohen-macaulay", v.holds);
        if let Some(w) = &v.witness {
            report.witness("F-cohen-macaulay", w);
        }
    }
    if let Some(rr) = &rep.rr {
        report.details.push(format!("Ratliff-Rush closure: {}", backend.summary(&rr.closure)));
        report.verdict("ratliff-rush-closed", rr.closure == *ideal);
        report.certified_flags.insert("ratliff-rush-certified".into(), rr.certified);
    }
    if let Some(all) = rep.rr_all_powers {
        report.verdict("all-powers-ratliff-rush", all);
    }
    report.certified_flags.insert("hilbert-stabilized".into(), true);
    Ok(())
}

fn present<B: ResidueArithmetic>(
    backend: &B,
    ideal: &B::Ideal,
    generators: &[SparseVec<B::Key>],
    algebra: Algebra,
    opts: &Options,
    report: &mut CommandReport,
) -> Result<()> {
    let p = match algebra {
        Algebra::Graded => present_g(backend, ideal, generators, opts.degree_bound, None)?,
        Algebra::Fiber => present_f(backend, ideal, generators, opts.degree_bound, None)?,
    };
    let table: Vec<u32> = p.hilbert_evidence.iter().map(|h| h.actual).collect();
    match algebra {
        Algebra::Graded => report.tables.hilb_g = Some(table),
        Algebra::Fiber => report.tables.hilb_f = Some(table),
    }
    report.details.push(format!("generator degrees: {:?}", p.generator_degrees()));
    for g in &p.generators {
        report.details.push(format!("degree {}: {}", g.degree, g.text));
    }
    report.details.push(format!("relation type at least {}", p.relation_type_lower_bound));
    report.verdict("hilbert-evidence", p.evidence_matches());
    match ci_assess(&p, backend.dimension()) {
        Ok(CiVerdict::CompleteIntersection { degree_bound }) => {
            report.verdict("complete-intersection", true);
            report.details.push(format!("complete intersection certified to degree {degree_bound}"));
        }
        Ok(CiVerdict::NotCompleteIntersection) => report.verdict("complete-intersection", false),
        Err(Error::InconclusiveAtBound(d)) => {
            report.details.push(format!("complete intersection test inconclusive at degree bound {d}"))
        }
        Err(e) => return Err(e),
    }
    report.certified_flags.insert("relation-type-lower-bound-only".into(), true);
    Ok(())
}
