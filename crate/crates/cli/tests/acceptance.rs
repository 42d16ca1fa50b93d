//! The twelve acceptance criteria. Each prints one PASS/FAIL line; the
//! target exits nonzero if any criterion fails.

use serde_json::{json, Value};

use graded_cli::corpus::{run_corpus, CaseContext, Fields};
use graded_cli::random::{agreement_suite, implication, implication_suite, InstanceGenerator};
use graded_core::{Field, NumericalSemigroup, SemigroupRing};

const SEED: u64 = 20_240_517;
const RANDOM_INSTANCES: usize = 200;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn case(id: &str) -> Result<Fields, String> {
    let rep = run_corpus(&CaseContext::default(), Some(id)).map_err(|e| e.to_string())?;
    rep.cases
        .into_iter()
        .find(|c| c.id == id)
        .map(|c| c.computed)
        .ok_or_else(|| format!("no case {id}"))
}

fn expect(fields: &Fields, checks: &[(&str, Value)]) -> Outcome {
    let bad: Vec<String> = checks
        .iter()
        .filter(|(k, v)| fields.get(*k) != Some(v))
        .map(|(k, v)| format!("{k}: expected {v}, got {}", fields.get(*k).unwrap_or(&Value::Null)))
        .collect();
    if bad.is_empty() {
        Ok(format!("{} values match", checks.len()))
    } else {
        Err(bad.join("; "))
    }
}

fn gorenstein_quadrics() -> Outcome {
    let f = case("gorenstein-quadrics")?;
    expect(
        &f,
        &[
            ("r", json!(2)),
            ("colength", json!(2)),
            ("e_I", json!(8)),
            ("hilb_F", json!([1, 3, 4, 4])),
            ("normally_flat", json!(true)),
            ("L_degrees", json!([2, 2])),
            ("L_complete_intersection", json!("complete-intersection")),
            ("colon_criteria_gorenstein", json!(true)),
        ],
    )
}

fn non_free_conormal() -> Outcome {
    let f = case("non-free-conormal")?;
    expect(
        &f,
        &[
            ("conormal_length_1", json!(5)),
            ("conormal_1_free", json!(false)),
            ("I_squared", json!("(t^12, t^13, t^14)")),
            ("free_ranks_2_to_6", json!([3, 3, 3, 3, 3])),
            ("e_I", json!(6)),
            ("G_cohen_macaulay", json!(true)),
            ("F_cohen_macaulay", json!(false)),
            ("L_degrees", json!([1, 2, 2, 2, 3])),
            ("e_I_equals_colength_times_e_F", json!(true)),
            ("normally_flat", json!(false)),
        ],
    )
}

fn hypersurface_fiber_cone() -> Outcome {
    let f = case("hypersurface-fiber-cone")?;
    expect(
        &f,
        &[
            ("r", json!(2)),
            ("colength", json!(2)),
            ("conormal_length_1", json!(2)),
            ("e_I", json!(3)),
            ("L_degrees", json!([1, 1, 3])),
            ("K_generators", json!(["Y^3"])),
            ("K_complete_intersection", json!("complete-intersection")),
            ("L_complete_intersection", json!("not-complete-intersection")),
        ],
    )
}

fn non_gorenstein_maximal_ideal() -> Outcome {
    let f = case("non-gorenstein-maximal-ideal")?;
    expect(
        &f,
        &[
            ("r", json!(3)),
            ("quotient_hilbert", json!([1, 2, 1, 1])),
            ("quotient_criteria_gorenstein", json!(false)),
            ("colon_criteria_gorenstein", json!(false)),
            ("G_cohen_macaulay", json!(true)),
        ],
    )
}

fn reduction_dependence() -> Outcome {
    let f = case("reduction-dependence")?;
    expect(
        &f,
        &[
            ("r", json!(3)),
            ("s", json!(1)),
            ("s_other_reduction", json!(2)),
            ("quotient_criteria_gorenstein", json!(true)),
            ("quotient_criteria_gorenstein_other_reduction", json!(false)),
            ("quotient_hilbert_other_reduction", json!([2, 1, 1])),
            ("G_cohen_macaulay", json!(false)),
            ("conductors_equal", json!(true)),
        ],
    )
}

fn ratliff_rush_gap() -> Outcome {
    let f = case("ratliff-rush-gap")?;
    expect(
        &f,
        &[
            ("r", json!(2)),
            ("J_r_colon_I_r_equals_I_r", json!(true)),
            ("G_cohen_macaulay", json!(false)),
            ("ratliff_rush_closure_is_maximal", json!(true)),
            ("m_shift_u", json!(0)),
            ("m_gorenstein", json!(true)),
            ("I_top_shift", json!(0)),
            ("I_all_powers_ratliff_rush", json!(false)),
            ("I_gorenstein", json!(false)),
        ],
    )
}

fn no_canonical_shift() -> Outcome {
    let f = case("no-canonical-shift")?;
    expect(
        &f,
        &[
            ("ratliff_rush_powers_are_maximal_powers", json!(true)),
            ("I_cubed_equals_m_cubed", json!(true)),
            ("slices_are_shifted_maximal_powers", json!(true)),
            ("shift_u", json!(null)),
            ("quasi_gorenstein", json!(false)),
            ("m_slices_are_maximal_powers", json!(true)),
        ],
    )
}

fn monomial_relation_types() -> Outcome {
    let a = case("non-cm-parameter-ideal")?;
    let b = case("relation-type-gap")?;
    let first = expect(
        &a,
        &[
            ("lengths", json!([3, 6])),
            ("L_counts_0_to_2", json!([0, 0, 1])),
            ("N_G_at_least_2", json!(true)),
            ("K_total_generators", json!(0)),
            ("N_F", json!(1)),
        ],
    );
    let second = expect(
        &b,
        &[
            ("N_F", json!(2)),
            ("K_generators", json!(["Y^2"])),
            ("conormal_lengths_1_2", json!([4, 4])),
            ("L_new_generator_in_degree_3", json!(true)),
            ("N_G_at_least_3", json!(true)),
        ],
    );
    match (first, second) {
        (Ok(x), Ok(y)) => Ok(format!("{x}; {y}")),
        (Err(e), _) | (_, Err(e)) => Err(e),
    }
}

fn seven_way_agreement() -> Outcome {
    let outcomes = agreement_suite(SEED, RANDOM_INSTANCES, Field::Rational).map_err(|e| e.to_string())?;
    if let Some(o) = outcomes.iter().find(|o| o.problem.is_some()) {
        return Err(format!("{}: {}", o.instance, o.problem.as_deref().unwrap_or_default()));
    }
    let yes = outcomes.iter().filter(|o| o.gorenstein == Some(true)).count();
    let no = outcomes.len() - yes;
    if yes == 0 || no == 0 {
        return Err(format!("degenerate sample: {yes} Gorenstein, {no} not"));
    }
    Ok(format!("{} instances agree ({yes} Gorenstein, {no} not)", outcomes.len()))
}

fn doubled_precision() -> Outcome {
    let base = run_corpus(&CaseContext::default(), None).map_err(|e| e.to_string())?;
    let doubled = run_corpus(&CaseContext { precision_factor: 2, ..Default::default() }, None)
        .map_err(|e| e.to_string())?;
    let mut compared = 0;
    for (a, b) in base.cases.iter().zip(&doubled.cases) {
        for (key, value) in &a.computed {
            compared += 1;
            if b.computed.get(key) != Some(value) {
                return Err(format!("{} / {key}: {value} vs {:?}", a.id, b.computed.get(key)));
            }
        }
        if a.computed.len() != b.computed.len() {
            return Err(format!("{}: field sets differ", a.id));
        }
    }
    if !doubled.passed {
        return Err(format!("{} mismatches at doubled precision", doubled.mismatches.len()));
    }
    Ok(format!("{compared} values identical"))
}

fn slice_module_inclusions() -> Outcome {
    let rep = run_corpus(&CaseContext::default(), None).map_err(|e| e.to_string())?;
    for c in &rep.cases {
        if c.computed.get("slice_module_inclusions") != Some(&json!(true)) {
            return Err(format!("{}: inclusion fails or was not checked", c.id));
        }
    }
    Ok(format!("{} corpus entries", rep.cases.len()))
}

fn cohen_macaulay_consequences() -> Outcome {
    let mut outcomes = implication_suite(SEED, RANDOM_INSTANCES, Field::Rational).map_err(|e| e.to_string())?;
    let corpus: &[(&[u32], &[&str], &str)] = &[
        (&[4, 9, 10], &["t^8", "t^9", "t^10"], "t^8"),
        (&[3, 7, 11], &["t^6", "t^7", "t^11"], "t^6"),
        (&[3, 4, 5], &["t^3", "t^4"], "t^3"),
        (&[5, 6, 9], &["t^5", "t^6", "t^9"], "t^5"),
        (&[4, 5, 6], &["t^4", "t^5"], "t^4"),
        (&[4, 5, 6], &["t^4", "t^5"], "t^4 - t^5"),
        (&[5, 6, 7, 8], &["t^5", "t^6", "t^7"], "t^5"),
        (&[5, 6, 7, 8], &["t^5", "t^6", "t^7", "t^8"], "t^5"),
        (&[4, 5, 6], &["t^4", "t^5", "t^6"], "t^4"),
    ];
    let generator = InstanceGenerator::new(SEED, Field::Rational);
    for (gens, ideal, reduction) in corpus {
        let sg = NumericalSemigroup::new(gens).map_err(|e| e.to_string())?;
        let inst = generator
            .build(
                SemigroupRing::new(sg, Field::Rational),
                ideal.iter().map(|s| s.to_string()).collect(),
                reduction.to_string(),
            )
            .map_err(|e| e.to_string())?;
        outcomes.push(implication(&inst).map_err(|e| e.to_string())?);
    }
    if let Some(o) = outcomes.iter().find(|o| o.problem.is_some()) {
        return Err(format!("{}: {}", o.instance, o.problem.as_deref().unwrap_or_default()));
    }
    let colon = outcomes.iter().filter(|o| o.colon_conditions == Some(true)).count();
    let cm = outcomes.iter().filter(|o| o.cohen_macaulay).count();
    if colon == 0 || cm == outcomes.len() {
        return Err(format!("degenerate sample: {colon} with colon conditions, {cm} Cohen-Macaulay"));
    }
    Ok(format!("{} instances; {colon} with colon conditions, {cm} Cohen-Macaulay", outcomes.len()))
}

fn main() -> std::process::ExitCode {
    let criteria: [Criterion; 12] = [
        ("gorenstein quadrics over <4,9,10>", gorenstein_quadrics),
        ("non-free conormal module over <3,7,11>", non_free_conormal),
        ("hypersurface fiber cone over <3,4,5>", hypersurface_fiber_cone),
        ("non-Gorenstein maximal ideal over <5,6,9>", non_gorenstein_maximal_ideal),
        ("dependence on the reduction over <4,5,6>", reduction_dependence),
        ("Ratliff-Rush gap over <5,6,7,8>", ratliff_rush_gap),
        ("no canonical shift over <4,5,6>", no_canonical_shift),
        ("relation types over monomial quotients", monomial_relation_types),
        ("seven-way agreement on random instances", seven_way_agreement),
        ("doubled precision changes nothing", doubled_precision),
        ("slice module inclusions on the corpus", slice_module_inclusions),
        ("colon conditions and Cohen-Macaulay consequences", cohen_macaulay_consequences),
    ];
    let mut failed = Vec::new();
    for (n, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", n + 1),
            Err(detail) => {
                println!("criterion {:>2} FAIL  {name}: {detail}", n + 1);
                failed.push(n + 1);
            }
        }
    }
    if failed.is_empty() {
        println!("acceptance: all {} criteria pass", criteria.len());
        std::process::ExitCode::SUCCESS
    } else {
        println!("acceptance: failing criteria {failed:?}");
        std::process::ExitCode::FAILURE
    }
}
