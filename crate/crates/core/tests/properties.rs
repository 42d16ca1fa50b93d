//! Randomized invariants of the filtration, criteria and presentation layers.

use std::sync::Arc;

use proptest::prelude::*;

use graded_core::criteria::{
    colon_gorenstein_check, lifting_check, quasi_gorenstein_check, quotient_gorenstein_check,
    slice_module_check, SEARCH_BOUND,
};
use graded_core::filtration::Filtration;
use graded_core::presentation::{present_f, present_g};
use graded_core::{Field, IdealBackend, NumericalSemigroup, RingIdeal, SemigroupRing, TruncatedSeries};

const POOL: &[&[u32]] = &[&[4, 9, 10], &[4, 5, 6], &[5, 6, 9], &[5, 6, 7, 8], &[4, 6, 7], &[3, 4], &[3, 5]];

/// `(a, Some((c, b)))` stands for `t^a + c t^b`.
type Gen = (usize, Option<(i64, usize)>);

#[derive(Debug, Clone)]
struct Raw {
    pool: usize,
    gens: Vec<Gen>,
}

fn raw() -> impl Strategy<Value = Raw> {
    let gen = (0usize..12, proptest::option::of((-3i64..=3, 1usize..6)));
    (0..POOL.len(), proptest::collection::vec(gen, 1..=3)).prop_map(|(pool, gens)| Raw { pool, gens })
}

struct Inst {
    ring: Arc<SemigroupRing>,
    ideal: RingIdeal,
    reduction: RingIdeal,
}

/// Exponents index into the positive elements of `S`; `J` is generated by
/// the generator of least valuation, hence a minimal reduction.
fn build(raw: &Raw) -> Inst {
    let sg = NumericalSemigroup::new(POOL[raw.pool]).unwrap();
    let ring = SemigroupRing::new(sg.clone(), Field::Rational);
    let elems: Vec<u32> = sg.elements_below(200).filter(|&v| v > 0).collect();
    let field = Field::Rational;
    let series: Vec<(u32, TruncatedSeries)> = raw
        .gens
        .iter()
        .map(|&(a, tail)| {
            let ea = elems[a];
            let mut terms = vec![(ea, field.one())];
            if let Some((c, b)) = tail {
                if c != 0 {
                    terms.push((elems[a + b], field.from_i64(c)));
                }
            }
            (ea, TruncatedSeries::polynomial(field, terms))
        })
        .collect();
    let gens: Vec<TruncatedSeries> = series.iter().map(|(_, s)| s.clone()).collect();
    let lowest = series.iter().min_by_key(|(v, _)| *v).unwrap().1.clone();
    let ideal = RingIdeal::echelonize(&ring, &gens).unwrap();
    let reduction = RingIdeal::principal(&ring, &lowest).unwrap();
    Inst { ring, ideal, reduction }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn quotient_hilbert_function_sums_to_colength(raw in raw()) {
        let inst = build(&raw);
        let b = &inst.ring;
        let mut f = Filtration::new(b, inst.ideal.clone());
        let s = f.index_of_nilpotency(&inst.reduction, SEARCH_BOUND).unwrap();
        let h = f.quotient_hilbert_function(&inst.reduction, s + 2).unwrap();
        prop_assert_eq!(h.len(), s as usize + 1);
        prop_assert_eq!(h.iter().sum::<u32>(), b.colength(&inst.reduction).unwrap());
    }

    #[test]
    fn cohen_macaulay_forces_faithful_conormal(raw in raw()) {
        let inst = build(&raw);
        let b = &inst.ring;
        let mut f = Filtration::new(b, inst.ideal.clone());
        let r = f.reduction_number(&inst.reduction, SEARCH_BOUND).unwrap();
        if f.cm_check_g(&inst.reduction, r).unwrap().holds {
            prop_assert_eq!(f.index_of_nilpotency(&inst.reduction, SEARCH_BOUND).unwrap(), r);
            for i in 0..=r as i64 + 2 {
                prop_assert_eq!(b.colon(&f.power(i + 1).unwrap(), &f.power(i).unwrap()).unwrap(), inst.ideal.clone());
            }
        }
    }

    #[test]
    fn colon_verdict_matches_quotient_and_socle(raw in raw()) {
        let inst = build(&raw);
        let b = &inst.ring;
        let colon = colon_gorenstein_check(b, &inst.ideal, &inst.reduction).unwrap();
        let lifting = lifting_check(b, &inst.ideal, &inst.reduction).unwrap();
        if lifting.top_power_outside_reduction {
            prop_assert_eq!(lifting.quotient_gorenstein, Some(colon.gorenstein));
        }
        let mut f = Filtration::new(b, inst.ideal.clone());
        if colon.gorenstein {
            let top = f.power(colon.r as i64).unwrap();
            for i in 1..=colon.r as i64 {
                let lhs = b.colon(&top, &f.power(colon.r as i64 - i).unwrap()).unwrap();
                prop_assert_eq!(lhs, f.power(i).unwrap());
            }
        }
        if f.cm_check_g(&inst.reduction, colon.r).unwrap().holds {
            let socle = f.socle_table(&inst.reduction, colon.r).unwrap();
            let concentrated = socle[..colon.r as usize].iter().all(|&v| v == 0) && socle[colon.r as usize] == 1;
            prop_assert_eq!(concentrated, colon.gorenstein);
        }
    }

    #[test]
    fn quotient_criteria_imply_faithful_quotients(raw in raw()) {
        let inst = build(&raw);
        let rep = quotient_gorenstein_check(&inst.ring, &inst.ideal, &inst.reduction).unwrap();
        prop_assert!(rep.conditions.iter().all(|c| c.verdict.holds == rep.gorenstein));
        if rep.gorenstein {
            prop_assert!(rep.consequences.iter().all(|c| c.verdict.holds));
        }
    }

    #[test]
    fn canonical_slices_form_a_module(raw in raw()) {
        let inst = build(&raw);
        prop_assert!(slice_module_check(&inst.ring, &inst.ideal, &inst.reduction, 3).unwrap().holds);
    }

    #[test]
    fn quasi_gorenstein_means_gorenstein(raw in raw()) {
        let inst = build(&raw);
        let rep = quasi_gorenstein_check(&inst.ring, &inst.ideal, &inst.reduction, None).unwrap();
        prop_assert_eq!(rep.quasi_gorenstein, rep.gorenstein);
        if let Some(u) = rep.slices.u {
            prop_assert_eq!(u, rep.slices.w);
        }
    }

    #[test]
    fn fiber_relation_type_is_at_most_graded(raw in raw()) {
        let inst = build(&raw);
        let gens = inst.ideal.minimal_generators().to_vec();
        let g = present_g(&inst.ring, &inst.ideal, &gens, 4, None).unwrap();
        let f = present_f(&inst.ring, &inst.ideal, &gens, 4, None).unwrap();
        prop_assert!(f.relation_type_lower_bound <= g.relation_type_lower_bound.max(1));
        for row in &g.hilbert_evidence {
            if row.degree <= 4 {
                prop_assert_eq!(row.presented, row.actual);
            }
        }
        // A mismatch one degree past the bound means new generators appear there.
        if !g.evidence_matches() {
            let wider = present_g(&inst.ring, &inst.ideal, &gens, 5, None).unwrap();
            prop_assert!(wider.generator_counts[5] > 0);
        }
    }
}
