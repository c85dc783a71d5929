//! Word rewriting never changes the value of a word in the 3×3 model.

use std::sync::OnceLock;

use proptest::prelude::*;

use coxlab::fixtures::Fixtures;
use coxlab::model::FixtureModel;
use coxlab::presentation::{
    cycle_relator, generate, given_relators, hexagon_cycles, AxFixture, NonRelTable, Variant,
};
use coxlab::words::{
    clean, cyclic_reduce, derive_bounded, free_reduce_involutive, reduce_with_commutations,
    Derivation, Word,
};

fn model() -> &'static FixtureModel {
    static M: OnceLock<FixtureModel> = OnceLock::new();
    M.get_or_init(|| FixtureModel::load(&Fixtures::embedded()).unwrap())
}

fn word() -> impl Strategy<Value = Word> {
    proptest::collection::vec(1usize..=27, 0..40).prop_map(|g| Word::from_generators(&g))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn square_cancellation_preserves_value(w in word()) {
        let m = model();
        prop_assert_eq!(m.eval(&free_reduce_involutive(&w)).unwrap(), m.eval(&w).unwrap());
    }

    #[test]
    fn commutation_rewriting_preserves_value(w in word()) {
        let m = model();
        let p = generate(&m.graph, &[], Variant::Plain).unwrap();
        let comm = p.commuting_pairs();
        prop_assert_eq!(m.eval(&reduce_with_commutations(&w, &comm)).unwrap(), m.eval(&w).unwrap());
    }

    #[test]
    fn cyclic_reduction_preserves_conjugacy_class_of_identity(w in word()) {
        let m = model();
        let p = generate(&m.graph, &[], Variant::Plain).unwrap();
        let comm = p.commuting_pairs();
        let before = m.eval(&w).unwrap().is_identity();
        prop_assert_eq!(m.eval(&cyclic_reduce(&w, &comm)).unwrap().is_identity(), before);
    }
}

#[test]
fn cleaned_quotient_relators_stay_trivial() {
    let m = model();
    let p = generate(&m.graph, &hexagon_cycles(&m.links), Variant::Quotient).unwrap();
    let report = clean(&p.relators);
    assert_eq!(report.squares.len(), 27);
    for w in report.to_words() {
        assert!(m.eval(&w).unwrap().is_identity(), "{w}");
    }
}

#[test]
fn derivation_steps_are_trivial_in_model() {
    let m = model();
    let fx = Fixtures::embedded();
    let table = NonRelTable::from_json(&fx.read("nonrel_pairs.json").unwrap()).unwrap();
    let ax = AxFixture::from_json(&fx.read("ax_relations.json").unwrap()).unwrap();
    let p = generate(&m.graph, &[], Variant::Plain).unwrap();
    let link = m.links.iter().find(|l| l.point == 9).unwrap();
    let mut known: Vec<Word> = given_relators(&p, &table)
        .into_iter()
        .filter(|w| w.generators().all(|g| link.cycle.contains(&g)))
        .collect();
    known.push(ax.get("AX2").unwrap().clone());
    let target = cycle_relator(&link.cycle).unwrap().word;
    let Derivation::Found { steps } = derive_bounded(&known, &target, 40).unwrap() else {
        panic!("not derived");
    };
    assert!(steps.len() > 2);
    for s in steps {
        assert!(m.eval(&s.word).unwrap().is_identity(), "{}", s.word);
    }
}
