//! Verification suites over the 3×3 fixture, plus the relator check for
//! generated complexes.

use serde_json::json;

use crate::complex::{dual_graph, hexagon_links, spanning_data, DegenerationComplex, SpanningMode};
use crate::error::Result;
use crate::fixtures::Fixtures;
use crate::model::{
    center_check, center_witness, evaluate, kernel_abelianization, nilpotency_class_check,
    phi_images, verify_relators, FixtureModel, TupleGroup,
};
use crate::presentation::{
    classify_missing, coverage_counts, cycle_relator, expected_role_table, generate,
    hexagon_cycles, AxFixture, NonRelTable, RelatorKind, Variant,
};
use crate::report::{Entry, Status};
use crate::words::Word;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Relators,
    Ax,
    Tables,
    Center,
    Structure,
    All,
}

pub const SAMPLE_SIZE: usize = 128;
pub const SEED: u64 = 0x5eed;

pub fn run_suite(suite: Suite, fixtures: &Fixtures) -> Result<Vec<Entry>> {
    let model = FixtureModel::load(fixtures)?;
    let mut out = Vec::new();
    let all = suite == Suite::All;
    if all || suite == Suite::Relators {
        out.extend(relators(&model)?);
    }
    if all || suite == Suite::Ax {
        out.extend(ax(&model, fixtures)?);
    }
    if all || suite == Suite::Tables {
        out.extend(tables(&model, fixtures)?);
    }
    if all || suite == Suite::Center {
        out.extend(center(&model)?);
    }
    if all || suite == Suite::Structure {
        out.extend(structure(&model)?);
    }
    Ok(out)
}

fn kind_name(k: RelatorKind) -> &'static str {
    match k {
        RelatorKind::Square => "squares",
        RelatorKind::Commutation => "commutations",
        RelatorKind::Braid => "braids",
        RelatorKind::Fork => "forks",
        RelatorKind::Cycle => "cycles",
        RelatorKind::Other => "other",
    }
}

/// Every relator of the quotient presentation is trivial in `S₁₈ ⋉ M`;
/// the cyclic ones are not trivial before the reduction.
pub fn relators(model: &FixtureModel) -> Result<Vec<Entry>> {
    let p = generate(
        &model.graph,
        &hexagon_cycles(&model.links),
        Variant::Quotient,
    )?;
    let labelled: Vec<(String, Word)> = p
        .relators
        .iter()
        .enumerate()
        .map(|(i, w)| (i.to_string(), w.clone()))
        .collect();
    let checks = verify_relators(model, &labelled)?;
    let mut out = Vec::new();
    for kind in [
        RelatorKind::Square,
        RelatorKind::Commutation,
        RelatorKind::Braid,
        RelatorKind::Fork,
        RelatorKind::Cycle,
    ] {
        let of_kind: Vec<_> = checks
            .iter()
            .zip(&p.kinds)
            .filter(|(_, k)| **k == kind)
            .map(|(c, _)| c)
            .collect();
        let failing: Vec<&Word> = of_kind
            .iter()
            .filter(|c| !c.identity)
            .map(|c| &c.word)
            .collect();
        out.push(Entry::check(
            format!("relators.{}", kind_name(kind)),
            failing.is_empty(),
            json!({"count": of_kind.len(), "failing": failing}),
            "relator evaluates to the identity of S18 ⋉ M",
        ));
    }
    let mut nontrivial = 0;
    for w in p.of_kind(RelatorKind::Cycle) {
        let v = model.eval_free(w)?;
        if v.sigma.is_identity() && !v.f.is_identity() {
            nontrivial += 1;
        }
    }
    out.push(Entry::check(
        "relators.cycles_nontrivial_in_free_model",
        nontrivial == 9,
        nontrivial,
        "cyclic relators have identity permutation and nontrivial tuple in S18 ⋉ F*",
    ));
    let mut agreeing = 0;
    for link in &model.links {
        let mut values = Vec::new();
        for reverse in [false, true] {
            for k in 0..6 {
                let mut c = link.cycle.to_vec();
                if reverse {
                    c.reverse();
                }
                c.rotate_left(k);
                values.push(model.eval(&cycle_relator(&c)?.word)?);
            }
        }
        if values.iter().all(|v| *v == values[0]) {
            agreeing += 1;
        }
    }
    out.push(Entry::check(
        "relators.hexagon_orientations",
        agreeing == model.links.len(),
        agreeing,
        "all 12 numerations of each hexagon give the same value",
    ));
    Ok(out)
}

pub fn ax(model: &FixtureModel, fixtures: &Fixtures) -> Result<Vec<Entry>> {
    let ax = AxFixture::from_json(&fixtures.read("ax_relations.json")?)?;
    let words: Vec<(String, Word)> = ax
        .relations
        .iter()
        .map(|r| (r.label.clone(), r.word.clone()))
        .collect();
    let mut out: Vec<Entry> = verify_relators(model, &words)?
        .into_iter()
        .map(|c| {
            let name = format!("ax.{}", c.relator);
            Entry::check(
                name,
                c.identity,
                &c.word,
                "listed relation holds in S18 ⋉ M",
            )
        })
        .collect();
    out.push(Entry::check(
        "ax.count",
        ax.relations.len() == 25,
        ax.relations.len(),
        "25 miscellaneous relations",
    ));
    Ok(out)
}

pub fn tables(model: &FixtureModel, fixtures: &Fixtures) -> Result<Vec<Entry>> {
    let table = NonRelTable::from_json(&fixtures.read("nonrel_pairs.json")?)?;
    let p = generate(&model.graph, &[], Variant::Plain)?;
    let c = coverage_counts(&p, &table);
    let mut out = vec![
        Entry::check(
            "tables.pairs",
            c.total_pairs == 351 && c.disjoint == 297 && c.adjacent == 54 && c.consistent,
            json!({"total": c.total_pairs, "disjoint": c.disjoint, "adjacent": c.adjacent}),
            "351 pairs = 297 disjoint + 54 adjacent",
        ),
        Entry::check(
            "tables.missing",
            c.missing == 43,
            c.missing,
            "351 − 308 = 43 pairs without a given order relation",
        ),
        Entry::check(
            "tables.missing_split",
            (c.missing_disjoint, c.missing_adjacent) == (33, 10),
            json!({"disjoint": c.missing_disjoint, "adjacent": c.missing_adjacent}),
            "43 = 33 disjoint + 10 adjacent",
        ),
        Entry::check(
            "tables.given",
            (c.disjoint_given, c.adjacent_given) == (264, 44),
            json!({"commutations": c.disjoint_given, "braids": c.adjacent_given}),
            "264 commutation and 44 braid relations are given",
        ),
    ];
    let expected = expected_role_table();
    match classify_missing(&table, &model.complex, &model.links) {
        Ok(got) => {
            for (&point, want) in &expected {
                let have = got.get(&point).cloned().unwrap_or_default();
                let names: Vec<&str> = have.iter().map(|r| r.name()).collect();
                out.push(Entry::check(
                    format!("tables.roles.V{point}"),
                    have == *want,
                    names,
                    "missing order relations by role at this point",
                ));
            }
        }
        Err(e) => out.push(Entry::check(
            "tables.roles",
            false,
            e.to_string(),
            "every missing pair is an a/b/d/e pair",
        )),
    }
    Ok(out)
}

pub fn center(model: &FixtureModel) -> Result<Vec<Entry>> {
    let w = match center_witness(model) {
        Ok(w) => w,
        Err(e) => {
            return Ok(vec![Entry::check(
                "center.witness",
                false,
                e.to_string(),
                "witness equals z or z⁻¹",
            )])
        }
    };
    let n = model.planes();
    let expected = [(2, 7), (7, 10), (1, 7), (1, 3)];
    let mut out = Vec::new();
    for (i, (tau, want)) in w.taus.iter().zip(expected).enumerate() {
        out.push(Entry::check(
            format!("center.tau{}", i + 1),
            tau.as_transposition() == Some(want) && tau.degree() == n,
            tau.to_string(),
            format!("τ{} maps to ({} {})", i + 1, want.0, want.1),
        ));
    }
    let value = if w.exponent == 1 { "z" } else { "z^-1" };
    out.push(Entry::check(
        "center.witness",
        true,
        value,
        "witness commutator equals z or z⁻¹",
    ));
    let commutes = model.images.iter().all(|g| {
        let v = crate::model::Semidirect::from_tuple(w.value.f.clone());
        matches!((v.mul(g), g.mul(&v)), (Ok(a), Ok(b)) if a == b)
    });
    out.push(Entry::check(
        "center.witness_central",
        commutes,
        commutes,
        "witness commutes with all 27 generators",
    ));
    Ok(out)
}

pub fn structure(model: &FixtureModel) -> Result<Vec<Entry>> {
    let n = model.planes();
    let ab = kernel_abelianization(n)?;
    let nil = nilpotency_class_check(SAMPLE_SIZE, SEED, n)?;
    let cen = center_check(model, SAMPLE_SIZE, SEED)?;
    Ok(vec![
        Entry::check(
            "structure.kernel_abelianization",
            ab.rank == 2 * (n - 1) && ab.torsion.is_empty(),
            &ab,
            "kernel abelianizes to ℤ^34",
        ),
        Entry::check(
            "structure.nilpotency_class",
            nil.class_exactly_two(),
            &nil,
            "kernel is nilpotent of class 2",
        ),
        Entry::check(
            "structure.center",
            cen.passes(),
            &cen,
            "⟨z⟩ is central and sampled non-z elements are not",
        ),
    ])
}

/// Relator check for a generated complex: the fork presentation is trivial
/// in `S_n ⋉ F★` and each hexagon relator has trivial permutation part.
pub fn generic_relators(x0: &DegenerationComplex) -> Result<Vec<Entry>> {
    let g = dual_graph(x0);
    let links = hexagon_links(x0)?;
    let span = spanning_data(&g, SpanningMode::Canonical)?;
    let images = phi_images(&span, &g)?;
    let p = generate(&g, &hexagon_cycles(&links), Variant::Quotient)?;
    let n = g.vertex_count;
    let mut failing = Vec::new();
    let mut cycle_perm_ok = true;
    for (w, k) in p.relators.iter().zip(&p.kinds) {
        let v = evaluate(w.letters(), &images, n)?;
        if *k == RelatorKind::Cycle {
            cycle_perm_ok &= v.sigma.is_identity();
        } else if !v.is_identity() {
            failing.push(w.clone());
        }
    }
    Ok(vec![
        Entry::check(
            "relators.fork_presentation",
            failing.is_empty(),
            json!({"count": p.relators.len() - p.counts().cycles, "failing": failing}),
            "Coxeter and fork relators are trivial in S_n ⋉ F*",
        ),
        Entry::new(
            "relators.cycles_permutation",
            Status::from_bool(cycle_perm_ok),
            p.counts().cycles,
            "hexagon relators have trivial permutation part",
        ),
    ])
}
