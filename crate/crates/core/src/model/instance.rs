//! The 3×3 instance: generator images in `S₁₈ ⋉ F★` and `S₁₈ ⋉ M`, the
//! relator suite, the center witness and the structure checks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::free::{phi_images, SemidirectElement};
use super::reduced::{kernel_member, rho, ModelElement, ReducedElement};
use super::semidirect::{evaluate, Semidirect, TupleGroup};
use super::snf::{abelianization, AbelianGroup};
use crate::complex::{
    dual_graph, hexagon_links, load_paper_labeling_with, spanning_data_with, DegenerationComplex,
    DualGraph, HexagonLink, SpanningData, SpanningMode,
};
use crate::error::{Error, Result};
use crate::fixtures::Fixtures;
use crate::perm::Permutation;
use crate::words::Word;

pub struct FixtureModel {
    pub complex: DegenerationComplex,
    pub graph: DualGraph,
    pub links: Vec<HexagonLink>,
    pub span: SpanningData,
    pub free_images: Vec<SemidirectElement>,
    pub images: Vec<ModelElement>,
}

impl FixtureModel {
    pub fn load(fixtures: &Fixtures) -> Result<Self> {
        let complex = load_paper_labeling_with(fixtures)?;
        let graph = dual_graph(&complex);
        let links = hexagon_links(&complex)?;
        let span = spanning_data_with(&graph, SpanningMode::PaperFixture, fixtures)?;
        let free_images = phi_images(&span, &graph)?;
        let images = free_images.iter().map(rho).collect::<Result<_>>()?;
        Ok(FixtureModel {
            complex,
            graph,
            links,
            span,
            free_images,
            images,
        })
    }

    pub fn planes(&self) -> usize {
        self.graph.vertex_count
    }

    pub fn eval(&self, w: &Word) -> Result<ModelElement> {
        evaluate(w.letters(), &self.images, self.planes())
    }

    pub fn eval_free(&self, w: &Word) -> Result<SemidirectElement> {
        evaluate(w.letters(), &self.free_images, self.planes())
    }

    pub fn image(&self, generator: usize) -> &ModelElement {
        &self.images[generator - 1]
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelatorCheck {
    pub relator: String,
    pub word: Word,
    pub identity: bool,
    /// The value when it is not the identity.
    pub value: Option<ModelElement>,
}

/// Evaluates each labelled word in `S₁₈ ⋉ M`; output order follows input.
pub fn verify_relators(
    model: &FixtureModel,
    words: &[(String, Word)],
) -> Result<Vec<RelatorCheck>> {
    words
        .par_iter()
        .map(|(label, w)| {
            let v = model.eval(w)?;
            let identity = v.is_identity();
            Ok(RelatorCheck {
                relator: label.clone(),
                word: w.clone(),
                identity,
                value: (!identity).then_some(v),
            })
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CenterWitness {
    /// Permutation parts of τ₁, τ₂, τ₃, τ₄.
    pub taus: [Permutation; 4],
    pub value: ModelElement,
    /// `k` with `value = z^k`.
    pub exponent: i64,
}

/// Evaluates `[τ₁·1, τ₃⁻¹(τ₄·4)τ₃]` where
/// `σ₁ = 21·19·8·6`, `τ₁ = σ₁⁻¹·14·σ₁`, `σ₂ = 20·24·25·16·11·5`,
/// `τ₂ = 19·21·14·21·19`, `τ₃ = σ₂⁻¹τ₂σ₂`, `τ₄ = σ₂⁻¹·8·σ₂`.
pub fn center_witness(model: &FixtureModel) -> Result<CenterWitness> {
    let w = |v: &[usize]| model.eval(&Word::from_generators(v));
    let conj = |s: &ModelElement, x: &ModelElement| s.inverse()?.mul(x)?.mul(s);
    let s1 = w(&[21, 19, 8, 6])?;
    let t1 = conj(&s1, model.image(14))?;
    let s2 = w(&[20, 24, 25, 16, 11, 5])?;
    let t2 = w(&[19, 21, 14, 21, 19])?;
    let t3 = conj(&s2, &t2)?;
    let t4 = conj(&s2, model.image(8))?;
    let left = t1.mul(model.image(1))?;
    let right = conj(&t3, &t4.mul(model.image(4))?)?;
    let value = left.commutator(&right)?;
    let exponent = match (value.sigma.is_identity(), value.f.as_z_power()) {
        (true, Some(k)) if k.abs() == 1 => k,
        _ => {
            return Err(Error::CorruptFixture(format!(
                "center witness is not z or z⁻¹: permutation {}, value {:?}",
                value.sigma, value.f
            )))
        }
    };
    Ok(CenterWitness {
        taus: [
            t1.sigma.clone(),
            t2.sigma.clone(),
            t3.sigma.clone(),
            t4.sigma.clone(),
        ],
        value,
        exponent,
    })
}

/// Generators `r_i = p_i p_n⁻¹`, `s_i = q_i q_n⁻¹` (i < n) and `z` of the
/// kernel, as elements of `M`.
pub fn kernel_generators(n: usize) -> Result<Vec<ReducedElement>> {
    let mut gens = Vec::with_capacity(2 * n - 1);
    let pn = ReducedElement::p(n, n).inverse()?;
    let qn = ReducedElement::q(n, n).inverse()?;
    for i in 1..n {
        gens.push(ReducedElement::p(i, n).mul(&pn)?);
    }
    for i in 1..n {
        gens.push(ReducedElement::q(i, n).mul(&qn)?);
    }
    gens.push(ReducedElement::z(n));
    Ok(gens)
}

/// Abelianized relators `[g, h] z^{-k}` of the kernel, one row per pair.
pub fn kernel_relation_matrix(n: usize) -> Result<Vec<Vec<i64>>> {
    let gens = kernel_generators(n)?;
    let cols = gens.len();
    let mut rows = Vec::new();
    for i in 0..cols {
        for j in (i + 1)..cols {
            let k = gens[i]
                .commutator(&gens[j])?
                .as_z_power()
                .ok_or_else(|| Error::Inconsistent("kernel commutator outside ⟨z⟩".into()))?;
            let mut row = vec![0i64; cols];
            row[cols - 1] = -k;
            rows.push(row);
        }
    }
    Ok(rows)
}

pub fn kernel_abelianization(n: usize) -> Result<AbelianGroup> {
    let m = kernel_relation_matrix(n)?;
    abelianization(&m, 2 * n - 1)
}

/// A random kernel element with small entries; `central` keeps `a = b = 0`.
pub fn random_kernel_element(rng: &mut impl Rng, n: usize, central: bool) -> ReducedElement {
    let mut e = ReducedElement::identity(n);
    if !central {
        for v in [&mut e.a, &mut e.b] {
            for x in v.iter_mut().take(n - 1) {
                *x = rng.gen_range(-3..=3);
            }
            v[n - 1] = -v[..n - 1].iter().sum::<i64>();
        }
    }
    e.zeta = rng.gen_range(-5..=5);
    e
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NilpotencyReport {
    pub samples: usize,
    /// Every sampled `[g, h]` lies in `⟨z⟩`.
    pub commutators_central: bool,
    /// Every sampled `[[g, h], k]` is trivial.
    pub class_at_most_two: bool,
    /// `[p₁p₂⁻¹, q₁q₂⁻¹] = z^k` with this `k`.
    pub witness_exponent: i64,
}

impl NilpotencyReport {
    pub fn class_exactly_two(&self) -> bool {
        self.commutators_central && self.class_at_most_two && self.witness_exponent != 0
    }
}

pub fn nilpotency_class_check(sample_size: usize, seed: u64, n: usize) -> Result<NilpotencyReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut commutators_central = true;
    let mut class_at_most_two = true;
    for _ in 0..sample_size {
        let g = random_kernel_element(&mut rng, n, false);
        let h = random_kernel_element(&mut rng, n, false);
        let k = random_kernel_element(&mut rng, n, false);
        for x in [&g, &h, &k] {
            if !kernel_member(x)? {
                return Err(Error::Inconsistent(
                    "sampled element outside the kernel".into(),
                ));
            }
        }
        let c = g.commutator(&h)?;
        commutators_central &= c.as_z_power().is_some();
        class_at_most_two &= c.commutator(&k)?.is_identity();
    }
    let g = ReducedElement::p(1, n).mul(&ReducedElement::p(2, n).inverse()?)?;
    let h = ReducedElement::q(1, n).mul(&ReducedElement::q(2, n).inverse()?)?;
    let witness_exponent = g.commutator(&h)?.as_z_power().unwrap_or(0);
    Ok(NilpotencyReport {
        samples: sample_size,
        commutators_central,
        class_at_most_two,
        witness_exponent,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CenterReport {
    pub z_commutes_with_generators: bool,
    pub samples: usize,
    /// Sampled kernel elements with `a ≠ 0` or `b ≠ 0` that fail to commute
    /// with some transposition.
    pub non_central_confirmed: usize,
}

impl CenterReport {
    pub fn passes(&self) -> bool {
        self.z_commutes_with_generators && self.non_central_confirmed == self.samples
    }
}

pub fn center_check(model: &FixtureModel, sample_size: usize, seed: u64) -> Result<CenterReport> {
    let n = model.planes();
    let z = Semidirect::from_tuple(ReducedElement::z(n));
    let mut z_commutes = true;
    for img in &model.images {
        z_commutes &= z.mul(img)? == img.mul(&z)?;
    }
    let transpositions: Vec<ModelElement> = (1..=n)
        .flat_map(|i| ((i + 1)..=n).map(move |j| (i, j)))
        .map(|(i, j)| {
            Ok(Semidirect {
                sigma: Permutation::transposition(i, j, n)?,
                f: ReducedElement::identity(n),
            })
        })
        .collect::<Result<_>>()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut samples = 0;
    let mut confirmed = 0;
    while samples < sample_size {
        let g = random_kernel_element(&mut rng, n, false);
        if g.a.iter().chain(&g.b).all(|&x| x == 0) {
            continue;
        }
        samples += 1;
        let g = Semidirect::from_tuple(g);
        let mut moved = false;
        for t in &transpositions {
            if g.mul(t)? != t.mul(&g)? {
                moved = true;
                break;
            }
        }
        confirmed += usize::from(moved);
    }
    Ok(CenterReport {
        z_commutes_with_generators: z_commutes,
        samples,
        non_central_confirmed: confirmed,
    })
}
