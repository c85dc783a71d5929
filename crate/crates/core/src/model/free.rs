//! `F★_{t,n}`: n-tuples of reduced words in the free group on t chord letters.

use serde::{Deserialize, Serialize};

use super::semidirect::{Semidirect, TupleGroup};
use crate::complex::{DualGraph, SpanningData};
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::words::{free_reduce, Word};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FreeTuple {
    /// `coords[i - 1]` is the coordinate at plane `i`; letters are `±label`.
    pub coords: Vec<Vec<i32>>,
}

impl FreeTuple {
    pub fn coord(&self, i: usize) -> &[i32] {
        &self.coords[i - 1]
    }

    /// The tuple that is `letters` at coordinate `i` and empty elsewhere.
    pub fn single(n: usize, i: usize, letters: &[i32]) -> Self {
        let mut coords = vec![Vec::new(); n];
        coords[i - 1] = free_reduce(letters);
        FreeTuple { coords }
    }
}

impl TupleGroup for FreeTuple {
    fn identity(n: usize) -> Self {
        FreeTuple {
            coords: vec![Vec::new(); n],
        }
    }

    fn degree(&self) -> usize {
        self.coords.len()
    }

    fn mul(&self, other: &Self) -> Result<Self> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| {
                let mut v = a.clone();
                v.extend_from_slice(b);
                free_reduce(&v)
            })
            .collect();
        Ok(FreeTuple { coords })
    }

    fn inverse(&self) -> Result<Self> {
        let coords = self
            .coords
            .iter()
            .map(|c| c.iter().rev().map(|l| -l).collect())
            .collect();
        Ok(FreeTuple { coords })
    }

    fn act(&self, tau: &Permutation) -> Self {
        let coords = (1..=self.degree())
            .map(|i| self.coords[tau.apply(i) - 1].clone())
            .collect();
        FreeTuple { coords }
    }

    fn is_identity(&self) -> bool {
        self.coords.iter().all(Vec::is_empty)
    }
}

pub type SemidirectElement = Semidirect<FreeTuple>;

/// Image of one generator: a tree edge between planes α, β goes to the
/// transposition `(α β)`; a chord labelled τ from α to β additionally
/// carries `x^τ` at α and its inverse at β.
pub fn phi(edge: usize, span: &SpanningData, g: &DualGraph) -> Result<SemidirectElement> {
    let (a, b) = g.edge(edge)?.ends;
    let n = g.vertex_count;
    let sigma = Permutation::transposition(a, b, n)?;
    let mut f = FreeTuple::identity(n);
    if let Some(c) = span.chord_for_edge(edge) {
        let x = c.label as i32;
        f.coords[c.tail - 1] = vec![x];
        f.coords[c.head - 1] = vec![-x];
    }
    Ok(Semidirect { sigma, f })
}

pub fn phi_images(span: &SpanningData, g: &DualGraph) -> Result<Vec<SemidirectElement>> {
    (1..=g.edge_count()).map(|e| phi(e, span, g)).collect()
}

pub fn evaluate_word_semidirect(
    w: &Word,
    span: &SpanningData,
    g: &DualGraph,
) -> Result<SemidirectElement> {
    w.validate(g.edge_count())?;
    super::semidirect::evaluate(w.letters(), &phi_images(span, g)?, g.vertex_count)
}
