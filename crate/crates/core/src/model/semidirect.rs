//! `S_n ⋉ T` for tuple groups `T` on which `S_n` acts by permuting indices.
//!
//! Multiplication is `(σ, f)(τ, g) = (σ∘τ, f^τ · g)` with `(f^τ)_i = f_{τ(i)}`.
//! Under this convention every chord image squares to the identity.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::perm::Permutation;

/// A group of n-tuples with a coordinate-permuting `S_n` action.
pub trait TupleGroup: Clone + PartialEq + Send + Sync {
    fn identity(n: usize) -> Self;
    fn degree(&self) -> usize;
    fn mul(&self, other: &Self) -> Result<Self>;
    fn inverse(&self) -> Result<Self>;
    /// `(f^τ)_i = f_{τ(i)}`.
    fn act(&self, tau: &Permutation) -> Self;
    fn is_identity(&self) -> bool;
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Semidirect<T> {
    pub sigma: Permutation,
    pub f: T,
}

impl<T: TupleGroup> Semidirect<T> {
    pub fn identity(n: usize) -> Self {
        Semidirect {
            sigma: Permutation::identity(n),
            f: T::identity(n),
        }
    }

    pub fn from_tuple(f: T) -> Self {
        Semidirect {
            sigma: Permutation::identity(f.degree()),
            f,
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        let sigma = self.sigma.compose(&other.sigma)?;
        let f = self.f.act(&other.sigma).mul(&other.f)?;
        Ok(Semidirect { sigma, f })
    }

    pub fn inverse(&self) -> Result<Self> {
        let sigma = self.sigma.inverse();
        let f = self.f.act(&sigma).inverse()?;
        Ok(Semidirect { sigma, f })
    }

    /// `[g, h] = g⁻¹ h⁻¹ g h`.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.inverse()?
            .mul(&other.inverse()?)?
            .mul(self)?
            .mul(other)
    }

    pub fn is_identity(&self) -> bool {
        self.sigma.is_identity() && self.f.is_identity()
    }
}

/// Left-to-right product of generator images; `images[g - 1]` is the image
/// of generator `g`, and a negative letter uses the inverse image.
pub fn evaluate<T: TupleGroup>(
    letters: &[i32],
    images: &[Semidirect<T>],
    n: usize,
) -> Result<Semidirect<T>> {
    let mut acc = Semidirect::identity(n);
    for &l in letters {
        let g = l.unsigned_abs() as usize;
        let img = images
            .get(g.wrapping_sub(1))
            .ok_or(crate::Error::LetterOutOfRange {
                letter: l,
                alphabet: images.len(),
            })?;
        acc = if l > 0 {
            acc.mul(img)?
        } else {
            acc.mul(&img.inverse()?)?
        };
    }
    Ok(acc)
}
