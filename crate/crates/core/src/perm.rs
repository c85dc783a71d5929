//! Permutations of plane indices `1..=n` in one-line notation.
//!
//! Composition is right-to-left: `(p ∘ q)(i) = p(q(i))`. Every product of
//! generators elsewhere in the crate is read against this convention.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    /// `images[i - 1]` is the image of `i`.
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &x in &images {
            if x == 0 || x > n || seen[x] {
                return Err(Error::NotAPermutation(format!("{images:?}")));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    pub fn transposition(a: usize, b: usize, n: usize) -> Result<Self> {
        if a == b || a == 0 || b == 0 || a > n || b > n {
            return Err(Error::InvalidTransposition(a, b, n));
        }
        let mut p = Self::identity(n);
        p.images.swap(a - 1, b - 1);
        Ok(p)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Image of the 1-based point `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| x == i + 1)
    }

    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(self.then_unchecked(other))
    }

    /// `self ∘ other` without the degree check; callers guarantee equal degrees.
    pub(crate) fn then_unchecked(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: other.images.iter().map(|&j| self.images[j - 1]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x - 1] = i + 1;
        }
        Permutation { images: inv }
    }

    /// The swapped pair `(a, b)` with `a < b` if this is a transposition.
    pub fn as_transposition(&self) -> Option<(usize, usize)> {
        let moved: Vec<usize> = (1..=self.degree())
            .filter(|&i| self.apply(i) != i)
            .collect();
        match moved[..] {
            [a, b] => Some((a, b)),
            _ => None,
        }
    }

    /// Disjoint cycles of length at least two, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree() + 1];
        let mut out = Vec::new();
        for start in 1..=self.degree() {
            if seen[start] || self.apply(start) == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Permutation::from_images(v)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.images
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}

/// Whether a set of transpositions generates the full symmetric group,
/// decided by connectivity of the graph with one edge per transposition.
pub fn generates_full_symmetric(gens: &[Permutation]) -> Result<bool> {
    let Some(first) = gens.first() else {
        return Ok(false);
    };
    let n = first.degree();
    let mut parent: Vec<usize> = (0..=n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut components = n;
    for g in gens {
        if g.degree() != n {
            return Err(Error::DegreeMismatch(n, g.degree()));
        }
        let (a, b) = g.as_transposition().ok_or(Error::NotATransposition)?;
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra] = rb;
            components -= 1;
        }
    }
    Ok(components == 1)
}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use proptest::prelude::*;

    use super::*;

    fn t(a: usize, b: usize, n: usize) -> Permutation {
        Permutation::transposition(a, b, n).unwrap()
    }

    /// Closure of the generated group by brute force; feasible for n ≤ 8.
    fn group_order(gens: &[Permutation], n: usize) -> usize {
        let mut seen = HashSet::new();
        let id = Permutation::identity(n);
        let mut frontier = vec![id.clone()];
        seen.insert(id);
        while let Some(p) = frontier.pop() {
            for g in gens {
                let q = g.compose(&p).unwrap();
                if seen.insert(q.clone()) {
                    frontier.push(q);
                }
            }
        }
        seen.len()
    }

    #[test]
    fn transposition_examples() {
        let tau1 = t(2, 7, 18);
        assert_eq!(tau1.to_string(), "(2 7)");
        assert_eq!(tau1.as_transposition(), Some((2, 7)));
        assert_eq!(t(1, 3, 18).to_string(), "(1 3)");
        assert!(tau1.compose(&tau1).unwrap().is_identity());
    }

    #[test]
    fn transposition_errors() {
        assert!(matches!(
            Permutation::transposition(3, 3, 5),
            Err(Error::InvalidTransposition(..))
        ));
        assert!(Permutation::transposition(0, 2, 5).is_err());
        assert!(Permutation::transposition(2, 6, 5).is_err());
    }

    #[test]
    fn compose_convention() {
        let n = 3;
        let p = t(1, 2, n).compose(&t(2, 3, n)).unwrap();
        // right factor first: 1 ↦ 1 ↦ 2, 2 ↦ 3 ↦ 3, 3 ↦ 2 ↦ 1
        assert_eq!(p.images(), &[2, 3, 1]);
        assert_eq!(p.to_string(), "(1 2 3)");
        assert!(t(1, 2, n).compose(&t(1, 2, n)).unwrap().is_identity());
        let id = Permutation::identity(n);
        assert_eq!(p.compose(&id).unwrap(), p);
        assert!(matches!(
            p.compose(&Permutation::identity(4)),
            Err(Error::DegreeMismatch(3, 4))
        ));
    }

    #[test]
    fn generation_small_cases() {
        assert!(!generates_full_symmetric(&[t(1, 2, 3)]).unwrap());
        assert!(generates_full_symmetric(&[t(1, 2, 3), t(2, 3, 3)]).unwrap());
        let cyc = Permutation::from_images(vec![2, 3, 1]).unwrap();
        assert_eq!(
            generates_full_symmetric(&[cyc]),
            Err(Error::NotATransposition)
        );
    }

    #[test]
    fn json_is_one_line_notation() {
        let p = t(1, 3, 4);
        assert_eq!(serde_json::to_string(&p).unwrap(), "[3,2,1,4]");
        let back: Permutation = serde_json::from_str("[3,2,1,4]").unwrap();
        assert_eq!(back, p);
        assert!(serde_json::from_str::<Permutation>("[1,1,2]").is_err());
    }

    fn arb_perm(n: usize) -> impl Strategy<Value = Permutation> {
        Just((1..=n).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(|v| Permutation::from_images(v).unwrap())
    }

    proptest! {
        #[test]
        fn inverse_cancels(p in arb_perm(9)) {
            prop_assert!(p.compose(&p.inverse()).unwrap().is_identity());
            prop_assert!(p.inverse().compose(&p).unwrap().is_identity());
        }

        #[test]
        fn transposition_symmetric(a in 1usize..=9, b in 1usize..=9) {
            prop_assume!(a != b);
            prop_assert_eq!(t(a, b, 9), t(b, a, 9));
        }

        #[test]
        fn compose_associative(p in arb_perm(7), q in arb_perm(7), r in arb_perm(7)) {
            let left = p.compose(&q).unwrap().compose(&r).unwrap();
            let right = p.compose(&q.compose(&r).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn connectivity_matches_group_order(
            n in 2usize..=6,
            pairs in proptest::collection::vec((1usize..=6, 1usize..=6), 1..8),
        ) {
            let gens: Vec<Permutation> = pairs
                .into_iter()
                .filter(|&(a, b)| a != b && a <= n && b <= n)
                .map(|(a, b)| t(a, b, n))
                .collect();
            prop_assume!(!gens.is_empty());
            let factorial: usize = (1..=n).product();
            prop_assert_eq!(
                generates_full_symmetric(&gens).unwrap(),
                group_order(&gens, n) == factorial
            );
        }
    }
}
