//! The model `M`: a central ℤ⁸ block times a Heisenberg-type group on
//! `p_1..p_n, q_1..q_n, z`.
//!
//! Elements are stored in the normal form `y^c · p^a · q^b · z^ζ`. The
//! commutator convention is `[g, h] = g⁻¹h⁻¹gh`, so `[p_i, q_i] = z` and
//! `q_i p_i = p_i q_i z⁻¹`. Everything is exact; overflow is an error.

use serde::{Deserialize, Serialize};

use super::semidirect::TupleGroup;
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Number of central `y` coordinates.
pub const CENTRAL: usize = 8;

/// Chord labels carried by the central block, in `c` order. Entries are
/// `(plus, minus)`: the block maps to `e^plus − e^minus` under `ab`.
pub const CENTRAL_LABELS: [(usize, Option<usize>); CENTRAL] = [
    (4, None),
    (5, None),
    (9, None),
    (10, None),
    (7, Some(8)),
    (6, Some(8)),
    (3, Some(1)),
    (2, Some(1)),
];

/// Chord labels whose images are `p_i` and `q_i`.
pub const P_LABEL: usize = 1;
pub const Q_LABEL: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ReducedElement {
    pub c: [i64; CENTRAL],
    pub a: Vec<i64>,
    pub b: Vec<i64>,
    pub zeta: i64,
}

fn add(x: i64, y: i64) -> Result<i64> {
    x.checked_add(y).ok_or(Error::Overflow)
}

fn neg(x: i64) -> Result<i64> {
    x.checked_neg().ok_or(Error::Overflow)
}

fn dot(b: &[i64], a: &[i64]) -> Result<i64> {
    b.iter().zip(a).try_fold(0i64, |acc, (&x, &y)| {
        add(acc, x.checked_mul(y).ok_or(Error::Overflow)?)
    })
}

impl ReducedElement {
    pub fn p(i: usize, n: usize) -> Self {
        let mut e = Self::identity(n);
        e.a[i - 1] = 1;
        e
    }

    pub fn q(i: usize, n: usize) -> Self {
        let mut e = Self::identity(n);
        e.b[i - 1] = 1;
        e
    }

    pub fn z(n: usize) -> Self {
        Self::z_pow(n, 1)
    }

    pub fn z_pow(n: usize, k: i64) -> Self {
        let mut e = Self::identity(n);
        e.zeta = k;
        e
    }

    /// The central generator with index `k` in `c` order.
    pub fn y(k: usize, n: usize) -> Self {
        let mut e = Self::identity(n);
        e.c[k] = 1;
        e
    }

    /// `Some(k)` if this element is `z^k`.
    pub fn as_z_power(&self) -> Option<i64> {
        let rest_zero = self.c.iter().all(|&x| x == 0)
            && self.a.iter().all(|&x| x == 0)
            && self.b.iter().all(|&x| x == 0);
        rest_zero.then_some(self.zeta)
    }

    pub fn pow(&self, k: i64) -> Result<Self> {
        let base = if k < 0 { self.inverse()? } else { self.clone() };
        let mut acc = Self::identity(self.degree());
        for _ in 0..k.unsigned_abs() {
            acc = acc.mul(&base)?;
        }
        Ok(acc)
    }

    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.inverse()?
            .mul(&other.inverse()?)?
            .mul(self)?
            .mul(other)
    }
}

/// `(c, a, b, ζ)(c′, a′, b′, ζ′) = (c+c′, a+a′, b+b′, ζ+ζ′ − Σ b_i a′_i)`.
pub fn heisenberg_mul(u: &ReducedElement, v: &ReducedElement) -> Result<ReducedElement> {
    if u.degree() != v.degree() {
        return Err(Error::DegreeMismatch(u.degree(), v.degree()));
    }
    let mut c = [0i64; CENTRAL];
    for k in 0..CENTRAL {
        c[k] = add(u.c[k], v.c[k])?;
    }
    let a =
        u.a.iter()
            .zip(&v.a)
            .map(|(&x, &y)| add(x, y))
            .collect::<Result<_>>()?;
    let b =
        u.b.iter()
            .zip(&v.b)
            .map(|(&x, &y)| add(x, y))
            .collect::<Result<_>>()?;
    let zeta = add(add(u.zeta, v.zeta)?, neg(dot(&u.b, &v.a)?)?)?;
    Ok(ReducedElement { c, a, b, zeta })
}

impl TupleGroup for ReducedElement {
    fn identity(n: usize) -> Self {
        ReducedElement {
            c: [0; CENTRAL],
            a: vec![0; n],
            b: vec![0; n],
            zeta: 0,
        }
    }

    fn degree(&self) -> usize {
        self.a.len()
    }

    fn mul(&self, other: &Self) -> Result<Self> {
        heisenberg_mul(self, other)
    }

    /// `(−c, −a, −b, −ζ − Σ b_i a_i)`.
    fn inverse(&self) -> Result<Self> {
        let mut c = [0i64; CENTRAL];
        for k in 0..CENTRAL {
            c[k] = neg(self.c[k])?;
        }
        let a = self.a.iter().map(|&x| neg(x)).collect::<Result<_>>()?;
        let b = self.b.iter().map(|&x| neg(x)).collect::<Result<_>>()?;
        let zeta = neg(add(self.zeta, dot(&self.b, &self.a)?)?)?;
        Ok(ReducedElement { c, a, b, zeta })
    }

    fn act(&self, tau: &Permutation) -> Self {
        let n = self.degree();
        ReducedElement {
            c: self.c,
            a: (1..=n).map(|i| self.a[tau.apply(i) - 1]).collect(),
            b: (1..=n).map(|i| self.b[tau.apply(i) - 1]).collect(),
            zeta: self.zeta,
        }
    }

    fn is_identity(&self) -> bool {
        self.as_z_power() == Some(0)
    }
}

/// Exponents over `e¹..e^t`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct AbImage {
    pub exponents: Vec<i64>,
}

impl AbImage {
    pub fn is_zero(&self) -> bool {
        self.exponents.iter().all(|&x| x == 0)
    }

    pub fn add(&self, other: &AbImage) -> Result<AbImage> {
        let exponents = self
            .exponents
            .iter()
            .zip(&other.exponents)
            .map(|(&x, &y)| add(x, y))
            .collect::<Result<_>>()?;
        Ok(AbImage { exponents })
    }
}

/// Number of chord letters in the 3×3 instance.
pub const CHORDS: usize = 10;

pub fn ab_image(x: &ReducedElement) -> Result<AbImage> {
    let mut e = vec![0i64; CHORDS];
    for (k, &(plus, minus)) in CENTRAL_LABELS.iter().enumerate() {
        e[plus - 1] = add(e[plus - 1], x.c[k])?;
        if let Some(m) = minus {
            e[m - 1] = add(e[m - 1], neg(x.c[k])?)?;
        }
    }
    let sa = x.a.iter().try_fold(0i64, |s, &v| add(s, v))?;
    let sb = x.b.iter().try_fold(0i64, |s, &v| add(s, v))?;
    e[P_LABEL - 1] = add(e[P_LABEL - 1], sa)?;
    e[Q_LABEL - 1] = add(e[Q_LABEL - 1], sb)?;
    Ok(AbImage { exponents: e })
}

pub fn kernel_member(x: &ReducedElement) -> Result<bool> {
    Ok(ab_image(x)?.is_zero())
}

/// Image of the chord letter `x^label` at coordinate `i`.
pub fn rho_letter(label: usize, i: usize, n: usize) -> Result<ReducedElement> {
    let mut e = ReducedElement::identity(n);
    match label {
        P_LABEL => e.a[i - 1] = 1,
        Q_LABEL => e.b[i - 1] = 1,
        _ => {
            let k = CENTRAL_LABELS
                .iter()
                .position(|&(plus, _)| plus == label)
                .ok_or(Error::LetterOutOfRange {
                    letter: label as i32,
                    alphabet: CHORDS,
                })?;
            e.c[k] = 1;
            match CENTRAL_LABELS[k].1 {
                Some(P_LABEL) => e.a[i - 1] = 1,
                Some(Q_LABEL) => e.b[i - 1] = 1,
                _ => {}
            }
        }
    }
    Ok(e)
}

/// Coordinatewise letter substitution followed by collection in `M`.
/// Different coordinates commute in `M`, so the order of coordinates is
/// immaterial.
pub fn rho_tuple(f: &super::free::FreeTuple) -> Result<ReducedElement> {
    let n = f.degree();
    let mut acc = ReducedElement::identity(n);
    for i in 1..=n {
        for &l in f.coord(i) {
            let img = rho_letter(l.unsigned_abs() as usize, i, n)?;
            acc = if l > 0 {
                acc.mul(&img)?
            } else {
                acc.mul(&img.inverse()?)?
            };
        }
    }
    Ok(acc)
}

pub type ModelElement = super::semidirect::Semidirect<ReducedElement>;

pub fn rho(g: &super::free::SemidirectElement) -> Result<ModelElement> {
    Ok(ModelElement {
        sigma: g.sigma.clone(),
        f: rho_tuple(&g.f)?,
    })
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;
    use crate::model::free::FreeTuple;

    const N: usize = 18;

    #[test]
    fn pq_and_qp_differ_by_z() {
        let p = ReducedElement::p(1, N);
        let q = ReducedElement::q(1, N);
        let pq = p.mul(&q).unwrap();
        let qp = q.mul(&p).unwrap();
        assert_eq!(
            pq.inverse().unwrap().mul(&qp).unwrap(),
            ReducedElement::z_pow(N, -1)
        );
        assert_eq!(p.commutator(&q).unwrap(), ReducedElement::z(N));
        // different indices commute
        let q2 = ReducedElement::q(2, N);
        assert!(p.commutator(&q2).unwrap().is_identity());
    }

    #[test]
    fn central_block_adds() {
        let mut u = ReducedElement::identity(N);
        u.c = [1, 2, 3, 4, 5, 6, 7, 8];
        u.zeta = 3;
        let mut v = ReducedElement::identity(N);
        v.c = [8, 7, 6, 5, 4, 3, 2, 1];
        v.zeta = -1;
        let w = heisenberg_mul(&u, &v).unwrap();
        assert_eq!(w.c, [9; 8]);
        assert_eq!(w.zeta, 2);
    }

    #[test]
    fn overflow_is_an_error() {
        let big = ReducedElement::z_pow(N, i64::MAX);
        assert_eq!(big.mul(&ReducedElement::z(N)), Err(Error::Overflow));
        let mut a = ReducedElement::identity(N);
        a.a[0] = i64::MAX;
        let mut b = ReducedElement::identity(N);
        b.b[0] = 2;
        assert_eq!(b.mul(&a), Err(Error::Overflow));
    }

    #[test]
    fn ab_examples() {
        assert!(ab_image(&ReducedElement::z(N)).unwrap().is_zero());
        for i in 1..=N {
            let e = ab_image(&ReducedElement::p(i, N)).unwrap();
            assert_eq!(e.exponents, [1, 0, 0, 0, 0, 0, 0, 0, 0, 0]);
        }
        let y78 = ab_image(&ReducedElement::y(4, N)).unwrap();
        assert_eq!(y78.exponents, [0, 0, 0, 0, 0, 0, 1, -1, 0, 0]);
    }

    #[test]
    fn kernel_examples() {
        let p1 = ReducedElement::p(1, N);
        let p2 = ReducedElement::p(2, N);
        assert!(kernel_member(&ReducedElement::z(N)).unwrap());
        assert!(kernel_member(&p1.mul(&p2.inverse().unwrap()).unwrap()).unwrap());
        assert!(!kernel_member(&p1).unwrap());
    }

    #[test]
    fn rho_examples() {
        for i in 1..=N {
            let f = FreeTuple::single(N, i, &[7, -8]);
            assert_eq!(rho_tuple(&f).unwrap(), ReducedElement::y(4, N));
        }
        // [x¹_7, x⁸_7] in the 7th coordinate
        let f = FreeTuple::single(N, 7, &[-1, -8, 1, 8]);
        assert_eq!(rho_tuple(&f).unwrap(), ReducedElement::z(N));
        assert!(rho_letter(11, 1, N).is_err());
    }

    #[test]
    fn action_fixes_central_part_and_ab() {
        let mut x = ReducedElement::identity(N);
        x.c = [1, 0, 2, 0, 0, 3, 0, 1];
        x.a[0] = 4;
        x.b[5] = -2;
        x.zeta = 9;
        let tau = Permutation::transposition(1, 6, N).unwrap();
        let y = x.act(&tau);
        assert_eq!((y.c, y.zeta), (x.c, x.zeta));
        assert_eq!((y.a[5], y.b[0]), (4, -2));
        assert_eq!(ab_image(&y).unwrap(), ab_image(&x).unwrap());
    }

    /// Letters are (kind, index, sign) with kind 0 = p, 1 = q, 2 = z.
    fn collect_by_rewriting(word: &[(u8, usize, i64)], n: usize) -> ReducedElement {
        let mut w: Vec<(u8, usize, i64)> = word.to_vec();
        let mut zeta = 0;
        // bubble sort into p* q* z*, paying q^e_i p^d_i = p^d_i q^e_i z^{-ed}
        loop {
            let mut swapped = false;
            for k in 0..w.len().saturating_sub(1) {
                let (x, y) = (w[k], w[k + 1]);
                if x.0 > y.0 {
                    if x.0 == 1 && y.0 == 0 && x.1 == y.1 {
                        zeta -= x.2 * y.2;
                    }
                    w.swap(k, k + 1);
                    swapped = true;
                }
            }
            if !swapped {
                break;
            }
        }
        let mut e = ReducedElement::identity(n);
        for (kind, i, s) in w {
            match kind {
                0 => e.a[i - 1] += s,
                1 => e.b[i - 1] += s,
                _ => zeta += s,
            }
        }
        e.zeta = zeta;
        e
    }

    fn letter() -> impl Strategy<Value = (u8, usize, i64)> {
        (0u8..3, 1usize..=3, prop_oneof![Just(-1i64), Just(1i64)])
    }

    fn as_element(l: (u8, usize, i64), n: usize) -> ReducedElement {
        let base = match l.0 {
            0 => ReducedElement::p(l.1, n),
            1 => ReducedElement::q(l.1, n),
            _ => ReducedElement::z(n),
        };
        if l.2 < 0 {
            base.inverse().unwrap()
        } else {
            base
        }
    }

    fn arb_reduced() -> impl Strategy<Value = ReducedElement> {
        (
            proptest::collection::vec(-5i64..6, 8),
            proptest::collection::vec(-5i64..6, 3),
            proptest::collection::vec(-5i64..6, 3),
            -5i64..6,
        )
            .prop_map(|(c, a, b, zeta)| ReducedElement {
                c: c.try_into().unwrap(),
                a,
                b,
                zeta,
            })
    }

    proptest! {
        #[test]
        fn cocycle_matches_rewriting(word in proptest::collection::vec(letter(), 0..=8)) {
            let n = 3;
            let mut acc = ReducedElement::identity(n);
            for &l in &word {
                acc = acc.mul(&as_element(l, n)).unwrap();
            }
            prop_assert_eq!(acc, collect_by_rewriting(&word, n));
        }

        #[test]
        fn associative_with_central_z(x in arb_reduced(), y in arb_reduced(), w in arb_reduced()) {
            prop_assert_eq!(x.mul(&y).unwrap().mul(&w).unwrap(), x.mul(&y.mul(&w).unwrap()).unwrap());
            let z = ReducedElement::z(3);
            prop_assert_eq!(x.mul(&z).unwrap(), z.mul(&x).unwrap());
            prop_assert!(x.mul(&x.inverse().unwrap()).unwrap().is_identity());
        }

        #[test]
        fn ab_is_additive(x in arb_reduced(), y in arb_reduced()) {
            let lhs = ab_image(&x.mul(&y).unwrap()).unwrap();
            prop_assert_eq!(lhs, ab_image(&x).unwrap().add(&ab_image(&y).unwrap()).unwrap());
        }
    }
}
