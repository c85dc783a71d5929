//! Todd–Coxeter coset enumeration, HLT strategy.
//!
//! A generator whose square is among the relators is treated as an
//! involution and gets a single table column; every other generator gets
//! one column for itself and one for its inverse. Coset 0 is the subgroup.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::presentation::Presentation;
use crate::words::Word;

pub const DEFAULT_CAPACITY: usize = 1_000_000;

const UNDEF: usize = usize::MAX;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CosetTable {
    /// Signed letter acting through each column.
    pub columns: Vec<i32>,
    /// `rows[c][k]` is the coset reached from `c` through column `k`.
    pub rows: Vec<Vec<usize>>,
    /// Cosets defined over the whole run, dead ones included.
    pub defined: usize,
}

impl CosetTable {
    pub fn index(&self) -> usize {
        self.rows.len()
    }

    fn column(&self, letter: i32) -> usize {
        self.columns
            .iter()
            .position(|&c| c == letter)
            .unwrap_or_else(|| {
                self.columns
                    .iter()
                    .position(|&c| c == -letter)
                    .expect("letter has a column")
            })
    }

    /// Coset reached from `start` by reading `w`.
    pub fn trace(&self, start: usize, w: &Word) -> usize {
        w.letters()
            .iter()
            .fold(start, |c, &l| self.rows[c][self.column(l)])
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Enumeration {
    Complete {
        table: CosetTable,
    },
    /// The table hit its capacity before closing. Inconclusive.
    CapacityExceeded {
        capacity: usize,
    },
}

impl Enumeration {
    pub fn index(&self) -> Option<usize> {
        match self {
            Enumeration::Complete { table } => Some(table.index()),
            Enumeration::CapacityExceeded { .. } => None,
        }
    }
}

struct Enumerator {
    cols: usize,
    inv: Vec<usize>,
    table: Vec<usize>,
    parent: Vec<usize>,
    capacity: usize,
    queue: Vec<usize>,
}

struct Full;

impl Enumerator {
    fn count(&self) -> usize {
        self.parent.len()
    }

    fn get(&self, c: usize, x: usize) -> usize {
        self.table[c * self.cols + x]
    }

    fn set(&mut self, c: usize, x: usize, v: usize) {
        self.table[c * self.cols + x] = v;
    }

    fn alive(&self, c: usize) -> bool {
        self.parent[c] == c
    }

    fn new_coset(&mut self) -> std::result::Result<usize, Full> {
        if self.count() >= self.capacity {
            return Err(Full);
        }
        let c = self.count();
        self.parent.push(c);
        self.table.extend(std::iter::repeat_n(UNDEF, self.cols));
        Ok(c)
    }

    fn define(&mut self, c: usize, x: usize) -> std::result::Result<(), Full> {
        let d = self.new_coset()?;
        self.set(c, x, d);
        self.set(d, self.inv[x], c);
        Ok(())
    }

    fn rep(&mut self, c: usize) -> usize {
        let mut r = c;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut x = c;
        while self.parent[x] != r {
            let next = self.parent[x];
            self.parent[x] = r;
            x = next;
        }
        r
    }

    fn merge(&mut self, a: usize, b: usize) {
        let (a, b) = (self.rep(a), self.rep(b));
        if a == b {
            return;
        }
        let (lo, hi) = (a.min(b), a.max(b));
        self.parent[hi] = lo;
        self.queue.push(hi);
    }

    fn coincidence(&mut self, a: usize, b: usize) {
        self.queue.clear();
        self.merge(a, b);
        let mut i = 0;
        while i < self.queue.len() {
            let e = self.queue[i];
            i += 1;
            for x in 0..self.cols {
                let f = self.get(e, x);
                if f == UNDEF {
                    continue;
                }
                let xi = self.inv[x];
                if self.get(f, xi) == e {
                    self.set(f, xi, UNDEF);
                }
                let (e1, f1) = (self.rep(e), self.rep(f));
                let g = self.get(e1, x);
                if g != UNDEF {
                    self.merge(f1, g);
                } else {
                    let h = self.get(f1, xi);
                    if h != UNDEF {
                        self.merge(e1, h);
                    } else {
                        self.set(e1, x, f1);
                        self.set(f1, xi, e1);
                    }
                }
            }
        }
    }

    /// Scans `w` from `c`, defining cosets as needed to complete the scan.
    fn scan_and_fill(&mut self, c: usize, w: &[usize]) -> std::result::Result<(), Full> {
        if w.is_empty() {
            return Ok(());
        }
        let mut f = c;
        let mut b = c;
        let mut i = 0isize;
        let mut j = w.len() as isize - 1;
        loop {
            while i <= j && self.get(f, w[i as usize]) != UNDEF {
                f = self.get(f, w[i as usize]);
                i += 1;
            }
            if i > j {
                if f != c {
                    self.coincidence(f, c);
                }
                return Ok(());
            }
            while j >= i && self.get(b, self.inv[w[j as usize]]) != UNDEF {
                b = self.get(b, self.inv[w[j as usize]]);
                j -= 1;
            }
            if j < i {
                self.coincidence(f, b);
                return Ok(());
            }
            let x = w[i as usize];
            if i == j {
                self.set(f, x, b);
                self.set(b, self.inv[x], f);
                return Ok(());
            }
            self.define(f, x)?;
        }
    }
}

/// Enumerates the cosets of the subgroup generated by `subgroup` in the
/// group presented by `p`.
pub fn enumerate_cosets(
    p: &Presentation,
    subgroup: &[Word],
    capacity: usize,
) -> Result<Enumeration> {
    if capacity == 0 {
        return Err(Error::InvalidArgument("capacity must be at least 1".into()));
    }
    for w in p.relators.iter().chain(subgroup) {
        w.validate(p.generator_count)?;
    }
    let involutive: Vec<bool> = (1..=p.generator_count)
        .map(|g| {
            let g = g as i32;
            p.relators
                .iter()
                .any(|r| r.letters() == [g, g] || r.letters() == [-g, -g])
        })
        .collect();
    let mut columns = Vec::new();
    let mut col_of = vec![(0usize, 0usize); p.generator_count + 1];
    for g in 1..=p.generator_count {
        let k = columns.len();
        columns.push(g as i32);
        if involutive[g - 1] {
            col_of[g] = (k, k);
        } else {
            columns.push(-(g as i32));
            col_of[g] = (k, k + 1);
        }
    }
    let cols = columns.len();
    let mut inv = vec![0; cols];
    for &(a, b) in &col_of[1..] {
        inv[a] = b;
        inv[b] = a;
    }
    let to_cols = |w: &Word| -> Vec<usize> {
        w.letters()
            .iter()
            .map(|&l| {
                let (a, b) = col_of[l.unsigned_abs() as usize];
                if l > 0 {
                    a
                } else {
                    b
                }
            })
            .collect()
    };
    let relators: Vec<Vec<usize>> = p.relators.iter().map(to_cols).collect();
    let subgroup_cols: Vec<Vec<usize>> = subgroup.iter().map(to_cols).collect();

    let mut en = Enumerator {
        cols,
        inv,
        table: Vec::new(),
        parent: Vec::new(),
        capacity,
        queue: Vec::new(),
    };
    let full = Enumeration::CapacityExceeded { capacity };
    if en.new_coset().is_err() {
        return Ok(full);
    }
    for w in &subgroup_cols {
        if en.scan_and_fill(0, w).is_err() {
            return Ok(full);
        }
    }
    let mut c = 0;
    while c < en.count() {
        for r in &relators {
            if !en.alive(c) {
                break;
            }
            if en.scan_and_fill(c, r).is_err() {
                return Ok(full);
            }
        }
        if en.alive(c) {
            for x in 0..cols {
                if en.get(c, x) == UNDEF && en.define(c, x).is_err() {
                    return Ok(full);
                }
            }
        }
        c += 1;
    }
    let table = standardize(&mut en, columns);
    verify_table(&table, &p.relators, subgroup)?;
    Ok(Enumeration::Complete { table })
}

/// Renumbers live cosets in breadth-first order from coset 0.
fn standardize(en: &mut Enumerator, columns: Vec<i32>) -> CosetTable {
    let mut number = vec![UNDEF; en.count()];
    let mut order = Vec::new();
    let mut queue = VecDeque::from([0usize]);
    number[0] = 0;
    order.push(0);
    while let Some(c) = queue.pop_front() {
        for x in 0..en.cols {
            let d = en.rep(en.get(c, x));
            if number[d] == UNDEF {
                number[d] = order.len();
                order.push(d);
                queue.push_back(d);
            }
        }
    }
    let rows = order
        .iter()
        .map(|&c| (0..en.cols).map(|x| number[en.rep(en.get(c, x))]).collect())
        .collect();
    CosetTable {
        columns,
        rows,
        defined: en.count(),
    }
}

/// Post-hoc check: every relator fixes every coset and every subgroup
/// generator fixes coset 0.
fn verify_table(t: &CosetTable, relators: &[Word], subgroup: &[Word]) -> Result<()> {
    for c in 0..t.index() {
        for r in relators {
            if t.trace(c, r) != c {
                return Err(Error::Inconsistent(format!(
                    "coset table violates relator {r} at coset {c}"
                )));
            }
        }
    }
    for w in subgroup {
        if t.trace(0, w) != 0 {
            return Err(Error::Inconsistent(format!(
                "subgroup generator {w} moves the base coset"
            )));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::DualGraph;
    use crate::fixtures::bundled;
    use crate::presentation::{generate, Variant};

    fn coxeter_a(n: usize) -> Presentation {
        let mut rels = Vec::new();
        for i in 1..=n {
            rels.push(Word::from_generators(&[i, i]));
            for j in (i + 1)..=n {
                if j == i + 1 {
                    rels.push(Word::from_generators(&[i, j, i, j, i, j]));
                } else {
                    rels.push(Word::from_generators(&[i, j, i, j]));
                }
            }
        }
        Presentation::from_relators(n, rels).unwrap()
    }

    fn run(p: &Presentation) -> Option<usize> {
        enumerate_cosets(p, &[], DEFAULT_CAPACITY).unwrap().index()
    }

    #[test]
    fn s4_from_bundled() {
        let p = Presentation::from_json(bundled("s4_remark.json").unwrap()).unwrap();
        assert_eq!(run(&p), Some(24));
    }

    #[test]
    fn type_a_orders() {
        assert_eq!(run(&coxeter_a(3)), Some(24));
        assert_eq!(run(&coxeter_a(4)), Some(120));
        assert_eq!(run(&coxeter_a(5)), Some(720));
    }

    #[test]
    fn hexagon_quotient_is_720() {
        let g = DualGraph::cycle(6).unwrap();
        let p = generate(&g, &[vec![1, 2, 3, 4, 5, 6]], Variant::Quotient).unwrap();
        assert_eq!(run(&p), Some(720));
    }

    #[test]
    fn affine_exceeds_capacity() {
        let g = DualGraph::cycle(6).unwrap();
        let p = generate(&g, &[], Variant::Plain).unwrap();
        let r = enumerate_cosets(&p, &[], 100_000).unwrap();
        assert_eq!(r, Enumeration::CapacityExceeded { capacity: 100_000 });
    }

    #[test]
    fn subgroup_index() {
        // ⟨1, 2⟩ ≅ S3 inside S4 has index 4
        let p = coxeter_a(3);
        let h = [Word::new(vec![1]), Word::new(vec![2])];
        assert_eq!(enumerate_cosets(&p, &h, 1000).unwrap().index(), Some(4));
        // the whole group
        let all = [Word::new(vec![1]), Word::new(vec![2]), Word::new(vec![3])];
        assert_eq!(enumerate_cosets(&p, &all, 1000).unwrap().index(), Some(1));
    }

    #[test]
    fn non_involutive_generators() {
        // cyclic group of order 5 and ⟨a, b | a³, b², (ab)²⟩ ≅ S3
        let c5 = Presentation::from_relators(1, vec![Word::new(vec![1; 5])]).unwrap();
        assert_eq!(run(&c5), Some(5));
        let s3 = Presentation::from_relators(
            2,
            vec![
                Word::new(vec![1, 1, 1]),
                Word::new(vec![2, 2]),
                Word::new(vec![1, 2, 1, 2]),
            ],
        )
        .unwrap();
        assert_eq!(run(&s3), Some(6));
        // ⟨a, b | a b a⁻¹ b⁻¹, a⁴, b³⟩ ≅ ℤ/12
        let z12 = Presentation::from_relators(
            2,
            vec![
                Word::new(vec![1, 2, -1, -2]),
                Word::new(vec![1; 4]),
                Word::new(vec![2; 3]),
            ],
        )
        .unwrap();
        assert_eq!(run(&z12), Some(12));
    }

    #[test]
    fn deterministic_tables() {
        let p = coxeter_a(4);
        assert_eq!(
            enumerate_cosets(&p, &[], 10_000).unwrap(),
            enumerate_cosets(&p, &[], 10_000).unwrap()
        );
    }

    #[test]
    fn tiny_capacity() {
        assert!(matches!(
            enumerate_cosets(&coxeter_a(3), &[], 3).unwrap(),
            Enumeration::CapacityExceeded { .. }
        ));
        assert!(enumerate_cosets(&coxeter_a(3), &[], 0).is_err());
    }
}
