//! Words and relators over involutive generator alphabets.
//!
//! Letters are signed generator indices (`-g` is the formal inverse of `g`).
//! Every presentation in this crate is involutive, so reduction routines
//! normalize letters to their absolute value before working.

use std::cmp::Reverse;
use std::collections::{BTreeMap, BTreeSet, BinaryHeap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(pub Vec<i32>);

impl Word {
    pub fn new(letters: Vec<i32>) -> Self {
        Word(letters)
    }

    pub fn from_generators(gens: &[usize]) -> Self {
        Word(gens.iter().map(|&g| g as i32).collect())
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[i32] {
        &self.0
    }

    /// Generator indices with the sign dropped.
    pub fn generators(&self) -> impl DoubleEndedIterator<Item = usize> + ExactSizeIterator + '_ {
        self.0.iter().map(|l| l.unsigned_abs() as usize)
    }

    pub fn validate(&self, alphabet: usize) -> Result<()> {
        for &l in &self.0 {
            if l == 0 || l.unsigned_abs() as usize > alphabet {
                return Err(Error::LetterOutOfRange {
                    letter: l,
                    alphabet,
                });
            }
        }
        Ok(())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Group inverse: reversed, signs flipped.
    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| -l).collect())
    }

    /// Inverse in an involutive alphabet: just the reversal.
    pub fn involutive_inverse(&self) -> Word {
        Word(self.generators().rev().map(|g| g as i32).collect())
    }

    pub fn rotate(&self, k: usize) -> Word {
        if self.0.is_empty() {
            return self.clone();
        }
        let mut v = self.0.clone();
        let k = k % v.len();
        v.rotate_left(k);
        Word(v)
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// `[g, h] = g⁻¹ h⁻¹ g h` in an involutive alphabet.
    pub fn involutive_commutator(g: &Word, h: &Word) -> Word {
        g.involutive_inverse()
            .concat(&h.involutive_inverse())
            .concat(g)
            .concat(h)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|l| l.to_string()).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

impl From<Vec<i32>> for Word {
    fn from(v: Vec<i32>) -> Self {
        Word(v)
    }
}

/// Unordered generator pairs, stored as `(min, max)`.
pub type PairSet = BTreeSet<(usize, usize)>;

pub fn pair(i: usize, j: usize) -> (usize, usize) {
    (i.min(j), i.max(j))
}

/// Free reduction in the free group: cancels `g g⁻¹` and `g⁻¹ g`.
pub fn free_reduce(letters: &[i32]) -> Vec<i32> {
    let mut out: Vec<i32> = Vec::with_capacity(letters.len());
    for &l in letters {
        if out.last() == Some(&-l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

/// Cancels every `u u` in a word over involutions.
pub fn free_reduce_involutive(w: &Word) -> Word {
    reduce_with_commutations(w, &PairSet::new())
}

/// Fixpoint of `u u → ε` and `u_i u_j u_i → u_j` for commuting `(i, j)`.
///
/// Stack based: the stack never contains a reducible pattern, so only the top
/// needs inspecting after each push or replacement.
pub fn reduce_with_commutations(w: &Word, comm: &PairSet) -> Word {
    let mut stack: Vec<usize> = Vec::with_capacity(w.len());
    for g in w.generators() {
        stack.push(g);
        loop {
            let n = stack.len();
            if n >= 2 && stack[n - 1] == stack[n - 2] {
                stack.truncate(n - 2);
                continue;
            }
            if n >= 3
                && stack[n - 1] == stack[n - 3]
                && comm.contains(&pair(stack[n - 1], stack[n - 2]))
            {
                let mid = stack[n - 2];
                stack.truncate(n - 3);
                stack.push(mid);
                continue;
            }
            break;
        }
    }
    Word::from_generators(&stack)
}

/// Reduces a word as a cyclic word: also across the wrap-around point.
pub fn cyclic_reduce(w: &Word, comm: &PairSet) -> Word {
    if comm.is_empty() {
        return Word::from_generators(&cyclic_reduce_squares(&w.generators().collect::<Vec<_>>()));
    }
    let mut cur = reduce_with_commutations(w, comm);
    'outer: loop {
        let n = cur.len();
        for k in 1..n.max(1) {
            let next = reduce_with_commutations(&cur.rotate(k), comm);
            if next.len() < n {
                cur = next;
                continue 'outer;
            }
        }
        return cur;
    }
}

/// Cyclic `u u → ε` alone: reduce linearly, then peel equal ends.
fn cyclic_reduce_squares(g: &[usize]) -> Vec<usize> {
    let mut stack: Vec<usize> = Vec::with_capacity(g.len());
    for &x in g {
        if stack.last() == Some(&x) {
            stack.pop();
        } else {
            stack.push(x);
        }
    }
    let (mut lo, mut hi) = (0, stack.len());
    while hi - lo >= 2 && stack[lo] == stack[hi - 1] {
        lo += 1;
        hi -= 1;
    }
    stack[lo..hi].to_vec()
}

/// Start of the lexicographically least rotation (two-pointer scan, linear).
fn least_rotation<T: Ord>(v: &[T]) -> usize {
    let n = v.len();
    let (mut i, mut j, mut k) = (0, 1, 0);
    while i < n && j < n && k < n {
        let (a, b) = (&v[(i + k) % n], &v[(j + k) % n]);
        if a == b {
            k += 1;
            continue;
        }
        if a > b {
            i += k + 1;
        } else {
            j += k + 1;
        }
        if i == j {
            j += 1;
        }
        k = 0;
    }
    i.min(j)
}

fn min_rotation<T: Ord + Clone>(v: &[T]) -> Vec<T> {
    if v.is_empty() {
        return Vec::new();
    }
    let mut r = v.to_vec();
    r.rotate_left(least_rotation(v));
    r
}

fn canonical_generators(g: &[usize]) -> Vec<usize> {
    let forward = min_rotation(g);
    let rev: Vec<usize> = g.iter().rev().copied().collect();
    forward.min(min_rotation(&rev))
}

/// Lexicographically least rotation of the word or of its reversal.
pub fn canonical_cyclic(w: &Word) -> Word {
    let forward = min_rotation(&w.0);
    let rev: Vec<i32> = w.0.iter().rev().copied().collect();
    let backward = min_rotation(&rev);
    Word(forward.min(backward))
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Relator {
    pub word: Word,
    pub canonical: Word,
}

impl Relator {
    pub fn new(w: &Word) -> Result<Self> {
        canonical_relator(w)
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }
}

/// Cyclically reduces `w` over involutions and picks the canonical
/// representative under rotation and reversal.
pub fn canonical_relator(w: &Word) -> Result<Relator> {
    let word = cyclic_reduce(w, &PairSet::new());
    if word.is_empty() {
        return Err(Error::TrivialRelator);
    }
    let canonical = canonical_cyclic(&word);
    Ok(Relator { word, canonical })
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CleanReport {
    pub squares: BTreeSet<usize>,
    pub commutations: PairSet,
    pub braids: PairSet,
    pub misc: Vec<Relator>,
    pub passes: usize,
}

impl CleanReport {
    /// Relators equivalent to the report, in a fixed order.
    pub fn to_words(&self) -> Vec<Word> {
        let mut out = Vec::new();
        out.extend(self.squares.iter().map(|&g| Word::from_generators(&[g, g])));
        out.extend(
            self.commutations
                .iter()
                .map(|&(i, j)| Word::from_generators(&[i, j, i, j])),
        );
        out.extend(
            self.braids
                .iter()
                .map(|&(i, j)| Word::from_generators(&[i, j, i, j, i, j])),
        );
        out.extend(self.misc.iter().map(|r| r.word.clone()));
        out
    }
}

enum Shape {
    Trivial,
    Commutation(usize, usize),
    Braid(usize, usize),
    Other,
}

fn shape(canonical: &Word) -> Shape {
    let g: Vec<usize> = canonical.generators().collect();
    match g.len() {
        0 => Shape::Trivial,
        4 if g[0] != g[1] && g[0] == g[2] && g[1] == g[3] => Shape::Commutation(g[0], g[1]),
        6 if g[0] != g[1] && g[0] == g[2] && g[0] == g[4] && g[1] == g[3] && g[1] == g[5] => {
            Shape::Braid(g[0], g[1])
        }
        _ => Shape::Other,
    }
}

/// Fixpoint cleaning of a relator list: squares are removed, `u_i u_j u_i`
/// collapses to `u_j` for commuting pairs, commutations found along the way
/// are fed back, and what is left is classified and deduplicated.
pub fn clean(relators: &[Word]) -> CleanReport {
    let mut squares = BTreeSet::new();
    for w in relators {
        let g: Vec<usize> = w.generators().collect();
        if g.len() == 2 && g[0] == g[1] {
            squares.insert(g[0]);
        }
    }

    // Relators that already are commutations seed the rewriting set.
    let mut comm = PairSet::new();
    for w in relators {
        if let Shape::Commutation(i, j) =
            shape(&canonical_cyclic(&cyclic_reduce(w, &PairSet::new())))
        {
            comm.insert(pair(i, j));
        }
    }

    let mut passes = 0;
    loop {
        passes += 1;
        let mut found_comm = comm.clone();
        let mut braids = PairSet::new();
        let mut misc: BTreeMap<Word, (Word, Word)> = BTreeMap::new();
        for w in relators {
            let reduced = cyclic_reduce(w, &comm);
            let canonical = canonical_cyclic(&reduced);
            match shape(&canonical) {
                Shape::Trivial => {}
                Shape::Commutation(i, j) => {
                    found_comm.insert(pair(i, j));
                }
                Shape::Braid(i, j) => {
                    braids.insert(pair(i, j));
                }
                Shape::Other => {
                    let original = Word::from_generators(&w.generators().collect::<Vec<_>>());
                    misc.entry(canonical)
                        .and_modify(|(orig, red)| {
                            if original < *orig {
                                *orig = original.clone();
                                *red = reduced.clone();
                            }
                        })
                        .or_insert((original, reduced));
                }
            }
        }
        if found_comm == comm {
            let misc = misc
                .into_iter()
                .map(|(canonical, (_, word))| Relator { word, canonical })
                .collect();
            return CleanReport {
                squares,
                commutations: comm,
                braids,
                misc,
                passes,
            };
        }
        comm = found_comm;
    }
}

/// One step of a derivation: the cyclic word reached and the index of the
/// known relator used to get there (`None` for the starting word).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerivationStep {
    pub word: Word,
    pub via: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Derivation {
    /// The target is trivial; `steps` walks from the target to the empty word.
    Found { steps: Vec<DerivationStep> },
    /// Search space exhausted within the bounds. Says nothing about independence.
    NotFound { explored: usize },
}

impl Derivation {
    pub fn is_found(&self) -> bool {
        matches!(self, Derivation::Found { .. })
    }

    /// Number of relator applications in the certificate.
    pub fn step_count(&self) -> Option<usize> {
        match self {
            Derivation::Found { steps } => Some(steps.len().saturating_sub(1)),
            Derivation::NotFound { .. } => None,
        }
    }
}

pub const DEFAULT_DERIVE_BUDGET: usize = 400_000;

pub fn derive_bounded(known: &[Word], target: &Word, max_len: usize) -> Result<Derivation> {
    derive_bounded_with_budget(known, target, max_len, DEFAULT_DERIVE_BUDGET)
}

/// Best-first search (shortest cyclic word first) for a proof that `target`
/// is trivial modulo `known` and the generator squares.
///
/// States are canonical cyclic words. A move picks a rotation of a known
/// relator `s t`, finds `s` at the front of some rotation of the current
/// word, and replaces it by `t⁻¹`. Words longer than `max_len` are pruned;
/// at most `budget` states are expanded.
pub fn derive_bounded_with_budget(
    known: &[Word],
    target: &Word,
    max_len: usize,
    budget: usize,
) -> Result<Derivation> {
    if target.is_empty() {
        return Err(Error::TrivialRelator);
    }
    if max_len < target.len() {
        return Err(Error::BoundTooSmall {
            bound: max_len,
            len: target.len(),
        });
    }
    let none = PairSet::new();
    let start = canonical_cyclic(&cyclic_reduce(target, &none));
    if start.is_empty() {
        return Ok(Derivation::Found {
            steps: vec![DerivationStep {
                word: start,
                via: None,
            }],
        });
    }

    // Every rotation of every known relator and of its reversal, indexed by
    // first letter.
    let mut forms: HashMap<usize, Vec<(Vec<usize>, usize)>> = HashMap::new();
    let mut known_canonical = BTreeSet::new();
    for (idx, w) in known.iter().enumerate() {
        let red = cyclic_reduce(w, &none);
        if red.is_empty() {
            continue;
        }
        known_canonical.insert(canonical_cyclic(&red));
        let g: Vec<usize> = red.generators().collect();
        let mut seen = BTreeSet::new();
        for base in [g.clone(), g.iter().rev().copied().collect()] {
            for k in 0..base.len() {
                let mut r = base.clone();
                r.rotate_left(k);
                if seen.insert(r.clone()) {
                    forms.entry(r[0]).or_default().push((r, idx));
                }
            }
        }
    }
    if known_canonical.contains(&start) {
        return Ok(Derivation::Found {
            steps: vec![DerivationStep {
                word: start,
                via: None,
            }],
        });
    }

    // State ids index `states`; `parent[id]` is the predecessor and relator used.
    let start_g: Vec<usize> = start.generators().collect();
    let mut states: Vec<Vec<usize>> = vec![start_g.clone()];
    let mut parent: Vec<Option<(usize, usize)>> = vec![None];
    let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
    index.insert(start_g, 0);
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((start.len(), 0usize)));
    let mut explored = 0usize;
    let mut buf: Vec<usize> = Vec::with_capacity(2 * max_len + 2);

    while let Some(Reverse((_, cur))) = heap.pop() {
        explored += 1;
        if explored > budget {
            break;
        }
        let g = states[cur].clone();
        let n = g.len();
        for rot in 0..n {
            let Some(cands) = forms.get(&g[rot]) else {
                continue;
            };
            for (form, idx) in cands {
                let lcp = (0..form.len().min(n))
                    .take_while(|&i| form[i] == g[(rot + i) % n])
                    .count();
                for k in 1..=lcp {
                    // rotated = s · rest with s = form[..k]; s = (form[k..])⁻¹.
                    if form.len() - k + n - k > max_len + 2 {
                        continue;
                    }
                    buf.clear();
                    buf.extend(form[k..].iter().rev());
                    buf.extend((k..n).map(|i| g[(rot + i) % n]));
                    let next = canonical_generators(&cyclic_reduce_squares(&buf));
                    if next.len() > max_len || index.contains_key(&next) {
                        continue;
                    }
                    let id = states.len();
                    parent.push(Some((cur, *idx)));
                    index.insert(next.clone(), id);
                    let len = next.len();
                    states.push(next);
                    if len == 0 {
                        return Ok(Derivation::Found {
                            steps: unwind(&states, &parent, id),
                        });
                    }
                    heap.push(Reverse((len, id)));
                }
            }
        }
    }
    Ok(Derivation::NotFound { explored })
}

fn unwind(
    states: &[Vec<usize>],
    parent: &[Option<(usize, usize)>],
    end: usize,
) -> Vec<DerivationStep> {
    let mut steps = Vec::new();
    let mut cur = end;
    loop {
        let word = Word::from_generators(&states[cur]);
        match parent[cur] {
            Some((prev, idx)) => {
                steps.push(DerivationStep {
                    word,
                    via: Some(idx),
                });
                cur = prev;
            }
            None => {
                steps.push(DerivationStep { word, via: None });
                break;
            }
        }
    }
    steps.reverse();
    steps
}
