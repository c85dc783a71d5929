//! Coxeter-type presentations read off a dual graph, plus the fixture data
//! for the 3×3 instance: the miscellaneous relations and the table of pairs
//! whose order relation is not given.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::complex::{DegenerationComplex, DualGraph, HexagonLink, Role};
use crate::error::{Error, Result};
use crate::words::{canonical_cyclic, canonical_relator, pair, PairSet, Relator, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    /// Squares, commutations and braids.
    Plain,
    /// Plain plus the fork relators `[u, wvw]` at every trivalent vertex.
    Fork,
    /// Fork plus one cyclic relator per hexagon.
    Quotient,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RelatorKind {
    Square,
    Commutation,
    Braid,
    Fork,
    Cycle,
    Other,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelatorCounts {
    pub squares: usize,
    pub commutations: usize,
    pub braids: usize,
    pub forks: usize,
    pub cycles: usize,
    pub other: usize,
}

impl RelatorCounts {
    pub fn total(&self) -> usize {
        self.squares + self.commutations + self.braids + self.forks + self.cycles + self.other
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub generator_count: usize,
    pub relators: Vec<Word>,
    pub kinds: Vec<RelatorKind>,
    /// `None` for presentations read from a file.
    pub variant: Option<Variant>,
}

#[derive(Serialize, Deserialize)]
struct PresentationFile {
    generators: usize,
    relators: Vec<Word>,
}

impl Presentation {
    /// Wraps raw relators, guessing each kind from its shape.
    pub fn from_relators(generator_count: usize, relators: Vec<Word>) -> Result<Self> {
        for r in &relators {
            r.validate(generator_count)?;
        }
        let kinds = relators.iter().map(shape_kind).collect();
        Ok(Presentation {
            generator_count,
            relators,
            kinds,
            variant: None,
        })
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let f: PresentationFile = serde_json::from_str(s)?;
        Self::from_relators(f.generators, f.relators)
    }

    pub fn to_json(&self) -> String {
        let f = PresentationFile {
            generators: self.generator_count,
            relators: self.relators.clone(),
        };
        serde_json::to_string(&f).expect("presentation serializes")
    }

    pub fn counts(&self) -> RelatorCounts {
        let mut c = RelatorCounts::default();
        for k in &self.kinds {
            match k {
                RelatorKind::Square => c.squares += 1,
                RelatorKind::Commutation => c.commutations += 1,
                RelatorKind::Braid => c.braids += 1,
                RelatorKind::Fork => c.forks += 1,
                RelatorKind::Cycle => c.cycles += 1,
                RelatorKind::Other => c.other += 1,
            }
        }
        c
    }

    pub fn of_kind(&self, kind: RelatorKind) -> impl Iterator<Item = &Word> {
        self.relators
            .iter()
            .zip(&self.kinds)
            .filter(move |(_, k)| **k == kind)
            .map(|(w, _)| w)
    }

    /// Pairs carrying a commutation relator.
    pub fn commuting_pairs(&self) -> PairSet {
        self.of_kind(RelatorKind::Commutation)
            .map(|w| pair(w.0[0] as usize, w.0[1] as usize))
            .collect()
    }

    /// Pairs carrying a braid relator.
    pub fn braid_pairs(&self) -> PairSet {
        self.of_kind(RelatorKind::Braid)
            .map(|w| pair(w.0[0] as usize, w.0[1] as usize))
            .collect()
    }

    /// Canonical forms of all relators, for containment checks.
    pub fn canonical_set(&self) -> BTreeSet<Word> {
        self.relators.iter().map(canonical_cyclic).collect()
    }
}

fn shape_kind(w: &Word) -> RelatorKind {
    let g: Vec<usize> = w.generators().collect();
    let alternating = |period: usize| {
        g.len() == 2 * period && g[0] != g[1] && g.iter().enumerate().all(|(i, &x)| x == g[i % 2])
    };
    if g.len() == 2 && g[0] == g[1] {
        RelatorKind::Square
    } else if alternating(2) {
        RelatorKind::Commutation
    } else if alternating(3) {
        RelatorKind::Braid
    } else {
        RelatorKind::Other
    }
}

/// The edge cycle around each hexagon, in the link's cyclic order.
pub fn hexagon_cycles(links: &[HexagonLink]) -> Vec<Vec<usize>> {
    links.iter().map(|l| l.cycle.to_vec()).collect()
}

/// Builds the presentation of the requested variant. `cycles` is used only
/// by the quotient variant; each entry is an ordered edge cycle of `g`.
pub fn generate(g: &DualGraph, cycles: &[Vec<usize>], variant: Variant) -> Result<Presentation> {
    let e = g.edge_count();
    let mut relators = Vec::new();
    let mut kinds = Vec::new();
    let mut push = |w: Vec<usize>, k: RelatorKind| {
        relators.push(Word::from_generators(&w));
        kinds.push(k);
    };
    for u in 1..=e {
        push(vec![u, u], RelatorKind::Square);
    }
    let mut braids = Vec::new();
    for u in 1..=e {
        for v in (u + 1)..=e {
            if g.adjacent(u, v) {
                braids.push((u, v));
            } else {
                push(vec![u, v, u, v], RelatorKind::Commutation);
            }
        }
    }
    for (u, v) in braids {
        push(vec![u, v, u, v, u, v], RelatorKind::Braid);
    }
    if matches!(variant, Variant::Fork | Variant::Quotient) {
        for v in 1..=g.vertex_count {
            let edges = &g.adjacency[v - 1];
            match edges.len() {
                0..=2 => {}
                3 => {
                    for i in 0..3 {
                        let u = edges[i];
                        let rest: Vec<usize> = edges.iter().copied().filter(|&x| x != u).collect();
                        let (a, b) = (rest[0], rest[1]);
                        // [u, b a b] with a < b
                        push(vec![u, b, a, b, u, b, a, b], RelatorKind::Fork);
                    }
                }
                d => return Err(Error::NotCubic(v, d)),
            }
        }
    }
    if variant == Variant::Quotient {
        for c in cycles {
            for &x in c {
                g.edge(x)?;
            }
            let r = cycle_relator(c)?;
            push(r.word.generators().collect(), RelatorKind::Cycle);
        }
    }
    Ok(Presentation {
        generator_count: e,
        relators,
        kinds,
        variant: Some(variant),
    })
}

/// `u₁ ⋯ u_{m−1} = u₂ ⋯ u_m` as the relator `u₁ ⋯ u_m u_{m−1} ⋯ u₂`.
pub fn cycle_relator(cycle: &[usize]) -> Result<Relator> {
    let m = cycle.len();
    if m < 3 {
        return Err(Error::CycleTooShort(m));
    }
    let mut w: Vec<usize> = cycle.to_vec();
    w.extend(cycle[1..m - 1].iter().rev());
    canonical_relator(&Word::from_generators(&w))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxRelation {
    pub label: String,
    pub word: Word,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxFixture {
    pub generators: usize,
    pub relations: Vec<AxRelation>,
}

impl AxFixture {
    pub fn from_json(s: &str) -> Result<Self> {
        let f: AxFixture =
            serde_json::from_str(s).map_err(|e| Error::CorruptFixture(e.to_string()))?;
        for r in &f.relations {
            r.word
                .validate(f.generators)
                .map_err(|e| Error::CorruptFixture(format!("{}: {e}", r.label)))?;
        }
        Ok(f)
    }

    pub fn get(&self, label: &str) -> Option<&Word> {
        self.relations
            .iter()
            .find(|r| r.label == label)
            .map(|r| &r.word)
    }

    pub fn words(&self) -> Vec<Word> {
        self.relations.iter().map(|r| r.word.clone()).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NonRelTable {
    pub generators: usize,
    pub pairs: Vec<(usize, usize)>,
}

impl NonRelTable {
    pub fn from_json(s: &str) -> Result<Self> {
        let t: NonRelTable =
            serde_json::from_str(s).map_err(|e| Error::CorruptFixture(e.to_string()))?;
        let set: PairSet = t.pairs.iter().map(|&(i, j)| pair(i, j)).collect();
        if set.len() != t.pairs.len() {
            return Err(Error::CorruptFixture("duplicate pair in table".into()));
        }
        if t.pairs
            .iter()
            .any(|&(i, j)| i == j || i == 0 || j == 0 || i > t.generators || j > t.generators)
        {
            return Err(Error::CorruptFixture(
                "pair outside the generator range".into(),
            ));
        }
        Ok(t)
    }

    pub fn pair_set(&self) -> PairSet {
        self.pairs.iter().map(|&(i, j)| pair(i, j)).collect()
    }
}

/// The six role pairs that can lack an order relation, in table order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RolePair {
    Ab,
    De,
    Bd,
    Ea,
    Ad,
    Be,
}

impl RolePair {
    pub const ALL: [RolePair; 6] = [
        RolePair::Ab,
        RolePair::De,
        RolePair::Bd,
        RolePair::Ea,
        RolePair::Ad,
        RolePair::Be,
    ];

    pub fn from_roles(x: Role, y: Role) -> Option<RolePair> {
        use Role::*;
        let (x, y) = (x.min(y), x.max(y));
        Some(match (x, y) {
            (A, B) => RolePair::Ab,
            (D, E) => RolePair::De,
            (B, D) => RolePair::Bd,
            (A, E) => RolePair::Ea,
            (A, D) => RolePair::Ad,
            (B, E) => RolePair::Be,
            _ => return None,
        })
    }

    pub fn name(self) -> &'static str {
        match self {
            RolePair::Ab => "ab",
            RolePair::De => "de",
            RolePair::Bd => "bd",
            RolePair::Ea => "ea",
            RolePair::Ad => "ad",
            RolePair::Be => "be",
        }
    }

    /// Whether the two roles are consecutive around the hexagon.
    pub fn is_adjacent(self) -> bool {
        matches!(self, RolePair::Ab | RolePair::De)
    }
}

/// Missing role pairs per point, keyed by point id.
pub type RoleTable = BTreeMap<usize, BTreeSet<RolePair>>;

/// Expected missing pairs for the 3×3 fixture. Row `r` is point `r + 1`,
/// columns follow [`RolePair::ALL`].
pub const EXPECTED_ROLE_TABLE: [[bool; 6]; 9] = [
    [false, true, true, true, true, true],
    [true, true, true, true, true, true],
    [false, true, true, true, true, false],
    [false, false, true, true, true, true],
    [true, true, true, true, true, true],
    [false, false, true, true, true, true],
    [true, false, true, true, true, false],
    [true, true, true, true, true, false],
    [true, false, true, true, true, true],
];

pub fn expected_role_table() -> RoleTable {
    EXPECTED_ROLE_TABLE
        .iter()
        .enumerate()
        .map(|(r, row)| {
            let set = RolePair::ALL
                .iter()
                .zip(row)
                .filter(|(_, &m)| m)
                .map(|(&p, _)| p)
                .collect();
            (r + 1, set)
        })
        .collect()
}

/// Places every table pair at its shared point and names it by roles.
pub fn classify_missing(
    table: &NonRelTable,
    x0: &DegenerationComplex,
    links: &[HexagonLink],
) -> Result<RoleTable> {
    let mut out: RoleTable = x0.points.iter().map(|&p| (p, BTreeSet::new())).collect();
    for &(i, j) in &table.pairs {
        let shared = x0.common_points(i, j);
        let [p] = shared[..] else {
            return Err(Error::Fixture(format!(
                "pair ({i}, {j}) shares {} points",
                shared.len()
            )));
        };
        let link = &links[p - 1];
        let (Some(ri), Some(rj)) = (link.role_of(i), link.role_of(j)) else {
            return Err(Error::Fixture(format!(
                "pair ({i}, {j}) is not around V{p}"
            )));
        };
        let rp = RolePair::from_roles(ri, rj).ok_or_else(|| {
            Error::Fixture(format!(
                "pair ({i}, {j}) has roles {}{} at V{p}",
                ri.letter(),
                rj.letter()
            ))
        })?;
        if !out.get_mut(&p).expect("point exists").insert(rp) {
            return Err(Error::Fixture(format!(
                "role pair {} at V{p} listed twice",
                rp.name()
            )));
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverageReport {
    pub total_pairs: usize,
    pub disjoint: usize,
    pub adjacent: usize,
    pub missing: usize,
    pub missing_disjoint: usize,
    pub missing_adjacent: usize,
    pub disjoint_given: usize,
    pub adjacent_given: usize,
    /// Every pair is exactly one of disjoint/adjacent and every table pair is one of them.
    pub consistent: bool,
}

pub fn coverage_counts(p: &Presentation, table: &NonRelTable) -> CoverageReport {
    let n = p.generator_count;
    let comm = p.commuting_pairs();
    let braid = p.braid_pairs();
    let missing = table.pair_set();
    let missing_disjoint = missing.intersection(&comm).count();
    let missing_adjacent = missing.intersection(&braid).count();
    let total_pairs = n * n.saturating_sub(1) / 2;
    let consistent = comm.is_disjoint(&braid)
        && comm.len() + braid.len() == total_pairs
        && missing_disjoint + missing_adjacent == missing.len();
    CoverageReport {
        total_pairs,
        disjoint: comm.len(),
        adjacent: braid.len(),
        missing: missing.len(),
        missing_disjoint,
        missing_adjacent,
        disjoint_given: comm.len() - missing_disjoint,
        adjacent_given: braid.len() - missing_adjacent,
        consistent,
    }
}

/// Relators of the presentation that are actually given for the 3×3
/// instance: everything in `p` except the order relations of table pairs.
pub fn given_relators(p: &Presentation, table: &NonRelTable) -> Vec<Word> {
    let missing = table.pair_set();
    p.relators
        .iter()
        .zip(&p.kinds)
        .filter(|(w, k)| {
            !(matches!(k, RelatorKind::Commutation | RelatorKind::Braid)
                && missing.contains(&pair(w.0[0] as usize, w.0[1] as usize)))
        })
        .map(|(w, _)| w.clone())
        .collect()
}
