//! The degenerated surface as an m×n torus triangulation, its dual graph,
//! hexagon links with role labels, and spanning trees.
//!
//! Geometry conventions (rows grow downward, columns to the right):
//! every grid square is cut by the diagonal from its top-right to its
//! bottom-left corner. A line's `points` are oriented: horizontals run
//! west → east, verticals north → south, diagonals north-east → south-west.
//! Around a point `V` the six lines get roles
//!
//! ```text
//!        b   c
//!        |  /
//!   a -- V -- d
//!      / |
//!     f  e
//! ```
//!
//! and `a b c d e f` is also their cyclic order around `V`.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fixtures::Fixtures;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LineKind {
    Horizontal,
    Vertical,
    Diagonal,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Line {
    pub id: usize,
    pub points: [usize; 2],
    pub planes: [usize; 2],
    pub kind: LineKind,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Plane {
    pub id: usize,
    pub lines: [usize; 3],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegenerationComplex {
    pub rows: usize,
    pub cols: usize,
    pub points: Vec<usize>,
    pub lines: Vec<Line>,
    pub planes: Vec<Plane>,
}

impl DegenerationComplex {
    pub fn line(&self, id: usize) -> &Line {
        &self.lines[id - 1]
    }

    pub fn plane(&self, id: usize) -> &Plane {
        &self.planes[id - 1]
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.points.len() as i64 - self.lines.len() as i64 + self.planes.len() as i64
    }

    /// Points shared by two lines.
    pub fn common_points(&self, l1: usize, l2: usize) -> Vec<usize> {
        let a = self.line(l1).points;
        let b = self.line(l2).points;
        let mut out: Vec<usize> = a.iter().filter(|p| b.contains(p)).copied().collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let c: DegenerationComplex = serde_json::from_str(s)?;
        c.validate()?;
        Ok(c)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("complex serializes")
    }

    /// Checks counts, id ranges, incidence symmetry and the Euler characteristic.
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidComplex(msg));
        let (m, n) = (self.rows, self.cols);
        if m < 3 || n < 3 {
            return Err(Error::UnsupportedGrid { rows: m, cols: n });
        }
        let mn = m * n;
        if self.points.len() != mn || self.lines.len() != 3 * mn || self.planes.len() != 2 * mn {
            return bad(format!(
                "expected {} points, {} lines, {} planes; found {}, {}, {}",
                mn,
                3 * mn,
                2 * mn,
                self.points.len(),
                self.lines.len(),
                self.planes.len()
            ));
        }
        if self.points.iter().enumerate().any(|(i, &p)| p != i + 1) {
            return bad("points must be numbered 1..=mn in order".into());
        }
        for (i, l) in self.lines.iter().enumerate() {
            if l.id != i + 1 {
                return bad(format!("line at position {} has id {}", i + 1, l.id));
            }
            if l.points.iter().any(|&p| p == 0 || p > mn) || l.points[0] == l.points[1] {
                return bad(format!("line {} has bad endpoints {:?}", l.id, l.points));
            }
            if l.planes.iter().any(|&f| f == 0 || f > 2 * mn) || l.planes[0] == l.planes[1] {
                return bad(format!("line {} must border two distinct planes", l.id));
            }
        }
        for (i, f) in self.planes.iter().enumerate() {
            if f.id != i + 1 {
                return bad(format!("plane at position {} has id {}", i + 1, f.id));
            }
            let distinct: BTreeSet<usize> = f.lines.iter().copied().collect();
            if distinct.len() != 3 || f.lines.iter().any(|&l| l == 0 || l > 3 * mn) {
                return bad(format!(
                    "plane {} must have three distinct boundary lines",
                    f.id
                ));
            }
            for &l in &f.lines {
                if !self.line(l).planes.contains(&f.id) {
                    return bad(format!(
                        "plane {} lists line {} which does not border it",
                        f.id, l
                    ));
                }
            }
        }
        for l in &self.lines {
            for &f in &l.planes {
                if !self.plane(f).lines.contains(&l.id) {
                    return bad(format!(
                        "line {} borders plane {} which does not list it",
                        l.id, f
                    ));
                }
            }
        }
        // Each plane is a triangle: its three lines pairwise meet in its three corners.
        for f in &self.planes {
            let corners: BTreeSet<usize> =
                f.lines.iter().flat_map(|&l| self.line(l).points).collect();
            if corners.len() != 3 {
                return bad(format!("plane {} is not a triangle", f.id));
            }
        }
        if self.euler_characteristic() != 0 {
            return bad("Euler characteristic is not 0".into());
        }
        Ok(())
    }
}

/// The m×n grid with canonical numbering: points row-major; lines as all
/// horizontals, then verticals, then diagonals, each row-major; planes
/// row-major over squares, the lower triangle before the upper one.
pub fn build_torus_triangulation(rows: usize, cols: usize) -> Result<DegenerationComplex> {
    let (m, n) = (rows, cols);
    if m < 3 || n < 3 {
        return Err(Error::UnsupportedGrid { rows, cols });
    }
    let mn = m * n;
    let point = |r: usize, c: usize| (r % m) * n + (c % n) + 1;
    let horizontal = |r: usize, c: usize| (r % m) * n + (c % n) + 1;
    let vertical = |r: usize, c: usize| mn + (r % m) * n + (c % n) + 1;
    let diagonal = |r: usize, c: usize| 2 * mn + (r % m) * n + (c % n) + 1;
    let lower = |r: usize, c: usize| 2 * ((r % m) * n + (c % n)) + 1;
    let upper = |r: usize, c: usize| 2 * ((r % m) * n + (c % n)) + 2;

    let mut lines = Vec::with_capacity(3 * mn);
    for r in 0..m {
        for c in 0..n {
            // the horizontal (r, c) is the top of square (r, c) and the bottom of square (r-1, c)
            lines.push(Line {
                id: horizontal(r, c),
                points: [point(r, c), point(r, c + 1)],
                planes: sorted2(upper(r, c), lower(r + m - 1, c)),
                kind: LineKind::Horizontal,
            });
        }
    }
    for r in 0..m {
        for c in 0..n {
            lines.push(Line {
                id: vertical(r, c),
                points: [point(r, c), point(r + 1, c)],
                planes: sorted2(upper(r, c), lower(r, c + n - 1)),
                kind: LineKind::Vertical,
            });
        }
    }
    for r in 0..m {
        for c in 0..n {
            lines.push(Line {
                id: diagonal(r, c),
                points: [point(r, c + 1), point(r + 1, c)],
                planes: sorted2(lower(r, c), upper(r, c)),
                kind: LineKind::Diagonal,
            });
        }
    }
    let mut planes = Vec::with_capacity(2 * mn);
    for r in 0..m {
        for c in 0..n {
            planes.push(Plane {
                id: lower(r, c),
                lines: sorted3(horizontal(r + 1, c), vertical(r, c + 1), diagonal(r, c)),
            });
            planes.push(Plane {
                id: upper(r, c),
                lines: sorted3(horizontal(r, c), vertical(r, c), diagonal(r, c)),
            });
        }
    }
    let complex = DegenerationComplex {
        rows,
        cols,
        points: (1..=mn).collect(),
        lines,
        planes,
    };
    complex.validate()?;
    Ok(complex)
}

fn sorted2(a: usize, b: usize) -> [usize; 2] {
    [a.min(b), a.max(b)]
}

fn sorted3(a: usize, b: usize, c: usize) -> [usize; 3] {
    let mut v = [a, b, c];
    v.sort_unstable();
    v
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    pub id: usize,
    pub ends: (usize, usize),
}

/// Graph with edges numbered `1..=E` and vertices `1..=V`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualGraph {
    pub vertex_count: usize,
    pub edges: Vec<Edge>,
    /// `adjacency[v - 1]` lists the ids of the edges at `v`, ascending.
    pub adjacency: Vec<Vec<usize>>,
}

impl DualGraph {
    /// Builds a graph from endpoint pairs; edge `k` (1-based) is `ends[k - 1]`.
    pub fn from_edges(vertex_count: usize, ends: &[(usize, usize)]) -> Result<Self> {
        let mut adjacency = vec![Vec::new(); vertex_count];
        let mut edges = Vec::with_capacity(ends.len());
        for (i, &(a, b)) in ends.iter().enumerate() {
            if a == 0 || b == 0 || a > vertex_count || b > vertex_count || a == b {
                return Err(Error::InvalidComplex(format!(
                    "edge {} has bad ends ({a}, {b})",
                    i + 1
                )));
            }
            edges.push(Edge {
                id: i + 1,
                ends: (a, b),
            });
            adjacency[a - 1].push(i + 1);
            adjacency[b - 1].push(i + 1);
        }
        Ok(DualGraph {
            vertex_count,
            edges,
            adjacency,
        })
    }

    /// The cycle graph on `k` vertices; edge `i` joins `i` and `i + 1 (mod k)`.
    pub fn cycle(k: usize) -> Result<Self> {
        let ends: Vec<(usize, usize)> = (1..=k).map(|i| (i, i % k + 1)).collect();
        Self::from_edges(k, &ends)
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edge(&self, id: usize) -> Result<&Edge> {
        id.checked_sub(1)
            .and_then(|i| self.edges.get(i))
            .ok_or(Error::UnknownEdge(id))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v - 1].len()
    }

    pub fn is_regular(&self, d: usize) -> bool {
        self.adjacency.iter().all(|a| a.len() == d)
    }

    /// Whether two distinct edges share an endpoint.
    pub fn adjacent(&self, e: usize, f: usize) -> bool {
        let (a, b) = self.edges[e - 1].ends;
        let (c, d) = self.edges[f - 1].ends;
        a == c || a == d || b == c || b == d
    }

    pub fn other_end(&self, e: usize, v: usize) -> usize {
        let (a, b) = self.edges[e - 1].ends;
        if a == v {
            b
        } else {
            a
        }
    }

    pub fn is_connected(&self) -> bool {
        if self.vertex_count == 0 {
            return true;
        }
        let mut seen = vec![false; self.vertex_count + 1];
        let mut queue = VecDeque::from([1]);
        seen[1] = true;
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for &e in &self.adjacency[v - 1] {
                let w = self.other_end(e, v);
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == self.vertex_count
    }

    pub fn cycle_rank(&self) -> usize {
        (self.edges.len() + 1).saturating_sub(self.vertex_count)
    }
}

/// One vertex per plane, one edge per line; edge ids equal line ids.
pub fn dual_graph(x0: &DegenerationComplex) -> DualGraph {
    let ends: Vec<(usize, usize)> = x0
        .lines
        .iter()
        .map(|l| (l.planes[0], l.planes[1]))
        .collect();
    DualGraph::from_edges(x0.planes.len(), &ends).expect("validated complex has a valid dual graph")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Role {
    A,
    B,
    C,
    D,
    E,
    F,
}

impl Role {
    pub const ALL: [Role; 6] = [Role::A, Role::B, Role::C, Role::D, Role::E, Role::F];

    pub fn letter(self) -> char {
        match self {
            Role::A => 'a',
            Role::B => 'b',
            Role::C => 'c',
            Role::D => 'd',
            Role::E => 'e',
            Role::F => 'f',
        }
    }

    pub fn is_diagonal(self) -> bool {
        matches!(self, Role::C | Role::F)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HexagonLink {
    pub point: usize,
    /// Lines in the cyclic order a, b, c, d, e, f.
    pub cycle: [usize; 6],
    pub roles: BTreeMap<Role, usize>,
}

impl HexagonLink {
    pub fn role(&self, r: Role) -> usize {
        self.roles[&r]
    }

    pub fn role_of(&self, line: usize) -> Option<Role> {
        self.roles.iter().find(|(_, &l)| l == line).map(|(&r, _)| r)
    }
}

pub fn hexagon_links(x0: &DegenerationComplex) -> Result<Vec<HexagonLink>> {
    let mut out = Vec::with_capacity(x0.points.len());
    for &v in &x0.points {
        let find = |kind: LineKind, end: usize| -> Result<usize> {
            let hits: Vec<usize> = x0
                .lines
                .iter()
                .filter(|l| l.kind == kind && l.points[end] == v)
                .map(|l| l.id)
                .collect();
            match hits[..] {
                [id] => Ok(id),
                _ => Err(Error::InvalidComplex(format!(
                    "point {v}: expected one {kind:?} line ending there, found {hits:?}"
                ))),
            }
        };
        let a = find(LineKind::Horizontal, 1)?;
        let b = find(LineKind::Vertical, 1)?;
        let c = find(LineKind::Diagonal, 1)?;
        let d = find(LineKind::Horizontal, 0)?;
        let e = find(LineKind::Vertical, 0)?;
        let f = find(LineKind::Diagonal, 0)?;
        let cycle = [a, b, c, d, e, f];
        let roles = Role::ALL.into_iter().zip(cycle).collect();
        out.push(HexagonLink {
            point: v,
            cycle,
            roles,
        });
    }
    Ok(out)
}

/// An edge outside the spanning tree, oriented from `tail` to `head`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Chord {
    pub label: usize,
    pub line: usize,
    pub tail: usize,
    pub head: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpanningData {
    pub tree_edges: Vec<usize>,
    pub chords: Vec<Chord>,
}

impl SpanningData {
    pub fn chord_for_edge(&self, edge: usize) -> Option<&Chord> {
        self.chords.iter().find(|c| c.line == edge)
    }

    pub fn chord(&self, label: usize) -> Option<&Chord> {
        self.chords.iter().find(|c| c.label == label)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }

    /// Checks that the tree edges form a spanning tree of `g` and that the
    /// chords are exactly the remaining edges, oriented along their ends.
    pub fn validate(&self, g: &DualGraph) -> Result<()> {
        let bad = |m: String| Err(Error::CorruptFixture(m));
        if self.tree_edges.len() + 1 != g.vertex_count {
            return bad(format!(
                "{} tree edges for {} vertices",
                self.tree_edges.len(),
                g.vertex_count
            ));
        }
        let mut parent: Vec<usize> = (0..=g.vertex_count).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for &e in &self.tree_edges {
            let (a, b) = g.edge(e)?.ends;
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra == rb {
                return bad(format!("tree edge {e} closes a cycle"));
            }
            parent[ra] = rb;
        }
        let tree: BTreeSet<usize> = self.tree_edges.iter().copied().collect();
        let chords: BTreeSet<usize> = self.chords.iter().map(|c| c.line).collect();
        if chords.len() != self.chords.len()
            || !tree.is_disjoint(&chords)
            || tree.len() + chords.len() != g.edge_count()
        {
            return bad("chords and tree edges must partition the edge set".into());
        }
        let labels: BTreeSet<usize> = self.chords.iter().map(|c| c.label).collect();
        if labels != (1..=self.chords.len()).collect() {
            return bad("chord labels must be 1..=t".into());
        }
        for c in &self.chords {
            let (a, b) = g.edge(c.line)?.ends;
            if !((c.tail == a && c.head == b) || (c.tail == b && c.head == a)) {
                return bad(format!(
                    "chord {} is not oriented along edge {}",
                    c.label, c.line
                ));
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpanningMode {
    /// Breadth-first from vertex 1, edges in id order; chords labelled by
    /// ascending edge id and oriented from the lower to the higher vertex.
    Canonical,
    /// The tree and chord orientations shipped with the 3×3 fixture.
    PaperFixture,
}

pub fn spanning_data(g: &DualGraph, mode: SpanningMode) -> Result<SpanningData> {
    spanning_data_with(g, mode, &Fixtures::embedded())
}

pub fn spanning_data_with(
    g: &DualGraph,
    mode: SpanningMode,
    fixtures: &Fixtures,
) -> Result<SpanningData> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    match mode {
        SpanningMode::Canonical => Ok(canonical_spanning(g)),
        SpanningMode::PaperFixture => {
            let s = SpanningData::from_json(&fixtures.read("tt33_spanning.json")?)
                .map_err(|e| Error::CorruptFixture(e.to_string()))?;
            s.validate(g)?;
            Ok(s)
        }
    }
}

fn canonical_spanning(g: &DualGraph) -> SpanningData {
    let mut tree = Vec::new();
    let mut seen = vec![false; g.vertex_count + 1];
    if g.vertex_count > 0 {
        let mut queue = VecDeque::from([1]);
        seen[1] = true;
        while let Some(v) = queue.pop_front() {
            for &e in &g.adjacency[v - 1] {
                let w = g.other_end(e, v);
                if !seen[w] {
                    seen[w] = true;
                    tree.push(e);
                    queue.push_back(w);
                }
            }
        }
    }
    tree.sort_unstable();
    let in_tree: BTreeSet<usize> = tree.iter().copied().collect();
    let chords = g
        .edges
        .iter()
        .filter(|e| !in_tree.contains(&e.id))
        .enumerate()
        .map(|(i, e)| Chord {
            label: i + 1,
            line: e.id,
            tail: e.ends.0.min(e.ends.1),
            head: e.ends.0.max(e.ends.1),
        })
        .collect();
    SpanningData {
        tree_edges: tree,
        chords,
    }
}

/// The 3×3 complex with its published line, plane and point numbering,
/// checked against its consistency oracle.
pub fn load_paper_labeling() -> Result<DegenerationComplex> {
    load_paper_labeling_with(&Fixtures::embedded())
}

pub fn load_paper_labeling_with(fixtures: &Fixtures) -> Result<DegenerationComplex> {
    let x0 = DegenerationComplex::from_json(&fixtures.read("tt33.json")?)
        .map_err(|e| Error::CorruptFixture(e.to_string()))?;
    check_fixture_labeling(&x0, fixtures)?;
    Ok(x0)
}

/// Hexagon line sets that the fixture labeling must reproduce.
pub const HEXAGON_ANCHORS: [(usize, [usize; 6]); 4] = [
    (1, [1, 2, 4, 6, 13, 22]),
    (4, [4, 5, 8, 11, 15, 19]),
    (6, [9, 10, 11, 12, 16, 25]),
    (9, [22, 23, 24, 25, 26, 27]),
];

/// `(point, role, line)` anchors.
pub const ROLE_ANCHORS: [(usize, Role, usize); 3] =
    [(6, Role::A, 12), (6, Role::B, 25), (5, Role::D, 12)];

/// Fixture consistency oracle; every anchor must hold at once.
pub fn check_fixture_labeling(x0: &DegenerationComplex, fixtures: &Fixtures) -> Result<()> {
    let corrupt = |m: String| Err(Error::CorruptFixture(m));
    if (x0.rows, x0.cols) != (3, 3) {
        return corrupt(format!(
            "expected a 3x3 complex, got {}x{}",
            x0.rows, x0.cols
        ));
    }
    let links = hexagon_links(x0).map_err(|e| Error::CorruptFixture(e.to_string()))?;
    let ax = crate::presentation::AxFixture::from_json(&fixtures.read("ax_relations.json")?)?;
    let ax_sets: BTreeMap<&str, BTreeSet<usize>> = ax
        .relations
        .iter()
        .map(|r| (r.label.as_str(), r.word.generators().collect()))
        .collect();
    for ((point, expected), label) in HEXAGON_ANCHORS.iter().zip(["AX1", "AX3", "AX4", "AX2"]) {
        let got: BTreeSet<usize> = links[point - 1].cycle.iter().copied().collect();
        let want: BTreeSet<usize> = expected.iter().copied().collect();
        if got != want {
            return corrupt(format!("hexagon of V{point} is {got:?}, expected {want:?}"));
        }
        if ax_sets.get(label) != Some(&want) {
            return corrupt(format!(
                "{label} does not use exactly the lines around V{point}"
            ));
        }
    }
    for (point, role, line) in ROLE_ANCHORS {
        if links[point - 1].role(role) != line {
            return corrupt(format!(
                "role {} at V{point} should be line {line}",
                role.letter()
            ));
        }
    }
    let table = crate::presentation::NonRelTable::from_json(&fixtures.read("nonrel_pairs.json")?)?;
    for &(i, j) in &table.pairs {
        let shared = x0.common_points(i, j);
        let [p] = shared[..] else {
            return corrupt(format!(
                "pair ({i}, {j}) does not meet in exactly one point"
            ));
        };
        let link = &links[p - 1];
        for l in [i, j] {
            match link.role_of(l) {
                Some(r) if r.is_diagonal() => {
                    return corrupt(format!("pair ({i}, {j}) has the diagonal {l} at V{p}"));
                }
                Some(_) => {}
                None => return corrupt(format!("line {l} is not around V{p}")),
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_3x3_and_4x3() {
        let x = build_torus_triangulation(3, 3).unwrap();
        assert_eq!((x.points.len(), x.lines.len(), x.planes.len()), (9, 27, 18));
        let x = build_torus_triangulation(4, 3).unwrap();
        assert_eq!(
            (x.points.len(), x.lines.len(), x.planes.len()),
            (12, 36, 24)
        );
        assert_eq!(x.euler_characteristic(), 0);
    }

    #[test]
    fn small_grids_rejected() {
        assert_eq!(
            build_torus_triangulation(2, 3),
            Err(Error::UnsupportedGrid { rows: 2, cols: 3 })
        );
        assert!(build_torus_triangulation(3, 1).is_err());
    }

    #[test]
    fn brute_force_cell_count() {
        // count cells by walking every square independently of the builder
        for (m, n) in [(3, 3), (4, 3), (3, 5), (5, 4)] {
            let x = build_torus_triangulation(m, n).unwrap();
            let mut edges = BTreeSet::new();
            let mut triangles = BTreeSet::new();
            for r in 0..m {
                for c in 0..n {
                    let p = |dr: usize, dc: usize| ((r + dr) % m, (c + dc) % n);
                    let (tl, tr, bl, br) = (p(0, 0), p(0, 1), p(1, 0), p(1, 1));
                    for e in [(tl, tr), (tl, bl), (tr, bl)] {
                        edges.insert(if e.0 < e.1 { e } else { (e.1, e.0) });
                    }
                    let mut t1 = [tl, tr, bl];
                    let mut t2 = [tr, br, bl];
                    t1.sort();
                    t2.sort();
                    triangles.insert(t1);
                    triangles.insert(t2);
                }
            }
            assert_eq!(x.lines.len(), edges.len());
            assert_eq!(x.planes.len(), triangles.len());
        }
    }

    #[test]
    fn dual_graph_properties() {
        for (m, n) in [(3, 3), (3, 4), (4, 4), (5, 3)] {
            let x = build_torus_triangulation(m, n).unwrap();
            let g = dual_graph(&x);
            assert!(g.is_regular(3));
            assert!(g.is_connected());
            assert_eq!(g.edge_count() * 2, 3 * x.planes.len());
            assert_eq!(g.cycle_rank(), m * n + 1);
        }
    }

    #[test]
    fn hexagons_are_six_cycles() {
        for x in [
            build_torus_triangulation(3, 3).unwrap(),
            build_torus_triangulation(4, 5).unwrap(),
            load_paper_labeling().unwrap(),
        ] {
            let g = dual_graph(&x);
            for link in hexagon_links(&x).unwrap() {
                let c = link.cycle;
                for i in 0..6 {
                    for j in (i + 1)..6 {
                        let consecutive = j == i + 1 || (i == 0 && j == 5);
                        assert_eq!(
                            g.adjacent(c[i], c[j]),
                            consecutive,
                            "V{} lines {} {}",
                            link.point,
                            c[i],
                            c[j]
                        );
                    }
                }
                // c and f are the diagonals through the point
                for r in [Role::C, Role::F] {
                    let l = x.line(link.role(r));
                    assert_eq!(l.kind, LineKind::Diagonal);
                    assert!(l.points.contains(&link.point));
                }
            }
        }
    }

    #[test]
    fn fixture_labeling_anchors() {
        let x = load_paper_labeling().unwrap();
        let links = hexagon_links(&x).unwrap();
        assert_eq!(links[5].role(Role::A), 12);
        assert_eq!(links[5].role(Role::B), 25);
        assert_eq!(links[4].role(Role::D), 12);
        let v1: BTreeSet<usize> = links[0].cycle.iter().copied().collect();
        assert_eq!(v1, [1, 2, 4, 6, 13, 22].into_iter().collect());
        let v9: BTreeSet<usize> = links[8].cycle.iter().copied().collect();
        assert_eq!(v9, (22..=27).collect());
        let v4: BTreeSet<usize> = links[3].cycle.iter().copied().collect();
        assert_eq!(v4, [4, 5, 8, 11, 15, 19].into_iter().collect());
    }

    #[test]
    fn corrupt_fixture_is_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let mut x = load_paper_labeling().unwrap();
        // swap the roles of two lines around V6 by exchanging their ids' geometry
        x.lines[11].points = [x.lines[11].points[1], x.lines[11].points[0]];
        std::fs::write(dir.path().join("tt33.json"), x.to_json()).unwrap();
        let err = load_paper_labeling_with(&Fixtures::from_dir(dir.path())).unwrap_err();
        assert!(matches!(err, Error::CorruptFixture(_)), "{err:?}");
    }

    #[test]
    fn spanning_counts_and_determinism() {
        let x = load_paper_labeling().unwrap();
        let g = dual_graph(&x);
        for mode in [SpanningMode::Canonical, SpanningMode::PaperFixture] {
            let s = spanning_data(&g, mode).unwrap();
            assert_eq!(s.tree_edges.len(), 17);
            assert_eq!(s.chords.len(), 10);
            s.validate(&g).unwrap();
        }
        assert_eq!(
            spanning_data(&g, SpanningMode::Canonical).unwrap(),
            spanning_data(&g, SpanningMode::Canonical).unwrap()
        );
        let path = DualGraph::from_edges(4, &[(1, 2), (2, 3), (3, 4)]).unwrap();
        assert!(spanning_data(&path, SpanningMode::Canonical)
            .unwrap()
            .chords
            .is_empty());
        let split = DualGraph::from_edges(4, &[(1, 2), (3, 4)]).unwrap();
        assert_eq!(
            spanning_data(&split, SpanningMode::Canonical),
            Err(Error::Disconnected)
        );
    }

    #[test]
    fn json_round_trip() {
        let x = build_torus_triangulation(3, 4).unwrap();
        assert_eq!(DegenerationComplex::from_json(&x.to_json()).unwrap(), x);
    }
}
