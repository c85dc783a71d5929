//! Integer Smith normal form with checked arithmetic.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finitely generated abelian group `ℤ^rank ⊕ ⊕ ℤ/t`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbelianGroup {
    pub rank: usize,
    pub torsion: Vec<i64>,
}

impl AbelianGroup {
    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }
}

fn sub_mul(x: i64, q: i64, y: i64) -> Result<i64> {
    q.checked_mul(y)
        .and_then(|p| x.checked_sub(p))
        .ok_or(Error::Overflow)
}

/// Nonzero invariant factors `d_1 | d_2 | …` of an integer matrix.
pub fn smith_diagonal(matrix: &[Vec<i64>]) -> Result<Vec<i64>> {
    let rows = matrix.len();
    let cols = matrix.first().map_or(0, Vec::len);
    if matrix.iter().any(|r| r.len() != cols) {
        return Err(Error::InvalidArgument("ragged relation matrix".into()));
    }
    let mut m: Vec<Vec<i64>> = matrix.to_vec();
    let mut diag = Vec::new();
    for t in 0..rows.min(cols) {
        // smallest nonzero entry of the remaining block becomes the pivot
        let Some((pi, pj)) = smallest(&m, t) else {
            break;
        };
        m.swap(t, pi);
        for r in m.iter_mut() {
            r.swap(t, pj);
        }
        loop {
            let mut dirty = false;
            for i in (t + 1)..rows {
                if m[i][t] != 0 {
                    let q = m[i][t] / m[t][t];
                    for j in t..cols {
                        m[i][j] = sub_mul(m[i][j], q, m[t][j])?;
                    }
                    dirty |= m[i][t] != 0;
                }
            }
            for j in (t + 1)..cols {
                if m[t][j] != 0 {
                    let q = m[t][j] / m[t][t];
                    for row in m.iter_mut().skip(t) {
                        row[j] = sub_mul(row[j], q, row[t])?;
                    }
                    dirty |= m[t][j] != 0;
                }
            }
            if dirty {
                let (pi, pj) = smallest_in_cross(&m, t);
                m.swap(t, pi);
                for r in m.iter_mut() {
                    r.swap(t, pj);
                }
                continue;
            }
            // the pivot must divide the rest of the block
            let p = m[t][t];
            let bad = ((t + 1)..rows).find(|&i| ((t + 1)..cols).any(|j| m[i][j] % p != 0));
            match bad {
                Some(i) => {
                    for j in t..cols {
                        m[t][j] = m[t][j].checked_add(m[i][j]).ok_or(Error::Overflow)?;
                    }
                }
                None => break,
            }
        }
        diag.push(m[t][t].checked_abs().ok_or(Error::Overflow)?);
    }
    Ok(diag)
}

fn smallest(m: &[Vec<i64>], t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(u64, usize, usize)> = None;
    for (i, row) in m.iter().enumerate().skip(t) {
        for (j, &x) in row.iter().enumerate().skip(t) {
            if x != 0 && best.is_none_or(|(b, _, _)| x.unsigned_abs() < b) {
                best = Some((x.unsigned_abs(), i, j));
            }
        }
    }
    best.map(|(_, i, j)| (i, j))
}

/// Smallest nonzero entry in row `t` or column `t` of the block.
fn smallest_in_cross(m: &[Vec<i64>], t: usize) -> (usize, usize) {
    let mut best = (m[t][t].unsigned_abs(), t, t);
    for (i, row) in m.iter().enumerate().skip(t) {
        let x = row[t];
        if x != 0 && x.unsigned_abs() < best.0 {
            best = (x.unsigned_abs(), i, t);
        }
    }
    for (j, &x) in m[t].iter().enumerate().skip(t) {
        if x != 0 && x.unsigned_abs() < best.0 {
            best = (x.unsigned_abs(), t, j);
        }
    }
    if best.0 == 0 {
        // pivot was cancelled to zero; any nonzero entry in the cross will do
        for (i, row) in m.iter().enumerate().skip(t) {
            if row[t] != 0 {
                return (i, t);
            }
        }
        for (j, &x) in m[t].iter().enumerate().skip(t) {
            if x != 0 {
                return (t, j);
            }
        }
    }
    (best.1, best.2)
}

/// The abelian group with one generator per column and one relation per row.
pub fn abelianization(relation_matrix: &[Vec<i64>], generators: usize) -> Result<AbelianGroup> {
    if relation_matrix.iter().any(|r| r.len() != generators) {
        return Err(Error::InvalidArgument(
            "relation matrix width differs from generator count".into(),
        ));
    }
    let diag = smith_diagonal(relation_matrix)?;
    Ok(AbelianGroup {
        rank: generators - diag.len(),
        torsion: diag.into_iter().filter(|&d| d > 1).collect(),
    })
}
