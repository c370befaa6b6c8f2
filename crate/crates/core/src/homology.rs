//! Finite simplicial complexes and their reduced homology over the rationals.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};

/// A downward-closed family of vertex sets.
///
/// The void complex has no faces at all; the irrelevant complex has only the
/// empty face. They are different values and have different homology.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: Vec<usize>,
    faces: BTreeSet<Vec<usize>>,
}

impl SimplicialComplex {
    pub fn void() -> Self {
        Self {
            vertices: Vec::new(),
            faces: BTreeSet::new(),
        }
    }

    pub fn irrelevant() -> Self {
        Self {
            vertices: Vec::new(),
            faces: [Vec::new()].into_iter().collect(),
        }
    }

    /// Checks that every face is a subset of `vertices` and that the family
    /// is closed under taking subsets.
    pub fn new<I>(vertices: Vec<usize>, faces: I) -> Result<Self>
    where
        I: IntoIterator<Item = Vec<usize>>,
    {
        let mut vertices = vertices;
        vertices.sort_unstable();
        vertices.dedup();
        let faces: BTreeSet<Vec<usize>> = faces
            .into_iter()
            .map(|mut f| {
                f.sort_unstable();
                f.dedup();
                f
            })
            .collect();
        for f in &faces {
            if f.iter().any(|v| vertices.binary_search(v).is_err()) {
                return Err(Error::Domain(format!("face {f:?} uses an unknown vertex")));
            }
            for skip in 0..f.len() {
                let mut sub = f.clone();
                sub.remove(skip);
                if !faces.contains(&sub) {
                    return Err(Error::Domain(format!(
                        "face {f:?} present but its facet {sub:?} is not"
                    )));
                }
            }
        }
        Ok(Self { vertices, faces })
    }

    /// The smallest complex containing the given facets.
    pub fn from_facets<I>(vertices: Vec<usize>, facets: I) -> Result<Self>
    where
        I: IntoIterator<Item = Vec<usize>>,
    {
        let mut faces = BTreeSet::new();
        for mut facet in facets {
            facet.sort_unstable();
            facet.dedup();
            let k = facet.len();
            for mask in 0u64..(1u64 << k) {
                let sub: Vec<usize> = (0..k)
                    .filter(|i| mask & (1 << i) != 0)
                    .map(|i| facet[i])
                    .collect();
                faces.insert(sub);
            }
        }
        Self::new(vertices, faces)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn faces(&self) -> &BTreeSet<Vec<usize>> {
        &self.faces
    }

    pub fn is_void(&self) -> bool {
        self.faces.is_empty()
    }

    /// Largest face size minus one; `None` for the void complex.
    pub fn dim(&self) -> Option<isize> {
        self.faces.iter().map(|f| f.len() as isize - 1).max()
    }
}

/// Reduced homology ranks over `Q`, indexed from dimension `-1`: entry `k`
/// is the rank of `H̃_{k-1}`. The void complex yields an empty list.
pub fn homology_ranks(complex: &SimplicialComplex) -> Vec<usize> {
    let Some(top) = complex.dim() else {
        return Vec::new();
    };
    // by_size[s] lists the faces with s vertices (dimension s - 1).
    let top_size = (top + 1) as usize;
    let mut by_size: Vec<Vec<&Vec<usize>>> = vec![Vec::new(); top_size + 1];
    for f in complex.faces() {
        by_size[f.len()].push(f);
    }

    // rank of ∂ : C_{size s} → C_{size s-1}, for s = 1..=top_size.
    let mut boundary_rank = vec![0usize; top_size + 2];
    for s in 1..=top_size {
        let index: BTreeMap<&Vec<usize>, usize> = by_size[s - 1]
            .iter()
            .enumerate()
            .map(|(i, f)| (*f, i))
            .collect();
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(by_size[s].len());
        for face in &by_size[s] {
            let mut row = vec![BigInt::zero(); index.len()];
            for skip in 0..face.len() {
                let mut sub = (*face).clone();
                sub.remove(skip);
                let sign = if skip % 2 == 0 { 1 } else { -1 };
                row[index[&sub]] = BigInt::from(sign);
            }
            rows.push(row);
        }
        boundary_rank[s] = integer_rank(rows);
    }

    (0..=top_size)
        .map(|s| by_size[s].len() - boundary_rank[s] - boundary_rank[s + 1])
        .collect()
}

/// Rank of an integer matrix by fraction-free (Bareiss) elimination.
pub fn integer_rank(mut rows: Vec<Vec<BigInt>>) -> usize {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = BigInt::from(1);
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(p) = (rank..nrows).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let (head, tail) = rows.split_at_mut(rank + 1);
        let pivot_row = &head[rank];
        let pivot = pivot_row[col].clone();
        for row in tail {
            let factor = row[col].clone();
            for (x, p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                // Exact by Sylvester's identity.
                *x = (&pivot * &*x - &factor * p) / &prev;
            }
        }
        prev = pivot;
        rank += 1;
    }
    rank
}
