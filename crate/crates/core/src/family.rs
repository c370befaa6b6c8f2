//! The family `I_{n,t} = <x^{e_1}, ..., x^{e_n}>` with
//! `e_i = (t, ..., t, 0, t, ..., t)` (zero in position `i`).
//!
//! Besides the ideal itself this module provides the closed-form generating
//! set `Δ_{n,t}` of its integral closure, the subset-sum inequalities that
//! every point of its Newton polyhedron satisfies, the constructive
//! reduction of a closure element to a dividing element of `Δ_{n,t}`, and
//! the explicit length-two free resolution of `R/I_{n,t}`.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::closure::np_membership;
use crate::error::{Error, Result};
use crate::ideal::{ExponentVector, MonomialIdeal};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FamilyParams {
    n: usize,
    t: u64,
}

impl FamilyParams {
    pub fn new(n: usize, t: u64) -> Result<Self> {
        if n < 3 {
            return Err(Error::Parameter(format!("n must be at least 3, got {n}")));
        }
        if t < 1 {
            return Err(Error::Parameter(format!("t must be at least 1, got {t}")));
        }
        Ok(Self { n, t })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn t(&self) -> u64 {
        self.t
    }

    /// Total degree `t(n-1)` shared by every element of `Δ_{n,t}`.
    pub fn degree(&self) -> u64 {
        self.t * (self.n as u64 - 1)
    }

    /// `e_i` (0-based `i`).
    pub fn vertex(&self, i: usize) -> ExponentVector {
        let mut v = vec![self.t; self.n];
        v[i] = 0;
        ExponentVector::from_u64s(&v)
    }

    fn check_len(&self, a: &ExponentVector) -> Result<()> {
        if a.len() == self.n {
            Ok(())
        } else {
            Err(Error::Dimension {
                expected: self.n,
                found: a.len(),
            })
        }
    }
}

pub fn family_ideal(p: FamilyParams) -> MonomialIdeal {
    MonomialIdeal::with_default_vars(p.n, (0..p.n).map(|i| p.vertex(i)))
        .expect("vertices have length n")
}

/// `Δ_{n,t}`: vectors in `[1..t]^n` of total degree `t(n-1)`, together with
/// the vertices `e_i`; returned in canonical order.
pub fn delta_set(p: FamilyParams) -> Vec<ExponentVector> {
    let mut out: Vec<ExponentVector> = (0..p.n).map(|i| p.vertex(i)).collect();
    let mut current = Vec::with_capacity(p.n);
    interior_points(p.n, p.t, p.degree(), &mut current, &mut out);
    out.sort();
    out
}

fn interior_points(
    n: usize,
    t: u64,
    remaining: u64,
    current: &mut Vec<u64>,
    out: &mut Vec<ExponentVector>,
) {
    let left = (n - current.len()) as u64;
    if left == 0 {
        if remaining == 0 {
            out.push(ExponentVector::from_u64s(current));
        }
        return;
    }
    // The other left-1 slots absorb between left-1 and (left-1)·t.
    let lo = remaining.saturating_sub((left - 1) * t).max(1);
    let hi = t.min(remaining.saturating_sub(left - 1));
    for v in lo..=hi {
        current.push(v);
        interior_points(n, t, remaining - v, current, out);
        current.pop();
    }
}

/// Whether `Σ_{i∈S} a_i ≥ t(|S|-1)` for every non-empty `S ⊆ [n]`.
///
/// For a fixed size `s` the tightest subset is the one holding the `s`
/// smallest coordinates, so only the sorted prefixes need checking.
pub fn thm1_check(a: &ExponentVector, p: FamilyParams) -> Result<bool> {
    p.check_len(a)?;
    let mut sorted: Vec<&BigUint> = a.coords().iter().collect();
    sorted.sort();
    let mut prefix = BigUint::zero();
    for (s, c) in sorted.into_iter().enumerate() {
        prefix += c;
        if prefix < BigUint::from(p.t) * s as u64 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// An element of `Δ_{n,t}` dividing the lattice point `b` of the Newton
/// polyhedron of `I_{n,t}`.
///
/// When some vertex divides `b` the lowest such vertex is returned. Otherwise
/// `S = {i : b_i < t}` has at least two elements; the result copies `b` on
/// `S`, puts `t|S| - Σ_S b_i` on the first index outside `S` and `t` on the
/// rest. If every coordinate is below `t` (possible only when `t ≥ n`) there
/// is no index outside `S`; then `b` itself has entries in `[1..t]` and is
/// lowered, last coordinate first, down to total degree `t(n-1)`.
pub fn reduce_to_delta(b: &ExponentVector, p: FamilyParams) -> Result<ExponentVector> {
    p.check_len(b)?;
    let ideal = family_ideal(p);
    if !np_membership(&ideal, b)?.is_inside() {
        return Err(Error::Domain(format!(
            "{b} is not in the Newton polyhedron of I_({},{})",
            p.n, p.t
        )));
    }
    if let Some(i) = (0..p.n).find(|&i| p.vertex(i).divides_unchecked(b)) {
        return Ok(p.vertex(i));
    }

    let t = BigUint::from(p.t);
    let small: Vec<usize> = (0..p.n).filter(|&i| b.get(i) < &t).collect();
    let mut out = b.clone().into_coords();

    match (0..p.n).find(|i| !small.contains(i)) {
        Some(next) => {
            let taken: BigUint = small.iter().map(|&i| b.get(i)).sum();
            out[next] = &t * small.len() as u64 - taken;
            for (i, slot) in out.iter_mut().enumerate() {
                if i != next && !small.contains(&i) {
                    *slot = t.clone();
                }
            }
        }
        None => {
            let target = BigUint::from(p.degree());
            let mut excess: BigUint = out.iter().sum::<BigUint>() - target;
            for slot in out.iter_mut().rev() {
                if excess.is_zero() {
                    break;
                }
                let room = &*slot - 1u32;
                let cut = room.min(excess.clone());
                *slot -= &cut;
                excess -= cut;
            }
        }
    }
    Ok(ExponentVector::new(out))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedMonomial {
    pub sign: Sign,
    pub exps: ExponentVector,
}

/// The maps of `0 ← R ← R^n ← R^{n-1} ← 0` for `R/I_{n,t}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolutionPair {
    pub gen_row: Vec<ExponentVector>,
    /// `n × (n-1)`; `None` is a zero entry.
    pub syzygy_matrix: Vec<Vec<Option<SignedMonomial>>>,
}

impl ResolutionPair {
    /// Whether every column of `gen_row · syzygy_matrix` cancels to zero.
    pub fn product_vanishes(&self) -> bool {
        let cols = self.syzygy_matrix.first().map_or(0, Vec::len);
        (0..cols).all(|j| {
            let mut terms: BTreeMap<ExponentVector, i64> = BTreeMap::new();
            for (g, row) in self.gen_row.iter().zip(&self.syzygy_matrix) {
                if let Some(entry) = &row[j] {
                    let term = g.mul(&entry.exps).expect("same ring");
                    let delta = match entry.sign {
                        Sign::Plus => 1,
                        Sign::Minus => -1,
                    };
                    *terms.entry(term).or_default() += delta;
                }
            }
            terms.values().all(|&c| c == 0)
        })
    }
}

pub fn resolution_matrices(p: FamilyParams) -> ResolutionPair {
    let n = p.n;
    let gen_row: Vec<ExponentVector> = (0..n).map(|i| p.vertex(i)).collect();
    let power = |i: usize| ExponentVector::pure_power(n, i, BigUint::from(p.t));
    let mut matrix = vec![vec![None; n - 1]; n];
    for j in 0..n - 1 {
        matrix[0][j] = Some(SignedMonomial {
            sign: Sign::Minus,
            exps: power(0),
        });
        matrix[j + 1][j] = Some(SignedMonomial {
            sign: Sign::Plus,
            exps: power(j + 1),
        });
    }
    ResolutionPair {
        gen_row,
        syzygy_matrix: matrix,
    }
}

/// No two distinct minimal generators share a nonzero exponent in any
/// variable.
pub fn is_strongly_generic(ideal: &MonomialIdeal) -> Result<bool> {
    ideal.ensure_proper_nonzero()?;
    let gens = ideal.gens();
    for var in 0..ideal.nvars() {
        let mut seen: Vec<&BigUint> = gens
            .iter()
            .map(|g| g.get(var))
            .filter(|e| !e.is_zero())
            .collect();
        let before = seen.len();
        seen.sort();
        seen.dedup();
        if seen.len() != before {
            return Ok(false);
        }
    }
    Ok(true)
}
