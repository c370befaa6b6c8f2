//! Multigraded Betti numbers of `R/I` via upper Koszul simplicial complexes.
//!
//! For a multidegree `a`, `K^a(I)` is the complex of squarefree `b ≤ a`
//! with `x^{a-b} ∈ I`, and `β_{i,a}(I) = dim H̃_{i-1}(K^a(I); Q)`. Betti
//! numbers of `I` can only be nonzero in degrees of the lcm lattice, so
//! those are the only degrees visited. For `R/I` the homological index
//! shifts by one and `β_{0,0}(R/I) = 1`.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;

use crate::decompose::codim;
use crate::error::{Error, Result};
use crate::homology::{homology_ranks, SimplicialComplex};
use crate::ideal::{ExponentVector, MonomialIdeal};

/// Largest lcm lattice that [`lcm_degrees`] will build by default.
pub const DEFAULT_LATTICE_BUDGET: u64 = 1 << 20;

/// `β_{i,a}(R/I)` for every nonzero entry.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, ExponentVector), u64>,
}

impl BettiTable {
    pub fn entries(&self) -> &BTreeMap<(usize, ExponentVector), u64> {
        &self.entries
    }

    pub fn get(&self, i: usize, degree: &ExponentVector) -> u64 {
        self.entries.get(&(i, degree.clone())).copied().unwrap_or(0)
    }

    /// Total Betti numbers `β_0, β_1, ..., β_pd`.
    pub fn totals(&self) -> Vec<u64> {
        let mut totals = vec![0u64; self.projective_dimension() + 1];
        for ((i, _), r) in &self.entries {
            totals[*i] += r;
        }
        totals
    }

    pub fn projective_dimension(&self) -> usize {
        self.entries.keys().map(|(i, _)| *i).max().unwrap_or(0)
    }
}

pub fn lcm_degrees(ideal: &MonomialIdeal) -> Result<BTreeSet<ExponentVector>> {
    lcm_degrees_with_budget(ideal, DEFAULT_LATTICE_BUDGET)
}

/// The lcms of all non-empty subsets of generators, built as the closure of
/// the generators under pairwise lcm. `budget` caps the lattice size.
pub fn lcm_degrees_with_budget(
    ideal: &MonomialIdeal,
    budget: u64,
) -> Result<BTreeSet<ExponentVector>> {
    ideal.ensure_proper_nonzero()?;
    let gens = ideal.gens();
    let mut lattice: BTreeSet<ExponentVector> = BTreeSet::new();
    let mut frontier: Vec<ExponentVector> = Vec::new();
    for g in gens {
        if lattice.insert(g.clone()) {
            frontier.push(g.clone());
        }
    }
    while let Some(x) = frontier.pop() {
        for g in gens {
            let l = x.lcm_unchecked(g);
            if !lattice.contains(&l) {
                if lattice.len() as u64 >= budget {
                    return Err(Error::Budget {
                        what: "lcm lattice",
                        limit: budget,
                    });
                }
                lattice.insert(l.clone());
                frontier.push(l);
            }
        }
    }
    Ok(lattice)
}

/// `K^a(I)`: squarefree `b ≤ a` with `x^{a-b} ∈ I`, as vertex sets.
pub fn upper_koszul(ideal: &MonomialIdeal, a: &ExponentVector) -> Result<SimplicialComplex> {
    if a.len() != ideal.nvars() {
        return Err(Error::Dimension {
            expected: ideal.nvars(),
            found: a.len(),
        });
    }
    let support = a.support();
    let k = support.len();
    if k >= 64 {
        return Err(Error::Domain("multidegree support too large".into()));
    }
    let mut faces = Vec::new();
    for mask in 0u64..(1u64 << k) {
        let face: Vec<usize> = (0..k)
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| support[i])
            .collect();
        let mut shifted = a.clone().into_coords();
        for &v in &face {
            shifted[v] -= 1u32;
        }
        if ideal.contains_unchecked(&ExponentVector::new(shifted)) {
            faces.push(face);
        }
    }
    SimplicialComplex::new(support, faces)
}

pub fn betti_table(ideal: &MonomialIdeal) -> Result<BettiTable> {
    betti_table_with_budget(ideal, DEFAULT_LATTICE_BUDGET)
}

pub fn betti_table_with_budget(ideal: &MonomialIdeal, budget: u64) -> Result<BettiTable> {
    let degrees = lcm_degrees_with_budget(ideal, budget)?;
    let mut entries = BTreeMap::new();
    entries.insert((0, ExponentVector::zeros(ideal.nvars())), 1);
    for a in degrees {
        let ranks = homology_ranks(&upper_koszul(ideal, &a)?);
        // ranks[k] is H̃_{k-1}(K^a), which is β_{k,a}(I) = β_{k+1,a}(R/I).
        for (k, r) in ranks.into_iter().enumerate() {
            if !r.is_zero() {
                entries.insert((k + 1, a.clone()), r as u64);
            }
        }
    }
    Ok(BettiTable { entries })
}

/// Projective dimension of `R/I`.
pub fn projective_dimension(ideal: &MonomialIdeal) -> Result<usize> {
    Ok(betti_table(ideal)?.projective_dimension())
}

/// `pd(R/I) = codim(I)`.
pub fn is_cohen_macaulay(ideal: &MonomialIdeal) -> Result<bool> {
    Ok(projective_dimension(ideal)? == codim(ideal)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closure::closure_generators;
    use crate::family::{family_ideal, FamilyParams};

    fn ideal(n: usize, gens: &[&[u64]]) -> MonomialIdeal {
        MonomialIdeal::with_default_vars(n, gens.iter().map(|g| ExponentVector::from_u64s(g)))
            .unwrap()
    }

    fn ev<const N: usize>(c: [u64; N]) -> ExponentVector {
        ExponentVector::from(c)
    }

    fn final_example() -> MonomialIdeal {
        MonomialIdeal::new(
            vec!["x".into(), "y".into(), "z".into(), "w".into()],
            vec![ev([3, 1, 1, 0]), ev([2, 0, 0, 2]), ev([0, 2, 0, 3])],
        )
        .unwrap()
    }

    fn family(n: usize, t: u64) -> MonomialIdeal {
        family_ideal(FamilyParams::new(n, t).unwrap())
    }

    #[test]
    fn lcm_degrees_examples() {
        let degrees = lcm_degrees(&family(3, 2)).unwrap();
        let expected: BTreeSet<ExponentVector> =
            [ev([2, 2, 0]), ev([2, 0, 2]), ev([0, 2, 2]), ev([2, 2, 2])]
                .into_iter()
                .collect();
        assert_eq!(degrees, expected);
        let principal = ideal(2, &[&[1, 3]]);
        assert_eq!(lcm_degrees(&principal).unwrap().len(), 1);
        // Seven non-empty subsets, but lcm(g1, g3) coincides with the full lcm.
        let fin = final_example();
        let g = fin.gens();
        let mut by_subset = BTreeSet::new();
        for mask in 1u32..8 {
            let mut l = ExponentVector::zeros(4);
            for (i, gi) in g.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    l = l.lcm(gi).unwrap();
                }
            }
            by_subset.insert(l);
        }
        assert_eq!(by_subset.len(), 6);
        assert_eq!(lcm_degrees(&fin).unwrap(), by_subset);
    }

    #[test]
    fn lcm_budget_is_enforced() {
        assert!(matches!(
            lcm_degrees_with_budget(&family(3, 2), 3),
            Err(Error::Budget { .. })
        ));
    }

    #[test]
    fn upper_koszul_examples() {
        let x1 = ideal(1, &[&[1]]);
        let k = upper_koszul(&x1, &ev([1])).unwrap();
        assert_eq!(
            k.faces().iter().collect::<Vec<_>>(),
            vec![&Vec::<usize>::new()]
        );
        assert_eq!(homology_ranks(&k), vec![1]);

        let m = ideal(2, &[&[1, 0], &[0, 1]]);
        let k = upper_koszul(&m, &ev([1, 1])).unwrap();
        assert_eq!(k.faces().len(), 3);
        assert_eq!(homology_ranks(&k), vec![0, 1]);

        let k = upper_koszul(&family(3, 2), &ev([2, 2, 2])).unwrap();
        // β_{1,a}(I) is H̃_0.
        assert_eq!(homology_ranks(&k)[1], 2);
    }

    #[test]
    fn betti_totals_examples() {
        assert_eq!(betti_table(&family(3, 2)).unwrap().totals(), vec![1, 3, 2]);
        assert_eq!(betti_table(&family(4, 2)).unwrap().totals(), vec![1, 4, 3]);
        assert_eq!(
            betti_table(&ideal(2, &[&[2, 0], &[0, 3]]))
                .unwrap()
                .totals(),
            vec![1, 2, 1]
        );
    }

    #[test]
    fn cohen_macaulay_examples() {
        for n in 3..=4 {
            for t in 1..=2 {
                let i = family(n, t);
                assert_eq!(projective_dimension(&i).unwrap(), 2);
                assert!(is_cohen_macaulay(&i).unwrap());
            }
        }
        let c = closure_generators(&family(3, 2)).unwrap();
        assert_eq!(projective_dimension(&c).unwrap(), 3);
        assert!(!is_cohen_macaulay(&c).unwrap());

        let fin = final_example();
        assert_eq!(projective_dimension(&fin).unwrap(), 2);
        assert!(is_cohen_macaulay(&fin).unwrap());
    }

    #[test]
    fn zero_and_unit_are_rejected() {
        let vars = crate::ideal::default_vars(2);
        assert!(betti_table(&MonomialIdeal::zero(vars.clone())).is_err());
        assert!(betti_table(&MonomialIdeal::unit(vars)).is_err());
    }
}
