//! Irreducible and primary decomposition of monomial ideals.
//!
//! Irreducible components come from the splitting rule
//! `J + <x_i^a * m'> = (J + <x_i^a>) ∩ (J + <m'>)` for `x_i` not dividing
//! `m'`, applied until every generator is a pure power. Grouping the
//! irredundant components by radical gives a primary decomposition whose
//! radicals are exactly the associated primes.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::ideal::{minimalize, ExponentVector, MonomialIdeal};

pub const DEFAULT_COMPONENT_BUDGET: u64 = 100_000;

/// `<x_i^{a_i} : i ∈ S>`, stored as an exponent vector with zeros for the
/// variables outside `S`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IrreducibleComponent {
    exps: ExponentVector,
}

impl IrreducibleComponent {
    pub fn new(exps: ExponentVector) -> Result<Self> {
        if exps.is_zero() {
            return Err(Error::Domain(
                "an irreducible component needs at least one variable".into(),
            ));
        }
        Ok(Self { exps })
    }

    /// `(variable index, exponent)` pairs, in index order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, &BigUint)> {
        self.exps
            .coords()
            .iter()
            .enumerate()
            .filter(|(_, e)| !e.is_zero())
    }

    pub fn exponents(&self) -> &ExponentVector {
        &self.exps
    }

    pub fn radical(&self) -> PrimeSupport {
        PrimeSupport(self.exps.support())
    }

    pub fn to_ideal(&self, vars: &[String]) -> MonomialIdeal {
        let n = vars.len();
        let gens = self
            .entries()
            .map(|(i, e)| ExponentVector::pure_power(n, i, e.clone()));
        MonomialIdeal::from_minimal(vars.to_vec(), minimalize(gens))
    }

    /// Ideal containment `self ⊆ other` between irreducible ideals.
    pub fn is_contained_in(&self, other: &Self) -> bool {
        self.entries().all(|(i, e)| {
            let o = other.exps.get(i);
            !o.is_zero() && o <= e
        })
    }

    fn contains_monomial(&self, m: &ExponentVector) -> bool {
        self.entries().any(|(i, e)| m.get(i) >= e)
    }
}

/// The monomial prime generated by a non-empty set of variables (0-based
/// indices, sorted).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PrimeSupport(Vec<usize>);

impl PrimeSupport {
    pub fn new<I: IntoIterator<Item = usize>>(vars: I) -> Result<Self> {
        let set: BTreeSet<usize> = vars.into_iter().collect();
        if set.is_empty() {
            return Err(Error::Domain("a prime support must be non-empty".into()));
        }
        Ok(Self(set.into_iter().collect()))
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.0.iter().all(|i| other.0.binary_search(i).is_ok())
    }

    pub fn to_ideal(&self, vars: &[String]) -> MonomialIdeal {
        MonomialIdeal::prime(vars.to_vec(), &self.0)
    }

    pub fn names(&self, vars: &[String]) -> Vec<String> {
        self.0.iter().map(|&i| vars[i].clone()).collect()
    }
}

impl fmt::Display for PrimeSupport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|i| (i + 1).to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// One primary component together with its radical.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimaryComponent {
    pub prime: PrimeSupport,
    pub ideal: MonomialIdeal,
}

pub fn irreducible_decomposition(ideal: &MonomialIdeal) -> Result<Vec<IrreducibleComponent>> {
    irreducible_decomposition_with_budget(ideal, DEFAULT_COMPONENT_BUDGET)
}

/// Irredundant irreducible decomposition, in canonical (lexicographic)
/// order. `budget` bounds the number of leaves the splitting may produce.
pub fn irreducible_decomposition_with_budget(
    ideal: &MonomialIdeal,
    budget: u64,
) -> Result<Vec<IrreducibleComponent>> {
    ideal.ensure_proper_nonzero()?;
    let n = ideal.nvars();
    let mut leaves: BTreeSet<IrreducibleComponent> = BTreeSet::new();
    let mut produced: u64 = 0;
    let mut stack: Vec<Vec<ExponentVector>> = vec![ideal.gens().to_vec()];

    while let Some(gens) = stack.pop() {
        let Some(pos) = gens.iter().position(|g| !g.is_pure_power()) else {
            produced += 1;
            if produced > budget {
                return Err(Error::Budget {
                    what: "decomposition component",
                    limit: budget,
                });
            }
            let mut exps = ExponentVector::zeros(n).into_coords();
            for g in &gens {
                let i = g.support()[0];
                exps[i] = g.get(i).clone();
            }
            leaves.insert(IrreducibleComponent {
                exps: ExponentVector::new(exps),
            });
            continue;
        };

        let m = &gens[pos];
        let var = m.support()[0];
        let power = ExponentVector::pure_power(n, var, m.get(var).clone());
        let mut rest = m.clone().into_coords();
        rest[var] = BigUint::zero();
        let rest = ExponentVector::new(rest);

        let others = gens
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != pos)
            .map(|(_, g)| g.clone());
        let left = minimalize(others.clone().chain(std::iter::once(power)));
        let right = minimalize(others.chain(std::iter::once(rest)));
        // Pushed right first so the left branch is explored first.
        stack.push(right);
        stack.push(left);
    }

    Ok(irredundant(leaves.into_iter().collect()))
}

/// Greedy removal, in canonical order, of every component that contains the
/// intersection of the remaining ones. For irreducible monomial ideals that
/// happens exactly when it contains another remaining component, so the
/// check is pairwise.
fn irredundant(mut comps: Vec<IrreducibleComponent>) -> Vec<IrreducibleComponent> {
    let mut i = 0;
    while i < comps.len() {
        let redundant = comps
            .iter()
            .enumerate()
            .any(|(j, other)| j != i && other.is_contained_in(&comps[i]));
        if redundant {
            comps.remove(i);
        } else {
            i += 1;
        }
    }
    comps
}

/// Intersection of the components as a monomial ideal.
pub fn intersect_components(
    vars: &[String],
    comps: &[IrreducibleComponent],
) -> Result<MonomialIdeal> {
    let ideals: Vec<MonomialIdeal> = comps.iter().map(|c| c.to_ideal(vars)).collect();
    MonomialIdeal::intersect_all(&ideals)
}

/// Whether `m` lies in every component (membership in their intersection).
pub fn in_all_components(comps: &[IrreducibleComponent], m: &ExponentVector) -> bool {
    comps.iter().all(|c| c.contains_monomial(m))
}

/// Primary components with their radicals, sorted by radical.
pub fn primary_components(ideal: &MonomialIdeal) -> Result<Vec<PrimaryComponent>> {
    primary_components_with_budget(ideal, DEFAULT_COMPONENT_BUDGET)
}

pub fn primary_components_with_budget(
    ideal: &MonomialIdeal,
    budget: u64,
) -> Result<Vec<PrimaryComponent>> {
    let comps = irreducible_decomposition_with_budget(ideal, budget)?;
    let mut groups: BTreeMap<PrimeSupport, Vec<MonomialIdeal>> = BTreeMap::new();
    for c in &comps {
        groups
            .entry(c.radical())
            .or_default()
            .push(c.to_ideal(ideal.vars()));
    }
    groups
        .into_iter()
        .map(|(prime, members)| {
            Ok(PrimaryComponent {
                prime,
                ideal: MonomialIdeal::intersect_all(&members)?,
            })
        })
        .collect()
}

pub fn primary_decomposition(ideal: &MonomialIdeal) -> Result<Vec<MonomialIdeal>> {
    Ok(primary_components(ideal)?
        .into_iter()
        .map(|c| c.ideal)
        .collect())
}

/// `Ass(R/I)`: the radicals of the irredundant irreducible components.
pub fn associated_primes(ideal: &MonomialIdeal) -> Result<BTreeSet<PrimeSupport>> {
    associated_primes_with_budget(ideal, DEFAULT_COMPONENT_BUDGET)
}

pub fn associated_primes_with_budget(
    ideal: &MonomialIdeal,
    budget: u64,
) -> Result<BTreeSet<PrimeSupport>> {
    Ok(irreducible_decomposition_with_budget(ideal, budget)?
        .iter()
        .map(IrreducibleComponent::radical)
        .collect())
}

/// The inclusion-minimal members of a set of primes.
pub fn minimal_among(ass: &BTreeSet<PrimeSupport>) -> BTreeSet<PrimeSupport> {
    ass.iter()
        .filter(|p| !ass.iter().any(|q| q != *p && q.is_subset(p)))
        .cloned()
        .collect()
}

pub fn minimal_primes(ideal: &MonomialIdeal) -> Result<BTreeSet<PrimeSupport>> {
    Ok(minimal_among(&associated_primes(ideal)?))
}

pub fn embedded_primes(ideal: &MonomialIdeal) -> Result<BTreeSet<PrimeSupport>> {
    let ass = associated_primes(ideal)?;
    let minimal = minimal_among(&ass);
    Ok(ass.difference(&minimal).cloned().collect())
}

/// Height of the ideal: the fewest variables generating a minimal prime.
pub fn codim(ideal: &MonomialIdeal) -> Result<usize> {
    // Minimal primes of I are those of its radical, and the radical is
    // squarefree so its decomposition is cheap.
    let minimal = minimal_primes(&ideal.radical())?;
    Ok(minimal.iter().map(PrimeSupport::len).min().unwrap_or(0))
}

pub fn is_primary(ideal: &MonomialIdeal) -> Result<bool> {
    Ok(associated_primes(ideal)?.len() == 1)
}

pub fn is_unmixed(ideal: &MonomialIdeal) -> Result<bool> {
    let ass = associated_primes(ideal)?;
    let minimal = minimal_among(&ass);
    let heights: BTreeSet<usize> = minimal.iter().map(PrimeSupport::len).collect();
    Ok(ass.len() == minimal.len() && heights.len() <= 1)
}
