//! Exponent vectors and monomial ideals in canonical form.
//!
//! A monomial ideal is stored as its unique minimal generating set, sorted
//! lexicographically. Two ideals over the same ring are equal exactly when
//! their representations are equal, so `==` is ideal equality.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// The exponent of a single monomial: one non-negative integer per variable.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExponentVector(Vec<BigUint>);

impl ExponentVector {
    pub fn new(coords: Vec<BigUint>) -> Self {
        Self(coords)
    }

    pub fn zeros(len: usize) -> Self {
        Self(vec![BigUint::zero(); len])
    }

    /// `x_index ^ power` in a ring with `len` variables.
    pub fn pure_power(len: usize, index: usize, power: BigUint) -> Self {
        let mut v = Self::zeros(len);
        v.0[index] = power;
        v
    }

    pub fn from_u64s(coords: &[u64]) -> Self {
        Self(coords.iter().map(|&c| BigUint::from(c)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coords(&self) -> &[BigUint] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<BigUint> {
        self.0
    }

    pub fn get(&self, index: usize) -> &BigUint {
        &self.0[index]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn degree(&self) -> BigUint {
        self.0.iter().sum()
    }

    /// Indices of the variables that occur with positive exponent.
    pub fn support(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, _)| i)
            .collect()
    }

    /// The squarefree vector with the same support.
    pub fn support_indicator(&self) -> Self {
        Self(
            self.0
                .iter()
                .map(|c| {
                    if c.is_zero() {
                        BigUint::zero()
                    } else {
                        BigUint::one()
                    }
                })
                .collect(),
        )
    }

    /// A power of a single variable (the unit monomial does not count).
    pub fn is_pure_power(&self) -> bool {
        self.0.iter().filter(|c| !c.is_zero()).count() == 1
    }

    fn check_len(&self, other: &Self) -> Result<()> {
        if self.len() == other.len() {
            Ok(())
        } else {
            Err(Error::Dimension {
                expected: self.len(),
                found: other.len(),
            })
        }
    }

    /// Whether `x^self` divides `x^other`, i.e. `self <= other` componentwise.
    pub fn divides(&self, other: &Self) -> Result<bool> {
        self.check_len(other)?;
        Ok(self.divides_unchecked(other))
    }

    pub(crate) fn divides_unchecked(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Self) -> Result<Self> {
        self.check_len(other)?;
        Ok(self.lcm_unchecked(other))
    }

    pub(crate) fn lcm_unchecked(&self, other: &Self) -> Self {
        Self(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.max(b).clone())
                .collect(),
        )
    }

    pub fn gcd(&self, other: &Self) -> Result<Self> {
        self.check_len(other)?;
        Ok(Self(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.min(b).clone())
                .collect(),
        ))
    }

    /// Exponent of the product of the two monomials.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_len(other)?;
        Ok(Self(
            self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect(),
        ))
    }

    /// `self - gcd(self, other)`: the exponent of `x^self / gcd(x^self, x^other)`.
    pub fn quotient(&self, other: &Self) -> Result<Self> {
        self.check_len(other)?;
        Ok(self.quotient_unchecked(other))
    }

    pub(crate) fn quotient_unchecked(&self, other: &Self) -> Self {
        Self(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| if a > b { a - b } else { BigUint::zero() })
                .collect(),
        )
    }

    pub fn scale(&self, k: u64) -> Self {
        Self(self.0.iter().map(|c| c * k).collect())
    }
}

impl<const N: usize> From<[u64; N]> for ExponentVector {
    fn from(coords: [u64; N]) -> Self {
        Self::from_u64s(&coords)
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Reduce a generating set to the unique antichain generating the same
/// ideal, sorted lexicographically.
///
/// A divisor of `v` is lexicographically no larger than `v`, so a single
/// pass over the sorted input only ever has to look backwards.
pub fn minimalize<I>(gens: I) -> Vec<ExponentVector>
where
    I: IntoIterator<Item = ExponentVector>,
{
    let mut all: Vec<ExponentVector> = gens.into_iter().collect();
    all.sort();
    all.dedup();
    let mut kept: Vec<ExponentVector> = Vec::with_capacity(all.len());
    for v in all {
        if !kept.iter().any(|k| k.divides_unchecked(&v)) {
            kept.push(v);
        }
    }
    kept
}

/// Default variable names `x1, ..., xn`.
pub fn default_vars(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

/// A monomial ideal over `k[vars]` held by its minimal generators.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MonomialIdeal {
    vars: Vec<String>,
    gens: Vec<ExponentVector>,
}

impl MonomialIdeal {
    /// Build an ideal from any generating set; the generators are minimalized.
    pub fn new<I>(vars: Vec<String>, gens: I) -> Result<Self>
    where
        I: IntoIterator<Item = ExponentVector>,
    {
        let gens: Vec<ExponentVector> = gens.into_iter().collect();
        if let Some(bad) = gens.iter().find(|g| g.len() != vars.len()) {
            return Err(Error::Dimension {
                expected: vars.len(),
                found: bad.len(),
            });
        }
        Ok(Self {
            vars,
            gens: minimalize(gens),
        })
    }

    /// Same as [`MonomialIdeal::new`] with variables named `x1..xn`.
    pub fn with_default_vars<I>(n: usize, gens: I) -> Result<Self>
    where
        I: IntoIterator<Item = ExponentVector>,
    {
        Self::new(default_vars(n), gens)
    }

    pub(crate) fn from_minimal(vars: Vec<String>, gens: Vec<ExponentVector>) -> Self {
        Self { vars, gens }
    }

    pub fn zero(vars: Vec<String>) -> Self {
        Self {
            vars,
            gens: Vec::new(),
        }
    }

    pub fn unit(vars: Vec<String>) -> Self {
        let n = vars.len();
        Self {
            vars,
            gens: vec![ExponentVector::zeros(n)],
        }
    }

    /// The ideal generated by a subset of the variables.
    pub fn prime(vars: Vec<String>, indices: &[usize]) -> Self {
        let n = vars.len();
        let gens = indices
            .iter()
            .map(|&i| ExponentVector::pure_power(n, i, BigUint::one()));
        Self {
            vars,
            gens: minimalize(gens),
        }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn gens(&self) -> &[ExponentVector] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_zero()
    }

    /// Errors unless the ideal is nonzero and proper.
    pub fn ensure_proper_nonzero(&self) -> Result<()> {
        if self.is_zero() {
            Err(Error::ZeroIdeal)
        } else if self.is_unit() {
            Err(Error::UnitIdeal)
        } else {
            Ok(())
        }
    }

    fn check_point(&self, m: &ExponentVector) -> Result<()> {
        if m.len() == self.nvars() {
            Ok(())
        } else {
            Err(Error::Dimension {
                expected: self.nvars(),
                found: m.len(),
            })
        }
    }

    fn check_ambient(&self, other: &Self) -> Result<()> {
        if self.vars == other.vars {
            Ok(())
        } else {
            Err(Error::AmbientMismatch {
                left: self.vars.join(" "),
                right: other.vars.join(" "),
            })
        }
    }

    pub fn contains(&self, m: &ExponentVector) -> Result<bool> {
        self.check_point(m)?;
        Ok(self.contains_unchecked(m))
    }

    pub(crate) fn contains_unchecked(&self, m: &ExponentVector) -> bool {
        self.gens.iter().any(|g| g.divides_unchecked(m))
    }

    /// `self ⊆ other`.
    pub fn is_subset(&self, other: &Self) -> Result<bool> {
        self.check_ambient(other)?;
        Ok(self.gens.iter().all(|g| other.contains_unchecked(g)))
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        let gens = minimalize(self.gens.iter().chain(&other.gens).cloned());
        Ok(Self::from_minimal(self.vars.clone(), gens))
    }

    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        let lcms = self
            .gens
            .iter()
            .flat_map(|a| other.gens.iter().map(move |b| a.lcm_unchecked(b)));
        Ok(Self::from_minimal(self.vars.clone(), minimalize(lcms)))
    }

    /// Intersection of a non-empty list of ideals over the same ring.
    pub fn intersect_all<'a, I>(ideals: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a MonomialIdeal>,
    {
        let mut iter = ideals.into_iter();
        let first = iter
            .next()
            .ok_or_else(|| Error::Domain("intersection of an empty list of ideals".into()))?;
        iter.try_fold(first.clone(), |acc, next| acc.intersect(next))
    }

    /// `(self : x^m)`.
    pub fn colon_mon(&self, m: &ExponentVector) -> Result<Self> {
        self.check_point(m)?;
        let gens = minimalize(self.gens.iter().map(|g| g.quotient_unchecked(m)));
        Ok(Self::from_minimal(self.vars.clone(), gens))
    }

    /// `(self : other) = ∩ (self : m)` over the generators `m` of `other`.
    pub fn colon_ideal(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        if other.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        let mut acc: Option<Self> = None;
        for m in &other.gens {
            let q = self.colon_mon(m)?;
            acc = Some(match acc {
                None => q,
                Some(a) => a.intersect(&q)?,
            });
        }
        Ok(acc.expect("other has at least one generator"))
    }

    pub fn radical(&self) -> Self {
        let gens = minimalize(self.gens.iter().map(ExponentVector::support_indicator));
        Self::from_minimal(self.vars.clone(), gens)
    }

    /// Componentwise maximum of the generators (the lcm of all of them).
    pub fn lcm_of_gens(&self) -> ExponentVector {
        self.gens
            .iter()
            .fold(ExponentVector::zeros(self.nvars()), |acc, g| {
                acc.lcm_unchecked(g)
            })
    }

    /// Render a monomial with this ideal's variable names, e.g. `x1^2*x3`.
    pub fn monomial_string(&self, m: &ExponentVector) -> String {
        format_monomial(&self.vars, m)
    }
}

pub fn format_monomial(vars: &[String], m: &ExponentVector) -> String {
    let mut parts = Vec::new();
    for (name, e) in vars.iter().zip(m.coords()) {
        if e.is_zero() {
            continue;
        }
        if e.is_one() {
            parts.push(name.clone());
        } else {
            parts.push(format!("{name}^{e}"));
        }
    }
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", self.monomial_string(g))?;
        }
        write!(f, ">")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev<const N: usize>(c: [u64; N]) -> ExponentVector {
        ExponentVector::from(c)
    }

    fn ideal(n: usize, gens: &[&[u64]]) -> MonomialIdeal {
        MonomialIdeal::with_default_vars(n, gens.iter().map(|g| ExponentVector::from_u64s(g)))
            .unwrap()
    }

    fn i32_ideal() -> MonomialIdeal {
        ideal(3, &[&[0, 2, 2], &[2, 0, 2], &[2, 2, 0]])
    }

    fn i32_closure() -> MonomialIdeal {
        ideal(
            3,
            &[
                &[2, 2, 0],
                &[2, 0, 2],
                &[0, 2, 2],
                &[1, 1, 2],
                &[1, 2, 1],
                &[2, 1, 1],
            ],
        )
    }

    #[test]
    fn divides_examples() {
        assert!(ev([0, 2, 2]).divides(&ev([1, 3, 5])).unwrap());
        assert!(ev([1, 1, 2]).divides(&ev([1, 1, 2])).unwrap());
        assert!(!ev([2, 2, 0]).divides(&ev([1, 3, 5])).unwrap());
        assert_eq!(
            ev([1, 2]).divides(&ev([1, 2, 3])),
            Err(Error::Dimension {
                expected: 2,
                found: 3
            })
        );
    }

    #[test]
    fn lcm_gcd_examples() {
        assert_eq!(ev([2, 0, 2]).lcm(&ev([0, 2, 2])).unwrap(), ev([2, 2, 2]));
        assert_eq!(
            ev([3, 1, 1, 0]).gcd(&ev([1, 1, 0, 2])).unwrap(),
            ev([1, 1, 0, 0])
        );
        assert_eq!(
            ev([4, 0, 7]).lcm(&ExponentVector::zeros(3)).unwrap(),
            ev([4, 0, 7])
        );
        assert!(ev([1]).lcm(&ev([1, 1])).is_err());
        assert!(ev([1]).gcd(&ev([1, 1])).is_err());
    }

    #[test]
    fn minimalize_examples() {
        let out = minimalize(vec![ev([2, 2, 0]), ev([1, 2, 2]), ev([2, 2, 1])]);
        assert_eq!(out, vec![ev([1, 2, 2]), ev([2, 2, 0])]);

        let delta = vec![
            ev([1, 1, 2]),
            ev([1, 2, 1]),
            ev([2, 1, 1]),
            ev([0, 2, 2]),
            ev([2, 0, 2]),
            ev([2, 2, 0]),
        ];
        assert_eq!(minimalize(delta).len(), 6);
        assert!(minimalize(Vec::new()).is_empty());
    }

    #[test]
    fn minimalize_sorts_and_dedups() {
        let out = minimalize(vec![ev([0, 1]), ev([1, 0]), ev([0, 1]), ev([3, 3])]);
        assert_eq!(out, vec![ev([0, 1]), ev([1, 0])]);
    }

    #[test]
    fn unit_and_zero_ideals() {
        let vars = default_vars(2);
        let unit = MonomialIdeal::new(vars.clone(), vec![ev([0, 0]), ev([1, 4])]).unwrap();
        assert!(unit.is_unit());
        assert_eq!(unit, MonomialIdeal::unit(vars.clone()));
        assert!(MonomialIdeal::zero(vars).is_zero());
        assert_eq!(unit.ensure_proper_nonzero(), Err(Error::UnitIdeal));
    }

    #[test]
    fn contains_examples() {
        let i = i32_ideal();
        assert!(i.contains(&ev([1, 3, 5])).unwrap());
        assert!(!i.contains(&ev([1, 1, 2])).unwrap());
        let pair = ideal(3, &[&[2, 0, 0], &[0, 2, 0]]);
        assert!(!pair.contains(&ev([0, 0, 2])).unwrap());
        assert!(i.contains(&ev([1, 1])).is_err());
    }

    #[test]
    fn pair_intersection_gives_family_ideal() {
        let pairs = [
            ideal(3, &[&[2, 0, 0], &[0, 2, 0]]),
            ideal(3, &[&[2, 0, 0], &[0, 0, 2]]),
            ideal(3, &[&[0, 2, 0], &[0, 0, 2]]),
        ];
        let meet = MonomialIdeal::intersect_all(&pairs).unwrap();
        assert_eq!(meet.gens(), &[ev([0, 2, 2]), ev([2, 0, 2]), ev([2, 2, 0])]);
    }

    #[test]
    fn intersect_two_pairs() {
        let a = ideal(3, &[&[2, 0, 0], &[0, 2, 0]]);
        let b = ideal(3, &[&[0, 2, 0], &[0, 0, 2]]);
        let expected = ideal(3, &[&[0, 2, 0], &[2, 0, 2]]);
        let meet = a.intersect(&b).unwrap();
        assert_eq!(meet, expected);
        // Membership oracle on the box [0,4]^3.
        for x in 0..=4u64 {
            for y in 0..=4u64 {
                for z in 0..=4u64 {
                    let m = ev([x, y, z]);
                    let both = a.contains(&m).unwrap() && b.contains(&m).unwrap();
                    assert_eq!(meet.contains(&m).unwrap(), both, "{m}");
                }
            }
        }
    }

    #[test]
    fn sum_with_zero_is_identity() {
        let i = i32_ideal();
        let z = MonomialIdeal::zero(default_vars(3));
        assert_eq!(i.sum(&z).unwrap(), i);
    }

    #[test]
    fn ambient_mismatch_is_reported() {
        let a = i32_ideal();
        let b = MonomialIdeal::new(
            vec!["a".into(), "b".into(), "c".into()],
            vec![ev([1, 0, 0])],
        )
        .unwrap();
        assert!(matches!(a.sum(&b), Err(Error::AmbientMismatch { .. })));
        assert!(matches!(
            a.intersect(&b),
            Err(Error::AmbientMismatch { .. })
        ));
    }

    #[test]
    fn colon_examples() {
        let c = i32_closure();
        assert_eq!(
            c.colon_mon(&ev([1, 1, 1])).unwrap(),
            MonomialIdeal::prime(default_vars(3), &[0, 1, 2])
        );
        assert_eq!(
            c.colon_mon(&ev([0, 1, 2])).unwrap(),
            MonomialIdeal::prime(default_vars(3), &[0, 1])
        );
        assert!(i32_ideal().colon_mon(&ev([2, 2, 0])).unwrap().is_unit());
    }

    #[test]
    fn colon_ideal_examples() {
        let i = i32_ideal();
        assert!(i.colon_ideal(&i).unwrap().is_unit());
        let x1 = ideal(3, &[&[1, 0, 0]]);
        assert_eq!(
            i.colon_ideal(&x1).unwrap(),
            ideal(3, &[&[1, 2, 0], &[1, 0, 2], &[0, 2, 2]])
        );
        let one = MonomialIdeal::unit(default_vars(3));
        assert_eq!(i.colon_ideal(&one).unwrap(), i);
        let zero = MonomialIdeal::zero(default_vars(3));
        assert_eq!(i.colon_ideal(&zero), Err(Error::ZeroDivisor));
    }

    #[test]
    fn colon_ideal_matches_membership_enumeration() {
        let i = i32_ideal();
        let j = ideal(3, &[&[1, 0, 0]]);
        let q = i.colon_ideal(&j).unwrap();
        for x in 0..=4u64 {
            for y in 0..=4u64 {
                for z in 0..=4u64 {
                    let u = ev([x, y, z]);
                    let expected = i.contains(&ev([x + 1, y, z])).unwrap();
                    assert_eq!(q.contains(&u).unwrap(), expected);
                }
            }
        }
    }

    #[test]
    fn radical_examples() {
        let r = i32_ideal().radical();
        assert_eq!(r, ideal(3, &[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]));
        assert_eq!(
            ideal(2, &[&[2, 0], &[0, 3]]).radical(),
            ideal(2, &[&[1, 0], &[0, 1]])
        );
        assert_eq!(r.radical(), r);
    }

    #[test]
    fn display_uses_variable_names() {
        assert_eq!(i32_ideal().to_string(), "<x2^2*x3^2, x1^2*x3^2, x1^2*x2^2>");
        assert_eq!(MonomialIdeal::unit(default_vars(2)).to_string(), "<1>");
    }
}
