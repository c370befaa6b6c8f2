//! Integral closure of monomial ideals.
//!
//! The closure of a monomial ideal is generated by the lattice points of its
//! Newton polyhedron `conv(gens) + R^n_{≥0}`. Membership is decided by an
//! exact phase-1 simplex and returned with a certificate that can be checked
//! by plain arithmetic. Minimal generators of the closure lie in the box
//! spanned by the componentwise maximum of the generators: if a point of the
//! polyhedron exceeds that maximum in some coordinate, lowering that
//! coordinate by one keeps it inside.

use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::ideal::{minimalize, ExponentVector, MonomialIdeal};
use crate::lp::{phase_one, Phase1};

pub const DEFAULT_BOX_BUDGET: u64 = 10_000_000;
pub const POWER_WITNESS_CAP: u64 = 64;

/// Convex weights, one per generator of the ideal (in canonical order).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalWeights(Vec<BigRational>);

impl RationalWeights {
    pub fn new(weights: Vec<BigRational>) -> Self {
        Self(weights)
    }

    pub fn as_slice(&self) -> &[BigRational] {
        &self.0
    }

    pub fn is_convex(&self) -> bool {
        self.0.iter().all(|w| !w.is_negative())
            && self.0.iter().sum::<BigRational>() == BigRational::one()
    }

    /// Least common multiple of the weights' denominators.
    pub fn common_denominator(&self) -> BigInt {
        self.0
            .iter()
            .fold(BigInt::one(), |acc, w| acc.lcm(w.denom()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MembershipCertificate {
    /// `Σ weights_i · g_i + slack = a` with `slack ≥ 0`.
    Inside {
        weights: RationalWeights,
        slack: Vec<BigRational>,
    },
    /// `w ≥ 0` and `w · a < min_g w · g`.
    Outside { functional: Vec<BigRational> },
}

impl MembershipCertificate {
    pub fn is_inside(&self) -> bool {
        matches!(self, MembershipCertificate::Inside { .. })
    }
}

fn rat(v: &BigUint) -> BigRational {
    BigRational::from_integer(BigInt::from(v.clone()))
}

fn dot(w: &[BigRational], v: &ExponentVector) -> BigRational {
    w.iter()
        .zip(v.coords())
        .filter(|(_, c)| !c.is_zero())
        .map(|(x, c)| x * rat(c))
        .sum()
}

/// Scale a non-negative rational vector to the primitive integer vector on
/// the same ray.
fn primitive(v: Vec<BigRational>) -> Vec<BigRational> {
    let den = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * &den).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return v;
    }
    ints.into_iter()
        .map(|x| BigRational::from_integer(x / &g))
        .collect()
}

fn check_dims(ideal: &MonomialIdeal, a: &ExponentVector) -> Result<()> {
    if a.len() != ideal.nvars() {
        return Err(Error::Dimension {
            expected: ideal.nvars(),
            found: a.len(),
        });
    }
    Ok(())
}

/// Decide whether `a` lies in the Newton polyhedron of `ideal`.
pub fn np_membership(ideal: &MonomialIdeal, a: &ExponentVector) -> Result<MembershipCertificate> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    check_dims(ideal, a)?;
    let gens = ideal.gens();

    if let Some(pos) = gens.iter().position(|g| g.divides_unchecked(a)) {
        let mut weights = vec![BigRational::zero(); gens.len()];
        weights[pos] = BigRational::one();
        let slack = a
            .coords()
            .iter()
            .zip(gens[pos].coords())
            .map(|(x, g)| rat(&(x - g)))
            .collect();
        return Ok(MembershipCertificate::Inside {
            weights: RationalWeights(weights),
            slack,
        });
    }

    let cert = match phase_one(gens, a) {
        Phase1::Feasible(weights) => {
            let slack = (0..a.len())
                .map(|j| {
                    let used: BigRational = weights
                        .iter()
                        .zip(gens)
                        .map(|(w, g)| w * rat(g.get(j)))
                        .sum();
                    rat(a.get(j)) - used
                })
                .collect();
            MembershipCertificate::Inside {
                weights: RationalWeights(weights),
                slack,
            }
        }
        Phase1::Infeasible(functional) => MembershipCertificate::Outside {
            functional: primitive(functional),
        },
    };
    if !verify_certificate(ideal, a, &cert) {
        return Err(Error::Domain(format!(
            "internal error: membership certificate for {a} failed verification"
        )));
    }
    Ok(cert)
}

/// Re-check a certificate with plain arithmetic.
pub fn verify_certificate(
    ideal: &MonomialIdeal,
    a: &ExponentVector,
    cert: &MembershipCertificate,
) -> bool {
    let gens = ideal.gens();
    let n = ideal.nvars();
    if gens.is_empty() || a.len() != n {
        return false;
    }
    match cert {
        MembershipCertificate::Inside { weights, slack } => {
            if weights.0.len() != gens.len() || slack.len() != n || !weights.is_convex() {
                return false;
            }
            if slack.iter().any(Signed::is_negative) {
                return false;
            }
            (0..n).all(|j| {
                let combo: BigRational = weights
                    .0
                    .iter()
                    .zip(gens)
                    .map(|(w, g)| w * rat(g.get(j)))
                    .sum();
                combo + &slack[j] == rat(a.get(j))
            })
        }
        MembershipCertificate::Outside { functional } => {
            if functional.len() != n || functional.iter().any(Signed::is_negative) {
                return false;
            }
            let at_point = dot(functional, a);
            gens.iter().all(|g| at_point < dot(functional, g))
        }
    }
}

/// Componentwise maximum of the generators.
pub fn bounding_box(ideal: &MonomialIdeal) -> Result<ExponentVector> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    Ok(ideal.lcm_of_gens())
}

pub fn closure_generators(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    closure_generators_with_budget(ideal, DEFAULT_BOX_BUDGET)
}

/// Minimal generators of the integral closure, found by walking the lattice
/// points of the bounding box in lexicographic order.
///
/// A divisor of a point precedes it in that order, so a point divisible by an
/// already accepted generator is skipped, and every accepted point is
/// minimal. `budget` caps the number of lattice points in the box.
pub fn closure_generators_with_budget(ideal: &MonomialIdeal, budget: u64) -> Result<MonomialIdeal> {
    ideal.ensure_proper_nonzero()?;
    let upper = bounding_box(ideal)?;
    let points: BigUint = upper.coords().iter().map(|c| c + 1u32).product();
    if points > BigUint::from(budget) {
        return Err(Error::Budget {
            what: "lattice-point box",
            limit: budget,
        });
    }
    let bounds: Vec<u64> = upper
        .coords()
        .iter()
        .map(|c| c.to_u64().expect("box within budget"))
        .collect();

    let mut kept: Vec<ExponentVector> = Vec::new();
    for point in LatticeBox::new(bounds) {
        let p = ExponentVector::from_u64s(&point);
        if kept.iter().any(|k| k.divides_unchecked(&p)) {
            continue;
        }
        if ideal.contains_unchecked(&p) || in_newton_polyhedron(ideal, &p) {
            kept.push(p);
        }
    }
    Ok(MonomialIdeal::from_minimal(ideal.vars().to_vec(), kept))
}

fn in_newton_polyhedron(ideal: &MonomialIdeal, p: &ExponentVector) -> bool {
    matches!(phase_one(ideal.gens(), p), Phase1::Feasible(_))
}

pub fn is_integrally_closed(ideal: &MonomialIdeal) -> Result<bool> {
    Ok(&closure_generators(ideal)? == ideal)
}

/// Lattice points `0 ≤ p ≤ bounds` in lexicographic order.
#[derive(Clone, Debug)]
pub struct LatticeBox {
    bounds: Vec<u64>,
    next: Option<Vec<u64>>,
}

impl LatticeBox {
    pub fn new(bounds: Vec<u64>) -> Self {
        let next = Some(vec![0; bounds.len()]);
        Self { bounds, next }
    }
}

impl Iterator for LatticeBox {
    type Item = Vec<u64>;

    fn next(&mut self) -> Option<Vec<u64>> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let mut i = succ.len();
        while i > 0 {
            i -= 1;
            if succ[i] < self.bounds[i] {
                succ[i] += 1;
                self.next = Some(succ);
                return Some(current);
            }
            succ[i] = 0;
        }
        Some(current)
    }
}

/// Smallest `k ≤ k_max` with `x^{k·a} ∈ I^k`, if any.
///
/// This is an arithmetic route to closure membership independent of the LP:
/// the generators of `I^k` are built as minimalized sums of `k` generators.
pub fn power_witness(ideal: &MonomialIdeal, a: &ExponentVector, k_max: u64) -> Result<Option<u64>> {
    check_dims(ideal, a)?;
    if ideal.is_zero() || k_max == 0 {
        return Ok(None);
    }
    let gens = ideal.gens();
    let mut power: Vec<ExponentVector> = gens.to_vec();
    for k in 1..=k_max {
        let target = a.scale(k);
        if power.iter().any(|g| g.divides_unchecked(&target)) {
            return Ok(Some(k));
        }
        if k == k_max {
            break;
        }
        // A sum that is positive where `a` vanishes can never divide a
        // multiple of `a`.
        let next: BTreeSet<ExponentVector> = power
            .iter()
            .flat_map(|p| gens.iter().map(move |g| p.mul(g).expect("same length")))
            .filter(|s| {
                s.coords()
                    .iter()
                    .zip(a.coords())
                    .all(|(x, y)| !y.is_zero() || x.is_zero())
            })
            .collect();
        power = minimalize(next);
        if power.is_empty() {
            return Ok(None);
        }
    }
    Ok(None)
}

/// Default search bound for [`power_witness`]: the certificate's common
/// denominator, capped.
pub fn default_power_bound(cert: &MembershipCertificate) -> u64 {
    match cert {
        MembershipCertificate::Inside { weights, .. } => weights
            .common_denominator()
            .to_u64()
            .map_or(POWER_WITNESS_CAP, |d| d.min(POWER_WITNESS_CAP)),
        MembershipCertificate::Outside { .. } => POWER_WITNESS_CAP,
    }
}
