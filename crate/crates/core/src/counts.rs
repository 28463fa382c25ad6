//! Global fixed-point and periodic-orbit counts on the torus.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::arith::{divisors, mobius};
use crate::pseq::PSequence;
use crate::Mat2Z;

/// Number of isolated fixed points of `M^m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedCount {
    pub value: BigInt,
    /// `det(M^m − 1) = 0`: fixed points form subtori, none is isolated.
    pub subtorus: bool,
}

/// `|det(M^m − 1)|` from the p-sequence, valid for every `m >= 1`.
pub fn fixed_count(m: &Mat2Z, power: u64) -> FixedCount {
    assert!(power >= 1, "fixed_count needs m >= 1");
    let det = m.det();
    let trace = m.trace();
    let k = power as i64;
    let value = if det.is_zero() {
        BigInt::from(1) - num_traits::pow(trace, power as usize)
    } else {
        // det(M^m − 1) = −p_{m+1} + D p_{m−1} + D^m + 1
        let seq = PSequence::new(det.clone(), trace, k - 1, k + 1).expect("non-singular");
        let p_next = seq.get_integer(k + 1).expect("integral");
        let p_prev = seq.get_integer(k - 1).expect("integral");
        -p_next + det.clone() * p_prev + num_traits::pow(det, power as usize) + 1
    };
    let value = value.abs();
    FixedCount { subtorus: value.is_zero(), value }
}

/// Fixed-point and orbit counts for `m = 1..=K`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountsTable {
    /// `a[m-1] = a_m`.
    pub fixed: Vec<BigInt>,
    /// `c[m-1] = c_m`.
    pub orbits: Vec<BigInt>,
    pub subtorus: Vec<bool>,
}

impl CountsTable {
    pub fn for_matrix(m: &Mat2Z, k: usize) -> Self {
        let counts: Vec<FixedCount> = (1..=k as u64).map(|p| fixed_count(m, p)).collect();
        let fixed: Vec<BigInt> = counts.iter().map(|c| c.value.clone()).collect();
        let orbits = orbit_counts_from_fixed(&fixed)
            .into_iter()
            .map(|c| c.expect("counts of a matrix are realisable"))
            .collect();
        CountsTable { subtorus: counts.iter().map(|c| c.subtorus).collect(), fixed, orbits }
    }
}

/// `c_m = (1/m) Σ_{d|m} μ(m/d) a_d` as an exact rational.
pub fn orbit_count_rational(a: &[BigInt], m: usize) -> BigRational {
    let sum: BigInt = divisors(m as u64)
        .into_iter()
        .map(|d| BigInt::from(mobius(m as u64 / d)) * &a[d as usize - 1])
        .sum();
    BigRational::new(sum, BigInt::from(m))
}

/// Möbius inversion of fixed-point counts (indexed from 1). Entry `m` is
/// `Err(c_m)` with the exact rational when `c_m` is not an integer.
pub fn orbit_counts_from_fixed(a: &[BigInt]) -> Vec<Result<BigInt, BigRational>> {
    (1..=a.len())
        .map(|m| {
            let c = orbit_count_rational(a, m);
            if c.is_integer() {
                Ok(c.to_integer())
            } else {
                Err(c)
            }
        })
        .collect()
}

/// `a_m = Σ_{d|m} d c_d`.
pub fn fixed_from_orbit(c: &[BigInt]) -> Vec<BigInt> {
    (1..=c.len() as u64)
        .map(|m| divisors(m).into_iter().map(|d| BigInt::from(d) * &c[d as usize - 1]).sum())
        .collect()
}

/// Outcome of the exact realisability test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Realizability {
    pub realizable: bool,
    /// First index `m` whose `c_m` is negative or non-integral.
    pub first_failure: Option<usize>,
}

pub fn is_exactly_realizable(a: &[BigInt]) -> Realizability {
    for m in 1..=a.len() {
        let c = orbit_count_rational(a, m);
        if !c.is_integer() || c.is_negative() {
            return Realizability { realizable: false, first_failure: Some(m) };
        }
    }
    Realizability { realizable: true, first_failure: None }
}
