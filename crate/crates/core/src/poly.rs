//! Dense univariate polynomials in a formal variable `t`, also used as
//! truncated power series.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{divisors, mobius};
use crate::scalar::ExactDiv;

/// Coefficients indexed by degree; trailing zeros are trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Clone + Zero + One + PartialEq> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly { coeffs: vec![T::one()] }
    }

    pub fn constant(c: T) -> Self {
        Poly::new(vec![c])
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    /// Keep only the terms of degree `<= k`.
    pub fn truncate(&self, k: usize) -> Self {
        Poly::new(self.coeffs.iter().take(k + 1).cloned().collect())
    }

    /// Coefficients `0..=k`, zero-padded.
    pub fn padded(&self, k: usize) -> Vec<T> {
        (0..=k).map(|i| self.coeff(i)).collect()
    }

    pub fn map<U: Clone + Zero + One + PartialEq, F: Fn(&T) -> U>(&self, f: F) -> Poly<U> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }
}

impl<T> Poly<T>
where
    T: Clone + Zero + One + PartialEq + Sub<Output = T> + Mul<Output = T> + Neg<Output = T>,
{
    /// `1 − t^l`.
    pub fn one_minus_power(l: usize) -> Self {
        let mut c = vec![T::zero(); l + 1];
        c[0] = T::one();
        c[l] = c[l].clone() - T::one();
        Poly::new(c)
    }

    /// Multiply in place by `(1 − t^l)`.
    pub fn mul_one_minus_power(&mut self, l: usize) {
        if self.is_zero() {
            return;
        }
        let old = self.coeffs.len();
        self.coeffs.resize(old + l, T::zero());
        for i in (l..old + l).rev() {
            let v = self.coeffs[i].clone() - self.coeffs[i - l].clone();
            self.coeffs[i] = v;
        }
        let trimmed = Poly::new(std::mem::take(&mut self.coeffs));
        *self = trimmed;
    }

    /// Product truncated at degree `k`.
    pub fn mul_trunc(&self, other: &Self, k: usize) -> Self {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let len = (self.coeffs.len() + other.coeffs.len() - 1).min(k + 1);
        let mut out = vec![T::zero(); len];
        for (i, x) in self.coeffs.iter().enumerate().take(len) {
            if x.is_zero() {
                continue;
            }
            for (j, y) in other.coeffs.iter().enumerate().take(len - i) {
                out[i + j] = out[i + j].clone() + x.clone() * y.clone();
            }
        }
        Poly::new(out)
    }

    pub fn pow(&self, e: u64) -> Self {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn eval(&self, x: &T) -> T {
        self.coeffs.iter().rev().fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }
}

impl<T> Poly<T>
where
    T: Clone + Zero + One + PartialEq + Sub<Output = T> + Mul<Output = T> + Neg<Output = T> + ExactDiv,
{
    /// Long division; `None` if some quotient coefficient is not exact in `T`
    /// (or the divisor is zero).
    pub fn div_rem(&self, divisor: &Self) -> Option<(Self, Self)> {
        let dd = divisor.degree()?;
        let lead = divisor.leading()?.clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Some((Poly::zero(), self.clone()));
        }
        let mut quot = vec![T::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let top = rem[i + dd].clone();
            if top.is_zero() {
                continue;
            }
            let q = top.exact_div(&lead)?;
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[i + j] = rem[i + j].clone() - q.clone() * dc.clone();
            }
            quot[i] = q;
        }
        Some((Poly::new(quot), Poly::new(rem)))
    }

    /// Exact quotient if `divisor` divides `self` in `T[t]`.
    pub fn exact_quotient(&self, divisor: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(divisor)?;
        r.is_zero().then_some(q)
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.exact_quotient(self).is_some()
    }

    /// Power-series quotient `self / den` up to degree `k`; needs `den(0)`
    /// to be invertible in `T` for every step.
    pub fn series_div(&self, den: &Self, k: usize) -> Option<Self> {
        let d0 = den.coeffs.first()?.clone();
        let mut out: Vec<T> = Vec::with_capacity(k + 1);
        for i in 0..=k {
            let mut acc = self.coeff(i);
            for j in 1..=i.min(den.coeffs.len().saturating_sub(1)) {
                acc = acc - den.coeffs[j].clone() * out[i - j].clone();
            }
            out.push(acc.exact_div(&d0)?);
        }
        Some(Poly::new(out))
    }
}

impl<T> Add for &Poly<T>
where
    T: Clone + Zero + One + PartialEq,
{
    type Output = Poly<T>;
    fn add(self, o: &Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }
}

impl<T> Sub for &Poly<T>
where
    T: Clone + Zero + One + PartialEq + Sub<Output = T>,
{
    type Output = Poly<T>;
    fn sub(self, o: &Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }
}

impl<T> Mul for &Poly<T>
where
    T: Clone + Zero + One + PartialEq + Sub<Output = T> + Mul<Output = T> + Neg<Output = T>,
{
    type Output = Poly<T>;
    fn mul(self, o: &Poly<T>) -> Poly<T> {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let k = self.coeffs.len() + o.coeffs.len() - 2;
        self.mul_trunc(o, k)
    }
}

impl<T: fmt::Display + Zero> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})t")?,
                _ => write!(f, "({c})t^{i}")?,
            }
        }
        Ok(())
    }
}

/// Integer polynomial with the product `Π (1 − t^l)^{e_l}`.
pub fn euler_product(exponents: &BTreeMap<u64, u64>) -> Poly<BigInt> {
    let mut p = Poly::one();
    for (&l, &e) in exponents {
        for _ in 0..e {
            p.mul_one_minus_power(l as usize);
        }
    }
    p
}

/// `Φ_d` normalised to constant term 1, so `Φ_1 = 1 − t` and
/// `Π_{d | l} Φ_d = 1 − t^l`.
pub fn cyclotomic(d: u64) -> Poly<BigInt> {
    assert!(d >= 1);
    // Φ_d(t) = Π_{k | d} (1 − t^k)^{μ(d/k)}, up to sign fixed by constant term
    let mut num = Poly::one();
    let mut den = Poly::one();
    for k in divisors(d) {
        match mobius(d / k) {
            1 => num.mul_one_minus_power(k as usize),
            -1 => den.mul_one_minus_power(k as usize),
            _ => {}
        }
    }
    num.exact_quotient(&den).expect("cyclotomic division is exact")
}

/// A polynomial `Π_d Φ_d^{e_d}` (constant term 1) stored by exponents.
/// Integer polynomials with constant term 1 whose roots are roots of unity
/// factor uniquely this way, which makes gcd/lcm/divisibility exact
/// exponent comparisons.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CyclotomicFactors {
    pub exponents: BTreeMap<u64, u64>,
}

impl CyclotomicFactors {
    /// Factorisation of `Π_l (1 − t^l)^{c_l}`.
    pub fn from_euler(cycle_counts: &BTreeMap<u64, u64>) -> Self {
        let mut exponents = BTreeMap::new();
        for (&l, &c) in cycle_counts {
            if c == 0 {
                continue;
            }
            for d in divisors(l) {
                *exponents.entry(d).or_insert(0) += c;
            }
        }
        CyclotomicFactors { exponents }
    }

    pub fn exponent(&self, d: u64) -> u64 {
        self.exponents.get(&d).copied().unwrap_or(0)
    }

    pub fn lcm(&self, other: &Self) -> Self {
        let mut exponents = self.exponents.clone();
        for (&d, &e) in &other.exponents {
            let slot = exponents.entry(d).or_insert(0);
            *slot = (*slot).max(e);
        }
        CyclotomicFactors { exponents }
    }

    /// `self | other` in `Z[t]`.
    pub fn divides(&self, other: &Self) -> bool {
        self.exponents.iter().all(|(&d, &e)| other.exponent(d) >= e)
    }

    pub fn degree(&self) -> u64 {
        self.exponents.iter().map(|(&d, &e)| totient(d) * e).sum()
    }

    pub fn expand(&self) -> Poly<BigInt> {
        let mut p = Poly::one();
        for (&d, &e) in &self.exponents {
            let phi = cyclotomic(d);
            for _ in 0..e {
                p = &p * &phi;
            }
        }
        p
    }
}

fn totient(n: u64) -> u64 {
    crate::arith::factorize_u64(n)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1))
}
