//! Structure of the finite Abelian group `fix_m(M) = ker(M^m − 1)` on the
//! torus, read off from fixed-point counts on the lattices `L_{p^r}`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::Value;

use crate::arith::{factorize, valuation};
use crate::counts::fixed_count;
use crate::error::{Error, Result};
use crate::lattice::fixed_count_mod;
use crate::smith::smith_form;
use crate::Mat2Z;

/// `⊕ Z/p^ℓ`, stored as the sorted list of prime powers `p^ℓ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AbelianType {
    pub elementary_divisors: Vec<BigInt>,
    pub order: BigInt,
}

impl AbelianType {
    pub fn new(mut elementary_divisors: Vec<BigInt>) -> Self {
        elementary_divisors.sort();
        let order = elementary_divisors.iter().product();
        AbelianType { elementary_divisors, order }
    }

    pub fn trivial() -> Self {
        AbelianType::new(Vec::new())
    }

    pub fn is_trivial(&self) -> bool {
        self.elementary_divisors.is_empty()
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.elementary_divisors.iter().map(crate::json::int).collect())
    }
}

impl fmt::Display for AbelianType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.elementary_divisors.iter().map(|q| format!("Z/{q}")).collect();
        f.write_str(&parts.join(" ⊕ "))
    }
}

fn require_hyperbolic(m: &Mat2Z, power: u64) -> Result<BigInt> {
    if power == 0 {
        return Err(Error::Precondition("power must be at least 1".into()));
    }
    if !m.is_hyperbolic() {
        return Err(Error::NotHyperbolic);
    }
    let a = fixed_count(m, power).value;
    if a.is_zero() {
        return Err(Error::Precondition(format!("{m}^{power} has non-isolated fixed points")));
    }
    Ok(a)
}

/// `g(p^r) = |fix_m(M) ∩ L_{p^r}|` for `r = 0..=r_max`.
pub fn fix_group_order_chain(m: &Mat2Z, power: u64, p: u64, r_max: u32) -> Result<Vec<BigInt>> {
    require_hyperbolic(m, power)?;
    chain(m, power, &BigInt::from(p), r_max)
}

fn chain(m: &Mat2Z, power: u64, p: &BigInt, r_max: u32) -> Result<Vec<BigInt>> {
    let mut out = vec![BigInt::one()];
    let mut q = BigInt::one();
    for _ in 1..=r_max {
        q *= p;
        out.push(fixed_count_mod(m, power, q.clone())?);
    }
    Ok(out)
}

/// Elementary divisors of `fix_m(M)` from lattice counts alone: the number of
/// summands `Z/p^r` is `2 t_r − t_{r−1} − t_{r+1}` with `g(p^r) = p^{t_r}`.
pub fn elementary_divisors_from_counts(m: &Mat2Z, power: u64) -> Result<AbelianType> {
    let a = require_hyperbolic(m, power)?;
    let mut divisors = Vec::new();
    for (p, e) in factorize(&a) {
        // the p-part of the group has order p^e, so g stabilises by r = e
        let g = chain(m, power, &p, e + 1)?;
        let t: Vec<i64> = g
            .iter()
            .map(|v| valuation(v, &p).map(i64::from).ok_or_else(|| bad_chain(&p, v)))
            .collect::<Result<_>>()?;
        if t[e as usize] != e as i64 {
            return Err(Error::Verification(format!("chain for p = {p} stops at p^{}", t[e as usize])));
        }
        for r in 1..=e as usize {
            let mult = 2 * t[r] - t[r - 1] - t[r + 1];
            if mult < 0 {
                return Err(Error::Verification(format!("negative multiplicity at {p}^{r}")));
            }
            let q = num_traits::pow(p.clone(), r);
            divisors.extend(std::iter::repeat_n(q, mult as usize));
        }
    }
    Ok(AbelianType::new(divisors))
}

fn bad_chain(p: &BigInt, v: &BigInt) -> Error {
    Error::Verification(format!("lattice count {v} is not a power of {p}"))
}

/// Independent route: `fix_m(M) ≅ Z/d1 ⊕ Z/d2` for the Smith form of `M^m − 1`.
pub fn elementary_divisors_oracle(m: &Mat2Z, power: u64) -> Result<AbelianType> {
    require_hyperbolic(m, power)?;
    let b = m.power(power as i64)? - Mat2Z::identity();
    let s = smith_form(&b);
    let mut divisors = Vec::new();
    for d in [s.d1, s.d2] {
        for (p, e) in factorize(&d) {
            divisors.push(num_traits::pow(p, e as usize));
        }
    }
    Ok(AbelianType::new(divisors))
}
