use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::modmat::{reduce, Mat2Zn};
use super::Budget;
use crate::arith::{divisors, lcm_u64};
use crate::error::{Error, Result};
use crate::poly::{euler_product, CyclotomicFactors};
use crate::smith::smith_form;
use crate::{IntPolynomial, Mat2, Mat2Z};

/// Cycle structure of `M` acting on `L_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitCensus {
    pub n: u64,
    /// cycle length → number of cycles of that length
    pub cycle_counts: BTreeMap<u64, u64>,
    /// least `m >= 1` with `M^m ≡ 1 (mod n)`, or 0 when `M` is not invertible mod `n`
    pub ord: u64,
    /// lcm of the cycle lengths
    pub per: u64,
    pub invertible: bool,
    pub periodic_point_total: u64,
}

impl OrbitCensus {
    /// Points of `L_n` that lie on pretails rather than on cycles.
    pub fn pretail_points(&self) -> u64 {
        self.n * self.n - self.periodic_point_total
    }

    /// `Z_n(t) = Π_l (1 − t^l)^{c_l}`.
    pub fn zn_poly(&self) -> IntPolynomial {
        euler_product(&self.cycle_counts)
    }

    pub fn zn_degree(&self) -> u64 {
        self.periodic_point_total
    }

    pub fn zn_factors(&self) -> CyclotomicFactors {
        CyclotomicFactors::from_euler(&self.cycle_counts)
    }

    /// JSON record `{n, ord, per, invertible, cycles, zn_poly}`. The
    /// polynomial is expanded only up to `max_poly_degree`, otherwise `null`.
    pub fn to_json(&self, max_poly_degree: u64) -> serde_json::Value {
        let cycles: serde_json::Map<String, serde_json::Value> = self
            .cycle_counts
            .iter()
            .map(|(l, c)| (l.to_string(), serde_json::Value::from(*c)))
            .collect();
        let zn = if self.zn_degree() <= max_poly_degree {
            crate::json::coeff_strings(&self.zn_poly())
        } else {
            serde_json::Value::Null
        };
        serde_json::json!({
            "n": self.n,
            "ord": self.ord,
            "per": self.per,
            "invertible": self.invertible,
            "cycles": cycles,
            "zn_poly": zn,
        })
    }
}

/// Walks every point of `L_n` once and records the cycles it reaches.
pub(super) fn cycle_lengths(m: &Mat2Zn) -> (BTreeMap<u64, u64>, u64) {
    let n = m.modulus();
    let total = (n * n) as usize;
    let step = |i: usize| -> usize {
        let (x, y) = m.apply(i as u64 / n, i as u64 % n);
        (x * n + y) as usize
    };
    let mut walk = vec![0u32; total];
    let mut counts = BTreeMap::new();
    let mut periodic = 0u64;
    let mut id = 0u32;
    for start in 0..total {
        if walk[start] != 0 {
            continue;
        }
        id += 1;
        let mut x = start;
        while walk[x] == 0 {
            walk[x] = id;
            x = step(x);
        }
        if walk[x] == id {
            let mut len = 1u64;
            let mut y = step(x);
            while y != x {
                y = step(y);
                len += 1;
            }
            *counts.entry(len).or_insert(0) += 1;
            periodic += len;
        }
    }
    (counts, periodic)
}

pub fn orbit_census(m: &Mat2Z, n: u64) -> Result<OrbitCensus> {
    orbit_census_with(m, n, Budget::default())
}

/// Full enumeration of the functional graph of `M` on the `n^2` points of `L_n`.
pub fn orbit_census_with(m: &Mat2Z, n: u64, budget: Budget) -> Result<OrbitCensus> {
    budget.check(n)?;
    let mm = reduce(m, n)?;
    let (cycle_counts, periodic_point_total) = cycle_lengths(&mm);
    let per = cycle_counts.keys().fold(1, |acc, &l| lcm_u64(acc, l));
    Ok(OrbitCensus {
        n,
        ord: ord_reduced(&mm)?,
        per,
        invertible: mm.is_invertible(),
        cycle_counts,
        periodic_point_total,
    })
}

fn ord_reduced(mm: &Mat2Zn) -> Result<u64> {
    if !mm.is_invertible() {
        return Ok(0);
    }
    let n = mm.modulus();
    // element orders in GL(2, Z/nZ) are below n^2
    let bound = n * n;
    let mut p = *mm;
    let mut k = 1;
    while !p.is_identity() {
        if k >= bound {
            return Err(Error::Verification(format!("order of {mm} mod {n} exceeds {bound}")));
        }
        p = p.mul(mm);
        k += 1;
    }
    Ok(k)
}

/// Order of `M` in `GL(2, Z/nZ)`, or 0 when `M` is not invertible mod `n`.
pub fn ord(m: &Mat2Z, n: u64) -> Result<u64> {
    ord_reduced(&reduce(m, n)?)
}

/// `a_m^{(n)} = #{x ∈ L_n : M^m x = x}`, read off the Smith form of
/// `M^m − 1` as `gcd(d1, n) · gcd(d2, n)`.
pub fn fixed_count_mod(m: &Mat2Z, power: u64, n: impl Into<BigInt>) -> Result<BigInt> {
    let n: BigInt = n.into();
    if power < 1 {
        return Err(Error::Precondition("power must be at least 1".into()));
    }
    if !n.is_positive() {
        return Err(Error::Precondition(format!("modulus must be positive, got {n}")));
    }
    if n.is_one() {
        return Ok(BigInt::one());
    }
    let b = m.pow_mod(power, &n) - Mat2::identity();
    Ok(smith_form(&b).kernel_count_mod(&n))
}

fn fixed_count_small(p: &Mat2Zn) -> u64 {
    let n = p.modulus() as i128;
    let [a, b, c, d] = p.entries().map(|x| x as i128);
    let s = smith_form(&Mat2::new(a - 1, b, c, d - 1));
    s.kernel_count_mod(&n) as u64
}

/// Least `q` with `a_{m+q}^{(n)} = a_m^{(n)}` for all `m`; divides `ord(M, n)`.
pub fn minimal_count_period(m: &Mat2Z, n: u64) -> Result<u64> {
    let mm = reduce(m, n)?;
    if !mm.is_invertible() {
        return Err(Error::NotInvertibleMod(n));
    }
    let order = ord_reduced(&mm)?;
    let mut counts = Vec::with_capacity(order as usize);
    let mut p = mm;
    for _ in 0..order {
        counts.push(fixed_count_small(&p));
        p = p.mul(&mm);
    }
    let len = counts.len();
    let q = divisors(order)
        .into_iter()
        .find(|&q| (0..len).all(|i| counts[i] == counts[(i + q as usize) % len]))
        .expect("the order itself is a period");
    Ok(q)
}

/// Cyclotomic factorisation of `lcm{Z_1, ..., Z_{n_max}}`.
pub fn direct_limit_factors(m: &Mat2Z, n_max: u64, budget: Budget) -> Result<CyclotomicFactors> {
    budget.check(n_max)?;
    // Z_1 = 1 − t: the origin is the only point of L_1
    let mut acc = CyclotomicFactors::from_euler(&BTreeMap::from([(1, 1)]));
    for n in 2..=n_max {
        let census = orbit_census_with(m, n, budget)?;
        acc = acc.lcm(&census.zn_factors());
    }
    Ok(acc)
}

/// `lcm{Z_1(t), ..., Z_{n_max}(t)}` in `Z[t]`, normalised to constant term 1.
pub fn direct_limit_lcm(m: &Mat2Z, n_max: u64, budget: Budget) -> Result<IntPolynomial> {
    Ok(direct_limit_factors(m, n_max, budget)?.expand())
}
