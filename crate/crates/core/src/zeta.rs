//! Dynamical zeta functions `ζ_M(t) = exp(Σ a_m t^m / m)` of toral
//! endomorphisms, as exact series and, for the covered matrix classes, as
//! quotients of integer polynomials.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Float, One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::counts::fixed_count;
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::{IntPolynomial, Mat2Z, RationalSeries};

/// Which closed formula produced a zeta function.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ZetaCase {
    HyperbolicGl2,
    Singular,
    ScalarLike,
    UpperTriangular,
    SeriesOnly,
}

impl fmt::Display for ZetaCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ZetaCase::HyperbolicGl2 => "hyperbolic-gl2",
            ZetaCase::Singular => "singular",
            ZetaCase::ScalarLike => "scalar-like",
            ZetaCase::UpperTriangular => "upper-triangular",
            ZetaCase::SeriesOnly => "series-only",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedForm {
    pub numerator: IntPolynomial,
    pub denominator: IntPolynomial,
}

/// A zeta function tagged with its case; `closed_form` is `None` exactly
/// for [`ZetaCase::SeriesOnly`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalZeta {
    pub case: ZetaCase,
    pub closed_form: Option<ClosedForm>,
}

fn zp(v: &[BigInt]) -> IntPolynomial {
    Poly::new(v.to_vec())
}

/// `1 − k t`.
fn linear(k: &BigInt) -> IntPolynomial {
    zp(&[BigInt::one(), -k.clone()])
}

impl RationalZeta {
    fn closed(case: ZetaCase, numerator: IntPolynomial, denominator: IntPolynomial) -> Self {
        RationalZeta { case, closed_form: Some(ClosedForm { numerator, denominator }) }
    }

    pub fn numerator(&self) -> Option<&IntPolynomial> {
        self.closed_form.as_ref().map(|c| &c.numerator)
    }

    pub fn denominator(&self) -> Option<&IntPolynomial> {
        self.closed_form.as_ref().map(|c| &c.denominator)
    }

    /// Taylor coefficients up to `t^k` of the closed form.
    pub fn taylor(&self, k: usize) -> Option<IntPolynomial> {
        let cf = self.closed_form.as_ref()?;
        cf.numerator.series_div(&cf.denominator, k)
    }

    pub fn to_json(&self) -> serde_json::Value {
        use crate::json::coeff_strings;
        match &self.closed_form {
            Some(cf) => serde_json::json!({
                "case": self.case.to_string(),
                "numerator": coeff_strings(&cf.numerator),
                "denominator": coeff_strings(&cf.denominator),
            }),
            None => serde_json::Value::Null,
        }
    }
}

fn sgn(x: &BigInt) -> BigInt {
    x.signum()
}

/// Closed form of `ζ_M` for hyperbolic `GL(2,Z)` matrices, singular
/// matrices, `k·1` and `[[k,b],[0,k]]`, and non-singular triangular
/// matrices. Everything else is [`ZetaCase::SeriesOnly`].
pub fn zeta_closed_form(m: &Mat2Z) -> RationalZeta {
    let det = m.det();
    let trace = m.trace();
    let one = BigInt::one();

    if det.is_zero() {
        if trace.is_one() {
            // subtori of fixed points for every power
            return RationalZeta::closed(ZetaCase::Singular, Poly::one(), Poly::one());
        }
        if trace.is_zero() {
            // only the origin is fixed, for every power
            return RationalZeta::closed(ZetaCase::Singular, Poly::one(), linear(&one));
        }
        return RationalZeta::closed(
            ZetaCase::Singular,
            linear(&sgn(&trace)),
            linear(&trace.abs()),
        );
    }

    // triangular shapes; a lower triangular matrix has the zeta function of its transpose
    let tri = if m.c.is_zero() {
        Some(m.clone())
    } else if m.b.is_zero() {
        Some(m.transpose())
    } else {
        None
    };
    if let Some(u) = tri {
        if u.a == u.d {
            // (1 − k t)^2 / ((1 − t)(1 − k^2 t))
            let k = u.a.clone();
            let num = &linear(&k) * &linear(&k);
            let den = &linear(&one) * &linear(&(k.clone() * k));
            return RationalZeta::closed(ZetaCase::ScalarLike, num, den);
        }
        let delta = sgn(&det);
        let num = &linear(&(delta.clone() * u.a.clone())) * &linear(&(delta.clone() * u.d.clone()));
        let den = &linear(&delta) * &linear(&(delta.clone() * det.clone()));
        return RationalZeta::closed(ZetaCase::UpperTriangular, num, den);
    }

    if det.abs().is_one() && m.is_hyperbolic() {
        let sigma = sgn(&trace);
        let num = &linear(&sigma) * &linear(&(sigma.clone() * det.clone()));
        let den = zp(&[one, -trace.abs(), det]);
        return RationalZeta::closed(ZetaCase::HyperbolicGl2, num, den);
    }

    RationalZeta { case: ZetaCase::SeriesOnly, closed_form: None }
}

/// Exact Taylor coefficients `z_0..z_K` of `exp(Σ_{m<=K} a_m t^m / m)`,
/// via `k z_k = Σ_{j=1}^{k} a_j z_{k−j}`.
pub fn zeta_series_from_counts(a: &[BigInt], k: usize) -> RationalSeries {
    assert!(a.len() >= k, "need a_1..a_K");
    let mut z: Vec<BigRational> = vec![BigRational::one()];
    for i in 1..=k {
        let mut acc = BigRational::zero();
        for j in 1..=i {
            acc += BigRational::from_integer(a[j - 1].clone()) * &z[i - j];
        }
        z.push(acc / BigRational::from_integer(BigInt::from(i)));
    }
    Poly::new(z)
}

/// Taylor coefficients of `ζ_M` up to `t^K`. Subtorus counts enter as 0.
pub fn zeta_series(m: &Mat2Z, k: usize) -> RationalSeries {
    let a: Vec<BigInt> = (1..=k as u64).map(|p| fixed_count(m, p).value).collect();
    zeta_series_from_counts(&a, k)
}

/// Integer coefficients of a series, if all are integral.
pub fn integer_series(s: &RationalSeries) -> Option<IntPolynomial> {
    let mut out = Vec::with_capacity(s.coeffs().len());
    for c in s.coeffs() {
        if !c.is_integer() {
            return None;
        }
        out.push(c.to_integer());
    }
    Some(Poly::new(out))
}

/// `Π_{m<=K} (1 − t^m)^{c_m}` truncated at degree `K`.
pub fn euler_product_inverse(c: &[BigInt], k: usize) -> IntPolynomial {
    let mut acc: IntPolynomial = Poly::one();
    for (idx, cm) in c.iter().enumerate().take(k) {
        let m = idx + 1;
        if cm.is_zero() {
            continue;
        }
        // (1 − t^m)^c = Σ_j binom(c, j) (−1)^j t^{mj}
        let mut factor = vec![BigInt::zero(); k + 1];
        let mut binom = BigInt::one();
        let mut j = 0usize;
        while m * j <= k {
            factor[m * j] = if j.is_multiple_of(2) { binom.clone() } else { -binom.clone() };
            binom = binom * (cm - BigInt::from(j)) / BigInt::from(j + 1);
            j += 1;
            if binom.is_zero() {
                break;
            }
        }
        acc = acc.mul_trunc(&Poly::new(factor), k);
    }
    acc
}

fn poly_gcd_rational(a: &RationalSeries, b: &RationalSeries) -> RationalSeries {
    let (mut x, mut y) = (a.clone(), b.clone());
    while !y.is_zero() {
        let (_, r) = x.div_rem(&y).expect("field division");
        x = std::mem::replace(&mut y, r);
    }
    x
}

/// Modulus of the denominator root closest to 0, after cancelling common
/// factors with the numerator. Accurate to about 1e-12 in `f64`.
pub fn radius_of_convergence<F: Float>(z: &RationalZeta) -> Result<F> {
    let cf = z
        .closed_form
        .as_ref()
        .ok_or_else(|| Error::Precondition("no closed form".into()))?;
    let to_q = |p: &IntPolynomial| p.map(|c| BigRational::from_integer(c.clone()));
    let (num, den) = (to_q(&cf.numerator), to_q(&cf.denominator));
    let g = poly_gcd_rational(&num, &den);
    let reduced = den.exact_quotient(&g).expect("gcd divides");
    let f = |c: &BigRational| F::from(c.to_f64().expect("finite coefficient")).expect("float");
    match reduced.degree() {
        None | Some(0) => Err(Error::Precondition("constant denominator".into())),
        Some(1) => {
            let (c0, c1) = (f(&reduced.coeff(0)), f(&reduced.coeff(1)));
            Ok((c0 / c1).abs())
        }
        Some(2) => {
            let (c0, c1, c2) = (f(&reduced.coeff(0)), f(&reduced.coeff(1)), f(&reduced.coeff(2)));
            let four = F::from(4.0).unwrap();
            let two = F::from(2.0).unwrap();
            let disc = c1 * c1 - four * c2 * c0;
            if disc < F::zero() {
                // conjugate pair, |t|^2 = c0 / c2
                return Ok((c0 / c2).abs().sqrt());
            }
            let sign = if c1 < F::zero() { -F::one() } else { F::one() };
            let q = -(c1 + sign * disc.sqrt()) / two;
            let r1 = (q / c2).abs();
            let r2 = if q.is_zero() { r1 } else { (c0 / q).abs() };
            Ok(r1.min(r2))
        }
        Some(d) => Err(Error::Precondition(format!("denominator of degree {d} not supported"))),
    }
}
