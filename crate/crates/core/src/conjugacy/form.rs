use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{factorize_u64, gcd_all};
use crate::error::{Error, Result};
use crate::Mat2Z;

/// `Q(α, γ) = q_alpha·α² + q_mix·αγ + q_gamma·γ²`, which for a matrix
/// `[[a, b], [c, d]]` is `det [[α, aα + bγ], [γ, cα + dγ]]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraticForm {
    pub q_alpha: BigInt,
    pub q_mix: BigInt,
    pub q_gamma: BigInt,
    pub discriminant: BigInt,
    pub content: BigInt,
}

impl QuadraticForm {
    pub fn new(q_alpha: BigInt, q_mix: BigInt, q_gamma: BigInt) -> Self {
        let discriminant = &q_mix * &q_mix - BigInt::from(4) * &q_alpha * &q_gamma;
        let content = gcd_all(&[q_alpha.clone(), q_mix.clone(), q_gamma.clone()]);
        QuadraticForm { q_alpha, q_mix, q_gamma, discriminant, content }
    }

    pub fn eval(&self, alpha: &BigInt, gamma: &BigInt) -> BigInt {
        &self.q_alpha * alpha * alpha + &self.q_mix * alpha * gamma + &self.q_gamma * gamma * gamma
    }

    pub fn is_primitive(&self) -> bool {
        self.content.is_one()
    }

    /// The form divided by its content; the zero form is returned unchanged.
    pub fn primitive_part(&self) -> Self {
        if self.content.is_zero() {
            return self.clone();
        }
        let g = &self.content;
        QuadraticForm::new(&self.q_alpha / g, &self.q_mix / g, &self.q_gamma / g)
    }
}

pub fn quadratic_form(m: &Mat2Z) -> QuadraticForm {
    QuadraticForm::new(m.c.clone(), &m.d - &m.a, -m.b.clone())
}

/// A coprime pair `(α, γ)` with `k = Q(α, γ)` a unit mod `n`.
///
/// Writing `Q = cα² + (d−a)αγ − bγ²`: put into `α` every prime of `n` not
/// dividing `b`, and into `γ` every prime of `n` dividing `b` but not `c`.
/// Each prime `p | n` then sees exactly one surviving term of `Q` mod `p`.
pub fn primitive_representation(q: &QuadraticForm, n: u64) -> Result<(BigInt, BigInt, BigInt)> {
    if n < 2 {
        return Err(Error::ModulusTooSmall(n as i64));
    }
    if !q.is_primitive() {
        return Err(Error::NotPrimitive(q.content.to_string()));
    }
    let b = -q.q_gamma.clone();
    let c = &q.q_alpha;
    let nn = BigInt::from(n);
    let mut alpha = BigInt::one();
    let mut gamma = BigInt::one();
    for (p, _) in factorize_u64(n) {
        let p = BigInt::from(p);
        if !b.is_multiple_of(&p) {
            alpha *= &p;
        } else if !c.is_multiple_of(&p) {
            gamma *= &p;
        }
    }
    let k = q.eval(&alpha, &gamma);
    if k.gcd(&nn).is_one() {
        return Ok((alpha, gamma, k));
    }
    search(q, n).ok_or_else(|| Error::Verification(format!("no primitive representation mod {n}")))
}

// Only reachable if the construction above were wrong; kept as a guard.
fn search(q: &QuadraticForm, n: u64) -> Option<(BigInt, BigInt, BigInt)> {
    let bound = 8 * n as i64;
    let nn = BigInt::from(n);
    for s in 1..=bound {
        for alpha in -s..=s {
            for gamma in [-s, s] {
                for (x, y) in [(alpha, gamma), (gamma, alpha)] {
                    let (x, y) = (BigInt::from(x), BigInt::from(y));
                    if x.gcd(&y).is_one() {
                        let k = q.eval(&x, &y);
                        if k.gcd(&nn).is_one() {
                            return Some((x, y, k));
                        }
                    }
                }
            }
        }
    }
    None
}

impl std::fmt::Display for QuadraticForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let sign = |v: &BigInt| if v.is_negative() { "-" } else { "+" };
        write!(
            f,
            "{}α² {} {}αγ {} {}γ²",
            self.q_alpha,
            sign(&self.q_mix),
            self.q_mix.abs(),
            sign(&self.q_gamma),
            self.q_gamma.abs()
        )
    }
}
