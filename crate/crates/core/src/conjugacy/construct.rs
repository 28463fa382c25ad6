use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::form::{primitive_representation, quadratic_form};
use super::ConjugacyCertificate;
use crate::error::{Error, Result};
use crate::lattice::reduce;
use crate::Mat2Z;

/// `A` with `M·A = A·C` over `Z` and `det A` a unit mod `n`, where `C` is the
/// companion matrix; the certificate conjugates `C` to `M`.
pub fn conjugator_to_companion(m: &Mat2Z, n: u64) -> Result<ConjugacyCertificate> {
    let mu = m.mgcd();
    if mu.is_zero() {
        return Err(Error::Precondition(format!("{m} is a multiple of the identity")));
    }
    if !mu.gcd(&BigInt::from(n)).is_one() {
        return Err(Error::Precondition(format!("mgcd {mu} is not a unit mod {n}")));
    }
    let q = quadratic_form(m).primitive_part();
    let (alpha, gamma, _) = primitive_representation(&q, n)?;
    let (beta, delta) = m.apply(&alpha, &gamma);
    let a = Mat2Z::new(alpha, beta, gamma, delta);
    debug_assert_eq!(m * &a, &a * &m.companion());
    ConjugacyCertificate::new(n, reduce(&a, n)?, m.companion(), m.clone())
}

/// `NF = [[a, bc/r], [r, d]]` with `r = mgcd(M)`, and a certificate
/// conjugating `M` to it mod `n`. Valid for every `n`: writing `M = a·1 + rN`,
/// the inner matrix `N` has mgcd 1 and is conjugate to its companion.
pub fn normal_form_mod(m: &Mat2Z, n: u64) -> Result<(Mat2Z, ConjugacyCertificate)> {
    let r = m.mgcd();
    if r.is_zero() {
        return Err(Error::Precondition(format!("{m} is a multiple of the identity")));
    }
    let nf = normal_form(m, &r);
    let inner = Mat2Z::new(BigInt::zero(), &m.b / &r, &m.c / &r, (&m.d - &m.a) / &r);
    let a = conjugator_to_companion(&inner, n)?.x;
    let x = a.inverse().ok_or(Error::NotInvertibleMod(n))?;
    Ok((nf.clone(), ConjugacyCertificate::new(n, x, m.clone(), nf)?))
}

fn normal_form(m: &Mat2Z, r: &BigInt) -> Mat2Z {
    Mat2Z::new(m.a.clone(), &m.b * &m.c / r, r.clone(), m.d.clone())
}

/// Conjugate in `Mat(2, Z/n)` over `GL(2, Z/n)` for every `n ≥ 2`.
pub fn decide_all_n_conjugacy(m: &Mat2Z, m2: &Mat2Z) -> bool {
    m.invariants() == m2.invariants()
}

/// `X` with `X·M·X⁻¹ ≡ M′ (mod n)`, composed as `M → NF(M) → NF(M′) → M′`.
/// The middle step is the integral unimodular `[[1, (d − d′)/r], [0, 1]]`.
pub fn build_conjugator(m: &Mat2Z, m2: &Mat2Z, n: u64) -> Result<ConjugacyCertificate> {
    if !decide_all_n_conjugacy(m, m2) {
        return Err(Error::Precondition(format!(
            "{m} and {m2} differ in det, trace or mgcd"
        )));
    }
    let r = m.mgcd();
    if r.is_zero() {
        // both are the same multiple of the identity
        return ConjugacyCertificate::new(n, reduce(&Mat2Z::identity(), n)?, m.clone(), m2.clone());
    }
    let (_, c1) = normal_form_mod(m, n)?;
    let (_, c2) = normal_form_mod(m2, n)?;
    let shift = (&m.d - &m2.d).div_rem(&r);
    if !shift.1.is_zero() {
        return Err(Error::Verification(format!("mgcd {r} does not divide d − d′")));
    }
    let bridge = reduce(&Mat2Z::new(BigInt::one(), shift.0, BigInt::zero(), BigInt::one()), n)?;
    let back = c2.x.inverse().ok_or(Error::NotInvertibleMod(n))?;
    let x = back.mul(&bridge).mul(&c1.x);
    ConjugacyCertificate::new(n, x, m.clone(), m2.clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(a: i64, b: i64, c: i64, d: i64) -> Mat2Z {
        Mat2Z::from_i64(a, b, c, d)
    }

    #[test]
    fn companion_examples() {
        let cert = conjugator_to_companion(&m(2, 3, 2, 2), 5).unwrap();
        assert_eq!(cert.x.lift(), m(0, 3, 1, 2));
        assert!(cert.verified);
        assert_eq!(cert.source, m(0, 2, 1, 4));

        let c = m(0, 2, 1, 4);
        // c = 1, so (1, 0) already represents a unit and the identity works too
        assert_eq!(quadratic_form(&c).eval(&BigInt::one(), &BigInt::zero()), BigInt::one());
        assert_eq!(c.companion(), c);
        for n in 2..30 {
            assert!(conjugator_to_companion(&c, n).unwrap().verified);
        }
        assert!(conjugator_to_companion(&m(0, 1, 1, 1), 4).unwrap().verified);
        assert!(conjugator_to_companion(&m(1, 2, 4, 3), 4).is_err());
        assert!(conjugator_to_companion(&m(1, 2, 4, 3), 5).unwrap().verified);
    }

    #[test]
    fn normal_form_examples() {
        let (nf, cert) = normal_form_mod(&m(2, 4, 6, 8), 5).unwrap();
        assert_eq!(nf, m(2, 12, 2, 8));
        assert!(cert.check().unwrap());
        let (nf, cert) = normal_form_mod(&m(4, 9, 7, 16), 11).unwrap();
        assert_eq!(nf, m(4, 63, 1, 16));
        assert!(cert.verified);
        for n in 2..40 {
            assert!(normal_form_mod(&m(2, 4, 6, 8), n).unwrap().1.verified);
        }
    }

    #[test]
    fn build_examples() {
        let a = m(4, 9, 7, 16);
        let cert = build_conjugator(&a, &a.inverse().unwrap(), 5).unwrap();
        assert!(cert.check().unwrap());
        let cert = build_conjugator(&a, &a, 7).unwrap();
        assert!(cert.verified);
        let cert = build_conjugator(&m(3, 10, 1, 3), &m(3, 5, 2, 3), 5).unwrap();
        assert!(cert.verified);
        assert!(build_conjugator(&m(2, 3, 2, 2), &m(2, 0, 0, 2), 5).is_err());
        assert!(decide_all_n_conjugacy(&a, &a.inverse().unwrap()));
        assert!(!decide_all_n_conjugacy(&m(2, 3, 2, 2), &m(2, 0, 0, 2)));
    }
}
