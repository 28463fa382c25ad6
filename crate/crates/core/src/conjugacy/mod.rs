//! Local conjugacy of integer matrices: the conjugacy class of `M` in
//! `Mat(2, Z/n)` over `GL(2, Z/n)` is pinned down by det, trace and the
//! matrix gcd `gcd(b, c, d − a)`, and every step here is constructive.

mod brute;
mod construct;
mod form;
mod transform;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::lattice::{reduce, Mat2Zn};
use crate::Mat2Z;

pub use brute::{brute_force_conjugator, BRUTE_FORCE_MAX_N};
pub use construct::{build_conjugator, conjugator_to_companion, decide_all_n_conjugacy, normal_form_mod};
pub use form::{primitive_representation, quadratic_form, QuadraticForm};
pub use transform::{mgcd_transform, Mat3};

/// Witness that `X · source · X⁻¹ ≡ target (mod n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyCertificate {
    pub n: u64,
    pub x: Mat2Zn,
    pub source: Mat2Z,
    pub target: Mat2Z,
    pub verified: bool,
}

impl ConjugacyCertificate {
    /// Builds and checks a certificate; a failed check is reported as an error.
    pub fn new(n: u64, x: Mat2Zn, source: Mat2Z, target: Mat2Z) -> Result<Self> {
        let mut cert = ConjugacyCertificate { n, x, source, target, verified: false };
        if !cert.check()? {
            return Err(Error::Verification(format!(
                "X = {} does not conjugate {} to {} mod {n}",
                cert.x, cert.source, cert.target
            )));
        }
        cert.verified = true;
        Ok(cert)
    }

    /// Recomputes `X·source ≡ target·X` with `X` invertible, from scratch.
    pub fn check(&self) -> Result<bool> {
        let s = reduce(&self.source, self.n)?;
        let t = reduce(&self.target, self.n)?;
        Ok(self.x.is_invertible() && self.x.mul(&s) == t.mul(&self.x))
    }

    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "X": self.x.to_string(),
            "source": self.source.to_string(),
            "target": self.target.to_string(),
            "verified": self.verified,
        })
    }
}
