use serde_json::{json, Value};

use catlattice::conjugacy::BRUTE_FORCE_MAX_N;
use catlattice::json::int;
use catlattice::zeta::integer_series;
use catlattice::*;

use crate::CliError;

pub fn invariants(m: &Mat2Z) -> Value {
    let e = m.eigen_data();
    json!({
        "matrix": m.to_string(),
        "det": int(&m.det()),
        "trace": int(&m.trace()),
        "mgcd": int(&m.mgcd()),
        "hyperbolic": e.hyperbolic,
        "discriminant": int(&e.discriminant),
        "squarefree_discriminant": int(&e.squarefree_discriminant),
    })
}

pub fn zeta(m: &Mat2Z, k: usize) -> Result<Value, CliError> {
    let closed = zeta_closed_form(m);
    let series = zeta_series(m, k);
    let coeffs: Vec<String> = match integer_series(&series) {
        Some(s) => s.padded(k).iter().map(ToString::to_string).collect(),
        None => series.padded(k).iter().map(ToString::to_string).collect(),
    };
    Ok(json!({
        "matrix": m.to_string(),
        "case": closed.case.to_string(),
        "closed_form": closed.to_json(),
        "series": coeffs,
    }))
}

pub fn group(m: &Mat2Z, power: u64) -> Result<Value, CliError> {
    Ok(elementary_divisors_from_counts(m, power)?.to_json())
}

pub fn conj_all_n(a: &Mat2Z, b: &Mat2Z) -> Value {
    json!({
        "a": a.to_string(),
        "b": b.to_string(),
        "decision": decide_all_n_conjugacy(a, b),
        "invariants": {
            "a": triple(a),
            "b": triple(b),
        },
    })
}

fn triple(m: &Mat2Z) -> Value {
    json!({ "det": int(&m.det()), "trace": int(&m.trace()), "mgcd": int(&m.mgcd()) })
}

/// Certificate mod `n` when the global invariants agree; otherwise an
/// exhaustive search for `n ≤ 16`.
pub fn conj_mod(a: &Mat2Z, b: &Mat2Z, n: u64) -> Result<Value, CliError> {
    let small = n <= BRUTE_FORCE_MAX_N;
    let cert = if decide_all_n_conjugacy(a, b) {
        Some(build_conjugator(a, b, n)?)
    } else if small {
        match brute_force_conjugator(a, b, n, false)? {
            Some(x) => Some(ConjugacyCertificate::new(n, x, a.clone(), b.clone())?),
            None => None,
        }
    } else {
        return Err(CliError::Lib(Error::Precondition(format!(
            "invariants differ and n = {n} is beyond the exhaustive search limit {BRUTE_FORCE_MAX_N}"
        ))));
    };
    let mut out = json!({
        "a": a.to_string(),
        "b": b.to_string(),
        "n": n,
        "conjugate": cert.is_some(),
    });
    match cert {
        Some(cert) => {
            let det_x = cert.x.det();
            out["certificate"] = cert.to_json();
            out["det_x"] = json!(det_x);
            out["det_x_is_one"] = json!(det_x == 1 % n);
            if small {
                // whether some conjugator of determinant 1 exists at all
                let sl = brute_force_conjugator(a, b, n, true)?;
                out["det_one_conjugator"] = sl.map_or(Value::Null, |x| json!(x.to_string()));
            }
        }
        None => {
            out["witness"] = json!({
                "search": "exhaustive",
                "candidates": (n as u128).pow(4).to_string(),
            });
        }
    }
    Ok(out)
}
