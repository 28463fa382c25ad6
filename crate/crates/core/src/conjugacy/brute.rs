use crate::error::{Error, Result};
use crate::lattice::{reduce, Mat2Zn};
use crate::Mat2Z;

/// Largest modulus for the `n⁴` exhaustive search.
pub const BRUTE_FORCE_MAX_N: u64 = 16;

/// First invertible `X` (entries in lexicographic order) with `X·M ≡ M′·X`
/// mod `n`, optionally restricted to `det X ≡ 1`.
pub fn brute_force_conjugator(
    m: &Mat2Z,
    m2: &Mat2Z,
    n: u64,
    restrict_det_one: bool,
) -> Result<Option<Mat2Zn>> {
    if n > BRUTE_FORCE_MAX_N {
        return Err(Error::BudgetExceeded { n, budget: BRUTE_FORCE_MAX_N });
    }
    let s = reduce(m, n)?;
    let t = reduce(m2, n)?;
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    let x = Mat2Zn::new(n, a, b, c, d);
                    let ok_det = if restrict_det_one { x.det() == 1 % n } else { x.is_invertible() };
                    if ok_det && x.mul(&s) == t.mul(&x) {
                        return Ok(Some(x));
                    }
                }
            }
        }
    }
    Ok(None)
}
