//! The two-sided sequence `p_{m+1} = T p_m − D p_{m−1}` with `p_0 = 0`,
//! `p_1 = 1`, which expresses every power of a 2×2 matrix as
//! `M^m = p_m M − D p_{m−1} 1`.

use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::IntScalar;

/// Materialised values `p_m` for `m` in `[lo, hi]`.
#[derive(Debug, Clone, PartialEq)]
pub struct PSequence<T: IntScalar> {
    pub det: T,
    pub trace: T,
    lo: i64,
    values: Vec<Ratio<T>>,
}

impl<T: IntScalar> PSequence<T> {
    /// Materialise `p_m` for `m_lo <= m <= m_hi`. For `D = 0` only `m >= 1`
    /// exists and `p_m = T^{m−1}`.
    pub fn new(det: T, trace: T, m_lo: i64, m_hi: i64) -> Result<Self> {
        assert!(m_lo <= m_hi, "empty index range");
        if det.is_zero() {
            if m_lo < 1 {
                return Err(Error::NegativeIndexSingular(m_lo));
            }
            let mut values = Vec::with_capacity((m_hi - m_lo + 1) as usize);
            let mut p = num_traits::pow(trace.clone(), (m_lo - 1) as usize);
            for _ in m_lo..=m_hi {
                values.push(Ratio::from_integer(p.clone()));
                p = p * trace.clone();
            }
            return Ok(PSequence { det, trace, lo: m_lo, values });
        }

        let d = Ratio::from_integer(det.clone());
        let t = Ratio::from_integer(trace.clone());
        // forward from (p_0, p_1)
        let mut fwd = vec![Ratio::zero(), Ratio::one()];
        while (fwd.len() as i64) <= m_hi {
            let n = fwd.len();
            let next = t.clone() * fwd[n - 1].clone() - d.clone() * fwd[n - 2].clone();
            fwd.push(next);
        }
        // backward from (p_0, p_{-1} = -1/D): p_{m-1} = (T p_m − p_{m+1}) / D
        let mut bwd = vec![Ratio::zero(), -Ratio::one() / d.clone()];
        while -(bwd.len() as i64 - 1) > m_lo {
            let n = bwd.len();
            let prev = (t.clone() * bwd[n - 1].clone() - bwd[n - 2].clone()) / d.clone();
            bwd.push(prev);
        }
        let values = (m_lo..=m_hi)
            .map(|m| {
                if m >= 0 {
                    fwd[m as usize].clone()
                } else {
                    bwd[(-m) as usize].clone()
                }
            })
            .collect();
        Ok(PSequence { det, trace, lo: m_lo, values })
    }

    pub fn range(&self) -> std::ops::RangeInclusive<i64> {
        self.lo..=self.lo + self.values.len() as i64 - 1
    }

    pub fn get(&self, m: i64) -> Option<&Ratio<T>> {
        if m < self.lo {
            return None;
        }
        self.values.get((m - self.lo) as usize)
    }

    /// `p_m` as an integer, when materialised and integral.
    pub fn get_integer(&self, m: i64) -> Option<T> {
        self.get(m).filter(|r| r.is_integer()).map(|r| r.to_integer())
    }
}
