use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::Mat2Z;

/// 3×3 integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Mat3(pub [[BigInt; 3]; 3]);

impl Mat3 {
    pub fn from_i64(rows: [[i64; 3]; 3]) -> Self {
        Mat3(rows.map(|r| r.map(BigInt::from)))
    }

    pub fn identity() -> Self {
        Self::from_i64([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    }

    pub fn det(&self) -> BigInt {
        let m = &self.0;
        &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1])
            - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
            + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
    }

    pub fn adjugate(&self) -> Self {
        let m = &self.0;
        let cof = |r0: usize, r1: usize, c0: usize, c1: usize| &m[r0][c0] * &m[r1][c1] - &m[r0][c1] * &m[r1][c0];
        let mut out: [[BigInt; 3]; 3] = Default::default();
        for (i, row) in out.iter_mut().enumerate() {
            for (j, slot) in row.iter_mut().enumerate() {
                // adj[i][j] = (−1)^{i+j} minor(j, i)
                let rows: Vec<usize> = (0..3).filter(|&r| r != j).collect();
                let cols: Vec<usize> = (0..3).filter(|&c| c != i).collect();
                let v = cof(rows[0], rows[1], cols[0], cols[1]);
                *slot = if (i + j) % 2 == 0 { v } else { -v };
            }
        }
        Mat3(out)
    }

    /// Exact inverse for `det = ±1`.
    pub fn inverse(&self) -> Result<Self> {
        let det = self.det();
        if !det.abs().is_one() {
            return Err(Error::NotUnimodular(det.to_string()));
        }
        Ok(Mat3(self.adjugate().0.map(|r| r.map(|v| v * &det))))
    }

    pub fn mul(&self, o: &Mat3) -> Mat3 {
        let mut out: [[BigInt; 3]; 3] = Default::default();
        for (i, row) in out.iter_mut().enumerate() {
            for (j, slot) in row.iter_mut().enumerate() {
                *slot = (0..3).map(|k| &self.0[i][k] * &o.0[k][j]).sum();
            }
        }
        Mat3(out)
    }

    pub fn apply(&self, v: &[BigInt; 3]) -> [BigInt; 3] {
        [0, 1, 2].map(|i| (0..3).map(|k| &self.0[i][k] * &v[k]).sum())
    }
}

impl fmt::Display for Mat3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .0
            .iter()
            .map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","))
            .collect();
        f.write_str(&rows.join(";"))
    }
}

/// The linear map `(b, c, d − a) ↦ (b′, c′, d′ − a′)` induced by `M ↦ A M A⁻¹`,
/// so the gcd of the triple is a conjugacy invariant.
pub fn mgcd_transform(a: &Mat2Z) -> Result<Mat3> {
    let det = a.det();
    if !det.abs().is_one() {
        return Err(Error::NotUnimodular(det.to_string()));
    }
    let (al, be, ga, de) = (&a.a, &a.b, &a.c, &a.d);
    let two = BigInt::from(2);
    let rows = [
        [al * al, -(be * be), al * be],
        [-(ga * ga), de * de, -(ga * de)],
        [&two * al * ga, -(&two * be * de), be * ga + al * de],
    ];
    // dividing by ±1 is multiplying by it
    Ok(Mat3(rows.map(|r| r.map(|v| v * &det))))
}
