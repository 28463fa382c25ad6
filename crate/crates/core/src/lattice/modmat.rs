use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::arith::mod_inverse;
use crate::error::{Error, Result};
use crate::{Mat2, Mat2Z};

/// Moduli must stay below this so that `u64` products of two entries plus
/// one more such product cannot overflow.
pub const MAX_MODULUS: u64 = 1 << 31;

/// A 2×2 matrix over `Z/nZ` with entries kept in `[0, n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mat2Zn {
    n: u64,
    a: u64,
    b: u64,
    c: u64,
    d: u64,
}

/// Entrywise reduction of an integer matrix modulo `n >= 2`.
pub fn reduce(m: &Mat2Z, n: u64) -> Result<Mat2Zn> {
    if n < 2 {
        return Err(Error::ModulusTooSmall(n as i64));
    }
    if n >= MAX_MODULUS {
        return Err(Error::Precondition(format!("modulus {n} too large for machine arithmetic")));
    }
    let nn = BigInt::from(n);
    let r = |x: &BigInt| x.mod_floor(&nn).to_u64().expect("reduced entry fits");
    Ok(Mat2Zn { n, a: r(&m.a), b: r(&m.b), c: r(&m.c), d: r(&m.d) })
}

impl Mat2Zn {
    /// Entries are reduced on construction.
    pub fn new(n: u64, a: u64, b: u64, c: u64, d: u64) -> Self {
        assert!(n >= 2);
        assert!(n < MAX_MODULUS, "modulus too large");
        Mat2Zn { n, a: a % n, b: b % n, c: c % n, d: d % n }
    }

    pub fn identity(n: u64) -> Self {
        Mat2Zn::new(n, 1, 0, 0, 1)
    }

    pub fn modulus(&self) -> u64 {
        self.n
    }

    pub fn entries(&self) -> [u64; 4] {
        [self.a, self.b, self.c, self.d]
    }

    pub fn det(&self) -> u64 {
        let n = self.n;
        (self.a * self.d % n + n - self.b * self.c % n) % n
    }

    pub fn trace(&self) -> u64 {
        (self.a + self.d) % self.n
    }

    pub fn is_invertible(&self) -> bool {
        self.det().gcd(&self.n) == 1
    }

    pub fn is_identity(&self) -> bool {
        *self == Mat2Zn::identity(self.n)
    }

    pub fn mul(&self, o: &Mat2Zn) -> Mat2Zn {
        assert_eq!(self.n, o.n, "moduli differ");
        let n = self.n;
        Mat2Zn {
            n,
            a: (self.a * o.a + self.b * o.c) % n,
            b: (self.a * o.b + self.b * o.d) % n,
            c: (self.c * o.a + self.d * o.c) % n,
            d: (self.c * o.b + self.d * o.d) % n,
        }
    }

    pub fn pow(&self, mut e: u64) -> Mat2Zn {
        let mut base = *self;
        let mut acc = Mat2Zn::identity(self.n);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    pub fn inverse(&self) -> Option<Mat2Zn> {
        let n = self.n;
        let di = mod_inverse(self.det(), n)?;
        let neg = |x: u64| (n - x) % n;
        Some(Mat2Zn {
            n,
            a: self.d * di % n,
            b: neg(self.b) * di % n,
            c: neg(self.c) * di % n,
            d: self.a * di % n,
        })
    }

    /// Image of the point `(x, y)` (column vector).
    #[inline]
    pub fn apply(&self, x: u64, y: u64) -> (u64, u64) {
        let n = self.n;
        ((self.a * x + self.b * y) % n, (self.c * x + self.d * y) % n)
    }

    /// Canonical integer lift with entries in `[0, n)`.
    pub fn lift(&self) -> Mat2Z {
        Mat2::new(self.a.into(), self.b.into(), self.c.into(), self.d.into())
    }
}

impl fmt::Display for Mat2Zn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{};{},{}", self.a, self.b, self.c, self.d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduce_examples() {
        let g = reduce(&Mat2Z::from_i64(0, 1, 1, 1), 2).unwrap();
        assert_eq!(g.entries(), [0, 1, 1, 1]);
        let m = reduce(&Mat2Z::from_i64(4, 9, 7, 16), 5).unwrap();
        assert_eq!(m.entries(), [4, 4, 2, 1]);
        let m = reduce(&Mat2Z::from_i64(-1, 1, 1, 0), 3).unwrap();
        assert_eq!(m.entries(), [2, 1, 1, 0]);
        assert_eq!(reduce(&Mat2Z::identity(), 1), Err(Error::ModulusTooSmall(1)));
    }

    #[test]
    fn inverse_mod() {
        let m = reduce(&Mat2Z::from_i64(2, 3, 2, 2), 5).unwrap();
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
        assert!(reduce(&Mat2Z::from_i64(2, 0, 0, 2), 4).unwrap().inverse().is_none());
        assert!(reduce(&Mat2Z::from_i64(2, 0, 0, 3), 5).unwrap().is_invertible());
    }
}
