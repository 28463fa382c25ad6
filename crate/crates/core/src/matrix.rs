//! 2×2 integer matrices.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;


use crate::arith::{gcd_all, squarefree_part};
use crate::error::{Error, Result};
use crate::pseq::PSequence;
use crate::scalar::IntScalar;

/// A 2×2 matrix `[[a, b], [c, d]]` acting on column vectors.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Mat2<T> {
    pub a: T,
    pub b: T,
    pub c: T,
    pub d: T,
}

/// det, trace and mgcd: the complete set of local conjugacy invariants.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct InvariantTriple<T> {
    pub det: T,
    pub trace: T,
    pub mgcd: T,
}

/// Discriminant data of the characteristic polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenData<T> {
    /// `T^2 - 4D`.
    pub discriminant: T,
    /// No eigenvalue on the unit circle.
    pub hyperbolic: bool,
    /// Square-free part of the discriminant, sign preserved.
    pub squarefree_discriminant: T,
}

impl<T: IntScalar> Mat2<T> {
    pub fn new(a: T, b: T, c: T, d: T) -> Self {
        Mat2 { a, b, c, d }
    }

    pub fn from_i64(a: i64, b: i64, c: i64, d: i64) -> Self {
        Mat2::new(T::lit(a), T::lit(b), T::lit(c), T::lit(d))
    }

    pub fn identity() -> Self {
        Self::scalar(T::one())
    }

    pub fn zero() -> Self {
        Self::scalar(T::zero())
    }

    pub fn scalar(k: T) -> Self {
        Mat2::new(k.clone(), T::zero(), T::zero(), k)
    }

    pub fn det(&self) -> T {
        self.a.clone() * self.d.clone() - self.b.clone() * self.c.clone()
    }

    pub fn trace(&self) -> T {
        self.a.clone() + self.d.clone()
    }

    pub fn transpose(&self) -> Self {
        Mat2::new(self.a.clone(), self.c.clone(), self.b.clone(), self.d.clone())
    }

    pub fn scale(&self, k: &T) -> Self {
        Mat2::new(
            self.a.clone() * k.clone(),
            self.b.clone() * k.clone(),
            self.c.clone() * k.clone(),
            self.d.clone() * k.clone(),
        )
    }

    /// `[[d, -b], [-c, a]]`, so that `M * adj(M) = det(M) * 1`.
    pub fn adjugate(&self) -> Self {
        Mat2::new(self.d.clone(), -self.b.clone(), -self.c.clone(), self.a.clone())
    }

    pub fn apply(&self, x: &T, y: &T) -> (T, T) {
        (
            self.a.clone() * x.clone() + self.b.clone() * y.clone(),
            self.c.clone() * x.clone() + self.d.clone() * y.clone(),
        )
    }

    pub fn is_scalar(&self) -> bool {
        self.b.is_zero() && self.c.is_zero() && self.a == self.d
    }

    /// `gcd(b, c, d - a)`, non-negative, zero exactly for multiples of the identity.
    pub fn mgcd(&self) -> T {
        gcd_all(&[self.b.clone(), self.c.clone(), self.d.clone() - self.a.clone()])
    }

    pub fn invariants(&self) -> InvariantTriple<T> {
        InvariantTriple { det: self.det(), trace: self.trace(), mgcd: self.mgcd() }
    }

    /// Exact integer inverse; requires `det = ±1`.
    pub fn inverse(&self) -> Result<Self> {
        let det = self.det();
        if !det.abs().is_one() {
            return Err(Error::NotUnimodular(det.to_string()));
        }
        // M^{-1} = (1/D)(T·1 − M); 1/D = D for D = ±1.
        let t1 = Self::scalar(self.trace());
        Ok((t1 - self.clone()).scale(&det))
    }

    /// `M^m` through the identity `M^m = p_m M − D p_{m−1} 1`.
    pub fn power(&self, m: i64) -> Result<Self> {
        if m == 0 {
            return Ok(Self::identity());
        }
        let det = self.det();
        let trace = self.trace();
        if m < 0 && !det.abs().is_one() {
            return Err(Error::NotUnimodular(det.to_string()));
        }
        if det.is_zero() {
            // M^m = T^{m-1} M for m >= 1.
            let p = num_traits::pow(trace, (m - 1) as usize);
            return Ok(self.scale(&p));
        }
        let seq = PSequence::new(det.clone(), trace, m - 1, m)?;
        let pm = seq.get_integer(m).expect("integral p_m");
        let pm1 = seq.get_integer(m - 1).expect("integral p_{m-1}");
        Ok(self.scale(&pm) - Self::scalar(det * pm1))
    }

    /// Repeated-squaring power with entries reduced modulo `n > 0`.
    pub fn pow_mod(&self, mut m: u64, n: &T) -> Self {
        let mut base = self.reduce_mod(n);
        let mut acc = Self::identity().reduce_mod(n);
        while m > 0 {
            if m & 1 == 1 {
                acc = (acc * base.clone()).reduce_mod(n);
            }
            base = (base.clone() * base).reduce_mod(n);
            m >>= 1;
        }
        acc
    }

    /// Entrywise representatives in `[0, n)`.
    pub fn reduce_mod(&self, n: &T) -> Self {
        Mat2::new(
            self.a.mod_floor(n),
            self.b.mod_floor(n),
            self.c.mod_floor(n),
            self.d.mod_floor(n),
        )
    }

    /// Characteristic polynomial `x^2 − T x + D` evaluated at `x`.
    pub fn charpoly_at(&self, x: &T) -> T {
        x.clone() * x.clone() - self.trace() * x.clone() + self.det()
    }

    pub fn discriminant(&self) -> T {
        let t = self.trace();
        t.clone() * t - T::lit(4) * self.det()
    }

    /// Exact test for "no eigenvalue of modulus one".
    pub fn is_hyperbolic(&self) -> bool {
        let one = T::one();
        if self.charpoly_at(&one).is_zero() || self.charpoly_at(&-one.clone()).is_zero() {
            return false;
        }
        // complex pair with |λ|^2 = D
        !(self.discriminant().is_negative() && self.det().is_one())
    }

    pub fn eigen_data(&self) -> EigenData<T> {
        let discriminant = self.discriminant();
        EigenData {
            squarefree_discriminant: squarefree_part(&discriminant),
            hyperbolic: self.is_hyperbolic(),
            discriminant,
        }
    }

    /// Companion matrix `[[0, −D], [1, T]]` of the characteristic polynomial.
    pub fn companion(&self) -> Self {
        Mat2::new(T::zero(), -self.det(), T::one(), self.trace())
    }

    pub fn map<U, F: Fn(&T) -> U>(&self, f: F) -> Mat2<U> {
        Mat2 { a: f(&self.a), b: f(&self.b), c: f(&self.c), d: f(&self.d) }
    }
}

impl<T: IntScalar> Add for Mat2<T> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Mat2::new(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)
    }
}

impl<T: IntScalar> Sub for Mat2<T> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Mat2::new(self.a - o.a, self.b - o.b, self.c - o.c, self.d - o.d)
    }
}

impl<T: IntScalar> Neg for Mat2<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Mat2::new(-self.a, -self.b, -self.c, -self.d)
    }
}

impl<T: IntScalar> Mul for Mat2<T> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        &self * &o
    }
}

impl<T: IntScalar> Mul<&Mat2<T>> for &Mat2<T> {
    type Output = Mat2<T>;
    fn mul(self, o: &Mat2<T>) -> Mat2<T> {
        Mat2::new(
            self.a.clone() * o.a.clone() + self.b.clone() * o.c.clone(),
            self.a.clone() * o.b.clone() + self.b.clone() * o.d.clone(),
            self.c.clone() * o.a.clone() + self.d.clone() * o.c.clone(),
            self.c.clone() * o.b.clone() + self.d.clone() * o.d.clone(),
        )
    }
}

impl<T: fmt::Display> fmt::Display for Mat2<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{};{},{}", self.a, self.b, self.c, self.d)
    }
}

fn parse_entry<T: IntScalar>(s: &str) -> Result<T> {
    let s = s.trim();
    let v: BigInt = s.parse().map_err(|_| Error::Parse(format!("bad integer entry {s:?}")))?;
    T::from_str_radix(&v.to_string(), 10)
        .map_err(|_| Error::Parse(format!("entry {s} out of range for scalar type")))
}

fn json_entry<T: IntScalar>(obj: &serde_json::Map<String, serde_json::Value>, key: &str) -> Result<T> {
    match obj.get(key) {
        Some(serde_json::Value::Number(n)) => parse_entry(&n.to_string()),
        Some(serde_json::Value::String(s)) => parse_entry(s),
        Some(_) => Err(Error::Parse(format!("field {key:?} must be an integer"))),
        None => Err(Error::Parse(format!("missing field {key:?}"))),
    }
}

impl<T: IntScalar> FromStr for Mat2<T> {
    type Err = Error;

    /// Accepts `"a,b;c,d"` (whitespace allowed) or `{"a":..,"b":..,"c":..,"d":..}`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.starts_with('{') {
            let v: serde_json::Value =
                serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
            let obj = v.as_object().ok_or_else(|| Error::Parse("expected JSON object".into()))?;
            return Ok(Mat2::new(
                json_entry(obj, "a")?,
                json_entry(obj, "b")?,
                json_entry(obj, "c")?,
                json_entry(obj, "d")?,
            ));
        }
        let rows: Vec<&str> = s.split(';').collect();
        if rows.len() != 2 {
            return Err(Error::Parse(format!("expected two rows separated by ';' in {s:?}")));
        }
        let mut entries = Vec::with_capacity(4);
        for row in rows {
            let cols: Vec<&str> = row.split(',').collect();
            if cols.len() != 2 {
                return Err(Error::Parse(format!("expected two entries in row {row:?}")));
            }
            for c in cols {
                entries.push(parse_entry::<T>(c)?);
            }
        }
        let mut it = entries.into_iter();
        Ok(Mat2::new(
            it.next().unwrap(),
            it.next().unwrap(),
            it.next().unwrap(),
            it.next().unwrap(),
        ))
    }
}

impl Mat2<BigInt> {
    /// JSON object form with arbitrary-precision number fields.
    pub fn to_json(&self) -> serde_json::Value {
        use crate::json::int;
        serde_json::json!({ "a": int(&self.a), "b": int(&self.b), "c": int(&self.c), "d": int(&self.d) })
    }
}
