//! Smith normal form of 2×2 integer matrices.

use crate::arith::ext_gcd;
use crate::matrix::Mat2;
use crate::scalar::IntScalar;

/// `U · B · V = diag(d1, d2)` with `d1 | d2`, `d1, d2 >= 0` and `U`, `V`
/// unimodular. The transforms are one valid choice among many.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm2<T> {
    pub d1: T,
    pub d2: T,
    pub u: Mat2<T>,
    pub v: Mat2<T>,
}

impl<T: IntScalar> SmithForm2<T> {
    /// Number of solutions of `B x ≡ 0 (mod n)`: `gcd(d1, n) · gcd(d2, n)`,
    /// using `gcd(0, n) = n`.
    pub fn kernel_count_mod(&self, n: &T) -> T {
        self.d1.gcd(n) * self.d2.gcd(n)
    }
}

pub fn smith_form<T: IntScalar>(b: &Mat2<T>) -> SmithForm2<T> {
    let mut m = b.clone();
    let mut u = Mat2::identity();
    let mut v = Mat2::identity();

    if m == Mat2::zero() {
        return SmithForm2 { d1: T::zero(), d2: T::zero(), u, v };
    }

    let swap = Mat2::from_i64(0, 1, 1, 0);
    loop {
        // move the smallest non-zero entry to the pivot position
        let entries = [&m.a, &m.b, &m.c, &m.d];
        let (idx, _) = entries
            .iter()
            .enumerate()
            .filter(|(_, e)| !e.is_zero())
            .min_by(|x, y| x.1.abs().cmp(&y.1.abs()))
            .expect("non-zero matrix");
        if idx == 1 || idx == 3 {
            m = &m * &swap;
            v = &v * &swap;
        }
        if idx == 2 || idx == 3 {
            m = &swap * &m;
            u = &swap * &u;
        }

        // clear the column below the pivot
        if !m.c.is_zero() {
            let r = if m.c.is_multiple_of(&m.a) {
                Mat2::new(T::one(), T::zero(), -(m.c.clone() / m.a.clone()), T::one())
            } else {
                let (g, x, y) = ext_gcd(&m.a, &m.c);
                Mat2::new(x, y, -(m.c.clone() / g.clone()), m.a.clone() / g)
            };
            m = &r * &m;
            u = &r * &u;
        }
        // clear the row right of the pivot
        if !m.b.is_zero() {
            let c = if m.b.is_multiple_of(&m.a) {
                Mat2::new(T::one(), -(m.b.clone() / m.a.clone()), T::zero(), T::one())
            } else {
                let (g, x, y) = ext_gcd(&m.a, &m.b);
                Mat2::new(x, -(m.b.clone() / g.clone()), y, m.a.clone() / g)
            };
            m = &m * &c;
            v = &v * &c;
        }
        if !m.c.is_zero() {
            continue;
        }
        if m.d.is_zero() || m.d.is_multiple_of(&m.a) {
            break;
        }
        // pivot does not divide d: fold row 2 into row 1 and repeat
        let r = Mat2::from_i64(1, 1, 0, 1);
        m = &r * &m;
        u = &r * &u;
    }

    let neg = Mat2::from_i64(-1, 0, 0, 1);
    if m.a.is_negative() {
        m = &neg * &m;
        u = &neg * &u;
    }
    let neg2 = Mat2::from_i64(1, 0, 0, -1);
    if m.d.is_negative() {
        m = &neg2 * &m;
        u = &neg2 * &u;
    }
    debug_assert!(m.b.is_zero() && m.c.is_zero());
    debug_assert!(m.a.is_one() || m.d.is_zero() || m.d.is_multiple_of(&m.a));
    SmithForm2 { d1: m.a, d2: m.d, u, v }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::gcd_all;
    use proptest::prelude::*;

    fn check(b: &Mat2<i64>) -> SmithForm2<i64> {
        let s = smith_form(b);
        let diag = &(&s.u * b) * &s.v;
        assert_eq!(diag, Mat2::new(s.d1, 0, 0, s.d2), "B = {b}");
        assert!(s.d1 >= 0 && s.d2 >= 0);
        assert!(s.d2 == 0 || (s.d1 != 0 && s.d2 % s.d1 == 0));
        assert_eq!(s.u.det().abs(), 1);
        assert_eq!(s.v.det().abs(), 1);
        assert_eq!(s.d1 * s.d2, b.det().abs());
        s
    }

    #[test]
    fn examples() {
        let s = check(&Mat2::from_i64(4, 8, 8, 12));
        assert_eq!((s.d1, s.d2), (4, 4));
        let s = check(&Mat2::identity());
        assert_eq!((s.d1, s.d2), (1, 1));
        let s = check(&Mat2::from_i64(2, 0, 0, 6));
        assert_eq!((s.d1, s.d2), (2, 6));
        let s = check(&Mat2::zero());
        assert_eq!((s.d1, s.d2), (0, 0));
        let s = check(&Mat2::from_i64(0, 2, 2, 2));
        assert_eq!((s.d1, s.d2), (2, 2));
        let s = check(&Mat2::from_i64(2, 4, 1, 2));
        assert_eq!((s.d1, s.d2), (1, 0));
        let s = check(&Mat2::from_i64(6, 0, 0, 4));
        assert_eq!((s.d1, s.d2), (2, 12));
    }

    proptest! {
        #[test]
        fn smith_contract(a in -60i64..60, b in -60i64..60, c in -60i64..60, d in -60i64..60) {
            let m = Mat2::new(a, b, c, d);
            let s = check(&m);
            prop_assert_eq!(s.d1, gcd_all(&[a, b, c, d]));
        }
    }
}
