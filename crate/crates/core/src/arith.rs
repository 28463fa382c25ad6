//! Small integer helpers: factoring by trial division, Möbius function,
//! divisors, square-free parts.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::scalar::IntScalar;

/// Prime factorisation of `|n|` by trial division, as (prime, exponent)
/// pairs in increasing order. Returns an empty list for 0 and ±1.
pub fn factorize<T: IntScalar>(n: &T) -> Vec<(T, u32)> {
    let mut m = n.abs();
    let mut out = Vec::new();
    if m.is_zero() {
        return out;
    }
    let two = T::lit(2);
    let mut p = two.clone();
    while p.clone() * p.clone() <= m {
        if m.is_multiple_of(&p) {
            let mut e = 0;
            while m.is_multiple_of(&p) {
                m = m / p.clone();
                e += 1;
            }
            out.push((p.clone(), e));
        }
        p = if p == two { T::lit(3) } else { p + two.clone() };
    }
    if m > T::one() {
        out.push((m, 1));
    }
    out
}

pub fn factorize_u64(n: u64) -> Vec<(u64, u32)> {
    factorize(&(n as i64)).into_iter().map(|(p, e)| (p as u64, e)).collect()
}

/// Sign-preserving square-free part: `n = s * k^2` with `s` square-free.
pub fn squarefree_part<T: IntScalar>(n: &T) -> T {
    if n.is_zero() {
        return T::zero();
    }
    let mut s = T::one();
    for (p, e) in factorize(n) {
        if e % 2 == 1 {
            s = s * p;
        }
    }
    if n.is_negative() {
        -s
    } else {
        s
    }
}

pub fn mobius(n: u64) -> i64 {
    assert!(n >= 1);
    let f = factorize_u64(n);
    if f.iter().any(|&(_, e)| e > 1) {
        0
    } else if f.len().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Positive divisors of `n`, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Non-negative gcd of a slice, with gcd() of all zeros equal to 0.
pub fn gcd_all<T: IntScalar>(values: &[T]) -> T {
    values.iter().fold(T::zero(), |g, v| g.gcd(v))
}

/// `(g, x, y)` with `g = gcd(a, b) >= 0` and `a x + b y = g`.
pub fn ext_gcd<T: IntScalar>(a: &T, b: &T) -> (T, T, T) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (T::one(), T::zero());
    let (mut t0, mut t1) = (T::zero(), T::one());
    while !r1.is_zero() {
        let q = r0.div_floor(&r1);
        let r2 = r0 - q.clone() * r1.clone();
        r0 = std::mem::replace(&mut r1, r2);
        let s2 = s0 - q.clone() * s1.clone();
        s0 = std::mem::replace(&mut s1, s2);
        let t2 = t0 - q * t1.clone();
        t0 = std::mem::replace(&mut t1, t2);
    }
    if r0.is_negative() {
        (-r0, -s0, -t0)
    } else {
        (r0, s0, t0)
    }
}

/// Inverse of `a` modulo `n`, if it exists.
pub fn mod_inverse(a: u64, n: u64) -> Option<u64> {
    let (g, x, _) = ext_gcd(&(a as i128), &(n as i128));
    (g == 1).then(|| x.rem_euclid(n as i128) as u64)
}

/// The part of `n` made of the prime `p`, i.e. `p^{v_p(n)}`.
pub fn prime_part(n: &BigInt, p: &BigInt) -> BigInt {
    let mut m = n.abs();
    let mut out = BigInt::one();
    if m.is_zero() {
        return out;
    }
    while m.is_multiple_of(p) {
        m /= p;
        out *= p;
    }
    out
}

/// p-adic valuation; `None` for zero.
pub fn valuation(n: &BigInt, p: &BigInt) -> Option<u32> {
    if n.is_zero() {
        return None;
    }
    let mut m = n.abs();
    let mut v = 0;
    while m.is_multiple_of(p) {
        m /= p;
        v += 1;
    }
    Some(v)
}

pub fn lcm_u64(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / a.gcd(&b) * b
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mobius_small() {
        let mu: Vec<i64> = (1..=10).map(mobius).collect();
        assert_eq!(mu, vec![1, -1, -1, 0, -1, 1, -1, 0, 0, 1]);
    }

    #[test]
    fn squarefree_keeps_sign() {
        assert_eq!(squarefree_part(&-4i64), -1);
        assert_eq!(squarefree_part(&24i64), 6);
        assert_eq!(squarefree_part(&396i64), 11);
        assert_eq!(squarefree_part(&5i64), 5);
        assert_eq!(squarefree_part(&0i64), 0);
    }

    #[test]
    fn ext_gcd_identity() {
        for a in -20i64..20 {
            for b in -20i64..20 {
                let (g, x, y) = ext_gcd(&a, &b);
                assert_eq!(g, a.gcd(&b));
                assert_eq!(a * x + b * y, g);
            }
        }
    }

    #[test]
    fn divisors_and_factors() {
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(factorize_u64(360), vec![(2, 3), (3, 2), (5, 1)]);
        assert_eq!(mod_inverse(3, 7), Some(5));
        assert_eq!(mod_inverse(2, 4), None);
    }
}
