//! Oracles and seeded matrix pools shared by the integration tests. Nothing
//! here calls into the code paths it is used to check.
#![allow(dead_code)]

use catlattice::Mat2Z;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn m(a: i64, b: i64, c: i64, d: i64) -> Mat2Z {
    Mat2Z::from_i64(a, b, c, d)
}

pub fn golden() -> Mat2Z {
    m(0, 1, 1, 1)
}

pub fn small(x: &Mat2Z) -> [i64; 4] {
    let f = |v: &num_bigint::BigInt| i64::try_from(v).expect("small entry");
    [f(&x.a), f(&x.b), f(&x.c), f(&x.d)]
}

/// Random word in `[[1,1],[0,1]]`, `[[1,0],[1,1]]`, `[[0,1],[1,0]]` and `−1`.
pub fn gl2z_word(r: &mut ChaCha8Rng, len: usize) -> [i64; 4] {
    let gens = [[1, 1, 0, 1], [1, 0, 1, 1], [0, 1, 1, 0], [-1, 0, 0, -1]];
    let mut acc = [1i64, 0, 0, 1];
    for _ in 0..len {
        let g = gens[r.gen_range(0..gens.len())];
        acc = mul(acc, g);
    }
    acc
}

pub fn mul(x: [i64; 4], y: [i64; 4]) -> [i64; 4] {
    [
        x[0] * y[0] + x[1] * y[2],
        x[0] * y[1] + x[1] * y[3],
        x[2] * y[0] + x[3] * y[2],
        x[2] * y[1] + x[3] * y[3],
    ]
}

/// Hyperbolic iff `x² − Tx + D` has no root of modulus 1.
pub fn hyperbolic(x: [i64; 4]) -> bool {
    let t = x[0] + x[3];
    let d = x[0] * x[3] - x[1] * x[2];
    let disc = t * t - 4 * d;
    1 - t + d != 0 && 1 + t + d != 0 && !(disc < 0 && d == 1)
}

/// `count` hyperbolic elements of `GL(2, Z)` with entries bounded by `max_entry`.
pub fn hyperbolic_gl2z_pool(seed: u64, count: usize, max_entry: i64) -> Vec<Mat2Z> {
    let mut r = rng(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let len = r.gen_range(2..9);
        let w = gl2z_word(&mut r, len);
        if hyperbolic(w) && w.iter().all(|v| v.abs() <= max_entry) {
            out.push(m(w[0], w[1], w[2], w[3]));
        }
    }
    out
}

/// Arbitrary integer matrices with entries in `[-bound, bound]`.
pub fn entry_pool(seed: u64, count: usize, bound: i64) -> Vec<Mat2Z> {
    let mut r = rng(seed);
    (0..count)
        .map(|_| {
            let mut e = || r.gen_range(-bound..=bound);
            m(e(), e(), e(), e())
        })
        .collect()
}

pub fn hyperbolic_entry_pool(seed: u64, count: usize, bound: i64) -> Vec<Mat2Z> {
    let mut r = rng(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let mut e = || r.gen_range(-bound..=bound);
        let x = [e(), e(), e(), e()];
        if hyperbolic(x) {
            out.push(m(x[0], x[1], x[2], x[3]));
        }
    }
    out
}

/// The map `x ↦ M x` on `(Z/n)²`, points indexed `x·n + y`.
pub fn lattice_map(x: [i64; 4], n: i64) -> Vec<usize> {
    let mut out = Vec::with_capacity((n * n) as usize);
    for u in 0..n {
        for v in 0..n {
            let p = (x[0] * u + x[1] * v).rem_euclid(n);
            let q = (x[2] * u + x[3] * v).rem_euclid(n);
            out.push((p * n + q) as usize);
        }
    }
    out
}

/// `|{x ∈ L_n : M^k x = x}|` by walking every point `k` steps.
pub fn brute_fixed(x: [i64; 4], k: u64, n: i64) -> u64 {
    let f = lattice_map(x, n);
    (0..f.len())
        .filter(|&p| {
            let mut q = p;
            for _ in 0..k {
                q = f[q];
            }
            q == p
        })
        .count() as u64
}

/// Least `k ≥ 1` with `(F_k, F_{k+1}) ≡ (0, 1) mod n`.
pub fn pisano(n: u64) -> u64 {
    let (mut a, mut b) = (1 % n, 1 % n);
    let mut k = 1;
    while (a, b) != (0, 1 % n) {
        (a, b) = (b, (a + b) % n);
        k += 1;
    }
    k
}

/// Backtracking isomorphism test for functional graphs `f`, `g` on the same
/// number of nodes: look for a bijection `φ` with `φ(f(x)) = g(φ(x))`.
pub fn functional_graphs_isomorphic(f: &[usize], g: &[usize]) -> bool {
    let n = f.len();
    if g.len() != n {
        return false;
    }
    let sig_f = signatures(f);
    let sig_g = signatures(g);
    let mut a = sig_f.clone();
    let mut b = sig_g.clone();
    a.sort();
    b.sort();
    if a != b {
        return false;
    }
    let mut phi = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let order: Vec<usize> = (0..n).collect();
    extend(0, &order, f, g, &sig_f, &sig_g, &mut phi, &mut used)
}

// (in-degree, distance to cycle, cycle length of the component, in-tree size)
fn signatures(f: &[usize]) -> Vec<(usize, usize, usize, usize)> {
    let n = f.len();
    let mut indeg = vec![0; n];
    for &y in f {
        indeg[y] += 1;
    }
    let on_cycle: Vec<bool> = (0..n)
        .map(|x| {
            let mut y = f[x];
            for _ in 0..n {
                if y == x {
                    return true;
                }
                y = f[y];
            }
            false
        })
        .collect();
    let mut out = Vec::with_capacity(n);
    for (x, &deg) in indeg.iter().enumerate() {
        let mut depth = 0;
        let mut y = x;
        while !on_cycle[y] {
            y = f[y];
            depth += 1;
        }
        let mut len = 1;
        let mut z = f[y];
        while z != y {
            z = f[z];
            len += 1;
        }
        // nodes whose path to the cycle passes through x (x itself included)
        let size = (0..n)
            .filter(|&s| {
                let mut w = s;
                loop {
                    if w == x {
                        return true;
                    }
                    if on_cycle[w] {
                        return false;
                    }
                    w = f[w];
                }
            })
            .count();
        out.push((deg, depth, len, size));
    }
    out
}

#[allow(clippy::too_many_arguments)]
fn extend(
    i: usize,
    order: &[usize],
    f: &[usize],
    g: &[usize],
    sf: &[(usize, usize, usize, usize)],
    sg: &[(usize, usize, usize, usize)],
    phi: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> bool {
    if i == order.len() {
        return true;
    }
    let x = order[i];
    if phi[x] != usize::MAX {
        return extend(i + 1, order, f, g, sf, sg, phi, used);
    }
    for y in 0..g.len() {
        if used[y] || sf[x] != sg[y] {
            continue;
        }
        // assign x ↦ y and follow the forced images f^k(x) ↦ g^k(y)
        let mut trail = Vec::new();
        let (mut u, mut v) = (x, y);
        let ok = loop {
            if phi[u] == usize::MAX {
                if used[v] || sf[u] != sg[v] {
                    break false;
                }
                phi[u] = v;
                used[v] = true;
                trail.push(u);
                u = f[u];
                v = g[v];
            } else {
                break phi[u] == v;
            }
        };
        if ok && extend(i + 1, order, f, g, sf, sg, phi, used) {
            return true;
        }
        for u in trail {
            used[phi[u]] = false;
            phi[u] = usize::MAX;
        }
    }
    false
}
