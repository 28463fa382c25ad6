//! Canonical encoding of the functional graph `x ↦ M x` on `L_n`, so that
//! digraph isomorphism becomes string equality.
//!
//! Each rooted in-tree gets the classic sorted-children parenthesis code.
//! A component is its cycle length plus the least rotation of the codes of
//! the trees hanging off the cycle, read in the direction of the map. The
//! graph is the sorted multiset of its components.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use super::modmat::{reduce, Mat2Zn};
use super::Budget;
use crate::error::Result;
use crate::Mat2Z;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FunctionalGraphCanon {
    pub n: u64,
    pub encoding: String,
}

impl fmt::Display for FunctionalGraphCanon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.encoding)
    }
}

pub fn canonical_graph(m: &Mat2Z, n: u64) -> Result<FunctionalGraphCanon> {
    canonical_graph_with(m, n, Budget::default())
}

pub fn canonical_graph_with(m: &Mat2Z, n: u64, budget: Budget) -> Result<FunctionalGraphCanon> {
    budget.check(n)?;
    let mm = reduce(m, n)?;
    Ok(FunctionalGraphCanon { n, encoding: encode(&mm) })
}

/// Whether `M` and `M'` induce isomorphic functional graphs on `L_n`.
pub fn same_local_statistics(m: &Mat2Z, m2: &Mat2Z, n: u64) -> Result<bool> {
    Ok(canonical_graph(m, n)? == canonical_graph(m2, n)?)
}

/// Least rotation start (Booth's algorithm).
fn least_rotation(s: &[u32]) -> usize {
    let n = s.len();
    let at = |i: isize| s[i as usize % n];
    let mut fail = vec![-1isize; 2 * n];
    let mut k: isize = 0;
    for j in 1..2 * n as isize {
        let sj = at(j);
        let mut i = fail[(j - k - 1) as usize];
        while i != -1 && sj != at(k + i + 1) {
            if sj < at(k + i + 1) {
                k = j - i - 1;
            }
            i = fail[i as usize];
        }
        if sj != at(k + i + 1) {
            if sj < at(k) {
                k = j;
            }
            fail[(j - k) as usize] = -1;
        } else {
            fail[(j - k) as usize] = i + 1;
        }
    }
    k as usize % n
}

fn run_length(items: impl Iterator<Item = String>) -> String {
    let mut out: Vec<String> = Vec::new();
    let mut last: Option<(String, usize)> = None;
    for it in items {
        match &mut last {
            Some((s, c)) if *s == it => *c += 1,
            _ => {
                if let Some((s, c)) = last.take() {
                    out.push(format!("{s}*{c}"));
                }
                last = Some((it, 1));
            }
        }
    }
    if let Some((s, c)) = last {
        out.push(format!("{s}*{c}"));
    }
    out.join(",")
}

fn encode(m: &Mat2Zn) -> String {
    let n = m.modulus();
    let total = (n * n) as usize;
    let next: Vec<u32> = (0..total)
        .map(|i| {
            let (x, y) = m.apply(i as u64 / n, i as u64 % n);
            (x * n + y) as u32
        })
        .collect();

    // cycles, in map order
    let mut on_cycle = vec![false; total];
    let mut walk = vec![0u32; total];
    let mut cycles: Vec<Vec<u32>> = Vec::new();
    let mut id = 0u32;
    for start in 0..total {
        if walk[start] != 0 {
            continue;
        }
        id += 1;
        let mut x = start;
        while walk[x] == 0 {
            walk[x] = id;
            x = next[x] as usize;
        }
        if walk[x] == id {
            let mut cyc = vec![x as u32];
            on_cycle[x] = true;
            let mut y = next[x] as usize;
            while y != x {
                on_cycle[y] = true;
                cyc.push(y as u32);
                y = next[y] as usize;
            }
            cycles.push(cyc);
        }
    }
    drop(walk);

    // tree children: predecessors that are not on a cycle (CSR layout)
    let mut start_idx = vec![0u32; total + 1];
    for x in 0..total {
        if !on_cycle[x] {
            start_idx[next[x] as usize + 1] += 1;
        }
    }
    for i in 0..total {
        start_idx[i + 1] += start_idx[i];
    }
    let mut fill = start_idx.clone();
    let mut children = vec![0u32; start_idx[total] as usize];
    for x in 0..total {
        if !on_cycle[x] {
            let p = next[x] as usize;
            children[fill[p] as usize] = x as u32;
            fill[p] += 1;
        }
    }
    drop(fill);

    // breadth-first from the cycle nodes; reversed it is a leaves-first order
    let mut order: Vec<u32> = cycles.iter().flatten().copied().collect();
    let mut head = 0;
    while head < order.len() {
        let x = order[head] as usize;
        head += 1;
        order.extend_from_slice(&children[start_idx[x] as usize..start_idx[x + 1] as usize]);
    }
    debug_assert_eq!(order.len(), total);

    let mut intern: HashMap<Vec<u32>, u32> = HashMap::new();
    let mut codes: Vec<String> = Vec::new();
    let mut tree_id = vec![0u32; total];
    for &x in order.iter().rev() {
        let x = x as usize;
        let mut key: Vec<u32> = children[start_idx[x] as usize..start_idx[x + 1] as usize]
            .iter()
            .map(|&c| tree_id[c as usize])
            .collect();
        key.sort_unstable();
        let tid = match intern.get(&key) {
            Some(&t) => t,
            None => {
                let mut parts: Vec<&str> = key.iter().map(|&k| codes[k as usize].as_str()).collect();
                parts.sort_unstable();
                let code = format!("({})", parts.concat());
                let t = codes.len() as u32;
                codes.push(code);
                intern.insert(key, t);
                t
            }
        };
        tree_id[x] = tid;
    }

    // rank ids by code so rotations compare canonically across graphs
    let mut by_code: Vec<u32> = (0..codes.len() as u32).collect();
    by_code.sort_by(|&a, &b| codes[a as usize].cmp(&codes[b as usize]));
    let mut rank = vec![0u32; codes.len()];
    for (r, &t) in by_code.iter().enumerate() {
        rank[t as usize] = r as u32;
    }

    let mut components: BTreeMap<String, usize> = BTreeMap::new();
    for cyc in &cycles {
        let seq: Vec<u32> = cyc.iter().map(|&x| rank[tree_id[x as usize] as usize]).collect();
        let k = least_rotation(&seq);
        let len = seq.len();
        let body = run_length(
            (0..len).map(|i| codes[tree_id[cyc[(k + i) % len] as usize] as usize].clone()),
        );
        *components.entry(format!("{len}[{body}]")).or_insert(0) += 1;
    }
    components
        .into_iter()
        .map(|(c, k)| format!("{k}x{c}"))
        .collect::<Vec<_>>()
        .join(";")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(a: i64, b: i64, c: i64, d: i64) -> Mat2Z {
        Mat2Z::from_i64(a, b, c, d)
    }

    fn naive_least_rotation(s: &[u32]) -> Vec<u32> {
        (0..s.len())
            .map(|k| s[k..].iter().chain(&s[..k]).copied().collect::<Vec<_>>())
            .min()
            .unwrap()
    }

    #[test]
    fn booth_matches_naive() {
        let cases: Vec<Vec<u32>> = vec![
            vec![3, 1, 2],
            vec![1, 1, 1],
            vec![2, 1, 2, 1, 1],
            vec![0],
            vec![1, 0, 1, 0, 0, 1, 0],
            vec![5, 4, 4, 5, 4, 4, 4],
        ];
        for s in cases {
            let k = least_rotation(&s);
            let rot: Vec<u32> = s[k..].iter().chain(&s[..k]).copied().collect();
            assert_eq!(rot, naive_least_rotation(&s), "{s:?}");
        }
    }

    #[test]
    fn examples() {
        let g = canonical_graph(&m(0, 1, 1, 1), 5).unwrap();
        let t = canonical_graph(&m(1, 1, 1, 0), 5).unwrap();
        assert_eq!(g, t);
        for n in 2..6 {
            assert_eq!(
                canonical_graph(&Mat2Z::identity(), n).unwrap(),
                canonical_graph(&Mat2Z::identity(), n).unwrap()
            );
        }
        assert!(same_local_statistics(&m(2, 0, 0, 3), &m(3, 0, 0, 2), 6).unwrap());
        assert!(!same_local_statistics(&m(2, 3, 2, 2), &m(2, 0, 0, 2), 3).unwrap());
    }

    #[test]
    fn inverse_and_negation_pairs() {
        let a = m(4, 9, 7, 16);
        let ai = a.inverse().unwrap();
        assert!(same_local_statistics(&a, &ai, 7).unwrap());
        let g = m(0, 1, 1, 1);
        assert!(same_local_statistics(&g, &-g.clone(), 5).unwrap());
    }

    #[test]
    fn pretails_distinguish() {
        // same cycle structure on L_2 (only the origin is periodic), different pretails
        let nil = m(0, 1, 0, 0);
        let zero = Mat2Z::zero();
        let a = canonical_graph(&nil, 2).unwrap();
        let b = canonical_graph(&zero, 2).unwrap();
        assert_ne!(a, b);
        assert_eq!(b.encoding, "1x1[(()()())*1]");
    }
}
