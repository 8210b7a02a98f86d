//! Oracles that share no code with the library's elimination routines.
#![allow(dead_code)]

use num_integer::Integer;

/// Determinant by permutation expansion (Leibniz); only for tiny matrices.
pub fn leibniz_det(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut total = 0i128;
    permute(&mut perm, 0, &mut |p| {
        let mut sign = 1i128;
        for i in 0..n {
            for j in i + 1..n {
                if p[i] > p[j] {
                    sign = -sign;
                }
            }
        }
        let prod: i128 = (0..n).map(|i| m[i][p[i]]).product();
        total += sign * prod;
    });
    total
}

fn permute(p: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == p.len() {
        f(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute(p, k + 1, f);
        p.swap(k, i);
    }
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// gcd of all `k x k` minors (the k-th determinantal divisor).
pub fn minor_gcd(m: &[Vec<i64>], cols: usize, k: usize) -> i128 {
    let rows = m.len();
    let mut g = 0i128;
    for rs in combinations(rows, k) {
        for cs in combinations(cols, k) {
            let sub: Vec<Vec<i128>> = rs.iter().map(|&r| cs.iter().map(|&c| m[r][c] as i128).collect()).collect();
            g = g.gcd(&leibniz_det(&sub));
        }
    }
    g
}

/// Rank as the largest `k` with a nonzero `k x k` minor.
pub fn minor_rank(m: &[Vec<i64>], cols: usize) -> usize {
    (1..=m.len().min(cols)).rev().find(|&k| minor_gcd(m, cols, k) != 0).unwrap_or(0)
}

/// Searches coefficient vectors in `[-bound, bound]^r` with `sum c_i g_i = v`.
pub fn brute_force_member(gens: &[Vec<i64>], v: &[i64], bound: i64) -> bool {
    fn go(gens: &[Vec<i64>], acc: &mut Vec<i64>, v: &[i64], bound: i64) -> bool {
        let Some((g, rest)) = gens.split_first() else {
            return acc.as_slice() == v;
        };
        for c in -bound..=bound {
            for (a, x) in acc.iter_mut().zip(g) {
                *a += c * x;
            }
            let hit = go(rest, acc, v, bound);
            for (a, x) in acc.iter_mut().zip(g) {
                *a -= c * x;
            }
            if hit {
                return true;
            }
        }
        false
    }
    go(gens, &mut vec![0; v.len()], v, bound)
}
