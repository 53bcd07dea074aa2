//! Brute-force oracles over small prime fields and symmetric groups. Nothing
//! here calls into the library's formulas.

#![allow(dead_code)]

use std::collections::BTreeMap;

/// Square matrix over `F_p`, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat {
    pub n: usize,
    pub p: u64,
    pub a: Vec<u64>,
}

impl Mat {
    pub fn identity(n: usize, p: u64) -> Self {
        let mut a = vec![0; n * n];
        for i in 0..n {
            a[i * n + i] = 1;
        }
        Self { n, p, a }
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.a[i * self.n + j]
    }

    pub fn mul(&self, o: &Mat) -> Mat {
        let n = self.n;
        let mut a = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                a[i * n + j] = (0..n).map(|k| self.get(i, k) * o.get(k, j)).sum::<u64>() % self.p;
            }
        }
        Mat { n, p: self.p, a }
    }

    pub fn minus_identity(&self) -> Mat {
        let mut m = self.clone();
        for i in 0..self.n {
            let x = &mut m.a[i * self.n + i];
            *x = (*x + self.p - 1) % self.p;
        }
        m
    }

    pub fn rank(&self) -> usize {
        let (n, p) = (self.n, self.p);
        let mut m: Vec<Vec<u64>> = (0..n).map(|i| self.a[i * n..(i + 1) * n].to_vec()).collect();
        let mut rank = 0;
        for col in 0..n {
            let Some(piv) = (rank..n).find(|&r| m[r][col] != 0) else { continue };
            m.swap(rank, piv);
            let inv = pow_mod(m[rank][col], p - 2, p);
            for x in m[rank].iter_mut() {
                *x = *x * inv % p;
            }
            let pivot_row = m[rank].clone();
            for (r, row) in m.iter_mut().enumerate() {
                if r != rank && row[col] != 0 {
                    let f = row[col];
                    for (x, y) in row.iter_mut().zip(&pivot_row) {
                        *x = (*x + p * p - f * y) % p;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    pub fn is_invertible(&self) -> bool {
        self.rank() == self.n
    }
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

/// Every `n × n` matrix over `F_p`.
pub fn all_matrices(n: usize, p: u64) -> impl Iterator<Item = Mat> {
    let total = p.pow((n * n) as u32);
    (0..total).map(move |mut code| {
        let a = (0..n * n)
            .map(|_| {
                let d = code % p;
                code /= p;
                d
            })
            .collect();
        Mat { n, p, a }
    })
}

pub fn gl_count(n: usize, p: u64) -> u64 {
    all_matrices(n, p).filter(Mat::is_invertible).count() as u64
}

/// Invertible matrices commuting with `x`.
pub fn centralizer_count(x: &Mat) -> u64 {
    all_matrices(x.n, x.p)
        .filter(|m| m.mul(x) == x.mul(m) && m.is_invertible())
        .count() as u64
}

/// Unipotent matrices grouped by Jordan type (parts listed descending).
pub fn unipotent_type_counts(n: usize, p: u64) -> BTreeMap<Vec<usize>, u64> {
    let mut out = BTreeMap::new();
    for m in all_matrices(n, p) {
        let nil = m.minus_identity();
        let mut ranks = vec![n];
        let mut power = Mat::identity(n, p);
        for _ in 0..n {
            power = power.mul(&nil);
            ranks.push(power.rank());
        }
        if ranks[n] != 0 {
            continue;
        }
        // blocks of size ≥ k: ranks[k-1] - ranks[k]
        let conj: Vec<usize> = (1..=n).map(|k| ranks[k - 1] - ranks[k]).filter(|&c| c > 0).collect();
        *out.entry(conjugate(&conj)).or_insert(0) += 1;
    }
    out
}

pub fn conjugate(parts: &[usize]) -> Vec<usize> {
    let max = parts.first().copied().unwrap_or(0);
    (1..=max).map(|k| parts.iter().filter(|&&x| x >= k).count()).collect()
}

/// Unipotent matrix with Jordan blocks of sizes `mu`.
pub fn jordan_unipotent(mu: &[usize], p: u64) -> Mat {
    let n = mu.iter().sum();
    let mut m = Mat::identity(n, p);
    let mut start = 0;
    for &b in mu {
        for i in start..start + b - 1 {
            m.a[i * n + i + 1] = 1;
        }
        start += b;
    }
    m
}

/// Monic irreducible polynomials over `F_p` of degree `d ≤ 3` other than `x`,
/// as coefficient lists `c_0..c_{d-1}`.
fn irreducibles(d: usize, p: u64) -> Vec<Vec<u64>> {
    assert!(d <= 3);
    let total = p.pow(d as u32);
    (0..total)
        .map(|mut code| {
            (0..d)
                .map(|_| {
                    let c = code % p;
                    code /= p;
                    c
                })
                .collect::<Vec<u64>>()
        })
        .filter(|c| c[0] != 0)
        .filter(|c| {
            d == 1 || (0..p).all(|x| {
                let v = (0..d).map(|i| c[i] * pow_mod(x, i as u64, p)).sum::<u64>() + pow_mod(x, d as u64, p);
                !v.is_multiple_of(p)
            })
        })
        .collect()
}

/// Block-diagonal companion matrix of pairwise distinct irreducible
/// polynomials of degrees `rho`, if `F_p` has enough of them. Its
/// centralizer is the torus of type `rho`.
pub fn regular_semisimple(rho: &[usize], p: u64) -> Option<Mat> {
    let n: usize = rho.iter().sum();
    let mut used: BTreeMap<usize, usize> = BTreeMap::new();
    let mut m = Mat { n, p, a: vec![0; n * n] };
    let mut start = 0;
    for &d in rho {
        let k = used.entry(d).or_insert(0);
        let poly = irreducibles(d, p).into_iter().nth(*k)?;
        *k += 1;
        for i in 1..d {
            m.a[(start + i) * n + start + i - 1] = 1;
        }
        for (i, c) in poly.iter().enumerate() {
            m.a[(start + i) * n + start + d - 1] = (p - c) % p;
        }
        start += d;
    }
    Some(m)
}

/// All permutations of `0..n` in one-line notation.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Cycle type, descending.
pub fn cycle_type(perm: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; perm.len()];
    let mut out = Vec::new();
    for s in 0..perm.len() {
        let mut len = 0;
        let mut i = s;
        while !seen[i] {
            seen[i] = true;
            i = perm[i];
            len += 1;
        }
        if len > 0 {
            out.push(len);
        }
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// Size of the centralizer in `S_n` of a permutation of cycle type `rho`.
pub fn symmetric_centralizer(rho: &[usize]) -> u64 {
    let n = rho.iter().sum();
    let perms = permutations(n);
    let x = perms.iter().find(|p| cycle_type(p) == rho).unwrap();
    perms
        .iter()
        .filter(|g| (0..n).all(|i| g[x[i]] == x[g[i]]))
        .count() as u64
}
