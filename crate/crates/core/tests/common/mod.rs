//! Brute-force reference computations kept apart from the library's fast
//! paths: explicit 4x4 matrices, dense products, direct summation.

#![allow(dead_code)]

use num_complex::Complex64 as C;

pub type Mat = Vec<Vec<C>>;

fn c(re: f64, im: f64) -> C {
    C::new(re, im)
}

pub fn letter(ch: char) -> Mat {
    match ch {
        'I' => vec![vec![c(1., 0.), c(0., 0.)], vec![c(0., 0.), c(1., 0.)]],
        'X' => vec![vec![c(0., 0.), c(1., 0.)], vec![c(1., 0.), c(0., 0.)]],
        'Y' => vec![vec![c(0., 0.), c(0., -1.)], vec![c(0., 1.), c(0., 0.)]],
        'Z' => vec![vec![c(1., 0.), c(0., 0.)], vec![c(0., 0.), c(-1., 0.)]],
        _ => panic!("bad letter {ch}"),
    }
}

pub fn kron(a: &Mat, b: &Mat) -> Mat {
    let (n, m) = (a.len(), b.len());
    let mut out = vec![vec![c(0., 0.); n * m]; n * m];
    for i in 0..n {
        for j in 0..n {
            for k in 0..m {
                for l in 0..m {
                    out[i * m + k][j * m + l] = a[i][j] * b[k][l];
                }
            }
        }
    }
    out
}

/// Dense matrix of a Pauli word, first letter as the leftmost factor.
pub fn pauli(word: &str) -> Mat {
    let mut chars = word.chars();
    let mut m = letter(chars.next().expect("non-empty"));
    for ch in chars {
        m = kron(&m, &letter(ch));
    }
    m
}

pub fn mul(a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    let mut out = vec![vec![c(0., 0.); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k] == c(0., 0.) {
                continue;
            }
            for j in 0..n {
                out[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    out
}

pub fn identity(n: usize) -> Mat {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { c(1., 0.) } else { c(0., 0.) }).collect())
        .collect()
}

pub fn dagger(a: &Mat) -> Mat {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| a[j][i].conj()).collect()).collect()
}

pub fn sub(a: &Mat, b: &Mat) -> Mat {
    a.iter()
        .zip(b)
        .map(|(r, s)| r.iter().zip(s).map(|(x, y)| x - y).collect())
        .collect()
}

pub fn max_abs(a: &Mat) -> f64 {
    a.iter().flatten().map(|x| x.norm()).fold(0.0, f64::max)
}

pub fn max_off_diag(a: &Mat) -> f64 {
    let mut worst: f64 = 0.0;
    for (i, row) in a.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            if i != j {
                worst = worst.max(x.norm());
            }
        }
    }
    worst
}

/// `(I + s P) / 2`.
pub fn projector(word: &str, sign: f64) -> Mat {
    let p = pauli(word);
    let n = p.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (if i == j { c(1., 0.) } else { c(0., 0.) } + p[i][j] * sign) * 0.5)
                .collect()
        })
        .collect()
}

pub fn expectation(psi: &[C], m: &Mat) -> f64 {
    let mut total = c(0., 0.);
    for i in 0..psi.len() {
        for j in 0..psi.len() {
            total += psi[i].conj() * m[i][j] * psi[j];
        }
    }
    total.re
}

/// `s1`: `(cos a, cos a, sin b, sin b)` normalized.
pub fn s1(a: f64, b: f64) -> Vec<C> {
    normalized([a.cos(), a.cos(), b.sin(), b.sin()])
}

/// `s2`: `(sin a, sin a, cos b, cos b)` normalized.
pub fn s2(a: f64, b: f64) -> Vec<C> {
    normalized([a.sin(), a.sin(), b.cos(), b.cos()])
}

fn normalized(v: [f64; 4]) -> Vec<C> {
    let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    v.iter().map(|x| c(x / norm, 0.)).collect()
}

/// Joint eigenvalue probabilities of a context; outcome bit k = 1 means
/// observable k reads -1, first observable most significant.
pub fn coarse_probs(psi: &[C], words: &[&str]) -> Vec<f64> {
    let k = words.len();
    (0..1usize << k)
        .map(|outcome| {
            let mut m = identity(psi.len());
            for (idx, w) in words.iter().enumerate() {
                let sign = if (outcome >> (k - 1 - idx)) & 1 == 0 { 1.0 } else { -1.0 };
                m = mul(&m, &projector(w, sign));
            }
            expectation(psi, &m)
        })
        .collect()
}

pub fn h(probs: &[f64]) -> f64 {
    let mut total = 0.0;
    for &p in probs {
        if p > 0.0 {
            total -= p * p.ln() / std::f64::consts::LN_2;
        }
    }
    total
}

/// Direct summation of the five-cycle inequality.
#[allow(clippy::too_many_arguments)]
pub fn m5(x2: f64, x3: f64, x4: f64, x12: f64, x23: f64, x34: f64, x45: f64, x51: f64) -> f64 {
    x51 - x12 - x23 - x34 - x45 + x2 + x3 + x4
}

/// Coarse M of a five-observable cycle on `psi`.
pub fn coarse_m(psi: &[C], obs: [&str; 5]) -> f64 {
    let hs = |i: usize| h(&coarse_probs(psi, &[obs[i]]));
    let hp = |i: usize| h(&coarse_probs(psi, &[obs[i], obs[(i + 1) % 5]]));
    m5(hs(1), hs(2), hs(3), hp(0), hp(1), hp(2), hp(3), hp(4))
}

pub const TABLE1: [&str; 5] = ["ZZ", "XX", "XI", "XZ", "IZ"];
pub const TABLE2: [&str; 5] = ["ZZ", "YX", "XZ", "ZX", "XY"];

/// The eight contexts of a cycle: singles X2..X4, then pairs.
pub fn contexts(obs: [&'static str; 5]) -> Vec<Vec<&'static str>> {
    let mut out: Vec<Vec<&'static str>> = (1..4).map(|i| vec![obs[i]]).collect();
    out.extend((0..5).map(|i| vec![obs[i], obs[(i + 1) % 5]]));
    out
}
