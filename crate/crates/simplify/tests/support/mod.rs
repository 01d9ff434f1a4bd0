//! Brute-force invariants of planar diagram codes, independent of the
//! skein-module code paths.
#![allow(dead_code)]

use std::collections::BTreeMap;

use simplifier::PDCode;
use skein_core::LaurentPoly;

pub type Poly = BTreeMap<i64, i64>;

fn find(p: &mut Vec<usize>, x: usize) -> usize {
    if p[x] != x {
        let r = find(p, p[x]);
        p[x] = r;
    }
    p[x]
}

/// Sum over all 2^n smoothings, `A^(a - b) d^(loops - 1)` with `d = -A^2 - A^-2`.
pub fn state_sum(pd: &PDCode) -> Poly {
    let n = pd.len();
    if n == 0 {
        return Poly::from([(0, 1)]);
    }
    let labels = pd.crossings.iter().flatten().copied().max().unwrap() as usize + 1;
    let mut by_loops: BTreeMap<(usize, i64), i64> = BTreeMap::new();
    for s in 0u32..1 << n {
        let mut p: Vec<usize> = (0..labels).collect();
        for (x, &[a, b, c, d]) in pd.crossings.iter().enumerate() {
            let pairs = if s >> x & 1 == 0 { [(a, b), (c, d)] } else { [(a, d), (b, c)] };
            for (u, v) in pairs {
                let (ru, rv) = (find(&mut p, u as usize), find(&mut p, v as usize));
                p[ru] = rv;
            }
        }
        let used: std::collections::BTreeSet<usize> =
            pd.crossings.iter().flatten().map(|&l| find(&mut p, l as usize)).collect();
        let a_count = n as i64 - s.count_ones() as i64;
        *by_loops.entry((used.len(), a_count - s.count_ones() as i64)).or_default() += 1;
    }
    let delta: Poly = Poly::from([(2, -1), (-2, -1)]);
    let mut out = Poly::new();
    for ((loops, e), k) in by_loops {
        let mut term = Poly::from([(e, k)]);
        for _ in 1..loops {
            term = mul(&term, &delta);
        }
        for (x, c) in term {
            *out.entry(x).or_default() += c;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

pub fn mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (x, c) in a {
        for (y, d) in b {
            *out.entry(x + y).or_default() += c * d;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

pub fn as_poly(l: &LaurentPoly) -> Poly {
    l.terms().map(|(e, c)| (e, i64::try_from(c).unwrap())).filter(|(_, c)| *c != 0).collect()
}

/// `(-A^3)^(-w)` times the bracket; unchanged by every Reidemeister move.
pub fn normalized_bracket(pd: &PDCode) -> Poly {
    let w = pd.writhe();
    let sign = if w % 2 == 0 { 1 } else { -1 };
    mul(&state_sum(pd), &Poly::from([(-3 * w, sign)]))
}

pub fn det_bareiss(mut m: Vec<Vec<i128>>) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n {
        if m[k][k] == 0 {
            let Some(r) = (k + 1..n).find(|&r| m[r][k] != 0) else { return 0 };
            m.swap(k, r);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

/// Determinant from the Goeritz matrix of a checkerboard shading.
pub fn goeritz_determinant(pd: &PDCode) -> i128 {
    let faces = pd.faces().unwrap();
    let mut face_of = vec![0; 4 * pd.len()];
    for (f, ds) in faces.iter().enumerate() {
        for &d in ds {
            face_of[d] = f;
        }
    }
    // The corner between ports k and k + 1 of crossing x is the face of dart 4x + k + 1.
    let corner = |x: usize, k: usize| face_of[4 * x + (k + 1) % 4];
    let mut colour = vec![u8::MAX; faces.len()];
    colour[corner(0, 0)] = 0;
    let mut changed = true;
    while changed {
        changed = false;
        for x in 0..pd.len() {
            for k in 0..4 {
                let (f, g) = (corner(x, k), corner(x, (k + 1) % 4));
                if colour[f] != u8::MAX && colour[g] == u8::MAX {
                    colour[g] = 1 - colour[f];
                    changed = true;
                }
                if colour[g] != u8::MAX && colour[f] == u8::MAX {
                    colour[f] = 1 - colour[g];
                    changed = true;
                }
            }
        }
    }
    let shaded: Vec<usize> = (0..faces.len()).filter(|&f| colour[f] == 0).collect();
    let index: BTreeMap<usize, usize> = shaded.iter().enumerate().map(|(i, &f)| (f, i)).collect();
    let m = shaded.len();
    let mut g = vec![vec![0i128; m]; m];
    for x in 0..pd.len() {
        // The A-smoothing joins the corners (1,2) and (3,0).
        let (eta, f, h) = if colour[corner(x, 1)] == 0 { (1, corner(x, 1), corner(x, 3)) } else { (-1, corner(x, 0), corner(x, 2)) };
        if f != h {
            let (i, j) = (index[&f], index[&h]);
            g[i][j] -= eta;
            g[j][i] -= eta;
            g[i][i] += eta;
            g[j][j] += eta;
        }
    }
    let minor: Vec<Vec<i128>> = g[1..].iter().map(|r| r[1..].to_vec()).collect();
    det_bareiss(minor).abs()
}

