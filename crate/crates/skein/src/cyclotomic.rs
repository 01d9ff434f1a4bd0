//! `Z[zeta]` with `zeta^4 = -1`: the ring where the bracket is evaluated at a
//! primitive 8th root of unity.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// `c0 + c1 zeta + c2 zeta^2 + c3 zeta^3`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Cyclotomic8 {
    c: [BigInt; 4],
}

impl Cyclotomic8 {
    pub fn new(c: [BigInt; 4]) -> Self {
        Self { c }
    }

    pub fn from_i64(c: [i64; 4]) -> Self {
        Self { c: c.map(BigInt::from) }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_i64([1, 0, 0, 0])
    }

    pub fn zeta() -> Self {
        Self::from_i64([0, 1, 0, 0])
    }

    /// `zeta^k` for any integer `k`.
    pub fn zeta_pow(k: i64) -> Self {
        let r = k.rem_euclid(8) as usize;
        let mut c = [0i64; 4];
        if r < 4 {
            c[r] = 1;
        } else {
            c[r - 4] = -1;
        }
        Self::from_i64(c)
    }

    pub fn coeffs(&self) -> &[BigInt; 4] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    /// The automorphism `zeta -> -zeta^3` (complex conjugation).
    pub fn conj(&self) -> Self {
        let [a, b, c, d] = &self.c;
        // zeta^1 -> -zeta^3, zeta^2 -> -zeta^2, zeta^3 -> -zeta
        Self { c: [a.clone(), -d, -c, -b] }
    }

    /// `Some(n)` when the element is the rational integer `n`.
    pub fn as_scalar(&self) -> Option<&BigInt> {
        self.c[1..].iter().all(Zero::is_zero).then_some(&self.c[0])
    }

    /// `x * conj(x)`.
    pub fn norm(&self) -> Self {
        self * &self.conj()
    }

    /// Square root of the norm when the norm is a perfect-square integer;
    /// this is `|x|` for elements of the form `unit * integer`.
    pub fn abs_integer(&self) -> Option<BigInt> {
        let n = self.norm();
        let s = n.as_scalar()?;
        if s.is_negative() {
            return None;
        }
        let r = s.sqrt();
        (&r * &r == *s).then_some(r)
    }
}

fn mul(x: &Cyclotomic8, y: &Cyclotomic8) -> Cyclotomic8 {
    let mut out: [BigInt; 4] = Default::default();
    for (i, a) in x.c.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in y.c.iter().enumerate() {
            let t = a * b;
            let k = i + j;
            if k < 4 {
                out[k] += t;
            } else {
                out[k - 4] -= t;
            }
        }
    }
    Cyclotomic8 { c: out }
}

impl Add<&Cyclotomic8> for &Cyclotomic8 {
    type Output = Cyclotomic8;
    fn add(self, rhs: &Cyclotomic8) -> Cyclotomic8 {
        Cyclotomic8 { c: std::array::from_fn(|i| &self.c[i] + &rhs.c[i]) }
    }
}

impl Sub<&Cyclotomic8> for &Cyclotomic8 {
    type Output = Cyclotomic8;
    fn sub(self, rhs: &Cyclotomic8) -> Cyclotomic8 {
        Cyclotomic8 { c: std::array::from_fn(|i| &self.c[i] - &rhs.c[i]) }
    }
}

impl Mul<&Cyclotomic8> for &Cyclotomic8 {
    type Output = Cyclotomic8;
    fn mul(self, rhs: &Cyclotomic8) -> Cyclotomic8 {
        mul(self, rhs)
    }
}

impl Neg for &Cyclotomic8 {
    type Output = Cyclotomic8;
    fn neg(self) -> Cyclotomic8 {
        Cyclotomic8 { c: std::array::from_fn(|i| -&self.c[i]) }
    }
}

impl Add for Cyclotomic8 {
    type Output = Cyclotomic8;
    fn add(self, rhs: Cyclotomic8) -> Cyclotomic8 {
        &self + &rhs
    }
}

impl Sub for Cyclotomic8 {
    type Output = Cyclotomic8;
    fn sub(self, rhs: Cyclotomic8) -> Cyclotomic8 {
        &self - &rhs
    }
}

impl Mul for Cyclotomic8 {
    type Output = Cyclotomic8;
    fn mul(self, rhs: Cyclotomic8) -> Cyclotomic8 {
        &self * &rhs
    }
}

impl Neg for Cyclotomic8 {
    type Output = Cyclotomic8;
    fn neg(self) -> Cyclotomic8 {
        -&self
    }
}

impl fmt::Debug for Cyclotomic8 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = &self.c;
        write!(f, "({a}, {b}, {c}, {d})")
    }
}
