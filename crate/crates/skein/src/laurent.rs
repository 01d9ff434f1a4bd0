//! Laurent polynomials in `A` with arbitrary-precision integer coefficients.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::cyclotomic::Cyclotomic8;

/// `sum coeffs[i] * A^(lo + i)`, kept normalized: no zero at either end,
/// and the zero polynomial is `lo = 0` with no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    lo: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// The variable `A`.
    pub fn a() -> Self {
        Self::monomial(1, 1)
    }

    pub fn monomial(c: impl Into<BigInt>, exp: i64) -> Self {
        Self::from_parts(exp, vec![c.into()])
    }

    /// Builds from `(exponent, coefficient)` pairs; repeated exponents add up.
    pub fn from_terms(terms: &[(i64, i64)]) -> Self {
        terms.iter().fold(Self::zero(), |acc, &(e, c)| &acc + &Self::monomial(c, e))
    }

    /// Normalizes an arbitrary dense coefficient run starting at `lo`.
    pub fn from_parts(lo: i64, mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        let lead = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == coeffs.len() {
            return Self::zero();
        }
        coeffs.drain(..lead);
        Self { lo: lo + lead as i64, coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.lo == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Lowest exponent with a nonzero coefficient (0 for the zero polynomial).
    pub fn lo(&self) -> i64 {
        self.lo
    }

    /// Highest exponent with a nonzero coefficient; `None` for zero.
    pub fn hi(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.lo + self.coeffs.len() as i64 - 1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        let i = exp - self.lo;
        if i < 0 || i >= self.coeffs.len() as i64 {
            BigInt::zero()
        } else {
            self.coeffs[i as usize].clone()
        }
    }

    /// Nonzero terms as `(exponent, coefficient)`, ascending.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.lo + i as i64, c))
    }

    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// Multiplication by `A^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self { lo: self.lo + k, coeffs: self.coeffs.clone() }
    }

    pub fn scale(&self, s: &BigInt) -> Self {
        Self::from_parts(self.lo, self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Substitutes `A -> A^-1`.
    pub fn mirror(&self) -> Self {
        match self.hi() {
            None => Self::zero(),
            Some(hi) => Self { lo: -hi, coeffs: self.coeffs.iter().rev().cloned().collect() },
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    /// `Some((sign, k))` when the polynomial is `sign * A^k` with `sign = ±1`.
    pub fn as_unit_monomial(&self) -> Option<(i8, i64)> {
        if self.coeffs.len() != 1 {
            return None;
        }
        match self.coeffs[0].to_i8() {
            Some(s @ (1 | -1)) => Some((s, self.lo)),
            _ => None,
        }
    }

    pub fn is_unit_monomial(&self) -> bool {
        self.as_unit_monomial().is_some()
    }

    /// Image under `A -> zeta`, `zeta^4 = -1`.
    pub fn eval_zeta8(&self) -> Cyclotomic8 {
        let mut c: [BigInt; 4] = Default::default();
        for (e, v) in self.terms() {
            let r = e.rem_euclid(8) as usize;
            if r < 4 {
                c[r] += v;
            } else {
                c[r - 4] -= v;
            }
        }
        Cyclotomic8::new(c)
    }

    /// Exact division by an integer; `None` unless every coefficient divides.
    pub fn div_exact(&self, d: &BigInt) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            if !(c % d).is_zero() {
                return None;
            }
            out.push(c / d);
        }
        Some(Self { lo: self.lo, coeffs: out })
    }
}

pub fn lp_add(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    let lo = a.lo.min(b.lo);
    let hi = a.hi().unwrap().max(b.hi().unwrap());
    let mut out = vec![BigInt::zero(); (hi - lo + 1) as usize];
    for (i, c) in a.coeffs.iter().enumerate() {
        out[(a.lo - lo) as usize + i] += c;
    }
    for (i, c) in b.coeffs.iter().enumerate() {
        out[(b.lo - lo) as usize + i] += c;
    }
    LaurentPoly::from_parts(lo, out)
}

pub fn lp_mul(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    if a.is_zero() || b.is_zero() {
        return LaurentPoly::zero();
    }
    let mut out = vec![BigInt::zero(); a.coeffs.len() + b.coeffs.len() - 1];
    for (i, x) in a.coeffs.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.coeffs.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    LaurentPoly::from_parts(a.lo + b.lo, out)
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { lo: self.lo, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $f:expr) => {
        impl $tr<&LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly {
                $f(self, rhs)
            }
        }
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                $f(&self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, lp_add);
forward_binop!(Mul, mul, lp_mul);
forward_binop!(Sub, sub, |a: &LaurentPoly, b: &LaurentPoly| lp_add(a, &-b));

impl PartialOrd for LaurentPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for LaurentPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.lo, &self.coeffs).cmp(&(other.lo, &other.coeffs))
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms().collect::<Vec<_>>().into_iter().rev() {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let unit = mag.is_one();
            match (e, unit) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "A")?,
                (1, false) => write!(f, "{mag}A")?,
                (_, true) => write!(f, "A^{e}")?,
                (_, false) => write!(f, "{mag}A^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseLaurentError(pub String);

impl fmt::Display for ParseLaurentError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "bad Laurent polynomial: {}", self.0)
    }
}

impl std::error::Error for ParseLaurentError {}

/// Accepts the `Display` form, e.g. `-A^5 - A^-3 + A^-7` or `3A - 2`.
impl FromStr for LaurentPoly {
    type Err = ParseLaurentError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseLaurentError(s.to_string());
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err());
        }
        let bytes = compact.as_bytes();
        let mut out = LaurentPoly::zero();
        let mut i = 0;
        while i < bytes.len() {
            let mut sign = BigInt::one();
            if bytes[i] == b'+' || bytes[i] == b'-' {
                if bytes[i] == b'-' {
                    sign = -sign;
                }
                i += 1;
            } else if i > 0 {
                return Err(err());
            }
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let mag = if i > start { compact[start..i].parse::<BigInt>().map_err(|_| err())? } else { BigInt::one() };
            let mut exp = 0i64;
            if i < bytes.len() && bytes[i] == b'A' {
                i += 1;
                exp = 1;
                if i < bytes.len() && bytes[i] == b'^' {
                    i += 1;
                    let es = i;
                    if i < bytes.len() && bytes[i] == b'-' {
                        i += 1;
                    }
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    exp = compact[es..i].parse().map_err(|_| err())?;
                }
            } else if i == start {
                return Err(err());
            }
            out = &out + &LaurentPoly::monomial(sign * mag, exp);
        }
        Ok(out)
    }
}

#[derive(Serialize, Deserialize)]
struct Wire {
    lo: i64,
    coeffs: Vec<serde_json::Number>,
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| serde_json::Number::from_str(&c.to_string()).expect("integer literal"))
            .collect();
        Wire { lo: self.lo, coeffs }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let w = Wire::deserialize(d)?;
        let coeffs = w
            .coeffs
            .iter()
            .map(|n| n.to_string().parse::<BigInt>().map_err(|_| D::Error::custom(format!("non-integer coefficient {n}"))))
            .collect::<Result<Vec<_>, _>>()?;
        if coeffs.is_empty() {
            if w.lo != 0 {
                return Err(D::Error::custom("zero polynomial must have lo = 0"));
            }
            return Ok(LaurentPoly::zero());
        }
        if coeffs[0].is_zero() || coeffs[coeffs.len() - 1].is_zero() {
            return Err(D::Error::custom("coefficient list is not normalized"));
        }
        Ok(LaurentPoly { lo: w.lo, coeffs })
    }
}
