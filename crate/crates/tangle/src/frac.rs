//! Small exact fractions, including `1/0` for the ∞-tangle.

use std::fmt;

use num_integer::Integer;

use skein_core::Connectivity;

/// `n / d` in lowest terms with `d >= 0`; infinity is `1/0`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Frac {
    n: i64,
    d: i64,
}

impl Frac {
    pub fn new(n: i64, d: i64) -> Self {
        assert!(n != 0 || d != 0, "0/0 is not a fraction");
        if d == 0 {
            return Self::INFINITY;
        }
        let g = n.gcd(&d);
        let s = d.signum();
        Self { n: s * n / g, d: s * d / g }
    }

    pub const INFINITY: Frac = Frac { n: 1, d: 0 };

    pub fn int(n: i64) -> Self {
        Self { n, d: 1 }
    }

    pub fn num(self) -> i64 {
        self.n
    }

    pub fn den(self) -> i64 {
        self.d
    }

    pub fn is_infinite(self) -> bool {
        self.d == 0
    }

    pub fn is_integer(self) -> bool {
        self.d == 1
    }

    pub fn signum(self) -> i64 {
        self.n.signum()
    }

    pub fn neg(self) -> Self {
        if self.is_infinite() {
            self
        } else {
            Self { n: -self.n, d: self.d }
        }
    }

    pub fn recip(self) -> Self {
        Self::new(self.d, self.n)
    }

    /// Fraction after a quarter turn, `-1/f`.
    pub fn rotated(self) -> Self {
        self.recip().neg()
    }

    pub fn add_int(self, k: i64) -> Self {
        if self.is_infinite() {
            self
        } else {
            Self::new(self.n + k * self.d, self.d)
        }
    }

    /// Integer part rounded toward zero; `None` for infinity.
    pub fn trunc(self) -> Option<i64> {
        (!self.is_infinite()).then(|| self.n / self.d)
    }

    /// Sum of the continued-fraction terms of `|f|`, the crossing count of
    /// the reduced rational tangle with this fraction.
    pub fn cf_cost(self) -> i64 {
        let (mut p, mut q) = (self.n.abs(), self.d);
        let mut s = 0;
        while q != 0 {
            s += p / q;
            (p, q) = (q, p % q);
        }
        s
    }

    /// Boundary matching of the rational tangle `n/d`.
    pub fn connectivity(self) -> Connectivity {
        if self.n % 2 == 0 {
            Connectivity::H
        } else if self.d % 2 == 0 {
            Connectivity::V
        } else {
            Connectivity::X
        }
    }
}

impl fmt::Debug for Frac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.n, self.d)
    }
}

impl fmt::Display for Frac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.d == 1 {
            write!(f, "{}", self.n)
        } else {
            write!(f, "{}/{}", self.n, self.d)
        }
    }
}
