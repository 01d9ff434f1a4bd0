//! Word-sized elements of `Z[zeta]`, `zeta^4 = -1`, for the determinant gate.

use std::ops::{Add, Mul};

use num_traits::ToPrimitive;
use skein_core::{Cyclotomic8, LaurentPoly};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct SmallCyc(pub [i64; 4]);

impl SmallCyc {
    pub const ZERO: SmallCyc = SmallCyc([0; 4]);
    pub const ONE: SmallCyc = SmallCyc([1, 0, 0, 0]);

    /// Value of `p` at `zeta`; `None` if a coefficient leaves `i64`.
    pub fn eval(p: &LaurentPoly) -> Option<SmallCyc> {
        let c = p.eval_zeta8();
        let mut out = [0i64; 4];
        for (o, x) in out.iter_mut().zip(c.coeffs()) {
            *o = x.to_i64()?;
        }
        Some(SmallCyc(out))
    }

    pub fn conj(self) -> SmallCyc {
        let [a, b, c, d] = self.0;
        SmallCyc([a, -d, -c, -b])
    }

    pub fn is_zero(self) -> bool {
        self.0 == [0; 4]
    }

    /// `x * conj(x)` when it is a rational integer.
    pub fn norm(self) -> Option<i64> {
        let n = self * self.conj();
        (n.0[1..] == [0, 0, 0]).then_some(n.0[0])
    }

    pub fn to_big(self) -> Cyclotomic8 {
        Cyclotomic8::from_i64(self.0)
    }
}

impl Add for SmallCyc {
    type Output = SmallCyc;
    fn add(self, o: SmallCyc) -> SmallCyc {
        SmallCyc(std::array::from_fn(|i| self.0[i] + o.0[i]))
    }
}

impl Mul for SmallCyc {
    type Output = SmallCyc;
    fn mul(self, o: SmallCyc) -> SmallCyc {
        let (a, b) = (self.0, o.0);
        SmallCyc([
            a[0] * b[0] - a[1] * b[3] - a[2] * b[2] - a[3] * b[1],
            a[0] * b[1] + a[1] * b[0] - a[2] * b[3] - a[3] * b[2],
            a[0] * b[2] + a[1] * b[1] + a[2] * b[0] - a[3] * b[3],
            a[0] * b[3] + a[1] * b[2] + a[2] * b[1] + a[3] * b[0],
        ])
    }
}
