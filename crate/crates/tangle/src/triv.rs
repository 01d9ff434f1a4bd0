//! Deciding whether a bracket pair generates the unit ideal of `Z[A, A^-1]`.
//!
//! Over the rationals the question is a gcd computation. Over the integers
//! it also fails when `p` and `q` acquire a common factor modulo some prime.
//! The extended gcd over `Q` gives `p r' + q s' = N` with integer cofactors,
//! so only primes dividing `N` can obstruct. Instead of factoring `N`, the
//! Euclidean algorithm runs modulo `N` and splits the modulus whenever it
//! meets a leading coefficient that is a zero divisor.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use skein_core::LaurentPoly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Obstruction {
    /// A nonconstant common divisor over the rationals, made primitive.
    RationalDivisor(LaurentPoly),
    /// A prime modulo which `p` and `q` share a nonmonomial factor.
    Prime(BigInt),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrivializabilityCertificate {
    /// `p r + q s = 1` when the pair is trivializable and a certificate was built.
    pub cofactors: Option<(LaurentPoly, LaurentPoly)>,
    pub obstruction: Option<Obstruction>,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum TrivError {
    #[error("degenerate pair (0, 0)")]
    DegeneratePair,
}

type ZPoly = Vec<BigInt>;
type QPoly = Vec<BigRational>;

fn ztrim(mut v: ZPoly) -> ZPoly {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

fn qtrim(mut v: QPoly) -> QPoly {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

/// Coefficients of `A^(-lo) p`, a polynomial with nonzero constant term.
fn strip(p: &LaurentPoly) -> ZPoly {
    p.coeffs().to_vec()
}

fn to_laurent(v: &[BigInt], shift: i64) -> LaurentPoly {
    LaurentPoly::from_parts(shift, v.to_vec())
}

// ---- rational polynomials -------------------------------------------------

fn qdivrem(a: &QPoly, b: &QPoly) -> (QPoly, QPoly) {
    let mut r = a.clone();
    let db = b.len() - 1;
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let mut quo = vec![BigRational::zero(); r.len() - db];
    let inv = b[db].recip();
    while r.len() >= b.len() {
        let k = r.len() - b.len();
        let c = &r[r.len() - 1] * &inv;
        for (i, bi) in b.iter().enumerate() {
            r[k + i] -= &c * bi;
        }
        quo[k] = c;
        r.pop();
        r = qtrim(r);
    }
    (quo, r)
}

fn qmul(a: &QPoly, b: &QPoly) -> QPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    qtrim(out)
}

fn qsub(a: &QPoly, b: &QPoly) -> QPoly {
    let n = a.len().max(b.len());
    let z = BigRational::zero();
    qtrim((0..n).map(|i| a.get(i).unwrap_or(&z) - b.get(i).unwrap_or(&z)).collect())
}

/// `(g, s, t)` with `a s + b t = g`, `g` monic.
fn qext_gcd(a: &QPoly, b: &QPoly) -> (QPoly, QPoly, QPoly) {
    let one = vec![BigRational::one()];
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1): (QPoly, QPoly) = (one.clone(), Vec::new());
    let (mut t0, mut t1): (QPoly, QPoly) = (Vec::new(), one);
    while !r1.is_empty() {
        let (q, r) = qdivrem(&r0, &r1);
        let s2 = qsub(&s0, &qmul(&q, &s1));
        let t2 = qsub(&t0, &qmul(&q, &t1));
        (r0, r1) = (r1, r);
        (s0, s1) = (s1, s2);
        (t0, t1) = (t1, t2);
    }
    let inv = r0.last().unwrap().recip();
    let scale = |v: QPoly| v.into_iter().map(|c| c * &inv).collect::<QPoly>();
    (scale(r0), scale(s0), scale(t0))
}

fn to_q(v: &ZPoly) -> QPoly {
    v.iter().map(|c| BigRational::from_integer(c.clone())).collect()
}

fn primitive_part(v: &QPoly) -> ZPoly {
    let den = v.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: ZPoly = v.iter().map(|c| (c * BigRational::from_integer(den.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    let sign = if ints.last().is_some_and(|c| c.is_negative()) { -BigInt::one() } else { BigInt::one() };
    ints.into_iter().map(|c| c / &g * &sign).collect()
}

// ---- polynomials modulo an integer ----------------------------------------

fn reduce(v: &[BigInt], m: &BigInt) -> ZPoly {
    ztrim(v.iter().map(|c| c.mod_floor(m)).collect())
}

fn mmul(a: &ZPoly, b: &ZPoly, m: &BigInt) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    reduce(&out, m)
}

fn msub(a: &ZPoly, b: &ZPoly, m: &BigInt) -> ZPoly {
    let n = a.len().max(b.len());
    let z = BigInt::zero();
    reduce(&(0..n).map(|i| a.get(i).unwrap_or(&z) - b.get(i).unwrap_or(&z)).collect::<ZPoly>(), m)
}

fn mscale(a: &ZPoly, c: &BigInt, m: &BigInt) -> ZPoly {
    reduce(&a.iter().map(|x| x * c).collect::<ZPoly>(), m)
}

fn modinv(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.extended_gcd(m);
    e.gcd.is_one().then(|| e.x.mod_floor(m))
}

enum ModOutcome {
    /// A proper divisor of the modulus appeared as a zero divisor.
    Split(BigInt),
    /// `p a + q b = A^k` modulo every prime of the modulus.
    Unit { a: ZPoly, b: ZPoly, k: usize },
    /// The gcd is not a monomial modulo any prime of the modulus.
    Fail,
}

fn mod_ext_gcd(p: &ZPoly, q: &ZPoly, m: &BigInt) -> ModOutcome {
    let (mut r0, mut r1) = (reduce(p, m), reduce(q, m));
    let (mut s0, mut s1): (ZPoly, ZPoly) = (reduce(&[BigInt::one()], m), Vec::new());
    let (mut t0, mut t1): (ZPoly, ZPoly) = (Vec::new(), reduce(&[BigInt::one()], m));
    while !r1.is_empty() {
        let lc = r1.last().unwrap();
        let Some(inv) = modinv(lc, m) else {
            return ModOutcome::Split(lc.gcd(m));
        };
        // division with remainder
        let mut r = r0.clone();
        let mut quo = vec![BigInt::zero(); r.len().saturating_sub(r1.len() - 1).max(1)];
        while r.len() >= r1.len() {
            let k = r.len() - r1.len();
            let c = (r.last().unwrap() * &inv).mod_floor(m);
            for (i, bi) in r1.iter().enumerate() {
                r[k + i] = (&r[k + i] - &c * bi).mod_floor(m);
            }
            quo[k] = c;
            r = ztrim(r);
        }
        let quo = ztrim(quo);
        let s2 = msub(&s0, &mmul(&quo, &s1, m), m);
        let t2 = msub(&t0, &mmul(&quo, &t1, m), m);
        (r0, r1) = (r1, r);
        (s0, s1) = (s1, s2);
        (t0, t1) = (t1, t2);
    }
    let Some(lc) = r0.last() else {
        return ModOutcome::Fail;
    };
    let Some(inv) = modinv(lc, m) else {
        return ModOutcome::Split(lc.gcd(m));
    };
    let g = mscale(&r0, &inv, m);
    let k = g.len() - 1;
    for c in &g[..k] {
        if !c.is_zero() {
            let d = c.gcd(m);
            return if d.is_one() { ModOutcome::Fail } else { ModOutcome::Split(d) };
        }
    }
    ModOutcome::Unit { a: mscale(&s0, &inv, m), b: mscale(&t0, &inv, m), k }
}

struct Part {
    m: BigInt,
    a: ZPoly,
    b: ZPoly,
    k: usize,
}

/// Runs the modular Euclidean algorithm over a set of moduli covering every
/// prime of `n`; `Err` carries a modulus all of whose primes obstruct.
fn modular_parts(p: &ZPoly, q: &ZPoly, n: &BigInt) -> Result<Vec<Part>, BigInt> {
    let mut stack = vec![n.clone()];
    let mut parts = Vec::new();
    while let Some(m) = stack.pop() {
        if m.is_one() {
            continue;
        }
        match mod_ext_gcd(p, q, &m) {
            ModOutcome::Split(d) => {
                stack.push(&m / &d);
                stack.push(d);
            }
            ModOutcome::Unit { a, b, k } => parts.push(Part { m, a, b, k }),
            ModOutcome::Fail => return Err(m),
        }
    }
    Ok(parts)
}

/// Whether the images of `p` and `q` generate the unit ideal of `F_l[A, A^-1]`.
pub fn modular_unit_ideal(p: &LaurentPoly, q: &LaurentPoly, l: &BigInt) -> bool {
    matches!(mod_ext_gcd(&strip(p), &strip(q), l), ModOutcome::Unit { .. })
}

enum Analysis {
    Unit(LaurentPoly, LaurentPoly),
    Obstructed(Obstruction),
    Trivial { big_n: BigInt, r0: ZPoly, s0: ZPoly, parts: Vec<Part> },
}

fn analyze(p: &LaurentPoly, q: &LaurentPoly) -> Result<Analysis, TrivError> {
    if p.is_zero() && q.is_zero() {
        return Err(TrivError::DegeneratePair);
    }
    if let Some((s, k)) = p.as_unit_monomial() {
        return Ok(Analysis::Unit(LaurentPoly::monomial(s, -k), LaurentPoly::zero()));
    }
    if let Some((s, k)) = q.as_unit_monomial() {
        return Ok(Analysis::Unit(LaurentPoly::zero(), LaurentPoly::monomial(s, -k)));
    }
    if p.is_zero() {
        return Ok(Analysis::Obstructed(single_generator_obstruction(q)));
    }
    if q.is_zero() {
        return Ok(Analysis::Obstructed(single_generator_obstruction(p)));
    }
    let (pp, qq) = (strip(p), strip(q));
    let (g, s, t) = qext_gcd(&to_q(&pp), &to_q(&qq));
    if g.len() > 1 {
        return Ok(Analysis::Obstructed(Obstruction::RationalDivisor(to_laurent(&primitive_part(&g), 0))));
    }
    let big_n = s.iter().chain(t.iter()).fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let clear = |v: &QPoly| -> ZPoly { v.iter().map(|c| (c * BigRational::from_integer(big_n.clone())).to_integer()).collect() };
    let (r0, s0) = (clear(&s), clear(&t));
    match modular_parts(&pp, &qq, &big_n) {
        Ok(parts) => Ok(Analysis::Trivial { big_n, r0, s0, parts }),
        Err(m) => Ok(Analysis::Obstructed(Obstruction::Prime(smallest_prime_factor(&m)))),
    }
}

/// Why a principal ideal `(p)` with `p` not a unit is proper.
fn single_generator_obstruction(p: &LaurentPoly) -> Obstruction {
    if p.term_count() > 1 {
        Obstruction::RationalDivisor(to_laurent(&primitive_part(&to_q(&strip(p))), 0))
    } else {
        Obstruction::Prime(smallest_prime_factor(&p.coeffs()[0].abs()))
    }
}

/// Decision only, skipping certificate reconstruction.
pub fn decide_trivializable(p: &LaurentPoly, q: &LaurentPoly) -> Result<bool, TrivError> {
    Ok(!matches!(analyze(p, q)?, Analysis::Obstructed(_)))
}

/// Decision with a certificate: cofactors validated by multiplication on
/// success, an obstruction on failure.
pub fn is_trivializable(p: &LaurentPoly, q: &LaurentPoly) -> Result<(bool, TrivializabilityCertificate), TrivError> {
    let (r, s) = match analyze(p, q)? {
        Analysis::Obstructed(o) => {
            return Ok((false, TrivializabilityCertificate { cofactors: None, obstruction: Some(o) }));
        }
        Analysis::Unit(r, s) => (r, s),
        Analysis::Trivial { big_n, r0, s0, parts } => {
            // Cofactors for the shifted polynomials P = A^-lo(p) p, Q = A^-lo(q) q.
            let (r, s) = reconstruct(&strip(p), &strip(q), &big_n, &r0, &s0, &parts);
            (r.shift(-p.lo()), s.shift(-q.lo()))
        }
    };
    assert!((&(p * &r) + &(q * &s)).is_one(), "certificate failed to verify");
    Ok((true, TrivializabilityCertificate { cofactors: Some((r, s)), obstruction: None }))
}

/// An element `P r + Q s` of the ideal, tracked with its value.
#[derive(Clone)]
struct Elem {
    r: LaurentPoly,
    s: LaurentPoly,
    v: LaurentPoly,
}

impl Elem {
    fn add(&self, o: &Elem) -> Elem {
        Elem { r: &self.r + &o.r, s: &self.s + &o.s, v: &self.v + &o.v }
    }

    fn times(&self, x: &LaurentPoly) -> Elem {
        Elem { r: &self.r * x, s: &self.s * x, v: &self.v * x }
    }
}

fn reconstruct(pp: &ZPoly, qq: &ZPoly, big_n: &BigInt, r0: &ZPoly, s0: &ZPoly, parts: &[Part]) -> (LaurentPoly, LaurentPoly) {
    let (p, q) = (to_laurent(pp, 0), to_laurent(qq, 0));
    if big_n.is_one() {
        return (to_laurent(r0, 0), to_laurent(s0, 0));
    }
    // Exponents e_i with N | prod m_i^e_i.
    let mut exps = vec![0u32; parts.len()];
    let mut rest = big_n.clone();
    while !rest.is_one() {
        for (i, part) in parts.iter().enumerate() {
            let g = rest.gcd(&part.m);
            if !g.is_one() {
                rest /= g;
                exps[i] += 1;
            }
        }
    }
    // For each part, u = P a + Q b = 1 - m h; then (m h)^e = 1 - u S with
    // S = sum_{j<e} (1-u)^j. The product over parts is 1 - J with J in the ideal.
    let one = LaurentPoly::one();
    let mut j_acc = Elem { r: LaurentPoly::zero(), s: LaurentPoly::zero(), v: LaurentPoly::zero() };
    let mut w = LaurentPoly::one();
    let mut modulus_power = BigInt::one();
    for (part, &e) in parts.iter().zip(&exps) {
        if e == 0 {
            continue;
        }
        let k = part.k as i64;
        let u = Elem {
            r: to_laurent(&part.a, -k),
            s: to_laurent(&part.b, -k),
            v: LaurentPoly::zero(),
        };
        let u = Elem { v: &(&p * &u.r) + &(&q * &u.s), ..u };
        let h = (&one - &u.v).div_exact(&part.m).expect("modular cofactors reduce to 1");
        let one_minus_u = &one - &u.v;
        let mut sum = LaurentPoly::zero();
        let mut pow = LaurentPoly::one();
        for _ in 0..e {
            sum = &sum + &pow;
            pow = &pow * &one_minus_u;
        }
        let ji = u.times(&sum);
        // (1 - J)(1 - Ji) = 1 - (J + Ji - J Ji)
        let cross = j_acc.times(&ji.v);
        j_acc = j_acc.add(&ji).add(&cross.times(&-&one));
        w = &w * &h.pow(e);
        for _ in 0..e {
            modulus_power *= &part.m;
        }
    }
    // prod m_i^e_i = K N = K (P r0 + Q s0), and prod m_i^e_i * w = 1 - J.
    let kk = &modulus_power / big_n;
    let kw = w.scale(&kk);
    let r = &(&to_laurent(r0, 0) * &kw) + &j_acc.r;
    let s = &(&to_laurent(s0, 0) * &kw) + &j_acc.s;
    (r, s)
}

// ---- small number theory for obstruction reports ---------------------------

fn pow_mod(b: &BigInt, e: &BigInt, m: &BigInt) -> BigInt {
    b.modpow(e, m)
}

fn is_probable_prime(n: &BigInt) -> bool {
    let two = BigInt::from(2);
    if *n < two {
        return false;
    }
    for sp in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let sp = BigInt::from(sp);
        if *n == sp {
            return true;
        }
        if (n % &sp).is_zero() {
            return false;
        }
    }
    let nm1: BigInt = n - BigInt::one();
    let mut d = nm1.clone();
    let mut s = 0;
    while d.is_even() {
        d >>= 1;
        s += 1;
    }
    'witness: for a in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(&BigInt::from(a), &d, n);
        if x.is_one() || x == nm1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == nm1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pollard_rho(n: &BigInt) -> BigInt {
    let mut c = BigInt::one();
    loop {
        let f = |x: &BigInt| (x * x + &c) % n;
        let (mut x, mut y, mut d) = (BigInt::from(2), BigInt::from(2), BigInt::one());
        while d.is_one() {
            x = f(&x);
            y = f(&f(&y));
            d = (&x - &y).abs().gcd(n);
        }
        if &d != n {
            return d;
        }
        c += 1;
    }
}

/// Smallest prime factor of `n > 1`.
pub fn smallest_prime_factor(n: &BigInt) -> BigInt {
    let mut m = n.clone();
    let mut f = BigInt::from(2);
    let limit = BigInt::from(100_000);
    while f <= limit && &f * &f <= m {
        if (&m % &f).is_zero() {
            return f;
        }
        f += 1;
    }
    if f > limit {
        let mut best: Option<BigInt> = None;
        let mut pending = vec![m.clone()];
        while let Some(x) = pending.pop() {
            if x.is_one() {
                continue;
            }
            if is_probable_prime(&x) {
                if best.as_ref().is_none_or(|b| x < *b) {
                    best = Some(x);
                }
                continue;
            }
            let d = pollard_rho(&x);
            pending.push(&x / &d);
            pending.push(d);
        }
        m = best.unwrap_or(m);
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn examples() {
        let (t, cert) = is_trivializable(&lp("3A"), &lp("2")).unwrap();
        assert!(t);
        let (r, s) = cert.cofactors.unwrap();
        assert!((&(&lp("3A") * &r) + &(&lp("2") * &s)).is_one());

        let (t, cert) = is_trivializable(&lp("4A"), &lp("2")).unwrap();
        assert!(!t);
        assert_eq!(cert.obstruction, Some(Obstruction::Prime(BigInt::from(2))));

        let (t, _) = is_trivializable(&lp("A^3"), &lp("7A^2 - 5 + A^-9")).unwrap();
        assert!(t);
        assert_eq!(is_trivializable(&LaurentPoly::zero(), &LaurentPoly::zero()), Err(TrivError::DegeneratePair));
    }

    #[test]
    fn rational_common_factor() {
        let f = lp("A + 1");
        let (t, cert) = is_trivializable(&(&f * &lp("A^2 - 3")), &(&f * &lp("2A + 5"))).unwrap();
        assert!(!t);
        assert_eq!(cert.obstruction, Some(Obstruction::RationalDivisor(f)));
    }

    #[test]
    fn modular_cases() {
        assert!(!modular_unit_ideal(&lp("4A"), &lp("2"), &BigInt::from(2)));
        assert!(modular_unit_ideal(&lp("3A"), &lp("2"), &BigInt::from(3)));
        assert!(modular_unit_ideal(&lp("A"), &LaurentPoly::zero(), &BigInt::from(5)));
    }

    #[test]
    fn composite_obstruction_is_found() {
        // (A + 1, A - 1): unit over Q, but both reduce to A + 1 modulo 2.
        let (t, cert) = is_trivializable(&lp("A + 1"), &lp("A - 1")).unwrap();
        assert!(!t);
        assert_eq!(cert.obstruction, Some(Obstruction::Prime(BigInt::from(2))));
        // (A + 3, A - 3) has N = 6 and fails modulo 2.
        let (t, _) = is_trivializable(&lp("A + 3"), &lp("A - 3")).unwrap();
        assert!(!t);
        let (t, cert) = is_trivializable(&lp("A^2 + 2"), &lp("A^2 - 4")).unwrap();
        assert!(!t, "{cert:?}");
    }

    #[test]
    fn decision_agrees_with_certificate_search() {
        let ps = ["6A^2 + 7A + 1", "6A^2 + A + 1", "A^4 - 2A^2 + 5", "3A^3 + 9", "A^-2 + 4A^2", "10A + 15"];
        for a in ps {
            for b in ps {
                let (p, q) = (lp(a), lp(b));
                let fast = decide_trivializable(&p, &q).unwrap();
                let (slow, cert) = is_trivializable(&p, &q).unwrap();
                assert_eq!(fast, slow, "{a} / {b}");
                assert_eq!(slow, cert.cofactors.is_some());
                assert_eq!(!slow, cert.obstruction.is_some());
                if let Some(Obstruction::Prime(l)) = cert.obstruction {
                    assert!(!modular_unit_ideal(&p, &q, &l));
                }
            }
        }
        // 10A + 15 vanishes modulo 5, where 6A^2 + A + 1 is not a monomial.
        let (t, cert) = is_trivializable(&lp("10A + 15"), &lp("6A^2 + A + 1")).unwrap();
        assert!(!t);
        assert_eq!(cert.obstruction, Some(Obstruction::Prime(BigInt::from(5))));
    }

    #[test]
    fn primes() {
        assert!(is_probable_prime(&BigInt::from(1_000_000_007u64)));
        assert!(!is_probable_prime(&BigInt::from(1_000_000_007u64 * 3)));
        let n = BigInt::from(1_000_003u64) * BigInt::from(1_000_033u64);
        assert_eq!(smallest_prime_factor(&n), BigInt::from(1_000_003u64));
        assert_eq!(smallest_prime_factor(&BigInt::from(91)), BigInt::from(7));
    }
}
