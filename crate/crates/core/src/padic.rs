//! Capped-precision arithmetic in `Q_p`.
//!
//! A [`PadicNumber`] is `p^v * u + O(p^n)` with `u` a unit known modulo
//! `p^(n - v)`. Zero carries only its absolute precision `n`. Every operation
//! propagates precision pessimistically: sums keep the smaller absolute
//! precision, products and quotients keep the smaller relative precision.

use std::cmp::{max, min};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// `p^k` as a big integer.
pub fn pow_p(p: u64, k: u64) -> BigUint {
    num_traits::pow(BigUint::from(p), k as usize)
}

/// Valuation of a nonzero integer, together with the prime-to-`p` part.
pub fn split_valuation(value: &BigInt, p: u64) -> (i64, BigInt) {
    debug_assert!(!value.is_zero());
    let pb = BigInt::from(p);
    let mut v = 0;
    let mut rest = value.clone();
    loop {
        let (q, r) = rest.div_rem(&pb);
        if !r.is_zero() {
            return (v, rest);
        }
        rest = q;
        v += 1;
    }
}

/// `floor(log_p(n))` for `n >= 1`; 0 for `n <= 1`.
pub fn floor_log(p: u64, n: u64) -> i64 {
    let mut k = 0;
    let mut acc = p;
    while acc <= n {
        k += 1;
        acc = match acc.checked_mul(p) {
            Some(a) => a,
            None => break,
        };
    }
    k
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Operation selector for [`PadicNumber::arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// An element of `Q_p` known to a finite absolute precision.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PadicNumber {
    p: u64,
    valuation: i64,
    unit: BigUint,
    abs_prec: i64,
}

impl PadicNumber {
    pub fn zero(p: u64, abs_prec: i64) -> Self {
        PadicNumber { p, valuation: abs_prec, unit: BigUint::zero(), abs_prec }
    }

    pub fn one(p: u64, abs_prec: i64) -> Self {
        Self::from_int(1, p, abs_prec)
    }

    pub fn from_int(n: i64, p: u64, abs_prec: i64) -> Self {
        Self::from_bigint(&BigInt::from(n), p, abs_prec)
    }

    pub fn from_bigint(n: &BigInt, p: u64, abs_prec: i64) -> Self {
        Self::normalize(p, n.clone(), 0, abs_prec)
    }

    /// Image of `numerator / denominator` known to `abs_prec` digits.
    pub fn from_rational(numerator: &BigInt, denominator: &BigInt, p: u64, abs_prec: i64) -> Result<Self> {
        if denominator.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if numerator.is_zero() {
            return Ok(Self::zero(p, abs_prec));
        }
        let (vn, un) = split_valuation(numerator, p);
        let (vd, ud) = split_valuation(denominator, p);
        let val = vn - vd;
        if val >= abs_prec {
            return Ok(Self::zero(p, abs_prec));
        }
        let modulus = BigInt::from(pow_p(p, (abs_prec - val) as u64));
        let inv = ud.mod_floor(&modulus).modinv(&modulus).expect("prime-to-p part is invertible");
        let unit = (un * inv).mod_floor(&modulus);
        Ok(PadicNumber { p, valuation: val, unit: unit.to_biguint().unwrap(), abs_prec })
    }

    pub fn from_big_rational(q: &BigRational, p: u64, abs_prec: i64) -> Result<Self> {
        Self::from_rational(q.numer(), q.denom(), p, abs_prec)
    }

    /// Builds `value * p^shift + O(p^abs_prec)` from an arbitrary integer.
    pub(crate) fn normalize(p: u64, value: BigInt, shift: i64, abs_prec: i64) -> Self {
        if value.is_zero() {
            return Self::zero(p, abs_prec);
        }
        let (t, rest) = split_valuation(&value, p);
        let val = shift + t;
        if val >= abs_prec {
            return Self::zero(p, abs_prec);
        }
        let modulus = BigInt::from(pow_p(p, (abs_prec - val) as u64));
        let unit = rest.mod_floor(&modulus).to_biguint().unwrap();
        PadicNumber { p, valuation: val, unit, abs_prec }
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    /// `None` when the value is indistinguishable from zero.
    pub fn valuation(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.valuation)
        }
    }

    /// Valuation, or the absolute precision for zero (a lower bound either way).
    pub fn ord(&self) -> i64 {
        self.valuation
    }

    pub fn abs_prec(&self) -> i64 {
        self.abs_prec
    }

    pub fn rel_prec(&self) -> i64 {
        if self.is_zero() {
            0
        } else {
            self.abs_prec - self.valuation
        }
    }

    pub fn unit_digits(&self) -> &BigUint {
        &self.unit
    }

    pub fn is_zero(&self) -> bool {
        self.unit.is_zero()
    }

    pub fn is_unit(&self) -> bool {
        !self.is_zero() && self.valuation == 0
    }

    pub fn is_integral(&self) -> bool {
        self.valuation >= 0
    }

    /// True when `self - other` is zero to the shared precision.
    pub fn agrees_with(&self, other: &Self) -> bool {
        (self - other).is_zero()
    }

    /// Lowers the absolute precision cap to `abs_prec` (never raises it).
    pub fn with_abs_prec(&self, abs_prec: i64) -> Self {
        if abs_prec >= self.abs_prec {
            return self.clone();
        }
        if self.is_zero() || self.valuation >= abs_prec {
            return Self::zero(self.p, abs_prec);
        }
        let modulus = pow_p(self.p, (abs_prec - self.valuation) as u64);
        PadicNumber { p: self.p, valuation: self.valuation, unit: &self.unit % modulus, abs_prec }
    }

    /// Reinterprets the known digits with a larger cap, padding with zeros.
    ///
    /// Only sound when the caller knows the value exactly (e.g. it came from
    /// a rational with enough digits). Used for re-running at higher precision.
    pub fn lift_abs_prec(&self, abs_prec: i64) -> Self {
        if abs_prec <= self.abs_prec {
            return self.with_abs_prec(abs_prec);
        }
        PadicNumber { abs_prec, ..self.clone() }
    }

    /// Exact rational-integer representative `p^v * u` scaled so that the
    /// result is `self * p^(-shift)`; requires `shift <= ord()`.
    pub(crate) fn scaled_integer(&self, shift: i64) -> BigInt {
        if self.is_zero() {
            return BigInt::zero();
        }
        assert!(self.valuation >= shift, "scaled_integer: shift above valuation");
        BigInt::from(&self.unit * pow_p(self.p, (self.valuation - shift) as u64))
    }

    /// The integer `0 <= r < p^k` congruent to this integral value mod `p^k`.
    pub fn residue_mod_pk(&self, k: i64) -> Option<BigUint> {
        if self.valuation < 0 && !self.is_zero() {
            return None;
        }
        if k > self.abs_prec {
            return None;
        }
        if self.is_zero() || self.valuation >= k {
            return Some(BigUint::zero());
        }
        let m = pow_p(self.p, k as u64);
        Some((&self.unit * pow_p(self.p, self.valuation as u64)) % m)
    }

    /// Reduction modulo `p` of an integral value.
    pub fn residue(&self) -> Option<u64> {
        self.residue_mod_pk(1).map(|r| r.to_u64().unwrap())
    }

    /// Base-`p` digits of the unit part, lowest first.
    pub fn digits(&self) -> Vec<u64> {
        let mut out = Vec::new();
        let mut u = self.unit.clone();
        let pb = BigUint::from(self.p);
        for _ in 0..self.rel_prec() {
            let (q, r) = u.div_rem(&pb);
            out.push(r.to_u64().unwrap());
            u = q;
        }
        out
    }

    fn check_prime(&self, other: &Self) -> Result<()> {
        if self.p != other.p {
            Err(Error::PrimeMismatch(self.p, other.p))
        } else {
            Ok(())
        }
    }

    /// Checked binary arithmetic.
    pub fn arith(a: &Self, b: &Self, op: ArithOp) -> Result<Self> {
        a.check_prime(b)?;
        Ok(match op {
            ArithOp::Add => a.add_impl(b, false),
            ArithOp::Sub => a.add_impl(b, true),
            ArithOp::Mul => a.mul_impl(b),
            ArithOp::Div => return a.div(b),
        })
    }

    fn add_impl(&self, other: &Self, negate_other: bool) -> Self {
        assert_eq!(self.p, other.p, "prime mismatch");
        let abs = min(self.abs_prec, other.abs_prec);
        let base = min(min(self.valuation, other.valuation), abs);
        let term = |x: &Self| -> BigInt {
            if x.is_zero() || x.valuation >= abs {
                BigInt::zero()
            } else {
                BigInt::from(&x.unit * pow_p(x.p, (x.valuation - base) as u64))
            }
        };
        let a = term(self);
        let b = term(other);
        let sum = if negate_other { a - b } else { a + b };
        Self::normalize(self.p, sum, base, abs)
    }

    fn mul_impl(&self, other: &Self) -> Self {
        assert_eq!(self.p, other.p, "prime mismatch");
        match (self.is_zero(), other.is_zero()) {
            (true, true) => Self::zero(self.p, self.abs_prec + other.abs_prec),
            (true, false) => Self::zero(self.p, self.abs_prec + other.valuation),
            (false, true) => Self::zero(self.p, other.abs_prec + self.valuation),
            (false, false) => {
                let rel = min(self.rel_prec(), other.rel_prec());
                let val = self.valuation + other.valuation;
                let m = pow_p(self.p, rel as u64);
                let unit = (&self.unit * &other.unit) % m;
                PadicNumber { p: self.p, valuation: val, unit, abs_prec: val + rel }
            }
        }
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        self.check_prime(other)?;
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero(self.p, self.abs_prec - other.valuation));
        }
        let rel = min(self.rel_prec(), other.rel_prec());
        let val = self.valuation - other.valuation;
        let m = pow_p(self.p, rel as u64);
        let inv = other.unit.modinv(&m).expect("unit is invertible");
        let unit = (&self.unit * inv) % m;
        Ok(PadicNumber { p: self.p, valuation: val, unit, abs_prec: val + rel })
    }

    pub fn inverse(&self) -> Result<Self> {
        // 1 is exact: give it enough room that it never limits the quotient.
        let one = Self::one(self.p, self.rel_prec().max(1));
        one.div(self)
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc: Option<Self> = None;
        while e > 0 {
            if e & 1 == 1 {
                acc = Some(match acc {
                    None => base.clone(),
                    Some(a) => &a * &base,
                });
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc.unwrap_or_else(|| Self::one(self.p, max(self.rel_prec(), self.abs_prec).max(1)))
    }

    /// Multiplies by a rational integer, which is treated as exact.
    pub fn scale_int(&self, k: i64) -> Self {
        self.scale_bigint(&BigInt::from(k))
    }

    pub fn scale_bigint(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero(self.p, self.abs_prec);
        }
        let (vk, uk) = split_valuation(k, self.p);
        if self.is_zero() {
            return Self::zero(self.p, self.abs_prec + vk);
        }
        let rel = self.rel_prec();
        let m = BigInt::from(pow_p(self.p, rel as u64));
        let unit = (BigInt::from(self.unit.clone()) * uk).mod_floor(&m);
        PadicNumber {
            p: self.p,
            valuation: self.valuation + vk,
            unit: unit.to_biguint().unwrap(),
            abs_prec: self.abs_prec + vk,
        }
    }

    /// Divides by a nonzero rational integer, treated as exact.
    pub fn div_int(&self, k: i64) -> Self {
        assert!(k != 0, "division by zero");
        let (vk, uk) = split_valuation(&BigInt::from(k), self.p);
        if self.is_zero() {
            return Self::zero(self.p, self.abs_prec - vk);
        }
        let rel = self.rel_prec();
        let m = BigInt::from(pow_p(self.p, rel as u64));
        let inv = uk.mod_floor(&m).modinv(&m).expect("prime-to-p part is invertible");
        let unit = (BigInt::from(self.unit.clone()) * inv).mod_floor(&m);
        PadicNumber {
            p: self.p,
            valuation: self.valuation - vk,
            unit: unit.to_biguint().unwrap(),
            abs_prec: self.abs_prec - vk,
        }
    }

    /// Square root of a unit with prescribed reduction modulo `p`.
    ///
    /// Newton iteration `r <- (r + a/r) / 2`, doubling known digits per step
    /// from the seed `residue_choice`.
    pub fn sqrt_unit(&self, residue_choice: u64) -> Result<Self> {
        if !self.is_unit() {
            return Err(Error::NotAUnit);
        }
        let p = self.p;
        let target = self.residue().unwrap();
        let choice = residue_choice % p;
        if choice == 0 || (choice as u128 * choice as u128 % p as u128) as u64 != target {
            if !is_quadratic_residue(target, p) {
                return Err(Error::NonResidue(format!("{target} mod {p}")));
            }
            return Err(Error::InconsistentResidue { choice: residue_choice, target });
        }
        let rel = self.rel_prec();
        let a = &self.unit;
        let mut r = BigUint::from(choice);
        let mut k = 1i64;
        while k < rel {
            k = min(2 * k, rel);
            let m = pow_p(p, k as u64);
            let inv_r = r.modinv(&m).unwrap();
            let two_inv = BigUint::from(2u32).modinv(&m).unwrap();
            r = ((&r + a * inv_r) * two_inv) % &m;
        }
        let m = pow_p(p, rel as u64);
        Ok(PadicNumber { p, valuation: 0, unit: r % m, abs_prec: self.abs_prec })
    }

    /// The unique `(p-1)`-th root of unity congruent to `self` modulo `p`.
    pub fn teichmuller(&self) -> Result<Self> {
        if !self.is_unit() {
            return Err(Error::NotAUnit);
        }
        let p = self.p;
        let rel = self.rel_prec();
        let mut t = BigUint::from(self.residue().unwrap());
        let mut k = 1i64;
        // Newton on t^(p-1) = 1: t <- t - (t^(p-1) - 1) * t / ((p-1) t^(p-1)).
        while k < rel {
            k = min(2 * k, rel);
            let m = pow_p(p, k as u64);
            let tp1 = t.modpow(&BigUint::from(p - 1), &m);
            let num = (&tp1 + &m - BigUint::one()) % &m;
            let den = (&tp1 * BigUint::from(p - 1)) % &m;
            let corr = (num * &t % &m) * den.modinv(&m).unwrap() % &m;
            t = (&t + &m - corr) % &m;
        }
        Ok(PadicNumber { p, valuation: 0, unit: t, abs_prec: self.abs_prec })
    }

    /// Canonical rendering, e.g. `7*11 + 6*11^2 + O(11^3)`.
    pub fn render(&self) -> String {
        let p = self.p;
        let mut parts = Vec::new();
        for (i, d) in self.digits().into_iter().enumerate() {
            if d == 0 {
                continue;
            }
            let e = self.valuation + i as i64;
            parts.push(match (d, e) {
                (d, 0) => d.to_string(),
                (1, 1) => p.to_string(),
                (d, 1) => format!("{d}*{p}"),
                (1, e) => format!("{p}^{e}"),
                (d, e) => format!("{d}*{p}^{e}"),
            });
        }
        parts.push(match self.abs_prec {
            1 => format!("O({p})"),
            k => format!("O({p}^{k})"),
        });
        parts.join(" + ")
    }

    /// Parses either the canonical rendering or a plain rational `a/b`.
    ///
    /// Plain rationals are taken to `default_prec` absolute digits. A rendered
    /// string must use the prime `p`.
    pub fn parse(s: &str, p: u64, default_prec: i64) -> Result<Self> {
        let s = s.trim();
        if s.contains("O(") {
            let parsed = parse_rendered(s)?;
            if parsed.p != p {
                return Err(Error::PrimeMismatch(parsed.p, p));
            }
            return Ok(parsed);
        }
        let q = parse_rational(s)?;
        Self::from_big_rational(&q, p, default_prec)
    }
}

pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(BigRational::new(n, d))
}

fn parse_rendered(s: &str) -> Result<PadicNumber> {
    let bad = |why: &str| Error::Parse(format!("{why} in {s:?}"));
    let terms: Vec<&str> = s.split('+').map(str::trim).collect();
    let (big_o, digits) = terms.split_last().ok_or_else(|| bad("empty"))?;
    let inner = big_o
        .strip_prefix("O(")
        .and_then(|t| t.strip_suffix(')'))
        .ok_or_else(|| bad("missing O(...) term"))?;
    let (p, abs_prec) = parse_power(inner).ok_or_else(|| bad("bad O(...) term"))?;
    if !is_prime(p) {
        return Err(Error::InvalidPrime(p));
    }
    let mut parsed = Vec::new();
    for t in digits {
        let (d, rest) = match t.split_once('*') {
            Some((d, rest)) => (d.trim().parse::<u64>().map_err(|_| bad("bad digit"))?, Some(rest)),
            None if t.contains('^') => (1, Some(*t)),
            None => {
                let v: u64 = t.parse().map_err(|_| bad("bad term"))?;
                if v == p {
                    (1, Some(*t))
                } else {
                    (v, None)
                }
            }
        };
        let e = match rest {
            None => 0,
            Some(r) => {
                let (q, e) = parse_power(r).ok_or_else(|| bad("bad power"))?;
                if q != p {
                    return Err(bad("inconsistent prime"));
                }
                e
            }
        };
        parsed.push((d, e));
    }
    let low = parsed.iter().map(|&(_, e)| e).min().unwrap_or(abs_prec).min(abs_prec);
    let mut value = BigInt::zero();
    for (d, e) in parsed {
        value += BigInt::from(d) * BigInt::from(pow_p(p, (e - low) as u64));
    }
    Ok(PadicNumber::normalize(p, value, low, abs_prec))
}

/// Parses `p`, `p^k` or `p^-k`.
fn parse_power(s: &str) -> Option<(u64, i64)> {
    let s = s.trim();
    match s.split_once('^') {
        Some((b, e)) => Some((b.trim().parse().ok()?, e.trim().parse().ok()?)),
        None => Some((s.parse().ok()?, 1)),
    }
}

fn is_quadratic_residue(a: u64, p: u64) -> bool {
    let a = a % p;
    a != 0 && BigUint::from(a).modpow(&BigUint::from((p - 1) / 2), &BigUint::from(p)).is_one()
}

impl fmt::Display for PadicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Neg for &PadicNumber {
    type Output = PadicNumber;
    fn neg(self) -> PadicNumber {
        if self.is_zero() {
            return self.clone();
        }
        let m = pow_p(self.p, self.rel_prec() as u64);
        PadicNumber { unit: &m - &self.unit, ..self.clone() }
    }
}

impl Neg for PadicNumber {
    type Output = PadicNumber;
    fn neg(self) -> PadicNumber {
        -&self
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl $tr<&PadicNumber> for &PadicNumber {
            type Output = PadicNumber;
            fn $method(self, rhs: &PadicNumber) -> PadicNumber {
                $body(self, rhs)
            }
        }
        impl $tr<PadicNumber> for PadicNumber {
            type Output = PadicNumber;
            fn $method(self, rhs: PadicNumber) -> PadicNumber {
                $body(&self, &rhs)
            }
        }
        impl $tr<&PadicNumber> for PadicNumber {
            type Output = PadicNumber;
            fn $method(self, rhs: &PadicNumber) -> PadicNumber {
                $body(&self, rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a: &PadicNumber, b: &PadicNumber| a.add_impl(b, false));
forward_binop!(Sub, sub, |a: &PadicNumber, b: &PadicNumber| a.add_impl(b, true));
forward_binop!(Mul, mul, |a: &PadicNumber, b: &PadicNumber| a.mul_impl(b));

/// Integer in `(-m/2, m/2]` congruent to `r` modulo `m`.
pub fn symmetric_residue(r: &BigUint, m: &BigUint) -> BigInt {
    let r = BigInt::from(r % m);
    let m = BigInt::from(m.clone());
    if &r * 2 > m {
        r - m
    } else {
        r
    }
}

impl PadicNumber {
    /// Nearest rational integer to an integral value, modulo `p^abs_prec`.
    pub fn nearest_integer(&self) -> Option<BigInt> {
        if self.valuation < 0 && !self.is_zero() {
            return None;
        }
        let k = self.abs_prec.max(0);
        let r = self.residue_mod_pk(k)?;
        Some(symmetric_residue(&r, &pow_p(self.p, k as u64)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64, p: u64, prec: i64) -> PadicNumber {
        PadicNumber::from_rational(&BigInt::from(n), &BigInt::from(d), p, prec).unwrap()
    }

    #[test]
    fn from_rational_examples() {
        // 16 = 5 mod 11 and 5 * 9 = 45 = 1 mod 11
        let a = q(1, 16, 11, 1);
        assert_eq!(a.render(), "9 + O(11)");
        let z = q(0, 5, 7, 4);
        assert!(z.is_zero());
        assert_eq!(z.render(), "O(7^4)");
        let b = q(7, 2, 7, 3);
        assert_eq!(b.valuation(), Some(1));
        assert_eq!(b.digits()[0], 4);
        assert_eq!(
            PadicNumber::from_rational(&BigInt::from(1), &BigInt::from(0), 7, 3),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn arithmetic_examples() {
        let one = PadicNumber::one(7, 3);
        assert_eq!(&one * &one, one);
        let x = q(-23, 5, 7, 5);
        let s = &x + &(-&x);
        assert!(s.is_zero());
        assert_eq!(s.abs_prec(), 5);
        let third = PadicNumber::one(7, 2).div(&PadicNumber::from_int(3, 7, 2)).unwrap();
        assert_eq!(third.render(), "5 + 4*7 + O(7^2)");
        let err = PadicNumber::arith(&one, &PadicNumber::one(11, 3), ArithOp::Add);
        assert_eq!(err, Err(Error::PrimeMismatch(7, 11)));
        assert_eq!(one.div(&PadicNumber::zero(7, 3)), Err(Error::DivisionByZero));
    }

    #[test]
    fn division_lowers_precision_by_divisor_valuation() {
        let a = PadicNumber::from_int(3, 7, 5);
        let b = PadicNumber::from_int(7, 7, 5);
        let c = a.div(&b).unwrap();
        assert_eq!(c.valuation(), Some(-1));
        assert_eq!(c.abs_prec(), 3);
    }

    #[test]
    fn sqrt_examples() {
        let one = PadicNumber::one(7, 5);
        assert_eq!(one.sqrt_unit(1).unwrap(), one);
        let two = PadicNumber::from_int(2, 7, 2);
        let r = two.sqrt_unit(3).unwrap();
        // 10^2 = 100 = 2 mod 49
        assert_eq!(r.render(), "3 + 7 + O(7^2)");
        let s = two.sqrt_unit(4).unwrap();
        assert_eq!(s, -&r);
        assert!(matches!(PadicNumber::from_int(3, 7, 4).sqrt_unit(2), Err(Error::NonResidue(_))));
        assert!(matches!(two.sqrt_unit(2), Err(Error::InconsistentResidue { .. })));
        assert_eq!(PadicNumber::from_int(49, 7, 6).sqrt_unit(0), Err(Error::NotAUnit));
    }

    #[test]
    fn teichmuller_examples() {
        assert_eq!(PadicNumber::one(5, 6).teichmuller().unwrap(), PadicNumber::one(5, 6));
        let t = PadicNumber::from_int(3, 7, 3).teichmuller().unwrap();
        assert_eq!(t.render(), "3 + 4*7 + 6*7^2 + O(7^3)");
        for p in [3u64, 5, 7, 11, 13] {
            let m1 = PadicNumber::from_int(p as i64 - 1, p, 8).teichmuller().unwrap();
            assert_eq!(m1, PadicNumber::from_int(-1, p, 8));
        }
        assert_eq!(PadicNumber::from_int(7, 7, 3).teichmuller(), Err(Error::NotAUnit));
    }

    #[test]
    fn render_examples() {
        assert_eq!(PadicNumber::zero(11, 6).render(), "O(11^6)");
        assert_eq!(q(10, 1, 7, 2).render(), "3 + 7 + O(7^2)");
        let v = q(7 * 11 + 6 * 121 + 3 * 1331 + 14641 + 5 * 161051, 1, 11, 6);
        assert_eq!(v.render(), "7*11 + 6*11^2 + 3*11^3 + 11^4 + 5*11^5 + O(11^6)");
        assert_eq!(q(1, 49, 7, 1).render(), "7^-2 + O(7)");
    }

    #[test]
    fn parse_accepts_both_grammars() {
        let a = PadicNumber::parse("7*11 + 6*11^2 + O(11^3)", 11, 10).unwrap();
        assert_eq!(a, q(7 * 11 + 6 * 121, 1, 11, 3));
        let b = PadicNumber::parse("-1/4", 11, 5).unwrap();
        assert_eq!(b, q(-1, 4, 11, 5));
        assert!(PadicNumber::parse("3 + O(7)", 11, 3).is_err());
        assert!(PadicNumber::parse("x/2", 11, 3).is_err());
    }

    #[test]
    fn helpers() {
        assert_eq!(floor_log(7, 6), 0);
        assert_eq!(floor_log(7, 7), 1);
        assert_eq!(floor_log(7, 49), 2);
        assert_eq!(floor_log(11, 1), 0);
        assert!(is_prime(13) && !is_prime(15));
        assert_eq!(q(-3, 1, 7, 4).nearest_integer(), Some(BigInt::from(-3)));
    }
}
