//! Fixed-modulus residue arithmetic used inside the reduction engine.
//!
//! An element `a` of `Z / p^digits` stands for the p-adic number
//! `a * p^(-shift)`. Additions and products are exact in the quotient ring;
//! division by `p^v u` shifts garbage into the top `v` digits, which the
//! caller absorbs with guard digits.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::padic::{pow_p, split_valuation, PadicNumber};

pub(crate) type Poly = Vec<BigInt>;

#[derive(Clone, Debug)]
pub(crate) struct Ring {
    pub p: u64,
    pub digits: i64,
    pub shift: i64,
    pub modulus: BigInt,
}

impl Ring {
    pub fn new(p: u64, digits: i64, shift: i64) -> Self {
        Ring { p, digits, shift, modulus: BigInt::from(pow_p(p, digits as u64)) }
    }

    pub fn reduce(&self, a: &BigInt) -> BigInt {
        a.mod_floor(&self.modulus)
    }

    /// Embeds a plain integer `n` (which represents `n`, not `n p^-shift`).
    pub fn integer(&self, n: &BigInt) -> BigInt {
        self.reduce(&(n * BigInt::from(pow_p(self.p, self.shift as u64))))
    }

    pub fn from_padic(&self, c: &PadicNumber) -> Result<BigInt> {
        if c.is_zero() {
            return Ok(BigInt::zero());
        }
        if c.ord() < -self.shift {
            return Err(Error::PrecisionExhausted(format!("coefficient of valuation {} below scaling", c.ord())));
        }
        Ok(self.reduce(&c.scaled_integer(-self.shift)))
    }

    /// Interprets `a` as a p-adic number with the given absolute cap.
    pub fn to_padic(&self, a: &BigInt, abs_prec: i64) -> PadicNumber {
        PadicNumber::normalize(self.p, self.reduce(a), -self.shift, abs_prec)
    }

    /// Product of two scaled elements, rescaled: `(a p^-s)(b p^-s) = ab p^-2s`.
    pub fn mul(&self, a: &BigInt, b: &BigInt) -> Result<BigInt> {
        self.div_pow_p(&(a * b), self.shift)
    }

    /// Multiplies a scaled element by a plain integer.
    pub fn mul_int(&self, a: &BigInt, k: &BigInt) -> BigInt {
        self.reduce(&(a * k))
    }

    /// Divides a scaled element by a nonzero plain integer.
    pub fn div_int(&self, a: &BigInt, k: i64) -> Result<BigInt> {
        let (v, u) = split_valuation(&BigInt::from(k), self.p);
        let shifted = self.div_pow_p(a, v)?;
        let inv = u.mod_floor(&self.modulus).modinv(&self.modulus).expect("unit");
        Ok(self.reduce(&(shifted * inv)))
    }

    fn div_pow_p(&self, a: &BigInt, v: i64) -> Result<BigInt> {
        if v == 0 {
            return Ok(self.reduce(a));
        }
        let d = BigInt::from(pow_p(self.p, v as u64));
        let (q, r) = a.div_mod_floor(&d);
        if !r.is_zero() {
            return Err(Error::PrecisionExhausted("scaled value lost integrality".into()));
        }
        Ok(self.reduce(&q))
    }

    pub fn one(&self) -> BigInt {
        self.integer(&BigInt::one())
    }

    /// Inverse of an element whose value is a p-adic unit.
    pub fn inverse_unit(&self, a: &BigInt) -> Result<BigInt> {
        let (v, u) = split_valuation(&self.reduce(a), self.p);
        if v != self.shift {
            return Err(Error::NotAUnit);
        }
        let uinv = u.mod_floor(&self.modulus).modinv(&self.modulus).ok_or(Error::NotAUnit)?;
        Ok(self.integer(&uinv))
    }

    pub fn poly_add(&self, a: &[BigInt], b: &[BigInt]) -> Poly {
        let n = a.len().max(b.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let x = a.get(i).cloned().unwrap_or_default() + b.get(i).cloned().unwrap_or_default();
            out.push(self.reduce(&x));
        }
        trim(out)
    }

    pub fn poly_add_assign(&self, a: &mut Poly, b: &[BigInt]) {
        if a.len() < b.len() {
            a.resize(b.len(), BigInt::zero());
        }
        for (x, y) in a.iter_mut().zip(b) {
            *x = self.reduce(&(&*x + y));
        }
        trim_in_place(a);
    }

    pub fn poly_sub(&self, a: &[BigInt], b: &[BigInt]) -> Poly {
        let neg: Poly = b.iter().map(|c| -c).collect();
        self.poly_add(a, &neg)
    }

    pub fn poly_mul(&self, a: &[BigInt], b: &[BigInt]) -> Result<Poly> {
        if a.is_empty() || b.is_empty() {
            return Ok(Vec::new());
        }
        let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        let out: Result<Poly> = out.iter().map(|c| self.div_pow_p(c, self.shift)).collect();
        Ok(trim(out?))
    }

    pub fn poly_scale_int(&self, a: &[BigInt], k: &BigInt) -> Poly {
        trim(a.iter().map(|c| self.mul_int(c, k)).collect())
    }

    pub fn poly_div_int(&self, a: &[BigInt], k: i64) -> Result<Poly> {
        Ok(trim(a.iter().map(|c| self.div_int(c, k)).collect::<Result<_>>()?))
    }

    pub fn poly_derivative(&self, a: &[BigInt]) -> Poly {
        trim(a.iter().enumerate().skip(1).map(|(i, c)| self.reduce(&(c * BigInt::from(i)))).collect())
    }

    /// Quotient and remainder by a monic polynomial.
    pub fn poly_divrem_monic(&self, a: &[BigInt], m: &[BigInt]) -> Result<(Poly, Poly)> {
        let dm = m.len() - 1;
        if a.len() <= dm {
            return Ok((Vec::new(), a.to_vec()));
        }
        debug_assert!(m[dm] == self.one());
        let mut r: Poly = a.to_vec();
        let mut q = vec![BigInt::zero(); a.len() - dm];
        for k in (0..q.len()).rev() {
            let c = self.reduce(&r[k + dm]);
            if c.is_zero() {
                continue;
            }
            for (j, mj) in m.iter().enumerate().take(dm) {
                r[k + j] -= self.mul(&c, mj)?;
            }
            r[k + dm] = BigInt::zero();
            q[k] = c;
        }
        r.truncate(dm);
        let r = trim(r.iter().map(|c| self.reduce(c)).collect());
        Ok((trim(q), r))
    }
}

pub(crate) fn trim(mut a: Poly) -> Poly {
    trim_in_place(&mut a);
    a
}

fn trim_in_place(a: &mut Poly) {
    while a.last().is_some_and(Zero::is_zero) {
        a.pop();
    }
}
