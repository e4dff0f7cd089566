//! Polynomials and truncated power series with [`PadicNumber`] coefficients.

use std::cmp::min;

use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::padic::PadicNumber;

/// Precision cap given to structural zeros (missing coefficients, the constant
/// of integration). Large enough never to be the limiting cap.
pub const EXACT: i64 = 1 << 32;

/// Dense univariate polynomial over `Q_p`, trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PadicPolynomial {
    p: u64,
    coeffs: Vec<PadicNumber>,
}

impl PadicPolynomial {
    pub fn new(p: u64, mut coeffs: Vec<PadicNumber>) -> Self {
        assert!(coeffs.iter().all(|c| c.prime() == p), "coefficients must share one prime");
        while coeffs.last().is_some_and(PadicNumber::is_zero) {
            coeffs.pop();
        }
        PadicPolynomial { p, coeffs }
    }

    pub fn zero(p: u64) -> Self {
        PadicPolynomial { p, coeffs: Vec::new() }
    }

    pub fn from_rationals(coeffs: &[BigRational], p: u64, abs_prec: i64) -> Result<Self> {
        let cs = coeffs
            .iter()
            .map(|q| PadicNumber::from_big_rational(q, p, abs_prec))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(p, cs))
    }

    pub fn from_ints(coeffs: &[i64], p: u64, abs_prec: i64) -> Self {
        Self::new(p, coeffs.iter().map(|&c| PadicNumber::from_int(c, p, abs_prec)).collect())
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[PadicNumber] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> PadicNumber {
        self.coeffs.get(i).cloned().unwrap_or_else(|| PadicNumber::zero(self.p, EXACT))
    }

    pub fn leading(&self) -> Option<&PadicNumber> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new(self.p, (0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new(self.p, (0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Self::zero(self.p);
        }
        let mut out: Vec<Option<PadicNumber>> = vec![None; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                let t = a * b;
                out[i + j] = Some(match out[i + j].take() {
                    None => t,
                    Some(acc) => acc + t,
                });
            }
        }
        Self::new(self.p, out.into_iter().map(Option::unwrap).collect())
    }

    pub fn scale(&self, c: &PadicNumber) -> Self {
        Self::new(self.p, self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.p,
            self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c.scale_int(i as i64)).collect(),
        )
    }

    pub fn scale_int(&self, k: i64) -> Self {
        Self::new(self.p, self.coeffs.iter().map(|a| a.scale_int(k)).collect())
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.coeffs.is_empty() {
            return self.clone();
        }
        let mut cs = vec![PadicNumber::zero(self.p, EXACT); k];
        cs.extend(self.coeffs.iter().cloned());
        Self::new(self.p, cs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Quotient and remainder by a polynomial with unit leading coefficient.
    pub fn divrem(&self, m: &Self) -> Result<(Self, Self)> {
        let dm = m.degree().ok_or(Error::DivisionByZero)?;
        let lead = m.coeffs[dm].clone();
        if !lead.is_unit() {
            return Err(Error::NotAUnit);
        }
        if self.coeffs.len() <= dm {
            return Ok((Self::zero(self.p), self.clone()));
        }
        let mut r = self.coeffs.clone();
        let mut q = vec![PadicNumber::zero(self.p, EXACT); r.len() - dm];
        for k in (0..q.len()).rev() {
            let c = r[k + dm].div(&lead)?;
            for j in 0..dm {
                r[k + j] = &r[k + j] - &(&c * &m.coeffs[j]);
            }
            q[k] = c;
        }
        r.truncate(dm);
        Ok((Self::new(self.p, q), Self::new(self.p, r)))
    }

    /// Lowers every coefficient cap to at most `abs_prec`.
    pub fn with_abs_prec(&self, abs_prec: i64) -> Self {
        Self::new(self.p, self.coeffs.iter().map(|c| c.with_abs_prec(abs_prec)).collect())
    }

    /// Horner evaluation.
    pub fn evaluate(&self, x: &PadicNumber) -> PadicNumber {
        let mut acc = PadicNumber::zero(self.p, EXACT);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// Substitutes a power series for the variable.
    pub fn evaluate_series(&self, x: &TruncatedSeries) -> TruncatedSeries {
        let mut acc = TruncatedSeries::constant(PadicNumber::zero(self.p, EXACT), x.order());
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add_constant(c);
        }
        acc
    }

    /// Coefficients reduced modulo `p`; fails on a non-integral coefficient.
    pub fn reduce_mod_p(&self) -> Result<Vec<u64>> {
        self.coeffs
            .iter()
            .map(|c| c.residue().ok_or_else(|| Error::NonIntegralCoefficient(c.render())))
            .collect()
    }
}

/// True iff the reduction of `f` modulo `p` has no repeated roots.
///
/// Requires a unit leading coefficient, so that reduction preserves degree.
pub fn mod_p_squarefree(f: &PadicPolynomial) -> Result<bool> {
    match f.leading() {
        Some(c) if c.is_unit() => {}
        _ => return Err(Error::NotAUnit),
    }
    let p = f.prime();
    let fbar = f.reduce_mod_p()?;
    let dbar = fp::derivative(&fbar, p);
    let g = fp::gcd(&fbar, &dbar, p);
    Ok(fp::degree(&g) == Some(0))
}

/// Polynomial arithmetic over `F_p` on coefficient vectors (lowest first).
pub(crate) mod fp {
    pub fn trim(mut a: Vec<u64>) -> Vec<u64> {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    pub fn degree(a: &[u64]) -> Option<usize> {
        a.iter().rposition(|&c| c != 0)
    }

    pub fn inv(a: u64, p: u64) -> u64 {
        pow(a, p - 2, p)
    }

    pub fn pow(mut a: u64, mut e: u64, p: u64) -> u64 {
        let mut r = 1u64;
        a %= p;
        while e > 0 {
            if e & 1 == 1 {
                r = r * a % p;
            }
            a = a * a % p;
            e >>= 1;
        }
        r
    }

    pub fn derivative(a: &[u64], p: u64) -> Vec<u64> {
        trim(a.iter().enumerate().skip(1).map(|(i, &c)| (i as u64 % p) * c % p).collect())
    }

    pub fn rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let db = degree(b).expect("division by zero polynomial");
        let lead_inv = inv(b[db], p);
        let mut r = trim(a.to_vec());
        while let Some(dr) = degree(&r) {
            if dr < db {
                break;
            }
            let c = r[dr] * lead_inv % p;
            for (i, &bc) in b.iter().enumerate().take(db + 1) {
                let k = dr - db + i;
                r[k] = (r[k] + p - c * bc % p) % p;
            }
            r = trim(r);
        }
        r
    }

    pub fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let mut a = trim(a.to_vec());
        let mut b = trim(b.to_vec());
        while degree(&b).is_some() {
            let r = rem(&a, &b, p);
            a = b;
            b = r;
        }
        a
    }

    pub fn eval(a: &[u64], x: u64, p: u64) -> u64 {
        a.iter().rev().fold(0, |acc, &c| (acc * x + c) % p)
    }
}

/// Power series known modulo `t^order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    p: u64,
    coeffs: Vec<PadicNumber>,
}

/// Operation selector for [`TruncatedSeries::arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl TruncatedSeries {
    pub fn new(coeffs: Vec<PadicNumber>) -> Self {
        assert!(!coeffs.is_empty(), "series order must be at least 1");
        let p = coeffs[0].prime();
        assert!(coeffs.iter().all(|c| c.prime() == p), "coefficients must share one prime");
        TruncatedSeries { p, coeffs }
    }

    pub fn constant(c: PadicNumber, order: usize) -> Self {
        let p = c.prime();
        let mut coeffs = vec![PadicNumber::zero(p, EXACT); order];
        coeffs[0] = c;
        TruncatedSeries { p, coeffs }
    }

    /// `a + b t` modulo `t^order`.
    pub fn linear(a: PadicNumber, b: PadicNumber, order: usize) -> Self {
        let mut s = Self::constant(a, order);
        if order > 1 {
            s.coeffs[1] = b;
        }
        s
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[PadicNumber] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &PadicNumber {
        &self.coeffs[i]
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = min(order, self.order());
        TruncatedSeries { p: self.p, coeffs: self.coeffs[..order].to_vec() }
    }

    /// Extends with structural zeros up to `order` (treats self as a polynomial).
    fn pad(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order.max(coeffs.len()), PadicNumber::zero(self.p, EXACT));
        TruncatedSeries { p: self.p, coeffs }
    }

    pub fn arith(&self, other: &Self, op: SeriesOp) -> Result<Self> {
        if self.p != other.p {
            return Err(Error::PrimeMismatch(self.p, other.p));
        }
        Ok(match op {
            SeriesOp::Add => self.add(other),
            SeriesOp::Sub => self.sub(other),
            SeriesOp::Mul => self.mul(other),
            SeriesOp::Div => return self.div(other),
        })
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = min(self.order(), other.order());
        TruncatedSeries { p: self.p, coeffs: (0..n).map(|i| &self.coeffs[i] + &other.coeffs[i]).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = min(self.order(), other.order());
        TruncatedSeries { p: self.p, coeffs: (0..n).map(|i| &self.coeffs[i] - &other.coeffs[i]).collect() }
    }

    pub fn neg(&self) -> Self {
        TruncatedSeries { p: self.p, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn add_constant(&self, c: &PadicNumber) -> Self {
        let mut out = self.clone();
        out.coeffs[0] = &out.coeffs[0] + c;
        out
    }

    pub fn div_int(&self, k: i64) -> Self {
        TruncatedSeries { p: self.p, coeffs: self.coeffs.iter().map(|a| a.div_int(k)).collect() }
    }

    pub fn scale(&self, c: &PadicNumber) -> Self {
        TruncatedSeries { p: self.p, coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Schoolbook product modulo `t^min(orders)`.
    pub fn mul(&self, other: &Self) -> Self {
        let n = min(self.order(), other.order());
        let coeffs = (0..n)
            .map(|k| {
                (0..=k)
                    .map(|i| &self.coeffs[i] * &other.coeffs[k - i])
                    .reduce(|a, b| a + b)
                    .unwrap()
            })
            .collect();
        TruncatedSeries { p: self.p, coeffs }
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        let b0 = &other.coeffs[0];
        if !b0.is_unit() {
            return Err(Error::NotAUnit);
        }
        let n = min(self.order(), other.order());
        let mut out: Vec<PadicNumber> = Vec::with_capacity(n);
        for k in 0..n {
            let mut acc = self.coeffs[k].clone();
            for j in 1..=k {
                acc = acc - &other.coeffs[j] * &out[k - j];
            }
            out.push(acc.div(b0)?);
        }
        Ok(TruncatedSeries { p: self.p, coeffs: out })
    }

    /// Square root with prescribed constant term, by Newton iteration
    /// `s <- (s + h/s) / 2` doubling the known order each step.
    pub fn sqrt(&self, root_of_constant: &PadicNumber) -> Result<Self> {
        let h0 = &self.coeffs[0];
        if !h0.is_unit() {
            return Err(Error::NotAUnit);
        }
        if !(root_of_constant * root_of_constant).agrees_with(h0) {
            return Err(Error::NonResidue("root does not square to the constant term".into()));
        }
        let n = self.order();
        let mut s = TruncatedSeries::constant(root_of_constant.clone(), 1);
        let mut k = 1;
        while k < n {
            k = min(2 * k, n);
            let sk = s.pad(k);
            let q = self.truncate(k).div(&sk)?;
            s = sk.add(&q).div_int(2);
        }
        Ok(s)
    }

    /// `sum c_i t^i  ->  sum c_i/(i+1) t^(i+1)`, order grows by one.
    ///
    /// Division by `i+1` is recorded in each coefficient's precision.
    pub fn integrate(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.order() + 1);
        coeffs.push(PadicNumber::zero(self.p, EXACT));
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs.push(c.div_int(i as i64 + 1));
        }
        TruncatedSeries { p: self.p, coeffs }
    }

    pub fn derivative(&self) -> Self {
        if self.order() == 1 {
            return TruncatedSeries::constant(PadicNumber::zero(self.p, EXACT), 1);
        }
        TruncatedSeries {
            p: self.p,
            coeffs: self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c.scale_int(i as i64)).collect(),
        }
    }

    /// Drops the constant term and shifts down (`s(t)/t`); the constant
    /// term must be zero.
    pub fn divide_by_t(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::PrecisionExhausted("series is not divisible by t".into()));
        }
        if self.order() == 1 {
            return Err(Error::PrecisionExhausted("series order exhausted".into()));
        }
        Ok(TruncatedSeries { p: self.p, coeffs: self.coeffs[1..].to_vec() })
    }

    /// Horner evaluation at `t0` with `v_p(t0) >= 1`.
    ///
    /// Assumes integral coefficients beyond the truncation, so the result is
    /// capped at `order * v_p(t0)`.
    pub fn evaluate(&self, t0: &PadicNumber) -> Result<PadicNumber> {
        if t0.ord() < 1 {
            return Err(Error::SeriesArgument(t0.render()));
        }
        let mut acc = PadicNumber::zero(self.p, EXACT);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * t0) + c;
        }
        let tail = (self.order() as i64).saturating_mul(t0.ord());
        Ok(acc.with_abs_prec(tail))
    }

    pub fn to_u64_residues(&self) -> Option<Vec<u64>> {
        self.coeffs.iter().map(|c| c.residue().and_then(|r| r.to_u64())).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn num(n: i64, p: u64, prec: i64) -> PadicNumber {
        PadicNumber::from_int(n, p, prec)
    }

    fn series(cs: &[i64], p: u64, prec: i64) -> TruncatedSeries {
        TruncatedSeries::new(cs.iter().map(|&c| num(c, p, prec)).collect())
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn series_arith_examples() {
        let a = series(&[1, 1, 0], 7, 5);
        let b = series(&[1, -1, 0], 7, 5);
        assert_eq!(a.mul(&b), series(&[1, 0, -1], 7, 5));
        let one = series(&[1, 0, 0, 0], 7, 5);
        let g = one.div(&series(&[1, -1, 0, 0], 7, 5)).unwrap();
        assert_eq!(g, series(&[1, 1, 1, 1], 7, 5));
        assert_eq!(one.div(&series(&[7, 1, 0, 0], 7, 5)), Err(Error::NotAUnit));
    }

    #[test]
    fn sqrt_examples() {
        let h = series(&[1, 2, 1, 0], 7, 6);
        assert_eq!(h.sqrt(&num(1, 7, 6)).unwrap(), series(&[1, 1, 0, 0], 7, 6));
        let h = series(&[1, 1, 0], 7, 6);
        let s = h.sqrt(&num(1, 7, 6)).unwrap();
        assert_eq!(s.mul(&s), h);
        // 1/2 = 4 mod 7
        assert_eq!(s.coeff(1).residue(), Some(4));
        let t = h.sqrt(&num(-1, 7, 6)).unwrap();
        assert_eq!(t, s.neg());
        assert!(series(&[7, 1], 7, 6).sqrt(&num(0, 7, 6)).is_err());
    }

    #[test]
    fn integrate_examples() {
        let z = series(&[0, 0], 7, 5).integrate();
        assert!(z.coeffs().iter().all(PadicNumber::is_zero));
        let i = series(&[1, 1], 7, 5).integrate();
        assert_eq!(i.order(), 3);
        assert_eq!(i.coeff(1), &num(1, 7, 5));
        assert_eq!(i.coeff(2), &num(1, 7, 5).div(&num(2, 7, 5)).unwrap());
        // the t^6 input coefficient is divided by 7
        let s = series(&[1, 1, 1, 1, 1, 1, 1], 7, 5).integrate();
        assert_eq!(s.coeff(6).abs_prec(), 5);
        assert_eq!(s.coeff(7).abs_prec(), 4);
    }

    #[test]
    fn squarefree_examples() {
        let ex1 = [rat(1, 16), rat(-1, 4), rat(3, 8), rat(3, 4), rat(33, 16), rat(1, 1)];
        let f = PadicPolynomial::from_rationals(&ex1, 11, 6).unwrap();
        assert!(mod_p_squarefree(&f).unwrap());
        let ex2 = PadicPolynomial::from_ints(&[0, 60, -112, 65, -14, 1], 7, 6);
        assert!(mod_p_squarefree(&ex2).unwrap());
        let dbl = PadicPolynomial::from_ints(&[0, 0, 1, 1], 5, 6);
        assert!(!mod_p_squarefree(&dbl).unwrap());
        let nonunit = PadicPolynomial::from_ints(&[1, 0, 5], 5, 6);
        assert_eq!(mod_p_squarefree(&nonunit), Err(Error::NotAUnit));
    }

    #[test]
    fn evaluate_examples() {
        let s = series(&[1, 1, 1], 7, 5);
        assert_eq!(s.evaluate(&num(0, 7, 5)).unwrap(), num(1, 7, 5));
        let poly = PadicPolynomial::from_ints(&[-1, 0, 1], 7, 5);
        assert_eq!(poly.evaluate(&num(3, 7, 5)), num(8, 7, 5));
        let geo = series(&[1, 1, 1, 1, 1], 7, 10);
        let v = geo.evaluate(&num(7, 7, 10)).unwrap();
        let expect = PadicNumber::from_rational(&BigInt::from(1), &BigInt::from(-6), 7, 5).unwrap();
        assert_eq!(v, expect);
        assert!(geo.evaluate(&num(3, 7, 5)).is_err());
    }

    /// Determinant of the Sylvester matrix of `f` (degree n) and `g` (formal
    /// degree n-1) over F_p, by Gaussian elimination.
    fn sylvester_det_mod_p(f: &[i64], g: &[i64], p: u64) -> u64 {
        let n = f.len() - 1;
        let m = g.len() - 1;
        let size = n + m;
        let p = p as i64;
        let mut a = vec![vec![0i64; size]; size];
        for r in 0..m {
            for (i, &c) in f.iter().rev().enumerate() {
                a[r][r + i] = c.rem_euclid(p);
            }
        }
        for r in 0..n {
            for (i, &c) in g.iter().rev().enumerate() {
                a[m + r][r + i] = c.rem_euclid(p);
            }
        }
        let mut det = 1i64;
        for col in 0..size {
            let Some(piv) = (col..size).find(|&r| a[r][col] != 0) else { return 0 };
            if piv != col {
                a.swap(piv, col);
                det = (p - det) % p;
            }
            det = det * a[col][col] % p;
            let inv = fp::inv(a[col][col] as u64, p as u64) as i64;
            for r in col + 1..size {
                let factor = a[r][col] * inv % p;
                for c in col..size {
                    a[r][c] = (a[r][c] - factor * a[col][c]).rem_euclid(p);
                }
            }
        }
        det as u64
    }

    fn arb_series(p: u64, len: usize) -> impl Strategy<Value = TruncatedSeries> {
        proptest::collection::vec(-1000i64..1000, len)
            .prop_map(move |cs| TruncatedSeries::new(cs.iter().map(|&c| num(c, p, 8)).collect()))
    }

    fn unit_series(p: u64, len: usize) -> impl Strategy<Value = TruncatedSeries> {
        (1..p as i64, proptest::collection::vec(-1000i64..1000, len - 1)).prop_map(move |(c0, rest)| {
            let mut cs = vec![num(c0 * c0, p, 8)];
            cs.extend(rest.iter().map(|&c| num(c, p, 8)));
            TruncatedSeries::new(cs)
        })
    }

    proptest! {
        #[test]
        fn mul_matches_convolution(a in arb_series(7, 6), b in arb_series(7, 6)) {
            let prod = a.mul(&b);
            for k in 0..6 {
                let mut acc = BigInt::from(0);
                for i in 0..=k {
                    acc += a.coeff(i).nearest_integer().unwrap() * b.coeff(k - i).nearest_integer().unwrap();
                }
                prop_assert!(prod.coeff(k).agrees_with(&PadicNumber::from_bigint(&acc, 7, 8)));
            }
        }

        #[test]
        fn derivative_inverts_integrate(a in arb_series(11, 8)) {
            let back = a.integrate().derivative();
            for k in 0..8 {
                prop_assert!(back.coeff(k).agrees_with(a.coeff(k)));
            }
        }

        #[test]
        fn sqrt_squares_back(h in unit_series(13, 8)) {
            let r0 = (1..13u64).find(|r| r * r % 13 == h.coeff(0).residue().unwrap()).unwrap();
            let root = h.coeff(0).sqrt_unit(r0).unwrap();
            let s = h.sqrt(&root).unwrap();
            let sq = s.mul(&s);
            for k in 0..8 {
                prop_assert!(sq.coeff(k).agrees_with(h.coeff(k)));
            }
        }

        #[test]
        fn squarefree_agrees_with_resultant(cs in proptest::collection::vec(0i64..13, 5), quintic in any::<bool>(), p_choice in 0usize..3) {
            let p = [5u64, 7, 11][p_choice];
            let n = if quintic { 5 } else { 3 };
            let mut f: Vec<i64> = cs[..n].to_vec();
            f.push(1);
            let df: Vec<i64> = (1..=n).map(|i| i as i64 * f[i]).collect();
            let res = sylvester_det_mod_p(&f, &df, p);
            let poly = PadicPolynomial::from_ints(&f, p, 5);
            prop_assert_eq!(mod_p_squarefree(&poly).unwrap(), res != 0);
        }
    }
}
