//! Frobenius action on the odd part of Monsky-Washnitzer cohomology.
//!
//! The basis is `w_i = x^i dx/2y` for `i < 2g`. A form is reduced to
//! `dh + sum c_i w_i` with the two relations
//!
//! * `d(x^m y) = (2m x^(m-1) f + x^m f') dx/2y`, to lower `x`-degrees at `y^0`;
//! * `d(V y^(1-2k)) = (2V' y^(2-2k) - (2k-1) V f' y^(-2k)) dx/2y`, to raise
//!   negative powers of `y`.
//!
//! Internally everything runs in `Z / p^D` with a fixed scaling (see
//! [`ring`]); results are reported with a certified absolute precision.

mod charpoly;
mod dagger;
pub(crate) mod ring;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::curve::HyperellipticCurve;
use crate::error::{Error, Result};
use crate::padic::{floor_log, PadicNumber};
use crate::series::{PadicPolynomial, EXACT};
use ring::{trim, Poly, Ring};

pub use charpoly::{char_poly, zeta_numerator};
pub use dagger::{evaluate_dagger, DaggerForm, FormRole};

/// Matrix of Frobenius on `w_0..w_{2g-1}` together with the exact parts.
///
/// `phi^*(w_i) = d(exact_parts[i]) + sum_j matrix[i][j] w_j`, every entry
/// correct to `certified_prec` absolute digits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusData {
    pub matrix: Vec<Vec<PadicNumber>>,
    pub exact_parts: Vec<DaggerForm>,
    pub certified_prec: i64,
    pub working_prec: i64,
}

impl FrobeniusData {
    pub fn dim(&self) -> usize {
        self.matrix.len()
    }

    /// `M - I`.
    pub fn matrix_minus_identity(&self) -> Vec<Vec<PadicNumber>> {
        let mut out = self.matrix.clone();
        for (i, row) in out.iter_mut().enumerate() {
            let one = PadicNumber::one(row[i].prime(), self.certified_prec);
            row[i] = &row[i] - &one;
        }
        out
    }
}

/// Digits lost by the Frobenius computation at working precision `n`.
pub fn kedlaya_loss(p: u64, genus: usize, n: i64) -> i64 {
    1 + floor_log(p, n.max(2 * genus as i64 + 1) as u64)
}

/// Reduction state shared by the Frobenius computation and [`reduce_form`].
pub(crate) struct Engine {
    ring: Ring,
    /// Plain (unscaled) residues of `f`, `f'` and `f'^(-1) mod f`.
    f: Poly,
    df: Poly,
    df_inv: Poly,
    genus: usize,
}

/// Exact part and coefficients in scaled residues.
pub(crate) struct Reduced {
    pub exact: BTreeMap<i64, Poly>,
    pub coeffs: Vec<BigInt>,
}

impl Engine {
    pub fn new(curve: &HyperellipticCurve, digits: i64, shift: i64) -> Result<Self> {
        let p = curve.prime();
        let ring = Ring::new(p, digits, shift);
        let plain = Ring::new(p, digits, 0);
        let f: Poly = curve
            .f_rational()
            .iter()
            .map(|q| plain.from_padic(&PadicNumber::from_big_rational(q, p, digits)?))
            .collect::<Result<_>>()?;
        let df = plain.poly_derivative(&f);
        let df_inv = invert_mod(&plain, &df, &f)?;
        Ok(Engine { ring, f, df, df_inv, genus: curve.genus() })
    }

    fn mul_plain(&self, a: &[BigInt], b: &[BigInt]) -> Poly {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
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
        trim(out.iter().map(|c| self.ring.reduce(c)).collect())
    }

    /// Division by the monic `f` (plain), for a scaled dividend.
    fn divrem_f(&self, a: &[BigInt]) -> (Poly, Poly) {
        let d = self.f.len() - 1;
        if a.len() <= d {
            return (Vec::new(), a.to_vec());
        }
        let mut r = a.to_vec();
        let mut q = vec![BigInt::zero(); a.len() - d];
        for k in (0..q.len()).rev() {
            let c = self.ring.reduce(&r[k + d]);
            if !c.is_zero() {
                for j in 0..d {
                    r[k + j] = self.ring.reduce(&(&r[k + j] - &c * &self.f[j]));
                }
            }
            q[k] = c;
        }
        r.truncate(d);
        (trim(q), trim(r))
    }

    /// Reduces the odd form `sum_s A_s(x) y^s dx/2y` (scaled residues).
    pub fn reduce(&self, input: BTreeMap<i64, Poly>) -> Result<Reduced> {
        let ring = &self.ring;
        let two_g = 2 * self.genus;
        if input.keys().any(|s| s % 2 != 0) {
            return Err(Error::EvenForm);
        }
        let mut strata: BTreeMap<i64, Poly> = BTreeMap::new();
        let mut exact: BTreeMap<i64, Poly> = BTreeMap::new();
        for (s, a) in input {
            let mut t = a;
            for _ in 0..(s.max(0) / 2) {
                t = self.mul_plain(&t, &self.f);
            }
            add_into(ring, &mut strata, s.min(0), &t);
        }
        while let Some((&s, _)) = strata.iter().next() {
            if s >= 0 {
                break;
            }
            let a = strata.remove(&s).unwrap();
            let k = -s / 2;
            let (q, r) = self.divrem_f(&a);
            add_into(ring, &mut strata, s + 2, &q);
            if r.is_empty() {
                continue;
            }
            // r = U f + V f' with V = r / f' mod f
            let (_, v) = self.divrem_f(&self.mul_plain(&r, &self.df_inv));
            let (u, _) = self.divrem_f(&ring.poly_sub(&r, &self.mul_plain(&v, &self.df)));
            let dv = ring.poly_scale_int(&ring.poly_derivative(&v), &BigInt::from(2));
            let carried = ring.poly_add(&u, &ring.poly_div_int(&dv, 2 * k - 1)?);
            add_into(ring, &mut strata, s + 2, &carried);
            let e = ring.poly_div_int(&v, 1 - 2 * k)?;
            add_into(ring, &mut exact, s + 1, &e);
        }
        let mut c = strata.remove(&0).unwrap_or_default();
        let mut top: Poly = Vec::new();
        while c.len() > two_g {
            let n = c.len() - 1;
            let m = n - two_g;
            let t = ring.div_int(&c[n], (2 * n - two_g + 1) as i64)?;
            // 2m x^(m-1) f + x^m f'
            let mut rel = vec![BigInt::zero(); n + 1];
            for (j, fj) in self.f.iter().enumerate() {
                if m > 0 {
                    rel[m - 1 + j] += fj * BigInt::from(2 * m);
                }
            }
            for (j, dj) in self.df.iter().enumerate() {
                rel[m + j] += dj;
            }
            let sub: Poly = rel.iter().map(|r| ring.reduce(&(r * &t))).collect();
            c = ring.poly_sub(&c, &sub);
            if top.len() <= m {
                top.resize(m + 1, BigInt::zero());
            }
            top[m] = ring.reduce(&(&top[m] + &t));
        }
        // write the y^1 part in base f so all degrees stay below deg f
        let mut s = 1;
        let mut cur = trim(top);
        while !cur.is_empty() {
            let (q, r) = self.divrem_f(&cur);
            add_into(ring, &mut exact, s, &r);
            cur = q;
            s += 2;
        }
        c.resize(two_g, BigInt::zero());
        Ok(Reduced { exact, coeffs: c })
    }

    fn to_dagger(&self, terms: &BTreeMap<i64, Poly>, role: FormRole, abs_prec: i64) -> DaggerForm {
        let mut out = DaggerForm::new(self.ring.p, role);
        for (&s, b) in terms {
            let cs = b.iter().map(|c| self.ring.to_padic(c, abs_prec)).collect();
            out.add_term(s, &PadicPolynomial::new(self.ring.p, cs));
        }
        out
    }
}

fn add_into(ring: &Ring, map: &mut BTreeMap<i64, Poly>, s: i64, a: &[BigInt]) {
    if a.is_empty() {
        return;
    }
    let entry = map.entry(s).or_default();
    ring.poly_add_assign(entry, a);
    if entry.is_empty() {
        map.remove(&s);
    }
}

/// `a^(-1) mod m` for plain residues, by elimination on the matrix of
/// multiplication by `a`; pivots are units because `gcd(a, m) = 1` mod `p`.
fn invert_mod(plain: &Ring, a: &[BigInt], m: &[BigInt]) -> Result<Poly> {
    let d = m.len() - 1;
    let mut cols: Vec<Poly> = Vec::with_capacity(d);
    let mut cur = a.to_vec();
    for _ in 0..d {
        let (_, r) = plain.poly_divrem_monic(&cur, m)?;
        let mut col = r.clone();
        col.resize(d, BigInt::zero());
        cols.push(col);
        cur = std::iter::once(BigInt::zero()).chain(r).collect();
    }
    // augmented rows: sum_j cols[j][i] b_j = [i == 0]
    let mut rows: Vec<Vec<BigInt>> = (0..d)
        .map(|i| {
            let mut row: Vec<BigInt> = (0..d).map(|j| cols[j][i].clone()).collect();
            row.push(if i == 0 { BigInt::one() } else { BigInt::zero() });
            row
        })
        .collect();
    let pb = BigInt::from(plain.p);
    for col in 0..d {
        let piv = (col..d).find(|&r| !(&rows[r][col] % &pb).is_zero()).ok_or(Error::BadReduction(plain.p))?;
        rows.swap(col, piv);
        let inv = plain.inverse_unit(&rows[col][col])?;
        rows[col] = rows[col].iter().map(|c| plain.reduce(&(c * &inv))).collect();
        for r in 0..d {
            if r != col && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                for k in col..=d {
                    let v = &rows[r][k] - &factor * &rows[col][k];
                    rows[r][k] = plain.reduce(&v);
                }
            }
        }
    }
    Ok(trim(rows.into_iter().map(|r| r[d].clone()).collect()))
}

/// Scaling exponent large enough for denominators created by dividing by
/// `2k - 1` and `2n - 2g + 1` up to the given bounds.
fn scaling_for(p: u64, k_max: i64, n_max: i64) -> i64 {
    2 + floor_log(p, (2 * k_max + 1).max(2 * n_max + 1).max(1) as u64)
}

const SCALING_RETRIES: usize = 3;

/// Writes the odd form `w` as `dh + sum c_i w_i`.
///
/// The returned values are correct to the input's absolute precision minus
/// the loss from dividing by `2k - 1` and `2n - 2g + 1`.
pub fn reduce_form(form: &DaggerForm, curve: &HyperellipticCurve) -> Result<(DaggerForm, Vec<PadicNumber>)> {
    let p = curve.prime();
    let g = curve.genus();
    let d = (2 * g + 1) as i64;
    if form.terms().keys().any(|s| s % 2 != 0) {
        return Err(Error::EvenForm);
    }
    let Some(abs_prec) = form.min_abs_prec() else {
        let zeros = vec![PadicNumber::zero(p, EXACT); 2 * g];
        return Ok((DaggerForm::function(p), zeros));
    };
    let (lo, _) = form.exponent_window().unwrap();
    let k_max = (-lo / 2).max(0);
    let n_max = form
        .terms()
        .iter()
        .filter(|(&s, _)| s >= 0)
        .map(|(&s, b)| b.degree().unwrap_or(0) as i64 + d * s / 2)
        .max()
        .unwrap_or(0);
    let v_min = form
        .terms()
        .values()
        .flat_map(|b| b.coeffs().iter().filter(|c| !c.is_zero()).map(PadicNumber::ord))
        .min()
        .unwrap_or(0);
    let loss = 1 + floor_log(p, (2 * k_max + 1).max(2 * n_max + 1).max(d) as u64);
    let certified = abs_prec - loss;
    let mut shift = scaling_for(p, k_max, n_max) + (-v_min).max(0);
    let mut attempt = 0;
    loop {
        let digits = abs_prec + shift;
        let engine = Engine::new(curve, digits, shift)?;
        let input: Result<BTreeMap<i64, Poly>> = form
            .terms()
            .iter()
            .map(|(&s, b)| Ok((s, trim(b.coeffs().iter().map(|c| engine.ring.from_padic(c)).collect::<Result<_>>()?))))
            .collect();
        match engine.reduce(input?) {
            Ok(red) => {
                let exact = engine.to_dagger(&red.exact, FormRole::Function, certified);
                let coeffs = red.coeffs.iter().map(|c| engine.ring.to_padic(c, certified)).collect();
                return Ok((exact, coeffs));
            }
            Err(Error::PrecisionExhausted(_)) if attempt < SCALING_RETRIES => {
                attempt += 1;
                shift += 2;
            }
            Err(e) => return Err(e),
        }
    }
}

/// Plain residues of `binom(-1/2, k)` for `k < n`.
fn binomial_half(plain: &Ring, n: i64) -> Vec<BigInt> {
    let inv4 = BigInt::from(4).modinv(&plain.modulus).expect("p odd");
    let mut out = Vec::with_capacity(n as usize);
    let mut central = BigInt::one();
    let mut inv4k = BigInt::one();
    for k in 0..n {
        if k > 0 {
            // C(2k, k) = C(2k-2, k-1) * (2k)(2k-1) / k^2
            central = central * BigInt::from(2 * k) * BigInt::from(2 * k - 1) / BigInt::from(k * k);
            inv4k = plain.reduce(&(inv4k * &inv4));
        }
        let sign = if k % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        out.push(plain.reduce(&(sign * &central * &inv4k)));
    }
    out
}

/// `D = f(x^p) - f(x)^p` and its powers `D^k`, `k < n`, as plain residues.
fn delta_powers(plain: &Ring, f: &[BigInt], n: i64) -> Result<Vec<Poly>> {
    let p = plain.p as usize;
    let mut fxp = vec![BigInt::zero(); (f.len() - 1) * p + 1];
    for (j, c) in f.iter().enumerate() {
        fxp[j * p] = c.clone();
    }
    let mut fp = vec![BigInt::one()];
    for _ in 0..p {
        fp = plain.poly_mul(&fp, f)?;
    }
    let delta = plain.poly_sub(&fxp, &fp);
    let mut out = vec![vec![BigInt::one()]];
    for _ in 1..n {
        let next = plain.poly_mul(out.last().unwrap(), &delta)?;
        out.push(next);
    }
    Ok(out)
}

/// `y / phi(y) = sum_{k<N} binom(-1/2, k) D^k y^(1-p-2pk)`, where
/// `D = f(x^p) - f(x)^p`; term `k` is divisible by `p^k`.
pub fn frobenius_inverse_y(curve: &HyperellipticCurve) -> Result<DaggerForm> {
    let p = curve.prime();
    let n = curve.working_prec();
    let plain = Ring::new(p, n, 0);
    let (_, powers, binoms) = frobenius_series(curve, &plain, n)?;
    let mut out = DaggerForm::function(p);
    for k in 0..n {
        let s = 1 - p as i64 - 2 * p as i64 * k;
        let cs = powers[k as usize]
            .iter()
            .map(|c| PadicNumber::from_bigint(&plain.reduce(&(c * &binoms[k as usize])), p, n))
            .collect();
        out.add_term(s, &PadicPolynomial::new(p, cs));
    }
    Ok(out)
}

fn frobenius_series(curve: &HyperellipticCurve, plain: &Ring, n: i64) -> Result<(Poly, Vec<Poly>, Vec<BigInt>)> {
    let f: Poly = curve
        .f_rational()
        .iter()
        .map(|q| plain.from_padic(&PadicNumber::from_big_rational(q, plain.p, plain.digits)?))
        .collect::<Result<_>>()?;
    let powers = delta_powers(plain, &f, n)?;
    let binoms = binomial_half(plain, n);
    Ok((f, powers, binoms))
}

/// Matrix of `phi^*` on `w_0..w_{2g-1}` and the exact parts `f_i` with
/// `phi^*(w_i) = p x^(p i + p - 1) (y / phi(y)) dx/2y = d f_i + sum_j M_ij w_j`.
pub fn frobenius_action(curve: &HyperellipticCurve) -> Result<FrobeniusData> {
    let p = curve.prime();
    let g = curve.genus();
    let n = curve.working_prec();
    let pi = p as i64;
    let d = 2 * g as i64 + 1;
    let k_max = (pi - 1) / 2 + pi * (n - 1);
    let guard = 2 + floor_log(p, (2 * k_max) as u64);
    let digits = n + guard;
    let certified = n - kedlaya_loss(p, g, n);
    let mut shift = scaling_for(p, k_max, 2 * g as i64 * pi + d);
    let mut attempt = 0;
    loop {
        match frobenius_attempt(curve, digits, shift, certified) {
            Err(Error::PrecisionExhausted(_)) if attempt < SCALING_RETRIES => {
                attempt += 1;
                shift += 2;
            }
            other => return other,
        }
    }
}

fn frobenius_attempt(curve: &HyperellipticCurve, digits: i64, shift: i64, certified: i64) -> Result<FrobeniusData> {
    let p = curve.prime();
    let pi = p as i64;
    let n = curve.working_prec();
    let engine = Engine::new(curve, digits + shift, shift)?;
    let plain = Ring::new(p, digits + shift, 0);
    let (_, powers, binoms) = frobenius_series(curve, &plain, n)?;
    let ring = &engine.ring;
    let mut matrix = Vec::with_capacity(2 * curve.genus());
    let mut exact_parts = Vec::with_capacity(2 * curve.genus());
    for i in 0..2 * curve.genus() {
        let offset = (pi * i as i64 + pi - 1) as usize;
        let mut strata = BTreeMap::new();
        for k in 0..n {
            let s = 1 - pi - 2 * pi * k;
            let c = &binoms[k as usize] * BigInt::from(p);
            let mut poly = vec![BigInt::zero(); offset];
            poly.extend(powers[k as usize].iter().map(|a| ring.integer(&(a * &c))));
            let poly = trim(poly);
            if !poly.is_empty() {
                strata.insert(s, poly);
            }
        }
        let red = engine.reduce(strata)?;
        matrix.push(red.coeffs.iter().map(|c| ring.to_padic(c, certified)).collect());
        exact_parts.push(engine.to_dagger(&red.exact, FormRole::Function, certified));
    }
    Ok(FrobeniusData { matrix, exact_parts, certified_prec: certified, working_prec: n })
}

/// Solves `A v = b` over `Q_p` by elimination, always pivoting on an entry of
/// least valuation in the current column. Returns the solution and the pivot
/// valuations (whose sum is `v_p(det A)`).
pub fn solve_linear(a: &[Vec<PadicNumber>], b: &[PadicNumber]) -> Result<(Vec<PadicNumber>, Vec<i64>)> {
    let n = a.len();
    let mut rows: Vec<Vec<PadicNumber>> =
        a.iter().zip(b).map(|(row, bi)| row.iter().cloned().chain(std::iter::once(bi.clone())).collect()).collect();
    let mut pivots = Vec::with_capacity(n);
    for col in 0..n {
        let piv = (col..n)
            .filter(|&r| !rows[r][col].is_zero())
            .min_by_key(|&r| rows[r][col].ord())
            .ok_or(Error::DivisionByZero)?;
        rows.swap(col, piv);
        pivots.push(rows[col][col].ord());
        for r in col + 1..n {
            if rows[r][col].is_zero() {
                continue;
            }
            let factor = rows[r][col].div(&rows[col][col])?;
            for k in col..=n {
                let t = &factor * &rows[col][k];
                rows[r][k] = &rows[r][k] - &t;
            }
        }
    }
    let mut x: Vec<Option<PadicNumber>> = vec![None; n];
    for col in (0..n).rev() {
        let mut acc = rows[col][n].clone();
        for k in col + 1..n {
            acc = &acc - &(&rows[col][k] * x[k].as_ref().unwrap());
        }
        x[col] = Some(acc.div(&rows[col][col])?);
    }
    Ok((x.into_iter().map(Option::unwrap).collect(), pivots))
}
