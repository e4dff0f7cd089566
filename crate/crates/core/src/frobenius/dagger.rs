use std::collections::BTreeMap;

use crate::curve::{CurvePoint, HyperellipticCurve};
use crate::error::{Error, Result};
use crate::padic::PadicNumber;
use crate::series::{PadicPolynomial, EXACT};

/// Whether a [`DaggerForm`] stands for a function `h(x, y)` or for the
/// 1-form `g(x, y) dx/2y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FormRole {
    Function,
    OddForm,
}

/// Truncated element of the weak completion: `sum_s B_s(x) y^s` over finitely
/// many integer exponents `s` (negative exponents allowed).
///
/// With role [`FormRole::OddForm`] the sum is the coefficient of `dx/2y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DaggerForm {
    p: u64,
    role: FormRole,
    terms: BTreeMap<i64, PadicPolynomial>,
}

impl DaggerForm {
    pub fn new(p: u64, role: FormRole) -> Self {
        DaggerForm { p, role, terms: BTreeMap::new() }
    }

    pub fn function(p: u64) -> Self {
        Self::new(p, FormRole::Function)
    }

    pub fn odd_form(p: u64) -> Self {
        Self::new(p, FormRole::OddForm)
    }

    /// The basis differential `x^i dx/2y`.
    pub fn basis(p: u64, i: usize, abs_prec: i64) -> Self {
        let mut cs = vec![PadicNumber::zero(p, EXACT); i];
        cs.push(PadicNumber::one(p, abs_prec));
        let mut out = Self::odd_form(p);
        out.add_term(0, &PadicPolynomial::new(p, cs));
        out
    }

    /// A single term `B(x) y^s`.
    pub fn monomial(role: FormRole, s: i64, b: PadicPolynomial) -> Self {
        let mut out = Self::new(b.prime(), role);
        out.add_term(s, &b);
        out
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn role(&self) -> FormRole {
        self.role
    }

    pub fn terms(&self) -> &BTreeMap<i64, PadicPolynomial> {
        &self.terms
    }

    pub fn term(&self, s: i64) -> Option<&PadicPolynomial> {
        self.terms.get(&s)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `b(x) y^s`, dropping the entry if it cancels.
    pub fn add_term(&mut self, s: i64, b: &PadicPolynomial) {
        let sum = match self.terms.remove(&s) {
            Some(old) => old.add(b),
            None => b.clone(),
        };
        if !sum.is_zero() {
            self.terms.insert(s, sum);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&s, b) in &other.terms {
            out.add_term(s, b);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&s, b) in &other.terms {
            out.add_term(s, &PadicPolynomial::zero(self.p).sub(b));
        }
        out
    }

    pub fn scale(&self, c: &PadicNumber) -> Self {
        let mut out = Self::new(self.p, self.role);
        for (&s, b) in &self.terms {
            out.add_term(s, &b.scale(c));
        }
        out
    }

    pub fn with_role(&self, role: FormRole) -> Self {
        DaggerForm { role, ..self.clone() }
    }

    pub fn with_abs_prec(&self, abs_prec: i64) -> Self {
        let mut out = Self::new(self.p, self.role);
        for (&s, b) in &self.terms {
            out.add_term(s, &b.with_abs_prec(abs_prec));
        }
        out
    }

    /// Smallest and largest exponent present.
    pub fn exponent_window(&self) -> Option<(i64, i64)> {
        Some((*self.terms.keys().next()?, *self.terms.keys().next_back()?))
    }

    /// Smallest absolute precision among the stored coefficients.
    pub fn min_abs_prec(&self) -> Option<i64> {
        self.terms.values().flat_map(|b| b.coeffs().iter().map(PadicNumber::abs_prec)).filter(|&a| a < EXACT / 2).min()
    }

    /// `d h` for a function `h`, returned as an odd-form coefficient using
    /// `d(B y^s) = (2 B' y^(s+1) + s B f' y^(s-1)) dx/2y`.
    pub fn differential(&self, curve: &HyperellipticCurve) -> Self {
        let df = curve.f().derivative();
        let mut out = Self::odd_form(self.p);
        for (&s, b) in &self.terms {
            out.add_term(s + 1, &b.derivative().scale_int(2));
            if s != 0 {
                out.add_term(s - 1, &b.mul(&df).scale_int(s));
            }
        }
        out
    }

    /// Rewrites using `y^2 = f(x)` so that every exponent below the base
    /// (0 for even exponents, 1 for odd) carries a polynomial of degree below
    /// `deg f`, and nothing sits above the base. Two representations of the
    /// same element have equal normal forms.
    pub fn normal_form(&self, curve: &HyperellipticCurve) -> Result<Self> {
        let f = curve.f();
        let mut work = self.terms.clone();
        let mut out = Self::new(self.p, self.role);
        for (&s, b) in self.terms.iter().rev() {
            let base = s.rem_euclid(2);
            if s > base {
                work.remove(&s);
                let mut t = b.clone();
                for _ in 0..(s - base) / 2 {
                    t = t.mul(f);
                }
                let entry = work.entry(base).or_insert_with(|| PadicPolynomial::zero(self.p));
                *entry = entry.add(&t);
            }
        }
        while let Some((&s, _)) = work.iter().next() {
            let b = work.remove(&s).unwrap();
            let base = s.rem_euclid(2);
            if s >= base {
                out.add_term(s, &b);
                continue;
            }
            let (q, r) = b.divrem(f)?;
            out.add_term(s, &r);
            if !q.is_zero() {
                let entry = work.entry(s + 2).or_insert_with(|| PadicPolynomial::zero(self.p));
                *entry = entry.add(&q);
            }
        }
        Ok(out)
    }

    /// Evaluates a function at an affine point.
    ///
    /// Negative powers of `y` only converge when `y` is a unit, so points in
    /// Weierstrass discs are rejected unless all exponents are nonnegative.
    pub fn evaluate(&self, point: &CurvePoint) -> Result<PadicNumber> {
        evaluate_dagger(self, point)
    }

    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(s, b)| {
                let coeffs: Vec<String> = b.coeffs().iter().map(PadicNumber::render).collect();
                format!("y^{s} * [{}]", coeffs.join(", "))
            })
            .collect();
        parts.join(" + ")
    }
}

/// `sum_s B_s(x(P)) y(P)^s`.
pub fn evaluate_dagger(h: &DaggerForm, point: &CurvePoint) -> Result<PadicNumber> {
    if h.is_zero() {
        return Ok(PadicNumber::zero(h.p, EXACT));
    }
    let (x, y) = match point {
        CurvePoint::Infinity => return Err(Error::InfiniteDisc),
        CurvePoint::Affine { x, y } => (x, y),
    };
    let (lo, hi) = h.exponent_window().unwrap();
    if lo < 0 && !y.is_unit() {
        return Err(Error::WeierstrassDisc);
    }
    let mut total = PadicNumber::zero(h.p, EXACT);
    if lo < 0 {
        let y_inv = y.inverse()?;
        let mut power = y_inv.clone();
        for s in (lo..0).rev() {
            if s < -1 {
                power = &power * &y_inv;
            }
            if let Some(b) = h.term(s) {
                total = total + b.evaluate(x) * &power;
            }
        }
    }
    if hi >= 0 {
        if let Some(b) = h.term(0) {
            total = total + b.evaluate(x);
        }
        let mut power = y.clone();
        for s in 1..=hi {
            if s > 1 {
                power = &power * y;
            }
            if let Some(b) = h.term(s) {
                total = total + b.evaluate(x) * &power;
            }
        }
    }
    Ok(total)
}
