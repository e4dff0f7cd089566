//! Coleman integrals of second-kind differentials between `Q_p`-points.
//!
//! Within a residue disc integrals are computed from a local parametrization
//! ("tiny" integrals). Between discs, Frobenius equivariance turns the
//! integrals of `w_0..w_{2g-1}` into the linear system
//!
//! `sum_j (M - I)_ij int_P^Q w_j = f_i(P) - f_i(Q) - int_P^phi(P) w_i - int_phi(Q)^Q w_i`.
//!
//! Weierstrass endpoints are handled with the involution: for odd `w` and a
//! Weierstrass point `W`, `int_W^R w = (1/2) int_{iota R}^R w`.

use crate::curve::{CurvePoint, HyperellipticCurve};
use crate::error::{Error, Result};
use crate::frobenius::{evaluate_dagger, frobenius_action, solve_linear, DaggerForm, FrobeniusData};
use crate::padic::{floor_log, PadicNumber};
use crate::series::{TruncatedSeries, EXACT};

/// Bookkeeping behind a reported precision.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrecisionAudit {
    /// Absolute precision of the endpoint coordinates.
    pub n_input: i64,
    /// Digits to which the Frobenius matrix and exact parts are correct.
    pub certified_prec: i64,
    pub kedlaya_loss: i64,
    /// `v_p(det(M - I))`, the sum of the elimination pivot valuations.
    pub det_loss: i64,
    /// `floor(log_p n)` with `n = min(n_input, certified_prec)`.
    pub log_loss: i64,
    /// `floor(log_p order)` for the tiny-integral truncation order.
    pub tiny_loss: i64,
    /// `n - max(det_loss, log_loss)`.
    pub formula_prec: i64,
}

/// Integrals with a guaranteed number of absolute digits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegralResult {
    pub values: Vec<PadicNumber>,
    pub audited_prec: i64,
    pub audit: PrecisionAudit,
}

impl IntegralResult {
    /// The single value of a general-form integral.
    pub fn value(&self) -> &PadicNumber {
        &self.values[0]
    }

    /// Values truncated to `digits` absolute digits for display.
    pub fn rendered(&self, digits: i64) -> Vec<String> {
        self.values.iter().map(|v| v.with_abs_prec(digits).render()).collect()
    }

    fn capped(values: Vec<PadicNumber>, audit: PrecisionAudit) -> Self {
        let values: Vec<PadicNumber> = values.into_iter().map(|v| v.with_abs_prec(audit.formula_prec)).collect();
        let tracked = values.iter().map(PadicNumber::abs_prec).min().unwrap_or(audit.formula_prec);
        IntegralResult { audited_prec: tracked.min(audit.formula_prec), values, audit }
    }
}

/// Guaranteed digits `n - max(m, floor(log_p n))` for the linear-system
/// solution, where `n = min(n_input, certified_prec)` and `m` is the sum of
/// pivot valuations.
pub fn audit_precision(p: u64, n_input: i64, certified_prec: i64, pivots: &[i64], tiny_order: usize) -> PrecisionAudit {
    let n = n_input.min(certified_prec);
    let det_loss: i64 = pivots.iter().sum();
    let log_loss = floor_log(p, n.max(1) as u64);
    PrecisionAudit {
        n_input,
        certified_prec,
        kedlaya_loss: 0,
        det_loss,
        log_loss,
        tiny_loss: floor_log(p, tiny_order.max(1) as u64),
        formula_prec: n - det_loss.max(log_loss),
    }
}

/// Smallest `m` with `m + 1 - floor(log_p(m + 1)) >= n`.
pub fn tiny_truncation_order(p: u64, n: i64) -> usize {
    let mut m = n.max(1) as usize;
    while (m as i64 + 1) - floor_log(p, m as u64 + 1) < n {
        m += 1;
    }
    m
}

/// A local parametrization of a residue disc between two of its points.
///
/// Outside Weierstrass discs the parameter is `t = x - x(P)`, running from
/// `0` to `x(Q) - x(P)`; in a finite Weierstrass disc it is `t = y`, with
/// `x(t)` the Newton solution of `f(x) = t^2` through the Weierstrass point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiscPath {
    pub x_series: TruncatedSeries,
    pub y_series: TruncatedSeries,
    pub order: usize,
    pub start: PadicNumber,
    pub end: PadicNumber,
    pub weierstrass: bool,
}

impl DiscPath {
    pub fn new(curve: &HyperellipticCurve, from: &CurvePoint, to: &CurvePoint, order: usize) -> Result<Self> {
        if !from.same_disc(to)? {
            return Err(Error::DifferentDiscs);
        }
        let disc = from.disc()?;
        if disc.infinite {
            return Err(Error::InfiniteDisc);
        }
        let (xp, yp) = (from.x().unwrap(), from.y().unwrap());
        let (xq, yq) = (to.x().unwrap(), to.y().unwrap());
        let p = curve.prime();
        if !disc.weierstrass {
            let x_series = TruncatedSeries::linear(xp.clone(), PadicNumber::one(p, curve.working_prec()), order);
            let y_series = curve.f().evaluate_series(&x_series).sqrt(yp)?;
            return Ok(DiscPath {
                x_series,
                y_series,
                order,
                start: PadicNumber::zero(p, EXACT),
                end: xq - xp,
                weierstrass: false,
            });
        }
        let a = curve.nearest_weierstrass_point(from)?.x().unwrap().clone();
        let s = TruncatedSeries::linear(PadicNumber::zero(p, EXACT), PadicNumber::one(p, curve.working_prec()), order);
        let s2 = s.mul(&s);
        let df = curve.f().derivative();
        let mut x = TruncatedSeries::constant(a, order);
        let mut steps = 1;
        while (1usize << steps) < 2 * order {
            steps += 1;
        }
        for _ in 0..=steps {
            let num = curve.f().evaluate_series(&x).sub(&s2);
            let den = df.evaluate_series(&x);
            x = x.sub(&num.div(&den)?);
        }
        Ok(DiscPath { x_series: x, y_series: s, order, start: yp.clone(), end: yq.clone(), weierstrass: true })
    }

    /// `int g(x, y) dx/2y` along the path, for `g = sum_s B_s(x) y^s`.
    pub fn integrate(&self, form: &DaggerForm) -> Result<PadicNumber> {
        let p = self.x_series.prime();
        let dx = self.x_series.derivative().truncate(self.order);
        let mut integrand = TruncatedSeries::constant(PadicNumber::zero(p, EXACT), self.order);
        for (&s, b) in form.terms() {
            let bx = b.evaluate_series(&self.x_series).truncate(self.order).mul(&dx);
            let term = if self.weierstrass { shift_series(&bx, s - 1)? } else { bx.mul(&self.y_power(s - 1)?) };
            integrand = integrand.add(&term);
        }
        let primitive = integrand.integrate().div_int(2);
        let at = |t: &PadicNumber| -> Result<PadicNumber> {
            if t.is_zero() && t.abs_prec() >= EXACT / 2 {
                return Ok(PadicNumber::zero(p, EXACT));
            }
            if t.is_zero() {
                return Ok(PadicNumber::zero(p, t.abs_prec()));
            }
            let order = primitive.order() as i64;
            let cap = order * t.ord() - floor_log(p, order as u64);
            Ok(primitive.evaluate(t)?.with_abs_prec(cap))
        };
        Ok(at(&self.end)? - at(&self.start)?)
    }

    /// Integrals of `x^i dx/2y` for `i < n`.
    pub fn integrate_basis(&self, n: usize, abs_prec: i64) -> Result<Vec<PadicNumber>> {
        let p = self.x_series.prime();
        (0..n).map(|i| self.integrate(&DaggerForm::basis(p, i, abs_prec))).collect()
    }

    fn y_power(&self, k: i64) -> Result<TruncatedSeries> {
        let base = if k >= 0 {
            self.y_series.clone()
        } else {
            let one = TruncatedSeries::constant(PadicNumber::one(self.y_series.prime(), self.y_series.coeff(0).abs_prec()), self.order);
            one.div(&self.y_series)?
        };
        let mut out = TruncatedSeries::constant(PadicNumber::one(base.prime(), base.coeff(0).abs_prec()), self.order);
        for _ in 0..k.abs() {
            out = out.mul(&base);
        }
        Ok(out)
    }
}

/// `t^k s(t)`; negative `k` requires the low coefficients to vanish.
fn shift_series(s: &TruncatedSeries, k: i64) -> Result<TruncatedSeries> {
    let mut out = s.clone();
    if k >= 0 {
        let p = s.prime();
        let mut cs = vec![PadicNumber::zero(p, EXACT); k as usize];
        cs.extend(s.coeffs().iter().cloned());
        cs.truncate(s.order());
        return Ok(TruncatedSeries::new(cs));
    }
    for _ in 0..(-k) {
        out = out.divide_by_t().map_err(|_| Error::PoleAtEndpoint)?;
    }
    Ok(out)
}

fn endpoint_prec(points: &[&CurvePoint]) -> i64 {
    points
        .iter()
        .filter_map(|pt| match pt {
            CurvePoint::Affine { x, y } => Some(x.abs_prec().min(y.abs_prec())),
            CurvePoint::Infinity => None,
        })
        .min()
        .unwrap_or(EXACT)
}

/// Integrals of `w_0..w_{2g-1}` between two points of one residue disc.
pub fn tiny_integrals_basis(curve: &HyperellipticCurve, from: &CurvePoint, to: &CurvePoint) -> Result<IntegralResult> {
    let p = curve.prime();
    let dim = curve.basis_size();
    let n = curve.working_prec();
    let order = tiny_truncation_order(p, n);
    let n_input = endpoint_prec(&[from, to]).min(EXACT / 2);
    let audit = PrecisionAudit {
        n_input,
        certified_prec: n_input,
        kedlaya_loss: 0,
        det_loss: 0,
        log_loss: 0,
        tiny_loss: floor_log(p, order as u64),
        formula_prec: n_input,
    };
    if !from.same_disc(to)? {
        return Err(Error::DifferentDiscs);
    }
    if from.agrees_with(to) {
        let zeros = vec![PadicNumber::zero(p, n_input.min(n)); dim];
        return Ok(IntegralResult::capped(zeros, audit));
    }
    let path = DiscPath::new(curve, from, to, order)?;
    Ok(IntegralResult::capped(path.integrate_basis(dim, n)?, audit))
}

/// An odd second-kind form `sum c_i w_i + d h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SecondKindForm {
    pub coeffs: Vec<PadicNumber>,
    pub exact: Option<DaggerForm>,
}

impl SecondKindForm {
    pub fn from_coeffs(coeffs: Vec<PadicNumber>) -> Self {
        SecondKindForm { coeffs, exact: None }
    }

    fn has_pole_at_infinity(&self, genus: usize) -> bool {
        self.coeffs.iter().skip(genus).any(|c| !c.is_zero())
    }
}

/// Integration engine for one curve; holds the Frobenius data.
#[derive(Clone, Debug)]
pub struct ColemanIntegrator {
    curve: HyperellipticCurve,
    frobenius: FrobeniusData,
}

impl ColemanIntegrator {
    pub fn new(curve: HyperellipticCurve) -> Result<Self> {
        let frobenius = frobenius_action(&curve)?;
        Ok(ColemanIntegrator { curve, frobenius })
    }

    pub fn curve(&self) -> &HyperellipticCurve {
        &self.curve
    }

    pub fn frobenius(&self) -> &FrobeniusData {
        &self.frobenius
    }

    pub fn tiny_integrals_basis(&self, from: &CurvePoint, to: &CurvePoint) -> Result<IntegralResult> {
        tiny_integrals_basis(&self.curve, from, to)
    }

    fn check_non_weierstrass(point: &CurvePoint) -> Result<()> {
        let disc = point.disc()?;
        if disc.infinite {
            return Err(Error::InfiniteDisc);
        }
        if disc.weierstrass {
            return Err(Error::WeierstrassDisc);
        }
        Ok(())
    }

    fn solve(&self, rhs: Vec<PadicNumber>, n_input: i64) -> Result<(Vec<PadicNumber>, PrecisionAudit)> {
        let a = self.frobenius.matrix_minus_identity();
        let (sol, pivots) = solve_linear(&a, &rhs)?;
        let order = tiny_truncation_order(self.curve.prime(), self.curve.working_prec());
        let mut audit = audit_precision(self.curve.prime(), n_input, self.frobenius.certified_prec, &pivots, order);
        audit.kedlaya_loss = self.frobenius.working_prec - self.frobenius.certified_prec;
        Ok((sol, audit))
    }

    fn exact_values(&self, point: &CurvePoint) -> Result<Vec<PadicNumber>> {
        self.frobenius.exact_parts.iter().map(|h| evaluate_dagger(h, point)).collect()
    }

    /// Integrals of `w_0..w_{2g-1}` from `P` to `Q`, both outside Weierstrass
    /// discs, by the Frobenius linear system.
    pub fn integrals_basis(&self, from: &CurvePoint, to: &CurvePoint) -> Result<IntegralResult> {
        Self::check_non_weierstrass(from)?;
        Self::check_non_weierstrass(to)?;
        let phi_p = self.curve.frobenius_point(from)?;
        let phi_q = self.curve.frobenius_point(to)?;
        let tiny_p = tiny_integrals_basis(&self.curve, from, &phi_p)?;
        let tiny_q = tiny_integrals_basis(&self.curve, &phi_q, to)?;
        let fp = self.exact_values(from)?;
        let fq = self.exact_values(to)?;
        let rhs: Vec<PadicNumber> = (0..self.curve.basis_size())
            .map(|i| &(&(&fp[i] - &fq[i]) - &tiny_p.values[i]) - &tiny_q.values[i])
            .collect();
        let (sol, audit) = self.solve(rhs, endpoint_prec(&[from, to]))?;
        Ok(IntegralResult::capped(sol, audit))
    }

    /// The same integrals through the Frobenius-fixed points of both discs.
    pub fn integrals_basis_teichmuller(&self, from: &CurvePoint, to: &CurvePoint) -> Result<IntegralResult> {
        Self::check_non_weierstrass(from)?;
        Self::check_non_weierstrass(to)?;
        let tp = self.curve.teichmuller_point(from)?;
        let tq = self.curve.teichmuller_point(to)?;
        let fp = self.exact_values(&tp)?;
        let fq = self.exact_values(&tq)?;
        let rhs: Vec<PadicNumber> = fp.iter().zip(&fq).map(|(a, b)| a - b).collect();
        let (sol, audit) = self.solve(rhs, endpoint_prec(&[from, to]))?;
        let head = tiny_integrals_basis(&self.curve, from, &tp)?;
        let tail = tiny_integrals_basis(&self.curve, &tq, to)?;
        let values = (0..sol.len()).map(|i| &(&head.values[i] + &sol[i]) + &tail.values[i]).collect();
        Ok(IntegralResult::capped(values, audit))
    }

    /// Integral of the basis vector `w_0..w_{2g-1}` between arbitrary points,
    /// routed through the dispatcher of [`ColemanIntegrator::integrate`].
    pub fn integrals_any(&self, from: &CurvePoint, to: &CurvePoint) -> Result<IntegralResult> {
        let dim = self.curve.basis_size();
        let mut values = Vec::with_capacity(dim);
        let mut audit = None;
        let mut audited = EXACT;
        for i in 0..dim {
            let mut coeffs = vec![PadicNumber::zero(self.curve.prime(), EXACT); dim];
            coeffs[i] = PadicNumber::one(self.curve.prime(), self.curve.working_prec());
            let r = self.integrate(&SecondKindForm::from_coeffs(coeffs), from, to)?;
            audited = audited.min(r.audited_prec);
            values.push(r.values[0].clone());
            audit = Some(r.audit);
        }
        Ok(IntegralResult { values, audited_prec: audited, audit: audit.unwrap() })
    }

    /// `int_P^Q w` for `w = sum c_i w_i + dh`, with endpoints anywhere
    /// (including Weierstrass points and infinity).
    pub fn integrate(&self, form: &SecondKindForm, from: &CurvePoint, to: &CurvePoint) -> Result<IntegralResult> {
        let g = self.curve.genus();
        let p = self.curve.prime();
        if form.coeffs.len() != 2 * g {
            return Err(Error::Parse(format!("expected {} coefficients, got {}", 2 * g, form.coeffs.len())));
        }
        if let Some(h) = &form.exact {
            // d of an even function is an even form
            if h.terms().keys().any(|s| s % 2 == 0) {
                return Err(Error::EvenForm);
            }
        }
        let at_infinity = from.is_infinity() || to.is_infinity();
        if at_infinity && form.has_pole_at_infinity(g) {
            return Err(Error::PoleAtEndpoint);
        }
        let combine = |vals: &[PadicNumber]| -> PadicNumber {
            form.coeffs.iter().zip(vals).fold(PadicNumber::zero(p, EXACT), |acc, (c, v)| acc + c * v)
        };
        let from_w = from.is_weierstrass_disc()?;
        let to_w = to.is_weierstrass_disc()?;
        let (value, audit) = match (from_w, to_w) {
            (false, false) => {
                let basis = if from.same_disc(to)? {
                    tiny_integrals_basis(&self.curve, from, to)?
                } else {
                    self.integrals_basis(from, to)?
                };
                (combine(&basis.values), basis.audit)
            }
            (true, false) => {
                let (v, audit) = self.from_weierstrass_disc(form, from, to)?;
                (v, audit)
            }
            (false, true) => {
                let (v, audit) = self.from_weierstrass_disc(form, to, from)?;
                (-v, audit)
            }
            (true, true) => {
                let head = self.to_weierstrass_point(form, from)?;
                let tail = self.to_weierstrass_point(form, to)?;
                let n_input = endpoint_prec(&[from, to]).min(self.curve.working_prec());
                let audit = PrecisionAudit {
                    n_input,
                    certified_prec: n_input,
                    kedlaya_loss: 0,
                    det_loss: 0,
                    log_loss: 0,
                    tiny_loss: floor_log(p, tiny_truncation_order(p, self.curve.working_prec()) as u64),
                    formula_prec: n_input,
                };
                (head - tail, audit)
            }
        };
        let exact = match &form.exact {
            None => PadicNumber::zero(p, EXACT),
            Some(h) if from.agrees_with(to) => PadicNumber::zero(p, h.min_abs_prec().unwrap_or(EXACT)),
            Some(h) => {
                let eval = |pt: &CurvePoint| {
                    evaluate_dagger(h, pt).map_err(|e| match e {
                        Error::WeierstrassDisc | Error::InfiniteDisc => Error::ExactPartDiverges,
                        other => other,
                    })
                };
                eval(to)? - eval(from)?
            }
        };
        Ok(IntegralResult::capped(vec![value + exact], audit))
    }

    /// `int_W^W' w` from a point of a Weierstrass disc to its Weierstrass point.
    fn to_weierstrass_point(&self, form: &SecondKindForm, w: &CurvePoint) -> Result<PadicNumber> {
        let p = self.curve.prime();
        if w.is_infinity() {
            return Ok(PadicNumber::zero(p, EXACT));
        }
        let anchor = self.curve.nearest_weierstrass_point(w)?;
        let tiny = tiny_integrals_basis(&self.curve, w, &anchor)?;
        Ok(form.coeffs.iter().zip(&tiny.values).fold(PadicNumber::zero(p, EXACT), |acc, (c, v)| acc + c * v))
    }

    /// `int_W^R w` (basis part only) with `W` in a Weierstrass disc and `R`
    /// outside: `int_W^W' w + (1/2) int_{iota R}^R w`.
    fn from_weierstrass_disc(&self, form: &SecondKindForm, w: &CurvePoint, r: &CurvePoint) -> Result<(PadicNumber, PrecisionAudit)> {
        let p = self.curve.prime();
        let head = self.to_weierstrass_point(form, w)?;
        let basis = self.integrals_basis(&r.involution(), r)?;
        let half = form
            .coeffs
            .iter()
            .zip(&basis.values)
            .fold(PadicNumber::zero(p, EXACT), |acc, (c, v)| acc + c * v)
            .div_int(2);
        let mut audit = basis.audit;
        let n_w = endpoint_prec(&[w]);
        if n_w < audit.n_input {
            audit.n_input = n_w;
            let n = n_w.min(audit.certified_prec);
            audit.log_loss = floor_log(p, n.max(1) as u64);
            audit.formula_prec = n - audit.det_loss.max(audit.log_loss);
        }
        Ok((head + half, audit))
    }
}
