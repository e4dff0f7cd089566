//! Curve models `y^2 = f(x)`, points, and residue discs.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::padic::{floor_log, is_prime, pow_p, PadicNumber};
use crate::series::{fp, mod_p_squarefree, PadicPolynomial};

/// A validated odd-degree model `y^2 = f(x)` over `Q_p` with good reduction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperellipticCurve {
    p: u64,
    genus: usize,
    f_rational: Vec<BigRational>,
    f: PadicPolynomial,
    target_digits: i64,
    working_prec: i64,
}

/// Working precision for a requested number of output digits.
///
/// `N = target + (1 + floor(log_p max(N, 2g+1))) + g + 2`, solved by
/// iterating to the fixed point.
pub fn default_working_precision(p: u64, genus: usize, target_digits: i64) -> i64 {
    let g = genus as i64;
    let mut n = target_digits;
    loop {
        let loss = 1 + floor_log(p, n.max(2 * g + 1) as u64);
        let next = target_digits + loss + g + 2;
        if next == n {
            return n;
        }
        n = next;
    }
}

impl HyperellipticCurve {
    /// Validates `y^2 = f(x)` with `f` given by rational coefficients, lowest
    /// degree first.
    pub fn new(f_rational: &[BigRational], p: u64, target_digits: i64) -> Result<Self> {
        if p == 2 || !is_prime(p) {
            return Err(Error::InvalidPrime(p));
        }
        let mut f_rational = f_rational.to_vec();
        while f_rational.last().is_some_and(Zero::is_zero) {
            f_rational.pop();
        }
        let degree = f_rational.len().saturating_sub(1);
        if degree < 3 || degree % 2 == 0 {
            return Err(Error::EvenDegree(degree));
        }
        if !f_rational[degree].is_one() {
            return Err(Error::NotMonic);
        }
        let pb = BigInt::from(p);
        if let Some(bad) = f_rational.iter().find(|c| (c.denom() % &pb).is_zero()) {
            return Err(Error::NonIntegralCoefficient(bad.to_string()));
        }
        let genus = (degree - 1) / 2;
        let working_prec = default_working_precision(p, genus, target_digits);
        let f = PadicPolynomial::from_rationals(&f_rational, p, working_prec)?;
        if !mod_p_squarefree(&f)? {
            return Err(Error::BadReduction(p));
        }
        Ok(HyperellipticCurve { p, genus, f_rational, f, target_digits, working_prec })
    }

    /// Convenience constructor from integer coefficients.
    pub fn from_ints(f: &[i64], p: u64, target_digits: i64) -> Result<Self> {
        let qs: Vec<BigRational> = f.iter().map(|&c| BigRational::from_integer(BigInt::from(c))).collect();
        Self::new(&qs, p, target_digits)
    }

    /// The same curve with a different internal working precision.
    pub fn with_working_precision(&self, working_prec: i64) -> Result<Self> {
        let f = PadicPolynomial::from_rationals(&self.f_rational, self.p, working_prec)?;
        Ok(HyperellipticCurve { f, working_prec, ..self.clone() })
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn f(&self) -> &PadicPolynomial {
        &self.f
    }

    pub fn f_rational(&self) -> &[BigRational] {
        &self.f_rational
    }

    pub fn target_digits(&self) -> i64 {
        self.target_digits
    }

    pub fn working_prec(&self) -> i64 {
        self.working_prec
    }

    /// Number of basis differentials, `2g`.
    pub fn basis_size(&self) -> usize {
        2 * self.genus
    }

    pub fn number(&self, q: &BigRational) -> Result<PadicNumber> {
        PadicNumber::from_big_rational(q, self.p, self.working_prec)
    }

    pub fn int(&self, n: i64) -> PadicNumber {
        PadicNumber::from_int(n, self.p, self.working_prec)
    }

    /// Builds an affine point and checks `y^2 = f(x)` to the stated precision.
    pub fn point(&self, x: PadicNumber, y: PadicNumber) -> Result<CurvePoint> {
        if x.prime() != self.p || y.prime() != self.p {
            return Err(Error::PrimeMismatch(x.prime(), self.p));
        }
        if !x.is_integral() {
            return Err(Error::NonIntegralPoint);
        }
        let residual = &y * &y - self.f.evaluate(&x);
        if !residual.is_zero() {
            return Err(Error::NotOnCurve(format!("y^2 - f(x) = {residual}")));
        }
        Ok(CurvePoint::Affine { x, y })
    }

    /// Point from rational coordinates, at working precision.
    pub fn point_from_rationals(&self, x: &BigRational, y: &BigRational) -> Result<CurvePoint> {
        self.point(self.number(x)?, self.number(y)?)
    }

    /// The point with the given `x` whose `y` reduces to `sign_residue`.
    ///
    /// When `f(x0)` has positive even valuation `2k`, `y = p^k u` and
    /// `sign_residue` selects the reduction of `u`.
    pub fn lift_point(&self, x0: &PadicNumber, sign_residue: u64) -> Result<CurvePoint> {
        if !x0.is_integral() {
            return Err(Error::NonIntegralPoint);
        }
        let fx = self.f.evaluate(x0);
        let y = match fx.valuation() {
            None => PadicNumber::zero(self.p, x0.abs_prec()),
            Some(0) => fx.sqrt_unit(sign_residue)?,
            Some(v) if v % 2 == 1 => return Err(Error::OddValuation(v)),
            Some(v) => {
                let unit = fx.div(&self.int(1).scale_bigint(&pow_p(self.p, v as u64).into()))?;
                let root = unit.sqrt_unit(sign_residue)?;
                root.scale_bigint(&pow_p(self.p, (v / 2) as u64).into())
            }
        };
        Ok(CurvePoint::Affine { x: x0.clone(), y })
    }

    pub fn lift_point_rational(&self, x0: &BigRational, sign_residue: u64) -> Result<CurvePoint> {
        self.lift_point(&self.number(x0)?, sign_residue)
    }

    pub fn involution(&self, point: &CurvePoint) -> CurvePoint {
        point.involution()
    }

    pub fn classify_disc(&self, point: &CurvePoint) -> Result<DiscInfo> {
        point.disc()
    }

    /// Image under the Frobenius lift `x -> x^p`,
    /// `y -> y^p (1 + (f(x^p) - f(x)^p) / f(x)^p)^(1/2)`.
    ///
    /// The square root is the one reducing to `ybar^p = ybar`, which makes
    /// `phi(y)` the root of `f(x^p)` congruent to `y`.
    pub fn frobenius_point(&self, point: &CurvePoint) -> Result<CurvePoint> {
        let (x, y) = self.non_weierstrass_coords(point)?;
        let xp = x.pow(self.p);
        let ybar = y.residue().expect("integral y");
        let yp = self.f.evaluate(&xp).sqrt_unit(ybar)?;
        Ok(CurvePoint::Affine { x: xp, y: yp })
    }

    /// The Frobenius-fixed point in the residue disc of `point`.
    pub fn teichmuller_point(&self, point: &CurvePoint) -> Result<CurvePoint> {
        let (x, y) = self.non_weierstrass_coords(point)?;
        // x = 0 mod p lifts to the fixed point 0 of x -> x^p
        let xt = if x.is_unit() { x.teichmuller()? } else { PadicNumber::zero(self.p, x.abs_prec()) };
        let ybar = y.residue().expect("integral y");
        let yt = self.f.evaluate(&xt).sqrt_unit(ybar)?;
        Ok(CurvePoint::Affine { x: xt, y: yt })
    }

    /// The Weierstrass point `(a, 0)` in the finite Weierstrass disc of `point`,
    /// found by Newton iteration from the simple root of `f mod p`.
    pub fn nearest_weierstrass_point(&self, point: &CurvePoint) -> Result<CurvePoint> {
        let disc = point.disc()?;
        if disc.infinite {
            return Err(Error::InfiniteDisc);
        }
        if !disc.weierstrass {
            return Err(Error::NotWeierstrassDisc);
        }
        self.hensel_weierstrass(disc.x_bar.unwrap())
    }

    /// All finite Weierstrass points defined over `Q_p`: Hensel lifts of the
    /// roots of `f mod p` in `F_p`, in increasing order of residue.
    pub fn weierstrass_points(&self) -> Result<Vec<CurvePoint>> {
        let fbar = self.f.reduce_mod_p()?;
        (0..self.p).filter(|&r| fp::eval(&fbar, r, self.p) == 0).map(|r| self.hensel_weierstrass(r)).collect()
    }

    fn hensel_weierstrass(&self, residue: u64) -> Result<CurvePoint> {
        let prec = self.working_prec;
        let df = self.f.derivative();
        let mut a = PadicNumber::from_int(residue as i64, self.p, prec);
        let mut known = 1;
        while known < prec {
            let step = self.f.evaluate(&a).div(&df.evaluate(&a))?;
            a = (&a - &step).with_abs_prec(prec);
            known *= 2;
        }
        Ok(CurvePoint::Affine { x: a, y: PadicNumber::zero(self.p, prec) })
    }

    fn non_weierstrass_coords<'a>(&self, point: &'a CurvePoint) -> Result<(&'a PadicNumber, &'a PadicNumber)> {
        match point {
            CurvePoint::Infinity => Err(Error::InfiniteDisc),
            CurvePoint::Affine { x, y } => {
                if !y.is_unit() {
                    return Err(Error::WeierstrassDisc);
                }
                Ok((x, y))
            }
        }
    }
}

/// A point of the curve over `Q_p`: affine or the point at infinity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CurvePoint {
    Infinity,
    Affine { x: PadicNumber, y: PadicNumber },
}

/// Reduction of a point modulo `p`, with residue-disc flags.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DiscInfo {
    pub x_bar: Option<u64>,
    pub y_bar: Option<u64>,
    pub weierstrass: bool,
    pub infinite: bool,
}

impl CurvePoint {
    pub fn x(&self) -> Option<&PadicNumber> {
        match self {
            CurvePoint::Affine { x, .. } => Some(x),
            CurvePoint::Infinity => None,
        }
    }

    pub fn y(&self) -> Option<&PadicNumber> {
        match self {
            CurvePoint::Affine { y, .. } => Some(y),
            CurvePoint::Infinity => None,
        }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, CurvePoint::Infinity)
    }

    pub fn involution(&self) -> CurvePoint {
        match self {
            CurvePoint::Infinity => CurvePoint::Infinity,
            CurvePoint::Affine { x, y } => CurvePoint::Affine { x: x.clone(), y: -y },
        }
    }

    pub fn disc(&self) -> Result<DiscInfo> {
        match self {
            CurvePoint::Infinity => Ok(DiscInfo { x_bar: None, y_bar: None, weierstrass: true, infinite: true }),
            CurvePoint::Affine { x, y } => {
                let x_bar = x.residue().ok_or(Error::NonIntegralPoint)?;
                let y_bar = y.residue().ok_or(Error::NonIntegralPoint)?;
                Ok(DiscInfo { x_bar: Some(x_bar), y_bar: Some(y_bar), weierstrass: y_bar == 0, infinite: false })
            }
        }
    }

    pub fn is_weierstrass_disc(&self) -> Result<bool> {
        Ok(self.disc()?.weierstrass)
    }

    pub fn same_disc(&self, other: &CurvePoint) -> Result<bool> {
        Ok(self.disc()? == other.disc()?)
    }

    /// True when both coordinates agree to the shared precision.
    pub fn agrees_with(&self, other: &CurvePoint) -> bool {
        match (self, other) {
            (CurvePoint::Infinity, CurvePoint::Infinity) => true,
            (CurvePoint::Affine { x: a, y: b }, CurvePoint::Affine { x: c, y: d }) => a.agrees_with(c) && b.agrees_with(d),
            _ => false,
        }
    }

    pub fn render(&self) -> String {
        match self {
            CurvePoint::Infinity => "inf".to_string(),
            CurvePoint::Affine { x, y } => format!("({x}, {y})"),
        }
    }
}
