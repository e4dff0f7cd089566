#![allow(dead_code)]

pub mod props;

use coleman::coleman::{ColemanIntegrator, IntegralResult};
use coleman::curve::{CurvePoint, HyperellipticCurve};
use coleman::padic::{parse_rational, PadicNumber};
use num_rational::BigRational;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn q(s: &str) -> BigRational {
    parse_rational(s).unwrap()
}

pub fn example1(digits: i64) -> HyperellipticCurve {
    let f: Vec<BigRational> = ["1/16", "-1/4", "3/8", "3/4", "33/16", "1"].iter().map(|s| q(s)).collect();
    HyperellipticCurve::new(&f, 11, digits).unwrap()
}

pub fn example2(digits: i64) -> HyperellipticCurve {
    HyperellipticCurve::from_ints(&[0, 60, -112, 65, -14, 1], 7, digits).unwrap()
}

pub fn point(curve: &HyperellipticCurve, x: &str, y: &str) -> CurvePoint {
    curve.point_from_rationals(&q(x), &q(y)).unwrap()
}

fn sqrt_mod_p(a: u64, p: u64) -> Option<u64> {
    (1..p).find(|r| r * r % p == a % p)
}

/// A random point outside the Weierstrass discs with integer `x`.
pub fn random_point(curve: &HyperellipticCurve, rng: &mut ChaCha8Rng) -> CurvePoint {
    let p = curve.prime();
    loop {
        let x = curve.int(rng.gen_range(-2000..2000));
        let fx = curve.f().evaluate(&x);
        if !fx.is_unit() {
            continue;
        }
        if let Some(r) = sqrt_mod_p(fx.residue().unwrap(), p) {
            let r = if rng.gen_bool(0.5) { r } else { p - r };
            return curve.lift_point(&x, r).unwrap();
        }
    }
}

/// A random point in the same (non-Weierstrass) disc as `base`.
pub fn random_point_in_disc(curve: &HyperellipticCurve, base: &CurvePoint, rng: &mut ChaCha8Rng) -> CurvePoint {
    let p = curve.prime() as i64;
    let shift = curve.int(p * rng.gen_range(1..500));
    let x = base.x().unwrap() + &shift;
    curve.lift_point(&x, base.y().unwrap().residue().unwrap()).unwrap()
}

/// A random non-Weierstrass point of a finite Weierstrass disc
/// (`x = a + p^2 k`, so `f(x)` has valuation 2).
pub fn random_point_in_weierstrass_disc(curve: &HyperellipticCurve, rng: &mut ChaCha8Rng) -> CurvePoint {
    let p = curve.prime();
    let ws = curve.weierstrass_points().unwrap();
    loop {
        let w = &ws[rng.gen_range(0..ws.len())];
        let k = rng.gen_range(1..200i64);
        let x = w.x().unwrap() + &curve.int(k * (p * p) as i64);
        let fx = curve.f().evaluate(&x);
        if fx.valuation() != Some(2) {
            continue;
        }
        let unit = fx.div(&curve.int((p * p) as i64)).unwrap();
        if let Some(r) = sqrt_mod_p(unit.residue().unwrap(), p) {
            return curve.lift_point(&x, r).unwrap();
        }
    }
}

pub fn agree_to(a: &PadicNumber, b: &PadicNumber, prec: i64) -> bool {
    a.with_abs_prec(prec).agrees_with(&b.with_abs_prec(prec))
}

pub fn results_agree(a: &IntegralResult, b: &IntegralResult) -> bool {
    let prec = a.audited_prec.min(b.audited_prec);
    a.values.iter().zip(&b.values).all(|(x, y)| agree_to(x, y, prec))
}

pub fn integrator(curve: &HyperellipticCurve) -> ColemanIntegrator {
    ColemanIntegrator::new(curve.clone()).unwrap()
}

/// Points on `y^2 = f(x)` over `F_p` and `F_{p^2}`, counted by brute force.
pub fn point_counts(f: &[i64], p: i64) -> (i64, i64) {
    let nonres = (2..p).find(|&a| (1..p).all(|b| b * b % p != a)).unwrap();
    let m = |a: (i64, i64), b: (i64, i64)| -> (i64, i64) {
        ((a.0 * b.0 + nonres * a.1 * b.1).rem_euclid(p), (a.0 * b.1 + a.1 * b.0).rem_euclid(p))
    };
    let pow = |mut a: (i64, i64), mut e: i64| {
        let mut r = (1, 0);
        while e > 0 {
            if e & 1 == 1 {
                r = m(r, a);
            }
            a = m(a, a);
            e >>= 1;
        }
        r
    };
    let eval = |x: (i64, i64)| f.iter().rev().fold((0, 0), |acc, &c| {
        let t = m(acc, x);
        ((t.0 + c).rem_euclid(p), t.1)
    });
    let count = |xs: Vec<(i64, i64)>, q: i64| {
        1 + xs
            .into_iter()
            .map(|x| match eval(x) {
                (0, 0) => 1,
                v if pow(v, (q - 1) / 2) == (1, 0) => 2,
                _ => 0,
            })
            .sum::<i64>()
    };
    (count((0..p).map(|a| (a, 0)).collect(), p), count((0..p * p).map(|a| (a % p, a / p)).collect(), p * p))
}
