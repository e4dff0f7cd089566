//! A Chabauty computation on a rank one genus 2 curve at p = 7.
//!
//! The annihilating form w = b w0 - a w1 integrates to zero between any two
//! rational points.
use coleman::coleman::{ColemanIntegrator, SecondKindForm};
use coleman::curve::{CurvePoint, HyperellipticCurve};
use coleman::{PadicNumber, Result};

fn main() -> Result<()> {
    let curve = HyperellipticCurve::from_ints(&[0, 60, -112, 65, -14, 1], 7, 6)?;
    let integ = ColemanIntegrator::new(curve.clone())?;
    let zero = || PadicNumber::zero(7, 1 << 32);
    let form = |c0: PadicNumber, c1: PadicNumber| SecondKindForm::from_coeffs(vec![c0, c1, zero(), zero()]);
    let q = curve.point(curve.int(3), curve.int(6))?;

    let a = integ.integrate(&form(curve.int(1), zero()), &CurvePoint::Infinity, &q)?;
    let b = integ.integrate(&form(zero(), curve.int(1)), &CurvePoint::Infinity, &q)?;
    println!("a = {}", a.rendered(6)[0]);
    println!("b = {}", b.rendered(6)[0]);

    let w = form(b.value().clone(), -a.value());
    let mut others = vec![("inf".to_string(), CurvePoint::Infinity)];
    for (x, y) in [(0, 0), (1, 0), (2, 0), (5, 0), (6, 0), (3, -6), (10, 120), (10, -120)] {
        others.push((format!("({x},{y})"), curve.point(curve.int(x), curve.int(y))?));
    }
    for (label, r) in &others {
        let v = integ.integrate(&w, &q, r)?;
        println!("int_(3,6)^{label} w = {}", v.value().with_abs_prec(v.audited_prec));
    }
    Ok(())
}
