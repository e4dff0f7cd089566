//! Holomorphic integrals against a torsion divisor vanish.
//!
//! On this genus 2 curve, Q - P is torsion, so the integrals of w0 and w1
//! are zero while w2 (of the second kind) is not.
use coleman::coleman::ColemanIntegrator;
use coleman::curve::HyperellipticCurve;
use coleman::padic::parse_rational;
use coleman::Result;

fn main() -> Result<()> {
    let f = ["1/16", "-1/4", "3/8", "3/4", "33/16", "1"].map(|c| parse_rational(c).unwrap());
    let curve = HyperellipticCurve::new(&f, 11, 6)?;
    let p = curve.point_from_rationals(&parse_rational("-1")?, &parse_rational("1")?)?;
    let q = curve.point_from_rationals(&parse_rational("0")?, &parse_rational("1/4")?)?;
    let integ = ColemanIntegrator::new(curve)?;
    let r = integ.integrals_basis(&p, &q)?;
    for (i, v) in r.rendered(6).iter().enumerate() {
        println!("int_P^Q w{i} = {v}");
    }
    let a = &r.audit;
    println!(
        "audited {} digits (input {}, certified {}, det loss {}, log loss {})",
        r.audited_prec, a.n_input, a.certified_prec, a.det_loss, a.log_loss
    );
    Ok(())
}
