//! Teichmuller points and the Frobenius lift.
use coleman::curve::HyperellipticCurve;
use coleman::Result;

fn main() -> Result<()> {
    let curve = HyperellipticCurve::from_ints(&[0, 60, -112, 65, -14, 1], 7, 6)?;
    let p = curve.point(curve.int(3), curve.int(6))?;
    let t = curve.teichmuller_point(&p)?;
    println!("P        = {}", p.render());
    println!("teich(P) = {}", t.render());
    println!("phi(P)   = {}", curve.frobenius_point(&p)?.render());
    // the Teichmuller point is fixed by Frobenius
    println!("fixed: {}", curve.frobenius_point(&t)?.agrees_with(&t));
    Ok(())
}
