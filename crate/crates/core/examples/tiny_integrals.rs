//! Integrals inside one residue disc, ordinary and Weierstrass.
use coleman::coleman::tiny_integrals_basis;
use coleman::curve::HyperellipticCurve;
use coleman::Result;

fn main() -> Result<()> {
    let curve = HyperellipticCurve::from_ints(&[0, 60, -112, 65, -14, 1], 7, 6)?;
    let p = curve.lift_point(&curve.int(3), 6)?;
    let q = curve.lift_point(&curve.int(3 + 7 * 5), 6)?;
    let r = tiny_integrals_basis(&curve, &p, &q)?;
    println!("from {} to {}", p.render(), q.render());
    for (i, v) in r.rendered(6).iter().enumerate() {
        println!("  int w{i} = {v}");
    }

    // a point near the Weierstrass point (2, 0)
    let w = curve.point(curve.int(2), curve.int(0))?;
    let near = (1..7)
        .flat_map(|k| (1..7).map(move |r| (k, r)))
        .find_map(|(k, r)| curve.lift_point(&curve.int(2 + 49 * k), r).ok())
        .expect("a point with x = 2 mod 49");
    let r = tiny_integrals_basis(&curve, &w, &near)?;
    println!("from {} to {} (audited {} digits)", w.render(), near.render(), r.audited_prec);
    for (i, v) in r.rendered(6).iter().enumerate() {
        println!("  int w{i} = {v}");
    }
    Ok(())
}
