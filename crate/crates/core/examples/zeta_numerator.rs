//! Numerator of the zeta function from the Frobenius matrix.
use coleman::curve::HyperellipticCurve;
use coleman::frobenius::{frobenius_action, zeta_numerator};
use coleman::Result;

fn main() -> Result<()> {
    let curve = HyperellipticCurve::from_ints(&[0, 60, -112, 65, -14, 1], 7, 6)?;
    let frob = frobenius_action(&curve)?;
    let l = zeta_numerator(&frob.matrix);
    for (i, c) in l.coeffs().iter().enumerate() {
        let c = c.with_abs_prec(frob.certified_prec);
        println!("T^{i}: {:>4}   ({c})", c.nearest_integer().unwrap());
    }
    // #X(F_p) = p + 1 + a_1
    let a1 = l.coeff(1).with_abs_prec(frob.certified_prec).nearest_integer().unwrap();
    println!("#X(F_7) = {}", a1 + 8);
    Ok(())
}
