//! Matrix of Frobenius on the basis x^i dx/2y, i < 2g.
use coleman::curve::HyperellipticCurve;
use coleman::frobenius::frobenius_action;
use coleman::Result;

fn main() -> Result<()> {
    let curve = HyperellipticCurve::from_ints(&[0, 60, -112, 65, -14, 1], 7, 6)?;
    let frob = frobenius_action(&curve)?;
    println!("working precision {}, certified {}", frob.working_prec, frob.certified_prec);
    for (i, row) in frob.matrix.iter().enumerate() {
        for (j, c) in row.iter().enumerate() {
            println!("M[{i}][{j}] = {}", c.with_abs_prec(frob.certified_prec));
        }
    }
    // phi*(x^i dx/2y) - sum_j M_ij x^j dx/2y = d(f_i)
    println!("f_0 = {}", frob.exact_parts[0].render());
    Ok(())
}
