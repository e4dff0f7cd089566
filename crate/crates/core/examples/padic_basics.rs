//! Capped-precision p-adic arithmetic.
use coleman::padic::parse_rational;
use coleman::{PadicNumber, Result};

fn main() -> Result<()> {
    let p = 7;
    let x = PadicNumber::from_big_rational(&parse_rational("3/14")?, p, 8)?;
    let y = PadicNumber::parse("2 + 3*7 + O(7^5)", p, 8)?;
    println!("x        = {x}");
    println!("y        = {y}");
    println!("x * y    = {}", &x * &y);
    println!("x + y    = {}", &x + &y);
    println!("1 / y    = {}", y.inverse()?);
    println!("sqrt(2)  = {}", PadicNumber::from_int(2, p, 8).sqrt_unit(3)?);
    println!("teich(3) = {}", PadicNumber::from_int(3, p, 8).teichmuller()?);
    Ok(())
}
