use crate::padic::PadicNumber;
use crate::series::{PadicPolynomial, EXACT};

/// `det(lambda I - M)` by Berkowitz's division-free recursion, so no digits
/// are lost beyond those of the entries themselves.
pub fn char_poly(m: &[Vec<PadicNumber>]) -> PadicPolynomial {
    let n = m.len();
    assert!(m.iter().all(|row| row.len() == n), "char_poly needs a square matrix");
    assert!(n > 0, "char_poly needs a nonempty matrix");
    let p = m[0][0].prime();
    let zero = || PadicNumber::zero(p, EXACT);
    let cap = m.iter().flatten().map(PadicNumber::abs_prec).min().unwrap();
    // coefficients, highest degree first
    let mut v = vec![PadicNumber::one(p, cap)];
    for r in 0..n {
        let col: Vec<PadicNumber> = (0..r).map(|i| m[i][r].clone()).collect();
        let row: Vec<PadicNumber> = (0..r).map(|j| m[r][j].clone()).collect();
        let mut t = vec![PadicNumber::one(p, cap), -&m[r][r]];
        // -R A^j C for j = 0..r-1
        let mut w = col;
        for _ in 0..r {
            let dot = row.iter().zip(&w).fold(zero(), |acc, (a, b)| acc + a * b);
            t.push(-dot);
            w = (0..r).map(|i| (0..r).fold(zero(), |acc, j| acc + &m[i][j] * &w[j])).collect();
        }
        let next: Vec<PadicNumber> = (0..r + 2)
            .map(|i| (0..=i.min(r)).fold(zero(), |acc, j| acc + &t[i - j] * &v[j]))
            .collect();
        v = next;
    }
    v.reverse();
    PadicPolynomial::new(p, v)
}

/// `det(1 - T M)`, the reversed characteristic polynomial.
pub fn zeta_numerator(m: &[Vec<PadicNumber>]) -> PadicPolynomial {
    let chi = char_poly(m);
    let mut cs = chi.coeffs().to_vec();
    cs.resize(m.len() + 1, PadicNumber::zero(chi.prime(), EXACT));
    cs.reverse();
    PadicPolynomial::new(chi.prime(), cs)
}
