//! Chinese remainder theorem for pairwise coprime polynomial moduli.

use crate::error::{Error, Result};
use crate::exact::gcd::ext_gcd;
use crate::exact::poly::QPoly;

/// The unique `R` with `deg R < deg ∏ moduli` and `R ≡ residues[i] (mod moduli[i])`.
///
/// Moduli are combined pairwise; each step uses the Bézout cofactors of the
/// running product and the next modulus, so a non-unit gcd is reported as
/// [`Error::NotCoprime`].
pub fn poly_crt(residues: &[QPoly], moduli: &[QPoly]) -> Result<QPoly> {
    if residues.len() != moduli.len() {
        return Err(Error::Precondition("one residue per modulus".into()));
    }
    if moduli.iter().any(QPoly::is_zero) {
        return Err(Error::DivisionByZero);
    }
    for i in 0..moduli.len() {
        for j in i + 1..moduli.len() {
            if !crate::exact::gcd::gcd(&moduli[i], &moduli[j]).is_one() {
                return Err(Error::NotCoprime);
            }
        }
    }
    let mut acc = QPoly::zero();
    let mut product = QPoly::one();
    for (r, m) in residues.iter().zip(moduli) {
        let (g, s, _) = ext_gcd(&product, m);
        if !g.is_one() {
            return Err(Error::NotCoprime);
        }
        // acc + product·s·(r - acc) ≡ r mod m since s·product ≡ 1 mod m.
        let delta = (&(r - &acc) * &s).rem(m)?;
        acc = &acc + &(&product * &delta);
        product = &product * m;
        acc = acc.rem(&product)?;
    }
    Ok(acc)
}
