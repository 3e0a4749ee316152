//! Classical arithmetic in both representations.
//!
//!     cargo run --example field_arithmetic

use gf2m_synth::field::{itoh_tsujii_inverse, FieldSpec, GhostBitField};
use gf2m_synth::Bits;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // Ghost-bit, m = 4: 1 + x^2 gains a zero ghost coefficient.
    let f = GhostBitField::new(4)?;
    let a = f.embed(&"1010".parse()?)?;
    let sq = f.square(&a)?;
    println!("pi = {:?}", f.square_perm());
    println!("a = {a}, a^2 = {sq}, back in polynomial basis: {}", f.retract(&sq)?);
    println!("a and its complement agree: {}", f.same_element(&a, &a.complement())?);

    let spec = FieldSpec::ghost_bit(4)?;
    let inv = itoh_tsujii_inverse(&spec, &a)?;
    println!("a^-1 = {inv}, a * a^-1 = {}", spec.mul(&a, &inv)?);

    // Type-2 normal basis, m = 5: squaring is a rotation, one is all-ones.
    let spec = FieldSpec::gnb(5)?;
    let b: Bits = "11010".parse()?;
    println!("\nnormal basis m=5: b = {b}, b^2 = {}, b^4 = {}", spec.square(&b)?, spec.frobenius(&b, 2)?);
    let inv = itoh_tsujii_inverse(&spec, &b)?;
    println!("b^-1 = {inv}, b * b^-1 = {}", spec.mul(&b, &inv)?);
    Ok(())
}
