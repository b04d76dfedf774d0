//! Builds GF(q^2) for a chosen m and walks the unit circle.
//!
//! cargo run --example field_info -- 5

use bch_designs::{Field, FieldElement, UnitPoint};

fn main() -> bch_designs::Result<()> {
    let m: u32 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    let f = Field::new(m)?;
    println!("{}", f.record());
    println!("q = {}, |GF(q^2)| = {}, |U| = {}", f.q(), f.size(), f.n());
    println!("alpha = {:#x}, gamma = {:#x}", f.alpha().0, f.gamma().0);

    for i in 0..f.n().min(6) as u32 {
        let u = f.unit(UnitPoint(i));
        let norm = f.mul(u, f.frobenius_q(u));
        println!("gamma^{i} = {:#06x}  u^(q+1) = {}  u + u^-1 = {:#x}", u.0, norm.0, (u + f.inv(u)?).0);
    }

    let x = FieldElement(0x53 & (f.size() as u32 - 1));
    println!("Tr({:#x}) = {:#x}, in GF(q): {}", x.0, f.trace_q2_to_q(x).0, f.is_in_subfield(f.trace_q2_to_q(x)));
    Ok(())
}
