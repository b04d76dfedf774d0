//! Weight distribution of the dual code two ways, then the code's own
//! distribution by MacWilliams.

use std::time::Instant;

use bch_designs::code::{build_code, dual_weight_distribution, macwilliams_transform, DualMethod};
use bch_designs::Field;

fn main() -> bch_designs::Result<()> {
    let m: u32 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    let f = Field::new(m)?;
    let code = build_code(&f)?;
    println!("[{}, {}] code over GF({})", code.n, code.dimension, f.q());

    let t = Instant::now();
    let formula = dual_weight_distribution(&f, DualMethod::SupportFormula, u128::MAX)?;
    println!("support formula ({:.1?}): {formula:?}", t.elapsed());

    if f.q() <= 32 {
        let t = Instant::now();
        let trace = dual_weight_distribution(&f, DualMethod::TraceEnum, u128::MAX)?;
        println!("trace enumeration ({:.1?}) agrees: {}", t.elapsed(), trace == formula);
    }

    let primal = macwilliams_transform(&formula, code.n, 6, f.q())?;
    primal.validate(f.q(), code.dimension)?;
    for (w, a) in primal.counts().iter().enumerate().filter(|(_, a)| **a != 0u32.into()) {
        println!("A_{w:<2} = {a}");
    }
    Ok(())
}
