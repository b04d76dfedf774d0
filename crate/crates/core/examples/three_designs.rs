//! The 3-designs of m even: the full sigma_{6,3} family and its split into
//! B0 (blocks containing a Steiner block) and B1.

use bch_designs::blocks::{blocks_through_triple, enumerate_b63, split_b63};
use bch_designs::design::{verify_design, IncidenceStructure};
use bch_designs::{Field, UnitPoint};

fn main() -> bch_designs::Result<()> {
    let m: u32 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    let f = Field::new(m)?;
    let full = enumerate_b63(&f, u128::MAX)?;
    let (b0, b1) = split_b63(&f, &full)?;
    for fam in [&full, &b0, &b1] {
        if fam.is_empty() {
            println!("{:>4}: empty", fam.tag.to_string());
            continue;
        }
        let r = verify_design(&IncidenceStructure::from_family(fam)?, 3)?;
        println!("{:>4}: {} blocks, 3-(..) lambda = {:?}", fam.tag.to_string(), fam.len(), r.lambda);
    }

    let local = blocks_through_triple(&f, [UnitPoint(0), UnitPoint(1), UnitPoint(2)])?;
    println!("through {{0,1,2}}: {} from B0, {} in total", local.b0().len(), local.all().len());
    Ok(())
}
