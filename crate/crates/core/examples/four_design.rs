//! The 4-(q+1, 6, lambda) design of zero sigma_{6,3} blocks for m odd.

use bch_designs::blocks::{blocks_through_quadruple, enumerate_b63};
use bch_designs::design::{coverage_counts, verify_design, IncidenceStructure};
use bch_designs::{Field, UnitPoint};

fn main() -> bch_designs::Result<()> {
    let m: u32 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(5);
    let f = Field::new(m)?;
    if m.is_multiple_of(2) {
        eprintln!("this example expects m odd");
        std::process::exit(2);
    }
    let family = enumerate_b63(&f, u128::MAX)?;
    let s = IncidenceStructure::from_family(&family)?;
    let counts = coverage_counts(&s, 4, u128::MAX)?;
    let (lo, hi) = (counts.iter().min().unwrap(), counts.iter().max().unwrap());
    println!("{} blocks, {} 4-subsets, coverage in [{lo}, {hi}]", family.len(), counts.len());

    let q = f.q();
    println!("(q-8)/2 = {}, (q-8)/4 = {}", (q - 8) / 2, (q - 8) / 4);
    println!("{:?}", verify_design(&s, 4)?);

    let local = blocks_through_quadruple(&f, [UnitPoint(0), UnitPoint(1), UnitPoint(2), UnitPoint(3)])?;
    println!("blocks through {{0,1,2,3}}:");
    for b in &local {
        println!("  {:?}", b.exps());
    }
    Ok(())
}
