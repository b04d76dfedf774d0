//! The Steiner system S(3, 5, q+1) for m even, built one triple at a time and
//! checked against brute force and the weight-5 codewords.

use bch_designs::blocks::{enumerate_blocks_bruteforce, enumerate_steiner_blocks, steiner_block_through};
use bch_designs::code::{enumerate_low_weight, ScanMethod};
use bch_designs::design::{verify_design, IncidenceStructure};
use bch_designs::{Field, UnitPoint};

fn main() -> bch_designs::Result<()> {
    let m: u32 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    let f = Field::new(m)?;
    let family = enumerate_steiner_blocks(&f)?;
    println!("{} blocks on {} points", family.len(), f.n());

    let b = steiner_block_through(&f, [UnitPoint(0), UnitPoint(1), UnitPoint(2)])?;
    println!("block through {{0, 1, 2}}: {:?}", b.exps());

    let report = verify_design(&IncidenceStructure::from_family(&family)?, 3)?;
    println!("3-design: {}, lambda = {:?}, Steiner: {}", report.is_design, report.lambda, report.is_steiner);

    if f.q() <= 16 {
        let brute = enumerate_blocks_bruteforce(&f, 5, 2, u128::MAX)?;
        println!("brute force agrees: {}", brute == family);
    }
    let words = enumerate_low_weight(&f, 5, ScanMethod::Esp, u128::MAX)?;
    println!("weight-5 codewords: {} on {} supports", words.count, words.supports.len());
    println!("supports are the blocks: {}", words.supports == family.blocks);

    print!("{}", family.to_file_string().lines().take(4).collect::<Vec<_>>().join("\n"));
    println!("\n...");
    Ok(())
}
