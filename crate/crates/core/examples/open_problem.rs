//! Zero-ESP families outside the constructed cases, by brute force.
//!
//! cargo run --release --example open_problem -- <m> <k> <ell>

use bch_designs::blocks::enumerate_blocks_bruteforce;
use bch_designs::design::{verify_design, IncidenceStructure};
use bch_designs::Field;

fn main() -> bch_designs::Result<()> {
    let args: Vec<u64> = std::env::args().skip(1).filter_map(|s| s.parse().ok()).collect();
    let (m, k, ell) = match args[..] {
        [m, k, ell] => (m as u32, k as usize, ell as usize),
        _ => (4, 4, 2),
    };
    let f = Field::new(m)?;
    let family = enumerate_blocks_bruteforce(&f, k, ell, bch_designs::combinatorics::DEFAULT_BUDGET)?;
    println!("q={} k={k} ell={ell}: {} blocks", f.q(), family.len());
    if family.is_empty() {
        return Ok(());
    }
    let s = IncidenceStructure::from_family(&family)?;
    for t in 1..k.min(5) {
        let r = verify_design(&s, t)?;
        println!("  t={t}: coverage {}..{}{}", r.coverage_min, r.coverage_max, if r.is_design { "  design" } else { "" });
    }
    Ok(())
}
