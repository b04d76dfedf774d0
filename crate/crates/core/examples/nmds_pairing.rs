//! Each minimum weight codeword of the m odd code misses exactly one minimum
//! weight support of the dual.

use bch_designs::code::nmds_pairing_check;
use bch_designs::Field;

fn main() -> bch_designs::Result<()> {
    let mut args = std::env::args().skip(1);
    let m: u32 = args.next().and_then(|s| s.parse().ok()).unwrap_or(5);
    let sample: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(100);
    let f = Field::new(m)?;
    let r = nmds_pairing_check(&f, sample, 7, u128::MAX)?;
    println!("{}", serde_json::to_string_pretty(&r).expect("report serializes"));
    Ok(())
}
