//! Low-weight codewords from their supports: the kernel of M on a candidate
//! support, and a few explicit words.

use bch_designs::blocks::Block;
use bch_designs::code::{build_code, enumerate_low_weight, m_matrix, ScanMethod};
use bch_designs::Field;

fn main() -> bch_designs::Result<()> {
    let m: u32 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(5);
    let f = Field::new(m)?;
    let code = build_code(&f)?;
    println!("generator degree {:?}", code.generator.degree());

    let mm = m_matrix(&f, &Block::new([0, 1, 2, 3, 4, 5])?);
    println!("rank M on {{0..5}} = {}", mm.rank(&f));

    for w in 5..=6 {
        let esp = enumerate_low_weight(&f, w, ScanMethod::Esp, u128::MAX)?;
        println!("A_{w} = {} over {} supports, {:?} per support", esp.count, esp.supports.len(), esp.uniform_multiplicity());
        if esp.count == 0 {
            continue;
        }
        for word in esp.representatives(&f, &code)?.iter().take(2) {
            println!("  {}", word.to_csv().trim_end());
        }
    }
    Ok(())
}
