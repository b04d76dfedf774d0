//! Drives the same command layer as the binary and prints the JSON report.

use bch_designs::app::{cmd_verify, make_field, VerifyTarget};

fn main() -> bch_designs::Result<()> {
    let field = make_field(4, None)?;
    let out = cmd_verify(&field, VerifyTarget::Steiner, Some(3), u128::MAX)?;
    println!("{}", out.report.to_json());
    std::process::exit(if out.report.all_pass() { 0 } else { 1 });
}
