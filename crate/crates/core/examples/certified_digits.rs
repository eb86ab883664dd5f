//! Interval arithmetic: every printed digit is backed by an enclosure.

use hurwitzian::exactnum::elementary::{exp, pi};
use hurwitzian::exactnum::rat;
use hurwitzian::PrecReal;

pub fn run_example() -> hurwitzian::Result<()> {
    let third = PrecReal::with_digits(&rat(1, 3), 30);
    println!("1/3  = {}", third.to_decimal(30).text);

    let e = exp(&PrecReal::one(400));
    println!("e    = {}", e.to_decimal(60).text);
    println!("pi   = {}", pi(400).to_decimal(60).text);

    // Too few bits cannot certify many digits.
    let coarse = PrecReal::from_rational(&rat(1, 7), 40);
    let d = coarse.to_decimal(30);
    println!("1/7 at 40 bits, 30 digits: {} certified={}", d.text, d.certified);
    println!("certified digits available: {}", coarse.certified_digits());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
