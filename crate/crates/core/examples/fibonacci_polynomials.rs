//! Fibonacci and Lucas polynomials, and F_n as a count of even sets.

use hurwitzian::fibpoly::{fib_eval, fib_poly, fib_via_even_sets, lucas_poly};
use hurwitzian::BigInt;

pub fn run_example() -> hurwitzian::Result<()> {
    for n in 0..=6 {
        println!("F_{n}(q) = {:<16} L_{n}(q) = {}", fib_poly(n).to_string(), lucas_poly(n as u64));
    }
    println!("F_-5(q) = {}", fib_poly(-5));
    for n in 1..=10 {
        assert_eq!(fib_via_even_sets(n), fib_poly(n as i64));
    }
    let three = BigInt::from(3);
    println!("F_20(3) = {}", fib_eval(20, &three));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
