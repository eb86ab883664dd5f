//! Exact verification of the two summation identities and the P_n, Q_n
//! polynomials.

use hurwitzian::exactnum::rat;
use hurwitzian::identities::{
    coefficient_rows, gcf_convergent_check, pq_convergent_relations, r_poly, verify_rsum,
    verify_ssum,
};
use hurwitzian::limits::wlang_limit_check;

pub fn run_example() -> hurwitzian::Result<()> {
    println!("R_2(x, y) = {:?}", r_poly(2));
    let all = (0..=12).all(|n| verify_rsum(n) && verify_ssum(n));
    println!("summation identities hold for n <= 12: {all}");

    for (n, row) in coefficient_rows('Q', 6).iter().enumerate() {
        let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
        println!("Q_{n}: {}", cells.join(" "));
    }
    assert!(gcf_convergent_check(10, &rat(1, 16)));
    assert_eq!(pq_convergent_relations(3, 8), Ok(()));
    println!("P_50/Q_50 at x = 1/16 within 1e-20 of the Bessel ratio: {}", wlang_limit_check(2, 50, 20)?);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
