//! Bessel functions at half-odd order in closed form, Gamma-free ratios, and
//! the two classical d = 1 formulas.

use hurwitzian::exactnum::rat;
use hurwitzian::limits::{
    bessel_j, bessel_ratio, elementary_half_odd, lehmer_d1, perron_d1, BesselKind,
    BesselOrderHalfOdd,
};
use hurwitzian::PrecReal;

pub fn run_example() -> hurwitzian::Result<()> {
    let z = PrecReal::from_rational(&rat(1, 1), 256);
    for k in 0..4 {
        let order = BesselOrderHalfOdd { k };
        let i = elementary_half_odd(BesselKind::I, order, &z, 25)?;
        let j = elementary_half_odd(BesselKind::J, order, &z, 25)?;
        println!(
            "nu = {:<4} I(1) = {}  J(1) = {}",
            order.nu().to_string(),
            i.to_decimal(25).text,
            j.to_decimal(25).text
        );
    }
    println!("J_1/2(1) = {}", bessel_j(&rat(1, 2), &z, 25)?.to_decimal(25).text);

    // I_1(1)/I_0(1): integer order, only as a ratio.
    let r = bessel_ratio(BesselKind::I, &rat(1, 1), &rat(1, 1), 25)?;
    println!("I_1(1)/I_0(1) = {}", r.to_decimal(25).text);

    for (b0, b1) in [(1, 1), (3, 2), (5, 3)] {
        let l = lehmer_d1(b0, b1, 25)?;
        let p = perron_d1(b0, b1, 25)?;
        assert_eq!(l.to_decimal(25).text, p.to_decimal(25).text);
        println!("[{b0}, {b0}+{b1}, {b0}+2*{b1}, ...] = {}", l.to_decimal(25).text);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
