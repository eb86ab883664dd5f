//! Which tuples have a half-odd or integer magic sum, and an exhaustive check.

use hurwitzian::classify::{brute_force_sweep, sigma_class, theorem61_case, theorem71_case};
use hurwitzian::CFParams;

pub fn run_example() -> hurwitzian::Result<()> {
    for (a, b0, b1, d) in [(1, 2, 2, 3), (1, 1, 1, 3), (4, 3, 1, 2), (3, 1, 1, 2), (2, 5, 3, 1)] {
        let p = CFParams::new(a, b0, b1, d, 0)?;
        let c = sigma_class(&p);
        let cases = match (theorem61_case(&p), theorem71_case(&p)) {
            (Ok(x), Ok(y)) => format!("6.1 {x:?}, 7.1 {y:?}"),
            (Err(e), _) | (_, Err(e)) => e.to_string(),
        };
        println!("{p}: sigma = {} {:?} [{cases}]", c.witness, c.tag);
    }
    let report = brute_force_sweep(20, 8, 12);
    report.check()?;
    println!("{}", serde_json::to_string(&report.cases).unwrap());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
