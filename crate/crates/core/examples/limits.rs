//! Certified values of ξ: e - 1, tan(1), and a less friendly example.

use hurwitzian::limits::{numerator_limit, series_ab, xi_bessel, xi_limit};
use hurwitzian::hurwitz::{magic, normalized_numerator};
use hurwitzian::CFParams;

pub fn run_example() -> hurwitzian::Result<()> {
    for (name, params, digits) in [
        ("e - 1", CFParams::new(1, 2, 2, 3, 2)?, 40),
        ("tan 1", CFParams::new(1, 1, 2, 2, 1)?, 40),
        ("[4,3,4,4,4,5,...]", CFParams::new(4, 3, 1, 2, 1)?, 25),
    ] {
        let v = xi_limit(&params, digits)?;
        let b = xi_bessel(&params, digits)?;
        assert!(v.overlaps(&b));
        println!("{name:>18} = {}", v.to_decimal(digits).text);
    }

    let params = CFParams::new(1, 2, 2, 3, 2)?;
    let m = magic(&params);
    let sv = series_ab(&m.sigma, &m.rho, 30)?;
    println!("A = {}  B = {}  ({} terms)", sv.a.to_decimal(30).text, sv.b.to_decimal(30).text, sv.terms_used);

    let limit = numerator_limit(&params, 20)?;
    for n in [10, 50, 200] {
        let v = normalized_numerator(&params, n, 20)?;
        println!("normalized p at n={n:<3} {}  (limit {})", v.to_decimal(20).text, limit.to_decimal(20).text);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
