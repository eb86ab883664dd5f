//! The magic numbers σ, ρ and the convergents they generate in closed form.

use hurwitzian::hurwitz::{
    block_convergent, closed_form_convergent, closed_form_convergent_experimental, magic,
    prec_recurrence_p, prec_recurrence_q, r0_denominator,
};
use hurwitzian::CFParams;

pub fn run_example() -> hurwitzian::Result<()> {
    let params = CFParams::new(2, 3, 5, 4, 1)?;
    let m = magic(&params);
    println!("{params}: sigma = {}, rho = {}", m.sigma, m.rho);

    let ps = prec_recurrence_p(&params, 6);
    let qs = prec_recurrence_q(&params, 6);
    for n in 0..=6u64 {
        let c = closed_form_convergent(&params, n)?;
        assert_eq!(c, block_convergent(&params, n)?);
        assert_eq!((&c.p, &c.q), (&ps[n as usize], &qs[n as usize]));
        println!("n={n} index={:<3} p={} q={}", c.n, c.p, c.q);
    }

    let r0 = CFParams::new(2, 3, 5, 4, 0)?;
    println!("r = 0 denominator at n=5: {}", r0_denominator(&r0, 5)?);

    // Beyond r ≤ d - 1 the formula is unproven; it still evaluates.
    let wide = CFParams::new(1, 2, 2, 3, 4)?;
    match closed_form_convergent_experimental(&wide, 3) {
        Ok(c) => println!("{wide} n=3 (experimental): {} / {}", c.p, c.q),
        Err(e) => println!("{wide} n=3 (experimental): {e}"),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
