//! Convergents of a Hurwitzian continued fraction by three routes.

use hurwitzian::cf::{convergents, euler_mindig};
use hurwitzian::hurwitz::{closed_form_convergent, denom_stream};
use hurwitzian::CFParams;

pub fn run_example() -> hurwitzian::Result<()> {
    // e - 1 = [1, 1, 2, 1, 1, 4, 1, 1, 6, ...]
    let params = CFParams::new(1, 2, 2, 3, 2)?;
    let stream = denom_stream(&params);
    println!("{params} starts {:?}", stream.prefix(9));

    let table = convergents(&stream, 10)?;
    for c in &table[1..] {
        println!("p_{:<2} / q_{:<2} = {} / {}", c.n, c.n, c.p, c.q);
    }

    // The even-set expansion and the closed form agree with the recurrence.
    let em = euler_mindig(&stream, 10)?;
    assert_eq!(em, table[11]);
    let closed = closed_form_convergent(&params, 3)?;
    assert_eq!(closed, table[(params.convergent_index(3) + 1) as usize]);
    println!("closed form at n=3: {} / {}", closed.p, closed.q);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
