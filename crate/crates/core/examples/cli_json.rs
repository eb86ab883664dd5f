//! Driving the command-line front end in-process and reading its JSON.

use hurwitzian::cli::run;

pub fn run_example() -> hurwitzian::Result<()> {
    for args in [
        "conv --alpha 1 --b0 2 --b1 2 --d 3 --r 2 --n 12 --method closed --json",
        "limit --alpha 1 --b0 1 --b1 2 --d 2 --r 1 --digits 30 --json",
        "classify --alpha 2 --b0 1 --b1 1 --d 2 --json",
    ] {
        let out = run(std::iter::once("hurwitz").chain(args.split_whitespace()));
        assert_eq!(out.code, 0, "{}", out.stderr);
        let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
        println!("$ hurwitz {args}\n{v}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
