//! Every runnable example, executed as a test.

#[allow(dead_code)]
#[path = "../examples/convergents.rs"]
mod convergents_example;

#[test]
fn convergents_example_runs() {
    convergents_example::run_example().expect("convergents example should run");
}

#[allow(dead_code)]
#[path = "../examples/fibonacci_polynomials.rs"]
mod fibonacci_polynomials_example;

#[test]
fn fibonacci_polynomials_example_runs() {
    fibonacci_polynomials_example::run_example().expect("fibonacci_polynomials example should run");
}

#[allow(dead_code)]
#[path = "../examples/closed_form.rs"]
mod closed_form_example;

#[test]
fn closed_form_example_runs() {
    closed_form_example::run_example().expect("closed_form example should run");
}

#[allow(dead_code)]
#[path = "../examples/limits.rs"]
mod limits_example;

#[test]
fn limits_example_runs() {
    limits_example::run_example().expect("limits example should run");
}

#[allow(dead_code)]
#[path = "../examples/bessel.rs"]
mod bessel_example;

#[test]
fn bessel_example_runs() {
    bessel_example::run_example().expect("bessel example should run");
}

#[allow(dead_code)]
#[path = "../examples/identities.rs"]
mod identities_example;

#[test]
fn identities_example_runs() {
    identities_example::run_example().expect("identities example should run");
}

#[allow(dead_code)]
#[path = "../examples/classify.rs"]
mod classify_example;

#[test]
fn classify_example_runs() {
    classify_example::run_example().expect("classify example should run");
}

#[allow(dead_code)]
#[path = "../examples/certified_digits.rs"]
mod certified_digits_example;

#[test]
fn certified_digits_example_runs() {
    certified_digits_example::run_example().expect("certified_digits example should run");
}

#[allow(dead_code)]
#[path = "../examples/cli_json.rs"]
mod cli_json_example;

#[test]
fn cli_json_example_runs() {
    cli_json_example::run_example().expect("cli_json example should run");
}
