// P(n) from the Euler product and Q(n) from the tail-product sum, checked
// against P(n+1) = P(n) + Q(n), with the coefficient table written as CSV.
//
// cargo run --example generating_functions -- 100

use partition_evolve::series::{check_recurrence_with, write_coeff_csv};
use partition_evolve::{euler_p_coeffs, q_coeffs};

pub fn main() {
    let n = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(30);
    let p = euler_p_coeffs(n);
    let q = q_coeffs(n);
    let check = check_recurrence_with(&p, &q);
    println!(
        "P({n}) = {}, Q({n}) = {}; recurrence holds for all n < {n}: {}",
        p[n],
        q[n],
        check.passed()
    );
    write_coeff_csv(std::io::stdout().lock(), &p[..=n.min(10)], &q[..=n.min(10)])
        .expect("stdout is writable");
}
