//! Hyperbolicity under quasi-isometry and the word-metric sandwich.

use hypgroup::constants::{qi_c1_c2, qi_chain, qi_delta, qi_delta_loose, sandwich_check, tree_sigma_prime_length};

pub fn main() {
    for (delta, d) in [(0.0, 1.0), (1.0, 1.0), (3.0, 0.5), (10.0, 10.0)] {
        let (value, target) = qi_chain(delta, d).unwrap();
        println!("δ = {delta}, D = {d}: δ'' = {value:.4} <= {target:.4}");
    }
    let (c1, c2) = qi_c1_c2(2.0, 1.0, 0.5).unwrap();
    println!(
        "λ = 2, C = 1, δ = 0.5: C1 = {c1}, C2 = {c2}, δ'' = {:.4} (looser form {:.4})",
        qi_delta(1.0, 1.0, 2.0, 1.0, 0.5).unwrap(),
        qi_delta_loose(1.0, 1.0, 2.0, 1.0, 0.5).unwrap()
    );
    let rep = sandwich_check(8, 1.0, &(1..=200).collect::<Vec<_>>()).unwrap();
    println!("sandwich on trees, k = 8, D = 1: passed {}, {} tight", rep.passed, rep.tight_upper);
    println!("|γ| = 25 gives d' = {}", tree_sigma_prime_length(25, 8, 1.0));
}
