//! Entropy estimators, exact values and free-product brackets.

use hypgroup::cayley::DEFAULT_MEM_CAP;
use hypgroup::entropy::{estimate_for_group, exact_entropy, fprod_entropy, scaled_entropy};
use hypgroup::group::MarkedGroup;

pub fn main() {
    for spec in ["free(2)", "free(3)", "z(1,2,3)", "prod(free(2),cyclic(5))"] {
        let g = MarkedGroup::from_text(spec).unwrap();
        let est = estimate_for_group(&g, 14, 4, DEFAULT_MEM_CAP).unwrap();
        println!(
            "{spec}: diff(14) = {:.6}, ball diff(14) = {:.6}, ln|B(14)|/14 = {:.6}, exact = {:?}",
            est.diff_at(14),
            est.ball_diff[13],
            est.cumulative_at(14),
            exact_entropy(&g).ok()
        );
    }
    for spec in ["fprod(z(1),z(2,3))", "fprod(z(1),z(1))", "fprod(cyclic(2),cyclic(2))"] {
        let g = MarkedGroup::from_text(spec).unwrap();
        let b = fprod_entropy(&g, 30, 1e-9, DEFAULT_MEM_CAP).unwrap();
        println!("{spec}: entropy in [{:.9}, {:.9}]", b.lower, b.upper);
    }
    let scaled: Vec<String> =
        (1..=5).map(|i: u32| format!("{:.4}", scaled_entropy(f64::from(2 * i - 1).ln(), f64::from(i)).unwrap())).collect();
    println!("free(i) with its metric scaled by i: {scaled:?}");
}
