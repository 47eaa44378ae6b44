//! Reduced words in a ball of a free group and the presentation census.

use hypgroup::constants::{presentation_count_bound, DEFAULT_PRECISION};
use hypgroup::presentations::{count_presentations, free_ball_count, free_ball_enumerate, verify_ball_bound};

pub fn main() {
    let words: Vec<String> = free_ball_enumerate(2, 2, 100).unwrap().iter().map(|w| w.to_string()).collect();
    println!("B(2) in free(2), shortlex: {}", words.join(" "));
    for (k, p) in [(1, 3), (2, 3), (3, 5), (8, 10)] {
        let c = count_presentations(k, p, DEFAULT_PRECISION).unwrap();
        println!(
            "k = {k}, p = {p}: |B(p)| = {}, bound |B(p)| <= (2k)^p: {}, log2 #relator sets = {}",
            free_ball_count(k, p).unwrap(),
            verify_ball_bound(k, p).unwrap(),
            c.count.log2_string()
        );
    }
    for (n, p) in [(1, 3), (2, 3), (3, 4)] {
        println!("presentations on {n} generators, relators of length <= {p}: {}", presentation_count_bound(n, p, DEFAULT_PRECISION).unwrap());
    }
}
