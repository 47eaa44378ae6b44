//! The worked-example suite, restricted to the fast claims.

use hypgroup::corpus::{run_claim, CorpusConfig};

pub fn main() {
    let cfg = CorpusConfig::default();
    for id in [2, 4, 5, 7, 8, 9, 12, 13, 14] {
        println!("{}", run_claim(id, &cfg).unwrap().line());
    }
}
