//! Telling markings apart, and checking that a subset generates.

use hypgroup::cayley::{enumerate_ball, generates_within, marked_fingerprint, DEFAULT_MEM_CAP};
use hypgroup::group::MarkedGroup;

pub fn main() {
    let specs = ["fprod(z(1),z(2,3))", "fprod(z(1),z(3,4))", "fprod(z(1),z(1))"];
    let prints: Vec<_> = specs.iter().map(|s| marked_fingerprint(&MarkedGroup::from_text(s).unwrap(), 4, DEFAULT_MEM_CAP).unwrap()).collect();
    for (s, p) in specs.iter().zip(&prints) {
        println!("{s}: growth {:?}, generator distances {:?}", p.growth, p.generator_distances);
    }
    for i in 0..3 {
        for j in i + 1..3 {
            println!("{} vs {}: {}", specs[i], specs[j], if prints[i] == prints[j] { "not distinguished" } else { "distinct" });
        }
    }

    let f2 = MarkedGroup::from_text("free(2)").unwrap();
    let ball: Vec<_> = enumerate_ball(&f2, 2, DEFAULT_MEM_CAP).unwrap().elements().skip(1).cloned().collect();
    println!("B(2) \\ e generates free(2): {:?}", generates_within(&f2, &ball, 2, 1 << 16));
    let a = f2.parse_word("a1").unwrap();
    println!("{{a1, a1-}} generates free(2): {:?}", generates_within(&f2, &[a.clone(), f2.inverse(&a)], 3, 1 << 16));
}
