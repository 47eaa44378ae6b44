//! Displacement of isometries, classification and the displacement floor.

use hypgroup::cayley::DEFAULT_MEM_CAP;
use hypgroup::constants::{ConstantsInput, NuFunction, DEFAULT_PRECISION};
use hypgroup::displacement::{
    ball_sample, classify_isometry, cyclically_reduced_length, displacement_floor_consistency, displacement_report,
};
use hypgroup::group::MarkedGroup;

pub fn main() {
    let f2 = MarkedGroup::from_text("free(2)").unwrap();
    for word in ["a1a2", "a1a2a1-", "a2a1a1a2-", "a1a2a1-a2-"] {
        let gamma = f2.parse_word(word).unwrap();
        let rep = displacement_report(&f2, &gamma, 10, 4, DEFAULT_MEM_CAP).unwrap();
        println!(
            "{word}: |γ^k| = {:?}, ℓ ≈ {} (stabilized {}), s = {} at x = {}, cyclic length {}",
            rep.asymptotic.powers,
            rep.asymptotic.ell_diff,
            rep.asymptotic.stabilized,
            rep.minimal.s_min,
            rep.minimal.witness,
            cyclically_reduced_length(&f2, &gamma).unwrap()
        );
    }
    for (spec, word) in [("cyclic(6)", "2"), ("fprod(cyclic(2),cyclic(2))", "L:1 R:1"), ("zpow(2)", "e1 e2")] {
        let g = MarkedGroup::from_text(spec).unwrap();
        let gamma = g.parse_word(word).unwrap();
        println!("{spec}, γ = {gamma}: {:?}", classify_isometry(&g, &gamma, 12));
    }

    let input = ConstantsInput::new(0.01, 3f64.ln(), 1.0).unwrap();
    let sample = ball_sample(&f2, 3, DEFAULT_MEM_CAP).unwrap();
    let rep = displacement_floor_consistency(&f2, &sample, &input, &NuFunction::ceil(), 10, DEFAULT_PRECISION).unwrap();
    println!(
        "floor {:.3e} < min observed ℓ {} over {} elements: {} ({})",
        rep.floor, rep.min_observed, rep.sampled, rep.passed, rep.provenance.label()
    );
}
