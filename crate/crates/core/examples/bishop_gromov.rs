//! The volume-ratio inequality on exact growth.

use hypgroup::cayley::closed_form_growth;
use hypgroup::constants::{bg_bound, bg_check, ConstantsInput};
use hypgroup::group::MarkedGroup;

pub fn main() {
    let growth = closed_form_growth(&MarkedGroup::from_text("free(2)").unwrap(), 300).unwrap();
    for h in [3f64.ln(), 0.5, 0.1] {
        let rep = bg_check(&growth, &ConstantsInput::new(0.01, h, 1.0).unwrap()).unwrap();
        println!(
            "H = {h:.4}: {} over {} pairs r in [{}, {}], worst log-margin {:.3} at {:?}, {} failures",
            if rep.passed { "PASS" } else { "FAIL" },
            rep.pairs,
            rep.r_min,
            rep.r_max,
            rep.worst_margin,
            rep.worst_pair,
            rep.failures
        );
    }
    println!("bound at R = 20, r = 11, H = ln 3: {:.4e}", bg_bound(20.0, 11.0, 3f64.ln()).unwrap());
}
