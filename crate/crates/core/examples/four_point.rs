//! Four-point defect of balls, exact and sampled.

use hypgroup::cayley::{enumerate_ball, DEFAULT_MEM_CAP};
use hypgroup::group::MarkedGroup;
use hypgroup::hyperbolicity::{four_point_defect, ScanMode};

pub fn main() {
    for (spec, r) in [("free(2)", 3), ("z(1,2,3)", 8), ("zpow(2)", 2), ("zpow(2)", 4), ("zpow(2)", 6)] {
        let g = MarkedGroup::from_text(spec).unwrap();
        let ball = enumerate_ball(&g, r, DEFAULT_MEM_CAP).unwrap();
        let rep = four_point_defect(&ball, ScanMode::Exact).unwrap();
        let witness: Vec<String> = rep.witness.iter().map(|x| x.to_string()).collect();
        println!("{spec} B({r}), {} vertices: defect {} at {witness:?}", ball.len(), rep.defect);
    }
    let g = MarkedGroup::from_text("zpow(3)").unwrap();
    let ball = enumerate_ball(&g, 4, DEFAULT_MEM_CAP).unwrap();
    let rep = four_point_defect(&ball, ScanMode::Sampled { seed: 1, count: 20_000 }).unwrap();
    println!("zpow(3) B(4), {} vertices: sampled lower bound {} over {} quadruples", ball.len(), rep.defect, rep.scanned);
}
