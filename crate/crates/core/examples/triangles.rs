//! Thin and slim triangles and geodesic projections.

use hypgroup::cayley::{enumerate_ball, DEFAULT_MEM_CAP};
use hypgroup::group::MarkedGroup;
use hypgroup::hyperbolicity::{projection_defect, slim_insize, thin_triangle_insize, triangle_scan, ScanMode};

pub fn main() {
    let z2 = MarkedGroup::from_text("zpow(2)").unwrap();
    let ball = enumerate_ball(&z2, 4, DEFAULT_MEM_CAP).unwrap();
    let triple = [z2.identity(), z2.parse_word("e1e1e1").unwrap(), z2.parse_word("e2e2e2").unwrap()];
    let thin = thin_triangle_insize(&ball, &triple).unwrap();
    let slim = slim_insize(&ball, &triple).unwrap();
    println!("zpow(2) triangle e, (3,0), (0,3): tripod legs {:?}, insize {}, slim {}", thin.legs.map(|l| l.to_string()), thin.insize, slim.insize);

    for (spec, r) in [("free(2)", 2), ("zpow(2)", 2)] {
        let g = MarkedGroup::from_text(spec).unwrap();
        let ball = enumerate_ball(&g, r, DEFAULT_MEM_CAP).unwrap();
        let scan = triangle_scan(&ball, ScanMode::Exact).unwrap();
        let proj = projection_defect(&ball, ScanMode::Exact).unwrap();
        println!(
            "{spec} B({r}): worst thin insize {}, worst slim insize {}, projection defect {} over {} triples",
            scan.thin.insize, scan.slim.insize, proj.defect, scan.scanned
        );
    }
}
