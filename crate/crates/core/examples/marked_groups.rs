//! Building marked groups from specs and computing in them.

use hypgroup::group::MarkedGroup;

pub fn main() {
    for spec in ["free(2)", "zpow(2)", "z(2,3)", "cyclic(5)", "prod(free(1),cyclic(3))", "fprod(cyclic(2),cyclic(2))"] {
        let g = MarkedGroup::from_text(spec).unwrap();
        let labels: Vec<&str> = g.generators().iter().map(|s| s.label.as_str()).collect();
        println!("{spec}: Σ = {labels:?}, torsion-free: {}", g.is_torsion_free());
    }

    let f2 = MarkedGroup::from_text("free(2)").unwrap();
    let x = f2.parse_word("a1a2a1-").unwrap();
    let y = f2.parse_word("a1 a2-").unwrap();
    println!("x = {x}, y = {y}, xy = {}, x⁻¹ = {}", f2.multiply(&x, &y), f2.inverse(&x));
    println!("|x| = {}, d(x, y) = {}", f2.word_length(&x), f2.distance(&x, &y));

    let z2 = MarkedGroup::from_text("zpow(2)").unwrap();
    let v = z2.parse_word("e1 e1 -e2").unwrap();
    let labels: Vec<&str> = z2.geodesic_word(&v).iter().map(|&i| z2.generators()[i].label.as_str()).collect();
    println!("in zpow(2): {v} has length {} via {labels:?}", z2.word_length(&v));

    let d = MarkedGroup::from_text("fprod(cyclic(2),cyclic(2))").unwrap();
    let st = d.parse_word("L:1 R:1").unwrap();
    println!("in the infinite dihedral group, st = {st} and (st)^5 = {}", d.power(&st, 5));
}
