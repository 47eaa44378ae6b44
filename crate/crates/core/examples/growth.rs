//! Ball enumeration and exact growth sequences.

use hypgroup::cayley::{closed_form_growth, enumerate_ball, growth_sequence, DEFAULT_MEM_CAP};
use hypgroup::group::MarkedGroup;

pub fn main() {
    let f2 = MarkedGroup::from_text("free(2)").unwrap();
    let ball = enumerate_ball(&f2, 4, DEFAULT_MEM_CAP).unwrap();
    println!("free(2): |B(4)| = {}, spheres {:?}", ball.len(), ball.sphere_sizes());
    let far = f2.parse_word("a1a2a1-a2-").unwrap();
    let path: Vec<String> = ball.geodesic_path(&f2.identity(), &far).unwrap().iter().map(|g| g.to_string()).collect();
    println!("geodesic e -> {far}: {}", path.join(" -> "));

    let closed = closed_form_growth(&f2, 60).unwrap();
    println!("free(2): |B(60)| = {}", closed.counts[60]);

    let product = MarkedGroup::from_text("prod(free(2),cyclic(5))").unwrap();
    let enumerated = enumerate_ball(&product, 4, DEFAULT_MEM_CAP).unwrap().ball_sizes();
    let convolved = closed_form_growth(&product, 4).unwrap();
    println!("prod(free(2),cyclic(5)): enumeration {enumerated:?}, convolution {:?}",
        convolved.counts.iter().map(|c| c.to_string()).collect::<Vec<_>>());

    let fp = MarkedGroup::from_text("fprod(z(1),z(2,3))").unwrap();
    let growth = growth_sequence(&fp, 6, DEFAULT_MEM_CAP).unwrap();
    let mut csv = Vec::new();
    growth.write_csv(&mut csv).unwrap();
    print!("fprod(z(1),z(2,3)) growth as CSV:\n{}", String::from_utf8(csv).unwrap());
}
