//! Runs every example as a smoke test.

#[path = "../examples/marked_groups.rs"]
mod marked_groups;
#[path = "../examples/growth.rs"]
mod growth;
#[path = "../examples/entropy.rs"]
mod entropy;
#[path = "../examples/four_point.rs"]
mod four_point;
#[path = "../examples/triangles.rs"]
mod triangles;
#[path = "../examples/displacement.rs"]
mod displacement;
#[path = "../examples/fingerprints.rs"]
mod fingerprints;
#[path = "../examples/bishop_gromov.rs"]
mod bishop_gromov;
#[path = "../examples/constants.rs"]
mod constants;
#[path = "../examples/quasi_isometry.rs"]
mod quasi_isometry;
#[path = "../examples/presentations.rs"]
mod presentations;
#[path = "../examples/corpus.rs"]
mod corpus;

#[test]
fn marked_groups_runs() {
    marked_groups::main();
}

#[test]
fn growth_runs() {
    growth::main();
}

#[test]
fn entropy_runs() {
    entropy::main();
}

#[test]
fn four_point_runs() {
    four_point::main();
}

#[test]
fn triangles_runs() {
    triangles::main();
}

#[test]
fn displacement_runs() {
    displacement::main();
}

#[test]
fn fingerprints_runs() {
    fingerprints::main();
}

#[test]
fn bishop_gromov_runs() {
    bishop_gromov::main();
}

#[test]
fn constants_runs() {
    constants::main();
}

#[test]
fn quasi_isometry_runs() {
    quasi_isometry::main();
}

#[test]
fn presentations_runs() {
    presentations::main();
}

#[test]
fn corpus_runs() {
    corpus::main();
}
