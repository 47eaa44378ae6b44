//! The constants report under different ν choices.

use hypgroup::constants::{constants_report, n0_n1_n2, ConstantsInput, NuFunction, DEFAULT_PRECISION};

pub fn main() {
    let input = ConstantsInput::new(0.0, 1.0, 1.0).unwrap();
    for nu in [NuFunction::ceil(), NuFunction::one(), NuFunction::poly(2.0, 0.5).unwrap()] {
        let rep = constants_report(&input, &nu, DEFAULT_PRECISION).unwrap();
        println!(
            "ν = {nu}: N = {}, N0 = {}, floor = {:.4e} [{}]",
            rep.n.value,
            rep.n0.value,
            rep.displacement_floor.value,
            rep.n.provenance.label()
        );
    }
    let rep = constants_report(&input, &NuFunction::ceil(), DEFAULT_PRECISION).unwrap();
    println!(
        "matching radius {} [{}], relator length bound {}, absorption constant {:.4}",
        rep.matching_radius.value,
        rep.matching_radius.provenance.label(),
        rep.relator_length_bound.value,
        rep.absorption_constant.value
    );
    let (n0, n1, n2) = n0_n1_n2(&ConstantsInput::new(0.5, 0.3, 2.0).unwrap(), &NuFunction::one(), DEFAULT_PRECISION).unwrap();
    println!("δ = 0.5, H = 0.3, D = 2, ν = 1: N0 = {n0}, N1 = {n1}, N2 = {n2}");
    println!("{}", serde_json::to_string_pretty(&rep.qi_space_constants).unwrap());
}
