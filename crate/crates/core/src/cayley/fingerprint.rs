use serde::Serialize;

use super::{enumerate_ball, CayleyError};
use crate::group::MarkedGroup;

/// Label-free invariant of a marked group's Cayley graph near the identity.
///
/// Each component depends only on `(Γ, d_Σ, Σ)` up to relabeling of Σ, so
/// two fingerprints that differ prove the marked groups are not isometric.
/// Equal fingerprints prove nothing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Fingerprint {
    pub radius: u32,
    /// `|B(e, r)|` for `r = 0..=radius`.
    pub growth: Vec<u64>,
    /// Sorted distances over unordered pairs of distinct points of `Σ ∪ {e}`.
    pub generator_distances: Vec<u32>,
    /// Sorted degrees of the subgraph induced on `B(e, radius)`.
    pub degree_sequence: Vec<u32>,
}

pub fn marked_fingerprint(group: &MarkedGroup, radius: u32, mem_cap: usize) -> Result<Fingerprint, CayleyError> {
    if radius < 2 {
        return Err(CayleyError::OutOfRange("fingerprint radius must be at least 2".into()));
    }
    let ball = enumerate_ball(group, radius, mem_cap)?;

    let mut points = vec![group.identity()];
    points.extend(group.generators().iter().map(|g| g.element.clone()));
    let mut generator_distances = Vec::with_capacity(points.len() * (points.len() - 1) / 2);
    for (i, a) in points.iter().enumerate() {
        let a_inv = group.inverse(a);
        for b in &points[i + 1..] {
            // |a⁻¹b| <= 2 <= radius, so the ball answers it.
            generator_distances.push(ball.word_length(&group.multiply(&a_inv, b))?);
        }
    }
    generator_distances.sort_unstable();

    let mut degree_sequence: Vec<u32> = ball
        .elements()
        .map(|g| (0..group.num_generators()).filter(|&i| ball.contains(&group.step(g, i))).count() as u32)
        .collect();
    degree_sequence.sort_unstable();

    Ok(Fingerprint { radius, growth: ball.ball_sizes(), generator_distances, degree_sequence })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cayley::DEFAULT_MEM_CAP;

    fn fp(text: &str, r: u32) -> Fingerprint {
        marked_fingerprint(&MarkedGroup::from_text(text).unwrap(), r, DEFAULT_MEM_CAP).unwrap()
    }

    #[test]
    fn separates_free_product_markings() {
        let a = fp("fprod(z(1),z(2,3))", 4);
        let b = fp("fprod(z(1),z(3,4))", 4);
        let c = fp("fprod(z(1),z(1))", 4);
        assert_ne!(a, b);
        assert_ne!(a, c);
        assert_ne!(b, c);
    }

    #[test]
    fn invariant_under_relabeling() {
        assert_eq!(fp("z(1,2,3)", 3), fp("z(3,-1,2)", 3));
        assert_eq!(fp("free(2)", 3), fp("fprod(z(1),z(1))", 3));
        assert_eq!(fp("free(2)", 3), fp("fprod(free(1),free(1))", 3));
    }

    #[test]
    fn radius_guard() {
        let g = MarkedGroup::from_text("free(2)").unwrap();
        assert!(marked_fingerprint(&g, 1, DEFAULT_MEM_CAP).is_err());
    }
}
