//! Hyperbolicity measurements on enumerated balls.
//!
//! All measurements use vertex points only. Distances are exact integers,
//! so defects are half-integers and exact-mode results contain no floats.

mod four_point;
mod projection;
mod triangles;

use std::fmt;

use rayon::prelude::*;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::cayley::BallTable;
use crate::group::{Element, MarkedGroup};

pub use four_point::{four_point_defect, four_point_defect_with_cap, DefectReport};
pub use projection::{projection_defect, projection_defect_with_cap, ProjectionReport};
pub use triangles::{
    slim_insize, thin_triangle_insize, triangle_scan, triangle_scan_with_cap, Rounding, SlimReport, TriangleScanReport,
    TripodReport,
};

/// Exact-mode vertex cap.
pub const DEFAULT_EXACT_CAP: usize = 150;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum HyperbolicityError {
    #[error("distances ({0}, {1}, {2}) violate the triangle inequality")]
    TriangleViolation(f64, f64, f64),
    #[error("{vertices} vertices exceed the exact-mode cap of {cap}; use sampled mode")]
    CapExceeded { vertices: usize, cap: usize },
    #[error("out of range: {0}")]
    OutOfRange(String),
    #[error("empty ball")]
    EmptyBall,
}

/// A number in `½ℤ`, stored as twice its value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct HalfInteger(i64);

impl HalfInteger {
    pub const ZERO: HalfInteger = HalfInteger(0);

    pub fn from_twice(twice: i64) -> Self {
        HalfInteger(twice)
    }

    pub fn from_int(n: i64) -> Self {
        HalfInteger(2 * n)
    }

    pub fn twice(self) -> i64 {
        self.0
    }

    /// Largest integer not above the value.
    pub fn floor(self) -> i64 {
        self.0.div_euclid(2)
    }

    pub fn to_f64(self) -> f64 {
        self.0 as f64 / 2.0
    }
}

impl fmt::Display for HalfInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/2", self.0)
    }
}

impl Serialize for HalfInteger {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// How a scan covers its tuple space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ScanMode {
    Exact,
    /// Uniform tuples from a seeded xoshiro256++ stream; results are lower bounds.
    Sampled { seed: u64, count: u64 },
}

/// Gromov product `(y·z)_x = (d(x,y) + d(x,z) - d(y,z)) / 2`, the tripod leg at `x`.
pub fn gromov_product(d_xy: f64, d_xz: f64, d_yz: f64) -> Result<f64, HyperbolicityError> {
    let tol = 1e-12 * (1.0 + d_xy.abs() + d_xz.abs() + d_yz.abs());
    let valid = [d_xy, d_xz, d_yz].iter().all(|d| d.is_finite() && *d >= 0.0)
        && d_yz <= d_xy + d_xz + tol
        && d_xy <= d_xz + d_yz + tol
        && d_xz <= d_xy + d_yz + tol;
    if !valid {
        return Err(HyperbolicityError::TriangleViolation(d_xy, d_xz, d_yz));
    }
    Ok(((d_xy + d_xz - d_yz) / 2.0).max(0.0))
}

/// Exact Gromov product on integer distances.
pub fn gromov_product_exact(d_xy: u64, d_xz: u64, d_yz: u64) -> HalfInteger {
    HalfInteger::from_twice(d_xy as i64 + d_xz as i64 - d_yz as i64)
}

/// Pairwise word-metric distances between the vertices of a ball.
#[derive(Clone, Debug)]
pub struct DistanceMatrix {
    n: usize,
    data: Vec<u32>,
}

impl DistanceMatrix {
    pub fn from_ball(ball: &BallTable) -> Self {
        let group = ball.group();
        let elements: Vec<&Element> = ball.elements().collect();
        let n = elements.len();
        let rows: Vec<Vec<u32>> = elements
            .par_iter()
            .map(|g| {
                let g_inv = group.inverse(g);
                elements.iter().map(|h| group.word_length(&group.multiply(&g_inv, h)) as u32).collect()
            })
            .collect();
        DistanceMatrix { n, data: rows.concat() }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.n + j]
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.n..(i + 1) * self.n]
    }
}

/// Vertices of the lexicographically least geodesic from `from` to `to`.
pub(crate) fn geodesic_vertices(group: &MarkedGroup, from: &Element, to: &Element) -> Vec<Element> {
    let word = group.geodesic_word(&group.multiply(&group.inverse(from), to));
    let mut path = Vec::with_capacity(word.len() + 1);
    let mut cur = from.clone();
    path.push(cur.clone());
    for gen in word {
        cur = group.step(&cur, gen);
        path.push(cur.clone());
    }
    path
}

fn check_member(ball: &BallTable, g: &Element) -> Result<(), HyperbolicityError> {
    if ball.contains(g) {
        Ok(())
    } else {
        Err(HyperbolicityError::OutOfRange(format!("{g} is not in B(e,{})", ball.radius())))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gromov_product_examples() {
        assert_eq!(gromov_product(3.0, 4.0, 5.0).unwrap(), 1.0);
        assert_eq!(gromov_product(7.0, 7.0, 0.0).unwrap(), 7.0);
        assert!(matches!(gromov_product(1.0, 1.0, 3.0), Err(HyperbolicityError::TriangleViolation(..))));
        assert!(gromov_product(-1.0, 1.0, 1.0).is_err());
    }

    #[test]
    fn gromov_product_at_tree_branch_point() {
        let f2 = MarkedGroup::from_text("free(2)").unwrap();
        let x = f2.identity();
        let y = Element::Word(vec![1, 2]);
        let z = Element::Word(vec![1, -2]);
        let (dxy, dxz, dyz) = (f2.distance(&x, &y), f2.distance(&x, &z), f2.distance(&y, &z));
        assert_eq!((dxy, dxz, dyz), (2, 2, 2));
        assert_eq!(gromov_product(dxy as f64, dxz as f64, dyz as f64).unwrap(), 1.0);
        assert_eq!(gromov_product_exact(dxy, dxz, dyz), HalfInteger::from_int(1));
    }

    #[test]
    fn half_integer_rendering() {
        assert_eq!(HalfInteger::from_twice(7).to_string(), "7/2");
        assert_eq!(HalfInteger::from_twice(7).floor(), 3);
        assert_eq!(HalfInteger::from_twice(-1).floor(), -1);
        assert_eq!(serde_json::to_string(&HalfInteger::from_int(2)).unwrap(), "\"4/2\"");
    }
}
