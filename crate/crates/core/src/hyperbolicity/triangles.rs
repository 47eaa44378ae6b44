use rand::{RngExt, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;
use rayon::prelude::*;
use serde::Serialize;

use super::{
    check_member, geodesic_vertices, gromov_product_exact, HalfInteger, HyperbolicityError, ScanMode, DEFAULT_EXACT_CAP,
};
use crate::cayley::BallTable;
use crate::group::{Element, MarkedGroup};

/// How matched arc-length positions are rounded when a tripod leg is a half-integer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Rounding {
    Floor,
}

/// Tripod comparison data for one geodesic triangle.
#[derive(Clone, Debug, Serialize)]
pub struct TripodReport {
    pub insize: u64,
    pub triple: [Element; 3],
    /// A pair of points with the same tripod image realizing `insize`.
    pub matched: (Element, Element),
    /// Legs `(α, β, γ)` at `x`, `y`, `z`.
    pub legs: [HalfInteger; 3],
    pub rounding: Rounding,
}

/// Slimness of one geodesic triangle.
#[derive(Clone, Debug, Serialize)]
pub struct SlimReport {
    pub insize: u64,
    pub triple: [Element; 3],
    /// The point farthest from the other two sides.
    pub point: Element,
}

struct Triangle {
    xy: Vec<Element>,
    xz: Vec<Element>,
    yz: Vec<Element>,
}

impl Triangle {
    fn new(group: &MarkedGroup, [x, y, z]: &[Element; 3]) -> Self {
        Triangle {
            xy: geodesic_vertices(group, x, y),
            xz: geodesic_vertices(group, x, z),
            yz: geodesic_vertices(group, y, z),
        }
    }
}

fn triple_in_ball(ball: &BallTable, triple: &[Element; 3]) -> Result<(), HyperbolicityError> {
    triple.iter().try_for_each(|g| check_member(ball, g))
}

/// Insize of the triangle on `triple` with the module's chosen geodesics.
///
/// Points on two sides are matched when they sit at the same integer
/// distance from the shared corner, up to that corner's floored tripod leg.
pub fn thin_triangle_insize(ball: &BallTable, triple: &[Element; 3]) -> Result<TripodReport, HyperbolicityError> {
    triple_in_ball(ball, triple)?;
    let group = ball.group();
    let [x, y, z] = triple;
    let (dxy, dxz, dyz) = (group.distance(x, y), group.distance(x, z), group.distance(y, z));
    let legs = [
        gromov_product_exact(dxy, dxz, dyz),
        gromov_product_exact(dxy, dyz, dxz),
        gromov_product_exact(dxz, dyz, dxy),
    ];
    let t = Triangle::new(group, triple);
    let (dxy, dxz, dyz) = (dxy as usize, dxz as usize, dyz as usize);

    let mut best = (0u64, x.clone(), x.clone());
    let mut consider = |v: &Element, w: &Element| {
        let d = group.distance(v, w);
        if d > best.0 {
            best = (d, v.clone(), w.clone());
        }
    };
    for s in 0..=legs[0].floor().max(0) as usize {
        consider(&t.xy[s], &t.xz[s]);
    }
    for s in 0..=legs[1].floor().max(0) as usize {
        consider(&t.xy[dxy - s], &t.yz[s]);
    }
    for s in 0..=legs[2].floor().max(0) as usize {
        consider(&t.xz[dxz - s], &t.yz[dyz - s]);
    }
    Ok(TripodReport {
        insize: best.0,
        triple: triple.clone(),
        matched: (best.1, best.2),
        legs,
        rounding: Rounding::Floor,
    })
}

/// Largest distance from a point of one chosen side to the union of the other two.
pub fn slim_insize(ball: &BallTable, triple: &[Element; 3]) -> Result<SlimReport, HyperbolicityError> {
    triple_in_ball(ball, triple)?;
    let group = ball.group();
    let t = Triangle::new(group, triple);
    let sides = [&t.xy, &t.xz, &t.yz];
    let mut best = (0u64, triple[0].clone());
    for (i, side) in sides.iter().enumerate() {
        for u in side.iter() {
            let d = sides
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .flat_map(|(_, other)| other.iter())
                .map(|v| group.distance(u, v))
                .min()
                .unwrap_or(0);
            if d > best.0 {
                best = (d, u.clone());
            }
        }
    }
    Ok(SlimReport { insize: best.0, triple: triple.clone(), point: best.1 })
}

/// Worst thin and slim triangles over vertex triples of a ball.
#[derive(Clone, Debug, Serialize)]
pub struct TriangleScanReport {
    pub thin: TripodReport,
    pub slim: SlimReport,
    pub mode: ScanMode,
    pub scanned: u64,
    pub lower_bound: bool,
}

pub fn triangle_scan(ball: &BallTable, mode: ScanMode) -> Result<TriangleScanReport, HyperbolicityError> {
    triangle_scan_with_cap(ball, mode, DEFAULT_EXACT_CAP)
}

/// Maximizes both insizes over all triples `i < j < k` (exact) or over
/// seeded uniform triples (sampled). Ties keep the lexicographically least
/// index triple.
pub fn triangle_scan_with_cap(
    ball: &BallTable,
    mode: ScanMode,
    exact_cap: usize,
) -> Result<TriangleScanReport, HyperbolicityError> {
    let n = ball.len();
    if n == 0 {
        return Err(HyperbolicityError::EmptyBall);
    }
    let triples: Vec<[usize; 3]> = match mode {
        ScanMode::Exact => {
            if n > exact_cap {
                return Err(HyperbolicityError::CapExceeded { vertices: n, cap: exact_cap });
            }
            let mut t = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    for k in j + 1..n {
                        t.push([i, j, k]);
                    }
                }
            }
            if t.is_empty() {
                t.push([0, 0, 0]);
            }
            t
        }
        ScanMode::Sampled { seed, count } => {
            let mut rng = Xoshiro256PlusPlus::seed_from_u64(seed);
            (0..count.max(1))
                .map(|_| {
                    let mut t = [0usize; 3];
                    for slot in &mut t {
                        *slot = rng.random_range(0..n);
                    }
                    t.sort_unstable();
                    t
                })
                .collect()
        }
    };
    let pick = |a: (u64, [usize; 3]), b: (u64, [usize; 3])| if b.0 > a.0 || (b.0 == a.0 && b.1 < a.1) { b } else { a };
    let scores: Vec<(u64, u64)> = triples
        .par_iter()
        .map(|t| {
            let triple = t.map(|i| ball.element(i).clone());
            let thin = thin_triangle_insize(ball, &triple).map(|r| r.insize)?;
            let slim = slim_insize(ball, &triple).map(|r| r.insize)?;
            Ok((thin, slim))
        })
        .collect::<Result<_, HyperbolicityError>>()?;
    let start = (0, triples[0]);
    let (mut thin_best, mut slim_best) = (start, start);
    for (t, &(thin, slim)) in triples.iter().zip(&scores) {
        thin_best = pick(thin_best, (thin, *t));
        slim_best = pick(slim_best, (slim, *t));
    }
    let at = |t: [usize; 3]| t.map(|i| ball.element(i).clone());
    Ok(TriangleScanReport {
        thin: thin_triangle_insize(ball, &at(thin_best.1))?,
        slim: slim_insize(ball, &at(slim_best.1))?,
        mode,
        scanned: triples.len() as u64,
        lower_bound: matches!(mode, ScanMode::Sampled { .. }),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cayley::{enumerate_ball, DEFAULT_MEM_CAP};

    fn ball(text: &str, r: u32) -> BallTable {
        enumerate_ball(&MarkedGroup::from_text(text).unwrap(), r, DEFAULT_MEM_CAP).unwrap()
    }

    fn v(x: i64, y: i64) -> Element {
        Element::Vector(vec![x, y])
    }

    /// All pairs of points with equal tripod image, from the continuous tripod map
    /// evaluated at every integer arc position.
    fn oracle_thin(b: &BallTable, triple: &[Element; 3]) -> u64 {
        let g = b.group();
        let [x, y, z] = triple;
        let paths = enumerate_ball(g, 2 * b.radius(), DEFAULT_MEM_CAP).unwrap();
        let sides = [
            paths.geodesic_path(x, y).unwrap(),
            paths.geodesic_path(x, z).unwrap(),
            paths.geodesic_path(y, z).unwrap(),
        ];
        let (dxy, dxz, dyz) = (g.distance(x, y) as f64, g.distance(x, z) as f64, g.distance(y, z) as f64);
        let alpha = (dxy + dxz - dyz) / 2.0;
        let beta = (dxy + dyz - dxz) / 2.0;
        // Tripod image as (leg, distance from the centre).
        let image = |side: usize, s: f64| -> (usize, f64) {
            let (first, second, leg_first) = match side {
                0 => (0, 1, alpha),
                1 => (0, 2, alpha),
                _ => (1, 2, beta),
            };
            if s <= leg_first {
                (first, leg_first - s)
            } else {
                (second, s - leg_first)
            }
        };
        let norm = |(leg, r): (usize, f64)| if r.abs() < 1e-9 { (usize::MAX, 0.0) } else { (leg, r) };
        let mut best = 0;
        for i in 0..3 {
            for j in i + 1..3 {
                for (s, p) in sides[i].iter().enumerate() {
                    for (u, q) in sides[j].iter().enumerate() {
                        let a = norm(image(i, s as f64));
                        let c = norm(image(j, u as f64));
                        if a.0 == c.0 && (a.1 - c.1).abs() < 1e-9 {
                            best = best.max(g.distance(p, q));
                        }
                    }
                }
            }
        }
        best
    }

    #[test]
    fn tree_triangles_are_exact_tripods() {
        let b = ball("free(2)", 3);
        let pts: Vec<Element> = b.elements().step_by(7).cloned().collect();
        for x in &pts {
            for y in &pts {
                for z in &pts {
                    let t = [x.clone(), y.clone(), z.clone()];
                    assert_eq!(thin_triangle_insize(&b, &t).unwrap().insize, 0);
                    assert_eq!(slim_insize(&b, &t).unwrap().insize, 0);
                }
            }
        }
    }

    #[test]
    fn z2_square_corner_triangle() {
        let b = ball("zpow(2)", 4);
        let t = [v(0, 0), v(4, 0), v(0, 4)];
        let thin = thin_triangle_insize(&b, &t).unwrap();
        assert_eq!(thin.insize, 8);
        assert_eq!(thin.insize, oracle_thin(&b, &t));
        assert_eq!(thin.legs, [HalfInteger::ZERO, HalfInteger::from_int(4), HalfInteger::from_int(4)]);
        let (p, q) = &thin.matched;
        assert_eq!(b.group().distance(p, q), thin.insize);
        let slim = slim_insize(&b, &t).unwrap();
        assert_eq!(slim.insize, 4);
        assert!(slim.insize <= thin.insize);
    }

    #[test]
    fn legs_sum_to_side_lengths_and_match_oracle() {
        let b = ball("zpow(2)", 2);
        let g = b.group();
        let pts: Vec<Element> = b.elements().cloned().collect();
        for x in &pts {
            for y in &pts {
                for z in &pts {
                    let t = [x.clone(), y.clone(), z.clone()];
                    let r = thin_triangle_insize(&b, &t).unwrap();
                    let [a, bt, c] = r.legs.map(|l| l.twice());
                    assert_eq!(a + bt, 2 * g.distance(x, y) as i64);
                    assert_eq!(a + c, 2 * g.distance(x, z) as i64);
                    assert_eq!(bt + c, 2 * g.distance(y, z) as i64);
                    assert_eq!(r.insize, oracle_thin(&b, &t));
                    let s = slim_insize(&b, &t).unwrap();
                    assert!(s.insize <= r.insize);
                }
            }
        }
    }

    #[test]
    fn degenerate_triples() {
        let b = ball("zpow(2)", 3);
        let t = [v(1, 1), v(1, 1), v(-2, 0)];
        assert_eq!(thin_triangle_insize(&b, &t).unwrap().insize, 0);
        let b1 = ball("zpow(1)", 5);
        let line = [Element::Vector(vec![-3]), Element::Vector(vec![1]), Element::Vector(vec![4])];
        assert_eq!(slim_insize(&b1, &line).unwrap().insize, 0);
        assert_eq!(thin_triangle_insize(&b1, &line).unwrap().insize, 0);
    }

    #[test]
    fn outside_the_ball_is_rejected() {
        let b = ball("zpow(2)", 2);
        let t = [v(0, 0), v(3, 0), v(0, 1)];
        assert!(matches!(thin_triangle_insize(&b, &t), Err(HyperbolicityError::OutOfRange(_))));
        assert!(matches!(slim_insize(&b, &t), Err(HyperbolicityError::OutOfRange(_))));
    }

    #[test]
    fn scan_takes_the_worst_triangle() {
        let t = ball("free(2)", 2);
        let rep = triangle_scan(&t, ScanMode::Exact).unwrap();
        assert_eq!((rep.thin.insize, rep.slim.insize), (0, 0));

        let b = ball("zpow(2)", 2);
        let rep = triangle_scan(&b, ScanMode::Exact).unwrap();
        let elems: Vec<Element> = b.elements().cloned().collect();
        let mut worst = 0;
        for i in 0..elems.len() {
            for j in i + 1..elems.len() {
                for k in j + 1..elems.len() {
                    worst = worst.max(oracle_thin(&b, &[elems[i].clone(), elems[j].clone(), elems[k].clone()]));
                }
            }
        }
        assert_eq!(rep.thin.insize, worst);
        assert_eq!(rep.scanned, 13 * 12 * 11 / 6);
        assert!(rep.slim.insize <= rep.thin.insize);

        let s1 = triangle_scan(&b, ScanMode::Sampled { seed: 7, count: 200 }).unwrap();
        let s2 = triangle_scan(&b, ScanMode::Sampled { seed: 7, count: 200 }).unwrap();
        assert!(s1.lower_bound && s1.thin.insize <= rep.thin.insize);
        assert_eq!(s1.thin.triple, s2.thin.triple);
        assert!(matches!(
            triangle_scan_with_cap(&ball("zpow(2)", 3), ScanMode::Exact, 10),
            Err(HyperbolicityError::CapExceeded { .. })
        ));
    }
}
