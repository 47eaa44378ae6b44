use hypgroup::cayley::{closed_form_growth, enumerate_ball, has_closed_form, DEFAULT_MEM_CAP};
use hypgroup::constants::{BigValue, NuFunction, DEFAULT_PRECISION};
use hypgroup::displacement::{asymptotic_displacement, cyclically_reduced_length};
use hypgroup::group::{Element, MarkedGroup};
use hypgroup::hyperbolicity::{four_point_defect, gromov_product_exact, thin_triangle_insize, ScanMode};
use hypgroup::presentations::{free_ball_count, free_ball_enumerate, shortlex_cmp};
use dashu::integer::UBig;
use proptest::prelude::*;

const SPECS: [&str; 14] = [
    "free(1)",
    "free(2)",
    "free(3)",
    "zpow(1)",
    "zpow(3)",
    "z(2,3)",
    "z(1,2,3)",
    "cyclic(2)",
    "cyclic(7)",
    "prod(free(2),cyclic(3))",
    "prod(zpow(1),cyclic(2))",
    "fprod(cyclic(2),cyclic(2))",
    "fprod(z(1),z(2,3))",
    "fprod(free(1),cyclic(3))",
];

fn group_and_words(n: usize) -> impl Strategy<Value = (MarkedGroup, Vec<Element>)> {
    (0..SPECS.len()).prop_flat_map(move |i| {
        let g = MarkedGroup::from_text(SPECS[i]).unwrap();
        let k = g.num_generators();
        proptest::collection::vec(proptest::collection::vec(0..k, 0..10), n).prop_map(move |words| {
            let elems = words.iter().map(|w| g.evaluate(w)).collect();
            (g.clone(), elems)
        })
    })
}

fn free_word(k: usize, max_len: usize) -> impl Strategy<Value = (MarkedGroup, Element)> {
    let g = MarkedGroup::from_text(&format!("free({k})")).unwrap();
    proptest::collection::vec(0..2 * k, 1..max_len).prop_map(move |w| (g.clone(), g.evaluate(&w)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn group_axioms((g, xs) in group_and_words(3)) {
        let (a, b, c) = (&xs[0], &xs[1], &xs[2]);
        let e = g.identity();
        prop_assert_eq!(g.multiply(&g.multiply(a, b), c), g.multiply(a, &g.multiply(b, c)));
        prop_assert_eq!(&g.multiply(a, &e), a);
        prop_assert_eq!(&g.multiply(&e, a), a);
        prop_assert!(g.is_identity(&g.multiply(a, &g.inverse(a))));
        prop_assert_eq!(&g.inverse(&g.inverse(a)), a);
    }

    #[test]
    fn word_metric_axioms((g, xs) in group_and_words(3)) {
        let (x, y, z) = (&xs[0], &xs[1], &xs[2]);
        prop_assert_eq!(g.distance(x, x), 0);
        prop_assert_eq!(g.distance(x, y), g.distance(y, x));
        prop_assert!(g.distance(x, z) <= g.distance(x, y) + g.distance(y, z));
        prop_assert_eq!(g.distance(x, y) == 0, x == y);
        // Left multiplication is an isometry.
        prop_assert_eq!(g.distance(&g.multiply(z, x), &g.multiply(z, y)), g.distance(x, y));
    }

    #[test]
    fn geodesic_words_realize_length((g, xs) in group_and_words(1)) {
        let w = g.geodesic_word(&xs[0]);
        prop_assert_eq!(w.len() as u64, g.word_length(&xs[0]));
        prop_assert_eq!(&g.evaluate(&w), &xs[0]);
    }

    #[test]
    fn parse_word_inverts_labels((g, xs) in group_and_words(1)) {
        let labels: Vec<&str> = g.geodesic_word(&xs[0]).iter().map(|&i| g.generators()[i].label.as_str()).collect();
        prop_assert_eq!(&g.parse_word(&labels.join(" ")).unwrap(), &xs[0]);
        prop_assert_eq!(&g.parse_word(&labels.join(",")).unwrap(), &xs[0]);
    }

    #[test]
    fn gromov_products_are_bounded((g, xs) in group_and_words(3)) {
        let (x, y, z) = (&xs[0], &xs[1], &xs[2]);
        let (dxy, dxz, dyz) = (g.distance(x, y), g.distance(x, z), g.distance(y, z));
        let p = gromov_product_exact(dxy, dxz, dyz);
        prop_assert!(p.twice() >= 0);
        prop_assert!(p.to_f64() <= dxy.min(dxz) as f64);
    }

    #[test]
    fn power_lengths_are_subadditive((g, xs) in group_and_words(1)) {
        let rep = asymptotic_displacement(&g, &xs[0], 8).unwrap();
        prop_assert!(rep.subadditive);
        for i in 0..8 {
            for j in 0..8 - i - 1 {
                prop_assert!(rep.powers[i + j + 1] <= rep.powers[i] + rep.powers[j]);
            }
        }
        prop_assert!(rep.ell_ratio <= rep.powers[0] as f64);
    }

    #[test]
    fn cyclic_length_is_homogeneous((g, w) in free_word(2, 8), k in 1u64..=6) {
        let crl = cyclically_reduced_length(&g, &w).unwrap();
        let Element::Word(letters) = &w else { unreachable!() };
        let cyclically_reduced = letters.len() < 2 || letters[0] != -letters[letters.len() - 1];
        if cyclically_reduced {
            prop_assert_eq!(crl, letters.len() as u64);
            prop_assert_eq!(cyclically_reduced_length(&g, &g.power(&w, k)).unwrap(), k * crl);
        }
    }

    #[test]
    fn cyclic_length_is_conjugation_invariant((g, w) in free_word(3, 8), (_, h) in free_word(3, 6)) {
        let conj = g.multiply(&g.multiply(&h, &w), &g.inverse(&h));
        prop_assert_eq!(cyclically_reduced_length(&g, &conj).unwrap(), cyclically_reduced_length(&g, &w).unwrap());
        prop_assert!(cyclically_reduced_length(&g, &w).unwrap() <= g.word_length(&w));
    }

    #[test]
    fn trees_have_zero_defect(k in 1usize..=3, seed in any::<u64>()) {
        let g = MarkedGroup::from_text(&format!("free({k})")).unwrap();
        let ball = enumerate_ball(&g, 3, DEFAULT_MEM_CAP).unwrap();
        let rep = four_point_defect(&ball, ScanMode::Sampled { seed, count: 2000 }).unwrap();
        prop_assert_eq!(rep.defect.twice(), 0);
    }

    #[test]
    fn tree_triangles_are_thin(k in 1usize..=2, words in proptest::collection::vec(proptest::collection::vec(0usize..4, 0..4), 3)) {
        let g = MarkedGroup::from_text(&format!("free({k})")).unwrap();
        let ball = enumerate_ball(&g, 3, DEFAULT_MEM_CAP).unwrap();
        let letters = |w: &Vec<usize>| w.iter().map(|&l| l % (2 * k)).collect::<Vec<_>>();
        let triple = [g.evaluate(&letters(&words[0])), g.evaluate(&letters(&words[1])), g.evaluate(&letters(&words[2]))];
        prop_assert_eq!(thin_triangle_insize(&ball, &triple).unwrap().insize, 0);
    }

    #[test]
    fn ball_enumeration_invariants(i in 0..SPECS.len(), r in 0u32..=4) {
        let g = MarkedGroup::from_text(SPECS[i]).unwrap();
        let ball = enumerate_ball(&g, r, DEFAULT_MEM_CAP).unwrap();
        let spheres = ball.sphere_sizes();
        prop_assert_eq!(spheres.iter().sum::<u64>() as usize, ball.len());
        prop_assert_eq!(ball.element(0), &g.identity());
        for x in ball.elements() {
            prop_assert_eq!(u64::from(ball.word_length(x).unwrap()), g.word_length(x));
        }
        // Balls are submultiplicative: |B(m+n)| ≤ |B(m)| |B(n)|.
        let balls = ball.ball_sizes();
        for m in 0..=r as usize {
            for n in 0..=r as usize - m {
                prop_assert!(balls[m + n] <= balls[m] * balls[n]);
            }
        }
        if has_closed_form(&g) {
            let closed = closed_form_growth(&g, r).unwrap();
            let enumerated: Vec<UBig> = balls.iter().map(|&b| UBig::from(b)).collect();
            prop_assert_eq!(closed.counts, enumerated);
        }
    }

    #[test]
    fn free_ball_words_are_reduced_and_ordered(k in 1u32..=3, p in 0u32..=5) {
        let words = free_ball_enumerate(k, p, 1 << 16).unwrap();
        prop_assert_eq!(UBig::from(words.len()), free_ball_count(k, p).unwrap());
        prop_assert!(words.iter().all(|w| w.is_reduced()));
        prop_assert!(words.windows(2).all(|w| shortlex_cmp(&w[0], &w[1], k).is_lt()));
    }

    #[test]
    fn log2_is_additive(a in 1u64.., b in 1u64..) {
        let la = BigValue::from_u64(a).log2(DEFAULT_PRECISION).unwrap();
        let lb = BigValue::from_u64(b).log2(DEFAULT_PRECISION).unwrap();
        let lab = BigValue::Exact(UBig::from(a) * UBig::from(b)).log2(DEFAULT_PRECISION).unwrap();
        let err = (lab.clone() - la - lb).to_f64().value().abs();
        prop_assert!(err <= 1e-30 * lab.to_f64().value().max(1.0), "error {err}");
    }

    #[test]
    fn nu_is_nondecreasing(x in 0.0f64..1e6, y in 0.0f64..1e6, c in 0.1f64..10.0, e in 0.1f64..3.0) {
        let (lo, hi) = if x <= y { (x, y) } else { (y, x) };
        for nu in [NuFunction::ceil(), NuFunction::poly(c, e).unwrap()] {
            let (a, b) = (nu.eval_f64(lo, DEFAULT_PRECISION), nu.eval_f64(hi, DEFAULT_PRECISION));
            prop_assert!(a.log2_f64() <= b.log2_f64(), "{nu}: ν({lo}) = {a} > ν({hi}) = {b}");
        }
    }
}
