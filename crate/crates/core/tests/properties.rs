//! Randomised invariants, each checked against an independent oracle or an
//! algebraic identity.

mod common;

use colourful::census::{enumerate_containing, find_covering_octahedron};
use colourful::cli::{parse_config, serialize_config};
use colourful::conditions::{
    check_barany, check_half_space_condition, check_line_condition, check_pairwise,
    fixed_point_iterates, ColourMap, ColourSet,
};
use colourful::gen::{gen_random_ball, gen_simplex_cluster};
use colourful::geometry::{
    is_general_position, max_independent_colourful, orientation, rational, side_of, Configuration,
    Point, PointId, Scalar, Sign, Transversal,
};
use colourful::linprog::{point_in_hull, ray_hull_sup, RayOutcome};
use colourful::pivot::{build_octahedron_complex, ray_crossing_parity};
use colourful::planar::build_digraph;
use colourful::solver::{find_colourful_simplex, SolveResult};
use colourful::Error;
use common::*;
use num::Signed;
use proptest::prelude::*;

const CENSUS_BOUND: u128 = 1 << 16;

fn int_point(d: usize) -> impl Strategy<Value = Point> {
    prop::collection::vec(-12i64..=12, d).prop_map(|c| Point::from_integers(&c))
}

fn points(d: usize, n: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Vec<Point>> {
    prop::collection::vec(int_point(d), n)
}

fn scaled(config: &Configuration, factor: &Scalar) -> Configuration {
    let colours = config
        .colours()
        .iter()
        .map(|pts| pts.iter().map(|p| p.scale(factor)).collect())
        .collect();
    Configuration::new(config.dimension(), colours).unwrap()
}

fn sup(outcome: &RayOutcome) -> Option<Scalar> {
    match outcome {
        RayOutcome::Empty => None,
        RayOutcome::Max { t, .. } => Some(t.clone()),
    }
}

/// Strictly one side of the line through `x` and the origin for every point.
fn line_misses(points: &[Point], x: &Point) -> bool {
    let origin = Point::origin(2);
    let signs: Vec<Sign> = points
        .iter()
        .map(|p| orientation(&[x.clone(), origin.clone(), p.clone()]).unwrap())
        .collect();
    signs.iter().all(|&s| s == Sign::Positive) || signs.iter().all(|&s| s == Sign::Negative)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn orientation_alternates(pts in points(3, 4..=4), i in 0usize..4, j in 0usize..4) {
        prop_assume!(i != j);
        let mut swapped = pts.clone();
        swapped.swap(i, j);
        prop_assert_eq!(orientation(&swapped).unwrap(), orientation(&pts).unwrap().flip());
    }

    #[test]
    fn side_zero_iff_on_hyperplane(t in points(3, 3..=3), q in int_point(3)) {
        let members: Vec<(usize, Point)> = t.iter().cloned().enumerate().collect();
        let tr = Transversal::new(3, members).unwrap();
        let mut with_q = t.clone();
        with_q.push(q.clone());
        let mut with_origin = t.clone();
        with_origin.push(Point::origin(3));
        prop_assume!(orientation(&with_origin).unwrap() != Sign::Zero);
        let s = side_of(&tr, &q).unwrap();
        prop_assert_eq!(s == Sign::Zero, orientation(&with_q).unwrap() == Sign::Zero);
        prop_assert_eq!(Some(s), side_oracle(&t, &q));
    }

    #[test]
    fn hull_membership_matches_oracle(pts in points(2, 1..=5), q in int_point(2)) {
        let cert = point_in_hull(&pts, &q).unwrap();
        prop_assert_eq!(cert.is_some(), in_hull_oracle(&pts, &q));
        if let Some(c) = cert {
            prop_assert!(coefficients_reproduce(&pts, &c.coefficients, &q));
        }
    }

    #[test]
    fn hull_membership_matches_oracle_3d(pts in points(3, 1..=5), q in int_point(3)) {
        let cert = point_in_hull(&pts, &q).unwrap();
        prop_assert_eq!(cert.is_some(), in_hull_oracle(&pts, &q));
    }

    #[test]
    fn ray_sup_certificate_and_monotone(pts in points(2, 1..=4), extra in int_point(2), x in int_point(2)) {
        prop_assume!(!x.is_origin());
        let base = ray_hull_sup(&pts, &x).unwrap();
        if let RayOutcome::Max { t, certificate } = &base {
            prop_assert!(!t.is_negative());
            let target = x.scale(&(Scalar::from_integer(1.into()) - t));
            prop_assert!(coefficients_reproduce(&pts, &certificate.coefficients, &target));
        }
        if in_hull_oracle(&pts, &Point::origin(2)) {
            prop_assert!(matches!(sup(&base), Some(t) if t >= rational(1, 1)));
        }
        let mut more = pts.clone();
        more.push(extra);
        let grown = ray_hull_sup(&more, &x).unwrap();
        match (sup(&base), sup(&grown)) {
            (Some(a), Some(b)) => prop_assert!(b >= a),
            (Some(_), None) => prop_assert!(false, "adding a point emptied the ray"),
            _ => {}
        }
    }

    #[test]
    fn ray_sup_is_one_exactly_at_origin(pts in points(2, 1..=4), x in int_point(2)) {
        prop_assume!(!x.is_origin());
        // Put x into the set so t = 0 is feasible; t reaches 1 iff the origin
        // lies in the hull of the segment-closed set.
        let mut with_x = pts.clone();
        with_x.push(x.clone());
        let t = sup(&ray_hull_sup(&with_x, &x).unwrap()).unwrap();
        prop_assert_eq!(t >= rational(1, 1), in_hull_oracle(&with_x, &Point::origin(2)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn general_position_gives_full_independent_set(seed in any::<u64>()) {
        let c = family(seed);
        prop_assert!(is_general_position(&c).holds());
        let (k, ids) = max_independent_colourful(&c);
        prop_assert_eq!(k, c.dimension());
        let mut pts = c.points_of(&ids);
        pts.push(Point::origin(c.dimension()));
        prop_assert!(orientation(&pts).unwrap() != Sign::Zero);
    }

    #[test]
    fn verdicts_invariant_under_positive_scaling(seed in any::<u64>(), num in 1i64..50, den in 1i64..50) {
        let c = family(seed);
        let s = scaled(&c, &rational(num, den));
        prop_assert_eq!(check_barany(&c).unwrap().holds(), check_barany(&s).unwrap().holds());
        prop_assert_eq!(check_pairwise(&c).unwrap().holds(), check_pairwise(&s).unwrap().holds());
        let (a, b) = (check_half_space_condition(&c), check_half_space_condition(&s));
        match (a, b) {
            (Ok(a), Ok(b)) => prop_assert_eq!(a.holds(), b.holds()),
            (Err(Error::DegenerateInput(_)), Err(Error::DegenerateInput(_))) => {}
            (a, b) => prop_assert!(false, "{:?} vs {:?}", a, b),
        }
        let counts = (
            enumerate_containing(&c, CENSUS_BOUND).unwrap().len(),
            enumerate_containing(&s, CENSUS_BOUND).unwrap().len(),
        );
        prop_assert_eq!(counts.0, counts.1);
    }

    #[test]
    fn counterexamples_reverify(seed in any::<u64>()) {
        let c = family(seed);
        let d = c.dimension();
        let origin = Point::origin(d);
        if let Some(&k) = check_barany(&c).unwrap().counterexample() {
            prop_assert!(!in_hull_oracle(c.colour(k), &origin));
        }
        if let Some(&(i, j)) = check_pairwise(&c).unwrap().counterexample() {
            prop_assert!(!in_hull_oracle(&c.union_of(i, j), &origin));
        }
        if let Ok(v) = check_half_space_condition(&c) {
            if let Some(cx) = v.counterexample() {
                prop_assert!(refutation_oracle(&c, &cx.transversal, cx.missing, cx.colour));
            }
        }
        if d == 2 {
            if let Some(cx) = check_line_condition(&c).unwrap().counterexample() {
                prop_assert!(line_misses(&c.union_of(cx.pair.0, cx.pair.1), c.point(cx.point)));
            }
        }
    }

    #[test]
    fn solver_results_reverify(seed in any::<u64>()) {
        let c = family(seed);
        let census = enumerate_containing(&c, CENSUS_BOUND).unwrap();
        match find_colourful_simplex(&c, seed).unwrap() {
            SolveResult::Simplex(s) => {
                prop_assert!(s.verify(&c));
                prop_assert!(census.iter().any(|t| t.members == s.members));
            }
            SolveResult::Refutation { transversal, missing, colour } => {
                prop_assert!(refutation_oracle(&c, &transversal, missing, colour));
            }
            SolveResult::Degenerate(r) => prop_assert!(false, "degenerate on general input: {}", r.reason),
        }
    }

    #[test]
    fn colour_map_is_monotone_and_iterates_shrink(seed in any::<u64>(), mask in any::<u8>(), extra in any::<u8>()) {
        let c = family(seed);
        let n = c.num_colours();
        let small: ColourSet = (0..n).filter(|k| mask >> k & 1 == 1).collect();
        let big: ColourSet = (0..n).filter(|k| (mask | extra) >> k & 1 == 1).collect();
        let mut map = ColourMap::new(&c);
        let (fs, fb) = (map.apply(&small).unwrap(), map.apply(&big).unwrap());
        prop_assert!(fs.0.is_subset(&fb.0));
        let it = fixed_point_iterates(&c, &big).unwrap();
        for w in it.windows(2) {
            prop_assert!(w[1].0.is_subset(&w[0].0) && w[1] != w[0]);
        }
        let last = it.last().unwrap();
        prop_assert_eq!(&map.apply(last).unwrap().intersect(last), last);
    }

    #[test]
    fn octahedron_ridges_pair_up_and_parity_is_direction_free(seed in any::<u64>(), missing in 0usize..3) {
        let d = 2 + (seed % 2) as usize;
        let missing = missing.min(d);
        let c = gen_random_ball(d, &vec![2; d + 1], &Point::origin(d), &rational(2, 1), seed).unwrap();
        let pick = |index: usize| {
            let members = (0..=d)
                .filter(|&k| k != missing)
                .map(|k| (k, c.point(PointId::new(k, index)).clone()))
                .collect();
            Transversal::new(missing, members).unwrap()
        };
        let m = build_octahedron_complex(&pick(0), &pick(1)).unwrap();
        prop_assert_eq!(m.cells.len(), 1 << d);
        prop_assert!(m.ridge_counts().values().all(|&k| k == 2));
        let mut parities = Vec::new();
        for dir in directions(d, seed, 24) {
            match ray_crossing_parity(&m, &dir) {
                Ok(x) => {
                    let oracle = m.cells.iter().filter(|cell| in_open_cone(&cell.points(), &dir) == Some(true)).count();
                    prop_assert_eq!(x.count, oracle);
                    parities.push(x.odd);
                }
                Err(Error::NonGenericDirection) => {}
                Err(e) => prop_assert!(false, "{}", e),
            }
        }
        prop_assert!(parities.len() >= 20);
        prop_assert!(parities.iter().all(|&p| p == parities[0]));
    }

    #[test]
    fn covering_octahedron_forces_missing_colour_count(seed in any::<u64>()) {
        let c = family(seed);
        if let Some((t, _)) = find_covering_octahedron(&c, CENSUS_BOUND).unwrap() {
            let count = enumerate_containing(&c, CENSUS_BOUND).unwrap().len();
            prop_assert!(count >= c.colour(t.missing_colour()).len());
        }
    }

    #[test]
    fn arcs_follow_orientation(seed in any::<u64>()) {
        let c = planar_family(seed);
        let g = build_digraph(&c).unwrap();
        let origin = Point::origin(2);
        for a in 0..g.len() {
            for b in 0..g.len() {
                let expected = g.colour(a) != g.colour(b)
                    && orientation(&[g.point(a).clone(), g.point(b).clone(), origin.clone()]).unwrap() == Sign::Negative;
                prop_assert_eq!(g.has_arc(a, b), expected);
            }
        }
    }

    #[test]
    fn json_round_trips(seed in any::<u64>()) {
        let c = family(seed);
        prop_assert_eq!(parse_config(&serialize_config(&c)).unwrap(), c);
    }

    #[test]
    fn generators_are_deterministic(seed in any::<u64>(), d in 1usize..=3, n in 1usize..=3) {
        let r = rational(1, 5);
        prop_assert_eq!(gen_simplex_cluster(d, n, &r, seed).unwrap(), gen_simplex_cluster(d, n, &r, seed).unwrap());
        let sizes = vec![n; d + 1];
        let o = Point::origin(d);
        prop_assert_eq!(
            gen_random_ball(d, &sizes, &o, &r, seed).unwrap(),
            gen_random_ball(d, &sizes, &o, &r, seed).unwrap()
        );
    }
}
