use circarc::circle::{covers_circle, intersects, uncovered_point, Angle, Arc, ArcFamily};
use circarc::Rational;
use proptest::prelude::*;

const SAMPLE: i64 = 240;

fn arc_strategy() -> impl Strategy<Value = Arc> {
    prop_oneof![
        1 => Just(Arc::Full),
        9 => (0i64..24, 0i64..24).prop_map(|(s, l)| Arc::from_turns(Rational::new(s, 24), Rational::new(s + l, 24)).unwrap()),
    ]
}

fn family_strategy(max: usize) -> impl Strategy<Value = ArcFamily> {
    prop::collection::vec(arc_strategy(), 1..=max).prop_map(|arcs| ArcFamily::with_prefix("a", arcs))
}

/// Sample points at multiples of 1/240, fine enough for endpoints on 1/24.
fn samples() -> impl Iterator<Item = Angle> {
    (0..SAMPLE).map(|k| Angle::new(Rational::new(k, SAMPLE)))
}

proptest! {
    #[test]
    fn intersection_matches_sampling(a in arc_strategy(), b in arc_strategy()) {
        let sampled = samples().any(|t| a.contains(t) && b.contains(t));
        prop_assert_eq!(intersects(&a, &b), sampled);
        prop_assert_eq!(intersects(&a, &b), intersects(&b, &a));
    }

    #[test]
    fn containment_matches_sampling(a in arc_strategy(), b in arc_strategy()) {
        let sampled = samples().all(|t| !b.contains(t) || a.contains(t));
        prop_assert_eq!(a.contains_arc(&b), sampled);
    }

    #[test]
    fn uncovered_point_is_uncovered(f in family_strategy(8)) {
        let sampled_cover = samples().all(|t| f.arcs().iter().any(|a| a.contains(t)));
        prop_assert_eq!(covers_circle(&f), sampled_cover);
        if let Some(p) = uncovered_point(&f) {
            prop_assert!(f.arcs().iter().all(|a| !a.contains(p)));
        }
    }

    #[test]
    fn family_text_round_trip(f in family_strategy(10)) {
        let back: ArcFamily = f.to_string().parse().unwrap();
        prop_assert_eq!(back, f);
    }
}

#[test]
fn examples() {
    let r = |n, d| Rational::new(n, d);
    let a = Arc::from_turns(r(0, 1), r(1, 4)).unwrap();
    let b = Arc::from_turns(r(1, 4), r(1, 2)).unwrap();
    let c = Arc::from_turns(r(1, 2), r(3, 4)).unwrap();
    assert!(intersects(&a, &b));
    assert!(!intersects(&a, &c));
    assert!(intersects(&Arc::Full, &c));
    let wrap = Arc::from_turns(r(7, 8), r(9, 8)).unwrap();
    assert!(intersects(&wrap, &a));
    assert!(wrap.contains(Angle::zero()));
}

#[test]
fn parse_errors_carry_line_numbers() {
    let err = "a 0 1/2\nb 1/2\n".parse::<ArcFamily>().unwrap_err();
    assert!(err.to_string().contains('2'), "{err}");
    assert!("a 0 1/2\na 1/2 1\n".parse::<ArcFamily>().is_err());
    assert!("a 0 x\n".parse::<ArcFamily>().is_err());
}
