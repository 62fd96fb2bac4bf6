use circarc::circle::{Arc, ArcFamily};
use circarc::classify::{
    circular_report, circular_three_quarter_property, circular_zero_property, interval_property,
    interval_property_by_cycles, interval_property_with, main_bounds, rho_property, verify_main_bounds, Flag,
    IntervalProperty, OneMode,
};
use circarc::generators::{cycle_tiling, extremal_main, rho2_proper, wheel7};
use circarc::hyperbolicity::{delta_exact, delta_oracle};
use circarc::intersection::{build, to_interval};
use circarc::{QuarterValue, Rational};
use proptest::prelude::*;

fn q(k: i64) -> QuarterValue {
    QuarterValue::quarters(k)
}

fn arc_strategy() -> impl Strategy<Value = Arc> {
    prop_oneof![
        1 => Just(Arc::Full),
        20 => (0i64..24, 1i64..12).prop_map(|(s, l)| Arc::from_turns(Rational::new(s, 24), Rational::new(s + l, 24)).unwrap()),
    ]
}

fn family_strategy(max: usize) -> impl Strategy<Value = ArcFamily> {
    prop::collection::vec(arc_strategy(), 1..=max).prop_map(|arcs| ArcFamily::with_prefix("a", arcs))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn interval_class_predicts_delta(f in family_strategy(8)) {
        let m = build(&f);
        let Ok(iv) = to_interval(&m) else { return Ok(()) };
        let class = interval_property(&iv);
        prop_assert_eq!(class.predicted_delta, delta_exact(&m.graph, 10_000).delta);
        if m.graph.n() + m.graph.m() <= 20 {
            prop_assert_eq!(class.predicted_delta, delta_oracle(&m.graph).unwrap());
        }
    }

    #[test]
    fn literal_cycle_quantifiers_agree(f in family_strategy(8)) {
        let Ok(iv) = to_interval(&build(&f)) else { return Ok(()) };
        for mode in [OneMode::IntervalVsCouple, OneMode::CoupleVsCouple, OneMode::Both] {
            prop_assert_eq!(interval_property_with(&iv, mode), interval_property_by_cycles(&iv, mode, 1_000_000).unwrap());
        }
    }

    #[test]
    fn circular_properties_characterize(f in family_strategy(8)) {
        let m = build(&f);
        let d = delta_exact(&m.graph, 10_000).delta;
        prop_assert_eq!(circular_zero_property(&m) == Flag::Holds, d == q(0));
        prop_assert_eq!(circular_three_quarter_property(&m) == Flag::Holds, d == q(3));
        prop_assert!(verify_main_bounds(&m, d).is_ok());
        let r = circular_report(&m);
        prop_assert!(r.lower <= r.upper);
        if r.rho_property == Flag::Holds {
            prop_assert_eq!(d, q(r.rho as i64));
        }
        prop_assert_eq!(r.rho_property == Flag::NotApplicable, r.rho < 3);
    }
}

/// Couple-versus-couple alone misses configurations that the
/// interval-versus-couple reading catches.
#[test]
fn one_property_modes_differ() {
    let mut seen_difference = false;
    for seed in 0..2000 {
        let f = circarc::generators::random_arcs(7, 12, Rational::new(1, 2), 0.0, seed).unwrap();
        let m = build(&f);
        let Ok(iv) = to_interval(&m) else { continue };
        let a = interval_property_with(&iv, OneMode::IntervalVsCouple);
        let b = interval_property_with(&iv, OneMode::CoupleVsCouple);
        assert_eq!(interval_property_with(&iv, OneMode::Both), a);
        if a != b {
            seen_difference = true;
            assert_eq!(a.predicted_delta, delta_exact(&m.graph, 10_000).delta);
        }
    }
    assert!(seen_difference);
}

#[test]
fn interval_examples() {
    let path: ArcFamily = "a 0 1/8\nb 1/8 1/4\nc 1/4 3/8".parse().unwrap();
    assert_eq!(interval_property(&to_interval(&build(&path)).unwrap()).property, IntervalProperty::P0);
    let tri: ArcFamily = "a 0 1/4\nb 1/8 3/8\nc 3/16 5/16".parse().unwrap();
    let class = interval_property(&to_interval(&build(&tri)).unwrap());
    assert_eq!(class.property, IntervalProperty::P3_4);
    assert_eq!(class.predicted_delta, delta_oracle(&build(&tri).graph).unwrap());
}

#[test]
fn a_three_halves_interval_family_exists() {
    let mut found = None;
    for seed in 0..5000 {
        let f = circarc::generators::random_arcs(8, 24, Rational::new(1, 3), 0.0, seed).unwrap();
        let m = build(&f);
        let Ok(iv) = to_interval(&m) else { continue };
        if m.graph.n() + m.graph.m() <= 30 && delta_oracle(&m.graph).unwrap() == q(6) {
            found = Some(iv);
            break;
        }
    }
    let iv = found.expect("random search finds delta 3/2");
    assert_eq!(interval_property(&iv).property, IntervalProperty::P3_2);
}

#[test]
fn circular_examples() {
    let star = build(&"f full\na 0 1/8\nb 1/4 3/8".parse().unwrap());
    assert_eq!(circular_zero_property(&star), Flag::Holds);
    let tri = build(&"f full\na 0 1/8\nb 1/16 3/16".parse().unwrap());
    assert_eq!(circular_zero_property(&tri), Flag::Fails);
    assert_eq!(circular_three_quarter_property(&tri), Flag::Holds);
    assert_eq!(circular_three_quarter_property(&build(&cycle_tiling(3))), Flag::Holds);
    assert_eq!(circular_three_quarter_property(&build(&cycle_tiling(4))), Flag::Fails);
    assert_eq!(rho_property(&build(&cycle_tiling(3))), Flag::Holds);
}

#[test]
fn duplicate_full_arcs_count_as_distinct_vertices() {
    // two full arcs and one short arc form a triangle
    let m = build(&"f full\ng full\na 0 1/8".parse().unwrap());
    assert_eq!(delta_exact(&m.graph, 100).delta, q(3));
    assert_eq!(circular_zero_property(&m), Flag::Fails);
    assert_eq!(circular_three_quarter_property(&m), Flag::Holds);
    let k2 = build(&"f full\ng full".parse().unwrap());
    assert_eq!(circular_zero_property(&k2), Flag::Holds);
}

#[test]
fn main_bound_examples() {
    let w = build(&wheel7());
    let d = delta_exact(&w.graph, 10_000).delta;
    let (lo, hi) = verify_main_bounds(&w, d).unwrap();
    assert!(lo <= d && d <= hi);
    let g6 = build(&extremal_main(6).unwrap());
    let d = delta_exact(&g6.graph, 10_000).delta;
    assert_eq!(verify_main_bounds(&g6, d).unwrap().1, d);
    let p = build(&rho2_proper());
    let d = delta_exact(&p.graph, 10_000).delta;
    assert_eq!(verify_main_bounds(&p, d).unwrap(), (q(0), d));
    assert!(verify_main_bounds(&p, q(6)).is_err());
    assert_eq!(main_bounds(3, true), (q(3), q(6)));
}
