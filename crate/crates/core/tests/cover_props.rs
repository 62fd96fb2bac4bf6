use circarc::circle::{Arc, ArcFamily};
use circarc::cover::{minimal_covers, rho, rho_oracle};
use circarc::generators::{cycle_tiling, rho2_delta2};
use circarc::intersection::build;
use circarc::Rational;
use proptest::prelude::*;

fn arc_strategy() -> impl Strategy<Value = Arc> {
    prop_oneof![
        1 => Just(Arc::Full),
        12 => (0i64..16, 1i64..12).prop_map(|(s, l)| Arc::from_turns(Rational::new(s, 16), Rational::new(s + l, 16)).unwrap()),
    ]
}

fn family_strategy(max: usize) -> impl Strategy<Value = ArcFamily> {
    prop::collection::vec(arc_strategy(), 1..=max).prop_map(|arcs| ArcFamily::with_prefix("a", arcs))
}

/// A tiling by arcs between random cut points, plus a few short extra arcs.
fn covering_strategy() -> impl Strategy<Value = ArcFamily> {
    (
        prop::collection::btree_set(0i64..24, 3..8),
        prop::collection::vec((0i64..24, 1i64..5), 0..5),
    )
        .prop_map(|(cuts, extra)| {
            let cuts: Vec<i64> = cuts.into_iter().collect();
            let mut arcs: Vec<Arc> = (0..cuts.len())
                .map(|i| {
                    let (a, b) = (cuts[i], cuts[(i + 1) % cuts.len()]);
                    let b = if b <= a { b + 24 } else { b };
                    Arc::from_turns(Rational::new(a, 24), Rational::new(b, 24)).unwrap()
                })
                .collect();
            arcs.extend(extra.into_iter().map(|(s, l)| Arc::from_turns(Rational::new(s, 24), Rational::new(s + l, 24)).unwrap()));
            ArcFamily::with_prefix("a", arcs)
        })
}

/// Every covering subfamily of minimum size, by brute force.
fn brute_minimal(f: &ArcFamily) -> Vec<Vec<usize>> {
    let n = f.len();
    let mut best = usize::MAX;
    let mut out = Vec::new();
    for mask in 1u32..(1 << n) {
        let idx: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        if idx.len() > best || !f.subfamily(&idx).covers_circle() {
            continue;
        }
        if idx.len() < best {
            best = idx.len();
            out.clear();
        }
        out.push(idx);
    }
    out.sort();
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn greedy_equals_oracle(f in family_strategy(12)) {
        let r = rho(&f);
        prop_assert_eq!(r.rho, rho_oracle(&f).unwrap());
        prop_assert_eq!(r.witness.len(), r.rho);
        if r.rho > 0 {
            prop_assert!(f.subfamily(&r.witness).covers_circle());
        }
    }

    #[test]
    fn adding_arcs_never_increases_rho(f in family_strategy(8), extra in arc_strategy()) {
        let before = rho(&f).rho;
        let mut g = f.clone();
        g.push("extra", extra).unwrap();
        let after = rho(&g).rho;
        prop_assert!(before == 0 || (after >= 1 && after <= before));
    }

    #[test]
    fn all_minimal_covers_are_found(f in family_strategy(9)) {
        let m = minimal_covers(&f, 100_000);
        prop_assert!(!m.saturated);
        if m.rho == 0 {
            prop_assert!(m.covers.is_empty());
        } else {
            prop_assert_eq!(m.covers, brute_minimal(&f));
        }
    }

    #[test]
    fn large_witnesses_induce_isometric_cycles(f in covering_strategy()) {
        let r = rho(&f);
        prop_assert!(r.rho >= 1);
        let g = build(&f).graph;
        let k = r.witness.len();
        for a in 0..k {
            for b in 0..k {
                let along = (a as i64 - b as i64).unsigned_abs() as u32;
                let cyc = along.min(k as u32 - along);
                prop_assert_eq!(g.dist(r.witness[a], r.witness[b]), Some(cyc));
            }
        }
    }
}

#[test]
fn examples() {
    let full: ArcFamily = "f full\na 0 1/3".parse().unwrap();
    assert_eq!(rho(&full).rho, 1);
    assert_eq!(rho(&full).labels, vec!["f"]);
    assert_eq!(rho(&cycle_tiling(6)).rho, 6);
    assert_eq!(rho(&rho2_delta2()).rho, 2);
    let gap: ArcFamily = "a 0 1/4\nb 1/2 3/4".parse().unwrap();
    assert_eq!(rho(&gap).rho, 0);
    assert_eq!(rho_oracle(&gap).unwrap(), 0);
    assert!(rho_oracle(&cycle_tiling(21)).is_err());
}
