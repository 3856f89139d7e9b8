use proptest::prelude::*;

use gamma_euler::strata::{stratify_o2_rep, stratify_s1_rep, stratify_s1_shell, Localization, StratumLabel};
use gamma_euler::*;

fn klein() -> GammaGroup {
    parse_gamma("fp:a,b|aa,bb,abAB").unwrap()
}

fn circle_corpus() -> Vec<GammaGroup> {
    let mut out: Vec<GammaGroup> = (1..=3)
        .flat_map(|l| [GammaGroup::ZPow(l), GammaGroup::Free(l)])
        .collect();
    for m in [2, 4, 6] {
        out.push(GammaGroup::cyclic(m).unwrap());
    }
    out.push(klein());
    out
}

#[test]
fn every_subset_appears_once() {
    for w in [vec![], vec![0], vec![2, 3], vec![-6, 2, 3], vec![1, 0, -1, 4]] {
        let v = WeightVector::new(w.clone());
        for s in [stratify_s1_rep(&v).unwrap(), stratify_s1_shell(&v).unwrap()] {
            assert_eq!(s.strata.len(), 1 << w.len());
        }
    }
}

#[test]
fn localization_tags_respect_their_hypotheses() {
    let v = WeightVector::new(vec![2, 2, -2, 0, 3]);
    let s = stratify_s1_rep(&v).unwrap();
    for st in &s.strata {
        let StratumLabel::S1Piece(set) = st.label else {
            unreachable!()
        };
        let a: Vec<i64> = set.members().map(|i| v.weights()[i - 1]).collect();
        if let Some(rule) = st.zeroed_by {
            assert!(st.orbit_space_chi.is_zero());
            assert!(set.len() >= 2 && a.iter().any(|&x| x != 0));
            let equal = a.windows(2).all(|p| p[0] == p[1]);
            assert_eq!(rule == Localization::SignedCircle, equal, "{set}");
        }
    }
}

#[test]
fn strata_json_shape() {
    let s = stratify_s1_shell(&WeightVector::new(vec![-6, 2, 3])).unwrap();
    let json = serde_json::to_value(s.to_records()).unwrap();
    let first = &json[0];
    assert_eq!(first["label"], "Shell{}");
    assert_eq!(first["chi"], "1");
    assert_eq!(first["isotropy"], "SO2");
    assert_eq!(first["empty"], false);
    assert!(first["zeroed_by"].is_null());
    let empty = json
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["label"] == "Shell{2,3}")
        .unwrap();
    assert_eq!(empty["empty"], true);
}

#[test]
fn o2_spot_values() {
    let ctx = Context::default();
    let rep = O2Representation::new(vec![2, 3], 0, false).unwrap();
    let s = stratify_o2_rep(&rep).unwrap();
    assert_eq!(
        evaluate_gamma_euler(&s, &GammaGroup::ZPow(2), &ctx).unwrap(),
        EulerValue::from(-5)
    );
    assert_eq!(
        evaluate_gamma_euler(&s, &GammaGroup::Free(2), &ctx).unwrap(),
        EulerValue::from(-8)
    );
    let rep = O2Representation::new(vec![1], 0, false).unwrap();
    let s = stratify_o2_rep(&rep).unwrap();
    assert_eq!(
        evaluate_gamma_euler(&s, &GammaGroup::ZPow(2), &ctx).unwrap(),
        EulerValue::from(7)
    );
    assert_eq!(
        evaluate_gamma_euler(&s, &GammaGroup::Free(2), &ctx).unwrap(),
        EulerValue::from(4)
    );
}

proptest! {
    #[test]
    fn circle_strata_equal_formula(w in prop::collection::vec(-9i64..=9, 0..=6)) {
        let ctx = Context::default();
        let v = WeightVector::new(w);
        let s = stratify_s1_rep(&v).unwrap();
        for gamma in circle_corpus() {
            prop_assert_eq!(evaluate_gamma_euler(&s, &gamma, &ctx).unwrap(), chi_gamma_s1_rep(&v, &gamma, &ctx).unwrap());
        }
    }

    #[test]
    fn shell_equals_circle_hom_orbits(w in prop::collection::vec(-9i64..=9, 0..=6)) {
        let ctx = Context::default();
        let s = stratify_s1_shell(&WeightVector::new(w)).unwrap();
        for gamma in circle_corpus() {
            prop_assert_eq!(
                evaluate_gamma_euler(&s, &gamma, &ctx).unwrap(),
                chi_gamma_symplectic_quotient(&IsotropyClass::CircleSO2, &gamma, &ctx).unwrap()
            );
        }
    }

    #[test]
    fn o2_strata_equal_formula(
        alphas in prop::collection::vec(1u64..=6, 0..=4),
        d in 0u32..=3,
        real in any::<bool>(),
        ell in 1usize..=3,
        free in any::<bool>(),
    ) {
        let ctx = Context::default();
        let gamma = if free { GammaGroup::Free(ell) } else { GammaGroup::ZPow(ell) };
        let rep = O2Representation::new(alphas, d, real).unwrap();
        let s = stratify_o2_rep(&rep).unwrap();
        prop_assert_eq!(evaluate_gamma_euler(&s, &gamma, &ctx).unwrap(), chi_gamma_o2(&rep, &gamma, &ctx).unwrap());
    }
}
