//! Closed forms against a naive model of `D_{2m}` as affine maps `x ↦ ±x + k`
//! on `Z/m`, built here without the library's group tables.

use std::collections::BTreeSet;

use gamma_euler::groups::{conjugation_orbit_count, enumerate_homs, DEFAULT_BUDGET};
use gamma_euler::oracle::{
    burnside_orbit_count, dihedral_tuple_census, o2_tuple_type_counts, weight_recovery_scan, TupleType,
};
use gamma_euler::{chi_orbit_hom_dihedral_closed, chi_orbit_hom_o2_closed, EulerValue, FiniteGroup, GammaFamily};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
struct Affine {
    flip: bool,
    shift: u64,
}

fn compose(m: u64, a: Affine, b: Affine) -> Affine {
    // a ∘ b : x ↦ ε_a(ε_b x + k_b) + k_a
    let kb = if a.flip { (m - b.shift) % m } else { b.shift };
    Affine {
        flip: a.flip != b.flip,
        shift: (kb + a.shift) % m,
    }
}

fn invert(m: u64, a: Affine) -> Affine {
    if a.flip {
        a
    } else {
        Affine {
            flip: false,
            shift: (m - a.shift) % m,
        }
    }
}

fn elements(m: u64) -> Vec<Affine> {
    [false, true]
        .into_iter()
        .flat_map(|flip| (0..m).map(move |shift| Affine { flip, shift }))
        .collect()
}

fn tuples(items: &[Affine], ell: u32) -> Vec<Vec<Affine>> {
    (0..ell).fold(vec![vec![]], |acc, _| {
        acc.iter()
            .flat_map(|t| items.iter().map(move |&x| [t.as_slice(), &[x]].concat()))
            .collect()
    })
}

/// Number of distinct conjugation orbits, each orbit stored as a set.
fn naive_orbits(m: u64, ell: u32, commuting_only: bool) -> u64 {
    let group = elements(m);
    let mut orbits: BTreeSet<BTreeSet<Vec<Affine>>> = BTreeSet::new();
    for t in tuples(&group, ell) {
        if commuting_only
            && !t
                .iter()
                .all(|&a| t.iter().all(|&b| compose(m, a, b) == compose(m, b, a)))
        {
            continue;
        }
        let orbit = group
            .iter()
            .map(|&g| t.iter().map(|&x| compose(m, compose(m, g, x), invert(m, g))).collect())
            .collect();
        orbits.insert(orbit);
    }
    orbits.len() as u64
}

#[test]
fn affine_model_matches_closed_forms() {
    for m in 1..=7u64 {
        for ell in 1..=3u32 {
            for (family, commuting) in [(GammaFamily::FreeAbelian, true), (GammaFamily::Free, false)] {
                assert_eq!(
                    chi_orbit_hom_dihedral_closed(m, ell, family).unwrap(),
                    EulerValue::from(naive_orbits(m, ell, commuting)),
                    "m={m} {family}{ell}"
                );
            }
        }
    }
}

#[test]
fn spot_values() {
    let closed = |m, l, f| chi_orbit_hom_dihedral_closed(m, l, f).unwrap();
    assert_eq!(closed(3, 2, GammaFamily::FreeAbelian), EulerValue::from(8));
    assert_eq!(closed(3, 2, GammaFamily::Free), EulerValue::from(11));
    assert_eq!(closed(4, 2, GammaFamily::FreeAbelian), EulerValue::from(22));
    assert_eq!(closed(3, 1, GammaFamily::FreeAbelian), EulerValue::from(3));
}

#[test]
fn three_routes_agree_on_the_full_grid() {
    let grid = (1..=10u64)
        .flat_map(|m| (1..=3u32).map(move |l| (m, l)))
        .chain((1..=4).map(|m| (m, 4)));
    for (m, ell) in grid {
        let h = FiniteGroup::dihedral(m as usize).unwrap();
        let census = dihedral_tuple_census(m as usize, ell, DEFAULT_BUDGET).unwrap();
        assert_eq!(census.raw_total(), Some((2 * m).pow(ell)));
        for family in [GammaFamily::FreeAbelian, GammaFamily::Free] {
            let gamma = family.group(ell).unwrap();
            let homs = enumerate_homs(&gamma, &h, DEFAULT_BUDGET).unwrap();
            let closed = chi_orbit_hom_dihedral_closed(m, ell, family).unwrap();
            assert_eq!(
                conjugation_orbit_count(&h, &homs).unwrap(),
                closed,
                "union-find m={m} {family}{ell}"
            );
            assert_eq!(
                burnside_orbit_count(&h, &homs).unwrap(),
                closed,
                "Burnside m={m} {family}{ell}"
            );
            assert_eq!(census.total(family), closed, "census m={m} {family}{ell}");
        }
    }
}

#[test]
fn odd_census_matches_counting_argument() {
    // odd m: trivial center, m^l - 1 rotation tuples in (m^l - 1)/2 orbits,
    // 2^l - 1 nonempty reflection patterns per reflection, one orbit of reflections
    for m in [3u64, 5, 7] {
        for ell in 1..=3u32 {
            let c = dihedral_tuple_census(m as usize, ell, DEFAULT_BUDGET).unwrap();
            let get = |t| c.get(t).unwrap().clone();
            assert_eq!(get(TupleType::TypeI).tuples, Some(1));
            assert_eq!(get(TupleType::TypeII).tuples, Some(m.pow(ell) - 1));
            assert_eq!(get(TupleType::TypeII).orbit_chi, EulerValue::from((m.pow(ell) - 1) / 2));
            assert_eq!(get(TupleType::TypeIII).tuples, Some(m * (2u64.pow(ell) - 1)));
            assert_eq!(get(TupleType::TypeIII).orbit_chi, EulerValue::from(2u64.pow(ell) - 1));
        }
    }
}

#[test]
fn even_census_type_iii_is_a_set_difference() {
    // for even m a tuple over {1, z, s, sz} with a reflection is type (iii);
    // the all-central ones are already type (i)
    let m = 4usize;
    let h = FiniteGroup::dihedral(m).unwrap();
    let c = dihedral_tuple_census(m, 2, DEFAULT_BUDGET).unwrap();
    let center = h.center();
    assert_eq!(center.len(), 2);
    // per Klein subgroup {1, z, s, sz}: 16 pairs minus the 4 central ones; m/2 such subgroups
    assert_eq!(c.get(TupleType::TypeIII).unwrap().tuples, Some(12 * (m as u64 / 2)));
    assert_eq!(c.get(TupleType::TypeI).unwrap().tuples, Some(4));
}

#[test]
fn o2_census_matches_closed_forms() {
    for ell in 1..=8u32 {
        let c = o2_tuple_type_counts(ell).unwrap();
        assert_eq!(
            c.commuting_total(),
            chi_orbit_hom_o2_closed(ell, GammaFamily::FreeAbelian).unwrap()
        );
        assert_eq!(c.commuting_total(), EulerValue::pow(2, 2 * ell - 1));
        // Σ_{r=1}^{l} 2^{r-1} 4^{l-r} = 2^{l-1}(2^l - 1)
        let identity = EulerValue::pow(2, ell - 1) * (EulerValue::pow(2, ell) - EulerValue::one());
        assert_eq!(c.get(TupleType::TypeIII).unwrap().orbit_chi, identity);
        if ell >= 2 {
            assert_eq!(c.full_total(), chi_orbit_hom_o2_closed(ell, GammaFamily::Free).unwrap());
            let iv = -(EulerValue::pow(2, ell - 2) * (EulerValue::pow(2, ell) - EulerValue::one()));
            assert_eq!(c.get(TupleType::TypeIV).unwrap().orbit_chi, iv);
        }
    }
}

#[test]
fn dihedral_halving_is_always_exact() {
    for m in 1..=64u64 {
        for ell in 1..=8u32 {
            for family in [GammaFamily::FreeAbelian, GammaFamily::Free] {
                assert!(
                    chi_orbit_hom_dihedral_closed(m, ell, family).is_ok(),
                    "m={m} {family}{ell}"
                );
            }
        }
    }
}

#[test]
fn weights_up_to_six_are_recovered() {
    assert!(weight_recovery_scan(4, 6).unwrap().is_empty());
}
