//! Brute-force censuses used to check the closed forms independently.
//!
//! Nothing here calls the closed-form evaluators except
//! [`weight_recovery_scan`], whose job is to probe them.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::euler::EulerValue;
use crate::formulas::{chi_zl_fl_s1, WeightVector};
use crate::groups::{check_budget, FiniteGroup, GammaFamily, HomTuple};

/// Search-space limit for [`weight_recovery_scan`].
pub const WEIGHT_SCAN_PAIR_BUDGET: u64 = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum TupleType {
    /// Every entry central.
    TypeI,
    /// Every entry a rotation, some entry not central.
    TypeII,
    /// Some reflection `s` occurs and every entry commutes with it.
    TypeIII,
    TypeIV,
}

impl fmt::Display for TupleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TupleType::TypeI => "i",
            TupleType::TypeII => "ii",
            TupleType::TypeIII => "iii",
            TupleType::TypeIV => "iv",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize)]
pub struct TypeCount {
    /// Raw tuple count; `None` when the tuple space is not finite.
    pub tuples: Option<u64>,
    /// Euler characteristic of the orbit space of all tuples of this type.
    pub orbit_chi: EulerValue,
    /// Same, restricted to pairwise commuting tuples.
    pub commuting_orbit_chi: EulerValue,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TupleCensus {
    pub ell: u32,
    pub counts: BTreeMap<TupleType, TypeCount>,
}

impl TupleCensus {
    /// `χ(H\Hom(Z^ℓ,H))`.
    pub fn commuting_total(&self) -> EulerValue {
        self.counts.values().map(|c| c.commuting_orbit_chi.clone()).sum()
    }

    /// `χ(H\Hom(F_ℓ,H))`.
    pub fn full_total(&self) -> EulerValue {
        self.counts.values().map(|c| c.orbit_chi.clone()).sum()
    }

    pub fn total(&self, family: GammaFamily) -> EulerValue {
        match family {
            GammaFamily::FreeAbelian => self.commuting_total(),
            GammaFamily::Free => self.full_total(),
        }
    }

    pub fn raw_total(&self) -> Option<u64> {
        self.counts.values().map(|c| c.tuples).sum()
    }

    pub fn get(&self, t: TupleType) -> Option<&TypeCount> {
        self.counts.get(&t)
    }
}

fn classify(h: &FiniteGroup, center: &[bool], m: usize, tuple: &[usize]) -> TupleType {
    if tuple.iter().all(|&x| center[x]) {
        return TupleType::TypeI;
    }
    if tuple.iter().all(|&x| x < m) {
        return TupleType::TypeII;
    }
    let witness = tuple
        .iter()
        .filter(|&&s| s >= m)
        .any(|&s| tuple.iter().all(|&x| h.commute(x, s)));
    if witness {
        TupleType::TypeIII
    } else {
        TupleType::TypeIV
    }
}

/// Whether `tuple` is the lexicographically least member of its conjugation orbit.
fn is_orbit_minimum(h: &FiniteGroup, tuple: &[usize], scratch: &mut Vec<usize>) -> bool {
    (0..h.order()).all(|g| {
        scratch.clear();
        scratch.extend(tuple.iter().map(|&x| h.conjugate(g, x)));
        scratch.as_slice() >= tuple
    })
}

fn pairwise_commuting(h: &FiniteGroup, tuple: &[usize]) -> bool {
    tuple
        .iter()
        .enumerate()
        .all(|(i, &a)| tuple[i + 1..].iter().all(|&b| h.commute(a, b)))
}

/// Classifies every tuple in `D_{2m}^ℓ` and counts conjugation orbits per type
/// by canonical representatives.
pub fn dihedral_tuple_census(m: usize, ell: u32, budget: u64) -> Result<TupleCensus> {
    if m == 0 || ell == 0 {
        return Err(Error::InvalidParameter("m and l must be >= 1".into()));
    }
    check_budget(2 * m, ell as usize, budget)?;
    let h = FiniteGroup::dihedral(m)?;
    let mut center = vec![false; h.order()];
    for z in h.center() {
        center[z] = true;
    }
    let mut raw: BTreeMap<TupleType, (u64, u64, u64)> = [
        TupleType::TypeI,
        TupleType::TypeII,
        TupleType::TypeIII,
        TupleType::TypeIV,
    ]
    .into_iter()
    .map(|t| (t, (0, 0, 0)))
    .collect();

    let mut tuple = vec![0usize; ell as usize];
    let mut scratch = Vec::with_capacity(ell as usize);
    loop {
        let t = classify(&h, &center, m, &tuple);
        let entry = raw.get_mut(&t).expect("all types seeded");
        entry.0 += 1;
        if is_orbit_minimum(&h, &tuple, &mut scratch) {
            entry.1 += 1;
            if pairwise_commuting(&h, &tuple) {
                entry.2 += 1;
            }
        }
        // odometer step
        let mut pos = 0;
        loop {
            if pos == tuple.len() {
                let counts = raw
                    .into_iter()
                    .map(|(t, (n, orbits, commuting))| {
                        (
                            t,
                            TypeCount {
                                tuples: Some(n),
                                orbit_chi: orbits.into(),
                                commuting_orbit_chi: commuting.into(),
                            },
                        )
                    })
                    .collect();
                return Ok(TupleCensus { ell, counts });
            }
            tuple[pos] += 1;
            if tuple[pos] < h.order() {
                break;
            }
            tuple[pos] = 0;
            pos += 1;
        }
    }
}

fn pow2(k: u32) -> BigInt {
    BigInt::from(1) << k
}

/// Orbit-space Euler characteristics of `O(2)^ℓ` tuples by type, assembled from
/// the counting recipes: a sum for type (iii) and a recursion for type (iv).
pub fn o2_tuple_type_counts(ell: u32) -> Result<TupleCensus> {
    if ell == 0 {
        return Err(Error::InvalidParameter("l must be >= 1".into()));
    }
    let type_ii = |k: u32| -pow2(k - 1);
    let type_iii = |k: u32| -> BigInt { (1..=k).map(|r| pow2(r - 1) * pow2(2 * (k - r))).sum() };
    let mut counts = BTreeMap::new();
    for (t, v) in [
        (TupleType::TypeI, pow2(ell)),
        (TupleType::TypeII, type_ii(ell)),
        (TupleType::TypeIII, type_iii(ell)),
    ] {
        let v = EulerValue::from(v);
        counts.insert(
            t,
            TypeCount {
                tuples: None,
                orbit_chi: v.clone(),
                commuting_orbit_chi: v,
            },
        );
    }
    if ell >= 2 {
        // three intervals at l = 2
        let mut chi = BigInt::from(-3);
        for k in 2..ell {
            // append one entry: a type (iv) prefix takes any element of O(2)
            // (χ(O(2)) = 0), a type (ii) prefix one reflection up to rotation,
            // a type (iii) prefix the two open arcs outside its centralizer
            let from_iv = BigInt::from(0) * &chi;
            chi = from_iv + type_ii(k) + type_iii(k) * -2;
        }
        counts.insert(
            TupleType::TypeIV,
            TypeCount {
                tuples: None,
                orbit_chi: chi.into(),
                commuting_orbit_chi: EulerValue::zero(),
            },
        );
    }
    Ok(TupleCensus { ell, counts })
}

/// Orbit count `(1/|H|)·Σ_g |Fix(g)|` for conjugation on a hom set.
pub fn burnside_orbit_count(h: &FiniteGroup, homs: &[HomTuple]) -> Result<EulerValue> {
    let mut fixed: u128 = 0;
    for g in 0..h.order() {
        fixed += homs
            .iter()
            .filter(|phi| phi.iter().all(|&x| h.conjugate(g, x) == x))
            .count() as u128;
    }
    let order = h.order() as u128;
    if !fixed.is_multiple_of(order) {
        return Err(Error::NonIntegralBurnside {
            sum: fixed.to_string(),
            order: h.order(),
        });
    }
    Ok(EulerValue::from(BigInt::from(fixed / order)))
}

/// A pair of distinct `|weight|` multisets that no `χ_{Z^ℓ}` separates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RecoveryCollision {
    pub left: Vec<u64>,
    pub right: Vec<u64>,
}

fn multisets(max_len: usize, bound: u64) -> Vec<Vec<u64>> {
    fn extend(prefix: &mut Vec<u64>, start: u64, bound: u64, max_len: usize, out: &mut Vec<Vec<u64>>) {
        out.push(prefix.clone());
        if prefix.len() == max_len {
            return;
        }
        for a in start..=bound {
            prefix.push(a);
            extend(prefix, a, bound, max_len, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), 1, bound, max_len, &mut out);
    out
}

fn binomial(n: u64, k: u64) -> u128 {
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Every pair of distinct multisets of `|weights|` (size `≤ max_n`, entries in
/// `1..=bound`) whose `χ_{Z^ℓ}` values agree for all `ℓ = 1..max_n`.
pub fn weight_recovery_scan(max_n: usize, bound: u64) -> Result<Vec<RecoveryCollision>> {
    if max_n == 0 || bound == 0 {
        return Err(Error::InvalidParameter("n and bound must be >= 1".into()));
    }
    // multisets of size <= n from `bound` values = C(bound + n, n)
    let count = binomial(bound + max_n as u64, max_n as u64);
    let pairs = count * count.saturating_sub(1) / 2;
    if pairs > WEIGHT_SCAN_PAIR_BUDGET as u128 {
        return Err(Error::BudgetExceeded {
            candidates: pairs.to_string(),
            budget: WEIGHT_SCAN_PAIR_BUDGET,
        });
    }
    let mut seen: HashMap<Vec<EulerValue>, Vec<Vec<u64>>> = HashMap::new();
    for ms in multisets(max_n, bound) {
        let v = WeightVector::new(ms.iter().map(|&a| a as i64).collect());
        let key = (1..=max_n as u32)
            .map(|ell| chi_zl_fl_s1(&v, ell, GammaFamily::FreeAbelian, None))
            .collect::<Result<Vec<_>>>()?;
        seen.entry(key).or_default().push(ms);
    }
    let mut collisions = Vec::new();
    for group in seen.into_values() {
        for (i, a) in group.iter().enumerate() {
            for b in &group[i + 1..] {
                collisions.push(RecoveryCollision {
                    left: a.clone(),
                    right: b.clone(),
                });
            }
        }
    }
    collisions.sort_by(|x, y| (&x.left, &x.right).cmp(&(&y.left, &y.right)));
    Ok(collisions)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{enumerate_homs, GammaGroup, DEFAULT_BUDGET};

    fn ev(n: i64) -> EulerValue {
        n.into()
    }

    #[test]
    fn census_m3_l2() {
        let c = dihedral_tuple_census(3, 2, DEFAULT_BUDGET).unwrap();
        let row = |t| {
            let c = c.get(t).unwrap();
            (c.tuples.unwrap(), c.orbit_chi.clone())
        };
        assert_eq!(row(TupleType::TypeI), (1, ev(1)));
        assert_eq!(row(TupleType::TypeII), (8, ev(4)));
        assert_eq!(row(TupleType::TypeIII), (9, ev(3)));
        assert_eq!(row(TupleType::TypeIV), (18, ev(3)));
        assert_eq!(c.full_total(), ev(11));
        assert_eq!(c.commuting_total(), ev(8));
        assert_eq!(c.raw_total(), Some(36));
    }

    #[test]
    fn census_small_m() {
        let c = dihedral_tuple_census(1, 1, DEFAULT_BUDGET).unwrap();
        assert_eq!(c.raw_total(), Some(2));
        assert_eq!(c.get(TupleType::TypeIV).unwrap().tuples, Some(0));
        let c = dihedral_tuple_census(2, 2, DEFAULT_BUDGET).unwrap();
        assert_eq!(c.raw_total(), Some(16));
    }

    #[test]
    fn census_budget() {
        assert!(matches!(
            dihedral_tuple_census(10, 4, 1000),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn o2_counts() {
        let c = o2_tuple_type_counts(2).unwrap();
        let vals: Vec<EulerValue> = c.counts.values().map(|v| v.orbit_chi.clone()).collect();
        assert_eq!(vals, vec![ev(4), ev(-2), ev(6), ev(-3)]);
        assert_eq!(c.commuting_total(), ev(8));
        assert_eq!(c.full_total(), ev(5));
        let c = o2_tuple_type_counts(3).unwrap();
        assert_eq!(c.get(TupleType::TypeIII).unwrap().orbit_chi, ev(28));
        let c = o2_tuple_type_counts(1).unwrap();
        assert!(c.get(TupleType::TypeIV).is_none());
        assert_eq!(c.full_total(), ev(2));
        assert_eq!(c.raw_total(), None);
    }

    #[test]
    fn burnside_examples() {
        let d6 = FiniteGroup::dihedral(3).unwrap();
        let homs = enumerate_homs(&GammaGroup::Free(2), &d6, DEFAULT_BUDGET).unwrap();
        assert_eq!(burnside_orbit_count(&d6, &homs).unwrap(), ev(11));
        let z4 = FiniteGroup::cyclic(4).unwrap();
        let homs = enumerate_homs(&GammaGroup::ZPow(1), &z4, DEFAULT_BUDGET).unwrap();
        assert_eq!(burnside_orbit_count(&z4, &homs).unwrap(), ev(4));
        let d8 = FiniteGroup::dihedral(4).unwrap();
        let homs = enumerate_homs(&GammaGroup::ZPow(2), &d8, DEFAULT_BUDGET).unwrap();
        assert_eq!(burnside_orbit_count(&d8, &homs).unwrap(), ev(22));
    }

    #[test]
    fn burnside_detects_non_closed_sets() {
        let d6 = FiniteGroup::dihedral(3).unwrap();
        // a single reflection is not closed under conjugation
        assert!(matches!(
            burnside_orbit_count(&d6, &[vec![3]]),
            Err(Error::NonIntegralBurnside { .. })
        ));
    }

    #[test]
    fn weight_scans_are_clean() {
        assert!(weight_recovery_scan(3, 5).unwrap().is_empty());
        assert!(weight_recovery_scan(1, 9).unwrap().is_empty());
        assert!(weight_recovery_scan(2, 4).unwrap().is_empty());
    }

    #[test]
    fn multiset_enumeration_size() {
        assert_eq!(multisets(3, 5).len() as u128, binomial(8, 3));
        assert!(matches!(weight_recovery_scan(6, 60), Err(Error::BudgetExceeded { .. })));
    }
}
