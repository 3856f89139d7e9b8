//! Closed-form Γ-Euler characteristics for circle, O(2) and symplectic-quotient
//! translation groupoids.

use std::collections::HashMap;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::euler::EulerValue;
use crate::groups::{
    chi_hom_to_circle, chi_orbit_hom, count_homs_to_cyclic, Context, GammaFamily, GammaGroup, IsotropyClass,
};

/// Largest coordinate count for which `2^n` subset sums are evaluated.
pub const MAX_SUBSET_COORDS: usize = 20;

/// Weights `(a_1..a_n)` of a diagonal unitary circle action `z·x_i = z^{a_i} x_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct WeightVector(Vec<i64>);

impl WeightVector {
    pub fn new(weights: Vec<i64>) -> Self {
        WeightVector(weights)
    }

    pub fn weights(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `|a_i|` for the nonzero weights, in order.
    pub fn nonzero_abs(&self) -> impl Iterator<Item = u64> + '_ {
        self.0.iter().filter(|&&a| a != 0).map(|a| a.unsigned_abs())
    }

    fn first_zero(&self) -> Option<usize> {
        self.0.iter().position(|&a| a == 0)
    }
}

impl From<Vec<i64>> for WeightVector {
    fn from(v: Vec<i64>) -> Self {
        WeightVector(v)
    }
}

/// `V = (⊕ τ_{α_i}) ⊕ d·det`, or its real points `V_ℝ` when `real_points` is set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct O2Representation {
    alphas: Vec<u64>,
    det_multiplicity: u32,
    real_points: bool,
}

impl O2Representation {
    pub fn new(alphas: Vec<u64>, det_multiplicity: u32, real_points: bool) -> Result<Self> {
        if let Some(i) = alphas.iter().position(|&a| a == 0) {
            return Err(Error::InvalidParameter(format!("alpha_{} must be positive", i + 1)));
        }
        Ok(O2Representation {
            alphas,
            det_multiplicity,
            real_points,
        })
    }

    pub fn alphas(&self) -> &[u64] {
        &self.alphas
    }

    pub fn det_multiplicity(&self) -> u32 {
        self.det_multiplicity
    }

    pub fn real_points(&self) -> bool {
        self.real_points
    }

    /// Weights of the restricted `SO(2)` action: `(α_1, −α_1, …, α_n, −α_n, 0×d)`.
    pub fn circle_weights(&self) -> WeightVector {
        let mut w: Vec<i64> = self.alphas.iter().flat_map(|&a| [a as i64, -(a as i64)]).collect();
        w.extend(std::iter::repeat_n(0, self.det_multiplicity as usize));
        WeightVector(w)
    }
}

fn power_sum<I: IntoIterator<Item = u64>>(values: I, ell: u32) -> EulerValue {
    values.into_iter().map(|a| EulerValue::pow(a, ell)).sum()
}

fn require_rank(ell: u32) -> Result<()> {
    if ell == 0 {
        return Err(Error::InvalidParameter("rank l must be >= 1".into()));
    }
    Ok(())
}

fn exact_half(v: EulerValue, what: &'static str) -> Result<EulerValue> {
    v.checked_exact_div(2).ok_or(Error::InexactDivision(what))
}

fn odd(d: u32) -> bool {
    d % 2 == 1
}

/// `Σ_{a_i ≠ 0} χ(Hom(Γ, Z/a_i))`.
fn cyclic_sum<I: IntoIterator<Item = u64>>(moduli: I, gamma: &GammaGroup, ctx: &Context) -> Result<EulerValue> {
    moduli
        .into_iter()
        .map(|a| chi_orbit_hom(gamma, &IsotropyClass::Cyclic(a), ctx))
        .sum()
}

/// Unitary circle representation: `χ(Hom(Γ,S¹)) − Σ_{a_i≠0} χ(Hom(Γ,Z/a_i))`.
pub fn chi_gamma_s1_rep(v: &WeightVector, gamma: &GammaGroup, ctx: &Context) -> Result<EulerValue> {
    Ok(chi_hom_to_circle(gamma) - cyclic_sum(v.nonzero_abs(), gamma, ctx)?)
}

/// Real circle representation `W ⊕ ℝ^d` with `W` unitary of weights `w` (all nonzero).
///
/// Evaluated as `(−1)^d·χ_Γ(S¹⋉W)`, i.e.
/// `(−1)^d χ(Hom(Γ,S¹)) + (−1)^{d+1} Σ χ(Hom(Γ,Z/a_i))`.
pub fn chi_gamma_s1_rep_real(w: &WeightVector, d: u32, gamma: &GammaGroup, ctx: &Context) -> Result<EulerValue> {
    if let Some(i) = w.first_zero() {
        return Err(Error::RejectsZeroWeight(i + 1));
    }
    let sign = EulerValue::sign_power(d as u64);
    let circle = chi_hom_to_circle(gamma);
    let cyclic = cyclic_sum(w.nonzero_abs(), gamma, ctx)?;
    Ok(&sign * &circle - &sign * &cyclic)
}

/// `Γ = Z^ℓ` or `F_ℓ`: `−Σ|a_i|^ℓ`, or `(−1)^{d+1} Σ|a_i|^ℓ` for the real form with `d` fixed real dimensions.
pub fn chi_zl_fl_s1(v: &WeightVector, ell: u32, _family: GammaFamily, d: Option<u32>) -> Result<EulerValue> {
    require_rank(ell)?;
    let sum = power_sum(v.nonzero_abs(), ell);
    match d {
        None => Ok(-sum),
        Some(d) => {
            if let Some(i) = v.first_zero() {
                return Err(Error::RejectsZeroWeight(i + 1));
            }
            Ok(EulerValue::sign_power(d as u64 + 1) * sum)
        }
    }
}

/// Unit sphere `S ⊂ V`: `Σ_{a_i≠0} χ(Hom(Γ,Z/a_i))`.
pub fn chi_gamma_s1_sphere(v: &WeightVector, gamma: &GammaGroup, ctx: &Context) -> Result<EulerValue> {
    cyclic_sum(v.nonzero_abs(), gamma, ctx)
}

/// Unit ball `B ⊂ V`: `χ(Hom(Γ,S¹))`, independent of the weights.
pub fn chi_gamma_s1_ball(_v: &WeightVector, gamma: &GammaGroup) -> EulerValue {
    chi_hom_to_circle(gamma)
}

/// `χ(O(2)\Hom(Γ,O(2)))` for `Z^ℓ` (`2^{2ℓ−1}`) and `F_ℓ`, `ℓ ≥ 2` (`2^{ℓ−2}(2^ℓ+1)`).
pub fn chi_orbit_hom_o2_closed(ell: u32, family: GammaFamily) -> Result<EulerValue> {
    require_rank(ell)?;
    match family {
        GammaFamily::FreeAbelian => Ok(EulerValue::pow(2, 2 * ell - 1)),
        GammaFamily::Free if ell == 1 => Err(Error::FreeEllOne),
        GammaFamily::Free => Ok(EulerValue::pow(2, ell - 2) * (EulerValue::pow(2, ell) + EulerValue::one())),
    }
}

fn parity_factor(m: u64) -> u64 {
    if m.is_multiple_of(2) {
        2
    } else {
        1
    }
}

/// Twice `χ(D_{2m}\Hom(Γ,D_{2m}))` for `Z^ℓ`/`F_ℓ`; `F_1` is read as `Z`.
fn dihedral_numerator(m: u64, ell: u32, family: GammaFamily) -> EulerValue {
    let p = parity_factor(m);
    let family = if ell == 1 { GammaFamily::FreeAbelian } else { family };
    match family {
        GammaFamily::FreeAbelian => {
            EulerValue::pow(m, ell) + EulerValue::pow(p, ell) * (EulerValue::pow(2, ell + 1) - EulerValue::one())
        }
        GammaFamily::Free => {
            EulerValue::pow(2 * p, ell)
                + EulerValue::from(p) * EulerValue::pow(m, ell - 1) * (EulerValue::pow(2, ell) - EulerValue::one())
                + EulerValue::pow(m, ell)
        }
    }
}

/// `χ(D_{2m}\Hom(Γ,D_{2m}))` for `Γ = Z^ℓ` or `F_ℓ`.
pub fn chi_orbit_hom_dihedral_closed(m: u64, ell: u32, family: GammaFamily) -> Result<EulerValue> {
    require_rank(ell)?;
    if m == 0 {
        return Err(Error::InvalidParameter("dihedral index must be >= 1".into()));
    }
    exact_half(dihedral_numerator(m, ell, family), "dihedral orbit count")
}

fn expect_real(rep: &O2Representation, real: bool) -> Result<()> {
    if rep.real_points != real {
        return Err(Error::InvalidParameter(if real {
            "expected the real points V_R of the representation".into()
        } else {
            "expected the unitary representation V, not V_R".into()
        }));
    }
    Ok(())
}

fn check_subsets(n: usize) -> Result<()> {
    if n > MAX_SUBSET_COORDS {
        return Err(Error::SubsetBudgetExceeded {
            n,
            max: MAX_SUBSET_COORDS,
        });
    }
    Ok(())
}

/// gcd of `alphas[i]` over the bits of `mask`.
pub(crate) fn subset_gcd(alphas: &[u64], mask: u32) -> u64 {
    alphas
        .iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .fold(0, |g, (_, &a)| g.gcd(&a))
}

/// Unitary O(2) representation with no fixed vectors:
/// `χ(O(2)\Hom(Γ,O(2))) − Σ χ(Hom(Γ,Z/α_i))`. The `det` multiplicity does not enter.
pub fn chi_gamma_o2_rep(rep: &O2Representation, gamma: &GammaGroup, ctx: &Context) -> Result<EulerValue> {
    expect_real(rep, false)?;
    let top = chi_orbit_hom(gamma, &IsotropyClass::FullO2, ctx)?;
    Ok(top - cyclic_sum(rep.alphas.iter().copied(), gamma, ctx)?)
}

/// Real points `V_ℝ` of an O(2) representation.
pub fn chi_gamma_o2_real_rep(rep: &O2Representation, gamma: &GammaGroup, ctx: &Context) -> Result<EulerValue> {
    expect_real(rep, true)?;
    let n = rep.alphas.len();
    check_subsets(n)?;
    let mut dihedral: HashMap<u64, EulerValue> = HashMap::new();
    let mut dihedral_chi = |g: u64| -> Result<EulerValue> {
        if let Some(v) = dihedral.get(&g) {
            return Ok(v.clone());
        }
        let v = chi_orbit_hom(gamma, &IsotropyClass::Dihedral(g), ctx)?;
        dihedral.insert(g, v.clone());
        Ok(v)
    };

    let mut total = chi_orbit_hom(gamma, &IsotropyClass::FullO2, ctx)?;
    let d_odd = odd(rep.det_multiplicity);
    if d_odd {
        // ((−1)^d − 1)/2 = −1
        total = total - chi_hom_to_circle(gamma);
    }
    for mask in 1u32..(1u32 << n) {
        let size = mask.count_ones();
        let g = subset_gcd(&rep.alphas, mask);
        let weight = EulerValue::sign_power(size as u64 - 1) * EulerValue::pow(2, size - 1);
        total = total - weight * dihedral_chi(g)?;
        if size == 2 {
            total = total - dihedral_chi(g)?;
        }
    }
    if d_odd {
        total += cyclic_sum(rep.alphas.iter().copied(), gamma, ctx)?;
    }
    Ok(total)
}

/// Dispatch on `rep.real_points()`.
pub fn chi_gamma_o2(rep: &O2Representation, gamma: &GammaGroup, ctx: &Context) -> Result<EulerValue> {
    if rep.real_points {
        chi_gamma_o2_real_rep(rep, gamma, ctx)
    } else {
        chi_gamma_o2_rep(rep, gamma, ctx)
    }
}

fn normalize_family(ell: u32, family: GammaFamily) -> GammaFamily {
    if ell == 1 {
        GammaFamily::FreeAbelian
    } else {
        family
    }
}

/// `Γ = Z^ℓ`/`F_ℓ` specialization of the unitary O(2) formula:
/// `2^{2ℓ−1} − Σα_i^ℓ` or `2^{ℓ−2}(2^ℓ+1) − Σα_i^ℓ`.
pub fn chi_zl_fl_o2_rep(rep: &O2Representation, ell: u32, family: GammaFamily) -> Result<EulerValue> {
    expect_real(rep, false)?;
    require_rank(ell)?;
    let top = chi_orbit_hom_o2_closed(ell, normalize_family(ell, family))?;
    Ok(top - power_sum(rep.alphas.iter().copied(), ell))
}

/// `Γ = Z^ℓ`/`F_ℓ` specialization of the real O(2) formula, with the dihedral
/// orbit counts written out in closed form and halved once at the end.
pub fn chi_zl_fl_o2_real_rep(rep: &O2Representation, ell: u32, family: GammaFamily) -> Result<EulerValue> {
    expect_real(rep, true)?;
    require_rank(ell)?;
    let n = rep.alphas.len();
    check_subsets(n)?;
    let family = normalize_family(ell, family);

    // everything below is twice the answer
    let mut doubled = EulerValue::from(2) * chi_orbit_hom_o2_closed(ell, family)?;
    for mask in 1u32..(1u32 << n) {
        let size = mask.count_ones();
        let numerator = dihedral_numerator(subset_gcd(&rep.alphas, mask), ell, family);
        // 2·(−2)^{|I|−2} = −(−2)^{|I|−1}
        let coeff = -(EulerValue::sign_power(size as u64 - 1) * EulerValue::pow(2, size - 1));
        doubled += &coeff * &numerator;
        if size == 2 {
            doubled = doubled - numerator;
        }
    }
    if odd(rep.det_multiplicity) {
        doubled += EulerValue::from(2) * power_sum(rep.alphas.iter().copied(), ell);
    }
    exact_half(doubled, "real O(2) specialization")
}

/// Linear symplectic quotient at level 0: `χ(G\Hom(Γ,G))`, whatever the representation.
pub fn chi_gamma_symplectic_quotient(g: &IsotropyClass, gamma: &GammaGroup, ctx: &Context) -> Result<EulerValue> {
    chi_orbit_hom(gamma, g, ctx)
}

/// `Z/2 ⋉ (S¹\V)` for an O(2) representation: `|Hom(Γ, Z/2)|`.
pub fn chi_gamma_z2_quotient(gamma: &GammaGroup) -> EulerValue {
    count_homs_to_cyclic(gamma, 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_gamma;

    fn v(x: i64) -> EulerValue {
        EulerValue::from(x)
    }

    fn g(s: &str) -> GammaGroup {
        parse_gamma(s).unwrap()
    }

    fn ctx() -> Context {
        Context::default()
    }

    fn o2(alphas: &[u64], d: u32, real: bool) -> O2Representation {
        O2Representation::new(alphas.to_vec(), d, real).unwrap()
    }

    #[test]
    fn circle_rep_examples() {
        let c = ctx();
        assert_eq!(chi_gamma_s1_rep(&vec![1].into(), &g("Z"), &c).unwrap(), v(-1));
        assert_eq!(chi_gamma_s1_rep(&vec![2, 3].into(), &g("Z^2"), &c).unwrap(), v(-13));
        assert_eq!(chi_gamma_s1_rep(&vec![0, 0].into(), &g("fp:a|aaaa"), &c).unwrap(), v(4));
    }

    #[test]
    fn real_circle_rep_examples() {
        let c = ctx();
        assert_eq!(
            chi_gamma_s1_rep_real(&vec![2, 3].into(), 0, &g("Z"), &c).unwrap(),
            v(-5)
        );
        assert_eq!(chi_gamma_s1_rep_real(&vec![1].into(), 1, &g("Z"), &c).unwrap(), v(1));
        assert_eq!(chi_gamma_s1_rep_real(&vec![1].into(), 0, &g("F2"), &c).unwrap(), v(-1));
        assert_eq!(
            chi_gamma_s1_rep_real(&vec![1, 0].into(), 0, &g("Z"), &c).unwrap_err(),
            Error::RejectsZeroWeight(2)
        );
    }

    #[test]
    fn free_family_circle_examples() {
        use GammaFamily::*;
        assert_eq!(chi_zl_fl_s1(&vec![2, 3].into(), 2, FreeAbelian, None).unwrap(), v(-13));
        assert_eq!(chi_zl_fl_s1(&vec![1, 1, 1].into(), 1, Free, None).unwrap(), v(-3));
        assert_eq!(chi_zl_fl_s1(&vec![5].into(), 3, FreeAbelian, Some(2)).unwrap(), v(-125));
        assert!(chi_zl_fl_s1(&vec![0].into(), 1, Free, Some(0)).is_err());
    }

    #[test]
    fn sphere_and_ball() {
        let c = ctx();
        assert_eq!(chi_gamma_s1_sphere(&vec![2, 3].into(), &g("Z"), &c).unwrap(), v(5));
        assert_eq!(chi_gamma_s1_sphere(&vec![0, 0].into(), &g("F2"), &c).unwrap(), v(0));
        assert_eq!(chi_gamma_s1_sphere(&vec![2, 2].into(), &g("Z^2"), &c).unwrap(), v(8));
        assert_eq!(chi_gamma_s1_ball(&vec![2, 3].into(), &g("Z")), v(0));
        assert_eq!(chi_gamma_s1_ball(&vec![7].into(), &g("fp:a|aaa")), v(3));
        assert_eq!(chi_gamma_s1_ball(&vec![1].into(), &g("F2")), v(0));
    }

    #[test]
    fn o2_closed_examples() {
        use GammaFamily::*;
        assert_eq!(chi_orbit_hom_o2_closed(1, FreeAbelian).unwrap(), v(2));
        assert_eq!(chi_orbit_hom_o2_closed(2, FreeAbelian).unwrap(), v(8));
        assert_eq!(chi_orbit_hom_o2_closed(2, Free).unwrap(), v(5));
        assert_eq!(chi_orbit_hom_o2_closed(1, Free).unwrap_err(), Error::FreeEllOne);
    }

    #[test]
    fn dihedral_closed_examples() {
        use GammaFamily::*;
        assert_eq!(chi_orbit_hom_dihedral_closed(1, 1, FreeAbelian).unwrap(), v(2));
        assert_eq!(chi_orbit_hom_dihedral_closed(3, 2, FreeAbelian).unwrap(), v(8));
        assert_eq!(chi_orbit_hom_dihedral_closed(3, 2, Free).unwrap(), v(11));
        assert_eq!(chi_orbit_hom_dihedral_closed(4, 2, FreeAbelian).unwrap(), v(22));
        assert_eq!(
            chi_orbit_hom_dihedral_closed(5, 1, Free).unwrap(),
            chi_orbit_hom_dihedral_closed(5, 1, FreeAbelian).unwrap()
        );
    }

    #[test]
    fn dihedral_numerators_are_even() {
        for m in 1..=64 {
            for ell in 1..=8 {
                for fam in [GammaFamily::FreeAbelian, GammaFamily::Free] {
                    assert!(
                        chi_orbit_hom_dihedral_closed(m, ell, fam).is_ok(),
                        "m={m} l={ell} {fam}"
                    );
                }
            }
        }
    }

    #[test]
    fn o2_rep_examples() {
        let c = ctx();
        assert_eq!(chi_gamma_o2_rep(&o2(&[1], 0, false), &g("Z"), &c).unwrap(), v(1));
        assert_eq!(chi_gamma_o2_rep(&o2(&[2, 3], 5, false), &g("Z^2"), &c).unwrap(), v(-5));
        assert_eq!(chi_gamma_o2_rep(&o2(&[2, 3], 0, false), &g("F2"), &c).unwrap(), v(-8));
        assert!(matches!(
            chi_gamma_o2_rep(&o2(&[1], 0, false), &g("fp:a|aaa"), &c),
            Err(Error::UnsupportedGamma { .. })
        ));
    }

    #[test]
    fn o2_real_rep_examples() {
        let c = ctx();
        assert_eq!(chi_gamma_o2_real_rep(&o2(&[1], 0, true), &g("Z"), &c).unwrap(), v(0));
        assert_eq!(chi_gamma_o2_real_rep(&o2(&[1], 1, true), &g("Z"), &c).unwrap(), v(1));
        for gamma in ["Z", "Z^3", "F2"] {
            let gamma = g(gamma);
            let top = chi_orbit_hom(&gamma, &IsotropyClass::FullO2, &c).unwrap();
            assert_eq!(chi_gamma_o2_real_rep(&o2(&[], 0, true), &gamma, &c).unwrap(), top);
        }
        assert!(chi_gamma_o2_real_rep(&o2(&[1], 0, false), &g("Z"), &c).is_err());
        assert!(matches!(
            chi_gamma_o2_real_rep(&o2(&[1; 21], 0, true), &g("Z"), &c),
            Err(Error::SubsetBudgetExceeded { n: 21, .. })
        ));
    }

    #[test]
    fn o2_specializations() {
        use GammaFamily::*;
        assert_eq!(chi_zl_fl_o2_rep(&o2(&[2, 3], 0, false), 2, FreeAbelian).unwrap(), v(-5));
        assert_eq!(chi_zl_fl_o2_rep(&o2(&[2, 3], 0, false), 2, Free).unwrap(), v(-8));
        assert_eq!(chi_zl_fl_o2_real_rep(&o2(&[1], 0, true), 1, FreeAbelian).unwrap(), v(0));
    }

    #[test]
    fn symplectic_and_z2_quotient() {
        let c = ctx();
        assert_eq!(
            chi_gamma_symplectic_quotient(&IsotropyClass::CircleSO2, &g("Z"), &c).unwrap(),
            v(0)
        );
        assert_eq!(
            chi_gamma_symplectic_quotient(&IsotropyClass::Cyclic(4), &g("Z"), &c).unwrap(),
            v(4)
        );
        assert_eq!(
            chi_gamma_symplectic_quotient(&IsotropyClass::FullO2, &g("F2"), &c).unwrap(),
            v(5)
        );
        assert_eq!(chi_gamma_z2_quotient(&g("Z^2")), v(4));
        assert_eq!(chi_gamma_z2_quotient(&g("F3")), v(8));
        assert_eq!(chi_gamma_z2_quotient(&g("fp:a|aaa")), v(1));
    }

    #[test]
    fn circle_weights_of_o2_rep() {
        assert_eq!(o2(&[2, 3], 2, false).circle_weights().weights(), &[2, -2, 3, -3, 0, 0]);
        assert!(O2Representation::new(vec![0], 0, false).is_err());
    }
}
