use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use super::finite::FiniteGroup;
use super::homs::{conjugation_orbit_count, enumerate_homs, DEFAULT_BUDGET};
use super::presentation::{GammaFamily, GammaGroup};
use super::snf::{chi_hom_to_circle, count_homs_to_cyclic};
use crate::error::{Error, Result};
use crate::euler::EulerValue;
use crate::formulas::chi_orbit_hom_o2_closed;
use crate::syntax::format_gamma;

/// Isomorphism class of an isotropy group `H`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IsotropyClass {
    Trivial,
    /// `Z/m`, `m ≥ 1`.
    Cyclic(u64),
    /// `D_{2m}`, `m ≥ 1`.
    Dihedral(u64),
    /// `SO(2) ≅ S¹`.
    CircleSO2,
    FullO2,
    FiniteTable(FiniteGroup),
    /// A group known only through user-provided values of `χ(H\Hom(Γ,H))`.
    UserSupplied {
        name: String,
        table: BTreeMap<GammaGroup, EulerValue>,
    },
}

impl IsotropyClass {
    /// `R(m)`, with `R(0) = S¹`.
    pub fn cyclic(m: u64) -> Self {
        if m == 0 {
            IsotropyClass::CircleSO2
        } else {
            IsotropyClass::Cyclic(m)
        }
    }

    /// Isotropy `R(g)` of a coordinate stratum with weight gcd `g`; `g = 1` is trivial.
    pub fn roots_of_unity(g: u64) -> Self {
        match g {
            0 => IsotropyClass::CircleSO2,
            1 => IsotropyClass::Trivial,
            _ => IsotropyClass::Cyclic(g),
        }
    }

    pub fn dihedral(m: u64) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidParameter("dihedral index must be >= 1".into()));
        }
        Ok(IsotropyClass::Dihedral(m))
    }

    pub fn user_supplied(name: impl Into<String>, entries: impl IntoIterator<Item = (GammaGroup, EulerValue)>) -> Self {
        IsotropyClass::UserSupplied {
            name: name.into(),
            table: entries.into_iter().map(|(g, v)| (g.normalized(), v)).collect(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        matches!(self, IsotropyClass::Trivial | IsotropyClass::Cyclic(1))
    }

    /// Short machine tag, e.g. `cyclic:3`, `dihedral:2`, `SO2`, `O2`.
    pub fn tag(&self) -> String {
        match self {
            IsotropyClass::Trivial => "trivial".into(),
            IsotropyClass::Cyclic(m) => format!("cyclic:{m}"),
            IsotropyClass::Dihedral(m) => format!("dihedral:{m}"),
            IsotropyClass::CircleSO2 => "SO2".into(),
            IsotropyClass::FullO2 => "O2".into(),
            IsotropyClass::FiniteTable(g) => format!("table:{}", g.order()),
            IsotropyClass::UserSupplied { name, .. } => format!("user:{name}"),
        }
    }
}

impl fmt::Display for IsotropyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.tag())
    }
}

impl FromStr for IsotropyClass {
    type Err = Error;

    /// Accepts `trivial`, `S1`/`SO2`, `O2`, `cyclic:m`, `dihedral:m`, `user:NAME`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let index = |rest: &str| -> Result<u64> {
            rest.parse::<u64>()
                .map_err(|_| Error::Parse(format!("bad group index in {s:?}")))
        };
        match s {
            "trivial" => return Ok(IsotropyClass::Trivial),
            "S1" | "SO2" => return Ok(IsotropyClass::CircleSO2),
            "O2" => return Ok(IsotropyClass::FullO2),
            _ => {}
        }
        if let Some(rest) = s.strip_prefix("cyclic:") {
            return Ok(IsotropyClass::cyclic(index(rest)?));
        }
        if let Some(rest) = s.strip_prefix("dihedral:") {
            return IsotropyClass::dihedral(index(rest)?).map_err(|e| Error::Parse(e.to_string()));
        }
        if let Some(name) = s.strip_prefix("user:") {
            if name.is_empty() {
                return Err(Error::Parse("user group needs a name".into()));
            }
            return Ok(IsotropyClass::user_supplied(name, []));
        }
        Err(Error::Parse(format!("unknown group {s:?}")))
    }
}

/// Evaluation settings shared by every χ computation.
#[derive(Clone, Debug)]
pub struct Context {
    /// Cap on candidate tuples for homomorphism enumeration.
    pub budget: u64,
    /// User-supplied `χ(O(2)\Hom(Γ,O(2)))` for Γ outside `Z^ℓ`, `F_ℓ`.
    pub full_o2_values: BTreeMap<GammaGroup, EulerValue>,
}

impl Default for Context {
    fn default() -> Self {
        Context {
            budget: DEFAULT_BUDGET,
            full_o2_values: BTreeMap::new(),
        }
    }
}

impl Context {
    pub fn with_budget(budget: u64) -> Self {
        Context {
            budget,
            ..Context::default()
        }
    }

    pub fn with_full_o2_value(mut self, gamma: &GammaGroup, value: EulerValue) -> Self {
        self.full_o2_values.insert(gamma.normalized(), value);
        self
    }
}

/// `χ(H\Hom(Γ,H))` for the isotropy group `H`.
pub fn chi_orbit_hom(gamma: &GammaGroup, h: &IsotropyClass, ctx: &Context) -> Result<EulerValue> {
    match h {
        IsotropyClass::Trivial => Ok(EulerValue::one()),
        // abelian: conjugation is trivial and Hom(Γ, Z/m) = Hom(Γ^ab, Z/m)
        IsotropyClass::Cyclic(m) => Ok(count_homs_to_cyclic(gamma, *m)),
        IsotropyClass::Dihedral(m) => {
            let group = FiniteGroup::dihedral(*m as usize)?;
            finite_orbit_count(gamma, &group, ctx)
        }
        IsotropyClass::CircleSO2 => Ok(chi_hom_to_circle(gamma)),
        IsotropyClass::FullO2 => {
            let normalized = gamma.normalized();
            if let Some((rank, family)) = normalized.standard_family() {
                let family = if rank == 1 { GammaFamily::FreeAbelian } else { family };
                return chi_orbit_hom_o2_closed(rank, family);
            }
            ctx.full_o2_values
                .get(&normalized)
                .cloned()
                .ok_or_else(|| unsupported("O2", gamma))
        }
        IsotropyClass::FiniteTable(group) => finite_orbit_count(gamma, group, ctx),
        IsotropyClass::UserSupplied { name, table } => table
            .get(&gamma.normalized())
            .cloned()
            .ok_or_else(|| unsupported(name, gamma)),
    }
}

fn finite_orbit_count(gamma: &GammaGroup, group: &FiniteGroup, ctx: &Context) -> Result<EulerValue> {
    let homs = enumerate_homs(gamma, group, ctx.budget)?;
    conjugation_orbit_count(group, &homs)
}

fn unsupported(group: &str, gamma: &GammaGroup) -> Error {
    Error::UnsupportedGamma {
        group: group.to_string(),
        gamma: format_gamma(gamma),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chi(gamma: &GammaGroup, h: &IsotropyClass) -> EulerValue {
        chi_orbit_hom(gamma, h, &Context::default()).unwrap()
    }

    #[test]
    fn dispatch_examples() {
        assert_eq!(
            chi(&GammaGroup::ZPow(1), &IsotropyClass::Cyclic(5)),
            EulerValue::from(5)
        );
        assert_eq!(chi(&GammaGroup::ZPow(2), &IsotropyClass::FullO2), EulerValue::from(8));
        assert_eq!(
            chi(&GammaGroup::Free(2), &IsotropyClass::Dihedral(3)),
            EulerValue::from(11)
        );
        assert_eq!(chi(&GammaGroup::Free(1), &IsotropyClass::FullO2), EulerValue::from(2));
    }

    #[test]
    fn trivial_and_small_classes() {
        let corpus = [
            GammaGroup::ZPow(1),
            GammaGroup::ZPow(3),
            GammaGroup::Free(2),
            GammaGroup::cyclic(4).unwrap(),
            GammaGroup::presented(2, vec![vec![1, 1], vec![2, 2], vec![1, 2, -1, -2]]).unwrap(),
        ];
        for g in &corpus {
            assert_eq!(chi(g, &IsotropyClass::Trivial), EulerValue::one());
            assert_eq!(chi(g, &IsotropyClass::Cyclic(1)), EulerValue::one());
            assert_eq!(chi(g, &IsotropyClass::Dihedral(1)), chi(g, &IsotropyClass::Cyclic(2)));
        }
    }

    #[test]
    fn cyclic_zero_is_circle() {
        assert_eq!(IsotropyClass::cyclic(0), IsotropyClass::CircleSO2);
        assert_eq!("cyclic:0".parse::<IsotropyClass>().unwrap(), IsotropyClass::CircleSO2);
    }

    #[test]
    fn full_o2_needs_formula_or_table() {
        let c3 = GammaGroup::cyclic(3).unwrap();
        let err = chi_orbit_hom(&c3, &IsotropyClass::FullO2, &Context::default()).unwrap_err();
        assert!(matches!(err, Error::UnsupportedGamma { .. }));
        let ctx = Context::default().with_full_o2_value(&c3, EulerValue::from(7));
        assert_eq!(
            chi_orbit_hom(&c3, &IsotropyClass::FullO2, &ctx).unwrap(),
            EulerValue::from(7)
        );
        // a commutator presentation of Z^2 takes the closed-form route
        let z2 = GammaGroup::Presented(GammaGroup::ZPow(2).to_presentation());
        assert_eq!(chi(&z2, &IsotropyClass::FullO2), EulerValue::from(8));
    }

    #[test]
    fn user_supplied_lookup() {
        let su2 = IsotropyClass::user_supplied("SU2", [(GammaGroup::ZPow(1), EulerValue::one())]);
        assert_eq!(chi(&GammaGroup::Free(1), &su2), EulerValue::one());
        assert!(chi_orbit_hom(&GammaGroup::ZPow(2), &su2, &Context::default()).is_err());
    }

    #[test]
    fn tags_parse_back() {
        for h in [
            IsotropyClass::Trivial,
            IsotropyClass::Cyclic(4),
            IsotropyClass::Dihedral(3),
            IsotropyClass::CircleSO2,
            IsotropyClass::FullO2,
        ] {
            assert_eq!(h.tag().parse::<IsotropyClass>().unwrap(), h);
        }
    }
}
