//! Orbit-type stratifications of circle and O(2) representations and of the
//! circle shell `μ⁻¹(0)`, evaluated as `Σ χ(X_i)·χ(G_i\Hom(Γ,G_i))`.
//!
//! Each stratum records the Euler characteristic of its orbit space and its
//! isotropy class. Strata whose orbit space carries a commuting circle action
//! with finite intersection are zeroed by a [`Localization`] rule and keep the
//! tag of the rule that killed them.

use std::fmt;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::euler::EulerValue;
use crate::formulas::{subset_gcd, O2Representation, WeightVector, MAX_SUBSET_COORDS};
use crate::groups::{chi_orbit_hom, Context, GammaGroup, IsotropyClass};

/// A subset of `{1..n}` stored as a bitmask (bit `i-1` for index `i`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct IndexSet(pub u32);

impl IndexSet {
    pub fn len(self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// 1-based members in increasing order.
    pub fn members(self) -> impl Iterator<Item = usize> {
        (0..32).filter(move |i| self.0 >> i & 1 == 1).map(|i| i + 1)
    }

    pub fn from_members(members: &[usize]) -> Self {
        IndexSet(members.iter().fold(0, |m, &i| m | 1 << (i - 1)))
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.members().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", items.join(","))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum StratumLabel {
    Origin,
    /// `V_I`: exactly the coordinates in `I` are nonzero.
    S1Piece(IndexSet),
    /// One of `x_{i,1}`, `x_{i,2}` nonzero, all else zero.
    O2Xi(usize),
    /// `|x_{i,1}| = |x_{i,2}|` with a common reflection; dihedral isotropy.
    O2XStar(IndexSet),
    /// All first (or all second) coordinates of `I` nonzero.
    O2XCross(IndexSet),
    /// Remaining points supported on `I`, no `det` coordinates.
    O2XPlain(IndexSet),
    /// Only `det` coordinates `J` nonzero.
    O2YJ(IndexSet),
    O2XIJ(IndexSet, IndexSet),
    /// `μ⁻¹(0) ∩ V_I`.
    ShellPiece(IndexSet),
}

impl fmt::Display for StratumLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StratumLabel::Origin => f.write_str("Origin"),
            StratumLabel::S1Piece(i) => write!(f, "V{i}"),
            StratumLabel::O2Xi(i) => write!(f, "X{i}"),
            StratumLabel::O2XStar(i) => write!(f, "X*{i}"),
            StratumLabel::O2XCross(i) => write!(f, "Xx{i}"),
            StratumLabel::O2XPlain(i) => write!(f, "X{i}"),
            StratumLabel::O2YJ(j) => write!(f, "Y{j}"),
            StratumLabel::O2XIJ(i, j) => write!(f, "X{i}{j}"),
            StratumLabel::ShellPiece(i) => write!(f, "Shell{i}"),
        }
    }
}

/// Circle action used to zero a stratum by torus localization.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Localization {
    /// Scalar multiplication, weight `(1,…,1)`.
    ScalarCircle,
    /// Weight `(1,…,1,−1)`, for strata whose weights all coincide.
    SignedCircle,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stratum {
    pub label: StratumLabel,
    pub orbit_space_chi: EulerValue,
    pub isotropy: IsotropyClass,
    pub zeroed_by: Option<Localization>,
    /// The piece does not meet the space; kept for introspection.
    pub empty: bool,
}

impl Stratum {
    fn new(label: StratumLabel, chi: i64, isotropy: IsotropyClass) -> Self {
        Stratum {
            label,
            orbit_space_chi: chi.into(),
            isotropy,
            zeroed_by: None,
            empty: false,
        }
    }

    fn zeroed(label: StratumLabel, isotropy: IsotropyClass, rule: Localization) -> Self {
        Stratum {
            zeroed_by: Some(rule),
            ..Stratum::new(label, 0, isotropy)
        }
    }

    fn empty(label: StratumLabel, isotropy: IsotropyClass) -> Self {
        Stratum {
            empty: true,
            ..Stratum::new(label, 0, isotropy)
        }
    }

    /// Contributes to the Γ-Euler characteristic.
    pub fn is_live(&self) -> bool {
        !self.empty && !self.orbit_space_chi.is_zero()
    }
}

/// Which space a stratification describes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "space", rename_all = "kebab-case")]
pub enum Source {
    S1Rep {
        weights: Vec<i64>,
    },
    /// `W ⊕ ℝ^d`, trivial action on `ℝ^d`.
    S1RealRep {
        weights: Vec<i64>,
        d: u32,
    },
    S1Shell {
        weights: Vec<i64>,
    },
    O2Rep {
        alphas: Vec<u64>,
        d: u32,
    },
    O2RealRep {
        alphas: Vec<u64>,
        d: u32,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stratification {
    pub source: Source,
    pub strata: Vec<Stratum>,
}

impl Stratification {
    pub fn nonempty(&self) -> impl Iterator<Item = &Stratum> {
        self.strata.iter().filter(|s| !s.empty)
    }

    pub fn find(&self, label: StratumLabel) -> Option<&Stratum> {
        self.strata.iter().find(|s| s.label == label)
    }

    pub fn to_records(&self) -> Vec<StratumRecord> {
        self.strata.iter().map(StratumRecord::from).collect()
    }
}

/// JSON shape of a stratum.
#[derive(Clone, Debug, Serialize)]
pub struct StratumRecord {
    pub label: String,
    pub chi: EulerValue,
    pub isotropy: String,
    pub zeroed_by: Option<Localization>,
    pub empty: bool,
}

impl From<&Stratum> for StratumRecord {
    fn from(s: &Stratum) -> Self {
        StratumRecord {
            label: s.label.to_string(),
            chi: s.orbit_space_chi.clone(),
            isotropy: s.isotropy.tag(),
            zeroed_by: s.zeroed_by,
            empty: s.empty,
        }
    }
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

fn weights_on(w: &[i64], set: IndexSet) -> impl Iterator<Item = i64> + '_ {
    set.members().map(move |i| w[i - 1])
}

fn abs_gcd(w: &[i64], set: IndexSet) -> u64 {
    weights_on(w, set).fold(0u64, |g, a| g.gcd(&a.unsigned_abs()))
}

/// Distinct values among the weights on `set` form a single value.
fn weights_coincide(w: &[i64], set: IndexSet) -> bool {
    let mut it = weights_on(w, set);
    match it.next() {
        Some(first) => it.all(|a| a == first),
        None => true,
    }
}

/// Pieces `S¹\V_I` of a unitary circle representation.
pub fn stratify_s1_rep(v: &WeightVector) -> Result<Stratification> {
    let w = v.weights();
    check_subsets(w.len())?;
    let strata = (0u32..1 << w.len())
        .map(|mask| {
            let set = IndexSet(mask);
            let label = StratumLabel::S1Piece(set);
            let g = abs_gcd(w, set);
            let isotropy = IsotropyClass::roots_of_unity(g);
            if set.is_empty() {
                Stratum::new(label, 1, isotropy)
            } else if g == 0 {
                // fixed torus (C*)^|I|
                Stratum::new(label, 0, isotropy)
            } else if set.len() == 1 {
                // orbit space is an open interval
                Stratum::new(label, -1, isotropy)
            } else if weights_coincide(w, set) {
                Stratum::zeroed(label, isotropy, Localization::SignedCircle)
            } else {
                Stratum::zeroed(label, isotropy, Localization::ScalarCircle)
            }
        })
        .collect();
    Ok(Stratification {
        source: Source::S1Rep { weights: w.to_vec() },
        strata,
    })
}

/// `S¹ ⋉ (W ⊕ ℝ^d)`: each piece of `W` times the fixed factor `ℝ^d`, whose
/// Euler characteristic `(−1)^d` multiplies every orbit-space value.
pub fn stratify_s1_real_rep(w: &WeightVector, d: u32) -> Result<Stratification> {
    if let Some(i) = w.weights().iter().position(|&a| a == 0) {
        return Err(Error::RejectsZeroWeight(i + 1));
    }
    let mut s = stratify_s1_rep(w)?;
    let sign = EulerValue::sign_power(d as u64);
    for stratum in &mut s.strata {
        stratum.orbit_space_chi = &stratum.orbit_space_chi * &sign;
    }
    s.source = Source::S1RealRep {
        weights: w.weights().to_vec(),
        d,
    };
    Ok(s)
}

/// Whether `Σ_{i∈I} a_i t_i = 0` has a solution with every `t_i > 0`: the
/// nonzero weights on `I` are absent or of both signs.
pub fn shell_meets(w: &[i64], set: IndexSet) -> bool {
    let nonzero: Vec<i64> = weights_on(w, set).filter(|&a| a != 0).collect();
    let meets = nonzero.is_empty() || (nonzero.iter().any(|&a| a > 0) && nonzero.iter().any(|&a| a < 0));
    assert_eq!(
        meets,
        positive_kernel_vector(w, set).is_some(),
        "sign rule disagrees with feasibility on {set}"
    );
    meets
}

/// A positive `t` with `Σ a_i t_i = 0`, or `None` together with a checked
/// certificate `y = ±1` such that `y·a_i ≥ 0` for all `i ∈ I`, not all zero.
fn positive_kernel_vector(w: &[i64], set: IndexSet) -> Option<Vec<i128>> {
    let a: Vec<i128> = weights_on(w, set).map(i128::from).collect();
    let pos: i128 = a.iter().filter(|&&x| x > 0).sum();
    let neg: i128 = -a.iter().filter(|&&x| x < 0).sum::<i128>();
    let t: Vec<i128> = a
        .iter()
        .map(|&x| match x.signum() {
            1 => neg,
            -1 => pos,
            _ => 1,
        })
        .collect();
    if t.iter().all(|&ti| ti > 0) && a.iter().zip(&t).map(|(x, ti)| x * ti).sum::<i128>() == 0 {
        return Some(t);
    }
    let certified = [1i128, -1]
        .iter()
        .any(|y| a.iter().all(|&x| y * x >= 0) && a.iter().any(|&x| y * x > 0));
    assert!(certified, "neither a positive kernel vector nor a certificate on {set}");
    None
}

/// Pieces `S¹\(μ⁻¹(0) ∩ V_I)` of the shell `Σ a_i|x_i|² = 0`.
pub fn stratify_s1_shell(v: &WeightVector) -> Result<Stratification> {
    let w = v.weights();
    check_subsets(w.len())?;
    let strata = (0u32..1 << w.len())
        .map(|mask| {
            let set = IndexSet(mask);
            let label = StratumLabel::ShellPiece(set);
            let g = abs_gcd(w, set);
            let isotropy = IsotropyClass::roots_of_unity(g);
            if !shell_meets(w, set) {
                Stratum::empty(label, isotropy)
            } else if set.is_empty() {
                Stratum::new(label, 1, isotropy)
            } else if g == 0 {
                Stratum::new(label, 0, isotropy)
            } else {
                Stratum::zeroed(label, isotropy, Localization::ScalarCircle)
            }
        })
        .collect();
    Ok(Stratification {
        source: Source::S1Shell { weights: w.to_vec() },
        strata,
    })
}

fn check_o2_size(rep: &O2Representation) -> Result<()> {
    let total = rep.alphas().len() + rep.det_multiplicity() as usize;
    if total > MAX_SUBSET_COORDS {
        return Err(Error::SubsetBudgetExceeded {
            n: total,
            max: MAX_SUBSET_COORDS,
        });
    }
    Ok(())
}

fn alpha_gcd(rep: &O2Representation, set: IndexSet) -> u64 {
    subset_gcd(rep.alphas(), set.0)
}

fn alphas_coincide(rep: &O2Representation, set: IndexSet) -> bool {
    let mut it = set.members().map(|i| rep.alphas()[i - 1]);
    match it.next() {
        Some(first) => it.all(|a| a == first),
        None => true,
    }
}

/// `(−2)^k` as a plain integer.
fn neg_two_pow(k: u32) -> i64 {
    (-2i64).pow(k)
}

/// Orbit-type pieces of `O(2) ⋉ V` or `O(2) ⋉ V_ℝ`, chosen by `rep.real_points()`.
pub fn stratify_o2_rep(rep: &O2Representation) -> Result<Stratification> {
    if rep.real_points() {
        stratify_o2_real_rep(rep)
    } else {
        stratify_o2_complex_rep(rep)
    }
}

fn expect_real(rep: &O2Representation, real: bool) -> Result<()> {
    if rep.real_points() != real {
        return Err(Error::InvalidParameter(format!(
            "representation has real_points = {}",
            rep.real_points()
        )));
    }
    Ok(())
}

/// Pieces of `O(2) ⋉ V` for a unitary `V`.
pub fn stratify_o2_complex_rep(rep: &O2Representation) -> Result<Stratification> {
    expect_real(rep, false)?;
    check_o2_size(rep)?;
    let n = rep.alphas().len();
    let d = rep.det_multiplicity();
    let scalar = Localization::ScalarCircle;
    let mut strata = vec![Stratum::new(StratumLabel::Origin, 1, IsotropyClass::FullO2)];
    for i in 1..=n {
        let alpha = rep.alphas()[i - 1];
        strata.push(Stratum::new(StratumLabel::O2Xi(i), -1, IsotropyClass::cyclic(alpha)));
    }
    for mask in 1u32..1 << n {
        let set = IndexSet(mask);
        let g = alpha_gcd(rep, set);
        strata.push(Stratum::zeroed(
            StratumLabel::O2XStar(set),
            IsotropyClass::Dihedral(g),
            scalar,
        ));
        if set.len() >= 2 {
            let label = StratumLabel::O2XCross(set);
            strata.push(if alphas_coincide(rep, set) {
                // (0,1) × (C*)^{|I|-1}
                Stratum::new(label, 0, IsotropyClass::cyclic(g))
            } else {
                Stratum::zeroed(label, IsotropyClass::cyclic(g), scalar)
            });
        }
        strata.push(Stratum::zeroed(
            StratumLabel::O2XPlain(set),
            IsotropyClass::cyclic(g),
            scalar,
        ));
    }
    for jmask in 1u32..1 << d {
        let jset = IndexSet(jmask);
        strata.push(Stratum::zeroed(
            StratumLabel::O2YJ(jset),
            IsotropyClass::CircleSO2,
            scalar,
        ));
        for mask in 1u32..1 << n {
            let set = IndexSet(mask);
            let g = alpha_gcd(rep, set);
            strata.push(Stratum::zeroed(
                StratumLabel::O2XIJ(set, jset),
                IsotropyClass::cyclic(g),
                scalar,
            ));
        }
    }
    Ok(Stratification {
        source: Source::O2Rep {
            alphas: rep.alphas().to_vec(),
            d,
        },
        strata,
    })
}

/// Pieces of `O(2) ⋉ V_ℝ`.
pub fn stratify_o2_real_rep(rep: &O2Representation) -> Result<Stratification> {
    expect_real(rep, true)?;
    check_o2_size(rep)?;
    let n = rep.alphas().len();
    let d = rep.det_multiplicity();
    let mut strata = vec![Stratum::new(StratumLabel::Origin, 1, IsotropyClass::FullO2)];
    // real points always satisfy |x_{i,1}| = |x_{i,2}|
    for i in 1..=n {
        let alpha = rep.alphas()[i - 1];
        strata.push(Stratum::empty(StratumLabel::O2Xi(i), IsotropyClass::cyclic(alpha)));
    }
    for mask in 1u32..1 << n {
        let set = IndexSet(mask);
        let g = alpha_gcd(rep, set);
        let k = set.len();
        // (0,1) × ((0,1) ⊔ (0,1))^{|I|-1}
        strata.push(Stratum::new(
            StratumLabel::O2XStar(set),
            -neg_two_pow(k - 1),
            IsotropyClass::Dihedral(g),
        ));
        if k >= 2 {
            strata.push(Stratum::empty(StratumLabel::O2XCross(set), IsotropyClass::cyclic(g)));
        }
        let plain = StratumLabel::O2XPlain(set);
        strata.push(match k {
            1 => Stratum::empty(plain, IsotropyClass::Dihedral(g)),
            // (0,1) × C
            2 => Stratum::new(plain, -1, IsotropyClass::Dihedral(g)),
            // carries a C* factor
            _ => Stratum::new(plain, 0, IsotropyClass::Dihedral(g)),
        });
    }
    for jmask in 1u32..1 << d {
        let jset = IndexSet(jmask);
        let kj = jset.len();
        // R × (R*)^{|J|-1}
        strata.push(Stratum::new(
            StratumLabel::O2YJ(jset),
            -neg_two_pow(kj - 1),
            IsotropyClass::CircleSO2,
        ));
        for mask in 1u32..1 << n {
            let set = IndexSet(mask);
            let g = alpha_gcd(rep, set);
            let label = StratumLabel::O2XIJ(set, jset);
            strata.push(if set.len() == 1 {
                // R^2 × (R*)^{|J|-1}
                Stratum::new(label, neg_two_pow(kj - 1), IsotropyClass::cyclic(g))
            } else {
                Stratum::new(label, 0, IsotropyClass::cyclic(g))
            });
        }
    }
    Ok(Stratification {
        source: Source::O2RealRep {
            alphas: rep.alphas().to_vec(),
            d,
        },
        strata,
    })
}

/// `Σ χ(X_i)·χ(G_i\Hom(Γ,G_i))`, skipping strata that cannot contribute.
pub fn evaluate_gamma_euler(s: &Stratification, gamma: &GammaGroup, ctx: &Context) -> Result<EulerValue> {
    let mut total = EulerValue::zero();
    for stratum in s.strata.iter().filter(|s| s.is_live()) {
        let hom = chi_orbit_hom(gamma, &stratum.isotropy, ctx)?;
        total += &stratum.orbit_space_chi * &hom;
    }
    Ok(total)
}
