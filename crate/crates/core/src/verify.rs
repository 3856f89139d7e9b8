//! Self-check corpus behind `gamma-euler verify`: every closed form is compared
//! against an independent route.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::euler::EulerValue;
use crate::formulas::{
    chi_gamma_o2, chi_gamma_s1_rep, chi_gamma_s1_rep_real, chi_orbit_hom_dihedral_closed, chi_orbit_hom_o2_closed,
    chi_zl_fl_o2_real_rep, chi_zl_fl_o2_rep, chi_zl_fl_s1, O2Representation, WeightVector,
};
use crate::groups::{
    chi_orbit_hom, conjugation_orbit_count, count_homs_to_cyclic, enumerate_homs, Context, FiniteGroup, GammaFamily,
    GammaGroup, IsotropyClass,
};
use crate::oracle::{burnside_orbit_count, dihedral_tuple_census, o2_tuple_type_counts, weight_recovery_scan};
use crate::strata::{evaluate_gamma_euler, stratify_o2_rep, stratify_s1_real_rep, stratify_s1_rep, stratify_s1_shell};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Groups,
    Formulas,
    Strata,
    All,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "groups" => Ok(Suite::Groups),
            "formulas" => Ok(Suite::Formulas),
            "strata" => Ok(Suite::Strata),
            "all" => Ok(Suite::All),
            _ => Err(Error::Parse(format!("unknown suite '{s}'"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "detail", rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Fail(String),
    /// Could not run within the budget.
    Skipped(String),
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub suite: &'static str,
    pub name: String,
    pub cases: u64,
    pub outcome: Outcome,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn failed(&self) -> usize {
        self.checks
            .iter()
            .filter(|c| matches!(c.outcome, Outcome::Fail(_)))
            .count()
    }

    pub fn skipped(&self) -> usize {
        self.checks
            .iter()
            .filter(|c| matches!(c.outcome, Outcome::Skipped(_)))
            .count()
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.outcome == Outcome::Pass)
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let status = match &c.outcome {
                Outcome::Pass => "PASS".to_string(),
                Outcome::Fail(why) => format!("FAIL  {why}"),
                Outcome::Skipped(why) => format!("SKIP  {why}"),
            };
            writeln!(f, "[{}] {} ({} cases): {}", c.suite, c.name, c.cases, status)?;
        }
        Ok(())
    }
}

/// Accumulates case results; the first mismatch is kept as the failure detail.
struct Runner {
    suite: &'static str,
    name: String,
    cases: u64,
    failure: Option<String>,
    skipped: Option<String>,
}

impl Runner {
    fn new(suite: &'static str, name: impl Into<String>) -> Self {
        Runner {
            suite,
            name: name.into(),
            cases: 0,
            failure: None,
            skipped: None,
        }
    }

    fn eq(&mut self, label: impl FnOnce() -> String, left: Result<EulerValue>, right: Result<EulerValue>) {
        self.cases += 1;
        if self.failure.is_some() {
            return;
        }
        match (left, right) {
            (Ok(a), Ok(b)) if a == b => {}
            (Ok(a), Ok(b)) => self.failure = Some(format!("{}: {a} != {b}", label())),
            (Err(e), _) | (_, Err(e)) => match e {
                Error::BudgetExceeded { .. } | Error::SubsetBudgetExceeded { .. } => {
                    self.skipped.get_or_insert_with(|| format!("{}: {e}", label()));
                }
                e => self.failure = Some(format!("{}: {e}", label())),
            },
        }
    }

    fn truth(&mut self, label: impl FnOnce() -> String, ok: bool) {
        self.cases += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(label());
        }
    }

    fn finish(self) -> Check {
        let outcome = match (self.failure, self.skipped) {
            (Some(f), _) => Outcome::Fail(f),
            (None, Some(s)) => Outcome::Skipped(s),
            (None, None) => Outcome::Pass,
        };
        Check {
            suite: self.suite,
            name: self.name,
            cases: self.cases,
            outcome,
        }
    }
}

fn standard_corpus() -> Vec<GammaGroup> {
    vec![
        GammaGroup::ZPow(1),
        GammaGroup::ZPow(2),
        GammaGroup::Free(2),
        GammaGroup::cyclic(4).expect("valid"),
        // Klein four
        GammaGroup::presented(2, vec![vec![1, 1], vec![2, 2], vec![1, 2, -1, -2]]).expect("valid"),
    ]
}

fn families() -> [GammaFamily; 2] {
    [GammaFamily::FreeAbelian, GammaFamily::Free]
}

fn dihedral_cases() -> impl Iterator<Item = (u64, u32)> {
    (1..=10u64)
        .flat_map(|m| (1..=3u32).map(move |l| (m, l)))
        .chain((1..=4u64).map(|m| (m, 4)))
}

fn groups_suite(budget: u64) -> Vec<Check> {
    let mut closed_vs_brute = Runner::new("groups", "dihedral closed form = union-find = Burnside");
    let mut census = Runner::new("groups", "dihedral tuple census totals");
    for (m, ell) in dihedral_cases() {
        let h = match FiniteGroup::dihedral(m as usize) {
            Ok(h) => h,
            Err(e) => {
                closed_vs_brute.truth(|| format!("D_{}: {e}", 2 * m), false);
                continue;
            }
        };
        let c = dihedral_tuple_census(m as usize, ell, budget);
        if let Ok(c) = &c {
            census.truth(
                || format!("m={m} l={ell}: raw total"),
                c.raw_total() == Some((2 * m).pow(ell)),
            );
        }
        for family in families() {
            let gamma = family.group(ell).expect("rank >= 1");
            let closed = chi_orbit_hom_dihedral_closed(m, ell, family);
            let homs = enumerate_homs(&gamma, &h, budget);
            let label = || format!("m={m} {family}{ell}");
            closed_vs_brute.eq(
                label,
                closed.clone(),
                homs.clone().and_then(|hs| conjugation_orbit_count(&h, &hs)),
            );
            closed_vs_brute.eq(label, closed.clone(), homs.and_then(|hs| burnside_orbit_count(&h, &hs)));
            census.eq(label, closed, c.clone().map(|c| c.total(family)));
        }
    }

    let mut cyclic = Runner::new("groups", "abelianization count = enumeration (cyclic targets)");
    for gamma in standard_corpus() {
        for m in 1..=6u64 {
            let h = FiniteGroup::cyclic(m as usize).expect("m >= 1");
            cyclic.eq(
                || format!("{gamma:?} -> Z/{m}"),
                Ok(count_homs_to_cyclic(&gamma, m)),
                enumerate_homs(&gamma, &h, budget).map(|hs| EulerValue::from(hs.len() as u64)),
            );
        }
    }
    vec![closed_vs_brute.finish(), census.finish(), cyclic.finish()]
}

fn formulas_suite() -> Vec<Check> {
    let mut o2 = Runner::new("formulas", "O(2) census = closed form (l <= 8)");
    for ell in 1..=8u32 {
        let c = o2_tuple_type_counts(ell);
        for family in families() {
            if ell == 1 && family == GammaFamily::Free {
                continue;
            }
            o2.eq(
                || format!("{family}{ell}"),
                chi_orbit_hom_o2_closed(ell, family),
                c.clone().map(|c| c.total(family)),
            );
        }
    }

    let mut scan = Runner::new("formulas", "weight recovery from chi_{Z^l}");
    match weight_recovery_scan(3, 5) {
        Ok(found) => scan.truth(|| format!("{} collisions", found.len()), found.is_empty()),
        Err(e) => scan.truth(|| e.to_string(), false),
    }

    let ctx = Context::default();
    let mut circle = Runner::new("formulas", "circle general formula = Z^l/F_l specialization");
    let mut real = Runner::new("formulas", "real circle formula = (-1)^(d+1) power sum");
    let weights = [vec![2, 3], vec![1, -1, 4], vec![-6, 2, 3], vec![5], vec![1, 2, 2, -3]];
    for w in &weights {
        let v = WeightVector::new(w.clone());
        for ell in 1..=3 {
            for family in families() {
                let gamma = family.group(ell).expect("rank >= 1");
                circle.eq(
                    || format!("{w:?} {family}{ell}"),
                    chi_gamma_s1_rep(&v, &gamma, &ctx),
                    chi_zl_fl_s1(&v, ell, family, None),
                );
                for d in 0..=3 {
                    real.eq(
                        || format!("{w:?} d={d} {family}{ell}"),
                        chi_gamma_s1_rep_real(&v, d, &gamma, &ctx),
                        chi_zl_fl_s1(&v, ell, family, Some(d)),
                    );
                }
            }
        }
    }

    let mut o2_spec = Runner::new("formulas", "O(2) general formulas = Z^l/F_l specializations");
    for alphas in [vec![1], vec![2, 3], vec![1, 2, 4], vec![3, 3]] {
        for d in 0..=2 {
            for real_points in [false, true] {
                let rep = O2Representation::new(alphas.clone(), d, real_points).expect("alphas positive");
                for ell in 1..=3 {
                    for family in families() {
                        let gamma = family.group(ell).expect("rank >= 1");
                        let special = if real_points {
                            chi_zl_fl_o2_real_rep(&rep, ell, family)
                        } else {
                            chi_zl_fl_o2_rep(&rep, ell, family)
                        };
                        o2_spec.eq(
                            || format!("{alphas:?} d={d} real={real_points} {family}{ell}"),
                            chi_gamma_o2(&rep, &gamma, &ctx),
                            special,
                        );
                    }
                }
            }
        }
    }
    vec![
        o2.finish(),
        scan.finish(),
        circle.finish(),
        real.finish(),
        o2_spec.finish(),
    ]
}

fn strata_suite(budget: u64) -> Vec<Check> {
    let ctx = Context::with_budget(budget);
    let corpus = standard_corpus();
    let mut circle = Runner::new("strata", "circle strata sum = formula (n <= 3, |a| <= 3)");
    let mut real = Runner::new("strata", "real circle strata sum = formula");
    let mut shell = Runner::new("strata", "shell strata sum = chi(S1\\Hom(G,S1))");
    let vectors = all_vectors(3, -3..=3);
    for w in &vectors {
        let v = WeightVector::new(w.clone());
        for gamma in &corpus {
            let label = || format!("{w:?} {gamma:?}");
            circle.eq(
                label,
                stratify_s1_rep(&v).and_then(|s| evaluate_gamma_euler(&s, gamma, &ctx)),
                chi_gamma_s1_rep(&v, gamma, &ctx),
            );
            shell.eq(
                label,
                stratify_s1_shell(&v).and_then(|s| evaluate_gamma_euler(&s, gamma, &ctx)),
                chi_orbit_hom(gamma, &IsotropyClass::CircleSO2, &ctx),
            );
            if w.iter().all(|&a| a != 0) {
                for d in 0..=2 {
                    real.eq(
                        || format!("{w:?} d={d} {gamma:?}"),
                        stratify_s1_real_rep(&v, d).and_then(|s| evaluate_gamma_euler(&s, gamma, &ctx)),
                        chi_gamma_s1_rep_real(&v, d, gamma, &ctx),
                    );
                }
            }
        }
    }

    let mut o2 = Runner::new("strata", "O(2) strata sum = formula (n <= 2, alpha <= 4, d <= 2)");
    let mut alpha_lists: Vec<Vec<u64>> = vec![vec![]];
    for a in 1..=4 {
        alpha_lists.push(vec![a]);
        for b in a..=4 {
            alpha_lists.push(vec![a, b]);
        }
    }
    for alphas in &alpha_lists {
        for d in 0..=2 {
            for real_points in [false, true] {
                let rep = O2Representation::new(alphas.clone(), d, real_points).expect("alphas positive");
                for gamma in &corpus[..3] {
                    o2.eq(
                        || format!("{alphas:?} d={d} real={real_points} {gamma:?}"),
                        stratify_o2_rep(&rep).and_then(|s| evaluate_gamma_euler(&s, gamma, &ctx)),
                        chi_gamma_o2(&rep, gamma, &ctx),
                    );
                }
            }
        }
    }
    vec![circle.finish(), real.finish(), shell.finish(), o2.finish()]
}

/// Every vector of length `<= max_len` with entries in `range`.
fn all_vectors(max_len: usize, range: std::ops::RangeInclusive<i64>) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    let mut layer: Vec<Vec<i64>> = vec![vec![]];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|v| range.clone().map(move |a| [v.as_slice(), &[a]].concat()))
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

/// Runs the selected suite; `budget` bounds every hom enumeration.
pub fn run(suite: Suite, budget: u64) -> VerifyReport {
    let mut checks = Vec::new();
    if matches!(suite, Suite::Groups | Suite::All) {
        checks.extend(groups_suite(budget));
    }
    if matches!(suite, Suite::Formulas | Suite::All) {
        checks.extend(formulas_suite());
    }
    if matches!(suite, Suite::Strata | Suite::All) {
        checks.extend(strata_suite(budget));
    }
    VerifyReport { checks }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::DEFAULT_BUDGET;

    #[test]
    fn suites_pass() {
        for suite in [Suite::Groups, Suite::Formulas, Suite::Strata] {
            let report = run(suite, DEFAULT_BUDGET);
            assert!(report.all_passed(), "{report}");
            assert!(!report.checks.is_empty());
        }
    }

    #[test]
    fn tiny_budget_skips_rather_than_fails() {
        let report = run(Suite::Groups, 10);
        assert_eq!(report.failed(), 0, "{report}");
        assert!(report.skipped() > 0);
    }

    #[test]
    fn suite_names_parse() {
        assert_eq!("all".parse::<Suite>().unwrap(), Suite::All);
        assert!("bogus".parse::<Suite>().is_err());
    }
}
