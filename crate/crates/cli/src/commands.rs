use std::fmt;
use std::time::Instant;

use gamma_euler::groups::{conjugation_orbit_count, count_homs_to_cyclic, enumerate_homs, DEFAULT_BUDGET};
use gamma_euler::oracle::{burnside_orbit_count, o2_tuple_type_counts};
use gamma_euler::strata::{
    evaluate_gamma_euler, stratify_o2_rep, stratify_s1_real_rep, stratify_s1_rep, stratify_s1_shell, Stratification,
};
use gamma_euler::syntax::parse_int_list;
use gamma_euler::verify::{self, Suite};
use gamma_euler::*;
use serde_json::{json, Value};

use crate::output::{inputs, ResultRecord};
use crate::{Format, Subset};

pub const BUDGET_ENV: &str = "GAMMA_EULER_BUDGET";

#[derive(Debug)]
pub enum CliError {
    Core(Error),
    Usage(String),
    /// Two evaluation routes disagreed.
    Mismatch(String),
    /// Some verify checks failed or were skipped.
    Verify {
        failed: usize,
        skipped: usize,
    },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Mismatch(_) => 4,
            CliError::Verify { failed, .. } if *failed > 0 => 4,
            CliError::Verify { .. } => 3,
            CliError::Core(e) => match e {
                Error::InvalidPresentation(_)
                | Error::InvalidGroupTable(_)
                | Error::InvalidParameter(_)
                | Error::Parse(_)
                | Error::RejectsZeroWeight(_)
                | Error::FreeEllOne => 2,
                Error::BudgetExceeded { .. } | Error::SubsetBudgetExceeded { .. } | Error::UnsupportedGamma { .. } => 3,
                Error::NonIntegralBurnside { .. } | Error::InexactDivision(_) => 4,
            },
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Usage(msg) => f.write_str(msg),
            CliError::Mismatch(msg) => write!(f, "cross-check mismatch: {msg}"),
            CliError::Verify { failed, skipped } => write!(f, "verify: {failed} failed, {skipped} skipped"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

fn budget_from_env() -> CliResult<Option<u64>> {
    match std::env::var(BUDGET_ENV) {
        Ok(s) => s
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| CliError::Usage(format!("{BUDGET_ENV} must be a non-negative integer, got {s:?}"))),
        Err(_) => Ok(None),
    }
}

fn context() -> CliResult<Context> {
    Ok(Context::with_budget(budget_from_env()?.unwrap_or(DEFAULT_BUDGET)))
}

/// `GAMMA=VALUE` pairs; the split is at the last `=` so Γ text stays intact.
fn parse_value_table(entries: &[String]) -> CliResult<Vec<(GammaGroup, EulerValue)>> {
    entries
        .iter()
        .map(|entry| {
            let (g, v) = entry
                .rsplit_once('=')
                .ok_or_else(|| CliError::Usage(format!("expected GAMMA=VALUE, got {entry:?}")))?;
            Ok((parse_gamma(g)?, v.trim().parse::<EulerValue>()?))
        })
        .collect()
}

fn require_equal(what: &str, formula: &EulerValue, other: &EulerValue) -> CliResult<()> {
    if formula == other {
        Ok(())
    } else {
        Err(CliError::Mismatch(format!("{what}: formula {formula} vs {other}")))
    }
}

fn strata_checked(
    s: Stratification,
    gamma: &GammaGroup,
    ctx: &Context,
    value: &EulerValue,
) -> CliResult<Stratification> {
    let sum = evaluate_gamma_euler(&s, gamma, ctx)?;
    require_equal("stratum sum", value, &sum)?;
    Ok(s)
}

pub fn s1_rep(
    weights: &str,
    gamma_text: &str,
    real: Option<u32>,
    subset: Option<Subset>,
    strata: bool,
    format: Format,
) -> CliResult<()> {
    let started = Instant::now();
    let w: Vec<i64> = parse_int_list(weights)?;
    let v = WeightVector::new(w.clone());
    let gamma = parse_gamma(gamma_text)?;
    let ctx = context()?;
    if real.is_some() && subset.is_some() {
        return Err(CliError::Usage("--real cannot be combined with --subset".into()));
    }
    if strata && matches!(subset, Some(Subset::Sphere | Subset::Ball)) {
        return Err(CliError::Usage(
            "--strata is available for V, its real form and the shell".into(),
        ));
    }
    let (value, stratification) = match (real, subset) {
        (Some(d), _) => {
            let value = chi_gamma_s1_rep_real(&v, d, &gamma, &ctx)?;
            let s = if strata {
                Some(stratify_s1_real_rep(&v, d)?)
            } else {
                None
            };
            (value, s)
        }
        (None, Some(Subset::Sphere)) => (chi_gamma_s1_sphere(&v, &gamma, &ctx)?, None),
        (None, Some(Subset::Ball)) => (chi_gamma_s1_ball(&v, &gamma), None),
        (None, Some(Subset::Shell)) => {
            let value = chi_gamma_symplectic_quotient(&IsotropyClass::CircleSO2, &gamma, &ctx)?;
            let s = if strata { Some(stratify_s1_shell(&v)?) } else { None };
            (value, s)
        }
        (None, None) => {
            let value = chi_gamma_s1_rep(&v, &gamma, &ctx)?;
            let s = if strata { Some(stratify_s1_rep(&v)?) } else { None };
            (value, s)
        }
    };
    let subset_name = match subset {
        Some(Subset::Sphere) => json!("sphere"),
        Some(Subset::Ball) => json!("ball"),
        Some(Subset::Shell) => json!("shell"),
        None => Value::Null,
    };
    let record_inputs = inputs([
        ("weights", json!(w)),
        ("gamma", json!(format_gamma(&gamma))),
        ("real", json!(real)),
        ("subset", subset_name),
    ]);
    let mut record = match stratification {
        Some(s) => {
            let s = strata_checked(s, &gamma, &ctx, &value)?;
            ResultRecord::new("s1-rep", record_inputs, value, started).with_strata(&s)
        }
        None => ResultRecord::new("s1-rep", record_inputs, value, started),
    };
    record.elapsed_ms = started.elapsed().as_secs_f64() * 1000.0;
    record.print(format);
    Ok(())
}

pub fn o2_rep(
    alphas: &str,
    det: u32,
    gamma_text: &str,
    real: bool,
    strata: bool,
    o2_values: &[String],
    format: Format,
) -> CliResult<()> {
    let started = Instant::now();
    let a: Vec<u64> = parse_int_list(alphas)?;
    let rep = O2Representation::new(a.clone(), det, real)?;
    let gamma = parse_gamma(gamma_text)?;
    let mut ctx = context()?;
    for (g, value) in parse_value_table(o2_values)? {
        ctx = ctx.with_full_o2_value(&g, value);
    }
    let value = chi_gamma_o2(&rep, &gamma, &ctx)?;
    let record_inputs = inputs([
        ("alphas", json!(a)),
        ("det", json!(det)),
        ("gamma", json!(format_gamma(&gamma))),
        ("real", json!(real)),
    ]);
    let mut record = if strata {
        let s = strata_checked(stratify_o2_rep(&rep)?, &gamma, &ctx, &value)?;
        ResultRecord::new("o2-rep", record_inputs, value, started).with_strata(&s)
    } else {
        ResultRecord::new("o2-rep", record_inputs, value, started)
    };
    record.elapsed_ms = started.elapsed().as_secs_f64() * 1000.0;
    record.print(format);
    Ok(())
}

fn parse_group(text: &str, user_values: &[String]) -> CliResult<IsotropyClass> {
    match text.trim() {
        // no closed form for SU(2) is implemented; it is reported as unsupported
        "SU2" => Ok(IsotropyClass::user_supplied("SU2", [])),
        t => match t.parse::<IsotropyClass>()? {
            IsotropyClass::UserSupplied { name, .. } => {
                Ok(IsotropyClass::user_supplied(name, parse_value_table(user_values)?))
            }
            other => Ok(other),
        },
    }
}

pub fn symplectic(group: &str, gamma_text: &str, user_values: &[String], format: Format) -> CliResult<()> {
    let started = Instant::now();
    let g = parse_group(group, user_values)?;
    let gamma = parse_gamma(gamma_text)?;
    let ctx = context()?;
    let value = chi_gamma_symplectic_quotient(&g, &gamma, &ctx)?;
    let record_inputs = inputs([("group", json!(g.tag())), ("gamma", json!(format_gamma(&gamma)))]);
    ResultRecord::new("symplectic", record_inputs, value, started).print(format);
    Ok(())
}

/// Second route for `χ(H\Hom(Γ,H))`, independent of the one `chi_orbit_hom` takes.
fn oracle_value(target: &IsotropyClass, gamma: &GammaGroup, ctx: &Context) -> CliResult<EulerValue> {
    match target {
        IsotropyClass::Cyclic(m) => {
            let h = FiniteGroup::cyclic(*m as usize)?;
            Ok(EulerValue::from(enumerate_homs(gamma, &h, ctx.budget)?.len() as u64))
        }
        IsotropyClass::Dihedral(m) => {
            let h = FiniteGroup::dihedral(*m as usize)?;
            let homs = enumerate_homs(gamma, &h, ctx.budget)?;
            let burnside = burnside_orbit_count(&h, &homs)?;
            require_equal(
                "union-find vs Burnside",
                &conjugation_orbit_count(&h, &homs)?,
                &burnside,
            )?;
            if let Some((ell, family)) = gamma.standard_family() {
                require_equal(
                    "closed form vs Burnside",
                    &chi_orbit_hom_dihedral_closed(*m, ell, family)?,
                    &burnside,
                )?;
            }
            Ok(burnside)
        }
        IsotropyClass::FullO2 => match gamma.standard_family() {
            Some((ell, family)) => {
                let family = if ell == 1 { GammaFamily::FreeAbelian } else { family };
                Ok(o2_tuple_type_counts(ell)?.total(family))
            }
            None => Err(Error::UnsupportedGamma {
                group: "O2".into(),
                gamma: format_gamma(gamma),
            }
            .into()),
        },
        IsotropyClass::Trivial => Ok(count_homs_to_cyclic(gamma, 1)),
        other => Err(CliError::Usage(format!("no oracle route for {other}"))),
    }
}

pub fn hom_orbits(target: &str, gamma_text: &str, oracle: bool, format: Format) -> CliResult<()> {
    let started = Instant::now();
    let h: IsotropyClass = target.parse()?;
    if !matches!(
        h,
        IsotropyClass::Cyclic(_) | IsotropyClass::Dihedral(_) | IsotropyClass::FullO2 | IsotropyClass::Trivial
    ) {
        return Err(CliError::Usage(format!(
            "target must be cyclic:m, dihedral:m or O2, got {target:?}"
        )));
    }
    let gamma = parse_gamma(gamma_text)?;
    let ctx = context()?;
    let value = chi_orbit_hom(&gamma, &h, &ctx)?;
    if oracle {
        require_equal("oracle", &value, &oracle_value(&h, &gamma, &ctx)?)?;
    }
    let record_inputs = inputs([
        ("target", json!(h.tag())),
        ("gamma", json!(format_gamma(&gamma))),
        ("oracle", json!(oracle)),
    ]);
    ResultRecord::new("hom-orbits", record_inputs, value, started).print(format);
    Ok(())
}

pub fn verify(suite: &str, budget: Option<u64>, format: Format) -> CliResult<()> {
    let started = Instant::now();
    let suite: Suite = suite.parse()?;
    let budget = match budget {
        Some(b) => b,
        None => budget_from_env()?.unwrap_or(DEFAULT_BUDGET),
    };
    let report = verify::run(suite, budget);
    match format {
        Format::Json => {
            let out = json!({
                "command": "verify",
                "inputs": { "suite": suite, "budget": budget },
                "passed": report.all_passed(),
                "checks": report.checks,
                "elapsed_ms": started.elapsed().as_secs_f64() * 1000.0,
            });
            println!("{}", serde_json::to_string_pretty(&out).expect("report serializes"));
        }
        Format::Table => print!("{report}"),
    }
    if report.all_passed() {
        Ok(())
    } else {
        Err(CliError::Verify {
            failed: report.failed(),
            skipped: report.skipped(),
        })
    }
}
