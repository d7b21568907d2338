use num_traits::Zero;
use qhurwitz_core::hurwitz::{euler_characteristic, expansion_leading_terms, genus, quantum_hurwitz};
use qhurwitz_core::partitions::{enumerate_partitions, partition_count};
use qhurwitz_core::qalgebra::integer;
use qhurwitz_core::taufn::verify_generating_function;
use qhurwitz_core::weights::{
    default_order, p_of, partition_function_z, profile_weight, pushforward_measure, theta_report,
};
use qhurwitz_core::{CharacterStore, ColengthProfile, Error, Partition, Regime};
use serde_json::{json, Value};

use crate::report::{rational_cells, series_rows, Failure, Report};
use crate::{AsymptArgs, HurwitzArgs, MeasureArgs, TauCheckArgs, WeightsArgs, ZfunArgs};

pub const MAX_HURWITZ_N: usize = 12;
pub const MAX_HURWITZ_D: usize = 8;
pub const MAX_PROFILE_D: usize = 20;
pub const MAX_THETA_N: usize = 12;
pub const MAX_THETA_D: usize = 6;

const SERIES_HEADER: [&str; 3] = ["power", "numerator", "denominator"];

fn guard(what: &'static str, value: usize, limit: usize) -> Result<(), Failure> {
    if value > limit {
        return Err(Error::GuardExceeded { what, value, limit }.into());
    }
    Ok(())
}

fn positive_d(d: usize) -> Result<(), Failure> {
    if d == 0 {
        return Err(Failure::Invalid("d must be at least 1".into()));
    }
    Ok(())
}

fn q_order(requested: Option<usize>, d: usize, min: usize) -> Result<usize, Failure> {
    let order = requested.unwrap_or_else(|| default_order(d));
    if order < min {
        return Err(Failure::Invalid(format!("--q-order must be at least {min}, got {order}")));
    }
    Ok(order)
}

fn check_weight(name: &str, p: &Partition, n: usize) -> Result<(), Failure> {
    if p.weight() != n {
        return Err(Failure::Invalid(format!("{name} = {p} is not a partition of n = {n}")));
    }
    Ok(())
}

fn warnings(regime: Regime) -> Value {
    match regime {
        Regime::SmallN => {
            log::warn!("n < 2d: n-small regime, stable-range statements do not apply");
            json!(["n-small regime"])
        }
        Regime::Stable => json!([]),
    }
}

fn to_json<T: serde::Serialize>(value: &T) -> Value {
    serde_json::to_value(value).expect("report types serialize to JSON")
}

pub fn hurwitz(store: &CharacterStore, a: &HurwitzArgs) -> Result<Report, Failure> {
    guard("n", a.n, MAX_HURWITZ_N)?;
    guard("d", a.d, MAX_HURWITZ_D)?;
    check_weight("mu", &a.mu, a.n)?;
    check_weight("nu", &a.nu, a.n)?;
    let order = q_order(a.q_order, a.d, 1)?;
    let table = store.table(a.n)?;
    let result = quantum_hurwitz(&table, a.d, &a.mu, &a.nu, order)?;
    let mut report = Report::new(
        "hurwitz",
        json!({ "result": to_json(&result), "warnings": warnings(result.regime) }),
        SERIES_HEADER.to_vec(),
    );
    report.csv_rows = series_rows(&[], &result.series);
    Ok(report)
}

pub fn weights(a: &WeightsArgs) -> Result<Report, Failure> {
    positive_d(a.d)?;
    guard("d", a.d, MAX_PROFILE_D)?;
    let order = q_order(a.q_order, a.d, 1)?;
    let lambdas = match &a.lambda {
        Some(l) => {
            check_weight("lambda", l, a.d)?;
            vec![l.clone()]
        }
        None => enumerate_partitions(a.d),
    };
    let mut entries = Vec::new();
    let mut rows = Vec::new();
    for lambda in lambdas {
        let w = profile_weight(&ColengthProfile::new(lambda.clone())?, order);
        rows.extend(series_rows(&[lambda.to_string()], &w));
        entries.push(json!({ "lambda": lambda, "p": p_of(&lambda), "weight": w }));
    }
    let mut report = Report::new(
        "weights",
        json!({ "d": a.d, "q_order": order, "weights": entries }),
        vec!["lambda", "power", "numerator", "denominator"],
    );
    report.csv_rows = rows;
    Ok(report)
}

pub fn zfun(a: &ZfunArgs) -> Result<Report, Failure> {
    positive_d(a.d)?;
    guard("d", a.d, MAX_PROFILE_D)?;
    let order = q_order(a.q_order, a.d, a.d + 2)?;
    let z = partition_function_z(a.d, order)?;
    let expected = (partition_count(a.d), partition_count(a.d - 1));
    let leading = (z.coeff(a.d), z.coeff(a.d + 1));
    let passed = (0..a.d).all(|j| z.coeff(j).is_zero())
        && leading.0 == integer(expected.0 as i64)
        && leading.1 == integer(expected.1 as i64);
    let mut report = Report::new(
        "zfun",
        json!({
            "d": a.d,
            "series": z,
            "display": z.to_string(),
            "leading": [leading.0.to_string(), leading.1.to_string()],
            "expected_leading": [expected.0.to_string(), expected.1.to_string()],
            "verdict": if passed { "pass" } else { "fail" },
        }),
        SERIES_HEADER.to_vec(),
    );
    report.csv_rows = series_rows(&[], &z);
    report.passed = passed;
    Ok(report)
}

pub fn measure(a: &MeasureArgs) -> Result<Report, Failure> {
    positive_d(a.d)?;
    guard("d", a.d, MAX_PROFILE_D)?;
    let push = pushforward_measure(a.d, &a.q)?;
    let mut rows: Vec<Vec<String>> = push
        .support
        .iter()
        .map(|e| {
            let [num, den] = rational_cells(&e.prob);
            vec!["pushforward".into(), e.lambda.to_string(), num, den]
        })
        .collect();
    let mut body = json!({
        "d": a.d,
        "q": a.q.to_string(),
        "pushforward": to_json(&push),
        "pushforward_total": push.total().to_string(),
    });
    if let Some(n) = a.n {
        guard("n", n, MAX_THETA_N)?;
        guard("d", a.d, MAX_THETA_D)?;
        let theta = theta_report(n, a.d, &a.q)?;
        for g in &theta.groups {
            for c in &g.configs {
                let key = c.profiles.iter().map(|p| format!("({p})")).collect::<String>();
                let [num, den] = rational_cells(&c.prob);
                rows.push(vec!["theta".into(), key, num, den]);
            }
        }
        body["theta"] = to_json(&theta);
        body["theta_total"] = theta.total().to_string().into();
        body["warnings"] = warnings(Regime::of(n, a.d));
    }
    let mut report = Report::new("measure", body, vec!["measure", "key", "numerator", "denominator"]);
    report.csv_rows = rows;
    Ok(report)
}

pub fn tau_check(store: &CharacterStore, a: &TauCheckArgs) -> Result<Report, Failure> {
    let r = verify_generating_function(store, a.n_max, a.d_max)?;
    let mut report = Report::new(
        "tau-check",
        json!({ "report": to_json(&r), "verdict": if r.all_match() { "pass" } else { "fail" } }),
        vec!["n", "d", "mu", "nu", "identically_zero", "verdict"],
    );
    report.csv_rows = r
        .entries
        .iter()
        .map(|e| {
            vec![
                e.n.to_string(),
                e.d.to_string(),
                e.mu.to_string(),
                e.nu.to_string(),
                e.identically_zero.to_string(),
                if e.matches { "pass" } else { "fail" }.to_string(),
            ]
        })
        .collect();
    report.passed = r.all_match();
    Ok(report)
}

pub fn asympt(store: &CharacterStore, a: &AsymptArgs) -> Result<Report, Failure> {
    if a.d < 2 {
        return Err(Failure::Invalid(format!("the two-term expansion needs d >= 2, got d = {}", a.d)));
    }
    guard("n", a.n, MAX_HURWITZ_N)?;
    guard("d", a.d, MAX_HURWITZ_D)?;
    check_weight("mu", &a.mu, a.n)?;
    check_weight("nu", &a.nu, a.n)?;
    let table = store.table(a.n)?;
    let lt = expansion_leading_terms(&table, a.d, &a.mu, &a.nu)?;
    let mut report = Report::new(
        "asympt",
        json!({
            "mu": a.mu,
            "nu": a.nu,
            "result": to_json(&lt),
            "euler_characteristic": euler_characteristic(a.n, a.d),
            "genus": genus(a.n, a.d),
            "verdict": if lt.matches { "pass" } else { "fail" },
            "warnings": warnings(lt.regime),
        }),
        vec!["quantity", "numerator", "denominator"],
    );
    report.csv_rows = [("a", &lt.a), ("b", &lt.b), ("series_q_d", &lt.series_q_d), ("series_q_d1", &lt.series_q_d1)]
        .into_iter()
        .map(|(name, v)| {
            let [num, den] = rational_cells(v);
            vec![name.to_string(), num, den]
        })
        .collect();
    report.passed = lt.matches;
    Ok(report)
}
