//! Content products and power-sum coefficients of the hypergeometric
//! τ-function
//!
//! ```text
//! τ(t, s) = Σ_λ r_λ s_λ(t) s_λ(s),   r_λ = ∏_{(i,j) ∈ λ} G(β (j - i)).
//! ```
//!
//! With `s_λ = Σ_μ χ_λ(μ) p_μ / z_μ`, the coefficient of `p_μ(t) p_ν(s)` is
//! `Σ_{λ ⊢ n} r_λ χ_λ(μ) χ_λ(ν) / (z_μ z_ν)`, and its `β^d` part is the
//! weighted Hurwitz number `H^d_G(μ, ν)`. [`verify_generating_function`]
//! checks this against [`crate::hurwitz::quantum_hurwitz`] coefficient by
//! coefficient.
//!
//! `G` is `E'(q, z) = ∏_{i≥1} (1 + q^i z)` for the quantum case, truncated at
//! `i < q_order` since later factors are `1 + O(q^{q_order})`. Any finite
//! product `∏_i (1 + c_i z)` is accepted by the `_with` variants.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hurwitz::quantum_hurwitz;
use crate::partitions::{enumerate_partitions, Partition};
use crate::qalgebra::{integer, BetaPoly, BetaQPoly, CoefficientRing, QSeries};
use crate::symgroup::{CharTable, CharacterStore};

pub const TAU_CHECK_MAX_N: usize = 6;
pub const TAU_CHECK_MAX_D: usize = 5;

/// `r_λ` for `G = E'(q)`, truncated in `β` and `q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContentProduct {
    pub lambda: Partition,
    pub value: BetaQPoly,
}

/// The weight parameters `c_i = q^i` for `1 ≤ i < q_order`.
pub fn quantum_parameters(q_order: usize) -> Vec<QSeries> {
    (1..q_order).map(|i| QSeries::monomial(i, BigRational::from_integer(1.into()), q_order)).collect()
}

/// `G(β·content) = ∏_i (1 + c_i · content · β)`.
pub fn g_factor_with<T: CoefficientRing>(content: i64, c: &[T], unit: &T, beta_order: usize) -> BetaPoly<T> {
    let one = BetaPoly::one(unit, beta_order);
    if content == 0 {
        return one;
    }
    let k = integer(content);
    c.iter().fold(one, |acc, ci| acc.mul(&BetaPoly::linear(ci.scale(&k), beta_order)))
}

/// `E'(q, β·content)` truncated at `β^{beta_order}` and `q^{q_order}`.
pub fn g_of_betac(content: i64, beta_order: usize, q_order: usize) -> BetaQPoly {
    g_factor_with(content, &quantum_parameters(q_order), &QSeries::one(q_order), beta_order)
}

/// `∏_{cells} G(β·content)` for `G(z) = ∏_i (1 + c_i z)`.
pub fn content_product_with<T: CoefficientRing>(
    lambda: &Partition,
    c: &[T],
    unit: &T,
    beta_order: usize,
) -> BetaPoly<T> {
    let mut factors: HashMap<i64, BetaPoly<T>> = HashMap::new();
    let mut acc = BetaPoly::one(unit, beta_order);
    for cell in lambda.cells() {
        if cell.content == 0 {
            continue;
        }
        let g = factors.entry(cell.content).or_insert_with(|| g_factor_with(cell.content, c, unit, beta_order));
        acc = acc.mul(g);
    }
    acc
}

pub fn content_product(lambda: &Partition, beta_order: usize, q_order: usize) -> ContentProduct {
    let value = content_product_with(lambda, &quantum_parameters(q_order), &QSeries::one(q_order), beta_order);
    ContentProduct { lambda: lambda.clone(), value }
}

fn check_pair(table: &CharTable, mu: &Partition, nu: &Partition) -> Result<()> {
    for p in [mu, nu] {
        if p.weight() != table.n() {
            return Err(Error::WeightMismatch { expected: table.n(), found: p.weight() });
        }
    }
    Ok(())
}

fn schur_to_power_sum(table: &CharTable, lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<BigRational> {
    let chi = table.character(lambda, mu)? * table.character(lambda, nu)?;
    Ok(BigRational::new(BigInt::from(chi), BigInt::from(mu.z_order()) * BigInt::from(nu.z_order())))
}

/// `β^d` coefficient of `Σ_λ r_λ χ_λ(μ) χ_λ(ν) / (z_μ z_ν)` for a given
/// family of `β^d` content-product coefficients.
fn extract<T: CoefficientRing>(
    table: &CharTable,
    coeffs: &[(Partition, T)],
    mu: &Partition,
    nu: &Partition,
    zero: T,
) -> Result<T> {
    let mut total = zero;
    for (lambda, r) in coeffs {
        let w = schur_to_power_sum(table, lambda, mu, nu)?;
        if !w.is_zero() {
            total = total.add_ref(&r.scale(&w));
        }
    }
    Ok(total)
}

fn beta_d_coefficients(n: usize, d: usize, q_order: usize) -> Vec<(Partition, QSeries)> {
    enumerate_partitions(n)
        .into_iter()
        .map(|lambda| {
            let r = content_product(&lambda, d, q_order).value;
            let c = r.coeff(d).cloned().expect("β-order is d");
            (lambda, c)
        })
        .collect()
}

/// Coefficient of `β^d p_μ(t) p_ν(s)` in the `E'(q)` τ-function.
pub fn tau_coefficient(table: &CharTable, mu: &Partition, nu: &Partition, d: usize, q_order: usize) -> Result<QSeries> {
    check_pair(table, mu, nu)?;
    let coeffs = beta_d_coefficients(table.n(), d, q_order);
    extract(table, &coeffs, mu, nu, QSeries::zero(q_order))
}

/// Coefficient of `β^d p_μ(t) p_ν(s)` for `G(z) = ∏_i (1 + c_i z)`.
pub fn tau_coefficient_with<T: CoefficientRing>(
    table: &CharTable,
    c: &[T],
    unit: &T,
    mu: &Partition,
    nu: &Partition,
    d: usize,
) -> Result<T> {
    check_pair(table, mu, nu)?;
    let coeffs: Vec<(Partition, T)> = table
        .partitions()
        .iter()
        .map(|lambda| {
            let r = content_product_with(lambda, c, unit, d);
            (lambda.clone(), r.coeff(d).cloned().expect("β-order is d"))
        })
        .collect();
    extract(table, &coeffs, mu, nu, unit.zero_like())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TauCheckEntry {
    pub n: usize,
    pub d: usize,
    pub mu: Partition,
    pub nu: Partition,
    pub matches: bool,
    pub identically_zero: bool,
    pub tau: QSeries,
    pub hurwitz: QSeries,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TauCheckReport {
    pub n_max: usize,
    pub d_max: usize,
    pub checked: usize,
    pub identically_zero: usize,
    pub mismatches: usize,
    pub entries: Vec<TauCheckEntry>,
}

impl TauCheckReport {
    pub fn all_match(&self) -> bool {
        self.mismatches == 0
    }
}

/// Compares τ-coefficients with quantum Hurwitz numbers for every
/// `1 ≤ n ≤ n_max`, `0 ≤ d ≤ d_max` and every pair `μ, ν ⊢ n`, each at
/// q-order `d + 4`.
pub fn verify_generating_function(store: &CharacterStore, n_max: usize, d_max: usize) -> Result<TauCheckReport> {
    if n_max > TAU_CHECK_MAX_N {
        return Err(Error::GuardExceeded { what: "n_max", value: n_max, limit: TAU_CHECK_MAX_N });
    }
    if d_max > TAU_CHECK_MAX_D {
        return Err(Error::GuardExceeded { what: "d_max", value: d_max, limit: TAU_CHECK_MAX_D });
    }
    let mut entries = Vec::new();
    for n in 1..=n_max {
        let table = store.table(n)?;
        for d in 0..=d_max {
            let q_order = d + 4;
            let coeffs = beta_d_coefficients(n, d, q_order);
            let pairs: Vec<(&Partition, &Partition)> =
                table.partitions().iter().flat_map(|a| table.partitions().iter().map(move |b| (a, b))).collect();
            let mut chunk = pairs
                .par_iter()
                .map(|&(mu, nu)| -> Result<TauCheckEntry> {
                    let tau = extract(&table, &coeffs, mu, nu, QSeries::zero(q_order))?;
                    let hurwitz = quantum_hurwitz(&table, d, mu, nu, q_order)?.series;
                    Ok(TauCheckEntry {
                        n,
                        d,
                        mu: mu.clone(),
                        nu: nu.clone(),
                        matches: tau == hurwitz,
                        identically_zero: tau.is_zero() && hurwitz.is_zero(),
                        tau,
                        hurwitz,
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            entries.append(&mut chunk);
        }
    }
    let mismatches = entries.iter().filter(|e| !e.matches).count();
    for e in entries.iter().filter(|e| !e.matches) {
        log::error!("τ mismatch n={} d={} μ={} ν={}: {} vs {}", e.n, e.d, e.mu, e.nu, e.tau, e.hurwitz);
    }
    Ok(TauCheckReport {
        n_max,
        d_max,
        checked: entries.len(),
        identically_zero: entries.iter().filter(|e| e.identically_zero).count(),
        mismatches,
        entries,
    })
}
