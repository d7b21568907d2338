//! Weighted and quantum double Hurwitz numbers.
//!
//! ```text
//! H^d(μ, ν) = Σ_k Σ_{(μ^(1), …, μ^(k)), Σ ℓ*(μ^(j)) = d, ℓ*(μ^(j)) ≥ 1}
//!                 W(μ^(1), …, μ^(k)) · H(μ^(1), …, μ^(k), μ, ν)
//! ```
//!
//! The sum runs over ordered tuples. `W` only depends on the colength profile
//! `λ`, so the tuples are enumerated profile by profile: for each `λ ⊢ d`,
//! each distinct ordering of its parts, and each choice of partitions of `n`
//! with those colengths. The profile's weight is computed once and multiplies
//! the accumulated sum of pure Hurwitz numbers.

use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partitions::{distinct_orderings, enumerate_partitions, monomial_sym, with_colength_unchecked, Partition};
use crate::qalgebra::{serialize_rational, CoefficientRing, QSeries};
use crate::symgroup::{frobenius_hurwitz, CharTable};
use crate::weights::{
    check_q, ordering_share, partition_function_for_n_at, profile_weight, profile_weight_at, ColengthProfile,
};

/// Whether `n` is large enough (`n ≥ 2d`) for the stable-range statements.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Regime {
    #[serde(rename = "stable")]
    Stable,
    #[serde(rename = "n-small regime")]
    SmallN,
}

impl Regime {
    pub fn of(n: usize, d: usize) -> Self {
        if n >= 2 * d {
            Regime::Stable
        } else {
            Regime::SmallN
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProfileContribution {
    pub lambda: Partition,
    /// Weight of one ordered configuration with this profile.
    pub weight: QSeries,
    /// Sum of `H(μ^(1), …, μ^(k), μ, ν)` over the ordered configurations.
    #[serde(serialize_with = "serialize_rational")]
    pub hurwitz_sum: BigRational,
    pub contribution: QSeries,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuantumHurwitzResult {
    pub d: usize,
    pub n: usize,
    pub mu: Partition,
    pub nu: Partition,
    pub regime: Regime,
    pub series: QSeries,
    pub breakdown: Vec<ProfileContribution>,
}

fn check_pair(mu: &Partition, nu: &Partition, table: &CharTable) -> Result<usize> {
    if mu.weight() != nu.weight() {
        return Err(Error::WeightMismatch { expected: mu.weight(), found: nu.weight() });
    }
    if table.n() != mu.weight() {
        return Err(Error::WeightMismatch { expected: table.n(), found: mu.weight() });
    }
    Ok(mu.weight())
}

/// Sum of `H(μ^(1), …, μ^(k), μ, ν)` over all ordered tuples of partitions of
/// `n` whose colengths, sorted, form `λ`. The empty `λ` gives `H(μ, ν)`.
pub fn profile_hurwitz_sum(
    table: &CharTable,
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
) -> Result<BigRational> {
    let n = check_pair(mu, nu, table)?;
    let mut total = BigRational::zero();
    for composition in distinct_orderings(lambda) {
        let choices: Vec<Vec<Partition>> = composition.iter().map(|&c| with_colength_unchecked(n, c)).collect();
        if choices.iter().any(Vec::is_empty) {
            continue;
        }
        let mut err = None;
        crate::weights::for_each_product(&choices, &mut |tuple: &[Partition]| {
            if err.is_some() {
                return;
            }
            let mut config = tuple.to_vec();
            config.push(mu.clone());
            config.push(nu.clone());
            match frobenius_hurwitz(table, &config) {
                Ok(h) => total += h,
                Err(e) => err = Some(e),
            }
        });
        if let Some(e) = err {
            return Err(e);
        }
    }
    Ok(total)
}

/// `H^d_{E'(q)}(μ, ν)` to the given series order, with its per-profile
/// breakdown. `d = 0` yields the constant `H(μ, ν) = δ_{μν} / z_μ`.
pub fn quantum_hurwitz(
    table: &CharTable,
    d: usize,
    mu: &Partition,
    nu: &Partition,
    order: usize,
) -> Result<QuantumHurwitzResult> {
    let n = check_pair(mu, nu, table)?;
    let regime = Regime::of(n, d);
    if regime == Regime::SmallN {
        log::debug!("n = {n} < 2d = {}: stable-range statements do not apply", 2 * d);
    }
    let breakdown = enumerate_partitions(d)
        .into_par_iter()
        .map(|lambda| -> Result<ProfileContribution> {
            let hurwitz_sum = profile_hurwitz_sum(table, &lambda, mu, nu)?;
            let weight = if lambda.is_empty() {
                QSeries::one(order)
            } else {
                let profile = ColengthProfile::new(lambda.clone())?;
                profile_weight(&profile, order).scale(&ordering_share(&lambda))
            };
            let contribution = weight.scale(&hurwitz_sum);
            Ok(ProfileContribution { lambda, weight, hurwitz_sum, contribution })
        })
        .collect::<Result<Vec<_>>>()?;
    let series = breakdown.iter().fold(QSeries::zero(order), |acc, c| &acc + &c.contribution);
    Ok(QuantumHurwitzResult { d, n, mu: mu.clone(), nu: nu.clone(), regime, series, breakdown })
}

/// `H^d_G(μ, ν)` for `G(z) = ∏_i (1 + c_i z)` with a finite list of weight
/// parameters, over any coefficient ring. `unit` fixes the ring element `1`
/// (and the series order when the ring is [`QSeries`]).
pub fn weighted_hurwitz_general<T: CoefficientRing>(
    table: &CharTable,
    c: &[T],
    unit: &T,
    d: usize,
    mu: &Partition,
    nu: &Partition,
) -> Result<T> {
    check_pair(mu, nu, table)?;
    let mut total = unit.zero_like();
    for lambda in enumerate_partitions(d) {
        let m = monomial_sym(&lambda, c, unit);
        if m.is_zero_value() {
            continue;
        }
        let factor = profile_hurwitz_sum(table, &lambda, mu, nu)? * ordering_share(&lambda);
        total = total.add_ref(&m.scale(&factor));
    }
    Ok(total)
}

/// The two leading coefficients of `H^d_{E'(q)}(μ, ν)` computed from pure
/// Hurwitz numbers alone, next to the coefficients read off the series.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LeadingTerms {
    pub d: usize,
    pub n: usize,
    pub regime: Regime,
    /// `Σ_{ℓ*(μ^(1)) = d} H(μ^(1), μ, ν)`.
    #[serde(serialize_with = "serialize_rational")]
    pub a: BigRational,
    /// `Σ_{ℓ*(μ^(1)) = d-1, ℓ*(μ^(2)) = 1} H(μ^(1), μ^(2), μ, ν)`.
    #[serde(serialize_with = "serialize_rational")]
    pub b: BigRational,
    #[serde(serialize_with = "serialize_rational")]
    pub series_q_d: BigRational,
    #[serde(serialize_with = "serialize_rational")]
    pub series_q_d1: BigRational,
    pub matches: bool,
}

impl LeadingTerms {
    pub fn check(&self) -> Result<()> {
        if self.matches {
            return Ok(());
        }
        Err(Error::Verification {
            what: format!("leading terms of H^{} at n = {}", self.d, self.n),
            expected: format!("({}, {})", self.a, self.b),
            computed: format!("({}, {})", self.series_q_d, self.series_q_d1),
        })
    }
}

fn single_profile_sum(table: &CharTable, d: usize, mu: &Partition, nu: &Partition) -> Result<BigRational> {
    let n = table.n();
    let mut total = BigRational::zero();
    for p1 in with_colength_unchecked(n, d) {
        total += frobenius_hurwitz(table, &[p1, mu.clone(), nu.clone()])?;
    }
    Ok(total)
}

fn pair_profile_sum(table: &CharTable, d: usize, mu: &Partition, nu: &Partition) -> Result<BigRational> {
    let n = table.n();
    let mut total = BigRational::zero();
    for p1 in with_colength_unchecked(n, d - 1) {
        for p2 in with_colength_unchecked(n, 1) {
            total += frobenius_hurwitz(table, &[p1.clone(), p2, mu.clone(), nu.clone()])?;
        }
    }
    Ok(total)
}

/// Computes `A` and `B` and compares them with the `q^d` and `q^{d+1}`
/// coefficients of [`quantum_hurwitz`]. Requires `d ≥ 2`.
pub fn expansion_leading_terms(table: &CharTable, d: usize, mu: &Partition, nu: &Partition) -> Result<LeadingTerms> {
    if d < 2 {
        return Err(Error::Precondition(format!("the two-term expansion needs d >= 2, got d = {d}")));
    }
    let n = check_pair(mu, nu, table)?;
    let a = single_profile_sum(table, d, mu, nu)?;
    let b = pair_profile_sum(table, d, mu, nu)?;
    let series = quantum_hurwitz(table, d, mu, nu, d + 2)?.series;
    let series_q_d = series.coeff(d);
    let series_q_d1 = series.coeff(d + 1);
    let matches = a == series_q_d && b == series_q_d1 && (0..d).all(|j| series.coeff(j).is_zero());
    Ok(LeadingTerms { d, n, regime: Regime::of(n, d), a, b, series_q_d, series_q_d1, matches })
}

/// `⟨H(·, …, ·, μ, ν)⟩ = H^d_{E'(q)}(μ, ν) / Z`, exactly at rational `q`.
///
/// `Z` is the partition function over `𝔐^{(n)}_d` for this `n`.
pub fn weighted_expectation(
    table: &CharTable,
    d: usize,
    mu: &Partition,
    nu: &Partition,
    q: &BigRational,
) -> Result<BigRational> {
    check_q(q)?;
    let n = check_pair(mu, nu, table)?;
    if d == 0 {
        return Err(Error::Precondition("the expectation needs d >= 1".into()));
    }
    let mut numerator = BigRational::zero();
    for lambda in enumerate_partitions(d) {
        let h = profile_hurwitz_sum(table, &lambda, mu, nu)?;
        if h.is_zero() {
            continue;
        }
        let w = profile_weight_at(&ColengthProfile::new(lambda.clone())?, q)?;
        numerator += h * w * ordering_share(&lambda);
    }
    let z = partition_function_for_n_at(n, d, q)?;
    Ok(numerator / z)
}

/// `lim_{q→0⁺}` of [`weighted_expectation`]: `A / |𝔐^{(n)}_{d,1}|`, which is
/// `A / p(d)` once `n ≥ 2d`.
pub fn expectation_zero_temperature_limit(
    table: &CharTable,
    d: usize,
    mu: &Partition,
    nu: &Partition,
) -> Result<BigRational> {
    let n = check_pair(mu, nu, table)?;
    let singles = with_colength_unchecked(n, d).len();
    if d == 0 || singles == 0 {
        return Err(Error::Precondition(format!("no single profile of colength {d} exists for n = {n}")));
    }
    let a = single_profile_sum(table, d, mu, nu)?;
    Ok(a / BigRational::from_integer(singles.into()))
}

/// Riemann–Hurwitz: `χ = 2n - d`.
pub fn euler_characteristic(n: usize, d: usize) -> i64 {
    2 * n as i64 - d as i64
}

/// `g = (2 - χ) / 2` when `χ` is even.
pub fn genus(n: usize, d: usize) -> Option<i64> {
    let chi = euler_characteristic(n, d);
    (chi % 2 == 0).then_some((2 - chi) / 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qalgebra::{integer, rational};
    use crate::symgroup::brute_force_hurwitz;
    use crate::weights::{enumerate_configs, partition_function_z};
    use num_traits::Signed;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn parity_blocked_degree_one() {
        let t = CharTable::compute(3);
        let r = quantum_hurwitz(&t, 1, &p("1,1,1"), &p("1,1,1"), 5).unwrap();
        assert!(r.series.is_zero());
        assert_eq!(r.regime, Regime::Stable);
        let r = quantum_hurwitz(&t, 2, &p("3"), &p("3"), 5).unwrap();
        assert_eq!(r.regime, Regime::SmallN);
    }

    #[test]
    fn degree_two_in_s3() {
        let t = CharTable::compute(3);
        let id = p("1,1,1");
        let r = quantum_hurwitz(&t, 2, &id, &id, 6).unwrap();
        // only ((2,1),(2,1)) contributes: w(1,1) · H((2,1),(2,1)) = (q³ + q⁴ + 2q⁵) / 2
        assert_eq!(brute_force_hurwitz(3, &[p("2,1"), p("2,1"), id.clone(), id.clone()]).unwrap(), rational(1, 2));
        assert_eq!(
            r.series,
            QSeries::from_coeffs(
                vec![integer(0), integer(0), integer(0), rational(1, 2), rational(1, 2), integer(1)],
                6
            )
        );

        let h = p("2,1");
        let r = quantum_hurwitz(&t, 2, &h, &h, 6).unwrap();
        assert_eq!(r.series.coeff(2), integer(1));
        assert_eq!(r.series.valuation(), Some(2));
    }

    #[test]
    fn breakdown_sums_to_series() {
        let t = CharTable::compute(4);
        let r = quantum_hurwitz(&t, 3, &p("2,1,1"), &p("3,1"), 7).unwrap();
        let sum = r.breakdown.iter().fold(QSeries::zero(7), |acc, c| &acc + &c.contribution);
        assert_eq!(sum, r.series);
        assert_eq!(r.breakdown.len(), 3);
    }

    #[test]
    fn degree_zero_is_cauchy_kernel() {
        let t = CharTable::compute(4);
        for mu in t.partitions() {
            for nu in t.partitions() {
                let r = quantum_hurwitz(&t, 0, mu, nu, 3).unwrap();
                let expected = if mu == nu { rational(1, mu.z_order() as i64) } else { integer(0) };
                assert_eq!(r.series, QSeries::constant(expected, 3));
            }
        }
    }

    #[test]
    fn symmetric_and_parity() {
        let t = CharTable::compute(4);
        for d in 1..=4 {
            for mu in t.partitions() {
                for nu in t.partitions() {
                    let a = quantum_hurwitz(&t, d, mu, nu, d + 3).unwrap().series;
                    let b = quantum_hurwitz(&t, d, nu, mu, d + 3).unwrap().series;
                    assert_eq!(a, b);
                    assert!((0..d).all(|j| a.coeff(j).is_zero()));
                    if (d + mu.colength() + nu.colength()) % 2 == 1 {
                        assert!(a.is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn summing_over_configs_directly() {
        // Σ over 𝔐^{(n)}_d of W · H(config, μ, ν), one configuration at a time.
        let t = CharTable::compute(4);
        let (mu, nu) = (p("2,2"), p("2,1,1"));
        for d in 1..=3 {
            let order = d + 4;
            let mut direct = QSeries::zero(order);
            for config in enumerate_configs(4, d) {
                let mut full = config.profiles().to_vec();
                full.push(mu.clone());
                full.push(nu.clone());
                let h = frobenius_hurwitz(&t, &full).unwrap();
                direct = &direct + &crate::weights::config_weight(&config, order).scale(&h);
            }
            assert_eq!(quantum_hurwitz(&t, d, &mu, &nu, order).unwrap().series, direct);
        }
    }

    #[test]
    fn general_weights() {
        let t = CharTable::compute(3);
        let (mu, nu) = (p("2,1"), p("2,1"));
        let zeros = vec![integer(0); 4];
        assert_eq!(weighted_hurwitz_general(&t, &zeros, &integer(1), 2, &mu, &nu).unwrap(), integer(0));

        // one nonzero parameter: only single profiles survive
        let tval = rational(3, 7);
        let single = [tval.clone()];
        let got = weighted_hurwitz_general(&t, &single, &integer(1), 2, &mu, &nu).unwrap();
        let expected = num_traits::pow(tval, 2) * single_profile_sum(&t, 2, &mu, &nu).unwrap();
        assert_eq!(got, expected);
    }

    #[test]
    fn general_weights_at_quantum_specialization() {
        let t = CharTable::compute(3);
        let order = 5;
        let c: Vec<QSeries> = (1..=4).map(|i| QSeries::monomial(i, integer(1), order)).collect();
        for mu in t.partitions() {
            for nu in t.partitions() {
                let general = weighted_hurwitz_general(&t, &c, &QSeries::one(order), 2, mu, nu).unwrap();
                let quantum = quantum_hurwitz(&t, 2, mu, nu, order).unwrap().series;
                assert_eq!(general, quantum, "{mu:?} {nu:?}");
            }
        }
    }

    #[test]
    fn leading_terms_n4_d2() {
        let t = CharTable::compute(4);
        let id = p("1,1,1,1");
        let lt = expansion_leading_terms(&t, 2, &id, &id).unwrap();
        assert_eq!(lt.a, integer(0));
        assert!(lt.matches);
        for mu in t.partitions() {
            for nu in t.partitions() {
                expansion_leading_terms(&t, 2, mu, nu).unwrap().check().unwrap();
            }
        }
        assert!(expansion_leading_terms(&t, 1, &id, &id).is_err());
    }

    #[test]
    fn expectation_and_its_limit() {
        let t = CharTable::compute(4);
        let mu = p("2,1,1");
        let e = weighted_expectation(&t, 2, &mu, &mu, &rational(1, 10)).unwrap();
        // numerator and denominator evaluated independently
        let num = quantum_hurwitz(&t, 2, &mu, &mu, 40).unwrap().series.eval(&rational(1, 10));
        let den = partition_function_z(2, 40).unwrap().eval(&rational(1, 10));
        let approx = num / den;
        assert!((e.clone() - approx).abs() < rational(1, 1_000_000_000));

        let limit = expectation_zero_temperature_limit(&t, 2, &mu, &mu).unwrap();
        let a = expansion_leading_terms(&t, 2, &mu, &mu).unwrap().a;
        assert_eq!(limit, a / integer(2));
        let close = weighted_expectation(&t, 2, &mu, &mu, &rational(1, 1_000_000)).unwrap();
        assert!((close - &limit).abs() < rational(1, 10_000));

        assert!(matches!(weighted_expectation(&t, 2, &mu, &mu, &integer(2)), Err(Error::QOutOfRange(_))));
    }

    #[test]
    fn expectation_of_parity_blocked_pair_is_zero() {
        let t = CharTable::compute(4);
        let (mu, nu) = (p("2,1,1"), p("1,1,1,1"));
        // d + ℓ*(μ) + ℓ*(ν) = 2 + 1 + 0 odd
        for q in [rational(1, 10), rational(1, 2), rational(9, 10)] {
            assert_eq!(weighted_expectation(&t, 2, &mu, &nu, &q).unwrap(), integer(0));
        }
    }

    #[test]
    fn riemann_hurwitz() {
        assert_eq!(euler_characteristic(1, 0), 2);
        assert_eq!(euler_characteristic(3, 4), 2);
        assert_eq!(genus(3, 4), Some(0));
        assert_eq!(euler_characteristic(2, 2), 2);
        assert_eq!(genus(3, 3), None);
    }

    #[test]
    fn mismatched_weights_rejected() {
        let t = CharTable::compute(3);
        assert!(quantum_hurwitz(&t, 2, &p("2,1"), &p("2,2"), 5).is_err());
        assert!(quantum_hurwitz(&t, 2, &p("2,2"), &p("2,2"), 5).is_err());
    }
}
