//! Quantum weights, the partition function and the induced probability
//! measures on branch configurations and on colength profiles.
//!
//! Under the specialization `c_i = q^i` the monomial weight of a colength
//! profile `λ ⊢ d` becomes a sum of products of Bose factors
//!
//! ```text
//! w(λ) = m_λ(q, q², …) = Σ_{distinct orderings a of λ} ∏_j q^{S_j} / (1 - q^{S_j}),
//! S_j = a_1 + … + a_j,
//! ```
//!
//! which is the `1/|aut λ|`-normalized sum over all of `S_{ℓ(λ)}` with the
//! duplicate orderings folded together. Physically `q = exp(-E₀/k_B T)` and
//! each factor is a Bose occupation number at energy `S_j E₀`, so `q → 0⁺`
//! is the zero-temperature limit.
//!
//! An ordered configuration `(μ^(1), …, μ^(k))` carries the weight
//! `W = (|aut λ| / k!) · w(λ)`. The `k!/|aut λ|` distinct orderings of its
//! colengths then add up to exactly `w(λ)` per choice of profiles, which
//! gives `Z_d = Σ_λ p(λ) w(λ)` for `n ≥ 2d` and makes the pushforward onto
//! `λ` equal to `p(λ) w(λ) / Z_d`.
//!
//! Measures are evaluated at exact rational `q` with rational-function Bose
//! factors, so normalization holds exactly rather than up to truncation.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partitions::{
    distinct_orderings, enumerate_partitions, factorial, partition_count, with_colength_unchecked, Partition,
};
use crate::qalgebra::{rational, serialize_rational, QSeries};
use crate::symgroup::BranchConfig;

/// Default series order for degree-`d` computations: two guard terms past the
/// `q^{d+1}` coefficients the expansions are stated to.
pub fn default_order(d: usize) -> usize {
    d + 4
}

/// Partition of `d` recording the colengths of a branch configuration.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct ColengthProfile(Partition);

impl ColengthProfile {
    pub fn new(lambda: Partition) -> Result<Self> {
        if lambda.is_empty() {
            return Err(Error::Precondition("colength profile must be nonempty".into()));
        }
        Ok(ColengthProfile(lambda))
    }

    /// The map `Λ`: sorted colengths of the configuration's profiles.
    pub fn of_config(config: &BranchConfig) -> Self {
        ColengthProfile(config.colength_profile())
    }

    pub fn lambda(&self) -> &Partition {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.weight()
    }
}

/// `|aut λ| / k!`: the share of `w(λ)` carried by one ordering.
pub fn ordering_share(lambda: &Partition) -> BigRational {
    BigRational::new(BigInt::from(lambda.aut_order()), BigInt::from(factorial(lambda.length())))
}

fn prefix_sums(order: &[usize]) -> impl Iterator<Item = usize> + '_ {
    order.iter().scan(0, |acc, &x| {
        *acc += x;
        Some(*acc)
    })
}

/// `w(λ)` as a truncated q-series.
pub fn profile_weight(profile: &ColengthProfile, order: usize) -> QSeries {
    let mut bose: HashMap<usize, QSeries> = HashMap::new();
    let mut total = QSeries::zero(order);
    for arrangement in distinct_orderings(profile.lambda()) {
        let mut term = QSeries::one(order);
        for s in prefix_sums(&arrangement) {
            let f = bose.entry(s).or_insert_with(|| QSeries::bose_factor(s, order));
            term = &term * &*f;
        }
        total = &total + &term;
    }
    total
}

/// Identity-ordering term of `w(λ)`: `(Σ_j j λ_j, 1/|aut λ|)`.
///
/// This is the leading exponent; the full leading coefficient of `w(λ)` can
/// be larger when other orderings tie (e.g. `λ = (1,1)`).
pub fn profile_weight_leading(profile: &ColengthProfile) -> (usize, BigRational) {
    let lambda = profile.lambda();
    let exponent = lambda.parts().iter().enumerate().map(|(j, &p)| (j + 1) * p).sum();
    let coeff = BigRational::new(BigInt::one(), BigInt::from(lambda.aut_order()));
    (exponent, coeff)
}

/// Weight `W` of an ordered configuration as a q-series.
pub fn config_weight(config: &BranchConfig, order: usize) -> QSeries {
    let profile = ColengthProfile::of_config(config);
    profile_weight(&profile, order).scale(&ordering_share(profile.lambda()))
}

/// Checks `0 < q < 1`.
pub fn check_q(q: &BigRational) -> Result<()> {
    if q <= &BigRational::zero() || q >= &BigRational::one() {
        return Err(Error::QOutOfRange(q.to_string()));
    }
    Ok(())
}

fn bose_at(a: usize, q: &BigRational) -> BigRational {
    let qa = num_traits::pow(q.clone(), a);
    &qa / (BigRational::one() - &qa)
}

/// `w(λ)` evaluated exactly at rational `q`.
pub fn profile_weight_at(profile: &ColengthProfile, q: &BigRational) -> Result<BigRational> {
    check_q(q)?;
    let mut bose: HashMap<usize, BigRational> = HashMap::new();
    let mut total = BigRational::zero();
    for arrangement in distinct_orderings(profile.lambda()) {
        let mut term = BigRational::one();
        for s in prefix_sums(&arrangement) {
            term *= &*bose.entry(s).or_insert_with(|| bose_at(s, q));
        }
        total += term;
    }
    Ok(total)
}

/// `W(config)` evaluated exactly at rational `q`.
pub fn config_weight_at(config: &BranchConfig, q: &BigRational) -> Result<BigRational> {
    let profile = ColengthProfile::of_config(config);
    Ok(profile_weight_at(&profile, q)? * ordering_share(profile.lambda()))
}

/// `p(λ) = ∏_j p(λ_j)`.
pub fn p_of(lambda: &Partition) -> u64 {
    lambda.parts().iter().map(|&x| partition_count(x)).product()
}

/// Number of ways to pick, for each part `λ_j` in a fixed order, a partition
/// of `n` with colength `λ_j`. Equals `p(λ)` when `n ≥ 2|λ|`.
pub fn profile_multiplicity(n: usize, lambda: &Partition) -> u64 {
    lambda.parts().iter().map(|&c| with_colength_unchecked(n, c).len() as u64).product()
}

fn check_degree(d: usize) -> Result<()> {
    if d == 0 {
        return Err(Error::Precondition("degree d must be at least 1".into()));
    }
    Ok(())
}

fn profiles(d: usize) -> impl Iterator<Item = ColengthProfile> {
    enumerate_partitions(d).into_iter().map(ColengthProfile)
}

/// `Z_d = Σ_{λ ⊢ d} p(λ) w(λ)`, the stable (`n ≥ 2d`) partition function.
pub fn partition_function_z(d: usize, order: usize) -> Result<QSeries> {
    check_degree(d)?;
    Ok(profiles(d).fold(QSeries::zero(order), |acc, prof| {
        let c = BigRational::from_integer(p_of(prof.lambda()).into());
        &acc + &profile_weight(&prof, order).scale(&c)
    }))
}

/// Partition function over `𝔐^{(n)}_d` for arbitrary `n`, grouped by profile.
pub fn partition_function_z_for_n(n: usize, d: usize, order: usize) -> Result<QSeries> {
    check_degree(d)?;
    Ok(profiles(d).fold(QSeries::zero(order), |acc, prof| {
        let m = profile_multiplicity(n, prof.lambda());
        if m == 0 {
            return acc;
        }
        let c = BigRational::from_integer(m.into());
        &acc + &profile_weight(&prof, order).scale(&c)
    }))
}

/// All ordered configurations in `𝔐^{(n)}_d`, grouped by number of profiles.
pub fn enumerate_configs(n: usize, d: usize) -> Vec<BranchConfig> {
    let mut out = Vec::new();
    for lambda in enumerate_partitions(d) {
        if lambda.is_empty() {
            continue;
        }
        for composition in distinct_orderings(&lambda) {
            let choices: Vec<Vec<Partition>> = composition.iter().map(|&c| with_colength_unchecked(n, c)).collect();
            for_each_product(&choices, &mut |tuple| {
                out.push(BranchConfig::new(tuple.to_vec()).expect("profiles have positive colength"));
            });
        }
    }
    out.sort_by_key(|c| c.k());
    out
}

/// Calls `f` on every element of the cartesian product of `choices`.
pub(crate) fn for_each_product<T: Clone>(choices: &[Vec<T>], f: &mut impl FnMut(&[T])) {
    fn go<T: Clone>(choices: &[Vec<T>], current: &mut Vec<T>, f: &mut impl FnMut(&[T])) {
        match choices.split_first() {
            None => f(current),
            Some((first, rest)) => {
                for item in first {
                    current.push(item.clone());
                    go(rest, current, f);
                    current.pop();
                }
            }
        }
    }
    go(choices, &mut Vec::with_capacity(choices.len()), f);
}

/// Partition function by summing `W` over every configuration of
/// `𝔐^{(n)}_d` individually.
pub fn partition_function_z_direct(n: usize, d: usize, order: usize) -> Result<QSeries> {
    check_degree(d)?;
    Ok(enumerate_configs(n, d).iter().fold(QSeries::zero(order), |acc, c| &acc + &config_weight(c, order)))
}

/// Stable `Z_d` evaluated exactly at `q`.
pub fn partition_function_at(d: usize, q: &BigRational) -> Result<BigRational> {
    check_degree(d)?;
    check_q(q)?;
    let mut z = BigRational::zero();
    for prof in profiles(d) {
        z += profile_weight_at(&prof, q)? * BigRational::from_integer(p_of(prof.lambda()).into());
    }
    Ok(z)
}

/// `Z` over `𝔐^{(n)}_d` evaluated exactly at `q`.
pub fn partition_function_for_n_at(n: usize, d: usize, q: &BigRational) -> Result<BigRational> {
    check_degree(d)?;
    check_q(q)?;
    let mut z = BigRational::zero();
    for prof in profiles(d) {
        let m = profile_multiplicity(n, prof.lambda());
        if m > 0 {
            z += profile_weight_at(&prof, q)? * BigRational::from_integer(m.into());
        }
    }
    Ok(z)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MeasureEntry {
    pub lambda: Partition,
    #[serde(serialize_with = "serialize_rational")]
    pub prob: BigRational,
}

/// Pushforward measure on `P_d` at a rational `q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MeasureReport {
    pub d: usize,
    #[serde(serialize_with = "serialize_rational")]
    pub q: BigRational,
    pub support: Vec<MeasureEntry>,
}

impl MeasureReport {
    pub fn total(&self) -> BigRational {
        self.support.iter().map(|e| &e.prob).sum()
    }

    pub fn prob(&self, lambda: &Partition) -> Option<&BigRational> {
        self.support.iter().find(|e| &e.lambda == lambda).map(|e| &e.prob)
    }
}

/// `𝔭(λ) = p(λ) w(λ) / Z_d` for every `λ ⊢ d`, exactly.
pub fn pushforward_measure(d: usize, q: &BigRational) -> Result<MeasureReport> {
    check_degree(d)?;
    check_q(q)?;
    let mut masses = Vec::new();
    for prof in profiles(d) {
        let mass = profile_weight_at(&prof, q)? * BigRational::from_integer(p_of(prof.lambda()).into());
        masses.push((prof.0, mass));
    }
    let z: BigRational = masses.iter().map(|(_, m)| m).sum();
    let support = masses.into_iter().map(|(lambda, m)| MeasureEntry { lambda, prob: m / &z }).collect();
    Ok(MeasureReport { d, q: q.clone(), support })
}

/// `Θ(config) = W(config) / Z` on `𝔐^{(n)}_d`, exactly.
pub fn theta_measure(config: &BranchConfig, d: usize, q: &BigRational) -> Result<BigRational> {
    if config.total_colength() != d {
        return Err(Error::ColengthMismatch { expected: d, found: config.total_colength() });
    }
    let z = partition_function_for_n_at(config.n(), d, q)?;
    Ok(config_weight_at(config, q)? / z)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ThetaEntry {
    pub profiles: Vec<Partition>,
    #[serde(serialize_with = "serialize_rational")]
    pub prob: BigRational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ThetaGroup {
    pub k: usize,
    #[serde(serialize_with = "serialize_rational")]
    pub mass: BigRational,
    pub configs: Vec<ThetaEntry>,
}

/// The full measure `Θ` on `𝔐^{(n)}_d`, grouped by the number of profiles.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ThetaReport {
    pub n: usize,
    pub d: usize,
    #[serde(serialize_with = "serialize_rational")]
    pub q: BigRational,
    pub groups: Vec<ThetaGroup>,
}

impl ThetaReport {
    pub fn total(&self) -> BigRational {
        self.groups.iter().map(|g| &g.mass).sum()
    }

    pub fn group(&self, k: usize) -> Option<&ThetaGroup> {
        self.groups.iter().find(|g| g.k == k)
    }
}

pub fn theta_report(n: usize, d: usize, q: &BigRational) -> Result<ThetaReport> {
    check_degree(d)?;
    check_q(q)?;
    let z = partition_function_for_n_at(n, d, q)?;
    let mut groups: Vec<ThetaGroup> = Vec::new();
    let mut weight_cache: HashMap<Partition, BigRational> = HashMap::new();
    for config in enumerate_configs(n, d) {
        let lambda = config.colength_profile();
        let w = match weight_cache.get(&lambda) {
            Some(w) => w.clone(),
            None => {
                let w = config_weight_at(&config, q)?;
                weight_cache.insert(lambda, w.clone());
                w
            }
        };
        let prob = w / &z;
        if groups.last().map(|g| g.k) != Some(config.k()) {
            groups.push(ThetaGroup { k: config.k(), mass: BigRational::zero(), configs: Vec::new() });
        }
        let group = groups.last_mut().expect("group was just pushed");
        group.mass += &prob;
        group.configs.push(ThetaEntry { profiles: config.profiles().to_vec(), prob });
    }
    Ok(ThetaReport { n, d, q: q.clone(), groups })
}

/// Checks the two leading coefficients of `Z_d` against `(p(d), p(d-1))`
/// and returns them.
pub fn zero_temp_expansion(d: usize) -> Result<(u64, u64)> {
    if d < 2 {
        return Err(Error::Precondition(format!("the expansion needs d >= 2, got d = {d}")));
    }
    let z = partition_function_z(d, default_order(d))?;
    let expected = (partition_count(d), partition_count(d - 1));
    let computed = (z.coeff(d), z.coeff(d + 1));
    let as_int = |v: u64| BigRational::from_integer(v.into());
    if computed.0 != as_int(expected.0) || computed.1 != as_int(expected.1) {
        return Err(Error::Verification {
            what: format!("leading coefficients of Z_{d}"),
            expected: format!("({}, {})", expected.0, expected.1),
            computed: format!("({}, {})", computed.0, computed.1),
        });
    }
    Ok(expected)
}

/// Bisects on dyadic `q ∈ (0, 1)` for a point where the pushforward mass of
/// `(d)` exceeds `target`. Returns the largest such dyadic found within
/// `steps` halvings.
pub fn dirac_threshold(d: usize, target: &BigRational, steps: usize) -> Result<BigRational> {
    check_degree(d)?;
    let row = Partition::row(d);
    let mass = |q: &BigRational| -> Result<BigRational> {
        Ok(pushforward_measure(d, q)?.prob(&row).cloned().unwrap_or_else(BigRational::zero))
    };
    let mut lo = BigRational::zero();
    let mut hi = BigRational::one();
    for _ in 0..steps {
        let mid = (&lo + &hi) / rational(2, 1);
        if &mass(&mid)? > target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    // keep halving until a witness exists
    let mut guard = 0;
    while lo.is_zero() {
        hi /= rational(2, 1);
        if &mass(&hi)? > target {
            lo = hi.clone();
        }
        guard += 1;
        if guard > 64 {
            return Err(Error::Precondition(format!("no q with mass above {target} found for d={d}")));
        }
    }
    Ok(lo)
}
