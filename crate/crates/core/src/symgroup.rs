//! Characters of the symmetric group and pure Hurwitz numbers.
//!
//! Character values come from the Murnaghan–Nakayama rule: strip a border
//! strip of length `μ_1` from `λ` in every possible way, recurse on the
//! remaining parts of `μ`, and sum with sign `(-1)^{height}`. Border strips are
//! found on the β-set (first-column hook lengths) of `λ`, where removing a
//! strip of length `r` moves one bead from position `x` to an empty position
//! `x - r`; the height is the number of beads jumped over.
//!
//! A [`CharTable`] holds the full table for one `n`. [`CharacterStore`] keeps
//! tables per `n` in memory and, when given a directory, persists each table
//! to a versioned text file so later processes can skip the recursion.

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::partitions::{enumerate_partitions, factorial, Partition};

/// Environment variable naming the default character cache directory.
pub const CACHE_DIR_ENV: &str = "HURWITZ_CACHE_DIR";

const CACHE_MAGIC: &str = "# qhurwitz character table";
const CACHE_VERSION: u32 = 1;

/// Largest `n` accepted by [`brute_force_hurwitz`].
pub const BRUTE_FORCE_MAX_N: usize = 7;
/// Largest number of profiles accepted by [`brute_force_hurwitz`].
pub const BRUTE_FORCE_MAX_K: usize = 4;

type Memo = HashMap<(Vec<usize>, Vec<usize>), i64>;

/// Ordered tuple of branch profiles, all partitions of the same `n`, each
/// with nonzero colength.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BranchConfig {
    profiles: Vec<Partition>,
}

impl BranchConfig {
    pub fn new(profiles: Vec<Partition>) -> Result<Self> {
        let Some(first) = profiles.first() else {
            return Err(Error::Precondition("a branch configuration needs at least one profile".into()));
        };
        let n = first.weight();
        for p in &profiles {
            if p.weight() != n {
                return Err(Error::WeightMismatch { expected: n, found: p.weight() });
            }
            if p.colength() == 0 {
                return Err(Error::ZeroColength(p.to_string()));
            }
        }
        Ok(BranchConfig { profiles })
    }

    pub fn profiles(&self) -> &[Partition] {
        &self.profiles
    }

    pub fn n(&self) -> usize {
        self.profiles[0].weight()
    }

    pub fn k(&self) -> usize {
        self.profiles.len()
    }

    pub fn total_colength(&self) -> usize {
        self.profiles.iter().map(Partition::colength).sum()
    }

    /// Colengths sorted into a partition of the total colength.
    pub fn colength_profile(&self) -> Partition {
        Partition::from_unsorted(self.profiles.iter().map(Partition::colength).collect())
    }
}

fn beta_set(lambda: &[usize]) -> Vec<usize> {
    let l = lambda.len();
    lambda.iter().enumerate().map(|(i, &p)| p + (l - 1 - i)).collect()
}

fn from_beta_set(mut beta: Vec<usize>) -> Vec<usize> {
    beta.sort_unstable_by(|a, b| b.cmp(a));
    let l = beta.len();
    let mut parts: Vec<usize> = beta.iter().enumerate().map(|(i, &b)| b - (l - 1 - i)).collect();
    while parts.last() == Some(&0) {
        parts.pop();
    }
    parts
}

fn mn(lambda: &[usize], mu: &[usize], memo: &mut Memo) -> i64 {
    let Some((&r, rest)) = mu.split_first() else {
        return i64::from(lambda.is_empty());
    };
    let key = (lambda.to_vec(), mu.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let beta = beta_set(lambda);
    let occupied: HashSet<usize> = beta.iter().copied().collect();
    let mut total = 0i64;
    for (idx, &b) in beta.iter().enumerate() {
        if b < r || occupied.contains(&(b - r)) {
            continue;
        }
        let target = b - r;
        let height = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut next = beta.clone();
        next[idx] = target;
        let smaller = from_beta_set(next);
        let value = mn(&smaller, rest, memo);
        total += if height % 2 == 0 { value } else { -value };
    }
    memo.insert(key, total);
    total
}

/// `χ_λ(μ)` by the Murnaghan–Nakayama rule, without caching across calls.
pub fn character(lambda: &Partition, mu: &Partition) -> Result<i64> {
    if lambda.weight() != mu.weight() {
        return Err(Error::WeightMismatch { expected: lambda.weight(), found: mu.weight() });
    }
    Ok(mn(lambda.parts(), mu.parts(), &mut Memo::new()))
}

/// `n! / ∏ hooks`.
pub fn dimension(lambda: &Partition) -> u64 {
    let hooks: u64 = lambda.hook_lengths().iter().map(|&h| h as u64).product();
    factorial(lambda.weight()) / hooks
}

/// Size of the conjugacy class of cycle type `μ`: `n! / z_μ`.
pub fn class_size(mu: &Partition) -> u64 {
    factorial(mu.weight()) / mu.z_order()
}

/// Full character table of `S_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharTable {
    n: usize,
    partitions: Vec<Partition>,
    index: HashMap<Partition, usize>,
    // row-major: values[row(λ) * p(n) + col(μ)]
    values: Vec<i64>,
}

impl CharTable {
    pub fn compute(n: usize) -> Self {
        let partitions = enumerate_partitions(n);
        let mut memo = Memo::new();
        let mut values = Vec::with_capacity(partitions.len() * partitions.len());
        for lambda in &partitions {
            for mu in &partitions {
                values.push(mn(lambda.parts(), mu.parts(), &mut memo));
            }
        }
        log::debug!("computed character table of S_{n}: {} memo entries", memo.len());
        Self::from_values(n, partitions, values)
    }

    fn from_values(n: usize, partitions: Vec<Partition>, values: Vec<i64>) -> Self {
        let index = partitions.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        CharTable { n, partitions, index, values }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Partitions of `n` in the table's row and column order.
    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    fn position(&self, p: &Partition) -> Result<usize> {
        self.index.get(p).copied().ok_or(Error::WeightMismatch { expected: self.n, found: p.weight() })
    }

    pub fn character(&self, lambda: &Partition, mu: &Partition) -> Result<i64> {
        let row = self.position(lambda)?;
        let col = self.position(mu)?;
        Ok(self.values[row * self.partitions.len() + col])
    }

    pub fn dimension(&self, lambda: &Partition) -> Result<i64> {
        self.character(lambda, &Partition::identity(self.n))
    }

    /// Serializes to the line-oriented cache format.
    pub fn to_cache_text(&self) -> String {
        let mut out = format!("{CACHE_MAGIC}\nversion={CACHE_VERSION}\nn={}\nlambda;mu;value\n", self.n);
        let m = self.partitions.len();
        for (i, lambda) in self.partitions.iter().enumerate() {
            for (j, mu) in self.partitions.iter().enumerate() {
                let _ = writeln!(out, "{lambda};{mu};{}", self.values[i * m + j]);
            }
        }
        out
    }

    /// Parses the cache format, checking the header and that every entry
    /// of the `n` table is present exactly once.
    pub fn from_cache_text(text: &str, n: usize, path: &Path) -> Result<Self> {
        let bad = |reason: String| Error::Cache { path: path.to_path_buf(), reason };
        let mut lines = text.lines();
        if lines.next() != Some(CACHE_MAGIC) {
            return Err(bad("missing header".into()));
        }
        let version = lines.next().and_then(|l| l.strip_prefix("version="));
        if version != Some(&CACHE_VERSION.to_string()) {
            return Err(bad(format!("unsupported version {version:?}")));
        }
        let stored_n = lines.next().and_then(|l| l.strip_prefix("n=")).and_then(|v| v.parse().ok());
        if stored_n != Some(n) {
            return Err(bad(format!("expected n={n}, found {stored_n:?}")));
        }
        if lines.next() != Some("lambda;mu;value") {
            return Err(bad("missing column header".into()));
        }
        let partitions = enumerate_partitions(n);
        let m = partitions.len();
        let index: HashMap<&Partition, usize> = partitions.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let mut values: Vec<Option<i64>> = vec![None; m * m];
        for line in lines.filter(|l| !l.trim().is_empty()) {
            let fields: Vec<&str> = line.split(';').collect();
            let [l, u, v] = fields[..] else {
                return Err(bad(format!("malformed line {line:?}")));
            };
            let lambda: Partition = l.parse().map_err(|_| bad(format!("bad partition in {line:?}")))?;
            let mu: Partition = u.parse().map_err(|_| bad(format!("bad partition in {line:?}")))?;
            let value: i64 = v.parse().map_err(|_| bad(format!("bad value in {line:?}")))?;
            let (Some(&i), Some(&j)) = (index.get(&lambda), index.get(&mu)) else {
                return Err(bad(format!("entry {line:?} is not a partition pair of {n}")));
            };
            if values[i * m + j].replace(value).is_some() {
                return Err(bad(format!("duplicate entry {line:?}")));
            }
        }
        let values: Option<Vec<i64>> = values.into_iter().collect();
        let values = values.ok_or_else(|| bad("table is incomplete".into()))?;
        Ok(Self::from_values(n, partitions, values))
    }
}

/// Character tables per `n`, optionally backed by a cache directory.
#[derive(Debug, Default)]
pub struct CharacterStore {
    dir: Option<PathBuf>,
    tables: RwLock<HashMap<usize, Arc<CharTable>>>,
}

impl CharacterStore {
    /// Memory-only store.
    pub fn in_memory() -> Self {
        Self::default()
    }

    pub fn with_dir(dir: impl Into<PathBuf>) -> Self {
        CharacterStore { dir: Some(dir.into()), tables: RwLock::default() }
    }

    /// Uses `$HURWITZ_CACHE_DIR` when set, memory only otherwise.
    pub fn from_env() -> Self {
        match std::env::var_os(CACHE_DIR_ENV) {
            Some(dir) if !dir.is_empty() => Self::with_dir(dir),
            _ => Self::in_memory(),
        }
    }

    pub fn dir(&self) -> Option<&Path> {
        self.dir.as_deref()
    }

    pub fn cache_path(&self, n: usize) -> Option<PathBuf> {
        self.dir.as_ref().map(|d| d.join(format!("chartable-n{n}.txt")))
    }

    /// Table for `S_n`: from memory, else from the cache file, else computed
    /// (and written to the cache directory if there is one).
    pub fn table(&self, n: usize) -> Result<Arc<CharTable>> {
        if let Some(t) = self.tables.read().expect("character store poisoned").get(&n) {
            return Ok(Arc::clone(t));
        }
        let table = Arc::new(self.load_or_compute(n)?);
        let mut guard = self.tables.write().expect("character store poisoned");
        Ok(Arc::clone(guard.entry(n).or_insert(table)))
    }

    fn load_or_compute(&self, n: usize) -> Result<CharTable> {
        let Some(path) = self.cache_path(n) else {
            return Ok(CharTable::compute(n));
        };
        if path.exists() {
            let text = fs::read_to_string(&path).map_err(|source| Error::Io { path: path.clone(), source })?;
            match CharTable::from_cache_text(&text, n, &path) {
                Ok(t) => return Ok(t),
                Err(e) => log::warn!("ignoring unusable character cache: {e}"),
            }
        }
        let table = CharTable::compute(n);
        let dir = path.parent().expect("cache path has a parent");
        fs::create_dir_all(dir).map_err(|source| Error::Io { path: dir.to_path_buf(), source })?;
        let tmp = path.with_extension(format!("tmp{}", std::process::id()));
        fs::write(&tmp, table.to_cache_text()).map_err(|source| Error::Io { path: tmp.clone(), source })?;
        fs::rename(&tmp, &path).map_err(|source| Error::Io { path: path.clone(), source })?;
        Ok(table)
    }
}

/// Process-wide store configured from the environment.
pub fn global_store() -> &'static CharacterStore {
    static STORE: OnceLock<CharacterStore> = OnceLock::new();
    STORE.get_or_init(CharacterStore::from_env)
}

fn check_weights(n: usize, config: &[Partition]) -> Result<()> {
    for p in config {
        if p.weight() != n {
            return Err(Error::WeightMismatch { expected: n, found: p.weight() });
        }
    }
    Ok(())
}

fn big(v: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(v.into())
}

/// Pure Hurwitz number by the Frobenius character sum
/// `H = Σ_λ (dim λ / n!)² ∏_j |C_{μ_j}| χ_λ(μ_j) / dim λ`.
///
/// The empty configuration gives `1/n!`.
pub fn frobenius_hurwitz(table: &CharTable, config: &[Partition]) -> Result<BigRational> {
    let n = table.n();
    check_weights(n, config)?;
    if config.iter().map(Partition::colength).sum::<usize>() % 2 == 1 {
        return Ok(BigRational::zero());
    }
    let n_fact = big(factorial(n));
    let sizes: Vec<BigRational> = config.iter().map(|m| big(class_size(m))).collect();
    let mut total = BigRational::zero();
    for lambda in table.partitions() {
        let dim = big(table.dimension(lambda)?);
        let mut term = &dim / &n_fact;
        term = &term * &term;
        for (mu, size) in config.iter().zip(&sizes) {
            let chi = table.character(lambda, mu)?;
            if chi == 0 {
                term = BigRational::zero();
                break;
            }
            term = term * size * big(chi) / &dim;
        }
        total += term;
    }
    Ok(total)
}

/// Cycle type of a permutation given in one-line notation.
fn cycle_type(perm: &[u8]) -> Partition {
    let mut seen = vec![false; perm.len()];
    let mut lengths = Vec::new();
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut j = start;
        while !seen[j] {
            seen[j] = true;
            j = perm[j] as usize;
            len += 1;
        }
        lengths.push(len);
    }
    Partition::from_unsorted(lengths)
}

fn all_permutations(n: usize) -> Vec<Vec<u8>> {
    let mut v: Vec<u8> = (0..n as u8).collect();
    let mut out = vec![v.clone()];
    while crate::partitions::next_permutation(&mut v) {
        out.push(v.clone());
    }
    out
}

/// Pure Hurwitz number by literal enumeration of factorizations
/// `h_1 ⋯ h_k = 1` in `S_n`, divided by `n!`.
///
/// Folds the distribution of partial products `h_1 ⋯ h_j` over the first
/// `k - 1` classes, then counts products whose inverse lies in the last
/// class. Rejects `n > 7` or `k > 4`.
pub fn brute_force_hurwitz(n: usize, config: &[Partition]) -> Result<BigRational> {
    if n > BRUTE_FORCE_MAX_N {
        return Err(Error::GuardExceeded { what: "n", value: n, limit: BRUTE_FORCE_MAX_N });
    }
    if config.len() > BRUTE_FORCE_MAX_K {
        return Err(Error::GuardExceeded { what: "k", value: config.len(), limit: BRUTE_FORCE_MAX_K });
    }
    check_weights(n, config)?;
    let n_fact = big(factorial(n));
    let Some((last, init)) = config.split_last() else {
        return Ok(n_fact.recip());
    };
    // parity: the sign of the product is (-1)^{Σ colengths}
    if config.iter().map(Partition::colength).sum::<usize>() % 2 == 1 {
        return Ok(BigRational::zero());
    }
    let group = all_permutations(n);
    let classes: HashMap<Partition, Vec<&Vec<u8>>> = group.iter().fold(HashMap::new(), |mut acc, g| {
        acc.entry(cycle_type(g)).or_insert_with(Vec::new).push(g);
        acc
    });
    let mut partial: HashMap<Vec<u8>, u64> = HashMap::from([((0..n as u8).collect(), 1)]);
    for mu in init {
        let class = &classes[mu];
        let mut next: HashMap<Vec<u8>, u64> = HashMap::new();
        for (p, &count) in &partial {
            for h in class {
                let prod: Vec<u8> = h.iter().map(|&x| p[x as usize]).collect();
                *next.entry(prod).or_insert(0) += count;
            }
        }
        partial = next;
    }
    let hits: u64 = partial.iter().filter(|(p, _)| &cycle_type(p) == last).map(|(_, &c)| c).sum();
    Ok(big(hits) / n_fact)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qalgebra::rational;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    /// The defining permutation representation of S_3 is trivial ⊕ (2,1), so
    /// `1 + χ_(2,1)(g)` must equal the number of fixed points of `g`.
    #[test]
    fn s3_table_against_fixed_points() {
        let t = CharTable::compute(3);
        for g in all_permutations(3) {
            let mu = cycle_type(&g);
            let fix = g.iter().enumerate().filter(|(i, &x)| *i == x as usize).count() as i64;
            assert_eq!(1 + t.character(&p("2,1"), &mu).unwrap(), fix);
            let sign = if mu.colength().is_multiple_of(2) { 1 } else { -1 };
            assert_eq!(t.character(&p("1,1,1"), &mu).unwrap(), sign);
        }
        assert_eq!(t.character(&p("2,1"), &p("3")).unwrap(), -1);
    }

    #[test]
    fn trivial_and_sign_characters() {
        for n in 1..=7 {
            for mu in enumerate_partitions(n) {
                assert_eq!(character(&Partition::row(n), &mu).unwrap(), 1);
                let sign = if mu.colength() % 2 == 0 { 1 } else { -1 };
                assert_eq!(character(&Partition::identity(n), &mu).unwrap(), sign);
            }
        }
    }

    #[test]
    fn known_s4_values() {
        assert_eq!(character(&p("2,2"), &p("2,2")).unwrap(), 2);
        assert_eq!(character(&p("2,2"), &p("3,1")).unwrap(), -1);
        assert_eq!(character(&p("3,1"), &p("4")).unwrap(), -1);
        assert_eq!(character(&p("2,1,1"), &p("2,1,1")).unwrap(), -1);
        assert!(character(&p("2,1"), &p("2,2")).is_err());
    }

    #[test]
    fn dimensions() {
        assert_eq!(dimension(&p("5")), 1);
        assert_eq!(dimension(&p("2,1")), 2);
        assert_eq!(dimension(&p("2,2")), 2);
        assert_eq!(dimension(&p("3,2,1")), 16);
        for n in 1..=8 {
            let t = CharTable::compute(n);
            let mut sum_sq = 0u64;
            for l in t.partitions() {
                let d = dimension(l);
                assert_eq!(t.dimension(l).unwrap(), d as i64);
                sum_sq += d * d;
            }
            assert_eq!(sum_sq, factorial(n));
        }
    }

    #[test]
    fn class_sizes() {
        assert_eq!(class_size(&Partition::identity(5)), 1);
        assert_eq!(class_size(&p("2,1")), 3);
        assert_eq!(class_size(&p("3")), 2);
    }

    #[test]
    fn orthogonality() {
        for n in 1..=8 {
            let t = CharTable::compute(n);
            let parts = t.partitions();
            for a in parts {
                for b in parts {
                    let col: i64 = parts.iter().map(|l| t.character(l, a).unwrap() * t.character(l, b).unwrap()).sum();
                    let expected = if a == b { a.z_order() as i64 } else { 0 };
                    assert_eq!(col, expected, "column n={n} {a:?} {b:?}");

                    let row: i64 = parts
                        .iter()
                        .map(|m| class_size(m) as i64 * t.character(a, m).unwrap() * t.character(b, m).unwrap())
                        .sum();
                    let expected = if a == b { factorial(n) as i64 } else { 0 };
                    assert_eq!(row, expected, "row n={n} {a:?} {b:?}");
                }
            }
        }
    }

    #[test]
    fn frobenius_examples() {
        let t3 = CharTable::compute(3);
        assert_eq!(frobenius_hurwitz(&t3, &[p("1,1,1")]).unwrap(), rational(1, 6));
        assert_eq!(frobenius_hurwitz(&t3, &[p("3"), p("3")]).unwrap(), rational(1, 3));
        assert_eq!(frobenius_hurwitz(&t3, &[p("2,1"), p("2,1"), p("3")]).unwrap(), rational(1, 1));
        assert_eq!(frobenius_hurwitz(&t3, &[]).unwrap(), rational(1, 6));
        assert!(frobenius_hurwitz(&t3, &[p("2,2")]).is_err());
    }

    #[test]
    fn brute_force_examples() {
        assert_eq!(brute_force_hurwitz(3, &[p("2,1"), p("2,1"), p("2,1")]).unwrap(), rational(0, 1));
        assert_eq!(brute_force_hurwitz(3, &[p("2,1"), p("2,1")]).unwrap(), rational(1, 2));
        assert_eq!(brute_force_hurwitz(3, &[p("2,1"), p("2,1"), p("3")]).unwrap(), rational(1, 1));
        assert_eq!(brute_force_hurwitz(3, &[]).unwrap(), rational(1, 6));
        assert!(matches!(
            brute_force_hurwitz(8, &[Partition::identity(8)]),
            Err(Error::GuardExceeded { what: "n", .. })
        ));
        let five = vec![p("2,1"); 5];
        assert!(matches!(brute_force_hurwitz(3, &five), Err(Error::GuardExceeded { what: "k", .. })));
    }

    #[test]
    fn brute_force_without_parity_shortcut_agrees_at_n6() {
        // exercises the oracle at the n = 6 scale it is sized for
        let t6 = CharTable::compute(6);
        let cfg = [p("3,1,1,1"), p("2,2,1,1"), p("4,2")];
        assert_eq!(brute_force_hurwitz(6, &cfg).unwrap(), frobenius_hurwitz(&t6, &cfg).unwrap());
    }

    #[test]
    fn branch_config_validation() {
        assert!(BranchConfig::new(vec![]).is_err());
        assert!(matches!(BranchConfig::new(vec![p("2,1"), p("1,1,1")]), Err(Error::ZeroColength(_))));
        assert!(matches!(BranchConfig::new(vec![p("2,1"), p("2,2")]), Err(Error::WeightMismatch { .. })));
        let c = BranchConfig::new(vec![p("2,1,1"), p("3,1")]).unwrap();
        assert_eq!(c.total_colength(), 3);
        assert_eq!(c.colength_profile(), p("2,1"));
        assert_eq!(c.n(), 4);
        assert_eq!(c.k(), 2);
    }

    #[test]
    fn cache_round_trip_and_recompute() {
        let dir = tempfile::tempdir().unwrap();
        let store = CharacterStore::with_dir(dir.path());
        let t = store.table(6).unwrap();
        let path = store.cache_path(6).unwrap();
        assert!(path.exists());
        let reloaded = CharacterStore::with_dir(dir.path()).table(6).unwrap();
        assert_eq!(*reloaded, CharTable::compute(6));
        assert_eq!(*t, *reloaded);
        for l in t.partitions() {
            for m in t.partitions() {
                assert_eq!(t.character(l, m).unwrap(), character(l, m).unwrap());
            }
        }
    }

    #[test]
    fn corrupt_cache_is_recomputed() {
        let dir = tempfile::tempdir().unwrap();
        let store = CharacterStore::with_dir(dir.path());
        let path = store.cache_path(4).unwrap();
        fs::write(&path, "# qhurwitz character table\nversion=1\nn=4\nlambda;mu;value\n4;4;7\n").unwrap();
        let t = store.table(4).unwrap();
        assert_eq!(*t, CharTable::compute(4));
        let text = fs::read_to_string(&path).unwrap();
        assert!(CharTable::from_cache_text(&text, 4, &path).is_ok());
        assert!(CharTable::from_cache_text(&text, 5, &path).is_err());
        assert!(CharTable::from_cache_text(&text.replace("version=1", "version=9"), 4, &path).is_err());
    }

    #[test]
    fn concurrent_reads() {
        let store = Arc::new(CharacterStore::in_memory());
        let handles: Vec<_> = (0..4)
            .map(|i| {
                let s = Arc::clone(&store);
                std::thread::spawn(move || s.table(4 + i % 2).unwrap().partitions().len())
            })
            .collect();
        let sizes: Vec<usize> = handles.into_iter().map(|h| h.join().unwrap()).collect();
        assert_eq!(sizes, vec![5, 7, 5, 7]);
    }
}
