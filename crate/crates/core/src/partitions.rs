//! Integer partitions and the statistics used to index ramification data.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::qalgebra::CoefficientRing;

/// A weakly decreasing list of positive parts. The empty partition is valid
/// and has weight 0.
///
/// The derived order compares parts lexicographically, so it is a total order
/// usable for map keys.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

/// A box `(row, col)` of a Young diagram, 1-based, with its content `col - row`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
    pub content: i64,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    /// Sorts the parts into decreasing order and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// `(1, 1, …, 1)` with `n` parts.
    pub fn identity(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    /// The one-row partition `(n)`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `|λ| - ℓ(λ)`.
    pub fn colength(&self) -> usize {
        self.weight() - self.length()
    }

    /// Multiplicity of each part value.
    pub fn multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    /// `∏_i m_i(λ)!`.
    pub fn aut_order(&self) -> u64 {
        self.multiplicities().values().map(|&m| factorial(m)).product()
    }

    /// Centralizer order `z_λ = ∏_i i^{m_i} m_i!`.
    pub fn z_order(&self) -> u64 {
        self.multiplicities().iter().map(|(&i, &m)| (i as u64).pow(m as u32) * factorial(m)).product()
    }

    pub fn conjugate(&self) -> Self {
        let cols = self.parts.first().copied().unwrap_or(0);
        Partition { parts: (1..=cols).map(|j| self.parts.iter().take_while(|&&p| p >= j).count()).collect() }
    }

    /// All cells in row-major order.
    pub fn cells(&self) -> Vec<Cell> {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| {
                (1..=len).map(move |j| Cell { row: i + 1, col: j, content: j as i64 - (i as i64 + 1) })
            })
            .collect()
    }

    /// Hook lengths in row-major order.
    pub fn hook_lengths(&self) -> Vec<usize> {
        let conj = self.conjugate();
        self.cells()
            .iter()
            .map(|c| {
                let arm = self.parts[c.row - 1] - c.col;
                let leg = conj.parts[c.col - 1] - c.row;
                arm + leg + 1
            })
            .collect()
    }
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

pub fn colength(lambda: &Partition) -> usize {
    lambda.colength()
}

pub fn aut_order(lambda: &Partition) -> u64 {
    lambda.aut_order()
}

pub fn z_order(mu: &Partition) -> u64 {
    mu.z_order()
}

pub fn cells(lambda: &Partition) -> Vec<Cell> {
    lambda.cells()
}

/// All partitions of `d` in reverse lexicographic order: `(d)` first,
/// `(1^d)` last. `d = 0` yields the single empty partition.
pub fn enumerate_partitions(d: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(d, d, None, &mut current, &mut out);
    out
}

/// Partitions of `remaining` with parts at most `max_part` and, when given,
/// at most `max_len` parts, appended to the prefix in `current`.
fn fill(remaining: usize, max_part: usize, max_len: Option<usize>, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition { parts: current.clone() });
        return;
    }
    if max_len == Some(current.len()) {
        return;
    }
    for part in (1..=max_part.min(remaining)).rev() {
        current.push(part);
        fill(remaining - part, part, max_len, current, out);
        current.pop();
    }
}

/// Partitions of `n` with colength `c`, in reverse lexicographic order.
///
/// These are in bijection with partitions of `c` having at most `n - c`
/// parts (subtract one from every part), so the count is `p(c)` once
/// `n >= 2c`.
pub fn enumerate_with_colength(n: usize, c: usize) -> Result<Vec<Partition>> {
    if n == 0 || c >= n {
        return Err(Error::ColengthOutOfRange { n, colength: c });
    }
    Ok(with_colength_unchecked(n, c))
}

/// As [`enumerate_with_colength`], but returns an empty list when no
/// partition of `n` has colength `c`.
pub(crate) fn with_colength_unchecked(n: usize, c: usize) -> Vec<Partition> {
    if n == 0 || c >= n {
        return Vec::new();
    }
    let len = n - c;
    let mut small = Vec::new();
    fill(c, c, Some(len), &mut Vec::new(), &mut small);
    small
        .into_iter()
        .map(|p| {
            let mut parts: Vec<usize> = p.parts.iter().map(|x| x + 1).collect();
            parts.resize(len, 1);
            Partition { parts }
        })
        .collect()
}

/// Number of partitions `p(d)`, by Euler's pentagonal recurrence.
pub fn partition_count(d: usize) -> u64 {
    let mut p = vec![0i128; d + 1];
    p[0] = 1;
    for m in 1..=d {
        let mut acc = 0i128;
        for k in 1.. {
            let k = k as i128;
            let g1 = (k * (3 * k - 1) / 2) as usize;
            if g1 > m {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            acc += sign * p[m - g1];
            let g2 = (k * (3 * k + 1) / 2) as usize;
            if g2 <= m {
                acc += sign * p[m - g2];
            }
        }
        p[m] = acc;
    }
    p[d] as u64
}

/// Evaluates the monomial symmetric function `m_λ(c_1, …, c_m, 0, 0, …)`.
///
/// Sums each distinct monomial once by walking the distinct arrangements of
/// the exponent vector `(λ_1, …, λ_ℓ, 0, …, 0)` of length `m`. With fewer
/// values than parts the result is zero.
pub fn monomial_sym<T: CoefficientRing>(lambda: &Partition, values: &[T], unit: &T) -> T {
    let zero = unit.zero_like();
    if values.len() < lambda.length() {
        return zero;
    }
    let mut exponents = lambda.parts.clone();
    exponents.resize(values.len(), 0);
    exponents.sort_unstable();

    let mut powers: Vec<Vec<T>> = Vec::with_capacity(values.len());
    let top = lambda.parts.first().copied().unwrap_or(0);
    for v in values {
        let mut row = vec![unit.one_like()];
        for e in 1..=top {
            let next = row[e - 1].mul_ref(v);
            row.push(next);
        }
        powers.push(row);
    }

    let mut total = zero;
    loop {
        let term = exponents
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(unit.one_like(), |acc, (i, &e)| acc.mul_ref(&powers[i][e]));
        total = total.add_ref(&term);
        if !next_permutation(&mut exponents) {
            break;
        }
    }
    total
}

/// As [`monomial_sym`] but rejects value lists shorter than `ℓ(λ)`.
pub fn monomial_sym_strict<T: CoefficientRing>(lambda: &Partition, values: &[T], unit: &T) -> Result<T> {
    if values.len() < lambda.length() {
        return Err(Error::TooFewValues { needed: lambda.length(), given: values.len() });
    }
    Ok(monomial_sym(lambda, values, unit))
}

/// Advances to the next lexicographic permutation, skipping duplicates.
pub(crate) fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Distinct orderings of the parts of `λ` (compositions that sort to `λ`).
pub fn distinct_orderings(lambda: &Partition) -> Vec<Vec<usize>> {
    let mut v = lambda.parts.clone();
    v.sort_unstable();
    let mut out = vec![v.clone()];
    while next_permutation(&mut v) {
        out.push(v.clone());
    }
    out
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "-");
        }
        let text: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", text.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `"3,1,1"`; `"-"` (or an empty string) is the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "-" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| Error::InvalidPartition(format!("cannot parse {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
