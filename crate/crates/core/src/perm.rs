//! Permutations in one-line notation and their intervals.
//!
//! A permutation of `[1..n]` is stored as its one-line word. An *interval* of a
//! permutation is a range of values `[lo, hi]` whose letters sit in consecutive
//! positions of the word.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A contiguous range of values `{lo, lo + 1, ..., hi}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ValueInterval {
    pub lo: usize,
    pub hi: usize,
}

impl ValueInterval {
    pub fn new(lo: usize, hi: usize) -> Self {
        assert!(lo <= hi, "interval [{lo},{hi}] is empty");
        ValueInterval { lo, hi }
    }

    pub fn singleton(v: usize) -> Self {
        ValueInterval { lo: v, hi: v }
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.hi - self.lo + 1
    }

    pub fn is_singleton(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, v: usize) -> bool {
        self.lo <= v && v <= self.hi
    }

    /// Non-strict inclusion.
    pub fn is_subset(&self, other: &ValueInterval) -> bool {
        other.lo <= self.lo && self.hi <= other.hi
    }

    pub fn is_strict_subset(&self, other: &ValueInterval) -> bool {
        self != other && self.is_subset(other)
    }

    pub fn intersect(&self, other: &ValueInterval) -> Option<ValueInterval> {
        let lo = self.lo.max(other.lo);
        let hi = self.hi.min(other.hi);
        (lo <= hi).then_some(ValueInterval { lo, hi })
    }

    pub fn is_disjoint(&self, other: &ValueInterval) -> bool {
        self.intersect(other).is_none()
    }

    /// Ordering used for poset element lists: by size, then by lower end.
    pub fn size_key(&self) -> (usize, usize) {
        (self.len(), self.lo)
    }

    /// Translate so that `base` becomes value 1.
    pub fn shifted_down(&self, base: usize) -> ValueInterval {
        ValueInterval {
            lo: self.lo + 1 - base,
            hi: self.hi + 1 - base,
        }
    }
}

impl fmt::Display for ValueInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_singleton() {
            write!(f, "{{{}}}", self.lo)
        } else {
            write!(f, "[{},{}]", self.lo, self.hi)
        }
    }
}

/// A permutation of `[1..n]` in one-line notation, `n >= 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    word: Vec<usize>,
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(word: Vec<usize>) -> Result<Self> {
        Permutation::new(word)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.word
    }
}

impl Permutation {
    /// Checks that `word` is a bijection on `[1..word.len()]`.
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let n = word.len();
        if n == 0 {
            return Err(Error::Empty);
        }
        let mut seen = vec![false; n + 1];
        for &v in &word {
            if v == 0 || v > n {
                return Err(Error::NotABijection {
                    n,
                    detail: format!("value {v} out of range"),
                });
            }
            if seen[v] {
                return Err(Error::NotABijection {
                    n,
                    detail: format!("value {v} repeated"),
                });
            }
            seen[v] = true;
        }
        Ok(Permutation { word })
    }

    pub(crate) fn from_word_unchecked(word: Vec<usize>) -> Self {
        debug_assert!(Permutation::new(word.clone()).is_ok());
        Permutation { word }
    }

    pub fn identity(n: usize) -> Self {
        assert!(n >= 1);
        Permutation {
            word: (1..=n).collect(),
        }
    }

    pub fn decreasing(n: usize) -> Self {
        assert!(n >= 1);
        Permutation {
            word: (1..=n).rev().collect(),
        }
    }

    /// Parses either a contiguous digit string (`n <= 9`) or integers
    /// separated by commas and/or whitespace.
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Err(Error::Empty);
        }
        let separated = text.contains(|c: char| c == ',' || c.is_whitespace());
        let word = if separated {
            text.split(|c: char| c == ',' || c.is_whitespace())
                .filter(|tok| !tok.is_empty())
                .map(|tok| {
                    tok.parse::<usize>()
                        .map_err(|_| Error::Parse(format!("`{tok}` is not a positive integer")))
                })
                .collect::<Result<Vec<_>>>()?
        } else {
            if !text.chars().all(|c| c.is_ascii_digit()) {
                return Err(Error::Parse(format!("unexpected character in `{text}`")));
            }
            if text.len() > 9 {
                return Err(Error::Parse(
                    "contiguous digit form is limited to 9 letters; separate values with commas"
                        .into(),
                ));
            }
            text.bytes().map(|b| (b - b'0') as usize).collect()
        };
        Permutation::new(word)
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.word
    }

    /// Letter at 0-based position `i`.
    pub fn at(&self, i: usize) -> usize {
        self.word[i]
    }

    /// Comma-separated form, unambiguous for every `n`.
    pub fn to_canonical_string(&self) -> String {
        let parts: Vec<String> = self.word.iter().map(|v| v.to_string()).collect();
        parts.join(",")
    }

    pub fn reverse(&self) -> Permutation {
        let mut word = self.word.clone();
        word.reverse();
        Permutation { word }
    }

    /// Positions (0-based) of each value: `positions()[v - 1]`.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.len()];
        for (i, &v) in self.word.iter().enumerate() {
            pos[v - 1] = i;
        }
        pos
    }

    /// All nonempty intervals, ordered by size and then by lower end.
    pub fn intervals(&self) -> Vec<ValueInterval> {
        let w = &self.word;
        let n = w.len();
        let mut out = Vec::with_capacity(2 * n);
        for i in 0..n {
            let (mut lo, mut hi) = (w[i], w[i]);
            for (j, &v) in w.iter().enumerate().skip(i) {
                lo = lo.min(v);
                hi = hi.max(v);
                if hi - lo == j - i {
                    out.push(ValueInterval { lo, hi });
                }
            }
        }
        out.sort_unstable_by_key(|iv| iv.size_key());
        out
    }

    /// Whether `[lo, hi]` occupies consecutive positions.
    pub fn is_interval(&self, iv: ValueInterval) -> bool {
        if iv.lo == 0 || iv.hi > self.len() {
            return false;
        }
        let pos = self.positions();
        let slice = &pos[iv.lo - 1..iv.hi];
        let first = *slice.iter().min().unwrap();
        let last = *slice.iter().max().unwrap();
        last - first + 1 == iv.len()
    }

    /// No interval of size between 2 and `n - 1`.
    pub fn is_simple(&self) -> bool {
        let w = &self.word;
        let n = w.len();
        for i in 0..n {
            let (mut lo, mut hi) = (w[i], w[i]);
            for (j, &v) in w.iter().enumerate().skip(i + 1) {
                let size = j - i + 1;
                if size >= n {
                    break;
                }
                lo = lo.min(v);
                hi = hi.max(v);
                if hi - lo + 1 == size {
                    return false;
                }
            }
        }
        true
    }

    /// Replaces each letter `self(i)` by a block order-isomorphic to
    /// `parts[i]`, blocks ordered by value as the letters of `self` are.
    pub fn inflate(&self, parts: &[Permutation]) -> Result<Permutation> {
        if parts.len() != self.len() {
            return Err(Error::ArityMismatch {
                expected: self.len(),
                got: parts.len(),
            });
        }
        // offset[v] = total size of the parts placed at letters smaller than v
        let mut size_by_value = vec![0; self.len() + 1];
        for (i, &v) in self.word.iter().enumerate() {
            size_by_value[v] = parts[i].len();
        }
        let mut offset = vec![0; self.len() + 1];
        for v in 2..=self.len() {
            offset[v] = offset[v - 1] + size_by_value[v - 1];
        }
        let mut word = Vec::with_capacity(parts.iter().map(Permutation::len).sum());
        for (i, &v) in self.word.iter().enumerate() {
            word.extend(parts[i].word.iter().map(|&x| x + offset[v]));
        }
        Ok(Permutation { word })
    }

    /// `12[self, other]`.
    pub fn direct_sum(&self, other: &Permutation) -> Permutation {
        let shift = self.len();
        let mut word = self.word.clone();
        word.extend(other.word.iter().map(|&x| x + shift));
        Permutation { word }
    }

    /// `21[self, other]`.
    pub fn skew_sum(&self, other: &Permutation) -> Permutation {
        let shift = other.len();
        let mut word: Vec<usize> = self.word.iter().map(|&x| x + shift).collect();
        word.extend_from_slice(&other.word);
        Permutation { word }
    }

    /// Classical containment: some subsequence is order-isomorphic to `pattern`.
    pub fn contains_pattern(&self, pattern: &Permutation) -> bool {
        fn extend(w: &[usize], p: &[usize], start: usize, chosen: &mut Vec<usize>) -> bool {
            let k = chosen.len();
            if k == p.len() {
                return true;
            }
            let last_start = w.len() - (p.len() - k);
            for pos in start..=last_start {
                let v = w[pos];
                let consistent = chosen.iter().zip(p).all(|(&c, &pc)| (c < v) == (pc < p[k]));
                if consistent {
                    chosen.push(v);
                    if extend(w, p, pos + 1, chosen) {
                        return true;
                    }
                    chosen.pop();
                }
            }
            false
        }
        if pattern.len() > self.len() {
            return false;
        }
        extend(
            &self.word,
            &pattern.word,
            0,
            &mut Vec::with_capacity(pattern.len()),
        )
    }

    /// Avoids both 2413 and 3142.
    pub fn is_separable(&self) -> bool {
        let p2413 = Permutation::from_word_unchecked(vec![2, 4, 1, 3]);
        let p3142 = Permutation::from_word_unchecked(vec![3, 1, 4, 2]);
        !self.contains_pattern(&p2413) && !self.contains_pattern(&p3142)
    }

    /// The subword of letters in `iv`, standardized to `[1..|iv|]`.
    pub fn restrict(&self, iv: ValueInterval) -> Permutation {
        let word = self
            .word
            .iter()
            .filter(|&&v| iv.contains(v))
            .map(|&v| v + 1 - iv.lo)
            .collect();
        Permutation { word }
    }

    /// Maximal split into sum-indecomposable components.
    pub fn sum_components(&self) -> Vec<Permutation> {
        let mut cuts = vec![0];
        let mut max = 0;
        for (j, &v) in self.word.iter().enumerate() {
            max = max.max(v);
            if max == j + 1 {
                cuts.push(j + 1);
            }
        }
        self.split_at_cuts(&cuts)
    }

    /// Maximal split into skew-indecomposable components.
    pub fn skew_components(&self) -> Vec<Permutation> {
        let n = self.len();
        let mut cuts = vec![0];
        let mut min = usize::MAX;
        for (j, &v) in self.word.iter().enumerate() {
            min = min.min(v);
            if min == n - j {
                cuts.push(j + 1);
            }
        }
        self.split_at_cuts(&cuts)
    }

    fn split_at_cuts(&self, cuts: &[usize]) -> Vec<Permutation> {
        cuts.windows(2)
            .map(|c| standardize(&self.word[c[0]..c[1]]))
            .collect()
    }

    pub fn is_sum_decomposable(&self) -> bool {
        self.sum_components().len() >= 2
    }

    pub fn is_skew_decomposable(&self) -> bool {
        self.skew_components().len() >= 2
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Permutation::parse(s)
    }
}

impl fmt::Display for Permutation {
    /// Digit string for `n <= 9`, comma-separated otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len() <= 9 {
            for v in &self.word {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            f.write_str(&self.to_canonical_string())
        }
    }
}

/// The permutation order-isomorphic to a sequence of distinct values.
pub fn standardize(values: &[usize]) -> Permutation {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_unstable_by_key(|&i| values[i]);
    let mut word = vec![0; values.len()];
    for (rank, i) in order.into_iter().enumerate() {
        word[i] = rank + 1;
    }
    Permutation { word }
}

/// All simple permutations of length `k`, in lexicographic order.
pub fn simple_permutations(k: usize) -> Vec<Permutation> {
    all_permutations(k).filter(Permutation::is_simple).collect()
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// Rearranges `word` into its lexicographic successor; `false` at the last one.
pub fn next_permutation(word: &mut [usize]) -> bool {
    let n = word.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && word[i - 1] >= word[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while word[j] <= word[i - 1] {
        j -= 1;
    }
    word.swap(i - 1, j);
    word[i..].reverse();
    true
}

/// The permutation of rank `rank` (0-based) in lexicographic order of `S_n`.
pub fn unrank(n: usize, mut rank: u64) -> Permutation {
    let mut pool: Vec<usize> = (1..=n).collect();
    let mut word = Vec::with_capacity(n);
    for k in (0..n).rev() {
        let f = factorial(k);
        let idx = (rank / f) as usize;
        rank %= f;
        word.push(pool.remove(idx));
    }
    Permutation { word }
}

/// Iterator over a contiguous lexicographic range of `S_n`.
#[derive(Clone, Debug)]
pub struct LexRange {
    next: Option<Vec<usize>>,
    remaining: u64,
}

impl Iterator for LexRange {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.remaining == 0 {
            return None;
        }
        let current = self.next.take()?;
        self.remaining -= 1;
        if self.remaining > 0 {
            let mut succ = current.clone();
            if next_permutation(&mut succ) {
                self.next = Some(succ);
            }
        }
        Some(Permutation { word: current })
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let r = self.remaining as usize;
        (r, Some(r))
    }
}

/// `count` permutations of `S_n` starting at lexicographic rank `start`.
pub fn lexicographic_range(n: usize, start: u64, count: u64) -> LexRange {
    let total = factorial(n);
    let count = count.min(total.saturating_sub(start));
    LexRange {
        next: (count > 0).then(|| unrank(n, start).word),
        remaining: count,
    }
}

/// Every permutation of `S_n` in lexicographic order.
pub fn all_permutations(n: usize) -> LexRange {
    lexicographic_range(n, 0, factorial(n))
}
