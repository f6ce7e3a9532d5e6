//! Recognizing interval posets and listing their interval generators.
//!
//! An interval poset is built from the one-element poset by repeatedly
//! replacing a minimal element with a dual claw (one element over `k >= 4`
//! disjoint children), or with an argyle/binary block (a direct or skew sum
//! chain). [`recognize`] recovers such a construction as a [`BlockTree`], and
//! the tree determines every permutation with the given poset:
//!
//! * a dual claw on `k` children admits any simple permutation of length `k`;
//! * a chain at the top of the construction, or directly in a dual-claw slot,
//!   may be a direct sum or a skew sum;
//! * a chain nested as a part of another chain must have the opposite kind,
//!   otherwise the two chains would merge into one.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigUint;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::{factorial, simple_permutations, Permutation, ValueInterval};
use crate::poset::IntervalPoset;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ChainKind {
    Sum,
    Skew,
}

impl ChainKind {
    pub fn opposite(self) -> Self {
        match self {
            ChainKind::Sum => ChainKind::Skew,
            ChainKind::Skew => ChainKind::Sum,
        }
    }
}

/// Whether a chain block chooses its kind or inherits it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Orientation {
    /// Root block or a block filling a dual-claw slot: either kind.
    Free,
    /// Part of an enclosing chain: the opposite of that chain's kind.
    Forced,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum BlockTree {
    Leaf {
        value: usize,
    },
    DualClaw {
        span: ValueInterval,
        children: Vec<BlockTree>,
    },
    /// Parts in increasing value order. Two parts give a binary node.
    ArgyleChain {
        span: ValueInterval,
        parts: Vec<BlockTree>,
        orientation: Orientation,
    },
}

impl BlockTree {
    pub fn span(&self) -> ValueInterval {
        match self {
            BlockTree::Leaf { value } => ValueInterval::singleton(*value),
            BlockTree::DualClaw { span, .. } | BlockTree::ArgyleChain { span, .. } => *span,
        }
    }

    /// The intervals the construction produces.
    pub fn expand(&self) -> Vec<ValueInterval> {
        let mut out = Vec::new();
        self.expand_into(&mut out);
        out.sort_unstable_by_key(|iv| iv.size_key());
        out.dedup();
        out
    }

    fn expand_into(&self, out: &mut Vec<ValueInterval>) {
        match self {
            BlockTree::Leaf { value } => out.push(ValueInterval::singleton(*value)),
            BlockTree::DualClaw { span, children } => {
                out.push(*span);
                children.iter().for_each(|c| c.expand_into(out));
            }
            BlockTree::ArgyleChain { parts, .. } => {
                for i in 0..parts.len() {
                    for j in i..parts.len() {
                        out.push(ValueInterval::new(parts[i].span().lo, parts[j].span().hi));
                    }
                }
                parts.iter().for_each(|p| p.expand_into(out));
            }
        }
    }

    /// Number of dual-claw and chain blocks.
    pub fn block_count(&self) -> usize {
        match self {
            BlockTree::Leaf { .. } => 0,
            BlockTree::DualClaw { children: sub, .. }
            | BlockTree::ArgyleChain { parts: sub, .. } => {
                1 + sub.iter().map(BlockTree::block_count).sum::<usize>()
            }
        }
    }
}

impl fmt::Display for BlockTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BlockTree::Leaf { value } => write!(f, "{value}"),
            BlockTree::DualClaw { children, .. } => {
                write!(f, "Λ{}(", children.len())?;
                for (i, c) in children.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    c.fmt(f)?;
                }
                f.write_str(")")
            }
            BlockTree::ArgyleChain {
                parts, orientation, ..
            } => {
                let tag = match orientation {
                    Orientation::Free => "A",
                    Orientation::Forced => "a",
                };
                write!(f, "{tag}{}(", parts.len())?;
                for (i, c) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    c.fmt(f)?;
                }
                f.write_str(")")
            }
        }
    }
}

struct Recognizer<'a> {
    poset: &'a IntervalPoset,
    index: HashMap<ValueInterval, usize>,
}

impl Recognizer<'_> {
    fn interval(&self, i: usize) -> ValueInterval {
        self.poset.element(i).interval().expect("interval element")
    }

    fn kids(&self, i: usize) -> Vec<ValueInterval> {
        self.poset
            .children(i)
            .iter()
            .filter(|&&c| !self.poset.element(c).is_bottom())
            .map(|&c| self.interval(c))
            .collect()
    }

    fn reject<T>(&self, why: String) -> Result<T> {
        Err(Error::NotAnIntervalPoset(why))
    }

    fn node(&self, iv: ValueInterval, orientation: Orientation) -> Result<BlockTree> {
        let i = self.index[&iv];
        let kids = self.kids(i);
        match kids.len() {
            0 => Ok(BlockTree::Leaf { value: iv.lo }),
            1 => self.reject(format!("{iv} covers exactly one element")),
            2 => self.chain(iv, orientation),
            3 => self.reject(format!("{iv} covers exactly three elements")),
            _ => self.claw(iv, kids),
        }
    }

    fn claw(&self, iv: ValueInterval, kids: Vec<ValueInterval>) -> Result<BlockTree> {
        let tiles = kids.first().map(|k| k.lo) == Some(iv.lo)
            && kids.last().map(|k| k.hi) == Some(iv.hi)
            && kids.windows(2).all(|w| w[0].hi + 1 == w[1].lo);
        if !tiles {
            return self.reject(format!(
                "{iv} covers {} elements that do not partition it",
                kids.len()
            ));
        }
        let children = kids
            .into_iter()
            .map(|k| self.node(k, Orientation::Free))
            .collect::<Result<_>>()?;
        Ok(BlockTree::DualClaw { span: iv, children })
    }

    /// Peels chain parts left to right: while the current node's two
    /// children overlap, the leftmost part is `left \ right`.
    fn chain(&self, iv: ValueInterval, orientation: Orientation) -> Result<BlockTree> {
        let mut parts = Vec::new();
        let mut cur = iv;
        loop {
            let kids = self.kids(self.index[&cur]);
            if kids.len() != 2 {
                return self.reject(format!("{cur} should cover two chain segments"));
            }
            let (left, right) = (kids[0], kids[1]);
            if left.lo != cur.lo || right.hi != cur.hi {
                return self.reject(format!("the children of {cur} do not cover its ends"));
            }
            if left.hi + 1 == right.lo {
                parts.push(left);
                parts.push(right);
                break;
            }
            if left.hi + 1 < right.lo {
                return self.reject(format!("the children of {cur} leave a gap"));
            }
            let first = ValueInterval::new(cur.lo, right.lo - 1);
            if !self.index.contains_key(&first) {
                return self.reject(format!("{first} is missing from the chain under {iv}"));
            }
            parts.push(first);
            cur = right;
        }
        let parts = parts
            .into_iter()
            .map(|p| self.node(p, Orientation::Forced))
            .collect::<Result<_>>()?;
        Ok(BlockTree::ArgyleChain {
            span: iv,
            parts,
            orientation,
        })
    }
}

/// Decomposes `poset` into blocks, or explains why it is not the interval
/// poset of any permutation. The result is checked by re-expansion.
pub fn recognize(poset: &IntervalPoset) -> Result<BlockTree> {
    let recognizer = Recognizer {
        poset,
        index: poset
            .intervals()
            .into_iter()
            .enumerate()
            .map(|(i, iv)| (iv, i))
            .collect(),
    };
    let top = ValueInterval::new(1, poset.n());
    let tree = recognizer.node(top, Orientation::Free)?;
    if tree.expand() != poset.intervals() {
        return Err(Error::NotAnIntervalPoset(
            "block decomposition does not reproduce the poset".into(),
        ));
    }
    Ok(tree)
}

/// Number of simple permutations of length `k`, from the counting identity
/// `n! = 2·(n! − I_n) + Σ_{4≤j≤n} simp(j)·[x^n] F(x)^j` for `n >= 4`, where
/// `I_n` counts sum-indecomposable permutations and `F(x) = Σ m! x^m`.
pub fn simple_count(k: usize) -> BigUint {
    match k {
        0 => return BigUint::from(0u32),
        1 => return BigUint::from(1u32),
        2 => return BigUint::from(2u32),
        3 => return BigUint::from(0u32),
        _ => {}
    }
    let fact: Vec<BigUint> = (0..=k)
        .scan(BigUint::from(1u32), |acc, i| {
            if i > 0 {
                *acc *= i;
            }
            Some(acc.clone())
        })
        .collect();
    // sum-indecomposables: m! = Σ_{j=1}^{m} I_j (m-j)!
    let mut indec = vec![BigUint::from(0u32); k + 1];
    for m in 1..=k {
        let mut decomposable = BigUint::from(0u32);
        for j in 1..m {
            decomposable += &indec[j] * &fact[m - j];
        }
        indec[m] = &fact[m] - decomposable;
    }
    // powers[j][m] = [x^m] F(x)^j
    let base: Vec<BigUint> = (0..=k)
        .map(|m| {
            if m == 0 {
                BigUint::from(0u32)
            } else {
                fact[m].clone()
            }
        })
        .collect();
    let mut powers = vec![vec![BigUint::from(0u32); k + 1]; k + 1];
    powers[0][0] = BigUint::from(1u32);
    for j in 1..=k {
        for m in j..=k {
            let mut c = BigUint::from(0u32);
            for t in 1..=m - (j - 1) {
                c += &base[t] * &powers[j - 1][m - t];
            }
            powers[j][m] = c;
        }
    }
    let mut simp = vec![BigUint::from(0u32); k + 1];
    for m in 4..=k {
        let decomposable = &fact[m] - &indec[m];
        let mut inflations = BigUint::from(0u32);
        for (j, s) in simp.iter().enumerate().take(m).skip(4) {
            inflations += s * &powers[j][m];
        }
        simp[m] = &fact[m] - decomposable * 2u32 - inflations;
    }
    simp.swap_remove(k)
}

/// `|I(P)|` for the poset `tree` was recognized from.
pub fn count_generators(tree: &BlockTree) -> BigUint {
    match tree {
        BlockTree::Leaf { .. } => BigUint::from(1u32),
        BlockTree::DualClaw { children, .. } => children
            .iter()
            .map(count_generators)
            .fold(simple_count(children.len()), |acc, c| acc * c),
        BlockTree::ArgyleChain {
            parts, orientation, ..
        } => {
            let choices = match orientation {
                Orientation::Free => 2u32,
                Orientation::Forced => 1u32,
            };
            parts
                .iter()
                .map(count_generators)
                .fold(BigUint::from(choices), |acc, c| acc * c)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeneratorSet {
    pub permutations: Vec<Permutation>,
    pub count: usize,
}

/// Words over the values of `tree`'s span, one per generator of the block.
fn block_words(
    tree: &BlockTree,
    enclosing: Option<ChainKind>,
    simples: &mut HashMap<usize, Vec<Permutation>>,
) -> Vec<Vec<usize>> {
    match tree {
        BlockTree::Leaf { value } => vec![vec![*value]],
        BlockTree::DualClaw { children, .. } => {
            let child_words: Vec<Vec<Vec<usize>>> = children
                .iter()
                .map(|c| block_words(c, None, simples))
                .collect();
            let k = children.len();
            let skeletons = simples
                .entry(k)
                .or_insert_with(|| simple_permutations(k))
                .clone();
            let mut out = Vec::new();
            for v in &skeletons {
                // position i holds the child of value rank v(i)
                let slots: Vec<&Vec<Vec<usize>>> =
                    v.as_slice().iter().map(|&r| &child_words[r - 1]).collect();
                out.extend(concatenations(&slots));
            }
            out
        }
        BlockTree::ArgyleChain {
            parts, orientation, ..
        } => {
            let kinds = match (orientation, enclosing) {
                (Orientation::Free, _) | (Orientation::Forced, None) => {
                    vec![ChainKind::Sum, ChainKind::Skew]
                }
                (Orientation::Forced, Some(outer)) => vec![outer.opposite()],
            };
            let mut out = Vec::new();
            for kind in kinds {
                let part_words: Vec<Vec<Vec<usize>>> = parts
                    .iter()
                    .map(|p| block_words(p, Some(kind), simples))
                    .collect();
                let mut slots: Vec<&Vec<Vec<usize>>> = part_words.iter().collect();
                if kind == ChainKind::Skew {
                    slots.reverse();
                }
                out.extend(concatenations(&slots));
            }
            out
        }
    }
}

/// Every concatenation picking one word per slot, in slot order.
fn concatenations(slots: &[&Vec<Vec<usize>>]) -> Vec<Vec<usize>> {
    let mut acc: Vec<Vec<usize>> = vec![Vec::new()];
    for options in slots {
        let mut next = Vec::with_capacity(acc.len() * options.len());
        for prefix in &acc {
            for word in options.iter() {
                let mut w = prefix.clone();
                w.extend_from_slice(word);
                next.push(w);
            }
        }
        acc = next;
    }
    acc
}

/// All interval generators of the recognized poset, lexicographically
/// sorted, each verified to reproduce the poset.
pub fn generators(tree: &BlockTree) -> Result<GeneratorSet> {
    let expected = tree.expand();
    let mut simples = HashMap::new();
    let mut permutations: Vec<Permutation> = block_words(tree, None, &mut simples)
        .into_iter()
        .map(Permutation::from_word_unchecked)
        .collect();
    permutations.sort_unstable();
    permutations.dedup();
    for g in &permutations {
        if g.intervals() != expected {
            return Err(Error::VerificationFailure(format!(
                "{g} does not generate the recognized poset"
            )));
        }
    }
    if BigUint::from(permutations.len()) != count_generators(tree) {
        return Err(Error::VerificationFailure(format!(
            "listed {} generators but the block count is {}",
            permutations.len(),
            count_generators(tree)
        )));
    }
    Ok(GeneratorSet {
        count: permutations.len(),
        permutations,
    })
}

/// The two alternating depth-first search words of a binary tree poset: the
/// first goes left first at even distance from the top, the second right
/// first. Minimal elements are read by their left-to-right labels.
pub fn adfs_words(poset: &IntervalPoset) -> Result<(Permutation, Permutation)> {
    let m = poset.intervals().len();
    for i in 0..m {
        let kids = poset
            .children(i)
            .iter()
            .filter(|&&c| !poset.element(c).is_bottom())
            .count();
        if kids != 0 && kids != 2 {
            return Err(Error::NotBinaryTree(format!(
                "{} has {kids} children",
                poset.element(i)
            )));
        }
        if i != poset.root() && poset.parents(i).len() != 1 {
            return Err(Error::NotBinaryTree(format!(
                "{} has {} parents",
                poset.element(i),
                poset.parents(i).len()
            )));
        }
    }
    fn walk(
        poset: &IntervalPoset,
        i: usize,
        depth: usize,
        left_first_even: bool,
        out: &mut Vec<usize>,
    ) {
        let kids: Vec<usize> = poset
            .children(i)
            .iter()
            .copied()
            .filter(|&c| !poset.element(c).is_bottom())
            .collect();
        if kids.is_empty() {
            out.push(poset.element(i).interval().unwrap().lo);
            return;
        }
        let left_first = depth.is_multiple_of(2) == left_first_even;
        let order = if left_first {
            [kids[0], kids[1]]
        } else {
            [kids[1], kids[0]]
        };
        for c in order {
            walk(poset, c, depth + 1, left_first_even, out);
        }
    }
    let mut first = Vec::with_capacity(poset.n());
    let mut second = Vec::with_capacity(poset.n());
    walk(poset, poset.root(), 0, true, &mut first);
    walk(poset, poset.root(), 0, false, &mut second);
    Ok((
        Permutation::from_word_unchecked(first),
        Permutation::from_word_unchecked(second),
    ))
}

/// `n!` as a big integer, for comparing class sizes against `|S_n|`.
pub fn factorial_big(n: usize) -> BigUint {
    if n <= 20 {
        BigUint::from(factorial(n))
    } else {
        (1..=n).fold(BigUint::from(1u32), |acc, i| acc * i)
    }
}
