//! Substitution decomposition: every permutation with at least two letters is
//! a simple inflation with a skeleton of length at least 4, a maximal direct
//! sum of sum-indecomposables, or a maximal skew sum of skew-indecomposables.

use std::fmt;

use crate::perm::{Permutation, ValueInterval};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DecompositionTree {
    Leaf,
    Simple {
        skeleton: Permutation,
        parts: Vec<DecompositionTree>,
    },
    SumChain(Vec<DecompositionTree>),
    SkewChain(Vec<DecompositionTree>),
}

impl DecompositionTree {
    /// Re-inflates the tree into the permutation it describes.
    pub fn to_permutation(&self) -> Permutation {
        match self {
            DecompositionTree::Leaf => Permutation::identity(1),
            DecompositionTree::Simple { skeleton, parts } => {
                let parts: Vec<_> = parts.iter().map(Self::to_permutation).collect();
                skeleton
                    .inflate(&parts)
                    .expect("skeleton length matches part count")
            }
            DecompositionTree::SumChain(parts) => parts
                .iter()
                .map(Self::to_permutation)
                .reduce(|acc, p| acc.direct_sum(&p))
                .expect("chain has parts"),
            DecompositionTree::SkewChain(parts) => parts
                .iter()
                .map(Self::to_permutation)
                .reduce(|acc, p| acc.skew_sum(&p))
                .expect("chain has parts"),
        }
    }

    /// The top-level components as permutations.
    pub fn part_permutations(&self) -> Vec<Permutation> {
        match self {
            DecompositionTree::Leaf => Vec::new(),
            DecompositionTree::Simple { parts, .. }
            | DecompositionTree::SumChain(parts)
            | DecompositionTree::SkewChain(parts) => {
                parts.iter().map(Self::to_permutation).collect()
            }
        }
    }
}

impl fmt::Display for DecompositionTree {
    /// Top level only, e.g. `3142[21,1,4312,1]` or `1⊕1⊕1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .part_permutations()
            .iter()
            .map(|p| p.to_string())
            .collect();
        match self {
            DecompositionTree::Leaf => f.write_str("1"),
            DecompositionTree::Simple { skeleton, .. } => {
                write!(f, "{}[{}]", skeleton, parts.join(","))
            }
            DecompositionTree::SumChain(_) => f.write_str(&parts.join("⊕")),
            DecompositionTree::SkewChain(_) => f.write_str(&parts.join("⊖")),
        }
    }
}

/// Full recursive substitution decomposition of `w`.
pub fn substitution_decomposition(w: &Permutation) -> DecompositionTree {
    if w.len() == 1 {
        return DecompositionTree::Leaf;
    }
    let sum = w.sum_components();
    if sum.len() >= 2 {
        return DecompositionTree::SumChain(sum.iter().map(substitution_decomposition).collect());
    }
    let skew = w.skew_components();
    if skew.len() >= 2 {
        return DecompositionTree::SkewChain(skew.iter().map(substitution_decomposition).collect());
    }
    let (skeleton, blocks) = simple_skeleton(w);
    DecompositionTree::Simple {
        skeleton,
        parts: blocks
            .iter()
            .map(|&b| substitution_decomposition(&w.restrict(b)))
            .collect(),
    }
}

/// For a sum- and skew-indecomposable `w` (length at least 2): the simple
/// skeleton and the blocks it inflates, in position order.
fn simple_skeleton(w: &Permutation) -> (Permutation, Vec<ValueInterval>) {
    let n = w.len();
    let candidates: Vec<ValueInterval> = w
        .intervals()
        .into_iter()
        .filter(|iv| iv.len() < n)
        .collect();
    // maximal intervals below the whole; they partition [1..n]
    let mut maximal: Vec<ValueInterval> = Vec::new();
    for iv in candidates.iter().rev() {
        if !maximal.iter().any(|m| iv.is_subset(m)) {
            maximal.push(*iv);
        }
    }
    let pos = w.positions();
    maximal.sort_unstable_by_key(|b| pos[b.lo - 1]);
    let mut by_value: Vec<usize> = (0..maximal.len()).collect();
    by_value.sort_unstable_by_key(|&i| maximal[i].lo);
    let mut skeleton = vec![0; maximal.len()];
    for (rank, i) in by_value.into_iter().enumerate() {
        skeleton[i] = rank + 1;
    }
    (Permutation::from_word_unchecked(skeleton), maximal)
}

/// Some interval of `w` is a direct or skew sum of at least three parts.
pub fn has_monotone_triple_interval(w: &Permutation) -> bool {
    w.intervals()
        .into_iter()
        .filter(|iv| iv.len() >= 3)
        .any(|iv| {
            let sub = w.restrict(iv);
            sub.sum_components().len() >= 3 || sub.skew_components().len() >= 3
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::all_permutations;

    fn p(s: &str) -> Permutation {
        Permutation::parse(s).unwrap()
    }

    #[test]
    fn worked_example() {
        let d = substitution_decomposition(&p("43187562"));
        match &d {
            DecompositionTree::Simple { skeleton, .. } => assert_eq!(*skeleton, p("3142")),
            other => panic!("expected simple inflation, got {other:?}"),
        }
        assert_eq!(
            d.part_permutations(),
            vec![p("21"), p("1"), p("4312"), p("1")]
        );
        assert_eq!(d.to_string(), "3142[21,1,4312,1]");
        assert_eq!(d.to_permutation(), p("43187562"));
    }

    #[test]
    fn chains() {
        assert_eq!(
            substitution_decomposition(&p("123")),
            DecompositionTree::SumChain(vec![DecompositionTree::Leaf; 3])
        );
        let d = substitution_decomposition(&p("3412"));
        assert_eq!(d.to_string(), "12⊖12");
        assert!(matches!(d, DecompositionTree::SkewChain(ref parts) if parts.len() == 2));
        assert_eq!(d.to_permutation(), p("3412"));
    }

    #[test]
    fn simple_permutation_is_its_own_skeleton() {
        let d = substitution_decomposition(&p("35142"));
        assert_eq!(
            d,
            DecompositionTree::Simple {
                skeleton: p("35142"),
                parts: vec![DecompositionTree::Leaf; 5]
            }
        );
    }

    fn check_node(t: &DecompositionTree) {
        match t {
            DecompositionTree::Leaf => {}
            DecompositionTree::Simple { skeleton, parts } => {
                assert!(skeleton.len() >= 4);
                assert!(skeleton.is_simple());
                assert_eq!(parts.len(), skeleton.len());
                parts.iter().for_each(check_node);
            }
            DecompositionTree::SumChain(parts) => {
                assert!(parts.len() >= 2);
                for part in parts {
                    assert!(!part.to_permutation().is_sum_decomposable());
                    check_node(part);
                }
            }
            DecompositionTree::SkewChain(parts) => {
                assert!(parts.len() >= 2);
                for part in parts {
                    assert!(!part.to_permutation().is_skew_decomposable());
                    check_node(part);
                }
            }
        }
    }

    #[test]
    fn round_trip_and_shape_up_to_seven() {
        for n in 2..=7 {
            for w in all_permutations(n) {
                let d = substitution_decomposition(&w);
                assert_eq!(d.to_permutation(), w);
                check_node(&d);
            }
        }
    }

    #[test]
    fn monotone_triples() {
        assert!(has_monotone_triple_interval(&p("123")));
        assert!(!has_monotone_triple_interval(&p("2413")));
        assert!(has_monotone_triple_interval(&p("43187562")));
        assert!(!has_monotone_triple_interval(&p("132")));
        // 8756 is 1⊖1⊖12
        assert_eq!(
            p("43187562")
                .restrict(ValueInterval::new(5, 8))
                .skew_components()
                .len(),
            3
        );
    }
}
