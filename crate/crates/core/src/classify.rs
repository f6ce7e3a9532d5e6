//! Tree, binary and binary-tree interval posets, recognized two ways: from
//! the Hasse diagram and from the permutation itself.

use serde::Serialize;

use crate::decomp::has_monotone_triple_interval;
use crate::perm::Permutation;
use crate::poset::IntervalPoset;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ClassificationFlags {
    pub is_tree: bool,
    pub is_binary: bool,
    pub is_binary_tree: bool,
}

impl ClassificationFlags {
    fn new(is_tree: bool, is_binary: bool) -> Self {
        ClassificationFlags {
            is_tree,
            is_binary,
            is_binary_tree: is_tree && is_binary,
        }
    }

    /// Short name of the family, used to group census tallies.
    pub fn family(&self) -> &'static str {
        match (self.is_tree, self.is_binary) {
            (true, true) => "binary_tree",
            (false, true) => "binary_not_tree",
            (true, false) => "tree_not_binary",
            (false, false) => "neither",
        }
    }
}

/// Tree: every element below the top has one parent. Binary: no fruitful
/// elements. The bottom element of a closed poset is ignored.
pub fn classify_poset(poset: &IntervalPoset) -> ClassificationFlags {
    let root = poset.root();
    let is_tree = (0..poset.len())
        .filter(|&i| i != root && !poset.element(i).is_bottom())
        .all(|i| poset.parents(i).len() == 1);
    let is_binary = (0..poset.len())
        .filter(|&i| !poset.element(i).is_bottom())
        .all(|i| {
            poset
                .children(i)
                .iter()
                .filter(|&&c| !poset.element(c).is_bottom())
                .count()
                < crate::poset::FRUITFUL_MIN_CHILDREN
        });
    ClassificationFlags::new(is_tree, is_binary)
}

/// Tree: no interval is a sum or skew sum of three or more parts. Binary:
/// avoids 2413 and 3142.
pub fn classify_permutation(w: &Permutation) -> ClassificationFlags {
    ClassificationFlags::new(!has_monotone_triple_interval(w), w.is_separable())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::all_permutations;

    fn p(s: &str) -> Permutation {
        Permutation::parse(s).unwrap()
    }

    #[test]
    fn poset_side() {
        let flags = classify_poset(&IntervalPoset::of(&p("43187562")));
        assert!(!flags.is_tree && !flags.is_binary && !flags.is_binary_tree);
        let flags = classify_poset(&IntervalPoset::of(&p("2413")));
        assert!(flags.is_tree && !flags.is_binary);
        let flags = classify_poset(&IntervalPoset::of(&p("132")));
        assert!(flags.is_tree && flags.is_binary && flags.is_binary_tree);
        let closed = IntervalPoset::of(&p("132")).close_with_bottom().unwrap();
        assert_eq!(classify_poset(&closed), flags);
    }

    #[test]
    fn permutation_side() {
        assert!(!classify_permutation(&p("123")).is_tree);
        assert!(!classify_permutation(&p("2413")).is_binary);
        assert!(!classify_permutation(&p("43187562")).is_binary);
        assert!(classify_permutation(&p("132")).is_binary_tree);
    }

    #[test]
    fn both_sides_agree_up_to_seven() {
        for n in 1..=7 {
            for w in all_permutations(n) {
                assert_eq!(
                    classify_poset(&IntervalPoset::of(&w)),
                    classify_permutation(&w),
                    "{w}"
                );
            }
        }
    }
}
