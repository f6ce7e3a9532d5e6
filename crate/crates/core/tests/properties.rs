use interval_poset::{
    classify_permutation, classify_poset, count_generators, generators, recognize,
    substitution_decomposition, BlockTree, IntervalPoset, Permutation, PosetFile,
};
use num_bigint::BigUint;
use proptest::prelude::*;

fn permutation(max_n: usize) -> impl Strategy<Value = Permutation> {
    (1..=max_n)
        .prop_flat_map(|n| Just((1..=n).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|word| Permutation::new(word).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn decomposition_reinflates(w in permutation(10)) {
        prop_assume!(w.len() >= 2);
        prop_assert_eq!(substitution_decomposition(&w).to_permutation(), w);
    }

    #[test]
    fn reverse_has_same_poset(w in permutation(10)) {
        prop_assert!(IntervalPoset::of(&w).equals(&IntervalPoset::of(&w.reverse())));
    }

    #[test]
    fn generators_contain_the_word(w in permutation(9)) {
        let poset = IntervalPoset::of(&w);
        let tree = recognize(&poset).unwrap();
        prop_assert_eq!(BlockTree::expand(&tree), poset.intervals());
        let set = generators(&tree).unwrap();
        prop_assert!(set.permutations.binary_search(&w).is_ok());
        prop_assert!(set.permutations.binary_search(&w.reverse()).is_ok());
        prop_assert_eq!(BigUint::from(set.permutations.len()), count_generators(&tree));
        for u in &set.permutations {
            prop_assert_eq!(u.intervals(), poset.intervals());
        }
    }

    #[test]
    fn classification_agrees(w in permutation(10)) {
        prop_assert_eq!(classify_poset(&IntervalPoset::of(&w)), classify_permutation(&w));
    }

    #[test]
    fn poset_file_round_trips(w in permutation(10)) {
        let poset = IntervalPoset::of(&w);
        let file = PosetFile::from_json(&PosetFile::from_poset(&poset).to_json()).unwrap();
        prop_assert!(file.to_interval_poset().unwrap().equals(&poset));
    }

    #[test]
    fn closed_poset_is_a_lattice(w in permutation(8)) {
        let closed = IntervalPoset::of(&w).close_with_bottom().unwrap();
        prop_assert!(closed.is_lattice());
        prop_assert_eq!(closed.is_modular().unwrap(), w.is_simple());
    }
}
