//! Poset files (JSON) and Graphviz export.
//!
//! A poset file names its nodes with arbitrary strings, lists the `n` minimal
//! nodes left to right in `min_order`, and gives the Hasse diagram as
//! `[child, parent]` pairs.

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::ValueInterval;
use crate::poset::{Element, IntervalPoset};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PosetFile {
    pub n: usize,
    pub nodes: Vec<String>,
    pub min_order: Vec<String>,
    pub covers: Vec<[String; 2]>,
}

impl PosetFile {
    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("poset file serializes")
    }

    /// The file for `P`; node ids are the interval labels. A bottom element
    /// is not written.
    pub fn from_poset(poset: &IntervalPoset) -> Self {
        let label = |i: usize| poset.element(i).to_string();
        let nodes: Vec<String> = (0..poset.len())
            .filter(|&i| !poset.element(i).is_bottom())
            .map(label)
            .collect();
        let min_order = (1..=poset.n())
            .map(|v| ValueInterval::singleton(v).to_string())
            .collect();
        let covers = poset
            .covers()
            .into_iter()
            .filter(|&(c, _)| !poset.element(c).is_bottom())
            .map(|(c, p)| [label(c), label(p)])
            .collect();
        PosetFile {
            n: poset.n(),
            nodes,
            min_order,
            covers,
        }
    }

    /// Reads the file as a family of value intervals and rebuilds the poset
    /// from it. Fails with [`Error::InvalidPosetFile`] for inconsistent files
    /// and [`Error::NotAnIntervalPoset`] when the diagram cannot be the
    /// inclusion order of intervals over `min_order`.
    pub fn to_interval_poset(&self) -> Result<IntervalPoset> {
        let n = self.n;
        if n == 0 {
            return Err(Error::InvalidPosetFile("n must be positive".into()));
        }
        if self.min_order.len() != n {
            return Err(Error::InvalidPosetFile(format!(
                "min_order lists {} nodes but n = {n}",
                self.min_order.len()
            )));
        }
        let mut id: HashMap<&str, usize> = HashMap::new();
        for (i, name) in self.nodes.iter().enumerate() {
            if id.insert(name.as_str(), i).is_some() {
                return Err(Error::InvalidPosetFile(format!("duplicate node `{name}`")));
            }
        }
        let lookup = |name: &str| {
            id.get(name)
                .copied()
                .ok_or_else(|| Error::InvalidPosetFile(format!("unknown node `{name}`")))
        };
        let m = self.nodes.len();
        let mut children: Vec<Vec<usize>> = vec![Vec::new(); m];
        let mut parents: Vec<Vec<usize>> = vec![Vec::new(); m];
        let mut seen = HashSet::new();
        for [c, p] in &self.covers {
            let (c, p) = (lookup(c)?, lookup(p)?);
            if c == p {
                return Err(Error::InvalidPosetFile(format!(
                    "self cover on `{}`",
                    self.nodes[c]
                )));
            }
            if !seen.insert((c, p)) {
                return Err(Error::InvalidPosetFile(format!(
                    "repeated cover [{}, {}]",
                    self.nodes[c], self.nodes[p]
                )));
            }
            children[p].push(c);
            parents[c].push(p);
        }
        let mut leaf_index = vec![usize::MAX; m];
        for (k, name) in self.min_order.iter().enumerate() {
            let i = lookup(name)?;
            if leaf_index[i] != usize::MAX {
                return Err(Error::InvalidPosetFile(format!(
                    "`{name}` repeated in min_order"
                )));
            }
            leaf_index[i] = k + 1;
        }
        for i in 0..m {
            let is_min = children[i].is_empty();
            if is_min != (leaf_index[i] != usize::MAX) {
                return Err(Error::NotAnIntervalPoset(format!(
                    "minimal nodes and min_order disagree at `{}`",
                    self.nodes[i]
                )));
            }
        }
        let maxima: Vec<usize> = (0..m).filter(|&i| parents[i].is_empty()).collect();
        if maxima.len() != 1 {
            return Err(Error::NotAnIntervalPoset(format!(
                "expected a unique maximal element, found {}",
                maxima.len()
            )));
        }
        if let Some(i) = (0..m).find(|&i| children[i].len() == 1) {
            return Err(Error::NotAnIntervalPoset(format!(
                "`{}` covers exactly one element",
                self.nodes[i]
            )));
        }

        // minimal elements below each node, by memoized DFS with cycle check
        let mut below: Vec<Option<Vec<usize>>> = vec![None; m];
        let mut on_stack = vec![false; m];
        fn collect(
            i: usize,
            children: &[Vec<usize>],
            leaf_index: &[usize],
            below: &mut Vec<Option<Vec<usize>>>,
            on_stack: &mut Vec<bool>,
        ) -> std::result::Result<(), ()> {
            if below[i].is_some() {
                return Ok(());
            }
            if on_stack[i] {
                return Err(());
            }
            on_stack[i] = true;
            let mut set = Vec::new();
            if children[i].is_empty() {
                set.push(leaf_index[i]);
            }
            for &c in &children[i] {
                collect(c, children, leaf_index, below, on_stack)?;
                set.extend_from_slice(below[c].as_ref().unwrap());
            }
            set.sort_unstable();
            set.dedup();
            on_stack[i] = false;
            below[i] = Some(set);
            Ok(())
        }
        for i in 0..m {
            collect(i, &children, &leaf_index, &mut below, &mut on_stack)
                .map_err(|_| Error::NotAnIntervalPoset("cover relation has a cycle".into()))?;
        }

        let mut as_interval = Vec::with_capacity(m);
        for (i, set) in below.iter().enumerate() {
            let set = set.as_ref().unwrap();
            let (lo, hi) = (set[0], *set.last().unwrap());
            if hi - lo + 1 != set.len() {
                return Err(Error::NotAnIntervalPoset(format!(
                    "minimal elements below `{}` are not consecutive",
                    self.nodes[i]
                )));
            }
            as_interval.push(ValueInterval::new(lo, hi));
        }
        let mut distinct = HashSet::new();
        for (i, iv) in as_interval.iter().enumerate() {
            if !distinct.insert(*iv) {
                return Err(Error::NotAnIntervalPoset(format!(
                    "`{}` lies over the same minimal elements as another node",
                    self.nodes[i]
                )));
            }
        }
        let poset = IntervalPoset::from_intervals(n, as_interval.iter().copied())?;
        let mut given: Vec<(ValueInterval, ValueInterval)> = self
            .covers
            .iter()
            .map(|[c, p]| (as_interval[id[c.as_str()]], as_interval[id[p.as_str()]]))
            .collect();
        let mut derived: Vec<(ValueInterval, ValueInterval)> = poset
            .covers()
            .into_iter()
            .map(|(c, p)| {
                (
                    poset.element(c).interval().unwrap(),
                    poset.element(p).interval().unwrap(),
                )
            })
            .collect();
        given.sort_unstable();
        derived.sort_unstable();
        if given != derived {
            return Err(Error::NotAnIntervalPoset(
                "covers are not the Hasse diagram of inclusion among the nodes".into(),
            ));
        }
        Ok(poset)
    }
}

fn dot_id(e: Element) -> String {
    match e {
        Element::Interval(iv) => format!("i{}_{}", iv.lo, iv.hi),
        Element::Bottom => "bottom".into(),
    }
}

/// Canonical Hasse diagram in Graphviz syntax: one rank per depth, elements
/// within a rank chained left to right by invisible edges.
pub fn to_dot(poset: &IntervalPoset) -> Result<String> {
    let layout = poset.canonical_layout()?;
    let mut out = String::new();
    writeln!(out, "digraph interval_poset {{").unwrap();
    writeln!(out, "  rankdir=TB;").unwrap();
    writeln!(out, "  node [shape=plaintext];").unwrap();
    writeln!(out, "  edge [dir=none];").unwrap();
    for i in 0..poset.len() {
        let e = poset.element(i);
        writeln!(out, "  {} [label=\"{}\"];", dot_id(e), e).unwrap();
    }
    for (depth, level) in layout.levels().iter().enumerate() {
        let ids: Vec<String> = level.iter().map(|&i| dot_id(poset.element(i))).collect();
        writeln!(
            out,
            "  subgraph level{depth} {{ rank=same; {}; }}",
            ids.join("; ")
        )
        .unwrap();
        if ids.len() > 1 {
            writeln!(out, "  {} [style=invis];", ids.join(" -> ")).unwrap();
        }
    }
    for (c, p) in poset.covers() {
        writeln!(
            out,
            "  {} -> {};",
            dot_id(poset.element(p)),
            dot_id(poset.element(c))
        )
        .unwrap();
    }
    writeln!(out, "}}").unwrap();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{all_permutations, Permutation};

    fn file(n: usize, nodes: &[&str], mins: &[&str], covers: &[(&str, &str)]) -> PosetFile {
        PosetFile {
            n,
            nodes: nodes.iter().map(|s| s.to_string()).collect(),
            min_order: mins.iter().map(|s| s.to_string()).collect(),
            covers: covers
                .iter()
                .map(|(c, p)| [c.to_string(), p.to_string()])
                .collect(),
        }
    }

    #[test]
    fn round_trip_through_file() {
        for n in 1..=5 {
            for w in all_permutations(n) {
                let poset = IntervalPoset::of(&w);
                let f = PosetFile::from_poset(&poset);
                let back = PosetFile::from_json(&f.to_json()).unwrap();
                assert_eq!(back.to_interval_poset().unwrap(), poset);
            }
        }
    }

    #[test]
    fn arbitrary_ids_and_orders() {
        let f = file(
            3,
            &["top", "L", "a", "b", "c"],
            &["a", "b", "c"],
            &[("L", "top"), ("c", "top"), ("a", "L"), ("b", "L")],
        );
        let poset = f.to_interval_poset().unwrap();
        assert_eq!(
            poset,
            IntervalPoset::of(&Permutation::parse("213").unwrap())
        );
        // same diagram, minimal elements listed in the other direction
        let f = file(
            3,
            &["top", "L", "a", "b", "c"],
            &["c", "b", "a"],
            &[("L", "top"), ("c", "top"), ("a", "L"), ("b", "L")],
        );
        let poset = f.to_interval_poset().unwrap();
        assert_eq!(
            poset,
            IntervalPoset::of(&Permutation::parse("132").unwrap())
        );
    }

    #[test]
    fn malformed_files() {
        let bad = file(2, &["t", "a", "a"], &["a", "a"], &[]);
        assert!(matches!(
            bad.to_interval_poset(),
            Err(Error::InvalidPosetFile(_))
        ));
        let bad = file(2, &["t", "a", "b"], &["a", "b"], &[("a", "t"), ("x", "t")]);
        assert!(matches!(
            bad.to_interval_poset(),
            Err(Error::InvalidPosetFile(_))
        ));
        let bad = file(3, &["t", "a", "b"], &["a", "b"], &[("a", "t"), ("b", "t")]);
        assert!(matches!(
            bad.to_interval_poset(),
            Err(Error::InvalidPosetFile(_))
        ));
        assert!(PosetFile::from_json("{\"n\": 2}").is_err());
        assert!(PosetFile::from_json(
            "{\"n\":1,\"nodes\":[\"a\"],\"min_order\":[\"a\"],\"covers\":[],\"x\":1}"
        )
        .is_err());
    }

    #[test]
    fn structural_rejections() {
        // one child
        let f = file(
            2,
            &["t", "m", "a", "b"],
            &["a", "b"],
            &[("m", "t"), ("a", "m"), ("b", "m")],
        );
        assert!(matches!(
            f.to_interval_poset(),
            Err(Error::NotAnIntervalPoset(_))
        ));
        // two maxima
        let f = file(
            2,
            &["t", "u", "a", "b"],
            &["a", "b"],
            &[("a", "t"), ("b", "t"), ("a", "u"), ("b", "u")],
        );
        assert!(matches!(
            f.to_interval_poset(),
            Err(Error::NotAnIntervalPoset(_))
        ));
        // non-consecutive: node over a and c only
        let f = file(
            3,
            &["t", "x", "a", "b", "c"],
            &["a", "b", "c"],
            &[("x", "t"), ("b", "t"), ("a", "x"), ("c", "x")],
        );
        assert!(matches!(
            f.to_interval_poset(),
            Err(Error::NotAnIntervalPoset(_))
        ));
        // transitive edge added to a valid diagram
        let f = file(
            3,
            &["t", "L", "a", "b", "c"],
            &["a", "b", "c"],
            &[("L", "t"), ("c", "t"), ("a", "L"), ("b", "L"), ("a", "t")],
        );
        assert!(matches!(
            f.to_interval_poset(),
            Err(Error::NotAnIntervalPoset(_))
        ));
        // cycle
        let f = file(
            2,
            &["t", "x", "y", "a", "b"],
            &["a", "b"],
            &[("x", "t"), ("y", "x"), ("x", "y"), ("a", "y"), ("b", "y")],
        );
        assert!(matches!(
            f.to_interval_poset(),
            Err(Error::NotAnIntervalPoset(_))
        ));
    }

    #[test]
    fn dot_output() {
        let poset = IntervalPoset::of(&Permutation::parse("123").unwrap());
        let dot = to_dot(&poset).unwrap();
        assert!(dot.starts_with("digraph interval_poset {"));
        assert!(dot.contains("i1_3 [label=\"[1,3]\"];"));
        assert!(dot.contains("i2_2 [label=\"{2}\"];"));
        assert!(dot.contains("subgraph level1 { rank=same; i1_2; i2_3; }"));
        assert!(dot.contains("i1_1 -> i2_2 -> i3_3 [style=invis];"));
        assert!(dot.contains("i2_3 -> i2_2;"));
        assert_eq!(dot.matches(" -> ").count() - 3, poset.covers().len());
    }
}
