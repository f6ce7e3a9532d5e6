//! The interval poset `P(w)` of a permutation and its closure `P̄(w)`.
//!
//! Elements are the nonempty intervals of `w` ordered by inclusion; the closed
//! poset adds a bottom element standing for the empty interval. Minimal
//! elements are the singletons `{1}, ..., {n}`, always listed left to right in
//! value order, so every element is identified with the set of minimal-element
//! indices below it. Equality of posets is equality of these families.

use std::collections::VecDeque;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{FinitePoset, LatticeTables};
use crate::perm::{Permutation, ValueInterval};

/// Minimum number of covered elements for a fruitful element. Nothing covers
/// exactly three elements, so "at least 3" selects the same elements.
pub const FRUITFUL_MIN_CHILDREN: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Element {
    Interval(ValueInterval),
    Bottom,
}

impl Element {
    pub fn interval(&self) -> Option<ValueInterval> {
        match self {
            Element::Interval(iv) => Some(*iv),
            Element::Bottom => None,
        }
    }

    pub fn is_bottom(&self) -> bool {
        matches!(self, Element::Bottom)
    }
}

impl From<ValueInterval> for Element {
    fn from(iv: ValueInterval) -> Self {
        Element::Interval(iv)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Interval(iv) => iv.fmt(f),
            Element::Bottom => f.write_str("∅"),
        }
    }
}

/// Each element as the sorted set of (1-based, left-to-right) minimal-element
/// indices below it; the bottom element maps to the empty set.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CanonicalForm(pub Vec<Vec<usize>>);

#[derive(Clone, Debug)]
pub struct IntervalPoset {
    n: usize,
    /// Intervals sorted by (size, lo), then the bottom element if present.
    elements: Vec<Element>,
    children: Vec<Vec<usize>>,
    parents: Vec<Vec<usize>>,
    has_bottom: bool,
}

impl PartialEq for IntervalPoset {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.elements == other.elements
    }
}

impl Eq for IntervalPoset {}

impl IntervalPoset {
    /// `P(w)`.
    pub fn of(w: &Permutation) -> Self {
        Self::build(w.len(), w.intervals())
    }

    /// A poset from an arbitrary family of value ranges over `[1..n]`, which
    /// must contain every singleton and `[1, n]`. The family need not come
    /// from a permutation.
    pub fn from_intervals(
        n: usize,
        family: impl IntoIterator<Item = ValueInterval>,
    ) -> Result<Self> {
        if n == 0 {
            return Err(Error::NotAnIntervalPoset("no minimal elements".into()));
        }
        let mut family: Vec<ValueInterval> = family.into_iter().collect();
        if let Some(bad) = family.iter().find(|iv| iv.lo == 0 || iv.hi > n) {
            return Err(Error::NotAnIntervalPoset(format!(
                "{bad} lies outside [1,{n}]"
            )));
        }
        family.sort_unstable_by_key(|iv| iv.size_key());
        family.dedup();
        for v in 1..=n {
            if family
                .binary_search_by_key(&(1, v), |iv| iv.size_key())
                .is_err()
            {
                return Err(Error::NotAnIntervalPoset(format!(
                    "missing minimal element {{{v}}}"
                )));
            }
        }
        if family.last() != Some(&ValueInterval::new(1, n)) {
            return Err(Error::NotAnIntervalPoset(format!(
                "missing maximal element [1,{n}]"
            )));
        }
        Ok(Self::build(n, family))
    }

    /// `family` sorted by size key, deduplicated, with singletons and the top.
    fn build(n: usize, family: Vec<ValueInterval>) -> Self {
        let m = family.len();
        let mut children = vec![Vec::new(); m];
        let mut parents = vec![Vec::new(); m];
        for (j, top) in family.iter().enumerate() {
            // maximal elements strictly inside `top`, scanning larger ones first
            let mut kids: Vec<usize> = Vec::new();
            for i in (0..j).rev() {
                let iv = &family[i];
                if iv.is_strict_subset(top) && !kids.iter().any(|&k| iv.is_subset(&family[k])) {
                    kids.push(i);
                }
            }
            kids.sort_unstable_by_key(|&k| family[k].lo);
            for &k in &kids {
                parents[k].push(j);
            }
            children[j] = kids;
        }
        for ps in &mut parents {
            ps.sort_unstable_by_key(|&p| family[p].lo);
        }
        IntervalPoset {
            n,
            elements: family.into_iter().map(Element::Interval).collect(),
            children,
            parents,
            has_bottom: false,
        }
    }

    /// Number of minimal elements of `P` (atoms of `P̄`).
    pub fn n(&self) -> usize {
        self.n
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn has_bottom(&self) -> bool {
        self.has_bottom
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> Element {
        self.elements[i]
    }

    /// The intervals, without the bottom element.
    pub fn intervals(&self) -> Vec<ValueInterval> {
        self.elements.iter().filter_map(Element::interval).collect()
    }

    fn interval_count(&self) -> usize {
        self.elements.len() - usize::from(self.has_bottom)
    }

    pub fn index_of(&self, e: Element) -> Option<usize> {
        match e {
            Element::Bottom => self.has_bottom.then(|| self.elements.len() - 1),
            Element::Interval(iv) => self.elements[..self.interval_count()]
                .binary_search_by_key(&iv.size_key(), |x| x.interval().unwrap().size_key())
                .ok(),
        }
    }

    pub fn contains(&self, e: Element) -> bool {
        self.index_of(e).is_some()
    }

    fn require(&self, e: Element) -> Result<usize> {
        self.index_of(e)
            .ok_or_else(|| Error::NotAnElement(e.to_string()))
    }

    /// Index of `[1, n]`.
    pub fn root(&self) -> usize {
        self.interval_count() - 1
    }

    pub fn bottom(&self) -> Option<usize> {
        self.index_of(Element::Bottom)
    }

    /// Elements covered by element `i`, in increasing interval order.
    pub fn children(&self, i: usize) -> &[usize] {
        &self.children[i]
    }

    /// Elements covering element `i`.
    pub fn parents(&self, i: usize) -> &[usize] {
        &self.parents[i]
    }

    /// All `(child, parent)` cover pairs.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        self.children
            .iter()
            .enumerate()
            .flat_map(|(p, kids)| kids.iter().map(move |&c| (c, p)))
            .collect()
    }

    pub fn le(&self, a: usize, b: usize) -> bool {
        match (self.elements[a], self.elements[b]) {
            (Element::Bottom, _) => true,
            (_, Element::Bottom) => false,
            (Element::Interval(x), Element::Interval(y)) => x.is_subset(&y),
        }
    }

    /// `P̄` from `P`: a bottom element below exactly the singletons.
    pub fn close_with_bottom(&self) -> Result<Self> {
        if self.has_bottom {
            return Err(Error::AlreadyClosed);
        }
        let mut closed = self.clone();
        let bottom = closed.elements.len();
        closed.elements.push(Element::Bottom);
        closed.children.push(Vec::new());
        closed.parents.push((0..self.n).collect());
        for atom in 0..self.n {
            closed.children[atom].push(bottom);
        }
        closed.has_bottom = true;
        Ok(closed)
    }

    /// The order relation as a standalone finite poset on element indices.
    pub fn order(&self) -> FinitePoset {
        FinitePoset::from_relation(self.len(), |a, b| self.le(a, b))
    }

    /// Exhaustive check that every pair has a unique meet and join.
    pub fn is_lattice(&self) -> bool {
        self.order().is_lattice()
    }

    pub fn lattice_tables(&self) -> Result<LatticeTables> {
        self.order().lattice_tables().ok_or(Error::NotALattice)
    }

    pub fn is_modular(&self) -> Result<bool> {
        Ok(self.lattice_tables()?.is_modular())
    }

    pub fn is_distributive(&self) -> Result<bool> {
        Ok(self.lattice_tables()?.is_distributive())
    }

    /// Meet in `P̄`: the intersection, or the bottom when it is empty.
    pub fn meet(&self, a: Element, b: Element) -> Result<Element> {
        if !self.has_bottom {
            return Err(Error::MissingBottom);
        }
        self.require(a)?;
        self.require(b)?;
        let (Some(x), Some(y)) = (a.interval(), b.interval()) else {
            return Ok(Element::Bottom);
        };
        match x.intersect(&y) {
            None => Ok(Element::Bottom),
            Some(z) if self.contains(z.into()) => Ok(z.into()),
            Some(_) => Err(Error::NotALattice),
        }
    }

    /// Join in `P̄`: the upper bound contained in all other upper bounds.
    pub fn join(&self, a: Element, b: Element) -> Result<Element> {
        if !self.has_bottom {
            return Err(Error::MissingBottom);
        }
        self.require(a)?;
        self.require(b)?;
        let (x, y) = match (a.interval(), b.interval()) {
            (None, _) => return Ok(b),
            (_, None) => return Ok(a),
            (Some(x), Some(y)) => (x, y),
        };
        let uppers: Vec<ValueInterval> = self
            .intervals()
            .into_iter()
            .filter(|u| x.is_subset(u) && y.is_subset(u))
            .collect();
        uppers
            .iter()
            .find(|l| uppers.iter().all(|u| l.is_subset(u)))
            .map(|&l| l.into())
            .ok_or(Error::NotALattice)
    }

    /// Elements covering at least [`FRUITFUL_MIN_CHILDREN`] elements.
    pub fn fruitful_elements(&self) -> Vec<Element> {
        (0..self.len())
            .filter(|&i| self.children[i].len() >= FRUITFUL_MIN_CHILDREN)
            .map(|i| self.elements[i])
            .collect()
    }

    /// Depths from `[1, n]` (shortest path), levels in increasing order.
    pub fn canonical_layout(&self) -> Result<CanonicalLayout> {
        let m = self.interval_count();
        let root = self.root();
        let mut depth = vec![usize::MAX; self.len()];
        depth[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            for &c in &self.children[x] {
                if c < m && depth[c] == usize::MAX {
                    depth[c] = depth[x] + 1;
                    queue.push_back(c);
                }
            }
        }
        for c in 0..m {
            let ps = &self.parents[c];
            if let Some(&first) = ps.first() {
                if ps.iter().any(|&p| depth[p] != depth[first]) {
                    return Err(Error::DepthConflict {
                        element: self.elements[c].to_string(),
                    });
                }
            }
        }
        let height = depth[..m].iter().copied().max().unwrap_or(0) + 1;
        let mut levels: Vec<Vec<usize>> = vec![Vec::new(); height];
        for i in 0..m {
            levels[depth[i]].push(i);
        }
        if self.has_bottom {
            depth[m] = height;
            levels.push(vec![m]);
        }
        for level in &mut levels {
            level.sort_unstable_by_key(|&i| self.elements[i]);
        }
        let mut position = vec![0; self.len()];
        for level in &levels {
            for (k, &i) in level.iter().enumerate() {
                position[i] = k;
            }
        }
        Ok(CanonicalLayout {
            depth,
            position,
            levels,
        })
    }

    /// Longest distance from `[1, n]` for every interval element.
    pub fn longest_depths(&self) -> Vec<usize> {
        let m = self.interval_count();
        let mut depth = vec![0; m];
        // parents are larger intervals, which come later in element order
        for i in (0..m).rev() {
            depth[i] = self.parents[i]
                .iter()
                .filter(|&&p| p < m)
                .map(|&p| depth[p] + 1)
                .max()
                .unwrap_or(0);
        }
        depth
    }

    /// No two cover edges between adjacent levels of the canonical diagram
    /// cross. Edges into the bottom element are not drawn between adjacent
    /// levels and are ignored.
    pub fn is_planar_canonical(&self) -> Result<bool> {
        let layout = self.canonical_layout()?;
        Ok(self.find_crossing(&layout).is_none())
    }

    /// A pair of crossing cover edges `((A, J), (B, I))` if one exists.
    pub fn find_crossing(
        &self,
        layout: &CanonicalLayout,
    ) -> Option<((usize, usize), (usize, usize))> {
        let edges: Vec<(usize, usize)> = self
            .covers()
            .into_iter()
            .filter(|&(c, _)| !self.elements[c].is_bottom())
            .collect();
        for (k, &(c1, p1)) in edges.iter().enumerate() {
            for &(c2, p2) in &edges[k + 1..] {
                if layout.depth[c1] != layout.depth[c2] || layout.depth[p1] != layout.depth[p2] {
                    continue;
                }
                let (a, b) = (layout.position[c1], layout.position[c2]);
                let (i, j) = (layout.position[p1], layout.position[p2]);
                if (a < b && i > j) || (a > b && i < j) {
                    return Some(((c1, p1), (c2, p2)));
                }
            }
        }
        None
    }

    /// The principal order ideal of `e`, relabeled so its least value is 1.
    pub fn principal_ideal(&self, e: Element) -> Result<IntervalPoset> {
        self.require(e)?;
        let Element::Interval(top) = e else {
            return Err(Error::NotAnElement(
                "the bottom element has no interval ideal".into(),
            ));
        };
        let family: Vec<ValueInterval> = self
            .intervals()
            .into_iter()
            .filter(|iv| iv.is_subset(&top))
            .map(|iv| iv.shifted_down(top.lo))
            .collect();
        let ideal = Self::build(top.len(), family);
        if self.has_bottom {
            ideal.close_with_bottom()
        } else {
            Ok(ideal)
        }
    }

    /// Maximum number of cover edges on a chain.
    pub fn rank(&self) -> usize {
        let mut height = vec![0usize; self.len()];
        let mut order: Vec<usize> = Vec::with_capacity(self.len());
        order.extend(self.bottom());
        order.extend(0..self.interval_count());
        for i in order {
            height[i] = self.children[i]
                .iter()
                .map(|&c| height[c] + 1)
                .max()
                .unwrap_or(0);
        }
        height[self.root()]
    }

    pub fn canonical_form(&self) -> CanonicalForm {
        let mut sets: Vec<Vec<usize>> = self
            .elements
            .iter()
            .map(|e| match e {
                Element::Interval(iv) => (iv.lo..=iv.hi).collect(),
                Element::Bottom => Vec::new(),
            })
            .collect();
        sets.sort_unstable_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
        CanonicalForm(sets)
    }

    /// Embedding-sensitive equality.
    pub fn equals(&self, other: &IntervalPoset) -> bool {
        self.canonical_form() == other.canonical_form()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalLayout {
    depth: Vec<usize>,
    position: Vec<usize>,
    levels: Vec<Vec<usize>>,
}

impl CanonicalLayout {
    pub fn depth(&self, i: usize) -> usize {
        self.depth[i]
    }

    /// Left-to-right index of element `i` within its level.
    pub fn position(&self, i: usize) -> usize {
        self.position[i]
    }

    /// Element indices per depth, top level first.
    pub fn levels(&self) -> &[Vec<usize>] {
        &self.levels
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::all_permutations;

    fn p(s: &str) -> Permutation {
        Permutation::parse(s).unwrap()
    }

    fn iv(lo: usize, hi: usize) -> ValueInterval {
        ValueInterval::new(lo, hi)
    }

    fn el(lo: usize, hi: usize) -> Element {
        Element::Interval(iv(lo, hi))
    }

    fn covers_as_intervals(poset: &IntervalPoset) -> Vec<(Element, Element)> {
        let mut out: Vec<_> = poset
            .covers()
            .into_iter()
            .map(|(c, q)| (poset.element(c), poset.element(q)))
            .collect();
        out.sort();
        out
    }

    #[test]
    fn worked_example_covers() {
        let poset = IntervalPoset::of(&p("43187562"));
        assert_eq!(poset.len(), 14);
        let mut expected = vec![
            (el(1, 1), el(1, 8)),
            (el(2, 2), el(1, 8)),
            (el(3, 4), el(1, 8)),
            (el(5, 8), el(1, 8)),
            (el(3, 3), el(3, 4)),
            (el(4, 4), el(3, 4)),
            (el(5, 7), el(5, 8)),
            (el(7, 8), el(5, 8)),
            (el(5, 6), el(5, 7)),
            (el(7, 7), el(5, 7)),
            (el(7, 7), el(7, 8)),
            (el(8, 8), el(7, 8)),
            (el(5, 5), el(5, 6)),
            (el(6, 6), el(5, 6)),
        ];
        expected.sort();
        assert_eq!(covers_as_intervals(&poset), expected);
    }

    #[test]
    fn identity_three() {
        let poset = IntervalPoset::of(&p("123"));
        assert_eq!(poset.len(), 6);
        let two = poset.index_of(el(2, 2)).unwrap();
        let ps: Vec<_> = poset
            .parents(two)
            .iter()
            .map(|&i| poset.element(i))
            .collect();
        assert_eq!(ps, vec![el(1, 2), el(2, 3)]);
    }

    #[test]
    fn simple_is_a_claw() {
        for w in [p("2413"), p("35142")] {
            let poset = IntervalPoset::of(&w);
            assert_eq!(poset.len(), w.len() + 1);
            assert_eq!(poset.children(poset.root()).len(), w.len());
        }
    }

    #[test]
    fn closing() {
        let closed = IntervalPoset::of(&p("123")).close_with_bottom().unwrap();
        assert_eq!(closed.len(), 7);
        assert!(closed.is_lattice());
        assert!(matches!(
            closed.close_with_bottom(),
            Err(Error::AlreadyClosed)
        ));
        let two = IntervalPoset::of(&p("12")).close_with_bottom().unwrap();
        assert_eq!(two.len(), 4);
        assert_eq!(two.rank(), 2);
        for w in all_permutations(4) {
            let open = IntervalPoset::of(&w);
            assert_eq!(open.close_with_bottom().unwrap().len(), open.len() + 1);
        }
    }

    #[test]
    fn meets_and_joins() {
        let closed = IntervalPoset::of(&p("43187562"))
            .close_with_bottom()
            .unwrap();
        assert_eq!(closed.meet(el(5, 7), el(7, 8)).unwrap(), el(7, 7));
        assert_eq!(closed.join(el(5, 6), el(7, 7)).unwrap(), el(5, 7));
        assert_eq!(closed.meet(el(1, 1), el(2, 2)).unwrap(), Element::Bottom);
        assert_eq!(closed.join(el(1, 1), el(8, 8)).unwrap(), el(1, 8));
        assert_eq!(closed.join(Element::Bottom, el(3, 4)).unwrap(), el(3, 4));
        assert!(matches!(
            closed.meet(el(1, 2), el(1, 1)),
            Err(Error::NotAnElement(_))
        ));
        let open = IntervalPoset::of(&p("123"));
        assert!(matches!(
            open.meet(el(1, 1), el(2, 2)),
            Err(Error::MissingBottom)
        ));
    }

    #[test]
    fn meet_join_agree_with_bound_search() {
        for n in 1..=6 {
            for w in all_permutations(n) {
                let closed = IntervalPoset::of(&w).close_with_bottom().unwrap();
                let order = closed.order();
                for a in 0..closed.len() {
                    for b in 0..closed.len() {
                        let (x, y) = (closed.element(a), closed.element(b));
                        let m = order.meet(a, b).unwrap();
                        let j = order.join(a, b).unwrap();
                        assert_eq!(closed.meet(x, y).unwrap(), closed.element(m));
                        assert_eq!(closed.join(x, y).unwrap(), closed.element(j));
                    }
                }
                assert_eq!(closed.join(el(1, 1), el(n, n)).unwrap(), el(1, n));
            }
        }
    }

    #[test]
    fn modular_and_distributive_examples() {
        let closed = |s: &str| IntervalPoset::of(&p(s)).close_with_bottom().unwrap();
        assert!(closed("2413").is_modular().unwrap());
        assert!(!closed("123").is_modular().unwrap());
        assert!(closed("12").is_distributive().unwrap());
        assert!(!closed("2413").is_distributive().unwrap());
        assert!(closed("1").is_distributive().unwrap());
    }

    #[test]
    fn pentagon_inside_identity_three() {
        // {∅, {1}, {3}, [1,2], [1,3]} is an N5 sublattice
        let closed = IntervalPoset::of(&p("123")).close_with_bottom().unwrap();
        let t = closed.lattice_tables().unwrap();
        let idx = |e| closed.index_of(e).unwrap();
        let (bot, a, c, b, top) = (
            idx(Element::Bottom),
            idx(el(1, 1)),
            idx(el(3, 3)),
            idx(el(1, 2)),
            idx(el(1, 3)),
        );
        assert_eq!(t.join(a, c), top);
        assert_eq!(t.join(b, c), top);
        assert_eq!(t.meet(b, c), bot);
        assert_eq!(t.meet(a, c), bot);
        // modular law fails at a <= b, x = c
        assert_ne!(t.join(a, t.meet(c, b)), t.meet(t.join(a, c), b));
    }

    #[test]
    fn fruitful_examples() {
        assert_eq!(
            IntervalPoset::of(&p("43187562")).fruitful_elements(),
            vec![el(1, 8)]
        );
        assert!(IntervalPoset::of(&p("123")).fruitful_elements().is_empty());
        assert_eq!(
            IntervalPoset::of(&p("2413")).fruitful_elements(),
            vec![el(1, 4)]
        );
    }

    #[test]
    fn layout_of_worked_example() {
        let poset = IntervalPoset::of(&p("43187562"));
        let layout = poset.canonical_layout().unwrap();
        let levels: Vec<Vec<Element>> = layout
            .levels()
            .iter()
            .map(|l| l.iter().map(|&i| poset.element(i)).collect())
            .collect();
        assert_eq!(
            levels,
            vec![
                vec![el(1, 8)],
                vec![el(1, 1), el(2, 2), el(3, 4), el(5, 8)],
                vec![el(3, 3), el(4, 4), el(5, 7), el(7, 8)],
                vec![el(5, 6), el(7, 7), el(8, 8)],
                vec![el(5, 5), el(6, 6)],
            ]
        );
        assert!(poset.is_planar_canonical().unwrap());
    }

    #[test]
    fn layout_small() {
        let poset = IntervalPoset::of(&p("123"));
        let layout = poset.canonical_layout().unwrap();
        assert_eq!(layout.levels().len(), 3);
        assert_eq!(layout.levels()[1].len(), 2);
        let claw = IntervalPoset::of(&p("35142"));
        assert_eq!(claw.canonical_layout().unwrap().levels().len(), 2);
        let closed = claw.close_with_bottom().unwrap();
        let layout = closed.canonical_layout().unwrap();
        assert_eq!(layout.levels().len(), 3);
        assert_eq!(layout.depth(closed.bottom().unwrap()), 2);
    }

    #[test]
    fn synthetic_crossing() {
        // [1,3] and [2,4] without their intersection: {2} ⋖ [2,4] and {3} ⋖ [1,3] cross
        let family = [
            iv(1, 1),
            iv(2, 2),
            iv(3, 3),
            iv(4, 4),
            iv(1, 3),
            iv(2, 4),
            iv(1, 4),
        ];
        let poset = IntervalPoset::from_intervals(4, family).unwrap();
        assert!(!poset.is_planar_canonical().unwrap());
        // adding [2,3] restores planarity
        let family = [
            iv(1, 1),
            iv(2, 2),
            iv(3, 3),
            iv(4, 4),
            iv(2, 3),
            iv(1, 3),
            iv(2, 4),
            iv(1, 4),
        ];
        let poset = IntervalPoset::from_intervals(4, family).unwrap();
        assert!(poset.is_planar_canonical().unwrap());
    }

    #[test]
    fn depth_conflict_is_reported() {
        // {3} sits below [3,4] (depth 1) and [2,3] (depth 2, below [1,3])
        let family = [
            iv(1, 1),
            iv(2, 2),
            iv(3, 3),
            iv(4, 4),
            iv(2, 3),
            iv(1, 3),
            iv(3, 4),
            iv(1, 4),
        ];
        let poset = IntervalPoset::from_intervals(4, family).unwrap();
        assert!(matches!(
            poset.canonical_layout(),
            Err(Error::DepthConflict { .. })
        ));
    }

    #[test]
    fn from_intervals_validation() {
        assert!(IntervalPoset::from_intervals(3, [iv(1, 1), iv(2, 2), iv(1, 3)]).is_err());
        assert!(IntervalPoset::from_intervals(2, [iv(1, 1), iv(2, 2)]).is_err());
        assert!(
            IntervalPoset::from_intervals(2, [iv(1, 1), iv(2, 2), iv(1, 2), iv(2, 3)]).is_err()
        );
        let ok =
            IntervalPoset::from_intervals(2, [iv(1, 2), iv(2, 2), iv(1, 1), iv(1, 1)]).unwrap();
        assert_eq!(ok, IntervalPoset::of(&p("21")));
    }

    #[test]
    fn ideals_and_rank() {
        let poset = IntervalPoset::of(&p("43187562"));
        let ideal = poset.principal_ideal(el(5, 8)).unwrap();
        assert!(ideal.equals(&IntervalPoset::of(&p("4312"))));
        assert!(matches!(
            poset.principal_ideal(el(1, 2)),
            Err(Error::NotAnElement(_))
        ));
        assert_eq!(IntervalPoset::of(&p("2413")).rank(), 1);
        assert_eq!(IntervalPoset::of(&p("1234")).rank(), 3);
        for w in all_permutations(3) {
            assert_eq!(IntervalPoset::of(&w).rank(), 2);
        }
        let closed = IntervalPoset::of(&p("2413")).close_with_bottom().unwrap();
        assert_eq!(closed.rank(), 2);
        let closed_ideal = closed.principal_ideal(el(1, 4)).unwrap();
        assert!(closed_ideal.has_bottom());
    }

    #[test]
    fn rank_matches_chain_search() {
        fn longest(poset: &IntervalPoset, i: usize) -> usize {
            poset
                .children(i)
                .iter()
                .map(|&c| 1 + longest(poset, c))
                .max()
                .unwrap_or(0)
        }
        for w in all_permutations(6) {
            let poset = IntervalPoset::of(&w);
            assert_eq!(poset.rank(), longest(&poset, poset.root()));
        }
    }

    #[test]
    fn canonical_forms() {
        let form = IntervalPoset::of(&p("123")).canonical_form();
        assert_eq!(
            form.0,
            vec![
                vec![1],
                vec![2],
                vec![3],
                vec![1, 2],
                vec![2, 3],
                vec![1, 2, 3]
            ]
        );
        for w in all_permutations(6) {
            assert!(IntervalPoset::of(&w).equals(&IntervalPoset::of(&w.reverse())));
        }
        assert!(!IntervalPoset::of(&p("132")).equals(&IntervalPoset::of(&p("213"))));
    }
}
