//! Structural predicates on set families: knowledge structures, closure under
//! union, wellgradedness and the two learning-space axioms.

use std::collections::{HashMap, VecDeque};

use crate::error::Result;
use crate::family::SetFamily;
use crate::state::StateSet;

/// A sequence of states from `K` to `L` with unit steps and length `d(K, L)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TightPath {
    steps: Vec<StateSet>,
}

impl TightPath {
    pub fn steps(&self) -> &[StateSet] {
        &self.steps
    }

    /// Number of unit steps (one less than the number of states).
    pub fn len(&self) -> usize {
        self.steps.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn first(&self) -> StateSet {
        self.steps[0]
    }

    pub fn last(&self) -> StateSet {
        self.steps[self.steps.len() - 1]
    }
}

impl SetFamily {
    /// Contains `∅` and `Q = ∪F`, where `Q` is the declared ground set.
    pub fn is_knowledge_structure(&self) -> bool {
        let union = self.union_all();
        self.contains(StateSet::EMPTY) && union == self.ground() && self.contains(union)
    }

    /// Contains its own union. `∅` is not required.
    pub fn is_partial_knowledge_structure(&self) -> bool {
        !self.is_empty() && self.contains(self.union_all())
    }

    pub fn is_union_closed(&self) -> bool {
        let states = self.states();
        states
            .iter()
            .enumerate()
            .all(|(i, &k)| states[i + 1..].iter().all(|&l| self.contains(k.union(l))))
    }

    /// Every non-empty state has a one-item-smaller state in the family.
    pub fn is_accessible(&self) -> bool {
        self.iter()
            .filter(|s| !s.is_empty())
            .all(|s| s.positions().any(|q| self.contains(s.without(q))))
    }

    /// Finds a tight path from `from` to `to` inside the family.
    ///
    /// Only states in the interval `[K∩L, K∪L]` can lie on a tight path, and
    /// every step must bring the walk one item closer to the target, so the
    /// search only follows such steps.
    pub fn tight_path(&self, from: StateSet, to: StateSet) -> Result<Option<TightPath>> {
        self.require_member(from)?;
        self.require_member(to)?;
        Ok(self.tight_path_unchecked(from, to))
    }

    pub(crate) fn tight_path_unchecked(&self, from: StateSet, to: StateSet) -> Option<TightPath> {
        if from == to {
            return Some(TightPath { steps: vec![from] });
        }
        let mut parent: HashMap<StateSet, StateSet> = HashMap::new();
        let mut queue = VecDeque::from([from]);
        while let Some(cur) = queue.pop_front() {
            for q in cur.symmetric_difference(to).positions() {
                let next = if cur.contains(q) {
                    cur.without(q)
                } else {
                    cur.with(q)
                };
                if next != from && !parent.contains_key(&next) && self.contains(next) {
                    parent.insert(next, cur);
                    if next == to {
                        let mut steps = vec![to];
                        let mut at = to;
                        while at != from {
                            at = parent[&at];
                            steps.push(at);
                        }
                        steps.reverse();
                        return Some(TightPath { steps });
                    }
                    queue.push_back(next);
                }
            }
        }
        None
    }

    /// Any two distinct states are joined by a tight path.
    pub fn is_well_graded(&self) -> bool {
        let states = self.states();
        states.iter().enumerate().all(|(i, &k)| {
            states[i + 1..]
                .iter()
                .all(|&l| self.tight_path_unchecked(k, l).is_some())
        })
    }

    /// Every nested pair `K ⊂ L` is joined by a tight path. For union-closed
    /// families this is equivalent to wellgradedness.
    pub fn nested_pairs_have_tight_paths(&self) -> bool {
        self.nested_pairs()
            .all(|(k, l)| self.tight_path_unchecked(k, l).is_some())
    }

    /// Learning smoothness: for `K ⊂ L` in the family, `L` can be reached from
    /// `K` by adding one item at a time without leaving the family.
    pub fn satisfies_l1(&self) -> bool {
        let states = self.states();
        let m = states.len();
        let words = m.div_ceil(64);
        // reach[i]: indices of states reachable from state i by unit additions.
        // Canonical order puts every one-item extension after its base, so a
        // reverse sweep sees extensions first.
        let mut reach = vec![0u64; m * words];
        for i in (0..m).rev() {
            reach[i * words + i / 64] |= 1 << (i % 64);
            let k = states[i];
            for q in self.ground().difference(k).positions() {
                if let Some(j) = self.index_of(k.with(q)) {
                    let (lo, hi) = reach.split_at_mut(j * words);
                    let src = &hi[..words];
                    for (dst, w) in lo[i * words..(i + 1) * words].iter_mut().zip(src) {
                        *dst |= w;
                    }
                }
            }
        }
        (0..m).all(|i| {
            let row = &reach[i * words..(i + 1) * words];
            (i + 1..m)
                .filter(|&j| states[i].is_proper_subset(states[j]))
                .all(|j| row[j / 64] & (1 << (j % 64)) != 0)
        })
    }

    /// Learning consistency: if `K ⊂ L` and `K + {q}` is a state then so is
    /// `L ∪ {q}`.
    pub fn satisfies_l2(&self) -> bool {
        let ground = self.ground();
        self.nested_pairs().all(|(k, l)| {
            ground
                .difference(k)
                .difference(l)
                .positions()
                .all(|q| !self.contains(k.with(q)) || self.contains(l.with(q)))
        })
    }

    /// A knowledge structure satisfying [L1] and [L2].
    pub fn is_learning_space(&self) -> bool {
        self.is_knowledge_structure() && self.satisfies_l1() && self.satisfies_l2()
    }

    /// The equivalent characterisation: a well-graded knowledge space.
    pub fn is_well_graded_knowledge_space(&self) -> bool {
        self.is_knowledge_structure() && self.is_union_closed() && self.is_well_graded()
    }

    pub fn is_partial_learning_space(&self) -> bool {
        self.is_partial_knowledge_structure() && self.satisfies_l1() && self.satisfies_l2()
    }

    /// Smallest union-closed family containing this one.
    pub fn union_close(&self) -> SetFamily {
        let mut states: Vec<StateSet> = self.states().to_vec();
        let mut seen: std::collections::HashSet<StateSet> = states.iter().copied().collect();
        let mut frontier = states.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for &new in &frontier {
                for i in 0..states.len() {
                    let u = states[i].union(new);
                    if seen.insert(u) {
                        states.push(u);
                        next.push(u);
                    }
                }
            }
            frontier = next;
        }
        SetFamily::from_sorted_unchecked(self.domain().clone(), self.ground(), states)
    }

    fn nested_pairs(&self) -> impl Iterator<Item = (StateSet, StateSet)> + '_ {
        self.iter().flat_map(move |k| {
            self.iter()
                .filter(move |l| k.is_proper_subset(*l))
                .map(move |l| (k, l))
        })
    }
}
