//! Item domains and knowledge states.
//!
//! A state is a bit mask over the positions of an [`ItemDomain`]. Domains are
//! capped at 64 items so every state fits in a single `u64` and all set
//! operations are constant time.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

pub const MAX_ITEMS: usize = 64;

/// A subset of an item domain, stored as a bit mask over item positions.
///
/// Ordering is canonical: by cardinality first, then by the mask read as an
/// unsigned integer.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct StateSet(u64);

impl StateSet {
    pub const EMPTY: StateSet = StateSet(0);

    pub const fn from_mask(mask: u64) -> Self {
        StateSet(mask)
    }

    /// The state holding positions `0..n`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_ITEMS, "at most {MAX_ITEMS} items");
        if n == MAX_ITEMS {
            StateSet(u64::MAX)
        } else {
            StateSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(pos: usize) -> Self {
        StateSet(1u64 << pos)
    }

    pub fn from_positions<I: IntoIterator<Item = usize>>(positions: I) -> Self {
        positions
            .into_iter()
            .fold(StateSet::EMPTY, |acc, p| acc.with(p))
    }

    pub const fn mask(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, pos: usize) -> bool {
        pos < MAX_ITEMS && self.0 & (1u64 << pos) != 0
    }

    #[must_use]
    pub fn with(self, pos: usize) -> Self {
        StateSet(self.0 | (1u64 << pos))
    }

    #[must_use]
    pub fn without(self, pos: usize) -> Self {
        StateSet(self.0 & !(1u64 << pos))
    }

    #[must_use]
    pub fn union(self, other: Self) -> Self {
        StateSet(self.0 | other.0)
    }

    #[must_use]
    pub fn intersection(self, other: Self) -> Self {
        StateSet(self.0 & other.0)
    }

    #[must_use]
    pub fn difference(self, other: Self) -> Self {
        StateSet(self.0 & !other.0)
    }

    #[must_use]
    pub fn symmetric_difference(self, other: Self) -> Self {
        StateSet(self.0 ^ other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_proper_subset(self, other: Self) -> bool {
        self.is_subset(other) && self.0 != other.0
    }

    /// Symmetric difference distance `|K △ L|`.
    pub fn distance(self, other: Self) -> usize {
        (self.0 ^ other.0).count_ones() as usize
    }

    /// Item positions in increasing order.
    pub fn positions(self) -> Positions {
        Positions(self.0)
    }
}

/// Symmetric difference distance between two states.
pub fn sym_diff_distance(k: StateSet, l: StateSet) -> usize {
    k.distance(l)
}

impl Ord for StateSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for StateSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for StateSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "StateSet({:#b})", self.0)
    }
}

pub struct Positions(u64);

impl Iterator for Positions {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let pos = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(pos)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl DoubleEndedIterator for Positions {
    fn next_back(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let pos = 63 - self.0.leading_zeros() as usize;
        self.0 &= !(1u64 << pos);
        Some(pos)
    }
}

impl ExactSizeIterator for Positions {}

/// An ordered set of named items: the domain `Q` of a family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ItemDomain {
    items: Vec<String>,
    index: HashMap<String, usize>,
}

impl ItemDomain {
    pub fn new<I, S>(items: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let items: Vec<String> = items.into_iter().map(Into::into).collect();
        if items.is_empty() {
            return Err(Error::EmptyDomain);
        }
        if items.len() > MAX_ITEMS {
            return Err(Error::DomainTooLarge(items.len()));
        }
        let mut index = HashMap::with_capacity(items.len());
        for (pos, name) in items.iter().enumerate() {
            if index.insert(name.clone(), pos).is_some() {
                return Err(Error::DuplicateItem(name.clone()));
            }
        }
        Ok(ItemDomain { items, index })
    }

    /// Domain named `a`, `b`, `c`, ... (then `x26`, `x27`, ... past `z`).
    pub fn letters(n: usize) -> Result<Self> {
        ItemDomain::new((0..n).map(|i| {
            if i < 26 {
                char::from(b'a' + i as u8).to_string()
            } else {
                format!("x{i}")
            }
        }))
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn items(&self) -> &[String] {
        &self.items
    }

    pub fn name(&self, pos: usize) -> &str {
        &self.items[pos]
    }

    pub fn position(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn full(&self) -> StateSet {
        StateSet::full(self.items.len())
    }

    pub fn state<I, S>(&self, names: I) -> Result<StateSet>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        names.into_iter().try_fold(StateSet::EMPTY, |acc, name| {
            let name = name.as_ref();
            self.position(name)
                .map(|p| acc.with(p))
                .ok_or_else(|| Error::UnknownItem(name.to_string()))
        })
    }

    pub fn names(&self, state: StateSet) -> Vec<&str> {
        state.positions().map(|p| self.name(p)).collect()
    }

    /// Renders a state as `{a,b,c}`, with `∅` for the empty state.
    pub fn format(&self, state: StateSet) -> String {
        if state.is_empty() {
            "∅".to_string()
        } else {
            format!("{{{}}}", self.names(state).join(","))
        }
    }
}
