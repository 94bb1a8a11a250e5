use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::state::{ItemDomain, StateSet};

/// A deduplicated family of states over a shared item domain.
///
/// Every family carries a ground set: the subset of the domain it is declared
/// on. Families read from files have the whole domain as ground set, while
/// projections and children keep the parent's domain (so item positions and
/// names never change) and narrow the ground set instead.
///
/// States are kept in canonical order (cardinality, then mask).
#[derive(Clone)]
pub struct SetFamily {
    domain: Arc<ItemDomain>,
    ground: StateSet,
    states: Vec<StateSet>,
}

impl SetFamily {
    /// Family declared on the whole domain.
    pub fn new<I>(domain: Arc<ItemDomain>, states: I) -> Result<Self>
    where
        I: IntoIterator<Item = StateSet>,
    {
        let ground = domain.full();
        SetFamily::with_ground(domain, ground, states)
    }

    pub fn with_ground<I>(domain: Arc<ItemDomain>, ground: StateSet, states: I) -> Result<Self>
    where
        I: IntoIterator<Item = StateSet>,
    {
        if !ground.is_subset(domain.full()) {
            return Err(Error::StateOutsideGround {
                state: describe(&domain, ground),
                ground: domain.format(domain.full()),
            });
        }
        let mut states: Vec<StateSet> = states.into_iter().collect();
        if let Some(bad) = states.iter().find(|s| !s.is_subset(ground)) {
            return Err(Error::StateOutsideGround {
                state: describe(&domain, *bad),
                ground: domain.format(ground),
            });
        }
        states.sort_unstable();
        states.dedup();
        Ok(SetFamily {
            domain,
            ground,
            states,
        })
    }

    /// Builds a family from item names. Convenient in tests and fixtures.
    pub fn from_names<S: AsRef<str>>(domain: &[&str], states: &[&[S]]) -> Result<Self> {
        let domain = Arc::new(ItemDomain::new(domain.iter().copied())?);
        let states = states
            .iter()
            .map(|names| domain.state(names.iter().map(|s| s.as_ref())))
            .collect::<Result<Vec<_>>>()?;
        SetFamily::new(domain, states)
    }

    /// Internal constructor for states already known to be inside `ground`.
    pub(crate) fn from_sorted_unchecked(
        domain: Arc<ItemDomain>,
        ground: StateSet,
        mut states: Vec<StateSet>,
    ) -> Self {
        debug_assert!(states.iter().all(|s| s.is_subset(ground)));
        states.sort_unstable();
        states.dedup();
        SetFamily {
            domain,
            ground,
            states,
        }
    }

    pub fn domain(&self) -> &Arc<ItemDomain> {
        &self.domain
    }

    pub fn ground(&self) -> StateSet {
        self.ground
    }

    pub fn states(&self) -> &[StateSet] {
        &self.states
    }

    pub fn iter(&self) -> impl ExactSizeIterator<Item = StateSet> + '_ {
        self.states.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn contains(&self, state: StateSet) -> bool {
        self.states.binary_search(&state).is_ok()
    }

    /// Position of a state in canonical order.
    pub fn index_of(&self, state: StateSet) -> Option<usize> {
        self.states.binary_search(&state).ok()
    }

    /// `∪F`.
    pub fn union_all(&self) -> StateSet {
        self.states
            .iter()
            .fold(StateSet::EMPTY, |acc, s| acc.union(*s))
    }

    /// `∩F`, or the ground set for an empty family.
    pub fn intersection_all(&self) -> StateSet {
        self.states
            .iter()
            .fold(self.ground, |acc, s| acc.intersection(*s))
    }

    /// Inserts a state, keeping canonical order. Returns false if it was
    /// already present.
    pub fn insert(&mut self, state: StateSet) -> Result<bool> {
        if !state.is_subset(self.ground) {
            return Err(Error::StateOutsideGround {
                state: describe(&self.domain, state),
                ground: self.domain.format(self.ground),
            });
        }
        match self.states.binary_search(&state) {
            Ok(_) => Ok(false),
            Err(at) => {
                self.states.insert(at, state);
                Ok(true)
            }
        }
    }

    /// Same states, declared on a different ground set of the same domain.
    pub fn rehome(&self, ground: StateSet) -> Result<Self> {
        SetFamily::with_ground(self.domain.clone(), ground, self.states.iter().copied())
    }

    /// Re-homes the family on a fresh domain holding only the ground items,
    /// in their original order. Names are kept; positions are renumbered.
    pub fn compact(&self) -> SetFamily {
        if self.ground == self.domain.full() {
            return self.clone();
        }
        let positions: Vec<usize> = self.ground.positions().collect();
        let names: Vec<&str> = positions.iter().map(|&p| self.domain.name(p)).collect();
        let domain = match ItemDomain::new(names.iter().copied()) {
            Ok(d) => Arc::new(d),
            // Empty ground set: nothing to name, keep the original domain
            // with an empty ground.
            Err(_) => return self.clone(),
        };
        let remap = |s: StateSet| {
            StateSet::from_positions(
                positions
                    .iter()
                    .enumerate()
                    .filter(|(_, &p)| s.contains(p))
                    .map(|(i, _)| i),
            )
        };
        let states = self.states.iter().map(|&s| remap(s)).collect();
        let ground = domain.full();
        SetFamily::from_sorted_unchecked(domain, ground, states)
    }

    /// Checks that `other` is built on the same item universe.
    pub fn same_domain(&self, other: &SetFamily) -> bool {
        Arc::ptr_eq(&self.domain, &other.domain) || self.domain == other.domain
    }

    pub(crate) fn require_member(&self, state: StateSet) -> Result<()> {
        if self.contains(state) {
            Ok(())
        } else {
            Err(Error::NotAMember(self.format_state(state)))
        }
    }

    pub fn format_state(&self, state: StateSet) -> String {
        describe(&self.domain, state)
    }

    pub fn ground_names(&self) -> Vec<&str> {
        self.domain.names(self.ground)
    }
}

fn describe(domain: &ItemDomain, state: StateSet) -> String {
    if state.is_subset(domain.full()) {
        domain.format(state)
    } else {
        format!("{:#b}", state.mask())
    }
}

impl PartialEq for SetFamily {
    fn eq(&self, other: &Self) -> bool {
        if self.same_domain(other) {
            return self.ground == other.ground && self.states == other.states;
        }
        self.ground_names() == other.ground_names()
            && self.compact().states == other.compact().states
    }
}

impl Eq for SetFamily {}

impl fmt::Display for SetFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, s) in self.states.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str(&self.domain.format(*s))?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for SetFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "SetFamily(ground={}, states={})",
            self.domain.format(self.ground),
            self
        )
    }
}
