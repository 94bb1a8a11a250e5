//! Projection of a family on a subset `Q'` of its items.
//!
//! Two states are equivalent under `Q'` when they agree on `Q'`. Each
//! equivalence class is identified by its trace `K ∩ Q'`; the traces form the
//! projection, and removing a class's core (the intersection of its members)
//! from every member gives the class's child.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::family::SetFamily;
use crate::state::StateSet;

/// `K ~ L` under `Q'`, i.e. `K ∩ Q' = L ∩ Q'`.
pub fn equivalent_under(k: StateSet, l: StateSet, subset: StateSet) -> bool {
    k.intersection(subset) == l.intersection(subset)
}

/// One class `[K]` of the partition induced by `Q'`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivClass {
    trace: StateSet,
    members: SetFamily,
    core: StateSet,
}

impl EquivClass {
    /// The common value of `L ∩ Q'` over the members.
    pub fn trace(&self) -> StateSet {
        self.trace
    }

    pub fn members(&self) -> &SetFamily {
        &self.members
    }

    /// `∩[K]`.
    pub fn core(&self) -> StateSet {
        self.core
    }

    /// Members not strictly containing any other member.
    pub fn minimal_members(&self) -> impl Iterator<Item = StateSet> + '_ {
        self.members
            .iter()
            .filter(move |&l| !self.members.iter().any(|m| m.is_proper_subset(l)))
    }

    /// `K_[K] = { L \ ∩[K] : L ∈ [K] }`, declared on the items it uses.
    pub fn child(&self) -> Child {
        let states: Vec<StateSet> = self
            .members
            .iter()
            .map(|l| l.difference(self.core))
            .collect();
        let ground = states.iter().fold(StateSet::EMPTY, |acc, s| acc.union(*s));
        Child {
            origin_trace: self.trace,
            family: SetFamily::from_sorted_unchecked(self.members.domain().clone(), ground, states),
        }
    }
}

/// The partition `K~` of a family induced by `Q'`, classes ordered by trace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassPartition {
    subdomain: StateSet,
    classes: Vec<EquivClass>,
}

impl ClassPartition {
    pub fn subdomain(&self) -> StateSet {
        self.subdomain
    }

    pub fn classes(&self) -> &[EquivClass] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn class_of_trace(&self, trace: StateSet) -> Option<&EquivClass> {
        self.classes
            .binary_search_by(|c| c.trace.cmp(&trace))
            .ok()
            .map(|i| &self.classes[i])
    }

    pub fn class_of(&self, state: StateSet) -> Option<&EquivClass> {
        self.class_of_trace(state.intersection(self.subdomain))
            .filter(|c| c.members.contains(state))
    }
}

/// A `Q'`-child of a family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Child {
    origin_trace: StateSet,
    family: SetFamily,
}

impl Child {
    /// Trace of the (first) class this child was formed from.
    pub fn origin_trace(&self) -> StateSet {
        self.origin_trace
    }

    pub fn family(&self) -> &SetFamily {
        &self.family
    }

    pub fn into_family(self) -> SetFamily {
        self.family
    }

    /// The child `{∅}`, coming from a single-member class.
    pub fn is_trivial(&self) -> bool {
        self.family.len() == 1 && self.family.states()[0].is_empty()
    }

    /// `K_[K] ∪ {∅}`. Undefined for the trivial child.
    pub fn plus(&self) -> Result<Child> {
        if self.is_trivial() {
            return Err(Error::TrivialChild);
        }
        let mut family = self.family.clone();
        family.insert(StateSet::EMPTY)?;
        Ok(Child {
            origin_trace: self.origin_trace,
            family,
        })
    }
}

/// Free-function form of [`Child::plus`].
pub fn plus_child(child: &Child) -> Result<Child> {
    child.plus()
}

/// Free-function form of [`Child::is_trivial`].
pub fn is_trivial_child(child: &Child) -> bool {
    child.is_trivial()
}

/// First state that makes a subset non-yielding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YieldingViolation {
    pub trace: StateSet,
    pub core: StateSet,
    pub minimal_state: StateSet,
}

impl SetFamily {
    fn check_subdomain(&self, subset: StateSet) -> Result<()> {
        let union = self.union_all();
        if union.len() < 2 {
            return Err(Error::DomainTooSmall(union.len()));
        }
        if subset.is_empty() {
            return Err(Error::EmptySubset);
        }
        if !subset.is_proper_subset(union) {
            return Err(Error::SubsetNotProper {
                subset: self.format_state(subset),
                union: self.format_state(union),
            });
        }
        Ok(())
    }

    /// Partition induced by `subset`, which must be a proper non-empty subset
    /// of `∪F` with `|∪F| ≥ 2`.
    pub fn partition_by(&self, subset: StateSet) -> Result<ClassPartition> {
        self.check_subdomain(subset)?;
        Ok(self.partition_unchecked(subset))
    }

    /// Partition without the properness check. With `subset ⊇ ∪F` every class
    /// is a singleton, which the assessment uses for direct questioning.
    pub(crate) fn partition_unchecked(&self, subset: StateSet) -> ClassPartition {
        let mut groups: BTreeMap<StateSet, Vec<StateSet>> = BTreeMap::new();
        for s in self.iter() {
            groups.entry(s.intersection(subset)).or_default().push(s);
        }
        let classes = groups
            .into_iter()
            .map(|(trace, members)| {
                let core = members
                    .iter()
                    .fold(self.ground(), |acc, s| acc.intersection(*s));
                EquivClass {
                    trace,
                    members: SetFamily::from_sorted_unchecked(
                        self.domain().clone(),
                        self.ground(),
                        members,
                    ),
                    core,
                }
            })
            .collect();
        ClassPartition {
            subdomain: subset,
            classes,
        }
    }

    /// `K|Q' = { K ∩ Q' : K ∈ F }`, declared on `Q'`.
    pub fn project(&self, subset: StateSet) -> Result<SetFamily> {
        self.check_subdomain(subset)?;
        Ok(self.project_unchecked(subset))
    }

    pub(crate) fn project_unchecked(&self, subset: StateSet) -> SetFamily {
        let states = self.iter().map(|s| s.intersection(subset)).collect();
        SetFamily::from_sorted_unchecked(self.domain().clone(), subset, states)
    }

    /// Distinct children, in the order of the classes that first produce
    /// them.
    pub fn children(&self, subset: StateSet) -> Result<Vec<Child>> {
        let partition = self.partition_by(subset)?;
        let mut out: Vec<Child> = Vec::new();
        for class in partition.classes() {
            let child = class.child();
            if !out.iter().any(|c| c.family == child.family) {
                out.push(child);
            }
        }
        Ok(out)
    }

    /// `Q'` is yielding when every inclusion-minimal member `L` of every class
    /// satisfies `|L \ ∩[K]| ≤ 1`.
    pub fn is_yielding(&self, subset: StateSet) -> Result<bool> {
        Ok(self.yielding_violation(subset)?.is_none())
    }

    pub fn yielding_violation(&self, subset: StateSet) -> Result<Option<YieldingViolation>> {
        let partition = self.partition_by(subset)?;
        Ok(partition.classes().iter().find_map(|class| {
            class
                .minimal_members()
                .find(|l| l.difference(class.core).len() > 1)
                .map(|l| YieldingViolation {
                    trace: class.trace,
                    core: class.core,
                    minimal_state: l,
                })
        }))
    }
}
