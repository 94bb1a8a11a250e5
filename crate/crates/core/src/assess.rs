//! Recursive assessment through projections.
//!
//! Each level assesses the responder on the projection of the current family
//! on a subset `Q'`, which identifies one equivalence class. The level then
//! descends into that class's child (the class with its common items
//! removed) until a single state is left. The recovered state is the final
//! child state together with every core removed on the way down.

use std::fmt;

use crate::error::{Error, Result};
use crate::family::SetFamily;
use crate::projection::EquivClass;
use crate::state::StateSet;

/// Answers whether the assessed subject masters an item.
pub trait Responder {
    fn answer(&self, item: usize) -> bool;
}

/// Deterministic responder answering from a fixed latent state.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LatentResponder {
    true_state: StateSet,
}

impl LatentResponder {
    pub fn new(family: &SetFamily, true_state: StateSet) -> Result<Self> {
        family.require_member(true_state)?;
        Ok(LatentResponder { true_state })
    }

    pub fn true_state(&self) -> StateSet {
        self.true_state
    }
}

impl Responder for LatentResponder {
    fn answer(&self, item: usize) -> bool {
        self.true_state.contains(item)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QueryRecord {
    pub item: usize,
    pub answer: bool,
    /// Projection states still consistent after this answer.
    pub remaining: usize,
}

/// How `Q'` is chosen at each level.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub enum SubsetRule {
    /// Items whose frequency among the level's states is closest to one
    /// half, ties broken by domain order.
    #[default]
    Balanced,
    /// Explicit subsets for the first levels; deeper levels fall back to
    /// the balanced rule.
    Explicit(Vec<StateSet>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssessConfig {
    /// Target `|Q'|` per level; `None` means `ceil(|Q|/2)` of that level's
    /// items. Clamped to `|Q| - 1`.
    pub split_size: Option<usize>,
    pub subset_rule: SubsetRule,
    pub max_depth: usize,
}

impl Default for AssessConfig {
    fn default() -> Self {
        AssessConfig {
            split_size: None,
            subset_rule: SubsetRule::Balanced,
            max_depth: 64,
        }
    }
}

impl AssessConfig {
    pub fn with_first_subset(subset: StateSet) -> Self {
        AssessConfig {
            subset_rule: SubsetRule::Explicit(vec![subset]),
            ..AssessConfig::default()
        }
    }

    fn validate(&self) -> Result<()> {
        if self.max_depth == 0 {
            return Err(Error::Precondition("max_depth must be at least 1".into()));
        }
        if self.split_size == Some(0) {
            return Err(Error::Precondition("split_size must be at least 1".into()));
        }
        Ok(())
    }
}

/// One level of a session.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssessmentLevel {
    /// Family assessed at this level.
    pub family: SetFamily,
    /// The `Q'` used; equal to the level's items when they were queried
    /// directly.
    pub subset: StateSet,
    pub queries: Vec<QueryRecord>,
    /// Trace of the identified class.
    pub trace: StateSet,
    /// Core of the identified class, removed before descending.
    pub core: StateSet,
    pub class_size: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssessmentSession {
    pub levels: Vec<AssessmentLevel>,
    /// The recovered state; `None` only inside a depth-exhausted error.
    pub result: Option<StateSet>,
}

impl AssessmentSession {
    pub fn query_count(&self) -> usize {
        self.levels.iter().map(|l| l.queries.len()).sum()
    }

    /// Line-oriented transcript: one line per query, one per identified
    /// class and a final result line.
    pub fn transcript(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for AssessmentSession {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (depth, level) in self.levels.iter().enumerate() {
            let fam = &level.family;
            let depth = depth + 1;
            writeln!(
                f,
                "level {depth} states {} subset {}",
                fam.len(),
                fam.format_state(level.subset)
            )?;
            for q in &level.queries {
                writeln!(
                    f,
                    "level {depth} item {} answer {} remaining {}",
                    fam.domain().name(q.item),
                    if q.answer { "yes" } else { "no" },
                    q.remaining
                )?;
            }
            writeln!(
                f,
                "level {depth} class trace {} core {} members {}",
                fam.format_state(level.trace),
                fam.format_state(level.core),
                level.class_size
            )?;
        }
        if let (Some(result), Some(first)) = (self.result, self.levels.first()) {
            writeln!(f, "result {}", first.family.format_state(result))?;
        }
        Ok(())
    }
}

fn balance(states: &[StateSet], item: usize) -> usize {
    let with = states.iter().filter(|s| s.contains(item)).count();
    with.min(states.len() - with)
}

/// Narrows the projection states down to one by querying items of `subset`.
fn query_projection<R: Responder + ?Sized>(
    family: &SetFamily,
    subset: StateSet,
    responder: &R,
) -> Result<(StateSet, Vec<QueryRecord>)> {
    let mut candidates: Vec<StateSet> = family.project_unchecked(subset).states().to_vec();
    let mut unasked = subset;
    let mut log = Vec::new();
    while candidates.len() > 1 {
        // Highest balance first; `max_by_key` keeps the last maximum, so
        // iterate in reverse to prefer the lowest position on ties.
        let item = unasked
            .positions()
            .rev()
            .max_by_key(|&q| balance(&candidates, q))
            .filter(|&q| balance(&candidates, q) > 0)
            .ok_or(Error::NoConsistentState)?;
        let answer = responder.answer(item);
        unasked = unasked.without(item);
        candidates.retain(|s| s.contains(item) == answer);
        log.push(QueryRecord {
            item,
            answer,
            remaining: candidates.len(),
        });
    }
    let trace = candidates.pop().ok_or(Error::NoConsistentState)?;
    Ok((trace, log))
}

/// Assesses on the projection on `subset` and returns the class whose trace
/// the answers single out, along with the query log.
pub fn assess_on_projection<R: Responder + ?Sized>(
    family: &SetFamily,
    subset: StateSet,
    responder: &R,
) -> Result<(EquivClass, Vec<QueryRecord>)> {
    if !family.is_learning_space() {
        return Err(Error::Precondition(
            "family must be a learning space".into(),
        ));
    }
    let partition = family.partition_by(subset)?;
    let (trace, log) = query_projection(family, subset, responder)?;
    let class = partition
        .class_of_trace(trace)
        .ok_or(Error::NoConsistentState)?
        .clone();
    Ok((class, log))
}

/// Picks `size` items of `family` whose frequency among its states is
/// closest to one half.
pub fn balanced_subset(family: &SetFamily, size: usize) -> StateSet {
    let items = family.union_all();
    let n = family.len();
    let mut ranked: Vec<(usize, usize)> = items
        .positions()
        .map(|q| {
            let with = family.iter().filter(|s| s.contains(q)).count();
            // |2·with - n| orders by distance from n/2 without fractions.
            ((2 * with).abs_diff(n), q)
        })
        .collect();
    ranked.sort_unstable();
    StateSet::from_positions(ranked.into_iter().take(size).map(|(_, q)| q))
}

fn choose_subset(family: &SetFamily, cfg: &AssessConfig, depth: usize) -> Result<StateSet> {
    let items = family.union_all();
    if let SubsetRule::Explicit(list) = &cfg.subset_rule {
        if let Some(&subset) = list.get(depth) {
            if subset.is_empty() || !subset.is_proper_subset(items) {
                return Err(Error::SubsetNotProper {
                    subset: family.format_state(subset),
                    union: family.format_state(items),
                });
            }
            return Ok(subset);
        }
    }
    let size = cfg
        .split_size
        .unwrap_or(items.len().div_ceil(2))
        .clamp(1, items.len() - 1);
    Ok(balanced_subset(family, size))
}

/// Union of the final child state with every core removed on the way down.
/// The result must be a state of `original`.
pub fn reconstruct_state(
    child_result: StateSet,
    cores: &[StateSet],
    original: &SetFamily,
) -> Result<StateSet> {
    let state = cores
        .iter()
        .fold(child_result, |acc, core| acc.union(*core));
    if original.contains(state) {
        Ok(state)
    } else {
        Err(Error::ReconstructionOutsideFamily(
            original.format_state(state),
        ))
    }
}

/// Runs the n-step procedure. With a deterministic responder whose latent
/// state is in `family`, the result is exactly that state.
pub fn assess_recursive<R: Responder + ?Sized>(
    family: &SetFamily,
    cfg: &AssessConfig,
    responder: &R,
) -> Result<AssessmentSession> {
    cfg.validate()?;
    if !family.is_learning_space() {
        return Err(Error::Precondition(
            "family must be a learning space".into(),
        ));
    }

    let mut levels = Vec::new();
    let mut cores = Vec::new();
    let mut current = family.clone();
    while current.len() > 1 {
        if levels.len() == cfg.max_depth {
            let candidates = SetFamily::from_sorted_unchecked(
                family.domain().clone(),
                family.ground(),
                current
                    .iter()
                    .map(|s| cores.iter().fold(s, |acc: StateSet, c| acc.union(*c)))
                    .collect(),
            );
            return Err(Error::DepthExhausted {
                depth: levels.len(),
                session: Box::new(AssessmentSession {
                    levels,
                    result: None,
                }),
                candidates,
            });
        }
        let items = current.union_all();
        // A single item leaves no proper subset to project on; ask it.
        let subset = if items.len() < 2 {
            items
        } else {
            choose_subset(&current, cfg, levels.len())?
        };
        let partition = current.partition_unchecked(subset);
        let (trace, queries) = query_projection(&current, subset, responder)?;
        let class = partition
            .class_of_trace(trace)
            .ok_or(Error::NoConsistentState)?;
        let child = class.child();
        levels.push(AssessmentLevel {
            family: current.clone(),
            subset,
            queries,
            trace,
            core: class.core(),
            class_size: class.members().len(),
        });
        cores.push(class.core());
        current = child.into_family();
    }

    let last = current
        .states()
        .first()
        .copied()
        .ok_or(Error::NoConsistentState)?;
    let result = reconstruct_state(last, &cores, family)?;
    Ok(AssessmentSession {
        levels,
        result: Some(result),
    })
}
