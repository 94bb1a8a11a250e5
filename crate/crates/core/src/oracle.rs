//! Exhaustive enumeration and seeded generation of learning spaces, and
//! machine checks of the projection results over those instances.
//!
//! Every claim is a named predicate over one instance, a family plus an
//! optional item subset. A [`VerificationReport`] tallies claim outcomes over
//! many instances and keeps the first counterexample (or, for existence
//! claims, the first witness). Any stored counterexample can be replayed
//! with [`evaluate_claim`].

use std::fmt;
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::family::SetFamily;
use crate::state::{ItemDomain, StateSet, MAX_ITEMS};

pub const MAX_ENUMERATION_ITEMS: usize = 4;

pub mod claims {
    pub const PT1_PROJECTION: &str = "pt1.projection_is_learning_space";
    pub const PT1_CHILDREN: &str = "pt1.children_well_graded_union_closed";
    pub const CHILDREN_PARTIAL: &str = "pt1.children_partial_learning_spaces";
    pub const CLASS_TRACE_BIJECTION: &str = "partition.class_trace_bijection";
    pub const PROJECTION_KEEPS_STRUCTURE: &str = "partition.projection_keeps_structure";
    pub const CLASS_UNION_IN_CLASS: &str = "partition.class_union_in_class";
    pub const PROJECTION_CHILDREN_CLOSED: &str = "partition.projection_and_children_union_closed";
    pub const NONTRIVIAL_CHILD: &str = "nontrivial_child_exists";
    pub const PT2_EQUIVALENCE: &str = "pt2.yielding_iff_plus_children_learning_spaces";
    pub const NESTED_TIGHT_PATHS: &str = "axioms.nested_tight_paths_iff_well_graded";
    pub const AXIOMS_IFF_WELL_GRADED: &str = "axioms.l1_l2_iff_well_graded_space";
    pub const WELL_GRADED_CLOSED_IS_PARTIAL: &str =
        "axioms.well_graded_union_closed_is_partial_learning_space";
    pub const PARTIAL_NOT_CLOSED_WITNESS: &str = "axioms.partial_learning_space_not_union_closed";
    pub const GENERATOR_SOUND: &str = "generator.learning_space";
}

/// Parameters of the seeded learning-space generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GeneratorConfig {
    pub item_count: usize,
    pub growth_steps: usize,
    pub seed: u64,
}

impl GeneratorConfig {
    pub fn new(item_count: usize, growth_steps: usize, seed: u64) -> Self {
        GeneratorConfig {
            item_count,
            growth_steps,
            seed,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(2..=MAX_ITEMS).contains(&self.item_count) {
            return Err(Error::ItemCount {
                found: self.item_count,
                min: 2,
                max: MAX_ITEMS,
            });
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClaimKind {
    /// Must hold on every instance; evidence is the first counterexample.
    Universal,
    /// Must hold on some instance; evidence is the first witness.
    Existential,
}

/// An instance that refutes (or, for existence claims, witnesses) a claim.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Evidence {
    pub family: SetFamily,
    pub subset: Option<StateSet>,
    pub detail: String,
}

impl fmt::Display for Evidence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "family {}", self.family)?;
        if let Some(subset) = self.subset {
            write!(f, " with Q' = {}", self.family.format_state(subset))?;
        }
        if !self.detail.is_empty() {
            write!(f, ": {}", self.detail)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClaimOutcome {
    pub name: String,
    pub kind: ClaimKind,
    pub checked: usize,
    pub failures: usize,
    pub evidence: Option<Evidence>,
}

impl ClaimOutcome {
    pub fn holds(&self) -> bool {
        match self.kind {
            ClaimKind::Universal => self.failures == 0,
            ClaimKind::Existential => self.evidence.is_some(),
        }
    }

    fn absorb(&mut self, other: ClaimOutcome) {
        self.checked += other.checked;
        self.failures += other.failures;
        if self.evidence.is_none() {
            self.evidence = other.evidence;
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub instance: String,
    pub claims: Vec<ClaimOutcome>,
}

impl VerificationReport {
    pub fn new(instance: impl Into<String>) -> Self {
        VerificationReport {
            instance: instance.into(),
            claims: Vec::new(),
        }
    }

    /// True when every claim holds.
    pub fn holds(&self) -> bool {
        self.claims.iter().all(ClaimOutcome::holds)
    }

    pub fn claim(&self, name: &str) -> Option<&ClaimOutcome> {
        self.claims.iter().find(|c| c.name == name)
    }

    fn slot(&mut self, name: &str, kind: ClaimKind) -> &mut ClaimOutcome {
        let at = match self.claims.iter().position(|c| c.name == name) {
            Some(at) => at,
            None => {
                self.claims.push(ClaimOutcome {
                    name: name.to_string(),
                    kind,
                    checked: 0,
                    failures: 0,
                    evidence: None,
                });
                self.claims.len() - 1
            }
        };
        &mut self.claims[at]
    }

    /// Records one instance of a universal claim.
    pub fn record<F>(&mut self, name: &str, ok: bool, evidence: F)
    where
        F: FnOnce() -> Evidence,
    {
        let slot = self.slot(name, ClaimKind::Universal);
        slot.checked += 1;
        if !ok {
            slot.failures += 1;
            if slot.evidence.is_none() {
                slot.evidence = Some(evidence());
            }
        }
    }

    /// Records one candidate for an existence claim.
    pub fn record_witness<F>(&mut self, name: &str, found: bool, evidence: F)
    where
        F: FnOnce() -> Evidence,
    {
        let slot = self.slot(name, ClaimKind::Existential);
        slot.checked += 1;
        if found && slot.evidence.is_none() {
            slot.evidence = Some(evidence());
        }
    }

    /// Adds another report's tallies. Evidence already held is kept, so
    /// merging in a fixed order is deterministic.
    pub fn merge(&mut self, other: VerificationReport) {
        for claim in other.claims {
            let kind = claim.kind;
            self.slot(&claim.name, kind).absorb(claim);
        }
    }

    fn merged<I>(instance: impl Into<String>, reports: I) -> Self
    where
        I: IntoIterator<Item = VerificationReport>,
    {
        let mut out = VerificationReport::new(instance);
        for r in reports {
            out.merge(r);
        }
        out
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "instance: {}", self.instance)?;
        for c in &self.claims {
            writeln!(
                f,
                "{} {} checked={} failures={}",
                if c.holds() { "PASS" } else { "FAIL" },
                c.name,
                c.checked,
                c.failures
            )?;
            if let Some(e) = &c.evidence {
                let label = match c.kind {
                    ClaimKind::Universal => "counterexample",
                    ClaimKind::Existential => "witness",
                };
                writeln!(f, "  {label}: {e}")?;
            }
        }
        Ok(())
    }
}

/// Evaluates a named claim on a single instance. Returns `None` for unknown
/// claim names or when the instance does not meet the claim's premise.
///
/// For universal claims `Some(false)` is a counterexample; for the existence
/// claim `Some(true)` is a witness.
pub fn evaluate_claim(name: &str, family: &SetFamily, subset: Option<StateSet>) -> Option<bool> {
    use claims::*;
    let needs_subset = |f: &dyn Fn(StateSet) -> Option<bool>| subset.and_then(f);
    match name {
        PT1_PROJECTION => needs_subset(&|qp| {
            let p = family.project(qp).ok()?;
            Some(if family.is_knowledge_structure() {
                p.is_learning_space()
            } else {
                p.is_well_graded() && p.is_union_closed()
            })
        }),
        PT1_CHILDREN => needs_subset(&|qp| {
            let kids = family.children(qp).ok()?;
            Some(
                kids.iter()
                    .all(|c| c.family().is_well_graded() && c.family().is_union_closed()),
            )
        }),
        CHILDREN_PARTIAL => needs_subset(&|qp| {
            let kids = family.children(qp).ok()?;
            Some(kids.iter().all(|c| c.family().is_partial_learning_space()))
        }),
        CLASS_TRACE_BIJECTION => needs_subset(&|qp| {
            let partition = family.partition_by(qp).ok()?;
            let projection = family.project(qp).ok()?;
            let traces: Vec<StateSet> = partition.classes().iter().map(|c| c.trace()).collect();
            Some(traces == projection.states())
        }),
        PROJECTION_KEEPS_STRUCTURE => needs_subset(&|qp| {
            let p = family.project(qp).ok()?;
            Some(
                (!family.is_knowledge_structure() || p.is_knowledge_structure())
                    && (!family.is_partial_knowledge_structure()
                        || p.is_partial_knowledge_structure()),
            )
        }),
        CLASS_UNION_IN_CLASS => needs_subset(&|qp| {
            if !family.is_union_closed() {
                return None;
            }
            let partition = family.partition_by(qp).ok()?;
            Some(
                partition
                    .classes()
                    .iter()
                    .all(|c| c.members().contains(c.members().union_all())),
            )
        }),
        PROJECTION_CHILDREN_CLOSED => needs_subset(&|qp| {
            if !family.is_union_closed() {
                return None;
            }
            let p = family.project(qp).ok()?;
            let kids = family.children(qp).ok()?;
            Some(p.is_union_closed() && kids.iter().all(|c| c.family().is_union_closed()))
        }),
        NONTRIVIAL_CHILD => needs_subset(&|qp| {
            let kids = family.children(qp).ok()?;
            Some(kids.iter().any(|c| !c.is_trivial()))
        }),
        PT2_EQUIVALENCE => needs_subset(&|qp| {
            let sides = projection_theorem_2_sides(family, qp).ok()?;
            Some(sides.yielding == sides.plus_children_are_learning_spaces)
        }),
        NESTED_TIGHT_PATHS => {
            if !family.is_union_closed() {
                return None;
            }
            Some(family.is_well_graded() == family.nested_pairs_have_tight_paths())
        }
        AXIOMS_IFF_WELL_GRADED => {
            if !family.is_knowledge_structure() {
                return None;
            }
            Some(family.is_learning_space() == family.is_well_graded_knowledge_space())
        }
        WELL_GRADED_CLOSED_IS_PARTIAL => {
            if !(family.is_well_graded() && family.is_union_closed()) || family.is_empty() {
                return None;
            }
            Some(family.is_partial_learning_space())
        }
        PARTIAL_NOT_CLOSED_WITNESS => {
            Some(family.is_partial_learning_space() && !family.is_union_closed())
        }
        GENERATOR_SOUND => Some(family.is_learning_space()),
        _ => None,
    }
}

/// The two sides of the yielding equivalence for one instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct YieldingSides {
    pub yielding: bool,
    pub plus_children_are_learning_spaces: bool,
}

pub fn projection_theorem_2_sides(family: &SetFamily, subset: StateSet) -> Result<YieldingSides> {
    let yielding = family.is_yielding(subset)?;
    let kids = family.children(subset)?;
    let mut plus_ok = true;
    for kid in kids.iter().filter(|c| !c.is_trivial()) {
        // Plus children are declared on their own items, which is the ground
        // set a learning space on them must cover.
        if !kid.plus()?.family().is_learning_space() {
            plus_ok = false;
            break;
        }
    }
    Ok(YieldingSides {
        yielding,
        plus_children_are_learning_spaces: plus_ok,
    })
}

fn check_enumeration_size(n: usize, max: usize) -> Result<()> {
    if !(2..=max).contains(&n) {
        return Err(Error::ItemCount {
            found: n,
            min: 2,
            max,
        });
    }
    Ok(())
}

/// All subsets of `{0..n}` other than `∅` and the full set, in canonical
/// order. Bit `i` of an enumeration index selects the `i`-th of these.
fn middle_states(n: usize) -> Vec<StateSet> {
    let full = StateSet::full(n);
    let mut v: Vec<StateSet> = (1..full.mask()).map(StateSet::from_mask).collect();
    v.sort_unstable();
    v
}

/// Every family on `n` items containing `∅` and the full set: all
/// `2^(2^n - 2)` of them, each once.
pub fn enumerate_knowledge_structures(n: usize) -> Result<impl Iterator<Item = SetFamily>> {
    check_enumeration_size(n, MAX_ENUMERATION_ITEMS)?;
    let domain = Arc::new(ItemDomain::letters(n)?);
    let middle = middle_states(n);
    let full = StateSet::full(n);
    Ok((0u64..1u64 << middle.len()).map(move |choice| {
        let mut states = Vec::with_capacity(choice.count_ones() as usize + 2);
        states.push(StateSet::EMPTY);
        states.extend(
            middle
                .iter()
                .enumerate()
                .filter(|(i, _)| choice & (1 << i) != 0)
                .map(|(_, s)| *s),
        );
        states.push(full);
        SetFamily::from_sorted_unchecked(domain.clone(), full, states)
    }))
}

/// Every non-empty family of subsets of `n` items, declared on all `n`
/// items: `2^(2^n) - 1` families.
pub fn enumerate_families(n: usize) -> Result<impl Iterator<Item = SetFamily>> {
    check_enumeration_size(n, MAX_ENUMERATION_ITEMS)?;
    let domain = Arc::new(ItemDomain::letters(n)?);
    let all: Vec<StateSet> = {
        let mut v: Vec<StateSet> = (0..=StateSet::full(n).mask())
            .map(StateSet::from_mask)
            .collect();
        v.sort_unstable();
        v
    };
    let full = StateSet::full(n);
    Ok((1u64..1u64 << all.len()).map(move |choice| {
        let states = all
            .iter()
            .enumerate()
            .filter(|(i, _)| choice & (1 << i) != 0)
            .map(|(_, s)| *s)
            .collect();
        SetFamily::from_sorted_unchecked(domain.clone(), full, states)
    }))
}

pub fn enumerate_learning_spaces(n: usize) -> Result<impl Iterator<Item = SetFamily>> {
    Ok(enumerate_knowledge_structures(n)?.filter(SetFamily::is_learning_space))
}

/// A seeded random learning space.
///
/// Starts from a random maximal chain, then repeatedly adds `K ∪ {q}` for a
/// random state `K` and item `q ∉ K` and closes under union. Both steps keep
/// the family accessible and union-closed, hence an antimatroid.
pub fn random_learning_space(cfg: &GeneratorConfig) -> Result<SetFamily> {
    cfg.validate()?;
    let n = cfg.item_count;
    let domain = Arc::new(ItemDomain::letters(n)?);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);

    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    let mut chain = Vec::with_capacity(n + 1);
    let mut cur = StateSet::EMPTY;
    chain.push(cur);
    for &q in &order {
        cur = cur.with(q);
        chain.push(cur);
    }
    let full = domain.full();
    let mut family = SetFamily::from_sorted_unchecked(domain, full, chain);

    for _ in 0..cfg.growth_steps {
        let open: Vec<StateSet> = family.iter().filter(|s| *s != full).collect();
        let k = open[rng.random_range(0..open.len())];
        let missing: Vec<usize> = full.difference(k).positions().collect();
        let q = missing[rng.random_range(0..missing.len())];
        let mut grown = family.clone();
        grown.insert(k.with(q))?;
        family = grown.union_close();
    }

    // Union-closure holds by construction; accessibility plus ∅ and Q make
    // it an antimatroid.
    assert!(
        family.is_knowledge_structure() && family.is_accessible(),
        "generator produced a non-antimatroid for {cfg:?}"
    );
    Ok(family)
}

fn instance_evidence(
    family: &SetFamily,
    subset: Option<StateSet>,
    detail: String,
) -> impl FnOnce() -> Evidence + '_ {
    move || Evidence {
        family: family.clone(),
        subset,
        detail,
    }
}

fn record_claims(
    report: &mut VerificationReport,
    family: &SetFamily,
    subset: StateSet,
    names: &[&str],
) {
    for &name in names {
        if let Some(ok) = evaluate_claim(name, family, Some(subset)) {
            report.record(
                name,
                ok,
                instance_evidence(family, Some(subset), String::new()),
            );
        }
    }
}

fn describe_instance(family: &SetFamily, subset: StateSet) -> String {
    format!("{} on Q' = {}", family, family.format_state(subset))
}

/// Projection, children and the non-trivial-child claim for one learning
/// space (or well-graded union-closed family) and one subset.
pub fn verify_projection_theorem_1(
    family: &SetFamily,
    subset: StateSet,
) -> Result<VerificationReport> {
    let is_ls = family.is_learning_space();
    if !is_ls && !(family.is_well_graded() && family.is_union_closed()) {
        return Err(Error::Precondition(
            "family must be a learning space or a well-graded union-closed family".into(),
        ));
    }
    family.partition_by(subset)?;
    let mut report = VerificationReport::new(describe_instance(family, subset));
    record_claims(
        &mut report,
        family,
        subset,
        &[
            claims::PT1_PROJECTION,
            claims::PT1_CHILDREN,
            claims::CHILDREN_PARTIAL,
            claims::CLASS_TRACE_BIJECTION,
            claims::PROJECTION_KEEPS_STRUCTURE,
            claims::CLASS_UNION_IN_CLASS,
            claims::PROJECTION_CHILDREN_CLOSED,
        ],
    );
    if is_ls {
        record_claims(&mut report, family, subset, &[claims::NONTRIVIAL_CHILD]);
    }
    Ok(report)
}

/// Compares `Q'` being yielding with all plus children being learning
/// spaces.
pub fn verify_projection_theorem_2(
    family: &SetFamily,
    subset: StateSet,
) -> Result<VerificationReport> {
    if !family.is_learning_space() {
        return Err(Error::Precondition(
            "family must be a learning space".into(),
        ));
    }
    let sides = projection_theorem_2_sides(family, subset)?;
    let mut report = VerificationReport::new(describe_instance(family, subset));
    report.record(
        claims::PT2_EQUIVALENCE,
        sides.yielding == sides.plus_children_are_learning_spaces,
        instance_evidence(
            family,
            Some(subset),
            format!(
                "yielding={} plus_children_learning_spaces={}",
                sides.yielding, sides.plus_children_are_learning_spaces
            ),
        ),
    );
    Ok(report)
}

/// The set-family lemmas over every family on `n` items: the two
/// characterisations of learning spaces among knowledge structures, the
/// nested-pair criterion for wellgradedness, well-graded union-closed
/// families being partial learning spaces, and a search for a partial
/// learning space that is not union-closed.
pub fn verify_lemma_suite(n: usize) -> Result<VerificationReport> {
    check_enumeration_size(n, MAX_ENUMERATION_ITEMS)?;
    let families: Vec<SetFamily> = enumerate_families(n)?.collect();
    let reports: Vec<VerificationReport> = families
        .par_chunks(1024)
        .map(|chunk| {
            let mut r = VerificationReport::new("");
            for f in chunk {
                for name in [
                    claims::AXIOMS_IFF_WELL_GRADED,
                    claims::NESTED_TIGHT_PATHS,
                    claims::WELL_GRADED_CLOSED_IS_PARTIAL,
                ] {
                    if let Some(ok) = evaluate_claim(name, f, None) {
                        r.record(name, ok, instance_evidence(f, None, String::new()));
                    }
                }
                let found =
                    evaluate_claim(claims::PARTIAL_NOT_CLOSED_WITNESS, f, None) == Some(true);
                r.record_witness(
                    claims::PARTIAL_NOT_CLOSED_WITNESS,
                    found,
                    instance_evidence(f, None, "partial learning space, not union-closed".into()),
                );
            }
            r
        })
        .collect();
    Ok(VerificationReport::merged(
        format!("all families on {n} items"),
        reports,
    ))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    ProjectionTheorem1,
    ProjectionTheorem2,
    Lemmas,
}

impl std::str::FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "pt1" => Ok(Suite::ProjectionTheorem1),
            "pt2" => Ok(Suite::ProjectionTheorem2),
            "lemmas" => Ok(Suite::Lemmas),
            other => Err(format!(
                "unknown suite `{other}` (expected pt1, pt2 or lemmas)"
            )),
        }
    }
}

/// All proper non-empty subsets of a ground set, in canonical order.
pub fn proper_subsets(ground: StateSet) -> Vec<StateSet> {
    let positions: Vec<usize> = ground.positions().collect();
    let mut out: Vec<StateSet> = (1u64..(1u64 << positions.len()) - 1)
        .map(|bits| {
            StateSet::from_positions(
                positions
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| bits & (1 << i) != 0)
                    .map(|(_, &p)| p),
            )
        })
        .collect();
    out.sort_unstable();
    out
}

fn theorem_reports(
    suite: Suite,
    family: &SetFamily,
    subsets: &[StateSet],
) -> Result<VerificationReport> {
    let mut out = VerificationReport::new("");
    for &qp in subsets {
        let r = match suite {
            Suite::ProjectionTheorem1 => verify_projection_theorem_1(family, qp)?,
            Suite::ProjectionTheorem2 => verify_projection_theorem_2(family, qp)?,
            Suite::Lemmas => unreachable!("lemma suite has no per-subset instances"),
        };
        out.merge(r);
    }
    Ok(out)
}

/// Runs a suite over every learning space on `n` items and every proper
/// non-empty subset of its items.
pub fn sweep_exhaustive(suite: Suite, n: usize) -> Result<VerificationReport> {
    if suite == Suite::Lemmas {
        return verify_lemma_suite(n);
    }
    let spaces: Vec<SetFamily> = enumerate_learning_spaces(n)?.collect();
    let reports = spaces
        .par_iter()
        .map(|f| theorem_reports(suite, f, &proper_subsets(f.ground())))
        .collect::<Result<Vec<_>>>()?;
    Ok(VerificationReport::merged(
        format!(
            "{} learning spaces on {n} items x all proper subsets",
            spaces.len()
        ),
        reports,
    ))
}

/// Seeded random sweep parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RandomSweep {
    pub item_count: usize,
    pub growth_steps: usize,
    pub first_seed: u64,
    pub spaces: usize,
    pub subsets_per_space: usize,
}

impl Default for RandomSweep {
    fn default() -> Self {
        RandomSweep {
            item_count: 6,
            growth_steps: 40,
            first_seed: 0,
            spaces: 1000,
            subsets_per_space: 20,
        }
    }
}

/// Uniformly random proper non-empty subsets of `ground`.
pub fn random_subsets(ground: StateSet, count: usize, seed: u64) -> Vec<StateSet> {
    let positions: Vec<usize> = ground.positions().collect();
    assert!(positions.len() >= 2, "need at least two items");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let top = (1u64 << positions.len()) - 1;
    (0..count)
        .map(|_| {
            let bits = rng.random_range(1..top);
            StateSet::from_positions(
                positions
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| bits & (1 << i) != 0)
                    .map(|(_, &p)| p),
            )
        })
        .collect()
}

/// Generates `spaces` learning spaces from consecutive seeds and runs the
/// suite on each with random subsets. Generator soundness is reported as
/// its own claim.
pub fn sweep_random(suite: Suite, params: &RandomSweep) -> Result<VerificationReport> {
    if suite == Suite::Lemmas {
        return Err(Error::Precondition(
            "the lemma suite is exhaustive only; use sweep_exhaustive".into(),
        ));
    }
    let seeds: Vec<u64> = (0..params.spaces as u64)
        .map(|i| params.first_seed.wrapping_add(i))
        .collect();
    let reports = seeds
        .par_iter()
        .map(|&seed| {
            let cfg = GeneratorConfig::new(params.item_count, params.growth_steps, seed);
            let family = random_learning_space(&cfg)?;
            let mut r = VerificationReport::new("");
            let sound = family.is_learning_space();
            r.record(
                claims::GENERATOR_SOUND,
                sound,
                instance_evidence(&family, None, format!("seed {seed}")),
            );
            if sound {
                let subsets = random_subsets(
                    family.ground(),
                    params.subsets_per_space,
                    seed ^ 0x9e37_79b9_7f4a_7c15,
                );
                r.merge(theorem_reports(suite, &family, &subsets)?);
            }
            Ok(r)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(VerificationReport::merged(
        format!(
            "{} random learning spaces (n={}, steps={}, seeds {}..) x {} subsets",
            params.spaces,
            params.item_count,
            params.growth_steps,
            params.first_seed,
            params.subsets_per_space
        ),
        reports,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{f_ex, k_ny};

    #[test]
    fn knowledge_structure_counts() {
        assert_eq!(enumerate_knowledge_structures(2).unwrap().count(), 4);
        assert_eq!(enumerate_knowledge_structures(3).unwrap().count(), 64);
        assert_eq!(enumerate_knowledge_structures(4).unwrap().count(), 16384);
        assert!(enumerate_knowledge_structures(1).is_err());
        assert!(enumerate_knowledge_structures(5).is_err());
    }

    #[test]
    fn two_item_learning_spaces() {
        let spaces: Vec<String> = enumerate_learning_spaces(2)
            .unwrap()
            .map(|f| f.to_string())
            .collect();
        assert_eq!(
            spaces,
            vec!["{∅, {a}, {a,b}}", "{∅, {b}, {a,b}}", "{∅, {a}, {b}, {a,b}}",]
        );
    }

    #[test]
    fn generator_chain_without_growth() {
        let f = random_learning_space(&GeneratorConfig::new(2, 0, 11)).unwrap();
        assert_eq!(f.len(), 3);
        assert!(f.is_learning_space());
    }

    #[test]
    fn generator_is_deterministic_and_sound() {
        let cfg = GeneratorConfig::new(6, 40, 7);
        let a = random_learning_space(&cfg).unwrap();
        let b = random_learning_space(&cfg).unwrap();
        assert_eq!(a, b);
        assert!(a.is_learning_space());
        assert!(random_learning_space(&GeneratorConfig::new(1, 0, 0)).is_err());
    }

    #[test]
    fn report_evidence_rules() {
        let f = f_ex();
        let mut r = VerificationReport::new("t");
        r.record("u", true, || unreachable!());
        assert!(r.holds());
        r.record("u", false, instance_evidence(&f, None, "x".into()));
        assert!(!r.holds());
        assert_eq!(r.claim("u").unwrap().failures, 1);
        assert!(r.claim("u").unwrap().evidence.is_some());

        let mut e = VerificationReport::new("t");
        e.record_witness("w", false, || unreachable!());
        assert!(!e.holds());
        e.record_witness("w", true, instance_evidence(&f, None, String::new()));
        assert!(e.holds());
    }

    #[test]
    fn pt1_on_worked_example() {
        let f = f_ex();
        let adf = f.domain().state(["a", "d", "f"]).unwrap();
        let r = verify_projection_theorem_1(&f, adf).unwrap();
        assert!(r.holds(), "{r}");
        let g = f.domain().state(["g"]).unwrap();
        assert!(verify_projection_theorem_1(&f, g).unwrap().holds());
    }

    #[test]
    fn pt2_on_non_yielding_example() {
        let k = k_ny();
        let d = k.domain().state(["d"]).unwrap();
        let sides = projection_theorem_2_sides(&k, d).unwrap();
        assert!(!sides.yielding);
        assert!(!sides.plus_children_are_learning_spaces);
        assert!(verify_projection_theorem_2(&k, d).unwrap().holds());
    }

    #[test]
    fn theorem_verifiers_check_preconditions() {
        let g = crate::fixtures::g_ex();
        let c = g.domain().state(["c"]).unwrap();
        assert!(matches!(
            verify_projection_theorem_2(&g, c),
            Err(Error::Precondition(_))
        ));
        let f = f_ex();
        assert!(verify_projection_theorem_1(&f, StateSet::EMPTY).is_err());
    }

    #[test]
    fn proper_subset_listing() {
        let subs = proper_subsets(StateSet::from_mask(0b1011));
        assert_eq!(subs.len(), 6);
        assert!(subs
            .iter()
            .all(|s| s.is_proper_subset(StateSet::from_mask(0b1011))));
    }
}
