//! Learning-space counts checked against an independent brute-force oracle.
//!
//! The oracle works on raw `u64` masks and uses the antimatroid
//! characterisation (contains ∅ and Q, accessible, closed under union), which
//! shares no code with the crate's [L1]/[L2] route.

use learnspace::oracle::{enumerate_knowledge_structures, enumerate_learning_spaces};

fn oracle_is_antimatroid(states: &[u64], full: u64) -> bool {
    let has = |s: u64| states.contains(&s);
    if !has(0) || !has(full) {
        return false;
    }
    let accessible = states
        .iter()
        .all(|&s| s == 0 || (0..64).any(|q| s & (1 << q) != 0 && has(s & !(1 << q))));
    let closed = states.iter().all(|&a| states.iter().all(|&b| has(a | b)));
    accessible && closed
}

fn oracle_count(n: usize) -> usize {
    let full = (1u64 << n) - 1;
    let middle: Vec<u64> = (1..full).collect();
    (0u64..1 << middle.len())
        .filter(|choice| {
            let mut states = vec![0, full];
            states.extend(
                middle
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| choice & (1 << i) != 0)
                    .map(|(_, s)| *s),
            );
            oracle_is_antimatroid(&states, full)
        })
        .count()
}

// Pinned from the oracle above on first run.
const LEARNING_SPACES_N2: usize = 3;
const LEARNING_SPACES_N3: usize = 22;
const LEARNING_SPACES_N4: usize = 485;

#[test]
fn oracle_reproduces_pinned_counts() {
    assert_eq!(oracle_count(2), LEARNING_SPACES_N2);
    assert_eq!(oracle_count(3), LEARNING_SPACES_N3);
    assert_eq!(oracle_count(4), LEARNING_SPACES_N4);
}

#[test]
fn enumeration_matches_pinned_counts() {
    assert_eq!(
        enumerate_learning_spaces(2).unwrap().count(),
        LEARNING_SPACES_N2
    );
    assert_eq!(
        enumerate_learning_spaces(3).unwrap().count(),
        LEARNING_SPACES_N3
    );
    assert_eq!(
        enumerate_learning_spaces(4).unwrap().count(),
        LEARNING_SPACES_N4
    );
}

#[test]
fn emitted_spaces_pass_both_routes() {
    for n in 2..=4 {
        for f in enumerate_learning_spaces(n).unwrap() {
            assert!(f.is_learning_space());
            assert!(f.is_well_graded_knowledge_space(), "{f}");
            assert!(f.is_accessible());
        }
    }
}

#[test]
fn enumeration_emits_each_structure_once() {
    let mut seen: Vec<Vec<u64>> = enumerate_knowledge_structures(3)
        .unwrap()
        .map(|f| f.iter().map(|s| s.mask()).collect())
        .collect();
    let total = seen.len();
    seen.sort();
    seen.dedup();
    assert_eq!(seen.len(), total);
}

#[test]
fn count_is_independent_of_enumeration_order() {
    let forward = enumerate_learning_spaces(3).unwrap().count();
    let mut all: Vec<_> = enumerate_knowledge_structures(3).unwrap().collect();
    all.reverse();
    let backward = all.iter().filter(|f| f.is_learning_space()).count();
    assert_eq!(forward, backward);
}
