use learnspace::oracle::{
    claims, enumerate_knowledge_structures, evaluate_claim, proper_subsets, sweep_exhaustive,
    sweep_random, verify_lemma_suite, ClaimKind, Evidence, RandomSweep, Suite, VerificationReport,
};

#[test]
fn lemma_suite_small_sizes() {
    let two = verify_lemma_suite(2).unwrap();
    assert!(two.claim(claims::AXIOMS_IFF_WELL_GRADED).unwrap().holds());
    assert!(two
        .claim(claims::WELL_GRADED_CLOSED_IS_PARTIAL)
        .unwrap()
        .holds());
    // Over two items every family containing its union is union-closed.
    assert!(!two
        .claim(claims::PARTIAL_NOT_CLOSED_WITNESS)
        .unwrap()
        .holds());

    let three = verify_lemma_suite(3).unwrap();
    assert!(three.holds(), "{three}");
    let witness = three
        .claim(claims::PARTIAL_NOT_CLOSED_WITNESS)
        .unwrap()
        .evidence
        .clone()
        .unwrap();
    assert!(witness.family.is_partial_learning_space());
    assert!(!witness.family.is_union_closed());
    assert!(verify_lemma_suite(5).is_err());
}

#[test]
fn exhaustive_theorem_sweeps_small() {
    for n in 2..=3 {
        for suite in [Suite::ProjectionTheorem1, Suite::ProjectionTheorem2] {
            let r = sweep_exhaustive(suite, n).unwrap();
            assert!(r.holds(), "{r}");
        }
    }
}

#[test]
fn random_sweep_is_deterministic() {
    let params = RandomSweep {
        spaces: 20,
        subsets_per_space: 5,
        ..RandomSweep::default()
    };
    let a = sweep_random(Suite::ProjectionTheorem2, &params).unwrap();
    let b = sweep_random(Suite::ProjectionTheorem2, &params).unwrap();
    assert_eq!(a, b);
    assert!(a.holds());
    assert_eq!(a.claim(claims::GENERATOR_SOUND).unwrap().checked, 20);
    assert_eq!(a.claim(claims::PT2_EQUIVALENCE).unwrap().checked, 100);
    assert!(sweep_random(Suite::Lemmas, &params).is_err());
}

#[test]
fn counterexamples_replay() {
    // The projection claim is only a theorem for learning spaces; run it over
    // all knowledge structures to collect genuine failures.
    let mut report = VerificationReport::new("replay");
    for f in enumerate_knowledge_structures(3).unwrap() {
        for qp in proper_subsets(f.ground()) {
            for name in [claims::PT1_PROJECTION, claims::PT1_CHILDREN] {
                if let Some(ok) = evaluate_claim(name, &f, Some(qp)) {
                    report.record(name, ok, || Evidence {
                        family: f.clone(),
                        subset: Some(qp),
                        detail: String::new(),
                    });
                }
            }
        }
    }
    let mut failures = 0;
    for claim in &report.claims {
        assert_eq!(claim.kind, ClaimKind::Universal);
        assert_eq!(claim.evidence.is_some(), !claim.holds());
        if let Some(e) = &claim.evidence {
            failures += 1;
            assert_eq!(
                evaluate_claim(&claim.name, &e.family, e.subset),
                Some(false)
            );
        }
    }
    assert!(
        failures > 0,
        "expected at least one failing claim to replay"
    );
}
