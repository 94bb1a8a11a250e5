use learnspace::oracle::{
    enumerate_learning_spaces, proper_subsets, random_learning_space, GeneratorConfig,
};
use learnspace::{
    assess_on_projection, assess_recursive, AssessConfig, LatentResponder, SetFamily, StateSet,
};

fn check_session(f: &SetFamily, cfg: &AssessConfig, t: StateSet) {
    let r = LatentResponder::new(f, t).unwrap();
    let s = assess_recursive(f, cfg, &r).unwrap();
    assert_eq!(s.result, Some(t), "{f} true state {}", f.format_state(t));
    assert!(s.query_count() <= f.ground().len());

    let mut removed = StateSet::EMPTY;
    for level in &s.levels {
        let mut asked = StateSet::EMPTY;
        for q in &level.queries {
            assert!(level.subset.contains(q.item), "query outside Q'");
            assert!(!asked.contains(q.item), "item asked twice");
            asked = asked.with(q.item);
        }
        assert!(level.queries.len() <= level.subset.len());
        // The level's own view of the latent state.
        let local = t.difference(removed);
        assert!(level.family.contains(local));
        assert_eq!(level.trace, local.intersection(level.subset));
        assert!(level.family.is_partial_knowledge_structure());
        assert!(level.family.is_union_closed() && level.family.is_well_graded());
        removed = removed.union(level.core);
    }
}

#[test]
fn exact_recovery_on_all_small_spaces() {
    for n in 2..=4 {
        for f in enumerate_learning_spaces(n).unwrap() {
            for qp in proper_subsets(f.ground()) {
                let cfg = AssessConfig::with_first_subset(qp);
                for t in f.iter() {
                    check_session(&f, &cfg, t);
                }
            }
        }
    }
}

#[test]
fn exact_recovery_with_default_split_on_generated_spaces() {
    for seed in 0..20 {
        let f = random_learning_space(&GeneratorConfig::new(7, 25, seed)).unwrap();
        for t in f.iter() {
            check_session(&f, &AssessConfig::default(), t);
            let narrow = AssessConfig {
                split_size: Some(1),
                ..AssessConfig::default()
            };
            check_session(&f, &narrow, t);
        }
    }
}

#[test]
fn projection_class_matches_partition() {
    for f in enumerate_learning_spaces(3).unwrap() {
        for qp in proper_subsets(f.ground()) {
            let partition = f.partition_by(qp).unwrap();
            for t in f.iter() {
                let r = LatentResponder::new(&f, t).unwrap();
                let (class, log) = assess_on_projection(&f, qp, &r).unwrap();
                assert_eq!(class.trace(), t.intersection(qp));
                assert_eq!(Some(&class), partition.class_of(t));
                assert!(log.iter().all(|q| qp.contains(q.item)));
            }
        }
    }
}

#[test]
fn explicit_subset_must_be_proper() {
    let f = learnspace::fixtures::f_ex();
    let t = f.union_all();
    let r = LatentResponder::new(&f, t).unwrap();
    let cfg = AssessConfig::with_first_subset(f.union_all());
    assert!(assess_recursive(&f, &cfg, &r).is_err());
}
