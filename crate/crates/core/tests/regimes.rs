//! Behaviour at the edges of the polynomial-time regimes.

use hedonic::dynamics::{improvement_step, run_local_search, run_singleton_seeded, PivotPolicy};
use hedonic::stability::check_stable;
use hedonic::{
    int, ratio, signed_internal_count, Deviation, EnterRule, Error, Game, LeaveRule, Outcome, Rule,
    Threshold,
};

fn th(v: hedonic::Rational) -> Threshold {
    Threshold::new(v).unwrap()
}

#[test]
fn half_threshold_allows_flat_signed_count() {
    // Player 0 is alone (an empty leave vote passes) and enters {1, 2}, where
    // one of its two edges is positive: exactly half. Its gain is 2, but the
    // signed count of internal edges stays at 0.
    let game = Game::from_int_edges(3, &[(0, 1, 3), (0, 2, -1)]).unwrap();
    let start = Outcome::from_blocks(3, &[vec![0], vec![1, 2]]).unwrap();
    let rule = Rule::vote_in_out(th(ratio(1, 2)), th(ratio(2, 3)));
    let (dev, next) = improvement_step(&game, &start, &rule, None, PivotPolicy::FirstImprovement)
        .unwrap()
        .unwrap();
    assert_eq!(dev, Deviation::to_coalition(0, 1));
    assert_eq!(signed_internal_count(&game, &start).unwrap(), 0);
    assert_eq!(signed_internal_count(&game, &next).unwrap(), 0);

    // The mirror case: T_out = 1/2 lets a player with one positive and one
    // negative internal edge but negative utility walk out to a singleton.
    let game = Game::from_int_edges(3, &[(0, 1, 1), (0, 2, -3)]).unwrap();
    let start = Outcome::grand(3);
    let rule = Rule::vote_in_out(th(ratio(2, 3)), th(ratio(1, 2)));
    let (dev, next) = improvement_step(&game, &start, &rule, None, PivotPolicy::FirstImprovement)
        .unwrap()
        .unwrap();
    assert_eq!(dev.player, 0);
    assert_eq!(signed_internal_count(&game, &start).unwrap(), 0);
    assert_eq!(signed_internal_count(&game, &next).unwrap(), 0);
}

#[test]
fn strict_thresholds_increase_signed_count() {
    let game = Game::from_int_edges(
        5,
        &[
            (0, 1, 2),
            (1, 2, -1),
            (2, 3, 4),
            (0, 3, -2),
            (3, 4, 1),
            (0, 4, 3),
            (1, 4, -5),
        ],
    )
    .unwrap();
    let rule = Rule::vote_in_out(th(ratio(2, 3)), th(ratio(2, 3)));
    for seed in 0..20 {
        let trace = run_local_search(
            &game,
            &Outcome::grand(5),
            &rule,
            None,
            PivotPolicy::Random(seed),
            None,
        )
        .unwrap();
        assert!(trace.converged);
        let mut prev = signed_internal_count(&game, &trace.start).unwrap();
        for step in &trace.steps {
            assert!(step.signed_internal_count > prev);
            prev = step.signed_internal_count;
        }
        assert!(trace.step_count <= 2 * game.edge_count());
    }
}

#[test]
fn singleton_seeded_rejects_unsupported_rules() {
    let game = Game::from_int_edges(2, &[(0, 1, 1)]).unwrap();
    let veto_in = EnterRule::VoteIn(Threshold::one());
    for rule in [
        Rule::nash(),
        Rule::is(),
        Rule::new(veto_in, LeaveRule::VoteOut(th(int(0)))),
        Rule::new(EnterRule::SumIn, LeaveRule::SumOut),
    ] {
        assert!(matches!(
            run_singleton_seeded(&game, &rule),
            Err(Error::RulePreconditionViolated(_))
        ));
    }
}

#[test]
fn capped_dynamics_stay_within_cap() {
    let game = Game::from_int_edges(
        6,
        &[
            (0, 1, -2),
            (1, 2, -3),
            (2, 3, -1),
            (3, 4, -4),
            (4, 5, -2),
            (0, 5, -1),
            (0, 3, 2),
        ],
    )
    .unwrap();
    let start = Outcome::from_labels(&[0, 1, 0, 1, 0, 1]);
    for rule in [Rule::nash(), Rule::vote_out(th(ratio(1, 2)))] {
        let trace = run_local_search(
            &game,
            &start,
            &rule,
            Some(2),
            PivotPolicy::BestImprovement,
            None,
        )
        .unwrap();
        assert!(trace.converged);
        let mut current = trace.start.clone();
        for step in &trace.steps {
            current = current.apply(&step.deviation).unwrap();
            assert!(current.coalition_count() <= 2);
        }
        assert!(
            check_stable(&game, &trace.final_outcome, &rule, Some(2))
                .unwrap()
                .stable
        );
    }
}

#[test]
fn start_above_cap_is_rejected() {
    let game = Game::from_int_edges(3, &[(0, 1, 1)]).unwrap();
    let result = run_local_search(
        &game,
        &Outcome::singletons(3),
        &Rule::nash(),
        Some(2),
        PivotPolicy::FirstImprovement,
        None,
    );
    assert!(matches!(result, Err(Error::InvalidPartition(_))));
}
