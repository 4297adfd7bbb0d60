//! Feasibility of single-player deviations under every enter/leave restriction,
//! and stability verdicts.
//!
//! A deviation is feasible under a [`Rule`] when it is Nash feasible (the
//! deviator strictly gains) and both the enter and the leave restriction
//! permit it. Vote fractions count the deviator's *edges*: a missing edge is
//! neither a yes nor a no vote, and a deviator without edges into the
//! relevant coalition always passes the vote.
//!
//! Deviations are scanned in a fixed order: players ascending, then for each
//! player the existing coalitions in canonical order followed by a new
//! singleton. Witnesses are the first feasible deviation in this order.

use std::ops::ControlFlow;

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::io::rational_serde;
use crate::{
    Deviation, EnterRule, Error, Game, LeaveRule, Outcome, PlayerId, Rational, Result, Rule, Target,
};

/// Edge statistics of one player toward one coalition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Tally {
    pub value: Rational,
    pub edges: usize,
    pub positive: usize,
}

impl Tally {
    const EMPTY: Tally = Tally {
        value: Rational::ZERO,
        edges: 0,
        positive: 0,
    };

    fn negative(&self) -> usize {
        self.edges - self.positive
    }
}

/// Per-coalition tallies of `player` (index = canonical coalition id).
pub(crate) fn tallies(game: &Game, outcome: &Outcome, player: PlayerId) -> Vec<Tally> {
    let mut out = vec![Tally::EMPTY; outcome.coalition_count()];
    for &(j, w) in game.neighbors(player) {
        let t = &mut out[outcome.coalition_of(j)];
        t.value += w;
        t.edges += 1;
        if w.is_positive() {
            t.positive += 1;
        }
    }
    out
}

/// Result of checking one restriction side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SideCheck {
    pub ok: bool,
    /// Positive (enter) or negative (leave) share of the deviator's edges, if it has any.
    #[serde(with = "rational_serde::option")]
    pub fraction: Option<Rational>,
    /// Total weight of the deviator's edges into the coalition.
    #[serde(with = "rational_serde")]
    pub sum: Rational,
}

/// Everything computed while deciding whether a deviation is feasible.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FeasibilityBreakdown {
    pub nash: bool,
    pub enter_ok: bool,
    pub leave_ok: bool,
    /// Value toward the target minus current utility.
    #[serde(with = "rational_serde")]
    pub gain: Rational,
    #[serde(with = "rational_serde::option")]
    pub enter_fraction: Option<Rational>,
    #[serde(with = "rational_serde::option")]
    pub leave_fraction: Option<Rational>,
    #[serde(with = "rational_serde")]
    pub enter_sum: Rational,
    #[serde(with = "rational_serde")]
    pub leave_sum: Rational,
}

impl FeasibilityBreakdown {
    pub fn feasible(&self) -> bool {
        self.nash && self.enter_ok && self.leave_ok
    }
}

/// Outcome of a stability check. `witness` is present exactly when unstable.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StabilityVerdict {
    pub stable: bool,
    pub witness: Option<(Deviation, FeasibilityBreakdown)>,
}

fn enter_check(target: &Tally, enter: EnterRule) -> SideCheck {
    let fraction =
        (target.edges > 0).then(|| Rational::new(target.positive as i128, target.edges as i128));
    let ok = match enter {
        EnterRule::None => true,
        EnterRule::SumIn => !target.value.is_negative(),
        EnterRule::VoteIn(t) => target.edges == 0 || t.met_by(target.positive, target.edges),
    };
    SideCheck {
        ok,
        fraction,
        sum: target.value,
    }
}

fn leave_check(own: &Tally, leave: LeaveRule) -> SideCheck {
    let fraction =
        (own.edges > 0).then(|| Rational::new(own.negative() as i128, own.edges as i128));
    let ok = match leave {
        LeaveRule::None => true,
        LeaveRule::SumOut => !own.value.is_positive(),
        LeaveRule::VoteOut(t) => own.edges == 0 || t.met_by(own.negative(), own.edges),
    };
    SideCheck {
        ok,
        fraction,
        sum: own.value,
    }
}

fn breakdown_from(own: &Tally, target: &Tally, rule: &Rule) -> FeasibilityBreakdown {
    let gain = target.value - own.value;
    let enter = enter_check(target, rule.enter);
    let leave = leave_check(own, rule.leave);
    FeasibilityBreakdown {
        nash: gain.is_positive(),
        enter_ok: enter.ok,
        leave_ok: leave.ok,
        gain,
        enter_fraction: enter.fraction,
        leave_fraction: leave.fraction,
        enter_sum: enter.sum,
        leave_sum: leave.sum,
    }
}

fn target_tally(all: &[Tally], target: Target) -> Tally {
    match target {
        Target::Coalition(c) => all[c],
        Target::NewSingleton => Tally::EMPTY,
    }
}

/// Full feasibility breakdown of `dev` under `rule`.
pub fn evaluate(
    game: &Game,
    outcome: &Outcome,
    dev: &Deviation,
    rule: &Rule,
) -> Result<FeasibilityBreakdown> {
    outcome.check_matches(game)?;
    outcome.check_deviation(dev)?;
    let all = tallies(game, outcome, dev.player);
    let own = all[outcome.coalition_of(dev.player)];
    Ok(breakdown_from(&own, &target_tally(&all, dev.target), rule))
}

/// Nash feasibility: the deviator's value toward the target strictly exceeds its utility.
pub fn nash_feasible(
    game: &Game,
    outcome: &Outcome,
    dev: &Deviation,
) -> Result<FeasibilityBreakdown> {
    evaluate(game, outcome, dev, &Rule::nash())
}

/// Whether the enter restriction admits `dev.player` into `dev.target`.
pub fn enter_permits(
    game: &Game,
    outcome: &Outcome,
    dev: &Deviation,
    enter: EnterRule,
) -> Result<SideCheck> {
    outcome.check_matches(game)?;
    outcome.check_deviation(dev)?;
    let all = tallies(game, outcome, dev.player);
    Ok(enter_check(&target_tally(&all, dev.target), enter))
}

/// Whether the leave restriction lets `player` leave its coalition.
pub fn leave_permits(
    game: &Game,
    outcome: &Outcome,
    player: PlayerId,
    leave: LeaveRule,
) -> Result<SideCheck> {
    game.check_player(player)?;
    outcome.check_matches(game)?;
    let all = tallies(game, outcome, player);
    Ok(leave_check(&all[outcome.coalition_of(player)], leave))
}

pub(crate) fn check_k(k: Option<usize>) -> Result<()> {
    match k {
        Some(k) if k < 2 => Err(Error::InvalidK { k, min: 2 }),
        _ => Ok(()),
    }
}

/// Visits every candidate deviation of `player` in scan order, without any filtering.
pub(crate) fn for_each_candidate<B>(
    game: &Game,
    outcome: &Outcome,
    player: PlayerId,
    rule: &Rule,
    mut visit: impl FnMut(Deviation, FeasibilityBreakdown) -> ControlFlow<B>,
) -> ControlFlow<B> {
    let all = tallies(game, outcome, player);
    let current = outcome.coalition_of(player);
    let own = all[current];
    for (c, t) in all.iter().enumerate() {
        if c != current {
            visit(
                Deviation::to_coalition(player, c),
                breakdown_from(&own, t, rule),
            )?;
        }
    }
    if !outcome.is_alone(player) {
        visit(
            Deviation::to_singleton(player),
            breakdown_from(&own, &Tally::EMPTY, rule),
        )?;
    }
    ControlFlow::Continue(())
}

/// Visits every feasible deviation in scan order, honouring the coalition cap.
pub(crate) fn scan_feasible<B>(
    game: &Game,
    outcome: &Outcome,
    rule: &Rule,
    k: Option<usize>,
    mut visit: impl FnMut(Deviation, FeasibilityBreakdown) -> ControlFlow<B>,
) -> ControlFlow<B> {
    for player in 0..game.player_count() {
        for_each_candidate(game, outcome, player, rule, |dev, b| {
            let within_cap = k.is_none_or(|k| outcome.coalition_count_after(&dev) <= k);
            if within_cap && b.feasible() {
                visit(dev, b)
            } else {
                ControlFlow::Continue(())
            }
        })?;
    }
    ControlFlow::Continue(())
}

/// All deviations that are feasible under `rule`, in scan order.
///
/// With a cap `k`, a deviation is dropped when the resulting outcome would
/// have more than `k` coalitions.
pub fn feasible_deviations(
    game: &Game,
    outcome: &Outcome,
    rule: &Rule,
    k: Option<usize>,
) -> Result<Vec<(Deviation, FeasibilityBreakdown)>> {
    check_k(k)?;
    outcome.check_matches(game)?;
    let mut out = Vec::new();
    let _ = scan_feasible::<()>(game, outcome, rule, k, |dev, b| {
        out.push((dev, b));
        ControlFlow::Continue(())
    });
    Ok(out)
}

/// Stable iff no feasible deviation exists; otherwise the first one is the witness.
pub fn check_stable(
    game: &Game,
    outcome: &Outcome,
    rule: &Rule,
    k: Option<usize>,
) -> Result<StabilityVerdict> {
    check_k(k)?;
    outcome.check_matches(game)?;
    let witness = match scan_feasible(game, outcome, rule, k, |d, b| ControlFlow::Break((d, b))) {
        ControlFlow::Break(w) => Some(w),
        ControlFlow::Continue(()) => None,
    };
    Ok(StabilityVerdict {
        stable: witness.is_none(),
        witness,
    })
}

/// Deviations that would leave the deviator exactly as well off.
///
/// An empty list means no player is indifferent between its coalition and
/// any alternative at this outcome.
pub fn zero_gain_deviations(game: &Game, outcome: &Outcome) -> Result<Vec<Deviation>> {
    outcome.check_matches(game)?;
    let mut out = Vec::new();
    for player in 0..game.player_count() {
        let _ = for_each_candidate::<()>(game, outcome, player, &Rule::nash(), |dev, b| {
            if b.gain.is_zero() {
                out.push(dev);
            }
            ControlFlow::Continue(())
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{int, ratio, Threshold};

    fn triangle() -> Game {
        Game::from_int_edges(3, &[(0, 1, 4), (0, 2, -1), (1, 2, 2)]).unwrap()
    }

    fn split() -> Outcome {
        Outcome::from_blocks(3, &[vec![0, 1], vec![2]]).unwrap()
    }

    fn t(n: i128, d: i128) -> Threshold {
        Threshold::new(ratio(n, d)).unwrap()
    }

    /// Player 0 with edges +2, +5, -3 into coalition {1,2,3}, alone in {0}.
    fn star_game() -> (Game, Outcome) {
        let g = Game::from_int_edges(4, &[(0, 1, 2), (0, 2, 5), (0, 3, -3)]).unwrap();
        let o = Outcome::from_blocks(4, &[vec![0], vec![1, 2, 3]]).unwrap();
        (g, o)
    }

    #[test]
    fn nash_feasibility() {
        let g = triangle();
        let b = nash_feasible(&g, &split(), &Deviation::to_coalition(2, 0)).unwrap();
        assert!(b.nash);
        assert_eq!(b.gain, int(1));

        let b = nash_feasible(&g, &Outcome::grand(3), &Deviation::to_singleton(2)).unwrap();
        assert!(!b.nash);
        assert_eq!(b.gain, int(-1));

        let neg = Game::from_int_edges(3, &[(0, 1, -1), (0, 2, -2), (1, 2, -3)]).unwrap();
        let singles = Outcome::singletons(3);
        for c in [1, 2] {
            let b = nash_feasible(&neg, &singles, &Deviation::to_coalition(0, c)).unwrap();
            assert!(!b.nash);
        }
        assert!(nash_feasible(&g, &split(), &Deviation::to_coalition(0, 0)).is_err());
    }

    #[test]
    fn vote_in_fractions() {
        let (g, o) = star_game();
        let dev = Deviation::to_coalition(0, 1);
        let r = enter_permits(&g, &o, &dev, EnterRule::VoteIn(t(2, 3))).unwrap();
        assert!(r.ok);
        assert_eq!(r.fraction, Some(ratio(2, 3)));
        assert!(
            !enter_permits(&g, &o, &dev, EnterRule::VoteIn(t(3, 4)))
                .unwrap()
                .ok
        );
    }

    #[test]
    fn vote_in_without_edges_passes() {
        let g = Game::from_int_edges(3, &[(1, 2, 1)]).unwrap();
        let o = Outcome::from_blocks(3, &[vec![0], vec![1, 2]]).unwrap();
        let r = enter_permits(
            &g,
            &o,
            &Deviation::to_coalition(0, 1),
            EnterRule::VoteIn(Threshold::one()),
        )
        .unwrap();
        assert!(r.ok);
        assert_eq!(r.fraction, None);
    }

    #[test]
    fn sum_in() {
        let g = Game::from_int_edges(3, &[(0, 1, 2), (0, 2, -5)]).unwrap();
        let o = Outcome::from_blocks(3, &[vec![0], vec![1, 2]]).unwrap();
        let r = enter_permits(&g, &o, &Deviation::to_coalition(0, 1), EnterRule::SumIn).unwrap();
        assert!(!r.ok);
        assert_eq!(r.sum, int(-3));
    }

    #[test]
    fn new_singleton_always_enterable() {
        let (g, _) = star_game();
        let o = Outcome::grand(4);
        for enter in [
            EnterRule::None,
            EnterRule::SumIn,
            EnterRule::VoteIn(Threshold::one()),
        ] {
            assert!(
                enter_permits(&g, &o, &Deviation::to_singleton(0), enter)
                    .unwrap()
                    .ok
            );
        }
    }

    #[test]
    fn vote_out_and_sum_out() {
        // player 0 inside {0,1,2} with edges +4, -1
        let g = Game::from_int_edges(3, &[(0, 1, 4), (0, 2, -1)]).unwrap();
        let o = Outcome::grand(3);
        let r = leave_permits(&g, &o, 0, LeaveRule::VoteOut(t(1, 2))).unwrap();
        assert!(r.ok);
        assert_eq!(r.fraction, Some(ratio(1, 2)));
        assert!(
            !leave_permits(&g, &o, 0, LeaveRule::VoteOut(Threshold::one()))
                .unwrap()
                .ok
        );
        assert!(!leave_permits(&g, &o, 0, LeaveRule::SumOut).unwrap().ok);

        let flipped = Game::from_int_edges(3, &[(0, 1, -4), (0, 2, 1)]).unwrap();
        assert!(
            leave_permits(&flipped, &o, 0, LeaveRule::SumOut)
                .unwrap()
                .ok
        );

        let singles = Outcome::singletons(3);
        for leave in [
            LeaveRule::None,
            LeaveRule::SumOut,
            LeaveRule::VoteOut(Threshold::one()),
        ] {
            assert!(leave_permits(&g, &singles, 0, leave).unwrap().ok);
        }
    }

    #[test]
    fn feasible_lists() {
        let all_pos = Game::from_int_edges(3, &[(0, 1, 1), (0, 2, 2), (1, 2, 3)]).unwrap();
        for rule in [Rule::nash(), Rule::is(), Rule::cis(), Rule::sum_cis()] {
            assert!(
                feasible_deviations(&all_pos, &Outcome::grand(3), &rule, None)
                    .unwrap()
                    .is_empty()
            );
        }

        let g = triangle();
        let nash = feasible_deviations(&g, &split(), &Rule::nash(), None).unwrap();
        assert_eq!(nash.len(), 1);
        assert_eq!(nash[0].0, Deviation::to_coalition(2, 0));
        assert!(feasible_deviations(&g, &split(), &Rule::is(), None)
            .unwrap()
            .is_empty());
        assert!(matches!(
            feasible_deviations(&g, &split(), &Rule::nash(), Some(1)),
            Err(Error::InvalidK { .. })
        ));
    }

    #[test]
    fn coalition_cap_blocks_new_coalitions() {
        // 0 and 1 hate each other, 2 is neutral
        let g = Game::from_int_edges(3, &[(0, 1, -1)]).unwrap();
        let o = Outcome::from_blocks(3, &[vec![0, 1], vec![2]]).unwrap();
        let free = feasible_deviations(&g, &o, &Rule::nash(), None).unwrap();
        let free: Vec<_> = free.into_iter().map(|(d, _)| d).collect();
        assert_eq!(
            free,
            vec![
                Deviation::to_coalition(0, 1),
                Deviation::to_singleton(0),
                Deviation::to_coalition(1, 1),
                Deviation::to_singleton(1),
            ]
        );
        let devs: Vec<_> = feasible_deviations(&g, &o, &Rule::nash(), Some(2))
            .unwrap()
            .into_iter()
            .map(|(d, _)| d)
            .collect();
        assert_eq!(
            devs,
            vec![Deviation::to_coalition(0, 1), Deviation::to_coalition(1, 1)]
        );
    }

    #[test]
    fn verdicts() {
        let neg = Game::from_int_edges(3, &[(0, 1, -1), (0, 2, -2), (1, 2, -3)]).unwrap();
        assert!(
            check_stable(&neg, &Outcome::singletons(3), &Rule::nash(), None)
                .unwrap()
                .stable
        );
        let g = triangle();
        assert!(
            check_stable(&g, &Outcome::grand(3), &Rule::nash(), None)
                .unwrap()
                .stable
        );
        let v = check_stable(&g, &split(), &Rule::nash(), None).unwrap();
        assert!(!v.stable);
        assert_eq!(v.witness.unwrap().0, Deviation::to_coalition(2, 0));
    }

    #[test]
    fn indifference_diagnostic() {
        let g = Game::from_int_edges(3, &[(0, 1, 1), (0, 2, 1)]).unwrap();
        let o = Outcome::from_blocks(3, &[vec![0, 1], vec![2]]).unwrap();
        let zero = zero_gain_deviations(&g, &o).unwrap();
        assert!(zero.contains(&Deviation::to_coalition(0, 1)));
    }
}
