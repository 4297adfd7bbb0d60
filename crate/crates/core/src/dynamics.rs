//! Local-improvement dynamics.
//!
//! Every engine repeatedly executes one feasible deviation until none is
//! left. Each step strictly increases [`total_happiness`] by twice the
//! deviator's gain, so every run terminates; the step counts are only
//! polynomially bounded in the special regimes covered by
//! [`run_singleton_seeded`], [`run_cis`] and vote-in/vote-out rules with
//! thresholds at least one half summing to more than one.

use std::ops::ControlFlow;

use num_traits::{One, Signed};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::io::rational_serde;
use crate::stability::{self, FeasibilityBreakdown};
use crate::{
    signed_internal_count, total_happiness, Deviation, EnterRule, Error, Game, LeaveRule, Outcome,
    Rational, Result, Rule, Target,
};

/// How to pick among several feasible deviations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PivotPolicy {
    /// First feasible deviation in scan order.
    #[default]
    FirstImprovement,
    /// Largest gain; ties broken by scan order.
    BestImprovement,
    /// Uniformly random feasible deviation from a seeded generator.
    Random(u64),
}

/// One executed deviation and the potentials right after it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Step {
    pub deviation: Deviation,
    #[serde(with = "rational_serde")]
    pub gain: Rational,
    #[serde(with = "rational_serde")]
    pub total_happiness: Rational,
    pub signed_internal_count: i64,
}

/// Full record of a run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Trace {
    pub start: Outcome,
    pub steps: Vec<Step>,
    #[serde(rename = "final")]
    pub final_outcome: Outcome,
    pub converged: bool,
    pub step_count: usize,
}

impl Trace {
    /// Re-executes the recorded deviations from `start`.
    pub fn replay(&self) -> Result<Outcome> {
        self.steps
            .iter()
            .try_fold(self.start.clone(), |o, s| o.apply(&s.deviation))
    }
}

/// `10 · (|V| + |E|)²`.
pub fn default_step_limit(game: &Game) -> usize {
    let size = game.player_count() + game.edge_count();
    10 * size * size
}

type Filter<'a> = dyn Fn(&Deviation, &FeasibilityBreakdown) -> bool + 'a;

struct Engine<'a> {
    game: &'a Game,
    rule: Rule,
    k: Option<usize>,
    policy: PivotPolicy,
    rng: ChaCha8Rng,
    filter: Option<&'a Filter<'a>>,
}

impl<'a> Engine<'a> {
    fn new(game: &'a Game, rule: Rule, k: Option<usize>, policy: PivotPolicy) -> Result<Self> {
        stability::check_k(k)?;
        let seed = match policy {
            PivotPolicy::Random(seed) => seed,
            _ => 0,
        };
        Ok(Engine {
            game,
            rule,
            k,
            policy,
            rng: ChaCha8Rng::seed_from_u64(seed),
            filter: None,
        })
    }

    fn admissible(&self, dev: &Deviation, b: &FeasibilityBreakdown) -> bool {
        self.filter.is_none_or(|f| f(dev, b))
    }

    fn choose(&mut self, outcome: &Outcome) -> Option<(Deviation, Rational)> {
        let (game, rule, k) = (self.game, self.rule, self.k);
        match self.policy {
            PivotPolicy::FirstImprovement => {
                match stability::scan_feasible(game, outcome, &rule, k, |d, b| {
                    if self.admissible(&d, &b) {
                        ControlFlow::Break((d, b.gain))
                    } else {
                        ControlFlow::Continue(())
                    }
                }) {
                    ControlFlow::Break(found) => Some(found),
                    ControlFlow::Continue(()) => None,
                }
            }
            PivotPolicy::BestImprovement => {
                let mut best: Option<(Deviation, Rational)> = None;
                let _ = stability::scan_feasible::<()>(game, outcome, &rule, k, |d, b| {
                    if self.admissible(&d, &b) && best.as_ref().is_none_or(|(_, g)| b.gain > *g) {
                        best = Some((d, b.gain));
                    }
                    ControlFlow::Continue(())
                });
                best
            }
            PivotPolicy::Random(_) => {
                let mut all = Vec::new();
                let _ = stability::scan_feasible::<()>(game, outcome, &rule, k, |d, b| {
                    if self.admissible(&d, &b) {
                        all.push((d, b.gain));
                    }
                    ControlFlow::Continue(())
                });
                if all.is_empty() {
                    None
                } else {
                    let idx = self.rng.gen_range(0..all.len());
                    Some(all.swap_remove(idx))
                }
            }
        }
    }

    fn run(&mut self, start: Outcome, step_limit: usize) -> Result<Trace> {
        start.check_matches(self.game)?;
        if let Some(k) = self.k {
            if start.coalition_count() > k {
                return Err(Error::InvalidPartition(format!(
                    "start has {} coalitions, more than the cap {k}",
                    start.coalition_count()
                )));
            }
        }
        let mut current = start.clone();
        let mut steps = Vec::new();
        let converged = loop {
            let Some((deviation, gain)) = self.choose(&current) else {
                break true;
            };
            if steps.len() >= step_limit {
                break false;
            }
            current = current.apply(&deviation)?;
            steps.push(Step {
                deviation,
                gain,
                total_happiness: total_happiness(self.game, &current)?,
                signed_internal_count: signed_internal_count(self.game, &current)?,
            });
        };
        Ok(Trace {
            start,
            step_count: steps.len(),
            steps,
            final_outcome: current,
            converged,
        })
    }
}

/// One deviation chosen by `policy`, with the successor outcome; `None` when stable.
pub fn improvement_step(
    game: &Game,
    outcome: &Outcome,
    rule: &Rule,
    k: Option<usize>,
    policy: PivotPolicy,
) -> Result<Option<(Deviation, Outcome)>> {
    outcome.check_matches(game)?;
    let mut engine = Engine::new(game, *rule, k, policy)?;
    engine
        .choose(outcome)
        .map(|(d, _)| outcome.apply(&d).map(|next| (d, next)))
        .transpose()
}

/// Iterates improvement steps from `start` until stable or `step_limit` steps.
///
/// Hitting the limit is not an error: the trace reports `converged = false`.
/// `None` uses [`default_step_limit`].
pub fn run_local_search(
    game: &Game,
    start: &Outcome,
    rule: &Rule,
    k: Option<usize>,
    policy: PivotPolicy,
    step_limit: Option<usize>,
) -> Result<Trace> {
    let limit = step_limit.unwrap_or_else(|| default_step_limit(game));
    Engine::new(game, *rule, k, policy)?.run(start.clone(), limit)
}

/// Whether `rule` has a veto-in enter restriction and a leave restriction that
/// requires a negative internal edge from any member with internal edges.
pub fn singleton_seeded_applicable(rule: &Rule) -> bool {
    let veto_in = matches!(rule.enter, EnterRule::VoteIn(t) if t.is_one());
    let leave = match rule.leave {
        LeaveRule::SumOut => true,
        LeaveRule::VoteOut(t) => t.value().is_positive(),
        LeaveRule::None => false,
    };
    veto_in && leave
}

/// Improvement dynamics from the all-singleton outcome under a veto-in rule
/// whose leave restriction needs a negative internal edge.
///
/// Every coalition that forms has only positive internal edges, so nobody
/// ever leaves one and each player moves at most once: at most `|V|` steps.
pub fn run_singleton_seeded(game: &Game, rule: &Rule) -> Result<Trace> {
    if !singleton_seeded_applicable(rule) {
        return Err(Error::RulePreconditionViolated(format!(
            "rule {rule} needs veto-in entering and sum-out or vote-out (T > 0) leaving"
        )));
    }
    run_local_search(
        game,
        &Outcome::singletons(game.player_count()),
        rule,
        None,
        PivotPolicy::FirstImprovement,
        None,
    )
}

/// Contractual-individual-stability dynamics from the all-singleton outcome.
///
/// Joining a nonempty coalition additionally requires a positive edge into
/// it. A player that joins is then pinned by that edge (veto-out), and a
/// player can found a new coalition at most once, so the run takes at most
/// `2|V|` steps. The final outcome is stable under plain CIS: a blocked join
/// (no edges into the target, negative utility) always has a feasible
/// new-singleton alternative.
pub fn run_cis(game: &Game) -> Result<Trace> {
    let joins_through_positive_edge = |dev: &Deviation, b: &FeasibilityBreakdown| match dev.target {
        Target::NewSingleton => true,
        Target::Coalition(_) => b.enter_fraction.is_some_and(|f| f.is_positive()),
    };
    let mut engine = Engine::new(game, Rule::cis(), None, PivotPolicy::FirstImprovement)?;
    engine.filter = Some(&joins_through_positive_edge);
    engine.run(
        Outcome::singletons(game.player_count()),
        default_step_limit(game),
    )
}

/// `true` when every coalition with at least two members has only positive internal edges.
pub fn non_singleton_coalitions_positive(game: &Game, outcome: &Outcome) -> bool {
    game.edges()
        .iter()
        .all(|&(u, v, w)| outcome.coalition_of(u) != outcome.coalition_of(v) || w.is_positive())
}

/// `true` when the thresholds put vote-in/vote-out dynamics in the regime where
/// the signed count of internal edges is a strict potential.
pub fn signed_count_regime(rule: &Rule) -> bool {
    let half = Rational::new(1, 2);
    match (rule.enter, rule.leave) {
        (EnterRule::VoteIn(a), LeaveRule::VoteOut(b)) => {
            a.value() >= half && b.value() >= half && a.value() + b.value() > Rational::one()
        }
        _ => false,
    }
}
