//! The two regimes where dynamics from singletons finish in linear time.
//!
//! ```text
//! cargo run --example polynomial_dynamics
//! ```

use hedonic::dynamics::{non_singleton_coalitions_positive, run_cis, run_singleton_seeded};
use hedonic::generate::{random_game, Family};
use hedonic::stability::check_stable;
use hedonic::{ratio, EnterRule, LeaveRule, Rule, Threshold};

fn main() -> hedonic::Result<()> {
    let veto_in = EnterRule::VoteIn(Threshold::one());
    let rules = [
        Rule::veto_in_sum_out(),
        Rule::cis(),
        Rule::new(veto_in, LeaveRule::VoteOut(Threshold::new(ratio(1, 2))?)),
    ];
    for seed in 0..5 {
        let game = random_game(Family::Random, 40, 0.1, 5, seed);
        let n = game.player_count();

        let cis = run_cis(&game)?;
        let stable = check_stable(&game, &cis.final_outcome, &Rule::cis(), None)?.stable;
        println!(
            "seed {seed}: cis {} steps (bound {}), stable {stable}",
            cis.step_count,
            2 * n
        );

        for rule in &rules {
            let trace = run_singleton_seeded(&game, rule)?;
            println!(
                "         {rule}: {} steps (bound {n}), positive coalitions {}",
                trace.step_count,
                non_singleton_coalitions_positive(&game, &trace.final_outcome)
            );
        }
    }
    Ok(())
}
