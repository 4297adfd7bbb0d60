//! Vote-in/vote-out dynamics and the signed count of internal edges.
//!
//! ```text
//! cargo run --example vote_in_out
//! ```

use hedonic::dynamics::{run_local_search, signed_count_regime, PivotPolicy};
use hedonic::generate::{random_game, Family};
use hedonic::{ratio, Outcome, Rule, Threshold};

fn main() -> hedonic::Result<()> {
    let game = random_game(Family::Random, 10, 0.5, 5, 99);
    let start = Outcome::grand(game.player_count());
    let values = [ratio(1, 2), ratio(2, 3), ratio(3, 4)];
    for t_in in values {
        for t_out in values {
            let rule = Rule::vote_in_out(Threshold::new(t_in)?, Threshold::new(t_out)?);
            let trace = run_local_search(
                &game,
                &start,
                &rule,
                None,
                PivotPolicy::FirstImprovement,
                None,
            )?;
            let counts: Vec<i64> = trace
                .steps
                .iter()
                .map(|s| s.signed_internal_count)
                .collect();
            let flat = counts.windows(2).filter(|w| w[1] <= w[0]).count();
            println!(
                "{rule:<12} regime {:<5} steps {:>2} (2|E| = {}) flat steps {flat} counts {counts:?}",
                signed_count_regime(&rule),
                trace.step_count,
                2 * game.edge_count()
            );
        }
    }
    Ok(())
}
