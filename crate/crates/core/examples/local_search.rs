//! Improvement dynamics under different pivot rules.
//!
//! ```text
//! cargo run --example local_search
//! ```

use hedonic::dynamics::{run_local_search, PivotPolicy};
use hedonic::generate::{random_game, Family};
use hedonic::{total_happiness, Outcome, Rule};

fn main() -> hedonic::Result<()> {
    let game = random_game(Family::Random, 12, 0.4, 5, 2024);
    let start = Outcome::singletons(game.player_count());
    println!(
        "{} players, {} edges",
        game.player_count(),
        game.edge_count()
    );

    for rule in [Rule::nash(), Rule::is(), Rule::cis(), Rule::sum_cis()] {
        for policy in [
            PivotPolicy::FirstImprovement,
            PivotPolicy::BestImprovement,
            PivotPolicy::Random(7),
        ] {
            let trace = run_local_search(&game, &start, &rule, None, policy, None)?;
            println!(
                "{rule:>4} {policy:<18} steps {:>3}  happiness {:>4}  coalitions {}",
                trace.step_count,
                total_happiness(&game, &trace.final_outcome)?,
                trace.final_outcome.coalition_count(),
                policy = format!("{policy:?}"),
            );
        }
    }

    // at most two coalitions
    let halves = Outcome::from_labels(&(0..game.player_count()).map(|p| p % 2).collect::<Vec<_>>());
    let capped = run_local_search(
        &game,
        &halves,
        &Rule::nash(),
        Some(2),
        PivotPolicy::BestImprovement,
        None,
    )?;
    println!("nash with k = 2: {}", capped.final_outcome);
    Ok(())
}
