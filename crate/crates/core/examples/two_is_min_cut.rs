//! Individual stability with at most two coalitions, via a minimum cut.
//!
//! ```text
//! cargo run --example two_is_min_cut
//! ```

use hedonic::exact::{brute_force_stable, min_cut, solve_two_is_detailed, FlowNetwork, SizeGuard};
use hedonic::generate::{random_game, Family};
use hedonic::{int, Rule};

fn main() -> hedonic::Result<()> {
    let mut net = FlowNetwork::new(4, 0, 3)?;
    net.add_arc(0, 1, int(3))?;
    net.add_arc(0, 2, int(2))?;
    net.add_arc(1, 2, int(1))?;
    net.add_arc(1, 3, int(2))?;
    net.add_arc(2, 3, int(3))?;
    let cut = min_cut(&net);
    println!(
        "toy network: cut {} source side {:?} certified {}",
        cut.value,
        cut.source_side,
        cut.certify(&net)
    );

    for seed in 0..4 {
        let game = random_game(Family::Random, 7, 0.5, 5, seed);
        let report = solve_two_is_detailed(&game);
        let stable = brute_force_stable(&game, &Rule::is(), Some(2), SizeGuard::default())?;
        println!(
            "seed {seed}: {} flips {} (|E-| = {}) cut {} in oracle set of {}: {}",
            report.outcome,
            report.flips,
            game.negative_edge_count(),
            report.cut_value,
            stable.len(),
            stable.contains(&report.outcome)
        );
    }

    let big = random_game(Family::Random, 300, 0.05, 9, 1);
    let report = solve_two_is_detailed(&big);
    println!(
        "300 players: {} coalitions, {} flips",
        report.outcome.coalition_count(),
        report.flips
    );
    Ok(())
}
