//! Vote-out stability with a cap on the number of coalitions.
//!
//! ```text
//! cargo run --example kvoteout
//! ```

use hedonic::exact::{brute_force_stable, is_stable_by_definition, SizeGuard};
use hedonic::reductions::{pull_back, reduce_to_kvoteout, voteout_copies, SourceSolution};
use hedonic::{ratio, Game, Rule};

fn main() -> hedonic::Result<()> {
    for t in [ratio(1, 2), ratio(2, 3), ratio(3, 4), ratio(9, 10)] {
        println!("T_out = {t}: s = {}", voteout_copies(t)?);
    }

    let source = Game::from_int_edges(3, &[(0, 1, 2), (1, 2, -1)])?;
    let (reduced, record) = reduce_to_kvoteout(&source, 2, ratio(2, 3))?;
    println!(
        "{} players after adding {} clique nodes",
        reduced.player_count(),
        record.added_players.len()
    );

    let stable = brute_force_stable(
        &reduced,
        &record.target_rule,
        record.target_k,
        SizeGuard::default(),
    )?;
    println!("{} stable outcomes with at most 2 coalitions", stable.len());
    for outcome in &stable {
        let SourceSolution::Outcome(o) = pull_back(&record, outcome)? else {
            unreachable!()
        };
        let nash = is_stable_by_definition(&source, &o, &Rule::nash(), None);
        println!("{outcome} -> {o} Nash-stable {nash}");
    }
    Ok(())
}
