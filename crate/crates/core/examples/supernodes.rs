//! Forcing exactly k coalitions with supernodes.
//!
//! ```text
//! cargo run --example supernodes
//! ```

use hedonic::exact::{brute_force_stable, SizeGuard};
use hedonic::reductions::{add_supernodes, pull_back, PartyAffiliation, SourceSolution};
use hedonic::Game;

fn main() -> hedonic::Result<()> {
    let source = Game::from_int_edges(4, &[(0, 1, -3), (1, 2, 2), (2, 3, -1), (0, 3, 1)])?;
    let party = PartyAffiliation::with_parties(source.clone(), 3);
    println!(
        "party-stable 3-labelings of the source: {}",
        party.stable_labelings().len()
    );

    let (reduced, record) = add_supernodes(&source, 3)?;
    println!(
        "reduced: {} players, W = {}, M = {}",
        reduced.player_count(),
        record.parameter("W").unwrap(),
        record.parameter("M").unwrap()
    );
    let stable = brute_force_stable(&reduced, &record.target_rule, None, SizeGuard::default())?;
    for outcome in &stable {
        let SourceSolution::Labeling(labels) = pull_back(&record, outcome)? else {
            unreachable!()
        };
        println!(
            "{outcome} -> {labels:?} stable {}",
            party.is_stable(&labels)
        );
    }
    Ok(())
}
