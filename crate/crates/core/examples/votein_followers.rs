//! Followers that make vote-in stability behave like Nash stability.
//!
//! ```text
//! cargo run --example votein_followers
//! ```

use hedonic::exact::{brute_force_stable, SizeGuard};
use hedonic::reductions::{
    add_votein_followers, one_enemy_check, pull_back, PartyAffiliation, SourceSolution,
};
use hedonic::{ratio, Game};

fn main() -> hedonic::Result<()> {
    let source = Game::from_int_edges(4, &[(0, 1, 2), (1, 2, -3), (2, 3, 1)])?;
    assert!(one_enemy_check(&source));
    let (reduced, record) = add_votein_followers(&source, ratio(1, 2))?;
    for a in &record.added_players {
        println!("added {} = {}", a.id, a.label);
    }
    for (name, value) in &record.parameters {
        println!("{name} = {value}");
    }

    let party = PartyAffiliation::new(source.clone());
    let stable = brute_force_stable(&reduced, &record.target_rule, None, SizeGuard::default())?;
    println!(
        "{} stable outcomes under {}",
        stable.len(),
        record.target_rule
    );
    for outcome in stable.iter().take(6) {
        let SourceSolution::Labeling(labels) = pull_back(&record, outcome)? else {
            unreachable!()
        };
        println!(
            "{outcome} -> {labels:?} stable {}",
            party.is_stable(&labels)
        );
    }

    match add_votein_followers(&source, ratio(2, 3)) {
        Ok(_) => println!("unexpected"),
        Err(e) => println!("T_in = 2/3: {e}"),
    }
    Ok(())
}
