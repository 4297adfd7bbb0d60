//! Exhaustive enumeration of set partitions and stable outcomes.
//!
//! ```text
//! cargo run --example oracle_enumeration
//! HEDONIC_SIZE_GUARD=14 cargo run --example oracle_enumeration
//! ```

use hedonic::exact::{
    bell_number, brute_force_stable_many, enumerate_partitions, partition_count, SizeGuard,
};
use hedonic::{Game, Rule};

fn main() -> hedonic::Result<()> {
    for n in 1..=8 {
        println!(
            "n = {n}: Bell {} , at most 2 blocks {}",
            bell_number(n),
            partition_count(n, Some(2)).unwrap()
        );
    }
    for p in enumerate_partitions(4, Some(2), SizeGuard::default())? {
        print!("{p} ");
    }
    println!();

    let game = Game::from_int_edges(
        5,
        &[
            (0, 1, 3),
            (1, 2, -2),
            (2, 3, 4),
            (3, 4, -1),
            (0, 4, 2),
            (1, 3, 1),
        ],
    )?;
    let rules = [Rule::nash(), Rule::is(), Rule::cis(), Rule::sum_cis()];
    let guard = SizeGuard::from_env();
    for (rule, stable) in rules
        .iter()
        .zip(brute_force_stable_many(&game, &rules, None, guard)?)
    {
        let shown: Vec<String> = stable.iter().take(4).map(|o| o.to_string()).collect();
        println!("{rule}: {} stable, e.g. {}", stable.len(), shown.join(" "));
    }

    match enumerate_partitions(20, None, guard) {
        Ok(_) => println!("20 players enumerated"),
        Err(e) => println!("20 players: {e}"),
    }
    Ok(())
}
