//! Local max cut embedded into sum-in/sum-out stability.
//!
//! ```text
//! cargo run --example maxcut_sumcis
//! ```

use hedonic::exact::{brute_force_stable, SizeGuard};
use hedonic::io::format_rational;
use hedonic::reductions::{is_local_max_cut, pull_back, reduce_maxcut_to_sumcis, SourceSolution};
use hedonic::Game;

fn main() -> hedonic::Result<()> {
    let cut = Game::from_int_edges(4, &[(0, 1, 3), (1, 2, 1), (2, 3, 2), (0, 3, 1), (0, 2, 2)])?;
    let (reduced, record) = reduce_maxcut_to_sumcis(&cut)?;
    for (name, value) in &record.parameters {
        println!("{name} = {}", format_rational(value));
    }
    let stable = brute_force_stable(&reduced, &record.target_rule, None, SizeGuard::default())?;
    println!("{} sumCIS-stable outcomes", stable.len());
    for outcome in &stable {
        let SourceSolution::Labeling(sides) = pull_back(&record, outcome)? else {
            unreachable!()
        };
        let sides: Vec<bool> = sides.iter().map(|&s| s == 1).collect();
        println!(
            "{outcome} -> {sides:?} locally maximal {}",
            is_local_max_cut(&cut, &sides)
        );
    }
    Ok(())
}
