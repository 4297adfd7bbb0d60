//! Which deviation rules leave an outcome stable.
//!
//! ```text
//! cargo run --example stability_grid
//! ```

use hedonic::stability::{check_stable, feasible_deviations};
use hedonic::{int, ratio, utility, Game, Outcome, Rule, Threshold};

fn main() -> hedonic::Result<()> {
    // w(0,1) = 4, w(0,2) = -1, w(1,2) = 2
    let game = Game::from_int_edges(3, &[(0, 1, 4), (0, 2, -1), (1, 2, 2)])?;
    let outcome = Outcome::from_blocks(3, &[vec![0, 1], vec![2]])?;

    println!("outcome {outcome}");
    for p in 0..3 {
        println!("  u({p}) = {}", utility(&game, &outcome, p)?);
    }

    let thresholds: Vec<Threshold> = [int(0), ratio(1, 3), ratio(1, 2), ratio(2, 3), int(1)]
        .into_iter()
        .map(Threshold::new)
        .collect::<Result<_, _>>()?;
    let grid = Rule::grid(&thresholds);
    let stable: Vec<String> = grid
        .iter()
        .filter(|r| {
            check_stable(&game, &outcome, r, None)
                .map(|v| v.stable)
                .unwrap_or(false)
        })
        .map(|r| r.to_string())
        .collect();
    println!(
        "stable under {} of {} rules: {}",
        stable.len(),
        grid.len(),
        stable.join(" ")
    );

    for rule in [Rule::nash(), Rule::is()] {
        println!("{rule}:");
        for (dev, b) in feasible_deviations(&game, &outcome, &rule, None)? {
            println!(
                "  {dev}: gain {}, positive share in target {:?}",
                b.gain,
                b.enter_fraction.map(|f| f.to_string())
            );
        }
    }
    let verdict = check_stable(&game, &outcome, &"votein:1/2".parse()?, None)?;
    println!("votein:1/2 stable = {}", verdict.stable);
    Ok(())
}
