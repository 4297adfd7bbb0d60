//! A NOR gate built from party-affiliation edges.
//!
//! ```text
//! cargo run --example nor_gadget
//! ```

use hedonic::exact::{brute_force_stable, SizeGuard};
use hedonic::reductions::{build_nor_gadget, pin_nor_gadget, pull_back, SourceSolution};
use hedonic::Rule;

fn main() -> hedonic::Result<()> {
    for level in 1..=2 {
        let gadget = build_nor_gadget(level)?;
        let edges: Vec<String> = gadget
            .game
            .edges()
            .iter()
            .map(|(u, v, w)| format!("{u}-{v}:{w}"))
            .collect();
        println!(
            "level {level}: pin weight {}, c bias {}, edges {}",
            gadget.pin,
            gadget.c_bias,
            edges.join(" ")
        );
        println!(" a b | d");
        for (a, b) in [(false, false), (false, true), (true, false), (true, true)] {
            let (pinned, record) = pin_nor_gadget(&gadget, a, b)?;
            let stable = brute_force_stable(&pinned, &Rule::nash(), None, SizeGuard::default())?;
            let outputs: Vec<usize> = stable
                .iter()
                .map(|o| match pull_back(&record, o) {
                    Ok(SourceSolution::Labeling(sides)) => sides[gadget.d],
                    _ => unreachable!(),
                })
                .collect();
            println!(" {} {} | {outputs:?}", u8::from(a), u8::from(b));
        }
    }
    Ok(())
}
