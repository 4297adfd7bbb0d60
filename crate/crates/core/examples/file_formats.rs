//! Reading and writing instances, outcomes and traces.
//!
//! ```text
//! cargo run --example file_formats
//! ```

use hedonic::dynamics::{run_local_search, PivotPolicy};
use hedonic::io::{parse_instance, parse_outcome, serialize_instance, serialize_outcome, to_json};
use hedonic::reductions::add_supernodes;
use hedonic::stability::check_stable;
use hedonic::Rule;

const INSTANCE: &str = r#"{
  "format_version": 1,
  "players": ["ann", "bo", "cy"],
  "edges": [[1, 0, 4], [0, 2, "-1/2"], [1, 2, 2]]
}"#;

fn main() -> hedonic::Result<()> {
    let (game, _) = parse_instance(INSTANCE.as_bytes())?;
    print!("{}", serialize_instance(&game, None));

    let outcome = parse_outcome(b"[[2], [1, 0]]", game.player_count())?;
    print!("{}", serialize_outcome(&outcome));
    print!(
        "{}",
        to_json(&check_stable(&game, &outcome, &Rule::nash(), None)?)
    );

    let trace = run_local_search(
        &game,
        &outcome,
        &Rule::nash(),
        None,
        PivotPolicy::FirstImprovement,
        None,
    )?;
    print!("{}", to_json(&trace));

    let (reduced, record) = add_supernodes(&game, 2)?;
    let text = serialize_instance(&reduced, Some(&record));
    let (again, record_again) = parse_instance(text.as_bytes())?;
    println!(
        "round trip ok: {}",
        again == reduced && record_again.as_ref() == Some(&record)
    );

    if let Err(e) =
        parse_instance(b"{\"format_version\": 1,\n \"players\": 2,\n \"edges\": [[0, 1, 0]]}")
    {
        println!("{e}");
    }
    if let Err(e) = parse_instance(b"{\"format_version\": 1,\n \"players\": 2\n \"edges\": []}") {
        println!("{e}");
    }
    Ok(())
}
