use num_traits::{Signed, Zero};

use crate::exact::flow::{min_cut, FlowNetwork};
use crate::{Game, Outcome, PlayerId, Rational};

/// Diagnostics from [`solve_two_is_detailed`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoIsReport {
    pub outcome: Outcome,
    /// Side flips performed while separating negative edges.
    pub flips: usize,
    /// Minimum cut value over the positive edges of the uncontracted players.
    pub cut_value: Rational,
    /// Smallest capacity in the contracted network (never negative).
    pub min_capacity: Option<Rational>,
}

/// Individually stable outcome with at most two coalitions.
pub fn solve_two_is(game: &Game) -> Outcome {
    solve_two_is_detailed(game).outcome
}

/// Two-coalition individual stability in polynomial time.
///
/// 1. Starting from everybody on side 0, flip any player with a negative edge
///    none of whose negative edges crosses the bipartition. Each flip strictly
///    increases the number of crossing negative edges, so this ends after at
///    most `|E⁻|` flips with every negative-incident player vetoed from the
///    other side.
/// 2. Contract the negative-incident players of side 0 into `s` and those of
///    side 1 into `t`. Every remaining player only has positive edges.
/// 3. A minimum s-t cut over the remaining positive edges places them so that
///    no single player gains by switching sides.
///
/// Without negative edges the grand coalition is returned.
pub fn solve_two_is_detailed(game: &Game) -> TwoIsReport {
    let n = game.player_count();
    if !game.has_negative_edge() {
        return TwoIsReport {
            outcome: Outcome::grand(n),
            flips: 0,
            cut_value: Rational::zero(),
            min_capacity: None,
        };
    }

    let mut side = vec![false; n];
    let negative_incident: Vec<bool> = (0..n).map(|i| game.negative_degree(i) > 0).collect();
    let crosses = |side: &[bool], i: PlayerId| {
        game.neighbors(i)
            .iter()
            .any(|&(j, w)| w.is_negative() && side[i] != side[j])
    };
    let mut flips = 0;
    loop {
        let pending = (0..n).find(|&i| negative_incident[i] && !crosses(&side, i));
        match pending {
            Some(i) => {
                side[i] = !side[i];
                flips += 1;
            }
            None => break,
        }
    }

    // Network nodes: 0 = s, 1 = t, then one node per uncontracted player.
    let mut node_of = vec![usize::MAX; n];
    let mut free = Vec::new();
    for i in 0..n {
        if negative_incident[i] {
            node_of[i] = usize::from(side[i]);
        } else {
            node_of[i] = 2 + free.len();
            free.push(i);
        }
    }
    let mut network = FlowNetwork::new(2 + free.len(), 0, 1).expect("distinct terminals");
    let mut min_capacity: Option<Rational> = None;
    for &(u, v, w) in game.edges() {
        let (a, b) = (node_of[u], node_of[v]);
        if a < 2 && b < 2 {
            continue;
        }
        min_capacity = Some(min_capacity.map_or(w, |m| m.min(w)));
        network
            .add_arc(a, b, w)
            .expect("edges of uncontracted players are positive");
        network
            .add_arc(b, a, w)
            .expect("edges of uncontracted players are positive");
    }
    let cut = min_cut(&network);

    for (idx, &player) in free.iter().enumerate() {
        side[player] = !cut.source_side[2 + idx];
    }
    TwoIsReport {
        outcome: Outcome::from_labels(&side),
        flips,
        cut_value: cut.value,
        min_capacity,
    }
}
