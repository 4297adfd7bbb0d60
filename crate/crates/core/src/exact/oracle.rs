//! Stability straight from the definitions.
//!
//! This path deliberately shares nothing with [`crate::stability`] beyond the
//! data types: sums are taken over the raw edge list, vote shares are formed as
//! explicit quotients, and coalition caps are checked by materializing the
//! post-deviation partition.

use crate::exact::partitions::{enumerate_partitions, SizeGuard};
use crate::{EnterRule, Game, LeaveRule, Outcome, PlayerId, Rational, Result, Rule};

/// What a player sees when contemplating a move to one candidate coalition.
struct Move {
    /// Sum over edges `{i, j}` with `j` in the player's own coalition.
    current: Rational,
    own_edges: usize,
    own_negative: usize,
    /// Same quantities toward the candidate (empty for a fresh coalition).
    value: Rational,
    target_edges: usize,
    target_positive: usize,
    coalitions_after: usize,
}

fn edge_stats(game: &Game, player: PlayerId, members: &[PlayerId]) -> (Rational, usize, usize) {
    let mut sum = Rational::from_integer(0);
    let mut edges = 0;
    let mut positive = 0;
    for &(u, v, w) in game.edges() {
        let other = if u == player {
            v
        } else if v == player {
            u
        } else {
            continue;
        };
        if members.contains(&other) {
            sum += w;
            edges += 1;
            if w > Rational::from_integer(0) {
                positive += 1;
            }
        }
    }
    (sum, edges, positive)
}

fn moves(game: &Game, blocks: &[Vec<PlayerId>], player: PlayerId) -> Vec<Move> {
    let own_idx = blocks
        .iter()
        .position(|b| b.contains(&player))
        .expect("partition covers every player");
    let (current, own_edges, own_positive) = edge_stats(game, player, &blocks[own_idx]);

    let mut candidates: Vec<Vec<PlayerId>> = blocks
        .iter()
        .enumerate()
        .filter(|&(idx, _)| idx != own_idx)
        .map(|(_, b)| b.clone())
        .collect();
    // The empty coalition is a distinct option only if the player is not already alone.
    if blocks[own_idx].len() > 1 {
        candidates.push(Vec::new());
    }

    candidates
        .into_iter()
        .map(|target| {
            let (value, target_edges, target_positive) = edge_stats(game, player, &target);
            let after: Vec<Vec<PlayerId>> = blocks
                .iter()
                .map(|b| {
                    let mut b: Vec<PlayerId> = b.iter().copied().filter(|&j| j != player).collect();
                    if !target.is_empty() && *b == *target.as_slice() {
                        b.push(player);
                    }
                    b
                })
                .chain(target.is_empty().then(|| vec![player]))
                .filter(|b| !b.is_empty())
                .collect();
            Move {
                current,
                own_edges,
                own_negative: own_edges - own_positive,
                value,
                target_edges,
                target_positive,
                coalitions_after: after.len(),
            }
        })
        .collect()
}

fn feasible(m: &Move, rule: &Rule, k: Option<usize>) -> bool {
    if m.current >= m.value {
        return false;
    }
    if let Some(k) = k {
        if m.coalitions_after > k {
            return false;
        }
    }
    let zero = Rational::from_integer(0);
    let enter_ok = match rule.enter {
        EnterRule::None => true,
        EnterRule::SumIn => m.value >= zero,
        EnterRule::VoteIn(t) => {
            m.target_edges == 0
                || Rational::new(m.target_positive as i128, m.target_edges as i128) >= t.value()
        }
    };
    let leave_ok = match rule.leave {
        LeaveRule::None => true,
        LeaveRule::SumOut => m.current <= zero,
        LeaveRule::VoteOut(t) => {
            m.own_edges == 0
                || Rational::new(m.own_negative as i128, m.own_edges as i128) >= t.value()
        }
    };
    enter_ok && leave_ok
}

fn all_moves(game: &Game, outcome: &Outcome) -> Vec<Move> {
    let blocks = outcome.coalitions();
    (0..game.player_count())
        .flat_map(|i| moves(game, blocks, i))
        .collect()
}

/// Stability of one outcome, re-derived from the definitions.
pub fn is_stable_by_definition(
    game: &Game,
    outcome: &Outcome,
    rule: &Rule,
    k: Option<usize>,
) -> bool {
    all_moves(game, outcome)
        .iter()
        .all(|m| !feasible(m, rule, k))
}

/// Every outcome (with at most `k` coalitions, if capped) that is stable under `rule`.
pub fn brute_force_stable(
    game: &Game,
    rule: &Rule,
    k: Option<usize>,
    guard: SizeGuard,
) -> Result<Vec<Outcome>> {
    Ok(
        brute_force_stable_many(game, std::slice::from_ref(rule), k, guard)?
            .pop()
            .expect("one rule in, one list out"),
    )
}

/// [`brute_force_stable`] for several rules at once, sharing the enumeration.
pub fn brute_force_stable_many(
    game: &Game,
    rules: &[Rule],
    k: Option<usize>,
    guard: SizeGuard,
) -> Result<Vec<Vec<Outcome>>> {
    crate::stability::check_k(k)?;
    let mut out = vec![Vec::new(); rules.len()];
    for outcome in enumerate_partitions(game.player_count(), k, guard)? {
        let ms = all_moves(game, &outcome);
        for (idx, rule) in rules.iter().enumerate() {
            if ms.iter().all(|m| !feasible(m, rule, k)) {
                out[idx].push(outcome.clone());
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn extreme_sign_games() {
        let pos = Game::from_int_edges(4, &[(0, 1, 1), (1, 2, 2), (2, 3, 3), (0, 3, 1)]).unwrap();
        let stable = brute_force_stable(&pos, &Rule::nash(), None, SizeGuard::default()).unwrap();
        assert!(stable.contains(&Outcome::grand(4)));

        let neg = Game::from_int_edges(3, &[(0, 1, -1), (1, 2, -2)]).unwrap();
        let stable = brute_force_stable(&neg, &Rule::nash(), None, SizeGuard::default()).unwrap();
        assert!(stable.contains(&Outcome::singletons(3)));
    }

    #[test]
    fn triangle_nash_stable_set() {
        let g = Game::from_int_edges(3, &[(0, 1, 4), (0, 2, -1), (1, 2, 2)]).unwrap();
        let stable = brute_force_stable(&g, &Rule::nash(), None, SizeGuard::default()).unwrap();
        assert_eq!(stable, vec![Outcome::grand(3)]);
        let split = Outcome::from_blocks(3, &[vec![0, 1], vec![2]]).unwrap();
        assert!(!is_stable_by_definition(&g, &split, &Rule::nash(), None));
        assert!(is_stable_by_definition(&g, &split, &Rule::is(), None));
    }

    #[test]
    fn cap_is_respected() {
        let g = Game::from_int_edges(3, &[(0, 1, -1), (0, 2, -1), (1, 2, -1)]).unwrap();
        let capped = brute_force_stable(&g, &Rule::nash(), Some(2), SizeGuard::default()).unwrap();
        assert!(!capped.is_empty());
        assert!(capped.iter().all(|o| o.coalition_count() <= 2));
    }
}
