use std::collections::BTreeMap;

use num_traits::{Signed, Zero};

use super::{
    describe, integer_scale, require_one_enemy, smallest_int_above, source_label, AddedPlayer,
    ReductionKind, ReductionRecord,
};
use crate::{Error, Game, PlayerId, Rational, Result, Rule, Threshold};

/// Augments a one-enemy party-affiliation instance so that vote-in stability
/// behaves like Nash stability.
///
/// Both endpoints of every negative edge `(a, b)` get `Δ-1` followers. A
/// follower of `a` is tied to `a` by `+δ` and to `b` by `+ε`, so in a stable
/// outcome it sits with `a` and supplies the positive votes that let other
/// players enter `a`'s coalition. Two supernodes joined by `-M` then pin the
/// original players to two sides.
///
/// With `m = max(|E⁻|, 1)`: `ε = 1/(4·m·Δ)`, `δ = 2ε`. The followers add at
/// most `(Δ-1)(δ+ε) < 1` to any original player's utility, so after scaling
/// the source to integers they never override an original preference. The
/// whole instance is then multiplied by `4·m·Δ`, making `ε = 1` and `δ = 2`.
pub fn add_votein_followers(source: &Game, t_in: Rational) -> Result<(Game, ReductionRecord)> {
    require_one_enemy(source)?;
    let threshold = Threshold::new(t_in)?;
    let n = source.player_count();
    let delta_g = source.max_degree();
    let limit = if delta_g <= 1 {
        Rational::zero()
    } else {
        Rational::new(delta_g as i128 - 1, delta_g as i128)
    };
    if t_in > limit {
        return Err(Error::ThresholdOutOfRange(format!(
            "{t_in} (above (Δ-1)/Δ = {limit})"
        )));
    }

    let negative: Vec<(PlayerId, PlayerId)> = source
        .edges()
        .iter()
        .filter(|(_, _, w)| w.is_negative())
        .map(|&(u, v, _)| (u, v))
        .collect();
    let m = negative.len().max(1) as i128;
    let d = delta_g.max(1) as i128;
    let eps = Rational::new(1, 4 * m * d);
    let delta = eps * Rational::from_integer(2);
    let slack = Rational::from_integer(3 * (d - 1)) * eps;
    if slack >= Rational::from_integer(1) {
        return Err(Error::RulePreconditionViolated(format!(
            "follower weight {slack} does not stay below 1"
        )));
    }

    let base_scale = integer_scale(source);
    let follower_scale = Rational::from_integer(4 * m * d);
    let scale = base_scale * follower_scale;
    let mut edges: Vec<_> = source.scaled(scale).edges().to_vec();
    let mut labels: Vec<String> = (0..n).map(|i| source_label(source, i)).collect();
    let mut added = Vec::new();
    let per_endpoint = delta_g.saturating_sub(1);
    for &(a, b) in &negative {
        for (leader, other) in [(a, b), (b, a)] {
            for j in 0..per_endpoint {
                let id = n + added.len();
                edges.push((leader, id, delta * follower_scale));
                edges.push((other, id, eps * follower_scale));
                let label = format!("{}.follower{j}", labels[leader]);
                added.push(AddedPlayer { id, label });
            }
        }
    }
    let followers = added.len();

    let augmented_abs: Rational = edges.iter().map(|(_, _, w)| w.abs()).sum();
    let big_w = smallest_int_above(augmented_abs);
    let big_m = smallest_int_above(Rational::from_integer(n as i128) * big_w);
    let s0 = n + followers;
    let supernodes = vec![s0, s0 + 1];
    for &s in &supernodes {
        for i in 0..n {
            edges.push((i, s, big_w));
        }
    }
    edges.push((s0, s0 + 1, -big_m));
    for (party, &id) in supernodes.iter().enumerate() {
        added.push(AddedPlayer {
            id,
            label: format!("super{party}"),
        });
    }
    labels.extend(added.iter().map(|a| a.label.clone()));
    let total = n + added.len();
    let game = Game::new(total, edges)?.with_labels(labels)?;

    let mut parameters = BTreeMap::new();
    parameters.insert("epsilon".to_string(), eps);
    parameters.insert("delta".to_string(), delta);
    parameters.insert("W".to_string(), big_w);
    parameters.insert("M".to_string(), big_m);
    parameters.insert("T_in".to_string(), t_in);
    parameters.insert("Delta".to_string(), Rational::from_integer(delta_g as i128));
    parameters.insert(
        "followers".to_string(),
        Rational::from_integer(followers as i128),
    );
    parameters.insert("scale".to_string(), scale);

    let record = ReductionRecord {
        kind: ReductionKind::VoteInFollowers,
        source: describe(source),
        source_players: n,
        reduced_players: total,
        added_players: added,
        parameters,
        target_rule: Rule::vote_in(threshold),
        target_k: None,
        supernodes,
    };
    Ok((game, record))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{int, ratio};

    #[test]
    fn single_negative_edge_has_no_followers() {
        let g = Game::from_int_edges(2, &[(0, 1, -1)]).unwrap();
        let (reduced, rec) = add_votein_followers(&g, int(0)).unwrap();
        assert_eq!(rec.parameter("followers"), Some(int(0)));
        assert_eq!(reduced.player_count(), 4);
        assert_eq!(rec.supernodes, vec![2, 3]);
    }

    #[test]
    fn path_gets_one_follower_per_endpoint() {
        let g = Game::from_int_edges(3, &[(0, 1, 1), (1, 2, -1)]).unwrap();
        let (reduced, rec) = add_votein_followers(&g, ratio(1, 2)).unwrap();
        assert_eq!(rec.parameter("followers"), Some(int(2)));
        assert_eq!(rec.parameter("epsilon"), Some(ratio(1, 8)));
        // follower 3 leads with 1, follower 4 with 2
        assert_eq!(reduced.weight(1, 3), Some(int(2)));
        assert_eq!(reduced.weight(2, 3), Some(int(1)));
        assert_eq!(reduced.weight(2, 4), Some(int(2)));
        assert_eq!(reduced.weight(1, 4), Some(int(1)));
        assert_eq!(reduced.weight(1, 2), Some(int(-8)));
        assert_eq!(reduced.weight(3, 5), None);
        assert_eq!(reduced.player_count(), 7);
    }

    #[test]
    fn validates_inputs() {
        let g = Game::from_int_edges(3, &[(0, 1, 1), (1, 2, -1)]).unwrap();
        assert!(matches!(
            add_votein_followers(&g, ratio(2, 3)),
            Err(Error::ThresholdOutOfRange(_))
        ));
        let tri = Game::from_int_edges(3, &[(0, 1, -1), (1, 2, -1), (0, 2, -1)]).unwrap();
        assert!(matches!(
            add_votein_followers(&tri, int(0)),
            Err(Error::OneEnemyViolation { .. })
        ));
    }
}
