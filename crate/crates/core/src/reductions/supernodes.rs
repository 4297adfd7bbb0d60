use std::collections::BTreeMap;

use num_traits::Zero;

use super::{
    describe, integer_scale, smallest_int_above, source_label, AddedPlayer, ReductionKind,
    ReductionRecord,
};
use crate::{Error, Game, PlayerId, Rational, Result, Rule};

/// Adds `k` supernodes that force exactly `k` coalitions in every Nash-stable outcome.
///
/// Every source player gets an edge of weight `W > Σ|w_e|` to each supernode
/// and the supernodes are pairwise joined by `-M` with `M > |V|·W`. In a
/// Nash-stable outcome no two supernodes share a coalition and every source
/// player sits with exactly one of them, so the outcome is a `k`-labeling of
/// the source that is stable iff the labeling is party-affiliation stable.
pub fn add_supernodes(source: &Game, k: usize) -> Result<(Game, ReductionRecord)> {
    add_supernodes_with_bias(source, k, &[])
}

/// [`add_supernodes`] with extra weight on selected player–supernode edges.
///
/// Each `(player, party, weight)` adds `weight > 0` to the edge between
/// `player` and supernode `party`, biasing (or pinning) that player toward the
/// party. `M` is sized against the largest biased edge.
pub fn add_supernodes_with_bias(
    source: &Game,
    k: usize,
    bias: &[(PlayerId, usize, Rational)],
) -> Result<(Game, ReductionRecord)> {
    if k < 2 {
        return Err(Error::InvalidK { k, min: 2 });
    }
    let n = source.player_count();
    let scale = integer_scale(source);
    let mut extra = vec![vec![Rational::zero(); k]; n];
    for &(p, party, w) in bias {
        source.check_player(p)?;
        if party >= k {
            return Err(Error::RulePreconditionViolated(format!(
                "bias toward party {party} but only {k} supernodes"
            )));
        }
        extra[p][party] += w * scale;
    }
    if extra
        .iter()
        .flatten()
        .any(|w| !w.is_integer() || *w < Rational::zero())
    {
        return Err(Error::RulePreconditionViolated(
            "supernode bias must be nonnegative and integral after scaling".into(),
        ));
    }

    let base = source.scaled(scale);
    let big_w = smallest_int_above(base.total_abs_weight());
    let max_bias = extra.iter().flatten().copied().max().unwrap_or_default();
    let big_m = smallest_int_above(Rational::from_integer(n as i128) * (big_w + max_bias));

    let mut edges: Vec<_> = base.edges().to_vec();
    let supernodes: Vec<PlayerId> = (n..n + k).collect();
    for (a_idx, &a) in supernodes.iter().enumerate() {
        for &b in &supernodes[a_idx + 1..] {
            edges.push((a, b, -big_m));
        }
    }
    for (i, extra_i) in extra.iter().enumerate() {
        for (party, &s) in supernodes.iter().enumerate() {
            edges.push((i, s, big_w + extra_i[party]));
        }
    }

    let mut labels: Vec<String> = (0..n).map(|i| source_label(source, i)).collect();
    let added: Vec<AddedPlayer> = supernodes
        .iter()
        .enumerate()
        .map(|(party, &id)| AddedPlayer {
            id,
            label: format!("super{party}"),
        })
        .collect();
    labels.extend(added.iter().map(|a| a.label.clone()));
    let game = Game::new(n + k, edges)?.with_labels(labels)?;

    let mut parameters = BTreeMap::new();
    parameters.insert("W".to_string(), big_w);
    parameters.insert("M".to_string(), big_m);
    parameters.insert("k".to_string(), Rational::from_integer(k as i128));
    parameters.insert("scale".to_string(), scale);
    if !bias.is_empty() {
        parameters.insert("max_bias".to_string(), max_bias);
    }

    let record = ReductionRecord {
        kind: ReductionKind::Supernodes,
        source: describe(source),
        source_players: n,
        reduced_players: n + k,
        added_players: added,
        parameters,
        target_rule: Rule::nash(),
        target_k: None,
        supernodes,
    };
    Ok((game, record))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::int;

    #[test]
    fn constants_for_single_negative_edge() {
        let g = Game::from_int_edges(2, &[(0, 1, -3)]).unwrap();
        let (reduced, rec) = add_supernodes(&g, 2).unwrap();
        assert_eq!(rec.parameter("W"), Some(int(4)));
        assert_eq!(rec.parameter("M"), Some(int(9)));
        assert_eq!(reduced.player_count(), 4);
        assert_eq!(reduced.weight(2, 3), Some(int(-9)));
        assert_eq!(reduced.weight(0, 2), Some(int(4)));
        assert_eq!(reduced.weight(1, 3), Some(int(4)));
        assert_eq!(reduced.label(3), Some("super1"));
    }

    #[test]
    fn rejects_small_k() {
        let g = Game::from_int_edges(2, &[(0, 1, -3)]).unwrap();
        assert!(matches!(add_supernodes(&g, 1), Err(Error::InvalidK { .. })));
    }

    #[test]
    fn rational_sources_are_scaled() {
        let g = Game::new(2, [(0, 1, Rational::new(-3, 2))]).unwrap();
        let (reduced, rec) = add_supernodes(&g, 3).unwrap();
        assert_eq!(rec.parameter("scale"), Some(int(2)));
        assert!(reduced.edges().iter().all(|(_, _, w)| w.is_integer()));
        assert_eq!(reduced.player_count(), 5);
    }
}
