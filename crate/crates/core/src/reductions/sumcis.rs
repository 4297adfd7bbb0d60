use std::collections::BTreeMap;

use num_traits::Signed;

use super::{describe, source_label, AddedPlayer, ReductionKind, ReductionRecord};
use crate::{Error, Game, Rational, Result, Rule};

/// Embeds a local max-cut instance into a sum-in/sum-out stability instance.
///
/// The cut weights are negated (turning the instance into party affiliation),
/// every player `i` gets an edge of weight `-σ_i/2 + 1/4` to each of two
/// supernodes, where `σ_i` is its (negated) weighted degree, and the
/// supernodes repel each other with `-M`, `M = 1 + Σ_i (-σ_i/2 + 1/4)`.
/// All weights are then multiplied by 4 to make them integral.
///
/// In every sumCIS-stable outcome each player shares a coalition with exactly
/// one supernode, and the induced cut is locally maximal: the quarter offset
/// makes a player's payoff negative exactly when switching sides would
/// improve the cut.
pub fn reduce_maxcut_to_sumcis(maxcut: &Game) -> Result<(Game, ReductionRecord)> {
    for &(u, v, w) in maxcut.edges() {
        if !w.is_positive() {
            return Err(Error::NonPositiveSourceWeight(u, v));
        }
        if !w.is_integer() {
            return Err(Error::NonIntegerSourceWeight(u, v));
        }
    }
    let n = maxcut.player_count();
    let quarter = Rational::new(1, 4);
    let two = Rational::from_integer(2);
    let scale = Rational::from_integer(4);

    // σ_i of the negated game.
    let sigma: Vec<Rational> = (0..n)
        .map(|i| {
            -maxcut
                .neighbors(i)
                .iter()
                .map(|&(_, w)| w)
                .sum::<Rational>()
        })
        .collect();
    let anchor: Vec<Rational> = sigma.iter().map(|&s| -s / two + quarter).collect();
    let big_m = Rational::from_integer(1) + anchor.iter().copied().sum::<Rational>();

    let (s1, s2) = (n, n + 1);
    let mut edges: Vec<_> = maxcut
        .edges()
        .iter()
        .map(|&(u, v, w)| (u, v, -w * scale))
        .collect();
    for (i, &a) in anchor.iter().enumerate() {
        edges.push((i, s1, a * scale));
        edges.push((i, s2, a * scale));
    }
    edges.push((s1, s2, -big_m * scale));

    let added = vec![
        AddedPlayer {
            id: s1,
            label: "super0".into(),
        },
        AddedPlayer {
            id: s2,
            label: "super1".into(),
        },
    ];
    let mut labels: Vec<String> = (0..n).map(|i| source_label(maxcut, i)).collect();
    labels.extend(added.iter().map(|a| a.label.clone()));
    let game = Game::new(n + 2, edges)?.with_labels(labels)?;

    let mut parameters = BTreeMap::new();
    parameters.insert("M".to_string(), big_m);
    parameters.insert("scale".to_string(), scale);
    for (i, s) in sigma.iter().enumerate() {
        parameters.insert(format!("sigma[{i}]"), *s);
    }

    let record = ReductionRecord {
        kind: ReductionKind::SumCis,
        source: format!("local max cut: {}", describe(maxcut)),
        source_players: n,
        reduced_players: n + 2,
        added_players: added,
        parameters,
        target_rule: Rule::sum_cis(),
        target_k: None,
        supernodes: vec![s1, s2],
    };
    Ok((game, record))
}
