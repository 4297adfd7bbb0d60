use std::collections::BTreeMap;

use num_traits::Zero;

use super::{
    describe, integer_scale, require_one_enemy, source_label, AddedPlayer, ReductionKind,
    ReductionRecord,
};
use crate::stability::check_k;
use crate::{Error, Game, Rational, Result, Rule, Threshold};

/// Number of clique copies per unit of degree: the smallest integer
/// `s ≥ max(1, T/(1-T))`.
pub fn voteout_copies(t_out: Rational) -> Result<usize> {
    if t_out < Rational::zero() || t_out >= Rational::from_integer(1) {
        return Err(Error::ThresholdOutOfRange(format!(
            "T_out = {t_out} must lie in [0, 1)"
        )));
    }
    let bound = t_out / (Rational::from_integer(1) - t_out);
    Ok((bound.ceil().to_integer() as usize).max(1))
}

/// Embeds a one-enemy Nash-stability instance into vote-out stability with at
/// most `k` coalitions.
///
/// Adds `s·Δ` cliques of `k` new players each, internal weight `-M`, and an
/// edge of weight `-ε` from every original player to every new player, with
/// `ε = 1` and `M = |V|·Δ·ε + 1`. In a stable outcome every coalition holds
/// one player of each clique, which gives every original player a `T_out`
/// majority for leaving and shifts its value for every coalition equally.
pub fn reduce_to_kvoteout(
    source: &Game,
    k: usize,
    t_out: Rational,
) -> Result<(Game, ReductionRecord)> {
    check_k(Some(k))?;
    let s = voteout_copies(t_out)?;
    let threshold = Threshold::new(t_out)?;
    require_one_enemy(source)?;

    let n = source.player_count();
    let delta_g = source.max_degree();
    let scale = integer_scale(source);
    let eps = Rational::from_integer(1);
    let big_m = Rational::from_integer((n * delta_g) as i128) * eps + Rational::from_integer(1);

    let mut edges: Vec<_> = source.scaled(scale).edges().to_vec();
    let mut labels: Vec<String> = (0..n).map(|i| source_label(source, i)).collect();
    let mut added = Vec::new();
    for clique in 0..s * delta_g {
        let first = n + added.len();
        for j in 0..k {
            let id = first + j;
            for prev in first..id {
                edges.push((prev, id, -big_m));
            }
            for i in 0..n {
                edges.push((i, id, -eps));
            }
            added.push(AddedPlayer {
                id,
                label: format!("clique{clique}.{j}"),
            });
        }
    }
    labels.extend(added.iter().map(|a| a.label.clone()));
    let total = n + added.len();
    let game = Game::new(total, edges)?.with_labels(labels)?;

    let mut parameters = BTreeMap::new();
    parameters.insert("s".to_string(), Rational::from_integer(s as i128));
    parameters.insert("k".to_string(), Rational::from_integer(k as i128));
    parameters.insert("epsilon".to_string(), eps);
    parameters.insert("M".to_string(), big_m);
    parameters.insert("T_out".to_string(), t_out);
    parameters.insert("Delta".to_string(), Rational::from_integer(delta_g as i128));
    parameters.insert("scale".to_string(), scale);

    let record = ReductionRecord {
        kind: ReductionKind::KVoteOut,
        source: describe(source),
        source_players: n,
        reduced_players: total,
        added_players: added,
        parameters,
        target_rule: Rule::vote_out(threshold),
        target_k: Some(k),
        supernodes: Vec::new(),
    };
    Ok((game, record))
}
