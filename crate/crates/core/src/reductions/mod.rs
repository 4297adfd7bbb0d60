//! Gadget constructions that embed one local-search problem into another,
//! together with the maps that carry stable outcomes back to the source.
//!
//! Each constructor returns the reduced [`Game`] and a [`ReductionRecord`].
//! Source players keep their ids `0..n` in the reduced game; added players
//! follow. Every "sufficiently large" constant is instantiated as the smallest
//! integer that strictly satisfies its inequality and is stored in the record,
//! and all reduced games have integer weights (any scaling applied is recorded
//! under `"scale"`).

use std::collections::BTreeMap;

use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::io::rational_serde;
use crate::{Error, Game, Outcome, PlayerId, Rational, Result, Rule};

mod followers;
mod kvoteout;
mod nor;
mod sumcis;
mod supernodes;

pub use followers::add_votein_followers;
pub use kvoteout::{reduce_to_kvoteout, voteout_copies};
pub use nor::{build_nor_gadget, pin_nor_gadget, NorGadget};
pub use sumcis::reduce_maxcut_to_sumcis;
pub use supernodes::{add_supernodes, add_supernodes_with_bias};

/// Which construction produced a record.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ReductionKind {
    Supernodes,
    SumCis,
    VoteInFollowers,
    KVoteOut,
    NorGadget,
}

/// A player introduced by a construction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AddedPlayer {
    pub id: PlayerId,
    pub label: String,
}

/// Provenance of a reduced instance and the data needed to pull solutions back.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionRecord {
    pub kind: ReductionKind,
    pub source: String,
    pub source_players: usize,
    pub reduced_players: usize,
    pub added_players: Vec<AddedPlayer>,
    /// Constants of the construction (W, M, δ, ε, s, k, thresholds, scale, ...).
    #[serde(with = "rational_serde::map")]
    pub parameters: BTreeMap<String, Rational>,
    /// Rule under which reduced outcomes are meant to be stable.
    pub target_rule: Rule,
    /// Coalition cap of the target problem, if any.
    pub target_k: Option<usize>,
    /// Supernode ids in party order; empty for constructions without supernodes.
    pub supernodes: Vec<PlayerId>,
}

impl ReductionRecord {
    pub fn parameter(&self, name: &str) -> Option<Rational> {
        self.parameters.get(name).copied()
    }
}

/// A solution of the source problem.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SourceSolution {
    /// Party index of every source player.
    Labeling(Vec<usize>),
    /// A coalition structure on the source players.
    Outcome(Outcome),
}

/// Maps an outcome of the reduced game to a solution of the source instance.
///
/// The map is total. Constructions with supernodes label each source player
/// by the supernode sharing its coalition (party 0 when there is none); the
/// coalition-cap construction restricts the outcome to the source players.
pub fn pull_back(record: &ReductionRecord, reduced: &Outcome) -> Result<SourceSolution> {
    if reduced.player_count() != record.reduced_players {
        return Err(Error::RecordMismatch(format!(
            "outcome has {} players, reduced game has {}",
            reduced.player_count(),
            record.reduced_players
        )));
    }
    match record.kind {
        ReductionKind::KVoteOut => {
            let labels: Vec<usize> = (0..record.source_players)
                .map(|i| reduced.coalition_of(i))
                .collect();
            Ok(SourceSolution::Outcome(Outcome::from_labels(&labels)))
        }
        _ => {
            if record.supernodes.is_empty() {
                return Err(Error::RecordMismatch("record lists no supernodes".into()));
            }
            let labels = (0..record.source_players)
                .map(|i| {
                    record
                        .supernodes
                        .iter()
                        .position(|&s| reduced.coalition_of(s) == reduced.coalition_of(i))
                        .unwrap_or(0)
                })
                .collect();
            Ok(SourceSolution::Labeling(labels))
        }
    }
}

/// A party-affiliation game: every player picks one of `parties` sides and
/// gets the weight of its edges to its own side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartyAffiliation {
    pub game: Game,
    pub parties: usize,
}

impl PartyAffiliation {
    pub fn new(game: Game) -> Self {
        PartyAffiliation { game, parties: 2 }
    }

    pub fn with_parties(game: Game, parties: usize) -> Self {
        PartyAffiliation { game, parties }
    }

    fn side_values(&self, labels: &[usize], player: PlayerId) -> Vec<Rational> {
        let mut values = vec![Rational::zero(); self.parties];
        for &(j, w) in self.game.neighbors(player) {
            values[labels[j]] += w;
        }
        values
    }

    /// Players that strictly prefer some other party, with that party.
    pub fn improving_switches(&self, labels: &[usize]) -> Vec<(PlayerId, usize)> {
        assert_eq!(labels.len(), self.game.player_count());
        let mut out = Vec::new();
        for i in 0..labels.len() {
            let values = self.side_values(labels, i);
            let own = values[labels[i]];
            if let Some(p) = (0..self.parties).find(|&p| values[p] > own) {
                out.push((i, p));
            }
        }
        out
    }

    /// No player strictly prefers another party.
    pub fn is_stable(&self, labels: &[usize]) -> bool {
        labels.len() == self.game.player_count()
            && labels.iter().all(|&l| l < self.parties)
            && self.improving_switches(labels).is_empty()
    }

    /// All stable labelings, by exhaustive search (`parties^n` candidates).
    pub fn stable_labelings(&self) -> Vec<Vec<usize>> {
        let n = self.game.player_count();
        let total = self.parties.pow(n as u32);
        (0..total)
            .map(|mut code| {
                (0..n)
                    .map(|_| {
                        let l = code % self.parties;
                        code /= self.parties;
                        l
                    })
                    .collect::<Vec<_>>()
            })
            .filter(|labels| self.is_stable(labels))
            .collect()
    }
}

/// A cut is locally maximal when no single vertex can move to increase the
/// cut weight. Equivalent to party-affiliation stability on negated weights.
pub fn is_local_max_cut(game: &Game, sides: &[bool]) -> bool {
    (0..game.player_count()).all(|i| {
        let (mut same, mut other) = (Rational::zero(), Rational::zero());
        for &(j, w) in game.neighbors(i) {
            if sides[i] == sides[j] {
                same += w;
            } else {
                other += w;
            }
        }
        same <= other
    })
}

/// True iff every player has at most one incident negative edge.
pub fn one_enemy_check(game: &Game) -> bool {
    (0..game.player_count()).all(|i| game.negative_degree(i) <= 1)
}

pub(crate) fn require_one_enemy(game: &Game) -> Result<()> {
    match (0..game.player_count()).find(|&i| game.negative_degree(i) > 1) {
        Some(player) => Err(Error::OneEnemyViolation {
            player,
            negative: game.negative_degree(player),
        }),
        None => Ok(()),
    }
}

/// Smallest positive integer factor making every weight an integer.
pub(crate) fn integer_scale(game: &Game) -> Rational {
    let lcm = game
        .edges()
        .iter()
        .fold(1i128, |acc, (_, _, w)| acc.lcm(w.denom()));
    Rational::from_integer(lcm)
}

/// Smallest integer strictly greater than `x`.
pub(crate) fn smallest_int_above(x: Rational) -> Rational {
    x.floor() + Rational::from_integer(1)
}

pub(crate) fn source_label(game: &Game, i: PlayerId) -> String {
    game.label(i)
        .map_or_else(|| format!("v{i}"), str::to_string)
}

pub(crate) fn describe(game: &Game) -> String {
    let negative = game.negative_edge_count();
    format!(
        "{} players, {} edges ({} negative)",
        game.player_count(),
        game.edge_count(),
        negative
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_enemy() {
        let star = Game::from_int_edges(4, &[(0, 1, 1), (0, 2, 1), (0, 3, -1)]).unwrap();
        assert!(one_enemy_check(&star));
        let tri = Game::from_int_edges(3, &[(0, 1, -1), (0, 2, -1), (1, 2, -1)]).unwrap();
        assert!(!one_enemy_check(&tri));
        assert!(one_enemy_check(&Game::new(3, []).unwrap()));
    }

    #[test]
    fn party_affiliation_stability() {
        let g = Game::from_int_edges(3, &[(0, 1, -2), (1, 2, 1)]).unwrap();
        let pa = PartyAffiliation::new(g);
        assert!(pa.is_stable(&[0, 1, 1]));
        assert!(!pa.is_stable(&[0, 0, 1]));
        assert_eq!(pa.stable_labelings(), vec![vec![1, 0, 0], vec![0, 1, 1]]);
    }

    #[test]
    fn local_max_cut() {
        let g = Game::from_int_edges(3, &[(0, 1, 1), (1, 2, 1), (0, 2, 1)]).unwrap();
        assert!(is_local_max_cut(&g, &[true, false, false]));
        assert!(!is_local_max_cut(&g, &[true, true, true]));
    }
}
