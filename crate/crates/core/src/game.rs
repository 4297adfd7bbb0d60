use std::collections::BTreeSet;

use num_traits::{Signed, Zero};

use crate::{Error, Outcome, Rational, Result};

/// Dense player index in `0..n`.
pub type PlayerId = usize;

/// An undirected, edge-weighted graph whose vertices are the players.
///
/// Weights are nonzero exact rationals; a missing edge means the two players
/// are indifferent to each other. Construct through [`Game::new`], which
/// rejects self-loops, duplicate pairs, zero weights and unknown endpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Game {
    players: usize,
    /// Sorted by `(u, v)` with `u < v`.
    edges: Vec<(PlayerId, PlayerId, Rational)>,
    /// Per-player neighbour lists, sorted by neighbour id.
    adjacency: Vec<Vec<(PlayerId, Rational)>>,
    labels: Option<Vec<String>>,
}

impl Game {
    /// Validates a raw edge list over `players` players.
    pub fn new(
        players: usize,
        edges: impl IntoIterator<Item = (PlayerId, PlayerId, Rational)>,
    ) -> Result<Self> {
        let mut seen = BTreeSet::new();
        let mut list = Vec::new();
        for (a, b, w) in edges {
            for p in [a, b] {
                if p >= players {
                    return Err(Error::UnknownPlayer { player: p, players });
                }
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            if w.is_zero() {
                return Err(Error::ZeroWeightEdge(u, v));
            }
            if !seen.insert((u, v)) {
                return Err(Error::DuplicateEdge(u, v));
            }
            list.push((u, v, w));
        }
        list.sort_by_key(|&(u, v, _)| (u, v));

        let mut adjacency = vec![Vec::new(); players];
        for &(u, v, w) in &list {
            adjacency[u].push((v, w));
            adjacency[v].push((u, w));
        }
        for nbrs in &mut adjacency {
            nbrs.sort_by_key(|&(j, _)| j);
        }
        Ok(Game {
            players,
            edges: list,
            adjacency,
            labels: None,
        })
    }

    /// Convenience constructor for integer weights.
    pub fn from_int_edges(players: usize, edges: &[(PlayerId, PlayerId, i64)]) -> Result<Self> {
        Game::new(
            players,
            edges
                .iter()
                .map(|&(u, v, w)| (u, v, Rational::from_integer(w as i128))),
        )
    }

    /// Attaches one label per player. The label count must equal the player count.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.players {
            return Err(Error::UnknownPlayer {
                player: labels.len(),
                players: self.players,
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn player_count(&self) -> usize {
        self.players
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v, w)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(PlayerId, PlayerId, Rational)] {
        &self.edges
    }

    pub fn neighbors(&self, player: PlayerId) -> &[(PlayerId, Rational)] {
        &self.adjacency[player]
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, player: PlayerId) -> Option<&str> {
        self.labels.as_ref().map(|l| l[player].as_str())
    }

    pub fn weight(&self, a: PlayerId, b: PlayerId) -> Option<Rational> {
        let nbrs = self.adjacency.get(a)?;
        nbrs.binary_search_by_key(&b, |&(j, _)| j)
            .ok()
            .map(|idx| nbrs[idx].1)
    }

    pub fn degree(&self, player: PlayerId) -> usize {
        self.adjacency[player].len()
    }

    /// Maximum degree, `0` for an edgeless game.
    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn negative_degree(&self, player: PlayerId) -> usize {
        self.adjacency[player]
            .iter()
            .filter(|(_, w)| w.is_negative())
            .count()
    }

    pub fn negative_edge_count(&self) -> usize {
        self.edges
            .iter()
            .filter(|(_, _, w)| w.is_negative())
            .count()
    }

    pub fn has_negative_edge(&self) -> bool {
        self.edges.iter().any(|(_, _, w)| w.is_negative())
    }

    /// `Σ |w_e|` over all edges.
    pub fn total_abs_weight(&self) -> Rational {
        self.edges.iter().map(|(_, _, w)| w.abs()).sum()
    }

    /// Same graph with every weight multiplied by `factor`.
    ///
    /// Panics if `factor` is zero.
    pub fn scaled(&self, factor: Rational) -> Game {
        assert!(!factor.is_zero(), "scaling by zero would drop every edge");
        let mut g = Game::new(
            self.players,
            self.edges.iter().map(|&(u, v, w)| (u, v, w * factor)),
        )
        .expect("scaling preserves validity");
        g.labels = self.labels.clone();
        g
    }

    pub(crate) fn check_player(&self, player: PlayerId) -> Result<()> {
        if player < self.players {
            Ok(())
        } else {
            Err(Error::UnknownPlayer {
                player,
                players: self.players,
            })
        }
    }
}

/// Total weight of `player`'s edges to the members of `coalition`.
///
/// `player` may or may not belong to `coalition`; only edges to other members
/// count. Members are assumed distinct.
pub fn coalition_value(game: &Game, player: PlayerId, coalition: &[PlayerId]) -> Result<Rational> {
    game.check_player(player)?;
    let mut total = Rational::zero();
    for &j in coalition {
        game.check_player(j)?;
        if j != player {
            if let Some(w) = game.weight(player, j) {
                total += w;
            }
        }
    }
    Ok(total)
}

/// Utility of `player` under `outcome`: the weight of its edges into its own coalition.
pub fn utility(game: &Game, outcome: &Outcome, player: PlayerId) -> Result<Rational> {
    game.check_player(player)?;
    outcome.check_matches(game)?;
    let c = outcome.coalition_of(player);
    Ok(game
        .neighbors(player)
        .iter()
        .filter(|&&(j, _)| outcome.coalition_of(j) == c)
        .map(|&(_, w)| w)
        .sum())
}

/// Sum of all players' utilities, i.e. twice the weight of the internal edges.
pub fn total_happiness(game: &Game, outcome: &Outcome) -> Result<Rational> {
    outcome.check_matches(game)?;
    let internal: Rational = game
        .edges()
        .iter()
        .filter(|&&(u, v, _)| outcome.coalition_of(u) == outcome.coalition_of(v))
        .map(|&(_, _, w)| w)
        .sum();
    Ok(internal * Rational::from_integer(2))
}

/// Number of positive internal edges minus number of negative internal edges.
pub fn signed_internal_count(game: &Game, outcome: &Outcome) -> Result<i64> {
    outcome.check_matches(game)?;
    Ok(game
        .edges()
        .iter()
        .filter(|&&(u, v, _)| outcome.coalition_of(u) == outcome.coalition_of(v))
        .map(|(_, _, w)| if w.is_positive() { 1 } else { -1 })
        .sum())
}
