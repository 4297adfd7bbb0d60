use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{Error, Game, PlayerId, Result};

/// A partition of the players into nonempty coalitions, always in canonical form.
///
/// Coalitions are ordered by their smallest member and coalition ids are ranks
/// in that order, so the assignment vector is a restricted-growth string: equal
/// partitions compare and hash equal regardless of how they were built.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Outcome {
    assignment: Vec<usize>,
    blocks: Vec<Vec<PlayerId>>,
}

/// Where a deviating player goes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Target {
    /// An existing coalition, by canonical id.
    Coalition(usize),
    /// A fresh coalition containing only the deviator.
    NewSingleton,
}

/// A unilateral move of `player` to `target`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Deviation {
    pub player: PlayerId,
    pub target: Target,
}

impl Deviation {
    pub fn to_coalition(player: PlayerId, coalition: usize) -> Self {
        Deviation {
            player,
            target: Target::Coalition(coalition),
        }
    }

    pub fn to_singleton(player: PlayerId) -> Self {
        Deviation {
            player,
            target: Target::NewSingleton,
        }
    }
}

impl fmt::Display for Deviation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.target {
            Target::Coalition(c) => write!(f, "{} -> coalition {}", self.player, c),
            Target::NewSingleton => write!(f, "{} -> new singleton", self.player),
        }
    }
}

impl Outcome {
    /// Canonicalizes an arbitrary labelling (`labels[i]` is the coalition tag of player `i`).
    pub fn from_labels<T: Eq + Copy>(labels: &[T]) -> Self {
        let mut seen: Vec<T> = Vec::new();
        let assignment = labels
            .iter()
            .map(|l| match seen.iter().position(|s| s == l) {
                Some(idx) => idx,
                None => {
                    seen.push(*l);
                    seen.len() - 1
                }
            })
            .collect();
        Self::from_rgs(assignment)
    }

    /// Builds from a restricted-growth string without re-labelling.
    pub(crate) fn from_rgs(assignment: Vec<usize>) -> Self {
        let count = assignment.iter().map(|&c| c + 1).max().unwrap_or(0);
        let mut blocks = vec![Vec::new(); count];
        for (i, &c) in assignment.iter().enumerate() {
            blocks[c].push(i);
        }
        debug_assert!(blocks.iter().all(|b| !b.is_empty()));
        Outcome { assignment, blocks }
    }

    /// Validates a block list over players `0..players` and canonicalizes it.
    pub fn from_blocks(players: usize, blocks: &[Vec<PlayerId>]) -> Result<Self> {
        let mut labels = vec![usize::MAX; players];
        for (idx, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::InvalidPartition(format!("coalition {idx} is empty")));
            }
            for &p in block {
                if p >= players {
                    return Err(Error::InvalidPartition(format!(
                        "player {p} out of range for {players} players"
                    )));
                }
                if labels[p] != usize::MAX {
                    return Err(Error::InvalidPartition(format!(
                        "player {p} appears in more than one coalition"
                    )));
                }
                labels[p] = idx;
            }
        }
        if let Some(p) = labels.iter().position(|&l| l == usize::MAX) {
            return Err(Error::InvalidPartition(format!(
                "player {p} is not in any coalition"
            )));
        }
        Ok(Self::from_labels(&labels))
    }

    pub fn singletons(players: usize) -> Self {
        Self::from_rgs((0..players).collect())
    }

    pub fn grand(players: usize) -> Self {
        Self::from_rgs(vec![0; players])
    }

    pub fn player_count(&self) -> usize {
        self.assignment.len()
    }

    pub fn coalition_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn coalition_of(&self, player: PlayerId) -> usize {
        self.assignment[player]
    }

    /// Canonical assignment vector (a restricted-growth string).
    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn coalitions(&self) -> &[Vec<PlayerId>] {
        &self.blocks
    }

    pub fn members(&self, coalition: usize) -> &[PlayerId] {
        &self.blocks[coalition]
    }

    pub fn is_alone(&self, player: PlayerId) -> bool {
        self.blocks[self.assignment[player]].len() == 1
    }

    /// Number of coalitions after `dev` is executed.
    pub fn coalition_count_after(&self, dev: &Deviation) -> usize {
        let leaves_empty = self.is_alone(dev.player);
        let fresh = matches!(dev.target, Target::NewSingleton);
        self.coalition_count() + usize::from(fresh) - usize::from(leaves_empty)
    }

    pub fn check_deviation(&self, dev: &Deviation) -> Result<()> {
        if dev.player >= self.player_count() {
            return Err(Error::InvalidDeviation(format!(
                "player {} out of range",
                dev.player
            )));
        }
        let current = self.coalition_of(dev.player);
        match dev.target {
            Target::Coalition(c) if c >= self.coalition_count() => Err(Error::InvalidDeviation(
                format!("coalition {c} does not exist"),
            )),
            Target::Coalition(c) if c == current => Err(Error::InvalidDeviation(format!(
                "player {} is already in coalition {c}",
                dev.player
            ))),
            Target::NewSingleton if self.is_alone(dev.player) => Err(Error::InvalidDeviation(
                format!("player {} is already alone", dev.player),
            )),
            _ => Ok(()),
        }
    }

    /// The canonical outcome after executing `dev`.
    pub fn apply(&self, dev: &Deviation) -> Result<Outcome> {
        self.check_deviation(dev)?;
        let mut labels = self.assignment.clone();
        labels[dev.player] = match dev.target {
            Target::Coalition(c) => c,
            Target::NewSingleton => self.coalition_count(),
        };
        Ok(Self::from_labels(&labels))
    }

    pub(crate) fn check_matches(&self, game: &Game) -> Result<()> {
        if self.player_count() == game.player_count() {
            Ok(())
        } else {
            Err(Error::InvalidPartition(format!(
                "outcome covers {} players but the game has {}",
                self.player_count(),
                game.player_count()
            )))
        }
    }
}

/// Validates a family of coalitions over `0..n` (where `n` is the total member
/// count) and returns it in canonical order.
pub fn canonical_form(blocks: &[Vec<PlayerId>]) -> Result<Outcome> {
    let players = blocks.iter().map(Vec::len).sum();
    Outcome::from_blocks(players, blocks)
}

impl fmt::Debug for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Outcome{self}")
    }
}

impl fmt::Display for Outcome {
    /// Renders as `[[0,1],[2]]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (idx, block) in self.blocks.iter().enumerate() {
            if idx > 0 {
                f.write_str(",")?;
            }
            f.write_str("[")?;
            for (k, p) in block.iter().enumerate() {
                if k > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{p}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

impl Serialize for Outcome {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.blocks.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Outcome {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let blocks = Vec::<Vec<PlayerId>>::deserialize(deserializer)?;
        canonical_form(&blocks).map_err(serde::de::Error::custom)
    }
}
