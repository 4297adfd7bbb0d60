//! Random instance families.

use clap::ValueEnum;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::{Game, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    /// Weights uniform in `[-W, W] \ {0}`.
    Random,
    /// Weights uniform in `[1, W]`.
    AllPositive,
    /// Weights uniform in `[-W, -1]`.
    AllNegative,
    /// Positive weights plus a random matching of negative edges.
    OneEnemy,
}

/// Draws a game on `players` players where each pair is an edge with
/// probability `density` and integer weights are bounded by `max_weight`.
pub fn generate<R: Rng + ?Sized>(
    family: Family,
    players: usize,
    density: f64,
    max_weight: i64,
    rng: &mut R,
) -> Game {
    assert!(max_weight >= 1, "max_weight must be positive");
    let density = density.clamp(0.0, 1.0);
    let mut edges = Vec::new();
    let mut enemy = vec![None; players];
    if family == Family::OneEnemy {
        let mut order: Vec<usize> = (0..players).collect();
        order.shuffle(rng);
        for pair in order.chunks_exact(2) {
            if rng.gen_bool(density) {
                let (u, v) = (pair[0], pair[1]);
                enemy[u] = Some(v);
                enemy[v] = Some(u);
                edges.push((u, v, -rng.gen_range(1..=max_weight)));
            }
        }
    }
    for u in 0..players {
        for v in u + 1..players {
            if enemy[u] == Some(v) || !rng.gen_bool(density) {
                continue;
            }
            let w = match family {
                Family::Random => {
                    let w = rng.gen_range(1..=max_weight);
                    if rng.gen_bool(0.5) {
                        w
                    } else {
                        -w
                    }
                }
                Family::AllPositive | Family::OneEnemy => rng.gen_range(1..=max_weight),
                Family::AllNegative => -rng.gen_range(1..=max_weight),
            };
            edges.push((u, v, w));
        }
    }
    Game::new(
        players,
        edges
            .into_iter()
            .map(|(u, v, w)| (u, v, Rational::from_integer(w.into()))),
    )
    .expect("generated edges are valid")
}

/// [`generate`] with a ChaCha8 generator seeded by `seed`.
pub fn random_game(
    family: Family,
    players: usize,
    density: f64,
    max_weight: i64,
    seed: u64,
) -> Game {
    generate(
        family,
        players,
        density,
        max_weight,
        &mut ChaCha8Rng::seed_from_u64(seed),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reductions::one_enemy_check;
    use num_traits::Signed;

    #[test]
    fn families_respect_signs() {
        for seed in 0..20 {
            let g = random_game(Family::AllPositive, 8, 0.5, 5, seed);
            assert!(g.edges().iter().all(|(_, _, w)| w.is_positive()));
            let g = random_game(Family::AllNegative, 8, 0.5, 5, seed);
            assert!(g.edges().iter().all(|(_, _, w)| w.is_negative()));
            let g = random_game(Family::OneEnemy, 9, 0.7, 5, seed);
            assert!(one_enemy_check(&g));
            let g = random_game(Family::Random, 8, 1.0, 3, seed);
            assert_eq!(g.edge_count(), 28);
            assert!(g
                .edges()
                .iter()
                .all(|(_, _, w)| w.abs() <= Rational::from_integer(3)));
        }
    }

    #[test]
    fn deterministic() {
        assert_eq!(
            random_game(Family::Random, 10, 0.4, 5, 7),
            random_game(Family::Random, 10, 0.4, 5, 7)
        );
    }
}
