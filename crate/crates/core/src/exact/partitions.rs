use crate::{Error, Outcome, Result};

/// Environment variable overriding [`SizeGuard::default`].
pub const SIZE_GUARD_ENV: &str = "HEDONIC_SIZE_GUARD";

/// Caps exhaustive enumeration at `Bell(max_players)` partitions.
///
/// With a coalition cap the number of partitions is far smaller than the Bell
/// number, so larger player counts pass as long as the capped count fits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SizeGuard {
    pub max_players: usize,
}

impl Default for SizeGuard {
    fn default() -> Self {
        SizeGuard { max_players: 12 }
    }
}

impl SizeGuard {
    /// Reads `HEDONIC_SIZE_GUARD` when set to a valid integer, else the default.
    pub fn from_env() -> Self {
        std::env::var(SIZE_GUARD_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .map(|max_players| SizeGuard { max_players })
            .unwrap_or_default()
    }

    pub fn check(&self, players: usize, k: Option<usize>) -> Result<()> {
        let limit = bell_number(self.max_players);
        match partition_count(players, k) {
            Some(count) if count <= limit => Ok(()),
            _ => Err(Error::SizeGuard {
                players,
                limit: self.max_players,
            }),
        }
    }
}

/// Number of partitions of an `n`-set into at most `k` blocks (all partitions
/// when `k` is `None`); `None` on overflow.
pub fn partition_count(n: usize, k: Option<usize>) -> Option<u128> {
    let cap = k.unwrap_or(n).min(n);
    // Stirling numbers of the second kind, row by row.
    let mut row = vec![0u128; cap + 1];
    row[0] = 1;
    for _ in 0..n {
        let mut next = vec![0u128; cap + 1];
        for j in 1..=cap {
            next[j] = (j as u128).checked_mul(row[j])?.checked_add(row[j - 1])?;
        }
        row = next;
    }
    row.iter().try_fold(0u128, |acc, &x| acc.checked_add(x))
}

/// `Bell(n)`, saturating at `u128::MAX`.
pub fn bell_number(n: usize) -> u128 {
    partition_count(n, None).unwrap_or(u128::MAX)
}

/// Yields every partition of `0..n` (with at most `k` blocks, if capped)
/// exactly once, in lexicographic order of restricted-growth strings.
#[derive(Debug, Clone)]
pub struct PartitionIterator {
    rgs: Vec<usize>,
    /// `prefix_max[i] = max(rgs[0..=i])`.
    prefix_max: Vec<usize>,
    cap: usize,
    done: bool,
}

impl PartitionIterator {
    pub fn new(n: usize, k: Option<usize>) -> Self {
        let cap = k.unwrap_or(n.max(1));
        PartitionIterator {
            rgs: vec![0; n],
            prefix_max: vec![0; n],
            cap,
            done: cap == 0 && n > 0,
        }
    }

    fn advance(&mut self) -> bool {
        let n = self.rgs.len();
        for i in (1..n).rev() {
            let bound = (self.prefix_max[i - 1] + 1).min(self.cap - 1);
            if self.rgs[i] < bound {
                self.rgs[i] += 1;
                self.prefix_max[i] = self.prefix_max[i - 1].max(self.rgs[i]);
                for j in i + 1..n {
                    self.rgs[j] = 0;
                    self.prefix_max[j] = self.prefix_max[i];
                }
                return true;
            }
        }
        false
    }
}

impl Iterator for PartitionIterator {
    type Item = Outcome;

    fn next(&mut self) -> Option<Outcome> {
        if self.done {
            return None;
        }
        let current = Outcome::from_rgs(self.rgs.clone());
        self.done = !self.advance();
        Some(current)
    }
}

/// All partitions of `0..n`, optionally capped at `k` blocks, after checking the size guard.
pub fn enumerate_partitions(
    n: usize,
    k: Option<usize>,
    guard: SizeGuard,
) -> Result<PartitionIterator> {
    if k == Some(0) {
        return Err(Error::InvalidK { k: 0, min: 1 });
    }
    guard.check(n, k)?;
    Ok(PartitionIterator::new(n, k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn bell_numbers() {
        let expected = [
            1u128, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975, 678570, 4213597,
        ];
        for (n, &b) in expected.iter().enumerate() {
            assert_eq!(bell_number(n), b, "Bell({n})");
        }
        assert_eq!(partition_count(3, Some(2)), Some(4));
        assert_eq!(partition_count(11, Some(2)), Some(1024));
    }

    #[test]
    fn small_enumerations() {
        let all: Vec<_> = enumerate_partitions(3, None, SizeGuard::default())
            .unwrap()
            .collect();
        assert_eq!(all.len(), 5);
        let capped: Vec<_> = enumerate_partitions(3, Some(2), SizeGuard::default())
            .unwrap()
            .collect();
        assert_eq!(capped.len(), 4);
        assert!(!capped.contains(&Outcome::singletons(3)));
        assert_eq!(
            enumerate_partitions(1, None, SizeGuard::default())
                .unwrap()
                .count(),
            1
        );
    }

    #[test]
    fn counts_match_and_no_duplicates() {
        for n in 1..=8 {
            for k in [None, Some(1), Some(2), Some(3)] {
                let parts: Vec<_> = PartitionIterator::new(n, k).collect();
                assert_eq!(parts.len() as u128, partition_count(n, k).unwrap());
                let unique: HashSet<_> = parts.iter().cloned().collect();
                assert_eq!(unique.len(), parts.len());
                if let Some(k) = k {
                    assert!(parts.iter().all(|p| p.coalition_count() <= k));
                }
            }
        }
    }

    #[test]
    fn guard_rejects_large_uncapped() {
        assert!(matches!(
            enumerate_partitions(13, None, SizeGuard::default()),
            Err(Error::SizeGuard { .. })
        ));
        assert!(enumerate_partitions(13, Some(2), SizeGuard::default()).is_ok());
        assert!(enumerate_partitions(5, None, SizeGuard { max_players: 4 }).is_err());
    }
}
