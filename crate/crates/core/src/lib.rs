//! Symmetric additively-separable hedonic games.
//!
//! A game is an undirected graph with nonzero exact-rational edge weights; each
//! vertex is a player whose utility is the total weight of its edges into its
//! own coalition. This crate provides:
//!
//! - the data model ([`Game`], [`Outcome`]) and the two potentials used to
//!   bound improvement dynamics ([`total_happiness`], [`signed_internal_count`]);
//! - feasibility predicates for every enter/leave restriction ([`Rule`]) and
//!   stability verdicts with witnesses ([`stability`]);
//! - local-improvement engines, including the polynomial-time regimes
//!   ([`dynamics`]);
//! - an exhaustive oracle over set partitions and the min-cut algorithm for
//!   two-coalition individual stability ([`exact`]);
//! - constructors for reduction gadgets together with their pull-back maps
//!   ([`reductions`]);
//! - random instance families ([`generate`]);
//! - instance/outcome/trace file formats and the command-line front end
//!   ([`io`], [`cli`]).
//!
//! All arithmetic is exact: weights and thresholds are [`Rational`]s.
//!
//! ```
//! use hedonic::{Game, Outcome, Rule, stability};
//!
//! let game = Game::from_int_edges(3, &[(0, 1, 4), (0, 2, -1), (1, 2, 2)]).unwrap();
//! let outcome = Outcome::from_blocks(3, &[vec![0, 1], vec![2]]).unwrap();
//! let verdict = stability::check_stable(&game, &outcome, &Rule::nash(), None).unwrap();
//! assert!(!verdict.stable);
//! ```

pub mod cli;
pub mod dynamics;
mod error;
pub mod exact;
mod game;
pub mod generate;
pub mod io;
mod outcome;
pub mod reductions;
mod rule;
pub mod stability;

pub use error::{Error, Result};
pub use game::{coalition_value, signed_internal_count, total_happiness, utility, Game, PlayerId};
pub use outcome::{canonical_form, Deviation, Outcome, Target};
pub use rule::{EnterRule, LeaveRule, Rule, Threshold};

/// Exact rational number used for every weight, threshold and potential.
pub type Rational = num_rational::Ratio<i128>;

/// Shorthand for an integer-valued [`Rational`].
pub fn int(v: i128) -> Rational {
    Rational::from_integer(v)
}

/// Shorthand for `num / den`.
///
/// Panics if `den` is zero.
pub fn ratio(num: i128, den: i128) -> Rational {
    Rational::new(num, den)
}
