use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{Error, Rational, Result};

/// A voting threshold: an exact rational in `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Threshold(Rational);

impl Threshold {
    pub fn new(value: Rational) -> Result<Self> {
        if value < Rational::zero() || value > Rational::one() {
            return Err(Error::ThresholdOutOfRange(value.to_string()));
        }
        Ok(Threshold(value))
    }

    pub fn one() -> Self {
        Threshold(Rational::one())
    }

    pub fn value(self) -> Rational {
        self.0
    }

    pub fn is_one(self) -> bool {
        self.0.is_one()
    }

    /// `count / total >= self`, with `total > 0`, compared without division.
    pub(crate) fn met_by(self, count: usize, total: usize) -> bool {
        debug_assert!(total > 0);
        Rational::from_integer(count as i128) >= self.0 * Rational::from_integer(total as i128)
    }
}

impl fmt::Display for Threshold {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Restriction on entering the target coalition (columns of the rule grid).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EnterRule {
    None,
    SumIn,
    /// At least a `T` fraction of the deviator's edges into the target are positive.
    VoteIn(Threshold),
}

/// Restriction on leaving the current coalition (rows of the rule grid).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LeaveRule {
    None,
    SumOut,
    /// At least a `T` fraction of the deviator's edges inside its coalition are negative.
    VoteOut(Threshold),
}

/// One cell of the enter × leave grid of deviation restrictions.
///
/// Veto-in and veto-out are the threshold-one special cases of voting.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rule {
    pub enter: EnterRule,
    pub leave: LeaveRule,
}

impl Rule {
    pub fn new(enter: EnterRule, leave: LeaveRule) -> Self {
        Rule { enter, leave }
    }

    /// No restriction on either side (cell 1A).
    pub fn nash() -> Self {
        Rule::new(EnterRule::None, LeaveRule::None)
    }

    /// Individual stability: veto-in, free leaving (cell 3A).
    pub fn is() -> Self {
        Rule::new(EnterRule::VoteIn(Threshold::one()), LeaveRule::None)
    }

    /// Contractual individual stability: veto-in and veto-out (cell 3C).
    pub fn cis() -> Self {
        Rule::new(
            EnterRule::VoteIn(Threshold::one()),
            LeaveRule::VoteOut(Threshold::one()),
        )
    }

    /// Sum-in and sum-out (cell 2B).
    pub fn sum_cis() -> Self {
        Rule::new(EnterRule::SumIn, LeaveRule::SumOut)
    }

    pub fn vote_in(t: Threshold) -> Self {
        Rule::new(EnterRule::VoteIn(t), LeaveRule::None)
    }

    pub fn vote_out(t: Threshold) -> Self {
        Rule::new(EnterRule::None, LeaveRule::VoteOut(t))
    }

    pub fn vote_in_out(t_in: Threshold, t_out: Threshold) -> Self {
        Rule::new(EnterRule::VoteIn(t_in), LeaveRule::VoteOut(t_out))
    }

    pub fn veto_in_sum_out() -> Self {
        Rule::new(EnterRule::VoteIn(Threshold::one()), LeaveRule::SumOut)
    }

    /// Every cell of the grid, instantiating the voting cells with each threshold in `thresholds`.
    pub fn grid(thresholds: &[Threshold]) -> Vec<Rule> {
        let mut enters = vec![EnterRule::None, EnterRule::SumIn];
        enters.extend(thresholds.iter().map(|&t| EnterRule::VoteIn(t)));
        let mut leaves = vec![LeaveRule::None, LeaveRule::SumOut];
        leaves.extend(thresholds.iter().map(|&t| LeaveRule::VoteOut(t)));
        let mut rules = Vec::new();
        for &enter in &enters {
            for &leave in &leaves {
                let rule = Rule::new(enter, leave);
                if !rules.contains(&rule) {
                    rules.push(rule);
                }
            }
        }
        rules
    }
}

impl fmt::Display for Rule {
    /// Grid coordinates with thresholds, e.g. `1A`, `3C`, `4D:1/2,2/3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut args = Vec::new();
        let column = match self.enter {
            EnterRule::None => '1',
            EnterRule::SumIn => '2',
            EnterRule::VoteIn(t) if t.is_one() => '3',
            EnterRule::VoteIn(t) => {
                args.push(t.to_string());
                '4'
            }
        };
        let row = match self.leave {
            LeaveRule::None => 'A',
            LeaveRule::SumOut => 'B',
            LeaveRule::VoteOut(t) if t.is_one() => 'C',
            LeaveRule::VoteOut(t) => {
                args.push(t.to_string());
                'D'
            }
        };
        write!(f, "{column}{row}")?;
        if !args.is_empty() {
            write!(f, ":{}", args.join(","))?;
        }
        Ok(())
    }
}

pub(crate) fn parse_rational(text: &str) -> Result<Rational> {
    let bad = || Error::ThresholdOutOfRange(format!("cannot parse '{text}' as a rational"));
    let text = text.trim();
    match text.split_once('/') {
        Some((n, d)) => {
            let n: i128 = n.trim().parse().map_err(|_| bad())?;
            let d: i128 = d.trim().parse().map_err(|_| bad())?;
            if d == 0 {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(text.parse().map_err(|_| bad())?)),
    }
}

fn parse_threshold(text: &str) -> Result<Threshold> {
    Threshold::new(parse_rational(text)?)
}

impl FromStr for Rule {
    type Err = Error;

    /// Accepts grid coordinates (`1A` .. `4D`, voting cells followed by
    /// `:T` or `:Tin,Tout`) and the aliases `nash`, `is`, `cis`, `sumcis`,
    /// `votein:T`, `voteout:T`, `voteinout:Tin,Tout`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (head, args) = match s.split_once(':') {
            Some((h, a)) => (h, a.split(',').collect::<Vec<_>>()),
            None => (s, Vec::new()),
        };
        let unknown = || Error::RulePreconditionViolated(format!("unknown rule '{s}'"));
        let expect_args = |n: usize| {
            if args.len() == n {
                Ok(())
            } else {
                Err(Error::RulePreconditionViolated(format!(
                    "rule '{head}' takes {n} threshold argument(s)"
                )))
            }
        };
        let lower = head.to_ascii_lowercase();
        match lower.as_str() {
            "nash" => return expect_args(0).map(|_| Rule::nash()),
            "is" => return expect_args(0).map(|_| Rule::is()),
            "cis" => return expect_args(0).map(|_| Rule::cis()),
            "sumcis" => return expect_args(0).map(|_| Rule::sum_cis()),
            "votein" => {
                expect_args(1)?;
                return Ok(Rule::vote_in(parse_threshold(args[0])?));
            }
            "voteout" => {
                expect_args(1)?;
                return Ok(Rule::vote_out(parse_threshold(args[0])?));
            }
            "voteinout" => {
                expect_args(2)?;
                return Ok(Rule::vote_in_out(
                    parse_threshold(args[0])?,
                    parse_threshold(args[1])?,
                ));
            }
            _ => {}
        }

        let mut chars = lower.chars();
        let (Some(col), Some(row), None) = (chars.next(), chars.next(), chars.next()) else {
            return Err(unknown());
        };
        let needed = usize::from(col == '4') + usize::from(row == 'd');
        expect_args(needed)?;
        let mut args = args.into_iter();
        let enter = match col {
            '1' => EnterRule::None,
            '2' => EnterRule::SumIn,
            '3' => EnterRule::VoteIn(Threshold::one()),
            '4' => EnterRule::VoteIn(parse_threshold(args.next().unwrap())?),
            _ => return Err(unknown()),
        };
        let leave = match row {
            'a' => LeaveRule::None,
            'b' => LeaveRule::SumOut,
            'c' => LeaveRule::VoteOut(Threshold::one()),
            'd' => LeaveRule::VoteOut(parse_threshold(args.next().unwrap())?),
            _ => return Err(unknown()),
        };
        Ok(Rule::new(enter, leave))
    }
}

impl Serialize for Rule {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rule {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}
