//! File formats.
//!
//! Instances, outcomes, traces and reports are JSON. Weights and other
//! rationals are written as JSON integers when integral and as `"num/den"`
//! strings otherwise, so no value ever passes through a float.
//!
//! An instance file:
//!
//! ```json
//! {
//!   "format_version": 1,
//!   "players": 3,
//!   "edges": [[0, 1, 4], [0, 2, -1], [1, 2, "7/2"]]
//! }
//! ```
//!
//! `players` may instead be a list of names, which become player labels; a
//! separate `labels` list is also accepted. A reduced instance may carry its
//! `record`. Serialization is canonical: edges sorted, `u < v`, labels folded
//! into `players`, fixed key order.

use serde::{Deserialize, Serialize};

use crate::reductions::ReductionRecord;
use crate::rule::parse_rational;
use crate::{Error, Game, Outcome, Rational, Result};

pub const FORMAT_VERSION: u32 = 1;

/// Renders a rational as `"n"` or `"n/d"`.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Serde adapter for [`Rational`] fields.
pub mod rational_serde {
    use std::fmt;

    use serde::de::{self, Visitor};
    use serde::{Deserializer, Serializer};

    use super::{format_rational, parse_rational};
    use crate::Rational;

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        match i64::try_from(*r.numer()) {
            Ok(n) if r.is_integer() => s.serialize_i64(n),
            _ => s.serialize_str(&format_rational(r)),
        }
    }

    struct RationalVisitor;

    impl Visitor<'_> for RationalVisitor {
        type Value = Rational;

        fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            f.write_str("an integer or a \"num/den\" string")
        }

        fn visit_i64<E: de::Error>(self, v: i64) -> Result<Rational, E> {
            Ok(Rational::from_integer(v.into()))
        }

        fn visit_u64<E: de::Error>(self, v: u64) -> Result<Rational, E> {
            Ok(Rational::from_integer(v.into()))
        }

        fn visit_i128<E: de::Error>(self, v: i128) -> Result<Rational, E> {
            Ok(Rational::from_integer(v))
        }

        fn visit_f64<E: de::Error>(self, v: f64) -> Result<Rational, E> {
            Err(E::custom(format!(
                "floating-point value {v} not allowed; write it as \"num/den\""
            )))
        }

        fn visit_str<E: de::Error>(self, v: &str) -> Result<Rational, E> {
            parse_rational(v).map_err(E::custom)
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        d.deserialize_any(RationalVisitor)
    }

    pub mod option {
        use serde::{Deserialize, Deserializer, Serialize, Serializer};

        use crate::Rational;

        #[derive(Serialize, Deserialize)]
        struct Wrap(#[serde(with = "super")] Rational);

        pub fn serialize<S: Serializer>(r: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
            r.map(Wrap).serialize(s)
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Rational>, D::Error> {
            Ok(Option::<Wrap>::deserialize(d)?.map(|w| w.0))
        }
    }

    pub mod map {
        use std::collections::BTreeMap;

        use serde::{Deserialize, Deserializer, Serialize, Serializer};

        use crate::Rational;

        #[derive(Serialize, Deserialize)]
        struct Wrap(#[serde(with = "super")] Rational);

        pub fn serialize<S: Serializer>(
            m: &BTreeMap<String, Rational>,
            s: S,
        ) -> Result<S::Ok, S::Error> {
            s.collect_map(m.iter().map(|(k, v)| (k, Wrap(*v))))
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(
            d: D,
        ) -> Result<BTreeMap<String, Rational>, D::Error> {
            let raw = BTreeMap::<String, Wrap>::deserialize(d)?;
            Ok(raw.into_iter().map(|(k, v)| (k, v.0)).collect())
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Players {
    Count(usize),
    Names(Vec<String>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeEntry(
    pub usize,
    pub usize,
    #[serde(with = "rational_serde")] pub Rational,
);

/// On-disk instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub format_version: u32,
    pub players: Players,
    pub edges: Vec<EdgeEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub record: Option<ReductionRecord>,
}

impl InstanceFile {
    pub fn from_game(game: &Game, record: Option<&ReductionRecord>) -> Self {
        let players = match game.labels() {
            Some(names) => Players::Names(names.to_vec()),
            None => Players::Count(game.player_count()),
        };
        InstanceFile {
            format_version: FORMAT_VERSION,
            players,
            edges: game
                .edges()
                .iter()
                .map(|&(u, v, w)| EdgeEntry(u, v, w))
                .collect(),
            labels: None,
            record: record.cloned(),
        }
    }

    pub fn into_game(self) -> Result<(Game, Option<ReductionRecord>)> {
        if self.format_version != FORMAT_VERSION {
            return Err(Error::Parse {
                line: 1,
                column: 1,
                message: format!("unsupported format_version {}", self.format_version),
            });
        }
        let (n, names) = match self.players {
            Players::Count(n) => (n, self.labels),
            Players::Names(names) => {
                if self.labels.is_some() {
                    return Err(Error::Parse {
                        line: 1,
                        column: 1,
                        message: "labels given both in players and labels".into(),
                    });
                }
                (names.len(), Some(names))
            }
        };
        let mut game = Game::new(
            n,
            self.edges.into_iter().map(|EdgeEntry(u, v, w)| (u, v, w)),
        )?;
        if let Some(names) = names {
            game = game.with_labels(names)?;
        }
        if let Some(record) = &self.record {
            if record.reduced_players != n {
                return Err(Error::RecordMismatch(format!(
                    "record describes {} players, instance has {n}",
                    record.reduced_players
                )));
            }
        }
        Ok((game, self.record))
    }
}

fn parse_error(e: serde_json::Error) -> Error {
    Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    }
}

/// Parses JSON text into a value, reporting syntax and schema errors with their position.
pub fn from_json<T: for<'de> Deserialize<'de>>(bytes: &[u8]) -> Result<T> {
    serde_json::from_slice(bytes).map_err(parse_error)
}

/// Pretty-printed JSON with a trailing newline; arrays of scalars stay on one line.
pub fn to_json<T: Serialize + ?Sized>(value: &T) -> String {
    let pretty = serde_json::to_string_pretty(value).expect("report types always serialize");
    let mut s = collapse_scalar_arrays(&pretty);
    s.push('\n');
    s
}

fn collapse_scalar_arrays(pretty: &str) -> String {
    let bytes = pretty.as_bytes();
    let mut out = String::with_capacity(pretty.len());
    let mut copied = 0;
    let mut i = 0;
    let mut in_string = false;
    while i < bytes.len() {
        let c = bytes[i];
        if in_string {
            if c == b'\\' {
                i += 1;
            } else if c == b'"' {
                in_string = false;
            }
        } else if c == b'"' {
            in_string = true;
        } else if c == b'[' {
            if let Some(end) = scalar_array_end(bytes, i) {
                out.push_str(&pretty[copied..i]);
                let items: Vec<&str> = pretty[i + 1..end]
                    .split('\n')
                    .map(str::trim)
                    .filter(|l| !l.is_empty())
                    .collect();
                out.push('[');
                out.push_str(&items.join(" "));
                out.push(']');
                copied = end + 1;
                i = end;
            }
        }
        i += 1;
    }
    out.push_str(&pretty[copied..]);
    out
}

/// Index of the `]` closing the array opened at `start`, if the array holds no arrays or objects.
fn scalar_array_end(bytes: &[u8], start: usize) -> Option<usize> {
    let mut in_string = false;
    let mut i = start + 1;
    while i < bytes.len() {
        let c = bytes[i];
        if in_string {
            if c == b'\\' {
                i += 1;
            } else if c == b'"' {
                in_string = false;
            }
        } else {
            match c {
                b'"' => in_string = true,
                b'[' | b'{' => return None,
                b']' => return Some(i),
                _ => {}
            }
        }
        i += 1;
    }
    None
}

pub fn parse_instance(bytes: &[u8]) -> Result<(Game, Option<ReductionRecord>)> {
    from_json::<InstanceFile>(bytes)?.into_game()
}

pub fn serialize_instance(game: &Game, record: Option<&ReductionRecord>) -> String {
    to_json(&InstanceFile::from_game(game, record))
}

pub fn serialize_game(game: &Game) -> String {
    serialize_instance(game, None)
}

/// Parses `[[0,1],[2]]` and checks that it partitions `players` players.
pub fn parse_outcome(bytes: &[u8], players: usize) -> Result<Outcome> {
    let blocks: Vec<Vec<usize>> = from_json(bytes)?;
    Outcome::from_blocks(players, &blocks)
}

pub fn serialize_outcome(outcome: &Outcome) -> String {
    format!("{outcome}\n")
}
