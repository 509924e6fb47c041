use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::Error;

/// The Smirnov word enumerators and the labeled-cycle chromatic function.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variant {
    /// `W_n`: all Smirnov words, by descents.
    Plain,
    /// `W^<_n`: first letter below the last.
    Less,
    /// `W^>_n`: first letter above the last.
    Greater,
    /// `W^=_n`: first letter equal to the last.
    Equal,
    /// `W^≠_n`: first and last letters differ.
    NotEqual,
    /// `W̃_n`: all Smirnov words, by cyclic descents.
    Tilde,
    /// `W̃^≠_n`: first and last letters differ, by cyclic descents.
    TildeNotEqual,
    /// `X_{C_n}`: chromatic quasisymmetric function of the labeled cycle.
    Cycle,
}

impl Variant {
    pub const ALL: [Variant; 8] = [
        Variant::Plain,
        Variant::Less,
        Variant::Greater,
        Variant::Equal,
        Variant::NotEqual,
        Variant::Tilde,
        Variant::TildeNotEqual,
        Variant::Cycle,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Variant::Plain => "W",
            Variant::Less => "Wless",
            Variant::Greater => "Wgreater",
            Variant::Equal => "Wequal",
            Variant::NotEqual => "Wneq",
            Variant::Tilde => "Wtilde",
            Variant::TildeNotEqual => "Wtildeneq",
            Variant::Cycle => "XCn",
        }
    }

    /// Smallest `n` for which the enumerator is defined.
    pub fn min_n(self) -> usize {
        match self {
            Variant::Cycle => 2,
            _ => 1,
        }
    }

    /// Counts cyclic descents rather than descents.
    pub fn is_cyclic(self) -> bool {
        matches!(self, Variant::Tilde | Variant::TildeNotEqual)
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let v = match s {
            "W" => Variant::Plain,
            "Wless" | "W<" | "Wlt" => Variant::Less,
            "Wgreater" | "W>" | "Wgt" => Variant::Greater,
            "Wequal" | "W=" | "Weq" => Variant::Equal,
            "Wneq" | "W!=" | "Wne" => Variant::NotEqual,
            "Wtilde" | "W~" => Variant::Tilde,
            "Wtildeneq" | "W~!=" | "Wtildene" => Variant::TildeNotEqual,
            "XCn" | "XC" | "Xcycle" => Variant::Cycle,
            other => return Err(Error::Parse(format!("unknown variant '{other}'"))),
        };
        Ok(v)
    }
}

impl Serialize for Variant {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.tag())
    }
}
