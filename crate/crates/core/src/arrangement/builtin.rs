use std::fmt;
use std::str::FromStr;

use super::Arrangement;
use crate::error::{Error, Result};

/// The four reference arrangements: Pappus and non-Pappus (same weak
/// combinatorics), Ziegler and its perturbation (isomorphic intersection
/// posets).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Builtin {
    Pappus,
    NonPappus,
    Ziegler,
    Ziegler2,
}

const PAPPUS: [(i64, i64, i64); 8] = [
    (1, 0, 0),
    (0, 1, 0),
    (1, -1, 0),
    (0, 1, -1),
    (1, -1, -1),
    (2, 1, 1),
    (2, 1, -1),
    (2, -5, 1),
];

const NON_PAPPUS: [(i64, i64, i64); 8] = [
    (1, 0, 0),
    (0, 1, 0),
    (1, 1, 0),
    (0, 1, 1),
    (1, 0, 3),
    (1, 2, 1),
    (1, 2, 3),
    (2, 3, 3),
];

const ZIEGLER: [(i64, i64, i64); 8] = [
    (0, 1, 0),
    (2, 2, 1),
    (3, 1, 1),
    (8, -1, 4),
    (9, 3, -1),
    (9, -2, 3),
    (11, 2, 1),
    (5, 5, -2),
];

const ZIEGLER2: [(i64, i64, i64); 8] = [
    (0, 1, 0),
    (2, 2, 1),
    (3, 1, 1),
    (8, -1, 4),
    (9, 3, -1),
    (21, -4, 7),
    (19, 4, 1),
    (10, 10, -5),
];

impl Builtin {
    pub const ALL: [Builtin; 4] = [
        Builtin::Pappus,
        Builtin::NonPappus,
        Builtin::Ziegler,
        Builtin::Ziegler2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Builtin::Pappus => "pappus",
            Builtin::NonPappus => "nonpappus",
            Builtin::Ziegler => "ziegler",
            Builtin::Ziegler2 => "ziegler2",
        }
    }

    pub fn triples(self) -> &'static [(i64, i64, i64)] {
        match self {
            Builtin::Pappus => &PAPPUS,
            Builtin::NonPappus => &NON_PAPPUS,
            Builtin::Ziegler => &ZIEGLER,
            Builtin::Ziegler2 => &ZIEGLER2,
        }
    }

    pub fn arrangement(self) -> Arrangement {
        Arrangement::from_triples(self.triples())
    }
}

impl FromStr for Builtin {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Builtin::ALL
            .into_iter()
            .find(|b| b.name() == s)
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

impl fmt::Display for Builtin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub fn builtin_arrangement(name: &str) -> Result<Arrangement> {
    Ok(name.parse::<Builtin>()?.arrangement())
}
