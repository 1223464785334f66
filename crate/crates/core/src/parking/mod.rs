//! Four models of parking functions and the bijections between them.

mod bridges;
mod enumerate;
mod pair;
mod tree;
mod triple;
mod word;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use bridges::{
    composition_from_right_comb, nilpotent_function_view, orbit_representative_check,
    right_branch_check, right_comb_bridge, right_comb_from_composition, tree_from_nilpotent,
    NilpotentFunction, OrderedSetComposition,
};
pub use enumerate::{
    all_pairs, all_parking_trees, all_parking_words, all_triples, k_trees, parking_word_count,
};
pub use pair::ParkingPair;
pub use tree::PlaneTree;
pub use triple::ParkingTriple;
pub use word::ParkingWord;

use crate::error::{invalid, Error, Result};
use crate::nc::Permutation;

/// Which representation a [`ParkingObject`] uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Triple,
    Pair,
    Word,
    Tree,
}

impl Kind {
    pub const ALL: [Kind; 4] = [Kind::Triple, Kind::Pair, Kind::Word, Kind::Tree];
}

impl FromStr for Kind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Kind> {
        match s {
            "triple" => Ok(Kind::Triple),
            "pair" => Ok(Kind::Pair),
            "word" => Ok(Kind::Word),
            "tree" => Ok(Kind::Tree),
            _ => Err(invalid("kind", format!("unknown representation {s:?}"))),
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Kind::Triple => "triple",
            Kind::Pair => "pair",
            Kind::Word => "word",
            Kind::Tree => "tree",
        };
        f.write_str(s)
    }
}

/// One parking function in any of its four representations.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ParkingObject {
    Triple(ParkingTriple),
    Pair(ParkingPair),
    Word(ParkingWord),
    Tree(PlaneTree),
}

/// Outcome of [`validate`]; never an error.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Validation {
    pub valid: bool,
    pub diagnostic: Option<String>,
}

impl ParkingObject {
    pub fn kind(&self) -> Kind {
        match self {
            ParkingObject::Triple(_) => Kind::Triple,
            ParkingObject::Pair(_) => Kind::Pair,
            ParkingObject::Word(_) => Kind::Word,
            ParkingObject::Tree(_) => Kind::Tree,
        }
    }

    pub fn n(&self) -> usize {
        match self {
            ParkingObject::Triple(t) => t.n(),
            ParkingObject::Pair(p) => p.n(),
            ParkingObject::Word(w) => w.n(),
            ParkingObject::Tree(t) => t.ground_size(),
        }
    }

    fn check(&self) -> Result<()> {
        match self {
            ParkingObject::Triple(t) => t.check(),
            ParkingObject::Pair(_) => Ok(()),
            ParkingObject::Word(w) => w.check(1),
            ParkingObject::Tree(t) => t.validate(t.ground_size(), 1),
        }
    }

    /// Parses JSON of the requested kind; words also accept a digit string.
    pub fn parse(kind: Kind, input: &str) -> Result<Self> {
        let bad = |e: serde_json::Error| invalid("input", e.to_string());
        Ok(match kind {
            Kind::Word => ParkingObject::Word(ParkingWord::parse(input)?),
            Kind::Pair => ParkingObject::Pair(serde_json::from_str(input).map_err(bad)?),
            Kind::Triple => ParkingObject::Triple(serde_json::from_str(input).map_err(bad)?),
            Kind::Tree => ParkingObject::Tree(serde_json::from_str(input).map_err(bad)?),
        })
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("serializable")
    }

    /// The canonical pair model of this object.
    pub fn to_pair(&self) -> Result<ParkingPair> {
        self.check()?;
        match self {
            ParkingObject::Triple(t) => t.to_pair(),
            ParkingObject::Pair(p) => Ok(p.clone()),
            ParkingObject::Word(w) => ParkingTriple::from_word(&w.0)?.to_pair(),
            ParkingObject::Tree(t) => ParkingPair::from_tree(t),
        }
    }

    /// Converts along the direct bijections where one exists, through the
    /// pair model otherwise.
    pub fn convert(&self, target: Kind) -> Result<ParkingObject> {
        self.check()?;
        Ok(match (self, target) {
            (ParkingObject::Word(w), Kind::Tree) => {
                ParkingObject::Tree(PlaneTree::from_word(&w.0, 1)?)
            }
            (ParkingObject::Tree(t), Kind::Word) => ParkingObject::Word(ParkingWord(t.to_word())),
            (ParkingObject::Word(w), Kind::Triple) => {
                ParkingObject::Triple(ParkingTriple::from_word(&w.0)?)
            }
            (ParkingObject::Triple(t), Kind::Word) => ParkingObject::Word(ParkingWord(t.to_word())),
            (_, Kind::Pair) => ParkingObject::Pair(self.to_pair()?),
            (_, Kind::Triple) => ParkingObject::Triple(ParkingTriple::from_pair(&self.to_pair()?)),
            (_, Kind::Word) => ParkingObject::Word(ParkingWord(self.to_pair()?.to_word())),
            (_, Kind::Tree) => ParkingObject::Tree(self.to_pair()?.to_tree()),
        })
    }

    pub fn act(&self, s: &Permutation) -> Result<ParkingObject> {
        self.check()?;
        if s.n() != self.n() {
            return Err(Error::SizeMismatch(self.n(), s.n()));
        }
        Ok(match self {
            ParkingObject::Triple(t) => ParkingObject::Triple(t.act(s)),
            ParkingObject::Pair(p) => ParkingObject::Pair(p.act(s)),
            ParkingObject::Word(w) => ParkingObject::Word(w.act(s)),
            ParkingObject::Tree(t) => ParkingObject::Tree(t.relabel(s)),
        })
    }

    /// Block of the first partition whose image holds `j`, for each `j`.
    pub fn eta(&self) -> Result<Vec<Vec<usize>>> {
        let p = self.to_pair()?;
        Ok(p.eta().into_iter().map(crate::nc::mask_elements).collect())
    }

    pub fn is_prime(&self) -> Result<bool> {
        self.check()?;
        Ok(match self {
            ParkingObject::Word(w) => w.is_k_prime(1),
            ParkingObject::Tree(t) => t.children.last().is_some_and(PlaneTree::is_leaf),
            _ => self.to_pair()?.is_prime(),
        })
    }
}

pub fn validate(x: &ParkingObject) -> Validation {
    match x.check() {
        Ok(()) => Validation {
            valid: true,
            diagnostic: None,
        },
        Err(e) => Validation {
            valid: false,
            diagnostic: Some(e.to_string()),
        },
    }
}

pub fn convert(x: &ParkingObject, target: Kind) -> Result<ParkingObject> {
    x.convert(target)
}

pub fn act(sigma: &Permutation, x: &ParkingObject) -> Result<ParkingObject> {
    x.act(sigma)
}

pub fn eta(x: &ParkingObject) -> Result<Vec<Vec<usize>>> {
    x.eta()
}

pub fn is_prime(x: &ParkingObject) -> Result<bool> {
    x.is_prime()
}
