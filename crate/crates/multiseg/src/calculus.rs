//! Classification- and side-generic entry points.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::multisegment::{DerivOutcome, Multisegment};
use crate::segment::Segment;
use crate::{lang, zel};

/// Which classification a multisegment parametrizes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Classification {
    Lang,
    Zel,
}

/// Right or left derivatives and integrals.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    R,
    L,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Classification::Lang => "lang",
            Classification::Zel => "zel",
        })
    }
}

impl FromStr for Classification {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.to_ascii_lowercase().as_str() {
            "lang" => Ok(Classification::Lang),
            "zel" => Ok(Classification::Zel),
            _ => Err(Error::domain(format!("unknown classification {s:?}"))),
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::R => "R",
            Side::L => "L",
        })
    }
}

impl FromStr for Side {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "R" | "r" => Ok(Side::R),
            "L" | "l" => Ok(Side::L),
            _ => Err(Error::domain(format!("unknown side {s:?}"))),
        }
    }
}

/// The St-derivative `D_d(m)` for the given classification and side.
pub fn derivative(m: &Multisegment, d: Segment, class: Classification, side: Side) -> DerivOutcome {
    match (class, side) {
        (Classification::Lang, Side::R) => lang::st_derivative_lang(m, d),
        (Classification::Lang, Side::L) => lang::derivative_left_lang(m, d),
        (Classification::Zel, Side::R) => zel::st_derivative_zel(m, d),
        (Classification::Zel, Side::L) => zel::derivative_left_zel(m, d),
    }
}

/// The St-integral `I_d(m)` for the given classification and side.
pub fn integral(m: &Multisegment, d: Segment, class: Classification, side: Side) -> Multisegment {
    match (class, side) {
        (Classification::Lang, Side::R) => lang::st_integral_lang(m, d),
        (Classification::Lang, Side::L) => lang::integral_left_lang(m, d),
        (Classification::Zel, Side::R) => zel::st_integral_zel(m, d),
        (Classification::Zel, Side::L) => zel::integral_left_zel(m, d),
    }
}

/// `ε_d(m)`: how many times `D_d` can be applied before reaching infinity.
pub fn epsilon_r(m: &Multisegment, d: Segment, class: Classification, side: Side) -> usize {
    let mut cur = m.clone();
    let mut count = 0;
    while let DerivOutcome::Finite(next) = derivative(&cur, d, class, side) {
        cur = next;
        count += 1;
    }
    count
}

/// `η_d(m) = (ε_[a,b], ε_[a+1,b], …, ε_[b,b])`.
pub fn eta_vector(m: &Multisegment, d: Segment, class: Classification, side: Side) -> Vec<usize> {
    (d.start()..=d.end()).map(|a| epsilon_r(m, Segment::raw(a, d.end()), class, side)).collect()
}
