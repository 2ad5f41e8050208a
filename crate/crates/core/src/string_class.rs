//! String classes on S^3 and their e-invariants.
//!
//! String classes form a torsor over `H^3(S^3; Z) = Z`. Three classes carry
//! names: the left class `L`, the right class `R = L + 2`, and the class
//! `dD4 = L + 1` bounding the 4-disk. Every class is written as one of these
//! anchors plus an integer offset.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::Add;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::canonical::integral_h;
use crate::error::{Error, Result};
use crate::metric::{Chirality, InvariantMetric};
use crate::scalar::{Exact, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Anchor {
    Left,
    Bounding,
    Right,
}

impl Anchor {
    /// Offset of the anchor from `L`.
    pub fn offset_from_left(self) -> i64 {
        match self {
            Anchor::Left => 0,
            Anchor::Bounding => 1,
            Anchor::Right => 2,
        }
    }

    fn label(self) -> &'static str {
        match self {
            Anchor::Left => "L",
            Anchor::Bounding => "dD4",
            Anchor::Right => "R",
        }
    }
}

/// `anchor + offset`. Equality compares the underlying class, so `R` and
/// `L+2` are equal.
#[derive(Clone, Copy, Debug)]
pub struct StringClass {
    anchor: Anchor,
    offset: i64,
}

impl StringClass {
    pub fn new(anchor: Anchor, offset: i64) -> Self {
        Self { anchor, offset }
    }

    pub fn left() -> Self {
        Self::new(Anchor::Left, 0)
    }

    pub fn right() -> Self {
        Self::new(Anchor::Right, 0)
    }

    pub fn bounding() -> Self {
        Self::new(Anchor::Bounding, 0)
    }

    /// The class `L` or `R` matching a chirality.
    pub fn of_chirality(chirality: Chirality) -> Self {
        match chirality {
            Chirality::Left => Self::left(),
            Chirality::Right => Self::right(),
        }
    }

    pub fn anchor(&self) -> Anchor {
        self.anchor
    }

    pub fn offset(&self) -> i64 {
        self.offset
    }

    pub fn offset_from_left(&self) -> i64 {
        self.anchor.offset_from_left() + self.offset
    }

    /// The integer `self - other` in `H^3(S^3; Z)`.
    pub fn difference(&self, other: &StringClass) -> i64 {
        self.offset_from_left() - other.offset_from_left()
    }

    /// The e-invariant `(1/24) ∫ H mod 1`, taken at the round metric.
    pub fn e_invariant(&self) -> Result<RationalModZ> {
        let round = InvariantMetric::<Exact>::round(Chirality::Left);
        let integral = integral_h(self, &round)?;
        Ok(RationalModZ::new(integral / Exact::from_int(24)))
    }
}

impl Add<i64> for StringClass {
    type Output = StringClass;

    fn add(self, k: i64) -> StringClass {
        StringClass::new(self.anchor, self.offset + k)
    }
}

impl PartialEq for StringClass {
    fn eq(&self, other: &Self) -> bool {
        self.offset_from_left() == other.offset_from_left()
    }
}

impl Eq for StringClass {}

impl Hash for StringClass {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.offset_from_left().hash(state);
    }
}

impl fmt::Display for StringClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.anchor.label())?;
        match self.offset {
            0 => Ok(()),
            k if k > 0 => write!(f, "+{k}"),
            k => write!(f, "{k}"),
        }
    }
}

impl FromStr for StringClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let text: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let (anchor, rest) = if let Some(rest) = text.strip_prefix("dD4") {
            (Anchor::Bounding, rest)
        } else if let Some(rest) = text.strip_prefix('L') {
            (Anchor::Left, rest)
        } else if let Some(rest) = text.strip_prefix('R') {
            (Anchor::Right, rest)
        } else {
            return Err(Error::Parse(format!(
                "unknown string class {s:?}; expected L, R or dD4 with an optional +k/-k"
            )));
        };
        let offset = if rest.is_empty() {
            0
        } else if rest.starts_with('+') || rest.starts_with('-') {
            rest.parse::<i64>()
                .map_err(|_| Error::Parse(format!("bad offset in string class {s:?}")))?
        } else {
            return Err(Error::Parse(format!("bad offset in string class {s:?}")));
        };
        Ok(StringClass::new(anchor, offset))
    }
}

impl Serialize for StringClass {
    fn serialize<Ser: Serializer>(
        &self,
        serializer: Ser,
    ) -> std::result::Result<Ser::Ok, Ser::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for StringClass {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

/// A rational number modulo 1, kept in `[0, 1)` in lowest terms.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalModZ {
    value: Exact,
}

impl RationalModZ {
    pub fn new(x: Exact) -> Self {
        let floor = x.floor();
        Self { value: x - floor }
    }

    pub fn value(&self) -> &Exact {
        &self.value
    }

    /// `p` with `self = p/24`, when the denominator divides 24.
    pub fn twenty_fourths(&self) -> Option<i64> {
        let scaled = self.value.clone() * Exact::from_int(24);
        if scaled.is_integer() {
            num_traits::ToPrimitive::to_i64(scaled.numer())
        } else {
            None
        }
    }

    pub fn to_f64(&self) -> f64 {
        Scalar::to_f64(&self.value)
    }
}

impl Add for RationalModZ {
    type Output = RationalModZ;

    fn add(self, other: RationalModZ) -> RationalModZ {
        RationalModZ::new(self.value + other.value)
    }
}

impl fmt::Display for RationalModZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.value.is_zero() {
            return f.write_str("0");
        }
        let (n, d) = (self.value.numer(), self.value.denom());
        if d.is_one() {
            write!(f, "{n}")
        } else {
            debug_assert!(!n.is_negative() && n.gcd(d).is_one());
            write!(f, "{n}/{d}")
        }
    }
}
