use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassLabel {
    Alpha1,
    Alpha2,
    Alpha3,
    Beta1,
    Beta2,
    Beta3,
    Gamma1,
    Gamma2,
    Gamma3,
    Delta,
    IrreducibleConic,
    OutOfScopeFocalPlane,
    DegenerateCongruence,
}

impl ClassLabel {
    /// The ten classes of congruences with degenerate general focal conic.
    pub const PAPER_CLASSES: [ClassLabel; 10] = [
        ClassLabel::Alpha1,
        ClassLabel::Alpha2,
        ClassLabel::Alpha3,
        ClassLabel::Beta1,
        ClassLabel::Beta2,
        ClassLabel::Beta3,
        ClassLabel::Gamma1,
        ClassLabel::Gamma2,
        ClassLabel::Gamma3,
        ClassLabel::Delta,
    ];

    pub const ALL: [ClassLabel; 13] = [
        ClassLabel::Alpha1,
        ClassLabel::Alpha2,
        ClassLabel::Alpha3,
        ClassLabel::Beta1,
        ClassLabel::Beta2,
        ClassLabel::Beta3,
        ClassLabel::Gamma1,
        ClassLabel::Gamma2,
        ClassLabel::Gamma3,
        ClassLabel::Delta,
        ClassLabel::IrreducibleConic,
        ClassLabel::OutOfScopeFocalPlane,
        ClassLabel::DegenerateCongruence,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ClassLabel::Alpha1 => "Alpha1",
            ClassLabel::Alpha2 => "Alpha2",
            ClassLabel::Alpha3 => "Alpha3",
            ClassLabel::Beta1 => "Beta1",
            ClassLabel::Beta2 => "Beta2",
            ClassLabel::Beta3 => "Beta3",
            ClassLabel::Gamma1 => "Gamma1",
            ClassLabel::Gamma2 => "Gamma2",
            ClassLabel::Gamma3 => "Gamma3",
            ClassLabel::Delta => "Delta",
            ClassLabel::IrreducibleConic => "IrreducibleConic",
            ClassLabel::OutOfScopeFocalPlane => "OutOfScopeFocalPlane",
            ClassLabel::DegenerateCongruence => "DegenerateCongruence",
        }
    }

    /// Lower-case spelling used on the command line and in `expect:` lines.
    pub fn slug(self) -> String {
        self.name().to_ascii_lowercase()
    }

    pub fn is_paper_class(self) -> bool {
        ClassLabel::PAPER_CLASSES.contains(&self)
    }

    /// Greek family: 'a', 'b', 'g', 'd', or `None` for labels outside the table.
    pub fn family(self) -> Option<char> {
        use ClassLabel::*;
        match self {
            Alpha1 | Alpha2 | Alpha3 => Some('a'),
            Beta1 | Beta2 | Beta3 => Some('b'),
            Gamma1 | Gamma2 | Gamma3 => Some('g'),
            Delta => Some('d'),
            _ => None,
        }
    }
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ClassLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let wanted = s.trim().to_ascii_lowercase().replace(['-', '_'], "");
        ClassLabel::ALL
            .into_iter()
            .find(|l| l.slug() == wanted)
            .ok_or_else(|| Error::UnknownLabel(s.trim().to_string()))
    }
}

impl Serialize for ClassLabel {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}
