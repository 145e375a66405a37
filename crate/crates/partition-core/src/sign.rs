use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::CoreError;

/// A sign attached to an even part of a marked symplectic partition.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_value(v: i64) -> Result<Self, CoreError> {
        match v {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            _ => Err(CoreError::BadSign(v.to_string())),
        }
    }

    pub fn opposite(self) -> Self {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

impl FromStr for Sign {
    type Err = CoreError;

    fn from_str(s: &str) -> Result<Self, CoreError> {
        match s.trim() {
            "+" => Ok(Sign::Plus),
            "-" => Ok(Sign::Minus),
            other => Err(CoreError::BadSign(other.to_string())),
        }
    }
}

/// Signs keyed by part value.
pub type SignMap = BTreeMap<i64, Sign>;

/// Parses `4:+,2:-`; the empty string is the empty map. Duplicate keys are
/// rejected.
pub fn parse_sign_map(text: &str) -> Result<SignMap, CoreError> {
    let text = text.trim();
    let mut map = SignMap::new();
    if text.is_empty() {
        return Ok(map);
    }
    for entry in text.split(',') {
        let (part, sign) = entry
            .split_once(':')
            .ok_or_else(|| CoreError::BadSignMapEntry(entry.to_string()))?;
        let part: i64 = part
            .trim()
            .parse()
            .map_err(|_| CoreError::BadInteger(part.to_string()))?;
        let sign: Sign = sign.parse()?;
        if map.insert(part, sign).is_some() {
            return Err(CoreError::BadSignMapEntry(entry.to_string()));
        }
    }
    Ok(map)
}

/// Renders a sign map as `4:+,2:-` with keys decreasing; empty map gives the
/// empty string.
pub fn sign_map_text(map: &SignMap) -> String {
    let mut out = String::new();
    for (i, (part, sign)) in map.iter().rev().enumerate() {
        if i > 0 {
            out.push(',');
        }
        out.push_str(&format!("{part}:{sign}"));
    }
    out
}
