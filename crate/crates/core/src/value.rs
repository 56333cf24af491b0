//! Canonical element values.
//!
//! Every element of every described set is a [`Value`]. The derived total
//! order is the canonical order used for enumeration, serialization and
//! witness reporting, so two runs over the same inputs always report the
//! same first counterexample.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Value {
    Int(i64),
    Sym(String),
    /// The added point of a non-numeral `X + 1`.
    Point,
    /// Left injection into a non-numeral `X + 1`.
    Inl(Box<Value>),
    Tuple(Vec<Value>),
    Word(Vec<Value>),
    Set(BTreeSet<Value>),
}

impl Value {
    pub fn int(i: usize) -> Value {
        Value::Int(i as i64)
    }

    pub fn as_int(&self) -> Option<i64> {
        match self {
            Value::Int(i) => Some(*i),
            _ => None,
        }
    }

    pub fn as_index(&self) -> Option<usize> {
        self.as_int().and_then(|i| usize::try_from(i).ok())
    }

    pub fn as_word(&self) -> Option<&[Value]> {
        match self {
            Value::Word(w) => Some(w),
            _ => None,
        }
    }

    pub fn as_set(&self) -> Option<&BTreeSet<Value>> {
        match self {
            Value::Set(s) => Some(s),
            _ => None,
        }
    }

    pub fn as_tuple(&self) -> Option<&[Value]> {
        match self {
            Value::Tuple(t) => Some(t),
            _ => None,
        }
    }

    pub fn set<I: IntoIterator<Item = Value>>(items: I) -> Value {
        Value::Set(items.into_iter().collect())
    }

    pub fn word<I: IntoIterator<Item = Value>>(items: I) -> Value {
        Value::Word(items.into_iter().collect())
    }

    pub fn tuple<I: IntoIterator<Item = Value>>(items: I) -> Value {
        Value::Tuple(items.into_iter().collect())
    }
}

fn join(
    f: &mut fmt::Formatter<'_>,
    items: impl IntoIterator<Item = impl fmt::Display>,
) -> fmt::Result {
    for (i, item) in items.into_iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{item}")?;
    }
    Ok(())
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Int(i) => write!(f, "{i}"),
            Value::Sym(s) => f.write_str(s),
            Value::Point => f.write_str("*"),
            Value::Inl(v) => write!(f, "inl({v})"),
            Value::Tuple(t) => {
                f.write_str("(")?;
                join(f, t)?;
                f.write_str(")")
            }
            Value::Word(w) => {
                f.write_str("<")?;
                join(f, w)?;
                f.write_str(">")
            }
            Value::Set(s) => {
                f.write_str("{")?;
                join(f, s)?;
                f.write_str("}")
            }
        }
    }
}

impl fmt::Debug for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
