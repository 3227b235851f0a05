//! Input record type for the multiple-choice reading-comprehension
//! corpus format: a context, a question, exactly four answer options,
//! and an optional gold label.

use serde::de::Error as DeError;
use serde::{Deserialize, Deserializer, Serialize};

/// One dataset instance. Test splits ship without labels; a `label` of
/// -1 is treated the same as an absent one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReclorInstance {
    pub id: String,
    pub context: String,
    pub question: String,
    pub options: [String; 4],
    pub label: Option<u8>,
}

#[derive(Deserialize)]
struct RawInstance {
    id_string: String,
    context: String,
    question: String,
    answers: Vec<String>,
    #[serde(default)]
    label: Option<i64>,
}

impl<'de> Deserialize<'de> for ReclorInstance {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = RawInstance::deserialize(deserializer)?;
        let options: [String; 4] = raw
            .answers
            .try_into()
            .map_err(|v: Vec<String>| D::Error::custom(format!("expected 4 answers, got {}", v.len())))?;
        let label = match raw.label {
            None | Some(-1) => None,
            Some(l @ 0..=3) => Some(l as u8),
            Some(other) => return Err(D::Error::custom(format!("label {other} out of range"))),
        };
        Ok(ReclorInstance {
            id: raw.id_string,
            context: raw.context,
            question: raw.question,
            options,
            label,
        })
    }
}
