//! Group words over single-letter generator names.
//!
//! Accepted syntax: a sequence of letters, each optionally followed by an
//! exponent. Lowercase letters are generators, uppercase letters their
//! inverses, and `e` is the identity. Exponents may be written directly
//! (`a2`), with a caret (`a^2`, `x^-1`), or braced (`x^{-1}`).
//! Examples: `a2b`, `xa^2b`, `xY`, `x^{-1}y`.

use crate::error::{Error, Result};

/// A word as a sequence of (generator index, exponent) syllables.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Word(pub Vec<(usize, i64)>);

impl Word {
    pub fn identity() -> Self {
        Word(Vec::new())
    }

    pub fn syllables(&self) -> &[(usize, i64)] {
        &self.0
    }

    /// Largest generator index used, if any.
    pub fn max_generator(&self) -> Option<usize> {
        self.0.iter().map(|&(g, _)| g).max()
    }

    /// Renders the word with uppercase inverses and repeated letters, the
    /// relator-string form used in presentation files.
    pub fn to_letters(&self, names: &[String]) -> String {
        let mut out = String::new();
        for &(g, k) in &self.0 {
            let name = &names[g];
            let letter = if k < 0 { name.to_uppercase() } else { name.clone() };
            for _ in 0..k.unsigned_abs() {
                out.push_str(&letter);
            }
        }
        out
    }
}

/// Parses `text` into a word over `names` (each a single lowercase letter).
pub fn parse_word(text: &str, names: &[String]) -> Result<Word> {
    let chars: Vec<char> = text.chars().filter(|c| !c.is_whitespace() && *c != '*').collect();
    let mut syllables = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        i += 1;
        if c == 'e' && !names.iter().any(|n| n == "e") {
            continue;
        }
        if !c.is_ascii_alphabetic() {
            return Err(Error::invalid(format!("unexpected character '{c}' in word \"{text}\"")));
        }
        let lower = c.to_ascii_lowercase().to_string();
        let gen = names
            .iter()
            .position(|n| *n == lower)
            .ok_or_else(|| Error::invalid(format!("unknown generator '{c}' in word \"{text}\"")))?;
        let sign: i64 = if c.is_ascii_uppercase() { -1 } else { 1 };

        let mut exp: i64 = 1;
        let mut j = i;
        let caret = j < chars.len() && chars[j] == '^';
        if caret {
            j += 1;
        }
        let braced = j < chars.len() && chars[j] == '{';
        if braced {
            j += 1;
        }
        let mut negative = false;
        if (caret || braced) && j < chars.len() && chars[j] == '-' {
            negative = true;
            j += 1;
        }
        let start = j;
        while j < chars.len() && chars[j].is_ascii_digit() {
            j += 1;
        }
        if j > start {
            let digits: String = chars[start..j].iter().collect();
            exp = digits
                .parse()
                .map_err(|_| Error::invalid(format!("bad exponent in word \"{text}\"")))?;
            if negative {
                exp = -exp;
            }
        } else if caret || braced || negative {
            return Err(Error::invalid(format!("missing exponent in word \"{text}\"")));
        }
        if braced {
            if j < chars.len() && chars[j] == '}' {
                j += 1;
            } else {
                return Err(Error::invalid(format!("unclosed brace in word \"{text}\"")));
            }
        }
        i = j;
        if exp != 0 {
            syllables.push((gen, sign * exp));
        }
    }
    Ok(Word(syllables))
}

/// Splits a comma-separated generator list such as `a2,b` or `xa2b,xy,xY`.
pub fn split_generator_list(text: &str) -> Vec<&str> {
    let text = text.trim();
    let text = text.strip_prefix('<').and_then(|t| t.strip_suffix('>')).unwrap_or(text);
    text.split(',').map(str::trim).filter(|s| !s.is_empty()).collect()
}
