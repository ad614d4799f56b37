//! Finite groups realized by Cayley tables.
//!
//! Elements are identified by their position in a canonical order that is
//! fixed by each construction (see [`builders`]); the identity is always
//! element 0. Labels are the human-readable words used in every external
//! format, so they double as stable identifiers across runs.

pub mod builders;
pub mod lattice;
pub mod subgroup;

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::word::{parse_word, split_generator_list, Word};

pub use subgroup::Subgroup;

/// Index of an element in its group's canonical order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Elem(u32);

impl Elem {
    pub const IDENTITY: Elem = Elem(0);

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub(crate) fn from_index(i: usize) -> Self {
        Elem(i as u32)
    }
}

/// How a group was built. Serialized as `{"kind":"dihedral","n":6}` or
/// `{"kind":"p4m_quotient","N":2}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GroupDescriptor {
    Cyclic { n: usize },
    Dihedral { n: usize },
    P4mQuotient {
        #[serde(rename = "N")]
        n: usize,
    },
    /// A group supplied directly as a table; not reconstructible from the tag.
    Custom { name: String },
}

impl GroupDescriptor {
    /// Parses `dihedral:6`, `p4m_quotient:2` (also `p4m:2`), `cyclic:4`,
    /// `trivial`, or the JSON object form.
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.starts_with('{') {
            return serde_json::from_str(text)
                .map_err(|e| Error::invalid(format!("bad group descriptor JSON: {e}")));
        }
        if text == "trivial" {
            return Ok(GroupDescriptor::Cyclic { n: 1 });
        }
        if text == "hexagon" {
            return Ok(GroupDescriptor::Dihedral { n: 6 });
        }
        let (kind, arg) = text
            .split_once(':')
            .ok_or_else(|| Error::invalid(format!("bad group descriptor \"{text}\"")))?;
        let n: usize = arg
            .trim()
            .parse()
            .map_err(|_| Error::invalid(format!("bad group parameter \"{arg}\"")))?;
        match kind.trim() {
            "dihedral" | "D" => Ok(GroupDescriptor::Dihedral { n }),
            "cyclic" | "C" => Ok(GroupDescriptor::Cyclic { n }),
            "p4m_quotient" | "p4m" => Ok(GroupDescriptor::P4mQuotient { n }),
            other => Err(Error::invalid(format!("unknown group kind \"{other}\""))),
        }
    }

    pub fn build(&self) -> Result<Arc<FiniteGroup>> {
        match *self {
            GroupDescriptor::Cyclic { n } => builders::cyclic(n),
            GroupDescriptor::Dihedral { n } => builders::dihedral(n),
            GroupDescriptor::P4mQuotient { n } => builders::p4m_quotient(n),
            GroupDescriptor::Custom { ref name } => Err(Error::invalid(format!(
                "custom group \"{name}\" cannot be rebuilt from its descriptor"
            ))),
        }
    }
}

impl fmt::Display for GroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupDescriptor::Cyclic { n } => write!(f, "cyclic:{n}"),
            GroupDescriptor::Dihedral { n } => write!(f, "dihedral:{n}"),
            GroupDescriptor::P4mQuotient { n } => write!(f, "p4m_quotient:{n}"),
            GroupDescriptor::Custom { name } => write!(f, "custom:{name}"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Generator {
    pub name: String,
    pub elem: Elem,
}

pub struct FiniteGroup {
    descriptor: GroupDescriptor,
    table: Vec<u32>,
    inverse: Vec<u32>,
    labels: Vec<String>,
    label_index: HashMap<String, Elem>,
    generators: Vec<Generator>,
    relators: Vec<Word>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("descriptor", &self.descriptor)
            .field("order", &self.order())
            .finish()
    }
}

impl FiniteGroup {
    /// Builds a group from a multiplication table over `0..n`.
    ///
    /// Element 0 must be the identity. The table is checked for closure, the
    /// identity law and the existence of inverses; associativity is checked by
    /// [`FiniteGroup::check_axioms`].
    pub fn from_table(
        descriptor: GroupDescriptor,
        table: Vec<u32>,
        labels: Vec<String>,
        generators: Vec<(String, usize)>,
        relators: Vec<Word>,
    ) -> Result<Arc<FiniteGroup>> {
        let n = labels.len();
        if n == 0 || table.len() != n * n {
            return Err(Error::invalid("table size does not match the label count"));
        }
        if table.iter().any(|&v| v as usize >= n) {
            return Err(Error::invalid("table entry out of range"));
        }
        for a in 0..n {
            if table[a] as usize != a || table[a * n] as usize != a {
                return Err(Error::invalid("element 0 is not a two-sided identity"));
            }
        }
        let mut inverse = vec![u32::MAX; n];
        for a in 0..n {
            for b in 0..n {
                if table[a * n + b] == 0 {
                    if table[b * n + a] != 0 {
                        return Err(Error::invalid("one-sided inverse in table"));
                    }
                    inverse[a] = b as u32;
                    break;
                }
            }
            if inverse[a] == u32::MAX {
                return Err(Error::invalid(format!("element {} has no inverse", labels[a])));
            }
        }
        let mut label_index = HashMap::with_capacity(n);
        for (i, l) in labels.iter().enumerate() {
            if label_index.insert(l.clone(), Elem::from_index(i)).is_some() {
                return Err(Error::invalid(format!("duplicate label \"{l}\"")));
            }
        }
        let generators = generators
            .into_iter()
            .map(|(name, i)| {
                if i >= n {
                    Err(Error::invalid(format!("generator {name} out of range")))
                } else {
                    Ok(Generator { name, elem: Elem::from_index(i) })
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Arc::new(FiniteGroup {
            descriptor,
            table,
            inverse,
            labels,
            label_index,
            generators,
            relators,
        }))
    }

    pub fn descriptor(&self) -> &GroupDescriptor {
        &self.descriptor
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn identity(&self) -> Elem {
        Elem::IDENTITY
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        (0..self.order()).map(Elem::from_index)
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        Elem(self.table[a.index() * self.order() + b.index()])
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        Elem(self.inverse[a.index()])
    }

    /// `g x g⁻¹`.
    #[inline]
    pub fn conj(&self, g: Elem, x: Elem) -> Elem {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn pow(&self, a: Elem, k: i64) -> Elem {
        let base = if k < 0 { self.inv(a) } else { a };
        let mut acc = Elem::IDENTITY;
        for _ in 0..k.unsigned_abs() {
            acc = self.mul(acc, base);
        }
        acc
    }

    pub fn product(&self, elems: impl IntoIterator<Item = Elem>) -> Elem {
        elems.into_iter().fold(Elem::IDENTITY, |acc, e| self.mul(acc, e))
    }

    pub fn element_order(&self, a: Elem) -> usize {
        let mut k = 1;
        let mut x = a;
        while x != Elem::IDENTITY {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn label(&self, a: Elem) -> &str {
        &self.labels[a.index()]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn generator_names(&self) -> Vec<String> {
        self.generators.iter().map(|g| g.name.clone()).collect()
    }

    /// Defining relators of the construction, as words in the generators.
    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn eval_word(&self, word: &Word) -> Elem {
        word.syllables()
            .iter()
            .fold(Elem::IDENTITY, |acc, &(g, k)| self.mul(acc, self.pow(self.generators[g].elem, k)))
    }

    /// Resolves an element from its canonical label or from any word in the
    /// generators (`a2b`, `xY`, ...).
    pub fn parse_element(&self, text: &str) -> Result<Elem> {
        let text = text.trim();
        if let Some(&e) = self.label_index.get(text) {
            return Ok(e);
        }
        let word = parse_word(text, &self.generator_names())?;
        Ok(self.eval_word(&word))
    }

    /// Looks up an element by exact label only.
    pub fn element_by_label(&self, label: &str) -> Result<Elem> {
        self.label_index
            .get(label)
            .copied()
            .ok_or_else(|| Error::invalid(format!("unknown element label \"{label}\"")))
    }

    pub fn whole(self: &Arc<Self>) -> Subgroup {
        Subgroup::from_elements(self.clone(), self.elements())
    }

    pub fn trivial_subgroup(self: &Arc<Self>) -> Subgroup {
        Subgroup::from_elements(self.clone(), [Elem::IDENTITY])
    }

    /// Smallest subgroup containing `gens`.
    pub fn subgroup_generated(self: &Arc<Self>, gens: &[Elem]) -> Result<Subgroup> {
        if let Some(bad) = gens.iter().find(|g| g.index() >= self.order()) {
            return Err(Error::invalid(format!("unknown element index {}", bad.index())));
        }
        Ok(Subgroup::generated(self.clone(), gens))
    }

    /// Subgroup from the command-line mini-syntax: comma-separated generator
    /// words, e.g. `a2,b` for ⟨a²,b⟩. An empty string gives the trivial group.
    pub fn subgroup_from_words(self: &Arc<Self>, text: &str) -> Result<Subgroup> {
        let text = text.trim();
        let text = text.strip_prefix("H=").unwrap_or(text);
        let gens = split_generator_list(text)
            .into_iter()
            .map(|w| self.parse_element(w))
            .collect::<Result<Vec<_>>>()?;
        self.subgroup_generated(&gens)
    }

    /// Subgroup from an explicit list of labels; the list must be closed.
    pub fn subgroup_from_labels<S: AsRef<str>>(self: &Arc<Self>, labels: &[S]) -> Result<Subgroup> {
        let elems = labels
            .iter()
            .map(|l| self.parse_element(l.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        let s = Subgroup::generated(self.clone(), &elems);
        if s.order() != {
            let mut e = elems.clone();
            e.sort();
            e.dedup();
            e.len()
        } {
            return Err(Error::invalid("label list is not closed under the group operation"));
        }
        Ok(s)
    }

    /// Checks associativity, identity and inverse laws. Exhaustive when the
    /// order is at most `exhaustive_limit`, otherwise on a deterministic
    /// spread of triples. Returns the number of triples checked.
    pub fn check_axioms(&self, exhaustive_limit: usize) -> Result<usize> {
        let n = self.order();
        for a in self.elements() {
            if self.mul(a, self.inv(a)) != Elem::IDENTITY || self.mul(self.inv(a), a) != Elem::IDENTITY {
                return Err(Error::invalid(format!("inverse law fails at {}", self.label(a))));
            }
        }
        let check = |a: Elem, b: Elem, c: Elem| -> Result<()> {
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                Err(Error::invalid(format!(
                    "associativity fails at ({}, {}, {})",
                    self.label(a),
                    self.label(b),
                    self.label(c)
                )))
            } else {
                Ok(())
            }
        };
        let mut checked = 0;
        if n <= exhaustive_limit {
            for a in self.elements() {
                for b in self.elements() {
                    for c in self.elements() {
                        check(a, b, c)?;
                        checked += 1;
                    }
                }
            }
        } else {
            // stride through the triples with coprime steps
            let steps = 200_000usize;
            for s in 0..steps {
                let a = Elem::from_index((s * 7919) % n);
                let b = Elem::from_index((s * 104_729 + 13) % n);
                let c = Elem::from_index((s * 1_299_709 + 101) % n);
                check(a, b, c)?;
                checked += 1;
            }
        }
        Ok(checked)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn descriptor_parsing() {
        assert_eq!(GroupDescriptor::parse("dihedral:6").unwrap(), GroupDescriptor::Dihedral { n: 6 });
        assert_eq!(GroupDescriptor::parse("p4m:2").unwrap(), GroupDescriptor::P4mQuotient { n: 2 });
        assert_eq!(
            GroupDescriptor::parse(r#"{"kind":"p4m_quotient","N":4}"#).unwrap(),
            GroupDescriptor::P4mQuotient { n: 4 }
        );
        assert_eq!(
            serde_json::to_string(&GroupDescriptor::Dihedral { n: 6 }).unwrap(),
            r#"{"kind":"dihedral","n":6}"#
        );
        assert!(GroupDescriptor::parse("sphere:3").is_err());
        assert!(GroupDescriptor::parse("dihedral").is_err());
    }

    #[test]
    fn from_table_rejects_non_groups() {
        let labels = vec!["e".to_string(), "t".to_string()];
        // t*t = t: no inverse for t
        let err = FiniteGroup::from_table(
            GroupDescriptor::Custom { name: "bad".into() },
            vec![0, 1, 1, 1],
            labels,
            vec![],
            vec![],
        );
        assert!(err.is_err());
    }
}
