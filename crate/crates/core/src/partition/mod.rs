//! Partitions of a finite group into blocks, with the brute-force oracles
//! (stabilizer, translation orbit, equivalence witness) that every fast
//! classifier is checked against.

mod classify;
mod construct;
mod spec;

pub use classify::{
    classify_type1, classify_type2, classify_type2_unnormalized, color_action, cycle_notation,
    type1_analysis, Classification, ColorAction, Type1Analysis, Verdict,
};
pub use construct::{general_partition, type1_partition, type2_partition, type2_unnormalized_partition};
pub use spec::{normalize_spec, ColoringSpec, ColoringSpecJson, NormalizedType1, SpecKind};

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{Elem, FiniteGroup, Subgroup};

/// A partition of a group's elements in canonical form: each block sorted,
/// blocks ordered by their smallest member.
#[derive(Clone)]
pub struct GroupPartition {
    group: Arc<FiniteGroup>,
    blocks: Vec<Vec<Elem>>,
    owner: Vec<u32>,
}

/// File form: `{"blocks": [["e","a^2b"], ...]}` in canonical order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionJson {
    pub blocks: Vec<Vec<String>>,
}

impl GroupPartition {
    /// Validates and canonicalizes a block family.
    pub fn from_blocks(group: Arc<FiniteGroup>, blocks: Vec<Vec<Elem>>) -> Result<Self> {
        let n = group.order();
        let mut owner = vec![u32::MAX; n];
        let mut blocks: Vec<Vec<Elem>> = blocks
            .into_iter()
            .map(|mut b| {
                b.sort();
                b.dedup();
                b
            })
            .collect();
        if blocks.iter().any(Vec::is_empty) {
            return Err(Error::NotAPartition("empty block".into()));
        }
        blocks.sort_by_key(|b| b[0]);
        for (i, b) in blocks.iter().enumerate() {
            for &e in b {
                if e.index() >= n {
                    return Err(Error::invalid(format!("unknown element index {}", e.index())));
                }
                let prev = owner[e.index()];
                if prev != u32::MAX {
                    return Err(Error::NotAPartition(format!(
                        "element {} lies in two blocks: {} and {}",
                        group.label(e),
                        block_text(&group, &blocks[prev as usize]),
                        block_text(&group, b)
                    )));
                }
                owner[e.index()] = i as u32;
            }
        }
        if let Some(missing) = owner.iter().position(|&o| o == u32::MAX) {
            return Err(Error::NotAPartition(format!(
                "element {} is not covered",
                group.label(Elem::from_index(missing))
            )));
        }
        Ok(GroupPartition { group, blocks, owner })
    }

    pub fn from_json(group: Arc<FiniteGroup>, json: &PartitionJson) -> Result<Self> {
        let blocks = json
            .blocks
            .iter()
            .map(|b| b.iter().map(|l| group.parse_element(l)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::from_blocks(group, blocks)
    }

    pub fn to_json(&self) -> PartitionJson {
        PartitionJson { blocks: self.label_blocks() }
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn blocks(&self) -> &[Vec<Elem>] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// Index of the block containing `e`.
    pub fn block_of(&self, e: Elem) -> usize {
        self.owner[e.index()] as usize
    }

    /// Block index for every element, in canonical element order.
    pub fn assignment(&self) -> Vec<usize> {
        self.owner.iter().map(|&o| o as usize).collect()
    }

    pub fn label_blocks(&self) -> Vec<Vec<String>> {
        self.blocks
            .iter()
            .map(|b| b.iter().map(|&e| self.group.label(e).to_string()).collect())
            .collect()
    }

    /// Image of every block under an element map, re-canonicalized.
    pub fn map_elements(&self, f: impl Fn(Elem) -> Elem) -> Result<Self> {
        let blocks = self.blocks.iter().map(|b| b.iter().map(|&e| f(e)).collect()).collect();
        Self::from_blocks(self.group.clone(), blocks)
    }

    /// `gP = {gB : B ∈ P}`.
    pub fn translate(&self, g: Elem) -> Self {
        self.map_elements(|e| self.group.mul(g, e)).expect("left translation is a bijection")
    }

    /// Permutation of block indices induced by `g`, if `gP = P`.
    pub fn induced_permutation(&self, g: Elem) -> Option<Vec<usize>> {
        let mut perm = Vec::with_capacity(self.blocks.len());
        for b in &self.blocks {
            let target = self.block_of(self.group.mul(g, b[0]));
            if self.blocks[target].len() != b.len()
                || b.iter().any(|&e| self.block_of(self.group.mul(g, e)) != target)
            {
                return None;
            }
            perm.push(target);
        }
        Some(perm)
    }

    pub fn is_stabilized_by(&self, g: Elem) -> bool {
        self.induced_permutation(g).is_some()
    }

    /// `{g ∈ G : gP = P}`, by testing every element.
    pub fn stabilizer(&self) -> Subgroup {
        let elems: Vec<Elem> = self.group.elements().filter(|&g| self.is_stabilized_by(g)).collect();
        Subgroup::from_elements(self.group.clone(), elems)
    }

    /// `{gP : g ∈ G}`, sorted and without repeats.
    pub fn equivalence_class(&self) -> Vec<GroupPartition> {
        let mut out: Vec<GroupPartition> = self.group.elements().map(|g| self.translate(g)).collect();
        out.sort();
        out.dedup();
        out
    }

    /// Some `g` with `other = gP`, smallest first.
    pub fn equivalent(&self, other: &GroupPartition) -> Option<Elem> {
        if !Arc::ptr_eq(&self.group, &other.group) || self.num_blocks() != other.num_blocks() {
            return None;
        }
        self.group.elements().find(|&g| self.translate(g) == *other)
    }
}

fn block_text(group: &FiniteGroup, block: &[Elem]) -> String {
    let labels: Vec<&str> = block.iter().map(|&e| group.label(e)).collect();
    format!("{{{}}}", labels.join(","))
}

impl PartialEq for GroupPartition {
    fn eq(&self, other: &Self) -> bool {
        self.blocks == other.blocks
    }
}

impl Eq for GroupPartition {}

impl PartialOrd for GroupPartition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GroupPartition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.blocks.cmp(&other.blocks)
    }
}

impl std::hash::Hash for GroupPartition {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.blocks.hash(state);
    }
}

impl fmt::Display for GroupPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.blocks.iter().map(|b| block_text(&self.group, b)).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl fmt::Debug for GroupPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
