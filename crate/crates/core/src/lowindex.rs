//! Finitely presented groups and low-index subgroup counts.
//!
//! Index-`k` subgroups of a presented group correspond to transitive actions
//! on `{0, …, k-1}` up to relabelings fixing point 0: the subgroup is the
//! stabilizer of point 0. Actions are found by exhaustive backtracking over
//! generator images in the symmetric group, each candidate tested against
//! every relator, and deduplicated through a canonical coset table.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{Elem, FiniteGroup};
use crate::word::{parse_word, Word};

/// Cap on `|S_k|^(#generators)`, the size of the naive search space.
pub const MAX_SEARCH_SPACE: u128 = 10_000_000;
pub const MAX_INDEX: usize = 5;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    generators: Vec<String>,
    relators: Vec<Word>,
}

/// File form: relators are letter strings with uppercase for inverses.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PresentationJson {
    pub generators: Vec<String>,
    pub relators: Vec<String>,
}

/// `p4m` in generators `a, b, x, y`.
pub const P4M_RELATORS: [&str; 8] = ["aaaa", "bb", "abab", "xyXY", "axAY", "ayAx", "bxBX", "byBy"];

/// The index-2 subgroup `⟨a, ab, xy, x⁻¹y⟩` of `p4m` on its own generators
/// `a, b, u, v` with `u = xy`, `v = x⁻¹y`.
pub const H_P4M_SUB_RELATORS: [&str; 8] = ["aaaa", "bb", "abab", "uvUV", "auAV", "avAu", "buBv", "bvBu"];

/// The index-2 subgroup `⟨xa, ab, xy, x⁻¹y⟩` of `p4m` on generators
/// `a, b, u, v` with `a = xa`, `b = ab`, `u = xy`, `v = x⁻¹y`.
pub const H_P4M_SUB_PRIME_RELATORS: [&str; 8] =
    ["aaaa", "bb", "abab", "uvUV", "auAV", "avAu", "buBU", "bvBv"];

impl Presentation {
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> Result<Self> {
        for r in &relators {
            if r.max_generator().is_some_and(|g| g >= generators.len()) {
                return Err(Error::invalid("relator uses an undeclared generator"));
            }
        }
        Ok(Presentation { generators, relators })
    }

    pub fn from_strings(generators: &[&str], relators: &[&str]) -> Result<Self> {
        let names: Vec<String> = generators.iter().map(|s| s.to_string()).collect();
        if names.iter().any(|n| n.len() != 1 || !n.chars().all(|c| c.is_ascii_lowercase()) || n == "e") {
            return Err(Error::invalid("generator names must be single lowercase letters other than e"));
        }
        let rels = relators.iter().map(|r| parse_word(r, &names)).collect::<Result<Vec<_>>>()?;
        Presentation::new(names, rels)
    }

    pub fn from_json(json: &PresentationJson) -> Result<Self> {
        let gens: Vec<&str> = json.generators.iter().map(String::as_str).collect();
        let rels: Vec<&str> = json.relators.iter().map(String::as_str).collect();
        Self::from_strings(&gens, &rels)
    }

    pub fn to_json(&self) -> PresentationJson {
        PresentationJson {
            generators: self.generators.clone(),
            relators: self.relators.iter().map(|r| r.to_letters(&self.generators)).collect(),
        }
    }

    /// Built-in presentations: `p4m`, `H_p4m_sub`, `H_p4m_sub_prime`.
    pub fn builtin(name: &str) -> Result<Self> {
        match name {
            "p4m" => Self::from_strings(&["a", "b", "x", "y"], &P4M_RELATORS),
            "H_p4m_sub" => Self::from_strings(&["a", "b", "u", "v"], &H_P4M_SUB_RELATORS),
            "H_p4m_sub_prime" => Self::from_strings(&["a", "b", "u", "v"], &H_P4M_SUB_PRIME_RELATORS),
            other => Err(Error::invalid(format!("unknown built-in presentation \"{other}\""))),
        }
    }

    /// Words in the `p4m` generators giving the images of a built-in
    /// presentation's generators inside the `p4m` quotient.
    pub fn builtin_embedding(name: &str) -> Result<Vec<&'static str>> {
        match name {
            "p4m" => Ok(vec!["a", "b", "x", "y"]),
            "H_p4m_sub" => Ok(vec!["a", "b", "xy", "x^-1y"]),
            "H_p4m_sub_prime" => Ok(vec!["xa", "ab", "xy", "x^-1y"]),
            other => Err(Error::invalid(format!("unknown built-in presentation \"{other}\""))),
        }
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    /// Checks that every relator evaluates to the identity when the
    /// generators are sent to `images` in `group`.
    pub fn holds_in(&self, group: &FiniteGroup, images: &[Elem]) -> bool {
        images.len() == self.generators.len()
            && self.relators.iter().all(|r| {
                let e = r
                    .syllables()
                    .iter()
                    .fold(Elem::IDENTITY, |acc, &(g, k)| group.mul(acc, group.pow(images[g], k)));
                e == Elem::IDENTITY
            })
    }
}

type Perm = Vec<u8>;

fn all_perms(k: usize) -> Vec<Perm> {
    // lexicographic order
    let mut out = Vec::new();
    let mut p: Perm = (0..k as u8).collect();
    loop {
        out.push(p.clone());
        let Some(i) = (0..k.saturating_sub(1)).rev().find(|&i| p[i] < p[i + 1]) else {
            break;
        };
        let j = (i + 1..k).rev().find(|&j| p[j] > p[i]).expect("successor exists");
        p.swap(i, j);
        p[i + 1..].reverse();
    }
    out
}

/// Applies the word as a right action on a point.
fn act(point: u8, word: &Word, images: &[&Perm], inverses: &[Perm]) -> u8 {
    let mut pt = point;
    for &(g, k) in word.syllables() {
        let p = if k < 0 { &inverses[g] } else { images[g] };
        for _ in 0..k.unsigned_abs() {
            pt = p[pt as usize];
        }
    }
    pt
}

fn invert(p: &Perm) -> Perm {
    let mut inv = vec![0; p.len()];
    for (i, &v) in p.iter().enumerate() {
        inv[v as usize] = i as u8;
    }
    inv
}

/// Relabels points in order of discovery from point 0 and returns the
/// resulting action table, or `None` if the action is not transitive.
fn canonical_table(images: &[&Perm], k: usize) -> Option<Vec<u8>> {
    let inverses: Vec<Perm> = images.iter().map(|p| invert(p)).collect();
    let mut label = vec![u8::MAX; k];
    let mut order = vec![0u8];
    label[0] = 0;
    let mut cursor = 0;
    while cursor < order.len() {
        let pt = order[cursor] as usize;
        cursor += 1;
        for p in images.iter().map(|p| &p[..]).chain(inverses.iter().map(|p| &p[..])) {
            let q = p[pt] as usize;
            if label[q] == u8::MAX {
                label[q] = order.len() as u8;
                order.push(q as u8);
            }
        }
    }
    if order.len() != k {
        return None;
    }
    let mut table = Vec::with_capacity(k * images.len());
    for &pt in &order {
        for p in images {
            table.push(label[p[pt as usize] as usize]);
        }
    }
    Some(table)
}

/// Result of a low-index search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct LowIndexReport {
    pub index: usize,
    pub subgroups: usize,
    /// Transitive homomorphisms found; equals `subgroups · (k-1)!`.
    pub transitive_actions: usize,
}

/// Number of subgroups of index `k` in the presented group.
pub fn low_index_subgroup_count(p: &Presentation, k: usize) -> Result<usize> {
    Ok(low_index_search(p, k)?.subgroups)
}

pub fn low_index_search(p: &Presentation, k: usize) -> Result<LowIndexReport> {
    if k == 0 {
        return Err(Error::invalid("index must be positive"));
    }
    let factorial: u128 = (1..=k as u128).product();
    let space = factorial.checked_pow(p.generators.len() as u32).unwrap_or(u128::MAX);
    if k > MAX_INDEX || space > MAX_SEARCH_SPACE {
        return Err(Error::ResourceLimit {
            what: format!("low-index search space (|S_{k}|^{})", p.generators.len()),
            bound: MAX_SEARCH_SPACE as u64,
        });
    }
    let perms = all_perms(k);
    let ngen = p.generators.len();
    // relators become checkable once their largest generator is assigned
    let mut checks: Vec<Vec<&Word>> = vec![Vec::new(); ngen.max(1)];
    for r in &p.relators {
        if let Some(g) = r.max_generator() { checks[g].push(r) }
    }

    let mut tables = BTreeSet::new();
    let mut transitive = 0usize;
    let mut chosen: Vec<usize> = Vec::with_capacity(ngen);

    fn recurse(
        depth: usize,
        ngen: usize,
        k: usize,
        perms: &[Perm],
        checks: &[Vec<&Word>],
        chosen: &mut Vec<usize>,
        tables: &mut BTreeSet<Vec<u8>>,
        transitive: &mut usize,
    ) {
        if depth == ngen {
            let images: Vec<&Perm> = chosen.iter().map(|&i| &perms[i]).collect();
            if let Some(t) = canonical_table(&images, k) {
                *transitive += 1;
                tables.insert(t);
            }
            return;
        }
        for idx in 0..perms.len() {
            chosen.push(idx);
            let images: Vec<&Perm> = chosen.iter().map(|&i| &perms[i]).collect();
            let inverses: Vec<Perm> = images.iter().map(|p| invert(p)).collect();
            let ok = checks[depth]
                .iter()
                .all(|r| (0..k as u8).all(|pt| act(pt, r, &images, &inverses) == pt));
            if ok {
                recurse(depth + 1, ngen, k, perms, checks, chosen, tables, transitive);
            }
            chosen.pop();
        }
    }

    if ngen == 0 {
        // the trivial group only has index-1 subgroups
        let n = usize::from(k == 1);
        return Ok(LowIndexReport { index: k, subgroups: n, transitive_actions: n });
    }
    recurse(0, ngen, k, &perms, &checks, &mut chosen, &mut tables, &mut transitive);
    Ok(LowIndexReport { index: k, subgroups: tables.len(), transitive_actions: transitive })
}
