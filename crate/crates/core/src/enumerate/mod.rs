//! Census pipelines: all inequivalent semiperfect colorings for a color
//! group `H` of index 2, the closed-form counts, and the transfer of
//! colorings between color groups related by an automorphism.

mod automorphism;
mod tables;

pub use automorphism::{
    action_equivalence_check, conjugate_spec, find_conjugating_automorphism, ActionEquivalence,
    GroupAutomorphism, SEARCH_BUDGET,
};
pub use tables::{table1_csv, table1_rows, table3_rows, Table1Row, Table3Row};

use std::collections::HashSet;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::lattice::p_of_j;
use crate::group::{Elem, FiniteGroup, GroupDescriptor, Subgroup};
use crate::partition::{
    classify_type1, Classification, ColoringSpec, ColoringSpecJson, GroupPartition, PartitionJson, Verdict,
};

/// One inequivalent coloring.
#[derive(Clone, Debug)]
pub struct CensusEntry {
    pub spec: ColoringSpec,
    pub classification: Classification,
    /// The smaller of `P` and `yP` for a fixed `y ∉ H`; equal keys mean
    /// equivalent colorings.
    pub equivalence_key: GroupPartition,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CensusEntryJson {
    pub spec: ColoringSpecJson,
    pub verdict: Verdict,
    pub num_colors: usize,
    pub num_color_orbits: usize,
    pub kernel_order: usize,
    pub color_perm_group_order: usize,
    pub equivalence_key: PartitionJson,
}

impl CensusEntry {
    pub fn new(spec: ColoringSpec) -> Result<Self> {
        let classification = spec.classification()?;
        let equivalence_key = equivalence_key(spec.h(), spec.partition());
        Ok(CensusEntry { spec, classification, equivalence_key })
    }

    pub fn to_json(&self) -> CensusEntryJson {
        let c = &self.classification;
        CensusEntryJson {
            spec: self.spec.to_json(),
            verdict: c.verdict,
            num_colors: c.num_colors,
            num_color_orbits: c.num_color_orbits,
            kernel_order: c.kernel_order,
            color_perm_group_order: c.color_perm_group_order,
            equivalence_key: self.equivalence_key.to_json(),
        }
    }
}

/// `min(P, yP)` with `y` the smallest element outside `H`.
pub fn equivalence_key(h: &Subgroup, p: &GroupPartition) -> GroupPartition {
    let y = canonical_outside(h);
    let q = p.translate(y);
    if q < *p {
        q
    } else {
        p.clone()
    }
}

/// The canonically smallest element of `G ∖ H`.
pub fn canonical_outside(h: &Subgroup) -> Elem {
    h.group().elements().find(|&e| !h.contains(e)).expect("H is proper")
}

fn check_index_two(h: &Subgroup) -> Result<()> {
    if h.index() != 2 {
        return Err(Error::invalid(format!("H has index {} in G, expected 2", h.index())));
    }
    Ok(())
}

/// Which pipelines to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum TypeSelection {
    TypeI,
    TypeII,
    #[default]
    All,
}

#[derive(Clone, Debug, Default)]
pub struct Constraints {
    pub max_colors: Option<usize>,
    pub orbit_count: Option<usize>,
    /// Color groups to use; all index-2 subgroups when `None`.
    pub h_filter: Option<Vec<Subgroup>>,
    /// When `α(H₁) = H₂` for a listed `α` and `H₁` was already processed,
    /// the census for `H₂` is the image of `H₁`'s census.
    pub reduce_by_normalizer: Vec<GroupAutomorphism>,
    pub types: TypeSelection,
}

impl Constraints {
    fn allows_colors(&self, n: usize) -> bool {
        self.max_colors.is_none_or(|m| n <= m)
    }

    fn allows_orbits(&self, n: usize) -> bool {
        self.orbit_count.is_none_or(|m| n == m)
    }
}

/// All inequivalent semiperfect Type II colorings for `H`: one per
/// unordered pair `{J₁, J₂}` of distinct subgroups of `H`, with `J₁` the
/// smaller in canonical order and `y` the smallest element outside `H`.
pub fn enumerate_type2(h: &Subgroup, constraints: &Constraints) -> Result<Vec<CensusEntry>> {
    check_index_two(h)?;
    if !constraints.allows_orbits(2) {
        return Ok(Vec::new());
    }
    let subs = h.all_subgroups()?;
    let y = canonical_outside(h);
    let mut out = Vec::new();
    for (i, j1) in subs.iter().enumerate() {
        for j2 in &subs[i + 1..] {
            let colors = j1.index_in(h)? + j2.index_in(h)?;
            if !constraints.allows_colors(colors) {
                continue;
            }
            out.push(CensusEntry::new(ColoringSpec::type2(h, j1, j2, y)?)?);
        }
    }
    Ok(out)
}

/// One cell of the `(l, rˡ)` grid for a class representative `J`.
#[derive(Clone, Debug)]
pub struct GridCell {
    pub l: Elem,
    pub r: Elem,
    pub verdict: Verdict,
    pub spec: ColoringSpec,
    pub key: GroupPartition,
}

/// The full grid of Type I partitions `Pˡ(rˡ)` for one representative `J`:
/// `l` over left coset representatives of `N_H(J)` in `H`, `r` over the
/// canonical right coset representatives of `J` outside `H`, conjugated by
/// `l`.
pub fn type1_grid(h: &Subgroup, j: &Subgroup) -> Result<Vec<GridCell>> {
    check_index_two(h)?;
    let group = h.group();
    let nh = h.normalizer(j)?;
    let ls = h.left_coset_reps(&nh)?;
    let rs = j.right_coset_reps_outside(h)?;
    let mut cells = Vec::with_capacity(ls.len() * rs.len());
    for &l in &ls {
        let jl = j.conjugate(l);
        for &r in &rs {
            let rl = group.conj(l, r);
            let verdict = classify_type1(&jl, rl, h)?;
            let spec = ColoringSpec::type1(h, j, l, rl)?;
            let key = equivalence_key(h, spec.partition());
            cells.push(GridCell { l, r: rl, verdict, spec, key });
        }
    }
    Ok(cells)
}

/// The number of inequivalent semiperfect Type I colorings contributed by
/// the class representative `J`:
/// `[H:N_H(J)]·[H:J]` when `N_G(J) = N_H(J)`, otherwise
/// `½[H:N_H(J)]([H:J] − p(J))`.
pub fn count_type1_semiperfect(h: &Subgroup, j: &Subgroup) -> Result<usize> {
    check_index_two(h)?;
    let ng = h.group().whole().normalizer(j)?;
    let nh = h.normalizer(j)?;
    let outer = nh.index_in(h)?;
    let idx = j.index_in(h)?;
    if ng == nh {
        Ok(outer * idx)
    } else {
        let p = p_of_j(h, j)?;
        Ok(outer * (idx - p) / 2)
    }
}

/// Semiperfect Type I colorings for `H`, one per equivalence class.
pub fn enumerate_type1(h: &Subgroup, constraints: &Constraints) -> Result<Vec<CensusEntry>> {
    check_index_two(h)?;
    if !constraints.allows_orbits(1) {
        return Ok(Vec::new());
    }
    let reps = h.conjugacy_class_reps_of_subgroups(&h.group().whole())?;
    let mut out = Vec::new();
    for j in reps.iter().filter(|j| *j != h) {
        if !constraints.allows_colors(j.index_in(h)?) {
            continue;
        }
        out.extend(type1_entries_for(h, j)?);
    }
    Ok(out)
}

/// The deduplicated semiperfect cells of one grid.
pub fn type1_entries_for(h: &Subgroup, j: &Subgroup) -> Result<Vec<CensusEntry>> {
    let mut seen: HashSet<GroupPartition> = HashSet::new();
    let mut out = Vec::new();
    for cell in type1_grid(h, j)? {
        if cell.verdict == Verdict::Semiperfect && seen.insert(cell.key.clone()) {
            out.push(CensusEntry::new(cell.spec)?);
        }
    }
    Ok(out)
}

/// Counts for one color group.
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct HSummary {
    #[serde(rename = "H")]
    pub h: String,
    pub type1: usize,
    pub type2: usize,
    /// Name of the automorphism the census was transported by, if any.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub transported_by: Option<String>,
}

#[derive(Clone, Debug)]
pub struct Census {
    pub group: Arc<FiniteGroup>,
    pub entries: Vec<CensusEntry>,
    pub per_h: Vec<HSummary>,
    /// Limits of a finite-quotient census, when applicable.
    pub scope_note: Option<String>,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CensusJson {
    pub group: GroupDescriptor,
    pub total: usize,
    pub per_h: Vec<HSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub scope_note: Option<String>,
    pub entries: Vec<CensusEntryJson>,
}

impl Census {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn to_json(&self) -> CensusJson {
        CensusJson {
            group: self.group.descriptor().clone(),
            total: self.entries.len(),
            per_h: self.per_h.clone(),
            scope_note: self.scope_note.clone(),
            entries: self.entries.iter().map(CensusEntry::to_json).collect(),
        }
    }

    /// One row per entry: `H,kind,J or J1|J2,l,r or y,verdict,colors,orbits`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("H,kind,subgroups,l,element,verdict,numColors,numColorOrbits,colorPermGroupOrder\n");
        let g = &self.group;
        for e in &self.entries {
            let (kind, subs, l, x) = match e.spec.kind() {
                crate::partition::SpecKind::TypeI { j, l, r } => {
                    ("type1", j.display_name(), g.label(*l).to_string(), g.label(*r).to_string())
                }
                crate::partition::SpecKind::TypeII { j1, j2, y } => (
                    "type2",
                    format!("{}|{}", j1.display_name(), j2.display_name()),
                    String::new(),
                    g.label(*y).to_string(),
                ),
            };
            let c = &e.classification;
            out.push_str(&format!(
                "\"{}\",{},\"{}\",{},{},{},{},{},{}\n",
                e.spec.h().display_name(),
                kind,
                subs,
                l,
                x,
                c.verdict,
                c.num_colors,
                c.num_color_orbits,
                c.color_perm_group_order
            ));
        }
        out
    }
}

/// Union of the Type I and Type II censuses over the selected color groups.
/// Colorings with different color groups are never equivalent, so the
/// per-group censuses are simply concatenated.
pub fn enumerate_all_semiperfect(group: &Arc<FiniteGroup>, constraints: &Constraints) -> Result<Census> {
    let hs = match &constraints.h_filter {
        Some(list) => {
            for h in list {
                if !Arc::ptr_eq(h.group(), group) {
                    return Err(Error::invalid("H filter entry belongs to a different group"));
                }
                check_index_two(h)?;
            }
            list.clone()
        }
        None => group.subgroups_of_index(2)?,
    };
    let mut entries = Vec::new();
    let mut per_h = Vec::new();
    let mut done: Vec<(Subgroup, Vec<CensusEntry>)> = Vec::new();
    for h in &hs {
        let transport = done.iter().find_map(|(prev, prev_entries)| {
            constraints
                .reduce_by_normalizer
                .iter()
                .find(|alpha| alpha.apply_subgroup(prev) == *h)
                .map(|alpha| (alpha, prev_entries))
        });
        let (list, via) = match transport {
            Some((alpha, prev_entries)) => {
                let moved = prev_entries
                    .iter()
                    .map(|e| CensusEntry::new(conjugate_spec(&e.spec, alpha)?))
                    .collect::<Result<Vec<_>>>()?;
                (moved, Some(alpha.describe()))
            }
            None => {
                let mut list = Vec::new();
                if constraints.types != TypeSelection::TypeI {
                    list.extend(enumerate_type2(h, constraints)?);
                }
                if constraints.types != TypeSelection::TypeII {
                    list.extend(enumerate_type1(h, constraints)?);
                }
                (list, None)
            }
        };
        let type1 = list.iter().filter(|e| e.spec.is_type1()).count();
        per_h.push(HSummary {
            h: h.display_name(),
            type1,
            type2: list.len() - type1,
            transported_by: via,
        });
        entries.extend(list.iter().cloned());
        done.push((h.clone(), list));
    }
    let scope_note = match group.descriptor() {
        GroupDescriptor::P4mQuotient { n } => Some(format!(
            "finite quotient by <x^{n},y^{n}>: only subgroups containing these translations are represented"
        )),
        _ => None,
    };
    Ok(Census { group: group.clone(), entries, per_h, scope_note })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::builders::dihedral;

    #[test]
    fn hexagon_type2_counts() {
        let g = dihedral(6).unwrap();
        let h = g.subgroup_from_words("a2,b").unwrap();
        let c = Constraints::default();
        assert_eq!(enumerate_type2(&h, &c).unwrap().len(), 15);
        let rot = g.subgroup_from_words("a").unwrap();
        assert_eq!(enumerate_type2(&rot, &c).unwrap().len(), 6);
    }

    #[test]
    fn hexagon_type1_counts() {
        let g = dihedral(6).unwrap();
        let h = g.subgroup_from_words("a2,b").unwrap();
        let c = Constraints::default();
        assert_eq!(enumerate_type1(&h, &c).unwrap().len(), 4);
        let rot = g.subgroup_from_words("a").unwrap();
        assert_eq!(enumerate_type1(&rot, &c).unwrap().len(), 0);
        let sub = |w: &str| g.subgroup_from_words(w).unwrap();
        assert_eq!(count_type1_semiperfect(&h, &sub("b")).unwrap(), 3);
        assert_eq!(count_type1_semiperfect(&h, &g.trivial_subgroup()).unwrap(), 1);
        assert_eq!(count_type1_semiperfect(&h, &h).unwrap(), 0);
        assert_eq!(count_type1_semiperfect(&h, &sub("a2")).unwrap(), 0);
        assert_eq!(type1_entries_for(&h, &sub("b")).unwrap().len(), 3);
    }

    #[test]
    fn hexagon_full_census() {
        let g = dihedral(6).unwrap();
        let c = Constraints {
            h_filter: Some(vec![g.subgroup_from_words("a2,b").unwrap(), g.subgroup_from_words("a").unwrap()]),
            ..Default::default()
        };
        let census = enumerate_all_semiperfect(&g, &c).unwrap();
        assert_eq!(census.len(), 25);
        let parts: Vec<(usize, usize)> = census.per_h.iter().map(|s| (s.type2, s.type1)).collect();
        assert_eq!(parts, [(15, 4), (6, 0)]);
    }

    #[test]
    fn one_color_is_never_semiperfect() {
        let g = dihedral(6).unwrap();
        let c = Constraints { max_colors: Some(1), ..Default::default() };
        assert!(enumerate_all_semiperfect(&g, &c).unwrap().is_empty());
    }

    #[test]
    fn transported_census_matches_direct_one() {
        let g = dihedral(6).unwrap();
        let h = g.subgroup_from_words("a2,b").unwrap();
        let hp = g.subgroup_from_words("a2,ab").unwrap();
        let alpha = GroupAutomorphism::parse(&g, "a->a5,b->ab").unwrap();
        let direct = enumerate_all_semiperfect(
            &g,
            &Constraints { h_filter: Some(vec![h.clone(), hp.clone()]), ..Default::default() },
        )
        .unwrap();
        let moved = enumerate_all_semiperfect(
            &g,
            &Constraints { h_filter: Some(vec![h, hp]), reduce_by_normalizer: vec![alpha], ..Default::default() },
        )
        .unwrap();
        assert_eq!(direct.len(), moved.len());
        assert!(moved.per_h[1].transported_by.is_some());
        let keys = |c: &Census| {
            let mut k: Vec<GroupPartition> = c.entries.iter().map(|e| e.equivalence_key.clone()).collect();
            k.sort();
            k
        };
        assert_eq!(keys(&direct), keys(&moved));
    }

    #[test]
    fn census_is_deterministic() {
        let g = dihedral(6).unwrap();
        let a = serde_json::to_string(&enumerate_all_semiperfect(&g, &Constraints::default()).unwrap().to_json()).unwrap();
        let b = serde_json::to_string(&enumerate_all_semiperfect(&g, &Constraints::default()).unwrap().to_json()).unwrap();
        assert_eq!(a, b);
    }
}
