//! Subgroup lattices, conjugacy classes of subgroups, and the involution
//! count `p(J)` used by the Type I counting formula.

use std::collections::HashMap;
use std::sync::OnceLock;

use fixedbitset::FixedBitSet;

use super::subgroup::closure;
use super::{Elem, FiniteGroup, Subgroup};
use crate::error::{Error, Result};

pub const DEFAULT_MAX_ORDER: usize = 512;

/// Largest group order whose subgroup lattice will be enumerated.
/// `SEMICOLOR_MAX_ORDER` overrides the default of 512.
pub fn max_lattice_order() -> usize {
    static BOUND: OnceLock<usize> = OnceLock::new();
    *BOUND.get_or_init(|| {
        std::env::var("SEMICOLOR_MAX_ORDER")
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .unwrap_or(DEFAULT_MAX_ORDER)
    })
}

impl FiniteGroup {
    pub fn all_subgroups(self: &std::sync::Arc<Self>) -> Result<Vec<Subgroup>> {
        self.whole().all_subgroups()
    }

    pub fn subgroups_of_index(self: &std::sync::Arc<Self>, k: usize) -> Result<Vec<Subgroup>> {
        self.whole().subgroups_of_index(k)
    }
}

impl Subgroup {
    /// Every subgroup of `self`, ordered by size and then member list.
    ///
    /// Cyclic subgroups are collected first; the frontier is then repeatedly
    /// joined with each cyclic subgroup until no new subgroup appears. Every
    /// subgroup is a join of cyclic subgroups, so the fixpoint is the full
    /// lattice.
    pub fn all_subgroups(&self) -> Result<Vec<Subgroup>> {
        let bound = max_lattice_order();
        if self.order() > bound {
            return Err(Error::ResourceLimit {
                what: format!("subgroup lattice of a group of order {}", self.order()),
                bound: bound as u64,
            });
        }
        let group = self.group();
        let mut index: HashMap<FixedBitSet, usize> = HashMap::new();
        let mut found: Vec<(FixedBitSet, Vec<Elem>)> = Vec::new();
        let mut cyclic: Vec<Elem> = Vec::new();

        for &g in self.members() {
            let bits = closure(group, &[g]);
            if !index.contains_key(&bits) {
                index.insert(bits.clone(), found.len());
                found.push((bits, vec![g]));
                cyclic.push(g);
            }
        }

        let mut frontier: Vec<usize> = (0..found.len()).collect();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for &i in &frontier {
                for &c in &cyclic {
                    if found[i].0.contains(c.index()) {
                        continue;
                    }
                    let mut gens = found[i].1.clone();
                    gens.push(c);
                    let bits = closure(group, &gens);
                    if !index.contains_key(&bits) {
                        index.insert(bits.clone(), found.len());
                        found.push((bits, gens));
                        next.push(found.len() - 1);
                    }
                }
            }
            frontier = next;
        }

        let mut subs: Vec<Subgroup> =
            found.into_iter().map(|(bits, _)| Subgroup::from_bits(group.clone(), bits)).collect();
        subs.sort();
        Ok(subs)
    }

    /// Subgroups of index `k` in `self`.
    pub fn subgroups_of_index(&self, k: usize) -> Result<Vec<Subgroup>> {
        if k == 0 {
            return Err(Error::invalid("index must be positive"));
        }
        if !self.order().is_multiple_of(k) {
            return Ok(Vec::new());
        }
        let target = self.order() / k;
        Ok(self.all_subgroups()?.into_iter().filter(|s| s.order() == target).collect())
    }

    /// Conjugacy classes of subgroups of `self` under conjugation by
    /// `conjugators`. Each class is returned with its canonically smallest
    /// member first; classes are ordered by that representative.
    pub fn subgroup_conjugacy_classes(&self, conjugators: &Subgroup) -> Result<Vec<Vec<Subgroup>>> {
        self.check_ambient(conjugators)?;
        let subs = self.all_subgroups()?;
        let lookup: HashMap<&FixedBitSet, usize> =
            subs.iter().enumerate().map(|(i, s)| (s.bits(), i)).collect();
        let gens = conjugators.generators();
        let mut class_of = vec![usize::MAX; subs.len()];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for start in 0..subs.len() {
            if class_of[start] != usize::MAX {
                continue;
            }
            let id = classes.len();
            class_of[start] = id;
            let mut members = vec![start];
            let mut cursor = 0;
            while cursor < members.len() {
                let s = &subs[members[cursor]];
                cursor += 1;
                for &g in &gens {
                    let conj = s.conjugate(g);
                    let &j = lookup.get(conj.bits()).ok_or_else(|| {
                        Error::invalid(format!(
                            "conjugating {} by {} leaves the subgroup",
                            s.display_name(),
                            self.group().label(g)
                        ))
                    })?;
                    if class_of[j] == usize::MAX {
                        class_of[j] = id;
                        members.push(j);
                    }
                }
            }
            members.sort();
            classes.push(members);
        }
        let mut out: Vec<Vec<Subgroup>> =
            classes.into_iter().map(|c| c.into_iter().map(|i| subs[i].clone()).collect()).collect();
        out.sort_by(|a, b| a[0].cmp(&b[0]));
        Ok(out)
    }

    /// One representative (the canonically smallest) per conjugacy class.
    pub fn conjugacy_class_reps_of_subgroups(&self, conjugators: &Subgroup) -> Result<Vec<Subgroup>> {
        Ok(self
            .subgroup_conjugacy_classes(conjugators)?
            .into_iter()
            .map(|mut c| c.swap_remove(0))
            .collect())
    }
}

/// `p(J)`: the number of involutions of `N_G(J)/J` minus those of
/// `N_H(J)/J`.
///
/// An involution of `N_G(J)/J` lying outside `N_H(J)/J` is a coset `rJ`
/// with `r ∈ N_G(J) ∖ H` and `r² ∈ J`; such a coset is never `J` itself
/// since `r ∉ H`. So the difference is counted directly as those cosets,
/// without forming the quotients. Cosets of order exactly two are counted;
/// the identity coset is not an involution.
pub fn p_of_j(h: &Subgroup, j: &Subgroup) -> Result<usize> {
    let group = h.group().clone();
    if h.index() != 2 {
        return Err(Error::invalid(format!("H has index {} in G, expected 2", h.index())));
    }
    if !j.is_subgroup_of(h) {
        return Err(Error::invalid("p(J) requires J ≤ H"));
    }
    let ng = group.whole().normalizer(j)?;
    let mut seen = FixedBitSet::with_capacity(group.order());
    let mut count = 0;
    for &r in ng.members() {
        if h.contains(r) || seen.contains(r.index()) {
            continue;
        }
        for &x in j.members() {
            seen.insert(group.mul(r, x).index());
        }
        if j.contains(group.mul(r, r)) {
            count += 1;
        }
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::builders::{cyclic, dihedral};

    #[test]
    fn d6_lattice_has_sixteen_subgroups() {
        let g = dihedral(6).unwrap();
        assert_eq!(g.all_subgroups().unwrap().len(), 16);
        let h = g.subgroup_from_words("a2,b").unwrap();
        assert_eq!(h.all_subgroups().unwrap().len(), 6);
        let rot = g.subgroup_from_words("a").unwrap();
        assert_eq!(rot.all_subgroups().unwrap().len(), 4);
    }

    #[test]
    fn trivial_group_has_one_subgroup() {
        let g = cyclic(1).unwrap();
        assert_eq!(g.all_subgroups().unwrap().len(), 1);
    }

    #[test]
    fn index_two_subgroups_of_d6() {
        let g = dihedral(6).unwrap();
        let got = g.subgroups_of_index(2).unwrap();
        let mut want = vec![
            g.subgroup_from_words("a").unwrap(),
            g.subgroup_from_words("a2,b").unwrap(),
            g.subgroup_from_words("a2,ab").unwrap(),
        ];
        want.sort();
        assert_eq!(got, want);
        assert_eq!(g.subgroups_of_index(1).unwrap(), vec![g.whole()]);
        assert!(g.subgroups_of_index(5).unwrap().is_empty());
    }

    #[test]
    fn class_reps_for_hexagon_color_group() {
        let g = dihedral(6).unwrap();
        let h = g.subgroup_from_words("a2,b").unwrap();
        let reps = h.conjugacy_class_reps_of_subgroups(&g.whole()).unwrap();
        let names: Vec<String> = reps.iter().map(|s| s.display_name()).collect();
        assert_eq!(names, ["{e}", "<b>", "<a^2>", "<a^2,b>"]);
        let classes = h.subgroup_conjugacy_classes(&g.whole()).unwrap();
        // the three reflection subgroups fuse under conjugation by a
        assert_eq!(classes[1].len(), 3);
    }

    #[test]
    fn class_reps_reject_escaping_conjugation() {
        let g = dihedral(6).unwrap();
        let j = g.subgroup_from_words("b").unwrap();
        assert!(j.conjugacy_class_reps_of_subgroups(&g.whole()).is_err());
    }

    #[test]
    fn p_of_j_values() {
        let g = dihedral(6).unwrap();
        let h = g.subgroup_from_words("a2,b").unwrap();
        let sub = |w: &str| g.subgroup_from_words(w).unwrap();
        assert_eq!(p_of_j(&h, &sub("b")).unwrap(), 1);
        assert_eq!(p_of_j(&h, &g.trivial_subgroup()).unwrap(), 4);
        assert_eq!(p_of_j(&h, &h).unwrap(), 1);
        assert_eq!(p_of_j(&h, &sub("a2")).unwrap(), 2);
        assert!(p_of_j(&h, &sub("a")).is_err());
        assert!(p_of_j(&g.whole(), &sub("b")).is_err());
    }
}
