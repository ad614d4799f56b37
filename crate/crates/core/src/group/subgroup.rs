use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use fixedbitset::FixedBitSet;

use super::{Elem, FiniteGroup};
use crate::error::{Error, Result};

/// A subgroup of a [`FiniteGroup`], stored as a membership bitset plus the
/// sorted member list.
///
/// Subgroups compare by order first and then by member list, which is the
/// canonical order used for every tie-break in the crate.
#[derive(Clone)]
pub struct Subgroup {
    group: Arc<FiniteGroup>,
    bits: FixedBitSet,
    members: Vec<Elem>,
}

/// Closure of `gens` under multiplication, as a bitset over the group.
pub(crate) fn closure(group: &FiniteGroup, gens: &[Elem]) -> FixedBitSet {
    let mut bits = FixedBitSet::with_capacity(group.order());
    bits.insert(0);
    let gens: Vec<Elem> = gens.iter().copied().filter(|g| *g != Elem::IDENTITY).collect();
    let mut stack = vec![Elem::IDENTITY];
    while let Some(m) = stack.pop() {
        for &g in &gens {
            let p = group.mul(m, g);
            if !bits.put(p.index()) {
                stack.push(p);
            }
        }
    }
    bits
}

impl Subgroup {
    pub(crate) fn from_bits(group: Arc<FiniteGroup>, bits: FixedBitSet) -> Self {
        let members = bits.ones().map(Elem::from_index).collect();
        Subgroup { group, bits, members }
    }

    /// Wraps a set already known to be closed.
    pub(crate) fn from_elements(group: Arc<FiniteGroup>, elems: impl IntoIterator<Item = Elem>) -> Self {
        let mut bits = FixedBitSet::with_capacity(group.order());
        for e in elems {
            bits.insert(e.index());
        }
        Self::from_bits(group, bits)
    }

    pub(crate) fn generated(group: Arc<FiniteGroup>, gens: &[Elem]) -> Self {
        let bits = closure(&group, gens);
        Self::from_bits(group, bits)
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> &[Elem] {
        &self.members
    }

    pub(crate) fn bits(&self) -> &FixedBitSet {
        &self.bits
    }

    #[inline]
    pub fn contains(&self, e: Elem) -> bool {
        self.bits.contains(e.index())
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.order() == self.group.order()
    }

    pub fn same_ambient(&self, other: &Subgroup) -> bool {
        Arc::ptr_eq(&self.group, &other.group)
    }

    pub(crate) fn check_ambient(&self, other: &Subgroup) -> Result<()> {
        if self.same_ambient(other) {
            Ok(())
        } else {
            Err(Error::invalid("subgroups belong to different ambient groups"))
        }
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.same_ambient(other) && self.bits.is_subset(&other.bits)
    }

    /// Index in the ambient group.
    pub fn index(&self) -> usize {
        self.group.order() / self.order()
    }

    /// `[other : self]`; requires `self ≤ other`.
    pub fn index_in(&self, other: &Subgroup) -> Result<usize> {
        if !self.is_subgroup_of(other) {
            return Err(Error::invalid("index_in requires a subgroup of the given group"));
        }
        Ok(other.order() / self.order())
    }

    /// `g S g⁻¹`.
    pub fn conjugate(&self, g: Elem) -> Subgroup {
        let group = &self.group;
        Subgroup::from_elements(group.clone(), self.members.iter().map(|&m| group.conj(g, m)))
    }

    /// Whether `g S g⁻¹ = S`.
    pub fn is_normalized_by(&self, g: Elem) -> bool {
        self.members.iter().all(|&m| self.contains(self.group.conj(g, m)))
    }

    /// `{w ∈ self : w J w⁻¹ = J}`; `j` need not lie inside `self`.
    pub fn normalizer(&self, j: &Subgroup) -> Result<Subgroup> {
        self.check_ambient(j)?;
        let gens = j.generators();
        let elems = self.members.iter().copied().filter(|&w| {
            gens.iter().all(|&m| j.contains(self.group.conj(w, m)))
        });
        Ok(Subgroup::from_elements(self.group.clone(), elems.collect::<Vec<_>>()))
    }

    pub fn intersection(&self, other: &Subgroup) -> Result<Subgroup> {
        self.check_ambient(other)?;
        let mut bits = self.bits.clone();
        bits.intersect_with(&other.bits);
        Ok(Subgroup::from_bits(self.group.clone(), bits))
    }

    /// Smallest subgroup containing both.
    pub fn join(&self, other: &Subgroup) -> Result<Subgroup> {
        self.check_ambient(other)?;
        let mut gens = self.generators();
        gens.extend(other.generators());
        Ok(Subgroup::generated(self.group.clone(), &gens))
    }

    /// Canonical smallest element of each left coset `hK` of `k` in `self`,
    /// in increasing order.
    pub fn left_coset_reps(&self, k: &Subgroup) -> Result<Vec<Elem>> {
        if !k.is_subgroup_of(self) {
            return Err(Error::invalid("left_coset_reps requires K ≤ H"));
        }
        let mut seen = FixedBitSet::with_capacity(self.group.order());
        let mut reps = Vec::with_capacity(self.order() / k.order());
        for &h in &self.members {
            if seen.contains(h.index()) {
                continue;
            }
            reps.push(h);
            for &x in &k.members {
                seen.insert(self.group.mul(h, x).index());
            }
        }
        Ok(reps)
    }

    /// Canonical smallest element of each right coset `Jg` contained in
    /// `G ∖ H`, where `self = J ≤ H` and `[G:H] = 2`.
    pub fn right_coset_reps_outside(&self, h: &Subgroup) -> Result<Vec<Elem>> {
        if !self.is_subgroup_of(h) {
            return Err(Error::invalid("right_coset_reps_outside requires J ≤ H"));
        }
        if h.index() != 2 {
            return Err(Error::invalid(format!("H has index {} in G, expected 2", h.index())));
        }
        let group = &self.group;
        let mut seen = FixedBitSet::with_capacity(group.order());
        let mut reps = Vec::new();
        for g in group.elements().filter(|&g| !h.contains(g)) {
            if seen.contains(g.index()) {
                continue;
            }
            reps.push(g);
            for &j in &self.members {
                seen.insert(group.mul(j, g).index());
            }
        }
        Ok(reps)
    }

    /// Canonical element of the right coset `S g`.
    pub fn right_coset_min(&self, g: Elem) -> Elem {
        self.members.iter().map(|&j| self.group.mul(j, g)).min().expect("subgroup is nonempty")
    }

    /// Canonical element of the left coset `g S`.
    pub fn left_coset_min(&self, g: Elem) -> Elem {
        self.members.iter().map(|&j| self.group.mul(g, j)).min().expect("subgroup is nonempty")
    }

    /// A small generating set chosen greedily in canonical order: each member
    /// not already generated is added.
    pub fn generators(&self) -> Vec<Elem> {
        let mut gens = Vec::new();
        let mut current = FixedBitSet::with_capacity(self.group.order());
        current.insert(0);
        for &m in &self.members {
            if !current.contains(m.index()) {
                gens.push(m);
                current = closure(&self.group, &gens);
                if current.count_ones(..) == self.order() {
                    break;
                }
            }
        }
        gens
    }

    pub fn labels(&self) -> Vec<String> {
        self.members.iter().map(|&m| self.group.label(m).to_string()).collect()
    }

    /// `<a^2,b>` style name; `{e}` for the trivial subgroup.
    pub fn display_name(&self) -> String {
        if self.is_trivial() {
            return "{e}".to_string();
        }
        let gens: Vec<&str> = self.generators().iter().map(|&g| self.group.label(g)).collect();
        format!("<{}>", gens.join(","))
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.bits == other.bits
    }
}

impl Eq for Subgroup {}

impl Hash for Subgroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.members.hash(state);
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order().cmp(&other.order()).then_with(|| self.members.cmp(&other.members))
    }
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_name())
    }
}

impl fmt::Display for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_name())
    }
}

#[cfg(test)]
mod tests {
    use crate::group::builders::{dihedral, p4m_quotient};

    #[test]
    fn generated_subgroups_of_d6() {
        let g = dihedral(6).unwrap();
        let h = g.subgroup_from_words("a2,b").unwrap();
        assert_eq!(h.order(), 6);
        assert_eq!(h.index(), 2);
        assert_eq!(h.display_name(), "<a^2,b>");
        assert!(g.subgroup_from_words("").unwrap().is_trivial());
    }

    #[test]
    fn generation_is_idempotent() {
        let g = dihedral(6).unwrap();
        let h = g.subgroup_from_words("a2,ab").unwrap();
        let again = g.subgroup_generated(h.members()).unwrap();
        assert_eq!(h, again);
    }

    #[test]
    fn unknown_element_is_rejected() {
        let g = dihedral(6).unwrap();
        assert!(g.subgroup_from_words("a2,z").is_err());
        assert!(g.subgroup_generated(&[crate::group::Elem::from_index(99)]).is_err());
    }

    #[test]
    fn pmm_subgroup_of_p4m_quotient() {
        let g = p4m_quotient(2).unwrap();
        let h = g.subgroup_from_words("b,a2b,x,y").unwrap();
        assert_eq!(h.index(), 2);
    }

    #[test]
    fn normalizers_in_d6() {
        let g = dihedral(6).unwrap();
        let whole = g.whole();
        let h = g.subgroup_from_words("a2,b").unwrap();
        let j = g.subgroup_from_words("b").unwrap();
        assert_eq!(whole.normalizer(&j).unwrap(), g.subgroup_from_words("a3,b").unwrap());
        assert_eq!(h.normalizer(&j).unwrap(), j);
        let rot = g.subgroup_from_words("a2").unwrap();
        assert_eq!(whole.normalizer(&rot).unwrap(), whole);
        assert_eq!(h.normalizer(&rot).unwrap(), h);
    }

    #[test]
    fn normalizer_rejects_foreign_subgroup() {
        let g = dihedral(6).unwrap();
        let other = dihedral(6).unwrap();
        let j = other.subgroup_from_words("b").unwrap();
        assert!(g.whole().normalizer(&j).is_err());
    }

    #[test]
    fn coset_representatives_match_table() {
        let g = dihedral(6).unwrap();
        let h = g.subgroup_from_words("a2,b").unwrap();
        let j = g.subgroup_from_words("b").unwrap();
        let label = |v: Vec<crate::group::Elem>| v.iter().map(|&e| g.label(e).to_string()).collect::<Vec<_>>();
        let nh = h.normalizer(&j).unwrap();
        assert_eq!(label(h.left_coset_reps(&nh).unwrap()), ["e", "a^2", "a^4"]);
        assert_eq!(label(h.left_coset_reps(&h).unwrap()), ["e"]);
        assert_eq!(label(j.right_coset_reps_outside(&h).unwrap()), ["a", "a^3", "a^5"]);
        assert_eq!(label(h.right_coset_reps_outside(&h).unwrap()), ["a"]);
        let triv = g.trivial_subgroup();
        assert_eq!(triv.right_coset_reps_outside(&h).unwrap().len(), 6);
        // K not inside H
        let rot = g.subgroup_from_words("a").unwrap();
        assert!(h.left_coset_reps(&rot).is_err());
        // H of index 1
        assert!(j.right_coset_reps_outside(&g.whole()).is_err());
    }
}
