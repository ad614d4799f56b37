use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::builders::domain_walls;
use crate::group::{Elem, FiniteGroup, Subgroup};
use crate::partition::{color_action, ColoringSpec, GroupPartition, SpecKind};

/// Node budget for [`find_conjugating_automorphism`].
pub const SEARCH_BUDGET: u64 = 2_000_000;

/// An automorphism of a finite group, stored as its full element map.
#[derive(Clone)]
pub struct GroupAutomorphism {
    group: Arc<FiniteGroup>,
    images: Vec<Elem>,
}

impl std::fmt::Debug for GroupAutomorphism {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.describe())
    }
}

impl PartialEq for GroupAutomorphism {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.group, &other.group) && self.images == other.images
    }
}

impl GroupAutomorphism {
    pub fn identity(group: &Arc<FiniteGroup>) -> Self {
        GroupAutomorphism { group: group.clone(), images: group.elements().collect() }
    }

    /// `x ↦ gxg⁻¹`.
    pub fn inner(group: &Arc<FiniteGroup>, g: Elem) -> Self {
        GroupAutomorphism { group: group.clone(), images: group.elements().map(|x| group.conj(g, x)).collect() }
    }

    /// Extends generator images to the whole group and validates the result
    /// as a bijective homomorphism.
    pub fn from_generator_images(group: &Arc<FiniteGroup>, images: &[Elem]) -> Result<Self> {
        let map = extend(group, images)
            .ok_or_else(|| Error::invalid("generator images do not define a homomorphism"))?;
        let auto = GroupAutomorphism { group: group.clone(), images: map };
        auto.validate()?;
        Ok(auto)
    }

    /// Parses `a->a^5,b->ab` (also `a=a5`); unlisted generators are fixed.
    pub fn parse(group: &Arc<FiniteGroup>, text: &str) -> Result<Self> {
        let mut images: Vec<Elem> = group.generators().iter().map(|g| g.elem).collect();
        for part in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (lhs, rhs) = part
                .split_once("->")
                .or_else(|| part.split_once('='))
                .ok_or_else(|| Error::invalid(format!("bad automorphism entry \"{part}\"")))?;
            let idx = group
                .generators()
                .iter()
                .position(|g| g.name == lhs.trim())
                .ok_or_else(|| Error::invalid(format!("unknown generator \"{}\"", lhs.trim())))?;
            images[idx] = group.parse_element(rhs)?;
        }
        Self::from_generator_images(group, &images)
    }

    fn validate(&self) -> Result<()> {
        let g = &self.group;
        let mut hit = vec![false; g.order()];
        for &e in &self.images {
            if std::mem::replace(&mut hit[e.index()], true) {
                return Err(Error::invalid("map is not a bijection"));
            }
        }
        for a in g.elements() {
            for b in g.elements() {
                if self.apply(g.mul(a, b)) != g.mul(self.apply(a), self.apply(b)) {
                    return Err(Error::invalid(format!(
                        "map does not preserve the product {}·{}",
                        g.label(a),
                        g.label(b)
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    #[inline]
    pub fn apply(&self, e: Elem) -> Elem {
        self.images[e.index()]
    }

    /// The element permutation `g ↦ α(g)`, in canonical order.
    pub fn images(&self) -> &[Elem] {
        &self.images
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![Elem::IDENTITY; self.images.len()];
        for (i, &e) in self.images.iter().enumerate() {
            inv[e.index()] = Elem::from_index(i);
        }
        GroupAutomorphism { group: self.group.clone(), images: inv }
    }

    pub fn compose(&self, then: &GroupAutomorphism) -> Self {
        GroupAutomorphism {
            group: self.group.clone(),
            images: self.images.iter().map(|&e| then.apply(e)).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, e)| e.index() == i)
    }

    pub fn is_involution(&self) -> bool {
        self.compose(self).is_identity()
    }

    pub fn apply_subgroup(&self, s: &Subgroup) -> Subgroup {
        self.group
            .subgroup_generated(&s.members().iter().map(|&e| self.apply(e)).collect::<Vec<_>>())
            .expect("images lie in the group")
    }

    pub fn apply_partition(&self, p: &GroupPartition) -> GroupPartition {
        p.map_elements(|e| self.apply(e)).expect("automorphisms are bijections")
    }

    /// `a->a^5,b->ab`.
    pub fn describe(&self) -> String {
        self.group
            .generators()
            .iter()
            .map(|g| format!("{}->{}", g.name, self.group.label(self.apply(g.elem))))
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Breadth-first extension of generator images; `None` when two words for
/// the same element get different images.
fn extend(group: &FiniteGroup, images: &[Elem]) -> Option<Vec<Elem>> {
    let gens = group.generators();
    if images.len() != gens.len() {
        return None;
    }
    let mut map = vec![None; group.order()];
    map[0] = Some(Elem::IDENTITY);
    let mut queue = vec![Elem::IDENTITY];
    let mut cursor = 0;
    while cursor < queue.len() {
        let x = queue[cursor];
        cursor += 1;
        let fx = map[x.index()].expect("queued elements are mapped");
        for (g, &img) in gens.iter().zip(images) {
            let y = group.mul(x, g.elem);
            let fy = group.mul(fx, img);
            match map[y.index()] {
                None => {
                    map[y.index()] = Some(fy);
                    queue.push(y);
                }
                Some(prev) if prev != fy => return None,
                Some(_) => {}
            }
        }
    }
    map.into_iter().collect()
}

/// The spec with every subgroup and coset element replaced by its image.
pub fn conjugate_spec(spec: &ColoringSpec, alpha: &GroupAutomorphism) -> Result<ColoringSpec> {
    if !Arc::ptr_eq(spec.group(), alpha.group()) {
        return Err(Error::invalid("automorphism acts on a different group"));
    }
    let h = alpha.apply_subgroup(spec.h());
    let out = match spec.kind() {
        SpecKind::TypeI { j, l, r } => {
            ColoringSpec::type1(&h, &alpha.apply_subgroup(j), alpha.apply(*l), alpha.apply(*r))?
        }
        SpecKind::TypeII { j1, j2, y } => {
            ColoringSpec::type2(&h, &alpha.apply_subgroup(j1), &alpha.apply_subgroup(j2), alpha.apply(*y))?
        }
    };
    debug_assert_eq!(*out.partition(), alpha.apply_partition(spec.partition()));
    Ok(out)
}

/// Result of comparing the color actions of `H` on `P` and of `α(H)` on
/// `α(P)`.
#[derive(Clone, Debug)]
pub struct ActionEquivalence {
    pub holds: bool,
    /// `bijection[i]` is the block of `P'` matched with block `i` of `P`.
    pub bijection: Vec<usize>,
}

/// Checks that `f(B) = α(B)` intertwines the two actions:
/// `α(g)·f(B) = f(g·B)` for all `g ∈ H`.
pub fn action_equivalence_check(
    h: &Subgroup,
    p: &GroupPartition,
    h_prime: &Subgroup,
    p_prime: &GroupPartition,
    alpha: &GroupAutomorphism,
) -> Result<ActionEquivalence> {
    if alpha.apply_subgroup(h) != *h_prime {
        return Err(Error::invalid("H' is not the image of H"));
    }
    if alpha.apply_partition(p) != *p_prime {
        return Err(Error::invalid("P' is not the image of P"));
    }
    let bijection: Vec<usize> = p.blocks().iter().map(|b| p_prime.block_of(alpha.apply(b[0]))).collect();
    let act = color_action(h, p)?;
    let act_prime = color_action(h_prime, p_prime)?;
    let holds = act.permutations.iter().all(|(g, perm)| {
        let perm_prime = act_prime.permutation(alpha.apply(*g)).expect("α(g) lies in H'");
        (0..perm.len()).all(|i| perm_prime[bijection[i]] == bijection[perm[i]])
    });
    Ok(ActionEquivalence { holds, bijection })
}

/// Backtracking search for an automorphism of `G` carrying `H` onto `H'`.
///
/// Generators are assigned in order; candidate images run through the
/// elements of matching order in canonical order, and a partial assignment
/// is pruned as soon as a defining relator with all its generators assigned
/// fails. Candidates are ranked in tiers: involutions permuting the walls of
/// the base tile (what a reflection fixing that tile induces), then any map
/// permuting the walls, then any automorphism at all.
pub fn find_conjugating_automorphism(
    group: &Arc<FiniteGroup>,
    h: &Subgroup,
    h_prime: &Subgroup,
) -> Result<Option<GroupAutomorphism>> {
    if h.index() != 2 || h_prime.index() != 2 {
        return Err(Error::invalid("both subgroups must have index 2"));
    }
    if !Arc::ptr_eq(h.group(), group) || !Arc::ptr_eq(h_prime.group(), group) {
        return Err(Error::invalid("subgroups belong to a different group"));
    }
    let walls = domain_walls(group);
    let mut budget = SEARCH_BUDGET;
    let tiers: &[(bool, bool)] = if walls.is_empty() { &[(true, false), (false, false)] } else { &[(true, true), (false, true), (false, false)] };
    for &(involution, keep_walls) in tiers {
        let filter = Filter { involution, walls: if keep_walls { Some(&walls[..]) } else { None } };
        if let Some(found) = search(group, h, h_prime, &filter, &mut budget)? {
            return Ok(Some(found));
        }
    }
    Ok(None)
}

struct Filter<'a> {
    involution: bool,
    walls: Option<&'a [Elem]>,
}

impl Filter<'_> {
    fn accepts(&self, auto: &GroupAutomorphism) -> bool {
        if self.involution && !auto.is_involution() {
            return false;
        }
        match self.walls {
            Some(walls) => {
                let mut image: Vec<Elem> = walls.iter().map(|&w| auto.apply(w)).collect();
                image.sort();
                image == walls
            }
            None => true,
        }
    }
}

fn search(
    group: &Arc<FiniteGroup>,
    h: &Subgroup,
    h_prime: &Subgroup,
    filter: &Filter<'_>,
    budget: &mut u64,
) -> Result<Option<GroupAutomorphism>> {
    let gens: Vec<Elem> = group.generators().iter().map(|g| g.elem).collect();
    let candidates: Vec<Vec<Elem>> = gens
        .iter()
        .map(|&g| {
            let ord = group.element_order(g);
            // generators inside H must land in H', the others outside it
            group
                .elements()
                .filter(|&e| group.element_order(e) == ord && h_prime.contains(e) == h.contains(g))
                .collect()
        })
        .collect();
    let mut checks: Vec<Vec<&crate::word::Word>> = vec![Vec::new(); gens.len().max(1)];
    for r in group.relators() {
        if let Some(m) = r.max_generator() {
            checks[m].push(r);
        }
    }
    let mut chosen: Vec<Elem> = Vec::with_capacity(gens.len());
    recurse(group, h, h_prime, &candidates, &checks, filter, &mut chosen, budget)
}

#[allow(clippy::too_many_arguments)]
fn recurse(
    group: &Arc<FiniteGroup>,
    h: &Subgroup,
    h_prime: &Subgroup,
    candidates: &[Vec<Elem>],
    checks: &[Vec<&crate::word::Word>],
    filter: &Filter<'_>,
    chosen: &mut Vec<Elem>,
    budget: &mut u64,
) -> Result<Option<GroupAutomorphism>> {
    let depth = chosen.len();
    if depth == candidates.len() {
        let Some(map) = extend(group, chosen) else {
            return Ok(None);
        };
        let auto = GroupAutomorphism { group: group.clone(), images: map };
        if !filter.accepts(&auto) || auto.validate().is_err() {
            return Ok(None);
        }
        return Ok((auto.apply_subgroup(h) == *h_prime).then_some(auto));
    }
    for &c in &candidates[depth] {
        if *budget == 0 {
            return Err(Error::ResourceLimit {
                what: "automorphism search nodes".into(),
                bound: SEARCH_BUDGET,
            });
        }
        *budget -= 1;
        chosen.push(c);
        let ok = checks[depth].iter().all(|r| {
            r.syllables()
                .iter()
                .fold(Elem::IDENTITY, |acc, &(g, k)| group.mul(acc, group.pow(chosen[g], k)))
                == Elem::IDENTITY
        });
        if ok {
            if let Some(found) =
                recurse(group, h, h_prime, candidates, checks, filter, chosen, budget)?
            {
                return Ok(Some(found));
            }
        }
        chosen.pop();
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::builders::{dihedral, p4m_quotient};

    #[test]
    fn hexagon_alpha_is_found_first() {
        let g = dihedral(6).unwrap();
        let h = g.subgroup_from_words("a2,b").unwrap();
        let hp = g.subgroup_from_words("a2,ab").unwrap();
        let alpha = find_conjugating_automorphism(&g, &h, &hp).unwrap().unwrap();
        assert_eq!(alpha.describe(), "a->a^5,b->ab");
        assert!(alpha.is_involution());
        assert_eq!(alpha, GroupAutomorphism::parse(&g, "a->a5,b->ab").unwrap());
    }

    #[test]
    fn identity_qualifies_for_equal_subgroups() {
        let g = dihedral(6).unwrap();
        let h = g.subgroup_from_words("a2,b").unwrap();
        let alpha = find_conjugating_automorphism(&g, &h, &h).unwrap().unwrap();
        assert_eq!(alpha.apply_subgroup(&h), h);
    }

    #[test]
    fn rotation_subgroup_is_characteristic() {
        let g = dihedral(6).unwrap();
        let rot = g.subgroup_from_words("a").unwrap();
        let h = g.subgroup_from_words("a2,b").unwrap();
        assert!(find_conjugating_automorphism(&g, &rot, &h).unwrap().is_none());
    }

    #[test]
    fn bad_generator_images_are_rejected() {
        let g = dihedral(6).unwrap();
        assert!(GroupAutomorphism::parse(&g, "a->a2").is_err());
        assert!(GroupAutomorphism::parse(&g, "b->a").is_err());
        assert!(GroupAutomorphism::parse(&g, "z->a").is_err());
    }

    #[test]
    fn p4m_subgroups_are_swapped() {
        let g = p4m_quotient(2).unwrap();
        let h = g.subgroup_from_words("a,ab,xy,x^-1y").unwrap();
        let hp = g.subgroup_from_words("xa,ab,xy,x^-1y").unwrap();
        let alpha = find_conjugating_automorphism(&g, &h, &hp).unwrap().unwrap();
        assert_eq!(alpha.apply_subgroup(&h), hp);
        // the reflection in the line x + y = 1/2
        let diag = GroupAutomorphism::parse(&g, "a->ya^3,b->xa^2b,x->Y,y->X").unwrap();
        assert!(diag.is_involution());
        assert_eq!(diag.apply_subgroup(&h), hp);
    }

    #[test]
    fn inner_automorphisms_and_inverse() {
        let g = dihedral(6).unwrap();
        let a = g.parse_element("a").unwrap();
        let inner = GroupAutomorphism::inner(&g, a);
        assert!(inner.compose(&inner.inverse()).is_identity());
        assert!(GroupAutomorphism::identity(&g).is_identity());
    }
}
