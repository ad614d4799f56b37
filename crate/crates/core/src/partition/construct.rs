use crate::error::{Error, Result};
use crate::group::{Elem, Subgroup};

use super::GroupPartition;

pub(crate) fn check_color_group(h: &Subgroup) -> Result<()> {
    if h.index() != 2 {
        return Err(Error::invalid(format!("H has index {} in G, expected 2", h.index())));
    }
    Ok(())
}

pub(crate) fn check_inside(j: &Subgroup, h: &Subgroup, name: &str) -> Result<()> {
    if !j.is_subgroup_of(h) {
        return Err(Error::invalid(format!("{name} = {} is not contained in H = {}", j, h)));
    }
    Ok(())
}

pub(crate) fn check_outside(y: Elem, h: &Subgroup, name: &str) -> Result<()> {
    if y.index() >= h.group().order() {
        return Err(Error::invalid(format!("unknown element index {}", y.index())));
    }
    if h.contains(y) {
        return Err(Error::invalid(format!("{name} = {} lies in H", h.group().label(y))));
    }
    Ok(())
}

/// Left cosets `xK` for `x` running over `reps`, each premultiplied by
/// `prefix` and postmultiplied by every element of `tail`.
fn coset_blocks(k: &Subgroup, reps: &[Elem], prefix: Elem, tail: &[Elem]) -> Vec<Vec<Elem>> {
    let g = k.group();
    reps.iter()
        .map(|&x| {
            let px = g.mul(prefix, x);
            tail.iter()
                .flat_map(|&t| k.members().iter().map(move |&m| g.mul(g.mul(px, m), t)))
                .collect()
        })
        .collect()
}

/// `{h(J ∪ Jr) : h ∈ H}`: `[H:J]` blocks of size `2|J|`.
pub fn type1_partition(h: &Subgroup, j: &Subgroup, r: Elem) -> Result<GroupPartition> {
    check_color_group(h)?;
    check_inside(j, h, "J")?;
    check_outside(r, h, "r")?;
    let reps = h.left_coset_reps(j)?;
    let blocks = coset_blocks(j, &reps, Elem::IDENTITY, &[Elem::IDENTITY, r]);
    GroupPartition::from_blocks(h.group().clone(), blocks)
}

/// `{hJ₁ : h ∈ H} ∪ y{hJ₂ : h ∈ H}`.
pub fn type2_partition(h: &Subgroup, j1: &Subgroup, j2: &Subgroup, y: Elem) -> Result<GroupPartition> {
    check_color_group(h)?;
    check_inside(j1, h, "J1")?;
    check_inside(j2, h, "J2")?;
    check_outside(y, h, "y")?;
    let mut blocks = coset_blocks(j1, &h.left_coset_reps(j1)?, Elem::IDENTITY, &[Elem::IDENTITY]);
    blocks.extend(coset_blocks(j2, &h.left_coset_reps(j2)?, y, &[Elem::IDENTITY]));
    GroupPartition::from_blocks(h.group().clone(), blocks)
}

/// `{hJ₁ : h ∈ H} ∪ {hJ₂y : h ∈ H}`, the form with the coset
/// representative on the right.
pub fn type2_unnormalized_partition(
    h: &Subgroup,
    j1: &Subgroup,
    j2: &Subgroup,
    y: Elem,
) -> Result<GroupPartition> {
    check_color_group(h)?;
    check_inside(j1, h, "J1")?;
    check_inside(j2, h, "J2")?;
    check_outside(y, h, "y")?;
    let mut blocks = coset_blocks(j1, &h.left_coset_reps(j1)?, Elem::IDENTITY, &[Elem::IDENTITY]);
    blocks.extend(coset_blocks(j2, &h.left_coset_reps(j2)?, Elem::IDENTITY, &[y]));
    GroupPartition::from_blocks(h.group().clone(), blocks)
}

/// `{hJᵢYᵢ : i ∈ I, h ∈ H}` for arbitrary parts. The union of the `Yᵢ` must
/// be a complete set of right coset representatives of `H`; blocks that
/// overlap without coinciding are reported as `NotAPartition`.
pub fn general_partition(h: &Subgroup, parts: &[(Subgroup, Vec<Elem>)]) -> Result<GroupPartition> {
    check_color_group(h)?;
    let g = h.group();
    let mut reps: Vec<Elem> = Vec::new();
    for (j, ys) in parts {
        check_inside(j, h, "J")?;
        if ys.is_empty() {
            return Err(Error::invalid("empty coset representative set"));
        }
        reps.extend(ys.iter().copied());
    }
    let inside = reps.iter().filter(|&&y| h.contains(y)).count();
    if reps.len() != 2 || inside != 1 {
        return Err(Error::NotAPartition(format!(
            "the representatives {{{}}} are not one element of H and one outside it",
            reps.iter().map(|&y| g.label(y)).collect::<Vec<_>>().join(",")
        )));
    }
    let mut blocks: Vec<Vec<Elem>> = Vec::new();
    for (j, ys) in parts {
        for &x in h.members() {
            let mut b: Vec<Elem> =
                ys.iter().flat_map(|&y| j.members().iter().map(move |&m| g.mul(g.mul(x, m), y))).collect();
            b.sort();
            b.dedup();
            if !blocks.contains(&b) {
                blocks.push(b);
            }
        }
    }
    GroupPartition::from_blocks(g.clone(), blocks)
}
