use serde::Serialize;

use crate::enumerate::GroupAutomorphism;
use crate::error::{Error, Result};
use crate::group::Elem;

use super::{Palette, TileMap};

/// Moves colors along `g(D) ↦ α(g)(D)`: the new color of the domain of
/// `images[g]` is the old color of the domain of `g`. `images` must fix
/// `e` (the base domain) and be a bijection.
pub fn transfer_coloring(assignment: &[usize], images: &[Elem]) -> Result<Vec<usize>> {
    if assignment.len() != images.len() {
        return Err(Error::invalid(format!(
            "coloring covers {} domains but the permutation has {}",
            assignment.len(),
            images.len()
        )));
    }
    if images.first() != Some(&Elem::IDENTITY) {
        return Err(Error::invalid("the map does not stabilize the base domain"));
    }
    let mut out = vec![usize::MAX; assignment.len()];
    for (g, &target) in images.iter().enumerate() {
        let slot = out
            .get_mut(target.index())
            .ok_or_else(|| Error::invalid("domain permutation leaves the group"))?;
        if *slot != usize::MAX {
            return Err(Error::invalid("domain permutation is not a bijection"));
        }
        *slot = assignment[g];
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Table2Row {
    pub domain: String,
    pub original: String,
    pub image: String,
    pub new: String,
}

/// For each domain in display order: its color, its image under `α`, and
/// the color it receives after the transfer.
pub fn table2_rows(map: &TileMap, assignment: &[usize], alpha: &GroupAutomorphism, palette: &Palette) -> Result<Vec<Table2Row>> {
    let group = map.group();
    if !std::sync::Arc::ptr_eq(group, alpha.group()) {
        return Err(Error::invalid("automorphism and tile map belong to different groups"));
    }
    let new = transfer_coloring(assignment, alpha.images())?;
    Ok(map
        .display_order()
        .into_iter()
        .map(|g| Table2Row {
            domain: group.label(g).to_string(),
            original: palette.name(assignment[g.index()]).to_string(),
            image: group.label(alpha.apply(g)).to_string(),
            new: palette.name(new[g.index()]).to_string(),
        })
        .collect())
}
