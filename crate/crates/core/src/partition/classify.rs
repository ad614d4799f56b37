use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{Elem, Subgroup};

use super::construct::{check_color_group, check_inside, check_outside};
use super::GroupPartition;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Perfect,
    Semiperfect,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Perfect => "perfect",
            Verdict::Semiperfect => "semiperfect",
        })
    }
}

/// The two conditions deciding a Type I verdict, kept separately so a
/// caller can report which one failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Type1Analysis {
    /// `rJ = Jr`.
    pub normalizes: bool,
    /// `r² ∈ J`.
    pub square_in_j: bool,
}

impl Type1Analysis {
    pub fn verdict(&self) -> Verdict {
        if self.normalizes && self.square_in_j {
            Verdict::Perfect
        } else {
            Verdict::Semiperfect
        }
    }

    pub fn reason(&self) -> &'static str {
        match (self.normalizes, self.square_in_j) {
            (true, true) => "rJ = Jr and r^2 in J",
            (false, true) => "rJ != Jr",
            (true, false) => "r^2 not in J",
            (false, false) => "rJ != Jr and r^2 not in J",
        }
    }
}

pub fn type1_analysis(j: &Subgroup, r: Elem, h: &Subgroup) -> Result<Type1Analysis> {
    check_color_group(h)?;
    check_inside(j, h, "J")?;
    check_outside(r, h, "r")?;
    let g = h.group();
    Ok(Type1Analysis { normalizes: j.is_normalized_by(r), square_in_j: j.contains(g.mul(r, r)) })
}

/// Perfect iff `rJ = Jr` and `r² ∈ J`.
pub fn classify_type1(j: &Subgroup, r: Elem, h: &Subgroup) -> Result<Verdict> {
    Ok(type1_analysis(j, r, h)?.verdict())
}

/// Verdict for the form `{hJ₁} ∪ y{hJ₂}`: perfect iff `J₁ = J₂`.
pub fn classify_type2(j1: &Subgroup, j2: &Subgroup) -> Result<Verdict> {
    j1.check_ambient(j2)?;
    Ok(if j1 == j2 { Verdict::Perfect } else { Verdict::Semiperfect })
}

/// Verdict for the form `{hJ₁} ∪ {hJ₂y}`: perfect iff `J₂ = y⁻¹J₁y`.
pub fn classify_type2_unnormalized(j1: &Subgroup, j2: &Subgroup, y: Elem, h: &Subgroup) -> Result<Verdict> {
    check_color_group(h)?;
    check_inside(j1, h, "J1")?;
    check_inside(j2, h, "J2")?;
    check_outside(y, h, "y")?;
    let yinv = h.group().inv(y);
    Ok(if j1.conjugate(yinv) == *j2 { Verdict::Perfect } else { Verdict::Semiperfect })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Classification {
    pub verdict: Verdict,
    pub num_colors: usize,
    pub num_color_orbits: usize,
    pub kernel_order: usize,
    pub color_perm_group_order: usize,
}

/// How `H` permutes the blocks of a partition it stabilizes.
#[derive(Clone, Debug)]
pub struct ColorAction {
    /// `(h, π)` for every `h ∈ H` in canonical order; `π[i]` is the block
    /// that `h` sends block `i` to.
    pub permutations: Vec<(Elem, Vec<usize>)>,
    pub kernel: Subgroup,
    /// Orbits of `H` on block indices, each sorted, ordered by first block.
    pub orbits: Vec<Vec<usize>>,
    pub classification: Classification,
}

impl ColorAction {
    pub fn permutation(&self, h: Elem) -> Option<&[usize]> {
        self.permutations.iter().find(|(e, _)| *e == h).map(|(_, p)| p.as_slice())
    }
}

/// Induced action of `H` on the blocks of `P`. The verdict comes from the
/// stabilizer oracle: perfect when all of `G` fixes `P`.
pub fn color_action(h: &Subgroup, p: &GroupPartition) -> Result<ColorAction> {
    if !std::sync::Arc::ptr_eq(h.group(), p.group()) {
        return Err(Error::invalid("H and the partition belong to different groups"));
    }
    let group = h.group();
    let mut permutations = Vec::with_capacity(h.order());
    let mut kernel = Vec::new();
    for &x in h.members() {
        let perm = p.induced_permutation(x).ok_or_else(|| {
            Error::invalid(format!("{} does not stabilize the partition", group.label(x)))
        })?;
        if perm.iter().enumerate().all(|(i, &t)| i == t) {
            kernel.push(x);
        }
        permutations.push((x, perm));
    }

    let n = p.num_blocks();
    let mut orbit_of = vec![usize::MAX; n];
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    for start in 0..n {
        if orbit_of[start] != usize::MAX {
            continue;
        }
        let mut orbit: Vec<usize> = permutations.iter().map(|(_, perm)| perm[start]).collect();
        orbit.sort();
        orbit.dedup();
        for &b in &orbit {
            orbit_of[b] = orbits.len();
        }
        orbits.push(orbit);
    }

    let outside_fixes = group.elements().filter(|&x| !h.contains(x)).any(|x| p.is_stabilized_by(x));
    let whole_fixes = h.is_whole() || outside_fixes;
    let verdict = if whole_fixes { Verdict::Perfect } else { Verdict::Semiperfect };
    let kernel = Subgroup::from_elements(group.clone(), kernel);
    let classification = Classification {
        verdict,
        num_colors: n,
        num_color_orbits: orbits.len(),
        kernel_order: kernel.order(),
        color_perm_group_order: h.order() / kernel.order(),
    };
    Ok(ColorAction { permutations, kernel, orbits, classification })
}

/// Cycle notation with 1-based points renamed through `numbering`
/// (`numbering[block]` is the printed color number), e.g. `(124)`. Fixed
/// points are omitted; the identity prints as `(1)`. `mark` is appended to
/// every point, so `"'"` gives `(1'2'4')`.
pub fn cycle_notation(perm: &[usize], numbering: &[usize], mark: &str) -> String {
    let n = perm.len();
    // conjugate into color-number space
    let mut by_number = vec![0usize; n + 1];
    for (block, &target) in perm.iter().enumerate() {
        by_number[numbering[block]] = numbering[target];
    }
    let mut seen = vec![false; n + 1];
    let mut out = String::new();
    for start in 1..=n {
        if seen[start] || by_number[start] == start {
            continue;
        }
        out.push('(');
        let mut c = start;
        while !seen[c] {
            seen[c] = true;
            out.push_str(&format!("{c}{mark}"));
            c = by_number[c];
        }
        out.push(')');
    }
    if out.is_empty() {
        format!("(1{mark})")
    } else {
        out
    }
}
